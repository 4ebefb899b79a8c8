//! Finite-dimensional graded-commutative algebras and graded modules.
//!
//! Everything is given by explicit structure constants over a chosen basis
//! per degree and validated exhaustively: `A_0 = k` with the degree-0 basis
//! vector acting as identity, `xy = (-1)^{ij} yx`, `x^2 = 0` in odd degrees,
//! associativity on all basis triples. Modules may occupy negative degrees
//! (duals); algebras are connected and nonnegatively graded.
//!
//! Constructions: exterior algebras, trivial extensions `B ⋉ W`, graded
//! tensor products, suspension, duals, truncations, and the model algebras
//! of the classification table. An optional multidegree per basis vector is
//! threaded through every construction (and checked for additivity); the
//! resolution engine uses it to split work into independent strands.

use crate::classtable::{self, ClassId, ClasstableError, RingInvariants};
use crate::field::Field;
use crate::linalg::Mat;
use crate::powser::{LaurentPoly, PowserError};
use std::collections::BTreeMap;
use thiserror::Error;

pub mod appendix;

#[derive(Debug, Error, PartialEq)]
pub enum GalgError {
    #[error("exterior generator in even degree {0}")]
    EvenGenerator(u32),
    #[error("degree 0 component is not a copy of k: {0}")]
    BadUnit(String),
    #[error("graded commutativity fails: {0}")]
    NotCommutative(String),
    #[error("odd-degree square is nonzero: {0}")]
    OddSquare(String),
    #[error("associativity fails: {0}")]
    NotAssociative(String),
    #[error("module action inconsistent: {0}")]
    BadAction(String),
    #[error("multidegree weights are not additive: {0}")]
    BadMultidegree(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("derived W dimension {dim} in degree {degree} is negative")]
    NegativeWDimension { degree: usize, dim: i64 },
    #[error("truncation degree must be at least 1, got {0}")]
    BadTruncation(i64),
    #[error("basis-change matrix in degree {0} is singular or mis-sized")]
    BadBasisChange(usize),
    #[error("hypothesis of {formula} violated: {reason}")]
    HypothesisViolation { formula: &'static str, reason: String },
    #[error(transparent)]
    Classtable(#[from] ClasstableError),
    #[error(transparent)]
    Series(#[from] PowserError),
}

/// Sparse vector in a degree component: `(basis index, coefficient)`,
/// sorted by index, zero coefficients dropped.
pub type Sv<E> = Vec<(usize, E)>;

/// Multidegree assignment: each basis vector of each degree carries a weight
/// vector of length `axes`; products and actions must add weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGrading {
    pub axes: usize,
    pub wt: BTreeMap<(i64, usize), Vec<i64>>,
}

impl MultiGrading {
    pub fn weight(&self, deg: i64, idx: usize) -> Option<&[i64]> {
        self.wt.get(&(deg, idx)).map(|v| v.as_slice())
    }
}

fn canonical_sv<F: Field>(field: &F, dim: usize, sv: Sv<F::Elem>) -> Result<Sv<F::Elem>, GalgError> {
    let mut dense = vec![field.zero(); dim];
    for (idx, c) in sv {
        if idx >= dim {
            return Err(GalgError::BadAction(format!("basis index {idx} out of range {dim}")));
        }
        dense[idx] = field.add(&dense[idx], &c);
    }
    Ok(sparsify(field, &dense))
}

fn sparsify<F: Field>(field: &F, dense: &[F::Elem]) -> Sv<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !field.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn densify<F: Field>(field: &F, dim: usize, sv: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); dim];
    for (i, c) in sv {
        out[*i] = c.clone();
    }
    out
}

fn unit_dense<F: Field>(field: &F, dim: usize, idx: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); dim];
    v[idx] = field.one();
    v
}

/// A connected graded-commutative algebra over `F`, bounded by `top`.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<F: Field> {
    pub field: F,
    /// `dims[i] = dim_k A_i`; `dims[0] = 1`. Trailing zeros are allowed.
    pub dims: Vec<usize>,
    /// `(i, a, j, b) -> x^i_a · x^j_b` expressed in the degree `i+j` basis.
    /// Missing keys mean zero; identity rows are stored explicitly.
    mult: BTreeMap<(usize, usize, usize, usize), Sv<F::Elem>>,
    pub multi: Option<MultiGrading>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// Highest degree with a nonzero component (0 for `A = k`).
    pub fn top_nonzero(&self) -> usize {
        (0..self.dims.len()).rev().find(|&i| self.dims[i] > 0).unwrap_or(0)
    }

    pub fn dim(&self, i: i64) -> usize {
        if i < 0 || i as usize >= self.dims.len() {
            0
        } else {
            self.dims[i as usize]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn prod_basis(&self, i: usize, a: usize, j: usize, b: usize) -> &[(usize, F::Elem)] {
        self.mult.get(&(i, a, j, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Product of dense coordinate vectors from degrees `i` and `j`.
    pub fn mul_vec(&self, i: usize, va: &[F::Elem], j: usize, vb: &[F::Elem]) -> Vec<F::Elem> {
        let out_dim = self.dim((i + j) as i64);
        let mut out = vec![self.field.zero(); out_dim];
        if out_dim == 0 {
            return out;
        }
        for (a, ca) in va.iter().enumerate() {
            if self.field.is_zero(ca) {
                continue;
            }
            for (b, cb) in vb.iter().enumerate() {
                if self.field.is_zero(cb) {
                    continue;
                }
                let c = self.field.mul(ca, cb);
                for (t, coef) in self.prod_basis(i, a, j, b) {
                    self.field.add_mul_assign(&mut out[*t], &c, coef);
                }
            }
        }
        out
    }

    pub fn hilbert(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, &d) in self.dims.iter().enumerate() {
            if d > 0 {
                p = p.add(&LaurentPoly::monomial(i as i64, d as i64));
            }
        }
        p
    }

    /// Structure-constant rows `(i, a, j, b, k, scalar)` for `i, j ≥ 1`.
    pub fn dump_mult(&self) -> Vec<(usize, usize, usize, usize, usize, String)> {
        let mut rows = Vec::new();
        for (&(i, a, j, b), sv) in &self.mult {
            if i == 0 || j == 0 {
                continue;
            }
            for (k, c) in sv {
                rows.push((i, a, j, b, *k, self.field.elem_str(c)));
            }
        }
        rows
    }

    /// The algebra `k` (with an empty multidegree so extensions can add axes).
    pub fn unit(field: F) -> Self {
        let multi = MultiGrading { axes: 0, wt: BTreeMap::from([((0, 0), vec![])]) };
        Self::assemble(field, vec![1], Some(multi), |_, _, _, _| Vec::new())
            .expect("unit algebra is axiom-clean")
    }

    /// Builds an algebra from a product rule on basis pairs in positive
    /// degrees (identity rows are synthesized) and validates all axioms.
    pub fn assemble(
        field: F,
        dims: Vec<usize>,
        multi: Option<MultiGrading>,
        mut prod: impl FnMut(usize, usize, usize, usize) -> Sv<F::Elem>,
    ) -> Result<Self, GalgError> {
        if dims.is_empty() || dims[0] != 1 {
            return Err(GalgError::BadUnit(format!("dims {dims:?}")));
        }
        let top = dims.len() - 1;
        let mut mult = BTreeMap::new();
        for (j, &dj) in dims.iter().enumerate() {
            for b in 0..dj {
                mult.insert((0, 0, j, b), vec![(b, field.one())]);
                if j > 0 {
                    mult.insert((j, b, 0, 0), vec![(b, field.one())]);
                }
            }
        }
        for i in 1..=top {
            for j in 1..=top.saturating_sub(i) {
                for a in 0..dims[i] {
                    for b in 0..dims[j] {
                        let sv = canonical_sv(&field, dims[i + j], prod(i, a, j, b))?;
                        if !sv.is_empty() {
                            mult.insert((i, a, j, b), sv);
                        }
                    }
                }
            }
        }
        let alg = GradedAlgebra { field, dims, mult, multi };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), GalgError> {
        let f = &self.field;
        let top = self.top();
        if let Some(mg) = &self.multi {
            for (i, &di) in self.dims.iter().enumerate() {
                for a in 0..di {
                    match mg.weight(i as i64, a) {
                        Some(w) if w.len() == mg.axes => {}
                        _ => {
                            return Err(GalgError::BadMultidegree(format!(
                                "missing or mis-sized weight at degree {i}, index {a}"
                            )))
                        }
                    }
                }
            }
        }
        for (j, &dj) in self.dims.iter().enumerate() {
            for b in 0..dj {
                let want = vec![(b, f.one())];
                if self.prod_basis(0, 0, j, b) != want.as_slice()
                    || self.prod_basis(j, b, 0, 0) != want.as_slice()
                {
                    return Err(GalgError::BadUnit(format!("unit fails on degree {j}, index {b}")));
                }
            }
        }
        for i in 0..=top {
            for j in i..=top {
                if i + j > top {
                    continue;
                }
                let dk = self.dims[i + j];
                for a in 0..self.dims[i] {
                    for b in 0..self.dims[j] {
                        let ab = densify(f, dk, self.prod_basis(i, a, j, b));
                        let ba = densify(f, dk, self.prod_basis(j, b, i, a));
                        let neg = (i * j) % 2 == 1;
                        for t in 0..dk {
                            let want = if neg { f.neg(&ba[t]) } else { ba[t].clone() };
                            if ab[t] != want {
                                return Err(GalgError::NotCommutative(format!(
                                    "degrees ({i},{j}), indices ({a},{b})"
                                )));
                            }
                        }
                        if i == j && i % 2 == 1 && a == b && !self.prod_basis(i, a, i, a).is_empty()
                        {
                            return Err(GalgError::OddSquare(format!("degree {i}, index {a}")));
                        }
                        if let Some(mg) = &self.multi {
                            let wa = mg.weight(i as i64, a).unwrap();
                            let wb = mg.weight(j as i64, b).unwrap();
                            let want: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                            for (t, _) in self.prod_basis(i, a, j, b) {
                                if mg.weight((i + j) as i64, *t).unwrap() != want.as_slice() {
                                    return Err(GalgError::BadMultidegree(format!(
                                        "product at degrees ({i},{j}), indices ({a},{b})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        for i in 1..=top {
            for j in 1..=top {
                for k in 1..=top {
                    if i + j + k > top {
                        continue;
                    }
                    for a in 0..self.dims[i] {
                        let ua = unit_dense(f, self.dims[i], a);
                        for b in 0..self.dims[j] {
                            let ab = densify(f, self.dims[i + j], self.prod_basis(i, a, j, b));
                            for c in 0..self.dims[k] {
                                let uc = unit_dense(f, self.dims[k], c);
                                let left = self.mul_vec(i + j, &ab, k, &uc);
                                let bc = densify(f, self.dims[j + k], self.prod_basis(j, b, k, c));
                                let right = self.mul_vec(i, &ua, j + k, &bc);
                                if left != right {
                                    return Err(GalgError::NotAssociative(format!(
                                        "degrees ({i},{j},{k}), indices ({a},{b},{c})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Conjugates all structure constants by degreewise invertible matrices
    /// (`mats[i]` expresses the new degree-`i` basis in the old one; the
    /// degree-0 matrix is forced to the identity). Multidegrees are dropped.
    pub fn change_basis(&self, mats: &[Mat<F>]) -> Result<Self, GalgError> {
        let f = &self.field;
        if mats.len() != self.dims.len() {
            return Err(GalgError::BadBasisChange(mats.len()));
        }
        let mut fwd: Vec<Mat<F>> = Vec::with_capacity(mats.len());
        let mut inv: Vec<Mat<F>> = Vec::with_capacity(mats.len());
        for (i, m) in mats.iter().enumerate() {
            let m = if i == 0 {
                let mut id = Mat::zero(f, 1, 1);
                id.set(0, 0, f.one());
                id
            } else {
                m.clone()
            };
            if m.rows != self.dims[i] || m.cols != self.dims[i] {
                return Err(GalgError::BadBasisChange(i));
            }
            let mi = m.inverse(f).ok_or(GalgError::BadBasisChange(i))?;
            fwd.push(m);
            inv.push(mi);
        }
        let to_new = |deg: usize, old: &[F::Elem]| -> Vec<F::Elem> {
            let n = self.dims[deg];
            let mut y = vec![f.zero(); n];
            for (c, yc) in y.iter_mut().enumerate() {
                for (d, ud) in old.iter().enumerate() {
                    f.add_mul_assign(yc, inv[deg].get(d, c), ud);
                }
            }
            y
        };
        GradedAlgebra::assemble(f.clone(), self.dims.clone(), None, |i, a, j, b| {
            // f_a f_b expanded over old-basis products, then re-coordinatized.
            let dk = self.dims[i + j];
            let mut acc = vec![f.zero(); dk];
            for s in 0..self.dims[i] {
                let ca = fwd[i].get(a, s);
                if f.is_zero(ca) {
                    continue;
                }
                for t in 0..self.dims[j] {
                    let c = f.mul(ca, fwd[j].get(b, t));
                    if f.is_zero(&c) {
                        continue;
                    }
                    for (u, coef) in self.prod_basis(i, s, j, t) {
                        f.add_mul_assign(&mut acc[*u], &c, coef);
                    }
                }
            }
            sparsify(f, &to_new(i + j, &acc))
        })
    }

    // ----- module constructors -----

    /// Builds a module over `self` from an action rule on basis pairs with
    /// positive algebra degree; the unit action is synthesized and the
    /// axioms validated on all basis triples.
    pub fn assemble_module(
        &self,
        lo: i64,
        dims: Vec<usize>,
        multi: Option<MultiGrading>,
        mut act: impl FnMut(usize, usize, i64, usize) -> Sv<F::Elem>,
    ) -> Result<GradedModule<F>, GalgError> {
        let hi = lo + dims.len() as i64 - 1;
        let mdim = |j: i64| -> usize {
            if j < lo || j > hi {
                0
            } else {
                dims[(j - lo) as usize]
            }
        };
        let mut table = BTreeMap::new();
        for j in lo..=hi {
            for b in 0..mdim(j) {
                table.insert((0usize, 0usize, j, b), vec![(b, self.field.one())]);
            }
        }
        for i in 1..=self.top() {
            for j in lo..=hi {
                if mdim(j) == 0 || mdim(j + i as i64) == 0 {
                    continue;
                }
                for a in 0..self.dims[i] {
                    for b in 0..mdim(j) {
                        let sv = canonical_sv(&self.field, mdim(j + i as i64), act(i, a, j, b))?;
                        if !sv.is_empty() {
                            table.insert((i, a, j, b), sv);
                        }
                    }
                }
            }
        }
        let module = GradedModule { lo, dims, act: table, multi };
        self.validate_module(&module)?;
        Ok(module)
    }

    fn validate_module(&self, m: &GradedModule<F>) -> Result<(), GalgError> {
        let f = &self.field;
        if let Some(mg) = &m.multi {
            for j in m.lo..=m.hi() {
                for b in 0..m.dim(j) {
                    match mg.weight(j, b) {
                        Some(w) if w.len() == mg.axes => {}
                        _ => {
                            return Err(GalgError::BadMultidegree(format!(
                                "module weight missing at degree {j}, index {b}"
                            )))
                        }
                    }
                }
            }
            for (&(i, a, j, b), sv) in &m.act {
                if i == 0 {
                    continue;
                }
                let Some(amg) = &self.multi else { continue };
                let wa = amg.weight(i as i64, a).ok_or_else(|| {
                    GalgError::BadMultidegree(format!("algebra weight missing at ({i},{a})"))
                })?;
                let wb = mg.weight(j, b).unwrap();
                if wa.len() != wb.len() {
                    // Algebra axes embed as a prefix of the module axes.
                    if wa.len() > wb.len() {
                        return Err(GalgError::BadMultidegree(format!(
                            "algebra has more axes ({}) than module ({})",
                            wa.len(),
                            wb.len()
                        )));
                    }
                }
                let mut want: Vec<i64> = wb.to_vec();
                for (t, x) in wa.iter().enumerate() {
                    want[t] += x;
                }
                for (t, _) in sv {
                    if mg.weight(j + i as i64, *t).unwrap() != want.as_slice() {
                        return Err(GalgError::BadMultidegree(format!(
                            "action at algebra ({i},{a}), module ({j},{b})"
                        )));
                    }
                }
            }
        }
        for j in m.lo..=m.hi() {
            for b in 0..m.dim(j) {
                if m.act_basis(0, 0, j, b) != [(b, f.one())].as_slice() {
                    return Err(GalgError::BadAction(format!(
                        "unit fails on module degree {j}, index {b}"
                    )));
                }
            }
        }
        for i1 in 1..=self.top() {
            for i2 in 1..=self.top() {
                for j in m.lo..=m.hi() {
                    let out_deg = j + (i1 + i2) as i64;
                    if m.dim(j) == 0 || (out_deg < m.lo || out_deg > m.hi()) {
                        continue;
                    }
                    for a1 in 0..self.dims[i1] {
                        let u1 = unit_dense(f, self.dims[i1], a1);
                        for a2 in 0..self.dims[i2] {
                            for b in 0..m.dim(j) {
                                let inner =
                                    densify(f, m.dim(j + i2 as i64), m.act_basis(i2, a2, j, b));
                                let left = m.act_vec(self, i1, &u1, j + i2 as i64, &inner);
                                let prod = if i1 + i2 <= self.top() {
                                    densify(f, self.dims[i1 + i2], self.prod_basis(i1, a1, i2, a2))
                                } else {
                                    Vec::new()
                                };
                                let ub = unit_dense(f, m.dim(j), b);
                                let right = m.act_vec(self, i1 + i2, &prod, j, &ub);
                                if left != right {
                                    return Err(GalgError::BadAction(format!(
                                        "associativity at algebra ({i1},{a1}),({i2},{a2}), module ({j},{b})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `A` as a module over itself.
    pub fn free_module(&self) -> GradedModule<F> {
        let multi = self.multi.clone();
        self.assemble_module(0, self.dims.clone(), multi, |i, a, j, b| {
            self.prod_basis(i, a, j as usize, b).to_vec()
        })
        .expect("regular module inherits the algebra axioms")
    }

    /// Module with zero action of the augmentation ideal. Each basis vector
    /// gets a fresh multidegree axis when the algebra is multigraded.
    pub fn zero_action_module(&self, lo: i64, dims: Vec<usize>) -> GradedModule<F> {
        let multi = self.multi.as_ref().map(|mg| {
            let total: usize = dims.iter().sum();
            let axes = mg.axes + total;
            let mut wt = BTreeMap::new();
            let mut next = 0usize;
            for (k, &dk) in dims.iter().enumerate() {
                for b in 0..dk {
                    let mut w = vec![0i64; axes];
                    w[mg.axes + next] = 1;
                    next += 1;
                    wt.insert((lo + k as i64, b), w);
                }
            }
            MultiGrading { axes, wt }
        });
        self.assemble_module(lo, dims, multi, |_, _, _, _| Vec::new())
            .expect("zero action satisfies the axioms")
    }

    /// `Σ^s M`: degrees shift by `s`, the action picks up `(-1)^{is}`.
    pub fn suspend(&self, m: &GradedModule<F>, s: i64) -> GradedModule<F> {
        let multi = m.multi.as_ref().map(|mg| MultiGrading {
            axes: mg.axes,
            wt: mg.wt.iter().map(|(&(j, b), w)| ((j + s, b), w.clone())).collect(),
        });
        self.assemble_module(m.lo + s, m.dims.clone(), multi, |i, a, j, b| {
            let sv = m.act_basis(i, a, j - s, b).to_vec();
            if (i as i64 * s).rem_euclid(2) == 1 {
                sv.into_iter().map(|(t, c)| (t, self.field.neg(&c))).collect()
            } else {
                sv
            }
        })
        .expect("suspension preserves the axioms")
    }

    /// `Hom_k(M, Σ^s k)`: component `j` is `(M_{s-j})^*` with the twisted
    /// action `(xμ)(m) = (-1)^{ij} μ(xm)`; multidegrees negate.
    pub fn dual(&self, m: &GradedModule<F>, s: i64) -> GradedModule<F> {
        let lo = s - m.hi();
        let n_deg = m.dims.len();
        let dims: Vec<usize> = (0..n_deg).map(|k| m.dim(s - lo - k as i64)).collect();
        let multi = m.multi.as_ref().map(|mg| {
            let mut wt = BTreeMap::new();
            for (k, &dk) in dims.iter().enumerate() {
                let j = lo + k as i64;
                for b in 0..dk {
                    let w = mg
                        .weight(s - j, b)
                        .map(|w| w.iter().map(|x| -x).collect())
                        .unwrap_or_default();
                    wt.insert((j, b), w);
                }
            }
            MultiGrading { axes: mg.axes, wt }
        });
        self.assemble_module(lo, dims, multi, |i, a, j, b| {
            let src = s - i as i64 - j;
            let mut out = Vec::new();
            for c in 0..m.dim(src) {
                for (t, coef) in m.act_basis(i, a, src, c) {
                    if *t == b {
                        let v = if (i as i64 * j).rem_euclid(2) == 1 {
                            self.field.neg(coef)
                        } else {
                            coef.clone()
                        };
                        out.push((c, v));
                    }
                }
            }
            out
        })
        .expect("dual action satisfies the axioms")
    }

    /// `A / A_{≥s}` as a module over `A`.
    pub fn quotient_upper(&self, s: i64) -> Result<GradedModule<F>, GalgError> {
        if s < 1 {
            return Err(GalgError::BadTruncation(s));
        }
        let keep = (s as usize).min(self.dims.len());
        let dims = self.dims[..keep].to_vec();
        let multi = self.multi.as_ref().map(|mg| MultiGrading {
            axes: mg.axes,
            wt: mg.wt.iter().filter(|(&(j, _), _)| j < s).map(|(k, w)| (*k, w.clone())).collect(),
        });
        self.assemble_module(0, dims, multi, |i, a, j, b| {
            if i as i64 + j >= s {
                Vec::new()
            } else {
                self.prod_basis(i, a, j as usize, b).to_vec()
            }
        })
    }

    /// The augmentation ideal `A_+` as a module over `A`.
    pub fn aug_ideal(&self) -> GradedModule<F> {
        self.upper_ideal(1).expect("threshold 1 is always valid")
    }

    /// The ideal `A_{≥s}` as a module over `A`.
    pub fn upper_ideal(&self, s: i64) -> Result<GradedModule<F>, GalgError> {
        if s < 1 {
            return Err(GalgError::BadTruncation(s));
        }
        let skip = (s as usize).min(self.dims.len());
        let dims = self.dims[skip..].to_vec();
        let multi = self.multi.as_ref().map(|mg| MultiGrading {
            axes: mg.axes,
            wt: mg.wt.iter().filter(|(&(j, _), _)| j >= s).map(|(k, w)| (*k, w.clone())).collect(),
        });
        self.assemble_module(s, dims, multi, |i, a, j, b| {
            self.prod_basis(i, a, j as usize, b).to_vec()
        })
    }
}

/// A graded module over some [`GradedAlgebra`]; operations take the algebra
/// explicitly, the module stores only its own data.
#[derive(Debug, Clone)]
pub struct GradedModule<F: Field> {
    pub lo: i64,
    /// `dims[k] = dim_k M_{lo+k}`.
    pub dims: Vec<usize>,
    /// `(i, a, j, b) -> x^i_a · m^j_b` in the degree `j+i` basis; `j` is the
    /// absolute module degree. Missing keys mean zero.
    act: BTreeMap<(usize, usize, i64, usize), Sv<F::Elem>>,
    pub multi: Option<MultiGrading>,
}

impl<F: Field> GradedModule<F> {
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, j: i64) -> usize {
        if j < self.lo || j > self.hi() {
            0
        } else {
            self.dims[(j - self.lo) as usize]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// True when every positive-degree algebra element acts as zero.
    pub fn positive_action_is_zero(&self) -> bool {
        self.act.keys().all(|&(i, _, _, _)| i == 0)
    }

    pub fn act_basis(&self, i: usize, a: usize, j: i64, b: usize) -> &[(usize, F::Elem)] {
        self.act.get(&(i, a, j, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Action of a dense algebra vector on a dense module vector.
    pub fn act_vec(
        &self,
        alg: &GradedAlgebra<F>,
        i: usize,
        va: &[F::Elem],
        j: i64,
        vb: &[F::Elem],
    ) -> Vec<F::Elem> {
        let f = &alg.field;
        let out_dim = self.dim(j + i as i64);
        let mut out = vec![f.zero(); out_dim];
        if out_dim == 0 {
            return out;
        }
        for (a, ca) in va.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (b, cb) in vb.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (t, coef) in self.act_basis(i, a, j, b) {
                    f.add_mul_assign(&mut out[*t], &c, coef);
                }
            }
        }
        out
    }

    pub fn hilbert(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, &d) in self.dims.iter().enumerate() {
            if d > 0 {
                p = p.add(&LaurentPoly::monomial(self.lo + k as i64, d as i64));
            }
        }
        p
    }
}

/// Exterior algebra on generators in the given odd degrees, with one
/// multidegree axis per generator.
pub fn exterior<F: Field>(field: F, degrees: &[u32]) -> Result<GradedAlgebra<F>, GalgError> {
    for &d in degrees {
        if d % 2 == 0 {
            return Err(GalgError::EvenGenerator(d));
        }
    }
    let g = degrees.len();
    let top: usize = degrees.iter().map(|&d| d as usize).sum();
    // Basis: subsets of generators, grouped by total degree, in mask order.
    let mut by_degree: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for mask in 0..(1u32 << g) {
        let deg: usize =
            (0..g).filter(|&i| mask >> i & 1 == 1).map(|i| degrees[i] as usize).sum();
        by_degree[deg].push(mask);
    }
    let index: BTreeMap<(usize, u32), usize> = by_degree
        .iter()
        .enumerate()
        .flat_map(|(d, masks)| masks.iter().enumerate().map(move |(i, &m)| ((d, m), i)))
        .collect();
    let dims: Vec<usize> = by_degree.iter().map(|v| v.len()).collect();
    let multi = {
        let mut wt = BTreeMap::new();
        for (d, masks) in by_degree.iter().enumerate() {
            for (idx, &mask) in masks.iter().enumerate() {
                let w: Vec<i64> = (0..g).map(|i| (mask >> i & 1) as i64).collect();
                wt.insert((d as i64, idx), w);
            }
        }
        Some(MultiGrading { axes: g, wt })
    };
    GradedAlgebra::assemble(field.clone(), dims, multi, |i, a, j, b| {
        let s = by_degree[i][a];
        let t = by_degree[j][b];
        if s & t != 0 {
            return Vec::new();
        }
        // Sign: move each generator of t past the generators of s above it.
        let mut invs = 0u32;
        for bit_t in 0..g {
            if t >> bit_t & 1 == 0 {
                continue;
            }
            for bit_s in (bit_t + 1)..g {
                if s >> bit_s & 1 == 1 {
                    invs += 1;
                }
            }
        }
        let coef = if invs % 2 == 1 { field.neg(&field.one()) } else { field.one() };
        vec![(index[&(i + j, s | t)], coef)]
    })
}

/// Trivial extension `C ⋉ W`: products `(x,m)(x',m') = (xx', xm' + (-1)^{|m||x'|} x'm)`,
/// `W·W = 0`. The basis per degree lists `C` first, then `W`.
pub fn trivial_ext<F: Field>(
    c: &GradedAlgebra<F>,
    w: &GradedModule<F>,
) -> Result<GradedAlgebra<F>, GalgError> {
    if !w.is_zero() && w.lo < 1 {
        return Err(GalgError::BadAction(format!(
            "trivial extension needs W in positive degrees, got lo = {}",
            w.lo
        )));
    }
    let f = &c.field;
    let top = c.top().max(w.hi().max(0) as usize);
    let dims: Vec<usize> =
        (0..=top).map(|d| c.dim(d as i64) + w.dim(d as i64)).collect();
    let multi = match (&c.multi, &w.multi) {
        (Some(cm), Some(wm)) if wm.axes >= cm.axes => {
            let mut wt = BTreeMap::new();
            for (d, &dd) in dims.iter().enumerate() {
                let cd = c.dim(d as i64);
                for idx in 0..dd {
                    let w_vec = if idx < cd {
                        let mut v = cm.weight(d as i64, idx).unwrap_or(&[]).to_vec();
                        v.resize(wm.axes, 0);
                        v
                    } else {
                        wm.weight(d as i64, idx - cd).unwrap_or(&[]).to_vec()
                    };
                    wt.insert((d as i64, idx), w_vec);
                }
            }
            Some(MultiGrading { axes: wm.axes, wt })
        }
        _ => None,
    };
    GradedAlgebra::assemble(f.clone(), dims, multi, |i, a, j, b| {
        let (ci, cj) = (c.dim(i as i64), c.dim(j as i64));
        match (a < ci, b < cj) {
            (true, true) => c.prod_basis(i, a, j, b).iter().map(|(t, v)| (*t, v.clone())).collect(),
            (true, false) => {
                // x · m lands in the W part.
                let off = c.dim((i + j) as i64);
                w.act_basis(i, a, j as i64, b - cj).iter().map(|(t, v)| (t + off, v.clone())).collect()
            }
            (false, true) => {
                // m · x' = (-1)^{|m||x'|} x'·m.
                let off = c.dim((i + j) as i64);
                let neg = (i * j) % 2 == 1;
                w.act_basis(j, b, i as i64, a - ci)
                    .iter()
                    .map(|(t, v)| (t + off, if neg { f.neg(v) } else { v.clone() }))
                    .collect()
            }
            (false, false) => Vec::new(),
        }
    })
}

/// Graded tensor product with Koszul signs:
/// `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} (aa')⊗(bb')`.
pub fn tensor<F: Field>(
    c: &GradedAlgebra<F>,
    d: &GradedAlgebra<F>,
) -> Result<GradedAlgebra<F>, GalgError> {
    if c.field.characteristic() != d.field.characteristic() {
        return Err(GalgError::FieldMismatch);
    }
    let f = &c.field;
    let top = c.top() + d.top();
    // Basis of degree n: (i, a, n-i, b) with i ascending, then a, then b.
    let mut by_degree: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); top + 1];
    for i in 0..=c.top() {
        for j in 0..=d.top() {
            for a in 0..c.dims[i] {
                for b in 0..d.dims[j] {
                    by_degree[i + j].push((i, a, j, b));
                }
            }
        }
    }
    for v in &mut by_degree {
        v.sort_unstable();
    }
    let index: BTreeMap<(usize, usize, usize, usize), usize> = by_degree
        .iter()
        .flat_map(|v| v.iter().enumerate().map(|(k, t)| (*t, k)))
        .collect();
    let dims: Vec<usize> = by_degree.iter().map(|v| v.len()).collect();
    let multi = match (&c.multi, &d.multi) {
        (Some(cm), Some(dm)) => {
            let mut wt = BTreeMap::new();
            for (n, basis) in by_degree.iter().enumerate() {
                for (k, &(i, a, j, b)) in basis.iter().enumerate() {
                    let mut w = cm.weight(i as i64, a).unwrap_or(&[]).to_vec();
                    w.extend_from_slice(dm.weight(j as i64, b).unwrap_or(&[]));
                    wt.insert((n as i64, k), w);
                }
            }
            Some(MultiGrading { axes: cm.axes + dm.axes, wt })
        }
        _ => None,
    };
    GradedAlgebra::assemble(f.clone(), dims, multi, |di, xa, dj, xb| {
        let (i1, a1, j1, b1) = by_degree[di][xa];
        let (i2, a2, j2, b2) = by_degree[dj][xb];
        if i1 + i2 > c.top() || j1 + j2 > d.top() {
            return Vec::new();
        }
        let neg = (j1 * i2) % 2 == 1;
        let mut out = Vec::new();
        for (ta, va) in c.prod_basis(i1, a1, i2, a2) {
            for (tb, vb) in d.prod_basis(j1, b1, j2, b2) {
                let mut v = f.mul(va, vb);
                if neg {
                    v = f.neg(&v);
                }
                out.push((index[&(i1 + i2, *ta, j1 + j2, *tb)], v));
            }
        }
        out
    })
}

/// Quotient algebra `E / E_{≥s}`.
pub fn truncate<F: Field>(e: &GradedAlgebra<F>, s: i64) -> Result<GradedAlgebra<F>, GalgError> {
    if s < 1 {
        return Err(GalgError::BadTruncation(s));
    }
    let keep = (s as usize).min(e.dims.len());
    let dims = e.dims[..keep].to_vec();
    let multi = e.multi.as_ref().map(|mg| MultiGrading {
        axes: mg.axes,
        wt: mg.wt.iter().filter(|(&(j, _), _)| j < s).map(|(k, w)| (*k, w.clone())).collect(),
    });
    GradedAlgebra::assemble(e.field.clone(), dims, multi, |i, a, j, b| {
        if (i + j) as i64 >= s {
            Vec::new()
        } else {
            e.prod_basis(i, a, j, b).to_vec()
        }
    })
}

/// The model algebra `A = B ⋉ W` of the classification table row for
/// `cls`, with `W` a zero-multiplication module sized so that the ranks of
/// `A_1, A_2, A_3` hit `(l+1, l+n, n)` (codepth 3) or `(l+1, l)` (class S).
pub fn table_algebra<F: Field>(
    cls: ClassId,
    inv: &RingInvariants,
    field: F,
) -> Result<GradedAlgebra<F>, GalgError> {
    let verdict = classtable::admissible(cls, inv);
    if !verdict.ok {
        return Err(ClasstableError::InadmissibleInvariants {
            class: cls.to_string(),
            violations: verdict.violations,
        }
        .into());
    }
    let b_alg = match cls {
        ClassId::C(c) => return exterior(field, &vec![1; c as usize]),
        ClassId::S => GradedAlgebra::unit(field),
        ClassId::T => {
            let c2 = exterior(field, &[1, 1])?;
            let w = c2.suspend(&c2.quotient_upper(2)?, 1);
            trivial_ext(&c2, &w)?
        }
        ClassId::B => {
            let c2 = exterior(field, &[1, 1])?;
            let w = c2.suspend(&c2.aug_ideal(), 1);
            trivial_ext(&c2, &w)?
        }
        ClassId::G(r) => {
            let k = GradedAlgebra::unit(field);
            let v = k.zero_action_module(1, vec![r as usize]);
            let c_alg = trivial_ext(&k, &v)?;
            let w = c_alg.dual(&c_alg.free_module(), 3);
            trivial_ext(&c_alg, &w)?
        }
        ClassId::H(p, q) => {
            let k1 = GradedAlgebra::unit(field.clone());
            let v1 = k1.zero_action_module(1, vec![p as usize, q as usize]);
            let c1 = trivial_ext(&k1, &v1)?;
            let k2 = GradedAlgebra::unit(field);
            let v2 = k2.zero_action_module(1, vec![1]);
            let c2 = trivial_ext(&k2, &v2)?;
            tensor(&c1, &c2)?
        }
    };
    let targets: Vec<i64> = if cls == ClassId::S {
        vec![inv.l + 1, inv.l]
    } else {
        vec![inv.l + 1, inv.l + inv.n as i64, inv.n as i64]
    };
    let mut w_dims = Vec::with_capacity(targets.len());
    for (k, &target) in targets.iter().enumerate() {
        let have = b_alg.dim(k as i64 + 1) as i64;
        let extra = target - have;
        if extra < 0 {
            return Err(GalgError::NegativeWDimension { degree: k + 1, dim: extra });
        }
        w_dims.push(extra as usize);
    }
    if w_dims.iter().all(|&d| d == 0) {
        return Ok(b_alg);
    }
    let w = b_alg.zero_action_module(1, w_dims);
    trivial_ext(&b_alg, &w)
}

/// The six ranks read off a graded algebra, plus a flag set when components
/// above degree 3 were present and ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultInvariants {
    pub l: i64,
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub truncation_warning: bool,
}

impl MultInvariants {
    pub fn tuple(&self) -> (i64, u32, u32, u32, u32, u32) {
        (self.l, self.m, self.n, self.p, self.q, self.r)
    }
}

/// `l = dim A_1 - 1`, `m = dim A_2`, `n = dim A_3`, `p = rank A_1·A_1`,
/// `q = rank A_1·A_2`, `r = rank(δ_2: A_2 → Hom(A_1, A_3))` with
/// `δ_2(x)(y) = xy`.
pub fn mult_invariants<F: Field>(a: &GradedAlgebra<F>) -> MultInvariants {
    let f = &a.field;
    let (d1, d2, d3) = (a.dim(1), a.dim(2), a.dim(3));
    let p = if d1 == 0 || d2 == 0 {
        0
    } else {
        let mut rows = Mat::zero(f, d1 * d1, d2);
        for x in 0..d1 {
            for y in 0..d1 {
                for (t, c) in a.prod_basis(1, x, 1, y) {
                    rows.set(x * d1 + y, *t, c.clone());
                }
            }
        }
        rows.rank(f)
    };
    let q = if d1 == 0 || d2 == 0 || d3 == 0 {
        0
    } else {
        let mut rows = Mat::zero(f, d1 * d2, d3);
        for x in 0..d1 {
            for y in 0..d2 {
                for (t, c) in a.prod_basis(1, x, 2, y) {
                    rows.set(x * d2 + y, *t, c.clone());
                }
            }
        }
        rows.rank(f)
    };
    let r = if d1 == 0 || d2 == 0 || d3 == 0 {
        0
    } else {
        let mut rows = Mat::zero(f, d2, d1 * d3);
        for x in 0..d2 {
            for y in 0..d1 {
                for (t, c) in a.prod_basis(2, x, 1, y) {
                    rows.set(x, y * d3 + t, c.clone());
                }
            }
        }
        rows.rank(f)
    };
    let truncation_warning = a.dims.len() > 4 && a.dims[4..].iter().any(|&d| d > 0);
    MultInvariants {
        l: d1 as i64 - 1,
        m: d2 as u32,
        n: d3 as u32,
        p: p as u32,
        q: q as u32,
        r: r as u32,
        truncation_warning,
    }
}

/// Whether all pairings `A_i × A_{s-i} → A_s` (for `s` the top nonzero
/// degree) are perfect; requires `dim A_s = 1`.
pub fn poincare_duality<F: Field>(a: &GradedAlgebra<F>) -> (bool, Option<usize>) {
    let f = &a.field;
    let s = a.top_nonzero();
    if a.dims[s] != 1 {
        return (false, None);
    }
    for i in 0..=s {
        let (di, dj) = (a.dims[i], a.dims[s - i]);
        if di != dj {
            return (false, None);
        }
        let mut pairing = Mat::zero(f, di, dj);
        for x in 0..di {
            for y in 0..dj {
                for (t, c) in a.prod_basis(i, x, s - i, y) {
                    debug_assert_eq!(*t, 0);
                    pairing.set(x, y, c.clone());
                }
            }
        }
        if pairing.rank(f) != di {
            return (false, None);
        }
    }
    (true, Some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};

    #[test]
    fn exterior_shapes() {
        let e = exterior(Rat, &[1, 1, 1]).unwrap();
        assert_eq!(e.dims, vec![1, 3, 3, 1]);
        assert_eq!(poincare_duality(&e), (true, Some(3)));
        let mi = mult_invariants(&e);
        assert_eq!(mi.tuple(), (2, 3, 1, 3, 1, 3));
        assert!(!mi.truncation_warning);

        let e1 = exterior(Rat, &[1]).unwrap();
        assert_eq!(e1.dims, vec![1, 1]);
        assert_eq!(poincare_duality(&e1), (true, Some(1)));

        assert_eq!(exterior(Rat, &[2]).unwrap_err(), GalgError::EvenGenerator(2));
    }

    #[test]
    fn exterior_signs() {
        // x·y = -y·x and x² = 0 are enforced by validation; check an
        // explicit triple product coefficient: (x y) z = x (y z) = xyz.
        let e = exterior(Fp::new(7).unwrap(), &[1, 1, 1]).unwrap();
        let xy = e.prod_basis(1, 0, 1, 1).to_vec();
        assert_eq!(xy.len(), 1);
        let yx = e.prod_basis(1, 1, 1, 0).to_vec();
        assert_eq!(yx[0].0, xy[0].0);
        assert_eq!(yx[0].1, 7 - xy[0].1);
    }

    #[test]
    fn trivial_ext_shapes() {
        // k ⋉ Σk: dual-numbers shape.
        let k = GradedAlgebra::unit(Rat);
        let w = k.zero_action_module(1, vec![1]);
        let de = trivial_ext(&k, &w).unwrap();
        assert_eq!(de.dims, vec![1, 1]);

        // class-T B-algebra: C ⋉ Σ(C/C_{≥2}) with C = ⋀Σk².
        let c = exterior(Rat, &[1, 1]).unwrap();
        let w = c.suspend(&c.quotient_upper(2).unwrap(), 1);
        let bt = trivial_ext(&c, &w).unwrap();
        assert_eq!(bt.dims, vec![1, 3, 3]);
        assert_eq!(mult_invariants(&bt).tuple(), (2, 3, 0, 3, 0, 0));

        // class-B B-algebra: C ⋉ ΣC₊.
        let w = c.suspend(&c.aug_ideal(), 1);
        let bb = trivial_ext(&c, &w).unwrap();
        assert_eq!(bb.dims, vec![1, 2, 3, 1]);
        assert_eq!(mult_invariants(&bb).tuple(), (1, 3, 1, 1, 1, 2));
    }

    #[test]
    fn tensor_shapes() {
        let k1 = GradedAlgebra::unit(Rat);
        let v1 = k1.zero_action_module(1, vec![3]);
        let c1 = trivial_ext(&k1, &v1).unwrap();
        let k2 = GradedAlgebra::unit(Rat);
        let v2 = k2.zero_action_module(1, vec![1]);
        let c2 = trivial_ext(&k2, &v2).unwrap();
        let t = tensor(&c1, &c2).unwrap();
        assert_eq!(t.dims, vec![1, 4, 3]);
        assert_eq!(
            t.hilbert(),
            c1.hilbert().mul(&c2.hilbert()),
            "Hilbert series multiply across tensor products"
        );
    }

    #[test]
    fn truncate_shapes() {
        let e = exterior(Rat, &[1, 1, 1]).unwrap();
        let t = truncate(&e, 3).unwrap();
        assert_eq!(t.dims, vec![1, 3, 3]);
        assert_eq!(truncate(&e, 1).unwrap().dims, vec![1]);
        assert_eq!(truncate(&e, 9).unwrap().dims, e.dims);
        assert!(matches!(truncate(&e, 0), Err(GalgError::BadTruncation(0))));
    }

    #[test]
    fn module_constructions() {
        let c = exterior(Rat, &[1, 1]).unwrap();
        let free = c.free_module();
        assert_eq!(free.hilbert(), c.hilbert());
        // Suspension shifts the Hilbert series by t^s.
        let sus = c.suspend(&free, 2);
        assert_eq!(sus.hilbert(), c.hilbert().shift(2));
        // dual(M, 0) has Hilbert series H_M(t^{-1}).
        let dual0 = c.dual(&free, 0);
        assert_eq!(dual0.hilbert(), c.hilbert().substitute_inverse());
        // Double dual restores the module up to the standard twist: the
        // iso m ↦ (-1)^{|m|} m turns the composite action into the original,
        // so on bases the double-dual action is (-1)^{|x|} times the first.
        let dd = c.dual(&c.dual(&free, 0), 0);
        assert_eq!(dd.lo, free.lo);
        assert_eq!(dd.dims, free.dims);
        for (&(i, a, j, b), sv) in &free.act {
            let got = dd.act.get(&(i, a, j, b)).cloned().unwrap_or_default();
            let want: Vec<_> = sv
                .iter()
                .map(|(t, v)| (*t, if i % 2 == 1 { Rat.neg(v) } else { v.clone() }))
                .collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn table_algebra_rows() {
        // C(3) is the exterior algebra itself.
        let inv = RingInvariants::for_class(ClassId::C(3), 0, 2, 1).unwrap();
        let a = table_algebra(ClassId::C(3), &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 3, 3, 1]);
        assert_eq!(mult_invariants(&a).tuple(), (2, 3, 1, 3, 1, 3));

        // T with l = 3, n = 2 (h = 1): A dims [1,4,5,2], W = (1,2,2).
        let inv = RingInvariants::for_class(ClassId::T, 1, 3, 2).unwrap();
        let a = table_algebra(ClassId::T, &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 4, 5, 2]);
        assert_eq!(mult_invariants(&a).tuple(), (3, 5, 2, 3, 0, 0));

        // G(2) with l = 3, n = 1 (h = 1): B = [1,2,2,1], W = (2,2,0),
        // A = [1,4,4,1].
        let inv = RingInvariants::for_class(ClassId::G(2), 1, 3, 1).unwrap();
        let a = table_algebra(ClassId::G(2), &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 4, 4, 1]);
        assert_eq!(mult_invariants(&a).tuple(), (3, 4, 1, 0, 1, 2));

        // Gorenstein G(5): W vanishes, A = B has Poincare duality.
        let inv = RingInvariants::for_class(ClassId::G(5), 0, 4, 1).unwrap();
        let a = table_algebra(ClassId::G(5), &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 5, 5, 1]);
        assert_eq!(mult_invariants(&a).tuple(), (4, 5, 1, 0, 1, 5));
        assert_eq!(poincare_duality(&a), (true, Some(3)));

        // S with l = 2: A = k ⋉ W.
        let inv = RingInvariants::for_class(ClassId::S, 1, 2, 0).unwrap();
        let a = table_algebra(ClassId::S, &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 3, 2]);
        assert_eq!(mult_invariants(&a).tuple(), (2, 2, 0, 0, 0, 0));

        // H(2,1) with l = 2, n = 1 (h = 1).
        let inv = RingInvariants::for_class(ClassId::H(2, 1), 1, 2, 1).unwrap();
        let a = table_algebra(ClassId::H(2, 1), &inv, Rat).unwrap();
        assert_eq!(a.dims, vec![1, 3, 3, 1]);
        assert_eq!(mult_invariants(&a).tuple(), (2, 3, 1, 2, 1, 1));
    }

    #[test]
    fn table_rows_hit_class_columns() {
        for entry in classtable::admissible_grid(4, 4, 5, 3, 3) {
            let a = table_algebra(entry.cls, &entry.inv, Fp::new(10007).unwrap()).unwrap();
            let mi = mult_invariants(&a);
            assert_eq!(
                mi.tuple(),
                (
                    entry.inv.l,
                    entry.inv.m,
                    entry.inv.n,
                    entry.inv.p,
                    entry.inv.q,
                    entry.inv.r
                ),
                "class row mismatch for {} {:?}",
                entry.cls,
                entry.inv
            );
        }
    }

    #[test]
    fn zero_action_kills_products() {
        let k = GradedAlgebra::unit(Rat);
        let w = k.zero_action_module(1, vec![2, 3, 1]);
        let a = trivial_ext(&k, &w).unwrap();
        assert_eq!(mult_invariants(&a).tuple(), (1, 3, 1, 0, 0, 0));
        assert_eq!(poincare_duality(&a).0, false);
    }

    #[test]
    fn basis_change_preserves_invariants() {
        let inv = RingInvariants::for_class(ClassId::B, 0, 4, 2).unwrap();
        let a = table_algebra(ClassId::B, &inv, Fp::new(101).unwrap()).unwrap();
        let before = mult_invariants(&a);
        // A deterministic invertible upper-triangular-ish change of basis.
        let f = Fp::new(101).unwrap();
        let mats: Vec<Mat<Fp>> = a
            .dims
            .iter()
            .map(|&d| {
                let mut m = Mat::zero(&f, d, d);
                for i in 0..d {
                    for j in 0..d {
                        let v = if i == j { 1 } else { (3 * i + 5 * j + 1) as u64 % 7 };
                        m.set(i, j, if i <= j { v } else { 0 });
                    }
                }
                m
            })
            .collect();
        let b = a.change_basis(&mats).unwrap();
        assert_eq!(mult_invariants(&b), before);
        assert_eq!(poincare_duality(&b), poincare_duality(&a));
    }

    #[test]
    fn multigrading_round_trip() {
        let e = exterior(Rat, &[1, 1]).unwrap();
        let mg = e.multi.as_ref().unwrap();
        assert_eq!(mg.axes, 2);
        assert_eq!(mg.weight(2, 0), Some([1i64, 1].as_slice()));
        // The class-B table algebra keeps a multigrading through the whole
        // construction chain.
        let inv = RingInvariants::for_class(ClassId::B, 0, 4, 2).unwrap();
        let a = table_algebra(ClassId::B, &inv, Rat).unwrap();
        assert!(a.multi.is_some());
        let mg = a.multi.as_ref().unwrap();
        for (i, &d) in a.dims.iter().enumerate() {
            for idx in 0..d {
                assert!(mg.weight(i as i64, idx).is_some());
            }
        }
    }
}
