//! Graded ring presentations `k[x_1..x_e]/I` and their degreewise arithmetic.
//!
//! A presentation stores the field, the variable count (every variable has
//! internal degree 1) and the homogeneous generators of `I` as sparse
//! polynomials with rational coefficients.  [`RingSlices`] realizes the
//! quotient ring degree by degree over a concrete field: each graded piece
//! gets an echelonized ideal span and a monomial quotient basis, and from
//! those every product, variable action, and Hilbert value is exact linear
//! algebra.  The Koszul homology algebra and the classifier build on top.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::field::{Field, FieldSpec};
use crate::linalg::{Echelon, Mat};
use crate::powser::{LaurentPoly, RationalSeries};

mod homology;
pub use homology::{
    classify_algebra, classify_presentation, depth_and_h, is_golod, koszul_homology, t_or_h30,
    ClassificationReport, DepthReport, KoszulHomology, Stabilization,
};

#[derive(Debug, Error, PartialEq)]
pub enum KoszulError {
    #[error("bad presentation: {0}")]
    BadPresentation(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("degree window {0} is too small for this computation")]
    WindowTooSmall(i64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("hypothesis not met: {0}")]
    Precondition(String),
    #[error("outside the classification: {0}")]
    Unclassifiable(String),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error(transparent)]
    Series(#[from] crate::powser::PowserError),
    #[error(transparent)]
    Algebra(#[from] crate::galg::GalgError),
    #[error(transparent)]
    Table(#[from] crate::classtable::ClasstableError),
}

/// One term of a generator: a rational coefficient and an exponent vector.
pub type Term = (BigRational, Vec<u32>);

/// A graded quotient `k[x_1..x_e]/I` with `deg x_i = 1` and homogeneous
/// generators of degree at least 2.
#[derive(Debug, Clone, PartialEq)]
pub struct RingPresentation {
    pub field: FieldSpec,
    pub e: usize,
    pub gens: Vec<Vec<Term>>,
}

fn term_degree(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

impl RingPresentation {
    /// Validates and canonicalizes: exponent lengths, homogeneity, degree
    /// at least 2, merged duplicate monomials, no zero generators.
    pub fn new(field: FieldSpec, e: usize, gens: Vec<Vec<Term>>) -> Result<Self, KoszulError> {
        field.validate()?;
        let mut canon = Vec::with_capacity(gens.len());
        for (gi, gen) in gens.into_iter().enumerate() {
            let mut by_mono: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
            for (c, exps) in gen {
                if exps.len() != e {
                    return Err(KoszulError::BadPresentation(format!(
                        "generator {gi}: exponent vector has length {}, expected {e}",
                        exps.len()
                    )));
                }
                let slot = by_mono.entry(exps).or_insert_with(BigRational::zero);
                *slot += c;
            }
            by_mono.retain(|_, c| !c.is_zero());
            if by_mono.is_empty() {
                return Err(KoszulError::BadPresentation(format!("generator {gi} is zero")));
            }
            let degs: Vec<u32> = by_mono.keys().map(|m| term_degree(m)).collect();
            let d = degs[0];
            if degs.iter().any(|&x| x != d) {
                return Err(KoszulError::BadPresentation(format!(
                    "generator {gi} is not homogeneous"
                )));
            }
            if d < 2 {
                return Err(KoszulError::BadPresentation(format!(
                    "generator {gi} has degree {d}; the ideal must sit in the square of the maximal ideal"
                )));
            }
            canon.push(by_mono.into_iter().map(|(m, c)| (c, m)).collect());
        }
        Ok(RingPresentation { field, e, gens: canon })
    }

    pub fn gen_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| term_degree(&g[0].1)).collect()
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gen_degrees().into_iter().max().unwrap_or(0)
    }

    /// Default internal-degree window: twice the variable count plus the sum
    /// of the generator degrees, with a floor for tiny presentations.
    pub fn default_window(&self) -> i64 {
        let sum: u32 = self.gen_degrees().iter().sum();
        (2 * (self.e as i64 + sum as i64)).max(6)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// Krull dimension for monomial presentations: the largest set of
    /// variables containing no generator's support.
    pub fn monomial_dimension(&self) -> Option<usize> {
        if !self.is_monomial() {
            return None;
        }
        let supports: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|g| (0..self.e).filter(|&v| g[0].1[v] > 0).collect())
            .collect();
        let mut best = 0usize;
        for mask in 0u32..(1u32 << self.e) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let free = |v: usize| mask & (1 << v) != 0;
            if supports.iter().all(|s| !s.iter().all(|&v| free(v))) {
                best = size;
            }
        }
        Some(best)
    }

    /// Exact Hilbert series for monomial presentations, by inclusion and
    /// exclusion over least common multiples of generator subsets.
    pub fn monomial_hilbert_series(&self) -> Option<RationalSeries> {
        if !self.is_monomial() || self.gens.len() > 16 {
            return None;
        }
        let monos: Vec<&Vec<u32>> = self.gens.iter().map(|g| &g[0].1).collect();
        let mut num = LaurentPoly::zero();
        for mask in 0u32..(1u32 << self.gens.len()) {
            let mut lcm = vec![0u32; self.e];
            for (gi, m) in monos.iter().enumerate() {
                if mask & (1 << gi) != 0 {
                    for v in 0..self.e {
                        lcm[v] = lcm[v].max(m[v]);
                    }
                }
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            num = num.add(&LaurentPoly::monomial(term_degree(&lcm) as i64, sign));
        }
        let den = crate::powser::one_minus_t_pow(self.e as u32);
        Some(RationalSeries::new(num, den).expect("denominator (1-t)^e is unit-normalized"))
    }

    /// Renders the line-oriented presentation format.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("ring v1\n");
        match self.field {
            FieldSpec::Rational => out.push_str("field 0\n"),
            FieldSpec::Prime(p) => {
                let _ = writeln!(out, "field {p}");
            }
        }
        let _ = writeln!(out, "vars {}", self.e);
        for gen in &self.gens {
            out.push_str("gen");
            for (c, exps) in gen {
                let exp_str: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
                let _ = write!(out, " {}:{}", c, exp_str.join(","));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the format produced by [`RingPresentation::render`]: a `ring v1`
    /// header, `field`, `vars`, then one `gen` line per generator with terms
    /// written `coefficient:e1,e2,..`.  Blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self, KoszulError> {
        let mut field = None;
        let mut vars = None;
        let mut gens: Vec<Vec<Term>> = Vec::new();
        let mut saw_header = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.split('#').next().unwrap_or("").trim();
            if s.is_empty() {
                continue;
            }
            let mut words = s.split_whitespace();
            let key = words.next().unwrap();
            match key {
                "ring" => {
                    if words.next() != Some("v1") {
                        return Err(KoszulError::Parse {
                            line,
                            msg: "expected header `ring v1`".into(),
                        });
                    }
                    saw_header = true;
                }
                "field" => {
                    let v = words.next().ok_or(KoszulError::Parse {
                        line,
                        msg: "field needs a value".into(),
                    })?;
                    let p: u64 = v.parse().map_err(|_| KoszulError::Parse {
                        line,
                        msg: format!("bad field value {v:?}"),
                    })?;
                    field = Some(if p == 0 { FieldSpec::Rational } else { FieldSpec::Prime(p) });
                }
                "vars" => {
                    let v = words.next().ok_or(KoszulError::Parse {
                        line,
                        msg: "vars needs a count".into(),
                    })?;
                    vars = Some(v.parse::<usize>().map_err(|_| KoszulError::Parse {
                        line,
                        msg: format!("bad variable count {v:?}"),
                    })?);
                }
                "gen" => {
                    let e = vars.ok_or(KoszulError::Parse {
                        line,
                        msg: "gen before vars".into(),
                    })?;
                    let mut terms = Vec::new();
                    for w in words {
                        let (cs, es) = w.split_once(':').ok_or_else(|| KoszulError::Parse {
                            line,
                            msg: format!("term {w:?} is not coefficient:exponents"),
                        })?;
                        let c = parse_rational(cs).ok_or_else(|| KoszulError::Parse {
                            line,
                            msg: format!("bad coefficient {cs:?}"),
                        })?;
                        let exps: Option<Vec<u32>> =
                            es.split(',').map(|x| x.parse::<u32>().ok()).collect();
                        let exps = exps.ok_or_else(|| KoszulError::Parse {
                            line,
                            msg: format!("bad exponents {es:?}"),
                        })?;
                        if exps.len() != e {
                            return Err(KoszulError::Parse {
                                line,
                                msg: format!("expected {e} exponents, got {}", exps.len()),
                            });
                        }
                        terms.push((c, exps));
                    }
                    gens.push(terms);
                }
                other => {
                    return Err(KoszulError::Parse {
                        line,
                        msg: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        if !saw_header {
            return Err(KoszulError::Parse { line: 0, msg: "missing `ring v1` header".into() });
        }
        let field = field.ok_or(KoszulError::Parse { line: 0, msg: "missing field".into() })?;
        let vars = vars.ok_or(KoszulError::Parse { line: 0, msg: "missing vars".into() })?;
        RingPresentation::new(field, vars, gens)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.parse().ok()?;
        let den: BigInt = d.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(num))
    }
}

/// Renders an exponent vector as a monomial in `x1..xe`.
pub fn monomial_string(exps: &[u32]) -> String {
    if exps.iter().all(|&x| x == 0) {
        return "1".into();
    }
    let mut out = String::new();
    for (v, &x) in exps.iter().enumerate() {
        if x == 1 {
            let _ = write!(out, "x{}", v + 1);
        } else if x > 1 {
            let _ = write!(out, "x{}^{}", v + 1, x);
        }
    }
    out
}

/// All degree-`j` monomials in `e` variables, in descending lexicographic
/// order of exponent vectors.
pub fn monomials(e: usize, j: u32) -> Vec<Vec<u32>> {
    fn rec(e: usize, j: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
        if e == 1 {
            cur.push(j);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=j).rev() {
            cur.push(first);
            rec(e - 1, j - first, out, cur);
            cur.pop();
        }
    }
    if e == 0 {
        return if j == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(e, j, &mut out, &mut Vec::new());
    out
}

struct Level<F: Field> {
    monos: Vec<Vec<u32>>,
    mono_idx: BTreeMap<Vec<u32>, usize>,
    ideal: Echelon<F>,
    /// Monomial positions whose classes form the quotient basis.
    basis_cols: Vec<usize>,
}

/// Degreewise realization of a presentation over a concrete field, complete
/// through internal degree `dmax`.
pub struct RingSlices<F: Field> {
    pub field: F,
    pub e: usize,
    pub dmax: i64,
    gens: Vec<Vec<(F::Elem, Vec<u32>)>>,
    levels: Vec<Level<F>>,
}

impl<F: Field> RingSlices<F> {
    pub fn new(field: F, pres: &RingPresentation, dmax: i64) -> Result<Self, KoszulError> {
        let gens: Vec<Vec<(F::Elem, Vec<u32>)>> = pres
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|(c, m)| {
                        let elem = field
                            .from_ratio(c.numer(), c.denom())
                            .ok_or_else(|| {
                                KoszulError::BadPresentation(format!(
                                    "coefficient {c} is undefined over this field"
                                ))
                            })?;
                        Ok((elem, m.clone()))
                    })
                    .collect::<Result<Vec<_>, KoszulError>>()
            })
            .collect::<Result<_, _>>()?;
        for g in &gens {
            if g.iter().all(|(c, _)| field.is_zero(c)) {
                return Err(KoszulError::BadPresentation(
                    "a generator vanishes over this field".into(),
                ));
            }
        }
        let mut slices =
            RingSlices { field, e: pres.e, dmax: dmax.max(0), gens, levels: Vec::new() };
        for j in 0..=slices.dmax {
            slices.push_level(j as u32);
        }
        Ok(slices)
    }

    fn push_level(&mut self, j: u32) {
        let monos = monomials(self.e, j);
        let mono_idx: BTreeMap<Vec<u32>, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut ideal = Echelon::new(&self.field, monos.len());
        for gen in self.gens.clone() {
            let d = term_degree(&gen[0].1);
            if d > j {
                continue;
            }
            for mult in monomials(self.e, j - d) {
                let mut v = vec![self.field.zero(); monos.len()];
                for (c, m) in &gen {
                    let mut prod = m.clone();
                    for (t, &x) in prod.iter_mut().zip(mult.iter()) {
                        *t += x;
                    }
                    let idx = mono_idx[&prod];
                    v[idx] = self.field.add(&v[idx], c);
                }
                ideal.insert(v);
            }
        }
        let pivots = ideal.pivots();
        let basis_cols: Vec<usize> =
            (0..monos.len()).filter(|col| !pivots.contains(col)).collect();
        self.levels.push(Level { monos, mono_idx, ideal, basis_cols });
    }

    fn level(&self, j: i64) -> &Level<F> {
        assert!(
            (0..=self.dmax).contains(&j),
            "internal degree {j} outside the computed window 0..={}",
            self.dmax
        );
        &self.levels[j as usize]
    }

    /// Dimension of `R_j`; zero outside `0..=dmax` by convention, so callers
    /// must size `dmax` to cover every degree they touch.
    pub fn dim(&self, j: i64) -> usize {
        if !(0..=self.dmax).contains(&j) {
            return 0;
        }
        self.level(j).basis_cols.len()
    }

    /// The monomials whose classes form the chosen basis of `R_j`.
    pub fn basis(&self, j: i64) -> Vec<Vec<u32>> {
        let lv = self.level(j);
        lv.basis_cols.iter().map(|&c| lv.monos[c].clone()).collect()
    }

    /// Reduces a dense monomial-coordinate vector of degree `j` to quotient
    /// coordinates.
    pub fn reduce(&self, j: i64, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let lv = self.level(j);
        assert_eq!(v.len(), lv.monos.len());
        lv.ideal.reduce(&mut v);
        lv.basis_cols.iter().map(|&c| v[c].clone()).collect()
    }

    /// Product `R_i x R_j -> R_{i+j}` on quotient coordinates.
    pub fn mul(&self, i: i64, va: &[F::Elem], j: i64, vb: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let (la, lb, lt) = (self.level(i), self.level(j), self.level(i + j));
        let mut dense = vec![f.zero(); lt.monos.len()];
        for (pa, &ca_col) in la.basis_cols.iter().enumerate() {
            if f.is_zero(&va[pa]) {
                continue;
            }
            for (pb, &cb_col) in lb.basis_cols.iter().enumerate() {
                if f.is_zero(&vb[pb]) {
                    continue;
                }
                let c = f.mul(&va[pa], &vb[pb]);
                let mut m = la.monos[ca_col].clone();
                for (t, &x) in m.iter_mut().zip(lb.monos[cb_col].iter()) {
                    *t += x;
                }
                let idx = lt.mono_idx[&m];
                dense[idx] = f.add(&dense[idx], &c);
            }
        }
        self.reduce(i + j, dense)
    }

    /// Multiplication by the variable `x_{v+1}` as a map `R_j -> R_{j+1}`.
    pub fn var_matrix(&self, v: usize, j: i64) -> Mat<F> {
        let f = &self.field;
        let (lj, lt) = (self.level(j), self.level(j + 1));
        let mut m = Mat::zero(f, lt.basis_cols.len(), lj.basis_cols.len());
        for (col, &mono_col) in lj.basis_cols.iter().enumerate() {
            let mut prod = lj.monos[mono_col].clone();
            prod[v] += 1;
            let mut dense = vec![f.zero(); lt.monos.len()];
            dense[lt.mono_idx[&prod]] = f.one();
            for (row, c) in self.reduce(j + 1, dense).into_iter().enumerate() {
                if !f.is_zero(&c) {
                    m.set(row, col, c);
                }
            }
        }
        m
    }

    /// Window Hilbert polynomial through `dmax`.
    pub fn hilbert_window(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for j in 0..=self.dmax {
            let d = self.dim(j);
            if d > 0 {
                p = p.add(&LaurentPoly::monomial(j, d as i64));
            }
        }
        p
    }

    /// Top degree when the ring is visibly artinian inside the window: the
    /// degree before the first vanishing graded piece.
    pub fn artinian_top(&self) -> Option<i64> {
        (0..=self.dmax).find(|&j| self.dim(j) == 0).map(|j| j - 1)
    }
}

/// Monomial basis of `R_j` over the presentation's own field.
pub fn degree_basis(pres: &RingPresentation, j: i64) -> Result<Vec<Vec<u32>>, KoszulError> {
    if j < 0 {
        return Ok(Vec::new());
    }
    match pres.field {
        FieldSpec::Rational => {
            Ok(RingSlices::new(crate::field::Rat, pres, j)?.basis(j))
        }
        FieldSpec::Prime(p) => {
            Ok(RingSlices::new(crate::field::Fp::new(p)?, pres, j)?.basis(j))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};
    use num_traits::One;

    fn mono_gens(gens: &[&[u32]]) -> Vec<Vec<Term>> {
        gens.iter()
            .map(|m| vec![(BigRational::one(), m.to_vec())])
            .collect()
    }

    fn squares3() -> RingPresentation {
        RingPresentation::new(
            FieldSpec::Rational,
            3,
            mono_gens(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        )
        .unwrap()
    }

    fn wxwy() -> RingPresentation {
        RingPresentation::new(FieldSpec::Rational, 3, mono_gens(&[&[1, 1, 0], &[1, 0, 1]]))
            .unwrap()
    }

    #[test]
    fn validation_rejects_bad_input() {
        let r = RingPresentation::new(
            FieldSpec::Rational,
            2,
            vec![vec![(BigRational::one(), vec![1, 0])]],
        );
        assert!(matches!(r, Err(KoszulError::BadPresentation(_))));

        let r = RingPresentation::new(
            FieldSpec::Rational,
            2,
            vec![vec![
                (BigRational::one(), vec![2, 0]),
                (BigRational::one(), vec![1, 0]),
            ]],
        );
        assert!(matches!(r, Err(KoszulError::BadPresentation(_))));

        let r = RingPresentation::new(
            FieldSpec::Rational,
            2,
            vec![vec![
                (BigRational::one(), vec![2, 0]),
                (-BigRational::one(), vec![2, 0]),
            ]],
        );
        assert!(matches!(r, Err(KoszulError::BadPresentation(_))));
    }

    #[test]
    fn degree_basis_examples() {
        let b = degree_basis(&squares3(), 3).unwrap();
        assert_eq!(b, vec![vec![1, 1, 1]]);

        let b = degree_basis(&wxwy(), 2).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.contains(&vec![2, 0, 0]));
        assert!(b.contains(&vec![0, 2, 0]));
        assert!(b.contains(&vec![0, 1, 1]));
        assert!(b.contains(&vec![0, 0, 2]));

        assert_eq!(degree_basis(&wxwy(), 0).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn slices_arithmetic() {
        let f = Fp::new(10007).unwrap();
        let r = RingSlices::new(f.clone(), &wxwy(), 6).unwrap();
        assert_eq!(r.dim(0), 1);
        assert_eq!(r.dim(1), 3);
        assert_eq!(r.dim(2), 4);
        assert_eq!(r.dim(3), 5);

        // x*y = 0 and y*z survives in the quotient.
        let basis1 = r.basis(1);
        let xi = basis1.iter().position(|m| m == &vec![1, 0, 0]).unwrap();
        let yi = basis1.iter().position(|m| m == &vec![0, 1, 0]).unwrap();
        let zi = basis1.iter().position(|m| m == &vec![0, 0, 1]).unwrap();
        let unit = |i: usize| {
            let mut v = vec![0u64; 3];
            v[i] = 1;
            v
        };
        assert!(r.mul(1, &unit(xi), 1, &unit(yi)).iter().all(|c| f.is_zero(c)));
        assert!(!r.mul(1, &unit(yi), 1, &unit(zi)).iter().all(|c| f.is_zero(c)));

        // Non-monomial check over Q: x^2 = y^2 in k[x,y]/(x^2 - y^2, xy).
        let pres = RingPresentation::new(
            FieldSpec::Rational,
            2,
            vec![
                vec![
                    (BigRational::one(), vec![2, 0]),
                    (-BigRational::one(), vec![0, 2]),
                ],
                vec![(BigRational::one(), vec![1, 1])],
            ],
        )
        .unwrap();
        let rq = RingSlices::new(Rat, &pres, 4).unwrap();
        assert_eq!(rq.dim(2), 1);
        assert_eq!(rq.dim(3), 0);
        assert_eq!(rq.artinian_top(), Some(2));
    }

    #[test]
    fn monomial_invariants() {
        let sq = squares3();
        assert_eq!(sq.monomial_dimension(), Some(0));
        let h = sq.monomial_hilbert_series().unwrap();
        assert_eq!(
            h,
            RationalSeries::from_poly(LaurentPoly::from_terms(&[(0, 1), (1, 3), (2, 3), (3, 1)]))
        );

        let w = wxwy();
        assert_eq!(w.monomial_dimension(), Some(2));
        let h = w.monomial_hilbert_series().unwrap();
        let window: Vec<i64> = h
            .taylor(0, 5)
            .into_iter()
            .map(|c| i64::try_from(&c).unwrap())
            .collect();
        assert_eq!(window, vec![1, 3, 4, 5, 6, 7]);

        // Matches the degreewise computation.
        let f = Fp::new(10007).unwrap();
        let slices = RingSlices::new(f, &w, 5).unwrap();
        let dims: Vec<i64> = (0..=5).map(|j| slices.dim(j) as i64).collect();
        assert_eq!(dims, window);
        assert_eq!(slices.artinian_top(), None);
    }

    #[test]
    fn render_parse_round_trip() {
        let pres = RingPresentation::new(
            FieldSpec::Prime(10007),
            3,
            vec![
                vec![
                    (BigRational::one(), vec![2, 0, 0]),
                    (-BigRational::one(), vec![0, 2, 0]),
                ],
                vec![(BigRational::new(BigInt::from(1), BigInt::from(2)), vec![1, 1, 0])],
            ],
        )
        .unwrap();
        let text = pres.render();
        let back = RingPresentation::parse(&text).unwrap();
        assert_eq!(back, pres);

        assert!(RingPresentation::parse("vars 2\ngen 1:2,0").is_err());
        let with_comment = "ring v1\n# squares\nfield 0\nvars 2\n\ngen 1:2,0\ngen 1:0,2\n";
        let r = RingPresentation::parse(with_comment).unwrap();
        assert_eq!(r.e, 2);
        assert_eq!(r.gens.len(), 2);
    }

    #[test]
    fn monomial_rendering() {
        assert_eq!(monomial_string(&[0, 0]), "1");
        assert_eq!(monomial_string(&[1, 2]), "x1x2^2");
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials(0, 1).is_empty());
    }
}
