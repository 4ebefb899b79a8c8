//! Koszul homology as a bigraded algebra, and the classifier built on it.
//!
//! The complex is `K_{i,j} = Λ^i(k^e) ⊗ R_{j-i}` with the standard
//! differential sending `ρ·e_S` to `Σ_k (-1)^{k-1} x_{s_k} ρ · e_{S∖s_k}`.
//! Homology is computed bidegree by bidegree with exact linear algebra;
//! representatives are kept so that the induced products can be expressed in
//! the chosen homology basis, and the result is assembled into a
//! [`GradedAlgebra`](crate::galg::GradedAlgebra) whose axioms are re-checked
//! independently.  Every run also verifies the per-degree Euler
//! characteristic of the complex against the Hilbert series, which catches
//! rank or sign errors unconditionally.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::classtable::{admissible, ClassId, RingInvariants};
use crate::field::{Field, FieldSpec, Fp, Rat};
use crate::galg::{mult_invariants, poincare_duality, GradedAlgebra, MultiGrading, Sv};
use crate::growth::ExceptionKind;
use crate::linalg::{Echelon, Mat};
use crate::powser::{one_minus_t_pow, LaurentPoly};

use super::{KoszulError, RingPresentation, RingSlices, Term};

/// Bitmask subsets of `{0..e}` of the given size, ascending.
fn masks(e: usize, size: usize) -> Vec<u32> {
    (0u32..1 << e).filter(|m| m.count_ones() as usize == size).collect()
}

/// Whether `e_S · e_T = -e_{S∪T}` after sorting the concatenation, i.e. the
/// parity of `#{(s,t) in S x T : s > t}` is odd.  Assumes disjoint masks.
fn wedge_sign_negative(s: u32, t: u32) -> bool {
    let mut inv = 0u32;
    let mut rest = s;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        inv += (t & ((1u32 << bit) - 1)).count_ones();
        rest &= rest - 1;
    }
    inv % 2 == 1
}

/// A quotient `Z/B` tracked inside an extended echelon: boundary rows carry
/// zero tails, each chosen representative carries a unit tail, so reducing
/// any cycle leaves its homology coordinates (negated) in the tail.
struct Quot<F: Field> {
    field: F,
    vdim: usize,
    cap: usize,
    ech: Echelon<F>,
    reps: usize,
}

impl<F: Field> Quot<F> {
    fn new(field: &F, vdim: usize, cap: usize) -> Self {
        Quot {
            field: field.clone(),
            vdim,
            cap,
            ech: Echelon::new(field, vdim + cap),
            reps: 0,
        }
    }

    fn pad(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        w.resize(self.vdim + self.cap, self.field.zero());
        w
    }

    fn insert_boundary(&mut self, v: &[F::Elem]) {
        self.ech.insert(self.pad(v));
    }

    /// Adds `v` as a new homology representative unless it is already a
    /// boundary plus earlier representatives.
    fn try_insert_rep(&mut self, v: &[F::Elem]) -> bool {
        let mut probe = self.pad(v);
        self.ech.reduce(&mut probe);
        if probe[..self.vdim].iter().all(|x| self.field.is_zero(x)) {
            return false;
        }
        let mut fresh = self.pad(v);
        fresh[self.vdim + self.reps] = self.field.one();
        self.ech.insert(fresh).expect("representative is independent");
        self.reps += 1;
        true
    }

    /// Coordinates of the class of a cycle `v` in the representative basis;
    /// `None` if `v` is not in the span of cycles seen so far.
    fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut w = self.pad(v);
        self.ech.reduce(&mut w);
        if !w[..self.vdim].iter().all(|x| self.field.is_zero(x)) {
            return None;
        }
        Some((0..self.reps).map(|t| self.field.neg(&w[self.vdim + t])).collect())
    }
}

/// Homology data at one bidegree: the quotient bookkeeping, the raw cycle
/// vectors chosen as representatives, and the ring-slice dimension so that
/// `(mask, ring index)` coordinates can be unflattened.
struct Bihom<F: Field> {
    quot: Quot<F>,
    reps: Vec<Vec<F::Elem>>,
    rdim: usize,
}

/// Window-quality indicators attached to a computed homology algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stabilization {
    /// The ring is visibly artinian with top degree `T` and the window covers
    /// `T + e`, so every homology class and product is inside the window.
    pub rigorous: bool,
    /// No positive-degree homology appears in the last two internal degrees
    /// of the window; an indicator of completeness, not a proof.
    pub tail_clear: bool,
    /// The signed sum of total ranks vanishes, as it must once the window
    /// holds all of the homology of a proper quotient.
    pub alternating_ok: bool,
    /// Every representative product landed inside the window or was provably
    /// zero from the artinian top.
    pub products_complete: bool,
}

/// The Koszul homology algebra of a presentation, with its bigraded ranks.
#[derive(Debug)]
pub struct KoszulHomology<F: Field> {
    pub algebra: GradedAlgebra<F>,
    /// `(homological degree, internal degree, rank)`, nonzero entries only.
    pub bigraded: Vec<(usize, i64, usize)>,
    pub window: i64,
    pub stab: Stabilization,
}

pub fn koszul_homology<F: Field>(
    field: F,
    pres: &RingPresentation,
    window: i64,
) -> Result<KoszulHomology<F>, KoszulError> {
    let e = pres.e;
    let floor = e as i64 + i64::from(pres.max_gen_degree().max(2));
    if window < floor {
        return Err(KoszulError::WindowTooSmall(window));
    }
    let slices = RingSlices::new(field.clone(), pres, window)?;
    let f = &field;

    let masks_by: Vec<Vec<u32>> = (0..=e).map(|i| masks(e, i)).collect();
    let mask_pos: Vec<BTreeMap<u32, usize>> = masks_by
        .iter()
        .map(|ms| ms.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    // vmats[v][j]: multiplication R_j -> R_{j+1} by x_{v+1}.
    let vmats: Vec<Vec<Mat<F>>> = (0..e)
        .map(|v| (0..window).map(|j| slices.var_matrix(v, j)).collect())
        .collect();

    let kdim = |i: usize, j: i64| masks_by[i].len() * slices.dim(j - i as i64);

    // d_{i,j}: K_{i,j} -> K_{i-1,j}.
    let differential = |i: usize, j: i64| -> Mat<F> {
        let rd_src = slices.dim(j - i as i64);
        if i == 0 {
            return Mat::zero(f, 0, rd_src);
        }
        let rd_dst = slices.dim(j - i as i64 + 1);
        let mut m = Mat::zero(f, masks_by[i - 1].len() * rd_dst, masks_by[i].len() * rd_src);
        if rd_src == 0 || rd_dst == 0 {
            return m;
        }
        for (mi, &mask) in masks_by[i].iter().enumerate() {
            let mut k = 0u32;
            for s in 0..e {
                if mask & (1 << s) == 0 {
                    continue;
                }
                k += 1;
                let negate = k % 2 == 0;
                let row0 = mask_pos[i - 1][&(mask & !(1u32 << s))] * rd_dst;
                let vm = &vmats[s][(j - i as i64) as usize];
                for a in 0..rd_src {
                    let col = mi * rd_src + a;
                    for b in 0..rd_dst {
                        let c = vm.get(b, a);
                        if f.is_zero(c) {
                            continue;
                        }
                        let val = if negate { f.neg(c) } else { c.clone() };
                        let prev = m.get(row0 + b, col).clone();
                        m.set(row0 + b, col, f.add(&prev, &val));
                    }
                }
            }
        }
        m
    };

    let mut bihoms: BTreeMap<(usize, i64), Bihom<F>> = BTreeMap::new();
    let mut ranks: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for j in 0..=window {
        let imax = e.min(j as usize);
        let dmats: Vec<Mat<F>> = (0..=imax).map(|i| differential(i, j)).collect();
        for i in 0..=imax {
            let cycles = if kdim(i, j) == 0 { Vec::new() } else { dmats[i].kernel(f) };
            let mut quot = Quot::new(f, kdim(i, j), cycles.len());
            if i + 1 <= imax {
                let b = &dmats[i + 1];
                for col in 0..b.cols {
                    let v: Vec<F::Elem> = (0..b.rows).map(|r| b.get(r, col).clone()).collect();
                    quot.insert_boundary(&v);
                }
            }
            let mut reps = Vec::new();
            for z in cycles {
                if quot.try_insert_rep(&z) {
                    reps.push(z);
                }
            }
            if !reps.is_empty() {
                ranks.insert((i, j), reps.len());
            }
            bihoms.insert((i, j), Bihom { quot, reps, rdim: slices.dim(j - i as i64) });
        }
    }

    // Per-degree Euler check against the Hilbert series: for each internal
    // degree j, the signed homology ranks must match the coefficient of
    // (1-t)^e H(t).  Both sides are exact inside the window.
    let expect = slices.hilbert_window().mul(&one_minus_t_pow(e as u32));
    for j in 0..=window {
        let mut sum = BigInt::zero();
        for i in 0..=e.min(j as usize) {
            if let Some(&h) = ranks.get(&(i, j)) {
                let term = BigInt::from(h as i64);
                if i % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
        }
        if sum != expect.coeff(j) {
            return Err(KoszulError::InternalInconsistency(format!(
                "Euler characteristic at internal degree {j}: homology ranks give {sum}, \
                 the Hilbert series gives {}",
                expect.coeff(j)
            )));
        }
    }

    if ranks.get(&(0, 0)) != Some(&1) {
        return Err(KoszulError::InternalInconsistency(
            "degree-zero homology is not a single copy of the field".into(),
        ));
    }
    if ranks.keys().any(|&(i, j)| i == 0 && j > 0) {
        return Err(KoszulError::InternalInconsistency(
            "degree-zero homology appears in positive internal degree".into(),
        ));
    }

    let top_nz = ranks.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let mut dims_a = vec![0usize; top_nz + 1];
    let mut offsets: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for (&(i, j), &h) in &ranks {
        offsets.insert((i, j), dims_a[i]);
        dims_a[i] += h;
    }
    for i in 1..top_nz {
        if dims_a[i] == 0 {
            return Err(KoszulError::InternalInconsistency(format!(
                "homology vanishes in degree {i} but not above it"
            )));
        }
    }

    let mut wt: BTreeMap<(i64, usize), Vec<i64>> = BTreeMap::new();
    for (&(i, j), &base) in &offsets {
        for t in 0..ranks[&(i, j)] {
            wt.insert((i as i64, base + t), vec![j]);
        }
    }
    let multi = MultiGrading { axes: 1, wt };

    // Products of representatives, expressed in the homology basis.
    let artin_top = slices.artinian_top();
    let mut products_complete = true;
    let mut table: BTreeMap<(usize, usize, usize, usize), Sv<F::Elem>> = BTreeMap::new();
    let entries: Vec<(usize, i64)> = offsets.keys().copied().collect();
    for &(i1, j1) in &entries {
        if i1 == 0 {
            continue;
        }
        for &(i2, j2) in &entries {
            if i2 == 0 {
                continue;
            }
            let (it, jt) = (i1 + i2, j1 + j2);
            if it > e {
                continue;
            }
            if jt > window {
                let rdeg = (j1 - i1 as i64) + (j2 - i2 as i64);
                if !artin_top.is_some_and(|top| rdeg > top) {
                    products_complete = false;
                }
                continue;
            }
            let src1 = &bihoms[&(i1, j1)];
            let src2 = &bihoms[&(i2, j2)];
            let dst = &bihoms[&(it, jt)];
            let (r1, r2) = (j1 - i1 as i64, j2 - i2 as i64);
            for (t1, u) in src1.reps.iter().enumerate() {
                for (t2, w) in src2.reps.iter().enumerate() {
                    let mut out = vec![f.zero(); masks_by[it].len() * dst.rdim];
                    for (m1i, &m1) in masks_by[i1].iter().enumerate() {
                        let va = &u[m1i * src1.rdim..(m1i + 1) * src1.rdim];
                        if va.iter().all(|x| f.is_zero(x)) {
                            continue;
                        }
                        for (m2i, &m2) in masks_by[i2].iter().enumerate() {
                            if m1 & m2 != 0 {
                                continue;
                            }
                            let vb = &w[m2i * src2.rdim..(m2i + 1) * src2.rdim];
                            if vb.iter().all(|x| f.is_zero(x)) {
                                continue;
                            }
                            let prod = slices.mul(r1, va, r2, vb);
                            let negate = wedge_sign_negative(m1, m2);
                            let base = mask_pos[it][&(m1 | m2)] * dst.rdim;
                            for (b, c) in prod.into_iter().enumerate() {
                                if f.is_zero(&c) {
                                    continue;
                                }
                                let c = if negate { f.neg(&c) } else { c };
                                out[base + b] = f.add(&out[base + b], &c);
                            }
                        }
                    }
                    let coords = dst.quot.express(&out).ok_or_else(|| {
                        KoszulError::InternalInconsistency(format!(
                            "a product of cycles at bidegree ({it},{jt}) is not a cycle"
                        ))
                    })?;
                    let sv: Sv<F::Elem> = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !f.is_zero(c))
                        .map(|(t, c)| (offsets[&(it, jt)] + t, c))
                        .collect();
                    if !sv.is_empty() {
                        table.insert(
                            (i1, offsets[&(i1, j1)] + t1, i2, offsets[&(i2, j2)] + t2),
                            sv,
                        );
                    }
                }
            }
        }
    }

    let algebra = GradedAlgebra::assemble(field.clone(), dims_a.clone(), Some(multi), |i, a, j, b| {
        table.get(&(i, a, j, b)).cloned().unwrap_or_default()
    })?;

    let rigorous = artin_top.is_some_and(|top| window >= top + e as i64);
    let tail_clear = !ranks.keys().any(|&(i, j)| i >= 1 && j >= window - 1);
    let alternating_ok = if pres.gens.is_empty() {
        true
    } else {
        let mut sum = 0i64;
        for (i, &d) in dims_a.iter().enumerate() {
            sum += if i % 2 == 0 { d as i64 } else { -(d as i64) };
        }
        sum == 0
    };
    let bigraded = ranks.iter().map(|(&(i, j), &h)| (i, j, h)).collect();

    Ok(KoszulHomology {
        algebra,
        bigraded,
        window,
        stab: Stabilization { rigorous, tail_clear, alternating_ok, products_complete },
    })
}

/// Whether every product of positive-degree elements vanishes.
pub fn is_golod<F: Field>(a: &GradedAlgebra<F>) -> bool {
    let top = a.top_nonzero();
    for i in 1..=top {
        for j in 1..=top.saturating_sub(i) {
            for x in 0..a.dim(i as i64) {
                for y in 0..a.dim(j as i64) {
                    if !a.prod_basis(i, x, j, y).is_empty() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Splits the two codepth-3 shapes that share `(p,q,r) = (3,0,0)`: in class
/// `T` multiplication by any degree-one element has rank at most 2, while
/// `H(3,0)` has elements of rank 3.  The test is polynomial: all 3x3 minors
/// of the generic multiplication matrix must vanish identically.
pub fn t_or_h30<F: Field>(a: &GradedAlgebra<F>) -> Result<ClassId, KoszulError> {
    let f = &a.field;
    let mi = mult_invariants(a);
    if a.top_nonzero() != 3 || (mi.p, mi.q, mi.r) != (3, 0, 0) {
        return Err(KoszulError::Precondition(format!(
            "rank test applies to codepth 3 with (p,q,r) = (3,0,0), got ({},{},{}) at codepth {}",
            mi.p,
            mi.q,
            mi.r,
            a.top_nonzero()
        )));
    }
    let d1 = a.dim(1);
    let d2 = a.dim(2);
    let mut ech = Echelon::new(f, d2);
    let mut w_basis: Vec<Vec<F::Elem>> = Vec::new();
    let mut pair_prods: Vec<((usize, usize), Vec<F::Elem>)> = Vec::new();
    for s in 0..d1 {
        for t in s + 1..d1 {
            let mut dense = vec![f.zero(); d2];
            for (k, c) in a.prod_basis(1, s, 1, t) {
                dense[*k] = c.clone();
            }
            pair_prods.push(((s, t), dense.clone()));
            if ech.insert(dense.clone()).is_some() {
                w_basis.push(dense);
            }
        }
    }
    if w_basis.len() != 3 {
        return Err(KoszulError::InternalInconsistency(format!(
            "degree-one products span rank {}, expected 3",
            w_basis.len()
        )));
    }
    // One reduction solves W·γ = product for every pair at once.
    let np = pair_prods.len();
    let mut aug = Mat::zero(f, d2, 3 + np);
    for (i, w) in w_basis.iter().enumerate() {
        for r in 0..d2 {
            aug.set(r, i, w[r].clone());
        }
    }
    for (jp, (_, v)) in pair_prods.iter().enumerate() {
        for r in 0..d2 {
            aug.set(r, 3 + jp, v[r].clone());
        }
    }
    let pivots = aug.rref(f);
    if pivots != vec![0, 1, 2] {
        return Err(KoszulError::InternalInconsistency(
            "degree-two products escape the span of the chosen image basis".into(),
        ));
    }
    let pair_index: BTreeMap<(usize, usize), usize> =
        pair_prods.iter().enumerate().map(|(i, (st, _))| (*st, i)).collect();
    // lf[t][u][s]: coefficient of x_s in the (t,u) entry of the generic
    // multiplication matrix, i.e. the w_u coordinate of a_s a_t.
    let mut lf = vec![vec![vec![f.zero(); d1]; 3]; d1];
    for t in 0..d1 {
        for s in 0..d1 {
            if s == t {
                continue;
            }
            let (jp, negate) = if s < t { (pair_index[&(s, t)], false) } else { (pair_index[&(t, s)], true) };
            for (u, row) in lf[t].iter_mut().enumerate() {
                let g = aug.get(u, 3 + jp).clone();
                row[s] = if negate { f.neg(&g) } else { g };
            }
        }
    }
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
        ([1, 0, 2], true),
    ];
    for t1 in 0..d1 {
        for t2 in t1 + 1..d1 {
            for t3 in t2 + 1..d1 {
                let rows = [t1, t2, t3];
                let mut poly: BTreeMap<[usize; 3], F::Elem> = BTreeMap::new();
                for (perm, neg) in PERMS {
                    for s1 in 0..d1 {
                        let c1 = &lf[rows[0]][perm[0]][s1];
                        if f.is_zero(c1) {
                            continue;
                        }
                        for s2 in 0..d1 {
                            let c2 = &lf[rows[1]][perm[1]][s2];
                            if f.is_zero(c2) {
                                continue;
                            }
                            let c12 = f.mul(c1, c2);
                            for s3 in 0..d1 {
                                let c3 = &lf[rows[2]][perm[2]][s3];
                                if f.is_zero(c3) {
                                    continue;
                                }
                                let mut c = f.mul(&c12, c3);
                                if neg {
                                    c = f.neg(&c);
                                }
                                let mut key = [s1, s2, s3];
                                key.sort_unstable();
                                let slot = poly.entry(key).or_insert_with(|| f.zero());
                                *slot = f.add(slot, &c);
                            }
                        }
                    }
                }
                if poly.values().any(|c| !f.is_zero(c)) {
                    return Ok(ClassId::H(3, 0));
                }
            }
        }
    }
    Ok(ClassId::T)
}

/// Reads the class off a homology algebra alone.  The caller is responsible
/// for checking the algebra against an independent depth computation.
pub fn classify_algebra<F: Field>(a: &GradedAlgebra<F>) -> Result<ClassId, KoszulError> {
    let mi = mult_invariants(a);
    let c = a.top_nonzero();
    let (l, m, n, p, q, r) = mi.tuple();
    let unclass = |why: &str| {
        KoszulError::Unclassifiable(format!(
            "codepth {c}, (l,m,n,p,q,r) = ({l},{m},{n},{p},{q},{r}): {why}"
        ))
    };
    if mi.truncation_warning || c > 3 {
        return Err(unclass("the homology algebra extends beyond degree 3"));
    }
    let (pd, _) = poincare_duality(a);
    let cls = match c {
        0 => ClassId::C(0),
        1 => {
            if l == 0 {
                ClassId::C(1)
            } else {
                return Err(unclass("codepth 1 admits a single homology class in degree 1"));
            }
        }
        2 => {
            if p == 0 {
                ClassId::S
            } else if l == 1 && m == 1 {
                ClassId::C(2)
            } else {
                return Err(unclass("nonzero products at codepth 2 force the exterior shape"));
            }
        }
        3 => {
            if l == 2 && n == 1 && (p, q, r) == (3, 1, 3) && pd {
                ClassId::C(3)
            } else if n == 1 && pd {
                if l + 1 < 2 {
                    return Err(unclass("duality with a single socle class needs l >= 1"));
                }
                ClassId::G((l + 1) as u32)
            } else if (p, q, r) == (1, 1, 2) {
                ClassId::B
            } else if p == 0 && q == 1 && r >= 2 {
                ClassId::G(r)
            } else if (p, q, r) == (3, 0, 0) {
                t_or_h30(a)?
            } else if r == q {
                ClassId::H(p, q)
            } else {
                return Err(unclass("no row of the classification matches"));
            }
        }
        _ => unreachable!("codepth bounded above"),
    };
    Ok(cls)
}

/// Depth, dimension and their difference, with certification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthReport {
    pub d: u32,
    pub dim: u32,
    pub h: u32,
    /// Every step of the depth computation was an exact proof: a visible
    /// socle, a visibly artinian ring, or a regular element certified by a
    /// Hilbert series identity.
    pub d_certified: bool,
    /// Dimension came from combinatorics (monomial or artinian input) or a
    /// caller annotation rather than a finite-difference estimate.
    pub dim_exact: bool,
}

enum Cand {
    Var(usize),
    /// `x_u + x_v` when the flag is set, `x_u - x_v` otherwise.
    Mix(usize, usize, bool),
}

/// Quotient by the candidate linear form, as a presentation on `e - 1`
/// variables.  Substitutes the eliminated variable and re-normalizes; a
/// generator may vanish outright and is then dropped.
fn eliminate(pres: &RingPresentation, cand: &Cand) -> Result<RingPresentation, KoszulError> {
    let mut new_gens: Vec<Vec<Term>> = Vec::new();
    for gen in &pres.gens {
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (c, exps) in gen {
            let (mut c2, mut e2) = (c.clone(), exps.clone());
            match cand {
                Cand::Var(v) => {
                    if exps[*v] > 0 {
                        continue;
                    }
                    e2.remove(*v);
                }
                Cand::Mix(u, v, plus) => {
                    let k = e2[*v];
                    e2[*u] += k;
                    e2.remove(*v);
                    if *plus && k % 2 == 1 {
                        c2 = -c2;
                    }
                }
            }
            let slot = acc.entry(e2).or_insert_with(BigRational::zero);
            *slot += c2;
        }
        acc.retain(|_, c| !c.is_zero());
        if !acc.is_empty() {
            let mut terms: Vec<Term> = acc.into_iter().map(|(m, c)| (c, m)).collect();
            let lead = terms[0].0.clone();
            for (c, _) in &mut terms {
                *c /= lead.clone();
            }
            new_gens.push(terms);
        }
    }
    new_gens.sort();
    new_gens.dedup();
    RingPresentation::new(pres.field, pres.e - 1, new_gens)
}

/// First internal degree inside the window carrying a nonzero socle element,
/// i.e. a class killed by every variable.
fn socle_degree<F: Field>(slices: &RingSlices<F>) -> Option<i64> {
    let f = &slices.field;
    for j in 1..slices.dmax {
        let dj = slices.dim(j);
        if dj == 0 {
            return None;
        }
        let dn = slices.dim(j + 1);
        let mut m = Mat::zero(f, slices.e * dn, dj);
        for v in 0..slices.e {
            let vm = slices.var_matrix(v, j);
            for r in 0..dn {
                for c in 0..dj {
                    let x = vm.get(r, c);
                    if !f.is_zero(x) {
                        m.set(v * dn + r, c, x.clone());
                    }
                }
            }
        }
        if m.rank(f) < dj {
            return Some(j);
        }
    }
    None
}

/// Whether multiplication by the candidate form is injective on every graded
/// piece visible in the window.
fn window_injective<F: Field>(slices: &RingSlices<F>, cand: &Cand) -> bool {
    let f = &slices.field;
    for j in 0..slices.dmax {
        let dj = slices.dim(j);
        if dj == 0 {
            return true;
        }
        let m = match cand {
            Cand::Var(v) => slices.var_matrix(*v, j),
            Cand::Mix(u, v, plus) => {
                let mut a = slices.var_matrix(*u, j);
                let b = slices.var_matrix(*v, j);
                for r in 0..a.rows {
                    for c in 0..a.cols {
                        let x = b.get(r, c);
                        if f.is_zero(x) {
                            continue;
                        }
                        let x = if *plus { x.clone() } else { f.neg(x) };
                        let prev = a.get(r, c).clone();
                        a.set(r, c, f.add(&prev, &x));
                    }
                }
                a
            }
        };
        if m.rank(f) < dj {
            return false;
        }
    }
    true
}

fn depth_steps<F: Field>(
    field: F,
    pres0: &RingPresentation,
    window: i64,
) -> Result<(u32, bool), KoszulError> {
    let mut pres = pres0.clone();
    let mut d = 0u32;
    let mut certified = true;
    loop {
        if pres.e == 0 {
            return Ok((d, certified));
        }
        let slices = RingSlices::new(field.clone(), &pres, window)?;
        if slices.artinian_top().is_some() {
            return Ok((d, certified));
        }
        if socle_degree(&slices).is_some() {
            return Ok((d, certified));
        }
        let mut cands = Vec::new();
        for v in 0..pres.e {
            cands.push(Cand::Var(v));
        }
        for u in 0..pres.e {
            for v in u + 1..pres.e {
                cands.push(Cand::Mix(u, v, false));
                cands.push(Cand::Mix(u, v, true));
            }
        }
        let h_before = pres.monomial_hilbert_series();
        let drop_one = LaurentPoly::from_terms(&[(0, 1), (1, -1)]);
        let mut fallback: Option<RingPresentation> = None;
        let mut advanced = false;
        for cand in &cands {
            if !window_injective(&slices, cand) {
                continue;
            }
            let next = eliminate(&pres, cand)?;
            match (&h_before, next.monomial_hilbert_series()) {
                (Some(h0), Some(h1)) => {
                    // Exact regularity proof: the quotient's Hilbert series
                    // equals (1-t) times the original in every degree.
                    if h1 == h0.mul_poly(&drop_one) {
                        pres = next;
                        d += 1;
                        advanced = true;
                        break;
                    }
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some(next);
                    }
                }
            }
        }
        if advanced {
            continue;
        }
        if let Some(next) = fallback {
            pres = next;
            d += 1;
            certified = false;
            continue;
        }
        // Last resort: scan Bass numbers of the current quotient inside the
        // window; depth is the first nonvanishing index.
        let report = crate::resolve::bass_ring_oracle(&slices, pres.e).map_err(|err| {
            KoszulError::InternalInconsistency(format!("depth fallback resolution failed: {err}"))
        })?;
        return match report.values.iter().find(|v| v.value > 0) {
            Some(v) => Ok((d + v.i as u32, false)),
            None => Err(KoszulError::WindowTooSmall(window)),
        };
    }
}

fn dimension_estimate<F: Field>(
    slices: &RingSlices<F>,
    pres: &RingPresentation,
) -> (u32, bool) {
    if let Some(dm) = pres.monomial_dimension() {
        return (dm as u32, true);
    }
    if slices.artinian_top().is_some() {
        return (0, true);
    }
    // Finite differences of the window Hilbert function: the dimension is the
    // order of polynomial growth, read off where the differences die out.
    let mut v: Vec<i64> = (0..=slices.dmax).map(|j| slices.dim(j) as i64).collect();
    let mut delta = 0u32;
    loop {
        let tail = 3.min(v.len());
        if v.iter().rev().take(tail).all(|&x| x == 0) {
            return (delta, false);
        }
        if delta as usize >= pres.e {
            return (pres.e as u32, false);
        }
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
        delta += 1;
    }
}

fn depth_report<F: Field>(
    field: F,
    pres: &RingPresentation,
    window: i64,
    dim_hint: Option<u32>,
) -> Result<DepthReport, KoszulError> {
    let (d, d_certified) = depth_steps(field.clone(), pres, window)?;
    let slices = RingSlices::new(field, pres, window)?;
    let (dim, dim_exact) = match dim_hint {
        Some(v) => (v, true),
        None => dimension_estimate(&slices, pres),
    };
    if dim < d {
        return Err(KoszulError::InternalInconsistency(format!(
            "computed dimension {dim} is below computed depth {d}"
        )));
    }
    Ok(DepthReport { d, dim, h: dim - d, d_certified, dim_exact })
}

/// Depth and dimension of the presented ring over its own field, inside the
/// given window.  `dim_hint` overrides the dimension estimate and marks it
/// exact; use it when the dimension is known from elsewhere.
pub fn depth_and_h(
    pres: &RingPresentation,
    window: i64,
    dim_hint: Option<u32>,
) -> Result<DepthReport, KoszulError> {
    match pres.field {
        FieldSpec::Rational => depth_report(Rat, pres, window, dim_hint),
        FieldSpec::Prime(p) => depth_report(Fp::new(p)?, pres, window, dim_hint),
    }
}

/// Everything the classifier established about one presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub class: ClassId,
    pub invariants: RingInvariants,
    /// Total ranks of the homology algebra by homological degree.
    pub a_dims: Vec<usize>,
    /// `(homological degree, internal degree, rank)`, nonzero entries only.
    pub bigraded: Vec<(usize, i64, usize)>,
    /// The homology algebra satisfies poincare duality.
    pub gorenstein: bool,
    /// All products of positive-degree homology classes vanish.
    pub golod: bool,
    /// The rank relations between l, m, n for the observed codepth hold.
    pub eq_ranks_ok: bool,
    pub stabilization: Stabilization,
    pub depth_certified: bool,
    pub dimension_exact: bool,
    /// Set for the two tuples whose Bass numbers take one flat step.
    pub exception: Option<ExceptionKind>,
}

fn build_report<F: Field>(
    pres: &RingPresentation,
    hom: &KoszulHomology<F>,
    depth: &DepthReport,
) -> Result<ClassificationReport, KoszulError> {
    let a = &hom.algebra;
    let mi = mult_invariants(a);
    let c = a.top_nonzero();
    let e = pres.e;
    if e as i64 - depth.d as i64 != c as i64 {
        return Err(KoszulError::InternalInconsistency(format!(
            "codepth disagreement: the homology algebra stops at {c} while embedding dimension \
             {e} minus depth {} gives {}",
            depth.d,
            e as i64 - depth.d as i64
        )));
    }
    let trusted = hom.stab.rigorous || hom.stab.tail_clear;
    let eq_ranks_ok = match c {
        3 => mi.m as i64 == mi.l + mi.n as i64,
        2 => mi.m as i64 == mi.l,
        _ => true,
    };
    if trusted && !eq_ranks_ok {
        return Err(KoszulError::InternalInconsistency(format!(
            "rank relation fails at codepth {c}: l = {}, m = {}, n = {}",
            mi.l, mi.m, mi.n
        )));
    }
    let class = classify_algebra(a)?;
    let inv = RingInvariants::new(
        e as u32, depth.d, depth.h, mi.l, mi.m, mi.n, mi.p, mi.q, mi.r,
    )?;
    let verdict = admissible(class, &inv);
    if !verdict.ok {
        let why: Vec<String> =
            verdict.violations.iter().map(|v| format!("{} ({})", v.constraint, v.witness)).collect();
        return Err(KoszulError::Unclassifiable(format!(
            "measured invariants fall outside class {class}: {}",
            why.join("; ")
        )));
    }
    let (pd, _) = poincare_duality(a);
    let golod = is_golod(a);
    let golod_expected =
        matches!(class, ClassId::S | ClassId::H(0, 0) | ClassId::C(0) | ClassId::C(1));
    if golod != golod_expected {
        return Err(KoszulError::InternalInconsistency(format!(
            "vanishing of homology products disagrees with class {class}"
        )));
    }
    let exception = crate::growth::exception_kind(class, &inv);
    Ok(ClassificationReport {
        class,
        invariants: inv,
        a_dims: a.dims.clone(),
        bigraded: hom.bigraded.clone(),
        gorenstein: pd,
        golod,
        eq_ranks_ok,
        stabilization: hom.stab,
        depth_certified: depth.d_certified,
        dimension_exact: depth.dim_exact,
        exception,
    })
}

fn classify_impl<F: Field>(
    field: F,
    pres: &RingPresentation,
    window: i64,
    dim_hint: Option<u32>,
) -> Result<ClassificationReport, KoszulError> {
    let hom = koszul_homology(field.clone(), pres, window)?;
    let depth = depth_report(field, pres, window, dim_hint)?;
    build_report(pres, &hom, &depth)
}

/// Computes the Koszul homology algebra, an independent depth certificate,
/// and the class of the presented ring, cross-checking the two routes to the
/// codepth.  `window` defaults to the presentation's own suggestion.
pub fn classify_presentation(
    pres: &RingPresentation,
    window: Option<i64>,
    dim_hint: Option<u32>,
) -> Result<ClassificationReport, KoszulError> {
    let w = window.unwrap_or_else(|| pres.default_window());
    match pres.field {
        FieldSpec::Rational => classify_impl(Rat, pres, w, dim_hint),
        FieldSpec::Prime(p) => classify_impl(Fp::new(p)?, pres, w, dim_hint),
    }
}
