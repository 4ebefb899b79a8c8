//! Fixture runner pitting each catalog formula against the resolution
//! engines.
//!
//! Every check compares two degree windows that were produced by different
//! code paths: the left side always comes from a brute-force minimal
//! resolution (Poincare counts, dual-route Bass windows, or the `Hom(F, N)`
//! cocomplex), the right side from the closed formula under test, fed only
//! with inputs the formula's statement mentions.  A window mismatch anywhere
//! in the compared range fails the fixture.

use num_bigint::BigInt;

use crate::classtable::{ClassId, RingInvariants};
use crate::field::Field;
use crate::galg::appendix::{appendix_series, Formula, FormulaInput};
use crate::galg::{
    exterior, table_algebra, tensor, trivial_ext, GalgError, GradedAlgebra, GradedModule,
};
use crate::powser::{LaurentPoly, RationalSeries};

use super::{bass_module_oracle, bass_oracle, poincare_oracle, ResolveError};

/// Outcome of one fixture: the formula, a label describing the input, and
/// the two window expansions that were compared.
#[derive(Debug, Clone)]
pub struct FormulaCheck {
    pub formula: Formula,
    pub label: String,
    pub ok: bool,
    pub lhs: String,
    pub rhs: String,
}

fn window_str(p: &LaurentPoly, lo: i64, hi: i64) -> String {
    let cs: Vec<String> = (lo..=hi).map(|d| p.coeff(d).to_string()).collect();
    format!("t^{lo}.. [{}]", cs.join(" "))
}

fn series_window(s: &RationalSeries, lo: i64, hi: i64) -> LaurentPoly {
    let terms: Vec<(i64, BigInt)> = (lo..=hi).zip(s.taylor(lo, hi)).collect();
    LaurentPoly::from_big_terms(terms)
}

fn check(
    formula: Formula,
    label: String,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    lo: i64,
    hi: i64,
) -> FormulaCheck {
    let ok = (lo..=hi).all(|d| lhs.coeff(d) == rhs.coeff(d));
    FormulaCheck {
        formula,
        label,
        ok,
        lhs: window_str(lhs, lo, hi),
        rhs: window_str(rhs, lo, hi),
    }
}

fn exterior_shapes() -> Vec<Vec<u32>> {
    vec![
        vec![1],
        vec![1, 1],
        vec![1, 1, 1],
        vec![3],
        vec![1, 3],
        vec![3, 3],
        vec![1, 1, 3],
        vec![1, 3, 3],
        vec![3, 3, 3],
    ]
}

/// `k ⋉ W` with `W` trivially graded by `dims` starting in degree 1.
fn null_ext<F: Field>(f: &F, dims: &[usize]) -> Result<GradedAlgebra<F>, GalgError> {
    let c = exterior(f.clone(), &[])?;
    let w = c.zero_action_module(1, dims.to_vec());
    trivial_ext(&c, &w)
}

fn h_w(dims: &[usize]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (k, &d) in dims.iter().enumerate() {
        if d > 0 {
            p = p.add(&LaurentPoly::monomial(k as i64 + 1, d as i64));
        }
    }
    p
}

/// `C ⋉ Σ^s C^*` over `C = k ⋉ W`.
fn double_null<F: Field>(f: &F, dims: &[usize], s: i64) -> Result<GradedAlgebra<F>, GalgError> {
    let c = null_ext(f, dims)?;
    let w = c.suspend(&c.dual(&c.free_module(), 0), s);
    trivial_ext(&c, &w)
}

fn table_t<F: Field>(f: &F) -> Result<GradedAlgebra<F>, GalgError> {
    let inv = RingInvariants { e: 4, d: 1, h: 1, l: 2, m: 4, n: 2, p: 3, q: 0, r: 0 };
    table_algebra(ClassId::T, &inv, f.clone())
}

fn table_h21<F: Field>(f: &F) -> Result<GradedAlgebra<F>, GalgError> {
    let inv = RingInvariants { e: 3, d: 0, h: 1, l: 2, m: 3, n: 1, p: 2, q: 1, r: 1 };
    table_algebra(ClassId::H(2, 1), &inv, f.clone())
}

/// Small algebras exercising every branch of the catalog: exterior algebras,
/// trivial extensions of the field, a double extension, a truncation, and
/// two classification-table algebras.
pub fn zoo_algebras<F: Field>(field: &F) -> Result<Vec<(String, GradedAlgebra<F>)>, GalgError> {
    let mut out: Vec<(String, GradedAlgebra<F>)> = Vec::new();
    for shape in [vec![1], vec![1, 1], vec![1, 1, 1], vec![3], vec![1, 3]] {
        out.push((format!("exterior{shape:?}"), exterior(field.clone(), &shape)?));
    }
    for dims in [vec![1usize], vec![2], vec![1, 1], vec![0, 1]] {
        out.push((format!("null{dims:?}"), null_ext(field, &dims)?));
    }
    out.push(("double_null[1]s2".into(), double_null(field, &[1], 2)?));
    out.push((
        "truncated_exterior".into(),
        crate::galg::truncate(&exterior(field.clone(), &[1, 1, 1])?, 2)?,
    ));
    out.push(("table_T".into(), table_t(field)?));
    out.push(("table_H21".into(), table_h21(field)?));
    Ok(out)
}

fn po_k_window<F: Field>(
    b: &GradedAlgebra<F>,
    n: i64,
) -> Result<LaurentPoly, ResolveError> {
    let k = b.zero_action_module(0, vec![1]);
    poincare_oracle(b, &k, n)
}

/// Ratio of two oracle windows as a series window on `[lo, hi]`; the
/// denominator window must start with a unit constant term.
fn ratio_window(
    num: &LaurentPoly,
    den: &LaurentPoly,
    lo: i64,
    hi: i64,
) -> Result<LaurentPoly, ResolveError> {
    let r = RationalSeries::new(num.clone(), den.clone())?;
    Ok(series_window(&r, lo, hi))
}

fn run_shift<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    #[allow(clippy::type_complexity)]
    let configs: Vec<(String, GradedAlgebra<F>, GradedModule<F>, i64)> = {
        let mut v = Vec::new();
        let shapes: Vec<(GradedAlgebra<F>, &str)> = vec![
            (exterior(f.clone(), &[1])?, "E[1]"),
            (exterior(f.clone(), &[1, 1])?, "E[1,1]"),
            (exterior(f.clone(), &[1, 1, 1])?, "E[1,1,1]"),
            (exterior(f.clone(), &[3])?, "E[3]"),
            (null_ext(f, &[1])?, "N[1]"),
            (null_ext(f, &[1, 1])?, "N[1,1]"),
        ];
        for (b, name) in &shapes {
            let k = b.zero_action_module(0, vec![1]);
            v.push((format!("{name} k s=1"), b.clone(), k, 1i64));
            v.push((format!("{name} aug s=1"), b.clone(), b.aug_ideal(), 1));
        }
        let (e1, _) = &shapes[0];
        v.push(("E[1] k s=2".into(), e1.clone(), e1.zero_action_module(0, vec![1]), 2));
        let (e2, _) = &shapes[1];
        v.push(("E[1,1] k s=-1".into(), e2.clone(), e2.zero_action_module(0, vec![1]), -1));
        v
    };
    let mut out = Vec::new();
    for (label, b, m, s) in configs {
        let shifted = b.suspend(&m, s);
        // Poincare half.
        let lhs = poincare_oracle(&b, &shifted, deg + s.max(0))?;
        let po_n = RationalSeries::from_poly(poincare_oracle(&b, &m, deg + s.abs())?);
        let rhs = appendix_series(&FormulaInput::<F>::Shift { series: &po_n, s })?;
        out.push(check(
            Formula::Shift,
            format!("Po {label}"),
            &lhs,
            &series_window(&rhs, m.lo + s, deg),
            m.lo + s,
            deg,
        ));
        // Bass half: I(suspension) = t^{-s} I(N).
        let lhs = bass_module_oracle(&b, &shifted, deg)?;
        let bass_n = RationalSeries::from_poly(bass_module_oracle(&b, &m, deg + s.abs())?);
        let rhs = appendix_series(&FormulaInput::<F>::Shift { series: &bass_n, s: -s })?;
        let lo = -(m.hi() + s.max(0));
        let hi = deg - s.abs();
        out.push(check(
            Formula::Shift,
            format!("I {label}"),
            &lhs,
            &series_window(&rhs, lo, hi),
            lo,
            hi,
        ));
    }
    Ok(out)
}

fn run_dual<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut configs: Vec<(String, GradedAlgebra<F>, GradedModule<F>)> = Vec::new();
    for shape in exterior_shapes().into_iter().take(5) {
        let b = exterior(f.clone(), &shape)?;
        configs.push((format!("E{shape:?} free"), b.clone(), b.free_module()));
        if shape.len() >= 2 {
            configs.push((format!("E{shape:?} aug"), b.clone(), b.aug_ideal()));
        }
    }
    for dims in [vec![1usize], vec![2], vec![1, 1]] {
        let b = null_ext(f, &dims)?;
        configs.push((format!("N{dims:?} free"), b.clone(), b.free_module()));
    }
    let b = double_null(f, &[1], 2)?;
    configs.push(("double_null free".into(), b.clone(), b.free_module()));

    let mut out = Vec::new();
    for (label, b, m) in configs {
        let dual = b.dual(&m, 0);
        // Po(N^*) = I(N).
        let lhs = poincare_oracle(&b, &dual, deg)?;
        let i_n = RationalSeries::from_poly(bass_module_oracle(&b, &m, deg)?);
        let rhs = appendix_series(&FormulaInput::<F>::Dual { bass_n: &i_n })?;
        out.push(check(
            Formula::Dual,
            format!("Po-dual {label}"),
            &lhs,
            &series_window(&rhs, -m.hi(), deg),
            -m.hi(),
            deg,
        ));
        // I(N^*) = Po(N).
        let lhs = bass_module_oracle(&b, &dual, deg)?;
        let po_n = RationalSeries::from_poly(poincare_oracle(&b, &m, deg)?);
        let rhs = appendix_series(&FormulaInput::<F>::Dual { bass_n: &po_n })?;
        out.push(check(
            Formula::Dual,
            format!("I-dual {label}"),
            &lhs,
            &series_window(&rhs, m.lo, deg),
            m.lo,
            deg,
        ));
    }
    Ok(out)
}

fn run_maximal_p<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    let mut algs: Vec<(String, GradedAlgebra<F>)> = Vec::new();
    for shape in exterior_shapes().into_iter().take(5) {
        algs.push((format!("E{shape:?}"), exterior(f.clone(), &shape)?));
    }
    algs.push(("N[1]".into(), null_ext(f, &[1])?));
    algs.push(("N[1,1]".into(), null_ext(f, &[1, 1])?));
    for (name, b) in algs {
        for s in [1i64, 2] {
            // 0 -> B_{>=s} -> B -> B/B_{>=s} -> 0 with a single free cover.
            let n = b.upper_ideal(s)?;
            let m = b.quotient_upper(s)?;
            let lhs = poincare_oracle(&b, &n, deg)?;
            let po_m = RationalSeries::from_poly(poincare_oracle(&b, &m, deg + 1)?);
            let h = LaurentPoly::one();
            let rhs =
                appendix_series(&FormulaInput::<F>::MaximalP { po_m: &po_m, h_cover: &h })?;
            out.push(check(
                Formula::MaximalP,
                format!("{name} s={s}"),
                &lhs,
                &series_window(&rhs, 0, deg),
                0,
                deg,
            ));
        }
    }
    Ok(out)
}

fn run_kunneth<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let pairs: Vec<(String, GradedAlgebra<F>, GradedAlgebra<F>)> = vec![
        ("E[1]xE[1]".into(), exterior(f.clone(), &[1])?, exterior(f.clone(), &[1])?),
        ("E[1]xE[1,1]".into(), exterior(f.clone(), &[1])?, exterior(f.clone(), &[1, 1])?),
        ("E[1,1]xE[1,1]".into(), exterior(f.clone(), &[1, 1])?, exterior(f.clone(), &[1, 1])?),
        ("E[1]xE[3]".into(), exterior(f.clone(), &[1])?, exterior(f.clone(), &[3])?),
        ("E[3]xE[3]".into(), exterior(f.clone(), &[3])?, exterior(f.clone(), &[3])?),
        ("E[1]xN[1]".into(), exterior(f.clone(), &[1])?, null_ext(f, &[1])?),
        ("N[1]xN[1]".into(), null_ext(f, &[1])?, null_ext(f, &[1])?),
        ("N[2]xE[1]".into(), null_ext(f, &[2])?, exterior(f.clone(), &[1])?),
        ("N[1,1]xE[1]".into(), null_ext(f, &[1, 1])?, exterior(f.clone(), &[1])?),
        ("N[1]xN[2]".into(), null_ext(f, &[1])?, null_ext(f, &[2])?),
        ("E[1,3]xN[1]".into(), exterior(f.clone(), &[1, 3])?, null_ext(f, &[1])?),
        ("E[1,1]xN[0,1]".into(), exterior(f.clone(), &[1, 1])?, null_ext(f, &[0, 1])?),
    ];
    let mut out = Vec::new();
    for (label, c, d) in pairs {
        let b = tensor(&c, &d)?;
        let (tc, td) = (c.top_nonzero() as i64, d.top_nonzero() as i64);
        // Poincare half with M = k ⊗ k.
        let lhs = po_k_window(&b, deg)?;
        let po_c = RationalSeries::from_poly(po_k_window(&c, deg)?);
        let po_d = RationalSeries::from_poly(po_k_window(&d, deg)?);
        let rhs = appendix_series(&FormulaInput::<F>::Kunneth { left: &po_c, right: &po_d })?;
        out.push(check(
            Formula::Kunneth,
            format!("Po {label}"),
            &lhs,
            &series_window(&rhs, 0, deg),
            0,
            deg,
        ));
        // Bass half with M = B^* = C^* ⊗ D^*.
        let lhs = bass_oracle(&b, deg)?;
        let i_c = RationalSeries::from_poly(bass_oracle(&c, deg + td)?);
        let i_d = RationalSeries::from_poly(bass_oracle(&d, deg + tc)?);
        let rhs = appendix_series(&FormulaInput::<F>::Kunneth { left: &i_c, right: &i_d })?;
        out.push(check(
            Formula::Kunneth,
            format!("I {label}"),
            &lhs,
            &series_window(&rhs, -(tc + td), deg),
            -(tc + td),
            deg,
        ));
    }
    Ok(out)
}

fn null_w_shapes() -> Vec<Vec<usize>> {
    vec![
        vec![1],
        vec![2],
        vec![3],
        vec![1, 1],
        vec![2, 1],
        vec![1, 2],
        vec![1, 1, 1],
        vec![2, 0, 1],
        vec![0, 1],
        vec![0, 2],
        vec![0, 0, 1],
        vec![1, 0, 2],
    ]
}

fn run_null_p<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    for dims in null_w_shapes() {
        let b = null_ext(f, &dims)?;
        let lhs = po_k_window(&b, deg)?;
        let h = h_w(&dims);
        let rhs = appendix_series(&FormulaInput::<F>::NullP { h_w: &h })?;
        out.push(check(
            Formula::NullP,
            format!("W={dims:?}"),
            &lhs,
            &series_window(&rhs, 0, deg),
            0,
            deg,
        ));
    }
    Ok(out)
}

fn run_null_i<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    for dims in null_w_shapes() {
        let b = null_ext(f, &dims)?;
        let lhs = bass_oracle(&b, deg)?;
        let h = h_w(&dims);
        let ratio = appendix_series(&FormulaInput::<F>::NullI { h_w: &h })?;
        let po = appendix_series(&FormulaInput::<F>::NullP { h_w: &h })?;
        let rhs = ratio.mul(&po);
        let lo = -(dims.len() as i64);
        out.push(check(
            Formula::NullI,
            format!("W={dims:?}"),
            &lhs,
            &series_window(&rhs, lo, deg),
            lo,
            deg,
        ));
    }
    Ok(out)
}

fn run_exterior_p<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut shapes = exterior_shapes();
    shapes.push(vec![5]);
    shapes.push(vec![1, 5]);
    shapes.push(vec![3, 5]);
    let mut out = Vec::new();
    for shape in shapes {
        let b = exterior(f.clone(), &shape)?;
        let lhs = po_k_window(&b, deg)?;
        let rhs = appendix_series(&FormulaInput::<F>::ExteriorP { degrees: &shape })?;
        out.push(check(
            Formula::ExteriorP,
            format!("E{shape:?}"),
            &lhs,
            &series_window(&rhs, 0, deg),
            0,
            deg,
        ));
    }
    Ok(out)
}

fn run_exterior_i<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut algs: Vec<(String, GradedAlgebra<F>)> = Vec::new();
    for shape in exterior_shapes() {
        algs.push((format!("E{shape:?}"), exterior(f.clone(), &shape)?));
    }
    algs.push(("double_null[1]s2".into(), double_null(f, &[1], 2)?));
    algs.push(("double_null[1]s3".into(), double_null(f, &[1], 3)?));
    algs.push(("double_null[2]s2".into(), double_null(f, &[2], 2)?));
    let mut out = Vec::new();
    for (label, b) in algs {
        let s = b.top_nonzero() as i64;
        let lhs = bass_oracle(&b, deg)?;
        let rhs = appendix_series(&FormulaInput::<F>::ExteriorI { b: &b })?;
        out.push(check(
            Formula::ExteriorI,
            label,
            &lhs,
            &series_window(&rhs, -s, deg),
            -s,
            deg,
        ));
    }
    Ok(out)
}

fn run_trivial_p<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    enum W {
        Aug,
        Upper(i64),
        Zero(i64, Vec<usize>),
        ShiftFree(i64),
    }
    let configs: Vec<(&str, GradedAlgebra<F>, W)> = vec![
        ("E[1] aug", exterior(f.clone(), &[1])?, W::Aug),
        ("E[1] free+1", exterior(f.clone(), &[1])?, W::ShiftFree(1)),
        ("E[1] z(1,[2])", exterior(f.clone(), &[1])?, W::Zero(1, vec![2])),
        ("E[1,1] aug", exterior(f.clone(), &[1, 1])?, W::Aug),
        ("E[1,1] upper2", exterior(f.clone(), &[1, 1])?, W::Upper(2)),
        ("E[1,1] free+2", exterior(f.clone(), &[1, 1])?, W::ShiftFree(2)),
        ("E[3] aug", exterior(f.clone(), &[3])?, W::Aug),
        ("N[1] aug", null_ext(f, &[1])?, W::Aug),
        ("N[1] z(1,[1,1])", null_ext(f, &[1])?, W::Zero(1, vec![1, 1])),
        ("N[2] aug", null_ext(f, &[2])?, W::Aug),
        ("E[1,3] upper2", exterior(f.clone(), &[1, 3])?, W::Upper(2)),
        ("N[1,1] z(2,[2])", null_ext(f, &[1, 1])?, W::Zero(2, vec![2])),
    ];
    let mut out = Vec::new();
    for (label, c, w) in configs {
        let w = match w {
            W::Aug => c.aug_ideal(),
            W::Upper(s) => c.upper_ideal(s)?,
            W::Zero(lo, dims) => c.zero_action_module(lo, dims),
            W::ShiftFree(s) => c.suspend(&c.free_module(), s),
        };
        let b = trivial_ext(&c, &w)?;
        let lhs = po_k_window(&b, deg)?;
        let po_c_k = RationalSeries::from_poly(po_k_window(&c, deg)?);
        let po_c_w = RationalSeries::from_poly(poincare_oracle(&c, &w, deg)?);
        let rhs =
            appendix_series(&FormulaInput::<F>::TrivialP { po_c_k: &po_c_k, po_c_w: &po_c_w })?;
        out.push(check(
            Formula::TrivialP,
            label.into(),
            &lhs,
            &series_window(&rhs, 0, deg),
            0,
            deg,
        ));
    }
    Ok(out)
}

fn double_null_configs() -> Vec<(Vec<usize>, i64)> {
    vec![
        (vec![1], 2),
        (vec![1], 3),
        (vec![2], 2),
        (vec![2], 3),
        (vec![3], 2),
        (vec![1, 1, 1], 4),
        (vec![1, 1], 3),
        (vec![2, 1], 3),
        (vec![1, 2], 3),
        (vec![0, 1], 3),
        (vec![0, 2], 3),
        (vec![2], 4),
    ]
}

fn run_null2_p<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    for (dims, s) in double_null_configs() {
        let b = double_null(f, &dims, s)?;
        let lhs = po_k_window(&b, deg)?;
        let h = h_w(&dims);
        let rhs = appendix_series(&FormulaInput::<F>::Null2P { h_w: &h, s })?;
        out.push(check(
            Formula::Null2P,
            format!("W={dims:?} s={s}"),
            &lhs,
            &series_window(&rhs, 0, deg),
            0,
            deg,
        ));
    }
    Ok(out)
}

fn run_null2_i<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    for (dims, s) in double_null_configs() {
        let b = double_null(f, &dims, s)?;
        let lhs = bass_oracle(&b, deg)?;
        let h = h_w(&dims);
        let ratio = appendix_series(&FormulaInput::<F>::Null2I { h_w: &h, s })?;
        let po = appendix_series(&FormulaInput::<F>::Null2P { h_w: &h, s })?;
        let rhs = ratio.mul(&po);
        out.push(check(
            Formula::Null2I,
            format!("W={dims:?} s={s}"),
            &lhs,
            &series_window(&rhs, -s, deg),
            -s,
            deg,
        ));
    }
    Ok(out)
}

fn run_syzygy_c<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut out = Vec::new();
    for (label, b) in zoo_algebras(f)? {
        let top = b.top_nonzero() as i64;
        let hi = deg - top;
        // I(B_+)/Po(k) from the independent Hom cocomplex route.
        let i_plus = bass_module_oracle(&b, &b.aug_ideal(), deg)?;
        let po = po_k_window(&b, deg)?;
        let ratio_in = RationalSeries::new(i_plus, po.clone())?;
        let rhs = appendix_series(&FormulaInput::<F>::SyzygyC {
            b: &b,
            bass_bplus_ratio: &ratio_in,
        })?;
        // I_B/Po(k) from the dual-route Bass window.
        let lhs = ratio_window(&bass_oracle(&b, deg)?, &po, -top, hi)?;
        out.push(check(
            Formula::SyzygyC,
            label,
            &lhs,
            &series_window(&rhs, -top, hi),
            -top,
            hi,
        ));
    }
    Ok(out)
}

fn run_trivial_i<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let configs: Vec<(&str, GradedAlgebra<F>, i64, Vec<usize>)> = vec![
        ("E[1] z(1,[1])", exterior(f.clone(), &[1])?, 1, vec![1]),
        ("E[1] z(2,[1])", exterior(f.clone(), &[1])?, 2, vec![1]),
        ("E[1] z(1,[2])", exterior(f.clone(), &[1])?, 1, vec![2]),
        ("E[1,1] z(1,[1])", exterior(f.clone(), &[1, 1])?, 1, vec![1]),
        ("E[1,1] z(3,[2])", exterior(f.clone(), &[1, 1])?, 3, vec![2]),
        ("E[3] z(1,[1,1])", exterior(f.clone(), &[3])?, 1, vec![1, 1]),
        ("E[3] z(2,[3])", exterior(f.clone(), &[3])?, 2, vec![3]),
        ("N[1] z(1,[1])", null_ext(f, &[1])?, 1, vec![1]),
        ("N[2] z(2,[1])", null_ext(f, &[2])?, 2, vec![1]),
        ("N[1,1] z(1,[2])", null_ext(f, &[1, 1])?, 1, vec![2]),
        ("E[1,3] z(1,[1])", exterior(f.clone(), &[1, 3])?, 1, vec![1]),
        ("E[1,1,1] z(2,[2])", exterior(f.clone(), &[1, 1, 1])?, 2, vec![2]),
    ];
    let mut out = Vec::new();
    for (label, c, lo, dims) in configs {
        let w = c.zero_action_module(lo, dims.clone());
        let b = trivial_ext(&c, &w)?;
        let top_c = c.top_nonzero() as i64;
        let top_b = b.top_nonzero() as i64;
        let hi = deg - top_b;
        // I_C/Po_C(k) from oracle windows.
        let po_c = po_k_window(&c, deg + top_c)?;
        let ratio_c = RationalSeries::new(bass_oracle(&c, deg + top_c)?, po_c)?;
        let rhs = appendix_series(&FormulaInput::<F>::TrivialI {
            c: &c,
            w: &w,
            bass_ratio_c: &ratio_c,
        })?;
        let lhs = ratio_window(
            &bass_oracle(&b, deg + top_b)?,
            &po_k_window(&b, deg + top_b)?,
            -top_b,
            hi,
        )?;
        out.push(check(
            Formula::TrivialI,
            label.into(),
            &lhs,
            &series_window(&rhs, -top_b, hi),
            -top_b,
            hi,
        ));
    }
    Ok(out)
}

fn run_truncated_i<F: Field>(f: &F, deg: i64) -> Result<Vec<FormulaCheck>, ResolveError> {
    let mut algs: Vec<(String, GradedAlgebra<F>)> = Vec::new();
    for shape in exterior_shapes().into_iter().filter(|s| s.len() >= 2) {
        algs.push((format!("E{shape:?}"), exterior(f.clone(), &shape)?));
    }
    algs.push(("double_null[1]s2".into(), double_null(f, &[1], 2)?));
    algs.push(("double_null[2]s3".into(), double_null(f, &[2], 3)?));
    algs.push(("double_null[1,1]s3".into(), double_null(f, &[1, 1], 3)?));
    let mut out = Vec::new();
    for (label, e) in algs {
        let s = e.top_nonzero() as i64;
        let b = crate::galg::truncate(&e, s)?;
        let top_b = b.top_nonzero() as i64;
        let hi = deg - s;
        let po_b = po_k_window(&b, deg + s + 1)?;
        let po_b_series = RationalSeries::from_poly(po_b.clone());
        let rhs =
            appendix_series(&FormulaInput::<F>::TruncatedI { e: &e, s, po_b_k: &po_b_series })?;
        let lhs = ratio_window(&bass_oracle(&b, deg)?, &po_b, -top_b, hi)?;
        out.push(check(
            Formula::TruncatedI,
            format!("{label} s={s}"),
            &lhs,
            &series_window(&rhs, -top_b, hi),
            -top_b,
            hi,
        ));
    }
    Ok(out)
}

/// Runs every fixture registered for `formula`, comparing oracle windows
/// against the catalog transform through degree `degree`.
pub fn verify_formula<F: Field>(
    field: &F,
    formula: Formula,
    degree: i64,
) -> Result<Vec<FormulaCheck>, ResolveError> {
    match formula {
        Formula::Shift => run_shift(field, degree),
        Formula::Dual => run_dual(field, degree),
        Formula::MaximalP => run_maximal_p(field, degree),
        Formula::Kunneth => run_kunneth(field, degree),
        Formula::NullP => run_null_p(field, degree),
        Formula::NullI => run_null_i(field, degree),
        Formula::ExteriorP => run_exterior_p(field, degree),
        Formula::ExteriorI => run_exterior_i(field, degree),
        Formula::TrivialP => run_trivial_p(field, degree),
        Formula::Null2P => run_null2_p(field, degree),
        Formula::Null2I => run_null2_i(field, degree),
        Formula::SyzygyC => run_syzygy_c(field, degree),
        Formula::TrivialI => run_trivial_i(field, degree),
        Formula::TruncatedI => run_truncated_i(field, degree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn every_formula_has_enough_passing_fixtures() {
        let f = Fp::new(10007).unwrap();
        for formula in Formula::ALL {
            let checks = verify_formula(&f, formula, 6).unwrap();
            assert!(
                checks.len() >= 10,
                "{formula}: only {} fixtures",
                checks.len()
            );
            for c in &checks {
                assert!(
                    c.ok,
                    "{formula} fixture {} disagrees:\n  lhs {}\n  rhs {}",
                    c.label, c.lhs, c.rhs
                );
            }
        }
    }
}
