//! The classification tables as executable data.
//!
//! A local ring of embedding codepth at most 3 falls into one of the classes
//! `C(c)`, `S`, `T`, `B`, `G(r)`, `H(p,q)` according to the multiplicative
//! structure of its Koszul homology algebra `A`. Each class pins down
//! polynomials `f(t), g(t)` with
//!
//! `P^R_k(t) = (1+t)^{e-1} / g(t)` and `I_R(t) = t^d · f(t) / g(t)`,
//!
//! and a list of arithmetic constraints on the invariant tuple
//! `(e,d,c,h,l,m,n,p,q,r)` that any ring of the class must satisfy. This
//! module encodes the class identifiers, the constraint checker, the `f/g`
//! table, and the series assembly, including the degenerate `c = 0` and
//! Gorenstein `G(r)` sub-cases.

use crate::powser::{one_minus_t_pow, one_plus_t_pow, LaurentPoly, PowserError, RationalSeries};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from class and invariant handling.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClasstableError {
    #[error("invalid class parameters: {0}")]
    InvalidClassParams(String),
    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),
    #[error("inadmissible invariants for {class}: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InadmissibleInvariants { class: String, violations: Vec<Violation> },
    #[error("equivalent conditions disagree: {0}")]
    EquivalenceViolation(String),
    #[error("operation requires codepth 3 and a class other than C(3)")]
    WrongClassForReport,
    #[error("cannot parse class id from {0:?}")]
    ParseClass(String),
    #[error(transparent)]
    Series(#[from] PowserError),
}

/// One failed admissibility constraint with its witness values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: String,
    pub witness: String,
}

impl Violation {
    fn new(constraint: &str, witness: String) -> Self {
        Violation { constraint: constraint.to_string(), witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (got {})", self.constraint, self.witness)
    }
}

/// The class of a codepth ≤ 3 local ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// Complete intersection of codimension `c ≥ 0`.
    C(u32),
    /// The codepth-2 non-complete-intersection class.
    S,
    T,
    B,
    /// `G(r)` with `r ≥ 2`.
    G(u32),
    /// `H(p,q)` with `p, q ≥ 0`; `H(0,0)` is the Golod sub-case.
    H(u32, u32),
}

impl ClassId {
    /// Codepth of rings in this class.
    pub fn codepth(&self) -> u32 {
        match *self {
            ClassId::C(c) => c,
            ClassId::S => 2,
            _ => 3,
        }
    }

    /// Validates the parameter ranges of the identifier itself.
    pub fn validate(&self) -> Result<(), ClasstableError> {
        match *self {
            ClassId::C(c) if c > 3 => {
                Err(ClasstableError::InvalidClassParams(format!("C({c}) exceeds codepth 3")))
            }
            ClassId::G(r) if r < 2 => {
                Err(ClasstableError::InvalidClassParams(format!("G({r}) requires r >= 2")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClassId::C(c) => write!(f, "C({c})"),
            ClassId::S => write!(f, "S"),
            ClassId::T => write!(f, "T"),
            ClassId::B => write!(f, "B"),
            ClassId::G(r) => write!(f, "G({r})"),
            ClassId::H(p, q) => write!(f, "H({p},{q})"),
        }
    }
}

impl FromStr for ClassId {
    type Err = ClasstableError;

    /// Accepts `S`, `T`, `B`, `C(3)`/`C3`, `G(2)`/`G2`, `H(2,1)`/`H2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ClasstableError::ParseClass(s.to_string());
        let parse_nums = |body: &str| -> Result<Vec<u32>, ClasstableError> {
            let body = body.trim_start_matches('(').trim_end_matches(')');
            body.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
        };
        let cls = match t.chars().next().ok_or_else(bad)? {
            'S' if t == "S" => ClassId::S,
            'T' if t == "T" => ClassId::T,
            'B' if t == "B" => ClassId::B,
            'C' => {
                let v = parse_nums(&t[1..])?;
                if v.len() != 1 {
                    return Err(bad());
                }
                ClassId::C(v[0])
            }
            'G' => {
                let v = parse_nums(&t[1..])?;
                if v.len() != 1 {
                    return Err(bad());
                }
                ClassId::G(v[0])
            }
            'H' => {
                let v = parse_nums(&t[1..])?;
                if v.len() != 2 {
                    return Err(bad());
                }
                ClassId::H(v[0], v[1])
            }
            _ => return Err(bad()),
        };
        cls.validate()?;
        Ok(cls)
    }
}

/// The invariant tuple `(e, d, c, h, l, m, n, p, q, r)` of a local ring:
/// embedding dimension, depth, codepth `c = e - d`, `h = dim - depth`, and
/// the six ranks read off the Koszul homology algebra `A`:
/// `l = rank A_1 - 1`, `m = rank A_2`, `n = rank A_3`,
/// `p = rank A_1·A_1`, `q = rank A_1·A_2`, `r = rank(δ_2: A_2 → Hom(A_1, A_3))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingInvariants {
    pub e: u32,
    pub d: u32,
    pub h: u32,
    /// `rank A_1 - 1`; equals `-1` exactly for regular rings (`c = 0`).
    pub l: i64,
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl RingInvariants {
    /// Codepth `c = e - d`.
    pub fn c(&self) -> u32 {
        self.e - self.d
    }

    #[allow(clippy::too_many_arguments)]
    pub fn new(
        e: u32,
        d: u32,
        h: u32,
        l: i64,
        m: u32,
        n: u32,
        p: u32,
        q: u32,
        r: u32,
    ) -> Result<Self, ClasstableError> {
        let err = |msg: String| Err(ClasstableError::InvalidInvariants(msg));
        if d > e {
            return err(format!("depth {d} exceeds embedding dimension {e}"));
        }
        let c = e - d;
        if c > 3 {
            return err(format!("codepth {c} exceeds 3"));
        }
        if h > c {
            return err(format!("h = {h} exceeds codepth {c}"));
        }
        if l < -1 || (l == -1 && c != 0) {
            return err(format!("l = {l} invalid for codepth {c}"));
        }
        // rank A_1 = l+1 >= c-h (minimal generators of I vs height considerations)
        if l + 1 < (c - h) as i64 {
            return err(format!("l+1 = {} below c-h = {}", l + 1, c - h));
        }
        if c == 3 && (l + n as i64) != m as i64 {
            return err(format!("m = {m} differs from l+n = {}", l + n as i64));
        }
        if p > m || r > m {
            return err(format!("p = {p} or r = {r} exceeds m = {m}"));
        }
        if q > n {
            return err(format!("q = {q} exceeds n = {n}"));
        }
        if l >= 0 && (r as i64) > (l + 1) * n as i64 {
            return err(format!("r = {r} exceeds (l+1)n = {}", (l + 1) * n as i64));
        }
        Ok(RingInvariants { e, d, h, l, m, n, p, q, r })
    }

    /// Fills the class-determined entries `(m, p, q, r)` from `(h, l, n)`,
    /// using the minimal realization `e = c`, `d = 0`.
    pub fn for_class(cls: ClassId, h: u32, l: i64, n: u32) -> Result<Self, ClasstableError> {
        cls.validate()?;
        let c = cls.codepth();
        let (m, p, q, r) = match cls {
            ClassId::C(c) => (binom(c, 2), binom(c, 2), binom(c, 3), if c == 3 { 3 } else { 0 }),
            ClassId::S => {
                let m = if l >= 0 { l as u32 } else { 0 };
                (m, 0, 0, 0)
            }
            ClassId::T => ((l + n as i64).max(0) as u32, 3, 0, 0),
            ClassId::B => ((l + n as i64).max(0) as u32, 1, 1, 2),
            ClassId::G(r) => ((l + n as i64).max(0) as u32, 0, 1, r),
            ClassId::H(p, q) => ((l + n as i64).max(0) as u32, p, q, q),
        };
        Self::new(c, 0, h, l, m, n, p, q, r)
    }
}

fn binom(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc as u32
}

/// Outcome of the admissibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub ok: bool,
    /// Set when the tuple is the Gorenstein member of `G(r)` (`n = 1`,
    /// `r = l + 1`, `l` even ≥ 4).
    pub gorenstein: bool,
    /// Complete intersection (class `C(c)`).
    pub complete_intersection: bool,
    /// Golod ring (class `S` or `H(0,0)`).
    pub golod: bool,
    pub violations: Vec<Violation>,
}

/// Checks the per-class constraint table plus the special-case exclusion
/// lists for `l = 2`, `(l, h) = (3, 0)` and `(h, n) = (0, 2)`.
pub fn admissible(cls: ClassId, inv: &RingInvariants) -> AdmissibilityVerdict {
    let mut v: Vec<Violation> = Vec::new();
    let mut gorenstein = false;
    let c = inv.c();
    let (h, l, m, n, p, q, r) =
        (inv.h as i64, inv.l, inv.m as i64, inv.n as i64, inv.p as i64, inv.q as i64, inv.r as i64);

    if let Err(e) = cls.validate() {
        v.push(Violation::new("class parameters", e.to_string()));
    }
    if c != cls.codepth() {
        v.push(Violation::new("codepth matches class", format!("c = {c} for {cls}")));
    }

    let mut require = |name: &str, ok: bool, witness: String| {
        if !ok {
            v.push(Violation::new(name, witness));
        }
    };

    match cls {
        ClassId::C(cc) => {
            let cc = cc as i64;
            require("h = 0", h == 0, format!("h = {h}"));
            require("l = c-1", l == cc - 1, format!("l = {l}"));
            require("n = binom(c,3)", n == binom(cc as u32, 3) as i64, format!("n = {n}"));
            require("m = binom(c,2)", m == binom(cc as u32, 2) as i64, format!("m = {m}"));
            require("p = binom(c,2)", p == binom(cc as u32, 2) as i64, format!("p = {p}"));
            require("q = binom(c,3)", q == binom(cc as u32, 3) as i64, format!("q = {q}"));
            let want_r = if cc == 3 { 3 } else { 0 };
            require("r matches exterior pairing", r == want_r, format!("r = {r}"));
        }
        ClassId::S => {
            require("h <= 1", h <= 1, format!("h = {h}"));
            require("l >= 2-h", l >= 2 - h, format!("l = {l}, h = {h}"));
            require("n = 0", n == 0, format!("n = {n}"));
            require("m = l", m == l, format!("m = {m}, l = {l}"));
            require("(p,q,r) = (0,0,0)", (p, q, r) == (0, 0, 0), format!("({p},{q},{r})"));
        }
        ClassId::T => {
            require("h <= 1", h <= 1, format!("h = {h}"));
            require("l >= 3-h", l >= 3 - h, format!("l = {l}, h = {h}"));
            require("n >= 2", n >= 2, format!("n = {n}"));
            require("(p,q,r) = (3,0,0)", (p, q, r) == (3, 0, 0), format!("({p},{q},{r})"));
        }
        ClassId::B => {
            require("h <= 1", h <= 1, format!("h = {h}"));
            require("l >= 4-h", l >= 4 - h, format!("l = {l}, h = {h}"));
            require("n >= 2-h", n >= 2 - h, format!("n = {n}, h = {h}"));
            require("(p,q,r) = (1,1,2)", (p, q, r) == (1, 1, 2), format!("({p},{q},{r})"));
        }
        ClassId::G(rr) => {
            let rr = rr as i64;
            require("r matches G(r)", r == rr, format!("r = {r}"));
            require("(p,q) = (0,1)", (p, q) == (0, 1), format!("({p},{q})"));
            if n == 1 && r == l + 1 {
                // Gorenstein sub-case: Poincare duality forces l even >= 4.
                gorenstein = true;
                require("Gorenstein G: h = 0", h == 0, format!("h = {h}"));
                require("Gorenstein G: l even", l % 2 == 0, format!("l = {l}"));
                require("Gorenstein G: l >= 4", l >= 4, format!("l = {l}"));
            } else {
                require("h <= 1", h <= 1, format!("h = {h}"));
                require(
                    "l >= max(4-h, r+1)",
                    l >= (4 - h).max(rr + 1),
                    format!("l = {l}, h = {h}, r = {rr}"),
                );
                require("n >= 2-h", n >= 2 - h, format!("n = {n}, h = {h}"));
            }
        }
        ClassId::H(pp, qq) => {
            let (pp, qq) = (pp as i64, qq as i64);
            require("(p,q) matches H(p,q)", (p, q) == (pp, qq), format!("({p},{q})"));
            require("r = q", r == qq, format!("r = {r}, q = {qq}"));
            require("h <= 2", h <= 2, format!("h = {h}"));
            if h == 2 {
                require("h = 2 only for H(0,0)", (p, q) == (0, 0), format!("({p},{q})"));
            }
            require(
                "l >= max(3-h, p, q+1, 2)",
                l >= (3 - h).max(pp).max(qq + 1).max(2),
                format!("l = {l}, h = {h}"),
            );
            require(
                "n >= max(2-h, p-1, q, 1)",
                n >= (2 - h).max(pp - 1).max(qq).max(1),
                format!("n = {n}, h = {h}"),
            );
            // The three conditions of the syzygy corollary are equivalent;
            // a tuple satisfying only some of them is unrealizable.
            let c1 = l == q + 1;
            let c2 = l == p && n == q;
            let c3 = n == p - 1;
            require(
                "l = q+1, (l,n) = (p,q), n = p-1 all equivalent",
                c1 == c2 && c2 == c3,
                format!("l = {l}, n = {n}, p = {p}, q = {q}"),
            );
        }
    }

    // Exhaustive case lists for small l at h = 0 and for n = 2.
    if c == 3 && l == 2 && h == 0 && cls != ClassId::C(3) {
        v.push(Violation::new("l = 2, h = 0 occurs only for C(3)", format!("class {cls}")));
    }
    if c == 3 && l == 3 && h == 0 {
        let ok = match cls {
            ClassId::T => n >= 3 && n % 2 == 1,
            ClassId::H(3, 2) => n == 2,
            ClassId::H(3, 0) => n >= 4 && n % 2 == 0,
            _ => false,
        };
        if !ok {
            v.push(Violation::new(
                "l = 3, h = 0 occurs only for H(3,2) n=2, T odd n>=3, H(3,0) even n>=4",
                format!("class {cls}, n = {n}"),
            ));
        }
    }
    if c == 3 && h == 0 && n == 2 && l >= 4 && p > 0 {
        let ok = match cls {
            ClassId::B => l % 2 == 0,
            ClassId::H(1, 2) => l % 2 == 1,
            _ => false,
        };
        if !ok {
            v.push(Violation::new(
                "h = 0, n = 2, l >= 4, p > 0 occurs only for B (l even) or H(1,2) (l odd)",
                format!("class {cls}, l = {l}"),
            ));
        }
    }

    AdmissibilityVerdict {
        ok: v.is_empty(),
        gorenstein,
        complete_intersection: matches!(cls, ClassId::C(_)),
        golod: cls == ClassId::S || cls == ClassId::H(0, 0),
        violations: v,
    }
}

/// The numerator/denominator pair `(f, g)` of the class row.
///
/// With `force` the table row is assembled even for inadmissible invariants
/// (exploratory use); otherwise inadmissibility is an error.
pub fn fg_polys(
    cls: ClassId,
    inv: &RingInvariants,
    force: bool,
) -> Result<(LaurentPoly, LaurentPoly), ClasstableError> {
    if !force {
        let verdict = admissible(cls, inv);
        if !verdict.ok {
            return Err(ClasstableError::InadmissibleInvariants {
                class: cls.to_string(),
                violations: verdict.violations,
            });
        }
    }
    let l = inv.l;
    let n = inv.n as i64;
    let pair = match cls {
        ClassId::C(0) => (LaurentPoly::one(), LaurentPoly::one()),
        ClassId::C(c) => {
            let g = one_minus_t_pow(c).mul(&one_plus_t_pow(c - 1));
            (g.clone(), g)
        }
        ClassId::S => (
            LaurentPoly::from_terms(&[(0, l), (1, 1), (2, -1)]),
            LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l)]),
        ),
        ClassId::T => (
            LaurentPoly::from_terms(&[(0, n), (1, l), (2, -2), (3, -1), (4, 1)]),
            LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l), (3, -(n - 3)), (5, -1)]),
        ),
        ClassId::B => (
            LaurentPoly::from_terms(&[(0, n), (1, l - 2), (2, -1), (4, 1)]),
            LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l), (3, -(n - 1)), (4, 1)]),
        ),
        ClassId::G(r) => {
            let r = r as i64;
            (
                LaurentPoly::from_terms(&[(0, n), (1, l - r), (2, -(r - 1)), (3, -1), (4, 1)]),
                LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l), (3, -n), (4, 1)]),
            )
        }
        ClassId::H(0, 0) => (
            LaurentPoly::from_terms(&[(0, n), (1, l), (2, 1), (3, -1)]),
            LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l), (3, -n)]),
        ),
        ClassId::H(p, q) => {
            let (p, q) = (p as i64, q as i64);
            (
                LaurentPoly::from_terms(&[(0, n), (1, l - q), (2, -p), (3, -1), (4, 1)]),
                LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -l), (3, -(n - p)), (4, q)]),
            )
        }
    };
    Ok(pair)
}

/// `I_R(t) = t^d · f(t)/g(t)`.
pub fn bass_series(
    cls: ClassId,
    inv: &RingInvariants,
    force: bool,
) -> Result<RationalSeries, ClasstableError> {
    let (f, g) = fg_polys(cls, inv, force)?;
    Ok(RationalSeries::new(f.shift(inv.d as i64), g)?)
}

/// `P^R_k(t) = (1+t)^{e-1} / g(t)`; the regular case `c = 0` degenerates to
/// `(1+t)^e` directly.
pub fn poincare_series(
    cls: ClassId,
    inv: &RingInvariants,
    force: bool,
) -> Result<RationalSeries, ClasstableError> {
    if cls == ClassId::C(0) {
        return Ok(RationalSeries::from_poly(one_plus_t_pow(inv.e)));
    }
    let (_, g) = fg_polys(cls, inv, force)?;
    Ok(RationalSeries::new(one_plus_t_pow(inv.e.saturating_sub(1)), g)?)
}

/// `P^R_k = (1+t)^e · P^A_k`.
pub fn lift_poincare(pak: &RationalSeries, e: u32) -> RationalSeries {
    pak.mul_poly(&one_plus_t_pow(e))
}

/// `I_R = t^e · I_A`.
pub fn lift_bass(ia: &RationalSeries, e: u32) -> RationalSeries {
    ia.shift(e as i64)
}

/// Which of the three equivalent syzygy-corollary conditions hold:
/// (i) `l = q+1`, (ii) `l = p` and `n = q`, (iii) class `H(p,q)` with
/// `n = p-1`. They must agree; disagreement flags inconsistent input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorClassReport {
    pub l_eq_q_plus_1: bool,
    pub l_eq_p_and_n_eq_q: bool,
    pub h_with_n_eq_p_minus_1: bool,
}

pub fn cor_class_report(
    cls: ClassId,
    inv: &RingInvariants,
) -> Result<CorClassReport, ClasstableError> {
    if inv.c() != 3 || cls == ClassId::C(3) || cls.codepth() != 3 {
        return Err(ClasstableError::WrongClassForReport);
    }
    let (l, n, p, q) = (inv.l, inv.n as i64, inv.p as i64, inv.q as i64);
    let c1 = l == q + 1;
    let c2 = l == p && n == q;
    let c3 = matches!(cls, ClassId::H(_, _)) && n == p - 1;
    if c1 != c2 || c2 != c3 {
        return Err(ClasstableError::EquivalenceViolation(format!(
            "conditions (i)={c1}, (ii)={c2}, (iii)={c3} for {cls} with l={l}, n={n}, p={p}, q={q}"
        )));
    }
    Ok(CorClassReport { l_eq_q_plus_1: c1, l_eq_p_and_n_eq_q: c2, h_with_n_eq_p_minus_1: c3 })
}

/// One admissible grid tuple.
#[derive(Debug, Clone)]
pub struct GridEntry {
    pub cls: ClassId,
    pub inv: RingInvariants,
    pub gorenstein: bool,
}

/// Enumerates every admissible tuple with the given parameter caps
/// (`h` ranges over the class rows, `e = c`, `d = 0`). Gorenstein members
/// of `G(r)` are included and flagged.
pub fn admissible_grid(l_max: i64, n_max: u32, r_max: u32, p_max: u32, q_max: u32) -> Vec<GridEntry> {
    let mut classes: Vec<ClassId> = vec![ClassId::C(1), ClassId::C(2), ClassId::C(3), ClassId::S, ClassId::T, ClassId::B];
    for r in 2..=r_max {
        classes.push(ClassId::G(r));
    }
    for p in 0..=p_max {
        for q in 0..=q_max {
            classes.push(ClassId::H(p, q));
        }
    }
    let mut grid = Vec::new();
    for cls in classes {
        for h in 0..=2u32 {
            for l in -1..=l_max {
                for n in 0..=n_max {
                    let Ok(inv) = RingInvariants::for_class(cls, h, l, n) else { continue };
                    let verdict = admissible(cls, &inv);
                    if verdict.ok {
                        grid.push(GridEntry { cls, inv, gorenstein: verdict.gorenstein });
                    }
                }
            }
        }
    }
    grid
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn class_parsing_and_display() {
        assert_eq!("C(3)".parse::<ClassId>().unwrap(), ClassId::C(3));
        assert_eq!("C3".parse::<ClassId>().unwrap(), ClassId::C(3));
        assert_eq!("H(2,1)".parse::<ClassId>().unwrap(), ClassId::H(2, 1));
        assert_eq!("H2,1".parse::<ClassId>().unwrap(), ClassId::H(2, 1));
        assert_eq!("G(2)".parse::<ClassId>().unwrap(), ClassId::G(2));
        assert_eq!(ClassId::H(2, 1).to_string(), "H(2,1)");
        assert!("G(1)".parse::<ClassId>().is_err());
        assert!("X".parse::<ClassId>().is_err());
    }

    #[test]
    fn admissibility_examples() {
        // T with l = 2, h = 0 fails the l >= 3-h bound.
        let inv = RingInvariants::new(3, 0, 0, 2, 4, 2, 3, 0, 0).unwrap();
        let verdict = admissible(ClassId::T, &inv);
        assert!(!verdict.ok);
        assert!(verdict.violations.iter().any(|v| v.constraint.contains("3-h") || v.constraint.contains("l = 2")));

        // H(3,2) with n = 2 at l = 3, h = 0 is fine.
        let inv = RingInvariants::new(3, 0, 0, 3, 5, 2, 3, 2, 2).unwrap();
        assert!(admissible(ClassId::H(3, 2), &inv).ok);

        // Gorenstein G(5): l = 4 even, n = 1, r = l+1.
        let inv = RingInvariants::new(3, 0, 0, 4, 5, 1, 0, 1, 5).unwrap();
        let verdict = admissible(ClassId::G(5), &inv);
        assert!(verdict.ok);
        assert!(verdict.gorenstein);

        // Odd l cannot be Gorenstein G.
        let inv = RingInvariants::new(3, 0, 0, 5, 6, 1, 0, 1, 6).unwrap();
        assert!(!admissible(ClassId::G(6), &inv).ok);
    }

    #[test]
    fn special_case_exclusions() {
        // T at l = 3, h = 0 exists only for odd n >= 3.
        for (n, want) in [(2u32, false), (3, true), (4, false), (5, true)] {
            let inv = RingInvariants::for_class(ClassId::T, 0, 3, n).unwrap();
            assert_eq!(admissible(ClassId::T, &inv).ok, want, "T l=3 h=0 n={n}");
        }
        // H(3,0) at l = 3, h = 0 exists only for even n >= 4.
        for (n, want) in [(3u32, false), (4, true), (5, false), (6, true)] {
            let inv = RingInvariants::for_class(ClassId::H(3, 0), 0, 3, n).unwrap();
            assert_eq!(admissible(ClassId::H(3, 0), &inv).ok, want, "H(3,0) l=3 h=0 n={n}");
        }
        // n = 2, h = 0, l >= 4: B needs even l, H(1,2) odd l, T excluded.
        let inv = RingInvariants::for_class(ClassId::B, 0, 4, 2).unwrap();
        assert!(admissible(ClassId::B, &inv).ok);
        let inv = RingInvariants::for_class(ClassId::B, 0, 5, 2).unwrap();
        assert!(!admissible(ClassId::B, &inv).ok);
        let inv = RingInvariants::for_class(ClassId::H(1, 2), 0, 5, 2).unwrap();
        assert!(admissible(ClassId::H(1, 2), &inv).ok);
        let inv = RingInvariants::for_class(ClassId::H(1, 2), 0, 4, 2).unwrap();
        assert!(!admissible(ClassId::H(1, 2), &inv).ok);
        let inv = RingInvariants::for_class(ClassId::T, 0, 4, 2).unwrap();
        assert!(!admissible(ClassId::T, &inv).ok);
        // l = 2, h = 0 is exclusive to C(3).
        let inv = RingInvariants::for_class(ClassId::H(2, 1), 0, 2, 1).unwrap();
        assert!(!admissible(ClassId::H(2, 1), &inv).ok);
        let inv = RingInvariants::for_class(ClassId::H(2, 1), 1, 2, 1).unwrap();
        assert!(admissible(ClassId::H(2, 1), &inv).ok);
    }

    #[test]
    fn fg_table_rows() {
        // S with l = 2.
        let inv = RingInvariants::for_class(ClassId::S, 1, 2, 0).unwrap();
        let (f, g) = fg_polys(ClassId::S, &inv, false).unwrap();
        assert_eq!(f, LaurentPoly::from_terms(&[(0, 2), (1, 1), (2, -1)]));
        assert_eq!(g, LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -2)]));
        // T with l = 2 (h = 1), n = 2.
        let inv = RingInvariants::for_class(ClassId::T, 1, 2, 2).unwrap();
        let (f, g) = fg_polys(ClassId::T, &inv, false).unwrap();
        assert_eq!(f, LaurentPoly::from_terms(&[(0, 2), (1, 2), (2, -2), (3, -1), (4, 1)]));
        assert_eq!(g, LaurentPoly::from_terms(&[(0, 1), (1, -1), (2, -2), (3, 1), (5, -1)]));
        // C(3): f = g = (1-t)^3 (1+t)^2.
        let inv = RingInvariants::for_class(ClassId::C(3), 0, 2, 1).unwrap();
        let (f, g) = fg_polys(ClassId::C(3), &inv, false).unwrap();
        assert_eq!(f, g);
        assert_eq!(g, one_minus_t_pow(3).mul(&one_plus_t_pow(2)));
        // shape check: g(0) = 1, deg g <= 5, and deg f <= 4 on non-CI rows
        for entry in admissible_grid(5, 5, 4, 4, 4) {
            let (f, g) = fg_polys(entry.cls, &entry.inv, false).unwrap();
            assert_eq!(g.coeff(0), BigInt::from(1));
            if matches!(entry.cls, ClassId::C(_)) {
                assert_eq!(f, g);
            } else {
                assert!(f.max_exp().unwrap_or(0) <= 4);
            }
            assert!(g.max_exp().unwrap_or(0) <= 5);
            assert!(f.min_exp().unwrap_or(0) >= 0 && g.min_exp().unwrap_or(0) >= 0);
        }
    }

    #[test]
    fn series_values() {
        // Gorenstein: I_R = t^d symbolically.
        let inv = RingInvariants::new(5, 2, 0, 2, 3, 1, 3, 1, 3).unwrap();
        let s = bass_series(ClassId::C(3), &inv, false).unwrap();
        assert_eq!(s, RationalSeries::from_poly(LaurentPoly::monomial(2, 1)));
        // P for C(3), e = 3: 1/(1-t)^3.
        let inv = RingInvariants::new(3, 0, 0, 2, 3, 1, 3, 1, 3).unwrap();
        let p = poincare_series(ClassId::C(3), &inv, false).unwrap();
        assert_eq!(p.taylor(0, 4), ints(&[1, 3, 6, 10, 15]));
        // Bass series for S, l = 1, e = 3, d = 1: t(1+t-t^2)/(1-t-t^2).
        let inv = RingInvariants::new(3, 1, 1, 1, 1, 0, 0, 0, 0).unwrap();
        let s = bass_series(ClassId::S, &inv, false).unwrap();
        assert_eq!(s.taylor(1, 6), ints(&[1, 2, 2, 4, 6, 10]));
        assert_eq!(s.coeff(0), BigInt::from(0));
        // mu^d = n for c = 3 (f(0) = n), mu^d = l for S.
        for entry in admissible_grid(5, 5, 4, 4, 4) {
            let s = bass_series(entry.cls, &entry.inv, false).unwrap();
            let want = match entry.cls {
                ClassId::C(_) => 1,
                ClassId::S => entry.inv.l,
                _ => entry.inv.n as i64,
            };
            assert_eq!(s.coeff(entry.inv.d as i64), BigInt::from(want), "{}", entry.cls);
        }
    }

    #[test]
    fn lifts() {
        // lift_bass(t^{-1}, 1) = 1
        let ia = RationalSeries::from_poly(LaurentPoly::monomial(-1, 1));
        assert_eq!(lift_bass(&ia, 1), RationalSeries::one());
        // lift_poincare(1, e) = (1+t)^e
        assert_eq!(
            lift_poincare(&RationalSeries::one(), 4),
            RationalSeries::from_poly(one_plus_t_pow(4))
        );
        // class S with l=1: lifting the algebra-level Bass series by e=3
        // reproduces the ring-level closed form with d = 1.
        let ia = RationalSeries::new(
            LaurentPoly::from_terms(&[(-1, 2), (-2, 1), (1, -1)]),
            LaurentPoly::from_terms(&[(0, 1), (2, -2), (3, -1)]),
        )
        .unwrap();
        let inv = RingInvariants::new(3, 1, 1, 1, 1, 0, 0, 0, 0).unwrap();
        let want = bass_series(ClassId::S, &inv, false).unwrap();
        assert_eq!(lift_bass(&ia, 3), want);
    }

    #[test]
    fn cor_report() {
        let inv = RingInvariants::for_class(ClassId::H(2, 1), 1, 2, 1).unwrap();
        let rep = cor_class_report(ClassId::H(2, 1), &inv).unwrap();
        assert!(rep.l_eq_q_plus_1 && rep.l_eq_p_and_n_eq_q && rep.h_with_n_eq_p_minus_1);

        let inv = RingInvariants::for_class(ClassId::T, 1, 3, 2).unwrap();
        let rep = cor_class_report(ClassId::T, &inv).unwrap();
        assert!(!rep.l_eq_q_plus_1 && !rep.l_eq_p_and_n_eq_q && !rep.h_with_n_eq_p_minus_1);

        let inv = RingInvariants::for_class(ClassId::H(3, 2), 0, 3, 2).unwrap();
        let rep = cor_class_report(ClassId::H(3, 2), &inv).unwrap();
        assert!(rep.l_eq_q_plus_1 && rep.l_eq_p_and_n_eq_q && rep.h_with_n_eq_p_minus_1);

        let inv = RingInvariants::for_class(ClassId::S, 1, 1, 0).unwrap();
        assert!(cor_class_report(ClassId::S, &inv).is_err());
    }

    #[test]
    fn inadmissible_without_force() {
        let inv = RingInvariants::new(3, 0, 0, 2, 4, 2, 3, 0, 0).unwrap();
        assert!(matches!(
            fg_polys(ClassId::T, &inv, false),
            Err(ClasstableError::InadmissibleInvariants { .. })
        ));
        assert!(fg_polys(ClassId::T, &inv, true).is_ok());
    }

    #[test]
    fn grid_monotonicity_away_from_special_zones() {
        // For l >= 4, n >= 3 no parity/case-list rule applies, so raising l
        // or n keeps admissible tuples admissible.
        for entry in admissible_grid(6, 6, 4, 4, 4) {
            if entry.inv.l < 4 || entry.inv.n < 3 || matches!(entry.cls, ClassId::C(_)) {
                continue;
            }
            if entry.gorenstein {
                continue;
            }
            // n = p-1 is the isolated point pinned by the equivalent
            // syzygy-corollary conditions; perturbing it is always fatal.
            if matches!(entry.cls, ClassId::H(_, _)) && entry.inv.n as i64 == entry.inv.p as i64 - 1 {
                continue;
            }
            for (dl, dn) in [(1i64, 0u32), (0, 1)] {
                let inv2 =
                    RingInvariants::for_class(entry.cls, entry.inv.h, entry.inv.l + dl, entry.inv.n + dn);
                let inv2 = inv2.expect("perturbed tuple constructible");
                assert!(
                    admissible(entry.cls, &inv2).ok,
                    "monotonicity broke at {} {:?} + ({dl},{dn})",
                    entry.cls,
                    entry.inv
                );
            }
        }
    }

    #[test]
    fn grid_is_substantial() {
        // r cap raised to 5 so the Gorenstein point (l, r) = (4, 5) appears.
        let grid = admissible_grid(5, 5, 5, 4, 4);
        // Every class family is represented.
        assert!(grid.iter().any(|e| matches!(e.cls, ClassId::C(_))));
        assert!(grid.iter().any(|e| e.cls == ClassId::S));
        assert!(grid.iter().any(|e| e.cls == ClassId::T));
        assert!(grid.iter().any(|e| e.cls == ClassId::B));
        assert!(grid.iter().any(|e| matches!(e.cls, ClassId::G(_))));
        assert!(grid.iter().any(|e| matches!(e.cls, ClassId::H(_, _))));
        assert!(grid.iter().any(|e| e.gorenstein));
        assert!(grid.len() > 100, "grid has {} entries", grid.len());
    }
}
