//! Catalog of closed-form identities for Poincare and Bass series over a
//! finite-dimensional graded algebra.
//!
//! Every entry assembles one exact rational series from already-known data
//! (Hilbert polynomials, previously computed series, a structural input when
//! the identity has a structural hypothesis).  The convention for what gets
//! returned follows the shape of each identity:
//!
//! * Poincare-type entries ([`Formula::Shift`], [`Formula::MaximalP`],
//!   [`Formula::Kunneth`], [`Formula::NullP`], [`Formula::ExteriorP`],
//!   [`Formula::TrivialP`], [`Formula::Null2P`], [`Formula::Dual`]) return the
//!   Poincare series itself, even when the identity is usually quoted for its
//!   reciprocal.
//! * [`Formula::ExteriorI`] returns the Bass series `t^{-s}`.
//! * The remaining Bass-type entries return the ratio `I / Po`, which is how
//!   those identities are stated; multiply by the matching Poincare series to
//!   recover the Bass series.
//!
//! Hypotheses that are visible in the inputs are enforced and reported as
//! [`GalgError::HypothesisViolation`]; hypotheses about how the inputs were
//! produced (exactness of a sequence, a module really being the named one)
//! are the caller's responsibility and are spelled out per variant.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::{poincare_duality, GalgError, GradedAlgebra, GradedModule};
use crate::field::Field;
use crate::powser::{LaurentPoly, RationalSeries};

/// Identifier for one catalog entry; parses from and prints as the short
/// name used by the command-line `verify` mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Shift,
    Dual,
    MaximalP,
    Kunneth,
    NullP,
    NullI,
    ExteriorP,
    ExteriorI,
    TrivialP,
    Null2P,
    Null2I,
    SyzygyC,
    TrivialI,
    TruncatedI,
}

impl Formula {
    pub const ALL: [Formula; 14] = [
        Formula::Shift,
        Formula::Dual,
        Formula::MaximalP,
        Formula::Kunneth,
        Formula::NullP,
        Formula::NullI,
        Formula::ExteriorP,
        Formula::ExteriorI,
        Formula::TrivialP,
        Formula::Null2P,
        Formula::Null2I,
        Formula::SyzygyC,
        Formula::TrivialI,
        Formula::TruncatedI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Shift => "shift",
            Formula::Dual => "dual",
            Formula::MaximalP => "maximalP",
            Formula::Kunneth => "kunneth",
            Formula::NullP => "nullP",
            Formula::NullI => "nullI",
            Formula::ExteriorP => "exteriorP",
            Formula::ExteriorI => "exteriorI",
            Formula::TrivialP => "trivialP",
            Formula::Null2P => "null2P",
            Formula::Null2I => "null2I",
            Formula::SyzygyC => "syzygyC",
            Formula::TrivialI => "trivialI",
            Formula::TruncatedI => "truncatedI",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = GalgError;

    fn from_str(s: &str) -> Result<Self, GalgError> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GalgError::HypothesisViolation {
                formula: "catalog",
                reason: format!("unknown formula identifier {s:?}"),
            })
    }
}

/// Inputs for one catalog entry.  Series arguments are the caller's own
/// previously computed quantities; algebra and module arguments exist so the
/// structural hypotheses can be checked.
pub enum FormulaInput<'a, F: Field> {
    /// `Po(suspend(N, s)) = t^s * Po(N)`.  Pass a Bass series and `-s` for
    /// the companion statement on Bass series of suspensions.
    Shift { series: &'a RationalSeries, s: i64 },
    /// `Po(dual of N) = I(N)` (and symmetrically `I(dual of N) = Po(N)`):
    /// the value is the input itself; the content is which series it names.
    Dual { bass_n: &'a RationalSeries },
    /// For an exact sequence `0 -> N -> G -> M -> 0` with `G` free and
    /// `N` inside `B_+ G`: `Po(N) = t^{-1} * (Po(M) - H(M / B_+ M))`.
    MaximalP { po_m: &'a RationalSeries, h_cover: &'a LaurentPoly },
    /// Over a tensor product of algebras, the series of a tensor product of
    /// modules is the product of the factors' series (same statement for
    /// Poincare and for Bass series; pass the matching pair).
    Kunneth { left: &'a RationalSeries, right: &'a RationalSeries },
    /// `B = k ⋉ W`, `W != 0` in positive degrees: `Po(k) = 1/(1 - t*H_W(t))`.
    NullP { h_w: &'a LaurentPoly },
    /// `B = k ⋉ W`, `W != 0`: `I_B / Po(k) = H_W(t^{-1}) - t`.
    NullI { h_w: &'a LaurentPoly },
    /// Exterior algebra on generators in the given odd degrees:
    /// `Po(k) = prod 1/(1 - t^{d+1})` over the generator degrees `d`.
    ExteriorP { degrees: &'a [u32] },
    /// `B` with perfect pairings into its top degree `s`: `I_B = t^{-s}`.
    ExteriorI { b: &'a GradedAlgebra<F> },
    /// `B = C ⋉ W`: `1/Po_B(k) = 1/Po_C(k) - t * Po_C(W)/Po_C(k)`;
    /// the assembled series is returned inverted, as `Po_B(k)`.
    TrivialP { po_c_k: &'a RationalSeries, po_c_w: &'a RationalSeries },
    /// `B = C ⋉ suspend(dual C, s)` with `C = k ⋉ W`:
    /// `Po_B(k) = 1/(1 - t*H_W(t) - t^{s+1}*H_W(t^{-1}) + t^{s+2})`.
    Null2P { h_w: &'a LaurentPoly, s: i64 },
    /// Same algebra as [`FormulaInput::Null2P`]:
    /// `I_B / Po_B(k) = (1 - t*H_W(t) - t^{s+1}*H_W(t^{-1}) + t^{s+2}) / t^s`.
    Null2I { h_w: &'a LaurentPoly, s: i64 },
    /// `B_+ != 0`: `I_B / Po(k) = I(B_+)/Po(k) - t`, where `bass_bplus_ratio`
    /// is the caller's value of `I(B_+)/Po(k)`.
    SyzygyC { b: &'a GradedAlgebra<F>, bass_bplus_ratio: &'a RationalSeries },
    /// `B = C ⋉ W` with `C_+ != 0` and `C_+ W = 0`:
    /// `I_B / Po_B(k) = I_C / Po_C(k) + H_W(t^{-1})`.
    TrivialI {
        c: &'a GradedAlgebra<F>,
        w: &'a GradedModule<F>,
        bass_ratio_c: &'a RationalSeries,
    },
    /// `B = E / E_{>= s}` where `E` has perfect pairings into degree `s`:
    /// `I_B / Po_B(k) = t^{-s-1} * (1 - 1/Po_B(k)) - t`.
    TruncatedI { e: &'a GradedAlgebra<F>, s: i64, po_b_k: &'a RationalSeries },
}

impl<F: Field> FormulaInput<'_, F> {
    pub fn formula(&self) -> Formula {
        match self {
            FormulaInput::Shift { .. } => Formula::Shift,
            FormulaInput::Dual { .. } => Formula::Dual,
            FormulaInput::MaximalP { .. } => Formula::MaximalP,
            FormulaInput::Kunneth { .. } => Formula::Kunneth,
            FormulaInput::NullP { .. } => Formula::NullP,
            FormulaInput::NullI { .. } => Formula::NullI,
            FormulaInput::ExteriorP { .. } => Formula::ExteriorP,
            FormulaInput::ExteriorI { .. } => Formula::ExteriorI,
            FormulaInput::TrivialP { .. } => Formula::TrivialP,
            FormulaInput::Null2P { .. } => Formula::Null2P,
            FormulaInput::Null2I { .. } => Formula::Null2I,
            FormulaInput::SyzygyC { .. } => Formula::SyzygyC,
            FormulaInput::TrivialI { .. } => Formula::TrivialI,
            FormulaInput::TruncatedI { .. } => Formula::TruncatedI,
        }
    }
}

fn violation(formula: Formula, reason: impl Into<String>) -> GalgError {
    GalgError::HypothesisViolation { formula: formula.name(), reason: reason.into() }
}

/// `W` must be nonzero, sit in positive degrees, and have nonnegative ranks.
fn check_module_hilbert(formula: Formula, h_w: &LaurentPoly) -> Result<(), GalgError> {
    if h_w.is_zero() {
        return Err(violation(formula, "the module W is zero"));
    }
    if h_w.min_exp() < Some(1) {
        return Err(violation(formula, "W must be concentrated in degrees >= 1"));
    }
    if h_w.terms().any(|(_, c)| c < &num_bigint::BigInt::zero()) {
        return Err(violation(formula, "a Hilbert polynomial cannot have negative ranks"));
    }
    Ok(())
}

fn double_null_den(h_w: &LaurentPoly, s: i64) -> LaurentPoly {
    LaurentPoly::one()
        .sub(&h_w.shift(1))
        .sub(&h_w.substitute_inverse().shift(s + 1))
        .add(&LaurentPoly::monomial(s + 2, 1))
}

/// Assembles the closed form for one catalog entry.
pub fn appendix_series<F: Field>(input: &FormulaInput<F>) -> Result<RationalSeries, GalgError> {
    let t = LaurentPoly::monomial(1, 1);
    match input {
        FormulaInput::Shift { series, s } => Ok(series.shift(*s)),
        FormulaInput::Dual { bass_n } => Ok((*bass_n).clone()),
        FormulaInput::MaximalP { po_m, h_cover } => {
            if h_cover.terms().any(|(_, c)| c < &num_bigint::BigInt::zero()) {
                return Err(violation(
                    Formula::MaximalP,
                    "a Hilbert polynomial cannot have negative ranks",
                ));
            }
            Ok(po_m.sub(&RationalSeries::from_poly((*h_cover).clone())).shift(-1))
        }
        FormulaInput::Kunneth { left, right } => Ok(left.mul(right)),
        FormulaInput::NullP { h_w } => {
            check_module_hilbert(Formula::NullP, h_w)?;
            let den = LaurentPoly::one().sub(&h_w.shift(1));
            Ok(RationalSeries::new(LaurentPoly::one(), den)?)
        }
        FormulaInput::NullI { h_w } => {
            check_module_hilbert(Formula::NullI, h_w)?;
            Ok(RationalSeries::from_poly(h_w.substitute_inverse().sub(&t)))
        }
        FormulaInput::ExteriorP { degrees } => {
            let mut den = LaurentPoly::one();
            for &d in degrees.iter() {
                if d % 2 == 0 {
                    return Err(violation(
                        Formula::ExteriorP,
                        format!("generator degree {d} is even"),
                    ));
                }
                den = den.mul(&LaurentPoly::one().sub(&LaurentPoly::monomial(d as i64 + 1, 1)));
            }
            Ok(RationalSeries::new(LaurentPoly::one(), den)?)
        }
        FormulaInput::ExteriorI { b } => match poincare_duality(b) {
            (true, Some(s)) => Ok(RationalSeries::from_poly(LaurentPoly::monomial(-(s as i64), 1))),
            _ => Err(violation(Formula::ExteriorI, "pairings into the top degree are not perfect")),
        },
        FormulaInput::TrivialP { po_c_k, po_c_w } => {
            if po_c_k.is_zero() {
                return Err(violation(Formula::TrivialP, "Po_C(k) is zero"));
            }
            let den = RationalSeries::one().sub(&po_c_w.shift(1));
            Ok(po_c_k.div(&den)?)
        }
        FormulaInput::Null2P { h_w, s } => {
            check_module_hilbert(Formula::Null2P, h_w)?;
            if *s <= h_w.max_exp().unwrap_or(0) {
                return Err(violation(
                    Formula::Null2P,
                    format!("suspension by {s} does not move the dual of C into positive degrees"),
                ));
            }
            Ok(RationalSeries::new(LaurentPoly::one(), double_null_den(h_w, *s))?)
        }
        FormulaInput::Null2I { h_w, s } => {
            check_module_hilbert(Formula::Null2I, h_w)?;
            if *s <= h_w.max_exp().unwrap_or(0) {
                return Err(violation(
                    Formula::Null2I,
                    format!("suspension by {s} does not move the dual of C into positive degrees"),
                ));
            }
            Ok(RationalSeries::from_poly(double_null_den(h_w, *s)).shift(-s))
        }
        FormulaInput::SyzygyC { b, bass_bplus_ratio } => {
            if b.top_nonzero() == 0 {
                return Err(violation(Formula::SyzygyC, "the augmentation ideal is zero"));
            }
            Ok(bass_bplus_ratio.sub(&RationalSeries::from_poly(t)))
        }
        FormulaInput::TrivialI { c, w, bass_ratio_c } => {
            if c.top_nonzero() == 0 {
                return Err(violation(Formula::TrivialI, "C has zero augmentation ideal"));
            }
            if !w.positive_action_is_zero() {
                return Err(violation(Formula::TrivialI, "C_+ does not annihilate W"));
            }
            Ok(bass_ratio_c
                .add(&RationalSeries::from_poly(w.hilbert().substitute_inverse())))
        }
        FormulaInput::TruncatedI { e, s, po_b_k } => {
            match poincare_duality(e) {
                (true, Some(pd)) if pd as i64 == *s => {}
                (true, Some(pd)) => {
                    return Err(violation(
                        Formula::TruncatedI,
                        format!("pairings of E are perfect into degree {pd}, not {s}"),
                    ))
                }
                _ => {
                    return Err(violation(
                        Formula::TruncatedI,
                        "pairings of E into its top degree are not perfect",
                    ))
                }
            }
            if !(1..*s).any(|j| e.dim(j) > 0) {
                return Err(violation(
                    Formula::TruncatedI,
                    "E is zero strictly between degree 0 and its top, so the truncation is the field",
                ));
            }
            if po_b_k.is_zero() {
                return Err(violation(Formula::TruncatedI, "Po_B(k) is zero"));
            }
            let inv = RationalSeries::one().div(po_b_k)?;
            Ok(RationalSeries::one()
                .sub(&inv)
                .shift(-s - 1)
                .sub(&RationalSeries::from_poly(t)))
        }
    }
}
