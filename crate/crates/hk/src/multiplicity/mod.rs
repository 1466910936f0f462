//! Hilbert–Kunz functions, parameter multiplicities, and estimators.
//!
//! The central object is the function `q -> length(R / I^{[q]})` for `q`
//! running through powers of the characteristic.  All lengths are computed
//! exactly (standard-monomial counts), all normalizations are exact big
//! rationals, and limits are replaced by *estimates with explicit
//! uncertainty*: a reported value never pretends to more precision than the
//! computed data supports.

mod equi;
mod localize;
mod witness;

pub use equi::{
    associativity_rhs, ehk_limits, equi_condition_b, AssocContribution, AssocOptions, AssocReport,
    EquiOptions, EquiReport, EquiVerdict, LimitsOptions, LimitsReport, LimitsRow, MinhAssertion,
    MinhComponent, PrimeContribution,
};
pub use localize::{hk_function_at, Localization, LocalizedRing};
pub use witness::{
    associated_origin_by_search, cm_frobenius_test, colon_capture_witnesses,
    is_associated_maximal, monotone_sequence_check, tc_membership_bounded, CaptureReport,
    CaptureStage, CaptureVerdict, CmReport, MonotoneReport, TcReport, TcVerdict,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{presentation_dimension, Ideal};
use crate::poly::{power_of_char, Polynomial, RingPresentation};
use std::sync::Arc;

/// One exact sample of a Frobenius-power length function.
#[derive(Clone, Debug)]
pub struct HkRecord {
    /// The bracket exponent (a power of the characteristic).
    pub q: u64,
    /// `length(R / I^{[q]})`, exact.
    pub colength: u64,
    /// Krull dimension of the ambient presented ring.
    pub dim: usize,
    /// `colength / q^dim`, exact.
    pub normalized: BigRational,
}

fn normalized_ratio(colength: u64, q: u64, dim: usize) -> BigRational {
    BigRational::new(
        BigInt::from(colength),
        BigInt::from(q).pow(dim as u32),
    )
}

/// Evaluates the Hilbert–Kunz function of `ideal` at the given bracket
/// exponents (each must be a power of the characteristic).  Lengths are
/// global colengths in the presented ring; they agree with local lengths
/// whenever the quotient is supported at a single point.
pub fn hk_function(ideal: &Ideal, qs: &[u64]) -> Result<Vec<HkRecord>> {
    if qs.is_empty() {
        return Err(Error::InvalidInput("no bracket exponents requested".into()));
    }
    let p = ideal.ring().field().characteristic();
    let mut qs: Vec<u64> = qs.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let dim = presentation_dimension(ideal.presentation())?;
    let mut records = Vec::with_capacity(qs.len());
    for &q in &qs {
        power_of_char(p, q)?;
        let colength = ideal.frobenius_power(q)?.colength()?;
        records.push(HkRecord {
            q,
            colength,
            dim,
            normalized: normalized_ratio(colength, q, dim),
        });
    }
    Ok(records)
}

/// A value together with a non-negative uncertainty radius, both exact
/// rationals.  The uncertainty is a self-consistency indicator derived from
/// the computed samples, not a proven error bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub value: BigRational,
    pub uncertainty: BigRational,
}

impl Estimate {
    pub fn exact(value: BigRational) -> Self {
        Estimate {
            value,
            uncertainty: BigRational::zero(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.uncertainty.is_zero()
    }

    /// Interval sum.
    pub fn add(&self, other: &Estimate) -> Estimate {
        Estimate {
            value: &self.value + &other.value,
            uncertainty: &self.uncertainty + &other.uncertainty,
        }
    }

    /// Interval product for non-negative quantities:
    /// `(a ± u)(b ± v)` spreads by `a·v + b·u + u·v`.
    pub fn mul(&self, other: &Estimate) -> Estimate {
        let spread = &self.value * &other.uncertainty
            + &other.value * &self.uncertainty
            + &self.uncertainty * &other.uncertainty;
        Estimate {
            value: &self.value * &other.value,
            uncertainty: spread,
        }
    }

    /// Divides value and uncertainty by an exact positive scalar.
    pub fn div_exact(&self, scalar: &BigRational) -> Estimate {
        Estimate {
            value: &self.value / scalar,
            uncertainty: &self.uncertainty / scalar,
        }
    }

    /// Whether `other.value` lies within the combined uncertainty of the two
    /// estimates.
    pub fn consistent_with(&self, other: &Estimate) -> bool {
        (&self.value - &other.value).abs() <= &self.uncertainty + &other.uncertainty
    }
}

impl std::fmt::Display for Estimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} ± {}", self.value, self.uncertainty)
        }
    }
}

/// How to turn a finite sample of the length function into a multiplicity
/// estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimatorKind {
    /// The last normalized value; uncertainty is the last step size.
    LastValue,
    /// Eliminates the first-order correction `length ≈ e·q^d + β·q^(d-1)`
    /// through the last two samples; uncertainty is the distance to the last
    /// normalized value.
    TwoPoint,
}

/// Estimates the leading coefficient of the length function from exact
/// samples.  Needs at least two records.
pub fn multiplicity_estimate(records: &[HkRecord], kind: EstimatorKind) -> Result<Estimate> {
    if records.len() < 2 {
        return Err(Error::InsufficientRecords(
            "estimates need at least two samples".into(),
        ));
    }
    let mut records: Vec<&HkRecord> = records.iter().collect();
    records.sort_by_key(|r| r.q);
    let last = records[records.len() - 1];
    let prev = records[records.len() - 2];
    if last.dim != prev.dim {
        return Err(Error::InvalidInput(
            "samples come from rings of different dimensions".into(),
        ));
    }
    let step = (&last.normalized - &prev.normalized).abs();
    match kind {
        EstimatorKind::LastValue => Ok(Estimate {
            value: last.normalized.clone(),
            uncertainty: step,
        }),
        EstimatorKind::TwoPoint => {
            let d = last.dim;
            if d == 0 {
                // the model has no first-order term to eliminate
                return Ok(Estimate {
                    value: last.normalized.clone(),
                    uncertainty: step,
                });
            }
            let q1 = BigInt::from(prev.q);
            let q2 = BigInt::from(last.q);
            let l1 = BigInt::from(prev.colength);
            let l2 = BigInt::from(last.colength);
            let e = d as u32 - 1;
            let num = &l2 * q1.pow(e) - &l1 * q2.pow(e);
            let den = q1.pow(e) * q2.pow(e) * (&q2 - &q1);
            let value = BigRational::new(num, den);
            let uncertainty = (&value - &last.normalized).abs();
            Ok(Estimate { value, uncertainty })
        }
    }
}

/// Result of a parameter-multiplicity computation.
#[derive(Clone, Debug)]
pub struct HsMultiplicity {
    pub estimate: Estimate,
    /// Whether the parameters were verified to form a regular sequence (in
    /// which case the estimate is the exact colength).
    pub regular_sequence: bool,
    /// The exact colength of the parameter ideal when the sequence is
    /// regular.
    pub colength: Option<u64>,
}

/// Multiplicity of a full system of parameters.
///
/// When the parameters form a regular sequence (verified by iterated colon
/// checks) the multiplicity equals the colength of the parameter ideal and
/// is exact.  Otherwise it is estimated from the limit
/// `length(R/(f_1^n, …, f_d^n)) / n^d` sampled at `n_max/2` and `n_max`.
pub fn hs_parameter_multiplicity(
    pres: &Arc<RingPresentation>,
    params: &[Polynomial],
    lech_n_max: u64,
) -> Result<HsMultiplicity> {
    let dim = presentation_dimension(pres)?;
    if params.len() != dim {
        return Err(Error::NotSystemOfParameters(format!(
            "{} parameters given but the ring has dimension {dim}",
            params.len()
        )));
    }
    let full = Ideal::new(pres, params.to_vec())?;
    // finite colength is what makes the family a system of parameters
    let colength = full.colength().map_err(|e| match e {
        Error::NotZeroDimensional(msg) => Error::NotSystemOfParameters(msg),
        other => other,
    })?;

    let mut regular = true;
    for k in 0..params.len() {
        let stage = Ideal::new(pres, params[..k].to_vec())?;
        let colon = stage.colon_element(&params[k])?;
        if !colon.equals(&stage)? {
            regular = false;
            break;
        }
    }
    if regular {
        return Ok(HsMultiplicity {
            estimate: Estimate::exact(BigRational::from_integer(BigInt::from(colength))),
            regular_sequence: true,
            colength: Some(colength),
        });
    }

    if lech_n_max < 2 || lech_n_max % 2 != 0 {
        return Err(Error::InvalidInput(
            "the limit sampler needs an even bound of at least 2".into(),
        ));
    }
    let mut records = Vec::new();
    for n in [lech_n_max / 2, lech_n_max] {
        let gens = params
            .iter()
            .map(|f| f.pow(n))
            .collect::<Result<Vec<_>>>()?;
        let colength = Ideal::new(pres, gens)?.colength()?;
        records.push(HkRecord {
            q: n,
            colength,
            dim,
            normalized: normalized_ratio(colength, n, dim),
        });
    }
    let estimate = multiplicity_estimate(&records, EstimatorKind::TwoPoint)?;
    Ok(HsMultiplicity {
        estimate,
        regular_sequence: false,
        colength: None,
    })
}

/// Side-by-side comparison of the two multiplicities of a parameter ideal,
/// which agree in the limit.
#[derive(Clone, Debug)]
pub struct MultiplicityComparison {
    pub frobenius: Estimate,
    pub parameter: HsMultiplicity,
    pub consistent: bool,
}

/// Compares the Frobenius-power multiplicity of the ideal generated by a
/// system of parameters with its parameter multiplicity.
pub fn compare_hk_hs(
    pres: &Arc<RingPresentation>,
    params: &[Polynomial],
    qs: &[u64],
    lech_n_max: u64,
) -> Result<MultiplicityComparison> {
    let ideal = Ideal::new(pres, params.to_vec())?;
    let records = hk_function(&ideal, qs)?;
    let frobenius = multiplicity_estimate(&records, EstimatorKind::TwoPoint)?;
    let parameter = hs_parameter_multiplicity(pres, params, lech_n_max)?;
    let consistent = frobenius.consistent_with(&parameter.estimate);
    Ok(MultiplicityComparison {
        frobenius,
        parameter,
        consistent,
    })
}
