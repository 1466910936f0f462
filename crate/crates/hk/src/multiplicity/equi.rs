//! Equimultiplicity along a subvariety, tested through condition (b).
//!
//! For an ideal `I` with a system of parameters `x_1, …, x_r` modulo `I`,
//! condition (b) compares the Frobenius multiplicity of `I + (x_1, …, x_r)`
//! with the sum, over the top-dimensional components `P` of `V(I)`, of
//!
//! ```text
//! e((x_1, …, x_r), R/P) · e_HK(I R_P).
//! ```
//!
//! Equality characterizes equimultiplicity; the left-hand side always
//! dominates.  Both sides are computed as estimates with explicit
//! uncertainties, so the report can only ever *support* equality, while a
//! gap that exceeds the combined uncertainty positively refutes it.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingPresentation};

use super::localize::{origin_maximal_ideal, Localization, LocalizedRing};
use super::{
    hk_function, hk_function_at, hs_parameter_multiplicity, multiplicity_estimate, Estimate,
    EstimatorKind,
};

/// One asserted top-dimensional component of a subvariety, together with a
/// recipe for localizing the ambient ring at it when a local multiplicity is
/// required.
#[derive(Clone, Debug)]
pub struct MinhComponent {
    /// Generators of the asserted prime, in the ambient ring.
    pub prime_generators: Vec<Polynomial>,
    /// How to localize at this prime; `None` when the caller only needs
    /// operations that avoid localization.
    pub localization: Option<Localization>,
}

/// A caller-supplied list of the top-dimensional components of an ideal.
///
/// Containment, properness, equal dimension, and pairwise incomparability
/// are verified; primality and exhaustiveness cannot be checked at this
/// level and are recorded as assumptions in every report built from the
/// assertion.
#[derive(Clone, Debug)]
pub struct MinhAssertion {
    pub components: Vec<MinhComponent>,
}

impl MinhAssertion {
    /// Convenience constructor from generator strings.
    pub fn parse(
        pres: &Arc<RingPresentation>,
        components: &[(&[&str], Option<Localization>)],
    ) -> Result<MinhAssertion> {
        let mut out = Vec::new();
        for (gens, loc) in components {
            let ideal = Ideal::parse(pres, gens)?;
            out.push(MinhComponent {
                prime_generators: ideal.generators().to_vec(),
                localization: loc.clone(),
            });
        }
        Ok(MinhAssertion { components: out })
    }

    /// Runs the checkable part of the assertion against the ideal whose
    /// components are being asserted and returns the component ideals.
    pub fn verify(&self, reference: &Ideal) -> Result<Vec<Ideal>> {
        if self.components.is_empty() {
            return Err(Error::MinhVerification(
                "the component list is empty".into(),
            ));
        }
        let pres = reference.presentation();
        let target_dim = reference.krull_dimension()?;
        let mut primes = Vec::with_capacity(self.components.len());
        for component in &self.components {
            let prime = Ideal::new(pres, component.prime_generators.clone())?;
            let dim = prime.krull_dimension().map_err(|e| match e {
                Error::UnitIdeal => {
                    Error::MinhVerification("an asserted component is the unit ideal".into())
                }
                other => other,
            })?;
            if dim != target_dim {
                return Err(Error::MinhVerification(format!(
                    "component {} has dimension {dim}, expected {target_dim}",
                    describe_generators(&component.prime_generators),
                )));
            }
            if !prime.contains_ideal(reference)? {
                return Err(Error::MinhVerification(format!(
                    "component {} does not contain the reference ideal",
                    describe_generators(&component.prime_generators),
                )));
            }
            primes.push(prime);
        }
        for i in 0..primes.len() {
            for j in (i + 1)..primes.len() {
                if primes[i].contains_ideal(&primes[j])? || primes[j].contains_ideal(&primes[i])? {
                    return Err(Error::MinhVerification(format!(
                        "components {i} and {j} are comparable; a component list must be an antichain",
                    )));
                }
            }
        }
        Ok(primes)
    }

    /// The unverifiable parts of the assertion, phrased for inclusion in
    /// reports.
    pub fn assumptions(&self) -> Vec<String> {
        let mut notes: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                format!(
                    "component {} is assumed prime (primality is not verified)",
                    describe_generators(&c.prime_generators)
                )
            })
            .collect();
        notes.push(
            "the component list is assumed to exhaust the top-dimensional components".into(),
        );
        notes
    }
}

fn describe_generators(gens: &[Polynomial]) -> String {
    let body = gens
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("({body})")
}

/// Sampling controls for a condition-(b) run.
#[derive(Clone, Debug)]
pub struct EquiOptions {
    /// q grid for the ambient side `e_HK(I + J)`.
    pub qs_lhs: Vec<u64>,
    /// q grid for quotient-side Frobenius sampling when the parameter count
    /// does not match the quotient dimension (general ideals `J`).
    pub qs_quotient: Vec<u64>,
    /// q grid for each localized side `e_HK(I R_P)`.
    pub qs_local: Vec<u64>,
    /// Power bound for the parameter-multiplicity sampler on the quotient
    /// side when the parameters fail to form a regular sequence there.
    pub lech_n_max: u64,
    /// Estimator applied to sampled records.
    pub estimator: EstimatorKind,
}

impl Default for EquiOptions {
    fn default() -> Self {
        EquiOptions {
            qs_lhs: vec![2, 4, 8, 16],
            qs_quotient: vec![2, 4, 8, 16],
            qs_local: vec![2, 4, 8, 16],
            lech_n_max: 8,
            estimator: EstimatorKind::TwoPoint,
        }
    }
}

/// The two summands attached to one component, and their product.
#[derive(Clone, Debug)]
pub struct PrimeContribution {
    pub prime: Ideal,
    /// `e(J, R/P)` — multiplicity of the parameters on the component.
    pub quotient_multiplicity: Estimate,
    /// `e_HK(I R_P)` — Frobenius multiplicity of `I` localized at the
    /// component.
    pub local_multiplicity: Estimate,
    pub product: Estimate,
}

/// Outcome of the comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquiVerdict {
    /// `|lhs − rhs|` lies within the combined uncertainty.
    ConsistentWithEquimultiple,
    /// `lhs − rhs` exceeds the combined uncertainty.
    NotEquimultiple,
}

impl fmt::Display for EquiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquiVerdict::ConsistentWithEquimultiple => write!(f, "consistent-with-equimultiple"),
            EquiVerdict::NotEquimultiple => write!(f, "not equimultiple"),
        }
    }
}

/// Full record of a condition-(b) comparison.
#[derive(Clone, Debug)]
pub struct EquiReport {
    pub lhs: Estimate,
    pub rhs: Estimate,
    pub contributions: Vec<PrimeContribution>,
    /// `lhs.value − rhs.value` (signed).
    pub gap: BigRational,
    pub combined_uncertainty: BigRational,
    /// Whether `lhs ≥ rhs` holds up to the combined uncertainty, as the
    /// one-sided inequality always must.
    pub inequality_consistent: bool,
    pub verdict: EquiVerdict,
    pub assumptions: Vec<String>,
}

/// Decides condition (b) for `ideal` with parameters `params` modulo it.
///
/// `minh` asserts the top-dimensional components of `V(ideal)`; each needs a
/// localization recipe.  An empty parameter list is allowed when the ideal
/// is already zero-dimensional, in which case both sides degenerate to
/// `e_HK(ideal)`.
pub fn equi_condition_b(
    ideal: &Ideal,
    params: &[Polynomial],
    minh: &MinhAssertion,
    options: &EquiOptions,
) -> Result<EquiReport> {
    let pres = ideal.presentation();
    for f in params {
        if !f.ring().same_ring(pres.ring()) {
            return Err(Error::RingMismatch(
                "parameters must live in the ambient ring of the ideal".into(),
            ));
        }
    }
    let quotient_dim = ideal.krull_dimension()?;
    if params.len() != quotient_dim {
        return Err(Error::NotSystemOfParameters(format!(
            "{} parameters given modulo an ideal of dimension {quotient_dim}",
            params.len()
        )));
    }

    let primes = minh.verify(ideal)?;

    let j_ideal = Ideal::new(pres, params.to_vec())?;
    let total = ideal.sum(&j_ideal)?;
    let lhs_records = hk_function(&total, &options.qs_lhs).map_err(|e| match e {
        Error::NotZeroDimensional(msg) => Error::NotSystemOfParameters(msg),
        other => other,
    })?;
    let lhs = multiplicity_estimate(&lhs_records, options.estimator)?;

    let rhs = condition_b_rhs(ideal, params, &primes, &minh.components, options)?;

    let gap = &lhs.value - &rhs.estimate.value;
    let combined_uncertainty = &lhs.uncertainty + &rhs.estimate.uncertainty;
    let verdict = if gap > combined_uncertainty {
        EquiVerdict::NotEquimultiple
    } else {
        EquiVerdict::ConsistentWithEquimultiple
    };
    let inequality_consistent = gap >= -combined_uncertainty.clone();

    let mut assumptions = minh.assumptions();
    assumptions.extend(rhs.assumptions);

    Ok(EquiReport {
        lhs,
        rhs: rhs.estimate,
        contributions: rhs.contributions,
        gap,
        combined_uncertainty,
        inequality_consistent,
        verdict,
        assumptions,
    })
}

struct RhsOutcome {
    estimate: Estimate,
    contributions: Vec<PrimeContribution>,
    assumptions: Vec<String>,
}

/// Computes `Σ_P e(J, R/P) · e_HK(I R_P)` over the verified components.
fn condition_b_rhs(
    ideal: &Ideal,
    j_gens: &[Polynomial],
    primes: &[Ideal],
    components: &[MinhComponent],
    options: &EquiOptions,
) -> Result<RhsOutcome> {
    let pres = ideal.presentation();
    let mut contributions = Vec::with_capacity(primes.len());
    let mut assumptions = Vec::new();
    let mut estimate = Estimate::exact(BigRational::from_integer(BigInt::from(0)));

    for (prime, component) in primes.iter().zip(components) {
        let quotient_pres = quotient_presentation(pres, prime)?;
        let quotient_dim = crate::groebner::presentation_dimension(&quotient_pres)?;
        let quotient_multiplicity = if j_gens.len() == quotient_dim {
            hs_parameter_multiplicity(&quotient_pres, j_gens, options.lech_n_max)?.estimate
        } else {
            let j_quotient = Ideal::new(&quotient_pres, j_gens.to_vec())?;
            let records = hk_function(&j_quotient, &options.qs_quotient)?;
            multiplicity_estimate(&records, options.estimator)?
        };

        let kind = component.localization.as_ref().ok_or_else(|| {
            Error::UnsupportedLocalization(format!(
                "component {} carries no localization recipe",
                describe_generators(&component.prime_generators)
            ))
        })?;
        let localized = LocalizedRing::new(pres, kind)?;
        let transported_prime = localized.transport_ideal(prime)?;
        if !transported_prime.equals(&origin_maximal_ideal(localized.target())?)? {
            return Err(Error::UnsupportedLocalization(format!(
                "the localization {kind} is not centered on component {}",
                describe_generators(&component.prime_generators)
            )));
        }
        let local_records = hk_function_at(&localized, ideal, &options.qs_local)?;
        let local_multiplicity = multiplicity_estimate(&local_records, options.estimator)?;
        if matches!(kind, Localization::AtCurveGenericPoint { .. }) {
            assumptions.push(format!(
                "the local multiplicity at {} is computed on the generic-point model {}",
                describe_generators(&component.prime_generators),
                localized.target().ring().field()
            ));
        }

        let product = quotient_multiplicity.mul(&local_multiplicity);
        estimate = estimate.add(&product);
        contributions.push(PrimeContribution {
            prime: prime.clone(),
            quotient_multiplicity,
            local_multiplicity,
            product,
        });
    }

    Ok(RhsOutcome {
        estimate,
        contributions,
        assumptions,
    })
}

/// Presents `R/P` over the same polynomial ring by adjoining the component
/// generators to the ambient relations.
fn quotient_presentation(
    pres: &Arc<RingPresentation>,
    prime: &Ideal,
) -> Result<Arc<RingPresentation>> {
    let mut relations = pres.relations().to_vec();
    relations.extend(prime.generators().iter().cloned());
    RingPresentation::new(pres.ring(), relations)
}

/// Sampling controls for the associativity decomposition.
#[derive(Clone, Debug)]
pub struct AssocOptions {
    pub qs: Vec<u64>,
    pub estimator: EstimatorKind,
}

impl Default for AssocOptions {
    fn default() -> Self {
        AssocOptions {
            qs: vec![2, 4, 8, 16],
            estimator: EstimatorKind::TwoPoint,
        }
    }
}

/// One component's share of the associativity decomposition.
#[derive(Clone, Debug)]
pub struct AssocContribution {
    pub prime: Ideal,
    /// Length of the local ring at the component; only length 1 is
    /// supported, and it is verified, not assumed.
    pub local_ring_length: u64,
    /// `e_HK(I, R/P)`.
    pub quotient_multiplicity: Estimate,
}

/// Decomposition of a Frobenius multiplicity over the components of the
/// ambient ring, compared against the direct estimate.
#[derive(Clone, Debug)]
pub struct AssocReport {
    pub rhs: Estimate,
    pub direct: Estimate,
    pub contributions: Vec<AssocContribution>,
    pub consistent: bool,
    pub assumptions: Vec<String>,
}

/// Computes `Σ_P ℓ(R_P) · e_HK(I, R/P)` over the asserted components of the
/// ambient ring and compares it with the direct estimate of `e_HK(I)`.
///
/// The local lengths `ℓ(R_P)` are obtained exactly: the primary component
/// of `(0)` at `P` is isolated by saturating with a separator (a product of
/// generators of the other components that avoid `P`), and the computation
/// is supported precisely when that component equals `P`, i.e. when the
/// length is 1.  This covers reduced ambient rings.
pub fn associativity_rhs(
    ideal: &Ideal,
    minh: &MinhAssertion,
    options: &AssocOptions,
) -> Result<AssocReport> {
    let pres = ideal.presentation();
    if ideal.krull_dimension()? != 0 {
        return Err(Error::InvalidInput(
            "the associativity decomposition needs an ideal of finite colength".into(),
        ));
    }
    let primes = minh.verify(&Ideal::zero(pres))?;

    let mut contributions = Vec::with_capacity(primes.len());
    let mut rhs = Estimate::exact(BigRational::from_integer(BigInt::from(0)));
    for (index, prime) in primes.iter().enumerate() {
        let separator = component_separator(&primes, index)?;
        let primary_component = Ideal::zero(pres).saturation_element(&separator)?;
        if !primary_component.equals(prime)? {
            return Err(Error::UnsupportedLocalization(format!(
                "the primary component of (0) at {} is not the component itself; \
                 local lengths other than 1 are not supported",
                describe_generators(prime.generators())
            )));
        }

        let quotient_pres = quotient_presentation(pres, prime)?;
        let transported = Ideal::new(&quotient_pres, ideal.generators().to_vec())?;
        let records = hk_function(&transported, &options.qs)?;
        let quotient_multiplicity = multiplicity_estimate(&records, options.estimator)?;

        rhs = rhs.add(&quotient_multiplicity);
        contributions.push(AssocContribution {
            prime: prime.clone(),
            local_ring_length: 1,
            quotient_multiplicity,
        });
    }

    let direct_records = hk_function(ideal, &options.qs)?;
    let direct = multiplicity_estimate(&direct_records, options.estimator)?;
    let consistent = rhs.consistent_with(&direct);

    let mut assumptions = minh.assumptions();
    assumptions
        .push("local ring lengths at the components were verified to equal 1 by saturation".into());

    Ok(AssocReport {
        rhs,
        direct,
        contributions,
        consistent,
        assumptions,
    })
}

/// A product of one generator from every other component, chosen outside the
/// component at `index`; such an element is a unit locally at the component
/// and kills the others.
fn component_separator(primes: &[Ideal], index: usize) -> Result<Polynomial> {
    let ring = primes[index].ring();
    let mut separator = Polynomial::one(ring);
    for (j, other) in primes.iter().enumerate() {
        if j == index {
            continue;
        }
        let factor = other
            .generators()
            .iter()
            .find_map(|g| match primes[index].contains(g) {
                Ok(false) => Some(Ok(g)),
                Ok(true) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
            .ok_or_else(|| {
                Error::MinhVerification(format!(
                    "no generator of component {j} avoids component {index}"
                ))
            })?;
        separator = separator.mul(factor)?;
    }
    Ok(separator)
}

/// Sampling controls for the scaled-limit table.
#[derive(Clone, Debug)]
pub struct LimitsOptions {
    /// The bracket exponents q′; each must be a power of the characteristic.
    pub exponents: Vec<u64>,
    pub equi: EquiOptions,
}

impl Default for LimitsOptions {
    fn default() -> Self {
        LimitsOptions {
            exponents: vec![1, 2, 4],
            equi: EquiOptions::default(),
        }
    }
}

/// One row of the scaled-limit table.
#[derive(Clone, Debug)]
pub struct LimitsRow {
    pub exponent: u64,
    /// `e_HK(I + J^{[q′]}) / q′^r`.
    pub scaled: Estimate,
}

/// The scaled multiplicities of `I + J^{[q′]}` against the condition-(b)
/// right-hand side they converge to from above.
#[derive(Clone, Debug)]
pub struct LimitsReport {
    pub rows: Vec<LimitsRow>,
    pub rhs: Estimate,
    /// Whether the scaled values are non-increasing within uncertainties.
    pub non_increasing: bool,
    pub assumptions: Vec<String>,
}

/// Tabulates `e_HK(I + J^{[q′]}) / q′^r` for each requested exponent and
/// compares the trend against the localized right-hand side.
pub fn ehk_limits(
    ideal: &Ideal,
    bracket: &Ideal,
    minh: &MinhAssertion,
    options: &LimitsOptions,
) -> Result<LimitsReport> {
    let pres = ideal.presentation();
    if !bracket.presentation().same_presentation(pres) {
        return Err(Error::RingMismatch(
            "the bracketed ideal must live in the same presented ring".into(),
        ));
    }
    let quotient_dim = ideal.krull_dimension()?;
    if quotient_dim == 0 {
        return Err(Error::InvalidInput(
            "the scaled-limit table needs a positive-dimensional ideal".into(),
        ));
    }
    if options.exponents.is_empty() {
        return Err(Error::InvalidInput("no exponents requested".into()));
    }

    let primes = minh.verify(ideal)?;
    let rhs = condition_b_rhs(
        ideal,
        bracket.generators(),
        &primes,
        &minh.components,
        &options.equi,
    )?;

    let mut rows = Vec::with_capacity(options.exponents.len());
    for &exponent in &options.exponents {
        let bracketed = bracket.frobenius_power(exponent)?;
        let total = ideal.sum(&bracketed)?;
        let records = hk_function(&total, &options.equi.qs_lhs)?;
        let estimate = multiplicity_estimate(&records, options.equi.estimator)?;
        let scale = BigRational::from_integer(BigInt::from(exponent).pow(quotient_dim as u32));
        rows.push(LimitsRow {
            exponent,
            scaled: estimate.div_exact(&scale),
        });
    }

    let non_increasing = rows.windows(2).all(|pair| {
        let slack = &pair[0].scaled.uncertainty + &pair[1].scaled.uncertainty;
        pair[1].scaled.value <= &pair[0].scaled.value + slack
    });

    let mut assumptions = minh.assumptions();
    assumptions.extend(rhs.assumptions);

    Ok(LimitsReport {
        rows,
        rhs: rhs.estimate,
        non_increasing,
        assumptions,
    })
}
