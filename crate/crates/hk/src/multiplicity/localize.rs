//! Localization descriptors.
//!
//! Lengths over a local ring are computed by moving the situation into a
//! presented ring whose origin carries the local data:
//!
//! * localizing at a rational point translates that point to the origin by
//!   the automorphism `x_i -> x_i + a_i`;
//! * localizing at the generic point of a coordinate axis inverts the axis
//!   variable, i.e. base-changes the coefficients to the rational function
//!   field in that variable.
//!
//! Both transports preserve colengths of ideals that become primary to the
//! origin, which is exactly the condition [`hk_function_at`] verifies.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElem};
use crate::groebner::{presentation_dimension, Ideal};
use crate::poly::{PolyRing, Polynomial, RingPresentation};

use super::{hk_function, HkRecord};

/// A supported localization of a presented ring.
#[derive(Clone, Debug, PartialEq)]
pub enum Localization {
    /// The maximal ideal of a rational point, given by its coordinates.
    AtRationalPoint { point: Vec<FieldElem> },
    /// The generic point of the coordinate axis of `variable` (the prime
    /// generated by all other variables).
    AtCurveGenericPoint { variable: String },
}

impl fmt::Display for Localization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Localization::AtRationalPoint { point } => {
                let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
                write!(f, "the point ({})", coords.join(", "))
            }
            Localization::AtCurveGenericPoint { variable } => {
                write!(f, "the generic point of the {variable}-axis")
            }
        }
    }
}

/// A localization together with the presented ring realizing it at the
/// origin and the variable images implementing the transport.
#[derive(Clone, Debug)]
pub struct LocalizedRing {
    source: Arc<RingPresentation>,
    target: Arc<RingPresentation>,
    images: Vec<Polynomial>,
    kind: Localization,
}

impl LocalizedRing {
    pub fn new(source: &Arc<RingPresentation>, kind: &Localization) -> Result<LocalizedRing> {
        match kind {
            Localization::AtRationalPoint { point } => Self::at_rational_point(source, point),
            Localization::AtCurveGenericPoint { variable } => {
                Self::at_curve_generic_point(source, variable)
            }
        }
    }

    /// Localizes at the maximal ideal of a rational point.  The point must
    /// lie on the zero set of the relations.
    pub fn at_rational_point(
        source: &Arc<RingPresentation>,
        point: &[FieldElem],
    ) -> Result<LocalizedRing> {
        let ring = source.ring();
        if point.len() != ring.num_vars() {
            return Err(Error::InvalidInput(format!(
                "the ring has {} variables but the point has {} coordinates",
                ring.num_vars(),
                point.len()
            )));
        }
        for c in point {
            if !c.same_field_desc(ring.field()) {
                return Err(Error::DescriptorMismatch(
                    "point coordinates live in a different field than the ring".into(),
                ));
            }
        }
        let eval_ring = PolyRing::new(ring.field(), &[])?;
        let consts: Vec<Polynomial> = point
            .iter()
            .map(|c| Polynomial::constant(&eval_ring, c.clone()))
            .collect();
        for rel in source.relations() {
            if !rel.substitute(&eval_ring, &consts)?.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "the point does not lie on the zero set of `{rel}`"
                )));
            }
        }
        let images: Vec<Polynomial> = ring
            .vars()
            .iter()
            .zip(point)
            .map(|(name, c)| {
                Polynomial::variable(ring, name)?
                    .add(&Polynomial::constant(ring, c.clone()))
            })
            .collect::<Result<_>>()?;
        let relations = source
            .relations()
            .iter()
            .map(|r| r.substitute(ring, &images))
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalizedRing {
            source: source.clone(),
            target: RingPresentation::new(ring, relations)?,
            images,
            kind: Localization::AtRationalPoint {
                point: point.to_vec(),
            },
        })
    }

    /// Localizes at the generic point of the axis of `variable`, i.e. at the
    /// prime generated by all other variables.  The coefficient field must
    /// be a prime field (the target coefficients are rational functions in
    /// `variable`), and the axis must lie on the zero set of the relations.
    pub fn at_curve_generic_point(
        source: &Arc<RingPresentation>,
        variable: &str,
    ) -> Result<LocalizedRing> {
        let ring = source.ring();
        let field = ring.field();
        if !matches!(**field, FieldDescriptor::Prime { .. }) {
            return Err(Error::UnsupportedLocalization(
                "axis localization needs a prime coefficient field".into(),
            ));
        }
        let Some(idx) = ring.var_index(variable) else {
            return Err(Error::UnknownVariable(variable.into()));
        };

        // the axis itself must lie on the variety: every relation must
        // vanish identically after killing the other variables
        let axis_ring = PolyRing::new(field, &[variable])?;
        let axis_var = Polynomial::variable(&axis_ring, variable)?;
        let axis_images: Vec<Polynomial> = (0..ring.num_vars())
            .map(|i| {
                if i == idx {
                    axis_var.clone()
                } else {
                    Polynomial::zero(&axis_ring)
                }
            })
            .collect();
        for rel in source.relations() {
            if !rel.substitute(&axis_ring, &axis_images)?.is_zero() {
                return Err(Error::UnsupportedLocalization(format!(
                    "the {variable}-axis does not lie on the zero set of `{rel}`"
                )));
            }
        }

        let target_field = FieldDescriptor::rational_function(field.characteristic(), variable)?;
        let rest: Vec<&str> = ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let target_ring = PolyRing::new(&target_field, &rest)?;
        let gen = FieldElem::generator(&target_field)?;
        let images: Vec<Polynomial> = ring
            .vars()
            .iter()
            .enumerate()
            .map(|(i, name)| {
                if i == idx {
                    Ok(Polynomial::constant(&target_ring, gen.clone()))
                } else {
                    Polynomial::variable(&target_ring, name)
                }
            })
            .collect::<Result<_>>()?;
        let relations = source
            .relations()
            .iter()
            .map(|r| r.substitute(&target_ring, &images))
            .collect::<Result<Vec<_>>>()?;
        let target = RingPresentation::new(&target_ring, relations)?;

        let source_dim = presentation_dimension(source)?;
        let target_dim = match presentation_dimension(&target) {
            Ok(d) => d,
            Err(Error::UnitIdeal) => {
                return Err(Error::UnsupportedLocalization(format!(
                    "no component of the variety survives inverting `{variable}`"
                )))
            }
            Err(e) => return Err(e),
        };
        if target_dim + 1 != source_dim {
            return Err(Error::UnsupportedLocalization(format!(
                "inverting `{variable}` should drop the dimension from {source_dim} by one, got {target_dim}"
            )));
        }
        Ok(LocalizedRing {
            source: source.clone(),
            target,
            images,
            kind: Localization::AtCurveGenericPoint {
                variable: variable.into(),
            },
        })
    }

    pub fn source(&self) -> &Arc<RingPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingPresentation> {
        &self.target
    }

    pub fn kind(&self) -> &Localization {
        &self.kind
    }

    pub fn transport_polynomial(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_ring(self.source.ring()) {
            return Err(Error::RingMismatch(
                "the polynomial does not live in the source ring of the localization".into(),
            ));
        }
        f.substitute(self.target.ring(), &self.images)
    }

    pub fn transport_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if !ideal.presentation().same_presentation(&self.source) {
            return Err(Error::RingMismatch(
                "the ideal does not live in the source ring of the localization".into(),
            ));
        }
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.transport_polynomial(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.target, gens)
    }
}

/// The maximal ideal of the origin: the ideal generated by all variables.
pub(crate) fn origin_maximal_ideal(pres: &Arc<RingPresentation>) -> Result<Ideal> {
    let ring = pres.ring();
    let gens = ring
        .vars()
        .iter()
        .map(|v| Polynomial::variable(ring, v))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(pres, gens)
}

/// The Hilbert–Kunz function of `ideal` over the localized ring.  The
/// transported ideal must be primary to the origin, which makes the global
/// colengths equal to the local lengths.
pub fn hk_function_at(
    loc: &LocalizedRing,
    ideal: &Ideal,
    qs: &[u64],
) -> Result<Vec<HkRecord>> {
    let transported = loc.transport_ideal(ideal)?;
    if !transported.is_supported_only_at_origin()? {
        return Err(Error::NotSupportedAtOrigin(format!(
            "the ideal is not primary to {} after transport",
            loc.kind()
        )));
    }
    hk_function(&transported, qs)
}
