//! Declarative run configuration (TOML) and its resolution to live objects.
//!
//! A configuration names one coefficient field, one presented ring, and any
//! number of ideals and parameter systems; subcommand sections refer to
//! those by name.  Unknown keys anywhere in the file are hard errors, so a
//! typo cannot silently change what a run means.

use std::path::PathBuf;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElem};
use crate::groebner::Ideal;
use crate::multiplicity::{Localization, MinhAssertion, MinhComponent};
use crate::poly::parse::parse_polynomial;
use crate::poly::{PolyRing, Polynomial, RingPresentation};

/// Top-level configuration file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub field: FieldSpec,
    pub ring: RingSpec,
    #[serde(default)]
    pub ideal: Vec<IdealSpec>,
    #[serde(default)]
    pub parameter_system: Vec<ParameterSystemSpec>,
    #[serde(default)]
    pub minh: Vec<MinhSpec>,
    /// A caller-asserted test element for tight-closure checks.
    #[serde(default)]
    pub test_element: Option<String>,
    #[serde(default)]
    pub run: RunSpec,
    #[serde(default)]
    pub output: OutputSpec,
    #[serde(default)]
    pub equi: Option<EquiSpec>,
    #[serde(default)]
    pub capture: Option<CaptureSpec>,
    #[serde(default)]
    pub cmtest: Option<CmSpec>,
    #[serde(default)]
    pub assprime: Option<AssprimeSpec>,
    #[serde(default)]
    pub monotone: Option<MonotoneSpec>,
    #[serde(default)]
    pub limits: Option<LimitsSpec>,
}

/// Coefficient field: `kind` is `prime`, `extension` or
/// `rational_function`; the other keys apply only where noted.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub kind: String,
    pub p: u64,
    /// Extension fields: generator symbol.
    #[serde(default)]
    pub generator: Option<String>,
    /// Extension fields: minimal polynomial coefficients, constant first.
    #[serde(default)]
    pub minpoly: Option<Vec<u64>>,
    /// Rational function fields: transcendental variable symbol.
    #[serde(default)]
    pub variable: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterSystemSpec {
    pub name: String,
    pub elements: Vec<String>,
}

/// One asserted top-dimensional component, with an optional localization
/// recipe for subcommands that need local multiplicities.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinhSpec {
    pub prime: Vec<String>,
    #[serde(default)]
    pub localize: Option<LocalizeSpec>,
}

/// `kind = "point"` with coordinates, or `kind = "curve"` with the
/// coordinate-axis variable.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalizeSpec {
    pub kind: String,
    #[serde(default)]
    pub point: Option<Vec<String>>,
    #[serde(default)]
    pub variable: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    /// Frobenius exponents to sample; defaults to the powers of the
    /// characteristic up to 16 (or up to `--qmax`).
    #[serde(default)]
    pub qs: Option<Vec<u64>>,
    /// Ordinary-power bounds for sequence subcommands.
    #[serde(default)]
    pub ns: Option<Vec<u64>>,
    /// S-pair budget (overridden by `HK_BUDGET` and `--budget`).
    #[serde(default)]
    pub budget: Option<u64>,
    /// Worker threads (overridden by `--jobs`).
    #[serde(default)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub json: Option<PathBuf>,
    #[serde(default)]
    pub manifest: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquiSpec {
    pub ideal: String,
    pub parameters: String,
    #[serde(default)]
    pub qs_lhs: Option<Vec<u64>>,
    #[serde(default)]
    pub qs_quotient: Option<Vec<u64>>,
    #[serde(default)]
    pub qs_local: Option<Vec<u64>>,
    #[serde(default)]
    pub lech_n_max: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaptureSpec {
    pub ideal: String,
    pub parameters: String,
    /// Frobenius exponent of the power being tested.
    pub q: u64,
    /// Exponent bound for the tight-closure semidecisions.
    #[serde(default)]
    pub q_max: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CmSpec {
    pub ideal: String,
    pub parameters: String,
    #[serde(default)]
    pub qs: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssprimeSpec {
    pub ideal: String,
    /// Names of `[[ideal]]` entries holding the candidate maximal ideals.
    pub maximals: Vec<String>,
    #[serde(default)]
    pub qs: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonotoneSpec {
    pub ideal: String,
    pub parameter: String,
    #[serde(default)]
    pub n_max: Option<u64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsSpec {
    pub ideal: String,
    /// Name of the ideal whose Frobenius powers are bracketed on.
    pub bracket: String,
    #[serde(default)]
    pub exponents: Option<Vec<u64>>,
}

/// A parsed configuration resolved to live objects.
pub struct Scenario {
    pub spec: ScenarioConfig,
    pub presentation: Arc<RingPresentation>,
    pub ideals: Vec<(String, Ideal)>,
    pub parameter_systems: Vec<(String, Vec<Polynomial>)>,
    pub minh: Option<MinhAssertion>,
    pub test_element: Option<Polynomial>,
}

impl Scenario {
    /// Parses and resolves a TOML configuration.  Unknown keys fail here.
    pub fn from_toml(text: &str) -> Result<Scenario> {
        let config: ScenarioConfig =
            toml::from_str(text).map_err(|e| Error::Config(format!("configuration: {e}")))?;
        Scenario::resolve(config)
    }

    pub fn resolve(spec: ScenarioConfig) -> Result<Scenario> {
        let field = resolve_field(&spec.field)?;
        let vars: Vec<&str> = spec.ring.variables.iter().map(String::as_str).collect();
        let ring = PolyRing::new(&field, &vars)?;
        let relations = spec
            .ring
            .relations
            .iter()
            .map(|text| parse_polynomial(&ring, text))
            .collect::<Result<Vec<_>>>()?;
        let presentation = RingPresentation::new(&ring, relations)?;

        let mut ideals = Vec::with_capacity(spec.ideal.len());
        for entry in &spec.ideal {
            if ideals.iter().any(|(name, _)| name == &entry.name) {
                return Err(Error::Config(format!("duplicate ideal name {:?}", entry.name)));
            }
            let gens: Vec<&str> = entry.generators.iter().map(String::as_str).collect();
            ideals.push((entry.name.clone(), Ideal::parse(&presentation, &gens)?));
        }

        let mut parameter_systems = Vec::with_capacity(spec.parameter_system.len());
        for entry in &spec.parameter_system {
            if parameter_systems.iter().any(|(name, _)| name == &entry.name) {
                return Err(Error::Config(format!(
                    "duplicate parameter system name {:?}",
                    entry.name
                )));
            }
            let elements = entry
                .elements
                .iter()
                .map(|text| parse_polynomial(&ring, text))
                .collect::<Result<Vec<_>>>()?;
            parameter_systems.push((entry.name.clone(), elements));
        }

        let minh = if spec.minh.is_empty() {
            None
        } else {
            let mut components = Vec::with_capacity(spec.minh.len());
            for entry in &spec.minh {
                let gens: Vec<&str> = entry.prime.iter().map(String::as_str).collect();
                let prime = Ideal::parse(&presentation, &gens)?;
                let localization = entry
                    .localize
                    .as_ref()
                    .map(|loc| resolve_localization(&ring, loc))
                    .transpose()?;
                components.push(MinhComponent {
                    prime_generators: prime.generators().to_vec(),
                    localization,
                });
            }
            Some(MinhAssertion { components })
        };

        let test_element = spec
            .test_element
            .as_deref()
            .map(|text| parse_polynomial(&ring, text))
            .transpose()?;

        Ok(Scenario {
            spec,
            presentation,
            ideals,
            parameter_systems,
            minh,
            test_element,
        })
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ideal)| ideal)
            .ok_or_else(|| Error::Config(format!("no ideal named {name:?} in the configuration")))
    }

    pub fn parameters(&self, name: &str) -> Result<&[Polynomial]> {
        self.parameter_systems
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, params)| params.as_slice())
            .ok_or_else(|| {
                Error::Config(format!(
                    "no parameter system named {name:?} in the configuration"
                ))
            })
    }

    pub fn minh_required(&self) -> Result<&MinhAssertion> {
        self.minh.as_ref().ok_or_else(|| {
            Error::Config("this subcommand needs at least one [[minh]] component".into())
        })
    }

    pub fn test_element_required(&self) -> Result<&Polynomial> {
        self.test_element.as_ref().ok_or_else(|| {
            Error::Config("this subcommand needs a test_element in the configuration".into())
        })
    }

    /// Characteristic of the coefficient field.
    pub fn characteristic(&self) -> u64 {
        self.presentation.ring().field().characteristic()
    }
}

fn resolve_field(spec: &FieldSpec) -> Result<Arc<FieldDescriptor>> {
    let reject = |key: &str, present: bool| -> Result<()> {
        if present {
            Err(Error::Config(format!(
                "field key {key:?} does not apply to kind {:?}",
                spec.kind
            )))
        } else {
            Ok(())
        }
    };
    match spec.kind.as_str() {
        "prime" => {
            reject("generator", spec.generator.is_some())?;
            reject("minpoly", spec.minpoly.is_some())?;
            reject("variable", spec.variable.is_some())?;
            FieldDescriptor::prime(spec.p)
        }
        "extension" => {
            reject("variable", spec.variable.is_some())?;
            let generator = spec.generator.as_deref().ok_or_else(|| {
                Error::Config("extension fields need a generator symbol".into())
            })?;
            let minpoly = spec.minpoly.as_deref().ok_or_else(|| {
                Error::Config(
                    "extension fields need minpoly coefficients (constant first)".into(),
                )
            })?;
            FieldDescriptor::extension(spec.p, generator, minpoly)
        }
        "rational_function" => {
            reject("generator", spec.generator.is_some())?;
            reject("minpoly", spec.minpoly.is_some())?;
            let variable = spec.variable.as_deref().ok_or_else(|| {
                Error::Config("rational function fields need a variable symbol".into())
            })?;
            FieldDescriptor::rational_function(spec.p, variable)
        }
        other => Err(Error::Config(format!(
            "unknown field kind {other:?}; expected prime, extension or rational_function"
        ))),
    }
}

fn resolve_localization(ring: &Arc<PolyRing>, spec: &LocalizeSpec) -> Result<Localization> {
    match spec.kind.as_str() {
        "point" => {
            if spec.variable.is_some() {
                return Err(Error::Config(
                    "localize key \"variable\" does not apply to kind \"point\"".into(),
                ));
            }
            let coords = spec.point.as_ref().ok_or_else(|| {
                Error::Config("point localizations need coordinates".into())
            })?;
            let point = coords
                .iter()
                .map(|text| constant_field_element(ring, text))
                .collect::<Result<Vec<_>>>()?;
            Ok(Localization::AtRationalPoint { point })
        }
        "curve" => {
            if spec.point.is_some() {
                return Err(Error::Config(
                    "localize key \"point\" does not apply to kind \"curve\"".into(),
                ));
            }
            let variable = spec.variable.clone().ok_or_else(|| {
                Error::Config("curve localizations need the axis variable".into())
            })?;
            Ok(Localization::AtCurveGenericPoint { variable })
        }
        other => Err(Error::Config(format!(
            "unknown localize kind {other:?}; expected point or curve"
        ))),
    }
}

/// Parses a constant expression like `1`, `m^3` or `t+1` into a field
/// element.
fn constant_field_element(ring: &Arc<PolyRing>, text: &str) -> Result<FieldElem> {
    let poly = parse_polynomial(ring, text)?;
    poly.constant_value().ok_or_else(|| {
        Error::Config(format!(
            "coordinate {text:?} involves ring variables; coordinates must be field constants"
        ))
    })
}

/// The default exponent grid: powers of the characteristic up to the cap.
pub fn default_qs(p: u64, cap: u64) -> Vec<u64> {
    let mut qs = Vec::new();
    let mut q = p;
    while q <= cap {
        qs.push(q);
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    qs
}

/// Resolves the exponent grid: an explicit list is filtered by `qmax`; an
/// absent list defaults to powers of `p` up to `qmax` (or 16).
pub fn effective_qs(explicit: Option<&[u64]>, p: u64, qmax: Option<u64>) -> Vec<u64> {
    match explicit {
        Some(qs) => match qmax {
            Some(cap) => qs.iter().copied().filter(|q| *q <= cap).collect(),
            None => qs.to_vec(),
        },
        None => default_qs(p, qmax.unwrap_or(16)),
    }
}

/// Resolves the S-pair budget with precedence flag > environment > config.
pub fn resolve_budget(
    flag: Option<u64>,
    env: Option<&str>,
    config: Option<u64>,
) -> Result<u64> {
    if let Some(value) = flag {
        return Ok(value);
    }
    if let Some(text) = env {
        return text.trim().parse().map_err(|_| {
            Error::Config(format!("HK_BUDGET must be an integer, got {text:?}"))
        });
    }
    Ok(config.unwrap_or(crate::groebner::DEFAULT_PAIR_BUDGET))
}
