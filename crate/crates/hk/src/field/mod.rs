//! Coefficient field tower: `F_p`, `F_{p^k}` and `F_p(t)`.
//!
//! Every element lives in exactly one field, identified by a shared
//! [`FieldDescriptor`]. Elements are kept in canonical form at all times:
//!
//! * prime fields: a residue in `0..p`;
//! * extensions: the residue of a polynomial in the generator, reduced modulo
//!   the minimal polynomial (degree `< k`);
//! * rational function fields: a reduced fraction `num/den` with monic
//!   denominator (the zero element is `0/1`).
//!
//! Canonical forms make structural equality coincide with field equality,
//! which the polynomial layer and the Groebner engine rely on.

mod upoly;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
pub(crate) use upoly::is_prime;
pub use upoly::UPoly;

/// Maximal supported characteristic (`p <= 2^31` keeps products in `u64`).
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;
/// Maximal supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 16;

/// Description of one field in the tower.
#[derive(Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// The prime field `F_p`.
    Prime { p: u64 },
    /// `F_{p^k} = F_p[g]/(minpoly(g))` with `minpoly` monic irreducible of
    /// degree `k`.
    Extension {
        p: u64,
        degree: usize,
        minpoly: UPoly,
        generator: String,
    },
    /// The rational function field `F_p(t)` over the prime field.
    RationalFunction { p: u64, variable: String },
}

impl FieldDescriptor {
    /// `F_p` for a prime `p <= 2^31`.
    pub fn prime(p: u64) -> Result<Arc<Self>> {
        validate_characteristic(p)?;
        Ok(Arc::new(FieldDescriptor::Prime { p }))
    }

    /// `F_{p^k}` with the given generator symbol and minimal polynomial
    /// coefficients (ascending, constant first). The minimal polynomial is
    /// normalized to monic form and verified irreducible.
    pub fn extension(p: u64, generator: &str, minpoly_coeffs: &[u64]) -> Result<Arc<Self>> {
        validate_characteristic(p)?;
        validate_symbol(generator)?;
        let minpoly = UPoly::from_coeffs(minpoly_coeffs.to_vec(), p).monic(p)?;
        let degree = match minpoly.degree() {
            Some(k) if (2..=MAX_EXTENSION_DEGREE).contains(&k) => k,
            Some(k) => {
                return Err(Error::InvalidDescriptor(format!(
                    "extension degree {k} outside supported range 2..={MAX_EXTENSION_DEGREE}"
                )))
            }
            None => {
                return Err(Error::InvalidDescriptor(
                    "minimal polynomial must be nonzero".into(),
                ))
            }
        };
        if !minpoly.is_irreducible(p)? {
            return Err(Error::InvalidDescriptor(format!(
                "minimal polynomial {} is reducible over F_{p}",
                minpoly.format(generator)
            )));
        }
        Ok(Arc::new(FieldDescriptor::Extension {
            p,
            degree,
            minpoly,
            generator: generator.to_string(),
        }))
    }

    /// `F_p(t)` with the given transcendental symbol.
    pub fn rational_function(p: u64, variable: &str) -> Result<Arc<Self>> {
        validate_characteristic(p)?;
        validate_symbol(variable)?;
        Ok(Arc::new(FieldDescriptor::RationalFunction {
            p,
            variable: variable.to_string(),
        }))
    }

    /// The characteristic `p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime { p }
            | FieldDescriptor::Extension { p, .. }
            | FieldDescriptor::RationalFunction { p, .. } => *p,
        }
    }

    /// The symbol that may appear in element text (extension generator or
    /// function variable), if any.
    pub fn symbol(&self) -> Option<&str> {
        match self {
            FieldDescriptor::Prime { .. } => None,
            FieldDescriptor::Extension { generator, .. } => Some(generator),
            FieldDescriptor::RationalFunction { variable, .. } => Some(variable),
        }
    }

    /// Number of elements for finite fields, `None` for `F_p(t)`.
    pub fn order(&self) -> Option<u128> {
        match self {
            FieldDescriptor::Prime { p } => Some(*p as u128),
            FieldDescriptor::Extension { p, degree, .. } => {
                Some((*p as u128).pow(*degree as u32))
            }
            FieldDescriptor::RationalFunction { .. } => None,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime { p } => write!(f, "F_{p}"),
            FieldDescriptor::Extension {
                p,
                degree,
                minpoly,
                generator,
            } => write!(
                f,
                "F_{p}[{generator}]/({})  (order {p}^{degree})",
                minpoly.format(generator)
            ),
            FieldDescriptor::RationalFunction { p, variable } => write!(f, "F_{p}({variable})"),
        }
    }
}

fn validate_characteristic(p: u64) -> Result<()> {
    if p > MAX_CHARACTERISTIC {
        return Err(Error::InvalidDescriptor(format!(
            "characteristic {p} exceeds 2^31"
        )));
    }
    if !is_prime(p) {
        return Err(Error::InvalidDescriptor(format!("{p} is not prime")));
    }
    Ok(())
}

fn validate_symbol(s: &str) -> Result<()> {
    let ok = !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDescriptor(format!(
            "`{s}` is not a valid symbol (ASCII identifier required)"
        )))
    }
}

/// Canonical internal representation of one element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Prime(u64),
    Ext(UPoly),
    Frac { num: UPoly, den: UPoly },
}

/// One field element, tagged with its field.
#[derive(Clone, Debug)]
pub struct FieldElem {
    desc: Arc<FieldDescriptor>,
    repr: Repr,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.repr == other.repr
    }
}
impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl FieldElem {
    fn new(desc: &Arc<FieldDescriptor>, repr: Repr) -> Self {
        FieldElem {
            desc: Arc::clone(desc),
            repr,
        }
    }

    /// The zero element.
    pub fn zero(desc: &Arc<FieldDescriptor>) -> Self {
        let repr = match &**desc {
            FieldDescriptor::Prime { .. } => Repr::Prime(0),
            FieldDescriptor::Extension { .. } => Repr::Ext(UPoly::zero()),
            FieldDescriptor::RationalFunction { .. } => Repr::Frac {
                num: UPoly::zero(),
                den: UPoly::one(),
            },
        };
        FieldElem::new(desc, repr)
    }

    /// The unit element.
    pub fn one(desc: &Arc<FieldDescriptor>) -> Self {
        FieldElem::from_integer(desc, 1)
    }

    /// The image of an integer under the unital ring map `Z -> field`.
    pub fn from_integer(desc: &Arc<FieldDescriptor>, n: i64) -> Self {
        let p = desc.characteristic();
        let r = n.rem_euclid(p as i64) as u64;
        let repr = match &**desc {
            FieldDescriptor::Prime { .. } => Repr::Prime(r),
            FieldDescriptor::Extension { .. } => Repr::Ext(UPoly::constant(r, p)),
            FieldDescriptor::RationalFunction { .. } => Repr::Frac {
                num: UPoly::constant(r, p),
                den: UPoly::one(),
            },
        };
        FieldElem::new(desc, repr)
    }

    /// The extension generator `g` or the function-field variable `t`;
    /// errors on prime fields.
    pub fn generator(desc: &Arc<FieldDescriptor>) -> Result<Self> {
        match &**desc {
            FieldDescriptor::Prime { .. } => Err(Error::InvalidDescriptor(
                "prime fields have no generator symbol".into(),
            )),
            FieldDescriptor::Extension { .. } => Ok(FieldElem::new(desc, Repr::Ext(UPoly::x()))),
            FieldDescriptor::RationalFunction { .. } => Ok(FieldElem::new(
                desc,
                Repr::Frac {
                    num: UPoly::x(),
                    den: UPoly::one(),
                },
            )),
        }
    }

    /// Extension element from generator-power coefficients (ascending).
    /// Errors unless the descriptor is an extension field.
    pub fn from_generator_coeffs(desc: &Arc<FieldDescriptor>, coeffs: &[u64]) -> Result<Self> {
        match &**desc {
            FieldDescriptor::Extension { p, minpoly, .. } => {
                let reduced = UPoly::from_coeffs(coeffs.to_vec(), *p).rem(minpoly, *p)?;
                Ok(FieldElem::new(desc, Repr::Ext(reduced)))
            }
            _ => Err(Error::InvalidDescriptor(
                "generator coefficients require an extension field".into(),
            )),
        }
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    pub fn same_field(&self, other: &FieldElem) -> bool {
        Arc::ptr_eq(&self.desc, &other.desc) || self.desc == other.desc
    }

    /// Whether this element lives in the field described by `desc`.
    pub fn same_field_desc(&self, desc: &Arc<FieldDescriptor>) -> bool {
        Arc::ptr_eq(&self.desc, desc) || *self.desc == **desc
    }

    fn check_field(&self, other: &FieldElem) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(format!(
                "{} vs {}",
                self.desc, other.desc
            )))
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime(a) => *a == 0,
            Repr::Ext(f) => f.is_zero(),
            Repr::Frac { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime(a) => *a == 1,
            Repr::Ext(f) => f.is_one(),
            Repr::Frac { num, den } => num.is_one() && den.is_one(),
        }
    }

    fn frac(desc: &Arc<FieldDescriptor>, num: UPoly, den: UPoly, p: u64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(FieldElem::new(
                desc,
                Repr::Frac {
                    num: UPoly::zero(),
                    den: UPoly::one(),
                },
            ));
        }
        let g = num.gcd(&den, p)?;
        let (num, _) = num.divrem(&g, p)?;
        let (den, _) = den.divrem(&g, p)?;
        let scale = upoly_lc_inv(&den, p)?;
        Ok(FieldElem::new(
            desc,
            Repr::Frac {
                num: num.mul_scalar(scale, p),
                den: den.mul_scalar(scale, p),
            },
        ))
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_field(other)?;
        let p = self.desc.characteristic();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(upoly::add_m(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => Repr::Ext(a.add(b, p)),
            (
                Repr::Frac { num: n1, den: d1 },
                Repr::Frac { num: n2, den: d2 },
            ) => {
                let num = n1.mul(d2, p).add(&n2.mul(d1, p), p);
                let den = d1.mul(d2, p);
                return FieldElem::frac(&self.desc, num, den, p);
            }
            _ => unreachable!("matching descriptors imply matching representations"),
        };
        Ok(FieldElem::new(&self.desc, repr))
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        let p = self.desc.characteristic();
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(if *a == 0 { 0 } else { p - a }),
            Repr::Ext(f) => Repr::Ext(UPoly::zero().sub(f, p)),
            Repr::Frac { num, den } => Repr::Frac {
                num: UPoly::zero().sub(num, p),
                den: den.clone(),
            },
        };
        FieldElem::new(&self.desc, repr)
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_field(other)?;
        let p = self.desc.characteristic();
        let repr = match (&self.repr, &other.repr) {
            (Repr::Prime(a), Repr::Prime(b)) => Repr::Prime(upoly::mul_m(*a, *b, p)),
            (Repr::Ext(a), Repr::Ext(b)) => {
                let minpoly = self.minpoly();
                Repr::Ext(a.mul(b, p).rem(minpoly, p)?)
            }
            (
                Repr::Frac { num: n1, den: d1 },
                Repr::Frac { num: n2, den: d2 },
            ) => {
                return FieldElem::frac(&self.desc, n1.mul(n2, p), d1.mul(d2, p), p);
            }
            _ => unreachable!("matching descriptors imply matching representations"),
        };
        Ok(FieldElem::new(&self.desc, repr))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.desc.characteristic();
        let repr = match &self.repr {
            Repr::Prime(a) => Repr::Prime(upoly::inv_m(*a, p)?),
            Repr::Ext(f) => Repr::Ext(f.inv_mod(self.minpoly(), p)?),
            Repr::Frac { num, den } => {
                return FieldElem::frac(&self.desc, den.clone(), num.clone(), p);
            }
        };
        Ok(FieldElem::new(&self.desc, repr))
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.mul(&other.inv()?)
    }

    /// `self^exp` by binary exponentiation (`exp >= 0`).
    pub fn pow(&self, mut exp: u64) -> Result<FieldElem> {
        let mut base = self.clone();
        let mut acc = FieldElem::one(&self.desc);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// The `e`-fold Frobenius `a -> a^(p^e)`, computed by repeated `p`-th
    /// powers so the exponent never overflows.
    pub fn frobenius(&self, e: u32) -> Result<FieldElem> {
        let p = self.desc.characteristic();
        match &self.repr {
            // Fermat: the Frobenius is the identity on the prime field.
            Repr::Prime(_) => Ok(self.clone()),
            Repr::Ext(_) => {
                let mut acc = self.clone();
                for _ in 0..e {
                    acc = acc.pow(p)?;
                }
                Ok(acc)
            }
            Repr::Frac { num, den } => {
                // (n/d)^p = n(t^p)/d(t^p): exponent stretch, already reduced
                // (a common factor of the stretches would descend to one of
                // num/den themselves).
                let mut num = num.clone();
                let mut den = den.clone();
                for _ in 0..e {
                    num = num.frobenius_stretch(p);
                    den = den.frobenius_stretch(p);
                }
                Ok(FieldElem::new(&self.desc, Repr::Frac { num, den }))
            }
        }
    }

    fn minpoly(&self) -> &UPoly {
        match &*self.desc {
            FieldDescriptor::Extension { minpoly, .. } => minpoly,
            _ => unreachable!("minpoly requested outside an extension field"),
        }
    }

    /// Unital embedding into `target`.
    ///
    /// Supported maps: the identity; prime field into any field of the same
    /// characteristic; extension into extension of the same characteristic
    /// given an explicit `generator_image` that must satisfy the source
    /// minimal polynomial. Everything else reports `NoEmbedding`.
    pub fn embed(
        &self,
        target: &Arc<FieldDescriptor>,
        generator_image: Option<&FieldElem>,
    ) -> Result<FieldElem> {
        if *self.desc == **target {
            return Ok(FieldElem::new(target, self.repr.clone()));
        }
        let p = self.desc.characteristic();
        if p != target.characteristic() {
            return Err(Error::NoEmbedding(format!(
                "characteristics differ: {} vs {}",
                self.desc, target
            )));
        }
        match (&self.repr, &**target) {
            (Repr::Prime(a), _) => Ok(FieldElem::from_integer(target, *a as i64)),
            (Repr::Ext(f), FieldDescriptor::Extension { .. }) => {
                let image = generator_image.ok_or_else(|| {
                    Error::NoEmbedding(
                        "extension-to-extension embedding needs an explicit generator image"
                            .into(),
                    )
                })?;
                if !Arc::ptr_eq(image.descriptor(), target) && **image.descriptor() != **target {
                    return Err(Error::DescriptorMismatch(
                        "generator image lives in the wrong field".into(),
                    ));
                }
                // The image must be a root of the source minimal polynomial.
                let mp = self.minpoly();
                let mut check = FieldElem::zero(target);
                for &c in mp.coeffs.iter().rev() {
                    check = check
                        .mul(image)?
                        .add(&FieldElem::from_integer(target, c as i64))?;
                }
                if !check.is_zero() {
                    return Err(Error::NoEmbedding(
                        "generator image is not a root of the source minimal polynomial".into(),
                    ));
                }
                // Horner evaluation of the residue at the image.
                let mut acc = FieldElem::zero(target);
                for &c in f.coeffs.iter().rev() {
                    acc = acc
                        .mul(image)?
                        .add(&FieldElem::from_integer(target, c as i64))?;
                }
                Ok(acc)
            }
            _ => Err(Error::NoEmbedding(format!(
                "no supported embedding {} -> {}",
                self.desc, target
            ))),
        }
    }
}

fn upoly_lc_inv(f: &UPoly, p: u64) -> Result<u64> {
    upoly::inv_m(f.leading_coeff(), p)
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.repr, &*self.desc) {
            (Repr::Prime(a), _) => write!(f, "{a}"),
            (Repr::Ext(poly), FieldDescriptor::Extension { generator, .. }) => {
                write!(f, "{}", poly.format(generator))
            }
            (Repr::Frac { num, den }, FieldDescriptor::RationalFunction { variable, .. }) => {
                if den.is_one() {
                    write!(f, "{}", num.format(variable))
                } else {
                    let n = num.format(variable);
                    let d = den.format(variable);
                    let n = if needs_parens(&n) { format!("({n})") } else { n };
                    let d = if needs_parens(&d) { format!("({d})") } else { d };
                    write!(f, "{n}/{d}")
                }
            }
            _ => unreachable!("descriptor/representation mismatch"),
        }
    }
}

/// Whether a rendered operand needs parentheses inside a larger expression.
pub(crate) fn needs_parens(s: &str) -> bool {
    s.contains(['+', '-', '*', '/', '^'])
}
