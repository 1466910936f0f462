//! Multivariate polynomials with dense exponent vectors.
//!
//! A [`PolyRing`] fixes the coefficient field and the ordered variable list;
//! a [`RingPresentation`] adds the quotient relations. [`Polynomial`] stores
//! a sorted term list — strictly descending in the degrevlex order, no zero
//! coefficients, the zero polynomial is the empty list — so structural
//! equality is semantic equality. Monomial comparisons under other orders
//! (lex, elimination blocks) go through [`compare_monomials`]; consumers that
//! need different active orders (the Groebner engine) re-sort term lists on
//! entry.

pub mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{needs_parens, FieldDescriptor, FieldElem};

/// A polynomial ring `K[x_1, ..., x_n]` (no relations).
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Arc<FieldDescriptor>,
    vars: Vec<String>,
}

impl PolyRing {
    /// Build a ring; variable names must be distinct ASCII identifiers and
    /// must not shadow the coefficient-field symbol.
    pub fn new(field: &Arc<FieldDescriptor>, vars: &[&str]) -> Result<Arc<Self>> {
        let mut seen = std::collections::BTreeSet::new();
        for v in vars {
            let valid = !v.is_empty()
                && v.chars().next().unwrap().is_ascii_alphabetic()
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidInput(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if Some(*v) == field.symbol() {
                return Err(Error::InvalidInput(format!(
                    "variable `{v}` shadows the coefficient-field symbol"
                )));
            }
            if !seen.insert(v.to_string()) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing {
            field: Arc::clone(field),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        }))
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

/// Exponent vector; length always equals the ring's variable count.
///
/// The derived `Ord` is the structural (exponent-lexicographic) order used
/// only for deterministic map keys; semantic monomial comparisons go through
/// [`compare_monomials`]. Exponent arithmetic overflow is a hard error
/// (panic), never a silent wraparound.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u64>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .expect("monomial exponent overflow")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    /// Raise every exponent by the factor `q`.
    pub fn power(&self, q: u64) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&e| e.checked_mul(q).expect("monomial exponent overflow"))
                .collect(),
        }
    }
}

/// A monomial order.
///
/// `Block { elim, inner }` compares the first `elim` exponents degrevlex
/// first and falls back to `inner` on the remaining ones; since any positive
/// degree in the leading block dominates, it is an elimination order for the
/// first `elim` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block {
        elim: usize,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Minimum number of variables a ring must have to use this order.
    pub fn min_vars(&self) -> usize {
        match self {
            MonomialOrder::DegRevLex | MonomialOrder::Lex => 0,
            MonomialOrder::Block { elim, inner } => elim + inner.min_vars(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { elim, inner } => write!(f, "block({elim},{inner})"),
        }
    }
}

pub(crate) fn cmp_exps(a: &[u64], b: &[u64], order: &MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::DegRevLex => {
            let da: u64 = a.iter().sum();
            let db: u64 = b.iter().sum();
            match da.cmp(&db) {
                Ordering::Equal => {
                    for i in (0..a.len()).rev() {
                        match a[i].cmp(&b[i]) {
                            Ordering::Equal => continue,
                            // smaller exponent in the last differing slot wins
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            }
        }
        MonomialOrder::Lex => {
            for i in 0..a.len() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        }
        MonomialOrder::Block { elim, inner } => {
            match cmp_exps(&a[..*elim], &b[..*elim], &MonomialOrder::DegRevLex) {
                Ordering::Equal => cmp_exps(&a[*elim..], &b[*elim..], inner),
                other => other,
            }
        }
    }
}

/// Compare two monomials under `order`; errors when the exponent vectors have
/// different lengths or the order's block structure does not fit.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch);
    }
    if order.min_vars() > a.len() {
        return Err(Error::LengthMismatch);
    }
    Ok(cmp_exps(a.exps(), b.exps(), order))
}

/// A polynomial in canonical form (terms strictly descending degrevlex).
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElem)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, FieldElem::one(ring.field()))
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElem) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::one(ring.num_vars()), c)],
        }
    }

    pub fn variable(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(
                Monomial::variable(ring.num_vars(), idx),
                FieldElem::one(ring.field()),
            )],
        })
    }

    /// Build from arbitrary terms: validates ring membership, merges equal
    /// monomials, drops zero coefficients, sorts canonically.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, FieldElem)>) -> Result<Self> {
        let mut map: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != ring.num_vars() {
                return Err(Error::LengthMismatch);
            }
            if !c.same_field_desc(ring.field()) {
                return Err(Error::DescriptorMismatch(format!(
                    "coefficient field differs from ring field {}",
                    ring.field()
                )));
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get().add(&c)?;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, FieldElem)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|(a, _), (b, _)| {
            cmp_exps(b.exps(), a.exps(), &MonomialOrder::DegRevLex)
        });
        Ok(Polynomial {
            ring: Arc::clone(ring),
            terms,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms, strictly descending degrevlex.
    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The constant value when `is_constant`.
    pub fn constant_value(&self) -> Option<FieldElem> {
        if self.terms.is_empty() {
            Some(FieldElem::zero(self.ring.field()))
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        // merge of two canonically sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match cmp_exps(ma.exps(), mb.exps(), &MonomialOrder::DegRevLex) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb)?;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut map: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb)?;
                match map.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c)?;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, FieldElem)> = map.into_iter().collect();
        terms.sort_unstable_by(|(a, _), (b, _)| {
            cmp_exps(b.exps(), a.exps(), &MonomialOrder::DegRevLex)
        });
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    /// Multiply by `coeff * monomial` (used heavily in division loops).
    pub fn mul_term(&self, mon: &Monomial, coeff: &FieldElem) -> Result<Polynomial> {
        if coeff.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.mul(mon), c.mul(coeff)?));
        }
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn mul_scalar(&self, coeff: &FieldElem) -> Result<Polynomial> {
        self.mul_term(&Monomial::one(self.ring.num_vars()), coeff)
    }

    /// `self^exp` by binary exponentiation.
    pub fn pow(&self, mut exp: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// The `q`-th Frobenius power `f^q` for `q = p^e`: characteristic-`p`
    /// freshman's dream makes it termwise (coefficients to the `q`, exponents
    /// scaled by `q`), which is how it is computed.
    pub fn frobenius_power(&self, q: u64) -> Result<Polynomial> {
        let p = self.ring.field().characteristic();
        let e = power_of_char(p, q)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.power(q), c.frobenius(e)?));
        }
        // distinct monomials stay distinct under exponent scaling; coefficient
        // q-th powers of nonzero elements stay nonzero, so the list is still
        // canonical (scaling preserves the degrevlex order).
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    /// Leading term under an arbitrary order (fast path for degrevlex).
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElem)> {
        if self.terms.is_empty() {
            return None;
        }
        if *order == MonomialOrder::DegRevLex {
            let (m, c) = &self.terms[0];
            return Some((m, c));
        }
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| cmp_exps(a.exps(), b.exps(), order))
            .map(|(m, c)| (m, c))
    }

    /// Substitute every variable by its image (same index order) and embed
    /// coefficients into the target ring's field. Supports translations,
    /// variable renames/drops and base change to a function field.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::LengthMismatch);
        }
        for img in images {
            if !img.ring().same_ring(target) {
                return Err(Error::RingMismatch(
                    "substitution image lives in the wrong ring".into(),
                ));
            }
        }
        let same_field = self.ring.field() == target.field();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let coeff = if same_field {
                c.clone()
            } else {
                c.embed(target.field(), None)?
            };
            let mut term = Polynomial::constant(target, coeff);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// The exponent `e` with `p^e == q`; errors when `q` is not a power of `p`.
pub fn power_of_char(p: u64, q: u64) -> Result<u32> {
    if q == 0 {
        return Err(Error::NotAPowerOfP { q, p });
    }
    let mut v = q;
    let mut e = 0u32;
    while v > 1 {
        if v % p != 0 {
            return Err(Error::NotAPowerOfP { q, p });
        }
        v /= p;
        e += 1;
    }
    Ok(e)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            let cs = c.to_string();
            let cs = if needs_parens(&cs) {
                format!("({cs})")
            } else {
                cs
            };
            if factors.is_empty() {
                write!(f, "{cs}")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{cs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Quotient presentation: polynomial ring plus relation ideal generators.
#[derive(Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    pub(crate) dim_cache: OnceLock<usize>,
}

impl RingPresentation {
    pub fn new(ring: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<Self>> {
        for r in &relations {
            if !r.ring().same_ring(ring) {
                return Err(Error::RingMismatch("relation lives in the wrong ring".into()));
            }
        }
        let relations: Vec<Polynomial> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Arc::new(RingPresentation {
            ring: Arc::clone(ring),
            relations,
            dim_cache: OnceLock::new(),
        }))
    }

    /// The free presentation (no relations).
    pub fn free(ring: &Arc<PolyRing>) -> Arc<Self> {
        Arc::new(RingPresentation {
            ring: Arc::clone(ring),
            relations: Vec::new(),
            dim_cache: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn same_presentation(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.ring.same_ring(&other.ring) && self.relations == other.relations)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.relations.is_empty() {
            write!(f, "{}", self.ring)
        } else {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "{}/({})", self.ring, rels.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse::{parse_field_element, parse_polynomial};
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2_xyz() -> Arc<PolyRing> {
        let k = FieldDescriptor::prime(2).unwrap();
        PolyRing::new(&k, &["x", "y", "z"]).unwrap()
    }

    fn pp(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    /// Hand-checked: under degrevlex with x > y > z the degree-2
    /// monomials sort x^2 > xy > y^2 > xz > yz > z^2; in particular xy > z^2.
    #[test]
    fn degrevlex_degree_two_chain() {
        let mk = |e: [u64; 3]| Monomial::from_exps(e.to_vec());
        let chain = [
            mk([2, 0, 0]),
            mk([1, 1, 0]),
            mk([0, 2, 0]),
            mk([1, 0, 1]),
            mk([0, 1, 1]),
            mk([0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(
                compare_monomials(&w[0], &w[1], &MonomialOrder::DegRevLex).unwrap(),
                Ordering::Greater
            );
        }
        assert_eq!(
            compare_monomials(&mk([1, 1, 0]), &mk([0, 0, 2]), &MonomialOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
        // lex instead compares leftmost exponents first: xz > y^2
        assert_eq!(
            compare_monomials(&mk([1, 0, 1]), &mk([0, 2, 0]), &MonomialOrder::Lex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_leading_variables() {
        // Any monomial involving the first variable beats any without it.
        let ord = MonomialOrder::Block {
            elim: 1,
            inner: Box::new(MonomialOrder::DegRevLex),
        };
        let with_u = Monomial::from_exps(vec![1, 0, 0]);
        let without = Monomial::from_exps(vec![0, 7, 5]);
        assert_eq!(
            compare_monomials(&with_u, &without, &ord).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn order_axioms_randomized() {
        let orders = [
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::Block {
                elim: 2,
                inner: Box::new(MonomialOrder::Lex),
            },
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e);
        for _ in 0..2000 {
            let n = 4;
            let mk = |rng: &mut ChaCha8Rng| {
                Monomial::from_exps((0..n).map(|_| rng.gen_range(0..6u64)).collect())
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let c = mk(&mut rng);
            let one = Monomial::one(n);
            for ord in &orders {
                // 1 is the minimum
                assert_ne!(
                    compare_monomials(&one, &a, ord).unwrap(),
                    Ordering::Greater
                );
                // multiplicative compatibility: a <= b => ac <= bc
                let ab = compare_monomials(&a, &b, ord).unwrap();
                let acbc = compare_monomials(&a.mul(&c), &b.mul(&c), ord).unwrap();
                assert_eq!(ab, acbc);
                // antisymmetry
                assert_eq!(compare_monomials(&b, &a, ord).unwrap(), ab.reverse());
            }
        }
    }

    #[test]
    fn length_mismatch_is_reported() {
        let a = Monomial::from_exps(vec![1, 2]);
        let b = Monomial::from_exps(vec![1, 2, 3]);
        assert!(matches!(
            compare_monomials(&a, &b, &MonomialOrder::DegRevLex),
            Err(Error::LengthMismatch)
        ));
    }

    #[test]
    #[should_panic(expected = "monomial exponent overflow")]
    fn exponent_overflow_is_a_hard_error() {
        let a = Monomial::from_exps(vec![u64::MAX - 1]);
        let _ = a.mul(&a);
    }

    /// Characteristic 2 by hand: (x+y)^2 = x^2 + y^2.
    #[test]
    fn freshman_dream_over_f2() {
        let r = f2_xyz();
        let f = pp(&r, "x+y");
        assert_eq!(f.mul(&f).unwrap(), pp(&r, "x^2+y^2"));
        assert_eq!(f.frobenius_power(2).unwrap(), pp(&r, "x^2+y^2"));
    }

    #[test]
    fn frobenius_power_validates_q() {
        let r = f2_xyz();
        let f = pp(&r, "x+y*z");
        assert!(matches!(
            f.frobenius_power(6),
            Err(Error::NotAPowerOfP { q: 6, p: 2 })
        ));
        assert!(matches!(
            f.frobenius_power(0),
            Err(Error::NotAPowerOfP { q: 0, p: 2 })
        ));
        // q = 1 is the identity
        assert_eq!(f.frobenius_power(1).unwrap(), f);
        // q = 4 equals the honest fourth power
        assert_eq!(f.frobenius_power(4).unwrap(), f.pow(4).unwrap());
    }

    /// By hand: t -> s+1 sends x^2 + t*y to x^2 + s*y + y.
    #[test]
    fn substitution_translation() {
        let k = FieldDescriptor::prime(2).unwrap();
        let src = PolyRing::new(&k, &["x", "y", "t"]).unwrap();
        let dst = PolyRing::new(&k, &["x", "y", "s"]).unwrap();
        let f = pp(&src, "x^2+t*y");
        let images = vec![pp(&dst, "x"), pp(&dst, "y"), pp(&dst, "s+1")];
        let g = f.substitute(&dst, &images).unwrap();
        assert_eq!(g, pp(&dst, "x^2+s*y+y"));
    }

    #[test]
    fn substitution_base_change_into_function_field() {
        // F_2[x,y,t] -> F_2(t)[x,y]: t becomes the field generator.
        let k = FieldDescriptor::prime(2).unwrap();
        let src = PolyRing::new(&k, &["x", "y", "t"]).unwrap();
        let kt = FieldDescriptor::rational_function(2, "t").unwrap();
        let dst = PolyRing::new(&kt, &["x", "y"]).unwrap();
        let f = pp(&src, "x^2+t*y+1");
        let images = vec![
            pp(&dst, "x"),
            pp(&dst, "y"),
            Polynomial::constant(&dst, FieldElem::generator(&kt).unwrap()),
        ];
        let g = f.substitute(&dst, &images).unwrap();
        assert_eq!(g, pp(&dst, "x^2+t*y+1"));
        assert_eq!(g.to_string(), "x^2+t*y+1");
    }

    #[test]
    fn parse_quartic_relation_text() {
        let k = FieldDescriptor::rational_function(2, "t").unwrap();
        let r = PolyRing::new(&k, &["x", "y", "z"]).unwrap();
        let f = pp(&r, "z^4+x*y*z^2+(x^3+y^3)*z+t*x^2*y^2");
        // structural cross-check against a hand-built term list
        let t = FieldElem::generator(&k).unwrap();
        let one = FieldElem::one(&k);
        let hand = Polynomial::from_terms(
            &r,
            vec![
                (Monomial::from_exps(vec![0, 0, 4]), one.clone()),
                (Monomial::from_exps(vec![1, 1, 2]), one.clone()),
                (Monomial::from_exps(vec![3, 0, 1]), one.clone()),
                (Monomial::from_exps(vec![0, 3, 1]), one.clone()),
                (Monomial::from_exps(vec![2, 2, 0]), t),
            ],
        )
        .unwrap();
        assert_eq!(f, hand);
        assert_eq!(f.total_degree(), Some(4));
    }

    #[test]
    fn parse_rejects_unknowns_and_non_constant_division() {
        let r = f2_xyz();
        assert!(matches!(
            parse_polynomial(&r, "x+w"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(matches!(parse_polynomial(&r, "x/(y+1)"), Err(Error::Parse(_))));
        assert!(parse_polynomial(&r, "x/1").is_ok());
    }

    #[test]
    fn parse_field_element_fractions() {
        let kt = FieldDescriptor::rational_function(2, "t").unwrap();
        let a = parse_field_element(&kt, "1/(t^2+t)").unwrap();
        let t = FieldElem::generator(&kt).unwrap();
        let expected = t
            .mul(&t.add(&FieldElem::one(&kt)).unwrap())
            .unwrap()
            .inv()
            .unwrap();
        assert_eq!(a, expected);

        let k4 = FieldDescriptor::extension(2, "l", &[1, 1, 1]).unwrap();
        let b = parse_field_element(&k4, "l^2+l+1").unwrap();
        assert!(b.is_zero());
    }

    fn random_poly(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Polynomial {
        let p = ring.field().characteristic();
        let nterms = rng.gen_range(0..6);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let mon = Monomial::from_exps(
                (0..ring.num_vars()).map(|_| rng.gen_range(0..5u64)).collect(),
            );
            let c = match &**ring.field() {
                FieldDescriptor::Prime { .. } => {
                    FieldElem::from_integer(ring.field(), rng.gen_range(0..p) as i64)
                }
                FieldDescriptor::Extension { degree, .. } => {
                    let coeffs: Vec<u64> = (0..*degree).map(|_| rng.gen_range(0..p)).collect();
                    FieldElem::from_generator_coeffs(ring.field(), &coeffs).unwrap()
                }
                FieldDescriptor::RationalFunction { .. } => {
                    let t = FieldElem::generator(ring.field()).unwrap();
                    let num = t
                        .pow(rng.gen_range(0..3))
                        .unwrap()
                        .add(&FieldElem::from_integer(ring.field(), rng.gen_range(0..p) as i64))
                        .unwrap();
                    let mut den = t
                        .pow(rng.gen_range(0..3))
                        .unwrap()
                        .add(&FieldElem::one(ring.field()))
                        .unwrap();
                    if den.is_zero() {
                        den = FieldElem::one(ring.field());
                    }
                    num.div(&den).unwrap()
                }
            };
            terms.push((mon, c));
        }
        Polynomial::from_terms(ring, terms).unwrap()
    }

    #[test]
    fn format_parse_round_trip_randomized() {
        let k2 = FieldDescriptor::prime(2).unwrap();
        let k7 = FieldDescriptor::prime(7).unwrap();
        let k4 = FieldDescriptor::extension(2, "l", &[1, 1, 1]).unwrap();
        let kt = FieldDescriptor::rational_function(2, "t").unwrap();
        let rings = vec![
            PolyRing::new(&k2, &["x", "y", "z"]).unwrap(),
            PolyRing::new(&k7, &["x", "y"]).unwrap(),
            PolyRing::new(&k4, &["x", "y"]).unwrap(),
            PolyRing::new(&kt, &["x", "y"]).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0x706172);
        for ring in &rings {
            for _ in 0..300 {
                let f = random_poly(ring, &mut rng);
                let text = f.to_string();
                let back = parse_polynomial(ring, &text).unwrap();
                assert_eq!(back, f, "round trip failed for `{text}`");
            }
        }
    }

    #[test]
    fn ring_arithmetic_randomized() {
        let k7 = FieldDescriptor::prime(7).unwrap();
        let ring = PolyRing::new(&k7, &["x", "y"]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xa11ce);
        for _ in 0..500 {
            let a = random_poly(&ring, &mut rng);
            let b = random_poly(&ring, &mut rng);
            let c = random_poly(&ring, &mut rng);
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            assert!(a.sub(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let k = FieldDescriptor::prime(2).unwrap();
        let r1 = PolyRing::new(&k, &["x", "y"]).unwrap();
        let r2 = PolyRing::new(&k, &["x", "w"]).unwrap();
        let a = pp(&r1, "x+y");
        let b = pp(&r2, "x+w");
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn presentation_display_and_validation() {
        let r = f2_xyz();
        let rel = pp(&r, "z^2+x*y");
        let pres = RingPresentation::new(&r, vec![rel]).unwrap();
        assert_eq!(pres.to_string(), "F_2[x,y,z]/(x*y+z^2)");
        let k = FieldDescriptor::prime(2).unwrap();
        let other = PolyRing::new(&k, &["a"]).unwrap();
        assert!(RingPresentation::new(&other, vec![pp(&r, "x")]).is_err());
    }

    #[test]
    fn variable_shadows_field_symbol_rejected() {
        let kt = FieldDescriptor::rational_function(2, "t").unwrap();
        assert!(PolyRing::new(&kt, &["x", "t"]).is_err());
    }
}
