//! Ideals in quotient presentations and their arithmetic.
//!
//! An [`Ideal`] stores generators that are interpreted inside a
//! [`RingPresentation`] (a polynomial ring modulo relation generators).
//! Every basis-level computation happens on the *lifted* ideal — the
//! generators together with the presentation relations — inside the ambient
//! polynomial ring, which is the standard way to compute in a quotient:
//! containment, colons, intersections, and colengths of the lifted ideals
//! agree with the corresponding quotient-ring notions.
//!
//! Computed bases are cached per monomial order, so repeated queries against
//! one ideal pay for a basis once.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::parse::parse_polynomial;
use crate::poly::{
    power_of_char, Monomial, MonomialOrder, PolyRing, Polynomial, RingPresentation,
};

use super::{div_exact, GroebnerBasis};

/// An ideal of a quotient ring, given by generators.
pub struct Ideal {
    pres: Arc<RingPresentation>,
    gens: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            pres: Arc::clone(&self.pres),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(pres: &Arc<RingPresentation>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !g.ring().same_ring(pres.ring()) {
                return Err(Error::RingMismatch(
                    "ideal generator lives in a different ring".into(),
                ));
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            pres: Arc::clone(pres),
            gens,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    /// Parses each generator string in the presentation's ring.
    pub fn parse(pres: &Arc<RingPresentation>, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(pres.ring(), s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(pres, gens)
    }

    pub fn zero(pres: &Arc<RingPresentation>) -> Self {
        Ideal {
            pres: Arc::clone(pres),
            gens: Vec::new(),
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.pres.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators of the preimage ideal in the ambient polynomial ring:
    /// the ideal generators followed by the presentation relations.
    pub fn lifted_generators(&self) -> Vec<Polynomial> {
        let mut out = self.gens.clone();
        out.extend_from_slice(self.pres.relations());
        out
    }

    /// The reduced basis of the lifted ideal under `order`, computed once
    /// per order and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.cache.lock().expect("cache lock");
            if let Some(b) = cache.get(order) {
                return Ok(Arc::clone(b));
            }
        }
        let basis = Arc::new(GroebnerBasis::compute(
            self.ring(),
            &self.lifted_generators(),
            order,
        )?);
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(Arc::clone(cache.entry(order.clone()).or_insert(basis)))
    }

    /// The canonical representative of `f` modulo this ideal (and the
    /// presentation relations).
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner_basis(&MonomialOrder::DegRevLex)?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_presentation(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via uniqueness of the reduced basis.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_same_presentation(other)?;
        let a = self.groebner_basis(&MonomialOrder::DegRevLex)?;
        let b = other.groebner_basis(&MonomialOrder::DegRevLex)?;
        Ok(a.polynomials() == b.polynomials())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self
            .groebner_basis(&MonomialOrder::DegRevLex)?
            .is_unit_ideal())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_presentation(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.pres, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_presentation(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.pres, gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_presentation(other)?;
        let gens = intersect_in_ambient_ring(
            self.ring(),
            &self.lifted_generators(),
            &other.lifted_generators(),
        )?;
        Ideal::new(&self.pres, gens)
    }

    /// The colon ideal `(self : f)` in the quotient ring.  Computed in the
    /// ambient ring as `(lift(self) : f)`, which maps onto the quotient
    /// colon because the lift is the full preimage.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        if !f.ring().same_ring(self.ring()) {
            return Err(Error::RingMismatch(
                "colon element lives in a different ring".into(),
            ));
        }
        if f.is_zero() {
            return Err(Error::InvalidInput("colon by the zero element".into()));
        }
        let common =
            intersect_in_ambient_ring(self.ring(), &self.lifted_generators(), &[f.clone()])?;
        let mut gens = Vec::with_capacity(common.len());
        for g in common {
            gens.push(div_exact(&g, f)?);
        }
        Ideal::new(&self.pres, gens)
    }

    /// The colon ideal `(self : other)`, intersecting element colons over
    /// the generators of `other`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_presentation(other)?;
        if other.gens.is_empty() {
            // (I : 0) is the whole ring
            return Ideal::new(&self.pres, vec![Polynomial::one(self.ring())]);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersection(&c)?,
            });
        }
        Ok(acc.expect("at least one generator"))
    }

    /// The saturation `(self : f^∞)`, by eliminating the auxiliary variable
    /// from `lift(self) + (1 - aux * f)`.
    pub fn saturation_element(&self, f: &Polynomial) -> Result<Ideal> {
        if !f.ring().same_ring(self.ring()) {
            return Err(Error::RingMismatch(
                "saturation element lives in a different ring".into(),
            ));
        }
        if f.is_zero() {
            return Err(Error::InvalidInput("saturation by the zero element".into()));
        }
        let ring = self.ring();
        let ext = extend_ring(ring)?;
        let mut gens: Vec<Polynomial> = self
            .lifted_generators()
            .iter()
            .map(|g| lift_front(g, &ext))
            .collect::<Result<Vec<_>>>()?;
        let aux = Polynomial::variable(&ext, &ext.vars()[0])?;
        let one = Polynomial::one(&ext);
        gens.push(one.sub(&aux.mul(&lift_front(f, &ext)?)?)?);
        let order = MonomialOrder::Block {
            elim: 1,
            inner: Box::new(MonomialOrder::DegRevLex),
        };
        let basis = GroebnerBasis::compute(&ext, &gens, &order)?;
        let projected = project_away_front(basis.polynomials(), ring)?;
        Ideal::new(&self.pres, projected)
    }

    /// The k-vector-space dimension of the quotient by this ideal, by
    /// counting standard monomials; errors when the quotient is not finite
    /// dimensional.
    pub fn colength(&self) -> Result<u64> {
        let basis = self.groebner_basis(&MonomialOrder::DegRevLex)?;
        standard_monomial_count(self.ring(), basis.leading_monomials())
    }

    /// Enumerates the standard monomials — the monomial vector-space basis
    /// of the quotient — of a zero-dimensional ideal, as polynomials.
    /// Errors when the quotient is not finite dimensional or has more than
    /// `limit` basis elements.
    pub fn standard_monomials(&self, limit: u64) -> Result<Vec<Polynomial>> {
        let count = self.colength()?;
        if count > limit {
            return Err(Error::InvalidInput(format!(
                "quotient has {count} standard monomials, more than the limit {limit}"
            )));
        }
        let basis = self.groebner_basis(&MonomialOrder::DegRevLex)?;
        let leads = basis.leading_monomials();
        let ring = self.ring();
        let n = ring.num_vars();
        // the minimal pure powers bound the search box (they exist, since
        // the colength above was finite)
        let mut bounds = vec![0u64; n];
        for m in leads {
            let support: Vec<usize> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect();
            if let [i] = support[..] {
                let e = m.exps()[i];
                bounds[i] = if bounds[i] == 0 { e } else { bounds[i].min(e) };
            }
        }
        let one = FieldElem::one(ring.field());
        let mut out = Vec::with_capacity(count as usize);
        let mut exps = vec![0u64; n];
        'walk: loop {
            let candidate = Monomial::from_exps(exps.clone());
            if !leads.iter().any(|l| l.divides(&candidate)) {
                out.push(Polynomial::from_terms(ring, vec![(candidate, one.clone())])?);
            }
            for i in 0..n {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    continue 'walk;
                }
                exps[i] = 0;
            }
            break;
        }
        debug_assert_eq!(out.len() as u64, count);
        Ok(out)
    }

    /// Whether the quotient by this ideal is supported only at the origin,
    /// i.e. every variable is nilpotent modulo the ideal.  A quotient of
    /// positive dimension is supported away from the origin as well, so it
    /// reports `false` rather than an error.
    pub fn is_supported_only_at_origin(&self) -> Result<bool> {
        let ell = match self.colength() {
            Ok(ell) => ell,
            Err(Error::NotZeroDimensional(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        if ell == 0 {
            return Ok(true);
        }
        let basis = self.groebner_basis(&MonomialOrder::DegRevLex)?;
        let ring = self.ring();
        let one = FieldElem::one(ring.field());
        for i in 0..ring.num_vars() {
            // nilpotency degree in an ell-dimensional algebra is at most ell
            let m = Monomial::variable(ring.num_vars(), i).power(ell);
            let f = Polynomial::from_terms(ring, vec![(m, one.clone())])?;
            if !basis.normal_form(&f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of the quotient by this ideal, read off the
    /// leading-term ideal: the largest variable subset that meets no leading
    /// monomial's support.
    pub fn krull_dimension(&self) -> Result<usize> {
        let basis = self.groebner_basis(&MonomialOrder::DegRevLex)?;
        if basis.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring().num_vars();
        if n > 24 {
            return Err(Error::InvalidInput(
                "dimension scan supports at most 24 variables".into(),
            ));
        }
        let leads = basis.leading_monomials();
        let mut best = 0usize;
        for mask in 0u32..(1u32 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads.iter().all(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        Ok(best)
    }

    /// The Frobenius power: each generator raised to the q-th power
    /// (q a power of the characteristic), relations untouched.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal> {
        let p = self.ring().field().characteristic();
        power_of_char(p, q)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_power(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.pres, gens)
    }

    fn check_same_presentation(&self, other: &Ideal) -> Result<()> {
        if !self.pres.same_presentation(&other.pres) {
            return Err(Error::RingMismatch(
                "ideals live in different quotient rings".into(),
            ));
        }
        Ok(())
    }
}

/// Krull dimension of the presented quotient ring itself, cached on the
/// presentation.
pub fn presentation_dimension(pres: &Arc<RingPresentation>) -> Result<usize> {
    if let Some(d) = pres.dim_cache.get() {
        return Ok(*d);
    }
    let d = Ideal::zero(pres).krull_dimension()?;
    let _ = pres.dim_cache.set(d);
    Ok(d)
}

/// A copy of `ring` with one fresh variable prepended, for elimination.
fn extend_ring(ring: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
    for k in 0usize.. {
        let candidate = format!("aux{k}");
        if ring.var_index(&candidate).is_some() {
            continue;
        }
        let mut vars: Vec<&str> = vec![&candidate];
        vars.extend(ring.vars().iter().map(String::as_str));
        match PolyRing::new(ring.field(), &vars) {
            Ok(ext) => return Ok(ext),
            Err(_) => continue, // candidate clashed with the field symbol
        }
    }
    unreachable!("some candidate name is always fresh")
}

/// Re-interprets `f` inside the extended ring (fresh variable unused).
fn lift_front(f: &Polynomial, ext: &Arc<PolyRing>) -> Result<Polynomial> {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = Vec::with_capacity(m.len() + 1);
            exps.push(0);
            exps.extend_from_slice(m.exps());
            (Monomial::from_exps(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(ext, terms)
}

/// Keeps the basis elements free of the front variable and maps them back
/// down to `ring`.
fn project_away_front(polys: &[Polynomial], ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for p in polys {
        if p.terms().iter().any(|(m, _)| m.exps()[0] != 0) {
            continue;
        }
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| (Monomial::from_exps(m.exps()[1..].to_vec()), c.clone()))
            .collect();
        out.push(Polynomial::from_terms(ring, terms)?);
    }
    Ok(out)
}

/// Generators of the intersection of two ideals of the ambient polynomial
/// ring, via the classic one-variable elimination `aux·A + (1-aux)·B`.
fn intersect_in_ambient_ring(
    ring: &Arc<PolyRing>,
    a: &[Polynomial],
    b: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let ext = extend_ring(ring)?;
    let aux = Polynomial::variable(&ext, &ext.vars()[0])?;
    let one_minus_aux = Polynomial::one(&ext).sub(&aux)?;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(aux.mul(&lift_front(f, &ext)?)?);
    }
    for g in b {
        gens.push(one_minus_aux.mul(&lift_front(g, &ext)?)?);
    }
    let order = MonomialOrder::Block {
        elim: 1,
        inner: Box::new(MonomialOrder::DegRevLex),
    };
    let basis = GroebnerBasis::compute(&ext, &gens, &order)?;
    project_away_front(basis.polynomials(), ring)
}

/// Counts monomials outside the leading-term ideal.  Requires a pure power
/// of every variable among the leading monomials (the finiteness
/// criterion); the minimal pure powers bound the search box.
fn standard_monomial_count(ring: &Arc<PolyRing>, leads: &[Monomial]) -> Result<u64> {
    if leads.iter().any(Monomial::is_one) {
        return Ok(0);
    }
    let n = ring.num_vars();
    let mut bounds: Vec<Option<u64>> = vec![None; n];
    for m in leads {
        let support: Vec<usize> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        if let [i] = support[..] {
            let e = m.exps()[i];
            bounds[i] = Some(bounds[i].map_or(e, |b: u64| b.min(e)));
        }
    }
    let bounds: Vec<u64> = bounds
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or_else(|| {
                Error::NotZeroDimensional(format!(
                    "no pure power of {} in the leading-term ideal",
                    ring.vars()[i]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let alive: Vec<&Monomial> = leads.iter().collect();
    fn count(bounds: &[u64], depth: usize, alive: &[&Monomial]) -> u64 {
        if depth == bounds.len() {
            return u64::from(alive.is_empty());
        }
        let mut total = 0u64;
        for e in 0..bounds[depth] {
            let child: Vec<&Monomial> = alive
                .iter()
                .filter(|m| m.exps()[depth] <= e)
                .copied()
                .collect();
            total += count(bounds, depth + 1, &child);
        }
        total
    }
    Ok(count(&bounds, 0, &alive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldDescriptor;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn free_ring(p: u64, vars: &[&str]) -> Arc<RingPresentation> {
        let k = FieldDescriptor::prime(p).unwrap();
        RingPresentation::free(&PolyRing::new(&k, vars).unwrap())
    }

    /// F_2[x,y,z]/(z^2 + x*y) — the quadric cone presentation.
    fn quadric_cone() -> Arc<RingPresentation> {
        let k = FieldDescriptor::prime(2).unwrap();
        let ring = PolyRing::new(&k, &["x", "y", "z"]).unwrap();
        let rel = parse_polynomial(&ring, "z^2+x*y").unwrap();
        RingPresentation::new(&ring, vec![rel]).unwrap()
    }

    #[test]
    fn colength_of_variable_powers_in_free_rings() {
        let pres = free_ring(2, &["x", "y"]);
        for q in [2u64, 4, 8] {
            let gens = [format!("x^{q}"), format!("y^{q}")];
            let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
            let ideal = Ideal::parse(&pres, &gens).unwrap();
            assert_eq!(ideal.colength().unwrap(), q * q);
        }
    }

    /// Worked out by hand: on the quadric cone the variable
    /// powers (x^q, y^q, z^q) leave 6 standard monomials at q = 2 and 24 at
    /// q = 4 (the leading terms are x*y, x^q, y^q, z^2 resp. x*y, x^4, y^4,
    /// z^4 plus the two mixed cubics x^3*z^2, y^3*z^2).
    #[test]
    fn colength_of_frobenius_powers_on_quadric_cone() {
        let pres = quadric_cone();
        let max = Ideal::parse(&pres, &["x", "y", "z"]).unwrap();
        assert_eq!(max.frobenius_power(2).unwrap().colength().unwrap(), 6);
        assert_eq!(max.frobenius_power(4).unwrap().colength().unwrap(), 24);
    }

    #[test]
    fn frobenius_power_requires_a_power_of_the_characteristic() {
        let pres = free_ring(2, &["x", "y"]);
        let ideal = Ideal::parse(&pres, &["x+y"]).unwrap();
        let sq = ideal.frobenius_power(2).unwrap();
        assert_eq!(
            sq.generators(),
            &[parse_polynomial(pres.ring(), "x^2+y^2").unwrap()]
        );
        assert!(matches!(
            ideal.frobenius_power(3),
            Err(Error::NotAPowerOfP { q: 3, p: 2 })
        ));
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let pres = free_ring(2, &["x", "y"]);
        let ix = Ideal::parse(&pres, &["x"]).unwrap();
        let iy = Ideal::parse(&pres, &["y"]).unwrap();
        let meet = ix.intersection(&iy).unwrap();
        assert!(meet.equals(&Ideal::parse(&pres, &["x*y"]).unwrap()).unwrap());
        assert!(ix.intersection(&ix).unwrap().equals(&ix).unwrap());
    }

    #[test]
    fn colon_oracles_in_the_free_ring() {
        let pres = free_ring(2, &["x", "y"]);
        let i = Ideal::parse(&pres, &["x^2", "x*y"]).unwrap();
        let x = parse_polynomial(pres.ring(), "x").unwrap();
        let colon = i.colon_element(&x).unwrap();
        assert!(colon.equals(&Ideal::parse(&pres, &["x", "y"]).unwrap()).unwrap());

        let by_ideal = i.colon_ideal(&Ideal::parse(&pres, &["x"]).unwrap()).unwrap();
        assert!(by_ideal.equals(&colon).unwrap());
    }

    #[test]
    fn colon_in_a_quotient_ring() {
        // In F_2[x,y]/(x*y) the annihilator of x is (y).
        let k = FieldDescriptor::prime(2).unwrap();
        let ring = PolyRing::new(&k, &["x", "y"]).unwrap();
        let rel = parse_polynomial(&ring, "x*y").unwrap();
        let pres = RingPresentation::new(&ring, vec![rel]).unwrap();
        let zero = Ideal::zero(&pres);
        let x = parse_polynomial(&ring, "x").unwrap();
        let ann = zero.colon_element(&x).unwrap();
        assert!(ann.equals(&Ideal::parse(&pres, &["y"]).unwrap()).unwrap());
    }

    #[test]
    fn saturation_oracles() {
        let pres = free_ring(2, &["x", "y"]);
        let y = parse_polynomial(pres.ring(), "y").unwrap();

        let i = Ideal::parse(&pres, &["x^2*y"]).unwrap();
        let sat = i.saturation_element(&y).unwrap();
        assert!(sat.equals(&Ideal::parse(&pres, &["x^2"]).unwrap()).unwrap());

        let ix = Ideal::parse(&pres, &["x"]).unwrap();
        let iy2 = Ideal::parse(&pres, &["y^2"]).unwrap();
        let j = ix.intersection(&iy2).unwrap();
        let sat2 = j.saturation_element(&y).unwrap();
        assert!(sat2.equals(&ix).unwrap());
    }

    #[test]
    fn saturation_agrees_with_iterated_colon() {
        let pres = free_ring(3, &["x", "y"]);
        let ring = pres.ring();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
        let pool = ["x^2*y", "x*y^2", "x^3", "y^3", "x*y+x", "x^2+y^2", "y^2+x"];
        for _ in 0..25 {
            let count = rng.gen_range(1..4);
            let gens: Vec<&str> = (0..count)
                .map(|_| pool[rng.gen_range(0..pool.len())])
                .collect();
            let ideal = Ideal::parse(&pres, &gens).unwrap();
            let f = parse_polynomial(ring, ["x", "y", "x*y"][rng.gen_range(0..3)]).unwrap();

            let sat = ideal.saturation_element(&f).unwrap();
            let mut current = ideal.clone();
            loop {
                let next = current.colon_element(&f).unwrap();
                if next.equals(&current).unwrap() {
                    break;
                }
                current = next;
            }
            assert!(
                sat.equals(&current).unwrap(),
                "saturation mismatch for {gens:?} by {f}"
            );
        }
    }

    /// Independent count of standard monomials for monomial ideals via
    /// inclusion–exclusion over generator subsets.
    fn monomial_colength_by_inclusion_exclusion(gens: &[Monomial], bounds: &[u64]) -> u64 {
        let n = bounds.len();
        let mut total: i64 = 0;
        for mask in 0u32..(1u32 << gens.len()) {
            let mut lcm = Monomial::one(n);
            for (g, m) in gens.iter().enumerate() {
                if mask & (1 << g) != 0 {
                    lcm = lcm.lcm(m);
                }
            }
            // monomials in the box divisible by lcm
            let mut cells: i64 = 1;
            for i in 0..n {
                let lo = lcm.exps()[i];
                cells *= if lo >= bounds[i] {
                    0
                } else {
                    (bounds[i] - lo) as i64
                };
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * cells;
        }
        total as u64
    }

    #[test]
    fn colength_matches_inclusion_exclusion_on_monomial_ideals() {
        let pres = free_ring(5, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0xb0c5);
        for _ in 0..40 {
            let bx = rng.gen_range(2..6u64);
            let by = rng.gen_range(2..6u64);
            let bz = rng.gen_range(2..6u64);
            let mut mons = vec![
                Monomial::from_exps(vec![bx, 0, 0]),
                Monomial::from_exps(vec![0, by, 0]),
                Monomial::from_exps(vec![0, 0, bz]),
            ];
            for _ in 0..rng.gen_range(0..4) {
                mons.push(Monomial::from_exps(vec![
                    rng.gen_range(0..bx),
                    rng.gen_range(0..by),
                    rng.gen_range(0..bz),
                ]));
            }
            let one = FieldElem::one(pres.ring().field());
            let gens: Vec<Polynomial> = mons
                .iter()
                .map(|m| {
                    Polynomial::from_terms(pres.ring(), vec![(m.clone(), one.clone())]).unwrap()
                })
                .collect();
            let ideal = Ideal::new(&pres, gens).unwrap();
            let expected =
                monomial_colength_by_inclusion_exclusion(&mons, &[bx, by, bz]);
            assert_eq!(ideal.colength().unwrap(), expected, "gens {mons:?}");
        }
    }

    #[test]
    fn support_at_origin_detection() {
        let pres = free_ring(2, &["x", "y"]);
        let local = Ideal::parse(&pres, &["x^2", "y^3"]).unwrap();
        assert!(local.is_supported_only_at_origin().unwrap());

        // V(x^2 + x, y) = {(0,0), (1,0)} also contains a point away from 0
        let split = Ideal::parse(&pres, &["x^2+x", "y"]).unwrap();
        assert!(!split.is_supported_only_at_origin().unwrap());

        // a positive-dimensional quotient is supported along a whole curve
        let curve = Ideal::parse(&pres, &["x"]).unwrap();
        assert!(!curve.is_supported_only_at_origin().unwrap());
    }

    #[test]
    fn krull_dimension_oracles() {
        let pres3 = free_ring(2, &["x", "y", "z"]);
        assert_eq!(Ideal::zero(&pres3).krull_dimension().unwrap(), 3);
        assert_eq!(
            Ideal::parse(&pres3, &["x"]).unwrap().krull_dimension().unwrap(),
            2
        );
        assert_eq!(presentation_dimension(&quadric_cone()).unwrap(), 2);
        // cache hit returns the same value
        assert_eq!(presentation_dimension(&quadric_cone()).unwrap(), 2);

        let unit = Ideal::parse(&pres3, &["x", "x+1"]).unwrap();
        assert!(matches!(unit.krull_dimension(), Err(Error::UnitIdeal)));
    }

    #[test]
    fn quotient_normal_forms_use_the_relations() {
        let pres = quadric_cone();
        let zero = Ideal::zero(&pres);
        let xy = parse_polynomial(pres.ring(), "x*y").unwrap();
        let z2 = parse_polynomial(pres.ring(), "z^2").unwrap();
        // x*y rewrites to z^2 because x*y is the larger leading monomial
        assert_eq!(zero.normal_form(&xy).unwrap(), z2);
        assert!(zero.contains(&xy.sub(&z2).unwrap()).unwrap());
    }

    #[test]
    fn equality_is_generator_independent() {
        let pres = free_ring(2, &["x", "y"]);
        let a = Ideal::parse(&pres, &["x", "y"]).unwrap();
        let b = Ideal::parse(&pres, &["x+y", "y"]).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(a.contains_ideal(&b).unwrap());
        let c = Ideal::parse(&pres, &["x"]).unwrap();
        assert!(!a.equals(&c).unwrap());
    }

    #[test]
    fn sum_and_product() {
        let pres = free_ring(2, &["x", "y"]);
        let ix = Ideal::parse(&pres, &["x"]).unwrap();
        let iy = Ideal::parse(&pres, &["y"]).unwrap();
        let sum = ix.sum(&iy).unwrap();
        assert!(sum.equals(&Ideal::parse(&pres, &["x", "y"]).unwrap()).unwrap());
        let prod = ix.product(&iy).unwrap();
        assert!(prod.equals(&Ideal::parse(&pres, &["x*y"]).unwrap()).unwrap());
        // product with the zero ideal is zero
        assert!(ix
            .product(&Ideal::zero(&pres))
            .unwrap()
            .equals(&Ideal::zero(&pres))
            .unwrap());
    }
}
