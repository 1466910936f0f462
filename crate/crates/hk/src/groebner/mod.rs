//! Deterministic Gröbner-basis engine.
//!
//! Buchberger's algorithm with the Gebauer–Möller pair-elimination criteria
//! and sugar-driven pair selection.  Every choice the algorithm makes —
//! input normalization, pair selection, reducer scan order, final
//! interreduction — follows a fixed deterministic rule, so a generator set
//! always produces the same output, and because the output is the *reduced*
//! basis (monic, fully interreduced, sorted by leading monomial) it is the
//! unique canonical basis of the ideal for the chosen order.  That
//! uniqueness is what makes basis comparison a sound ideal-equality test.
//!
//! Computations are capped by an S-pair budget so runaway inputs fail with
//! [`Error::ResourceLimit`] instead of hanging.

mod ideal;

pub use ideal::{presentation_dimension, Ideal};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering as MemOrd};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{cmp_exps, Monomial, MonomialOrder, PolyRing, Polynomial};

/// Default cap on the number of S-pairs a single basis computation may
/// process before giving up with [`Error::ResourceLimit`].
pub const DEFAULT_PAIR_BUDGET: u64 = 10_000_000;

static PAIR_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_PAIR_BUDGET);
static PAIRS_PROCESSED: AtomicU64 = AtomicU64::new(0);

/// Sets the process-wide S-pair budget used by subsequent computations that
/// do not specify their own limit.
pub fn set_pair_budget(limit: u64) {
    PAIR_BUDGET.store(limit.max(1), MemOrd::Relaxed);
}

/// The current process-wide S-pair budget.
pub fn pair_budget() -> u64 {
    PAIR_BUDGET.load(MemOrd::Relaxed)
}

/// Cumulative count of S-pairs processed by all computations in this
/// process; reported in run manifests.
pub fn pairs_processed() -> u64 {
    PAIRS_PROCESSED.load(MemOrd::Relaxed)
}

/// Term list sorted strictly descending under the active monomial order.
type Terms = Vec<(Monomial, FieldElem)>;

/// Re-sorts the canonical term list of `f` descending under `order`.
fn engine_terms(f: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = f.terms().to_vec();
    if *order != MonomialOrder::DegRevLex {
        t.sort_by(|a, b| cmp_exps(b.0.exps(), a.0.exps(), order));
    }
    t
}

/// Computes `a - coeff * mon * g` by merging two descending term lists.
fn sub_scaled(
    a: &[(Monomial, FieldElem)],
    g: &[(Monomial, FieldElem)],
    mon: &Monomial,
    coeff: &FieldElem,
    order: &MonomialOrder,
) -> Result<Terms> {
    let mut scaled = Vec::with_capacity(g.len());
    for (m, c) in g {
        scaled.push((m.mul(mon), c.mul(coeff)?.neg()));
    }
    merge_add(a, &scaled, order)
}

/// Adds two descending term lists, combining equal monomials and dropping
/// zero coefficients.
fn merge_add(
    a: &[(Monomial, FieldElem)],
    b: &[(Monomial, FieldElem)],
    order: &MonomialOrder,
) -> Result<Terms> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        match cmp_exps(a[i].0.exps(), b[j].0.exps(), order) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&b[j].1)?;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Ok(out)
}

/// Fully reduces `work` against `reducers` (scanned in slice order, skipping
/// index `skip`), returning the normal form.  Terminates because each step
/// strictly lowers the leading monomial in a well-order.
fn reduce_full(
    mut work: Terms,
    reducers: &[Terms],
    skip: Option<usize>,
    order: &MonomialOrder,
) -> Result<Terms> {
    let mut remainder: Terms = Vec::new();
    'outer: while let Some((m, c)) = work.first().cloned() {
        for (k, r) in reducers.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            let (rm, rc) = (&r[0].0, &r[0].1);
            if rm.divides(&m) {
                let mult_mon = m.div(rm).expect("divisibility was just checked");
                let mult_coeff = c.div(rc)?;
                work = sub_scaled(&work, r, &mult_mon, &mult_coeff, order)?;
                continue 'outer;
            }
        }
        remainder.push((m, c));
        work.remove(0);
    }
    Ok(remainder)
}

/// Exact division `f / d` in the polynomial ring; errors when the division
/// leaves a remainder.
pub(crate) fn div_exact(f: &Polynomial, d: &Polynomial) -> Result<Polynomial> {
    if !f.ring().same_ring(d.ring()) {
        return Err(Error::RingMismatch(
            "exact division needs both operands in one ring".into(),
        ));
    }
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let order = MonomialOrder::DegRevLex;
    let divisor: Terms = d.terms().to_vec();
    let (dm, dc) = (divisor[0].0.clone(), divisor[0].1.clone());
    let mut work: Terms = f.terms().to_vec();
    let mut quotient: Terms = Vec::new();
    while let Some((m, c)) = work.first().cloned() {
        let Some(mult_mon) = m.div(&dm) else {
            return Err(Error::InvalidInput(format!(
                "`{f}` is not divisible by `{d}`"
            )));
        };
        let mult_coeff = c.div(&dc)?;
        work = sub_scaled(&work, &divisor, &mult_mon, &mult_coeff, &order)?;
        quotient.push((mult_mon, mult_coeff));
    }
    Polynomial::from_terms(f.ring(), quotient)
}

fn make_monic(terms: &mut Terms) -> Result<()> {
    let lead = terms[0].1.clone();
    if lead.is_one() {
        return Ok(());
    }
    for (_, c) in terms.iter_mut() {
        *c = c.div(&lead)?;
    }
    Ok(())
}

/// Critical pair between basis elements `i < j`.
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

/// Returns true when pair `a` should be processed before pair `b`:
/// smallest sugar first, then smallest lcm under the active order, then
/// smallest indices.  Fully deterministic.
fn pair_precedes(a: &Pair, b: &Pair, order: &MonomialOrder) -> bool {
    match a.sugar.cmp(&b.sugar) {
        Ordering::Less => return true,
        Ordering::Greater => return false,
        Ordering::Equal => {}
    }
    match cmp_exps(a.lcm.exps(), b.lcm.exps(), order) {
        Ordering::Less => return true,
        Ordering::Greater => return false,
        Ordering::Equal => {}
    }
    (a.i, a.j) < (b.i, b.j)
}

fn select_pair(pairs: &[Pair], order: &MonomialOrder) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        if pair_precedes(&pairs[k], &pairs[best], order) {
            best = k;
        }
    }
    best
}

/// Gebauer–Möller update: prunes the pending pair set and generates the
/// pairs involving the freshly appended basis element `t`.
fn gm_update(pairs: &mut Vec<Pair>, leads: &[Monomial], sugars: &[u64], t: usize) {
    let lt_t = &leads[t];
    let lcm_with: Vec<Monomial> = leads[..t].iter().map(|m| m.lcm(lt_t)).collect();

    // Chain criterion on the surviving old pairs: (i, j) is redundant when
    // lt(t) divides lcm(i, j) strictly through both new lcms.
    pairs.retain(|p| {
        !(lt_t.divides(&p.lcm) && lcm_with[p.i] != p.lcm && lcm_with[p.j] != p.lcm)
    });

    // Criterion M: drop (i, t) when some lcm(j, t) strictly divides lcm(i, t).
    let mut keep = vec![true; t];
    for i in 0..t {
        for (j, lj) in lcm_with.iter().enumerate() {
            if j != i && lj.divides(&lcm_with[i]) && *lj != lcm_with[i] {
                keep[i] = false;
                break;
            }
        }
    }

    // Criterion F: one representative per lcm class; a class containing a
    // coprime pair reduces to zero and is dropped entirely.
    let mut classes: BTreeMap<Monomial, Vec<usize>> = BTreeMap::new();
    for i in 0..t {
        if keep[i] {
            classes.entry(lcm_with[i].clone()).or_default().push(i);
        }
    }
    for (lcm, members) in classes {
        if members.iter().any(|&i| leads[i].gcd_is_one(lt_t)) {
            continue;
        }
        let i = members[0];
        let sugar = (sugars[i] + lcm.total_degree() - leads[i].total_degree())
            .max(sugars[t] + lcm.total_degree() - lt_t.total_degree());
        pairs.push(Pair { i, j: t, lcm, sugar });
    }
}

fn append_element(
    basis: &mut Vec<Terms>,
    leads: &mut Vec<Monomial>,
    sugars: &mut Vec<u64>,
    pairs: &mut Vec<Pair>,
    element: Terms,
    sugar: u64,
) {
    basis.push(element);
    leads.push(basis.last().expect("just pushed")[0].0.clone());
    sugars.push(sugar);
    let t = basis.len() - 1;
    gm_update(pairs, leads, sugars, t);
}

fn term_degree(terms: &Terms) -> u64 {
    terms.iter().map(|(m, _)| m.total_degree()).max().unwrap_or(0)
}

fn buchberger(inputs: Vec<Terms>, order: &MonomialOrder, budget: u64) -> Result<Vec<Terms>> {
    let mut basis: Vec<Terms> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut sugars: Vec<u64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in inputs {
        let sugar = term_degree(&g);
        append_element(&mut basis, &mut leads, &mut sugars, &mut pairs, g, sugar);
    }

    let mut processed: u64 = 0;
    while !pairs.is_empty() {
        let idx = select_pair(&pairs, order);
        let pair = pairs.swap_remove(idx);
        processed += 1;
        PAIRS_PROCESSED.fetch_add(1, MemOrd::Relaxed);
        if processed > budget {
            return Err(Error::ResourceLimit(budget));
        }

        let f = &basis[pair.i];
        let g = &basis[pair.j];
        let mult_f = pair.lcm.div(&leads[pair.i]).expect("lcm is divisible");
        let shifted: Terms = f.iter().map(|(m, c)| (m.mul(&mult_f), c.clone())).collect();
        let mult_g = pair.lcm.div(&leads[pair.j]).expect("lcm is divisible");
        let one = FieldElem::one(shifted[0].1.descriptor());
        let s = sub_scaled(&shifted, g, &mult_g, &one, order)?;

        let mut nf = reduce_full(s, &basis, None, order)?;
        if nf.is_empty() {
            continue;
        }
        make_monic(&mut nf)?;
        let sugar = pair.sugar.max(term_degree(&nf));
        append_element(&mut basis, &mut leads, &mut sugars, &mut pairs, nf, sugar);
    }
    Ok(basis)
}

/// Minimalizes and tail-reduces a basis into the unique reduced basis,
/// sorted ascending by leading monomial.
fn interreduce(mut basis: Vec<Terms>, order: &MonomialOrder) -> Result<Vec<Terms>> {
    basis.sort_by(|a, b| input_key_cmp(a, b, order));

    let mut kept: Vec<Terms> = Vec::new();
    'outer: for f in basis {
        for k in &kept {
            if k[0].0.divides(&f[0].0) {
                continue 'outer;
            }
        }
        kept.push(f);
    }

    for i in 0..kept.len() {
        let reduced = reduce_full(kept[i].clone(), &kept, Some(i), order)?;
        kept[i] = reduced;
    }
    Ok(kept)
}

/// Deterministic ordering of term lists: ascending leading monomial, then
/// term count, then structural monomial sequence, then printed coefficients.
fn input_key_cmp(a: &Terms, b: &Terms, order: &MonomialOrder) -> Ordering {
    cmp_exps(a[0].0.exps(), b[0].0.exps(), order)
        .then_with(|| a.len().cmp(&b.len()))
        .then_with(|| {
            let ma: Vec<&Monomial> = a.iter().map(|(m, _)| m).collect();
            let mb: Vec<&Monomial> = b.iter().map(|(m, _)| m).collect();
            ma.cmp(&mb)
        })
        .then_with(|| {
            let ca: Vec<String> = a.iter().map(|(_, c)| c.to_string()).collect();
            let cb: Vec<String> = b.iter().map(|(_, c)| c.to_string()).collect();
            ca.cmp(&cb)
        })
}

/// A reduced Gröbner basis together with its monomial order.
///
/// The stored basis is monic, interreduced, and sorted ascending by leading
/// monomial, so it is the unique canonical basis for its ideal and order.
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    terms: Vec<Terms>,
    leading: Vec<Monomial>,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let polys: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "GroebnerBasis[{}]{{{}}}", self.order, polys.join(", "))
    }
}

impl GroebnerBasis {
    /// Computes the reduced basis of the ideal generated by `gens` under the
    /// process-wide S-pair budget.
    pub fn compute(
        ring: &Arc<PolyRing>,
        gens: &[Polynomial],
        order: &MonomialOrder,
    ) -> Result<Self> {
        Self::compute_with_budget(ring, gens, order, None)
    }

    /// Computes the reduced basis with an explicit S-pair budget, overriding
    /// the process-wide default.
    pub fn compute_with_budget(
        ring: &Arc<PolyRing>,
        gens: &[Polynomial],
        order: &MonomialOrder,
        budget: Option<u64>,
    ) -> Result<Self> {
        if ring.num_vars() < order.min_vars() {
            return Err(Error::InvalidInput(format!(
                "order {order} needs at least {} variables, ring has {}",
                order.min_vars(),
                ring.num_vars()
            )));
        }
        for g in gens {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch(
                    "generator lives in a different ring".into(),
                ));
            }
        }
        let budget = budget.unwrap_or_else(pair_budget);

        let mut inputs: Vec<Terms> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let mut t = engine_terms(g, order);
            make_monic(&mut t)?;
            inputs.push(t);
        }
        inputs.sort_by(|a, b| input_key_cmp(a, b, order));
        inputs.dedup();

        let basis = buchberger(inputs, order, budget)?;
        let reduced = interreduce(basis, order)?;

        let polys = reduced
            .iter()
            .map(|t| Polynomial::from_terms(ring, t.clone()))
            .collect::<Result<Vec<_>>>()?;
        let leading: Vec<Monomial> = reduced.iter().map(|t| t[0].0.clone()).collect();
        Ok(GroebnerBasis {
            ring: Arc::clone(ring),
            order: order.clone(),
            polys,
            terms: reduced,
            leading,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements in canonical storage form, ascending by leading
    /// monomial under this basis's order.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Leading monomials, parallel to [`Self::polynomials`].  For a reduced
    /// basis these minimally generate the leading-term ideal.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    /// The unique fully reduced representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_ring(&self.ring) {
            return Err(Error::RingMismatch(
                "polynomial lives in a different ring".into(),
            ));
        }
        let work = engine_terms(f, &self.order);
        let rem = reduce_full(work, &self.terms, None, &self.order)?;
        Polynomial::from_terms(&self.ring, rem)
    }

    /// Independent check of the Buchberger criterion: every S-polynomial of
    /// basis elements with non-coprime leading terms reduces to zero.
    pub fn verify(&self) -> Result<bool> {
        for i in 0..self.terms.len() {
            for j in (i + 1)..self.terms.len() {
                if self.leading[i].gcd_is_one(&self.leading[j]) {
                    continue;
                }
                let lcm = self.leading[i].lcm(&self.leading[j]);
                let mult_i = lcm.div(&self.leading[i]).expect("lcm is divisible");
                let shifted: Terms = self.terms[i]
                    .iter()
                    .map(|(m, c)| (m.mul(&mult_i), c.clone()))
                    .collect();
                let mult_j = lcm.div(&self.leading[j]).expect("lcm is divisible");
                let one = FieldElem::one(self.ring.field());
                let s = sub_scaled(&shifted, &self.terms[j], &mult_j, &one, &self.order)?;
                if !reduce_full(s, &self.terms, None, &self.order)?.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::macaulay_contains;
    use super::*;
    use crate::field::FieldDescriptor;
    use crate::poly::parse::parse_polynomial;

    fn ring2(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        let k = FieldDescriptor::prime(p).unwrap();
        PolyRing::new(&k, vars).unwrap()
    }

    fn pp(ring: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn gb(ring: &Arc<PolyRing>, gens: &[&str]) -> GroebnerBasis {
        let gens: Vec<Polynomial> = gens.iter().map(|s| pp(ring, s)).collect();
        GroebnerBasis::compute(ring, &gens, &MonomialOrder::DegRevLex).unwrap()
    }

    /// Worked out by hand: the reduced basis of (x^2, y^2, z^2, z^2 + x*y) over
    /// F_2[x,y,z] is {z^2, y^2, x*y, x^2} — the fourth generator rewrites
    /// x*y as z^2, and the cross pair then reduces to 0.
    #[test]
    fn reduced_basis_of_quadric_frobenius_square() {
        let r = ring2(2, &["x", "y", "z"]);
        let b = gb(&r, &["x^2", "y^2", "z^2", "z^2+x*y"]);
        let got: Vec<String> = b.polynomials().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["z^2", "y^2", "x*y", "x^2"]);
        assert!(b.verify().unwrap());
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let r = ring2(2, &["x", "y", "z"]);
        let reference = gb(&r, &["x^2", "y^2", "z^2", "z^2+x*y"]);
        let permutations = [
            ["z^2+x*y", "z^2", "y^2", "x^2"],
            ["y^2", "z^2+x*y", "x^2", "z^2"],
            ["z^2", "x^2", "z^2+x*y", "y^2"],
        ];
        for perm in permutations {
            let b = gb(&r, &perm);
            assert_eq!(b.polynomials(), reference.polynomials());
        }
    }

    #[test]
    fn normal_forms_against_quadric_basis() {
        let r = ring2(2, &["x", "y", "z"]);
        let b = gb(&r, &["x^2", "y^2", "z^2", "z^2+x*y"]);
        assert_eq!(b.normal_form(&pp(&r, "x*z")).unwrap(), pp(&r, "x*z"));
        assert!(b.normal_form(&pp(&r, "x^2*y+z^3")).unwrap().is_zero());
        assert!(b.normal_form(&pp(&r, "x*y+z^2")).unwrap().is_zero());
        // representatives are unique: x*y and z^2 have the same normal form
        assert_eq!(
            b.normal_form(&pp(&r, "x*y")).unwrap(),
            b.normal_form(&pp(&r, "z^2")).unwrap()
        );
    }

    #[test]
    fn cyclic_cubic_basis_verifies() {
        let r = ring2(7, &["x", "y", "z"]);
        let b = gb(&r, &["x+y+z", "x*y+y*z+z*x", "x*y*z+6"]);
        assert!(b.verify().unwrap());
        // x + y + z reduces the first variable away entirely
        assert!(b
            .normal_form(&pp(&r, "x+y+z"))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = ring2(7, &["x", "y", "z"]);
        let gens: Vec<Polynomial> = ["x+y+z", "x*y+y*z+z*x", "x*y*z+6"]
            .iter()
            .map(|s| pp(&r, s))
            .collect();
        let err = GroebnerBasis::compute_with_budget(
            &r,
            &gens,
            &MonomialOrder::DegRevLex,
            Some(1),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(1)));
    }

    #[test]
    fn exact_division_and_failure() {
        let r = ring2(2, &["x", "y"]);
        let q = div_exact(&pp(&r, "x^2*y+x*y^2"), &pp(&r, "x*y")).unwrap();
        assert_eq!(q, pp(&r, "x+y"));
        assert!(div_exact(&pp(&r, "x^2+y"), &pp(&r, "x")).is_err());
        // exactness over a non-monic divisor and odd characteristic
        let r7 = ring2(7, &["x", "y"]);
        let f = pp(&r7, "2*x+1").mul(&pp(&r7, "3*y+x")).unwrap();
        assert_eq!(div_exact(&f, &pp(&r7, "2*x+1")).unwrap(), pp(&r7, "3*y+x"));
    }

    /// Membership cross-check against the dense linear-algebra oracle.
    /// In F_2[x,y] with I = (x^2 + y, y^2): x^4 = (x^2+y)^2 + y^2 lies in I,
    /// and x does not.
    #[test]
    fn membership_matches_macaulay_oracle() {
        let r = ring2(2, &["x", "y"]);
        let gens = vec![pp(&r, "x^2+y"), pp(&r, "y^2")];
        let b = GroebnerBasis::compute(&r, &gens, &MonomialOrder::DegRevLex).unwrap();

        let member = pp(&r, "x^4");
        assert!(b.normal_form(&member).unwrap().is_zero());
        assert!(macaulay_contains(&gens, &member, 4).unwrap());

        let non_member = pp(&r, "x");
        assert!(!b.normal_form(&non_member).unwrap().is_zero());
        assert!(!macaulay_contains(&gens, &non_member, 6).unwrap());

        // normal-form certificate: f - NF(f) always lies in the ideal
        let f = pp(&r, "x^4+x+y^3");
        let nf = b.normal_form(&f).unwrap();
        let witness = f.sub(&nf).unwrap();
        assert!(macaulay_contains(&gens, &witness, 6).unwrap());
    }

    #[test]
    fn elimination_order_projects_a_circle_intersection() {
        // Intersecting y = x^2 with x = y^2 over F_7 and eliminating x must
        // produce a relation purely in y: y^4 - y = y(y^3 - 1).
        let r = ring2(7, &["x", "y"]);
        let order = MonomialOrder::Block {
            elim: 1,
            inner: Box::new(MonomialOrder::DegRevLex),
        };
        let gens = vec![pp(&r, "y+6*x^2"), pp(&r, "x+6*y^2")];
        let b = GroebnerBasis::compute(&r, &gens, &order).unwrap();
        let pure: Vec<&Polynomial> = b
            .polynomials()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[0] == 0))
            .collect();
        assert_eq!(pure.len(), 1);
        assert_eq!(pure[0], &pp(&r, "y^4+6*y"));
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let r = ring2(2, &["x", "y"]);
        let b = gb(&r, &["x", "x+1"]);
        assert!(b.is_unit_ideal());
        assert_eq!(b.polynomials().len(), 1);
        assert!(b.polynomials()[0].is_one());
    }
}
