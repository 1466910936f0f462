//! Randomized structural invariants, exercised through `proptest`.
//!
//! These complement the deterministic cross-checks in the acceptance suite:
//! instead of curated instances, each property draws many small random
//! instances and checks an exact law — staircase counts for monomial
//! colengths, exact bracket-power scaling, closure of ideal membership
//! under combinations, and the ring laws of polynomial arithmetic over an
//! extension field.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hk::field::FieldDescriptor;
use hk::groebner::Ideal;
use hk::multiplicity::{hk_function, multiplicity_estimate, EstimatorKind};
use hk::poly::parse::parse_polynomial;
use hk::poly::{PolyRing, Polynomial, RingPresentation};

fn f2_plane() -> Arc<RingPresentation> {
    let field = FieldDescriptor::prime(2).unwrap();
    RingPresentation::free(&PolyRing::new(&field, &["x", "y"]).unwrap())
}

fn f2_cone() -> Arc<RingPresentation> {
    let field = FieldDescriptor::prime(2).unwrap();
    let ring = PolyRing::new(&field, &["x", "y", "z"]).unwrap();
    let relation = parse_polynomial(&ring, "z^2 + x*y").unwrap();
    RingPresentation::new(&ring, vec![relation]).unwrap()
}

fn f4_ring() -> Arc<PolyRing> {
    let field = FieldDescriptor::extension(2, "a", &[1, 1, 1]).unwrap();
    PolyRing::new(&field, &["x", "y"]).unwrap()
}

/// A random polynomial described by a term list: exponents per variable and
/// a flag that multiplies the term by one fixed extra factor (used for the
/// field generator).  Duplicate terms cancel in characteristic 2, which is
/// part of what makes this a fair sample.
fn build_poly(
    ring: &Arc<PolyRing>,
    atoms: &[Polynomial],
    extra: Option<&Polynomial>,
    spec: &[(Vec<u64>, bool)],
) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (exps, flag) in spec {
        let mut term = Polynomial::one(ring);
        for (atom, &e) in atoms.iter().zip(exps.iter()) {
            term = term.mul(&atom.pow(e).unwrap()).unwrap();
        }
        if *flag {
            if let Some(extra) = extra {
                term = term.mul(extra).unwrap();
            }
        }
        acc = acc.add(&term).unwrap();
    }
    acc
}

fn term_spec(
    nvars: usize,
    max_exp: u64,
    max_terms: usize,
) -> impl Strategy<Value = Vec<(Vec<u64>, bool)>> {
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, nvars), any::<bool>()),
        1..=max_terms,
    )
}

/// Lattice points strictly under the staircase of `(x^a, y^b, x^i y^j)`.
fn staircase_count(a: u64, b: u64, corner: Option<(u64, u64)>) -> u64 {
    let mut count = 0;
    for u in 0..a {
        for v in 0..b {
            if let Some((i, j)) = corner {
                if u >= i && v >= j {
                    continue;
                }
            }
            count += 1;
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The colength of a monomial ideal is the number of lattice points
    /// under its staircase.
    #[test]
    fn colength_counts_the_staircase(a in 1u64..6, b in 1u64..6, i in 1u64..5, j in 1u64..5) {
        let pres = f2_plane();
        let gens = [format!("x^{a}"), format!("y^{b}"), format!("x^{i}*y^{j}")];
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let ideal = Ideal::parse(&pres, &refs).unwrap();
        prop_assert_eq!(ideal.colength().unwrap(), staircase_count(a, b, Some((i, j))));
    }

    /// Bracket powers of a monomial ideal scale the staircase by `q` in
    /// every direction, so the length law is exactly `colength · q^2` and
    /// the refined estimate is exact from the very first pair.
    #[test]
    fn monomial_bracket_powers_scale_exactly(a in 1u64..5, b in 1u64..5, i in 1u64..4, j in 1u64..4) {
        let pres = f2_plane();
        let gens = [format!("x^{a}"), format!("y^{b}"), format!("x^{i}*y^{j}")];
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let ideal = Ideal::parse(&pres, &refs).unwrap();
        let base = ideal.colength().unwrap();
        let records = hk_function(&ideal, &[2, 4]).unwrap();
        for r in &records {
            prop_assert_eq!(r.colength, r.q * r.q * base);
        }
        let estimate = multiplicity_estimate(&records, EstimatorKind::TwoPoint).unwrap();
        prop_assert!(estimate.is_exact());
        prop_assert_eq!(estimate.value, BigRational::from(BigInt::from(base)));
    }

    /// Ideal membership is closed under random combinations of the
    /// generators, and shifting a member by a non-member leaves the ideal.
    #[test]
    fn membership_is_closed_under_combinations(
        spec1 in term_spec(3, 3, 3),
        spec2 in term_spec(3, 3, 3),
    ) {
        let pres = f2_cone();
        let ring = pres.ring();
        let atoms = [
            parse_polynomial(ring, "x").unwrap(),
            parse_polynomial(ring, "y").unwrap(),
            parse_polynomial(ring, "z").unwrap(),
        ];
        let c1 = build_poly(ring, &atoms, None, &spec1);
        let c2 = build_poly(ring, &atoms, None, &spec2);
        let g1 = parse_polynomial(ring, "y").unwrap();
        let g2 = parse_polynomial(ring, "x + z").unwrap();
        let ideal = Ideal::new(&pres, vec![g1.clone(), g2.clone()]).unwrap();

        let member = c1.mul(&g1).unwrap().add(&c2.mul(&g2).unwrap()).unwrap();
        prop_assert!(ideal.contains(&member).unwrap());

        let x = parse_polynomial(ring, "x").unwrap();
        prop_assert!(!ideal.contains(&x).unwrap());
        prop_assert!(!ideal.contains(&member.add(&x).unwrap()).unwrap());
    }

    /// Polynomial arithmetic over F_4 satisfies the commutative-ring laws,
    /// and characteristic 2 makes every element its own negative.
    #[test]
    fn arithmetic_respects_ring_laws(
        spec1 in term_spec(2, 4, 4),
        spec2 in term_spec(2, 4, 4),
        spec3 in term_spec(2, 4, 4),
    ) {
        let ring = f4_ring();
        let atoms = [
            parse_polynomial(&ring, "x").unwrap(),
            parse_polynomial(&ring, "y").unwrap(),
        ];
        let gen = parse_polynomial(&ring, "a").unwrap();
        let f = build_poly(&ring, &atoms, Some(&gen), &spec1);
        let g = build_poly(&ring, &atoms, Some(&gen), &spec2);
        let h = build_poly(&ring, &atoms, Some(&gen), &spec3);

        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().add(&h).unwrap(),
            f.add(&g.add(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(f.add(&f).unwrap().is_zero());
    }

    /// The termwise Frobenius power agrees with repeated multiplication,
    /// and raising to a bracket power is additive (freshman's dream).
    #[test]
    fn frobenius_power_matches_repeated_multiplication(
        spec1 in term_spec(2, 4, 4),
        spec2 in term_spec(2, 4, 4),
        e in 1u32..3,
    ) {
        let ring = f4_ring();
        let atoms = [
            parse_polynomial(&ring, "x").unwrap(),
            parse_polynomial(&ring, "y").unwrap(),
        ];
        let gen = parse_polynomial(&ring, "a").unwrap();
        let f = build_poly(&ring, &atoms, Some(&gen), &spec1);
        let g = build_poly(&ring, &atoms, Some(&gen), &spec2);
        let q = 2u64.pow(e);

        prop_assert_eq!(f.frobenius_power(q).unwrap(), f.pow(q).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().pow(q).unwrap(),
            f.pow(q).unwrap().add(&g.pow(q).unwrap()).unwrap()
        );
    }
}
