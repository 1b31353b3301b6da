mod common;

use proptest::prelude::*;

use rccode::analysis::{
    is_rc_oracle, is_rc_theorem, is_reversible_oracle, is_reversible_oracle_reciprocal,
    is_reversible_theorem, rc_via_reciprocal,
};
use rccode::{ChainRing, CyclicCode, CyclicPoly, PolyRing, DEFAULT_ENUMERATION_BOUND};

use common::{check_structure, rings_up_to, space};

const SPACES: &[(&str, usize)] = &[
    ("Z4", 2),
    ("Z4", 3),
    ("Z4", 4),
    ("Z8", 2),
    ("Z8", 3),
    ("Z9", 2),
    ("Z9", 3),
    ("F2[v]/v^2", 3),
    ("F2[v]/v^3", 4),
    ("F4[v]/v^2", 2),
    ("F3[v]/v^2", 3),
];

fn poly_from(space: &PolyRing, raw: &[u32]) -> CyclicPoly {
    let size = space.ring().size();
    let coeffs = raw
        .iter()
        .take(space.n())
        .map(|&c| space.ring().elem(c % size).unwrap())
        .collect();
    space.from_coeffs(coeffs).unwrap()
}

/// A space index plus raw material for up to three generators.
fn arb_code_input() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (
        0..SPACES.len(),
        prop::collection::vec(prop::collection::vec(any::<u32>(), 4), 1..=3),
    )
}

fn build(input: &(usize, Vec<Vec<u32>>)) -> CyclicCode {
    let (spec, n) = SPACES[input.0];
    let s = space(spec, n);
    let gens: Vec<CyclicPoly> = input.1.iter().map(|raw| poly_from(&s, raw)).collect();
    CyclicCode::span(&s, &gens, DEFAULT_ENUMERATION_BOUND).unwrap()
}

#[test]
fn ring_axioms_exhaustive_small_rings() {
    for ring in rings_up_to(64) {
        let els: Vec<_> = ring.elements().collect();
        for &a in &els {
            assert_eq!(ring.add(a, ring.neg(a)), ring.zero());
            assert_eq!(ring.mul(a, ring.one()), a);
            for &b in &els {
                assert_eq!(ring.add(a, b), ring.add(b, a), "{ring}");
                assert_eq!(ring.mul(a, b), ring.mul(b, a), "{ring}");
                let vab = ring.valuation(ring.mul(a, b));
                let expected = (ring.valuation(a) + ring.valuation(b)).min(ring.nilpotency());
                assert_eq!(
                    vab,
                    expected,
                    "{ring}: v({}*{})",
                    ring.render(a),
                    ring.render(b)
                );
                for &c in &els {
                    assert_eq!(
                        ring.mul(ring.mul(a, b), c),
                        ring.mul(a, ring.mul(b, c)),
                        "{ring}"
                    );
                    assert_eq!(
                        ring.mul(a, ring.add(b, c)),
                        ring.add(ring.mul(a, b), ring.mul(a, c)),
                        "{ring}"
                    );
                    assert_eq!(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)));
                }
            }
        }
    }
}

#[test]
fn ring_structure_invariants() {
    for ring in rings_up_to(1024) {
        let nu = ring.nilpotency();
        let gamma = ring.gamma();
        assert_eq!(ring.pow(gamma, nu as u64), ring.zero(), "{ring}");
        if nu > 1 {
            assert_ne!(ring.pow(gamma, nu as u64 - 1), ring.zero(), "{ring}");
        }
        let units = ring.units();
        assert_eq!(units.len() as u32, ring.unit_count(), "{ring}");
        for x in ring.elements() {
            let t = ring.valuation(x);
            assert_eq!(units.binary_search(&x).is_ok(), t == 0, "{ring}");
            // x = gamma^t * unit unless x = 0.
            if x != ring.zero() {
                let gt = ring.pow(gamma, t as u64);
                assert!(units.iter().any(|&u| ring.mul(gt, u) == x), "{ring}");
            }
        }
        for &u in &units {
            assert_eq!(ring.mul(u, ring.invert(u).unwrap()), ring.one(), "{ring}");
        }
    }
}

#[test]
fn ring_axioms_at_256() {
    // Spot-check the largest table-backed rings with distributivity on a
    // stride, and full commutativity.
    for spec in [
        "Z256",
        "F2[v]/v^8",
        "F4[v]/v^4",
        "F16[v]/v^2",
        "F256[v]/v^1",
    ] {
        let ring = ChainRing::parse(spec).unwrap();
        let els: Vec<_> = ring.elements().collect();
        for &a in &els {
            for &b in &els {
                assert_eq!(ring.mul(a, b), ring.mul(b, a), "{spec}");
            }
            for &b in els.iter().step_by(7) {
                for &c in els.iter().step_by(11) {
                    assert_eq!(
                        ring.mul(a, ring.add(b, c)),
                        ring.add(ring.mul(a, b), ring.mul(a, c)),
                        "{spec}"
                    );
                    assert_eq!(
                        ring.mul(ring.mul(a, b), c),
                        ring.mul(a, ring.mul(b, c)),
                        "{spec}"
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_involution(spec_idx in 0..SPACES.len(), r in any::<u32>()) {
        let ring = ChainRing::parse(SPACES[spec_idx].0).unwrap();
        let r = ring.elem(r % ring.size()).unwrap();
        for (u, k) in ring.admissible_pairs() {
            let c = ring.complement(r, u, k).unwrap();
            prop_assert_eq!(ring.add(r, ring.mul(u, c)), k);
            prop_assert_eq!(ring.complement(c, u, k).unwrap(), r);
        }
    }

    #[test]
    fn lemma_identity_random_polys(spec_idx in 0..SPACES.len(), raw in prop::collection::vec(any::<u32>(), 4)) {
        let (spec, n) = SPACES[spec_idx];
        let s = space(spec, n);
        let f = poly_from(&s, &raw);
        prop_assume!(!f.is_zero());
        for (u, k) in s.ring().admissible_pairs() {
            prop_assert_eq!(s.rc_transform(&f, u, k).unwrap(), rc_via_reciprocal(&s, &f, u, k).unwrap());
        }
    }

    #[test]
    fn poly_ring_laws(spec_idx in 0..SPACES.len(),
                      a in prop::collection::vec(any::<u32>(), 4),
                      b in prop::collection::vec(any::<u32>(), 4),
                      c in prop::collection::vec(any::<u32>(), 4)) {
        let (spec, n) = SPACES[spec_idx];
        let s = space(spec, n);
        let (f, g, h) = (poly_from(&s, &a), poly_from(&s, &b), poly_from(&s, &c));
        prop_assert_eq!(s.mul(&f, &g).unwrap(), s.mul(&g, &f).unwrap());
        prop_assert_eq!(
            s.mul(&s.mul(&f, &g).unwrap(), &h).unwrap(),
            s.mul(&f, &s.mul(&g, &h).unwrap()).unwrap()
        );
        let z = s.parse("z").unwrap();
        let mut rotated = f.clone();
        for _ in 0..n {
            rotated = s.mul(&rotated, &z).unwrap();
        }
        prop_assert_eq!(&rotated, &f);
        prop_assert_eq!(s.parse(&s.render(&f)).unwrap(), f.clone());
        if f.coeff(0) != s.ring().zero() {
            prop_assert_eq!(s.reciprocal(&s.reciprocal(&f).unwrap()).unwrap(), f.clone());
        }
        if let Some(d) = f.degree() {
            let r = s.reciprocal(&f).unwrap();
            prop_assert!(r.degree().unwrap() <= d);
            prop_assert_eq!(r.degree() == Some(d), f.coeff(0) != s.ring().zero());
            // Word reversal is the reciprocal shifted into place.
            prop_assert_eq!(s.word_reverse(&f), s.shift(&r, n - 1 - d));
        }
        for (u, k) in s.ring().admissible_pairs() {
            let once = s.rc_transform(&f, u, k).unwrap();
            prop_assert_eq!(s.rc_transform(&once, u, k).unwrap(), f.clone());
        }
    }

    #[test]
    fn code_closure_and_structure(input in arb_code_input()) {
        let code = build(&input);
        let s = code.space().clone();
        for g in code.generators() {
            prop_assert!(code.contains(g).unwrap());
        }
        for w in code.codewords() {
            prop_assert!(code.contains(&s.shift(&w, 1)).unwrap());
            for r in s.ring().elements() {
                prop_assert!(code.contains(&s.scale(r, &w)).unwrap());
            }
        }
        if let Err(e) = check_structure(&code) {
            return Err(TestCaseError::fail(e));
        }
        // Presenting the same code through S gives the same profile.
        let again: Vec<CyclicPoly> = code.generating_set().iter().map(|g| g.poly.clone()).collect();
        let again = CyclicCode::span(&s, &again, DEFAULT_ENUMERATION_BOUND).unwrap();
        prop_assert_eq!(again.fingerprint(), code.fingerprint());
        prop_assert_eq!(again.profile(), code.profile());
    }

    #[test]
    fn theorem_matches_oracle(input in arb_code_input()) {
        let code = build(&input);
        let ring = code.space().ring().clone();
        let rev = is_reversible_theorem(&code).unwrap();
        let rev_oracle = is_reversible_oracle(&code);
        prop_assert_eq!(rev.holds, rev_oracle);
        prop_assert_eq!(is_reversible_oracle_reciprocal(&code).unwrap(), rev_oracle);
        prop_assert!(rev.recheck(&code, None).unwrap());
        for (u, k) in ring.admissible_pairs() {
            let rc = is_rc_theorem(&code, u, k).unwrap();
            let rc_oracle = is_rc_oracle(&code, u, k).unwrap();
            prop_assert_eq!(rc.holds, rc_oracle);
            prop_assert!(rc.recheck(&code, Some((u, k))).unwrap());
            if rc_oracle {
                prop_assert!(rev_oracle);
            }
        }
    }
}
