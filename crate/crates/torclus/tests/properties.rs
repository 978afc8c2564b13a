//! Randomized property suites for the algebraic core: star associativity,
//! bar anti-multiplicativity, mutation involutivity, quotient congruence,
//! exact-division round trips, and classical-specialization equivalence.

mod support;

use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn star_associativity(a in arb_element(), b in arb_element(), c in arb_element()) {
        star_assoc_case(&a, &b, &c)?;
    }

    #[test]
    fn bar_involution_and_anti_multiplicativity(a in arb_element(), b in arb_element()) {
        bar_case(&a, &b)?;
    }

    #[test]
    fn mutation_involutivity_and_compatibility(path in arb_path()) {
        mutation_path_case(&path)?;
    }

    #[test]
    fn quotient_congruence(
        m1 in arb_param_monomial(),
        coeffs in [-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5],
        m3 in arb_param_monomial(),
    ) {
        quotient_case(&m1, &coeffs, &m3)?;
    }

    #[test]
    fn lattice_membership_brute_force(entries in [-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2]) {
        lattice_brute_case(&entries)?;
    }

    #[test]
    fn exact_division_round_trips(a in arb_element(), d in arb_element()) {
        division_case(&a, &d)?;
    }

    #[test]
    fn classical_specialization_matches_oracle(path in proptest::collection::vec(0usize..2, 0..4)) {
        classical_case(&path)?;
    }
}
