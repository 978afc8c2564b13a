//! Shared strategies and case checkers for the randomized property suites.
//! Used by both the `properties` target (full proptest runs) and the
//! `acceptance` target (deterministic runner for criterion 9).

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use std::sync::Arc;
use torclus::cartan::{CartanData, DynkinType};
use torclus::cluster::classical::{specialize_element, shadow_index, ClassicalSeed};
use torclus::cluster::ToroidalSeed;
use torclus::groth::sl3;
use torclus::params::{standard_member, ExpSeq, ParamLaurent, ParamMonomial, QuotientContext};
use torclus::torus::{Backend, TorusElement, YMonomial, YVar};

pub fn a2_backend() -> Arc<Backend> {
    static BACKEND: std::sync::OnceLock<Arc<Backend>> = std::sync::OnceLock::new();
    BACKEND
        .get_or_init(|| Backend::cartan(CartanData::new(DynkinType::A(2)), QuotientContext::None))
        .clone()
}

pub fn arb_param_monomial() -> impl Strategy<Value = ParamMonomial> {
    proptest::collection::vec((-3i64..=3, -4i64..=4), 0..3)
        .prop_map(|pairs| ParamMonomial::from_doubled_pairs(&pairs))
}

pub fn arb_param_laurent() -> impl Strategy<Value = ParamLaurent> {
    proptest::collection::vec((arb_param_monomial(), -3i64..=3), 1..3).prop_map(|terms| {
        let mut out = ParamLaurent::zero();
        for (m, c) in terms {
            out.add_term(m, c, &QuotientContext::None);
        }
        if out.is_zero() {
            ParamLaurent::one()
        } else {
            out
        }
    })
}

pub fn arb_ymonomial() -> impl Strategy<Value = YMonomial> {
    proptest::collection::vec((1usize..=2, -2i64..=4, -2i64..=2), 0..3).prop_map(|vars| {
        let pairs: Vec<(YVar, i64)> =
            vars.into_iter().map(|(i, r, e)| (YVar::new(i, r), e)).collect();
        YMonomial::from_pairs(&pairs)
    })
}

pub fn arb_element() -> impl Strategy<Value = TorusElement> {
    proptest::collection::vec((arb_ymonomial(), arb_param_laurent()), 1..3).prop_map(|terms| {
        let backend = a2_backend();
        let mut out = TorusElement::zero(&backend);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        if out.is_zero() {
            TorusElement::one(&backend)
        } else {
            out
        }
    })
}

/// Mutation directions for the rank-2 five-seed reference cluster.
pub fn arb_path() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0usize..2, 0..5)
}

pub fn star_assoc_case(
    a: &TorusElement,
    b: &TorusElement,
    c: &TorusElement,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.star(b).star(c), a.star(&b.star(c)));
    Ok(())
}

pub fn bar_case(a: &TorusElement, b: &TorusElement) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.bar().bar(), a.clone());
    prop_assert_eq!(a.star(b).bar(), b.bar().star(&a.bar()));
    Ok(())
}

pub fn mutation_path_case(path: &[usize]) -> Result<(), TestCaseError> {
    let data = Arc::new(CartanData::new(DynkinType::A(2)));
    let xi = torclus::groth::HeightFunction::bipartite(&data, 0);
    let initial = torclus::groth::c1::build_c1_seed(&data, &xi);
    let diagonals = initial.check_compatibility().diagonals;
    let mut seed = initial.clone();
    let mut trail = Vec::new();
    for &k in path {
        let next = seed.mutate(k);
        prop_assert!(next.is_ok(), "mutation failed on path {:?}", path);
        let next = next.unwrap();
        let comp = next.check_compatibility();
        prop_assert!(comp.is_compatible(), "compatibility lost on path {:?}", path);
        prop_assert_eq!(&comp.diagonals, &diagonals);
        // One-step involutivity at every node of the walk.
        let back = next.mutate(k).unwrap();
        prop_assert_eq!(&back.vars, &seed.vars);
        prop_assert_eq!(&back.b, &seed.b);
        prop_assert_eq!(&back.q, &seed.q);
        trail.push(k);
        seed = next;
    }
    // Undo the whole walk.
    for &k in trail.iter().rev() {
        seed = seed.mutate(k).unwrap();
    }
    prop_assert_eq!(seed.vars, initial.vars);
    prop_assert_eq!(seed.b, initial.b);
    Ok(())
}

/// Doubled generator of the standard relation lattice: +1 at ±2k, −1 at
/// ±(2k+2).
fn standard_gen(k: i64) -> ExpSeq {
    ExpSeq::from_doubled_pairs(&[(-2 * k - 2, -1), (-2 * k, 1), (2 * k, 1), (2 * k + 2, -1)])
}

pub fn quotient_case(
    m1: &ParamMonomial,
    gen_coeffs: &[i64; 4],
    m3: &ParamMonomial,
) -> Result<(), TestCaseError> {
    let ctx = QuotientContext::Standard;
    let mut lattice = ExpSeq::zero();
    for (k, &c) in gen_coeffs.iter().enumerate() {
        lattice = lattice.add(&standard_gen(k as i64 + 1).scale(c));
    }
    let m2 = m1.mul(&ParamMonomial(lattice));
    prop_assert!(ctx.equal(m1, &m2));
    // Congruence: multiplication preserves equality in the quotient.
    prop_assert!(ctx.equal(&m1.mul(m3), &m2.mul(m3)));
    // Reduction produces a canonical representative for both.
    prop_assert_eq!(ctx.reduce(m1), ctx.reduce(&m2));
    // A half-step at index 0 leaves the lattice coset.
    let perturbed = m1.mul(&ParamMonomial(ExpSeq::from_doubled_pairs(&[(0, 1)])));
    prop_assert!(!ctx.equal(m1, &perturbed));
    Ok(())
}

/// Compare standard-lattice membership against a brute-force search over
/// small integer combinations. For support inside [−6, 6] only the first two
/// generators can appear, and any true member with doubled entries in
/// [−2, 2] has coefficients bounded by 5, so the search is exhaustive.
pub fn lattice_brute_case(entries: &[i64; 6]) -> Result<(), TestCaseError> {
    let idx = [-6i64, -4, -2, 2, 4, 6];
    let pairs: Vec<(i64, i64)> = idx.iter().copied().zip(entries.iter().copied()).collect();
    let d = ExpSeq::from_doubled_pairs(&pairs);
    let mut brute = false;
    'outer: for c1 in -5i64..=5 {
        for c2 in -5i64..=5 {
            if standard_gen(1).scale(c1).add(&standard_gen(2).scale(c2)) == d {
                brute = true;
                break 'outer;
            }
        }
    }
    prop_assert_eq!(standard_member(&d), brute, "entries {:?}", entries);
    Ok(())
}

pub fn division_case(a: &TorusElement, d: &TorusElement) -> Result<(), TestCaseError> {
    let left = d.star(a);
    let back = left.exact_divide_left(d);
    prop_assert!(back.is_ok(), "left division failed");
    prop_assert_eq!(back.unwrap(), a.clone());
    let right = a.star(d);
    let back = right.exact_divide_right(d);
    prop_assert!(back.is_ok(), "right division failed");
    prop_assert_eq!(back.unwrap(), a.clone());
    Ok(())
}

pub fn classical_case(path: &[usize]) -> Result<(), TestCaseError> {
    let mut seeds: Vec<ToroidalSeed> = vec![sl3::c1_ob_a2_seed()];
    for &k in path {
        let next = seeds.last().unwrap().mutate(k);
        prop_assert!(next.is_ok());
        seeds.push(next.unwrap());
    }
    // One coordinate index for the whole walk so specializations line up.
    let all: Vec<TorusElement> = seeds.iter().flat_map(|s| s.vars.iter().cloned()).collect();
    let index = shadow_index(&all);
    let spec = |s: &ToroidalSeed| ClassicalSeed {
        vars: s.vars.iter().map(|v| specialize_element(v, &index)).collect(),
        b: s.b.clone(),
        m: s.m,
    };
    let mut oracle = spec(&seeds[0]);
    for (step, &k) in path.iter().enumerate() {
        let next = oracle.mutate(k);
        prop_assert!(next.is_some(), "classical division failed at step {}", step);
        oracle = next.unwrap();
        let expected = spec(&seeds[step + 1]);
        prop_assert_eq!(&oracle.vars, &expected.vars);
        prop_assert_eq!(&oracle.b, &expected.b);
    }
    Ok(())
}
