//! The two-parameter rank-one corpus on the example seed: the quantized
//! Serre-type cubic relations between X₁ and its mutation X₁′, closed
//! formulas for power products, and the one-parameter specialization.

use super::CheckReport;
use crate::cluster::{example_seed, ToroidalSeed};
use crate::params::{ParamLaurent, ParamMonomial};
use crate::torus::TorusElement;

pub fn t1() -> ParamMonomial {
    ParamMonomial::gen_doubled(1, 2)
}

pub fn t2() -> ParamMonomial {
    ParamMonomial::gen_doubled(2, 2)
}

/// s = t₁ t₂^{1/2}, the effective single parameter of the power-product
/// formulas.
pub fn s_param() -> ParamMonomial {
    ParamMonomial::from_doubled_pairs(&[(1, 2), (2, 1)])
}

/// X₁′, the mutation of X₁ in the example seed.
pub fn x1_prime(seed: &ToroidalSeed) -> TorusElement {
    seed.mutate(0).unwrap().vars[0].clone()
}

/// Project every coefficient of an element onto the given parameter indices,
/// setting all the other parameters to one.
pub fn project_params(el: &TorusElement, keep: &[i64]) -> TorusElement {
    let ctx = el.backend().ctx().clone();
    let mut out = TorusElement::zero(el.backend());
    for (m, c) in el.terms() {
        let mut pc = ParamLaurent::zero();
        for (pm, k) in c.terms() {
            pc = pc.add(&ParamLaurent::from_monomial(pm.project(keep)).scale(k), &ctx);
        }
        out = out.add(&TorusElement::monomial(el.backend(), m.clone()).scale(&pc));
    }
    out
}

/// Both quantized cubic relations:
///   X₁⋆X₁⋆X₁′ − (t₁^{-1}t₂^{-1}+t₁)·X₁⋆X₁′⋆X₁ + t₂^{-1}·X₁′⋆X₁⋆X₁ = 0,
///   X₁′⋆X₁′⋆X₁ − (t₁t₂+t₁^{-1})·X₁′⋆X₁⋆X₁′ + t₂·X₁⋆X₁′⋆X₁′ = 0.
pub fn serre_relations_check(seed: &ToroidalSeed) -> (bool, bool) {
    let x1 = seed.vars[0].clone();
    let xp = x1_prime(seed);
    let ctx = seed.backend.ctx().clone();
    let mid1 = ParamLaurent::from_monomial(t1().inv().mul(&t2().inv()))
        .add(&ParamLaurent::from_monomial(t1()), &ctx);
    let lhs1 = x1
        .star(&x1)
        .star(&xp)
        .sub(&x1.star(&xp).star(&x1).scale(&mid1))
        .add(&xp.star(&x1).star(&x1).scale_monomial(&t2().inv()));
    let mid2 = ParamLaurent::from_monomial(t1().mul(&t2()))
        .add(&ParamLaurent::from_monomial(t1().inv()), &ctx);
    let lhs2 = xp
        .star(&xp)
        .star(&x1)
        .sub(&xp.star(&x1).star(&xp).scale(&mid2))
        .add(&x1.star(&xp).star(&xp).scale_monomial(&t2()));
    (lhs1.is_zero(), lhs2.is_zero())
}

/// X₁′^m ⋆ X₁^m = (t₁t₂)^{m²/2} Σ_{a+b=m} c_{a}(s) X₂^a X₃^b with the
/// tabulated coefficients in s = t₁t₂^{1/2}.
pub fn power_product_check(seed: &ToroidalSeed, m: usize) -> bool {
    let x1 = seed.vars[0].clone();
    let xp = x1_prime(seed);
    let lhs = xp.star_pow(m as i64).star(&x1.star_pow(m as i64));
    let s = s_param();
    // Coefficient of X₂^a X₃^{m−a} as a polynomial in s^{-1}, given by the
    // exponent lists below.
    let coeffs: Vec<Vec<i64>> = match m {
        1 => vec![vec![0], vec![1]],
        2 => vec![vec![0], vec![1, 3], vec![4]],
        3 => vec![vec![0], vec![1, 3, 5], vec![4, 6, 8], vec![9]],
        4 => vec![
            vec![0],
            vec![1, 3, 5, 7],
            vec![4, 6, 8, 8, 10, 12],
            vec![9, 11, 13, 15],
            vec![16],
        ],
        _ => return false,
    };
    let m2 = (m * m) as i64;
    let prefactor = ParamMonomial::from_doubled_pairs(&[(1, m2), (2, m2)]);
    let mut rhs = TorusElement::zero(&seed.backend);
    for (a, exps) in coeffs.iter().enumerate() {
        let mono = seed
            .seed_monomial(&[0, a as i64, (m - a) as i64])
            .unwrap();
        let mut c = ParamLaurent::zero();
        for &e in exps {
            c = c.add(&ParamLaurent::from_monomial(s.pow(-e)), seed.backend.ctx());
        }
        rhs = rhs.add(&mono.scale(&c));
    }
    lhs == rhs.scale_monomial(&prefactor)
}

pub fn serre_corpus() -> CheckReport {
    let seed = example_seed();
    let mut report = CheckReport::default();
    let x1 = seed.vars[0].clone();
    let xp = x1_prime(&seed);

    let (c1, c2) = serre_relations_check(&seed);
    report.push("cubic relation 1", c1);
    report.push("cubic relation 2", c2);

    // X₁ ⋆ X₁′ = t₁^{1/2} X₂ + t₁^{-1/2} t₂^{-1/2} X₃ and the reverse order.
    report.push(
        "product X1*X1'",
        x1.star(&xp).to_string() == "t[1]^{1/2} * X[2] + t[1]^{-1/2} t[2]^{-1/2} * X[3]",
    );
    report.push(
        "product X1'*X1",
        xp.star(&x1).to_string() == "t[1]^{-1/2} * X[2] + t[1]^{1/2} t[2]^{1/2} * X[3]",
    );

    for m in 1..=4 {
        report.push(&format!("power product m={}", m), power_product_check(&seed, m));
    }

    // At t₂ = 1 both product expansions collapse to the one-parameter
    // quantum exchange relation.
    let p = project_params(&x1.star(&xp), &[1]);
    report.push(
        "t2=1 specialization",
        p.to_string() == "t[1]^{1/2} * X[2] + t[1]^{-1/2} * X[3]"
            && project_params(&xp.star(&x1), &[1]).to_string()
                == "t[1]^{-1/2} * X[2] + t[1]^{1/2} * X[3]",
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        let report = serre_corpus();
        assert!(
            report.all_ok(),
            "{:?}",
            report.checks.iter().filter(|c| !c.1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn mutation_is_involutive_on_example() {
        let seed = example_seed();
        let back = seed.mutate(0).unwrap().mutate(0).unwrap();
        assert_eq!(back.vars[0], seed.vars[0]);
        assert_eq!(back.b, seed.b);
    }
}
