//! The sl₂ corpus: fundamental and Kirillov–Reshetikhin classes, products of
//! fundamentals, T-systems, the KR recursion, and the quasi-commutation
//! relations, all in the standard parameter quotient.

use super::{CheckReport, KRLabel};
use crate::cartan::{CartanData, DynkinType};
use crate::params::{ParamMonomial, QuotientContext};
use crate::torus::{Backend, TorusElement, YMonomial, YVar};
use std::sync::Arc;

pub fn backend() -> Arc<Backend> {
    Backend::cartan(CartanData::new(DynkinType::A(1)), QuotientContext::Standard)
}

/// s = t_{-2}^{1/2} t_2^{1/2}; in the standard quotient every
/// t_{-2k}^{1/2} t_{2k}^{1/2} equals s.
pub fn s_param() -> ParamMonomial {
    ParamMonomial::from_doubled_pairs(&[(-2, 1), (2, 1)])
}

pub fn t0() -> ParamMonomial {
    ParamMonomial::gen_doubled(0, 2)
}

/// α(h) = t₀^{(−1)^h} s^{−(−1)^h}.
pub fn alpha(h: i64) -> ParamMonomial {
    let e = if h % 2 == 0 { 1 } else { -1 };
    t0().pow(e).mul(&s_param().pow(-e))
}

/// The Kirillov–Reshetikhin class [W_{k,p}]: the (k+1)-term telescoping sum
/// Σ_{i=0}^{k} Y_p ⋯ Y_{p+2(i−1)} · Y_{p+2(i+1)}^{-1} ⋯ Y_{p+2k}^{-1}.
pub fn kr_class_sl2(backend: &Arc<Backend>, k: usize, p: i64) -> TorusElement {
    let mut out = TorusElement::zero(backend);
    for i in 0..=k {
        let mut pairs: Vec<(YVar, i64)> = Vec::new();
        for l in 0..i {
            pairs.push((YVar::new(1, p + 2 * l as i64), 1));
        }
        for l in i + 1..=k {
            pairs.push((YVar::new(1, p + 2 * l as i64), -1));
        }
        out = out.add(&TorusElement::monomial(backend, YMonomial::from_pairs(&pairs)));
    }
    out
}

/// The fundamental class [V(q^p)] = Y_p + Y_{p+2}^{-1}.
pub fn fundamental(backend: &Arc<Backend>, p: i64) -> TorusElement {
    kr_class_sl2(backend, 1, p)
}

/// The simple class [L(Y_p Y_{p+2h})] for h ≥ 1.
pub fn simple_pair(backend: &Arc<Backend>, p: i64, h: i64) -> TorusElement {
    let q = p + 2 * h;
    let mut out = TorusElement::monomial(backend, YMonomial::var(1, p).mul(&YMonomial::var(1, q)));
    out = out.add(&TorusElement::monomial(
        backend,
        YMonomial::var(1, p + 2).inv().mul(&YMonomial::var(1, q + 2).inv()),
    ));
    out = out.add(&TorusElement::monomial(
        backend,
        YMonomial::var(1, p).mul(&YMonomial::var(1, q + 2).inv()),
    ));
    if h > 1 {
        out = out.add(&TorusElement::monomial(
            backend,
            YMonomial::var(1, p + 2).inv().mul(&YMonomial::var(1, q)),
        ));
    }
    out
}

/// [V(q^p)] ⋆ [V(q^{p+2h})] = α(h)·[L(Y_p Y_{p+2h})] + δ_{h,1}.
pub fn pair_product_check(backend: &Arc<Backend>, p: i64, h: i64) -> bool {
    let lhs = fundamental(backend, p).star(&fundamental(backend, p + 2 * h));
    let mut rhs = simple_pair(backend, p, h).scale_monomial(&alpha(h));
    if h == 1 {
        rhs = rhs.add(&TorusElement::one(backend));
    }
    lhs == rhs
}

/// h = 1: [V(q^p)]⋆[V(q^{p+2})] − t₀^{-2}s² [V(q^{p+2})]⋆[V(q^p)] = 1 − t₀^{-2}s²;
/// h > 1: pure quasi-commutation with factor α(h)².
pub fn commutation_check(backend: &Arc<Backend>, p: i64, h: i64) -> bool {
    let v1 = fundamental(backend, p);
    let v2 = fundamental(backend, p + 2 * h);
    if h == 1 {
        let f = t0().pow(-2).mul(&s_param().pow(2));
        let lhs = v1.star(&v2).sub(&v2.star(&v1).scale_monomial(&f));
        let rhs = TorusElement::one(backend).sub(
            &TorusElement::one(backend).scale_monomial(&f),
        );
        lhs == rhs
    } else {
        v1.commutator_factor(&v2) == Ok(alpha(h).pow(2))
    }
}

/// The relations carried by the surjection onto the quantum torus at
/// t = t₀ s^{-1}: the h = 1 relation with 1 − t^{-2} and the pure factor
/// t^{2(−1)^h} for h ≥ 2, verified as identities in the quotient.
pub fn surjection_check(backend: &Arc<Backend>, p: i64, h: i64) -> bool {
    let t = t0().mul(&s_param().inv());
    let v1 = fundamental(backend, p);
    let v2 = fundamental(backend, p + 2 * h);
    if h == 1 {
        let lhs = v1.star(&v2);
        let rhs = v2
            .star(&v1)
            .scale_monomial(&t.pow(-2))
            .add(&TorusElement::one(backend))
            .sub(&TorusElement::one(backend).scale_monomial(&t.pow(-2)));
        lhs == rhs
    } else {
        let e = if h % 2 == 0 { 2 } else { -2 };
        v1.star(&v2) == v2.star(&v1).scale_monomial(&t.pow(e))
    }
}

/// T-system: [W_{k,p}] ⋆ [W_{k,p+2}] = t₀^{-1}s [W_{k−1,p+2}] ⋆ [W_{k+1,p}] + 1.
pub fn tsystem_sl2(backend: &Arc<Backend>, k: usize, p: i64) -> bool {
    if k == 0 {
        return true;
    }
    let lhs = kr_class_sl2(backend, k, p).star(&kr_class_sl2(backend, k, p + 2));
    let coeff = t0().inv().mul(&s_param());
    let rhs = kr_class_sl2(backend, k - 1, p + 2)
        .star(&kr_class_sl2(backend, k + 1, p))
        .scale_monomial(&coeff)
        .add(&TorusElement::one(backend));
    lhs == rhs
}

/// Recursion: [W_{ℓ,p}] = t₀s^{-1}((t₀s^{-1})^{−a(ℓ)}[W_{1,p}]⋆[W_{ℓ−1,p+2}] − [W_{ℓ−2,p+4}])
/// with a(ℓ) = 1 for odd ℓ.
pub fn kr_recursion_sl2(backend: &Arc<Backend>, l: usize, p: i64) -> bool {
    if l < 2 {
        return true;
    }
    let t = t0().mul(&s_param().inv());
    let a = if l % 2 == 1 { 1 } else { 0 };
    let rhs = kr_class_sl2(backend, 1, p)
        .star(&kr_class_sl2(backend, l - 1, p + 2))
        .scale_monomial(&t.pow(-a))
        .sub(&kr_class_sl2(backend, l - 2, p + 4))
        .scale_monomial(&t);
    kr_class_sl2(backend, l, p) == rhs
}

/// The full sl₂ corpus report.
pub fn sl2_corpus() -> CheckReport {
    let b = backend();
    let mut report = CheckReport::default();
    for p in [0i64, 2, -4] {
        for h in 1..=3 {
            report.push(&format!("pair-product p={} h={}", p, h), pair_product_check(&b, p, h));
            report.push(&format!("commutation p={} h={}", p, h), commutation_check(&b, p, h));
            report.push(&format!("surjection p={} h={}", p, h), surjection_check(&b, p, h));
        }
        for k in 1..=6 {
            report.push(&format!("tsystem k={} p={}", k, p), tsystem_sl2(&b, k, p));
        }
        for l in 2..=6 {
            report.push(&format!("recursion l={} p={}", l, p), kr_recursion_sl2(&b, l, p));
        }
    }
    // Each KR class is bar-invariant with a unique dominant monomial of
    // coefficient one.
    for k in 1..=4usize {
        let w = kr_class_sl2(&b, k, 0);
        let label = KRLabel { i: 1, k, r: 0 };
        let dom = w.dominant_monomials();
        report.push(
            &format!("kr-class k={} shape", k),
            w.is_bar_invariant()
                && dom == vec![label.dominant_monomial()]
                && w.coefficient(&dom[0]).is_one(),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamLaurent;

    #[test]
    fn fundamental_display() {
        let b = backend();
        let v = fundamental(&b, 0);
        assert_eq!(v.to_string(), "Y[1,0] + Y[1,2]^-1");
    }

    #[test]
    fn corpus_passes() {
        let report = sl2_corpus();
        assert!(
            report.all_ok(),
            "{:?}",
            report.checks.iter().filter(|c| !c.1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn fit_identity_recovers_tsystem_coefficients() {
        let b = backend();
        let lhs = kr_class_sl2(&b, 2, 0).star(&kr_class_sl2(&b, 2, 2));
        let rhs1 = kr_class_sl2(&b, 1, 2).star(&kr_class_sl2(&b, 3, 0));
        let rhs2 = TorusElement::one(&b);
        let coeffs = super::super::fit_identity(&lhs, &[rhs1, rhs2]).unwrap();
        assert_eq!(
            coeffs[0],
            ParamLaurent::from_monomial(t0().inv().mul(&s_param()))
        );
        assert_eq!(coeffs[1], ParamLaurent::one());
    }
}
