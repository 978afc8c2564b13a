//! The B₂ corpus: truncated classes on the flat sub-torus, the rank-one
//! custom parameter quotient, the product/commutator displays, the six-vertex
//! seed Σ with its reparametrized skew matrices, and its mutation identities.

use super::{CheckReport, GrothError};
use crate::cartan::{CartanData, DynkinType};
use crate::cluster::{quiver, ToroidalSeed};
use crate::params::{ExpSeq, ParamLaurent, ParamMonomial, QuotientContext};
use crate::torus::{Backend, TorusElement, YMonomial, YVar};
use std::sync::Arc;

pub fn data() -> Arc<CartanData> {
    CartanData::new(DynkinType::B2)
}

/// The quotient relation t_{-4}^{1/2} t_{-2}^{-1/2} t_2^{-1/2} t_4^{1/2} = 1.
pub fn quotient_relation() -> ParamMonomial {
    ParamMonomial::from_doubled_pairs(&[(-4, 1), (-2, -1), (2, -1), (4, 1)])
}

pub fn backend_plain() -> Arc<Backend> {
    Backend::cartan(data(), QuotientContext::None)
}

pub fn backend_quotient() -> Arc<Backend> {
    Backend::cartan(data(), QuotientContext::custom(vec![quotient_relation()]))
}

fn mono(backend: &Arc<Backend>, pairs: &[(usize, i64, i64)]) -> TorusElement {
    let pairs: Vec<(YVar, i64)> = pairs.iter().map(|&(i, r, e)| (YVar::new(i, r), e)).collect();
    TorusElement::monomial(backend, YMonomial::from_pairs(&pairs))
}

/// The truncated fundamental classes on the flat sub-torus.
pub fn truncated_fundamental(
    backend: &Arc<Backend>,
    i: usize,
    r: i64,
) -> Result<TorusElement, GrothError> {
    let el = match (i, r) {
        (1, 0) => mono(backend, &[(1, 0, 1)])
            .add(&mono(backend, &[(1, 2, -1), (2, 1, 1)]))
            .add(&mono(backend, &[(2, 5, -1), (1, 4, 1)])),
        (1, 2) => mono(backend, &[(1, 2, 1)]).add(&mono(backend, &[(1, 4, -1), (2, 3, 1)])),
        (1, 4) => mono(backend, &[(1, 4, 1)]),
        (2, 1) => mono(backend, &[(2, 1, 1)]).add(&mono(backend, &[(2, 5, -1), (1, 2, 1), (1, 4, 1)])),
        (2, 3) => mono(backend, &[(2, 3, 1)]),
        (2, 5) => mono(backend, &[(2, 5, 1)]),
        _ => return Err(GrothError::NotThin),
    };
    Ok(el)
}

/// All six truncated fundamental classes with display labels.
pub fn truncated_table() -> Vec<(String, TorusElement)> {
    let backend = backend_plain();
    [(1, 0), (1, 2), (1, 4), (2, 1), (2, 3), (2, 5)]
        .into_iter()
        .map(|(i, r)| {
            (
                format!("[V{}(q^{})]", i, r),
                truncated_fundamental(&backend, i, r).unwrap(),
            )
        })
        .collect()
}

/// ∏_a t_a^{e_a/2} for a doubled exponent sequence e.
fn halved(e: &ExpSeq) -> ParamMonomial {
    ParamMonomial(e.half().expect("doubled exponents must be even"))
}

/// The truncated simple class [L(Y_{1,0}Y_{1,2})].
pub fn l_y10_y12(backend: &Arc<Backend>) -> TorusElement {
    mono(backend, &[(1, 0, 1), (1, 2, 1)])
        .add(&mono(backend, &[(1, 2, -1), (1, 4, -1), (2, 1, 1), (2, 3, 1)]))
        .add(&mono(backend, &[(2, 3, 1), (2, 5, -1)]))
        .add(&mono(backend, &[(1, 0, 1), (1, 4, -1), (2, 3, 1)]))
}

/// The truncated simple class [L(Y_{1,0}Y_{1,4})].
pub fn l_y10_y14(backend: &Arc<Backend>) -> TorusElement {
    mono(backend, &[(1, 0, 1), (1, 4, 1)])
        .add(&mono(backend, &[(1, 2, -1), (1, 4, 1), (2, 1, 1)]))
        .add(&mono(backend, &[(1, 4, 2), (2, 5, -1)]))
}

/// The truncated simple class [L(Y_{1,0}Y_{2,1})], with the two-term
/// bar-invariant coefficient on Y_{1,4}Y_{2,1}Y_{2,5}^{-1}.
pub fn l_y10_y21(backend: &Arc<Backend>) -> TorusElement {
    let n12 = data().n_sequence(1, 0, 1, 2);
    let n21 = data().n_sequence(1, 0, 2, 1);
    let gamma = halved(&n12.add(&n21.neg()));
    let coeff = ParamLaurent::from_monomial(gamma.clone())
        .add(&ParamLaurent::from_monomial(gamma.inv()), backend.ctx());
    mono(backend, &[(1, 0, 1), (2, 1, 1)])
        .add(&mono(backend, &[(1, 2, -1), (2, 1, 2)]))
        .add(&mono(backend, &[(1, 2, 1), (1, 4, 2), (2, 5, -2)]))
        .add(&mono(backend, &[(1, 0, 1), (1, 2, 1), (1, 4, 1), (2, 5, -1)]))
        .add(
            &mono(backend, &[(1, 4, 1), (2, 1, 1), (2, 5, -1)]).scale(&coeff),
        )
}

/// The truncated class [L(Y_{1,0}Y_{2,5})] (the seed variable X₂).
pub fn l_y10_y25(backend: &Arc<Backend>) -> TorusElement {
    mono(backend, &[(1, 0, 1), (2, 5, 1)]).add(&mono(backend, &[(1, 2, -1), (2, 1, 1), (2, 5, 1)]))
}

/// The six-vertex seed Σ (three exchangeable, three frozen) in the quotient
/// backend.
pub fn seed_sigma() -> ToroidalSeed {
    let backend = backend_quotient();
    let vars = vec![
        mono(&backend, &[(2, 5, 1)]),
        l_y10_y25(&backend),
        mono(&backend, &[(1, 4, 1)]),
        mono(&backend, &[(2, 1, 1), (2, 5, 1)]),
        mono(&backend, &[(1, 0, 1), (1, 2, 1), (1, 4, 1)]),
        mono(&backend, &[(2, 3, 1)]),
    ];
    let bt = bt_sigma();
    let b: Vec<Vec<i64>> = (0..6).map(|i| (0..3).map(|k| bt[k][i]).collect()).collect();
    ToroidalSeed::new(backend, vars, b, 3).unwrap()
}

fn bt_sigma() -> Vec<Vec<i64>> {
    vec![
        vec![0, -1, 1, 0, 0, 0],
        vec![1, 0, -1, -1, 1, 0],
        vec![-1, 1, 0, 0, -1, 1],
    ]
}

fn lambda1() -> Vec<Vec<i64>> {
    vec![
        vec![0, 1, -1, 1, 0, -1],
        vec![-1, 0, 0, 1, 0, -1],
        vec![1, 0, 0, 1, 0, -1],
        vec![-1, -1, -1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0],
        vec![1, 1, 1, 0, 0, 0],
    ]
}

fn lambda2() -> Vec<Vec<i64>> {
    vec![
        vec![0, -1, 0, -2, -2, -1],
        vec![1, 0, 0, -1, -1, 0],
        vec![0, 0, 0, -1, -1, 0],
        vec![2, 1, 1, 0, -1, 0],
        vec![2, 1, 1, 1, 0, 1],
        vec![1, 0, 0, 0, -1, 0],
    ]
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let cols = b[0].len();
    let inner = b.len();
    let mut out = vec![vec![0i64; cols]; rows];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..inner).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// The full B₂ report.
pub fn b2_corpus() -> CheckReport {
    let mut report = CheckReport::default();
    let d = data();
    let plain = backend_plain();
    let quot = backend_quotient();
    let ctx = quot.ctx().clone();
    let n12 = d.n_sequence(1, 0, 1, 2);
    let n21 = d.n_sequence(1, 0, 2, 1);
    let n24 = d.n_sequence(2, 0, 2, 4);

    // The three displayed infinite parameter products.
    let tail = vec![0, 0, -2, 0, -2, 0, 0, 0, 2, 0, 2, 0];
    let want12 = ExpSeq::with_tail(
        -2,
        vec![2, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 2, 0],
        tail.clone(),
    );
    let want21 = ExpSeq::with_tail(0, vec![2, 0, -2, 0, -2, 0, 0, 0, 2, 0, 2, 0], tail.clone());
    let want24 = ExpSeq::with_tail(
        -4,
        vec![2, 0, 2, 0, -2, 0, -4, 0, -4, 0, 0, 0, 6, 0, 6, 0],
        tail.iter().map(|v| 3 * v).collect(),
    );
    report.push("tail N(1,0;1,2)", n12 == want12);
    report.push("tail N(1,0;2,1)", n21 == want21);
    report.push("tail N(2,0;2,4)", n24 == want24);

    // Truncated classes: bar-invariant with a unique dominant monomial.
    for (i, r) in [(1, 0), (1, 2), (1, 4), (2, 1), (2, 3), (2, 5)] {
        let v = truncated_fundamental(&quot, i, r).unwrap();
        report.push(
            &format!("class shape V{}(q^{})", i, r),
            v.is_bar_invariant() && v.dominant_monomials() == vec![YMonomial::var(i, r)],
        );
    }

    // Product display, unquotiented:
    // [V₁(1)]⋆[V₁(q²)] = ∏t^{N(1,0;1,2)/2}( Y₁₀Y₁₂ + Y₂₃Y₂₅^{-1}
    //   + Y₁₂^{-1}Y₁₄^{-1}Y₂₁Y₂₃ + κ·Y₁₀Y₁₄^{-1}Y₂₃ ) + ∏t^{N(1,0;2,1)/2}[V₂(q)]
    // with κ = ∏t^{(2N(1,0;1,2) − N(2,0;2,4) + N(1,0;2,1))/2}.
    let v10 = truncated_fundamental(&plain, 1, 0).unwrap();
    let v12 = truncated_fundamental(&plain, 1, 2).unwrap();
    let v21 = truncated_fundamental(&plain, 2, 1).unwrap();
    let kappa = ParamMonomial(n12.add(&n21.add(&n24.neg()).half().unwrap()));
    let product = v10.star(&v12);
    let inner = mono(&plain, &[(1, 0, 1), (1, 2, 1)])
        .add(&mono(&plain, &[(2, 3, 1), (2, 5, -1)]))
        .add(&mono(&plain, &[(1, 2, -1), (1, 4, -1), (2, 1, 1), (2, 3, 1)]))
        .add(&mono(&plain, &[(1, 0, 1), (1, 4, -1), (2, 3, 1)]).scale_monomial(&kappa));
    let expected = inner
        .scale_monomial(&halved(&n12))
        .add(&v21.scale_monomial(&halved(&n21)));
    report.push("product V1(1)*V1(q2)", product == expected);

    // Commutator display, unquotiented:
    // product − ∏t^{N(1,0;1,2)}·reversed =
    //   (1 − t_{-2}t_0^{-2}t_2) ∏t^{N(1,0;2,1)/2} [V₂(q)]
    // + (1 − t_{-4}t_{-2}^{-1}t_2^{-1}t_4) ∏t^{(3N₁₂ − N₂₄ + N₂₁)/2} Y₁₀Y₁₄^{-1}Y₂₃.
    let rho0 = ParamMonomial::from_doubled_pairs(&[(-2, 2), (0, -4), (2, 2)]);
    let rho1 = ParamMonomial::from_doubled_pairs(&[(-4, 2), (-2, -2), (2, -2), (4, 2)]);
    let one_minus = |m: &ParamMonomial, ctx: &QuotientContext| {
        ParamLaurent::one().sub(&ParamLaurent::from_monomial(m.clone()), ctx)
    };
    let commutator = product.sub(&v12.star(&v10).scale_monomial(&ParamMonomial(n12.clone())));
    let tau = ParamMonomial(n12.add(&n12.add(&n21).add(&n24.neg()).half().unwrap()));
    let expected_comm = v21
        .scale_monomial(&halved(&n21))
        .scale(&one_minus(&rho0, &QuotientContext::None))
        .add(
            &mono(&plain, &[(1, 0, 1), (1, 4, -1), (2, 3, 1)])
                .scale_monomial(&tau)
                .scale(&one_minus(&rho1, &QuotientContext::None)),
        );
    report.push("commutator V1(1),V1(q2)", commutator == expected_comm);

    // In the quotient: ρ₁ = relation² ≡ 1, so the second defect vanishes
    // and only the (1 − t_{-2}t_0^{-2}t_2)-term survives.
    report.push("rho1 trivial in quotient", ctx.equal(&rho1, &ParamMonomial::one()));
    let v21q = truncated_fundamental(&quot, 2, 1).unwrap();
    let comm_q = commutator.into_backend(&quot);
    let survived = v21q
        .scale_monomial(&halved(&n21))
        .scale(&one_minus(&rho0, &ctx));
    report.push("commutator in quotient", comm_q == survived);

    // Product reduces to the simple-class decomposition in the quotient.
    let prod_q = product.into_backend(&quot);
    let decomposed = l_y10_y12(&quot)
        .scale_monomial(&halved(&n12))
        .add(&v21q.scale_monomial(&halved(&n21)));
    report.push("product decomposes over simples", prod_q == decomposed);

    // Simple classes: bar-invariant with a unique dominant monomial.
    for (name, class, dom) in [
        ("L(Y10Y12)", l_y10_y12(&quot), vec![(1usize, 0i64), (1, 2)]),
        ("L(Y10Y14)", l_y10_y14(&quot), vec![(1, 0), (1, 4)]),
        ("L(Y10Y21)", l_y10_y21(&quot), vec![(1, 0), (2, 1)]),
    ] {
        let pairs: Vec<(YVar, i64)> = dom.iter().map(|&(i, r)| (YVar::new(i, r), 1)).collect();
        report.push(
            &format!("simple shape {}", name),
            class.is_bar_invariant()
                && class.dominant_monomials() == vec![YMonomial::from_pairs(&pairs)],
        );
    }

    // Seed Σ: Q entries match the reparametrized skew matrices
    // t₁ = ∏t^{N(1,0;2,1)}, t₂ = ∏t^{N(1,0;1,2)+N(1,0;2,1)}.
    let seed = seed_sigma();
    let t1 = ParamMonomial(n21.clone());
    let t2 = ParamMonomial(n12.add(&n21));
    let l1 = lambda1();
    let l2 = lambda2();
    let mut q_matches = true;
    for i in 0..6 {
        for j in 0..6 {
            let want = t1.pow(l1[i][j]).mul(&t2.pow(l2[i][j]));
            if !ctx.equal(&seed.q[i][j], &want) {
                q_matches = false;
            }
        }
    }
    report.push("Q matches t1^L1 t2^L2", q_matches);

    // Integer compatibility of the displayed matrices.
    let bt = bt_sigma();
    let p1 = mat_mul(&bt, &l1);
    let p2 = mat_mul(&bt, &l2);
    let diag = |p: &Vec<Vec<i64>>, d: i64| {
        (0..3).all(|k| (0..6).all(|j| p[k][j] == if j == k { d } else { 0 }))
    };
    report.push("Bt L1 = (2Id|0)", diag(&p1, 2));
    report.push("Bt L2 = (-Id|0)", diag(&p2, -1));

    // Mutation in direction 1: X₁' = [V₁(1)] and the exchange display
    // X₁ ⋆ X₁' = t₁^{1/2}t₂^{-1/2} X₂ + t₁^{-1/2} X₃.
    let t1h = halved(&n21);
    let t2h = halved(&n12.add(&n21));
    let s1 = seed.mutate(0).unwrap();
    let v10q = truncated_fundamental(&quot, 1, 0).unwrap();
    report.push("mutation dir1 gives V1(1)", s1.vars[0] == v10q);
    let display1 = seed.vars[1]
        .scale_monomial(&t1h.mul(&t2h.inv()))
        .add(&seed.vars[2].scale_monomial(&t1h.inv()));
    report.push("display X1*X1'", seed.vars[0].star(&s1.vars[0]) == display1);
    report.push("X1' bar-invariant", s1.vars[0].is_bar_invariant());

    // Mutation in direction 2: X₂' = Y_{1,2}Y_{1,4}, the exchange display
    // X₂ ⋆ X₂' = t₁^{-1/2} X₁X₅ + t₁^{1/2}t₂^{-1/2} X₃X₄, and the mutated B̃.
    let s2 = seed.mutate(1).unwrap();
    report.push(
        "mutation dir2 gives L(Y12Y14)",
        s2.vars[1] == mono(&quot, &[(1, 2, 1), (1, 4, 1)]),
    );
    let x1x5 = seed.seed_monomial(&[1, 0, 0, 0, 1, 0]).unwrap();
    let x3x4 = seed.seed_monomial(&[0, 0, 1, 1, 0, 0]).unwrap();
    let display2 = x1x5
        .scale_monomial(&t1h.inv())
        .add(&x3x4.scale_monomial(&t1h.mul(&t2h.inv())));
    report.push("display X2*X2'", seed.vars[1].star(&s2.vars[1]) == display2);
    let btp = vec![
        vec![0, 1, 0, -1, 0, 0],
        vec![-1, 0, 1, 1, -1, 0],
        vec![0, -1, 0, 0, 0, 1],
    ];
    let bp: Vec<Vec<i64>> = (0..6).map(|i| (0..3).map(|k| btp[k][i]).collect()).collect();
    report.push("mutated B dir2", s2.b == bp);
    report.push("X2' bar-invariant", s2.vars[1].is_bar_invariant());

    // T-system instances:
    // [V₂(q⁵)]⋆[V₂(q)] = t₁^{1/2}t₂^{-1} [L(Y21Y25)] + (t₁t₂)^{-1/2} [L(Y12Y14)],
    // [V₁(q⁴)]⋆[V₁(q²)] = t₁^{1/2}t₂^{-1/2} [L(Y12Y14)] + t₁^{-1/2} [V₂(q³)].
    let v25 = truncated_fundamental(&quot, 2, 5).unwrap();
    let l2125 = mono(&quot, &[(2, 1, 1), (2, 5, 1)]);
    let l1214 = mono(&quot, &[(1, 2, 1), (1, 4, 1)]);
    let c1 = t1h.mul(&ParamMonomial(n12.add(&n21)).inv());
    let c2 = halved(&n12.add(&n21.scale(2))).inv();
    let ts1 = l2125.scale_monomial(&c1).add(&l1214.scale_monomial(&c2));
    report.push("tsystem V2(q5)*V2(q1)", v25.star(&v21q) == ts1);
    let v14 = truncated_fundamental(&quot, 1, 4).unwrap();
    let v12q = truncated_fundamental(&quot, 1, 2).unwrap();
    let v23 = truncated_fundamental(&quot, 2, 3).unwrap();
    let ts2 = l1214
        .scale_monomial(&t1h.mul(&t2h.inv()))
        .add(&v23.scale_monomial(&t1h.inv()));
    report.push("tsystem V1(q4)*V1(q2)", v14.star(&v12q) == ts2);

    // The principal quiver of Σ is mutation equivalent to type A₃.
    let cls = quiver::quiver_mutation_class(&seed.principal_part(), 1000);
    report.push("principal quiver A3", cls.label.as_deref() == Some("A3") && cls.finite);

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        let report = b2_corpus();
        assert!(
            report.all_ok(),
            "{:?}",
            report.checks.iter().filter(|c| !c.1).collect::<Vec<_>>()
        );
    }

    #[test]
    fn quotient_relation_is_bar_symmetric() {
        let rel = quotient_relation();
        assert_eq!(rel.bar(), rel.inv());
    }
}
