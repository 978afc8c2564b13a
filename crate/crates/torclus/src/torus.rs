//! Multi-parameter quantum torus elements in the commutative-monomial basis:
//! the star product with its half-power parameter correction, bar involution,
//! truncation, exact skew division, and dominance-order utilities.

use crate::cartan::CartanData;
use crate::params::{ExpSeq, ParamLaurent, ParamMonomial, QuotientContext};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("elements do not quasi-commute")]
    NotQuasiCommuting,
    #[error("exact division failed")]
    NotDivisible,
    #[error("monomial is not i-dominant")]
    NotIDominant,
    #[error("operands belong to different torus backends")]
    BackendMismatch,
    #[error("halving an odd exponent while solving for a square root")]
    OddExponent,
}

/// A generator index: the variable Y_{i,q^r} (or X_i with r = 0 for finite
/// backends).  Ordered ascending by (r, i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YVar {
    pub r: i64,
    pub i: usize,
}

impl YVar {
    pub fn new(i: usize, r: i64) -> Self {
        YVar { r, i }
    }
}

/// Finitely supported exponent vector over the Y-variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YMonomial {
    exps: BTreeMap<YVar, i64>,
}

impl YMonomial {
    pub fn one() -> Self {
        YMonomial::default()
    }

    pub fn var(i: usize, r: i64) -> Self {
        YMonomial::from_pairs(&[(YVar::new(i, r), 1)])
    }

    pub fn from_pairs(pairs: &[(YVar, i64)]) -> Self {
        let mut m = YMonomial::one();
        for &(v, e) in pairs {
            m.mul_var(v, e);
        }
        m
    }

    fn mul_var(&mut self, v: YVar, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exps.entry(v).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&v);
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, v: YVar) -> i64 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (YVar, i64)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &YMonomial) -> YMonomial {
        let mut out = self.clone();
        for (v, e) in other.iter() {
            out.mul_var(v, e);
        }
        out
    }

    pub fn inv(&self) -> YMonomial {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> YMonomial {
        if k == 0 {
            return YMonomial::one();
        }
        YMonomial {
            exps: self.exps.iter().map(|(&v, &e)| (v, e * k)).collect(),
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }

    /// Translation-invariant total order (lexicographic on the full exponent
    /// vector, absent variables counting as zero), so that
    /// a < b implies a·c < b·c.  The derived Ord is not multiplicative and
    /// must not be used to pick leading terms.
    pub fn div_cmp(&self, other: &YMonomial) -> std::cmp::Ordering {
        let mut it1 = self.exps.iter().peekable();
        let mut it2 = other.exps.iter().peekable();
        loop {
            match (it1.peek(), it2.peek()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(&(&v1, &e1)), Some(&(&v2, &e2))) => {
                    if v1 < v2 {
                        // other has exponent 0 at v1
                        return e1.cmp(&0);
                    } else if v2 < v1 {
                        return 0.cmp(&e2);
                    } else if e1 != e2 {
                        return e1.cmp(&e2);
                    }
                    it1.next();
                    it2.next();
                }
                (Some(&(_, &e1)), None) => return e1.cmp(&0),
                (None, Some(&(_, &e2))) => return 0.cmp(&e2),
            }
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = YVar> + '_ {
        self.exps.keys().copied()
    }
}

/// The pairing/quotient backend of a torus.
#[derive(Debug)]
pub enum Backend {
    /// Finitely many generators with explicit skew matrices Λ_a (1-based
    /// generator indices; `lambdas` maps parameter index a to its matrix).
    Finite {
        rank: usize,
        lambdas: Vec<(i64, Vec<Vec<i64>>)>,
        ctx: QuotientContext,
    },
    /// Generators Y_{i,r} with pairing N_a from the quantized Cartan matrix,
    /// optionally projected to a kept parameter index set.
    Cartan {
        data: Arc<CartanData>,
        ctx: QuotientContext,
        project: Option<Vec<i64>>,
    },
}

impl Backend {
    pub fn finite(rank: usize, lambdas: Vec<(i64, Vec<Vec<i64>>)>, ctx: QuotientContext) -> Arc<Backend> {
        for (_, l) in &lambdas {
            assert_eq!(l.len(), rank);
            for (i, row) in l.iter().enumerate() {
                assert_eq!(row.len(), rank);
                for (j, &v) in row.iter().enumerate() {
                    assert_eq!(v, -l[j][i], "Λ_a must be skew-symmetric");
                }
            }
        }
        Arc::new(Backend::Finite { rank, lambdas, ctx })
    }

    pub fn cartan(data: Arc<CartanData>, ctx: QuotientContext) -> Arc<Backend> {
        Arc::new(Backend::Cartan {
            data,
            ctx,
            project: None,
        })
    }

    pub fn cartan_projected(data: Arc<CartanData>, ctx: QuotientContext, keep: Vec<i64>) -> Arc<Backend> {
        Arc::new(Backend::Cartan {
            data,
            ctx,
            project: Some(keep),
        })
    }

    pub fn ctx(&self) -> &QuotientContext {
        match self {
            Backend::Finite { ctx, .. } => ctx,
            Backend::Cartan { ctx, .. } => ctx,
        }
    }

    pub fn cartan_data(&self) -> Option<&Arc<CartanData>> {
        match self {
            Backend::Cartan { data, .. } => Some(data),
            Backend::Finite { .. } => None,
        }
    }

    pub fn is_finite_backend(&self) -> bool {
        matches!(self, Backend::Finite { .. })
    }

    /// Doubled exponent sequence of the full commutation monomial:
    /// x·y = (∏_a t_a^{seq_a/2})·y·x on single monomials (seq = 2·Σ u·v·N).
    fn commutation_doubled(&self, m1: &YMonomial, m2: &YMonomial) -> ExpSeq {
        let mut total = ExpSeq::zero();
        match self {
            Backend::Finite { lambdas, .. } => {
                let mut pairs = Vec::new();
                for &(a, ref l) in lambdas {
                    let mut acc = 0i64;
                    for (v1, e1) in m1.iter() {
                        for (v2, e2) in m2.iter() {
                            acc += e1 * e2 * l[v1.i - 1][v2.i - 1];
                        }
                    }
                    // Λ exponent is an integer power of t_a; doubled = 2Λ.
                    pairs.push((a, 2 * acc));
                }
                total = ExpSeq::from_doubled_pairs(&pairs);
            }
            Backend::Cartan { data, project, .. } => {
                for (v1, e1) in m1.iter() {
                    for (v2, e2) in m2.iter() {
                        let seq = data.n_sequence(v1.i, v1.r, v2.i, v2.r);
                        total = total.add(&seq.scale(e1 * e2));
                    }
                }
                if let Some(keep) = project {
                    let pairs: Vec<(i64, i64)> = keep
                        .iter()
                        .map(|&a| (a, total.get_doubled(a)))
                        .filter(|&(_, d)| d != 0)
                        .collect();
                    total = ExpSeq::from_doubled_pairs(&pairs);
                }
            }
        }
        total
    }

    /// The star-product correction ∏_a t_a^{D_a/2} for m1 ⋆ m2.
    fn star_correction(&self, m1: &YMonomial, m2: &YMonomial) -> Result<ParamMonomial, TorusError> {
        let seq = self.commutation_doubled(m1, m2);
        Ok(ParamMonomial(seq.half().map_err(|_| TorusError::OddExponent)?))
    }

    fn render_var(&self, v: YVar) -> String {
        match self {
            Backend::Finite { .. } => format!("X[{}]", v.i),
            Backend::Cartan { .. } => format!("Y[{},{}]", v.i, v.r),
        }
    }
}

fn same_backend(a: &Arc<Backend>, b: &Arc<Backend>) -> bool {
    Arc::ptr_eq(a, b)
}

/// A finite sum of ParamLaurent coefficients times commutative monomials.
#[derive(Debug, Clone)]
pub struct TorusElement {
    pub backend: Arc<Backend>,
    terms: BTreeMap<YMonomial, ParamLaurent>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for TorusElement {}

impl TorusElement {
    pub fn zero(backend: &Arc<Backend>) -> Self {
        TorusElement {
            backend: backend.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(backend: &Arc<Backend>) -> Self {
        TorusElement::monomial(backend, YMonomial::one())
    }

    pub fn monomial(backend: &Arc<Backend>, m: YMonomial) -> Self {
        TorusElement::term(backend, m, ParamLaurent::one())
    }

    pub fn var(backend: &Arc<Backend>, i: usize, r: i64) -> Self {
        TorusElement::monomial(backend, YMonomial::var(i, r))
    }

    pub fn term(backend: &Arc<Backend>, m: YMonomial, c: ParamLaurent) -> Self {
        let mut e = TorusElement::zero(backend);
        e.add_term(m, c);
        e
    }

    pub fn backend(&self) -> &Arc<Backend> {
        &self.backend
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &ParamLaurent)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &YMonomial) -> ParamLaurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: YMonomial, c: ParamLaurent) {
        let c = c.reduced(self.backend.ctx());
        if c.is_zero() {
            return;
        }
        let ctx = self.backend.ctx().clone();
        let entry = self.terms.entry(m.clone()).or_default();
        *entry = entry.add(&c, &ctx);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &TorusElement) -> TorusElement {
        assert!(same_backend(&self.backend, &other.backend), "backend mismatch");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TorusElement) -> TorusElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement {
            backend: self.backend.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Multiply every coefficient by a ParamLaurent (central scalar).
    pub fn scale(&self, c: &ParamLaurent) -> TorusElement {
        let ctx = self.backend.ctx().clone();
        let mut out = TorusElement::zero(&self.backend);
        for (m, cc) in self.terms() {
            out.add_term(m.clone(), cc.mul(c, &ctx));
        }
        out
    }

    pub fn scale_monomial(&self, c: &ParamMonomial) -> TorusElement {
        self.scale(&ParamLaurent::from_monomial(c.clone()))
    }

    pub fn star(&self, other: &TorusElement) -> TorusElement {
        assert!(same_backend(&self.backend, &other.backend), "backend mismatch");
        let ctx = self.backend.ctx().clone();
        let mut out = TorusElement::zero(&self.backend);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let corr = self
                    .backend
                    .star_correction(m1, m2)
                    .expect("star correction has integral doubled exponents");
                let c = c1.mul(c2, &ctx).mul_monomial(&corr, &ctx);
                out.add_term(m1.mul(m2), c);
            }
        }
        out
    }

    /// Star power with nonnegative exponent, or any exponent for a
    /// one-term element whose coefficient is a single monomial.
    pub fn star_pow(&self, k: i64) -> TorusElement {
        if k < 0 {
            let (m, c) = self
                .single_term()
                .expect("negative star power requires a single-term element");
            let (cm, cc) = c
                .as_single_term()
                .expect("negative star power requires a monomial coefficient");
            assert!(cc == 1 || cc == -1, "coefficient not invertible");
            let inv = TorusElement::term(
                &self.backend,
                m.inv(),
                ParamLaurent::from_term(cm.inv(), cc),
            );
            return inv.star_pow(-k);
        }
        let mut out = TorusElement::one(&self.backend);
        for _ in 0..k {
            out = out.star(self);
        }
        out
    }

    pub fn single_term(&self) -> Option<(YMonomial, ParamLaurent)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn bar(&self) -> TorusElement {
        let ctx = self.backend.ctx().clone();
        let mut out = TorusElement::zero(&self.backend);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.bar().reduced(&ctx));
        }
        out
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Extract c with self ⋆ other = c · (other ⋆ self), verified on the full
    /// products.
    pub fn commutator_factor(&self, other: &TorusElement) -> Result<ParamMonomial, TorusError> {
        let ctx = self.backend.ctx().clone();
        let p = self.star(other);
        let q = other.star(self);
        if p.is_zero() && q.is_zero() {
            return Ok(ParamMonomial::one());
        }
        let (m, cp) = match p.terms.iter().next_back() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(TorusError::NotQuasiCommuting),
        };
        let cq = q.coefficient(&m);
        // Candidate from the ratio of the greatest-monomial coefficients.
        let ratio = cp.try_div(&cq, &ctx).ok_or(TorusError::NotQuasiCommuting)?;
        let (cm, cc) = ratio
            .as_single_term()
            .ok_or(TorusError::NotQuasiCommuting)?;
        if cc != 1 {
            return Err(TorusError::NotQuasiCommuting);
        }
        let c = cm.clone();
        if p == q.scale(&ParamLaurent::from_monomial(c.clone())) {
            Ok(c)
        } else {
            Err(TorusError::NotQuasiCommuting)
        }
    }

    pub fn truncate(&self, allowed: &BTreeSet<YVar>) -> TorusElement {
        let mut out = TorusElement::zero(&self.backend);
        for (m, c) in self.terms() {
            if m.variables().all(|v| allowed.contains(&v)) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn dominant_monomials(&self) -> Vec<YMonomial> {
        self.terms
            .keys()
            .filter(|m| m.is_dominant())
            .cloned()
            .collect()
    }

    /// Right-exact division: find q with q ⋆ d = self.
    pub fn exact_divide_right(&self, d: &TorusElement) -> Result<TorusElement, TorusError> {
        self.exact_divide(d, false)
    }

    /// Left-exact division: find q with d ⋆ q = self.
    pub fn exact_divide_left(&self, d: &TorusElement) -> Result<TorusElement, TorusError> {
        self.exact_divide(d, true)
    }

    fn exact_divide(&self, d: &TorusElement, from_left: bool) -> Result<TorusElement, TorusError> {
        assert!(same_backend(&self.backend, &d.backend), "backend mismatch");
        if d.is_zero() {
            return Err(TorusError::NotDivisible);
        }
        let ctx = self.backend.ctx().clone();
        let lead = |el: &TorusElement| {
            el.terms
                .iter()
                .max_by(|(m1, _), (m2, _)| m1.div_cmp(m2))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap()
        };
        let (dm, dc) = lead(d);
        let mut rem = self.clone();
        let mut q = TorusElement::zero(&self.backend);
        let mut steps = 0usize;
        while !rem.is_zero() {
            steps += 1;
            if steps > 10_000 {
                return Err(TorusError::NotDivisible);
            }
            let (rm, rc) = lead(&rem);
            let qm = rm.mul(&dm.inv());
            // q_term ⋆ d (or d ⋆ q_term) has lead coefficient
            // qc · dc · correction(qm, dm); solve for qc.
            let corr = if from_left {
                self.backend
                    .star_correction(&dm, &qm)
                    .map_err(|_| TorusError::NotDivisible)?
            } else {
                self.backend
                    .star_correction(&qm, &dm)
                    .map_err(|_| TorusError::NotDivisible)?
            };
            let target = rc
                .mul_monomial(&corr.inv(), &ctx)
                .try_div(&dc, &ctx)
                .ok_or(TorusError::NotDivisible)?;
            let qterm = TorusElement::term(&self.backend, qm, target);
            let prod = if from_left { d.star(&qterm) } else { qterm.star(d) };
            rem = rem.sub(&prod);
            if !rem.is_zero() {
                let (nm, _) = lead(&rem);
                if nm.div_cmp(&rm) != std::cmp::Ordering::Less {
                    return Err(TorusError::NotDivisible);
                }
            }
            q = q.add(&qterm);
        }
        Ok(q)
    }

    /// Specialize all parameters t_a → 1: the commutative shadow.
    pub fn specialize_all_one(&self) -> BTreeMap<YMonomial, i64> {
        let mut out = BTreeMap::new();
        for (m, c) in self.terms() {
            let s = c.coefficient_sum();
            if s != 0 {
                out.insert(m.clone(), s);
            }
        }
        out
    }

    /// Re-interpret this element in another backend (same generators, e.g. a
    /// different quotient context); coefficients are re-reduced.
    pub fn into_backend(&self, backend: &Arc<Backend>) -> TorusElement {
        let mut out = TorusElement::zero(backend);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

/// The monomial A_{i,r} = Y_{i,r-1} Y_{i,r+1} ∏_{j∼i, C_ji = -1} Y_{j,r}^{-1}.
pub fn a_monomial_y(data: &CartanData, i: usize, r: i64) -> YMonomial {
    assert!(data.ty.is_simply_laced(), "A-monomials implemented for ADE");
    let mut pairs = vec![(YVar::new(i, r - 1), 1), (YVar::new(i, r + 1), 1)];
    for j in data.neighbors(i) {
        pairs.push((YVar::new(j, r), -1));
    }
    YMonomial::from_pairs(&pairs)
}

pub fn a_monomial(backend: &Arc<Backend>, i: usize, r: i64) -> TorusElement {
    let data = backend.cartan_data().expect("A-monomials need a Cartan backend");
    TorusElement::monomial(backend, a_monomial_y(data, i, r))
}

/// Nakajima's partial order: `small` ≤ `big` iff big·small^{-1} is a product
/// of A_{i,r} with nonnegative exponents.
pub fn nakajima_leq(backend: &Arc<Backend>, small: &YMonomial, big: &YMonomial) -> bool {
    let data = match backend.cartan_data() {
        Some(d) => d.clone(),
        None => return false,
    };
    let mut diff = big.mul(&small.inv());
    // Peel A-monomials from the top: the greatest variable (i, r_max) can
    // only come from A_{i, r_max - 1}.
    loop {
        let (v, e) = match diff.exps.iter().next_back() {
            None => return true,
            Some((&v, &e)) => (v, e),
        };
        if e < 0 {
            return false;
        }
        let a = a_monomial_y(&data, v.i, v.r - 1);
        diff = diff.mul(&a.pow(-e));
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mon = if m.is_one() {
                String::new()
            } else {
                m.iter()
                    .map(|(v, e)| {
                        let name = self.backend.render_var(v);
                        if e == 1 {
                            name
                        } else {
                            format!("{}^{}", name, e)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let coef = format!("{}", c);
            let coef_wrapped = if c.num_terms() > 1 || coef.starts_with('-') {
                format!("({})", coef)
            } else {
                coef.clone()
            };
            if mon.is_empty() {
                write!(f, "{}", coef_wrapped)?;
            } else if c.is_one() {
                write!(f, "{}", mon)?;
            } else {
                write!(f, "{} * {}", coef_wrapped, mon)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::DynkinType;

    fn sl2() -> Arc<Backend> {
        Backend::cartan(CartanData::new(DynkinType::A(1)), QuotientContext::None)
    }

    fn sl3() -> Arc<Backend> {
        Backend::cartan(CartanData::new(DynkinType::A(2)), QuotientContext::None)
    }

    #[test]
    fn same_shift_commutes_trivially() {
        let b = sl3();
        let y1 = TorusElement::var(&b, 1, 0);
        let y2 = TorusElement::var(&b, 2, 0);
        let p = y1.star(&y2);
        assert_eq!(p, TorusElement::monomial(&b, YMonomial::var(1, 0).mul(&YMonomial::var(2, 0))));
        assert_eq!(y1.commutator_factor(&y2).unwrap(), ParamMonomial::one());
    }

    #[test]
    fn y_commutator_matches_n_sequence() {
        let b = sl3();
        let data = b.cartan_data().unwrap().clone();
        let y1 = TorusElement::var(&b, 1, 0);
        let y2 = TorusElement::var(&b, 2, 1);
        let c = y1.commutator_factor(&y2).unwrap();
        assert_eq!(c, ParamMonomial(data.n_sequence(1, 0, 2, 1)));
        let cinv = y2.commutator_factor(&y1).unwrap();
        assert!(c.mul(&cinv).is_one());
    }

    #[test]
    fn star_unit_and_associativity() {
        let b = sl3();
        let one = TorusElement::one(&b);
        let x = TorusElement::var(&b, 1, 0);
        assert_eq!(x.star(&one), x);
        assert_eq!(one.star(&x), x);
        let els = [
            TorusElement::var(&b, 1, 0),
            TorusElement::var(&b, 2, 1).add(&TorusElement::var(&b, 1, 2)),
            TorusElement::monomial(&b, YMonomial::from_pairs(&[(YVar::new(1, 2), -1), (YVar::new(2, 3), 2)])),
        ];
        for a in &els {
            for bb in &els {
                for c in &els {
                    assert_eq!(a.star(bb).star(c), a.star(&bb.star(c)));
                }
            }
        }
    }

    #[test]
    fn bar_involution_and_antimultiplicativity() {
        let b = sl3();
        let x = TorusElement::var(&b, 1, 0);
        let y = TorusElement::var(&b, 2, 1);
        // Commutative monomials are bar-invariant.
        let m = TorusElement::monomial(&b, YMonomial::var(1, 0).mul(&YMonomial::var(2, 1)));
        assert!(m.is_bar_invariant());
        assert_eq!(x.star(&y).bar(), y.bar().star(&x.bar()));
        let z = x.add(&y.scale_monomial(&ParamMonomial::gen_doubled(0, 1)));
        assert_eq!(z.bar().bar(), z);
    }

    #[test]
    fn a_monomials() {
        let b2 = sl2();
        let a = a_monomial(&b2, 1, 1);
        assert_eq!(
            a,
            TorusElement::monomial(&b2, YMonomial::var(1, 0).mul(&YMonomial::var(1, 2)))
        );
        let b3 = sl3();
        let a = a_monomial(&b3, 1, 1);
        let expect = YMonomial::from_pairs(&[
            (YVar::new(1, 0), 1),
            (YVar::new(1, 2), 1),
            (YVar::new(2, 1), -1),
        ]);
        assert_eq!(a, TorusElement::monomial(&b3, expect));
    }

    #[test]
    fn nakajima_order() {
        let b = sl3();
        let m = YMonomial::from_pairs(&[(YVar::new(1, 2), -1), (YVar::new(2, 1), 1)]);
        let top = YMonomial::var(1, 0);
        assert!(nakajima_leq(&b, &m, &top));
        assert!(!nakajima_leq(&b, &top, &m));
        assert!(nakajima_leq(&b, &top, &top));
    }

    #[test]
    fn division_round_trip() {
        let b = sl3();
        let a = TorusElement::var(&b, 1, 0).add(&TorusElement::var(&b, 2, 1));
        let d = TorusElement::var(&b, 1, 2).add(&TorusElement::monomial(
            &b,
            YMonomial::from_pairs(&[(YVar::new(2, 3), -1)]),
        ));
        let p = a.star(&d);
        assert_eq!(p.exact_divide_right(&d).unwrap(), a);
        let p2 = d.star(&a);
        assert_eq!(p2.exact_divide_left(&d).unwrap(), a);
        let x = TorusElement::var(&b, 1, 0);
        assert_eq!(x.exact_divide_right(&x).unwrap(), TorusElement::one(&b));
    }

    #[test]
    fn specialization_is_multiplicative() {
        let b = sl3();
        let x = TorusElement::var(&b, 1, 0).add(&TorusElement::var(&b, 1, 2));
        let y = TorusElement::var(&b, 2, 1).add(&TorusElement::one(&b));
        let lhs = x.star(&y).specialize_all_one();
        // Commutative product of shadows.
        let mut rhs: BTreeMap<YMonomial, i64> = BTreeMap::new();
        for (m1, c1) in x.specialize_all_one() {
            for (m2, c2) in y.specialize_all_one() {
                *rhs.entry(m1.mul(&m2)).or_insert(0) += c1 * c2;
            }
        }
        rhs.retain(|_, v| *v != 0);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation() {
        let b = sl3();
        let x = TorusElement::var(&b, 1, 0).add(&TorusElement::var(&b, 2, 5));
        let allowed: BTreeSet<YVar> = [YVar::new(1, 0)].into_iter().collect();
        let t = x.truncate(&allowed);
        assert_eq!(t, TorusElement::var(&b, 1, 0));
        assert_eq!(t.truncate(&allowed), t);
    }

    #[test]
    fn finite_backend_example_pairing() {
        // Three generators, two parameters.
        let l1 = vec![vec![0, 1, -1], vec![-1, 0, 0], vec![1, 0, 0]];
        let l2 = vec![vec![0, 0, -1], vec![0, 0, 0], vec![1, 0, 0]];
        let b = Backend::finite(3, vec![(1, l1), (2, l2)], QuotientContext::None);
        let x1 = TorusElement::var(&b, 1, 0);
        let x2 = TorusElement::var(&b, 2, 0);
        let c = x1.commutator_factor(&x2).unwrap();
        // X1 ⋆ X2 = t1^{Λ1(1,2)} t2^{Λ2(1,2)} X2 ⋆ X1 = t1 · X2 ⋆ X1.
        assert_eq!(c, ParamMonomial::gen_doubled(1, 2));
    }
}
