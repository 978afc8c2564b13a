//! Toroidal seeds: compatibility checking, mutation, exchange-graph
//! enumeration, Laurent/positivity reports, and classical specialization.

pub mod classical;
pub mod quiver;

use crate::params::{ParamLaurent, ParamMonomial};
use crate::torus::{Backend, TorusElement, TorusError, YMonomial};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_MAX_NODES: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("seed variables do not pairwise quasi-commute")]
    NotQuasiCommuting,
    #[error("seed fails the compatibility condition")]
    Incompatible,
    #[error("mutation exchange relation is not exactly divisible")]
    NotDivisible,
    #[error("a required square root of a parameter monomial does not exist")]
    OddExponent,
    #[error("exchange graph truncated at {0} nodes")]
    Truncated(usize),
    #[error("direction {0} is not exchangeable")]
    NotExchangeable(usize),
}

impl From<TorusError> for ClusterError {
    fn from(e: TorusError) -> Self {
        match e {
            TorusError::NotQuasiCommuting => ClusterError::NotQuasiCommuting,
            TorusError::OddExponent => ClusterError::OddExponent,
            _ => ClusterError::NotDivisible,
        }
    }
}

/// A toroidal seed: n ordered cluster variables (first m exchangeable), the
/// n×m exchange matrix B, and the pairwise quasi-commutation factors
/// Q[i][j] = commutator_factor(Y_i, Y_j).
#[derive(Debug, Clone)]
pub struct ToroidalSeed {
    pub backend: Arc<Backend>,
    pub vars: Vec<TorusElement>,
    pub b: Vec<Vec<i64>>,
    pub m: usize,
    pub q: Vec<Vec<ParamMonomial>>,
}

impl ToroidalSeed {
    pub fn new(
        backend: Arc<Backend>,
        vars: Vec<TorusElement>,
        b: Vec<Vec<i64>>,
        m: usize,
    ) -> Result<Self, ClusterError> {
        let n = vars.len();
        assert_eq!(b.len(), n, "B must have one row per variable");
        for row in &b {
            assert_eq!(row.len(), m, "B must have one column per exchangeable variable");
        }
        assert!(m <= n);
        let q = compute_q(&vars)?;
        Ok(ToroidalSeed {
            backend,
            vars,
            b,
            m,
            q,
        })
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    /// The commutative monomial of current seed variables with the given
    /// exponents (ordered star product corrected by half powers of Q).
    pub fn seed_monomial(&self, exps: &[i64]) -> Result<TorusElement, ClusterError> {
        assert_eq!(exps.len(), self.n());
        let mut prod = TorusElement::one(&self.backend);
        for (i, &e) in exps.iter().enumerate() {
            if e != 0 {
                prod = prod.star(&self.vars[i].star_pow(e));
            }
        }
        let mut corr = ParamMonomial::one();
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if exps[i] != 0 && exps[j] != 0 {
                    corr = corr.mul(&self.q[i][j].pow(exps[i] * exps[j]));
                }
            }
        }
        let corr = corr.inv().sqrt().map_err(|_| ClusterError::OddExponent)?;
        Ok(prod.scale_monomial(&corr))
    }

    /// The coefficients (u, v) of the exchange relation
    /// Y_k' ⋆ Y_k = u·M₊ + v·M₋, defined by u² Y_k ⋆ M₊ = M₊ ⋆ Y_k and
    /// v² Y_k ⋆ M₋ = M₋ ⋆ Y_k.
    pub fn mutation_uv(&self, k: usize) -> Result<(ParamMonomial, ParamMonomial), ClusterError> {
        if k >= self.m {
            return Err(ClusterError::NotExchangeable(k + 1));
        }
        let mut cu = ParamMonomial::one();
        let mut cv = ParamMonomial::one();
        for i in 0..self.n() {
            let bik = self.b[i][k];
            if bik > 0 {
                cu = cu.mul(&self.q[i][k].pow(bik));
            } else if bik < 0 {
                cv = cv.mul(&self.q[i][k].pow(-bik));
            }
        }
        let u = cu.sqrt().map_err(|_| ClusterError::OddExponent)?;
        let v = cv.sqrt().map_err(|_| ClusterError::OddExponent)?;
        Ok((u, v))
    }

    /// The two exchange summands (u·M₊, v·M₋) for direction k.
    pub fn exchange_terms(&self, k: usize) -> Result<(TorusElement, TorusElement), ClusterError> {
        let (u, v) = self.mutation_uv(k)?;
        let mut eplus = vec![0i64; self.n()];
        let mut eminus = vec![0i64; self.n()];
        for i in 0..self.n() {
            let bik = self.b[i][k];
            if bik > 0 {
                eplus[i] = bik;
            } else if bik < 0 {
                eminus[i] = -bik;
            }
        }
        let mplus = self.seed_monomial(&eplus)?;
        let mminus = self.seed_monomial(&eminus)?;
        Ok((mplus.scale_monomial(&u), mminus.scale_monomial(&v)))
    }

    /// The exchange right-hand side u·M₊ + v·M₋ for direction k.
    pub fn exchange_rhs(&self, k: usize) -> Result<TorusElement, ClusterError> {
        let (p, m) = self.exchange_terms(k)?;
        Ok(p.add(&m))
    }

    pub fn mutate(&self, k: usize) -> Result<ToroidalSeed, ClusterError> {
        let rhs = self.exchange_rhs(k)?;
        let newvar = rhs.exact_divide_right(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = newvar;
        let b = mutate_b(&self.b, k);
        let q = mutate_q(&self.q, &self.b, k);
        Ok(ToroidalSeed {
            backend: self.backend.clone(),
            vars,
            b,
            m: self.m,
            q,
        })
    }

    pub fn check_compatibility(&self) -> CompatibilityReport {
        let tracked = self.tracked_params();
        let mut off_diagonal_trivial = true;
        let mut diagonals: Vec<(i64, Vec<i64>)> =
            tracked.iter().map(|&a| (a, Vec::new())).collect();
        for k in 0..self.m {
            // Row k of B^T Λ_a, realized as the monomial ∏_i Q[i][j]^{B_ik}.
            for j in 0..self.n() {
                let mut mono = ParamMonomial::one();
                for i in 0..self.n() {
                    let bik = self.b[i][k];
                    if bik != 0 {
                        mono = mono.mul(&self.q[i][j].pow(bik));
                    }
                }
                if j == k {
                    for (a, diag) in diagonals.iter_mut() {
                        let d = mono.doubled_exp(*a);
                        debug_assert!(d % 2 == 0);
                        diag.push(d / 2);
                    }
                    // Anything outside the tracked parameters must vanish.
                    let projected = mono.project(&tracked);
                    if !mono.mul(&projected.inv()).is_one() {
                        off_diagonal_trivial = false;
                    }
                } else if !mono.is_one() {
                    off_diagonal_trivial = false;
                }
            }
        }
        let constant_sign = diagonals.iter().all(|(_, diag)| {
            diag.iter().all(|&d| d >= 0) || diag.iter().all(|&d| d <= 0)
        });
        CompatibilityReport {
            diagonals,
            off_diagonal_trivial,
            constant_sign,
        }
    }

    pub fn is_compatible(&self) -> bool {
        self.check_compatibility().is_compatible()
    }

    /// The parameter indices whose Λ_a matrices the backend tracks.
    pub fn tracked_params(&self) -> Vec<i64> {
        match &*self.backend {
            Backend::Finite { lambdas, .. } => lambdas.iter().map(|&(a, _)| a).collect(),
            Backend::Cartan { project, .. } => match project {
                Some(keep) => keep.clone(),
                None => {
                    let mut s = BTreeSet::new();
                    for row in &self.q {
                        for mono in row {
                            if let Some(support) = mono.0.finite_support() {
                                for (a, _) in support {
                                    s.insert(a);
                                }
                            }
                        }
                    }
                    s.into_iter().collect()
                }
            },
        }
    }

    /// Canonical key for exchange-graph dedup: exchangeable variables sorted
    /// by rendering, B and Q permuted accordingly, frozen order fixed.
    pub fn canonical_key(&self) -> String {
        let mut order: Vec<usize> = (0..self.m).collect();
        let renders: Vec<String> = self.vars.iter().map(|v| v.to_string()).collect();
        order.sort_by(|&i, &j| renders[i].cmp(&renders[j]));
        let full: Vec<usize> = order.iter().copied().chain(self.m..self.n()).collect();
        let mut parts = Vec::new();
        for &i in &full {
            parts.push(renders[i].clone());
        }
        for &i in &full {
            let row: Vec<String> = order.iter().map(|&k| self.b[i][k].to_string()).collect();
            parts.push(row.join(","));
        }
        for &i in &full {
            let row: Vec<String> = full.iter().map(|&j| self.q[i][j].to_string()).collect();
            parts.push(row.join(","));
        }
        parts.join(";")
    }

    pub fn principal_part(&self) -> Vec<Vec<i64>> {
        (0..self.m)
            .map(|i| (0..self.m).map(|j| self.b[i][j]).collect())
            .collect()
    }

    /// The shadow seed at all t_a = 1, with variables expressed over the
    /// Y-variable index of the current seed.
    pub fn classical_specialize(&self) -> classical::ClassicalSeed {
        let index = classical::shadow_index(&self.vars);
        let vars = self
            .vars
            .iter()
            .map(|v| classical::specialize_element(v, &index))
            .collect();
        classical::ClassicalSeed {
            vars,
            b: self.b.clone(),
            m: self.m,
        }
    }
}

fn compute_q(vars: &[TorusElement]) -> Result<Vec<Vec<ParamMonomial>>, ClusterError> {
    let n = vars.len();
    let mut q = vec![vec![ParamMonomial::one(); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let c = vars[i]
                .commutator_factor(&vars[j])
                .map_err(|_| ClusterError::NotQuasiCommuting)?;
            q[j][i] = c.inv();
            q[i][j] = c;
        }
    }
    Ok(q)
}

/// Standard matrix mutation of the n×m exchange matrix in direction k.
pub fn mutate_b(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let m = b[0].len();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for j in 0..m {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else if b[i][k] > 0 && b[k][j] > 0 {
                b[i][j] + b[i][k] * b[k][j]
            } else if b[i][k] < 0 && b[k][j] < 0 {
                b[i][j] - b[i][k] * b[k][j]
            } else {
                b[i][j]
            };
        }
    }
    out
}

/// E_k from the exchange matrix: identity off column k, −1 at (k,k), and
/// max(0, −B_{i,k}) at (i,k) for i ≠ k.
pub fn e_matrix(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut e = vec![vec![0i64; n]; n];
    for i in 0..n {
        e[i][i] = 1;
    }
    for i in 0..n {
        e[i][k] = if i == k { -1 } else { 0.max(-b[i][k]) };
    }
    e
}

/// Mutation of the quasi-commutation factors: Λ' = E_k^T Λ E_k applied
/// multiplicatively to Q.
pub fn mutate_q(q: &[Vec<ParamMonomial>], b: &[Vec<i64>], k: usize) -> Vec<Vec<ParamMonomial>> {
    let n = q.len();
    let e = e_matrix(b, k);
    let mut out = vec![vec![ParamMonomial::one(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut mono = ParamMonomial::one();
            for a in 0..n {
                if e[a][i] == 0 {
                    continue;
                }
                for c in 0..n {
                    let f = e[a][i] * e[c][j];
                    if f != 0 {
                        mono = mono.mul(&q[a][c].pow(f));
                    }
                }
            }
            out[i][j] = mono;
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CompatibilityReport {
    /// Per tracked parameter a: the diagonal entries (B^T Λ_a)_{kk}.
    pub diagonals: Vec<(i64, Vec<i64>)>,
    pub off_diagonal_trivial: bool,
    pub constant_sign: bool,
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        self.off_diagonal_trivial && self.constant_sign
    }
}

#[derive(Debug)]
pub struct ExchangeGraph {
    pub seeds: Vec<ToroidalSeed>,
    pub edges: Vec<(usize, usize)>,
    pub finite: bool,
}

impl ExchangeGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph exchange {\n");
        for (i, _) in self.seeds.iter().enumerate() {
            out.push_str(&format!("  s{};\n", i));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  s{} -- s{};\n", a, b));
        }
        out.push_str("}\n");
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "nodes={} edges={} finite={}",
            self.seeds.len(),
            self.edges.len(),
            self.finite
        )
    }
}

/// BFS over all exchangeable mutations, deduplicating by canonical key.
pub fn exchange_graph(seed: &ToroidalSeed, max_nodes: usize) -> Result<ExchangeGraph, ClusterError> {
    let mut seeds = vec![seed.clone()];
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    index.insert(seed.canonical_key(), 0);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut finite = true;
    while let Some(cur) = queue.pop_front() {
        for k in 0..seeds[cur].m {
            let next = seeds[cur].mutate(k)?;
            let key = next.canonical_key();
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    if seeds.len() >= max_nodes {
                        finite = false;
                        continue;
                    }
                    let id = seeds.len();
                    seeds.push(next);
                    index.insert(key, id);
                    queue.push_back(id);
                    id
                }
            };
            if id != cur {
                edges.insert((cur.min(id), cur.max(id)));
            }
        }
    }
    Ok(ExchangeGraph {
        seeds,
        edges: edges.into_iter().collect(),
        finite,
    })
}

/// Laurent-expansion report for a cluster variable in initial coordinates.
pub fn laurent_report(var: &TorusElement) -> (Vec<(YMonomial, ParamLaurent)>, bool) {
    let terms: Vec<(YMonomial, ParamLaurent)> = var
        .terms()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let positive = terms.iter().all(|(_, c)| c.is_positive());
    (terms, positive)
}

/// The three-variable, two-parameter example seed: one exchangeable variable
/// X₁ and frozen X₂, X₃ in a rank-3 finite torus with parameters t₁, t₂.
pub fn example_seed() -> ToroidalSeed {
    let l1 = vec![vec![0, 1, -1], vec![-1, 0, 0], vec![1, 0, 0]];
    let l2 = vec![vec![0, 0, -1], vec![0, 0, 0], vec![1, 0, 0]];
    let backend = Backend::finite(
        3,
        vec![(1, l1), (2, l2)],
        crate::params::QuotientContext::None,
    );
    let vars = (1..=3).map(|i| TorusElement::var(&backend, i, 0)).collect();
    let b = vec![vec![0], vec![-1], vec![1]];
    ToroidalSeed::new(backend, vars, b, 1).unwrap()
}
