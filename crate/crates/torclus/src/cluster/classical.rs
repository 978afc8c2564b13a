//! Commutative cluster-algebra engine used as an independent oracle for the
//! toroidal machinery: Laurent polynomials over integer exponent vectors,
//! classical exchange relations, and a classical exchange-graph BFS.

use crate::torus::{TorusElement, YVar};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A Laurent polynomial in n commuting variables: exponent vector → integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CPoly {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        CPoly::monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        CPoly::monomial(e)
    }

    pub fn monomial(e: Vec<i64>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(e, 1);
        CPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> CPoly {
        let n = self.terms.keys().next().map(|e| e.len()).unwrap_or(0);
        let mut out = CPoly::one(n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact division by lead-term elimination under the lexicographic order.
    pub fn try_div(&self, d: &CPoly) -> Option<CPoly> {
        if d.is_zero() {
            return None;
        }
        let (dm, dc) = d.terms.iter().next_back().map(|(e, &c)| (e.clone(), c))?;
        let mut rem = self.clone();
        let mut q = CPoly::zero();
        let mut steps = 0usize;
        while !rem.is_zero() {
            steps += 1;
            if steps > 100_000 {
                return None;
            }
            let (rm, rc) = rem.terms.iter().next_back().map(|(e, &c)| (e.clone(), c))?;
            if rc % dc != 0 {
                return None;
            }
            let qm: Vec<i64> = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = rc / dc;
            let mut qterm = CPoly::zero();
            qterm.add_term(qm, qc);
            rem = rem.sub(&qterm.mul(d));
            if let Some((nm, _)) = rem.terms.iter().next_back() {
                if *nm >= rm {
                    return None;
                }
            }
            q = q.add(&qterm);
        }
        Some(q)
    }
}

/// A classical seed: variables as Laurent polynomials, plus the exchange
/// matrix (n×m) with the first m variables exchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalSeed {
    pub vars: Vec<CPoly>,
    pub b: Vec<Vec<i64>>,
    pub m: usize,
}

impl ClassicalSeed {
    /// The initial formal seed: variable i is the i-th coordinate monomial.
    pub fn initial(b: Vec<Vec<i64>>, m: usize) -> Self {
        let n = b.len();
        let vars = (0..n).map(|i| CPoly::var(n, i)).collect();
        ClassicalSeed { vars, b, m }
    }

    pub fn mutate(&self, k: usize) -> Option<ClassicalSeed> {
        let n = self.vars.len();
        let ncols = self
            .vars
            .iter()
            .flat_map(|v| v.terms.keys())
            .next()
            .map(|e| e.len())
            .unwrap_or(n);
        let mut mplus = CPoly::one(ncols);
        let mut mminus = CPoly::one(ncols);
        for i in 0..n {
            let bik = self.b[i][k];
            if bik > 0 {
                mplus = mplus.mul(&self.vars[i].pow(bik as u32));
            } else if bik < 0 {
                mminus = mminus.mul(&self.vars[i].pow((-bik) as u32));
            }
        }
        let rhs = mplus.add(&mminus);
        let newvar = rhs.try_div(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = newvar;
        Some(ClassicalSeed {
            vars,
            b: super::mutate_b(&self.b, k),
            m: self.m,
        })
    }

    fn canonical_key(&self) -> String {
        let mut ex: Vec<&CPoly> = self.vars[..self.m].iter().collect();
        ex.sort();
        let frozen = &self.vars[self.m..];
        format!("{:?}|{:?}", ex, frozen)
    }
}

/// BFS over classical mutations; returns the number of distinct clusters
/// (seeds up to permutation of exchangeable variables) or None if truncated
/// or a division fails.
pub fn classical_graph_nodes(seed: &ClassicalSeed, max_nodes: usize) -> Option<usize> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    seen.insert(seed.canonical_key());
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(cur) = queue.pop_front() {
        for k in 0..cur.m {
            let next = cur.mutate(k)?;
            let key = next.canonical_key();
            if seen.insert(key) {
                if seen.len() > max_nodes {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(seen.len())
}

/// The sorted union of Y-variables appearing in the given elements, used as
/// the coordinate index for classical shadows.
pub fn shadow_index(els: &[TorusElement]) -> Vec<YVar> {
    let mut s: BTreeSet<YVar> = BTreeSet::new();
    for el in els {
        for (m, _) in el.terms() {
            s.extend(m.variables());
        }
    }
    s.into_iter().collect()
}

/// Specialize a torus element at all t_a = 1 as a Laurent polynomial over the
/// given Y-variable index.
pub fn specialize_element(el: &TorusElement, index: &[YVar]) -> CPoly {
    let mut out = CPoly::zero();
    for (m, c) in el.specialize_all_one() {
        let mut e = vec![0i64; index.len()];
        for (v, k) in m.iter() {
            let pos = index
                .binary_search(&v)
                .expect("Y-variable outside the shadow index");
            e[pos] = k;
        }
        out.add_term(e, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_a2_graph_has_five_nodes() {
        let seed = ClassicalSeed::initial(vec![vec![0, 1], vec![-1, 0]], 2);
        assert_eq!(classical_graph_nodes(&seed, 10_000), Some(5));
    }

    #[test]
    fn classical_mutation_involutive() {
        let seed = ClassicalSeed::initial(vec![vec![0, 1], vec![-1, 0]], 2);
        let s2 = seed.mutate(0).unwrap().mutate(0).unwrap();
        assert_eq!(s2, seed);
    }

    #[test]
    fn classical_a3_and_d4_counts() {
        // Linear A3 orientation: 14 clusters; D4: 50 clusters.
        let a3 = ClassicalSeed::initial(
            vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]],
            3,
        );
        assert_eq!(classical_graph_nodes(&a3, 10_000), Some(14));
        let d4 = ClassicalSeed::initial(
            vec![
                vec![0, 1, 1, 1],
                vec![-1, 0, 0, 0],
                vec![-1, 0, 0, 0],
                vec![-1, 0, 0, 0],
            ],
            4,
        );
        assert_eq!(classical_graph_nodes(&d4, 10_000), Some(50));
    }

    #[test]
    fn division_round_trip() {
        let a = CPoly::var(2, 0).add(&CPoly::var(2, 1));
        let b = CPoly::monomial(vec![1, -2]).add(&CPoly::one(2));
        let p = a.mul(&b);
        assert_eq!(p.try_div(&b).unwrap(), a);
    }
}
