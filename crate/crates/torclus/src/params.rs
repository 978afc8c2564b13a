//! Exact arithmetic in the parameter coefficient ring Z[t_a^{±1/2} | a ∈ Z].
//!
//! Exponent vectors are stored *doubled* (the stored integer is 2·e_a) so that
//! half-integer powers never require rational arithmetic.  A sequence of
//! exponents may carry an eventually-periodic infinite tail, which is how the
//! infinite products ∏_a t_a^{N_a} arising from quasi-commutation exponents
//! are represented exactly.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("specialization diverges: infinite tail meets infinitely many nonzero weights")]
    DivergentSpecialization,
    #[error("exponent vector is not divisible by 2 where required")]
    OddExponent,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// An integer-indexed exponent sequence with finite support below a point and
/// an optional eventually-periodic tail above it.  Values are doubled
/// exponents.  The struct is kept in a canonical form so that derived
/// equality, ordering and hashing agree with semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExpSeq {
    a_min: i64,
    explicit: Vec<i64>,
    tail: Option<Vec<i64>>,
}

impl ExpSeq {
    pub fn zero() -> Self {
        ExpSeq::default()
    }

    /// Build from (index, doubled value) pairs; later pairs for the same index accumulate.
    pub fn from_doubled_pairs(pairs: &[(i64, i64)]) -> Self {
        if pairs.is_empty() {
            return ExpSeq::zero();
        }
        let a_min = pairs.iter().map(|p| p.0).min().unwrap();
        let a_max = pairs.iter().map(|p| p.0).max().unwrap();
        let mut explicit = vec![0i64; (a_max - a_min + 1) as usize];
        for &(a, d) in pairs {
            explicit[(a - a_min) as usize] += d;
        }
        ExpSeq {
            a_min,
            explicit,
            tail: None,
        }
        .canonicalized()
    }

    /// Build with an explicit range starting at `a_min` followed by an
    /// infinite periodic tail with the given doubled pattern.
    pub fn with_tail(a_min: i64, explicit: Vec<i64>, pattern: Vec<i64>) -> Self {
        assert!(!pattern.is_empty(), "tail pattern must be nonempty");
        ExpSeq {
            a_min,
            explicit,
            tail: Some(pattern),
        }
        .canonicalized()
    }

    pub fn is_zero(&self) -> bool {
        self.explicit.is_empty() && self.tail.is_none()
    }

    pub fn has_tail(&self) -> bool {
        self.tail.is_some()
    }

    pub fn a_min(&self) -> i64 {
        self.a_min
    }

    /// Index of the first tail position (one past the explicit range).
    pub fn a_tail(&self) -> i64 {
        self.a_min + self.explicit.len() as i64
    }

    pub fn tail_pattern(&self) -> Option<&[i64]> {
        self.tail.as_deref()
    }

    /// Doubled value at index `a`.
    pub fn get_doubled(&self, a: i64) -> i64 {
        if a < self.a_min {
            return 0;
        }
        let idx = a - self.a_min;
        if (idx as usize) < self.explicit.len() {
            return self.explicit[idx as usize];
        }
        match &self.tail {
            None => 0,
            Some(p) => {
                let off = (a - self.a_tail()).rem_euclid(p.len() as i64);
                p[off as usize]
            }
        }
    }

    /// Support of a finite sequence as (index, doubled value) pairs; None if a
    /// (nonzero-pattern) tail is present.
    pub fn finite_support(&self) -> Option<Vec<(i64, i64)>> {
        if self.tail.is_some() {
            return None;
        }
        Some(
            self.explicit
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(k, &d)| (self.a_min + k as i64, d))
                .collect(),
        )
    }

    fn canonicalized(mut self) -> Self {
        // Drop an all-zero tail.
        if let Some(p) = &self.tail {
            if p.iter().all(|&x| x == 0) {
                self.tail = None;
            }
        }
        // Reduce the tail pattern to its minimal period.
        if let Some(p) = &mut self.tail {
            let n = p.len();
            for d in 1..n {
                if n % d == 0 && (0..n).all(|k| p[k] == p[k % d]) {
                    p.truncate(d);
                    break;
                }
            }
        }
        // Absorb trailing explicit entries that already match the tail,
        // minimizing a_tail; each absorbed entry rotates the pattern.
        if let Some(p) = &mut self.tail {
            while let Some(&last) = self.explicit.last() {
                if last == *p.last().unwrap() {
                    self.explicit.pop();
                    p.rotate_right(1);
                } else {
                    break;
                }
            }
        } else {
            while self.explicit.last() == Some(&0) {
                self.explicit.pop();
            }
        }
        // Trim leading zeros.
        let lead = self.explicit.iter().take_while(|&&d| d == 0).count();
        if lead > 0 {
            self.explicit.drain(..lead);
            self.a_min += lead as i64;
        }
        // Pure tail starting with zeros: advance a_min past them.
        if self.explicit.is_empty() {
            if let Some(p) = &mut self.tail {
                while p[0] == 0 {
                    p.rotate_left(1);
                    self.a_min += 1;
                }
            }
        }
        if self.explicit.is_empty() && self.tail.is_none() {
            self.a_min = 0;
        }
        self
    }

    pub fn add(&self, other: &ExpSeq) -> ExpSeq {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a_min = self.a_min.min(other.a_min);
        let p1 = self.tail.as_ref().map_or(1, |p| p.len() as i64);
        let p2 = other.tail.as_ref().map_or(1, |p| p.len() as i64);
        let a_tail = self.a_tail().max(other.a_tail());
        let tail = if self.tail.is_none() && other.tail.is_none() {
            None
        } else {
            let period = lcm(p1, p2);
            Some(
                (0..period)
                    .map(|k| self.get_doubled(a_tail + k) + other.get_doubled(a_tail + k))
                    .collect::<Vec<_>>(),
            )
        };
        let explicit = (a_min..a_tail)
            .map(|a| self.get_doubled(a) + other.get_doubled(a))
            .collect();
        ExpSeq {
            a_min,
            explicit,
            tail,
        }
        .canonicalized()
    }

    pub fn neg(&self) -> ExpSeq {
        self.scale(-1)
    }

    /// Translation-invariant total order: lexicographic by ascending index on
    /// the doubled values, so a < b implies a+c < b+c.  (The derived Ord is
    /// structural and not translation-invariant.)
    pub fn lex_cmp(&self, other: &ExpSeq) -> std::cmp::Ordering {
        let start = self.a_min.min(other.a_min);
        let p1 = self.tail.as_ref().map_or(1, |p| p.len() as i64);
        let p2 = other.tail.as_ref().map_or(1, |p| p.len() as i64);
        // Beyond both explicit ranges the sequences are periodic with period
        // lcm(p1, p2); a full window there decides equality.
        let end = self.a_tail().max(other.a_tail()) + lcm(p1, p2);
        for a in start..end {
            let c = self.get_doubled(a).cmp(&other.get_doubled(a));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Multiply every doubled value by `k` (monomial power).
    pub fn scale(&self, k: i64) -> ExpSeq {
        if k == 0 {
            return ExpSeq::zero();
        }
        ExpSeq {
            a_min: self.a_min,
            explicit: self.explicit.iter().map(|d| d * k).collect(),
            tail: self.tail.as_ref().map(|p| p.iter().map(|d| d * k).collect()),
        }
        .canonicalized()
    }

    /// Halve every doubled value (taking a square root of the monomial).
    pub fn half(&self) -> Result<ExpSeq, ParamError> {
        let halve = |d: &i64| -> Result<i64, ParamError> {
            if d % 2 == 0 {
                Ok(d / 2)
            } else {
                Err(ParamError::OddExponent)
            }
        };
        Ok(ExpSeq {
            a_min: self.a_min,
            explicit: self.explicit.iter().map(halve).collect::<Result<_, _>>()?,
            tail: match &self.tail {
                None => None,
                Some(p) => Some(p.iter().map(halve).collect::<Result<_, _>>()?),
            },
        }
        .canonicalized())
    }
}

/// A monomial ∏_a t_a^{e_a} in the parameter group, exponents possibly
/// half-integral and with eventually-periodic infinite support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParamMonomial(pub ExpSeq);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(ExpSeq::zero())
    }

    /// Translation-invariant total order; see ExpSeq::lex_cmp.
    pub fn div_cmp(&self, other: &ParamMonomial) -> std::cmp::Ordering {
        self.0.lex_cmp(&other.0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    /// t_a^{d/2} for a doubled exponent d.
    pub fn gen_doubled(a: i64, d: i64) -> Self {
        ParamMonomial(ExpSeq::from_doubled_pairs(&[(a, d)]))
    }

    /// ∏ t_{a_k}^{d_k/2} from (index, doubled exponent) pairs.
    pub fn from_doubled_pairs(pairs: &[(i64, i64)]) -> Self {
        ParamMonomial(ExpSeq::from_doubled_pairs(pairs))
    }

    pub fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        ParamMonomial(self.0.add(&other.0))
    }

    pub fn inv(&self) -> ParamMonomial {
        ParamMonomial(self.0.neg())
    }

    pub fn pow(&self, k: i64) -> ParamMonomial {
        ParamMonomial(self.0.scale(k))
    }

    /// Square root; fails on odd doubled exponents.
    pub fn sqrt(&self) -> Result<ParamMonomial, ParamError> {
        Ok(ParamMonomial(self.0.half()?))
    }

    pub fn bar(&self) -> ParamMonomial {
        self.inv()
    }

    /// Zero out all exponents outside `keep` (the tail is dropped).
    pub fn project(&self, keep: &[i64]) -> ParamMonomial {
        let pairs: Vec<(i64, i64)> = keep
            .iter()
            .map(|&a| (a, self.0.get_doubled(a)))
            .filter(|&(_, d)| d != 0)
            .collect();
        ParamMonomial(ExpSeq::from_doubled_pairs(&pairs))
    }

    /// Doubled exponent of t_a in this monomial.
    pub fn doubled_exp(&self, a: i64) -> i64 {
        self.0.get_doubled(a)
    }

    /// Specialize to a single parameter t with t_a ↦ t^{weights(a)}
    /// (default weight applies off the explicit map).  Returns the doubled
    /// exponent c with result t^{c/2}.
    pub fn specialize(&self, weights: &BTreeMap<i64, i64>, default: i64) -> Result<i64, ParamError> {
        if default != 0 && self.0.has_tail() {
            return Err(ParamError::DivergentSpecialization);
        }
        let mut c = 0i64;
        // Explicit range contributions.
        for (k, &d) in self.0.explicit.iter().enumerate() {
            let a = self.0.a_min + k as i64;
            c += d * weights.get(&a).copied().unwrap_or(default);
        }
        // Tail contributions: only explicitly weighted indices can contribute
        // (default is zero when a tail is present).
        if self.0.has_tail() {
            for (&a, &w) in weights {
                if a >= self.0.a_tail() {
                    c += w * self.0.get_doubled(a);
                }
            }
        }
        Ok(c)
    }
}

/// Quotient of the parameter group: none, the standard family ℛ_k
/// (1 = t_{-2k-2}^{-1/2} t_{-2k}^{1/2} t_{2k}^{1/2} t_{2k+2}^{-1/2}, k ≥ 1),
/// or a custom finite relation list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientContext {
    None,
    Standard,
    Custom(CustomLattice),
}

impl QuotientContext {
    pub fn custom(relations: Vec<ParamMonomial>) -> Self {
        QuotientContext::Custom(CustomLattice::new(relations))
    }

    /// Canonical representative of `m` modulo the relation lattice.
    pub fn reduce(&self, m: &ParamMonomial) -> ParamMonomial {
        match self {
            QuotientContext::None => m.clone(),
            QuotientContext::Standard => ParamMonomial(standard_reduce(&m.0)),
            QuotientContext::Custom(lat) => ParamMonomial(lat.reduce(&m.0)),
        }
    }

    /// True iff m1 and m2 are equal modulo the relations.
    pub fn equal(&self, m1: &ParamMonomial, m2: &ParamMonomial) -> bool {
        match self {
            QuotientContext::None => m1 == m2,
            _ => {
                let diff = m1.0.add(&m2.0.neg());
                match self {
                    QuotientContext::Standard => standard_member(&diff),
                    QuotientContext::Custom(lat) => lat.member(&diff),
                    QuotientContext::None => unreachable!(),
                }
            }
        }
    }
}

/// Membership of a doubled exponent vector in the ℛ_k lattice: the doubled
/// generator of ℛ_k is +1 at ±2k and −1 at ±(2k+2), so a combination has
/// finite support, zero odd part and zero at 0, is symmetric at ±2k, and its
/// positive even entries sum to zero.
pub fn standard_member(d: &ExpSeq) -> bool {
    let support = match d.finite_support() {
        None => return false,
        Some(s) => s,
    };
    let mut sum_pos_even = 0i64;
    for &(a, v) in &support {
        if a % 2 != 0 || a == 0 {
            return false;
        }
        if a > 0 {
            if v != d.get_doubled(-a) {
                return false;
            }
            sum_pos_even += v;
        } else if d.get_doubled(-a) == 0 {
            // negative index with no positive partner
            return false;
        }
    }
    sum_pos_even == 0
}

/// Canonical representative modulo the ℛ_k lattice.
///
/// Invariants of the class: all odd-index entries, the entry at 0, the
/// antisymmetric parts A_k = D_{2k} − D_{−2k}, the parities of the symmetric
/// parts G_k = D_{2k} + D_{−2k}, and the total symmetric mass relative to the
/// tail.  The representative keeps the invariants, flattens G_k to its parity
/// bit for 2 ≤ k below the tail, matches the tail pattern as far down as
/// parity permits, and lets G_1 absorb the surplus.
fn standard_reduce(d: &ExpSeq) -> ExpSeq {
    if d.is_zero() {
        return d.clone();
    }
    // First symmetric index from which tail values are read directly off `d`.
    let a_tail = d.a_tail();
    let k0 = {
        let from_pos = (a_tail + 1) / 2 + 1; // 2k >= a_tail
        let from_neg = (-d.a_min()) / 2 + 1; // -2k < a_min
        from_pos.max(from_neg).max(2)
    };
    let kk = k0 as usize;
    let mut g: Vec<i64> = vec![0; kk]; // g[k] = G_k for 1 <= k < k0
    let mut asym: Vec<i64> = vec![0; kk];
    for k in 1..kk {
        let (p, n) = (d.get_doubled(2 * k as i64), d.get_doubled(-2 * k as i64));
        g[k] = p + n;
        asym[k] = p - n;
    }
    let mut gp = g.clone();
    // Below the tail boundary, extend the tail pattern downward while parity
    // matches; parity is a class invariant, so the stopping point is too.
    let mut kstar = kk;
    if let Some(pat) = d.tail_pattern() {
        let plen = pat.len() as i64;
        let pat_at = |a: i64| -> i64 { pat[(a - a_tail).rem_euclid(plen) as usize] };
        let mut k = kk as i64 - 1;
        while k >= 2 {
            let target = pat_at(2 * k);
            if (g[k as usize] - target) % 2 != 0 {
                break;
            }
            gp[k as usize] = target;
            kstar = k as usize;
            k -= 1;
        }
    }
    for k in 2..kstar {
        gp[k] = g[k].rem_euclid(2);
    }
    // G_1 absorbs the (finite) surplus so the class total is preserved.
    let surplus: i64 = (2..kk).map(|k| g[k] - gp[k]).sum();
    gp[1] = g[1] + surplus;
    // Reassemble: odd indices and 0 pass through; symmetric pairs below the
    // boundary come from (gp, asym); everything from 2·k0 up is untouched.
    let value = |a: i64| -> i64 {
        if a % 2 != 0 || a == 0 {
            return d.get_doubled(a);
        }
        let k = (a.abs() / 2) as usize;
        if k >= 1 && k < kk {
            if a > 0 {
                (gp[k] + asym[k]) / 2
            } else {
                (gp[k] - asym[k]) / 2
            }
        } else {
            d.get_doubled(a)
        }
    };
    let lo = d.a_min().min(-2 * (kk as i64 - 1));
    let hi = a_tail.max(2 * kk as i64);
    let explicit: Vec<i64> = (lo..hi).map(value).collect();
    match d.tail_pattern() {
        None => ExpSeq {
            a_min: lo,
            explicit,
            tail: None,
        }
        .canonicalized(),
        Some(pat) => {
            // Rotate the pattern so it starts at `hi` instead of `a_tail`.
            let plen = pat.len() as i64;
            let shift = (hi - a_tail).rem_euclid(plen) as usize;
            let mut pattern = pat.to_vec();
            pattern.rotate_left(shift);
            ExpSeq::with_tail(lo, explicit, pattern)
        }
    }
}

/// A finite relation lattice given by finitely supported generator vectors,
/// reduced by integer row reduction (Hermite-style) over the union support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomLattice {
    relations: Vec<ParamMonomial>,
    window: Vec<i64>,           // sorted support indices
    rows: Vec<Vec<i64>>,        // row-echelon basis over the window
    pivots: Vec<usize>,         // pivot column of each row
}

impl CustomLattice {
    pub fn new(relations: Vec<ParamMonomial>) -> Self {
        let mut window: Vec<i64> = Vec::new();
        for r in &relations {
            let sup = r
                .0
                .finite_support()
                .expect("custom quotient relations must have finite support");
            for (a, _) in sup {
                if !window.contains(&a) {
                    window.push(a);
                }
            }
        }
        window.sort();
        let mut rows: Vec<Vec<i64>> = relations
            .iter()
            .map(|r| window.iter().map(|&a| r.0.get_doubled(a)).collect())
            .collect();
        // Integer row echelon (Hermite normal form, row style).
        let ncols = window.len();
        let mut pivots = Vec::new();
        let mut done = 0usize;
        for col in 0..ncols {
            // Euclidean elimination within this column.
            loop {
                let mut best: Option<usize> = None;
                for r in done..rows.len() {
                    if rows[r][col] != 0 {
                        best = match best {
                            None => Some(r),
                            Some(b) => {
                                if rows[r][col].abs() < rows[b][col].abs() {
                                    Some(r)
                                } else {
                                    Some(b)
                                }
                            }
                        };
                    }
                }
                let b = match best {
                    None => break,
                    Some(b) => b,
                };
                rows.swap(done, b);
                if rows[done][col] < 0 {
                    for v in rows[done].iter_mut() {
                        *v = -*v;
                    }
                }
                let mut again = false;
                for r in done + 1..rows.len() {
                    if rows[r][col] != 0 {
                        let q = rows[r][col].div_euclid(rows[done][col]);
                        for c in 0..ncols {
                            rows[r][c] -= q * rows[done][c];
                        }
                        if rows[r][col] != 0 {
                            again = true;
                        }
                    }
                }
                if !again {
                    break;
                }
            }
            if done < rows.len() && rows[done][col] != 0 {
                pivots.push(col);
                done += 1;
            }
        }
        rows.truncate(done);
        CustomLattice {
            relations,
            window,
            rows,
            pivots,
        }
    }

    pub fn relations(&self) -> &[ParamMonomial] {
        &self.relations
    }

    fn vector_over_window(&self, d: &ExpSeq) -> Option<Vec<i64>> {
        // The window must not reach into the tail region for reduction to be
        // meaningful; in practice relation supports are small and tails start
        // far to the right, but guard anyway.
        Some(self.window.iter().map(|&a| d.get_doubled(a)).collect())
    }

    /// Membership: the difference must vanish outside the window and reduce
    /// to zero against the basis.
    pub fn member(&self, d: &ExpSeq) -> bool {
        if d.is_zero() {
            return true;
        }
        let sup = match d.finite_support() {
            None => return false,
            Some(s) => s,
        };
        for (a, _) in &sup {
            if !self.window.contains(a) {
                return false;
            }
        }
        let mut v = self.vector_over_window(&d.clone()).unwrap();
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] % r[pc] != 0 {
                return false;
            }
            let q = v[pc] / r[pc];
            for c in 0..v.len() {
                v[c] -= q * r[c];
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Canonical coset representative: reduce the window entries by the
    /// echelon basis (floor division at each pivot); indices off the window
    /// are untouched.
    pub fn reduce(&self, d: &ExpSeq) -> ExpSeq {
        let mut v = match self.vector_over_window(d) {
            None => return d.clone(),
            Some(v) => v,
        };
        let mut delta: Vec<i64> = vec![0; v.len()];
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let q = v[pc].div_euclid(r[pc]);
            for c in 0..v.len() {
                v[c] -= q * r[c];
                delta[c] -= q * r[c];
            }
        }
        if delta.iter().all(|&x| x == 0) {
            return d.clone();
        }
        let pairs: Vec<(i64, i64)> = self
            .window
            .iter()
            .cloned()
            .zip(delta)
            .filter(|&(_, x)| x != 0)
            .collect();
        d.add(&ExpSeq::from_doubled_pairs(&pairs))
    }
}

/// Integer combination of parameter monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParamLaurent {
    terms: BTreeMap<ParamMonomial, i64>,
}

impl ParamLaurent {
    pub fn zero() -> Self {
        ParamLaurent::default()
    }

    pub fn one() -> Self {
        ParamLaurent::from_monomial(ParamMonomial::one())
    }

    pub fn from_monomial(m: ParamMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, 1);
        ParamLaurent { terms }
    }

    pub fn from_term(m: ParamMonomial, c: i64) -> Self {
        let mut p = ParamLaurent::zero();
        p.add_term(m, c, &QuotientContext::None);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ParamMonomial::one()) == Some(&1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Single-term accessor.
    pub fn as_single_term(&self) -> Option<(&ParamMonomial, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, &c)| (m, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: ParamMonomial, c: i64, ctx: &QuotientContext) {
        if c == 0 {
            return;
        }
        let key = ctx.reduce(&m);
        let entry = self.terms.entry(key).or_insert(0);
        *entry += c;
        if *entry == 0 {
            let key = ctx.reduce(&m);
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &ParamLaurent, ctx: &QuotientContext) -> ParamLaurent {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c, ctx);
        }
        out
    }

    pub fn sub(&self, other: &ParamLaurent, ctx: &QuotientContext) -> ParamLaurent {
        self.add(&other.neg(), ctx)
    }

    pub fn neg(&self) -> ParamLaurent {
        ParamLaurent {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> ParamLaurent {
        if k == 0 {
            return ParamLaurent::zero();
        }
        ParamLaurent {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &ParamLaurent, ctx: &QuotientContext) -> ParamLaurent {
        let mut out = ParamLaurent::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2, ctx);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &ParamMonomial, ctx: &QuotientContext) -> ParamLaurent {
        let mut out = ParamLaurent::zero();
        for (m1, c1) in self.terms() {
            out.add_term(m1.mul(m), c1, ctx);
        }
        out
    }

    /// Re-reduce all keys under a (possibly different) quotient context.
    pub fn reduced(&self, ctx: &QuotientContext) -> ParamLaurent {
        let mut out = ParamLaurent::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c, ctx);
        }
        out
    }

    pub fn bar(&self) -> ParamLaurent {
        ParamLaurent {
            terms: self.terms.iter().map(|(m, &c)| (m.bar(), c)).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|&c| c > 0)
    }

    /// Sum of integer coefficients (the image under every t_a ↦ 1).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Specialize every monomial to a power of a single parameter t; returns
    /// a map doubled-exponent → coefficient.
    pub fn specialize(
        &self,
        weights: &BTreeMap<i64, i64>,
        default: i64,
    ) -> Result<BTreeMap<i64, i64>, ParamError> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (m, c) in self.terms() {
            let e = m.specialize(weights, default)?;
            let v = out.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                out.remove(&e);
            }
        }
        Ok(out)
    }

    /// Try to divide exactly by another ParamLaurent, by repeated elimination
    /// of the greatest monomial.  Succeeds on the exact quotients needed for
    /// cluster-mutation arithmetic.
    pub fn try_div(&self, d: &ParamLaurent, ctx: &QuotientContext) -> Option<ParamLaurent> {
        if d.is_zero() {
            return None;
        }
        let mut rem = self.reduced(ctx);
        let dd = d.reduced(ctx);
        let lead = |l: &ParamLaurent| {
            l.terms
                .iter()
                .max_by(|(m1, _), (m2, _)| m1.div_cmp(m2))
                .map(|(m, &c)| (m.clone(), c))
        };
        let (dm, dc) = lead(&dd)?;
        let mut q = ParamLaurent::zero();
        let mut steps = 0;
        while !rem.is_zero() {
            steps += 1;
            if steps > 10_000 {
                return None;
            }
            let (rm, rc) = lead(&rem)?;
            if rc % dc != 0 {
                return None;
            }
            let cm = rm.mul(&dm.inv());
            let cc = rc / dc;
            let mut t = ParamLaurent::zero();
            t.add_term(cm, cc, ctx);
            q = q.add(&t, ctx);
            rem = rem.sub(&t.mul(&dd, ctx), ctx);
            if let Some((nm, _)) = lead(&rem) {
                if nm.div_cmp(&rm) != std::cmp::Ordering::Less {
                    return None;
                }
            }
        }
        Some(q)
    }
}

fn fmt_doubled(d: i64) -> String {
    if d % 2 == 0 {
        format!("{}", d / 2)
    } else {
        format!("{}/2", d)
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        for a in self.0.a_min()..self.0.a_tail() {
            let d = self.0.get_doubled(a);
            if d != 0 {
                parts.push(format!("t[{}]^{{{}}}", a, fmt_doubled(d)));
            }
        }
        if let Some(p) = self.0.tail_pattern() {
            parts.push(format!(
                "*PER({},{})[{}]",
                self.0.a_tail(),
                p.len(),
                p.iter().map(|&d| fmt_doubled(d)).collect::<Vec<_>>().join(",")
            ));
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Display for ParamLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else if mag == 1 {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{} {}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(pairs: &[(i64, i64)]) -> ParamMonomial {
        ParamMonomial::from_doubled_pairs(pairs)
    }

    #[test]
    fn doubling_and_inverse() {
        let half = ParamMonomial::gen_doubled(0, 1); // t_0^{1/2}
        assert_eq!(half.mul(&half), ParamMonomial::gen_doubled(0, 2));
        let m = pm(&[(-2, 1), (0, -4), (2, 3)]);
        assert!(m.mul(&m.inv()).is_one());
    }

    #[test]
    fn tail_cancellation() {
        // (∏_{k≥1} t_{6k+2}^{-3} t_{6k+4}^{3}) · inverse = 1
        let t = ExpSeq::with_tail(8, vec![], vec![-6, 0, 6, 0, 0, 0]);
        let m = ParamMonomial(t);
        assert!(m.mul(&m.inv()).is_one());
    }

    #[test]
    fn tail_canonical_form() {
        // Explicit entries matching the tail are absorbed.
        let a = ExpSeq::with_tail(6, vec![2, 0, 4], vec![2, 0, 4]);
        let b = ExpSeq::with_tail(6, vec![], vec![2, 0, 4]);
        assert_eq!(a, b);
        assert_eq!(a.get_doubled(9), 2);
        // Pattern reduced to minimal period.
        let c = ExpSeq::with_tail(0, vec![], vec![1, 2, 1, 2]);
        let d = ExpSeq::with_tail(0, vec![], vec![1, 2]);
        assert_eq!(c, d);
    }

    #[test]
    fn standard_membership() {
        let ctx = QuotientContext::Standard;
        // s-collapse: t_{-4}^{1/2}t_4^{1/2} == t_{-2}^{1/2}t_2^{1/2}
        assert!(ctx.equal(&pm(&[(-4, 1), (4, 1)]), &pm(&[(-2, 1), (2, 1)])));
        // k=1 defect monomial is trivial
        assert!(ctx.equal(&pm(&[(-4, 2), (-2, -2), (2, -2), (4, 2)]), &ParamMonomial::one()));
        // t_0 is not trivial
        assert!(!ctx.equal(&ParamMonomial::gen_doubled(0, 2), &ParamMonomial::one()));
    }

    #[test]
    fn standard_reduce_agrees_with_membership() {
        let ctx = QuotientContext::Standard;
        let cases = vec![
            pm(&[(-4, 1), (4, 1)]),
            pm(&[(-2, 1), (2, 1)]),
            pm(&[(-6, 3), (6, 3), (2, -1), (-2, -1)]),
            pm(&[(0, 2), (3, 1)]),
            pm(&[(-4, 2), (-2, -2), (2, -2), (4, 2), (1, 5)]),
        ];
        for a in &cases {
            for b in &cases {
                let eq = ctx.equal(a, b);
                let same = ctx.reduce(a) == ctx.reduce(b);
                assert_eq!(eq, same, "reduce/member disagree on {} vs {}", a, b);
            }
            // Idempotence.
            assert_eq!(ctx.reduce(a), ctx.reduce(&ctx.reduce(a)));
            // Representative is in the same class.
            assert!(ctx.equal(a, &ctx.reduce(a)));
        }
    }

    #[test]
    fn standard_reduce_with_tail() {
        let ctx = QuotientContext::Standard;
        let tail = ParamMonomial(ExpSeq::with_tail(8, vec![], vec![-6, 0, 6, 0, 0, 0]));
        // Multiplying a tail monomial by a lattice element must not change
        // its canonical form.
        let lat = pm(&[(-4, 1), (-2, -1), (2, -1), (4, 1)]);
        assert_eq!(ctx.reduce(&tail), ctx.reduce(&tail.mul(&lat)));
        // Lattice shift deep inside the tail region.
        let lat2 = pm(&[(-14, 1), (-12, -1), (12, -1), (14, 1)]);
        assert_eq!(ctx.reduce(&tail), ctx.reduce(&tail.mul(&lat2)));
        assert!(ctx.equal(&tail, &tail.mul(&lat2)));
    }

    #[test]
    fn custom_lattice_b2_relation() {
        // t_{-4}^{1/2} t_{-2}^{-1/2} t_2^{-1/2} t_4^{1/2} = 1
        let rel = pm(&[(-4, 1), (-2, -1), (2, -1), (4, 1)]);
        let ctx = QuotientContext::custom(vec![rel.clone()]);
        assert!(ctx.equal(&rel, &ParamMonomial::one()));
        assert!(ctx.equal(&rel.pow(3), &ParamMonomial::one()));
        assert!(!ctx.equal(&pm(&[(-4, 1), (4, 1)]), &ParamMonomial::one()));
        // Congruence with an unrelated factor.
        let x = pm(&[(0, 5)]);
        assert!(ctx.equal(&rel.mul(&x), &x));
        assert_eq!(ctx.reduce(&rel.mul(&x)), ctx.reduce(&x));
    }

    #[test]
    fn laurent_arithmetic() {
        let ctx = QuotientContext::None;
        let t0 = ParamLaurent::from_monomial(ParamMonomial::gen_doubled(0, 2));
        let one = ParamLaurent::one();
        let a = one.add(&t0, &ctx);
        let b = one.sub(&t0, &ctx);
        let p = a.mul(&b, &ctx);
        let expect = one.sub(
            &ParamLaurent::from_monomial(ParamMonomial::gen_doubled(0, 4)),
            &ctx,
        );
        assert_eq!(p, expect);
        assert!(a.is_positive());
        assert!(!p.is_positive());
    }

    #[test]
    fn defect_annihilates_under_standard() {
        let ctx = QuotientContext::Standard;
        let defect = pm(&[(-4, 2), (-2, -2), (2, -2), (4, 2)]);
        let one = ParamLaurent::one();
        let d = one.sub(&ParamLaurent::from_monomial(defect), &ctx);
        assert!(d.is_zero());
    }

    #[test]
    fn bar_is_involutive() {
        let ctx = QuotientContext::None;
        let sym = ParamLaurent::from_monomial(pm(&[(-2, -1), (0, 2), (2, -1)])).add(
            &ParamLaurent::from_monomial(pm(&[(-2, 1), (0, -2), (2, 1)])),
            &ctx,
        );
        assert_eq!(sym.bar(), sym);
        let x = ParamLaurent::from_term(pm(&[(1, 3), (7, -2)]), -4);
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn specialization() {
        let m = pm(&[(-2, 2), (0, -4), (2, 2)]); // t_{-2} t_0^{-2} t_2
        let mut w = BTreeMap::new();
        w.insert(-2, 1);
        w.insert(0, 1);
        w.insert(2, 1);
        assert_eq!(m.specialize(&w, 0).unwrap(), 0);
        let m2 = pm(&[(-2, -1), (0, 2), (2, -1)]);
        let mut w0 = BTreeMap::new();
        w0.insert(0, 1);
        assert_eq!(m2.specialize(&w0, 0).unwrap(), 2); // t^1 doubled
        let tail = ParamMonomial(ExpSeq::with_tail(8, vec![], vec![-6, 0, 6, 0, 0, 0]));
        assert_eq!(
            tail.specialize(&BTreeMap::new(), 1),
            Err(ParamError::DivergentSpecialization)
        );
    }

    #[test]
    fn rendering_round_trip_shapes() {
        let m = pm(&[(-2, 1), (0, -2)]);
        assert_eq!(m.to_string(), "t[-2]^{1/2} t[0]^{-1}");
        let tail = ParamMonomial(ExpSeq::with_tail(8, vec![-6], vec![0, 6, -6, 0, 0, 0]));
        assert_eq!(tail.to_string(), "t[8]^{-3} *PER(9,6)[0,3,-3,0,0,0]");
    }

    #[test]
    fn try_div_round_trip() {
        let ctx = QuotientContext::None;
        let a = ParamLaurent::one().add(
            &ParamLaurent::from_term(ParamMonomial::gen_doubled(0, 2), 3),
            &ctx,
        );
        let b = ParamLaurent::from_term(pm(&[(-2, 1), (2, -1)]), 2).sub(&ParamLaurent::one(), &ctx);
        let p = a.mul(&b, &ctx);
        assert_eq!(p.try_div(&b, &ctx), Some(a.clone()));
        assert_eq!(p.try_div(&a, &ctx), Some(b.clone()));
    }
}
