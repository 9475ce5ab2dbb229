//! Prime-set witnesses for diameter three, complementary prime sets, and
//! prime counts in the upper half window.
//!
//! A witness is a pair of disjoint prime sets with exponents: the first has
//! weight within the top of the degree range, the second fits in the degree
//! but cannot share the support with any single prime of the first.

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, primes_up_to};
use crate::error::{Error, Result};
use crate::spectrum::{predict_connectivity, Family};

fn check_family(family: Family) -> Result<()> {
    match family {
        Family::Symmetric | Family::Alternating => Ok(()),
        Family::Explicit => Err(Error::invalid("witnesses exist for symmetric or alternating groups only")),
    }
}

/// Support needed by a cycle of length `p^a` in the family (two extra
/// points pair an even-length cycle into an even permutation).
fn part_cost(family: Family, p: u64, a: u32) -> u64 {
    let pk = p.pow(a);
    if family == Family::Alternating && p == 2 {
        pk + 2
    } else {
        pk
    }
}

/// Weight of a prime set with exponents.
pub fn weight(family: Family, primes: &[u64], exps: &[u32]) -> u64 {
    primes.iter().zip(exps).map(|(&p, &a)| part_cost(family, p, a)).sum()
}

/// Least support of an element of prime order `p` in the family.
fn prime_cost(family: Family, p: u64) -> u64 {
    part_cost(family, p, 1)
}

/// Lowest weight of the top window for the first witness set.
fn window_low(family: Family, n: usize) -> u64 {
    match family {
        Family::Alternating => (n as u64).saturating_sub(2),
        _ => (n as u64).saturating_sub(1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub family: Family,
    pub n: usize,
    pub t1: Vec<u64>,
    pub alpha: Vec<u32>,
    pub t2: Vec<u64>,
    pub beta: Vec<u32>,
}

impl WitnessPair {
    /// Builds and validates a witness.
    pub fn new(family: Family, n: usize, t1: Vec<u64>, alpha: Vec<u32>, t2: Vec<u64>, beta: Vec<u32>) -> Result<Self> {
        check_family(family)?;
        let w = WitnessPair { family, n, t1, alpha, t2, beta };
        w.validate()?;
        Ok(w)
    }

    pub fn t1_weight(&self) -> u64 {
        weight(self.family, &self.t1, &self.alpha)
    }

    pub fn t2_weight(&self) -> u64 {
        weight(self.family, &self.t2, &self.beta)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n as u64;
        for (name, set, exps) in [("T1", &self.t1, &self.alpha), ("T2", &self.t2, &self.beta)] {
            if set.is_empty() {
                return Err(Error::invalid(format!("{name} is empty")));
            }
            if set.len() != exps.len() || exps.contains(&0) {
                return Err(Error::invalid(format!("{name} needs one positive exponent per prime")));
            }
            if !set.windows(2).all(|w| w[0] < w[1]) || !set.iter().all(|&p| is_prime(p) && p <= n) {
                return Err(Error::invalid(format!("{name} = {set:?} is not an ascending set of primes <= {n}")));
            }
        }
        if self.t1.iter().any(|p| self.t2.contains(p)) {
            return Err(Error::invalid("T1 and T2 intersect"));
        }
        let m1 = self.t1_weight();
        if m1 < window_low(self.family, self.n) || m1 > n {
            return Err(Error::invalid(format!("T1 weight {m1} outside the window ending at {n}")));
        }
        let m2 = self.t2_weight();
        if m2 > n {
            return Err(Error::invalid(format!("T2 weight {m2} exceeds {n}")));
        }
        if let Some(&r) = self.t1.iter().find(|&&p| m2 + prime_cost(self.family, p) <= n) {
            return Err(Error::invalid(format!("T2 weight {m2} leaves room for prime {r} of T1")));
        }
        Ok(())
    }

    /// `p1^a1*p2^a2` form of the first set.
    pub fn t1_string(&self) -> String {
        format_prime_powers(&self.t1, &self.alpha)
    }

    pub fn t2_string(&self) -> String {
        format_prime_powers(&self.t2, &self.beta)
    }
}

pub fn format_prime_powers(primes: &[u64], exps: &[u32]) -> String {
    primes.iter().zip(exps).map(|(p, a)| format!("{p}^{a}")).collect::<Vec<_>>().join("*")
}

/// Looks for a witness pair; `Ok(None)` means the diameter is 2.
///
/// First sets are visited in lexicographic order of their prime lists (then
/// exponents ascending); for each, the second set comes from a reachable
/// weight table over the remaining primes.
pub fn search_witness(n: usize, family: Family) -> Result<Option<WitnessPair>> {
    check_family(family)?;
    let prediction = predict_connectivity(n, family)?;
    if !prediction.is_connected {
        return Err(Error::hypothesis(format!("reduced {family} graph of degree {n} is disconnected")));
    }
    let primes = primes_up_to(n as u64);
    let mut chosen: Vec<(u64, u32)> = Vec::new();
    Ok(first_set(family, n, &primes, 0, 0, &mut chosen))
}

fn first_set(family: Family, n: usize, primes: &[u64], from: usize, used: u64, chosen: &mut Vec<(u64, u32)>) -> Option<WitnessPair> {
    for i in from..primes.len() {
        let p = primes[i];
        let mut a = 1;
        while used + part_cost(family, p, a) <= n as u64 {
            chosen.push((p, a));
            let total = used + part_cost(family, p, a);
            if total >= window_low(family, n) {
                if let Some(w) = complete(family, n, chosen, primes) {
                    return Some(w);
                }
            }
            if let Some(w) = first_set(family, n, primes, i + 1, total, chosen) {
                return Some(w);
            }
            chosen.pop();
            a += 1;
        }
    }
    None
}

/// Finds a second set for a fixed first set, taking the heaviest admissible weight.
fn complete(family: Family, n: usize, chosen: &[(u64, u32)], primes: &[u64]) -> Option<WitnessPair> {
    let cap = n as u64;
    let min_cost = chosen.iter().map(|&(p, _)| prime_cost(family, p)).min()?;
    let free: Vec<u64> = primes.iter().copied().filter(|p| !chosen.iter().any(|c| c.0 == *p)).collect();
    // picks[i][w]: exponent of free[i] used to first reach weight w at layer i
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    let mut picks: Vec<Vec<u32>> = Vec::with_capacity(free.len());
    for &p in &free {
        let mut next = reach.clone();
        let mut pick = vec![0u32; n + 1];
        for w in 0..=n {
            if !reach[w] {
                continue;
            }
            let mut a = 1;
            while w as u64 + part_cost(family, p, a) <= cap {
                let t = w + part_cost(family, p, a) as usize;
                if !next[t] {
                    next[t] = true;
                    pick[t] = a;
                }
                a += 1;
            }
        }
        picks.push(pick);
        reach = next;
    }
    let target = (1..=n).rev().find(|&w| reach[w] && w as u64 + min_cost > cap)?;
    let mut t2 = Vec::new();
    let mut w = target;
    for (i, &p) in free.iter().enumerate().rev() {
        let a = picks[i][w];
        if a > 0 {
            t2.push((p, a));
            w -= part_cost(family, p, a) as usize;
        }
    }
    debug_assert_eq!(w, 0);
    t2.reverse();
    WitnessPair::new(
        family,
        n,
        chosen.iter().map(|c| c.0).collect(),
        chosen.iter().map(|c| c.1).collect(),
        t2.iter().map(|c| c.0).collect(),
        t2.iter().map(|c| c.1).collect(),
    )
    .ok()
}

/// Primes up to `n`; for the alternating family, 2 is replaced by 4.
pub fn prime_universe(n: usize, family: Family) -> Vec<u64> {
    let mut ps = primes_up_to(n as u64);
    if family == Family::Alternating {
        ps.retain(|&p| p != 2);
        if n >= 4 {
            ps.push(4);
            ps.sort_unstable();
        }
    }
    ps
}

/// How a complementary set was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Inductive,
    Exhaustive,
}

/// `true` when `t_prime` is a nonempty subset of the universe, disjoint from
/// `t`, with sum at most `n` and sum together with `t` above `n`.
pub fn is_valid_t_prime(n: usize, t: &[u64], t_prime: &[u64], family: Family) -> bool {
    let universe = prime_universe(n, family);
    let n = n as u64;
    let s: u64 = t_prime.iter().sum();
    !t_prime.is_empty()
        && t_prime.windows(2).all(|w| w[0] < w[1])
        && t_prime.iter().all(|p| universe.contains(p) && !t.contains(p))
        && s <= n
        && s + t.iter().sum::<u64>() > n
}

/// Complementary prime set for `t`: disjoint, sum at most `n`, and
/// overflowing `n` together with `t`.
pub fn find_t_prime(n: usize, t: &[u64], family: Family) -> Result<Vec<u64>> {
    find_t_prime_with_route(n, t, family).map(|r| r.0)
}

pub fn find_t_prime_with_route(n: usize, t: &[u64], family: Family) -> Result<(Vec<u64>, Route)> {
    check_family(family)?;
    if n < 4 {
        return Err(Error::hypothesis(format!("complementary prime sets need n >= 4, got {n}")));
    }
    let universe = prime_universe(n, family);
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() || sorted.len() != t.len() || !sorted.iter().all(|p| universe.contains(p)) {
        return Err(Error::hypothesis(format!("{t:?} is not a nonempty set drawn from {universe:?}")));
    }
    if sorted.iter().sum::<u64>() > n as u64 {
        return Err(Error::hypothesis(format!("{t:?} sums past {n}")));
    }
    if let Some(mut found) = inductive(n, &sorted, family) {
        found.sort_unstable();
        if is_valid_t_prime(n, &sorted, &found, family) {
            return Ok((found, Route::Inductive));
        }
    }
    exhaustive(n, &sorted, family)
        .map(|s| (s, Route::Exhaustive))
        .ok_or_else(|| Error::hypothesis(format!("no complementary set for {t:?} at n = {n}")))
}

fn inductive(k: usize, t: &[u64], family: Family) -> Option<Vec<u64>> {
    if k <= 10 {
        return exhaustive(k, t, family);
    }
    let smallest = if family == Family::Alternating { 4 } else { 2 };
    for p in [k as u64, k as u64 - 1] {
        if is_prime(p) {
            return Some(vec![if t.contains(&p) { smallest } else { p }]);
        }
    }
    let ps = primes_up_to(k as u64);
    let (p1, p2) = (ps[ps.len() - 1], ps[ps.len() - 2]);
    if t.contains(&p1) {
        return Some(vec![p2]);
    }
    if t.contains(&p2) {
        return Some(vec![p1]);
    }
    if t.iter().sum::<u64>() >= k as u64 - p2 {
        return Some(vec![p1]);
    }
    let rest = k - p2 as usize;
    if rest < 4 {
        return None;
    }
    let mut out = inductive(rest, t, family)?;
    out.push(p2);
    Some(out)
}

/// First valid subset in lexicographic order.
fn exhaustive(n: usize, t: &[u64], family: Family) -> Option<Vec<u64>> {
    if n < 4 {
        return None;
    }
    let free: Vec<u64> = prime_universe(n, family).into_iter().filter(|p| !t.contains(p)).collect();
    let need = (n as u64 + 1).saturating_sub(t.iter().sum());
    fn walk(free: &[u64], from: usize, sum: u64, cap: u64, need: u64, cur: &mut Vec<u64>) -> bool {
        for i in from..free.len() {
            let s = sum + free[i];
            if s > cap {
                continue;
            }
            cur.push(free[i]);
            if s >= need || walk(free, i + 1, s, cap, need, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    walk(&free, 0, 0, n as u64, need, &mut cur).then_some(cur)
}

/// Staged lower bounds on the number of primes in `(n/2, n]`.
pub const PRIME_WINDOW_THRESHOLDS: [(usize, usize); 7] = [(2, 1), (11, 2), (17, 3), (29, 4), (41, 5), (47, 6), (59, 7)];

/// Number of primes in `(floor(n/2), n]`.
pub fn prime_window_count(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::invalid("prime window needs n >= 2"));
    }
    Ok(primes_up_to(n as u64).into_iter().filter(|&p| p > (n / 2) as u64).count())
}

/// The staged lower bound applying at `n`.
pub fn prime_window_bound(n: usize) -> usize {
    PRIME_WINDOW_THRESHOLDS.iter().filter(|&&(t, _)| n >= t).map(|&(_, b)| b).max().unwrap_or(0)
}
