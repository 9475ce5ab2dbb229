//! Element-order spectra and the order-quotient view of the order super
//! commuting graph.
//!
//! In the order super commuting graph two distinct elements are adjacent
//! exactly when the lcm of their orders is itself an element order, so the
//! whole graph is determined by the set of element orders. This lets the
//! symmetric and alternating groups be analysed far past explicit enumeration.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analytics::{self, ComponentReport, Diameter};
use crate::arith::{checked_lcm, gcd, lcm, primes_up_to};
use crate::error::{Error, Result};
use crate::graph::DenseGraph;
use crate::group::GroupTable;

/// Default upper bound on the degree for symbolic analysis.
pub const DEFAULT_CAP: usize = 60;

/// Largest degree for which exact class counts fit in a `u128` (34! < 2^128).
pub const EXACT_COUNT_LIMIT: usize = 34;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Symmetric,
    Alternating,
    Explicit,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Explicit => "explicit",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symmetric" | "s" => Ok(Family::Symmetric),
            "alternating" | "a" => Ok(Family::Alternating),
            "explicit" => Ok(Family::Explicit),
            _ => Err(Error::invalid(format!("unknown family {s:?}"))),
        }
    }
}

/// The set of element orders of a group with its divisibility-maximal members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpectrum {
    pub family: Family,
    /// Degree for symmetric and alternating groups, group order otherwise.
    pub n: usize,
    /// Sorted ascending.
    pub orders: Vec<u64>,
    /// Maximal orders under divisibility, sorted ascending.
    pub mu: Vec<u64>,
    /// Exact element counts per order, aligned with `orders`, when known.
    pub counts: Option<Vec<u128>>,
}

impl OrderSpectrum {
    fn new(family: Family, n: usize, orders: BTreeSet<u64>, counts: Option<HashMap<u64, u128>>) -> Self {
        let orders: Vec<u64> = orders.into_iter().collect();
        let mu = maximal_under_divisibility(&orders);
        let counts = counts.map(|c| orders.iter().map(|d| c[d]).collect());
        OrderSpectrum { family, n, orders, mu, counts }
    }

    /// gcd of the maximal orders (the single maximal order when there is one).
    pub fn l(&self) -> u64 {
        self.mu.iter().fold(0, |acc, &d| gcd(acc, d))
    }

    pub fn contains(&self, d: u64) -> bool {
        self.orders.binary_search(&d).is_ok()
    }

    /// lcm of all orders; `None` when it does not fit in a `u64`.
    pub fn exponent(&self) -> Option<u64> {
        self.orders.iter().try_fold(1, |acc, &d| checked_lcm(acc, d))
    }

    pub fn max_order(&self) -> u64 {
        self.orders.last().copied().unwrap_or(1)
    }

    pub fn count_of(&self, d: u64) -> Option<u128> {
        let i = self.orders.binary_search(&d).ok()?;
        self.counts.as_ref().map(|c| c[i])
    }
}

fn maximal_under_divisibility(sorted: &[u64]) -> Vec<u64> {
    sorted
        .iter()
        .enumerate()
        .filter(|&(i, &d)| !sorted[i + 1..].iter().any(|&e| e % d == 0))
        .map(|(_, &d)| d)
        .collect()
}

/// Cheapest support of an element of order `p^a` inside the family.
fn prime_power_cost(family: Family, p: u64, pk: u64) -> u64 {
    if family == Family::Alternating && p == 2 {
        pk + 2
    } else {
        pk
    }
}

/// All orders whose minimal support is at most `n`, by depth-first choice of
/// one prime-power part per prime.
fn realisable_orders(family: Family, n: usize) -> Result<BTreeSet<u64>> {
    let primes = primes_up_to(n as u64);
    let mut out = BTreeSet::new();
    let mut overflow = false;
    fn walk(
        family: Family,
        primes: &[u64],
        budget: u64,
        order: u64,
        out: &mut BTreeSet<u64>,
        overflow: &mut bool,
    ) {
        out.insert(order);
        for (i, &p) in primes.iter().enumerate() {
            let mut pk = p;
            while prime_power_cost(family, p, pk) <= budget {
                match order.checked_mul(pk) {
                    Some(next) => walk(family, &primes[i + 1..], budget - prime_power_cost(family, p, pk), next, out, overflow),
                    None => *overflow = true,
                }
                pk *= p;
            }
        }
    }
    walk(family, &primes, n as u64, 1, &mut out, &mut overflow);
    if overflow {
        return Err(Error::budget(format!("orders of degree {n}"), u64::MAX as u128 + 1, u64::MAX as u128));
    }
    Ok(out)
}

/// Exact element counts per order, by summing `n!/z` over cycle types.
fn class_counts(family: Family, n: usize) -> HashMap<u64, u128> {
    let factorial: Vec<u128> = (0..=n as u128).scan(1u128, |f, k| {
        if k > 0 {
            *f *= k;
        }
        Some(*f)
    }).collect();
    let mut counts = HashMap::new();
    let mut parts = Vec::new();
    fn walk(
        family: Family,
        n: usize,
        remaining: usize,
        max_part: usize,
        parts: &mut Vec<usize>,
        factorial: &[u128],
        counts: &mut HashMap<u64, u128>,
    ) {
        if remaining == 0 {
            if family == Family::Alternating && (n - parts.len()) % 2 == 1 {
                return;
            }
            let mut z: u128 = 1;
            let mut order = 1u64;
            let mut i = 0;
            while i < parts.len() {
                let len = parts[i];
                let mut mult = 0;
                while i < parts.len() && parts[i] == len {
                    mult += 1;
                    i += 1;
                }
                z *= (len as u128).pow(mult as u32) * factorial[mult];
                order = lcm(order, len as u64);
            }
            *counts.entry(order).or_insert(0) += factorial[n] / z;
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            parts.push(part);
            walk(family, n, remaining - part, part, parts, factorial, counts);
            parts.pop();
        }
    }
    walk(family, n, n, n, &mut parts, &factorial, &mut counts);
    counts
}

fn symbolic(family: Family, n: usize, cap: usize) -> Result<OrderSpectrum> {
    if n > cap {
        return Err(Error::budget(format!("{family} spectrum degree"), n as u128, cap as u128));
    }
    let orders = realisable_orders(family, n)?;
    let counts = (n <= EXACT_COUNT_LIMIT).then(|| class_counts(family, n));
    if let Some(c) = &counts {
        debug_assert!(orders.iter().all(|d| c.contains_key(d)) && c.len() == orders.len());
    }
    Ok(OrderSpectrum::new(family, n, orders, counts))
}

/// Orders of elements of the symmetric group of degree `n`, `1 <= n <= 60`.
pub fn spectrum_symmetric(n: usize) -> Result<OrderSpectrum> {
    spectrum_symmetric_with_cap(n, DEFAULT_CAP)
}

pub fn spectrum_symmetric_with_cap(n: usize, cap: usize) -> Result<OrderSpectrum> {
    if n == 0 {
        return Err(Error::invalid("symmetric degree must be at least 1"));
    }
    symbolic(Family::Symmetric, n, cap)
}

/// Orders of elements of the alternating group of degree `n`, `3 <= n <= 60`.
pub fn spectrum_alternating(n: usize) -> Result<OrderSpectrum> {
    spectrum_alternating_with_cap(n, DEFAULT_CAP)
}

pub fn spectrum_alternating_with_cap(n: usize, cap: usize) -> Result<OrderSpectrum> {
    if n < 3 {
        return Err(Error::invalid("alternating degree must be at least 3"));
    }
    symbolic(Family::Alternating, n, cap)
}

pub fn spectrum_family(family: Family, n: usize, cap: usize) -> Result<OrderSpectrum> {
    match family {
        Family::Symmetric => spectrum_symmetric_with_cap(n, cap),
        Family::Alternating => spectrum_alternating_with_cap(n, cap),
        Family::Explicit => Err(Error::invalid("explicit spectra need a group")),
    }
}

/// Orders read off an explicit group, with exact counts.
pub fn spectrum_explicit(g: &GroupTable) -> OrderSpectrum {
    let mut counts: HashMap<u64, u128> = HashMap::new();
    for x in g.elements() {
        *counts.entry(g.order_of(x)).or_insert(0) += 1;
    }
    let orders = counts.keys().copied().collect();
    OrderSpectrum::new(Family::Explicit, g.len(), orders, Some(counts))
}

/// Orders of the dominant vertices: the members dividing `l`.
pub fn dominant_orders(s: &OrderSpectrum) -> Vec<u64> {
    let l = s.l();
    s.orders.iter().copied().filter(|&d| l % d == 0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassSize {
    Exact(u128),
    /// Count unknown but guaranteed to be at least two.
    AtLeastTwo,
}

impl ClassSize {
    pub fn at_least_two(self) -> bool {
        match self {
            ClassSize::Exact(c) => c >= 2,
            ClassSize::AtLeastTwo => true,
        }
    }
}

/// Graph on element orders, `d ~ d'` iff `lcm(d, d')` is an element order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderQuotientGraph {
    pub family: Family,
    pub n: usize,
    pub reduced: bool,
    /// Order carried by each vertex, ascending.
    pub orders: Vec<u64>,
    pub class_sizes: Vec<ClassSize>,
    pub graph: DenseGraph,
}

impl OrderQuotientGraph {
    pub fn vertex_of(&self, d: u64) -> Option<usize> {
        self.orders.binary_search(&d).ok()
    }
}

/// Builds the order-quotient graph. The unreduced graph keeps every order,
/// including 1; the reduced one drops the dominant orders.
pub fn quotient_graph(s: &OrderSpectrum, reduced: bool) -> OrderQuotientGraph {
    let dominant: HashSet<u64> = if reduced { dominant_orders(s).into_iter().collect() } else { HashSet::new() };
    let keep: Vec<usize> = (0..s.orders.len()).filter(|&i| !dominant.contains(&s.orders[i])).collect();
    let orders: Vec<u64> = keep.iter().map(|&i| s.orders[i]).collect();
    let class_sizes = keep
        .iter()
        .map(|&i| match &s.counts {
            Some(c) => ClassSize::Exact(c[i]),
            // non-identity classes of symmetric and alternating groups of degree >= 4
            None => ClassSize::AtLeastTwo,
        })
        .collect();
    let members: HashSet<u64> = s.orders.iter().copied().collect();
    let graph = DenseGraph::from_predicate(orders.len(), |u, v| members.contains(&lcm(orders[u], orders[v])));
    OrderQuotientGraph { family: s.family, n: s.n, reduced, orders, class_sizes, graph }
}

/// Components of the element graph described by a quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientComponents {
    pub count: usize,
    pub is_connected: bool,
    /// Orders in each component, components ordered by least order.
    pub orders: Vec<Vec<u64>>,
    /// Element counts per component, ascending, when all class sizes are exact.
    pub element_sizes: Option<Vec<u128>>,
}

impl QuotientComponents {
    /// The element-level report, when sizes are known and fit in `usize`.
    pub fn element_report(&self) -> Option<ComponentReport> {
        let sizes = self.element_sizes.as_ref()?;
        let sizes: Option<Vec<usize>> = sizes.iter().map(|&s| usize::try_from(s).ok()).collect();
        sizes.map(ComponentReport::from_sizes)
    }
}

pub fn quotient_components(q: &OrderQuotientGraph) -> QuotientComponents {
    let sets = analytics::component_sets(&q.graph);
    let element_sizes = sets
        .iter()
        .map(|c| {
            c.iter().try_fold(0u128, |acc, &v| match q.class_sizes[v] {
                ClassSize::Exact(k) => Some(acc + k),
                ClassSize::AtLeastTwo => None,
            })
        })
        .collect::<Option<Vec<u128>>>()
        .map(|mut v| {
            v.sort_unstable();
            v
        });
    QuotientComponents {
        count: sets.len(),
        is_connected: sets.len() <= 1,
        orders: sets.iter().map(|c| c.iter().map(|&v| q.orders[v]).collect()).collect(),
        element_sizes,
    }
}

/// Diameter of the element graph described by a quotient.
///
/// Distinct orders sit at their quotient distance; two elements of the same
/// order are adjacent, so a class with two or more elements forces distance
/// at least 1.
pub fn quotient_diameter(q: &OrderQuotientGraph) -> Diameter {
    match analytics::diameter(&q.graph) {
        Diameter::Finite(d) => {
            let same_class = q.class_sizes.iter().any(|c| c.at_least_two());
            Diameter::Finite(if same_class { d.max(1) } else { d })
        }
        other => other,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityPrediction {
    pub family: Family,
    pub n: usize,
    pub is_connected: bool,
    pub components: usize,
}

/// Closed-form component count of the reduced order super commuting graph.
pub fn predict_connectivity(n: usize, family: Family) -> Result<ConnectivityPrediction> {
    use crate::arith::is_prime;
    if n < 4 {
        return Err(Error::hypothesis(format!("connectivity prediction needs n >= 4, got {n}")));
    }
    let p = |k: usize| is_prime(k as u64);
    let components = match family {
        Family::Symmetric => {
            if p(n) || p(n - 1) {
                2
            } else {
                1
            }
        }
        Family::Alternating => {
            let primes = [p(n), p(n - 1), p(n - 2)].iter().filter(|&&b| b).count();
            if n == 4 {
                2
            } else if p(n) && p(n - 2) {
                3
            } else if primes == 0 {
                1
            } else {
                2
            }
        }
        Family::Explicit => return Err(Error::invalid("connectivity prediction is for symmetric or alternating groups")),
    };
    Ok(ConnectivityPrediction { family, n, is_connected: components == 1, components })
}
