//! Concrete finite groups with indexed elements.
//!
//! Every constructor places the identity at index 0. Element indexing per family:
//!
//! * `Z<n>`: index `i` is the residue `i`.
//! * `D<2n>`: index `k < n` is `x^k`, index `n + k` is `x^k y`.
//! * `Q<4n>`: index `k < 2n` is `x^k`, index `2n + k` is `x^k y`.
//! * `S<n>`, `A<n>`: permutations in lexicographic order of their image lists.
//! * `GxH`: index `a * |H| + b` is the pair `(a, b)`.
//! * [`from_generators`]: breadth-first discovery order.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime_power_or_one, lcm};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of elements of an explicitly materialised group.
pub const DEFAULT_BUDGET: usize = 45_000;

/// Groups up to this size carry a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;

/// Largest degree accepted by [`make_symmetric`] and [`make_alternating`].
pub const PERMUTATION_DEGREE_CAP: usize = 8;

/// Largest degree for which permutations are indexed through a lex-rank array.
const LEX_INDEX_DEGREE: usize = 9;

/// Element handle: an index in `0..group.len()`.
pub type Element = usize;

#[derive(Debug, Clone)]
enum PermIndex {
    Lex(Vec<u32>),
    Map(HashMap<Perm, u32>),
}

#[derive(Debug, Clone)]
struct PermSet {
    elems: Vec<Perm>,
    index: PermIndex,
}

impl PermSet {
    fn new(degree: usize, elems: Vec<Perm>) -> Self {
        let index = if degree <= LEX_INDEX_DEGREE {
            let total: usize = (1..=degree).product();
            let mut lex = vec![u32::MAX; total];
            for (i, p) in elems.iter().enumerate() {
                lex[p.lex_rank()] = i as u32;
            }
            PermIndex::Lex(lex)
        } else {
            PermIndex::Map(
                elems
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i as u32))
                    .collect(),
            )
        };
        PermSet { elems, index }
    }

    fn index_of(&self, p: &Perm) -> Option<u32> {
        match &self.index {
            PermIndex::Lex(lex) => match lex[p.lex_rank()] {
                u32::MAX => None,
                i => Some(i),
            },
            PermIndex::Map(map) => map.get(p).copied(),
        }
    }
}

#[derive(Debug, Clone)]
enum Rule {
    Cyclic { n: u32 },
    Dihedral { n: u32 },
    Quaternion { n: u32 },
    Perms(PermSet),
    Product {
        left: Box<GroupTable>,
        right: Box<GroupTable>,
    },
}

impl Rule {
    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Rule::Cyclic { n } => ((a as u64 + b as u64) % *n as u64) as u32,
            Rule::Dihedral { n } => {
                let n = *n;
                let (ra, sa) = (a % n, a / n);
                let (rb, sb) = (b % n, b / n);
                let r = if sa == 0 { (ra + rb) % n } else { (ra + n - rb) % n };
                r + n * ((sa + sb) % 2)
            }
            Rule::Quaternion { n } => {
                let m = 2 * *n;
                let (ra, sa) = (a % m, a / m);
                let (rb, sb) = (b % m, b / m);
                match (sa, sb) {
                    (0, _) => (ra + rb) % m + m * sb,
                    (_, 0) => (ra + m - rb) % m + m,
                    _ => (ra + m - rb + *n) % m,
                }
            }
            Rule::Perms(set) => {
                let p = set.elems[a as usize].compose(&set.elems[b as usize]);
                set.index_of(&p).expect("permutation set is closed")
            }
            Rule::Product { left, right } => {
                let h = right.len() as u32;
                let l = left.mul(a as usize / h as usize, b as usize / h as usize) as u32;
                let r = right.mul(a as usize % h as usize, b as usize % h as usize) as u32;
                l * h + r
            }
        }
    }
}

/// A finite group on the index set `0..len()`, identity at 0.
///
/// Immutable once built. Element orders and inverses are cached; groups of at
/// most [`TABLE_LIMIT`] elements also cache the full Cayley table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    label: String,
    n: usize,
    rule: Rule,
    table: Option<Vec<u32>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<u32>,
}

impl GroupTable {
    fn from_rule(label: String, n: usize, rule: Rule, generators: Vec<u32>) -> Self {
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    t.push(rule.mul(a, b));
                }
            }
            t
        });
        let mut g = GroupTable {
            label,
            n,
            rule,
            table,
            inv: Vec::new(),
            orders: Vec::new(),
            generators,
        };
        let mut inv = vec![0u32; n];
        let mut orders = vec![0u32; n];
        for x in 0..n {
            // invariant: p = x^k, prev = x^(k-1)
            let (mut p, mut prev, mut k) = (x, 0, 1u32);
            while p != 0 {
                prev = p;
                p = g.mul(p, x);
                k += 1;
            }
            orders[x] = k;
            inv[x] = prev as u32;
        }
        g.inv = inv;
        g.orders = orders;
        g
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.table {
            Some(t) => t[a * self.n + b] as usize,
            None => self.rule.mul(a as u32, b as u32) as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inv[a] as usize
    }

    #[inline]
    pub fn order_of(&self, a: Element) -> u64 {
        self.orders[a] as u64
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// A generating set (possibly empty for the trivial group).
    pub fn generators(&self) -> impl Iterator<Item = Element> + '_ {
        self.generators.iter().map(|&g| g as usize)
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// The permutation behind an element, for permutation groups.
    pub fn permutation(&self, a: Element) -> Option<&Perm> {
        match &self.rule {
            Rule::Perms(set) => set.elems.get(a),
            _ => None,
        }
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let k = k % self.order_of(a);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The elements of `<a>` in the order `e, a, a^2, ..`.
    pub fn powers(&self, a: Element) -> Vec<Element> {
        let o = self.order_of(a) as usize;
        let mut out = Vec::with_capacity(o);
        let mut p = 0;
        for _ in 0..o {
            out.push(p);
            p = self.mul(p, a);
        }
        out
    }

    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commute(&self, x: Element, y: Element) -> bool {
        if let Rule::Perms(set) = &self.rule {
            if self.table.is_none() {
                let (a, b) = (&set.elems[x], &set.elems[y]);
                return a.compose(b) == b.compose(a);
            }
        }
        self.mul(x, y) == self.mul(y, x)
    }

    /// `true` iff `x` lies in `<y>` or `y` lies in `<x>`.
    pub fn in_cyclic_subgroup(&self, x: Element, y: Element) -> bool {
        let (ox, oy) = (self.order_of(x), self.order_of(y));
        (oy % ox == 0 && self.powers(y).contains(&x)) || (ox % oy == 0 && self.powers(x).contains(&y))
    }

    /// Lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<_> = self.generators().collect();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.n)
    }

    /// Every element order is a prime power; equivalently every cyclic
    /// subgroup has prime-power order.
    pub fn all_cyclic_subgroups_prime_power(&self) -> bool {
        self.orders.iter().all(|&o| is_prime_power_or_one(o as u64))
    }

    /// `|G|` is a power of a single prime (the trivial group counts).
    pub fn is_p_group(&self) -> bool {
        is_prime_power_or_one(self.n as u64)
    }

    /// Some element has order equal to the exponent.
    pub fn has_element_of_exponent_order(&self) -> bool {
        let e = self.exponent();
        self.orders.iter().any(|&o| o as u64 == e)
    }

    pub fn center(&self) -> Vec<Element> {
        let gens: Vec<_> = self.generators().collect();
        self.elements()
            .filter(|&z| gens.iter().all(|&g| self.commute(z, g)))
            .collect()
    }

    /// `true` iff some subgroup is isomorphic to `Z_p x Z_p` for a prime `p`:
    /// two commuting elements of the same prime order that do not generate the
    /// same cyclic subgroup.
    pub fn has_elementary_abelian_rank_two(&self) -> bool {
        let prime_order: Vec<Element> = self
            .elements()
            .filter(|&x| crate::arith::is_prime(self.order_of(x)))
            .collect();
        for (i, &x) in prime_order.iter().enumerate() {
            let cyc = self.powers(x);
            for &y in &prime_order[i + 1..] {
                if self.orders[x] == self.orders[y] && self.commute(x, y) && !cyc.contains(&y) {
                    return true;
                }
            }
        }
        false
    }

    /// Checks the group axioms and cached data. Exhaustive for `|G| <= 512`,
    /// otherwise `samples` random triples for associativity.
    pub fn verify_axioms(&self, samples: usize, seed: u64) -> Result<()> {
        let n = self.n;
        let bad = |what: String| Err(Error::invalid(format!("{}: {what}", self.label)));
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return bad(format!("identity law fails at {x}"));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return bad(format!("inverse law fails at {x}"));
            }
            let o = self.order_of(x);
            if self.n as u64 % o != 0 {
                return bad(format!("order {o} of {x} does not divide {n}"));
            }
            let mut p = x;
            for k in 1..o {
                if p == 0 {
                    return bad(format!("{x}^{k} = e before its order {o}"));
                }
                p = self.mul(p, x);
            }
            if p != 0 {
                return bad(format!("{x}^{o} != e"));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return bad(format!("associativity fails at ({a},{b},{c})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return bad(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
        Ok(())
    }
}

fn check_budget(what: &str, requested: u128, budget: usize) -> Result<()> {
    if requested > budget as u128 {
        return Err(Error::budget(what, requested, budget as u128));
    }
    Ok(())
}

/// The cyclic group `Z_n`.
pub fn make_cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::invalid("cyclic group needs n >= 1"));
    }
    check_budget(&format!("Z{n}"), n as u128, DEFAULT_BUDGET)?;
    let gens = if n > 1 { vec![1] } else { vec![] };
    Ok(GroupTable::from_rule(
        format!("Z{n}"),
        n,
        Rule::Cyclic { n: n as u32 },
        gens,
    ))
}

/// The dihedral group of order `two_n`, `<x, y | x^n = y^2 = e, y^-1 x y = x^-1>`.
pub fn make_dihedral(two_n: usize) -> Result<GroupTable> {
    if two_n < 6 || two_n % 2 != 0 {
        return Err(Error::invalid(format!(
            "dihedral order must be even and >= 6, got {two_n}"
        )));
    }
    check_budget(&format!("D{two_n}"), two_n as u128, DEFAULT_BUDGET)?;
    let n = two_n / 2;
    Ok(GroupTable::from_rule(
        format!("D{two_n}"),
        two_n,
        Rule::Dihedral { n: n as u32 },
        vec![1, n as u32],
    ))
}

/// The generalized quaternion group of order `four_n`,
/// `<x, y | x^2n = e, x^n = y^2, y^-1 x y = x^-1>`.
pub fn make_generalized_quaternion(four_n: usize) -> Result<GroupTable> {
    if four_n < 8 || four_n % 4 != 0 {
        return Err(Error::invalid(format!(
            "quaternion order must be a multiple of 4 and >= 8, got {four_n}"
        )));
    }
    check_budget(&format!("Q{four_n}"), four_n as u128, DEFAULT_BUDGET)?;
    let n = four_n / 4;
    Ok(GroupTable::from_rule(
        format!("Q{four_n}"),
        four_n,
        Rule::Quaternion { n: n as u32 },
        vec![1, 2 * n as u32],
    ))
}

fn all_permutations(n: usize, keep: impl Fn(&Perm) -> bool) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = Perm::identity(n);
    loop {
        if keep(&p) {
            out.push(p.clone());
        }
        if !p.next_lex() {
            break;
        }
    }
    out
}

fn perm_group(label: String, degree: usize, elems: Vec<Perm>, gens: &[Perm]) -> GroupTable {
    let set = PermSet::new(degree, elems);
    let generators = gens
        .iter()
        .filter_map(|g| set.index_of(g))
        .filter(|&i| i != 0)
        .collect();
    GroupTable::from_rule(label, set.elems.len(), Rule::Perms(set), generators)
}

/// The symmetric group `S_n`, `1 <= n <= 8`.
pub fn make_symmetric(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::invalid("symmetric group needs n >= 1"));
    }
    if n > PERMUTATION_DEGREE_CAP {
        return Err(Error::budget(
            format!("S{n}"),
            (1..=n as u128).product(),
            (1..=PERMUTATION_DEGREE_CAP as u128).product(),
        ));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[&[0, 1]])?);
        let cycle: Vec<usize> = (0..n).collect();
        gens.push(Perm::from_cycles(n, &[&cycle])?);
    }
    Ok(perm_group(format!("S{n}"), n, all_permutations(n, |_| true), &gens))
}

/// The alternating group `A_n`, `3 <= n <= 8`.
pub fn make_alternating(n: usize) -> Result<GroupTable> {
    if n < 3 {
        return Err(Error::invalid(format!("alternating group needs n >= 3, got {n}")));
    }
    if n > PERMUTATION_DEGREE_CAP {
        return Err(Error::budget(
            format!("A{n}"),
            (1..=n as u128).product::<u128>() / 2,
            (1..=PERMUTATION_DEGREE_CAP as u128).product::<u128>() / 2,
        ));
    }
    let gens = (2..n)
        .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(perm_group(format!("A{n}"), n, all_permutations(n, Perm::is_even), &gens))
}

/// `g x h` with the default budget.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    direct_product_with_budget(g, h, DEFAULT_BUDGET)
}

pub fn direct_product_with_budget(g: &GroupTable, h: &GroupTable, budget: usize) -> Result<GroupTable> {
    let label = format!("{}x{}", g.label, h.label);
    let n = g.len() as u128 * h.len() as u128;
    check_budget(&label, n, budget)?;
    let hn = h.len() as u32;
    let generators = g
        .generators
        .iter()
        .map(|&a| a * hn)
        .chain(h.generators.iter().copied())
        .collect();
    Ok(GroupTable::from_rule(
        label,
        n as usize,
        Rule::Product {
            left: Box::new(g.clone()),
            right: Box::new(h.clone()),
        },
        generators,
    ))
}

/// Closure of a set of degree-`degree` permutations, default budget.
pub fn from_generators(perms: &[Perm], degree: usize) -> Result<GroupTable> {
    from_generators_with_budget(perms, degree, DEFAULT_BUDGET)
}

pub fn from_generators_with_budget(perms: &[Perm], degree: usize, budget: usize) -> Result<GroupTable> {
    for p in perms {
        if p.degree() != degree {
            return Err(Error::invalid(format!(
                "generator {p} has degree {}, expected {degree}",
                p.degree()
            )));
        }
    }
    let identity = Perm::identity(degree);
    let mut seen: HashMap<Perm, u32> = HashMap::new();
    let mut elems = vec![identity.clone()];
    seen.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in perms {
            let next = elems[i].compose(g);
            if seen.contains_key(&next) {
                continue;
            }
            if elems.len() + 1 > budget {
                return Err(Error::budget(
                    format!("closure of {} generators", perms.len()),
                    elems.len() as u128 + 1,
                    budget as u128,
                ));
            }
            seen.insert(next.clone(), elems.len() as u32);
            queue.push_back(elems.len());
            elems.push(next);
        }
    }
    let label = format!("<{}>", perms.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
    Ok(perm_group(label, degree, elems, perms))
}

impl GroupTable {
    /// Relabels the group (used by the catalog for manifest labels).
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

}
