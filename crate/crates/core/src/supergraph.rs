//! Power, enhanced power and commuting graphs and their super graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm};
use crate::error::Error;
use crate::graph::{BitSet, DenseGraph};
use crate::group::GroupTable;
use crate::partition::{conjugacy_partition, order_partition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseGraph {
    Power,
    EnhancedPower,
    Commuting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equality,
    Conjugacy,
    Order,
}

/// One of the nine `B super A` graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphKind {
    pub base: BaseGraph,
    pub relation: Relation,
}

impl BaseGraph {
    pub const ALL: [BaseGraph; 3] = [BaseGraph::Power, BaseGraph::EnhancedPower, BaseGraph::Commuting];

    fn symbol(self) -> &'static str {
        match self {
            BaseGraph::Power => "P",
            BaseGraph::EnhancedPower => "Pe",
            BaseGraph::Commuting => "Com",
        }
    }
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Equality, Relation::Conjugacy, Relation::Order];
}

impl GraphKind {
    pub const fn new(base: BaseGraph, relation: Relation) -> Self {
        GraphKind { base, relation }
    }

    pub fn all() -> impl Iterator<Item = GraphKind> {
        BaseGraph::ALL
            .into_iter()
            .flat_map(|b| Relation::ALL.into_iter().map(move |r| GraphKind::new(b, r)))
    }

    /// Position in [`GraphKind::all`].
    pub fn index(self) -> usize {
        let b = BaseGraph::ALL.iter().position(|&x| x == self.base).unwrap();
        let r = Relation::ALL.iter().position(|&x| x == self.relation).unwrap();
        3 * b + r
    }
}

/// Short names: `P`, `Pe^c`, `Com^o`, ...
impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sup = match self.relation {
            Relation::Equality => "",
            Relation::Conjugacy => "^c",
            Relation::Order => "^o",
        };
        write!(f, "{}{}", self.base.symbol(), sup)
    }
}

impl FromStr for BaseGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "power" => Ok(BaseGraph::Power),
            "enhanced_power" | "enhanced" => Ok(BaseGraph::EnhancedPower),
            "commuting" => Ok(BaseGraph::Commuting),
            other => Err(Error::invalid(format!("unknown graph {other:?}"))),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "equality" => Ok(Relation::Equality),
            "conjugacy" => Ok(Relation::Conjugacy),
            "order" => Ok(Relation::Order),
            other => Err(Error::invalid(format!("unknown relation {other:?}"))),
        }
    }
}

/// `x ~ y` iff one is a power of the other.
pub fn power_graph(g: &GroupTable) -> DenseGraph {
    let mut gr = DenseGraph::new(g.len());
    for y in g.elements() {
        for x in g.powers(y) {
            gr.add_edge(x, y);
        }
    }
    gr
}

/// `x ~ y` iff both lie in one cyclic subgroup.
pub fn enhanced_power_graph(g: &GroupTable) -> DenseGraph {
    let n = g.len();
    let mut gr = DenseGraph::new(n);
    let mut seen = vec![false; n];
    // Largest orders first so most smaller cyclic subgroups are skipped as
    // already covered by a generator.
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.order_of(x)));
    for z in by_order {
        if seen[z] {
            continue;
        }
        let pw = g.powers(z);
        let o = pw.len() as u64;
        for (k, &x) in pw.iter().enumerate() {
            if gcd(k as u64, o) == 1 {
                seen[x] = true;
            }
        }
        let members = BitSet::from_indices(n, pw.iter().copied());
        for &x in &pw {
            for (a, b) in gr.row_mut(x).iter_mut().zip(members.words()) {
                *a |= b;
            }
        }
    }
    for x in 0..n {
        gr.remove_edge(x, x);
    }
    gr
}

/// `x ~ y` iff `xy = yx`.
pub fn commuting_graph(g: &GroupTable) -> DenseGraph {
    DenseGraph::from_predicate(g.len(), |x, y| g.commute(x, y))
}

pub fn base_graph(g: &GroupTable, base: BaseGraph) -> DenseGraph {
    match base {
        BaseGraph::Power => power_graph(g),
        BaseGraph::EnhancedPower => enhanced_power_graph(g),
        BaseGraph::Commuting => commuting_graph(g),
    }
}

pub fn relation_partition(g: &GroupTable, relation: Relation) -> Partition {
    match relation {
        Relation::Equality => Partition::equality(g.len()),
        Relation::Conjugacy => conjugacy_partition(g),
        Relation::Order => order_partition(g),
    }
}

/// Class-level adjacency of `base` under `part`, reflexive.
fn class_adjacency(base: &DenseGraph, part: &Partition) -> Vec<BitSet> {
    let n = base.n_vertices();
    let k = part.num_classes();
    let mut adj: Vec<BitSet> = (0..k)
        .map(|c| BitSet::from_indices(k, [c]))
        .collect();
    if k * k <= 4 * n.max(1) {
        // few classes: union each class's rows, then intersect with the others
        let members: Vec<BitSet> = part
            .classes()
            .iter()
            .map(|c| BitSet::from_indices(n, c.iter().copied()))
            .collect();
        for (c, class) in part.classes().iter().enumerate() {
            let mut reach = BitSet::new(n);
            for &u in class {
                reach.union_with(base.row(u));
            }
            for (d, m) in members.iter().enumerate() {
                if reach.words().iter().zip(m.words()).any(|(a, b)| a & b != 0) {
                    adj[c].insert(d);
                }
            }
        }
    } else {
        for u in 0..n {
            let cu = part.class_of(u);
            for v in base.neighbors(u) {
                adj[cu].insert(part.class_of(v));
            }
        }
    }
    adj
}

/// Expands a reflexive class adjacency back to the element level.
fn expand(part: &Partition, adj: &[BitSet]) -> DenseGraph {
    let n = part.len();
    let members: Vec<BitSet> = part
        .classes()
        .iter()
        .map(|c| BitSet::from_indices(n, c.iter().copied()))
        .collect();
    let class_rows: Vec<BitSet> = adj
        .iter()
        .map(|row| {
            let mut r = BitSet::new(n);
            for d in row.iter() {
                r.union_with(members[d].words());
            }
            r
        })
        .collect();
    DenseGraph::from_rows(n, (0..n).map(|u| class_rows[part.class_of(u)].clone()))
}

/// The super graph of `base` for the partition `part`: distinct `x`, `y` are
/// adjacent iff they share a class or their classes contain an adjacent pair.
pub fn super_graph(base: &DenseGraph, part: &Partition) -> DenseGraph {
    assert_eq!(base.n_vertices(), part.len(), "partition must cover the vertex set");
    expand(part, &class_adjacency(base, part))
}

/// Order super commuting graph through the order spectrum: `x ~ y` iff
/// `lcm(o(x), o(y))` is an element order.
fn order_super_commuting(g: &GroupTable) -> DenseGraph {
    let part = order_partition(g);
    let orders: Vec<u64> = part.classes().iter().map(|c| g.order_of(c[0])).collect();
    let k = orders.len();
    let adj: Vec<BitSet> = (0..k)
        .map(|c| {
            BitSet::from_indices(
                k,
                (0..k).filter(|&d| orders.contains(&lcm(orders[c], orders[d]))),
            )
        })
        .collect();
    expand(&part, &adj)
}

/// Builds one of the nine graphs.
///
/// The equality relation returns the base graph. The order super commuting
/// graph is computed from element orders alone, since its class-to-class
/// adjacency depends only on whether the lcm of the two orders is realised.
pub fn build(g: &GroupTable, kind: GraphKind) -> DenseGraph {
    match (kind.base, kind.relation) {
        (base, Relation::Equality) => base_graph(g, base),
        (BaseGraph::Commuting, Relation::Order) => order_super_commuting(g),
        (base, rel) => super_graph(&base_graph(g, base), &relation_partition(g, rel)),
    }
}

/// All nine graphs of one group, each built by the generic super graph route.
#[derive(Debug, Clone)]
pub struct SuperGraphFamily {
    graphs: Vec<DenseGraph>,
}

impl SuperGraphFamily {
    pub fn build(g: &GroupTable) -> Self {
        let conj = conjugacy_partition(g);
        let ord = order_partition(g);
        let mut graphs = Vec::with_capacity(9);
        for base in BaseGraph::ALL {
            let b = base_graph(g, base);
            let c = super_graph(&b, &conj);
            let o = super_graph(&b, &ord);
            graphs.extend([b, c, o]);
        }
        SuperGraphFamily { graphs }
    }

    pub fn get(&self, kind: GraphKind) -> &DenseGraph {
        &self.graphs[kind.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (GraphKind, &DenseGraph)> {
        GraphKind::all().zip(self.graphs.iter())
    }
}
