//! Dominant vertices, reduced graphs, connectivity, diameter, and the
//! verifiers for the equality and completeness characterisations.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{BitSet, DenseGraph};
use crate::group::GroupTable;
use crate::supergraph::{BaseGraph, GraphKind, Relation, SuperGraphFamily};

/// Vertices adjacent to every other vertex.
pub fn dominant_vertices(gr: &DenseGraph) -> Vec<usize> {
    let n = gr.n_vertices();
    (0..n).filter(|&v| gr.degree(v) + 1 == n).collect()
}

/// Induced subgraph on the non-dominant vertices (one deletion pass).
pub fn reduced_graph(gr: &DenseGraph) -> DenseGraph {
    let n = gr.n_vertices();
    let keep: Vec<usize> = (0..n).filter(|&v| gr.degree(v) + 1 != n).collect();
    gr.induced(&keep)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub count: usize,
    /// Component sizes, ascending.
    pub sizes: Vec<usize>,
    pub is_connected: bool,
}

impl ComponentReport {
    pub fn from_sizes(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable();
        ComponentReport {
            count: sizes.len(),
            is_connected: sizes.len() <= 1,
            sizes,
        }
    }
}

/// Diameter of a graph. The empty graph has diameter 0 but is flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Empty,
    Finite(u32),
    Disconnected,
}

impl Diameter {
    /// Numeric value; `Some(0)` for the empty graph, `None` when disconnected.
    pub fn value(self) -> Option<u32> {
        match self {
            Diameter::Empty => Some(0),
            Diameter::Finite(d) => Some(d),
            Diameter::Disconnected => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Empty => write!(f, "0"),
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => write!(f, "inf"),
        }
    }
}

/// Breadth-first distances from `src`; `None` for unreachable vertices.
pub fn distances_from(gr: &DenseGraph, src: usize) -> Vec<Option<u32>> {
    let n = gr.n_vertices();
    let mut dist = vec![None; n];
    let mut visited = BitSet::new(n);
    visited.insert(src);
    dist[src] = Some(0);
    let mut frontier = vec![src];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = BitSet::new(n);
        for &u in &frontier {
            next.union_with(gr.row(u));
        }
        frontier.clear();
        for v in next.iter() {
            if !visited.contains(v) {
                visited.insert(v);
                dist[v] = Some(level);
                frontier.push(v);
            }
        }
    }
    dist
}

/// Eccentricity of `src` within its component, and the component size.
fn eccentricity(gr: &DenseGraph, src: usize) -> (u32, usize) {
    let n = gr.n_vertices();
    let words = gr.row(src).len();
    let mut visited = vec![0u64; words];
    visited[src / 64] |= 1 << (src % 64);
    let mut frontier = vec![src];
    let mut reached = 1;
    let mut level = 0;
    let mut next = vec![0u64; words];
    loop {
        next.iter_mut().for_each(|w| *w = 0);
        for &u in &frontier {
            for (a, b) in next.iter_mut().zip(gr.row(u)) {
                *a |= b;
            }
        }
        frontier.clear();
        for (i, (a, v)) in next.iter_mut().zip(visited.iter_mut()).enumerate() {
            let fresh = *a & !*v;
            *v |= fresh;
            let mut w = fresh;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                frontier.push(i * 64 + b);
            }
        }
        if frontier.is_empty() {
            break;
        }
        reached += frontier.len();
        level += 1;
    }
    debug_assert!(reached <= n);
    (level, reached)
}

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
pub fn component_sets(gr: &DenseGraph) -> Vec<Vec<usize>> {
    let n = gr.n_vertices();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = distances_from(gr, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

pub fn components(gr: &DenseGraph) -> ComponentReport {
    ComponentReport::from_sizes(component_sets(gr).iter().map(Vec::len).collect())
}

/// Exact diameter by breadth-first search.
///
/// Vertices with equal closed neighbourhoods have equal eccentricities, so
/// only one vertex per such twin class is used as a source.
pub fn diameter(gr: &DenseGraph) -> Diameter {
    let n = gr.n_vertices();
    if n == 0 {
        return Diameter::Empty;
    }
    let mut reps: HashMap<Vec<u64>, usize> = HashMap::new();
    for v in 0..n {
        let mut closed = gr.row(v).to_vec();
        closed[v / 64] |= 1 << (v % 64);
        reps.entry(closed).or_insert(v);
    }
    let mut sources: Vec<usize> = reps.into_values().collect();
    sources.sort_unstable();
    let (ecc, reached) = eccentricity(gr, sources[0]);
    if reached != n {
        return Diameter::Disconnected;
    }
    let max = sources[1..]
        .par_iter()
        .map(|&s| eccentricity(gr, s).0)
        .max()
        .unwrap_or(0)
        .max(ecc);
    Diameter::Finite(max)
}

/// Edge-set equality on the same vertex set.
pub fn graphs_equal(a: &DenseGraph, b: &DenseGraph) -> bool {
    a.n_vertices() == b.n_vertices() && a.is_subgraph_of(b) && b.is_subgraph_of(a)
}

const fn kind(base: BaseGraph, relation: Relation) -> GraphKind {
    GraphKind::new(base, relation)
}

pub const POWER: GraphKind = kind(BaseGraph::Power, Relation::Equality);
pub const POWER_C: GraphKind = kind(BaseGraph::Power, Relation::Conjugacy);
pub const POWER_O: GraphKind = kind(BaseGraph::Power, Relation::Order);
pub const ENHANCED: GraphKind = kind(BaseGraph::EnhancedPower, Relation::Equality);
pub const ENHANCED_C: GraphKind = kind(BaseGraph::EnhancedPower, Relation::Conjugacy);
pub const ENHANCED_O: GraphKind = kind(BaseGraph::EnhancedPower, Relation::Order);
pub const COMMUTING: GraphKind = kind(BaseGraph::Commuting, Relation::Equality);
pub const COMMUTING_C: GraphKind = kind(BaseGraph::Commuting, Relation::Conjugacy);
pub const COMMUTING_O: GraphKind = kind(BaseGraph::Commuting, Relation::Order);

/// Group-theoretic conditions that predict graph equalities or completeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Always,
    Cyclic,
    Abelian,
    PGroup,
    CyclicPGroup,
    PrimePowerCyclicSubgroups,
    NoElementaryAbelianRankTwo,
    PrimePowerCyclicSubgroupsAndNoElementaryAbelianRankTwo,
    ElementOfExponentOrder,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::Always => "always",
            Condition::Cyclic => "cyclic",
            Condition::Abelian => "abelian",
            Condition::PGroup => "p_group",
            Condition::CyclicPGroup => "cyclic_p_group",
            Condition::PrimePowerCyclicSubgroups => "prime_power_cyclic_subgroups",
            Condition::NoElementaryAbelianRankTwo => "no_elementary_abelian_rank_two",
            Condition::PrimePowerCyclicSubgroupsAndNoElementaryAbelianRankTwo => {
                "prime_power_cyclic_subgroups_and_no_elementary_abelian_rank_two"
            }
            Condition::ElementOfExponentOrder => "element_of_exponent_order",
        }
    }

    pub fn holds(self, g: &GroupTable) -> bool {
        match self {
            Condition::Always => true,
            Condition::Cyclic => g.is_cyclic(),
            Condition::Abelian => g.is_abelian(),
            Condition::PGroup => g.is_p_group(),
            Condition::CyclicPGroup => g.is_cyclic() && g.is_p_group(),
            Condition::PrimePowerCyclicSubgroups => g.all_cyclic_subgroups_prime_power(),
            Condition::NoElementaryAbelianRankTwo => !g.has_elementary_abelian_rank_two(),
            Condition::PrimePowerCyclicSubgroupsAndNoElementaryAbelianRankTwo => {
                g.all_cyclic_subgroups_prime_power() && !g.has_elementary_abelian_rank_two()
            }
            Condition::ElementOfExponentOrder => g.has_element_of_exponent_order(),
        }
    }
}

/// A pair of graphs whose equality is characterised (or left open).
#[derive(Debug, Clone, Copy)]
pub struct EqualityPair {
    pub left: GraphKind,
    pub right: GraphKind,
    pub theorem_id: &'static str,
    pub condition: Option<Condition>,
}

/// All eighteen pairs along the containment rows and columns.
///
/// Pairs with `condition: None` are reported empirically: either no
/// characterisation is known (`theorem_id == "open"`) or the characterising
/// condition is not implemented as a predicate here.
pub const EQUALITY_PAIRS: [EqualityPair; 18] = {
    use Condition::*;
    const fn pair(left: GraphKind, right: GraphKind, theorem_id: &'static str, condition: Option<Condition>) -> EqualityPair {
        EqualityPair { left, right, theorem_id, condition }
    }
    [
        pair(POWER, ENHANCED, "power-eq-enhanced", Some(PrimePowerCyclicSubgroups)),
        pair(ENHANCED, COMMUTING, "enhanced-eq-commuting", Some(NoElementaryAbelianRankTwo)),
        pair(POWER, COMMUTING, "power-eq-commuting", Some(PrimePowerCyclicSubgroupsAndNoElementaryAbelianRankTwo)),
        pair(POWER, POWER_C, "power-eq-conjugacy-power", None),
        pair(ENHANCED, ENHANCED_C, "enhanced-eq-conjugacy-enhanced", None),
        pair(COMMUTING, COMMUTING_C, "commuting-eq-conjugacy-commuting", None),
        pair(POWER, POWER_O, "power-eq-order-power", Some(Cyclic)),
        pair(ENHANCED, ENHANCED_O, "enhanced-eq-order-enhanced", Some(Cyclic)),
        pair(POWER_O, ENHANCED_O, "order-power-eq-order-enhanced", Some(PrimePowerCyclicSubgroups)),
        pair(POWER_C, ENHANCED_C, "conjugacy-power-eq-conjugacy-enhanced", Some(PrimePowerCyclicSubgroups)),
        pair(POWER_O, COMMUTING_O, "order-power-eq-order-commuting", Some(PrimePowerCyclicSubgroups)),
        pair(COMMUTING, COMMUTING_O, "commuting-eq-order-commuting", Some(Abelian)),
        pair(ENHANCED_O, COMMUTING_O, "order-enhanced-eq-order-commuting", Some(Always)),
        pair(ENHANCED_C, COMMUTING_C, "open", None),
        pair(POWER_C, COMMUTING_C, "open", None),
        pair(POWER_C, POWER_O, "open", None),
        pair(ENHANCED_C, ENHANCED_O, "open", None),
        pair(COMMUTING_C, COMMUTING_O, "open", None),
    ]
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityVerdict {
    pub label: String,
    pub pair: (GraphKind, GraphKind),
    pub graphs_equal: bool,
    /// `None` when the pair is reported empirically.
    pub predicted: Option<bool>,
    pub condition_name: Option<String>,
    pub theorem_id: String,
}

impl EqualityVerdict {
    /// `false` only when a prediction exists and disagrees with the graphs.
    pub fn consistent(&self) -> bool {
        self.predicted.is_none_or(|p| p == self.graphs_equal)
    }
}

pub fn verify_equality_theorems(g: &GroupTable) -> Vec<EqualityVerdict> {
    verify_equality_theorems_with(g, &SuperGraphFamily::build(g))
}

pub fn verify_equality_theorems_with(g: &GroupTable, family: &SuperGraphFamily) -> Vec<EqualityVerdict> {
    EQUALITY_PAIRS
        .iter()
        .map(|p| EqualityVerdict {
            label: g.label().to_string(),
            pair: (p.left, p.right),
            graphs_equal: graphs_equal(family.get(p.left), family.get(p.right)),
            predicted: p.condition.map(|c| c.holds(g)),
            condition_name: p.condition.map(|c| c.name().to_string()),
            theorem_id: p.theorem_id.to_string(),
        })
        .collect()
}

/// Completeness characterisations: graph is complete iff condition holds.
pub const COMPLETENESS: [(GraphKind, Condition); 9] = [
    (POWER, Condition::CyclicPGroup),
    (ENHANCED, Condition::Cyclic),
    (POWER_C, Condition::CyclicPGroup),
    (POWER_O, Condition::PGroup),
    (ENHANCED_C, Condition::Cyclic),
    (COMMUTING_O, Condition::ElementOfExponentOrder),
    (COMMUTING_C, Condition::Abelian),
    (COMMUTING, Condition::Abelian),
    (ENHANCED_O, Condition::ElementOfExponentOrder),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessVerdict {
    pub label: String,
    pub graph: GraphKind,
    pub complete: bool,
    pub predicted: bool,
    pub condition_name: String,
}

impl CompletenessVerdict {
    pub fn consistent(&self) -> bool {
        self.complete == self.predicted
    }
}

pub fn verify_completeness(g: &GroupTable) -> Vec<CompletenessVerdict> {
    verify_completeness_with(g, &SuperGraphFamily::build(g))
}

pub fn verify_completeness_with(g: &GroupTable, family: &SuperGraphFamily) -> Vec<CompletenessVerdict> {
    COMPLETENESS
        .iter()
        .map(|&(kind, cond)| CompletenessVerdict {
            label: g.label().to_string(),
            graph: kind,
            complete: family.get(kind).is_complete(),
            predicted: cond.holds(g),
            condition_name: cond.name().to_string(),
        })
        .collect()
}

/// The six containment chains, each as a list of graphs `A ⊆ B ⊆ C`.
pub const CONTAINMENT_CHAINS: [[GraphKind; 3]; 6] = [
    [POWER, ENHANCED, COMMUTING],
    [POWER_C, ENHANCED_C, COMMUTING_C],
    [POWER_O, ENHANCED_O, COMMUTING_O],
    [POWER, POWER_C, POWER_O],
    [ENHANCED, ENHANCED_C, ENHANCED_O],
    [COMMUTING, COMMUTING_C, COMMUTING_O],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentCheck {
    pub label: String,
    pub smaller: GraphKind,
    pub larger: GraphKind,
    pub holds: bool,
}

pub fn check_containments(g: &GroupTable, family: &SuperGraphFamily) -> Vec<ContainmentCheck> {
    CONTAINMENT_CHAINS
        .iter()
        .flat_map(|chain| [(chain[0], chain[1]), (chain[1], chain[2])])
        .map(|(a, b)| ContainmentCheck {
            label: g.label().to_string(),
            smaller: a,
            larger: b,
            holds: family.get(a).is_subgraph_of(family.get(b)),
        })
        .collect()
}

/// Dominant vertices of the order super commuting graph against the set of
/// elements whose order divides `l_G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceCheck {
    pub label: String,
    pub dominant: Vec<usize>,
    pub predicted: Vec<usize>,
    pub l: u64,
}

impl DominanceCheck {
    pub fn consistent(&self) -> bool {
        self.dominant == self.predicted
    }
}

pub fn check_dominance(g: &GroupTable, order_commuting: &DenseGraph) -> DominanceCheck {
    let l = crate::spectrum::spectrum_explicit(g).l();
    DominanceCheck {
        label: g.label().to_string(),
        dominant: dominant_vertices(order_commuting),
        predicted: g.elements().filter(|&x| l % g.order_of(x) == 0).collect(),
        l,
    }
}

/// Everything the harness checks for one explicit group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub label: String,
    pub order: usize,
    pub equalities: Vec<EqualityVerdict>,
    pub completeness: Vec<CompletenessVerdict>,
    pub containments: Vec<ContainmentCheck>,
    pub dominance: DominanceCheck,
}

impl GroupReport {
    pub fn consistent(&self) -> bool {
        self.equalities.iter().all(EqualityVerdict::consistent)
            && self.completeness.iter().all(CompletenessVerdict::consistent)
            && self.containments.iter().all(|c| c.holds)
            && self.dominance.consistent()
    }

    /// Human-readable descriptions of every failed check.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        for v in self.equalities.iter().filter(|v| !v.consistent()) {
            out.push(format!(
                "{}: {} = {} is {} but {} predicts {:?} ({})",
                v.label, v.pair.0, v.pair.1, v.graphs_equal, v.theorem_id, v.predicted, v.condition_name.as_deref().unwrap_or("-")
            ));
        }
        for v in self.completeness.iter().filter(|v| !v.consistent()) {
            out.push(format!(
                "{}: {} complete is {} but {} is {}",
                v.label, v.graph, v.complete, v.condition_name, v.predicted
            ));
        }
        for c in self.containments.iter().filter(|c| !c.holds) {
            out.push(format!("{}: {} is not contained in {}", c.label, c.smaller, c.larger));
        }
        if !self.dominance.consistent() {
            out.push(format!(
                "{}: dominant vertices {:?} differ from orders dividing l = {} ({:?})",
                self.label, self.dominance.dominant, self.dominance.l, self.dominance.predicted
            ));
        }
        out
    }
}

pub fn verify_group(g: &GroupTable) -> GroupReport {
    let family = SuperGraphFamily::build(g);
    GroupReport {
        label: g.label().to_string(),
        order: g.len(),
        equalities: verify_equality_theorems_with(g, &family),
        completeness: verify_completeness_with(g, &family),
        containments: check_containments(g, &family),
        dominance: check_dominance(g, family.get(COMMUTING_O)),
    }
}
