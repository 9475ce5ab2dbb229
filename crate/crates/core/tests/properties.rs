use proptest::prelude::*;
use proptest::sample::select;

use supergraph::analytics::*;
use supergraph::catalog::{default_catalog, parse_group};
use supergraph::graph::DenseGraph;
use supergraph::group::*;
use supergraph::partition::{conjugacy_partition, order_partition};
use supergraph::perm::Perm;
use supergraph::spectrum::*;
use supergraph::supergraph::{super_graph, GraphKind, SuperGraphFamily};
use supergraph::witness::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn small_labels() -> Vec<String> {
    default_catalog()
        .into_iter()
        .filter(|l| parse_group(l).map(|g| g.len() <= 64).unwrap_or(false))
        .collect()
}

fn random_graph(n: usize, edges: &[(usize, usize)]) -> DenseGraph {
    let mut g = DenseGraph::new(n);
    for &(u, v) in edges {
        g.add_edge(u % n, v % n);
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_composition_is_associative(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn perm_order_returns_to_identity(a in perm_strategy(9)) {
        let o = a.order();
        let mut p = Perm::identity(9);
        for k in 1..=o {
            p = p.compose(&a);
            prop_assert_eq!(p.is_identity(), k == o);
        }
    }

    #[test]
    fn product_orders_are_lcms(m in 1usize..12, k in 1usize..12, x in 0usize..144) {
        let g = make_cyclic(m).unwrap();
        let h = make_dihedral(2 * k + 4).unwrap();
        let p = direct_product(&g, &h).unwrap();
        let x = x % p.len();
        let (a, b) = (x / h.len(), x % h.len());
        let l = g.order_of(a) / gcd(g.order_of(a), h.order_of(b)) * h.order_of(b);
        prop_assert_eq!(p.order_of(x), l);
    }

    #[test]
    fn group_axioms_hold(label in select(small_labels()), seed in any::<u64>()) {
        let g = parse_group(&label).unwrap();
        prop_assert!(g.verify_axioms(200, seed).is_ok());
    }

    #[test]
    fn conjugacy_refines_order(label in select(small_labels())) {
        let g = parse_group(&label).unwrap();
        prop_assert!(conjugacy_partition(&g).refines(&order_partition(&g)));
    }

    #[test]
    fn containments_and_order_equality(label in select(small_labels())) {
        let g = parse_group(&label).unwrap();
        let fam = SuperGraphFamily::build(&g);
        for chain in CONTAINMENT_CHAINS {
            prop_assert!(fam.get(chain[0]).is_subgraph_of(fam.get(chain[1])));
            prop_assert!(fam.get(chain[1]).is_subgraph_of(fam.get(chain[2])));
        }
        prop_assert_eq!(fam.get(ENHANCED_O), fam.get(COMMUTING_O));
        // identity dominates every super graph, so each has diameter at most 2
        for (kind, gr) in fam.iter() {
            if kind.relation != supergraph::Relation::Equality || kind == COMMUTING {
                prop_assert!(gr.n_vertices() == 0 || dominant_vertices(gr).contains(&0));
                prop_assert!(diameter(gr).value().unwrap() <= 2);
            }
        }
    }

    #[test]
    fn super_graph_contains_base_and_classes(n in 2usize..40, edges in prop::collection::vec((0usize..40, 0usize..40), 0..60), key in prop::collection::vec(0u8..4, 40)) {
        let base = random_graph(n, &edges);
        let part = supergraph::Partition::from_key(n, |x| key[x]);
        let sup = super_graph(&base, &part);
        prop_assert!(base.is_subgraph_of(&sup));
        prop_assert!(sup.is_symmetric());
        for x in 0..n {
            for y in 0..n {
                if x != y && part.same_class(x, y) {
                    prop_assert!(sup.has_edge(x, y));
                }
            }
        }
        // idempotent: classes already act as cliques joined class-wise
        prop_assert_eq!(super_graph(&sup, &part), sup);
    }

    #[test]
    fn twin_reduced_diameter_matches_all_sources(n in 1usize..30, edges in prop::collection::vec((0usize..30, 0usize..30), 0..80)) {
        let g = random_graph(n, &edges);
        let mut worst = Some(0u32);
        for s in 0..n {
            for d in distances_from(&g, s) {
                worst = match (worst, d) {
                    (Some(w), Some(d)) => Some(w.max(d)),
                    _ => None,
                };
            }
        }
        prop_assert_eq!(diameter(&g).value(), worst);
        let comps = components(&g);
        prop_assert_eq!(comps.sizes.iter().sum::<usize>(), n);
        prop_assert_eq!(comps.is_connected, worst.is_some());
    }

    #[test]
    fn spectrum_invariants(n in 3usize..=60, alt in any::<bool>()) {
        let s = if alt { spectrum_alternating(n).unwrap() } else { spectrum_symmetric(n).unwrap() };
        prop_assert_eq!(s.orders[0], 1);
        for &m in &s.mu {
            prop_assert!(!s.orders.iter().any(|&d| d != m && d % m == 0));
        }
        for &d in &s.orders {
            prop_assert!(s.mu.iter().any(|&m| m % d == 0));
        }
        let l = s.mu.iter().fold(0, |a, &m| gcd(a, m));
        prop_assert_eq!(s.l(), l);
        let q = quotient_graph(&s, false);
        prop_assert!(q.graph.is_symmetric());
        prop_assert_eq!(q.orders.len(), s.orders.len());
    }

    #[test]
    fn complementary_prime_sets_are_valid(n in 4usize..=60, picks in prop::collection::vec(any::<bool>(), 17), alt in any::<bool>()) {
        let family = if alt { Family::Alternating } else { Family::Symmetric };
        let mut t = Vec::new();
        let mut sum = 0;
        for (p, take) in prime_universe(n, family).into_iter().zip(picks) {
            if take && sum + p <= n as u64 {
                t.push(p);
                sum += p;
            }
        }
        prop_assume!(!t.is_empty());
        let tp = find_t_prime(n, &t, family).unwrap();
        let tp_sum: u64 = tp.iter().sum();
        prop_assert!(!tp.is_empty());
        prop_assert!(tp.iter().all(|p| !t.contains(p)));
        prop_assert!(tp_sum <= n as u64 && tp_sum + sum > n as u64);
    }
}

#[test]
fn kinds_are_indexed_in_order() {
    for (i, k) in GraphKind::all().enumerate() {
        assert_eq!(k.index(), i);
    }
}
