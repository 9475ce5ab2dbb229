//! Brute-force oracles checked against the optimised constructions.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use supergraph::analytics::*;
use supergraph::catalog::{default_catalog, parse_group};
use supergraph::group::*;
use supergraph::spectrum::*;
use supergraph::supergraph::{build, GraphKind, SuperGraphFamily};
use supergraph::{BaseGraph, DenseGraph, Relation};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Element order by repeated multiplication.
fn naive_order(g: &GroupTable, x: usize) -> u64 {
    let mut p = x;
    let mut k = 1;
    while p != 0 {
        p = g.mul(p, x);
        k += 1;
    }
    k
}

fn cyclic_span(g: &GroupTable, x: usize) -> HashSet<usize> {
    let mut out = HashSet::from([0]);
    let mut p = x;
    while out.insert(p) {
        p = g.mul(p, x);
    }
    out
}

fn naive_base(g: &GroupTable, base: BaseGraph) -> DenseGraph {
    let n = g.len();
    let spans: Vec<HashSet<usize>> = (0..n).map(|x| cyclic_span(g, x)).collect();
    let mut gr = DenseGraph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            let adj = match base {
                BaseGraph::Power => spans[x].contains(&y) || spans[y].contains(&x),
                BaseGraph::EnhancedPower => spans.iter().any(|s| s.contains(&x) && s.contains(&y)),
                BaseGraph::Commuting => g.mul(x, y) == g.mul(y, x),
            };
            if adj {
                gr.add_edge(x, y);
            }
        }
    }
    gr
}

/// Class of every element: full conjugation orbit or order fibre.
fn naive_classes(g: &GroupTable, rel: Relation) -> Vec<BTreeSet<usize>> {
    (0..g.len())
        .map(|x| match rel {
            Relation::Equality => BTreeSet::from([x]),
            Relation::Conjugacy => (0..g.len()).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect(),
            Relation::Order => (0..g.len()).filter(|&y| naive_order(g, y) == naive_order(g, x)).collect(),
        })
        .collect()
}

/// The super graph straight from its definition.
fn naive_super(g: &GroupTable, kind: GraphKind) -> DenseGraph {
    let base = naive_base(g, kind.base);
    let classes = naive_classes(g, kind.relation);
    let mut memo: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let first = |x: usize| *classes[x].iter().next().unwrap();
    let n = g.len();
    let mut gr = DenseGraph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            let key = (first(x).min(first(y)), first(x).max(first(y)));
            let adj = classes[x].contains(&y)
                || *memo.entry(key).or_insert_with(|| {
                    classes[x].iter().any(|&a| classes[y].iter().any(|&b| a != b && base.has_edge(a, b)))
                });
            if adj {
                gr.add_edge(x, y);
            }
        }
    }
    gr
}

#[test]
fn super_graphs_match_definition() {
    let labels = ["Z1", "Z2", "Z12", "D8", "D10", "D12", "Q8", "Q12", "Q16", "S3", "S4", "A4", "Z2xZ2", "Z2xZ4", "S3xZ2", "Q8xZ3"];
    for label in labels {
        let g = parse_group(label).unwrap();
        let fam = SuperGraphFamily::build(&g);
        for kind in GraphKind::all() {
            let expected = naive_super(&g, kind);
            assert_eq!(build(&g, kind), expected, "{label} {kind}");
            assert_eq!(fam.get(kind), &expected, "{label} {kind} (family)");
        }
    }
}

#[test]
fn super_graphs_match_definition_at_order_120() {
    let g = make_symmetric(5).unwrap();
    for kind in GraphKind::all().filter(|k| k.relation != Relation::Equality) {
        assert_eq!(build(&g, kind), naive_super(&g, kind), "S5 {kind}");
    }
}

#[test]
fn cached_orders_match_repeated_multiplication() {
    for label in default_catalog() {
        let g = parse_group(&label).unwrap();
        if g.len() > 720 {
            continue;
        }
        for x in g.elements() {
            assert_eq!(g.order_of(x), naive_order(&g, x), "{label} element {x}");
        }
    }
}

/// Orders of all permutations of degree `n`, enumerated by Heap's algorithm.
fn brute_orders(n: usize, even_only: bool) -> BTreeSet<u64> {
    fn cycle_order(p: &[usize]) -> (u64, bool) {
        let mut seen = vec![false; p.len()];
        let mut order = 1;
        let mut transpositions = 0;
        for s in 0..p.len() {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
                len += 1;
            }
            if len > 0 {
                order = lcm(order, len);
                transpositions += len - 1;
            }
        }
        (order, transpositions % 2 == 0)
    }
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = BTreeSet::new();
    let mut record = |p: &[usize]| {
        let (o, even) = cycle_order(p);
        if even || !even_only {
            out.insert(o);
        }
    };
    record(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 { p.swap(0, i) } else { p.swap(c[i], i) }
            record(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

#[test]
fn symbolic_spectra_match_enumeration() {
    for n in 1..=8 {
        let s: BTreeSet<u64> = spectrum_symmetric(n).unwrap().orders.into_iter().collect();
        assert_eq!(s, brute_orders(n, false), "S{n}");
    }
    for n in 3..=8 {
        let a: BTreeSet<u64> = spectrum_alternating(n).unwrap().orders.into_iter().collect();
        assert_eq!(a, brute_orders(n, true), "A{n}");
    }
}

#[test]
fn explicit_spectra_of_s8_and_a8() {
    let s8 = spectrum_explicit(&make_symmetric(8).unwrap());
    assert_eq!(s8.orders, spectrum_symmetric(8).unwrap().orders);
    assert_eq!(s8.counts, spectrum_symmetric(8).unwrap().counts);
    let a8 = spectrum_explicit(&make_alternating(8).unwrap());
    assert_eq!(a8.counts, spectrum_alternating(8).unwrap().counts);
}

#[test]
fn spectra_are_divisor_closed() {
    for n in 3..=60 {
        for s in [spectrum_symmetric(n).unwrap(), spectrum_alternating(n).unwrap()] {
            let set: HashSet<u64> = s.orders.iter().copied().collect();
            for &d in &s.orders {
                // dividing by one prime at a time reaches every divisor
                let mut rest = d;
                let mut p = 2;
                while rest > 1 {
                    if p * p > rest {
                        p = rest;
                    }
                    if rest % p == 0 {
                        assert!(set.contains(&(d / p)), "{:?} {n}: {} | {d}", s.family, d / p);
                        while rest % p == 0 {
                            rest /= p;
                        }
                    }
                    p += 1;
                }
            }
            let max = *s.orders.last().unwrap();
            let has_exponent_element = s.orders.iter().all(|&d| max % d == 0);
            assert_eq!(s.mu.len() == 1, has_exponent_element, "{:?} {n}", s.family);
        }
    }
}

#[test]
fn dominant_orders_match_dominant_vertices() {
    for label in default_catalog() {
        let g = parse_group(&label).unwrap();
        if g.len() > 200 {
            continue;
        }
        let dcom = build(&g, COMMUTING_O);
        let from_graph: BTreeSet<u64> = dominant_vertices(&dcom).iter().map(|&x| g.order_of(x)).collect();
        let from_orders: BTreeSet<u64> = dominant_orders(&spectrum_explicit(&g)).into_iter().collect();
        assert_eq!(from_graph, from_orders, "{label}");
    }
}

/// Quotient values equal the explicit reduced graph's components and diameter.
fn check_quotient(label: &str, g: &GroupTable, s: &OrderSpectrum) {
    let red = reduced_graph(&build(g, COMMUTING_O));
    let q = quotient_graph(s, true);
    assert_eq!(quotient_components(&q).element_report(), Some(components(&red)), "{label}");
    assert_eq!(quotient_diameter(&q), diameter(&red), "{label}");
}

#[test]
fn quotient_matches_explicit_symmetric_and_alternating() {
    for n in 1..=7 {
        check_quotient(&format!("S{n}"), &make_symmetric(n).unwrap(), &spectrum_symmetric(n).unwrap());
    }
    for n in 3..=7 {
        check_quotient(&format!("A{n}"), &make_alternating(n).unwrap(), &spectrum_alternating(n).unwrap());
    }
}

#[test]
fn quotient_matches_explicit_catalog() {
    for label in default_catalog() {
        let g = parse_group(&label).unwrap();
        check_quotient(&label, &g, &spectrum_explicit(&g));
    }
}

#[test]
fn commuting_pairs_realise_their_lcm() {
    for label in default_catalog() {
        let g = parse_group(&label).unwrap();
        if g.len() > 200 {
            continue;
        }
        let orders: HashSet<u64> = g.elements().map(|x| g.order_of(x)).collect();
        for a in g.elements() {
            for b in g.elements() {
                if g.mul(a, b) == g.mul(b, a) {
                    assert!(orders.contains(&lcm(g.order_of(a), g.order_of(b))), "{label} {a} {b}");
                }
            }
        }
    }
}
