use supergraph::analytics::{distances_from, Diameter};
use supergraph::spectrum::*;
use supergraph::witness::*;

fn reduced(family: Family, n: usize) -> OrderQuotientGraph {
    quotient_graph(&spectrum_family(family, n, DEFAULT_CAP).unwrap(), true)
}

fn primes(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..p).all(|q| p % q != 0)).collect()
}

#[test]
fn documented_degrees_have_witnesses() {
    for (family, n) in [(Family::Symmetric, 9), (Family::Symmetric, 10), (Family::Symmetric, 15), (Family::Symmetric, 16), (Family::Symmetric, 25), (Family::Alternating, 10)] {
        let w = search_witness(n, family).unwrap().unwrap_or_else(|| panic!("{family} {n}"));
        assert_eq!((w.family, w.n), (family, n));
        assert!(w.validate().is_ok());
    }
}

#[test]
fn witness_exists_iff_diameter_three() {
    for family in [Family::Symmetric, Family::Alternating] {
        for n in 4..=45 {
            let q = reduced(family, n);
            if !quotient_components(&q).is_connected {
                continue;
            }
            let d = quotient_diameter(&q);
            assert!(d.value().unwrap() <= 3, "{family} {n}: {d}");
            let w = search_witness(n, family).unwrap();
            assert_eq!(w.is_some(), d == Diameter::Finite(3), "{family} {n}");
        }
    }
}

#[test]
fn predicted_connectivity_matches_quotient() {
    for family in [Family::Symmetric, Family::Alternating] {
        for n in 4..=60 {
            let p = predict_connectivity(n, family).unwrap();
            let c = quotient_components(&reduced(family, n));
            assert_eq!(p.is_connected, c.is_connected, "{family} {n}");
            if (family, n) == (Family::Alternating, 6) {
                // no element of order 6 in degree 6, so order 3 is isolated
                assert_eq!((p.components, c.count), (2, 3));
                assert_eq!(c.orders, vec![vec![2, 4], vec![3], vec![5]]);
            } else {
                assert_eq!(p.components, c.count, "{family} {n}");
            }
        }
    }
}

#[test]
fn every_vertex_is_near_the_smallest_prime_order() {
    for (family, hub) in [(Family::Symmetric, 2), (Family::Alternating, 3)] {
        for n in 4..=60 {
            let q = reduced(family, n);
            if !quotient_components(&q).is_connected {
                continue;
            }
            let src = q.vertex_of(hub).unwrap();
            let far = distances_from(&q.graph, src).iter().filter(|d| d.unwrap() > 2).count();
            assert_eq!(far, 0, "{family} {n}");
        }
    }
}

#[test]
fn complementary_sets_exhaustive_small_degrees() {
    for family in [Family::Symmetric, Family::Alternating] {
        for n in 4..=20usize {
            let universe: Vec<u64> = match family {
                Family::Alternating => {
                    let mut u: Vec<u64> = primes(n as u64).into_iter().filter(|&p| p != 2).collect();
                    u.push(4);
                    u.sort_unstable();
                    u
                }
                _ => primes(n as u64),
            };
            for mask in 1u32..(1 << universe.len()) {
                let t: Vec<u64> = (0..universe.len()).filter(|&i| mask >> i & 1 == 1).map(|i| universe[i]).collect();
                let sum: u64 = t.iter().sum();
                if sum > n as u64 {
                    continue;
                }
                let tp = find_t_prime(n, &t, family).unwrap();
                let tp_sum: u64 = tp.iter().sum();
                assert!(!tp.is_empty() && tp.iter().all(|p| universe.contains(p) && !t.contains(p)), "{family} {n} {t:?} -> {tp:?}");
                assert!(tp_sum <= n as u64 && sum + tp_sum > n as u64, "{family} {n} {t:?} -> {tp:?}");
            }
        }
    }
}

#[test]
fn prime_window_bounds_hold() {
    for n in 2..=1000 {
        let count = primes(n as u64).into_iter().filter(|&p| p > (n / 2) as u64).count();
        assert_eq!(prime_window_count(n).unwrap(), count);
        assert!(count >= prime_window_bound(n), "{n}");
    }
}
