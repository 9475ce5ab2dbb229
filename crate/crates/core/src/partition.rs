use std::collections::HashMap;
use std::hash::Hash;

use crate::group::{Element, GroupTable};

/// An equivalence partition of `0..n`.
///
/// Classes are numbered by first appearance, so the class of element 0 (the
/// identity in a [`GroupTable`]) is always class 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<u32>,
    classes: Vec<Vec<Element>>,
}

impl Partition {
    /// Groups `0..n` by a key function.
    pub fn from_key<K: Hash + Eq>(n: usize, mut key: impl FnMut(Element) -> K) -> Self {
        let mut ids: HashMap<K, u32> = HashMap::new();
        let class_of: Vec<u32> = (0..n)
            .map(|x| {
                let next = ids.len() as u32;
                *ids.entry(key(x)).or_insert(next)
            })
            .collect();
        Self::from_class_ids(class_of)
    }

    fn from_class_ids(class_of: Vec<u32>) -> Self {
        let k = class_of.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (x, &c) in class_of.iter().enumerate() {
            classes[c as usize].push(x);
        }
        Partition { class_of, classes }
    }

    /// The partition into singletons.
    pub fn equality(n: usize) -> Self {
        Self::from_class_ids((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x] as usize
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[Element] {
        &self.classes[c]
    }

    pub fn same_class(&self, x: Element, y: Element) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// `true` when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.len() == coarser.len()
            && self.classes.iter().all(|class| {
                let c = coarser.class_of(class[0]);
                class.iter().all(|&x| coarser.class_of(x) == c)
            })
    }

    /// Class sizes in class order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Conjugacy classes, computed as orbits of `x -> g x g^-1` over the
/// generators of `g`.
pub fn conjugacy_partition(g: &GroupTable) -> Partition {
    let n = g.len();
    let gens: Vec<Element> = g.generators().collect();
    let mut class_of = vec![u32::MAX; n];
    let mut next = 0u32;
    for start in g.elements() {
        if class_of[start] != u32::MAX {
            continue;
        }
        class_of[start] = next;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &s in &gens {
                let y = g.conjugate(s, x);
                if class_of[y] == u32::MAX {
                    class_of[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    Partition::from_class_ids(class_of)
}

/// Fibres of the element-order map.
pub fn order_partition(g: &GroupTable) -> Partition {
    Partition::from_key(g.len(), |x| g.order_of(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    /// Conjugacy classes by conjugating with every element.
    fn brute_conjugacy(g: &GroupTable) -> Partition {
        Partition::from_key(g.len(), |x| {
            let mut orbit: Vec<_> = g.elements().map(|h| g.conjugate(h, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit
        })
    }

    #[test]
    fn conjugacy_class_sizes() {
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(sorted(conjugacy_partition(&s3).sizes()), vec![1, 2, 3]);
        let q8 = make_generalized_quaternion(8).unwrap();
        assert_eq!(sorted(conjugacy_partition(&q8).sizes()), vec![1, 1, 2, 2, 2]);
        let z12 = make_cyclic(12).unwrap();
        assert!(conjugacy_partition(&z12).sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn generator_orbits_match_full_conjugation() {
        let groups = [
            make_symmetric(4).unwrap(),
            make_alternating(5).unwrap(),
            make_dihedral(12).unwrap(),
            make_generalized_quaternion(24).unwrap(),
            direct_product(&make_symmetric(3).unwrap(), &make_cyclic(2).unwrap()).unwrap(),
        ];
        for g in &groups {
            assert_eq!(conjugacy_partition(g), brute_conjugacy(g), "{}", g.label());
        }
    }

    #[test]
    fn order_classes() {
        let z6 = make_cyclic(6).unwrap();
        let p = order_partition(&z6);
        let by_order: Vec<(u64, usize)> = p
            .classes()
            .iter()
            .map(|c| (z6.order_of(c[0]), c.len()))
            .collect();
        assert_eq!(sorted_pairs(by_order), vec![(1, 1), (2, 1), (3, 2), (6, 2)]);

        let s4 = make_symmetric(4).unwrap();
        let p = order_partition(&s4);
        let by_order: Vec<(u64, usize)> = p
            .classes()
            .iter()
            .map(|c| (s4.order_of(c[0]), c.len()))
            .collect();
        assert_eq!(sorted_pairs(by_order), vec![(1, 1), (2, 9), (3, 8), (4, 6)]);

        let trivial = make_cyclic(1).unwrap();
        assert_eq!(order_partition(&trivial).num_classes(), 1);
    }

    fn sorted_pairs(mut v: Vec<(u64, usize)>) -> Vec<(u64, usize)> {
        v.sort_unstable();
        v
    }

    #[test]
    fn conjugacy_refines_order() {
        let s5 = make_symmetric(5).unwrap();
        let conj = conjugacy_partition(&s5);
        let ord = order_partition(&s5);
        assert!(conj.refines(&ord));
        assert!(!ord.refines(&conj));
        assert!(Partition::equality(s5.len()).refines(&conj));
        assert_eq!(conj.class_of(0), 0);
        assert_eq!(conj.class(0), &[0]);
    }
}
