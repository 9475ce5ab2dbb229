//! Dense simple undirected graphs with bitset adjacency rows.

use std::fmt::Write as _;

use rayon::prelude::*;

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A fixed-size bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a |= b;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * WORD + b)
        })
    })
}

/// Simple undirected graph on `0..n` with one adjacency bitset per vertex.
///
/// `labels[v]` records which group element vertex `v` stands for; it is the
/// identity map for freshly built graphs and the surviving element indices
/// after [`DenseGraph::induced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<u32>,
}

impl DenseGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        DenseGraph {
            n,
            words,
            bits: vec![0; n * words],
            labels: (0..n as u32).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from a symmetric predicate, one row per worker task.
    pub fn from_predicate<F>(n: usize, adjacent: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let mut g = Self::new(n);
        let words = g.words;
        if words > 0 {
            g.bits
                .par_chunks_mut(words)
                .enumerate()
                .for_each(|(u, row)| {
                    for v in 0..n {
                        if u != v && adjacent(u, v) {
                            row[v / WORD] |= 1 << (v % WORD);
                        }
                    }
                });
        }
        debug_assert!(g.is_symmetric());
        g
    }

    /// Builds a graph from full rows; self-loops are dropped.
    pub(crate) fn from_rows(n: usize, rows: impl IntoIterator<Item = BitSet>) -> Self {
        let mut g = Self::new(n);
        for (u, row) in rows.into_iter().enumerate() {
            g.row_mut(u).copy_from_slice(row.words());
            g.unset(u, u);
        }
        debug_assert!(g.is_symmetric());
        g
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    fn unset(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] &= !(1 << (v % WORD));
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u != v {
            self.set(u, v);
            self.set(v, u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.unset(u, v);
        self.unset(v, u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, u: usize) -> &mut [u64] {
        let w = self.words;
        &mut self.bits[u * w..(u + 1) * w]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Element index carried by vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v] as usize
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels.iter().map(|&l| l as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) + 1 == self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u)))
    }

    /// Edge-set inclusion; both graphs must have the same vertex count.
    pub fn is_subgraph_of(&self, other: &DenseGraph) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Edges of `self` missing from `other`.
    pub fn edges_not_in<'a>(&'a self, other: &'a DenseGraph) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.edges().filter(move |&(u, v)| !other.has_edge(u, v))
    }

    /// Induced subgraph on `keep` (in the given order); labels are carried over.
    pub fn induced(&self, keep: &[usize]) -> DenseGraph {
        let mut g = DenseGraph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        g.labels = keep.iter().map(|&u| self.labels[u]).collect();
        g
    }

    /// Row-major adjacency as `0`/`1` text, one line per vertex.
    pub fn to_bit_text(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for u in 0..self.n {
            for v in 0..self.n {
                s.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the output of [`DenseGraph::to_bit_text`].
    pub fn from_bit_text(text: &str) -> Option<DenseGraph> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.is_empty()).collect();
        let n = lines.len();
        let mut g = DenseGraph::new(n);
        for (u, line) in lines.iter().enumerate() {
            if line.len() != n {
                return None;
            }
            for (v, c) in line.bytes().enumerate() {
                match c {
                    b'1' if u != v => g.set(u, v),
                    b'0' => {}
                    _ => return None,
                }
            }
        }
        g.is_symmetric().then_some(g)
    }

    /// Graphviz DOT; `vertex_label` renders each vertex.
    pub fn to_dot(&self, name: &str, vertex_label: impl Fn(usize) -> String) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
        for v in 0..self.n {
            let _ = writeln!(s, "  {} [label=\"{}\"];", v, vertex_label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}
