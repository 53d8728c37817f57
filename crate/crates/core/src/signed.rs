//! Signed complete graphs `(K_n, H⁻)`: every pair of distinct vertices is an
//! edge, negative exactly when it belongs to `H`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::tree::{check_permutation, norm_edge, Dsu, Edge, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Positive => "positive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCompleteGraph {
    n: usize,
    negative: BTreeSet<Edge>,
}

impl SignedCompleteGraph {
    pub fn new<I>(n: usize, negative_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 1 {
            return Err(Error::Domain("signed complete graph needs n >= 1".into()));
        }
        let mut negative = BTreeSet::new();
        for (u, v) in negative_edges {
            if u >= n || v >= n || u == v {
                return Err(Error::MalformedInput(format!("{u}-{v} is not an edge of K_{n}")));
            }
            if !negative.insert(norm_edge(u, v)) {
                return Err(Error::MalformedInput(format!("duplicate negative edge {u}-{v}")));
            }
        }
        Ok(SignedCompleteGraph { n, negative })
    }

    /// All-positive `K_n`.
    pub fn all_positive(n: usize) -> Result<Self> {
        SignedCompleteGraph::new(n, [])
    }

    /// `(K_n, T⁻)`: the tree's edges are negative, every other pair positive.
    pub fn from_tree(t: &Tree) -> Self {
        SignedCompleteGraph {
            n: t.n(),
            negative: t.edges().iter().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn sign(&self, u: usize, v: usize) -> Sign {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.negative.contains(&norm_edge(u, v)) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.negative.iter().copied()
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .filter(move |e| !self.negative.contains(e))
    }

    pub fn negative_count(&self) -> usize {
        self.negative.len()
    }

    pub(crate) fn flip(&mut self, u: usize, v: usize) {
        let e = norm_edge(u, v);
        if !self.negative.remove(&e) {
            self.negative.insert(e);
        }
    }

    /// The negative edges as a [`Tree`], when they form a spanning tree.
    pub fn negative_tree(&self) -> Option<Tree> {
        if self.n < 2 || self.negative.len() != self.n - 1 {
            return None;
        }
        let mut dsu = Dsu::new(self.n);
        if self.negative.iter().all(|&(u, v)| dsu.union(u, v)) {
            Some(Tree::from_edges_unchecked(
                self.n,
                self.negative.iter().copied().collect(),
            ))
        } else {
            None
        }
    }

    /// Image under the vertex map `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(self.n, perm)?;
        Ok(SignedCompleteGraph {
            n: self.n,
            negative: self
                .negative
                .iter()
                .map(|&(u, v)| norm_edge(perm[u], perm[v]))
                .collect(),
        })
    }

    /// Dense sign table, `0` on the diagonal.
    pub fn sign_matrix(&self) -> Vec<i8> {
        let n = self.n;
        let mut out = alloc::vec![1i8; n * n];
        for v in 0..n {
            out[v * n + v] = 0;
        }
        for &(u, v) in &self.negative {
            out[u * n + v] = -1;
            out[v * n + u] = -1;
        }
        out
    }
}
