//! Labelled trees on the vertex set `0..n` and the named families used
//! throughout the crate.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Unordered vertex pair, always stored as `(min, max)`.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn norm_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A labelled tree on `n ≥ 2` vertices. Edges are normalized and sorted, so
/// two `Tree`s compare equal exactly when they have the same labelled edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<Edge>,
}

impl Tree {
    /// Validates `edges` as a spanning tree of `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 2 {
            return Err(Error::InvalidTree(format!("need at least 2 vertices, got {n}")));
        }
        let mut list: Vec<Edge> = Vec::with_capacity(n - 1);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidTree(format!(
                    "edge {u}-{v} has a label outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
            list.push(norm_edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTree(format!(
                "repeated edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        if list.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges on {n} vertices, expected {}",
                list.len(),
                n - 1
            )));
        }
        let mut dsu = Dsu::new(n);
        for &(u, v) in &list {
            if !dsu.union(u, v) {
                return Err(Error::InvalidTree(format!("edge {u}-{v} closes a cycle")));
            }
        }
        Ok(Tree { n, edges: list })
    }

    /// Caller guarantees the edges already form a spanning tree.
    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        for e in edges.iter_mut() {
            *e = norm_edge(e.0, e.1);
        }
        edges.sort_unstable();
        Tree { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm_edge(u, v)).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency lists with neighbours in increasing order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Number of pendant vertices (degree exactly one).
    pub fn leaf_count(&self) -> usize {
        self.degrees().into_iter().filter(|&d| d == 1).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Sorted degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// Image of the tree under the vertex map `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        check_permutation(self.n, perm)?;
        Ok(Tree::from_edges_unchecked(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        ))
    }

    /// The star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Tree> {
        if n < 2 {
            return Err(Error::Domain(format!("star needs n >= 2, got {n}")));
        }
        Ok(Tree::from_edges_unchecked(n, (1..n).map(|v| (0, v)).collect()))
    }

    /// The path `0 – 1 – … – n-1`.
    pub fn path(n: usize) -> Result<Tree> {
        if n < 2 {
            return Err(Error::Domain(format!("path needs n >= 2, got {n}")));
        }
        Ok(Tree::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)).collect()))
    }

    /// Double star `T_{a,b}`: adjacent centres 0 and 1 carrying `a` and `b`
    /// pendant vertices, `n = a + b + 2`.
    pub fn double_star(a: usize, b: usize) -> Result<Tree> {
        if a < 1 || b < 1 {
            return Err(Error::Domain(format!(
                "double star needs a >= 1 and b >= 1, got a={a}, b={b}"
            )));
        }
        let n = a + b + 2;
        let mut edges = vec![(0, 1)];
        edges.extend((2..2 + a).map(|v| (0, v)));
        edges.extend((2 + a..n).map(|v| (1, v)));
        Ok(Tree::from_edges_unchecked(n, edges))
    }

    /// Broom on `n` vertices with `k` leaves: hub 0 carries pendant vertices
    /// `1..k-1` and the path `0 – k – k+1 – … – n-1`.
    ///
    /// `broom(n, 2)` is a path and `broom(n, n-1)` is the star.
    pub fn broom(n: usize, k: usize) -> Result<Tree> {
        if n < 3 || k < 2 || k > n - 1 {
            return Err(Error::Domain(format!(
                "broom needs n >= 3 and 2 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        let mut edges: Vec<Edge> = (1..k).map(|v| (0, v)).collect();
        let mut prev = 0;
        for v in k..n {
            edges.push((prev, v));
            prev = v;
        }
        Ok(Tree::from_edges_unchecked(n, edges))
    }

    /// A random labelled tree on `n` vertices with exactly `k` leaves.
    ///
    /// Draws a Prüfer sequence whose symbol set has exactly `n - k` members
    /// (the non-leaves). Not uniform over labelled trees, but every tree with
    /// `k` leaves has positive probability.
    pub fn random_with_leaves<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Tree> {
        if n < 3 || k < 2 || k > n - 1 {
            return Err(Error::Domain(format!(
                "random tree needs n >= 3 and 2 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        let inner = n - k;
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(rng);
        let support = &labels[..inner];
        let mut symbols: Vec<usize> = support.to_vec();
        while symbols.len() < n - 2 {
            symbols.push(support[rng.gen_range(0..inner)]);
        }
        symbols.shuffle(rng);
        let seq = crate::prufer::PruferSequence::new(n, symbols)?;
        Ok(crate::prufer::prufer_decode(&seq))
    }
}

pub(crate) fn check_permutation(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Domain(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Domain(format!("not a permutation of 0..{n}")));
        }
        seen[p] = true;
    }
    Ok(())
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_edge_sets() {
        assert!(Tree::from_edges(1, []).is_err());
        assert!(matches!(
            Tree::from_edges(3, [(0, 1), (1, 3)]),
            Err(Error::InvalidTree(_))
        ));
        assert!(Tree::from_edges(3, [(0, 0), (1, 2)]).is_err());
        assert!(Tree::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Tree::from_edges(4, [(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(4, [(0, 1), (2, 3)]).is_err());
        assert!(Tree::from_edges(4, [(3, 1), (1, 0), (2, 1)]).is_ok());
    }

    #[test]
    fn leaf_counts_of_named_families() {
        assert_eq!(Tree::path(6).unwrap().leaf_count(), 2);
        assert_eq!(Tree::star(6).unwrap().leaf_count(), 5);
        let ds = Tree::double_star(2, 2).unwrap();
        assert_eq!(ds.n(), 6);
        assert_eq!(ds.leaf_count(), 4);
    }

    #[test]
    fn broom_degenerate_cases() {
        assert_eq!(Tree::broom(6, 5).unwrap(), Tree::star(6).unwrap());
        let b = Tree::broom(6, 2).unwrap();
        assert_eq!(b.degree_sequence(), vec![1, 1, 2, 2, 2, 2]);
        assert_eq!(b.max_degree(), 2);
        assert_eq!(
            Tree::broom(7, 3).unwrap().degree_sequence(),
            vec![1, 1, 1, 2, 2, 2, 3]
        );
        assert!(Tree::broom(6, 1).is_err());
        assert!(Tree::broom(6, 6).is_err());
        assert!(Tree::double_star(0, 3).is_err());
    }

    #[test]
    fn broom_has_single_hub_of_degree_k() {
        for n in 5..14 {
            for k in 3..=n - 2 {
                let t = Tree::broom(n, k).unwrap();
                let deg = t.degrees();
                assert_eq!(t.leaf_count(), k);
                assert_eq!(deg.iter().filter(|&&d| d == k).count(), 1, "n={n} k={k}");
                assert_eq!(t.max_degree(), k);
            }
        }
    }

    #[test]
    fn random_trees_have_requested_leaves() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..12 {
            for k in 2..n {
                for _ in 0..5 {
                    let t = Tree::random_with_leaves(n, k, &mut rng).unwrap();
                    assert_eq!(t.leaf_count(), k);
                }
            }
        }
    }

    #[test]
    fn relabel_checks_permutation() {
        let t = Tree::path(4).unwrap();
        assert!(t.relabel(&[0, 1, 1, 2]).is_err());
        let r = t.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r, t);
        let r = t.relabel(&[1, 0, 2, 3]).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }
}
