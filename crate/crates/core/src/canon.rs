//! Isomorphism-invariant codes for free trees.
//!
//! The tree is rooted at its centroid and encoded bottom-up, AHU style: a
//! vertex becomes `(` followed by its children's codes in sorted order and a
//! closing `)`. A bicentroidal tree takes the smaller of its two codes.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::tree::Tree;

/// Balanced-parenthesis code; equal iff the trees are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTreeCode(String);

impl CanonicalTreeCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_code(t: &Tree) -> CanonicalTreeCode {
    let adj = t.adjacency();
    let code = centroids(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c))
        .min()
        .expect("a tree has at least one centroid");
    // the code is pure ASCII parentheses
    CanonicalTreeCode(String::from_utf8(code).expect("ascii"))
}

/// The one or two vertices whose removal leaves no component larger than n/2.
pub(crate) fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let (order, parent) = bfs_order(adj, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut out = Vec::with_capacity(2);
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &w in &adj[v] {
            if w != parent[v] {
                heaviest = heaviest.max(size[w]);
            }
        }
        if 2 * heaviest <= n {
            out.push(v);
        }
    }
    out
}

fn bfs_order(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    (order, parent)
}

fn rooted_code(adj: &[Vec<usize>], root: usize) -> Vec<u8> {
    let n = adj.len();
    let (order, parent) = bfs_order(adj, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids: Vec<Vec<u8>> = adj[v]
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| core::mem::take(&mut codes[w]))
            .collect();
        kids.sort_unstable();
        let len = 2 + kids.iter().map(Vec::len).sum::<usize>();
        let mut code = Vec::with_capacity(len);
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        codes[v] = code;
    }
    core::mem::take(&mut codes[root])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn paths_share_a_code() {
        let a = Tree::path(6).unwrap();
        let b = Tree::from_edges(6, [(3, 0), (0, 5), (5, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_code(&Tree::path(4).unwrap()),
            canonical_code(&Tree::star(4).unwrap())
        );
    }

    #[test]
    fn bicentroidal_code_is_label_free() {
        // P_4 and the double star T_{2,2} both have two centroids
        let ds = Tree::double_star(2, 2).unwrap();
        let flipped = ds.relabel(&[1, 0, 2, 3, 4, 5]).unwrap();
        assert_eq!(canonical_code(&ds), canonical_code(&flipped));
        assert_eq!(centroids(&ds.adjacency()), vec![0, 1]);
    }

    #[test]
    fn broom_code_survives_random_relabeling() {
        let broom = Tree::broom(8, 4).unwrap();
        let code = canonical_code(&broom);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut perm: Vec<usize> = (0..8).collect();
        for _ in 0..200 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&broom.relabel(&perm).unwrap()), code);
        }
    }

    #[test]
    fn separates_named_families() {
        let n = 10;
        let mut trees = vec![Tree::path(n).unwrap(), Tree::star(n).unwrap()];
        for a in 1..=(n - 2) / 2 {
            trees.push(Tree::double_star(a, n - 2 - a).unwrap());
        }
        for k in 3..=n - 3 {
            trees.push(Tree::broom(n, k).unwrap());
        }
        let mut codes: Vec<_> = trees.iter().map(canonical_code).collect();
        let total = codes.len();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), total);
    }
}
