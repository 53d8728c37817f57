//! The classical Prüfer bijection between labelled trees on `0..n` and
//! sequences of length `n - 2` over `0..n`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferSequence {
    n: usize,
    symbols: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, symbols: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::MalformedInput(format!(
                "Prüfer sequences need n >= 2, got {n}"
            )));
        }
        if symbols.len() != n - 2 {
            return Err(Error::MalformedInput(format!(
                "Prüfer sequence for n={n} must have {} symbols, got {}",
                n - 2,
                symbols.len()
            )));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s >= n) {
            return Err(Error::MalformedInput(format!(
                "Prüfer symbol {bad} is outside 0..{n}"
            )));
        }
        Ok(PruferSequence { n, symbols })
    }

    /// Sequence of length `symbols.len()` with `n = len + 2`.
    pub fn from_symbols(symbols: Vec<usize>) -> Result<Self> {
        PruferSequence::new(symbols.len() + 2, symbols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    /// Number of distinct symbols; the decoded tree has `n - distinct` leaves.
    pub fn distinct_symbols(&self) -> usize {
        let mut seen = vec![false; self.n];
        self.symbols.iter().filter(|&&s| !core::mem::replace(&mut seen[s], true)).count()
    }

    /// Every sequence for `n` in lexicographic order (`n^(n-2)` of them).
    pub fn all(n: usize) -> AllSequences {
        AllSequences {
            n,
            next: if n >= 2 { Some(vec![0; n - 2]) } else { None },
        }
    }
}

/// Iterator over all Prüfer sequences of a fixed `n`, see [`PruferSequence::all`].
#[derive(Debug, Clone)]
pub struct AllSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllSequences {
    type Item = PruferSequence;

    fn next(&mut self) -> Option<PruferSequence> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < self.n {
                succ[i] += 1;
                advanced = true;
                break;
            }
            succ[i] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(PruferSequence {
            n: self.n,
            symbols: current,
        })
    }
}

pub fn prufer_decode(seq: &PruferSequence) -> Tree {
    let n = seq.n;
    let mut degree = vec![1usize; n];
    for &s in &seq.symbols {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in &seq.symbols {
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges_unchecked(n, edges)
}

pub fn prufer_encode(t: &Tree) -> PruferSequence {
    let n = t.n();
    let adj = t.adjacency();
    // parent pointers for the tree rooted at n-1
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![n - 1];
    parent[n - 1] = n - 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut symbols = Vec::with_capacity(n.saturating_sub(2));
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for _ in 0..n.saturating_sub(2) {
        let next = parent[leaf];
        symbols.push(next);
        degree[leaf] = 0;
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    PruferSequence { n, symbols }
}
