//! Balance, cycle signs and switching.
//!
//! On `K_n` the Harary bipartition is forced by the edges at vertex 0: put
//! `s(0) = +1` and `s(v) = σ(0v)`. The graph is balanced iff every other
//! edge satisfies `σ(uv) = s(u)s(v)`; the first edge that does not closes a
//! negative triangle with vertex 0.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::signed::{Sign, SignedCompleteGraph};

/// Vertex subset to switch at.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchSet {
    members: BTreeSet<usize>,
}

impl SwitchSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&v| v >= n) {
            return Err(Error::Domain(format!("switch vertex {bad} outside 0..{n}")));
        }
        Ok(SwitchSet { members })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// Outcome of the balance test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceWitness {
    /// `side[v]` is true for the part containing vertex 0; negative edges
    /// are exactly the edges across.
    Balanced { side: Vec<bool> },
    /// A triangle whose sign product is negative.
    Unbalanced { triangle: [usize; 3] },
}

impl BalanceWitness {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceWitness::Balanced { .. })
    }
}

/// Product of the edge signs along the closed walk `cycle[0] → … → cycle[0]`.
pub fn cycle_sign(g: &SignedCompleteGraph, cycle: &[usize]) -> Result<Sign> {
    if cycle.len() < 3 {
        return Err(Error::Domain(format!(
            "a cycle needs at least 3 vertices, got {}",
            cycle.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for &v in cycle {
        if v >= g.n() {
            return Err(Error::Domain(format!("cycle vertex {v} outside 0..{}", g.n())));
        }
        if !seen.insert(v) {
            return Err(Error::Domain(format!("vertex {v} repeats in cycle")));
        }
    }
    Ok((0..cycle.len())
        .map(|i| g.sign(cycle[i], cycle[(i + 1) % cycle.len()]))
        .fold(Sign::Positive, |acc, s| acc * s))
}

pub fn balance_witness(g: &SignedCompleteGraph) -> BalanceWitness {
    let n = g.n();
    let side: Vec<bool> = (0..n)
        .map(|v| v == 0 || g.sign(0, v) == Sign::Positive)
        .collect();
    for u in 1..n {
        for v in u + 1..n {
            let expected = if side[u] == side[v] {
                Sign::Positive
            } else {
                Sign::Negative
            };
            if g.sign(u, v) != expected {
                return BalanceWitness::Unbalanced { triangle: [0, u, v] };
            }
        }
    }
    BalanceWitness::Balanced { side }
}

pub fn is_balanced(g: &SignedCompleteGraph) -> bool {
    balance_witness(g).is_balanced()
}

/// Flips every edge with exactly one end in `u`.
pub fn switch(g: &SignedCompleteGraph, u: &SwitchSet) -> SignedCompleteGraph {
    let mut out = g.clone();
    let n = g.n();
    for a in u.members().filter(|&a| a < n) {
        for b in 0..n {
            if b != a && !u.contains(b) {
                out.flip(a, b);
            }
        }
    }
    out
}
