//! Sign rotations and a hill climb over negative spanning trees.
//!
//! A rotation reverses one positive and one negative edge at once. With `X`
//! a unit eigenvector for λ₁, flipping positive `rs` to negative changes
//! `XᵀAX` by `−4·x_r·x_s` and flipping negative `tu` to positive changes it by
//! `+4·x_t·x_u`. When the net change is non-negative the Rayleigh quotient,
//! and hence λ₁, cannot drop. The two move types below are the cases where
//! the negative edge shares the vertex `r` (type I) or is disjoint (type II).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::signed::{Sign, SignedCompleteGraph};
use crate::spectra::{adjacency_matrix, eigen_decompose, TopEigenvector};
use crate::tree::{norm_edge, Dsu, Edge, Tree};

/// λ₁ must grow by more than this for a climb step to count.
pub const IMPROVEMENT_TOL: f64 = 1e-10;
/// Largest residual `‖A·X − λ₁·X‖₂` accepted for a supplied eigenvector.
pub const EIGENVECTOR_RESIDUAL_TOL: f64 = 1e-8;
/// Eigenvector entries (or differences of entries) at or below this size are
/// treated as zero when deciding strictness; Jacobi eigenvectors carry
/// roundoff of roughly 1e-14 at these sizes.
pub const STRICT_ENTRY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationKind {
    TypeI,
    TypeII,
}

impl RotationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RotationKind::TypeI => "type_i",
            RotationKind::TypeII => "type_ii",
        }
    }
}

impl fmt::Display for RotationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RotationMove {
    /// Positive `rs` becomes negative, negative `rt` becomes positive.
    TypeI { r: usize, s: usize, t: usize },
    /// Positive `rs` becomes negative, negative `tu` becomes positive.
    TypeII { r: usize, s: usize, t: usize, u: usize },
}

impl RotationMove {
    pub fn kind(&self) -> RotationKind {
        match self {
            RotationMove::TypeI { .. } => RotationKind::TypeI,
            RotationMove::TypeII { .. } => RotationKind::TypeII,
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            RotationMove::TypeI { r, s, t } => vec![r, s, t],
            RotationMove::TypeII { r, s, t, u } => vec![r, s, t, u],
        }
    }

    /// The positive edge that turns negative.
    pub fn positive_edge(&self) -> Edge {
        match *self {
            RotationMove::TypeI { r, s, .. } | RotationMove::TypeII { r, s, .. } => {
                norm_edge(r, s)
            }
        }
    }

    /// The negative edge that turns positive.
    pub fn negative_edge(&self) -> Edge {
        match *self {
            RotationMove::TypeI { r, t, .. } => norm_edge(r, t),
            RotationMove::TypeII { t, u, .. } => norm_edge(t, u),
        }
    }

    /// The move that undoes this one on the rotated graph.
    pub fn inverse(&self) -> RotationMove {
        match *self {
            RotationMove::TypeI { r, s, t } => RotationMove::TypeI { r, s: t, t: s },
            RotationMove::TypeII { r, s, t, u } => RotationMove::TypeII {
                r: t,
                s: u,
                t: r,
                u: s,
            },
        }
    }

    fn check_vertices(&self, n: usize) -> Result<()> {
        let vs = self.vertices();
        for (i, &v) in vs.iter().enumerate() {
            if v >= n {
                return Err(Error::Domain(format!("move vertex {v} outside 0..{n}")));
            }
            if vs[..i].contains(&v) {
                return Err(Error::Domain(format!("move vertices must be distinct, {v} repeats")));
            }
        }
        Ok(())
    }

    /// Checks distinctness and the required sign pattern on `g`.
    pub fn validate(&self, g: &SignedCompleteGraph) -> Result<()> {
        self.check_vertices(g.n())?;
        let (a, b) = self.positive_edge();
        if g.sign(a, b) != Sign::Positive {
            return Err(Error::SignMismatch {
                u: a,
                v: b,
                expected: Sign::Positive,
            });
        }
        let (a, b) = self.negative_edge();
        if g.sign(a, b) != Sign::Negative {
            return Err(Error::SignMismatch {
                u: a,
                v: b,
                expected: Sign::Negative,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RotationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RotationMove::TypeI { r, s, t } => write!(f, "type_i(r={r}, s={s}, t={t})"),
            RotationMove::TypeII { r, s, t, u } => {
                write!(f, "type_ii(r={r}, s={s}, t={t}, u={u})")
            }
        }
    }
}

pub fn apply_rotation(g: &SignedCompleteGraph, m: &RotationMove) -> Result<SignedCompleteGraph> {
    m.validate(g)?;
    let mut out = g.clone();
    let (a, b) = m.positive_edge();
    out.flip(a, b);
    let (a, b) = m.negative_edge();
    out.flip(a, b);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PreconditionReport {
    pub kind: RotationKind,
    /// The monotonicity condition on the eigenvector entries holds.
    pub satisfied: bool,
    /// The condition holds with at least one strict inequality (type I) or a
    /// nonzero entry (type II); λ₁ then strictly increases.
    pub strict: bool,
    /// `(x_r, x_s, x_t)` or `(x_r, x_s, x_t, x_u)`.
    pub entries: Vec<f64>,
    /// Copied from the eigenvector: λ₁ was numerically repeated.
    pub degenerate: bool,
}

/// Evaluates the eigenvector condition of move `m` on `g`.
///
/// Type I holds when `x_r ≥ 0, x_t ≥ x_s` or `x_r ≤ 0, x_t ≤ x_s`; type II
/// when `x_r·x_s ≤ x_t·x_u`. Strictness ignores entries within
/// [`STRICT_ENTRY_TOL`] of zero.
pub fn check_precondition(
    g: &SignedCompleteGraph,
    m: &RotationMove,
    top: &TopEigenvector,
) -> Result<PreconditionReport> {
    m.validate(g)?;
    if top.vector.len() != g.n() {
        return Err(Error::Domain(format!(
            "eigenvector has {} entries, graph has {} vertices",
            top.vector.len(),
            g.n()
        )));
    }
    let residual = adjacency_matrix(g).residual(top.lambda1, &top.vector);
    let norm = libm::sqrt(top.vector.iter().map(|x| x * x).sum());
    if residual.is_nan() || residual > EIGENVECTOR_RESIDUAL_TOL || (norm - 1.0).abs() > 1e-8 {
        return Err(Error::StaleEigenvector { residual });
    }
    let x = &top.vector;
    let entries: Vec<f64> = m.vertices().iter().map(|&v| x[v]).collect();
    let (satisfied, strict) = match *m {
        RotationMove::TypeI { r, s, t } => {
            let (xr, xs, xt) = (x[r], x[s], x[t]);
            let satisfied = (xr >= 0.0 && xt >= xs) || (xr <= 0.0 && xt <= xs);
            let strict = satisfied && (xr.abs() > STRICT_ENTRY_TOL || (xt - xs).abs() > STRICT_ENTRY_TOL);
            (satisfied, strict)
        }
        RotationMove::TypeII { r, s, t, u } => {
            let satisfied = x[r] * x[s] <= x[t] * x[u];
            let strict = satisfied && entries.iter().any(|e| e.abs() > STRICT_ENTRY_TOL);
            (satisfied, strict)
        }
    };
    Ok(PreconditionReport {
        kind: m.kind(),
        satisfied,
        strict,
        entries,
        degenerate: top.degenerate,
    })
}

/// Every rotation of `(K_n, T⁻)` whose result is again a spanning tree with
/// `k` leaves.
///
/// Order: type I moves by `(r, s, t)`, then type II moves by `(r, s, t, u)`
/// with `r < s` and `t < u`, both lexicographic.
pub fn tree_moves(t: &Tree, k: usize) -> Vec<RotationMove> {
    let n = t.n();
    let adj = t.adjacency();
    let mut out = Vec::new();
    for (r, nbrs) in adj.iter().enumerate() {
        for s in 0..n {
            if s == r || t.contains_edge(r, s) {
                continue;
            }
            for &tv in nbrs {
                if tv == s {
                    continue;
                }
                let m = RotationMove::TypeI { r, s, t: tv };
                if stays_in_family(t, &m, k) {
                    out.push(m);
                }
            }
        }
    }
    for r in 0..n {
        for s in r + 1..n {
            if t.contains_edge(r, s) {
                continue;
            }
            for &(tv, u) in t.edges() {
                if tv == r || tv == s || u == r || u == s {
                    continue;
                }
                let m = RotationMove::TypeII { r, s, t: tv, u };
                if stays_in_family(t, &m, k) {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn swapped_edges(t: &Tree, m: &RotationMove) -> Vec<Edge> {
    let removed = m.negative_edge();
    let mut edges: Vec<Edge> = t.edges().iter().copied().filter(|&e| e != removed).collect();
    edges.push(m.positive_edge());
    edges
}

fn stays_in_family(t: &Tree, m: &RotationMove, k: usize) -> bool {
    let n = t.n();
    let edges = swapped_edges(t, m);
    let mut dsu = Dsu::new(n);
    let mut deg = vec![0usize; n];
    for &(a, b) in &edges {
        if !dsu.union(a, b) {
            return false;
        }
        deg[a] += 1;
        deg[b] += 1;
    }
    deg.iter().filter(|&&d| d == 1).count() == k
}

/// Index of `(K_n, T⁻)` from eigenvalues only.
pub(crate) fn tree_index(t: &Tree) -> Result<f64> {
    let a = adjacency_matrix(&SignedCompleteGraph::from_tree(t));
    Ok(eigen_decompose(&a, false)?.values[0])
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClimbStep {
    /// 1-based step number.
    pub step: usize,
    pub mv: RotationMove,
    /// λ₁ after the move.
    pub lambda1: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClimbOutcome {
    pub tree: Tree,
    pub lambda1: f64,
    pub start_lambda1: f64,
    pub trace: Vec<ClimbStep>,
    /// No improving move exists from `tree`; false when `max_steps` cut the climb short.
    pub local_max: bool,
}

/// First-improvement ascent over negative spanning trees with `k` leaves.
///
/// Each step takes the first move of [`tree_moves`] that raises λ₁ by more
/// than [`IMPROVEMENT_TOL`], so the recorded λ₁ values strictly increase.
pub fn hill_climb(n: usize, k: usize, start: &Tree, max_steps: usize) -> Result<ClimbOutcome> {
    if start.n() != n {
        return Err(Error::Domain(format!(
            "start tree has {} vertices, expected {n}",
            start.n()
        )));
    }
    if k < 2 || k + 1 > n {
        return Err(Error::Domain(format!("need 2 <= k <= n-1, got n={n}, k={k}")));
    }
    if start.leaf_count() != k {
        return Err(Error::Domain(format!(
            "start tree has {} leaves, expected {k}",
            start.leaf_count()
        )));
    }
    let start_lambda1 = tree_index(start)?;
    let mut tree = start.clone();
    let mut lambda1 = start_lambda1;
    let mut trace = Vec::new();
    let mut local_max = false;
    while trace.len() < max_steps {
        let mut improved = false;
        for m in tree_moves(&tree, k) {
            let next = Tree::from_edges_unchecked(n, swapped_edges(&tree, &m));
            let value = tree_index(&next)?;
            if value > lambda1 + IMPROVEMENT_TOL {
                tree = next;
                lambda1 = value;
                trace.push(ClimbStep {
                    step: trace.len() + 1,
                    mv: m,
                    lambda1,
                });
                improved = true;
                break;
            }
        }
        if !improved {
            local_max = true;
            break;
        }
    }
    if !local_max && trace.len() == max_steps {
        // the cap was hit exactly at a local maximum only if no move improves
        local_max = tree_moves(&tree, k).iter().all(|m| {
            let next = Tree::from_edges_unchecked(n, swapped_edges(&tree, m));
            tree_index(&next).is_ok_and(|v| v <= lambda1 + IMPROVEMENT_TOL)
        });
    }
    Ok(ClimbOutcome {
        tree,
        lambda1,
        start_lambda1,
        trace,
        local_max,
    })
}
