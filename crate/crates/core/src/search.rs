//! Exhaustive search over free-tree classes.
//!
//! λ₁ of `(K_n, T⁻)` is invariant under relabeling (permutation similarity),
//! so it is enough to evaluate one tree per isomorphism class. Classes come
//! from two independent generators:
//!
//! * Prüfer enumeration of all `n^(n-2)` labelled trees, deduplicated by
//!   canonical code (`n ≤ 9`);
//! * level-sequence generation of free trees after Wright, Richmond,
//!   Odlyzko and McKay, which emits each class exactly once (`n ≤ 12`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::balance::is_balanced;
use crate::canon::{canonical_code, CanonicalTreeCode};
use crate::error::{Error, Result};
use crate::perturb::tree_index;
use crate::prufer::{prufer_decode, prufer_encode, PruferSequence};
use crate::signed::SignedCompleteGraph;
use crate::tree::Tree;

pub const MAX_ORDER: usize = 12;
pub const PRUFER_MAX_ORDER: usize = 9;
/// Classes whose λ₁ is within this of the maximum count as tied.
pub const TIE_TOL: f64 = 1e-9;
/// Successive λ₁ values along the double-star chain must differ by more than this.
pub const CHAIN_GAP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeClass {
    pub code: CanonicalTreeCode,
    pub tree: Tree,
    pub prufer: PruferSequence,
    pub leaf_count: usize,
}

impl TreeClass {
    fn new(tree: Tree) -> Self {
        TreeClass {
            code: canonical_code(&tree),
            prufer: prufer_encode(&tree),
            leaf_count: tree.leaf_count(),
            tree,
        }
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    if !(2..=max).contains(&n) {
        return Err(Error::Domain(format!("n must be in 2..={max}, got {n}")));
    }
    Ok(())
}

/// One representative per free tree on `n` vertices, sorted by canonical code.
pub fn enumerate_tree_classes(n: usize) -> Result<Vec<TreeClass>> {
    check_order(n, MAX_ORDER)?;
    let mut classes: Vec<TreeClass> = FreeTrees::new(n).map(TreeClass::new).collect();
    classes.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(classes)
}

/// Same classes as [`enumerate_tree_classes`], found by decoding every Prüfer
/// sequence. Each class is represented by its lexicographically first sequence.
pub fn enumerate_tree_classes_by_prufer(n: usize) -> Result<Vec<TreeClass>> {
    check_order(n, PRUFER_MAX_ORDER)?;
    let mut seen: BTreeMap<CanonicalTreeCode, Tree> = BTreeMap::new();
    for seq in PruferSequence::all(n) {
        let t = prufer_decode(&seq);
        seen.entry(canonical_code(&t)).or_insert(t);
    }
    Ok(seen
        .into_iter()
        .map(|(code, tree)| TreeClass {
            code,
            prufer: prufer_encode(&tree),
            leaf_count: tree.leaf_count(),
            tree,
        })
        .collect())
}

pub fn enumerate_with_leaves(n: usize, k: usize) -> Result<Vec<TreeClass>> {
    check_leaves(n, k)?;
    Ok(enumerate_tree_classes(n)?
        .into_iter()
        .filter(|c| c.leaf_count == k)
        .collect())
}

fn check_leaves(n: usize, k: usize) -> Result<()> {
    if k < 2 || k + 1 > n {
        return Err(Error::Domain(format!("need 2 <= k <= n-1, got n={n}, k={k}")));
    }
    Ok(())
}

/// Iterator over free trees of order `n`, one per isomorphism class, built
/// from canonical level sequences.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "free trees need n >= 2");
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        FreeTrees {
            layout: Some(layout),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let layout = next_free_layout(self.layout.take()?)?;
        self.layout = next_rooted_layout(&layout, None);
        Some(layout_to_tree(&layout))
    }
}

/// Successor of a level sequence in the rooted-tree order, optionally
/// restarting the increment at position `p`.
fn next_rooted_layout(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted up by one) and the rest of the tree.
fn split_layout(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Returns `candidate` if it is the canonical layout of a free tree rooted at
/// a centre, otherwise the next candidate that is.
fn next_free_layout(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_layout(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_layout(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_layout(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix = new_left_height + 1;
        for (i, slot) in next[len - suffix..].iter_mut().enumerate() {
            *slot = i + 1;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::with_capacity(layout.len());
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                edges.push((top, i));
                break;
            }
        }
        stack.push(i);
    }
    Tree::from_edges_unchecked(layout.len(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// `n ≥ 6` and `3 ≤ k ≤ n-3`: the maximiser is predicted to be the broom.
    Theorem,
    /// `k ∈ {2, n-2, n-1}` or `n < 6`, where the family is trivial or a
    /// double star.
    EdgeCase,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassIndex {
    pub code: CanonicalTreeCode,
    pub tree: Tree,
    pub prufer: PruferSequence,
    pub leaf_count: usize,
    pub lambda1: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub mode: VerifyMode,
    /// Every class with `k` leaves, sorted by canonical code.
    pub classes: Vec<ClassIndex>,
    pub argmax_code: CanonicalTreeCode,
    pub argmax_lambda1: f64,
    /// Codes within [`TIE_TOL`] of the maximum, argmax included.
    pub tied_codes: Vec<CanonicalTreeCode>,
    /// λ₁(argmax) − λ₁(best other class); `None` with a single class.
    pub runner_up_gap: Option<f64>,
    pub broom_code: CanonicalTreeCode,
    pub matches_broom: bool,
    /// `(K_n, argmax⁻)` is balanced. Only the star gives a balanced graph.
    pub argmax_balanced: bool,
    /// For `k = n-2`: whether the argmax is the double star `T_{1,n-3}`.
    pub double_star_endpoint: Option<bool>,
}

impl SearchReport {
    pub fn argmax(&self) -> &ClassIndex {
        self.classes
            .iter()
            .find(|c| c.code == self.argmax_code)
            .expect("argmax is one of the classes")
    }

    pub fn is_tie(&self) -> bool {
        self.tied_codes.len() > 1
    }
}

pub fn verify_mode(n: usize, k: usize) -> VerifyMode {
    if n >= 6 && (3..=n - 3).contains(&k) {
        VerifyMode::Theorem
    } else {
        VerifyMode::EdgeCase
    }
}

/// Evaluates λ₁ over every class with `k` leaves and compares the maximiser
/// with the broom.
pub fn verify_theorem1(n: usize, k: usize) -> Result<SearchReport> {
    if n < 3 {
        return Err(Error::Domain(format!("verification needs n >= 3, got {n}")));
    }
    check_leaves(n, k)?;
    let classes = enumerate_tree_classes(n)?;
    verify_with_classes(n, k, &classes)
}

/// [`verify_theorem1`] over a precomputed class list for order `n`, so one
/// enumeration can serve every `k`.
pub fn verify_with_classes(n: usize, k: usize, classes: &[TreeClass]) -> Result<SearchReport> {
    if n < 3 {
        return Err(Error::Domain(format!("verification needs n >= 3, got {n}")));
    }
    check_leaves(n, k)?;
    let mut indexed = Vec::new();
    for c in classes.iter().filter(|c| c.leaf_count == k) {
        if c.tree.n() != n {
            return Err(Error::Domain(format!(
                "class of order {} in a search for n={n}",
                c.tree.n()
            )));
        }
        indexed.push(ClassIndex {
            code: c.code.clone(),
            tree: c.tree.clone(),
            prufer: c.prufer.clone(),
            leaf_count: c.leaf_count,
            lambda1: tree_index(&c.tree)?,
        });
    }
    indexed.sort_by(|a, b| a.code.cmp(&b.code));
    if indexed.is_empty() {
        return Err(Error::Domain(format!("no trees on {n} vertices with {k} leaves")));
    }
    let best = indexed
        .iter()
        .enumerate()
        .fold(0, |best, (i, c)| if c.lambda1 > indexed[best].lambda1 { i } else { best });
    let argmax_lambda1 = indexed[best].lambda1;
    let argmax_code = indexed[best].code.clone();
    let tied_codes = indexed
        .iter()
        .filter(|c| argmax_lambda1 - c.lambda1 <= TIE_TOL)
        .map(|c| c.code.clone())
        .collect();
    let runner_up_gap = indexed
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, c)| c.lambda1)
        .reduce(f64::max)
        .map(|second| argmax_lambda1 - second);
    let broom_code = canonical_code(&Tree::broom(n, k)?);
    let argmax_balanced = is_balanced(&SignedCompleteGraph::from_tree(&indexed[best].tree));
    let double_star_endpoint = if k + 2 == n && n >= 4 {
        Some(argmax_code == canonical_code(&Tree::double_star(1, n - 3)?))
    } else {
        None
    };
    Ok(SearchReport {
        n,
        k,
        mode: verify_mode(n, k),
        matches_broom: argmax_code == broom_code,
        classes: indexed,
        argmax_code,
        argmax_lambda1,
        tied_codes,
        runner_up_gap,
        broom_code,
        argmax_balanced,
        double_star_endpoint,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainLink {
    pub s: usize,
    pub t: usize,
    pub lambda1: f64,
}

/// λ₁ of `(K_n, T_{s,t}⁻)` for `s = ⌊(n-2)/2⌋, …, 1` and `t = n-2-s`.
pub fn double_star_chain(n: usize) -> Result<Vec<ChainLink>> {
    if n < 6 {
        return Err(Error::Domain(format!("double-star chain needs n >= 6, got {n}")));
    }
    (1..=(n - 2) / 2)
        .rev()
        .map(|s| {
            let t = n - 2 - s;
            Ok(ChainLink {
                s,
                t,
                lambda1: tree_index(&Tree::double_star(s, t)?)?,
            })
        })
        .collect()
}

/// Every successive λ₁ along the chain grows by more than `min_gap`.
pub fn chain_strictly_increasing(chain: &[ChainLink], min_gap: f64) -> bool {
    chain.windows(2).all(|w| w[1].lambda1 - w[0].lambda1 > min_gap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditCheck {
    Pass,
    Fail,
    NotApplicable,
}

impl AuditCheck {
    fn from_bool(ok: bool) -> Self {
        if ok {
            AuditCheck::Pass
        } else {
            AuditCheck::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AuditCheck::Pass => "pass",
            AuditCheck::Fail => "fail",
            AuditCheck::NotApplicable => "n/a",
        }
    }
}

/// Structure of the extremal tree: one hub of degree `k` carrying `k-1`
/// pendant vertices, every other vertex of degree at most 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralAudit {
    pub k: usize,
    /// `3 ≤ k ≤ n-2`; outside that range every check is `NotApplicable`.
    pub applicable: bool,
    pub hub: Option<usize>,
    /// Δ(T) = k.
    pub max_degree_is_k: AuditCheck,
    /// Exactly one vertex has degree k.
    pub unique_hub: AuditCheck,
    /// The hub has exactly k-1 pendant neighbours.
    pub hub_pendant_neighbors: AuditCheck,
    /// Every vertex other than the hub has degree ≤ 2.
    pub others_degree_at_most_two: AuditCheck,
}

impl StructuralAudit {
    pub fn checks(&self) -> [(&'static str, AuditCheck); 4] {
        [
            ("max_degree_is_k", self.max_degree_is_k),
            ("unique_hub", self.unique_hub),
            ("hub_pendant_neighbors", self.hub_pendant_neighbors),
            ("others_degree_at_most_two", self.others_degree_at_most_two),
        ]
    }

    /// No check failed.
    pub fn passes(&self) -> bool {
        self.checks().iter().all(|(_, c)| *c != AuditCheck::Fail)
    }
}

pub fn structural_audit(t: &Tree, k: usize) -> Result<StructuralAudit> {
    let n = t.n();
    if t.leaf_count() != k {
        return Err(Error::Domain(format!(
            "tree has {} leaves, audit expects {k}",
            t.leaf_count()
        )));
    }
    if !(k >= 3 && k + 2 <= n) {
        return Ok(StructuralAudit {
            k,
            applicable: false,
            hub: None,
            max_degree_is_k: AuditCheck::NotApplicable,
            unique_hub: AuditCheck::NotApplicable,
            hub_pendant_neighbors: AuditCheck::NotApplicable,
            others_degree_at_most_two: AuditCheck::NotApplicable,
        });
    }
    let deg = t.degrees();
    let max_degree = deg.iter().copied().max().unwrap_or(0);
    let hubs: Vec<usize> = (0..n).filter(|&v| deg[v] == k).collect();
    let hub = if hubs.len() == 1 { Some(hubs[0]) } else { None };
    let (pendants, others) = match hub {
        Some(h) => (
            AuditCheck::from_bool(t.neighbors(h).iter().filter(|&&w| deg[w] == 1).count() == k - 1),
            AuditCheck::from_bool((0..n).filter(|&v| v != h).all(|v| deg[v] <= 2)),
        ),
        None => (AuditCheck::Fail, AuditCheck::Fail),
    };
    Ok(StructuralAudit {
        k,
        applicable: true,
        hub,
        max_degree_is_k: AuditCheck::from_bool(max_degree == k),
        unique_hub: AuditCheck::from_bool(hub.is_some()),
        hub_pendant_neighbors: pendants,
        others_degree_at_most_two: others,
    })
}
