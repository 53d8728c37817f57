//! Parallel verification sweeps. Work is spread with rayon; results are
//! collected in `(n, k)` order, so the output does not depend on scheduling.

use rayon::prelude::*;
use sigtree_core::search::{
    enumerate_tree_classes, structural_audit, verify_with_classes, SearchReport, StructuralAudit,
    VerifyMode,
};

use crate::report::SearchRecord;

#[derive(Debug, Clone, PartialEq)]
pub struct Verified {
    pub report: SearchReport,
    /// Audit of the argmax tree.
    pub audit: StructuralAudit,
}

impl Verified {
    pub fn record(&self) -> SearchRecord {
        SearchRecord::new(&self.report, &self.audit)
    }

    /// The outcome contradicts the predicted extremal structure: a non-broom
    /// or tied maximiser in the theorem range, a failed audit, or a
    /// `k = n-2` maximiser other than `T_{1,n-3}`.
    pub fn is_discovery(&self) -> bool {
        let r = &self.report;
        let theorem_miss =
            r.mode == VerifyMode::Theorem && (!r.matches_broom || r.is_tie() || !self.audit.passes());
        theorem_miss || r.double_star_endpoint == Some(false)
    }
}

fn audited(report: SearchReport) -> sigtree_core::Result<Verified> {
    let audit = structural_audit(&report.argmax().tree, report.k)?;
    Ok(Verified { report, audit })
}

pub fn verify(n: usize, k: usize) -> sigtree_core::Result<Verified> {
    audited(sigtree_core::verify_theorem1(n, k)?)
}

/// Every `(n, k)` with `n_min ≤ n ≤ n_max` and `2 ≤ k ≤ n-1`, or only the
/// theorem range `3 ≤ k ≤ n-3` when `theorem_only` is set.
pub fn sweep(n_min: usize, n_max: usize, theorem_only: bool) -> sigtree_core::Result<Vec<Verified>> {
    if n_min < 3 || n_min > n_max {
        return Err(sigtree_core::Error::Domain(format!(
            "sweep needs 3 <= n-min <= n-max, got {n_min}..={n_max}"
        )));
    }
    let per_n: Vec<_> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| enumerate_tree_classes(n).map(|c| (n, c)))
        .collect::<Result<_, _>>()?;
    let jobs: Vec<(usize, usize, usize)> = per_n
        .iter()
        .enumerate()
        .flat_map(|(i, (n, _))| {
            let n = *n;
            let ks = if theorem_only { 3..n.saturating_sub(2) } else { 2..n };
            ks.map(move |k| (i, n, k))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(i, n, k)| audited(verify_with_classes(n, k, &per_n[i].1)?))
        .collect()
}
