use sigtree_core::search::{enumerate_tree_classes, enumerate_tree_classes_by_prufer, enumerate_with_leaves};

/// Free-tree counts for n = 2..=12, frozen after the Prüfer and
/// level-sequence generators agreed on n ≤ 9.
const CLASS_COUNTS: [usize; 11] = [1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

#[test]
fn class_counts_golden() {
    for (n, &count) in (2..=12).zip(CLASS_COUNTS.iter()) {
        assert_eq!(enumerate_tree_classes(n).unwrap().len(), count, "n={n}");
    }
}

#[test]
fn both_generators_agree_through_eight() {
    for n in 2..=8 {
        let a: Vec<_> = enumerate_tree_classes_by_prufer(n).unwrap().into_iter().map(|c| c.code).collect();
        let b: Vec<_> = enumerate_tree_classes(n).unwrap().into_iter().map(|c| c.code).collect();
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn classes_by_leaf_count() {
    assert_eq!(enumerate_with_leaves(7, 3).unwrap().len(), 3);
    let by_k: Vec<usize> = (2..=8).map(|k| enumerate_with_leaves(9, k).unwrap().len()).collect();
    assert_eq!(by_k, vec![1, 5, 14, 14, 9, 3, 1]);
    for n in 3..=12 {
        let total: usize = (2..n).map(|k| enumerate_with_leaves(n, k).unwrap().len()).sum();
        assert_eq!(total, CLASS_COUNTS[n - 2]);
    }
}
