//! Reference computations that share no code with the Jacobi solver.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sigtree_core::{SignedCompleteGraph, Tree};

/// Dense integer signed adjacency matrix.
pub fn int_adjacency(g: &SignedCompleteGraph) -> Vec<Vec<i128>> {
    let n = g.n();
    let mut a = vec![vec![1i128; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.negative_edges() {
        a[u][v] = -1;
        a[v][u] = -1;
    }
    a
}

/// Coefficients of det(xI − A), highest degree first, by Faddeev–LeVerrier in
/// exact integer arithmetic.
pub fn char_poly(a: &[Vec<i128>]) -> Vec<i128> {
    let n = a.len();
    let mut coeffs = vec![1i128];
    let mut m = vec![vec![0i128; n]; n];
    let mut c_prev = 1i128;
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{k-1}·I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for l in 0..n {
                    s += a[i][l] * m[l][j];
                }
                next[i][j] = s + if i == j { c_prev } else { 0 };
            }
        }
        m = next;
        // c_k = −tr(A·M_k)/k
        let mut tr = 0i128;
        for i in 0..n {
            for l in 0..n {
                tr += a[i][l] * m[l][i];
            }
        }
        assert_eq!(tr % k as i128, 0, "Faddeev–LeVerrier division must be exact");
        c_prev = -tr / k as i128;
        coeffs.push(c_prev);
    }
    coeffs
}

fn horner(coeffs: &[i128], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs {
        dp = dp * x + p;
        p = p * x + c as f64;
    }
    (p, dp)
}

/// Largest real root of a real-rooted monic polynomial: Newton from above the
/// Cauchy bound converges monotonically downward.
pub fn largest_root(coeffs: &[i128]) -> f64 {
    let bound = 1.0 + coeffs[1..].iter().map(|c| c.abs() as f64).fold(0.0, f64::max);
    let mut x = bound;
    for _ in 0..100_000 {
        let (p, dp) = horner(coeffs, x);
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        x -= step;
        if step.abs() < 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// All real roots, descending, by repeated Newton plus synthetic deflation in
/// floating point. Only for polynomials with simple roots.
pub fn roots_by_deflation(coeffs: &[i128]) -> Vec<f64> {
    let mut poly: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();
    let mut roots = Vec::new();
    while poly.len() > 1 {
        let bound = 1.0 + poly[1..].iter().map(|c| c.abs()).fold(0.0, f64::max);
        let mut x = bound;
        for _ in 0..100_000 {
            let (mut p, mut dp) = (0.0, 0.0);
            for &c in &poly {
                dp = dp * x + p;
                p = p * x + c;
            }
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 * x.abs().max(1.0) {
                break;
            }
        }
        roots.push(x);
        let mut q = Vec::with_capacity(poly.len() - 1);
        let mut acc = 0.0;
        for &c in &poly[..poly.len() - 1] {
            acc = acc * x + c;
            q.push(acc);
        }
        poly = q;
    }
    roots
}

/// λ₁ by power iteration on A + n·I (positive definite, same eigenvectors),
/// followed by deflation against the converged vector to estimate λ₂.
pub fn power_iteration(g: &SignedCompleteGraph, iters: usize) -> (f64, f64) {
    let n = g.n();
    let a = int_adjacency(g);
    let shift = n as f64;
    let apply = |x: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|i| (0..n).map(|j| a[i][j] as f64 * x[j]).sum::<f64>() + shift * x[i])
            .collect()
    };
    let normalize = |x: &mut Vec<f64>| {
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    };
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * i as f64).collect();
    normalize(&mut x);
    for _ in 0..iters {
        x = apply(&x);
        normalize(&mut x);
    }
    let ax = apply(&x);
    let l1 = x.iter().zip(&ax).map(|(a, b)| a * b).sum::<f64>() - shift;
    let mut y: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -0.7 }).collect();
    for _ in 0..iters {
        let d: f64 = y.iter().zip(&x).map(|(a, b)| a * b).sum();
        y.iter_mut().zip(&x).for_each(|(yi, xi)| *yi -= d * xi);
        normalize(&mut y);
        y = apply(&y);
        normalize(&mut y);
    }
    let d: f64 = y.iter().zip(&x).map(|(a, b)| a * b).sum();
    y.iter_mut().zip(&x).for_each(|(yi, xi)| *yi -= d * xi);
    normalize(&mut y);
    let ay = apply(&y);
    let l2 = y.iter().zip(&ay).map(|(a, b)| a * b).sum::<f64>() - shift;
    (l1, l2)
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Tree {
    let symbols: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let seq = sigtree_core::PruferSequence::new(n, symbols).unwrap();
    sigtree_core::prufer_decode(&seq)
}

/// Random signature on K_n: each edge negative with probability 1/2.
pub fn random_signed<R: Rng>(n: usize, rng: &mut R) -> SignedCompleteGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let neg: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    SignedCompleteGraph::new(n, neg).unwrap()
}
