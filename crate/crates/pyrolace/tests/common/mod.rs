//! Shared oracles and enumeration helpers for the integration suites.
//! Everything here is deliberately independent of the library's solver
//! paths: determinants come from fraction-free elimination, subsets and
//! tuples from plain recursive enumeration.

use num_bigint::BigInt;
use num_traits::Zero;
use pyrolace::{Graph, IntMatrix};

/// Number of vertex pairs of an `n`-vertex graph.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Graph from an edge bitmask over the pairs `(0,1), (0,2), …` in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("mask edges are valid")
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // divides exactly in Bareiss
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// `det(xI − A)` via Bareiss: the independent oracle for the characteristic
/// polynomial evaluated at an integer point.
pub fn char_value_oracle(a: &IntMatrix, x: i64) -> BigInt {
    let n = a.rows();
    let m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { x } else { 0 };
                    BigInt::from(diag - a.get(i, j))
                })
                .collect()
        })
        .collect();
    bareiss_det(m)
}

/// All ordered `k`-tuples of distinct values from `0..n`.
pub fn distinct_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k`-subsets of `0..n` as ascending vectors.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}
