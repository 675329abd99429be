//! Independent oracle for the cocycle-space dimension: the compatibility condition
//! `delta([x, y]) = x.delta(y) - z(x, y) y.delta(x)` assembled directly from the adjoint
//! action on all n^3 cobracket components, with rank taken over a large prime field.

use num_traits::ToPrimitive;
use sbk_core::catalog::algebra;
use sbk_core::linsolve::{coboundary_matrix, cocycle_space, rank};
use sbk_core::{QAlgebra, Rational};

const P: i64 = 2_147_483_629;

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    let mut acc = 1i64;
    b = b.rem_euclid(P);
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as i128 * b as i128 % P as i128) as i64;
        }
        b = (b as i128 * b as i128 % P as i128) as i64;
        e >>= 1;
    }
    acc
}

fn modp(q: &Rational) -> i64 {
    let n = q.numer().to_i64().unwrap().rem_euclid(P);
    let d = q.denom().to_i64().unwrap().rem_euclid(P);
    (n as i128 * pow_mod(d, P - 2) as i128 % P as i128) as i64
}

fn rank_mod_p(mut rows: Vec<Vec<i64>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], P - 2);
        for x in rows[r].iter_mut() {
            *x = (*x as i128 * inv as i128 % P as i128) as i64;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x - (f as i128 * *p as i128 % P as i128) as i64).rem_euclid(P);
                }
            }
        }
        r += 1;
    }
    r
}

fn oracle_dimension(alg: &QAlgebra) -> usize {
    let n = alg.dim();
    let odd: Vec<bool> = (0..n).map(|i| alg.is_odd(i)).collect();
    let z = |a: usize, b: usize| if odd[a] && odd[b] { P - 1 } else { 1 };
    let c = |i: usize, j: usize, k: usize| modp(alg.c(i, j, k));
    let var = |k: usize, l: usize, m: usize| (k * n + l) * n + m;
    let mul = |a: i64, b: i64| (a as i128 * b as i128 % P as i128) as i64;
    let cols = n * n * n;
    let mut rows = Vec::new();
    for k in 0..n {
        for l in 0..n {
            for m in 0..n {
                if (odd[l] ^ odd[m]) != odd[k] {
                    let mut row = vec![0; cols];
                    row[var(k, l, m)] = 1;
                    rows.push(row);
                }
                let mut row = vec![0; cols];
                row[var(k, l, m)] = 1;
                row[var(k, m, l)] = (row[var(k, m, l)] + z(l, m)) % P;
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let mut row = vec![0i64; cols];
                    let mut add = |v: usize, x: i64| row[v] = (row[v] + x).rem_euclid(P);
                    for k in 0..n {
                        add(var(k, l, m), c(i, j, k));
                    }
                    // x.delta(y) with x = g_i, y = g_j
                    for a in 0..n {
                        add(var(j, a, m), P - c(i, a, l));
                        add(var(j, l, a), P - mul(z(i, l), c(i, a, m)));
                    }
                    // - z(i, j) y.delta(x)
                    let s = z(i, j);
                    for a in 0..n {
                        add(var(i, a, m), mul(s, c(j, a, l)));
                        add(var(i, l, a), mul(s, mul(z(j, l), c(j, a, m))));
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    cols - rank_mod_p(rows, cols)
}

#[test]
fn osp22_dimension_matches_oracle() {
    let alg = algebra("osp22").unwrap();
    let oracle = oracle_dimension(&alg);
    assert_eq!(oracle, 16);
    assert_eq!(cocycle_space(&alg).dimension, oracle);
}

#[test]
fn osp12_u1_dimension_matches_oracle() {
    let alg = algebra("osp12_u1").unwrap();
    let oracle = oracle_dimension(&alg);
    assert_eq!(cocycle_space(&alg).dimension, oracle);
    assert_eq!(oracle, 9);
}

#[test]
fn coboundary_image_fills_cocycle_space() {
    for (name, dim) in [("osp22", 16), ("osp12_u1", 9)] {
        let alg = algebra(name).unwrap();
        assert_eq!(rank(&coboundary_matrix(&alg)), dim, "{name}");
    }
}
