//! Exact linear algebra and the two linear problems of the bialgebra layer:
//! the cocycle space and the coboundary inverse problem.

mod matrix;

pub use matrix::Matrix;

use serde::Serialize;

use crate::bialgebra::{
    coboundary_delta, r_from_coords, r_positions, verify_cocycle, Cobracket, CocycleForm, RMatrix,
};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Scalar};
use crate::superkernel::SuperAlgebra;
use crate::Rational;

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    m.rref().1.len()
}

/// Basis of the right kernel read off the reduced row echelon form.
pub fn nullspace<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![T::zero(); m.cols()];
        v[free] = T::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, free)].clone();
        }
        out.push(v);
    }
    out
}

/// Any solution of `m v = b`, or `None` if the system is inconsistent.
pub fn solve_linear<T: Scalar>(m: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: b.len() });
    }
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let pivots = aug.rref_in_place();
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut v = vec![T::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        v[p] = aug[(row, cols)].clone();
    }
    let check = m.mul_vec(&v)?;
    debug_assert!(check.iter().zip(b).all(|(x, y)| (x.clone() - y.clone()).is_negligible()));
    Ok(Some(v))
}

/// Drops zero rows and repeated rows; the row space is unchanged.
fn compress_rows<T: Scalar>(rows: Vec<Vec<T>>, cols: usize) -> Matrix<T> {
    let mut kept: Vec<Vec<T>> = Vec::new();
    for row in rows {
        if row.iter().all(Scalar::is_negligible) || kept.contains(&row) {
            continue;
        }
        kept.push(row);
    }
    if kept.is_empty() {
        return Matrix::zeros(0, cols);
    }
    Matrix::from_rows(kept).expect("uniform row length")
}

/// Unknown positions `(i, j, k)` of `f_i^{jk}` allowed by parity closure and graded
/// antisymmetry, lexicographic, with `j < k` except `j <= k` for odd pairs.
pub fn cocycle_unknowns<T: Scalar>(alg: &SuperAlgebra<T>) -> Vec<(usize, usize, usize)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                if (alg.parity(j) + alg.parity(k)) != alg.parity(i) {
                    continue;
                }
                if j == k && !alg.sign_flip(j, k) {
                    continue;
                }
                out.push((i, j, k));
            }
        }
    }
    out
}

pub fn cobracket_from_coords<T: Scalar>(alg: &SuperAlgebra<T>, coords: &[T]) -> Result<Cobracket<T>> {
    let unknowns = cocycle_unknowns(alg);
    if coords.len() != unknowns.len() {
        return Err(Error::DimensionMismatch { expected: unknowns.len(), found: coords.len() });
    }
    let mut f = Cobracket::zeros(alg.dim());
    for (&(i, j, k), v) in unknowns.iter().zip(coords) {
        f.set(i, j, k, v.clone());
        f.set(i, k, j, -(alg.z(j, k) * v.clone()));
    }
    Ok(f)
}

/// Residuals of the compatibility identity over all `n^4` free index tuples.
pub fn cocycle_residuals<T: Scalar>(alg: &SuperAlgebra<T>, f: &Cobracket<T>) -> Vec<T> {
    let n = alg.dim();
    let mut out = vec![T::zero(); n * n * n * n];
    // Each term is bilinear in (c, f); iterate over the sparse structure constants.
    let at = |i: usize, j: usize, l: usize, m: usize| ((i * n + j) * n + l) * n + m;
    for &(p, q, s) in alg.support() {
        let c = alg.c(p, q, s).clone();
        for a in 0..n {
            for b in 0..n {
                // lhs: c_ij^k f_k^{lm} with (i,j,k) = (p,q,s), (l,m) = (a,b)
                let v = f.get(s, a, b);
                if !v.is_zero() {
                    let x = at(p, q, a, b);
                    out[x] = out[x].clone() + c.clone() * v.clone();
                }
                // f_i^{lk} c_kj^m: (k,j,m) = (p,q,s), i = a, l = b
                let v = f.get(a, b, p);
                if !v.is_zero() {
                    let x = at(a, q, b, s);
                    out[x] = out[x].clone() - v.clone() * c.clone();
                }
                // z(m,j) c_kj^l f_i^{km}: (k,j,l) = (p,q,s), i = a, m = b
                let v = f.get(a, p, b);
                if !v.is_zero() {
                    let x = at(a, q, s, b);
                    let t = c.clone() * v.clone();
                    out[x] = if alg.sign_flip(b, q) { out[x].clone() + t } else { out[x].clone() - t };
                }
                // c_ik^l f_j^{km}: (i,k,l) = (p,q,s), j = a, m = b
                let v = f.get(a, q, b);
                if !v.is_zero() {
                    let x = at(p, a, s, b);
                    out[x] = out[x].clone() - c.clone() * v.clone();
                }
                // z(i,l) f_j^{lk} c_ik^m: (i,k,m) = (p,q,s), j = a, l = b
                let v = f.get(a, b, q);
                if !v.is_zero() {
                    let x = at(p, a, b, s);
                    let t = v.clone() * c.clone();
                    out[x] = if alg.sign_flip(p, b) { out[x].clone() + t } else { out[x].clone() - t };
                }
            }
        }
    }
    out
}

/// Solution space of the compatibility identity on admissible cobrackets.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleSpace<T> {
    pub dimension: usize,
    pub unknowns: usize,
    pub rank: usize,
    pub basis: Vec<Cobracket<T>>,
}

pub fn cocycle_space<T: Scalar>(alg: &SuperAlgebra<T>) -> CocycleSpace<T> {
    let unknowns = cocycle_unknowns(alg);
    let u = unknowns.len();
    let columns: Vec<Vec<T>> = (0..u)
        .map(|idx| {
            let mut coords = vec![T::zero(); u];
            coords[idx] = T::one();
            let f = cobracket_from_coords(alg, &coords).expect("coords sized");
            cocycle_residuals(alg, &f)
        })
        .collect();
    let eqs = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<T>> = (0..eqs).map(|e| columns.iter().map(|col| col[e].clone()).collect()).collect();
    let system = compress_rows(rows, u);
    let kernel = nullspace(&system);
    let basis: Vec<Cobracket<T>> =
        kernel.iter().map(|v| cobracket_from_coords(alg, v).expect("coords sized")).collect();
    CocycleSpace { dimension: basis.len(), unknowns: u, rank: u - basis.len(), basis }
}

/// Matrix of `r -> delta_r` from independent r coordinates to flattened cobrackets.
pub fn coboundary_matrix<T: Scalar>(alg: &SuperAlgebra<T>) -> Matrix<T> {
    let pos = r_positions(alg);
    let n3 = alg.dim().pow(3);
    let mut m = Matrix::zeros(n3, pos.len());
    for col in 0..pos.len() {
        let mut coords = vec![T::zero(); pos.len()];
        coords[col] = T::one();
        let r = r_from_coords(alg, &coords).expect("coords sized");
        let f = coboundary_delta(alg, &r).expect("shape");
        for (row, v) in f.as_slice().iter().enumerate() {
            m[(row, col)] = v.clone();
        }
    }
    m
}

/// Kernel of `r -> delta_r`: the ad-invariant even r-matrices.
pub fn coboundary_kernel<T: Scalar>(alg: &SuperAlgebra<T>) -> Vec<RMatrix<T>> {
    nullspace(&coboundary_matrix(alg)).iter().map(|v| r_from_coords(alg, v).expect("coords sized")).collect()
}

/// Finds an even graded-antisymmetric r with `delta_r = f`, or `None` if `f` is not a coboundary.
pub fn coboundary_solve<T: Scalar>(alg: &SuperAlgebra<T>, f: &Cobracket<T>) -> Result<Option<RMatrix<T>>> {
    if f.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: f.dim() });
    }
    let m = coboundary_matrix(alg);
    let Some(v) = solve_linear(&m, f.as_slice())? else {
        return Ok(None);
    };
    let r = r_from_coords(alg, &v)?;
    if &coboundary_delta(alg, &r)? != f {
        return Ok(None);
    }
    Ok(Some(r))
}

/// Sanity check that every basis element satisfies the compatibility identity.
pub fn basis_is_cocycle<T: Scalar>(alg: &SuperAlgebra<T>, space: &CocycleSpace<T>) -> bool {
    space.basis.iter().all(|f| verify_cocycle(alg, f).map(|c| c.passed()).unwrap_or(false))
}

#[derive(Serialize)]
struct ExportEntry {
    index: [String; 3],
    value: String,
}

#[derive(Serialize)]
struct ExportSpace {
    algebra: String,
    dimension: usize,
    compatibility_form: CocycleForm,
    basis: Vec<Vec<ExportEntry>>,
}

/// JSON listing of a cocycle basis as sparse `f_i^{jk}` entries with generator names.
pub fn export_cocycle_space(alg: &SuperAlgebra<Rational>, space: &CocycleSpace<Rational>) -> String {
    let names = alg.generator_names();
    let basis = space
        .basis
        .iter()
        .map(|f| {
            f.nonzero_entries()
                .into_iter()
                .map(|(i, j, k, v)| ExportEntry {
                    index: [names[i].clone(), names[j].clone(), names[k].clone()],
                    value: format_rational(&v),
                })
                .collect()
        })
        .collect();
    let doc = ExportSpace {
        algebra: alg.name().to_string(),
        dimension: space.dimension,
        compatibility_form: CocycleForm::Derived,
        basis,
    };
    serde_json::to_string_pretty(&doc).expect("export serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::verify_cocycle_with;
    use crate::superkernel::Parity;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::<Rational>::identity(3)), 3);
        assert_eq!(rank(&m(vec![vec![1, 1], vec![1, 1]])), 1);
        assert_eq!(rank(&Matrix::<Rational>::zeros(3, 4)), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::<Rational>::identity(3)).is_empty());
        let ns = nullspace(&m(vec![vec![1, 1], vec![1, 1]]));
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
        assert_eq!(nullspace(&Matrix::<Rational>::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-4)];
        assert_eq!(solve_linear(&Matrix::identity(2), &b).unwrap(), Some(b));
        assert_eq!(solve_linear(&m(vec![vec![1, 1], vec![1, 1]]), &[q(1), q(2)]).unwrap(), None);
        assert_eq!(solve_linear(&m(vec![vec![2]]), &[q(1)]).unwrap(), Some(vec![Rational::from_ratio(1, 2)]));
        assert!(solve_linear(&m(vec![vec![2]]), &[q(1), q(1)]).is_err());
    }

    #[test]
    fn float_rank() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 4.0 + 1e-12]]).unwrap();
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn residuals_agree_with_pointwise_check() {
        let alg = crate::catalog::algebra("osp22").unwrap();
        let mut s = crate::sampling::Sampler::new(3);
        let r = crate::sampling::random_rmatrix(&alg, &mut s);
        let mut f = coboundary_delta(&alg, &r).unwrap();
        assert!(cocycle_residuals(&alg, &f).iter().all(|v| v == &q(0)));
        f.set(0, 1, 2, q(1));
        f.set(0, 2, 1, q(-1));
        let res = cocycle_residuals(&alg, &f);
        let bad: Vec<usize> = res.iter().enumerate().filter(|(_, v)| *v != &q(0)).map(|(i, _)| i).collect();
        let check = verify_cocycle_with(&alg, &f, CocycleForm::Derived).unwrap();
        let flat: Vec<usize> = check.violations.iter().map(|t| ((t[0] * 8 + t[1]) * 8 + t[2]) * 8 + t[3]).collect();
        assert_eq!(bad, flat);
    }

    #[test]
    fn abelian_even_pair() {
        let alg = SuperAlgebra::<Rational>::abelian("ab", vec!["a".into(), "b".into()], vec![Parity::Even; 2]).unwrap();
        let space = cocycle_space(&alg);
        assert_eq!(space.dimension, 2);
        for f in &space.basis {
            assert_eq!(coboundary_solve(&alg, f).unwrap(), None);
        }
        assert_eq!(coboundary_solve(&alg, &Cobracket::zeros(2)).unwrap(), Some(RMatrix::zeros(2)));
    }
}
