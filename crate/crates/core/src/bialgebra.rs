//! Cobrackets, the coboundary map `r -> delta_r`, and the cobracket and compatibility axioms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linsolve::Matrix;
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::superkernel::{Axiom, AxiomCheck, SuperAlgebra, VerificationReport};
use crate::Rational;

/// Tensor `f_i^{jk}` with `delta(g_i) = sum f_i^{jk} g_j (x) g_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cobracket<T> {
    n: usize,
    f: Vec<T>,
}

impl<T: Scalar> Cobracket<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, f: vec![T::zero(); n * n * n] }
    }

    pub fn from_dense(n: usize, f: Vec<T>) -> Result<Self> {
        if f.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: f.len() });
        }
        Ok(Self { n, f })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.f[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        let p = self.idx(i, j, k);
        self.f[p] = v;
    }

    pub fn as_slice(&self) -> &[T] {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.f.iter().all(Scalar::is_negligible)
    }

    /// Coefficient matrix of `delta(g_i)`.
    pub fn image_of(&self, i: usize) -> Matrix<T> {
        let n = self.n;
        let data = (0..n * n).map(|p| self.get(i, p / n, p % n).clone()).collect();
        Matrix::new(n, n, data).expect("n*n entries")
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, T)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if !v.is_negligible() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Even, graded-antisymmetric `r = sum r^{ij} g_i (x) g_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix<T> {
    r: Matrix<T>,
}

impl<T: Scalar> RMatrix<T> {
    /// Validates evenness and graded antisymmetry against `alg`.
    pub fn new(alg: &SuperAlgebra<T>, r: Matrix<T>) -> Result<Self> {
        check_shape(alg, &r)?;
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let v = &r[(i, j)];
                if alg.is_odd(i) != alg.is_odd(j) && !v.is_negligible() {
                    return Err(Error::InvalidRMatrix(format!(
                        "evenness at ({}, {})",
                        alg.generator_names()[i],
                        alg.generator_names()[j]
                    )));
                }
                if !(v.clone() + alg.z(i, j) * r[(j, i)].clone()).is_negligible() {
                    return Err(Error::InvalidRMatrix(format!(
                        "graded antisymmetry at ({}, {})",
                        alg.generator_names()[i],
                        alg.generator_names()[j]
                    )));
                }
            }
        }
        Ok(Self { r })
    }

    pub fn zeros(n: usize) -> Self {
        Self { r: Matrix::zeros(n, n) }
    }

    /// Wraps a matrix already known to be even and graded-antisymmetric.
    pub(crate) fn from_matrix_unchecked(r: Matrix<T>) -> Self {
        Self { r }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.r
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.r[(i, j)]
    }

    pub fn dim(&self) -> usize {
        self.r.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { r: self.r.scale(s) }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.dim();
        let mut r = self.r.clone();
        for i in 0..n {
            for j in 0..n {
                r[(i, j)] = r[(i, j)].clone() + other.r[(i, j)].clone();
            }
        }
        Self { r }
    }
}

/// Bosonic and fermionic 4x4 blocks of an even r-matrix on the osp(2|2) layout.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockPair<T> {
    pub r_b: Matrix<T>,
    pub r_f: Matrix<T>,
}

impl<T: Scalar> BlockPair<T> {
    pub fn assemble(&self) -> Matrix<T> {
        Matrix::block_diag(&self.r_b, &self.r_f)
    }
}

fn check_shape<T: Scalar>(alg: &SuperAlgebra<T>, m: &Matrix<T>) -> Result<()> {
    let n = alg.dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: if m.rows() != n { m.rows() } else { m.cols() } });
    }
    Ok(())
}

pub fn even_project<T: Scalar>(alg: &SuperAlgebra<T>, raw: &Matrix<T>) -> Result<Matrix<T>> {
    check_shape(alg, raw)?;
    let mut out = raw.clone();
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            if alg.is_odd(i) != alg.is_odd(j) {
                out[(i, j)] = T::zero();
            }
        }
    }
    Ok(out)
}

/// `(r_ij - z(i,j) r_ji) / 2`, even-projected.
pub fn hat_antisymmetrize<T: Scalar>(alg: &SuperAlgebra<T>, raw: &Matrix<T>) -> Result<RMatrix<T>> {
    let even = even_project(alg, raw)?;
    let n = alg.dim();
    let two = T::from_i64(2);
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = (even[(i, j)].clone() - alg.z(i, j) * even[(j, i)].clone()) / two.clone();
        }
    }
    Ok(RMatrix { r: out })
}

/// Positions `(i, j)` of the independent entries of an even graded-antisymmetric r:
/// `i < j` for even pairs, `i <= j` for odd pairs.
pub fn r_positions<T: Scalar>(alg: &SuperAlgebra<T>) -> Vec<(usize, usize)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if alg.is_odd(i) != alg.is_odd(j) {
                continue;
            }
            if i == j && !alg.is_odd(i) {
                continue;
            }
            out.push((i, j));
        }
    }
    out
}

/// Builds an r from independent coordinates ordered as in [`r_positions`].
pub fn r_from_coords<T: Scalar>(alg: &SuperAlgebra<T>, coords: &[T]) -> Result<RMatrix<T>> {
    let pos = r_positions(alg);
    if coords.len() != pos.len() {
        return Err(Error::DimensionMismatch { expected: pos.len(), found: coords.len() });
    }
    let n = alg.dim();
    let mut r = Matrix::zeros(n, n);
    for (&(i, j), v) in pos.iter().zip(coords) {
        r[(i, j)] = v.clone();
        r[(j, i)] = -(alg.z(i, j) * v.clone());
    }
    Ok(RMatrix { r })
}

/// `f_i^{jk} = sum_m r^{jm} c_mi^k - c_im^j r^{mk}`.
pub fn coboundary_delta<T: Scalar>(alg: &SuperAlgebra<T>, r: &RMatrix<T>) -> Result<Cobracket<T>> {
    check_shape(alg, r.matrix())?;
    let n = alg.dim();
    let mut f = Cobracket::<T>::zeros(n);
    for &(p, q, s) in alg.support() {
        let c = alg.c(p, q, s);
        // c_{m i}^k with m = p, i = q, k = s: contributes r^{j p} c to f_q^{j s}.
        for j in 0..n {
            let rv = r.get(j, p);
            if !rv.is_zero() {
                let v = f.get(q, j, s).clone() + rv.clone() * c.clone();
                f.set(q, j, s, v);
            }
        }
        // c_{i m}^j with i = p, m = q, j = s: contributes -c r^{q k} to f_p^{s k}.
        for k in 0..n {
            let rv = r.get(q, k);
            if !rv.is_zero() {
                let v = f.get(p, s, k).clone() - c.clone() * rv.clone();
                f.set(p, s, k, v);
            }
        }
    }
    Ok(f)
}

fn mac<T: Scalar>(acc: &mut T, a: &T, b: &T, negate: bool) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    let p = a.clone() * b.clone();
    *acc = if negate { acc.clone() - p } else { acc.clone() + p };
}

pub fn verify_cobracket<T: Scalar>(alg: &SuperAlgebra<T>, f: &Cobracket<T>) -> Result<VerificationReport> {
    let n = alg.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.dim() });
    }
    let mut parity = Vec::new();
    let mut antisym = Vec::new();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let v = f.get(k, i, j);
                if (alg.parity(i) + alg.parity(j)) != alg.parity(k) && !v.is_negligible() {
                    parity.push(vec![k, i, j]);
                }
                if !(v.clone() + alg.z(i, j) * f.get(k, j, i).clone()).is_negligible() {
                    antisym.push(vec![k, i, j]);
                }
            }
        }
    }
    let mut cojacobi = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let mut s = T::zero();
                    for j in 0..n {
                        mac(&mut s, f.get(i, k, j), f.get(j, l, m), alg.sign_flip(k, m));
                        mac(&mut s, f.get(i, l, j), f.get(j, m, k), alg.sign_flip(l, k));
                        mac(&mut s, f.get(i, m, j), f.get(j, k, l), alg.sign_flip(m, l));
                    }
                    if !s.is_negligible() {
                        cojacobi.push(vec![i, k, l, m]);
                    }
                }
            }
        }
    }
    Ok(VerificationReport {
        checks: vec![
            AxiomCheck { axiom: Axiom::CoParityClosure, violations: parity },
            AxiomCheck { axiom: Axiom::CoAntisymmetry, violations: antisym },
            AxiomCheck { axiom: Axiom::CoJacobi, violations: cojacobi },
        ],
    })
}

/// Index placement used for the bracket/cobracket compatibility identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CocycleForm {
    /// Re-derived from `delta([x, y]) = x.delta(y) - z(x, y) y.delta(x)`; holds on every coboundary.
    #[default]
    Derived,
    /// Literal placement carried over from the source tables; kept as a regression variant.
    Printed,
}

pub fn verify_cocycle<T: Scalar>(alg: &SuperAlgebra<T>, f: &Cobracket<T>) -> Result<AxiomCheck> {
    verify_cocycle_with(alg, f, CocycleForm::Derived)
}

/// For all `(i, j, l, m)`: `sum_k c_ij^k f_k^{lm}` against
/// `f_i^{lk} c_kj^m + z(m,j) c_kj^l f_i^{km} + c_ik^l f_j^{km} + z(i,l) f_j^{lk} c_ik^m`
/// (derived form), or the literal variant with `c_jk^m` and `c_jk^l` in the first and third terms.
pub fn verify_cocycle_with<T: Scalar>(
    alg: &SuperAlgebra<T>,
    f: &Cobracket<T>,
    form: CocycleForm,
) -> Result<AxiomCheck> {
    let n = alg.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.dim() });
    }
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for m in 0..n {
                    let mut s = T::zero();
                    for k in 0..n {
                        mac(&mut s, alg.c(i, j, k), f.get(k, l, m), false);
                        let (t1, t3) = match form {
                            CocycleForm::Derived => (alg.c(k, j, m), alg.c(i, k, l)),
                            CocycleForm::Printed => (alg.c(j, k, m), alg.c(j, k, l)),
                        };
                        mac(&mut s, f.get(i, l, k), t1, true);
                        mac(&mut s, alg.c(k, j, l), f.get(i, k, m), !alg.sign_flip(m, j));
                        mac(&mut s, t3, f.get(j, k, m), true);
                        mac(&mut s, f.get(j, l, k), alg.c(i, k, m), !alg.sign_flip(i, l));
                    }
                    if !s.is_negligible() {
                        bad.push(vec![i, j, l, m]);
                    }
                }
            }
        }
    }
    Ok(AxiomCheck { axiom: Axiom::Cocycle, violations: bad })
}

/// Full check of `delta_r`: cobracket axioms plus compatibility.
pub fn verify_coboundary<T: Scalar>(alg: &SuperAlgebra<T>, r: &RMatrix<T>) -> Result<VerificationReport> {
    let f = coboundary_delta(alg, r)?;
    let mut rep = verify_cobracket(alg, &f)?;
    rep.checks.push(verify_cocycle(alg, &f)?);
    Ok(rep)
}

pub fn block_split<T: Scalar>(alg: &SuperAlgebra<T>, r: &RMatrix<T>) -> Result<BlockPair<T>> {
    if !alg.has_osp22_layout() {
        return Err(Error::LayoutMismatch);
    }
    let m = r.matrix();
    Ok(BlockPair { r_b: m.submatrix(0, 0, 4, 4), r_f: m.submatrix(4, 4, 4, 4) })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RMatrixEntry {
    pub row: String,
    pub col: String,
    pub value: String,
}

/// JSON r-matrix file: `{algebra, entries: [{row, col, value}]}` with generator names.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RMatrixFile {
    pub algebra: String,
    pub entries: Vec<RMatrixEntry>,
}

/// Result of loading an r-matrix file.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedRMatrix {
    pub r: RMatrix<Rational>,
    /// Set when projection or antisymmetrization altered the file contents.
    pub normalized: bool,
}

impl RMatrixFile {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("r-matrix file serializes")
    }

    pub fn from_rmatrix(alg: &SuperAlgebra<Rational>, r: &RMatrix<Rational>) -> Self {
        let n = alg.dim();
        let names = alg.generator_names();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = r.get(i, j);
                if !v.is_negligible() {
                    entries.push(RMatrixEntry { row: names[i].clone(), col: names[j].clone(), value: format_rational(v) });
                }
            }
        }
        Self { algebra: alg.name().to_string(), entries }
    }

    /// Applies even projection and hat antisymmetrization to the raw entries.
    pub fn load(&self, alg: &SuperAlgebra<Rational>) -> Result<LoadedRMatrix> {
        let n = alg.dim();
        let mut raw = Matrix::zeros(n, n);
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let (i, j) = (alg.index_of(&e.row)?, alg.index_of(&e.col)?);
            if !seen.insert((i, j)) {
                return Err(Error::Parse(format!("entry ({}, {}) given twice", e.row, e.col)));
            }
            raw[(i, j)] = parse_rational(&e.value).ok_or_else(|| Error::Parse(format!("bad rational `{}`", e.value)))?;
        }
        let r = hat_antisymmetrize(alg, &raw)?;
        let normalized = r.matrix() != &raw;
        Ok(LoadedRMatrix { r, normalized })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebra;
    use crate::sampling::{random_rmatrix, Sampler};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn osp22() -> SuperAlgebra<Rational> {
        algebra("osp22").unwrap()
    }

    fn unit(alg: &SuperAlgebra<Rational>, a: &str, b: &str) -> Matrix<Rational> {
        let mut m = Matrix::zeros(alg.dim(), alg.dim());
        m[(alg.index_of(a).unwrap(), alg.index_of(b).unwrap())] = q(1, 1);
        m
    }

    #[test]
    fn hat_of_even_pair() {
        let a = osp22();
        let r = hat_antisymmetrize(&a, &unit(&a, "H", "X+")).unwrap();
        assert_eq!(r.get(0, 1), &q(1, 2));
        assert_eq!(r.get(1, 0), &q(-1, 2));
    }

    #[test]
    fn hat_keeps_odd_square() {
        let a = osp22();
        let raw = unit(&a, "V+", "V+");
        assert_eq!(hat_antisymmetrize(&a, &raw).unwrap().matrix(), &raw);
    }

    #[test]
    fn hat_and_project_idempotent_and_commute() {
        let a = osp22();
        let mut s = Sampler::new(11);
        for _ in 0..10 {
            let raw = Matrix::new(8, 8, (0..64).map(|_| s.rational()).collect()).unwrap();
            let h = hat_antisymmetrize(&a, &raw).unwrap();
            assert_eq!(hat_antisymmetrize(&a, h.matrix()).unwrap(), h);
            let p = even_project(&a, &raw).unwrap();
            assert_eq!(even_project(&a, &p).unwrap(), p);
            let ph = even_project(&a, h.matrix()).unwrap();
            assert_eq!(hat_antisymmetrize(&a, &p).unwrap().matrix(), &ph);
            assert_eq!(
                coboundary_delta(&a, &h).unwrap(),
                coboundary_delta(&a, &hat_antisymmetrize(&a, &p).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn even_project_examples() {
        let a = osp22();
        assert!(even_project(&a, &unit(&a, "V+", "H")).unwrap().is_zero());
        let mut m = unit(&a, "H", "B");
        m[(0, 4)] = q(3, 1);
        let p = even_project(&a, &m).unwrap();
        assert_eq!(p, unit(&a, "H", "B"));
        assert!(even_project(&a, &Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn delta_of_zero_is_zero() {
        let a = osp22();
        assert!(coboundary_delta(&a, &RMatrix::zeros(8)).unwrap().is_zero());
    }

    #[test]
    fn delta_sl2_hand_evaluation() {
        // By hand, r = (H(x)X+ - X+(x)H)/2 gives delta(H) = (X+(x)H - H(x)X+)/2 and delta(X+) = 0.
        let a = osp22();
        let r = hat_antisymmetrize(&a, &unit(&a, "H", "X+")).unwrap();
        let f = coboundary_delta(&a, &r).unwrap();
        let (h, xp) = (0, 1);
        let dh = f.image_of(h);
        let mut expect = Matrix::zeros(8, 8);
        expect[(xp, h)] = q(1, 2);
        expect[(h, xp)] = q(-1, 2);
        assert_eq!(dh, expect);
        assert!(f.image_of(xp).is_zero());
    }

    #[test]
    fn delta_of_vplus_square() {
        let a = osp22();
        let r = RMatrix::new(&a, unit(&a, "V+", "V+")).unwrap();
        let f = coboundary_delta(&a, &r).unwrap();
        assert!(f.image_of(4).is_zero());
        let mut expect = Matrix::zeros(8, 8);
        for (g, s) in [(0usize, 1i64), (3, -1)] {
            expect[(4, g)] = q(s, 1);
            expect[(g, 4)] = q(-s, 1);
        }
        assert_eq!(f.image_of(7), expect);
    }

    #[test]
    fn rmatrix_rejects_invalid() {
        let a = osp22();
        assert!(RMatrix::new(&a, unit(&a, "H", "X+")).is_err());
        assert!(RMatrix::new(&a, unit(&a, "H", "V+")).is_err());
    }

    #[test]
    fn cobracket_examples() {
        let a = osp22();
        assert!(verify_cobracket(&a, &Cobracket::zeros(8)).unwrap().passed());
        let mut f = Cobracket::zeros(8);
        f.set(0, 0, 4, q(1, 1));
        f.set(0, 4, 0, q(-1, 1));
        let rep = verify_cobracket(&a, &f).unwrap();
        assert!(!rep.check(Axiom::CoParityClosure).unwrap().passed());
        assert!(rep.check(Axiom::CoAntisymmetry).unwrap().passed());
    }

    #[test]
    fn coboundaries_are_cocycles_but_not_for_printed_form() {
        let a = osp22();
        let mut s = Sampler::new(5);
        let mut printed_failures = 0;
        for _ in 0..5 {
            let r = random_rmatrix(&a, &mut s);
            let f = coboundary_delta(&a, &r).unwrap();
            let rep = verify_cobracket(&a, &f).unwrap();
            assert!(rep.check(Axiom::CoParityClosure).unwrap().passed());
            assert!(rep.check(Axiom::CoAntisymmetry).unwrap().passed());
            assert!(verify_cocycle(&a, &f).unwrap().passed());
            if !verify_cocycle_with(&a, &f, CocycleForm::Printed).unwrap().passed() {
                printed_failures += 1;
            }
        }
        assert_eq!(printed_failures, 5);
    }

    #[test]
    fn random_antisymmetric_tensor_is_not_a_cocycle() {
        let a = osp22();
        let mut s = Sampler::new(99);
        let mut f = Cobracket::zeros(8);
        for i in 0..8 {
            for j in 0..8 {
                for k in j..8 {
                    if (a.parity(j) + a.parity(k)) != a.parity(i) || (j == k && !a.is_odd(j)) {
                        continue;
                    }
                    let v = s.rational();
                    f.set(i, j, k, v.clone());
                    f.set(i, k, j, -(a.z(j, k) * v));
                }
            }
        }
        let rep = verify_cobracket(&a, &f).unwrap();
        assert!(rep.check(Axiom::CoAntisymmetry).unwrap().passed());
        assert!(!verify_cocycle(&a, &f).unwrap().passed());
    }

    #[test]
    fn block_split_layout() {
        let a = osp22();
        let r = RMatrix::new(&a, unit(&a, "V+", "V+")).unwrap();
        let b = block_split(&a, &r).unwrap();
        assert!(b.r_b.is_zero());
        assert_eq!(b.r_f[(0, 0)], q(1, 1));
        assert_eq!(&b.assemble(), r.matrix());
        let small = algebra("osp12_u1").unwrap();
        assert_eq!(block_split(&small, &RMatrix::zeros(6)).unwrap_err(), Error::LayoutMismatch);
    }

    #[test]
    fn rmatrix_file_round_trip_and_normalization() {
        let a = osp22();
        let file = RMatrixFile {
            algebra: "osp22".into(),
            entries: vec![
                RMatrixEntry { row: "H".into(), col: "X+".into(), value: "1".into() },
                RMatrixEntry { row: "V+".into(), col: "V+".into(), value: "2/3".into() },
            ],
        };
        let loaded = file.load(&a).unwrap();
        assert!(loaded.normalized);
        let again = RMatrixFile::from_rmatrix(&a, &loaded.r);
        let back = RMatrixFile::from_json(&again.to_json()).unwrap().load(&a).unwrap();
        assert!(!back.normalized);
        assert_eq!(back.r, loaded.r);
    }
}
