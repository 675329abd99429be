//! The graded Schouten square `[[r, r]]` and the adjoint-invariance test.

use std::fmt;

use crate::bialgebra::RMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superkernel::SuperAlgebra;

/// Element of `G (x) G (x) G` with components `t^{ijk}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<T> {
    n: usize,
    t: Vec<T>,
}

impl<T: Scalar> Tensor3<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, t: vec![T::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.t[self.idx(i, j, k)]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: T) {
        let p = self.idx(i, j, k);
        self.t[p] = self.t[p].clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Scalar::is_negligible)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { n: self.n, t: self.t.iter().map(|v| v.clone() * s.clone()).collect() }
    }

    /// Sparse `(i, j, k, value)` listing in lexicographic order.
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

    /// Listing with generator names, one `(a, b, c) value` per line.
    pub fn listing(&self, alg: &SuperAlgebra<T>) -> String {
        let names = alg.generator_names();
        self.nonzero_entries()
            .into_iter()
            .map(|(i, j, k, v)| format!("({}, {}, {}) {}\n", names[i], names[j], names[k], v))
            .collect()
    }
}

impl<T: Scalar> fmt::Display for Tensor3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, k, v) in self.nonzero_entries() {
            writeln!(f, "({i}, {j}, {k}) {v}")?;
        }
        Ok(())
    }
}

/// `[[r,r]]^{ijk} = sum z(j,c) r^{aj} r^{ck} c_ac^i + r^{ib} r^{ck} c_bc^j + z(b,j) r^{ib} r^{jd} c_bd^k`,
/// i.e. `[r12, r13] + [r12, r23] + [r13, r23]` for an even r.
pub fn schouten_square<T: Scalar>(alg: &SuperAlgebra<T>, r: &RMatrix<T>) -> Result<Tensor3<T>> {
    let n = alg.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: r.dim() });
    }
    let mut out = Tensor3::zeros(n);
    for &(p, q, s) in alg.support() {
        let c = alg.c(p, q, s);
        for x in 0..n {
            for y in 0..n {
                // first sum: (a, c, i) = (p, q, s), free (j, k) = (x, y)
                let (u, v) = (r.get(p, x), r.get(q, y));
                if !u.is_zero() && !v.is_zero() {
                    let t = u.clone() * v.clone() * c.clone() * alg.z(x, q);
                    out.add_at(s, x, y, t);
                }
                // second sum: (b, c, j) = (p, q, s), free (i, k) = (x, y)
                let (u, v) = (r.get(x, p), r.get(q, y));
                if !u.is_zero() && !v.is_zero() {
                    out.add_at(x, s, y, u.clone() * v.clone() * c.clone());
                }
                // third sum: (b, d, k) = (p, q, s), free (i, j) = (x, y)
                let (u, v) = (r.get(x, p), r.get(y, q));
                if !u.is_zero() && !v.is_zero() {
                    let t = u.clone() * v.clone() * c.clone() * alg.z(p, y);
                    out.add_at(x, y, s, t);
                }
            }
        }
    }
    Ok(out)
}

pub fn is_cybe<T: Scalar>(alg: &SuperAlgebra<T>, r: &RMatrix<T>) -> Result<bool> {
    Ok(schouten_square(alg, r)?.is_zero())
}

/// Graded adjoint action of generator `a`; passing slot `s` costs `z(a, parity of slots before s)`.
pub fn adjoint_action<T: Scalar>(alg: &SuperAlgebra<T>, a: usize, t: &Tensor3<T>) -> Tensor3<T> {
    let n = alg.dim();
    let mut out = Tensor3::zeros(n);
    for (i, j, k, v) in t.nonzero_entries() {
        for p in 0..n {
            let c = alg.c(a, i, p);
            if !c.is_zero() {
                out.add_at(p, j, k, c.clone() * v.clone());
            }
            let c = alg.c(a, j, p);
            if !c.is_zero() {
                out.add_at(i, p, k, c.clone() * v.clone() * alg.z(a, i));
            }
            let c = alg.c(a, k, p);
            if !c.is_zero() {
                let before_odd = alg.is_odd(i) != alg.is_odd(j);
                let sign = if alg.is_odd(a) && before_odd { -T::one() } else { T::one() };
                out.add_at(i, j, p, c.clone() * v.clone() * sign);
            }
        }
    }
    out
}

pub fn ad_invariant<T: Scalar>(alg: &SuperAlgebra<T>, t: &Tensor3<T>) -> Result<bool> {
    if t.dim() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: t.dim() });
    }
    Ok((0..alg.dim()).all(|a| adjoint_action(alg, a, t).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{coboundary_delta, hat_antisymmetrize, verify_cobracket};
    use crate::catalog::{algebra, r_template};
    use crate::linsolve::Matrix;
    use crate::sampling::{random_rmatrix, Sampler};
    use crate::superkernel::Axiom;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn inst(id: &str, params: &[(&str, i64)]) -> RMatrix<Rational> {
        let vals: Vec<(String, Rational)> = params.iter().map(|(k, v)| (k.to_string(), q(*v, 1))).collect();
        r_template(id).unwrap().instantiate(&vals).unwrap()
    }

    #[test]
    fn zero_r() {
        let a = algebra("osp22").unwrap();
        assert!(schouten_square(&a, &RMatrix::zeros(8)).unwrap().is_zero());
    }

    #[test]
    fn catalog_examples() {
        let a = algebra("osp22").unwrap();
        assert!(is_cybe(&a, &inst("e10", &[])).unwrap());
        assert!(is_cybe(&a, &inst("b2", &[])).unwrap());
        assert!(!schouten_square(&a, &inst("h1", &[("x", 1), ("y", 0)])).unwrap().is_zero());
        assert!(!is_cybe(&a, &inst("f2", &[("x", 1), ("y", 0)])).unwrap());
        assert!(is_cybe(&a, &inst("f2", &[("x", 0), ("y", 1)])).unwrap());
    }

    #[test]
    fn f2_square_is_invariant() {
        let a = algebra("osp22").unwrap();
        let r = inst("f2", &[("x", 1), ("y", 1)]);
        let t = schouten_square(&a, &r).unwrap();
        assert!(!t.is_zero());
        assert!(ad_invariant(&a, &t).unwrap());
        let cj = verify_cobracket(&a, &coboundary_delta(&a, &r).unwrap()).unwrap();
        assert!(cj.check(Axiom::CoJacobi).unwrap().passed());
    }

    #[test]
    fn hhh_not_invariant() {
        let a = algebra("osp22").unwrap();
        let mut t = Tensor3::zeros(8);
        t.add_at(0, 0, 0, q(1, 1));
        assert!(ad_invariant(&a, &Tensor3::zeros(8)).unwrap());
        assert!(!ad_invariant(&a, &t).unwrap());
        let moved = adjoint_action(&a, 1, &t);
        let mut expect = Tensor3::zeros(8);
        for (i, j, k) in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            expect.add_at(i, j, k, q(-1, 1));
        }
        assert_eq!(moved, expect);
    }

    #[test]
    fn quadratic_scaling() {
        let a = algebra("osp22").unwrap();
        let mut s = Sampler::new(8);
        let r = random_rmatrix(&a, &mut s);
        let t = schouten_square(&a, &r).unwrap();
        for l in [q(2, 1), q(-3, 1), q(1, 2)] {
            assert_eq!(schouten_square(&a, &r.scale(&l)).unwrap(), t.scale(&(l.clone() * l)));
        }
    }

    #[test]
    fn listing_names_generators() {
        let a = algebra("osp22").unwrap();
        let mut raw = Matrix::zeros(8, 8);
        raw[(0, 1)] = q(1, 1);
        let r = hat_antisymmetrize(&a, &raw).unwrap();
        let t = schouten_square(&a, &inst("h1", &[("x", 1), ("y", 0)])).unwrap();
        assert!(t.listing(&a).contains("H"));
        assert!(schouten_square(&a, &r).unwrap().listing(&a).is_empty());
    }
}
