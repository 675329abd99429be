//! Graded bases, Koszul signs, structure constants and the Lie superalgebra axioms.

mod file;

pub use file::{AlgebraFile, BracketEntry, GeneratorEntry};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(format!("parity must be 0 or 1, got {v}")),
        }
    }
}

/// Which defining identity a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    ParityClosure,
    GradedAntisymmetry,
    GradedJacobi,
    CoParityClosure,
    CoAntisymmetry,
    CoJacobi,
    Cocycle,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::ParityClosure => "parity closure",
            Axiom::GradedAntisymmetry => "graded antisymmetry",
            Axiom::GradedJacobi => "graded Jacobi",
            Axiom::CoParityClosure => "cobracket parity closure",
            Axiom::CoAntisymmetry => "cobracket graded antisymmetry",
            Axiom::CoJacobi => "graded co-Jacobi",
            Axiom::Cocycle => "cocycle compatibility",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// Free index tuples at which the identity fails.
    pub violations: Vec<Vec<usize>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.checks.iter().filter(|c| !c.passed()).map(|c| c.axiom).collect()
    }
}

/// Finite-dimensional superalgebra given by structure constants `c_ij^k`,
/// meaning `[g_i, g_j] = sum_k c_ij^k g_k`. Odd-odd brackets live in the same tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperAlgebra<T> {
    name: String,
    generators: Vec<String>,
    parities: Vec<Parity>,
    c: Vec<T>,
    support: Vec<(usize, usize, usize)>,
}

impl<T: Scalar> SuperAlgebra<T> {
    /// Builds from a dense `n^3` tensor without checking the axioms.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        parities: Vec<Parity>,
        c: Vec<T>,
    ) -> Result<Self> {
        let n = generators.len();
        if n == 0 {
            return Err(Error::MalformedAlgebra("no generators".into()));
        }
        if parities.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: parities.len() });
        }
        if c.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: c.len() });
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::MalformedAlgebra(format!("duplicate generator `{g}`")));
            }
        }
        let mut alg = Self { name: name.into(), generators, parities, c, support: Vec::new() };
        alg.refresh_support();
        Ok(alg)
    }

    /// Abelian algebra with all brackets zero.
    pub fn abelian(name: impl Into<String>, generators: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        let n = generators.len();
        Self::new(name, generators, parities, vec![T::zero(); n * n * n])
    }

    fn refresh_support(&mut self) {
        let n = self.dim();
        self.support.clear();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.c[self.idx(i, j, k)].is_zero() {
                        self.support.push((i, j, k));
                    }
                }
            }
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dim();
        (i * n + j) * n + k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.parities[i] == Parity::Odd
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &T {
        &self.c[self.idx(i, j, k)]
    }

    pub fn structure_tensor(&self) -> &[T] {
        &self.c
    }

    /// Nonzero `(i, j, k)` positions of the structure tensor.
    pub fn support(&self) -> &[(usize, usize, usize)] {
        &self.support
    }

    /// Copy with one structure constant replaced; used to build perturbed algebras.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, v: T) -> Self {
        let mut out = self.clone();
        let p = out.idx(i, j, k);
        out.c[p] = v;
        out.refresh_support();
        out
    }

    /// True iff both generators are odd, i.e. the Koszul sign is -1.
    pub fn sign_flip(&self, i: usize, j: usize) -> bool {
        self.is_odd(i) && self.is_odd(j)
    }

    pub fn z_sign(&self, i: usize, j: usize) -> Result<T> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, dim: n });
            }
        }
        Ok(self.z(i, j))
    }

    pub(crate) fn z(&self, i: usize, j: usize) -> T {
        if self.sign_flip(i, j) {
            -T::one()
        } else {
            T::one()
        }
    }

    /// True when parities are four even followed by four odd.
    pub fn has_osp22_layout(&self) -> bool {
        self.dim() == 8 && (0..8).all(|i| self.is_odd(i) == (i >= 4))
    }

    pub fn basis(&self, i: usize) -> Result<AlgebraElement<T>> {
        let n = self.dim();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let mut coeffs = vec![T::zero(); n];
        coeffs[i] = T::one();
        Ok(AlgebraElement { coeffs })
    }

    pub fn element(&self, name: &str) -> Result<AlgebraElement<T>> {
        self.basis(self.index_of(name)?)
    }
}

/// Coordinates of an element in the generator basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<T> {
    pub coeffs: Vec<T>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coeffs: vec![T::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_negligible)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * s.clone()).collect())
    }
}

pub fn bracket<T: Scalar>(
    alg: &SuperAlgebra<T>,
    x: &AlgebraElement<T>,
    y: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    let n = alg.dim();
    for v in [x, y] {
        if v.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
        }
    }
    let mut out = AlgebraElement::<T>::zero(n);
    for &(i, j, k) in alg.support() {
        let (a, b) = (&x.coeffs[i], &y.coeffs[j]);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        out.coeffs[k] = out.coeffs[k].clone() + a.clone() * b.clone() * alg.c(i, j, k).clone();
    }
    Ok(out)
}

/// Checks parity closure, graded antisymmetry and the graded Jacobi identity
/// `sum_m c_ij^m c_mk^l z(i,k) + c_jk^m c_mi^l z(j,i) + c_ki^m c_mj^l z(k,j) = 0`.
pub fn verify_lie_superalgebra<T: Scalar>(alg: &SuperAlgebra<T>) -> VerificationReport {
    let n = alg.dim();
    let mut parity = Vec::new();
    let mut antisym = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = alg.c(i, j, k);
                if (alg.parity(i) + alg.parity(j)) != alg.parity(k) && !v.is_negligible() {
                    parity.push(vec![i, j, k]);
                }
                let mirror = -(alg.z(i, j) * alg.c(j, i, k).clone());
                if !(v.clone() - mirror).is_negligible() {
                    antisym.push(vec![i, j, k]);
                }
            }
        }
    }
    let mut jacobi = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut s = T::zero();
                    for m in 0..n {
                        let t1 = alg.c(i, j, m).clone() * alg.c(m, k, l).clone() * alg.z(i, k);
                        let t2 = alg.c(j, k, m).clone() * alg.c(m, i, l).clone() * alg.z(j, i);
                        let t3 = alg.c(k, i, m).clone() * alg.c(m, j, l).clone() * alg.z(k, j);
                        s = s + t1 + t2 + t3;
                    }
                    if !s.is_negligible() {
                        jacobi.push(vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    VerificationReport {
        checks: vec![
            AxiomCheck { axiom: Axiom::ParityClosure, violations: parity },
            AxiomCheck { axiom: Axiom::GradedAntisymmetry, violations: antisym },
            AxiomCheck { axiom: Axiom::GradedJacobi, violations: jacobi },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebra;
    use crate::Rational;

    fn osp22() -> SuperAlgebra<Rational> {
        algebra("osp22").unwrap()
    }

    #[test]
    fn koszul_signs() {
        let a = osp22();
        let ix = |s: &str| a.index_of(s).unwrap();
        assert_eq!(a.z_sign(ix("H"), ix("X+")).unwrap(), Rational::from_i64(1));
        assert_eq!(a.z_sign(ix("V+"), ix("W-")).unwrap(), Rational::from_i64(-1));
        assert_eq!(a.z_sign(ix("H"), ix("V+")).unwrap(), Rational::from_i64(1));
        assert!(a.z_sign(0, 8).is_err());
    }

    #[test]
    fn printed_brackets() {
        let a = osp22();
        let e = |s: &str| a.element(s).unwrap();
        assert_eq!(bracket(&a, &e("H"), &e("X+")).unwrap(), e("X+"));
        assert_eq!(bracket(&a, &e("V+"), &e("W-")).unwrap(), e("H").sub(&e("B")));
        assert!(bracket(&a, &e("H"), &e("B")).unwrap().is_zero());
        assert!(bracket(&a, &e("H"), &AlgebraElement::zero(3)).is_err());
    }

    #[test]
    fn osp22_axioms_hold() {
        assert!(verify_lie_superalgebra(&osp22()).passed());
    }

    #[test]
    fn abelian_passes() {
        let a = SuperAlgebra::<Rational>::abelian("ab", vec!["a".into(), "b".into()], vec![Parity::Even; 2]).unwrap();
        assert!(verify_lie_superalgebra(&a).passed());
    }

    #[test]
    fn flipped_sign_breaks_jacobi() {
        let a = osp22();
        let (h, xp, xm) = (0, 1, 2);
        let bad = a.with_constant(h, xp, xp, -Rational::from_i64(1));
        let rep = verify_lie_superalgebra(&bad);
        let jac = rep.check(Axiom::GradedJacobi).unwrap();
        assert!(!jac.passed());
        assert!(jac.violations.iter().any(|v| v[..3] == [h, xp, xm]));
    }

    #[test]
    fn float_instance_agrees() {
        let a = osp22();
        let c: Vec<f64> = a
            .structure_tensor()
            .iter()
            .map(|q| crate::scalar::format_rational(q).parse::<f64>().unwrap_or_else(|_| {
                let (p, d) = (q.numer().to_string(), q.denom().to_string());
                p.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
            }))
            .collect();
        let f = SuperAlgebra::new("osp22f", a.generator_names().to_vec(), a.parities().to_vec(), c).unwrap();
        assert!(verify_lie_superalgebra(&f).passed());
    }
}
