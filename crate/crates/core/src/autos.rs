//! The GL(2) x Z2 automorphisms of osp(2|2), their action on r-matrices, and
//! witness-based equivalence checks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{Cobracket, RMatrix};
use crate::catalog::{r_template, ParamKind, RMatrixTemplate};
use crate::cybe::Tensor3;
use crate::error::{Error, Result};
use crate::expr::{Env, Expr};
use crate::linsolve::{rank, Matrix};
use crate::report::Verdict;
use crate::sampling::Sampler;
use crate::scalar::{format_rational, rational_sqrt, Scalar};
use crate::superkernel::SuperAlgebra;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct AutoParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    /// Exponent of the V <-> W swap, 0 or 1.
    pub m: u8,
}

impl<T: Scalar> AutoParams<T> {
    pub fn new(a: T, b: T, c: T, d: T, m: u8) -> Result<Self> {
        if m > 1 {
            return Err(Error::InvalidArgument(format!("swap exponent must be 0 or 1, got {m}")));
        }
        let p = Self { a, b, c, d, m };
        if p.k().is_negligible() {
            return Err(Error::SingularParams);
        }
        Ok(p)
    }

    pub fn identity() -> Self {
        Self { a: T::one(), b: T::zero(), c: T::zero(), d: T::one(), m: 0 }
    }

    /// The swap `S`.
    pub fn swap() -> Self {
        Self { m: 1, ..Self::identity() }
    }

    pub fn k(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }
}

/// An even invertible change of generators; row `i` is the image of `g_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisChange<T> {
    a: Matrix<T>,
}

impl<T: Scalar> BasisChange<T> {
    pub fn new(alg: &SuperAlgebra<T>, a: Matrix<T>) -> Result<Self> {
        let n = alg.dim();
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.rows() });
        }
        for i in 0..n {
            for j in 0..n {
                if alg.is_odd(i) != alg.is_odd(j) && !a[(i, j)].is_negligible() {
                    return Err(Error::OddBasisChange);
                }
            }
        }
        a.inverse()?;
        Ok(Self { a })
    }

    pub fn identity(n: usize) -> Self {
        Self { a: Matrix::identity(n) }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.a
    }

    /// The matrix product `self * other`, so that
    /// `act_on_r(&a.compose(&b), r) == act_on_r(&a, &act_on_r(&b, r))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self { a: self.a.mul(&other.a)? })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self { a: self.a.inverse()? })
    }
}

/// Which H-row to use in the bosonic block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BosonicHRow {
    /// `(ad + bc) / k`, forced by the fermionic action.
    Derived,
    /// `(ac + bc) / k`, as printed; not an automorphism in general.
    Printed,
}

pub fn build_automorphism<T: Scalar>(alg: &SuperAlgebra<T>, p: &AutoParams<T>) -> Result<BasisChange<T>> {
    build_automorphism_with(alg, p, BosonicHRow::Derived)
}

pub fn build_automorphism_with<T: Scalar>(
    alg: &SuperAlgebra<T>,
    p: &AutoParams<T>,
    hrow: BosonicHRow,
) -> Result<BasisChange<T>> {
    if !alg.has_osp22_layout() {
        return Err(Error::LayoutMismatch);
    }
    let k = p.k();
    if k.is_negligible() {
        return Err(Error::SingularParams);
    }
    let (a, b, c, d) = (p.a.clone(), p.b.clone(), p.c.clone(), p.d.clone());
    let two = T::from_i64(2);
    let h0 = match hrow {
        BosonicHRow::Derived => a.clone() * d.clone() + b.clone() * c.clone(),
        BosonicHRow::Printed => a.clone() * c.clone() + b.clone() * c.clone(),
    };
    let z = T::zero;
    let mut m = Matrix::zeros(8, 8);
    let bos = [
        [h0, a.clone() * c.clone(), b.clone() * d.clone(), z()],
        [two.clone() * a.clone() * b.clone(), a.clone() * a.clone(), b.clone() * b.clone(), z()],
        [two * c.clone() * d.clone(), c.clone() * c.clone(), d.clone() * d.clone(), z()],
    ];
    for (i, row) in bos.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m[(i, j)] = v / k.clone();
        }
    }
    m[(3, 3)] = if p.m == 1 { -T::one() } else { T::one() };
    let mt = [[a, b], [c, d]];
    for (i, row) in mt.iter().enumerate() {
        // Rows V+, V- and W+, W-; the swap exchanges the two pairs of rows.
        let (rv, rw) = if p.m == 1 { (6 + i, 4 + i) } else { (4 + i, 6 + i) };
        for (j, v) in row.iter().enumerate() {
            m[(rv, 4 + j)] = v.clone();
            m[(rw, 6 + j)] = v.clone() / k.clone();
        }
    }
    Ok(BasisChange { a: m })
}

/// `sum_pq A_ip A_jq c_pq^s == sum_t c_ij^t A_ts` for all `i, j, s`.
pub fn is_automorphism<T: Scalar>(alg: &SuperAlgebra<T>, a: &Matrix<T>) -> Result<bool> {
    let n = alg.dim();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.rows() });
    }
    a.inverse()?;
    let support = alg.support();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = vec![T::zero(); n];
            for &(p, q, s) in support {
                let x = a[(i, p)].clone() * a[(j, q)].clone();
                if !x.is_zero() {
                    lhs[s] = lhs[s].clone() + x * alg.c(p, q, s).clone();
                }
            }
            for (s, l) in lhs.into_iter().enumerate() {
                let mut rhs = T::zero();
                for t in 0..n {
                    rhs = rhs + alg.c(i, j, t).clone() * a[(t, s)].clone();
                }
                if !(l - rhs).is_negligible() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `r -> A^{-T} r A^{-1}`: the same tensor written in the transformed basis.
pub fn act_on_r<T: Scalar>(a: &BasisChange<T>, r: &RMatrix<T>) -> Result<RMatrix<T>> {
    let inv = a.a.inverse()?;
    Ok(RMatrix::from_matrix_unchecked(inv.transpose().mul(r.matrix())?.mul(&inv)?))
}

/// `r -> A^T r A`, the inverse of [`act_on_r`].
pub fn pullback<T: Scalar>(a: &BasisChange<T>, r: &RMatrix<T>) -> Result<RMatrix<T>> {
    Ok(RMatrix::from_matrix_unchecked(a.a.transpose().mul(r.matrix())?.mul(&a.a)?))
}

/// `f -> A f (A^{-1} (x) A^{-1})`: a cobracket written in the transformed basis.
pub fn act_on_cobracket<T: Scalar>(a: &BasisChange<T>, f: &Cobracket<T>) -> Result<Cobracket<T>> {
    let n = f.dim();
    let inv = a.a.inverse()?;
    let mut out = Cobracket::<T>::zeros(n);
    for (s, j, k, v) in f.nonzero_entries() {
        for i in 0..n {
            let ai = a.a[(i, s)].clone() * v.clone();
            if ai.is_zero() {
                continue;
            }
            for p in 0..n {
                let aj = ai.clone() * inv[(j, p)].clone();
                if aj.is_zero() {
                    continue;
                }
                for q in 0..n {
                    let x = aj.clone() * inv[(k, q)].clone();
                    if !x.is_zero() {
                        let cur = out.get(i, p, q).clone();
                        out.set(i, p, q, cur + x);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Three-tensor written in the transformed basis, each slot by `A^{-1}`.
pub fn act_on_tensor3<T: Scalar>(a: &BasisChange<T>, t: &Tensor3<T>) -> Result<Tensor3<T>> {
    let n = t.dim();
    let inv = a.a.inverse()?;
    let mut out = Tensor3::zeros(n);
    for (i, j, k, v) in t.nonzero_entries() {
        for p in 0..n {
            let x = v.clone() * inv[(i, p)].clone();
            if x.is_zero() {
                continue;
            }
            for q in 0..n {
                let y = x.clone() * inv[(j, q)].clone();
                if y.is_zero() {
                    continue;
                }
                for s in 0..n {
                    let w = y.clone() * inv[(k, s)].clone();
                    if !w.is_zero() {
                        out.add_at(p, q, s, w);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `r -> A^T r A`.
    #[default]
    Pullback,
    /// `r -> A^{-T} r A^{-1}`.
    Pushforward,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessStep {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub m: u8,
    #[serde(default)]
    pub orientation: Orientation,
}

impl WitnessStep {
    pub fn pullback(a: &str, b: &str, c: &str, d: &str, m: u8) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into(), m, orientation: Orientation::Pullback }
    }

    fn exprs(&self) -> Result<[Expr; 4]> {
        Ok([Expr::parse(&self.a)?, Expr::parse(&self.b)?, Expr::parse(&self.c)?, Expr::parse(&self.d)?])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Taken as printed.
    Printed,
    /// Printed, with an error repaired.
    Corrected,
    /// Not printed; found by solving the transformation constraints.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "state")]
pub enum WitnessStatus {
    Active,
    Skipped { reason: String },
}

/// Source parameters, optionally tied to sample variables, carried through a sequence of
/// automorphisms and matched against the target under an explicit renaming.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceWitness {
    pub id: String,
    pub source: String,
    pub target: String,
    /// Auxiliary symbols sampled alongside the free source parameters.
    #[serde(default)]
    pub sample_vars: Vec<String>,
    /// Ordered `source parameter := expression`; constants are applied as generic-limit
    /// specializations of the source template.
    #[serde(default)]
    pub source_assign: Vec<(String, String)>,
    pub steps: Vec<WitnessStep>,
    /// `target parameter := expression in source parameters and sample variables`.
    pub target_assign: Vec<(String, String)>,
    pub provenance: Provenance,
    pub status: WitnessStatus,
    #[serde(default)]
    pub note: Option<String>,
}

impl EquivalenceWitness {
    /// Expressions that must not vanish on the witness domain.
    pub fn exclusions(&self) -> Result<Vec<String>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut push = |s: String| {
            if seen.insert(s.clone()) {
                out.push(s);
            }
        };
        for (_, e) in self.source_assign.iter().chain(&self.target_assign) {
            for d in Expr::parse(e)?.denominators() {
                push(d.to_string());
            }
        }
        for st in &self.steps {
            let [a, b, c, d] = st.exprs()?;
            for e in [&a, &b, &c, &d] {
                for den in e.denominators() {
                    push(den.to_string());
                }
            }
            let k = Expr::Sub(
                Box::new(Expr::Mul(Box::new(a), Box::new(d))),
                Box::new(Expr::Mul(Box::new(b), Box::new(c))),
            );
            push(k.to_string());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceOutcome {
    pub witness: String,
    pub verdict: Verdict,
    pub samples: usize,
    pub attempts: usize,
    pub detail: Option<String>,
}

enum Draw {
    Matched,
    Mismatch(String),
}

fn outside(e: &Error) -> bool {
    matches!(e, Error::DivisionByZero(_) | Error::SingularParams | Error::SingularMatrix)
}

fn restrict(t: &RMatrixTemplate, env: &Env) -> Env {
    t.params.iter().filter_map(|p| env.get(&p.name).map(|v| (p.name.clone(), v.clone()))).collect()
}

fn describe(env: &Env) -> String {
    let mut pairs: Vec<_> = env.iter().collect();
    pairs.sort();
    pairs.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect::<Vec<_>>().join(", ")
}

/// Checks a witness at `samples` random points of its domain.
pub fn verify_equivalence(w: &EquivalenceWitness, samples: usize, seed: u64) -> Result<EquivalenceOutcome> {
    if samples < 3 {
        return Err(Error::InvalidArgument(format!("at least 3 samples required, got {samples}")));
    }
    if let WitnessStatus::Skipped { reason } = &w.status {
        return Ok(EquivalenceOutcome {
            witness: w.id.clone(),
            verdict: Verdict::Skipped,
            samples: 0,
            attempts: 0,
            detail: Some(reason.clone()),
        });
    }
    let mut source = r_template(&w.source)?;
    let target = r_template(&w.target)?;
    let alg = crate::catalog::algebra_ref(&source.algebra)?;
    let mut assigned = Vec::new();
    let mut fixed = Env::new();
    for (name, src) in &w.source_assign {
        let e = Expr::parse(src)?;
        match e.as_const() {
            Some(v) => {
                source = source.specialize(name, v)?;
                fixed.insert(name.clone(), v.clone());
            }
            None => assigned.push((name.clone(), e)),
        }
    }
    let steps = w.steps.iter().map(|s| Ok((s.exprs()?, s.m, s.orientation))).collect::<Result<Vec<_>>>()?;
    let target_assign = w
        .target_assign
        .iter()
        .map(|(n, s)| Ok((n.clone(), Expr::parse(s)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut sampler = Sampler::new(seed);
    let mut matched = 0;
    let mut attempts = 0;
    while matched < samples && attempts < 100 * samples {
        attempts += 1;
        let mut env = fixed.clone();
        for p in &source.params {
            if assigned.iter().any(|(n, _)| *n == p.name) {
                continue;
            }
            let v = match p.kind {
                ParamKind::Continuous => sampler.rational(),
                ParamKind::Binary => Rational::from_i64(i64::from(sampler.bit())),
            };
            env.insert(p.name.clone(), v);
        }
        for v in &w.sample_vars {
            env.insert(v.clone(), sampler.rational());
        }
        let draw = (|| -> Result<Draw> {
            for (name, e) in &assigned {
                let v = e.eval(&env)?;
                env.insert(name.clone(), v);
            }
            let mut r = source.instantiate_env(&restrict(&source, &env))?;
            for ([a, b, c, d], m, orientation) in &steps {
                let p = AutoParams::new(a.eval(&env)?, b.eval(&env)?, c.eval(&env)?, d.eval(&env)?, *m)?;
                let aut = build_automorphism(alg, &p)?;
                r = match orientation {
                    Orientation::Pullback => pullback(&aut, &r)?,
                    Orientation::Pushforward => act_on_r(&aut, &r)?,
                };
            }
            let mut tenv = Env::new();
            for (name, e) in &target_assign {
                tenv.insert(name.clone(), e.eval(&env)?);
            }
            let expected = target.instantiate_env(&tenv)?;
            if expected == r {
                Ok(Draw::Matched)
            } else {
                Ok(Draw::Mismatch(format!("mismatch at {}", describe(&env))))
            }
        })();
        match draw {
            Ok(Draw::Matched) => matched += 1,
            Ok(Draw::Mismatch(detail)) => {
                return Ok(EquivalenceOutcome {
                    witness: w.id.clone(),
                    verdict: Verdict::Fail,
                    samples: matched,
                    attempts,
                    detail: Some(detail),
                })
            }
            Err(e) if outside(&e) => {}
            Err(e) => {
                return Ok(EquivalenceOutcome {
                    witness: w.id.clone(),
                    verdict: Verdict::Fail,
                    samples: matched,
                    attempts,
                    detail: Some(format!("{e} at {}", describe(&env))),
                })
            }
        }
    }
    if matched == 0 {
        return Err(Error::EmptyDomain(w.id.clone()));
    }
    let verdict = if matched == samples { Verdict::Pass } else { Verdict::Fail };
    Ok(EquivalenceOutcome {
        witness: w.id.clone(),
        verdict,
        samples: matched,
        attempts,
        detail: (matched < samples).then(|| format!("only {matched} of {samples} samples in the domain")),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "state")]
pub enum NormalStatus {
    Normalized,
    /// Diagonal entries of r_WW that are not rational squares.
    UpToSquareFactor { entries: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct NormalStep {
    pub r: RMatrix<Rational>,
    /// `act_on_r(&change, input) == r`.
    pub change: BasisChange<Rational>,
    /// The same transformation as pullback steps, in order.
    pub steps: Vec<AutoParams<Rational>>,
    pub swapped: bool,
    pub status: NormalStatus,
}

fn fermion_block(r: &RMatrix<Rational>, off: usize) -> Matrix<Rational> {
    r.matrix().submatrix(off, off, 2, 2)
}

fn mat2(a: Rational, b: Rational, c: Rational, d: Rational) -> Matrix<Rational> {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// Congruence `Q` with `Q^T w Q` diagonal.
fn diagonalize(w: &Matrix<Rational>) -> Matrix<Rational> {
    let zero = Rational::from_i64(0);
    let one = Rational::from_i64(1);
    let (p, q, s) = (w[(0, 0)].clone(), w[(0, 1)].clone(), w[(1, 1)].clone());
    if q.is_negligible() {
        if p.is_negligible() && !s.is_negligible() {
            return mat2(zero.clone(), one.clone(), one, zero);
        }
        return Matrix::identity(2);
    }
    if !p.is_negligible() {
        return mat2(one.clone(), -q / p, zero, one);
    }
    if !s.is_negligible() {
        return mat2(zero, one.clone(), one, -q / s);
    }
    mat2(one.clone(), one.clone(), one, -Rational::from_i64(1))
}

/// Mechanical steps 1 and 2: swap so that `rank r_VV >= rank r_WW`, then diagonalize
/// `r_WW` by a congruence and scale its entries to 1 where they are rational squares.
pub fn fermionic_normal_step(alg: &SuperAlgebra<Rational>, r: &RMatrix<Rational>) -> Result<NormalStep> {
    if !alg.has_osp22_layout() {
        return Err(Error::LayoutMismatch);
    }
    let mut cur = r.clone();
    let mut steps = Vec::new();
    let mut composite = BasisChange::identity(8);
    let swapped = rank(&fermion_block(&cur, 4)) < rank(&fermion_block(&cur, 6));
    if swapped {
        let s = AutoParams::swap();
        let a = build_automorphism(alg, &s)?;
        cur = pullback(&a, &cur)?;
        composite = composite.compose(&a)?;
        steps.push(s);
    }
    let w = fermion_block(&cur, 6);
    let mut q = diagonalize(&w);
    let diag = q.transpose().mul(&w)?.mul(&q)?;
    let mut leftover = Vec::new();
    let mut scale = Matrix::identity(2);
    for i in 0..2 {
        let l = diag[(i, i)].clone();
        if l.is_negligible() {
            continue;
        }
        match rational_sqrt(&l) {
            Some(root) => scale[(i, i)] = Rational::from_i64(1) / root,
            None => leftover.push(format_rational(&l)),
        }
    }
    q = q.mul(&scale)?;
    if q != Matrix::identity(2) {
        // Pullback by Mt acts on r_WW as (Mt / k)^T r_WW (Mt / k); Mt = Q / det Q gives Mt / k = Q.
        let det = q[(0, 0)].clone() * q[(1, 1)].clone() - q[(0, 1)].clone() * q[(1, 0)].clone();
        let mt = q.scale(&(Rational::from_i64(1) / det));
        let p = AutoParams::new(mt[(0, 0)].clone(), mt[(0, 1)].clone(), mt[(1, 0)].clone(), mt[(1, 1)].clone(), 0)?;
        let a = build_automorphism(alg, &p)?;
        cur = pullback(&a, &cur)?;
        composite = composite.compose(&a)?;
        steps.push(p);
    }
    let status = if leftover.is_empty() {
        NormalStatus::Normalized
    } else {
        NormalStatus::UpToSquareFactor { entries: leftover }
    };
    Ok(NormalStep { r: cur, change: composite.inverse()?, steps, swapped, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::coboundary_delta;
    use crate::catalog::{algebra, witness};
    use crate::cybe::{is_cybe, schouten_square};
    use crate::sampling::random_rmatrix;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn params(a: i64, b: i64, c: i64, d: i64, m: u8) -> AutoParams<Rational> {
        AutoParams::new(q(a, 1), q(b, 1), q(c, 1), q(d, 1), m).unwrap()
    }

    fn random_params(s: &mut Sampler) -> AutoParams<Rational> {
        loop {
            let m = u8::from(s.bit());
            if let Ok(p) = AutoParams::new(s.rational(), s.rational(), s.rational(), s.rational(), m) {
                return p;
            }
        }
    }

    #[test]
    fn singular_params_rejected() {
        assert_eq!(AutoParams::new(q(1, 1), q(2, 1), q(2, 1), q(4, 1), 0), Err(Error::SingularParams));
        assert!(AutoParams::new(q(1, 1), q(0, 1), q(0, 1), q(1, 1), 2).is_err());
    }

    #[test]
    fn identity_and_swap() {
        let a = algebra("osp22").unwrap();
        assert_eq!(build_automorphism(&a, &AutoParams::identity()).unwrap(), BasisChange::identity(8));
        let s = build_automorphism(&a, &AutoParams::swap()).unwrap();
        let m = s.matrix();
        for i in 0..3 {
            assert_eq!(m[(i, i)], q(1, 1));
        }
        assert_eq!(m[(3, 3)], q(-1, 1));
        for (i, j) in [(4, 6), (5, 7), (6, 4), (7, 5)] {
            assert_eq!(m[(i, j)], q(1, 1));
        }
        assert!(is_automorphism(&a, m).unwrap());
    }

    #[test]
    fn scaling_example() {
        let a = algebra("osp22").unwrap();
        let m = build_automorphism(&a, &params(2, 0, 0, 1, 0)).unwrap();
        let m = m.matrix();
        assert_eq!(m[(0, 0)], q(1, 1));
        assert_eq!(m[(1, 1)], q(2, 1));
        assert_eq!(m[(2, 2)], q(1, 2));
        assert_eq!(m[(3, 3)], q(1, 1));
    }

    #[test]
    fn random_autos_are_automorphisms() {
        let a = algebra("osp22").unwrap();
        let mut s = Sampler::new(1);
        for _ in 0..100 {
            let p = random_params(&mut s);
            assert!(is_automorphism(&a, build_automorphism(&a, &p).unwrap().matrix()).unwrap(), "{p:?}");
        }
        assert!(is_automorphism(&a, build_automorphism(&a, &params(2, 1, 1, 1, 0)).unwrap().matrix()).unwrap());
    }

    #[test]
    fn printed_h_row_fails() {
        let a = algebra("osp22").unwrap();
        let p = params(2, 3, 5, 7, 0);
        let printed = build_automorphism_with(&a, &p, BosonicHRow::Printed).unwrap();
        assert!(!is_automorphism(&a, printed.matrix()).unwrap());
    }

    #[test]
    fn lone_v_scaling_is_not_automorphism() {
        let a = algebra("osp22").unwrap();
        let mut m = Matrix::identity(8);
        m[(4, 4)] = q(2, 1);
        assert!(!is_automorphism(&a, &m).unwrap());
    }

    #[test]
    fn odd_basis_change_rejected() {
        let a = algebra("osp22").unwrap();
        let mut m = Matrix::identity(8);
        m[(0, 4)] = q(1, 1);
        assert_eq!(BasisChange::new(&a, m), Err(Error::OddBasisChange));
        assert_eq!(BasisChange::new(&a, Matrix::zeros(8, 8)), Err(Error::SingularMatrix));
    }

    #[test]
    fn scaling_acts_on_v_plus_squared() {
        let a = algebra("osp22").unwrap();
        let mut m = Matrix::zeros(8, 8);
        m[(4, 4)] = q(1, 1);
        let r = RMatrix::new(&a, m).unwrap();
        let out = act_on_r(&build_automorphism(&a, &params(2, 0, 0, 2, 0)).unwrap(), &r).unwrap();
        assert_eq!(out, r.scale(&q(1, 4)));
    }

    #[test]
    fn action_laws() {
        let a = algebra("osp22").unwrap();
        let mut s = Sampler::new(2);
        for _ in 0..10 {
            let x = build_automorphism(&a, &random_params(&mut s)).unwrap();
            let y = build_automorphism(&a, &random_params(&mut s)).unwrap();
            let r = random_rmatrix(&a, &mut s);
            let moved = act_on_r(&x, &r).unwrap();
            assert!(RMatrix::new(&a, moved.matrix().clone()).is_ok());
            assert_eq!(act_on_r(&x.compose(&y).unwrap(), &r).unwrap(), act_on_r(&x, &act_on_r(&y, &r).unwrap()).unwrap());
            assert_eq!(pullback(&x, &moved).unwrap(), r);
            let f = coboundary_delta(&a, &r).unwrap();
            assert_eq!(coboundary_delta(&a, &moved).unwrap(), act_on_cobracket(&x, &f).unwrap());
            let t = schouten_square(&a, &r).unwrap();
            assert_eq!(schouten_square(&a, &moved).unwrap(), act_on_tensor3(&x, &t).unwrap());
            assert_eq!(is_cybe(&a, &r).unwrap(), is_cybe(&a, &moved).unwrap());
        }
    }

    #[test]
    fn cybe_solution_stays_cybe() {
        let a = algebra("osp22").unwrap();
        let r = crate::catalog::r_template("e7").unwrap().instantiate(&[]).unwrap();
        let mut s = Sampler::new(3);
        let x = build_automorphism(&a, &random_params(&mut s)).unwrap();
        assert!(is_cybe(&a, &act_on_r(&x, &r).unwrap()).unwrap());
    }

    #[test]
    fn self_witness_passes() {
        let w = witness("self:case17").unwrap();
        assert_eq!(verify_equivalence(&w, 3, 5).unwrap().verdict, Verdict::Pass);
        assert!(verify_equivalence(&w, 2, 5).is_err());
    }

    #[test]
    fn witness_round_trips() {
        let w = witness("13->1").unwrap();
        assert_eq!(EquivalenceWitness::from_json(&w.to_json()).unwrap(), w);
        assert_eq!(w.steps.len(), 1);
        assert_eq!(w.steps[0].m, 1);
    }

    #[test]
    fn normal_step_examples() {
        let a = algebra("osp22").unwrap();
        let zero = RMatrix::zeros(8);
        let out = fermionic_normal_step(&a, &zero).unwrap();
        assert_eq!(out.r, zero);
        assert_eq!(out.change, BasisChange::identity(8));

        let mut m = Matrix::zeros(8, 8);
        m[(6, 6)] = q(4, 1);
        let r = RMatrix::new(&a, m).unwrap();
        let out = fermionic_normal_step(&a, &r).unwrap();
        assert!(out.swapped);
        assert_eq!(rank(&fermion_block(&out.r, 4)), 1);
        assert_eq!(rank(&fermion_block(&out.r, 6)), 0);
        assert_eq!(act_on_r(&out.change, &r).unwrap(), out.r);

        let mut m = Matrix::zeros(8, 8);
        m[(4, 4)] = q(1, 1);
        m[(6, 6)] = q(4, 1);
        let r = RMatrix::new(&a, m).unwrap();
        let out = fermionic_normal_step(&a, &r).unwrap();
        assert!(!out.swapped);
        assert_eq!(fermion_block(&out.r, 6), mat2(q(1, 1), q(0, 1), q(0, 1), q(0, 1)));
        assert_eq!(out.status, NormalStatus::Normalized);
        assert_eq!(act_on_r(&out.change, &r).unwrap(), out.r);
    }

    #[test]
    fn normal_step_reports_square_factor() {
        let a = algebra("osp22").unwrap();
        let mut m = Matrix::zeros(8, 8);
        m[(4, 4)] = q(1, 1);
        m[(6, 6)] = q(2, 1);
        m[(6, 7)] = q(1, 1);
        m[(7, 6)] = q(1, 1);
        m[(7, 7)] = q(1, 2);
        let r = RMatrix::new(&a, m).unwrap();
        let out = fermionic_normal_step(&a, &r).unwrap();
        assert!(matches!(out.status, NormalStatus::UpToSquareFactor { .. }));
        let w = fermion_block(&out.r, 6);
        assert_eq!(w[(0, 1)], q(0, 1));
        assert_eq!(w[(1, 1)], q(0, 1));
        assert_eq!(act_on_r(&out.change, &r).unwrap(), out.r);
    }

    #[test]
    fn normal_step_on_random_matrices() {
        let a = algebra("osp22").unwrap();
        let mut s = Sampler::new(4);
        for _ in 0..20 {
            let r = random_rmatrix(&a, &mut s);
            let out = fermionic_normal_step(&a, &r).unwrap();
            let w = fermion_block(&out.r, 6);
            assert_eq!(w[(0, 1)], q(0, 1));
            assert!(rank(&fermion_block(&out.r, 4)) >= rank(&w));
            assert_eq!(act_on_r(&out.change, &r).unwrap(), out.r);
        }
    }
}
