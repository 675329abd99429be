//! Hard-coded algebras, r-matrix templates and equivalence witnesses.

mod algebras;
mod canonical;
mod raw;
mod witnesses;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::autos::EquivalenceWitness;
use crate::bialgebra::RMatrix;
use crate::error::{Error, Result};
use crate::expr::{Env, Expr};
use crate::linsolve::Matrix;
use crate::superkernel::SuperAlgebra;
use crate::Rational;

pub use algebras::{osp12_embedding, OSP12_U1_GENERATORS, OSP22_GENERATORS};
pub use canonical::{DisplayedForm, DISPLAYED_FORMS};

pub const ALGEBRA_NAMES: [&str; 2] = ["osp22", "osp12_u1"];

static OSP22: OnceLock<SuperAlgebra<Rational>> = OnceLock::new();
static OSP12_U1: OnceLock<SuperAlgebra<Rational>> = OnceLock::new();
static TEMPLATES: OnceLock<Vec<RMatrixTemplate>> = OnceLock::new();
static WITNESSES: OnceLock<Vec<EquivalenceWitness>> = OnceLock::new();

pub fn algebra(name: &str) -> Result<SuperAlgebra<Rational>> {
    algebra_ref(name).cloned()
}

pub(crate) fn algebra_ref(name: &str) -> Result<&'static SuperAlgebra<Rational>> {
    match name {
        "osp22" => Ok(OSP22.get_or_init(algebras::osp22)),
        "osp12_u1" => Ok(OSP12_U1.get_or_init(|| {
            algebras::osp12_u1(OSP22.get_or_init(algebras::osp22)).expect("osp12_u1 embeds in osp22")
        })),
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamKind {
    Continuous,
    Binary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub kind: ParamKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeBound {
    Polynomial(u32),
    RationalFunction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    RawCase,
    Canonical,
    /// A canonical expression kept exactly as printed where it is known to be wrong.
    PrintedVariant,
    Osp12,
}

/// What the classification asserts about the classical Yang-Baxter equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CybeClaim {
    Always,
    IffXZero,
    Unclaimed,
}

#[derive(Clone, Debug)]
pub struct RMatrixTemplate {
    pub id: String,
    pub algebra: String,
    pub params: Vec<Param>,
    pub family: Family,
    pub cybe: CybeClaim,
    pub note: Option<String>,
    entries: Vec<Vec<Expr>>,
}

impl RMatrixTemplate {
    pub fn entry(&self, i: usize, j: usize) -> &Expr {
        &self.entries[i][j]
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn param(&self, name: &str) -> Option<&Param> {
        self.params.iter().find(|p| p.name == name)
    }

    pub fn degree_bounds(&self) -> Vec<(String, DegreeBound)> {
        self.params
            .iter()
            .map(|p| {
                let mut bound = DegreeBound::Polynomial(0);
                for e in self.entries.iter().flatten() {
                    bound = match (bound, degree(e, &p.name)) {
                        (DegreeBound::Polynomial(a), Some(b)) => DegreeBound::Polynomial(a.max(b)),
                        _ => DegreeBound::RationalFunction,
                    };
                }
                (p.name.clone(), bound)
            })
            .collect()
    }

    /// True when a `{0, 1, 2}` grid per parameter decides identities of the entries.
    pub fn grid_sufficient(&self) -> bool {
        self.degree_bounds().iter().all(|(_, b)| matches!(b, DegreeBound::Polynomial(d) if *d <= 2))
    }

    /// Denominators that must not vanish, deduplicated by printed form.
    pub fn exclusions(&self) -> Vec<Expr> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in self.entries.iter().flatten() {
            for d in e.denominators() {
                if seen.insert(d.to_string()) {
                    out.push(d);
                }
            }
        }
        out
    }

    /// All points of `{0, 1, 2}` per continuous and `{0, 1}` per binary parameter.
    pub fn grid(&self) -> Vec<Vec<(String, Rational)>> {
        let mut points: Vec<Vec<(String, Rational)>> = vec![Vec::new()];
        for p in &self.params {
            let range: &[i64] = match p.kind {
                ParamKind::Continuous => &[0, 1, 2],
                ParamKind::Binary => &[0, 1],
            };
            points = points
                .into_iter()
                .flat_map(|pt| {
                    range.iter().map(move |&v| {
                        let mut next = pt.clone();
                        next.push((p.name.clone(), Rational::from_integer(v.into())));
                        next
                    })
                })
                .collect();
        }
        points
    }

    pub fn instantiate(&self, values: &[(String, Rational)]) -> Result<RMatrix<Rational>> {
        let env: Env = values.iter().cloned().collect();
        if env.len() != values.len() {
            return Err(Error::Parse(format!("duplicate parameter for `{}`", self.id)));
        }
        self.instantiate_env(&env)
    }

    pub fn instantiate_env(&self, env: &Env) -> Result<RMatrix<Rational>> {
        for name in env.keys() {
            if self.param(name).is_none() {
                return Err(Error::Parse(format!("`{}` has no parameter `{name}`", self.id)));
            }
        }
        for p in &self.params {
            let v = env.get(&p.name).ok_or_else(|| Error::Unbound(p.name.clone()))?;
            if p.kind == ParamKind::Binary && !v.is_zero() && !v.is_one() {
                return Err(Error::NonBinary { template: self.id.clone(), name: p.name.clone() });
            }
        }
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.entries[i][j].eval(env)?;
            }
        }
        RMatrix::new(algebra_ref(&self.algebra)?, m)
    }

    /// Fixes `name := value` in the generic limit and drops the parameter.
    pub fn specialize(&self, name: &str, value: &Rational) -> Result<RMatrixTemplate> {
        if self.param(name).is_none() {
            return Err(Error::Parse(format!("`{}` has no parameter `{name}`", self.id)));
        }
        let mut out = self.clone();
        out.params.retain(|p| p.name != name);
        for e in out.entries.iter_mut().flatten() {
            *e = e.specialize(name, value);
        }
        Ok(out)
    }
}

impl fmt::Display for RMatrixTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = algebra_ref(&self.algebra).map_err(|_| fmt::Error)?.generator_names();
        writeln!(f, "{} on {}", self.id, self.algebra)?;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_const_zero() {
                    writeln!(f, "  r[{}, {}] = {}", names[i], names[j], e)?;
                }
            }
        }
        Ok(())
    }
}

/// Degree of `e` in `var`, or `None` when `var` occurs in a denominator.
fn degree(e: &Expr, var: &str) -> Option<u32> {
    Some(match e {
        Expr::Const(_) => 0,
        Expr::Var(v) => u32::from(v == var),
        Expr::Neg(a) => degree(a, var)?,
        Expr::Add(a, b) | Expr::Sub(a, b) => degree(a, var)?.max(degree(b, var)?),
        Expr::Mul(a, b) => degree(a, var)? + degree(b, var)?,
        Expr::Div(a, b) => {
            if b.vars().contains(var) {
                return None;
            }
            degree(a, var)?
        }
        Expr::Pow(a, n) => degree(a, var)? * n,
    })
}

fn parse_static(src: &str) -> Expr {
    Expr::parse(src).unwrap_or_else(|e| panic!("catalog expression `{src}`: {e}"))
}

fn raw_template(c: &raw::RawCase) -> RMatrixTemplate {
    let zero = Expr::constant(Rational::zero());
    let mut entries = vec![vec![zero; 8]; 8];
    let mut params: Vec<Param> = Vec::new();
    for (off, block) in [(0, &c.r_b), (4, &c.r_f)] {
        for i in 0..4 {
            for j in 0..4 {
                let e = parse_static(block[i][j]);
                for v in e.vars() {
                    if !params.iter().any(|p| p.name == v) {
                        params.push(Param { name: v, kind: ParamKind::Continuous });
                    }
                }
                entries[off + i][off + j] = e;
            }
        }
    }
    RMatrixTemplate {
        id: format!("case{}", c.case),
        algebra: "osp22".into(),
        params,
        family: Family::RawCase,
        cybe: CybeClaim::Unclaimed,
        note: None,
        entries,
    }
}

fn linear_combination(alg: &SuperAlgebra<Rational>, names: &[&str]) -> Vec<usize> {
    names
        .iter()
        .map(|n| alg.index_of(n).unwrap_or_else(|_| panic!("catalog generator `{n}`")))
        .collect()
}

fn wedge_template(spec: &canonical::WedgeSpec) -> RMatrixTemplate {
    let alg = algebra_ref(spec.algebra).expect("catalog algebra");
    let n = alg.dim();
    let mut acc: BTreeMap<(usize, usize), Vec<(bool, Expr)>> = BTreeMap::new();
    for term in &spec.terms {
        let coef = parse_static(term.coef);
        for &a in &linear_combination(alg, term.left) {
            for &b in &linear_combination(alg, term.right) {
                acc.entry((a, b)).or_default().push((false, coef.clone()));
                // a ^ b = a (x) b - z(a, b) b (x) a
                acc.entry((b, a)).or_default().push((!alg.sign_flip(a, b), coef.clone()));
            }
        }
    }
    let mut entries = vec![vec![Expr::constant(Rational::zero()); n]; n];
    for ((i, j), parts) in acc {
        let mut it = parts.into_iter();
        let (neg, first) = it.next().expect("nonempty");
        let mut e = if neg { Expr::Neg(Box::new(first)) } else { first };
        for (neg, p) in it {
            e = if neg { Expr::Sub(Box::new(e), Box::new(p)) } else { Expr::Add(Box::new(e), Box::new(p)) };
        }
        entries[i][j] = e;
    }
    RMatrixTemplate {
        id: spec.id.to_string(),
        algebra: spec.algebra.to_string(),
        params: spec.params.iter().map(|(name, kind)| Param { name: name.to_string(), kind: *kind }).collect(),
        family: spec.family,
        cybe: spec.cybe,
        note: spec.note.map(str::to_string),
        entries,
    }
}

pub fn templates() -> &'static [RMatrixTemplate] {
    TEMPLATES.get_or_init(|| {
        let mut out: Vec<RMatrixTemplate> = raw::RAW_CASES.iter().map(raw_template).collect();
        out.extend(canonical::osp22_specs().iter().map(wedge_template));
        out.extend(canonical::osp12_specs().iter().map(wedge_template));
        out
    })
}

pub fn r_template(id: &str) -> Result<RMatrixTemplate> {
    templates()
        .iter()
        .find(|t| t.id == id)
        .cloned()
        .ok_or_else(|| Error::UnknownTemplate(id.to_string()))
}

/// Templates of one family, in catalog order.
pub fn family(f: Family) -> Vec<&'static RMatrixTemplate> {
    templates().iter().filter(|t| t.family == f).collect()
}

pub fn witness_list() -> &'static [EquivalenceWitness] {
    WITNESSES.get_or_init(witnesses::all)
}

/// Looks up a witness; `self:<template>` yields the identity witness of any template.
pub fn witness(id: &str) -> Result<EquivalenceWitness> {
    if let Some(t) = id.strip_prefix("self:") {
        return self_witness(t);
    }
    witness_list()
        .iter()
        .find(|w| w.id == id)
        .cloned()
        .ok_or_else(|| Error::UnknownWitness(id.to_string()))
}

pub fn self_witness(template: &str) -> Result<EquivalenceWitness> {
    let t = r_template(template)?;
    Ok(witnesses::identity(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{block_split, coboundary_delta, verify_cobracket, verify_cocycle};
    use crate::scalar::{parse_rational, Scalar};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn vals(pairs: &[(&str, Rational)]) -> Vec<(String, Rational)> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn ids_unique_and_witnesses_resolve() {
        let mut seen = BTreeSet::new();
        for t in templates() {
            assert!(seen.insert(t.id.clone()), "duplicate {}", t.id);
        }
        let mut wseen = BTreeSet::new();
        for w in witness_list() {
            assert!(wseen.insert(w.id.clone()), "duplicate witness {}", w.id);
            assert!(r_template(&w.source).is_ok(), "{}", w.source);
            assert!(r_template(&w.target).is_ok(), "{}", w.target);
        }
        assert_eq!(family(Family::RawCase).len(), 22);
        assert_eq!(family(Family::Osp12).len(), 7);
    }

    #[test]
    fn e10_is_v_plus_squared() {
        let r = r_template("e10").unwrap().instantiate(&[]).unwrap();
        let mut m = Matrix::zeros(8, 8);
        m[(4, 4)] = q(1, 1);
        assert_eq!(r.matrix(), &m);
    }

    #[test]
    fn b2_is_hat_of_h_x() {
        let r = r_template("b2").unwrap().instantiate(&[]).unwrap();
        let mut m = Matrix::zeros(8, 8);
        m[(0, 1)] = q(1, 1);
        m[(1, 0)] = q(-1, 1);
        assert_eq!(r.matrix(), &m);
    }

    #[test]
    fn case19_blocks() {
        let a = algebra("osp22").unwrap();
        let t = r_template("case19").unwrap();
        let r = t.instantiate(&vals(&[("J", q(2, 1)), ("K", q(1, 1)), ("F", q(1, 1))])).unwrap();
        let b = block_split(&a, &r).unwrap();
        let h = q(1, 2);
        let z = q(0, 1);
        let one = q(1, 1);
        let rb = Matrix::from_rows(vec![
            vec![z.clone(), one.clone(), z.clone(), one.clone()],
            vec![-one.clone(), z.clone(), -h.clone(), one.clone()],
            vec![z.clone(), h.clone(), z.clone(), z.clone()],
            vec![-one.clone(), -one.clone(), z.clone(), z.clone()],
        ])
        .unwrap();
        let rf = Matrix::from_rows(vec![
            vec![one.clone(), z.clone(), z.clone(), h.clone()],
            vec![z.clone(), z.clone(), -h.clone(), z.clone()],
            vec![z.clone(), -h.clone(), z.clone(), z.clone()],
            vec![h.clone(), z.clone(), z.clone(), z],
        ])
        .unwrap();
        assert_eq!(b.r_b, rb);
        assert_eq!(b.r_f, rf);
    }

    #[test]
    fn binary_params_are_enforced() {
        let t = r_template("a2").unwrap();
        let err = t.instantiate(&vals(&[("alpha", q(2, 1)), ("beta", q(0, 1))])).unwrap_err();
        assert!(matches!(err, Error::NonBinary { .. }));
        assert!(matches!(t.instantiate(&vals(&[("alpha", q(1, 1))])), Err(Error::Unbound(_))));
    }

    #[test]
    fn degree_bounds() {
        let t = r_template("case1").unwrap();
        let b: BTreeMap<_, _> = t.degree_bounds().into_iter().collect();
        assert_eq!(b["J"], DegreeBound::RationalFunction);
        assert!(!t.grid_sufficient());
        assert!(r_template("h1").unwrap().grid_sufficient());
        assert_eq!(r_template("a2").unwrap().grid().len(), 4);
        assert_eq!(r_template("h1").unwrap().grid().len(), 9);
        let ex: Vec<String> = t.exclusions().iter().map(|e| e.to_string()).collect();
        assert!(ex.contains(&"J".to_string()));
    }

    #[test]
    fn specialize_takes_generic_limit() {
        let t = r_template("case10").unwrap().specialize("Z", &q(0, 1)).unwrap();
        assert!(t.param("Z").is_none());
        let r = t.instantiate(&vals(&[("X", q(0, 1)), ("J", q(3, 1))]));
        assert!(r.is_ok());
    }

    #[test]
    fn canonical_templates_are_cocycles() {
        for t in templates().iter().filter(|t| t.family != Family::RawCase) {
            let a = algebra(&t.algebra).unwrap();
            for pt in t.grid().into_iter().take(4) {
                let r = t.instantiate(&pt).unwrap();
                let f = coboundary_delta(&a, &r).unwrap();
                assert!(verify_cocycle(&a, &f).unwrap().passed(), "{}", t.id);
                let rep = verify_cobracket(&a, &f).unwrap();
                let cj_expected = t.family != Family::PrintedVariant;
                if cj_expected {
                    assert!(rep.passed(), "{} at {:?}", t.id, pt);
                }
            }
        }
    }

    #[test]
    fn displayed_forms_match_wedges() {
        let a = algebra("osp22").unwrap();
        let pts = [q(3, 1), q(-5, 2), q(7, 3)];
        for d in DISPLAYED_FORMS {
            let t = r_template(d.template).unwrap();
            let mut env = Env::new();
            for (k, p) in d.params.iter().enumerate() {
                let v = if *p == "alpha" { q(1, 1) } else { pts[k].clone() };
                env.insert(p.to_string(), v);
            }
            let mut tv = Env::new();
            for (name, src) in d.assign {
                tv.insert(name.to_string(), Expr::parse(src).unwrap().eval(&env).unwrap());
            }
            let r = t.instantiate_env(&tv).unwrap();
            let b = block_split(&a, &r).unwrap();
            let mut equal = true;
            for i in 0..4 {
                for j in 0..4 {
                    let eb = Expr::parse(d.r_b[i][j]).unwrap().eval(&env).unwrap();
                    let ef = Expr::parse(d.r_f[i][j]).unwrap().eval(&env).unwrap();
                    equal &= b.r_b[(i, j)] == eb && b.r_f[(i, j)] == ef;
                }
            }
            assert_eq!(equal, d.consistent, "display of {}", d.template);
        }
    }

    #[test]
    fn k2_display_differs_only_in_h_x_sign() {
        let a = algebra("osp22").unwrap();
        let d = DISPLAYED_FORMS.iter().find(|d| d.template == "k2").unwrap();
        let env: Env = [("K".to_string(), q(3, 1)), ("S".to_string(), q(1, 1))].into_iter().collect();
        let x = parse_rational("-1/2").unwrap();
        let r = r_template("k2").unwrap().instantiate(&vals(&[("x", x)])).unwrap();
        let b = block_split(&a, &r).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let eb = Expr::parse(d.r_b[i][j]).unwrap().eval(&env).unwrap();
                let off = matches!((i, j), (0, 1) | (1, 0));
                assert_eq!(b.r_b[(i, j)] == eb, !off, "({i}, {j})");
                if off {
                    assert_eq!(b.r_b[(i, j)], -eb);
                }
            }
        }
    }
}
