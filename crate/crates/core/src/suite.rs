//! The acceptance suite: one [`Check`] per criterion plus supplementary cross-checks.

use num_traits::Zero;
use rayon::prelude::*;

use crate::autos::{
    act_on_r, build_automorphism, build_automorphism_with, is_automorphism, pullback, verify_equivalence, AutoParams,
    BosonicHRow,
};
use crate::bialgebra::{block_split, coboundary_delta, verify_cobracket, verify_cocycle, verify_cocycle_with, CocycleForm, RMatrix};
use crate::catalog::{algebra_ref, family, r_template, witness_list, CybeClaim, Family, RMatrixTemplate, DISPLAYED_FORMS};
use crate::cybe::{ad_invariant, is_cybe, schouten_square};
use crate::error::{Error, Result};
use crate::expr::{Env, Expr};
use crate::linsolve::{coboundary_solve, cocycle_space};
use crate::report::{Check, Verdict};
use crate::sampling::{random_rmatrix, sample_space_size, Sampler};
use crate::scalar::{format_rational, Scalar};
use crate::superkernel::{verify_lie_superalgebra, SuperAlgebra};
use crate::Rational;

/// Witnesses that must be present and pass.
pub const REQUIRED_WITNESSES: &[&str] = &[
    "13->1", "8->22", "18->12", "15->14", "20->2", "3->b1", "3->b2", "4->c1", "6->d1", "10->f0", "10->f1",
    "10->f2", "2->h1", "14->i1", "14->i2", "17->j1", "17->j2", "19->a1", "19->a2", "21->k1", "21->k2",
];

/// Witnesses that must be reported as skipped.
pub const SKIPPED_WITNESSES: &[&str] = &["12->g2@printed", "22->e5@c9'"];

pub const DEFAULT_SAMPLES: usize = 5;

type Criterion = fn(u64) -> Check;

const CRITERIA: &[Criterion] = &[
    algebra_axioms,
    cocycle_dimension,
    coboundary_property,
    canonical_validity,
    cybe_partition,
    automorphism_family,
    equivalence_witnesses,
    osp12_list,
    property_suites,
    displayed_forms,
    raw_cases,
    printed_variants,
];

/// Runs every check; independent checks run concurrently.
pub fn acceptance(seed: u64) -> Vec<Check> {
    CRITERIA.par_iter().map(|c| c(seed)).collect()
}

fn osp22() -> &'static SuperAlgebra<Rational> {
    algebra_ref("osp22").expect("built-in")
}

fn osp12() -> &'static SuperAlgebra<Rational> {
    algebra_ref("osp12_u1").expect("built-in")
}

fn point(pt: &[(String, Rational)]) -> String {
    if pt.is_empty() {
        return "()".into();
    }
    pt.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect::<Vec<_>>().join(", ")
}

/// Cobracket axioms and compatibility of `delta_r`; `Err` names the first failed axiom.
pub fn bialgebra_verdict(alg: &SuperAlgebra<Rational>, r: &RMatrix<Rational>) -> Result<std::result::Result<(), String>> {
    let f = coboundary_delta(alg, r)?;
    let mut rep = verify_cobracket(alg, &f)?;
    rep.checks.push(verify_cocycle(alg, &f)?);
    let failed = rep.failed_axioms();
    Ok(if failed.is_empty() { Ok(()) } else { Err(format!("{failed:?}")) })
}

pub fn algebra_axioms(_seed: u64) -> Check {
    let mut c = Check::new("1-algebra-axioms", "osp(2|2) and osp(1|2)+u(1) satisfy the Lie superalgebra axioms");
    for alg in [osp22(), osp12()] {
        let rep = verify_lie_superalgebra(alg);
        c.require(rep.passed(), format!("{}: failed {:?}", alg.name(), rep.failed_axioms()));
        c.detail(format!("{}: dimension {}, all axioms {}", alg.name(), alg.dim(), Verdict::from_bool(rep.passed())));
    }
    c
}

pub fn cocycle_dimension(_seed: u64) -> Check {
    let mut c = Check::new("2-cocycle-dimension", "the cocycle space of osp(2|2) has dimension 16");
    let s = cocycle_space(osp22());
    c.detail(format!("osp22: {} unknowns, rank {}, dimension {}", s.unknowns, s.rank, s.dimension));
    c.require(s.dimension == 16, format!("osp22 dimension {} != 16", s.dimension));
    let t = cocycle_space(osp12());
    c.detail(format!("osp12_u1: {} unknowns, rank {}, dimension {} (recorded)", t.unknowns, t.rank, t.dimension));
    c
}

pub fn coboundary_property(_seed: u64) -> Check {
    let mut c = Check::new("3-coboundary", "every cocycle is a coboundary and delta round-trips exactly");
    for alg in [osp22(), osp12()] {
        let space = cocycle_space(alg);
        let mut solved = 0;
        let mut printed_rejects = 0;
        for (idx, f) in space.basis.iter().enumerate() {
            match coboundary_solve(alg, f) {
                Ok(Some(r)) if coboundary_delta(alg, &r).as_ref() == Ok(f) => solved += 1,
                Ok(_) => c.fail(format!("{}: basis element {idx} is not a coboundary", alg.name())),
                Err(e) => c.fail(format!("{}: basis element {idx}: {e}", alg.name())),
            }
            if !verify_cocycle_with(alg, f, CocycleForm::Printed).map(|x| x.passed()).unwrap_or(false) {
                printed_rejects += 1;
            }
        }
        c.detail(format!("{}: {solved} of {} basis cocycles solved and round-tripped", alg.name(), space.dimension));
        if alg.name() == "osp22" {
            c.detail(format!(
                "the literal index placement of the compatibility identity rejects {printed_rejects} of {} coboundaries; the derived placement is used",
                space.dimension
            ));
        }
    }
    c
}

fn grid_validity(c: &mut Check, templates: &[&RMatrixTemplate]) {
    for t in templates {
        let alg = algebra_ref(&t.algebra).expect("catalog algebra");
        let grid = t.grid();
        let mut ok = 0;
        for pt in &grid {
            match t.instantiate(pt).and_then(|r| bialgebra_verdict(alg, &r)) {
                Ok(Ok(())) => ok += 1,
                Ok(Err(axioms)) => c.fail(format!("{} at {}: {axioms}", t.id, point(pt))),
                Err(e) => c.fail(format!("{} at {}: {e}", t.id, point(pt))),
            }
        }
        c.detail(format!("{}: {ok}/{} grid points valid", t.id, grid.len()));
    }
}

pub fn canonical_validity(_seed: u64) -> Check {
    let mut c =
        Check::new("4-canonical-validity", "every canonical r-matrix yields a valid super-bialgebra over its grid");
    grid_validity(&mut c, &family(Family::Canonical));
    c
}

fn x_of(pt: &[(String, Rational)]) -> Option<&Rational> {
    pt.iter().find(|(k, _)| k == "x").map(|(_, v)| v)
}

fn cybe_check(c: &mut Check, templates: &[&RMatrixTemplate]) {
    for t in templates {
        let alg = algebra_ref(&t.algebra).expect("catalog algebra");
        let mut statuses = Vec::new();
        for pt in t.grid() {
            let got = match t.instantiate(&pt).and_then(|r| is_cybe(alg, &r)) {
                Ok(v) => v,
                Err(e) => {
                    c.fail(format!("{} at {}: {e}", t.id, point(&pt)));
                    continue;
                }
            };
            let expected = match t.cybe {
                CybeClaim::Always => Some(true),
                CybeClaim::IffXZero => Some(x_of(&pt).is_none_or(|x| x.is_zero())),
                CybeClaim::Unclaimed => None,
            };
            if let Some(e) = expected {
                c.require(got == e, format!("{} at {}: CYBE {got}, claimed {e}", t.id, point(&pt)));
            }
            statuses.push(format!("{}:{}", point(&pt), got));
        }
        let claim = match t.cybe {
            CybeClaim::Always => "always",
            CybeClaim::IffXZero => "iff x = 0",
            CybeClaim::Unclaimed => "computed",
        };
        c.detail(format!("{} ({claim}): {}", t.id, statuses.join("; ")));
    }
}

pub fn cybe_partition(_seed: u64) -> Check {
    let mut c = Check::new(
        "5-cybe-partition",
        "CYBE holds everywhere for b2, c0, a2, j2, f1, e5-e10 and otherwise exactly at x = 0",
    );
    cybe_check(&mut c, &family(Family::Canonical));
    c
}

fn random_params(s: &mut Sampler) -> AutoParams<Rational> {
    loop {
        let m = u8::from(s.bit());
        if let Ok(p) = AutoParams::new(s.rational(), s.rational(), s.rational(), s.rational(), m) {
            return p;
        }
    }
}

pub fn automorphism_family(seed: u64) -> Check {
    let mut c = Check::new(
        "6-automorphisms",
        "100 random parameter sets give automorphisms; the printed H-row (ac+bc)/k does not",
    );
    let alg = osp22();
    let mut s = Sampler::new(seed ^ 0x6);
    let mut good = 0;
    let mut printed_fail = 0;
    let mut printed_tested = 0;
    for _ in 0..100 {
        let p = random_params(&mut s);
        match build_automorphism(alg, &p).and_then(|a| is_automorphism(alg, a.matrix())) {
            Ok(true) => good += 1,
            Ok(false) => c.fail(format!("not an automorphism: {p:?}")),
            Err(e) => c.fail(format!("{p:?}: {e}")),
        }
        if p.a.clone() * (p.c.clone() - p.d.clone()) != Rational::from_i64(0) {
            printed_tested += 1;
            let printed = build_automorphism_with(alg, &p, BosonicHRow::Printed)
                .and_then(|a| is_automorphism(alg, a.matrix()));
            if printed == Ok(false) {
                printed_fail += 1;
            } else {
                c.fail(format!("printed H-row accepted at {p:?}"));
            }
        }
    }
    let fixed = AutoParams::new(
        Rational::from_i64(2),
        Rational::from_i64(3),
        Rational::from_i64(5),
        Rational::from_i64(7),
        0,
    )
    .expect("nonsingular");
    let fixed_fails = build_automorphism_with(alg, &fixed, BosonicHRow::Printed)
        .and_then(|a| is_automorphism(alg, a.matrix()))
        == Ok(false);
    c.require(fixed_fails, "printed H-row accepted at (2, 3, 5, 7)");
    c.detail(format!("{good}/100 random parameter sets are automorphisms with H-row (ad+bc)/k"));
    c.detail(format!("printed H-row rejected at {printed_fail}/{printed_tested} random points and at (2, 3, 5, 7)"));
    c
}

pub fn equivalence_witnesses(seed: u64) -> Check {
    let mut c = Check::new(
        "7-equivalence-witnesses",
        "every transcribed equivalence witness holds at 5 exact samples; unverifiable ones are skipped",
    );
    let outcomes: Vec<_> = witness_list()
        .par_iter()
        .map(|w| (w.id.clone(), verify_equivalence(w, DEFAULT_SAMPLES, seed)))
        .collect();
    for (id, out) in &outcomes {
        match out {
            Ok(o) => {
                let line = match &o.detail {
                    Some(d) => format!("{id}: {} ({} samples, {} draws) {d}", o.verdict, o.samples, o.attempts),
                    None => format!("{id}: {} ({} samples, {} draws)", o.verdict, o.samples, o.attempts),
                };
                match o.verdict {
                    Verdict::Fail => c.fail(line),
                    Verdict::Skipped if !SKIPPED_WITNESSES.contains(&id.as_str()) && !id.starts_with("22->") => {
                        c.fail(line)
                    }
                    _ => c.detail(line),
                }
            }
            Err(e) => c.fail(format!("{id}: {e}")),
        }
    }
    for req in REQUIRED_WITNESSES {
        let ok = outcomes.iter().any(|(id, o)| id == req && matches!(o, Ok(x) if x.verdict == Verdict::Pass));
        c.require(ok, format!("required witness {req} missing or not passing"));
    }
    for req in SKIPPED_WITNESSES {
        let ok = outcomes.iter().any(|(id, o)| id == req && matches!(o, Ok(x) if x.verdict == Verdict::Skipped));
        c.require(ok, format!("witness {req} should be reported as skipped"));
    }
    c.detail(format!(
        "sampled identities: a nonzero rational function of total numerator degree D vanishes at a random sample \
         with probability at most D/{} per coordinate (Schwartz-Zippel over the sample set)",
        sample_space_size()
    ));
    c
}

pub fn osp12_list(_seed: u64) -> Check {
    let mut c = Check::new(
        "8-osp12-u1-list",
        "o1-o7 are valid super-bialgebras over their grids; the x-families fail CYBE for x != 0",
    );
    let list = family(Family::Osp12);
    grid_validity(&mut c, &list);
    cybe_check(&mut c, &list);
    c
}

pub fn property_suites(seed: u64) -> Check {
    let mut c = Check::new(
        "9-property-suites",
        "delta_r is a cocycle, co-Jacobi matches ad-invariance of [[r, r]], CYBE is basis independent, the action is a group action",
    );
    let alg = osp22();
    let mut s = Sampler::new(seed ^ 0x9);
    let mut samples: Vec<RMatrix<Rational>> = (0..50).map(|_| random_rmatrix(alg, &mut s)).collect();
    let mut cocycles = 0;
    let mut agree = 0;
    for r in &samples {
        let f = coboundary_delta(alg, r).expect("shape");
        if verify_cocycle(alg, &f).map(|x| x.passed()).unwrap_or(false) {
            cocycles += 1;
        } else {
            c.fail("random r whose coboundary violates compatibility");
        }
        let cj = verify_cobracket(alg, &f).expect("shape").passed();
        let inv = ad_invariant(alg, &schouten_square(alg, r).expect("shape")).expect("shape");
        if cj == inv {
            agree += 1;
        } else {
            c.fail(format!("co-Jacobi {cj} but ad-invariance {inv}"));
        }
    }
    c.detail(format!("(a) {cocycles}/50 random coboundaries satisfy compatibility"));
    c.detail(format!("(b) co-Jacobi and ad-invariance agree on {agree}/50 random r"));

    // CYBE solutions and non-solutions from the catalog, at random parameters.
    for id in ["e5", "e6", "e7", "c0", "j2", "h1", "f2", "e1"] {
        let t = r_template(id).expect("catalog");
        let pt: Vec<(String, Rational)> = t.params.iter().map(|p| (p.name.clone(), s.rational())).collect();
        samples.push(t.instantiate(&pt).expect("valid point"));
    }
    let mut invariant = 0;
    let mut law = 0;
    for k in 0..20 {
        let r = if k % 2 == 0 { &samples[50 + (k / 2) % 8] } else { &samples[k] };
        let a = build_automorphism(alg, &random_params(&mut s)).expect("nonsingular");
        let b = build_automorphism(alg, &random_params(&mut s)).expect("nonsingular");
        let moved = act_on_r(&a, r).expect("invertible");
        if is_cybe(alg, r).ok() == is_cybe(alg, &moved).ok() {
            invariant += 1;
        } else {
            c.fail("CYBE status changed under an automorphism");
        }
        let lhs = act_on_r(&a.compose(&b).expect("8x8"), r).expect("invertible");
        let rhs = act_on_r(&a, &act_on_r(&b, r).expect("invertible")).expect("invertible");
        let back = pullback(&a, &moved).expect("8x8");
        if lhs == rhs && &back == r {
            law += 1;
        } else {
            c.fail("group law or inverse law violated");
        }
    }
    c.detail(format!("(c) CYBE status preserved under {invariant}/20 random automorphisms"));
    c.detail(format!("(d) composition and inverse laws hold for {law}/20 random pairs"));
    c
}

fn eval_block(block: &[[&str; 4]; 4], env: &Env) -> Result<Vec<Vec<Rational>>> {
    block.iter().map(|row| row.iter().map(|s| Expr::parse(s)?.eval(env)).collect()).collect()
}

pub fn displayed_forms(seed: u64) -> Check {
    let mut c = Check::new(
        "x1-displayed-forms",
        "block-matrix displays of canonical forms agree with their wedge expressions",
    );
    let alg = osp22();
    let mut s = Sampler::new(seed ^ 0x11);
    for d in DISPLAYED_FORMS {
        let mut run = || -> Result<bool> {
            let mut env = Env::new();
            for p in d.params {
                let v = if *p == "alpha" { Rational::from_i64(1) } else { s.rational() };
                env.insert(p.to_string(), v);
            }
            let t = r_template(d.template)?;
            let mut tenv = Env::new();
            for (name, src) in d.assign {
                tenv.insert(name.to_string(), Expr::parse(src)?.eval(&env)?);
            }
            let b = block_split(alg, &t.instantiate_env(&tenv)?)?;
            Ok(b.r_b.to_rows() == eval_block(&d.r_b, &env)? && b.r_f.to_rows() == eval_block(&d.r_f, &env)?)
        };
        match run() {
            Ok(eq) if eq == d.consistent => c.detail(if eq {
                format!("{}: display matches", d.template)
            } else {
                format!("{}: display differs from the wedge expression, as recorded", d.template)
            }),
            Ok(eq) => c.fail(format!("{}: equality {eq}, expected {}", d.template, d.consistent)),
            Err(e) => c.fail(format!("{}: {e}", d.template)),
        }
    }
    c
}

pub fn raw_cases(seed: u64) -> Check {
    let mut c =
        Check::new("x2-raw-cases", "each of the 22 raw case families yields a valid super-bialgebra at random points");
    let alg = osp22();
    let mut s = Sampler::new(seed ^ 0x12);
    for t in family(Family::RawCase) {
        let mut ok = 0;
        let mut draws = 0;
        while ok < DEFAULT_SAMPLES && draws < 100 {
            draws += 1;
            let pt: Vec<(String, Rational)> = t.params.iter().map(|p| (p.name.clone(), s.rational())).collect();
            match t.instantiate(&pt) {
                Err(Error::DivisionByZero(_)) => continue,
                Err(e) => {
                    c.fail(format!("{}: {e}", t.id));
                    break;
                }
                Ok(r) => match bialgebra_verdict(alg, &r) {
                    Ok(Ok(())) => ok += 1,
                    Ok(Err(ax)) => {
                        c.fail(format!("{} at {}: {ax}", t.id, point(&pt)));
                        break;
                    }
                    Err(e) => {
                        c.fail(format!("{}: {e}", t.id));
                        break;
                    }
                },
            }
        }
        c.detail(format!("{}: {ok} valid samples", t.id));
    }
    c
}

pub fn printed_variants(_seed: u64) -> Check {
    let mut c = Check::new(
        "x3-printed-variants",
        "the literal a1, g and g2 expressions fail co-Jacobi at alpha = 1, x != 0 while the repaired ones pass",
    );
    let alg = osp22();
    let one = Rational::from_i64(1);
    for (printed, fixed) in [("a1-printed", "a1"), ("g-printed", "g"), ("g2-printed", "g2")] {
        for id in [printed, fixed] {
            let t = r_template(id).expect("catalog");
            let pt: Vec<(String, Rational)> = t.params.iter().map(|p| (p.name.clone(), one.clone())).collect();
            let verdict = t.instantiate(&pt).and_then(|r| bialgebra_verdict(alg, &r));
            let valid = matches!(verdict, Ok(Ok(())));
            c.require(valid == (id == fixed), format!("{id} at {}: valid = {valid}", point(&pt)));
            c.detail(format!("{id}: {}", if valid { "valid" } else { "invalid" }));
        }
    }
    c
}
