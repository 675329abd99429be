//! Canonical r-matrices as wedge expressions, with `a ^ b = a (x) b - z(a, b) b (x) a`.

use super::{CybeClaim, Family, ParamKind};

pub(super) struct Term {
    pub coef: &'static str,
    pub left: &'static [&'static str],
    pub right: &'static [&'static str],
}

pub(super) struct WedgeSpec {
    pub id: &'static str,
    pub algebra: &'static str,
    pub params: &'static [(&'static str, ParamKind)],
    pub family: Family,
    pub cybe: CybeClaim,
    pub terms: Vec<Term>,
    pub note: Option<&'static str>,
}

const fn t(coef: &'static str, left: &'static [&'static str], right: &'static [&'static str]) -> Term {
    Term { coef, left, right }
}

/// `x (2 s1 H^B + X+^X- + s2 V+^W- + s3 V-^W+)` with each sign given as a coefficient string.
fn standard(hb: &'static str, vw: &'static str, wv: &'static str) -> Vec<Term> {
    vec![
        t(hb, &["H"], &["B"]),
        t("x", &["X+"], &["X-"]),
        t(vw, &["V+"], &["W-"]),
        t(wv, &["V-"], &["W+"]),
    ]
}

fn with(mut base: Vec<Term>, extra: Vec<Term>) -> Vec<Term> {
    base.extend(extra);
    base
}

const X: &[(&str, ParamKind)] = &[("x", ParamKind::Continuous)];
const XY: &[(&str, ParamKind)] = &[("x", ParamKind::Continuous), ("y", ParamKind::Continuous)];
const Y: &[(&str, ParamKind)] = &[("y", ParamKind::Continuous)];
const XA: &[(&str, ParamKind)] = &[("x", ParamKind::Continuous), ("alpha", ParamKind::Binary)];
const AB: &[(&str, ParamKind)] = &[("alpha", ParamKind::Binary), ("beta", ParamKind::Binary)];
const NONE: &[(&str, ParamKind)] = &[];

fn e5() -> Vec<Term> {
    vec![t("-1", &["B"], &["X+"]), t("-1", &["H"], &["X+"]), t("1", &["V+"], &["W+"])]
}

fn f1() -> Vec<Term> {
    vec![t("-1", &["H"], &["X+"]), t("1", &["V+"], &["W+"]), t("x", &["B"], &["X+"])]
}

fn h1_like(vw: &'static str, wv: &'static str) -> Vec<Term> {
    vec![
        t("x", &["X+"], &["X-"]),
        t(vw, &["V+"], &["W-"]),
        t(wv, &["V-"], &["W+"]),
        t("y", &["H"], &["B"]),
    ]
}

fn d1() -> Vec<Term> {
    vec![
        t("x", &["X+"], &["X-"]),
        t("x", &["V+"], &["W-"]),
        t("x/2", &["V-"], &["V-"]),
        t("x/2", &["W+"], &["W+"]),
    ]
}

fn spec(
    id: &'static str,
    params: &'static [(&'static str, ParamKind)],
    family: Family,
    cybe: CybeClaim,
    terms: Vec<Term>,
) -> WedgeSpec {
    WedgeSpec { id, algebra: "osp22", params, family, cybe, terms, note: None }
}

pub(super) fn osp22_specs() -> Vec<WedgeSpec> {
    use CybeClaim::{Always, IffXZero, Unclaimed};
    use Family::{Canonical, PrintedVariant};
    let g1 = || standard("2*x", "x", "-x");
    let a1_true = || standard("-2*x", "-x", "x");
    let e0 = || standard("2*x", "x", "x");
    vec![
        spec("b2", NONE, Canonical, Always, vec![t("1", &["H"], &["X+"])]),
        spec("c0", X, Canonical, Always, vec![t("x", &["H"], &["X+"]), t("1", &["B"], &["X+"])]),
        spec(
            "a2",
            AB,
            Canonical,
            Always,
            vec![t("alpha", &["H"], &["X+"]), t("-alpha", &["B"], &["X+"]), t("beta", &["V+"], &["V+"])],
        ),
        spec("h1", XY, Canonical, IffXZero, h1_like("x", "-x")),
        spec(
            "b1",
            X,
            Canonical,
            IffXZero,
            vec![t("x", &["X+"], &["X-"]), t("-x", &["V+"], &["W-"]), t("x", &["V-"], &["W+"])],
        ),
        spec("c1", XY, Canonical, IffXZero, h1_like("-x", "x")),
        spec("i1", XY, Canonical, IffXZero, h1_like("-x", "x")),
        spec("f2", XY, Canonical, IffXZero, h1_like("x", "x")),
        spec("k1", XY, Canonical, IffXZero, h1_like("x", "x")),
        spec("d1", X, Canonical, IffXZero, d1()),
        spec("j1", X, Canonical, IffXZero, d1()),
        spec(
            "j2",
            NONE,
            Canonical,
            Always,
            vec![t("-2", &["H"], &["X+"]), t("1/2", &["V+", "W+"], &["V+", "W+"])],
        ),
        WedgeSpec {
            note: Some("the V+^V+ term of the printed form is replaced by W+^W+; see g-printed"),
            ..spec("g", XA, Canonical, IffXZero, with(g1(), vec![t("alpha/2", &["W+"], &["W+"])]))
        },
        WedgeSpec {
            note: Some("signs of the V+^W- and V-^W+ terms follow the image of case 19; see a1-printed"),
            ..spec("a1", XA, Canonical, IffXZero, with(a1_true(), vec![t("alpha/2", &["V+"], &["V+"])]))
        },
        spec("e0", X, Canonical, IffXZero, e0()),
        spec(
            "e1",
            XY,
            Canonical,
            IffXZero,
            with(e0(), vec![t("y", &["V+"], &["V+"]), t("1", &["V+"], &["V-"]), t("1/2", &["V-"], &["V-"])]),
        ),
        spec("e2", X, Canonical, IffXZero, with(e0(), vec![t("1/2", &["V+"], &["V+"]), t("1", &["V+"], &["V-"])])),
        spec(
            "e3",
            X,
            Canonical,
            IffXZero,
            with(e0(), vec![t("1/2", &["V+"], &["V+"]), t("1/2", &["V-"], &["V-"])]),
        ),
        spec("e4", X, Canonical, IffXZero, with(e0(), vec![t("1/2", &["V+"], &["V+"])])),
        spec("f1", X, Canonical, Always, f1()),
        spec("k2", X, Canonical, Always, f1()),
        spec("e5", NONE, Canonical, Always, e5()),
        spec(
            "e6",
            Y,
            Canonical,
            Always,
            with(e5(), vec![t("y/2", &["V+"], &["V+"]), t("1/2", &["V-"], &["V-"])]),
        ),
        spec("e7", NONE, Canonical, Always, with(e5(), vec![t("1", &["V+"], &["V-"])])),
        spec("e8", NONE, Canonical, Always, with(e5(), vec![t("1/2", &["V+"], &["V+"])])),
        spec("e9", NONE, Canonical, Always, vec![t("1", &["V+"], &["V-"])]),
        spec("e10", NONE, Canonical, Always, vec![t("1/2", &["V+"], &["V+"])]),
        spec("g1", X, Canonical, IffXZero, g1()),
        spec("g1.5", NONE, Canonical, Always, vec![t("1", &["H"], &["X+"]), t("-1", &["B"], &["X+"])]),
        WedgeSpec {
            note: Some("g1 + W+^W+/2; the printed V+^V+ variant is g2-printed"),
            ..spec("g2", X, Canonical, IffXZero, with(g1(), vec![t("1/2", &["W+"], &["W+"])]))
        },
        spec("f0", NONE, Canonical, Always, vec![t("1", &["B"], &["X+"])]),
        spec("i2", NONE, Canonical, Always, vec![t("1", &["B"], &["X+"])]),
        WedgeSpec {
            note: Some("as printed; fails co-Jacobi for alpha = 1, x != 0"),
            ..spec(
                "a1-printed",
                XA,
                PrintedVariant,
                Unclaimed,
                with(standard("-2*x", "x", "-x"), vec![t("alpha/2", &["V+"], &["V+"])]),
            )
        },
        WedgeSpec {
            note: Some("as printed; fails co-Jacobi for alpha = 1, x != 0"),
            ..spec("g-printed", XA, PrintedVariant, Unclaimed, with(g1(), vec![t("alpha/2", &["V+"], &["V+"])]))
        },
        WedgeSpec {
            note: Some("as printed; fails co-Jacobi for x != 0"),
            ..spec("g2-printed", X, PrintedVariant, Unclaimed, with(g1(), vec![t("1/2", &["V+"], &["V+"])]))
        },
    ]
}

pub(super) fn osp12_specs() -> Vec<WedgeSpec> {
    use CybeClaim::{IffXZero, Unclaimed};
    let o = |id, params, cybe, terms| WedgeSpec { id, algebra: "osp12_u1", params, family: Family::Osp12, cybe, terms, note: None };
    let hx = || t("1", &["H"], &["X+"]);
    let zx = || t("1", &["Z"], &["X+"]);
    let qq = || t("-1", &["Q+"], &["Q+"]);
    let o6 = || vec![t("x", &["X+"], &["X-"]), t("2*x", &["Q+"], &["Q-"])];
    vec![
        o("o1", NONE, Unclaimed, vec![hx()]),
        o("o2", NONE, Unclaimed, vec![zx()]),
        o("o3", NONE, Unclaimed, vec![hx(), zx()]),
        o("o4", NONE, Unclaimed, vec![hx(), qq()]),
        o("o5", NONE, Unclaimed, vec![hx(), qq(), zx()]),
        o("o6", X, IffXZero, o6()),
        o("o7", X, IffXZero, with(o6(), vec![t("1", &["H"], &["Z"])])),
    ]
}

/// A canonical matrix as displayed next to a reduction, in block form.
pub struct DisplayedForm {
    pub template: &'static str,
    /// Free symbols of the display.
    pub params: &'static [&'static str],
    /// Template parameters as expressions in the display symbols.
    pub assign: &'static [(&'static str, &'static str)],
    pub r_b: [[&'static str; 4]; 4],
    pub r_f: [[&'static str; 4]; 4],
    /// False where the display is known to disagree with the wedge expression.
    pub consistent: bool,
}

const Z4: [&str; 4] = ["0", "0", "0", "0"];

pub const DISPLAYED_FORMS: &[DisplayedForm] = &[
    DisplayedForm {
        template: "a1-printed",
        params: &["K", "alpha"],
        assign: &[("x", "-K/2"), ("alpha", "alpha")],
        r_b: [["0", "0", "0", "K"], ["0", "0", "-K/2", "0"], ["0", "K/2", "0", "0"], ["-K", "0", "0", "0"]],
        r_f: [["alpha", "0", "0", "-K/2"], ["0", "0", "K/2", "0"], ["0", "K/2", "0", "0"], ["-K/2", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "d1",
        params: &["M"],
        assign: &[("x", "-M")],
        r_b: [Z4, ["0", "0", "-M", "0"], ["0", "M", "0", "0"], Z4],
        r_f: [["0", "0", "0", "-M"], ["0", "-M", "0", "0"], ["0", "0", "-M", "0"], ["-M", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "f1",
        params: &["J"],
        assign: &[("x", "-J/2")],
        r_b: [["0", "-1", "0", "0"], ["1", "0", "0", "J/2"], Z4, ["0", "-J/2", "0", "0"]],
        r_f: [["0", "0", "1", "0"], Z4, ["1", "0", "0", "0"], Z4],
        consistent: true,
    },
    DisplayedForm {
        template: "f2",
        params: &["x", "y"],
        assign: &[("x", "x"), ("y", "y")],
        r_b: [["0", "0", "0", "y"], ["0", "0", "x", "0"], ["0", "-x", "0", "0"], ["-y", "0", "0", "0"]],
        r_f: [["0", "0", "0", "x"], ["0", "0", "x", "0"], ["0", "x", "0", "0"], ["x", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "g1",
        params: &["K"],
        assign: &[("x", "K/2")],
        r_b: [["0", "0", "0", "K"], ["0", "0", "K/2", "0"], ["0", "-K/2", "0", "0"], ["-K", "0", "0", "0"]],
        r_f: [["0", "0", "0", "K/2"], ["0", "0", "-K/2", "0"], ["0", "-K/2", "0", "0"], ["K/2", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "g2-printed",
        params: &["K"],
        assign: &[("x", "K/2")],
        r_b: [["0", "0", "0", "K"], ["0", "0", "K/2", "0"], ["0", "-K/2", "0", "0"], ["-K", "0", "0", "0"]],
        r_f: [["1", "0", "0", "K/2"], ["0", "0", "-K/2", "0"], ["0", "-K/2", "0", "0"], ["K/2", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "h1",
        params: &["K", "L"],
        assign: &[("x", "-L/2"), ("y", "2*K+L")],
        r_b: [["0", "0", "0", "2*K+L"], ["0", "0", "-L/2", "0"], ["0", "L/2", "0", "0"], ["-2*K-L", "0", "0", "0"]],
        r_f: [["0", "0", "0", "-L/2"], ["0", "0", "L/2", "0"], ["0", "L/2", "0", "0"], ["-L/2", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "i1",
        params: &["G", "w"],
        assign: &[("x", "-G"), ("y", "w")],
        r_b: [["0", "0", "0", "w"], ["0", "0", "-G", "0"], ["0", "G", "0", "0"], ["-w", "0", "0", "0"]],
        r_f: [["0", "0", "0", "G"], ["0", "0", "-G", "0"], ["0", "-G", "0", "0"], ["G", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "j1",
        params: &["K"],
        assign: &[("x", "K")],
        r_b: [Z4, ["0", "0", "K", "0"], ["0", "-K", "0", "0"], Z4],
        r_f: [["0", "0", "0", "K"], ["0", "K", "0", "0"], ["0", "0", "K", "0"], ["K", "0", "0", "0"]],
        consistent: true,
    },
    DisplayedForm {
        template: "j2",
        params: &[],
        assign: &[],
        r_b: [["0", "-2", "0", "0"], ["2", "0", "0", "0"], Z4, Z4],
        r_f: [["1", "0", "1", "0"], Z4, ["1", "0", "1", "0"], Z4],
        consistent: true,
    },
    DisplayedForm {
        template: "k1",
        params: &["K", "S"],
        assign: &[("x", "(K+S)/2"), ("y", "K-S")],
        r_b: [
            ["0", "0", "0", "K-S"],
            ["0", "0", "(K+S)/2", "0"],
            ["0", "-(K+S)/2", "0", "0"],
            ["-K+S", "0", "0", "0"],
        ],
        r_f: [
            ["0", "0", "0", "(K+S)/2"],
            ["0", "0", "(K+S)/2", "0"],
            ["0", "(K+S)/2", "0", "0"],
            ["(K+S)/2", "0", "0", "0"],
        ],
        consistent: true,
    },
    DisplayedForm {
        template: "k2",
        params: &["K", "S"],
        assign: &[("x", "(S-K)/(K+S)")],
        r_b: [
            ["0", "1", "0", "0"],
            ["-1", "0", "0", "(K-S)/(K+S)"],
            Z4,
            ["0", "(-K+S)/(K+S)", "0", "0"],
        ],
        r_f: [["0", "0", "1", "0"], Z4, ["1", "0", "0", "0"], Z4],
        consistent: false,
    },
];
