use crate::error::{Error, Result};
use crate::linsolve::{solve_linear, Matrix};
use crate::scalar::Scalar;
use crate::superkernel::{bracket, AlgebraElement, Parity, SuperAlgebra};
use crate::Rational;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

struct Table {
    n: usize,
    odd: Vec<bool>,
    c: Vec<Rational>,
}

impl Table {
    fn new(odd: Vec<bool>) -> Self {
        let n = odd.len();
        Self { n, odd, c: vec![q(0, 1); n * n * n] }
    }

    /// Sets `[g_i, g_j]` and its graded mirror.
    fn set(&mut self, i: usize, j: usize, result: &[(usize, Rational)]) {
        let n = self.n;
        let flip = self.odd[i] && self.odd[j];
        for (k, v) in result {
            self.c[(i * n + j) * n + k] = v.clone();
            self.c[(j * n + i) * n + k] = if flip { v.clone() } else { -v.clone() };
        }
    }
}

pub const OSP22_GENERATORS: [&str; 8] = ["H", "X+", "X-", "B", "V+", "V-", "W+", "W-"];
pub const OSP12_U1_GENERATORS: [&str; 6] = ["H", "X+", "X-", "Z", "Q+", "Q-"];

pub(super) fn osp22() -> SuperAlgebra<Rational> {
    const H: usize = 0;
    const XP: usize = 1;
    const XM: usize = 2;
    const B: usize = 3;
    const VP: usize = 4;
    const VM: usize = 5;
    const WP: usize = 6;
    const WM: usize = 7;
    let mut t = Table::new((0..8).map(|i| i >= 4).collect());
    let half = q(1, 2);
    t.set(H, XP, &[(XP, q(1, 1))]);
    t.set(H, XM, &[(XM, q(-1, 1))]);
    t.set(XP, XM, &[(H, q(-2, 1))]);
    t.set(H, VP, &[(VP, half.clone())]);
    t.set(H, VM, &[(VM, -half.clone())]);
    t.set(H, WP, &[(WP, half.clone())]);
    t.set(H, WM, &[(WM, -half.clone())]);
    t.set(B, VP, &[(VP, half.clone())]);
    t.set(B, VM, &[(VM, half.clone())]);
    t.set(B, WP, &[(WP, -half.clone())]);
    t.set(B, WM, &[(WM, -half)]);
    t.set(XP, VM, &[(VP, q(-1, 1))]);
    t.set(XM, VP, &[(VM, q(1, 1))]);
    t.set(XP, WM, &[(WP, q(-1, 1))]);
    t.set(XM, WP, &[(WM, q(1, 1))]);
    t.set(VP, WM, &[(H, q(1, 1)), (B, q(-1, 1))]);
    t.set(WP, VM, &[(H, q(1, 1)), (B, q(1, 1))]);
    t.set(VP, WP, &[(XP, q(1, 1))]);
    t.set(VM, WM, &[(XM, q(1, 1))]);
    let parities = t.odd.iter().map(|&o| if o { Parity::Odd } else { Parity::Even }).collect();
    SuperAlgebra::new("osp22", OSP22_GENERATORS.iter().map(|s| s.to_string()).collect(), parities, t.c)
        .expect("osp22 table is well formed")
}

/// Images of `H, X+, X-, Q+, Q-` inside osp(2|2), with `Q = (V + W) / 2`.
pub fn osp12_embedding() -> Vec<AlgebraElement<Rational>> {
    let mut out = Vec::new();
    for (pos, extra) in [(0, None), (1, None), (2, None), (4, Some(6)), (5, Some(7))] {
        let mut coeffs = vec![q(0, 1); 8];
        match extra {
            None => coeffs[pos] = q(1, 1),
            Some(w) => {
                coeffs[pos] = q(1, 2);
                coeffs[w] = q(1, 2);
            }
        }
        out.push(AlgebraElement::new(coeffs));
    }
    out
}

/// osp(1|2) brackets computed through the embedding, plus a central even `Z`.
pub(super) fn osp12_u1(big: &SuperAlgebra<Rational>) -> Result<SuperAlgebra<Rational>> {
    let emb = osp12_embedding();
    // Columns are the embedded generators; solving expresses a bracket in the small basis.
    let cols = emb.len();
    let mut m = Matrix::zeros(8, cols);
    for (c, e) in emb.iter().enumerate() {
        for r in 0..8 {
            m[(r, c)] = e.coeffs[r].clone();
        }
    }
    // Small-basis positions of the embedded generators: H, X+, X-, Q+, Q-.
    let slot = [0usize, 1, 2, 4, 5];
    let n = OSP12_U1_GENERATORS.len();
    let mut t = Table::new(vec![false, false, false, false, true, true]);
    for a in 0..cols {
        for b in a..cols {
            let v = bracket(big, &emb[a], &emb[b])?;
            let coords = solve_linear(&m, &v.coeffs)?.ok_or_else(|| {
                Error::MalformedAlgebra("osp(1|2) brackets leave the embedded span".into())
            })?;
            let result: Vec<(usize, Rational)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_negligible())
                .map(|(k, x)| (slot[k], x))
                .collect();
            t.set(slot[a], slot[b], &result);
        }
    }
    debug_assert_eq!(t.n, n);
    let parities = t.odd.iter().map(|&o| if o { Parity::Odd } else { Parity::Even }).collect();
    SuperAlgebra::new("osp12_u1", OSP12_U1_GENERATORS.iter().map(|s| s.to_string()).collect(), parities, t.c)
}
