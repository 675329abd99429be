//! Rational expressions over named parameters, used for template entries and witness steps.
//!
//! Grammar: `+ - * /`, integer powers `^n`, parentheses, decimal integers and identifiers
//! (`[A-Za-z_][A-Za-z0-9_']*`). Multiplication must be written explicitly.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::format_rational;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

pub type Env = HashMap<String, Rational>;

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0, src };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Expr(format!("trailing input in `{src}`")));
        }
        Ok(e)
    }

    pub fn constant(q: Rational) -> Expr {
        Expr::Const(q)
    }

    pub fn is_const_zero(&self) -> bool {
        matches!(self, Expr::Const(q) if q.is_zero())
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match self {
            Expr::Const(q) => Some(q),
            _ => None,
        }
    }

    pub fn eval(&self, env: &Env) -> Result<Rational> {
        Ok(match self {
            Expr::Const(q) => q.clone(),
            Expr::Var(v) => env.get(v).cloned().ok_or_else(|| Error::Unbound(v.clone()))?,
            Expr::Neg(a) => -a.eval(env)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => {
                let x = a.eval(env)?;
                if x.is_zero() {
                    // Still evaluate the right side so that unbound names are reported.
                    b.eval(env)?;
                    return Ok(x);
                }
                x * b.eval(env)?
            }
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero(b.to_string()));
                }
                a.eval(env)? / d
            }
            Expr::Pow(a, n) => pow(&a.eval(env)?, *n),
        })
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Every divisor sub-expression, in source order.
    pub fn denominators(&self) -> Vec<Expr> {
        let mut out = Vec::new();
        self.collect_denominators(&mut out);
        out
    }

    fn collect_denominators(&self, out: &mut Vec<Expr>) {
        match self {
            Expr::Const(_) | Expr::Var(_) => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_denominators(out),
            Expr::Div(a, b) => {
                a.collect_denominators(out);
                b.collect_denominators(out);
                if b.as_const().is_none() {
                    out.push((**b).clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_denominators(out);
                b.collect_denominators(out);
            }
        }
    }

    /// Substitutes `name := value` and folds constants, taking the generic limit:
    /// `0 * e = 0` and `0 / e = 0` whenever `e` is not itself the constant zero.
    pub fn specialize(&self, name: &str, value: &Rational) -> Expr {
        match self {
            Expr::Const(_) => self.clone(),
            Expr::Var(v) if v == name => Expr::Const(value.clone()),
            Expr::Var(_) => self.clone(),
            Expr::Neg(a) => match a.specialize(name, value) {
                Expr::Const(q) => Expr::Const(-q),
                e => Expr::Neg(Box::new(e)),
            },
            Expr::Pow(a, n) => match a.specialize(name, value) {
                Expr::Const(q) => Expr::Const(pow(&q, *n)),
                e => Expr::Pow(Box::new(e), *n),
            },
            Expr::Add(a, b) => fold(a.specialize(name, value), b.specialize(name, value), Op::Add),
            Expr::Sub(a, b) => fold(a.specialize(name, value), b.specialize(name, value), Op::Sub),
            Expr::Mul(a, b) => fold(a.specialize(name, value), b.specialize(name, value), Op::Mul),
            Expr::Div(a, b) => fold(a.specialize(name, value), b.specialize(name, value), Op::Div),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(q) if !q.denom().is_one() || q < &Rational::zero() => 2,
            Expr::Const(_) | Expr::Var(_) => 5,
        }
    }
}

fn pow(q: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * q.clone())
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn fold(a: Expr, b: Expr, op: Op) -> Expr {
    match (op, a.as_const(), b.as_const()) {
        (Op::Div, _, Some(d)) if d.is_zero() => Expr::Div(Box::new(a), Box::new(b)),
        (_, Some(x), Some(y)) => Expr::Const(match op {
            Op::Add => x + y,
            Op::Sub => x - y,
            Op::Mul => x * y,
            Op::Div => x / y,
        }),
        (Op::Mul, Some(x), _) | (Op::Mul, _, Some(x)) if x.is_zero() => Expr::Const(Rational::zero()),
        (Op::Div, Some(x), _) if x.is_zero() => Expr::Const(Rational::zero()),
        (Op::Add, Some(x), _) if x.is_zero() => b,
        (Op::Add | Op::Sub, _, Some(y)) if y.is_zero() => a,
        (Op::Sub, Some(x), _) if x.is_zero() => Expr::Neg(Box::new(b)),
        _ => {
            let (a, b) = (Box::new(a), Box::new(b));
            match op {
                Op::Add => Expr::Add(a, b),
                Op::Sub => Expr::Sub(a, b),
                Op::Mul => Expr::Mul(a, b),
                Op::Div => Expr::Div(a, b),
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Const(q) => f.write_str(&format_rational(q)),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(" - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("*")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("/")?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, n) => {
                wrap(f, a, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl FromStr for Expr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Expr> {
        Expr::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| Error::Expr(format!("number too large in `{src}`")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Expr(format!("unexpected `{c}` in `{src}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Expr(format!("{what} in `{}`", self.src))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let n = u32::try_from(n).map_err(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), n));
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Const(Rational::from_integer(n.into())))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, name or `(`")),
        }
    }
}

/// Shorthand used by the catalog tables.
pub fn env_of(pairs: &[(&str, Rational)]) -> Env {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::scalar::Scalar;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn ev(s: &str, env: &[(&str, Rational)]) -> Result<Rational> {
        Expr::parse(s)?.eval(&env_of(env))
    }

    #[test]
    fn precedence_and_powers() {
        assert_eq!(ev("1 + 2*3", &[]).unwrap(), q(7, 1));
        assert_eq!(ev("-2^2", &[]).unwrap(), q(-4, 1));
        assert_eq!(ev("(1-3)/4", &[]).unwrap(), q(-1, 2));
        assert_eq!(ev("M^2*(K^2-L^2)/(2*J*L^2)", &[("M", q(1, 1)), ("K", q(2, 1)), ("L", q(1, 1)), ("J", q(3, 1))]).unwrap(), q(1, 2));
        assert_eq!(ev("8/2/2", &[]).unwrap(), q(2, 1));
    }

    #[test]
    fn errors() {
        assert!(matches!(ev("1/(J-J)", &[("J", q(1, 1))]), Err(Error::DivisionByZero(_))));
        assert!(matches!(ev("x + 1", &[]), Err(Error::Unbound(_))));
        assert!(Expr::parse("2 x").is_err());
        assert!(Expr::parse("(1").is_err());
        assert!(Expr::parse("1 $ 2").is_err());
        assert!(Expr::parse("x^y").is_err());
    }

    #[test]
    fn specialization_takes_generic_limit() {
        let e = Expr::parse("-Z*J/(2*X)").unwrap();
        let s = e.specialize("Z", &q(0, 1));
        assert!(s.is_const_zero());
        let s = s.specialize("X", &q(0, 1));
        assert!(s.is_const_zero());
        let t = Expr::parse("J/X").unwrap().specialize("X", &q(0, 1));
        assert!(t.eval(&env_of(&[("J", q(1, 1))])).is_err());
        let u = Expr::parse("(U*C + K^2)/K").unwrap().specialize("C", &q(0, 1));
        assert_eq!(u.eval(&env_of(&[("K", q(3, 1))])).unwrap(), q(3, 1));
    }

    #[test]
    fn denominators_listed() {
        let e = Expr::parse("L*(2*K+L)/Y + 1/2").unwrap();
        let d: Vec<String> = e.denominators().iter().map(ToString::to_string).collect();
        assert_eq!(d, vec!["Y"]);
        assert_eq!(e.vars().into_iter().collect::<Vec<_>>(), vec!["K", "L", "Y"]);
    }

    fn arb_expr() -> impl Strategy<Value = String> {
        let leaf = prop_oneof![
            (1u8..20).prop_map(|n| n.to_string()),
            prop_oneof![Just("a"), Just("b"), Just("c")].prop_map(str::to_string),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            (inner.clone(), prop_oneof![Just("+"), Just("-"), Just("*"), Just("/")], inner.clone())
                .prop_map(|(l, op, r)| format!("({l}) {op} ({r})"))
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(src in arb_expr()) {
            let env = env_of(&[("a", q(3, 7)), ("b", q(-5, 2)), ("c", q(11, 1))]);
            let e = Expr::parse(&src).unwrap();
            let printed = e.to_string();
            let back = Expr::parse(&printed).unwrap();
            match (e.eval(&env), back.eval(&env)) {
                (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
                (Err(_), Err(_)) => {}
                (x, y) => prop_assert!(false, "{:?} vs {:?} for {}", x, y, printed),
            }
        }

        #[test]
        fn specialize_agrees_with_eval(src in arb_expr()) {
            let e = Expr::parse(&src).unwrap();
            let env = env_of(&[("a", q(2, 3)), ("b", q(7, 5)), ("c", q(-1, 4))]);
            let s = e.specialize("a", &q(2, 3));
            if let Ok(x) = e.eval(&env) {
                prop_assert_eq!(s.eval(&env).unwrap(), x);
            }
        }
    }
}
