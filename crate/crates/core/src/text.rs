//! Canonical text rendering and parsing of ring elements, polynomials and
//! vectors.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := RATIONAL | IDENT | '(' expr ')'
//! ```
//!
//! Rationals are written `n` or `n/d`. In a vector every top-level term ends
//! with exactly one basis symbol `e<k>` (1-based). Products are evaluated in
//! the algebra, so variables may appear in any order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, AlgebraSpec};
use crate::error::ParseError;
use crate::order::{Exponent, ModMonomial, OrderSpec};
use crate::ring::{Rational, RingElem, RingSpec, UniPoly};
use crate::skewpoly::SkewPoly;
use crate::vector::ModVector;

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> PResult<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let digits = |i: &mut usize, col: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
            *col += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let ch = chars[i];
        let pos = Pos { line, column: col };
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let simple = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((tok, pos));
            i += 1;
            col += 1;
        } else if ch.is_ascii_digit() {
            let num = digits(&mut i, &mut col);
            let mut value = Rational::from_integer(num.parse::<BigInt>().expect("digits"));
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                col += 1;
                let den = digits(&mut i, &mut col);
                if den.is_empty() {
                    return Err(Pos { line, column: col }.error("expected a denominator after '/'"));
                }
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return Err(pos.error("zero denominator"));
                }
                value /= Rational::from_integer(den);
            }
            out.push((Tok::Num(value), pos));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
                col += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else {
            return Err(pos.error(format!("unexpected character '{ch}'")));
        }
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(Rational),
    BaseVar,
    Var(usize),
    Basis(usize, Pos),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn basis_pos(&self) -> Option<Pos> {
        match self {
            Expr::Basis(_, p) => Some(*p),
            Expr::Num(_) | Expr::BaseVar | Expr::Var(_) => None,
            Expr::Neg(a) | Expr::Pow(a, _) => a.basis_pos(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.basis_pos().or_else(|| b.basis_pos()),
        }
    }
}

/// The identifiers an input may use.
struct Names<'a> {
    base: Option<&'a str>,
    vars: &'a [String],
    allow_basis: bool,
}

impl Names<'_> {
    fn resolve(&self, name: &str, pos: Pos) -> PResult<Expr> {
        if self.base == Some(name) {
            return Ok(Expr::BaseVar);
        }
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(Expr::Var(i));
        }
        if self.allow_basis {
            if let Some(k) = name.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
                if k == 0 {
                    return Err(pos.error("basis vectors are numbered from e1"));
                }
                return Ok(Expr::Basis(k - 1, pos));
            }
        }
        Err(pos.error(format!("unknown identifier '{name}'")))
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    names: Names<'a>,
}

/// A top-level term: its sign, start position and factors.
struct TermParts {
    negative: bool,
    pos: Pos,
    factors: Vec<Expr>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: Names<'a>) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(text)?,
            at: 0,
            names,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect_end(&self) -> PResult<()> {
        match self.peek() {
            Tok::End => Ok(()),
            Tok::RParen => Err(self.pos().error("unbalanced ')'")),
            _ => Err(self.pos().error("expected an operator or the end of input")),
        }
    }

    /// Splits the whole input into signed top-level terms.
    fn terms(&mut self) -> PResult<Vec<TermParts>> {
        let mut out = Vec::new();
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let pos = self.pos();
            let mut factors = vec![self.unary()?];
            while *self.peek() == Tok::Star {
                self.bump();
                factors.push(self.unary()?);
            }
            out.push(TermParts { negative, pos, factors });
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        self.expect_end()?;
        Ok(out)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) if n.is_integer() && !n.is_negative() => {
                let e = u32::try_from(n.to_integer()).map_err(|_| pos.error("exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(pos.error("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> PResult<Expr> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::Ident(name) => self.names.resolve(&name, pos),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, p) => Err(p.error("expected ')'")),
                }
            }
            Tok::End => Err(pos.error("unexpected end of input")),
            _ => Err(pos.error("expected a number, an identifier or '('")),
        }
    }
}

/// Evaluation of expressions in some ring of polynomials.
trait Eval {
    type Value: Clone;
    fn num(&self, q: Rational) -> Self::Value;
    fn base_var(&self) -> Self::Value;
    fn var(&self, i: usize) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    fn eval(&self, e: &Expr) -> PResult<Self::Value> {
        Ok(match e {
            Expr::Num(q) => self.num(q.clone()),
            Expr::BaseVar => self.base_var(),
            Expr::Var(i) => self.var(*i),
            Expr::Basis(_, p) => return Err(p.error("a basis vector must be the last factor of a top-level term")),
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.add(&self.eval(a)?, &self.neg(&self.eval(b)?)),
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                let mut acc = self.num(Rational::one());
                for _ in 0..*k {
                    acc = self.mul(&acc, &base);
                }
                acc
            }
        })
    }

    fn eval_product(&self, factors: &[Expr]) -> PResult<Self::Value> {
        let mut acc = self.num(Rational::one());
        for f in factors {
            acc = self.mul(&acc, &self.eval(f)?);
        }
        Ok(acc)
    }
}

struct InAlgebra<'a>(&'a Algebra);

impl Eval for InAlgebra<'_> {
    type Value = SkewPoly;
    fn num(&self, q: Rational) -> SkewPoly {
        self.0.constant(self.0.spec().base.from_rational(q))
    }
    fn base_var(&self) -> SkewPoly {
        self.0.constant(self.0.spec().base.var().expect("resolved only when present"))
    }
    fn var(&self, i: usize) -> SkewPoly {
        self.0.var(i)
    }
    fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        a + b
    }
    fn neg(&self, a: &SkewPoly) -> SkewPoly {
        -a
    }
    fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        self.0.mul(a, b)
    }
}

struct InBase;

impl Eval for InBase {
    type Value = UniPoly;
    fn num(&self, q: Rational) -> UniPoly {
        UniPoly::constant(q)
    }
    fn base_var(&self) -> UniPoly {
        UniPoly::var()
    }
    fn var(&self, _: usize) -> UniPoly {
        unreachable!("no extension variables are in scope")
    }
    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a + b
    }
    fn neg(&self, a: &UniPoly) -> UniPoly {
        -a
    }
    fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a * b
    }
}

fn names_of(spec: &AlgebraSpec, allow_basis: bool) -> Names<'_> {
    Names {
        base: spec.base.var_name(),
        vars: &spec.variables,
        allow_basis,
    }
}

/// Parses a rational `n`, `-n` or `n/d`.
pub fn parse_rational(text: &str) -> PResult<Rational> {
    let mut p = Parser::new(text, Names { base: None, vars: &[], allow_basis: false })?;
    let e = p.expr()?;
    p.expect_end()?;
    let value = InBase.eval(&e)?;
    match value.degree() {
        None => Ok(Rational::zero()),
        Some(_) => Ok(value.coeff(0)),
    }
}

/// Parses an element of the base ring.
pub fn parse_ring_elem(base: &RingSpec, text: &str) -> PResult<RingElem> {
    let mut p = Parser::new(text, Names { base: base.var_name(), vars: &[], allow_basis: false })?;
    let e = p.expr()?;
    p.expect_end()?;
    let value = InBase.eval(&e)?;
    base.from_poly(value)
        .map_err(|_| ParseError { line: 1, column: 1, message: "expected a rational constant".into() })
}

/// Parses an element of the algebra; products are evaluated in the algebra.
pub fn parse_poly(alg: &Algebra, text: &str) -> PResult<SkewPoly> {
    let mut p = Parser::new(text, names_of(alg.spec(), false))?;
    let e = p.expr()?;
    p.expect_end()?;
    InAlgebra(alg).eval(&e)
}

/// Parses an expression in commuting variables over the base ring, with
/// every coefficient read on the left. Used for relation tails.
pub fn parse_commutative(base: &RingSpec, vars: &[String], text: &str) -> PResult<SkewPoly> {
    let alg = Algebra::unchecked(AlgebraSpec::new(base.clone(), vars.iter().cloned()));
    let mut p = Parser::new(text, names_of(alg.spec(), false))?;
    let e = p.expr()?;
    p.expect_end()?;
    InAlgebra(&alg).eval(&e)
}

fn vector_terms(spec: &AlgebraSpec, text: &str) -> PResult<Vec<(TermParts, usize)>> {
    let mut p = Parser::new(text, names_of(spec, true))?;
    let mut out = Vec::new();
    for mut term in p.terms()? {
        let Some(Expr::Basis(k, _)) = term.factors.last() else {
            let pos = term.factors.iter().find_map(Expr::basis_pos).unwrap_or(term.pos);
            return Err(pos.error("each term must end with one basis vector e<k>"));
        };
        let k = *k;
        term.factors.pop();
        if let Some(pos) = term.factors.iter().find_map(Expr::basis_pos) {
            return Err(pos.error("a basis vector must be the last factor of a top-level term"));
        }
        out.push((term, k));
    }
    Ok(out)
}

/// The largest basis index `k` of `e<k>` in a vector expression.
pub fn max_basis_index(spec: &AlgebraSpec, text: &str) -> PResult<usize> {
    Ok(vector_terms(spec, text)?.iter().map(|(_, k)| k + 1).max().unwrap_or(0))
}

/// Parses an element of `A^rank`.
pub fn parse_vector(alg: &Algebra, text: &str, rank: usize) -> PResult<ModVector> {
    let mut v = ModVector::zero(rank);
    let eval = InAlgebra(alg);
    for (term, k) in vector_terms(alg.spec(), text)? {
        if k >= rank {
            return Err(term.pos.error(format!("e{} exceeds the module rank {rank}", k + 1)));
        }
        let mut coeff = eval.eval_product(&term.factors)?;
        if term.negative {
            coeff = -&coeff;
        }
        let mut comps = v.into_components();
        comps[k].add_assign(&coeff);
        v = ModVector::from_components(comps);
    }
    Ok(v)
}

pub fn render_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Joins signed terms: `(coefficient, factors)` with unit coefficients
/// suppressed and the leading sign attached.
fn join_terms(terms: Vec<(Rational, Vec<String>)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, factors)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut parts = Vec::new();
        if !abs.is_one() || factors.is_empty() {
            parts.push(render_rational(&abs));
        }
        parts.extend(factors);
        let _ = write!(out, "{}", parts.join("*"));
    }
    out
}

fn power(name: &str, k: u32) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{name}^{k}")
    }
}

fn monomial_factors(spec: &AlgebraSpec, exp: &Exponent) -> Vec<String> {
    spec.variables
        .iter()
        .zip(exp.as_slice())
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| power(v, k))
        .collect()
}

/// Expands a coefficient into `(rational, base-variable factor)` pairs,
/// highest degree first.
fn coefficient_parts(base: &RingSpec, r: &RingElem) -> Vec<(Rational, Vec<String>)> {
    match (r, base.var_name()) {
        (RingElem::Poly(p), Some(t)) => p
            .terms()
            .rev()
            .map(|(k, c)| {
                let f = if k == 0 { vec![] } else { vec![power(t, k as u32)] };
                (c.clone(), f)
            })
            .collect(),
        _ => vec![(r.constant_term(), vec![])],
    }
}

pub fn render_ring_elem(base: &RingSpec, r: &RingElem) -> String {
    join_terms(if r.is_zero() { vec![] } else { coefficient_parts(base, r) })
}

fn term_parts(spec: &AlgebraSpec, exp: &Exponent, c: &RingElem, suffix: Option<String>) -> Vec<(Rational, Vec<String>)> {
    let mono = monomial_factors(spec, exp);
    coefficient_parts(&spec.base, c)
        .into_iter()
        .map(|(q, mut f)| {
            f.extend(mono.iter().cloned());
            f.extend(suffix.clone());
            (q, f)
        })
        .collect()
}

pub fn render_poly(alg: &Algebra, f: &SkewPoly, order: &OrderSpec) -> String {
    let spec = alg.spec();
    join_terms(
        f.sorted_terms(order)
            .into_iter()
            .flat_map(|(e, c)| term_parts(spec, e, c, None))
            .collect(),
    )
}

pub fn render_vector(alg: &Algebra, v: &ModVector, order: &OrderSpec) -> String {
    let spec = alg.spec();
    join_terms(
        v.sorted_terms(order)
            .into_iter()
            .flat_map(|(m, c): (ModMonomial, &RingElem)| term_parts(spec, &m.exp, c, Some(format!("e{}", m.index + 1))))
            .collect(),
    )
}

/// Renders a coefficient column as `(a_1, ..., a_k)`.
pub fn render_column(alg: &Algebra, col: &[SkewPoly], order: &OrderSpec) -> String {
    let entries: Vec<String> = col.iter().map(|a| render_poly(alg, a, order)).collect();
    format!("({})", entries.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::ring::rat;

    fn o3() -> Algebra {
        Algebra::new(presets::multiplicative_weyl(3, &[rat(2, 1), rat(1, 2), rat(3, 1)]).unwrap()).unwrap()
    }

    fn h1() -> Algebra {
        Algebra::new(presets::heisenberg(1, rat(2, 1))).unwrap()
    }

    #[test]
    fn parse_and_render_example_vector() {
        let alg = o3();
        let order = OrderSpec::deglex(2);
        let v = parse_vector(&alg, "x1^2*x2^2*e1 + x2*x3*e2", 2).unwrap();
        assert_eq!(render_vector(&alg, &v, &order), "x1^2*x2^2*e1 + x2*x3*e2");
        let f3 = parse_vector(&alg, "12*x2*x3^2*e2 - 9/4*x1*x2^2*e2", 2).unwrap();
        assert_eq!(render_vector(&alg, &f3, &order), "12*x2*x3^2*e2 - 9/4*x1*x2^2*e2");
    }

    #[test]
    fn variables_are_normalized() {
        let alg = o3();
        let v = parse_vector(&alg, "x3*x2*e1", 1).unwrap();
        assert_eq!(render_vector(&alg, &v, &OrderSpec::deglex(2)), "3*x2*x3*e1");
        let w = parse_vector(&alg, "x2*x1*e1", 1).unwrap();
        assert_eq!(render_vector(&alg, &w, &OrderSpec::deglex(2)), "2*x1*x2*e1");
    }

    #[test]
    fn polynomials_and_ring_elements() {
        let alg = h1();
        let order = OrderSpec::deglex(3);
        let p = parse_poly(&alg, "z*x").unwrap();
        assert_eq!(render_poly(&alg, &p, &order), "1/2*x*z + y");
        assert_eq!(render_poly(&alg, &SkewPoly::zero(), &order), "0");
        assert_eq!(render_poly(&alg, &parse_poly(&alg, "-(y - 3)").unwrap(), &order), "-y + 3");
        let base = RingSpec::polynomials("t");
        let r = parse_ring_elem(&base, "(t + 1)^2 - 1").unwrap();
        assert_eq!(render_ring_elem(&base, &r), "t^2 + 2*t");
        assert_eq!(parse_rational("-9/4").unwrap(), rat(-9, 4));
        assert!(parse_ring_elem(&RingSpec::Rationals, "t").is_err());
    }

    #[test]
    fn error_positions() {
        let alg = o3();
        let err = parse_vector(&alg, "x2*e1 +\n  x9*e1", 1).unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("x9"));
        let err = parse_vector(&alg, "x2*e3", 2).unwrap_err();
        assert!(err.message.contains("rank"));
        let err = parse_vector(&alg, "e1*x2", 1).unwrap_err();
        assert_eq!(err.column, 1);
        assert!(parse_vector(&alg, "x2", 1).is_err());
        assert!(parse_vector(&alg, "1/0*e1", 1).is_err());
        assert!(parse_vector(&alg, "(x2*e1)", 1).is_err());
        assert!(parse_poly(&alg, "x2 +").is_err());
        assert!(parse_poly(&alg, "(x2").is_err());
    }

    #[test]
    fn basis_index_scan() {
        let alg = o3();
        assert_eq!(max_basis_index(alg.spec(), "x2*e1 + e3").unwrap(), 3);
    }

    #[test]
    fn commutative_tails() {
        let base = RingSpec::Rationals;
        let vars = vec!["x".to_string(), "y".to_string()];
        let tail = parse_commutative(&base, &vars, "2*y + 1").unwrap();
        assert_eq!(tail.num_terms(), 2);
    }
}
