//! Text input: polynomial expressions and matrices.
//!
//! Grammar (whitespace insignificant, `*` always explicit):
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := unary ("*" unary)*
//! unary    := "-" unary | power
//! power    := primary ("^" exponent)?
//! primary  := integer | name | "(" expr ")"
//! exponent := integer | "(" integer ("/" integer)? ")"
//! matrix   := "[" row (";" row)* "]"
//! row      := expr ("," expr)*
//! ```
//!
//! Integer literals are reduced modulo the characteristic. Fractional
//! exponents `x^(a/p^s)` are accepted only in matrix entries over
//! `k[x^{1/p^t}]`, where `g` names the generator of `k = F_{p^m}`.

use thiserror::Error;

use crate::field::{FieldRef, FieldScalar};
use crate::matrix::Matrix;
use crate::poly::{PolyError, Polynomial, RingRef};
use crate::scalar::FrobeniusScalar;
use crate::twisted::TwistedPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message} (at `{fragment}`)")]
    Syntax { line: usize, column: usize, message: String, fragment: String },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },
    #[error("exponent overflow at line {line}, column {column} (at `{fragment}`)")]
    ExponentOverflow { line: usize, column: usize, fragment: String },
    #[error("invalid exponent at line {line}, column {column}: {message} (at `{fragment}`)")]
    InvalidExponent { line: usize, column: usize, message: String, fragment: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Name(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
}

impl Token {
    fn text(&self) -> String {
        match &self.tok {
            Tok::Int(s) | Tok::Name(s) => s.clone(),
            Tok::Sym(c) => c.to_string(),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Int(s), pos });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Name(s), pos });
        } else if "+-*^()/[],;".contains(c) {
            chars.next();
            column += 1;
            out.push(Token { tok: Tok::Sym(c), pos });
        } else {
            return Err(ParseError::Syntax { line, column, message: "unexpected character".into(), fragment: c.to_string() });
        }
    }
    out.push(Token { tok: Tok::End, pos: Pos { line, column } });
    Ok(out)
}

#[derive(Debug, Clone)]
enum Node {
    Int(String),
    Var(String, Pos),
    Neg(Box<Node>),
    Bin(char, Box<Node>, Box<Node>, Pos),
    Pow { base: Box<Node>, num: u64, den: u64, pos: Pos, fragment: String },
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, at: 0 })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error_here(&self, message: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax { line: t.pos.line, column: t.pos.column, message: message.into(), fragment: t.text() }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        if self.is_sym(c) {
            Ok(self.bump())
        } else {
            Err(self.error_here(&format!("expected `{c}`")))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    /// Diagnostic for a token that cannot continue the current expression.
    fn unexpected(&self) -> ParseError {
        match self.peek().tok {
            Tok::Int(_) | Tok::Name(_) | Tok::Sym('(') => self.error_here("missing operator (write `*` for multiplication)"),
            Tok::Sym('^') => self.error_here("chained exponent; add parentheses"),
            _ => self.error_here("unexpected token"),
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        while self.is_sym('+') || self.is_sym('-') {
            let op = self.bump();
            let Tok::Sym(c) = op.tok else { unreachable!() };
            let rhs = self.term()?;
            lhs = Node::Bin(c, Box::new(lhs), Box::new(rhs), op.pos);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        while self.is_sym('*') {
            let op = self.bump();
            let rhs = self.unary()?;
            lhs = Node::Bin('*', Box::new(lhs), Box::new(rhs), op.pos);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.is_sym('-') {
            self.bump();
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let base = self.primary()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        let caret = self.bump();
        let start = self.at;
        let (num, den) = if self.is_sym('(') {
            self.bump();
            let num = self.exponent_int()?;
            let den = if self.is_sym('/') {
                self.bump();
                self.exponent_int()?
            } else {
                1
            };
            self.expect_sym(')')?;
            (num, den)
        } else {
            (self.exponent_int()?, 1)
        };
        let fragment: String = self.toks[start..self.at].iter().map(Token::text).collect();
        if den == 0 {
            return Err(ParseError::InvalidExponent {
                line: caret.pos.line,
                column: caret.pos.column,
                message: "zero denominator".into(),
                fragment,
            });
        }
        Ok(Node::Pow { base: Box::new(base), num, den, pos: caret.pos, fragment })
    }

    fn exponent_int(&mut self) -> Result<u64, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(s) => {
                self.bump();
                s.parse::<u64>().map_err(|_| ParseError::ExponentOverflow { line: t.pos.line, column: t.pos.column, fragment: s.clone() })
            }
            Tok::Sym('-') => Err(ParseError::InvalidExponent {
                line: t.pos.line,
                column: t.pos.column,
                message: "negative exponents are not allowed".into(),
                fragment: "-".into(),
            }),
            _ => Err(self.error_here("expected a non-negative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Node, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(s) => {
                self.bump();
                Ok(Node::Int(s))
            }
            Tok::Name(s) => {
                self.bump();
                Ok(Node::Var(s, t.pos))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::End => Err(self.error_here("unexpected end of input")),
            _ => Err(self.error_here("expected a number, variable or `(`")),
        }
    }

    /// An expression that must be followed by one of `stops`.
    fn expr_until(&mut self, stops: &[char]) -> Result<Node, ParseError> {
        let e = self.expr()?;
        if stops.iter().any(|&c| self.is_sym(c)) || (stops.is_empty() && self.peek().tok == Tok::End) {
            Ok(e)
        } else {
            Err(self.unexpected())
        }
    }

    fn matrix(&mut self) -> Result<(Vec<Vec<Node>>, Pos), ParseError> {
        let open = self.expect_sym('[')?;
        let mut rows = vec![Vec::new()];
        loop {
            let e = self.expr_until(&[',', ';', ']'])?;
            rows.last_mut().unwrap().push(e);
            match self.bump().tok {
                Tok::Sym(',') => {}
                Tok::Sym(';') => rows.push(Vec::new()),
                _ => break,
            }
        }
        self.expect_end()?;
        Ok((rows, open.pos))
    }
}

fn reduce_literal(digits: &str, p: u64) -> u64 {
    digits.bytes().fold(0u64, |acc, b| ((acc as u128 * 10 + (b - b'0') as u128) % p as u128) as u64)
}

trait Algebra {
    type V;
    fn int(&self, digits: &str) -> Self::V;
    fn var(&self, name: &str, pos: Pos) -> Result<Self::V, ParseError>;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn sub(&self, a: Self::V, b: Self::V) -> Self::V;
    fn mul(&self, a: Self::V, b: Self::V, pos: Pos) -> Result<Self::V, ParseError>;
    fn neg(&self, a: Self::V) -> Self::V;
    fn pow(&self, base: &Node, num: u64, den: u64, pos: Pos, fragment: &str) -> Result<Self::V, ParseError>;
}

fn eval<A: Algebra>(alg: &A, node: &Node) -> Result<A::V, ParseError> {
    Ok(match node {
        Node::Int(s) => alg.int(s),
        Node::Var(name, pos) => alg.var(name, *pos)?,
        Node::Neg(a) => alg.neg(eval(alg, a)?),
        Node::Bin(op, a, b, pos) => {
            let (a, b) = (eval(alg, a)?, eval(alg, b)?);
            match op {
                '+' => alg.add(a, b),
                '-' => alg.sub(a, b),
                _ => alg.mul(a, b, *pos)?,
            }
        }
        Node::Pow { base, num, den, pos, fragment } => alg.pow(base, *num, *den, *pos, fragment)?,
    })
}

struct PolyAlgebra<'a> {
    ring: &'a RingRef,
}

fn overflow(pos: Pos, fragment: &str) -> ParseError {
    ParseError::ExponentOverflow { line: pos.line, column: pos.column, fragment: fragment.to_string() }
}

impl Algebra for PolyAlgebra<'_> {
    type V = Polynomial;

    fn int(&self, digits: &str) -> Polynomial {
        let c = reduce_literal(digits, self.ring.characteristic().get());
        Polynomial::constant(self.ring, c as i64)
    }

    fn var(&self, name: &str, pos: Pos) -> Result<Polynomial, ParseError> {
        match self.ring.variable_index(name) {
            Some(i) => Ok(Polynomial::var(self.ring, i)),
            None => Err(ParseError::UnknownVariable { name: name.into(), line: pos.line, column: pos.column }),
        }
    }

    fn add(&self, a: Polynomial, b: Polynomial) -> Polynomial {
        &a + &b
    }

    fn sub(&self, a: Polynomial, b: Polynomial) -> Polynomial {
        &a - &b
    }

    fn mul(&self, a: Polynomial, b: Polynomial, pos: Pos) -> Result<Polynomial, ParseError> {
        a.checked_mul(&b).map_err(|_| overflow(pos, "*"))
    }

    fn neg(&self, a: Polynomial) -> Polynomial {
        -a
    }

    fn pow(&self, base: &Node, num: u64, den: u64, pos: Pos, fragment: &str) -> Result<Polynomial, ParseError> {
        if den != 1 {
            return Err(ParseError::InvalidExponent {
                line: pos.line,
                column: pos.column,
                message: "fractional exponents are not allowed in polynomials".into(),
                fragment: fragment.into(),
            });
        }
        let b = eval(self, base)?;
        b.pow(num).map_err(|e| match e {
            PolyError::ExponentOverflow => overflow(pos, fragment),
            other => ParseError::Syntax { line: pos.line, column: pos.column, message: other.to_string(), fragment: fragment.into() },
        })
    }
}

/// Parse one polynomial over `ring`; the result is in canonical form.
pub fn parse_polynomial(src: &str, ring: &RingRef) -> Result<Polynomial, ParseError> {
    let mut parser = Parser::new(src)?;
    let node = parser.expr_until(&[])?;
    eval(&PolyAlgebra { ring }, &node)
}

/// Parse a comma-separated list of polynomials (ideal generators).
pub fn parse_polynomial_list(src: &str, ring: &RingRef) -> Result<Vec<Polynomial>, ParseError> {
    let mut parser = Parser::new(src)?;
    let mut out = Vec::new();
    if parser.peek().tok == Tok::End {
        return Ok(out);
    }
    loop {
        let node = parser.expr()?;
        out.push(eval(&PolyAlgebra { ring }, &node)?);
        if parser.is_sym(',') {
            parser.bump();
        } else if parser.peek().tok == Tok::End {
            break;
        } else {
            return Err(parser.unexpected());
        }
    }
    Ok(out)
}

struct TwistedAlgebra<'a> {
    field: &'a FieldRef,
    depth: u32,
    var: &'a str,
}

impl TwistedAlgebra<'_> {
    fn p(&self) -> u64 {
        self.field.characteristic().get()
    }
}

impl Algebra for TwistedAlgebra<'_> {
    type V = TwistedPoly;

    fn int(&self, digits: &str) -> TwistedPoly {
        TwistedPoly::constant(self.field.from_u64(reduce_literal(digits, self.p())), self.depth)
    }

    fn var(&self, name: &str, pos: Pos) -> Result<TwistedPoly, ParseError> {
        if name == self.var {
            Ok(TwistedPoly::x(self.field, self.depth))
        } else if name == "g" && !self.field.is_prime_field() {
            Ok(TwistedPoly::constant(self.field.generator(), self.depth))
        } else {
            Err(ParseError::UnknownVariable { name: name.into(), line: pos.line, column: pos.column })
        }
    }

    fn add(&self, a: TwistedPoly, b: TwistedPoly) -> TwistedPoly {
        a + b
    }

    fn sub(&self, a: TwistedPoly, b: TwistedPoly) -> TwistedPoly {
        a - b
    }

    fn mul(&self, a: TwistedPoly, b: TwistedPoly, pos: Pos) -> Result<TwistedPoly, ParseError> {
        let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
        da.checked_add(db).ok_or_else(|| overflow(pos, "*"))?;
        Ok(a * b)
    }

    fn neg(&self, a: TwistedPoly) -> TwistedPoly {
        -a
    }

    fn pow(&self, base: &Node, num: u64, den: u64, pos: Pos, fragment: &str) -> Result<TwistedPoly, ParseError> {
        if den == 1 {
            let b = eval(self, base)?;
            b.degree().unwrap_or(0).checked_mul(num).ok_or_else(|| overflow(pos, fragment))?;
            return Ok(b.pow(num));
        }
        let invalid = |message: &str| ParseError::InvalidExponent {
            line: pos.line,
            column: pos.column,
            message: message.into(),
            fragment: fragment.into(),
        };
        match base {
            Node::Var(name, _) if name == self.var => {}
            _ => return Err(invalid("fractional exponents apply only to the variable itself")),
        }
        let s = crate::scalar::power_of(self.p(), den).ok_or_else(|| invalid("denominator must be a power of the characteristic"))?;
        let scale = self.p().checked_pow(self.depth - s).ok_or_else(|| overflow(pos, fragment))?;
        let exp = num.checked_mul(scale).ok_or_else(|| overflow(pos, fragment))?;
        Ok(TwistedPoly::monomial(self.field.one(), exp, self.depth))
    }
}

/// Largest `s` with `p^s` appearing as an exponent denominator.
fn required_depth(node: &Node, p: u64) -> Option<u32> {
    match node {
        Node::Int(_) | Node::Var(..) => Some(0),
        Node::Neg(a) => required_depth(a, p),
        Node::Bin(_, a, b, _) => Some(required_depth(a, p)?.max(required_depth(b, p)?)),
        Node::Pow { base, den, .. } => {
            let own = if *den == 1 { 0 } else { crate::scalar::power_of(p, *den)? };
            Some(own.max(required_depth(base, p)?))
        }
    }
}

fn matrix_from_nodes<S: FrobeniusScalar>(rows: Vec<Vec<S>>, pos: Pos) -> Result<Matrix<S>, ParseError> {
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(ParseError::Syntax {
            line: pos.line,
            column: pos.column,
            message: "rows have different lengths".into(),
            fragment: "[".into(),
        });
    }
    Ok(Matrix::from_rows(rows).expect("rectangular and non-empty"))
}

/// Parse `[a, b; c, d]` with entries in `k[x^{1/p^t}]`; `t` is the smallest
/// depth accommodating every fractional exponent.
pub fn parse_twisted_matrix(src: &str, field: &FieldRef) -> Result<Matrix<TwistedPoly>, ParseError> {
    let mut parser = Parser::new(src)?;
    let (rows, pos) = parser.matrix()?;
    let p = field.characteristic().get();
    // An invalid denominator is reported by evaluation; depth 0 suffices then.
    let depth = rows.iter().flatten().map(|n| required_depth(n, p).unwrap_or(0)).max().unwrap_or(0);
    let alg = TwistedAlgebra { field, depth, var: "x" };
    let vals = rows
        .iter()
        .map(|r| r.iter().map(|n| eval(&alg, n)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    matrix_from_nodes(vals, pos)
}

/// Parse a single element of `k[x^{1/p^t}]`.
pub fn parse_twisted(src: &str, field: &FieldRef) -> Result<TwistedPoly, ParseError> {
    let mut parser = Parser::new(src)?;
    let node = parser.expr_until(&[])?;
    let depth = required_depth(&node, field.characteristic().get()).unwrap_or(0);
    eval(&TwistedAlgebra { field, depth, var: "x" }, &node)
}

/// Parse a matrix with constant entries in `k` (only `g` may appear).
pub fn parse_field_matrix(src: &str, field: &FieldRef) -> Result<Matrix<FieldScalar>, ParseError> {
    let mut parser = Parser::new(src)?;
    let (rows, pos) = parser.matrix()?;
    // No variable is available: every name except `g` is unknown.
    let alg = TwistedAlgebra { field, depth: 0, var: "" };
    let vals = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|n| eval(&alg, n).map(|v| v.as_constant().unwrap_or_else(|| field.zero())))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    matrix_from_nodes(vals, pos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::poly::PolyRing;

    fn xyz(p: u64) -> RingRef {
        PolyRing::new(p, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(parse_polynomial("x^4+y^4-z^4", &xyz(5)).unwrap().to_string(), "x^4 + y^4 + 4*z^4");
        assert_eq!(parse_polynomial("(x+y)^3", &xyz(3)).unwrap().to_string(), "x^3 + y^3");
        assert_eq!(parse_polynomial("-x^2", &xyz(7)).unwrap().to_string(), "6*x^2");
        assert_eq!(parse_polynomial("123456789012345678901234567891*x", &xyz(7)).unwrap().to_string(), "x");
        assert_eq!(parse_polynomial("2*(x - x)", &xyz(7)).unwrap().to_string(), "0");
    }

    #[test]
    fn syntax_error_points_at_star() {
        match parse_polynomial("x + * y", &xyz(5)).unwrap_err() {
            ParseError::Syntax { line, column, fragment, .. } => {
                assert_eq!((line, column), (1, 5));
                assert_eq!(fragment, "*");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn distinct_diagnostics() {
        let r = xyz(5);
        assert!(matches!(parse_polynomial("x + w", &r), Err(ParseError::UnknownVariable { ref name, column: 5, .. }) if name == "w"));
        assert!(matches!(parse_polynomial("x^99999999999999999999999", &r), Err(ParseError::ExponentOverflow { .. })));
        assert!(matches!(parse_polynomial("x^18446744073709551615*x", &r), Err(ParseError::ExponentOverflow { .. })));
        assert!(matches!(parse_polynomial("2x", &r), Err(ParseError::Syntax { column: 2, .. })));
        assert!(matches!(parse_polynomial("x^(1/5)", &r), Err(ParseError::InvalidExponent { .. })));
        assert!(matches!(parse_polynomial("x\n + (y", &r), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn lists() {
        let r = xyz(5);
        let l = parse_polynomial_list("x^2, y - z,z", &r).unwrap();
        assert_eq!(l.len(), 3);
        assert!(parse_polynomial_list("x,,y", &r).is_err());
        assert!(parse_polynomial_list("", &r).unwrap().is_empty());
    }

    #[test]
    fn twisted_matrices() {
        let f3 = FiniteField::prime(3).unwrap();
        let a = parse_twisted_matrix("[0,1;1,x]", &f3).unwrap();
        assert_eq!(a.to_string(), "[0, 1; 1, x]");
        let b = parse_twisted_matrix("[x^(1/9), 1; x^(2/3), 2*x]", &f3).unwrap();
        assert_eq!(b[(0, 0)].depth(), 2);
        assert_eq!(b.to_string(), "[x^(1/9), 1; x^(2/3), 2*x]");
        assert!(parse_twisted_matrix("[1, 2; 3]", &f3).is_err());
        assert!(parse_twisted_matrix("[x^(1/2)]", &f3).is_err());
        let f9 = FiniteField::extension(3, 2).unwrap();
        let c = parse_field_matrix("[g, 1; 0, g+1]", &f9).unwrap();
        assert_eq!(c.to_string(), "[g, 1; 0, g+1]");
        assert!(parse_field_matrix("[x]", &f9).is_err());
    }
}
