//! Expression language for noncommutative polynomials in `q` and `qbar` with
//! quaternion constants: AST, parser, canonical printer, pointwise evaluation,
//! and conversion to and from right-coefficient polynomials in `q`.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' NAT)?
//! atom   := 'q' | 'qbar' | '-'? LIT | '[' QUAT ']' | '(' expr ')' | 'A' '(' NAT ',' NAT '|' QUAT ')'
//! LIT    := NUM UNIT? | UNIT          (single component: 2, 3/4j, k)
//! QUAT   := '-'? LIT (('+' | '-') LIT)*
//! ```
//!
//! A bare constant inside an expression is a single component; multi-component
//! constants are bracketed (`[1+2i]`) except inside `A(..|..)`. `a - b` folds
//! into `Const(-b)` when `b` is a constant and is `Sum[a, Product[-1, b]]`
//! otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, ParseError};
use crate::quat::{int, Quaternion, Rational};

/// Abstract syntax tree. `Product` order is significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Var,
    VarBar,
    Const(Quaternion),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    /// `q^n alpha q^m`.
    Generic { n: u32, m: u32, alpha: Quaternion },
}

impl Expr {
    pub fn constant(c: Quaternion) -> Expr {
        Expr::Const(c)
    }

    pub fn power(base: Expr, n: u32) -> Expr {
        Expr::Power(Box::new(base), n)
    }

    pub fn generic(n: u32, m: u32, alpha: Quaternion) -> Expr {
        Expr::Generic { n, m, alpha }
    }

    /// `Product[Power(q, n), Const(alpha), Power(q, m)]`, the definitional
    /// unfolding of a `Generic` node.
    pub fn generic_unfolded(n: u32, m: u32, alpha: Quaternion) -> Expr {
        Expr::Product(vec![
            Expr::power(Expr::Var, n),
            Expr::Const(alpha),
            Expr::power(Expr::Var, m),
        ])
    }

    /// Pointwise (dot) product `f * g`.
    pub fn dot(f: Expr, g: Expr) -> Expr {
        Expr::Product(vec![f, g])
    }

    /// Node count, used to bound random generation.
    pub fn size(&self) -> usize {
        match self {
            Expr::Sum(xs) | Expr::Product(xs) => 1 + xs.iter().map(Expr::size).sum::<usize>(),
            Expr::Power(b, _) => 1 + b.size(),
            _ => 1,
        }
    }

    pub fn contains_bar(&self) -> bool {
        match self {
            Expr::VarBar => true,
            Expr::Sum(xs) | Expr::Product(xs) => xs.iter().any(Expr::contains_bar),
            Expr::Power(b, _) => b.contains_bar(),
            _ => false,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_expr(self))
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational, bool),
    Unit(char),
    Q,
    QBar,
    A,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    Caret,
    Comma,
    Pipe,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(r, _) => crate::quat::fmt_rational(r),
            Tok::Unit(c) => c.to_string(),
            Tok::Q => "q".into(),
            Tok::QBar => "qbar".into(),
            Tok::A => "A".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::LBracket => "[".into(),
            Tok::RBracket => "]".into(),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Star => "*".into(),
            Tok::Caret => "^".into(),
            Tok::Comma => ",".into(),
            Tok::Pipe => "|".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Token {
    tok: Tok,
    start: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c == b'#' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b',' => Some(Tok::Comma),
            b'|' => Some(Tok::Pipe),
            _ => None,
        };
        if let Some(tok) = single {
            pos += 1;
            out.push(Token { tok, start });
            continue;
        }
        if c.is_ascii_digit() {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let numer: BigInt = text[start..pos].parse().expect("digits");
            let mut value = Rational::from_integer(numer);
            let mut integral = true;
            if pos < bytes.len() && bytes[pos] == b'/' {
                let dstart = pos + 1;
                let mut dend = dstart;
                while dend < bytes.len() && bytes[dend].is_ascii_digit() {
                    dend += 1;
                }
                if dend == dstart {
                    return Err(ParseError {
                        offset: dstart,
                        expected: vec!["denominator digits".into()],
                        found: text[dstart..].chars().next().map(String::from),
                    });
                }
                let denom: BigInt = text[dstart..dend].parse().expect("digits");
                if denom.is_zero() {
                    return Err(ParseError {
                        offset: dstart,
                        expected: vec!["nonzero denominator".into()],
                        found: Some("0".into()),
                    });
                }
                value /= Rational::from_integer(denom);
                integral = false;
                pos = dend;
            }
            out.push(Token { tok: Tok::Num(value, integral), start });
            continue;
        }
        if c.is_ascii_alphabetic() {
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            let tok = match &text[start..pos] {
                "q" => Tok::Q,
                "qbar" => Tok::QBar,
                "A" => Tok::A,
                "i" => Tok::Unit('i'),
                "j" => Tok::Unit('j'),
                "k" => Tok::Unit('k'),
                word => {
                    return Err(ParseError {
                        offset: start,
                        expected: vec!["q".into(), "qbar".into(), "A".into(), "i, j or k".into()],
                        found: Some(word.into()),
                    })
                }
            };
            out.push(Token { tok, start });
            continue;
        }
        let ch = text[start..].chars().next().unwrap();
        return Err(ParseError {
            offset: start,
            expected: vec!["token".into()],
            found: Some(ch.to_string()),
        });
    }
    out.push(Token { tok: Tok::Eof, start: text.len() });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.toks[self.pos];
        let found = match t.tok {
            Tok::Eof => None,
            ref tok => Some(tok.describe()),
        };
        ParseError {
            offset: t.start,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        if let Tok::Num(r, true) = self.peek() {
            if let Ok(n) = u32::try_from(r.to_integer()) {
                self.bump();
                return Ok(n);
            }
        }
        Err(self.error(&["natural number"]))
    }

    fn at_literal(&self) -> bool {
        matches!(self.peek(), Tok::Num(..) | Tok::Unit(_))
    }

    /// Single component `NUM UNIT? | UNIT`.
    fn literal_term(&mut self) -> Result<Quaternion, ParseError> {
        let coeff = match self.peek().clone() {
            Tok::Num(r, _) => {
                self.bump();
                Some(r)
            }
            Tok::Unit(_) => None,
            _ => return Err(self.error(&["number", "i", "j", "k"])),
        };
        let unit = match self.peek() {
            Tok::Unit(u) => {
                let u = *u;
                self.bump();
                Some(u)
            }
            _ => None,
        };
        let c = coeff.unwrap_or_else(|| int(1));
        let z = Rational::zero();
        Ok(match unit {
            None => Quaternion::real(c),
            Some('i') => Quaternion::new(z.clone(), c, z.clone(), z),
            Some('j') => Quaternion::new(z.clone(), z.clone(), c, z),
            Some(_) => Quaternion::new(z.clone(), z.clone(), z, c),
        })
    }

    /// Full signed literal `-1+2i-3/4j+k`.
    fn quat_literal(&mut self) -> Result<Quaternion, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            -self.literal_term()?
        } else {
            self.literal_term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc += &self.literal_term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc -= &self.literal_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    terms.push(match t {
                        Expr::Const(c) => Expr::Const(-c),
                        other => Expr::Product(vec![Expr::Const(minus_one()), other]),
                    });
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let n = self.nat()?;
            return Ok(Expr::power(base, n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Q => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::QBar => {
                self.bump();
                Ok(Expr::VarBar)
            }
            Tok::Num(..) | Tok::Unit(_) => Ok(Expr::Const(self.literal_term()?)),
            Tok::Minus => {
                self.bump();
                if !self.at_literal() {
                    return Err(self.error(&["number", "i", "j", "k"]));
                }
                Ok(Expr::Const(-self.literal_term()?))
            }
            Tok::LBracket => {
                self.bump();
                let c = self.quat_literal()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Const(c))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::A => {
                self.bump();
                self.expect(Tok::LParen)?;
                let n = self.nat()?;
                self.expect(Tok::Comma)?;
                let m = self.nat()?;
                self.expect(Tok::Pipe)?;
                let alpha = self.quat_literal()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Generic { n, m, alpha })
            }
            _ => Err(self.error(&["q", "qbar", "constant", "[", "(", "A("])),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["+", "-", "*", "^", "end of input"]));
    }
    Ok(e)
}

/// Parses a standalone quaternion literal such as `1+2i-3/4j+k`, bare or
/// in brackets.
pub fn parse_quaternion(text: &str) -> Result<Quaternion, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let bracketed = *p.peek() == Tok::LBracket;
    if bracketed {
        p.bump();
    }
    let c = p.quat_literal()?;
    if bracketed {
        p.expect(Tok::RBracket)?;
    }
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["+", "-", "end of input"]));
    }
    Ok(c)
}

/// One expression per nonblank, non-comment line. Errors carry offsets
/// relative to the line.
pub fn parse_lines(text: &str) -> Vec<(usize, Result<Expr, ParseError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(no, line)| (no + 1, parse_expr(line)))
        .collect()
}

// ---------------------------------------------------------------------------
// Printer

fn leading_negative(c: &Quaternion) -> bool {
    c.components()
        .into_iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
}

fn print_const(c: &Quaternion) -> String {
    if c.support() <= 1 {
        c.to_string()
    } else {
        format!("[{c}]")
    }
}

fn minus_one() -> Quaternion {
    Quaternion::from(-1)
}

fn print_atom(e: &Expr) -> String {
    match e {
        Expr::Var => "q".into(),
        Expr::VarBar => "qbar".into(),
        Expr::Const(c) => print_const(c),
        Expr::Generic { n, m, alpha } => format!("A({n},{m}|{alpha})"),
        other => format!("({})", print_expr(other)),
    }
}

fn print_factor(e: &Expr) -> String {
    match e {
        Expr::Power(base, n) => format!("{}^{n}", print_atom(base)),
        other => print_atom(other),
    }
}

fn print_term(e: &Expr) -> String {
    match e {
        Expr::Product(xs) => xs.iter().map(print_factor).collect::<Vec<_>>().join(" * "),
        Expr::Sum(_) => print_atom(e),
        other => print_factor(other),
    }
}

/// Canonical text; `parse_expr(print_expr(e)) == e` for every tree the parser
/// can produce (sums and products with at least two children).
pub fn print_expr(e: &Expr) -> String {
    match e {
        Expr::Sum(xs) if !xs.is_empty() => {
            let mut out = print_term(&xs[0]);
            for x in &xs[1..] {
                match x {
                    Expr::Const(c) if leading_negative(c) => {
                        out.push_str(" - ");
                        out.push_str(&print_const(&-c));
                    }
                    Expr::Product(fs)
                        if fs.len() == 2
                            && fs[0] == Expr::Const(minus_one())
                            && !matches!(fs[1], Expr::Const(_)) =>
                    {
                        out.push_str(" - ");
                        out.push_str(&print_term(&fs[1]));
                    }
                    other => {
                        out.push_str(" + ");
                        out.push_str(&print_term(other));
                    }
                }
            }
            out
        }
        other => print_term(other),
    }
}

// ---------------------------------------------------------------------------
// Evaluation

/// Pointwise value at `q`, with `qbar` bound to `conj(q)`; products
/// evaluate left to right.
pub fn eval_expr(e: &Expr, q: &Quaternion) -> Quaternion {
    match e {
        Expr::Var => q.clone(),
        Expr::VarBar => q.conj(),
        Expr::Const(c) => c.clone(),
        Expr::Sum(xs) => xs.iter().fold(Quaternion::zero(), |acc, x| acc + eval_expr(x, q)),
        Expr::Product(xs) => xs.iter().fold(Quaternion::one(), |acc, x| acc * eval_expr(x, q)),
        Expr::Power(b, n) => eval_expr(b, q).pow(*n),
        Expr::Generic { n, m, alpha } => q.pow(*n) * alpha * q.pow(*m),
    }
}

// ---------------------------------------------------------------------------
// Right-coefficient polynomials

/// `sum_n q^n a_n` with right coefficients; trailing zeros are trimmed so the
/// zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SRPoly {
    coeffs: Vec<Quaternion>,
}

impl SRPoly {
    pub fn new(mut coeffs: Vec<Quaternion>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        SRPoly { coeffs }
    }

    pub fn zero() -> Self {
        SRPoly::default()
    }

    pub fn constant(c: Quaternion) -> Self {
        SRPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Quaternion {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(Quaternion::is_real)
    }

    pub fn eval(&self, q: &Quaternion) -> Quaternion {
        let mut acc = Quaternion::zero();
        let mut pow = Quaternion::one();
        for a in &self.coeffs {
            acc += &(&pow * a);
            pow = &pow * q;
        }
        acc
    }

    pub fn add(&self, other: &SRPoly) -> SRPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SRPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, r: &Rational) -> SRPoly {
        SRPoly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    /// Formal derivative `sum n q^(n-1) a_n`.
    pub fn derivative(&self) -> SRPoly {
        SRPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| a.scale(&int(n as i64)))
                .collect(),
        )
    }

    pub fn to_expr(&self) -> Expr {
        srpoly_to_expr(self)
    }
}

impl fmt::Display for SRPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_expr(&srpoly_to_expr(self)))
    }
}

/// `Sum[q^n * a_n]` over nonzero coefficients, `Const(0)` for the zero
/// polynomial.
pub fn srpoly_to_expr(p: &SRPoly) -> Expr {
    let mut terms: Vec<Expr> = p
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(n, a)| match n {
            0 => Expr::Const(a.clone()),
            1 => Expr::Product(vec![Expr::Var, Expr::Const(a.clone())]),
            _ => Expr::Product(vec![Expr::power(Expr::Var, n as u32), Expr::Const(a.clone())]),
        })
        .collect();
    match terms.len() {
        0 => Expr::Const(Quaternion::zero()),
        1 => terms.pop().unwrap(),
        _ => Expr::Sum(terms),
    }
}

#[derive(Clone, Debug)]
enum Letter {
    Q,
    QBar,
    C(Quaternion),
}

type Word = Vec<Letter>;

fn expand_words(e: &Expr) -> Vec<Word> {
    fn product(a: &[Word], b: &[Word]) -> Vec<Word> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                let mut w = x.clone();
                w.extend(y.iter().cloned());
                out.push(w);
            }
        }
        out
    }
    match e {
        Expr::Var => vec![vec![Letter::Q]],
        Expr::VarBar => vec![vec![Letter::QBar]],
        Expr::Const(c) if c.is_zero() => vec![],
        Expr::Const(c) => vec![vec![Letter::C(c.clone())]],
        Expr::Sum(xs) => xs.iter().flat_map(expand_words).collect(),
        Expr::Product(xs) => xs
            .iter()
            .fold(vec![vec![]], |acc, x| product(&acc, &expand_words(x))),
        Expr::Power(b, n) => {
            let base = expand_words(b);
            (0..*n).fold(vec![vec![]], |acc, _| product(&acc, &base))
        }
        Expr::Generic { n, m, alpha } => {
            if alpha.is_zero() {
                return vec![];
            }
            let mut w = vec![Letter::Q; *n as usize];
            w.push(Letter::C(alpha.clone()));
            w.extend(std::iter::repeat_n(Letter::Q, *m as usize));
            vec![w]
        }
    }
}

/// Reads `e` as `sum q^n a_n`. Real constants commute freely; a nonreal
/// constant standing to the left of some `q` is rejected rather than moved.
pub fn expr_to_srpoly(e: &Expr) -> Result<SRPoly, Error> {
    if e.contains_bar() {
        return Err(Error::NotSliceRegularForm(format!("`{}` contains qbar", print_expr(e))));
    }
    let mut coeffs: Vec<Quaternion> = Vec::new();
    for word in expand_words(e) {
        let mut degree = 0usize;
        let mut coeff = Quaternion::one();
        let mut pending_nonreal = false;
        for letter in &word {
            match letter {
                Letter::Q => {
                    if pending_nonreal {
                        return Err(Error::NotSliceRegularForm(format!(
                            "`{}` has a nonreal constant to the left of q",
                            print_expr(e)
                        )));
                    }
                    degree += 1;
                }
                Letter::C(c) => {
                    if !c.is_real() {
                        pending_nonreal = true;
                    }
                    coeff = coeff * c;
                }
                Letter::QBar => unreachable!("checked above"),
            }
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, Quaternion::zero());
        }
        coeffs[degree] += &coeff;
    }
    Ok(SRPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::rat;

    fn qi() -> Quaternion {
        Quaternion::i()
    }

    #[test]
    fn parse_intro_example() {
        let e = parse_expr("(q - i) * q").unwrap();
        assert_eq!(
            e,
            Expr::Product(vec![Expr::Sum(vec![Expr::Var, Expr::Const(-qi())]), Expr::Var])
        );
    }

    #[test]
    fn parse_generic() {
        assert_eq!(
            parse_expr("A(2,3|1+2i)").unwrap(),
            Expr::generic(2, 3, Quaternion::from_ints(1, 2, 0, 0))
        );
        assert_eq!(
            parse_expr("A(0, 1 | -3/4j + k)").unwrap(),
            Expr::generic(0, 1, Quaternion::new(int(0), int(0), rat(-3, 4), int(1)))
        );
    }

    #[test]
    fn parse_errors_report_offsets() {
        let err = parse_expr("q^").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.expected.iter().any(|s| s == "natural number"));
        assert_eq!(parse_expr("q ^").unwrap_err().offset, 3);
        assert_eq!(parse_expr("q + * q").unwrap_err().offset, 4);
        assert_eq!(parse_expr("(q").unwrap_err().offset, 2);
        assert_eq!(parse_expr("q q").unwrap_err().offset, 2);
        assert_eq!(parse_expr("x").unwrap_err().offset, 0);
        assert!(parse_expr("1/0").is_err());
    }

    #[test]
    fn subtraction_sugar() {
        assert_eq!(
            parse_expr("q - q").unwrap(),
            Expr::Sum(vec![
                Expr::Var,
                Expr::Product(vec![Expr::Const(Quaternion::from(-1)), Expr::Var])
            ])
        );
        assert_eq!(
            parse_expr("q - [1+2i]").unwrap(),
            Expr::Sum(vec![Expr::Var, Expr::Const(Quaternion::from_ints(-1, -2, 0, 0))])
        );
    }

    #[test]
    fn printing() {
        assert_eq!(print_expr(&Expr::generic(1, 1, qi())), "A(1,1|i)");
        let e = Expr::Product(vec![Expr::Var, Expr::Const(Quaternion::j()), Expr::Var]);
        assert_eq!(print_expr(&e), "q * j * q");
        assert_eq!(parse_expr("q * j * q").unwrap(), e);
        let e = Expr::Sum(vec![Expr::power(Expr::Var, 2), Expr::Const(Quaternion::one())]);
        assert_eq!(print_expr(&e), "q^2 + 1");
        let e = Expr::Const(Quaternion::from_ints(1, 2, 0, 0));
        assert_eq!(print_expr(&e), "[1+2i]");
        assert_eq!(parse_expr("[1+2i]").unwrap(), e);
    }

    #[test]
    fn tricky_roundtrips() {
        let cases = [
            "-2i^3 * q",
            "q - -1 * 2i",
            "q + -1 * 2i",
            "(q^2)^3",
            "q - q * qbar",
            "-i + q",
            "(q + 1) * (qbar - [1-2i])",
            "((q * q) * q)",
            "A(1,1|-1+i)^2 - (q + qbar)",
        ];
        for text in cases {
            let e = parse_expr(text).unwrap();
            let printed = print_expr(&e);
            assert_eq!(parse_expr(&printed).unwrap(), e, "{text} -> {printed}");
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_expr(&Expr::generic(1, 1, qi()), &Quaternion::j()), qi());
        let p = Quaternion::from_ints(1, 2, 0, 0);
        assert_eq!(eval_expr(&Expr::VarBar, &p), Quaternion::from_ints(1, -2, 0, 0));
        let e = parse_expr("(q - i) * q").unwrap();
        assert!(eval_expr(&e, &qi()).is_zero());
    }

    #[test]
    fn srpoly_conversions() {
        let p = expr_to_srpoly(&parse_expr("q^2*i + q*j + 1").unwrap()).unwrap();
        assert_eq!(p.coeffs(), &[Quaternion::one(), Quaternion::j(), qi()]);
        assert!(matches!(
            expr_to_srpoly(&parse_expr("A(1,1|i)").unwrap()),
            Err(Error::NotSliceRegularForm(_))
        ));
        assert!(matches!(
            expr_to_srpoly(&parse_expr("qbar").unwrap()),
            Err(Error::NotSliceRegularForm(_))
        ));
        // real constants may sit anywhere
        let p = expr_to_srpoly(&parse_expr("2 * q * 3 * q * i").unwrap()).unwrap();
        assert_eq!(p.coeffs(), &[Quaternion::zero(), Quaternion::zero(), Quaternion::from_ints(0, 6, 0, 0)]);
        let e = srpoly_to_expr(&SRPoly::new(vec![Quaternion::zero(), qi()]));
        assert_eq!(print_expr(&e), "q * i");
        assert_eq!(srpoly_to_expr(&SRPoly::zero()), Expr::Const(Quaternion::zero()));
    }

    #[test]
    fn quaternion_literals() {
        let c = parse_quaternion("1+2i-3/4j+k").unwrap();
        assert_eq!(c, Quaternion::new(int(1), int(2), rat(-3, 4), int(1)));
        assert_eq!(parse_quaternion(" -5/2 ").unwrap(), Quaternion::real(rat(-5, 2)));
        assert_eq!(parse_quaternion("0").unwrap(), Quaternion::zero());
        assert!(parse_quaternion("1+").is_err());
        assert!(parse_quaternion("q").is_err());
    }

    #[test]
    fn lines_skip_comments() {
        let parsed = parse_lines("# header\nq^2\n\nA(1,1|i) # trailing\n");
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].0, 2);
        assert_eq!(parsed[1].1.as_ref().unwrap(), &Expr::generic(1, 1, qi()));
    }
}
