//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!   expr     := ['-'] term (('+' | '-') term)*
//!   term     := factor ('*' factor)*
//!   factor   := rational | var ('^' nat)? | '(' expr ')'
//!   rational := int ('/' posint)?
//!   var      := letter (letter | digit)*
//!
//! Multiplication is always explicit: "2x" is a syntax error.

use milnor_core::poly::{Monomial, Polynomial, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "syntax error at line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Scanner {
    fn new(text: &str) -> Scanner {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }
}

/// Exponent map over named variables; combined into a Polynomial once the
/// full variable list is known.
type NamedMono = std::collections::BTreeMap<String, u64>;

struct Parser<'v> {
    sc: Scanner,
    /// Fixed variable list (--vars), or None for first-appearance order.
    fixed: Option<&'v [String]>,
    names: Vec<String>,
}

impl<'v> Parser<'v> {
    fn var_index(&mut self, name: &str) -> Option<usize> {
        if let Some(fixed) = self.fixed {
            return fixed.iter().position(|v| v == name);
        }
        match self.names.iter().position(|v| v == name) {
            Some(i) => Some(i),
            None => {
                self.names.push(name.to_string());
                Some(self.names.len() - 1)
            }
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        let mut digits = String::new();
        while matches!(self.sc.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.sc.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.sc.err("expected a number"));
        }
        digits
            .parse()
            .map_err(|_| self.sc.err("exponent out of range"))
    }

    fn bigint_digits(&mut self) -> Result<BigInt, ParseError> {
        let mut digits = String::new();
        while matches!(self.sc.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.sc.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.sc.err("expected a number"));
        }
        Ok(digits.parse().unwrap())
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let neg = if self.sc.peek() == Some('-') {
            self.sc.bump();
            true
        } else {
            false
        };
        let mut num = self.bigint_digits()?;
        if neg {
            num = -num;
        }
        if self.sc.peek() == Some('/') {
            self.sc.bump();
            let den = self.bigint_digits()?;
            if den.is_zero() {
                return Err(self.sc.err("zero denominator"));
            }
            return Ok(Rat::new(num, den));
        }
        Ok(Rat::from(num))
    }

    fn ident(&mut self) -> String {
        let mut name = String::new();
        while matches!(self.sc.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            name.push(self.sc.bump().unwrap());
        }
        name
    }

    /// A factor as (coefficient, named monomial, optional parenthesized sub-poly).
    fn factor(&mut self) -> Result<Vec<(NamedMono, Rat)>, ParseError> {
        self.sc.skip_ws();
        match self.sc.peek() {
            Some('(') => {
                self.sc.bump();
                let inner = self.expr()?;
                self.sc.skip_ws();
                if self.sc.peek() != Some(')') {
                    return Err(self.sc.err("expected ')'"));
                }
                self.sc.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let r = self.rational()?;
                Ok(vec![(NamedMono::new(), r)])
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if self.fixed.is_some() && self.var_index(&name).is_none() {
                    return Err(ParseError {
                        line: self.sc.line,
                        col: self.sc.col - name.chars().count(),
                        msg: format!("unknown variable '{name}'"),
                    });
                }
                self.var_index(&name);
                let e = if self.sc.peek() == Some('^') {
                    self.sc.bump();
                    self.nat()?
                } else {
                    1
                };
                let mut m = NamedMono::new();
                m.insert(name, e);
                Ok(vec![(m, Rat::one())])
            }
            _ => Err(self.sc.err("expected a number, variable or '('")),
        }
    }

    fn mul(a: &[(NamedMono, Rat)], b: &[(NamedMono, Rat)]) -> Vec<(NamedMono, Rat)> {
        let mut out: std::collections::BTreeMap<NamedMono, Rat> = Default::default();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let mut m = ma.clone();
                for (v, e) in mb {
                    *m.entry(v.clone()).or_insert(0) += e;
                }
                let entry = out.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn term(&mut self) -> Result<Vec<(NamedMono, Rat)>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.sc.skip_ws();
            if self.sc.peek() == Some('*') {
                self.sc.bump();
                let next = self.factor()?;
                acc = Self::mul(&acc, &next);
            } else {
                return Ok(acc);
            }
        }
    }

    fn expr(&mut self) -> Result<Vec<(NamedMono, Rat)>, ParseError> {
        self.sc.skip_ws();
        let mut negate_first = false;
        if self.sc.peek() == Some('-') {
            // leading minus: peek past it; "-3*x" is a negative rational,
            // "-x" negates the first term
            let save = (self.sc.pos, self.sc.line, self.sc.col);
            self.sc.bump();
            if !matches!(self.sc.peek(), Some(c) if c.is_ascii_digit()) {
                negate_first = true;
            } else {
                (self.sc.pos, self.sc.line, self.sc.col) = save;
            }
        }
        let mut acc: std::collections::BTreeMap<NamedMono, Rat> = Default::default();
        let mut add = |terms: Vec<(NamedMono, Rat)>, sign: i64| {
            for (m, c) in terms {
                let entry = acc.entry(m).or_insert_with(Rat::zero);
                *entry += c * Rat::from(BigInt::from(sign));
            }
        };
        add(self.term()?, if negate_first { -1 } else { 1 });
        loop {
            self.sc.skip_ws();
            match self.sc.peek() {
                Some('+') => {
                    self.sc.bump();
                    add(self.term()?, 1);
                }
                Some('-') => {
                    self.sc.bump();
                    add(self.term()?, -1);
                }
                _ => {
                    return Ok(acc
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect())
                }
            }
        }
    }
}

/// Parse an expression into a polynomial together with the variable name
/// list in index order.  With `vars` the order is fixed and unknown names
/// are rejected; otherwise variables are indexed by first appearance.
pub fn parse_polynomial(
    text: &str,
    vars: Option<&[String]>,
) -> Result<(Polynomial, Vec<String>), ParseError> {
    let mut p = Parser {
        sc: Scanner::new(text),
        fixed: vars,
        names: vars.map(|v| v.to_vec()).unwrap_or_default(),
    };
    let terms = p.expr()?;
    p.sc.skip_ws();
    if let Some(c) = p.sc.peek() {
        return Err(p.sc.err(format!("unexpected '{c}'")));
    }
    let names = p.names;
    let mut f = Polynomial::zero(names.len());
    for (m, c) in terms {
        let mut exps = vec![0u64; names.len()];
        for (v, e) in m {
            let i = names.iter().position(|n| *n == v).unwrap();
            exps[i] = e;
        }
        f.add_term(Monomial(exps), c);
    }
    Ok((f, names))
}

/// Parse a comma-separated list of rationals (for --branch-point).
pub fn parse_rational_list(text: &str) -> Result<Vec<Rat>, ParseError> {
    text.split(',')
        .map(|part| {
            let mut p = Parser {
                sc: Scanner::new(part.trim()),
                fixed: None,
                names: vec![],
            };
            let r = p.rational()?;
            if p.sc.peek().is_some() {
                return Err(p.sc.err("trailing characters in rational"));
            }
            Ok(r)
        })
        .collect()
}
