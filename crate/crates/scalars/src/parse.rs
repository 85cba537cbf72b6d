//! Recursive-descent parser shared by the scalar syntax and the
//! noncommutative expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exp)?
//! exp    := '-'? int | '(' '-'? int ('/' int)? ')'
//! atom   := int | 'q' | ident ('[' int (',' int)* ']')? | '(' expr ')'
//! ```
//! `q^(k/2)` is the only fractional power; it denotes s^k.

use crate::{Scalar, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: expected {}, found {}", self.pos, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

/// Values the parser can build. Implemented for plain scalars here and for
/// noncommutative polynomials in `ncengine`.
pub trait Grammar {
    type Value: Clone;
    fn scalar(&self, s: Scalar) -> Self::Value;
    /// Resolves an identifier atom such as `p[1]` or `sqrtp0`.
    fn atom(&self, name: &str, indices: &[i64]) -> Result<Self::Value, String>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn pow(&self, a: Self::Value, k: i64) -> Result<Self::Value, String>;
    fn div(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[i..j].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().unwrap())));
            i = j;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                j += 1;
            }
            let mut s: String = chars[i..j].iter().map(|x| x.1).collect();
            // `L+[` and `L-[` are single identifiers.
            if s == "L" && j + 1 < chars.len() && matches!(chars[j].1, '+' | '-') && chars[j + 1].1 == '[' {
                s.push(chars[j].1);
                j += 1;
            }
            out.push((pos, Tok::Ident(s)));
            i = j;
        } else if "+-*/^()[],".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError { pos, expected: "token".into(), found: format!("'{c}'") });
        }
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser<'g, G: Grammar> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    g: &'g G,
}

impl<'g, G: Grammar> Parser<'g, G> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError { pos: self.pos(), expected: expected.into(), found: self.peek().to_string() }
    }

    fn semantic(&self, pos: usize, msg: String) -> ParseError {
        ParseError { pos, expected: "valid operand".into(), found: msg }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("'{c}'")))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                let v: i64 = i64::try_from(n).map_err(|_| self.err("small integer"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("integer")),
        }
    }

    fn expr(&mut self) -> Result<G::Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.g.add(acc, t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.g.add(acc, self.g.neg(t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<G::Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let t = self.unary()?;
                acc = self.g.mul(acc, t);
            } else if self.peek() == &Tok::Sym('/') {
                let pos = self.pos();
                self.at += 1;
                let t = self.unary()?;
                acc = self.g.div(acc, t).map_err(|m| self.semantic(pos, m))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<G::Value, ParseError> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.g.neg(v));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<G::Value, ParseError> {
        let is_q = self.peek() == &Tok::Ident("q".into());
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        if self.eat('(') {
            let k = self.int()?;
            if self.eat('/') {
                let d = self.int()?;
                self.expect(')')?;
                if !is_q || d != 2 {
                    return Err(ParseError { pos, expected: "q^(k/2)".into(), found: format!("^({k}/{d})") });
                }
                return Ok(self.g.scalar(Scalar::s_pow(k as i32)));
            }
            self.expect(')')?;
            return self.g.pow(base, k).map_err(|m| self.semantic(pos, m));
        }
        let k = self.int()?;
        self.g.pow(base, k).map_err(|m| self.semantic(pos, m))
    }

    fn atom(&mut self) -> Result<G::Value, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(self.g.scalar(Scalar::from_rational(BigRational::from_integer(n))))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => {
                self.at += 1;
                if name == "q" {
                    return Ok(self.g.scalar(Scalar::q()));
                }
                let mut idx = Vec::new();
                if self.eat('[') {
                    idx.push(self.int()?);
                    while self.eat(',') {
                        idx.push(self.int()?);
                    }
                    self.expect(']')?;
                }
                self.g.atom(&name, &idx).map_err(|m| ParseError { pos, expected: "known generator".into(), found: m })
            }
            _ => Err(self.err("number, identifier or '('")),
        }
    }
}

/// Parses a complete expression with the given grammar.
pub fn parse_with<G: Grammar>(g: &G, input: &str) -> Result<G::Value, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, at: 0, g };
    let v = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.err("operator or end of input"));
    }
    Ok(v)
}

struct ScalarGrammar;

impl Grammar for ScalarGrammar {
    type Value = Scalar;
    fn scalar(&self, s: Scalar) -> Scalar {
        s
    }
    fn atom(&self, name: &str, _: &[i64]) -> Result<Scalar, String> {
        Err(format!("'{name}' is not a scalar symbol"))
    }
    fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        a + &b
    }
    fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        a * &b
    }
    fn neg(&self, a: Scalar) -> Scalar {
        -a
    }
    fn pow(&self, a: Scalar, k: i64) -> Result<Scalar, String> {
        a.pow(k as i32).map_err(|e| e.to_string())
    }
    fn div(&self, a: Scalar, b: Scalar) -> Result<Scalar, String> {
        a.div(&b).map_err(|e: ScalarError| e.to_string())
    }
}

impl std::str::FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_with(&ScalarGrammar, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn half_powers() {
        assert_eq!(p("q^(1/2)"), Scalar::s());
        assert_eq!(p("q^(-3/2)"), Scalar::s_pow(-3));
        assert_eq!(p("q^2"), Scalar::q_pow(2));
    }

    #[test]
    fn precedence() {
        assert_eq!(p("3/2*q"), Scalar::frac(3, 2) * &Scalar::q());
        assert_eq!(p("-q^2"), -Scalar::q_pow(2));
        assert_eq!(p("1/q^(1/2)"), Scalar::s_pow(-1));
    }

    #[test]
    fn errors_carry_position() {
        let e = "q + * 2".parse::<Scalar>().unwrap_err();
        assert_eq!(e.pos, 4);
        assert!("p^(1/2)".parse::<Scalar>().is_err());
        assert!("1/(q-q)".parse::<Scalar>().is_err());
    }
}
