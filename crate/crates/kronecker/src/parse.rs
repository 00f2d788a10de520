//! Parsing and rendering of polynomial expressions.
//!
//! Grammar (whitespace insignificant, implicit multiplication allowed):
//!
//! ```text
//! poly     := term { ("+"|"-") term }
//! term     := factor { ["*"] factor }
//! factor   := rational | variable ["^" natural] | "(" poly ")" | "-" factor
//! rational := integer ["/" positive-integer]
//! variable := "X" | "x"
//! ```
//!
//! The same grammar, with generator symbols `g1..gk` admitted as extra
//! variables, is reused for tower and radical-chain description files; see
//! [`ExprAlgebra`]. Exponents above 65535 are rejected outright so that
//! hostile inputs cannot blow up memory.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::poly::{Polynomial, Rational};

/// A parse failure: byte offset into the input, a message, and an optional
/// hint describing the expected token. Offsets lie in `0..=input.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub offset: usize,
    pub message: String,
    pub expected: Option<String>,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)?;
        if let Some(e) = &self.expected {
            write!(f, " (expected {e})")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseDiagnostic {}

const MAX_EXPONENT: u32 = 65_535;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseDiagnostic> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                let n: BigInt = digits.parse().expect("digit run parses");
                toks.push(Spanned {
                    tok: Tok::Int(n),
                    offset: start,
                });
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                toks.push(Spanned {
                    tok: Tok::Ident(input[start..i].to_string()),
                    offset: start,
                });
            }
            b'+' => {
                toks.push(Spanned { tok: Tok::Plus, offset: i });
                i += 1;
            }
            b'-' => {
                toks.push(Spanned { tok: Tok::Minus, offset: i });
                i += 1;
            }
            b'*' => {
                toks.push(Spanned { tok: Tok::Star, offset: i });
                i += 1;
            }
            b'/' => {
                toks.push(Spanned { tok: Tok::Slash, offset: i });
                i += 1;
            }
            b'^' => {
                toks.push(Spanned { tok: Tok::Caret, offset: i });
                i += 1;
            }
            b'(' => {
                toks.push(Spanned { tok: Tok::LParen, offset: i });
                i += 1;
            }
            b')' => {
                toks.push(Spanned { tok: Tok::RParen, offset: i });
                i += 1;
            }
            _ => {
                return Err(ParseDiagnostic {
                    offset: i,
                    message: format!("unexpected byte {:?}", input[i..].chars().next().unwrap()),
                    expected: Some("digit, variable, operator, or parenthesis".into()),
                })
            }
        }
    }
    Ok(toks)
}

/// Value domain for expression parsing. One implementation produces plain
/// rational polynomials; the number-field layer provides another whose
/// variables include tower generators.
pub trait ExprAlgebra {
    type Value: Clone;
    fn rational(&self, q: Rational) -> Self::Value;
    /// Resolves a variable name; `None` marks it unknown.
    fn variable(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn pow(&self, a: Self::Value, k: u32) -> Self::Value;
}

struct Parser<'a, A: ExprAlgebra> {
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
    algebra: &'a A,
}

impl<'a, A: ExprAlgebra> Parser<'a, A> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|t| t.offset).unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>, expected: &str) -> ParseDiagnostic {
        ParseDiagnostic {
            offset: self.here(),
            message: message.into(),
            expected: Some(expected.to_string()),
        }
    }

    fn poly(&mut self) -> Result<A::Value, ParseDiagnostic> {
        let mut acc = self.term()?;
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.algebra.add(acc, rhs);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.algebra.sub(acc, rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<A::Value, ParseDiagnostic> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = self.algebra.mul(acc, rhs);
                }
                // Implicit multiplication: a following atom starts a factor.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let rhs = self.factor()?;
                    acc = self.algebra.mul(acc, rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<A::Value, ParseDiagnostic> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.err("unexpected end of input", "a factor"));
        };
        match t.tok {
            Tok::Minus => {
                self.bump();
                let inner = self.factor()?;
                Ok(self.algebra.neg(inner))
            }
            Tok::Int(n) => {
                self.bump();
                // Optional "/ positive-integer" completing a rational literal.
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.bump();
                    let at = self.here();
                    match self.bump() {
                        Some(Spanned { tok: Tok::Int(d), .. }) => {
                            if d.is_zero() || d.is_negative() {
                                return Err(ParseDiagnostic {
                                    offset: at,
                                    message: "denominator must be a positive integer".into(),
                                    expected: Some("positive integer".into()),
                                });
                            }
                            Ok(self.algebra.rational(Rational::new(n, d)))
                        }
                        _ => Err(ParseDiagnostic {
                            offset: at,
                            message: "expected denominator after '/'".into(),
                            expected: Some("positive integer".into()),
                        }),
                    }
                } else {
                    Ok(self.algebra.rational(Rational::from_integer(n)))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                let Some(var) = self.algebra.variable(&name) else {
                    return Err(ParseDiagnostic {
                        offset: t.offset,
                        message: format!("unknown variable {name:?}"),
                        expected: Some("X".into()),
                    });
                };
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
                    self.bump();
                    let at = self.here();
                    match self.bump() {
                        Some(Spanned { tok: Tok::Int(e), .. }) => {
                            let exp = u32::try_from(&e).ok().filter(|&e| e <= MAX_EXPONENT);
                            match exp {
                                Some(e) => Ok(self.algebra.pow(var, e)),
                                None => Err(ParseDiagnostic {
                                    offset: at,
                                    message: format!("exponent {e} too large"),
                                    expected: Some(format!("integer in 0..={MAX_EXPONENT}")),
                                }),
                            }
                        }
                        other => Err(ParseDiagnostic {
                            offset: other.map(|s| s.offset).unwrap_or(at),
                            message: "exponent must be a nonnegative integer".into(),
                            expected: Some("nonnegative integer".into()),
                        }),
                    }
                } else {
                    Ok(var)
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                match self.bump() {
                    Some(Spanned { tok: Tok::RParen, .. }) => Ok(inner),
                    other => Err(ParseDiagnostic {
                        offset: other.map(|s| s.offset).unwrap_or(self.end),
                        message: "unbalanced parenthesis".into(),
                        expected: Some(")".into()),
                    }),
                }
            }
            _ => Err(self.err(
                format!("unexpected token at start of factor"),
                "number, variable, '(' or '-'",
            )),
        }
    }
}

/// Parses an expression over the given algebra. The whole input must be
/// consumed.
pub fn parse_expr<A: ExprAlgebra>(input: &str, algebra: &A) -> Result<A::Value, ParseDiagnostic> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.len(),
        algebra,
    };
    if p.peek().is_none() {
        return Err(ParseDiagnostic {
            offset: 0,
            message: "empty input".into(),
            expected: Some("a polynomial expression".into()),
        });
    }
    let v = p.poly()?;
    if let Some(t) = p.peek() {
        return Err(ParseDiagnostic {
            offset: t.offset,
            message: "trailing input after expression".into(),
            expected: None,
        });
    }
    Ok(v)
}

/// Algebra producing plain rational polynomials in the single variable X.
pub struct PolyAlgebra;

impl ExprAlgebra for PolyAlgebra {
    type Value = Polynomial;
    fn rational(&self, q: Rational) -> Polynomial {
        Polynomial::constant(q)
    }
    fn variable(&self, name: &str) -> Option<Polynomial> {
        match name {
            "X" | "x" => Some(Polynomial::x()),
            _ => None,
        }
    }
    fn add(&self, a: Polynomial, b: Polynomial) -> Polynomial {
        a + b
    }
    fn sub(&self, a: Polynomial, b: Polynomial) -> Polynomial {
        a - b
    }
    fn mul(&self, a: Polynomial, b: Polynomial) -> Polynomial {
        a * b
    }
    fn neg(&self, a: Polynomial) -> Polynomial {
        -a
    }
    fn pow(&self, a: Polynomial, k: u32) -> Polynomial {
        a.pow(k)
    }
}

/// Parses a polynomial in X with rational coefficients.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseDiagnostic> {
    parse_expr(input, &PolyAlgebra)
}

/// Parses a standalone rational number ("-3", "5/2", ...), allowing the
/// full expression grammar as long as the result is constant.
pub fn parse_rational(input: &str) -> Result<Rational, ParseDiagnostic> {
    let p = parse_polynomial(input)?;
    if p.is_constant() {
        Ok(p.constant_coeff())
    } else {
        Err(ParseDiagnostic {
            offset: 0,
            message: "expected a rational constant, found a polynomial".into(),
            expected: Some("rational".into()),
        })
    }
}

/// Canonical descending-degree rendering; `parse . format` is the identity.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let deg = f.degree().unwrap();
    let mut first = true;
    for k in (0..=deg).rev() {
        let c = f.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_is_one = mag.is_one();
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !coeff_is_one {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            if k == 1 {
                out.push('X');
            } else {
                out.push_str(&format!("X^{k}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};

    #[test]
    fn parses_quintic_example() {
        let f = parse_polynomial("X^5 - 4X - 2").unwrap();
        assert_eq!(
            f.coeffs().to_vec(),
            vec![rat_int(-2), rat_int(-4), rat_int(0), rat_int(0), rat_int(0), rat_int(1)]
        );
    }

    #[test]
    fn parses_zero() {
        assert!(parse_polynomial("0").unwrap().is_zero());
    }

    #[test]
    fn expands_products() {
        let f = parse_polynomial("(X-1)*(X+1)").unwrap();
        assert_eq!(f, parse_polynomial("X^2-1").unwrap());
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(
            parse_polynomial("4X").unwrap(),
            parse_polynomial("4*X").unwrap()
        );
        assert_eq!(
            parse_polynomial("2(X+1)").unwrap(),
            parse_polynomial("2*X+2").unwrap()
        );
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_polynomial("1/2 X^2 - 3/4").unwrap();
        assert_eq!(f.coeff(2), rat(1, 2));
        assert_eq!(f.coeff(0), rat(-3, 4));
    }

    #[test]
    fn rejects_negative_exponent() {
        let e = parse_polynomial("X^-2").unwrap_err();
        assert!(e.message.contains("exponent"));
        assert!(e.offset <= "X^-2".len());
    }

    #[test]
    fn rejects_unknown_variable() {
        let e = parse_polynomial("X + Y").unwrap_err();
        assert!(e.message.contains("unknown variable"));
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_polynomial("1/0").is_err());
    }

    #[test]
    fn format_canonical_quintic() {
        let f = parse_polynomial("X^5-4X-2").unwrap();
        assert_eq!(format_polynomial(&f), "X^5 - 4*X - 2");
        assert_eq!(format_polynomial(&Polynomial::zero()), "0");
    }

    #[test]
    fn format_handles_unit_and_fractional_coeffs() {
        let f = parse_polynomial("-X^3 + 3/2*X - 1").unwrap();
        assert_eq!(format_polynomial(&f), "-X^3 + 3/2*X - 1");
        let g = parse_polynomial(&format_polynomial(&f)).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn error_offsets_inside_input() {
        for bad in ["", "(", "X +", "3//4", "^2", "X^", "((X)"] {
            if let Err(e) = parse_polynomial(bad) {
                assert!(e.offset <= bad.len(), "offset out of range for {bad:?}");
            } else if bad.is_empty() {
                panic!("empty input must fail");
            }
        }
    }
}
