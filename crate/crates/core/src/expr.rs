//! Text syntax for rational functions in `z`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := atom ("^" integer)?
//! atom    := integer | "z" | "(" sum ")"
//! ```
//!
//! The formatter emits integer coefficients in decreasing degree and always
//! parses back to the same canonical value.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::RationalScalar;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("division by zero at {position}")]
    ZeroDenominator { position: usize },
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Integer(BigInt),
    Variable,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Quotient; the position of the `/` is kept for error reporting.
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

impl Expr {
    pub fn evaluate(&self) -> Result<RationalFunction, ExprError> {
        Ok(match self {
            Expr::Integer(n) => RationalFunction::constant(RationalScalar::from_integer(n.clone())),
            Expr::Variable => RationalFunction::z(),
            Expr::Neg(e) => -e.evaluate()?,
            Expr::Add(a, b) => a.evaluate()? + b.evaluate()?,
            Expr::Sub(a, b) => a.evaluate()? - b.evaluate()?,
            Expr::Mul(a, b) => a.evaluate()? * b.evaluate()?,
            Expr::Div(a, b, position) => {
                a.evaluate()?.checked_div(&b.evaluate()?).map_err(|_| {
                    ExprError::ZeroDenominator {
                        position: *position,
                    }
                })?
            }
            Expr::Pow(e, k) => e.evaluate()?.pow(*k),
            Expr::Group(e) => e.evaluate()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ExprError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("ascii digits");
                tokens.push((Token::Int(n), start));
                continue;
            }
            b'z' => Token::Z,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(ExprError::Syntax {
                    position: i,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        tokens.push((tok, i));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exponent = match self.peek() {
            Some(Token::Int(n)) => match u32::try_from(n) {
                Ok(k) if k <= MAX_EXPONENT => k,
                _ => return self.error(format!("exponent must be at most {MAX_EXPONENT}")),
            },
            _ => return self.error("expected a nonnegative integer exponent"),
        };
        self.pos += 1;
        if self.peek() == Some(&Token::Caret) {
            return self.error("chained exponents need parentheses");
        }
        Ok(Expr::Pow(Box::new(base), exponent))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Integer(n))
            }
            Some(Token::Z) => {
                self.pos += 1;
                Ok(Expr::Variable)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected ')'");
                }
                self.pos += 1;
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(_) => self.error("expected a number, 'z' or '('"),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse_expression(input: &str) -> Result<Expr, ExprError> {
    let mut parser = Parser {
        tokens: tokenize(input)?,
        pos: 0,
        end: input.len(),
    };
    let expr = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("unexpected trailing input");
    }
    Ok(expr)
}

/// Parses and evaluates text to a reduced rational function.
pub fn parse_rational_expression(input: &str) -> Result<RationalFunction, ExprError> {
    parse_expression(input)?.evaluate()
}

fn format_integer_poly(coeffs: &[BigInt]) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if terms == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        terms += 1;
        match (k, magnitude.is_one()) {
            (0, _) => out.push_str(&magnitude.to_string()),
            (_, true) => {}
            (_, false) => {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
        }
        match k {
            0 => {}
            1 => out.push('z'),
            _ => {
                out.push_str("z^");
                out.push_str(&k.to_string());
            }
        }
    }
    if terms == 0 {
        out.push('0');
    }
    (out, terms)
}

fn is_bare_factor(coeffs: &[BigInt], terms: usize) -> bool {
    // A single term with no coefficient multiplication (a constant, z^k or -z^k).
    if terms != 1 {
        return false;
    }
    let (k, c) = coeffs
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| !c.is_zero())
        .expect("one term");
    k == 0 || c.abs().is_one()
}

pub fn format_polynomial(p: &Polynomial) -> String {
    format_rational(&RationalFunction::from_polynomial(p.clone()))
}

/// Deterministic rendering with integer coefficients, e.g. `(z^3 + 6)/z^2`.
pub fn format_rational(f: &RationalFunction) -> String {
    let (num, num_den) = f.numerator().integer_parts();
    let (den, den_den) = f.denominator().integer_parts();
    // num/num_den over den/den_den  ==  (num * den_den) / (den * num_den)
    let mut top: Vec<BigInt> = num.iter().map(|c| c * &den_den).collect();
    let mut bottom: Vec<BigInt> = den.iter().map(|c| c * &num_den).collect();
    let g = top
        .iter()
        .chain(bottom.iter())
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        top.iter_mut().for_each(|c| *c /= &g);
        bottom.iter_mut().for_each(|c| *c /= &g);
    }
    let (top_text, top_terms) = format_integer_poly(&top);
    if bottom.len() == 1 && bottom[0].is_one() {
        return top_text;
    }
    let (bottom_text, bottom_terms) = format_integer_poly(&bottom);
    let top_text = if top_terms > 1 {
        format!("({top_text})")
    } else {
        top_text
    };
    let bottom_text =
        if is_bare_factor(&bottom, bottom_terms) && !bottom[bottom.len() - 1].is_negative() {
            bottom_text
        } else {
            format!("({bottom_text})")
        };
    format!("{top_text}/{bottom_text}")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Integer(n) => write!(f, "{n}"),
            Expr::Variable => f.write_str("z"),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) => write!(f, "{a} - {b}"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b, _) => write!(f, "{a}/{b}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn parses_potential_and_solutions() {
        let r = parse_rational_expression("6/z^2 + z").unwrap();
        assert_eq!(
            r,
            RationalFunction::new(p(&[6, 0, 0, 1]), p(&[0, 0, 1])).unwrap()
        );
        let w2 = parse_rational_expression("1/z - 3*z^2/(z^3 + 4)").unwrap();
        assert_eq!(
            w2,
            RationalFunction::new(p(&[4, 0, 0, -2]), p(&[0, 4, 0, 0, 1])).unwrap()
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let e = |s: &str| parse_rational_expression(s).unwrap();
        assert_eq!(e("-z^2"), e("-(z^2)"));
        assert_eq!(e("1 - 2 - 3"), e("-4"));
        assert_eq!(e("12/2/3"), e("2"));
        assert_eq!(e("2*-z"), e("-2*z"));
        assert_eq!(e("(1 + z)^2"), e("z^2 + 2*z + 1"));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_rational_expression("z/(z - z)"),
            Err(ExprError::ZeroDenominator { position: 1 })
        );
        assert!(matches!(
            parse_rational_expression("z + "),
            Err(ExprError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_rational_expression("z $ 2"),
            Err(ExprError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_rational_expression("z^-1"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_rational_expression("(z"),
            Err(ExprError::Syntax { .. })
        ));
        assert!(matches!(
            parse_rational_expression("z^2^3"),
            Err(ExprError::Syntax { .. })
        ));
    }

    #[test]
    fn formatting() {
        let e = |s: &str| parse_rational_expression(s).unwrap();
        assert_eq!(format_rational(&e("-1/z")), "-1/z");
        assert_eq!(format_rational(&RationalFunction::zero()), "0");
        assert_eq!(format_rational(&e("6/z^2 + z")), "(z^3 + 6)/z^2");
        assert_eq!(
            format_polynomial(&p(&[-80, 0, 0, 20, 0, 0, 1])),
            "z^6 + 20*z^3 - 80"
        );
        assert_eq!(format_rational(&e("z^2/2")), "z^2/2");
        assert_eq!(format_rational(&e("z^2/8 - 1/z")), "(z^3 - 8)/(8*z)");
        assert_eq!(format_rational(&e("3/(2*z - 2)")), "3/(2*z - 2)");
        assert_eq!(format_rational(&e("-1/2")), "-1/2");
    }
}
