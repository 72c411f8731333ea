//! Text form of polynomials.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary ("*" unary)*
//! unary   := ("+" | "-") unary | power
//! power   := atom ("^" INT)?
//! atom    := NUMBER | VAR | "(" expr ")"
//! NUMBER  := DIGITS ("/" DIGITS | "." DIGITS)?
//! VAR     := "x" DIGITS        (index >= 1)
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2x1`) is rejected.

use num_bigint::BigInt;

use crate::error::{ParseError, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(u32),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn tokenize(text: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                advance(1, &mut i, &mut col);
                continue;
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Spanned { tok, line: l0, column: c0 });
                advance(1, &mut i, &mut col);
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let int: String = chars[start..i].iter().collect();
                let value = match chars.get(i) {
                    Some('/') | Some('.') => {
                        let sep = chars[i];
                        let fstart = i + 1;
                        let mut j = fstart;
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                        if j == fstart {
                            return err(l0, c0 + (i - start), format!("expected digits after '{sep}'"));
                        }
                        let frac: String = chars[fstart..j].iter().collect();
                        i = j;
                        let parsed: std::result::Result<Rational, _> =
                            format!("{int}{sep}{frac}").parse::<Rational>();
                        match parsed {
                            Ok(r) => r,
                            Err(_) => return err(l0, c0, "zero denominator in rational literal"),
                        }
                    }
                    _ => Rational::from(int.parse::<BigInt>().expect("digits")),
                };
                col += i - start;
                out.push(Spanned { tok: Tok::Num(value), line: l0, column: c0 });
            }
            'x' => {
                let start = i;
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == dstart {
                    return err(l0, c0, "variable needs an index, e.g. x1");
                }
                let idx: String = chars[dstart..i].iter().collect();
                let idx: u32 = match idx.parse() {
                    Ok(v) if v >= 1 => v,
                    _ => return err(l0, c0, format!("invalid variable index '{idx}'")),
                };
                col += i - start;
                out.push(Spanned { tok: Tok::Var(idx), line: l0, column: c0 });
            }
            other => return err(l0, c0, format!("unknown token '{other}'")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |s| (s.line, s.column))
    }

    fn fail<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        let (l, c) = self.here();
        err(l, c, message)
    }

    fn expr(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    return self.fail("implicit multiplication is not allowed; use '*'");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => match r.to_i64() {
                Some(e) if e <= u32::MAX as i64 => e as u32,
                _ => return self.fail("exponent too large"),
            },
            Some(Tok::Minus) => return self.fail("exponent must be a nonnegative integer literal (negative exponent)"),
            _ => return self.fail("exponent must be a nonnegative integer literal"),
        };
        self.pos += 1;
        if self.peek() == Some(&Tok::Caret) {
            return self.fail("chained exponents are ambiguous; add parentheses");
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> std::result::Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Polynomial::constant(r))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Polynomial::var(v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.fail("expected a number, variable or '('"),
            None => self.fail("unexpected end of input"),
        }
    }
}

/// Parses the text form of a polynomial.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let end = {
        let lines: Vec<&str> = text.split('\n').collect();
        (lines.len(), lines.last().map_or(0, |l| l.chars().count()) + 1)
    };
    let mut p = Parser { toks, pos: 0, end };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        let msg = format!("unexpected token {:?}", p.toks[p.pos].tok);
        return Err(p.fail::<()>(msg).unwrap_err().into());
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::x;
    use crate::rat;
    use proptest::prelude::*;

    fn parse_err(text: &str) -> ParseError {
        match parse_polynomial(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn spec_examples() {
        let p = parse_polynomial("-x1^2 - 4*x1 - 1").unwrap();
        let expected = &(&(-&x(1).pow(2)) - &x(1).scale(&rat!(4))) - &Polynomial::one();
        assert_eq!(p, expected);
        assert!(parse_polynomial("0").unwrap().is_zero());
        let e = parse_err("x1^-1");
        assert!(e.message.contains("negative exponent"), "{}", e.message);
        assert_eq!((e.line, e.column), (1, 4));
    }

    #[test]
    fn grammar_coverage() {
        assert_eq!(parse_polynomial(" ( x1 + 1 ) ^ 2 ").unwrap(), (&x(1) + &Polynomial::one()).pow(2));
        assert_eq!(parse_polynomial("3/6*x2").unwrap(), x(2).scale(&rat!(1, 2)));
        assert_eq!(parse_polynomial("0.25").unwrap(), Polynomial::constant(rat!(1, 4)));
        assert_eq!(parse_polynomial("--x1").unwrap(), x(1));
        assert_eq!(parse_polynomial("x12").unwrap(), x(12));
    }

    #[test]
    fn error_positions() {
        let e = parse_err("x1 +\n  2x1");
        assert_eq!((e.line, e.column), (2, 4));
        assert!(e.message.contains("implicit"));
        let e = parse_err("x1 + y");
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.message.contains("unknown token"));
        let e = parse_err("(x1 + 1");
        assert!(e.message.contains("')'"));
        let e = parse_err("x0");
        assert!(e.message.contains("index"));
        let e = parse_err("1/0");
        assert!(e.message.contains("zero denominator"));
        let e = parse_err("x1^1/2");
        assert!(e.message.contains("nonnegative integer"));
        let e = parse_err("");
        assert!(e.message.contains("end of input"));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let term = (-9i64..=9, 1i64..=6, prop::collection::vec((1u32..=4, 0u32..=6), 0..4))
            .prop_map(|(n, d, vars)| {
                Polynomial::term(rat!(n, d), crate::poly::Monomial::from_powers(vars))
            });
        prop::collection::vec(term, 0..8).prop_map(|ts| ts.into_iter().sum())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = p.to_string();
            let back = parse_polynomial(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
