//! Text input formats: polynomial expressions, sign patterns, coefficient
//! lists and monomial generators.
//!
//! Polynomial grammar (whitespace insignificant):
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff? ('*'? 'x' ('^' uint)?)?      -- non-empty
//! coeff := uint | uint '/' uint
//! ```

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::intpoly::{Polynomial, Rational, Sign, SignPattern};

/// Largest accepted exponent; coefficients are stored densely.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Option<(usize, BigInt)> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some((start, digits.parse().expect("ascii digits")))
    }

    fn expect_uint(&mut self, what: &str) -> Result<(usize, BigInt), ParseError> {
        let offset = self.offset_here();
        self.uint()
            .ok_or_else(|| syntax(offset, format!("expected {what}")))
    }

    fn offset_here(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let mut s = Scanner::new(text);
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut negative = if s.eat(b'-') {
        true
    } else {
        s.eat(b'+');
        false
    };
    loop {
        let (coeff, power) = parse_term(&mut s)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += if negative { -coeff } else { coeff };
        if s.at_end() {
            break;
        }
        let offset = s.offset_here();
        negative = if s.eat(b'+') {
            false
        } else if s.eat(b'-') {
            true
        } else {
            return Err(syntax(offset, "expected '+', '-' or end of input"));
        };
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

fn parse_term(s: &mut Scanner<'_>) -> Result<(Rational, usize), ParseError> {
    let start = s.offset_here();
    let coeff = match s.uint() {
        Some((_, num)) => {
            if s.eat(b'/') {
                let (offset, den) = s.expect_uint("denominator")?;
                if den.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset });
                }
                Some(Rational::new(num, den))
            } else {
                Some(Rational::from_integer(num))
            }
        }
        None => None,
    };
    let star_offset = s.offset_here();
    let star = s.eat(b'*');
    if star && coeff.is_none() {
        return Err(syntax(star_offset, "'*' without a coefficient"));
    }
    let has_x = s.eat(b'x');
    if star && !has_x {
        return Err(syntax(s.offset_here(), "expected 'x' after '*'"));
    }
    if coeff.is_none() && !has_x {
        return Err(syntax(start, "expected a term"));
    }
    let mut power = 0;
    if has_x {
        power = 1;
        if s.eat(b'^') {
            let (offset, e) = s.expect_uint("exponent")?;
            power = usize::try_from(&e)
                .ok()
                .filter(|&p| p <= MAX_EXPONENT)
                .ok_or_else(|| syntax(offset, format!("exponent exceeds {MAX_EXPONENT}")))?;
        }
    }
    Ok((
        coeff.unwrap_or_else(|| Rational::from_integer(1.into())),
        power,
    ))
}

/// Comma-separated `-1`/`0`/`1`, `a_0` first. Empty input is the empty pattern.
pub fn parse_pattern(text: &str) -> Result<SignPattern, ParseError> {
    if text.trim().is_empty() {
        return Ok(SignPattern::new(Vec::new()));
    }
    parse_integer_list(text)?
        .into_iter()
        .map(|(offset, v)| {
            i64::try_from(&v)
                .ok()
                .and_then(Sign::from_value)
                .ok_or_else(|| syntax(offset, format!("sign must be -1, 0 or 1, got {v}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(SignPattern::new)
}

/// Comma-separated integers.
pub fn parse_coeffs(text: &str) -> Result<Vec<BigInt>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_integer_list(text)?
        .into_iter()
        .map(|(_, v)| v)
        .collect())
}

fn parse_integer_list(text: &str) -> Result<Vec<(usize, BigInt)>, ParseError> {
    let mut s = Scanner::new(text);
    let mut out = Vec::new();
    loop {
        let offset = s.offset_here();
        let negative = s.eat(b'-');
        if !negative {
            s.eat(b'+');
        }
        let (_, v) = s.expect_uint("integer")?;
        out.push((offset, if negative { -v } else { v }));
        if s.at_end() {
            return Ok(out);
        }
        let offset = s.offset_here();
        if !s.eat(b',') {
            return Err(syntax(offset, "expected ','"));
        }
    }
}

/// Generators like `x1^2, x1*x2` over variables `x1..x{n_vars}`, as exponent
/// vectors. Empty input means no generators.
pub fn parse_generators(text: &str, n_vars: usize) -> Result<Vec<Vec<u32>>, ParseError> {
    let mut s = Scanner::new(text);
    let mut gens = Vec::new();
    if s.at_end() {
        return Ok(gens);
    }
    loop {
        let mut exps = vec![0u32; n_vars];
        loop {
            let offset = s.offset_here();
            if !s.eat(b'x') {
                return Err(syntax(offset, "expected a variable x1..xn"));
            }
            let (voff, v) = s.expect_uint("variable index")?;
            let var = usize::try_from(&v)
                .ok()
                .filter(|&v| (1..=n_vars).contains(&v))
                .ok_or_else(|| syntax(voff, format!("variable index must be in 1..={n_vars}")))?;
            let mut e = 1u32;
            if s.eat(b'^') {
                let (eoff, big) = s.expect_uint("exponent")?;
                e = u32::try_from(&big)
                    .ok()
                    .filter(|&e| e as usize <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(eoff, format!("exponent exceeds {MAX_EXPONENT}")))?;
            }
            exps[var - 1] += e;
            if !s.eat(b'*') {
                break;
            }
        }
        gens.push(exps);
        if s.at_end() {
            return Ok(gens);
        }
        let offset = s.offset_here();
        if !s.eat(b',') {
            return Err(syntax(offset, "expected ',' or '*'"));
        }
    }
}
