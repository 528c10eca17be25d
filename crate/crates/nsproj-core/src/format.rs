//! Canonical text form for series: `1 - 3/2*eps + eps^2`, exact rationals
//! only, exponents ascending. `Display` and `FromStr` round-trip bit-exactly.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::field::{ComplexRational, HyperNumber, Rational, Term};

/// Formats a standard complex rational the same way series coefficients are
/// formatted (`3/2`, `-i`, `2 + 1/3*i`).
pub struct ComplexRationalDisplay<'a>(pub &'a ComplexRational);

impl fmt::Display for ComplexRationalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        if c.im.is_zero() {
            return write!(f, "{}", c.re);
        }
        if c.re.is_zero() {
            return write_imaginary(f, &c.im);
        }
        write!(f, "{} ", c.re)?;
        if c.im.is_negative() {
            write!(f, "- ")?;
        } else {
            write!(f, "+ ")?;
        }
        write_imaginary(f, &c.im.abs())
    }
}

fn write_imaginary(f: &mut fmt::Formatter<'_>, im: &Rational) -> fmt::Result {
    if im.abs().is_one() {
        if im.is_negative() {
            write!(f, "-i")
        } else {
            write!(f, "i")
        }
    } else {
        write!(f, "{}*i", im)
    }
}

/// True when the term should be rendered behind a minus sign with its
/// coefficient negated.
fn carries_minus(t: &Term) -> bool {
    let c = &t.coefficient;
    (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
}

fn write_eps(f: &mut fmt::Formatter<'_>, exponent: &Rational) -> fmt::Result {
    if exponent.is_one() {
        return write!(f, "eps");
    }
    if exponent.is_integer() && exponent.is_positive() {
        return write!(f, "eps^{}", exponent);
    }
    write!(f, "eps^({})", exponent)
}

fn write_term_body(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    let c = &t.coefficient;
    let with_eps = !t.exponent.is_zero();
    if c.im.is_zero() {
        let re = c.re.abs();
        if !with_eps {
            return write!(f, "{}", re);
        }
        if !re.is_one() {
            write!(f, "{}*", re)?;
        }
        return write_eps(f, &t.exponent);
    }
    if c.re.is_zero() {
        let im = c.im.abs();
        if im.is_one() {
            write!(f, "i")?;
        } else {
            write!(f, "{}*i", im)?;
        }
        if with_eps {
            write!(f, "*")?;
            write_eps(f, &t.exponent)?;
        }
        return Ok(());
    }
    write!(f, "({})", ComplexRationalDisplay(c))?;
    if with_eps {
        write!(f, "*")?;
        write_eps(f, &t.exponent)?;
    }
    Ok(())
}

impl fmt::Display for HyperNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in terms.iter().enumerate() {
            let minus = carries_minus(t);
            if k == 0 {
                if minus {
                    write!(f, "-")?;
                }
            } else if minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let shown = if minus {
                Term {
                    exponent: t.exponent.clone(),
                    coefficient: -t.coefficient.clone(),
                }
            } else {
                t.clone()
            };
            write_term_body(f, &shown)?;
        }
        Ok(())
    }
}

/// Error from parsing the canonical series form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseSeriesError {
    pub position: usize,
    pub message: &'static str,
}

impl fmt::Display for ParseSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.position)
    }
}

impl core::error::Error for ParseSeriesError {}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: &'static str) -> ParseSeriesError {
        ParseSeriesError {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, message: &'static str) -> Result<(), ParseSeriesError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(message))
        }
    }

    fn at_word(&self, word: &str) -> bool {
        let w = word.as_bytes();
        if self.bytes.len() < self.pos + w.len() || &self.bytes[self.pos..self.pos + w.len()] != w {
            return false;
        }
        match self.bytes.get(self.pos + w.len()) {
            Some(c) => !(c.is_ascii_alphanumeric() || *c == b'_'),
            None => true,
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        if self.at_word(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseSeriesError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn parse_rational(&mut self) -> Result<Rational, ParseSeriesError> {
        let numer = self.parse_uint()?;
        if self.eat(b'/') {
            let denom = self.parse_uint()?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn parse_signed_rational(&mut self) -> Result<Rational, ParseSeriesError> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let r = self.parse_rational()?;
        Ok(if neg { -r } else { r })
    }

    /// `eps` with optional `^exp`; returns the exponent.
    fn parse_eps(&mut self) -> Result<Rational, ParseSeriesError> {
        if !self.eat_word("eps") {
            return Err(self.err("expected eps"));
        }
        if !self.eat(b'^') {
            return Ok(Rational::one());
        }
        if self.eat(b'(') {
            self.skip_ws();
            let e = self.parse_signed_rational()?;
            self.skip_ws();
            self.expect(b')', "expected ')' after exponent")?;
            Ok(e)
        } else {
            let neg = self.eat(b'-');
            let e = self.parse_rational()?;
            Ok(if neg { -e } else { e })
        }
    }

    /// Parenthesized complex coefficient: `(re + im*i)` forms.
    fn parse_complex_coeff(&mut self) -> Result<ComplexRational, ParseSeriesError> {
        self.skip_ws();
        let re = self.parse_signed_rational()?;
        self.skip_ws();
        let neg = if self.eat(b'-') {
            true
        } else if self.eat(b'+') {
            false
        } else {
            return Err(self.err("expected '+' or '-' in complex coefficient"));
        };
        self.skip_ws();
        let im_mag = if self.eat_word("i") {
            Rational::one()
        } else {
            let m = self.parse_rational()?;
            self.skip_ws();
            self.expect(b'*', "expected '*' before i")?;
            self.skip_ws();
            if !self.eat_word("i") {
                return Err(self.err("expected i"));
            }
            m
        };
        self.skip_ws();
        self.expect(b')', "expected ')'")?;
        let im = if neg { -im_mag } else { im_mag };
        Ok(ComplexRational::new(re, im))
    }

    /// One term without its leading sign: `(exponent, coefficient)`.
    fn parse_term(&mut self) -> Result<(Rational, ComplexRational), ParseSeriesError> {
        if self.eat(b'(') {
            let coeff = self.parse_complex_coeff()?;
            if self.eat(b'*') {
                let exp = self.parse_eps()?;
                return Ok((exp, coeff));
            }
            return Ok((Rational::zero(), coeff));
        }
        if self.at_word("i") {
            self.eat_word("i");
            if self.eat(b'*') {
                let exp = self.parse_eps()?;
                return Ok((exp, ComplexRational::i()));
            }
            return Ok((Rational::zero(), ComplexRational::i()));
        }
        if self.at_word("eps") {
            let exp = self.parse_eps()?;
            return Ok((exp, ComplexRational::one()));
        }
        let mag = self.parse_rational()?;
        if self.eat(b'*') {
            if self.at_word("i") {
                self.eat_word("i");
                let coeff = ComplexRational::new(Rational::zero(), mag);
                if self.eat(b'*') {
                    let exp = self.parse_eps()?;
                    return Ok((exp, coeff));
                }
                return Ok((Rational::zero(), coeff));
            }
            let exp = self.parse_eps()?;
            return Ok((exp, ComplexRational::from(mag)));
        }
        Ok((Rational::zero(), ComplexRational::from(mag)))
    }
}

impl FromStr for HyperNumber {
    type Err = ParseSeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        sc.skip_ws();
        if sc.peek().is_none() {
            return Err(sc.err("empty input"));
        }
        let mut terms: Vec<(Rational, ComplexRational)> = Vec::new();
        let mut negate = sc.eat(b'-');
        loop {
            sc.skip_ws();
            let (exp, coeff) = sc.parse_term()?;
            terms.push((exp, if negate { -coeff } else { coeff }));
            sc.skip_ws();
            match sc.peek() {
                None => break,
                Some(b'+') => {
                    sc.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    sc.pos += 1;
                    negate = true;
                }
                Some(_) => return Err(sc.err("unexpected trailing input")),
            }
        }
        Ok(HyperNumber::from_terms(terms))
    }
}

/// Convenience for building a series from its canonical text in tests and
/// tools; panics on malformed input.
impl HyperNumber {
    pub fn parse(s: &str) -> Result<Self, ParseSeriesError> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    #[test]
    fn prints_canonical_examples() {
        let x = HyperNumber::parse("1 - 3/2*eps + eps^2").unwrap();
        assert_eq!(x.to_string(), "1 - 3/2*eps + eps^2");
        assert_eq!(HyperNumber::zero().to_string(), "0");
        assert_eq!(HyperNumber::epsilon().neg().to_string(), "-eps");
        assert_eq!(
            HyperNumber::epsilon_pow(Rational::new(BigInt::from(-1), BigInt::from(1)))
                .to_string(),
            "eps^(-1)"
        );
        assert_eq!(
            HyperNumber::epsilon_pow(Rational::new(BigInt::from(1), BigInt::from(2)))
                .to_string(),
            "eps^(1/2)"
        );
        assert_eq!(HyperNumber::imaginary().to_string(), "i");
        assert_eq!(HyperNumber::imaginary().neg().to_string(), "-i");
        let mixed = HyperNumber::from_complex(ComplexRational::new(
            Rational::from_integer(BigInt::from(2)),
            -Rational::one(),
        ));
        assert_eq!(mixed.to_string(), "(2 - i)");
    }

    #[test]
    fn parses_what_it_prints() {
        for s in [
            "0",
            "1",
            "-5/4",
            "eps",
            "-eps",
            "3*i",
            "-i*eps",
            "eps^(-2)",
            "2*eps^(5/3)",
            "1 - 3/2*eps + eps^2",
            "(1 + i)*eps + (2 - 3/4*i)*eps^2",
            "eps^(-1) + 1 + eps",
        ] {
            let x = HyperNumber::parse(s).unwrap();
            let printed = format!("{}", x);
            let back = HyperNumber::parse(&printed).unwrap();
            assert_eq!(x, back, "round-trip through {printed:?}");
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(HyperNumber::parse("").is_err());
        assert!(HyperNumber::parse("1 +").is_err());
        assert!(HyperNumber::parse("eps^").is_err());
        assert!(HyperNumber::parse("1/0").is_err());
        assert!(HyperNumber::parse("foo").is_err());
        assert!(HyperNumber::parse("1 2").is_err());
    }
}
