//! Parser and renderer for algebra expressions.
//!
//! Grammar (whitespace separates juxtaposed factors):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor+
//! factor := atom ['^' int] ["'"]
//! atom   := 'z1'..'z4' | 'a' | 'b' | 'R' | 'q' | rational | '(' expr ')'
//! ```
//!
//! The postfix apostrophe is the adjoint. Rendered output uses the same
//! grammar, so parse -> render -> parse is a fixed point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::scalar::{QLaurent, QRational};

use super::element::Element;
use super::monomial::NormalMonomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("negative power of a non-scalar element at position {pos}")]
    NonInvertiblePower { pos: usize },
}

/// Named abbreviations handled by the parser (`a`, `b`, `R`, ...).
pub type Macros = BTreeMap<String, Element>;

pub fn parse(text: &str) -> Result<Element, ParseError> {
    parse_with_macros(text, &Macros::new())
}

pub fn parse_with_macros(text: &str, macros: &Macros) -> Result<Element, ParseError> {
    let mut p = Parser { input: text.as_bytes(), pos: 0, macros };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    macros: &'a Macros,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if matches!(c, b'+' | b'-' | b')') {
                break;
            }
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element, ParseError> {
        let mut e = self.atom()?;
        // postfix exponents and adjoint marks, in any order
        loop {
            match self.peek() {
                Some(b'^') => {
                    self.pos += 1;
                    let at = self.pos;
                    let exp = self.integer()?;
                    e = self.power(e, exp, at)?;
                }
                Some(b'\'') => {
                    self.pos += 1;
                    e = e.adjoint();
                }
                _ => return Ok(e),
            }
        }
    }

    fn power(&self, base: Element, exp: i64, at: usize) -> Result<Element, ParseError> {
        if exp.unsigned_abs() > 64 {
            return Err(ParseError::ExponentOverflow { pos: at });
        }
        if exp >= 0 {
            let mut acc = Element::one();
            for _ in 0..exp {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        // Negative powers only make sense for invertible scalars.
        let c = base.constant_coeff();
        if base.num_terms() > 1 || c.is_zero() || base.is_zero() {
            return Err(ParseError::NonInvertiblePower { pos: at });
        }
        let inv = c.inverse().map_err(|_| ParseError::NonInvertiblePower { pos: at })?;
        let mut acc = QRational::one();
        for _ in 0..(-exp) {
            acc = acc.mul(&inv);
        }
        Ok(Element::scalar(acc))
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'z') => {
                self.pos += 1;
                let d = self.input.get(self.pos).copied().unwrap_or(0);
                if !(b'1'..=b'4').contains(&d) {
                    return Err(self.err("expected generator index 1..4 after 'z'"));
                }
                self.pos += 1;
                Ok(Element::generator(d - b'0'))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Element::scalar(QRational::q_power(1)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(ParseError::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(Element::scalar(QRational::from_rational(BigRational::new(
                        BigInt::from(n),
                        BigInt::from(d),
                    ))))
                } else {
                    Ok(Element::scalar(QRational::from_integer(n)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                match self.macros.get(name) {
                    Some(e) => Ok(e.clone()),
                    None => Err(ParseError::Syntax {
                        pos: start,
                        msg: format!("unknown symbol '{}'", name),
                    }),
                }
            }
            _ => Err(self.err("expected an atom")),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = if self.input.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits_start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.input[digits_start..self.pos]).unwrap();
        let v: i64 = s
            .parse()
            .map_err(|_| ParseError::ExponentOverflow { pos: start })?;
        Ok(if neg { -v } else { v })
    }
}

/// Renders an element back into the expression grammar.
pub fn render(e: &Element) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in e.terms().enumerate() {
        let neg = coeff_is_negative(c);
        let mag = if neg { c.neg() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push_str("- ");
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_str = render_coeff(&mag);
        let mono_str = render_monomial(m);
        match (coeff_str.as_str(), mono_str.as_str()) {
            ("", "") => out.push('1'),
            ("", _) => out.push_str(&mono_str),
            (_, "") => out.push_str(&coeff_str),
            _ => {
                out.push_str(&coeff_str);
                out.push(' ');
                out.push_str(&mono_str);
            }
        }
    }
    out
}

fn coeff_is_negative(c: &QRational) -> bool {
    c.numerator().lowest_coeff().map(|x| x.is_negative()).unwrap_or(false)
}

/// Renders a "positive" coefficient as a product of grammar atoms:
/// rational, q-power, and parenthesized polynomials (denominator with `^-1`).
/// Returns the empty string for the coefficient 1.
fn render_coeff(c: &QRational) -> String {
    let mut parts: Vec<String> = Vec::new();
    let num = c.numerator();
    if num.is_monomial() {
        let e = num.min_exp().unwrap();
        let r = num.coeff(e);
        if !r.is_one() {
            parts.push(render_rational(&r));
        }
        if e != 0 {
            parts.push(format!("q^{}", e));
        }
    } else {
        parts.push(format!("({})", render_poly(num)));
    }
    let den = c.denominator();
    if !den.is_one() {
        parts.push(format!("({})^-1", render_poly(den)));
    }
    parts.join(" ")
}

fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_poly(p: &QLaurent) -> String {
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push_str("- ");
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_r = !mag.is_one() || *e == 0;
        if show_r {
            out.push_str(&render_rational(&mag));
        }
        if *e != 0 {
            if show_r {
                out.push(' ');
            }
            if *e == 1 {
                out.push('q');
            } else {
                out.push_str(&format!("q^{}", e));
            }
        }
    }
    out
}

fn render_monomial(m: &NormalMonomial) -> String {
    if m.is_unit() {
        return String::new();
    }
    let mut parts: Vec<String> = Vec::new();
    for i in (0..4).rev() {
        match m.star[i] {
            0 => {}
            1 => parts.push(format!("z{}'", i + 1)),
            k => parts.push(format!("z{}^{}'", i + 1, k)),
        }
    }
    for i in 0..4 {
        match m.unstar[i] {
            0 => {}
            1 => parts.push(format!("z{}", i + 1)),
            k => parts.push(format!("z{}^{}", i + 1, k)),
        }
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::monomial::{Letter, Word};
    use crate::ncalg::normal_form;

    #[test]
    fn parses_generators_and_scalars() {
        let e = parse("q^-1 z2 z4").unwrap();
        assert_eq!(e.num_terms(), 1);
        let m = NormalMonomial::new([0; 4], [0, 1, 0, 1]);
        assert_eq!(e.coeff(&m), QRational::q_power(-1));
    }

    #[test]
    fn subtraction_cancels() {
        assert!(parse("z1 - z1").unwrap().is_zero());
    }

    #[test]
    fn adjoint_after_exponent() {
        let e = parse("z4^2'").unwrap();
        let m = NormalMonomial::new([0, 0, 0, 2], [0; 4]);
        assert!(e.coeff(&m).is_one());
    }

    #[test]
    fn products_are_normalized() {
        // z2 z1 = q^-1 z1 z2
        let e = parse("z2 z1").unwrap();
        let m = NormalMonomial::new([0; 4], [1, 1, 0, 0]);
        assert_eq!(e.coeff(&m), QRational::q_power(-1));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("z1 + z5") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(matches!(
            parse("z1^999999999999999999999"),
            Err(ParseError::ExponentOverflow { .. })
        ));
        assert!(matches!(parse("z1^-1"), Err(ParseError::NonInvertiblePower { .. })));
    }

    #[test]
    fn render_parse_round_trip() {
        let w = Word(vec![
            Letter::z(3),
            Letter::z_star(2),
            Letter::z(4),
            Letter::z_star(4),
            Letter::z(1),
        ]);
        let e = normal_form(&w);
        let text = render(&e);
        let back = parse(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(render(&back), text);
    }
}
