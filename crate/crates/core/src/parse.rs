//! Text grammars for words, identities, field elements and series.
//!
//! ```text
//! word     x3^-2*x1*x2^5     1     [x1,x2]^2
//! identity ?x*a*?x^-1        [?x^6,?y]
//! field    (s^2+1)/(s-1)     -3/4
//! series   (s)*[x1] + (1/(s+1))*[x2^-1*x1] + (2)*[1]
//! ```
//!
//! Whitespace is insignificant. Errors carry the character offset.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::free_group::ReducedWord;
use crate::identities::WordExpr;
use crate::series::Series;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&mut self, msg: impl Into<String>) -> Error {
        self.skip_ws();
        let found = match self.rest().chars().next() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        };
        Error::parse(self.pos, format!("{}{found}", msg.into()))
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return None;
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let mut chars = self.rest().char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let len = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .count();
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        let d = self.digits().ok_or_else(|| self.error("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| Error::parse(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    // ---- word / identity grammar ----

    fn word_expr(&mut self) -> Result<WordExpr> {
        let mut factors = vec![self.word_factor()?];
        while self.eat('*') {
            factors.push(self.word_factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { WordExpr::Product(factors) })
    }

    fn word_factor(&mut self) -> Result<WordExpr> {
        let mut e = self.word_atom()?;
        while self.eat('^') {
            let k = self.integer()?;
            e = if k == -1 { e.inverse() } else { e.pow(k) };
        }
        Ok(e)
    }

    fn word_atom(&mut self) -> Result<WordExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.word_expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.word_expr()?;
                self.expect(',')?;
                let b = self.word_expr()?;
                self.expect(']')?;
                Ok(WordExpr::commutator(a, b))
            }
            Some('?') => {
                self.pos += 1;
                let name = self.ident().ok_or_else(|| self.error("expected a variable name after `?`"))?;
                Ok(WordExpr::var(name))
            }
            Some('1') => {
                let start = self.pos;
                let d = self.digits().unwrap();
                if d != "1" {
                    return Err(Error::parse(start, "only `1` may appear as a numeric word"));
                }
                Ok(WordExpr::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().unwrap();
                if name.starts_with('x') && name.len() > 1 && name[1..].chars().all(|c| c.is_ascii_digit()) {
                    let idx: u64 = name[1..].parse().unwrap_or(0);
                    if idx == 0 || idx > u32::MAX as u64 {
                        return Err(Error::parse(self.pos - name.len(), "generator indices start at 1"));
                    }
                }
                Ok(WordExpr::constant(name))
            }
            _ => Err(self.error("expected a word")),
        }
    }

    // ---- field grammar ----

    fn field_expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.field_term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.field_term()?);
            } else if self.peek() == Some('-') {
                self.pos += 1;
                acc = acc.sub(&self.field_term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn field_term(&mut self) -> Result<FieldElement> {
        let mut acc = self.field_unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.field_unary()?);
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.field_unary()?;
                acc = acc.div(&d).map_err(|_| Error::parse(at, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn field_unary(&mut self) -> Result<FieldElement> {
        if self.eat('-') {
            return Ok(self.field_unary()?.neg());
        }
        let base = self.field_atom()?;
        if self.peek() == Some('^') {
            let at = self.pos;
            self.pos += 1;
            let k = self.integer()?;
            return base.pow(k).map_err(|_| Error::parse(at, "zero raised to a negative power"));
        }
        Ok(base)
    }

    fn field_atom(&mut self) -> Result<FieldElement> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.field_expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('s') => {
                self.pos += 1;
                Ok(FieldElement::s())
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().expect("digits");
                Ok(FieldElement::from_rational(BigRational::from_integer(n)))
            }
            _ => Err(self.error("expected a field element")),
        }
    }

    // ---- series grammar ----

    fn series(&mut self) -> Result<Series> {
        let mut acc = Series::zero();
        let mut negate = self.eat('-');
        loop {
            let term = self.series_term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn series_term(&mut self) -> Result<Series> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let c = self.field_expr()?;
                self.expect(')')?;
                let w = if self.eat('*') { self.bracketed_word()? } else { ReducedWord::identity() };
                Ok(Series::monomial(c, w))
            }
            Some('[') => Ok(Series::word(self.bracketed_word()?)),
            Some('0') => {
                self.pos += 1;
                Ok(Series::zero())
            }
            _ => Err(self.error("expected a series term `(coeff)*[word]`")),
        }
    }

    fn bracketed_word(&mut self) -> Result<ReducedWord> {
        self.expect('[')?;
        let start = self.pos;
        let e = self.word_expr()?;
        self.expect(']')?;
        e.to_word().map_err(|err| Error::parse(start, err.to_string()))
    }
}

/// Parses a word or identity expression.
pub fn parse_expr(text: &str) -> Result<WordExpr> {
    let mut p = Parser::new(text);
    let e = p.word_expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a word over generator literals and reduces it.
pub fn parse_word(text: &str) -> Result<ReducedWord> {
    let e = parse_expr(text)?;
    e.to_word().map_err(|err| Error::parse(0, err.to_string()))
}

pub fn parse_field(text: &str) -> Result<FieldElement> {
    let mut p = Parser::new(text);
    let f = p.field_expr()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_series(text: &str) -> Result<Series> {
    let mut p = Parser::new(text);
    let s = p.series()?;
    p.finish()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;
    use proptest::prelude::*;

    fn x(i: u32) -> ReducedWord {
        ReducedWord::generator(i)
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("x3^-2*x1*x2^5").unwrap(), ReducedWord::from_pairs([(3, -2), (1, 1), (2, 5)]));
        assert_eq!(parse_word(" 1 ").unwrap(), ReducedWord::identity());
        assert_eq!(parse_word("[x1, x2]").unwrap(), ReducedWord::commutator(&x(1), &x(2)));
        assert_eq!(parse_word("(x1*x2)^-1").unwrap(), x(2).invert().multiply(&x(1).invert()));
        assert_eq!(parse_word("x1 * x1^-1").unwrap(), ReducedWord::identity());
    }

    #[test]
    fn word_errors_have_positions() {
        match parse_word("x1*") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        match parse_word("x1 x2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_word("x0").is_err());
        assert!(parse_word("2").is_err());
        assert!(parse_word("?x").is_err());
    }

    #[test]
    fn identity_expressions() {
        let e = parse_expr("?x*a*?x^-1*a*?x*a^-1*?x^-1*a^-1").unwrap();
        assert_eq!(e.variables().into_iter().collect::<Vec<_>>(), vec!["x"]);
        assert_eq!(e.constants().into_iter().collect::<Vec<_>>(), vec!["a"]);
        let e = parse_expr("[?x^6, ?y]").unwrap();
        assert_eq!(e.to_string(), "[?x^6,?y]");
    }

    #[test]
    fn fields() {
        let f = parse_field("(s^2+1)/(s-1)").unwrap();
        assert_eq!(f.to_string(), "(s^2+1)/(s-1)");
        assert_eq!(parse_field("-3/4").unwrap().to_string(), "-3/4");
        assert_eq!(parse_field("2*s - s").unwrap(), FieldElement::s());
        assert_eq!(parse_field("s^-1").unwrap(), FieldElement::s().invert().unwrap());
        assert!(parse_field("1/0").is_err());
        assert!(parse_field("s+").is_err());
    }

    #[test]
    fn series() {
        let s = parse_series("(s)*[x1] + (1/(s+1))*[x2^-1*x1] + (2)*[1]").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coefficient(&ReducedWord::identity()), FieldElement::from_int(2));
        let inv = FieldElement::from_poly(Poly::from_i64s(&[1, 1])).invert().unwrap();
        assert_eq!(s.coefficient(&x(2).invert().multiply(&x(1))), inv);
        let t = parse_series("[x1] - [x1] + (3)").unwrap();
        assert_eq!(t, Series::monomial(FieldElement::from_int(3), ReducedWord::identity()));
        assert!(parse_series("0").unwrap().is_zero());
        assert!(parse_series("(s)*x1").is_err());
    }

    fn arb_word() -> impl Strategy<Value = ReducedWord> {
        prop::collection::vec((1u32..5, -3i64..4), 0..6).prop_map(ReducedWord::from_pairs)
    }

    proptest! {
        #[test]
        fn word_display_parses_back(w in arb_word()) {
            prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn series_display_parses_back(
            terms in prop::collection::vec((arb_word(), -3i64..4, -2i64..3), 0..4)
        ) {
            let s = Series::from_terms(terms.into_iter().map(|(w, a, b)| {
                let num = Poly::from_i64s(&[a, 1]);
                let den = Poly::from_i64s(&[b, 1]);
                (w, FieldElement::new(num, den).unwrap())
            }));
            prop_assert_eq!(parse_series(&s.to_string()).unwrap(), s);
        }
    }
}
