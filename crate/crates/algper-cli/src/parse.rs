//! Parsers for the literal notations accepted on the command line: spectra
//! as a multiset `{3,4}` or as pairs `3:1,4:1`, coefficient sequences as a
//! dense tuple `(3,1,-1,-1)` or as pairs `15:-2`, period sets as `{1,2}` or
//! `1,2`. Whitespace between tokens is ignored; the empty string denotes
//! the empty object. Errors carry the byte offset into the original input.

use std::fmt;

use algper::dold::{APSet, DoldSequence, RootSpectrum};
use num_bigint::BigInt;

#[derive(Debug)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, want: u8) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == want => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.err(format!(
                "expected '{}', found '{}'",
                want as char, b as char
            ))),
            None => Err(self.err(format!("expected '{}', found end of input", want as char))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.err(format!("unexpected character '{}'", b as char))),
        }
    }

    /// Signed arbitrary-precision integer.
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        BigInt::parse_bytes(&self.bytes[start..self.pos], 10)
            .ok_or_else(|| self.err("expected an integer"))
    }

    /// Positive machine-sized index (an order or a period).
    fn index(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a positive integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let value: u64 = text.parse().map_err(|_| ParseError {
            position: start,
            message: format!("index {text} is out of range"),
        })?;
        if value == 0 {
            return Err(ParseError {
                position: start,
                message: "indices start at 1".into(),
            });
        }
        Ok(value)
    }
}

/// `{3,4}` (orders repeated per multiplicity), `3:1,4:1` pairs, or empty.
/// Pair multiplicities may be negative: formal spectra are convertible even
/// when they are not realizable.
pub fn parse_spectrum(input: &str) -> Result<RootSpectrum, ParseError> {
    let mut cur = Cursor::new(input);
    match cur.peek() {
        None => Ok(RootSpectrum::new()),
        Some(b'{') => {
            cur.pos += 1;
            let mut orders = Vec::new();
            if !cur.eat(b'}') {
                loop {
                    orders.push(cur.index()?);
                    if cur.eat(b'}') {
                        break;
                    }
                    cur.expect(b',')?;
                }
            }
            cur.end()?;
            Ok(RootSpectrum::from_multiset(&orders))
        }
        Some(_) => {
            let mut pairs = Vec::new();
            loop {
                let order = cur.index()?;
                cur.expect(b':')?;
                let multiplicity = cur.integer()?;
                pairs.push((order, multiplicity));
                if cur.at_end() {
                    break;
                }
                cur.expect(b',')?;
            }
            Ok(RootSpectrum::from_pairs(pairs))
        }
    }
}

/// `(3,1,-1,-1)` dense from index 1, `15:-2` pairs, or empty.
pub fn parse_dold(input: &str) -> Result<DoldSequence, ParseError> {
    let mut cur = Cursor::new(input);
    match cur.peek() {
        None => Ok(DoldSequence::new()),
        Some(b'(') => {
            cur.pos += 1;
            let mut values = Vec::new();
            if !cur.eat(b')') {
                loop {
                    values.push(cur.integer()?);
                    if cur.eat(b')') {
                        break;
                    }
                    cur.expect(b',')?;
                }
            }
            cur.end()?;
            Ok(DoldSequence::from_dense(values))
        }
        Some(_) => {
            let mut pairs = Vec::new();
            loop {
                let index = cur.index()?;
                cur.expect(b':')?;
                let value = cur.integer()?;
                pairs.push((index, value));
                if cur.at_end() {
                    break;
                }
                cur.expect(b',')?;
            }
            Ok(DoldSequence::from_pairs(pairs))
        }
    }
}

/// `{1,2}` or bare `1,2`; duplicates collapse.
pub fn parse_period_set(input: &str) -> Result<APSet, ParseError> {
    let mut cur = Cursor::new(input);
    let mut items = Vec::new();
    if cur.eat(b'{') {
        if !cur.eat(b'}') {
            loop {
                items.push(cur.index()?);
                if cur.eat(b'}') {
                    break;
                }
                cur.expect(b',')?;
            }
        }
        cur.end()?;
    } else if !cur.at_end() {
        loop {
            items.push(cur.index()?);
            if cur.at_end() {
                break;
            }
            cur.expect(b',')?;
        }
    }
    Ok(items.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_forms_agree() {
        let multiset = parse_spectrum("{3,4}").unwrap();
        let pairs = parse_spectrum("3:1,4:1").unwrap();
        assert_eq!(multiset, pairs);
        assert_eq!(multiset.to_string(), "{3,4}");

        let repeated = parse_spectrum("{2, 2}").unwrap();
        assert_eq!(repeated, parse_spectrum("2:2").unwrap());

        assert!(parse_spectrum("").unwrap().is_empty());
        assert!(parse_spectrum("{}").unwrap().is_empty());

        let formal = parse_spectrum("3:-1").unwrap();
        assert_eq!(formal.get(3), BigInt::from(-1));
    }

    #[test]
    fn dold_forms_agree() {
        let dense = parse_dold("(3,1,-1,-1)").unwrap();
        let sparse = parse_dold("1:3, 2:1, 3:-1, 4:-1").unwrap();
        assert_eq!(dense, sparse);
        assert!(parse_dold("").unwrap().is_zero());
        assert!(parse_dold("()").unwrap().is_zero());
        // Dense zeros vanish from the support.
        assert_eq!(parse_dold("(0,0,5)").unwrap(), parse_dold("3:5").unwrap());
    }

    #[test]
    fn period_set_forms_agree() {
        let braced = parse_period_set("{1,2}").unwrap();
        let bare = parse_period_set("2,1").unwrap();
        assert_eq!(braced, bare);
        assert!(parse_period_set("").unwrap().is_empty());
        assert!(parse_period_set("{}").unwrap().is_empty());
        assert_eq!(parse_period_set("{5,5}").unwrap().len(), 1);
    }

    #[test]
    fn whitespace_is_ignored_between_tokens() {
        assert_eq!(
            parse_dold(" ( 3 , 1 , -1 , -1 ) ").unwrap(),
            parse_dold("(3,1,-1,-1)").unwrap()
        );
        assert_eq!(
            parse_spectrum(" 15 : -2 ").unwrap(),
            parse_spectrum("15:-2").unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_spectrum("{3,x}").unwrap_err();
        assert_eq!(err.position, 3);

        let err = parse_dold("(3,1,").unwrap_err();
        assert_eq!(err.position, 5);

        let err = parse_period_set("{0}").unwrap_err();
        assert_eq!(err.position, 1);
        assert!(err.message.contains("start at 1"));

        let err = parse_spectrum("{3}junk").unwrap_err();
        assert_eq!(err.position, 3);

        // A broken number must not be consumed as a sign alone.
        let err = parse_dold("1:-").unwrap_err();
        assert_eq!(err.position, 2);
    }
}
