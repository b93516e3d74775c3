//! Recursive-descent parser for ring specifications.
//!
//! ```text
//! ring     = factor , { ( "x" | "*" ) , factor } ;
//! factor   = term , [ "^" , nat ] ;
//! term     = "Z/" nat | "GF(" nat ")" | "GF(" nat ")[" ident "]/(" poly ")" ;
//! poly     = monomial , { ( "+" | "-" ) , monomial } ;
//! monomial = [ nat ] [ ident [ "^" nat ] ] ;
//! ```

use super::{ComponentSpec, GaloisFieldSpec, RingSpec};
use crate::error::{Error, Result};

pub(crate) fn parse_ring_spec(text: &str, cap: u64) -> Result<RingSpec> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut comps = p.factor()?;
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'x') | Some(b'*') => {
                p.pos += 1;
                comps.extend(p.factor()?);
            }
            Some(_) => return Err(p.error("'x', '*' or end of input")),
        }
    }
    RingSpec::with_cap(comps, cap)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, expected: &str) -> Error {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let rest = String::from_utf8_lossy(&self.src[self.pos..]);
                format!("`{}`", rest.chars().take(8).collect::<String>())
            }
        };
        Error::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("'{token}'")))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            expected: "a natural number that fits in 64 bits".into(),
            found: digits.to_string(),
        })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .peek()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == b'_')
        {
            return None;
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// A term repeated `n` times for `term ^ n`.
    fn factor(&mut self) -> Result<Vec<ComponentSpec>> {
        let t = self.term()?;
        if !self.eat("^") {
            return Ok(vec![t]);
        }
        let start = self.pos;
        let n = self.nat()?;
        if !(1..=64).contains(&n) {
            return Err(Error::Syntax {
                pos: start,
                expected: "an exponent between 1 and 64".into(),
                found: n.to_string(),
            });
        }
        Ok(vec![t; n as usize])
    }

    fn term(&mut self) -> Result<ComponentSpec> {
        if self.eat("Z/") {
            let n = self.nat()?;
            if n < 2 {
                return Err(Error::ModulusTooSmall(n));
            }
            return Ok(ComponentSpec::Zmod { n });
        }
        if !self.eat("GF(") {
            return Err(self.error("'Z/' or 'GF('"));
        }
        let q = self.nat()?;
        self.expect(")")?;
        let field = GaloisFieldSpec::new(q)?;
        if !self.eat("[") {
            return Ok(ComponentSpec::GaloisField(field));
        }
        let var = self.ident().ok_or_else(|| self.error("a variable name"))?;
        self.expect("]")?;
        self.expect("/")?;
        self.expect("(")?;
        let modulus = self.poly(&var, field.p())?;
        self.expect(")")?;
        Ok(ComponentSpec::PolyQuotient {
            base: field,
            var,
            modulus,
        })
    }

    /// Parses a polynomial with integer coefficients reduced modulo `p`.
    fn poly(&mut self, var: &str, p: u64) -> Result<Vec<u64>> {
        let start = self.pos;
        let mut coeffs: Vec<u64> = Vec::new();
        let mut negate = false;
        loop {
            let (c, d) = self.monomial(var)?;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            let c = c % p;
            let c = if negate { (p - c) % p } else { c };
            coeffs[d] = (coeffs[d] + c) % p;
            if self.eat("+") {
                negate = false;
            } else if self.eat("-") {
                negate = true;
            } else {
                break;
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 || coeffs.last() != Some(&1) {
            let text = String::from_utf8_lossy(&self.src[start..self.pos]).trim().to_string();
            return Err(Error::BadModulus(text));
        }
        Ok(coeffs)
    }

    /// Returns `(coefficient, degree)`.
    fn monomial(&mut self, var: &str) -> Result<(u64, usize)> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            Some(self.nat()?)
        } else {
            None
        };
        let Some(name) = self.ident() else {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.error("a coefficient or variable")),
            };
        };
        if name != var {
            return Err(Error::VariableMismatch {
                expected: var.to_string(),
                found: name,
            });
        }
        let degree = if self.eat("^") { self.nat()? } else { 1 };
        let degree = usize::try_from(degree)
            .ok()
            .filter(|&d| d <= 64)
            .ok_or_else(|| Error::BadModulus(format!("degree {degree} is too large")))?;
        Ok((coeff.unwrap_or(1), degree))
    }
}
