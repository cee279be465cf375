//! Text syntax for algebra elements: `e`, `y1`, `y2^3`, factors joined by
//! `*`, terms by `+`/`-`, integer or `p/q` coefficients, e.g.
//! `3/2*y1^2*y3 + y2`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::element::AlgebraElement;
use super::monomial::Monomial;
use crate::series::Rational;
use crate::Error;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn small(&mut self) -> Result<usize, Error> {
        let start = self.pos;
        let n = self.digits()?;
        usize::try_from(n).map_err(|_| Error::Parse {
            position: start + 1,
            message: "index or exponent too large".into(),
        })
    }

    /// One factor: a coefficient, `e`, or `yK[^P]`.
    fn factor(&mut self, coeff: &mut Rational, mono: &mut Monomial) -> Result<(), Error> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let num = self.digits()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.digits()?;
                    if d.is_zero() {
                        return Err(Error::Parse {
                            position: at + 1,
                            message: "zero denominator".into(),
                        });
                    }
                    d
                } else {
                    BigInt::one()
                };
                *coeff *= Rational::new(num, den);
            }
            Some(b'e') => self.pos += 1,
            Some(b'y') => {
                self.pos += 1;
                let at = self.pos;
                let k = self.small()?;
                if k == 0 {
                    return Err(Error::Parse {
                        position: at + 1,
                        message: "generator indices start at 1".into(),
                    });
                }
                let p = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.small()?
                } else {
                    1
                };
                *mono = mono.mul(&Monomial::from_exponents([(k, p)]));
            }
            Some(other) => {
                return Err(self.error(format!("unexpected character '{}'", other as char)))
            }
            None => return Err(self.error("unexpected end of input")),
        }
        Ok(())
    }

    fn element(&mut self) -> Result<AlgebraElement, Error> {
        let mut out = AlgebraElement::zero();
        self.skip_ws();
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') {
            sign = -sign;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let mut coeff = sign.clone();
            let mut mono = Monomial::unit();
            self.factor(&mut coeff, &mut mono)?;
            loop {
                self.skip_ws();
                if self.peek() != Some(b'*') {
                    break;
                }
                self.pos += 1;
                self.skip_ws();
                self.factor(&mut coeff, &mut mono)?;
            }
            out.add_term(mono, coeff);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(other) => {
                    return Err(self.error(format!("unexpected character '{}'", other as char)))
                }
            }
            self.pos += 1;
        }
    }
}

impl FromStr for AlgebraElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        if s.trim() == "0" {
            return Ok(AlgebraElement::zero());
        }
        parser.element()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_syntax() {
        let a: AlgebraElement = "3/2*y1^2*y3 + y2".parse().unwrap();
        assert_eq!(a.terms().len(), 2);
        assert_eq!(
            a.coefficient(&Monomial::from_exponents([(1, 2), (3, 1)])),
            Rational::new(3.into(), 2.into())
        );
        assert_eq!(a.to_string(), "3/2*y1^2*y3 + y2");
    }

    #[test]
    fn signs_and_units() {
        let a: AlgebraElement = "-e + 2*y1 - y1".parse().unwrap();
        assert_eq!(a.to_string(), "-e + y1");
        let z: AlgebraElement = "y1 - y1".parse().unwrap();
        assert!(z.is_zero());
        assert!("0".parse::<AlgebraElement>().unwrap().is_zero());
        assert_eq!(
            "y1*y1".parse::<AlgebraElement>().unwrap().to_string(),
            "y1^2"
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            "y0".parse::<AlgebraElement>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "y1 + x".parse::<AlgebraElement>(),
            Err(Error::Parse { position: 6, .. })
        ));
        assert!(matches!(
            "1/0*y1".parse::<AlgebraElement>(),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            "y1 +".parse::<AlgebraElement>(),
            Err(Error::Parse { position: 5, .. })
        ));
        assert!(matches!(
            "".parse::<AlgebraElement>(),
            Err(Error::Parse { position: 1, .. })
        ));
    }
}
