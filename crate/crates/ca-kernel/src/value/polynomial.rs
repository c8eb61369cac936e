//! Dense univariate polynomials over a commutative coefficient ring.

use std::fmt;

use crate::error::{Error, Result};
use crate::tag::TypeTag;

use super::Value;

/// Coefficients in ascending degree order; the zero polynomial is the empty
/// list, so the leading coefficient of a nonzero polynomial is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeff_tag: TypeTag,
    coeffs: Vec<Value>,
}

impl Polynomial {
    /// Build from raw coefficients, checking tags and trimming the leading
    /// zeros that would break canonical form.
    pub fn new(coeff_tag: TypeTag, mut coeffs: Vec<Value>) -> Result<Polynomial> {
        for c in &coeffs {
            if c.tag() != coeff_tag {
                return Err(Error::TypeMismatch {
                    expected: coeff_tag.to_string(),
                    got: c.tag().to_string(),
                });
            }
        }
        while coeffs.last().is_some_and(Value::is_zero) {
            coeffs.pop();
        }
        Ok(Polynomial { coeff_tag, coeffs })
    }

    pub fn zero(coeff_tag: TypeTag) -> Polynomial {
        Polynomial {
            coeff_tag,
            coeffs: vec![],
        }
    }

    pub fn constant(coeff_tag: TypeTag, c: Value) -> Polynomial {
        let coeffs = if c.is_zero() { vec![] } else { vec![c] };
        Polynomial { coeff_tag, coeffs }
    }

    /// The monomial `x`.
    pub fn x(coeff_tag: TypeTag) -> Polynomial {
        Polynomial {
            coeffs: vec![Value::zero(&coeff_tag), Value::unit(&coeff_tag)],
            coeff_tag,
        }
    }

    pub fn coeff_tag(&self) -> &TypeTag {
        &self.coeff_tag
    }

    pub fn coeffs(&self) -> &[Value] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(other.coeffs.len()));
        for n in 0..self.coeffs.len().max(other.coeffs.len()) {
            let zero = Value::zero(&self.coeff_tag);
            let a = self.coeffs.get(n).unwrap_or(&zero);
            let b = other.coeffs.get(n).unwrap_or(&zero);
            coeffs.push(a.add(b)?);
        }
        Polynomial::new(self.coeff_tag.clone(), coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeff_tag: self.coeff_tag.clone(),
            coeffs: self.coeffs.iter().map(Value::neg).collect(),
        }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.coeff_tag.clone()));
        }
        let mut coeffs =
            vec![Value::zero(&self.coeff_tag); self.coeffs.len() + other.coeffs.len() - 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            for (m, b) in other.coeffs.iter().enumerate() {
                coeffs[n + m] = coeffs[n + m].add(&a.mul(b)?)?;
            }
        }
        Polynomial::new(self.coeff_tag.clone(), coeffs)
    }

    /// Units of R[x] are the constant polynomials with invertible value.
    pub fn inversion(&self) -> Result<Polynomial> {
        if self.coeffs.len() == 1 {
            if let Ok(inv) = self.coeffs[0].inversion() {
                return Ok(Polynomial::constant(self.coeff_tag.clone(), inv));
            }
        }
        Err(Error::NotInvertible {
            value: self.to_string(),
        })
    }

    /// Horner evaluation at a point of the coefficient type.
    pub fn eval(&self, at: &Value) -> Result<Value> {
        if at.tag() != self.coeff_tag {
            return Err(Error::TypeMismatch {
                expected: self.coeff_tag.to_string(),
                got: at.tag().to_string(),
            });
        }
        let mut acc = Value::zero(&self.coeff_tag);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at)?.add(c)?;
        }
        Ok(acc)
    }
}

fn atomic(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '/')
}

impl fmt::Display for Polynomial {
    /// Ascending powers of `x`; zero terms omitted; "0" for the zero
    /// polynomial. Compound coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if atomic(rest) => (true, rest.to_string()),
                _ => (false, text),
            };
            let body = if power.is_empty() {
                if atomic(&mag) {
                    mag
                } else {
                    format!("({mag})")
                }
            } else if mag == "1" {
                power
            } else if atomic(&mag) {
                format!("{mag}*{power}")
            } else {
                format!("({mag})*{power}")
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}
