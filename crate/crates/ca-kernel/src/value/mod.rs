//! Exact arithmetic carriers: the data-bearing objects behind every tag.
//!
//! All carriers are exact (integers, rationals and compounds built from
//! them), so every comparison in the kernel is decidable equality. Values
//! are immutable; operations return fresh values.

mod complex;
mod matrix;
mod polynomial;
mod quaternion;
pub mod sample;

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tag::TypeTag;

pub use complex::ComplexQ;
pub use matrix::Matrix;
pub use polynomial::Polynomial;
pub use quaternion::Quaternion;

pub type Int = BigInt;
pub type Rat = BigRational;

/// An exact concrete datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Integer(Int),
    Rational(Rat),
    Complex(ComplexQ),
    Quaternion(Quaternion),
    Polynomial(Polynomial),
    Matrix(Matrix),
}

/// Render a rational as `p/q`, or plain `p` when the denominator is one.
pub(crate) fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign-aware rendering of a linear combination of basis symbols, used for
/// complex numbers and quaternions. Zero terms are omitted; the zero value
/// renders as "0".
pub(crate) fn linear_combination(terms: &[(&Rat, &str)]) -> String {
    let mut out = String::new();
    for (coeff, basis) in terms {
        if coeff.is_zero() {
            continue;
        }
        let neg = coeff.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = coeff.abs();
        if basis.is_empty() {
            out.push_str(&rat_str(&mag));
        } else if mag.is_one() {
            out.push_str(basis);
        } else {
            out.push_str(&rat_str(&mag));
            out.push('*');
            out.push_str(basis);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Value {
    pub fn int(n: i64) -> Value {
        Value::Integer(Int::from(n))
    }

    pub fn rational(num: i64, den: i64) -> Value {
        Value::Rational(Rat::new(Int::from(num), Int::from(den)))
    }

    /// The tag this value carries.
    pub fn tag(&self) -> TypeTag {
        match self {
            Value::Integer(_) => TypeTag::Integer,
            Value::Rational(_) => TypeTag::Rational,
            Value::Complex(_) => TypeTag::ComplexQ,
            Value::Quaternion(_) => TypeTag::Quaternion,
            Value::Polynomial(p) => TypeTag::polynomial(p.coeff_tag().clone()),
            Value::Matrix(m) => TypeTag::matrix(m.entry_tag().clone(), m.dim()),
        }
    }

    /// Additive identity of the carrier behind `tag`.
    pub fn zero(tag: &TypeTag) -> Value {
        match tag {
            TypeTag::Integer => Value::Integer(Int::zero()),
            TypeTag::Rational => Value::Rational(Rat::zero()),
            TypeTag::ComplexQ => Value::Complex(ComplexQ::zero()),
            TypeTag::Quaternion => Value::Quaternion(Quaternion::zero()),
            TypeTag::Polynomial(coeff) => Value::Polynomial(Polynomial::zero((**coeff).clone())),
            TypeTag::Matrix(entry, n) => Value::Matrix(Matrix::zero((**entry).clone(), *n)),
        }
    }

    /// Multiplicative identity of the carrier behind `tag`.
    pub fn unit(tag: &TypeTag) -> Value {
        match tag {
            TypeTag::Integer => Value::Integer(Int::one()),
            TypeTag::Rational => Value::Rational(Rat::one()),
            TypeTag::ComplexQ => Value::Complex(ComplexQ::one()),
            TypeTag::Quaternion => Value::Quaternion(Quaternion::one()),
            TypeTag::Polynomial(coeff) => Value::Polynomial(Polynomial::constant(
                (**coeff).clone(),
                Value::unit(coeff),
            )),
            TypeTag::Matrix(entry, n) => Value::Matrix(Matrix::identity((**entry).clone(), *n)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Integer(n) => n.is_zero(),
            Value::Rational(r) => r.is_zero(),
            Value::Complex(c) => c.is_zero(),
            Value::Quaternion(q) => q.is_zero(),
            Value::Polynomial(p) => p.is_zero(),
            Value::Matrix(m) => m.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Value::Integer(n) => n.is_one(),
            Value::Rational(r) => r.is_one(),
            Value::Complex(c) => c.is_one(),
            Value::Quaternion(q) => q.is_one(),
            Value::Polynomial(p) => p.is_one(),
            Value::Matrix(m) => m.is_one(),
        }
    }

    fn mismatch(&self, other: &Value) -> Error {
        Error::TypeMismatch {
            expected: self.tag().to_string(),
            got: other.tag().to_string(),
        }
    }

    pub fn add(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Integer(a), Value::Integer(b)) => Ok(Value::Integer(a + b)),
            (Value::Rational(a), Value::Rational(b)) => Ok(Value::Rational(a + b)),
            (Value::Complex(a), Value::Complex(b)) => Ok(Value::Complex(a.add(b))),
            (Value::Quaternion(a), Value::Quaternion(b)) => Ok(Value::Quaternion(a.add(b))),
            (Value::Polynomial(a), Value::Polynomial(b)) if a.coeff_tag() == b.coeff_tag() => {
                Ok(Value::Polynomial(a.add(b)?))
            }
            (Value::Matrix(a), Value::Matrix(b)) if a.same_shape(b) => {
                Ok(Value::Matrix(a.add(b)?))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Value) -> Result<Value> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Integer(n) => Value::Integer(-n),
            Value::Rational(r) => Value::Rational(-r),
            Value::Complex(c) => Value::Complex(c.neg()),
            Value::Quaternion(q) => Value::Quaternion(q.neg()),
            Value::Polynomial(p) => Value::Polynomial(p.neg()),
            Value::Matrix(m) => Value::Matrix(m.neg()),
        }
    }

    pub fn mul(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Integer(a), Value::Integer(b)) => Ok(Value::Integer(a * b)),
            (Value::Rational(a), Value::Rational(b)) => Ok(Value::Rational(a * b)),
            (Value::Complex(a), Value::Complex(b)) => Ok(Value::Complex(a.mul(b))),
            (Value::Quaternion(a), Value::Quaternion(b)) => Ok(Value::Quaternion(a.mul(b))),
            (Value::Polynomial(a), Value::Polynomial(b)) if a.coeff_tag() == b.coeff_tag() => {
                Ok(Value::Polynomial(a.mul(b)?))
            }
            (Value::Matrix(a), Value::Matrix(b)) if a.same_shape(b) => {
                Ok(Value::Matrix(a.mul(b)?))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    /// Division is `a * inversion(b)` in every carrier.
    pub fn div(&self, other: &Value) -> Result<Value> {
        self.mul(&other.inversion()?)
    }

    /// Multiplicative inverse. Partial: fails on zero and on elements with
    /// no inverse in their own carrier (integers other than ±1, singular
    /// matrices, non-constant polynomials).
    pub fn inversion(&self) -> Result<Value> {
        let not_invertible = || Error::NotInvertible {
            value: self.to_string(),
        };
        match self {
            Value::Integer(n) => {
                if n.abs().is_one() {
                    Ok(self.clone())
                } else {
                    Err(not_invertible())
                }
            }
            Value::Rational(r) => {
                if r.is_zero() {
                    Err(not_invertible())
                } else {
                    Ok(Value::Rational(r.recip()))
                }
            }
            Value::Complex(c) => c.inversion().map(Value::Complex).ok_or_else(not_invertible),
            Value::Quaternion(q) => q
                .inversion()
                .map(Value::Quaternion)
                .ok_or_else(not_invertible),
            Value::Polynomial(p) => p.inversion().map(Value::Polynomial),
            Value::Matrix(m) => m.inversion().map(Value::Matrix),
        }
    }

    /// Reduced norm: sum of squares for quaternions, determinant for
    /// matrices. Multiplicative in both carriers.
    pub fn norm(&self) -> Result<Value> {
        match self {
            Value::Quaternion(q) => Ok(Value::Rational(q.norm())),
            Value::Matrix(m) => m.det(),
            _ => Err(Error::Unsupported {
                op: "Norm".into(),
                tag: self.tag().to_string(),
            }),
        }
    }

    /// Conjugation: identity on integers and rationals, component negation
    /// for complex numbers and quaternions, transposition for matrices.
    pub fn conj(&self) -> Result<Value> {
        match self {
            Value::Integer(_) | Value::Rational(_) => Ok(self.clone()),
            Value::Complex(c) => Ok(Value::Complex(c.conj())),
            Value::Quaternion(q) => Ok(Value::Quaternion(q.conj())),
            Value::Matrix(m) => Ok(Value::Matrix(m.transpose())),
            Value::Polynomial(_) => Err(Error::Unsupported {
                op: "Conj".into(),
                tag: self.tag().to_string(),
            }),
        }
    }

    /// Exact determinant; requires a matrix over field entries.
    pub fn det(&self) -> Result<Value> {
        match self {
            Value::Matrix(m) => m.det(),
            _ => Err(Error::Unsupported {
                op: "det".into(),
                tag: self.tag().to_string(),
            }),
        }
    }

    /// Horner evaluation of a polynomial at a point of its coefficient type.
    pub fn poly_eval(&self, at: &Value) -> Result<Value> {
        match self {
            Value::Polynomial(p) => p.eval(at),
            _ => Err(Error::Unsupported {
                op: "poly_eval".into(),
                tag: self.tag().to_string(),
            }),
        }
    }

    /// Embed this value into `to` along the coercion lattice.
    pub fn coerce_to(&self, to: &TypeTag) -> Result<Value> {
        let from = self.tag();
        if from == *to {
            return Ok(self.clone());
        }
        if !from.coerces_to(to) {
            return Err(Error::TypeMismatch {
                expected: to.to_string(),
                got: from.to_string(),
            });
        }
        match (self, to) {
            (Value::Integer(n), TypeTag::Rational) => {
                Ok(Value::Rational(Rat::from_integer(n.clone())))
            }
            (Value::Integer(n), TypeTag::ComplexQ) => {
                Ok(Value::Complex(ComplexQ::real(Rat::from_integer(n.clone()))))
            }
            (Value::Rational(r), TypeTag::ComplexQ) => Ok(Value::Complex(ComplexQ::real(r.clone()))),
            (Value::Integer(n), TypeTag::Quaternion) => Ok(Value::Quaternion(Quaternion::scalar(
                Rat::from_integer(n.clone()),
            ))),
            (Value::Rational(r), TypeTag::Quaternion) => {
                Ok(Value::Quaternion(Quaternion::scalar(r.clone())))
            }
            (_, TypeTag::Polynomial(coeff)) => {
                let c = self.coerce_to(coeff)?;
                Ok(Value::Polynomial(Polynomial::constant(
                    (**coeff).clone(),
                    c,
                )))
            }
            (_, TypeTag::Matrix(entry, n)) => {
                let c = self.coerce_to(entry)?;
                Ok(Value::Matrix(Matrix::scalar_diagonal(
                    (**entry).clone(),
                    *n,
                    c,
                )))
            }
            _ => unreachable!("coerces_to admitted an unhandled pair"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(n) => write!(f, "{n}"),
            Value::Rational(r) => f.write_str(&rat_str(r)),
            Value::Complex(c) => write!(f, "{c}"),
            Value::Quaternion(q) => write!(f, "{q}"),
            Value::Polynomial(p) => write!(f, "{p}"),
            Value::Matrix(m) => write!(f, "{m}"),
        }
    }
}
