//! Complex numbers with exact rational components.

use std::fmt;

use num::{One, Zero};

use super::{linear_combination, Rat};

/// `re + im*i` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexQ {
    pub re: Rat,
    pub im: Rat,
}

impl ComplexQ {
    pub fn new(re: Rat, im: Rat) -> ComplexQ {
        ComplexQ { re, im }
    }

    pub fn real(re: Rat) -> ComplexQ {
        ComplexQ::new(re, Rat::zero())
    }

    pub fn zero() -> ComplexQ {
        ComplexQ::real(Rat::zero())
    }

    pub fn one() -> ComplexQ {
        ComplexQ::real(Rat::one())
    }

    /// The imaginary unit.
    pub fn i() -> ComplexQ {
        ComplexQ::new(Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, other: &ComplexQ) -> ComplexQ {
        ComplexQ::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn neg(&self) -> ComplexQ {
        ComplexQ::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, other: &ComplexQ) -> ComplexQ {
        ComplexQ::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    pub fn conj(&self) -> ComplexQ {
        ComplexQ::new(self.re.clone(), -self.im.clone())
    }

    /// `None` on zero.
    pub fn inversion(&self) -> Option<ComplexQ> {
        if self.is_zero() {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(ComplexQ::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl fmt::Display for ComplexQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&linear_combination(&[(&self.re, ""), (&self.im, "i")]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = ComplexQ::i();
        assert_eq!(i.mul(&i), ComplexQ::real(rat(-1, 1)));
    }

    #[test]
    fn inversion_multiplies_to_one() {
        let z = ComplexQ::new(rat(1, 2), rat(-3, 4));
        let inv = z.inversion().unwrap();
        assert!(z.mul(&inv).is_one());
        assert!(ComplexQ::zero().inversion().is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(ComplexQ::new(rat(0, 1), rat(2, 1)).to_string(), "2*i");
        assert_eq!(ComplexQ::new(rat(1, 1), rat(-1, 1)).to_string(), "1 - i");
        assert_eq!(ComplexQ::zero().to_string(), "0");
        assert_eq!(ComplexQ::new(rat(-1, 2), rat(0, 1)).to_string(), "-1/2");
    }
}
