//! Quaternions with exact rational components under the Hamilton product.

use std::fmt;

use num::{One, Zero};

use super::{linear_combination, Rat};

/// `a0 + a1*i + a2*j + a3*k` with `i^2 = j^2 = k^2 = -1`, `i*j = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub c: [Rat; 4],
}

impl Quaternion {
    pub fn new(a0: Rat, a1: Rat, a2: Rat, a3: Rat) -> Quaternion {
        Quaternion { c: [a0, a1, a2, a3] }
    }

    pub fn scalar(a0: Rat) -> Quaternion {
        Quaternion::new(a0, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn zero() -> Quaternion {
        Quaternion::scalar(Rat::zero())
    }

    pub fn one() -> Quaternion {
        Quaternion::scalar(Rat::one())
    }

    pub fn i() -> Quaternion {
        Quaternion::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn j() -> Quaternion {
        Quaternion::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn k() -> Quaternion {
        Quaternion::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Quaternion) -> Quaternion {
        Quaternion {
            c: std::array::from_fn(|n| &self.c[n] + &other.c[n]),
        }
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion {
            c: std::array::from_fn(|n| -self.c[n].clone()),
        }
    }

    /// Hamilton product.
    pub fn mul(&self, other: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &other.c;
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(
            self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        )
    }

    /// Reduced norm `a0^2 + a1^2 + a2^2 + a3^2`. Rational, nonnegative, and
    /// zero exactly on the zero quaternion.
    pub fn norm(&self) -> Rat {
        self.c.iter().map(|a| a * a).sum()
    }

    /// `conj(q) / norm(q)`; `None` on zero.
    pub fn inversion(&self) -> Option<Quaternion> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let conj = self.conj();
        Some(Quaternion {
            c: std::array::from_fn(|idx| &conj.c[idx] / &n),
        })
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&linear_combination(&[
            (&self.c[0], ""),
            (&self.c[1], "i"),
            (&self.c[2], "j"),
            (&self.c[3], "k"),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quaternion::one().neg());
    }

    #[test]
    fn expansion_example() {
        // (1 + i)(1 + j) = 1 + i + j + k
        let a = Quaternion::one().add(&Quaternion::i());
        let b = Quaternion::one().add(&Quaternion::j());
        let expected = Quaternion::new(int(1), int(1), int(1), int(1));
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn norm_examples() {
        let q = Quaternion::new(int(1), int(1), int(1), int(1));
        assert_eq!(q.norm(), int(4));
        assert_eq!(Quaternion::zero().norm(), int(0));
        // norm(q1*q2) = norm(q1)*norm(q2): 4 = 2*2
        let a = Quaternion::one().add(&Quaternion::i());
        let b = Quaternion::one().add(&Quaternion::j());
        assert_eq!(a.mul(&b).norm(), int(4));
        assert_eq!(a.norm() * b.norm(), int(4));
    }

    #[test]
    fn inversion_against_unit() {
        let q = Quaternion::new(int(1), int(1), int(1), int(1));
        let inv = q.inversion().unwrap();
        assert!(q.mul(&inv).is_one());
        assert!(inv.mul(&q).is_one());
        assert!(Quaternion::zero().inversion().is_none());
    }

    #[test]
    fn rendering() {
        let q = Quaternion::new(int(1), int(2), int(3), int(4));
        assert_eq!(q.to_string(), "1 + 2*i + 3*j + 4*k");
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(Quaternion::j().neg().to_string(), "-j");
    }
}
