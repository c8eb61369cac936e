//! Algebraic types of expressions: a concrete carrier plus the set of
//! structures it satisfies.

use std::fmt;

use crate::error::{Error, Result};
use crate::structure::{builtin_registry, StructureName};

/// The algebraic type of a value or expression.
///
/// A tag names a concrete carrier; the set of satisfied structures is
/// derived from it. Claims are fixed per carrier: `Quaternion` never claims
/// `Field` (its multiplication is non-commutative) and `Integer` never
/// claims `DivisionRing` (2 has no integer inverse).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeTag {
    Integer,
    Rational,
    ComplexQ,
    Quaternion,
    Polynomial(Box<TypeTag>),
    Matrix(Box<TypeTag>, usize),
}

impl TypeTag {
    pub fn polynomial(coeff: TypeTag) -> TypeTag {
        TypeTag::Polynomial(Box::new(coeff))
    }

    pub fn matrix(entry: TypeTag, n: usize) -> TypeTag {
        TypeTag::Matrix(Box::new(entry), n)
    }

    /// Check parameter invariants: polynomial coefficients must form a
    /// commutative ring and matrices must have positive dimension.
    pub fn validate(&self) -> Result<()> {
        match self {
            TypeTag::Polynomial(coeff) => {
                coeff.validate()?;
                if !coeff.is_commutative() {
                    return Err(Error::InvalidType {
                        tag: self.to_string(),
                        msg: "polynomial coefficients must form a commutative ring".into(),
                    });
                }
                Ok(())
            }
            TypeTag::Matrix(entry, n) => {
                entry.validate()?;
                if *n == 0 {
                    return Err(Error::InvalidType {
                        tag: self.to_string(),
                        msg: "matrix dimension must be at least 1".into(),
                    });
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Structures the carrier claims directly.
    fn declared(&self) -> &'static [StructureName] {
        use StructureName::*;
        match self {
            TypeTag::Integer => &[Ring],
            TypeTag::Rational | TypeTag::ComplexQ => &[Field],
            TypeTag::Quaternion => &[Algebra, DivisionRing],
            TypeTag::Polynomial(_) => &[Ring, Module],
            TypeTag::Matrix(..) => &[Algebra],
        }
    }

    /// The full satisfied set (declared structures plus their ancestors),
    /// in most-specific-first display order.
    pub fn satisfied(&self) -> Vec<StructureName> {
        let reg = builtin_registry();
        let mut closure = std::collections::BTreeSet::new();
        for &name in self.declared() {
            closure.extend(reg.closure(name));
        }
        StructureName::DISPLAY
            .iter()
            .copied()
            .filter(|n| closure.contains(n))
            .collect()
    }

    /// Does this tag satisfy `kind` (directly or through a descendant)?
    pub fn satisfies(&self, kind: StructureName) -> bool {
        builtin_registry().satisfies(self, kind)
    }

    /// True for carriers with commutative multiplication. Determines whether
    /// the `comm_mul` law is part of the carrier's law suite.
    pub fn is_commutative(&self) -> bool {
        match self {
            TypeTag::Integer | TypeTag::Rational | TypeTag::ComplexQ => true,
            TypeTag::Quaternion | TypeTag::Matrix(..) => false,
            TypeTag::Polynomial(coeff) => coeff.is_commutative(),
        }
    }

    /// Carriers that embed into polynomials and matrices as constants.
    pub fn is_scalar(&self) -> bool {
        matches!(
            self,
            TypeTag::Integer | TypeTag::Rational | TypeTag::ComplexQ | TypeTag::Quaternion
        )
    }

    /// Result tag of `Norm` on this carrier, when it has one.
    pub fn norm_tag(&self) -> Option<TypeTag> {
        match self {
            TypeTag::Quaternion => Some(TypeTag::Rational),
            TypeTag::Matrix(entry, _) => Some((**entry).clone()),
            _ => None,
        }
    }

    /// Directed coercion: can a value of this tag embed into `other`?
    ///
    /// The lattice is deliberately small: Integer -> Rational -> ComplexQ,
    /// Integer/Rational -> Quaternion, and any scalar into Polynomial(T) or
    /// Matrix(T, n) whose coefficient type it reaches. ComplexQ does not
    /// embed into Quaternion.
    pub fn coerces_to(&self, other: &TypeTag) -> bool {
        if self == other {
            return true;
        }
        match (self, other) {
            (TypeTag::Integer, TypeTag::Rational | TypeTag::ComplexQ | TypeTag::Quaternion) => {
                true
            }
            (TypeTag::Rational, TypeTag::ComplexQ | TypeTag::Quaternion) => true,
            (s, TypeTag::Polynomial(coeff)) if s.is_scalar() => s.coerces_to(coeff),
            (s, TypeTag::Matrix(entry, _)) if s.is_scalar() => s.coerces_to(entry),
            _ => false,
        }
    }

    /// Least common carrier of two tags under the coercion lattice.
    pub fn join(&self, other: &TypeTag) -> Option<TypeTag> {
        if self.coerces_to(other) {
            Some(other.clone())
        } else if other.coerces_to(self) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::Integer => f.write_str("Integer"),
            TypeTag::Rational => f.write_str("Rational"),
            TypeTag::ComplexQ => f.write_str("ComplexQ"),
            TypeTag::Quaternion => f.write_str("Quaternion"),
            TypeTag::Polynomial(coeff) => write!(f, "Polynomial({coeff})"),
            TypeTag::Matrix(entry, n) => write!(f, "Matrix({entry}, {n})"),
        }
    }
}
