//! Square matrices over an arbitrary entry carrier.

use std::fmt;

use crate::error::{Error, Result};
use crate::structure::StructureName;
use crate::tag::TypeTag;

use super::Value;

/// An `n x n` matrix, entries stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    entry_tag: TypeTag,
    n: usize,
    entries: Vec<Value>,
}

impl Matrix {
    pub fn new(entry_tag: TypeTag, n: usize, entries: Vec<Value>) -> Result<Matrix> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidType {
                tag: format!("Matrix({entry_tag}, {n})"),
                msg: format!("expected {} entries, got {}", n * n, entries.len()),
            });
        }
        for e in &entries {
            if e.tag() != entry_tag {
                return Err(Error::TypeMismatch {
                    expected: entry_tag.to_string(),
                    got: e.tag().to_string(),
                });
            }
        }
        Ok(Matrix {
            entry_tag,
            n,
            entries,
        })
    }

    pub fn zero(entry_tag: TypeTag, n: usize) -> Matrix {
        Matrix {
            entries: vec![Value::zero(&entry_tag); n * n],
            entry_tag,
            n,
        }
    }

    pub fn identity(entry_tag: TypeTag, n: usize) -> Matrix {
        Matrix::scalar_diagonal(entry_tag.clone(), n, Value::unit(&entry_tag))
    }

    /// `c` on the diagonal, zero elsewhere: the scalar embedding.
    pub fn scalar_diagonal(entry_tag: TypeTag, n: usize, c: Value) -> Matrix {
        let mut m = Matrix::zero(entry_tag, n);
        for row in 0..n {
            m.entries[row * n + row] = c.clone();
        }
        m
    }

    pub fn entry_tag(&self) -> &TypeTag {
        &self.entry_tag
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Value {
        &self.entries[row * self.n + col]
    }

    pub fn same_shape(&self, other: &Matrix) -> bool {
        self.entry_tag == other.entry_tag && self.n == other.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Value::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Matrix::identity(self.entry_tag.clone(), self.n)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            entry_tag: self.entry_tag.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            entry_tag: self.entry_tag.clone(),
            n: self.n,
            entries: self.entries.iter().map(Value::neg).collect(),
        }
    }

    /// Row-by-column product.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                let mut acc = Value::zero(&self.entry_tag);
                for t in 0..n {
                    acc = acc.add(&self.get(row, t).mul(other.get(t, col))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            entry_tag: self.entry_tag.clone(),
            n,
            entries,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                entries.push(self.get(col, row).clone());
            }
        }
        Matrix {
            entry_tag: self.entry_tag.clone(),
            n,
            entries,
        }
    }

    fn require_field(&self) -> Result<()> {
        if self.entry_tag.satisfies(StructureName::Field) {
            Ok(())
        } else {
            Err(Error::FieldRequired {
                tag: self.entry_tag.to_string(),
            })
        }
    }

    /// Exact determinant by Gaussian elimination over field entries.
    /// Zero exactly when the matrix is not invertible.
    pub fn det(&self) -> Result<Value> {
        self.require_field()?;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = Value::unit(&self.entry_tag);
        let mut negate = false;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&row| !m[row * n + col].is_zero()) else {
                return Ok(Value::zero(&self.entry_tag));
            };
            if pivot != col {
                for t in 0..n {
                    m.swap(pivot * n + t, col * n + t);
                }
                negate = !negate;
            }
            let pivot_val = m[col * n + col].clone();
            det = det.mul(&pivot_val)?;
            for row in col + 1..n {
                let factor = m[row * n + col].div(&pivot_val)?;
                for t in col..n {
                    let delta = factor.mul(&m[col * n + t])?;
                    m[row * n + t] = m[row * n + t].sub(&delta)?;
                }
            }
        }
        Ok(if negate { det.neg() } else { det })
    }

    /// Exact inverse by Gauss-Jordan elimination; requires field entries and
    /// a nonzero determinant.
    pub fn inversion(&self) -> Result<Matrix> {
        self.require_field()?;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = Matrix::identity(self.entry_tag.clone(), n).entries;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&row| !m[row * n + col].is_zero()) else {
                return Err(Error::NotInvertible {
                    value: self.to_string(),
                });
            };
            if pivot != col {
                for t in 0..n {
                    m.swap(pivot * n + t, col * n + t);
                    inv.swap(pivot * n + t, col * n + t);
                }
            }
            let pivot_val = m[col * n + col].clone();
            for t in 0..n {
                m[col * n + t] = m[col * n + t].div(&pivot_val)?;
                inv[col * n + t] = inv[col * n + t].div(&pivot_val)?;
            }
            for row in 0..n {
                if row == col || m[row * n + col].is_zero() {
                    continue;
                }
                let factor = m[row * n + col].clone();
                for t in 0..n {
                    let dm = factor.mul(&m[col * n + t])?;
                    m[row * n + t] = m[row * n + t].sub(&dm)?;
                    let di = factor.mul(&inv[col * n + t])?;
                    inv[row * n + t] = inv[row * n + t].sub(&di)?;
                }
            }
        }
        Ok(Matrix {
            entry_tag: self.entry_tag.clone(),
            n,
            entries: inv,
        })
    }
}

impl fmt::Display for Matrix {
    /// Row-major `[[...],[...]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for row in 0..self.n {
            if row > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for col in 0..self.n {
                if col > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(row, col))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_matrix(vals: [i64; 4]) -> Matrix {
        Matrix::new(
            TypeTag::Rational,
            2,
            vals.iter().map(|&v| Value::rational(v, 1)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            rat_matrix([1, 2, 3, 4]).det().unwrap(),
            Value::rational(-2, 1)
        );
        assert_eq!(
            Matrix::identity(TypeTag::Rational, 3).det().unwrap(),
            Value::rational(1, 1)
        );
        // repeated rows are linearly dependent
        assert_eq!(
            rat_matrix([1, 2, 1, 2]).det().unwrap(),
            Value::rational(0, 1)
        );
    }

    #[test]
    fn inversion_example() {
        let a = rat_matrix([1, 2, 3, 4]);
        let inv = a.inversion().unwrap();
        let expected = Matrix::new(
            TypeTag::Rational,
            2,
            vec![
                Value::rational(-2, 1),
                Value::rational(1, 1),
                Value::rational(3, 2),
                Value::rational(-1, 2),
            ],
        )
        .unwrap();
        assert_eq!(inv, expected);
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn singular_matrices_do_not_invert() {
        assert!(rat_matrix([1, 2, 2, 4]).inversion().is_err());
    }

    #[test]
    fn integer_entries_are_not_a_field() {
        let m = Matrix::identity(TypeTag::Integer, 2);
        assert!(matches!(m.det(), Err(Error::FieldRequired { .. })));
    }

    #[test]
    fn transpose_reverses_products() {
        let a = rat_matrix([1, 2, 3, 4]);
        let b = rat_matrix([0, 1, 5, 2]);
        let lhs = a.mul(&b).unwrap().transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendering() {
        let a = rat_matrix([1, 2, 3, 4]);
        assert_eq!(a.to_string(), "[[1,2],[3,4]]");
    }
}
