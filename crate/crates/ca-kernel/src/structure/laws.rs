//! Testable laws attached to the structure lattice.
//!
//! Each law is an equation between two small term schemas over schematic
//! variables. Checking instantiates the schema over tuples of exact values
//! and compares both sides with exact equality — no tolerances anywhere.

use std::fmt;
use std::sync::LazyLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tag::TypeTag;
use crate::value::sample::{sample_nonzero, sample_value};
use crate::value::Value;

use super::{builtin_registry, StructureName};

/// Names of the built-in laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawName {
    AssocAdd,
    CommAdd,
    AddIdentity,
    AddInverse,
    AssocMul,
    MulIdentity,
    DistribLeft,
    DistribRight,
    CommMul,
    MulInverse,
    NormMultiplicative,
}

impl LawName {
    pub const ALL: [LawName; 11] = [
        LawName::AssocAdd,
        LawName::CommAdd,
        LawName::AddIdentity,
        LawName::AddInverse,
        LawName::AssocMul,
        LawName::MulIdentity,
        LawName::DistribLeft,
        LawName::DistribRight,
        LawName::CommMul,
        LawName::MulInverse,
        LawName::NormMultiplicative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawName::AssocAdd => "assoc_add",
            LawName::CommAdd => "comm_add",
            LawName::AddIdentity => "add_identity",
            LawName::AddInverse => "add_inverse",
            LawName::AssocMul => "assoc_mul",
            LawName::MulIdentity => "mul_identity",
            LawName::DistribLeft => "distrib_left",
            LawName::DistribRight => "distrib_right",
            LawName::CommMul => "comm_mul",
            LawName::MulInverse => "mul_inverse",
            LawName::NormMultiplicative => "norm_multiplicative",
        }
    }

    /// The structure whose contract owns this law.
    pub fn owner(self) -> StructureName {
        match self {
            LawName::AssocAdd => StructureName::Semigroup,
            LawName::AddIdentity | LawName::AddInverse => StructureName::Group,
            LawName::CommAdd => StructureName::Module,
            LawName::AssocMul
            | LawName::MulIdentity
            | LawName::DistribLeft
            | LawName::DistribRight => StructureName::Ring,
            LawName::MulInverse => StructureName::DivisionRing,
            LawName::CommMul => StructureName::Field,
            LawName::NormMultiplicative => StructureName::Algebra,
        }
    }
}

impl fmt::Display for LawName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of an equation schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Zero,
    Unit,
    Add(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Inversion(Box<Term>),
    Norm(Box<Term>),
}

impl Term {
    fn eval(&self, tag: &TypeTag, assign: &[Value]) -> Result<Value> {
        match self {
            Term::Var(n) => Ok(assign[*n].clone()),
            Term::Zero => Ok(Value::zero(tag)),
            Term::Unit => Ok(Value::unit(tag)),
            Term::Add(a, b) => a.eval(tag, assign)?.add(&b.eval(tag, assign)?),
            Term::Neg(a) => Ok(a.eval(tag, assign)?.neg()),
            Term::Mul(a, b) => a.eval(tag, assign)?.mul(&b.eval(tag, assign)?),
            Term::Inversion(a) => a.eval(tag, assign)?.inversion(),
            Term::Norm(a) => a.eval(tag, assign)?.norm(),
        }
    }

    fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(n) => out.push(*n),
            Term::Zero | Term::Unit => {}
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Term::Neg(a) | Term::Inversion(a) | Term::Norm(a) => a.vars(out),
        }
    }
}

/// A law: equation schema plus the variable count and any nonzero-variable
/// side conditions (mul_inverse quantifies over nonzero elements only).
///
/// `requires` is the weakest structure whose signature makes both terms
/// well-formed. It can sit below [`LawName::owner`]: `comm_mul` is owned by
/// `Field` but checkable on any ring — that is how a quaternion
/// counterexample to commutativity is produced at all.
#[derive(Debug, Clone)]
pub struct Law {
    pub name: LawName,
    pub vars: usize,
    pub lhs: Term,
    pub rhs: Term,
    pub nonzero: &'static [usize],
    pub requires: StructureName,
}

fn var(n: usize) -> Term {
    Term::Var(n)
}
fn add(a: Term, b: Term) -> Term {
    Term::Add(Box::new(a), Box::new(b))
}
fn mul(a: Term, b: Term) -> Term {
    Term::Mul(Box::new(a), Box::new(b))
}
fn neg(a: Term) -> Term {
    Term::Neg(Box::new(a))
}
fn inv(a: Term) -> Term {
    Term::Inversion(Box::new(a))
}
fn norm(a: Term) -> Term {
    Term::Norm(Box::new(a))
}

static LAWS: LazyLock<Vec<Law>> = LazyLock::new(|| {
    vec![
        Law {
            name: LawName::AssocAdd,
            vars: 3,
            lhs: add(add(var(0), var(1)), var(2)),
            rhs: add(var(0), add(var(1), var(2))),
            nonzero: &[],
            requires: StructureName::Semigroup,
        },
        Law {
            name: LawName::CommAdd,
            vars: 2,
            lhs: add(var(0), var(1)),
            rhs: add(var(1), var(0)),
            nonzero: &[],
            requires: StructureName::Semigroup,
        },
        Law {
            name: LawName::AddIdentity,
            vars: 1,
            lhs: add(var(0), Term::Zero),
            rhs: var(0),
            nonzero: &[],
            requires: StructureName::Group,
        },
        Law {
            name: LawName::AddInverse,
            vars: 1,
            lhs: add(var(0), neg(var(0))),
            rhs: Term::Zero,
            nonzero: &[],
            requires: StructureName::Group,
        },
        Law {
            name: LawName::AssocMul,
            vars: 3,
            lhs: mul(mul(var(0), var(1)), var(2)),
            rhs: mul(var(0), mul(var(1), var(2))),
            nonzero: &[],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::MulIdentity,
            vars: 1,
            lhs: mul(var(0), Term::Unit),
            rhs: var(0),
            nonzero: &[],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::DistribLeft,
            vars: 3,
            lhs: mul(var(0), add(var(1), var(2))),
            rhs: add(mul(var(0), var(1)), mul(var(0), var(2))),
            nonzero: &[],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::DistribRight,
            vars: 3,
            lhs: mul(add(var(0), var(1)), var(2)),
            rhs: add(mul(var(0), var(2)), mul(var(1), var(2))),
            nonzero: &[],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::CommMul,
            vars: 2,
            lhs: mul(var(0), var(1)),
            rhs: mul(var(1), var(0)),
            nonzero: &[],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::MulInverse,
            vars: 1,
            lhs: mul(var(0), inv(var(0))),
            rhs: Term::Unit,
            nonzero: &[0],
            requires: StructureName::Ring,
        },
        Law {
            name: LawName::NormMultiplicative,
            vars: 2,
            lhs: norm(mul(var(0), var(1))),
            rhs: mul(norm(var(0)), norm(var(1))),
            nonzero: &[],
            requires: StructureName::Algebra,
        },
    ]
});

impl Law {
    pub fn of(name: LawName) -> &'static Law {
        LAWS.iter().find(|l| l.name == name).expect("built-in law")
    }

    /// Indices mentioned across both sides, deduplicated.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.lhs.vars(&mut out);
        self.rhs.vars(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Outcome of a law check.
#[derive(Debug, Clone, PartialEq)]
pub enum LawReport {
    Pass {
        cases: usize,
    },
    Counterexample {
        law: LawName,
        assignment: Vec<Value>,
        lhs: Value,
        rhs: Value,
    },
}

impl LawReport {
    pub fn passed(&self) -> bool {
        matches!(self, LawReport::Pass { .. })
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawReport::Pass { cases } => write!(f, "pass ({cases} cases)"),
            LawReport::Counterexample {
                law,
                assignment,
                lhs,
                rhs,
            } => {
                let vals: Vec<String> = assignment.iter().map(Value::to_string).collect();
                write!(
                    f,
                    "counterexample to {law} at ({}): {lhs} != {rhs}",
                    vals.join(", ")
                )
            }
        }
    }
}

fn applicability(tag: &TypeTag, name: LawName) -> Result<&'static Law> {
    let law = Law::of(name);
    if !tag.satisfies(law.requires) {
        return Err(Error::LawInapplicable {
            law: name.to_string(),
            tag: tag.to_string(),
        });
    }
    Ok(law)
}

fn check_tuple(law: &Law, tag: &TypeTag, assign: &[Value]) -> Result<Option<LawReport>> {
    let lhs = law.lhs.eval(tag, assign)?;
    let rhs = law.rhs.eval(tag, assign)?;
    if lhs == rhs {
        Ok(None)
    } else {
        Ok(Some(LawReport::Counterexample {
            law: law.name,
            assignment: assign.to_vec(),
            lhs,
            rhs,
        }))
    }
}

/// Check a law over every tuple drawn from `samples` (one sample per
/// schematic variable). Tuples violating a nonzero side condition are
/// skipped. Returns the first counterexample, if any.
pub fn check_law(tag: &TypeTag, samples: &[Value], name: LawName) -> Result<LawReport> {
    let law = applicability(tag, name)?;
    for s in samples {
        if s.tag() != *tag {
            return Err(Error::TypeMismatch {
                expected: tag.to_string(),
                got: s.tag().to_string(),
            });
        }
    }
    let mut cases = 0;
    let mut idx = vec![0usize; law.vars];
    if samples.is_empty() && law.vars > 0 {
        return Ok(LawReport::Pass { cases: 0 });
    }
    loop {
        let assign: Vec<Value> = idx.iter().map(|&n| samples[n].clone()).collect();
        if law.nonzero.iter().all(|&n| !assign[n].is_zero()) {
            cases += 1;
            if let Some(counter) = check_tuple(law, tag, &assign)? {
                return Ok(counter);
            }
        }
        // nested-loop order: the rightmost variable varies fastest
        let mut place = idx.len();
        loop {
            if place == 0 {
                return Ok(LawReport::Pass { cases });
            }
            place -= 1;
            idx[place] += 1;
            if idx[place] < samples.len() {
                break;
            }
            idx[place] = 0;
        }
    }
}

/// Check a law over `count` random tuples with components drawn from the
/// default small-value generator, deterministically from `seed`.
pub fn check_law_sampled(
    tag: &TypeTag,
    name: LawName,
    seed: u64,
    count: usize,
) -> Result<LawReport> {
    let law = applicability(tag, name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let assign: Vec<Value> = (0..law.vars)
            .map(|n| {
                if law.nonzero.contains(&n) {
                    sample_nonzero(tag, &mut rng)
                } else {
                    sample_value(tag, &mut rng)
                }
            })
            .collect();
        if let Some(counter) = check_tuple(law, tag, &assign)? {
            return Ok(counter);
        }
    }
    Ok(LawReport::Pass { cases: count })
}

/// The law suite a carrier claims: every law of every satisfied structure,
/// plus `comm_mul` for commutative carriers that stop short of `Field`
/// (integers and polynomials are commutative rings without inverses).
pub fn claimed_laws(tag: &TypeTag) -> Vec<LawName> {
    let reg = builtin_registry();
    let mut out: Vec<LawName> = Vec::new();
    for kind in reg.kinds() {
        if reg.satisfies(tag, kind.name) {
            for &law in &kind.laws {
                if !out.contains(&law) {
                    out.push(law);
                }
            }
        }
    }
    if tag.is_commutative() && !out.contains(&LawName::CommMul) {
        out.push(LawName::CommMul);
    }
    out
}
