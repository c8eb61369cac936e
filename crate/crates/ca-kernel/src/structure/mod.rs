//! The abstract algebraic structures and their inheritance lattice.
//!
//! A [`StructureKind`] is an abstract basic type: it names no data, only the
//! operator signatures, constants, and laws a carrier must provide to claim
//! it. The built-in lattice is fixed:
//!
//! ```text
//! Semigroup <- Group <- Module <- Ring <- DivisionRing <- Field
//!                                  ^--------- Algebra (also inherits Module)
//! ```
//!
//! `Module` here is an additive abelian group whose unit is called `Zero`;
//! the scalar action is attached at `Algebra`.

pub mod laws;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::LazyLock;

use crate::tag::TypeTag;

pub use laws::{check_law, check_law_sampled, claimed_laws, Law, LawName, LawReport};

/// Name of a built-in abstract structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureName {
    Semigroup,
    Group,
    Module,
    Ring,
    DivisionRing,
    Field,
    Algebra,
}

impl StructureName {
    /// All structures, in lattice order (parents before children).
    pub const ALL: [StructureName; 7] = [
        StructureName::Semigroup,
        StructureName::Group,
        StructureName::Module,
        StructureName::Ring,
        StructureName::DivisionRing,
        StructureName::Field,
        StructureName::Algebra,
    ];

    /// Most-specific-first ordering used when rendering satisfied sets.
    pub const DISPLAY: [StructureName; 7] = [
        StructureName::Algebra,
        StructureName::Field,
        StructureName::DivisionRing,
        StructureName::Ring,
        StructureName::Module,
        StructureName::Group,
        StructureName::Semigroup,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructureName::Semigroup => "Semigroup",
            StructureName::Group => "Group",
            StructureName::Module => "Module",
            StructureName::Ring => "Ring",
            StructureName::DivisionRing => "DivisionRing",
            StructureName::Field => "Field",
            StructureName::Algebra => "Algebra",
        }
    }
}

impl fmt::Display for StructureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Operator symbols that may appear in a structure signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpSymbol {
    Add,
    /// Binary `-`.
    Sub,
    /// Unary `-`.
    Neg,
    Mul,
    Div,
    Inversion,
    Norm,
    Conj,
}

impl OpSymbol {
    pub fn text(self) -> &'static str {
        match self {
            OpSymbol::Add => "+",
            OpSymbol::Sub | OpSymbol::Neg => "-",
            OpSymbol::Mul => "*",
            OpSymbol::Div => "/",
            OpSymbol::Inversion => "Inversion",
            OpSymbol::Norm => "Norm",
            OpSymbol::Conj => "Conj",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            OpSymbol::Neg | OpSymbol::Inversion | OpSymbol::Norm | OpSymbol::Conj => 1,
            _ => 2,
        }
    }

    /// Named members are rendered as `function`, symbolic ones as `operation`.
    pub fn is_function(self) -> bool {
        matches!(self, OpSymbol::Inversion | OpSymbol::Norm | OpSymbol::Conj)
    }
}

/// Signature of a required operator.
///
/// `operands` holds one structure name per operand; for every signature the
/// paper lists the operands coincide, the scalar action of `Algebra` is the
/// single mixed-operand case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpSignature {
    pub symbol: OpSymbol,
    pub operands: Vec<StructureName>,
    pub result: StructureName,
}

impl OpSignature {
    fn homogeneous(symbol: OpSymbol, on: StructureName) -> Self {
        OpSignature {
            symbol,
            operands: vec![on; symbol.arity()],
            result: on,
        }
    }

    pub fn arity(&self) -> usize {
        self.operands.len()
    }
}

/// Role of a required constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstRole {
    Zero,
    Unit,
}

impl ConstRole {
    pub fn name(self) -> &'static str {
        match self {
            ConstRole::Zero => "Zero",
            ConstRole::Unit => "Unit",
        }
    }
}

/// A required constant, typed at the structure that declares it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstDecl {
    pub role: ConstRole,
    pub structure: StructureName,
}

/// One node of the structure lattice.
#[derive(Debug, Clone)]
pub struct StructureKind {
    pub name: StructureName,
    pub parents: Vec<StructureName>,
    pub required_ops: Vec<OpSignature>,
    pub required_consts: Vec<ConstDecl>,
    pub laws: Vec<LawName>,
}

/// The immutable registry of built-in structures.
///
/// Construction happens once; afterwards every operation is a pure read, so
/// the registry may be shared freely between threads.
#[derive(Debug)]
pub struct Registry {
    kinds: Vec<StructureKind>,
}

static BUILTIN: LazyLock<Registry> = LazyLock::new(Registry::build);

/// The fixed built-in registry.
pub fn builtin_registry() -> &'static Registry {
    &BUILTIN
}

impl Registry {
    fn build() -> Registry {
        use ConstRole::*;
        use OpSymbol::*;
        use StructureName::*;

        let kinds = vec![
            StructureKind {
                name: Semigroup,
                parents: vec![],
                required_ops: vec![OpSignature::homogeneous(Add, Semigroup)],
                required_consts: vec![],
                laws: vec![LawName::AssocAdd],
            },
            StructureKind {
                name: Group,
                parents: vec![Semigroup],
                required_ops: vec![
                    OpSignature::homogeneous(Sub, Group),
                    OpSignature::homogeneous(Neg, Group),
                ],
                required_consts: vec![ConstDecl {
                    role: Zero,
                    structure: Group,
                }],
                laws: vec![LawName::AddIdentity, LawName::AddInverse],
            },
            // Module restates the whole additive signature so its class
            // declaration reads exactly like the source listing.
            StructureKind {
                name: Module,
                parents: vec![Group],
                required_ops: vec![
                    OpSignature::homogeneous(Add, Module),
                    OpSignature::homogeneous(Sub, Module),
                    OpSignature::homogeneous(Neg, Module),
                ],
                required_consts: vec![ConstDecl {
                    role: Zero,
                    structure: Module,
                }],
                laws: vec![LawName::CommAdd],
            },
            StructureKind {
                name: Ring,
                parents: vec![Module],
                required_ops: vec![
                    OpSignature::homogeneous(Mul, Ring),
                    // `/` and Inversion are partial here: they may fail on
                    // non-invertible elements. DivisionRing strengthens the
                    // contract to "total on nonzero".
                    OpSignature::homogeneous(Div, Ring),
                    OpSignature::homogeneous(Inversion, Ring),
                ],
                required_consts: vec![ConstDecl {
                    role: Unit,
                    structure: Ring,
                }],
                laws: vec![
                    LawName::AssocMul,
                    LawName::MulIdentity,
                    LawName::DistribLeft,
                    LawName::DistribRight,
                ],
            },
            StructureKind {
                name: DivisionRing,
                parents: vec![Ring],
                required_ops: vec![],
                required_consts: vec![],
                laws: vec![LawName::MulInverse],
            },
            StructureKind {
                name: Field,
                parents: vec![DivisionRing],
                required_ops: vec![],
                required_consts: vec![],
                laws: vec![LawName::CommMul],
            },
            StructureKind {
                name: Algebra,
                parents: vec![Ring, Module],
                required_ops: vec![
                    // Scalar action: the first operand is the scalar side.
                    OpSignature {
                        symbol: Mul,
                        operands: vec![Field, Algebra],
                        result: Algebra,
                    },
                    OpSignature {
                        symbol: Norm,
                        operands: vec![Algebra],
                        result: Field,
                    },
                ],
                required_consts: vec![],
                laws: vec![LawName::NormMultiplicative],
            },
        ];

        let registry = Registry { kinds };
        debug_assert!(registry.acyclic());
        registry
    }

    fn acyclic(&self) -> bool {
        // Parents always precede children in `kinds`, which rules out cycles.
        self.kinds.iter().enumerate().all(|(idx, kind)| {
            kind.parents
                .iter()
                .all(|p| self.kinds[..idx].iter().any(|k| k.name == *p))
        })
    }

    /// All kinds in lattice order.
    pub fn kinds(&self) -> &[StructureKind] {
        &self.kinds
    }

    pub fn kind(&self, name: StructureName) -> &StructureKind {
        self.kinds
            .iter()
            .find(|k| k.name == name)
            .expect("built-in structure")
    }

    /// `name` together with all its transitive ancestors.
    pub fn closure(&self, name: StructureName) -> BTreeSet<StructureName> {
        let mut out = BTreeSet::new();
        let mut stack = vec![name];
        while let Some(n) = stack.pop() {
            if out.insert(n) {
                stack.extend(self.kind(n).parents.iter().copied());
            }
        }
        out
    }

    /// Is `a` equal to `b` or a descendant of it?
    pub fn descends(&self, a: StructureName, b: StructureName) -> bool {
        self.closure(a).contains(&b)
    }

    /// Most specific common ancestor of `a` and `b`, if a unique one exists.
    pub fn join(&self, a: StructureName, b: StructureName) -> Option<StructureName> {
        let common: Vec<StructureName> = self
            .closure(a)
            .intersection(&self.closure(b))
            .copied()
            .collect();
        // A candidate is most specific when every other common ancestor is
        // above it.
        common
            .iter()
            .copied()
            .find(|&c| common.iter().all(|&other| self.descends(c, other)))
    }

    /// Effective operator requirements: own plus inherited, parents first.
    pub fn effective_ops(&self, name: StructureName) -> Vec<&OpSignature> {
        let closure = self.closure(name);
        self.kinds
            .iter()
            .filter(|k| closure.contains(&k.name))
            .flat_map(|k| k.required_ops.iter())
            .collect()
    }

    /// Effective constant requirements: own plus inherited.
    pub fn effective_consts(&self, name: StructureName) -> Vec<&ConstDecl> {
        let closure = self.closure(name);
        self.kinds
            .iter()
            .filter(|k| closure.contains(&k.name))
            .flat_map(|k| k.required_consts.iter())
            .collect()
    }

    /// Laws owned by `name` and its ancestors.
    pub fn effective_laws(&self, name: StructureName) -> Vec<LawName> {
        let closure = self.closure(name);
        self.kinds
            .iter()
            .filter(|k| closure.contains(&k.name))
            .flat_map(|k| k.laws.iter().copied())
            .collect()
    }

    /// Does the carrier behind `tag` satisfy `kind`?
    ///
    /// True iff the tag claims `kind` itself or any descendant of it.
    pub fn satisfies(&self, tag: &TypeTag, kind: StructureName) -> bool {
        tag.satisfied()
            .iter()
            .any(|&claimed| self.descends(claimed, kind))
    }
}
