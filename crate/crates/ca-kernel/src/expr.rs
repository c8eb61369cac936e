//! Expression trees and their type discipline.
//!
//! A variable can mean three things: a bound value, a free symbol of a known
//! type, or the value of a function with (maybe partially) unknown
//! arguments. [`Expr`] has exactly one variant per meaning, and the three
//! variants of the same tag are mutually substitutable everywhere — that is
//! the compatibility rule the type checker enforces.

use std::collections::BTreeSet;

use crate::env::Environment;
use crate::error::{Error, Result};
use crate::structure::StructureName;
use crate::tag::TypeTag;
use crate::value::{ComplexQ, Quaternion, Value};

/// Operators of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl Op {
    pub fn arity(self) -> usize {
        match self {
            Op::Neg => 1,
            _ => 2,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            Op::Add => "+",
            Op::Sub | Op::Neg => "-",
            Op::Mul => "*",
            Op::Div => "/",
        }
    }

    /// The structure that introduces the operator. Every carrier in the
    /// kernel satisfies Ring, so typing never rejects an operator; partial
    /// operations fail at evaluation instead.
    pub fn owner(self) -> StructureName {
        match self {
            Op::Add => StructureName::Semigroup,
            Op::Sub | Op::Neg => StructureName::Group,
            Op::Mul | Op::Div => StructureName::Ring,
        }
    }
}

/// An expression tree. `T` is `()` for the parser's untyped skeletons and
/// [`TypeTag`] once the checker has assigned every node its type.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr<T> {
    Literal { value: Value, tag: T },
    FreeSymbol { name: String, tag: T },
    Apply { op: Op, args: Vec<Expr<T>>, tag: T },
}

/// Untyped skeleton, straight out of the parser.
pub type Ast = Expr<()>;
/// Fully typed tree: every node's tag is the one inference assigns.
pub type TypedExpr = Expr<TypeTag>;

impl<T> Expr<T> {
    pub fn is_literal(&self) -> bool {
        matches!(self, Expr::Literal { .. })
    }

    /// Names of the free symbols occurring in the tree.
    pub fn free_symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Literal { .. } => {}
            Expr::FreeSymbol { name, .. } => {
                out.insert(name.clone());
            }
            Expr::Apply { args, .. } => {
                for a in args {
                    a.collect_symbols(out);
                }
            }
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Expr::Apply { args, .. } => 1 + args.iter().map(Expr::size).sum::<usize>(),
            _ => 1,
        }
    }
}

impl Ast {
    pub fn int(n: i64) -> Ast {
        Expr::Literal {
            value: Value::int(n),
            tag: (),
        }
    }

    pub fn literal(value: Value) -> Ast {
        Expr::Literal { value, tag: () }
    }

    pub fn sym(name: &str) -> Ast {
        Expr::FreeSymbol {
            name: name.to_string(),
            tag: (),
        }
    }

    pub fn apply(op: Op, args: Vec<Ast>) -> Ast {
        Expr::Apply { op, args, tag: () }
    }
}

impl TypedExpr {
    pub fn tag(&self) -> &TypeTag {
        match self {
            Expr::Literal { tag, .. } | Expr::FreeSymbol { tag, .. } | Expr::Apply { tag, .. } => {
                tag
            }
        }
    }

    /// Forget the tags, recovering the parser-shaped skeleton.
    pub fn erase(&self) -> Ast {
        match self {
            Expr::Literal { value, .. } => Ast::literal(value.clone()),
            Expr::FreeSymbol { name, .. } => Ast::sym(name),
            Expr::Apply { op, args, .. } => {
                Ast::apply(*op, args.iter().map(TypedExpr::erase).collect())
            }
        }
    }
}

/// Free function mirror of [`Expr::free_symbols`].
pub fn free_symbols<T>(e: &Expr<T>) -> BTreeSet<String> {
    e.free_symbols()
}

fn contains_imaginary<T>(e: &Expr<T>) -> bool {
    match e {
        Expr::FreeSymbol { name, .. } => name == "i",
        Expr::Apply { args, .. } => args.iter().any(contains_imaginary),
        Expr::Literal { .. } => false,
    }
}

/// Bottom-up inference. `i_value` resolves the reserved literal `i` when
/// the expression mentions it.
fn infer_with(ast: &Ast, env: &Environment, i_value: Option<&Value>) -> Result<TypedExpr> {
    match ast {
        Expr::Literal { value, .. } => Ok(Expr::Literal {
            value: value.clone(),
            tag: value.tag(),
        }),
        Expr::FreeSymbol { name, .. } if name == "i" => match i_value {
            Some(v) => Ok(Expr::Literal {
                value: v.clone(),
                tag: v.tag(),
            }),
            None => Err(Error::AmbiguousImaginary),
        },
        Expr::FreeSymbol { name, .. } => match env.declared(name) {
            Some(tag) => Ok(Expr::FreeSymbol {
                name: name.clone(),
                tag: tag.clone(),
            }),
            None => Err(Error::Undeclared { name: name.clone() }),
        },
        Expr::Apply { op, args, .. } => {
            if args.len() != op.arity() {
                return Err(Error::Arity {
                    op: op.text().to_string(),
                    expected: op.arity(),
                    got: args.len(),
                });
            }
            let typed: Vec<TypedExpr> = args
                .iter()
                .map(|a| infer_with(a, env, i_value))
                .collect::<Result<_>>()?;
            let mut tag = typed[0].tag().clone();
            for arg in &typed[1..] {
                tag = tag.join(arg.tag()).ok_or_else(|| Error::NoCommonType {
                    left: tag.to_string(),
                    right: arg.tag().to_string(),
                })?;
            }
            if !tag.satisfies(op.owner()) {
                return Err(Error::Unsupported {
                    op: op.text().to_string(),
                    tag: tag.to_string(),
                });
            }
            Ok(Expr::Apply {
                op: *op,
                args: typed,
                tag,
            })
        }
    }
}

/// Push an expected tag down the tree: literal leaves embed into the target
/// carrier and the affected `Apply` tags are recomputed. Free symbols keep
/// their declared tags; subtrees whose tag does not reach the target are
/// left untouched.
fn adapt(e: TypedExpr, target: &TypeTag) -> Result<TypedExpr> {
    if !e.tag().coerces_to(target) {
        return Ok(e);
    }
    match e {
        Expr::Literal { value, .. } => {
            let value = value.coerce_to(target)?;
            Ok(Expr::Literal {
                tag: value.tag(),
                value,
            })
        }
        Expr::FreeSymbol { .. } => Ok(e),
        Expr::Apply { op, args, .. } => {
            let args: Vec<TypedExpr> = args
                .into_iter()
                .map(|a| adapt(a, target))
                .collect::<Result<_>>()?;
            let mut tag = args[0].tag().clone();
            for arg in &args[1..] {
                tag = tag.join(arg.tag()).ok_or_else(|| Error::NoCommonType {
                    left: tag.to_string(),
                    right: arg.tag().to_string(),
                })?;
            }
            Ok(Expr::Apply { op, args, tag })
        }
    }
}

/// Type an untyped skeleton against an environment.
///
/// When `expected` is given (a binding against a declared type), the result
/// must be coercible to it, integer literals adapt to the wider carrier, and
/// a reserved `i` resolves towards it. Without an expectation, `i` resolves
/// from the surrounding operand types and is an error when both readings
/// survive.
pub fn type_check(ast: &Ast, env: &Environment, expected: Option<&TypeTag>) -> Result<TypedExpr> {
    let typed = if contains_imaginary(ast) {
        let complex_i = Value::Complex(ComplexQ::i());
        let quat_i = Value::Quaternion(Quaternion::i());
        let as_complex = infer_with(ast, env, Some(&complex_i));
        let as_quat = infer_with(ast, env, Some(&quat_i));
        let fits = |r: &Result<TypedExpr>| match (r, expected) {
            (Ok(t), Some(want)) => t.tag().coerces_to(want),
            (Ok(_), None) => true,
            (Err(_), _) => false,
        };
        match (fits(&as_complex), fits(&as_quat)) {
            (true, true) => return Err(Error::AmbiguousImaginary),
            (true, false) => as_complex?,
            (false, true) => as_quat?,
            (false, false) => match expected {
                // Both readings inferred but neither fits the declaration.
                Some(want) if as_complex.is_ok() || as_quat.is_ok() => {
                    let got = as_complex.or(as_quat)?;
                    return Err(Error::TypeMismatch {
                        expected: want.to_string(),
                        got: got.tag().to_string(),
                    });
                }
                _ => return Err(as_complex.expect_err("checked unfit")),
            },
        }
    } else {
        infer_with(ast, env, None)?
    };
    match expected {
        None => Ok(typed),
        Some(want) => {
            if !typed.tag().coerces_to(want) {
                return Err(Error::TypeMismatch {
                    expected: want.to_string(),
                    got: typed.tag().to_string(),
                });
            }
            adapt(typed, want)
        }
    }
}

/// The tag `type_check` assigns to the root, without an expectation.
pub fn infer_type(ast: &Ast, env: &Environment) -> Result<TypeTag> {
    type_check(ast, env, None).map(|t| t.tag().clone())
}

/// Recompute `Apply` tags bottom-up after a tree edit.
fn retype(e: &TypedExpr) -> Result<TypedExpr> {
    match e {
        Expr::Literal { .. } | Expr::FreeSymbol { .. } => Ok(e.clone()),
        Expr::Apply { op, args, .. } => {
            let args: Vec<TypedExpr> = args.iter().map(retype).collect::<Result<_>>()?;
            let mut tag = args[0].tag().clone();
            for arg in &args[1..] {
                tag = tag.join(arg.tag()).ok_or_else(|| Error::NoCommonType {
                    left: tag.to_string(),
                    right: arg.tag().to_string(),
                })?;
            }
            Ok(Expr::Apply {
                op: *op,
                args,
                tag,
            })
        }
    }
}

/// Replace every free symbol named `name` by `replacement` and re-typecheck.
/// The replacement's tag must be equal or coercible to the symbol's.
pub fn substitute(e: &TypedExpr, name: &str, replacement: &TypedExpr) -> Result<TypedExpr> {
    fn walk(e: &TypedExpr, name: &str, replacement: &TypedExpr) -> Result<TypedExpr> {
        match e {
            Expr::FreeSymbol { name: n, tag } if n == name => {
                if !replacement.tag().coerces_to(tag) {
                    return Err(Error::TypeMismatch {
                        expected: tag.to_string(),
                        got: replacement.tag().to_string(),
                    });
                }
                Ok(replacement.clone())
            }
            Expr::Literal { .. } | Expr::FreeSymbol { .. } => Ok(e.clone()),
            Expr::Apply { op, args, tag } => Ok(Expr::Apply {
                op: *op,
                args: args
                    .iter()
                    .map(|a| walk(a, name, replacement))
                    .collect::<Result<_>>()?,
                tag: tag.clone(),
            }),
        }
    }
    retype(&walk(e, name, replacement)?)
}
