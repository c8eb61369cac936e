//! A typed computer-algebra kernel built on an object model of algebraic
//! structures.
//!
//! The kernel has four layers:
//!
//! * [`structure`] — the abstract lattice `Semigroup` through `Field` plus
//!   `Algebra`, with operator signatures, constants, and testable laws;
//! * [`value`] — exact data carriers (arbitrary-precision integers and
//!   rationals, complex numbers, quaternions, polynomials, matrices), each
//!   registered with the structures it satisfies;
//! * [`expr`] / [`eval`] — expression trees whose variables carry one of
//!   three compatible meanings (bound value, free symbol, applied function
//!   node), with type inference, substitution, partial evaluation, and
//!   identity simplification;
//! * [`parse`] / [`codegen`] — a small surface language in front and an
//!   object-oriented class generator behind.
//!
//! ```
//! use ca_kernel::{evaluate, parse_expr, type_check, Environment, TypeTag, Value};
//!
//! let mut env = Environment::new();
//! env.declare("y", TypeTag::Rational).unwrap();
//!
//! // y := 3, then evaluate y/2 + 1 exactly
//! let three = type_check(&parse_expr("3").unwrap(), &env, Some(&TypeTag::Rational)).unwrap();
//! env.bind("y", three).unwrap();
//! let e = type_check(&parse_expr("y/2 + 1").unwrap(), &env, None).unwrap();
//! let normal = evaluate(&e, &env).unwrap();
//! assert_eq!(ca_kernel::print_expr(&normal), "5/2");
//! # let _ = Value::int(0);
//! ```

pub mod codegen;
pub mod env;
pub mod error;
pub mod eval;
pub mod expr;
pub mod parse;
pub mod structure;
pub mod tag;
pub mod value;

pub use env::Environment;
pub use error::{Error, Pos, Result};
pub use eval::{evaluate, simplify};
pub use expr::{free_symbols, infer_type, substitute, type_check, Ast, Expr, Op, TypedExpr};
pub use parse::{
    parse_expr, parse_program, parse_type, print_expr, resolve_type, Statement, TypeArg, TypeExpr,
};
pub use structure::{
    builtin_registry, check_law, check_law_sampled, claimed_laws, LawName, LawReport, Registry,
    StructureName,
};
pub use tag::TypeTag;
pub use value::{ComplexQ, Matrix, Polynomial, Quaternion, Value};

// The guide's code listings double as doc-tests, so the book can never
// drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/structures.md")]
    mod structures {}
    #[doc = include_str!("../../../book/src/carriers.md")]
    mod carriers {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/language.md")]
    mod language {}
    #[doc = include_str!("../../../book/src/codegen.md")]
    mod codegen {}
}
