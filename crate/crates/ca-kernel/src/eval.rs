//! Partial evaluation and identity-based simplification.

use crate::env::Environment;
use crate::error::Result;
use crate::expr::{Expr, Op, TypedExpr};
use crate::tag::TypeTag;
use crate::value::Value;

/// Fold one operator application over literal operand values. Operands are
/// embedded into the node's carrier first, so mixed-tag children (an integer
/// literal under a rational node) combine exactly.
pub(crate) fn fold_apply(op: Op, tag: &TypeTag, args: &[&Value]) -> Result<Value> {
    match op {
        Op::Neg => Ok(args[0].coerce_to(tag)?.neg()),
        Op::Add => args[0].coerce_to(tag)?.add(&args[1].coerce_to(tag)?),
        Op::Sub => args[0].coerce_to(tag)?.sub(&args[1].coerce_to(tag)?),
        Op::Mul => args[0].coerce_to(tag)?.mul(&args[1].coerce_to(tag)?),
        Op::Div => args[0].coerce_to(tag)?.div(&args[1].coerce_to(tag)?),
    }
}

/// Reduce to normal form: bound symbols are replaced by their bindings
/// (transitively — the environment's acyclicity invariant bounds the
/// recursion) and every all-literal application folds, post-order, left to
/// right. Unbound symbols remain, so the result is a literal exactly when
/// every free symbol of the input is bound.
///
/// Folding errors (division by a non-invertible element) are raised.
pub fn evaluate(e: &TypedExpr, env: &Environment) -> Result<TypedExpr> {
    match e {
        Expr::Literal { .. } => Ok(e.clone()),
        Expr::FreeSymbol { name, tag } => match env.binding(name) {
            None => Ok(e.clone()),
            Some(bound) => {
                let normal = evaluate(bound, env)?;
                match normal {
                    // The binding may live in a smaller carrier than the
                    // declaration; the symbol's tag wins.
                    Expr::Literal { value, .. } => Ok(Expr::Literal {
                        value: value.coerce_to(tag)?,
                        tag: tag.clone(),
                    }),
                    partial => Ok(partial),
                }
            }
        },
        Expr::Apply { op, args, tag } => {
            let args: Vec<TypedExpr> = args
                .iter()
                .map(|a| evaluate(a, env))
                .collect::<Result<_>>()?;
            if args.iter().all(Expr::is_literal) {
                let values: Vec<&Value> = args
                    .iter()
                    .map(|a| match a {
                        Expr::Literal { value, .. } => value,
                        _ => unreachable!(),
                    })
                    .collect();
                let value = fold_apply(*op, tag, &values)?;
                Ok(Expr::Literal {
                    value,
                    tag: tag.clone(),
                })
            } else {
                Ok(Expr::Apply {
                    op: *op,
                    args,
                    tag: tag.clone(),
                })
            }
        }
    }
}

/// Bottom-up fixpoint of the identity rules
///
/// ```text
/// R1  t+0 -> t, 0+t -> t      R5  t-t -> 0
/// R2  t*1 -> t, 1*t -> t      R6  fold all-literal nodes
/// R3  t*0 -> 0, 0*t -> 0      R7  t/1 -> t
/// R4  -(-t) -> t
/// ```
///
/// No rule uses commutativity. Rules that would change a node's carrier
/// (dropping a rational zero next to an integer symbol) do not fire, and
/// folding errors leave the node unfolded, so simplification is total and
/// semantics-preserving under every total environment.
pub fn simplify(e: &TypedExpr) -> TypedExpr {
    match e {
        Expr::Literal { .. } | Expr::FreeSymbol { .. } => e.clone(),
        Expr::Apply { op, args, tag } => {
            let args: Vec<TypedExpr> = args.iter().map(simplify).collect();
            rewrite(*op, args, tag)
        }
    }
}

fn literal_is(e: &TypedExpr, test: fn(&Value) -> bool) -> bool {
    matches!(e, Expr::Literal { value, .. } if test(value))
}

fn rewrite(op: Op, args: Vec<TypedExpr>, tag: &TypeTag) -> TypedExpr {
    // R6: constant folding; errors stay unfolded so simplify remains total.
    if args.iter().all(Expr::is_literal) {
        let values: Vec<&Value> = args
            .iter()
            .map(|a| match a {
                Expr::Literal { value, .. } => value,
                _ => unreachable!(),
            })
            .collect();
        if let Ok(value) = fold_apply(op, tag, &values) {
            return Expr::Literal {
                value,
                tag: tag.clone(),
            };
        }
    }
    let keeps_tag = |candidate: &TypedExpr| candidate.tag() == tag;
    match op {
        // R1
        Op::Add => {
            if literal_is(&args[1], Value::is_zero) && keeps_tag(&args[0]) {
                return args.into_iter().next().unwrap();
            }
            if literal_is(&args[0], Value::is_zero) && keeps_tag(&args[1]) {
                return args.into_iter().nth(1).unwrap();
            }
        }
        // R5
        Op::Sub => {
            if args[0] == args[1] {
                return Expr::Literal {
                    value: Value::zero(tag),
                    tag: tag.clone(),
                };
            }
        }
        // R3 then R2
        Op::Mul => {
            if literal_is(&args[0], Value::is_zero) || literal_is(&args[1], Value::is_zero) {
                return Expr::Literal {
                    value: Value::zero(tag),
                    tag: tag.clone(),
                };
            }
            if literal_is(&args[1], Value::is_one) && keeps_tag(&args[0]) {
                return args.into_iter().next().unwrap();
            }
            if literal_is(&args[0], Value::is_one) && keeps_tag(&args[1]) {
                return args.into_iter().nth(1).unwrap();
            }
        }
        // R7
        Op::Div => {
            if literal_is(&args[1], Value::is_one) && keeps_tag(&args[0]) {
                return args.into_iter().next().unwrap();
            }
        }
        // R4
        Op::Neg => {
            if let Expr::Apply {
                op: Op::Neg,
                args: inner,
                ..
            } = &args[0]
            {
                if keeps_tag(&inner[0]) {
                    return inner[0].clone();
                }
            }
        }
    }
    Expr::Apply {
        op,
        args,
        tag: tag.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{type_check, Ast};

    fn env_rational(names: &[&str]) -> Environment {
        let mut env = Environment::new();
        for n in names {
            env.declare(n, TypeTag::Rational).unwrap();
        }
        env
    }

    fn typed(ast: &Ast, env: &Environment) -> TypedExpr {
        type_check(ast, env, None).unwrap()
    }

    #[test]
    fn two_times_i_folds_to_complex() {
        let env = Environment::new();
        let ast = Ast::apply(Op::Mul, vec![Ast::int(2), Ast::sym("i")]);
        let t = type_check(&ast, &env, Some(&TypeTag::ComplexQ)).unwrap();
        let normal = evaluate(&t, &env).unwrap();
        match normal {
            Expr::Literal { value, .. } => assert_eq!(value.to_string(), "2*i"),
            _ => panic!("expected a literal"),
        }
    }

    #[test]
    fn partial_evaluation_keeps_free_symbols() {
        // a*y + 2 with y := 3 and a free reduces to a*3 + 2
        let mut env = env_rational(&["a", "y"]);
        let three = type_check(&Ast::int(3), &env, Some(&TypeTag::Rational)).unwrap();
        env.bind("y", three).unwrap();
        let ast = Ast::apply(
            Op::Add,
            vec![
                Ast::apply(Op::Mul, vec![Ast::sym("a"), Ast::sym("y")]),
                Ast::int(2),
            ],
        );
        let t = typed(&ast, &env);
        let normal = evaluate(&t, &env).unwrap();
        assert_eq!(normal.free_symbols().into_iter().collect::<Vec<_>>(), ["a"]);
        assert_eq!(crate::parse::print_expr(&normal), "a*3 + 2");
    }

    #[test]
    fn total_environment_folds_to_a_literal() {
        let mut env = env_rational(&["a", "y"]);
        let half = Ast::apply(Op::Div, vec![Ast::int(1), Ast::int(2)]);
        let half = type_check(&half, &env, Some(&TypeTag::Rational)).unwrap();
        env.bind("a", half).unwrap();
        let three = type_check(&Ast::int(3), &env, Some(&TypeTag::Rational)).unwrap();
        env.bind("y", three).unwrap();
        let ast = Ast::apply(
            Op::Add,
            vec![
                Ast::apply(Op::Mul, vec![Ast::sym("a"), Ast::sym("y")]),
                Ast::int(2),
            ],
        );
        let normal = evaluate(&typed(&ast, &env), &env).unwrap();
        match normal {
            Expr::Literal { value, .. } => assert_eq!(value, Value::rational(7, 2)),
            other => panic!("expected 7/2, got {other:?}"),
        }
    }

    #[test]
    fn division_by_zero_is_raised() {
        let env = Environment::new();
        let ast = Ast::apply(Op::Div, vec![Ast::int(1), Ast::int(0)]);
        let t = type_check(&ast, &env, Some(&TypeTag::Rational)).unwrap();
        assert!(evaluate(&t, &env).is_err());
    }

    #[test]
    fn simplify_unit_and_zero_identities() {
        let env = env_rational(&["x"]);
        // (x + 0) * 1 -> x
        let ast = Ast::apply(
            Op::Mul,
            vec![
                Ast::apply(Op::Add, vec![Ast::sym("x"), Ast::int(0)]),
                Ast::int(1),
            ],
        );
        let t = type_check(&ast, &env, Some(&TypeTag::Rational)).unwrap();
        let s = simplify(&t);
        assert_eq!(
            s,
            Expr::FreeSymbol {
                name: "x".into(),
                tag: TypeTag::Rational
            }
        );
    }

    #[test]
    fn multiplying_a_quaternion_by_zero_collapses() {
        let mut env = Environment::new();
        env.declare("q", TypeTag::Quaternion).unwrap();
        let ast = Ast::apply(Op::Mul, vec![Ast::sym("q"), Ast::int(0)]);
        let t = typed(&ast, &env);
        let s = simplify(&t);
        match s {
            Expr::Literal { value, tag } => {
                assert_eq!(tag, TypeTag::Quaternion);
                assert!(value.is_zero());
            }
            other => panic!("expected the quaternion zero, got {other:?}"),
        }
    }

    #[test]
    fn no_rule_fires_on_a_partial_product() {
        let env = env_rational(&["a"]);
        // a*3 + 2: no rewrite applies, and no commutative reassociation is
        // attempted.
        let ast = Ast::apply(
            Op::Add,
            vec![
                Ast::apply(Op::Mul, vec![Ast::sym("a"), Ast::int(3)]),
                Ast::int(2),
            ],
        );
        let t = typed(&ast, &env);
        assert_eq!(simplify(&t), t);
    }

    #[test]
    fn folding_errors_stay_unfolded_in_simplify() {
        let env = Environment::new();
        let ast = Ast::apply(Op::Div, vec![Ast::int(1), Ast::int(0)]);
        let t = type_check(&ast, &env, Some(&TypeTag::Rational)).unwrap();
        // Total: the node survives unfolded instead of raising.
        assert_eq!(simplify(&t), t);
    }

    #[test]
    fn double_negation_cancels() {
        let env = env_rational(&["x"]);
        let ast = Ast::apply(Op::Neg, vec![Ast::apply(Op::Neg, vec![Ast::sym("x")])]);
        let t = typed(&ast, &env);
        assert_eq!(
            simplify(&t),
            Expr::FreeSymbol {
                name: "x".into(),
                tag: TypeTag::Rational
            }
        );
    }

    #[test]
    fn self_subtraction_vanishes() {
        let env = env_rational(&["x"]);
        let ast = Ast::apply(
            Op::Sub,
            vec![
                Ast::apply(Op::Mul, vec![Ast::sym("x"), Ast::int(3)]),
                Ast::apply(Op::Mul, vec![Ast::sym("x"), Ast::int(3)]),
            ],
        );
        let t = typed(&ast, &env);
        assert!(matches!(simplify(&t), Expr::Literal { value, .. } if value.is_zero()));
    }
}
