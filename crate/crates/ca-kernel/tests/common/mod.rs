//! Shared generators for property tests over typed trees.

use ca_kernel::value::sample::sample_value;
use ca_kernel::{type_check, Ast, Environment, Expr, Op, TypeTag, TypedExpr, Value};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Fixed symbol pool: two names per scalar carrier.
pub fn pool() -> Vec<(&'static str, TypeTag)> {
    vec![
        ("a", TypeTag::Rational),
        ("b", TypeTag::Rational),
        ("m", TypeTag::Integer),
        ("n", TypeTag::Integer),
        ("z", TypeTag::ComplexQ),
        ("w", TypeTag::ComplexQ),
        ("p", TypeTag::Quaternion),
        ("q", TypeTag::Quaternion),
    ]
}

pub fn pool_env() -> Environment {
    let mut env = Environment::new();
    for (name, tag) in pool() {
        env.declare(name, tag).unwrap();
    }
    env
}

pub fn gen_ast(rng: &mut ChaCha8Rng, depth: usize) -> Ast {
    if depth == 0 || rng.gen_ratio(1, 3) {
        if rng.gen_bool(0.5) {
            Ast::int(rng.gen_range(0..=9))
        } else {
            let pool = pool();
            let (name, _) = pool[rng.gen_range(0..pool.len())];
            Ast::sym(name)
        }
    } else {
        let op = match rng.gen_range(0..10) {
            0..=2 => Op::Add,
            3..=5 => Op::Mul,
            6..=7 => Op::Sub,
            8 => Op::Div,
            _ => Op::Neg,
        };
        let args = (0..op.arity()).map(|_| gen_ast(rng, depth - 1)).collect();
        Ast::apply(op, args)
    }
}

/// Generate until the skeleton type-checks; mixed complex/quaternion pools
/// make some drafts untypeable by design.
pub fn gen_typed(rng: &mut ChaCha8Rng, env: &Environment, depth: usize) -> TypedExpr {
    loop {
        if let Ok(t) = type_check(&gen_ast(rng, depth), env, None) {
            return t;
        }
    }
}

pub fn literal_of(tag: &TypeTag, rng: &mut ChaCha8Rng) -> TypedExpr {
    let value = sample_value(tag, rng);
    Expr::Literal {
        tag: value.tag(),
        value,
    }
}

/// Bind `names` to fresh literals of their declared tags.
pub fn bind_literals(env: &mut Environment, names: &[&str], rng: &mut ChaCha8Rng) {
    for name in names {
        let tag = env.declared(name).unwrap().clone();
        let lit = literal_of(&tag, rng);
        env.bind(name, lit).unwrap();
    }
}

#[allow(dead_code)]
pub fn literal_value(e: &TypedExpr) -> Option<&Value> {
    match e {
        Expr::Literal { value, .. } => Some(value),
        _ => None,
    }
}
