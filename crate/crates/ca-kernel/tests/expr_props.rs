//! Property tests for the expression engine: substitution commutes with
//! evaluation, simplification is sound and idempotent, partial evaluation
//! removes exactly the bound symbols, and the three variants of a tag fill
//! any context interchangeably.

mod common;

use ca_kernel::value::sample::sample_value;
use ca_kernel::{
    evaluate, infer_type, simplify, substitute, type_check, Ast, Environment, Expr, Op,
};
use common::{bind_literals, gen_typed, literal_of, pool, pool_env};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn substitution_commutes_with_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    let decl_env = pool_env();
    for _ in 0..500 {
        let e = gen_typed(&mut rng, &decl_env, 5);
        let free: Vec<String> = e.free_symbols().into_iter().collect();

        let mut base = pool_env();
        let background: Vec<&str> = pool()
            .iter()
            .map(|(n, _)| *n)
            .filter(|n| rng.gen_bool(0.5))
            .collect();

        let Some(name) = free.get(rng.gen_range(0..free.len().max(1))).cloned() else {
            continue;
        };
        bind_literals(
            &mut base,
            &background
                .iter()
                .copied()
                .filter(|n| *n != name)
                .collect::<Vec<_>>(),
            &mut rng,
        );
        let tag = decl_env.declared(&name).unwrap().clone();
        let lit = literal_of(&tag, &mut rng);

        let substituted = substitute(&e, &name, &lit).unwrap();
        let left = evaluate(&substituted, &base);

        let mut extended = base.clone();
        extended.bind(&name, lit).unwrap();
        let right = evaluate(&e, &extended);

        match (left, right) {
            (Ok(l), Ok(r)) => assert_eq!(l, r, "normal forms diverge for {e:?}"),
            (Err(_), Err(_)) => {}
            (l, r) => panic!("one side failed: {l:?} vs {r:?}"),
        }
    }
}

#[test]
fn simplification_is_sound_under_total_environments() {
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    let decl_env = pool_env();
    let names: Vec<&str> = pool().iter().map(|(n, _)| *n).collect();
    let mut checked = 0;
    for _ in 0..500 {
        let e = gen_typed(&mut rng, &decl_env, 5);
        let mut total = pool_env();
        bind_literals(&mut total, &names, &mut rng);
        let direct = evaluate(&e, &total);
        let via_simplify = evaluate(&simplify(&e), &total);
        match direct {
            // Simplification may erase a doomed subtree (t*0 -> 0), so only
            // error-free evaluations are compared.
            Err(_) => continue,
            Ok(d) => {
                checked += 1;
                assert_eq!(via_simplify.unwrap(), d, "for {e:?}");
            }
        }
    }
    assert!(checked > 300, "too few error-free cases: {checked}");
}

#[test]
fn simplification_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(403);
    let decl_env = pool_env();
    for _ in 0..500 {
        let e = gen_typed(&mut rng, &decl_env, 5);
        let once = simplify(&e);
        assert_eq!(simplify(&once), once, "for {e:?}");
    }
}

#[test]
fn partial_evaluation_removes_exactly_the_bound_symbols() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let decl_env = pool_env();
    for _ in 0..300 {
        let e = gen_typed(&mut rng, &decl_env, 5);
        let mut env = pool_env();
        let bound: Vec<&str> = pool()
            .iter()
            .map(|(n, _)| *n)
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        bind_literals(&mut env, &bound, &mut rng);
        let Ok(normal) = evaluate(&e, &env) else {
            continue;
        };
        let expected: std::collections::BTreeSet<String> = e
            .free_symbols()
            .into_iter()
            .filter(|n| !bound.contains(&n.as_str()))
            .collect();
        assert_eq!(normal.free_symbols(), expected, "for {e:?}");
        // A literal results exactly when everything was bound.
        assert_eq!(normal.is_literal(), expected.is_empty());
    }
}

#[test]
fn evaluation_preserves_the_root_tag() {
    let mut rng = ChaCha8Rng::seed_from_u64(405);
    let decl_env = pool_env();
    for _ in 0..300 {
        let e = gen_typed(&mut rng, &decl_env, 5);
        let mut env = pool_env();
        let bound: Vec<&str> = pool()
            .iter()
            .map(|(n, _)| *n)
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        bind_literals(&mut env, &bound, &mut rng);
        if let Ok(normal) = evaluate(&e, &env) {
            assert_eq!(normal.tag(), e.tag(), "for {e:?}");
        }
    }
}

#[test]
fn three_subtypes_fill_any_context_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(406);
    let env = pool_env();
    for _ in 0..200 {
        // Build a context around a hole of a random scalar tag.
        let pool = pool();
        let (hole_sym, hole_tag) = pool[rng.gen_range(0..pool.len())].clone();
        let other = Ast::int(rng.gen_range(0..=9));
        let wrap = |hole: Ast| {
            Ast::apply(
                Op::Add,
                vec![Ast::apply(Op::Mul, vec![hole, other.clone()]), Ast::int(1)],
            )
        };

        let as_literal = wrap(Ast::literal(sample_value(&hole_tag, &mut rng)));
        let as_symbol = wrap(Ast::sym(hole_sym));
        let as_apply = wrap(Ast::apply(
            Op::Add,
            vec![Ast::sym(hole_sym), Ast::sym(hole_sym)],
        ));

        let t_literal = infer_type(&as_literal, &env).unwrap();
        let t_symbol = infer_type(&as_symbol, &env).unwrap();
        let t_apply = infer_type(&as_apply, &env).unwrap();
        assert_eq!(t_literal, t_symbol);
        assert_eq!(t_symbol, t_apply);
        assert_eq!(t_apply, hole_tag);
    }
}

#[test]
fn evaluation_terminates_through_binding_chains() {
    let mut env = Environment::new();
    env.declare("x0", ca_kernel::TypeTag::Integer).unwrap();
    let zero = type_check(&Ast::int(0), &env, None).unwrap();
    env.bind("x0", zero).unwrap();
    for depth in 1..=10 {
        let prev = format!("x{}", depth - 1);
        let name = format!("x{depth}");
        let ast = Ast::apply(
            Op::Add,
            vec![
                Ast::sym(&prev),
                Ast::apply(Op::Mul, vec![Ast::sym(&prev), Ast::int(2)]),
            ],
        );
        let typed = type_check(&ast, &env, None).unwrap();
        env.bind(&name, typed).unwrap();
    }
    let top = type_check(&Ast::sym("x10"), &env, None).unwrap();
    let normal = evaluate(&top, &env).unwrap();
    match normal {
        Expr::Literal { value, .. } => assert!(value.is_zero()),
        other => panic!("chain did not close: {other:?}"),
    }
}
