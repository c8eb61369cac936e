//! Golden-file tests for the emitter. Regenerate with
//! `UPDATE_GOLDEN=1 cargo test -p ca-kernel --test codegen_golden`.

mod common;

use ca_kernel::codegen::{emit, lower_concrete, lower_expr, lower_structure, recompose_expr};
use ca_kernel::{builtin_registry, StructureName, TypeTag};
use common::{gen_typed, pool_env};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn golden_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/classes.txt")
}

fn emitted_classes() -> String {
    let reg = builtin_registry();
    emit(&[
        lower_structure(reg.kind(StructureName::Module)),
        lower_structure(reg.kind(StructureName::Ring)),
        lower_concrete(&TypeTag::Quaternion),
    ])
}

#[test]
fn classes_match_the_checked_in_golden_bytes() {
    let text = emitted_classes();
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let golden = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, golden, "emitter drifted from {}", path.display());
}

#[test]
fn golden_contains_the_source_listing_lines() {
    let golden = std::fs::read_to_string(golden_path()).unwrap();
    assert!(golden.contains("Module = Object;"));
    assert!(golden.contains("Ring = Object(Module)"));
    assert!(golden.contains("Data : array [0..3] of Number"));
}

#[test]
fn emission_is_deterministic_across_runs() {
    assert_eq!(emitted_classes(), emitted_classes());
}

#[test]
fn lowering_round_trips_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let env = pool_env();
    for _ in 0..100 {
        let typed = gen_typed(&mut rng, &env, 4);
        let classes = lower_expr("root", &typed);
        let rebuilt = recompose_expr(&classes).unwrap();
        assert_eq!(rebuilt, typed.erase());
        // one node class per application, plus a leaf class when the root
        // is not an application
        let applications = count_applies(&typed);
        assert_eq!(classes.len(), applications.max(1));
    }
}

fn count_applies(e: &ca_kernel::TypedExpr) -> usize {
    match e {
        ca_kernel::Expr::Apply { args, .. } => {
            1 + args.iter().map(count_applies).sum::<usize>()
        }
        _ => 0,
    }
}
