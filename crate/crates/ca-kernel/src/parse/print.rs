//! Canonical pretty-printing with minimal parentheses.

use crate::expr::{Expr, Op};
use crate::value::Value;

// Binding levels: 1 = additive, 2 = multiplicative, 3 = unary minus,
// 4 = atom. Literal levels come from the rendered text so that, e.g., "5/6"
// is protected like a division wherever that matters.
fn level<T>(e: &Expr<T>) -> u8 {
    match e {
        Expr::FreeSymbol { .. } => 4,
        Expr::Literal { value, .. } => literal_level(value),
        Expr::Apply { op, .. } => match op {
            Op::Add | Op::Sub => 1,
            Op::Mul | Op::Div => 2,
            Op::Neg => 3,
        },
    }
}

fn literal_level(v: &Value) -> u8 {
    let s = v.to_string();
    if s.contains(" + ") || s.contains(" - ") {
        1
    } else if s.starts_with('-') {
        3
    } else if s.contains(['*', '/', '^']) {
        2
    } else {
        4
    }
}

/// Render an expression so that re-parsing rebuilds the same tree shape:
/// parentheses appear exactly where the precedence table demands them.
/// Additive operators are spaced, multiplicative ones are tight.
pub fn print_expr<T>(e: &Expr<T>) -> String {
    let mut out = String::new();
    render(e, &mut out);
    out
}

fn render<T>(e: &Expr<T>, out: &mut String) {
    match e {
        Expr::Literal { value, .. } => out.push_str(&value.to_string()),
        Expr::FreeSymbol { name, .. } => out.push_str(name),
        Expr::Apply { op: Op::Neg, args, .. } => {
            out.push('-');
            child(&args[0], level(&args[0]) < 4, out);
        }
        Expr::Apply { op, args, .. } => {
            let my = level(e);
            // Left-associative grammar: a right child at the same level
            // must be parenthesized to survive a round trip.
            child(&args[0], level(&args[0]) < my, out);
            out.push_str(match op {
                Op::Add => " + ",
                Op::Sub => " - ",
                Op::Mul => "*",
                Op::Div => "/",
                Op::Neg => unreachable!(),
            });
            child(&args[1], level(&args[1]) <= my, out);
        }
    }
}

fn child<T>(e: &Expr<T>, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
        render(e, out);
        out.push(')');
    } else {
        render(e, out);
    }
}
