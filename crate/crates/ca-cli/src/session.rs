//! The REPL engine. `ca run` feeds files through the same statement loop,
//! which is what makes batch and interactive output identical.

use ca_kernel::codegen::{carrier_class_name, emit, lower_builtin_structures, lower_concrete, lower_expr, OoClass};
use ca_kernel::{
    check_law_sampled, claimed_laws, evaluate, parse_expr, parse_program, parse_type, print_expr,
    resolve_type, simplify, type_check, Environment, Error, Pos, Result, Statement, TypeTag,
};

/// A single-owner interactive session: an environment plus options.
#[derive(Debug, Default)]
pub struct Session {
    env: Environment,
    seed: u64,
}

/// What one input line produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct StepOutput {
    /// Result lines for stdout.
    pub out: Vec<String>,
    /// One-line diagnostics for stderr.
    pub errors: Vec<String>,
    /// True after `:quit`.
    pub quit: bool,
}

fn diagnostic(err: &Error, fallback: Pos) -> String {
    // Positioned errors already render their own line:column.
    if err.pos().is_some() {
        format!("error: {err}")
    } else {
        format!("error: {fallback}: {err}")
    }
}

impl Session {
    pub fn new() -> Session {
        Session::default()
    }

    pub fn with_seed(seed: u64) -> Session {
        Session {
            env: Environment::new(),
            seed,
        }
    }

    pub fn env(&self) -> &Environment {
        &self.env
    }

    /// Process one input line: statements or a `:` meta-command. Every error
    /// becomes a diagnostic; the session itself survives anything.
    pub fn step(&mut self, line: &str) -> StepOutput {
        let mut output = StepOutput::default();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            return output;
        }
        let fallback = Pos { line: 1, col: 1 };
        if let Some(meta) = trimmed.strip_prefix(':') {
            match self.meta(meta) {
                Ok(MetaResult::Text(lines)) => output.out.extend(lines),
                Ok(MetaResult::Quit) => output.quit = true,
                Err(e) => output.errors.push(diagnostic(&e, fallback)),
            }
            return output;
        }
        match parse_program(line) {
            Err(e) => output.errors.push(diagnostic(&e, fallback)),
            Ok(statements) => {
                for stmt in statements {
                    let pos = stmt.pos();
                    match self.run_statement(&stmt) {
                        Ok(Some(text)) => output.out.push(text),
                        Ok(None) => {}
                        Err(e) => {
                            output.errors.push(diagnostic(&e, pos));
                            break;
                        }
                    }
                }
            }
        }
        output
    }

    fn run_statement(&mut self, stmt: &Statement) -> Result<Option<String>> {
        match stmt {
            Statement::Declaration { name, ty, .. } => {
                let tag = resolve_type(ty)?;
                self.env.declare(name, tag)?;
                Ok(None)
            }
            Statement::Binding { name, expr, .. } => {
                let expected = self.env.declared(name).cloned();
                let typed = type_check(expr, &self.env, expected.as_ref())?;
                self.env.bind(name, typed.clone())?;
                let echoed = simplify(&evaluate(&typed, &self.env)?);
                Ok(Some(format!("{name} = {}", print_expr(&echoed))))
            }
            Statement::Expr { expr, .. } => {
                let typed = type_check(expr, &self.env, None)?;
                let result = simplify(&evaluate(&typed, &self.env)?);
                Ok(Some(print_expr(&result)))
            }
        }
    }

    fn meta(&mut self, input: &str) -> Result<MetaResult> {
        let (cmd, rest) = match input.split_once(char::is_whitespace) {
            Some((c, r)) => (c, r.trim()),
            None => (input, ""),
        };
        let need_arg = |what: &str| -> Result<()> {
            if rest.is_empty() {
                Err(Error::Syntax {
                    pos: Pos { line: 1, col: 1 },
                    msg: format!("':{cmd}' expects {what}"),
                })
            } else {
                Ok(())
            }
        };
        match cmd {
            "quit" => Ok(MetaResult::Quit),
            "type" => {
                need_arg("an expression")?;
                let typed = type_check(&parse_expr(rest)?, &self.env, None)?;
                let tag = typed.tag();
                let satisfied: Vec<&str> =
                    tag.satisfied().iter().map(|s| s.as_str()).collect();
                Ok(MetaResult::Text(vec![format!(
                    "{tag} ({})",
                    satisfied.join(", ")
                )]))
            }
            "eval" => {
                need_arg("an expression")?;
                let typed = type_check(&parse_expr(rest)?, &self.env, None)?;
                let normal = evaluate(&typed, &self.env)?;
                Ok(MetaResult::Text(vec![print_expr(&normal)]))
            }
            "simplify" => {
                need_arg("an expression")?;
                let typed = type_check(&parse_expr(rest)?, &self.env, None)?;
                Ok(MetaResult::Text(vec![print_expr(&simplify(&typed))]))
            }
            "free" => {
                need_arg("an expression")?;
                let names = parse_expr(rest)?.free_symbols();
                let text = if names.is_empty() {
                    "(none)".to_string()
                } else {
                    names.into_iter().collect::<Vec<_>>().join(", ")
                };
                Ok(MetaResult::Text(vec![text]))
            }
            "emit" => Ok(MetaResult::Text(
                self.emit_program().lines().map(str::to_string).collect(),
            )),
            "laws" => {
                need_arg("a type")?;
                let tag = resolve_type(&parse_type(rest)?)?;
                Ok(MetaResult::Text(laws_report(&tag, self.seed)?))
            }
            other => Err(Error::Syntax {
                pos: Pos { line: 1, col: 1 },
                msg: format!("unknown command ':{other}'"),
            }),
        }
    }

    /// Lower the whole session: the built-in structure library, one class
    /// per declared carrier, and node classes for every binding.
    pub fn emit_program(&self) -> String {
        let mut classes: Vec<OoClass> = lower_builtin_structures();
        let mut seen: Vec<&'static str> = Vec::new();
        for (_, tag) in self.env.declarations() {
            let name = carrier_class_name(tag);
            if !seen.contains(&name) {
                seen.push(name);
                classes.push(lower_concrete(tag));
            }
        }
        for (name, expr) in self.env.bindings() {
            classes.extend(lower_expr(name, expr));
        }
        emit(&classes)
    }
}

enum MetaResult {
    Text(Vec<String>),
    Quit,
}

/// One line per claimed law: `pass (n cases)` or the counterexample.
pub fn laws_report(tag: &TypeTag, seed: u64) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for law in claimed_laws(tag) {
        let report = check_law_sampled(tag, law, seed, 200)?;
        lines.push(format!("{law}: {report}"));
    }
    Ok(lines)
}

/// Outcome of running a whole program.
pub struct RunOutcome {
    pub out: String,
    pub first_error: Option<String>,
}

/// Execute a source file the way the REPL would, stopping at the first
/// diagnostic.
pub fn run_source(source: &str) -> RunOutcome {
    let mut session = Session::new();
    let mut out = String::new();
    let statements = match parse_program(source) {
        Ok(s) => s,
        Err(e) => {
            return RunOutcome {
                out,
                first_error: Some(diagnostic(&e, Pos { line: 1, col: 1 })),
            }
        }
    };
    for stmt in statements {
        match session.run_statement(&stmt) {
            Ok(Some(text)) => {
                out.push_str(&text);
                out.push('\n');
            }
            Ok(None) => {}
            Err(e) => {
                return RunOutcome {
                    out,
                    first_error: Some(diagnostic(&e, stmt.pos())),
                }
            }
        }
    }
    RunOutcome {
        out,
        first_error: None,
    }
}

/// Parse and type-check without evaluating; used by `ca check` and
/// `ca emit`. Returns the populated session.
pub fn check_source(source: &str) -> std::result::Result<Session, String> {
    let mut session = Session::new();
    let statements =
        parse_program(source).map_err(|e| diagnostic(&e, Pos { line: 1, col: 1 }))?;
    for stmt in statements {
        let res: Result<()> = (|| {
            match &stmt {
                Statement::Declaration { name, ty, .. } => {
                    let tag = resolve_type(ty)?;
                    session.env.declare(name, tag)?;
                }
                Statement::Binding { name, expr, .. } => {
                    let expected = session.env.declared(name).cloned();
                    let typed = type_check(expr, &session.env, expected.as_ref())?;
                    session.env.bind(name, typed)?;
                }
                Statement::Expr { expr, .. } => {
                    type_check(expr, &session.env, None)?;
                }
            }
            Ok(())
        })();
        res.map_err(|e| diagnostic(&e, stmt.pos()))?;
    }
    Ok(session)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(s: &mut Session, input: &str) -> Vec<String> {
        let mut out = Vec::new();
        for line in input.lines() {
            let step = s.step(line);
            assert!(step.errors.is_empty(), "unexpected: {:?}", step.errors);
            out.extend(step.out);
        }
        out
    }

    #[test]
    fn complex_binding_scenario() {
        let mut s = Session::new();
        let out = lines(&mut s, "z : ComplexQ;\nz := 2*i;");
        assert_eq!(out, vec!["z = 2*i"]);
    }

    #[test]
    fn partial_evaluation_scenario() {
        let mut s = Session::new();
        let out = lines(
            &mut s,
            "a : Rational; y : Rational;\nx := a*y + 2;\ny := 3;",
        );
        assert_eq!(out, vec!["x = a*y + 2", "y = 3"]);
        let step = s.step(":eval x");
        assert_eq!(step.out, vec!["a*3 + 2"]);
        let out = lines(&mut s, "a := 1/2;");
        assert_eq!(out, vec!["a = 1/2"]);
        let step = s.step(":eval x");
        assert_eq!(step.out, vec!["7/2"]);
    }

    #[test]
    fn type_command_prints_the_satisfied_set() {
        let mut s = Session::new();
        lines(&mut s, "q : Quaternion;");
        let step = s.step(":type q");
        assert_eq!(
            step.out,
            vec!["Quaternion (Algebra, DivisionRing, Ring, Module, Group, Semigroup)"]
        );
    }

    #[test]
    fn free_command_lists_symbols() {
        let mut s = Session::new();
        let step = s.step(":free a*y + 2");
        assert_eq!(step.out, vec!["a, y"]);
        let step = s.step(":free 7");
        assert_eq!(step.out, vec!["(none)"]);
    }

    #[test]
    fn errors_keep_the_session_alive() {
        let mut s = Session::new();
        let step = s.step("x := ;");
        assert_eq!(step.errors.len(), 1);
        assert!(step.errors[0].starts_with("error: 1:6:"), "{:?}", step.errors);
        let out = lines(&mut s, "x : Rational; x := 1/2 + 1/3; x;");
        assert_eq!(out, vec!["x = 5/6", "5/6"]);
    }

    #[test]
    fn quit_signals_the_loop() {
        let mut s = Session::new();
        assert!(s.step(":quit").quit);
    }

    #[test]
    fn run_source_matches_the_step_loop() {
        let src = "x : Rational;\nx := 1/2 + 1/3;\nx;\n";
        let run = run_source(src);
        assert!(run.first_error.is_none());
        assert_eq!(run.out, "x = 5/6\n5/6\n");
        let mut s = Session::new();
        let stepped: Vec<String> = lines(&mut s, src);
        assert_eq!(run.out, stepped.join("\n") + "\n");
    }

    #[test]
    fn emit_includes_library_carriers_and_bindings() {
        let mut s = Session::new();
        lines(&mut s, "a : Rational; y : Rational;\nx := a*y + 2;");
        let text = s.emit_program();
        assert!(text.contains("Module = Object;"));
        assert!(text.contains("Ring = Object(Module)"));
        assert!(text.contains("Rational = Object(Field)"));
        assert!(text.contains("x_n1 = Object(Rational)"));
        assert!(text.contains("function Eval : Rational = x_n1 + 2;"));
    }

    #[test]
    fn empty_program_emits_only_the_library() {
        let s = Session::new();
        let text = s.emit_program();
        let expected = emit(&lower_builtin_structures());
        assert_eq!(text, expected);
    }

    #[test]
    fn laws_command_reports_per_law_lines() {
        let mut s = Session::new();
        let step = s.step(":laws Quaternion");
        assert!(step.errors.is_empty());
        assert!(step.out.iter().any(|l| l.starts_with("norm_multiplicative: pass")));
        assert!(step.out.iter().all(|l| !l.starts_with("comm_mul")));
    }
}
