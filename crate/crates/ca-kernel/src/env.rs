//! Typed declaration and binding environments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::TypedExpr;
use crate::tag::TypeTag;

/// Identifiers the surface language reserves. `i` is a literal, not a name.
pub const RESERVED: &[&str] = &["i"];

/// Declarations and bindings for free symbols.
///
/// Invariants maintained by the mutators: every binding's type is coercible
/// to its declaration, and the uses-graph between bindings is acyclic, so
/// substitution always terminates. Re-binding a name is allowed; the
/// acyclicity check runs again each time.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    decls: BTreeMap<String, TypeTag>,
    bindings: BTreeMap<String, TypedExpr>,
    decl_order: Vec<String>,
    bind_order: Vec<String>,
}

impl Environment {
    pub fn new() -> Environment {
        Environment::default()
    }

    /// Declare `name : tag`. Redeclaring with the same tag is a no-op;
    /// changing the tag of a declared name is an error.
    pub fn declare(&mut self, name: &str, tag: TypeTag) -> Result<()> {
        if RESERVED.contains(&name) {
            return Err(Error::Reserved { name: name.into() });
        }
        tag.validate()?;
        if let Some(existing) = self.decls.get(name) {
            if *existing != tag {
                return Err(Error::Redeclaration {
                    name: name.into(),
                    declared: existing.to_string(),
                });
            }
            return Ok(());
        }
        self.decl_order.push(name.to_string());
        self.decls.insert(name.to_string(), tag);
        Ok(())
    }

    /// Bind `name := expr`. An undeclared name is implicitly declared with
    /// the expression's inferred tag.
    pub fn bind(&mut self, name: &str, expr: TypedExpr) -> Result<()> {
        if RESERVED.contains(&name) {
            return Err(Error::Reserved { name: name.into() });
        }
        let inferred = expr.tag().clone();
        match self.decls.get(name) {
            Some(declared) => {
                if !inferred.coerces_to(declared) {
                    return Err(Error::IncompatibleBinding {
                        name: name.into(),
                        declared: declared.to_string(),
                        inferred: inferred.to_string(),
                    });
                }
            }
            None => self.declare(name, inferred)?,
        }
        if self.would_cycle(name, &expr) {
            return Err(Error::CyclicBinding { name: name.into() });
        }
        if !self.bindings.contains_key(name) {
            self.bind_order.push(name.to_string());
        }
        self.bindings.insert(name.to_string(), expr);
        Ok(())
    }

    /// Would binding `name := expr` close a cycle through existing bindings?
    fn would_cycle(&self, name: &str, expr: &TypedExpr) -> bool {
        let mut stack: Vec<String> = expr.free_symbols().into_iter().collect();
        let mut seen = std::collections::BTreeSet::new();
        while let Some(current) = stack.pop() {
            if current == name {
                return true;
            }
            if seen.insert(current.clone()) {
                if let Some(bound) = self.bindings.get(&current) {
                    stack.extend(bound.free_symbols());
                }
            }
        }
        false
    }

    pub fn declared(&self, name: &str) -> Option<&TypeTag> {
        self.decls.get(name)
    }

    pub fn binding(&self, name: &str) -> Option<&TypedExpr> {
        self.bindings.get(name)
    }

    pub fn is_bound(&self, name: &str) -> bool {
        self.bindings.contains_key(name)
    }

    /// Declarations in first-declaration order.
    pub fn declarations(&self) -> impl Iterator<Item = (&str, &TypeTag)> {
        self.decl_order
            .iter()
            .map(|n| (n.as_str(), &self.decls[n]))
    }

    /// Bindings in first-binding order.
    pub fn bindings(&self) -> impl Iterator<Item = (&str, &TypedExpr)> {
        self.bind_order
            .iter()
            .map(|n| (n.as_str(), &self.bindings[n]))
    }
}
