//! Error and diagnostic types shared by every layer of the kernel.

use thiserror::Error;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{pos}: illegal character '{ch}'")]
    Lex { pos: Pos, ch: char },

    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },

    #[error("unknown type '{name}'")]
    UnknownType { name: String },

    #[error("invalid type {tag}: {msg}")]
    InvalidType { tag: String, msg: String },

    #[error("undeclared symbol '{name}'")]
    Undeclared { name: String },

    #[error("'{name}' is reserved")]
    Reserved { name: String },

    #[error("'i' is ambiguous here: declare a ComplexQ or Quaternion context")]
    AmbiguousImaginary,

    #[error("no common type for {left} and {right}")]
    NoCommonType { left: String, right: String },

    #[error("operator '{op}' expects {expected} operands, got {got}")]
    Arity { op: String, expected: usize, got: usize },

    #[error("type mismatch: expected {expected}, got {got}")]
    TypeMismatch { expected: String, got: String },

    #[error("{value} is not invertible")]
    NotInvertible { value: String },

    #[error("'{op}' is not supported on {tag}")]
    Unsupported { op: String, tag: String },

    #[error("{tag} entries do not form a field")]
    FieldRequired { tag: String },

    #[error("law {law} does not apply to {tag}")]
    LawInapplicable { law: String, tag: String },

    #[error("binding '{name}' would be cyclic")]
    CyclicBinding { name: String },

    #[error("'{name}' is declared as {declared} but bound to {inferred}")]
    IncompatibleBinding {
        name: String,
        declared: String,
        inferred: String,
    },

    #[error("'{name}' is already declared as {declared}")]
    Redeclaration { name: String, declared: String },

    #[error("expression nesting too deep")]
    TooDeep,
}

impl Error {
    /// Source position, when the error carries one (lexical and syntax errors do).
    pub fn pos(&self) -> Option<Pos> {
        match self {
            Error::Lex { pos, .. } | Error::Syntax { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
