//! Lexer for the surface language.

use crate::error::{Error, Pos, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Op,
    Punct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub pos: Pos,
}

impl Token {
    fn new(kind: TokenKind, text: impl Into<String>, pos: Pos) -> Token {
        Token {
            kind,
            text: text.into(),
            pos,
        }
    }
}

/// Longest-match tokenization. Whitespace and `--`-to-end-of-line comments
/// are skipped; integer literals are decimal digit runs; identifiers are an
/// ASCII letter followed by letters, digits, or underscores.
pub fn tokenize(source: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = source.chars().peekable();
    let mut line: u32 = 1;
    let mut col: u32 = 1;

    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '-' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'-') {
                    // comment to end of line
                    for skipped in chars.by_ref() {
                        if skipped == '\n' {
                            line += 1;
                            col = 1;
                            break;
                        }
                    }
                } else {
                    out.push(Token::new(TokenKind::Op, "-", pos));
                }
            }
            ':' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    out.push(Token::new(TokenKind::Op, ":=", pos));
                } else {
                    out.push(Token::new(TokenKind::Op, ":", pos));
                }
            }
            '+' | '*' | '/' => {
                chars.next();
                col += 1;
                out.push(Token::new(TokenKind::Op, c, pos));
            }
            '(' | ')' | ';' | ',' => {
                chars.next();
                col += 1;
                out.push(Token::new(TokenKind::Punct, c, pos));
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token::new(TokenKind::Int, text, pos));
            }
            c if c.is_ascii_alphabetic() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token::new(TokenKind::Ident, text, pos));
            }
            c => return Err(Error::Lex { pos, ch: c }),
        }
    }
    Ok(out)
}
