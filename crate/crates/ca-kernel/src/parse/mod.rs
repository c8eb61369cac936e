//! Front end of the translator: the small expression language.
//!
//! Grammar (comments run from `--` to end of line):
//!
//! ```text
//! program   = { statement } ;
//! statement = ident ":" type ";" | ident ":=" expr ";" | expr ";" ;
//! type      = ident [ "(" type { "," (type | int) } ")" ] ;
//! expr      = term { ("+" | "-") term } ;
//! term      = unary { ("*" | "/") unary } ;
//! unary     = [ "-" ] atom ;
//! atom      = int | ident | "(" expr ")" ;
//! ```
//!
//! Multiplication is always explicit: `x + i*y`, never `x + i y`.

mod print;
mod token;

use num::BigInt;

use crate::error::{Error, Pos, Result};
use crate::expr::{Ast, Op};
use crate::tag::TypeTag;
use crate::value::Value;

pub use print::print_expr;
pub use token::{tokenize, Token, TokenKind};

/// A surface type expression, resolved to a [`TypeTag`] by [`resolve_type`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeExpr {
    pub name: String,
    pub args: Vec<TypeArg>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeArg {
    Type(TypeExpr),
    Size(usize),
}

/// One parsed statement.
#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    Declaration { name: String, ty: TypeExpr, pos: Pos },
    Binding { name: String, expr: Ast, pos: Pos },
    Expr { expr: Ast, pos: Pos },
}

impl Statement {
    pub fn pos(&self) -> Pos {
        match self {
            Statement::Declaration { pos, .. }
            | Statement::Binding { pos, .. }
            | Statement::Expr { pos, .. } => *pos,
        }
    }
}

const MAX_DEPTH: u32 = 200;

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: Pos,
    depth: u32,
}

impl Parser {
    fn new(source: &str) -> Result<Parser> {
        let toks = tokenize(source)?;
        let end = toks.last().map_or(Pos { line: 1, col: 1 }, |t| Pos {
            line: t.pos.line,
            col: t.pos.col + t.text.chars().count() as u32,
        });
        Ok(Parser {
            toks,
            at: 0,
            end,
            depth: 0,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.at)
    }

    fn peek2(&self) -> Option<&Token> {
        self.toks.get(self.at + 1)
    }

    fn here(&self) -> Pos {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, kind: TokenKind, text: &str) -> bool {
        match self.peek() {
            Some(t) if t.kind == kind && t.text == text => {
                self.at += 1;
                true
            }
            _ => false,
        }
    }

    fn expect(&mut self, kind: TokenKind, text: &str) -> Result<()> {
        if self.eat(kind, text) {
            Ok(())
        } else {
            match self.peek() {
                Some(t) => self.fail(format!("expected '{text}', found '{}'", t.text)),
                None => self.fail(format!("expected '{text}', found end of input")),
            }
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => {
                let name = t.text.clone();
                self.at += 1;
                Ok(name)
            }
            Some(t) => self.fail(format!("expected an identifier, found '{}'", t.text)),
            None => self.fail("expected an identifier, found end of input"),
        }
    }

    fn descend(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::TooDeep);
        }
        Ok(())
    }

    fn program(&mut self) -> Result<Vec<Statement>> {
        let mut out = Vec::new();
        while self.peek().is_some() {
            out.push(self.statement()?);
        }
        Ok(out)
    }

    fn statement(&mut self) -> Result<Statement> {
        let pos = self.here();
        if let (Some(head), Some(mark)) = (self.peek(), self.peek2()) {
            if head.kind == TokenKind::Ident && mark.kind == TokenKind::Op {
                match mark.text.as_str() {
                    ":" => {
                        let name = self.ident()?;
                        self.expect(TokenKind::Op, ":")?;
                        let ty = self.type_expr()?;
                        self.expect(TokenKind::Punct, ";")?;
                        return Ok(Statement::Declaration { name, ty, pos });
                    }
                    ":=" => {
                        let name = self.ident()?;
                        self.expect(TokenKind::Op, ":=")?;
                        let expr = self.expr()?;
                        self.expect(TokenKind::Punct, ";")?;
                        return Ok(Statement::Binding { name, expr, pos });
                    }
                    _ => {}
                }
            }
        }
        let expr = self.expr()?;
        self.expect(TokenKind::Punct, ";")?;
        Ok(Statement::Expr { expr, pos })
    }

    fn type_expr(&mut self) -> Result<TypeExpr> {
        let pos = self.here();
        let name = self.ident()?;
        let mut args = Vec::new();
        if self.eat(TokenKind::Punct, "(") {
            loop {
                match self.peek() {
                    Some(t) if t.kind == TokenKind::Int => {
                        let n: usize = t.text.parse().map_err(|_| Error::Syntax {
                            pos: t.pos,
                            msg: format!("dimension '{}' out of range", t.text),
                        })?;
                        self.at += 1;
                        args.push(TypeArg::Size(n));
                    }
                    _ => args.push(TypeArg::Type(self.type_expr()?)),
                }
                if !self.eat(TokenKind::Punct, ",") {
                    break;
                }
            }
            self.expect(TokenKind::Punct, ")")?;
        }
        Ok(TypeExpr { name, args, pos })
    }

    fn expr(&mut self) -> Result<Ast> {
        self.descend()?;
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat(TokenKind::Op, "+") {
                Op::Add
            } else if self.eat(TokenKind::Op, "-") {
                Op::Sub
            } else {
                break;
            };
            let rhs = self.term()?;
            lhs = Ast::apply(op, vec![lhs, rhs]);
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat(TokenKind::Op, "*") {
                Op::Mul
            } else if self.eat(TokenKind::Op, "/") {
                Op::Div
            } else {
                break;
            };
            let rhs = self.unary()?;
            lhs = Ast::apply(op, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat(TokenKind::Op, "-") {
            let inner = self.atom()?;
            Ok(Ast::apply(Op::Neg, vec![inner]))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        self.descend()?;
        let out = match self.peek() {
            Some(t) if t.kind == TokenKind::Int => {
                let n: BigInt = t.text.parse().expect("digit run");
                self.at += 1;
                Ok(Ast::literal(Value::Integer(n)))
            }
            Some(t) if t.kind == TokenKind::Ident => {
                let name = t.text.clone();
                self.at += 1;
                Ok(Ast::sym(&name))
            }
            Some(t) if t.kind == TokenKind::Punct && t.text == "(" => {
                self.at += 1;
                let inner = self.expr()?;
                self.expect(TokenKind::Punct, ")")?;
                Ok(inner)
            }
            Some(t) => self.fail(format!("unexpected token '{}'", t.text)),
            None => self.fail("unexpected end of input"),
        };
        self.depth -= 1;
        out
    }
}

/// Parse a whole program: a sequence of `;`-terminated statements.
pub fn parse_program(source: &str) -> Result<Vec<Statement>> {
    Parser::new(source)?.program()
}

/// Parse a single expression spanning the whole input.
pub fn parse_expr(source: &str) -> Result<Ast> {
    let mut p = Parser::new(source)?;
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax {
            pos: t.pos,
            msg: format!("unexpected token '{}' after expression", t.text),
        });
    }
    Ok(e)
}

/// Parse a single type expression spanning the whole input.
pub fn parse_type(source: &str) -> Result<TypeExpr> {
    let mut p = Parser::new(source)?;
    let ty = p.type_expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax {
            pos: t.pos,
            msg: format!("unexpected token '{}' after type", t.text),
        });
    }
    Ok(ty)
}

/// Resolve a surface type expression to a tag, validating parameters.
pub fn resolve_type(ty: &TypeExpr) -> Result<TypeTag> {
    let plain = |tag: TypeTag, args: &[TypeArg]| {
        if args.is_empty() {
            Ok(tag)
        } else {
            Err(Error::InvalidType {
                tag: tag.to_string(),
                msg: "takes no parameters".into(),
            })
        }
    };
    let tag = match ty.name.as_str() {
        "Integer" => plain(TypeTag::Integer, &ty.args)?,
        "Rational" => plain(TypeTag::Rational, &ty.args)?,
        "ComplexQ" => plain(TypeTag::ComplexQ, &ty.args)?,
        "Quaternion" => plain(TypeTag::Quaternion, &ty.args)?,
        "Polynomial" => match ty.args.as_slice() {
            [TypeArg::Type(coeff)] => TypeTag::polynomial(resolve_type(coeff)?),
            _ => {
                return Err(Error::InvalidType {
                    tag: "Polynomial".into(),
                    msg: "expected Polynomial(T)".into(),
                })
            }
        },
        "Matrix" => match ty.args.as_slice() {
            [TypeArg::Type(entry), TypeArg::Size(n)] => TypeTag::matrix(resolve_type(entry)?, *n),
            _ => {
                return Err(Error::InvalidType {
                    tag: "Matrix".into(),
                    msg: "expected Matrix(T, n)".into(),
                })
            }
        },
        other => {
            return Err(Error::UnknownType {
                name: other.to_string(),
            })
        }
    };
    tag.validate()?;
    Ok(tag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_precedence_examples() {
        // x + i*y groups the product first
        let e = parse_expr("x + i*y").unwrap();
        let expected = Ast::apply(
            Op::Add,
            vec![
                Ast::sym("x"),
                Ast::apply(Op::Mul, vec![Ast::sym("i"), Ast::sym("y")]),
            ],
        );
        assert_eq!(e, expected);

        let e = parse_expr("a*y + 2").unwrap();
        let expected = Ast::apply(
            Op::Add,
            vec![
                Ast::apply(Op::Mul, vec![Ast::sym("a"), Ast::sym("y")]),
                Ast::int(2),
            ],
        );
        assert_eq!(e, expected);

        assert_eq!(
            parse_expr("-(x)").unwrap(),
            Ast::apply(Op::Neg, vec![Ast::sym("x")])
        );
    }

    #[test]
    fn unary_minus_binds_tightest() {
        // -x*y parses as (-x)*y
        let e = parse_expr("-x*y").unwrap();
        let expected = Ast::apply(
            Op::Mul,
            vec![Ast::apply(Op::Neg, vec![Ast::sym("x")]), Ast::sym("y")],
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn left_associativity() {
        let e = parse_expr("a - b - c").unwrap();
        let expected = Ast::apply(
            Op::Sub,
            vec![
                Ast::apply(Op::Sub, vec![Ast::sym("a"), Ast::sym("b")]),
                Ast::sym("c"),
            ],
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn statement_forms() {
        let stmts = parse_program("x : Rational; x := 1/2;").unwrap();
        assert_eq!(stmts.len(), 2);
        match &stmts[0] {
            Statement::Declaration { name, ty, .. } => {
                assert_eq!(name, "x");
                assert_eq!(resolve_type(ty).unwrap(), TypeTag::Rational);
            }
            other => panic!("expected a declaration, got {other:?}"),
        }
        match &stmts[1] {
            Statement::Binding { name, .. } => assert_eq!(name, "x"),
            other => panic!("expected a binding, got {other:?}"),
        }

        let stmts = parse_program("q : Quaternion;").unwrap();
        assert!(matches!(&stmts[0], Statement::Declaration { name, .. } if name == "q"));
    }

    #[test]
    fn missing_expression_fails_at_the_semicolon() {
        let err = parse_program("x := ;").unwrap_err();
        assert_eq!(err.pos(), Some(Pos { line: 1, col: 6 }));
    }

    #[test]
    fn unbalanced_parenthesis_is_reported() {
        assert!(parse_expr("(x + 1").is_err());
        assert!(parse_expr("x + 1)").is_err());
    }

    #[test]
    fn parameterized_types_parse_and_resolve() {
        let ty = parse_type("Matrix(Rational, 2)").unwrap();
        assert_eq!(
            resolve_type(&ty).unwrap(),
            TypeTag::matrix(TypeTag::Rational, 2)
        );
        let ty = parse_type("Polynomial(Polynomial(Integer))").unwrap();
        assert_eq!(
            resolve_type(&ty).unwrap(),
            TypeTag::polynomial(TypeTag::polynomial(TypeTag::Integer))
        );
        assert!(resolve_type(&parse_type("Polynomial(Quaternion)").unwrap()).is_err());
        assert!(resolve_type(&parse_type("Rational(2)").unwrap()).is_err());
        assert!(matches!(
            resolve_type(&parse_type("Octonion").unwrap()),
            Err(Error::UnknownType { .. })
        ));
    }

    #[test]
    fn deep_nesting_is_cut_off_instead_of_overflowing() {
        let mut src = String::new();
        for _ in 0..5000 {
            src.push('(');
        }
        src.push('x');
        for _ in 0..5000 {
            src.push(')');
        }
        assert!(matches!(parse_expr(&src), Err(Error::TooDeep)));
    }
}
