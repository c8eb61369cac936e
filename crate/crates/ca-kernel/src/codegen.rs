//! Back end of the translator: lowering structures, carriers, and
//! expression trees to abstract object-oriented class declarations, and
//! emitting them in a Pascal-like notation.
//!
//! Emission is deterministic and byte-stable: fixed member order, two-space
//! indentation, LF line endings. Expression trees lower to one node class
//! per application — an object holding references to its arguments and an
//! `Eval` member for the node's single operator — so the tree's arrows are
//! inverted into ordinary object references.

use crate::error::{Error, Result};
use crate::expr::{Ast, Expr, TypedExpr};
use crate::parse::{parse_expr, print_expr};
use crate::structure::{
    builtin_registry, ConstDecl, OpSignature, OpSymbol, StructureKind, StructureName,
};
use crate::tag::TypeTag;
use crate::value::Value;

/// An abstract class declaration.
#[derive(Debug, Clone, PartialEq)]
pub struct OoClass {
    pub name: String,
    pub parent: Option<String>,
    pub fields: Vec<(String, String)>,
    pub members: Vec<Member>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemberKind {
    Operation,
    Function,
    Const,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MemberBody {
    /// Provided by the runtime; only the signature is emitted.
    Primitive,
    /// A one-operator expression over field references.
    Expression(Ast),
    /// A constant value.
    Constant(Value),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Member {
    pub kind: MemberKind,
    pub name: String,
    pub signature: String,
    pub body: MemberBody,
}

impl Member {
    fn primitive(kind: MemberKind, name: impl Into<String>, signature: String) -> Member {
        Member {
            kind,
            name: name.into(),
            signature,
            body: MemberBody::Primitive,
        }
    }
}

/// Class name of the carrier behind a tag. Parameterized carriers keep
/// their base name; the parameters show up in field types instead.
pub fn carrier_class_name(tag: &TypeTag) -> &'static str {
    match tag {
        TypeTag::Integer => "Integer",
        TypeTag::Rational => "Rational",
        TypeTag::ComplexQ => "ComplexQ",
        TypeTag::Quaternion => "Quaternion",
        TypeTag::Polynomial(_) => "Polynomial",
        TypeTag::Matrix(..) => "Matrix",
    }
}

fn abstract_signature(op: &OpSignature) -> String {
    let result = op.result.as_str();
    if op.symbol.is_function() {
        format!(
            "function {}(A : {}) : {}",
            op.symbol.text(),
            op.operands[0].as_str(),
            result
        )
    } else if op.arity() == 1 {
        format!(
            "operation {} (A : {}) : {}",
            op.symbol.text(),
            op.operands[0].as_str(),
            result
        )
    } else if op.operands[0] == op.operands[1] {
        format!(
            "operation {} (A,B : {}) : {}",
            op.symbol.text(),
            op.operands[0].as_str(),
            result
        )
    } else {
        format!(
            "operation {} (A : {}; B : {}) : {}",
            op.symbol.text(),
            op.operands[0].as_str(),
            op.operands[1].as_str(),
            result
        )
    }
}

fn member_name(symbol: OpSymbol) -> String {
    match symbol {
        OpSymbol::Add => "op_add".into(),
        OpSymbol::Sub => "op_sub".into(),
        OpSymbol::Neg => "op_neg".into(),
        OpSymbol::Mul => "op_mul".into(),
        OpSymbol::Div => "op_div".into(),
        other => other.text().into(),
    }
}

/// Lower an abstract structure to a class: one member per required
/// operation and constant, all bodies primitive.
///
/// The emitted class library roots at `Module = Object;`, exactly as the
/// source listing writes it; `Semigroup` and `Group` sit above `Module` in
/// the registry lattice but the emitted `Module` header does not name them.
pub fn lower_structure(kind: &StructureKind) -> OoClass {
    let mut members = Vec::new();
    for op in &kind.required_ops {
        let mk = if op.symbol.is_function() {
            MemberKind::Function
        } else {
            MemberKind::Operation
        };
        // The scalar action shares '*' with the ring product; suffix its
        // member name to keep names unique within the class.
        let name = if op.operands.len() == 2 && op.operands[0] != op.operands[1] {
            format!("{}_scalar", member_name(op.symbol))
        } else {
            member_name(op.symbol)
        };
        members.push(Member {
            kind: mk,
            name,
            signature: abstract_signature(op),
            body: MemberBody::Primitive,
        });
    }
    for c in &kind.required_consts {
        members.push(Member::primitive(
            MemberKind::Const,
            c.role.name(),
            const_signature(c),
        ));
    }
    let parent = if kind.name == StructureName::Module {
        None
    } else {
        kind.parents.first().map(|p| p.to_string())
    };
    OoClass {
        name: kind.name.to_string(),
        parent,
        fields: vec![],
        members,
    }
}

fn const_signature(c: &ConstDecl) -> String {
    format!("const {} : {}", c.role.name(), c.structure.as_str())
}

/// Classes for the whole built-in lattice, in lattice order. This is the
/// standard library every emitted program shares.
pub fn lower_builtin_structures() -> Vec<OoClass> {
    builtin_registry()
        .kinds()
        .iter()
        .map(lower_structure)
        .collect()
}

/// Lower a concrete carrier: parent is the most specific satisfied
/// structure, data fields describe the representation, members list the
/// implemented operations with primitive bodies.
pub fn lower_concrete(tag: &TypeTag) -> OoClass {
    let name = carrier_class_name(tag).to_string();
    let parent = tag
        .satisfied()
        .first()
        .map(|s| s.as_str().to_string());

    // The quaternion listing calls its scalar type "Number"; other carriers
    // name their component types concretely.
    let (fields, scalar): (Vec<(String, String)>, String) = match tag {
        TypeTag::Integer => (vec![], "Integer".into()),
        TypeTag::Rational => (
            vec![
                ("Num".into(), "Integer".into()),
                ("Den".into(), "Integer".into()),
            ],
            "Rational".into(),
        ),
        TypeTag::ComplexQ => (
            vec![
                ("Re".into(), "Rational".into()),
                ("Im".into(), "Rational".into()),
            ],
            "Rational".into(),
        ),
        TypeTag::Quaternion => (
            vec![("Data".into(), "array [0..3] of Number".into())],
            "Number".into(),
        ),
        TypeTag::Polynomial(coeff) => (
            vec![(
                "Coeffs".into(),
                format!("array of {}", carrier_class_name(coeff)),
            )],
            carrier_class_name(coeff).into(),
        ),
        TypeTag::Matrix(entry, _) => (
            vec![
                ("N".into(), "Integer".into()),
                (
                    "Data".into(),
                    format!("array [1..N, 1..N] of {}", carrier_class_name(entry)),
                ),
            ],
            carrier_class_name(entry).into(),
        ),
    };

    let mut members = Vec::new();
    if matches!(tag, TypeTag::Quaternion | TypeTag::Matrix(..)) {
        members.push(Member::primitive(
            MemberKind::Function,
            "Norm",
            format!("function Norm : {scalar}"),
        ));
    }
    for symbol in [
        OpSymbol::Add,
        OpSymbol::Sub,
        OpSymbol::Neg,
        OpSymbol::Mul,
        OpSymbol::Div,
    ] {
        let sig = if symbol.arity() == 1 {
            format!("operation {} (A : {name}) : {name}", symbol.text())
        } else {
            format!("operation {} (A,B : {name}) : {name}", symbol.text())
        };
        members.push(Member::primitive(MemberKind::Operation, member_name(symbol), sig));
    }
    members.push(Member::primitive(
        MemberKind::Function,
        "Inversion",
        format!("function Inversion : {name}"),
    ));
    if matches!(
        tag,
        TypeTag::ComplexQ | TypeTag::Quaternion | TypeTag::Matrix(..)
    ) {
        members.push(Member::primitive(
            MemberKind::Function,
            "Conj",
            format!("function Conj : {name}"),
        ));
    }
    members.push(Member::primitive(
        MemberKind::Const,
        "Zero",
        format!("const Zero : {name}"),
    ));
    members.push(Member::primitive(
        MemberKind::Const,
        "Unit",
        format!("const Unit : {name}"),
    ));

    OoClass {
        name,
        parent,
        fields,
        members,
    }
}

/// Literals that read back as themselves can be inlined in an `Eval` body;
/// everything else becomes a constant member.
fn inlineable(value: &Value) -> bool {
    matches!(value, Value::Integer(n) if n.sign() != num::bigint::Sign::Minus)
}

struct ExprLowering {
    classes: Vec<OoClass>,
    counter: usize,
    root_name: String,
}

impl ExprLowering {
    fn node_class(&mut self, e: &TypedExpr, is_root: bool) -> String {
        let Expr::Apply { op, args, tag } = e else {
            unreachable!("node_class is only called on applications");
        };
        let mut fields: Vec<(String, String)> = Vec::new();
        let mut members: Vec<Member> = Vec::new();
        let mut body_args: Vec<Ast> = Vec::new();
        let mut consts = 0usize;

        for arg in args {
            match arg {
                Expr::Apply { .. } => {
                    let child = self.node_class(arg, false);
                    fields.push((child.clone(), child.clone()));
                    body_args.push(Ast::sym(&child));
                }
                Expr::FreeSymbol { name, tag } => {
                    if !fields.iter().any(|(f, _)| f == name) {
                        fields.push((name.clone(), carrier_class_name(tag).to_string()));
                    }
                    body_args.push(Ast::sym(name));
                }
                Expr::Literal { value, tag } => {
                    if inlineable(value) {
                        body_args.push(Ast::literal(value.clone()));
                    } else {
                        consts += 1;
                        let cname = format!("c{consts}");
                        members.push(Member {
                            kind: MemberKind::Const,
                            name: cname.clone(),
                            signature: format!(
                                "const {cname} : {}",
                                carrier_class_name(tag)
                            ),
                            body: MemberBody::Constant(value.clone()),
                        });
                        body_args.push(Ast::sym(&cname));
                    }
                }
            }
        }

        let name = if is_root {
            self.root_name.clone()
        } else {
            self.counter += 1;
            format!("{}_n{}", self.root_name, self.counter)
        };
        members.push(Member {
            kind: MemberKind::Function,
            name: "Eval".into(),
            signature: format!("function Eval : {}", carrier_class_name(tag)),
            body: MemberBody::Expression(Ast::apply(*op, body_args)),
        });
        self.classes.push(OoClass {
            name: name.clone(),
            parent: Some(carrier_class_name(tag).to_string()),
            fields,
            members,
        });
        name
    }
}

/// Lower a bound expression to node classes, one per application, named
/// `name_n1`, `name_n2`, ... in post-order with the root class named
/// `name` and emitted last.
pub fn lower_expr(name: &str, e: &TypedExpr) -> Vec<OoClass> {
    match e {
        Expr::Apply { .. } => {
            let mut lowering = ExprLowering {
                classes: Vec::new(),
                counter: 0,
                root_name: name.to_string(),
            };
            lowering.node_class(e, true);
            lowering.classes
        }
        Expr::Literal { value, tag } => vec![OoClass {
            name: name.to_string(),
            parent: Some(carrier_class_name(tag).to_string()),
            fields: vec![],
            members: vec![Member {
                kind: MemberKind::Const,
                name: "Value".into(),
                signature: format!("const Value : {}", carrier_class_name(tag)),
                body: MemberBody::Constant(value.clone()),
            }],
        }],
        Expr::FreeSymbol { name: sym, tag } => vec![OoClass {
            name: name.to_string(),
            parent: Some(carrier_class_name(tag).to_string()),
            fields: vec![(sym.clone(), carrier_class_name(tag).to_string())],
            members: vec![Member {
                kind: MemberKind::Function,
                name: "Eval".into(),
                signature: format!("function Eval : {}", carrier_class_name(tag)),
                body: MemberBody::Expression(Ast::sym(sym)),
            }],
        }],
    }
}

/// Emit classes in input order. Byte-exact for identical input: headers are
/// `Name = Object;` or `Name = Object(Parent)`, members indent two spaces,
/// trailers close with `end; { Name }`, blocks are separated by one blank
/// line, and the text ends with a newline when nonempty.
pub fn emit(classes: &[OoClass]) -> String {
    let blocks: Vec<String> = classes.iter().map(class_text).collect();
    if blocks.is_empty() {
        String::new()
    } else {
        format!("{}\n", blocks.join("\n\n"))
    }
}

fn class_text(c: &OoClass) -> String {
    let mut lines = Vec::new();
    match &c.parent {
        None => lines.push(format!("{} = Object;", c.name)),
        Some(p) => lines.push(format!("{} = Object({})", c.name, p)),
    }
    for (name, ty) in &c.fields {
        lines.push(format!("  {name} : {ty};"));
    }
    for m in &c.members {
        match &m.body {
            MemberBody::Primitive => lines.push(format!("  {};", m.signature)),
            MemberBody::Expression(e) => {
                lines.push(format!("  {} = {};", m.signature, print_expr(e)))
            }
            MemberBody::Constant(v) => lines.push(format!("  {} = {};", m.signature, v)),
        }
    }
    lines.push(format!("end; {{ {} }}", c.name));
    lines.join("\n")
}

/// Rebuild the untyped skeleton from lowered node classes by re-parsing
/// each `Eval` body and chasing the reference fields. Inverse of
/// [`lower_expr`] up to tag erasure.
pub fn recompose_expr(classes: &[OoClass]) -> Result<Ast> {
    let root = classes.last().ok_or_else(|| Error::Syntax {
        pos: crate::error::Pos { line: 1, col: 1 },
        msg: "no classes to recompose".into(),
    })?;
    build_node(root, classes)
}

fn build_node(class: &OoClass, classes: &[OoClass]) -> Result<Ast> {
    if let Some(Member {
        body: MemberBody::Constant(v),
        ..
    }) = class.members.iter().find(|m| m.name == "Value")
    {
        return Ok(Ast::literal(v.clone()));
    }
    let eval = class
        .members
        .iter()
        .find(|m| m.name == "Eval")
        .ok_or_else(|| Error::Syntax {
            pos: crate::error::Pos { line: 1, col: 1 },
            msg: format!("class {} has no Eval member", class.name),
        })?;
    let MemberBody::Expression(body) = &eval.body else {
        return Err(Error::Syntax {
            pos: crate::error::Pos { line: 1, col: 1 },
            msg: format!("class {} has a primitive Eval", class.name),
        });
    };
    // Round-trip through the emitted text, as a reader of the output would.
    let reparsed = parse_expr(&print_expr(body))?;
    resolve_refs(&reparsed, class, classes)
}

fn resolve_refs(e: &Ast, class: &OoClass, classes: &[OoClass]) -> Result<Ast> {
    match e {
        Expr::Literal { .. } => Ok(e.clone()),
        Expr::FreeSymbol { name, .. } => {
            if let Some(child) = classes.iter().find(|c| c.name == *name) {
                return build_node(child, classes);
            }
            if let Some(Member {
                body: MemberBody::Constant(v),
                ..
            }) = class.members.iter().find(|m| m.name == *name)
            {
                return Ok(Ast::literal(v.clone()));
            }
            Ok(e.clone())
        }
        Expr::Apply { op, args, .. } => Ok(Ast::apply(
            *op,
            args.iter()
                .map(|a| resolve_refs(a, class, classes))
                .collect::<Result<_>>()?,
        )),
    }
}
