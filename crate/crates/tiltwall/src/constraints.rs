//! A small constraint language for destabilization systems over unknown
//! integer coordinates, so enumeration problems are configuration rather
//! than code.
//!
//! # Grammar (EBNF)
//!
//! ```text
//! system     = { line } ;
//! line       = [ decl | clause ] [ comment ] ( NEWLINE | ";" ) ;
//! decl       = "var" variable "in" "[" bound "," bound "]" ;
//! bound      = [ "-" ] integer ;
//! clause     = or-expr ;                          (* must typecheck to Bool *)
//! or-expr    = and-expr { "or" and-expr } ;
//! and-expr   = cmp-expr { "and" cmp-expr } ;
//! cmp-expr   = operand [ ( "<" | "<=" | "=" | ">=" | ">" ) operand ] ;
//! operand    = "not" operand | sum ;
//! sum        = product { ( "+" | "-" ) product } ;
//! product    = unary { ( "*" | "/" ) unary } ;
//! unary      = "-" unary | atom ;
//! atom       = integer | variable | class-name
//!            | accessor "(" or-expr ")" | "(" or-expr ")" ;
//! variable   = "a" | "b" | "c" | "d" ;
//! class-name = "E" | "O" | "I_x" | "v" | "w" | "s" | "t" | "target" ;
//! accessor   = "imZ" | "reZ" | "imZ0" | "reZ0" | "delta" | "ch1beta"
//!            | "mu" | "mu0" | "muClassical" ;
//! comment    = "#" { any character except NEWLINE } ;
//! ```
//!
//! A system is the conjunction of its clauses, evaluated in order with
//! short-circuiting. Typing rules: variables and integer literals are `Num`;
//! class names are `Class`; `Num·Class` and `Class ± Class` are `Class`;
//! `mu`/`mu0`/`muClassical` of a `Class` is `Slope`; the other accessors give
//! `Num`; comparisons accept `Num`/`Slope` operands (a `Num` coerces to a
//! finite slope) and give `Bool`; `not`/`and`/`or` require `Bool`. Slopes
//! never enter arithmetic. Division of two integer literals (and literal
//! negation) is folded at parse time, so `25/36` is a rational literal.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{ChernCharacter, Rational};
use crate::threefold::{FanoContext, LatticeBasis, NamedClass};
use crate::tilt::{self, Slope, TiltPoint};

/// Unknowns a constraint system may quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum VarName {
    A,
    B,
    C,
    D,
}

impl VarName {
    pub const ALL: [VarName; 4] = [VarName::A, VarName::B, VarName::C, VarName::D];

    pub fn index(self) -> usize {
        match self {
            VarName::A => 0,
            VarName::B => 1,
            VarName::C => 2,
            VarName::D => 3,
        }
    }

    fn from_ident(s: &str) -> Option<VarName> {
        match s {
            "a" => Some(VarName::A),
            "b" => Some(VarName::B),
            "c" => Some(VarName::C),
            "d" => Some(VarName::D),
            _ => None,
        }
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VarName::A => "a",
            VarName::B => "b",
            VarName::C => "c",
            VarName::D => "d",
        };
        write!(f, "{s}")
    }
}

/// Names resolvable to a Chern character through the evaluation environment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassRef {
    E,
    O,
    IdealOfPoint,
    V,
    W,
    S,
    T,
    Target,
}

impl ClassRef {
    fn from_ident(s: &str) -> Option<ClassRef> {
        match s {
            "E" => Some(ClassRef::E),
            "O" => Some(ClassRef::O),
            "I_x" => Some(ClassRef::IdealOfPoint),
            "v" => Some(ClassRef::V),
            "w" => Some(ClassRef::W),
            "s" => Some(ClassRef::S),
            "t" => Some(ClassRef::T),
            "target" => Some(ClassRef::Target),
            _ => None,
        }
    }
}

impl fmt::Display for ClassRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassRef::E => "E",
            ClassRef::O => "O",
            ClassRef::IdealOfPoint => "I_x",
            ClassRef::V => "v",
            ClassRef::W => "w",
            ClassRef::S => "s",
            ClassRef::T => "t",
            ClassRef::Target => "target",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Accessor {
    ImZ,
    ReZ,
    ImZ0,
    ReZ0,
    Delta,
    Ch1Beta,
    Mu,
    Mu0,
    MuClassical,
}

impl Accessor {
    fn from_ident(s: &str) -> Option<Accessor> {
        match s {
            "imZ" => Some(Accessor::ImZ),
            "reZ" => Some(Accessor::ReZ),
            "imZ0" => Some(Accessor::ImZ0),
            "reZ0" => Some(Accessor::ReZ0),
            "delta" => Some(Accessor::Delta),
            "ch1beta" => Some(Accessor::Ch1Beta),
            "mu" => Some(Accessor::Mu),
            "mu0" => Some(Accessor::Mu0),
            "muClassical" => Some(Accessor::MuClassical),
            _ => None,
        }
    }

    fn returns_slope(self) -> bool {
        matches!(self, Accessor::Mu | Accessor::Mu0 | Accessor::MuClassical)
    }
}

impl fmt::Display for Accessor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Accessor::ImZ => "imZ",
            Accessor::ReZ => "reZ",
            Accessor::ImZ0 => "imZ0",
            Accessor::ReZ0 => "reZ0",
            Accessor::Delta => "delta",
            Accessor::Ch1Beta => "ch1beta",
            Accessor::Mu => "mu",
            Accessor::Mu0 => "mu0",
            Accessor::MuClassical => "muClassical",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl fmt::Display for CmpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        };
        write!(f, "{s}")
    }
}

/// Expression AST. Nodes carry no source spans, so structurally equal
/// expressions compare equal; positions appear only in diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Var(VarName),
    Class(ClassRef),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Accessor(Accessor, Box<Expr>),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

/// Static type of an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Num,
    Class,
    Slope,
    Bool,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Num => "number",
            Kind::Class => "class",
            Kind::Slope => "slope",
            Kind::Bool => "boolean",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarDecl {
    pub name: VarName,
    pub range: (i64, i64),
}

/// A parsed, typechecked conjunction of boolean clauses over the unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub variables: Vec<VarDecl>,
    pub clauses: Vec<Expr>,
}

impl ConstraintSystem {
    /// Variables that occur in at least one clause, in a–d order.
    pub fn used_variables(&self) -> Vec<VarName> {
        let mut set = BTreeSet::new();
        for clause in &self.clauses {
            collect_vars(clause, &mut set);
        }
        set.into_iter().collect()
    }

    /// Declared range for a variable, when present.
    pub fn declared_range(&self, name: VarName) -> Option<(i64, i64)> {
        self.variables
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.range)
    }
}

fn collect_vars(e: &Expr, out: &mut BTreeSet<VarName>) {
    match e {
        Expr::Number(_) | Expr::Class(_) => {}
        Expr::Var(v) => {
            out.insert(*v);
        }
        Expr::Neg(x) | Expr::Not(x) | Expr::Accessor(_, x) => collect_vars(x, out),
        Expr::Add(x, y)
        | Expr::Sub(x, y)
        | Expr::Mul(x, y)
        | Expr::Div(x, y)
        | Expr::Cmp(_, x, y)
        | Expr::And(x, y)
        | Expr::Or(x, y) => {
            collect_vars(x, out);
            collect_vars(y, out);
        }
    }
}

const CATALOG: &str = "variables a, b, c, d; classes E, O, I_x, v, w, s, t, target; \
accessors imZ, reZ, imZ0, reZ0, delta, ch1beta, mu, mu0, muClassical";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Syntax {
        line: u32,
        col: u32,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: unknown identifier {name:?}; known names: {CATALOG}")]
    UnknownIdentifier { line: u32, col: u32, name: String },
    #[error("{line}:{col}: type error: {message}")]
    Type { line: u32, col: u32, message: String },
    #[error("{line}:{col}: variable {name} declared twice")]
    DuplicateVariable { line: u32, col: u32, name: VarName },
    #[error("{line}:{col}: empty range [{lo}, {hi}]")]
    EmptyRange { line: u32, col: u32, lo: i64, hi: i64 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} has no assigned value")]
    UnboundVariable(VarName),
    #[error("class {name} is not available in this environment: {reason}")]
    ClassUnavailable { name: String, reason: String },
    #[error("ill-typed expression reached the evaluator: {0}")]
    TypeMismatch(String),
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Newline,
    Ident(String),
    Int(String),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Newline => write!(f, "end of line"),
            Tok::Ident(s) => write!(f, "{s:?}"),
            Tok::Int(s) => write!(f, "{s}"),
            Tok::Sym(s) => write!(f, "\"{s}\""),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: u32,
    col: u32,
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
}

impl Scanner {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

fn lex(text: &str) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let mut sc = Scanner {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    };
    while let Some(ch) = sc.peek() {
        let (tline, tcol) = (sc.line, sc.col);
        match ch {
            '\n' | ';' => {
                sc.bump();
                out.push(Lexed { tok: Tok::Newline, line: tline, col: tcol });
            }
            '#' => {
                while let Some(c) = sc.peek() {
                    if c == '\n' {
                        break;
                    }
                    sc.bump();
                }
            }
            c if c.is_whitespace() => {
                sc.bump();
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(c) = sc.peek() {
                    if c.is_ascii_digit() {
                        s.push(sc.bump());
                    } else {
                        break;
                    }
                }
                out.push(Lexed { tok: Tok::Int(s), line: tline, col: tcol });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(c) = sc.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(sc.bump());
                    } else {
                        break;
                    }
                }
                out.push(Lexed { tok: Tok::Ident(s), line: tline, col: tcol });
            }
            '<' | '>' => {
                let first = sc.bump();
                let two = sc.peek() == Some('=');
                if two {
                    sc.bump();
                }
                let sym = match (first, two) {
                    ('<', true) => "<=",
                    ('<', false) => "<",
                    (_, true) => ">=",
                    (_, false) => ">",
                };
                out.push(Lexed { tok: Tok::Sym(sym), line: tline, col: tcol });
            }
            '=' | '+' | '-' | '*' | '/' | '(' | ')' | '[' | ']' | ',' => {
                let sym = match sc.bump() {
                    '=' => "=",
                    '+' => "+",
                    '-' => "-",
                    '*' => "*",
                    '/' => "/",
                    '(' => "(",
                    ')' => ")",
                    '[' => "[",
                    ']' => "]",
                    _ => ",",
                };
                out.push(Lexed { tok: Tok::Sym(sym), line: tline, col: tcol });
            }
            other => {
                return Err(ParseError::Syntax {
                    line: tline,
                    col: tcol,
                    expected: "a token".to_string(),
                    found: format!("{other:?}"),
                });
            }
        }
    }
    out.push(Lexed {
        tok: Tok::Eof,
        line: sc.line,
        col: sc.col,
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser (typechecks while building, so type errors carry positions)

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

type Typed = (Expr, Kind);

impl Parser {
    fn peek(&self) -> &Lexed {
        &self.toks[self.pos]
    }

    fn advance(&mut self) -> &Lexed {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            col: t.col,
            expected: expected.to_string(),
            found: t.tok.to_string(),
        }
    }

    fn type_err(&self, at: (u32, u32), message: String) -> ParseError {
        ParseError::Type {
            line: at.0,
            col: at.1,
            message,
        }
    }

    fn expect_sym(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.at_sym(sym) {
            self.advance();
            Ok(())
        } else {
            Err(self.err(&format!("\"{sym}\"")))
        }
    }

    fn at_sym(&self, sym: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(s) if *s == sym)
    }

    fn at_ident(&self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn here(&self) -> (u32, u32) {
        let t = self.peek();
        (t.line, t.col)
    }

    fn parse_or(&mut self) -> Result<Typed, ParseError> {
        let (mut lhs, mut kind) = self.parse_and()?;
        while self.at_ident("or") {
            let at = self.here();
            self.advance();
            let (rhs, rkind) = self.parse_and()?;
            if kind != Kind::Bool || rkind != Kind::Bool {
                return Err(self.type_err(
                    at,
                    format!("\"or\" needs boolean operands, got {kind} and {rkind}"),
                ));
            }
            lhs = Expr::Or(Box::new(lhs), Box::new(rhs));
            kind = Kind::Bool;
        }
        Ok((lhs, kind))
    }

    fn parse_and(&mut self) -> Result<Typed, ParseError> {
        let (mut lhs, mut kind) = self.parse_cmp()?;
        while self.at_ident("and") {
            let at = self.here();
            self.advance();
            let (rhs, rkind) = self.parse_cmp()?;
            if kind != Kind::Bool || rkind != Kind::Bool {
                return Err(self.type_err(
                    at,
                    format!("\"and\" needs boolean operands, got {kind} and {rkind}"),
                ));
            }
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
            kind = Kind::Bool;
        }
        Ok((lhs, kind))
    }

    fn parse_cmp(&mut self) -> Result<Typed, ParseError> {
        let (lhs, lkind) = self.parse_operand()?;
        let op = match &self.peek().tok {
            Tok::Sym("<") => Some(CmpOp::Lt),
            Tok::Sym("<=") => Some(CmpOp::Le),
            Tok::Sym("=") => Some(CmpOp::Eq),
            Tok::Sym(">=") => Some(CmpOp::Ge),
            Tok::Sym(">") => Some(CmpOp::Gt),
            _ => None,
        };
        let Some(op) = op else {
            return Ok((lhs, lkind));
        };
        let at = self.here();
        self.advance();
        let (rhs, rkind) = self.parse_operand()?;
        for k in [lkind, rkind] {
            if !matches!(k, Kind::Num | Kind::Slope) {
                return Err(self.type_err(
                    at,
                    format!("comparison operands must be numbers or slopes, got {k}"),
                ));
            }
        }
        Ok((Expr::Cmp(op, Box::new(lhs), Box::new(rhs)), Kind::Bool))
    }

    fn parse_operand(&mut self) -> Result<Typed, ParseError> {
        if self.at_ident("not") {
            let at = self.here();
            self.advance();
            let (inner, kind) = self.parse_operand()?;
            if kind != Kind::Bool {
                return Err(self.type_err(at, format!("\"not\" needs a boolean, got {kind}")));
            }
            return Ok((Expr::Not(Box::new(inner)), Kind::Bool));
        }
        self.parse_sum()
    }

    fn parse_sum(&mut self) -> Result<Typed, ParseError> {
        let (mut lhs, mut kind) = self.parse_product()?;
        loop {
            let sub = if self.at_sym("+") {
                false
            } else if self.at_sym("-") {
                true
            } else {
                break;
            };
            let at = self.here();
            self.advance();
            let (rhs, rkind) = self.parse_product()?;
            let out = match (kind, rkind) {
                (Kind::Num, Kind::Num) => Kind::Num,
                (Kind::Class, Kind::Class) => Kind::Class,
                _ => {
                    return Err(self.type_err(
                        at,
                        format!("cannot add/subtract {kind} and {rkind}"),
                    ))
                }
            };
            lhs = if sub {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            };
            kind = out;
        }
        Ok((lhs, kind))
    }

    fn parse_product(&mut self) -> Result<Typed, ParseError> {
        let (mut lhs, mut kind) = self.parse_unary()?;
        loop {
            let div = if self.at_sym("*") {
                false
            } else if self.at_sym("/") {
                true
            } else {
                break;
            };
            let at = self.here();
            self.advance();
            let (rhs, rkind) = self.parse_unary()?;
            let out = match (div, kind, rkind) {
                (_, Kind::Num, Kind::Num) => Kind::Num,
                (false, Kind::Num, Kind::Class) | (false, Kind::Class, Kind::Num) => Kind::Class,
                (false, ..) => {
                    return Err(self.type_err(
                        at,
                        format!("cannot multiply {kind} and {rkind}"),
                    ))
                }
                (true, ..) => {
                    return Err(self.type_err(
                        at,
                        format!("cannot divide {kind} by {rkind}"),
                    ))
                }
            };
            lhs = if div {
                // Fold literal/literal division into a rational literal,
                // keeping zero denominators for the evaluator to report.
                let folded = match (&lhs, &rhs) {
                    (Expr::Number(x), Expr::Number(y)) if !y.is_zero() => {
                        Some(Expr::Number(x / y))
                    }
                    _ => None,
                };
                folded.unwrap_or_else(|| Expr::Div(Box::new(lhs), Box::new(rhs)))
            } else {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            };
            kind = out;
        }
        Ok((lhs, kind))
    }

    fn parse_unary(&mut self) -> Result<Typed, ParseError> {
        if self.at_sym("-") {
            let at = self.here();
            self.advance();
            let (inner, kind) = self.parse_unary()?;
            if !matches!(kind, Kind::Num | Kind::Class) {
                return Err(self.type_err(at, format!("cannot negate a {kind}")));
            }
            let folded = match inner {
                Expr::Number(x) => Expr::Number(-&x),
                other => Expr::Neg(Box::new(other)),
            };
            return Ok((folded, kind));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Typed, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(digits) => {
                self.advance();
                let value: Rational = digits.parse().expect("digit strings parse as rationals");
                Ok((Expr::Number(value), Kind::Num))
            }
            Tok::Sym("(") => {
                self.advance();
                let inner = self.parse_or()?;
                self.expect_sym(")")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let at = self.here();
                if let Some(var) = VarName::from_ident(&name) {
                    self.advance();
                    return Ok((Expr::Var(var), Kind::Num));
                }
                if let Some(class) = ClassRef::from_ident(&name) {
                    self.advance();
                    return Ok((Expr::Class(class), Kind::Class));
                }
                if let Some(acc) = Accessor::from_ident(&name) {
                    self.advance();
                    self.expect_sym("(")?;
                    let arg_at = self.here();
                    let (arg, akind) = self.parse_or()?;
                    self.expect_sym(")")?;
                    if akind != Kind::Class {
                        return Err(self.type_err(
                            arg_at,
                            format!("{acc}(...) needs a class argument, got {akind}"),
                        ));
                    }
                    let kind = if acc.returns_slope() {
                        Kind::Slope
                    } else {
                        Kind::Num
                    };
                    return Ok((Expr::Accessor(acc, Box::new(arg)), kind));
                }
                Err(ParseError::UnknownIdentifier {
                    line: at.0,
                    col: at.1,
                    name,
                })
            }
            _ => Err(self.err("a number, identifier, or \"(\"")),
        }
    }

    fn parse_signed_bound(&mut self) -> Result<i64, ParseError> {
        let negative = if self.at_sym("-") {
            self.advance();
            true
        } else {
            false
        };
        match self.peek().tok.clone() {
            Tok::Int(digits) => {
                let value: i64 = digits
                    .parse()
                    .map_err(|_| self.err("a range bound fitting in 64 bits"))?;
                self.advance();
                Ok(if negative { -value } else { value })
            }
            _ => Err(self.err("an integer range bound")),
        }
    }

    fn parse_decl(&mut self) -> Result<VarDecl, ParseError> {
        // Caller consumed "var".
        let at = self.here();
        let name = match self.peek().tok.clone() {
            Tok::Ident(s) => match VarName::from_ident(&s) {
                Some(v) => {
                    self.advance();
                    v
                }
                None => {
                    return Err(ParseError::Syntax {
                        line: at.0,
                        col: at.1,
                        expected: "a variable name (a, b, c, or d)".to_string(),
                        found: format!("{s:?}"),
                    })
                }
            },
            _ => return Err(self.err("a variable name (a, b, c, or d)")),
        };
        if !self.at_ident("in") {
            return Err(self.err("\"in\""));
        }
        self.advance();
        self.expect_sym("[")?;
        let lo = self.parse_signed_bound()?;
        self.expect_sym(",")?;
        let hi = self.parse_signed_bound()?;
        self.expect_sym("]")?;
        if lo > hi {
            return Err(ParseError::EmptyRange {
                line: at.0,
                col: at.1,
                lo,
                hi,
            });
        }
        Ok(VarDecl { name, range: (lo, hi) })
    }

    fn skip_newlines(&mut self) {
        while self.peek().tok == Tok::Newline {
            self.advance();
        }
    }

    fn parse_system(&mut self) -> Result<ConstraintSystem, ParseError> {
        let mut variables: Vec<VarDecl> = Vec::new();
        let mut clauses = Vec::new();
        loop {
            self.skip_newlines();
            if self.peek().tok == Tok::Eof {
                break;
            }
            if self.at_ident("var") {
                let at = self.here();
                self.advance();
                let decl = self.parse_decl()?;
                if variables.iter().any(|d| d.name == decl.name) {
                    return Err(ParseError::DuplicateVariable {
                        line: at.0,
                        col: at.1,
                        name: decl.name,
                    });
                }
                variables.push(decl);
            } else {
                let at = self.here();
                let (expr, kind) = self.parse_or()?;
                if kind != Kind::Bool {
                    return Err(self.type_err(
                        at,
                        format!("a clause must be boolean, got {kind}"),
                    ));
                }
                clauses.push(expr);
            }
            match self.peek().tok {
                Tok::Newline => {
                    self.advance();
                }
                Tok::Eof => break,
                _ => return Err(self.err("end of line")),
            }
        }
        Ok(ConstraintSystem { variables, clauses })
    }
}

/// Parse and typecheck a constraint system.
pub fn parse(text: &str) -> Result<ConstraintSystem, ParseError> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.parse_system()
}

// ---------------------------------------------------------------------------
// Pretty-printer

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Or(..) => 1,
        Expr::And(..) => 2,
        Expr::Cmp(..) => 3,
        Expr::Not(..) => 4,
        Expr::Add(..) | Expr::Sub(..) => 5,
        Expr::Mul(..) | Expr::Div(..) => 6,
        Expr::Neg(..) => 7,
        // A fractional literal prints as `p/q` and re-lexes as a quotient, so it
        // binds like one; a negative integer prints with a leading unary minus.
        Expr::Number(x) if !x.is_integer() => 6,
        Expr::Number(x) if x.is_negative() => 7,
        Expr::Number(_) | Expr::Var(_) | Expr::Class(_) | Expr::Accessor(..) => 8,
    }
}

fn print_at(e: &Expr, min: u8, out: &mut String) {
    let level = precedence(e);
    let parens = level < min;
    if parens {
        out.push('(');
    }
    match e {
        Expr::Number(x) => out.push_str(&x.to_string()),
        Expr::Var(v) => out.push_str(&v.to_string()),
        Expr::Class(c) => out.push_str(&c.to_string()),
        Expr::Neg(x) => {
            out.push('-');
            print_at(x, 8, out);
        }
        Expr::Add(x, y) => {
            print_at(x, 5, out);
            out.push_str(" + ");
            print_at(y, 6, out);
        }
        Expr::Sub(x, y) => {
            print_at(x, 5, out);
            out.push_str(" - ");
            print_at(y, 6, out);
        }
        Expr::Mul(x, y) => {
            print_at(x, 6, out);
            out.push_str(" * ");
            print_at(y, 7, out);
        }
        Expr::Div(x, y) => {
            print_at(x, 6, out);
            out.push_str(" / ");
            print_at(y, 7, out);
        }
        Expr::Accessor(acc, arg) => {
            out.push_str(&acc.to_string());
            out.push('(');
            print_at(arg, 1, out);
            out.push(')');
        }
        Expr::Cmp(op, x, y) => {
            print_at(x, 4, out);
            out.push(' ');
            out.push_str(&op.to_string());
            out.push(' ');
            print_at(y, 4, out);
        }
        Expr::Not(x) => {
            out.push_str("not ");
            print_at(x, 4, out);
        }
        Expr::And(x, y) => {
            print_at(x, 2, out);
            out.push_str(" and ");
            print_at(y, 3, out);
        }
        Expr::Or(x, y) => {
            print_at(x, 1, out);
            out.push_str(" or ");
            print_at(y, 2, out);
        }
    }
    if parens {
        out.push(')');
    }
}

/// Render one expression with minimal parentheses.
pub fn pretty_expr(e: &Expr) -> String {
    let mut out = String::new();
    print_at(e, 0, &mut out);
    out
}

/// Render a whole system; `parse(pretty_print(cs))` reproduces `cs`.
pub fn pretty_print(cs: &ConstraintSystem) -> String {
    let mut out = String::new();
    for decl in &cs.variables {
        out.push_str(&format!(
            "var {} in [{}, {}]\n",
            decl.name, decl.range.0, decl.range.1
        ));
    }
    for clause in &cs.clauses {
        out.push_str(&pretty_expr(clause));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Evaluation

/// Values a variable assignment maps the unknowns to.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    values: [Option<Rational>; 4],
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(&mut self, name: VarName, value: Rational) {
        self.values[name.index()] = Some(value);
    }

    pub fn get(&self, name: VarName) -> Option<&Rational> {
        self.values[name.index()].as_ref()
    }

    pub fn from_integers(pairs: &[(VarName, i64)]) -> Self {
        let mut a = Assignment::new();
        for (name, value) in pairs {
            a.set(*name, Rational::from(*value));
        }
        a
    }
}

/// Everything needed to resolve class names and evaluate charges.
#[derive(Clone, Debug)]
pub struct EvalEnv {
    pub ctx: FanoContext,
    pub point: TiltPoint,
    pub target: Option<ChernCharacter>,
    pub ku: Option<LatticeBasis>,
    pub alt: Option<LatticeBasis>,
}

impl EvalEnv {
    pub fn new(ctx: FanoContext, point: TiltPoint) -> Self {
        EvalEnv {
            ctx,
            point,
            target: None,
            ku: None,
            alt: None,
        }
    }

    /// Attach whichever lattice bases the genus admits.
    pub fn with_bases(mut self) -> Self {
        self.ku = crate::threefold::ku_basis(&self.ctx).ok();
        self.alt = crate::threefold::alt_basis(&self.ctx).ok();
        self
    }

    pub fn with_target(mut self, target: ChernCharacter) -> Self {
        self.target = Some(target);
        self
    }

    fn resolve(&self, class: ClassRef) -> Result<ChernCharacter, EvalError> {
        let unavailable = |name: &str, reason: &str| EvalError::ClassUnavailable {
            name: name.to_string(),
            reason: reason.to_string(),
        };
        match class {
            ClassRef::E => self
                .ctx
                .named_class(NamedClass::E)
                .map_err(|e| unavailable("E", &e.to_string())),
            ClassRef::O => Ok(ChernCharacter::from_integers(1, 0, 0, 0)),
            ClassRef::IdealOfPoint => Ok(ChernCharacter::from_integers(1, 0, 0, -1)),
            ClassRef::V => self
                .ku
                .as_ref()
                .map(|b| b.b1.clone())
                .ok_or_else(|| unavailable("v", "no Kuznetsov basis bound")),
            ClassRef::W => self
                .ku
                .as_ref()
                .map(|b| b.b2.clone())
                .ok_or_else(|| unavailable("w", "no Kuznetsov basis bound")),
            ClassRef::S => self
                .alt
                .as_ref()
                .map(|b| b.b1.clone())
                .ok_or_else(|| unavailable("s", "no alternative basis bound")),
            ClassRef::T => self
                .alt
                .as_ref()
                .map(|b| b.b2.clone())
                .ok_or_else(|| unavailable("t", "no alternative basis bound")),
            ClassRef::Target => self
                .target
                .clone()
                .ok_or_else(|| unavailable("target", "no target bound")),
        }
    }
}

/// Result of evaluating a (sub)expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Num(Rational),
    Class(ChernCharacter),
    Slope(Slope),
    Bool(bool),
}

impl Value {
    fn kind_name(&self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Class(_) => "class",
            Value::Slope(_) => "slope",
            Value::Bool(_) => "boolean",
        }
    }
}

fn mismatch(op: &str, a: &Value, b: &Value) -> EvalError {
    EvalError::TypeMismatch(format!("{op} over {} and {}", a.kind_name(), b.kind_name()))
}

/// Evaluate a single expression to a typed value.
pub fn evaluate_expr(
    e: &Expr,
    assignment: &Assignment,
    env: &EvalEnv,
) -> Result<Value, EvalError> {
    match e {
        Expr::Number(x) => Ok(Value::Num(x.clone())),
        Expr::Var(v) => assignment
            .get(*v)
            .cloned()
            .map(Value::Num)
            .ok_or(EvalError::UnboundVariable(*v)),
        Expr::Class(c) => env.resolve(*c).map(Value::Class),
        Expr::Neg(x) => match evaluate_expr(x, assignment, env)? {
            Value::Num(n) => Ok(Value::Num(-&n)),
            Value::Class(ch) => Ok(Value::Class(-&ch)),
            v => Err(EvalError::TypeMismatch(format!(
                "negation of {}",
                v.kind_name()
            ))),
        },
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            let sub = matches!(e, Expr::Sub(..));
            let a = evaluate_expr(x, assignment, env)?;
            let b = evaluate_expr(y, assignment, env)?;
            match (&a, &b) {
                (Value::Num(p), Value::Num(q)) => Ok(Value::Num(if sub { p - q } else { p + q })),
                (Value::Class(p), Value::Class(q)) => {
                    Ok(Value::Class(if sub { p - q } else { p + q }))
                }
                _ => Err(mismatch(if sub { "subtraction" } else { "addition" }, &a, &b)),
            }
        }
        Expr::Mul(x, y) => {
            let a = evaluate_expr(x, assignment, env)?;
            let b = evaluate_expr(y, assignment, env)?;
            match (&a, &b) {
                (Value::Num(p), Value::Num(q)) => Ok(Value::Num(p * q)),
                (Value::Num(p), Value::Class(q)) => Ok(Value::Class(q.scale(p))),
                (Value::Class(p), Value::Num(q)) => Ok(Value::Class(p.scale(q))),
                _ => Err(mismatch("multiplication", &a, &b)),
            }
        }
        Expr::Div(x, y) => {
            let a = evaluate_expr(x, assignment, env)?;
            let b = evaluate_expr(y, assignment, env)?;
            match (&a, &b) {
                (Value::Num(p), Value::Num(q)) => {
                    if q.is_zero() {
                        Err(EvalError::DivisionByZero)
                    } else {
                        Ok(Value::Num(p / q))
                    }
                }
                _ => Err(mismatch("division", &a, &b)),
            }
        }
        Expr::Accessor(acc, arg) => {
            let Value::Class(x) = evaluate_expr(arg, assignment, env)? else {
                return Err(EvalError::TypeMismatch(format!(
                    "{acc}(...) over a non-class"
                )));
            };
            let ctx = &env.ctx;
            let pt = &env.point;
            Ok(match acc {
                Accessor::ImZ => Value::Num(tilt::charge(&x, pt, ctx).im),
                Accessor::ReZ => Value::Num(tilt::charge(&x, pt, ctx).re),
                Accessor::ImZ0 => Value::Num(tilt::rotated_charge(&x, pt, ctx).im),
                Accessor::ReZ0 => Value::Num(tilt::rotated_charge(&x, pt, ctx).re),
                Accessor::Delta => Value::Num(tilt::discriminant(&x, ctx)),
                Accessor::Ch1Beta => Value::Num(tilt::ch1_beta(&x, pt.beta())),
                Accessor::Mu => Value::Slope(tilt::mu(&x, pt, ctx)),
                Accessor::Mu0 => Value::Slope(tilt::mu0(&x, pt, ctx)),
                Accessor::MuClassical => Value::Slope(tilt::classical_mu(&x, ctx)),
            })
        }
        Expr::Cmp(op, x, y) => {
            let a = evaluate_expr(x, assignment, env)?;
            let b = evaluate_expr(y, assignment, env)?;
            let ord = match (&a, &b) {
                (Value::Num(p), Value::Num(q)) => p.cmp(q),
                (Value::Slope(p), Value::Slope(q)) => tilt::slope_cmp(p, q),
                (Value::Num(p), Value::Slope(q)) => {
                    tilt::slope_cmp(&Slope::Finite(p.clone()), q)
                }
                (Value::Slope(p), Value::Num(q)) => {
                    tilt::slope_cmp(p, &Slope::Finite(q.clone()))
                }
                _ => return Err(mismatch("comparison", &a, &b)),
            };
            let truth = match op {
                CmpOp::Lt => ord == std::cmp::Ordering::Less,
                CmpOp::Le => ord != std::cmp::Ordering::Greater,
                CmpOp::Eq => ord == std::cmp::Ordering::Equal,
                CmpOp::Ge => ord != std::cmp::Ordering::Less,
                CmpOp::Gt => ord == std::cmp::Ordering::Greater,
            };
            Ok(Value::Bool(truth))
        }
        Expr::Not(x) => match evaluate_expr(x, assignment, env)? {
            Value::Bool(b) => Ok(Value::Bool(!b)),
            v => Err(EvalError::TypeMismatch(format!(
                "\"not\" over {}",
                v.kind_name()
            ))),
        },
        Expr::And(x, y) => match evaluate_expr(x, assignment, env)? {
            Value::Bool(false) => Ok(Value::Bool(false)),
            Value::Bool(true) => match evaluate_expr(y, assignment, env)? {
                Value::Bool(b) => Ok(Value::Bool(b)),
                v => Err(EvalError::TypeMismatch(format!(
                    "\"and\" over {}",
                    v.kind_name()
                ))),
            },
            v => Err(EvalError::TypeMismatch(format!(
                "\"and\" over {}",
                v.kind_name()
            ))),
        },
        Expr::Or(x, y) => match evaluate_expr(x, assignment, env)? {
            Value::Bool(true) => Ok(Value::Bool(true)),
            Value::Bool(false) => match evaluate_expr(y, assignment, env)? {
                Value::Bool(b) => Ok(Value::Bool(b)),
                v => Err(EvalError::TypeMismatch(format!(
                    "\"or\" over {}",
                    v.kind_name()
                ))),
            },
            v => Err(EvalError::TypeMismatch(format!(
                "\"or\" over {}",
                v.kind_name()
            ))),
        },
    }
}

/// Evaluate the conjunction of all clauses, in order, short-circuiting on
/// the first false clause. Errors propagate (they are never `false`).
pub fn evaluate(
    cs: &ConstraintSystem,
    assignment: &Assignment,
    env: &EvalEnv,
) -> Result<bool, EvalError> {
    for clause in &cs.clauses {
        match evaluate_expr(clause, assignment, env)? {
            Value::Bool(true) => {}
            Value::Bool(false) => return Ok(false),
            v => {
                return Err(EvalError::TypeMismatch(format!(
                    "clause evaluated to a {}",
                    v.kind_name()
                )))
            }
        }
    }
    Ok(true)
}
