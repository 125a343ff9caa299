//! The algebra file format: `generator NAME : DEGREE;` declarations followed
//! by `d NAME = EXPR;` differentials, where EXPR is built from generator
//! names, integer or rational literals, `+`, `-`, `*`, `^k`, and parentheses.
//! `#` starts a line comment.  Differentials left unspecified default to
//! zero.  Parsing reports errors with the line and column of the offending
//! token, and printing a parsed file re-parses to the same resolution.

use std::fmt;
use std::sync::Arc;

use drep_core::ncalg::{GenTable, NCPoly, Resolution};
use drep_core::{BigInt, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for DslError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

impl Token {
    fn describe(&self) -> String {
        match &self.kind {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Int(n) => format!("`{n}`"),
            TokenKind::Sym(c) => format!("`{c}`"),
            TokenKind::Eof => "end of input".to_string(),
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> DslError {
        DslError { line: self.line, col: self.col, message: message.into() }
    }
}

const SYMBOLS: &str = ":;=*+-^()/[],";

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let (start_line, start_col) = (line, col);
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                digits.push(c);
                chars.next();
                col += 1;
            }
            let n: BigInt = digits.parse().expect("digits");
            tokens.push(Token { kind: TokenKind::Int(n), line: start_line, col: start_col });
        } else if c.is_alphabetic() || c == '_' {
            let (start_line, start_col) = (line, col);
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if !(c.is_alphanumeric() || c == '_') {
                    break;
                }
                name.push(c);
                chars.next();
                col += 1;
            }
            tokens.push(Token { kind: TokenKind::Ident(name), line: start_line, col: start_col });
        } else if SYMBOLS.contains(c) {
            tokens.push(Token { kind: TokenKind::Sym(c), line, col });
            chars.next();
            col += 1;
        } else {
            return Err(DslError { line, col, message: format!("unexpected character `{c}`") });
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, line, col });
    Ok(tokens)
}

/// Cursor over a token stream shared by the algebra and rep-file parsers.
pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    pub(crate) fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn at_sym(&self, c: char) -> bool {
        self.peek().kind == TokenKind::Sym(c)
    }

    pub(crate) fn at_eof(&self) -> bool {
        self.peek().kind == TokenKind::Eof
    }

    pub(crate) fn eat_sym(&mut self, c: char) -> Result<(), DslError> {
        let t = self.next();
        if t.kind == TokenKind::Sym(c) {
            Ok(())
        } else {
            Err(t.error(format!("expected `{c}`, found {}", t.describe())))
        }
    }

    pub(crate) fn expect_ident(&mut self, what: &str) -> Result<(Token, String), DslError> {
        let t = self.next();
        match t.kind.clone() {
            TokenKind::Ident(s) => Ok((t, s)),
            _ => Err(t.error(format!("expected {what}, found {}", t.describe()))),
        }
    }

    pub(crate) fn expect_int(&mut self) -> Result<(Token, BigInt), DslError> {
        let t = self.next();
        match t.kind.clone() {
            TokenKind::Int(n) => Ok((t, n)),
            _ => Err(t.error(format!("expected an integer, found {}", t.describe()))),
        }
    }

    /// A possibly negated integer, for degrees and matrix entries.
    pub(crate) fn expect_signed_int(&mut self) -> Result<BigInt, DslError> {
        if self.at_sym('-') {
            self.next();
            let (_, n) = self.expect_int()?;
            Ok(-n)
        } else {
            let (_, n) = self.expect_int()?;
            Ok(n)
        }
    }

    /// A rational literal: INT or INT/INT, optionally preceded by `-`.
    pub(crate) fn expect_rational(&mut self) -> Result<Rat, DslError> {
        let numer = self.expect_signed_int()?;
        if self.at_sym('/') {
            self.next();
            let (t, denom) = self.expect_int()?;
            if denom == BigInt::from(0) {
                return Err(t.error("zero denominator"));
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Parser, DslError> {
    Ok(Parser { tokens: lex(text)?, pos: 0 })
}

// -------------------------------------------------------------------------
// Expressions

fn parse_expr(p: &mut Parser, table: &Arc<GenTable>) -> Result<NCPoly, DslError> {
    let mut acc;
    if p.at_sym('-') {
        p.next();
        acc = parse_term(p, table)?.neg();
    } else {
        acc = parse_term(p, table)?;
    }
    loop {
        if p.at_sym('+') {
            p.next();
            let t = parse_term(p, table)?;
            acc = acc.try_add(&t).expect("same table");
        } else if p.at_sym('-') {
            p.next();
            let t = parse_term(p, table)?;
            acc = acc.try_sub(&t).expect("same table");
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_term(p: &mut Parser, table: &Arc<GenTable>) -> Result<NCPoly, DslError> {
    let mut acc = parse_factor(p, table)?;
    while p.at_sym('*') {
        p.next();
        let f = parse_factor(p, table)?;
        acc = acc.try_mul(&f).expect("same table");
    }
    Ok(acc)
}

fn parse_factor(p: &mut Parser, table: &Arc<GenTable>) -> Result<NCPoly, DslError> {
    let base = parse_atom(p, table)?;
    if p.at_sym('^') {
        p.next();
        let (t, exp) = p.expect_int()?;
        let exp: u32 = exp
            .try_into()
            .map_err(|_| t.error("exponent too large"))?;
        let mut acc = NCPoly::unit(table, Rat::from_integer(BigInt::from(1)));
        for _ in 0..exp {
            acc = acc.try_mul(&base).expect("same table");
        }
        return Ok(acc);
    }
    Ok(base)
}

fn parse_atom(p: &mut Parser, table: &Arc<GenTable>) -> Result<NCPoly, DslError> {
    let t = p.peek().clone();
    match &t.kind {
        TokenKind::Ident(name) => {
            p.next();
            match table.lookup(name) {
                Ok(g) => Ok(NCPoly::from_gen(table, g)),
                Err(_) => Err(t.error(format!("undeclared generator `{name}`"))),
            }
        }
        TokenKind::Int(_) => {
            let c = p.expect_rational()?;
            Ok(NCPoly::unit(table, c))
        }
        TokenKind::Sym('(') => {
            p.next();
            let inner = parse_expr(p, table)?;
            p.eat_sym(')')?;
            Ok(inner)
        }
        _ => Err(t.error(format!("expected an expression, found {}", t.describe()))),
    }
}

// -------------------------------------------------------------------------
// Files

/// Parse an algebra file.  Declarations are collected first so that
/// differential expressions can resolve generator names no matter the order
/// of the `d` statements; undeclared names are reported at their own token.
pub fn parse_algebra(text: &str) -> Result<Resolution, DslError> {
    let mut p = tokenize(text)?;
    let mut gens: Vec<(String, i64)> = Vec::new();
    // name token and expression token range for each `d` statement
    let mut diff_items: Vec<(Token, String, usize, usize)> = Vec::new();

    loop {
        let t = p.peek().clone();
        match &t.kind {
            TokenKind::Eof => break,
            TokenKind::Ident(kw) if kw == "generator" => {
                p.next();
                let (name_tok, name) = p.expect_ident("a generator name")?;
                if gens.iter().any(|(n, _)| *n == name) {
                    return Err(name_tok.error(format!("duplicate declaration of `{name}`")));
                }
                p.eat_sym(':')?;
                let deg = p.expect_signed_int()?;
                let deg: i64 = deg
                    .try_into()
                    .map_err(|_| name_tok.error("degree out of range"))?;
                p.eat_sym(';')?;
                gens.push((name, deg));
            }
            TokenKind::Ident(kw) if kw == "d" => {
                p.next();
                let (name_tok, name) = p.expect_ident("a generator name")?;
                if diff_items.iter().any(|(_, n, _, _)| *n == name) {
                    return Err(name_tok.error(format!("duplicate differential for `{name}`")));
                }
                p.eat_sym('=')?;
                let start = p.pos;
                while !p.at_sym(';') {
                    if p.peek().kind == TokenKind::Eof {
                        return Err(p.peek().error("expected `;`, found end of input"));
                    }
                    p.next();
                }
                let end = p.pos;
                p.eat_sym(';')?;
                diff_items.push((name_tok, name, start, end));
            }
            _ => {
                return Err(
                    t.error(format!("expected `generator` or `d`, found {}", t.describe()))
                )
            }
        }
    }

    let table = GenTable::new(gens).map_err(|e| DslError {
        line: 1,
        col: 1,
        message: e.to_string(),
    })?;

    let mut diffs = Vec::new();
    for (name_tok, name, start, end) in diff_items {
        let g = table
            .lookup(&name)
            .map_err(|_| name_tok.error(format!("undeclared generator `{name}`")))?;
        p.pos = start;
        let expr = parse_expr(&mut p, &table)?;
        if p.pos != end {
            let t = p.peek().clone();
            return Err(t.error(format!("unexpected {} in expression", t.describe())));
        }
        diffs.push((g, expr));
    }

    Resolution::new(table, diffs)
        .map_err(|e| DslError { line: 1, col: 1, message: e.to_string() })
}

/// Print a resolution in the file format; `parse_algebra` recovers it.
pub fn print_algebra(res: &Resolution) -> String {
    let table = res.table();
    let mut out = String::new();
    for g in table.ids() {
        out.push_str(&format!("generator {} : {};\n", table.name(g), table.degree(g)));
    }
    let mut any = false;
    for g in table.ids() {
        let dg = res.diff_of(g);
        if !dg.is_zero() {
            if !any {
                out.push('\n');
                any = true;
            }
            out.push_str(&format!("d {} = {};\n", table.name(g), dg));
        }
    }
    out
}

/// Structural equality of two resolutions: same generators in the same
/// order, same degrees, same differentials.
pub fn same_resolution(a: &Resolution, b: &Resolution) -> bool {
    let (ta, tb) = (a.table(), b.table());
    if ta.len() != tb.len() {
        return false;
    }
    for g in ta.ids() {
        if ta.name(g) != tb.name(g) || ta.degree(g) != tb.degree(g) {
            return false;
        }
    }
    // differentials live over distinct (equal) tables; compare term by term
    for g in ta.ids() {
        let (da, db) = (a.diff_of(g), b.diff_of(g));
        if da.num_terms() != db.num_terms() {
            return false;
        }
        let mut terms_b = db.terms();
        for (w, c) in da.terms() {
            let (wb, cb) = terms_b.next().expect("same length");
            if w.factors() != wb.factors() || c != cb {
                return false;
            }
        }
    }
    true
}
