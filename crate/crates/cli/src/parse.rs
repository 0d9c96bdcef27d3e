//! Line-oriented parser. Every name must be declared before it is used, and
//! every diagnostic carries `line:col`.

use std::collections::{HashMap, HashSet};

use thiserror::Error;
use wcpkit_core::Field;

use crate::ast::*;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Num(String),
    Colon,
    Arrow,
    LBrace,
    RBrace,
    Semi,
    Star,
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Num(n) => format!("`{n}`"),
            Tok::Colon => "`:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Star => "`*`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = vec![];
    for (ln, text) in src.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line, col });
            match c {
                '#' => break,
                c if c.is_whitespace() => i += 1,
                ':' => {
                    push(&mut out, Tok::Colon);
                    i += 1;
                }
                '{' => {
                    push(&mut out, Tok::LBrace);
                    i += 1;
                }
                '}' => {
                    push(&mut out, Tok::RBrace);
                    i += 1;
                }
                ';' => {
                    push(&mut out, Tok::Semi);
                    i += 1;
                }
                '*' | '⊗' => {
                    push(&mut out, Tok::Star);
                    i += 1;
                }
                '-' if chars.get(i + 1) == Some(&'>') => {
                    push(&mut out, Tok::Arrow);
                    i += 2;
                }
                c if c.is_ascii_digit()
                    || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) =>
                {
                    let start = i;
                    i += 1;
                    while i < chars.len()
                        && (chars[i].is_ascii_alphanumeric() || "./_".contains(chars[i]))
                    {
                        i += 1;
                    }
                    push(&mut out, Tok::Num(chars[start..i].iter().collect()));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    i += 1;
                    while i < chars.len() {
                        let d = chars[i];
                        let dash = d == '-' && chars.get(i + 1) != Some(&'>');
                        if d.is_alphanumeric() || d == '_' || d == '.' || dash {
                            i += 1;
                        } else {
                            break;
                        }
                    }
                    push(&mut out, Tok::Word(chars[start..i].iter().collect()));
                }
                other => return Err(err(line, col, format!("unexpected character `{other}`"))),
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line,
            col: chars.len() + 1,
        });
    }
    let line = out.last().map_or(1, |t| t.line + 1);
    out.push(Token {
        tok: Tok::Eof,
        line,
        col: 1,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    field: Option<Field>,
    symbols: HashMap<String, Kind>,
    dims: HashMap<String, usize>,
    items: Vec<Item>,
}

/// Parses a spec document.
pub fn parse(src: &str) -> Result<Document, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        field: None,
        symbols: HashMap::new(),
        dims: HashMap::new(),
        items: vec![],
    };
    loop {
        match p.peek().tok {
            Tok::Eof => break,
            Tok::Newline => {
                p.pos += 1;
            }
            _ => {
                p.statement()?;
                p.end_of_statement()?;
            }
        }
    }
    Ok(Document {
        field: p.field.unwrap_or(Field::Rationals),
        items: p.items,
    })
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn here(&self, message: impl Into<String>) -> ParseError {
        let t = self.peek();
        err(t.line, t.col, message)
    }

    fn expect(&mut self, want: Tok) -> Result<Token, ParseError> {
        if self.peek().tok == want {
            Ok(self.next())
        } else {
            Err(self.here(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().tok.describe()
            )))
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Token), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Word(w) => Ok((w.clone(), t.clone())),
            other => Err(err(
                t.line,
                t.col,
                format!("expected {what}, found {}", other.describe()),
            )),
        }
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Num(n) => n
                .parse()
                .map_err(|_| err(t.line, t.col, format!("invalid {what} `{n}`"))),
            other => Err(err(
                t.line,
                t.col,
                format!("expected {what}, found {}", other.describe()),
            )),
        }
    }

    fn end_of_statement(&mut self) -> Result<(), ParseError> {
        match self.peek().tok {
            Tok::Newline | Tok::Eof => Ok(()),
            ref other => {
                Err(self.here(format!("expected end of line, found {}", other.describe())))
            }
        }
    }

    fn field(&self) -> Field {
        self.field.unwrap_or(Field::Rationals)
    }

    /// A name not declared yet. The caller registers it once the statement
    /// is complete.
    fn fresh_name(&mut self) -> Result<String, ParseError> {
        let (name, t) = self.word("a name")?;
        if name == UNIT_NAME {
            return Err(err(
                t.line,
                t.col,
                format!("`{UNIT_NAME}` is reserved for the unit object"),
            ));
        }
        if self.symbols.contains_key(&name) {
            return Err(err(t.line, t.col, format!("`{name}` is already declared")));
        }
        Ok(name)
    }

    /// A reference to an earlier declaration of the given kind.
    fn reference(&mut self, kind: Kind) -> Result<String, ParseError> {
        let (name, t) = self.word(&format!("a {} name", kind.describe()))?;
        match self.symbols.get(&name) {
            None => Err(err(t.line, t.col, format!("undefined name `{name}`"))),
            Some(&k) if k != kind => Err(err(
                t.line,
                t.col,
                format!(
                    "`{name}` is a {}, expected a {}",
                    k.describe(),
                    kind.describe()
                ),
            )),
            Some(_) => Ok(name),
        }
    }

    fn statement(&mut self) -> Result<(), ParseError> {
        let (head, t) = self.word("a keyword")?;
        match head.as_str() {
            "field" => self.field_line(&t),
            "obj" => self.obj_line(),
            "mor" => self.mor_line(),
            "check" | "build" | "equiv" | "transport" => self.directive(&head),
            other => match DeclKind::from_keyword(other) {
                Some(kind) => self.decl(kind),
                None => Err(err(t.line, t.col, format!("unknown keyword `{other}`"))),
            },
        }
    }

    fn field_line(&mut self, at: &Token) -> Result<(), ParseError> {
        if self.field.is_some() {
            return Err(err(at.line, at.col, "field declared twice"));
        }
        if !self.items.is_empty() {
            return Err(err(at.line, at.col, "field must precede all declarations"));
        }
        let (name, t) = self.word("`Q` or `Fp`")?;
        let field = match name.as_str() {
            "Q" => Field::Rationals,
            "Fp" => {
                let pt = self.peek().clone();
                let p: u64 = self.number("modulus")?;
                Field::prime(p).map_err(|e| err(pt.line, pt.col, e.to_string()))?
            }
            other => return Err(err(t.line, t.col, format!("unknown field `{other}`"))),
        };
        self.field = Some(field);
        Ok(())
    }

    fn obj_line(&mut self) -> Result<(), ParseError> {
        let name = self.fresh_name()?;
        let (kw, t) = self.word("`dim`")?;
        if kw != "dim" {
            return Err(err(t.line, t.col, format!("expected `dim`, found `{kw}`")));
        }
        let nt = self.peek().clone();
        let dim: usize = self.number("dimension")?;
        if dim == 0 {
            return Err(err(nt.line, nt.col, "dimension must be positive"));
        }
        self.symbols.insert(name.clone(), Kind::Obj);
        self.dims.insert(name.clone(), dim);
        self.items.push(Item::Obj { name, dim });
        Ok(())
    }

    /// `K` or `X*Y*...`.
    fn obj_list(&mut self) -> Result<(Vec<String>, usize), ParseError> {
        if self.peek().tok == Tok::Word(UNIT_NAME.into()) {
            self.next();
            return Ok((vec![], 1));
        }
        let mut names = vec![self.reference(Kind::Obj)?];
        while self.peek().tok == Tok::Star {
            self.next();
            names.push(self.reference(Kind::Obj)?);
        }
        let dim = names.iter().map(|n| self.dims[n]).product();
        Ok((names, dim))
    }

    fn mor_line(&mut self) -> Result<(), ParseError> {
        let name = self.fresh_name()?;
        self.expect(Tok::Colon)?;
        let (dom, cols) = self.obj_list()?;
        self.expect(Tok::Arrow)?;
        let (cod, rows) = self.obj_list()?;
        self.expect(Tok::LBrace)?;
        let field = self.field();
        let mut entries = vec![];
        let mut seen = HashSet::new();
        loop {
            while matches!(self.peek().tok, Tok::Newline | Tok::Semi) {
                self.next();
            }
            if self.peek().tok == Tok::RBrace {
                self.next();
                break;
            }
            let at = self.peek().clone();
            let r: usize = self.number("row index")?;
            let c: usize = self.number("column index")?;
            let vt = self.next();
            let value = match &vt.tok {
                Tok::Num(v) => field
                    .parse_scalar(v)
                    .map_err(|e| err(vt.line, vt.col, e.to_string()))?,
                other => {
                    return Err(err(
                        vt.line,
                        vt.col,
                        format!("expected a scalar, found {}", other.describe()),
                    ))
                }
            };
            if r >= rows || c >= cols {
                return Err(err(
                    at.line,
                    at.col,
                    format!("entry ({r}, {c}) out of bounds for a {rows}x{cols} matrix"),
                ));
            }
            if !seen.insert((r, c)) {
                return Err(err(at.line, at.col, format!("duplicate entry ({r}, {c})")));
            }
            entries.push((r, c, value));
            match self.peek().tok {
                Tok::Semi | Tok::Newline | Tok::RBrace => {}
                ref other => {
                    return Err(
                        self.here(format!("expected `;` or `}}`, found {}", other.describe()))
                    )
                }
            }
        }
        self.symbols.insert(name.clone(), Kind::Mor);
        self.items.push(Item::Mor(MorDecl {
            name,
            dom,
            cod,
            entries,
        }));
        Ok(())
    }

    fn decl(&mut self, kind: DeclKind) -> Result<(), ParseError> {
        let name = self.fresh_name()?;
        let params = kind.params();
        let mut args: Vec<Option<String>> = vec![None; params.len()];
        while let Tok::Word(_) = self.peek().tok {
            let (key, kt) = self.word("a parameter")?;
            let Some(idx) = params.iter().position(|(k, _)| *k == key) else {
                let known: Vec<&str> = params.iter().map(|(k, _)| *k).collect();
                return Err(err(
                    kt.line,
                    kt.col,
                    format!(
                        "unknown {} parameter `{key}` (expected {})",
                        kind.keyword(),
                        known.join(", ")
                    ),
                ));
            };
            if args[idx].is_some() {
                return Err(err(
                    kt.line,
                    kt.col,
                    format!("parameter `{key}` given twice"),
                ));
            }
            args[idx] = Some(self.reference(params[idx].1)?);
        }
        let mut out = vec![];
        for (slot, (key, _)) in args.into_iter().zip(params) {
            match slot {
                Some(a) => out.push(a),
                None => {
                    return Err(self.here(format!("missing {} parameter `{key}`", kind.keyword())))
                }
            }
        }
        self.symbols.insert(name.clone(), Kind::Decl(kind));
        self.items.push(Item::Decl(Decl {
            kind,
            name,
            args: out,
        }));
        Ok(())
    }

    fn directive(&mut self, head: &str) -> Result<(), ParseError> {
        let (sub, t) = self.word("a directive")?;
        let Some(spec) = VERBS.iter().find(|s| s.head == head && s.sub == sub) else {
            return Err(err(
                t.line,
                t.col,
                format!("unknown directive `{head} {sub}`"),
            ));
        };
        let args = spec
            .params
            .iter()
            .map(|&k| self.reference(k))
            .collect::<Result<Vec<_>, _>>()?;
        self.items.push(Item::Directive(Directive {
            verb: spec.verb,
            args,
        }));
        Ok(())
    }
}
