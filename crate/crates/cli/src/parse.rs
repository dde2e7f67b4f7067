//! Text grammar for ideals.
//!
//! ```text
//! input     := header? generator (',' generator)*
//! header    := 'vars' ':' ident (',' ident)* (';' | newline)
//! generator := term ('*' term)*
//! term      := ident ('^' positive-integer)?
//! ident     := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is insignificant apart from ending the header. Without a
//! header, variables are ordered by first appearance.

use std::collections::BTreeMap;

use monres::ideal::minimalize;
use monres::{Error, Monomial, MonomialIdeal, Result, Variables};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Int(&'a str),
    Comma,
    Star,
    Caret,
    Colon,
    Semi,
    Newline,
}

#[derive(Clone, Copy, Debug)]
struct Spanned<'a> {
    tok: Tok<'a>,
    line: usize,
    col: usize,
}

fn error(line: usize, col: usize, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("line {line}, column {col}: {msg}"))
}

fn lex(text: &str) -> Result<Vec<Spanned<'_>>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = (i, line, col);
        let single = match c {
            b',' => Some(Tok::Comma),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b':' => Some(Tok::Colon),
            b';' => Some(Tok::Semi),
            b'\n' => Some(Tok::Newline),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line, col });
            i += 1;
            if c == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            continue;
        }
        if c == b' ' || c == b'\t' || c == b'\r' {
            i += 1;
            col += 1;
            continue;
        }
        let word = |pred: fn(u8) -> bool, i: &mut usize, col: &mut usize| {
            while *i < bytes.len() && pred(bytes[*i]) {
                *i += 1;
                *col += 1;
            }
        };
        if c.is_ascii_alphabetic() || c == b'_' {
            word(|b| b.is_ascii_alphanumeric() || b == b'_', &mut i, &mut col);
            out.push(Spanned { tok: Tok::Ident(&text[start.0..i]), line: start.1, col: start.2 });
        } else if c.is_ascii_digit() {
            word(|b| b.is_ascii_digit(), &mut i, &mut col);
            out.push(Spanned { tok: Tok::Int(&text[start.0..i]), line: start.1, col: start.2 });
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(error(line, col, format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned<'a>>,
    pos: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Spanned<'a>> {
        self.toks.get(self.pos).copied()
    }

    /// Next token, skipping newlines.
    fn next_token(&mut self) -> Option<Spanned<'a>> {
        self.skip_newlines();
        let t = self.peek();
        self.pos += usize::from(t.is_some());
        t
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Spanned { tok: Tok::Newline, .. })) {
            self.pos += 1;
        }
    }

    fn unexpected(&self, t: Option<Spanned<'a>>, wanted: &str) -> Error {
        match t {
            Some(s) => error(s.line, s.col, format!("expected {wanted}, found {}", describe(s.tok))),
            None => error(self.end.0, self.end.1, format!("expected {wanted}, found end of input")),
        }
    }

    fn ident(&mut self) -> Result<Spanned<'a>> {
        match self.next_token() {
            Some(s @ Spanned { tok: Tok::Ident(_), .. }) => Ok(s),
            other => Err(self.unexpected(other, "a variable name")),
        }
    }

    fn header(&mut self) -> Result<Option<Vec<String>>> {
        self.skip_newlines();
        let is_header = matches!(
            (self.toks.get(self.pos), self.toks.get(self.pos + 1)),
            (Some(Spanned { tok: Tok::Ident("vars"), .. }), Some(Spanned { tok: Tok::Colon, .. }))
        );
        if !is_header {
            return Ok(None);
        }
        self.pos += 2;
        let mut names = Vec::new();
        loop {
            let s = self.ident()?;
            let Tok::Ident(name) = s.tok else { unreachable!() };
            if names.iter().any(|n| n == name) {
                return Err(error(s.line, s.col, format!("variable {name} declared twice")));
            }
            names.push(name.to_string());
            // The header ends at the first newline or semicolon.
            match self.peek() {
                Some(Spanned { tok: Tok::Comma, .. }) => self.pos += 1,
                Some(Spanned { tok: Tok::Semi | Tok::Newline, .. }) => {
                    self.pos += 1;
                    return Ok(Some(names));
                }
                other => return Err(self.unexpected(other, "',', ';' or a newline")),
            }
        }
    }
}

fn describe(t: Tok<'_>) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Int(s) => format!("'{s}'"),
        Tok::Comma => "','".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Colon => "':'".into(),
        Tok::Semi => "';'".into(),
        Tok::Newline => "a newline".into(),
    }
}

fn end_position(text: &str) -> (usize, usize) {
    let line = text.matches('\n').count() + 1;
    let col = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

/// Parses an ideal and returns its minimalized canonical form.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: end_position(text) };
    let declared = p.header()?;
    let mut names: Vec<String> = declared.clone().unwrap_or_default();
    let mut index: BTreeMap<String, usize> = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();

    let mut gens: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
    let mut expect_term = true;
    while let Some(s) = if expect_term { Some(p.ident()?) } else { p.next_token() } {
        if expect_term {
            let Tok::Ident(name) = s.tok else { unreachable!() };
            let var = match index.get(name) {
                Some(&v) => v,
                None if declared.is_some() => {
                    return Err(error(s.line, s.col, format!("variable {name} is not declared in the header")));
                }
                None => {
                    names.push(name.to_string());
                    index.insert(name.to_string(), names.len() - 1);
                    names.len() - 1
                }
            };
            let mut exp = 1u32;
            p.skip_newlines();
            if matches!(p.peek(), Some(Spanned { tok: Tok::Caret, .. })) {
                p.pos += 1;
                match p.next_token() {
                    Some(Spanned { tok: Tok::Int(digits), line, col }) => {
                        exp = digits
                            .parse()
                            .map_err(|_| error(line, col, format!("exponent {digits} is too large")))?;
                        if exp == 0 {
                            return Err(error(line, col, "exponents must be positive"));
                        }
                    }
                    other => return Err(p.unexpected(other, "a positive exponent")),
                }
            }
            gens.last_mut().expect("nonempty").push((var, exp));
            expect_term = false;
            continue;
        }
        match s.tok {
            Tok::Star => {}
            Tok::Comma => gens.push(Vec::new()),
            _ => return Err(p.unexpected(Some(s), "'*', ',' or end of input")),
        }
        expect_term = true;
    }

    let vars = Variables::new(names)?;
    let monomials = gens.into_iter().map(Monomial::from_pairs).collect();
    minimalize(monomials, &vars)
}

/// Canonical text for an ideal. The header pins the variable order, so
/// `parse_ideal(&format_ideal(i)) == i`.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    format!("vars: {}; {ideal}", ideal.vars().names().join(", "))
}

/// One ideal per line; `#` starts a comment, blank lines are skipped.
/// Errors report the line in the file.
pub fn parse_corpus(text: &str) -> Result<Vec<(usize, MonomialIdeal)>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let ideal = parse_ideal(line).map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("corpus line {}: {msg}", k + 1)),
            other => other,
        })?;
        out.push((k + 1, ideal));
    }
    Ok(out)
}
