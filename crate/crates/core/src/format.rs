//! Plain-text factorization files.
//!
//! ```text
//! # comment
//! genus 2
//! bundle 0
//! irr
//! irr x2 x1^-1
//! red 1 x3
//! ```
//!
//! `irr [word]` and `red <h> [word]` give a twist by its kind and conjugator;
//! their order is the tuple order. LF and CRLF line endings are accepted.

use crate::braid::{BraidWord, Generator, Letter};
use crate::error::{Error, Result};
use crate::lifts::{Factorization, TwistDescriptor, TwistKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationFile {
    pub factorization: Factorization,
    /// Optional `bundle` line: which Hirzebruch parity the user asserts.
    pub bundle: Option<u8>,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn located(line: usize, column: usize, e: Error) -> Error {
    Error::Located { line, column, source: Box::new(e) }
}

fn parse_word(line: usize, strands: usize, toks: &[Token<'_>]) -> Result<BraidWord> {
    let mut letters = Vec::with_capacity(toks.len());
    for t in toks {
        let l: Letter = t.text.parse().map_err(|_| syntax(line, t.column, format!("bad word token `{}`", t.text)))?;
        match l.generator {
            Generator::I => return Err(syntax(line, t.column, "the central letter I cannot appear in a conjugator")),
            Generator::X(i) if i == 0 || i as usize >= strands => {
                return Err(located(line, t.column, Error::GeneratorOutOfRange { index: i as usize, strands }))
            }
            Generator::X(_) => letters.push(l),
        }
    }
    BraidWord::new(strands, letters)
}

pub fn parse(text: &str) -> Result<FactorizationFile> {
    let mut genus: Option<u32> = None;
    let mut bundle: Option<u8> = None;
    let mut twists = Vec::new();
    for (k, raw) in text.split('\n').enumerate() {
        let line_no = k + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = line.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(head) = toks.first() else { continue };
        let args = &toks[1..];
        match head.text {
            "genus" => {
                if genus.is_some() {
                    return Err(syntax(line_no, head.column, "duplicate genus line"));
                }
                let [arg] = args else {
                    return Err(syntax(line_no, head.column, "expected `genus <g>`"));
                };
                let g: u32 = arg.text.parse().ok().filter(|&g| g >= 1).ok_or_else(|| {
                    syntax(line_no, arg.column, format!("genus must be a positive integer, got `{}`", arg.text))
                })?;
                genus = Some(g);
            }
            "bundle" => {
                if genus.is_none() {
                    return Err(syntax(line_no, head.column, "`bundle` before `genus`"));
                }
                if bundle.is_some() {
                    return Err(syntax(line_no, head.column, "duplicate bundle line"));
                }
                let [arg] = args else {
                    return Err(syntax(line_no, head.column, "expected `bundle <0|1>`"));
                };
                bundle = Some(match arg.text {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(syntax(line_no, arg.column, format!("bundle must be 0 or 1, got `{other}`"))),
                });
            }
            "irr" | "red" => {
                let g = genus.ok_or_else(|| syntax(line_no, head.column, "twist line before `genus`"))?;
                let strands = 2 * g as usize + 2;
                let (kind, word_toks) = if head.text == "irr" {
                    (TwistKind::Irreducible, args)
                } else {
                    let Some(h_tok) = args.first() else {
                        return Err(syntax(line_no, head.column, "expected `red <h> [word]`"));
                    };
                    let h: u32 = h_tok.text.parse().map_err(|_| {
                        syntax(line_no, h_tok.column, format!("expected an integer h, got `{}`", h_tok.text))
                    })?;
                    let kind = TwistKind::Reducible(h);
                    kind.check_genus(g).map_err(|e| located(line_no, h_tok.column, e))?;
                    (kind, &args[1..])
                };
                let conjugator = parse_word(line_no, strands, word_toks)?;
                twists.push(TwistDescriptor::new(kind, conjugator)?);
            }
            other => return Err(syntax(line_no, head.column, format!("unknown directive `{other}`"))),
        }
    }
    let g = genus.ok_or_else(|| syntax(1, 1, "missing `genus <g>` line"))?;
    Ok(FactorizationFile { factorization: Factorization::new(g, twists)?, bundle })
}

/// Canonical text of a factorization, LF-terminated.
pub fn emit(f: &Factorization, bundle: Option<u8>) -> String {
    let mut out = format!("genus {}\n", f.genus());
    if let Some(n) = bundle {
        out.push_str(&format!("bundle {n}\n"));
    }
    for d in f.twists() {
        match d.kind {
            TwistKind::Irreducible => out.push_str("irr"),
            TwistKind::Reducible(h) => out.push_str(&format!("red {h}")),
        }
        if !d.conjugator.is_empty() {
            out.push(' ');
            out.push_str(&d.conjugator.to_string());
        }
        out.push('\n');
    }
    out
}
