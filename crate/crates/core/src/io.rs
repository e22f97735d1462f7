//! JSON and plain-text serialization of factorizations.
//!
//! JSON: `{"kind":..,"n":..,"cycle_length":..,"factors":[[["x0","x3",..],..],..]}`
//! with no whitespace. Text: a `kind=.. n=.. cycle_length=..` header, then one
//! factor per blank-line separated paragraph and one cycle per line.
//!
//! Vertex tokens are `x<i>`/`y<i>` for the layered kinds and `v<i>` for
//! `complete_symmetric`. Parsing never rejects a well-formed token whose index
//! is out of range; that is left to the verifier.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::digraph::{DirectedCycle, Factor, Factorization, Kind, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "text" => Some(Format::Text),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    kind: String,
    n: usize,
    cycle_length: usize,
    factors: Vec<Vec<Vec<String>>>,
}

pub fn token(v: &Vertex, kind: Kind) -> String {
    if kind.is_layered() {
        v.to_string()
    } else {
        format!("v{}", v.flat())
    }
}

pub fn parse_token(tok: &str, kind: Kind, n: usize) -> Option<Vertex> {
    let (head, digits) = tok.split_at(tok.char_indices().nth(1).map_or(tok.len(), |(i, _)| i));
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: u32 = digits.parse().ok()?;
    let layer = match (kind.is_layered(), head) {
        (true, "x") => 0,
        (true, "y") => 1,
        (false, "v") => 0,
        _ => return None,
    };
    let modulus = if kind.is_layered() { n / 2 } else { n } as u32;
    Some(Vertex { layer, index, modulus })
}

fn locate(text: &str, needle: &str) -> (usize, usize) {
    match text.find(needle) {
        Some(at) => {
            let before = &text[..at];
            let line = before.matches('\n').count() + 1;
            let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            (line, column)
        }
        None => (0, 0),
    }
}

pub fn to_json(fac: &Factorization) -> String {
    let wire = Wire {
        kind: fac.kind.as_str().to_string(),
        n: fac.n,
        cycle_length: fac.cycle_length,
        factors: fac
            .factors
            .iter()
            .map(|f| f.cycles().iter().map(|c| c.vertices().iter().map(|v| token(v, fac.kind)).collect()).collect())
            .collect(),
    };
    serde_json::to_string(&wire).expect("plain data always serializes")
}

pub fn from_json(text: &str) -> Result<Factorization> {
    let wire: Wire = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), msg: e.to_string() })?;
    let kind = Kind::parse(&wire.kind).ok_or_else(|| {
        let (line, column) = locate(text, &format!("\"{}\"", wire.kind));
        Error::Parse { line, column, msg: format!("unknown kind {:?}", wire.kind) }
    })?;
    let mut factors = Vec::with_capacity(wire.factors.len());
    for f in &wire.factors {
        let mut cycles = Vec::with_capacity(f.len());
        for c in f {
            let vs = c
                .iter()
                .map(|t| {
                    parse_token(t, kind, wire.n).ok_or_else(|| {
                        let (line, column) = locate(text, &format!("\"{t}\""));
                        Error::Parse { line, column, msg: format!("bad vertex token {t:?} for kind {}", kind.as_str()) }
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(DirectedCycle::raw(vs));
        }
        factors.push(Factor::new(cycles));
    }
    Ok(Factorization { kind, n: wire.n, cycle_length: wire.cycle_length, factors })
}

pub fn to_text(fac: &Factorization) -> String {
    let mut out = format!("kind={} n={} cycle_length={}\n", fac.kind.as_str(), fac.n, fac.cycle_length);
    for f in &fac.factors {
        out.push('\n');
        for c in f.cycles() {
            let line: Vec<String> = c.vertices().iter().map(|v| token(v, fac.kind)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn from_text(text: &str) -> Result<Factorization> {
    let err = |line: usize, column: usize, msg: String| Error::Parse { line, column, msg };
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| err(1, 1, "empty input".into()))?;
    let mut kind = None;
    let mut n = None;
    let mut cycle_length = None;
    for field in header.split_whitespace() {
        let col = field.as_ptr() as usize - header.as_ptr() as usize + 1;
        let (key, value) = field.split_once('=').ok_or_else(|| err(hl + 1, col, format!("expected key=value, got {field:?}")))?;
        let bad = || err(hl + 1, col, format!("bad value in {field:?}"));
        match key {
            "kind" => kind = Some(Kind::parse(value).ok_or_else(bad)?),
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
            "cycle_length" => cycle_length = Some(value.parse::<usize>().map_err(|_| bad())?),
            _ => return Err(err(hl + 1, col, format!("unknown header field {key:?}"))),
        }
    }
    let missing = |what: &str| err(hl + 1, 1, format!("header lacks {what}"));
    let kind = kind.ok_or_else(|| missing("kind"))?;
    let n = n.ok_or_else(|| missing("n"))?;
    let cycle_length = cycle_length.ok_or_else(|| missing("cycle_length"))?;
    let mut factors = Vec::new();
    let mut current: Vec<DirectedCycle> = Vec::new();
    for (ln, line) in lines {
        if line.trim().is_empty() {
            if !current.is_empty() {
                factors.push(Factor::new(std::mem::take(&mut current)));
            }
            continue;
        }
        let mut vs = Vec::new();
        for t in line.split_whitespace() {
            let col = t.as_ptr() as usize - line.as_ptr() as usize + 1;
            vs.push(parse_token(t, kind, n).ok_or_else(|| err(ln + 1, col, format!("bad vertex token {t:?}")))?);
        }
        current.push(DirectedCycle::raw(vs));
    }
    if !current.is_empty() {
        factors.push(Factor::new(current));
    }
    Ok(Factorization { kind, n, cycle_length, factors })
}

/// Picks the format from the first non-blank character.
pub fn parse_any(text: &str) -> Result<Factorization> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

pub fn read_file(path: &Path) -> Result<Factorization> {
    parse_any(&fs::read_to_string(path)?)
}

pub fn render(fac: &Factorization, format: Format) -> String {
    match format {
        Format::Json => to_json(fac) + "\n",
        Format::Text => to_text(fac),
    }
}

pub fn write_file(path: &Path, fac: &Factorization, format: Format) -> Result<()> {
    fs::write(path, render(fac, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Factorization {
        let v = |i| Vertex::new(0, i, 4);
        Factorization {
            kind: Kind::CompleteSymmetric,
            n: 4,
            cycle_length: 2,
            factors: vec![Factor::new(vec![
                DirectedCycle::new(vec![v(1), v(0)]).unwrap(),
                DirectedCycle::new(vec![v(3), v(2)]).unwrap(),
            ])],
        }
    }

    #[test]
    fn json_exact() {
        let s = to_json(&small());
        assert_eq!(s, r#"{"kind":"complete_symmetric","n":4,"cycle_length":2,"factors":[[["v0","v1"],["v2","v3"]]]}"#);
        assert_eq!(from_json(&s).unwrap(), small());
    }

    #[test]
    fn text_exact() {
        let s = to_text(&small());
        assert_eq!(s, "kind=complete_symmetric n=4 cycle_length=2\n\nv0 v1\nv2 v3\n");
        assert_eq!(from_text(&s).unwrap(), small());
    }

    #[test]
    fn locations() {
        let s = "{\"kind\":\"H\",\"n\":10,\n\"cycle_length\":5,\"factors\":[[[\"x0\",\"q1\"]]]}";
        match from_json(s) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 36)),
            other => panic!("{other:?}"),
        }
        match from_json("{\"kind\":\"H\",\"n\":10,\"cycle") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match from_text("kind=H n=10 cycle_length=5\n\nx0 x1\nx2 z9\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (4, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tokens() {
        assert_eq!(parse_token("y12", Kind::G, 26), Some(Vertex::y(12, 13)));
        assert_eq!(parse_token("v40", Kind::CompleteSymmetric, 26).map(|v| v.index), Some(40));
        assert_eq!(parse_token("v", Kind::CompleteSymmetric, 26), None);
        assert_eq!(parse_token("x1", Kind::CompleteSymmetric, 26), None);
        assert_eq!(parse_token("x+1", Kind::H, 26), None);
    }
}
