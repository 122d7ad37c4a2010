//! The line-oriented cluster document format.
//!
//! ```text
//! model lev:2
//! arc ((0@1),(2@1))
//! family seq zigzag@lev2 gen=on:lev2:0:-1;on:lev2:0:1;1;1
//! meta source F:4->inf
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::{Arc, ArcSet, Endpoint, Ext, FamilyRef, Model, Q};
use crate::models::pifam::{DyadicFamily, DyadicKind, FanKind, PiFan};
use crate::models::seq::SeqFamily;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub set: ArcSet,
    pub meta: Vec<(String, String)>,
}

impl Document {
    pub fn new(set: ArcSet) -> Self {
        Document { set, meta: Vec::new() }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<String>) -> Self {
        self.meta.push((key.into(), value.into()));
        self
    }
}

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

fn parse_ext(s: &str) -> Result<Ext> {
    Ok(match s.trim() {
        "-inf" => Ext::NegInf,
        "+inf" | "inf" => Ext::PosInf,
        v => Ext::Fin(parse_int(v)?),
    })
}

/// Reads an endpoint in the syntax of `model`: integers, `-inf`/`+inf`,
/// `(m@l)`, `(+inf@l)`, `atan(p/q)`, `pi/2`.
pub fn parse_endpoint(model: Model, s: &str) -> Result<Endpoint> {
    let s = s.trim();
    let leveled = || -> Result<(&str, u32)> {
        let body = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (m@l), got `{s}`")))?;
        let (m, l) = body.split_once('@').ok_or_else(|| Error::Parse(format!("expected (m@l), got `{s}`")))?;
        let l = l.trim().parse().map_err(|_| Error::Parse(format!("bad level in `{s}`")))?;
        Ok((m, l))
    };
    let e = match model {
        Model::Polygon(_) => Endpoint::Poly(parse_int(s)?),
        Model::Infinity => Endpoint::Z(parse_int(s)?),
        Model::CompletedInfinity => Endpoint::ZBar(parse_ext(s)?),
        Model::Leveled(_) => {
            let (m, l) = leveled()?;
            Endpoint::lev(parse_int(m)?, l)
        }
        Model::CompletedLeveled(_) => {
            let (m, l) = leveled()?;
            Endpoint::LevBar { m: parse_ext(m)?, level: l }
        }
        Model::PrimedLeveled(_) => {
            let (m, l) = leveled()?;
            Endpoint::primed(parse_int(m)?, l)
        }
        Model::Hyperbolic => {
            if s == "pi/2" {
                Endpoint::half_pi()
            } else {
                let body = s
                    .strip_prefix("atan(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected atan(p/q) or pi/2, got `{s}`")))?;
                Endpoint::atan(Q::from_str(body.trim()).map_err(|_| Error::Parse(format!("bad rational `{body}`")))?)
            }
        }
    };
    model.ensure(&e)?;
    Ok(e)
}

/// Reads `(lo,hi)`, splitting at the comma outside nested parentheses.
pub fn parse_arc(model: Model, s: &str) -> Result<Arc> {
    let s = s.trim();
    let body = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (lo,hi), got `{s}`")))?;
    let mut depth = 0i32;
    let split = body.char_indices().find(|&(_, c)| {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        c == ',' && depth == 0
    });
    let (k, _) = split.ok_or_else(|| Error::Parse(format!("expected (lo,hi), got `{s}`")))?;
    let lo = parse_endpoint(model, &body[..k])?;
    let hi = parse_endpoint(model, &body[k + 1..])?;
    Arc::new(model, lo, hi)
}

/// Rebuilds a family from its descriptor.
pub fn parse_family(model: Model, s: &str) -> Result<FamilyRef> {
    let mut words = s.split_whitespace();
    let kind = words.next().ok_or_else(|| Error::Parse("empty family descriptor".into()))?;
    let pi_only = |f: FamilyRef| -> Result<FamilyRef> {
        if model == Model::Hyperbolic {
            Ok(f)
        } else {
            Err(Error::ModelMismatch { expected: model, found: format!("family `{kind}` on pi") })
        }
    };
    match kind {
        "dyadic-a" => pi_only(DyadicFamily::new(DyadicKind::A).shared()),
        "dyadic-e" => pi_only(DyadicFamily::new(DyadicKind::E).shared()),
        "fan-b" => pi_only(PiFan::new(FanKind::B).shared()),
        "fan-c" => {
            let i = parse_int(words.next().ok_or_else(|| Error::Parse("fan-c needs i".into()))?)?;
            pi_only(PiFan::new(FanKind::C(i)).shared())
        }
        "seq" => {
            let name = words.next().ok_or_else(|| Error::Parse("seq family needs a name".into()))?;
            let endpoint = |t: &str| parse_endpoint(model, t);
            let gens = words
                .map(|w| {
                    let g = w.strip_prefix("gen=").ok_or_else(|| Error::Parse(format!("expected gen=…, got `{w}`")))?;
                    SeqFamily::parse_generator(g, &endpoint)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SeqFamily::new(name, model, gens)?.shared())
        }
        _ => Err(Error::Parse(format!("unknown family kind `{kind}`"))),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut model = None;
    let mut set: Option<ArcSet> = None;
    let mut meta = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let n = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "model" => {
                if model.is_some() {
                    return Err(perr(n, "second model header"));
                }
                let m: Model = rest.parse().map_err(|e| perr(n, e))?;
                model = Some(m);
                set = Some(ArcSet::new(m));
            }
            "arc" | "family" => {
                let (m, s) = model.zip(set.as_mut()).ok_or_else(|| perr(n, "arc before model header"))?;
                if head == "arc" {
                    s.insert(parse_arc(m, rest).map_err(|e| perr(n, e))?).map_err(|e| perr(n, e))?;
                } else {
                    s.add_family(parse_family(m, rest).map_err(|e| perr(n, e))?).map_err(|e| perr(n, e))?;
                }
            }
            "meta" => {
                let (key, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                meta.push((key.to_string(), value.trim().to_string()));
            }
            _ => return Err(perr(n, format!("unknown directive `{head}`"))),
        }
    }
    let set = set.ok_or_else(|| Error::Parse("missing model header".into()))?;
    Ok(Document { set, meta })
}

pub fn print_document(doc: &Document) -> String {
    let mut s = format!("model {}\n", doc.set.model());
    for a in doc.set.explicit() {
        let _ = writeln!(s, "arc {a}");
    }
    for d in doc.set.descriptors() {
        let _ = writeln!(s, "family {d}");
    }
    for (k, v) in &doc.meta {
        let _ = writeln!(s, "meta {k} {v}");
    }
    s
}
