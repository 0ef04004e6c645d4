//! Plain-text hypergraph format (".hg"): the first non-comment line is the
//! vertex count, every following non-empty line is one hyperedge as
//! whitespace-separated 0-based indices, and `#` starts a comment. Generator
//! metadata travels in a `# family=...` comment so spectra commands can join
//! closed forms onto parsed files. Parse/serialize round-trips preserve edge
//! order exactly.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::{Family, Hypergraph};

fn family_header(f: &Family) -> String {
    match *f {
        Family::Hyperstar { n, k } => format!("# family=hyperstar n={n} k={k}"),
        Family::DoubleHyperstar { n1, n2, k } => {
            format!("# family=double-hyperstar n1={n1} n2={n2} k={k}")
        }
        Family::Sunflower { k } => format!("# family=sunflower k={k}"),
        Family::Complete { n, r } => format!("# family=complete n={n} r={r}"),
    }
}

fn parse_family(comment: &str) -> Option<Family> {
    let mut kv: HashMap<&str, &str> = HashMap::new();
    for token in comment.split_whitespace() {
        if let Some((key, value)) = token.split_once('=') {
            kv.insert(key, value);
        }
    }
    let get = |k: &str| kv.get(k).and_then(|v| v.parse::<usize>().ok());
    match *kv.get("family")? {
        "hyperstar" => Some(Family::Hyperstar {
            n: get("n")?,
            k: get("k")?,
        }),
        "double-hyperstar" => Some(Family::DoubleHyperstar {
            n1: get("n1")?,
            n2: get("n2")?,
            k: get("k")?,
        }),
        "sunflower" => Some(Family::Sunflower { k: get("k")? }),
        "complete" => Some(Family::Complete {
            n: get("n")?,
            r: get("r")?,
        }),
        _ => None,
    }
}

/// Serializes to the ".hg" text format, embedding family metadata when present.
pub fn to_hg(h: &Hypergraph) -> String {
    let mut out = String::new();
    if let Some(f) = h.family() {
        out.push_str(&family_header(&f));
        out.push('\n');
    }
    out.push_str(&format!("{}\n", h.order()));
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the ".hg" text format, reporting the 1-based line of any failure.
pub fn from_hg(text: &str) -> Result<Hypergraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut family: Option<Family> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(pos) => {
                if family.is_none() {
                    family = parse_family(&raw[pos + 1..]);
                }
                &raw[..pos]
            }
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("expected the vertex count, found {line:?}"),
                })?);
            }
            Some(_) => {
                let mut edge = Vec::new();
                for tok in line.split_whitespace() {
                    edge.push(tok.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        message: format!("expected a vertex index, found {tok:?}"),
                    })?);
                }
                edges.push(edge);
            }
        }
    }
    let Some(n) = n else {
        return Err(Error::Parse {
            line: 0,
            message: "empty input: no vertex count".into(),
        });
    };
    let mut h = Hypergraph::new(n, edges)?;
    if let Some(f) = family {
        if f.order() == h.order() {
            h.set_family(Some(f));
        }
    }
    Ok(h)
}
