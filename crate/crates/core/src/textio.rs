//! Plain-text input and output formats.
//!
//! * **Ideals** — one monomial per line; a monomial is `*`-joined factors
//!   `x<i>` or `x<i>^<e>` (1-based variable indices). The letters `a`–`f`
//!   are accepted as aliases for `x1`–`x6`. `1` denotes the unit generator.
//!   `#` starts a comment; blank lines are skipped.
//! * **Complexes** — one facet per line as comma-separated 1-based vertex
//!   indices; a lone `-` denotes the empty facet.
//! * **Graphs** — first non-comment line is the vertex count `n`, each
//!   following line one edge `i j` (1-based).

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::Result;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
    .trim()
}

fn parse_factor(token: &str, line_no: usize) -> Result<(usize, u16)> {
    let (base, exp) = match token.split_once('^') {
        Some((b, e)) => {
            let exp: u16 = e
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad exponent in `{token}`")))?;
            (b.trim(), exp)
        }
        None => (token, 1),
    };
    let index = if let Some(rest) = base.strip_prefix('x') {
        let i: usize = rest
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad variable `{base}`")))?;
        if i == 0 {
            return Err(Error::parse(line_no, "variable indices are 1-based"));
        }
        i - 1
    } else if base.len() == 1 && ('a'..='f').contains(&base.chars().next().unwrap()) {
        base.chars().next().unwrap() as usize - 'a' as usize
    } else {
        return Err(Error::parse(line_no, format!("unrecognized factor `{base}`")));
    };
    Ok((index, exp))
}

/// Parse a single monomial such as `x1*x3^2` or `a*b*d` in `n` variables.
pub fn parse_monomial(s: &str, n: usize) -> Result<Monomial> {
    parse_monomial_line(s, n, 0)
}

fn parse_monomial_line(s: &str, n: usize, line_no: usize) -> Result<Monomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u16; n];
    for token in s.split('*') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::parse(line_no, "empty factor"));
        }
        let (i, e) = parse_factor(token, line_no)?;
        if i >= n {
            return Err(Error::parse(
                line_no,
                format!("variable x{} exceeds ambient {}", i + 1, n),
            ));
        }
        exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
    }
    Ok(Monomial::new(exps))
}

/// Parse an ideal. When `ambient` is `None` the variable count is inferred
/// as the largest index mentioned.
pub fn parse_ideal(text: &str, ambient: Option<usize>) -> Result<MonomialIdeal> {
    let mut lines = Vec::new();
    let mut max_index = 0usize;
    for (no, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if line != "1" {
            for token in line.split('*') {
                let (i, _) = parse_factor(token.trim(), no + 1)?;
                max_index = max_index.max(i + 1);
            }
        }
        lines.push((no + 1, line.to_string()));
    }
    let n = match ambient {
        Some(n) => {
            if max_index > n {
                return Err(Error::parse(0, format!("ambient {n} below largest index {max_index}")));
            }
            n
        }
        None => max_index,
    };
    let gens = lines
        .into_iter()
        .map(|(no, line)| parse_monomial_line(&line, n, no))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// Render an ideal, one generator per line.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return format!("# zero ideal in {} variables\n", ideal.ambient());
    }
    let mut out = String::new();
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parse a simplicial complex from facet lines.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut max_vertex = 0usize;
    for (no, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if line == "-" {
            facets.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        for token in line.split(',') {
            let v: usize = token
                .trim()
                .parse()
                .map_err(|_| Error::parse(no + 1, format!("bad vertex `{}`", token.trim())))?;
            if v == 0 {
                return Err(Error::parse(no + 1, "vertex indices are 1-based"));
            }
            max_vertex = max_vertex.max(v);
            facet.push(v - 1);
        }
        facets.push(facet);
    }
    SimplicialComplex::from_faces(max_vertex, facets)
}

/// Render a complex, one facet per line (vertices 1-based).
pub fn format_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        let verts: Vec<String> =
            (0..complex.vertex_count()).filter(|&v| facet >> v & 1 == 1).map(|v| (v + 1).to_string()).collect();
        if verts.is_empty() {
            out.push_str("-\n");
        } else {
            out.push_str(&verts.join(","));
            out.push('\n');
        }
    }
    out
}

/// Parse a graph: vertex count, then one edge per line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                n = Some(
                    line.parse()
                        .map_err(|_| Error::parse(no + 1, "expected the vertex count"))?,
                );
            }
            Some(nv) => {
                let mut parts = line.split_whitespace();
                let a: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(no + 1, "expected an edge `i j`"))?;
                let b: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::parse(no + 1, "expected an edge `i j`"))?;
                if parts.next().is_some() {
                    return Err(Error::parse(no + 1, "trailing tokens after edge"));
                }
                if a == 0 || b == 0 || a > nv || b > nv {
                    return Err(Error::parse(no + 1, format!("edge ({a}, {b}) out of range")));
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    Graph::new(n.ok_or_else(|| Error::parse(0, "missing vertex count"))?, edges)
}

/// Render a graph in the same format `parse_graph` reads.
pub fn format_graph(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.vertex_count());
    for &(a, b) in graph.edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
