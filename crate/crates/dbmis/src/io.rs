//! Line-oriented `v1` text formats for instances, solutions, and reduction
//! mappings.
//!
//! Every file starts with a `v1 <kind>` header and contains only
//! whitespace-separated integers after that, with explicit counts ahead of
//! every variable-length section, so the formats are diffable and trivial
//! to parse in any language. Ids are 0-based throughout. Rendering is
//! canonical (single spaces, one trailing newline) and `parse(render(x))`
//! returns `x` exactly.
//!
//! Matroids appear as self-delimiting recursive blocks:
//!
//! ```text
//! free <count> <ids...>
//! uniform <rank> <count> <ids...>
//! graphic <vertices> <edge-count>   followed by one `<u> <v>` line per edge
//! partition <count> <ids...> <part-count>   followed by `<cap> <size> <members...>` lines
//! directsum <child-count>           followed by the child blocks
//! restriction <count> <ids...>      followed by the child block
//! copy <count> <new old ...>        followed by the child block
//! ```

use std::fmt::Write as _;

use crate::bmatching::HierarchicalBMatchingInstance;
use crate::branching::ColoredDigraph;
use crate::instance::{BoundedHypergraph, DbmisInstance};
use crate::matroid::{GroundSet, Kind, Matroid};
use crate::parity::ParityInstance;
use crate::pcforest::EdgeColoredMultigraph;
use crate::{ElementId, Error, Result, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Dbmis(DbmisInstance),
    Ecgraph(EdgeColoredMultigraph),
    Digraph(ColoredDigraph),
    Bmatching {
        graph: EdgeColoredMultigraph,
        b: Vec<u64>,
    },
    Parity(ParityInstance),
    Hier(HierarchicalBMatchingInstance),
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Dbmis(_) => "dbmis",
            InstanceFile::Ecgraph(_) => "ecgraph",
            InstanceFile::Digraph(_) => "digraph",
            InstanceFile::Bmatching { .. } => "bmatching",
            InstanceFile::Parity(_) => "parity",
            InstanceFile::Hier(_) => "hier",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub ids: Vec<usize>,
    pub weight: Weight,
}

/// Reduction output mapping: row `(to_index, from_id)` says that index
/// `to_index` of a reduced solution stands for source element `from_id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapping {
    pub from: String,
    pub to: String,
    pub rows: Vec<(usize, usize)>,
}

// ---------------------------------------------------------------- render

pub fn render_instance(file: &InstanceFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "v1 {}", file.kind());
    match file {
        InstanceFile::Ecgraph(g) => render_ecgraph(g, &mut out),
        InstanceFile::Digraph(d) => {
            let _ = writeln!(
                out,
                "{} {} {} {} {}",
                d.n(),
                d.k(),
                d.m(),
                d.out_bound_overrides().len(),
                d.inc_bound_overrides().len()
            );
            for a in d.arcs() {
                let _ = writeln!(out, "{} {} {} {}", a.tail, a.head, a.color, a.weight);
            }
            for (&(v, c), &g) in d.out_bound_overrides() {
                let _ = writeln!(out, "{v} {c} {g}");
            }
            for (&(v, c), &g) in d.inc_bound_overrides() {
                let _ = writeln!(out, "{v} {c} {g}");
            }
        }
        InstanceFile::Bmatching { graph, b } => {
            render_ecgraph(graph, &mut out);
            for bv in b {
                let _ = writeln!(out, "{bv}");
            }
        }
        InstanceFile::Dbmis(inst) => {
            let _ = writeln!(out, "{} {}", inst.n(), inst.hypergraph().hyperedges().len());
            for w in inst.weights() {
                let _ = writeln!(out, "{w}");
            }
            for h in inst.hypergraph().hyperedges() {
                let _ = write!(out, "{} {}", h.bound, h.members.len());
                for &m in &h.members {
                    let _ = write!(out, " {m}");
                }
                out.push('\n');
            }
            render_matroid(inst.matroid(), &mut out);
        }
        InstanceFile::Parity(p) => {
            let _ = writeln!(
                out,
                "{} {} {}",
                p.matroid().ground().len(),
                p.k(),
                p.sets().len()
            );
            for (set, w) in p.sets().iter().zip(p.weights()) {
                let _ = write!(out, "{w}");
                for &id in set {
                    let _ = write!(out, " {id}");
                }
                out.push('\n');
            }
            render_matroid(p.matroid(), &mut out);
        }
        InstanceFile::Hier(h) => {
            let _ = writeln!(
                out,
                "{} {} {}",
                h.n_copies(),
                h.edges().len(),
                h.sets().len()
            );
            for ((u, v), w) in h.edges().iter().zip(h.weights()) {
                let _ = writeln!(out, "{u} {v} {w}");
            }
            for (members, bound) in h.sets() {
                let _ = write!(out, "{bound} {}", members.len());
                render_ids(&mut out, members.iter().copied());
                out.push('\n');
            }
            for &(v, e) in h.copy_labels() {
                let _ = writeln!(out, "{v} {e}");
            }
        }
    }
    out
}

fn render_ecgraph(g: &EdgeColoredMultigraph, out: &mut String) {
    let _ = writeln!(
        out,
        "{} {} {} {}",
        g.n(),
        g.k(),
        g.m(),
        g.bound_overrides().len()
    );
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {} {}", e.u, e.v, e.color, e.weight);
    }
    for (&(v, c), &bound) in g.bound_overrides() {
        let _ = writeln!(out, "{v} {c} {bound}");
    }
}

fn render_ids(out: &mut String, ids: impl Iterator<Item = ElementId>) {
    for id in ids {
        let _ = write!(out, " {id}");
    }
}

fn render_matroid(m: &Matroid, out: &mut String) {
    match m.kind() {
        Kind::Free => {
            let _ = write!(out, "free {}", m.ground().len());
            render_ids(out, m.ground().iter());
            out.push('\n');
        }
        Kind::Uniform { rank } => {
            let _ = write!(out, "uniform {rank} {}", m.ground().len());
            render_ids(out, m.ground().iter());
            out.push('\n');
        }
        Kind::Graphic { vertices, edges } => {
            let _ = writeln!(out, "graphic {vertices} {}", edges.len());
            for &(u, v) in edges {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        Kind::Partition { parts, .. } => {
            let _ = write!(out, "partition {}", m.ground().len());
            render_ids(out, m.ground().iter());
            let _ = write!(out, " {}", parts.len());
            out.push('\n');
            for (members, cap) in parts {
                let _ = write!(out, "{cap} {}", members.len());
                render_ids(out, members.iter().copied());
                out.push('\n');
            }
        }
        Kind::DirectSum { children, .. } => {
            let _ = writeln!(out, "directsum {}", children.len());
            for child in children {
                render_matroid(child, out);
            }
        }
        Kind::Restriction { child } => {
            let _ = write!(out, "restriction {}", m.ground().len());
            render_ids(out, m.ground().iter());
            out.push('\n');
            render_matroid(child, out);
        }
        Kind::Copy { map, child } => {
            let _ = write!(out, "copy {}", map.len());
            for &(new, old) in map {
                let _ = write!(out, " {new} {old}");
            }
            out.push('\n');
            render_matroid(child, out);
        }
    }
}

pub fn render_solution(ids: &[usize], weight: Weight) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "v1 solution");
    let _ = writeln!(out, "{} {weight}", ids.len());
    for id in ids {
        let _ = writeln!(out, "{id}");
    }
    out
}

pub fn render_mapping(mapping: &Mapping) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "v1 mapping");
    let _ = writeln!(
        out,
        "{} {} {}",
        mapping.from,
        mapping.to,
        mapping.rows.len()
    );
    for &(to, from) in &mapping.rows {
        let _ = writeln!(out, "{to} {from}");
    }
    out
}

// ----------------------------------------------------------------- parse

struct Reader<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader {
            lines: text.lines(),
            line_no: 0,
        }
    }

    fn next(&mut self) -> Result<(usize, Vec<&'a str>)> {
        let line = self.lines.next().ok_or(Error::Parse {
            line: self.line_no + 1,
            msg: "unexpected end of file".into(),
        })?;
        self.line_no += 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse {
                line: self.line_no,
                msg: "blank line".into(),
            });
        }
        Ok((self.line_no, tokens))
    }

    fn finish(&mut self) -> Result<()> {
        if self.lines.next().is_some() {
            return Err(Error::Parse {
                line: self.line_no + 1,
                msg: "trailing content after the expected records".into(),
            });
        }
        Ok(())
    }
}

fn num<T>(tok: &str, line: usize) -> Result<T>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    tok.parse().map_err(|e| Error::Parse {
        line,
        msg: format!("bad integer `{tok}`: {e}"),
    })
}

fn need(tokens: &[&str], count: usize, line: usize, what: &str) -> Result<()> {
    if tokens.len() != count {
        return Err(Error::Parse {
            line,
            msg: format!("{what}: expected {count} fields, found {}", tokens.len()),
        });
    }
    Ok(())
}

/// Wraps constructor-level validation errors with the line that finished
/// the offending record block.
fn at_line<T>(r: Result<T>, line: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    })
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let mut r = Reader::new(text);
    let (line, header) = r.next()?;
    need(&header, 2, line, "header")?;
    if header[0] != "v1" {
        return Err(Error::Parse {
            line,
            msg: format!("unsupported format version `{}`", header[0]),
        });
    }
    let file = match header[1] {
        "ecgraph" => InstanceFile::Ecgraph(parse_ecgraph(&mut r)?),
        "digraph" => {
            let (line, counts) = r.next()?;
            need(&counts, 5, line, "digraph counts")?;
            let n: usize = num(counts[0], line)?;
            let k: usize = num(counts[1], line)?;
            let m: usize = num(counts[2], line)?;
            let out_count: usize = num(counts[3], line)?;
            let inc_count: usize = num(counts[4], line)?;
            let mut arcs = Vec::with_capacity(m);
            let mut last = line;
            for _ in 0..m {
                let (line, t) = r.next()?;
                need(&t, 4, line, "arc")?;
                arcs.push((
                    num(t[0], line)?,
                    num(t[1], line)?,
                    num(t[2], line)?,
                    num(t[3], line)?,
                ));
                last = line;
            }
            let mut bounds = |count: usize, last: &mut usize| -> Result<Vec<((usize, usize), u64)>> {
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    let (line, t) = r.next()?;
                    need(&t, 3, line, "bound")?;
                    out.push(((num(t[0], line)?, num(t[1], line)?), num(t[2], line)?));
                    *last = line;
                }
                Ok(out)
            };
            let outs = bounds(out_count, &mut last)?;
            let incs = bounds(inc_count, &mut last)?;
            InstanceFile::Digraph(at_line(ColoredDigraph::new(n, k, arcs, outs, incs), last)?)
        }
        "bmatching" => {
            let graph = parse_ecgraph(&mut r)?;
            let mut b = Vec::with_capacity(graph.n());
            for _ in 0..graph.n() {
                let (line, t) = r.next()?;
                need(&t, 1, line, "degree bound")?;
                b.push(num(t[0], line)?);
            }
            InstanceFile::Bmatching { graph, b }
        }
        "dbmis" => {
            let (line, counts) = r.next()?;
            need(&counts, 2, line, "instance counts")?;
            let n: usize = num(counts[0], line)?;
            let h_count: usize = num(counts[1], line)?;
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (line, t) = r.next()?;
                need(&t, 1, line, "weight")?;
                weights.push(num(t[0], line)?);
            }
            let mut hyperedges = Vec::with_capacity(h_count);
            let mut last = line;
            for _ in 0..h_count {
                let (line, t) = r.next()?;
                if t.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "hyperedge needs a bound and a size".into(),
                    });
                }
                let bound: u64 = num(t[0], line)?;
                let size: usize = num(t[1], line)?;
                need(&t, 2 + size, line, "hyperedge")?;
                let members = t[2..]
                    .iter()
                    .map(|tok| num(tok, line))
                    .collect::<Result<Vec<usize>>>()?;
                hyperedges.push((members, bound));
                last = line;
            }
            let hyper = at_line(BoundedHypergraph::new(n, hyperedges), last)?;
            let (matroid, last) = parse_matroid(&mut r)?;
            InstanceFile::Dbmis(at_line(DbmisInstance::new(matroid, hyper, weights), last)?)
        }
        "parity" => {
            let (line, counts) = r.next()?;
            need(&counts, 3, line, "instance counts")?;
            let n: usize = num(counts[0], line)?;
            let k: usize = num(counts[1], line)?;
            let set_count: usize = num(counts[2], line)?;
            let mut sets = Vec::with_capacity(set_count);
            let mut weights = Vec::with_capacity(set_count);
            for _ in 0..set_count {
                let (line, t) = r.next()?;
                need(&t, 1 + k, line, "parity set")?;
                weights.push(num(t[0], line)?);
                sets.push(
                    t[1..]
                        .iter()
                        .map(|tok| num(tok, line))
                        .collect::<Result<Vec<usize>>>()?,
                );
            }
            let (matroid, last) = parse_matroid(&mut r)?;
            if matroid.ground().len() != n {
                return Err(Error::Parse {
                    line: last,
                    msg: format!(
                        "matroid ground has {} elements but the header says {n}",
                        matroid.ground().len()
                    ),
                });
            }
            InstanceFile::Parity(at_line(ParityInstance::new(matroid, k, sets, weights), last)?)
        }
        "hier" => {
            let (line, counts) = r.next()?;
            need(&counts, 3, line, "instance counts")?;
            let n_copies: usize = num(counts[0], line)?;
            let m: usize = num(counts[1], line)?;
            let set_count: usize = num(counts[2], line)?;
            let mut edges = Vec::with_capacity(m);
            let mut weights = Vec::with_capacity(m);
            for _ in 0..m {
                let (line, t) = r.next()?;
                need(&t, 3, line, "edge")?;
                edges.push((num(t[0], line)?, num(t[1], line)?));
                weights.push(num(t[2], line)?);
            }
            let mut sets = Vec::with_capacity(set_count);
            for _ in 0..set_count {
                let (line, t) = r.next()?;
                if t.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "laminar set needs a bound and a size".into(),
                    });
                }
                let bound: u64 = num(t[0], line)?;
                let size: usize = num(t[1], line)?;
                need(&t, 2 + size, line, "laminar set")?;
                sets.push((ids_from(&t[2..], line)?, bound));
            }
            let mut labels = Vec::with_capacity(n_copies);
            let mut last = line;
            for _ in 0..n_copies {
                let (line, t) = r.next()?;
                need(&t, 2, line, "copy label")?;
                labels.push((num(t[0], line)?, num(t[1], line)?));
                last = line;
            }
            InstanceFile::Hier(at_line(
                HierarchicalBMatchingInstance::new(n_copies, edges, weights, sets, labels),
                last,
            )?)
        }
        other => {
            return Err(Error::Parse {
                line,
                msg: format!("unknown instance kind `{other}`"),
            })
        }
    };
    r.finish()?;
    Ok(file)
}

fn parse_ecgraph(r: &mut Reader) -> Result<EdgeColoredMultigraph> {
    let (line, counts) = r.next()?;
    need(&counts, 4, line, "graph counts")?;
    let n: usize = num(counts[0], line)?;
    let k: usize = num(counts[1], line)?;
    let m: usize = num(counts[2], line)?;
    let b_count: usize = num(counts[3], line)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = line;
    for _ in 0..m {
        let (line, t) = r.next()?;
        need(&t, 4, line, "edge")?;
        edges.push((
            num(t[0], line)?,
            num(t[1], line)?,
            num(t[2], line)?,
            num(t[3], line)?,
        ));
        last = line;
    }
    let mut bounds = Vec::with_capacity(b_count);
    for _ in 0..b_count {
        let (line, t) = r.next()?;
        need(&t, 3, line, "bound")?;
        bounds.push(((num(t[0], line)?, num(t[1], line)?), num(t[2], line)?));
        last = line;
    }
    at_line(EdgeColoredMultigraph::new(n, k, edges, bounds), last)
}

fn ids_from(tokens: &[&str], line: usize) -> Result<Vec<ElementId>> {
    tokens.iter().map(|t| num(t, line)).collect()
}

/// Parses one matroid block; returns it plus the last line consumed.
fn parse_matroid(r: &mut Reader) -> Result<(Matroid, usize)> {
    let (line, t) = r.next()?;
    match t[0] {
        "free" | "uniform" => {
            let skip = if t[0] == "uniform" { 2 } else { 1 };
            if t.len() < skip + 1 {
                return Err(Error::Parse {
                    line,
                    msg: format!("{} block is missing its ground count", t[0]),
                });
            }
            let count: usize = num(t[skip], line)?;
            need(&t, skip + 1 + count, line, t[0])?;
            let ground = at_line(GroundSet::new(ids_from(&t[skip + 1..], line)?), line)?;
            let m = if t[0] == "uniform" {
                Matroid::uniform(ground, num(t[1], line)?)
            } else {
                Matroid::free(ground)
            };
            Ok((m, line))
        }
        "graphic" => {
            need(&t, 3, line, "graphic")?;
            let vertices: usize = num(t[1], line)?;
            let count: usize = num(t[2], line)?;
            let mut edges = Vec::with_capacity(count);
            let mut last = line;
            for _ in 0..count {
                let (line, t) = r.next()?;
                need(&t, 2, line, "graphic edge")?;
                edges.push((num(t[0], line)?, num(t[1], line)?));
                last = line;
            }
            Ok((at_line(Matroid::graphic(vertices, edges), last)?, last))
        }
        "partition" => {
            if t.len() < 2 {
                return Err(Error::Parse {
                    line,
                    msg: "partition block is missing its ground count".into(),
                });
            }
            let count: usize = num(t[1], line)?;
            need(&t, 3 + count, line, "partition")?;
            let ground = at_line(GroundSet::new(ids_from(&t[2..2 + count], line)?), line)?;
            let part_count: usize = num(t[2 + count], line)?;
            let mut parts = Vec::with_capacity(part_count);
            let mut last = line;
            for _ in 0..part_count {
                let (line, t) = r.next()?;
                if t.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "partition part needs a cap and a size".into(),
                    });
                }
                let cap: u64 = num(t[0], line)?;
                let size: usize = num(t[1], line)?;
                need(&t, 2 + size, line, "partition part")?;
                parts.push((ids_from(&t[2..], line)?, cap));
                last = line;
            }
            Ok((at_line(Matroid::partition(ground, parts), last)?, last))
        }
        "directsum" => {
            need(&t, 2, line, "directsum")?;
            let count: usize = num(t[1], line)?;
            let mut children = Vec::with_capacity(count);
            let mut last = line;
            for _ in 0..count {
                let (child, l) = parse_matroid(r)?;
                children.push(child);
                last = l;
            }
            Ok((at_line(Matroid::direct_sum(children), last)?, last))
        }
        "restriction" => {
            if t.len() < 2 {
                return Err(Error::Parse {
                    line,
                    msg: "restriction block is missing its ground count".into(),
                });
            }
            let count: usize = num(t[1], line)?;
            need(&t, 2 + count, line, "restriction")?;
            let allowed = at_line(GroundSet::new(ids_from(&t[2..], line)?), line)?;
            let (child, last) = parse_matroid(r)?;
            Ok((at_line(Matroid::restriction(child, allowed), last)?, last))
        }
        "copy" => {
            if t.len() < 2 {
                return Err(Error::Parse {
                    line,
                    msg: "copy block is missing its pair count".into(),
                });
            }
            let count: usize = num(t[1], line)?;
            need(&t, 2 + 2 * count, line, "copy")?;
            let mut map = Vec::with_capacity(count);
            for pair in t[2..].chunks(2) {
                map.push((num(pair[0], line)?, num(pair[1], line)?));
            }
            let (child, last) = parse_matroid(r)?;
            Ok((at_line(Matroid::copy(child, map), last)?, last))
        }
        other => Err(Error::Parse {
            line,
            msg: format!("unknown matroid kind `{other}`"),
        }),
    }
}

pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut r = Reader::new(text);
    let (line, header) = r.next()?;
    need(&header, 2, line, "header")?;
    if header != ["v1", "solution"] {
        return Err(Error::Parse {
            line,
            msg: "expected a `v1 solution` header".into(),
        });
    }
    let (line, counts) = r.next()?;
    need(&counts, 2, line, "solution counts")?;
    let count: usize = num(counts[0], line)?;
    let weight: Weight = num(counts[1], line)?;
    let mut ids = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, t) = r.next()?;
        need(&t, 1, line, "solution id")?;
        ids.push(num(t[0], line)?);
    }
    r.finish()?;
    Ok(Solution { ids, weight })
}

pub fn parse_mapping(text: &str) -> Result<Mapping> {
    let mut r = Reader::new(text);
    let (line, header) = r.next()?;
    need(&header, 2, line, "header")?;
    if header != ["v1", "mapping"] {
        return Err(Error::Parse {
            line,
            msg: "expected a `v1 mapping` header".into(),
        });
    }
    let (line, t) = r.next()?;
    need(&t, 3, line, "mapping counts")?;
    let from = t[0].to_string();
    let to = t[1].to_string();
    let count: usize = num(t[2], line)?;
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, t) = r.next()?;
        need(&t, 2, line, "mapping row")?;
        rows.push((num(t[0], line)?, num(t[1], line)?));
    }
    r.finish()?;
    Ok(Mapping { from, to, rows })
}
