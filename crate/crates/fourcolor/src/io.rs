//! Parsers and emitters for the toolkit's text formats: embedded graphs,
//! configuration files, rules files and presentation scripts. All formats
//! are line-based UTF-8 with `#` comments; all numbers are integers
//! (charges in tenths).

use std::path::Path;

use crate::config::{free_completion, validate_configuration, Configuration};
use crate::graph::RotationGraph;
use crate::rules::{rule_as_parts, validate_rule, DischargingRule};
use crate::script::{HubcapTriplet, LineOp, PresentationScript, ScriptLine};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}:{line}: {msg}")]
    Syntax { path: String, line: usize, msg: String },
    #[error("{path}: record {record}: {msg}")]
    Invalid { path: String, record: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn syntax(path: &str, line: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax { path: path.to_string(), line, msg: msg.into() }
}

/// Non-comment lines with their 1-based numbers.
fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

// ---------------------------------------------------------------------
// embedded-graph text format
// ---------------------------------------------------------------------

/// Parse `<id> : <n1> <n2> ... ;` lines into a rotation graph. Ids are
/// arbitrary distinct positive integers, compacted in sorted order.
pub fn parse_graph_str(text: &str, path: &str) -> Result<RotationGraph, IoError> {
    let mut rows: Vec<(usize, u64, Vec<u64>)> = Vec::new();
    for (ln, line) in logical_lines(text) {
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| syntax(path, ln, "expected trailing ';'"))?;
        let (head, tail) = body
            .split_once(':')
            .ok_or_else(|| syntax(path, ln, "expected '<id> : <neighbors> ;'"))?;
        let id: u64 = head
            .trim()
            .parse()
            .map_err(|_| syntax(path, ln, "vertex id must be a positive integer"))?;
        if id == 0 {
            return Err(syntax(path, ln, "vertex ids start at 1"));
        }
        let mut nbrs = Vec::new();
        for tok in tail.split_whitespace() {
            let n: u64 = tok
                .parse()
                .map_err(|_| syntax(path, ln, format!("bad neighbor {tok:?}")))?;
            nbrs.push(n);
        }
        rows.push((ln, id, nbrs));
    }
    let mut ids: Vec<u64> = rows.iter().map(|r| r.1).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != rows.len() {
        return Err(syntax(path, rows.first().map(|r| r.0).unwrap_or(0), "duplicate vertex id"));
    }
    let index = |id: u64| ids.binary_search(&id).ok();
    let mut rot = vec![Vec::new(); ids.len()];
    for (ln, id, nbrs) in rows {
        let v = index(id).unwrap();
        let mut list = Vec::with_capacity(nbrs.len());
        for n in nbrs {
            let w = index(n).ok_or_else(|| syntax(path, ln, format!("neighbor {n} is not a vertex")))?;
            list.push(w);
        }
        rot[v] = list;
    }
    Ok(RotationGraph::new(rot))
}

pub fn parse_graph(path: impl AsRef<Path>) -> Result<RotationGraph, IoError> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p)?;
    parse_graph_str(&text, &p.display().to_string())
}

pub fn emit_graph(g: &RotationGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(&format!("{} :", v + 1));
        for &w in g.neighbors(v) {
            out.push_str(&format!(" {}", w + 1));
        }
        out.push_str(" ;\n");
    }
    out
}

// ---------------------------------------------------------------------
// configuration files
// ---------------------------------------------------------------------

/// Parse a configuration file. Each record stores the free completion with
/// ring vertices 1..R clockwise and internal vertices R+1..R+N; the
/// configuration itself is the induced core with gamma read from the
/// completion degrees. The record is rejected unless the stated completion
/// matches the canonical one up to a rotation of the ring labels.
pub fn parse_configs(path: impl AsRef<Path>) -> Result<Vec<Configuration>, IoError> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p)?;
    parse_configs_str(&text, &p.display().to_string())
}

pub fn parse_configs_str(text: &str, path: &str) -> Result<Vec<Configuration>, IoError> {
    let mut out: Vec<Configuration> = Vec::new();
    let mut lines = logical_lines(text).peekable();
    while let Some(&(ln, line)) = lines.peek() {
        if !line.starts_with("config ") {
            return Err(syntax(path, ln, "expected 'config <name>'"));
        }
        let record = parse_one_config(&mut lines, path)?;
        if out.iter().any(|k| k.name == record.name) {
            return Err(IoError::Invalid {
                path: path.into(),
                record: record.name,
                msg: "duplicate configuration name".into(),
            });
        }
        out.push(record);
    }
    Ok(out)
}

fn parse_one_config<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    path: &str,
) -> Result<Configuration, IoError> {
    let (ln0, header) = lines.next().unwrap();
    let name = header.strip_prefix("config ").unwrap().trim().to_string();
    if name.is_empty() {
        return Err(syntax(path, ln0, "configuration name missing"));
    }
    let invalid = |msg: String| IoError::Invalid { path: path.into(), record: name.clone(), msg };
    let (ln1, ring_line) = lines.next().ok_or_else(|| syntax(path, ln0, "unexpected end of record"))?;
    let ring: usize = ring_line
        .strip_prefix("ring ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| syntax(path, ln1, "expected 'ring <R>'"))?;
    let (ln2, int_line) = lines.next().ok_or_else(|| syntax(path, ln1, "unexpected end of record"))?;
    let internal: usize = int_line
        .strip_prefix("internal ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| syntax(path, ln2, "expected 'internal <N>'"))?;
    if ring < 2 || internal == 0 {
        return Err(invalid(format!("ring {ring} / internal {internal} out of range")));
    }
    // internal vertex rows, file ids R+1..R+N
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); internal];
    let mut seen = vec![false; internal];
    for _ in 0..internal {
        let (ln, line) = lines.next().ok_or_else(|| syntax(path, ln2, "unexpected end of record"))?;
        let body = line
            .strip_suffix(';')
            .ok_or_else(|| syntax(path, ln, "expected '<id> : <neighbors> ;'"))?;
        let (head, tail) = body
            .split_once(':')
            .ok_or_else(|| syntax(path, ln, "expected '<id> : <neighbors> ;'"))?;
        let id: usize = head
            .trim()
            .parse()
            .map_err(|_| syntax(path, ln, "bad vertex id"))?;
        if id <= ring || id > ring + internal {
            return Err(syntax(path, ln, format!("internal ids run from {} to {}", ring + 1, ring + internal)));
        }
        if seen[id - ring - 1] {
            return Err(syntax(path, ln, format!("vertex {id} listed twice")));
        }
        seen[id - ring - 1] = true;
        let mut nbrs = Vec::new();
        for tok in tail.split_whitespace() {
            let n: usize = tok.parse().map_err(|_| syntax(path, ln, format!("bad neighbor {tok:?}")))?;
            if n == 0 || n > ring + internal {
                return Err(syntax(path, ln, format!("neighbor {n} out of range")));
            }
            nbrs.push(n);
        }
        rows[id - ring - 1] = nbrs;
    }
    let (lne, endline) = lines.next().ok_or_else(|| syntax(path, ln2, "missing 'end'"))?;
    if endline != "end" {
        return Err(syntax(path, lne, "expected 'end'"));
    }
    // Core graph: strip ring ids, keeping rotation order; gamma is the full
    // completion degree.
    let mut rot = Vec::with_capacity(internal);
    let mut gamma = Vec::with_capacity(internal);
    for r in &rows {
        gamma.push(r.len() as u32);
        rot.push(r.iter().filter(|&&n| n > ring).map(|&n| n - ring - 1).collect::<Vec<usize>>());
    }
    let k = Configuration::new(name.clone(), RotationGraph::new(rot), gamma);
    let report = validate_configuration(&k);
    if !report.is_valid() {
        return Err(invalid(format!("{:?}", report.violations)));
    }
    let s = free_completion(&k).map_err(|e| invalid(e.to_string()))?;
    if s.ring_len() != ring {
        return Err(invalid(format!("stated ring {ring} but completion has ring {}", s.ring_len())));
    }
    // The file's ring labels must be some rotation of the canonical ones.
    let matches_offset = |off: usize| -> bool {
        (0..internal).all(|i| {
            let mapped: Vec<usize> = s
                .graph
                .neighbors(s.core_map[i])
                .iter()
                .map(|&c| if c < ring { (c + off) % ring + 1 } else { c + 1 })
                .collect();
            cyclic_equal(&mapped, &rows[i])
        })
    };
    if !(0..ring).any(matches_offset) {
        return Err(invalid(
            "ring numbering is not a clockwise rotation of the free completion".into(),
        ));
    }
    Ok(k)
}

fn cyclic_equal(a: &[usize], b: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    if n == 0 {
        return true;
    }
    (0..n).any(|s| (0..n).all(|i| a[i] == b[(s + i) % n]))
}

pub fn emit_configs(configs: &[Configuration]) -> Result<String, crate::config::ConfigError> {
    let mut out = String::new();
    for k in configs {
        let s = free_completion(k)?;
        let ring = s.ring_len();
        out.push_str(&format!("config {}\n", k.name));
        out.push_str(&format!("ring {ring}\n"));
        out.push_str(&format!("internal {}\n", s.core_len()));
        for (i, &cv) in s.core_map.iter().enumerate() {
            out.push_str(&format!("{} :", ring + 1 + i));
            for &w in s.graph.neighbors(cv) {
                out.push_str(&format!(" {}", w + 1));
            }
            out.push_str(" ;\n");
        }
        out.push_str("end\n");
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// rules files
// ---------------------------------------------------------------------

#[derive(Debug, Default)]
pub struct RuleFile {
    pub rules: Vec<DischargingRule>,
    pub warnings: Vec<String>,
}

pub fn parse_rules(path: impl AsRef<Path>) -> Result<RuleFile, IoError> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p)?;
    parse_rules_str(&text, &p.display().to_string())
}

pub fn parse_rules_str(text: &str, path: &str) -> Result<RuleFile, IoError> {
    let mut out = RuleFile::default();
    let mut lines = logical_lines(text).peekable();
    while let Some(&(ln, line)) = lines.peek() {
        if !line.starts_with("rule ") {
            return Err(syntax(path, ln, "expected 'rule <id>'"));
        }
        let rule = parse_one_rule(&mut lines, path, &mut out.warnings)?;
        if out.rules.iter().any(|r| r.id == rule.id) {
            return Err(IoError::Invalid {
                path: path.into(),
                record: rule.id,
                msg: "duplicate rule id".into(),
            });
        }
        out.rules.push(rule);
    }
    Ok(out)
}

fn parse_one_rule<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, &'a str)>>,
    path: &str,
    warnings: &mut Vec<String>,
) -> Result<DischargingRule, IoError> {
    let (ln0, header) = lines.next().unwrap();
    let id = header.strip_prefix("rule ").unwrap().trim().to_string();
    if id.is_empty() {
        return Err(syntax(path, ln0, "rule id missing"));
    }
    let invalid = |msg: String| IoError::Invalid { path: path.into(), record: id.clone(), msg };
    let mut q: Option<i64> = None;
    let mut bounds: Vec<(usize, u32, Option<u32>)> = Vec::new();
    let mut adj: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut endpoints: Option<(usize, usize)> = None;
    loop {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(path, ln0, "unexpected end of rule record"))?;
        if line == "end" {
            break;
        }
        if let Some(rest) = line.strip_prefix("q ") {
            let val: i64 = rest.trim().parse().map_err(|_| syntax(path, ln, "bad charge"))?;
            if !(val == 1 || val == 2) {
                warnings.push(format!("rule {id}: charge {val}/10 outside the usual {{1, 2}}"));
            }
            q = Some(val);
        } else if let Some(rest) = line.strip_prefix("vertex ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(syntax(path, ln, "expected 'vertex <v> <lo> <hi|*>'"));
            }
            let v: usize = toks[0].parse().map_err(|_| syntax(path, ln, "bad vertex id"))?;
            let lo: u32 = toks[1].parse().map_err(|_| syntax(path, ln, "bad lower bound"))?;
            let hi = if toks[2] == "*" {
                None
            } else {
                Some(toks[2].parse::<u32>().map_err(|_| syntax(path, ln, "bad upper bound"))?)
            };
            bounds.push((v, lo, hi));
        } else if let Some(rest) = line.strip_prefix("adj ") {
            let body = rest.strip_suffix(';').ok_or_else(|| syntax(path, ln, "expected ';'"))?;
            let (head, tail) = body.split_once(':').ok_or_else(|| syntax(path, ln, "expected ':'"))?;
            let v: usize = head.trim().parse().map_err(|_| syntax(path, ln, "bad vertex id"))?;
            let nbrs: Result<Vec<usize>, _> = tail.split_whitespace().map(|t| t.parse()).collect();
            adj.push((v, nbrs.map_err(|_| syntax(path, ln, "bad neighbor"))?));
        } else if let Some(rest) = line.strip_prefix("source ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 || toks[1] != "sink" {
                return Err(syntax(path, ln, "expected 'source <s> sink <t>'"));
            }
            let s: usize = toks[0].parse().map_err(|_| syntax(path, ln, "bad source"))?;
            let t: usize = toks[2].parse().map_err(|_| syntax(path, ln, "bad sink"))?;
            endpoints = Some((s, t));
        } else {
            return Err(syntax(path, ln, format!("unrecognized rule line {line:?}")));
        }
    }
    let q = q.ok_or_else(|| invalid("missing charge line".into()))?;
    let (source, sink) = endpoints.ok_or_else(|| invalid("missing source/sink line".into()))?;
    let n = adj.len();
    if n == 0 || bounds.len() != n {
        return Err(invalid("vertex bounds and adjacency rows must cover the same vertices".into()));
    }
    let to_index = |v: usize| -> Result<usize, IoError> {
        if v >= 1 && v <= n {
            Ok(v - 1)
        } else {
            Err(invalid(format!("vertex {v} out of range 1..={n}")))
        }
    };
    let mut lo = vec![0u32; n];
    let mut hi = vec![None; n];
    let mut seen = vec![false; n];
    for (v, l, h) in bounds {
        let i = to_index(v)?;
        if seen[i] {
            return Err(invalid(format!("vertex {v} bounded twice")));
        }
        seen[i] = true;
        lo[i] = l;
        hi[i] = h;
    }
    let mut rot = vec![Vec::new(); n];
    let mut seen_adj = vec![false; n];
    for (v, nbrs) in adj {
        let i = to_index(v)?;
        if seen_adj[i] {
            return Err(invalid(format!("vertex {v} listed twice")));
        }
        seen_adj[i] = true;
        rot[i] = nbrs.into_iter().map(to_index).collect::<Result<_, _>>()?;
    }
    if !seen.iter().all(|&b| b) || !seen_adj.iter().all(|&b| b) {
        return Err(invalid("every vertex needs one bounds line and one adjacency line".into()));
    }
    let rule = DischargingRule {
        id: id.clone(),
        q,
        graph: RotationGraph::new(rot),
        source: to_index(source)?,
        sink: to_index(sink)?,
        lo,
        hi,
    };
    validate_rule(&rule).map_err(|e| invalid(e.to_string()))?;
    for d in 5..=11 {
        rule_as_parts(&rule, d).map_err(|e| invalid(e.to_string()))?;
    }
    Ok(rule)
}

pub fn emit_rules(rules: &[DischargingRule]) -> String {
    let mut out = String::new();
    for r in rules {
        out.push_str(&format!("rule {}\n", r.id));
        out.push_str(&format!("q {}\n", r.q));
        for v in 0..r.graph.vertex_count() {
            match r.hi[v] {
                Some(h) => out.push_str(&format!("vertex {} {} {}\n", v + 1, r.lo[v], h)),
                None => out.push_str(&format!("vertex {} {} *\n", v + 1, r.lo[v])),
            }
        }
        for v in 0..r.graph.vertex_count() {
            out.push_str(&format!("adj {} :", v + 1));
            for &w in r.graph.neighbors(v) {
                out.push_str(&format!(" {}", w + 1));
            }
            out.push_str(" ;\n");
        }
        out.push_str(&format!("source {} sink {}\n", r.source + 1, r.sink + 1));
        out.push_str("end\n");
    }
    out
}

// ---------------------------------------------------------------------
// presentation files
// ---------------------------------------------------------------------

pub fn parse_presentation(path: impl AsRef<Path>) -> Result<PresentationScript, IoError> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p)?;
    parse_presentation_str(&text, &p.display().to_string())
}

pub fn parse_presentation_str(text: &str, path: &str) -> Result<PresentationScript, IoError> {
    let mut lines_out = Vec::new();
    let mut stack_size = 1usize;
    for (ln, line) in logical_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let depth_tok = toks
            .first()
            .and_then(|t| t.strip_prefix('L'))
            .ok_or_else(|| syntax(path, ln, "line must start with 'L<depth>'"))?;
        let depth: usize = depth_tok.parse().map_err(|_| syntax(path, ln, "bad depth"))?;
        if stack_size == 0 {
            return Err(syntax(path, ln, "instructions after the stack emptied"));
        }
        if depth != stack_size {
            return Err(syntax(
                path,
                ln,
                format!("depth {depth} but the stack will hold {stack_size} parts"),
            ));
        }
        let op = match toks.get(1) {
            Some(&"C") => {
                let m: usize = toks
                    .get(2)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax(path, ln, "expected 'C <m> <n>'"))?;
                let nn: i32 = toks
                    .get(3)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax(path, ln, "expected 'C <m> <n>'"))?;
                if toks.len() != 4 {
                    return Err(syntax(path, ln, "trailing tokens on C line"));
                }
                stack_size += 1;
                LineOp::Condition { m, n: nn }
            }
            Some(&"R") => {
                if toks.len() != 2 {
                    return Err(syntax(path, ln, "trailing tokens on R line"));
                }
                stack_size -= 1;
                LineOp::Reduce
            }
            Some(&"H") => {
                let rest = line.splitn(2, 'H').nth(1).unwrap_or("");
                let triplets = parse_hubcap(rest, path, ln)?;
                stack_size -= 1;
                LineOp::Hubcap(triplets)
            }
            Some(&"S") => {
                let reference: usize = toks
                    .get(2)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax(path, ln, "expected 'S <index> <rotation> [M]'"))?;
                let rotation: usize = toks
                    .get(3)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| syntax(path, ln, "expected 'S <index> <rotation> [M]'"))?;
                let mirror = match toks.get(4) {
                    None => false,
                    Some(&"M") => true,
                    Some(other) => return Err(syntax(path, ln, format!("unexpected token {other:?}"))),
                };
                if toks.len() > 5 {
                    return Err(syntax(path, ln, "trailing tokens on S line"));
                }
                stack_size -= 1;
                LineOp::SymmetryRef { reference, rotation, mirror }
            }
            other => return Err(syntax(path, ln, format!("unknown line kind {other:?}"))),
        };
        lines_out.push(ScriptLine { depth, op });
    }
    if stack_size != 0 {
        return Err(syntax(
            path,
            text.lines().count(),
            format!("script leaves {stack_size} parts on the stack"),
        ));
    }
    Ok(PresentationScript { lines: lines_out })
}

fn parse_hubcap(rest: &str, path: &str, ln: usize) -> Result<Vec<HubcapTriplet>, IoError> {
    let mut out = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax(path, ln, "expected '(<u> <v> <q>)'"))?;
        let (body, tail) = open
            .split_once(')')
            .ok_or_else(|| syntax(path, ln, "unclosed hubcap triplet"))?;
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(syntax(path, ln, "hubcap triplet needs three numbers"));
        }
        let u: usize = toks[0].parse().map_err(|_| syntax(path, ln, "bad spoke"))?;
        let v: usize = toks[1].parse().map_err(|_| syntax(path, ln, "bad spoke"))?;
        let q: i64 = toks[2].parse().map_err(|_| syntax(path, ln, "bad charge"))?;
        if u == 0 || v == 0 {
            return Err(syntax(path, ln, "spokes are numbered from 1"));
        }
        out.push(HubcapTriplet { u: u - 1, v: v - 1, q });
        rest = tail.trim();
    }
    if out.is_empty() {
        return Err(syntax(path, ln, "hubcap line without triplets"));
    }
    Ok(out)
}

pub fn emit_presentation(script: &PresentationScript) -> String {
    let mut out = String::new();
    for line in &script.lines {
        match &line.op {
            LineOp::Condition { m, n } => out.push_str(&format!("L{} C {} {}\n", line.depth, m, n)),
            LineOp::Reduce => out.push_str(&format!("L{} R\n", line.depth)),
            LineOp::Hubcap(ts) => {
                out.push_str(&format!("L{} H", line.depth));
                for t in ts {
                    out.push_str(&format!(" ({} {} {})", t.u + 1, t.v + 1, t.q));
                }
                out.push('\n');
            }
            LineOp::SymmetryRef { reference, rotation, mirror } => {
                out.push_str(&format!("L{} S {} {}", line.depth, reference, rotation));
                if *mirror {
                    out.push_str(" M");
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::known;

    const BIRKHOFF_RECORD: &str = "\
config birkhoff
ring 6
internal 4
7 : 8 9 6 1 2 ;
8 : 7 2 3 10 9 ;
9 : 7 8 10 5 6 ;
10 : 8 3 4 5 9 ;
end
";

    #[test]
    fn sample_birkhoff_record_parses() {
        let configs = parse_configs_str(BIRKHOFF_RECORD, "sample").unwrap();
        assert_eq!(configs.len(), 1);
        let k = &configs[0];
        assert_eq!(k.name, "birkhoff");
        assert_eq!(crate::config::ring_size(k).unwrap(), 6);
        assert_eq!(k.vertex_count(), 4);
        assert!(k.gamma.iter().all(|&g| g == 5));
    }

    #[test]
    fn emit_then_parse_is_stable() {
        let configs = vec![known::birkhoff(), known::five_wheel_core(), known::five_five_edge()];
        let text = emit_configs(&configs).unwrap();
        let back = parse_configs_str(&text, "mem").unwrap();
        assert_eq!(back.len(), 3);
        let again = emit_configs(&back).unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn duplicate_names_rejected() {
        let text = format!("{BIRKHOFF_RECORD}{BIRKHOFF_RECORD}");
        assert!(matches!(
            parse_configs_str(&text, "dup"),
            Err(IoError::Invalid { .. })
        ));
    }

    #[test]
    fn non_triangular_internal_face_is_rejected_by_name() {
        // Break the record by swapping two neighbors of vertex 8.
        let broken = BIRKHOFF_RECORD.replace("8 : 7 2 3 10 9 ;", "8 : 7 2 3 9 10 ;");
        match parse_configs_str(&broken, "broken") {
            Err(IoError::Invalid { record, .. }) => assert_eq!(record, "birkhoff"),
            other => panic!("expected invalid record, got {other:?}"),
        }
    }

    #[test]
    fn ring_rotation_offsets_are_accepted() {
        // Shift every ring label by 2 (1..6 -> 3..6,1,2); still clockwise.
        let shifted = "\
config birkhoff
ring 6
internal 4
7 : 8 9 2 3 4 ;
8 : 7 4 5 10 9 ;
9 : 7 8 10 1 2 ;
10 : 8 5 6 1 9 ;
end
";
        let configs = parse_configs_str(shifted, "shifted").unwrap();
        assert_eq!(configs.len(), 1);
    }

    #[test]
    fn rules_round_trip_and_warn_on_unusual_charge() {
        let text = "\
rule triangle
q 4
vertex 1 5 *
vertex 2 5 *
vertex 3 5 11
adj 1 : 2 3 ;
adj 2 : 3 1 ;
adj 3 : 1 2 ;
source 1 sink 2
end
";
        let file = parse_rules_str(text, "mem").unwrap();
        assert_eq!(file.rules.len(), 1);
        assert_eq!(file.warnings.len(), 1);
        let emitted = emit_rules(&file.rules);
        let back = parse_rules_str(&emitted, "mem2").unwrap();
        assert_eq!(back.rules, file.rules);
    }

    #[test]
    fn rule_missing_sink_is_syntax_error() {
        let text = "\
rule broken
q 1
vertex 1 5 *
vertex 2 5 *
adj 1 : 2 ;
adj 2 : 1 ;
end
";
        assert!(matches!(parse_rules_str(text, "mem"), Err(IoError::Invalid { .. })));
    }

    #[test]
    fn presentation_round_trip_and_depth_check() {
        let text = "\
# toy script
L1 C 1 6
L2 H (1 1 -4) (2 2 -4) (3 3 -4) (4 4 -4) (5 5 -4)
L1 R
";
        let script = parse_presentation_str(text, "mem").unwrap();
        assert_eq!(script.lines.len(), 3);
        let emitted = emit_presentation(&script);
        let back = parse_presentation_str(&emitted, "mem2").unwrap();
        assert_eq!(back, script);
        // depth error
        let bad = text.replace("L1 R", "L2 R");
        assert!(matches!(parse_presentation_str(&bad, "mem"), Err(IoError::Syntax { .. })));
        // unknown kind
        let bad2 = text.replace("L1 R", "L1 Q");
        assert!(matches!(parse_presentation_str(&bad2, "mem"), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn graph_format_round_trips() {
        let g = crate::graph::shapes::octahedron();
        let text = emit_graph(&g);
        let back = parse_graph_str(&text, "mem").unwrap();
        assert_eq!(back, RotationGraph::new(g.rotations().to_vec()));
    }
}
