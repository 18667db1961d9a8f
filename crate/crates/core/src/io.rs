//! Text formats: graphs, colourings, positive CNF, Matrix Market, CSV
//! and name sidecars. Vertices are 1-based on disk and 0-based in memory;
//! colours are 0-based in both.

use std::path::Path;

use crate::colouring::{Colouring, PartialColouring};
use crate::constructions::cnf::PositiveCnf;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::hessian::{DenseMatrix, SparsityPattern};

fn parse_err(source: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        source_name: source.to_string(),
        line,
        message: message.into(),
    }
}

/// Non-blank lines that are not comments, with 1-based line numbers.
fn content_lines<'a>(text: &'a str, comment: &'a [&'a str]) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(t) if comment.iter().any(|c| t.starts_with(c)) => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn num<T: std::str::FromStr>(tok: &str, source: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(source, line, format!("expected {what}, found {tok:?}")))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// `p edge <n> <m>` followed by `e <u> <v>` lines; `c` starts a comment.
pub fn parse_graph(text: &str, source: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, toks) in content_lines(text, &["c"]) {
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(source, line, "second problem line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(parse_err(source, line, "expected \"p edge <n> <m>\""));
                }
                header = Some((
                    num(toks[2], source, line, "vertex count")?,
                    num(toks[3], source, line, "edge count")?,
                ));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(source, line, "edge before problem line"));
                };
                if toks.len() != 3 {
                    return Err(parse_err(source, line, "expected \"e <u> <v>\""));
                }
                let u: usize = num(toks[1], source, line, "vertex")?;
                let v: usize = num(toks[2], source, line, "vertex")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(source, line, format!("vertex out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(source, line, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(source, line, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(source, 0, "missing problem line"));
    };
    if edges.len() != m {
        return Err(parse_err(
            source,
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

/// `<vertex> <colour>` lines covering every vertex exactly once. The
/// palette size is `k` if given, else one more than the largest colour.
pub fn parse_colouring(text: &str, n: usize, k: Option<usize>, source: &str) -> Result<Colouring> {
    let pairs = parse_assignments(text, n, source)?;
    let mut col = vec![None; n];
    for (line, v, c) in pairs {
        if col[v].replace(c).is_some() {
            return Err(parse_err(source, line, format!("vertex {} coloured twice", v + 1)));
        }
    }
    if let Some(v) = col.iter().position(Option::is_none) {
        return Err(parse_err(source, 0, format!("vertex {} has no colour", v + 1)));
    }
    let col: Vec<usize> = col.into_iter().map(Option::unwrap).collect();
    match k {
        Some(k) => Colouring::new(col, k),
        None => Ok(Colouring::from_colours(col)),
    }
}

/// Same format as a colouring, but vertices may be missing.
pub fn parse_partial_colouring(text: &str, n: usize, k: usize, source: &str) -> Result<PartialColouring> {
    let mut p = PartialColouring::uncoloured(n, k);
    for (line, v, c) in parse_assignments(text, n, source)? {
        if p.get(v).is_some() {
            return Err(parse_err(source, line, format!("vertex {} coloured twice", v + 1)));
        }
        p.set(v, c).map_err(|e| parse_err(source, line, e.to_string()))?;
    }
    Ok(p)
}

fn parse_assignments(text: &str, n: usize, source: &str) -> Result<Vec<(usize, VertexId, usize)>> {
    content_lines(text, &["c", "#"])
        .map(|(line, toks)| {
            if toks.len() != 2 {
                return Err(parse_err(source, line, "expected \"<vertex> <colour>\""));
            }
            let v: usize = num(toks[0], source, line, "vertex")?;
            let c: usize = num(toks[1], source, line, "colour")?;
            if v == 0 || v > n {
                return Err(parse_err(source, line, format!("vertex out of range 1..={n}")));
            }
            Ok((line, v - 1, c))
        })
        .collect()
}

pub fn write_colouring(c: &Colouring) -> String {
    c.as_slice()
        .iter()
        .enumerate()
        .map(|(v, col)| format!("{} {}\n", v + 1, col))
        .collect()
}

/// DIMACS CNF restricted to positive literals, three per clause.
pub fn parse_cnf(text: &str, source: &str) -> Result<PositiveCnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for (line, toks) in content_lines(text, &["c", "%"]) {
        if toks[0] == "p" {
            if toks.len() != 4 || toks[1] != "cnf" {
                return Err(parse_err(source, line, "expected \"p cnf <vars> <clauses>\""));
            }
            header = Some((
                num(toks[2], source, line, "variable count")?,
                num(toks[3], source, line, "clause count")?,
            ));
            continue;
        }
        let Some((nv, _)) = header else {
            return Err(parse_err(source, line, "clause before problem line"));
        };
        for tok in toks {
            let lit: i64 = num(tok, source, line, "literal")?;
            if lit == 0 {
                if pending.len() != 3 {
                    return Err(parse_err(
                        source,
                        line,
                        format!("clause has {} literals, expected 3", pending.len()),
                    ));
                }
                let vars = [pending[0].1, pending[1].1, pending[2].1];
                if vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2] {
                    return Err(parse_err(source, line, "clause repeats a variable"));
                }
                clauses.push(vars);
                pending.clear();
            } else if lit < 0 {
                return Err(parse_err(source, line, format!("negated literal {lit}")));
            } else if lit as usize > nv {
                return Err(parse_err(source, line, format!("variable {lit} out of range 1..={nv}")));
            } else {
                pending.push((line, lit as usize - 1));
            }
        }
    }
    let Some((nv, m)) = header else {
        return Err(parse_err(source, 0, "missing problem line"));
    };
    if let Some(&(line, _)) = pending.first() {
        return Err(parse_err(source, line, "clause not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(parse_err(
            source,
            0,
            format!("header announces {m} clauses, found {}", clauses.len()),
        ));
    }
    PositiveCnf::new(nv, clauses)
}

pub fn write_cnf(f: &PositiveCnf) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        s.push_str(&format!("{} {} {} 0\n", c[0] + 1, c[1] + 1, c[2] + 1));
    }
    s
}

/// Matrix Market coordinate file with `real`, `integer` or `pattern`
/// values. `symmetric` files list one triangle; `general` files must be
/// structurally symmetric. Values are returned for non-pattern files.
pub fn parse_matrix_market(text: &str, source: &str) -> Result<(SparsityPattern, Option<DenseMatrix<f64>>)> {
    let mut lines = text.lines().enumerate();
    let (_, banner) = lines.next().ok_or_else(|| parse_err(source, 1, "empty file"))?;
    let b: Vec<String> = banner.split_whitespace().map(str::to_lowercase).collect();
    if b.len() != 5 || b[0] != "%%matrixmarket" || b[1] != "matrix" || b[2] != "coordinate" {
        return Err(parse_err(
            source,
            1,
            "expected \"%%MatrixMarket matrix coordinate <field> <symmetry>\"",
        ));
    }
    let pattern = match b[3].as_str() {
        "pattern" => true,
        "real" | "integer" => false,
        other => return Err(parse_err(source, 1, format!("unsupported field {other:?}"))),
    };
    let symmetric = match b[4].as_str() {
        "symmetric" => true,
        "general" => false,
        other => return Err(parse_err(source, 1, format!("unsupported symmetry {other:?}"))),
    };
    let mut size: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, usize, f64)> = Vec::new();
    for (i, l) in lines {
        let line = i + 1;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.is_empty() || toks[0].starts_with('%') {
            continue;
        }
        if size.is_none() {
            if toks.len() != 3 {
                return Err(parse_err(source, line, "expected \"<rows> <cols> <entries>\""));
            }
            let r: usize = num(toks[0], source, line, "row count")?;
            let c: usize = num(toks[1], source, line, "column count")?;
            let nnz: usize = num(toks[2], source, line, "entry count")?;
            if r != c {
                return Err(parse_err(source, line, "matrix is not square"));
            }
            size = Some((r, nnz));
            continue;
        }
        let (n, _) = size.unwrap();
        let want = if pattern { 2 } else { 3 };
        if toks.len() != want {
            return Err(parse_err(source, line, format!("expected {want} fields")));
        }
        let r: usize = num(toks[0], source, line, "row")?;
        let c: usize = num(toks[1], source, line, "column")?;
        if r == 0 || c == 0 || r > n || c > n {
            return Err(parse_err(source, line, format!("index out of range 1..={n}")));
        }
        let x = if pattern {
            1.0
        } else {
            num(toks[2], source, line, "value")?
        };
        entries.push((r - 1, c - 1, x));
    }
    let Some((n, nnz)) = size else {
        return Err(parse_err(source, 0, "missing size line"));
    };
    if entries.len() != nnz {
        return Err(parse_err(
            source,
            0,
            format!("size line announces {nnz} entries, found {}", entries.len()),
        ));
    }
    let pairs: Vec<(usize, usize)> = entries.iter().map(|&(r, c, _)| (r, c)).collect();
    let p = if symmetric {
        SparsityPattern::from_pairs(n, &pairs)?
    } else {
        SparsityPattern::from_entries(n, &pairs)?
    };
    if pattern {
        return Ok((p, None));
    }
    let mut h = DenseMatrix::zeros(n, n);
    for &(r, c, x) in &entries {
        h.set(r, c, x);
        if symmetric {
            h.set(c, r, x);
        }
    }
    if !h.is_symmetric() {
        return Err(parse_err(source, 0, "matrix values are not symmetric"));
    }
    Ok((p, Some(h)))
}

/// Lower triangle (including the diagonal) of a symmetric matrix.
pub fn write_matrix_market(p: &SparsityPattern, h: &DenseMatrix<f64>) -> String {
    let n = p.n();
    let mut body = Vec::new();
    for j in 0..n {
        for i in j..n {
            if (i == j || p.contains(i, j)) && h.get(i, j) != 0.0 {
                body.push(format!("{} {} {}", i + 1, j + 1, h.get(i, j)));
            }
        }
    }
    format!(
        "%%MatrixMarket matrix coordinate real symmetric\n{n} {n} {}\n{}\n",
        body.len(),
        body.join("\n")
    )
}

/// Dense matrix as headerless CSV.
pub fn write_csv(m: &DenseMatrix<f64>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for i in 0..m.rows() {
        w.write_record(m.row(i).iter().map(|x| x.to_string()))
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn parse_csv(text: &str, source: &str) -> Result<DenseMatrix<f64>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| parse_err(source, i + 1, e.to_string()))?;
        let row = rec
            .iter()
            .map(|f| num(f, source, i + 1, "number"))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    DenseMatrix::from_rows(rows)
}

/// `<name> <vertex>` lines, vertex 1-based.
pub fn write_names(names: &[(String, VertexId)]) -> String {
    names.iter().map(|(s, v)| format!("{s} {}\n", v + 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const DART: &str = "c dart\np edge 5 6\ne 1 2\ne 2 3\ne 2 4\ne 2 5\ne 4 3\ne 5 3\n";

    #[test]
    fn graph_roundtrip() {
        let g = parse_graph(DART, "dart.gr").unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(parse_graph(&write_graph(&g), "x").unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        let e = parse_graph("p edge 3 1\ne 1 4\n", "g.gr").unwrap_err();
        assert_eq!(e.to_string(), "g.gr:2: vertex out of range 1..=3");
        assert!(parse_graph("e 1 2\n", "g").is_err());
        assert!(parse_graph("p edge 3 2\ne 1 2\n", "g").is_err());
        assert!(parse_graph("p edge 3 1\ne 2 2\n", "g").is_err());
        assert!(parse_graph("p edge 3 1\nx 1 2\n", "g").is_err());
    }

    #[test]
    fn colouring_roundtrip() {
        let c = Colouring::new(vec![1, 0, 1, 2, 2], 3).unwrap();
        assert_eq!(parse_colouring(&write_colouring(&c), 5, Some(3), "c").unwrap(), c);
        assert!(parse_colouring("1 0\n1 1\n", 2, None, "c").is_err());
        assert!(parse_colouring("1 0\n", 2, None, "c").is_err());
        assert!(parse_colouring("3 0\n", 2, None, "c").is_err());
        let p = parse_partial_colouring("2 1\n", 3, 3, "p").unwrap();
        assert_eq!(p.get(1), Some(1));
        assert_eq!(p.get(0), None);
    }

    #[test]
    fn cnf_parsing() {
        let f = parse_cnf("c example\np cnf 4 2\n1 2 3 0\n2 3\n4 0\n", "f.cnf").unwrap();
        assert_eq!(f.clauses(), &[[0, 1, 2], [1, 2, 3]]);
        assert_eq!(parse_cnf(&write_cnf(&f), "x").unwrap(), f);
        let e = parse_cnf("p cnf 3 1\n1 -2 3 0\n", "neg.cnf").unwrap_err();
        assert_eq!(e.to_string(), "neg.cnf:2: negated literal -2");
        assert!(parse_cnf("p cnf 3 1\n1 2 0\n", "x").is_err());
        assert!(parse_cnf("p cnf 3 1\n1 2 3\n", "x").is_err());
        assert!(parse_cnf("p cnf 3 1\n1 1 3 0\n", "x").is_err());
    }

    #[test]
    fn matrix_market() {
        let text =
            "%%MatrixMarket matrix coordinate real symmetric\n% tri\n3 3 5\n1 1 4\n2 1 -1\n2 2 4\n3 2 -1\n3 3 4\n";
        let (p, h) = parse_matrix_market(text, "t.mtx").unwrap();
        let h = h.unwrap();
        assert!(p.contains(0, 1) && p.contains(1, 0) && !p.contains(0, 2));
        assert_eq!(h.get(0, 1), -1.0);
        assert_eq!(h.get(1, 0), -1.0);
        let (p2, h2) = parse_matrix_market(&write_matrix_market(&p, &h), "x").unwrap();
        assert_eq!(p2, p);
        assert_eq!(h2.unwrap(), h);

        let pat = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n";
        assert!(parse_matrix_market(pat, "p").unwrap().1.is_none());
        let asym = "%%MatrixMarket matrix coordinate real general\n2 2 1\n2 1 1.0\n";
        assert!(parse_matrix_market(asym, "a").is_err());
        assert!(parse_matrix_market("%%MatrixMarket matrix array real general\n", "a").is_err());
    }

    #[test]
    fn csv_roundtrip() {
        let m = DenseMatrix::from_rows(vec![vec![1.5, -2.0], vec![0.0, 1e-3]]).unwrap();
        assert_eq!(parse_csv(&write_csv(&m).unwrap(), "m").unwrap(), m);
        assert!(parse_csv("1,x\n", "m").is_err());
    }
}
