//! Graphs encoding positive 3-CNF formulas, where 3-rs colourings
//! correspond to exactly-one-true assignments.
//!
//! Every variable `x_i` is a vertex. Clause `j` gets three vertices
//! `c_{j1}, c_{j2}, c_{j3}`, and `c_{jk}` is joined to the `k`-th variable
//! of the clause through a subdivision vertex `y_{ij}`. The three clause
//! vertices are joined in a cycle: in the basic variant each side
//! `c_{jk} c_{j,k+1}` is subdivided once by `b_{jk}`; in the girth variant
//! each side is a path of length `3s + 2` whose interior repeats
//! `p, q, a` `s` times before ending in `b_{jk}`, and every `a` carries a
//! pendant leaf.

use std::collections::BTreeMap;

use super::cnf::PositiveCnf;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetVariant {
    Basic,
    /// `s` must be even and at least 2.
    Girth(usize),
}

#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub variant: GadgetVariant,
    /// `x[i]`: vertex of variable `i`.
    pub x: Vec<VertexId>,
    /// `(i, j)`: subdivision vertex between `x_i` and clause `j`.
    pub y: BTreeMap<(usize, usize), VertexId>,
    /// `c[j][k]`: clause vertex attached to the `k`-th variable of clause `j`.
    pub c: Vec<[VertexId; 3]>,
    /// `b[j][k]`: last interior vertex on the side from `c_{jk}` to `c_{j,k+1}`.
    pub b: Vec<[VertexId; 3]>,
    /// `sides[j][k]`: interior of the side from `c_{jk}` to `c_{j,k+1}`, in
    /// path order, ending with `b_{jk}`.
    pub sides: Vec<[Vec<VertexId>; 3]>,
    /// `(j, k, t)`: the `t`-th `a` vertex on side `k` of clause `j` (girth variant).
    pub a: BTreeMap<(usize, usize, usize), VertexId>,
    /// Pendant leaf of the matching `a` vertex.
    pub pendant: BTreeMap<(usize, usize, usize), VertexId>,
}

impl GadgetGraph {
    /// `(name, vertex)` pairs with 1-based indices, e.g. `y_2_3`, `c_1_2`,
    /// `p_1_2_1`, `a_1_2_1`, sorted by vertex.
    pub fn names(&self) -> Vec<(String, VertexId)> {
        let mut out = Vec::new();
        for (i, &v) in self.x.iter().enumerate() {
            out.push((format!("x_{}", i + 1), v));
        }
        for (&(i, j), &v) in &self.y {
            out.push((format!("y_{}_{}", i + 1, j + 1), v));
        }
        for (j, cs) in self.c.iter().enumerate() {
            for (k, &ck) in cs.iter().enumerate() {
                out.push((format!("c_{}_{}", j + 1, k + 1), ck));
                out.push((format!("b_{}_{}", j + 1, k + 1), self.b[j][k]));
            }
        }
        for (&(j, k, t), &v) in &self.a {
            let side = &self.sides[j][k];
            out.push((format!("p_{}_{}_{}", j + 1, k + 1, t + 1), side[3 * t]));
            out.push((format!("q_{}_{}_{}", j + 1, k + 1, t + 1), side[3 * t + 1]));
            out.push((format!("a_{}_{}_{}", j + 1, k + 1, t + 1), v));
            out.push((format!("l_{}_{}_{}", j + 1, k + 1, t + 1), self.pendant[&(j, k, t)]));
        }
        out.sort_by_key(|&(_, v)| v);
        out
    }
}

/// Builds the gadget graph of `f`.
pub fn sat_to_graph(f: &PositiveCnf, variant: GadgetVariant) -> Result<GadgetGraph> {
    match variant {
        GadgetVariant::Basic => Ok(basic(f)),
        GadgetVariant::Girth(s) if s >= 2 && s % 2 == 0 => Ok(girth(f, s)),
        GadgetVariant::Girth(s) => Err(Error::InvalidInput(format!("s must be even and at least 2, got {s}"))),
    }
}

fn basic(f: &PositiveCnf) -> GadgetGraph {
    let nv = f.num_vars();
    let m = f.num_clauses();
    // intermediate graph: variables, clause triangles, variable-clause edges
    let c: Vec<[VertexId; 3]> = (0..m).map(|j| [nv + 3 * j, nv + 3 * j + 1, nv + 3 * j + 2]).collect();
    let mut edges = Vec::new();
    for (j, clause) in f.clauses().iter().enumerate() {
        for k in 0..3 {
            edges.push((clause[k], c[j][k]));
            edges.push((c[j][k], c[j][(k + 1) % 3]));
        }
    }
    let inter = Graph::from_edge_list(nv + 3 * m, &edges).unwrap();
    let (graph, sub) = inter.subdivide_all_edges();
    let key = |u: VertexId, v: VertexId| sub[&(u.min(v), u.max(v))];
    let mut y = BTreeMap::new();
    let mut b = Vec::with_capacity(m);
    for (j, clause) in f.clauses().iter().enumerate() {
        for k in 0..3 {
            y.insert((clause[k], j), key(clause[k], c[j][k]));
        }
        b.push([0, 1, 2].map(|k| key(c[j][k], c[j][(k + 1) % 3])));
    }
    let sides = b.iter().map(|bs| bs.map(|v| vec![v])).collect();
    GadgetGraph {
        graph,
        variant: GadgetVariant::Basic,
        x: (0..nv).collect(),
        y,
        c,
        b,
        sides,
        a: BTreeMap::new(),
        pendant: BTreeMap::new(),
    }
}

fn girth(f: &PositiveCnf, s: usize) -> GadgetGraph {
    let nv = f.num_vars();
    let m = f.num_clauses();
    let mut next = nv;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut edges = Vec::new();
    let c: Vec<[VertexId; 3]> = (0..m).map(|_| [fresh(), fresh(), fresh()]).collect();
    let mut y = BTreeMap::new();
    for (j, clause) in f.clauses().iter().enumerate() {
        for k in 0..3 {
            let w = fresh();
            y.insert((clause[k], j), w);
            edges.push((clause[k], w));
            edges.push((w, c[j][k]));
        }
    }
    let mut a = BTreeMap::new();
    let mut pendant = BTreeMap::new();
    let mut sides = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for (j, cj) in c.iter().enumerate() {
        let mut js: [Vec<VertexId>; 3] = Default::default();
        for k in 0..3 {
            let mut prev = cj[k];
            for t in 0..s {
                for role in 0..3 {
                    let w = fresh();
                    edges.push((prev, w));
                    js[k].push(w);
                    prev = w;
                    if role == 2 {
                        let l = fresh();
                        edges.push((w, l));
                        a.insert((j, k, t), w);
                        pendant.insert((j, k, t), l);
                    }
                }
            }
            let bj = fresh();
            edges.push((prev, bj));
            edges.push((bj, c[j][(k + 1) % 3]));
            js[k].push(bj);
        }
        b.push([0, 1, 2].map(|k| *js[k].last().unwrap()));
        sides.push(js);
    }
    GadgetGraph {
        graph: Graph::from_edge_list(next, &edges).unwrap(),
        variant: GadgetVariant::Girth(s),
        x: (0..nv).collect(),
        y,
        c,
        b,
        sides,
        a,
        pendant,
    }
}

/// Colours of the three sides of a clause whose `c_{j1}` is the 0-coloured
/// clause vertex; other rotations shift the side index.
fn side_patterns(variant: GadgetVariant) -> [Vec<usize>; 3] {
    match variant {
        GadgetVariant::Basic => [vec![2], vec![0], vec![2]],
        GadgetVariant::Girth(s) => {
            let rep = |unit: [usize; 3], last: usize| {
                let mut v: Vec<usize> = unit.iter().copied().cycle().take(3 * s).collect();
                v.push(last);
                v
            };
            [rep([2, 1, 0], 2), rep([0, 2, 1], 0), rep([2, 0, 1], 2)]
        }
    }
}

/// The 3-rs colouring induced by an exactly-one-true assignment.
pub fn assignment_to_3rs_colouring(f: &PositiveCnf, gg: &GadgetGraph, assignment: &[bool]) -> Result<Colouring> {
    if !f.is_one_in_three(assignment) {
        return Err(Error::Precondition("assignment is not exactly-one-true".into()));
    }
    if gg.c.len() != f.num_clauses() || gg.x.len() != f.num_vars() {
        return Err(Error::InvalidInput(
            "gadget graph was built from a different formula".into(),
        ));
    }
    let mut col = vec![2usize; gg.graph.n()];
    for (i, &v) in gg.x.iter().enumerate() {
        col[v] = usize::from(assignment[i]);
    }
    let patterns = side_patterns(gg.variant);
    for (j, clause) in f.clauses().iter().enumerate() {
        let k0 = (0..3).find(|&k| assignment[clause[k]]).unwrap();
        for k in 0..3 {
            col[gg.c[j][k]] = 1 - usize::from(assignment[clause[k]]);
            let pattern = &patterns[(k + 3 - k0) % 3];
            for (&v, &p) in gg.sides[j][k].iter().zip(pattern) {
                col[v] = p;
            }
        }
    }
    Colouring::new(col, 3)
}

/// Reads the assignment off a 3-rs colouring: a variable is true when its
/// vertex has colour 1. For cubic formulas this is always exactly-one-true;
/// for other formulas the result should be checked by the caller.
pub fn colouring_to_assignment(f: &PositiveCnf, gg: &GadgetGraph, c: &Colouring) -> Result<Vec<bool>> {
    if c.len() != gg.graph.n() {
        return Err(Error::DomainMismatch {
            expected: gg.graph.n(),
            got: c.len(),
        });
    }
    Ok((0..f.num_vars()).map(|i| c.colour(gg.x[i]) == 1).collect())
}
