//! Graph constructions together with the colourings they carry over.

pub mod blowup;
pub mod cnf;
pub mod gadget;

use crate::colouring::{is_star, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use blowup::{colouring_lift, edge_blowup, greedy_proper, rs_to_proper_extraction, BlowUp};
pub use cnf::PositiveCnf;
pub use gadget::{assignment_to_3rs_colouring, colouring_to_assignment, sat_to_graph, GadgetGraph, GadgetVariant};

/// Whether every component of `g` is a star `K_{1,p}`, `p >= 0`.
pub fn decide_2_rs(g: &Graph) -> bool {
    g.components().into_iter().all(|comp| {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let tree = edges + 1 == comp.len();
        tree && (comp.len() <= 2 || comp.iter().any(|&v| g.degree(v) + 1 == comp.len()))
    })
}

/// Pads every vertex with pendants up to degree `Δ + 1`. Pendants are
/// numbered after the original vertices, grouped by the vertex they hang
/// from.
pub fn g_plus(g: &Graph) -> Graph {
    let target = g.max_degree() + 1;
    let mut edges = g.edge_list();
    let mut next = g.n();
    for v in g.vertices() {
        for _ in g.degree(v)..target {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges).unwrap()
}

fn check_independent(g: &Graph, set: &[VertexId]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if member[v] {
            return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
        }
        member[v] = true;
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| member[u] && member[v]) {
        return Err(Error::Precondition(format!("{u} and {v} are adjacent")));
    }
    Ok(member)
}

/// The rs colouring with a private colour for every vertex outside the
/// independent set `set` (in index order) and one shared top colour on `set`.
pub fn upper_bound_colouring(g: &Graph, set: &[VertexId]) -> Result<Colouring> {
    let member = check_independent(g, set)?;
    let top = g.n() - set.len();
    let mut next = 0;
    let col = g
        .vertices()
        .map(|v| {
            if member[v] {
                top
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    Colouring::new(col, top + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<VertexId>,
    pub independent: Vec<VertexId>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_partition(g, &self.clique, &self.independent)?;
        check_clique(g, &self.clique)?;
        check_independent(g, &self.independent)?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoBipartitePartition {
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
}

impl CoBipartitePartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_partition(g, &self.a, &self.b)?;
        check_clique(g, &self.a)?;
        check_clique(g, &self.b)
    }
}

fn check_partition(g: &Graph, x: &[VertexId], y: &[VertexId]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in x.iter().chain(y) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if seen[v] {
            return Err(Error::InvalidInput(format!(
                "vertex {v} appears twice in the partition"
            )));
        }
        seen[v] = true;
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidInput(format!("vertex {v} is missing from the partition")));
    }
    Ok(())
}

fn check_clique(g: &Graph, set: &[VertexId]) -> Result<()> {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::Precondition(format!("{u} and {v} are not adjacent")));
            }
        }
    }
    Ok(())
}

/// Independence number of a split graph, from its partition.
pub fn split_independence_number(g: &Graph, p: &SplitPartition) -> Result<usize> {
    p.validate(g)?;
    let best_with_clique_vertex = p
        .clique
        .iter()
        .map(|&v| 1 + p.independent.iter().filter(|&&w| !g.has_edge(v, w)).count())
        .max()
        .unwrap_or(0);
    Ok(p.independent.len().max(best_with_clique_vertex))
}

/// rs chromatic number of a split graph: `n - α + 1`.
pub fn split_rs_chromatic(g: &Graph, p: &SplitPartition) -> Result<usize> {
    Ok(g.n() - split_independence_number(g, p)? + 1)
}

/// Relabels a star colouring of a co-bipartite graph so that the colour
/// classes of size two get the lowest colours. The result is an ordered
/// colouring with the same number of colours.
pub fn star_to_ordered_cobipartite(g: &Graph, p: &CoBipartitePartition, sc: &Colouring) -> Result<Colouring> {
    p.validate(g)?;
    if !is_star(g, sc)? {
        return Err(Error::Precondition("colouring is not a star colouring".into()));
    }
    let classes = sc.classes();
    if let Some(big) = classes.iter().position(|cl| cl.len() > 2) {
        return Err(Error::Precondition(format!(
            "colour class {big} has {} vertices; co-bipartite classes have at most two",
            classes[big].len()
        )));
    }
    let mut order: Vec<usize> = (0..sc.k()).collect();
    // pairs first, then singletons, then unused colours; stable in old colour
    order.sort_by_key(|&c| std::cmp::Reverse(classes[c].len()));
    let mut relabel = vec![0; sc.k()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    Colouring::new(sc.as_slice().iter().map(|&c| relabel[c]).collect(), sc.k())
}
