//! Replacing every edge by a complete bipartite graph `K_{2, Δ+1}`.
//!
//! In the blown-up graph a vertex of the original graph has at least
//! `Δ + 1` neighbours, and two originally adjacent vertices share `Δ + 1`
//! common neighbours. With fewer than `Δ + 2` colours an rs colouring
//! therefore cannot give them equal colours, which turns rs colourings of
//! the blow-up into proper colourings of the original.

use crate::colouring::{is_proper, is_rs, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone)]
pub struct BlowUp {
    pub graph: Graph,
    pub original_n: usize,
    pub delta: usize,
    /// For every original edge `(u, v)` with `u < v`, in lexicographic
    /// order, its `Δ + 1` new common neighbours.
    pub edge_vertices: Vec<((VertexId, VertexId), Vec<VertexId>)>,
}

pub fn edge_blowup(g: &Graph) -> Result<BlowUp> {
    if g.m() == 0 {
        return Err(Error::Precondition("blow-up needs at least one edge".into()));
    }
    let delta = g.max_degree();
    let width = delta + 1;
    let mut edges = Vec::with_capacity(2 * width * g.m());
    let mut edge_vertices = Vec::with_capacity(g.m());
    for (i, (u, v)) in g.edges().enumerate() {
        let fresh: Vec<VertexId> = (0..width).map(|t| g.n() + i * width + t).collect();
        for &e in &fresh {
            edges.push((u, e));
            edges.push((v, e));
        }
        edge_vertices.push(((u, v), fresh));
    }
    let n = g.n() + width * g.m();
    Ok(BlowUp {
        graph: Graph::from_edge_list(n, &edges).unwrap(),
        original_n: g.n(),
        delta,
        edge_vertices,
    })
}

/// Extends a proper `k`-colouring of `g` to a `(k+1)`-rs colouring of the
/// blow-up by giving every new vertex colour `k`.
pub fn colouring_lift(g: &Graph, bu: &BlowUp, pc: &Colouring) -> Result<Colouring> {
    if !is_proper(g, pc)? {
        return Err(Error::Precondition("colouring is not proper".into()));
    }
    let k = pc.k();
    let mut col = vec![k; bu.graph.n()];
    col[..g.n()].copy_from_slice(pc.as_slice());
    Colouring::new(col, k + 1)
}

/// Turns a `(k+1)`-rs colouring of the blow-up into a proper `k`-colouring
/// of `g`. For `k >= Δ + 1` a greedy colouring is returned; otherwise the
/// restriction to the original vertices, with isolated vertices moved to
/// colour 0.
pub fn rs_to_proper_extraction(g: &Graph, bu: &BlowUp, c: &Colouring) -> Result<Colouring> {
    if bu.original_n != g.n() || !is_rs(&bu.graph, c)? {
        return Err(Error::Precondition(
            "colouring is not an rs colouring of the blow-up".into(),
        ));
    }
    let k = c.k().saturating_sub(1);
    if k > bu.delta {
        return greedy_proper(g).with_k(k);
    }
    let col: Vec<usize> = (0..g.n())
        .map(|v| if g.degree(v) == 0 { 0 } else { c.colour(v) })
        .collect();
    let out = Colouring::new(col, k.max(1))?;
    debug_assert!(is_proper(g, &out)?);
    Ok(out)
}

/// First-fit proper colouring in index order; uses at most `Δ + 1` colours.
pub fn greedy_proper(g: &Graph) -> Colouring {
    let mut col = vec![usize::MAX; g.n()];
    let mut used = Vec::new();
    for v in g.vertices() {
        used.clear();
        used.extend(g.neighbours(v).iter().map(|&w| col[w]).filter(|&c| c != usize::MAX));
        col[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    Colouring::from_colours(col)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(edge_blowup(&Graph::complete(3)).unwrap().graph.n(), 12);
        let e = edge_blowup(&Graph::path(2)).unwrap();
        assert_eq!(e.graph.n(), 4);
        assert_eq!(e.graph, Graph::cycle(4).induced_subgraph(&[0, 2, 1, 3]).0);
        assert!(edge_blowup(&Graph::empty(3)).is_err());
    }

    #[test]
    fn blowup_is_bipartite_and_2_degenerate() {
        let bu = edge_blowup(&Graph::complete(4)).unwrap();
        assert!(bu.graph.is_bipartite());
        // new vertices have degree 2; removing them leaves the original vertices isolated
        assert!((bu.original_n..bu.graph.n()).all(|v| bu.graph.degree(v) == 2));
        assert!(bu.graph.degeneracy() <= 2);
    }

    #[test]
    fn lift_of_triangle() {
        let g = Graph::complete(3);
        let bu = edge_blowup(&g).unwrap();
        let pc = Colouring::new(vec![0, 1, 2], 3).unwrap();
        let lifted = colouring_lift(&g, &bu, &pc).unwrap();
        assert_eq!(lifted.k(), 4);
        assert!(is_rs(&bu.graph, &lifted).unwrap());
        let back = rs_to_proper_extraction(&g, &bu, &lifted).unwrap();
        assert_eq!(back, pc);
    }

    #[test]
    fn greedy_branch() {
        let g = Graph::path(2);
        let bu = edge_blowup(&g).unwrap();
        let pc = Colouring::new(vec![0, 1], 3).unwrap();
        let lifted = colouring_lift(&g, &bu, &pc).unwrap();
        let out = rs_to_proper_extraction(&g, &bu, &lifted).unwrap();
        assert_eq!(out.k(), 3);
        assert!(is_proper(&g, &out).unwrap());
    }
}
