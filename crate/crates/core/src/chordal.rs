//! 3-rs colourability of chordal graphs by triangle elimination.
//!
//! A triangle whose three vertices all have degree at least three rules
//! out a 3-rs colouring. Any other triangle has a vertex `w` of degree two;
//! deleting `w` and hanging two pendants on each of its neighbours keeps
//! the answer unchanged and removes exactly one triangle. Once no triangle
//! is left the component is a tree and the tree tester decides it.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::tree3rs::{test_3rs_tree, Reason, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// All three vertices are 3-plus.
    TypeI,
    /// The carried vertex has degree two.
    TypeII(VertexId),
}

fn check_triangle(g: &Graph, t: [VertexId; 3]) -> Result<()> {
    let [a, b, c] = t;
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(Error::Precondition(format!("{t:?} is not a triangle")));
    }
    Ok(())
}

/// Type of a triangle; for type II the lowest-indexed degree-2 vertex.
pub fn classify_triangle(g: &Graph, t: [VertexId; 3]) -> Result<TriangleKind> {
    check_triangle(g, t)?;
    let mut low: Vec<VertexId> = t.iter().copied().filter(|&v| g.degree(v) == 2).collect();
    low.sort_unstable();
    Ok(match low.first() {
        None => TriangleKind::TypeI,
        Some(&w) => TriangleKind::TypeII(w),
    })
}

/// Removes the degree-2 vertex `w` of triangle `t` and attaches two
/// pendants to each of the other two vertices. The slot of `w` is reused
/// by the first pendant of the smaller neighbour; the other three pendants
/// are appended, so every other vertex keeps its index.
pub fn eliminate_type2_triangle(g: &Graph, t: [VertexId; 3], w: VertexId) -> Result<Graph> {
    check_triangle(g, t)?;
    if !t.contains(&w) || g.degree(w) != 2 {
        return Err(Error::Precondition(format!("{w} is not a degree-2 vertex of {t:?}")));
    }
    let [u, v] = [g.neighbours(w)[0], g.neighbours(w)[1]];
    let n = g.n();
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().filter(|&(a, b)| a != w && b != w).collect();
    edges.extend([(u, w), (u, n), (v, n + 1), (v, n + 2)]);
    Graph::from_edge_list(n + 3, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalReason {
    /// Vertices (original indices) of a triangle with three 3-plus vertices.
    TypeITriangle([VertexId; 3]),
    /// The tree left after elimination was rejected; vertex ids refer to
    /// that tree.
    Tree(Reason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalVerdict {
    Colourable,
    NotColourable { component: usize, reason: ChordalReason },
}

impl ChordalVerdict {
    pub fn is_colourable(&self) -> bool {
        matches!(self, ChordalVerdict::Colourable)
    }
}

/// Tree reached from one component, with the original index of every
/// vertex that is not a pendant added by elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTree {
    pub tree: Graph,
    pub origin: Vec<Option<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalReport {
    pub verdict: ChordalVerdict,
    pub eliminations: usize,
    /// One entry per component that was reduced all the way to a tree.
    pub trees: Vec<ReducedTree>,
}

/// Decides 3-rs colourability of a chordal graph, one component at a time.
pub fn test_3rs_chordal(g: &Graph) -> Result<ChordalReport> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let mut report = ChordalReport {
        verdict: ChordalVerdict::Colourable,
        eliminations: 0,
        trees: Vec::new(),
    };
    for (ci, comp) in g.components().into_iter().enumerate() {
        let (mut h, map) = g.induced_subgraph(&comp);
        let mut origin: Vec<Option<VertexId>> = map.into_iter().map(Some).collect();
        let mut triangles = h.triangles();
        while let Some(&first) = triangles.first() {
            let mut pick = None;
            for &t in &triangles {
                match classify_triangle(&h, t)? {
                    TriangleKind::TypeI => {
                        report.verdict = ChordalVerdict::NotColourable {
                            component: ci,
                            reason: ChordalReason::TypeITriangle(
                                t.map(|v| origin[v].expect("triangle vertices are original")),
                            ),
                        };
                        return Ok(report);
                    }
                    TriangleKind::TypeII(w) if pick.is_none() => pick = Some((t, w)),
                    TriangleKind::TypeII(_) => {}
                }
            }
            let (t, w) = pick.unwrap_or((first, first[0]));
            h = eliminate_type2_triangle(&h, t, w)?;
            origin[w] = None;
            origin.extend([None, None, None]);
            report.eliminations += 1;
            let next = h.triangles();
            debug_assert_eq!(next.len() + 1, triangles.len());
            debug_assert!(h.is_chordal());
            triangles = next;
        }
        let verdict = test_3rs_tree(&h)?;
        report.trees.push(ReducedTree { tree: h, origin });
        if let Verdict::NotColourable(reason) = verdict {
            report.verdict = ChordalVerdict::NotColourable {
                component: ci,
                reason: ChordalReason::Tree(reason),
            };
            return Ok(report);
        }
    }
    Ok(report)
}
