//! Compression and direct recovery of sparse symmetric matrices through
//! rs colourings of their adjacency graph.
//!
//! Columns of one colour are summed into a single column of the
//! compressed matrix `B = H S`. Because a vertex has at most one neighbour
//! in each lower colour class, every entry of `H` appears alone in some
//! cell of `B`: diagonal entries in their own colour, and an off-diagonal
//! entry in the row of its higher-coloured endpoint.

use num_traits::Num;

use crate::colouring::{is_rs, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Symmetric off-diagonal nonzero structure; the diagonal is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityPattern {
    n: usize,
    graph: Graph,
}

impl SparsityPattern {
    /// Requires every listed `(i, j)` to be matched by `(j, i)`. Diagonal
    /// pairs are ignored.
    pub fn from_entries(n: usize, entries: &[(usize, usize)]) -> Result<Self> {
        let mut set: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
        for &(i, j) in entries {
            if i >= n || j >= n {
                return Err(Error::VertexOutOfRange { vertex: i.max(j), n });
            }
            if i != j {
                set.insert((i, j));
            }
        }
        if let Some(&(i, j)) = set.iter().find(|&&(i, j)| !set.contains(&(j, i))) {
            return Err(Error::InvalidInput(format!(
                "pattern has ({i}, {j}) but not ({j}, {i})"
            )));
        }
        let edges: Vec<_> = set.into_iter().filter(|&(i, j)| i < j).collect();
        Self::from_pairs(n, &edges)
    }

    /// Treats every listed pair as present in both orientations.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<_> = pairs.iter().copied().filter(|&(i, j)| i != j).collect();
        Ok(SparsityPattern {
            n,
            graph: Graph::from_edge_list(n, &edges)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i == j || self.graph.has_edge(i, j)
    }

    /// Off-diagonal pairs `(i, j)` with `i < j`.
    pub fn upper_pairs(&self) -> Vec<(usize, usize)> {
        self.graph.edge_list()
    }
}

/// Adjacency graph of a pattern: one vertex per row, one edge per
/// symmetric off-diagonal pair.
pub fn pattern_to_graph(p: &SparsityPattern) -> Graph {
    p.graph.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyOrder {
    Natural,
    LargestDegreeFirst,
}

fn vertex_order(g: &Graph, order: GreedyOrder) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = g.vertices().collect();
    if order == GreedyOrder::LargestDegreeFirst {
        vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    }
    vs
}

const UNSET: usize = usize::MAX;

/// First-fit rs colouring. A colour `c` is allowed for `v` when
/// (i) no neighbour has `c`,
/// (ii) `v` has at most one neighbour in each colour below `c`,
/// (iii) no neighbour coloured above `c` already has a neighbour coloured `c`,
/// (iv) no uncoloured neighbour of `v` already has a neighbour coloured `c`.
/// Rule (iv) keeps the coloured neighbours of every uncoloured vertex
/// pairwise distinct, so a fresh colour above all used ones is always
/// allowed and the procedure never gets stuck.
pub fn greedy_rs_colouring(g: &Graph, order: GreedyOrder) -> Colouring {
    let mut col = vec![UNSET; g.n()];
    let mut forbidden = Vec::new();
    let mut lower_seen = Vec::new();
    for v in vertex_order(g, order) {
        forbidden.clear();
        lower_seen.clear();
        for &u in g.neighbours(v) {
            if col[u] != UNSET {
                forbidden.push(col[u]);
                lower_seen.push(col[u]);
                for &x in g.neighbours(u) {
                    if x != v && col[x] != UNSET && col[x] < col[u] {
                        // (iii): u already has x below it, so v may not share x's colour
                        forbidden.push(col[x]);
                    }
                }
            } else {
                for &x in g.neighbours(u) {
                    if x != v && col[x] != UNSET {
                        forbidden.push(col[x]);
                    }
                }
            }
        }
        lower_seen.sort_unstable();
        // (ii): any colour above a repeated neighbour colour is out
        let cap = lower_seen
            .windows(2)
            .find(|w| w[0] == w[1])
            .map_or(usize::MAX, |w| w[0]);
        forbidden.sort_unstable();
        forbidden.dedup();
        let c = (0..).find(|c| forbidden.binary_search(c).is_err()).unwrap();
        assert!(c <= cap, "rule (iv) keeps neighbour colours distinct");
        col[v] = c;
    }
    Colouring::from_colours(col)
}

/// First-fit distance-two colouring in the same vertex orders.
pub fn greedy_distance_two_colouring(g: &Graph, order: GreedyOrder) -> Colouring {
    let mut col = vec![UNSET; g.n()];
    let mut forbidden = Vec::new();
    for v in vertex_order(g, order) {
        forbidden.clear();
        for &u in g.neighbours(v) {
            forbidden.push(col[u]);
            forbidden.extend(g.neighbours(u).iter().map(|&x| col[x]));
        }
        forbidden.sort_unstable();
        col[v] = (0..).find(|c| forbidden.binary_search(c).is_err()).unwrap();
    }
    Colouring::from_colours(col)
}

/// rs colouring of a pattern's graph together with its colour classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedGrouping {
    colouring: Colouring,
    groups: Vec<Vec<VertexId>>,
}

impl SeedGrouping {
    pub fn new(p: &SparsityPattern, colouring: Colouring) -> Result<Self> {
        if !is_rs(&p.graph, &colouring)? {
            return Err(Error::Precondition(
                "grouping is not an rs colouring of the pattern".into(),
            ));
        }
        let groups = colouring.classes();
        Ok(SeedGrouping { colouring, groups })
    }

    pub fn greedy(p: &SparsityPattern, order: GreedyOrder) -> Self {
        Self::new(p, greedy_rs_colouring(&p.graph, order)).expect("greedy output is rs")
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    pub fn groups(&self) -> &[Vec<VertexId>] {
        &self.groups
    }

    pub fn k(&self) -> usize {
        self.colouring.k()
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Num + Copy> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        (0..n).for_each(|i| m.set(i, i, T::one()));
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("rows have different lengths".into()));
        }
        Ok(DenseMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: num_traits::Float> DenseMatrix<T> {
    /// Largest entrywise absolute difference; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.rows != other.rows || self.cols != other.cols {
            return T::infinity();
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max)
    }
}

/// `B[v][c]`: sum of `H[v][u]` over all `u` of colour `c`.
pub fn compress<T: Num + Copy>(h: &DenseMatrix<T>, p: &SparsityPattern, s: &SeedGrouping) -> Result<DenseMatrix<T>> {
    let n = p.n();
    if h.rows() != n || h.cols() != n || s.colouring().len() != n {
        return Err(Error::DomainMismatch {
            expected: n,
            got: h.rows(),
        });
    }
    if !h.is_symmetric() {
        return Err(Error::InvalidInput("matrix is not symmetric".into()));
    }
    let mut b = DenseMatrix::zeros(n, s.k());
    for v in 0..n {
        for u in 0..n {
            let x = h.get(v, u);
            if x.is_zero() {
                continue;
            }
            if !p.contains(v, u) {
                return Err(Error::InvalidInput(format!(
                    "entry ({}, {}) lies outside the pattern",
                    v + 1,
                    u + 1
                )));
            }
            let c = s.colouring().colour(u);
            b.set(v, c, b.get(v, c) + x);
        }
    }
    Ok(b)
}

/// Rebuilds `H` from `B = H S` by reading every entry directly.
pub fn recover<T: Num + Copy>(b: &DenseMatrix<T>, p: &SparsityPattern, s: &SeedGrouping) -> Result<DenseMatrix<T>> {
    let n = p.n();
    if b.rows() != n || b.cols() != s.k() || s.colouring().len() != n {
        return Err(Error::DomainMismatch {
            expected: n,
            got: b.rows(),
        });
    }
    let col = s.colouring();
    let mut h = DenseMatrix::zeros(n, n);
    for v in 0..n {
        h.set(v, v, b.get(v, col.colour(v)));
    }
    for (u, v) in p.upper_pairs() {
        let (lo, hi) = if col.colour(u) < col.colour(v) { (u, v) } else { (v, u) };
        let x = b.get(hi, col.colour(lo));
        h.set(lo, hi, x);
        h.set(hi, lo, x);
    }
    Ok(h)
}
