//! Rooted trees built by BFS from a chosen root.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    /// BFS order from the root; parents precede children, and the children
    /// of every vertex are contiguous.
    order: Vec<VertexId>,
    /// Children of `v` are `order[a..b]` for `(a, b) = child_range[v]`.
    child_range: Vec<(usize, usize)>,
}

impl RootedTree {
    /// Roots `g` at its lowest-indexed vertex of degree at least three.
    pub fn root_at_3plus(g: &Graph) -> Result<Self> {
        let root = g.vertices().find(|&v| g.degree(v) >= 3);
        let t = Self::with_root(g, root.unwrap_or(0))?;
        if root.is_none() {
            return Err(Error::No3PlusVertex);
        }
        Ok(t)
    }

    /// Roots `g` at an arbitrary vertex.
    pub fn with_root(g: &Graph, root: VertexId) -> Result<Self> {
        let n = g.n();
        if n == 0 || g.m() + 1 != n {
            return Err(Error::NotATree);
        }
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut child_range = vec![(0, 0); n];
        order.push(root);
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            let first = order.len();
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
            child_range[v] = (first, order.len());
            head += 1;
        }
        if order.len() != n {
            return Err(Error::NotATree);
        }
        Ok(RootedTree {
            root,
            parent,
            order,
            child_range,
        })
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        let (a, b) = self.child_range[v];
        &self.order[a..b]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.children(v).len() + self.parent[v].is_some() as usize
    }

    pub fn bfs_order(&self) -> &[VertexId] {
        &self.order
    }
}
