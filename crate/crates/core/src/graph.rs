//! Undirected simple graphs on dense vertex indices.
//!
//! A [`Graph`] is immutable once built: every operation that changes the
//! structure returns a new graph. Adjacency lists are kept sorted, which
//! makes edge queries a binary search and gives deterministic iteration
//! order everywhere downstream.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        self.edges().collect()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Connected and `m = n - 1`. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Length of a shortest cycle, or `None` when the graph is acyclic.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[v] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Every triangle exactly once as `[a, b, c]` with `a < b < c`, sorted.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            let higher: Vec<VertexId> = self.adj[a].iter().copied().filter(|&x| x > a).collect();
            for (i, &b) in higher.iter().enumerate() {
                for &c in &higher[i + 1..] {
                    if self.has_edge(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// BFS two-colouring. Returns the side of every vertex (`false` for the
    /// side containing the smallest vertex of each component) or `None`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Maximum cardinality search order, reversed so that it is a perfect
    /// elimination ordering whenever the graph is chordal.
    pub fn mcs_elimination_order(&self) -> Vec<VertexId> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut done = vec![false; n];
        // bucket[w] holds candidates of weight w; stale entries are skipped
        let mut buckets: Vec<Vec<VertexId>> = vec![(0..n).rev().collect()];
        let mut top = 0usize;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = loop {
                match buckets[top].pop() {
                    Some(v) if !done[v] && weight[v] == top => break v,
                    Some(_) => {}
                    None => top -= 1,
                }
            };
            done[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !done[w] {
                    weight[w] += 1;
                    if weight[w] >= buckets.len() {
                        buckets.push(Vec::new());
                    }
                    buckets[weight[w]].push(w);
                    top = top.max(weight[w]);
                }
            }
        }
        order.reverse();
        order
    }

    /// Whether `order` is a perfect elimination ordering: for each vertex,
    /// its neighbours later in the order form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[VertexId]) -> bool {
        let n = self.n();
        if order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        // Tarjan–Yannakakis: only the earliest later neighbour needs checking
        for &v in order {
            let later: Vec<VertexId> = self.adj[v].iter().copied().filter(|&w| pos[w] > pos[v]).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
                for &w in &later {
                    if w != parent && !self.has_edge(parent, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.is_perfect_elimination_order(&self.mcs_elimination_order())
    }

    /// Degeneracy via repeated removal of a minimum-degree vertex.
    pub fn degeneracy(&self) -> usize {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| deg[v]).unwrap();
            best = best.max(deg[v]);
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        best
    }

    /// New graph with `count` fresh pendant vertices adjacent to `v`,
    /// numbered `n, n+1, ...`.
    pub fn attach_pendants(&self, v: VertexId, count: usize) -> Result<Graph> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut g = self.clone();
        for i in 0..count {
            g.adj.push(vec![v]);
            g.adj[v].push(n + i);
        }
        g.m += count;
        Ok(g)
    }

    /// Replaces every edge `uv` by a path `u, w, v` through a fresh vertex.
    /// Fresh vertices are numbered from `n` in edge order; the returned map
    /// is keyed by `(min(u,v), max(u,v))`.
    pub fn subdivide_all_edges(&self) -> (Graph, BTreeMap<(VertexId, VertexId), VertexId>) {
        let n = self.n();
        let mut edges = Vec::with_capacity(2 * self.m);
        let mut map = BTreeMap::new();
        for (i, (u, v)) in self.edges().enumerate() {
            let w = n + i;
            map.insert((u, v), w);
            edges.push((u, w));
            edges.push((w, v));
        }
        let g = Graph::from_edge_list(n + self.m, &edges).expect("subdivision is simple");
        (g, map)
    }

    /// Subgraph induced by `vertices` (relabelled `0..len` in the given
    /// order) together with the local-to-original index map.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edge_list(vertices.len(), &edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect()));
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Graphviz rendering, one line per edge, no layout attributes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in self.vertices().filter(|&v| self.degree(v) == 0) {
            s.push_str(&format!("  {};\n", v + 1));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
        }
        s.push_str("}\n");
        s
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// `K_{1,p}` with centre 0.
    pub fn star(p: usize) -> Graph {
        let edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
        Graph::from_edge_list(p + 1, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    /// `d`-dimensional hypercube on bit-strings `0..2^d`.
    pub fn hypercube(d: u32) -> Graph {
        let n = 1usize << d;
        let mut edges = Vec::new();
        for u in 0..n {
            for bit in 0..d {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn dart() -> Graph {
        // x=0, y=1, z=2, v=3, w=4
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]).unwrap()
    }

    fn symmetric(g: &Graph) -> bool {
        g.vertices()
            .all(|v| g.neighbours(v).iter().all(|&w| g.neighbours(w).contains(&v)))
    }

    #[test]
    fn edge_list_construction() {
        let g = dart();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(g.degree(1), 4);
        assert!(symmetric(&g));

        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.degree(0), 0);

        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(dup.m(), 2);

        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::path(4).degree(1), 2);
        let g = dart();
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn tree_recognition() {
        assert!(Graph::path(7).is_tree());
        assert!(!dart().is_tree());
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
    }

    #[test]
    fn girth_values() {
        assert_eq!(dart().girth(), Some(3));
        assert_eq!(Graph::path(9).girth(), None);
        assert_eq!(Graph::star(5).girth(), None);
        assert_eq!(Graph::cycle(7).girth(), Some(7));
        assert_eq!(Graph::hypercube(3).girth(), Some(4));
        assert_eq!(Graph::complete_bipartite(3, 3).girth(), Some(4));
        // Petersen graph
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        assert_eq!(Graph::from_edge_list(10, &e).unwrap().girth(), Some(5));
    }

    #[test]
    fn triangle_listing() {
        // (y,v,z) and (y,w,z)
        assert_eq!(dart().triangles(), vec![[1, 2, 3], [1, 2, 4]]);
        assert!(Graph::path(6).triangles().is_empty());

        let k4 = Graph::complete(4);
        let brute: Vec<[usize; 3]> = (0..4)
            .flat_map(|a| (a + 1..4).flat_map(move |b| (b + 1..4).map(move |c| [a, b, c])))
            .filter(|&[a, b, c]| k4.has_edge(a, b) && k4.has_edge(b, c) && k4.has_edge(a, c))
            .collect();
        assert_eq!(brute.len(), 4);
        assert_eq!(k4.triangles(), brute);
    }

    #[test]
    fn bipartite_check() {
        assert!(!Graph::complete(3).is_bipartite());
        assert!(Graph::empty(0).is_bipartite());
        assert!(Graph::hypercube(3).is_bipartite());
        let side = Graph::path(4).bipartition().unwrap();
        assert_eq!(side, vec![false, true, false, true]);
    }

    #[test]
    fn chordal_check() {
        assert!(dart().is_chordal());
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(6).is_chordal());
        assert!(Graph::path(10).is_chordal());
        assert!(Graph::star(4).is_chordal());
        assert!(Graph::complete(5).is_chordal());
        assert!(Graph::empty(0).is_chordal());
    }

    #[test]
    fn pendants_and_subdivision() {
        let k13 = Graph::empty(1).attach_pendants(0, 3).unwrap();
        assert_eq!(k13, Graph::star(3));

        let c4 = Graph::cycle(4).attach_pendants(2, 1).unwrap();
        assert_eq!(c4.degree(2), 3);
        assert_eq!(c4.girth(), Some(4));
        assert!(symmetric(&c4));

        let (c6, map) = Graph::complete(3).subdivide_all_edges();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert_eq!(c6.girth(), Some(6));
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert_eq!(map.len(), 3);

        let (p3, map) = Graph::path(2).subdivide_all_edges();
        assert_eq!(p3, Graph::path(3).induced_subgraph(&[0, 2, 1]).0);
        assert_eq!(map[&(0, 1)], 2);
    }

    #[test]
    fn hypercube_shape() {
        let q3 = Graph::hypercube(3);
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!(q3.vertices().all(|v| q3.degree(v) == 3));
    }

    #[test]
    fn dot_has_one_line_per_edge() {
        let dot = dart().to_dot();
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                    let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                    Graph::from_edge_list(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn structure_invariants(g in arb_graph()) {
                prop_assert!(symmetric(&g));
                let total: usize = g.vertices().map(|v| g.degree(v)).sum();
                prop_assert_eq!(total, 2 * g.m());
                for v in g.vertices() {
                    prop_assert!(g.neighbours(v).windows(2).all(|w| w[0] < w[1]));
                }
            }

            #[test]
            fn subdivision_invariants(g in arb_graph()) {
                let (s, map) = g.subdivide_all_edges();
                prop_assert_eq!(s.n(), g.n() + g.m());
                prop_assert_eq!(s.m(), 2 * g.m());
                prop_assert!(s.is_bipartite());
                prop_assert_eq!(map.len(), g.m());
            }

            #[test]
            fn pendants_preserve_girth(g in arb_graph(), count in 0usize..4) {
                let v = 0;
                let h = g.attach_pendants(v, count).unwrap();
                prop_assert_eq!(h.girth(), g.girth());
                for u in g.vertices() {
                    let expect = g.degree(u) + if u == v { count } else { 0 };
                    prop_assert_eq!(h.degree(u), expect);
                }
            }

            #[test]
            fn triangles_match_brute_force(g in arb_graph()) {
                let n = g.n();
                let mut brute = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                                brute.push([a, b, c]);
                            }
                        }
                    }
                }
                prop_assert_eq!(g.triangles(), brute);
            }
        }
    }
}
