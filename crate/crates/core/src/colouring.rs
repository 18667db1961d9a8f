//! Colourings and their verifiers.
//!
//! Every verifier first checks that the colouring covers exactly the
//! vertices of the graph; a mismatch is an error, not a `false`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub type Colour = usize;

/// Total map from vertices to colours in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<Colour>,
    k: usize,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>, k: usize) -> Result<Self> {
        if let Some((v, &c)) = colours.iter().enumerate().find(|&(_, &c)| c >= k) {
            return Err(Error::ColourOutOfRange {
                vertex: v,
                colour: c,
                k,
            });
        }
        Ok(Colouring { colours, k })
    }

    /// Uses the smallest palette that fits: `k = max colour + 1`.
    pub fn from_colours(colours: Vec<Colour>) -> Self {
        let k = colours.iter().map(|&c| c + 1).max().unwrap_or(0);
        Colouring { colours, k }
    }

    pub fn colour(&self, v: VertexId) -> Colour {
        self.colours[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.colours
    }

    pub fn into_vec(self) -> Vec<Colour> {
        self.colours
    }

    /// Number of distinct colours actually used.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        self.colours.iter().for_each(|&c| seen[c] = true);
        seen.into_iter().filter(|&b| b).count()
    }

    /// Colour classes `V_0, ..., V_{k-1}`, each sorted.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Same colours with a different palette size.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Colouring::new(self.colours.clone(), k)
    }

    fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.n() {
            return Err(Error::DomainMismatch {
                expected: g.n(),
                got: self.colours.len(),
            });
        }
        Ok(())
    }
}

/// Colouring in which some vertices may still be uncoloured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring {
    colours: Vec<Option<Colour>>,
    k: usize,
}

impl PartialColouring {
    pub fn uncoloured(n: usize, k: usize) -> Self {
        PartialColouring {
            colours: vec![None; n],
            k,
        }
    }

    pub fn from_assignments(n: usize, k: usize, assigned: &[(VertexId, Colour)]) -> Result<Self> {
        let mut p = Self::uncoloured(n, k);
        for &(v, c) in assigned {
            p.set(v, c)?;
        }
        Ok(p)
    }

    pub fn set(&mut self, v: VertexId, c: Colour) -> Result<()> {
        if v >= self.colours.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.colours.len(),
            });
        }
        if c >= self.k {
            return Err(Error::ColourOutOfRange {
                vertex: v,
                colour: c,
                k: self.k,
            });
        }
        self.colours[v] = Some(c);
        Ok(())
    }

    pub fn get(&self, v: VertexId) -> Option<Colour> {
        self.colours[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn assigned(&self) -> impl Iterator<Item = (VertexId, Colour)> + '_ {
        self.colours.iter().enumerate().filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// Whether `c` is total on the same vertex set and agrees with every
    /// assigned colour.
    pub fn is_extended_by(&self, c: &Colouring) -> bool {
        c.len() == self.len() && self.assigned().all(|(v, col)| c.colour(v) == col)
    }
}

/// Why a colouring fails the rs condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RsViolation {
    /// Edge with equal colours on both ends.
    Monochromatic(VertexId, VertexId),
    /// Path `x, y, z` with `c(y) > c(x) = c(z)`.
    Path([VertexId; 3]),
}

pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(improper_edge(g, c)?.is_none())
}

/// First monochromatic edge in lexicographic order.
pub fn improper_edge(g: &Graph, c: &Colouring) -> Result<Option<(VertexId, VertexId)>> {
    c.check_domain(g)?;
    Ok(g.edges().find(|&(u, v)| c.colour(u) == c.colour(v)))
}

pub fn is_rs(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(rs_violation(g, c)?.is_none())
}

/// Counts, for each vertex, its neighbours in every lower colour class.
pub fn rs_violation(g: &Graph, c: &Colouring) -> Result<Option<RsViolation>> {
    if let Some((u, v)) = improper_edge(g, c)? {
        return Ok(Some(RsViolation::Monochromatic(u, v)));
    }
    let mut first_in: Vec<Option<VertexId>> = vec![None; c.k()];
    for y in g.vertices() {
        let cy = c.colour(y);
        for &x in g.neighbours(y) {
            let cx = c.colour(x);
            if cx < cy {
                first_in[cx] = None;
            }
        }
        for &z in g.neighbours(y) {
            let cz = c.colour(z);
            if cz < cy {
                match first_in[cz] {
                    None => first_in[cz] = Some(z),
                    Some(x) => return Ok(Some(RsViolation::Path([x, y, z]))),
                }
            }
        }
    }
    Ok(None)
}

/// First path `x, y, z` with `c(y) > c(x) = c(z)`, ignoring whether the
/// colouring is proper.
pub fn rs_path_witness(g: &Graph, c: &Colouring) -> Result<Option<[VertexId; 3]>> {
    c.check_domain(g)?;
    for y in g.vertices() {
        let nb = g.neighbours(y);
        for (i, &x) in nb.iter().enumerate() {
            for &z in &nb[i + 1..] {
                if c.colour(x) == c.colour(z) && c.colour(y) > c.colour(x) {
                    return Ok(Some([x, y, z]));
                }
            }
        }
    }
    Ok(None)
}

/// Reference rs check scanning every 3-vertex path directly.
pub fn is_rs_by_paths(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(is_proper(g, c)? && rs_path_witness(g, c)?.is_none())
}

/// Every pair of colour classes induces a star forest.
pub fn is_star(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(bicoloured_p4(g, c)?.is_none())
}

/// A bicoloured path on four vertices, if any. A proper colouring is a star
/// colouring exactly when none exists.
pub fn bicoloured_p4(g: &Graph, c: &Colouring) -> Result<Option<[VertexId; 4]>> {
    if let Some((u, v)) = improper_edge(g, c)? {
        // report the bad edge padded as a degenerate path
        return Ok(Some([u, v, u, v]));
    }
    // middle edge v-w with v and w each having another neighbour in the
    // opposite colour class
    for (v, w) in g.edges() {
        let (cv, cw) = (c.colour(v), c.colour(w));
        let u = g.neighbours(v).iter().copied().find(|&u| u != w && c.colour(u) == cw);
        let x = g.neighbours(w).iter().copied().find(|&x| x != v && c.colour(x) == cv);
        if let (Some(u), Some(x)) = (u, x) {
            return Ok(Some([u, v, w, x]));
        }
    }
    Ok(None)
}

/// For every colour `i`, each component of the subgraph induced by colours
/// `<= i` holds at most one vertex of colour `i`.
pub fn is_ordered(g: &Graph, c: &Colouring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for i in 0..c.k() {
        comp.iter_mut().for_each(|x| *x = usize::MAX);
        for s in g.vertices().filter(|&s| c.colour(s) == i) {
            if comp[s] != usize::MAX {
                return Ok(false);
            }
            comp[s] = s;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in g.neighbours(v) {
                    if c.colour(w) <= i && comp[w] == usize::MAX {
                        comp[w] = s;
                        stack.push(w);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Vertices at distance one or two receive different colours.
pub fn is_distance_two(g: &Graph, c: &Colouring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    for y in g.vertices() {
        let mut seen = std::collections::HashSet::new();
        for &x in g.neighbours(y) {
            if !seen.insert(c.colour(x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the 3-rs structural properties. Each field holds the first
/// violating vertex sequence, or `None` when the property holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    /// 3-plus vertex with colour 2.
    pub p1: Option<Vec<VertexId>>,
    /// Adjacent 3-plus vertices without opposite binary colours.
    pub p2: Option<Vec<VertexId>>,
    /// Path on 3 vertices with both ends coloured 0.
    pub p3: Option<Vec<VertexId>>,
    /// Path on 4 vertices with ends coloured 0 and 1.
    pub p4: Option<Vec<VertexId>>,
    /// Path on 6 vertices with both ends coloured 0.
    pub p6: Option<Vec<VertexId>>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.p1.is_none() && self.p2.is_none() && self.p3.is_none() && self.p4.is_none() && self.p6.is_none()
    }
}

/// Checks the structural properties shared by all 3-rs colourings.
pub fn check_properties_p(g: &Graph, c: &Colouring) -> Result<PropertyReport> {
    if c.as_slice().iter().any(|&x| x >= 3) || !is_rs(g, c)? {
        return Err(Error::Precondition("colouring is not a 3-rs colouring".into()));
    }
    let mut report = PropertyReport::default();
    let plus = |v: VertexId| g.degree(v) >= 3;
    report.p1 = g.vertices().find(|&v| plus(v) && c.colour(v) == 2).map(|v| vec![v]);
    report.p2 = g
        .edges()
        .find(|&(u, v)| plus(u) && plus(v) && c.colour(u) + c.colour(v) != 1)
        .map(|(u, v)| vec![u, v]);
    for start in g.vertices().filter(|&v| c.colour(v) == 0) {
        let mut path = vec![start];
        let mut on_path = vec![false; g.n()];
        on_path[start] = true;
        scan_paths(g, c, &mut path, &mut on_path, &mut report);
    }
    Ok(report)
}

fn scan_paths(g: &Graph, c: &Colouring, path: &mut Vec<VertexId>, on_path: &mut [bool], r: &mut PropertyReport) {
    let last = *path.last().unwrap();
    let end = c.colour(last);
    match path.len() {
        3 if end == 0 && r.p3.is_none() => r.p3 = Some(path.clone()),
        4 if end == 1 && r.p4.is_none() => r.p4 = Some(path.clone()),
        6 if end == 0 && r.p6.is_none() => r.p6 = Some(path.clone()),
        _ => {}
    }
    if path.len() == 6 {
        return;
    }
    for &w in g.neighbours(last) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            scan_paths(g, c, path, on_path, r);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// First path `u, v, w, x` with `c(u)=0`, `c(v)=1` that does not continue
/// as `c(w)=2`, `c(x)=0`.
pub fn colour_propagation_violation(g: &Graph, c: &Colouring) -> Result<Option<[VertexId; 4]>> {
    c.check_domain(g)?;
    for u in g.vertices().filter(|&u| c.colour(u) == 0) {
        for &v in g.neighbours(u).iter().filter(|&&v| c.colour(v) == 1) {
            for &w in g.neighbours(v).iter().filter(|&&w| w != u) {
                for &x in g.neighbours(w).iter().filter(|&&x| x != v && x != u) {
                    if c.colour(w) != 2 || c.colour(x) != 0 {
                        return Ok(Some([u, v, w, x]));
                    }
                }
            }
        }
    }
    Ok(None)
}
