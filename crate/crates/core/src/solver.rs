//! Exact backtracking solvers for proper, rs, star and ordered colourings.
//!
//! The search picks, at every node, the uncoloured vertex with the fewest
//! feasible colours (ties: higher degree, then lower index) and tries its
//! colours in ascending order. Feasibility of an assignment is checked
//! against the already-coloured vertices only, so every partial colouring
//! on the search path can still be a restriction of a valid one.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::colouring::{Colour, Colouring, PartialColouring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const NONE: usize = usize::MAX;

/// Limits on a single solver call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl SolveBudget {
    pub fn new(max_nodes: u64, time_limit: Duration) -> Self {
        SolveBudget { max_nodes, time_limit }
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_nodes: 10_000_000,
            time_limit: Duration::from_secs(120),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Proper,
    Rs,
    Star,
    Ordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub budget: SolveBudget,
    /// Worker threads for the root split; `1` runs inline.
    pub threads: usize,
    /// Restrict each new colour to at most one above the largest colour in
    /// use. Only honoured for the proper and star variants, and only when
    /// nothing is precoloured.
    pub symmetry_breaking: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: SolveBudget::default(),
            threads: 1,
            symmetry_breaking: true,
        }
    }
}

impl SolverOptions {
    pub fn with_budget(budget: SolveBudget) -> Self {
        SolverOptions {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Yes(Colouring),
    No,
    BudgetExceeded,
}

impl Outcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    /// `Some(decision)` unless the budget ran out.
    pub fn decision(&self) -> Option<bool> {
        match self {
            Outcome::Yes(_) => Some(true),
            Outcome::No => Some(false),
            Outcome::BudgetExceeded => None,
        }
    }

    pub fn witness(&self) -> Option<&Colouring> {
        match self {
            Outcome::Yes(c) => Some(c),
            _ => None,
        }
    }
}

enum Status {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Limits<'s> {
    budget: SolveBudget,
    start: Instant,
    nodes: &'s AtomicU64,
    stop: &'s AtomicBool,
}

impl Limits<'_> {
    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget.max_nodes {
            return false;
        }
        if n.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit {
            return false;
        }
        true
    }
}

#[derive(Clone)]
struct Search<'g> {
    g: &'g Graph,
    k: usize,
    variant: Variant,
    colour: Vec<usize>,
    /// `cnt[v * k + c]`: coloured neighbours of `v` with colour `c`.
    cnt: Vec<u32>,
    uncoloured: usize,
    symmetry: bool,
    max_used: Option<Colour>,
    // scratch buffers for the star and ordered checks
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<VertexId>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, variant: Variant, symmetry: bool) -> Self {
        let n = g.n();
        Search {
            g,
            k,
            variant,
            colour: vec![NONE; n],
            cnt: vec![0; n * k],
            uncoloured: n,
            symmetry: symmetry && matches!(variant, Variant::Proper | Variant::Star),
            max_used: None,
            mark: vec![0; n],
            stamp: 0,
            stack: Vec::new(),
        }
    }

    fn count(&self, v: VertexId, c: Colour) -> u32 {
        self.cnt[v * self.k + c]
    }

    fn assign(&mut self, v: VertexId, c: Colour) {
        self.colour[v] = c;
        self.uncoloured -= 1;
        for &w in self.g.neighbours(v) {
            self.cnt[w * self.k + c] += 1;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.colour[v];
        self.colour[v] = NONE;
        self.uncoloured += 1;
        for &w in self.g.neighbours(v) {
            self.cnt[w * self.k + c] -= 1;
        }
    }

    fn colour_limit(&self) -> usize {
        if self.symmetry {
            self.max_used.map_or(1, |m| m + 2).min(self.k)
        } else {
            self.k
        }
    }

    fn feasible(&mut self, v: VertexId, c: Colour) -> bool {
        if self.count(v, c) != 0 {
            return false;
        }
        match self.variant {
            Variant::Proper => true,
            Variant::Rs => self.rs_ok(v, c),
            Variant::Star => self.star_ok(v, c),
            Variant::Ordered => self.ordered_ok(v, c),
        }
    }

    fn rs_ok(&self, v: VertexId, c: Colour) -> bool {
        // a vertex in the top class has at most one neighbour in each lower class
        if c + 1 == self.k && self.g.degree(v) >= self.k {
            return false;
        }
        if (0..c).any(|i| self.count(v, i) > 1) {
            return false;
        }
        self.g
            .neighbours(v)
            .iter()
            .all(|&u| self.colour[u] == NONE || self.colour[u] < c || self.count(u, c) == 0)
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        self.stamp
    }

    /// Every two-colour component through `v` must stay a star.
    fn star_ok(&mut self, v: VertexId, c: Colour) -> bool {
        let g = self.g;
        let mut others: Vec<Colour> = g
            .neighbours(v)
            .iter()
            .map(|&u| self.colour[u])
            .filter(|&d| d != NONE)
            .collect();
        others.sort_unstable();
        others.dedup();
        for d in others {
            let stamp = self.next_stamp();
            self.mark[v] = stamp;
            self.stack.clear();
            self.stack.push(v);
            let (mut verts, mut edges2, mut maxdeg) = (0usize, 0usize, 0usize);
            while let Some(x) = self.stack.pop() {
                verts += 1;
                let mut deg = 0;
                for &y in g.neighbours(x) {
                    let cy = if y == v { c } else { self.colour[y] };
                    if cy == c || cy == d {
                        deg += 1;
                        if self.mark[y] != stamp {
                            self.mark[y] = stamp;
                            self.stack.push(y);
                        }
                    }
                }
                edges2 += deg;
                maxdeg = maxdeg.max(deg);
            }
            let tree = edges2 / 2 + 1 == verts;
            if !tree || (verts > 2 && maxdeg + 1 != verts) {
                return false;
            }
        }
        true
    }

    /// No two vertices of colour `i` may be joined through coloured
    /// vertices of colour below `i`.
    fn ordered_ok(&mut self, v: VertexId, c: Colour) -> bool {
        let g = self.g;
        for i in c..self.k {
            let stamp = self.next_stamp();
            self.mark[v] = stamp;
            self.stack.clear();
            self.stack.push(v);
            let mut found = usize::from(i == c);
            while let Some(x) = self.stack.pop() {
                for &y in g.neighbours(x) {
                    if self.mark[y] == stamp || self.colour[y] == NONE {
                        continue;
                    }
                    let cy = self.colour[y];
                    if cy < i {
                        self.mark[y] = stamp;
                        self.stack.push(y);
                    } else if cy == i {
                        self.mark[y] = stamp;
                        found += 1;
                        if found >= 2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Most constrained uncoloured vertex together with its feasible
    /// colours, or `None` when some vertex has none left.
    fn select(&mut self) -> Option<(VertexId, Vec<Colour>)> {
        let limit = self.colour_limit();
        // (feasible colours, fewer coloured neighbours, smaller degree): lower is better
        let mut best: Option<(VertexId, Vec<Colour>)> = None;
        let mut best_key = (usize::MAX, usize::MAX, usize::MAX);
        let mut cand = Vec::with_capacity(self.k);
        for v in 0..self.g.n() {
            if self.colour[v] != NONE {
                continue;
            }
            cand.clear();
            for c in 0..limit {
                if self.feasible(v, c) {
                    cand.push(c);
                }
            }
            if cand.is_empty() {
                return None;
            }
            let coloured: u32 = self.cnt[v * self.k..(v + 1) * self.k].iter().sum();
            let key = (
                cand.len(),
                usize::MAX - coloured as usize,
                usize::MAX - self.g.degree(v),
            );
            if best.is_none() || key < best_key {
                best = Some((v, cand.clone()));
                best_key = key;
            }
        }
        best
    }

    fn run(&mut self, lim: &Limits) -> Status {
        if self.uncoloured == 0 {
            return Status::Found;
        }
        if !lim.tick() {
            return Status::OutOfBudget;
        }
        let Some((v, cands)) = self.select() else {
            return Status::Exhausted;
        };
        self.try_colours(v, &cands, lim)
    }

    fn try_colours(&mut self, v: VertexId, cands: &[Colour], lim: &Limits) -> Status {
        let saved = self.max_used;
        for &c in cands {
            self.assign(v, c);
            self.max_used = Some(saved.map_or(c, |m| m.max(c)));
            let st = self.run(lim);
            if let Status::Found = st {
                return st;
            }
            self.max_used = saved;
            self.unassign(v);
            if let Status::OutOfBudget = st {
                return st;
            }
        }
        Status::Exhausted
    }

    /// Assigns the precoloured vertices, reporting `false` when they already
    /// conflict with each other.
    fn seed(&mut self, pre: &PartialColouring) -> bool {
        for (v, c) in pre.assigned() {
            if !self.feasible(v, c) {
                return false;
            }
            self.assign(v, c);
        }
        true
    }

    fn witness(&self) -> Colouring {
        Colouring::new(self.colour.clone(), self.k).expect("colours below k")
    }
}

fn check_pre(g: &Graph, k: usize, pre: Option<&PartialColouring>) -> Result<()> {
    if let Some(p) = pre {
        if p.len() != g.n() {
            return Err(Error::DomainMismatch {
                expected: g.n(),
                got: p.len(),
            });
        }
        if let Some((v, c)) = p.assigned().find(|&(_, c)| c >= k) {
            return Err(Error::ColourOutOfRange {
                vertex: v,
                colour: c,
                k,
            });
        }
    }
    Ok(())
}

/// Decides whether `g` has a `k`-colouring of the given variant extending
/// `pre`.
pub fn decide(
    g: &Graph,
    variant: Variant,
    k: usize,
    pre: Option<&PartialColouring>,
    opts: &SolverOptions,
) -> Result<Outcome> {
    check_pre(g, k, pre)?;
    if g.n() == 0 {
        return Ok(Outcome::Yes(Colouring::new(Vec::new(), k)?));
    }
    if k == 0 {
        return Ok(Outcome::No);
    }
    let has_pre = pre.is_some_and(|p| p.assigned().next().is_some());
    let mut search = Search::new(g, k, variant, opts.symmetry_breaking && !has_pre);
    if let Some(p) = pre {
        if !search.seed(p) {
            return Ok(Outcome::No);
        }
    }
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let lim = Limits {
        budget: opts.budget,
        start: Instant::now(),
        nodes: &nodes,
        stop: &stop,
    };
    let status = if opts.threads <= 1 {
        search.run(&lim)
    } else {
        match run_parallel(&mut search, opts.threads, &lim) {
            Some(found) => {
                search = found;
                Status::Found
            }
            None if nodes.load(Ordering::Relaxed) > opts.budget.max_nodes
                || lim.start.elapsed() > opts.budget.time_limit =>
            {
                Status::OutOfBudget
            }
            None => Status::Exhausted,
        }
    };
    Ok(match status {
        Status::Found => Outcome::Yes(search.witness()),
        Status::Exhausted => Outcome::No,
        Status::OutOfBudget => Outcome::BudgetExceeded,
    })
}

/// Splits the choices at the root vertex across scoped worker threads.
fn run_parallel<'g>(root: &mut Search<'g>, threads: usize, lim: &Limits) -> Option<Search<'g>> {
    if root.uncoloured == 0 {
        return Some(root.clone());
    }
    let (v, cands) = root.select()?;
    let result = std::sync::Mutex::new(None);
    std::thread::scope(|s| {
        for chunk in 0..threads.min(cands.len()) {
            let mine: Vec<Colour> = cands.iter().copied().skip(chunk).step_by(threads).collect();
            let mut local = root.clone();
            let result = &result;
            s.spawn(move || {
                if let Status::Found = local.try_colours(v, &mine, lim) {
                    lim.stop.store(true, Ordering::Relaxed);
                    result.lock().unwrap().get_or_insert(local);
                }
            });
        }
    });
    result.into_inner().unwrap()
}

pub fn decide_k_rs(g: &Graph, k: usize, pre: Option<&PartialColouring>, budget: SolveBudget) -> Result<Outcome> {
    decide(g, Variant::Rs, k, pre, &SolverOptions::with_budget(budget))
}

/// Smallest `k` admitting a colouring of the variant, with a witness.
/// The budget applies to each decision separately.
pub fn optimal_colouring(g: &Graph, variant: Variant, opts: &SolverOptions) -> Result<Colouring> {
    for k in 0..=g.n() {
        match decide(g, variant, k, None, opts)? {
            Outcome::Yes(c) => return Ok(c),
            Outcome::No => {}
            Outcome::BudgetExceeded => return Err(Error::BudgetExceeded),
        }
    }
    unreachable!("n colours always suffice")
}

pub fn chromatic_number(g: &Graph, budget: SolveBudget) -> Result<usize> {
    Ok(optimal_colouring(g, Variant::Proper, &SolverOptions::with_budget(budget))?.k())
}

pub fn rs_chromatic_number(g: &Graph, budget: SolveBudget) -> Result<usize> {
    Ok(optimal_colouring(g, Variant::Rs, &SolverOptions::with_budget(budget))?.k())
}

pub fn star_chromatic_number(g: &Graph, budget: SolveBudget) -> Result<usize> {
    Ok(optimal_colouring(g, Variant::Star, &SolverOptions::with_budget(budget))?.k())
}

pub fn ordered_chromatic_number(g: &Graph, budget: SolveBudget) -> Result<usize> {
    Ok(optimal_colouring(g, Variant::Ordered, &SolverOptions::with_budget(budget))?.k())
}

/// Calls `f` once for every colouring of `subset` (in `subset` order) that
/// extends to a full `k`-colouring of the variant. Returns the number of
/// such restrictions.
pub fn for_each_extendable_restriction<F>(
    g: &Graph,
    variant: Variant,
    k: usize,
    subset: &[VertexId],
    budget: SolveBudget,
    mut f: F,
) -> Result<usize>
where
    F: FnMut(&[Colour]),
{
    if let Some(&v) = subset.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut search = Search::new(g, k, variant, false);
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let lim = Limits {
        budget,
        start: Instant::now(),
        nodes: &nodes,
        stop: &stop,
    };
    let mut count = 0;
    let mut buf = Vec::with_capacity(subset.len());
    enumerate_prefix(&mut search, subset, &lim, &mut buf, &mut count, &mut f)?;
    Ok(count)
}

fn enumerate_prefix<F: FnMut(&[Colour])>(
    s: &mut Search,
    subset: &[VertexId],
    lim: &Limits,
    buf: &mut Vec<Colour>,
    count: &mut usize,
    f: &mut F,
) -> Result<()> {
    let Some((&v, rest)) = subset.split_first() else {
        let mut probe = s.clone();
        return match probe.run(lim) {
            Status::Found => {
                *count += 1;
                f(buf);
                Ok(())
            }
            Status::Exhausted => Ok(()),
            Status::OutOfBudget => Err(Error::BudgetExceeded),
        };
    };
    if s.colour[v] != NONE {
        return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
    }
    for c in 0..s.k {
        if s.feasible(v, c) {
            s.assign(v, c);
            buf.push(c);
            let r = enumerate_prefix(s, rest, lim, buf, count, f);
            buf.pop();
            s.unassign(v);
            r?;
        }
    }
    Ok(())
}

/// A maximum independent set, sorted, by branch and bound.
pub fn max_independent_set(g: &Graph, budget: SolveBudget) -> Result<Vec<VertexId>> {
    struct Mis<'a> {
        g: &'a Graph,
        alive: Vec<bool>,
        current: Vec<VertexId>,
        best: Vec<VertexId>,
        nodes: u64,
        budget: SolveBudget,
        start: Instant,
    }
    impl Mis<'_> {
        fn go(&mut self, remaining: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes
                || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit)
            {
                return Err(Error::BudgetExceeded);
            }
            if self.current.len() + remaining <= self.best.len() {
                return Ok(());
            }
            let live_deg = |v: VertexId, alive: &[bool]| self.g.neighbours(v).iter().filter(|&&w| alive[w]).count();
            // a vertex of live degree <= 1 can always be taken
            let pick = (0..self.g.n())
                .filter(|&v| self.alive[v])
                .map(|v| (live_deg(v, &self.alive), v))
                .min_by_key(|&(d, v)| (d > 1, std::cmp::Reverse(d), v));
            let Some((d, v)) = pick else {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                return Ok(());
            };
            // take v
            let removed: Vec<VertexId> = std::iter::once(v)
                .chain(self.g.neighbours(v).iter().copied())
                .filter(|&w| self.alive[w])
                .collect();
            removed.iter().for_each(|&w| self.alive[w] = false);
            self.current.push(v);
            let r = self.go(remaining - removed.len());
            self.current.pop();
            removed.iter().for_each(|&w| self.alive[w] = true);
            r?;
            if d > 1 {
                // skip v
                self.alive[v] = false;
                let r = self.go(remaining - 1);
                self.alive[v] = true;
                r?;
            }
            Ok(())
        }
    }
    let mut mis = Mis {
        g,
        alive: vec![true; g.n()],
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
        start: Instant::now(),
    };
    mis.go(g.n())?;
    mis.best.sort_unstable();
    Ok(mis.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{is_ordered, is_proper, is_rs, is_star};

    fn b() -> SolveBudget {
        SolveBudget::default()
    }

    fn dart() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]).unwrap()
    }

    #[test]
    fn dart_is_3rs() {
        let out = decide_k_rs(&dart(), 3, None, b()).unwrap();
        assert!(is_rs(&dart(), out.witness().unwrap()).unwrap());
        assert_eq!(rs_chromatic_number(&dart(), b()).unwrap(), 3);
    }

    #[test]
    fn small_chromatic_numbers() {
        assert_eq!(rs_chromatic_number(&Graph::empty(1), b()).unwrap(), 1);
        assert_eq!(rs_chromatic_number(&Graph::hypercube(3), b()).unwrap(), 4);
        assert_eq!(rs_chromatic_number(&Graph::path(6), b()).unwrap(), 3);
        assert_eq!(decide_k_rs(&Graph::path(4), 2, None, b()).unwrap(), Outcome::No);
        assert_eq!(star_chromatic_number(&Graph::cycle(4), b()).unwrap(), 3);
        assert_eq!(ordered_chromatic_number(&Graph::cycle(4), b()).unwrap(), 3);
        for n in 1..6 {
            let k = Graph::complete(n);
            assert_eq!(star_chromatic_number(&k, b()).unwrap(), n);
            assert_eq!(ordered_chromatic_number(&k, b()).unwrap(), n);
        }
        assert_eq!(chromatic_number(&Graph::cycle(5), b()).unwrap(), 3);
    }

    #[test]
    fn split_triangle_with_pendants() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(rs_chromatic_number(&g, b()).unwrap(), 4);
    }

    #[test]
    fn class_one_representative_blocks_extension() {
        // centre 1 with leaves 0 is a bicoloured P3 already
        let g = Graph::star(3);
        let pre = PartialColouring::from_assignments(4, 3, &[(0, 1), (1, 0), (2, 0), (3, 2)]).unwrap();
        assert_eq!(decide_k_rs(&g, 3, Some(&pre), b()).unwrap(), Outcome::No);
    }

    #[test]
    fn precolouring_is_respected() {
        let g = Graph::path(5);
        let pre = PartialColouring::from_assignments(5, 3, &[(0, 2), (4, 2)]).unwrap();
        let out = decide_k_rs(&g, 3, Some(&pre), b()).unwrap();
        let w = out.witness().unwrap();
        assert!(pre.is_extended_by(w));
        assert!(is_rs(&g, w).unwrap());
    }

    #[test]
    fn budget_is_reported() {
        let tiny = SolveBudget::new(3, Duration::from_secs(10));
        assert_eq!(
            decide_k_rs(&Graph::hypercube(3), 3, None, tiny).unwrap(),
            Outcome::BudgetExceeded
        );
        assert_eq!(
            rs_chromatic_number(&Graph::hypercube(3), tiny),
            Err(Error::BudgetExceeded)
        );
    }

    #[test]
    fn clique_of_high_degree_vertices_is_not_k_rs() {
        // K3 with a pendant on every vertex: all clique members have degree 3
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(decide_k_rs(&g, 3, None, b()).unwrap(), Outcome::No);
        let k4 = Graph::complete(4).attach_pendants(0, 1).unwrap();
        let k4 = (1..4).fold(k4, |h, v| h.attach_pendants(v, 1).unwrap());
        assert_eq!(decide_k_rs(&k4, 4, None, b()).unwrap(), Outcome::No);
    }

    #[test]
    fn independent_sets() {
        assert_eq!(max_independent_set(&Graph::cycle(5), b()).unwrap().len(), 2);
        assert_eq!(max_independent_set(&Graph::star(4), b()).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(max_independent_set(&dart(), b()).unwrap(), vec![0, 3, 4]);
        assert!(max_independent_set(&Graph::empty(0), b()).unwrap().is_empty());
    }

    #[test]
    fn restriction_enumeration() {
        // P3 with 2 rs colours: only 1,0,1
        let mut seen = Vec::new();
        let count =
            for_each_extendable_restriction(&Graph::path(3), Variant::Rs, 2, &[0, 2], b(), |r| seen.push(r.to_vec()))
                .unwrap();
        assert_eq!(count, 1);
        assert_eq!(seen, vec![vec![1, 1]]);
        let count = for_each_extendable_restriction(&Graph::path(3), Variant::Rs, 3, &[1], b(), |_| {}).unwrap();
        assert_eq!(count, 3);
    }

    #[test]
    fn parallel_matches_serial() {
        let opts = SolverOptions {
            threads: 3,
            ..Default::default()
        };
        for (g, k) in [
            (Graph::hypercube(3), 3),
            (Graph::hypercube(3), 4),
            (dart(), 3),
            (Graph::path(4), 2),
        ] {
            let par = decide(&g, Variant::Rs, k, None, &opts).unwrap();
            let ser = decide_k_rs(&g, k, None, b()).unwrap();
            assert_eq!(par.decision(), ser.decision());
            if let Some(w) = par.witness() {
                assert!(is_rs(&g, w).unwrap());
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn brute(g: &Graph, k: usize, check: fn(&Graph, &Colouring) -> Result<bool>) -> bool {
            let n = g.n();
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let cols: Vec<usize> = (0..n)
                    .map(|_| {
                        let c = code % k;
                        code /= k;
                        c
                    })
                    .collect();
                check(g, &Colouring::new(cols, k).unwrap()).unwrap()
            })
        }

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1usize..=max_n).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |pairs| {
                    let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
                    Graph::from_edge_list(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]

            #[test]
            fn decisions_match_brute_force(g in arb_graph(6), k in 1usize..=4) {
                let opts = SolverOptions::default();
                for (variant, check) in [
                    (Variant::Proper, is_proper as fn(&Graph, &Colouring) -> Result<bool>),
                    (Variant::Rs, is_rs),
                    (Variant::Star, is_star),
                    (Variant::Ordered, is_ordered),
                ] {
                    let out = decide(&g, variant, k, None, &opts).unwrap();
                    if let Some(w) = out.witness() {
                        prop_assert!(check(&g, w).unwrap());
                    }
                    prop_assert_eq!(out.decision(), Some(brute(&g, k, check)));
                }
            }

            #[test]
            fn symmetry_breaking_is_sound(g in arb_graph(8), k in 1usize..=4) {
                let on = SolverOptions::default();
                let off = SolverOptions { symmetry_breaking: false, ..on };
                for variant in [Variant::Proper, Variant::Rs, Variant::Star, Variant::Ordered] {
                    prop_assert_eq!(
                        decide(&g, variant, k, None, &on).unwrap().decision(),
                        decide(&g, variant, k, None, &off).unwrap().decision()
                    );
                }
            }

            #[test]
            fn rs_monotone_and_top_colour_degree(g in arb_graph(8), k in 1usize..=4) {
                let out = decide_k_rs(&g, k, None, b()).unwrap();
                if let Some(w) = out.witness() {
                    prop_assert!(decide_k_rs(&g, k + 1, None, b()).unwrap().is_yes());
                    for v in g.vertices() {
                        if w.colour(v) == k - 1 {
                            prop_assert!(g.degree(v) < k);
                        }
                    }
                }
            }

            #[test]
            fn mis_matches_subset_scan(g in arb_graph(10)) {
                let n = g.n();
                let best = (0u32..1 << n)
                    .filter(|&mask| g.edges().all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0))
                    .map(|mask| mask.count_ones() as usize)
                    .max()
                    .unwrap();
                let mis = max_independent_set(&g, b()).unwrap();
                prop_assert_eq!(mis.len(), best);
                prop_assert!(g.edges().all(|(u, v)| !(mis.contains(&u) && mis.contains(&v))));
            }
        }
    }
}
