//! Seeded random instance generators and labelled-tree enumeration.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::constructions::cnf::PositiveCnf;
use crate::graph::{Graph, VertexId};
use crate::hessian::{DenseMatrix, SparsityPattern};

pub use rand_chacha::ChaCha8Rng as InstanceRng;

pub fn rng(seed: u64) -> InstanceRng {
    use rand::SeedableRng;
    InstanceRng::seed_from_u64(seed)
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree in
/// linear time.
pub fn prufer_decode(seq: &[VertexId]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Calls `f` on every labelled tree on `n >= 2` vertices, `n^(n-2)` in all.
pub fn for_each_labelled_tree<F: FnMut(&Graph)>(n: usize, mut f: F) {
    assert!(n >= 2, "labelled trees are enumerated for n >= 2");
    let len = n - 2;
    let mut seq = vec![0; len];
    loop {
        f(&prufer_decode(&seq));
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Uniform random labelled tree.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let seq: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

/// `G(n, p)`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random graph with maximum degree exactly `max_deg`, built by inserting
/// shuffled vertex pairs while both ends stay below the cap. `None` when
/// `n` is too small to reach the cap.
pub fn random_graph_with_max_degree<R: Rng>(n: usize, max_deg: usize, rng: &mut R) -> Option<Graph> {
    if max_deg >= n {
        return None;
    }
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for _ in 0..64 {
        pairs.shuffle(rng);
        let target = rng.gen_range(1..=pairs.len());
        let mut deg = vec![0; n];
        let mut edges = Vec::new();
        for &(u, v) in &pairs[..target] {
            if deg[u] < max_deg && deg[v] < max_deg {
                deg[u] += 1;
                deg[v] += 1;
                edges.push((u, v));
            }
        }
        if deg.contains(&max_deg) {
            return Some(Graph::from_edge_list(n, &edges).unwrap());
        }
    }
    None
}

/// Connected chordal graph grown by adding simplicial vertices: each new
/// vertex joins a random clique containing a random existing vertex.
pub fn random_chordal<R: Rng>(n: usize, extra: f64, rng: &mut R) -> Graph {
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut cand = adj[u].clone();
        cand.shuffle(rng);
        for w in cand {
            if rng.gen_bool(extra) && clique.iter().all(|&x| adj[x].contains(&w)) {
                clique.push(w);
            }
        }
        for &x in &clique {
            adj[x].push(v);
            adj[v].push(x);
            edges.push((x, v));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Split graph: clique on `0..c`, independent set on `c..c+i`, each
/// crossing pair an edge with probability `p`.
pub fn random_split<R: Rng>(c: usize, i: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
        for w in c..c + i {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edge_list(c + i, &edges).unwrap()
}

/// Co-bipartite graph: cliques on `0..a` and `a..a+b`, each crossing pair
/// an edge with probability `p`.
pub fn random_cobipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let n = a + b;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same = (u < a) == (v < a);
            if same || rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random tree carrying a planted 3-rs colouring, grown one leaf at a
/// time. Returns the tree and the colouring.
pub fn random_3rs_tree<R: Rng>(n: usize, rng: &mut R) -> (Graph, Vec<u8>) {
    let mut colour: Vec<u8> = Vec::with_capacity(n);
    // seen[u][c]: u has a neighbour coloured c
    let mut seen: Vec<[bool; 3]> = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 0 {
        colour.push(rng.gen_range(0..3));
        seen.push([false; 3]);
    }
    while colour.len() < n {
        let u = rng.gen_range(0..colour.len());
        let cu = colour[u];
        let options: Vec<u8> = (0..3u8)
            .filter(|&c| c != cu && (c > cu || !seen[u][c as usize]))
            .collect();
        let Some(&c) = options.choose(rng) else { continue };
        let w = colour.len();
        colour.push(c);
        seen.push([false; 3]);
        seen[w][cu as usize] = true;
        seen[u][c as usize] = true;
        edges.push((u, w));
    }
    (Graph::from_edge_list(n, &edges).unwrap(), colour)
}

/// Positive 3-CNF on `num_vars` variables with `m` clauses, every variable
/// occurring at most three times, together with a planted assignment
/// making exactly one variable true per clause. Needs
/// `ceil(m/3) + ceil(2m/3) <= num_vars`.
pub fn random_planted_cnf<R: Rng>(num_vars: usize, m: usize, rng: &mut R) -> (PositiveCnf, Vec<bool>) {
    let (min_t, min_f) = (m.div_ceil(3).max(1), (2 * m).div_ceil(3).max(2));
    assert!(min_t + min_f <= num_vars, "too many clauses for {num_vars} variables");
    'retry: loop {
        let trues = rng.gen_range(min_t..=num_vars - min_f);
        let mut vars: Vec<usize> = (0..num_vars).collect();
        vars.shuffle(rng);
        let mut assignment = vec![false; num_vars];
        vars[..trues].iter().for_each(|&x| assignment[x] = true);
        let mut left = vec![3u8; num_vars];
        let mut clauses = Vec::with_capacity(m);
        for _ in 0..m {
            let open = |want: bool, left: &[u8]| -> Vec<usize> {
                (0..num_vars)
                    .filter(|&x| assignment[x] == want && left[x] > 0)
                    .collect()
            };
            let t = open(true, &left);
            let f = open(false, &left);
            if t.is_empty() || f.len() < 2 {
                continue 'retry;
            }
            let a = *t.choose(rng).unwrap();
            let mut two = f.choose_multiple(rng, 2).copied();
            let mut clause = [a, two.next().unwrap(), two.next().unwrap()];
            clause.iter().for_each(|&x| left[x] -= 1);
            clause.shuffle(rng);
            clauses.push(clause);
        }
        let cnf = PositiveCnf::new(num_vars, clauses).expect("planted clauses are well formed");
        return (cnf, assignment);
    }
}

/// Cubic positive 3-CNF: `num_vars` clauses in which every variable
/// occurs exactly three times and no clause repeats a variable.
pub fn random_cubic_cnf<R: Rng>(num_vars: usize, rng: &mut R) -> PositiveCnf {
    assert!(num_vars >= 3, "need at least three variables");
    let mut slots: Vec<usize> = (0..num_vars).flat_map(|x| [x, x, x]).collect();
    loop {
        slots.shuffle(rng);
        let clauses: Vec<[usize; 3]> = slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        if clauses.iter().all(|c| c[0] != c[1] && c[1] != c[2] && c[0] != c[2]) {
            return PositiveCnf::new(num_vars, clauses).unwrap();
        }
    }
}

/// Caterpillar: a spine of `spine_len + 1` vertices whose two ends each
/// carry `end_leaves` pendant leaves.
pub fn double_broom(spine_len: usize, end_leaves: usize) -> Graph {
    let spine = spine_len + 1;
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for end in [0, spine - 1] {
        for _ in 0..end_leaves {
            edges.push((end, next));
            next += 1;
        }
    }
    Graph::from_edge_list(next, &edges).unwrap()
}

/// Symmetric sparsity pattern: every off-diagonal pair is present with
/// probability `density`.
pub fn random_pattern<R: Rng>(n: usize, density: f64, rng: &mut R) -> SparsityPattern {
    let g = random_gnp(n, density, rng);
    SparsityPattern::from_pairs(n, &g.edge_list()).unwrap()
}

/// Symmetric matrix supported on `p` plus the diagonal, entries uniform in
/// `[-1, 1)` with no structural zero on the pattern.
pub fn random_symmetric_matrix<R: Rng>(p: &SparsityPattern, rng: &mut R) -> DenseMatrix<f64> {
    let n = p.n();
    let mut h = DenseMatrix::zeros(n, n);
    let draw = |rng: &mut R| loop {
        let x: f64 = rng.gen_range(-1.0..1.0);
        if x != 0.0 {
            break x;
        }
    };
    for i in 0..n {
        h.set(i, i, draw(rng));
    }
    for (i, j) in p.upper_pairs() {
        let x = draw(rng);
        h.set(i, j, x);
        h.set(j, i, x);
    }
    h
}
