//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p rscolour --test acceptance`. Extra arguments
//! that are plain numbers select criteria.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use rscolour::chordal::{test_3rs_chordal, ChordalReason, ChordalVerdict};
use rscolour::colouring::{is_ordered, is_proper, is_rs, rs_path_witness, rs_violation, Colouring, PartialColouring};
use rscolour::constructions::{
    assignment_to_3rs_colouring, colouring_lift, colouring_to_assignment, edge_blowup, g_plus, rs_to_proper_extraction,
    sat_to_graph, split_rs_chromatic, star_to_ordered_cobipartite, CoBipartitePartition, GadgetVariant, PositiveCnf,
    SplitPartition,
};
use rscolour::generate::{
    double_broom, for_each_labelled_tree, random_3rs_tree, random_chordal, random_cobipartite,
    random_graph_with_max_degree, random_pattern, random_planted_cnf, random_split, random_symmetric_matrix,
    random_tree, rng,
};
use rscolour::hessian::{compress, pattern_to_graph, recover, GreedyOrder, SeedGrouping};
use rscolour::solver::{
    decide_k_rs, max_independent_set, optimal_colouring, ordered_chromatic_number, rs_chromatic_number,
    star_chromatic_number, SolveBudget, SolverOptions, Variant,
};
use rscolour::tree3rs::{path_3rs_feasible, test_3rs_rooted, test_3rs_tree, Reason, Verdict};
use rscolour::Graph;

const HESSIAN_TOL: f64 = 1e-12;
const LINEARITY_RATIO: f64 = 2.0;
const REVERSE_NODE_BUDGET: u64 = 10_000_000;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn budget() -> SolveBudget {
    SolveBudget::default()
}

fn rs3(g: &Graph) -> bool {
    decide_k_rs(g, 3, None, budget())
        .map_err(|e| e.to_string())
        .and_then(|o| o.decision().ok_or_else(|| "budget exceeded".into()))
        .expect("3-rs decision")
}

fn dart() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]).unwrap()
}

fn c01_dart() -> Check {
    let g = dart();
    // x, z -> 1; y -> 0; v, w -> 2
    let good = Colouring::new(vec![1, 0, 1, 2, 2], 3).unwrap();
    ensure(is_rs(&g, &good).unwrap(), || "reference colouring rejected".into())?;
    let bad = Colouring::new(vec![1, 2, 1, 2, 2], 3).unwrap();
    ensure(!is_rs(&g, &bad).unwrap(), || "recoloured y accepted".into())?;
    ensure(rs_violation(&g, &bad).unwrap().is_some(), || {
        "no violation reported".into()
    })?;
    let w = rs_path_witness(&g, &bad).unwrap();
    ensure(w == Some([0, 1, 2]), || format!("expected witness x,y,z, got {w:?}"))?;
    Ok("witness x-y-z".into())
}

fn c02_paths() -> Check {
    let mut infeasible = Vec::new();
    for n in 2..=12 {
        for i in 0..2u8 {
            for j in 0..2u8 {
                let fast = path_3rs_feasible(n, i, j).map_err(|e| e.to_string())?;
                let pre = PartialColouring::from_assignments(n, 3, &[(0, i as usize), (n - 1, j as usize)]).unwrap();
                let exact = decide_k_rs(&Graph::path(n), 3, Some(&pre), budget()).unwrap().is_yes();
                ensure(fast == exact, || {
                    format!("n={n} i={i} j={j}: formula {fast}, solver {exact}")
                })?;
                if !fast {
                    infeasible.push((n, i, j));
                }
            }
        }
    }
    let expected = vec![(2, 0, 0), (2, 1, 1), (3, 0, 0), (4, 0, 1), (4, 1, 0), (6, 0, 0)];
    ensure(infeasible == expected, || format!("infeasible set {infeasible:?}"))?;
    Ok(format!("{} cases, infeasible {infeasible:?}", 11 * 4))
}

fn c03_tree_oracle() -> Check {
    let max_n = 9;
    let (mut labelled, mut labelled_no) = (0u64, 0u64);
    let mut bad = None;
    for n in 2..=max_n {
        for_each_labelled_tree(n, |g| {
            labelled += 1;
            let fast = test_3rs_tree(g).unwrap().is_colourable();
            labelled_no += !fast as u64;
            if bad.is_none() && fast != rs3(g) {
                bad = Some(g.edge_list());
            }
        });
    }
    if let Some(e) = bad {
        return Err(format!("disagreement on {e:?}"));
    }
    let mut r = rng(3);
    let mut random_no = 0;
    for _ in 0..10_000 {
        let n = r.gen_range(10..=16);
        let g = random_tree(n, &mut r);
        let fast = test_3rs_tree(&g).unwrap().is_colourable();
        ensure(fast == rs3(&g), || format!("disagreement on {:?}", g.edge_list()))?;
        random_no += !fast as u64;
    }
    Ok(format!(
        "{labelled} labelled trees n<={max_n} ({labelled_no} not colourable), 10^4 random n in 10..16 ({random_no} not colourable)"
    ))
}

/// The worked example: vertices A..N are 0..13.
fn worked_tree() -> Graph {
    let id = |c: char| c as usize - 'A' as usize;
    let edges: Vec<(usize, usize)> = [
        "AC", "CE", "EG", "GH", "HI", "IN", "NM", "ML", "CB", "ED", "GF", "NJ", "MK",
    ]
    .iter()
    .map(|s| {
        let mut ch = s.chars();
        (id(ch.next().unwrap()), id(ch.next().unwrap()))
    })
    .collect();
    Graph::from_edge_list(14, &edges).unwrap()
}

fn c04_worked_tree() -> Check {
    let g = worked_tree();
    let n = 'N' as usize - 'A' as usize;
    let report = test_3rs_rooted(&g, n).unwrap();
    let want = Verdict::NotColourable(Reason::ClassISubtree { at: n });
    ensure(report.verdict == want, || format!("got {:?}", report.verdict))?;
    ensure(!test_3rs_tree(&g).unwrap().is_colourable(), || {
        "default rooting accepts".into()
    })?;
    ensure(!rs3(&g), || "solver finds a 3-rs colouring".into())?;
    Ok("class I subtree at N".into())
}

/// Hangs one of a few small decorations on `v`, appending new vertices.
fn decorate(edges: &mut Vec<(usize, usize)>, next: &mut usize, v: usize, kind: usize) {
    let mut leaf = |edges: &mut Vec<(usize, usize)>, from: usize| {
        edges.push((from, *next));
        *next += 1;
        *next - 1
    };
    match kind {
        0 => {
            leaf(edges, v);
            leaf(edges, v);
        }
        1 => {
            leaf(edges, v);
            leaf(edges, v);
            leaf(edges, v);
        }
        2 => {
            leaf(edges, v);
            let x = leaf(edges, v);
            leaf(edges, x);
        }
        3 => {
            let x = leaf(edges, v);
            leaf(edges, x);
            let y = leaf(edges, v);
            leaf(edges, y);
        }
        _ => {
            let x = leaf(edges, v);
            leaf(edges, x);
            leaf(edges, x);
            leaf(edges, v);
        }
    }
}

fn c05_saturation() -> Check {
    let mut count = 0;
    let mut yes = 0;
    for len in 8..=16 {
        let g = double_broom(len, 2);
        ensure(test_3rs_tree(&g).unwrap().is_colourable() == rs3(&g), || {
            format!("double broom {len}")
        })?;
        count += 1;
        for a in 0..5 {
            for b in 0..5 {
                let mut edges: Vec<(usize, usize)> = (1..=len).map(|i| (i - 1, i)).collect();
                let mut next = len + 1;
                decorate(&mut edges, &mut next, 0, a);
                decorate(&mut edges, &mut next, len, b);
                let g = Graph::from_edge_list(next, &edges).unwrap();
                let fast = test_3rs_tree(&g).unwrap().is_colourable();
                ensure(fast == rs3(&g), || format!("spine {len}, ends {a}/{b}: tester {fast}"))?;
                count += 1;
                yes += fast as usize;
            }
        }
    }
    Ok(format!("{count} caterpillars, {yes} colourable"))
}

fn c06_chordal() -> Check {
    let mut r = rng(6);
    let mut yes = 0;
    for _ in 0..1000 {
        let n = r.gen_range(1..=10);
        let extra = r.gen_range(0.0..=1.0);
        let g = random_chordal(n, extra, &mut r);
        let fast = test_3rs_chordal(&g).map_err(|e| e.to_string())?.verdict.is_colourable();
        ensure(fast == rs3(&g), || format!("disagreement on {:?}", g.edge_list()))?;
        yes += fast as usize;
    }
    let k4 = test_3rs_chordal(&Graph::complete(4)).unwrap().verdict;
    ensure(
        matches!(
            k4,
            ChordalVerdict::NotColourable {
                reason: ChordalReason::TypeITriangle(_),
                ..
            }
        ),
        || format!("K4 gave {k4:?}"),
    )?;
    Ok(format!("1000 graphs, {yes} colourable; K4 type-I"))
}

fn c07_hypercubes() -> Check {
    let mut got = Vec::new();
    for d in 2..=3 {
        let chi = rs_chromatic_number(&Graph::hypercube(d), budget()).map_err(|e| e.to_string())?;
        ensure(chi == d as usize + 1, || format!("Q{d}: {chi}"))?;
        got.push(chi);
    }
    Ok(format!("Q2 -> {}, Q3 -> {}", got[0], got[1]))
}

fn c08_split() -> Check {
    let mut r = rng(8);
    for _ in 0..200 {
        let c = r.gen_range(0..=6);
        let i = r.gen_range(0..=10 - c);
        if c + i == 0 {
            continue;
        }
        let p = r.gen_range(0.0..=1.0);
        let g = random_split(c, i, p, &mut r);
        let part = SplitPartition {
            clique: (0..c).collect(),
            independent: (c..c + i).collect(),
        };
        let formula = split_rs_chromatic(&g, &part).map_err(|e| e.to_string())?;
        let exact = rs_chromatic_number(&g, budget()).map_err(|e| e.to_string())?;
        let alpha = max_independent_set(&g, budget()).map_err(|e| e.to_string())?.len();
        ensure(formula == exact && exact == g.n() - alpha + 1, || {
            format!(
                "{:?}: formula {formula}, solver {exact}, n-a+1 {}",
                g.edge_list(),
                g.n() - alpha + 1
            )
        })?;
    }
    Ok("200 split graphs".into())
}

fn c09_gplus() -> Check {
    let mut r = rng(9);
    let mut done = 0;
    let mut yes = 0;
    while done < 200 {
        let k = r.gen_range(2..=3);
        let n = r.gen_range(k + 1..=8);
        let Some(g) = random_graph_with_max_degree(n, k, &mut r) else {
            continue;
        };
        let a = decide_k_rs(&g, k, None, budget()).unwrap().decision();
        let b = decide_k_rs(&g_plus(&g), k + 1, None, budget()).unwrap().decision();
        ensure(a.is_some() && a == b, || {
            format!("{:?} k={k}: {a:?} vs {b:?}", g.edge_list())
        })?;
        yes += a.unwrap() as usize;
        done += 1;
    }
    Ok(format!("200 graphs, {yes} yes"))
}

fn c10_sat_forward() -> Check {
    let mut r = rng(10);
    for round in 0..50 {
        let nv = r.gen_range(3..=10);
        let m = r.gen_range(1..nv);
        let (f, planted) = random_planted_cnf(nv, m, &mut r);
        for (variant, min_girth) in [(GadgetVariant::Basic, 6), (GadgetVariant::Girth(2), 16)] {
            let gg = sat_to_graph(&f, variant).map_err(|e| e.to_string())?;
            let g = &gg.graph;
            let c = assignment_to_3rs_colouring(&f, &gg, &planted).map_err(|e| e.to_string())?;
            let tag = || format!("round {round} {variant:?}");
            ensure(is_rs(g, &c).unwrap(), || format!("{}: colouring rejected", tag()))?;
            let back = colouring_to_assignment(&f, &gg, &c).map_err(|e| e.to_string())?;
            ensure(f.is_one_in_three(&back), || format!("{}: decoded assignment", tag()))?;
            ensure(g.is_bipartite(), || format!("{}: not bipartite", tag()))?;
            ensure(g.max_degree() <= 3, || {
                format!("{}: max degree {}", tag(), g.max_degree())
            })?;
            let girth = g.girth().unwrap_or(usize::MAX);
            ensure(girth >= min_girth, || format!("{}: girth {girth}", tag()))?;
            ensure(g.degeneracy() <= 2, || {
                format!("{}: degeneracy {}", tag(), g.degeneracy())
            })?;
        }
    }
    Ok("50 formulas, both variants".into())
}

fn c11_sat_reverse() -> Check {
    let f = PositiveCnf::k4_example();
    let sat = (0..16u32).any(|mask| f.is_one_in_three(&(0..4).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()));
    ensure(!sat, || "formula has a 1-in-3 assignment".into())?;
    let gg = sat_to_graph(&f, GadgetVariant::Basic).unwrap();
    ensure(gg.graph.n() == 40, || format!("gadget has {} vertices", gg.graph.n()))?;
    let start = Instant::now();
    let out = decide_k_rs(
        &gg.graph,
        3,
        None,
        SolveBudget::new(REVERSE_NODE_BUDGET, Duration::from_secs(600)),
    )
    .unwrap();
    ensure(out.decision() == Some(false), || format!("solver said {out:?}"))?;
    Ok(format!("unsatisfiable; 40-vertex gadget NO in {:.2?}", start.elapsed()))
}

fn c12_blowup() -> Check {
    let mut r = rng(12);
    let mut done = 0;
    let mut strict = 0;
    let mut patterns = 0;
    while done < 100 {
        let n = r.gen_range(2..=7);
        let g = rscolour::generate::random_gnp(n, r.gen_range(0.2..=0.8), &mut r);
        if g.m() == 0 {
            continue;
        }
        let bu = edge_blowup(&g).unwrap();
        let pc = optimal_colouring(&g, Variant::Proper, &SolverOptions::default()).unwrap();
        let chi = pc.k();
        let lifted = colouring_lift(&g, &bu, &pc).unwrap();
        ensure(lifted.k() == chi + 1 && is_rs(&bu.graph, &lifted).unwrap(), || {
            format!("{:?}: lift rejected", g.edge_list())
        })?;
        let back = rs_to_proper_extraction(&g, &bu, &lifted).unwrap();
        ensure(back.k() == chi && is_proper(&g, &back).unwrap(), || {
            format!("{:?}: extraction failed", g.edge_list())
        })?;
        if chi <= bu.delta {
            // every (chi+1)-rs colouring of the blow-up restricts to a proper
            // chi-colouring iff no colouring puts the top colour on a
            // non-isolated original vertex or one colour on an original edge
            let no = |pairs: &[(usize, usize)]| -> Result<(), String> {
                let pre = PartialColouring::from_assignments(bu.graph.n(), chi + 1, pairs).unwrap();
                match decide_k_rs(&bu.graph, chi + 1, Some(&pre), budget())
                    .unwrap()
                    .decision()
                {
                    Some(false) => Ok(()),
                    Some(true) => Err(format!("{:?}: colouring with {pairs:?} exists", g.edge_list())),
                    None => Err(format!("{:?}: budget exceeded", g.edge_list())),
                }
            };
            for v in g.vertices().filter(|&v| g.degree(v) > 0) {
                no(&[(v, chi)])?;
                patterns += 1;
            }
            for (u, v) in g.edges() {
                for c in 0..chi {
                    no(&[(u, c), (v, c)])?;
                    patterns += 1;
                }
            }
            strict += 1;
        }
        done += 1;
    }
    Ok(format!(
        "100 graphs; {strict} with chi <= max degree, {patterns} bad patterns refuted"
    ))
}

fn c13_cobipartite() -> Check {
    let mut r = rng(13);
    for _ in 0..100 {
        let a = r.gen_range(1..=5);
        let b = r.gen_range(0..=10 - a);
        let g = random_cobipartite(a, b, r.gen_range(0.0..=1.0), &mut r);
        let s = star_chromatic_number(&g, budget()).map_err(|e| e.to_string())?;
        let rs = rs_chromatic_number(&g, budget()).map_err(|e| e.to_string())?;
        let o = ordered_chromatic_number(&g, budget()).map_err(|e| e.to_string())?;
        ensure(s == rs && rs == o, || {
            format!("{:?}: star {s}, rs {rs}, ordered {o}", g.edge_list())
        })?;
        let sc = optimal_colouring(&g, Variant::Star, &SolverOptions::default()).unwrap();
        let part = CoBipartitePartition {
            a: (0..a).collect(),
            b: (a..a + b).collect(),
        };
        let oc = star_to_ordered_cobipartite(&g, &part, &sc).map_err(|e| e.to_string())?;
        ensure(is_ordered(&g, &oc).unwrap() && oc.k() == s, || {
            format!("{:?}: conversion gave {:?}", g.edge_list(), oc.as_slice())
        })?;
    }
    Ok("100 co-bipartite graphs".into())
}

fn c14_hessian() -> Check {
    let mut r = rng(14);
    let mut worst = 0.0f64;
    let mut max_groups = 0;
    for _ in 0..100 {
        let n = r.gen_range(1..=30);
        let p = random_pattern(n, r.gen_range(0.0..=0.3), &mut r);
        let h = random_symmetric_matrix(&p, &mut r);
        for order in [GreedyOrder::Natural, GreedyOrder::LargestDegreeFirst] {
            let s = SeedGrouping::greedy(&p, order);
            ensure(is_rs(&pattern_to_graph(&p), s.colouring()).unwrap(), || {
                "greedy grouping not rs".into()
            })?;
            let b = compress(&h, &p, &s).map_err(|e| e.to_string())?;
            let back = recover(&b, &p, &s).map_err(|e| e.to_string())?;
            worst = worst.max(back.max_abs_diff(&h));
            max_groups = max_groups.max(s.k());
        }
    }
    ensure(worst <= HESSIAN_TOL, || format!("max error {worst:e}"))?;
    Ok(format!("max error {worst:e}, at most {max_groups} groups"))
}

/// Vertices in DFS preorder from 0. Relabelling a tree this way keeps the
/// tester's memory accesses local, so the timing reflects operation
/// counts rather than cache capacity.
fn dfs_preorder(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        order.push(v);
        stack.extend(g.neighbours(v).iter().rev().filter(|&&w| !seen[w]));
    }
    order
}

fn c15_linearity() -> Check {
    let mut per_vertex = Vec::new();
    let mut r = rng(15);
    for n in [10_000, 100_000, 1_000_000] {
        let (g, _) = random_3rs_tree(n, &mut r);
        let (g, _) = g.induced_subgraph(&dfs_preorder(&g));
        let mut runs = Vec::new();
        for _ in 0..7 {
            let t = Instant::now();
            let v = test_3rs_tree(&g).unwrap();
            runs.push(t.elapsed());
            ensure(v.is_colourable(), || format!("planted tree n={n} rejected"))?;
        }
        runs.sort();
        let median = runs[runs.len() / 2];
        per_vertex.push(median.as_secs_f64() / n as f64);
    }
    let hi = per_vertex.iter().cloned().fold(0.0, f64::max);
    let lo = per_vertex.iter().cloned().fold(f64::MAX, f64::min);
    let ns: Vec<String> = per_vertex.iter().map(|x| format!("{:.0}ns", x * 1e9)).collect();
    ensure(hi <= LINEARITY_RATIO * lo, || format!("time per vertex {ns:?}"))?;
    Ok(format!("time per vertex {}", ns.join(" / ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        ("dart instance", c01_dart),
        ("path end colours", c02_paths),
        ("tree oracle equivalence", c03_tree_oracle),
        ("worked tree example", c04_worked_tree),
        ("up-distance saturation", c05_saturation),
        ("chordal oracle equivalence", c06_chordal),
        ("hypercubes", c07_hypercubes),
        ("split formula", c08_split),
        ("pendant padding", c09_gplus),
        ("sat reduction forward", c10_sat_forward),
        ("sat reduction reverse", c11_sat_reverse),
        ("blow-up reduction", c12_blowup),
        ("co-bipartite equality", c13_cobipartite),
        ("hessian roundtrip", c14_hessian),
        ("tree tester linearity", c15_linearity),
    ];
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
