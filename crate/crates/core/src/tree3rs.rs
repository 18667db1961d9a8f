//! Linear-time 3-rs colourability test for trees.
//!
//! The tree is rooted at a vertex of degree at least three and traversed
//! in post-order. Every maximal chain of degree-2 vertices below a 3-plus
//! vertex `v` ends in a leaf or another 3-plus vertex `u`; the rooted
//! subtree at `u` together with the chain is a *branch* of `v`, and its
//! class is read from [`BRANCH_TABLE`] using the class of the subtree at
//! `u` and the chain length (the up-distance). The branch classes seen at
//! `v` then fix the class of the subtree at `v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchClass {
    A,
    B,
    C,
    D,
    E,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubtreeClass {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl BranchClass {
    pub const ALL: [BranchClass; 6] = [Self::A, Self::B, Self::C, Self::D, Self::E, Self::F];
}

impl SubtreeClass {
    pub const ALL: [SubtreeClass; 7] = [Self::I, Self::II, Self::III, Self::IV, Self::V, Self::VI, Self::VII];
}

impl fmt::Display for BranchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for SubtreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

use BranchClass::{A, B, C, D, E, F};

/// Branch class by up-distance (rows 1..=10, the last row standing for
/// every up-distance of 10 or more) and subtree class II..VII (columns).
pub const BRANCH_TABLE: [[BranchClass; 6]; 10] = [
    [C, A, B, C, E, F],
    [D, B, E, F, F, F],
    [B, C, D, E, F, F],
    [E, D, F, F, F, F],
    [D, B, E, F, F, F],
    [F, E, F, F, F, F],
    [E, D, F, F, F, F],
    [F, F, F, F, F, F],
    [F, E, F, F, F, F],
    [F, F, F, F, F, F],
];

/// Class of the branch made of a subtree of class `subtree` hanging at
/// distance `up_distance` below a 3-plus vertex.
pub fn branch_class_lookup(subtree: SubtreeClass, up_distance: usize) -> Result<BranchClass> {
    if up_distance == 0 {
        return Err(Error::Precondition("up-distance must be positive".into()));
    }
    let col = match subtree {
        SubtreeClass::I => return Ok(A),
        SubtreeClass::II => 0,
        SubtreeClass::III => 1,
        SubtreeClass::IV => 2,
        SubtreeClass::V => 3,
        SubtreeClass::VI => 4,
        SubtreeClass::VII => 5,
    };
    Ok(BRANCH_TABLE[up_distance.min(10) - 1][col])
}

/// Class of the subtree at `v` once all its branches are scanned.
/// `colour_v` is -1 when `v` is still uncoloured. Class I means the tree
/// is not 3-rs colourable.
pub fn subtree_class_from_state(colour_v: i8, c_count: usize, e_count: usize, is_leaf: bool) -> SubtreeClass {
    match colour_v {
        0 => SubtreeClass::II,
        1 => match c_count + e_count {
            0 => SubtreeClass::IV,
            1 => SubtreeClass::III,
            _ => SubtreeClass::I,
        },
        _ if is_leaf => SubtreeClass::VII,
        _ => match e_count {
            0 => SubtreeClass::VI,
            1 => SubtreeClass::V,
            _ => SubtreeClass::II,
        },
    }
}

/// Whether a path on `n` vertices has a 3-rs colouring whose end colours
/// are `i` and `j` (both binary).
pub fn path_3rs_feasible(n: usize, i: u8, j: u8) -> Result<bool> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "path needs at least two vertices, got {n}"
        )));
    }
    if i > 1 || j > 1 {
        return Err(Error::Precondition("end colours must be 0 or 1".into()));
    }
    Ok(!matches!(
        (n, i == j, i),
        (2, true, _) | (3, true, 0) | (4, false, _) | (6, true, 0)
    ))
}

/// Why a tree was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// The branch hanging from `head` below the 3-plus vertex `anchor` is
    /// in class A.
    ClassABranch { head: VertexId, anchor: VertexId },
    /// The subtree rooted at `at` is in class I.
    ClassISubtree { at: VertexId },
    /// `at` was forced to both colour 0 and colour 1.
    ColourConflict { at: VertexId },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::ClassABranch { head, anchor } => {
                write!(f, "class A branch at vertex {} (from {})", anchor + 1, head + 1)
            }
            Reason::ClassISubtree { at } => write!(f, "class I subtree at {}", at + 1),
            Reason::ColourConflict { at } => write!(f, "colour conflict at {}", at + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Colourable,
    NotColourable(Reason),
}

impl Verdict {
    pub fn is_colourable(&self) -> bool {
        matches!(self, Verdict::Colourable)
    }
}

/// Mutable per-run bookkeeping of the traversal.
#[derive(Debug, Clone)]
pub struct TraversalState {
    pub dist: usize,
    /// -1 uncoloured, otherwise 0 or 1.
    pub colour: Vec<i8>,
    /// Saturating; only 0, 1 and "at least 2" matter.
    pub class_c_count: Vec<u8>,
    pub class_e_count: Vec<u8>,
}

impl TraversalState {
    pub fn new(n: usize) -> Self {
        TraversalState {
            dist: 0,
            colour: vec![-1; n],
            class_c_count: vec![0; n],
            class_e_count: vec![0; n],
        }
    }

    /// Colours `v` with `col` unless it already has the other binary colour.
    pub fn try_to_colour(&mut self, v: VertexId, col: u8) -> std::result::Result<(), Reason> {
        let col = col as i8;
        match self.colour[v] {
            -1 => {
                self.colour[v] = col;
                Ok(())
            }
            c if c == col => Ok(()),
            _ => Err(Reason::ColourConflict { at: v }),
        }
    }

    /// Records a branch of class `class` at `v`.
    fn absorb(&mut self, v: VertexId, class: BranchClass) -> std::result::Result<(), Reason> {
        match class {
            A => unreachable!("class A is rejected before it is absorbed"),
            B => self.try_to_colour(v, 0),
            C => {
                self.class_c_count[v] = self.class_c_count[v].saturating_add(1);
                self.try_to_colour(v, 1)
            }
            D => self.try_to_colour(v, 1),
            E => {
                self.class_e_count[v] = self.class_e_count[v].saturating_add(1);
                Ok(())
            }
            F => Ok(()),
        }
    }

    fn classify(&self, v: VertexId, is_leaf: bool) -> SubtreeClass {
        subtree_class_from_state(
            self.colour[v],
            self.class_c_count[v] as usize,
            self.class_e_count[v] as usize,
            is_leaf,
        )
    }
}

/// Result of a traversal with the number of vertices it visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeTestReport {
    pub verdict: Verdict,
    pub visited: usize,
}

/// Tests a tree for 3-rs colourability, rooted at its lowest-indexed
/// 3-plus vertex. Trees without a 3-plus vertex are paths and always
/// colourable.
pub fn test_3rs_tree(g: &Graph) -> Result<Verdict> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    match g.vertices().find(|&v| g.degree(v) >= 3) {
        Some(root) => Ok(traverse(g, root).verdict),
        None => Ok(Verdict::Colourable),
    }
}

/// Runs the traversal on a tree rooted at the given 3-plus vertex.
pub fn test_3rs_rooted(g: &Graph, root: VertexId) -> Result<TreeTestReport> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
    }
    if g.degree(root) < 3 {
        return Err(Error::Precondition("root must have degree at least three".into()));
    }
    Ok(traverse(g, root))
}

struct Frame {
    v: VertexId,
    parent: VertexId,
    next: usize,
    up_distance: usize,
}

fn traverse(g: &Graph, root: VertexId) -> TreeTestReport {
    let mut st = TraversalState::new(g.n());
    let mut visited = 1;
    let mut frames = vec![Frame {
        v: root,
        parent: usize::MAX,
        next: 0,
        up_distance: 0,
    }];
    let reject = |reason, visited| TreeTestReport {
        verdict: Verdict::NotColourable(reason),
        visited,
    };
    while let Some(top) = frames.last_mut() {
        let v = top.v;
        let nb = g.neighbours(v);
        if top.next < nb.len() && nb[top.next] == top.parent {
            top.next += 1;
        }
        if top.next < nb.len() {
            let w = nb[top.next];
            top.next += 1;
            // follow the chain of degree-2 vertices down to its head
            let (mut prev, mut head) = (v, w);
            st.dist = 1;
            visited += 1;
            while g.degree(head) == 2 {
                let [a, b] = [g.neighbours(head)[0], g.neighbours(head)[1]];
                (prev, head) = (head, if a == prev { b } else { a });
                st.dist += 1;
                visited += 1;
            }
            if g.degree(head) == 1 {
                let class = branch_class_lookup(SubtreeClass::VII, st.dist).expect("dist >= 1");
                if class == A {
                    return reject(Reason::ClassABranch { head, anchor: v }, visited);
                }
                if let Err(r) = st.absorb(v, class) {
                    return reject(r, visited);
                }
            } else {
                frames.push(Frame {
                    v: head,
                    parent: prev,
                    next: 0,
                    up_distance: st.dist,
                });
            }
            continue;
        }
        // all branches of v are in
        let up_distance = top.up_distance;
        frames.pop();
        let class = st.classify(v, false);
        if class == SubtreeClass::I {
            return reject(Reason::ClassISubtree { at: v }, visited);
        }
        let Some(parent) = frames.last() else {
            return TreeTestReport {
                verdict: Verdict::Colourable,
                visited,
            };
        };
        let anchor = parent.v;
        let branch = branch_class_lookup(class, up_distance).expect("dist >= 1");
        if branch == A {
            return reject(Reason::ClassABranch { head: v, anchor }, visited);
        }
        if let Err(r) = st.absorb(anchor, branch) {
            return reject(r, visited);
        }
    }
    unreachable!("the root frame always returns")
}
