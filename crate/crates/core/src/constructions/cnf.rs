//! Positive 3-CNF formulas.

use crate::error::{Error, Result};

/// CNF formula without negations; every clause holds three distinct
/// variables from `0..num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveCnf {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl PositiveCnf {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidInput("formula needs at least one variable".into()));
        }
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&x) = c.iter().find(|&&x| x >= num_vars) {
                return Err(Error::InvalidInput(format!(
                    "clause {} uses variable {} but there are only {num_vars}",
                    j + 1,
                    x + 1
                )));
            }
            if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
                return Err(Error::InvalidInput(format!("clause {} repeats a variable", j + 1)));
            }
        }
        Ok(PositiveCnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Number of clauses each variable occurs in.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.num_vars];
        self.clauses.iter().flatten().for_each(|&x| occ[x] += 1);
        occ
    }

    /// Every variable occurs in exactly three clauses.
    pub fn is_cubic(&self) -> bool {
        self.occurrences().iter().all(|&o| o == 3)
    }

    /// Exactly one variable of every clause is true.
    pub fn is_one_in_three(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().filter(|&&x| assignment[x]).count() == 1)
    }

    /// First exactly-one-true assignment in binary counting order, by
    /// exhaustive search. Intended for small formulas.
    pub fn solve_one_in_three(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "exhaustive search is limited to 31 variables");
        (0u32..1 << self.num_vars)
            .map(|mask| (0..self.num_vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_one_in_three(a))
    }

    /// The four-variable, four-clause formula whose clauses are all
    /// three-subsets of `{x1, x2, x3, x4}`.
    pub fn k4_example() -> Self {
        PositiveCnf::new(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
    }
}
