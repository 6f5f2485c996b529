//! Exact two-phase primal simplex over the rationals.
//!
//! Dense full-tableau implementation for the LP sizes this crate meets
//! (tens of rows after dualization, a few thousand columns).  Everything is
//! `BigRational`, so there is no tolerance tuning: a pivot element is either
//! zero or it is not, and the reported optimum is exact.
//!
//! Pivoting uses Dantzig's rule (most negative reduced cost) and switches to
//! Bland's rule permanently once a run of degenerate pivots exceeds a fixed
//! limit, which guarantees termination on degenerate problems (e.g. Beale's
//! cycling example) while keeping the fast rule on the common path.

use crate::rational::Rational;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug)]
pub(crate) enum SimplexError {
    Shape(String),
    Internal(&'static str),
}

impl fmt::Display for SimplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplexError::Shape(s) => write!(f, "malformed linear program: {s}"),
            SimplexError::Internal(s) => write!(f, "simplex invariant violated: {s}"),
        }
    }
}

impl std::error::Error for SimplexError {}

/// Result of minimizing `c·x` subject to `A x = b`, `x ≥ 0`.
#[derive(Debug, Clone)]
pub(crate) enum SimplexOutcome {
    Optimal {
        x: Vec<Rational>,
        objective: Rational,
        /// Reduced costs of all `n` columns at the optimal basis (≥ 0).
        reduced_costs: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_PIVOT_LIMIT: u32 = 64;

struct Tableau {
    /// `B⁻¹ A`, dense, `basis.len()` rows by `width` columns.
    rows: Vec<Vec<Rational>>,
    /// `B⁻¹ b` (always ≥ 0).
    rhs: Vec<Rational>,
    /// Reduced-cost row for the current phase objective.
    cost: Vec<Rational>,
    /// Current phase objective value (to be minimized).
    obj: Rational,
    basis: Vec<usize>,
    width: usize,
    bland: bool,
    degenerate_run: u32,
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn entering(&self) -> Option<usize> {
        if self.bland {
            (0..self.width).find(|&j| self.cost[j].is_negative())
        } else {
            let mut best: Option<usize> = None;
            for j in 0..self.width {
                if self.cost[j].is_negative()
                    && best.map_or(true, |b| self.cost[j] < self.cost[b])
                {
                    best = Some(j);
                }
            }
            best
        }
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for i in 0..self.rows.len() {
            if self.rows[i][col].is_positive() {
                let ratio = &self.rhs[i] / &self.rows[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v /= &piv;
            }
        }
        self.rhs[row] /= &piv;

        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut self.rows[i][col], Rational::zero());
            for j in 0..self.width {
                if j == col {
                    continue;
                }
                if !self.rows[row][j].is_zero() {
                    let delta = &factor * &self.rows[row][j];
                    self.rows[i][j] -= delta;
                }
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[i] -= delta;
        }

        if !self.cost[col].is_zero() {
            let factor = std::mem::replace(&mut self.cost[col], Rational::zero());
            for j in 0..self.width {
                if j != col && !self.rows[row][j].is_zero() {
                    let delta = &factor * &self.rows[row][j];
                    self.cost[j] -= delta;
                }
            }
            // Objective moves by the entering column's reduced cost times
            // the step length (the pivot row's new rhs).
            let delta = &factor * &self.rhs[row];
            self.obj += delta;
        }

        self.basis[row] = col;
    }

    fn run(&mut self) -> PhaseEnd {
        loop {
            let Some(col) = self.entering() else {
                return PhaseEnd::Optimal;
            };
            let Some(row) = self.leaving(col) else {
                return PhaseEnd::Unbounded;
            };
            let degenerate = self.rhs[row].is_zero();
            self.pivot(row, col);
            if degenerate {
                self.degenerate_run += 1;
                if self.degenerate_run > DEGENERATE_PIVOT_LIMIT {
                    self.bland = true;
                }
            } else {
                self.degenerate_run = 0;
            }
        }
    }
}

/// Minimizes `c·x` subject to `A x = b`, `x ≥ 0` (dense rows `a`).
///
/// Redundant equality rows are detected during phase 1 and dropped, so `a`
/// need not have full row rank.
pub(crate) fn solve_standard(
    a: &[Vec<Rational>],
    b: &[Rational],
    c: &[Rational],
) -> Result<SimplexOutcome, SimplexError> {
    let m = a.len();
    let n = c.len();
    if b.len() != m {
        return Err(SimplexError::Shape(format!(
            "{} rows but {} right-hand sides",
            m,
            b.len()
        )));
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(SimplexError::Shape(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
    }

    // Phase 1: artificial basis, rhs made nonnegative row by row.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rational> = Vec::with_capacity(n + m);
        for j in 0..n {
            row.push(if flip { -&a[i][j] } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            });
        }
        rows.push(row);
        rhs.push(if flip { -&b[i] } else { b[i].clone() });
    }

    let mut cost = vec![Rational::zero(); n + m];
    let mut obj = Rational::zero();
    for j in 0..n {
        let mut s = Rational::zero();
        for row in &rows {
            s += &row[j];
        }
        cost[j] = -s;
    }
    for v in &rhs {
        obj += v;
    }

    let mut t = Tableau {
        rows,
        rhs,
        cost,
        obj,
        basis: (n..n + m).collect(),
        width: n + m,
        bland: false,
        degenerate_run: 0,
    };

    match t.run() {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => {
            // Phase-1 objective is bounded below by zero.
            return Err(SimplexError::Internal("phase 1 reported unbounded"));
        }
    }
    if t.obj.is_positive() {
        return Ok(SimplexOutcome::Infeasible);
    }

    // Drive remaining artificials out of the basis; rows where no original
    // column is available are linearly dependent and get dropped.
    let mut dead_rows: Vec<usize> = Vec::new();
    for i in 0..t.basis.len() {
        if t.basis[i] < n {
            continue;
        }
        match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
            Some(j) => t.pivot(i, j),
            None => dead_rows.push(i),
        }
    }
    for &i in dead_rows.iter().rev() {
        t.rows.remove(i);
        t.rhs.remove(i);
        t.basis.remove(i);
    }

    // Phase 2: drop artificial columns, recompute the cost row from c.
    for row in &mut t.rows {
        row.truncate(n);
    }
    t.width = n;
    t.cost = c.to_vec();
    t.obj = Rational::zero();
    for i in 0..t.basis.len() {
        let cb = c[t.basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..n {
            if !t.rows[i][j].is_zero() {
                let delta = &cb * &t.rows[i][j];
                t.cost[j] -= delta;
            }
        }
        let delta = &cb * &t.rhs[i];
        t.obj += delta;
    }
    t.bland = false;
    t.degenerate_run = 0;

    match t.run() {
        PhaseEnd::Unbounded => Ok(SimplexOutcome::Unbounded),
        PhaseEnd::Optimal => {
            let mut x = vec![Rational::zero(); n];
            for i in 0..t.basis.len() {
                x[t.basis[i]] = t.rhs[i].clone();
            }
            Ok(SimplexOutcome::Optimal {
                x,
                objective: t.obj,
                reduced_costs: t.cost,
            })
        }
    }
}
