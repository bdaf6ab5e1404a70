//! Dense two-phase simplex over exact rationals.
//!
//! Solves `min c·x  s.t.  A x >= b, x >= 0` with `b >= 0`. Pivoting follows
//! Bland's rule (lowest-index entering column, lowest-index leaving basic
//! variable on ratio ties), so the method terminates on degenerate
//! problems. The optimal dual vector is read off the reduced costs of the
//! surplus columns, which gives a certificate checkable by duality.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub objective: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

/// A covering-form LP: `min c·x  s.t.  A x >= b, x >= 0`.
#[derive(Debug, Clone)]
pub struct CoveringLp {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x /= &p;
                }
            }
            self.rhs[r] /= &p;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = col;
    }

    fn reduced_costs(&self, cost: &[Rational], allowed: usize) -> Vec<Rational> {
        (0..allowed)
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &bv) in self.basis.iter().enumerate() {
                    if !cost[bv].is_zero() && !self.rows[i][j].is_zero() {
                        r -= &cost[bv] * &self.rows[i][j];
                    }
                }
                r
            })
            .collect()
    }

    /// Runs simplex iterations minimizing `cost` with entering columns `< allowed`.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let reduced = self.reduced_costs(cost, allowed);
            let Some(enter) = reduced.iter().position(|r| r.is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

impl CoveringLp {
    pub fn solve(&self) -> Result<LpOutcome> {
        let m = self.b.len();
        let nvars = self.c.len();
        if self.a.len() != m || self.a.iter().any(|row| row.len() != nvars) {
            return Err(Error::DimensionMismatch("constraint matrix shape".into()));
        }
        if self.b.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument("right-hand side must be nonnegative".into()));
        }
        // columns: structural | surplus | artificial
        let width = nvars + 2 * m;
        let mut rows = Vec::with_capacity(m);
        for (i, row) in self.a.iter().enumerate() {
            let mut t = vec![Rational::zero(); width];
            t[..nvars].clone_from_slice(row);
            t[nvars + i] = -Rational::one();
            t[nvars + m + i] = Rational::one();
            rows.push(t);
        }
        let mut tab = Tableau {
            rows,
            rhs: self.b.clone(),
            basis: (0..m).map(|i| nvars + m + i).collect(),
        };

        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(nvars + m) {
            *c = Rational::one();
        }
        tab.optimize(&phase1, width);
        let infeasibility: Rational = tab
            .basis
            .iter()
            .zip(&tab.rhs)
            .filter(|(&bv, _)| bv >= nvars + m)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        // drive zero-valued artificials out of the basis where possible
        for r in 0..m {
            if tab.basis[r] >= nvars + m {
                if let Some(col) = (0..nvars + m).find(|&j| !tab.rows[r][j].is_zero()) {
                    tab.pivot(r, col);
                }
            }
        }

        let mut phase2 = vec![Rational::zero(); width];
        phase2[..nvars].clone_from_slice(&self.c);
        if !tab.optimize(&phase2, nvars + m) {
            return Ok(LpOutcome::Unbounded);
        }

        let mut primal = vec![Rational::zero(); nvars];
        for (i, &bv) in tab.basis.iter().enumerate() {
            if bv < nvars {
                primal[bv] = tab.rhs[i].clone();
            }
        }
        let reduced = tab.reduced_costs(&phase2, nvars + m);
        let dual = reduced[nvars..nvars + m].to_vec();
        let objective = primal
            .iter()
            .zip(&self.c)
            .map(|(x, c)| x * c)
            .sum::<Rational>();
        Ok(LpOutcome::Optimal(LpSolution {
            objective,
            primal,
            dual,
        }))
    }

    /// Checks primal and dual feasibility and equal objectives, exactly.
    pub fn certifies(&self, sol: &LpSolution) -> bool {
        let primal_ok = sol.primal.iter().all(|x| !x.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, b)| {
                row.iter().zip(&sol.primal).map(|(a, x)| a * x).sum::<Rational>() >= *b
            });
        let dual_ok = sol.dual.iter().all(|y| !y.is_negative())
            && (0..self.c.len()).all(|j| {
                self.a
                    .iter()
                    .zip(&sol.dual)
                    .map(|(row, y)| &row[j] * y)
                    .sum::<Rational>()
                    <= self.c[j]
            });
        let primal_obj: Rational = sol.primal.iter().zip(&self.c).map(|(x, c)| x * c).sum();
        let dual_obj: Rational = sol.dual.iter().zip(&self.b).map(|(y, b)| y * b).sum();
        primal_ok && dual_ok && primal_obj == sol.objective && dual_obj == sol.objective
    }
}
