//! Exact rational linear programming.
//!
//! A dense two-phase simplex over arbitrary-precision rationals with Bland's
//! pivoting rule. No perturbation and no tolerances: with exact arithmetic
//! Bland's rule guarantees termination and the outcome is deterministic.
//! Variables are free-signed; they are split internally.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

/// A feasibility/optimization problem over free-signed rational variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpProblem {
    pub num_vars: usize,
    pub rows: Vec<Constraint>,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn push_le(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        self.rows.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        });
    }

    pub fn push_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) {
        self.rows.push(Constraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        });
    }

    /// Convenience: `x[var] >= bound` as a `<=` row.
    pub fn bound_ge(&mut self, var: usize, bound: Rat) {
        let mut coeffs = vec![Rat::zero(); self.num_vars];
        coeffs[var] = Rat::from_int(-1);
        self.push_le(coeffs, -bound);
    }

    pub fn validate(&self) -> Result<()> {
        for (row, c) in self.rows.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::BadLpRow {
                    row,
                    got: c.coeffs.len(),
                    expected: self.num_vars,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Optimal { point: Vec<Rat>, value: Rat },
    Unbounded,
}

/// Phase-1 feasibility: a rational feasible point, or `None`.
pub fn lp_feasible(lp: &LpProblem) -> Result<Option<Vec<Rat>>> {
    lp.validate()?;
    let mut tab = Tableau::build(lp)?;
    Ok(tab.phase1().then(|| tab.extract_point()))
}

/// Maximizes `objective . x` over the constraint set.
pub fn lp_maximize(lp: &LpProblem, objective: &[Rat]) -> Result<LpOutcome> {
    lp_maximize_impl(lp, objective, None)
}

/// Like [`lp_maximize`], but stops at the first basic feasible solution
/// whose objective exceeds `threshold`. The returned value is then a
/// witness, not the optimum. Deterministic: the pivot sequence is the same
/// as for the full optimization.
pub fn lp_maximize_past(
    lp: &LpProblem,
    objective: &[Rat],
    threshold: &Rat,
) -> Result<LpOutcome> {
    lp_maximize_impl(lp, objective, Some(threshold))
}

fn lp_maximize_impl(
    lp: &LpProblem,
    objective: &[Rat],
    stop_above: Option<&Rat>,
) -> Result<LpOutcome> {
    lp.validate()?;
    if objective.len() != lp.num_vars {
        return Err(Error::BadLpRow {
            row: usize::MAX,
            got: objective.len(),
            expected: lp.num_vars,
        });
    }
    let mut tab = Tableau::build(lp)?;
    if !tab.phase1() {
        return Ok(LpOutcome::Infeasible);
    }
    Ok(match tab.phase2(objective, stop_above) {
        Phase2::Optimal(value) => LpOutcome::Optimal {
            point: tab.extract_point(),
            value,
        },
        Phase2::Unbounded => LpOutcome::Unbounded,
    })
}

enum Phase2 {
    Optimal(Rat),
    Unbounded,
}

/// Dense simplex tableau in dictionary form: basis columns are kept as an
/// identity, rows store `B^{-1} [A | b]`.
struct Tableau {
    num_vars: usize,
    /// columns 0..2*num_vars: split structural vars (+/-), then slacks,
    /// then artificials.
    slack_start: usize,
    art_start: usize,
    width: usize,
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn build(lp: &LpProblem) -> Result<Tableau> {
        let n2 = 2 * lp.num_vars;
        let num_slack = lp
            .rows
            .iter()
            .filter(|c| c.relation == Relation::Le)
            .count();
        // Rows needing an artificial: equalities and <= rows with negative
        // right-hand side (their slack enters with coefficient -1).
        let num_art = lp
            .rows
            .iter()
            .filter(|c| c.relation == Relation::Eq || c.rhs.is_negative())
            .count();
        let m = lp.rows.len();
        let slack_start = n2;
        let art_start = n2 + num_slack;
        let width = art_start + num_art + 1;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack_idx = slack_start;
        let mut art_idx = art_start;
        for c in &lp.rows {
            let mut row = vec![Rat::zero(); width];
            let negate = c.rhs.is_negative();
            for (j, a) in c.coeffs.iter().enumerate() {
                let a = if negate { -a } else { a.clone() };
                row[2 * j + 1] = -&a;
                row[2 * j] = a;
            }
            *row.last_mut().unwrap() = if negate { -&c.rhs } else { c.rhs.clone() };
            let mut basic = None;
            if c.relation == Relation::Le {
                row[slack_idx] = if negate {
                    Rat::from_int(-1)
                } else {
                    Rat::one()
                };
                if !negate {
                    basic = Some(slack_idx);
                }
                slack_idx += 1;
            }
            let basic = match basic {
                Some(b) => b,
                None => {
                    row[art_idx] = Rat::one();
                    art_idx += 1;
                    art_idx - 1
                }
            };
            basis.push(basic);
            rows.push(row);
        }
        Ok(Tableau {
            num_vars: lp.num_vars,
            slack_start,
            art_start,
            width,
            rows,
            basis,
        })
    }

    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.width - 1]
    }

    /// Maximizes the reduced-cost row `obj` (length `width`, the last entry
    /// carries `-z`). Returns false on unboundedness. With `stop_above`,
    /// stops at the first basis whose objective value exceeds the bound.
    fn run_simplex(&mut self, obj: &mut [Rat], allow: usize, stop_above: Option<&Rat>) -> bool {
        loop {
            if let Some(bound) = stop_above {
                // obj[width-1] carries -z.
                if -&obj[self.width - 1] > *bound {
                    return true;
                }
            }
            // Bland: smallest-index column with positive reduced cost.
            let entering = (0..allow).find(|&j| obj[j].is_positive());
            let Some(e) = entering else {
                return true;
            };
            // Ratio test; Bland ties broken by smallest basic variable.
            let mut pivot: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if a.is_positive() {
                    let ratio = self.rhs(i) / a;
                    let better = match &pivot {
                        None => true,
                        Some((pi, pr)) => {
                            ratio < *pr || (ratio == *pr && self.basis[i] < self.basis[*pi])
                        }
                    };
                    if better {
                        pivot = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = pivot else {
                return false;
            };
            let touched = self.pivot(r, e);
            // Update the objective row in lockstep.
            let factor = obj[e].clone();
            if !factor.is_zero() {
                for &j in &touched {
                    let t = &self.rows[r][j] * &factor;
                    if !t.is_zero() {
                        obj[j] -= t;
                    }
                }
            }
        }
    }

    /// Pivots on `(r, e)` and returns the nonzero columns of the pivot row.
    fn pivot(&mut self, r: usize, e: usize) -> Vec<usize> {
        let inv = self.rows[r][e].recip();
        let mut touched = Vec::new();
        for j in 0..self.width {
            if !self.rows[r][j].is_zero() {
                let v = &self.rows[r][j] * &inv;
                self.rows[r][j] = v;
                touched.push(j);
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut self.rows[i][e], Rat::zero());
            for &j in &touched {
                if j == e {
                    continue;
                }
                let t = &pivot_row[j] * &factor;
                if !t.is_zero() {
                    self.rows[i][j] -= t;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = e;
        touched
    }

    /// Drives the artificial objective to zero. True iff feasible.
    fn phase1(&mut self) -> bool {
        if self.rows.is_empty() {
            return true;
        }
        // Maximize -sum(artificials): reduced costs priced out over the
        // initial basis (artificials basic with cost -1).
        let mut obj = vec![Rat::zero(); self.width];
        for j in self.art_start..self.width - 1 {
            obj[j] = Rat::from_int(-1);
        }
        for i in 0..self.rows.len() {
            if self.basis[i] >= self.art_start {
                for j in 0..self.width {
                    let t = self.rows[i][j].clone();
                    if !t.is_zero() {
                        obj[j] += t;
                    }
                }
            }
        }
        let bounded = self.run_simplex(&mut obj, self.width - 1, None);
        debug_assert!(bounded, "phase-1 objective is bounded by construction");
        // obj[width-1] carries -z where z = -(sum of artificials).
        let feasible = obj[self.width - 1].is_zero();
        if !feasible {
            return false;
        }
        self.drive_out_artificials();
        true
    }

    /// Removes artificial variables from the basis (pivoting or dropping
    /// redundant rows), then truncates their columns.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.art_start {
                let e = (0..self.art_start).find(|&j| !self.rows[i][j].is_zero());
                match e {
                    Some(e) => {
                        self.pivot(i, e);
                    }
                    None => {
                        // Redundant constraint.
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        let rhs_col = self.width - 1;
        for row in &mut self.rows {
            let rhs = row[rhs_col].clone();
            row.truncate(self.art_start);
            row.push(rhs);
        }
        self.width = self.art_start + 1;
    }

    fn phase2(&mut self, objective: &[Rat], stop_above: Option<&Rat>) -> Phase2 {
        let mut obj = vec![Rat::zero(); self.width];
        for (j, c) in objective.iter().enumerate() {
            obj[2 * j] = c.clone();
            obj[2 * j + 1] = -c;
        }
        // Price out the current basis.
        for i in 0..self.rows.len() {
            let b = self.basis[i];
            let cb = obj[b].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.width {
                let t = &self.rows[i][j] * &cb;
                if !t.is_zero() {
                    obj[j] -= t;
                }
            }
        }
        if !self.run_simplex(&mut obj, self.width - 1, stop_above) {
            return Phase2::Unbounded;
        }
        Phase2::Optimal(-&obj[self.width - 1])
    }

    fn extract_point(&self) -> Vec<Rat> {
        let mut split = vec![Rat::zero(); self.slack_start];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.slack_start {
                split[b] = self.rhs(i).clone();
            }
        }
        (0..self.num_vars)
            .map(|k| &split[2 * k] - &split[2 * k + 1])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn r(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_int(v)).collect()
    }

    #[test]
    fn infeasible_interval() {
        // x <= 1 and -x <= -2.
        let mut lp = LpProblem::new(1);
        lp.push_le(r(&[1]), Rat::from_int(1));
        lp.push_le(r(&[-1]), Rat::from_int(-2));
        assert_eq!(lp_feasible(&lp).unwrap(), None);
    }

    #[test]
    fn simplex_feasible_simplex() {
        // x + y = 1, x >= 0, y >= 0.
        let mut lp = LpProblem::new(2);
        lp.push_eq(r(&[1, 1]), Rat::one());
        lp.bound_ge(0, Rat::zero());
        lp.bound_ge(1, Rat::zero());
        let p = lp_feasible(&lp).unwrap().expect("feasible");
        assert_eq!(&p[0] + &p[1], Rat::one());
        assert!(!p[0].is_negative() && !p[1].is_negative());
    }

    #[test]
    fn empty_problem_is_feasible() {
        let lp = LpProblem::new(3);
        assert!(lp_feasible(&lp).unwrap().is_some());
    }

    #[test]
    fn maximize_on_triangle() {
        // max x + y over x,y >= 0, x + 2y <= 4, 3x + y <= 6.
        let mut lp = LpProblem::new(2);
        lp.bound_ge(0, Rat::zero());
        lp.bound_ge(1, Rat::zero());
        lp.push_le(r(&[1, 2]), Rat::from_int(4));
        lp.push_le(r(&[3, 1]), Rat::from_int(6));
        match lp_maximize(&lp, &r(&[1, 1])).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(14, 5));
                assert_eq!(point, vec![rat(8, 5), rat(6, 5)]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        let mut lp = LpProblem::new(1);
        lp.bound_ge(0, Rat::zero());
        assert_eq!(lp_maximize(&lp, &r(&[1])).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_handled() {
        // x <= -3  (feasible with free x).
        let mut lp = LpProblem::new(1);
        lp.push_le(r(&[1]), Rat::from_int(-3));
        let p = lp_feasible(&lp).unwrap().expect("feasible");
        assert!(p[0] <= Rat::from_int(-3));
    }

    #[test]
    fn degenerate_equalities() {
        // x = 2, x = 2 (redundant), y - x = 0.
        let mut lp = LpProblem::new(2);
        lp.push_eq(r(&[1, 0]), Rat::from_int(2));
        lp.push_eq(r(&[1, 0]), Rat::from_int(2));
        lp.push_eq(r(&[-1, 1]), Rat::zero());
        let p = lp_feasible(&lp).unwrap().expect("feasible");
        assert_eq!(p, vec![Rat::from_int(2), Rat::from_int(2)]);
    }

    #[test]
    fn conflicting_equalities() {
        let mut lp = LpProblem::new(1);
        lp.push_eq(r(&[1]), Rat::from_int(2));
        lp.push_eq(r(&[1]), Rat::from_int(3));
        assert_eq!(lp_feasible(&lp).unwrap(), None);
    }
}
