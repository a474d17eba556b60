//! Brute-force oracles used to cross-check every main-path algorithm.
//!
//! These are shipped in the library, not hidden in test code, so the CLI can
//! emit cross-checked certificates. They favour transparency over speed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{BoxRd, RectLine, VecD};
use crate::rat::Rat;
use crate::transversal::lp::{LpProblem, Relation};

/// The set of parameters `t` with `base + t * dir` inside a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TInterval {
    pub lower: Option<Rat>,
    pub upper: Option<Rat>,
    pub empty: bool,
}

impl TInterval {
    fn empty() -> Self {
        TInterval {
            lower: None,
            upper: None,
            empty: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    /// Any parameter inside the interval, if nonempty.
    pub fn sample(&self) -> Option<Rat> {
        if self.empty {
            return None;
        }
        Some(match (&self.lower, &self.upper) {
            (Some(l), Some(u)) => (l + u) / Rat::from_int(2),
            (Some(l), None) => l.clone(),
            (None, Some(u)) => u.clone(),
            (None, None) => Rat::zero(),
        })
    }
}

/// Per-coordinate interval intersection for `a <= x + t v <= b`.
/// Accepts any direction sign, unlike `line_meets_box`.
pub fn t_interval(line: &RectLine, b: &BoxRd) -> Result<TInterval> {
    if line.dim() != b.dim() {
        return Err(Error::DimensionMismatch(line.dim(), b.dim()));
    }
    let mut lower: Option<Rat> = None;
    let mut upper: Option<Rat> = None;
    for i in 0..line.dim() {
        let v = &line.dir()[i];
        let x = &line.base()[i];
        match v.signum() {
            0 => {
                if x < &b.min()[i] || x > &b.max()[i] {
                    return Ok(TInterval::empty());
                }
            }
            s => {
                let t0 = (&b.min()[i] - x) / v;
                let t1 = (&b.max()[i] - x) / v;
                let (lo, hi) = if s > 0 { (t0, t1) } else { (t1, t0) };
                lower = Some(match lower {
                    Some(l) => l.max(lo),
                    None => lo,
                });
                upper = Some(match upper {
                    Some(u) => u.min(hi),
                    None => hi,
                });
            }
        }
    }
    let empty = matches!((&lower, &upper), (Some(l), Some(u)) if l > u);
    if empty {
        Ok(TInterval::empty())
    } else {
        Ok(TInterval {
            lower,
            upper,
            empty: false,
        })
    }
}

/// True when the line meets every box in the family, any direction sign.
pub fn stabs_all(line: &RectLine, boxes: &[BoxRd]) -> bool {
    boxes
        .iter()
        .all(|b| matches!(t_interval(line, b), Ok(iv) if !iv.is_empty()))
}

const FM_VAR_LIMIT: usize = 8;

/// Fourier-Motzkin feasibility oracle for small LPs.
///
/// Equalities are split into opposite inequalities, then variables are
/// eliminated one by one. Exponential in the worst case; guarded to at most
/// 8 variables.
pub fn fm_eliminate(lp: &LpProblem) -> Result<bool> {
    if lp.num_vars > FM_VAR_LIMIT {
        return Err(Error::FmTooManyVars {
            limit: FM_VAR_LIMIT,
            got: lp.num_vars,
        });
    }
    lp.validate()?;
    // Rows as (coeffs, rhs) meaning coeffs . x <= rhs.
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for c in &lp.rows {
        match c.relation {
            Relation::Le => rows.push((c.coeffs.clone(), c.rhs.clone())),
            Relation::Eq => {
                rows.push((c.coeffs.clone(), c.rhs.clone()));
                rows.push((
                    c.coeffs.iter().map(|a| -a).collect(),
                    -&c.rhs,
                ));
            }
        }
    }

    for var in (0..lp.num_vars).rev() {
        let mut pos: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut neg: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut zero: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (coeffs, rhs) in rows {
            match coeffs[var].signum() {
                1 => pos.push((coeffs, rhs)),
                -1 => neg.push((coeffs, rhs)),
                _ => zero.push((coeffs, rhs)),
            }
        }
        let mut next = zero;
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                // Scale so the eliminated coefficients cancel exactly.
                let pk = &pc[var];
                let nk = &nc[var];
                let coeffs: Vec<Rat> = (0..lp.num_vars)
                    .map(|j| &pc[j] / pk - &nc[j] / nk)
                    .collect();
                let rhs = pr / pk - nr / nk;
                next.push((coeffs, rhs));
            }
        }
        next.sort();
        next.dedup();
        rows = next;
    }

    Ok(rows
        .iter()
        .all(|(_, rhs)| !rhs.is_negative()))
}

/// Determinant of the reciprocal-vector matrix of three directions in `R^3`,
/// cleared of denominators by scaling each row with the product of its
/// coordinates. Zero exactly when the third direction lies on the cone of
/// lines through a common point meeting the first two.
pub fn reciprocal_collinearity(dirs: [&VecD; 3]) -> Result<Rat> {
    for v in dirs {
        if v.dim() != 3 {
            return Err(Error::DimensionMismatch(v.dim(), 3));
        }
        for (axis, c) in v.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::VanishingDirCoord { axis });
            }
        }
    }
    // Row for (x, y, z) is (yz, xz, xy): the reciprocal row scaled by xyz.
    let row = |v: &VecD| -> [Rat; 3] {
        [&v[1] * &v[2], &v[0] * &v[2], &v[0] * &v[1]]
    };
    let m: Vec<[Rat; 3]> = dirs.iter().map(|v| row(v)).collect();
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::line_meets_box;
    use crate::rat::rat;

    #[test]
    fn t_interval_example() {
        let l = RectLine::new(
            VecD(vec![rat(0, 1), rat(0, 1), rat(1, 2)]),
            VecD::from_ints(&[1, 2, 3]),
        )
        .unwrap();
        let b = BoxRd::cube(3, 0, 1);
        let iv = t_interval(&l, &b).unwrap();
        assert!(!iv.is_empty());
        assert_eq!(iv.lower, Some(rat(0, 1)));
        assert_eq!(iv.upper, Some(rat(1, 6)));
    }

    #[test]
    fn t_interval_zero_coordinate_miss() {
        let l = RectLine::from_ints(&[2, 0, 0], &[0, 1, 1]).unwrap();
        let b = BoxRd::cube(3, 0, 1);
        assert!(t_interval(&l, &b).unwrap().is_empty());
    }

    #[test]
    fn t_interval_uniform_direction() {
        // v = (1,...,1), x = a: interval [0, min_i(b_i - a_i)].
        let b = BoxRd::from_ints(&[(0, 3), (1, 2), (-1, 4)]).unwrap();
        let l = RectLine::from_ints(&[0, 1, -1], &[1, 1, 1]).unwrap();
        let iv = t_interval(&l, &b).unwrap();
        assert_eq!(iv.lower, Some(rat(0, 1)));
        assert_eq!(iv.upper, Some(rat(1, 1)));
    }

    #[test]
    fn t_interval_descending_direction() {
        let l = RectLine::from_ints(&[1, 0], &[-1, 1]).unwrap();
        let b = BoxRd::cube(2, 0, 1);
        let iv = t_interval(&l, &b).unwrap();
        assert!(!iv.is_empty());
        assert_eq!(iv.lower, Some(rat(0, 1)));
        assert_eq!(iv.upper, Some(rat(1, 1)));
    }

    #[test]
    fn t_interval_agrees_with_meet_predicate() {
        // A few fixed weakly ascending cases, including degenerate boxes.
        let cases = [
            (vec![0, 0], vec![1, 2], vec![(0, 1), (3, 4)]),
            (vec![0, 5], vec![1, 0], vec![(2, 3), (5, 5)]),
            (vec![-3, -3], vec![2, 1], vec![(0, 1), (-1, 0)]),
            (vec![1, 1], vec![0, 3], vec![(1, 1), (0, 9)]),
        ];
        for (base, dir, corners) in cases {
            let l = RectLine::from_ints(&base, &dir).unwrap();
            let b = BoxRd::from_ints(&corners).unwrap();
            assert_eq!(
                line_meets_box(&l, &b).unwrap(),
                !t_interval(&l, &b).unwrap().is_empty(),
                "disagreement on {base:?} {dir:?} {corners:?}"
            );
        }
    }

    #[test]
    fn reciprocal_collinearity_examples() {
        let g1 = VecD::from_ints(&[1, 2, 3]);
        let g2 = VecD::from_ints(&[2, 3, 1]);
        let mid = VecD(vec![rat(4, 3), rat(12, 5), rat(3, 2)]);
        assert_eq!(
            reciprocal_collinearity([&g1, &g2, &mid]).unwrap(),
            Rat::zero()
        );
        let ones = VecD::from_ints(&[1, 1, 1]);
        assert_eq!(
            reciprocal_collinearity([&g1, &g2, &ones]).unwrap(),
            Rat::from_int(-13)
        );
        assert_eq!(
            reciprocal_collinearity([&g1, &g2, &g1]).unwrap(),
            Rat::zero()
        );
    }
}
