//! The Cremona coordinate chart for weakly ascending lines.
//!
//! A weakly ascending line with rectilinear coordinates `(x, v)` gets
//! coordinates `y_i = x_i / v_i`, `w_i = 1 / v_i` where `v_i != 0`, and
//! `y_i = x_i`, `w_i = 0` where `v_i = 0`. The pair is gauge-fixed over the
//! support of `w`: the direction scale is chosen so the support entries of
//! `w` sum to 1 (which also rescales `y`), then the base point slides along
//! the line so the support entries of `y` sum to 0. Off-support entries of
//! `y` carry absolute position and are never touched by the gauge.
//!
//! In these coordinates the lines meeting any fixed box form a convex set,
//! which is what every solver in this crate exploits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{RectLine, VecD};
use crate::rat::Rat;
use crate::transversal::lp::{lp_feasible, LpProblem};

/// Gauge-normalized Cremona coordinates of a weakly ascending line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "CremonaRepr", into = "CremonaRepr")]
pub struct CremonaLine {
    y: VecD,
    w: VecD,
    support: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CremonaRepr {
    y: VecD,
    w: VecD,
    support: Vec<usize>,
}

impl TryFrom<CremonaRepr> for CremonaLine {
    type Error = Error;
    fn try_from(r: CremonaRepr) -> Result<Self> {
        CremonaLine::new(r.y, r.w)
    }
}

impl From<CremonaLine> for CremonaRepr {
    fn from(c: CremonaLine) -> Self {
        CremonaRepr {
            y: c.y,
            w: c.w,
            support: c.support,
        }
    }
}

impl CremonaLine {
    /// Validates the normalization invariants: `w >= 0` with nonempty
    /// support, support entries of `w` summing to 1 and of `y` to 0.
    pub fn new(y: VecD, w: VecD) -> Result<Self> {
        if y.dim() != w.dim() {
            return Err(Error::DimensionMismatch(y.dim(), w.dim()));
        }
        let support: Vec<usize> = (0..w.dim()).filter(|&i| !w[i].is_zero()).collect();
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        for &i in &support {
            if w[i].is_negative() {
                return Err(Error::NegativeW { axis: i });
            }
        }
        let w_sum: Rat = support.iter().map(|&i| &w[i]).sum();
        let y_sum: Rat = support.iter().map(|&i| &y[i]).sum();
        if w_sum != Rat::one() || !y_sum.is_zero() {
            return Err(Error::BadWeights);
        }
        Ok(CremonaLine { y, w, support })
    }

    pub fn dim(&self) -> usize {
        self.y.dim()
    }

    pub fn y(&self) -> &VecD {
        &self.y
    }

    pub fn w(&self) -> &VecD {
        &self.w
    }

    /// Axes with nonzero direction coordinate, ascending order, 0-based.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn has_full_support(&self) -> bool {
        self.support.len() == self.dim()
    }
}

/// Chart map from rectilinear to normalized Cremona coordinates.
pub fn to_cremona(line: &RectLine) -> Result<CremonaLine> {
    let line = line.ascending_representative()?;
    let d = line.dim();
    let mut y = Vec::with_capacity(d);
    let mut w = Vec::with_capacity(d);
    let mut support = Vec::new();
    for i in 0..d {
        let v = &line.dir()[i];
        let x = &line.base()[i];
        if v.is_zero() {
            y.push(x.clone());
            w.push(Rat::zero());
        } else {
            y.push(x / v);
            w.push(v.recip());
            support.push(i);
        }
    }
    // Gauge: scale the direction so support w sums to 1 (rescales y too),
    // then slide the base point so support y sums to 0.
    let scale: Rat = support.iter().map(|&i| &w[i]).sum();
    let mean = support.iter().map(|&i| &y[i]).sum::<Rat>()
        / Rat::from_int(support.len() as i64);
    for &i in &support {
        y[i] = (&y[i] - &mean) / &scale;
        w[i] = &w[i] / &scale;
    }
    CremonaLine::new(VecD::new(y), VecD::new(w))
}

/// Chart inverse: `x_i = y_i / w_i`, `v_i = 1 / w_i` on the support and
/// `x_i = y_i`, `v_i = 0` off it.
pub fn from_cremona(c: &CremonaLine) -> RectLine {
    let d = c.dim();
    let mut base = Vec::with_capacity(d);
    let mut dir = Vec::with_capacity(d);
    for i in 0..d {
        if c.w()[i].is_zero() {
            base.push(c.y()[i].clone());
            dir.push(Rat::zero());
        } else {
            base.push(&c.y()[i] / &c.w()[i]);
            dir.push(c.w()[i].recip());
        }
    }
    RectLine::new(VecD::new(base), VecD::new(dir)).expect("support is nonempty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    Convex,
    Affine,
}

/// Componentwise weighted combination of Cremona coordinates.
///
/// All lines must share the support of `w`; mixing supports has no stated
/// semantics because the chart assignment is discontinuous across them.
/// Weights must sum to 1; `Weighting::Convex` additionally requires them
/// non-negative. An affine combination may push a support entry of `w` to
/// zero (the combination leaves the chart) or below (no weakly ascending
/// line corresponds to it); both are reported as errors.
pub fn cremona_combination(
    lines: &[CremonaLine],
    weights: &[Rat],
    weighting: Weighting,
) -> Result<CremonaLine> {
    if lines.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if weights.len() != lines.len() {
        return Err(Error::BadWeights);
    }
    let d = lines[0].dim();
    let support = lines[0].support().to_vec();
    for l in &lines[1..] {
        if l.dim() != d {
            return Err(Error::DimensionMismatch(l.dim(), d));
        }
        if l.support() != support {
            return Err(Error::MixedSupports);
        }
    }
    if weights.iter().sum::<Rat>() != Rat::one() {
        return Err(Error::BadWeights);
    }
    if weighting == Weighting::Convex && weights.iter().any(Rat::is_negative) {
        return Err(Error::NegativeWeight);
    }

    let mut y = vec![Rat::zero(); d];
    let mut w = vec![Rat::zero(); d];
    for (line, lambda) in lines.iter().zip(weights) {
        for i in 0..d {
            y[i] += &line.y()[i] * lambda;
            w[i] += &line.w()[i] * lambda;
        }
    }
    for &i in &support {
        if w[i].is_negative() {
            return Err(Error::NegativeW { axis: i });
        }
        if w[i].is_zero() {
            return Err(Error::ChartExit { axis: i });
        }
    }
    // The gauge sums are affine functionals, so they are already correct.
    CremonaLine::new(VecD::new(y), VecD::new(w))
}

/// Exact convex-hull membership of a query among generator coordinates,
/// decided by LP feasibility over the combination weights.
pub fn cremona_hull_membership(
    generators: &[CremonaLine],
    query: &CremonaLine,
) -> Result<bool> {
    if generators.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let d = generators[0].dim();
    let support = generators[0].support().to_vec();
    for g in &generators[1..] {
        if g.dim() != d {
            return Err(Error::DimensionMismatch(g.dim(), d));
        }
        if g.support() != support {
            return Err(Error::MixedSupports);
        }
    }
    if query.dim() != d {
        return Err(Error::DimensionMismatch(query.dim(), d));
    }
    // A convex combination preserves the support exactly, so a query with a
    // different support cannot be in the hull.
    if query.support() != support {
        return Ok(false);
    }

    let n = generators.len();
    let mut lp = LpProblem::new(n);
    for k in 0..n {
        lp.bound_ge(k, Rat::zero());
    }
    lp.push_eq(vec![Rat::one(); n], Rat::one());
    for i in 0..d {
        let coeffs: Vec<Rat> = generators.iter().map(|g| g.y()[i].clone()).collect();
        lp.push_eq(coeffs, query.y()[i].clone());
    }
    for &i in &support {
        let coeffs: Vec<Rat> = generators.iter().map(|g| g.w()[i].clone()).collect();
        lp.push_eq(coeffs, query.w()[i].clone());
    }
    Ok(lp_feasible(&lp)?.is_some())
}
