//! Ascending hyperplane transversals and the dual `(d-2)`-flat theory.
//!
//! An ascending hyperplane `v . z = c` (with `v >= 0`, `v != 0`) meets a
//! box `[a, b]` iff `a . v <= c <= b . v`: the constraint is linear in the
//! coefficients `(v, c)`, so hyperplane transversals reduce to one LP per
//! sign class with local Helly number `d + 1`.
//!
//! A `(d-2)`-flat `K = {z : z . x = 1, z . v = 0}` not through the origin
//! is encoded by the pair `(x, v)`; the hyperplanes containing it form the
//! pencil `z . (x + t v) = 1`. Meeting a `*`-box — an order interval of
//! hyperplane coefficient vectors — is literally the statement
//! `exists t: a <= x + t v <= b`, so the entire line/box machinery
//! transfers verbatim to coefficient space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{line_meets_box, reflect_box, BoxRd, RectLine, SignClass, VecD};
use crate::rat::Rat;
use crate::transversal::lp::{lp_feasible, LpProblem};

/// Hyperplane `normal . z = offset` with a weakly ascending, gauge-fixed
/// normal (`normal >= 0`, sum 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HyperplaneRepr", into = "HyperplaneRepr")]
pub struct AscendingHyperplane {
    normal: VecD,
    offset: Rat,
}

#[derive(Serialize, Deserialize)]
struct HyperplaneRepr {
    normal: VecD,
    offset: Rat,
}

impl TryFrom<HyperplaneRepr> for AscendingHyperplane {
    type Error = Error;
    fn try_from(r: HyperplaneRepr) -> Result<Self> {
        AscendingHyperplane::new(r.normal, r.offset)
    }
}

impl From<AscendingHyperplane> for HyperplaneRepr {
    fn from(h: AscendingHyperplane) -> Self {
        HyperplaneRepr {
            normal: h.normal,
            offset: h.offset,
        }
    }
}

impl AscendingHyperplane {
    /// Normalizes to the `sum(normal) = 1` gauge.
    pub fn new(normal: VecD, offset: Rat) -> Result<Self> {
        if normal.iter().any(Rat::is_negative) || normal.is_zero() {
            return Err(Error::BadHyperplaneNormal);
        }
        let scale: Rat = normal.iter().sum();
        Ok(AscendingHyperplane {
            normal: normal.scale(&scale.recip()),
            offset: &offset / &scale,
        })
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn normal(&self) -> &VecD {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }
}

/// `a . v <= c <= b . v`, exactly.
pub fn hyperplane_meets_box(h: &AscendingHyperplane, b: &BoxRd) -> Result<bool> {
    if h.dim() != b.dim() {
        return Err(Error::DimensionMismatch(h.dim(), b.dim()));
    }
    let lo = b.min().dot(h.normal());
    let hi = b.max().dot(h.normal());
    Ok(lo <= h.offset && h.offset <= hi)
}

/// Ascending hyperplane transversal of the `eps`-reflected family.
///
/// The returned hyperplane is ascending with respect to the reflected
/// frame; in original coordinates its normal is `eps * normal`.
pub fn hyperplane_transversal(
    dim: usize,
    boxes: &[BoxRd],
    eps: &SignClass,
) -> Result<Option<AscendingHyperplane>> {
    if eps.dim() != dim {
        return Err(Error::DimensionMismatch(eps.dim(), dim));
    }
    for b in boxes {
        if b.dim() != dim {
            return Err(Error::DimensionMismatch(b.dim(), dim));
        }
    }
    let reflected: Vec<BoxRd> = boxes
        .iter()
        .map(|b| reflect_box(b, eps))
        .collect::<Result<_>>()?;
    // Variables v_1..v_d, c.
    let c = dim;
    let mut lp = LpProblem::new(dim + 1);
    for i in 0..dim {
        lp.bound_ge(i, Rat::zero());
    }
    let mut gauge = vec![Rat::one(); dim + 1];
    gauge[c] = Rat::zero();
    lp.push_eq(gauge, Rat::one());
    for b in &reflected {
        // a . v - c <= 0
        let mut row: Vec<Rat> = (0..dim).map(|i| b.min()[i].clone()).collect();
        row.push(Rat::from_int(-1));
        lp.push_le(row, Rat::zero());
        // c - b . v <= 0
        let mut row: Vec<Rat> = (0..dim).map(|i| -&b.max()[i]).collect();
        row.push(Rat::one());
        lp.push_le(row, Rat::zero());
    }
    let Some(point) = lp_feasible(&lp)? else {
        return Ok(None);
    };
    let normal = VecD::new(point[..dim].to_vec());
    let h = AscendingHyperplane::new(normal, point[c].clone())?;
    for b in &reflected {
        assert!(
            hyperplane_meets_box(&h, b)?,
            "hyperplane witness must meet every reflected box"
        );
    }
    Ok(Some(h))
}

/// Any-sign hyperplane transversal: first feasible canonical sign class.
pub fn hyperplane_transversal_global(
    dim: usize,
    boxes: &[BoxRd],
) -> Result<Option<(SignClass, AscendingHyperplane)>> {
    for eps in SignClass::enumerate(dim) {
        if let Some(h) = hyperplane_transversal(dim, boxes, &eps)? {
            return Ok(Some((eps, h)));
        }
    }
    Ok(None)
}

/// Helly verification for hyperplane transversals: subset size `d + 1` for
/// a fixed sign, `2^(d-1) (d + 1)` over all signs.
pub fn helly_check_hyperplanes(
    dim: usize,
    boxes: &[BoxRd],
    sign: Option<SignClass>,
    strategy: crate::transversal::SubsetStrategy,
) -> Result<crate::transversal::HellyReport> {
    let mode = match sign {
        Some(sign) => crate::transversal::HellyMode::Hyperplane { sign },
        None => crate::transversal::HellyMode::HyperplaneGlobal,
    };
    crate::transversal::helly_check(dim, boxes, mode, strategy)
}

/// An order interval of hyperplanes `a . z = 1`, given by coefficient
/// vectors `lower <= upper` in the standard componentwise order.
///
/// The projective order on each axis (positive values, then infinity, then
/// negative values) is not modelled; incomparable bounds are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StarBoxRepr", into = "StarBoxRepr")]
pub struct StarBox {
    lower: VecD,
    upper: VecD,
}

#[derive(Serialize, Deserialize)]
struct StarBoxRepr {
    lower: VecD,
    upper: VecD,
}

impl TryFrom<StarBoxRepr> for StarBox {
    type Error = Error;
    fn try_from(r: StarBoxRepr) -> Result<Self> {
        StarBox::new(r.lower, r.upper)
    }
}

impl From<StarBox> for StarBoxRepr {
    fn from(s: StarBox) -> Self {
        StarBoxRepr {
            lower: s.lower,
            upper: s.upper,
        }
    }
}

impl StarBox {
    pub fn new(lower: VecD, upper: VecD) -> Result<Self> {
        if lower.dim() != upper.dim() {
            return Err(Error::DimensionMismatch(lower.dim(), upper.dim()));
        }
        for axis in 0..lower.dim() {
            if lower[axis] > upper[axis] {
                return Err(Error::StarBoxOrder { axis });
            }
        }
        Ok(StarBox { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    /// The coefficient-space box `[lower, upper]`.
    pub fn as_box(&self) -> BoxRd {
        BoxRd::new(self.lower.clone(), self.upper.clone()).expect("order checked")
    }
}

/// An ascending `(d-2)`-flat `{z : z . base = 1, z . dir = 0}` in
/// rectilinear coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StarFlatRepr", into = "StarFlatRepr")]
pub struct StarFlat {
    base: VecD,
    dir: VecD,
}

#[derive(Serialize, Deserialize)]
struct StarFlatRepr {
    base: VecD,
    dir: VecD,
}

impl TryFrom<StarFlatRepr> for StarFlat {
    type Error = Error;
    fn try_from(r: StarFlatRepr) -> Result<Self> {
        StarFlat::new(r.base, r.dir)
    }
}

impl From<StarFlat> for StarFlatRepr {
    fn from(f: StarFlat) -> Self {
        StarFlatRepr {
            base: f.base,
            dir: f.dir,
        }
    }
}

impl StarFlat {
    pub fn new(base: VecD, dir: VecD) -> Result<Self> {
        if base.dim() != dir.dim() {
            return Err(Error::DimensionMismatch(base.dim(), dir.dim()));
        }
        if base.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if dir.is_zero() || dir.iter().any(Rat::is_negative) {
            return Err(Error::BadHyperplaneNormal);
        }
        Ok(StarFlat { base, dir })
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn base(&self) -> &VecD {
        &self.base
    }

    pub fn dir(&self) -> &VecD {
        &self.dir
    }

    /// The hyperplane-pencil line `base + t dir` in coefficient space.
    pub fn pencil_line(&self) -> RectLine {
        RectLine::new(self.base.clone(), self.dir.clone()).expect("dir nonzero")
    }
}

/// `*`-transversality of a flat to a `*`-box: some hyperplane of the pencil
/// lies in the order interval. Definitionally the line/box meet predicate
/// in coefficient space.
pub fn star_transversal(flat: &StarFlat, sbox: &StarBox) -> Result<bool> {
    if flat.dim() != sbox.dim() {
        return Err(Error::DimensionMismatch(flat.dim(), sbox.dim()));
    }
    line_meets_box(&flat.pencil_line(), &sbox.as_box())
}
