//! Boxes, lines, sign classes and the elementary meet predicates.
//!
//! All types are immutable values over exact rationals. A box is a product
//! of `d` closed intervals and may be degenerate (`min == max` on some or
//! all axes). A line is a base point plus a nonzero direction vector; it is
//! *weakly ascending* when its nonzero direction coordinates share a sign
//! and *ascending* when no direction coordinate vanishes.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// A point or vector in `R^d` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VecD(pub Vec<Rat>);

impl VecD {
    pub fn new(coords: Vec<Rat>) -> Self {
        VecD(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        VecD(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        VecD(coords.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &VecD) -> VecD {
        VecD(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &VecD) -> VecD {
        VecD(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> VecD {
        VecD(self.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &VecD) -> Rat {
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for VecD {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Debug for VecD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(a, b))
    }
}

/// An axis-parallel box given by its minimal and maximal corners.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "BoxRepr", into = "BoxRepr")]
pub struct BoxRd {
    min: VecD,
    max: VecD,
}

#[derive(Serialize, Deserialize)]
struct BoxRepr {
    min: VecD,
    max: VecD,
}

impl TryFrom<BoxRepr> for BoxRd {
    type Error = Error;
    fn try_from(r: BoxRepr) -> Result<Self> {
        BoxRd::new(r.min, r.max)
    }
}

impl From<BoxRd> for BoxRepr {
    fn from(b: BoxRd) -> Self {
        BoxRepr {
            min: b.min,
            max: b.max,
        }
    }
}

impl BoxRd {
    pub fn new(min: VecD, max: VecD) -> Result<Self> {
        check_dims(min.dim(), max.dim())?;
        for axis in 0..min.dim() {
            if min[axis] > max[axis] {
                return Err(Error::InvalidBox { axis });
            }
        }
        Ok(BoxRd { min, max })
    }

    /// Box `[a_1,b_1] x ... x [a_d,b_d]` from integer corner pairs.
    pub fn from_ints(corners: &[(i64, i64)]) -> Result<Self> {
        let min = VecD(corners.iter().map(|&(a, _)| Rat::from_int(a)).collect());
        let max = VecD(corners.iter().map(|&(_, b)| Rat::from_int(b)).collect());
        BoxRd::new(min, max)
    }

    /// The cube `[lo, hi]^d`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Self {
        BoxRd::from_ints(&vec![(lo, hi); dim]).expect("cube corners ordered")
    }

    pub fn dim(&self) -> usize {
        self.min.dim()
    }

    pub fn min(&self) -> &VecD {
        &self.min
    }

    pub fn max(&self) -> &VecD {
        &self.max
    }

    pub fn contains(&self, point: &VecD) -> bool {
        point.dim() == self.dim()
            && (0..self.dim()).all(|i| self.min[i] <= point[i] && point[i] <= self.max[i])
    }

    pub fn translate(&self, offset: &VecD) -> BoxRd {
        BoxRd {
            min: self.min.add(offset),
            max: self.max.add(offset),
        }
    }
}

/// A line in rectilinear coordinates: base point plus direction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "LineRepr", into = "LineRepr")]
pub struct RectLine {
    base: VecD,
    dir: VecD,
}

#[derive(Serialize, Deserialize)]
struct LineRepr {
    base: VecD,
    dir: VecD,
}

impl TryFrom<LineRepr> for RectLine {
    type Error = Error;
    fn try_from(r: LineRepr) -> Result<Self> {
        RectLine::new(r.base, r.dir)
    }
}

impl From<RectLine> for LineRepr {
    fn from(l: RectLine) -> Self {
        LineRepr {
            base: l.base,
            dir: l.dir,
        }
    }
}

impl RectLine {
    pub fn new(base: VecD, dir: VecD) -> Result<Self> {
        check_dims(base.dim(), dir.dim())?;
        if dir.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(RectLine { base, dir })
    }

    pub fn from_ints(base: &[i64], dir: &[i64]) -> Result<Self> {
        RectLine::new(VecD::from_ints(base), VecD::from_ints(dir))
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

    /// The point `base + t * dir`.
    pub fn at(&self, t: &Rat) -> VecD {
        self.base.add(&self.dir.scale(t))
    }

    /// True when the nonzero direction coordinates share a sign.
    pub fn is_weakly_ascending(&self) -> bool {
        let mut pos = false;
        let mut neg = false;
        for v in self.dir.iter() {
            match v.signum() {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        !(pos && neg)
    }

    /// True when every direction coordinate is nonzero and they share a sign.
    pub fn is_ascending(&self) -> bool {
        self.is_weakly_ascending() && self.dir.iter().all(|v| !v.is_zero())
    }

    /// Same point set with the direction flipped so its nonzero coordinates
    /// are non-negative. Errors when the line is not weakly ascending.
    pub fn ascending_representative(&self) -> Result<RectLine> {
        if !self.is_weakly_ascending() {
            return Err(Error::NotWeaklyAscending);
        }
        if self.dir.iter().any(|v| v.is_negative()) {
            Ok(RectLine {
                base: self.base.clone(),
                dir: self.dir.scale(&Rat::from_int(-1)),
            })
        } else {
            Ok(self.clone())
        }
    }

    /// Exact test whether `point` lies on the line.
    pub fn passes_through(&self, point: &VecD) -> bool {
        if point.dim() != self.dim() {
            return false;
        }
        let delta = point.sub(&self.base);
        // delta must be proportional to dir: all 2x2 minors vanish.
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                if &delta[i] * &self.dir[j] != &delta[j] * &self.dir[i] {
                    return false;
                }
            }
        }
        true
    }
}

/// An orthant-at-infinity sign class, canonicalized so the first entry is +1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct SignClass(Vec<i8>);

impl TryFrom<Vec<i8>> for SignClass {
    type Error = Error;
    fn try_from(signs: Vec<i8>) -> Result<Self> {
        SignClass::new(&signs)
    }
}

impl From<SignClass> for Vec<i8> {
    fn from(s: SignClass) -> Vec<i8> {
        s.0
    }
}

impl SignClass {
    /// Builds the canonical representative of `signs` modulo global negation.
    /// Entries must be `+1` or `-1`.
    pub fn new(signs: &[i8]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::DimensionTooSmall { need: 1 });
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadWeights);
        }
        let flip = signs[0] == -1;
        Ok(SignClass(
            signs.iter().map(|&s| if flip { -s } else { s }).collect(),
        ))
    }

    pub fn all_plus(dim: usize) -> Self {
        SignClass(vec![1; dim])
    }

    /// All `2^(d-1)` canonical sign classes in lexicographic order
    /// (`+1` before `-1` on each axis after the first).
    pub fn enumerate(dim: usize) -> Vec<SignClass> {
        let mut out = Vec::with_capacity(1 << dim.saturating_sub(1));
        for mask in 0..(1u64 << (dim - 1)) {
            let mut signs = vec![1i8; dim];
            for (axis, sign) in signs.iter_mut().enumerate().skip(1) {
                if mask >> (axis - 1) & 1 == 1 {
                    *sign = -1;
                }
            }
            out.push(SignClass(signs));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn is_all_plus(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }
}

impl fmt::Debug for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *s == 1 { '+' } else { '-' })?;
        }
        write!(f, ")")
    }
}

/// All canonical sign classes of a line: every `eps` such that
/// `eps_i * v_i` are all non-negative or all non-positive.
pub fn line_sign(line: &RectLine) -> Vec<SignClass> {
    let d = line.dim();
    let free: Vec<usize> = (0..d).filter(|&i| line.dir()[i].is_zero()).collect();
    let mut out = std::collections::BTreeSet::new();
    for mask in 0..(1u64 << free.len()) {
        let mut signs = vec![0i8; d];
        for i in 0..d {
            signs[i] = line.dir()[i].signum();
        }
        for (bit, &axis) in free.iter().enumerate() {
            signs[axis] = if mask >> bit & 1 == 1 { -1 } else { 1 };
        }
        if let Ok(class) = SignClass::new(&signs) {
            out.insert(class);
        }
    }
    out.into_iter().collect()
}

/// Negates the coordinates where `eps` is negative.
pub fn reflect_vec(v: &VecD, eps: &SignClass) -> VecD {
    VecD(
        v.iter()
            .zip(eps.signs())
            .map(|(c, &s)| if s == -1 { -c } else { c.clone() })
            .collect(),
    )
}

/// Reflects a line; a line of sign `eps` becomes weakly ascending.
pub fn reflect_line(line: &RectLine, eps: &SignClass) -> Result<RectLine> {
    check_dims(line.dim(), eps.dim())?;
    RectLine::new(
        reflect_vec(line.base(), eps),
        reflect_vec(line.dir(), eps),
    )
}

/// Reflects a box, re-sorting corners so `min <= max`.
pub fn reflect_box(b: &BoxRd, eps: &SignClass) -> Result<BoxRd> {
    check_dims(b.dim(), eps.dim())?;
    let lo = reflect_vec(b.min(), eps);
    let hi = reflect_vec(b.max(), eps);
    let mut min = Vec::with_capacity(b.dim());
    let mut max = Vec::with_capacity(b.dim());
    for i in 0..b.dim() {
        if lo[i] <= hi[i] {
            min.push(lo[i].clone());
            max.push(hi[i].clone());
        } else {
            min.push(hi[i].clone());
            max.push(lo[i].clone());
        }
    }
    BoxRd::new(VecD(min), VecD(max))
}

/// Exact meet predicate for a weakly ascending line and a box.
///
/// On the support the parameter ranges `[(a_i - x_i)/v_i, (b_i - x_i)/v_i]`
/// must intersect; off the support the base point must already sit inside
/// the box slab. Errors when the line is not weakly ascending.
pub fn line_meets_box(line: &RectLine, b: &BoxRd) -> Result<bool> {
    check_dims(line.dim(), b.dim())?;
    let line = line.ascending_representative()?;
    let mut lower: Option<Rat> = None;
    let mut upper: Option<Rat> = None;
    for i in 0..line.dim() {
        let v = &line.dir()[i];
        let x = &line.base()[i];
        if v.is_zero() {
            if x < &b.min()[i] || x > &b.max()[i] {
                return Ok(false);
            }
        } else {
            let lo = (&b.min()[i] - x) / v;
            let hi = (&b.max()[i] - x) / v;
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
    match (lower, upper) {
        (Some(l), Some(u)) => Ok(l <= u),
        // Zero direction everywhere is impossible; a line with support
        // constraints only trivially meets once the slabs all passed.
        _ => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sign(signs: &[i8]) -> SignClass {
        SignClass::new(signs).unwrap()
    }

    #[test]
    fn line_sign_strictly_ascending() {
        let l = RectLine::from_ints(&[0, 0, 0], &[1, 2, 3]).unwrap();
        assert_eq!(line_sign(&l), vec![sign(&[1, 1, 1])]);
    }

    #[test]
    fn line_sign_mixed() {
        let l = RectLine::from_ints(&[0, 0, 0], &[1, -2, 3]).unwrap();
        assert_eq!(line_sign(&l), vec![sign(&[1, -1, 1])]);
    }

    #[test]
    fn line_sign_with_zero_coordinate() {
        // dir (0,1,-1): the free first axis yields two canonical classes.
        let l = RectLine::from_ints(&[0, 0, 0], &[0, 1, -1]).unwrap();
        let got = line_sign(&l);
        assert_eq!(got.len(), 2);
        assert!(got.contains(&sign(&[1, 1, -1])));
        assert!(got.contains(&sign(&[1, -1, 1])));

        // Brute-force oracle: enumerate all canonical classes and test the
        // defining same-sign condition directly.
        let mut expected = Vec::new();
        for eps in SignClass::enumerate(3) {
            let mut pos = false;
            let mut neg = false;
            for (i, s) in eps.signs().iter().enumerate() {
                let prod = Rat::from_int(*s as i64) * &l.dir()[i];
                match prod.signum() {
                    1 => pos = true,
                    -1 => neg = true,
                    _ => {}
                }
            }
            if !(pos && neg) {
                expected.push(eps);
            }
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn reflect_box_example() {
        let b = BoxRd::from_ints(&[(0, 1), (0, 1)]).unwrap();
        let eps = sign(&[1, -1]);
        let r = reflect_box(&b, &eps).unwrap();
        assert_eq!(r.min(), &VecD::from_ints(&[0, -1]));
        assert_eq!(r.max(), &VecD::from_ints(&[1, 0]));
        // involution
        assert_eq!(reflect_box(&r, &eps).unwrap(), b);
    }

    #[test]
    fn reflect_line_example() {
        let l = RectLine::from_ints(&[0, 0], &[1, -1]).unwrap();
        let eps = sign(&[1, -1]);
        let r = reflect_line(&l, &eps).unwrap();
        assert_eq!(r.dir(), &VecD::from_ints(&[1, 1]));
        assert_eq!(reflect_line(&r, &eps).unwrap(), l);
    }

    #[test]
    fn reflect_identity() {
        let l = RectLine::from_ints(&[3, -4], &[2, 5]).unwrap();
        let eps = SignClass::all_plus(2);
        assert_eq!(reflect_line(&l, &eps).unwrap(), l);
    }

    #[test]
    fn meets_cube_diagonal() {
        let l = RectLine::from_ints(&[0, 0, 0], &[1, 1, 1]).unwrap();
        let b = BoxRd::cube(3, 0, 1);
        assert!(line_meets_box(&l, &b).unwrap());
    }

    #[test]
    fn meets_fails_on_zero_coordinate_outside_slab() {
        let l = RectLine::from_ints(&[2, 0, 0], &[0, 1, 1]).unwrap();
        let b = BoxRd::cube(3, 0, 1);
        assert!(!line_meets_box(&l, &b).unwrap());
    }

    #[test]
    fn meets_with_rational_base() {
        let l = RectLine::new(
            VecD(vec![rat(0, 1), rat(0, 1), rat(1, 2)]),
            VecD::from_ints(&[1, 2, 3]),
        )
        .unwrap();
        let b = BoxRd::cube(3, 0, 1);
        assert!(line_meets_box(&l, &b).unwrap());
    }

    #[test]
    fn meets_requires_weakly_ascending() {
        let l = RectLine::from_ints(&[0, 0], &[1, -1]).unwrap();
        let b = BoxRd::cube(2, 0, 1);
        assert_eq!(line_meets_box(&l, &b), Err(Error::NotWeaklyAscending));
    }

    #[test]
    fn degenerate_box_is_first_class() {
        let b = BoxRd::from_ints(&[(1, 1), (2, 2)]).unwrap();
        let l = RectLine::from_ints(&[0, 1], &[1, 1]).unwrap();
        assert!(line_meets_box(&l, &b).unwrap());
        let l2 = RectLine::from_ints(&[0, 2], &[1, 1]).unwrap();
        assert!(!line_meets_box(&l2, &b).unwrap());
    }

    #[test]
    fn negative_direction_is_same_line() {
        let b = BoxRd::cube(2, 0, 1);
        let l = RectLine::from_ints(&[0, 0], &[-1, -1]).unwrap();
        assert!(line_meets_box(&l, &b).unwrap());
    }
}
