//! Plücker coordinates, the Grassmannian relations, and the linearizing
//! Cremona transformation on Plücker space.
//!
//! Plücker space has one homogeneous coordinate per index pair `(i, j)`
//! with `0 <= i < j <= d`, where index 0 is the homogeneous coordinate of
//! `P^d` and `1..=d` are the affine axes. For a line with rectilinear
//! coordinates `(x, v)` the entries are `p_{0i} = v_i` and
//! `p_{ij} = x_i v_j - x_j v_i`.
//!
//! The Cremona transformation `q_{0i} = 1/p_{0i}`,
//! `q_{ij} = p_{ij}/(p_{0i} p_{0j})` is implemented in its homogeneous
//! polynomial form (each coordinate multiplied by `p_{01} ... p_{0d}`),
//! which extends it to everything outside the indeterminacy locus. It is an
//! involution and maps the Grassmannian onto the linear space `LG(d)` cut
//! out by `q_{jk} - q_{ik} + q_{ij} = 0`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{RectLine, VecD};
use crate::linalg;
use crate::rat::Rat;

/// Which side of the Cremona involution a point lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chart {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "q")]
    Q,
}

impl Chart {
    pub fn flipped(self) -> Chart {
        match self {
            Chart::P => Chart::Q,
            Chart::Q => Chart::P,
        }
    }
}

/// A nonzero homogeneous coordinate vector in Plücker space.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "PlueckerRepr", into = "PlueckerRepr")]
pub struct PlueckerPoint {
    dim: usize,
    chart: Chart,
    /// Entries for pairs (0,1),(0,2),...,(0,d),(1,2),...,(d-1,d).
    entries: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct PlueckerRepr {
    dim: usize,
    chart: Chart,
    entries: BTreeMap<String, Rat>,
}

fn pair_key(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

fn parse_pair_key(key: &str, dim: usize) -> Result<(usize, usize)> {
    let (i, j) = if let Some((a, b)) = key.split_once(',') {
        (
            a.parse().map_err(|_| Error::BadSupport(0))?,
            b.parse().map_err(|_| Error::BadSupport(0))?,
        )
    } else if key.len() == 2 {
        let mut chars = key.chars();
        let a = chars.next().unwrap().to_digit(10).ok_or(Error::BadSupport(0))?;
        let b = chars.next().unwrap().to_digit(10).ok_or(Error::BadSupport(0))?;
        (a as usize, b as usize)
    } else {
        return Err(Error::BadSupport(0));
    };
    if i >= j || j > dim {
        return Err(Error::BadSupport(j));
    }
    Ok((i, j))
}

impl TryFrom<PlueckerRepr> for PlueckerPoint {
    type Error = Error;
    fn try_from(r: PlueckerRepr) -> Result<Self> {
        let mut p = PlueckerPoint::zeroed(r.dim, r.chart)?;
        for (key, value) in r.entries {
            let (i, j) = parse_pair_key(&key, r.dim)?;
            *p.entry_mut(i, j) = value;
        }
        if p.entries.iter().all(Rat::is_zero) {
            return Err(Error::ZeroDirection);
        }
        Ok(p)
    }
}

impl From<PlueckerPoint> for PlueckerRepr {
    fn from(p: PlueckerPoint) -> Self {
        let mut entries = BTreeMap::new();
        for i in 0..=p.dim {
            for j in (i + 1)..=p.dim {
                let v = p.get(i, j);
                if !v.is_zero() {
                    entries.insert(pair_key(i, j), v.clone());
                }
            }
        }
        PlueckerRepr {
            dim: p.dim,
            chart: p.chart,
            entries,
        }
    }
}

impl PlueckerPoint {
    fn zeroed(dim: usize, chart: Chart) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { need: 2 });
        }
        let len = (dim + 1) * dim / 2;
        Ok(PlueckerPoint {
            dim,
            chart,
            entries: vec![Rat::zero(); len],
        })
    }

    /// Builds a point from `(pair, value)` entries; unlisted pairs are zero.
    pub fn from_entries(
        dim: usize,
        chart: Chart,
        entries: &[((usize, usize), Rat)],
    ) -> Result<Self> {
        let mut p = Self::zeroed(dim, chart)?;
        for ((i, j), value) in entries {
            if *i >= *j || *j > dim {
                return Err(Error::BadSupport(*j));
            }
            *p.entry_mut(*i, *j) = value.clone();
        }
        if p.entries.iter().all(Rat::is_zero) {
            return Err(Error::ZeroDirection);
        }
        Ok(p)
    }

    /// Dense constructor in the lexicographic pair order
    /// `(0,1),...,(0,d),(1,2),...,(d-1,d)`.
    pub fn from_dense(dim: usize, chart: Chart, entries: Vec<Rat>) -> Result<Self> {
        let len = (dim + 1) * dim / 2;
        if entries.len() != len {
            return Err(Error::DimensionMismatch(entries.len(), len));
        }
        if entries.iter().all(Rat::is_zero) {
            return Err(Error::ZeroDirection);
        }
        if dim < 2 {
            return Err(Error::DimensionTooSmall { need: 2 });
        }
        Ok(PlueckerPoint {
            dim,
            chart,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j <= self.dim);
        // Pairs with smaller first index come first: sum_{k<i} (d - k)
        // entries, then offset j - i - 1 within the block.
        i * (2 * self.dim - i + 1) / 2 + (j - i - 1)
    }

    /// Entry `p_{ij}` for `0 <= i < j <= dim`.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[self.index(i, j)]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        let idx = self.index(i, j);
        &mut self.entries[idx]
    }

    /// Antisymmetric extension: `p_{ji} = -p_{ij}`, `p_{ii} = 0`.
    pub fn get_signed(&self, i: usize, j: usize) -> Rat {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.get(i, j).clone(),
            Greater => -self.get(j, i),
            Equal => Rat::zero(),
        }
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    /// The direction part `(p_{01}, ..., p_{0d})`.
    pub fn direction(&self) -> Vec<Rat> {
        (1..=self.dim).map(|i| self.get(0, i).clone()).collect()
    }

    pub fn scale(&self, s: &Rat) -> PlueckerPoint {
        assert!(!s.is_zero());
        PlueckerPoint {
            dim: self.dim,
            chart: self.chart,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }
}

/// Projective equality: equal up to one nonzero rational scale.
pub fn projective_eq(a: &PlueckerPoint, b: &PlueckerPoint) -> bool {
    if a.dim != b.dim || a.chart != b.chart {
        return false;
    }
    let Some(pivot) = a.entries.iter().position(|e| !e.is_zero()) else {
        return b.entries.iter().all(Rat::is_zero);
    };
    if b.entries[pivot].is_zero() {
        return false;
    }
    let (pa, pb) = (&a.entries[pivot], &b.entries[pivot]);
    a.entries
        .iter()
        .zip(&b.entries)
        .all(|(ea, eb)| ea * pb == eb * pa)
}

/// Plücker coordinates of a line: `p_{0i} = v_i`, `p_{ij} = x_i v_j - x_j v_i`.
pub fn line_to_pluecker(line: &RectLine) -> Result<PlueckerPoint> {
    let d = line.dim();
    let mut p = PlueckerPoint::zeroed(d, Chart::P)?;
    for i in 1..=d {
        *p.entry_mut(0, i) = line.dir()[i - 1].clone();
    }
    for i in 1..=d {
        for j in (i + 1)..=d {
            let x = line.base();
            let v = line.dir();
            *p.entry_mut(i, j) = &x[i - 1] * &v[j - 1] - &x[j - 1] * &v[i - 1];
        }
    }
    Ok(p)
}

/// All Plücker relations, exactly.
pub fn check_pluecker_relations(p: &PlueckerPoint) -> Result<bool> {
    if p.chart != Chart::P {
        return Err(Error::WrongChart { expected: 'p' });
    }
    let d = p.dim;
    for i in 1..=d {
        for j in (i + 1)..=d {
            for k in (j + 1)..=d {
                let r = p.get(0, i) * p.get(j, k) - p.get(0, j) * p.get(i, k)
                    + p.get(0, k) * p.get(i, j);
                if !r.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    for i in 1..=d {
        for j in (i + 1)..=d {
            for k in (j + 1)..=d {
                for l in (k + 1)..=d {
                    let r = p.get(i, j) * p.get(k, l) - p.get(i, k) * p.get(j, l)
                        + p.get(i, l) * p.get(j, k);
                    if !r.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The linear relations cutting out `LG(d)`:
/// `q_{jk} - q_{ik} + q_{ij} = 0` for `1 <= i < j < k <= d`.
pub fn check_lg_relations(q: &PlueckerPoint) -> Result<bool> {
    if q.chart != Chart::Q {
        return Err(Error::WrongChart { expected: 'q' });
    }
    let d = q.dim;
    for i in 1..=d {
        for j in (i + 1)..=d {
            for k in (j + 1)..=d {
                let r = q.get(j, k) - q.get(i, k) + q.get(i, j);
                if !r.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Membership in the indeterminacy locus of the Cremona transformation:
/// the subspaces `L_{ijk}` (three direction coordinates vanish) and
/// `L_{ij}` (`p_{ij} = p_{0i} = p_{0j} = 0`). Indices are coordinate axes
/// `1..=d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndeterminacyClass {
    pub l_ijk: Vec<[usize; 3]>,
    pub l_ij: Vec<[usize; 2]>,
}

impl IndeterminacyClass {
    pub fn is_none(&self) -> bool {
        self.l_ijk.is_empty() && self.l_ij.is_empty()
    }
}

/// Reports every `L_{ijk}` and `L_{ij}` containing the point. The result is
/// empty exactly when the homogeneous Cremona transform of the point is a
/// nonzero vector.
pub fn classify_indeterminacy(p: &PlueckerPoint) -> IndeterminacyClass {
    let d = p.dim;
    let zero_dirs: Vec<usize> = (1..=d).filter(|&i| p.get(0, i).is_zero()).collect();
    let mut class = IndeterminacyClass::default();
    for (a, &i) in zero_dirs.iter().enumerate() {
        for (b, &j) in zero_dirs.iter().enumerate().skip(a + 1) {
            if p.get(i, j).is_zero() {
                class.l_ij.push([i, j]);
            }
            for &k in &zero_dirs[b + 1..] {
                class.l_ijk.push([i, j, k]);
            }
        }
    }
    class
}

/// The Cremona transformation in homogeneous polynomial form:
/// `q_{0i} = prod_{j != i} p_{0j}` and `q_{ij} = p_{ij} prod_{k != i,j} p_{0k}`.
/// The output chart is flipped. Errors with the indeterminacy witnesses when
/// the image would be the zero vector.
pub fn cremona_transform(p: &PlueckerPoint) -> Result<PlueckerPoint> {
    let class = classify_indeterminacy(p);
    if !class.is_none() {
        return Err(Error::Indeterminate(class));
    }
    let d = p.dim;
    let dirs: Vec<&Rat> = (1..=d).map(|i| p.get(0, i)).collect();
    let product_excluding = |skip: &[usize]| -> Rat {
        let mut acc = Rat::one();
        for (idx, v) in dirs.iter().enumerate() {
            let axis = idx + 1;
            if !skip.contains(&axis) {
                acc *= *v;
            }
        }
        acc
    };
    let mut q = PlueckerPoint::zeroed(d, p.chart.flipped())?;
    for i in 1..=d {
        *q.entry_mut(0, i) = product_excluding(&[i]);
    }
    for i in 1..=d {
        for j in (i + 1)..=d {
            if !p.get(i, j).is_zero() {
                *q.entry_mut(i, j) = p.get(i, j) * &product_excluding(&[i, j]);
            }
        }
    }
    debug_assert!(!q.entries.iter().all(Rat::is_zero));
    Ok(q)
}

/// Image of a point with exactly one vanishing `p_{0i}` under the Cremona
/// transformation, verifying the contraction structure: only `q_{0i}` and
/// the entries pairing `i` with other axes survive, and the latter agree up
/// to the antisymmetric sign convention.
pub fn contraction_image(p: &PlueckerPoint) -> Result<PlueckerPoint> {
    let d = p.dim;
    let zero_dirs: Vec<usize> = (1..=d).filter(|&i| p.get(0, i).is_zero()).collect();
    if zero_dirs.len() != 1 {
        return Err(Error::ContractionPrecondition {
            found: zero_dirs.len(),
        });
    }
    let axis = zero_dirs[0];
    let q = cremona_transform(p)?;
    for i in 1..=d {
        for j in (i + 1)..=d {
            if i != axis && j != axis && !q.get(i, j).is_zero() {
                return Err(Error::ContractionStructure);
            }
        }
    }
    // q_{j,axis} written with `axis` as the second index must share one value.
    let values: Vec<Rat> = (1..=d)
        .filter(|&j| j != axis)
        .map(|j| q.get_signed(j, axis))
        .collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::ContractionStructure);
    }
    Ok(q)
}

/// Two projective points spanning the line, valid for points on the
/// Grassmannian. Each point is a homogeneous `(d+1)`-vector on `z_0..z_d`.
pub fn spanning_points(p: &PlueckerPoint) -> Result<[Vec<Rat>; 2]> {
    let d = p.dim;
    let mut pivot = None;
    'outer: for i in 0..=d {
        for j in (i + 1)..=d {
            if !p.get(i, j).is_zero() {
                pivot = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((a, b)) = pivot else {
        return Err(Error::ZeroDirection);
    };
    let scale = p.get(a, b).recip();
    let u: Vec<Rat> = (0..=d).map(|g| p.get_signed(g, b) * &scale).collect();
    let v: Vec<Rat> = (0..=d).map(|g| p.get_signed(a, g) * &scale).collect();
    Ok([u, v])
}

/// Projective incidence of two lines: the four spanning points fit in a
/// 3-space.
pub fn lines_meet_projectively(a: &PlueckerPoint, b: &PlueckerPoint) -> Result<bool> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let [a1, a2] = spanning_points(a)?;
    let [b1, b2] = spanning_points(b)?;
    Ok(linalg::rank(vec![a1, a2, b1, b2]) <= 3)
}

/// Incidence of two lines given in rectilinear coordinates, including
/// meeting points at infinity (parallel lines meet projectively).
pub fn rect_lines_meet(a: &RectLine, b: &RectLine) -> Result<bool> {
    lines_meet_projectively(&line_to_pluecker(a)?, &line_to_pluecker(b)?)
}

/// The Cremona coordinates of a line as a q-side point, built directly from
/// normalized chart data `(y, w)`: `q_{0i} = w_i` and `q_{ij} = y_i - y_j`.
pub fn q_point_from_chart(y: &VecD, w: &VecD) -> Result<PlueckerPoint> {
    if y.dim() != w.dim() {
        return Err(Error::DimensionMismatch(y.dim(), w.dim()));
    }
    let d = y.dim();
    let mut q = PlueckerPoint::zeroed(d, Chart::Q)?;
    for i in 1..=d {
        *q.entry_mut(0, i) = w[i - 1].clone();
    }
    for i in 1..=d {
        for j in (i + 1)..=d {
            *q.entry_mut(i, j) = &y[i - 1] - &y[j - 1];
        }
    }
    if q.entries.iter().all(Rat::is_zero) {
        return Err(Error::ZeroDirection);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cremona::to_cremona;
    use crate::rat::rat;

    fn dense(dim: usize, chart: Chart, vals: &[i64]) -> PlueckerPoint {
        PlueckerPoint::from_dense(
            dim,
            chart,
            vals.iter().map(|&v| Rat::from_int(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn line_through_origin() {
        let l = RectLine::from_ints(&[0, 0, 0], &[1, 2, 3]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        assert_eq!(p.entries(), dense(3, Chart::P, &[1, 2, 3, 0, 0, 0]).entries());
        assert!(check_pluecker_relations(&p).unwrap());
    }

    #[test]
    fn axis_parallel_line() {
        let l = RectLine::from_ints(&[1, 0, 0], &[0, 1, 0]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        // (p01,p02,p03,p12,p13,p23) = (0,1,0,1,0,0).
        assert_eq!(p.entries(), dense(3, Chart::P, &[0, 1, 0, 1, 0, 0]).entries());
        assert!(check_pluecker_relations(&p).unwrap());
    }

    #[test]
    fn pluecker_relation_detects_non_lines() {
        let bad = dense(3, Chart::P, &[1, 1, 1, 1, 1, 1]);
        assert!(!check_pluecker_relations(&bad).unwrap());
        let good = dense(3, Chart::P, &[1, 1, 1, 1, 1, 0]);
        assert!(check_pluecker_relations(&good).unwrap());
    }

    #[test]
    fn cremona_of_origin_line() {
        let p = dense(3, Chart::P, &[1, 2, 3, 0, 0, 0]);
        let q = cremona_transform(&p).unwrap();
        assert_eq!(q.chart(), Chart::Q);
        assert!(projective_eq(&q, &dense(3, Chart::Q, &[6, 3, 2, 0, 0, 0])));
        assert!(check_lg_relations(&q).unwrap());
    }

    #[test]
    fn involution_on_generic_ambient_points() {
        // Not on the Grassmannian, but all p_{0i} nonzero.
        let p = PlueckerPoint::from_dense(
            4,
            Chart::P,
            vec![
                rat(1, 2),
                rat(-3, 1),
                rat(7, 5),
                rat(2, 3),
                rat(1, 1),
                rat(0, 1),
                rat(-4, 7),
                rat(5, 1),
                rat(1, 9),
                rat(-2, 5),
            ],
        )
        .unwrap();
        let back = cremona_transform(&cremona_transform(&p).unwrap()).unwrap();
        assert!(projective_eq(&back, &p));
    }

    #[test]
    fn lg_relations_reject() {
        let q = dense(3, Chart::Q, &[1, 1, 1, 1, 1, 1]);
        assert!(!check_lg_relations(&q).unwrap());
    }

    #[test]
    fn q_side_matches_chart_coordinates() {
        let l = RectLine::from_ints(&[3, 4, 5], &[1, 2, 5]).unwrap();
        let q = cremona_transform(&line_to_pluecker(&l).unwrap()).unwrap();
        let c = to_cremona(&l).unwrap();
        let chart_q = q_point_from_chart(c.y(), c.w()).unwrap();
        assert!(projective_eq(&q, &chart_q));
    }

    #[test]
    fn classify_examples() {
        // dir (0,0,1) through (1,2,0): p01 = p02 = 0, p12 = 0.
        let l = RectLine::from_ints(&[1, 2, 0], &[0, 0, 1]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        let class = classify_indeterminacy(&p);
        assert_eq!(class.l_ij, vec![[1, 2]]);
        assert!(class.l_ijk.is_empty());
        assert!(cremona_transform(&p).is_err());

        let asc = line_to_pluecker(&RectLine::from_ints(&[0, 1, 2], &[1, 2, 3]).unwrap()).unwrap();
        assert!(classify_indeterminacy(&asc).is_none());

        // d=4 ambient point with p01 = p02 = p03 = 0, p12 != 0.
        let p4 = PlueckerPoint::from_entries(
            4,
            Chart::P,
            &[((0, 4), Rat::one()), ((1, 2), Rat::from_int(5))],
        )
        .unwrap();
        let class4 = classify_indeterminacy(&p4);
        assert_eq!(class4.l_ijk, vec![[1, 2, 3]]);
        // Pairs of vanishing directions with vanishing p_ij are also listed.
        assert_eq!(class4.l_ij, vec![[1, 3], [2, 3]]);
    }

    #[test]
    fn classifier_matches_zero_image() {
        // The homogeneous image is zero exactly when a witness exists.
        let cases: Vec<PlueckerPoint> = vec![
            dense(3, Chart::P, &[0, 0, 1, 1, 0, 0]),
            dense(3, Chart::P, &[0, 0, 1, 0, 1, 1]),
            dense(3, Chart::P, &[1, 2, 3, 4, 5, 6]),
            dense(4, Chart::P, &[0, 0, 0, 1, 2, 0, 0, 0, 0, 0]),
        ];
        for p in cases {
            let class = classify_indeterminacy(&p);
            match cremona_transform(&p) {
                Ok(q) => {
                    assert!(class.is_none());
                    assert!(!q.entries().iter().all(Rat::is_zero));
                }
                Err(Error::Indeterminate(witness)) => {
                    assert!(!witness.is_none());
                    assert_eq!(witness, class);
                }
                Err(other) => panic!("unexpected error {other:?}"),
            }
        }
    }

    #[test]
    fn contraction_example() {
        // d=3, dir (1,1,0) through (0,0,1): image supported on q03, q13, q23
        // with the signed values equal.
        let l = RectLine::from_ints(&[0, 0, 1], &[1, 1, 0]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        assert_eq!(p.entries(), dense(3, Chart::P, &[1, 1, 0, 0, -1, -1]).entries());
        let q = contraction_image(&p).unwrap();
        assert_eq!(q.get(0, 3), &Rat::one());
        assert_eq!(q.get(1, 3), &Rat::from_int(-1));
        assert_eq!(q.get(2, 3), &Rat::from_int(-1));
        assert!(q.get(0, 1).is_zero() && q.get(0, 2).is_zero() && q.get(1, 2).is_zero());
    }

    #[test]
    fn contraction_rejects_full_direction() {
        let l = RectLine::from_ints(&[0, 1, 2], &[1, 2, 3]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        assert_eq!(
            contraction_image(&p),
            Err(Error::ContractionPrecondition { found: 0 })
        );
    }

    #[test]
    fn spanning_points_lie_on_the_line() {
        let l = RectLine::from_ints(&[2, -1, 3], &[1, 4, 5]).unwrap();
        let p = line_to_pluecker(&l).unwrap();
        let [u, v] = spanning_points(&p).unwrap();
        for point in [u, v] {
            if point[0].is_zero() {
                // Point at infinity: must be the direction.
                let dir = l.dir();
                let k = (1..=3).find(|&i| !point[i].is_zero()).unwrap();
                let s = &dir[k - 1] / &point[k];
                for i in 1..=3 {
                    assert_eq!(&point[i] * &s, dir[i - 1]);
                }
            } else {
                let affine = VecD::new(
                    (1..=3).map(|i| &point[i] / &point[0]).collect(),
                );
                assert!(l.passes_through(&affine));
            }
        }
    }

    #[test]
    fn meeting_lines() {
        let a = RectLine::from_ints(&[0, 0, 0], &[1, 2, 3]).unwrap();
        let b = RectLine::from_ints(&[0, 0, 0], &[2, 3, 1]).unwrap();
        let c = RectLine::from_ints(&[5, 5, 5], &[1, 2, 3]).unwrap();
        assert!(rect_lines_meet(&a, &b).unwrap());
        // Parallel lines meet at infinity.
        assert!(rect_lines_meet(&a, &c).unwrap());
        // Generic skew pair does not meet.
        let d = RectLine::from_ints(&[1, 0, 0], &[2, 3, 1]).unwrap();
        assert!(!rect_lines_meet(&a, &d).unwrap());
    }
}
