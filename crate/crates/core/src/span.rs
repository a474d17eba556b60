//! Cremona-affine spans of line families and their determinantal geometry.
//!
//! A line whose direction coordinates are all nonzero is cut out by the
//! linear forms `b_i = q_{1i} z_0 - z_1 + q_{0i} z_i` for `i = 2..d`, the
//! Plücker coordinates scaled to `p_{01} = 1`. Stacking these forms for a
//! family of `n` independent lines gives the `n x (d-1)` matrix `M` of
//! linear forms whose row space realizes the affine span of the family's
//! Cremona coordinates. The union of the span's lines is the determinantal
//! variety where `M` drops rank: an `n`-fold scroll of degree
//! `binom(d-1, n-1)` when `n <= d-1`.
//!
//! For two lines meeting at a point in `R^3` the span degenerates to a
//! quadric cone through the apex; the Cremona-convex hull is an interval in
//! its ruling, while the frame-convex hull is the two-dimensional cone of
//! ascending directions between two ratio bounds.

use serde::{Deserialize, Serialize};

use crate::cremona::to_cremona;
use crate::error::{Error, Result};
use crate::geometry::{RectLine, VecD};
use crate::linalg;
use crate::pluecker::{
    cremona_transform, line_to_pluecker, q_point_from_chart, PlueckerPoint,
};
use crate::rat::Rat;

/// A linear form on `P^d`, stored as its `d + 1` coefficients on `z_0..z_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForm(pub Vec<Rat>);

impl LinearForm {
    pub fn eval(&self, z0: &Rat, point: &VecD) -> Rat {
        let mut acc = &self.0[0] * z0;
        for (c, x) in self.0[1..].iter().zip(point.iter()) {
            acc += c * x;
        }
        acc
    }
}

/// The matrix `M` of linear forms `b_i(l_j)`: one row per line, one column
/// per axis `i = 2..d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanMatrix {
    dim: usize,
    n: usize,
    rows: Vec<Vec<LinearForm>>,
}

impl SpanMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_lines(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<LinearForm>] {
        &self.rows
    }

    /// The scalar matrix obtained by evaluating every form at a point.
    pub fn evaluate(&self, z0: &Rat, point: &VecD) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|f| f.eval(z0, point)).collect())
            .collect()
    }
}

fn require_nonzero_dirs(line: &RectLine) -> Result<()> {
    for (axis, v) in line.dir().iter().enumerate() {
        if v.is_zero() {
            return Err(Error::VanishingDirCoord { axis });
        }
    }
    Ok(())
}

/// Reciprocal direction vector `(1/v_1, ..., 1/v_d)`.
fn cremona_direction(line: &RectLine) -> Vec<Rat> {
    line.dir().iter().map(Rat::recip).collect()
}

/// Independence of a family: the Cremona directions (reciprocal direction
/// vectors, taken projectively) must be linearly independent, which for
/// sum-normalizable vectors is exactly affine independence in the
/// `sum w = 1` gauge slice.
pub fn lines_independent(lines: &[RectLine]) -> Result<bool> {
    for l in lines {
        require_nonzero_dirs(l)?;
    }
    let stacked: Vec<Vec<Rat>> = lines.iter().map(cremona_direction).collect();
    Ok(linalg::rank(stacked) == lines.len())
}

/// The `p_{01} = 1` chart data of a line: `(q_{1i}, q_{0i})` for `i = 2..d`.
fn chart_row(line: &RectLine) -> (Vec<Rat>, Vec<Rat>) {
    let d = line.dim();
    let x = line.base();
    let v = line.dir();
    let mut q1 = Vec::with_capacity(d - 1);
    let mut q0 = Vec::with_capacity(d - 1);
    for i in 1..d {
        q0.push(&v[0] / &v[i]);
        q1.push(&x[0] - &(&x[i] * &v[0] / &v[i]));
    }
    (q1, q0)
}

/// Builds `M` for a family of independent lines with nonzero direction
/// coordinates.
pub fn build_span_matrix(lines: &[RectLine]) -> Result<SpanMatrix> {
    if lines.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let dim = lines[0].dim();
    if dim < 2 {
        return Err(Error::DimensionTooSmall { need: 2 });
    }
    for l in lines {
        if l.dim() != dim {
            return Err(Error::DimensionMismatch(l.dim(), dim));
        }
    }
    if !lines_independent(lines)? {
        return Err(Error::DependentLines);
    }
    let rows = lines
        .iter()
        .map(|l| {
            let (q1, q0) = chart_row(l);
            (0..dim - 1)
                .map(|k| {
                    let mut coeffs = vec![Rat::zero(); dim + 1];
                    coeffs[0] = q1[k].clone();
                    coeffs[1] = Rat::from_int(-1);
                    coeffs[k + 2] = q0[k].clone();
                    LinearForm(coeffs)
                })
                .collect()
        })
        .collect();
    Ok(SpanMatrix {
        dim,
        n: lines.len(),
        rows,
    })
}

/// Exact rank of `M` evaluated at a (projective) point.
pub fn rank_at_point(m: &SpanMatrix, point: &VecD, z0: &Rat) -> Result<usize> {
    if point.dim() != m.dim {
        return Err(Error::DimensionMismatch(point.dim(), m.dim));
    }
    Ok(linalg::rank(m.evaluate(z0, point)))
}

/// Membership of a finite point in the scroll swept by the span lines:
/// all maximal minors of the evaluated matrix vanish, i.e. the rank drops.
pub fn scroll_membership(m: &SpanMatrix, point: &VecD) -> Result<bool> {
    Ok(rank_at_point(m, point, &Rat::one())? < m.n)
}

/// A line of the Cremona-affine span, which may leave the rectilinear
/// chart when the combined direction acquires a zero coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpanLine {
    Line { line: RectLine },
    ChartBoundary { point: PlueckerPoint },
}

/// Normalized chart vectors `(y, w)` of a weakly ascending line with full
/// support.
fn canonical_chart(line: &RectLine) -> Result<(VecD, VecD)> {
    require_nonzero_dirs(line)?;
    let c = to_cremona(line)?;
    Ok((c.y().clone(), c.w().clone()))
}

/// Affine combination of the family in normalized Cremona coordinates.
///
/// Generators must be weakly ascending with all direction coordinates
/// nonzero. Signed weights are allowed: combinations beyond the convex
/// hull produce rulings with non-ascending directions, and a combined
/// `w` entry hitting zero yields the axis-parallel ruling as a Plücker
/// point on the Grassmannian.
pub fn span_line_at(lines: &[RectLine], weights: &[Rat]) -> Result<SpanLine> {
    if lines.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if weights.len() != lines.len() {
        return Err(Error::BadWeights);
    }
    if weights.iter().sum::<Rat>() != Rat::one() {
        return Err(Error::BadWeights);
    }
    let dim = lines[0].dim();
    let mut y = vec![Rat::zero(); dim];
    let mut w = vec![Rat::zero(); dim];
    for (line, lambda) in lines.iter().zip(weights) {
        if line.dim() != dim {
            return Err(Error::DimensionMismatch(line.dim(), dim));
        }
        let (ly, lw) = canonical_chart(line)?;
        for i in 0..dim {
            y[i] += &ly[i] * lambda;
            w[i] += &lw[i] * lambda;
        }
    }
    if w.iter().all(|wi| !wi.is_zero()) {
        let base = VecD::new(
            y.iter().zip(&w).map(|(yi, wi)| yi / wi).collect(),
        );
        let dir = VecD::new(w.iter().map(Rat::recip).collect());
        Ok(SpanLine::Line {
            line: RectLine::new(base, dir)?,
        })
    } else {
        let q = q_point_from_chart(&VecD::new(y), &VecD::new(w))?;
        Ok(SpanLine::ChartBoundary {
            point: cremona_transform(&q)?,
        })
    }
}

/// The unique member of the Cremona-affine span parallel to each
/// coordinate axis, as Plücker points: the preimages under the Cremona
/// transformation of the hyperplane sections `w_i = 0` of the span line.
///
/// Each ruling lies on the scroll and meets every coordinate-parallel
/// codimension-2 plane through both generators. When the generators meet
/// in a point the scroll is a cone and every ruling passes through the
/// apex, hence meets both generators; for skew generators the family is
/// one ruling of a smooth scroll and its members are pairwise disjoint.
///
/// Fails listing the axes where the generators share a Cremona direction
/// coordinate (no affine weight can cancel it).
pub fn axis_parallel_rulings(l1: &RectLine, l2: &RectLine) -> Result<Vec<PlueckerPoint>> {
    if l1.dim() != l2.dim() {
        return Err(Error::DimensionMismatch(l1.dim(), l2.dim()));
    }
    if !lines_independent(&[l1.clone(), l2.clone()])? {
        return Err(Error::DependentLines);
    }
    let dim = l1.dim();
    let (y1, w1) = canonical_chart(l1)?;
    let (y2, w2) = canonical_chart(l2)?;
    let bad: Vec<usize> = (0..dim).filter(|&i| w1[i] == w2[i]).collect();
    if !bad.is_empty() {
        return Err(Error::EqualCremonaDirection { axes: bad });
    }
    let mut rulings = Vec::with_capacity(dim);
    for i in 0..dim {
        // (1 - t) w1_i + t w2_i = 0.
        let t = &w1[i] / &(&w1[i] - &w2[i]);
        let s = &Rat::one() - &t;
        let y = VecD::new(
            (0..dim)
                .map(|k| &y1[k] * &s + &y2[k] * &t)
                .collect(),
        );
        let w = VecD::new(
            (0..dim)
                .map(|k| &w1[k] * &s + &w2[k] * &t)
                .collect(),
        );
        debug_assert!(w[i].is_zero());
        let p = cremona_transform(&q_point_from_chart(&y, &w)?)?;
        // The direction must be supported on axis i alone.
        for j in 1..=dim {
            if j != i + 1 {
                assert!(p.get(0, j).is_zero(), "ruling direction concentrated");
            }
        }
        assert!(!p.get(0, i + 1).is_zero());
        rulings.push(p);
    }
    Ok(rulings)
}

/// The codimension-2 plane `{z_i = value_i, z_j = value_j}` parallel to all
/// other coordinate axes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codim2Plane {
    pub axis_i: usize,
    pub axis_j: usize,
    pub value_i: Rat,
    pub value_j: Rat,
}

impl Codim2Plane {
    /// Exact incidence with a line: some parameter satisfies both pinned
    /// coordinates.
    pub fn meets_line(&self, line: &RectLine) -> bool {
        let solve_axis = |axis: usize, value: &Rat| -> Option<Option<Rat>> {
            let v = &line.dir()[axis];
            let x = &line.base()[axis];
            if v.is_zero() {
                // Constant coordinate: either always or never on the plane.
                (x == value).then_some(None)
            } else {
                Some(Some((value - x) / v))
            }
        };
        match (
            solve_axis(self.axis_i, &self.value_i),
            solve_axis(self.axis_j, &self.value_j),
        ) {
            (Some(a), Some(b)) => match (a, b) {
                (Some(t1), Some(t2)) => t1 == t2,
                (Some(_), None) | (None, Some(_)) | (None, None) => true,
            },
            _ => false,
        }
    }

    /// The intersection point with a line meeting the plane, when the
    /// parameter is pinned by at least one axis.
    pub fn intersection_with(&self, line: &RectLine) -> Option<VecD> {
        if !self.meets_line(line) {
            return None;
        }
        let t = [(self.axis_i, &self.value_i), (self.axis_j, &self.value_j)]
            .into_iter()
            .find_map(|(axis, value)| {
                let v = &line.dir()[axis];
                (!v.is_zero()).then(|| (value - &line.base()[axis]) / v)
            })?;
        Some(line.at(&t))
    }
}

/// Projected intersection of two lines in the `(i, j)` coordinate plane.
fn projected_meet(
    l1: &RectLine,
    l2: &RectLine,
    i: usize,
    j: usize,
) -> Result<(Rat, Rat)> {
    let det = &l1.dir()[i] * &l2.dir()[j] - &l1.dir()[j] * &l2.dir()[i];
    if det.is_zero() {
        return Err(Error::ParallelProjection { i, j });
    }
    // x1 + t v1 = x2 + s v2 on axes i, j; solve by Cramer.
    let rhs_i = &l2.base()[i] - &l1.base()[i];
    let rhs_j = &l2.base()[j] - &l1.base()[j];
    let t = (&rhs_i * &l2.dir()[j] - &rhs_j * &l2.dir()[i]) / &det;
    Ok((
        &l1.base()[i] + &(&t * &l1.dir()[i]),
        &l1.base()[j] + &(&t * &l1.dir()[j]),
    ))
}

/// The unique codimension-2 plane through the projected intersection of the
/// two lines, parallel to all axes except `i` and `j`.
pub fn meet_codim2_plane(
    l1: &RectLine,
    l2: &RectLine,
    i: usize,
    j: usize,
) -> Result<Codim2Plane> {
    if l1.dim() != l2.dim() {
        return Err(Error::DimensionMismatch(l1.dim(), l2.dim()));
    }
    if i == j || i >= l1.dim() || j >= l1.dim() {
        return Err(Error::BadSupport(i.max(j)));
    }
    let (value_i, value_j) = projected_meet(l1, l2, i, j)?;
    Ok(Codim2Plane {
        axis_i: i,
        axis_j: j,
        value_i,
        value_j,
    })
}

/// True when the affine span of the two directions avoids every
/// codimension-2 coordinate plane: all pairwise projections of the
/// directions are non-proportional.
pub fn direction_span_avoids_codim2(l1: &RectLine, l2: &RectLine) -> bool {
    let d = l1.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            let det = &l1.dir()[i] * &l2.dir()[j] - &l1.dir()[j] * &l2.dir()[i];
            if det.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The three equivalent ruling conditions for a query line against a
/// generator pair, each computed along an independent route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RulingCheck {
    /// The query meets every coordinate-parallel codimension-2 plane
    /// through both generators.
    pub meets_all_planes: bool,
    /// All coordinate-plane projections of the triple are concurrent.
    pub projections_concurrent: bool,
    /// The query's Cremona coordinates lie on the projective line through
    /// the generators' in `LG(d)`.
    pub cremona_collinear: bool,
}

impl RulingCheck {
    pub fn agree(&self) -> bool {
        self.meets_all_planes == self.projections_concurrent
            && self.projections_concurrent == self.cremona_collinear
    }
}

/// Checks the scroll-ruling equivalence for `query` against the pair
/// `(l1, l2)`. The generators must be independent with direction span
/// avoiding the codimension-2 coordinate planes.
pub fn ruling_equivalence_check(
    l1: &RectLine,
    l2: &RectLine,
    query: &RectLine,
) -> Result<RulingCheck> {
    for l in [l1, l2, query] {
        require_nonzero_dirs(l)?;
    }
    if !lines_independent(&[l1.clone(), l2.clone()])? {
        return Err(Error::RulingHypothesis("generators are dependent".into()));
    }
    if !direction_span_avoids_codim2(l1, l2) {
        return Err(Error::RulingHypothesis(
            "direction span meets a codimension-2 coordinate plane".into(),
        ));
    }
    let d = l1.dim();

    let mut meets_all_planes = true;
    for i in 0..d {
        for j in (i + 1)..d {
            let plane = meet_codim2_plane(l1, l2, i, j)?;
            debug_assert!(plane.meets_line(l1) && plane.meets_line(l2));
            if !plane.meets_line(query) {
                meets_all_planes = false;
            }
        }
    }

    // Concurrency via pure 2D incidence: the projected generator meet must
    // lie on the query's projection, tested with a cross product.
    let mut projections_concurrent = true;
    for i in 0..d {
        for j in (i + 1)..d {
            let (pi, pj) = projected_meet(l1, l2, i, j)?;
            let ri = &pi - &query.base()[i];
            let rj = &pj - &query.base()[j];
            let cross = &ri * &query.dir()[j] - &rj * &query.dir()[i];
            if !cross.is_zero() {
                projections_concurrent = false;
            }
        }
    }

    let q1 = cremona_transform(&line_to_pluecker(l1)?)?;
    let q2 = cremona_transform(&line_to_pluecker(l2)?)?;
    let qq = cremona_transform(&line_to_pluecker(query)?)?;
    let stacked = vec![
        q1.entries().to_vec(),
        q2.entries().to_vec(),
        qq.entries().to_vec(),
    ];
    let cremona_collinear = linalg::rank(stacked) <= 2;

    Ok(RulingCheck {
        meets_all_planes,
        projections_concurrent,
        cremona_collinear,
    })
}

/// The quadric cone of lines through a common point meeting two given
/// lines, together with the frame-convex hull description of the two
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetingCone {
    pub apex: VecD,
    /// Directions of the generators, sign-normalized to ascending.
    pub dirs: [VecD; 2],
    /// Coefficients `(A, B, C)` of `A yz + B xz + C xy = 0` on apex-centered
    /// coordinates; both generator directions satisfy it exactly.
    pub quadric: [Rat; 3],
    /// Axis order `(alpha, beta, gamma) = original axes
    /// (perm[0], perm[1], perm[2])` making the sign condition hold.
    pub permutation: [usize; 3],
    /// Bounds of `beta/alpha` for the frame hull, in permuted coordinates.
    pub beta_interval: (Rat, Rat),
    /// Bounds of `gamma/alpha`.
    pub gamma_interval: (Rat, Rat),
    /// Set when a direction minor vanishes: the generators span a plane
    /// containing a coordinate axis and the hull degenerates to dimension 1.
    pub degenerate: bool,
}

impl MeetingCone {
    /// Evaluates the cone quadric on a direction vector (original axes).
    pub fn quadric_value(&self, dir: &VecD) -> Rat {
        let [a, b, c] = &self.quadric;
        a * &(&dir[1] * &dir[2]) + b * &(&dir[0] * &dir[2]) + c * &(&dir[0] * &dir[1])
    }
}

/// The finite intersection point of two lines, if any.
pub fn lines_intersection(l1: &RectLine, l2: &RectLine) -> Result<VecD> {
    let d = l1.dim();
    if l2.dim() != d {
        return Err(Error::DimensionMismatch(l2.dim(), d));
    }
    // Find an axis pair where (v1, -v2) is invertible.
    for i in 0..d {
        for j in (i + 1)..d {
            let det = &l1.dir()[i] * &(-&l2.dir()[j]) - &(-&l2.dir()[i]) * &l1.dir()[j];
            if det.is_zero() {
                continue;
            }
            let rhs_i = &l2.base()[i] - &l1.base()[i];
            let rhs_j = &l2.base()[j] - &l1.base()[j];
            let t = (&rhs_i * &(-&l2.dir()[j]) - &(-&l2.dir()[i]) * &rhs_j) / &det;
            let p = l1.at(&t);
            if l2.passes_through(&p) {
                return Ok(p);
            }
            return Err(Error::LinesDoNotMeet);
        }
    }
    // Directions proportional: parallel or equal lines.
    if l2.passes_through(l1.base()) {
        Err(Error::CoincidentLines)
    } else {
        Err(Error::LinesDoNotMeet)
    }
}

fn ascending_dir(line: &RectLine) -> Result<VecD> {
    require_nonzero_dirs(line)?;
    let rep = line.ascending_representative()?;
    Ok(rep.dir().clone())
}

/// The meeting cone of two distinct ascending lines through a common point
/// in `R^3`, with the frame-hull interval description.
pub fn meeting_cone(l1: &RectLine, l2: &RectLine) -> Result<MeetingCone> {
    if l1.dim() != 3 || l2.dim() != 3 {
        return Err(Error::DimensionMismatch(l1.dim().max(l2.dim()), 3));
    }
    let apex = lines_intersection(l1, l2)?;
    let u = ascending_dir(l1)?;
    let v = ascending_dir(l2)?;

    // Quadric from the cleared reciprocal-collinearity determinant: rows
    // (yz, xz, xy), (bc, ac, ab), (b'c', a'c', a'b').
    let row2 = [&u[1] * &u[2], &u[0] * &u[2], &u[0] * &u[1]];
    let row3 = [&v[1] * &v[2], &v[0] * &v[2], &v[0] * &v[1]];
    let quadric = [
        &row2[1] * &row3[2] - &row2[2] * &row3[1],
        -(&row2[0] * &row3[2] - &row2[2] * &row3[0]),
        &row2[0] * &row3[1] - &row2[1] * &row3[0],
    ];

    let minor = |i: usize, j: usize| -> Rat { &u[i] * &v[j] - &u[j] * &v[i] };
    let degenerate =
        minor(0, 1).is_zero() || minor(0, 2).is_zero() || minor(1, 2).is_zero();

    // Find a cyclic pivot with a non-positive product of the two minors
    // rooted at it, then order the remaining axes so D_b <= 0 <= D_c.
    let mut chosen: Option<[usize; 3]> = None;
    for pivot in 0..3 {
        let b = (pivot + 1) % 3;
        let c = (pivot + 2) % 3;
        let db = minor(pivot, b);
        let dc = minor(pivot, c);
        if (&db * &dc).is_positive() {
            continue;
        }
        chosen = Some(if !db.is_positive() && !dc.is_negative() {
            [pivot, b, c]
        } else {
            [pivot, c, b]
        });
        break;
    }
    let perm = chosen.expect("one cyclic product is always non-positive");

    let (pa, pb, pc) = (perm[0], perm[1], perm[2]);
    let beta_interval = (&v[pb] / &v[pa], &u[pb] / &u[pa]);
    let gamma_interval = (&u[pc] / &u[pa], &v[pc] / &v[pa]);
    debug_assert!(beta_interval.0 <= beta_interval.1);
    debug_assert!(gamma_interval.0 <= gamma_interval.1);

    Ok(MeetingCone {
        apex,
        dirs: [u, v],
        quadric,
        permutation: perm,
        beta_interval,
        gamma_interval,
        degenerate,
    })
}

/// Frame-convex hull membership for lines through the cone apex: the
/// direction must be ascending and satisfy both ratio intervals in the
/// cone's permuted coordinates.
pub fn frame_hull_membership_meeting(cone: &MeetingCone, query: &RectLine) -> Result<bool> {
    if query.dim() != 3 {
        return Err(Error::DimensionMismatch(query.dim(), 3));
    }
    if !query.passes_through(&cone.apex) {
        return Err(Error::MissesApex);
    }
    if !query.is_ascending() {
        return Ok(false);
    }
    let dir = query.ascending_representative()?.dir().clone();
    let (pa, pb, pc) = (
        cone.permutation[0],
        cone.permutation[1],
        cone.permutation[2],
    );
    let alpha = &dir[pa];
    let beta = &dir[pb];
    let gamma = &dir[pc];
    // lo <= beta/alpha <= hi with alpha > 0.
    let beta_ok =
        &cone.beta_interval.0 * alpha <= *beta && *beta <= &cone.beta_interval.1 * alpha;
    let gamma_ok =
        &cone.gamma_interval.0 * alpha <= *gamma && *gamma <= &cone.gamma_interval.1 * alpha;
    Ok(beta_ok && gamma_ok)
}

/// Dimension of the family of span lines through a point, for `n = d`
/// generators: `n - rank - 1`, where `-1` means no span line passes
/// through and `>= 1` puts the point on the multi-secant locus.
pub fn secancy_defect_locus_check(lines: &[RectLine], point: &VecD) -> Result<i64> {
    if lines.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let d = lines[0].dim();
    if lines.len() != d {
        return Err(Error::DimensionMismatch(lines.len(), d));
    }
    let m = build_span_matrix(lines)?;
    let rank = rank_at_point(&m, point, &Rat::one())?;
    Ok(lines.len() as i64 - rank as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn line(base: &[i64], dir: &[i64]) -> RectLine {
        RectLine::from_ints(base, dir).unwrap()
    }

    #[test]
    fn single_line_span_matrix() {
        let l = line(&[0, 0, 0], &[1, 2, 3]);
        let m = build_span_matrix(&[l.clone()]).unwrap();
        assert_eq!(m.num_lines(), 1);
        // b_2 = -z1 + (1/2) z2, b_3 = -z1 + (1/3) z3.
        assert_eq!(
            m.rows()[0][0],
            LinearForm(vec![rat(0, 1), rat(-1, 1), rat(1, 2), rat(0, 1)])
        );
        assert_eq!(
            m.rows()[0][1],
            LinearForm(vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 3)])
        );
        // Forms vanish on two points of the line.
        for t in [rat(1, 1), rat(7, 3)] {
            let p = l.at(&t);
            for f in &m.rows()[0] {
                assert!(f.eval(&Rat::one(), &p).is_zero());
            }
        }
    }

    #[test]
    fn parallel_lines_are_dependent() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[5, 5, 5], &[2, 4, 6]);
        assert_eq!(
            build_span_matrix(&[l1, l2]).unwrap_err(),
            Error::DependentLines
        );
    }

    #[test]
    fn rank_at_infinity_along_axes() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let m = build_span_matrix(&[l1, l2]).unwrap();
        for axis in 0..3 {
            let mut e = VecD::zeros(3);
            e.0[axis] = Rat::one();
            assert_eq!(rank_at_point(&m, &e, &Rat::zero()).unwrap(), 1);
        }
    }

    #[test]
    fn generator_points_are_on_the_scroll() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let m = build_span_matrix(&[l1.clone(), l2.clone()]).unwrap();
        for t in [rat(0, 1), rat(1, 2), rat(-3, 1)] {
            assert!(scroll_membership(&m, &l1.at(&t)).unwrap());
            assert!(scroll_membership(&m, &l2.at(&t)).unwrap());
        }
        // A generic off-scroll point has full rank.
        let off = VecD::from_ints(&[17, -5, 40]);
        assert!(!scroll_membership(&m, &off).unwrap());
        assert_eq!(rank_at_point(&m, &off, &Rat::one()).unwrap(), 2);
    }

    #[test]
    fn span_line_at_midpoint_matches_cremona_formula() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[0, 0, 0], &[2, 3, 1]);
        let half = rat(1, 2);
        match span_line_at(&[l1, l2], &[half.clone(), half]).unwrap() {
            SpanLine::Line { line: mid } => {
                let expected = RectLine::new(
                    VecD::zeros(3),
                    VecD::new(vec![rat(4, 3), rat(12, 5), rat(3, 2)]),
                )
                .unwrap();
                assert!(crate::pluecker::projective_eq(
                    &line_to_pluecker(&mid).unwrap(),
                    &line_to_pluecker(&expected).unwrap()
                ));
            }
            other => panic!("expected a chart line, got {other:?}"),
        }
    }

    #[test]
    fn span_line_at_identity_weights() {
        let l1 = line(&[0, 1, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        match span_line_at(&[l1.clone(), l2], &[Rat::one(), Rat::zero()]).unwrap() {
            SpanLine::Line { line } => {
                assert!(crate::pluecker::projective_eq(
                    &line_to_pluecker(&line).unwrap(),
                    &line_to_pluecker(&l1).unwrap()
                ));
            }
            other => panic!("expected a chart line, got {other:?}"),
        }
    }

    #[test]
    fn signed_weights_stay_on_scroll() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let m = build_span_matrix(&[l1.clone(), l2.clone()]).unwrap();
        // (3/2, -1/2) happens to hit the axis-3 ruling for this pair, so
        // take a weight past it.
        match span_line_at(&[l1, l2], &[rat(2, 1), rat(-1, 1)]).unwrap() {
            SpanLine::Line { line } => {
                assert!(!line.is_weakly_ascending());
                for t in [rat(0, 1), rat(1, 1), rat(-2, 3)] {
                    assert!(scroll_membership(&m, &line.at(&t)).unwrap());
                }
            }
            SpanLine::ChartBoundary { .. } => {
                panic!("this signed weight stays in the chart")
            }
        }
    }

    #[test]
    fn chart_boundary_weight_yields_axis_ruling() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        // w1 = (6,3,2)/11 and w2 = (3,2,6)/11: the third coordinates cancel
        // at weights (3/2, -1/2).
        match span_line_at(&[l1, l2], &[rat(3, 2), rat(-1, 2)]).unwrap() {
            SpanLine::ChartBoundary { point } => {
                assert!(point.get(0, 1).is_zero());
                assert!(point.get(0, 2).is_zero());
                assert!(!point.get(0, 3).is_zero());
            }
            other => panic!("expected the chart boundary, got {other:?}"),
        }
    }

    #[test]
    fn rulings_of_a_cone_pass_through_the_apex() {
        // Meeting generators: every span line passes through the apex, so
        // the axis-parallel rulings meet both generators.
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[0, 0, 0], &[2, 3, 1]);
        let rulings = axis_parallel_rulings(&l1, &l2).unwrap();
        assert_eq!(rulings.len(), 3);
        let p1 = line_to_pluecker(&l1).unwrap();
        let p2 = line_to_pluecker(&l2).unwrap();
        for (axis, r) in rulings.iter().enumerate() {
            for j in 1..=3 {
                assert_eq!(r.get(0, j).is_zero(), j != axis + 1);
            }
            assert!(crate::pluecker::lines_meet_projectively(r, &p1).unwrap());
            assert!(crate::pluecker::lines_meet_projectively(r, &p2).unwrap());
        }
    }

    #[test]
    fn rulings_of_a_smooth_scroll_meet_the_h_planes() {
        // Skew generators: rulings belong to the same family as the
        // generators (pairwise disjoint), but still meet every
        // coordinate-parallel codimension-2 plane through both — at
        // infinity when the plane is parallel to the ruling's axis, so the
        // incidence is checked projectively (in d=3 the planes are lines).
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let rulings = axis_parallel_rulings(&l1, &l2).unwrap();
        for (axis, r) in rulings.iter().enumerate() {
            for j in 1..=3 {
                assert_eq!(r.get(0, j).is_zero(), j != axis + 1);
            }
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let plane = meet_codim2_plane(&l1, &l2, i, j).unwrap();
                    let free_axis = (0..3).find(|a| *a != i && *a != j).unwrap();
                    let mut base = VecD::zeros(3);
                    base.0[plane.axis_i] = plane.value_i.clone();
                    base.0[plane.axis_j] = plane.value_j.clone();
                    let mut dir = VecD::zeros(3);
                    dir.0[free_axis] = Rat::one();
                    let h_line = RectLine::new(base, dir).unwrap();
                    let h = line_to_pluecker(&h_line).unwrap();
                    assert!(
                        crate::pluecker::lines_meet_projectively(r, &h).unwrap(),
                        "axis {axis} H({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn rulings_error_on_equal_cremona_coordinate() {
        // Same first direction coordinate after normalization:
        // w1_0 == w2_0 happens when v1 and v2 have proportionality on axis 0
        // relative to the gauge; build an explicit instance.
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        // Scale directions so the normalized w agree on axis 0: w_i is
        // (1/v_i) / sum(1/v_j). Pick v2 = (1, 3, 2): sum is the same and
        // 1/v_1 equal.
        let l2 = line(&[1, 0, 0], &[1, 3, 2]);
        let err = axis_parallel_rulings(&l1, &l2).unwrap_err();
        assert_eq!(err, Error::EqualCremonaDirection { axes: vec![0] });
    }

    #[test]
    fn codim2_plane_example() {
        // Projections to (z1, z2): z2 = 2 z1 and z2 = (3/2)(z1 - 1) meet at
        // z1 = -3, z2 = -6.
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let plane = meet_codim2_plane(&l1, &l2, 0, 1).unwrap();
        assert_eq!(plane.value_i, rat(-3, 1));
        assert_eq!(plane.value_j, rat(-6, 1));
        assert!(plane.meets_line(&l1));
        assert!(plane.meets_line(&l2));
    }

    #[test]
    fn codim2_plane_parallel_projection_error() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 4, 1]);
        assert_eq!(
            meet_codim2_plane(&l1, &l2, 0, 1).unwrap_err(),
            Error::ParallelProjection { i: 0, j: 1 }
        );
    }

    #[test]
    fn ruling_check_on_span_member() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        let member = match span_line_at(&[l1.clone(), l2.clone()], &[rat(1, 3), rat(2, 3)])
            .unwrap()
        {
            SpanLine::Line { line } => line,
            other => panic!("unexpected {other:?}"),
        };
        let check = ruling_equivalence_check(&l1, &l2, &member).unwrap();
        assert!(check.agree());
        assert!(check.meets_all_planes);

        let check_gen = ruling_equivalence_check(&l1, &l2, &l1).unwrap();
        assert!(check_gen.agree() && check_gen.meets_all_planes);

        let off = line(&[11, -7, 5], &[3, 1, 9]);
        let check_off = ruling_equivalence_check(&l1, &l2, &off).unwrap();
        assert!(check_off.agree());
        assert!(!check_off.meets_all_planes);
    }

    #[test]
    fn meeting_cone_example() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[0, 0, 0], &[2, 3, 1]);
        let cone = meeting_cone(&l1, &l2).unwrap();
        assert_eq!(cone.apex, VecD::zeros(3));
        assert_eq!(cone.quadric, [rat(14, 1), rat(-30, 1), rat(3, 1)]);
        assert!(cone.quadric_value(&VecD::from_ints(&[1, 2, 3])).is_zero());
        assert!(cone.quadric_value(&VecD::from_ints(&[2, 3, 1])).is_zero());
        let mid = VecD::new(vec![rat(4, 3), rat(12, 5), rat(3, 2)]);
        assert!(cone.quadric_value(&mid).is_zero());
        assert!(!cone.quadric_value(&VecD::from_ints(&[1, 1, 1])).is_zero());
        assert!(!cone.degenerate);
    }

    #[test]
    fn meeting_cone_permuted_instance() {
        // Directions (2,3,1) and (3,1,2): the identity pivot works with
        // product -7 * 1 <= 0, intervals [1/3, 3/2] and [1/2, 2/3].
        let l1 = line(&[0, 0, 0], &[2, 3, 1]);
        let l2 = line(&[0, 0, 0], &[3, 1, 2]);
        let cone = meeting_cone(&l1, &l2).unwrap();
        assert_eq!(cone.permutation, [0, 1, 2]);
        assert_eq!(cone.beta_interval, (rat(1, 3), rat(3, 2)));
        assert_eq!(cone.gamma_interval, (rat(1, 2), rat(2, 3)));
        assert!(!cone.degenerate);

        // Both generators and the Cremona midpoint are in the frame hull.
        assert!(frame_hull_membership_meeting(&cone, &l1).unwrap());
        assert!(frame_hull_membership_meeting(&cone, &l2).unwrap());
        let mid = match span_line_at(&[l1, l2], &[rat(1, 2), rat(1, 2)]).unwrap() {
            SpanLine::Line { line } => line,
            other => panic!("unexpected {other:?}"),
        };
        assert!(frame_hull_membership_meeting(&cone, &mid).unwrap());

        // A direction outside both ratio intervals is rejected.
        let outside = RectLine::from_ints(&[0, 0, 0], &[1, 5, 5]).unwrap();
        assert!(!frame_hull_membership_meeting(&cone, &outside).unwrap());
    }

    #[test]
    fn skew_lines_do_not_meet() {
        let l1 = line(&[0, 0, 0], &[1, 2, 3]);
        let l2 = line(&[1, 0, 0], &[2, 3, 1]);
        assert_eq!(meeting_cone(&l1, &l2).unwrap_err(), Error::LinesDoNotMeet);
    }

    #[test]
    fn secancy_defect_examples() {
        let lines = [
            line(&[0, 0, 0], &[1, 2, 3]),
            line(&[1, 0, 0], &[2, 3, 1]),
            line(&[0, 1, 0], &[3, 1, 2]),
        ];
        // For n = d the matrix is d x (d-1), so a generic point has full
        // rank d-1 and defect 0: a single projective row combination
        // vanishes there (the unique candidate span line through it).
        let generic = VecD::from_ints(&[23, -17, 41]);
        assert_eq!(secancy_defect_locus_check(&lines, &generic).unwrap(), 0);
        // A generator point lies on at least one span line.
        let on_gen = lines[0].at(&rat(2, 1));
        assert!(secancy_defect_locus_check(&lines, &on_gen).unwrap() >= 0);
    }
}
