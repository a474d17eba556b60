//! Seeded rational sampling of lines, boxes and families.
//!
//! Used by the CLI (hull sampling, sharpness search) and by the test
//! suites; all generators are deterministic for a fixed seed and produce
//! exact rationals with small denominators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{reflect_box, BoxRd, RectLine, SignClass, VecD};
use crate::rat::Rat;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform rational with numerator in `[-range, range]` and denominator in
/// `[1, max_den]`.
pub fn random_rat(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-(range * den)..=(range * den));
    Rat::new(num, den)
}

/// Strictly positive rational in `(0, range]`.
pub fn random_positive_rat(rng: &mut ChaCha8Rng, range: i64, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(1..=(range * den));
    Rat::new(num, den)
}

pub fn random_vec(rng: &mut ChaCha8Rng, dim: usize, range: i64, max_den: i64) -> VecD {
    VecD::new((0..dim).map(|_| random_rat(rng, range, max_den)).collect())
}

/// A line with strictly positive direction coordinates.
pub fn random_ascending_line(rng: &mut ChaCha8Rng, dim: usize) -> RectLine {
    let base = random_vec(rng, dim, 10, 4);
    let dir = VecD::new((0..dim).map(|_| random_positive_rat(rng, 5, 3)).collect());
    RectLine::new(base, dir).expect("positive direction")
}

/// A weakly ascending line: each direction coordinate is zero with
/// probability ~1/4, the rest strictly positive.
pub fn random_weakly_ascending_line(rng: &mut ChaCha8Rng, dim: usize) -> RectLine {
    loop {
        let base = random_vec(rng, dim, 10, 4);
        let dir = VecD::new(
            (0..dim)
                .map(|_| {
                    if rng.gen_ratio(1, 4) {
                        Rat::zero()
                    } else {
                        random_positive_rat(rng, 5, 3)
                    }
                })
                .collect(),
        );
        if !dir.is_zero() {
            return RectLine::new(base, dir).expect("nonzero direction");
        }
    }
}

/// A line with arbitrary nonzero direction.
pub fn random_line(rng: &mut ChaCha8Rng, dim: usize) -> RectLine {
    loop {
        let base = random_vec(rng, dim, 10, 4);
        let dir = random_vec(rng, dim, 5, 3);
        if !dir.is_zero() {
            return RectLine::new(base, dir).expect("nonzero direction");
        }
    }
}

/// A line whose direction coordinates are all nonzero.
pub fn random_line_nonzero_dirs(rng: &mut ChaCha8Rng, dim: usize) -> RectLine {
    let base = random_vec(rng, dim, 10, 4);
    let dir = VecD::new(
        (0..dim)
            .map(|_| {
                let r = random_positive_rat(rng, 5, 3);
                if rng.gen_bool(0.5) {
                    -r
                } else {
                    r
                }
            })
            .collect(),
    );
    RectLine::new(base, dir).expect("nonzero direction")
}

/// A random box with corners in `[-range, range]^d`.
pub fn random_box(rng: &mut ChaCha8Rng, dim: usize, range: i64, max_den: i64) -> BoxRd {
    let a = random_vec(rng, dim, range, max_den);
    let b = random_vec(rng, dim, range, max_den);
    let mut min = Vec::with_capacity(dim);
    let mut max = Vec::with_capacity(dim);
    for i in 0..dim {
        if a[i] <= b[i] {
            min.push(a[i].clone());
            max.push(b[i].clone());
        } else {
            min.push(b[i].clone());
            max.push(a[i].clone());
        }
    }
    BoxRd::new(VecD::new(min), VecD::new(max)).expect("sorted corners")
}

/// A box containing `point`, with random rational margins up to `slack`.
pub fn random_box_around(
    rng: &mut ChaCha8Rng,
    point: &VecD,
    slack: i64,
    max_den: i64,
) -> BoxRd {
    let dim = point.dim();
    let mut min = Vec::with_capacity(dim);
    let mut max = Vec::with_capacity(dim);
    for i in 0..dim {
        min.push(&point[i] - &random_positive_rat(rng, slack, max_den));
        max.push(&point[i] + &random_positive_rat(rng, slack, max_den));
    }
    BoxRd::new(VecD::new(min), VecD::new(max)).expect("slack positive")
}

/// A family of boxes threaded by a planted line of random sign: every box
/// contains a sample point of the line, so the family is feasible by
/// construction. Returns the (reflected) planted line too.
pub fn planted_family(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
) -> (RectLine, Vec<BoxRd>) {
    let ascending = random_ascending_line(rng, dim);
    let signs = SignClass::enumerate(dim);
    let eps = signs[rng.gen_range(0..signs.len())].clone();
    let line = crate::geometry::reflect_line(&ascending, &eps).expect("dims match");
    let boxes = (0..count)
        .map(|_| {
            let t = random_rat(rng, 10, 4);
            random_box_around(rng, &line.at(&t), 3, 4)
        })
        .collect();
    (line, boxes)
}

/// Squared Euclidean distance from `p` to the line through `a` and `b`.
fn dist2_to_line(p: &VecD, a: &VecD, b: &VecD) -> Rat {
    let u = b.sub(a);
    let w = p.sub(a);
    let uu = u.dot(&u);
    let uw = u.dot(&w);
    &w.dot(&w) - &(&uw * &uw / uu)
}

/// A family with no line transversal of any sign: tiny boxes around three
/// far-apart points that are far from collinear, plus optional extra boxes
/// around the triangle vertices. Any line meeting two of the point
/// neighborhoods stays close to the line through those points, which keeps
/// it away from the third.
pub fn separated_infeasible_family(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
) -> Vec<BoxRd> {
    debug_assert!(dim >= 2 && count >= 3);
    let scale = Rat::from_int(64);
    loop {
        let p1 = random_vec(rng, dim, 2, 2);
        let mut p2 = random_vec(rng, dim, 2, 2);
        p2.0[0] += &scale;
        let mut p3 = random_vec(rng, dim, 2, 2);
        p3.0[0] += &scale / Rat::from_int(2);
        p3.0[1] += &scale;
        // Fatness check: every vertex far from the opposite side.
        let limit = &scale * &scale / Rat::from_int(16);
        if dist2_to_line(&p3, &p1, &p2) < limit
            || dist2_to_line(&p1, &p2, &p3) < limit
            || dist2_to_line(&p2, &p1, &p3) < limit
        {
            continue;
        }
        let half = Rat::new(1, 4);
        let anchors = [p1, p2, p3];
        let boxes: Vec<BoxRd> = (0..count)
            .map(|k| {
                let c = &anchors[k % 3];
                let jitter = VecD::new(
                    (0..dim).map(|_| random_rat(rng, 1, 8) * Rat::new(1, 4)).collect(),
                );
                let center = c.add(&jitter);
                BoxRd::new(
                    VecD::new(center.iter().map(|v| v - &half).collect()),
                    VecD::new(center.iter().map(|v| v + &half).collect()),
                )
                .expect("half positive")
            })
            .collect();
        return boxes;
    }
}

/// A family of boxes all met by a planted ascending hyperplane
/// `v . z = c`, reflected by a random sign.
pub fn planted_hyperplane_family(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
) -> Vec<BoxRd> {
    let normal: Vec<Rat> = (0..dim).map(|_| random_positive_rat(rng, 4, 3)).collect();
    let offset = random_rat(rng, 10, 4);
    let signs = SignClass::enumerate(dim);
    let eps = signs[rng.gen_range(0..signs.len())].clone();
    (0..count)
        .map(|_| {
            // A point on the hyperplane: fix all but one coordinate, solve
            // the last one with a nonzero normal entry.
            let pivot = (0..dim).find(|&i| !normal[i].is_zero()).expect("normal nonzero");
            let mut z: Vec<Rat> = (0..dim).map(|_| random_rat(rng, 8, 4)).collect();
            let partial: Rat = (0..dim)
                .filter(|&i| i != pivot)
                .map(|i| &normal[i] * &z[i])
                .sum();
            z[pivot] = (&offset - &partial) / &normal[pivot];
            let b = random_box_around(rng, &VecD::new(z), 3, 4);
            reflect_box(&b, &eps).expect("dims match")
        })
        .collect()
}
