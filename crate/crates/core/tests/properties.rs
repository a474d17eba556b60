//! Property tests for the geometric invariants.

use proptest::prelude::*;

use santalo::cremona::{cremona_combination, from_cremona, to_cremona, Weighting};
use santalo::geometry::{
    line_meets_box, reflect_box, reflect_line, line_sign, BoxRd, RectLine, SignClass, VecD,
};
use santalo::oracles::t_interval;
use santalo::pluecker::{line_to_pluecker, projective_eq};
use santalo::rat::Rat;
use santalo::sampling;
use santalo::transversal::{ascending_transversal, support_order};

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=5).prop_map(|(n, d)| Rat::new(n, d))
}

fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..=30, 1i64..=5).prop_map(|(n, d)| Rat::new(n, d))
}

fn vec_strategy(dim: usize) -> impl Strategy<Value = VecD> {
    prop::collection::vec(rat_strategy(), dim).prop_map(VecD::new)
}

fn box_strategy(dim: usize) -> impl Strategy<Value = BoxRd> {
    (vec_strategy(dim), vec_strategy(dim)).prop_map(|(a, b)| {
        let min: Vec<Rat> = a
            .iter()
            .zip(b.iter())
            .map(|(x, y)| x.clone().min(y.clone()))
            .collect();
        let max: Vec<Rat> = a
            .iter()
            .zip(b.iter())
            .map(|(x, y)| x.clone().max(y.clone()))
            .collect();
        BoxRd::new(VecD::new(min), VecD::new(max)).unwrap()
    })
}

/// Weakly ascending line: a sparse non-negative direction.
fn weakly_ascending_line(dim: usize) -> impl Strategy<Value = RectLine> {
    (
        vec_strategy(dim),
        prop::collection::vec((positive_rat(), prop::bool::ANY), dim),
    )
        .prop_filter_map("nonzero direction", |(base, raw)| {
            let dir: Vec<Rat> = raw
                .into_iter()
                .map(|(v, zero)| if zero { Rat::zero() } else { v })
                .collect();
            if dir.iter().all(Rat::is_zero) {
                return None;
            }
            RectLine::new(base, VecD::new(dir)).ok()
        })
}

fn sign_strategy(dim: usize) -> impl Strategy<Value = SignClass> {
    prop::collection::vec(prop::bool::ANY, dim).prop_map(|bits| {
        let signs: Vec<i8> = bits.iter().map(|&b| if b { 1 } else { -1 }).collect();
        SignClass::new(&signs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn meet_predicate_matches_interval_oracle(
        line in weakly_ascending_line(3),
        b in box_strategy(3),
    ) {
        let meets = line_meets_box(&line, &b).unwrap();
        let interval = t_interval(&line, &b).unwrap();
        prop_assert_eq!(meets, !interval.is_empty());
    }

    #[test]
    fn meet_predicate_translation_equivariant(
        line in weakly_ascending_line(3),
        b in box_strategy(3),
        offset in vec_strategy(3),
    ) {
        let moved_line = RectLine::new(line.base().add(&offset), line.dir().clone()).unwrap();
        let moved_box = b.translate(&offset);
        prop_assert_eq!(
            line_meets_box(&line, &b).unwrap(),
            line_meets_box(&moved_line, &moved_box).unwrap()
        );
    }

    #[test]
    fn meet_predicate_gauge_invariant(
        line in weakly_ascending_line(3),
        b in box_strategy(3),
        t in rat_strategy(),
        s in positive_rat(),
    ) {
        let slid = RectLine::new(line.at(&t), line.dir().scale(&s)).unwrap();
        prop_assert_eq!(
            line_meets_box(&line, &b).unwrap(),
            line_meets_box(&slid, &b).unwrap()
        );
    }

    #[test]
    fn reflect_conjugation(
        line in weakly_ascending_line(3),
        b in box_strategy(3),
        eps in sign_strategy(3),
    ) {
        // A weakly ascending line reflected by eps has sign eps; the meet
        // predicate must be invariant under reflecting both sides.
        let rl = reflect_line(&line, &eps).unwrap();
        let rb = reflect_box(&b, &eps).unwrap();
        let direct = line_meets_box(&line, &b).unwrap();
        let conjugated = !t_interval(&rl, &rb).unwrap().is_empty();
        prop_assert_eq!(direct, conjugated);
        // And the reflection is an involution.
        prop_assert_eq!(reflect_line(&rl, &eps).unwrap(), line);
        prop_assert_eq!(reflect_box(&rb, &eps).unwrap(), b);
    }

    #[test]
    fn chart_round_trip_is_the_same_line(line in weakly_ascending_line(4)) {
        let c = to_cremona(&line).unwrap();
        let back = from_cremona(&c);
        prop_assert!(projective_eq(
            &line_to_pluecker(&back).unwrap(),
            &line_to_pluecker(&line).unwrap()
        ));
        // The canonical form itself is a fixed point.
        prop_assert_eq!(to_cremona(&back).unwrap(), c);
    }

    #[test]
    fn canonical_sign_class_is_reported(line in weakly_ascending_line(3)) {
        // Weakly ascending lines always report the all-plus class.
        let signs = line_sign(&line);
        prop_assert!(signs.contains(&SignClass::all_plus(3)));
        // The count is 2^k for k zero coordinates.
        let zeros = line.dir().iter().filter(|v| v.is_zero()).count();
        prop_assert_eq!(signs.len(), 1 << zeros);
    }
}

/// Convexity of the box constraints in Cremona coordinates: combinations
/// of lines meeting a box still meet it (same support).
#[test]
fn cremona_convexity_on_box_meeting_lines() {
    let mut rng = sampling::rng(555);
    let mut trials = 0;
    while trials < 10_000 {
        let dim = 2 + (trials % 3);
        let b = sampling::random_box(&mut rng, dim, 8, 3);
        // Two lines through random points of the box with a shared
        // support pattern: both meet the box by construction.
        let mask: Vec<bool> = (0..dim)
            .map(|_| trials % 4 != 0 || rand::Rng::gen_bool(&mut rng, 0.7))
            .collect();
        if mask.iter().all(|&m| !m) {
            continue;
        }
        let sample_line = |rng: &mut rand_chacha::ChaCha8Rng| {
            let point = VecD::new(
                (0..dim)
                    .map(|i| {
                        let lo = &b.min()[i];
                        let hi = &b.max()[i];
                        let t = sampling::random_positive_rat(rng, 4, 4) * Rat::new(1, 4);
                        lo + &(&(hi - lo) * &t.min(Rat::one()))
                    })
                    .collect(),
            );
            let dir = VecD::new(
                (0..dim)
                    .map(|i| {
                        if mask[i] {
                            sampling::random_positive_rat(rng, 4, 3)
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect(),
            );
            RectLine::new(point, dir).unwrap()
        };
        let l1 = sample_line(&mut rng);
        let l2 = sample_line(&mut rng);
        assert!(line_meets_box(&l1, &b).unwrap());
        assert!(line_meets_box(&l2, &b).unwrap());
        let c1 = to_cremona(&l1).unwrap();
        let c2 = to_cremona(&l2).unwrap();
        let t = sampling::random_positive_rat(&mut rng, 4, 4) * Rat::new(1, 4);
        let t = t.min(Rat::one());
        let combo = cremona_combination(
            &[c1, c2],
            &[&Rat::one() - &t, t],
            Weighting::Convex,
        )
        .unwrap();
        assert!(
            line_meets_box(&from_cremona(&combo), &b).unwrap(),
            "convex combination must meet the box"
        );
        trials += 1;
    }
}

/// Adding a box can only shrink the feasible set: INFEASIBLE families stay
/// infeasible for every fixed support.
#[test]
fn transversal_monotone_under_adding_boxes() {
    let mut rng = sampling::rng(556);
    for _ in 0..200 {
        let dim = 2 + (rand::Rng::gen_range(&mut rng, 0..2) as usize);
        let n = rand::Rng::gen_range(&mut rng, 2..6);
        let boxes: Vec<BoxRd> = (0..n)
            .map(|_| sampling::random_box(&mut rng, dim, 6, 3))
            .collect();
        let extra = sampling::random_box(&mut rng, dim, 6, 3);
        let mut extended = boxes.clone();
        extended.push(extra);
        for support in support_order(dim) {
            let small = ascending_transversal(dim, &boxes, &support).unwrap();
            let big = ascending_transversal(dim, &extended, &support).unwrap();
            assert!(
                !(small.is_none() && big.is_some()),
                "adding a box flipped infeasible to feasible"
            );
        }
    }
}

/// Feasible regions are convex: the midpoint of two transversal witnesses
/// of the same family and support is again a transversal.
#[test]
fn transversal_witness_midpoints_are_feasible() {
    let mut rng = sampling::rng(557);
    let mut done = 0;
    while done < 200 {
        let dim = 2 + (done % 3);
        let (_, mut boxes) = sampling::planted_family(&mut rng, dim, 4);
        // Reflect to the ascending frame: use the all-plus witness search.
        let eps = SignClass::all_plus(dim);
        let reflected: Vec<BoxRd> = boxes
            .iter()
            .map(|b| reflect_box(b, &eps).unwrap())
            .collect();
        boxes = reflected;
        let full: Vec<usize> = (0..dim).collect();
        let Some(w1) = ascending_transversal(dim, &boxes, &full).unwrap() else {
            continue;
        };
        // A second witness from a shrunk family (its witness is feasible
        // for the original LP as well once it meets every original box).
        let Some(w2) = ascending_transversal(dim, &boxes[..3], &full).unwrap() else {
            continue;
        };
        if !boxes
            .iter()
            .all(|b| line_meets_box(&from_cremona(&w2), b).unwrap())
        {
            continue;
        }
        let half = Rat::new(1, 2);
        let mid = cremona_combination(
            &[w1, w2],
            &[half.clone(), half],
            Weighting::Convex,
        )
        .unwrap();
        let mid_line = from_cremona(&mid);
        for b in &boxes {
            assert!(line_meets_box(&mid_line, b).unwrap());
        }
        done += 1;
    }
}
