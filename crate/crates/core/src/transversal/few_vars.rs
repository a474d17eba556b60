//! Simplex specialised to `max c.x : A x <= b` with few free variables and
//! many rows, solved through the dual.
//!
//! The dual `min b.l : A^T l = c, l >= 0` has only `p = #vars` rows, so its
//! basis stays tiny no matter how many constraints the primal has; each
//! pivot costs `O(p m)` instead of the `O(m (m + p))` a primal tableau
//! pays. The optimal primal point is read off the reduced costs of the
//! artificial columns (they carry the dual's dual, which is the primal
//! solution), and every caller re-verifies the point against the rows.
//! Bland's rule everywhere: deterministic and termination-safe.

use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfspaceOutcome {
    /// The primal `{A x <= b}` is empty.
    Infeasible,
    /// Optimal primal point and objective value.
    Optimal { point: Vec<Rat>, value: Rat },
    /// The objective is unbounded above on the primal.
    Unbounded,
}

/// Maximizes `objective . x` over `{x : rows[k].0 . x <= rows[k].1}`.
pub fn maximize_over_halfspaces(
    rows: &[(Vec<Rat>, Rat)],
    objective: &[Rat],
) -> HalfspaceOutcome {
    let p = objective.len();
    let m = rows.len();
    debug_assert!(rows.iter().all(|(a, _)| a.len() == p));

    // Dual tableau: p rows, columns = m lambdas then p artificials, then
    // the right-hand side c.
    let width = m + p + 1;
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(p);
    for r in 0..p {
        let mut row = Vec::with_capacity(width);
        let flip = objective[r].is_negative();
        for (a, _) in rows {
            row.push(if flip { -&a[r] } else { a[r].clone() });
        }
        for k in 0..p {
            row.push(if k == r { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip {
            -&objective[r]
        } else {
            objective[r].clone()
        });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (m..m + p).collect();

    let rhs = width - 1;
    let pivot = |tab: &mut Vec<Vec<Rat>>, basis: &mut Vec<usize>, obj: &mut Vec<Rat>, r: usize, e: usize| {
        let inv = tab[r][e].recip();
        let mut touched = Vec::new();
        for j in 0..width {
            if !tab[r][j].is_zero() {
                let v = &tab[r][j] * &inv;
                tab[r][j] = v;
                touched.push(j);
            }
        }
        let pivot_row = std::mem::take(&mut tab[r]);
        for i in 0..p {
            if i == r || tab[i][e].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut tab[i][e], Rat::zero());
            for &j in &touched {
                if j != e {
                    let t = &pivot_row[j] * &factor;
                    if !t.is_zero() {
                        tab[i][j] -= t;
                    }
                }
            }
        }
        let factor = std::mem::replace(&mut obj[e], Rat::zero());
        if !factor.is_zero() {
            for &j in &touched {
                if j != e {
                    let t = &pivot_row[j] * &factor;
                    if !t.is_zero() {
                        obj[j] -= t;
                    }
                }
            }
        }
        tab[r] = pivot_row;
        basis[r] = e;
    };

    // run one simplex phase: maximize obj over columns < allow.
    // Returns false on unboundedness.
    let run = |tab: &mut Vec<Vec<Rat>>,
               basis: &mut Vec<usize>,
               obj: &mut Vec<Rat>,
               allow: usize| -> bool {
        loop {
            let Some(e) = (0..allow).find(|&j| obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..p {
                if tab[i][e].is_positive() {
                    let ratio = &tab[i][rhs] / &tab[i][e];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && basis[i] < basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            pivot(tab, basis, obj, r, e);
        }
    };

    // Phase 1: drive the artificials out (maximize minus their sum).
    let mut obj1 = vec![Rat::zero(); width];
    for j in m..m + p {
        obj1[j] = Rat::from_int(-1);
    }
    for i in 0..p {
        for j in 0..width {
            if !tab[i][j].is_zero() {
                let t = tab[i][j].clone();
                obj1[j] += t;
            }
        }
    }
    let bounded = run(&mut tab, &mut basis, &mut obj1, m);
    debug_assert!(bounded);
    if !obj1[rhs].is_zero() {
        // The dual system A^T l = c, l >= 0 is infeasible, so the primal
        // objective is unbounded over a nonempty region, or the region is
        // empty; distinguish with a Farkas run.
        return if farkas_infeasible(rows, p) {
            HalfspaceOutcome::Infeasible
        } else {
            HalfspaceOutcome::Unbounded
        };
    }

    // Drive artificials out of the basis so they can never grow during
    // phase 2. A row whose lambda-part is entirely zero keeps its
    // artificial: such a row stays zero under every later pivot and never
    // participates again.
    for i in 0..p {
        if basis[i] >= m {
            if let Some(e) = (0..m).find(|&j| !tab[i][j].is_zero()) {
                pivot(&mut tab, &mut basis, &mut obj1, i, e);
            }
        }
    }

    // Phase 2: maximize -(b . l); artificials stay but cannot enter.
    let mut obj2 = vec![Rat::zero(); width];
    for (j, (_, b)) in rows.iter().enumerate() {
        obj2[j] = -b;
    }
    for i in 0..p {
        let bv = basis[i];
        let cb = obj2[bv].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..width {
            let t = &tab[i][j] * &cb;
            if !t.is_zero() {
                obj2[j] -= t;
            }
        }
    }
    if !run(&mut tab, &mut basis, &mut obj2, m) {
        // Dual unbounded below: the primal is infeasible.
        return HalfspaceOutcome::Infeasible;
    }

    // Primal point: the artificial columns' reduced costs carry the dual's
    // multipliers, whose negation is primal-feasible; with the max(-b)
    // convention the signs cancel to x_r = reduced cost of artificial r.
    // Rows negated during setup flip the corresponding entry back.
    let mut point = Vec::with_capacity(p);
    for r in 0..p {
        let raw = obj2[m + r].clone();
        point.push(if objective[r].is_negative() { -raw } else { raw });
    }
    let value = obj2[rhs].clone();
    debug_assert!({
        let cx: Rat = objective
            .iter()
            .zip(&point)
            .map(|(c, x)| c * x)
            .sum();
        cx == value
    });
    debug_assert!(rows.iter().all(|(a, b)| {
        a.iter().zip(&point).map(|(ai, xi)| ai * xi).sum::<Rat>() <= *b
    }));
    HalfspaceOutcome::Optimal { point, value }
}

/// Farkas test: `{A x <= b}` is empty iff some `l >= 0` has `A^T l = 0`
/// and `b . l < 0`.
///
/// All right-hand sides of the cone system are zero, so any row-echelon
/// basis of `A^T` is a (fully degenerate) feasible basis with every
/// variable at zero; artificials are never needed. From there, maximize
/// `-(b . l)`: the cone is invariant under scaling, so the maximum is
/// either 0 (no witness) or unbounded (witness found).
fn farkas_infeasible(rows: &[(Vec<Rat>, Rat)], p: usize) -> bool {
    let m = rows.len();
    let width = m + 1;
    // tab = [A^T | 0], reduced below to echelon form over the lambdas.
    let mut tab: Vec<Vec<Rat>> = (0..p)
        .map(|r| {
            let mut row: Vec<Rat> = rows.iter().map(|(a, _)| a[r].clone()).collect();
            row.push(Rat::zero());
            row
        })
        .collect();
    let mut basis: Vec<usize> = Vec::new();
    let mut next_row = 0;
    for col in 0..m {
        let Some(sel) = (next_row..tab.len()).find(|&i| !tab[i][col].is_zero()) else {
            continue;
        };
        tab.swap(next_row, sel);
        let inv = tab[next_row][col].recip();
        for j in col..width {
            if !tab[next_row][j].is_zero() {
                let v = &tab[next_row][j] * &inv;
                tab[next_row][j] = v;
            }
        }
        for i in 0..tab.len() {
            if i != next_row && !tab[i][col].is_zero() {
                let factor = std::mem::replace(&mut tab[i][col], Rat::zero());
                for j in (col + 1)..width {
                    let t = &tab[next_row][j] * &factor;
                    if !t.is_zero() {
                        tab[i][j] -= t;
                    }
                }
            }
        }
        basis.push(col);
        next_row += 1;
        if next_row == tab.len() {
            break;
        }
    }
    tab.truncate(next_row); // all-zero rows are redundant
    let pr = tab.len();

    // Price out the objective over the echelon basis.
    let mut obj = vec![Rat::zero(); width];
    for (j, (_, b)) in rows.iter().enumerate() {
        obj[j] = -b;
    }
    for i in 0..pr {
        let cb = obj[basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..width {
            let t = &tab[i][j] * &cb;
            if !t.is_zero() {
                obj[j] -= t;
            }
        }
    }

    loop {
        let Some(e) = (0..m).find(|&j| obj[j].is_positive()) else {
            return false;
        };
        let mut best: Option<usize> = None;
        for i in 0..pr {
            // Every basic value is zero: any positive entry blocks at 0.
            if tab[i][e].is_positive() {
                let better = match best {
                    None => true,
                    Some(bi) => basis[i] < basis[bi],
                };
                if better {
                    best = Some(i);
                }
            }
        }
        let Some(r) = best else {
            // Feasible ray with positive reduced cost: a Farkas witness.
            return true;
        };
        let inv = tab[r][e].recip();
        let mut touched = Vec::new();
        for j in 0..width {
            if !tab[r][j].is_zero() {
                let v = &tab[r][j] * &inv;
                tab[r][j] = v;
                touched.push(j);
            }
        }
        let pivot_row = std::mem::take(&mut tab[r]);
        for i in 0..pr {
            if i == r || tab[i][e].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut tab[i][e], Rat::zero());
            for &j in &touched {
                if j != e {
                    let t = &pivot_row[j] * &factor;
                    if !t.is_zero() {
                        tab[i][j] -= t;
                    }
                }
            }
        }
        let factor = std::mem::replace(&mut obj[e], Rat::zero());
        if !factor.is_zero() {
            for &j in &touched {
                if j != e {
                    let t = &pivot_row[j] * &factor;
                    if !t.is_zero() {
                        obj[j] -= t;
                    }
                }
            }
        }
        tab[r] = pivot_row;
        basis[r] = e;
    }
}
