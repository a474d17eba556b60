//! Transversal solvers: exact LP feasibility for ascending, fixed-sign and
//! any-sign line transversals to box families.
//!
//! For a support set `S` the ascending lines meeting a box satisfy, in
//! normalized Cremona coordinates, the pair inequalities
//! `a_i w_i - y_i <= b_j w_j - y_j` for `i, j in S` together with
//! `a_i <= y_i <= b_i` off the support. A transversal with support exactly
//! `S` exists iff the LP admits a point with every `w_i` strictly positive,
//! which is decided exactly by maximizing a slack variable `delta` bounded
//! above by each `w_i`.

use serde::{Deserialize, Serialize};

use crate::cremona::CremonaLine;
use crate::error::{Error, Result};
use crate::geometry::{reflect_box, reflect_line, BoxRd, RectLine, SignClass, VecD};
use crate::oracles::stabs_all;
use crate::rat::Rat;
use crate::transversal::few_vars::{maximize_over_halfspaces, HalfspaceOutcome};

/// Outcome of the global solver, with enough evidence to re-verify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TransversalCertificate {
    Feasible {
        /// Witness line in the original frame.
        line: RectLine,
        /// Cremona coordinates of the reflected (weakly ascending) witness.
        cremona: CremonaLine,
        /// Support of the witness direction, 0-based axes.
        support: Vec<usize>,
        sign: SignClass,
    },
    Infeasible {
        per_sign: Vec<SignOutcome>,
    },
}

impl TransversalCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TransversalCertificate::Feasible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignOutcome {
    pub sign: SignClass,
    pub evidence: InfeasibilityEvidence,
}

/// Why a sign class admits no transversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InfeasibilityEvidence {
    /// Boxes whose strict separations force a cyclic visiting order in the
    /// reflected frame; no weakly ascending transversal can exist.
    SeparationCycle { boxes: Vec<usize> },
    /// Every support LP was infeasible or admitted only degenerate points.
    ExhaustedSupports,
}

/// Detects a cycle in the strict-separation order of a (reflected) family.
///
/// Box `k` precedes box `l` when `b_i^k < a_i^l` on some axis: a weakly
/// ascending line meeting both must then visit `k` at strictly smaller
/// parameters. A directed cycle therefore proves that no weakly ascending
/// transversal exists, for any support.
pub fn separation_cycle(boxes: &[BoxRd]) -> Option<Vec<usize>> {
    let n = boxes.len();
    let d = if n > 0 { boxes[0].dim() } else { return None };
    let mut adj = vec![Vec::new(); n];
    for k in 0..n {
        for l in 0..n {
            if k != l
                && (0..d).any(|i| boxes[k].max()[i] < boxes[l].min()[i])
            {
                adj[k].push(l);
            }
        }
    }
    // Iterative DFS, white/grey/black.
    let mut color = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        color[start] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < adj[node].len() {
                let succ = adj[node][*next];
                *next += 1;
                match color[succ] {
                    0 => {
                        color[succ] = 1;
                        parent[succ] = node;
                        stack.push((succ, 0));
                    }
                    1 => {
                        // Found a cycle: walk back from node to succ.
                        let mut cycle = vec![succ];
                        let mut cur = node;
                        while cur != succ {
                            cycle.push(cur);
                            cur = parent[cur];
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                color[node] = 2;
                stack.pop();
            }
        }
    }
    None
}

fn validate_family(dim: usize, boxes: &[BoxRd]) -> Result<()> {
    for b in boxes {
        if b.dim() != dim {
            return Err(Error::DimensionMismatch(b.dim(), dim));
        }
    }
    Ok(())
}

fn validate_support(dim: usize, support: &[usize]) -> Result<()> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    for (k, &i) in support.iter().enumerate() {
        if i >= dim {
            return Err(Error::BadSupport(i));
        }
        if k > 0 && support[k - 1] >= i {
            return Err(Error::BadSupport(i));
        }
    }
    Ok(())
}

/// Searches for a weakly ascending transversal with support exactly
/// `support` (0-based, strictly increasing axes).
///
/// Variables are the normalized Cremona coordinates `(y, w)` restricted to
/// the support gauge; feasibility with all `w_i > 0` on the support is
/// decided by maximizing the minimum of the `w_i`.
pub fn ascending_transversal(
    dim: usize,
    boxes: &[BoxRd],
    support: &[usize],
) -> Result<Option<CremonaLine>> {
    validate_family(dim, boxes)?;
    validate_support(dim, support)?;
    let s = support.len();
    // Off-support coordinates must sit inside every box slab; aggregate the
    // interval first and fail fast when empty.
    let off: Vec<usize> = (0..dim).filter(|i| !support.contains(i)).collect();
    let mut off_lo = vec![None::<Rat>; dim];
    let mut off_hi = vec![None::<Rat>; dim];
    for &i in &off {
        for b in boxes {
            let lo = b.min()[i].clone();
            let hi = b.max()[i].clone();
            off_lo[i] = Some(match off_lo[i].take() {
                Some(v) => v.max(lo),
                None => lo,
            });
            off_hi[i] = Some(match off_hi[i].take() {
                Some(v) => v.min(hi),
                None => hi,
            });
        }
        if let (Some(lo), Some(hi)) = (&off_lo[i], &off_hi[i]) {
            if lo > hi {
                return Ok(None);
            }
        }
    }

    // Variable layout: y_0..y_{d-1}, w per support axis, then the
    // positivity slack delta. The translation gauge (support y summing to
    // zero) is applied after extraction: the pair constraints are invariant
    // under it, and dropping the equality keeps the system in pure
    // halfspace form for the few-variables kernel.
    let num_vars = dim + s + 1;
    let w_var = |k: usize| dim + k;
    let delta = dim + s;
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();

    // sum w = 1 as two halfspaces.
    let mut sum_w = vec![Rat::zero(); num_vars];
    for k in 0..s {
        sum_w[w_var(k)] = Rat::one();
    }
    rows.push((sum_w.clone(), Rat::one()));
    rows.push((sum_w.iter().map(|c| -c).collect(), Rat::from_int(-1)));
    // delta >= 0 and w_k >= delta.
    let mut row = vec![Rat::zero(); num_vars];
    row[delta] = Rat::from_int(-1);
    rows.push((row, Rat::zero()));
    for k in 0..s {
        let mut row = vec![Rat::zero(); num_vars];
        row[delta] = Rat::one();
        row[w_var(k)] = Rat::from_int(-1);
        rows.push((row, Rat::zero()));
    }
    // Pair constraints a_i w_i - y_i <= b_j w_j - y_j per box.
    for b in boxes {
        for (ki, &i) in support.iter().enumerate() {
            for (kj, &j) in support.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut row = vec![Rat::zero(); num_vars];
                row[w_var(ki)] = b.min()[i].clone();
                row[i] = Rat::from_int(-1);
                row[w_var(kj)] = -&b.max()[j];
                row[j] = Rat::one();
                rows.push((row, Rat::zero()));
            }
        }
    }
    for &i in &off {
        if let (Some(lo), Some(hi)) = (&off_lo[i], &off_hi[i]) {
            let mut row = vec![Rat::zero(); num_vars];
            row[i] = Rat::one();
            rows.push((row.clone(), hi.clone()));
            let mut row = vec![Rat::zero(); num_vars];
            row[i] = Rat::from_int(-1);
            rows.push((row, -lo));
        }
    }

    let mut objective = vec![Rat::zero(); num_vars];
    objective[delta] = Rat::one();
    let point = match maximize_over_halfspaces(&rows, &objective) {
        HalfspaceOutcome::Infeasible => return Ok(None),
        HalfspaceOutcome::Optimal { point, value } => {
            if value.is_positive() {
                point
            } else {
                // Only degenerate points: every feasible line for this
                // support actually has a smaller one.
                return Ok(None);
            }
        }
        HalfspaceOutcome::Unbounded => {
            unreachable!("delta is bounded by 1/|support|")
        }
    };

    let mut y = Vec::with_capacity(dim);
    let mut w = vec![Rat::zero(); dim];
    for i in 0..dim {
        y.push(point[i].clone());
    }
    // Apply the translation gauge over the support.
    let mean = support.iter().map(|&i| &y[i]).sum::<Rat>()
        / Rat::from_int(s as i64);
    for &i in support {
        y[i] = &y[i] - &mean;
    }
    for (k, &i) in support.iter().enumerate() {
        w[i] = point[w_var(k)].clone();
    }
    let cremona = CremonaLine::new(VecD::new(y), VecD::new(w))?;
    let line = crate::cremona::from_cremona(&cremona);
    for b in boxes {
        assert!(
            crate::geometry::line_meets_box(&line, b)?,
            "LP witness must meet every box"
        );
    }
    Ok(Some(cremona))
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order,
/// streamed without materializing the whole list.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = if k <= n {
        Some((0..k).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        if k > 0 {
            let mut succ = current.clone();
            let mut i = k;
            while i > 0 {
                i -= 1;
                if succ[i] != i + n - k {
                    succ[i] += 1;
                    for j in (i + 1)..k {
                        succ[j] = succ[j - 1] + 1;
                    }
                    next = Some(succ);
                    break;
                }
            }
        }
        Some(current)
    })
}

/// Supports in enumeration order: the full support first, then decreasing
/// size, lexicographic within a size.
pub fn support_order(dim: usize) -> Vec<Vec<usize>> {
    (1..=dim)
        .rev()
        .flat_map(|size| combinations(dim, size))
        .collect()
}

/// Transversal with a fixed sign class: reflects the boxes, enumerates
/// supports, and reflects any witness back.
pub fn sign_transversal(
    dim: usize,
    boxes: &[BoxRd],
    eps: &SignClass,
) -> Result<Option<RectLine>> {
    Ok(sign_transversal_with_evidence(dim, boxes, eps)?.0)
}

pub(crate) fn sign_transversal_with_evidence(
    dim: usize,
    boxes: &[BoxRd],
    eps: &SignClass,
) -> Result<(Option<RectLine>, InfeasibilityEvidence)> {
    validate_family(dim, boxes)?;
    if eps.dim() != dim {
        return Err(Error::DimensionMismatch(eps.dim(), dim));
    }
    let reflected: Vec<BoxRd> = boxes
        .iter()
        .map(|b| reflect_box(b, eps))
        .collect::<Result<_>>()?;
    if let Some(cycle) = separation_cycle(&reflected) {
        return Ok((
            None,
            InfeasibilityEvidence::SeparationCycle { boxes: cycle },
        ));
    }
    for support in support_order(dim) {
        if let Some(cremona) = ascending_transversal(dim, &reflected, &support)? {
            let ascending = crate::cremona::from_cremona(&cremona);
            let line = reflect_line(&ascending, eps)?;
            assert!(stabs_all(&line, boxes), "reflected witness must stab");
            return Ok((Some(line), InfeasibilityEvidence::ExhaustedSupports));
        }
    }
    Ok((None, InfeasibilityEvidence::ExhaustedSupports))
}

/// The global solver: tries all `2^(d-1)` canonical sign classes and
/// returns the first witness, or per-sign infeasibility evidence.
pub fn santalo_transversal(dim: usize, boxes: &[BoxRd]) -> Result<TransversalCertificate> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { need: 2 });
    }
    validate_family(dim, boxes)?;
    let mut per_sign = Vec::new();
    for eps in SignClass::enumerate(dim) {
        let (witness, evidence) = sign_transversal_with_evidence(dim, boxes, &eps)?;
        if let Some(line) = witness {
            let reflected = reflect_line(&line, &eps)?;
            let cremona = crate::cremona::to_cremona(&reflected)?;
            let support = cremona.support().to_vec();
            return Ok(TransversalCertificate::Feasible {
                line,
                cremona,
                support,
                sign: eps,
            });
        }
        per_sign.push(SignOutcome {
            sign: eps,
            evidence,
        });
    }
    Ok(TransversalCertificate::Infeasible { per_sign })
}
