//! Helly-property verification for box families.
//!
//! For each mode the claim has the shape: if every subset of the Helly
//! number size admits a transversal, so does the whole family. The checker
//! reports whether that hypothesis and conclusion hold and flags a
//! `theorem_violation` if the implication ever failed — which must never
//! happen.
//!
//! Two facts keep this exact and fast:
//! - feasibility is antitone in the family: removing a box removes
//!   constraints, so a feasible family certifies all of its subsets;
//! - when the full family is infeasible, a greedy deletion pass yields a
//!   subfamily that is minimally infeasible, certifying an infeasible
//!   subset of the checked size whenever one exists.
//!
//! Exhaustive subset enumeration (streamed, batched over the thread pool)
//! remains available and is the fallback whenever the certificate route
//! cannot settle the answer.

use serde::{Deserialize, Serialize};

use crate::dual_flats;
use crate::error::{Error, Result};
use crate::geometry::{BoxRd, SignClass};
use crate::transversal::solver::{combinations, santalo_transversal, sign_transversal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum HellyMode {
    /// Weakly ascending transversals; Helly number `2d - 1`.
    Ascending,
    /// Transversals of one fixed sign class; Helly number `2d - 1`.
    Sign { sign: SignClass },
    /// Transversals of any sign; Helly number `2^(d-1) (2d - 1)`.
    Global,
    /// Hyperplane transversals of one sign class; Helly number `d + 1`.
    Hyperplane { sign: SignClass },
    /// Hyperplane transversals of any sign; Helly number `2^(d-1) (d + 1)`.
    HyperplaneGlobal,
}

impl HellyMode {
    /// The ascending-hyperplane mode used by the acceptance checks.
    pub fn hyperplane_ascending(dim: usize) -> Self {
        HellyMode::Hyperplane {
            sign: SignClass::all_plus(dim),
        }
    }

    pub fn helly_number(&self, dim: usize) -> usize {
        match self {
            HellyMode::Ascending | HellyMode::Sign { .. } => 2 * dim - 1,
            HellyMode::Global => (1 << (dim - 1)) * (2 * dim - 1),
            HellyMode::Hyperplane { .. } => dim + 1,
            HellyMode::HyperplaneGlobal => (1 << (dim - 1)) * (dim + 1),
        }
    }

    fn feasible(&self, dim: usize, boxes: &[BoxRd]) -> Result<bool> {
        Ok(match self {
            HellyMode::Ascending => {
                sign_transversal(dim, boxes, &SignClass::all_plus(dim))?.is_some()
            }
            HellyMode::Sign { sign } => sign_transversal(dim, boxes, sign)?.is_some(),
            HellyMode::Global => santalo_transversal(dim, boxes)?.is_feasible(),
            HellyMode::Hyperplane { sign } => {
                dual_flats::hyperplane_transversal(dim, boxes, sign)?.is_some()
            }
            HellyMode::HyperplaneGlobal => {
                dual_flats::hyperplane_transversal_global(dim, boxes)?.is_some()
            }
        })
    }
}

/// How subset feasibility is established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetStrategy {
    /// Monotonicity + deletion-filter certificates; falls back to
    /// enumeration only when those cannot settle the report.
    Auto,
    /// Always enumerate every subset of the checked size.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HellyReport {
    pub mode: HellyMode,
    pub helly_number: usize,
    pub family_size: usize,
    /// Size of the proper subsets checked: `min(helly_number, n - 1)`.
    pub subset_size: usize,
    pub full_feasible: bool,
    pub all_subsets_feasible: bool,
    /// An infeasible subset of `subset_size`, when one was found.
    pub violating_subset: Option<Vec<usize>>,
    /// True iff every subset of the Helly-number size was feasible yet the
    /// family is not. Must never be set.
    pub theorem_violation: bool,
    /// Minimally infeasible at exactly the Helly number: a sharpness
    /// instance for the theorem.
    pub tightness_instance: bool,
}

/// Verifies the Helly property of `mode` on one family.
pub fn helly_check(
    dim: usize,
    boxes: &[BoxRd],
    mode: HellyMode,
    strategy: SubsetStrategy,
) -> Result<HellyReport> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { need: 2 });
    }
    let n = boxes.len();
    let h = mode.helly_number(dim);
    let subset_size = h.min(n.saturating_sub(1));
    let full_feasible = mode.feasible(dim, boxes)?;

    let mut report = HellyReport {
        mode: mode.clone(),
        helly_number: h,
        family_size: n,
        subset_size,
        full_feasible,
        all_subsets_feasible: true,
        violating_subset: None,
        theorem_violation: false,
        tightness_instance: false,
    };

    if full_feasible {
        // Subsets inherit the witness: nothing to enumerate.
        return Ok(report);
    }

    let verdict = match strategy {
        SubsetStrategy::Exhaustive => match exhaustive_search(dim, boxes, &mode, subset_size)? {
            Some(witness) => CoreVerdict::Witness(witness),
            None => CoreVerdict::AllSubsetsFeasible,
        },
        SubsetStrategy::Auto => match core_certificate(dim, boxes, &mode, subset_size)? {
            CoreVerdict::Unsettled => {
                // The one minimal core found was larger than the checked
                // size; other cores may still fit. Decide by enumeration.
                match exhaustive_search(dim, boxes, &mode, subset_size)? {
                    Some(witness) => CoreVerdict::Witness(witness),
                    None => CoreVerdict::AllSubsetsFeasible,
                }
            }
            settled => settled,
        },
    };

    match verdict {
        CoreVerdict::Witness(witness) => {
            report.all_subsets_feasible = false;
            report.violating_subset = Some(witness);
        }
        CoreVerdict::AllSubsetsFeasible => {
            report.all_subsets_feasible = true;
            report.theorem_violation = subset_size == h;
            report.tightness_instance = n == h;
        }
        CoreVerdict::Unsettled => unreachable!("unsettled verdicts resolved above"),
    }
    Ok(report)
}

enum CoreVerdict {
    /// An infeasible subset of exactly the checked size.
    Witness(Vec<usize>),
    /// Every proper subset of the checked size is feasible.
    AllSubsetsFeasible,
    /// The certificate route could not decide.
    Unsettled,
}

/// Greedy deletion filter over an infeasible family: repeatedly drops boxes
/// whose removal keeps the family infeasible, ending in a subfamily that is
/// minimally infeasible (every proper subfamily feasible).
fn core_certificate(
    dim: usize,
    boxes: &[BoxRd],
    mode: &HellyMode,
    subset_size: usize,
) -> Result<CoreVerdict> {
    let mut core: Vec<usize> = (0..boxes.len()).collect();
    let mut i = 0;
    while i < core.len() {
        let mut trial = core.clone();
        trial.remove(i);
        let sub: Vec<BoxRd> = trial.iter().map(|&k| boxes[k].clone()).collect();
        if !mode.feasible(dim, &sub)? {
            core = trial;
        } else {
            i += 1;
        }
    }
    if core.len() <= subset_size {
        // Any superset of an infeasible family is infeasible: pad with the
        // smallest unused indices.
        let mut witness = core.clone();
        for k in 0..boxes.len() {
            if witness.len() == subset_size {
                break;
            }
            if !core.contains(&k) {
                witness.push(k);
            }
        }
        witness.sort_unstable();
        debug_assert_eq!(witness.len(), subset_size);
        return Ok(CoreVerdict::Witness(witness));
    }
    if core.len() == boxes.len() {
        // The whole family is minimally infeasible: every proper subfamily
        // is feasible, so no violating subset of any smaller size exists.
        return Ok(CoreVerdict::AllSubsetsFeasible);
    }
    Ok(CoreVerdict::Unsettled)
}

const BATCH: usize = 512;

/// Streams all `subset_size`-subsets in lexicographic order, checking
/// batches in parallel; returns the lexicographically first infeasible one.
fn exhaustive_search(
    dim: usize,
    boxes: &[BoxRd],
    mode: &HellyMode,
    subset_size: usize,
) -> Result<Option<Vec<usize>>> {
    use rayon::prelude::*;
    let mut stream = combinations(boxes.len(), subset_size);
    loop {
        let batch: Vec<Vec<usize>> = stream.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            return Ok(None);
        }
        let hits: Vec<Result<Option<Vec<usize>>>> = batch
            .into_par_iter()
            .map(|subset| {
                let sub: Vec<BoxRd> = subset.iter().map(|&k| boxes[k].clone()).collect();
                Ok((!mode.feasible(dim, &sub)?).then_some(subset))
            })
            .collect();
        for hit in hits {
            if let Some(subset) = hit? {
                return Ok(Some(subset));
            }
        }
    }
}
