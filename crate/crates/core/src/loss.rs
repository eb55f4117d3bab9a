//! Cost-weighted minimum loss and the H measure.
//!
//! For a normalized cost `c` the loss at an operating point is
//! `c·π0·(1 − F0) + (1 − c)·π1·F1`. Its minimum over thresholds is attained on
//! a convex hull vertex, and the optimal vertex changes only at a finite set of
//! cost breakpoints. Integrating against a Beta weight is then a sum of partial
//! moments over those intervals.

use crate::beta_weights::BetaShape;
use crate::error::Result;
use crate::roc::{ConvexHull, RocCurve};
use crate::score_data::{EmpiricalCdfs, PriorPair, ScoreDataset};

/// `(F0, F1)` coordinates of an operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfPoint {
    pub f0: f64,
    pub f1: f64,
}

pub fn loss_at(c: f64, point: CdfPoint, p: &PriorPair) -> f64 {
    c * p.pi0() * (1.0 - point.f0) + (1.0 - c) * p.pi1() * point.f1
}

/// Minimum loss at cost `c` over the hull vertices.
pub fn min_loss_at_cost(c: f64, hull: &ConvexHull, p: &PriorPair) -> f64 {
    hull.vertices()
        .iter()
        .map(|v| loss_at(c, CdfPoint { f0: v.f0, f1: v.f1 }, p))
        .fold(f64::INFINITY, f64::min)
}

/// Partition of `[0, 1]` into cost intervals, each with its loss-minimizing
/// hull vertex. `boundaries` has one more entry than `vertices`.
#[derive(Debug, Clone, PartialEq)]
pub struct CostBreakpoints {
    pub boundaries: Vec<f64>,
    pub vertices: Vec<CdfPoint>,
}

impl CostBreakpoints {
    pub fn new(hull: &ConvexHull, p: &PriorPair) -> CostBreakpoints {
        // Walk from the all-class-1 corner (F0 = F1 = 0) to the all-class-0 corner.
        let pts: Vec<CdfPoint> = hull
            .vertices()
            .iter()
            .rev()
            .map(|v| CdfPoint { f0: v.f0, f1: v.f1 })
            .collect();
        let mut boundaries = vec![0.0];
        let mut vertices = vec![pts[0]];
        for w in pts.windows(2) {
            let d0 = p.pi0() * (w[1].f0 - w[0].f0);
            let d1 = p.pi1() * (w[1].f1 - w[0].f1);
            let c = (d1 / (d0 + d1)).clamp(0.0, 1.0);
            let last = *boundaries.last().unwrap();
            if c <= last {
                // zero-width interval: the newer vertex takes over immediately
                *vertices.last_mut().unwrap() = w[1];
            } else {
                boundaries.push(c);
                vertices.push(w[1]);
            }
        }
        if *boundaries.last().unwrap() < 1.0 {
            boundaries.push(1.0);
        } else {
            // the last vertex only owns the single point c = 1
            vertices.pop();
        }
        CostBreakpoints { boundaries, vertices }
    }

    /// `(c_lo, c_hi, vertex)` for each interval.
    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64, CdfPoint)> + '_ {
        self.boundaries
            .windows(2)
            .zip(&self.vertices)
            .map(|(b, &v)| (b[0], b[1], v))
    }
}

/// `∫ min_t L(c; t)·w(c) dc`, evaluated in closed form interval by interval.
pub fn expected_min_loss(breaks: &CostBreakpoints, p: &PriorPair, w: &BetaShape) -> Result<f64> {
    let mut total = 0.0;
    for (lo, hi, v) in breaks.intervals() {
        let false_pos = p.pi0() * (1.0 - v.f0);
        let false_neg = p.pi1() * v.f1;
        if false_pos > 0.0 {
            total += false_pos * w.partial_moment_c(lo, hi)?;
        }
        if false_neg > 0.0 {
            total += false_neg * w.partial_moment_1mc(lo, hi)?;
        }
    }
    Ok(total)
}

/// Expected loss of the better trivial classifier at each cost: everything to
/// class 1 below `c = π1`, everything to class 0 above.
pub fn baseline_loss(p: &PriorPair, w: &BetaShape) -> Result<f64> {
    Ok(p.pi0() * w.partial_moment_c(0.0, p.pi1())? + p.pi1() * w.partial_moment_1mc(p.pi1(), 1.0)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HResult {
    pub h: f64,
    pub expected_min_loss: f64,
    pub baseline_loss: f64,
    pub weight: BetaShape,
    pub breakpoints: CostBreakpoints,
}

/// H measure from a precomputed hull.
pub fn h_from_hull(hull: &ConvexHull, p: &PriorPair, w: &BetaShape) -> Result<HResult> {
    let breakpoints = CostBreakpoints::new(hull, p);
    let loss = expected_min_loss(&breakpoints, p, w)?;
    let baseline = baseline_loss(p, w)?;
    let h = (1.0 - loss / baseline).clamp(0.0, 1.0);
    Ok(HResult {
        h,
        expected_min_loss: loss,
        baseline_loss: baseline,
        weight: *w,
        breakpoints,
    })
}

pub fn h_measure(d: &ScoreDataset, p: &PriorPair, w: &BetaShape) -> Result<HResult> {
    let roc = RocCurve::new(&EmpiricalCdfs::new(d));
    h_from_hull(&ConvexHull::new(&roc), p, w)
}
