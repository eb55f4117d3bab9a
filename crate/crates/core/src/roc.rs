//! Empirical ROC curve, its upper convex hull and rank summaries.

use crate::score_data::{EmpiricalCdfs, ScoreDataset};

/// One operating point. `threshold` is `±∞` for the two sentinels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RocPoint {
    pub threshold: f64,
    pub f0: f64,
    pub f1: f64,
    pub fpr: f64,
    pub tpr: f64,
}

impl RocPoint {
    fn new(threshold: f64, f0: f64, f1: f64) -> Self {
        RocPoint {
            threshold,
            f0,
            f1,
            fpr: 1.0 - f0,
            tpr: 1.0 - f1,
        }
    }
}

/// ROC operating points ordered by ascending threshold, so both rates are
/// nonincreasing: `(1, 1)` first, `(0, 0)` last.
#[derive(Debug, Clone, PartialEq)]
pub struct RocCurve {
    points: Vec<RocPoint>,
}

impl RocCurve {
    pub fn new(cdfs: &EmpiricalCdfs) -> RocCurve {
        RocCurve {
            points: cdfs.iter().map(|(t, f0, f1)| RocPoint::new(t, f0, f1)).collect(),
        }
    }

    pub fn points(&self) -> &[RocPoint] {
        &self.points
    }

    /// Trapezoidal area; tied scores across classes give a diagonal segment.
    pub fn trapezoid_area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[0].fpr - w[1].fpr) * (w[0].tpr + w[1].tpr) * 0.5)
            .sum()
    }

    /// Largest vertical gap `F0(t) − F1(t)` over all operating points.
    pub fn ks_statistic(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.f0 - p.f1)
            .fold(0.0, f64::max)
    }
}

/// Upper-left convex hull of a ROC curve, from `(0, 0)` to `(1, 1)` in
/// ascending FPR order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexHull {
    vertices: Vec<RocPoint>,
}

const COLLINEAR_TOL: f64 = 1e-12;

impl ConvexHull {
    /// Monotone-chain upper hull. Collinear interior points are dropped.
    pub fn new(roc: &RocCurve) -> ConvexHull {
        // Descending threshold is ascending (FPR, TPR).
        let mut hull: Vec<RocPoint> = Vec::new();
        for &p in roc.points.iter().rev() {
            while hull.len() >= 2 {
                let o = hull[hull.len() - 2];
                let a = hull[hull.len() - 1];
                let cross = (a.fpr - o.fpr) * (p.tpr - o.tpr) - (a.tpr - o.tpr) * (p.fpr - o.fpr);
                if cross >= -COLLINEAR_TOL {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        ConvexHull { vertices: hull }
    }

    pub fn vertices(&self) -> &[RocPoint] {
        &self.vertices
    }

    /// Area under the hull polyline.
    pub fn area(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| (w[1].fpr - w[0].fpr) * (w[0].tpr + w[1].tpr) * 0.5)
            .sum()
    }
}

/// Probability that a random class-1 score exceeds a random class-0 score,
/// ties counted one half (Mann-Whitney).
pub fn auc(d: &ScoreDataset) -> f64 {
    let (s0, s1) = (d.scores0(), d.scores1());
    // twice the midrank count, kept exact in integers
    let mut twice: u128 = 0;
    let (mut lo, mut hi) = (0usize, 0usize);
    for &s in s1 {
        while lo < s0.len() && s0[lo] < s {
            lo += 1;
        }
        if hi < lo {
            hi = lo;
        }
        while hi < s0.len() && s0[hi] <= s {
            hi += 1;
        }
        twice += 2 * lo as u128 + (hi - lo) as u128;
    }
    twice as f64 / (2.0 * s0.len() as f64 * s1.len() as f64)
}

pub fn gini(d: &ScoreDataset) -> f64 {
    2.0 * auc(d) - 1.0
}
