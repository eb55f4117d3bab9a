//! Confusion-table metrics at a fixed threshold and the minimum error rate.

use crate::score_data::{EmpiricalCdfs, PriorPair, ScoreDataset};

/// Cross-classification of true class by predicted class. Class 1 is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl ConfusionCounts {
    /// Objects scoring strictly above `t` are predicted class 1.
    pub fn at_threshold(d: &ScoreDataset, t: f64) -> ConfusionCounts {
        let above = |s: &[f64]| (s.len() - s.partition_point(|&x| x <= t)) as u64;
        let tp = above(d.scores1());
        let fp = above(d.scores0());
        ConfusionCounts {
            tp,
            fp,
            tn: d.n0() as u64 - fp,
            fn_: d.n1() as u64 - tp,
        }
    }

    pub fn n0(&self) -> u64 {
        self.fp + self.tn
    }

    pub fn n1(&self) -> u64 {
        self.tp + self.fn_
    }
}

/// Metrics derived from a confusion table. `None` marks a ratio whose
/// denominator is zero.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PointMetrics {
    pub sensitivity: Option<f64>,
    pub specificity: Option<f64>,
    pub ppv: Option<f64>,
    pub npv: Option<f64>,
    pub proportion_correct: Option<f64>,
    pub error_rate: Option<f64>,
    pub f_measure: Option<f64>,
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

impl PointMetrics {
    /// Error rate is prior-weighted: `π0·fp/n0 + π1·fn/n1`.
    pub fn new(c: &ConfusionCounts, p: &PriorPair) -> PointMetrics {
        let sensitivity = ratio(c.tp, c.tp + c.fn_);
        let specificity = ratio(c.tn, c.tn + c.fp);
        let ppv = ratio(c.tp, c.tp + c.fp);
        let npv = ratio(c.tn, c.tn + c.fn_);
        let error_rate = match (ratio(c.fp, c.n0()), ratio(c.fn_, c.n1())) {
            (Some(a), Some(b)) => Some(p.pi0() * a + p.pi1() * b),
            _ => None,
        };
        let f_measure = match (ppv, sensitivity) {
            (Some(pr), Some(se)) if pr + se > 0.0 => Some(2.0 * pr * se / (pr + se)),
            _ => None,
        };
        PointMetrics {
            sensitivity,
            specificity,
            ppv,
            npv,
            proportion_correct: error_rate.map(|e| 1.0 - e),
            error_rate,
            f_measure,
        }
    }
}

/// Minimum prior-weighted error over all operating points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinErrorRate {
    pub error_rate: f64,
    /// Operating-point threshold: scores at or above it are assigned class 1.
    /// `−∞` assigns everything to class 1, `+∞` everything to class 0.
    pub threshold: f64,
}

pub fn min_error_rate(cdfs: &EmpiricalCdfs, p: &PriorPair) -> MinErrorRate {
    let mut best = MinErrorRate {
        error_rate: f64::INFINITY,
        threshold: f64::NAN,
    };
    for (t, f0, f1) in cdfs.iter() {
        let er = p.pi0() * (1.0 - f0) + p.pi1() * f1;
        // strict comparison keeps the smallest achieving threshold
        if er < best.error_rate {
            best = MinErrorRate { error_rate: er, threshold: t };
        }
    }
    best
}
