//! Evaluation of binary classifiers from their scores: the H measure under
//! Beta cost-weight distributions, together with AUC, Gini, area under the
//! ROC convex hull, KS, minimum error rate and fixed-threshold metrics.
//!
//! Class 1 is the positive class; an object is assigned to class 1 when its
//! score exceeds the threshold.

pub mod beta_weights;
pub mod error;
pub mod loss;
pub mod report;
pub mod roc;
pub mod score_data;
pub mod special;
pub mod svg;
pub mod threshold_metrics;

pub use beta_weights::{BetaShape, WeightSpec};
pub use error::{Error, ErrorKind, Result};
pub use loss::{h_measure, CostBreakpoints, HResult};
pub use report::{evaluate, run_eval, serialize_report, EvalConfig, MetricReport, ReportFormat, WeightArgs};
pub use roc::{auc, gini, ConvexHull, RocCurve};
pub use score_data::{ingest_csv, EmpiricalCdfs, PriorPair, ScoreDataset};
pub use threshold_metrics::{min_error_rate, ConfusionCounts, PointMetrics};
