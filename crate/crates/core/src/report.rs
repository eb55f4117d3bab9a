//! End-to-end evaluation: configuration, the metric report and its
//! JSON / table serializations.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Serialize, Serializer};

use crate::beta_weights::{BetaShape, WeightSpec};
use crate::error::{Error, Result};
use crate::loss::h_from_hull;
use crate::roc::{auc, ConvexHull, RocCurve};
use crate::score_data::{ingest_csv, EmpiricalCdfs, PriorPair, ScoreDataset};
use crate::svg;
use crate::threshold_metrics::{min_error_rate, ConfusionCounts, PointMetrics};

/// Raw weight-distribution options as given on the command line. At most one
/// group may be set; [`WeightArgs::to_spec`] rejects combinations.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightArgs {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub mode_c: Option<f64>,
    pub severity_ratio: Option<f64>,
    pub k: Option<f64>,
    pub beta22: bool,
    /// `Some(None)` selects the legacy family with its default `α = 2`.
    pub legacy_asymmetric: Option<Option<f64>>,
}

impl WeightArgs {
    pub fn to_spec(&self) -> Result<WeightSpec> {
        let k = self.k.unwrap_or(crate::beta_weights::MIN_K);
        let mut chosen: Vec<(&str, WeightSpec)> = Vec::new();
        match (self.alpha, self.beta) {
            (Some(alpha), Some(beta)) => chosen.push(("alpha/beta", WeightSpec::Explicit { alpha, beta })),
            (None, None) => {}
            _ => return Err(Error::Conflict("--alpha and --beta must be given together".into())),
        }
        if let Some(c_tilde) = self.mode_c {
            chosen.push(("mode-c", WeightSpec::ModeK { c_tilde, k }));
        }
        if let Some(r_tilde) = self.severity_ratio {
            chosen.push(("severity-ratio", WeightSpec::SeverityRatioK { r_tilde, k }));
        }
        if self.beta22 {
            chosen.push(("beta22", WeightSpec::LegacyBeta22));
        }
        if let Some(alpha) = self.legacy_asymmetric {
            let alpha = alpha.unwrap_or(2.0);
            chosen.push(("legacy-asymmetric", WeightSpec::LegacyAsymmetric { alpha }));
        }
        if self.k.is_some() && self.mode_c.is_none() && self.severity_ratio.is_none() {
            return Err(Error::Conflict("--k needs --mode-c or --severity-ratio".into()));
        }
        match chosen.as_slice() {
            [] => Ok(WeightSpec::DefaultPriors),
            [(_, spec)] => Ok(*spec),
            many => {
                let names: Vec<&str> = many.iter().map(|(n, _)| *n).collect();
                Err(Error::Conflict(format!(
                    "choose one weight distribution, got {}",
                    names.join(", ")
                )))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub input: PathBuf,
    pub label_column: String,
    pub score_column: String,
    pub priors: Option<PriorPair>,
    pub weight: WeightSpec,
    pub threshold: Option<f64>,
    pub format: ReportFormat,
    pub roc_svg: Option<PathBuf>,
    pub weight_svg: Option<PathBuf>,
}

impl EvalConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        EvalConfig {
            input: input.into(),
            label_column: "label".into(),
            score_column: "score".into(),
            priors: None,
            weight: WeightSpec::DefaultPriors,
            threshold: None,
            format: ReportFormat::Json,
            roc_svg: None,
            weight_svg: None,
        }
    }
}

/// Metrics at a user-supplied threshold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdReport {
    #[serde(serialize_with = "sig12")]
    pub threshold: f64,
    pub confusion: ConfusionCounts,
    #[serde(serialize_with = "sig12_metrics")]
    pub metrics: PointMetrics,
}

/// Every scalar produced by one evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricReport {
    #[serde(serialize_with = "sig12")]
    pub h: f64,
    #[serde(serialize_with = "sig12")]
    pub auc: f64,
    #[serde(serialize_with = "sig12")]
    pub gini: f64,
    #[serde(serialize_with = "sig12")]
    pub auch: f64,
    #[serde(serialize_with = "sig12")]
    pub ks: f64,
    #[serde(serialize_with = "sig12")]
    pub mer: f64,
    #[serde(serialize_with = "sig12")]
    pub pi0: f64,
    #[serde(serialize_with = "sig12")]
    pub pi1: f64,
    #[serde(serialize_with = "sig12")]
    pub alpha: f64,
    #[serde(serialize_with = "sig12")]
    pub beta: f64,
    #[serde(serialize_with = "sig12_opt")]
    pub mode: Option<f64>,
    #[serde(serialize_with = "sig12")]
    pub k: f64,
    /// `None` when the best operating point is a sentinel (all to one class).
    #[serde(serialize_with = "sig12_opt")]
    pub mer_threshold: Option<f64>,
    #[serde(serialize_with = "sig12")]
    pub expected_min_loss: f64,
    #[serde(serialize_with = "sig12")]
    pub baseline_loss: f64,
    pub n0: u64,
    pub n1: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at_threshold: Option<ThresholdReport>,
}

/// Computes every metric for one dataset.
pub fn evaluate(
    d: &ScoreDataset,
    priors: Option<PriorPair>,
    weight: &WeightSpec,
    threshold: Option<f64>,
) -> Result<MetricReport> {
    let priors = priors.unwrap_or_else(|| PriorPair::empirical(d));
    let shape = weight.resolve(&priors)?;
    let cdfs = EmpiricalCdfs::new(d);
    let roc = RocCurve::new(&cdfs);
    let hull = ConvexHull::new(&roc);
    Ok(report_from_parts(d, &priors, &shape, &cdfs, &roc, &hull, threshold)?)
}

fn report_from_parts(
    d: &ScoreDataset,
    priors: &PriorPair,
    shape: &BetaShape,
    cdfs: &EmpiricalCdfs,
    roc: &RocCurve,
    hull: &ConvexHull,
    threshold: Option<f64>,
) -> Result<MetricReport> {
    let hres = h_from_hull(hull, priors, shape)?;
    let auc = auc(d);
    let mer = min_error_rate(cdfs, priors);
    let at_threshold = match threshold {
        Some(t) if !t.is_finite() => {
            return Err(Error::InvalidParameter(format!("threshold must be finite, got {t}")))
        }
        Some(t) => {
            let confusion = ConfusionCounts::at_threshold(d, t);
            Some(ThresholdReport {
                threshold: t,
                confusion,
                metrics: PointMetrics::new(&confusion, priors),
            })
        }
        None => None,
    };
    Ok(MetricReport {
        h: hres.h,
        auc,
        gini: 2.0 * auc - 1.0,
        auch: hull.area(),
        ks: roc.ks_statistic(),
        mer: mer.error_rate,
        pi0: priors.pi0(),
        pi1: priors.pi1(),
        alpha: shape.alpha(),
        beta: shape.beta(),
        mode: shape.mode().ok(),
        k: shape.k(),
        mer_threshold: Some(mer.threshold).filter(|t| t.is_finite()),
        expected_min_loss: hres.expected_min_loss,
        baseline_loss: hres.baseline_loss,
        n0: d.n0() as u64,
        n1: d.n1() as u64,
        at_threshold,
    })
}

/// Reads the input, evaluates it and writes any requested plots.
pub fn run_eval(cfg: &EvalConfig) -> Result<MetricReport> {
    if let Some(p) = cfg.priors {
        PriorPair::new(p.pi0(), p.pi1())?;
    }
    let d = ingest_csv(&cfg.input, &cfg.label_column, &cfg.score_column)?;
    let priors = cfg.priors.unwrap_or_else(|| PriorPair::empirical(&d));
    let shape = cfg.weight.resolve(&priors)?;
    let cdfs = EmpiricalCdfs::new(&d);
    let roc = RocCurve::new(&cdfs);
    let hull = ConvexHull::new(&roc);
    let report = report_from_parts(&d, &priors, &shape, &cdfs, &roc, &hull, cfg.threshold)?;
    if let Some(path) = &cfg.roc_svg {
        svg::render_roc_svg(&roc, &hull, path)?;
    }
    if let Some(path) = &cfg.weight_svg {
        let label = format!("w(c) = Beta({}, {})", fmt_sig12(shape.alpha()), fmt_sig12(shape.beta()));
        svg::render_weight_density_svg(&[(label, shape)], path)?;
    }
    Ok(report)
}

/// Rounds to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Shortest decimal text of `round_sig12(x)`.
pub fn fmt_sig12(x: f64) -> String {
    let r = round_sig12(x);
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

fn sig12<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(round_sig12(*x) + 0.0)
    } else {
        s.serialize_none()
    }
}

fn sig12_opt<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => sig12(v, s),
        None => s.serialize_none(),
    }
}

fn sig12_metrics<S: Serializer>(m: &PointMetrics, s: S) -> std::result::Result<S::Ok, S::Error> {
    let r = |v: Option<f64>| v.map(round_sig12);
    PointMetrics {
        sensitivity: r(m.sensitivity),
        specificity: r(m.specificity),
        ppv: r(m.ppv),
        npv: r(m.npv),
        proportion_correct: r(m.proportion_correct),
        error_rate: r(m.error_rate),
        f_measure: r(m.f_measure),
    }
    .serialize(s)
}

pub fn serialize_report(rep: &MetricReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut text = serde_json::to_string_pretty(rep).expect("report serializes");
            text.push('\n');
            text
        }
        ReportFormat::Table => table(rep),
    }
}

fn table(rep: &MetricReport) -> String {
    let opt = |v: Option<f64>| v.map(fmt_sig12).unwrap_or_else(|| "undefined".into());
    let mut rows: Vec<(&str, String)> = vec![
        ("h", fmt_sig12(rep.h)),
        ("auc", fmt_sig12(rep.auc)),
        ("gini", fmt_sig12(rep.gini)),
        ("auch", fmt_sig12(rep.auch)),
        ("ks", fmt_sig12(rep.ks)),
        ("mer", fmt_sig12(rep.mer)),
        ("mer_threshold", opt(rep.mer_threshold)),
        ("pi0", fmt_sig12(rep.pi0)),
        ("pi1", fmt_sig12(rep.pi1)),
        ("alpha", fmt_sig12(rep.alpha)),
        ("beta", fmt_sig12(rep.beta)),
        ("mode", opt(rep.mode)),
        ("k", fmt_sig12(rep.k)),
        ("expected_min_loss", fmt_sig12(rep.expected_min_loss)),
        ("baseline_loss", fmt_sig12(rep.baseline_loss)),
        ("n0", rep.n0.to_string()),
        ("n1", rep.n1.to_string()),
    ];
    if let Some(at) = &rep.at_threshold {
        let (c, m) = (&at.confusion, &at.metrics);
        rows.extend([
            ("threshold", fmt_sig12(at.threshold)),
            ("tp", c.tp.to_string()),
            ("fp", c.fp.to_string()),
            ("tn", c.tn.to_string()),
            ("fn", c.fn_.to_string()),
            ("sensitivity", opt(m.sensitivity)),
            ("specificity", opt(m.specificity)),
            ("ppv", opt(m.ppv)),
            ("npv", opt(m.npv)),
            ("proportion_correct", opt(m.proportion_correct)),
            ("error_rate", opt(m.error_rate)),
            ("f_measure", opt(m.f_measure)),
        ]);
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}
