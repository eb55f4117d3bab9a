//! Labeled score input: per-class sorted scores, class priors and the
//! empirical class-conditional CDFs `F_k(t) = P(s < t | k)`.

use std::path::Path;

use crate::error::{Error, Result};

/// Classifier scores split by true class, each side sorted ascending.
///
/// Both classes are guaranteed non-empty and every score is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreDataset {
    scores0: Vec<f64>,
    scores1: Vec<f64>,
}

impl ScoreDataset {
    pub fn new(mut scores0: Vec<f64>, mut scores1: Vec<f64>) -> Result<Self> {
        if let Some(&bad) = scores0.iter().chain(&scores1).find(|s| !s.is_finite()) {
            return Err(Error::NonFiniteScore(bad));
        }
        if scores0.is_empty() {
            return Err(Error::EmptyClass(0));
        }
        if scores1.is_empty() {
            return Err(Error::EmptyClass(1));
        }
        scores0.sort_unstable_by(f64::total_cmp);
        scores1.sort_unstable_by(f64::total_cmp);
        // -0.0 and 0.0 must compare equal for threshold bookkeeping.
        for s in scores0.iter_mut().chain(scores1.iter_mut()) {
            if *s == 0.0 {
                *s = 0.0;
            }
        }
        Ok(ScoreDataset { scores0, scores1 })
    }

    /// Builds a dataset from `(label, score)` pairs where `label` selects class 1.
    pub fn from_labeled<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (bool, f64)>,
    {
        let (mut s0, mut s1) = (Vec::new(), Vec::new());
        for (is_one, score) in rows {
            if is_one {
                s1.push(score);
            } else {
                s0.push(score);
            }
        }
        Self::new(s0, s1)
    }

    pub fn scores0(&self) -> &[f64] {
        &self.scores0
    }

    pub fn scores1(&self) -> &[f64] {
        &self.scores1
    }

    pub fn n0(&self) -> usize {
        self.scores0.len()
    }

    pub fn n1(&self) -> usize {
        self.scores1.len()
    }

    /// The same objects with class labels exchanged and scores negated, so that
    /// higher scores still point at (the new) class 1.
    pub fn label_swapped(&self) -> ScoreDataset {
        let neg = |v: &[f64]| v.iter().rev().map(|s| -s + 0.0).collect::<Vec<_>>();
        ScoreDataset {
            scores0: neg(&self.scores1),
            scores1: neg(&self.scores0),
        }
    }

    /// Applies `f` to every score. `f` should be strictly increasing for the
    /// result to describe the same classifier.
    pub fn map_scores(&self, f: impl Fn(f64) -> f64) -> Result<ScoreDataset> {
        ScoreDataset::new(
            self.scores0.iter().copied().map(&f).collect(),
            self.scores1.iter().copied().map(&f).collect(),
        )
    }
}

/// Reads a comma-separated file with a header row. Only the label and score
/// columns are inspected; labels must be exactly `0` or `1`.
pub fn ingest_csv(path: &Path, label_column: &str, score_column: &str) -> Result<ScoreDataset> {
    let file = std::fs::File::open(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    read_csv(std::io::BufReader::with_capacity(1 << 16, file), label_column, score_column)
}

/// Like [`ingest_csv`] but over any reader.
pub fn read_csv<R: std::io::Read>(
    reader: R,
    label_column: &str,
    score_column: &str,
) -> Result<ScoreDataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.byte_headers()?.clone();
    let position = |name: &str| {
        headers
            .iter()
            .position(|h| h == name.as_bytes())
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let label_idx = position(label_column)?;
    let score_idx = position(score_column)?;

    let (mut s0, mut s1) = (Vec::new(), Vec::new());
    let mut record = csv::ByteRecord::new();
    let mut row = 0u64;
    while rdr.read_byte_record(&mut record)? {
        row += 1;
        let field = |i: usize| record.get(i).unwrap_or_default();
        let label = field(label_idx);
        let score_text = field(score_idx);
        let score = std::str::from_utf8(score_text)
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|s| s.is_finite())
            .ok_or_else(|| Error::InvalidScore {
                row,
                value: String::from_utf8_lossy(score_text).into_owned(),
            })?;
        match label {
            b"0" => s0.push(score),
            b"1" => s1.push(score),
            other => {
                return Err(Error::InvalidLabel {
                    row,
                    value: String::from_utf8_lossy(other).into_owned(),
                })
            }
        }
    }
    ScoreDataset::new(s0, s1)
}

/// Class proportions `(π0, π1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriorPair {
    pi0: f64,
    pi1: f64,
}

impl PriorPair {
    pub const TOLERANCE: f64 = 1e-9;

    pub fn new(pi0: f64, pi1: f64) -> Result<Self> {
        let ok = pi0.is_finite()
            && pi1.is_finite()
            && pi0 > 0.0
            && pi1 > 0.0
            && (pi0 + pi1 - 1.0).abs() <= Self::TOLERANCE;
        if ok {
            Ok(PriorPair { pi0, pi1 })
        } else {
            Err(Error::InvalidPriors { pi0, pi1 })
        }
    }

    /// `(1 − π1, π1)`.
    pub fn from_pi1(pi1: f64) -> Result<Self> {
        Self::new(1.0 - pi1, pi1)
    }

    /// Sample proportions `n0/(n0+n1)` and `n1/(n0+n1)`.
    pub fn empirical(d: &ScoreDataset) -> PriorPair {
        let n = (d.n0() + d.n1()) as f64;
        PriorPair {
            pi0: d.n0() as f64 / n,
            pi1: d.n1() as f64 / n,
        }
    }

    pub fn pi0(&self) -> f64 {
        self.pi0
    }

    pub fn pi1(&self) -> f64 {
        self.pi1
    }

    pub fn swapped(&self) -> PriorPair {
        PriorPair {
            pi0: self.pi1,
            pi1: self.pi0,
        }
    }
}

/// Empirical class-conditional CDFs evaluated at every distinct observed score.
///
/// Index 0 of `f0`/`f1` is the `t = −∞` sentinel, index `i + 1` corresponds to
/// `thresholds[i]`, and the final entry is the `t = +∞` sentinel.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdfs {
    thresholds: Vec<f64>,
    below0: Vec<usize>,
    below1: Vec<usize>,
    n0: usize,
    n1: usize,
}

impl EmpiricalCdfs {
    pub fn new(d: &ScoreDataset) -> EmpiricalCdfs {
        let (a, b) = (d.scores0(), d.scores1());
        let cap = a.len() + b.len() + 2;
        let mut thresholds = Vec::with_capacity(cap);
        let mut below0 = Vec::with_capacity(cap);
        let mut below1 = Vec::with_capacity(cap);
        below0.push(0);
        below1.push(0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let t = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) => x.min(y),
                (Some(&x), None) => x,
                (None, Some(&y)) => y,
                (None, None) => unreachable!(),
            };
            thresholds.push(t);
            below0.push(i);
            below1.push(j);
            while i < a.len() && a[i] == t {
                i += 1;
            }
            while j < b.len() && b[j] == t {
                j += 1;
            }
        }
        below0.push(a.len());
        below1.push(b.len());
        EmpiricalCdfs {
            thresholds,
            below0,
            below1,
            n0: a.len(),
            n1: b.len(),
        }
    }

    /// Distinct observed scores, strictly ascending.
    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    /// Number of operating points, sentinels included.
    pub fn len(&self) -> usize {
        self.below0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    /// Threshold of operating point `i`, with `±∞` for the sentinels.
    pub fn threshold(&self, i: usize) -> f64 {
        if i == 0 {
            f64::NEG_INFINITY
        } else if i > self.thresholds.len() {
            f64::INFINITY
        } else {
            self.thresholds[i - 1]
        }
    }

    /// Counts of class-0 and class-1 scores strictly below operating point `i`.
    pub fn counts_below(&self, i: usize) -> (usize, usize) {
        (self.below0[i], self.below1[i])
    }

    pub fn f0(&self, i: usize) -> f64 {
        self.below0[i] as f64 / self.n0 as f64
    }

    pub fn f1(&self, i: usize) -> f64 {
        self.below1[i] as f64 / self.n1 as f64
    }

    /// `(F0(t), F1(t))` for an arbitrary `t`, including `±∞`.
    pub fn at(&self, t: f64) -> (f64, f64) {
        let idx = self.thresholds.partition_point(|&x| x < t);
        let i = if idx < self.thresholds.len() {
            idx + 1
        } else {
            self.len() - 1
        };
        (self.f0(i), self.f1(i))
    }

    /// All `(threshold, F0, F1)` triples in ascending threshold order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        (0..self.len()).map(move |i| (self.threshold(i), self.f0(i), self.f1(i)))
    }
}
