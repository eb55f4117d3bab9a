//! C ABI over the `hmeasure` crate.
//!
//! Datasets are opaque handles owned by the caller and released with
//! [`hm_dataset_free`]. Every fallible call returns an [`HmStatus`]; on failure
//! [`hm_last_error_message`] describes the most recent error on the calling
//! thread. Strings returned by the library are released with [`hm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use hmeasure::report::serialize_report;
use hmeasure::{evaluate, BetaShape, Error, ErrorKind, PriorPair, ReportFormat, ScoreDataset, WeightSpec};

/// Result codes. Values 2-4 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    NullPointer = 1,
    Config = 2,
    Io = 3,
    Data = 4,
    Panic = 5,
}

/// Opaque labeled score dataset.
pub struct HmDataset {
    inner: ScoreDataset,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HmBetaShape {
    pub alpha: f64,
    pub beta: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HmPriors {
    pub pi0: f64,
    pub pi1: f64,
}

/// Scalar results of one evaluation.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HmMetrics {
    pub h: f64,
    pub auc: f64,
    pub gini: f64,
    pub auch: f64,
    pub ks: f64,
    pub mer: f64,
    pub pi0: f64,
    pub pi1: f64,
    pub alpha: f64,
    pub beta: f64,
    pub expected_min_loss: f64,
    pub baseline_loss: f64,
    pub n0: u64,
    pub n1: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> HmStatus {
    set_error(e.to_string());
    match e.kind() {
        ErrorKind::Config => HmStatus::Config,
        ErrorKind::Io => HmStatus::Io,
        ErrorKind::Data => HmStatus::Data,
    }
}

fn null(what: &str) -> HmStatus {
    set_error(format!("{what} is null"));
    HmStatus::NullPointer
}

/// Runs `f`, converting panics and errors into status codes.
fn guard(f: impl FnOnce() -> Result<(), HmStatus>) -> HmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            HmStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, HmStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        HmStatus::Config
    })
}

unsafe fn slice_arg<'a>(p: *const f64, n: usize, what: &str) -> Result<&'a [f64], HmStatus> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn priors_arg(p: *const HmPriors) -> Result<Option<PriorPair>, HmStatus> {
    match p.as_ref() {
        None => Ok(None),
        Some(p) => PriorPair::new(p.pi0, p.pi1).map(Some).map_err(fail),
    }
}

unsafe fn weight_arg(w: *const HmBetaShape) -> WeightSpec {
    match w.as_ref() {
        None => WeightSpec::DefaultPriors,
        Some(w) => WeightSpec::Explicit { alpha: w.alpha, beta: w.beta },
    }
}

fn shape_out(s: BetaShape) -> HmBetaShape {
    HmBetaShape { alpha: s.alpha(), beta: s.beta() }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a dataset from per-class score arrays (copied).
///
/// # Safety
/// `scores0`/`scores1` must point to `n0`/`n1` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_dataset_new(
    scores0: *const f64,
    n0: usize,
    scores1: *const f64,
    n1: usize,
    out: *mut *mut HmDataset,
) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s0 = slice_arg(scores0, n0, "scores0")?.to_vec();
        let s1 = slice_arg(scores1, n1, "scores1")?.to_vec();
        let inner = ScoreDataset::new(s0, s1).map_err(fail)?;
        *out = Box::into_raw(Box::new(HmDataset { inner }));
        Ok(())
    })
}

/// Reads a dataset from a CSV file with a header row.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_dataset_from_csv(
    path: *const c_char,
    label_column: *const c_char,
    score_column: *const c_char,
    out: *mut *mut HmDataset,
) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let path = str_arg(path, "path")?;
        let label = str_arg(label_column, "label_column")?;
        let score = str_arg(score_column, "score_column")?;
        let inner = hmeasure::ingest_csv(Path::new(path), label, score).map_err(fail)?;
        *out = Box::into_raw(Box::new(HmDataset { inner }));
        Ok(())
    })
}

/// # Safety
/// `ds` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hm_dataset_free(ds: *mut HmDataset) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// # Safety
/// `ds` must be a live handle; `n0`/`n1` writable.
#[no_mangle]
pub unsafe extern "C" fn hm_dataset_counts(ds: *const HmDataset, n0: *mut u64, n1: *mut u64) -> HmStatus {
    guard(|| {
        let ds = ds.as_ref().ok_or_else(|| null("dataset"))?;
        if n0.is_null() || n1.is_null() {
            return Err(null("count output"));
        }
        *n0 = ds.inner.n0() as u64;
        *n1 = ds.inner.n1() as u64;
        Ok(())
    })
}

/// Computes all scalar metrics. `priors` may be null for the sample
/// proportions; `weight` may be null for the default `Beta(π1 + 1, π0 + 1)`.
///
/// # Safety
/// `ds` must be a live handle; non-null pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hm_evaluate(
    ds: *const HmDataset,
    priors: *const HmPriors,
    weight: *const HmBetaShape,
    out: *mut HmMetrics,
) -> HmStatus {
    guard(|| {
        let ds = ds.as_ref().ok_or_else(|| null("dataset"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let r = evaluate(&ds.inner, priors_arg(priors)?, &weight_arg(weight), None).map_err(fail)?;
        *out = HmMetrics {
            h: r.h,
            auc: r.auc,
            gini: r.gini,
            auch: r.auch,
            ks: r.ks,
            mer: r.mer,
            pi0: r.pi0,
            pi1: r.pi1,
            alpha: r.alpha,
            beta: r.beta,
            expected_min_loss: r.expected_min_loss,
            baseline_loss: r.baseline_loss,
            n0: r.n0,
            n1: r.n1,
        };
        Ok(())
    })
}

/// Same evaluation as [`hm_evaluate`], rendered as the JSON report. Release
/// the string with [`hm_string_free`].
///
/// # Safety
/// As for [`hm_evaluate`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_report_json(
    ds: *const HmDataset,
    priors: *const HmPriors,
    weight: *const HmBetaShape,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        let ds = ds.as_ref().ok_or_else(|| null("dataset"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let r = evaluate(&ds.inner, priors_arg(priors)?, &weight_arg(weight), None).map_err(fail)?;
        let text = serialize_report(&r, ReportFormat::Json);
        *out = CString::new(text).expect("json has no nul bytes").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `Beta(π1 + 1, π0 + 1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_default(priors: HmPriors, out: *mut HmBetaShape) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = PriorPair::new(priors.pi0, priors.pi1).map_err(fail)?;
        *out = shape_out(BetaShape::default_from_priors(&p));
        Ok(())
    })
}

/// Shape with mode `c_tilde` and `α + β = k` (`k ≥ 3`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_from_mode(c_tilde: f64, k: f64, out: *mut HmBetaShape) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = shape_out(BetaShape::from_mode(c_tilde, k).map_err(fail)?);
        Ok(())
    })
}

/// Shape with mode `r/(1 + r)` and `α + β = k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_from_severity_ratio(r_tilde: f64, k: f64, out: *mut HmBetaShape) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = shape_out(BetaShape::from_severity_ratio(r_tilde, k).map_err(fail)?);
        Ok(())
    })
}

/// `Beta(α, 1 + (α − 1)π0/π1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_legacy_asymmetric(
    priors: HmPriors,
    alpha: f64,
    out: *mut HmBetaShape,
) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p = PriorPair::new(priors.pi0, priors.pi1).map_err(fail)?;
        *out = shape_out(BetaShape::legacy_asymmetric(&p, alpha).map_err(fail)?);
        Ok(())
    })
}

/// Mode of a shape with both parameters above 1.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_mode(shape: HmBetaShape, out: *mut f64) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = BetaShape::new(shape.alpha, shape.beta).map_err(fail)?;
        *out = s.mode().map_err(fail)?;
        Ok(())
    })
}

/// Density at `c`; `+inf` at a divergent endpoint.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_beta_density(shape: HmBetaShape, c: f64, out: *mut f64) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = BetaShape::new(shape.alpha, shape.beta).map_err(fail)?.density(c);
        Ok(())
    })
}

/// Regularized incomplete beta `I_x(a, b)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_incomplete_beta(x: f64, a: f64, b: f64, out: *mut f64) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = hmeasure::special::regularized_incomplete_beta(x, a, b).map_err(fail)?;
        Ok(())
    })
}
