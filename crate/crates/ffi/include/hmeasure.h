#ifndef HMEASURE_H
#define HMEASURE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Values 2-4 match the command-line exit codes.
typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_NULL_POINTER = 1,
  HM_STATUS_CONFIG = 2,
  HM_STATUS_IO = 3,
  HM_STATUS_DATA = 4,
  HM_STATUS_PANIC = 5,
} HmStatus;

// Opaque labeled score dataset.
typedef struct HmDataset HmDataset;

typedef struct HmPriors {
  double pi0;
  double pi1;
} HmPriors;

typedef struct HmBetaShape {
  double alpha;
  double beta;
} HmBetaShape;

// Scalar results of one evaluation.
typedef struct HmMetrics {
  double h;
  double auc;
  double gini;
  double auch;
  double ks;
  double mer;
  double pi0;
  double pi1;
  double alpha;
  double beta;
  double expected_min_loss;
  double baseline_loss;
  uint64_t n0;
  uint64_t n1;
} HmMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Valid until the
// next failing call on the same thread.
const char *hm_last_error_message(void);

// Builds a dataset from per-class score arrays (copied).
//
// # Safety
// `scores0`/`scores1` must point to `n0`/`n1` readable doubles; `out` must be writable.
enum HmStatus hm_dataset_new(const double *scores0,
                             size_t n0,
                             const double *scores1,
                             size_t n1,
                             struct HmDataset **out);

// Reads a dataset from a CSV file with a header row.
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum HmStatus hm_dataset_from_csv(const char *path,
                                  const char *label_column,
                                  const char *score_column,
                                  struct HmDataset **out);

// # Safety
// `ds` must come from this library and not be freed twice. Null is ignored.
void hm_dataset_free(struct HmDataset *ds);

// # Safety
// `ds` must be a live handle; `n0`/`n1` writable.
enum HmStatus hm_dataset_counts(const struct HmDataset *ds, uint64_t *n0, uint64_t *n1);

// Computes all scalar metrics. `priors` may be null for the sample
// proportions; `weight` may be null for the default `Beta(π1 + 1, π0 + 1)`.
//
// # Safety
// `ds` must be a live handle; non-null pointers must be valid.
enum HmStatus hm_evaluate(const struct HmDataset *ds,
                          const struct HmPriors *priors,
                          const struct HmBetaShape *weight,
                          struct HmMetrics *out);

// Same evaluation as [`hm_evaluate`], rendered as the JSON report. Release
// the string with [`hm_string_free`].
//
// # Safety
// As for [`hm_evaluate`]; `out` must be writable.
enum HmStatus hm_report_json(const struct HmDataset *ds,
                             const struct HmPriors *priors,
                             const struct HmBetaShape *weight,
                             char **out);

// # Safety
// `s` must come from this library. Null is ignored.
void hm_string_free(char *s);

// `Beta(π1 + 1, π0 + 1)`.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_default(struct HmPriors priors, struct HmBetaShape *out);

// Shape with mode `c_tilde` and `α + β = k` (`k ≥ 3`).
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_from_mode(double c_tilde, double k, struct HmBetaShape *out);

// Shape with mode `r/(1 + r)` and `α + β = k`.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_from_severity_ratio(double r_tilde, double k, struct HmBetaShape *out);

// `Beta(α, 1 + (α − 1)π0/π1)`.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_legacy_asymmetric(struct HmPriors priors,
                                        double alpha,
                                        struct HmBetaShape *out);

// Mode of a shape with both parameters above 1.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_mode(struct HmBetaShape shape, double *out);

// Density at `c`; `+inf` at a divergent endpoint.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_beta_density(struct HmBetaShape shape, double c, double *out);

// Regularized incomplete beta `I_x(a, b)`.
//
// # Safety
// `out` must be writable.
enum HmStatus hm_incomplete_beta(double x, double a, double b, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HMEASURE_H */
