//! Cost-weight distributions `w(c)` over the normalized misclassification
//! cost `c ∈ [0, 1]`, all from the Beta family.

use crate::error::{Error, Result};
use crate::score_data::PriorPair;
use crate::special::{ln_beta, regularized_incomplete_beta};

/// Smallest admissible concentration `k = α + β` for the mode/width family.
pub const MIN_K: f64 = 3.0;

/// A `Beta(α, β)` weight distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaShape {
    alpha: f64,
    beta: f64,
}

impl BetaShape {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if alpha > 0.0 && beta > 0.0 && alpha.is_finite() && beta.is_finite() {
            Ok(BetaShape { alpha, beta })
        } else {
            Err(Error::InvalidParameter(format!(
                "Beta shapes must be positive and finite, got ({alpha}, {beta})"
            )))
        }
    }

    /// Uniform weights, `Beta(1, 1)`.
    pub fn uniform() -> Self {
        BetaShape { alpha: 1.0, beta: 1.0 }
    }

    /// The earlier symmetric standard, `Beta(2, 2)`.
    pub fn beta22() -> Self {
        BetaShape { alpha: 2.0, beta: 2.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Concentration `α + β`.
    pub fn k(&self) -> f64 {
        self.alpha + self.beta
    }

    pub fn mean(&self) -> f64 {
        self.alpha / (self.alpha + self.beta)
    }

    /// Density at `c ∈ [0, 1]`. Endpoints where the density diverges return
    /// `f64::INFINITY`; outside the support the density is zero.
    pub fn density(&self, c: f64) -> f64 {
        if !(0.0..=1.0).contains(&c) {
            return 0.0;
        }
        let ln_b = ln_beta(self.alpha, self.beta).expect("shape validated on construction");
        // At an endpoint only the factor with exponent `e` matters; the other is 1.
        let edge = |e: f64| match e.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => 0.0,
            Some(std::cmp::Ordering::Less) => f64::INFINITY,
            _ => (-ln_b).exp(),
        };
        if c == 0.0 {
            return edge(self.alpha - 1.0);
        }
        if c == 1.0 {
            return edge(self.beta - 1.0);
        }
        ((self.alpha - 1.0) * c.ln() + (self.beta - 1.0) * (-c).ln_1p() - ln_b).exp()
    }

    /// CDF `I_x(α, β)`.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        regularized_incomplete_beta(x, self.alpha, self.beta)
    }

    /// `∫_a^b c·w(c) dc`.
    pub fn partial_moment_c(&self, a: f64, b: f64) -> Result<f64> {
        check_interval(a, b)?;
        if a == b {
            return Ok(0.0);
        }
        let (al, be) = (self.alpha + 1.0, self.beta);
        let mass = regularized_incomplete_beta(b, al, be)? - regularized_incomplete_beta(a, al, be)?;
        Ok((self.mean() * mass).max(0.0))
    }

    /// `∫_a^b (1 − c)·w(c) dc`.
    pub fn partial_moment_1mc(&self, a: f64, b: f64) -> Result<f64> {
        check_interval(a, b)?;
        if a == b {
            return Ok(0.0);
        }
        let (al, be) = (self.alpha, self.beta + 1.0);
        let mass = regularized_incomplete_beta(b, al, be)? - regularized_incomplete_beta(a, al, be)?;
        Ok((self.beta / (self.alpha + self.beta) * mass).max(0.0))
    }

    /// `(α − 1)/(α + β − 2)`. Refuses shapes whose density peaks on the boundary.
    pub fn mode(&self) -> Result<f64> {
        if self.alpha > 1.0 && self.beta > 1.0 {
            Ok((self.alpha - 1.0) / (self.alpha + self.beta - 2.0))
        } else {
            Err(Error::ModeUndefined {
                alpha: self.alpha,
                beta: self.beta,
            })
        }
    }

    /// Distribution of `1 − c`, i.e. `Beta(β, α)`.
    pub fn reflect(&self) -> Self {
        BetaShape {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// Shape with mode `c_tilde` and concentration `α + β = k`:
    /// `α = (k − 2)c̃ + 1`, `β = (k − 2)(1 − c̃) + 1`.
    pub fn from_mode(c_tilde: f64, k: f64) -> Result<Self> {
        if !(c_tilde > 0.0 && c_tilde < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "mode must lie strictly inside (0, 1), got {c_tilde}"
            )));
        }
        check_k(k)?;
        let spread = k - 2.0;
        BetaShape::new(spread * c_tilde + 1.0, spread * (1.0 - c_tilde) + 1.0)
    }

    /// Mode placed at `r/(1 + r)` for an elicited severity ratio `r = c/(1 − c)`.
    pub fn from_severity_ratio(r_tilde: f64, k: f64) -> Result<Self> {
        if !(r_tilde > 0.0 && r_tilde.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "severity ratio must be positive and finite, got {r_tilde}"
            )));
        }
        Self::from_mode(r_tilde / (1.0 + r_tilde), k)
    }

    /// `Beta(π1 + 1, π0 + 1)`: mode at `π1`, `k = 3`.
    pub fn default_from_priors(p: &PriorPair) -> Self {
        BetaShape {
            alpha: p.pi1() + 1.0,
            beta: p.pi0() + 1.0,
        }
    }

    /// `Beta(α, 1 + (α − 1)π0/π1)`, mode at `π1`. With `α = 2` this is
    /// `Beta(2, 1/π1)`. Not symmetric under a label swap.
    pub fn legacy_asymmetric(p: &PriorPair, alpha: f64) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "legacy asymmetric family needs alpha > 1, got {alpha}"
            )));
        }
        BetaShape::new(alpha, 1.0 + (alpha - 1.0) * p.pi0() / p.pi1())
    }
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if (0.0..=1.0).contains(&a) && (0.0..=1.0).contains(&b) && a <= b {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "cost interval [{a}, {b}] is not an ordered subinterval of [0, 1]"
        )))
    }
}

fn check_k(k: f64) -> Result<()> {
    if k >= MIN_K && k.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("k must be at least {MIN_K}, got {k}")))
    }
}

/// How the weight distribution is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightSpec {
    Explicit { alpha: f64, beta: f64 },
    ModeK { c_tilde: f64, k: f64 },
    SeverityRatioK { r_tilde: f64, k: f64 },
    /// `Beta(π1 + 1, π0 + 1)` from the priors in use.
    DefaultPriors,
    LegacyBeta22,
    LegacyAsymmetric { alpha: f64 },
}

impl Default for WeightSpec {
    fn default() -> Self {
        WeightSpec::DefaultPriors
    }
}

impl WeightSpec {
    pub fn resolve(&self, priors: &PriorPair) -> Result<BetaShape> {
        match *self {
            WeightSpec::Explicit { alpha, beta } => BetaShape::new(alpha, beta),
            WeightSpec::ModeK { c_tilde, k } => BetaShape::from_mode(c_tilde, k),
            WeightSpec::SeverityRatioK { r_tilde, k } => BetaShape::from_severity_ratio(r_tilde, k),
            WeightSpec::DefaultPriors => Ok(BetaShape::default_from_priors(priors)),
            WeightSpec::LegacyBeta22 => Ok(BetaShape::beta22()),
            WeightSpec::LegacyAsymmetric { alpha } => BetaShape::legacy_asymmetric(priors, alpha),
        }
    }
}
