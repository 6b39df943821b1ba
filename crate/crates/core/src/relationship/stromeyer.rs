use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};

/// The Stromeyer fatigue-limit relationship:
/// log N = beta0 + beta1 log(S - gamma), valid for S > gamma.
/// For gamma > 0 the curve flattens toward the fatigue limit, a horizontal
/// asymptote at log(gamma); gamma = 0 recovers Basquin.
#[derive(Debug, Clone, PartialEq)]
pub struct Stromeyer {
    pub beta0: f64,
    pub beta1: f64,
    pub gamma: f64,
}

impl Stromeyer {
    pub fn new(beta0: f64, beta1: f64, gamma: f64) -> Result<Self> {
        require(beta0.is_finite(), "beta0", beta0, "a finite value")?;
        require(beta1.is_finite() && beta1 < 0.0, "beta1", beta1, "beta1 < 0")?;
        require(
            gamma.is_finite() && gamma >= 0.0,
            "gamma",
            gamma,
            "gamma >= 0 (stress units)",
        )?;
        let rel = Stromeyer { beta0, beta1, gamma };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }
}

impl SnRelationship for Stromeyer {
    fn family(&self) -> &'static str {
        "stromeyer"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("beta0", self.beta0),
            ("beta1", self.beta1),
            ("gamma", self.gamma),
        ]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        if stress <= self.gamma {
            return Err(Error::domain(
                "stress",
                stress,
                format!("stress > gamma = {}", self.gamma),
            ));
        }
        Ok(self.beta0 + self.beta1 * (stress - self.gamma).ln())
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let w = ((ln - self.beta0) / self.beta1).exp();
        Ok((self.gamma + w).ln())
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let w = ((ln - self.beta0) / self.beta1).exp();
        Ok(w / (self.gamma + w) / (self.beta1 * cycles))
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        if stress <= self.gamma {
            return Err(Error::domain(
                "stress",
                stress,
                format!("stress > gamma = {}", self.gamma),
            ));
        }
        Ok(self.beta1 / (stress - self.gamma))
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo {
            vertical: None,
            horizontal: (self.gamma > 0.0).then(|| self.gamma.ln()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn log_cycles_example() {
        // beta0=5, beta1=-1, gamma=2 at S = 2+e: 5 - 1*1 = 4
        let rel = Stromeyer::new(5.0, -1.0, 2.0).unwrap();
        assert_abs_diff_eq!(
            rel.log_cycles(2.0 + std::f64::consts::E).unwrap(),
            4.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn domain_error_below_gamma() {
        let rel = Stromeyer::new(5.0, -1.0, 2.0).unwrap();
        let err = rel.log_cycles(1.5).unwrap_err();
        assert!(err.to_string().contains("gamma"));
    }

    #[test]
    fn horizontal_asymptote_is_log_gamma() {
        let rel = Stromeyer::new(5.0, -1.0, 2.0).unwrap();
        assert_eq!(rel.asymptotes().horizontal, Some(2.0f64.ln()));
        assert_eq!(rel.asymptotes().vertical, None);
        let basquin_like = Stromeyer::new(5.0, -1.0, 0.0).unwrap();
        assert_eq!(basquin_like.asymptotes().horizontal, None);
    }

    #[test]
    fn invert_reports_below_asymptote() {
        let rel = Stromeyer::new(5.0, -1.0, 2.0).unwrap();
        match rel.cycles_at_stress(1.0) {
            Err(Error::BelowAsymptote { limit, .. }) => {
                assert_abs_diff_eq!(limit, 2.0, epsilon = 1e-12)
            }
            other => panic!("expected BelowAsymptote, got {other:?}"),
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let rel = Stromeyer::new(5.0, -1.0, 2.0).unwrap();
        for &t in &[0.5, 10.0, 1e4] {
            let h = t * 1e-6;
            let fd = (rel.log_stress(t + h).unwrap() - rel.log_stress(t - h).unwrap()) / (2.0 * h);
            let an = rel.dlog_stress_dcycles(t).unwrap();
            assert!((an - fd).abs() <= 1e-6 * fd.abs().max(1e-12), "t={t}: {an} vs {fd}");
            assert!(an < 0.0);
        }
    }
}
