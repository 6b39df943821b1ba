use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};

/// Treat |lambda| below this as the exact log branch of the power transform.
const LAMBDA_LOG_BRANCH: f64 = 1e-12;

/// The Box-Cox power-transform relationship:
/// log N = beta0 + beta1 * nu(S; lambda) with
/// nu(S; lambda) = (S^lambda - 1)/lambda (lambda != 0) or log S (lambda = 0).
/// For lambda < 0 there is a vertical asymptote at
/// B = beta0 - beta1/lambda: the curve's log-cycles never fall below B.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxCox {
    pub beta0: f64,
    pub beta1: f64,
    pub lambda: f64,
}

/// The Box-Cox power transform of stress.
pub fn power_transform(s: f64, lambda: f64) -> f64 {
    if lambda.abs() < LAMBDA_LOG_BRANCH {
        s.ln()
    } else {
        (s.powf(lambda) - 1.0) / lambda
    }
}

impl BoxCox {
    pub fn new(beta0: f64, beta1: f64, lambda: f64) -> Result<Self> {
        require(beta0.is_finite(), "beta0", beta0, "a finite value")?;
        require(beta1.is_finite() && beta1 < 0.0, "beta1", beta1, "beta1 < 0")?;
        require(
            lambda.is_finite() && lambda <= 0.0,
            "lambda",
            lambda,
            "lambda <= 0",
        )?;
        let rel = BoxCox { beta0, beta1, lambda };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }

    fn is_log_branch(&self) -> bool {
        self.lambda.abs() < LAMBDA_LOG_BRANCH
    }
}

impl SnRelationship for BoxCox {
    fn family(&self) -> &'static str {
        "box-cox"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("beta0", self.beta0),
            ("beta1", self.beta1),
            ("lambda", self.lambda),
        ]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        Ok(self.beta0 + self.beta1 * power_transform(stress, self.lambda))
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        if self.is_log_branch() {
            return Ok((ln - self.beta0) / self.beta1);
        }
        let w = 1.0 + (self.lambda / self.beta1) * (ln - self.beta0);
        if w <= 0.0 {
            let b = self.beta0 - self.beta1 / self.lambda;
            return Err(Error::domain(
                "cycles",
                cycles,
                format!("log(cycles) > vertical asymptote B = {b}"),
            ));
        }
        Ok(w.ln() / self.lambda)
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        if self.is_log_branch() {
            return Ok(1.0 / (self.beta1 * cycles));
        }
        let w = 1.0 + (self.lambda / self.beta1) * (ln - self.beta0);
        if w <= 0.0 {
            let b = self.beta0 - self.beta1 / self.lambda;
            return Err(Error::domain(
                "cycles",
                cycles,
                format!("log(cycles) > vertical asymptote B = {b}"),
            ));
        }
        Ok(1.0 / (self.beta1 * cycles * w))
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        Ok(self.beta1 * stress.powf(self.lambda - 1.0))
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo {
            vertical: (!self.is_log_branch()).then(|| self.beta0 - self.beta1 / self.lambda),
            horizontal: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn log_cycles_example() {
        // beta0=1, beta1=-2, lambda=-1 at S=2: nu = (1/2 - 1)/(-1) = 0.5,
        // so log N = 1 - 2*0.5 = 0.
        let rel = BoxCox::new(1.0, -2.0, -1.0).unwrap();
        assert_abs_diff_eq!(rel.log_cycles(2.0).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn vertical_asymptote_value() {
        // B = beta0 - beta1/lambda = 1 - (-2)/(-1) = -1
        let rel = BoxCox::new(1.0, -2.0, -1.0).unwrap();
        let a = rel.asymptotes();
        assert_abs_diff_eq!(a.vertical.unwrap(), -1.0, epsilon = 1e-14);
        assert_eq!(a.horizontal, None);
    }

    #[test]
    fn log_branch_matches_basquin() {
        let bc = BoxCox::new(10.0, -2.0, 0.0).unwrap();
        let bq = super::super::Basquin::new(10.0, -2.0).unwrap();
        for &s in &[0.5, 1.0, 7.3] {
            assert_abs_diff_eq!(
                bc.log_cycles(s).unwrap(),
                bq.log_cycles(s).unwrap(),
                epsilon = 1e-13
            );
        }
        assert_eq!(bc.asymptotes().vertical, None);
    }

    #[test]
    fn continuity_at_lambda_zero() {
        // nu(S; lambda) -> log S as lambda -> 0-, so tiny lambda must agree
        // with the log branch.
        let near = BoxCox::new(10.0, -2.0, -1e-9).unwrap();
        let exact = BoxCox::new(10.0, -2.0, 0.0).unwrap();
        for &s in &[0.3, 1.0, 5.0] {
            assert!(
                (near.log_cycles(s).unwrap() - exact.log_cycles(s).unwrap()).abs() < 1e-8,
                "discontinuous at lambda ~ 0 for S = {s}"
            );
        }
    }

    #[test]
    fn inverse_round_trip() {
        let rel = BoxCox::new(1.0, -2.0, -1.0).unwrap();
        for &s in &[0.2, 1.0, 2.0, 30.0] {
            let t = rel.cycles_at_stress(s).unwrap();
            assert_abs_diff_eq!(rel.log_stress(t).unwrap(), s.ln(), epsilon = 1e-10);
        }
    }

    #[test]
    fn below_threshold_is_domain_error() {
        let rel = BoxCox::new(1.0, -2.0, -1.0).unwrap();
        // B = -1, so cycles <= e^-1 are outside the curve.
        assert!(rel.log_stress(0.3).is_err());
    }

    #[test]
    fn rejects_positive_lambda() {
        assert!(BoxCox::new(1.0, -2.0, 0.5).is_err());
    }
}
