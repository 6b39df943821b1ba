use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::Result;

/// The inverse-power (Basquin) relationship: log N = beta0 + beta1 log S,
/// a straight line on log-log axes with no coordinate asymptotes.
#[derive(Debug, Clone, PartialEq)]
pub struct Basquin {
    pub beta0: f64,
    pub beta1: f64,
}

impl Basquin {
    pub fn new(beta0: f64, beta1: f64) -> Result<Self> {
        require(beta0.is_finite(), "beta0", beta0, "a finite value")?;
        require(beta1.is_finite() && beta1 < 0.0, "beta1", beta1, "beta1 < 0")?;
        let rel = Basquin { beta0, beta1 };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }
}

impl SnRelationship for Basquin {
    fn family(&self) -> &'static str {
        "basquin"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![("beta0", self.beta0), ("beta1", self.beta1)]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        let ls = check_log_arg("stress", stress)?;
        Ok(self.beta0 + self.beta1 * ls)
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        Ok((ln - self.beta0) / self.beta1)
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        check_log_arg("cycles", cycles)?;
        Ok(1.0 / (self.beta1 * cycles))
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        Ok(self.beta1 / stress)
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo::default()
    }
}
