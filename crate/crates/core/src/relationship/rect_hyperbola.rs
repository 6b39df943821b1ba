use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};

/// The rectangular hyperbola: [log N - b][log S - e] = c, with a vertical
/// asymptote at log N = b and a horizontal asymptote at log S = e. The
/// limiting case of the Nishijima curve as the plastic-zone slope steepens.
#[derive(Debug, Clone, PartialEq)]
pub struct RectHyperbola {
    pub b: f64,
    pub c: f64,
    pub e: f64,
}

impl RectHyperbola {
    pub fn new(b: f64, c: f64, e: f64) -> Result<Self> {
        require(b.is_finite(), "b", b, "a finite value")?;
        require(c.is_finite() && c > 0.0, "c", c, "c > 0")?;
        require(e.is_finite(), "e", e, "a finite value")?;
        let rel = RectHyperbola { b, c, e };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }
}

impl SnRelationship for RectHyperbola {
    fn family(&self) -> &'static str {
        "rect-hyperbola"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![("b", self.b), ("c", self.c), ("e", self.e)]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        let ls = check_log_arg("stress", stress)?;
        if ls <= self.e {
            return Err(Error::domain(
                "stress",
                stress,
                format!("log(stress) > horizontal asymptote e = {}", self.e),
            ));
        }
        Ok(self.b + self.c / (ls - self.e))
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        if ln <= self.b {
            return Err(Error::domain(
                "cycles",
                cycles,
                format!("log(cycles) > vertical asymptote b = {}", self.b),
            ));
        }
        Ok(self.e + self.c / (ln - self.b))
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        if ln <= self.b {
            return Err(Error::domain(
                "cycles",
                cycles,
                format!("log(cycles) > vertical asymptote b = {}", self.b),
            ));
        }
        let d = ln - self.b;
        Ok(-self.c / (cycles * d * d))
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        let ls = check_log_arg("stress", stress)?;
        if ls <= self.e {
            return Err(Error::domain(
                "stress",
                stress,
                format!("log(stress) > horizontal asymptote e = {}", self.e),
            ));
        }
        let d = ls - self.e;
        Ok(-self.c / (stress * d * d))
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo {
            vertical: Some(self.b),
            horizontal: Some(self.e),
        }
    }
}
