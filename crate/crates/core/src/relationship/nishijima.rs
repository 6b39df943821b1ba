use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};

/// The Nishijima hyperbola: [log S - e][log S + a log N - b] = c.
/// `a` and `b` are the negative slope and log N = 0 intercept of the
/// steep (plastic-zone) oblique asymptote, `e` is the horizontal asymptote
/// in log stress, and sqrt(c) is the vertical gap between the curve and the
/// asymptote intersection.
#[derive(Debug, Clone, PartialEq)]
pub struct Nishijima {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub e: f64,
}

impl Nishijima {
    pub fn new(a: f64, b: f64, c: f64, e: f64) -> Result<Self> {
        require(a.is_finite() && a > 0.0, "a", a, "a > 0")?;
        require(b.is_finite(), "b", b, "a finite value")?;
        require(c.is_finite() && c > 0.0, "c", c, "c > 0")?;
        require(e.is_finite(), "e", e, "a finite value")?;
        let rel = Nishijima { a, b, c, e };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }

    /// Signed distance u = a log N - (b - e) along the oblique asymptote.
    #[inline]
    fn oblique(&self, log_n: f64) -> f64 {
        self.a * log_n - (self.b - self.e)
    }
}

impl SnRelationship for Nishijima {
    fn family(&self) -> &'static str {
        "nishijima"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![("a", self.a), ("b", self.b), ("c", self.c), ("e", self.e)]
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
        Ok((self.c / (ls - self.e) - ls + self.b) / self.a)
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let u = self.oblique(ln);
        // log h = e + (sqrt(u^2 + 4c) - u)/2, written to avoid cancellation
        // for large positive u (the long-life plateau).
        let root = (u * u + 4.0 * self.c).sqrt();
        let half_gap = if u >= 0.0 {
            2.0 * self.c / (root + u)
        } else {
            0.5 * (root - u)
        };
        Ok(self.e + half_gap)
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let u = self.oblique(ln);
        let root = (u * u + 4.0 * self.c).sqrt();
        // -1 + u/root = -(root - u)/root, kept positive-difference stable.
        let diff = if u >= 0.0 {
            4.0 * self.c / (root + u)
        } else {
            root - u
        };
        Ok(-(self.a / (2.0 * cycles)) * diff / root)
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
        let y = ls - self.e;
        Ok(-(self.c / (y * y) + 1.0) / (self.a * stress))
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo {
            vertical: None,
            horizontal: Some(self.e),
        }
    }
}
