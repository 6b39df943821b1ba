use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};
use crate::solve;

/// The four-parameter modified Bastenaire relationship:
/// N = g(S) = a exp(-[(S - e)/b]^c) / (S - e), valid for S > e.
/// `e` is the fatigue limit in stress units (a horizontal asymptote at
/// log(e) when e > 0). The original three-parameter Bastenaire curve is the
/// c = 1 case with its rate constant absorbed into b.
#[derive(Debug, Clone, PartialEq)]
pub struct ModifiedBastenaire {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub e: f64,
}

impl ModifiedBastenaire {
    pub fn new(a: f64, b: f64, c: f64, e: f64) -> Result<Self> {
        require(a.is_finite() && a > 0.0, "a", a, "a > 0")?;
        require(b.is_finite() && b > 0.0, "b", b, "b > 0")?;
        require(c.is_finite() && c > 0.0, "c", c, "c > 0")?;
        require(e.is_finite() && e >= 0.0, "e", e, "e >= 0 (stress units)")?;
        let rel = ModifiedBastenaire { a, b, c, e };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }

    /// The original 3-parameter Bastenaire form N = a exp(-rate (S-e))/(S-e).
    pub fn original(a: f64, rate: f64, e: f64) -> Result<Self> {
        require(rate.is_finite() && rate > 0.0, "rate", rate, "rate > 0")?;
        Self::new(a, 1.0 / rate, 1.0, e)
    }

    /// log g as a function of w = log(S - e).
    #[inline]
    fn log_cycles_at_excess(&self, w: f64) -> f64 {
        self.a.ln() - (w.exp() / self.b).powf(self.c) - w
    }
}

impl SnRelationship for ModifiedBastenaire {
    fn family(&self) -> &'static str {
        "bastenaire"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![("a", self.a), ("b", self.b), ("c", self.c), ("e", self.e)]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        if stress <= self.e {
            return Err(Error::domain(
                "stress",
                stress,
                format!("stress > fatigue limit e = {}", self.e),
            ));
        }
        Ok(self.log_cycles_at_excess((stress - self.e).ln()))
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        // Numeric inverse of the native g form: bisect on w = log(S - e),
        // where log g is strictly decreasing from +inf to -inf.
        let f = |w: f64| self.log_cycles_at_excess(w) - ln;
        let (lo, hi) = solve::expand_bracket(f, self.b.ln(), 1.0, 80)?;
        let w = solve::bisect(f, lo, hi, 1e-13)?;
        let s = self.e + w.exp();
        Ok(s.ln())
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        // Inverse-function rule through the curve point at this cycle count.
        let x = self.log_stress(cycles)?.exp();
        let d = self.dlog_cycles_dstress(x)?;
        Ok(1.0 / (cycles * x * d))
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        check_log_arg("stress", stress)?;
        if stress <= self.e {
            return Err(Error::domain(
                "stress",
                stress,
                format!("stress > fatigue limit e = {}", self.e),
            ));
        }
        let excess = stress - self.e;
        Ok(-(self.c / self.b) * (excess / self.b).powf(self.c - 1.0) - 1.0 / excess)
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        AsymptoteInfo {
            vertical: None,
            horizontal: (self.e > 0.0).then(|| self.e.ln()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn native_direction_value() {
        // At S = e + b the transform hits 1: log g = log a - 1 - log b.
        let rel = ModifiedBastenaire::new(50.0, 3.0, 2.0, 10.0).unwrap();
        assert_abs_diff_eq!(
            rel.log_cycles(13.0).unwrap(),
            50.0f64.ln() - 1.0 - 3.0f64.ln(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn numeric_inverse_round_trip() {
        let rel = ModifiedBastenaire::new(50.0, 3.0, 2.0, 10.0).unwrap();
        for &s in &[10.001, 10.5, 12.0, 20.0, 80.0] {
            let n = rel.cycles_at_stress(s).unwrap();
            assert_abs_diff_eq!(rel.log_stress(n).unwrap(), s.ln(), epsilon = 1e-9);
        }
    }

    #[test]
    fn original_form_is_c_one() {
        let orig = ModifiedBastenaire::original(50.0, 0.25, 10.0).unwrap();
        assert_eq!(orig.c, 1.0);
        assert_abs_diff_eq!(orig.b, 4.0, epsilon = 1e-15);
        // N = a exp(-rate (S - e))/(S - e) at S - e = 4: 50 e^-1 / 4
        assert_abs_diff_eq!(
            orig.log_cycles(14.0).unwrap(),
            (50.0f64 / 4.0).ln() - 1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn derivative_finite_difference() {
        let rel = ModifiedBastenaire::new(50.0, 3.0, 2.0, 10.0).unwrap();
        for &s in &[10.4, 12.0, 25.0] {
            let h = (s - 10.0) * 1e-6;
            let fd = (rel.log_cycles(s + h).unwrap() - rel.log_cycles(s - h).unwrap()) / (2.0 * h);
            let an = rel.dlog_cycles_dstress(s).unwrap();
            assert!((an / fd - 1.0).abs() < 1e-6, "s={s}: {an} vs {fd}");
        }
        for &t in &[1.0, 1e3] {
            let h = t * 1e-5;
            let fd = (rel.log_stress(t + h).unwrap() - rel.log_stress(t - h).unwrap()) / (2.0 * h);
            let an = rel.dlog_stress_dcycles(t).unwrap();
            assert!((an / fd - 1.0).abs() < 1e-5, "t={t}: {an} vs {fd}");
        }
    }

    #[test]
    fn fatigue_limit_asymptote() {
        let rel = ModifiedBastenaire::new(50.0, 3.0, 2.0, 10.0).unwrap();
        assert_eq!(rel.asymptotes().horizontal, Some(10.0f64.ln()));
        let free = ModifiedBastenaire::new(50.0, 3.0, 2.0, 0.0).unwrap();
        assert_eq!(free.asymptotes().horizontal, None);
    }
}
