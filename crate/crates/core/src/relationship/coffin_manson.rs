use super::{check_log_arg, check_strictly_decreasing, require, AsymptoteInfo, SnRelationship};
use crate::error::{Error, Result};
use crate::solve;

/// The Coffin-Manson (generalized strain-life) relationship:
/// S = h(N) = a_el (2N)^b + a_pl (2N)^c, the sum of separate inverse-power
/// laws for the elastic and plastic regimes. The plastic exponent is the
/// steeper one (|c| > |b|).
#[derive(Debug, Clone, PartialEq)]
pub struct CoffinManson {
    pub a_el: f64,
    pub a_pl: f64,
    pub b: f64,
    pub c: f64,
}

impl CoffinManson {
    pub fn new(a_el: f64, a_pl: f64, b: f64, c: f64) -> Result<Self> {
        require(a_el.is_finite() && a_el > 0.0, "a_el", a_el, "a_el > 0")?;
        require(a_pl.is_finite() && a_pl >= 0.0, "a_pl", a_pl, "a_pl >= 0")?;
        require(b.is_finite() && b <= 0.0, "b", b, "b <= 0")?;
        require(c.is_finite() && c < 0.0, "c", c, "c < 0")?;
        require(c.abs() > b.abs(), "c", c, "|c| > |b|")?;
        if b == 0.0 && a_pl == 0.0 {
            return Err(Error::InvalidParameter {
                name: "b",
                value: b,
                requirement: "b < 0 when a_pl = 0 (curve must decrease)".to_string(),
            });
        }
        let rel = CoffinManson { a_el, a_pl, b, c };
        check_strictly_decreasing(&rel)?;
        Ok(rel)
    }

    /// Log of each power-law term at u = log(2N); the plastic term is None
    /// when a_pl = 0.
    fn term_logs(&self, u: f64) -> (f64, Option<f64>) {
        let elastic = self.a_el.ln() + self.b * u;
        let plastic = (self.a_pl > 0.0).then(|| self.a_pl.ln() + self.c * u);
        (elastic, plastic)
    }
}

impl SnRelationship for CoffinManson {
    fn family(&self) -> &'static str {
        "coffin-manson"
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("a_el", self.a_el),
            ("a_pl", self.a_pl),
            ("b", self.b),
            ("c", self.c),
        ]
    }

    fn log_cycles(&self, stress: f64) -> Result<f64> {
        let ls = check_log_arg("stress", stress)?;
        let (lo, _) = self.log_stress_range();
        if ls <= lo {
            return Err(Error::domain(
                "stress",
                stress,
                format!("stress > a_el = {} (b = 0 floor)", self.a_el),
            ));
        }
        // Closed forms when one term vanishes, otherwise bracketed bisection
        // on u = log(2N): the two single-term inverses bound the sum.
        let u = if self.a_pl == 0.0 {
            (ls - self.a_el.ln()) / self.b
        } else if self.b == 0.0 {
            ((stress - self.a_el).ln() - self.a_pl.ln()) / self.c
        } else {
            let u_el = (ls - self.a_el.ln()) / self.b;
            let u_pl = (ls - self.a_pl.ln()) / self.c;
            let half = std::f64::consts::LN_2;
            let lo = u_el.max(u_pl);
            let hi = ((ls - half - self.a_el.ln()) / self.b)
                .max((ls - half - self.a_pl.ln()) / self.c);
            let f = |u: f64| {
                let (e, p) = self.term_logs(u);
                log_sum_exp(e, p.unwrap()) - ls
            };
            solve::bisect(f, lo, hi, 1e-12)?
        };
        Ok(u - std::f64::consts::LN_2)
    }

    fn log_stress(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let u = ln + std::f64::consts::LN_2;
        let (e, p) = self.term_logs(u);
        Ok(match p {
            Some(p) => log_sum_exp(e, p),
            None => e,
        })
    }

    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64> {
        let ln = check_log_arg("cycles", cycles)?;
        let u = ln + std::f64::consts::LN_2;
        let (e, p) = self.term_logs(u);
        Ok(match p {
            Some(p) => {
                // Exponent-weighted mix of the two slopes.
                let w = 1.0 / (1.0 + (p - e).exp()); // elastic weight
                (self.b * w + self.c * (1.0 - w)) / cycles
            }
            None => self.b / cycles,
        })
    }

    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64> {
        // Inverse-function rule through the curve point at this stress.
        let t = self.log_cycles(stress)?.exp();
        let d = self.dlog_stress_dcycles(t)?;
        Ok(1.0 / (stress * t * d))
    }

    fn asymptotes(&self) -> AsymptoteInfo {
        // b = 0 leaves the constant elastic term as a stress floor.
        AsymptoteInfo {
            vertical: None,
            horizontal: (self.b == 0.0).then(|| self.a_el.ln()),
        }
    }
}

#[inline]
fn log_sum_exp(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}
