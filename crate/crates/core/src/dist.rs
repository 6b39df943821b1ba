//! Standardized location-scale kernels: cdf, pdf, and quantile for the
//! standard normal and the standard smallest extreme value (SEV)
//! distributions. Exponentiating a location-scale variable with these
//! kernels gives the lognormal and Weibull distributions respectively.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;
pub const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// The standardized kernel used by every model in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardDistribution {
    /// Standard normal; exp(location-scale) is lognormal.
    Normal,
    /// Standard smallest extreme value, cdf 1 - exp(-exp(z));
    /// exp(location-scale) is Weibull.
    Sev,
}

impl StandardDistribution {
    pub fn name(self) -> &'static str {
        match self {
            StandardDistribution::Normal => "normal",
            StandardDistribution::Sev => "sev",
        }
    }

    /// Name of the corresponding log-location-scale distribution.
    pub fn log_family_name(self) -> &'static str {
        match self {
            StandardDistribution::Normal => "lognormal",
            StandardDistribution::Sev => "weibull",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "normal" | "lognormal" | "gaussian" => Ok(StandardDistribution::Normal),
            "sev" | "weibull" | "gumbel-min" => Ok(StandardDistribution::Sev),
            other => Err(Error::Usage(format!(
                "unknown distribution '{other}'; expected lognormal or weibull"
            ))),
        }
    }

    /// Cdf of the standardized kernel.
    #[inline]
    pub fn cdf(self, z: f64) -> Result<f64> {
        if !z.is_finite() {
            return Err(Error::domain("z", z, "a finite value".to_string()));
        }
        Ok(self.cdf_raw(z))
    }

    /// Pdf of the standardized kernel.
    #[inline]
    pub fn pdf(self, z: f64) -> Result<f64> {
        if !z.is_finite() {
            return Err(Error::domain("z", z, "a finite value".to_string()));
        }
        Ok(self.pdf_raw(z))
    }

    /// Quantile of the standardized kernel; p must lie strictly in (0, 1).
    #[inline]
    pub fn quantile(self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Probability { p });
        }
        Ok(match self {
            StandardDistribution::Normal => normal_quantile(p),
            StandardDistribution::Sev => sev_quantile(p),
        })
    }

    /// The standardized median, quantile(0.5): 0 for normal, log(log 2) for SEV.
    #[inline]
    pub fn median_z(self) -> f64 {
        match self {
            StandardDistribution::Normal => 0.0,
            StandardDistribution::Sev => std::f64::consts::LN_2.ln(),
        }
    }

    #[inline]
    pub(crate) fn cdf_raw(self, z: f64) -> f64 {
        match self {
            StandardDistribution::Normal => normal_cdf(z),
            StandardDistribution::Sev => sev_cdf(z),
        }
    }

    #[inline]
    pub(crate) fn pdf_raw(self, z: f64) -> f64 {
        match self {
            StandardDistribution::Normal => normal_pdf(z),
            StandardDistribution::Sev => sev_pdf(z),
        }
    }

    /// Draw one standardized variate by inverse transform; deterministic
    /// given the generator state.
    pub fn sample<R: rand::Rng + ?Sized>(self, rng: &mut R) -> f64 {
        let mut u: f64 = rng.gen();
        while u <= 0.0 {
            u = rng.gen();
        }
        match self {
            StandardDistribution::Normal => normal_quantile(u),
            StandardDistribution::Sev => sev_quantile(u),
        }
    }
}

/// Standard normal pdf.
#[inline]
pub fn normal_pdf(z: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * z * z).exp()
}

/// Standard normal cdf via the complementary error function.
#[inline]
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / SQRT_2)
}

/// Complementary error function, Cody's rational Chebyshev approximation
/// (netlib CALERF). Relative error below ~1e-15 over the whole range, which
/// keeps lower-tail normal probabilities (p ~ 1e-3 and far smaller) accurate.
pub fn erfc(x: f64) -> f64 {
    const A: [f64; 5] = [
        3.161_123_743_870_565_6e0,
        1.138_641_541_510_501_6e2,
        3.774_852_376_853_020_2e2,
        3.209_377_589_138_469_5e3,
        1.857_777_061_846_031_5e-1,
    ];
    const B: [f64; 4] = [
        2.360_129_095_234_412_1e1,
        2.440_246_379_344_441_7e2,
        1.282_616_526_077_372_3e3,
        2.844_236_833_439_170_6e3,
    ];
    const C: [f64; 9] = [
        5.641_884_969_886_700_9e-1,
        8.883_149_794_388_375_9e0,
        6.611_919_063_714_162_9e1,
        2.986_351_381_974_001_3e2,
        8.819_522_212_417_690_9e2,
        1.712_047_612_634_070_6e3,
        2.051_078_377_826_071_5e3,
        1.230_339_354_797_997_2e3,
        2.153_115_354_744_038_5e-8,
    ];
    const D: [f64; 8] = [
        1.574_492_611_070_983_5e1,
        1.176_939_508_913_125e2,
        5.371_811_018_620_098_6e2,
        1.621_389_574_566_690_2e3,
        3.290_799_235_733_459_6e3,
        4.362_619_090_143_247e3,
        3.439_367_674_143_721_6e3,
        1.230_339_354_803_749_4e3,
    ];
    const P: [f64; 6] = [
        3.053_266_349_612_323_4e-1,
        3.603_448_999_498_044_4e-1,
        1.257_817_261_112_292_5e-1,
        1.608_378_514_874_227_7e-2,
        6.587_491_615_298_378e-4,
        1.631_538_713_730_209_8e-2,
    ];
    const Q: [f64; 5] = [
        2.568_520_192_289_822_4e0,
        1.872_952_849_923_460_5e0,
        5.279_051_029_514_284e-1,
        6.051_834_131_244_132e-2,
        2.335_204_976_268_691_8e-3,
    ];
    const INV_SQRT_PI: f64 = 5.641_895_835_477_562_9e-1;

    let y = x.abs();
    let result = if y <= 0.46875 {
        // erfc = 1 - erf on the central interval
        let z = if y > 1e-300 { y * y } else { 0.0 };
        let mut num = A[4] * z;
        let mut den = z;
        for i in 0..3 {
            num = (num + A[i]) * z;
            den = (den + B[i]) * z;
        }
        return 1.0 - x * (num + A[3]) / (den + B[3]);
    } else if y <= 4.0 {
        let mut num = C[8] * y;
        let mut den = y;
        for i in 0..7 {
            num = (num + C[i]) * y;
            den = (den + D[i]) * y;
        }
        let r = (num + C[7]) / (den + D[7]);
        scaled_down(y, r)
    } else if y < 26.6 {
        let ysq = 1.0 / (y * y);
        let mut num = P[5] * ysq;
        let mut den = ysq;
        for i in 0..3 {
            num = (num + P[i]) * ysq;
            den = (den + Q[i]) * ysq;
        }
        let mut r = ysq * (num + P[4]) / (den + Q[4]);
        r = (INV_SQRT_PI - r) / y;
        scaled_down(y, r)
    } else {
        0.0
    };
    if x < 0.0 {
        2.0 - result
    } else {
        result
    }
}

/// Multiply r by exp(-y^2), splitting y^2 to avoid rounding in the exponent.
#[inline]
fn scaled_down(y: f64, r: f64) -> f64 {
    let ysq = (y * 16.0).trunc() / 16.0;
    let del = (y - ysq) * (y + ysq);
    (-ysq * ysq).exp() * (-del).exp() * r
}

/// Standard normal quantile: Acklam's rational approximation polished with
/// one Halley step against the erfc-based cdf.
pub fn normal_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };

    // One Halley refinement recovers close to full double precision.
    let e = normal_cdf(x) - p;
    let u = e / normal_pdf(x);
    x - u / (1.0 + 0.5 * x * u)
}

/// SEV cdf 1 - exp(-exp(z)), evaluated through expm1 so the lower tail
/// (where the value is ~exp(z)) does not cancel.
#[inline]
pub fn sev_cdf(z: f64) -> f64 {
    if z > 709.0 {
        return 1.0;
    }
    -(-z.exp()).exp_m1()
}

/// SEV pdf exp(z - exp(z)).
#[inline]
pub fn sev_pdf(z: f64) -> f64 {
    if z > 709.0 {
        return 0.0;
    }
    (z - z.exp()).exp()
}

/// SEV quantile log(-log(1 - p)) via log1p for small p.
#[inline]
pub fn sev_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    (-(-p).ln_1p()).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn normal_cdf_at_zero() {
        assert_abs_diff_eq!(normal_cdf(0.0), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn sev_cdf_at_zero() {
        // 1 - exp(-exp(0)) = 1 - 1/e
        assert_abs_diff_eq!(sev_cdf(0.0), 1.0 - (-1.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(sev_cdf(0.0), 0.632_120_558_828_557_7, epsilon = 1e-15);
    }

    #[test]
    fn normal_cdf_at_975_point() {
        // High-precision oracle for the two-sided 95% point: the value below
        // was cross-checked against an independent 50-digit erf evaluation.
        let z = 1.959_963_984_540_054;
        assert_abs_diff_eq!(normal_cdf(z), 0.975, epsilon = 1e-12);
        // The spec-level rounded argument stays within coarse tolerance.
        assert_abs_diff_eq!(normal_cdf(1.959_964), 0.975, epsilon = 1e-6);
    }

    #[test]
    fn normal_pdf_values() {
        assert_abs_diff_eq!(normal_pdf(0.0), INV_SQRT_2PI, epsilon = 1e-16);
        // Central finite difference of the cdf at z = 2.
        let h = 1e-5;
        let fd = (normal_cdf(2.0 + h) - normal_cdf(2.0 - h)) / (2.0 * h);
        assert_abs_diff_eq!(normal_pdf(2.0), fd, epsilon = 1e-6);
    }

    #[test]
    fn sev_pdf_at_zero() {
        assert_abs_diff_eq!(sev_pdf(0.0), (-1.0f64).exp(), epsilon = 1e-16);
    }

    #[test]
    fn quantile_basics() {
        let n = StandardDistribution::Normal;
        let s = StandardDistribution::Sev;
        assert_abs_diff_eq!(n.quantile(0.5).unwrap(), 0.0, epsilon = 1e-14);
        // SEV: quantile of 1 - 1/e is 0.
        assert_abs_diff_eq!(
            s.quantile(1.0 - (-1.0f64).exp()).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        // SEV median solves 1-exp(-exp(z)) = 1/2 => z = log log 2.
        assert_abs_diff_eq!(
            s.quantile(0.5).unwrap(),
            std::f64::consts::LN_2.ln(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(s.quantile(0.5).unwrap(), -0.366_512_920_581_664_3, epsilon = 1e-12);
    }

    #[test]
    fn erfc_extreme_tails() {
        // Reference values computed with mpmath at 50 digits.
        assert!((erfc(5.0) / 1.537_459_794_428_035e-12 - 1.0).abs() < 1e-13);
        assert!((erfc(10.0) / 2.088_487_583_762_545e-45 - 1.0).abs() < 1e-13);
        assert!((erfc(-3.0) - (2.0 - 2.209_049_699_858_544e-5)).abs() < 1e-15);
    }

    #[test]
    fn round_trip_cdf_quantile() {
        for dist in [StandardDistribution::Normal, StandardDistribution::Sev] {
            let mut p = 1e-6;
            while p < 1.0 - 1e-6 {
                let z = dist.quantile(p).unwrap();
                let back = dist.cdf(z).unwrap();
                assert!(
                    (back - p).abs() < 1e-12,
                    "{dist:?} p={p} back={back}"
                );
                p += 7.3e-4;
            }
        }
    }

    #[test]
    fn quantile_post_condition_tight() {
        // Phi(quantile(p)) = p to within 1e-12, including the deep tails.
        for dist in [StandardDistribution::Normal, StandardDistribution::Sev] {
            for &p in &[1e-10, 1e-6, 1e-3, 0.025, 0.2, 0.8, 0.999, 1.0 - 1e-9] {
                let z = dist.quantile(p).unwrap();
                assert!((dist.cdf(z).unwrap() - p).abs() <= 1e-12 * (1.0 + p));
            }
        }
    }

    #[test]
    fn monotone_on_grid() {
        for dist in [StandardDistribution::Normal, StandardDistribution::Sev] {
            let mut prev = dist.cdf(-9.0).unwrap();
            let mut z = -9.0 + 0.01;
            while z <= 4.0 {
                let cur = dist.cdf(z).unwrap();
                assert!(cur > prev, "{dist:?} not strictly increasing at {z}");
                prev = cur;
                z += 0.01;
            }
        }
    }

    #[test]
    fn derivative_consistency() {
        let h = 1e-5;
        for dist in [StandardDistribution::Normal, StandardDistribution::Sev] {
            let mut z = -6.0;
            while z <= 3.0 {
                let fd = (dist.cdf(z + h).unwrap() - dist.cdf(z - h).unwrap()) / (2.0 * h);
                assert!(
                    (dist.pdf(z).unwrap() - fd).abs() < 1e-6,
                    "{dist:?} pdf mismatch at {z}"
                );
                z += 0.25;
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let n = StandardDistribution::Normal;
        assert!(n.cdf(f64::NAN).is_err());
        assert!(n.cdf(f64::INFINITY).is_err());
        assert!(n.pdf(f64::NAN).is_err());
        assert!(n.quantile(0.0).is_err());
        assert!(n.quantile(1.0).is_err());
        assert!(n.quantile(-0.2).is_err());
        assert!(n.quantile(f64::NAN).is_err());
    }
}
