//! The catalog of S-N regression curves. Every family implements the
//! [`SnRelationship`] strategy trait: evaluation in both orientations
//! (cycles as a function of stress and stress as a function of cycles),
//! inverses, log-derivatives for density computations, and coordinate
//! asymptote descriptors. Families register by name in [`families`] and are
//! selected at runtime from configuration or the command line.

mod basquin;
mod bastenaire;
mod box_cox;
mod coffin_manson;
mod nishijima;
mod rect_hyperbola;
mod stromeyer;

pub use basquin::Basquin;
pub use bastenaire::ModifiedBastenaire;
pub use box_cox::BoxCox;
pub use coffin_manson::CoffinManson;
pub use nishijima::Nishijima;
pub use rect_hyperbola::RectHyperbola;
pub use stromeyer::Stromeyer;

use crate::error::{Error, Result};
use crate::model::Orientation;
use std::sync::Arc;

/// Coordinate asymptotes of an S-N curve on log-log axes.
///
/// `vertical` is the infimum of log cycles (the curve shoots up there as
/// stress grows); `horizontal` is the infimum of log stress (the fatigue
/// limit the curve flattens toward at long life).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AsymptoteInfo {
    pub vertical: Option<f64>,
    pub horizontal: Option<f64>,
}

/// A strictly decreasing S-N regression curve.
///
/// Implementations are immutable after construction and all methods are
/// pure, so values can be shared freely across threads.
pub trait SnRelationship: std::fmt::Debug + Send + Sync {
    /// Registry name of the family.
    fn family(&self) -> &'static str;

    /// Natural parameters as (name, value) pairs, in registry order.
    fn params(&self) -> Vec<(&'static str, f64)>;

    /// log N on the curve at a stress level (the curve read as N = g(S)).
    fn log_cycles(&self, stress: f64) -> Result<f64>;

    /// log S on the curve at a cycle count (the curve read as S = h(N)).
    fn log_stress(&self, cycles: f64) -> Result<f64>;

    /// d log h(t) / dt; strictly negative on the curve's domain.
    fn dlog_stress_dcycles(&self, cycles: f64) -> Result<f64>;

    /// d log g(x) / dx; strictly negative on the curve's domain.
    fn dlog_cycles_dstress(&self, stress: f64) -> Result<f64>;

    fn asymptotes(&self) -> AsymptoteInfo;

    /// Open range of log stress attained by the curve over its domain.
    fn log_stress_range(&self) -> (f64, f64) {
        (
            self.asymptotes().horizontal.unwrap_or(f64::NEG_INFINITY),
            f64::INFINITY,
        )
    }

    /// Open range of log cycles attained by the curve over its domain.
    fn log_cycles_range(&self) -> (f64, f64) {
        (
            self.asymptotes().vertical.unwrap_or(f64::NEG_INFINITY),
            f64::INFINITY,
        )
    }

    /// Cycles on the curve at a stress level: the inverse of `log_stress`.
    /// Distinguishes stresses below the horizontal asymptote from stresses
    /// above the curve supremum.
    fn cycles_at_stress(&self, stress: f64) -> Result<f64> {
        let ls = check_log_arg("stress", stress)?;
        let (lo, hi) = self.log_stress_range();
        if ls <= lo {
            return Err(Error::BelowAsymptote {
                stress,
                limit: lo.exp(),
            });
        }
        if ls >= hi {
            return Err(Error::AboveSupremum {
                stress,
                supremum: hi.exp(),
            });
        }
        Ok(self.log_cycles(stress)?.exp())
    }
}

pub type Rel = Arc<dyn SnRelationship>;

/// Validate a positive finite argument and return its log.
pub(crate) fn check_log_arg(what: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::domain(what, value, "a finite positive value"));
    }
    Ok(value.ln())
}

pub(crate) fn require(
    ok: bool,
    name: &'static str,
    value: f64,
    requirement: &str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            requirement: requirement.to_string(),
        })
    }
}

/// Numerical strict-decrease check run by every constructor: evaluates
/// log stress on a log-spaced grid spanning the curve's cycle domain.
pub(crate) fn check_strictly_decreasing(rel: &dyn SnRelationship) -> Result<()> {
    let (lo, hi) = rel.log_cycles_range();
    let a = if lo.is_finite() { lo + 1e-6 } else { -30.0 };
    let b = if hi.is_finite() { hi - 1e-6 } else { 60.0 };
    let n = 25;
    let mut prev = f64::INFINITY;
    for i in 0..=n {
        let v = a + (b - a) * i as f64 / n as f64;
        let s = rel.log_stress(v.exp())?;
        if s >= prev {
            return Err(Error::InvalidParameter {
                name: "curve",
                value: v,
                requirement: "log S-N curve strictly decreasing over its domain".to_string(),
            });
        }
        prev = s;
    }
    Ok(())
}

/// Registry entry describing one curve family.
pub struct FamilyInfo {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    pub param_names: &'static [&'static str],
    /// The orientation in which the family is normally specified.
    pub recommended_orientation: Orientation,
    pub build: fn(&[f64]) -> Result<Rel>,
}

/// All registered curve families, in catalog order.
pub fn families() -> &'static [FamilyInfo] {
    &REGISTRY
}

static REGISTRY: [FamilyInfo; 7] = [
    FamilyInfo {
        name: "basquin",
        aliases: &["inverse-power"],
        param_names: &["beta0", "beta1"],
        recommended_orientation: Orientation::LifeSpecified,
        build: |p| Ok(Arc::new(Basquin::new(p[0], p[1])?)),
    },
    FamilyInfo {
        name: "stromeyer",
        aliases: &[],
        param_names: &["beta0", "beta1", "gamma"],
        recommended_orientation: Orientation::StrengthSpecified,
        build: |p| Ok(Arc::new(Stromeyer::new(p[0], p[1], p[2])?)),
    },
    FamilyInfo {
        name: "box-cox",
        aliases: &["boxcox"],
        param_names: &["beta0", "beta1", "lambda"],
        recommended_orientation: Orientation::LifeSpecified,
        build: |p| Ok(Arc::new(BoxCox::new(p[0], p[1], p[2])?)),
    },
    FamilyInfo {
        name: "coffin-manson",
        aliases: &["strain-life"],
        param_names: &["a_el", "a_pl", "b", "c"],
        recommended_orientation: Orientation::StrengthSpecified,
        build: |p| Ok(Arc::new(CoffinManson::new(p[0], p[1], p[2], p[3])?)),
    },
    FamilyInfo {
        name: "nishijima",
        aliases: &[],
        param_names: &["a", "b", "c", "e"],
        recommended_orientation: Orientation::StrengthSpecified,
        build: |p| Ok(Arc::new(Nishijima::new(p[0], p[1], p[2], p[3])?)),
    },
    FamilyInfo {
        name: "rect-hyperbola",
        aliases: &["rectangular-hyperbola", "rh"],
        param_names: &["b", "c", "e"],
        recommended_orientation: Orientation::StrengthSpecified,
        build: |p| Ok(Arc::new(RectHyperbola::new(p[0], p[1], p[2])?)),
    },
    FamilyInfo {
        name: "bastenaire",
        aliases: &["modified-bastenaire"],
        param_names: &["a", "b", "c", "e"],
        recommended_orientation: Orientation::StrengthSpecified,
        build: |p| Ok(Arc::new(ModifiedBastenaire::new(p[0], p[1], p[2], p[3])?)),
    },
];

/// Look up a family by registry name or alias (case-insensitive).
pub fn family(name: &str) -> Option<&'static FamilyInfo> {
    let lower = name.to_ascii_lowercase();
    REGISTRY
        .iter()
        .find(|f| f.name == lower || f.aliases.contains(&lower.as_str()))
}

/// Build a relationship from its registry name and positional parameters.
pub fn build(name: &str, params: &[f64]) -> Result<Rel> {
    let info = family(name).ok_or_else(|| {
        Error::Usage(format!(
            "unknown relationship '{name}'; known: {}",
            REGISTRY
                .iter()
                .map(|f| f.name)
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })?;
    if params.len() != info.param_names.len() {
        return Err(Error::Usage(format!(
            "relationship '{}' takes {} parameters ({}), got {}",
            info.name,
            info.param_names.len(),
            info.param_names.join(", "),
            params.len()
        )));
    }
    (info.build)(params)
}

/// Build a relationship from named parameters (order-insensitive).
pub fn build_named(name: &str, params: &[(String, f64)]) -> Result<Rel> {
    let info = family(name)
        .ok_or_else(|| Error::Usage(format!("unknown relationship '{name}'")))?;
    let mut ordered = Vec::with_capacity(info.param_names.len());
    for pn in info.param_names {
        let v = params
            .iter()
            .find(|(k, _)| k == pn)
            .map(|(_, v)| *v)
            .ok_or_else(|| {
                Error::Usage(format!("relationship '{}' missing parameter '{pn}'", info.name))
            })?;
        ordered.push(v);
    }
    (info.build)(&ordered)
}
