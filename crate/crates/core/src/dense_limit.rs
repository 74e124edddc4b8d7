//! Closed-form dense-regime predictions and scaling-collapse measurement.
//!
//! When degrees concentrate near their mean (⟨r⟩ ≳ 10), the per-vertex
//! index means admit closed forms in the mean Revan degree x = ⟨r⟩:
//!
//! | family   | sum / n   | ln product / n   |
//! |----------|-----------|------------------|
//! | Zagreb1  | x²        | ½·x·ln(2x)       |
//! | Zagreb2  | ½·x³      | x·ln x           |
//! | Forgotten| x³        | x·ln(√2·x)       |
//! | Sombor   | x²/√2     | ½·x·ln(√2·x)     |
//!
//! The same formulas with x = ⟨d⟩ predict the ordinary-degree indices, so
//! the prediction functions accept either variant.
//!
//! [`collapse_deviation`] quantifies how close normalized curves from
//! different graph sizes are: curves are resampled onto a common grid,
//! linearly interpolating in ln(r_mean) with a log ordinate. The log
//! ordinate makes the resampling exact on power laws — which these curves
//! are, up to log factors — so the reported deviation measures curve
//! disagreement, not interpolation error of the coarse sweep grids. The
//! curves are also compared on that log scale: at each grid point the
//! spread of the interpolated log-ordinates is taken relative to their
//! mean. On near-power-law curves y ≈ c·rᵏ this gauges the horizontal
//! offset between curves relative to ln r, independent of the exponent k,
//! so one tolerance serves every index family.

use crate::float;
use crate::indices::{Family, Form, IndexKind};
use alloc::vec::Vec;
use core::fmt;

/// Points in the common resampling grid of [`collapse_deviation`].
const RESAMPLE_GRID: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DenseLimitError {
    /// `predict_sum` needs a non-negative, `predict_log_product` a positive
    /// mean degree.
    MeanOutOfRange { kind: IndexKind, mean: f64 },
    /// A sum formula was requested for a product kind or vice versa.
    WrongForm { expected: Form, got: Form },
    /// Collapse needs at least two curves.
    TooFewCurves { got: usize },
    /// A curve must contain at least one point.
    EmptyCurve,
    /// Curve abscissas must be finite and strictly increasing, ordinates
    /// finite.
    MalformedCurve { r: f64, value: f64 },
    /// No common abscissa range at or above `r_min`.
    NoOverlap { r_min: f64 },
    /// Log-ordinate resampling hit a point that is not strictly positive.
    NonPositivePoint { r: f64, value: f64 },
    /// Distinct curves whose mean log-ordinate is not positive have no
    /// meaningful relative spread.
    NonPositiveLogMean { r: f64 },
    /// No curve points at or above `r_min`.
    EmptyRestriction { r_min: f64 },
    /// Relative deviation from a zero prediction is undefined.
    ZeroPrediction { r: f64 },
}

impl fmt::Display for DenseLimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenseLimitError::MeanOutOfRange { kind, mean } => {
                write!(f, "mean degree {mean} is out of range for {kind}")
            }
            DenseLimitError::WrongForm { expected, got } => {
                write!(f, "expected a {expected:?}-form kind, got {got:?}")
            }
            DenseLimitError::TooFewCurves { got } => {
                write!(f, "collapse needs at least 2 curves, got {got}")
            }
            DenseLimitError::EmptyCurve => write!(f, "curve has no points"),
            DenseLimitError::MalformedCurve { r, value } => {
                write!(f, "curve point ({r}, {value}) is non-finite or duplicates an abscissa")
            }
            DenseLimitError::NoOverlap { r_min } => {
                write!(f, "curves share no abscissa range at r >= {r_min}")
            }
            DenseLimitError::NonPositivePoint { r, value } => {
                write!(f, "cannot log-interpolate non-positive point ({r}, {value})")
            }
            DenseLimitError::NonPositiveLogMean { r } => {
                write!(f, "mean log-ordinate at r = {r} is not positive; relative spread undefined")
            }
            DenseLimitError::EmptyRestriction { r_min } => {
                write!(f, "no curve points at r >= {r_min}")
            }
            DenseLimitError::ZeroPrediction { r } => {
                write!(f, "prediction is zero at r = {r}; relative deviation undefined")
            }
        }
    }
}

impl core::error::Error for DenseLimitError {}

/// Predicted per-vertex sum `⟨X_Σ⟩/n` at mean (Revan) degree `r_mean`.
pub fn predict_sum(kind: IndexKind, r_mean: f64) -> Result<f64, DenseLimitError> {
    if kind.form != Form::Sum {
        return Err(DenseLimitError::WrongForm {
            expected: Form::Sum,
            got: kind.form,
        });
    }
    if !r_mean.is_finite() || r_mean < 0.0 {
        return Err(DenseLimitError::MeanOutOfRange { kind, mean: r_mean });
    }
    let x = r_mean;
    Ok(match kind.family {
        Family::Zagreb1 => x * x,
        Family::Zagreb2 => 0.5 * x * x * x,
        Family::Forgotten => x * x * x,
        Family::Sombor => x * x / core::f64::consts::SQRT_2,
    })
}

/// Predicted per-vertex log product `⟨ln X_Π⟩/n` at mean (Revan) degree
/// `r_mean`.
pub fn predict_log_product(kind: IndexKind, r_mean: f64) -> Result<f64, DenseLimitError> {
    if kind.form != Form::Product {
        return Err(DenseLimitError::WrongForm {
            expected: Form::Product,
            got: kind.form,
        });
    }
    if !r_mean.is_finite() || r_mean <= 0.0 {
        return Err(DenseLimitError::MeanOutOfRange { kind, mean: r_mean });
    }
    let x = r_mean;
    Ok(match kind.family {
        Family::Zagreb1 => 0.5 * x * float::ln(2.0 * x),
        Family::Zagreb2 => x * float::ln(x),
        Family::Forgotten => x * float::ln(core::f64::consts::SQRT_2 * x),
        Family::Sombor => 0.5 * x * float::ln(core::f64::consts::SQRT_2 * x),
    })
}

/// A prediction evaluated at one mean degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub kind: IndexKind,
    pub r_mean: f64,
    pub value: f64,
}

/// Form-dispatching convenience over [`predict_sum`] /
/// [`predict_log_product`].
pub fn predict(kind: IndexKind, r_mean: f64) -> Result<Prediction, DenseLimitError> {
    let value = match kind.form {
        Form::Sum => predict_sum(kind, r_mean)?,
        Form::Product => predict_log_product(kind, r_mean)?,
    };
    Ok(Prediction {
        kind,
        r_mean,
        value,
    })
}

/// One size's normalized sweep: `(r_mean, ensemble mean / n)` pairs,
/// strictly increasing in `r_mean`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingCurve {
    n: usize,
    points: Vec<(f64, f64)>,
}

impl ScalingCurve {
    /// Sorts the points by abscissa; rejects empty input, non-finite
    /// coordinates, and duplicate abscissas.
    pub fn new(n: usize, mut points: Vec<(f64, f64)>) -> Result<Self, DenseLimitError> {
        if points.is_empty() {
            return Err(DenseLimitError::EmptyCurve);
        }
        for &(r, value) in &points {
            if !r.is_finite() || !value.is_finite() {
                return Err(DenseLimitError::MalformedCurve { r, value });
            }
        }
        points.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite abscissas"));
        for pair in points.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(DenseLimitError::MalformedCurve {
                    r: pair[1].0,
                    value: pair[1].1,
                });
            }
        }
        Ok(Self { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// `(ln r, ln value)` for the points with `r ≥ r_min`, erroring on
    /// non-positive coordinates (the log resampling needs both positive).
    fn restricted_log_points(&self, r_min: f64) -> Result<Vec<(f64, f64)>, DenseLimitError> {
        let mut out = Vec::new();
        for &(r, value) in self.points.iter().filter(|&&(r, _)| r >= r_min) {
            if r <= 0.0 || value <= 0.0 {
                return Err(DenseLimitError::NonPositivePoint { r, value });
            }
            out.push((float::ln(r), float::ln(value)));
        }
        Ok(out)
    }
}

/// Linear interpolation over strictly increasing `(t, y)` knots, clamped at
/// the ends (queries stay inside the knot range up to rounding).
fn interp(points: &[(f64, f64)], t: f64) -> f64 {
    let i = points.partition_point(|&(knot, _)| knot < t);
    if i == 0 {
        return points[0].1;
    }
    if i == points.len() {
        return points[i - 1].1;
    }
    let (t0, y0) = points[i - 1];
    let (t1, y1) = points[i];
    let w = (t - t0) / (t1 - t0);
    y0 + w * (y1 - y0)
}

/// Worst-case relative spread across curves in the dense region.
///
/// Every curve is restricted to `r_mean ≥ r_min`, resampled onto one
/// 50-point grid spanning the common abscissa range (log-spaced), and the
/// maximum over grid points of `(max − min) / mean` across the curves'
/// log-ordinates is returned. Identical curves give 0. Distinct curves
/// need a positive mean log-ordinate (geometric-mean ordinate above 1)
/// wherever they disagree; with the default `r_min = 10` every index
/// ordinate is far above 1.
pub fn collapse_deviation(
    curves: &[ScalingCurve],
    r_min: f64,
) -> Result<f64, DenseLimitError> {
    if curves.len() < 2 {
        return Err(DenseLimitError::TooFewCurves { got: curves.len() });
    }
    let mut restricted = Vec::with_capacity(curves.len());
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for curve in curves {
        let points = curve.restricted_log_points(r_min)?;
        let (Some(first), Some(last)) = (points.first(), points.last()) else {
            return Err(DenseLimitError::NoOverlap { r_min });
        };
        lo = lo.max(first.0);
        hi = hi.min(last.0);
        restricted.push(points);
    }
    if lo > hi {
        return Err(DenseLimitError::NoOverlap { r_min });
    }

    let mut worst = 0.0f64;
    let steps = if lo == hi { 1 } else { RESAMPLE_GRID };
    for k in 0..steps {
        let t = if steps == 1 {
            lo
        } else {
            lo + (hi - lo) * k as f64 / (steps - 1) as f64
        };
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for points in &restricted {
            let log_y = interp(points, t);
            min = min.min(log_y);
            max = max.max(log_y);
            sum += log_y;
        }
        if max == min {
            continue;
        }
        let mean = sum / restricted.len() as f64;
        if mean <= 0.0 {
            return Err(DenseLimitError::NonPositiveLogMean { r: float::exp(t) });
        }
        worst = worst.max((max - min) / mean);
    }
    Ok(worst)
}

/// Worst relative disagreement between a curve and the closed-form
/// prediction for `kind`, over points with `r_mean ≥ r_min`.
pub fn prediction_deviation(
    curve: &ScalingCurve,
    kind: IndexKind,
    r_min: f64,
) -> Result<f64, DenseLimitError> {
    let mut worst: Option<f64> = None;
    for &(r, value) in curve.points.iter().filter(|&&(r, _)| r >= r_min) {
        let predicted = predict(kind, r)?.value;
        if predicted == 0.0 {
            return Err(DenseLimitError::ZeroPrediction { r });
        }
        let dev = float::abs((value - predicted) / predicted);
        worst = Some(worst.map_or(dev, |w| w.max(dev)));
    }
    worst.ok_or(DenseLimitError::EmptyRestriction { r_min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{Variant, ALL_KINDS, PRODUCT_KINDS, SUM_KINDS};
    use alloc::vec;
    use approx::assert_relative_eq;

    fn sum_kind(family: Family) -> IndexKind {
        IndexKind::new(family, Variant::Revan, Form::Sum)
    }

    fn product_kind(family: Family) -> IndexKind {
        IndexKind::new(family, Variant::Revan, Form::Product)
    }

    #[test]
    fn sum_predictions_at_reference_points() {
        assert_eq!(predict_sum(sum_kind(Family::Zagreb1), 20.0).unwrap(), 400.0);
        assert_eq!(predict_sum(sum_kind(Family::Zagreb2), 10.0).unwrap(), 500.0);
        assert_eq!(predict_sum(sum_kind(Family::Forgotten), 10.0).unwrap(), 1000.0);
        assert_eq!(predict_sum(sum_kind(Family::Sombor), 0.0).unwrap(), 0.0);
        assert_relative_eq!(
            predict_sum(sum_kind(Family::Sombor), 10.0).unwrap(),
            100.0 / 2f64.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn log_product_predictions_at_reference_points() {
        assert_eq!(predict_log_product(product_kind(Family::Zagreb2), 1.0).unwrap(), 0.0);
        assert_relative_eq!(
            predict_log_product(product_kind(Family::Zagreb1), 10.0).unwrap(),
            5.0 * 20f64.ln(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            predict_log_product(product_kind(Family::Forgotten), 1.0).unwrap(),
            2f64.sqrt().ln(),
            max_relative = 1e-15
        );
        for r in [0.5, 1.0, 3.0, 10.0, 250.0] {
            assert_relative_eq!(
                predict_log_product(product_kind(Family::Sombor), r).unwrap(),
                0.5 * predict_log_product(product_kind(Family::Forgotten), r).unwrap(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn degree_variant_uses_the_same_formula() {
        for r in [0.5, 2.0, 25.0] {
            for family in [Family::Zagreb1, Family::Zagreb2, Family::Forgotten, Family::Sombor] {
                let revan = IndexKind::new(family, Variant::Revan, Form::Sum);
                let degree = IndexKind::new(family, Variant::Degree, Form::Sum);
                assert_eq!(
                    predict_sum(revan, r).unwrap(),
                    predict_sum(degree, r).unwrap()
                );
            }
        }
    }

    #[test]
    fn out_of_range_means_and_wrong_forms_error() {
        let s = sum_kind(Family::Zagreb1);
        let p = product_kind(Family::Zagreb1);
        assert!(matches!(
            predict_sum(s, -1.0),
            Err(DenseLimitError::MeanOutOfRange { .. })
        ));
        assert!(matches!(
            predict_sum(s, f64::NAN),
            Err(DenseLimitError::MeanOutOfRange { .. })
        ));
        assert!(matches!(
            predict_log_product(p, 0.0),
            Err(DenseLimitError::MeanOutOfRange { .. })
        ));
        assert!(matches!(
            predict_sum(p, 1.0),
            Err(DenseLimitError::WrongForm { .. })
        ));
        assert!(matches!(
            predict_log_product(s, 1.0),
            Err(DenseLimitError::WrongForm { .. })
        ));
    }

    #[test]
    fn predictions_increase_with_mean_degree_above_one() {
        for kind in ALL_KINDS {
            let mut previous = predict(kind, 1.0).unwrap().value;
            let mut r = 1.05;
            while r < 60.0 {
                let value = predict(kind, r).unwrap().value;
                assert!(value > previous, "{kind} not increasing at r = {r}");
                previous = value;
                r *= 1.17;
            }
        }
    }

    fn grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
        (0..count)
            .map(|k| lo * (hi / lo).powf(k as f64 / (count - 1) as f64))
            .collect()
    }

    #[test]
    fn identical_curves_collapse_exactly() {
        let points: Vec<(f64, f64)> = grid(5.0, 80.0, 20)
            .into_iter()
            .map(|r| (r, r * r))
            .collect();
        let a = ScalingCurve::new(125, points.clone()).unwrap();
        let b = ScalingCurve::new(500, points).unwrap();
        assert_eq!(collapse_deviation(&[a, b], 10.0).unwrap(), 0.0);
    }

    #[test]
    fn analytic_power_law_on_offset_grids_collapses() {
        // Different sampling grids of the same r² law: the log-ordinate
        // resampling is exact on power laws, so only rounding remains.
        let a: Vec<(f64, f64)> = grid(5.0, 100.0, 20).into_iter().map(|r| (r, r * r)).collect();
        let b: Vec<(f64, f64)> = grid(7.0, 130.0, 23).into_iter().map(|r| (r, r * r)).collect();
        let curves = [
            ScalingCurve::new(125, a).unwrap(),
            ScalingCurve::new(500, b).unwrap(),
        ];
        assert!(collapse_deviation(&curves, 10.0).unwrap() < 1e-12);
    }

    #[test]
    fn analytic_log_factor_curves_collapse_within_interpolation_error() {
        // ½·r·ln(2r) is not a pure power law; 50-point source grids keep the
        // resampling error well under 1e-3.
        let f = |r: f64| 0.5 * r * (2.0 * r).ln();
        let a: Vec<(f64, f64)> = grid(8.0, 110.0, 50).into_iter().map(|r| (r, f(r))).collect();
        let b: Vec<(f64, f64)> = grid(10.0, 140.0, 50).into_iter().map(|r| (r, f(r))).collect();
        let curves = [
            ScalingCurve::new(125, a).unwrap(),
            ScalingCurve::new(500, b).unwrap(),
        ];
        assert!(collapse_deviation(&curves, 10.0).unwrap() < 1e-3);
    }

    #[test]
    fn offset_power_laws_deviate_by_log_spread_over_log_mean() {
        // y = r² vs y = e^ε·r² on r ∈ [10, 100]: the log-ordinate spread is
        // ε everywhere, and the relative spread peaks at the left edge where
        // the mean log-ordinate 2·ln r + ε/2 is smallest.
        let eps = 0.1f64;
        let a: Vec<(f64, f64)> = grid(10.0, 100.0, 20).into_iter().map(|r| (r, r * r)).collect();
        let b: Vec<(f64, f64)> = grid(10.0, 100.0, 20)
            .into_iter()
            .map(|r| (r, eps.exp() * r * r))
            .collect();
        let curves = [
            ScalingCurve::new(125, a).unwrap(),
            ScalingCurve::new(500, b).unwrap(),
        ];
        let expected = eps / (2.0 * 10f64.ln() + 0.5 * eps);
        assert_relative_eq!(
            collapse_deviation(&curves, 10.0).unwrap(),
            expected,
            max_relative = 1e-10
        );
    }

    #[test]
    fn distinct_curves_near_unit_ordinate_error() {
        let a: Vec<(f64, f64)> = grid(10.0, 100.0, 10)
            .into_iter()
            .map(|r| (r, (-1.0f64).exp()))
            .collect();
        let b: Vec<(f64, f64)> = grid(10.0, 100.0, 10)
            .into_iter()
            .map(|r| (r, (0.5f64).exp()))
            .collect();
        let curves = [
            ScalingCurve::new(125, a).unwrap(),
            ScalingCurve::new(500, b).unwrap(),
        ];
        assert!(matches!(
            collapse_deviation(&curves, 10.0),
            Err(DenseLimitError::NonPositiveLogMean { .. })
        ));
    }

    #[test]
    fn collapse_input_validation() {
        let points: Vec<(f64, f64)> = grid(10.0, 50.0, 10).into_iter().map(|r| (r, r)).collect();
        let one = ScalingCurve::new(125, points.clone()).unwrap();
        assert!(matches!(
            collapse_deviation(core::slice::from_ref(&one), 10.0),
            Err(DenseLimitError::TooFewCurves { .. })
        ));
        let low: Vec<(f64, f64)> = grid(1.0, 5.0, 10).into_iter().map(|r| (r, r)).collect();
        let low = ScalingCurve::new(500, low).unwrap();
        assert!(matches!(
            collapse_deviation(&[one.clone(), low], 10.0),
            Err(DenseLimitError::NoOverlap { .. })
        ));
        let negative = ScalingCurve::new(500, vec![(10.0, -1.0), (50.0, 1.0)]).unwrap();
        assert!(matches!(
            collapse_deviation(&[one, negative], 10.0),
            Err(DenseLimitError::NonPositivePoint { .. })
        ));
    }

    #[test]
    fn curve_construction_validation() {
        assert!(matches!(
            ScalingCurve::new(10, vec![]),
            Err(DenseLimitError::EmptyCurve)
        ));
        assert!(matches!(
            ScalingCurve::new(10, vec![(1.0, f64::NAN)]),
            Err(DenseLimitError::MalformedCurve { .. })
        ));
        assert!(matches!(
            ScalingCurve::new(10, vec![(1.0, 2.0), (1.0, 3.0)]),
            Err(DenseLimitError::MalformedCurve { .. })
        ));
        let sorted = ScalingCurve::new(10, vec![(3.0, 9.0), (1.0, 1.0), (2.0, 4.0)]).unwrap();
        assert_eq!(sorted.points(), &[(1.0, 1.0), (2.0, 4.0), (3.0, 9.0)]);
    }

    #[test]
    fn self_generated_curves_have_zero_prediction_deviation() {
        for kind in SUM_KINDS.iter().chain(PRODUCT_KINDS.iter()) {
            let points: Vec<(f64, f64)> = grid(10.0, 100.0, 15)
                .into_iter()
                .map(|r| (r, predict(*kind, r).unwrap().value))
                .collect();
            let curve = ScalingCurve::new(500, points).unwrap();
            assert_eq!(prediction_deviation(&curve, *kind, 10.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn prediction_deviation_measures_relative_error() {
        let kind = sum_kind(Family::Zagreb1);
        let points: Vec<(f64, f64)> = grid(10.0, 100.0, 15)
            .into_iter()
            .map(|r| (r, 1.03 * r * r))
            .collect();
        let curve = ScalingCurve::new(500, points).unwrap();
        assert_relative_eq!(
            prediction_deviation(&curve, kind, 10.0).unwrap(),
            0.03,
            max_relative = 1e-12
        );
        assert!(matches!(
            prediction_deviation(&curve, kind, 1000.0),
            Err(DenseLimitError::EmptyRestriction { .. })
        ));
    }
}
