//! Homogeneous gauges ‖·‖ and their horizontal-gradient norms.
//!
//! A gauge is a continuous map with ‖δ_r x‖ = r‖x‖ and ‖x‖ = 0 ⇔ x = 0;
//! it defines the ball family B_r = {‖x‖ < r} driving the rearrangement.
//! Each gauge also evaluates |D_h‖x‖| (the Euclidean length of the
//! horizontal-frame derivatives), defined a.e.; for the Carnot gauge this
//! is the constant 1.
//!
//! Gauges are strategies selected by id: "euclidean", "koranyi", "box",
//! "carnot". Not every (group, gauge) pair is admissible — the Euclidean
//! norm is not δ_r-homogeneous on H¹ and the Korányi gauge is H¹-specific.

pub mod cc;

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{dilate_unchecked, CarnotGroup, HEISENBERG1_ID};
use crate::report::{Resolution, VerificationReport};
use crate::rng;

/// How `hgrad_norm` is produced, which the validator and the energy
/// checks use to pick tolerances and shortcuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    /// Closed-form gauge, smooth away from the origin.
    SmoothAwayFromOrigin,
    /// Carnot–Carathéodory gauge: |D_h‖x‖| ≡ 1 a.e. by construction.
    Carnot,
}

pub trait Gauge: Send + Sync {
    fn id(&self) -> &str;
    fn group(&self) -> &Arc<dyn CarnotGroup>;
    /// ‖p‖. Ball membership is p ∈ B_r ⇔ eval(p) < r.
    fn eval(&self, p: &[f64]) -> f64;
    /// |D_h‖·‖|(p); errors at the origin where no gauge is differentiable.
    fn hgrad_norm(&self, p: &[f64]) -> Result<f64>;
    fn smoothness(&self) -> Smoothness;
    /// Per-axis extent of the unit ball: max |x_i| over B₁. The extent of
    /// B_r along axis i is then extent_i·r^{wᵢ}.
    fn unit_ball_extents(&self) -> Vec<f64>;
}

fn check_point(gauge: &dyn Gauge, p: &[f64]) -> Result<()> {
    if p.len() != gauge.group().dim() {
        return Err(Error::input(format!(
            "gauge {} expects {}-vectors, got length {}",
            gauge.id(),
            gauge.group().dim(),
            p.len()
        )));
    }
    Ok(())
}

/// ‖p‖ with dimension checking.
pub fn gauge_eval(gauge: &dyn Gauge, p: &[f64]) -> Result<f64> {
    check_point(gauge, p)?;
    Ok(gauge.eval(p))
}

/// |D_h‖·‖|(p) with dimension and origin checking.
pub fn gauge_hgrad_norm(gauge: &dyn Gauge, p: &[f64]) -> Result<f64> {
    check_point(gauge, p)?;
    gauge.hgrad_norm(p)
}

fn origin_error(p: &[f64]) -> Error {
    Error::UndefinedPoint(format!("{p:?} (gauge not differentiable at the origin)"))
}

fn is_origin(p: &[f64]) -> bool {
    p.iter().all(|&x| x == 0.0)
}

// ---------------------------------------------------------------------------
// Euclidean norm on ℝⁿ

pub struct EuclideanGauge {
    group: Arc<dyn CarnotGroup>,
    /// Reported smoothness: the CC gauge of ℝⁿ coincides with the norm,
    /// so "carnot" on a Euclidean group reuses this struct with the tag
    /// flipped.
    tag: Smoothness,
    id: &'static str,
}

impl EuclideanGauge {
    pub fn new(group: Arc<dyn CarnotGroup>) -> Result<Self> {
        if group.id().starts_with("euclidean") {
            Ok(EuclideanGauge {
                group,
                tag: Smoothness::SmoothAwayFromOrigin,
                id: "euclidean",
            })
        } else {
            Err(Error::input(format!(
                "the Euclidean norm is not a homogeneous gauge on {}",
                group.id()
            )))
        }
    }

    fn carnot(group: Arc<dyn CarnotGroup>) -> Result<Self> {
        let mut g = EuclideanGauge::new(group)?;
        g.tag = Smoothness::Carnot;
        g.id = "carnot";
        Ok(g)
    }
}

impl Gauge for EuclideanGauge {
    fn id(&self) -> &str {
        self.id
    }
    fn group(&self) -> &Arc<dyn CarnotGroup> {
        &self.group
    }
    fn eval(&self, p: &[f64]) -> f64 {
        p.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
    fn hgrad_norm(&self, p: &[f64]) -> Result<f64> {
        if is_origin(p) {
            return Err(origin_error(p));
        }
        Ok(1.0)
    }
    fn smoothness(&self) -> Smoothness {
        self.tag
    }
    fn unit_ball_extents(&self) -> Vec<f64> {
        vec![1.0; self.group.dim()]
    }
}

// ---------------------------------------------------------------------------
// Korányi gauge on H¹

/// ‖(x,y,t)‖ = ((x²+y²)² + 16t²)^{1/4}; the 16 makes
/// |D_h‖·‖| = √(x²+y²)/‖·‖ exactly, which vanishes on the t-axis.
pub struct KoranyiGauge {
    group: Arc<dyn CarnotGroup>,
}

impl KoranyiGauge {
    pub fn new(group: Arc<dyn CarnotGroup>) -> Result<Self> {
        if group.id() == HEISENBERG1_ID {
            Ok(KoranyiGauge { group })
        } else {
            Err(Error::input(format!(
                "the Korányi gauge is specific to {HEISENBERG1_ID}, got {}",
                group.id()
            )))
        }
    }
}

impl Gauge for KoranyiGauge {
    fn id(&self) -> &str {
        "koranyi"
    }
    fn group(&self) -> &Arc<dyn CarnotGroup> {
        &self.group
    }
    fn eval(&self, p: &[f64]) -> f64 {
        let planar = p[0] * p[0] + p[1] * p[1];
        (planar * planar + 16.0 * p[2] * p[2]).powf(0.25)
    }
    fn hgrad_norm(&self, p: &[f64]) -> Result<f64> {
        if is_origin(p) {
            return Err(origin_error(p));
        }
        Ok(p[0].hypot(p[1]) / self.eval(p))
    }
    fn smoothness(&self) -> Smoothness {
        Smoothness::SmoothAwayFromOrigin
    }
    fn unit_ball_extents(&self) -> Vec<f64> {
        vec![1.0, 1.0, 0.25]
    }
}

// ---------------------------------------------------------------------------
// Box gauge

/// ‖x‖ = max_i (|x_i|/s_i)^{1/wᵢ}: balls are boxes with per-axis widths
/// s_i·r^{wᵢ}. With the default unit scales the horizontal-gradient norm
/// stays ≤ 1 on both ℝⁿ and H¹.
pub struct BoxGauge {
    group: Arc<dyn CarnotGroup>,
    scales: Vec<f64>,
}

impl BoxGauge {
    pub fn new(group: Arc<dyn CarnotGroup>) -> Self {
        let scales = vec![1.0; group.dim()];
        BoxGauge { group, scales }
    }

    pub fn with_scales(group: Arc<dyn CarnotGroup>, scales: Vec<f64>) -> Result<Self> {
        if scales.len() != group.dim() || scales.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::input("box gauge needs one positive scale per axis"));
        }
        Ok(BoxGauge { group, scales })
    }

    /// Index of the coordinate whose term achieves the max (first of ties).
    fn dominant_axis(&self, p: &[f64]) -> usize {
        let mut best = 0;
        let mut best_val = f64::NEG_INFINITY;
        for (i, (&x, &s)) in p.iter().zip(&self.scales).enumerate() {
            let w = self.group.dilation_weights()[i];
            let v = (x.abs() / s).powf(1.0 / w as f64);
            if v > best_val {
                best_val = v;
                best = i;
            }
        }
        best
    }
}

impl Gauge for BoxGauge {
    fn id(&self) -> &str {
        "box"
    }
    fn group(&self) -> &Arc<dyn CarnotGroup> {
        &self.group
    }
    fn eval(&self, p: &[f64]) -> f64 {
        p.iter()
            .zip(&self.scales)
            .zip(self.group.dilation_weights())
            .map(|((&x, &s), &w)| (x.abs() / s).powf(1.0 / w as f64))
            .fold(0.0, f64::max)
    }
    fn hgrad_norm(&self, p: &[f64]) -> Result<f64> {
        if is_origin(p) {
            return Err(origin_error(p));
        }
        // Away from ties the gauge equals a single term f(x_j); apply the
        // frame to its coordinate gradient.
        let j = self.dominant_axis(p);
        let w = self.group.dilation_weights()[j] as f64;
        let s = self.scales[j];
        let xj = p[j].abs() / s;
        // ∂_j (x_j/s)^{1/w} = (1/(w·s))·x_j^{1/w − 1}·sign
        let dj = if xj == 0.0 {
            return Err(Error::UndefinedPoint(format!(
                "{p:?} (box gauge ridge: dominant coordinate vanishes)"
            )));
        } else {
            xj.powf(1.0 / w - 1.0) / (w * s) * p[j].signum()
        };
        let n = self.group.dim();
        let mut coeff = vec![0.0; n];
        let mut sq = 0.0;
        for i in 0..self.group.horizontal_rank() {
            self.group.frame_into(i, p, &mut coeff);
            let xi_f = coeff[j] * dj;
            sq += xi_f * xi_f;
        }
        Ok(sq.sqrt())
    }
    fn smoothness(&self) -> Smoothness {
        Smoothness::SmoothAwayFromOrigin
    }
    fn unit_ball_extents(&self) -> Vec<f64> {
        self.scales.clone()
    }
}

// ---------------------------------------------------------------------------
// Carnot gauge on H¹

/// ‖x‖_C = d_CC(x, 0), evaluated through the geodesic matching problem.
/// |D_h‖·‖_C| is returned as the constant 1 (a.e. exact); the numerical
/// cross-check lives in [`validate_gauge`].
pub struct CarnotGauge {
    group: Arc<dyn CarnotGroup>,
}

impl CarnotGauge {
    pub fn new(group: Arc<dyn CarnotGroup>) -> Result<Self> {
        if group.id() == HEISENBERG1_ID {
            Ok(CarnotGauge { group })
        } else {
            Err(Error::input(format!(
                "CarnotGauge is implemented for {HEISENBERG1_ID}; on Euclidean groups use id \"carnot\" (the norm itself)"
            )))
        }
    }
}

impl Gauge for CarnotGauge {
    fn id(&self) -> &str {
        "carnot"
    }
    fn group(&self) -> &Arc<dyn CarnotGroup> {
        &self.group
    }
    fn eval(&self, p: &[f64]) -> f64 {
        cc::cc_distance(p).expect("cc_distance is total on 3-vectors")
    }
    fn hgrad_norm(&self, p: &[f64]) -> Result<f64> {
        if is_origin(p) {
            return Err(origin_error(p));
        }
        Ok(1.0)
    }
    fn smoothness(&self) -> Smoothness {
        Smoothness::Carnot
    }
    fn unit_ball_extents(&self) -> Vec<f64> {
        // planar extent 1; vertical extent L²/(4π) at L = 1
        vec![1.0, 1.0, 0.25 / std::f64::consts::PI]
    }
}

/// d_CC(p, 0); requires the Heisenberg group.
pub fn cc_distance_from_origin(group: &dyn CarnotGroup, p: &[f64]) -> Result<f64> {
    if group.id() != HEISENBERG1_ID {
        return Err(Error::input(format!(
            "cc_distance_from_origin is defined for {HEISENBERG1_ID}, got {}",
            group.id()
        )));
    }
    cc::cc_distance(p)
}

// ---------------------------------------------------------------------------
// Registry

pub const KNOWN_GAUGE_IDS: [&str; 4] = ["euclidean", "koranyi", "box", "carnot"];

/// Resolve a gauge by id for a given group. Inadmissible pairs (such as
/// "euclidean" on H¹, which is not δ_r-homogeneous) are input errors.
pub fn gauge_by_id(group: &Arc<dyn CarnotGroup>, id: &str) -> Result<Arc<dyn Gauge>> {
    match id {
        "euclidean" => Ok(Arc::new(EuclideanGauge::new(group.clone())?)),
        "koranyi" => Ok(Arc::new(KoranyiGauge::new(group.clone())?)),
        "box" => Ok(Arc::new(BoxGauge::new(group.clone()))),
        "carnot" => {
            if group.id() == HEISENBERG1_ID {
                Ok(Arc::new(CarnotGauge::new(group.clone())?))
            } else {
                Ok(Arc::new(EuclideanGauge::carnot(group.clone())?))
            }
        }
        other => Err(Error::UnknownId {
            kind: "gauge",
            id: other.to_string(),
            known: KNOWN_GAUGE_IDS.join(", "),
        }),
    }
}

// ---------------------------------------------------------------------------
// Validation

/// Worst violations of the gauge axioms over random samples.
#[derive(Clone, Debug)]
pub struct GaugeValidation {
    /// max |‖δ_r x‖ − r‖x‖| / (1 + r‖x‖)
    pub max_homogeneity: f64,
    /// ‖0‖ (must be 0)
    pub origin_value: f64,
    /// min ‖x‖ over sampled x ≠ 0 (must be > 0)
    pub min_nonzero: f64,
    /// max |hgrad(δ_r x) − hgrad(x)|
    pub max_hgrad_homogeneity: f64,
    /// max |hgrad(x) − finite differences of eval along the frame|
    pub max_fd_gap: f64,
    /// max hgrad − 1 over samples (≤ ~0 for all shipped gauges)
    pub max_hgrad_excess: f64,
    pub samples: usize,
}

/// Finite-difference |D_h‖·‖| along the frame directions.
fn hgrad_fd(gauge: &dyn Gauge, p: &[f64], step: f64) -> f64 {
    let g = gauge.group();
    let n = g.dim();
    let mut coeff = vec![0.0; n];
    let mut plus = vec![0.0; n];
    let mut minus = vec![0.0; n];
    let mut sq = 0.0;
    for i in 0..g.horizontal_rank() {
        g.frame_into(i, p, &mut coeff);
        for a in 0..n {
            plus[a] = p[a] + step * coeff[a];
            minus[a] = p[a] - step * coeff[a];
        }
        let d = (gauge.eval(&plus) - gauge.eval(&minus)) / (2.0 * step);
        sq += d * d;
    }
    sq.sqrt()
}

/// Sample homogeneity, positivity, degree-zero homogeneity of the
/// horizontal-gradient norm, and its consistency with finite differences
/// of `eval` along the frame. Points too close to the origin — and for
/// H¹ gauges to the t-axis, where the shipped gauges are not horizontal-
/// differentiable — are re-drawn: those sets are null and every statement
/// being probed is an a.e. statement.
pub fn validate_gauge(gauge: &dyn Gauge, samples: usize, seed: u64) -> Result<GaugeValidation> {
    if samples < 1 {
        return Err(Error::input("validate_gauge needs samples ≥ 1"));
    }
    let g = gauge.group();
    let n = g.dim();
    let mut rng = rng::stream(seed, &format!("validate_gauge/{}/{}", g.id(), gauge.id()));

    let carnot = gauge.smoothness() == Smoothness::Carnot;
    let fd_step = if carnot { 1e-4 } else { 1e-5 };

    let mut v = GaugeValidation {
        max_homogeneity: 0.0,
        origin_value: gauge.eval(&vec![0.0; n]),
        min_nonzero: f64::INFINITY,
        max_hgrad_homogeneity: 0.0,
        max_fd_gap: 0.0,
        max_hgrad_excess: f64::NEG_INFINITY,
        samples,
    };

    let mut drawn = 0;
    let mut attempts = 0;
    while drawn < samples {
        attempts += 1;
        if attempts > 100 * samples {
            return Err(Error::numerical(
                "validate_gauge could not draw enough admissible sample points".to_string(),
            ));
        }
        let p: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let val = gauge.eval(&p);
        if !(val > 0.3) {
            continue; // too close to the origin for stable finite differences
        }
        // stay away from the measure-zero ridge/axis sets of the H¹ gauges
        if n == 3 && g.id() == HEISENBERG1_ID {
            let planar = p[0].hypot(p[1]);
            if planar < 0.25 {
                continue;
            }
            if gauge.id() == "box" {
                // box-gauge ridges: two terms within 5% of each other
                let terms: Vec<f64> = (0..3)
                    .map(|j| {
                        let w = g.dilation_weights()[j] as f64;
                        p[j].abs().powf(1.0 / w)
                    })
                    .collect();
                let mut sorted = terms.clone();
                sorted.sort_by(f64::total_cmp);
                if sorted[2] - sorted[1] < 0.05 * sorted[2] {
                    continue;
                }
            }
        }
        drawn += 1;
        v.min_nonzero = v.min_nonzero.min(val);

        for r in [0.5, 2.0, 3.0] {
            let q = dilate_unchecked(g.as_ref(), r, &p);
            let scaled = gauge.eval(&q);
            v.max_homogeneity = v
                .max_homogeneity
                .max((scaled - r * val).abs() / (1.0 + r * val));
            let hg_p = gauge.hgrad_norm(&p)?;
            let hg_q = gauge.hgrad_norm(&q)?;
            v.max_hgrad_homogeneity = v.max_hgrad_homogeneity.max((hg_q - hg_p).abs());
        }

        let hg = gauge.hgrad_norm(&p)?;
        v.max_hgrad_excess = v.max_hgrad_excess.max(hg - 1.0);
        let fd = hgrad_fd(gauge, &p, fd_step);
        v.max_fd_gap = v.max_fd_gap.max((fd - hg).abs());
    }
    Ok(v)
}

/// Tolerances used by [`validate_gauge_report`], per smoothness class.
pub fn gauge_tolerances(smoothness: Smoothness) -> (f64, f64, f64) {
    match smoothness {
        // (homogeneity, hgrad degree-0, fd consistency)
        Smoothness::SmoothAwayFromOrigin => (1e-9, 1e-8, 1e-4),
        Smoothness::Carnot => (1e-9, 1e-3, 1e-3),
    }
}

pub fn validate_gauge_report(
    gauge: &dyn Gauge,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let v = validate_gauge(gauge, samples, seed)?;
    let (tol_hom, tol_deg0, tol_fd) = gauge_tolerances(gauge.smoothness());
    let pass = v.max_homogeneity <= tol_hom
        && v.origin_value == 0.0
        && v.min_nonzero > 0.0
        && v.max_hgrad_homogeneity <= tol_deg0
        && v.max_fd_gap <= tol_fd
        && v.max_hgrad_excess <= 1e-6;
    let mut report = VerificationReport {
        pass,
        ..VerificationReport::identity(
            format!("gauge-axioms/{}/{}", gauge.group().id(), gauge.id()),
            v.max_homogeneity,
            0.0,
            tol_hom,
        )
    };
    report.resolution = Resolution {
        samples: Some(samples as u64),
        seed: Some(seed),
        ..Resolution::default()
    };
    report.notes.push(format!(
        "homog={:.2e} origin={:.1e} deg0={:.2e} fd={:.2e} hgrad-1={:+.2e}",
        v.max_homogeneity, v.origin_value, v.max_hgrad_homogeneity, v.max_fd_gap, v.max_hgrad_excess
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_by_id;

    fn h1() -> Arc<dyn CarnotGroup> {
        group_by_id("heisenberg1").unwrap()
    }

    #[test]
    fn euclidean_norm_values() {
        let g = group_by_id("euclidean2").unwrap();
        let gauge = gauge_by_id(&g, "euclidean").unwrap();
        assert_eq!(gauge_eval(gauge.as_ref(), &[3.0, 4.0]).unwrap(), 5.0);
        assert_eq!(gauge_eval(gauge.as_ref(), &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(gauge.hgrad_norm(&[0.1, 0.0]).unwrap(), 1.0);
        assert!(gauge.hgrad_norm(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn koranyi_normalization() {
        let gauge = gauge_by_id(&h1(), "koranyi").unwrap();
        assert!((gauge.eval(&[0.0, 0.0, 1.0]) - 2.0).abs() < 1e-14);
        assert!((gauge.eval(&[1.0, 0.0, 0.0]) - 1.0).abs() < 1e-14);
        // |D_h‖·‖| = ρ/‖·‖: 1 on the plane, 0 on the t-axis
        assert!((gauge.hgrad_norm(&[1.0, 0.0, 0.0]).unwrap() - 1.0).abs() < 1e-14);
        assert!(gauge.hgrad_norm(&[0.0, 0.0, 1.0]).unwrap().abs() < 1e-14);
    }

    #[test]
    fn koranyi_hgrad_matches_finite_differences() {
        let gauge = gauge_by_id(&h1(), "koranyi").unwrap();
        for p in [[1.0, 0.3, 0.2], [-0.4, 0.9, -0.6], [2.0, -1.0, 0.5]] {
            let analytic = gauge.hgrad_norm(&p).unwrap();
            let fd = hgrad_fd(gauge.as_ref(), &p, 1e-6);
            assert!(
                (analytic - fd).abs() < 1e-4,
                "{p:?}: {analytic} vs {fd}"
            );
        }
    }

    #[test]
    fn carnot_gauge_on_h1_is_cc_distance() {
        let gauge = gauge_by_id(&h1(), "carnot").unwrap();
        assert!((gauge.eval(&[0.8, 0.0, 0.0]) - 0.8).abs() < 1e-12);
        let d = gauge.eval(&[0.0, 0.0, 0.25]);
        assert!((d - std::f64::consts::PI.sqrt()).abs() < 1e-8);
        assert_eq!(gauge.hgrad_norm(&[0.5, 0.1, 0.0]).unwrap(), 1.0);
    }

    #[test]
    fn carnot_gauge_on_euclidean_is_the_norm() {
        let g = group_by_id("euclidean2").unwrap();
        let gauge = gauge_by_id(&g, "carnot").unwrap();
        assert_eq!(gauge.smoothness(), Smoothness::Carnot);
        assert_eq!(gauge.eval(&[3.0, 4.0]), 5.0);
    }

    #[test]
    fn inadmissible_pairs_are_rejected() {
        let g = group_by_id("euclidean2").unwrap();
        assert!(gauge_by_id(&g, "koranyi").is_err());
        assert!(gauge_by_id(&h1(), "euclidean").is_err());
        assert!(matches!(
            gauge_by_id(&h1(), "nosuch"),
            Err(Error::UnknownId { .. })
        ));
    }

    #[test]
    fn box_gauge_balls_are_boxes() {
        let gauge = gauge_by_id(&h1(), "box").unwrap();
        // B_r ⇔ |x| < r, |y| < r, |t| < r²
        assert!((gauge.eval(&[0.5, -0.2, 0.0]) - 0.5).abs() < 1e-14);
        assert!((gauge.eval(&[0.1, 0.0, 0.49]) - 0.7).abs() < 1e-14);
        // dilation homogeneity with weight-2 vertical axis
        let p = [0.3, 0.8, -0.4];
        let q = dilate_unchecked(h1().as_ref(), 2.0, &p);
        assert!((gauge.eval(&q) - 2.0 * gauge.eval(&p)).abs() < 1e-12);
    }

    #[test]
    fn shipped_gauges_validate() {
        for (gid, gauge_id, samples) in [
            ("euclidean1", "euclidean", 1000),
            ("euclidean2", "euclidean", 1000),
            ("euclidean3", "euclidean", 1000),
            ("euclidean2", "box", 1000),
            ("euclidean2", "carnot", 1000),
            ("heisenberg1", "koranyi", 1000),
            ("heisenberg1", "box", 1000),
            ("heisenberg1", "carnot", 200),
        ] {
            let g = group_by_id(gid).unwrap();
            let gauge = gauge_by_id(&g, gauge_id).unwrap();
            let report = validate_gauge_report(gauge.as_ref(), samples, 42).unwrap();
            assert!(report.pass, "{gid}/{gauge_id}: {:?}", report.notes);
        }
    }

    #[test]
    fn euclidean_gauge_algebraic_violations_are_machine_level() {
        let g = group_by_id("euclidean2").unwrap();
        let gauge = gauge_by_id(&g, "euclidean").unwrap();
        let v = validate_gauge(gauge.as_ref(), 1000, 7).unwrap();
        assert!(v.max_homogeneity <= 1e-10);
        assert!(v.max_hgrad_homogeneity <= 1e-10);
        assert_eq!(v.origin_value, 0.0);
    }

    #[test]
    fn koranyi_validation_tolerances() {
        let gauge = gauge_by_id(&h1(), "koranyi").unwrap();
        let v = validate_gauge(gauge.as_ref(), 1000, 7).unwrap();
        assert!(v.max_homogeneity <= 1e-10, "{}", v.max_homogeneity);
        assert!(v.max_fd_gap <= 1e-4, "{}", v.max_fd_gap);
        assert!(v.max_hgrad_excess <= 1e-6);
    }

    #[test]
    fn carnot_gauge_fd_consistency_within_1e3() {
        let gauge = gauge_by_id(&h1(), "carnot").unwrap();
        let v = validate_gauge(gauge.as_ref(), 200, 7).unwrap();
        assert!(v.max_fd_gap <= 1e-3, "{}", v.max_fd_gap);
        assert!(v.max_hgrad_excess <= 1e-6);
    }

    // Negative control: the Euclidean norm pretending to be a gauge on H¹
    // must fail homogeneity badly.
    #[test]
    fn fake_gauge_on_h1_fails_validation() {
        struct FakeGauge {
            group: Arc<dyn CarnotGroup>,
        }
        impl Gauge for FakeGauge {
            fn id(&self) -> &str {
                "fake-euclidean"
            }
            fn group(&self) -> &Arc<dyn CarnotGroup> {
                &self.group
            }
            fn eval(&self, p: &[f64]) -> f64 {
                p.iter().map(|x| x * x).sum::<f64>().sqrt()
            }
            fn hgrad_norm(&self, _p: &[f64]) -> Result<f64> {
                Ok(1.0)
            }
            fn smoothness(&self) -> Smoothness {
                Smoothness::SmoothAwayFromOrigin
            }
            fn unit_ball_extents(&self) -> Vec<f64> {
                vec![1.0; 3]
            }
        }
        let fake = FakeGauge { group: h1() };
        let report = validate_gauge_report(&fake, 500, 3).unwrap();
        assert!(!report.pass);
        let v = validate_gauge(&fake, 500, 3).unwrap();
        assert!(v.max_homogeneity > 1e-2);
    }
}
