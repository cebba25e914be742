//! Carnot-group structure: group law, anisotropic dilations δ_r with
//! weights w₁…w_n (Σwᵢ = Q), and the left-invariant horizontal frame
//! X₁…X_m. Shipped instances: Euclidean ℝⁿ for n = 1, 2, 3 and the first
//! Heisenberg group H¹ in coordinates where the Haar measure is ℒⁿ.
//!
//! Groups are immutable strategy objects selected by id at runtime
//! ("euclidean1", "euclidean2", "euclidean3", "heisenberg1").

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::report::{Resolution, VerificationReport};
use crate::rng;

/// A Carnot group realized on ℝⁿ.
///
/// Implementations must be pure: every method may be called concurrently.
pub trait CarnotGroup: Send + Sync {
    fn id(&self) -> &str;
    /// Topological dimension n.
    fn dim(&self) -> usize;
    /// Horizontal rank m (number of frame fields).
    fn horizontal_rank(&self) -> usize;
    /// Homogeneous dimension Q = Σ wᵢ.
    fn homogeneous_dim(&self) -> u32;
    /// Dilation weights w₁…w_n; δ_r scales coordinate i by r^{wᵢ}.
    fn dilation_weights(&self) -> &[u32];
    /// Group product a·b written into `out`.
    fn multiply_into(&self, a: &[f64], b: &[f64], out: &mut [f64]);
    /// Group inverse a⁻¹ written into `out`.
    fn invert_into(&self, a: &[f64], out: &mut [f64]);
    /// Coefficients of Xᵢ(p) in the coordinate basis, written into `out`.
    fn frame_into(&self, i: usize, p: &[f64], out: &mut [f64]);
}

/// Abelian group ℝⁿ: vector addition, trivial dilations, standard frame.
pub struct Euclidean {
    n: usize,
    id: String,
    weights: Vec<u32>,
}

impl Euclidean {
    pub fn new(n: usize) -> Self {
        Euclidean {
            n,
            id: format!("euclidean{n}"),
            weights: vec![1; n],
        }
    }
}

impl CarnotGroup for Euclidean {
    fn id(&self) -> &str {
        &self.id
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn horizontal_rank(&self) -> usize {
        self.n
    }
    fn homogeneous_dim(&self) -> u32 {
        self.n as u32
    }
    fn dilation_weights(&self) -> &[u32] {
        &self.weights
    }
    fn multiply_into(&self, a: &[f64], b: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            out[i] = a[i] + b[i];
        }
    }
    fn invert_into(&self, a: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            out[i] = -a[i];
        }
    }
    fn frame_into(&self, i: usize, _p: &[f64], out: &mut [f64]) {
        out.fill(0.0);
        out[i] = 1.0;
    }
}

/// First Heisenberg group H¹ on ℝ³, law
/// (x,y,t)·(x',y',t') = (x+x', y+y', t+t'+(xy'−yx')/2),
/// dilations δ_r(x,y,t) = (rx, ry, r²t), Q = 4, frame
/// X₁ = ∂x − (y/2)∂t, X₂ = ∂y + (x/2)∂t.
pub struct Heisenberg1;

pub const HEISENBERG1_ID: &str = "heisenberg1";

impl CarnotGroup for Heisenberg1 {
    fn id(&self) -> &str {
        HEISENBERG1_ID
    }
    fn dim(&self) -> usize {
        3
    }
    fn horizontal_rank(&self) -> usize {
        2
    }
    fn homogeneous_dim(&self) -> u32 {
        4
    }
    fn dilation_weights(&self) -> &[u32] {
        &[1, 1, 2]
    }
    fn multiply_into(&self, a: &[f64], b: &[f64], out: &mut [f64]) {
        let t = a[2] + b[2] + 0.5 * (a[0] * b[1] - a[1] * b[0]);
        out[0] = a[0] + b[0];
        out[1] = a[1] + b[1];
        out[2] = t;
    }
    fn invert_into(&self, a: &[f64], out: &mut [f64]) {
        out[0] = -a[0];
        out[1] = -a[1];
        out[2] = -a[2];
    }
    fn frame_into(&self, i: usize, p: &[f64], out: &mut [f64]) {
        match i {
            0 => {
                out[0] = 1.0;
                out[1] = 0.0;
                out[2] = -0.5 * p[1];
            }
            1 => {
                out[0] = 0.0;
                out[1] = 1.0;
                out[2] = 0.5 * p[0];
            }
            _ => panic!("H¹ has horizontal rank 2, frame index {i} requested"),
        }
    }
}

/// User-assembled group from closures; also used for corrupted negative
/// controls in the validation tests.
pub struct CustomGroup {
    pub id: String,
    n: usize,
    m: usize,
    weights: Vec<u32>,
    q: u32,
    law: Box<dyn Fn(&[f64], &[f64], &mut [f64]) + Send + Sync>,
    inverse: Box<dyn Fn(&[f64], &mut [f64]) + Send + Sync>,
    frame: Box<dyn Fn(usize, &[f64], &mut [f64]) + Send + Sync>,
}

impl CustomGroup {
    pub fn new(
        id: impl Into<String>,
        n: usize,
        m: usize,
        weights: Vec<u32>,
        law: Box<dyn Fn(&[f64], &[f64], &mut [f64]) + Send + Sync>,
        inverse: Box<dyn Fn(&[f64], &mut [f64]) + Send + Sync>,
        frame: Box<dyn Fn(usize, &[f64], &mut [f64]) + Send + Sync>,
    ) -> Result<Self> {
        if n == 0 || m == 0 || m > n {
            return Err(Error::input(format!("need 1 ≤ m ≤ n, got n={n}, m={m}")));
        }
        if weights.len() != n || weights.iter().any(|&w| w == 0) {
            return Err(Error::input("need n positive dilation weights"));
        }
        let q: u32 = weights.iter().sum();
        Ok(CustomGroup {
            id: id.into(),
            n,
            m,
            weights,
            q,
            law,
            inverse,
            frame,
        })
    }
}

impl CarnotGroup for CustomGroup {
    fn id(&self) -> &str {
        &self.id
    }
    fn dim(&self) -> usize {
        self.n
    }
    fn horizontal_rank(&self) -> usize {
        self.m
    }
    fn homogeneous_dim(&self) -> u32 {
        self.q
    }
    fn dilation_weights(&self) -> &[u32] {
        &self.weights
    }
    fn multiply_into(&self, a: &[f64], b: &[f64], out: &mut [f64]) {
        (self.law)(a, b, out)
    }
    fn invert_into(&self, a: &[f64], out: &mut [f64]) {
        (self.inverse)(a, out)
    }
    fn frame_into(&self, i: usize, p: &[f64], out: &mut [f64]) {
        (self.frame)(i, p, out)
    }
}

pub const KNOWN_GROUP_IDS: [&str; 4] = ["euclidean1", "euclidean2", "euclidean3", "heisenberg1"];

/// Resolve a group by registry id.
pub fn group_by_id(id: &str) -> Result<Arc<dyn CarnotGroup>> {
    match id {
        "euclidean1" => Ok(Arc::new(Euclidean::new(1))),
        "euclidean2" => Ok(Arc::new(Euclidean::new(2))),
        "euclidean3" => Ok(Arc::new(Euclidean::new(3))),
        HEISENBERG1_ID => Ok(Arc::new(Heisenberg1)),
        other => Err(Error::UnknownId {
            kind: "group",
            id: other.to_string(),
            known: KNOWN_GROUP_IDS.join(", "),
        }),
    }
}

fn check_dim(g: &dyn CarnotGroup, p: &[f64], what: &str) -> Result<()> {
    if p.len() != g.dim() {
        return Err(Error::input(format!(
            "{what}: expected {}-vector for group {}, got length {}",
            g.dim(),
            g.id(),
            p.len()
        )));
    }
    Ok(())
}

/// Group product a·b.
pub fn group_multiply(g: &dyn CarnotGroup, a: &[f64], b: &[f64]) -> Result<Vec<f64>> {
    check_dim(g, a, "group_multiply lhs")?;
    check_dim(g, b, "group_multiply rhs")?;
    let mut out = vec![0.0; g.dim()];
    g.multiply_into(a, b, &mut out);
    Ok(out)
}

/// Group inverse a⁻¹.
pub fn group_inverse(g: &dyn CarnotGroup, a: &[f64]) -> Result<Vec<f64>> {
    check_dim(g, a, "group_inverse")?;
    let mut out = vec![0.0; g.dim()];
    g.invert_into(a, &mut out);
    Ok(out)
}

/// Anisotropic dilation δ_r(p); coordinate i scales by r^{wᵢ}.
pub fn dilate(g: &dyn CarnotGroup, r: f64, p: &[f64]) -> Result<Vec<f64>> {
    if !(r > 0.0) {
        return Err(Error::input(format!("dilation factor must be > 0, got {r}")));
    }
    check_dim(g, p, "dilate")?;
    Ok(dilate_unchecked(g, r, p))
}

pub(crate) fn dilate_unchecked(g: &dyn CarnotGroup, r: f64, p: &[f64]) -> Vec<f64> {
    g.dilation_weights()
        .iter()
        .zip(p)
        .map(|(&w, &x)| r.powi(w as i32) * x)
        .collect()
}

/// The frame X₁(p)…X_m(p) in the coordinate basis.
pub fn horizontal_frame_at(g: &dyn CarnotGroup, p: &[f64]) -> Result<Vec<Vec<f64>>> {
    check_dim(g, p, "horizontal_frame_at")?;
    let mut frame = Vec::with_capacity(g.horizontal_rank());
    for i in 0..g.horizontal_rank() {
        let mut v = vec![0.0; g.dim()];
        g.frame_into(i, p, &mut v);
        frame.push(v);
    }
    Ok(frame)
}

/// Jacobian of left translation L_a at p, by central differences of the
/// group law (step 1e−5 per coordinate).
fn left_translation_jacobian(g: &dyn CarnotGroup, a: &[f64], p: &[f64]) -> Vec<Vec<f64>> {
    let n = g.dim();
    let step = 1e-5;
    let mut cols = vec![vec![0.0; n]; n];
    let mut plus = vec![0.0; n];
    let mut minus = vec![0.0; n];
    let mut q = p.to_vec();
    for j in 0..n {
        q[j] = p[j] + step;
        g.multiply_into(a, &q, &mut plus);
        q[j] = p[j] - step;
        g.multiply_into(a, &q, &mut minus);
        q[j] = p[j];
        for r in 0..n {
            cols[j][r] = (plus[r] - minus[r]) / (2.0 * step);
        }
    }
    cols
}

/// Worst violations of the group axioms over random samples in [−3,3]ⁿ.
#[derive(Clone, Debug)]
pub struct GroupValidation {
    pub max_associativity: f64,
    pub max_identity: f64,
    pub max_inverse: f64,
    pub max_dilation_homomorphism: f64,
    pub max_dilation_composition: f64,
    pub max_left_invariance: f64,
    pub samples: usize,
}

impl GroupValidation {
    pub fn max_violation(&self) -> f64 {
        self.max_associativity
            .max(self.max_identity)
            .max(self.max_inverse)
            .max(self.max_dilation_homomorphism)
            .max(self.max_dilation_composition)
    }
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Sample the group axioms (associativity, identity, inverse, dilation
/// homomorphism and composition) plus left invariance of the frame, and
/// report the worst violations.
///
/// Violations are reported, not raised: a corrupted group produces a
/// failing [`VerificationReport`], not an error.
pub fn validate_group(g: &dyn CarnotGroup, samples: usize, seed: u64) -> Result<GroupValidation> {
    if samples < 1 {
        return Err(Error::input("validate_group needs samples ≥ 1"));
    }
    let n = g.dim();
    let mut rng = rng::stream(seed, &format!("validate_group/{}", g.id()));
    let mut draw_point = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()
    };

    let zero = vec![0.0; n];
    let mut v = GroupValidation {
        max_associativity: 0.0,
        max_identity: 0.0,
        max_inverse: 0.0,
        max_dilation_homomorphism: 0.0,
        max_dilation_composition: 0.0,
        max_left_invariance: 0.0,
        samples,
    };

    let mut ab = vec![0.0; n];
    let mut bc = vec![0.0; n];
    let mut lhs = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    for _ in 0..samples {
        let a = draw_point(&mut rng);
        let b = draw_point(&mut rng);
        let c = draw_point(&mut rng);

        // (a·b)·c = a·(b·c)
        g.multiply_into(&a, &b, &mut ab);
        g.multiply_into(&ab, &c, &mut lhs);
        g.multiply_into(&b, &c, &mut bc);
        g.multiply_into(&a, &bc, &mut rhs);
        v.max_associativity = v.max_associativity.max(max_abs_diff(&lhs, &rhs));

        // a·0 = a and 0·a = a
        g.multiply_into(&a, &zero, &mut lhs);
        v.max_identity = v.max_identity.max(max_abs_diff(&lhs, &a));
        g.multiply_into(&zero, &a, &mut lhs);
        v.max_identity = v.max_identity.max(max_abs_diff(&lhs, &a));

        // a·a⁻¹ = 0
        g.invert_into(&a, &mut tmp);
        g.multiply_into(&a, &tmp, &mut lhs);
        v.max_inverse = v.max_inverse.max(max_abs_diff(&lhs, &zero));

        // δ_r(a·b) = δ_r(a)·δ_r(b)
        let r = rng.gen_range(0.25..2.5);
        let lhs_d = dilate_unchecked(g, r, &ab);
        let da = dilate_unchecked(g, r, &a);
        let db = dilate_unchecked(g, r, &b);
        g.multiply_into(&da, &db, &mut rhs);
        v.max_dilation_homomorphism = v.max_dilation_homomorphism.max(max_abs_diff(&lhs_d, &rhs));

        // δ_r ∘ δ_s = δ_{rs}
        let s = rng.gen_range(0.25..2.5);
        let two_step = dilate_unchecked(g, r, &dilate_unchecked(g, s, &a));
        let one_step = dilate_unchecked(g, r * s, &a);
        v.max_dilation_composition = v.max_dilation_composition.max(max_abs_diff(&two_step, &one_step));

        // X_i(a·p) = d(L_a) X_i(p), with d(L_a) from finite differences.
        let p = c;
        g.multiply_into(&a, &p, &mut tmp);
        let jac = left_translation_jacobian(g, &a, &p);
        for i in 0..g.horizontal_rank() {
            g.frame_into(i, &p, &mut lhs); // X_i(p)
            g.frame_into(i, &tmp, &mut rhs); // X_i(a·p)
            for r in 0..n {
                let pushed: f64 = (0..n).map(|j| jac[j][r] * lhs[j]).sum();
                v.max_left_invariance = v.max_left_invariance.max((pushed - rhs[r]).abs());
            }
        }
    }
    Ok(v)
}

/// Wrap [`validate_group`] in a report: pass iff every algebraic violation
/// is below `tol` and the frame left-invariance residual is below 1e−6.
pub fn validate_group_report(
    g: &dyn CarnotGroup,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<VerificationReport> {
    let v = validate_group(g, samples, seed)?;
    let worst = v.max_violation();
    let mut report = VerificationReport {
        pass: worst <= tol && v.max_left_invariance <= 1e-6,
        ..VerificationReport::identity(format!("group-axioms/{}", g.id()), worst, 0.0, tol)
    };
    report.resolution = Resolution {
        samples: Some(samples as u64),
        seed: Some(seed),
        ..Resolution::default()
    };
    report.notes.push(format!(
        "assoc={:.2e} ident={:.2e} inv={:.2e} dil-hom={:.2e} dil-comp={:.2e} left-inv={:.2e}",
        v.max_associativity,
        v.max_identity,
        v.max_inverse,
        v.max_dilation_homomorphism,
        v.max_dilation_composition,
        v.max_left_invariance
    ));
    Ok(report)
}
