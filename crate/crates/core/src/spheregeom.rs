//! Sphere geometry for the covering argument and its empirical cross-checks.
//!
//! Two arithmetic regimes coexist here on purpose.  Exact rational points —
//! produced by inverse stereographic projection, which maps rational
//! parameters to rational unit vectors — feed the Schoenberg positivity form,
//! where "≥ 0" must hold with zero tolerance.  Floating-point configurations
//! feed randomized falsification: uniform sampling on the sphere has no exact
//! counterpart, and the quantities sampled (cap separations, master-sum
//! totals) are only ever compared against bounds with explicit float slack.
//!
//! The one analytic fact certified here is the cap-capacity lemma.  For
//! points `y_i, y_j` in the open spherical cap of radius π/4 about a common
//! center, with radial distances `a, b ∈ [0, π/4]` and included angle
//! `γ ∈ [0, π/2]`, the spherical law of cosines gives
//!
//! ```text
//!   cos dist(y_i, y_j) = cos a·cos b + sin a·sin b·cos γ.
//! ```
//!
//! Substituting `s = cos²a`, `τ = cos²b`, `w = cos γ` turns the right-hand
//! side into the algebraic function `g(s, τ, w) = √(sτ) + w·√((1−s)(1−τ))`
//! on the box `[1/2, 1]² × [0, 1]`, which dyadic interval arithmetic can
//! bound with no trigonometry.  Its infimum over the closed box is exactly
//! 1/2, attained only at the corner `s = τ = 1/2, w = 0` (that is,
//! `a = b = π/4, γ = π/2`), so on the *open* cap two such points are always
//! strictly closer than π/3 — no four cap points can be pairwise π/3-separated.
//!
//! Randomness is a hand-rolled splitmix64 stream.  Every trial derives its
//! own generator from `(seed, trial index)`, so reports are reproducible
//! bit-for-bit regardless of how trials are scheduled.

use std::fmt;

use crate::gegenbauer::GegenbauerExpansion;
use crate::rational::{
    rat, render_decimal, render_rational, DyadicInterval, Rational, RationalInterval,
};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum GeomError {
    /// Exact and float points cannot be mixed in one inner product.
    ModeMismatch,
    /// A claimed unit vector is not one (exact norm², rendered).
    NotUnit { index: usize, norm_sq: String },
    /// A float point strays from the unit sphere by more than 1e−12.
    NotUnitFloat { index: usize, norm: f64 },
    /// A configuration violates the pairwise separation invariant.
    SeparationViolated { i: usize, j: usize, inner: String },
    BadParameter(String),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::ModeMismatch => {
                write!(f, "inner product requires both points in the same mode")
            }
            GeomError::NotUnit { index, norm_sq } => {
                write!(f, "point {index} is not a unit vector: |x|^2 = {norm_sq}")
            }
            GeomError::NotUnitFloat { index, norm } => {
                write!(f, "point {index} is not unit within 1e-12: |x| = {norm}")
            }
            GeomError::SeparationViolated { i, j, inner } => {
                write!(f, "points {i} and {j} violate <x_i,x_j> <= 1/2: inner = {inner}")
            }
            GeomError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
        }
    }
}

impl std::error::Error for GeomError {}

/// How far a float point may stray from the unit sphere.
const FLOAT_UNIT_TOL: f64 = 1e-12;
/// Pairwise-separation tolerance for float configurations.
const FLOAT_SEP_TOL: f64 = 1e-9;

// --------------------------------------------------------------------------
// Points and configurations
// --------------------------------------------------------------------------

/// A point on S², in one of two arithmetic modes.
#[derive(Debug, Clone, PartialEq)]
pub enum SpherePoint {
    /// Coordinates are exact rationals with `Σ x² = 1` exactly.
    Exact([Rational; 3]),
    /// Coordinates are floats with `|x|` within 1e−12 of 1.
    Float([f64; 3]),
}

/// An inner product, in the mode of its operands.
#[derive(Debug, Clone, PartialEq)]
pub enum InnerProduct {
    Exact(Rational),
    Float(f64),
}

impl InnerProduct {
    pub fn to_f64(&self) -> f64 {
        match self {
            InnerProduct::Exact(r) => crate::rational::to_f64(r),
            InnerProduct::Float(x) => *x,
        }
    }
}

impl SpherePoint {
    /// Exact-mode constructor; verifies the unit equation exactly.
    pub fn exact(coords: [Rational; 3]) -> Result<Self, GeomError> {
        let norm_sq: Rational = coords.iter().map(|c| c * c).sum();
        if !norm_sq.is_one() {
            return Err(GeomError::NotUnit { index: 0, norm_sq: render_rational(&norm_sq) });
        }
        Ok(SpherePoint::Exact(coords))
    }

    /// Float-mode constructor; verifies `|x| = 1` within 1e−12.
    pub fn float(coords: [f64; 3]) -> Result<Self, GeomError> {
        let norm = dot3(&coords, &coords).sqrt();
        if !((norm - 1.0).abs() <= FLOAT_UNIT_TOL) {
            return Err(GeomError::NotUnitFloat { index: 0, norm });
        }
        Ok(SpherePoint::Float(coords))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SpherePoint::Exact(_))
    }

    /// Coordinates as floats (exact mode converts).
    pub fn coords_f64(&self) -> [f64; 3] {
        match self {
            SpherePoint::Exact(c) => {
                [crate::rational::to_f64(&c[0]), crate::rational::to_f64(&c[1]), crate::rational::to_f64(&c[2])]
            }
            SpherePoint::Float(c) => *c,
        }
    }
}

/// `⟨u, v⟩`, exact when both points are exact.  Mixing modes is an error
/// rather than a silent conversion: a float product would masquerade as
/// exact evidence.
pub fn inner(u: &SpherePoint, v: &SpherePoint) -> Result<InnerProduct, GeomError> {
    match (u, v) {
        (SpherePoint::Exact(a), SpherePoint::Exact(b)) => {
            let dot: Rational = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
            Ok(InnerProduct::Exact(dot))
        }
        (SpherePoint::Float(a), SpherePoint::Float(b)) => Ok(InnerProduct::Float(dot3(a, b))),
        _ => Err(GeomError::ModeMismatch),
    }
}

/// A kissing-type configuration: pairwise inner products at most
/// `min_cos_sep` (default 1/2, i.e. angular separation ≥ π/3).  The
/// invariant is checked exactly in exact mode and with 1e−9 slack in float
/// mode.
#[derive(Debug, Clone)]
pub struct Configuration {
    points: Vec<SpherePoint>,
    min_cos_sep: Rational,
}

impl Configuration {
    pub fn new(points: Vec<SpherePoint>) -> Result<Self, GeomError> {
        Self::with_min_cos_sep(points, rat(1, 2))
    }

    pub fn with_min_cos_sep(
        points: Vec<SpherePoint>,
        min_cos_sep: Rational,
    ) -> Result<Self, GeomError> {
        let sep_f = crate::rational::to_f64(&min_cos_sep);
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                match inner(&points[i], &points[j])? {
                    InnerProduct::Exact(d) => {
                        if d > min_cos_sep {
                            return Err(GeomError::SeparationViolated {
                                i,
                                j,
                                inner: render_rational(&d),
                            });
                        }
                    }
                    InnerProduct::Float(d) => {
                        if d > sep_f + FLOAT_SEP_TOL {
                            return Err(GeomError::SeparationViolated {
                                i,
                                j,
                                inner: format!("{d:.12}"),
                            });
                        }
                    }
                }
            }
        }
        Ok(Configuration { points, min_cos_sep })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn min_cos_sep(&self) -> &Rational {
        &self.min_cos_sep
    }

    /// Largest pairwise inner product, as a float (−2.0 for < 2 points).
    pub fn max_pairwise_inner(&self) -> f64 {
        let mut worst = -2.0f64;
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                let d = inner(&self.points[i], &self.points[j])
                    .expect("configuration points share a mode")
                    .to_f64();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Per-point master sums `Σ_j f(⟨x_i, x_j⟩)` (diagonal included), in
    /// float arithmetic.
    pub fn master_sums(&self, f: &GegenbauerExpansion) -> Vec<f64> {
        let n = self.points.len();
        let mut sums = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                let d = if i == j {
                    1.0
                } else {
                    inner(&self.points[i], &self.points[j])
                        .expect("configuration points share a mode")
                        .to_f64()
                };
                sums[i] += f.eval_f64(d);
            }
        }
        sums
    }

    /// Deterministic text dump: one coordinate triple per line (exact
    /// `num/den` or 12-digit decimals), then the pairwise inner-product
    /// matrix in the same rendering.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("points {}\n", self.points.len()));
        for p in &self.points {
            match p {
                SpherePoint::Exact(c) => {
                    out.push_str(&format!(
                        "{} {} {}\n",
                        render_rational(&c[0]),
                        render_rational(&c[1]),
                        render_rational(&c[2])
                    ));
                }
                SpherePoint::Float(c) => {
                    out.push_str(&format!("{:.12} {:.12} {:.12}\n", c[0], c[1], c[2]));
                }
            }
        }
        out.push_str("inner products\n");
        for i in 0..self.points.len() {
            let mut row = Vec::with_capacity(self.points.len());
            for j in 0..self.points.len() {
                if i == j {
                    row.push("1".to_string());
                    continue;
                }
                match inner(&self.points[i], &self.points[j]).expect("same mode") {
                    InnerProduct::Exact(d) => row.push(render_rational(&d)),
                    InnerProduct::Float(d) => row.push(format!("{d:.12}")),
                }
            }
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

// --------------------------------------------------------------------------
// Exact rational points via inverse stereographic projection
// --------------------------------------------------------------------------

/// Inverse stereographic projection from the south pole:
/// `(a, b) ↦ (2a, 2b, a² + b² − 1) / (a² + b² + 1)`, exactly unit for every
/// rational pair.
pub fn rational_sphere_point(a: &Rational, b: &Rational) -> SpherePoint {
    let v = rational_unit_vector(&[a.clone(), b.clone()]);
    let mut it = v.into_iter();
    let coords = [
        it.next().expect("three coordinates"),
        it.next().expect("three coordinates"),
        it.next().expect("three coordinates"),
    ];
    SpherePoint::Exact(coords)
}

/// General-dimension version: `d − 1` rational parameters give an exact
/// rational unit vector in `R^d`  (`d = params.len() + 1`).  With
/// `s = Σ aᵢ²` the image is `(2a₁, …, 2a_{d−1}, s − 1) / (s + 1)`; the unit
/// equation `4s + (s−1)² = (s+1)²` is an algebraic identity, so exactness
/// needs no checking — but the constructor-facing callers re-verify anyway.
pub fn rational_unit_vector(params: &[Rational]) -> Vec<Rational> {
    let s: Rational = params.iter().map(|a| a * a).sum();
    let den = &s + Rational::one();
    let mut out: Vec<Rational> = params.iter().map(|a| rat(2, 1) * a / &den).collect();
    out.push((&s - Rational::one()) / &den);
    out
}

// --------------------------------------------------------------------------
// Spherical law of cosines and the cap-capacity lemma
// --------------------------------------------------------------------------

/// Cosine of the side opposite `gamma` in a spherical triangle with sides
/// `a, b` and included angle `gamma` (all in radians; float arithmetic).
pub fn spherical_cos_rule(a: f64, b: f64, gamma: f64) -> f64 {
    a.cos() * b.cos() + a.sin() * b.sin() * gamma.cos()
}

/// Precision of the cap-lemma interval arithmetic.  Even, so that the exact
/// dyadic square roots in the corner evaluation stay exact.
const CAP_BITS: u32 = 64;

/// `g(s, τ, w) = √(sτ) + w·√((1−s)(1−τ))` on a sub-box of
/// `[1/2, 1]² × [0, 1]` — the cos-rule in squared-cosine variables.
fn cap_rule_enclosure(s: &DyadicInterval, t: &DyadicInterval, w: &DyadicInterval) -> DyadicInterval {
    let one = DyadicInterval::from_point(&Rational::one(), CAP_BITS);
    let radial = s.mul(t).sqrt().expect("s, τ ≥ 0 on the cap box");
    let transverse = one
        .sub(s)
        .mul(&one.sub(t))
        .sqrt()
        .expect("(1−s)(1−τ) ≥ 0 on the cap box");
    radial.add(&w.mul(&transverse))
}

/// Result of the analytic branch-and-bound on the cap inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct CapInfCertificate {
    /// Certified enclosure of `inf g` over the closed box; the infimum is
    /// exactly 1/2, so a sound run reports `[1/2, 1/2]`.
    pub enclosure: RationalInterval,
    /// Interval evaluations performed.
    pub nodes: u64,
    /// Every leaf certified `g ≥ 1/2`; false only if `max_depth` ran out.
    pub certified: bool,
}

/// Branch-and-bound proof that `g ≥ 1/2` on `[1/2, 1]² × [0, 1]`.
///
/// Both terms of `g` are coordinatewise monotone toward the same corner, so
/// the naive interval bound at the root is already exact — `√(¼) = ½` lands
/// on the dyadic grid — and the recursion certifies without splitting.  The
/// subdivision machinery is kept anyway: it is what makes the certificate
/// robust to a reformulation of `g`, and a depth-capped failure degrades to
/// an honest (wider) enclosure instead of a false claim.
pub fn certify_cap_inf(max_depth: u32) -> CapInfCertificate {
    let half = rat(1, 2);
    let box_s = RationalInterval::new(half.clone(), Rational::one()).expect("ordered");
    let box_w = RationalInterval::new(Rational::zero(), Rational::one()).expect("ordered");
    let target = DyadicInterval::from_point(&half, CAP_BITS);

    let mut nodes: u64 = 0;
    let mut certified = true;
    let mut min_lo: Option<Rational> = None;
    let mut stack = vec![(box_s.clone(), box_s.clone(), box_w, 0u32)];
    while let Some((s, t, w, depth)) = stack.pop() {
        let enc = cap_rule_enclosure(
            &DyadicInterval::from_interval(&s, CAP_BITS),
            &DyadicInterval::from_interval(&t, CAP_BITS),
            &DyadicInterval::from_interval(&w, CAP_BITS),
        );
        nodes += 1;
        if enc.mantissa_lo() >= target.mantissa_lo() {
            let lo = enc.lo_rational();
            min_lo = Some(match min_lo {
                Some(m) => m.min(lo),
                None => lo,
            });
            continue;
        }
        if depth >= max_depth {
            certified = false;
            let lo = enc.lo_rational();
            min_lo = Some(match min_lo {
                Some(m) => m.min(lo),
                None => lo,
            });
            continue;
        }
        // Split the widest coordinate.
        let (ws, wt, ww) = (s.width(), t.width(), w.width());
        if ws >= wt && ws >= ww {
            let (a, b) = s.bisect();
            stack.push((a, t.clone(), w.clone(), depth + 1));
            stack.push((b, t, w, depth + 1));
        } else if wt >= ww {
            let (a, b) = t.bisect();
            stack.push((s.clone(), a, w.clone(), depth + 1));
            stack.push((s, b, w, depth + 1));
        } else {
            let (a, b) = w.bisect();
            stack.push((s.clone(), t.clone(), a, depth + 1));
            stack.push((s, t, b, depth + 1));
        }
    }

    // Attained upper bound: the corner s = τ = 1/2, w = 0, where the dyadic
    // evaluation is exact and equals 1/2.
    let corner = cap_rule_enclosure(
        &DyadicInterval::from_point(&half, CAP_BITS),
        &DyadicInterval::from_point(&half, CAP_BITS),
        &DyadicInterval::from_point(&Rational::zero(), CAP_BITS),
    );
    let lo = min_lo.expect("at least the root was processed");
    let hi = corner.hi_rational();
    CapInfCertificate {
        enclosure: RationalInterval::new(lo.min(hi.clone()), hi).expect("ordered"),
        nodes,
        certified,
    }
}

/// Combined cap-lemma report: the analytic certificate plus randomized
/// 4-point sampling in the open cap.
#[derive(Debug, Clone, PartialEq)]
pub struct CapLemmaReport {
    pub analytic: CapInfCertificate,
    pub samples: u64,
    /// Sampled 4-point sets whose six pairwise inner products were all
    /// ≤ 1/2 − 1e−12, i.e. pairwise separation ≥ π/3 strictly inside the
    /// cap.  The lemma says this must stay 0.
    pub counterexamples: u64,
    /// Smallest over samples of the largest pairwise inner product — how
    /// close any sample came to a counterexample (the lemma forces > 1/2).
    pub closest_max_inner: f64,
}

/// Uniform point in the open cap `z > √2/2` about the north pole
/// (z-coordinate uniform on the cap's range, azimuth uniform).
fn sample_open_cap(rng: &mut SplitMix64) -> [f64; 3] {
    let cap_floor = std::f64::consts::FRAC_1_SQRT_2;
    let mut u = rng.next_f64();
    while u == 0.0 {
        u = rng.next_f64(); // keep the cap open at its boundary
    }
    let z = cap_floor + (1.0 - cap_floor) * u;
    let phi = std::f64::consts::TAU * rng.next_f64();
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

pub fn verify_cap_lemma(samples: u64, seed: u64) -> CapLemmaReport {
    let analytic = certify_cap_inf(40);
    let mut counterexamples = 0u64;
    let mut closest = f64::INFINITY;
    for trial in 0..samples {
        let mut rng = SplitMix64::for_trial(seed, trial);
        let pts: Vec<[f64; 3]> = (0..4).map(|_| sample_open_cap(&mut rng)).collect();
        let mut max_dot = -2.0f64;
        for i in 0..4 {
            for j in (i + 1)..4 {
                max_dot = max_dot.max(dot3(&pts[i], &pts[j]));
            }
        }
        if max_dot <= 0.5 - 1e-12 {
            counterexamples += 1;
        }
        closest = closest.min(max_dot);
    }
    CapLemmaReport { analytic, samples, counterexamples, closest_max_inner: closest }
}

// --------------------------------------------------------------------------
// Icosahedron witness
// --------------------------------------------------------------------------

/// The 12 vertices of a regular icosahedron: cyclic permutations of
/// `(0, ±1, ±φ)` normalized by `√(1 + φ²)`.  Pairwise inner products are
/// `±1/√5` and `−1`, so the minimal separation is `arccos(1/√5) ≈ 63.43° >
/// 60°` — the classical witness that 12 spheres fit.
pub fn icosahedron_witness() -> Configuration {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let norm = (1.0 + phi * phi).sqrt();
    let mut points = Vec::with_capacity(12);
    for &s1 in &[1.0f64, -1.0] {
        for &s2 in &[1.0f64, -1.0] {
            let (a, b) = (s1 / norm, s2 * phi / norm);
            points.push(SpherePoint::float([0.0, a, b]).expect("unit by construction"));
            points.push(SpherePoint::float([a, b, 0.0]).expect("unit by construction"));
            points.push(SpherePoint::float([b, 0.0, a]).expect("unit by construction"));
        }
    }
    Configuration::new(points).expect("icosahedron satisfies the separation invariant")
}

// --------------------------------------------------------------------------
// Randomized stress testing
// --------------------------------------------------------------------------

/// Outcome of `config_stress`: the worst master-sum value over the valid
/// trials, plus how many trials the sampler failed to complete.
#[derive(Debug, Clone, PartialEq)]
pub struct StressReport {
    pub n_points: usize,
    pub trials: u64,
    pub valid_trials: u64,
    /// Trials where the sampler could not reach a valid configuration
    /// within its sweep budget (dense cases like n = 12 may exhaust).
    pub exhausted_trials: u64,
    /// Max over valid trials of `max_i Σ_j f(⟨x_i, x_j⟩)`; −∞ if none.
    pub worst_sum: f64,
    /// First trial index attaining `worst_sum` (u64::MAX if none).
    pub worst_trial: u64,
}

/// Repulsion sweeps per trial before declaring the sampler exhausted.
const STRESS_SWEEPS: usize = 600;
/// The sampler aims below the separation bound by this slack so the final
/// validation (tolerance 1e−9) is comfortably met.
const STRESS_TARGET: f64 = 0.5 - 1e-4;

/// One trial: n uniform points, then deterministic pairwise repulsion until
/// every inner product is at most `STRESS_TARGET`.
fn sample_configuration(rng: &mut SplitMix64, n: usize) -> Option<Vec<[f64; 3]>> {
    let mut pts: Vec<[f64; 3]> = (0..n).map(|_| sample_unit(rng)).collect();
    for _ in 0..STRESS_SWEEPS {
        let mut worst = -2.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                worst = worst.max(dot3(&pts[i], &pts[j]));
            }
        }
        if worst <= STRESS_TARGET {
            return Some(pts);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let d = dot3(&pts[i], &pts[j]);
                if d <= STRESS_TARGET {
                    continue;
                }
                if d > 0.999 {
                    // Near-coincident pair: push j along a deterministic
                    // tangent (repulsion direction is degenerate).
                    let t = least_aligned_tangent(&pts[j]);
                    pts[j] = normalize3(&[
                        pts[j][0] + 0.1 * t[0],
                        pts[j][1] + 0.1 * t[1],
                        pts[j][2] + 0.1 * t[2],
                    ]);
                    continue;
                }
                let step = (d - STRESS_TARGET).min(0.5) * 0.8;
                let (pi, pj) = (pts[i], pts[j]);
                pts[i] = normalize3(&[
                    pi[0] + step * (pi[0] - pj[0]),
                    pi[1] + step * (pi[1] - pj[1]),
                    pi[2] + step * (pi[2] - pj[2]),
                ]);
                pts[j] = normalize3(&[
                    pj[0] + step * (pj[0] - pi[0]),
                    pj[1] + step * (pj[1] - pi[1]),
                    pj[2] + step * (pj[2] - pi[2]),
                ]);
            }
        }
    }
    None
}

/// Randomized stress test of the master inequality: samples valid
/// configurations and reports the worst observed `max_i Σ_j f(⟨x_i, x_j⟩)`,
/// which the theorem keeps at or below the threshold 1.23.
pub fn config_stress(
    n_points: usize,
    trials: u64,
    seed: u64,
    f: &GegenbauerExpansion,
) -> Result<StressReport, GeomError> {
    if n_points == 0 || n_points > 12 {
        return Err(GeomError::BadParameter(format!(
            "n_points must be in 1..=12 (valid configurations exist), got {n_points}"
        )));
    }
    if trials == 0 {
        return Err(GeomError::BadParameter("trials must be >= 1".into()));
    }
    let mut report = StressReport {
        n_points,
        trials,
        valid_trials: 0,
        exhausted_trials: 0,
        worst_sum: f64::NEG_INFINITY,
        worst_trial: u64::MAX,
    };
    for trial in 0..trials {
        let mut rng = SplitMix64::for_trial(seed, trial);
        let Some(pts) = sample_configuration(&mut rng, n_points) else {
            report.exhausted_trials += 1;
            continue;
        };
        report.valid_trials += 1;
        let mut trial_worst = f64::NEG_INFINITY;
        for i in 0..n_points {
            let mut sum = 0.0;
            for j in 0..n_points {
                let d = if i == j { 1.0 } else { dot3(&pts[i], &pts[j]) };
                sum += f.eval_f64(d);
            }
            trial_worst = trial_worst.max(sum);
        }
        if trial_worst > report.worst_sum {
            report.worst_sum = trial_worst;
            report.worst_trial = trial;
        }
    }
    Ok(report)
}

/// Random exact-rational configuration for Proposition-1 tests: `n` unit
/// vectors in `R^d` from small random stereographic parameters.  No
/// separation constraint — Schoenberg positivity holds for *every* point
/// set.
pub fn random_exact_configuration(rng: &mut SplitMix64, n: usize, d: u32) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|_| {
            let params: Vec<Rational> = (0..d - 1)
                .map(|_| {
                    let num = rng.next_below(19) as i64 - 9;
                    let den = 1 + rng.next_below(9) as i64;
                    rat(num, den)
                })
                .collect();
            rational_unit_vector(&params)
        })
        .collect()
}

// --------------------------------------------------------------------------
// splitmix64
// --------------------------------------------------------------------------

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The splitmix64 sequence: state advances by the golden-ratio increment and
/// each output is the mix64 finalizer of the new state.  Chosen because the
/// whole generator fits in a dozen lines, has no hidden global state, and
/// its integer stream is reproducible across languages and platforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for one trial: the trial index is scrambled
    /// through the finalizer before combining with the seed, so distinct
    /// trials start far apart in state space (not merely offset along one
    /// orbit, which would overlap streams).
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        SplitMix64 { state: mix64(seed.wrapping_add(mix64(trial.wrapping_mul(GOLDEN_GAMMA)))) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n` (n ≥ 1).  Plain modulo: the bias at n ≪ 2⁶⁴ is far
    /// below anything these samplers can resolve.
    pub fn next_below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

// --------------------------------------------------------------------------
// float vector helpers
// --------------------------------------------------------------------------

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn normalize3(v: &[f64; 3]) -> [f64; 3] {
    let n = dot3(v, v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

/// Uniform point on S² (z uniform, azimuth uniform).
fn sample_unit(rng: &mut SplitMix64) -> [f64; 3] {
    let z = 2.0 * rng.next_f64() - 1.0;
    let phi = std::f64::consts::TAU * rng.next_f64();
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// Deterministic unit tangent at `p`: project out the coordinate axis least
/// aligned with `p`.
fn least_aligned_tangent(p: &[f64; 3]) -> [f64; 3] {
    let abs = [p[0].abs(), p[1].abs(), p[2].abs()];
    let k = if abs[0] <= abs[1] && abs[0] <= abs[2] {
        0
    } else if abs[1] <= abs[2] {
        1
    } else {
        2
    };
    let mut e = [0.0f64; 3];
    e[k] = 1.0;
    let d = dot3(&e, p);
    normalize3(&[e[0] - d * p[0], e[1] - d * p[1], e[2] - d * p[2]])
}

/// Exact Gram matrix of a configuration given as raw rational vectors.
pub fn gram_matrix(points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = points.len();
    let mut g = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            g[i][j] = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
        }
    }
    g
}

/// Renders a stress/cap report line decimal (12 significant digits), used by
/// the CLI so library and CLI agree on formatting.
pub fn render_report_decimal(x: &Rational) -> String {
    render_decimal(x, 12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gegenbauer::positivity_quadform;
    use crate::proofcheck::certificate_f;
    use crate::rational::parse_rational;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn splitmix_matches_reference_vector() {
        // First outputs for seed 0 of the standard splitmix64.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn trial_streams_are_distinct_and_deterministic() {
        let mut a1 = SplitMix64::for_trial(7, 0);
        let mut a2 = SplitMix64::for_trial(7, 0);
        let mut b = SplitMix64::for_trial(7, 1);
        let s1: Vec<u64> = (0..8).map(|_| a1.next_u64()).collect();
        let s2: Vec<u64> = (0..8).map(|_| a2.next_u64()).collect();
        let s3: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_eq!(s1, s2);
        assert_ne!(s1, s3);
    }

    #[test]
    fn stereographic_examples() {
        let p = rational_sphere_point(&rat(0, 1), &rat(0, 1));
        assert_eq!(p, SpherePoint::Exact([rat(0, 1), rat(0, 1), rat(-1, 1)]));
        let p = rational_sphere_point(&rat(1, 1), &rat(0, 1));
        assert_eq!(p, SpherePoint::Exact([rat(1, 1), rat(0, 1), rat(0, 1)]));
        let p = rational_sphere_point(&rat(1, 1), &rat(1, 1));
        assert_eq!(p, SpherePoint::Exact([r("2/3"), r("2/3"), r("1/3")]));
    }

    proptest! {
        #[test]
        fn stereographic_points_are_exactly_unit(
            nums in prop::collection::vec(-50i64..=50, 2..=4),
            dens in prop::collection::vec(1i64..=50, 2..=4),
        ) {
            let k = nums.len().min(dens.len());
            let params: Vec<Rational> =
                (0..k).map(|i| rat(nums[i], dens[i])).collect();
            let v = rational_unit_vector(&params);
            prop_assert_eq!(v.len(), k + 1);
            let norm_sq: Rational = v.iter().map(|c| c * c).sum();
            prop_assert!(norm_sq.is_one());
        }
    }

    #[test]
    fn inner_product_examples() {
        let p = rational_sphere_point(&rat(1, 1), &rat(1, 1));
        assert_eq!(inner(&p, &p).unwrap(), InnerProduct::Exact(rat(1, 1)));
        let south = rational_sphere_point(&rat(0, 1), &rat(0, 1));
        let north = SpherePoint::exact([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(inner(&south, &north).unwrap(), InnerProduct::Exact(rat(-1, 1)));
        assert_eq!(inner(&p, &south).unwrap(), InnerProduct::Exact(r("-1/3")));
    }

    #[test]
    fn mixed_modes_are_rejected() {
        let e = rational_sphere_point(&rat(0, 1), &rat(0, 1));
        let f = SpherePoint::float([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(inner(&e, &f), Err(GeomError::ModeMismatch));
    }

    #[test]
    fn exact_constructor_rejects_non_unit() {
        assert!(matches!(
            SpherePoint::exact([rat(1, 2), rat(1, 2), rat(1, 2)]),
            Err(GeomError::NotUnit { .. })
        ));
        assert!(matches!(
            SpherePoint::float([0.5, 0.5, 0.5]),
            Err(GeomError::NotUnitFloat { .. })
        ));
    }

    #[test]
    fn cos_rule_examples() {
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
        assert!(spherical_cos_rule(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).abs() < 1e-15);
        // Boundary case of the cap lemma: distance exactly π/3.
        assert!((spherical_cos_rule(FRAC_PI_4, FRAC_PI_4, FRAC_PI_2) - 0.5).abs() < 1e-15);
        assert!((spherical_cos_rule(FRAC_PI_4, FRAC_PI_4, 0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cos_rule_dominates_radial_term_on_grid() {
        // cos a cos b + sin a sin b cos γ ≥ cos a cos b for γ ≤ π/2.
        use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
        for i in 0..=20 {
            for j in 0..=20 {
                for k in 0..=20 {
                    let a = FRAC_PI_4 * i as f64 / 20.0;
                    let b = FRAC_PI_4 * j as f64 / 20.0;
                    let g = FRAC_PI_2 * k as f64 / 20.0;
                    assert!(spherical_cos_rule(a, b, g) >= a.cos() * b.cos() - 1e-15);
                }
            }
        }
    }

    #[test]
    fn cap_inf_certified_exactly_at_one_half() {
        let cert = certify_cap_inf(40);
        assert!(cert.certified);
        // The enclosure is exactly [1/2, 1/2]: the infimum is attained.
        assert_eq!(cert.enclosure.lo(), &rat(1, 2));
        assert_eq!(cert.enclosure.hi(), &rat(1, 2));
        // Monotonicity toward the corner certifies at the root.
        assert_eq!(cert.nodes, 1);
    }

    #[test]
    fn cap_sampling_finds_no_counterexample() {
        let report = verify_cap_lemma(2000, 7);
        assert_eq!(report.counterexamples, 0);
        assert_eq!(report.samples, 2000);
        // Every 4-point sample has some pair with inner product > 1/2.
        assert!(report.closest_max_inner > 0.5);
    }

    #[test]
    fn cap_report_is_deterministic() {
        let a = verify_cap_lemma(500, 42);
        let b = verify_cap_lemma(500, 42);
        assert_eq!(a, b);
        let c = verify_cap_lemma(500, 43);
        assert!(c.closest_max_inner != a.closest_max_inner || c.counterexamples == 0);
    }

    #[test]
    fn icosahedron_structure() {
        let cfg = icosahedron_witness();
        assert_eq!(cfg.len(), 12);
        let inv_sqrt5 = 1.0 / 5.0f64.sqrt();
        let mut max_inner = -2.0f64;
        for i in 0..12 {
            for j in (i + 1)..12 {
                let d = inner(&cfg.points()[i], &cfg.points()[j]).unwrap().to_f64();
                let near_known = (d - inv_sqrt5).abs() < 1e-12
                    || (d + inv_sqrt5).abs() < 1e-12
                    || (d + 1.0).abs() < 1e-12;
                assert!(near_known, "unexpected inner product {d}");
                max_inner = max_inner.max(d);
            }
        }
        // Minimal separation arccos(1/√5) ≈ 63.43°.
        assert!((max_inner - inv_sqrt5).abs() < 1e-12);
        assert!(max_inner < 0.5);
    }

    #[test]
    fn icosahedron_master_sums_stay_below_threshold() {
        let cfg = icosahedron_witness();
        let f = certificate_f();
        let sums = cfg.master_sums(&f);
        assert_eq!(sums.len(), 12);
        // Each vertex sees 5 neighbors at ±1/√5 and one antipode:
        // f(1) + 5 f(1/√5) + 5 f(−1/√5) + f(−1) ≈ 1.13590428.
        for s in &sums {
            assert!((s - 1.13590428).abs() < 1e-7, "sum {s}");
            assert!(*s <= 1.23 + 1e-9);
        }
    }

    #[test]
    fn configuration_invariant_is_enforced() {
        let north = SpherePoint::float([0.0, 0.0, 1.0]).unwrap();
        let nearby = SpherePoint::float([0.1f64.sin(), 0.0, 0.1f64.cos()]).unwrap();
        assert!(matches!(
            Configuration::new(vec![north.clone(), nearby]),
            Err(GeomError::SeparationViolated { .. })
        ));
        let south = SpherePoint::float([0.0, 0.0, -1.0]).unwrap();
        let cfg = Configuration::new(vec![north, south]).unwrap();
        assert_eq!(cfg.len(), 2);
    }

    #[test]
    fn antipodal_pair_master_sum_matches_coefficient_sums() {
        let north = SpherePoint::float([0.0, 0.0, 1.0]).unwrap();
        let south = SpherePoint::float([0.0, 0.0, -1.0]).unwrap();
        let cfg = Configuration::new(vec![north, south]).unwrap();
        let sums = cfg.master_sums(&certificate_f());
        // f(1) + f(−1) = 1.22999782 exactly (float evaluation here).
        for s in sums {
            assert!((s - 1.22999782).abs() < 1e-9, "sum {s}");
        }
    }

    #[test]
    fn stress_single_point_gives_f_at_one() {
        let rep = config_stress(1, 5, 11, &certificate_f()).unwrap();
        assert_eq!(rep.valid_trials, 5);
        assert!((rep.worst_sum - 0.99999853).abs() < 1e-9);
    }

    #[test]
    fn stress_small_configurations_respect_threshold() {
        let rep = config_stress(5, 20, 3, &certificate_f()).unwrap();
        assert_eq!(rep.exhausted_trials + rep.valid_trials, 20);
        assert!(rep.valid_trials > 0);
        assert!(rep.worst_sum <= 1.23 + 1e-9, "worst {}", rep.worst_sum);
    }

    #[test]
    fn stress_full_twelve_points() {
        let rep = config_stress(12, 10, 5, &certificate_f()).unwrap();
        assert!(rep.valid_trials > 0, "sampler exhausted on all trials");
        assert!(rep.worst_sum <= 1.23 + 1e-9, "worst {}", rep.worst_sum);
    }

    #[test]
    fn stress_is_deterministic() {
        let a = config_stress(4, 10, 9, &certificate_f()).unwrap();
        let b = config_stress(4, 10, 9, &certificate_f()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn stress_parameter_validation() {
        assert!(config_stress(0, 1, 0, &certificate_f()).is_err());
        assert!(config_stress(13, 1, 0, &certificate_f()).is_err());
        assert!(config_stress(3, 0, 0, &certificate_f()).is_err());
    }

    #[test]
    fn proposition_one_bridge_is_exact() {
        // Schoenberg positivity over random exact configurations, d = 3 and
        // d = 4, arbitrary point counts — zero tolerance.
        let mut rng = SplitMix64::new(123);
        for trial in 0..24 {
            let d = if trial % 2 == 0 { 3 } else { 4 };
            let n = 1 + (trial % 7);
            let pts = random_exact_configuration(&mut rng, n, d);
            for p in &pts {
                let norm_sq: Rational = p.iter().map(|c| c * c).sum();
                assert!(norm_sq.is_one());
            }
            let k = (trial % 9) as u32;
            let q = positivity_quadform(&pts, d, k).unwrap();
            assert!(q >= Rational::zero(), "trial {trial}: quadform negative");
        }
    }

    #[test]
    fn dump_round_trips_shape() {
        let cfg = Configuration::new(vec![
            rational_sphere_point(&rat(0, 1), &rat(0, 1)),
            SpherePoint::exact([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap(),
        ])
        .unwrap();
        let dump = cfg.dump();
        assert!(dump.starts_with("points 2\n"));
        assert!(dump.contains("inner products"));
        assert!(dump.contains("-1"));
        // Deterministic: identical configurations render identically.
        assert_eq!(dump, cfg.dump());
    }
}
