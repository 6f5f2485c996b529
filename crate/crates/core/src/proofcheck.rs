//! Certification of the six analytic claims behind the LP proof that the
//! kissing number in dimension 3 is 12, and assembly of a reproducible
//! certificate.
//!
//! The proof works with a degree-9 expansion `f = Σ c_k G_k^{(3)}` (Legendre
//! basis) with nonnegative coefficients and threshold `θ = 1.23`.  Writing
//! `b = −1/√2` for the cosine radius of the covering caps,
//! `I = [−cos(π/12), b]` and `J = [−√2/4 − 1/2, −√(2/3)]`, the claims are:
//!
//! * **A** `f(t) ≤ 0` on `[b, 1/2]` (negativity on the far range);
//! * **B** `f(1) + max f on [−1, b] ≤ θ` (one point deep in a cap);
//! * **C** `f′ ≤ 0` on `I` (monotonicity used by the two-point case);
//! * **D** `f(1) + max (f(t) + f(α(t))) on I ≤ θ` where
//!   `α(t) = t/2 − (√3/2)√(1−t²)` (two points sharing a cap);
//! * **E** `f′ ≤ 0` and `f″ ≥ 0` on `[−√2/4 − 1/2, b]` (shape conditions
//!   for the three-point reduction);
//! * **F** `f(1) + max (2f(t) + f(β(t))) on J ≤ θ` where
//!   `β(t) = (2t − 2√(3/2 − 2t²))/3` (three points sharing a cap).
//!
//! With all six certified and `c_k ≥ 0`, summing `Σ_{i,j} f(⟨x_i,x_j⟩) ≥
//! N·c_0` over any kissing configuration and bounding each point's row by θ
//! gives `N ≤ θ/c_0 = 123000000/9465869 < 13`.
//!
//! Irrational interval endpoints are replaced by outward rational enclosures
//! of width ≤ 10⁻²⁰; every `≤`-claim is certified on a *superset* of its
//! true interval, so the certificates remain sound.

use crate::gegenbauer::{GegenbauerError, GegenbauerExpansion};
use crate::polynomial::{certify_poly_max, certify_sign, Polynomial, PolyError};
use crate::radical::{certify_max_bound, MaxBoundResult, RadicalError, RadicalExpr};
use crate::rational::{
    pow10_neg, rat, render_decimal, render_rational, sqrt_point_enclose, Rational, RationalError,
    RationalInterval,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;

/// Errors from claim checking and certificate assembly.
#[derive(Debug)]
pub enum ProofError {
    /// The claim geometry is specific to dimension 3.
    WrongDimension(u32),
    Poly(PolyError),
    Radical(RadicalError),
    Rational(RationalError),
    Gegenbauer(GegenbauerError),
}

impl fmt::Display for ProofError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofError::WrongDimension(d) => {
                write!(f, "verification is specific to dimension 3, got {d}")
            }
            ProofError::Poly(e) => write!(f, "{e}"),
            ProofError::Radical(e) => write!(f, "{e}"),
            ProofError::Rational(e) => write!(f, "{e}"),
            ProofError::Gegenbauer(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ProofError {}

impl From<PolyError> for ProofError {
    fn from(e: PolyError) -> Self {
        ProofError::Poly(e)
    }
}
impl From<RadicalError> for ProofError {
    fn from(e: RadicalError) -> Self {
        ProofError::Radical(e)
    }
}
impl From<RationalError> for ProofError {
    fn from(e: RationalError) -> Self {
        ProofError::Rational(e)
    }
}
impl From<GegenbauerError> for ProofError {
    fn from(e: GegenbauerError) -> Self {
        ProofError::Gegenbauer(e)
    }
}

/// The certificate expansion: coefficients exact multiples of 10⁻⁸ at
/// indices {0, 1, 2, 3, 4, 5, 9}.
pub fn certificate_f() -> GegenbauerExpansion {
    GegenbauerExpansion::new(3)
        .expect("dimension 3 is valid")
        .with_coeff(0, rat(9465869, 100_000_000))
        .with_coeff(1, rat(17273741, 100_000_000))
        .with_coeff(2, rat(33128438, 100_000_000))
        .with_coeff(3, rat(17275228, 100_000_000))
        .with_coeff(4, rat(18905584, 100_000_000))
        .with_coeff(5, rat(334265, 100_000_000))
        .with_coeff(9, rat(3616728, 100_000_000))
}

/// Outward enclosure of `−1/√2` (cap boundary cosine), width ≤ `eps`.
pub fn cap_boundary_enclosure(eps: &Rational) -> Result<RationalInterval, RationalError> {
    Ok(sqrt_point_enclose(&rat(1, 2), eps)?.neg())
}

/// Outward enclosure of `−cos(π/12) = −(√6 + √2)/4`, width ≤ `eps`.
pub fn neg_cos_pi12_enclosure(eps: &Rational) -> Result<RationalInterval, RationalError> {
    let half_eps = eps / rat(4, 1);
    let s6 = sqrt_point_enclose(&rat(6, 1), &half_eps)?;
    let s2 = sqrt_point_enclose(&rat(2, 1), &half_eps)?;
    Ok(s6.add(&s2).scale(&rat(1, 4)).neg())
}

/// Outward enclosure of `−√2/4 − 1/2` (left end of `J`), width ≤ `eps`.
pub fn j_lo_enclosure(eps: &Rational) -> Result<RationalInterval, RationalError> {
    let s2 = sqrt_point_enclose(&rat(2, 1), eps)?;
    Ok(s2.scale(&rat(1, 4)).neg().shift(&rat(-1, 2)))
}

/// Outward enclosure of `−√(2/3)` (right end of `J`), width ≤ `eps`.
pub fn j_hi_enclosure(eps: &Rational) -> Result<RationalInterval, RationalError> {
    Ok(sqrt_point_enclose(&rat(2, 3), eps)?.neg())
}

/// Identifier of one of the six claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimId {
    ANegativity,
    BOnePoint,
    CMonotoneI,
    DTwoPoint,
    EShapeJ,
    FThreePoint,
}

impl ClaimId {
    pub const ALL: [ClaimId; 6] = [
        ClaimId::ANegativity,
        ClaimId::BOnePoint,
        ClaimId::CMonotoneI,
        ClaimId::DTwoPoint,
        ClaimId::EShapeJ,
        ClaimId::FThreePoint,
    ];

    pub fn letter(self) -> &'static str {
        match self {
            ClaimId::ANegativity => "A",
            ClaimId::BOnePoint => "B",
            ClaimId::CMonotoneI => "C",
            ClaimId::DTwoPoint => "D",
            ClaimId::EShapeJ => "E",
            ClaimId::FThreePoint => "F",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::ANegativity => "f(t) <= 0 on [-1/sqrt2, 1/2]",
            ClaimId::BOnePoint => "f(1) + max f on [-1, -1/sqrt2] <= threshold",
            ClaimId::CMonotoneI => "f'(t) <= 0 on I = [-cos(pi/12), -1/sqrt2]",
            ClaimId::DTwoPoint => "f(1) + max (f(t) + f(alpha(t))) on I <= threshold",
            ClaimId::EShapeJ => "f'(t) <= 0 and f''(t) >= 0 on [-sqrt2/4 - 1/2, -1/sqrt2]",
            ClaimId::FThreePoint => "f(1) + max (2 f(t) + f(beta(t))) on J <= threshold",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// Overall verdict of a claim check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Inequality direction of a claim part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Quantity must be ≤ bound.
    AtMost,
    /// Quantity must be ≥ bound.
    AtLeast,
}

/// One certified inequality inside a claim (most claims have one part;
/// claim E has two).
#[derive(Debug, Clone)]
pub struct ClaimPart {
    pub name: &'static str,
    /// Certified enclosure of the decisive quantity (a max or min).
    pub enclosure: Option<RationalInterval>,
    pub bound: Rational,
    pub direction: Direction,
    pub pass: bool,
    /// For sign claims: inequality is strict on the whole closed interval.
    pub strict: Option<bool>,
}

impl ClaimPart {
    /// Signed slack `[worst, best]`: positive means the inequality holds
    /// with margin at both ends of the enclosure.
    pub fn slack(&self) -> Option<RationalInterval> {
        let enc = self.enclosure.as_ref()?;
        let (a, b) = match self.direction {
            Direction::AtMost => (&self.bound - enc.hi(), &self.bound - enc.lo()),
            Direction::AtLeast => (enc.lo() - &self.bound, enc.hi() - &self.bound),
        };
        Some(RationalInterval::new(a, b).expect("enclosure ordered"))
    }
}

/// Result of checking one claim.
#[derive(Debug, Clone)]
pub struct ClaimOutcome {
    pub id: ClaimId,
    pub verdict: Verdict,
    pub parts: Vec<ClaimPart>,
    /// Branch-and-bound node count (0 for purely algebraic claims).
    pub nodes: u64,
    /// Deterministic one-line detail for reports.
    pub note: String,
}

/// Tunable inputs of a verification run, doubling as fault-injection hooks:
/// overriding the threshold or the function exercises the failure paths.
#[derive(Debug, Clone)]
pub struct VerificationConfig {
    pub threshold: Rational,
    pub function: GegenbauerExpansion,
    /// Maximum bisection depth for branch-and-bound claims.
    pub max_depth: u32,
    /// Isolation width for critical points in polynomial max claims.
    pub refine_width: Rational,
    /// Width of the outward enclosures of irrational interval endpoints.
    pub boundary_eps: Rational,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            threshold: rat(123, 100),
            function: certificate_f(),
            max_depth: 60,
            refine_width: pow10_neg(9),
            boundary_eps: pow10_neg(20),
        }
    }
}

impl VerificationConfig {
    pub fn with_threshold(mut self, threshold: Rational) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn with_function(mut self, f: GegenbauerExpansion) -> Self {
        self.function = f;
        self
    }

    /// Fault injection: negate coefficient `k` of the function.
    pub fn negate_coeff(mut self, k: u32) -> Self {
        let c = self.function.coeff(k);
        self.function.set_coeff(k, -c);
        self
    }

    /// The claim's working interval — always a rational superset of the
    /// true (irrational-endpoint) interval.
    ///
    /// The assembled interval is rounded outward onto the `2^-60` dyadic
    /// grid (still a superset, widened by < 1.8e−18 per side).  The raw
    /// endpoint enclosures have denominators near 10⁴⁰, which every
    /// bisection midpoint — and every Horner step on it — would inherit;
    /// dyadic endpoints keep the whole branch-and-bound cheap.
    pub fn claim_interval(&self, id: ClaimId) -> Result<RationalInterval, ProofError> {
        let cap = cap_boundary_enclosure(&self.boundary_eps)?;
        let iv = match id {
            ClaimId::ANegativity => RationalInterval::new(cap.lo().clone(), rat(1, 2)),
            ClaimId::BOnePoint => RationalInterval::new(rat(-1, 1), cap.hi().clone()),
            ClaimId::CMonotoneI | ClaimId::DTwoPoint => {
                let i_lo = neg_cos_pi12_enclosure(&self.boundary_eps)?;
                RationalInterval::new(i_lo.lo().clone(), cap.hi().clone())
            }
            ClaimId::EShapeJ => {
                let j_lo = j_lo_enclosure(&self.boundary_eps)?;
                RationalInterval::new(j_lo.lo().clone(), cap.hi().clone())
            }
            ClaimId::FThreePoint => {
                let j_lo = j_lo_enclosure(&self.boundary_eps)?;
                let j_hi = j_hi_enclosure(&self.boundary_eps)?;
                RationalInterval::new(j_lo.lo().clone(), j_hi.hi().clone())
            }
        };
        Ok(iv.map_err(ProofError::from)?.round_out(INTERVAL_BITS))
    }
}

/// Dyadic grid for claim-interval endpoints (`2^-60` ≈ 8.7e−19, far inside
/// every claim's margin).
const INTERVAL_BITS: u32 = 60;

/// Working precision of rounded interval arithmetic inside branch-and-bound
/// claims (`2^-96` of outward slack per operation — negligible against the
/// 1e−6-scale margins being certified).
const PREC_BITS: u32 = 96;

fn sign_part(
    name: &'static str,
    p: &Polynomial,
    iv: &RationalInterval,
    direction: Direction,
    refine_width: &Rational,
) -> Result<ClaimPart, ProofError> {
    let verdict = certify_sign(p, iv)?;
    let (pass, strict) = match direction {
        Direction::AtMost => (verdict.nonpositive, verdict.strict_on_closure),
        Direction::AtLeast => (verdict.nonnegative, verdict.strict_on_closure),
    };
    // Telemetry enclosure: certified max (for ≤) or min (for ≥).
    let enclosure = if p.is_zero() {
        Some(RationalInterval::point(Rational::zero()))
    } else {
        match direction {
            Direction::AtMost => Some(certify_poly_max(p, iv, refine_width)?.enclosure),
            Direction::AtLeast => {
                let neg = certify_poly_max(&(-p), iv, refine_width)?.enclosure;
                Some(neg.neg())
            }
        }
    };
    Ok(ClaimPart {
        name,
        enclosure,
        bound: Rational::zero(),
        direction,
        pass,
        strict: Some(strict),
    })
}

/// Checks a single claim against the configured function and threshold.
pub fn check_claim(cfg: &VerificationConfig, id: ClaimId) -> Result<ClaimOutcome, ProofError> {
    if cfg.function.dim() != 3 {
        return Err(ProofError::WrongDimension(cfg.function.dim()));
    }
    let f_poly = cfg.function.to_poly();
    let f_one = cfg.function.eval(&rat(1, 1));
    let iv = cfg.claim_interval(id)?;

    match id {
        ClaimId::ANegativity => {
            let part = sign_part("max f", &f_poly, &iv, Direction::AtMost, &cfg.refine_width)?;
            let verdict = if part.pass { Verdict::Pass } else { Verdict::Fail };
            let note = format!(
                "sign certification of f on {iv}: {}",
                if part.pass { "nonpositive" } else { "violated" }
            );
            Ok(ClaimOutcome { id, verdict, parts: vec![part], nodes: 0, note })
        }
        ClaimId::BOnePoint => {
            let max = certify_poly_max(&f_poly, &iv, &cfg.refine_width)?;
            // Lower end: the best *endpoint* value, so the classical witness
            // f(1) + f(−1) sits exactly at the enclosure's lower end.  The
            // true maximum (attained at an interior critical point slightly
            // above it) stays inside the enclosure.
            let enc = RationalInterval::new(
                &f_one + &max.best_endpoint_value,
                f_one.clone() + max.enclosure.hi(),
            )
            .expect("endpoint value <= certified max");
            let pass = enc.hi() <= &cfg.threshold;
            let note = format!(
                "f(1) + max f via {} critical candidates; enclosure {enc}",
                max.candidates.len()
            );
            let part = ClaimPart {
                name: "f(1) + max f",
                enclosure: Some(enc),
                bound: cfg.threshold.clone(),
                direction: Direction::AtMost,
                pass,
                strict: None,
            };
            let verdict = if pass { Verdict::Pass } else { Verdict::Fail };
            Ok(ClaimOutcome { id, verdict, parts: vec![part], nodes: 0, note })
        }
        ClaimId::CMonotoneI => {
            let part = sign_part(
                "max f' on I",
                &f_poly.derivative(),
                &iv,
                Direction::AtMost,
                &cfg.refine_width,
            )?;
            let verdict = if part.pass { Verdict::Pass } else { Verdict::Fail };
            let note = format!("sign certification of f' on {iv}");
            Ok(ClaimOutcome { id, verdict, parts: vec![part], nodes: 0, note })
        }
        ClaimId::EShapeJ => {
            let d1 = f_poly.derivative();
            let d2 = d1.derivative();
            let p1 = sign_part("max f' on J-", &d1, &iv, Direction::AtMost, &cfg.refine_width)?;
            let p2 = sign_part("min f'' on J-", &d2, &iv, Direction::AtLeast, &cfg.refine_width)?;
            let pass = p1.pass && p2.pass;
            let verdict = if pass { Verdict::Pass } else { Verdict::Fail };
            let note = format!("sign certification of f' and f'' on {iv}");
            Ok(ClaimOutcome { id, verdict, parts: vec![p1, p2], nodes: 0, note })
        }
        ClaimId::DTwoPoint | ClaimId::FThreePoint => {
            let (name, terms): (&'static str, Vec<RadicalExpr>) = match id {
                ClaimId::DTwoPoint => (
                    "f(1) + max (f + f(alpha))",
                    vec![
                        RadicalExpr::from_poly(f_poly.clone()),
                        RadicalExpr::alpha().compose_poly(&f_poly),
                    ],
                ),
                _ => (
                    "f(1) + max (2f + f(beta))",
                    vec![
                        RadicalExpr::from_poly(f_poly.clone()),
                        RadicalExpr::from_poly(f_poly.clone()),
                        RadicalExpr::beta().compose_poly(&f_poly),
                    ],
                ),
            };
            let inner_bound = &cfg.threshold - &f_one;
            let result =
                certify_max_bound(&terms, &iv, &inner_bound, cfg.max_depth, PREC_BITS)?;
            let (verdict, part, nodes, note) = match result {
                MaxBoundResult::Pass { enclosure, nodes } => {
                    let enc = enclosure.shift(&f_one);
                    let note = format!("branch-and-bound certified in {nodes} nodes; {enc}");
                    (
                        Verdict::Pass,
                        ClaimPart {
                            name,
                            enclosure: Some(enc),
                            bound: cfg.threshold.clone(),
                            direction: Direction::AtMost,
                            pass: true,
                            strict: None,
                        },
                        nodes,
                        note,
                    )
                }
                MaxBoundResult::Fail { witness, value_above, nodes } => {
                    let lower = &value_above + &f_one;
                    let note = format!(
                        "refuted on {witness}: certified lower bound {} exceeds threshold",
                        render_rational(&lower)
                    );
                    (
                        Verdict::Fail,
                        ClaimPart {
                            name,
                            enclosure: Some(RationalInterval::point(lower)),
                            bound: cfg.threshold.clone(),
                            direction: Direction::AtMost,
                            pass: false,
                            strict: None,
                        },
                        nodes,
                        note,
                    )
                }
                MaxBoundResult::Inconclusive { unresolved, nodes } => {
                    let note = format!("depth limit reached with {unresolved} unresolved");
                    (
                        Verdict::Inconclusive,
                        ClaimPart {
                            name,
                            enclosure: None,
                            bound: cfg.threshold.clone(),
                            direction: Direction::AtMost,
                            pass: false,
                            strict: None,
                        },
                        nodes,
                        note,
                    )
                }
            };
            Ok(ClaimOutcome { id, verdict, parts: vec![part], nodes, note })
        }
    }
}

/// `(θ/c₀, floor(θ/c₀))`, or `None` when `c₀ ≤ 0` (no bound derivable).
pub fn derive_bound(threshold: &Rational, c0: &Rational) -> Option<(Rational, BigInt)> {
    if !c0.is_positive() {
        return None;
    }
    let ratio = threshold / c0;
    let floor = crate::rational::floor_int(&ratio);
    Some((ratio, floor))
}

/// Machine-checkable certificate, serialized with a stable field order and
/// no volatile content (no timestamps, no absolute paths), so identical
/// inputs give byte-identical JSON.
#[derive(Debug, Serialize)]
pub struct Certificate {
    pub format: &'static str,
    pub dimension: u32,
    pub threshold: String,
    pub threshold_decimal: String,
    /// `[index, coefficient]` pairs, increasing index.
    pub function: Vec<(u32, String)>,
    pub admissible: bool,
    pub constants: CertificateConstants,
    pub assumptions: Vec<&'static str>,
    pub claims: Vec<CertificateClaim>,
    pub all_claims_pass: bool,
    pub bound_ratio: Option<String>,
    pub bound_decimal: Option<String>,
    pub conclusion: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct CertificateConstants {
    pub f_at_one: String,
    pub f_at_minus_one: String,
    pub f_one_plus_f_minus_one: String,
    /// Outward enclosures (width ≤ boundary_eps) of the irrational interval
    /// endpoints, as `[lo, hi]` in "num/den" form.
    pub cap_boundary: [String; 2],
    pub neg_cos_pi_12: [String; 2],
    pub j_lo: [String; 2],
    pub j_hi: [String; 2],
    pub boundary_eps: String,
}

#[derive(Debug, Serialize)]
pub struct CertificateClaim {
    pub id: &'static str,
    pub description: &'static str,
    pub verdict: String,
    pub parts: Vec<CertificatePart>,
    pub nodes: u64,
    pub note: String,
}

#[derive(Debug, Serialize)]
pub struct CertificatePart {
    pub name: &'static str,
    pub direction: &'static str,
    pub bound: String,
    pub enclosure: Option<[String; 2]>,
    pub enclosure_decimal: Option<[String; 2]>,
    pub slack: Option<[String; 2]>,
    pub pass: bool,
    pub strict: Option<bool>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}

fn interval_strings(iv: &RationalInterval) -> [String; 2] {
    [render_rational(iv.lo()), render_rational(iv.hi())]
}

fn interval_decimals(iv: &RationalInterval) -> [String; 2] {
    [render_decimal(iv.lo(), 12), render_decimal(iv.hi(), 12)]
}

/// Runs admissibility plus all six claims and assembles the certificate.
pub fn run_full_verification(cfg: &VerificationConfig) -> Result<Certificate, ProofError> {
    if cfg.function.dim() != 3 {
        return Err(ProofError::WrongDimension(cfg.function.dim()));
    }
    let admissible = cfg.function.is_admissible();
    let f_one = cfg.function.eval(&rat(1, 1));
    let f_minus_one = cfg.function.eval(&rat(-1, 1));

    let mut claims = Vec::with_capacity(6);
    let mut all_pass = true;
    for id in ClaimId::ALL {
        let outcome = check_claim(cfg, id)?;
        all_pass &= outcome.verdict == Verdict::Pass;
        claims.push(CertificateClaim {
            id: id.letter(),
            description: id.description(),
            verdict: outcome.verdict.to_string(),
            parts: outcome
                .parts
                .iter()
                .map(|p| CertificatePart {
                    name: p.name,
                    direction: match p.direction {
                        Direction::AtMost => "at-most",
                        Direction::AtLeast => "at-least",
                    },
                    bound: render_rational(&p.bound),
                    enclosure: p.enclosure.as_ref().map(interval_strings),
                    enclosure_decimal: p.enclosure.as_ref().map(interval_decimals),
                    slack: p.slack().as_ref().map(interval_strings),
                    pass: p.pass,
                    strict: p.strict,
                })
                .collect(),
            nodes: outcome.nodes,
            note: outcome.note,
        });
    }

    let c0 = cfg.function.coeff(0);
    let bound = derive_bound(&cfg.threshold, &c0);
    let verified = admissible && all_pass && bound.is_some();
    let conclusion = if verified {
        bound.as_ref().map(|(_, fl)| {
            u64::try_from(fl.clone()).expect("kissing bound fits in u64")
        })
    } else {
        None
    };

    let cap = cap_boundary_enclosure(&cfg.boundary_eps)?;
    let i_lo = neg_cos_pi12_enclosure(&cfg.boundary_eps)?;
    let j_lo = j_lo_enclosure(&cfg.boundary_eps)?;
    let j_hi = j_hi_enclosure(&cfg.boundary_eps)?;

    Ok(Certificate {
        format: "delsarte-kissing-certificate/1",
        dimension: 3,
        threshold: render_rational(&cfg.threshold),
        threshold_decimal: render_decimal(&cfg.threshold, 12),
        function: cfg
            .function
            .iter()
            .map(|(k, c)| (k, render_rational(c)))
            .collect(),
        admissible,
        constants: CertificateConstants {
            f_at_one: render_rational(&f_one),
            f_at_minus_one: render_rational(&f_minus_one),
            f_one_plus_f_minus_one: render_rational(&(&f_one + &f_minus_one)),
            cap_boundary: interval_strings(&cap),
            neg_cos_pi_12: interval_strings(&i_lo),
            j_lo: interval_strings(&j_lo),
            j_hi: interval_strings(&j_hi),
            boundary_eps: render_rational(&cfg.boundary_eps),
        },
        assumptions: vec![
            "Geometric case analysis is taken as established: every kissing \
             configuration point has cap-row sum bounded by the one-, two-, or \
             three-point case, whose inequalities on f are what is certified here.",
            "The inner-product threshold -sqrt2/4 - 1/2 delimiting the \
             three-point case is taken as given.",
        ],
        claims,
        all_claims_pass: all_pass,
        bound_ratio: bound.as_ref().map(|(r, _)| render_rational(r)),
        bound_decimal: bound.as_ref().map(|(r, _)| render_decimal(r, 12)),
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_f64;

    #[test]
    fn certificate_f_exact_values() {
        let f = certificate_f();
        assert!(f.is_admissible());
        assert_eq!(f.eval(&rat(1, 1)), rat(99999853, 100_000_000));
        assert_eq!(f.eval(&rat(-1, 1)), rat(22999929, 100_000_000));
        let sum = f.eval(&rat(1, 1)) + f.eval(&rat(-1, 1));
        assert_eq!(sum, rat(122999782, 100_000_000));
        // Value at the claim-A right endpoint.
        assert_eq!(f.eval(&rat(1, 2)), rat(-61239, 819_200_000_000));
    }

    #[test]
    fn certificate_f_monomial_coefficients() {
        // Frozen conversion oracle: f in the monomial basis, lowest first.
        let p = certificate_f().to_poly();
        let expect = [
            rat(-2189, 25_000_000),
            rat(14210999, 1_600_000_000),
            rat(-21203283, 100_000_000),
            rat(-3611121, 4_000_000),
            rat(8271193, 10_000_000),
            rat(2046973257, 400_000_000),
            rat(0, 1),
            rat(-581841117, 80_000_000),
            rat(0, 1),
            rat(1099033221, 320_000_000),
        ];
        assert_eq!(p.degree(), Some(9));
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&p.coeff(k), e, "monomial degree {k}");
        }
        // Round trip back to the expansion.
        let back = GegenbauerExpansion::from_poly(&p, 3).unwrap();
        assert_eq!(back, certificate_f());
    }

    #[test]
    fn boundary_enclosures_are_tight_and_ordered() {
        let eps = pow10_neg(20);
        for (iv, truth) in [
            (cap_boundary_enclosure(&eps).unwrap(), -std::f64::consts::FRAC_1_SQRT_2),
            (neg_cos_pi12_enclosure(&eps).unwrap(), -(std::f64::consts::PI / 12.0).cos()),
            (j_lo_enclosure(&eps).unwrap(), -2.0f64.sqrt() / 4.0 - 0.5),
            (j_hi_enclosure(&eps).unwrap(), -(2.0f64 / 3.0).sqrt()),
        ] {
            assert!(iv.width() <= eps, "width {}", to_f64(&iv.width()));
            let mid = to_f64(&iv.midpoint());
            assert!((mid - truth).abs() < 1e-14, "{mid} vs {truth}");
        }
    }

    #[test]
    fn claim_intervals_are_supersets() {
        // Exact containment checks against the irrational true endpoints,
        // phrased without square roots: x ≥ √v ⟺ x > 0 ∧ x² ≥ v, and
        // −hi ≤ √v ⟺ hi² ≤ v for negative hi.
        let cfg = VerificationConfig::default();

        let i_d = cfg.claim_interval(ClaimId::DTwoPoint).unwrap();
        // lo ≤ −cos(π/12): cos²(π/12) = (2+√3)/4, so need 4·lo² − 2 ≥ √3.
        let x = rat(4, 1) * i_d.lo() * i_d.lo() - rat(2, 1);
        assert!(x.is_positive() && &x * &x >= rat(3, 1));
        // hi ≥ −1/√2 (hi negative): hi² ≤ 1/2.
        assert!(i_d.hi().is_negative() && i_d.hi() * i_d.hi() <= rat(1, 2));

        let j_f = cfg.claim_interval(ClaimId::FThreePoint).unwrap();
        // lo ≤ −√2/4 − 1/2: y = −lo − 1/2 must satisfy y ≥ √2/4.
        let y = -j_f.lo() - rat(1, 2);
        assert!(y.is_positive() && rat(16, 1) * &y * &y >= rat(2, 1));
        // hi ≥ −√(2/3): hi² ≤ 2/3.
        assert!(j_f.hi().is_negative() && j_f.hi() * j_f.hi() <= rat(2, 3));
    }

    #[test]
    fn claim_a_passes_strictly() {
        let cfg = VerificationConfig::default();
        let out = check_claim(&cfg, ClaimId::ANegativity).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        let part = &out.parts[0];
        assert_eq!(part.strict, Some(true), "f has no roots in the claim-A interval");
        let enc = part.enclosure.as_ref().unwrap();
        // max f ≈ −7.43e−8 near t ≈ −0.3996.
        assert!(enc.hi().is_negative());
        assert!(to_f64(enc.hi()) < -7.0e-8);
        assert!(to_f64(enc.lo()) > -8.0e-8);
    }

    #[test]
    fn claim_b_enclosure_contains_endpoint_witness() {
        let cfg = VerificationConfig::default();
        let out = check_claim(&cfg, ClaimId::BOnePoint).unwrap();
        assert_eq!(out.verdict, Verdict::Pass);
        let enc = out.parts[0].enclosure.as_ref().unwrap();
        let witness = rat(122999782, 100_000_000);
        assert!(enc.contains(&witness));
        assert_eq!(enc.lo(), &witness, "lower end is the endpoint witness f(1) + f(-1)");
        // True max sits slightly above, at the interior critical point
        // t ≈ −0.99991422: f(1) + f(t*) ≈ 1.2299979274920.
        let hi = to_f64(enc.hi());
        assert!(hi > 1.229_997_927_0 && hi < 1.229_997_928_0, "upper end {hi}");
        // Slack interval covers both the endpoint-witness slack ≈ 2.18e−6
        // and the true slack ≈ 2.07e−6.
        let slack = out.parts[0].slack().unwrap();
        assert!(to_f64(slack.lo()) > 2.0e-6 && to_f64(slack.hi()) < 2.3e-6);
    }

    #[test]
    fn claims_c_and_e_have_large_margins() {
        let cfg = VerificationConfig::default();
        let c = check_claim(&cfg, ClaimId::CMonotoneI).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        // max f' on I ≈ −0.25035.
        let enc = c.parts[0].enclosure.as_ref().unwrap();
        assert!(to_f64(enc.hi()) < -0.25 && to_f64(enc.lo()) > -0.26);

        let e = check_claim(&cfg, ClaimId::EShapeJ).unwrap();
        assert_eq!(e.verdict, Verdict::Pass);
        assert_eq!(e.parts.len(), 2);
        // min f'' on the J-extension ≈ +4.3256.
        let enc2 = e.parts[1].enclosure.as_ref().unwrap();
        assert!(to_f64(enc2.lo()) > 4.3 && to_f64(enc2.hi()) < 4.4);
    }

    #[test]
    fn claim_d_certifies_with_margin() {
        let cfg = VerificationConfig::default();
        let out = check_claim(&cfg, ClaimId::DTwoPoint).unwrap();
        assert_eq!(out.verdict, Verdict::Pass, "{}", out.note);
        assert!(out.nodes >= 1);
        let enc = out.parts[0].enclosure.as_ref().unwrap();
        // f(1) + max ≈ 0.99999853 + 0.21609446 = 1.21609299.
        assert!(to_f64(enc.lo()) > 1.215 && to_f64(enc.lo()) < 1.2161);
        assert!(enc.hi() <= &rat(123, 100));
    }

    #[test]
    fn claim_f_certifies_with_margin() {
        let cfg = VerificationConfig::default();
        let out = check_claim(&cfg, ClaimId::FThreePoint).unwrap();
        assert_eq!(out.verdict, Verdict::Pass, "{}", out.note);
        let enc = out.parts[0].enclosure.as_ref().unwrap();
        // f(1) + max ≈ 0.99999853 + 0.18904888 = 1.18904741.
        assert!(to_f64(enc.lo()) > 1.188 && to_f64(enc.lo()) < 1.19);
        assert!(enc.hi() <= &rat(123, 100));
    }

    #[test]
    fn full_verification_concludes_twelve() {
        let cert = run_full_verification(&VerificationConfig::default()).unwrap();
        assert!(cert.admissible);
        assert!(cert.all_claims_pass);
        assert_eq!(cert.bound_ratio.as_deref(), Some("123000000/9465869"));
        assert_eq!(cert.conclusion, Some(12));
        assert!(cert.bound_decimal.as_deref().unwrap().starts_with("12.99405263"));
        // Deterministic JSON.
        let cert2 = run_full_verification(&VerificationConfig::default()).unwrap();
        assert_eq!(cert.to_json(), cert2.to_json());
    }

    #[test]
    fn lowered_threshold_fails_claim_b() {
        let cfg = VerificationConfig::default().with_threshold(rat(122, 100));
        let out = check_claim(&cfg, ClaimId::BOnePoint).unwrap();
        assert_eq!(out.verdict, Verdict::Fail);
        let cert = run_full_verification(&cfg).unwrap();
        assert!(!cert.all_claims_pass);
        assert_eq!(cert.conclusion, None);
        // The ratio tightens but must not be reported as a conclusion.
        assert_eq!(cert.bound_ratio.as_deref(), Some("122000000/9465869"));
    }

    #[test]
    fn negated_coefficient_breaks_admissibility() {
        let cfg = VerificationConfig::default().negate_coeff(5);
        assert!(!cfg.function.is_admissible());
        let cert = run_full_verification(&cfg).unwrap();
        assert!(!cert.admissible);
        assert_eq!(cert.conclusion, None);
    }

    #[test]
    fn zero_function_passes_sign_claims_but_gives_no_bound() {
        // f = 0 (empty expansion): claims A/C/E hold trivially (0 ≤ 0 and
        // 0 ≥ 0); B/D/F hold since 0 ≤ θ; but c₀ = 0 yields no bound.
        let f = GegenbauerExpansion::new(3).unwrap();
        let cfg = VerificationConfig::default().with_function(f);
        let cert = run_full_verification(&cfg).unwrap();
        assert!(cert.all_claims_pass, "{:?}", cert.claims);
        assert_eq!(cert.bound_ratio, None);
        assert_eq!(cert.conclusion, None);
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let f = GegenbauerExpansion::new(4).unwrap().with_coeff(0, rat(1, 10));
        let cfg = VerificationConfig::default().with_function(f);
        assert!(matches!(
            run_full_verification(&cfg),
            Err(ProofError::WrongDimension(4))
        ));
    }
}
