//! The function ring `P(t) + Q(t)·√R(t)` with rational-coefficient
//! polynomials, closed under the compositions the kissing-number proof
//! needs, plus certified interval enclosure and branch-and-bound
//! maximum certification for sums of such terms.
//!
//! The two maps the proof composes with are
//!
//! ```text
//! α(t) = t/2 − (√3/2)·√(1 − t²)        (common neighbor of two points)
//! β(t) = (2/3)t − (2/3)·√(3/2 − 2t²)   (common neighbor of three points)
//! ```
//!
//! both of the form `a(t) + b(t)·√r(t)`.  A polynomial `g` composed with such
//! a map stays in the ring: powers of `a + b√r` are computed by Horner in
//! `ℚ[t][y]/(y² − r)`, so `g(α(t)) = P(t) + Q(t)·√r(t)` with `P, Q` exact.
//! Enclosures then need only polynomial interval extensions and one
//! square-root enclosure per term.
//!
//! All per-node arithmetic runs on [`DyadicInterval`]s — outward-rounded
//! fixed-point intervals — after compiling each term's polynomials once per
//! certification run.  Exact `BigRational` interval arithmetic is sound here
//! too but two orders of magnitude slower: its denominators compound under
//! Horner and its every operation reduces through a gcd.

use crate::polynomial::{certify_sign, Polynomial};
use crate::rational::{rat, DyadicInterval, Rational, RationalError, RationalInterval};
use num_traits::Zero;
use std::fmt;

/// Errors from radical-expression evaluation and certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadicalError {
    /// The radicand is certifiably negative somewhere on the interval.
    NegativeRadicand { interval: String },
    /// Underlying rational/interval failure (tolerances, construction).
    Rational(RationalError),
    /// Sign certification of a radicand failed structurally.
    Poly(crate::polynomial::PolyError),
}

impl fmt::Display for RadicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadicalError::NegativeRadicand { interval } => {
                write!(f, "radicand is negative on {interval}")
            }
            RadicalError::Rational(e) => write!(f, "{e}"),
            RadicalError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RadicalError {}

impl From<RationalError> for RadicalError {
    fn from(e: RationalError) -> Self {
        RadicalError::Rational(e)
    }
}

impl From<crate::polynomial::PolyError> for RadicalError {
    fn from(e: crate::polynomial::PolyError) -> Self {
        RadicalError::Poly(e)
    }
}

/// `p(t) + q(t)·√(r(t))` with exact rational polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalExpr {
    pub p: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
}

impl RadicalExpr {
    /// Purely polynomial expression (no radical part).
    pub fn from_poly(p: Polynomial) -> Self {
        RadicalExpr { p, q: Polynomial::zero(), r: Polynomial::zero() }
    }

    pub fn new(p: Polynomial, q: Polynomial, r: Polynomial) -> Self {
        RadicalExpr { p, q, r }
    }

    /// The map α(t) = t/2 − (√3/2)·√(1 − t²).
    pub fn alpha() -> Self {
        RadicalExpr {
            p: Polynomial::new(vec![Rational::zero(), rat(1, 2)]),
            q: Polynomial::constant(rat(-1, 2)),
            // Fold the √3 into the radicand: (√3/2)√(1−t²) = (1/2)√(3−3t²).
            r: Polynomial::new(vec![rat(3, 1), Rational::zero(), rat(-3, 1)]),
        }
    }

    /// The map β(t) = (2/3)t − (2/3)·√(3/2 − 2t²).
    pub fn beta() -> Self {
        RadicalExpr {
            p: Polynomial::new(vec![Rational::zero(), rat(2, 3)]),
            q: Polynomial::constant(rat(-2, 3)),
            r: Polynomial::new(vec![rat(3, 2), Rational::zero(), rat(-2, 1)]),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.q.is_zero()
    }

    /// Composes a polynomial with this expression: if `self = a + b√r` then
    /// the result represents `g(a + b√r)`, with the same radicand `r`.
    /// Horner in `ℚ[t][y]/(y² − r)`: maintain `(P, Q)` with value `P + Q·y`
    /// and fold in one coefficient of `g` per step.
    pub fn compose_poly(&self, g: &Polynomial) -> RadicalExpr {
        let mut p_acc = Polynomial::zero();
        let mut q_acc = Polynomial::zero();
        for c in g.coeffs().iter().rev() {
            // (P + Qy)(a + by) = (Pa + Qbr) + (Pb + Qa)y, then add c.
            let new_p = &(&p_acc * &self.p) + &(&(&q_acc * &self.q) * &self.r);
            let new_q = &(&p_acc * &self.q) + &(&q_acc * &self.p);
            p_acc = &new_p + &Polynomial::constant(c.clone());
            q_acc = new_q;
        }
        RadicalExpr { p: p_acc, q: q_acc, r: self.r.clone() }
    }

    /// Floating evaluation (reports and plots only; clamps tiny negative
    /// radicands from rounding).
    pub fn eval_f64(&self, t: f64) -> f64 {
        let r = self.r.eval_f64(t).max(0.0);
        self.p.eval_f64(t) + self.q.eval_f64(t) * r.sqrt()
    }

    /// Certified interval enclosure of the expression over `tv`, computed in
    /// outward-rounded fixed-point arithmetic on the `2^-bits` grid (pick
    /// `bits` so `2^-bits` is far below the slack being certified).
    ///
    /// Caller contract: the radicand is nonnegative on `tv` (certify with
    /// [`certify_radicands`] once per interval, not per node).  An enclosure
    /// of `r` that dips slightly below zero is clamped at zero — sound under
    /// the contract since the clamped interval still contains every value
    /// `r(t) ≥ 0` actually attains.  If the enclosure of `r` is entirely
    /// negative the contract is definitely violated and an error is raised.
    pub fn enclose(
        &self,
        tv: &RationalInterval,
        bits: u32,
    ) -> Result<RationalInterval, RadicalError> {
        let ct = CompiledTerm::new(self, bits);
        let dcell = DyadicInterval::from_interval(tv, bits);
        Ok(ct.enclose(&dcell, tv)?.to_interval())
    }
}

/// Certifies `r ≥ 0` on `iv` for every term that actually uses its radical
/// part; errors with a witness interval when some radicand is negative.
pub fn certify_radicands(
    terms: &[RadicalExpr],
    iv: &RationalInterval,
) -> Result<(), RadicalError> {
    for term in terms {
        if term.is_polynomial() {
            continue;
        }
        let verdict = certify_sign(&term.r, iv)?;
        if !verdict.nonnegative {
            return Err(RadicalError::NegativeRadicand { interval: iv.to_string() });
        }
    }
    Ok(())
}

/// A polynomial compiled for dyadic evaluation: outward coefficient
/// enclosures of it and of its derivative (for the mean-value form), both
/// converted once per certification run instead of once per node.
struct CompiledPoly {
    coeffs: Vec<DyadicInterval>,
    deriv: Vec<DyadicInterval>,
}

impl CompiledPoly {
    fn new(p: &Polynomial, bits: u32) -> Self {
        let conv = |poly: &Polynomial| -> Vec<DyadicInterval> {
            poly.coeffs().iter().map(|c| DyadicInterval::from_point(c, bits)).collect()
        };
        CompiledPoly { coeffs: conv(p), deriv: conv(&p.derivative()) }
    }

    fn horner(coeffs: &[DyadicInterval], x: &DyadicInterval, bits: u32) -> DyadicInterval {
        let mut acc = DyadicInterval::zero(bits);
        for c in coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Range enclosure over `cell`: naive interval Horner intersected with
    /// the mean-value form `p(m) + p'(cell)·(cell − m)`, whose excess width
    /// is quadratic in the cell width.
    fn range(&self, cell: &DyadicInterval, bits: u32) -> DyadicInterval {
        let naive = Self::horner(&self.coeffs, cell, bits);
        if cell.is_point() {
            return naive;
        }
        let m = cell.midpoint_singleton();
        let fm = Self::horner(&self.coeffs, &m, bits);
        let dr = Self::horner(&self.deriv, cell, bits);
        let mv = fm.add(&dr.mul(&cell.sub(&m)));
        // Both enclose the true range, so they always intersect; `None`
        // cannot happen, but keeping the naive form is a sound fallback.
        naive.meet(&mv).unwrap_or(naive)
    }
}

/// One radical term compiled for dyadic evaluation.
struct CompiledTerm {
    p: CompiledPoly,
    /// `(q, r)` when the term has a radical part.
    radical: Option<(CompiledPoly, CompiledPoly)>,
    bits: u32,
}

impl CompiledTerm {
    fn new(term: &RadicalExpr, bits: u32) -> Self {
        CompiledTerm {
            p: CompiledPoly::new(&term.p, bits),
            radical: if term.is_polynomial() {
                None
            } else {
                Some((CompiledPoly::new(&term.q, bits), CompiledPoly::new(&term.r, bits)))
            },
            bits,
        }
    }

    fn enclose(
        &self,
        cell: &DyadicInterval,
        cell_for_err: &RationalInterval,
    ) -> Result<DyadicInterval, RadicalError> {
        let p_range = self.p.range(cell, self.bits);
        let Some((q, r)) = &self.radical else {
            return Ok(p_range);
        };
        let r_range = r.range(cell, self.bits);
        let Some(root) = r_range.sqrt() else {
            return Err(RadicalError::NegativeRadicand { interval: cell_for_err.to_string() });
        };
        let q_range = q.range(cell, self.bits);
        Ok(p_range.add(&q_range.mul(&root)))
    }
}

fn compile_terms(terms: &[RadicalExpr], bits: u32) -> Vec<CompiledTerm> {
    terms.iter().map(|t| CompiledTerm::new(t, bits)).collect()
}

fn sum_enclose(
    compiled: &[CompiledTerm],
    cell: &DyadicInterval,
    cell_for_err: &RationalInterval,
    bits: u32,
) -> Result<DyadicInterval, RadicalError> {
    let mut acc = DyadicInterval::zero(bits);
    for ct in compiled {
        acc = acc.add(&ct.enclose(cell, cell_for_err)?);
    }
    Ok(acc)
}

/// Outcome of a branch-and-bound maximum certification.
#[derive(Debug, Clone)]
pub enum MaxBoundResult {
    /// Every leaf's upper enclosure fell at or below `bound`; the true
    /// supremum lies in `enclosure`.
    Pass { enclosure: RationalInterval, nodes: u64 },
    /// Definite counterexample: on `witness` the *lower* enclosure already
    /// exceeds `bound`, so every point there violates it.
    Fail { witness: RationalInterval, value_above: Rational, nodes: u64 },
    /// Subdivision reached `max_depth` (or the node budget) without
    /// certifying either way.
    Inconclusive { unresolved: RationalInterval, nodes: u64 },
}

/// Node budget for [`certify_max_bound`].  When the supremum sits within the
/// enclosure floor of the bound itself, band cells stop resolving and start
/// multiplying; the budget turns that pathology into a prompt
/// `Inconclusive` instead of an exponential grind.  Legitimate
/// certifications in this crate finish in well under a tenth of it.
const NODE_BUDGET: u64 = 300_000;

/// Certifies `sup over iv of Σ terms ≤ bound` by bisection: a node is
/// discharged when its upper enclosure is ≤ `bound`, refuted when its lower
/// enclosure is > `bound` (then every point of the node violates the bound).
/// Deterministic: depth-first, left child first, first refutation wins.
pub fn certify_max_bound(
    terms: &[RadicalExpr],
    iv: &RationalInterval,
    bound: &Rational,
    max_depth: u32,
    bits: u32,
) -> Result<MaxBoundResult, RadicalError> {
    certify_radicands(terms, iv)?;
    let compiled = compile_terms(terms, bits);
    // Conservative mantissa thresholds: `hi ≤ ⌊bound·2^bits⌋` certifies
    // `enc.hi ≤ bound`, and `lo > ⌈bound·2^bits⌉` certifies `enc.lo > bound`.
    let bound_d = DyadicInterval::from_point(bound, bits);
    let mut nodes: u64 = 0;
    let mut leaf_hi: Option<DyadicInterval> = None;
    let mut stack: Vec<(RationalInterval, u32)> = vec![(iv.clone(), 0)];
    while let Some((cell, depth)) = stack.pop() {
        nodes += 1;
        if nodes > NODE_BUDGET {
            return Ok(MaxBoundResult::Inconclusive { unresolved: cell, nodes });
        }
        let dcell = DyadicInterval::from_interval(&cell, bits);
        let enc = sum_enclose(&compiled, &dcell, &cell, bits)?;
        if enc.mantissa_lo() > bound_d.mantissa_hi() {
            return Ok(MaxBoundResult::Fail {
                witness: cell,
                value_above: enc.lo_rational(),
                nodes,
            });
        }
        if enc.mantissa_hi() <= bound_d.mantissa_lo() {
            if leaf_hi.as_ref().map_or(true, |b| enc.mantissa_hi() > b.mantissa_hi()) {
                leaf_hi = Some(enc);
            }
            continue;
        }
        if depth >= max_depth {
            return Ok(MaxBoundResult::Inconclusive { unresolved: cell, nodes });
        }
        let (l, r) = cell.bisect();
        stack.push((r, depth + 1));
        stack.push((l, depth + 1));
    }
    // All leaves certified.  Report a sup enclosure: attained values at the
    // interval ends and midpoint give the lower end; the max leaf upper
    // bound gives the upper end.
    let attained = enclosure_free_lower(&compiled, iv, bits)?;
    let upper = leaf_hi.map(|e| e.hi_rational()).unwrap_or_else(|| attained.clone());
    let lo = if attained <= upper { attained } else { upper.clone() };
    Ok(MaxBoundResult::Pass {
        enclosure: RationalInterval::new(lo, upper).expect("ordered"),
        nodes,
    })
}

/// Best certified *attained* lower bound on the sup: max of tight point
/// enclosures at the ends and midpoint of `iv`.
fn enclosure_free_lower(
    compiled: &[CompiledTerm],
    iv: &RationalInterval,
    bits: u32,
) -> Result<Rational, RadicalError> {
    let mut best: Option<Rational> = None;
    for t in [iv.lo().clone(), iv.midpoint(), iv.hi().clone()] {
        let point = DyadicInterval::from_point(&t, bits);
        let enc = sum_enclose(compiled, &point, iv, bits)?;
        // The true value at the point is ≥ enc.lo.
        let lo = enc.lo_rational();
        if best.as_ref().map_or(true, |b| &lo > b) {
            best = Some(lo);
        }
    }
    Ok(best.expect("three samples evaluated"))
}

/// Certified enclosure `[sup_lo, sup_hi]` of `sup over iv of Σ terms`,
/// refined until the enclosure width is ≤ `tol` or `max_depth` is reached
/// (the returned enclosure is valid either way — only its width suffers).
/// Also returns midpoints of the cells still active at the end, which are
/// exactly the near-maximizers (used as cut points by the LP refiner).
pub struct SupEnclosure {
    pub enclosure: RationalInterval,
    pub nodes: u64,
    /// Midpoints of surviving cells, best (highest upper bound) first.
    pub peak_points: Vec<Rational>,
}

/// Best-first frontier entry: max-heap on the upper-bound mantissa,
/// leftmost cell first among ties.
struct FrontierEntry {
    hi: num_bigint::BigInt,
    cell: RationalInterval,
    depth: u32,
}

impl PartialEq for FrontierEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for FrontierEntry {}

impl PartialOrd for FrontierEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FrontierEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.hi
            .cmp(&other.hi)
            .then_with(|| other.cell.lo().cmp(self.cell.lo()))
    }
}

/// `stop_below`: optional early-out bound.  As soon as the *global* upper
/// bound (the heap top) falls to or below it, the sup is certifiably ≤
/// `stop_below` and refinement stops — callers that only need "does the sup
/// clear this bound?" pay for precision only when the answer is no.
pub fn enclose_sup(
    terms: &[RadicalExpr],
    iv: &RationalInterval,
    tol: &Rational,
    stop_below: Option<&Rational>,
    max_depth: u32,
    bits: u32,
) -> Result<SupEnclosure, RadicalError> {
    certify_radicands(terms, iv)?;
    let compiled = compile_terms(terms, bits);
    // Mantissa-unit thresholds, floored so that comparing against them is
    // conservative-sound for the rational originals.
    let tol_m = DyadicInterval::from_point(tol, bits).mantissa_lo().clone();
    let stop_m = stop_below.map(|b| DyadicInterval::from_point(b, bits).mantissa_lo().clone());
    let mut nodes: u64 = 0;
    let mut best_lower = {
        let attained = enclosure_free_lower(&compiled, iv, bits)?;
        DyadicInterval::from_point(&attained, bits).mantissa_lo().clone()
    };
    let mut heap: std::collections::BinaryHeap<FrontierEntry> = std::collections::BinaryHeap::new();
    {
        let dcell = DyadicInterval::from_interval(iv, bits);
        let enc = sum_enclose(&compiled, &dcell, iv, bits)?;
        nodes += 1;
        heap.push(FrontierEntry { hi: enc.mantissa_hi().clone(), cell: iv.clone(), depth: 0 });
    }
    while let Some(top) = heap.pop() {
        // Lazy deletion: `best_lower` may have overtaken entries pushed
        // earlier.
        if top.hi < best_lower {
            continue;
        }
        let done = &top.hi - &best_lower <= tol_m
            || top.depth >= max_depth
            || stop_m.as_ref().map_or(false, |s| &top.hi <= s);
        if done {
            heap.push(top);
            break;
        }
        let (l, r) = top.cell.bisect();
        for half in [l, r] {
            let dcell = DyadicInterval::from_interval(&half, bits);
            let enc = sum_enclose(&compiled, &dcell, &half, bits)?;
            nodes += 1;
            // Improve the attained lower bound at the new midpoint.
            let mid_point = DyadicInterval::from_point(&half.midpoint(), bits);
            let mid = sum_enclose(&compiled, &mid_point, &half, bits)?;
            if mid.mantissa_lo() > &best_lower {
                best_lower = mid.mantissa_lo().clone();
            }
            if enc.mantissa_hi() >= &best_lower {
                heap.push(FrontierEntry {
                    hi: enc.mantissa_hi().clone(),
                    cell: half,
                    depth: top.depth + 1,
                });
            }
        }
    }
    // Drain survivors in descending order; the first one carries the
    // certified global upper bound.
    let mut sup_hi = best_lower.clone();
    let mut peak_points = Vec::new();
    let mut first = true;
    while let Some(e) = heap.pop() {
        if e.hi < best_lower {
            continue;
        }
        if first {
            sup_hi = e.hi.clone().max(best_lower.clone());
            first = false;
        }
        peak_points.push(e.cell.midpoint());
    }
    let scale = num_bigint::BigInt::from(1u8) << bits;
    Ok(SupEnclosure {
        enclosure: RationalInterval::new(
            Rational::new(best_lower, scale.clone()),
            Rational::new(sup_hi, scale),
        )
        .expect("ordered"),
        nodes,
        peak_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::pow10_neg;
    use num_traits::Signed;

    fn iv(a: i64, ad: i64, b: i64, bd: i64) -> RationalInterval {
        RationalInterval::new(rat(a, ad), rat(b, bd)).unwrap()
    }

    #[test]
    fn alpha_fixed_point_at_minus_half() {
        // α(−1/2) = −1/4 − (1/2)√(3 − 3/4) = −1/4 − (1/2)(3/2) = −1.
        let a = RadicalExpr::alpha();
        let enc = a.enclose(&RationalInterval::point(rat(-1, 2)), 120).unwrap();
        assert_eq!(enc.lo(), &rat(-1, 1));
        assert_eq!(enc.hi(), &rat(-1, 1)); // radicand 9/4 is a perfect square
    }

    #[test]
    fn alpha_at_zero() {
        // α(0) = −(√3)/2 ≈ −0.8660254.
        let a = RadicalExpr::alpha();
        let enc = a.enclose(&RationalInterval::point(rat(0, 1)), 120).unwrap();
        assert!(enc.width() <= pow10_neg(19));
        let m = crate::rational::to_f64(&enc.midpoint());
        assert!((m - (-0.8660254037844386)).abs() < 1e-15);
    }

    #[test]
    fn beta_fixed_point_candidate() {
        // β(−√(2/3)) = −√(2/3): at t² = 2/3 the radicand is 3/2 − 4/3 = 1/6
        // and β = −(2/3)√(2/3) − (2/3)√(1/6) = −√(2/3).  Check numerically on
        // a tight rational enclosure of −√(2/3).
        let b = RadicalExpr::beta();
        let t = -f64::sqrt(2.0 / 3.0);
        assert!((b.eval_f64(t) - t).abs() < 1e-15);
    }

    #[test]
    fn composition_squares_the_map() {
        // g(u) = u²: g(α(t)) = α(t)² = p² + q²r + 2pq·√r.
        let a = RadicalExpr::alpha();
        let g = Polynomial::from_ints(&[0, 0, 1]);
        let c = a.compose_poly(&g);
        let expect_p = &(&a.p * &a.p) + &(&(&a.q * &a.q) * &a.r);
        let expect_q = (&a.p * &a.q).scale(&rat(2, 1));
        assert_eq!(c.p, expect_p);
        assert_eq!(c.q, expect_q);
        assert_eq!(c.r, a.r);
    }

    #[test]
    fn composition_matches_float_eval() {
        let a = RadicalExpr::alpha();
        let g = Polynomial::from_ints(&[3, -1, 2, 5]); // 3 − t + 2t² + 5t³
        let c = a.compose_poly(&g);
        for &t in &[-0.9f64, -0.5, 0.0, 0.3, 0.7] {
            let direct = {
                let at = t / 2.0 - (3.0f64.sqrt() / 2.0) * (1.0 - t * t).sqrt();
                3.0 - at + 2.0 * at * at + 5.0 * at * at * at
            };
            assert!((c.eval_f64(t) - direct).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn enclose_linear_radical() {
        // e(t) = √t on [1, 4]: enclosure must contain [1, 2].
        let e = RadicalExpr::new(
            Polynomial::zero(),
            Polynomial::one(),
            Polynomial::var(),
        );
        let enc = e.enclose(&iv(1, 1, 4, 1), 96).unwrap();
        assert!(enc.lo() <= &rat(1, 1) && enc.hi() >= &rat(2, 1));
        assert!(enc.width() <= rat(11, 10));
    }

    #[test]
    fn enclose_rejects_definitely_negative_radicand() {
        let e = RadicalExpr::new(Polynomial::zero(), Polynomial::one(), Polynomial::var());
        let res = e.enclose(&iv(-4, 1, -2, 1), 96);
        assert!(matches!(res, Err(RadicalError::NegativeRadicand { .. })));
        let res = certify_radicands(&[e], &iv(-4, 1, -2, 1));
        assert!(matches!(res, Err(RadicalError::NegativeRadicand { .. })));
    }

    #[test]
    fn max_bound_simple_pass_and_fail() {
        // Σ = t² on [−1, 1]: sup = 1.
        let terms = vec![RadicalExpr::from_poly(Polynomial::from_ints(&[0, 0, 1]))];
        let cell = iv(-1, 1, 1, 1);
        match certify_max_bound(&terms, &cell, &rat(3, 2), 40, 96).unwrap() {
            MaxBoundResult::Pass { enclosure, .. } => {
                assert!(enclosure.contains(&rat(1, 1)), "sup enclosure {enclosure}");
            }
            other => panic!("expected Pass, got {other:?}"),
        }
        match certify_max_bound(&terms, &cell, &rat(1, 2), 40, 96).unwrap() {
            MaxBoundResult::Fail { witness, value_above, .. } => {
                // The refuting cell really does violate the bound everywhere.
                assert!(value_above > rat(1, 2));
                assert!(witness.lo().abs() > rat(1, 2) || witness.hi().abs() > rat(1, 2));
            }
            other => panic!("expected Fail, got {other:?}"),
        }
    }

    #[test]
    fn max_bound_exact_touch_never_fails() {
        // sup t² = 1 on [0, 1] with bound exactly 1.  Dyadic enclosures are
        // exact at the touching endpoint, so this certifies (≤ is
        // inclusive); the essential property is that a bound that *holds
        // with equality* must never produce Fail.
        let terms = vec![RadicalExpr::from_poly(Polynomial::from_ints(&[0, 0, 1]))];
        let res = certify_max_bound(&terms, &iv(0, 1, 1, 1), &rat(1, 1), 12, 96).unwrap();
        assert!(!matches!(res, MaxBoundResult::Fail { .. }));
    }

    #[test]
    fn max_bound_with_radical_term() {
        // √(1−t²) on [−1, 1]: sup = 1 at t = 0.
        let circle = RadicalExpr::new(
            Polynomial::zero(),
            Polynomial::one(),
            Polynomial::from_ints(&[1, 0, -1]),
        );
        let res = certify_max_bound(&[circle], &iv(-1, 1, 1, 1), &rat(11, 10), 50, 96).unwrap();
        match res {
            MaxBoundResult::Pass { enclosure, .. } => {
                assert!(enclosure.contains(&rat(1, 1)));
            }
            other => panic!("expected Pass, got {other:?}"),
        }
    }

    #[test]
    fn enclose_sup_finds_interior_peak() {
        // 1 − t² + t/4 has its max at t = 1/8: value 1 + 1/64.
        let p = Polynomial::new(vec![rat(1, 1), rat(1, 4), rat(-1, 1)]);
        let terms = vec![RadicalExpr::from_poly(p)];
        let sup = enclose_sup(&terms, &iv(-1, 1, 1, 1), &pow10_neg(10), None, 60, 96).unwrap();
        let truth = rat(65, 64);
        assert!(sup.enclosure.contains(&truth), "{} vs {truth}", sup.enclosure);
        assert!(sup.enclosure.width() <= pow10_neg(10));
        assert!(!sup.peak_points.is_empty());
        let peak = crate::rational::to_f64(&sup.peak_points[0]);
        assert!((peak - 0.125).abs() < 1e-3);
    }
}
