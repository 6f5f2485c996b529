//! Exact univariate polynomials over the rationals: arithmetic, Sturm
//! sequences, root counting and isolation, certified sign verdicts on
//! intervals, and certified maxima.
//!
//! Sturm's theorem does the heavy lifting: the number of distinct real roots
//! of `p` in `(a, b]` equals `V(a) − V(b)` where `V(t)` counts sign changes
//! along the Sturm chain at `t`.  With exact rational coefficients the chain
//! and every evaluation are exact, so root counts are *proofs*, not
//! estimates.  Endpoint roots — which break the theorem's precondition — are
//! rational by assumption here and get divided out exactly before counting.

use crate::rational::{rat, Rational, RationalInterval};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Errors from polynomial analysis routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Root analysis requested on the zero polynomial (every point is a root).
    ZeroPolynomial,
    /// Isolation width must be positive.
    NonPositiveWidth(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => {
                write!(f, "root analysis of the zero polynomial is undefined")
            }
            PolyError::NonPositiveWidth(w) => {
                write!(f, "isolation width must be positive, got {w}")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Dense univariate polynomial, coefficients lowest-degree first, with no
/// trailing zero coefficients (the zero polynomial is the empty list).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c · t^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Polynomial::new(v)
    }

    /// Convenience for tests: integer coefficients, lowest-degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Floating evaluation for reports and float oracles only.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + crate::rational::to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1, 1))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact Euclidean division: `self = q·d + r` with `deg r < deg d`.
    /// Panics on a zero divisor (internal misuse, not an input condition).
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / lead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &(dc * &factor);
                    rem[k + i] = v;
                }
                quo[k] = factor;
            }
            // The leading term cancels by construction.
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Polynomial::new(quo), Polynomial::new(rem))
    }

    /// Naive interval extension (Horner with interval coefficients).
    pub fn interval_eval(&self, iv: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(iv).shift(c);
        }
        acc
    }

    /// Sharper range enclosure: intersection of the naive extension with the
    /// mean-value form `p(m) + p'(iv)·(iv − m)`, whose excess width is
    /// quadratic in the interval width.  Always contains the true range.
    pub fn range_enclose(&self, iv: &RationalInterval) -> RationalInterval {
        if iv.is_point() {
            return RationalInterval::point(self.eval(iv.lo()));
        }
        let naive = self.interval_eval(iv);
        let m = iv.midpoint();
        let centered = iv.shift(&-m.clone());
        let mv = RationalInterval::point(self.eval(&m))
            .add(&self.derivative().interval_eval(iv).mul(&centered));
        naive.intersect(&mv).unwrap_or(naive) // both contain the range, so never disjoint
    }

    /// [`Polynomial::interval_eval`] with outward dyadic rounding after every
    /// Horner step.  Intermediates stay on the `2^-bits` grid, so the cost of
    /// a node does not grow with the denominators of the cell's endpoints —
    /// the difference between minutes and milliseconds once branch-and-bound
    /// cells get narrow.  Adds at most `deg·2^(1-bits)` of spurious width and
    /// always contains the exact extension's result.
    pub fn interval_eval_prec(&self, iv: &RationalInterval, bits: u32) -> RationalInterval {
        let mut acc = RationalInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(iv).shift(c).round_out(bits);
        }
        acc
    }

    /// [`Polynomial::range_enclose`] in fixed-precision outward-rounded
    /// arithmetic.  Soundness never depends on `bits` (every rounding is
    /// outward); only tightness does.
    pub fn range_enclose_prec(&self, iv: &RationalInterval, bits: u32) -> RationalInterval {
        if iv.is_point() {
            // Even a point benefits: a deep bisection midpoint has a huge
            // denominator, and rounded Horner keeps its powers bounded.
            return self.interval_eval_prec(iv, bits);
        }
        let naive = self.interval_eval_prec(iv, bits);
        // Mean-value form needs its center inside the interval; the snapped
        // midpoint can escape only when the cell is narrower than the grid.
        let m = crate::rational::dyadic_round(
            &iv.midpoint(),
            bits,
            crate::rational::RoundMode::Nearest,
        );
        let m = if iv.contains(&m) { m } else { iv.midpoint() };
        let centered = iv.shift(&-m.clone()).round_out(bits);
        let fm = self.interval_eval_prec(&RationalInterval::point(m), bits);
        let mv = fm.add(&self.derivative().interval_eval_prec(iv, bits).mul(&centered));
        naive.intersect(&mv).unwrap_or(naive)
    }

    /// Coefficients serialized as "num/den" strings, lowest degree first.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(crate::rational::render_rational).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·t")?,
                _ => write!(f, "({c})·t^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + &(a * b);
                out[i + j] = v;
            }
        }
        Polynomial::new(out)
    }
}

/// Sturm chain of `p`: `s₀ = p`, `s₁ = p′`, `s_{i+1} = −rem(s_{i−1}, s_i)`,
/// stopping before the zero remainder.  Kept in textbook (unnormalized)
/// form so chains match hand calculations exactly.
pub fn sturm_sequence(p: &Polynomial) -> Result<Vec<Polynomial>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain); // nonzero constant: chain is just [p]
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    Ok(chain)
}

fn sign_changes(chain: &[Polynomial], t: &Rational) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None; // sign of previous nonzero value
    for s in chain {
        let v = s.eval(t);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Divides out every factor of `(t − r)` and returns `(reduced, multiplicity)`.
fn deflate_at(p: &Polynomial, r: &Rational) -> (Polynomial, usize) {
    let linear = Polynomial::new(vec![-r.clone(), Rational::one()]);
    let mut q = p.clone();
    let mut mult = 0;
    while !q.is_zero() && q.eval(r).is_zero() {
        let (quo, rem) = q.div_rem(&linear);
        debug_assert!(rem.is_zero());
        q = quo;
        mult += 1;
    }
    (q, mult)
}

/// Exact count of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`.  Rational endpoint roots are deflated out first so Sturm's
/// precondition (`p` nonzero at both ends) always holds.
pub fn count_roots(p: &Polynomial, iv: &RationalInterval) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (q, _) = deflate_at(p, iv.lo());
    let (q, hi_mult) = deflate_at(&q, iv.hi());
    let hi_is_root = hi_mult > 0 && !iv.is_point();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(usize::from(hi_is_root));
    }
    let chain = sturm_sequence(&q)?;
    let count = sign_changes(&chain, iv.lo()) - sign_changes(&chain, iv.hi());
    Ok(count + usize::from(hi_is_root))
}

/// Pairwise-disjoint intervals, each of width ≤ `width` and containing
/// exactly one distinct real root of `p`, jointly covering every root in the
/// *closed* interval `iv`.  Exact rational roots hit by the dyadic
/// subdivision (interval endpoints or bisection midpoints) are returned as
/// degenerate point intervals; other rational roots are isolated like any
/// irrational root.
pub fn isolate_roots(
    p: &Polynomial,
    iv: &RationalInterval,
    width: &Rational,
) -> Result<Vec<RationalInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(PolyError::NonPositiveWidth(crate::rational::render_rational(width)));
    }

    // Peel off exact roots at the interval endpoints, then bisect; whenever a
    // midpoint happens to be a root it is deflated out too and the (fully
    // deterministic) subdivision restarts on the reduced polynomial.  After
    // the final pass every root of `q` is strictly interior to its cell,
    // because `q` is nonzero at all dyadic cell endpoints.
    let mut exact: Vec<Rational> = Vec::new();
    let mut q = p.clone();
    for end in [iv.lo(), iv.hi()] {
        let (r, mult) = deflate_at(&q, end);
        if mult > 0 && !exact.contains(end) {
            exact.push(end.clone());
        }
        q = r;
    }
    let mut cells: Vec<RationalInterval> = Vec::new();
    let mut chain: Vec<Polynomial> = Vec::new();
    if q.degree().unwrap_or(0) > 0 && !iv.is_point() {
        'restart: loop {
            cells.clear();
            chain = sturm_sequence(&q)?;
            let total = sign_changes(&chain, iv.lo()) - sign_changes(&chain, iv.hi());
            let mut stack = vec![(iv.clone(), total)];
            while let Some((cell, count)) = stack.pop() {
                match count {
                    0 => {}
                    1 if &cell.width() <= width => cells.push(cell),
                    _ => {
                        let m = cell.midpoint();
                        if q.eval(&m).is_zero() {
                            exact.push(m.clone());
                            q = deflate_at(&q, &m).0;
                            if q.degree().unwrap_or(0) == 0 {
                                cells.clear();
                                break 'restart;
                            }
                            continue 'restart;
                        }
                        let (l, r) = cell.bisect();
                        let vm = sign_changes(&chain, &m);
                        let cl = sign_changes(&chain, l.lo()) - vm;
                        stack.push((r, count - cl));
                        stack.push((l, cl));
                    }
                }
            }
            break;
        }
    }

    // Post-process cells so the output is pairwise disjoint as closed sets:
    // no cell may contain an exact root (even on its boundary) and adjacent
    // cells may not share an endpoint.  Each shrink keeps the cell's unique
    // root inside, verified by Sturm counts, so correctness is preserved.
    cells.sort_by(|a, b| a.lo().cmp(b.lo()));
    let count_in = |chain: &[Polynomial], lo: &Rational, hi: &Rational| -> usize {
        sign_changes(chain, lo) - sign_changes(chain, hi)
    };
    let mut out: Vec<RationalInterval> = Vec::new();
    let mut prev_hi: Option<Rational> = None;
    for cell in cells {
        let mut lo = cell.lo().clone();
        let mut hi = cell.hi().clone();
        let mut as_point: Option<Rational> = None;

        // Move boundaries onto any exact roots strictly inside the cell
        // (possible when an earlier restart found them at a depth the final
        // pass never revisits).
        loop {
            let interior = exact.iter().find(|r| &lo < *r && *r < &hi).cloned();
            match interior {
                None => break,
                Some(r) => {
                    if count_in(&chain, &lo, &r) == 1 {
                        hi = r;
                    } else {
                        lo = r;
                    }
                }
            }
        }
        // Shrink away boundary points that are exact roots or shared with the
        // previously emitted cell.  The cell's root is strictly interior, so
        // bisection finds a separating dyadic point in finitely many steps.
        let needs_lo_shrink =
            |lo: &Rational| exact.contains(lo) || prev_hi.as_ref() == Some(lo);
        while as_point.is_none() && needs_lo_shrink(&lo) {
            let m = (&lo + &hi) / rat(2, 1);
            if q.eval(&m).is_zero() {
                as_point = Some(m); // the cell's root is exactly m
            } else if count_in(&chain, &m, &hi) == 1 {
                lo = m;
                break;
            } else {
                hi = m;
            }
        }
        while as_point.is_none() && exact.contains(&hi) {
            let m = (&lo + &hi) / rat(2, 1);
            if q.eval(&m).is_zero() {
                as_point = Some(m);
            } else if count_in(&chain, &lo, &m) == 1 {
                hi = m;
                break;
            } else {
                lo = m;
            }
        }
        let emitted = match as_point {
            Some(m) => RationalInterval::point(m),
            None => RationalInterval::new(lo, hi).expect("shrink preserved order"),
        };
        prev_hi = Some(emitted.hi().clone());
        out.push(emitted);
    }
    for r in exact {
        if iv.contains(&r) {
            out.push(RationalInterval::point(r));
        }
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    Ok(out)
}

/// Headline classification of a sign verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignTag {
    NonnegativeOn,
    NonpositiveOn,
    StrictlyNegativeInterior,
    Mixed,
}

impl fmt::Display for SignTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignTag::NonnegativeOn => "nonnegative",
            SignTag::NonpositiveOn => "nonpositive",
            SignTag::StrictlyNegativeInterior => "strictly-negative-interior",
            SignTag::Mixed => "mixed",
        };
        f.write_str(s)
    }
}

/// Certified sign classification of `p` on a closed interval.
///
/// The boolean facets carry the full truth table — the zero polynomial, for
/// instance, is simultaneously nonnegative and nonpositive, and claims that
/// ask for "f′ ≤ 0" and "f″ ≥ 0" must both accept it — while `tag` is the
/// single headline used in reports.  `Mixed` always ships witnesses: an
/// isolating interval for a sign change plus sample points of each sign.
#[derive(Debug, Clone)]
pub struct SignVerdict {
    pub tag: SignTag,
    pub nonnegative: bool,
    pub nonpositive: bool,
    /// Negative everywhere on the closed interval except possibly the ends.
    pub strictly_negative_interior: bool,
    /// No roots at all in the closed interval (so strict inequality holds).
    pub strict_on_closure: bool,
    /// For `Mixed`: a sign-change interval and the two witness samples.
    pub witnesses: Vec<RationalInterval>,
}

/// Certifies the sign of `p` on `iv` by isolating every root and sampling
/// each root-free gap once (signs are constant between consecutive roots).
pub fn certify_sign(p: &Polynomial, iv: &RationalInterval) -> Result<SignVerdict, PolyError> {
    if p.is_zero() {
        return Ok(SignVerdict {
            tag: SignTag::NonnegativeOn,
            nonnegative: true,
            nonpositive: true,
            strictly_negative_interior: false,
            strict_on_closure: false,
            witnesses: Vec::new(),
        });
    }
    let width = {
        let w = iv.width();
        if w.is_zero() { Rational::one() } else { w / rat(64, 1) }
    };
    let roots = isolate_roots(p, iv, &width)?;

    // Sample points: both endpoints plus one point in each gap between
    // consecutive root intervals.
    let mut samples: Vec<Rational> = vec![iv.lo().clone(), iv.hi().clone()];
    for w in roots.windows(2) {
        if w[0].hi() < w[1].lo() {
            samples.push((w[0].hi() + w[1].lo()) / rat(2, 1));
        }
    }
    if let Some(first) = roots.first() {
        if iv.lo() < first.lo() {
            samples.push((iv.lo() + first.lo()) / rat(2, 1));
        }
    }
    if let Some(last) = roots.last() {
        if last.hi() < iv.hi() {
            samples.push((last.hi() + iv.hi()) / rat(2, 1));
        }
    }

    let mut any_pos: Option<Rational> = None;
    let mut any_neg: Option<Rational> = None;
    for s in &samples {
        let v = p.eval(s);
        if v.is_positive() && any_pos.is_none() {
            any_pos = Some(s.clone());
        }
        if v.is_negative() && any_neg.is_none() {
            any_neg = Some(s.clone());
        }
    }

    let has_interior_root = roots
        .iter()
        .any(|r| !(r.is_point() && (r.lo() == iv.lo() || r.lo() == iv.hi())));
    // A root interval strictly inside iv means p touches zero there; roots
    // exactly at the endpoints (point intervals) don't affect interior
    // strictness.
    let nonnegative = any_neg.is_none();
    let nonpositive = any_pos.is_none();
    let strictly_negative_interior = nonpositive && !has_interior_root && any_neg.is_some();
    let strict_on_closure = roots.is_empty();

    let (tag, witnesses) = if !nonnegative && !nonpositive {
        // Find a sign-change witness: a root interval between a negative and
        // a positive sample (exists whenever both signs occur).
        let pos = any_pos.clone().unwrap();
        let neg = any_neg.clone().unwrap();
        let (a, b) = if pos < neg { (&pos, &neg) } else { (&neg, &pos) };
        let change = roots
            .iter()
            .find(|r| a <= r.hi() && r.lo() <= b)
            .cloned()
            .unwrap_or_else(|| {
                RationalInterval::new(a.clone(), b.clone()).expect("ordered witnesses")
            });
        (
            SignTag::Mixed,
            vec![change, RationalInterval::point(neg), RationalInterval::point(pos)],
        )
    } else if strictly_negative_interior {
        (SignTag::StrictlyNegativeInterior, Vec::new())
    } else if nonpositive && any_neg.is_some() {
        (SignTag::NonpositiveOn, Vec::new())
    } else {
        (SignTag::NonnegativeOn, Vec::new())
    };

    Ok(SignVerdict {
        tag,
        nonnegative,
        nonpositive,
        strictly_negative_interior,
        strict_on_closure,
        witnesses,
    })
}

/// Certified maximum of a polynomial over a closed interval.
#[derive(Debug, Clone)]
pub struct PolyMax {
    /// `[best attained value, certified upper bound]`; the true maximum lies
    /// inside.
    pub enclosure: RationalInterval,
    /// Value of `p` at the higher endpoint of `iv`'s two ends (exact).
    pub best_endpoint_value: Rational,
    /// Candidate locations: interval endpoints and isolated critical points.
    pub candidates: Vec<RationalInterval>,
}

/// Certifies `max p` over `iv` via critical points: the maximum of a
/// differentiable function on a compact interval is attained at an endpoint
/// or a zero of the derivative, so enclosing `p` over each isolated critical
/// interval plus the exact endpoint values brackets the true maximum.
pub fn certify_poly_max(
    p: &Polynomial,
    iv: &RationalInterval,
    refine_width: &Rational,
) -> Result<PolyMax, PolyError> {
    let d = p.derivative();
    let mut candidates = vec![
        RationalInterval::point(iv.lo().clone()),
        RationalInterval::point(iv.hi().clone()),
    ];
    if !d.is_zero() && d.degree().unwrap_or(0) >= 1 {
        for r in isolate_roots(&d, iv, refine_width)? {
            // Clip to iv (isolating cells live inside iv already, but exact
            // endpoint roots may coincide with iv's ends — harmless).
            candidates.push(r);
        }
    }
    let v_lo = p.eval(iv.lo());
    let v_hi = p.eval(iv.hi());
    let best_endpoint_value = if v_lo >= v_hi { v_lo.clone() } else { v_hi.clone() };

    let mut attained = best_endpoint_value.clone();
    let mut upper = best_endpoint_value.clone();
    for c in &candidates {
        let enc = p.range_enclose(c);
        if enc.hi() > &upper {
            upper = enc.hi().clone();
        }
        // Any point evaluation is attained; use the candidate midpoint.
        let mid_val = p.eval(&c.midpoint());
        if mid_val > attained {
            attained = mid_val;
        }
    }
    Ok(PolyMax {
        enclosure: RationalInterval::new(attained, upper).expect("attained <= upper"),
        best_endpoint_value,
        candidates,
    })
}
