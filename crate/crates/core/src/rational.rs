//! Exact rational scalars, closed rational intervals, and outward-correct
//! square-root enclosures.
//!
//! Everything downstream (Sturm sequences, branch-and-bound, the simplex)
//! runs on [`Rational`] = arbitrary-precision `BigRational`, so there is no
//! rounding anywhere in the certification path.  Irrational quantities
//! (square roots, the proof's interval endpoints like −1/√2) are only ever
//! handled as [`RationalInterval`] enclosures with both ends rational; an
//! inequality certified on an enclosing interval is then valid on the true
//! one.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor used throughout tests and constant tables.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Errors from parsing, interval construction, and enclosure routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalError {
    /// Input string is not "num/den", a decimal, or an integer.
    Parse(String),
    /// Denominator of a "num/den" literal is zero.
    ZeroDenominator(String),
    /// Interval constructor called with lo > hi.
    EmptyInterval(String, String),
    /// Square root requested of an interval reaching below zero.
    NegativeRadicand(String),
    /// A tolerance argument was zero or negative.
    NonPositiveTolerance(String),
}

impl fmt::Display for RationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalError::Parse(s) => {
                write!(f, "cannot parse {s:?} as a rational (want \"p/q\", decimal, or integer)")
            }
            RationalError::ZeroDenominator(s) => write!(f, "zero denominator in {s:?}"),
            RationalError::EmptyInterval(lo, hi) => {
                write!(f, "empty interval: lo = {lo} exceeds hi = {hi}")
            }
            RationalError::NegativeRadicand(v) => {
                write!(f, "square root of negative value {v}")
            }
            RationalError::NonPositiveTolerance(e) => {
                write!(f, "tolerance must be positive, got {e}")
            }
        }
    }
}

impl std::error::Error for RationalError {}

/// Parses "num/den" (canonical exchange form), a decimal string like
/// "0.09465869" or "-1.23", or a plain integer.  No exponent notation.
pub fn parse_rational(s: &str) -> Result<Rational, RationalError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(RationalError::Parse(s.to_owned()));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| RationalError::Parse(s.to_owned()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| RationalError::Parse(s.to_owned()))?;
        if d.is_zero() {
            return Err(RationalError::ZeroDenominator(s.to_owned()));
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(t).ok_or_else(|| RationalError::Parse(s.to_owned()))
}

fn parse_decimal(t: &str) -> Option<Rational> {
    let (sign, body) = match t.as_bytes().first()? {
        b'-' => (-1, &t[1..]),
        b'+' => (1, &t[1..]),
        _ => (1, t),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(Rational::new(numer * sign, denom))
}

/// Renders as "num/den" in lowest terms (denominator 1 kept explicit so the
/// format is uniform for machine readers).
pub fn render_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal rendering with `sig` significant digits, round-half-up, trailing
/// zeros stripped.  `render_decimal(&(123000000/9465869), 12)` =
/// `"12.9940526301"`.
pub fn render_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig > 0, "need at least one significant digit");
    if r.is_zero() {
        return "0".to_owned();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // e = floor(log10 a), by exact comparison against powers of ten.
    let ten = Rational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut p = Rational::one();
    if a >= Rational::one() {
        while &p * &ten <= a {
            p *= &ten;
            e += 1;
        }
    } else {
        while p > a {
            p /= &ten;
            e -= 1;
        }
    }
    // Round a·10^(sig-1-e) half-up to an integer of exactly `sig` digits
    // (or sig+1 when rounding carries past a power of ten).
    let shift = sig as i64 - 1 - e;
    let scaled = scale_pow10(&a, shift);
    let half = rat(1, 2);
    let n = (&scaled + &half).floor().to_integer();
    let mut digits = n.to_string();
    if digits.len() > sig {
        // 999… rounded up to 1000…: exponent moved up one.
        e += 1;
        digits.truncate(sig);
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let ip = (e + 1) as usize;
        if ip >= digits.len() {
            out.push_str(&digits);
            out.push_str(&"0".repeat(ip - digits.len()));
        } else {
            out.push_str(&digits[..ip]);
            out.push('.');
            out.push_str(&digits[ip..]);
        }
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-e - 1) as usize));
        out.push_str(&digits);
    }
    strip_trailing_fraction_zeros(out)
}

/// Decimal rendering with a fixed number of places after the point,
/// round-half-up, no stripping.  Rationals with terminating expansions of at
/// most `places` digits round-trip exactly through [`parse_rational`].
pub fn render_decimal_places(r: &Rational, places: usize) -> String {
    let neg = r.is_negative();
    let a = r.abs();
    let scaled = scale_pow10(&a, places as i64);
    let n = (&scaled + &rat(1, 2)).floor().to_integer();
    let digits = n.to_string();
    let mut out = String::new();
    if neg && !n.is_zero() {
        out.push('-');
    }
    if places == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() > places {
        out.push_str(&digits[..digits.len() - places]);
        out.push('.');
        out.push_str(&digits[digits.len() - places..]);
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat(places - digits.len()));
        out.push_str(&digits);
    }
    out
}

fn scale_pow10(a: &Rational, shift: i64) -> Rational {
    let p = BigInt::from(10u32).pow(shift.unsigned_abs() as u32);
    if shift >= 0 {
        a * Rational::from_integer(p)
    } else {
        a / Rational::from_integer(p)
    }
}

fn strip_trailing_fraction_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Best-effort `f64` image of a rational (used only in reports and float
/// oracles, never in certification).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of clamped parts for out-of-range big ints.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Closed interval `[lo, hi]` with rational endpoints, `lo <= hi` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, RationalError> {
        if lo > hi {
            return Err(RationalError::EmptyInterval(
                render_rational(&lo),
                render_rational(&hi),
            ));
        }
        Ok(RationalInterval { lo, hi })
    }

    /// Degenerate interval `[r, r]`.
    pub fn point(r: Rational) -> Self {
        RationalInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Outward widening by `eps` on both sides.
    /// Outward rounding onto the `2^-bits` dyadic grid: the result contains
    /// `self` and is at most `2^(1-bits)` wider.  Used by the interval
    /// branch-and-bound to keep intermediate denominators bounded no matter
    /// how deep the subdivision goes.
    pub fn round_out(&self, bits: u32) -> Self {
        RationalInterval {
            lo: dyadic_round(&self.lo, bits, RoundMode::Floor),
            hi: dyadic_round(&self.hi, bits, RoundMode::Ceil),
        }
    }

    pub fn widen(&self, eps: &Rational) -> Self {
        RationalInterval { lo: &self.lo - eps, hi: &self.hi + eps }
    }

    pub fn add(&self, other: &RationalInterval) -> Self {
        RationalInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RationalInterval) -> Self {
        RationalInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> Self {
        RationalInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &RationalInterval) -> Self {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        RationalInterval { lo, hi }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_negative() {
            RationalInterval { lo: &self.hi * s, hi: &self.lo * s }
        } else {
            RationalInterval { lo: &self.lo * s, hi: &self.hi * s }
        }
    }

    pub fn shift(&self, s: &Rational) -> Self {
        RationalInterval { lo: &self.lo + s, hi: &self.hi + s }
    }

    /// Intersection; `None` when disjoint.
    pub fn intersect(&self, other: &RationalInterval) -> Option<Self> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(RationalInterval { lo, hi })
        } else {
            None
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RationalInterval) -> Self {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        RationalInterval { lo, hi }
    }

    /// Splits at the midpoint into (left, right).
    pub fn bisect(&self) -> (Self, Self) {
        let m = self.midpoint();
        (
            RationalInterval { lo: self.lo.clone(), hi: m.clone() },
            RationalInterval { lo: m, hi: self.hi.clone() },
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", render_rational(&self.lo), render_rational(&self.hi))
    }
}

/// Rational enclosure of `sqrt` over a nonnegative interval: returns `[l, h]`
/// with `l² ≤ x.lo`, `x.hi ≤ h²`, and `h − l ≤ eps` plus the true range
/// width.  Perfect squares at the endpoints come out exact, which the
/// cap-lemma certification depends on.
///
/// Implementation: for `v = p/q` and `N = ceil(2/eps)`, the floor square root
/// `s = isqrt(p·q·N²)` gives `s/(qN) ≤ √v ≤ (s+1)/(qN)`, each side within
/// `1/(qN) ≤ eps/2` of the truth — no iteration, no rounding mode to get
/// wrong.
pub fn sqrt_enclose(x: &RationalInterval, eps: &Rational) -> Result<RationalInterval, RationalError> {
    if !eps.is_positive() {
        return Err(RationalError::NonPositiveTolerance(render_rational(eps)));
    }
    if x.lo.is_negative() {
        return Err(RationalError::NegativeRadicand(render_rational(&x.lo)));
    }
    let n_scale: BigInt = (rat(2, 1) / eps).ceil().to_integer().max(BigInt::one());
    let lo = sqrt_bound(&x.lo, &n_scale, false);
    let hi = sqrt_bound(&x.hi, &n_scale, true);
    Ok(RationalInterval { lo, hi })
}

/// Enclosure of `sqrt(v)` for a single nonnegative rational.
pub fn sqrt_point_enclose(v: &Rational, eps: &Rational) -> Result<RationalInterval, RationalError> {
    sqrt_enclose(&RationalInterval::point(v.clone()), eps)
}

fn sqrt_bound(v: &Rational, n_scale: &BigInt, upper: bool) -> Rational {
    debug_assert!(!v.is_negative());
    if v.is_zero() {
        return Rational::zero();
    }
    let p: BigUint = v.numer().magnitude().clone();
    let q: BigUint = v.denom().magnitude().clone();
    let n: BigUint = n_scale.magnitude().clone();
    let t = &p * &q * &n * &n;
    let s = t.sqrt(); // floor square root
    let exact = &s * &s == t;
    let num = if upper && !exact { s + BigUint::one() } else { s };
    Rational::new(BigInt::from(num), BigInt::from(q * n))
}

/// Floor of a nonnegative rational as a `BigInt` (used for bound floors).
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Convenience: `10^-k` as an exact rational.
pub fn pow10_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

/// Rounding directions for dyadic snapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundMode {
    Floor,
    Ceil,
    Nearest,
}

/// Rounds `x` onto the grid of integer multiples of `2^-bits` in the given
/// direction (`Nearest` breaks ties upward).  Exact rationals with huge
/// denominators — deep bisection midpoints, LP vertex coordinates — get
/// replaced by nearby dyadics so later arithmetic stays cheap; directed
/// modes let callers keep whichever inequality they rely on sound.
pub fn dyadic_round(x: &Rational, bits: u32, mode: RoundMode) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * Rational::from(scale.clone());
    let k = match mode {
        RoundMode::Floor => scaled.floor().to_integer(),
        RoundMode::Ceil => scaled.ceil().to_integer(),
        RoundMode::Nearest => (scaled + rat(1, 2)).floor().to_integer(),
    };
    Rational::new(k, scale)
}

/// Fixed-point dyadic interval `[lo, hi]·2^-bits` with integer mantissas.
///
/// The branch-and-bound workhorse.  Addition and subtraction are exact on a
/// shared grid; every other operation rounds outward onto it, so operands
/// never grow past the value's own magnitude plus `bits` fractional bits.
/// `BigRational` interval arithmetic pays a gcd reduction on *every*
/// operation and its denominators compound under composition and powers;
/// mantissa arithmetic makes deep subdivision two orders of magnitude
/// faster while staying exactly as sound — each rounding is an outward
/// widening of less than `2^-bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

impl DyadicInterval {
    /// Outward conversion: the result contains `iv`.
    pub fn from_interval(iv: &RationalInterval, bits: u32) -> Self {
        DyadicInterval {
            lo: mantissa_floor(&iv.lo, bits),
            hi: mantissa_ceil(&iv.hi, bits),
            bits,
        }
    }

    /// Outward conversion of a single rational (a width-`≤ 2^-bits`
    /// enclosure of it).
    pub fn from_point(x: &Rational, bits: u32) -> Self {
        DyadicInterval {
            lo: mantissa_floor(x, bits),
            hi: mantissa_ceil(x, bits),
            bits,
        }
    }

    pub fn zero(bits: u32) -> Self {
        DyadicInterval { lo: BigInt::zero(), hi: BigInt::zero(), bits }
    }

    pub fn to_interval(&self) -> RationalInterval {
        let scale = BigInt::one() << self.bits;
        RationalInterval {
            lo: Rational::new(self.lo.clone(), scale.clone()),
            hi: Rational::new(self.hi.clone(), scale),
        }
    }

    pub fn lo_rational(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.bits)
    }

    pub fn hi_rational(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa_lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn mantissa_hi(&self) -> &BigInt {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Point interval at the grid point nearest the middle (floor side);
    /// always inside `self`.
    pub fn midpoint_singleton(&self) -> Self {
        let m: BigInt = (&self.lo + &self.hi) >> 1;
        DyadicInterval { lo: m.clone(), hi: m, bits: self.bits }
    }

    /// Exact: mantissa addition loses nothing on a shared grid.
    pub fn add(&self, o: &DyadicInterval) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        DyadicInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, bits: self.bits }
    }

    /// Exact.
    pub fn sub(&self, o: &DyadicInterval) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        DyadicInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, bits: self.bits }
    }

    pub fn neg(&self) -> Self {
        DyadicInterval { lo: -self.hi.clone(), hi: -self.lo.clone(), bits: self.bits }
    }

    /// Outward-rounded product: exact mantissa products live at scale
    /// `2^-2·bits` and are floored/ceiled back onto the grid.
    pub fn mul(&self, o: &DyadicInterval) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        let pp = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = pp.iter().min().expect("four products");
        let hi = pp.iter().max().expect("four products");
        DyadicInterval {
            lo: shr_floor(lo, self.bits),
            hi: shr_ceil(hi, self.bits),
            bits: self.bits,
        }
    }

    /// Outward enclosure of `√self`, or `None` when the interval is entirely
    /// negative.  A lower end dipping below zero is clamped at zero — the
    /// clamped interval still contains every value the true square root
    /// attains when the radicand is in fact nonnegative.
    ///
    /// `√(m·2^-b) = √(m·2^b)·2^-b`, so integer floor/ceil square roots at
    /// scale `2^b` land exactly back on the grid; perfect squares stay
    /// exact.
    pub fn sqrt(&self) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        let lo_clamped = if self.lo.is_negative() { BigInt::zero() } else { self.lo.clone() };
        let lo_scaled: BigUint = (lo_clamped << self.bits).magnitude().clone();
        let hi_scaled: BigUint = (self.hi.clone() << self.bits).magnitude().clone();
        let lo_root = lo_scaled.sqrt();
        let hi_root_floor = hi_scaled.sqrt();
        let hi_root = if &hi_root_floor * &hi_root_floor == hi_scaled {
            hi_root_floor
        } else {
            hi_root_floor + BigUint::one()
        };
        Some(DyadicInterval {
            lo: BigInt::from(lo_root),
            hi: BigInt::from(hi_root),
            bits: self.bits,
        })
    }

    /// Intersection, `None` when disjoint.  Two outward enclosures of the
    /// same true range always intersect, so callers treat `None` as "keep
    /// either one".
    pub fn meet(&self, o: &DyadicInterval) -> Option<Self> {
        debug_assert_eq!(self.bits, o.bits);
        let lo = if self.lo >= o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi <= o.hi { self.hi.clone() } else { o.hi.clone() };
        if lo <= hi {
            Some(DyadicInterval { lo, hi, bits: self.bits })
        } else {
            None
        }
    }
}

fn mantissa_floor(x: &Rational, bits: u32) -> BigInt {
    (x.numer() << bits).div_floor(x.denom())
}

fn mantissa_ceil(x: &Rational, bits: u32) -> BigInt {
    // ceil(a/d) = −floor(−a/d); denominators are kept positive by
    // `BigRational`'s invariant.
    -((-(x.numer()) << bits).div_floor(x.denom()))
}

/// `x / 2^bits` rounded toward −∞ (BigInt's `>>` is an arithmetic shift).
fn shr_floor(x: &BigInt, bits: u32) -> BigInt {
    x >> bits
}

fn shr_ceil(x: &BigInt, bits: u32) -> BigInt {
    -((-x) >> bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_fraction_and_decimal_forms() {
        assert_eq!(parse_rational("9465869/100000000").unwrap(), rat(9465869, 100000000));
        assert_eq!(parse_rational("0.09465869").unwrap(), rat(9465869, 100000000));
        assert_eq!(parse_rational("-1.23").unwrap(), rat(-123, 100));
        assert_eq!(parse_rational("123/100").unwrap(), rat(123, 100));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("  1/2 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), rat(2, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "abc", "1/0", "1.2.3", "1e5", "--2", "1/2/3", "."] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
        assert!(matches!(parse_rational("3/0"), Err(RationalError::ZeroDenominator(_))));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(render_decimal(&rat(123000000, 9465869), 12), "12.9940526327");
        assert_eq!(render_decimal(&rat(9465869, 100000000), 12), "0.09465869");
        assert_eq!(render_decimal(&rat(-1, 2), 6), "-0.5");
        assert_eq!(render_decimal(&rat(1000, 1), 3), "1000");
        assert_eq!(render_decimal(&Rational::zero(), 5), "0");
        assert_eq!(render_decimal(&rat(999999, 1000), 3), "1000");
        assert_eq!(render_decimal_places(&rat(9465869, 100000000), 8), "0.09465869");
        assert_eq!(render_decimal_places(&rat(1, 3), 4), "0.3333");
        assert_eq!(render_decimal_places(&rat(2, 3), 4), "0.6667");
        assert_eq!(render_decimal_places(&rat(-1, 8), 3), "-0.125");
    }

    #[test]
    fn eight_place_constants_round_trip_through_decimal() {
        // Certificate coefficients are exact multiples of 10^-8; rendering at
        // eight places and re-parsing must be the identity on them.
        for s in ["0.09465869", "0.17273741", "0.33128438", "0.17275228", "0.18905584",
                  "0.00334265", "0.03616728", "1.23"] {
            let r = parse_rational(s).unwrap();
            let rendered = render_decimal_places(&r, 8);
            assert_eq!(parse_rational(&rendered).unwrap(), r, "{s} -> {rendered}");
        }
        assert_eq!(render_decimal_places(&parse_rational("0.09465869").unwrap(), 8), "0.09465869");
    }

    #[test]
    fn interval_basics() {
        let i = RationalInterval::new(rat(-1, 2), rat(1, 3)).unwrap();
        assert_eq!(i.width(), rat(5, 6));
        assert_eq!(i.midpoint(), rat(-1, 12));
        assert!(i.contains(&rat(0, 1)));
        assert!(!i.contains(&rat(1, 2)));
        assert!(RationalInterval::new(rat(1, 2), rat(1, 3)).is_err());
        let (l, r) = i.bisect();
        assert_eq!(l.hi(), r.lo());
        assert_eq!(l.hull(&r), i);
    }

    #[test]
    fn interval_multiplication_signs() {
        let a = RationalInterval::new(rat(-2, 1), rat(3, 1)).unwrap();
        let b = RationalInterval::new(rat(-5, 1), rat(-1, 1)).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.lo(), &rat(-15, 1));
        assert_eq!(p.hi(), &rat(10, 1));
    }

    #[test]
    fn sqrt_enclose_perfect_squares_exact() {
        let e = pow10_neg(30);
        let i = sqrt_enclose(&RationalInterval::point(rat(4, 1)), &e).unwrap();
        assert_eq!(i.lo(), &rat(2, 1));
        assert_eq!(i.hi(), &rat(2, 1));
        let i = sqrt_enclose(&RationalInterval::point(rat(1, 4)), &e).unwrap();
        assert_eq!(i.lo(), &rat(1, 2));
        assert_eq!(i.hi(), &rat(1, 2));
        let i = sqrt_enclose(&RationalInterval::new(rat(1, 4), rat(9, 4)).unwrap(), &e).unwrap();
        assert_eq!(i.lo(), &rat(1, 2));
        assert_eq!(i.hi(), &rat(3, 2));
    }

    #[test]
    fn sqrt_enclose_two() {
        let e = pow10_neg(20);
        let i = sqrt_point_enclose(&rat(2, 1), &e).unwrap();
        assert!(i.lo() * i.lo() <= rat(2, 1));
        assert!(i.hi() * i.hi() >= rat(2, 1));
        assert!(i.width() <= e);
        // 1.41421356237309504880...
        assert_eq!(render_decimal(&i.midpoint(), 12), "1.41421356237");
    }

    #[test]
    fn sqrt_enclose_rejects_bad_inputs() {
        let e = pow10_neg(10);
        assert!(matches!(
            sqrt_point_enclose(&rat(-1, 4), &e),
            Err(RationalError::NegativeRadicand(_))
        ));
        assert!(matches!(
            sqrt_point_enclose(&rat(2, 1), &Rational::zero()),
            Err(RationalError::NonPositiveTolerance(_))
        ));
    }

    #[test]
    fn floor_and_pow10() {
        assert_eq!(floor_int(&rat(123000000 * 1, 9465869)), BigInt::from(12));
        assert_eq!(pow10_neg(3), rat(1, 1000));
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(n in -10_000_000i64..10_000_000, d in 1i64..1_000_000) {
            let r = rat(n, d);
            prop_assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
        }

        #[test]
        fn interval_ops_preserve_membership(
            a in -1000i64..1000, b in -1000i64..1000,
            c in -1000i64..1000, d in -1000i64..1000,
            ta in 0i64..=100, tb in 0i64..=100,
        ) {
            let (alo, ahi) = (a.min(b), a.max(b));
            let (blo, bhi) = (c.min(d), c.max(d));
            let x = RationalInterval::new(rat(alo, 7), rat(ahi, 7)).unwrap();
            let y = RationalInterval::new(rat(blo, 7), rat(bhi, 7)).unwrap();
            // Points inside, by convex combination.
            let px = &(rat(alo, 7) * rat(100 - ta, 100)) + &(rat(ahi, 7) * rat(ta, 100));
            let py = &(rat(blo, 7) * rat(100 - tb, 100)) + &(rat(bhi, 7) * rat(tb, 100));
            prop_assert!(x.add(&y).contains(&(&px + &py)));
            prop_assert!(x.sub(&y).contains(&(&px - &py)));
            prop_assert!(x.mul(&y).contains(&(&px * &py)));
            prop_assert!(x.neg().contains(&(-px.clone())));
        }

        #[test]
        fn sqrt_enclosure_brackets_truth(p in 0i64..1_000_000, q in 1i64..1000) {
            let v = rat(p, q);
            let e = pow10_neg(12);
            let i = sqrt_point_enclose(&v, &e).unwrap();
            prop_assert!(i.lo() * i.lo() <= v);
            prop_assert!(i.hi() * i.hi() >= v);
            prop_assert!(i.width() <= e);
            prop_assert!(!i.lo().is_negative());
        }
    }
}
