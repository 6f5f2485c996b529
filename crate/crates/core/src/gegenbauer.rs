//! Gegenbauer (ultraspherical) polynomials normalized to `G_k(1) = 1`, the
//! sparse expansion type `f = Σ c_k·G_k^{(d)}`, exact basis conversion, and
//! the positive-definiteness quadratic form that underpins every Delsarte
//! bound.
//!
//! Normalized recursion (dimension `d ≥ 3`):
//!
//! ```text
//! G_0 = 1,  G_1 = t,
//! G_k = ((2k + d − 4)·t·G_{k−1} − (k − 1)·G_{k−2}) / (k + d − 3)
//! ```
//!
//! For `d = 3` these are the Legendre polynomials.  The load-bearing fact
//! (Schoenberg) is that for any finite point set on `S^{d−1}`,
//! `Σ_{i,j} G_k(⟨x_i, x_j⟩) ≥ 0` — exactly verifiable here because inner
//! products of rational unit vectors are rational.

use crate::polynomial::Polynomial;
use crate::rational::{parse_rational, rat, render_rational, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Errors from basis construction, conversion, parsing, and the quadratic
/// form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GegenbauerError {
    /// The recursion needs `d ≥ 3` (at `d = 2`, `k = 1` the denominator
    /// `k + d − 3` vanishes; the circle case is outside scope).
    UnsupportedDimension(u32),
    /// A point's coordinate count doesn't match the dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A configuration point is not exactly on the unit sphere.
    NotUnitVector { index: usize, norm_sq: String },
    /// Expansion file / line syntax problems.
    ParseExpansion(String),
}

impl fmt::Display for GegenbauerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GegenbauerError::UnsupportedDimension(d) => {
                write!(f, "Gegenbauer basis needs dimension >= 3, got {d}")
            }
            GegenbauerError::DimensionMismatch { expected, got } => {
                write!(f, "point has {got} coordinates, expected {expected}")
            }
            GegenbauerError::NotUnitVector { index, norm_sq } => {
                write!(f, "point {index} is not a unit vector (|x|^2 = {norm_sq})")
            }
            GegenbauerError::ParseExpansion(msg) => write!(f, "bad expansion: {msg}"),
        }
    }
}

impl std::error::Error for GegenbauerError {}

/// Exact `G_k^{(d)}` as a dense polynomial, built by the normalized
/// recursion.  `G_k(1) = 1` for every `k` by induction.
pub fn gegenbauer_poly(d: u32, k: u32) -> Result<Polynomial, GegenbauerError> {
    if d < 3 {
        return Err(GegenbauerError::UnsupportedDimension(d));
    }
    let mut prev = Polynomial::one();
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = Polynomial::var();
    for j in 2..=k {
        let a = rat(2 * j as i64 + d as i64 - 4, j as i64 + d as i64 - 3);
        let b = rat(j as i64 - 1, j as i64 + d as i64 - 3);
        let next = &(&Polynomial::var() * &cur).scale(&a) - &prev.scale(&b);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Exact values `[G_0(t), …, G_kmax(t)]` by the same recursion — cheaper
/// than building the polynomials when only evaluations are needed.
pub fn gegenbauer_values(d: u32, kmax: u32, t: &Rational) -> Result<Vec<Rational>, GegenbauerError> {
    if d < 3 {
        return Err(GegenbauerError::UnsupportedDimension(d));
    }
    let mut vals = Vec::with_capacity(kmax as usize + 1);
    vals.push(Rational::one());
    if kmax >= 1 {
        vals.push(t.clone());
    }
    for j in 2..=kmax {
        let a = rat(2 * j as i64 + d as i64 - 4, j as i64 + d as i64 - 3);
        let b = rat(j as i64 - 1, j as i64 + d as i64 - 3);
        let next = a * t * &vals[j as usize - 1] - b * &vals[j as usize - 2];
        vals.push(next);
    }
    Ok(vals)
}

/// Sparse expansion `f = Σ_k c_k · G_k^{(d)}` with exact coefficients.
/// Zero coefficients are never stored, so equality of expansions is
/// equality of functions within a fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GegenbauerExpansion {
    dim: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl GegenbauerExpansion {
    pub fn new(dim: u32) -> Result<Self, GegenbauerError> {
        if dim < 3 {
            return Err(GegenbauerError::UnsupportedDimension(dim));
        }
        Ok(GegenbauerExpansion { dim, coeffs: BTreeMap::new() })
    }

    /// Builder-style coefficient insertion; a zero removes the entry.
    pub fn with_coeff(mut self, k: u32, c: Rational) -> Self {
        self.set_coeff(k, c);
        self
    }

    pub fn set_coeff(&mut self, k: u32, c: Rational) {
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in increasing `k` order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn max_index(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All stored coefficients nonnegative — the Delsarte admissibility
    /// condition on the expansion side.
    pub fn is_admissible(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Exact evaluation via the value recursion.
    pub fn eval(&self, t: &Rational) -> Rational {
        match self.max_index() {
            None => Rational::zero(),
            Some(kmax) => {
                let vals = gegenbauer_values(self.dim, kmax, t)
                    .expect("dimension validated at construction");
                self.coeffs
                    .iter()
                    .map(|(k, c)| c * &vals[*k as usize])
                    .sum()
            }
        }
    }

    /// Floating evaluation for plots and float oracles.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.to_poly().eval_f64(t)
    }

    /// Exact conversion to the monomial basis.
    pub fn to_poly(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (k, c) in &self.coeffs {
            let g = gegenbauer_poly(self.dim, *k).expect("dimension validated");
            acc = &acc + &g.scale(c);
        }
        acc
    }

    /// Exact conversion from the monomial basis by back-substitution on the
    /// leading coefficient: `G_k` has degree exactly `k`, so the residual's
    /// top coefficient determines `c_k` one degree at a time.
    pub fn from_poly(p: &Polynomial, dim: u32) -> Result<Self, GegenbauerError> {
        let mut out = GegenbauerExpansion::new(dim)?;
        let mut residual = p.clone();
        while let Some(deg) = residual.degree() {
            let g = gegenbauer_poly(dim, deg as u32)?;
            let lead = g.leading_coeff().expect("G_k is nonzero");
            let c = residual.coeff(deg) / lead;
            residual = &residual - &g.scale(&c);
            debug_assert!(residual.degree().map_or(true, |d2| d2 < deg));
            out.set_coeff(deg as u32, c);
        }
        Ok(out)
    }

    /// Serializes as the exchange format: a `dim` header then one
    /// `k num/den` line per nonzero coefficient, increasing `k`.
    pub fn to_lines(&self) -> String {
        let mut s = format!("dim {}\n", self.dim);
        for (k, c) in &self.coeffs {
            s.push_str(&format!("{k} {}\n", render_rational(c)));
        }
        s
    }

    /// Parses the `to_lines` format; accepts decimal or `num/den`
    /// coefficients, rejects duplicate indices and missing headers.
    pub fn parse_lines(text: &str) -> Result<Self, GegenbauerError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GegenbauerError::ParseExpansion("empty input".into()))?;
        let dim: u32 = header
            .strip_prefix("dim")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                GegenbauerError::ParseExpansion(format!("expected \"dim D\" header, got {header:?}"))
            })?;
        let mut out = GegenbauerExpansion::new(dim)?;
        for line in lines {
            let (k_str, c_str) = line.split_once(char::is_whitespace).ok_or_else(|| {
                GegenbauerError::ParseExpansion(format!("expected \"k coeff\", got {line:?}"))
            })?;
            let k: u32 = k_str.parse().map_err(|_| {
                GegenbauerError::ParseExpansion(format!("bad index {k_str:?}"))
            })?;
            if out.coeffs.contains_key(&k) {
                return Err(GegenbauerError::ParseExpansion(format!("duplicate index {k}")));
            }
            let c = parse_rational(c_str.trim()).map_err(|e| {
                GegenbauerError::ParseExpansion(format!("bad coefficient on line {line:?}: {e}"))
            })?;
            out.set_coeff(k, c);
        }
        Ok(out)
    }
}

/// Exact Schoenberg quadratic form `Σ_{i,j} G_k^{(d)}(⟨x_i, x_j⟩)` over a
/// configuration of exact rational unit vectors in `R^d` (diagonal terms
/// included: each contributes `G_k(1) = 1`).  Positive semidefiniteness of
/// `G_k` on the sphere makes the result nonnegative for *every*
/// configuration; callers assert that, this function just computes.
pub fn positivity_quadform(
    points: &[Vec<Rational>],
    d: u32,
    k: u32,
) -> Result<Rational, GegenbauerError> {
    if d < 3 {
        return Err(GegenbauerError::UnsupportedDimension(d));
    }
    for (i, x) in points.iter().enumerate() {
        if x.len() != d as usize {
            return Err(GegenbauerError::DimensionMismatch { expected: d as usize, got: x.len() });
        }
        let norm_sq: Rational = x.iter().map(|c| c * c).sum();
        if !norm_sq.is_one() {
            return Err(GegenbauerError::NotUnitVector {
                index: i,
                norm_sq: render_rational(&norm_sq),
            });
        }
    }
    let g = gegenbauer_poly(d, k)?;
    let mut total = Rational::zero();
    for i in 0..points.len() {
        for j in i..points.len() {
            let dot: Rational = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
            let v = g.eval(&dot);
            // Off-diagonal pairs occur twice in the double sum.
            if i == j {
                total += v;
            } else {
                total += v * rat(2, 1);
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dimension_two_is_rejected() {
        assert!(matches!(gegenbauer_poly(2, 1), Err(GegenbauerError::UnsupportedDimension(2))));
        assert!(GegenbauerExpansion::new(2).is_err());
    }

    #[test]
    fn legendre_polynomials_for_d3() {
        // d = 3 gives the Legendre family.
        assert_eq!(gegenbauer_poly(3, 0).unwrap(), Polynomial::one());
        assert_eq!(gegenbauer_poly(3, 1).unwrap(), Polynomial::var());
        assert_eq!(
            gegenbauer_poly(3, 2).unwrap(),
            Polynomial::new(vec![rat(-1, 2), rat(0, 1), rat(3, 2)])
        );
        assert_eq!(
            gegenbauer_poly(3, 3).unwrap(),
            Polynomial::new(vec![rat(0, 1), rat(-3, 2), rat(0, 1), rat(5, 2)])
        );
        assert_eq!(
            gegenbauer_poly(3, 4).unwrap(),
            Polynomial::new(vec![rat(3, 8), rat(0, 1), rat(-30, 8), rat(0, 1), rat(35, 8)])
        );
        // P_9 from the standard table.
        assert_eq!(
            gegenbauer_poly(3, 9).unwrap(),
            Polynomial::new(vec![
                rat(0, 1),
                rat(315, 128),
                rat(0, 1),
                rat(-4620, 128),
                rat(0, 1),
                rat(18018, 128),
                rat(0, 1),
                rat(-25740, 128),
                rat(0, 1),
                rat(12155, 128),
            ])
        );
    }

    #[test]
    fn chebyshev_u_for_d4() {
        // d = 4: G_k = U_k / (k+1) (Chebyshev second kind, normalized).
        assert_eq!(
            gegenbauer_poly(4, 2).unwrap(),
            Polynomial::new(vec![rat(-1, 3), rat(0, 1), rat(4, 3)])
        );
        assert_eq!(
            gegenbauer_poly(4, 3).unwrap(),
            Polynomial::new(vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(2, 1)])
        );
    }

    #[test]
    fn normalization_g_of_one_is_one() {
        for d in [3u32, 4, 8, 24] {
            for k in 0..=12u32 {
                let g = gegenbauer_poly(d, k).unwrap();
                assert_eq!(g.eval(&rat(1, 1)), rat(1, 1), "d={d} k={k}");
                assert_eq!(g.degree(), Some(k as usize), "degree exactness d={d} k={k}");
            }
        }
    }

    #[test]
    fn values_match_polynomials() {
        let t = rat(-3, 7);
        let vals = gegenbauer_values(3, 9, &t).unwrap();
        for (k, v) in vals.iter().enumerate() {
            assert_eq!(v, &gegenbauer_poly(3, k as u32).unwrap().eval(&t), "k={k}");
        }
    }

    #[test]
    fn expansion_eval_and_strip() {
        let e = GegenbauerExpansion::new(3)
            .unwrap()
            .with_coeff(0, rat(1, 2))
            .with_coeff(2, rat(1, 3))
            .with_coeff(5, Rational::zero());
        assert_eq!(e.max_index(), Some(2));
        assert_eq!(e.coeff(5), Rational::zero());
        assert_eq!(e.iter().count(), 2);
        // f(1) = sum of coefficients.
        assert_eq!(e.eval(&rat(1, 1)), rat(5, 6));
        // f(0): G_0 = 1, G_2(0) = −1/2 → 1/2 − 1/6 = 1/3.
        assert_eq!(e.eval(&rat(0, 1)), rat(1, 3));
    }

    #[test]
    fn admissibility() {
        let good = GegenbauerExpansion::new(3).unwrap().with_coeff(1, rat(1, 4));
        assert!(good.is_admissible());
        let bad = good.clone().with_coeff(3, rat(-1, 9));
        assert!(!bad.is_admissible());
    }

    #[test]
    fn lines_round_trip() {
        let e = GegenbauerExpansion::new(3)
            .unwrap()
            .with_coeff(0, rat(9465869, 100000000))
            .with_coeff(9, rat(3616728, 100000000));
        let text = e.to_lines();
        assert!(text.starts_with("dim 3\n"));
        let back = GegenbauerExpansion::parse_lines(&text).unwrap();
        assert_eq!(back, e);
        // Decimal coefficients parse too.
        let alt = GegenbauerExpansion::parse_lines("dim 3\n0 0.09465869\n9 0.03616728\n").unwrap();
        assert_eq!(alt, e);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in [
            "",
            "0 1/2\n",             // missing header
            "dim 2\n0 1/2\n",      // dimension too small
            "dim 3\n0 1/2\n0 1/3\n", // duplicate index
            "dim 3\nx 1/2\n",      // bad index
            "dim 3\n0 one\n",      // bad coefficient
        ] {
            assert!(GegenbauerExpansion::parse_lines(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn quadform_on_simplex_and_antipodal_points() {
        // Antipodal pair: Σ G_k(±1) = 2 + 2·(−1)^k ≥ 0.
        let e1 = vec![rat(1, 1), rat(0, 1), rat(0, 1)];
        let ne1 = vec![rat(-1, 1), rat(0, 1), rat(0, 1)];
        for k in 0..=12 {
            let v = positivity_quadform(&[e1.clone(), ne1.clone()], 3, k).unwrap();
            assert!(!v.is_negative(), "k={k}: {v}");
            let expect = if k % 2 == 0 { rat(4, 1) } else { rat(0, 1) };
            assert_eq!(v, expect);
        }
        // Orthonormal triple.
        let pts = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(1, 1)],
        ];
        for k in 0..=9 {
            assert!(!positivity_quadform(&pts, 3, k).unwrap().is_negative());
        }
    }

    #[test]
    fn quadform_validates_inputs() {
        let bad_len = vec![vec![rat(1, 1), rat(0, 1)]];
        assert!(matches!(
            positivity_quadform(&bad_len, 3, 2),
            Err(GegenbauerError::DimensionMismatch { .. })
        ));
        let off_sphere = vec![vec![rat(1, 2), rat(1, 2), rat(1, 2)]];
        assert!(matches!(
            positivity_quadform(&off_sphere, 3, 2),
            Err(GegenbauerError::NotUnitVector { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn poly_round_trip(coeffs in proptest::collection::btree_map(0u32..10, (-50i64..50, 1i64..20), 0..5)) {
            let mut e = GegenbauerExpansion::new(3).unwrap();
            for (k, (n, d)) in &coeffs {
                e.set_coeff(*k, rat(*n, *d));
            }
            let back = GegenbauerExpansion::from_poly(&e.to_poly(), 3).unwrap();
            prop_assert_eq!(back, e);
        }

        #[test]
        fn eval_agrees_with_poly(k in 0u32..10, n in -16i64..=16) {
            let t = rat(n, 16);
            let e = GegenbauerExpansion::new(4).unwrap().with_coeff(k, rat(1, 1));
            prop_assert_eq!(e.eval(&t), e.to_poly().eval(&t));
        }
    }
}
