//! Exact arithmetic in the golden ring Z[φ] and its fraction field Q(√5),
//! plus the norm-reduction maps Q(√n) → Q that send √n to a rational `m`.
//!
//! Golden integers are stored in the (1, φ) basis so that every vertex
//! coordinate of the H4 polytopes used in this crate is an integer pair.
//! The √5 basis only appears inside [`ReductionMap`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `a + bφ` with `φ² = φ + 1`.
///
/// The derived `Ord` is lexicographic on `(a, b)`; it is a bookkeeping order
/// used for canonical sorting, not the numeric order (see [`GoldenInt::cmp_value`]).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const PHI: GoldenInt = GoldenInt { a: 0, b: 1 };
    /// φ⁻¹ = φ - 1.
    pub const PHI_INV: GoldenInt = GoldenInt { a: -1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugation √5 ↦ -√5, i.e. φ ↦ 1 - φ.
    pub fn conj(self) -> Self {
        GoldenInt::new(self.a + self.b, -self.b)
    }

    /// Field norm `x · conj(x) = a² + ab - b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    pub fn is_unit(self) -> bool {
        self.norm().abs() == 1
    }

    /// φᵏ for any integer k.
    pub fn phi_pow(k: i32) -> Self {
        let base = if k >= 0 { Self::PHI } else { Self::PHI_INV };
        (0..k.unsigned_abs()).fold(Self::ONE, |acc, _| acc * base)
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(Self::ONE, |acc, _| acc * self)
    }

    /// Coordinates `(x, y)` with `a + bφ = x + y√5`.
    pub fn to_sqrt5(self) -> (Rational, Rational) {
        let half_b = Rational::new(self.b, 2);
        (Rational::from_integer(self.a) + half_b, half_b)
    }

    /// Sign of the real number `a + bφ`, computed exactly.
    pub fn signum(self) -> i64 {
        // 2(a + bφ) = p + q√5
        let p = 2 * self.a + self.b;
        let q = self.b;
        sign_of_p_plus_q_sqrt5(p, q)
    }

    pub fn abs(self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self
        }
    }

    /// Numeric comparison of the real values.
    pub fn cmp_value(self, other: Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    /// Exact quotient in Z[φ], if it exists.
    pub fn div_exact(self, d: Self) -> Option<Self> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let num = self * d.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(GoldenInt::new(num.a / n, num.b / n))
        } else {
            None
        }
    }

    pub fn div_int_exact(self, d: i64) -> Option<Self> {
        if d != 0 && self.a % d == 0 && self.b % d == 0 {
            Some(GoldenInt::new(self.a / d, self.b / d))
        } else {
            None
        }
    }

    /// Content `gcd(a, b)`.
    pub fn content(self) -> i64 {
        self.a.gcd(&self.b)
    }

    /// Approximate real value, for display and interval bounds only.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * 1.618_033_988_749_895
    }
}

fn sign_of_p_plus_q_sqrt5(p: i64, q: i64) -> i64 {
    match (p.signum(), q.signum()) {
        (0, s) | (s, 0) => s,
        (1, 1) => 1,
        (-1, -1) => -1,
        // mixed signs: compare p² with 5q²
        (ps, _) => {
            let lhs = (p as i128) * (p as i128);
            let rhs = 5 * (q as i128) * (q as i128);
            match lhs.cmp(&rhs) {
                Ordering::Greater => ps,
                Ordering::Less => -ps,
                Ordering::Equal => 0,
            }
        }
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, -1) => write!(f, "-φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, -1) => write!(f, "{a}-φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

impl Add for GoldenInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldenInt::new(self.a + o.a, self.b + o.b)
    }
}

impl AddAssign for GoldenInt {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for GoldenInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldenInt::new(self.a - o.a, self.b - o.b)
    }
}

impl SubAssign for GoldenInt {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for GoldenInt {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenInt::new(-self.a, -self.b)
    }
}

/// `(a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ`.
impl Mul for GoldenInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GoldenInt::new(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )
    }
}

impl Mul<i64> for GoldenInt {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        GoldenInt::new(self.a * k, self.b * k)
    }
}

impl std::iter::Sum for GoldenInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GoldenInt::ZERO, |acc, x| acc + x)
    }
}

/// Element of Q(√5) written as `num / den` with `num ∈ Z[φ]` and `den > 0`.
///
/// Always kept in lowest terms: `gcd(num.a, num.b, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenRational {
    num: GoldenInt,
    den: i64,
}

impl GoldenRational {
    pub const ZERO: GoldenRational = GoldenRational {
        num: GoldenInt::ZERO,
        den: 1,
    };
    pub const ONE: GoldenRational = GoldenRational {
        num: GoldenInt::ONE,
        den: 1,
    };

    pub fn new(num: GoldenInt, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        GoldenRational {
            num: GoldenInt::new(num.a / g, num.b / g),
            den: den / g,
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        GoldenRational::new(GoldenInt::int(*r.numer()), *r.denom())
    }

    pub fn numer(self) -> GoldenInt {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num.is_zero()
    }

    pub fn to_golden_int(self) -> Option<GoldenInt> {
        (self.den == 1).then_some(self.num)
    }

    pub fn conj(self) -> Self {
        GoldenRational {
            num: self.num.conj(),
            den: self.den,
        }
    }

    /// Coordinates `(x, y)` with value `x + y√5`.
    pub fn to_sqrt5(self) -> (Rational, Rational) {
        let (x, y) = self.num.to_sqrt5();
        (x / self.den, y / self.den)
    }

    /// Inverse of [`GoldenRational::to_sqrt5`]: `x + y√5 = (x - y) + 2yφ`.
    pub fn from_sqrt5(x: Rational, y: Rational) -> Self {
        let a = x - y;
        let b = y * 2;
        let den = a.denom().lcm(b.denom());
        let na = a.numer() * (den / a.denom());
        let nb = b.numer() * (den / b.denom());
        GoldenRational::new(GoldenInt::new(na, nb), den)
    }

    pub fn signum(self) -> i64 {
        self.num.signum()
    }

    pub fn inv(self) -> Option<Self> {
        let n = self.num.norm();
        if n == 0 {
            return None;
        }
        // 1/(u/d) = d·conj(u)/N(u)
        Some(GoldenRational::new(self.num.conj() * self.den, n))
    }

    pub fn div(self, o: Self) -> Option<Self> {
        o.inv().map(|i| self * i)
    }
}

impl From<GoldenInt> for GoldenRational {
    fn from(g: GoldenInt) -> Self {
        GoldenRational { num: g, den: 1 }
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Add for GoldenRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let l = self.den.lcm(&o.den);
        GoldenRational::new(self.num * (l / self.den) + o.num * (l / o.den), l)
    }
}

impl Sub for GoldenRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for GoldenRational {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for GoldenRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GoldenRational::new(self.num * o.num, self.den * o.den)
    }
}

/// Exact rational square root, if one exists.
pub fn rational_sqrt(r: Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = integer_sqrt(*r.numer())?;
    let d = integer_sqrt(*r.denom())?;
    Some(Rational::new(n, d))
}

fn integer_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let s = (n as f64).sqrt().round() as i64;
    (s.saturating_sub(1)..=s + 1).find(|&c| c >= 0 && c * c == n)
}

/// Linear reduction `a + b√n ↦ a + bm` together with the scaling
/// conventions used when embedding golden lattices.
///
/// `scale` multiplies golden vectors before reduction, `multiplier` scales the
/// reduced quadratic form. A map is only constructible when `m² < n`; for
/// `m² ≥ n` the reduced form is indefinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    n: Rational,
    m: Rational,
    scale: GoldenRational,
    multiplier: Rational,
}

/// One golden coordinate split into two rational slots.
///
/// The squared length is `first² + weight · second²`. When `n - m²` is a
/// rational square the root is folded into `second` and `weight` is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitCoordinate {
    pub first: Rational,
    pub second: Rational,
    pub weight: Rational,
}

impl ReductionMap {
    pub fn new(n: Rational, m: Rational) -> Result<Self> {
        if n <= Rational::zero() {
            return Err(Error::InvalidReduction(format!("n = {n} is not positive")));
        }
        if m * m >= n {
            return Err(Error::InvalidReduction(format!(
                "|m| = {} is not below √{n}; the reduced form is not positive definite",
                m.abs()
            )));
        }
        Ok(ReductionMap {
            n,
            m,
            scale: GoldenRational::ONE,
            multiplier: Rational::from_integer(1),
        })
    }

    /// Golden-field map (n = 5) with integer `m`.
    pub fn golden(m: i64) -> Result<Self> {
        Self::new(Rational::from_integer(5), Rational::from_integer(m))
    }

    pub fn with_scale(mut self, scale: GoldenRational) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_multiplier(mut self, multiplier: Rational) -> Result<Self> {
        if multiplier <= Rational::zero() {
            return Err(Error::InvalidReduction(format!(
                "multiplier {multiplier} is not positive"
            )));
        }
        self.multiplier = multiplier;
        Ok(self)
    }

    pub fn n(&self) -> Rational {
        self.n
    }

    pub fn m(&self) -> Rational {
        self.m
    }

    pub fn scale(&self) -> GoldenRational {
        self.scale
    }

    pub fn multiplier(&self) -> Rational {
        self.multiplier
    }

    /// `x + y√n ↦ x + ym`.
    pub fn reduce_scalar(&self, x: Rational, y: Rational) -> Rational {
        x + y * self.m
    }

    /// Reduction of a golden scalar; requires n = 5.
    pub fn reduce_golden(&self, g: GoldenRational) -> Result<Rational> {
        self.require_golden()?;
        let (x, y) = g.to_sqrt5();
        Ok(self.reduce_scalar(x, y))
    }

    /// Weight carried by the second slot of every split coordinate.
    pub fn second_weight(&self) -> Rational {
        let rest = self.n - self.m * self.m;
        if rational_sqrt(rest).is_some() {
            Rational::from_integer(1)
        } else {
            rest
        }
    }

    /// `x + y√n ↦ (x + my, √(n - m²)·y)`, folding the root when it is rational.
    pub fn split_coordinate(&self, x: Rational, y: Rational) -> SplitCoordinate {
        let rest = self.n - self.m * self.m;
        let first = x + self.m * y;
        match rational_sqrt(rest) {
            Some(root) => SplitCoordinate {
                first,
                second: root * y,
                weight: Rational::from_integer(1),
            },
            None => SplitCoordinate {
                first,
                second: y,
                weight: rest,
            },
        }
    }

    /// Inverse of [`ReductionMap::split_coordinate`].
    pub fn unsplit(&self, first: Rational, second: Rational) -> (Rational, Rational) {
        let rest = self.n - self.m * self.m;
        let y = match rational_sqrt(rest) {
            Some(root) => second / root,
            None => second,
        };
        (first - self.m * y, y)
    }

    fn require_golden(&self) -> Result<()> {
        if self.n != Rational::from_integer(5) {
            return Err(Error::InvalidReduction(format!(
                "golden coordinates need n = 5, map has n = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Split a golden vector (after applying `scale`) into `2·len` rational slots.
    pub fn split_golden(&self, coords: &[GoldenRational]) -> Result<Vec<Rational>> {
        self.require_golden()?;
        let mut out = Vec::with_capacity(coords.len() * 2);
        for &c in coords {
            let (x, y) = (c * self.scale).to_sqrt5();
            let s = self.split_coordinate(x, y);
            out.push(s.first);
            out.push(s.second);
        }
        Ok(out)
    }

    /// Inverse of [`ReductionMap::split_golden`].
    pub fn unsplit_golden(&self, slots: &[Rational]) -> Result<Vec<GoldenRational>> {
        self.require_golden()?;
        let inv_scale = self
            .scale
            .inv()
            .ok_or_else(|| Error::InvalidReduction("scale is zero".into()))?;
        Ok(slots
            .chunks(2)
            .map(|pair| {
                let (x, y) = self.unsplit(pair[0], pair[1]);
                GoldenRational::from_sqrt5(x, y) * inv_scale
            })
            .collect())
    }

    /// Inner product of split vectors: `multiplier · Σ (uᵢvᵢ + weight·u'ᵢv'ᵢ)`.
    pub fn split_dot(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let w = self.second_weight();
        let raw: Rational = u
            .chunks(2)
            .zip(v.chunks(2))
            .map(|(p, q)| p[0] * q[0] + w * p[1] * q[1])
            .sum();
        raw * self.multiplier
    }

    /// Reduced inner product computed on the golden side:
    /// `multiplier · reduce(scale² · Σ uᵢvᵢ)`.
    pub fn golden_dot(&self, u: &[GoldenRational], v: &[GoldenRational]) -> Result<Rational> {
        let s2 = self.scale * self.scale;
        let dot = u
            .iter()
            .zip(v)
            .fold(GoldenRational::ZERO, |acc, (&a, &b)| acc + a * b);
        Ok(self.reduce_golden(dot * s2)? * self.multiplier)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn gi() -> impl Strategy<Value = GoldenInt> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| GoldenInt::new(a, b))
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(GoldenInt::PHI * GoldenInt::PHI, GoldenInt::new(1, 1));
        assert_eq!(GoldenInt::PHI_INV * GoldenInt::PHI, GoldenInt::ONE);
        let x = GoldenInt::new(7, -3);
        assert_eq!(GoldenInt::ONE * x, x);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(GoldenInt::PHI.conj(), GoldenInt::new(1, -1));
        assert_eq!(GoldenInt::ONE.conj(), GoldenInt::ONE);
        let x = GoldenInt::new(4, 9);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn sqrt5_form() {
        // φ = 1/2 + (1/2)√5
        assert_eq!(
            GoldenInt::PHI.to_sqrt5(),
            (Rational::new(1, 2), Rational::new(1, 2))
        );
        let g = GoldenRational::from(GoldenInt::new(3, -5));
        let (x, y) = g.to_sqrt5();
        assert_eq!(GoldenRational::from_sqrt5(x, y), g);
    }

    #[test]
    fn signs_and_powers() {
        assert_eq!(GoldenInt::PHI_INV.signum(), 1);
        assert_eq!(GoldenInt::new(1, -1).signum(), -1); // 1 - φ
        assert_eq!(GoldenInt::new(-2, 1).signum(), -1); // φ - 2
        assert_eq!(GoldenInt::new(0, 0).signum(), 0);
        assert_eq!(GoldenInt::phi_pow(3), GoldenInt::new(1, 2));
        assert_eq!(GoldenInt::phi_pow(-2), GoldenInt::new(2, -1));
        assert_eq!(
            GoldenInt::phi_pow(-2) * GoldenInt::phi_pow(2),
            GoldenInt::ONE
        );
    }

    #[test]
    fn reduce_scalar_examples() {
        let m1 = ReductionMap::golden(-1).unwrap();
        assert_eq!(m1.reduce_scalar(r(6), r(2)), r(4));
        let m2 = ReductionMap::golden(-2).unwrap();
        assert_eq!(m2.reduce_scalar(r(20), r(8)), r(4));
        for m in -2..=2 {
            let map = ReductionMap::golden(m).unwrap();
            assert_eq!(map.reduce_scalar(r(17), r(0)), r(17));
        }
    }

    #[test]
    fn split_examples() {
        let (x, y) = (Rational::new(3, 2), Rational::new(1, 2));
        let s = ReductionMap::golden(-1).unwrap().split_coordinate(x, y);
        assert_eq!((s.first, s.second, s.weight), (x - y, y * 2, r(1)));
        let s = ReductionMap::golden(0).unwrap().split_coordinate(x, y);
        assert_eq!((s.first, s.second, s.weight), (x, y, r(5)));
        let s = ReductionMap::golden(2).unwrap().split_coordinate(x, y);
        assert_eq!((s.first, s.second, s.weight), (x + y * 2, y, r(1)));
    }

    #[test]
    fn maps_at_or_beyond_sqrt_n_are_rejected() {
        assert!(ReductionMap::golden(3).is_err());
        assert!(ReductionMap::golden(-3).is_err());
        assert!(ReductionMap::new(r(4), r(2)).is_err());
        assert!(ReductionMap::new(r(4), Rational::new(19, 10)).is_ok());
    }

    #[test]
    fn witness_vector_sits_on_the_boundary() {
        // (x, y) = (-m, 1) has reduced norm x² + 2xym + ny² = n - m².
        for m in -4i64..=4 {
            let (x, y) = (r(-m), r(1));
            let reduced = x * x + x * y * r(2 * m) + r(5) * y * y;
            assert_eq!(reduced, r(5 - m * m));
            assert_eq!(reduced > r(0), ReductionMap::golden(m).is_ok(), "m = {m}");
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(x in gi(), y in gi(), z in gi()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x + (-x), GoldenInt::ZERO);
        }

        #[test]
        fn conj_is_ring_automorphism(x in gi(), y in gi()) {
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert_eq!((x + y).conj(), x.conj() + y.conj());
            prop_assert_eq!(x.conj().conj(), x);
            prop_assert_eq!((x * x.conj()).b, 0);
            prop_assert_eq!((x * x.conj()).a, x.norm());
        }

        #[test]
        fn signum_matches_float(x in gi()) {
            let v = x.to_f64();
            if v.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if v > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn rational_field_ops(x in gi(), y in gi(), d in 1i64..9) {
            let p = GoldenRational::new(x, d);
            let q = GoldenRational::new(y, d + 1);
            if !q.is_zero() {
                let quot = p.div(q).unwrap();
                prop_assert_eq!(quot * q, p);
            }
            prop_assert_eq!((p + q) - q, p);
        }

        #[test]
        fn split_preserves_reduced_square(
            xn in -20i64..20, yn in -20i64..20, m in -2i64..=2
        ) {
            let (x, y) = (Rational::new(xn, 2), Rational::new(yn, 2));
            let map = ReductionMap::golden(m).unwrap();
            let s = map.split_coordinate(x, y);
            // (x + y√5)² = (x² + 5y²) + 2xy√5
            let reduced = map.reduce_scalar(x * x + r(5) * y * y, r(2) * x * y);
            prop_assert_eq!(s.first * s.first + s.weight * s.second * s.second, reduced);
            prop_assert_eq!(map.unsplit(s.first, s.second), (x, y));
        }
    }
}
