//! Exact points of the circle `R/Z` of the form `frac(a + b·α)`.
//!
//! Every angle handled here is a quadratic irrational, so all comparisons are
//! reduced to deciding the sign of `A + B·√D` for integers `A`, `B`, `D`. A
//! double-precision estimate with a rigorous error margin settles the common
//! case and the exact path is taken whenever the estimate is inconclusive.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Rationals used for point coordinates and field elements.
pub type Rational = Ratio<i128>;

/// Hard cap on the number of continued fraction coefficients produced.
pub const MAX_CF_DEPTH: usize = 256;

/// Description of the rotation angle `α ∈ (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphaSpec {
    /// `α = (p + q·√d) / r`.
    Quadratic { p: i64, q: i64, d: u64, r: i64 },
    /// `α = [prefix…, period, period, …]` with `α = 1/(c_1 + 1/(c_2 + …))`.
    Cf { prefix: Vec<u64>, period: Vec<u64> },
}

impl AlphaSpec {
    /// `(√5 − 1)/2 = [1, 1, 1, …]`.
    pub fn golden() -> Self {
        AlphaSpec::Quadratic {
            p: -1,
            q: 1,
            d: 5,
            r: 2,
        }
    }

    /// `√2 − 1 = [2, 2, 2, …]`.
    pub fn silver() -> Self {
        AlphaSpec::Quadratic {
            p: -1,
            q: 1,
            d: 2,
            r: 1,
        }
    }
}

/// A validated rotation angle in canonical quadratic form `(p + q√d)/r`
/// with `d` square-free, `r > 0` and `gcd(p, q, r) = 1`.
#[derive(Clone, Debug)]
pub struct Alpha {
    spec: AlphaSpec,
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
    approx: f64,
}

impl PartialEq for Alpha {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q && self.d == other.d && self.r == other.r
    }
}

impl Eq for Alpha {}

impl Alpha {
    pub fn new(spec: AlphaSpec) -> Result<Self> {
        let (p, q, d, r) = match &spec {
            AlphaSpec::Quadratic { p, q, d, r } => {
                if *d == 0 || is_square(&BigInt::from(*d)) {
                    return Err(Error::InvalidAlpha(format!("d = {d} is a perfect square")));
                }
                if *q == 0 {
                    return Err(Error::InvalidAlpha("q = 0 gives a rational angle".into()));
                }
                if *r == 0 {
                    return Err(Error::InvalidAlpha("r = 0".into()));
                }
                (
                    BigInt::from(*p),
                    BigInt::from(*q),
                    BigInt::from(*d),
                    BigInt::from(*r),
                )
            }
            AlphaSpec::Cf { prefix, period } => {
                if period.is_empty() {
                    return Err(Error::InvalidAlpha("empty period".into()));
                }
                if prefix.iter().chain(period).any(|&c| c == 0) {
                    return Err(Error::InvalidAlpha(
                        "continued fraction coefficients must be positive".into(),
                    ));
                }
                periodic_cf_to_quadratic(prefix, period)
            }
        };
        let (p, q, d, r) = normalize_quadratic(p, q, d, r);
        // r > 0 after normalization: 0 < α < 1 iff p + q√d > 0 and (p − r) + q√d < 0.
        if sign_surd(&p, &q, &d) != Ordering::Greater
            || sign_surd(&(&p - &r), &q, &d) != Ordering::Less
        {
            return Err(Error::InvalidAlpha("α must lie in (0, 1)".into()));
        }
        let mut alpha = Alpha {
            spec,
            p,
            q,
            d,
            r,
            approx: 0.0,
        };
        alpha.approx = alpha.approximate_from_cf();
        Ok(alpha)
    }

    pub fn golden() -> Self {
        Alpha::new(AlphaSpec::golden()).expect("golden ratio is a valid angle")
    }

    pub fn silver() -> Self {
        Alpha::new(AlphaSpec::silver()).expect("silver ratio is a valid angle")
    }

    pub fn spec(&self) -> &AlphaSpec {
        &self.spec
    }

    /// Canonical `(p, q, d, r)` with `α = (p + q√d)/r`.
    pub fn quadratic_form(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.d, &self.r)
    }

    /// Double-precision estimate of `α` (relative error below `1e-16`).
    pub fn approx(&self) -> f64 {
        self.approx
    }

    fn approximate_from_cf(&self) -> f64 {
        let mut stream = QuadStream::new(self);
        let (mut p0, mut p1) = (0f64, 1f64);
        let (mut q0, mut q1) = (1f64, 0f64);
        for _ in 0..64 {
            let c = stream.next_coefficient() as f64;
            let (p2, q2) = (c * p1 + p0, c * q1 + q0);
            p0 = p1;
            p1 = p2;
            q0 = q1;
            q1 = q2;
            if q1 > 1e10 {
                break;
            }
        }
        // α = [0; c_1, c_2, …] so the convergent is q/p in the 0-based recurrence.
        q1 / p1
    }

    /// First `depth` continued fraction coefficients `c_1, …, c_depth`.
    pub fn cf_coefficients(&self, depth: usize) -> Result<Vec<u64>> {
        if depth > MAX_CF_DEPTH {
            return Err(Error::DepthCap {
                requested: depth,
                cap: MAX_CF_DEPTH,
            });
        }
        match &self.spec {
            AlphaSpec::Cf { prefix, period } => Ok(prefix
                .iter()
                .chain(period.iter().cycle())
                .take(depth)
                .copied()
                .collect()),
            AlphaSpec::Quadratic { .. } => {
                let mut stream = QuadStream::new(self);
                Ok((0..depth).map(|_| stream.next_coefficient()).collect())
            }
        }
    }

    /// Sign of `s + t·α`.
    pub fn sign(&self, x: &QAlpha) -> Ordering {
        if x.t.is_zero() {
            return x.s.cmp(&Rational::zero());
        }
        let approx = x.s.to_f64_lossy() + x.t.to_f64_lossy() * self.approx;
        if approx.abs() > x.error_bound() {
            return if approx > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        let (a, b, _) = self.surd_parts(x);
        sign_surd(&a, &b, &self.d)
    }

    pub fn cmp_values(&self, x: &QAlpha, y: &QAlpha) -> Ordering {
        self.sign(&(x.clone() - y.clone()))
    }

    /// Writes `s + t·α` as `(A + B√d)/C` with `C > 0`.
    fn surd_parts(&self, x: &QAlpha) -> (BigInt, BigInt, BigInt) {
        let (sn, sd) = (BigInt::from(*x.s.numer()), BigInt::from(*x.s.denom()));
        let (tn, td) = (BigInt::from(*x.t.numer()), BigInt::from(*x.t.denom()));
        let a = &sn * &td * &self.r + &tn * &sd * &self.p;
        let b = &tn * &sd * &self.q;
        let c = &sd * &td * &self.r;
        (a, b, c)
    }

    /// `⌊s + t·α⌋`, exact.
    pub fn floor(&self, x: &QAlpha) -> i128 {
        if x.t.is_zero() {
            return x.s.floor().to_integer();
        }
        let approx = x.s.to_f64_lossy() + x.t.to_f64_lossy() * self.approx;
        let err = x.error_bound();
        if approx.abs() < 1e15 {
            let fl = approx.floor();
            if approx - fl > err && fl + 1.0 - approx > err {
                return fl as i128;
            }
        }
        let (a, b, c) = self.surd_parts(x);
        let result = floor_surd(&a, &b, &c, &self.d);
        result.to_i128().expect("floor fits in i128")
    }

    /// Exact value of a point as an element of `Q(α)` lying in `[0, 1)`.
    pub fn value(&self, x: &CirclePoint) -> QAlpha {
        let raw = QAlpha::new(x.a, x.b);
        let fl = self.floor(&raw);
        raw - QAlpha::constant(Rational::from_integer(fl))
    }

    /// Double-precision estimate of the point's value and an error bound.
    /// The bound is infinite when the estimate sits too close to the seam at 0.
    fn approx_value(&self, x: &CirclePoint) -> (f64, f64) {
        let raw = x.a.to_f64_lossy() + x.b.to_f64_lossy() * self.approx;
        let err = (1.0 + x.a.to_f64_lossy().abs() + x.b.to_f64_lossy().abs()) * 1e-15;
        let frac = raw - raw.floor();
        if frac < err || 1.0 - frac < err {
            (frac, f64::INFINITY)
        } else {
            (frac, err)
        }
    }

    /// Total order of points by their value in `[0, 1)`.
    pub fn compare(&self, x: &CirclePoint, y: &CirclePoint) -> Ordering {
        if x == y {
            return Ordering::Equal;
        }
        let (vx, ex) = self.approx_value(x);
        let (vy, ey) = self.approx_value(y);
        if (vx - vy).abs() > ex + ey {
            return if vx < vy {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        self.cmp_values(&self.value(x), &self.value(y))
    }

    /// Length of the arc from `from` to `to` going in the positive direction,
    /// in `(0, 1]` (a full turn when the points coincide).
    pub fn forward_distance(&self, from: &CirclePoint, to: &CirclePoint) -> QAlpha {
        let diff = self.value(to) - self.value(from);
        if self.sign(&diff) == Ordering::Greater {
            diff
        } else {
            diff + QAlpha::constant(Rational::one())
        }
    }
}

/// An element `s + t·α` of the field `Q(α)`, stored structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QAlpha {
    pub s: Rational,
    pub t: Rational,
}

impl QAlpha {
    pub fn new(s: Rational, t: Rational) -> Self {
        QAlpha { s, t }
    }

    pub fn zero() -> Self {
        QAlpha::new(Rational::zero(), Rational::zero())
    }

    pub fn constant(s: Rational) -> Self {
        QAlpha::new(s, Rational::zero())
    }

    pub fn alpha() -> Self {
        QAlpha::new(Rational::zero(), Rational::one())
    }

    pub fn from_integers(s: i128, t: i128) -> Self {
        QAlpha::new(Rational::from_integer(s), Rational::from_integer(t))
    }

    pub fn approx(&self, alpha: &Alpha) -> f64 {
        self.s.to_f64_lossy() + self.t.to_f64_lossy() * alpha.approx
    }

    fn error_bound(&self) -> f64 {
        (1.0 + self.s.to_f64_lossy().abs() + self.t.to_f64_lossy().abs()) * 1e-15
    }
}

impl Add for QAlpha {
    type Output = QAlpha;
    fn add(self, rhs: QAlpha) -> QAlpha {
        QAlpha::new(self.s + rhs.s, self.t + rhs.t)
    }
}

impl Sub for QAlpha {
    type Output = QAlpha;
    fn sub(self, rhs: QAlpha) -> QAlpha {
        QAlpha::new(self.s - rhs.s, self.t - rhs.t)
    }
}

impl Neg for QAlpha {
    type Output = QAlpha;
    fn neg(self) -> QAlpha {
        QAlpha::new(-self.s, -self.t)
    }
}

impl fmt::Display for QAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.t;
        if t.is_negative() {
            write!(f, "{}-{}*alpha", self.s, -t)
        } else {
            write!(f, "{}+{}*alpha", self.s, t)
        }
    }
}

/// The point `frac(a + b·α)` of the circle, with `a` reduced into `[0, 1)`.
///
/// Two points are equal iff their canonical coordinates agree, which is
/// exact because `α` is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    a: Rational,
    b: Rational,
}

impl CirclePoint {
    pub fn new(a: Rational, b: Rational) -> Self {
        let a = a - a.floor();
        CirclePoint { a, b }
    }

    pub fn zero() -> Self {
        CirclePoint::new(Rational::zero(), Rational::zero())
    }

    /// `⟨i⟩ = T^{-i}(0) = frac(−i·α)`.
    pub fn orbit(i: i64) -> Self {
        CirclePoint::new(Rational::zero(), Rational::from_integer(-(i as i128)))
    }

    pub fn rational(a: Rational) -> Self {
        CirclePoint::new(a, Rational::zero())
    }

    pub fn a(&self) -> Rational {
        self.a
    }

    pub fn b(&self) -> Rational {
        self.b
    }

    /// `T^j` applied to the point.
    pub fn rotate(&self, j: i64) -> Self {
        CirclePoint {
            a: self.a,
            b: self.b + Rational::from_integer(j as i128),
        }
    }

    /// `i` such that the point is `⟨i⟩`, if it lies on the orbit of 0.
    pub fn orbit_index(&self) -> Option<i64> {
        if self.a.is_zero() && self.b.is_integer() {
            (-self.b.to_integer()).to_i64()
        } else {
            None
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orbit_index() {
            Some(i) => write!(f, "<{i}>"),
            None if self.b.is_zero() => write!(f, "{}", self.a),
            None => write!(f, "frac({}+{}*alpha)", self.a, self.b),
        }
    }
}

/// `⟨i⟩ = T^{-i}(0)`.
pub fn orbit_point(i: u64) -> CirclePoint {
    CirclePoint::orbit(i as i64)
}

pub fn compare_points(x: &CirclePoint, y: &CirclePoint, alpha: &Alpha) -> Ordering {
    alpha.compare(x, y)
}

/// `T^j(x)`.
pub fn apply_rotation(x: &CirclePoint, j: i64) -> CirclePoint {
    x.rotate(j)
}

/// A left-closed right-open arc `[start, end)` traversed in the positive
/// direction; it may wrap through 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleArc {
    pub start: CirclePoint,
    pub end: CirclePoint,
}

impl CircleArc {
    pub fn new(start: CirclePoint, end: CirclePoint) -> Self {
        CircleArc { start, end }
    }

    pub fn rotate(&self, j: i64) -> Self {
        CircleArc::new(self.start.rotate(j), self.end.rotate(j))
    }

    pub fn length(&self, alpha: &Alpha) -> QAlpha {
        alpha.forward_distance(&self.start, &self.end)
    }

    /// Whether `x` lies in the arc.
    pub fn contains_point(&self, x: &CirclePoint, alpha: &Alpha) -> bool {
        if *x == self.start {
            return true;
        }
        let offset = alpha.forward_distance(&self.start, x);
        alpha.cmp_values(&offset, &self.length(alpha)) == Ordering::Less
    }

    /// Whether the arc is a subset of `other`.
    pub fn is_subset_of(&self, other: &CircleArc, alpha: &Alpha) -> bool {
        let offset = if self.start == other.start {
            QAlpha::zero()
        } else {
            alpha.forward_distance(&other.start, &self.start)
        };
        alpha.cmp_values(&(offset + self.length(alpha)), &other.length(alpha)) != Ordering::Greater
    }

    /// Whether the two arcs share a point.
    pub fn overlaps(&self, other: &CircleArc, alpha: &Alpha) -> bool {
        self.contains_point(&other.start, alpha) || other.contains_point(&self.start, alpha)
    }
}

impl fmt::Display for CircleArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end)
    }
}

trait LossyF64 {
    fn to_f64_lossy(&self) -> f64;
}

impl LossyF64 for Rational {
    fn to_f64_lossy(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// Sign of `a + b·√d` for a non-square `d > 0`.
fn sign_surd(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    match (a.cmp(&zero), b.cmp(&zero)) {
        (sa, Ordering::Equal) => sa,
        (Ordering::Equal, sb) => sb,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => (a * a).cmp(&(b * b * d)),
        (Ordering::Less, Ordering::Greater) => (b * b * d).cmp(&(a * a)),
    }
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = BigInt::sqrt(n);
    &r * &r == *n
}

/// Removes square factors from `d` (trial division) and reduces by the gcd.
fn normalize_quadratic(
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut p, mut q, mut d, mut r) = (p, q, d, r);
    let mut f = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &f * &f <= d && f <= limit {
        let f2 = &f * &f;
        while (&d % &f2).is_zero() {
            d /= &f2;
            q *= &f;
        }
        f += 1;
    }
    if r.is_negative() {
        p = -p;
        q = -q;
        r = -r;
    }
    let g = p.gcd(&q).gcd(&r);
    if !g.is_one() && !g.is_zero() {
        p /= &g;
        q /= &g;
        r /= &g;
    }
    (p, q, d, r)
}

/// Converts `[0; prefix…, (period)*]` into `(p, q, d, r)`.
fn periodic_cf_to_quadratic(prefix: &[u64], period: &[u64]) -> (BigInt, BigInt, BigInt, BigInt) {
    // Purely periodic tail y = [period; y] solves Q y^2 + (Q' - P) y - P' = 0
    // with [[P, P'], [Q, Q']] the product of the period matrices.
    let (pn, pn1, qn, qn1) = mobius(period);
    let b = &qn1 - &pn;
    let disc = &b * &b + BigInt::from(4) * &qn * &pn1;
    // y = (P - Q' + √disc) / (2Q), the positive root.
    let ys = -b;
    let yt = BigInt::from(2) * &qn;
    // z = [prefix; y] = (A y + B)/(C y + D), α = 1/z = (C y + D)/(A y + B).
    let (a, bb, c, dd) = mobius(prefix);
    // Numerator C(ys + √disc)/yt + D, denominator A(ys + √disc)/yt + B; clear yt.
    let num_rat = &c * &ys + &dd * &yt;
    let num_irr = c.clone();
    let den_rat = &a * &ys + &bb * &yt;
    let den_irr = a.clone();
    // Multiply by the conjugate of the denominator.
    let p = &num_rat * &den_rat - &num_irr * &den_irr * &disc;
    let q = &num_irr * &den_rat - &num_rat * &den_irr;
    let r = &den_rat * &den_rat - &den_irr * &den_irr * &disc;
    (p, q, disc, r)
}

/// Product of `[[c, 1], [1, 0]]` over the coefficients, as `(P, P', Q, Q')`.
fn mobius(coeffs: &[u64]) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut a, mut b, mut c, mut d) =
        (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for &k in coeffs {
        let k = BigInt::from(k);
        let na = &a * &k + &b;
        let nc = &c * &k + &d;
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    (a, b, c, d)
}

/// Continued fraction digits of `(a + b√d)/c` produced by the classical
/// reciprocal-and-floor recursion in exact integer arithmetic.
struct QuadStream<'a> {
    d: &'a BigInt,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl<'a> QuadStream<'a> {
    fn new(alpha: &'a Alpha) -> Self {
        QuadStream {
            d: &alpha.d,
            a: alpha.p.clone(),
            b: alpha.q.clone(),
            c: alpha.r.clone(),
        }
    }

    fn next_coefficient(&mut self) -> u64 {
        // 1/x = c(a - b√d) / (a² - b²d)
        let den = &self.a * &self.a - &self.b * &self.b * self.d;
        let mut na = &self.c * &self.a;
        let mut nb = -(&self.c * &self.b);
        let mut nc = den;
        if nc.is_negative() {
            na = -na;
            nb = -nb;
            nc = -nc;
        }
        let g = na.gcd(&nb).gcd(&nc);
        if !g.is_one() {
            na /= &g;
            nb /= &g;
            nc /= &g;
        }
        let fl = floor_surd(&na, &nb, &nc, self.d);
        self.a = na - &fl * &nc;
        self.b = nb;
        self.c = nc;
        fl.to_u64()
            .expect("continued fraction coefficient fits in u64")
    }
}

fn floor_surd(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    let root = BigInt::sqrt(&(b * b * d));
    // b√d lies strictly between s and s + 1 because d is not a square.
    let s = if b.is_negative() {
        -(root + 1u32)
    } else {
        root
    };
    let lo = Integer::div_floor(&(a + &s), c);
    let hi = Integer::div_floor(&(a + &s + 1u32), c);
    if lo == hi {
        lo
    } else if sign_surd(&(a - &hi * c), b, d) != Ordering::Less {
        hi
    } else {
        lo
    }
}
