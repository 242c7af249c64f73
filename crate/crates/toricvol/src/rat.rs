//! Exact rational scalars and vectors.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator (the `num-rational` invariants). `RatVec` is the
//! coordinate vector used for points of both lattices and their duals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Lossless-ish conversion to f64 for reporting. Scales numerator and
/// denominator down together so the division never overflows to infinity.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(900) as u64;
    let n = n >> shift;
    let d = d >> shift;
    let nf = n.to_f64().unwrap_or(f64::NAN);
    let df = d.to_f64().unwrap_or(f64::NAN);
    nf / df
}

/// Parses "p/q", "p", or a plain integer literal. Rejects anything with a
/// decimal point or exponent: canonical inputs are exact.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) {
        return None;
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Parses a decimal literal like "0.5" or "1e-9" into an exact rational.
/// Used for tolerances and epsilon thresholds coming from the CLI.
pub fn parse_decimal(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some(r) = parse_rat(s) {
        return Some(r);
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!(
        "{}{}",
        if int_part.is_empty() || int_part == "-" || int_part == "+" {
            format!("{}0", int_part)
        } else {
            int_part.to_string()
        },
        frac_part
    );
    let numer: BigInt = digits.parse().ok()?;
    let scale = frac_part.len() as i64 - exp;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        Rat::new(numer, ten.pow(scale as u32))
    } else {
        Rat::from_integer(numer * ten.pow((-scale) as u32))
    })
}

/// Canonical "p/q" rendering (integers keep the "/1").
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Best rational approximation with denominator at most `max_den`, via
/// continued-fraction convergents and semiconvergents.
pub fn limit_denominator(r: &Rat, max_den: &BigInt) -> Rat {
    if r.denom() <= max_den {
        return r.clone();
    }
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if &q2 > max_den {
            let k = (max_den - &q0).div_floor(&q1);
            let bound1 = Rat::new(&p0 + &k * &p1, &q0 + &k * &q1);
            let bound2 = Rat::new(p1, q1);
            return if (&bound1 - r).abs() <= (&bound2 - r).abs() {
                bound1
            } else {
                bound2
            };
        }
        let p2 = &p0 + &a * &p1;
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
        let rem = &n - &a * &d;
        (n, d) = (d, rem);
        if n.is_zero() || d.is_zero() {
            return Rat::new(p1, q1);
        }
    }
}

/// Exact rational coordinate vector.
///
/// Deliberately not `Hash`: hashing a big rational walks its continued
/// fraction, which recurses deeply for the coordinates this crate produces
/// mid-optimization. Use ordered containers instead.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zeros(n: usize) -> Self {
        RatVec(vec![Rat::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, or None if any entry is fractional.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.0.iter().map(|x| x.to_integer()).collect())
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        RatVec(v.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    /// lcm of coordinate denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn limit_denominators(&self, max_den: &BigInt) -> RatVec {
        RatVec(self.0.iter().map(|x| limit_denominator(x, max_den)).collect())
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }
}

impl Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVec {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;
    fn add(self, other: &RatVec) -> RatVec {
        RatVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &RatVec {
    type Output = RatVec;
    fn sub(self, other: &RatVec) -> RatVec {
        RatVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &RatVec {
    type Output = RatVec;
    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|x| -x).collect())
    }
}

impl Mul<&Rat> for &RatVec {
    type Output = RatVec;
    fn mul(self, c: &Rat) -> RatVec {
        self.scale(c)
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

/// Divides an integer vector by the gcd of its entries; zero stays zero.
pub fn primitivize(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Returns the primitive vector and the (positive) scale factor s with
/// `v = s * primitive`.
pub fn primitive_direction(v: &RatVec) -> (Vec<BigInt>, Rat) {
    let l = v.denominator_lcm();
    let ints: Vec<BigInt> = v.0.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    assert!(!g.is_zero(), "zero vector has no direction");
    let prim: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    (prim, Rat::new(g, l))
}
