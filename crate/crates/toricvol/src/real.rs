//! The few non-rational quantities: powers of pi, unit-ball volumes, and
//! square roots, all carried as rational brackets good to ~95 digits.

use crate::rat::{rat_to_f64, Rat};
use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

// 100 decimal digits of pi.
const PI_DIGITS: &str =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

/// pi as an exact rational truncation, accurate to ~1e-100.
pub fn pi_rat() -> Rat {
    let digits: String = PI_DIGITS.chars().filter(|c| *c != '.').collect();
    let numer: BigInt = digits.parse().unwrap();
    let denom = BigInt::from(10u32).pow((digits.len() - 1) as u32);
    Rat::new(numer, denom)
}

fn pi_bracket() -> (Rat, Rat) {
    let lo = pi_rat();
    let ulp = Rat::new(BigInt::one(), BigInt::from(10u32).pow(99));
    let hi = &lo + &ulp;
    (lo, hi)
}

/// coeff * pi^pow with positive rational coeff: the closed form of unit-ball
/// volumes and their squares.
#[derive(Clone, Debug, PartialEq)]
pub struct PiPower {
    pub coeff: Rat,
    pub pow: u32,
}

impl PiPower {
    pub fn rational(coeff: Rat) -> Self {
        PiPower { coeff, pow: 0 }
    }

    pub fn is_rational(&self) -> bool {
        self.pow == 0
    }

    pub fn square(&self) -> PiPower {
        PiPower {
            coeff: &self.coeff * &self.coeff,
            pow: self.pow * 2,
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> PiPower {
        PiPower {
            coeff: &self.coeff * r,
            pow: self.pow,
        }
    }

    pub fn div_rat(&self, r: &Rat) -> PiPower {
        PiPower {
            coeff: &self.coeff / r,
            pow: self.pow,
        }
    }

    /// Two-sided rational bracket.
    pub fn bracket(&self) -> (Rat, Rat) {
        assert!(self.coeff.is_positive());
        if self.pow == 0 {
            return (self.coeff.clone(), self.coeff.clone());
        }
        let (plo, phi) = pi_bracket();
        let lo = &self.coeff * plo.pow(self.pow as i32);
        let hi = &self.coeff * phi.pow(self.pow as i32);
        (lo, hi)
    }

    /// Midpoint rational approximation, good to ~95 digits.
    pub fn approx(&self) -> Rat {
        let (lo, hi) = self.bracket();
        (lo + hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.approx())
    }

    /// Exact comparison against a rational. Returns None only in the
    /// astronomically unlikely event the rational falls inside the 1e-99
    /// bracket of an irrational value.
    pub fn cmp_rat(&self, r: &Rat) -> Option<Ordering> {
        if self.pow == 0 {
            return Some(self.coeff.cmp(r));
        }
        let (lo, hi) = self.bracket();
        if *r < lo {
            Some(Ordering::Greater)
        } else if *r > hi {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

/// Volume of the n-dimensional Euclidean unit ball, exactly as a rational
/// multiple of a power of pi:
///   n even: pi^(n/2) / (n/2)!
///   n odd:  2^((n+1)/2) * pi^((n-1)/2) / n!!
pub fn unit_ball_volume(n: u32) -> PiPower {
    assert!(n >= 1);
    if n % 2 == 0 {
        let k = n / 2;
        PiPower {
            coeff: Rat::new(BigInt::one(), factorial(k as u64)),
            pow: k,
        }
    } else {
        let two_pow = BigInt::from(2u32).pow((n + 1) / 2);
        PiPower {
            coeff: Rat::new(two_pow, double_factorial(n as u64)),
            pow: (n - 1) / 2,
        }
    }
}

/// omega_n^2; always a rational times an even power of pi.
pub fn unit_ball_volume_sq(n: u32) -> PiPower {
    unit_ball_volume(n).square()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn double_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

/// Square root of a nonnegative rational to `digits` decimal digits, by
/// Newton iteration on exact rationals. Result is a lower-biased bracket
/// midpoint, within 10^-digits of the truth.
pub fn sqrt_rat(r: &Rat, digits: u32) -> Rat {
    assert!(!r.is_negative());
    if r.is_zero() {
        return Rat::zero();
    }
    let tol = Rat::new(BigInt::one(), BigInt::from(10u32).pow(digits));
    let mut x = initial_sqrt_guess(r);
    let two = Rat::from_integer(BigInt::from(2));
    loop {
        let next = (&x + r / &x) / &two;
        let diff = (&next - &x).abs();
        // Trim denominators so the iteration doesn't blow up.
        let cap = BigInt::from(10u32).pow(digits + 20);
        x = crate::rat::limit_denominator(&next, &cap);
        if diff < tol {
            return x;
        }
    }
}

fn initial_sqrt_guess(r: &Rat) -> Rat {
    let f = rat_to_f64(r);
    if f.is_finite() && f > 0.0 {
        let g = f.sqrt();
        if g.is_finite() && g > 0.0 {
            if let Some(gr) = Rat::from_float(g) {
                return gr;
            }
        }
    }
    // Fall back to a power of two matching half the bit length.
    let bits = (r.numer().bits() as i64 - r.denom().bits() as i64) / 2;
    if bits >= 0 {
        Rat::from_integer(BigInt::one() << bits as u64)
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (-bits) as u64)
    }
}

/// Decimal rendering with `sig` significant digits (round-to-nearest on the
/// last digit is not attempted; the value is truncated, which is fine for
/// >= 30-digit displays of 95-digit-accurate numbers).
pub fn decimal_string(r: &Rat, sig: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // Find exponent e with 10^e <= a < 10^(e+1).
    let mut e: i64 = 0;
    let ten = Rat::from_integer(BigInt::from(10));
    let one = Rat::one();
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled = scaled / &ten;
        e += 1;
    }
    while scaled < one {
        scaled = scaled * &ten;
        e -= 1;
    }
    // digits = floor(a * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let scale = if shift >= 0 {
        Rat::from_integer(BigInt::from(10u32).pow(shift as u32))
    } else {
        Rat::new(BigInt::one(), BigInt::from(10u32).pow((-shift) as u32))
    };
    let digits = (a * scale).to_integer().to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[0..1]);
    if digits.len() > 1 {
        out.push('.');
        out.push_str(&digits[1..]);
    }
    if e != 0 {
        out.push_str(&format!("e{}", e));
    }
    out
}

/// 17-significant-digit float rendering for CSV cells.
pub fn fmt_real(x: f64) -> String {
    format!("{:.16e}", x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    /// Machin's formula as an independent oracle for the pi literal:
    /// pi = 16 atan(1/5) - 4 atan(1/239), summed in exact rationals.
    fn pi_machin(terms: u32) -> Rat {
        fn atan_inv(x: i64, terms: u32) -> Rat {
            let x2 = rat_int(x * x);
            let mut term = rat(1, x);
            let mut sum = Rat::zero();
            for k in 0..terms {
                let jk = Rat::from_integer(BigInt::from(2 * k + 1));
                let contrib = &term / &jk;
                if k % 2 == 0 {
                    sum = sum + contrib;
                } else {
                    sum = sum - contrib;
                }
                term = term / &x2;
            }
            sum
        }
        rat_int(16) * atan_inv(5, terms) - rat_int(4) * atan_inv(239, terms)
    }

    #[test]
    fn pi_literal_matches_machin_series() {
        let oracle = pi_machin(90); // error < (1/25)^90, far below 1e-100
        let lit = pi_rat();
        let err = (oracle - lit).abs();
        assert!(err < Rat::new(BigInt::one(), BigInt::from(10u32).pow(99)));
    }

    #[test]
    fn ball_volumes_low_dim() {
        assert_eq!(unit_ball_volume(1), PiPower { coeff: rat_int(2), pow: 0 });
        assert_eq!(unit_ball_volume(2), PiPower { coeff: rat_int(1), pow: 1 });
        assert_eq!(unit_ball_volume(3), PiPower { coeff: rat(4, 3), pow: 1 });
        assert_eq!(unit_ball_volume(4), PiPower { coeff: rat(1, 2), pow: 2 });
        assert_eq!(unit_ball_volume(5), PiPower { coeff: rat(8, 15), pow: 2 });
    }

    #[test]
    fn ball_volume_30_digits() {
        // omega_2 = pi to 30+ significant digits.
        let s = decimal_string(&unit_ball_volume(2).approx(), 35);
        assert!(s.starts_with("3.1415926535897932384626433832795028"));
        // omega_1 = 2 exactly.
        assert_eq!(unit_ball_volume(1).approx(), rat_int(2));
        // omega_3 = 4*pi/3.
        let w3 = decimal_string(&unit_ball_volume(3).approx(), 31);
        assert!(s.len() >= 30 && w3.starts_with("4.18879020478639098461685784437"));
    }

    #[test]
    fn sqrt_newton() {
        let two = rat_int(2);
        let s = sqrt_rat(&two, 60);
        let err = (&s * &s - two).abs();
        assert!(err < Rat::new(BigInt::one(), BigInt::from(10u32).pow(55)));
    }

    #[test]
    fn cmp_against_rationals() {
        let w2sq = unit_ball_volume_sq(2); // pi^2
        assert_eq!(w2sq.cmp_rat(&rat_int(8)), Some(Ordering::Greater));
        assert_eq!(w2sq.cmp_rat(&rat_int(10)), Some(Ordering::Less));
        let w1sq = unit_ball_volume_sq(1); // 4 exactly
        assert_eq!(w1sq.cmp_rat(&rat_int(4)), Some(Ordering::Equal));
    }
}
