//! Exact integer arithmetic for resource counts: Machin π, `⌈ln x⌉`,
//! `⌈π·√N/4⌉` and significant-figure rounding of big rationals.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

fn pow10(d: u32) -> BigUint {
    BigUint::from(10u32).pow(d)
}

/// `arctan(1/x)·10^d`, truncated term by term.
fn arctan_inv(x: u32, scale: &BigUint) -> (BigUint, usize) {
    let x2 = BigUint::from(x) * x;
    let mut power = scale / x;
    let (mut pos, mut neg) = (BigUint::zero(), BigUint::zero());
    let mut j = 0u32;
    let mut terms = 0;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            pos += term;
        } else {
            neg += term;
        }
        power /= &x2;
        j += 1;
        terms += 1;
    }
    (pos - neg, terms)
}

/// `P` with `|π·10^d − P| < 1`.
pub fn pi_scaled(d: u32) -> BigUint {
    const GUARD: u32 = 8;
    let scale = pow10(d + GUARD);
    // π = 16·arctan(1/5) − 4·arctan(1/239)
    let (a, _) = arctan_inv(5, &scale);
    let (b, _) = arctan_inv(239, &scale);
    (a * 16u32 - b * 4u32) / pow10(GUARD)
}

/// `e^t·10^d` with an absolute error bound.
fn exp_scaled(t: u64, d: u32) -> (BigUint, BigUint) {
    let scale = pow10(d);
    let mut power = BigUint::one();
    let mut fact = BigUint::one();
    let mut sum = BigUint::zero();
    let mut j = 0u64;
    loop {
        let term = &power * &scale / &fact;
        // past j > 2t each term at most halves the previous one
        if term.is_zero() && j > 2 * t {
            break;
        }
        sum += term;
        j += 1;
        power *= t;
        fact *= j;
    }
    // one floor loss per term plus a tail below two units
    (sum, BigUint::from(j + 3))
}

/// `⌈ln x⌉` for `x ≥ 1`, exactly.
pub fn ceil_ln(x: u64) -> u64 {
    assert!(x >= 1, "ln of zero");
    let x = BigUint::from(x);
    let mut t = 0u64;
    loop {
        if t == 0 {
            if x.is_one() {
                return 0;
            }
            t = 1;
            continue;
        }
        // e^t is irrational, so refinement always separates it from x
        let mut d = 12u32;
        let ge = loop {
            let (e, err) = exp_scaled(t, d);
            let target = &x * pow10(d);
            if target + &err < e {
                break true;
            }
            if e + &err < &x * pow10(d) {
                break false;
            }
            d *= 2;
        };
        if ge {
            return t;
        }
        t += 1;
    }
}

/// `⌈π·√N/4⌉` for `N ≥ 1`, exactly.
pub fn grover_ceiling(n: &BigUint) -> BigUint {
    assert!(!n.is_zero(), "empty search space");
    let mut d = (n.bits() as u32) / 6 + 20;
    loop {
        let pi = pi_scaled(d);
        let root = (n * pow10(2 * d)).sqrt();
        let den = pow10(2 * d) * 4u32;
        let two = BigUint::from(2u32);
        let lo = if pi > two { (&pi - &two) * &root } else { BigUint::zero() };
        let hi = (&pi + &two) * (&root + 1u32);
        let (flo, fhi) = (&lo / &den, &hi / &den);
        // π·√N/4 is irrational, so a shared floor fixes the ceiling
        if flo == fhi {
            return flo + 1u32;
        }
        d *= 2;
    }
}

/// A positive number rounded to `sig` significant figures: `digits · 10^(exponent − sig + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sci {
    pub digits: u64,
    pub exponent: i64,
    pub sig: u32,
}

impl Sci {
    pub fn to_f64(self) -> f64 {
        self.digits as f64 * 10f64.powi((self.exponent - self.sig as i64 + 1) as i32)
    }
}

impl fmt::Display for Sci {
    /// `1.6e7`, `3.0e3`, `1.1e-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.digits.to_string();
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            write!(f, "{head}e{}", self.exponent)
        } else {
            write!(f, "{head}.{tail}e{}", self.exponent)
        }
    }
}

/// `num/den` rounded half-up to `sig` significant figures.
pub fn sig_figs(num: &BigUint, den: &BigUint, sig: u32) -> Sci {
    assert!(!den.is_zero() && sig >= 1);
    if num.is_zero() {
        return Sci { digits: 0, exponent: 0, sig };
    }
    let ndig = |x: &BigUint| x.to_str_radix(10).len() as i64;
    let mut e = ndig(num) - ndig(den);
    let at_least = |e: i64| {
        if e >= 0 {
            num >= &(den * pow10(e as u32))
        } else {
            num * pow10((-e) as u32) >= *den
        }
    };
    if !at_least(e) {
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let (a, b) = if shift >= 0 { (num * pow10(shift as u32), den.clone()) } else { (num.clone(), den * pow10((-shift) as u32)) };
    let (q, r) = a.div_rem(&b);
    let mut q = if r * 2u32 >= b { q + 1u32 } else { q };
    if q == pow10(sig) {
        q = pow10(sig - 1);
        e += 1;
    }
    Sci { digits: q.to_u64().expect("sig ≤ 19"), exponent: e, sig }
}

pub fn sig_figs_int(x: &BigUint, sig: u32) -> Sci {
    sig_figs(x, &BigUint::one(), sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        assert_eq!(pi_scaled(20).to_string(), "314159265358979323846");
        let p = pi_scaled(60).to_string();
        assert!(p.starts_with("3141592653589793238462643383279502884197169399375105820974944"));
    }

    #[test]
    fn ceil_ln_against_float_away_from_integers() {
        assert_eq!(ceil_ln(1), 0);
        assert_eq!(ceil_ln(2), 1);
        assert_eq!(ceil_ln(3), 2);
        assert_eq!(ceil_ln(7), 2);
        assert_eq!(ceil_ln(8), 3);
        assert_eq!(ceil_ln(90), 5);
        assert_eq!(ceil_ln(2450), 8);
        for x in 1..5000u64 {
            let f = (x as f64).ln();
            if (f - f.round()).abs() > 1e-9 {
                assert_eq!(ceil_ln(x), f.ceil() as u64, "x={x}");
            }
        }
    }

    #[test]
    fn grover_small_cases() {
        // π·√16/4 = π → 4; π·√1/4 → 1; π·√2/4 ≈ 1.11 → 2
        assert_eq!(grover_ceiling(&BigUint::from(16u32)), BigUint::from(4u32));
        assert_eq!(grover_ceiling(&BigUint::from(1u32)), BigUint::from(1u32));
        assert_eq!(grover_ceiling(&BigUint::from(2u32)), BigUint::from(2u32));
        for n in 1..2000u64 {
            let f = std::f64::consts::PI * (n as f64).sqrt() / 4.0;
            assert_eq!(grover_ceiling(&BigUint::from(n)), BigUint::from(f.ceil() as u64), "n={n}");
        }
    }

    #[test]
    fn significant_figures() {
        let s = sig_figs(&BigUint::from(60u32), &BigUint::from(540u32), 2);
        assert_eq!((s.digits, s.exponent), (11, -1));
        assert_eq!(s.to_string(), "1.1e-1");
        let s = sig_figs_int(&BigUint::from(16_200_000u64), 3);
        assert_eq!(s.to_string(), "1.62e7");
        let s = sig_figs_int(&BigUint::from(995u32), 2);
        assert_eq!(s.to_string(), "1.0e3");
        let s = sig_figs(&BigUint::from(36_288_000u64), &BigUint::from(12_000u32), 4);
        assert_eq!((s.digits, s.exponent), (3024, 3));
        assert_eq!(sig_figs_int(&BigUint::from(7u32), 1).to_string(), "7e0");
    }
}
