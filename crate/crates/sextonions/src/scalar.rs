//! Scalars: exact rationals and Gaussian rationals.
//!
//! `Rat` is an arbitrary-precision rational in canonical form (gcd 1, positive
//! denominator, maintained by `num_rational`). `GaussRat` is a pair of those,
//! the ground field Q(i) for every algebra in this crate.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

pub use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;
pub type GaussRat = num_complex::Complex<Rat>;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn gauss(re: Rat, im: Rat) -> GaussRat {
    GaussRat::new(re, im)
}

/// Real Gaussian rational num/den.
pub fn grat(num: i64, den: i64) -> GaussRat {
    gauss(rat(num, den), Rat::zero())
}

pub fn gint(n: i64) -> GaussRat {
    grat(n, 1)
}

pub fn gzero() -> GaussRat {
    GaussRat::zero()
}

pub fn gone() -> GaussRat {
    GaussRat::one()
}

pub fn is_real(z: &GaussRat) -> bool {
    z.im.is_zero()
}

pub fn ginv(z: &GaussRat) -> GaussRat {
    assert!(!z.is_zero(), "division by zero");
    let n = z.norm_sqr();
    GaussRat::new(&z.re / &n, -(&z.im / &n))
}

/// "num/den", denominator always written.
pub fn fmt_rat(r: &Rat) -> String {
    alloc::format!("{}/{}", r.numer(), r.denom())
}

/// Parses the exact output of `fmt_rat`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = s.split_once('/')?;
    let num: Int = n.parse().ok()?;
    let den: Int = d.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

pub fn fmt_gauss(z: &GaussRat) -> (String, String) {
    (fmt_rat(&z.re), fmt_rat(&z.im))
}

pub fn parse_gauss(re: &str, im: &str) -> Option<GaussRat> {
    Some(gauss(parse_rat(re)?, parse_rat(im)?))
}

/// Human-oriented rendering: integers without the "/1", pure-imaginary and
/// mixed values spelled out.
pub fn display_gauss(z: &GaussRat) -> String {
    fn part(r: &Rat) -> String {
        if r.denom().is_one() {
            alloc::format!("{}", r.numer())
        } else {
            alloc::format!("{}/{}", r.numer(), r.denom())
        }
    }
    if z.im.is_zero() {
        part(&z.re)
    } else if z.re.is_zero() {
        alloc::format!("{}i", part(&z.im))
    } else if z.im.is_negative() {
        alloc::format!("{}{}i", part(&z.re), part(&z.im))
    } else {
        alloc::format!("{}+{}i", part(&z.re), part(&z.im))
    }
}

/// Small random rational: numerator in [-3, 3], denominator in {1, 2, 3}.
pub fn random_rat(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Small random Gaussian rational with independent real and imaginary parts.
pub fn random_gauss(rng: &mut impl Rng) -> GaussRat {
    gauss(random_rat(rng), random_rat(rng))
}

pub fn sum_gauss<'a>(it: impl Iterator<Item = &'a GaussRat>) -> GaussRat {
    let mut acc = gzero();
    for z in it {
        acc += z;
    }
    acc
}

pub fn vec_is_zero(v: &[GaussRat]) -> bool {
    v.iter().all(|z| z.is_zero())
}

pub fn vec_add(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &GaussRat, v: &[GaussRat]) -> Vec<GaussRat> {
    v.iter().map(|x| c * x).collect()
}
