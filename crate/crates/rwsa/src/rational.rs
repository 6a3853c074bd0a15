//! Gaussian-rational coefficients: exact complex numbers with
//! arbitrary-precision rational real and imaginary parts.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parse "p/q" or "p" into an exact rational.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
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

/// Element of Q(i). BigRational keeps itself reduced with positive
/// denominator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn zero() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: Rat::one(),
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn from_parts(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiply by i^k.
    pub fn mul_i_pow(&self, k: u32) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => GaussRat {
                re: -self.im.clone(),
                im: self.re.clone(),
            },
            2 => -self.clone(),
            _ => GaussRat {
                re: self.im.clone(),
                im: -self.re.clone(),
            },
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Scale down so numerator/denominator both fit in f64 range.
    let num = r.numer();
    let den = r.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let num = num >> shift;
    let den = den >> shift;
    let nf = bigint_to_f64(&num);
    let df = bigint_to_f64(&den);
    nf / df
}

fn bigint_to_f64(b: &BigInt) -> f64 {
    let (sign, digits) = b.to_u64_digits();
    let mut v = 0.0f64;
    for d in digits.iter().rev() {
        v = v * 18446744073709551616.0 + *d as f64;
    }
    if sign == num::bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl<'a> AddAssign<&'a GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &'a GaussRat) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<'a, 'b> Mul<&'b GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &'b GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        (&self) * (&o)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({} - {}*i)", self.re, -self.im.clone())
        } else {
            write!(f, "({} + {}*i)", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_mul_i_squared_is_minus_one() {
        let i = GaussRat::i();
        assert_eq!(&i * &i, GaussRat::from_int(-1));
    }

    #[test]
    fn rat_parse_roundtrip() {
        let r = rat_from_str("-22/7").unwrap();
        assert_eq!(r, rat(-22, 7));
        assert_eq!(r.to_string(), "-22/7");
        assert_eq!(rat_from_str("5").unwrap(), rat_int(5));
        assert!(rat_from_str("1/0").is_none());
    }

    #[test]
    fn reduction_is_automatic() {
        assert_eq!(rat(6, 4), rat(3, 2));
        assert_eq!(rat(-6, -4), rat(3, 2));
        assert_eq!(rat(6, -4), rat(-3, 2));
    }

    #[test]
    fn i_pow_cycle() {
        let z = GaussRat::from_parts(rat(1, 2), rat(1, 3));
        assert_eq!(z.mul_i_pow(4), z);
        assert_eq!(z.mul_i_pow(2), -z.clone());
        assert_eq!(z.mul_i_pow(1).mul_i_pow(3), z);
    }
}
