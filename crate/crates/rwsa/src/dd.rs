//! Double-double arithmetic (~31 significant digits) for the numeric
//! verification paths. The residue pipeline itself is exact rational; this
//! type exists because quadrature of the traced symbols meets catastrophic
//! cancellation near the chart boundary, where f64 is not enough.
//!
//! Algorithms: error-free transforms (two_sum, two_prod via fma), Newton
//! reciprocal for division, Newton square root, Cody-Waite range reduction
//! plus Taylor series for sin/cos.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const TWO_PI: Dd = Dd {
        hi: 6.283185307179586,
        lo: 2.4492935982947064e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123233995736766e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Dd {
        // Newton: x <- x (2 - d x), seeded from f64.
        let x0 = Dd::from_f64(1.0 / self.hi);
        let e = Dd::from_f64(2.0) - self * x0;
        let x1 = x0 * e;
        let e2 = Dd::from_f64(2.0) - self * x1;
        x1 * e2
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of negative double-double");
        // y1 = y0 + (x - y0^2) / (2 y0)
        let y0 = self.hi.sqrt();
        let y0dd = Dd::from_f64(y0);
        let r = self - y0dd * y0dd;
        let corr = Dd {
            hi: r.hi / (2.0 * y0),
            lo: r.lo / (2.0 * y0),
        };
        y0dd + corr
    }

    pub fn powi(self, e: i64) -> Dd {
        if e == 0 {
            return Dd::ONE;
        }
        let mut b = self;
        let mut k = e.unsigned_abs();
        let mut acc = Dd::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            k >>= 1;
        }
        if e < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// sin and cos for arguments in roughly [-4 pi, 4 pi] (quadrature nodes).
    pub fn sin_cos(self) -> (Dd, Dd) {
        // Cody-Waite reduction by pi/2 with a 3-term splitting.
        const P2_HI: f64 = 1.5707963267948966;
        const P2_MID: f64 = 6.123233995736766e-17;
        const P2_LO: f64 = -1.4973849048591698e-33;
        let kf = (self.hi / std::f64::consts::FRAC_PI_2).round();
        let r = self - Dd::from_f64(kf) * Dd::from_f64(P2_HI)
            - Dd::from_f64(kf) * Dd::from_f64(P2_MID)
            - Dd::from_f64(kf) * Dd::from_f64(P2_LO);
        let (s, c) = sin_cos_taylor(r);
        let k = kf as i64;
        match k.rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }
}

/// Taylor sin/cos on |r| <= pi/4 + eps, to ~1e-34 absolute.
fn sin_cos_taylor(r: Dd) -> (Dd, Dd) {
    let r2 = r * r;
    // sin: r * (1 - r^2/3! + r^4/5! - ...) through r^30 in the bracket
    let mut s = Dd::ZERO;
    let mut c = Dd::ZERO;
    // Horner over precomputed inverse factorials.
    for k in (0..=15).rev() {
        s = s * r2 + inv_factorial(2 * k + 1) * sign(k);
        c = c * r2 + inv_factorial(2 * k) * sign(k);
    }
    (r * s, c)
}

fn sign(k: usize) -> Dd {
    if k % 2 == 0 {
        Dd::ONE
    } else {
        -Dd::ONE
    }
}

fn inv_factorial(k: usize) -> Dd {
    // 1/k! computed once in double-double
    static TABLE: std::sync::OnceLock<Vec<Dd>> = std::sync::OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut v = vec![Dd::ONE; 40];
        for k in 1..40 {
            v[k] = v[k - 1] / Dd::from_f64(k as f64);
        }
        v
    });
    t[k]
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, o: Dd) -> Dd {
        let (sh, se) = two_sum(self.hi, o.hi);
        let (tl, te) = two_sum(self.lo, o.lo);
        let c = se + tl;
        let (vh, vl) = quick_two_sum(sh, c);
        let w = te + vl;
        let (h, l) = quick_two_sum(vh, w);
        Dd { hi: h, lo: l }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, o: Dd) -> Dd {
        let (ph, pe) = two_prod(self.hi, o.hi);
        let e = pe + (self.hi * o.lo + self.lo * o.hi);
        let (h, l) = quick_two_sum(ph, e);
        Dd { hi: h, lo: l }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, o: Dd) -> Dd {
        self * o.recip()
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, o: f64) -> Dd {
        self + Dd::from_f64(o)
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, o: f64) -> Dd {
        self * Dd::from_f64(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_to_f64, Rat};
    use num::{One, Signed, Zero};

    fn dd_to_rat(x: Dd) -> Rat {
        Rat::from_float(x.hi).unwrap() + Rat::from_float(x.lo).unwrap()
    }

    fn rel_err(x: Dd, exact: &Rat) -> f64 {
        let diff = (dd_to_rat(x) - exact).abs();
        let denom = if exact.is_zero() {
            Rat::one()
        } else {
            exact.abs()
        };
        rat_to_f64(&(diff / denom))
    }

    #[test]
    fn div_keeps_full_precision() {
        // the case that defeats naive reciprocal correction
        let third = Dd::ONE / Dd::from_f64(3.0);
        assert!(rel_err(third, &rat(1, 3)) < 1e-31);
        let x = Dd::from_f64(1.0) / Dd::from_f64(49.0);
        assert!(rel_err(x, &rat(1, 49)) < 1e-31);
    }

    #[test]
    fn field_ops_against_exact_rationals() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..500 {
            let (p, q) = (rng.gen_range(-999..999i64), rng.gen_range(1..999i64));
            let (r, s) = (rng.gen_range(-999..999i64), rng.gen_range(1..999i64));
            if p == 0 || r == 0 {
                continue;
            }
            let a = rat(p, q);
            let b = rat(r, s);
            let da = Dd::from_f64(p as f64) / Dd::from_f64(q as f64);
            let db = Dd::from_f64(r as f64) / Dd::from_f64(s as f64);
            let e1 = rel_err(da * db, &(&a * &b));
            // addition error is measured against the operand scale:
            // cancellation legitimately amplifies the relative error
            let sum_exact = &a + &b;
            let abs_err = rat_to_f64(&(dd_to_rat(da + db) - &sum_exact).abs());
            let scale = rat_to_f64(&a.abs()).max(rat_to_f64(&b.abs())).max(1e-300);
            let e2 = abs_err / scale;
            let e3 = rel_err(da / db, &(&a / &b));
            let e4 = rel_err(da.powi(7), &num::pow::pow(a.clone(), 7));
            assert!(e1 < 1e-30, "mul {p}/{q} * {r}/{s}: {e1:e}");
            assert!(e2 < 1e-30, "add: {e2:e}");
            assert!(e3 < 1e-30, "div: {e3:e}");
            assert!(e4 < 1e-29, "pow: {e4:e}");
        }
    }

    #[test]
    fn sqrt_squares_back() {
        for k in [2i64, 3, 5, 7, 11, 1000003] {
            let x = Dd::from_f64(k as f64);
            let r = x.sqrt();
            assert!(rel_err(r * r, &rat(k, 1)) < 1e-30);
        }
    }

    /// Reference sine by rational Taylor series with remainder under 1e-40.
    fn sin_rat(x: &Rat) -> Rat {
        let mut term = x.clone();
        let mut acc = x.clone();
        let x2 = x * x;
        let mut k = 1i64;
        loop {
            term = &term * &x2 / rat((2 * k) * (2 * k + 1), 1);
            if k % 2 == 1 {
                acc -= &term;
            } else {
                acc += &term;
            }
            if rat_to_f64(&term).abs() < 1e-42 {
                return acc;
            }
            k += 1;
        }
    }

    #[test]
    fn sin_cos_against_rational_taylor() {
        for num in [1i64, 3, 7, 11, 19, 30, 44, 61] {
            let x = rat(num, 10); // 0.1 .. 6.1 covers all reduction quadrants
            let dx = Dd::from_f64(num as f64) / Dd::from_f64(10.0);
            let (s, c) = dx.sin_cos();
            let sr = sin_rat(&x);
            assert!(rel_err(s, &sr) < 1e-29, "sin({}) err", num);
            // cos via sin(pi/2 - x) would need rational pi; use identity
            // s^2 + c^2 = 1 plus sign from f64 instead.
            let one = dd_to_rat(s * s + c * c);
            assert!(rat_to_f64(&(&one - &Rat::one()).abs()) < 1e-30);
            assert!((c.to_f64() - (num as f64 / 10.0).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn pi_constant_is_double_double_accurate() {
        // sin(pi) should vanish to ~1e-32
        let (s, _) = Dd::PI.sin_cos();
        assert!(s.to_f64().abs() < 1e-31);
        let (s2, c2) = Dd::FRAC_PI_2.sin_cos();
        assert!((s2.to_f64() - 1.0).abs() < 1e-30);
        assert!(c2.to_f64().abs() < 1e-31);
    }
}
