//! Numeric and exact evaluation of expressions.

use crate::error::{Result, RwsaError};
use crate::expr::SymbolExpr;
use crate::rational::{rat_to_f64, GaussRat, Rat};
use num::complex::Complex64;
use num::{One, Zero};
use crate::dd::Dd;

/// Floating evaluation point. `s`, `c` are the square roots of `u0`, `1-u0`.
#[derive(Clone, Debug)]
pub struct EvalPoint {
    pub u0: f64,
    pub u: Vec<f64>,
    pub alpha: f64,
    pub alphaj: Vec<f64>,
}

impl EvalPoint {
    pub fn s(&self) -> f64 {
        self.u0.sqrt()
    }

    pub fn c(&self) -> f64 {
        (1.0 - self.u0).sqrt()
    }

    pub fn q(&self) -> f64 {
        let mut q = self.u[0] * self.u[0];
        let a2 = self.alpha * self.alpha;
        for j in 1..4 {
            q += self.u[j] * self.u[j] / a2;
        }
        for j in 4..self.u.len() {
            q += self.u[j] * self.u[j];
        }
        q
    }

    pub fn valid(&self) -> bool {
        self.u0 > 0.0 && self.u0 < 1.0 && self.alpha != 0.0
    }
}

/// Exact evaluation point with rational `s`, `c` satisfying s^2 + c^2 = 1
/// (a Pythagorean pair), so every variable value is rational.
#[derive(Clone, Debug)]
pub struct ExactPoint {
    pub s: Rat,
    pub c: Rat,
    pub u: Vec<Rat>,
    pub alpha: Rat,
    pub alphaj: Vec<Rat>,
}

impl ExactPoint {
    pub fn u0(&self) -> Rat {
        &self.s * &self.s
    }

    pub fn q(&self) -> Rat {
        let mut q = &self.u[0] * &self.u[0];
        let a2 = &self.alpha * &self.alpha;
        for j in 1..4 {
            q += &self.u[j] * &self.u[j] / &a2;
        }
        for j in 4..self.u.len() {
            q += &self.u[j] * &self.u[j];
        }
        q
    }

    pub fn check(&self) -> Result<()> {
        if (&self.s * &self.s + &self.c * &self.c) != Rat::one() {
            return Err(RwsaError::Invalid("s^2 + c^2 must equal 1".into()));
        }
        if self.s.is_zero() || self.c.is_zero() || self.alpha.is_zero() {
            return Err(RwsaError::EvalDivisionByZero("s, c, alpha must be nonzero"));
        }
        Ok(())
    }
}

fn rat_powi(base: &Rat, e: i64) -> Result<Rat> {
    if e == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        if e < 0 {
            return Err(RwsaError::EvalDivisionByZero("rational power"));
        }
        return Ok(Rat::zero());
    }
    let p = num::pow::pow(base.clone(), e.unsigned_abs() as usize);
    Ok(if e < 0 { Rat::one() / p } else { p })
}

/// Exact evaluation; total on points with nonzero s, c, alpha, Q.
pub fn eval_exact(e: &SymbolExpr, p: &ExactPoint) -> Result<GaussRat> {
    p.check()?;
    let q = p.q();
    if q.is_zero() {
        return Err(RwsaError::EvalDivisionByZero("Q vanishes at the point"));
    }
    let u0 = p.u0();
    let mut acc = GaussRat::zero();
    for (k, c) in &e.terms {
        let mut v = rat_powi(&u0, k.u0 as i64)?;
        v *= rat_powi(&p.s, k.s as i64)?;
        v *= rat_powi(&p.c, k.c as i64)?;
        for (j, &ej) in k.u.iter().enumerate() {
            if ej != 0 {
                v *= rat_powi(&p.u[j], ej as i64)?;
            }
        }
        v *= rat_powi(&p.alpha, k.alpha as i64)?;
        for (j, &ej) in k.alphaj.iter().enumerate() {
            if ej != 0 {
                v *= rat_powi(&p.alphaj[j], ej as i64)?;
            }
        }
        v *= rat_powi(&q, -(k.q as i64))?;
        acc += &c.scale(&v);
    }
    Ok(acc)
}

fn f64_powi(base: f64, e: i64) -> f64 {
    base.powi(e as i32)
}

/// Complex double evaluation.
pub fn eval_c64(e: &SymbolExpr, p: &EvalPoint) -> Complex64 {
    let s = p.s();
    let c = p.c();
    let q = p.q();
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, coeff) in &e.terms {
        let mut v = f64_powi(p.u0, k.u0 as i64);
        v *= f64_powi(s, k.s as i64);
        v *= f64_powi(c, k.c as i64);
        for (j, &ej) in k.u.iter().enumerate() {
            if ej != 0 {
                v *= f64_powi(p.u[j], ej as i64);
            }
        }
        v *= f64_powi(p.alpha, k.alpha as i64);
        for (j, &ej) in k.alphaj.iter().enumerate() {
            if ej != 0 {
                v *= f64_powi(p.alphaj[j], ej as i64);
            }
        }
        v *= f64_powi(q, -(k.q as i64));
        let (re, im) = coeff.to_f64_pair();
        acc += Complex64::new(re * v, im * v);
    }
    acc
}

fn dd_powi(base: Dd, e: i64) -> Dd {
    base.powi(e)
}

/// A real expression flattened for fast repeated double-double evaluation.
/// Construction fails if any coefficient has a nonzero imaginary part.
pub struct CompiledReal {
    terms: Vec<CompiledTerm>,
}

struct CompiledTerm {
    coeff: Dd,
    u0: i64,
    s: i64,
    c: i64,
    u: Vec<(usize, i64)>,
    alpha: i64,
    alphaj: Vec<(usize, i64)>,
    q: i64,
}

impl CompiledReal {
    pub fn new(e: &SymbolExpr) -> Result<Self> {
        let mut terms = Vec::with_capacity(e.terms.len());
        for (k, c) in &e.terms {
            if !c.im.is_zero() {
                return Err(RwsaError::NonRealTrace);
            }
            let coeff = rat_to_dd(&c.re);
            terms.push(CompiledTerm {
                coeff,
                u0: k.u0 as i64,
                s: k.s as i64,
                c: k.c as i64,
                u: k
                    .u
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(j, &e)| (j, e as i64))
                    .collect(),
                alpha: k.alpha as i64,
                alphaj: k
                    .alphaj
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(j, &e)| (j, e as i64))
                    .collect(),
                q: k.q as i64,
            });
        }
        Ok(CompiledReal { terms })
    }

    /// Evaluate at a double-double point given as
    /// (s, c, u-slice, alpha, alphaj-slice); u0 = s^2 and Q is recomputed.
    pub fn eval_dd(&self, s: Dd, c: Dd, u: &[Dd], alpha: Dd, alphaj: &[Dd]) -> Dd {
        let u0 = s * s;
        let mut q = u[0] * u[0];
        let a2 = alpha * alpha;
        for j in 1..4 {
            q = q + u[j] * u[j] / a2;
        }
        for j in 4..u.len() {
            q = q + u[j] * u[j];
        }
        let mut acc = Dd::ZERO;
        for t in &self.terms {
            let mut v = t.coeff;
            v = v * dd_powi(u0, t.u0);
            v = v * dd_powi(s, t.s);
            v = v * dd_powi(c, t.c);
            for &(j, e) in &t.u {
                v = v * dd_powi(u[j], e);
            }
            v = v * dd_powi(alpha, t.alpha);
            for &(j, e) in &t.alphaj {
                v = v * dd_powi(alphaj[j], e);
            }
            v = v * dd_powi(q, -t.q);
            acc = acc + v;
        }
        acc
    }
}

pub fn rat_to_dd(r: &Rat) -> Dd {
    // hi + lo split of p/q
    let hi = rat_to_f64(r);
    let rem = r - Rat::from_float(hi).unwrap_or_else(Rat::zero);
    let lo = rat_to_f64(&rem);
    Dd::new(hi, lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn point_quarter() -> ExactPoint {
        // u0 = 1/4 is not a rational square; use s = 3/5 instead for exact
        // tests and keep this helper for the f64 path.
        ExactPoint {
            s: rat(3, 5),
            c: rat(4, 5),
            u: vec![rat(1, 2), rat(1, 3), rat(-2, 5), rat(1, 7)],
            alpha: rat(5, 4),
            alphaj: vec![rat(1, 2), rat(-1, 3)],
        }
    }

    #[test]
    fn eval_inverse_q() {
        let p = point_quarter();
        let e = SymbolExpr::inv_q(1, 1);
        let got = eval_exact(&e, &p).unwrap();
        let q = p.q();
        assert_eq!(got, GaussRat::from_rat(Rat::one() / q));
    }

    #[test]
    fn eval_s_times_c() {
        let p = point_quarter();
        let e = SymbolExpr::var_s(1, 1).mul(&SymbolExpr::var_c(1, 1)).unwrap();
        let got = eval_exact(&e, &p).unwrap();
        assert_eq!(got, GaussRat::from_rat(rat(12, 25)));
    }

    #[test]
    fn eval_homomorphism_on_product() {
        let p = point_quarter();
        let a = SymbolExpr::var_u(1, 1, 1)
            .add(&SymbolExpr::var_s(1, -1))
            .unwrap();
        let b = SymbolExpr::inv_q(1, 1)
            .add(&SymbolExpr::var_alpha(1, -2))
            .unwrap();
        let ab = a.mul(&b).unwrap();
        let va = eval_exact(&a, &p).unwrap();
        let vb = eval_exact(&b, &p).unwrap();
        let vab = eval_exact(&ab, &p).unwrap();
        assert_eq!(vab, &va * &vb);
    }

    #[test]
    fn c64_matches_exact() {
        let p = point_quarter();
        let e = SymbolExpr::var_u(1, 3, 2)
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap()
            .mul(&SymbolExpr::var_c(1, -1))
            .unwrap();
        let exact = eval_exact(&e, &p).unwrap();
        let fp = EvalPoint {
            u0: 9.0 / 25.0,
            u: p.u.iter().map(rat_to_f64).collect(),
            alpha: rat_to_f64(&p.alpha),
            alphaj: p.alphaj.iter().map(rat_to_f64).collect(),
        };
        let g = eval_c64(&e, &fp);
        assert!((g.re - rat_to_f64(&exact.re)).abs() < 1e-12);
        assert!(g.im.abs() < 1e-15);
    }

    #[test]
    fn dd_eval_matches_exact() {
        let p = point_quarter();
        let e = SymbolExpr::var_u(1, 2, 2)
            .mul(&SymbolExpr::inv_q(1, 3))
            .unwrap()
            .mul(&SymbolExpr::var_s(1, -1))
            .unwrap()
            .scale(&GaussRat::from_rat(rat(-7, 11)));
        let cr = CompiledReal::new(&e).unwrap();
        let u: Vec<Dd> = p.u.iter().map(rat_to_dd).collect();
        let aj: Vec<Dd> = p.alphaj.iter().map(rat_to_dd).collect();
        let got = cr.eval_dd(rat_to_dd(&p.s), rat_to_dd(&p.c), &u, rat_to_dd(&p.alpha), &aj);
        let want = rat_to_dd(&eval_exact(&e, &p).unwrap().re);
        let diff = got - want;
        let scale = want.to_f64().abs().max(1e-30);
        assert!(diff.to_f64().abs() < scale * 1e-28);
    }
}

