//! Sparse exact expressions over the structured denominator form, with the
//! three derivations used by the parametrix recursion.

use crate::error::{Result, RwsaError};
use crate::rational::{rat, rat_int, GaussRat, Rat};
use crate::term::VarPowers;
use num::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// Exact sum of terms, canonically ordered by `VarPowers`.
/// Zero-coefficient terms are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolExpr {
    pub n: usize,
    pub terms: BTreeMap<VarPowers, GaussRat>,
}

/// Insert `key^coeff` applying the normalizing rewrites s^2 -> u0 and
/// c^2 -> 1 - u0 until net s, c exponents are at most 1. The u0 power and
/// the s power reduce jointly through the net exponent 2*u0 + s, so that
/// u0 * s^-2 cancels to 1.
fn push_raw(map: &mut BTreeMap<VarPowers, GaussRat>, mut key: VarPowers, coeff: GaussRat) {
    if coeff.is_zero() {
        return;
    }
    let net_s = 2 * key.u0 as i32 + key.s;
    if net_s >= 0 {
        key.u0 = (net_s / 2) as u32;
        key.s = net_s % 2;
    } else {
        key.u0 = 0;
        key.s = net_s;
    }
    if key.c >= 2 {
        let mut k1 = key.clone();
        k1.c -= 2;
        let mut k2 = k1.clone();
        k2.u0 += 1;
        push_raw(map, k1, coeff.clone());
        push_raw(map, k2, -coeff);
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SymbolExpr {
    pub fn zero(n: usize) -> Self {
        SymbolExpr {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, coeff: GaussRat) -> Self {
        let mut e = Self::zero(n);
        push_raw(&mut e.terms, VarPowers::unit(n), coeff);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, GaussRat::one())
    }

    pub fn from_term(n: usize, key: VarPowers, coeff: GaussRat) -> Self {
        let mut e = Self::zero(n);
        push_raw(&mut e.terms, key, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_n(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(RwsaError::IndexMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_n(o)?;
        let (big, small) = if self.terms.len() >= o.terms.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut terms = big.terms.clone();
        for (k, v) in &small.terms {
            push_raw(&mut terms, k.clone(), v.clone());
        }
        Ok(SymbolExpr { n: self.n, terms })
    }

    pub fn neg(&self) -> Self {
        SymbolExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &GaussRat) -> Self {
        if r.is_zero() {
            return Self::zero(self.n);
        }
        SymbolExpr {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * r)).collect(),
        }
    }

    fn mul_single(
        out: &mut BTreeMap<VarPowers, GaussRat>,
        ka: &VarPowers,
        ca: &GaussRat,
        kb: &VarPowers,
        cb: &GaussRat,
    ) {
        let key = VarPowers {
            u0: ka.u0 + kb.u0,
            s: ka.s + kb.s,
            c: ka.c + kb.c,
            u: ka
                .u
                .iter()
                .zip(&kb.u)
                .map(|(x, y)| x + y)
                .collect(),
            alpha: ka.alpha + kb.alpha,
            alphaj: ka
                .alphaj
                .iter()
                .zip(&kb.alphaj)
                .map(|(x, y)| x + y)
                .collect(),
            q: ka.q + kb.q,
        };
        push_raw(out, key, ca * cb);
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_n(o)?;
        let work = self.terms.len() * o.terms.len();
        if work > 1 << 14 {
            // Parallel over chunks of the left factor; the keyed merge makes
            // the result independent of scheduling.
            let a: Vec<_> = self.terms.iter().collect();
            let terms = a
                .par_chunks(64.max(a.len() / (8 * rayon::current_num_threads().max(1))))
                .map(|chunk| {
                    let mut local = BTreeMap::new();
                    for (ka, ca) in chunk {
                        for (kb, cb) in &o.terms {
                            Self::mul_single(&mut local, ka, ca, kb, cb);
                        }
                    }
                    local
                })
                .reduce(BTreeMap::new, |mut x, y| {
                    for (k, v) in y {
                        push_raw(&mut x, k, v);
                    }
                    x
                });
            return Ok(SymbolExpr { n: self.n, terms });
        }
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                Self::mul_single(&mut terms, ka, ca, kb, cb);
            }
        }
        Ok(SymbolExpr { n: self.n, terms })
    }

    /// Multiply every term by a monomial.
    pub fn mul_key(&self, key: &VarPowers, coeff: &GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            Self::mul_single(&mut terms, ka, ca, key, coeff);
        }
        SymbolExpr { n: self.n, terms }
    }

    pub fn mul_i_pow(&self, k: u32) -> Self {
        SymbolExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(key, v)| (key.clone(), v.mul_i_pow(k)))
                .collect(),
        }
    }

    /// Partial derivative with respect to u_j, 1-indexed, with the quotient
    /// rule on Q-powers.
    pub fn d_u(&self, j: usize) -> Result<Self> {
        let nvars = 2 * self.n + 2;
        if j < 1 || j > nvars {
            return Err(RwsaError::VarOutOfRange(j, nvars));
        }
        let ji = j - 1;
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let e = k.u[ji];
            if e > 0 {
                let mut key = k.clone();
                key.u[ji] -= 1;
                push_raw(&mut terms, key, c.scale(&rat_int(e as i64)));
            }
            if k.q > 0 {
                // d(Q^-q) = -q Q^{-q-1} dQ/du_j, dQ/du_j = 2 u_j (alpha^-2 for j=2..4)
                let mut key = k.clone();
                key.q += 1;
                key.u[ji] += 1;
                if (2..=4).contains(&j) {
                    key.alpha -= 2;
                }
                push_raw(&mut terms, key, c.scale(&rat_int(-2 * k.q as i64)));
            }
        }
        Ok(SymbolExpr { n: self.n, terms })
    }

    /// Time derivation: alpha^k -> k alpha^{k-1} alpha_1,
    /// alpha_j -> alpha_{j+1}, and the chain rule through Q.
    pub fn d_t(&self) -> Result<Self> {
        let m = 2 * self.n;
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.alpha != 0 {
                let mut key = k.clone();
                key.alpha -= 1;
                key.alphaj[0] += 1;
                push_raw(&mut terms, key, c.scale(&rat_int(k.alpha as i64)));
            }
            for j in 0..m {
                let e = k.alphaj[j];
                if e > 0 {
                    if j + 1 >= m {
                        return Err(RwsaError::DerivativeOverflow(m));
                    }
                    let mut key = k.clone();
                    key.alphaj[j] -= 1;
                    key.alphaj[j + 1] += 1;
                    push_raw(&mut terms, key, c.scale(&rat_int(e as i64)));
                }
            }
            if k.q > 0 {
                // dQ/dt = -2 alpha^-3 alpha_1 (u2^2+u3^2+u4^2)
                for uj in 1..=3usize {
                    let mut key = k.clone();
                    key.q += 1;
                    key.alpha -= 3;
                    key.alphaj[0] += 1;
                    key.u[uj] += 2;
                    push_raw(&mut terms, key, c.scale(&rat_int(2 * k.q as i64)));
                }
            }
        }
        Ok(SymbolExpr { n: self.n, terms })
    }

    /// Derivative with respect to u0 through u0, s = sqrt(u0) and
    /// c = sqrt(1-u0). Q does not depend on u0.
    fn d_u0(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.u0 > 0 {
                let mut key = k.clone();
                key.u0 -= 1;
                push_raw(&mut terms, key, c.scale(&rat_int(k.u0 as i64)));
            }
            if k.s != 0 {
                let mut key = k.clone();
                key.s -= 2;
                push_raw(&mut terms, key, c.scale(&rat(k.s as i64, 2)));
            }
            if k.c != 0 {
                let mut key = k.clone();
                key.c -= 2;
                push_raw(&mut terms, key, c.scale(&rat(-(k.c as i64), 2)));
            }
        }
        SymbolExpr { n: self.n, terms }
    }

    /// The eta-derivation
    /// `2 s c d_{u0} - u3 (c/s) d_{u3} + u4 (s/c) d_{u4}`.
    pub fn d_eta(&self) -> Result<Self> {
        let n = self.n;
        let mono = |s: i32, c: i32, uj: Option<usize>| {
            let mut k = VarPowers::unit(n);
            k.s = s;
            k.c = c;
            if let Some(j) = uj {
                k.u[j - 1] = 1;
            }
            k
        };
        let p1 = self.d_u0().mul_key(&mono(1, 1, None), &GaussRat::from_int(2));
        let p2 = self
            .d_u(3)?
            .mul_key(&mono(-1, 1, Some(3)), &GaussRat::from_int(-1));
        let p3 = self
            .d_u(4)?
            .mul_key(&mono(1, -1, Some(4)), &GaussRat::from_int(1));
        p1.add(&p2)?.add(&p3)
    }

    /// Degree in (u_1..u_{2n+2}) when homogeneous.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>> {
        let mut deg = None;
        for k in self.terms.keys() {
            let d = k.u_degree();
            match deg {
                None => deg = Some(d),
                Some(p) if p != d => return Err(RwsaError::MixedDegrees(p, d)),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Substitute u_j -> lambda u_j for all j >= 1 (Q scales by lambda^2).
    pub fn scale_u(&self, lambda: &Rat) -> Self {
        let inv = Rat::one() / lambda;
        SymbolExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let d = k.u_degree();
                    let f = if d >= 0 {
                        num::pow::pow(lambda.clone(), d as usize)
                    } else {
                        num::pow::pow(inv.clone(), (-d) as usize)
                    };
                    (k.clone(), v.scale(&f))
                })
                .collect(),
        }
    }

    /// Keep only terms whose u_1..u_{2n+2} exponents are all even.
    pub fn even_u_part(&self) -> Self {
        SymbolExpr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.u_all_even())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn max_imag_abs_is_zero(&self) -> bool {
        self.terms.values().all(|c| c.im.is_zero())
    }
}

// -- monomial construction helpers ------------------------------------------

impl SymbolExpr {
    pub fn var_u(n: usize, j: usize, pow: u16) -> Self {
        let mut k = VarPowers::unit(n);
        k.u[j - 1] = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn var_alpha(n: usize, pow: i32) -> Self {
        let mut k = VarPowers::unit(n);
        k.alpha = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn var_alphaj(n: usize, j: usize, pow: u16) -> Self {
        let mut k = VarPowers::unit(n);
        k.alphaj[j - 1] = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn var_u0(n: usize, pow: u32) -> Self {
        let mut k = VarPowers::unit(n);
        k.u0 = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn var_s(n: usize, pow: i32) -> Self {
        let mut k = VarPowers::unit(n);
        k.s = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn var_c(n: usize, pow: i32) -> Self {
        let mut k = VarPowers::unit(n);
        k.c = pow;
        Self::from_term(n, k, GaussRat::one())
    }

    pub fn inv_q(n: usize, pow: u32) -> Self {
        let mut k = VarPowers::unit(n);
        k.q = pow;
        Self::from_term(n, k, GaussRat::one())
    }
}

// -- text form ---------------------------------------------------------------

impl fmt::Display for SymbolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            let mut p = |name: String, e: i64| -> fmt::Result {
                if e == 1 {
                    write!(f, "*{}", name)
                } else if e != 0 {
                    write!(f, "*{}^{}", name, e)
                } else {
                    Ok(())
                }
            };
            p("u0".into(), k.u0 as i64)?;
            p("s".into(), k.s as i64)?;
            p("c".into(), k.c as i64)?;
            for (j, &e) in k.u.iter().enumerate() {
                p(format!("u{}", j + 1), e as i64)?;
            }
            p("alpha".into(), k.alpha as i64)?;
            for (j, &e) in k.alphaj.iter().enumerate() {
                p(format!("alpha{}", j + 1), e as i64)?;
            }
            p("Q".into(), -(k.q as i64))?;
        }
        Ok(())
    }
}

// -- JSON (spec wire format) --------------------------------------------------

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct CoeffRepr {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct NumRepr {
    u0: u32,
    s: u8,
    c: u8,
    u: Vec<u16>,
    alpha: i32,
    alphaj: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct DenRepr {
    s: u32,
    c: u32,
    q: u32,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: CoeffRepr,
    num: NumRepr,
    den: DenRepr,
}

impl SymbolExpr {
    pub fn to_json_terms(&self) -> serde_json::Value {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(k, c)| TermRepr {
                coeff: CoeffRepr {
                    re: c.re.to_string(),
                    im: c.im.to_string(),
                },
                num: NumRepr {
                    u0: k.u0,
                    s: k.s.max(0) as u8,
                    c: k.c.max(0) as u8,
                    u: k.u.clone(),
                    alpha: k.alpha,
                    alphaj: k.alphaj.clone(),
                },
                den: DenRepr {
                    s: (-k.s).max(0) as u32,
                    c: (-k.c).max(0) as u32,
                    q: k.q,
                },
            })
            .collect();
        serde_json::to_value(v).expect("term serialization cannot fail")
    }

    pub fn from_json_terms(n: usize, v: &serde_json::Value) -> Result<Self> {
        let reprs: Vec<TermRepr> = serde_json::from_value(v.clone())
            .map_err(|e| RwsaError::Invalid(format!("bad term JSON: {e}")))?;
        let mut e = Self::zero(n);
        for r in reprs {
            if r.num.u.len() != 2 * n + 2 || r.num.alphaj.len() != 2 * n {
                return Err(RwsaError::Invalid(
                    "term variable vectors do not match the declared index".into(),
                ));
            }
            let key = VarPowers {
                u0: r.num.u0,
                s: r.num.s as i32 - r.den.s as i32,
                c: r.num.c as i32 - r.den.c as i32,
                u: r.num.u,
                alpha: r.num.alpha,
                alphaj: r.num.alphaj,
                q: r.den.q,
            };
            let re = crate::rational::rat_from_str(&r.coeff.re)
                .ok_or_else(|| RwsaError::Invalid(format!("bad rational {}", r.coeff.re)))?;
            let im = crate::rational::rat_from_str(&r.coeff.im)
                .ok_or_else(|| RwsaError::Invalid(format!("bad rational {}", r.coeff.im)))?;
            push_raw(&mut e.terms, key, GaussRat::from_parts(re, im));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q1_inv(n: usize) -> SymbolExpr {
        SymbolExpr::inv_q(n, 1)
    }

    #[test]
    fn add_cancels_to_empty() {
        let a = q1_inv(1);
        let b = a.neg();
        let s = a.add(&b).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn add_merges_like_terms() {
        let u1q = SymbolExpr::var_u(1, 1, 1).mul(&q1_inv(1)).unwrap();
        let s = u1q.add(&u1q).unwrap();
        assert_eq!(s.len(), 1);
        let c = s.terms.values().next().unwrap();
        assert_eq!(*c, GaussRat::from_int(2));
    }

    #[test]
    fn identical_normal_forms_merge() {
        // s*u1 + s*u1*u0^0 == 2 s u1
        let n = 1;
        let su1 = SymbolExpr::var_s(n, 1).mul(&SymbolExpr::var_u(n, 1, 1)).unwrap();
        let sum = su1.add(&su1).unwrap();
        assert_eq!(sum.len(), 1);
    }

    #[test]
    fn s_squared_rewrites_to_u0() {
        let s = SymbolExpr::var_s(1, 1);
        let p = s.mul(&s).unwrap();
        assert_eq!(p, SymbolExpr::var_u0(1, 1));
    }

    #[test]
    fn c_squared_rewrites_to_one_minus_u0() {
        let c = SymbolExpr::var_c(1, 1);
        let p = c.mul(&c).unwrap();
        let want = SymbolExpr::one(1)
            .sub(&SymbolExpr::var_u0(1, 1))
            .unwrap();
        assert_eq!(p, want);
    }

    #[test]
    fn q_pow_is_additive() {
        let p = q1_inv(1).mul(&q1_inv(1)).unwrap();
        assert_eq!(p, SymbolExpr::inv_q(1, 2));
    }

    #[test]
    fn mismatched_index_is_an_error() {
        let a = SymbolExpr::one(1);
        let b = SymbolExpr::one(2);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn d_u_on_inverse_q() {
        // d_u(1/Q, 1) = -2 u1 / Q^2
        let got = q1_inv(1).d_u(1).unwrap();
        let want = SymbolExpr::var_u(1, 1, 1)
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap()
            .scale(&GaussRat::from_int(-2));
        assert_eq!(got, want);

        // d_u(1/Q, 2) = -2 u2 alpha^-2 / Q^2
        let got = q1_inv(1).d_u(2).unwrap();
        let want = SymbolExpr::var_u(1, 2, 1)
            .mul(&SymbolExpr::var_alpha(1, -2))
            .unwrap()
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap()
            .scale(&GaussRat::from_int(-2));
        assert_eq!(got, want);

        // d_u(u3^2, 3) = 2 u3
        let got = SymbolExpr::var_u(1, 3, 2).d_u(3).unwrap();
        let want = SymbolExpr::var_u(1, 3, 1).scale(&GaussRat::from_int(2));
        assert_eq!(got, want);

        assert!(q1_inv(1).d_u(5).is_err());
    }

    #[test]
    fn d_t_basics() {
        // d_t(alpha) = alpha_1
        let got = SymbolExpr::var_alpha(1, 1).d_t().unwrap();
        assert_eq!(got, SymbolExpr::var_alphaj(1, 1, 1));

        // d_t(alpha^-2) = -2 alpha^-3 alpha_1
        let got = SymbolExpr::var_alpha(1, -2).d_t().unwrap();
        let want = SymbolExpr::var_alpha(1, -3)
            .mul(&SymbolExpr::var_alphaj(1, 1, 1))
            .unwrap()
            .scale(&GaussRat::from_int(-2));
        assert_eq!(got, want);

        // d_t(1/Q) = 2 alpha^-3 alpha_1 (u2^2+u3^2+u4^2)/Q^2
        let got = q1_inv(1).d_t().unwrap();
        let mut want = SymbolExpr::zero(1);
        for j in 2..=4 {
            let t = SymbolExpr::var_u(1, j, 2)
                .mul(&SymbolExpr::var_alpha(1, -3))
                .unwrap()
                .mul(&SymbolExpr::var_alphaj(1, 1, 1))
                .unwrap()
                .mul(&SymbolExpr::inv_q(1, 2))
                .unwrap()
                .scale(&GaussRat::from_int(2));
            want = want.add(&t).unwrap();
        }
        assert_eq!(got, want);

        // overflow past alpha_{2n}
        let e = SymbolExpr::var_alphaj(1, 2, 1);
        assert!(e.d_t().is_err());
    }

    #[test]
    fn d_eta_basics() {
        // d_eta(u0) = 2 s c
        let got = SymbolExpr::var_u0(1, 1).d_eta().unwrap();
        let want = SymbolExpr::var_s(1, 1)
            .mul(&SymbolExpr::var_c(1, 1))
            .unwrap()
            .scale(&GaussRat::from_int(2));
        assert_eq!(got, want);

        // d_eta(u3) = -u3 c/s
        let got = SymbolExpr::var_u(1, 3, 1).d_eta().unwrap();
        let want = SymbolExpr::var_u(1, 3, 1)
            .mul(&SymbolExpr::var_c(1, 1))
            .unwrap()
            .mul(&SymbolExpr::var_s(1, -1))
            .unwrap()
            .neg();
        assert_eq!(got, want);

        // d_eta(1/Q) = (2 u3^2 c/(s alpha^2) - 2 u4^2 s/(c alpha^2))/Q^2
        let got = q1_inv(1).d_eta().unwrap();
        let t1 = SymbolExpr::var_u(1, 3, 2)
            .mul(&SymbolExpr::var_c(1, 1))
            .unwrap()
            .mul(&SymbolExpr::var_s(1, -1))
            .unwrap()
            .mul(&SymbolExpr::var_alpha(1, -2))
            .unwrap()
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap()
            .scale(&GaussRat::from_int(2));
        let t2 = SymbolExpr::var_u(1, 4, 2)
            .mul(&SymbolExpr::var_s(1, 1))
            .unwrap()
            .mul(&SymbolExpr::var_c(1, -1))
            .unwrap()
            .mul(&SymbolExpr::var_alpha(1, -2))
            .unwrap()
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap()
            .scale(&GaussRat::from_int(-2));
        let want = t1.add(&t2).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn json_roundtrip_exact() {
        let mut e = SymbolExpr::var_u(1, 1, 2)
            .mul(&SymbolExpr::inv_q(1, 3))
            .unwrap()
            .scale(&GaussRat::from_parts(rat(-7, 3), rat(1, 2)));
        e = e
            .add(
                &SymbolExpr::var_s(1, -1)
                    .mul(&SymbolExpr::var_c(1, 1))
                    .unwrap()
                    .mul(&SymbolExpr::var_alpha(1, -4))
                    .unwrap(),
            )
            .unwrap();
        let j = e.to_json_terms();
        let back = SymbolExpr::from_json_terms(1, &j).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn homogeneity_degree_and_scaling() {
        let e = SymbolExpr::var_u(1, 2, 2).mul(&SymbolExpr::inv_q(1, 2)).unwrap();
        assert_eq!(e.homogeneous_degree().unwrap(), Some(-2));
        let scaled = e.scale_u(&rat_int(2));
        assert_eq!(scaled, e.scale(&GaussRat::from_rat(rat(1, 4))));
    }
}
