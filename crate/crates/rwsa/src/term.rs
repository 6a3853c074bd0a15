//! Exponent data of a single term.
//!
//! A term is
//!
//! ```text
//!   coeff * u0^u0 * s^s * c^c * u1^{u[0]} ... u_{2n+2}^{u[2n+1]}
//!         * alpha^alpha * alpha_1^{alphaj[0]} ... alpha_{2n}^{alphaj[2n-1]}
//!         / Q^q
//! ```
//!
//! with `s = sqrt(u0)`, `c = sqrt(1-u0)` and
//! `Q = u1^2 + alpha^-2 (u2^2+u3^2+u4^2) + u5^2 + ... + u_{2n+2}^2`.
//!
//! Normal form: `s` and `c` carry *net* exponents bounded above by 1; the
//! rewrites s^2 -> u0 and c^2 -> 1 - u0 are applied eagerly, so a positive
//! exponent is at most 1 while negative exponents (denominators) are
//! unbounded. The paper-facing encoding with separate numerator bits and
//! denominator powers (den_s = max(-s,0), etc.) is recovered in the
//! serializer. `Q` is purely structural and never expanded.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarPowers {
    pub u0: u32,
    pub s: i32,
    pub c: i32,
    pub u: Vec<u16>,
    pub alpha: i32,
    pub alphaj: Vec<u16>,
    pub q: u32,
}

impl VarPowers {
    pub fn unit(n: usize) -> Self {
        VarPowers {
            u0: 0,
            s: 0,
            c: 0,
            u: vec![0; 2 * n + 2],
            alpha: 0,
            alphaj: vec![0; 2 * n],
            q: 0,
        }
    }

    /// Homogeneity degree in (u_1, ..., u_{2n+2}), counting Q as degree 2.
    pub fn u_degree(&self) -> i64 {
        self.u.iter().map(|&e| e as i64).sum::<i64>() - 2 * self.q as i64
    }

    /// True when every u_j exponent is even.
    pub fn u_all_even(&self) -> bool {
        self.u.iter().all(|&e| e % 2 == 0)
    }

    /// Net exponent of sin(eta) after u0 = sin^2(eta): 2*u0 + s.
    pub fn sin_eta_pow(&self) -> i32 {
        2 * self.u0 as i32 + self.s
    }

    pub fn cos_eta_pow(&self) -> i32 {
        self.c
    }
}

/// Canonical total order: lexicographic on
/// (q, alpha, u0, s, c, u-vector, alphaj-vector), where s and c compare by
/// their net signed exponents. Fixed so serialization is deterministic.
impl Ord for VarPowers {
    fn cmp(&self, o: &Self) -> Ordering {
        self.q
            .cmp(&o.q)
            .then_with(|| self.alpha.cmp(&o.alpha))
            .then_with(|| self.u0.cmp(&o.u0))
            .then_with(|| self.s.cmp(&o.s))
            .then_with(|| self.c.cmp(&o.c))
            .then_with(|| self.u.cmp(&o.u))
            .then_with(|| self.alphaj.cmp(&o.alphaj))
    }
}

impl PartialOrd for VarPowers {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
