//! Recursive computation of the homogeneous symbol orders of the parametrix
//! of the torus-extended Dirac Laplacian, down to order -2n-2.

use crate::dirac::{laplace_symbols, p2_scalar};
use crate::error::{Result, RwsaError};
use crate::expr::SymbolExpr;
use crate::matrix::MatrixSymbol;
use crate::rational::{rat_int, GaussRat, Rat};
use num::One;
use std::collections::HashMap;

/// sigma_{-2}, ..., sigma_{-2-2n} of Delta_{2n}^{-1}; `orders[j]` is the
/// matrix homogeneous of degree -2-j.
pub struct SymbolExpansion {
    pub n: usize,
    pub orders: Vec<MatrixSymbol>,
}

/// The base order: (1/Q) I, with Q carrying the torus variables.
pub fn sigma_minus2(n: usize) -> Result<MatrixSymbol> {
    if n < 1 {
        return Err(RwsaError::BadIndex(n as i64));
    }
    Ok(MatrixSymbol::scalar(n, -2, SymbolExpr::inv_q(n, 1)))
}

pub fn trace(m: &MatrixSymbol) -> Result<SymbolExpr> {
    m.trace()
}

/// Caches mixed (d/du_1)^{l1} (d/du_2)^{l2} derivatives of matrices, keyed by
/// an id per base matrix. Derivatives in u_1 are applied first; the two
/// derivations commute, so the order is irrelevant.
struct DerivCache {
    map: HashMap<(usize, usize, usize), MatrixSymbol>,
}

impl DerivCache {
    fn new() -> Self {
        DerivCache {
            map: HashMap::new(),
        }
    }

    fn seed(&mut self, id: usize, m: MatrixSymbol) {
        self.map.insert((id, 0, 0), m);
    }

    fn get(&mut self, id: usize, l1: usize, l2: usize) -> Result<MatrixSymbol> {
        if let Some(m) = self.map.get(&(id, l1, l2)) {
            return Ok(m.clone());
        }
        let m = if l2 > 0 {
            self.get(id, l1, l2 - 1)?.d_u(2)?
        } else {
            self.get(id, l1 - 1, 0)?.d_u(1)?
        };
        self.map.insert((id, l1, l2), m.clone());
        Ok(m)
    }
}

/// Mixed d_t^{l1} d_eta^{l2} derivatives of p_k, precomputed once.
struct PDerivCache {
    map: HashMap<(usize, usize, usize), MatrixSymbol>,
}

impl PDerivCache {
    fn new(n: usize) -> Result<Self> {
        let (p2, p1, p0) = laplace_symbols(n)?;
        let mut map = HashMap::new();
        map.insert((2, 0, 0), p2);
        map.insert((1, 0, 0), p1);
        map.insert((0, 0, 0), p0);
        Ok(PDerivCache { map })
    }

    fn get(&mut self, k: usize, l1: usize, l2: usize) -> Result<MatrixSymbol> {
        if let Some(m) = self.map.get(&(k, l1, l2)) {
            return Ok(m.clone());
        }
        let m = if l2 > 0 {
            self.get(k, l1, l2 - 1)?.d_eta()?
        } else {
            self.get(k, l1 - 1, 0)?.d_t()?
        };
        self.map.insert((k, l1, l2), m.clone());
        Ok(m)
    }
}

/// Run the recursion for orders -2-m, m = 1..2n. Each contribution is
///
/// ```text
///   (-i)^{l1+l2} / (l1! l2!) (d_{u1}^{l1} d_{u2}^{l2} sigma_{-2-j}) (d_t^{l1} d_eta^{l2} p_k) sigma_{-2}
/// ```
///
/// summed over 0 <= j < m, 0 <= k <= 2, l1 + l2 = m - 2 - j + k >= 0, and
/// negated. The degree constraint comes from order bookkeeping: the factors
/// have degrees (-2-j) - (l1+l2), k, and -2, which must total -2-m.
pub fn expand(n: usize) -> Result<SymbolExpansion> {
    if n < 1 {
        return Err(RwsaError::BadIndex(n as i64));
    }
    let s2 = sigma_minus2(n)?;
    let mut pcache = PDerivCache::new(n)?;
    let mut scache = DerivCache::new();
    scache.seed(0, s2.clone());

    let mut orders: Vec<MatrixSymbol> = vec![s2.clone()];
    for m in 1..=2 * n {
        let mut acc = MatrixSymbol::zero(n, -2 - m as i64);
        for j in 0..m {
            for k in 0..=2usize {
                let tot = (m as i64) - 2 - (j as i64) + (k as i64);
                if tot < 0 {
                    continue;
                }
                for l1 in 0..=(tot as usize) {
                    let l2 = tot as usize - l1;
                    let ds = scache.get(j, l1, l2)?;
                    if ds.is_zero() {
                        continue;
                    }
                    let dp = pcache.get(k, l1, l2)?;
                    if dp.is_zero() {
                        continue;
                    }
                    let mut contrib = ds.matmul(&dp)?.scale_expr(&SymbolExpr::inv_q(n, 1), -2)?;
                    let fact = rat_int(factorial(l1) * factorial(l2));
                    contrib =
                        contrib.scale(&GaussRat::from_rat(Rat::one() / fact).mul_i_pow(3 * ((l1 + l2) as u32 % 4)));
                    // every term must have u-degree exactly -2-m
                    for e in &contrib.entries {
                        if let Some(d) = e.homogeneous_degree().map_err(|_| homog_err(m, j, k, l1, l2, -2 - m as i64))? {
                            if d != -2 - m as i64 {
                                return Err(RwsaError::NotHomogeneous {
                                    m,
                                    j,
                                    k,
                                    l1,
                                    l2,
                                    got: d,
                                    want: -2 - m as i64,
                                });
                            }
                        }
                    }
                    acc = acc.add(&contrib)?;
                }
            }
        }
        let order_m = acc.neg();
        order_m.check_homogeneous()?;
        scache.seed(m, order_m.clone());
        orders.push(order_m);
    }
    Ok(SymbolExpansion { n, orders })
}

fn homog_err(m: usize, j: usize, k: usize, l1: usize, l2: usize, want: i64) -> RwsaError {
    RwsaError::NotHomogeneous {
        m,
        j,
        k,
        l1,
        l2,
        got: i64::MIN,
        want,
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product::<i64>().max(1)
}

/// Convenience: p_2 together with the torus variables, i.e. Q itself as an
/// expression (used by tests and the numeric verifiers).
pub fn q_expr(n: usize) -> SymbolExpr {
    let mut acc = p2_scalar(n);
    for j in 5..=2 * n + 2 {
        acc = acc
            .add(&SymbolExpr::var_u(n, j, 2))
            .expect("same index");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case_is_inverse_q() {
        let e = expand(1).unwrap();
        assert_eq!(e.orders[0].entries, sigma_minus2(1).unwrap().entries);
        assert_eq!(
            e.orders[0].trace().unwrap(),
            SymbolExpr::inv_q(1, 1).scale(&GaussRat::from_int(4))
        );
    }

    #[test]
    fn rejects_bad_index() {
        assert!(expand(0).is_err());
        assert!(sigma_minus2(0).is_err());
    }

    #[test]
    fn orders_are_homogeneous() {
        let e = expand(1).unwrap();
        for (j, m) in e.orders.iter().enumerate() {
            assert_eq!(m.order, -2 - j as i64);
            m.check_homogeneous().unwrap();
        }
    }

    #[test]
    fn q_times_sigma_minus2_evaluates_to_identity_trace() {
        // Q stays structural in the denominator, so Q * (1/Q) does not
        // collapse syntactically; it must still evaluate to 1 everywhere.
        use crate::eval::{eval_exact, ExactPoint};
        use crate::rational::rat;
        let s2 = sigma_minus2(1).unwrap();
        let q = q_expr(1);
        let t = s2.scale_expr(&q, 2).unwrap().trace().unwrap();
        let p = ExactPoint {
            s: rat(3, 5),
            c: rat(4, 5),
            u: vec![rat(1, 2), rat(-1, 3), rat(2, 7), rat(1, 9)],
            alpha: rat(7, 5),
            alphaj: vec![rat(1, 4), rat(-2, 3)],
        };
        assert_eq!(eval_exact(&t, &p).unwrap(), GaussRat::from_int(4));
    }
}
