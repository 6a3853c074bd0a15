//! Exact pseudodifferential symbols of the Robertson-Walker Dirac operator
//! and its square, in u-coordinates.

use crate::error::{Result, RwsaError};
use crate::expr::SymbolExpr;
use crate::matrix::MatrixSymbol;
use crate::rational::{rat, GaussRat};
use crate::term::VarPowers;

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(RwsaError::BadIndex(n as i64));
    }
    Ok(())
}

/// Monomial helper: coeff * u_j * alpha^apow (u_j skipped when j = 0).
fn mono(n: usize, coeff: GaussRat, j: usize, apow: i32) -> SymbolExpr {
    let mut k = VarPowers::unit(n);
    if j > 0 {
        k.u[j - 1] = 1;
    }
    k.alpha = apow;
    SymbolExpr::from_term(n, k, coeff)
}

/// The order-1 part q_1 of the Dirac symbol.
pub fn dirac_q1(n: usize) -> Result<MatrixSymbol> {
    check_n(n)?;
    let one = GaussRat::one();
    let i = GaussRat::i();
    let zero = || SymbolExpr::zero(n);

    // building blocks
    let u1 = mono(n, one.clone(), 1, 0);
    let iu2a = mono(n, i.clone(), 2, -1);
    let u3a = mono(n, one.clone(), 3, -1);
    let iu4a = mono(n, i.clone(), 4, -1);

    let e13 = iu4a.sub(&u1)?; // i u4/alpha - u1
    let e14 = iu2a.add(&u3a)?; // i u2/alpha + u3/alpha
    let e23 = iu2a.sub(&u3a)?; // i u2/alpha - u3/alpha
    let e24 = u1.neg().sub(&iu4a)?; // -u1 - i u4/alpha
    let e31 = e24.clone();
    let e32 = iu2a.neg().sub(&u3a)?; // -i u2/alpha - u3/alpha
    let e41 = u3a.sub(&iu2a)?; // u3/alpha - i u2/alpha
    let e42 = e13.clone();

    Ok(MatrixSymbol::from_entries(
        n,
        1,
        vec![
            zero(),
            zero(),
            e13,
            e14,
            zero(),
            zero(),
            e23,
            e24,
            e31,
            e32,
            zero(),
            zero(),
            e41,
            e42,
            zero(),
            zero(),
        ],
    ))
}

/// The order-0 part q_0 of the Dirac symbol. The off-diagonal entries
/// (1-2u0)/(2 alpha sqrt(u0(1-u0))) are encoded with s, c below the line.
pub fn dirac_q0(n: usize) -> Result<MatrixSymbol> {
    check_n(n)?;
    let zero = || SymbolExpr::zero(n);

    // 3 i alpha_1 / (2 alpha)
    let mut kd = VarPowers::unit(n);
    kd.alpha = -1;
    kd.alphaj[0] = 1;
    let diag = SymbolExpr::from_term(n, kd, GaussRat::from_parts(rat(0, 1), rat(3, 2)));

    // (1 - 2u0) / (2 alpha s c) = (1/2) alpha^-1 s^-1 c^-1 - u0 alpha^-1 s^-1 c^-1
    let mut k1 = VarPowers::unit(n);
    k1.alpha = -1;
    k1.s = -1;
    k1.c = -1;
    let mut k2 = k1.clone();
    k2.u0 = 1;
    let off = SymbolExpr::from_term(n, k1, GaussRat::from_rat(rat(1, 2))).add(
        &SymbolExpr::from_term(n, k2, GaussRat::from_int(-1)),
    )?;
    let moff = off.neg();

    Ok(MatrixSymbol::from_entries(
        n,
        0,
        vec![
            zero(),
            zero(),
            diag.clone(),
            off.clone(),
            zero(),
            zero(),
            off.clone(),
            diag.clone(),
            diag.clone(),
            moff.clone(),
            zero(),
            zero(),
            moff,
            diag,
            zero(),
            zero(),
        ],
    ))
}

/// The scalar expression u1^2 + alpha^-2 (u2^2 + u3^2 + u4^2).
pub fn p2_scalar(n: usize) -> SymbolExpr {
    let mut acc = SymbolExpr::var_u(n, 1, 2);
    for j in 2..=4 {
        let mut k = VarPowers::unit(n);
        k.u[j - 1] = 2;
        k.alpha = -2;
        acc = acc
            .add(&SymbolExpr::from_term(n, k, GaussRat::one()))
            .expect("same index");
    }
    acc
}

/// p_2, p_1, p_0 of the symbol of D^2 (the torus extension enters only
/// through Q at the parametrix stage).
pub fn laplace_symbols(n: usize) -> Result<(MatrixSymbol, MatrixSymbol, MatrixSymbol)> {
    check_n(n)?;
    let q1 = dirac_q1(n)?;
    let q0 = dirac_q0(n)?;

    let p2 = MatrixSymbol::scalar(n, 2, p2_scalar(n));

    let minus_i = GaussRat::from_parts(rat(0, 1), rat(-1, 1));
    let dq1_u1 = q1.d_u(1)?;
    let dq1_u2 = q1.d_u(2)?;

    let p1 = q0
        .matmul(&q1)?
        .add(&q1.matmul(&q0)?)?
        .add(&dq1_u1.matmul(&q1.d_t()?)?.scale(&minus_i))?
        .add(&dq1_u2.matmul(&q1.d_eta()?)?.scale(&minus_i))?;
    let p1 = MatrixSymbol {
        order: 1,
        ..p1
    };

    let p0 = q0
        .matmul(&q0)?
        .add(&dq1_u1.matmul(&q0.d_t()?)?.scale(&minus_i))?
        .add(&dq1_u2.matmul(&q0.d_eta()?)?.scale(&minus_i))?;
    let p0 = MatrixSymbol {
        order: 0,
        ..p0
    };

    p2.check_homogeneous()?;
    p1.check_homogeneous()?;
    p0.check_homogeneous()?;
    Ok((p2, p1, p0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn q1_printed_entries() {
        let q1 = dirac_q1(1).unwrap();
        // entry (1,3) = i u4/alpha - u1
        let want = mono(1, GaussRat::i(), 4, -1)
            .sub(&mono(1, GaussRat::one(), 1, 0))
            .unwrap();
        assert_eq!(*q1.at(0, 2), want);
        assert!(q1.at(0, 0).is_zero());
        assert!(q1.at(1, 1).is_zero());
    }

    #[test]
    fn q1_is_order_one_homogeneous() {
        let q1 = dirac_q1(1).unwrap();
        q1.check_homogeneous().unwrap();
        // scaling u -> 2u doubles every entry
        for e in &q1.entries {
            let scaled = e.scale_u(&rat_int(2));
            assert_eq!(scaled, e.scale(&GaussRat::from_int(2)));
        }
    }

    #[test]
    fn q0_printed_entries() {
        let q0 = dirac_q0(1).unwrap();
        // entry (1,3) = 3 i alpha_1/(2 alpha)
        let mut k = VarPowers::unit(1);
        k.alpha = -1;
        k.alphaj[0] = 1;
        let want = SymbolExpr::from_term(1, k, GaussRat::from_parts(rat(0, 1), rat(3, 2)));
        assert_eq!(*q0.at(0, 2), want);
        // entry (3,2) = -(entry (1,4))
        assert_eq!(q0.at(2, 1).neg(), *q0.at(0, 3));
    }

    #[test]
    fn q1_squared_is_p2() {
        let q1 = dirac_q1(1).unwrap();
        let sq = q1.matmul(&q1).unwrap();
        let p2 = MatrixSymbol::scalar(1, 2, p2_scalar(1));
        assert_eq!(sq.entries, p2.entries);
    }

    #[test]
    fn p2_commutes_with_q1() {
        let q1 = dirac_q1(1).unwrap();
        let (p2, _, _) = laplace_symbols(1).unwrap();
        assert_eq!(
            p2.matmul(&q1).unwrap().entries,
            q1.matmul(&p2).unwrap().entries
        );
    }

    #[test]
    fn laplace_orders() {
        let (p2, p1, p0) = laplace_symbols(1).unwrap();
        assert_eq!(p2.order, 2);
        assert_eq!(p1.order, 1);
        assert_eq!(p0.order, 0);
        assert!(!p1.is_zero());
        assert!(!p0.is_zero());
    }
}
