//! Try recursion variants to see which (if any) reproduces the printed
//! appendix expression.
use rwsa::dirac::laplace_symbols;
use rwsa::error::Result;
use rwsa::eval::{eval_c64, EvalPoint};
use rwsa::expr::SymbolExpr;
use rwsa::matrix::MatrixSymbol;
use rwsa::oracle::{oracle_to_expr, parse_oracle};
use rwsa::parametrix::sigma_minus2;
use rwsa::rational::{rat_int, GaussRat, Rat};
use rwsa::residue::parity_filter;
use num::One;

#[derive(Clone, Copy, Debug)]
enum Variant {
    Baseline,
    OddSignFlip,
    PlusI,
    NoFactorial,
    NoP0AtDepth,
}

fn expand_variant(n: usize, v: Variant) -> Result<Vec<MatrixSymbol>> {
    let s2 = sigma_minus2(n)?;
    let (p2, p1, p0) = laplace_symbols(n)?;
    let ps = [p0, p1, p2];
    let mut orders = vec![s2.clone()];
    let mut dcache: Vec<Vec<Vec<MatrixSymbol>>> = vec![];
    let deriv = |m: &MatrixSymbol, l1: usize, l2: usize| -> Result<MatrixSymbol> {
        let mut x = m.clone();
        for _ in 0..l1 { x = x.d_u(1)?; }
        for _ in 0..l2 { x = x.d_u(2)?; }
        Ok(x)
    };
    let pderiv = |k: usize, l1: usize, l2: usize, ps: &[MatrixSymbol; 3]| -> Result<MatrixSymbol> {
        let mut x = ps[k].clone();
        for _ in 0..l1 { x = x.d_t()?; }
        for _ in 0..l2 { x = x.d_eta()?; }
        Ok(x)
    };
    let _ = &mut dcache;
    for m in 1..=2 * n {
        let mut acc = MatrixSymbol::zero(n, -2 - m as i64);
        for j in 0..m {
            for k in 0..=2usize {
                if matches!(v, Variant::NoP0AtDepth) && k == 0 && j > 0 {
                    continue;
                }
                let tot = (m as i64) - 2 - (j as i64) + (k as i64);
                if tot < 0 { continue; }
                for l1 in 0..=(tot as usize) {
                    let l2 = tot as usize - l1;
                    let ds = deriv(&orders[j], l1, l2)?;
                    let dp = pderiv(k, l1, l2, &[ps[0].clone(), ps[1].clone(), ps[2].clone()])?;
                    let mut contrib = ds.matmul(&dp)?.scale_expr(&SymbolExpr::inv_q(n, 1), -2)?;
                    let fact = if matches!(v, Variant::NoFactorial) {
                        Rat::one()
                    } else {
                        Rat::one() / rat_int((1..=l1 as i64).product::<i64>().max(1) * (1..=l2 as i64).product::<i64>().max(1))
                    };
                    let ipow = if matches!(v, Variant::PlusI) { (l1 + l2) as u32 % 4 } else { 3 * ((l1 + l2) as u32 % 4) };
                    contrib = contrib.scale(&GaussRat::from_rat(fact).mul_i_pow(ipow));
                    acc = acc.add(&contrib)?;
                }
            }
        }
        let mut out = acc.neg();
        if matches!(v, Variant::OddSignFlip) && m % 2 == 1 {
            out = out.neg();
        }
        orders.push(out);
    }
    Ok(orders)
}

fn ev(n: usize, e: &SymbolExpr, eta: f64, xi: &[f64], ajet: &[f64]) -> f64 {
    let mut u: Vec<f64> = xi.to_vec();
    u[2] = xi[2] / eta.sin();
    u[3] = xi[3] / eta.cos();
    let p = EvalPoint { u0: eta.sin().powi(2), u, alpha: ajet[0], alphaj: ajet[1..=2 * n].to_vec() };
    eval_c64(e, &p).re
}

fn main() {
    let text = std::fs::read_to_string(format!("{}/tests/fixtures/b_minus6.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let fix = oracle_to_expr(&parse_oracle(&text).unwrap(), 2).unwrap();
    let pts: Vec<(f64, Vec<f64>, Vec<f64>)> = vec![
        (0.9, vec![0.4, 0.7, -0.3, 0.5, 0.2, -0.6], vec![1.2, 0.3, -0.2, 0.15, 0.4]),
        (0.7, vec![0.5, -0.3, 0.2, 0.6, -0.4, 0.3], vec![1.4, 0.33, -0.4, 0.43, -0.17]),
    ];
    for v in [Variant::Baseline, Variant::OddSignFlip, Variant::PlusI, Variant::NoFactorial, Variant::NoP0AtDepth] {
        let orders = expand_variant(2, v).unwrap();
        let tr = parity_filter(&orders[4].trace().unwrap());
        let mut devs = Vec::new();
        for (eta, xi, ajet) in &pts {
            let ve = ev(2, &tr, *eta, xi, ajet);
            let vf = ev(2, &fix, *eta, xi, ajet);
            devs.push(((ve - vf) / vf.abs() * 1e6).round() / 1e6);
        }
        println!("{:?}: rel devs {:?}", v, devs);
    }
}
