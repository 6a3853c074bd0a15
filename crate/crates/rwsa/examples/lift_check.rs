//! sigma_{-2-m}(n=2) for m <= 2 must equal the n=1 result with Q replaced,
//! since the torus variables enter only through the structural Q power.
use rwsa::expr::SymbolExpr;
use rwsa::parametrix::expand;
use rwsa::term::VarPowers;

fn lift_key(k: &VarPowers) -> VarPowers {
    let mut u = k.u.clone();
    u.extend([0, 0]);
    let mut aj = k.alphaj.clone();
    aj.extend([0, 0]);
    VarPowers { u0: k.u0, s: k.s, c: k.c, u, alpha: k.alpha, alphaj: aj, q: k.q }
}

fn lift(e: &SymbolExpr) -> SymbolExpr {
    let mut out = SymbolExpr::zero(2);
    for (k, c) in &e.terms {
        out = out.add(&SymbolExpr::from_term(2, lift_key(k), c.clone())).unwrap();
    }
    out
}

fn main() {
    let e1 = expand(1).unwrap();
    let e2 = expand(2).unwrap();
    for m in 0..=2usize {
        let mut same = true;
        for idx in 0..16 {
            let a = lift(&e1.orders[m].entries[idx]);
            if a != e2.orders[m].entries[idx] {
                same = false;
            }
        }
        println!("order -2-{m}: n=2 equals lifted n=1: {same}");
    }
}
