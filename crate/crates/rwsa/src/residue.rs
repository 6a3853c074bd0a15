//! Reduction of the traced top-order symbol to the heat coefficient:
//! parity filter, cosphere substitution, exact Wallis angular integrals,
//! eta-independence verification, and prefactor assembly.

use crate::error::{Result, RwsaError};
use crate::expr::SymbolExpr;
use crate::parametrix::{expand, trace};
use crate::rational::{rat, rat_int, Rat};
use num::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Remove every term with an odd exponent in any of u_1..u_{2n+2}; such
/// terms integrate to zero over the cosphere.
pub fn parity_filter(e: &SymbolExpr) -> SymbolExpr {
    e.even_u_part()
}

/// Gamma(k/2) for k >= 1 as rational * sqrt(pi)^w with w in {0,1}.
fn gamma_half(k: u32) -> (Rat, u32) {
    assert!(k >= 1);
    if k % 2 == 0 {
        // (k/2 - 1)!
        let mut acc = Rat::one();
        for j in 2..(k / 2) {
            acc *= rat_int(j as i64 + 0);
        }
        // note: loop above computes (k/2 - 1)! as product of 2..=k/2-1
        (acc, 0)
    } else {
        // Gamma(1/2) = sqrt(pi); Gamma(m + 1/2) = (2m)!/(4^m m!) sqrt(pi)
        let m = (k - 1) / 2;
        let mut acc = Rat::one();
        for j in 1..=m {
            acc *= rat(2 * j as i64 - 1, 2);
        }
        (acc, 1)
    }
}

/// Exact value of the trigonometric integral
/// `int cos^a(psi) sin^b(psi) dpsi` over [0, 2pi] (full) or [0, pi] (half),
/// as a rational multiple of an explicit power of pi.
pub fn wallis(cos_pow: u32, sin_pow: u32, full_circle: bool) -> (Rat, i64) {
    let (a, b) = (cos_pow, sin_pow);
    if full_circle {
        if a % 2 == 1 || b % 2 == 1 {
            return (Rat::zero(), 0);
        }
    } else if a % 2 == 1 {
        // reflection psi -> pi - psi flips cos
        return (Rat::zero(), 0);
    }
    // B((a+1)/2, (b+1)/2) = G((a+1)/2) G((b+1)/2) / G((a+b)/2 + 1)
    let (g1, w1) = gamma_half(a + 1);
    let (g2, w2) = gamma_half(b + 1);
    let (g3, w3) = gamma_half(a + b + 2);
    let beta = g1 * g2 / g3;
    let w = w1 as i64 + w2 as i64 - w3 as i64;
    debug_assert!(w % 2 == 0, "surviving Wallis integrals are rational * pi^k");
    let factor = if full_circle { rat_int(2) } else { rat_int(1) };
    (factor * beta, w / 2)
}

/// One reduced term of the traced symbol restricted to the metric cosphere:
/// exponent data for sin(eta), cos(eta), the alpha jet, and the angles
/// psi_1..psi_{2n+1} (volume-form weights folded into the psi sine powers,
/// the Jacobian alpha^3 folded into alpha_pow; the overall sin(eta)cos(eta)
/// of the volume form is *not* included in eta_pows).
#[derive(Clone, Debug)]
pub struct CosphereTerm {
    pub coeff: Rat,
    pub eta_pows: (i32, i32),
    pub alpha_pow: i32,
    pub alphaj_pows: Vec<u16>,
    /// per-angle (cos, sin) exponents for psi_1..psi_{2n+1}
    pub psi_exponents: Vec<(u32, u32)>,
}

/// Substitute the cosphere parametrization into a homogeneous expression.
/// Q = 1 on the cosphere, u_2, u_3, u_4 each carry one factor of alpha, and
/// the volume form contributes alpha^3 sin(eta) cos(eta) and the
/// sin^{l-1}(psi_l) weights.
pub fn cosphere_reduce(e: &SymbolExpr, n: usize) -> Result<Vec<CosphereTerm>> {
    e.homogeneous_degree()?; // uniform degree required
    let nvars = 2 * n + 2;
    let mut out = Vec::with_capacity(e.terms.len());
    for (k, c) in &e.terms {
        if !c.im.is_zero() {
            return Err(RwsaError::NonRealTrace);
        }
        let beta: Vec<u32> = k.u.iter().map(|&x| x as u32).collect();
        let alpha_pow =
            k.alpha + beta[1] as i32 + beta[2] as i32 + beta[3] as i32 + 3;
        // psi_1 carries cos^{beta_1} sin^{beta_2}; psi_l (l >= 2) carries
        // cos^{beta_{l+1}} and sin^{l-1 + beta_1 + ... + beta_l}, the sine
        // power including the volume-form weight sin^{l-1}.
        let b = |i: usize| -> u32 { beta[i - 1] };
        let mut psi = Vec::with_capacity(2 * n + 1);
        psi.push((b(1), b(2)));
        for l in 2..=(2 * n + 1) {
            let sum: u32 = (1..=l).map(b).sum();
            let sin_e = (l as u32 - 1) + sum;
            let cos_e = b(l + 1);
            psi.push((cos_e, sin_e));
        }
        debug_assert_eq!(nvars, 2 * n + 2);
        out.push(CosphereTerm {
            coeff: c.re.clone(),
            eta_pows: (k.sin_eta_pow(), k.cos_eta_pow()),
            alpha_pow,
            alphaj_pows: k.alphaj.clone(),
            psi_exponents: psi,
        });
    }
    Ok(out)
}

/// A cosphere term after angular integration: rational weight, explicit
/// pi power, and the remaining eta exponents.
#[derive(Clone, Debug)]
pub struct WeightedTerm {
    pub coeff: Rat,
    pub pi_pow: i64,
    pub eta_pows: (i32, i32),
    pub alpha_pow: i32,
    pub alphaj_pows: Vec<u16>,
}

/// Integrate the psi angles with exact Wallis values; drops vanishing terms.
pub fn wallis_weight(terms: &[CosphereTerm]) -> Vec<WeightedTerm> {
    let mut out = Vec::new();
    'term: for t in &terms.to_vec() {
        let mut coeff = t.coeff.clone();
        let mut pi_pow = 0i64;
        for (l, &(ce, se)) in t.psi_exponents.iter().enumerate() {
            let (v, w) = wallis(ce, se, l == 0);
            if v.is_zero() {
                continue 'term;
            }
            coeff *= v;
            pi_pow += w;
        }
        out.push(WeightedTerm {
            coeff,
            pi_pow,
            eta_pows: t.eta_pows,
            alpha_pow: t.alpha_pow,
            alphaj_pows: t.alphaj_pows.clone(),
        });
    }
    out
}

/// Monomial in the scale factor jet.
pub type JetMonomial = (i32, Vec<u16>);

/// A Laurent combination sum of c * u0^p (1-u0)^q, keyed by (p, q).
#[derive(Default)]
struct LaurentU0 {
    terms: BTreeMap<(i32, i32), Rat>,
}

impl LaurentU0 {
    fn push(&mut self, p: i32, q: i32, c: Rat) {
        let e = self.terms.entry((p, q)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    /// Expand against the common denominator u0^P (1-u0)^Q into polynomial
    /// coefficients of u0.
    fn numerator_coeffs(&self) -> (Vec<Rat>, i32, i32) {
        if self.terms.is_empty() {
            return (vec![], 0, 0);
        }
        let pmin = self.terms.keys().map(|k| k.0).min().unwrap().min(0);
        let qmin = self.terms.keys().map(|k| k.1).min().unwrap().min(0);
        let pcap = -pmin;
        let qcap = -qmin;
        let deg: i32 = self
            .terms
            .keys()
            .map(|k| (k.0 + pcap) + (k.1 + qcap))
            .max()
            .unwrap();
        let mut coeffs = vec![Rat::zero(); deg as usize + 1];
        for ((p, q), c) in &self.terms {
            let pp = (p + pcap) as usize;
            let qq = (q + qcap) as u32;
            // c * u0^pp * (1-u0)^qq
            let mut binom = Rat::one();
            for j in 0..=qq {
                let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                coeffs[pp + j as usize] += c * &binom * sign;
                // next binomial coefficient C(qq, j+1)
                binom = binom * rat_int((qq - j) as i64) / rat_int(j as i64 + 1);
            }
        }
        (coeffs, pcap, qcap)
    }

    fn is_identically_zero(&self) -> bool {
        let (coeffs, _, _) = self.numerator_coeffs();
        coeffs.iter().all(|c| c.is_zero())
    }

    /// If the sum is a constant function of u0 on (0,1), return it.
    fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        let (coeffs, pcap, qcap) = self.numerator_coeffs();
        // candidate C from evaluation at u0 = 1/2: N(1/2) = C (1/2)^pcap (1/2)^qcap
        let half = rat(1, 2);
        let mut nval = Rat::zero();
        let mut pw = Rat::one();
        for c in &coeffs {
            nval += c * &pw;
            pw *= &half;
        }
        let c = nval * num::pow::pow(rat_int(2), (pcap + qcap) as usize);
        // verify N(u0) == C u0^pcap (1-u0)^qcap coefficientwise
        let mut want = vec![Rat::zero(); coeffs.len().max((pcap + qcap) as usize + 1)];
        let mut binom = Rat::one();
        for j in 0..=qcap as u32 {
            let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
            want[pcap as usize + j as usize] += &c * &binom * sign;
            binom = binom * rat_int((qcap as u32 - j) as i64) / rat_int(j as i64 + 1);
        }
        let mut got = coeffs;
        got.resize(want.len(), Rat::zero());
        if got == want {
            Some(c)
        } else {
            None
        }
    }
}

/// Verify eta-independence and return the constant per jet monomial.
/// Odd sin/cos eta parities must cancel exactly; the even class must be a
/// constant polynomial in u0.
pub fn eta_reduce(
    terms: &[WeightedTerm],
    _n: usize,
) -> Result<BTreeMap<JetMonomial, (Rat, i64)>> {
    #[derive(Default)]
    struct Group {
        classes: [LaurentU0; 4],
        pi_pow: Option<i64>,
    }
    let mut groups: BTreeMap<JetMonomial, Group> = BTreeMap::new();
    for t in terms {
        let key = (t.alpha_pow, t.alphaj_pows.clone());
        let g = groups.entry(key.clone()).or_default();
        match g.pi_pow {
            None => g.pi_pow = Some(t.pi_pow),
            Some(p) if p != t.pi_pow => {
                return Err(RwsaError::ResidualPi(p - t.pi_pow));
            }
            _ => {}
        }
        let (se, ce) = t.eta_pows;
        let (ds, dc) = (se.rem_euclid(2), ce.rem_euclid(2));
        let cls = (2 * ds + dc) as usize;
        g.classes[cls].push((se - ds) / 2, (ce - dc) / 2, t.coeff.clone());
    }
    let mut out = BTreeMap::new();
    for (key, g) in groups {
        for (cls, name) in [(1usize, "cos"), (2, "sin"), (3, "sin*cos")] {
            if !g.classes[cls].is_identically_zero() {
                return Err(RwsaError::EtaNotConstant {
                    monomial: format!("{:?}", key),
                    residual: format!("odd {name} class does not cancel"),
                });
            }
        }
        match g.classes[0].as_constant() {
            Some(c) => {
                if !c.is_zero() {
                    out.insert(key, (c, g.pi_pow.unwrap_or(0)));
                }
            }
            None => {
                return Err(RwsaError::EtaNotConstant {
                    monomial: format!("{:?}", key),
                    residual: "even class is a nonconstant polynomial in u0".into(),
                });
            }
        }
    }
    Ok(out)
}

/// Exact heat coefficient: Laurent polynomial in alpha, polynomial in the
/// derivative jet, rational coefficients, with the residual pi power checked
/// to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeatCoefficient {
    pub n: usize,
    pub poly: BTreeMap<JetMonomial, Rat>,
    pub pi_power: i64,
}

impl HeatCoefficient {
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .poly
            .iter()
            .map(|((a, js), c)| {
                serde_json::json!({
                    "coeff": c.to_string(),
                    "alpha_pow": a,
                    "alphaj_pows": js,
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "pi_power": self.pi_power,
            "terms": terms,
        })
    }

    /// Evaluate at a numeric jet (alpha, alpha_1, ..).
    pub fn eval_f64(&self, alpha: f64, alphaj: &[f64]) -> f64 {
        let mut acc = 0.0;
        for ((a, js), c) in &self.poly {
            let mut v = crate::rational::rat_to_f64(c) * alpha.powi(*a);
            for (j, &e) in js.iter().enumerate() {
                if e > 0 {
                    v *= alphaj[j].powi(e as i32);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn eval_exact(&self, alpha: &Rat, alphaj: &[Rat]) -> Result<Rat> {
        let mut acc = Rat::zero();
        for ((a, js), c) in &self.poly {
            let mut v = c.clone();
            let apow = num::pow::pow(alpha.clone(), a.unsigned_abs() as usize);
            if *a < 0 {
                if apow.is_zero() {
                    return Err(RwsaError::EvalDivisionByZero("alpha = 0"));
                }
                v /= apow;
            } else {
                v *= apow;
            }
            for (j, &e) in js.iter().enumerate() {
                if e > 0 {
                    v *= num::pow::pow(alphaj[j].clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl std::fmt::Display for HeatCoefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, js), c) in &self.poly {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            if *a != 0 {
                write!(f, "*alpha^{}", a)?;
            }
            for (j, &e) in js.iter().enumerate() {
                if e == 1 {
                    write!(f, "*alpha{}", j + 1)?;
                } else if e > 1 {
                    write!(f, "*alpha{}^{}", j + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// The parity-filtered trace of the order -2n-2 symbol: the integrand of
/// the Wodzicki residue, in u-coordinates.
pub fn residue_integrand(n: usize) -> Result<SymbolExpr> {
    let exp = expand(n)?;
    let tr = trace(&exp.orders[2 * n])?;
    let filtered = parity_filter(&tr);
    if !filtered.max_imag_abs_is_zero() {
        return Err(RwsaError::NonRealTrace);
    }
    Ok(filtered)
}

/// Full pipeline: expand -> trace -> parity filter -> cosphere -> Wallis ->
/// eta constancy -> prefactors 1/(2^3 pi^{1+n}) and the exact eta integral
/// 1/2. The result must be purely rational.
pub fn heat_coefficient(n: usize) -> Result<HeatCoefficient> {
    let filtered = residue_integrand(n)?;
    heat_coefficient_from_integrand(&filtered, n)
}

pub fn heat_coefficient_from_integrand(
    filtered: &SymbolExpr,
    n: usize,
) -> Result<HeatCoefficient> {
    match filtered.homogeneous_degree()? {
        Some(d) if d == -2 - 2 * n as i64 => {}
        Some(d) => return Err(RwsaError::MixedDegrees(d, -2 - 2 * n as i64)),
        None => {}
    }
    let cos = cosphere_reduce(filtered, n)?;
    let weighted = wallis_weight(&cos);
    let constants = eta_reduce(&weighted, n)?;
    let mut poly = BTreeMap::new();
    for (key, (c, pi_pow)) in constants {
        // eta integral 1/2, prefactor 1/(2^3 pi^{1+n})
        let total_pi = pi_pow - (1 + n as i64);
        if total_pi != 0 {
            return Err(RwsaError::ResidualPi(total_pi));
        }
        let v = c * rat(1, 16);
        if !v.is_zero() {
            poly.insert(key, v);
        }
    }
    Ok(HeatCoefficient {
        n,
        poly,
        pi_power: 0,
    })
}

// -- period form -----------------------------------------------------------------

/// Serializable description of the period integral: rational integrand,
/// volume form descriptor, semialgebraic domain, and the explicit constant.
#[derive(Serialize)]
pub struct PeriodForm {
    pub n: usize,
    /// coefficient of u_i^2 in the domain quadric, as text
    pub domain_quadric: Vec<String>,
    /// indices i with the box constraint 0 < u_i < 1
    pub domain_box: Vec<usize>,
    pub form_factor: String,
    /// signed coefficients of the interior-product volume form
    pub form_terms: Vec<String>,
    pub constant_rational: String,
    pub constant_pi_power: i64,
    pub integrand: serde_json::Value,
}

pub fn emit_period_form(n: usize) -> Result<PeriodForm> {
    let filtered = residue_integrand(n)?;
    let mut quadric = vec!["1".to_string(), "1".to_string(), "u0".into(), "1-u0".into()];
    for _ in 5..=2 * n + 2 {
        quadric.push("1".into());
    }
    let mut domain_box = vec![0, 1, 2];
    domain_box.extend(5..=2 * n + 2);
    let form_terms: Vec<String> = (1..=2 * n + 2)
        .map(|j| {
            let sign = if j % 2 == 1 { "+" } else { "-" };
            format!("{sign}u{j}")
        })
        .collect();
    // C = 2^{2n-3} pi^{-(n+1)}: 1/(2^3 pi^{1+n}) times 2^{2n} from unfolding
    // the box constraints of A_{2n+2} back to the full sphere.
    let c = if n >= 2 {
        rat_int(1 << (2 * n - 3))
    } else {
        rat(1, 2)
    };
    Ok(PeriodForm {
        n,
        domain_quadric: quadric,
        domain_box,
        form_factor: "1/2".into(),
        form_terms,
        constant_rational: c.to_string(),
        constant_pi_power: -(n as i64 + 1),
        integrand: filtered.to_json_terms(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::SymbolExpr;

    #[test]
    fn gamma_half_values() {
        assert_eq!(gamma_half(2), (rat_int(1), 0)); // G(1) = 1
        assert_eq!(gamma_half(4), (rat_int(1), 0)); // G(2) = 1
        assert_eq!(gamma_half(6), (rat_int(2), 0)); // G(3) = 2
        assert_eq!(gamma_half(8), (rat_int(6), 0)); // G(4) = 6
        assert_eq!(gamma_half(1), (rat_int(1), 1)); // G(1/2) = sqrt(pi)
        assert_eq!(gamma_half(3), (rat(1, 2), 1)); // G(3/2) = sqrt(pi)/2
        assert_eq!(gamma_half(5), (rat(3, 4), 1)); // G(5/2) = 3 sqrt(pi)/4
    }

    #[test]
    fn wallis_examples() {
        // int_0^{2pi} cos^2 = pi
        assert_eq!(wallis(2, 0, true), (rat_int(1), 1));
        // odd power over the full circle vanishes
        assert_eq!(wallis(1, 0, true).0, Rat::zero());
        // int_0^pi sin^4 = 3 pi / 8
        assert_eq!(wallis(0, 4, false), (rat(3, 8), 1));
        // int_0^pi sin = 2
        assert_eq!(wallis(0, 1, false), (rat_int(2), 0));
        // int_0^pi sin^2 cos^2 = pi/8
        assert_eq!(wallis(2, 2, false), (rat(1, 8), 1));
        // int_0^pi sin^3 = 4/3
        assert_eq!(wallis(0, 3, false), (rat(4, 3), 0));
        // int_0^{2pi} 1 = 2 pi
        assert_eq!(wallis(0, 0, true), (rat_int(2), 1));
        // int_0^pi cos^1 sin^k = 0
        assert_eq!(wallis(1, 5, false).0, Rat::zero());
    }

    #[test]
    fn parity_filter_drops_odd() {
        let n = 1;
        let odd = SymbolExpr::var_u(n, 1, 1)
            .mul(&SymbolExpr::var_u(n, 2, 1))
            .unwrap()
            .mul(&SymbolExpr::inv_q(n, 3))
            .unwrap();
        let even = SymbolExpr::var_u(n, 1, 2)
            .mul(&SymbolExpr::var_u(n, 2, 2))
            .unwrap()
            .mul(&SymbolExpr::inv_q(n, 4))
            .unwrap();
        let sum = odd.add(&even).unwrap();
        assert_eq!(parity_filter(&sum), even);
    }

    #[test]
    fn eta_reduce_constant_via_pythagoras() {
        // sin^2 X + cos^2 X -> X
        let x = rat(7, 3);
        let mk = |eta: (i32, i32)| WeightedTerm {
            coeff: x.clone(),
            pi_pow: 2,
            eta_pows: eta,
            alpha_pow: 1,
            alphaj_pows: vec![0, 0],
        };
        let out = eta_reduce(&[mk((2, 0)), mk((0, 2))], 1).unwrap();
        assert_eq!(out.len(), 1);
        let (c, p) = &out[&(1, vec![0, 0])];
        assert_eq!(c, &x);
        assert_eq!(*p, 2);
    }

    #[test]
    fn eta_reduce_rejects_corruption() {
        let mk = |c: Rat, eta: (i32, i32)| WeightedTerm {
            coeff: c,
            pi_pow: 2,
            eta_pows: eta,
            alpha_pow: 0,
            alphaj_pows: vec![0, 0],
        };
        // sin^2 + (1 + eps) cos^2 is not constant
        let r = eta_reduce(
            &[mk(rat_int(1), (2, 0)), mk(rat(101, 100), (0, 2))],
            1,
        );
        assert!(matches!(r, Err(RwsaError::EtaNotConstant { .. })));
        // a lone odd term must be rejected too
        let r = eta_reduce(&[mk(rat_int(1), (1, 0))], 1);
        assert!(matches!(r, Err(RwsaError::EtaNotConstant { .. })));
    }

    #[test]
    fn eta_reduce_cancels_odd_pairs() {
        let mk = |c: Rat, eta: (i32, i32)| WeightedTerm {
            coeff: c,
            pi_pow: 2,
            eta_pows: eta,
            alpha_pow: 0,
            alphaj_pows: vec![0, 0],
        };
        // s^3 c - s c + s c^3 = s c (s^2 - 1 + c^2) = 0
        let out = eta_reduce(
            &[
                mk(rat_int(1), (3, 1)),
                mk(rat_int(-1), (1, 1)),
                mk(rat_int(1), (1, 3)),
            ],
            1,
        )
        .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn laurent_constant_detection() {
        let mut l = LaurentU0::default();
        // 1/u0 - (1-u0)/u0 = 1
        l.push(-1, 0, rat_int(1));
        l.push(-1, 1, rat_int(-1));
        assert_eq!(l.as_constant(), Some(rat_int(1)));
        let mut l2 = LaurentU0::default();
        l2.push(1, 0, rat_int(1));
        assert_eq!(l2.as_constant(), None);
    }

    #[test]
    fn cosphere_of_inverse_q() {
        // 1/Q reduces to the pure volume weights: alpha^3, all beta = 0
        let terms = cosphere_reduce(&SymbolExpr::inv_q(1, 1), 1).unwrap();
        assert_eq!(terms.len(), 1);
        let t = &terms[0];
        assert_eq!(t.coeff, rat_int(1));
        assert_eq!(t.alpha_pow, 3);
        assert_eq!(t.eta_pows, (0, 0));
        assert_eq!(t.psi_exponents, vec![(0, 0), (0, 1), (0, 2)]);
    }

    #[test]
    fn cosphere_of_u1_squared() {
        // u1^2/Q^2: psi pattern cos^2 psi1, sin^2 psi2, sin^2 psi3 on top of
        // the volume weights
        let e = SymbolExpr::var_u(1, 1, 2)
            .mul(&SymbolExpr::inv_q(1, 2))
            .unwrap();
        let terms = cosphere_reduce(&e, 1).unwrap();
        assert_eq!(terms.len(), 1);
        let t = &terms[0];
        assert_eq!(t.psi_exponents, vec![(2, 0), (0, 3), (0, 4)]);
        assert_eq!(t.alpha_pow, 3);
    }

    #[test]
    fn mixed_degree_rejected() {
        let e = SymbolExpr::var_u(1, 1, 2)
            .add(&SymbolExpr::var_u(1, 2, 1))
            .unwrap();
        assert!(cosphere_reduce(&e, 1).is_err());
    }
}
