//! Exact arithmetic on integer combinations of `m`-th roots of unity.
//!
//! A value `sum_k c_k zeta^k` with `zeta = exp(2 pi i / m)` is zero exactly
//! when the polynomial `sum_k c_k x^k` is divisible by the cyclotomic
//! polynomial `Phi_m`, the minimal polynomial of `zeta` over the rationals.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Integer polynomial, coefficients from low to high degree.
type Poly = Vec<i64>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Remainder of `a` modulo a monic divisor, and the quotient.
fn divmod_monic(a: &[i64], divisor: &[i64]) -> (Poly, Poly) {
    debug_assert_eq!(*divisor.last().unwrap(), 1);
    let mut rem = a.to_vec();
    trim(&mut rem);
    let dd = divisor.len() - 1;
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0; rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let lead = rem[shift + dd];
        if lead == 0 {
            continue;
        }
        quot[shift] = lead;
        for (i, &d) in divisor.iter().enumerate() {
            rem[shift + i] -= lead * d;
        }
    }
    rem.truncate(dd.max(1));
    trim(&mut rem);
    (quot, rem)
}

/// `Phi_m`, computed as `(x^m - 1) / prod_{d | m, d < m} Phi_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    let m = m as usize;
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = divmod_monic(&num, &cyclotomic_polynomial(d as u32));
            debug_assert!(r.iter().all(|&c| c == 0));
            num = q;
        }
    }
    num
}

/// Zero tester for sums of `m`-th roots of unity.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: u32,
    phi: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Self {
        CyclotomicField {
            order,
            phi: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Is `sum_k coeffs[k] zeta^k` zero? Exact.
    pub fn is_zero(&self, coeffs: &[i64]) -> bool {
        let (_, r) = divmod_monic(coeffs, &self.phi);
        r.iter().all(|&c| c == 0)
    }
}

/// Exact value `sum_k coeffs[k] * exp(2 pi i k / order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    pub order: u32,
    pub coeffs: Vec<i64>,
}

impl RootSum {
    /// Sum of `zeta^e` over the given exponents.
    pub fn from_exponents(order: u32, exps: impl IntoIterator<Item = u32>) -> Self {
        let mut coeffs = vec![0; order as usize];
        for e in exps {
            coeffs[(e % order) as usize] += 1;
        }
        RootSum { order, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        CyclotomicField::new(self.order).is_zero(&self.coeffs)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| Complex64::from_polar(c as f64, 2.0 * PI * k as f64 / self.order as f64))
            .sum()
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
