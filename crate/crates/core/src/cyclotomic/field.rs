//! Cyclotomic polynomials and the per-conductor reduction tables.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Reduction data for ℚ(ζ_L) = ℚ[x]/Φ_L(x).
#[derive(Debug)]
pub struct CycField {
    conductor: u32,
    phi: Vec<BigInt>,
    /// `powers[k]` is x^k mod Φ_L for 0 ≤ k < L, always with integer coefficients.
    powers: Vec<Vec<BigInt>>,
}

impl CycField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree of Φ_L, the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Coefficients of Φ_L, constant term first.
    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    /// x^k mod Φ_L, for any integer k.
    pub fn power(&self, k: i64) -> &[BigInt] {
        let l = self.conductor as i64;
        &self.powers[k.rem_euclid(l) as usize]
    }

    fn build(conductor: u32) -> CycField {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..conductor {
            powers.push(cur.clone());
            // multiply by x, then fold the x^deg term back using the monic Φ_L
            let top = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &phi[i];
                }
            }
        }
        CycField {
            conductor,
            phi,
            powers,
        }
    }
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<CycField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared reduction data for conductor `l` (l ≥ 1).
pub fn field(l: u32) -> Arc<CycField> {
    assert!(l >= 1, "conductor must be positive");
    if let Some(f) = field_cache().lock().unwrap().get(&l) {
        return f.clone();
    }
    let built = Arc::new(CycField::build(l));
    field_cache()
        .lock()
        .unwrap()
        .entry(l)
        .or_insert(built)
        .clone()
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_L as integer coefficients, constant term first, obtained by dividing
/// x^L − 1 by Φ_d for every proper divisor d of L.
pub fn cyclotomic_polynomial(l: u32) -> Vec<BigInt> {
    assert!(l >= 1);
    if let Some(p) = poly_cache().lock().unwrap().get(&l) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); l as usize + 1];
    num[0] = -BigInt::one();
    num[l as usize] = BigInt::one();
    for d in 1..l {
        if l % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &div);
        }
    }
    poly_cache().lock().unwrap().insert(l, num.clone());
    num
}

/// Quotient of `a` by the monic polynomial `b`; panics if the division is not exact.
pub fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut rem = a.to_vec();
    if rem.len() <= db {
        assert!(rem.iter().all(Zero::is_zero), "inexact division");
        return vec![BigInt::zero()];
    }
    let dq = rem.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact division");
    q
}

/// Integer polynomial product, constant term first.
#[cfg(test)]
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}
