use super::field::{field, CycField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

/// An element of ℚ(ζ_L), stored as `num / den` with `num` a residue mod Φ_L.
///
/// Canonical form: `den > 0`, gcd(den, num...) = 1, and zero has `den = 1`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(l: u32) -> CycNum {
        let f = field(l);
        let d = f.degree();
        CycNum {
            field: f,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(l: u32) -> CycNum {
        Self::from_int(l, 1)
    }

    pub fn from_int(l: u32, k: i64) -> CycNum {
        let mut z = Self::zero(l);
        z.num[0] = BigInt::from(k);
        z
    }

    pub fn from_ratio(l: u32, n: i64, d: i64) -> CycNum {
        Self::from_rational(l, &BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(l: u32, r: &BigRational) -> CycNum {
        let mut z = Self::zero(l);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// Builds an element from rational coordinates in the power basis 1, ζ, …, ζ^{φ(L)−1}.
    pub fn from_coefficients(l: u32, coeffs: &[BigRational]) -> CycNum {
        let f = field(l);
        assert_eq!(coeffs.len(), f.degree(), "coefficient count must equal deg Φ_L");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut z = CycNum { field: f, num, den };
        z.normalize();
        z
    }

    /// ζ_L^k.
    pub fn root_of_unity(l: u32, k: i64) -> CycNum {
        let f = field(l);
        let num = f.power(k).to_vec();
        CycNum {
            field: f,
            num,
            den: BigInt::one(),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Rational coordinates in the power basis.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-expresses the element at conductor `l2`, which must be a multiple of the current one.
    pub fn lift(&self, l2: u32) -> CycNum {
        let l = self.conductor();
        if l == l2 {
            return self.clone();
        }
        assert!(l2 % l == 0, "cannot lift conductor {l} to {l2}");
        let r = (l2 / l) as i64;
        let f = field(l2);
        let mut num = vec![BigInt::zero(); f.degree()];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, p) in f.power(k as i64 * r).iter().enumerate() {
                if !p.is_zero() {
                    num[i] += c * p;
                }
            }
        }
        let mut z = CycNum {
            field: f,
            num,
            den: self.den.clone(),
        };
        z.normalize();
        z
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<CycNum> {
        if self.is_zero() {
            return None;
        }
        let l = self.conductor();
        let modulus: Vec<BigRational> = self
            .field
            .minimal_polynomial()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let s = rational_poly_inverse(&a, &modulus);
        let mut coeffs = vec![BigRational::zero(); self.field.degree()];
        for (i, c) in s.into_iter().enumerate() {
            coeffs[i] = c * BigRational::from_integer(self.den.clone());
        }
        Some(CycNum::from_coefficients(l, &coeffs))
    }

    pub fn pow(&self, k: i64) -> CycNum {
        let mut base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = CycNum::one(self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                *c /= &g;
            }
        }
    }

    fn same_field(a: &CycNum, b: &CycNum) -> bool {
        Arc::ptr_eq(&a.field, &b.field) || a.conductor() == b.conductor()
    }

    fn add_impl(&self, other: &CycNum, negate: bool) -> CycNum {
        if !Self::same_field(self, other) {
            let (a, b) = lift_to_common_conductor(self, other);
            return a.add_impl(&b, negate);
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let mut out = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            CycNum {
                field: self.field.clone(),
                num,
                den: self.den.clone(),
            }
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let x = a * &other.den;
                    let y = b * &self.den;
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            CycNum {
                field: self.field.clone(),
                num,
                den: &self.den * &other.den,
            }
        };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &CycNum) -> CycNum {
        if !Self::same_field(self, other) {
            let (a, b) = lift_to_common_conductor(self, other);
            return a.mul_impl(&b);
        }
        let deg = self.num.len();
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(self.conductor());
        }
        if deg == 1 {
            let mut out = CycNum {
                field: self.field.clone(),
                num: vec![&self.num[0] * &other.num[0]],
                den: &self.den * &other.den,
            };
            out.normalize();
            return out;
        }
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..deg].to_vec();
        for (k, c) in prod.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in self.field.power(k as i64).iter().enumerate() {
                if !p.is_zero() {
                    num[i] += c * p;
                }
            }
        }
        let mut out = CycNum {
            field: self.field.clone(),
            num,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }
}

/// Both inputs re-expressed at conductor lcm(L_a, L_b).
pub fn lift_to_common_conductor(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
    let l = (a.conductor() as u64).lcm(&(b.conductor() as u64)) as u32;
    (a.lift(l), b.lift(l))
}

/// Inverse of `a` modulo the irreducible `m` over ℚ, via the extended Euclidean algorithm.
fn rational_poly_inverse(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }
    fn sub_scaled_shift(p: &mut Vec<BigRational>, q: &[BigRational], c: &BigRational, shift: usize) {
        if p.len() < q.len() + shift {
            p.resize(q.len() + shift, BigRational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            p[i + shift] -= c * qi;
        }
    }
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        // r0 = q·r1 + r, s0 − q·s1
        let mut rem = r0.clone();
        let mut s_new = s0.clone();
        let d1 = r1.len() - 1;
        let lead = r1[d1].clone();
        while rem.len() > d1 && !(rem.len() == 1 && rem[0].is_zero()) {
            let dr = rem.len() - 1;
            let c = &rem[dr] / &lead;
            let shift = dr - d1;
            sub_scaled_shift(&mut rem, &r1, &c, shift);
            sub_scaled_shift(&mut s_new, &s1, &c, shift);
            rem.truncate(dr);
            rem = trim(rem);
            if rem.is_empty() {
                rem.push(BigRational::zero());
            }
        }
        r0 = std::mem::replace(&mut r1, trim(rem));
        s0 = std::mem::replace(&mut s1, trim(s_new));
    }
    // r0 is a nonzero constant since m is irreducible and a ≢ 0
    let c = r0[0].clone();
    let deg = m.len() - 1;
    let mut out: Vec<BigRational> = s0.into_iter().map(|x| x / &c).collect();
    // s0 already has degree < deg(m); pad
    out.resize(deg.max(out.len()), BigRational::zero());
    out.truncate(deg);
    out
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.conductor() == other.conductor() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = lift_to_common_conductor(self, other);
            a == b
        }
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let l = self.conductor();
        let mut first = true;
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "ζ{l}^{k}")?,
                (_, false) => write!(f, "{a}*ζ{l}^{k}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &'a CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| a.mul_impl(b));
forward_binop!(Div, div, |a: &CycNum, b: &CycNum| a
    .mul_impl(&b.inv().expect("division by zero")));

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = self.mul_impl(rhs);
    }
}
