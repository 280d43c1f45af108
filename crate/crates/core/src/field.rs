//! Finite fields `F_{p^k}` with table-driven arithmetic.
//!
//! An element is stored as the integer `Σ c_i p^i` built from its residue list
//! `c_0, …, c_{k-1}` (coefficients of `1, x, …, x^{k-1}` modulo the defining
//! polynomial). Multiplication in extension fields goes through discrete
//! log/exp tables over a primitive element; addition through a table when the
//! field is small and digit-wise otherwise.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

const ADD_TABLE_MAX: u32 = 256;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    /// The packed integer encoding; only meaningful together with its field.
    pub fn raw(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// JSON descriptor `{p, k, modulus}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial, low degree first, length `k + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A handle to a finite field; cheap to clone and safe to share.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over Z/p, low degree first, no trailing zeros (zero polynomial is empty).
fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let t = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_trim(out.into_iter().map(|x| x as u32).collect())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    out
}

fn pack(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Irreducibility by trial division over every monic polynomial of degree `1..=k/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() as u32 - 1;
    if k <= 1 {
        return k == 1;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d);
        for low in 0..count {
            let mut divisor = digits(low as u32, p, d);
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The smallest monic irreducible polynomial of degree `k`, ordering candidates by
/// their lower coefficients read from `x^{k-1}` down to the constant term.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for low in 0..count {
        let mut m = digits(low as u32, p, k);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FiniteField {
    /// Builds `F_{p^k}`. Without a modulus the default (smallest) irreducible is used.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected: k, got: m });
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus(m));
                }
                m
            }
            None => default_modulus(p, k),
        };
        let q = order as u32;
        let (exp, log) = if k == 1 {
            (Vec::new(), Vec::new())
        } else {
            Self::log_tables(p, k, q, &modulus)
        };
        let add = (k > 1 && q <= ADD_TABLE_MAX).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, k);
                for b in 0..q {
                    let db = digits(b, p, k);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = pack(&s, p);
                }
            }
            t
        });
        Ok(FiniteField(Arc::new(Inner { p, k, q, modulus, exp, log, add })))
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        Self::new(d.p, d.k, d.modulus.clone())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.0.p, k: self.0.k, modulus: Some(self.0.modulus.clone()) }
    }

    fn log_tables(p: u32, k: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
        // Search for a primitive element by brute-force order computation.
        for cand in 2..q {
            let g = poly_trim(digits(cand, p, k));
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut cur = vec![1u32];
            let mut ok = true;
            for i in 0..(q - 1) {
                let packed = {
                    let mut c = cur.clone();
                    c.resize(k as usize, 0);
                    pack(&c, p)
                };
                if i > 0 && packed == 1 {
                    ok = false;
                    break;
                }
                exp.push(packed);
                cur = poly_rem(&poly_mul(&cur, &g, p), modulus, p);
            }
            if ok {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                return (exp, log);
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    pub fn one(&self) -> Scalar {
        Scalar::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Scalar> {
        if coeffs.len() != self.0.k as usize {
            return Err(Error::DimensionMismatch(format!(
                "scalar needs {} residues, got {}",
                self.0.k,
                coeffs.len()
            )));
        }
        if let Some(&r) = coeffs.iter().find(|&&c| c >= self.0.p) {
            return Err(Error::BadResidue { residue: r, p: self.0.p });
        }
        Ok(Scalar(pack(coeffs, self.0.p)))
    }

    pub fn coeffs(&self, s: Scalar) -> Vec<u32> {
        digits(s.0, self.0.p, self.0.k)
    }

    /// Element with the given packed encoding (`0..order`).
    pub fn element(&self, raw: u32) -> Scalar {
        debug_assert!(raw < self.0.q);
        Scalar(raw)
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.0.q).map(Scalar)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> Scalar {
        if self.0.k > 1 {
            return Scalar(self.0.exp[1]);
        }
        let p = self.0.p;
        if p == 2 {
            return Scalar::ONE;
        }
        (1..p)
            .map(Scalar)
            .find(|&g| (1..p - 1).all(|e| self.pow(g, e as u64) != Scalar::ONE))
            .expect("prime field has a primitive root")
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let f = &*self.0;
        if f.k == 1 {
            let s = a.0 + b.0;
            return Scalar(if s >= f.p { s - f.p } else { s });
        }
        if let Some(t) = &f.add {
            return Scalar(t[(a.0 * f.q + b.0) as usize]);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..f.k {
            out += ((x % f.p + y % f.p) % f.p) * place;
            x /= f.p;
            y /= f.p;
            place *= f.p;
        }
        Scalar(out)
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        let f = &*self.0;
        if f.k == 1 {
            return Scalar(if a.0 == 0 { 0 } else { f.p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..f.k {
            out += ((f.p - x % f.p) % f.p) * place;
            x /= f.p;
            place *= f.p;
        }
        Scalar(out)
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        let f = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return Scalar::ZERO;
        }
        if f.k == 1 {
            return Scalar(((a.0 as u64 * b.0 as u64) % f.p as u64) as u32);
        }
        let n = f.q - 1;
        let e = f.log[a.0 as usize] + f.log[b.0 as usize];
        Scalar(f.exp[(if e >= n { e - n } else { e }) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        let f = &*self.0;
        if a.0 == 0 {
            return None;
        }
        if f.k == 1 {
            return Some(Scalar(inv_mod(a.0, f.p)));
        }
        let n = f.q - 1;
        let l = f.log[a.0 as usize];
        Some(Scalar(f.exp[((n - l) % n) as usize]))
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Scalar) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut n = 1;
        while x != Scalar::ONE {
            x = self.mul(x, a);
            n += 1;
        }
        Some(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f2() {
        let f = FiniteField::new(2, 1, None).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(Scalar::ONE, Scalar::ONE), Scalar::ZERO);
    }

    #[test]
    fn f4_default_modulus() {
        let f = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn f9_default_modulus_is_x2_plus_1() {
        let f = FiniteField::new(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(FiniteField::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(FiniteField::new(1, 1, None).is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over F_2
        let err = FiniteField::new(2, 2, Some(vec![1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        let err = FiniteField::new(2, 2, Some(vec![1, 1, 0])).unwrap_err();
        assert!(matches!(err, Error::BadModulus { .. }));
    }

    #[test]
    fn explicit_modulus_accepted() {
        // x^2 + x + 2 is irreducible over F_3
        let f = FiniteField::new(3, 2, Some(vec![2, 1, 1])).unwrap();
        assert_eq!(f.order(), 9);
        assert_ne!(f, FiniteField::new(3, 2, None).unwrap());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (13, 1)] {
            let f = FiniteField::new(p, k, None).unwrap();
            assert!(f.order() <= 16);
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Scalar::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Scalar::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_generates() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 5)] {
            let f = FiniteField::new(p, k, None).unwrap();
            assert_eq!(f.mult_order(f.primitive()), Some(f.order() - 1));
        }
    }

    #[test]
    fn large_field_digitwise_addition_matches_polynomials() {
        let f = FiniteField::new(3, 6, None).unwrap();
        assert!(f.order() > ADD_TABLE_MAX);
        let a = f.from_coeffs(&[1, 2, 0, 1, 2, 2]).unwrap();
        let b = f.from_coeffs(&[2, 2, 1, 0, 1, 2]).unwrap();
        assert_eq!(f.coeffs(f.add(a, b)), vec![0, 1, 1, 1, 0, 1]);
        assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn too_large_rejected() {
        assert!(matches!(FiniteField::new(2, 17, None), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn coeff_validation() {
        let f = FiniteField::new(3, 2, None).unwrap();
        assert!(f.from_coeffs(&[3, 0]).is_err());
        assert!(f.from_coeffs(&[1]).is_err());
        let s = f.from_coeffs(&[2, 1]).unwrap();
        assert_eq!(f.coeffs(s), vec![2, 1]);
    }
}
