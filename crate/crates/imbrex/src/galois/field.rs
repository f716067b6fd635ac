//! Exact arithmetic in GF(p^k) for small prime powers.
//!
//! Elements are integers `0..p^k` whose base-`p` digits are the coefficients
//! of a polynomial over GF(p); multiplication reduces modulo a fixed monic
//! irreducible polynomial. Addition and multiplication are table lookups,
//! so every field operation is O(1) after construction.
//!
//! The modulus is canonical: the monic irreducible polynomial of degree `k`
//! whose lower-coefficient encoding is smallest. For GF(4) that is
//! x^2 + x + 1, for GF(8) it is x^3 + x + 1, for GF(9) it is x^2 + 1.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported bound {1}")]
    TooLarge(u64, u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("conjugation requires an even extension degree, got {0}")]
    OddDegreeConjugation(u32),
    #[error("element {0} out of range for a field of order {1}")]
    BadElement(u32, u32),
}

/// Largest supported field order; keeps the add/mul tables tiny.
const MAX_ORDER: u64 = 256;

/// A finite field GF(p^k) with precomputed operation tables.
#[derive(Clone)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    conj: Option<Vec<u32>>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Gf {}

impl std::fmt::Debug for Gf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p) as coefficient vectors, lowest degree first.
mod poly {
    pub fn trim(c: &mut Vec<u32>) {
        while c.last() == Some(&0) {
            c.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let factor = r[dr] * lead_inv % p;
            let shift = dr - dm;
            for (i, &mc) in m.iter().enumerate() {
                let sub = factor * mc % p;
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is a small prime; brute force is fine.
        (1..p).find(|&x| a * x % p == 1).expect("unit in GF(p)")
    }
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(mut e: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(e % p);
        e /= p;
    }
    out
}

/// True when `m` (monic, degree >= 1) has no monic divisor of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for enc in 0..count {
            let mut div = decode(enc as u32, p, d as u32);
            div.push(1); // monic of degree d
            if poly::rem(m, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn canonical_modulus(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1]; // x; unused in degree-1 fields
    }
    let count = (p as u64).pow(k);
    for enc in 0..count {
        let mut m = decode(enc as u32, p, k);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Gf {
    /// Build GF(p^k) with the canonical modulus.
    pub fn new(p: u32, k: u32) -> Result<Gf, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q64 = (p as u64).pow(k);
        if q64 > MAX_ORDER {
            return Err(FieldError::TooLarge(q64, MAX_ORDER));
        }
        let q = q64 as u32;
        let modulus = canonical_modulus(p, k);

        // Addition and negation are digit-wise mod p.
        let mut add = vec![0u32; (q * q) as usize];
        let mut neg = vec![0u32; q as usize];
        for a in 0..q {
            let da = decode(a, p, k);
            let neg_digits: Vec<u32> = da.iter().map(|&c| (p - c) % p).collect();
            neg[a as usize] = encode(&neg_digits, p);
            for b in a..q {
                let db = decode(b, p, k);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let e = encode(&sum, p);
                add[(a * q + b) as usize] = e;
                add[(b * q + a) as usize] = e;
            }
        }

        // Multiplication via a generator of the cyclic group of units.
        let raw_mul = |a: u32, b: u32| -> u32 {
            let prod = poly::mul(&decode(a, p, k), &decode(b, p, k), p);
            let red = poly::rem(&prod, &modulus, p);
            let mut digits = red;
            digits.resize(k as usize, 0);
            encode(&digits, p)
        };
        let pow = |mut base: u32, mut e: u32| -> u32 {
            let mut acc = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    acc = raw_mul(acc, base);
                }
                base = raw_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let factors = prime_factors(q - 1);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&f| q == 2 || pow(g, (q - 1) / f) != 1))
            .expect("the unit group of a finite field is cyclic");

        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = raw_mul(acc, generator);
        }

        let conj = if k.is_multiple_of(2) {
            let e = (p as u64).pow(k / 2) as u32;
            Some((0..q).map(|a| pow(a, e)).collect())
        } else {
            None
        };

        Ok(Gf {
            p,
            k,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
            conj,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Field order p^k.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, lowest degree first (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn check_element(&self, a: u32) -> Result<(), FieldError> {
        if a < self.q {
            Ok(())
        } else {
            Err(FieldError::BadElement(a, self.q))
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = self.log[a as usize] + self.log[b as usize];
        self.exp[(l % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The involutory automorphism x -> x^(p^(k/2)); defined for even k.
    pub fn conj(&self, a: u32) -> Result<u32, FieldError> {
        match &self.conj {
            Some(t) => Ok(t[a as usize]),
            None => Err(FieldError::OddDegreeConjugation(self.k)),
        }
    }

    pub fn has_conj(&self) -> bool {
        self.conj.is_some()
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

/// One-shot dispatch over the four primitive field operations.
pub fn field_op(f: &Gf, op: FieldOp, a: u32, b: u32) -> Result<u32, FieldError> {
    f.check_element(a)?;
    match op {
        FieldOp::Add => {
            f.check_element(b)?;
            Ok(f.add(a, b))
        }
        FieldOp::Mul => {
            f.check_element(b)?;
            Ok(f.mul(a, b))
        }
        FieldOp::Inv => f.inv(a),
        FieldOp::Frob => f.conj(a),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Frob,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_addition_is_xor() {
        let f = Gf::new(2, 1).unwrap();
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.add(0, 1), 1);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_modulus_and_products() {
        let f = Gf::new(2, 2).unwrap();
        // x^2 + x + 1
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn gf4_frobenius_is_involutory() {
        let f = Gf::new(2, 2).unwrap();
        assert_eq!(f.conj(2).unwrap(), 3);
        for a in f.elements() {
            assert_eq!(f.conj(f.conj(a).unwrap()).unwrap(), a);
        }
        // conjugation is an automorphism
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(
                    f.conj(f.mul(a, b)).unwrap(),
                    f.mul(f.conj(a).unwrap(), f.conj(b).unwrap())
                );
            }
        }
    }

    #[test]
    fn field_axioms_small_orders() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 4)] {
            let f = Gf::new(p, k).unwrap();
            let q = f.order();
            assert_eq!(q, p.pow(k));
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = Gf::new(2, 2).unwrap();
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
        assert_eq!(field_op(&f, FieldOp::Inv, 0, 0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn field_op_dispatch() {
        let f = Gf::new(2, 2).unwrap();
        assert_eq!(field_op(&f, FieldOp::Add, 2, 3), Ok(1));
        assert_eq!(field_op(&f, FieldOp::Mul, 2, 2), Ok(3));
        assert_eq!(field_op(&f, FieldOp::Inv, 2, 0), Ok(3));
        assert_eq!(field_op(&f, FieldOp::Frob, 2, 0), Ok(3));
        assert!(matches!(
            field_op(&f, FieldOp::Add, 7, 0),
            Err(FieldError::BadElement(7, 4))
        ));
    }

    #[test]
    fn conj_requires_even_degree() {
        let f = Gf::new(3, 1).unwrap();
        assert!(matches!(f.conj(1), Err(FieldError::OddDegreeConjugation(1))));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Gf::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Gf::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
        assert!(matches!(Gf::new(2, 9), Err(FieldError::TooLarge(512, _))));
    }
}
