//! Small finite fields GF(q), q ≤ 16, driven by full addition and
//! multiplication tables.
//!
//! An element is stored as the integer `Σ c_k p^k` where `c_0 + c_1 x + …`
//! is its residue modulo the defining polynomial.

use crate::error::{Error, Result};
use crate::jantzen::is_prime;

pub type Elem = u8;

pub const MAX_FIELD_SIZE: u64 = 16;

/// Defining polynomials for the non-prime fields, little-endian, monic.
fn conway_modulus(p: u64, t: u32) -> Option<Vec<u8>> {
    Some(match (p, t) {
        (2, 2) => vec![1, 1, 1],
        (2, 3) => vec![1, 1, 0, 1],
        (3, 2) => vec![2, 2, 1],
        (2, 4) => vec![1, 1, 0, 0, 1],
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    t: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// Remainder of `a` modulo the monic `m`, coefficients mod `p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.iter().map(|c| c % p).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (k, &mk) in m[..dm].iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - lead * mk % p) % p;
            }
        }
    }
    r
}

/// No monic factor of degree `1..=deg/2`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f: Vec<u64> = (0..d).map(|k| low / p.pow(k as u32) % p).collect();
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, t: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 {
            return Err(Error::UnsupportedField(format!("{p}^0")));
        }
        let q = p
            .checked_pow(t)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::UnsupportedField(format!("{p}^{t} exceeds {MAX_FIELD_SIZE}")))?;
        let modulus = if t == 1 {
            vec![0, 1]
        } else {
            conway_modulus(p, t)
                .ok_or_else(|| Error::UnsupportedField(format!("no modulus for {p}^{t}")))?
        };
        let m64: Vec<u64> = modulus.iter().map(|&c| u64::from(c)).collect();
        if !is_irreducible(&m64, p) {
            return Err(Error::UnsupportedField(format!("modulus for {p}^{t} is reducible")));
        }
        let q = q as usize;
        let digits = |x: usize| -> Vec<u64> {
            (0..t).map(|k| (x as u64 / p.pow(k)) % p).collect()
        };
        let encode = |c: &[u64]| -> Elem {
            c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as Elem
        };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                let mut prod = vec![0u64; 2 * t as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem(&prod, &m64, p);
                r.resize(t as usize, 0);
                mul[a * q + b] = encode(&r);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| Error::UnsupportedField(format!("{a} has no inverse")))?
                as Elem;
        }
        Ok(FiniteField {
            p,
            t,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Little-endian coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        let mut acc = 1;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIZES: [(u64, u32); 10] = [
        (2, 1),
        (3, 1),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (11, 1),
        (13, 1),
        (2, 4),
    ];

    #[test]
    fn field_axioms_and_frobenius() {
        for (p, t) in SIZES {
            let f = FiniteField::new(p, t).unwrap();
            assert_eq!(f.q() as u64, p.pow(t));
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, f.q() as u64 - 1), 1, "q={}", f.q());
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let frob = |x| f.pow(x, p);
                    assert_eq!(frob(f.add(a, b)), f.add(frob(a), frob(b)));
                    assert_eq!(frob(f.mul(a, b)), f.mul(frob(a), frob(b)));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_cyclic_with_generator_x() {
        // x is primitive for each tabulated modulus
        for (p, t) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let f = FiniteField::new(p, t).unwrap();
            let x = p as Elem;
            let mut seen = std::collections::HashSet::new();
            let mut acc = 1;
            for _ in 0..f.q() - 1 {
                seen.insert(acc);
                acc = f.mul(acc, x);
            }
            assert_eq!(seen.len(), f.q() - 1);
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert_eq!(FiniteField::new(4, 1), Err(Error::NotPrime(4)));
        assert!(FiniteField::new(5, 2).is_err());
        assert!(FiniteField::new(2, 5).is_err());
        assert!(FiniteField::new(17, 1).is_err());
        assert!(FiniteField::new(2, 0).is_err());
    }

    #[test]
    fn irreducibility_check() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[2, 2, 1], 3));
    }
}
