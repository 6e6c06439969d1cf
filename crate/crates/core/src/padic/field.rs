use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest modulus p^N accepted, so that products of residues fit in `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// An unramified extension of Q_p of degree `f`, carried at `precision` p-adic digits.
///
/// Elements of the ring of integers are coefficient vectors over Z/p^N modulo the
/// defining polynomial `h`, which is monic of degree `f` and irreducible modulo p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    degree: usize,
    precision: u32,
    modulus_poly: Vec<u64>,
    modulus: u64,
}

impl FieldSpec {
    /// Q_p at precision `n`.
    pub fn qp(p: u64, n: u32) -> Result<Arc<Self>> {
        Self::new(p, 1, n, None)
    }

    /// Unramified extension of degree `f`. When `h` is `None` the first monic
    /// irreducible polynomial of degree `f` over F_p in lexicographic order is used.
    pub fn new(p: u64, f: usize, n: u32, h: Option<Vec<i64>>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidField("precision must be at least 1".into()));
        }
        if f == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let modulus = checked_pow(p, n)
            .filter(|&m| m <= MAX_MODULUS)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{n} exceeds 2^62")))?;
        let h = match h {
            Some(h) => {
                if h.len() != f + 1 || h[f] != 1 {
                    return Err(Error::InvalidField(format!(
                        "defining polynomial must be monic of degree {f}"
                    )));
                }
                let h: Vec<u64> = h.iter().map(|&c| c.rem_euclid(modulus as i64) as u64).collect();
                let reduced: Vec<u64> = h.iter().map(|c| c % p).collect();
                if !is_irreducible_mod_p(&reduced, p) {
                    return Err(Error::InvalidField("defining polynomial is reducible modulo p".into()));
                }
                h
            }
            None => first_irreducible(p, f),
        };
        Ok(Arc::new(FieldSpec { p, degree: f, precision: n, modulus_poly: h, modulus }))
    }

    /// Same field at a different working precision.
    pub fn with_precision(&self, n: u32) -> Result<Arc<Self>> {
        let h = self.modulus_poly.iter().map(|&c| c as i64).collect();
        Self::new(self.p, self.degree, n, Some(h))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// p^N.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Defining polynomial, low-to-high, monic.
    pub fn modulus_poly(&self) -> &[u64] {
        &self.modulus_poly
    }

    /// Cardinality q = p^f of the residue field.
    pub fn residue_size(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    /// Order of the group of roots of unity: q - 1, doubled when p = 2.
    pub fn roots_of_unity_order(&self) -> u64 {
        let base = self.residue_size() - 1;
        if self.p == 2 {
            2 * base
        } else {
            base
        }
    }

    pub fn prime_power(&self, k: u32) -> u64 {
        self.p.pow(k)
    }
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Remainder of `a` divided by `b` over F_p (coefficients low-to-high, `b` nonzero).
fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.iter().map(|c| c % p).collect();
    let mut b: Vec<u64> = b.iter().map(|c| c % p).collect();
    trim(&mut r);
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    loop {
        trim(&mut r);
        if r.len() <= db || r.iter().all(|&c| c == 0) {
            break;
        }
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
        }
    }
    r
}

/// Trial division by every monic polynomial of degree at most deg/2.
pub(crate) fn is_irreducible_mod_p(h: &[u64], p: u64) -> bool {
    let mut h = h.to_vec();
    trim(&mut h);
    let d = h.len() - 1;
    if d == 0 {
        return false;
    }
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(k + 1);
            let mut t = idx;
            for _ in 0..k {
                g.push(t % p);
                t /= p;
            }
            g.push(1);
            let r = rem_mod_p(&h, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u64, f: usize) -> Vec<u64> {
    if f == 1 {
        return vec![0, 1];
    }
    let count = p.pow(f as u32);
    for idx in 0..count {
        let mut h = Vec::with_capacity(f + 1);
        let mut t = idx;
        for _ in 0..f {
            h.push(t % p);
            t /= p;
        }
        h.push(1);
        if is_irreducible_mod_p(&h, p) {
            return h;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
