//! Table-driven arithmetic in the small Galois fields GF(q), q ≤ 9.

use crate::error::{Error, Result};

/// GF(q) with elements `0..q`. An element encodes a polynomial over GF(p)
/// by its base-`p` digits (constant term first).
#[derive(Debug, Clone)]
pub struct GaloisField {
    q: usize,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
}

/// (p, k, low coefficients of the monic irreducible of degree k).
fn parameters(q: u32) -> Option<(usize, usize, &'static [usize])> {
    match q {
        2 | 3 | 5 | 7 => Some((q as usize, 1, &[0])),
        4 => Some((2, 2, &[1, 1])),    // x^2 + x + 1
        8 => Some((2, 3, &[1, 1, 0])), // x^3 + x + 1
        9 => Some((3, 2, &[1, 0])),    // x^2 + 1
        _ => None,
    }
}

fn digits(x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    let mut x = x;
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k, modulus) = match q {
            6 | 10 => return Err(Error::NoPlaneExists(q)),
            _ => parameters(q).ok_or(Error::NoSuchPlaneConstruction(q))?,
        };
        let n = q as usize;
        let mut add = vec![vec![0u8; n]; n];
        let mut mul = vec![vec![0u8; n]; n];
        for a in 0..n {
            let da = digits(a, p, k);
            for b in 0..n {
                let db = digits(b, p, k);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = undigits(&sum, p) as u8;

                let mut prod = vec![0usize; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // Reduce using x^k = -(modulus).
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        prod[deg] = 0;
                        for (i, &m) in modulus.iter().enumerate() {
                            prod[deg - k + i] = (prod[deg - k + i] + (p - m) * c) % p;
                        }
                    }
                }
                mul[a][b] = undigits(&prod[..k], p) as u8;
            }
        }
        Ok(GaloisField { q: n, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            let n = f.order();
            for a in 0..n {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    let b = f
                        .inv(a)
                        .unwrap_or_else(|| panic!("no inverse of {a} in GF({q})"));
                    assert_eq!(f.mul(a, b), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_orders() {
        assert!(matches!(GaloisField::new(6), Err(Error::NoPlaneExists(6))));
        assert!(matches!(
            GaloisField::new(10),
            Err(Error::NoPlaneExists(10))
        ));
        assert!(matches!(
            GaloisField::new(11),
            Err(Error::NoSuchPlaneConstruction(11))
        ));
    }
}
