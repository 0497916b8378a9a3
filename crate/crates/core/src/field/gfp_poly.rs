//! Dense polynomials over a prime field GF(p), little-endian coefficient
//! vectors. Only what modulus selection and validation need.

use crate::numtheory::{mod_inverse, prime_factors};

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Coefficients of the base-`p` digits of `enc`.
pub(crate) fn from_encoding(mut enc: u64, p: u64) -> Poly {
    let mut out = Vec::new();
    while enc > 0 {
        out.push(enc % p);
        enc /= p;
    }
    out
}

pub(crate) fn to_encoding(a: &[u64], p: u64) -> u64 {
    a.iter().rev().fold(0u64, |acc, &c| acc * p + c)
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let dm = degree(m).expect("nonzero modulus");
    let lead_inv = mod_inverse(m[dm] as i128, p).expect("p prime");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^k) mod m`, by k successive p-th powers.
fn frobenius_x(k: u32, m: &[u64], p: u64) -> Poly {
    let mut h = rem(&[0, 1], m, p);
    for _ in 0..k {
        h = pow_mod(&h, p, m, p);
    }
    h
}

/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = match degree(f) {
        Some(n) if n >= 1 => n as u32,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    if sub(&frobenius_x(n, f, p), &rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let g = sub(&frobenius_x(n / r as u32, f, p), &x, p);
        degree(&gcd(f, &g, p)) == Some(0)
    })
}

/// Smallest-degree monic factor of a reducible `f`, by trial division.
pub(crate) fn find_factor(f: &[u64], p: u64) -> Option<Poly> {
    let n = degree(f)?;
    for d in 1..=n / 2 {
        let lead = p.pow(d as u32);
        for enc in lead..2 * lead {
            let g = from_encoding(enc, p);
            if rem(f, &g, p).is_empty() {
                return Some(g);
            }
        }
    }
    None
}

/// Lexicographically-first monic irreducible of degree `n`: the one whose
/// integer encoding (base-`p` digits, constant term first) is smallest.
pub(crate) fn canonical_irreducible(p: u64, n: u32) -> Poly {
    let lead = p.pow(n);
    (lead..2 * lead)
        .map(|enc| from_encoding(enc, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Root search oracle: a cubic over GF(p) is irreducible iff it has no root.
    fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
    }

    #[test]
    fn cubics_over_gf2_agree_with_root_search() {
        let irreducible: Vec<u64> = (8..16).filter(|&e| !has_root(&from_encoding(e, 2), 2)).collect();
        // x^3+x+1 = 0b1011, x^3+x^2+1 = 0b1101
        assert_eq!(irreducible, vec![11, 13]);
        for e in 8..16u64 {
            assert_eq!(is_irreducible(&from_encoding(e, 2), 2), irreducible.contains(&e));
        }
        assert_eq!(to_encoding(&canonical_irreducible(2, 3), 2), 11);
    }

    #[test]
    fn quadratics_and_cubics_over_odd_primes() {
        for p in [3u64, 5, 7] {
            for deg in [2u32, 3] {
                let lead = p.pow(deg);
                for e in lead..2 * lead {
                    let f = from_encoding(e, p);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "p={p} f={f:?}");
                }
            }
        }
        // x^2 + 1 over GF(3)
        assert_eq!(canonical_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn quartic_products_are_caught() {
        // (x^2+x+1)^2 = x^4+x^2+1 has no root over GF(2) but is reducible
        let f = from_encoding(0b10101, 2);
        assert!(!has_root(&f, 2));
        assert!(!is_irreducible(&f, 2));
        assert_eq!(find_factor(&f, 2), Some(vec![1, 1, 1]));
        assert!(is_irreducible(&from_encoding(0b10011, 2), 2));
        assert_eq!(to_encoding(&canonical_irreducible(2, 8), 2), 0x11b);
    }
}
