//! Dickson polynomials of the first kind,
//! `D_h(x, a) = sum_i h/(h-i) C(h-i, i) (-a)^i x^(h-2i)`.

use serde::{Deserialize, Serialize};

use super::TermPoly;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, FracExp};
use crate::numtheory::binomial_mod_p;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicksonSpec {
    pub h: u64,
    pub a: Elem,
}

impl DicksonSpec {
    pub fn to_poly(&self, field: &FieldCtx) -> Result<TermPoly> {
        dickson(self.h, self.a, field)
    }
}

/// `h/(h-i) C(h-i, i) mod p` for `0 <= 2i <= h`.
///
/// The factor is an integer and equals `C(h-i, i) + C(h-i-1, i-1)`, so it is
/// reduced term by term with Lucas' theorem and never divides modulo `p`.
pub fn dickson_coefficient(h: u64, i: u64, p: u64) -> u64 {
    debug_assert!(2 * i <= h);
    if i == 0 {
        return 1 % p;
    }
    (binomial_mod_p(h - i, i, p) + binomial_mod_p(h - i - 1, i - 1, p)) % p
}

fn check_order(h: u64) -> Result<()> {
    if h == 0 {
        return Err(Error::precondition("Dickson order must be at least 1"));
    }
    Ok(())
}

/// Coefficients of `D_h(x, a)` indexed by integer exponent `0..=h`.
pub fn dickson_dense(h: u64, a: Elem, field: &FieldCtx) -> Result<Vec<Elem>> {
    check_order(h)?;
    field.elem(a.0 as u64)?;
    let mut out = vec![Elem::ZERO; h as usize + 1];
    let minus_a = field.neg(a);
    for i in 0..=h / 2 {
        let c = field.mul(
            field.from_int(dickson_coefficient(h, i, field.p()) as i64),
            field.pow(minus_a, i),
        );
        out[(h - 2 * i) as usize] = c;
    }
    Ok(out)
}

/// Coefficients of `D_h(x, a)` from `D_h = x D_(h-1) - a D_(h-2)`,
/// `D_0 = 2`, `D_1 = x`.
pub fn dickson_recurrence(h: u64, a: Elem, field: &FieldCtx) -> Result<Vec<Elem>> {
    check_order(h)?;
    field.elem(a.0 as u64)?;
    let mut prev = vec![field.from_int(2)];
    let mut cur = vec![Elem::ZERO, Elem::ONE];
    for _ in 1..h {
        let mut next = vec![Elem::ZERO; cur.len() + 1];
        for (k, &c) in cur.iter().enumerate() {
            next[k + 1] = c;
        }
        for (k, &c) in prev.iter().enumerate() {
            next[k] = field.sub(next[k], field.mul(a, c));
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `D_h(x, a)` as a reduced polynomial over `field`.
///
/// ```
/// use gfperm::{Elem, FieldCtx, poly::dickson};
/// let f = FieldCtx::new(3, 2).unwrap();
/// let a = Elem(5);
/// let d5 = dickson(5, a, &f).unwrap();
/// // x^5 + a x^3 - a^2 x in characteristic 3
/// assert_eq!(d5.coeff(5), Elem::ONE);
/// assert_eq!(d5.coeff(3), a);
/// assert_eq!(d5.coeff(1), f.neg(f.mul(a, a)));
/// ```
pub fn dickson(h: u64, a: Elem, field: &FieldCtx) -> Result<TermPoly> {
    let dense = dickson_dense(h, a, field)?;
    TermPoly::reduced(
        field,
        dense.into_iter().enumerate().map(|(k, c)| (FracExp::int(k as i64), c)),
    )
}

/// `D_h(x, a)` at one point, by powering the companion matrix of the
/// recurrence. Independent of the coefficient formula.
pub fn dickson_value(h: u64, a: Elem, x: Elem, field: &FieldCtx) -> Elem {
    if h == 0 {
        return field.from_int(2);
    }
    type M = [[Elem; 2]; 2];
    let mul = |l: &M, r: &M| -> M {
        let mut o = [[Elem::ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                o[i][j] = field.add(field.mul(l[i][0], r[0][j]), field.mul(l[i][1], r[1][j]));
            }
        }
        o
    };
    let mut acc: M = [[Elem::ONE, Elem::ZERO], [Elem::ZERO, Elem::ONE]];
    let mut base: M = [[x, field.neg(a)], [Elem::ONE, Elem::ZERO]];
    let mut e = h - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    // [D_h, D_(h-1)] = acc [D_1, D_0]
    field.add(field.mul(acc[0][0], x), field.mul(acc[0][1], field.from_int(2)))
}

/// Reduces a Dickson order into `[1, q^2 - 1]` without changing the map on
/// GF(q): `D_h(y + a/y, a) = y^h + (a/y)^h` with `y` in GF(q^2)*, so the
/// order only matters modulo `q^2 - 1`.
pub fn reduce_dickson_index(h: u64, q: u64) -> u64 {
    let period = q * q - 1;
    match h % period {
        0 => period,
        r => r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::FieldMap;

    /// `h/(h-i) C(h-i, i)` in exact integers.
    fn exact(h: u64, i: u64) -> u128 {
        let mut c: u128 = 1;
        for k in 0..i {
            c = c * (h - i - k) as u128 / (k + 1) as u128;
        }
        let num = h as u128 * c;
        assert_eq!(num % (h - i) as u128, 0);
        num / (h - i) as u128
    }

    #[test]
    fn coefficient_matches_exact_integers() {
        for h in 1..=60u64 {
            for i in 0..=h / 2 {
                for p in [2u64, 3, 5, 7] {
                    assert_eq!(
                        dickson_coefficient(h, i, p) as u128,
                        exact(h, i) % p as u128,
                        "h={h} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn formula_matches_recurrence() {
        for (p, n) in [(2u64, 1u32), (2, 3), (3, 1), (3, 2), (5, 1)] {
            let f = FieldCtx::new(p, n).unwrap();
            for a in f.elements() {
                for h in 1..=50 {
                    assert_eq!(
                        dickson_dense(h, a, &f).unwrap(),
                        dickson_recurrence(h, a, &f).unwrap(),
                        "p={p} n={n} a={a} h={h}"
                    );
                }
            }
        }
    }

    #[test]
    fn d5_in_characteristic_2_and_3() {
        let f = FieldCtx::new(2, 5).unwrap();
        let a = Elem(7);
        let d5 = dickson(5, a, &f).unwrap();
        assert_eq!(d5.terms().len(), 3);
        assert_eq!((d5.coeff(5), d5.coeff(3), d5.coeff(1)), (Elem::ONE, a, f.mul(a, a)));
        assert_eq!(dickson(1, a, &f).unwrap().to_string(), "1:1");
        assert!(dickson(0, a, &f).is_err());
    }

    #[test]
    fn matrix_power_matches_coefficients() {
        let f = FieldCtx::new(2, 3).unwrap();
        for h in 1..=70 {
            for a in f.elements() {
                let d = dickson(h, a, &f).unwrap();
                for x in f.elements() {
                    assert_eq!(d.eval(x), dickson_value(h, a, x, &f));
                }
            }
        }
    }

    #[test]
    fn order_period_is_q_squared_minus_one() {
        for (p, n) in [(2u64, 2u32), (2, 3), (5, 1)] {
            let f = FieldCtx::new(p, n).unwrap();
            let q = f.q();
            for h in [1, 5, 38, q * q - 1] {
                let r = reduce_dickson_index(h + (q * q - 1), q);
                for a in f.elements() {
                    for x in f.elements() {
                        assert_eq!(dickson_value(h, a, x, &f), dickson_value(r, a, x, &f));
                    }
                }
            }
        }
        assert_eq!(reduce_dickson_index(38, 8), 38);
        assert_eq!(reduce_dickson_index(63, 8), 63);
        assert_eq!(reduce_dickson_index(614, 32), 614);
    }
}
