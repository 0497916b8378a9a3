//! The known o-polynomial families over GF(2^m), their transforms, the
//! o-monomial criteria and the closed-form inverses.
//!
//! Family parameters are element encodings in the field the family is
//! instantiated over; the Adelaide parameter `b` lives in the default
//! quadratic extension of that field.

mod identities;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use identities::{stated_identities, Identity};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, FracExp};
use crate::numtheory::gcd;
use crate::poly::{dickson_value, reduce_dickson_index, FieldMap, PolyFn, TermPoly};
use crate::verify::{inverse_map, is_permutation, Caps, Counterexample, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Translation { h: u32 },
    Segre { a: u32 },
    GlynnI,
    GlynnII { a: u32 },
    Cherowitzo { a: u32 },
    Payne { a: u32 },
    Subiaco { a: u32 },
    Adelaide { b: u32, sign: Sign },
}

/// Family tags with their parameter schemas.
pub const FAMILIES: [(&str, &str); 8] = [
    ("translation", "h: integer, gcd(h, m) = 1"),
    ("segre", "a: element of GF(2^m), m odd"),
    ("glynni", "none, m odd"),
    ("glynnii", "a: element of GF(2^m), m odd"),
    ("cherowitzo", "a: element of GF(2^m), m odd"),
    ("payne", "a: element of GF(2^m), m odd"),
    (
        "subiaco",
        "a: element of GF(2^m), Tr(1/a) = 1, a not in GF(4) when m = 2 mod 4",
    ),
    (
        "adelaide",
        "b: element of GF(2^2m) with b^(q+1) = 1, b != 1; sign: + or -; m even",
    ),
];

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Translation { .. } => "translation",
            Family::Segre { .. } => "segre",
            Family::GlynnI => "glynni",
            Family::GlynnII { .. } => "glynnii",
            Family::Cherowitzo { .. } => "cherowitzo",
            Family::Payne { .. } => "payne",
            Family::Subiaco { .. } => "subiaco",
            Family::Adelaide { .. } => "adelaide",
        }
    }

    /// Checks the family's conditions against `field` and binds it.
    pub fn instantiate(&self, field: &FieldCtx) -> Result<Instance> {
        let m = binary_degree(field)?;
        let q = field.q();
        let elem = |a: u32| field.elem(a as u64);
        let odd_m = || {
            if m % 2 == 1 {
                Ok(())
            } else {
                Err(Error::precondition(format!("{} needs m odd, got m = {m}", self.tag())))
            }
        };
        let ints =
            |terms: &[(u64, Elem)]| TermPoly::new(field, terms.iter().map(|&(e, c)| (FracExp::int(e as i64), c)));
        Ok(match *self {
            Family::Translation { h } => {
                if h == 0 || h >= m || gcd(h as u64, m as u64) != 1 {
                    return Err(Error::precondition(format!(
                        "translation needs 1 <= h < m, gcd(h, m) = 1; h = {h}, m = {m}"
                    )));
                }
                Instance::Poly(ints(&[(1 << h, Elem::ONE)])?)
            }
            Family::Segre { a } => {
                odd_m()?;
                let a = elem(a)?;
                Instance::Poly(ints(&[(6, Elem::ONE), (4, a), (2, field.mul(a, a))])?)
            }
            Family::GlynnI => {
                odd_m()?;
                Instance::Poly(ints(&[(3 * (1 << m.div_ceil(2)) + 4, Elem::ONE)])?)
            }
            Family::GlynnII { a } => {
                odd_m()?;
                let a = elem(a)?;
                let (big, small) = glynnii_exponents(m);
                Instance::Poly(ints(&[
                    (big + small, Elem::ONE),
                    (big, a),
                    (small, field.pow(a, small)),
                ])?)
            }
            Family::Cherowitzo { a } => {
                odd_m()?;
                let a = elem(a)?;
                let e2 = 1u64 << m.div_ceil(2);
                Instance::Poly(ints(&[
                    (e2, Elem::ONE),
                    (e2 + 2, a),
                    (3 * e2 + 4, field.pow(a, e2 + 2)),
                ])?)
            }
            Family::Payne { a } => {
                odd_m()?;
                let a = elem(a)?;
                Instance::Poly(TermPoly::new(
                    field,
                    [
                        (FracExp::new(5, 6)?, Elem::ONE),
                        (FracExp::new(3, 6)?, a),
                        (FracExp::new(1, 6)?, field.mul(a, a)),
                    ],
                )?)
            }
            Family::Subiaco { a } => {
                let a = elem(a)?;
                if a.is_zero() {
                    return Err(Error::precondition("subiaco needs a != 0"));
                }
                if field.absolute_trace(field.inv(a)?) != Elem::ONE {
                    return Err(Error::precondition("subiaco needs Tr(1/a) = 1"));
                }
                if m % 4 == 2 && field.pow(a, 4) == a {
                    return Err(Error::precondition("subiaco needs a outside GF(4) when m = 2 mod 4"));
                }
                Instance::Fn(subiaco(field, a, m))
            }
            Family::Adelaide { b, sign } => {
                if m % 2 != 0 {
                    return Err(Error::precondition(format!("adelaide needs m even, got m = {m}")));
                }
                let ext = field.extend_quadratic(None)?;
                let b = ext.elem(b as u64)?;
                if b == Elem::ONE || ext.pow(b, q + 1) != Elem::ONE {
                    return Err(Error::precondition("adelaide needs b^(q+1) = 1 and b != 1"));
                }
                Instance::Fn(adelaide(field, &ext, b, sign, m)?)
            }
        })
    }
}

fn binary_degree(field: &FieldCtx) -> Result<u32> {
    if field.p() != 2 || field.n() < 2 {
        return Err(Error::precondition(format!(
            "o-polynomial families live over GF(2^m) with m > 1, got GF({})",
            field.q()
        )));
    }
    Ok(field.n())
}

/// `(2^((m+1)/2), 2^((3m+1)/4))` for m = 1 mod 4 and
/// `(2^((m+1)/2), 2^((m+1)/4))` for m = 3 mod 4.
fn glynnii_exponents(m: u32) -> (u64, u64) {
    let big = 1u64 << m.div_ceil(2);
    let small = if m % 4 == 1 {
        1u64 << ((3 * m + 1) / 4)
    } else {
        1u64 << ((m + 1) / 4)
    };
    (big, small)
}

fn subiaco(field: &FieldCtx, a: Elem, m: u32) -> PolyFn {
    let k = field.clone();
    let a2 = k.mul(a, a);
    let c = k.mul(a2, k.add(k.add(Elem::ONE, a), a2));
    let q = k.q();
    let half = 1u64 << (m - 1);
    PolyFn::new(field, move |x| {
        let p = |e| k.pow(x, e);
        let num = k.add(k.mul(a2, k.add(p(4), x)), k.mul(c, k.add(p(3), p(2))));
        let den = k.add(k.add(p(4), k.mul(a2, p(2))), Elem::ONE);
        k.add(k.mul(num, k.pow(den, q - 2)), p(half))
    })
}

fn adelaide(field: &FieldCtx, ext: &FieldCtx, b: Elem, sign: Sign, m: u32) -> Result<PolyFn> {
    let q = field.q();
    let l = ((q - 1) / 3) as i64;
    let l = if sign == Sign::Plus { l } else { -l };
    let tr = {
        let ext = ext.clone();
        move |z: Elem| ext.trace_to_base(z).expect("tower")
    };
    let t = tr(b);
    let t_inv = field.pow(t, q - 2);
    let tr_bl = tr(ext.pow_signed(b, l));
    let bq = ext.relative_frobenius(b, 1);
    let half = 1u64 << (m - 1);
    let (k, e) = (field.clone(), ext.clone());
    Ok(PolyFn::new(field, move |x| {
        let term1 = k.mul(k.mul(t_inv, tr_bl), k.add(x, Elem::ONE));
        let inner = e.pow_signed(e.add(e.mul(b, e.embed(x).expect("base")), bq), l);
        let d = k.add(k.add(x, k.mul(t, k.pow(x, half))), Elem::ONE);
        let term2 = k.mul(k.mul(t_inv, tr(inner)), k.pow_signed(d, q as i64 - l));
        k.add(k.add(term1, term2), k.pow(x, half))
    }))
}

/// The admissible Adelaide parameters over `field`, as encodings in its
/// default quadratic extension.
pub fn adelaide_parameters(field: &FieldCtx) -> Result<Vec<u32>> {
    let ext = field.extend_quadratic(None)?;
    let q = field.q();
    Ok(ext
        .elements()
        .filter(|&b| b != Elem::ONE && ext.pow(b, q + 1) == Elem::ONE)
        .map(|b| b.0)
        .collect())
}

/// Every admissible instance of every family over GF(2^m).
pub fn catalog(field: &FieldCtx) -> Result<Vec<Family>> {
    let m = binary_degree(field)?;
    let q = field.q() as u32;
    let mut out: Vec<Family> = (1..m)
        .filter(|&h| gcd(h as u64, m as u64) == 1)
        .map(|h| Family::Translation { h })
        .collect();
    if m % 2 == 1 {
        out.extend((0..q).map(|a| Family::Segre { a }));
        out.push(Family::GlynnI);
        out.extend((0..q).map(|a| Family::GlynnII { a }));
        out.extend((0..q).map(|a| Family::Cherowitzo { a }));
        out.extend((0..q).map(|a| Family::Payne { a }));
    }
    out.extend(
        (1..q)
            .map(|a| Family::Subiaco { a })
            .filter(|f| f.instantiate(field).is_ok()),
    );
    if m % 2 == 0 {
        for b in adelaide_parameters(field)? {
            out.push(Family::Adelaide { b, sign: Sign::Plus });
            out.push(Family::Adelaide { b, sign: Sign::Minus });
        }
    }
    Ok(out)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Translation { h } => write!(f, "translation:h={h}"),
            Family::Segre { a } => write!(f, "segre:a={a}"),
            Family::GlynnI => write!(f, "glynni"),
            Family::GlynnII { a } => write!(f, "glynnii:a={a}"),
            Family::Cherowitzo { a } => write!(f, "cherowitzo:a={a}"),
            Family::Payne { a } => write!(f, "payne:a={a}"),
            Family::Subiaco { a } => write!(f, "subiaco:a={a}"),
            Family::Adelaide { b, sign } => {
                write!(f, "adelaide:b={b},sign={}", if sign == Sign::Plus { "+" } else { "-" })
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Ids such as `segre:a=5`, `glynni`, `adelaide:b=137,sign=+`.
    fn from_str(s: &str) -> Result<Family> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (tag, rest) = s.split_once(':').unwrap_or((&s, ""));
        let mut params = std::collections::BTreeMap::new();
        let mut pos = tag.len() + 1;
        for kv in rest.split(',').filter(|kv| !kv.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::parse(pos, format!("expected key=value, got {kv:?}")))?;
            params.insert(k.to_string(), (v.to_string(), pos + k.len() + 1));
            pos += kv.len() + 1;
        }
        let mut take_int = |key: &str| -> Result<u32> {
            let (v, at) = params
                .remove(key)
                .ok_or_else(|| Error::parse(0, format!("{tag} needs parameter {key}")))?;
            v.parse()
                .map_err(|_| Error::parse(at, format!("bad integer {v:?} for {key}")))
        };
        let family = match tag {
            "translation" | "trans" => Family::Translation { h: take_int("h")? },
            "segre" => Family::Segre { a: take_int("a")? },
            "glynni" | "glynn_i" => Family::GlynnI,
            "glynnii" | "glynn_ii" => Family::GlynnII { a: take_int("a")? },
            "cherowitzo" => Family::Cherowitzo { a: take_int("a")? },
            "payne" => Family::Payne { a: take_int("a")? },
            "subiaco" => Family::Subiaco { a: take_int("a")? },
            "adelaide" => {
                let b = take_int("b")?;
                let sign = match params.remove("sign") {
                    None => Sign::Plus,
                    Some((v, at)) => match v.as_str() {
                        "+" | "plus" => Sign::Plus,
                        "-" | "minus" => Sign::Minus,
                        _ => return Err(Error::parse(at, format!("sign must be + or -, got {v:?}"))),
                    },
                };
                Family::Adelaide { b, sign }
            }
            _ => return Err(Error::parse(0, format!("unknown family {tag:?}"))),
        };
        if let Some((k, (_, at))) = params.into_iter().next() {
            return Err(Error::parse(at - k.len() - 1, format!("unexpected parameter {k:?}")));
        }
        Ok(family)
    }
}

/// A bound family member: coefficient form where the family has one.
#[derive(Debug, Clone)]
pub enum Instance {
    Poly(TermPoly),
    Fn(PolyFn),
}

impl Instance {
    pub fn as_poly(&self) -> Option<&TermPoly> {
        match self {
            Instance::Poly(p) => Some(p),
            Instance::Fn(_) => None,
        }
    }
}

impl FieldMap for Instance {
    fn field(&self) -> &FieldCtx {
        match self {
            Instance::Poly(p) => p.field(),
            Instance::Fn(f) => f.field(),
        }
    }
    fn eval(&self, x: Elem) -> Elem {
        match self {
            Instance::Poly(p) => p.eval(x),
            Instance::Fn(f) => f.eval(x),
        }
    }
    fn to_fn(&self) -> PolyFn {
        match self {
            Instance::Poly(p) => p.to_fn(),
            Instance::Fn(f) => f.clone(),
        }
    }
}

// ---- transforms --------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Transform {
    /// Compositional inverse.
    Inverse,
    /// `f(x^(2^j))^(2^(m-j))`.
    Conjugate(u32),
    /// `x f(x^(q-2))`.
    Bar,
    /// `f(x+1) + f(1)`.
    Translate,
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Inverse => f.write_str("inverse"),
            Transform::Conjugate(j) => write!(f, "conjugate{j}"),
            Transform::Bar => f.write_str("bar"),
            Transform::Translate => f.write_str("translate"),
        }
    }
}

/// All transforms over GF(2^m): inverse, bar, translate, conjugates 1..m-1.
pub fn all_transforms(m: u32) -> Vec<Transform> {
    let mut v = vec![Transform::Inverse, Transform::Bar, Transform::Translate];
    v.extend((1..m).map(Transform::Conjugate));
    v
}

pub fn transform(f: &(impl FieldMap + ?Sized), kind: Transform, caps: &Caps) -> Result<PolyFn> {
    let field = f.field().clone();
    let m = binary_degree(&field)?;
    let g = f.to_fn();
    let k = field.clone();
    Ok(match kind {
        Transform::Inverse => inverse_map(f, caps)?,
        Transform::Conjugate(j) => {
            if j == 0 || j >= m {
                return Err(Error::precondition(format!(
                    "conjugate needs 1 <= j <= m-1, got j = {j}"
                )));
            }
            PolyFn::new(&field, move |x| k.frobenius(g.eval(k.frobenius(x, j)), m - j))
        }
        Transform::Bar => {
            let q = k.q();
            PolyFn::new(&field, move |x| k.mul(x, g.eval(k.pow(x, q - 2))))
        }
        Transform::Translate => {
            let f1 = g.eval(Elem::ONE);
            PolyFn::new(&field, move |x| k.add(g.eval(k.add(x, Elem::ONE)), f1))
        }
    })
}

// ---- o-monomials ---------------------------------------------------------------

/// The three o-monomial conditions for `x^k`, plus the variant of the
/// second condition that uses `2^m - 2` in place of `2^m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OMonomialCriteria {
    /// gcd(k, q - 1) = 1
    pub gcd_k: bool,
    /// gcd(k - 1, q - 1) = 1
    pub gcd_k_minus_1: bool,
    /// gcd(k - 1, q - 2) = 1
    pub gcd_k_minus_1_mod_q_minus_2: bool,
    /// ((x + 1)^k + 1) x^(q-2) is a permutation
    pub shift_permutes: bool,
}

pub fn o_monomial_criteria(k: u64, field: &FieldCtx) -> Result<OMonomialCriteria> {
    binary_degree(field)?;
    let q = field.q();
    if k == 0 || k >= q {
        return Err(Error::precondition(format!(
            "o-monomial exponent must lie in [1, q-1], got {k}"
        )));
    }
    let f = field.clone();
    let shift = PolyFn::new(field, move |x| {
        f.mul(f.add(f.pow(f.add(x, Elem::ONE), k), Elem::ONE), f.pow(x, q - 2))
    });
    Ok(OMonomialCriteria {
        gcd_k: gcd(k, q - 1) == 1,
        gcd_k_minus_1: gcd(k - 1, q - 1) == 1,
        gcd_k_minus_1_mod_q_minus_2: gcd(k - 1, q - 2) == 1,
        shift_permutes: is_permutation(&shift, &Caps::default())?.verdict,
    })
}

/// `x^k` is an o-monomial iff gcd(k, q-1) = 1, gcd(k-1, q-1) = 1 and
/// `((x+1)^k + 1) x^(q-2)` permutes GF(q). The failing condition is named
/// in the counterexample.
pub fn o_monomial_test(k: u64, field: &FieldCtx) -> Result<VerifyReport> {
    let start = std::time::Instant::now();
    let c = o_monomial_criteria(k, field)?;
    let failed = [
        (c.gcd_k, "gcd(k, q-1) = 1"),
        (c.gcd_k_minus_1, "gcd(k-1, q-1) = 1"),
        (c.shift_permutes, "((x+1)^k+1) x^(q-2) permutes"),
    ]
    .into_iter()
    .find(|(ok, _)| !ok);
    Ok(VerifyReport {
        verdict: failed.is_none(),
        counterexample: failed.map(|(_, name)| Counterexample::Criterion { name: name.into() }),
        elapsed: start.elapsed(),
        domain_size: field.q(),
    })
}

/// `1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k` resolved modulo `2^m - 1`.
pub fn o_monomial_orbit(k: u64, m: u32) -> Result<[u64; 5]> {
    let q = 1u64 << m;
    let k = k as i64;
    let r = |num: i64, den: i64| -> Result<u64> {
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        FracExp::new(num, den as u64)?.resolve(q)
    };
    Ok([r(1, k)?, r(1 - k, 1)?, r(1, 1 - k)?, r(k, k - 1)?, r(k - 1, k)?])
}

// ---- closed-form inverses --------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StatedInverse {
    /// `(x + sqrt(a)^3)^(1/6) + sqrt(a)`
    Segre { a: u32 },
    /// `D_k(x, 1)^6`, `k = (3 * 2^(2m) - 2) / 5`
    Payne1,
    /// `D_k(x, 1)^(q-2)`, the inverse of `x f(x^(q-2))` for `f = Segre_1`
    SegreBar1,
    /// `x (a x^(2^e+1) + a^(2^e) x^3 + x)^(2^(e-1)-1)`
    Cherowitzo { a: u32 },
    /// `x^(2^(m-h))`
    Translation { h: u32 },
}

impl StatedInverse {
    /// The family member this is claimed to invert.
    pub fn target(&self, field: &FieldCtx) -> Result<PolyFn> {
        Ok(match *self {
            StatedInverse::Segre { a } => Family::Segre { a }.instantiate(field)?.to_fn(),
            StatedInverse::Payne1 => Family::Payne { a: 1 }.instantiate(field)?.to_fn(),
            StatedInverse::SegreBar1 => {
                let segre = Family::Segre { a: 1 }.instantiate(field)?;
                transform(&segre, Transform::Bar, &Caps::default())?
            }
            StatedInverse::Cherowitzo { a } => Family::Cherowitzo { a }.instantiate(field)?.to_fn(),
            StatedInverse::Translation { h } => Family::Translation { h }.instantiate(field)?.to_fn(),
        })
    }
}

impl fmt::Display for StatedInverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatedInverse::Segre { a } => write!(f, "segre:a={a}"),
            StatedInverse::Payne1 => f.write_str("payne:a=1"),
            StatedInverse::SegreBar1 => f.write_str("segre-bar:a=1"),
            StatedInverse::Cherowitzo { a } => write!(f, "cherowitzo:a={a}"),
            StatedInverse::Translation { h } => write!(f, "translation:h={h}"),
        }
    }
}

/// The Dickson order `(3 * 2^(2m) - 2) / 5`, the inverse of 5 modulo
/// `2^(2m) - 1` for odd m.
pub fn inverse_of_five_index(m: u32) -> Result<u64> {
    let n = 3 * (1u64 << (2 * m)) - 2;
    if !n.is_multiple_of(5) {
        return Err(Error::precondition(format!(
            "(3 * 2^(2m) - 2) / 5 is not an integer for m = {m}"
        )));
    }
    Ok(n / 5)
}

/// The closed-form inverse as an evaluator. Whether it really inverts the
/// family member is for the oracles to decide.
pub fn stated_inverse(which: StatedInverse, field: &FieldCtx) -> Result<PolyFn> {
    let m = binary_degree(field)?;
    let q = field.q();
    let k = field.clone();
    let odd_m = || {
        if m % 2 == 1 {
            Ok(())
        } else {
            Err(Error::precondition(format!("{which} needs m odd")))
        }
    };
    Ok(match which {
        StatedInverse::Segre { a } => {
            odd_m()?;
            let a = field.elem(a as u64)?;
            let r = field.sqrt_binary(a)?;
            let r3 = field.pow(r, 3);
            let sixth = FracExp::new(1, 6)?.resolve(q)?;
            PolyFn::new(field, move |x| k.add(k.pow(k.add(x, r3), sixth), r))
        }
        StatedInverse::Payne1 | StatedInverse::SegreBar1 => {
            odd_m()?;
            let h = reduce_dickson_index(inverse_of_five_index(m)?, q);
            let outer = if which == StatedInverse::Payne1 { 6 } else { q - 2 };
            PolyFn::new(field, move |x| k.pow(dickson_value(h, Elem::ONE, x, &k), outer))
        }
        StatedInverse::Cherowitzo { a } => {
            odd_m()?;
            let a = field.elem(a as u64)?;
            let e2 = 1u64 << m.div_ceil(2);
            let ae = field.pow(a, e2);
            let outer = e2 / 2 - 1;
            PolyFn::new(field, move |x| {
                let inner = k.add(k.add(k.mul(a, k.pow(x, e2 + 1)), k.mul(ae, k.pow(x, 3))), x);
                k.mul(x, k.pow(inner, outer))
            })
        }
        StatedInverse::Translation { h } => {
            Family::Translation { h }.instantiate(field)?;
            PolyFn::new(field, move |x| k.frobenius(x, m - h))
        }
    })
}

#[cfg(test)]
mod tests;
