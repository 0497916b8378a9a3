//! Finite fields GF(p^n) and explicit quadratic/cubic towers over them.
//!
//! Every element is encoded as an integer in `[0, q)`. For a field built
//! directly over its prime field the encoding packs the polynomial-basis
//! coordinates as base-`p` digits, constant term first. For a tower field
//! `K = k[x]/(g)` the digits are instead base-`|k|` and each digit is the
//! encoding of a coordinate in `k`. In both cases 0 and 1 are the additive
//! and multiplicative identities, the subfield sits on the encodings below
//! `|k|`, and in characteristic 2 addition is XOR on encodings.
//!
//! A [`FieldCtx`] is immutable and cheap to clone. Fields with `q <= 2^16`
//! carry exp/log tables built from the direct arithmetic; the direct path
//! stays available for cross-checking.

mod exp;
mod gfp_poly;
mod spec;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use exp::FracExp;
pub use spec::{parse_field, FieldSpec};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod, prime_factors};

/// Fields up to this order get exp/log tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

/// An element encoding. Meaningful only together with its [`FieldCtx`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The binary field operations, for callers that dispatch on an op tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    n: u32,
    q: u64,
    repr: Repr,
    tables: Option<Tables>,
}

#[derive(Clone, PartialEq)]
enum Repr {
    Prime,
    /// GF(2^n), modulus bits including the leading term.
    Binary {
        modulus: u64,
    },
    /// GF(p^n) for odd p and n >= 2; monic modulus, constant term first.
    Odd {
        modulus: Vec<u64>,
    },
    Tower(Tower),
}

#[derive(Clone, PartialEq)]
struct Tower {
    base: FieldCtx,
    /// Extension degree over `base`.
    degree: u32,
    /// Lower coefficients of the monic defining polynomial, constant first.
    defining: Vec<Elem>,
    /// For `x^3 - b` towers: `(b, omega = b^((q-1)/3))`.
    cubic: Option<(Elem, Elem)>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// How the field was defined over the next field down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Modulus {
    /// Monic modulus over GF(p), constant term first.
    OverPrime(Vec<u64>),
    /// Monic defining polynomial over the tower base, constant term first.
    OverBase(Vec<Elem>),
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.n == other.inner.n && self.inner.repr == other.inner.repr)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({})", self.spec())
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl FieldCtx {
    /// GF(p^n) with the canonical modulus: the monic irreducible of degree `n`
    /// with the smallest integer encoding.
    pub fn new(p: u64, n: u32) -> Result<FieldCtx> {
        check_order(p, n)?;
        if n == 1 {
            return Ok(Self::from_repr(p, 1, Repr::Prime));
        }
        let modulus = gfp_poly::canonical_irreducible(p, n);
        Self::with_modulus(p, n, &modulus)
    }

    /// GF(p^n) with an explicit monic modulus (coefficients constant first).
    pub fn with_modulus(p: u64, n: u32, modulus: &[u64]) -> Result<FieldCtx> {
        check_order(p, n)?;
        let modulus = gfp_poly::trim(modulus.to_vec());
        if gfp_poly::degree(&modulus) != Some(n as usize) {
            return Err(Error::InvalidModulus(format!("{modulus:?} does not have degree {n}")));
        }
        if modulus[n as usize] != 1 {
            return Err(Error::InvalidModulus(format!("{modulus:?} is not monic")));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "{modulus:?} has coefficients outside GF({p})"
            )));
        }
        if !gfp_poly::is_irreducible(&modulus, p) {
            let factor = gfp_poly::find_factor(&modulus, p).unwrap_or_default();
            return Err(Error::ReducibleModulus { p, modulus, factor });
        }
        let repr = match (p, n) {
            (_, 1) => {
                if modulus != [0, 1] {
                    // x + c shifts nothing in a prime field; only x is accepted
                    return Err(Error::InvalidModulus("prime fields use the modulus x".into()));
                }
                Repr::Prime
            }
            (2, _) => Repr::Binary {
                modulus: gfp_poly::to_encoding(&modulus, 2),
            },
            _ => Repr::Odd { modulus },
        };
        Ok(Self::from_repr(p, n, repr))
    }

    /// GF(p^n) from the integer encoding of its modulus (leading term included).
    pub fn with_modulus_encoding(p: u64, n: u32, enc: u64) -> Result<FieldCtx> {
        check_order(p, n)?;
        Self::with_modulus(p, n, &gfp_poly::from_encoding(enc, p))
    }

    /// Quadratic extension `self[x]/(x^2 + c1 x + c0)`, given as `[c0, c1]`.
    ///
    /// Without an explicit polynomial: `x^2 - b` with `b` the smallest
    /// non-square for odd order, `x^2 + x + c` with `c` the smallest element of
    /// absolute trace 1 for even order.
    pub fn extend_quadratic(&self, defining: Option<[Elem; 2]>) -> Result<FieldCtx> {
        let defining = match defining {
            Some(d) => d.to_vec(),
            None if self.p() == 2 => {
                let c = self
                    .elements()
                    .find(|&c| self.absolute_trace(c) == Elem::ONE)
                    .expect("trace is onto GF(2)");
                vec![c, Elem::ONE]
            }
            None => {
                let b = self
                    .elements()
                    .find(|&b| !b.is_zero() && !self.is_square(b))
                    .expect("odd fields have non-squares");
                vec![self.neg(b), Elem::ZERO]
            }
        };
        self.extend(&defining, None)
    }

    /// Cubic extension `self[x]/(x^3 - b)` with `b` the smallest non-cube;
    /// requires `q = 1 (mod 3)`. The adjoined root `alpha` satisfies
    /// `alpha^q = omega * alpha` with `omega = b^((q-1)/3)`.
    pub fn extend_cubic(&self) -> Result<FieldCtx> {
        let q = self.q();
        if q % 3 != 1 {
            return Err(Error::precondition(format!(
                "cubic extension needs q = 1 mod 3, got q = {q}"
            )));
        }
        let third = (q - 1) / 3;
        let b = self
            .elements()
            .find(|&b| !b.is_zero() && self.pow(b, third) != Elem::ONE)
            .expect("q = 1 mod 3 has non-cubes");
        let omega = self.pow(b, third);
        let ext = self.extend(&[self.neg(b), Elem::ZERO, Elem::ZERO], Some((b, omega)))?;
        let alpha = ext.adjoined_root().expect("tower");
        let w = ext.embed(omega)?;
        debug_assert_eq!(ext.relative_frobenius(alpha, 1), ext.mul(w, alpha));
        debug_assert_ne!(omega, Elem::ONE);
        debug_assert_eq!(self.pow(omega, 3), Elem::ONE);
        debug_assert!(self.add(self.add(Elem::ONE, omega), self.mul(omega, omega)).is_zero());
        Ok(ext)
    }

    /// Extension by the monic polynomial `x^k + defining[k-1] x^(k-1) + ... +
    /// defining[0]`, `k` in {2, 3}; irreducibility is checked by root search.
    pub fn extend_with(&self, defining: &[Elem]) -> Result<FieldCtx> {
        self.extend(defining, None)
    }

    fn extend(&self, defining: &[Elem], cubic: Option<(Elem, Elem)>) -> Result<FieldCtx> {
        let k = defining.len() as u32;
        if !(2..=3).contains(&k) {
            return Err(Error::precondition("tower steps have degree 2 or 3"));
        }
        for &c in defining {
            self.check(c)?;
        }
        let q = self.q();
        let ext_q = (q as u128).pow(k);
        if ext_q > 1u128 << 32 {
            return Err(Error::FieldTooLarge {
                p: self.p(),
                n: self.n() * k,
            });
        }
        if let Some(root) = self.elements().find(|&x| {
            let mut acc = Elem::ONE;
            for &c in defining.iter().rev() {
                acc = self.add(self.mul(acc, x), c);
            }
            acc.is_zero()
        }) {
            return Err(Error::ReducibleExtension { root: root.0 });
        }
        let tower = Tower {
            base: self.clone(),
            degree: k,
            defining: defining.to_vec(),
            cubic,
        };
        Ok(Self::from_repr(self.p(), self.n() * k, Repr::Tower(tower)))
    }

    fn from_repr(p: u64, n: u32, repr: Repr) -> FieldCtx {
        let q = p.pow(n);
        let mut field = FieldCtx {
            inner: Arc::new(Inner {
                p,
                n,
                q,
                repr,
                tables: None,
            }),
        };
        if q <= TABLE_LIMIT {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.inner).expect("fresh").tables = Some(tables);
        }
        field
    }

    /// The same field with exp/log tables dropped, so every operation takes
    /// the direct path.
    pub fn without_tables(&self) -> FieldCtx {
        FieldCtx {
            inner: Arc::new(Inner {
                p: self.inner.p,
                n: self.inner.n,
                q: self.inner.q,
                repr: self.inner.repr.clone(),
                tables: None,
            }),
        }
    }

    pub fn has_tables(&self) -> bool {
        self.inner.tables.is_some()
    }

    fn build_tables(&self) -> Tables {
        let q = self.q() as usize;
        let g = self.generator();
        let mut exp = vec![0u32; 2 * (q - 1)];
        let mut log = vec![0u32; q];
        let mut x = Elem::ONE;
        for i in 0..q - 1 {
            exp[i] = x.0;
            exp[i + q - 1] = x.0;
            log[x.index()] = i as u32;
            x = self.mul_direct(x, g);
        }
        debug_assert_eq!(x, Elem::ONE);
        Tables { exp, log }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Extension degree over the prime field.
    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn size(&self) -> usize {
        self.inner.q as usize
    }

    pub fn is_binary(&self) -> bool {
        self.inner.p == 2
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + use<> {
        (0..self.q()).map(|e| Elem(e as u32))
    }

    pub fn elem(&self, enc: u64) -> Result<Elem> {
        if enc >= self.q() {
            return Err(Error::OutOfRange { enc, q: self.q() });
        }
        Ok(Elem(enc as u32))
    }

    fn check(&self, a: Elem) -> Result<Elem> {
        self.elem(a.0 as u64)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p() as i64) as u32)
    }

    pub fn modulus(&self) -> Modulus {
        match &self.inner.repr {
            Repr::Prime => Modulus::OverPrime(vec![0, 1]),
            Repr::Binary { modulus } => Modulus::OverPrime(gfp_poly::from_encoding(*modulus, 2)),
            Repr::Odd { modulus } => Modulus::OverPrime(modulus.clone()),
            Repr::Tower(t) => {
                let mut d = t.defining.clone();
                d.push(Elem::ONE);
                Modulus::OverBase(d)
            }
        }
    }

    /// Integer encoding of the modulus over GF(p), leading term included.
    /// `None` for tower fields.
    pub fn modulus_encoding(&self) -> Option<u64> {
        match self.modulus() {
            Modulus::OverPrime(m) => Some(gfp_poly::to_encoding(&m, self.p())),
            Modulus::OverBase(_) => None,
        }
    }

    fn tower(&self) -> Option<&Tower> {
        match &self.inner.repr {
            Repr::Tower(t) => Some(t),
            _ => None,
        }
    }

    /// The subfield this field was built over, if it is a tower step.
    pub fn base(&self) -> Option<&FieldCtx> {
        self.tower().map(|t| &t.base)
    }

    pub fn tower_degree(&self) -> Option<u32> {
        self.tower().map(|t| t.degree)
    }

    /// The root of the defining polynomial, encoded as `base.q()`.
    pub fn adjoined_root(&self) -> Option<Elem> {
        self.tower().map(|t| Elem(t.base.q() as u32))
    }

    /// `(b, omega)` for fields built by [`FieldCtx::extend_cubic`].
    pub fn cubic_data(&self) -> Option<(Elem, Elem)> {
        self.tower().and_then(|t| t.cubic)
    }

    /// Canonical field spec string, e.g. `2^3`, `2^5:2`, `3^2/mod=10`.
    pub fn spec(&self) -> String {
        match &self.inner.repr {
            Repr::Tower(t) => format!("{}:{}", t.base.spec(), t.degree),
            _ => {
                let plain = format!("{}^{}", self.p(), self.n());
                let canonical = self.n() == 1
                    || gfp_poly::to_encoding(&gfp_poly::canonical_irreducible(self.p(), self.n()), self.p())
                        == self.modulus_encoding().unwrap_or(0);
                if canonical {
                    plain
                } else {
                    format!("{plain}/mod={}", self.modulus_encoding().unwrap_or(0))
                }
            }
        }
    }

    // ---- digit helpers -------------------------------------------------

    fn digits(&self, a: Elem, radix: u64, k: usize) -> Vec<u64> {
        let mut e = a.0 as u64;
        (0..k)
            .map(|_| {
                let d = e % radix;
                e /= radix;
                d
            })
            .collect()
    }

    fn pack(radix: u64, digits: impl DoubleEndedIterator<Item = u64>) -> Elem {
        Elem(digits.rev().fold(0u64, |acc, d| acc * radix + d) as u32)
    }

    // ---- additive structure --------------------------------------------

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &inner.repr {
            Repr::Prime => Elem(((a.0 as u64 + b.0 as u64) % inner.p) as u32),
            Repr::Odd { .. } => {
                let (p, n) = (inner.p, inner.n as usize);
                let (x, y) = (self.digits(a, p, n), self.digits(b, p, n));
                Self::pack(p, x.into_iter().zip(y).map(|(u, v)| (u + v) % p))
            }
            Repr::Tower(t) => {
                let (r, k) = (t.base.q(), t.degree as usize);
                let (x, y) = (self.digits(a, r, k), self.digits(b, r, k));
                Self::pack(
                    r,
                    x.into_iter()
                        .zip(y)
                        .map(|(u, v)| t.base.add(Elem(u as u32), Elem(v as u32)).0 as u64),
                )
            }
            Repr::Binary { .. } => unreachable!("binary fields add by xor"),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 {
            return a;
        }
        match &inner.repr {
            Repr::Prime => Elem(((inner.p - a.0 as u64) % inner.p) as u32),
            Repr::Odd { .. } => {
                let (p, n) = (inner.p, inner.n as usize);
                Self::pack(p, self.digits(a, p, n).into_iter().map(|u| (p - u) % p))
            }
            Repr::Tower(t) => {
                let (r, k) = (t.base.q(), t.degree as usize);
                Self::pack(
                    r,
                    self.digits(a, r, k)
                        .into_iter()
                        .map(|u| t.base.neg(Elem(u as u32)).0 as u64),
                )
            }
            Repr::Binary { .. } => unreachable!(),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    // ---- multiplicative structure --------------------------------------

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => {
                if a.is_zero() || b.is_zero() {
                    Elem::ZERO
                } else {
                    Elem(t.exp[(t.log[a.index()] + t.log[b.index()]) as usize])
                }
            }
            None => self.mul_direct(a, b),
        }
    }

    /// Multiplication without tables: carryless multiply and reduce for
    /// GF(2^n), digit convolution otherwise.
    pub fn mul_direct(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        match &inner.repr {
            Repr::Prime => Elem((a.0 as u64 * b.0 as u64 % inner.p) as u32),
            Repr::Binary { modulus } => Elem(clmul_reduce(a.0 as u64, b.0 as u64, *modulus, inner.n)),
            Repr::Odd { modulus } => {
                let p = inner.p;
                let x = gfp_poly::from_encoding(a.0 as u64, p);
                let y = gfp_poly::from_encoding(b.0 as u64, p);
                Elem(gfp_poly::to_encoding(&gfp_poly::mul_mod(&x, &y, modulus, p), p) as u32)
            }
            Repr::Tower(t) => {
                let base = &t.base;
                let (r, k) = (base.q(), t.degree as usize);
                let x = self.digits(a, r, k);
                let y = self.digits(b, r, k);
                let mut prod = vec![Elem::ZERO; 2 * k - 1];
                for (i, &u) in x.iter().enumerate() {
                    if u == 0 {
                        continue;
                    }
                    for (j, &v) in y.iter().enumerate() {
                        let m = base.mul(Elem(u as u32), Elem(v as u32));
                        prod[i + j] = base.add(prod[i + j], m);
                    }
                }
                // x^k = -(defining[k-1] x^(k-1) + ... + defining[0])
                for i in (k..2 * k - 1).rev() {
                    let c = prod[i];
                    if c.is_zero() {
                        continue;
                    }
                    prod[i] = Elem::ZERO;
                    for (j, &d) in t.defining.iter().enumerate() {
                        prod[i - k + j] = base.sub(prod[i - k + j], base.mul(c, d));
                    }
                }
                Self::pack(r, prod[..k].iter().map(|e| e.0 as u64))
            }
        }
    }

    /// `a^e` with the conventions `0^0 = 1` and `0^e = 0` for `e >= 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = self.q() - 1;
        let e = e % order;
        match &self.inner.tables {
            Some(t) => {
                let l = (t.log[a.index()] as u64 * e % order) as usize;
                Elem(t.exp[l])
            }
            None => self.pow_direct(a, e),
        }
    }

    /// Square-and-multiply over [`FieldCtx::mul_direct`].
    pub fn pow_direct(&self, a: Elem, mut e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        let mut acc = Elem::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_direct(acc, b);
            }
            b = self.mul_direct(b, b);
            e >>= 1;
        }
        acc
    }

    /// Power with a symbolic exponent, resolved modulo `q - 1`.
    pub fn pow_frac(&self, a: Elem, e: FracExp) -> Result<Elem> {
        Ok(self.pow(a, e.resolve(self.q())?))
    }

    /// Power with a signed integer exponent; negative exponents go through
    /// the inverse-or-zero map.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Elem {
        let r = FracExp::int(e)
            .resolve(self.q())
            .expect("integer exponents always resolve");
        self.pow(a, r)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_or_zero(a))
    }

    /// `a^(q-2)`: the inverse for nonzero `a`, and 0 at 0.
    pub fn inv_or_zero(&self, a: Elem) -> Elem {
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let order = self.q() as u32 - 1;
                Elem(t.exp[((order - t.log[a.index()]) % order) as usize])
            }
            None => self.pow_direct(a, self.q() - 2),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Dispatch on an [`ArithOp`]; unary ops ignore `b`.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
        })
    }

    /// Discrete log with respect to [`FieldCtx::generator`], when tables exist.
    pub fn log(&self, a: Elem) -> Option<u64> {
        match (&self.inner.tables, a.is_zero()) {
            (Some(t), false) => Some(t.log[a.index()] as u64),
            _ => None,
        }
    }

    // ---- Frobenius, traces, subfields -----------------------------------

    /// `a^(p^j)`.
    pub fn frobenius(&self, a: Elem, j: u32) -> Elem {
        self.pow(a, pow_mod(self.p(), j as u64, self.q() - 1).max(1))
    }

    /// `a^(r^j)` where `r` is the order of the tower base.
    pub fn relative_frobenius(&self, a: Elem, j: u32) -> Elem {
        let r = self.base().map_or(self.p(), |b| b.q());
        self.pow(a, pow_mod(r, j as u64, self.q() - 1).max(1))
    }

    /// Trace down to the prime field, returned as a prime-field encoding.
    pub fn absolute_trace(&self, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..self.n() {
            acc = self.add(acc, x);
            x = self.pow(x, self.p());
        }
        debug_assert!((acc.0 as u64) < self.p());
        acc
    }

    /// Relative trace to the tower base: the sum of the conjugates under
    /// `a -> a^r`, returned as a base element.
    pub fn trace_to_base(&self, a: Elem) -> Result<Elem> {
        let t = self.tower().ok_or(Error::NoTowerLink)?;
        let mut acc = Elem::ZERO;
        for j in 0..t.degree {
            acc = self.add(acc, self.relative_frobenius(a, j));
        }
        Ok(self.project(acc)?.expect("traces lie in the base field"))
    }

    /// The injective ring map from the tower base.
    pub fn embed(&self, a: Elem) -> Result<Elem> {
        let t = self.tower().ok_or(Error::NoTowerLink)?;
        t.base.check(a)
    }

    /// The preimage of `a` under [`FieldCtx::embed`], if `a` lies in the base.
    pub fn project(&self, a: Elem) -> Result<Option<Elem>> {
        let t = self.tower().ok_or(Error::NoTowerLink)?;
        Ok(((a.0 as u64) < t.base.q()).then_some(a))
    }

    /// Coordinates of `a` over the tower base, constant coordinate first.
    pub fn coords(&self, a: Elem) -> Result<Vec<Elem>> {
        let t = self.tower().ok_or(Error::NoTowerLink)?;
        Ok(self
            .digits(a, t.base.q(), t.degree as usize)
            .into_iter()
            .map(|d| Elem(d as u32))
            .collect())
    }

    /// Inverse of [`FieldCtx::coords`].
    pub fn from_coords(&self, coords: &[Elem]) -> Result<Elem> {
        let t = self.tower().ok_or(Error::NoTowerLink)?;
        if coords.len() != t.degree as usize {
            return Err(Error::precondition("coordinate vector has the wrong length"));
        }
        for &c in coords {
            t.base.check(c)?;
        }
        Ok(Self::pack(t.base.q(), coords.iter().map(|c| c.0 as u64)))
    }

    // ---- multiplicative order -------------------------------------------

    pub fn is_generator(&self, a: Elem) -> bool {
        if a.is_zero() {
            return false;
        }
        let order = self.q() - 1;
        prime_factors(order)
            .into_iter()
            .all(|r| self.pow_direct(a, order / r) != Elem::ONE)
    }

    /// The smallest-encoded generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.elements()
            .find(|&a| self.is_generator(a))
            .expect("the multiplicative group is cyclic")
    }

    pub fn is_square(&self, a: Elem) -> bool {
        if a.is_zero() || self.p() == 2 {
            return true;
        }
        self.pow(a, (self.q() - 1) / 2) == Elem::ONE
    }

    /// Square root in characteristic 2: `a^(2^(n-1))`.
    pub fn sqrt_binary(&self, a: Elem) -> Result<Elem> {
        if self.p() != 2 {
            return Err(Error::precondition("square roots by Frobenius need characteristic 2"));
        }
        Ok(self.frobenius(a, self.n() - 1))
    }
}

fn check_order(p: u64, n: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::precondition("extension degree must be at least 1"));
    }
    if (p as u128).pow(n) > 1u128 << 32 {
        return Err(Error::FieldTooLarge { p, n });
    }
    Ok(())
}

/// Carryless product of two elements of GF(2^n), reduced by `modulus`.
fn clmul_reduce(a: u64, b: u64, modulus: u64, n: u32) -> u32 {
    let mut prod = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            prod ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    for i in (n..2 * n).rev() {
        if prod >> i & 1 == 1 {
            prod ^= modulus << (i - n);
        }
    }
    prod as u32
}

#[cfg(test)]
mod tests;
