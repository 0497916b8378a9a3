//! Polynomials and black-box maps over a [`FieldCtx`].
//!
//! [`TermPoly`] is a sparse polynomial whose exponents may be fractions such as
//! `1/6`, bound to a field when the polynomial is built. [`PolyFn`] is an
//! opaque total map, used for constructions that are written in terms of
//! `z` and `z^q` rather than coefficients. Both implement [`FieldMap`], which
//! is all the oracles need.

mod dickson;
mod interp;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use dickson::{
    dickson, dickson_coefficient, dickson_dense, dickson_recurrence, dickson_value, reduce_dickson_index, DicksonSpec,
};
pub use interp::{interpolate, DEFAULT_INTERP_CAP};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, FracExp};

/// Domains at least this large are tabulated in parallel.
const PAR_TABLE: u64 = 1 << 12;

/// A total map from a field to itself.
pub trait FieldMap: Send + Sync {
    fn field(&self) -> &FieldCtx;

    fn eval(&self, x: Elem) -> Elem;

    /// An owned, cheaply clonable handle on the same map.
    fn to_fn(&self) -> PolyFn;

    /// The value table, indexed by input encoding.
    fn table(&self) -> Vec<Elem> {
        let q = self.field().q();
        if q >= PAR_TABLE {
            (0..q).into_par_iter().map(|e| self.eval(Elem(e as u32))).collect()
        } else {
            (0..q).map(|e| self.eval(Elem(e as u32))).collect()
        }
    }
}

impl<T: FieldMap + ?Sized> FieldMap for &T {
    fn field(&self) -> &FieldCtx {
        (**self).field()
    }
    fn eval(&self, x: Elem) -> Elem {
        (**self).eval(x)
    }
    fn to_fn(&self) -> PolyFn {
        (**self).to_fn()
    }
    fn table(&self) -> Vec<Elem> {
        (**self).table()
    }
}

// ---- PolyFn ----------------------------------------------------------------

type EvalFn = dyn Fn(Elem) -> Elem + Send + Sync;

#[derive(Clone)]
pub struct PolyFn {
    field: FieldCtx,
    f: Arc<EvalFn>,
}

impl fmt::Debug for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFn({})", self.field)
    }
}

impl PolyFn {
    pub fn new(field: &FieldCtx, f: impl Fn(Elem) -> Elem + Send + Sync + 'static) -> PolyFn {
        PolyFn {
            field: field.clone(),
            f: Arc::new(f),
        }
    }

    pub fn identity(field: &FieldCtx) -> PolyFn {
        PolyFn::new(field, |x| x)
    }

    pub fn constant(field: &FieldCtx, c: Elem) -> PolyFn {
        PolyFn::new(field, move |_| c)
    }

    /// A map given by its value table, indexed by input encoding.
    pub fn from_table(field: &FieldCtx, table: Vec<Elem>) -> Result<PolyFn> {
        if table.len() as u64 != field.q() {
            return Err(Error::precondition(format!(
                "value table has {} entries, field has {}",
                table.len(),
                field.q()
            )));
        }
        for &v in &table {
            field.elem(v.0 as u64)?;
        }
        let table: Arc<[Elem]> = table.into();
        Ok(PolyFn::new(field, move |x| table[x.index()]))
    }

    /// Evaluates `map` everywhere once and serves later calls from the table.
    pub fn tabulate(map: &(impl FieldMap + ?Sized)) -> PolyFn {
        let table: Arc<[Elem]> = map.table().into();
        PolyFn::new(map.field(), move |x| table[x.index()])
    }
}

impl FieldMap for PolyFn {
    fn field(&self) -> &FieldCtx {
        &self.field
    }
    fn eval(&self, x: Elem) -> Elem {
        (self.f)(x)
    }
    fn to_fn(&self) -> PolyFn {
        self.clone()
    }
}

/// Pointwise `f(g(x))`.
pub fn compose(f: &(impl FieldMap + ?Sized), g: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    if f.field() != g.field() {
        return Err(Error::precondition("composition of maps over different fields"));
    }
    let (f, g) = (f.to_fn(), g.to_fn());
    let field = f.field().clone();
    Ok(PolyFn::new(&field, move |x| f.eval(g.eval(x))))
}

/// Whether two maps agree on every element of their common field.
pub fn agree(f: &(impl FieldMap + ?Sized), g: &(impl FieldMap + ?Sized)) -> bool {
    f.field() == g.field() && f.field().elements().all(|x| f.eval(x) == g.eval(x))
}

/// The first input where two maps disagree, if any.
pub fn first_disagreement(f: &(impl FieldMap + ?Sized), g: &(impl FieldMap + ?Sized)) -> Option<Elem> {
    f.field().elements().find(|&x| f.eval(x) != g.eval(x))
}

// ---- TermPoly --------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Term {
    /// The exponent as written.
    pub exp: FracExp,
    /// The exponent resolved against the field: 0, or a value in `[1, q-1]`.
    pub resolved: u64,
    pub coeff: Elem,
}

/// A sparse polynomial with nonzero coefficients and distinct resolved
/// exponents, stored in increasing resolved order.
#[derive(Debug, Clone)]
pub struct TermPoly {
    field: FieldCtx,
    terms: Vec<Term>,
}

impl PartialEq for TermPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|(a, b)| a.resolved == b.resolved && a.coeff == b.coeff)
    }
}

impl Eq for TermPoly {}

impl TermPoly {
    /// Builds a polynomial, rejecting exponents that resolve to the same value.
    /// Zero coefficients are dropped.
    pub fn new(field: &FieldCtx, terms: impl IntoIterator<Item = (FracExp, Elem)>) -> Result<TermPoly> {
        let mut out: Vec<Term> = Vec::new();
        for (exp, coeff) in terms {
            field.elem(coeff.0 as u64)?;
            let resolved = exp.resolve(field.q())?;
            if out.iter().any(|t| t.resolved == resolved) {
                return Err(Error::precondition(format!(
                    "exponent {exp} resolves to {resolved}, which is already present"
                )));
            }
            out.push(Term { exp, resolved, coeff });
        }
        out.retain(|t| !t.coeff.is_zero());
        out.sort_by_key(|t| t.resolved);
        Ok(TermPoly {
            field: field.clone(),
            terms: out,
        })
    }

    /// Builds the reduced polynomial: terms whose exponents resolve to the same
    /// value are added together and exponents are rewritten as their resolved
    /// integers.
    pub fn reduced(field: &FieldCtx, terms: impl IntoIterator<Item = (FracExp, Elem)>) -> Result<TermPoly> {
        let mut acc: std::collections::BTreeMap<u64, Elem> = Default::default();
        for (exp, coeff) in terms {
            field.elem(coeff.0 as u64)?;
            let r = exp.resolve(field.q())?;
            let slot = acc.entry(r).or_insert(Elem::ZERO);
            *slot = field.add(*slot, coeff);
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, coeff)| Term {
                exp: FracExp::int(r as i64),
                resolved: r,
                coeff,
            })
            .collect();
        Ok(TermPoly {
            field: field.clone(),
            terms,
        })
    }

    pub fn zero(field: &FieldCtx) -> TermPoly {
        TermPoly {
            field: field.clone(),
            terms: Vec::new(),
        }
    }

    pub fn identity(field: &FieldCtx) -> TermPoly {
        Self::monomial(field, 1, Elem::ONE).expect("x always resolves")
    }

    pub fn constant(field: &FieldCtx, c: Elem) -> Result<TermPoly> {
        Self::monomial(field, 0, c)
    }

    pub fn monomial(field: &FieldCtx, exp: impl Into<FracExp>, coeff: Elem) -> Result<TermPoly> {
        Self::new(field, [(exp.into(), coeff)])
    }

    /// Parses the text form `EXP:COEFF,EXP:COEFF,...`; whitespace is ignored
    /// and positions in errors refer to the string with whitespace removed.
    ///
    /// ```
    /// use gfperm::{FieldCtx, poly::{FieldMap, TermPoly}};
    /// let f = FieldCtx::new(2, 5).unwrap();
    /// let payne = TermPoly::parse(&f, "5/6:1, 3/6:1, 1/6:1").unwrap();
    /// let exps: Vec<u64> = payne.terms().iter().map(|t| t.resolved).collect();
    /// assert_eq!(exps, vec![6, 16, 26]);
    /// assert_eq!(payne.to_string(), "5/6:1,3/6:1,1/6:1");
    /// ```
    pub fn parse(field: &FieldCtx, text: &str) -> Result<TermPoly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(Self::zero(field));
        }
        let mut terms = Vec::new();
        let mut pos = 0;
        for piece in s.split(',') {
            let (e, c) = piece
                .split_once(':')
                .ok_or_else(|| Error::parse(pos, format!("term {piece:?} is not EXP:COEFF")))?;
            let exp: FracExp = e
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad exponent {e:?}")))?;
            let cpos = pos + e.len() + 1;
            let coeff: u64 = c
                .parse()
                .map_err(|_| Error::parse(cpos, format!("bad coefficient {c:?}")))?;
            terms.push((exp, field.elem(coeff)?));
            pos += piece.len() + 1;
        }
        Self::new(field, terms)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest resolved exponent.
    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|t| t.resolved)
    }

    /// Coefficient of the resolved exponent `r`.
    pub fn coeff(&self, r: u64) -> Elem {
        self.terms
            .iter()
            .find(|t| t.resolved == r)
            .map_or(Elem::ZERO, |t| t.coeff)
    }

    pub fn scale(&self, c: Elem) -> TermPoly {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: f.mul(t.coeff, c),
                ..*t
            })
            .filter(|t| !t.coeff.is_zero())
            .collect();
        TermPoly {
            field: f.clone(),
            terms,
        }
    }
}

impl FieldMap for TermPoly {
    fn field(&self) -> &FieldCtx {
        &self.field
    }

    fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.terms
            .iter()
            .fold(Elem::ZERO, |acc, t| f.add(acc, f.mul(t.coeff, f.pow(x, t.resolved))))
    }

    fn to_fn(&self) -> PolyFn {
        let p = self.clone();
        PolyFn::new(&self.field, move |x| p.eval(x))
    }
}

fn cmp_exp(a: &FracExp, b: &FracExp) -> Ordering {
    (a.num as i128 * b.den as i128).cmp(&(b.num as i128 * a.den as i128))
}

impl fmt::Display for TermPoly {
    /// Terms in decreasing order of their written exponent, as `EXP:COEFF`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| cmp_exp(&b.exp, &a.exp).then(b.resolved.cmp(&a.resolved)));
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", t.exp, t.coeff)?;
        }
        Ok(())
    }
}

/// `sum c_j x^(p^j)`; the result is additive and GF(p)-linear as a map.
pub fn linearized(field: &FieldCtx, coeffs: &[(u32, Elem)]) -> Result<TermPoly> {
    let (p, n) = (field.p(), field.n());
    TermPoly::reduced(
        field,
        coeffs.iter().map(|&(j, c)| (FracExp::int(p.pow(j % n) as i64), c)),
    )
}

/// `f(1)^-1 f`, so the result fixes 1.
pub fn normalize(f: &TermPoly) -> Result<TermPoly> {
    let s = f.eval(Elem::ONE);
    if s.is_zero() {
        return Err(Error::precondition("cannot normalise: f(1) = 0"));
    }
    Ok(f.scale(f.field().inv(s)?))
}

/// [`normalize`] for black-box maps.
pub fn normalize_map(f: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    let field = f.field().clone();
    let s = f.eval(Elem::ONE);
    if s.is_zero() {
        return Err(Error::precondition("cannot normalise: f(1) = 0"));
    }
    let c = field.inv(s)?;
    let g = f.to_fn();
    let k = field.clone();
    Ok(PolyFn::new(&field, move |x| k.mul(c, g.eval(x))))
}

#[cfg(test)]
mod tests;
