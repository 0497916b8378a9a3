use rayon::prelude::*;

use super::{FieldMap, TermPoly};
use crate::error::{Error, Result};
use crate::field::{Elem, FracExp};

pub const DEFAULT_INTERP_CAP: u64 = 4096;

/// The unique reduced polynomial (degree < q) agreeing with `map` everywhere.
///
/// With `P(x) = sum_a f(a) (1 - (x - a)^(q-1))` the coefficients are
/// `c_0 = f(0)` and `c_j = -sum_(a != 0) f(a) a^(q-1-j)` for `1 <= j <= q-1`.
/// Cost is O(q^2) field operations, so `q` is capped.
pub fn interpolate(map: &(impl FieldMap + ?Sized), cap: u64) -> Result<TermPoly> {
    let field = map.field().clone();
    let q = field.q();
    if q > cap {
        return Err(Error::CapExceeded {
            what: "interpolation (evaluate the map directly instead)",
            q,
            cap,
        });
    }
    let values = map.table();
    let nonzero: Vec<(Elem, Elem)> = field
        .elements()
        .skip(1)
        .map(|a| (a, values[a.index()]))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    let coeffs: Vec<(FracExp, Elem)> = (1..q)
        .into_par_iter()
        .map(|j| {
            let s = nonzero.iter().fold(Elem::ZERO, |acc, &(a, v)| {
                field.add(acc, field.mul(v, field.pow(a, q - 1 - j)))
            });
            // j = q - 1 picks up a^0 = 1 for every nonzero a; f(0) adds in too
            let s = if j == q - 1 { field.add(s, values[0]) } else { s };
            (FracExp::int(j as i64), field.neg(s))
        })
        .collect();
    let mut terms = vec![(FracExp::ZERO, values[0])];
    terms.extend(coeffs);
    TermPoly::new(&field, terms)
}
