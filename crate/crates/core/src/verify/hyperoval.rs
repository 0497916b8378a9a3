use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{require_binary, Caps, Counterexample, VerifyReport};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::poly::FieldMap;

/// A point of PG(2, q), scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ProjPoint([Elem; 3]);

impl ProjPoint {
    pub fn new(field: &FieldCtx, v: [Elem; 3]) -> Result<ProjPoint> {
        let lead = v
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::precondition("(0, 0, 0) is not a projective point"))?;
        let s = field.inv(lead)?;
        Ok(ProjPoint(v.map(|c| field.mul(c, s))))
    }

    pub fn coords(&self) -> [Elem; 3] {
        self.0
    }
}

pub(crate) fn det3(k: &FieldCtx, p: &[ProjPoint; 3]) -> Elem {
    let [a, b, c] = p.map(|x| x.0);
    let minor = |i: usize, j: usize| k.sub(k.mul(b[i], c[j]), k.mul(b[j], c[i]));
    let t0 = k.mul(a[0], minor(1, 2));
    let t1 = k.mul(a[1], minor(0, 2));
    let t2 = k.mul(a[2], minor(0, 1));
    k.add(k.sub(t0, t1), t2)
}

/// Builds `{(1, t, f(t))} ∪ {(0, 1, 0), (0, 0, 1)}` and checks that its
/// q + 2 points are distinct and no three are collinear. O(q^3) triples,
/// parallel over the first point; the lexicographically first collinear
/// triple is reported.
pub fn hyperoval_check(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<VerifyReport> {
    let start = Instant::now();
    let field = f.field().clone();
    require_binary(&field, "the hyperoval check")?;
    let q = field.q();
    Caps::check("hyperoval check", q, caps.hyper)?;
    let table = f.table();
    if !table[0].is_zero() {
        return Err(Error::precondition("hyperoval check needs f(0) = 0"));
    }
    if table[1] != Elem::ONE {
        return Err(Error::precondition("hyperoval check needs f(1) = 1; normalise first"));
    }
    let mut points: Vec<ProjPoint> = field
        .elements()
        .map(|t| ProjPoint::new(&field, [Elem::ONE, t, table[t.index()]]))
        .collect::<Result<_>>()?;
    points.push(ProjPoint::new(&field, [Elem::ZERO, Elem::ONE, Elem::ZERO])?);
    points.push(ProjPoint::new(&field, [Elem::ZERO, Elem::ZERO, Elem::ONE])?);
    let distinct: HashSet<&ProjPoint> = points.iter().collect();
    debug_assert_eq!(
        distinct.len(),
        points.len(),
        "first coordinates and t make points distinct"
    );
    let n = points.len();
    let found = (0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            for k in j + 1..n {
                let triple = [points[i], points[j], points[k]];
                if det3(&field, &triple).is_zero() {
                    return Some(triple);
                }
            }
        }
        None
    });
    let domain = n as u64;
    Ok(match found {
        None => VerifyReport::pass(domain, start),
        Some(points) => VerifyReport::fail(domain, start, Counterexample::Collinear { points }),
    })
}
