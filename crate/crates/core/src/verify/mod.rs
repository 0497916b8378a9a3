//! Exhaustive oracles: permutation, o-polynomial, hyperoval, inverse.
//!
//! Every check enumerates the whole field. Failures carry a counterexample
//! that [`Counterexample::recheck`] confirms independently.

mod hyperoval;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub use hyperoval::{hyperoval_check, ProjPoint};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::poly::{interpolate, FieldMap, PolyFn, TermPoly};

/// Size limits for the exhaustive checks, in field order `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub pp: u64,
    pub opoly: u64,
    pub hyper: u64,
    pub interp: u64,
    pub construct: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pp: 1 << 24,
            opoly: 1 << 12,
            hyper: 1 << 7,
            interp: crate::poly::DEFAULT_INTERP_CAP,
            construct: 1 << 20,
        }
    }
}

impl Caps {
    fn check(what: &'static str, q: u64, cap: u64) -> Result<()> {
        if q > cap {
            return Err(Error::CapExceeded { what, q, cap });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// `f(x1) = f(x2) = value` with `x1 < x2`.
    Collision { x1: Elem, x2: Elem, value: Elem },
    /// An o-polynomial must vanish at 0.
    NonzeroAtZero { value: Elem },
    /// `x -> (f(x+s) + f(s)) x^(q-2)` collides at `x1 < x2`.
    Shift { s: Elem, x1: Elem, x2: Elem, value: Elem },
    /// Three points of the candidate hyperoval on one line.
    Collinear { points: [ProjPoint; 3] },
    /// A closed-form criterion that does not hold.
    Criterion { name: String },
}

impl Counterexample {
    /// Confirms the violation against `f` without reusing the oracle's code.
    pub fn recheck(&self, f: &(impl FieldMap + ?Sized)) -> bool {
        let k = f.field();
        match self {
            Counterexample::Collision { x1, x2, value } => x1 != x2 && f.eval(*x1) == *value && f.eval(*x2) == *value,
            Counterexample::NonzeroAtZero { value } => !value.is_zero() && f.eval(Elem::ZERO) == *value,
            Counterexample::Shift { s, x1, x2, value } => {
                let fs = |x: Elem| k.mul(k.add(f.eval(k.add(x, *s)), f.eval(*s)), k.inv_or_zero(x));
                x1 != x2 && fs(*x1) == *value && fs(*x2) == *value
            }
            Counterexample::Collinear { points } => {
                let on_graph = |p: &ProjPoint| {
                    let [a, b, c] = p.coords();
                    a != Elem::ONE || f.eval(b) == c
                };
                points.iter().all(on_graph) && hyperoval::det3(k, points).is_zero()
            }
            Counterexample::Criterion { .. } => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: bool,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
    pub domain_size: u64,
}

impl VerifyReport {
    fn pass(domain_size: u64, start: Instant) -> Self {
        VerifyReport {
            verdict: true,
            counterexample: None,
            elapsed: start.elapsed(),
            domain_size,
        }
    }

    fn fail(domain_size: u64, start: Instant, cx: Counterexample) -> Self {
        VerifyReport {
            verdict: false,
            counterexample: Some(cx),
            elapsed: start.elapsed(),
            domain_size,
        }
    }

    /// The stable JSON shape. `elapsed_ms` is reported as 0 unless `timings`
    /// is set, so identical runs give identical output.
    pub fn to_json(&self, timings: bool) -> serde_json::Value {
        json!({
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "domain_size": self.domain_size,
            "elapsed_ms": if timings { self.elapsed.as_millis() as u64 } else { 0 },
        })
    }
}

/// Smallest `(x1, x2)` in the order of `x2` with `table[x1] == table[x2]`.
fn first_collision(table: &[Elem]) -> Option<(usize, usize)> {
    let mut seen = vec![u32::MAX; table.len()];
    for (x, v) in table.iter().enumerate() {
        let slot = &mut seen[v.index()];
        if *slot != u32::MAX {
            return Some((*slot as usize, x));
        }
        *slot = x as u32;
    }
    None
}

const CHUNK: usize = 1 << 16;

/// Whether the value table hits every element exactly once. Large tables are
/// split into chunks whose bitmaps are built in parallel and merged by OR; an
/// overlap during the merge means a collision.
fn table_is_bijective(table: &[Elem]) -> bool {
    let q = table.len();
    let words = q.div_ceil(64);
    if q <= CHUNK {
        let mut bits = vec![0u64; words];
        for v in table {
            let (w, b) = (v.index() / 64, v.index() % 64);
            if bits[w] >> b & 1 == 1 {
                return false;
            }
            bits[w] |= 1 << b;
        }
        return true;
    }
    let partial: Option<Vec<u64>> = table
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut bits = vec![0u64; words];
            for v in chunk {
                let (w, b) = (v.index() / 64, v.index() % 64);
                if bits[w] >> b & 1 == 1 {
                    return None;
                }
                bits[w] |= 1 << b;
            }
            Some(bits)
        })
        .try_reduce(
            || vec![0u64; words],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    if *x & *y != 0 {
                        return None;
                    }
                    *x |= *y;
                }
                Some(a)
            },
        );
    partial.is_some()
}

/// Bitmap permutation oracle.
///
/// ```
/// use gfperm::{FieldCtx, poly::TermPoly, verify::{is_permutation, Caps}};
/// let f = FieldCtx::new(2, 2).unwrap();
/// let cube = TermPoly::parse(&f, "3:1").unwrap();
/// let report = is_permutation(&cube, &Caps::default()).unwrap();
/// assert!(!report.verdict);
/// ```
pub fn is_permutation(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<VerifyReport> {
    let start = Instant::now();
    let q = f.field().q();
    Caps::check("permutation check", q, caps.pp)?;
    let table = f.table();
    Ok(permutation_report(&table, q, start))
}

/// [`is_permutation`] on a precomputed value table.
pub fn is_permutation_table(field: &FieldCtx, table: &[Elem]) -> VerifyReport {
    assert_eq!(table.len() as u64, field.q());
    permutation_report(table, field.q(), Instant::now())
}

fn permutation_report(table: &[Elem], q: u64, start: Instant) -> VerifyReport {
    if table_is_bijective(table) {
        return VerifyReport::pass(q, start);
    }
    let (x1, x2) = first_collision(table).expect("non-bijective tables collide");
    VerifyReport::fail(
        q,
        start,
        Counterexample::Collision {
            x1: Elem(x1 as u32),
            x2: Elem(x2 as u32),
            value: table[x1],
        },
    )
}

/// Sort-based permutation oracle, sharing no code with the bitmap path:
/// sort the values with their inputs and look for equal neighbours.
pub fn is_permutation_by_sort(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<VerifyReport> {
    let start = Instant::now();
    let field = f.field();
    let q = field.q();
    Caps::check("permutation check", q, caps.pp)?;
    let mut pairs: Vec<(u32, u32)> = field.elements().map(|x| (f.eval(x).0, x.0)).collect();
    pairs.par_sort_unstable();
    let hit = pairs.windows(2).find(|w| w[0].0 == w[1].0);
    Ok(match hit {
        None => VerifyReport::pass(q, start),
        Some(w) => VerifyReport::fail(
            q,
            start,
            Counterexample::Collision {
                x1: Elem(w[0].1),
                x2: Elem(w[1].1),
                value: Elem(w[0].0),
            },
        ),
    })
}

fn require_binary(field: &FieldCtx, what: &str) -> Result<()> {
    if field.p() != 2 {
        return Err(Error::precondition(format!(
            "{what} needs characteristic 2, got GF({})",
            field.q()
        )));
    }
    Ok(())
}

/// O(q^2) o-polynomial oracle: `f(0) = 0`, `f` is a permutation, and every
/// shift map `x -> (f(x+s) + f(s)) x^(q-2)` is a permutation. The shift
/// `s = 0` runs first; later shifts run in parallel and the smallest failing
/// shift is reported.
pub fn is_opolynomial(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<VerifyReport> {
    let start = Instant::now();
    let field = f.field().clone();
    require_binary(&field, "the o-polynomial check")?;
    let q = field.q();
    Caps::check("o-polynomial check", q, caps.opoly)?;
    let table = f.table();
    if !table[0].is_zero() {
        return Ok(VerifyReport::fail(
            q,
            start,
            Counterexample::NonzeroAtZero { value: table[0] },
        ));
    }
    let base = permutation_report(&table, q, start);
    if !base.verdict {
        return Ok(base);
    }
    let inv: Vec<Elem> = field.elements().map(|x| field.inv_or_zero(x)).collect();
    let shift_failure = |s: u64| -> Option<Counterexample> {
        let s = Elem(s as u32);
        let fs = table[s.index()];
        let mut seen = vec![u32::MAX; q as usize];
        for x in field.elements() {
            let v = field.mul(Elem(table[(x.0 ^ s.0) as usize].0 ^ fs.0), inv[x.index()]);
            let slot = &mut seen[v.index()];
            if *slot != u32::MAX {
                return Some(Counterexample::Shift {
                    s,
                    x1: Elem(*slot),
                    x2: x,
                    value: v,
                });
            }
            *slot = x.0;
        }
        None
    };
    let failure = shift_failure(0).or_else(|| (1..q).into_par_iter().find_map_first(shift_failure));
    Ok(match failure {
        None => VerifyReport::pass(q, start),
        Some(cx) => VerifyReport::fail(q, start, cx),
    })
}

/// The polynomial `g` of degree < q with `g(f(x)) = x` everywhere.
pub fn compositional_inverse(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<TermPoly> {
    let g = inverse_map(f, caps)?;
    interpolate(&g, caps.interp)
}

/// The inverse permutation as a table-backed map, without interpolation.
pub fn inverse_map(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<PolyFn> {
    let field = f.field();
    Caps::check("permutation check", field.q(), caps.pp)?;
    let table = f.table();
    if let Some((x1, x2)) = first_collision(&table) {
        return Err(Error::NotPermutation {
            x1: x1 as u32,
            x2: x2 as u32,
            value: table[x1].0,
        });
    }
    let mut inv = vec![Elem::ZERO; table.len()];
    for (x, y) in table.iter().enumerate() {
        inv[y.index()] = Elem(x as u32);
    }
    PolyFn::from_table(field, inv)
}
