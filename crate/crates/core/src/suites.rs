//! Named parameter sweeps. Each case compares a predicted verdict with a
//! brute-force one and becomes one CSV row.

use std::io::Write;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::*;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::numtheory::gcd;
use crate::opoly::{all_transforms, catalog, stated_identities, stated_inverse, transform, Family, StatedInverse};
use crate::poly::{
    agree, dickson, dickson_dense, dickson_recurrence, dickson_value, normalize_map, FieldMap, PolyFn, TermPoly,
};
use crate::verify::{hyperoval_check, is_opolynomial, is_permutation, is_permutation_by_sort, Caps};

pub const SUITES: &[&str] = &[
    "opoly-all-m3",
    "opoly-all-m5",
    "opoly-translation",
    "opoly-adelaide-m4",
    "transforms-m3",
    "transforms-m5",
    "stated-inverses",
    "stated-identities",
    "t21-iff-q4",
    "t21-iff-q5",
    "t21-iff-q8",
    "t21-iff-q9",
    "t21-iff-m3",
    "construct-f",
    "f123-iff",
    "g-sufficiency",
    "f1-monomial",
    "dickson",
    "tower-x3",
    "t71",
    "t72",
    "t73",
    "t74",
    "oracle-xval",
    "perm-oracles",
    "f-converse",
];

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub caps: Caps,
    /// Record wall time per case; off by default so output is reproducible.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            caps: Caps::default(),
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub suite: String,
    #[serde(rename = "case-id")]
    pub case_id: String,
    pub field: String,
    pub params: String,
    /// Empty when the theory makes no prediction for the case.
    pub predicted: Option<bool>,
    pub verified: bool,
    pub mismatch: bool,
    pub elapsed_ms: u64,
}

type Check = Box<dyn Fn() -> Result<(Option<bool>, bool)> + Send + Sync>;

struct Case {
    field: String,
    params: String,
    check: Check,
}

fn case(
    field: &FieldCtx,
    params: impl Into<String>,
    check: impl Fn() -> Result<(Option<bool>, bool)> + Send + Sync + 'static,
) -> Case {
    Case {
        field: field.spec(),
        params: params.into(),
        check: Box::new(check),
    }
}

/// Runs a named suite. Rows come back ordered by case id.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<Row>> {
    run_cases(name, build(name, cfg)?, cfg)
}

/// CSV with the header `suite,case-id,field,params,predicted,verified,mismatch,elapsed_ms`.
pub fn write_csv(rows: &[Row], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::precondition(format!("writing CSV: {e}"));
    for r in rows {
        w.serialize(r).map_err(io)?;
    }
    if rows.is_empty() {
        w.write_record([
            "suite",
            "case-id",
            "field",
            "params",
            "predicted",
            "verified",
            "mismatch",
            "elapsed_ms",
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::precondition(format!("writing CSV: {e}")))
}

pub fn mismatches(rows: &[Row]) -> usize {
    rows.iter().filter(|r| r.mismatch).count()
}

/// Every catalog member over GF(2^m) against the o-polynomial oracle, then
/// every transform of each member. Params start with the family id.
pub fn catalog_check(m: u32, cfg: &SuiteConfig) -> Result<Vec<Row>> {
    let mut cases = catalog_cases(&[m], |_| true, cfg)?;
    if m >= 2 {
        cases.extend(transform_cases(m, cfg)?);
    }
    run_cases(&format!("catalog-m{m}"), cases, cfg)
}

fn run_cases(name: &str, cases: Vec<Case>, cfg: &SuiteConfig) -> Result<Vec<Row>> {
    let width = cases.len().to_string().len().max(4);
    cases
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| {
            let start = Instant::now();
            let (predicted, verified) = (c.check)()?;
            Ok(Row {
                suite: name.to_string(),
                case_id: format!("{i:0width$}"),
                field: c.field,
                params: c.params,
                predicted,
                verified,
                mismatch: predicted.is_some_and(|p| p != verified),
                elapsed_ms: if cfg.timings {
                    start.elapsed().as_millis() as u64
                } else {
                    0
                },
            })
        })
        .collect()
}

fn build(name: &str, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let caps = cfg.caps;
    Ok(match name {
        "opoly-all-m3" => catalog_cases(&[3], |_| true, cfg)?,
        "opoly-all-m5" => catalog_cases(&[5], |_| true, cfg)?,
        "opoly-translation" => catalog_cases(&[2, 3, 4, 5], |f| f.tag() == "translation", cfg)?,
        "opoly-adelaide-m4" => catalog_cases(&[4], |f| f.tag() == "adelaide", cfg)?,
        "transforms-m3" => transform_cases(3, cfg)?,
        "transforms-m5" => transform_cases(5, cfg)?,
        "stated-inverses" => stated_inverse_cases(cfg)?,
        "stated-identities" => identity_cases()?,
        "t21-iff-q4" => t21_cases(&gf(2, 2)?, 2, 20, &mut rng, caps)?,
        "t21-iff-q5" => t21_cases(&gf(5, 1)?, 2, 20, &mut rng, caps)?,
        "t21-iff-q8" => t21_cases(&gf(2, 3)?, 2, 20, &mut rng, caps)?,
        "t21-iff-q9" => t21_cases(&gf(3, 2)?, 2, 20, &mut rng, caps)?,
        "t21-iff-m3" => t21_cases(&gf(2, 2)?, 3, 1, &mut rng, caps)?,
        "construct-f" => construct_f_cases(caps)?,
        "f123-iff" => f123_cases(&mut rng, caps)?,
        "g-sufficiency" => g_cases(&mut rng, caps)?,
        "f1-monomial" => f1_monomial_cases(caps)?,
        "dickson" => dickson_cases(caps)?,
        "tower-x3" => tower_cases(caps)?,
        "t71" | "t72" => quad_further_cases(name, caps)?,
        "t73" | "t74" => cubic_further_cases(name, caps)?,
        "oracle-xval" => xval_cases(&mut rng, caps)?,
        "perm-oracles" => perm_oracle_cases(caps)?,
        "f-converse" => f_converse_cases(&mut rng, caps)?,
        _ => {
            return Err(Error::precondition(format!(
                "unknown suite {name:?}; known suites: {}",
                SUITES.join(", ")
            )))
        }
    })
}

fn gf(p: u64, n: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, n)
}

fn pp(f: &(impl FieldMap + ?Sized), caps: &Caps) -> Result<bool> {
    Ok(is_permutation(f, caps)?.verdict)
}

fn mono(k: &FieldCtx, e: u64) -> Result<PolyFn> {
    Ok(TermPoly::monomial(k, e as i64, Elem::ONE)?.to_fn())
}

fn random_perm(k: &FieldCtx, rng: &mut ChaCha8Rng) -> Result<PolyFn> {
    let mut t: Vec<Elem> = k.elements().collect();
    t.shuffle(rng);
    PolyFn::from_table(k, t)
}

/// identity, Frobenius, x^3, a constant and five seeded random permutations.
fn function_family(k: &FieldCtx, rng: &mut ChaCha8Rng) -> Result<Vec<(String, PolyFn)>> {
    let mut out = vec![
        ("id".to_string(), PolyFn::identity(k)),
        (format!("x^{}", k.p()), mono(k, k.p())?),
        ("x^3".to_string(), mono(k, 3)?),
        ("const1".to_string(), PolyFn::constant(k, Elem::ONE)),
    ];
    for i in 0..5 {
        out.push((format!("perm{i}"), random_perm(k, rng)?));
    }
    Ok(out)
}

fn catalog_cases(ms: &[u32], keep: impl Fn(&Family) -> bool, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let caps = cfg.caps;
    let mut out = Vec::new();
    for &m in ms {
        let k = gf(2, m)?;
        for fam in catalog(&k)?.into_iter().filter(|f| keep(f)) {
            let inst = fam.instantiate(&k)?;
            out.push(case(&k, fam.to_string(), move || {
                Ok((Some(true), is_opolynomial(&inst, &caps)?.verdict))
            }));
        }
    }
    Ok(out)
}

fn transform_cases(m: u32, cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let caps = cfg.caps;
    let k = gf(2, m)?;
    let mut out = Vec::new();
    for fam in catalog(&k)? {
        let inst = fam.instantiate(&k)?.to_fn();
        for t in all_transforms(m) {
            let inst = inst.clone();
            out.push(case(&k, format!("{fam};{t}"), move || {
                let g = transform(&inst, t, &caps)?;
                Ok((Some(true), is_opolynomial(&g, &caps)?.verdict))
            }));
        }
    }
    Ok(out)
}

fn stated_inverse_cases(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let caps = cfg.caps;
    let mut out = Vec::new();
    for m in [3u32, 5] {
        let k = gf(2, m)?;
        let mut which = vec![
            StatedInverse::Payne1,
            StatedInverse::SegreBar1,
            StatedInverse::Segre { a: 0 },
            StatedInverse::Segre { a: 1 },
        ];
        which.extend((1..k.q() as u32).map(|a| StatedInverse::Cherowitzo { a }));
        which.extend(
            (1..m)
                .filter(|&h| gcd(h as u64, m as u64) == 1)
                .map(|h| StatedInverse::Translation { h }),
        );
        for w in which {
            let k2 = k.clone();
            out.push(case(&k, w.to_string(), move || {
                let target = w.target(&k2)?;
                let inv = crate::verify::inverse_map(&target, &caps)?;
                Ok((Some(true), agree(&inv, &stated_inverse(w, &k2)?)))
            }));
        }
    }
    Ok(out)
}

fn identity_cases() -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for m in [3u32, 5] {
        let k = gf(2, m)?;
        for a in k.elements() {
            for id in stated_identities(&k, a)? {
                let tag = if id.stated { "stated" } else { "repaired" };
                let params = format!("a={a};{tag};{}", id.name);
                out.push(case(&k, params, move || {
                    Ok((Some(true), id.first_mismatch().is_none()))
                }));
            }
        }
    }
    Ok(out)
}

fn t21_cases(base: &FieldCtx, m: u32, frames: usize, rng: &mut ChaCha8Rng, caps: Caps) -> Result<Vec<Case>> {
    let ext = if m == 2 {
        base.extend_quadratic(None)?
    } else {
        base.extend_cubic()?
    };
    let fam = function_family(base, rng)?;
    let pps: Vec<bool> = fam.iter().map(|(_, f)| pp(f, &caps)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for fi in 0..frames {
        let frame = GeneralFrame::random(&ext, rng)?;
        let mut idx = vec![0usize; m as usize];
        loop {
            let fs: Vec<PolyFn> = idx.iter().map(|&i| fam[i].1.clone()).collect();
            let names: Vec<&str> = idx.iter().map(|&i| fam[i].0.as_str()).collect();
            let predicted = idx.iter().all(|&i| pps[i]);
            let frame = frame.clone();
            out.push(case(&ext, format!("frame={fi};{}", names.join(";")), move || {
                Ok((Some(predicted), pp(&theorem21_lift(&frame, &fs)?, &caps)?))
            }));
            // odometer over all m-tuples of the family
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < fam.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

fn construct_f_cases(caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for m in [3u32, 5] {
        let base = gf(2, m)?;
        for beta in [BetaChoice::Root, BetaChoice::Generator] {
            let frame = QuadFrame::over(&base, beta)?;
            for fam in catalog(&base)? {
                let f = fam.instantiate(&base)?.to_fn();
                let frame = frame.clone();
                out.push(case(&frame.ext().clone(), format!("{fam};beta={beta}"), move || {
                    Ok((Some(true), pp(&construct_f(&frame, &f)?, &caps)?))
                }));
            }
        }
    }
    Ok(out)
}

fn f123_cases(rng: &mut ChaCha8Rng, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for base in [gf(2, 2)?, gf(5, 1)?, gf(2, 3)?, gf(3, 2)?] {
        let fam = function_family(&base, rng)?;
        let pps: Vec<bool> = fam.iter().map(|(_, f)| pp(f, &caps)).collect::<Result<_>>()?;
        for beta in [BetaChoice::Root, BetaChoice::Generator] {
            let frame = QuadFrame::over(&base, beta)?;
            for kind in ["F1", "F2", "F3"] {
                for (i, (n1, f1)) in fam.iter().enumerate() {
                    for (j, (n2, f2)) in fam.iter().enumerate() {
                        let (frame, f1, f2) = (frame.clone(), f1.clone(), f2.clone());
                        let predicted = pps[i] && pps[j];
                        out.push(case(
                            &frame.ext().clone(),
                            format!("{kind};f1={n1};f2={n2};beta={beta}"),
                            move || {
                                let g = match kind {
                                    "F1" => construct_f1(&frame, &f1, &f2)?,
                                    "F2" => construct_f2(&frame, &f1, &f2)?,
                                    _ => construct_f3(&frame, &f1, &f2)?,
                                };
                                Ok((Some(predicted), pp(&g, &caps)?))
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn g_cases(rng: &mut ChaCha8Rng, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for m in [2u32, 3, 4] {
        let base = gf(2, m)?;
        for i in 0..10 {
            let f = random_perm(&base, rng)?;
            for beta in [BetaChoice::Root, BetaChoice::Generator] {
                let frame = QuadFrame::over(&base, beta)?;
                let f = f.clone();
                out.push(case(&frame.ext().clone(), format!("perm{i};beta={beta}"), move || {
                    Ok((Some(true), pp(&construct_g(&frame, &f)?, &caps)?))
                }));
            }
        }
    }
    Ok(out)
}

fn f1_monomial_cases(caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for base in [gf(7, 1)?, gf(2, 3)?, gf(3, 2)?] {
        let frame = QuadFrame::over(&base, BetaChoice::Root)?;
        let q = base.q();
        let (eta, gamma) = (Elem::ONE, base.generator());
        for u in 1..q {
            for v in 1..q {
                let f1 = TermPoly::monomial(&base, u as i64, eta)?;
                let f2 = TermPoly::monomial(&base, v as i64, gamma)?;
                let frame = frame.clone();
                out.push(case(&frame.ext().clone(), format!("u={u};v={v}"), move || {
                    Ok((
                        Some(gcd(u * v, q - 1) == 1),
                        pp(&construct_f1(&frame, &f1, &f2)?, &caps)?,
                    ))
                }));
            }
        }
    }
    Ok(out)
}

fn dickson_cases(caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for base in [gf(5, 1)?, gf(2, 3)?, gf(3, 2)?, gf(2, 4)?] {
        let q = base.q();
        for h in 1..=50u64 {
            let k = base.clone();
            out.push(case(&base, format!("coefficients;h={h}"), move || {
                Ok((
                    Some(true),
                    dickson_dense(h, Elem::ONE, &k)? == dickson_recurrence(h, Elem::ONE, &k)?,
                ))
            }));
            for a in base.elements().skip(1) {
                let k = base.clone();
                out.push(case(&base, format!("pp;h={h};a={a}"), move || {
                    let d = dickson(h, a, &k)?;
                    let agrees = {
                        let k2 = k.clone();
                        agree(&d, &PolyFn::new(&k, move |x| dickson_value(h, a, x, &k2)))
                    };
                    if !agrees {
                        return Err(Error::precondition(format!(
                            "Dickson evaluators disagree at h = {h}, a = {a}"
                        )));
                    }
                    Ok((Some(gcd(h, q * q - 1) == 1), pp(&d, &caps)?))
                }));
            }
        }
    }
    for base in [gf(5, 1)?, gf(2, 3)?] {
        let frame = QuadFrame::over(&base, BetaChoice::Root)?;
        for h in 1..=30u64 {
            for a in base.elements().skip(1) {
                let frame = frame.clone();
                out.push(case(&frame.ext().clone(), format!("pair;h={h};a={a}"), move || {
                    let (f, predicted) = dickson_pair(&frame, h, a)?;
                    Ok((Some(predicted), pp(&f, &caps)?))
                }));
            }
        }
    }
    Ok(out)
}

fn tower_cases(caps: Caps) -> Result<Vec<Case>> {
    let base = gf(2, 3)?;
    let cube = mono(&base, 3)?;
    let mut out = Vec::new();
    for scheme in [TowerScheme::F1, TowerScheme::F3, TowerScheme::G] {
        for depth in 1..=2u32 {
            let f = cube.clone();
            let ext = (0..depth).try_fold(base.clone(), |k, _| k.extend_quadratic(None))?;
            out.push(case(&ext, format!("f=3:1;depth={depth};scheme={scheme}"), move || {
                let levels = tower_iterate(&f, depth, scheme, &caps)?;
                Ok((Some(true), pp(levels.last().expect("non-empty"), &caps)?))
            }));
        }
    }
    Ok(out)
}

fn quad_further_cases(name: &str, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for base in [gf(5, 1)?, gf(7, 1)?, gf(3, 2)?] {
        let frame = QuadFrame::over(&base, BetaChoice::Root)?;
        for a in base.elements() {
            for b in base.elements() {
                for u in base.elements() {
                    for t in 1..=8u64 {
                        let frame = frame.clone();
                        let t71 = name == "t71";
                        out.push(case(
                            &frame.ext().clone(),
                            format!("a={a};b={b};u={u};t={t}"),
                            move || {
                                let (f, predicted) = if t71 {
                                    further_t71(&frame, a, b, u, t)?
                                } else {
                                    further_t72(&frame, a, b, u, t)?
                                };
                                Ok((Some(predicted), pp(&f, &caps)?))
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn cubic_further_cases(name: &str, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for base in [gf(2, 2)?, gf(7, 1)?] {
        let frame = CubicFrame::over(&base)?;
        let us = [Elem::ZERO, Elem::ONE];
        for a in base.elements() {
            for b in base.elements() {
                for c in base.elements() {
                    for u in us {
                        for t in 1..=8u64 {
                            let frame = frame.clone();
                            let mut params = format!("a={a};b={b};c={c};u={u};t={t}");
                            if name == "t73" {
                                out.push(case(&frame.ext().clone(), params, move || {
                                    let (f, predicted) = cubic_t73(&frame, a, b, c, u, t)?;
                                    Ok((Some(predicted), pp(&f, &caps)?))
                                }));
                            } else {
                                let derived = cubic_t74_derived(&frame, a, b, c, t)?;
                                params.push_str(&format!(";derived={derived}"));
                                out.push(case(&frame.ext().clone(), params, move || {
                                    let (f, predicted) = cubic_t74(&frame, a, b, c, u, t)?;
                                    Ok((Some(predicted), pp(&f, &caps)?))
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn xval_cases(rng: &mut ChaCha8Rng, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for m in [3u32, 5] {
        let k = gf(2, m)?;
        for fam in catalog(&k)? {
            let f = normalize_map(&fam.instantiate(&k)?)?;
            out.push(case(&k, format!("hyperoval;{fam}"), move || {
                Ok((
                    Some(is_opolynomial(&f, &caps)?.verdict),
                    hyperoval_check(&f, &caps)?.verdict,
                ))
            }));
        }
    }
    let k = gf(2, 8)?;
    for i in 0..10_000 {
        let mut t: Vec<Elem> = k.elements().collect();
        t.shuffle(rng);
        if rng.random_bool(0.5) {
            let (x, y) = (rng.random_range(0..256usize), rng.random_range(0..256usize));
            t[x] = t[y];
        }
        let f = PolyFn::from_table(&k, t)?;
        out.push(case(&k, format!("tables;table={i}"), move || {
            Ok((Some(is_permutation_by_sort(&f, &caps)?.verdict), pp(&f, &caps)?))
        }));
    }
    Ok(out)
}

fn perm_oracle_cases(caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for k in [gf(2, 4)?, gf(3, 3)?, gf(5, 2)?, gf(2, 8)?, gf(257, 1)?] {
        let q = k.q();
        for e in 1..q.min(200) {
            let f = mono(&k, e)?;
            out.push(case(&k, format!("x^{e}"), move || {
                Ok((Some(gcd(e, q - 1) == 1), pp(&f, &caps)?))
            }));
        }
    }
    Ok(out)
}

fn f_converse_cases(rng: &mut ChaCha8Rng, caps: Caps) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for m in [2u32, 3, 4] {
        let base = gf(2, m)?;
        let frame = QuadFrame::over(&base, BetaChoice::Root)?;
        let mut maps: Vec<(String, PolyFn)> = (1..base.q())
            .map(|e| Ok((format!("x^{e}"), mono(&base, e)?)))
            .collect::<Result<_>>()?;
        for i in 0..20 {
            let mut t: Vec<Elem> = base.elements().skip(1).collect();
            t.shuffle(rng);
            t.insert(0, Elem::ZERO);
            maps.push((format!("perm{i}"), PolyFn::from_table(&base, t)?));
        }
        for (name, f) in maps {
            let opoly = is_opolynomial(&f, &caps)?.verdict;
            let k = base.clone();
            let g = f.clone();
            let slope = PolyFn::new(&base, move |x| k.mul(g.eval(x), k.pow(x, k.q() - 2)));
            let frame = frame.clone();
            out.push(case(&frame.ext().clone(), format!("{name};opoly={opoly}"), move || {
                Ok((Some(pp(&slope, &caps)?), pp(&construct_f(&frame, &f)?, &caps)?))
            }));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_lists_names() {
        let err = run_suite("nope", &SuiteConfig::default()).unwrap_err();
        assert!(err.to_string().contains("t21-iff-q8"));
    }

    #[test]
    fn small_suites_are_clean_and_deterministic() {
        let cfg = SuiteConfig::default();
        for name in ["opoly-all-m3", "t21-iff-q4", "tower-x3", "stated-inverses"] {
            let a = run_suite(name, &cfg).unwrap();
            assert!(!a.is_empty());
            assert_eq!(mismatches(&a), 0, "{name}");
            let b = run_suite(name, &cfg).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn csv_layout() {
        let rows = run_suite("tower-x3", &SuiteConfig::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("suite,case-id,field,params,predicted,verified,mismatch,elapsed_ms")
        );
        assert_eq!(
            lines.next(),
            Some("tower-x3,0000,2^3:2,f=3:1;depth=1;scheme=F1,true,true,false,0")
        );
    }
}
