use super::*;
use crate::poly::{agree, interpolate};
use crate::verify::{compositional_inverse, hyperoval_check, is_opolynomial};

fn gf2(m: u32) -> FieldCtx {
    FieldCtx::new(2, m).unwrap()
}

fn opoly(f: &(impl FieldMap + ?Sized)) -> bool {
    is_opolynomial(f, &Caps::default()).unwrap().verdict
}

#[test]
fn ids_round_trip() {
    for s in [
        "translation:h=2",
        "segre:a=5",
        "glynni",
        "glynnii:a=0",
        "cherowitzo:a=1",
        "payne:a=1",
        "subiaco:a=3",
        "adelaide:b=137,sign=+",
        "adelaide:b=7,sign=-",
    ] {
        let f: Family = s.parse().unwrap();
        assert_eq!(f.to_string(), s);
    }
    assert_eq!("glynn_ii:a=3".parse::<Family>().unwrap(), Family::GlynnII { a: 3 });
    assert!(matches!("segre".parse::<Family>(), Err(Error::Parse { .. })));
    assert!(matches!(
        "segre:a=x".parse::<Family>(),
        Err(Error::Parse { pos: 8, .. })
    ));
    assert!(matches!(
        "segre:a=1,z=2".parse::<Family>(),
        Err(Error::Parse { pos: 10, .. })
    ));
    assert!(matches!("hermite:a=1".parse::<Family>(), Err(Error::Parse { .. })));
}

#[test]
fn instantiation_examples() {
    let f8 = gf2(3);
    let t = Family::Translation { h: 1 }.instantiate(&f8).unwrap();
    assert_eq!(t.as_poly().unwrap().to_string(), "2:1");
    assert!(opoly(&t));
    let f32 = gf2(5);
    let s0 = Family::Segre { a: 0 }.instantiate(&f32).unwrap();
    assert_eq!(s0.as_poly().unwrap().to_string(), "6:1");
    let s1 = Family::Segre { a: 1 }.instantiate(&f32).unwrap();
    assert_eq!(s1.as_poly().unwrap().to_string(), "6:1,4:1,2:1");
    let p1 = Family::Payne { a: 1 }.instantiate(&f32).unwrap();
    let exps: Vec<u64> = p1.as_poly().unwrap().terms().iter().map(|t| t.resolved).collect();
    // (2^4 + 2)/3, 2^4, (5 * 2^4 - 2)/3
    assert_eq!(exps, vec![6, 16, 26]);
    assert_eq!(p1.as_poly().unwrap().to_string(), "5/6:1,3/6:1,1/6:1");
}

#[test]
fn invariants_are_enforced() {
    let f16 = gf2(4);
    assert!(Family::Translation { h: 2 }.instantiate(&f16).is_err());
    assert!(Family::Translation { h: 3 }.instantiate(&f16).is_ok());
    assert!(Family::Segre { a: 1 }.instantiate(&f16).is_err());
    assert!(Family::Payne { a: 1 }.instantiate(&f16).is_err());
    // Tr(1) = m mod 2
    assert!(Family::Subiaco { a: 1 }.instantiate(&gf2(5)).is_ok());
    assert!(Family::Subiaco { a: 1 }.instantiate(&f16).is_err());
    assert!(Family::Subiaco { a: 0 }.instantiate(&gf2(5)).is_err());
    assert!(Family::Adelaide { b: 1, sign: Sign::Plus }.instantiate(&f16).is_err());
    assert!(Family::Adelaide { b: 2, sign: Sign::Plus }
        .instantiate(&gf2(3))
        .is_err());
    assert!(Family::Segre { a: 1 }
        .instantiate(&FieldCtx::new(3, 3).unwrap())
        .is_err());
    assert_eq!(adelaide_parameters(&f16).unwrap().len(), 16);
}

#[test]
fn glynn_ii_at_m3_is_segre() {
    let f = gf2(3);
    for a in 0..8 {
        let g = Family::GlynnII { a }.instantiate(&f).unwrap();
        let s = Family::Segre { a }.instantiate(&f).unwrap();
        assert_eq!(g.as_poly(), s.as_poly());
    }
}

#[test]
fn catalog_members_are_opolynomials_m3() {
    let f = gf2(3);
    for fam in catalog(&f).unwrap() {
        assert!(opoly(&fam.instantiate(&f).unwrap()), "{fam}");
    }
}

#[test]
fn adelaide_m4() {
    let f = gf2(4);
    let fams: Vec<Family> = catalog(&f)
        .unwrap()
        .into_iter()
        .filter(|x| x.tag() == "adelaide")
        .collect();
    assert_eq!(fams.len(), 32);
    for fam in fams {
        assert!(opoly(&fam.instantiate(&f).unwrap()), "{fam}");
    }
}

#[test]
fn transforms_preserve_the_property_m3() {
    let f = gf2(3);
    let caps = Caps::default();
    for fam in catalog(&f).unwrap() {
        let inst = fam.instantiate(&f).unwrap();
        for t in all_transforms(3) {
            assert!(opoly(&transform(&inst, t, &caps).unwrap()), "{fam} {t}");
        }
    }
}

#[test]
fn transform_formulas() {
    let caps = Caps::default();
    let f = gf2(5);
    let q = 32i64;
    for h in [1u32, 2, 3, 4] {
        let t = Family::Translation { h }.instantiate(&f).unwrap();
        let bar = transform(&t, Transform::Bar, &caps).unwrap();
        let expect = TermPoly::monomial(&f, q - (1 << h), Elem::ONE).unwrap();
        assert!(agree(&bar, &expect));
        // x^(q - 2^(m-h)) is the bar of the inverse, not of x^(2^h)
        let swapped = TermPoly::monomial(&f, q - (1 << (5 - h)), Elem::ONE).unwrap();
        let inv = transform(&t, Transform::Inverse, &caps).unwrap();
        assert!(agree(&transform(&inv, Transform::Bar, &caps).unwrap(), &swapped));
        assert!(!agree(&bar, &swapped));
    }
    let s = Family::Segre { a: 9 }.instantiate(&f).unwrap();
    let tt = transform(
        &transform(&s, Transform::Translate, &caps).unwrap(),
        Transform::Translate,
        &caps,
    )
    .unwrap();
    assert!(agree(&tt, &s));
    assert!(transform(&s, Transform::Conjugate(5), &caps).is_err());
}

#[test]
fn o_monomial_examples() {
    let f32 = gf2(5);
    assert!(o_monomial_test(6, &f32).unwrap().verdict);
    for m in 2..=6 {
        assert!(o_monomial_test(2, &gf2(m)).unwrap().verdict);
    }
    let r = o_monomial_test(3, &gf2(3)).unwrap();
    assert!(!r.verdict);
    // criterion (b) with 2^m - 2 rejects the Segre exponent
    let c = o_monomial_criteria(6, &f32).unwrap();
    assert!(c.gcd_k && c.gcd_k_minus_1 && c.shift_permutes);
    assert!(!c.gcd_k_minus_1_mod_q_minus_2);
    assert!(o_monomial_test(0, &f32).is_err());
}

#[test]
fn o_monomial_test_agrees_with_oracle() {
    for m in 3..=5 {
        let f = gf2(m);
        for k in 1..f.q() {
            let mono = TermPoly::monomial(&f, k as i64, Elem::ONE).unwrap();
            assert_eq!(o_monomial_test(k, &f).unwrap().verdict, opoly(&mono), "m={m} k={k}");
        }
    }
}

#[test]
fn orbit_examples() {
    assert_eq!(o_monomial_orbit(6, 5).unwrap(), [26, 26, 6, 26, 6]);
    let o = o_monomial_orbit(2, 5).unwrap();
    assert_eq!(o[0], 16);
    assert!(o_monomial_orbit(1, 5).is_err());
    for m in [3u32, 5] {
        let f = gf2(m);
        for k in 2..f.q() {
            if !o_monomial_test(k, &f).unwrap().verdict {
                continue;
            }
            let orbit = o_monomial_orbit(k, m).unwrap();
            let mut set: Vec<u64> = orbit.to_vec();
            set.push(k);
            set.sort();
            set.dedup();
            for &j in &orbit {
                assert!(o_monomial_test(j, &f).unwrap().verdict, "m={m} k={k} j={j}");
                let mut again: Vec<u64> = o_monomial_orbit(j, m).unwrap().to_vec();
                again.push(j);
                again.sort();
                again.dedup();
                assert_eq!(again, set);
            }
        }
    }
}

#[test]
fn stated_inverses_m3_m5() {
    let caps = Caps::default();
    for m in [3u32, 5] {
        let f = gf2(m);
        let mut cases = vec![
            StatedInverse::Payne1,
            StatedInverse::SegreBar1,
            StatedInverse::Segre { a: 0 },
            StatedInverse::Segre { a: 1 },
        ];
        cases.extend((1..f.q() as u32).map(|a| StatedInverse::Cherowitzo { a }));
        cases.extend(
            (1..m)
                .filter(|&h| gcd(h as u64, m as u64) == 1)
                .map(|h| StatedInverse::Translation { h }),
        );
        for c in cases {
            let target = c.target(&f).unwrap();
            let inv = compositional_inverse(&target, &caps).unwrap();
            assert!(agree(&inv, &stated_inverse(c, &f).unwrap()), "m={m} {c}");
        }
    }
    // x^6 on GF(32) inverts to x^26
    let f = gf2(5);
    let inv = compositional_inverse(&Family::Segre { a: 0 }.instantiate(&f).unwrap(), &caps).unwrap();
    assert_eq!(inv.to_string(), "26:1");
}

#[test]
fn payne_dickson_index_must_not_be_reduced_mod_q_minus_1() {
    // 38 mod 7 = 3, but D_3(x, 1)^6 is not the inverse of Payne_1 over GF(8)
    let f = gf2(3);
    let target = StatedInverse::Payne1.target(&f).unwrap();
    let inv = compositional_inverse(&target, &Caps::default()).unwrap();
    let k = f.clone();
    let wrong = PolyFn::new(&f, move |x| k.pow(dickson_value(38 % 7, Elem::ONE, x, &k), 6));
    assert!(!agree(&inv, &wrong));
    assert_eq!(inverse_of_five_index(3).unwrap(), 38);
    assert_eq!(inverse_of_five_index(5).unwrap(), 614);
}

#[test]
fn scaling_identities() {
    for m in [3u32, 5] {
        let f = gf2(m);
        for a in f.elements() {
            for id in stated_identities(&f, a).unwrap() {
                if id.name.contains("cherowitzo_a = ") || id.name.contains("payne_a = a^(5/2)") {
                    assert_eq!(id.first_mismatch(), None, "m={m} a={a} {}", id.name);
                }
            }
        }
    }
}

#[test]
fn odd_exponent_coefficients_vanish() {
    let caps = Caps::default();
    for m in [3u32, 5] {
        let f = gf2(m);
        for fam in catalog(&f).unwrap() {
            let p = interpolate(&fam.instantiate(&f).unwrap(), caps.interp).unwrap();
            for t in p.terms() {
                assert!(
                    t.resolved % 2 == 0 || t.resolved == f.q() - 1 || t.resolved == 1,
                    "{fam}: {p}"
                );
            }
        }
    }
}

#[test]
fn hyperoval_agrees_on_catalog_m3() {
    let f = gf2(3);
    for fam in catalog(&f).unwrap() {
        let inst = fam.instantiate(&f).unwrap();
        let n = crate::poly::normalize_map(&inst).unwrap();
        assert!(hyperoval_check(&n, &Caps::default()).unwrap().verdict, "{fam}");
        assert!(opoly(&n));
    }
}

#[test]
fn repaired_identities_hold() {
    for m in [3u32, 5, 7] {
        let f = gf2(m);
        for a in f.elements() {
            for id in stated_identities(&f, a).unwrap().into_iter().filter(|i| !i.stated) {
                assert_eq!(id.first_mismatch(), None, "m={m} a={a} {}", id.name);
            }
        }
    }
}

#[test]
fn uncorrected_identities_fail() {
    let f = gf2(5);
    let a = Elem(2);
    let failing: Vec<&str> = stated_identities(&f, a)
        .unwrap()
        .into_iter()
        .filter(|i| i.stated && i.first_mismatch().is_some())
        .map(|i| i.name)
        .collect();
    assert_eq!(failing.len(), 6, "{failing:?}");
    assert!(failing.iter().any(|n| n.starts_with("segre = (x + sqrt(a))^6")));
    assert!(failing.iter().any(|n| n.starts_with("payne = x D5")));
}
