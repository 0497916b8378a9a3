use super::*;

fn gf(p: u64, n: u32) -> FieldCtx {
    FieldCtx::new(p, n).unwrap()
}

/// Every field the exhaustive checks below run over: prime, binary, odd
/// extension and towers of each kind.
fn zoo() -> Vec<FieldCtx> {
    let mut v = vec![
        gf(2, 1),
        gf(3, 1),
        gf(7, 1),
        gf(2, 2),
        gf(2, 3),
        gf(3, 2),
        gf(5, 2),
        gf(2, 6),
    ];
    v.push(gf(2, 2).extend_quadratic(None).unwrap());
    v.push(gf(3, 1).extend_quadratic(None).unwrap());
    v.push(gf(2, 3).extend_quadratic(None).unwrap());
    v.push(gf(2, 2).extend_cubic().unwrap());
    v.push(gf(7, 1).extend_cubic().unwrap());
    v
}

#[test]
fn canonical_moduli() {
    assert_eq!(gf(2, 1).modulus(), Modulus::OverPrime(vec![0, 1]));
    assert_eq!(gf(2, 2).modulus(), Modulus::OverPrime(vec![1, 1, 1]));
    assert_eq!(gf(2, 3).modulus(), Modulus::OverPrime(vec![1, 1, 0, 1]));
    assert_eq!(gf(2, 3).modulus_encoding(), Some(11));
    assert_eq!(gf(2, 3), gf(2, 3));
    assert_eq!(gf(2, 3).spec(), "2^3");
    assert_eq!(FieldCtx::with_modulus_encoding(2, 3, 13).unwrap().spec(), "2^3/mod=13");
}

#[test]
fn reducible_and_bad_inputs() {
    assert_eq!(FieldCtx::new(6, 1), Err(Error::NotPrime(6)));
    match FieldCtx::with_modulus(2, 4, &[1, 0, 1, 0, 1]) {
        Err(Error::ReducibleModulus { factor, .. }) => assert_eq!(factor, vec![1, 1, 1]),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        FieldCtx::with_modulus(3, 2, &[1, 0, 2]),
        Err(Error::InvalidModulus(_))
    ));
    assert!(matches!(FieldCtx::new(2, 33), Err(Error::FieldTooLarge { .. })));
    // x^2 - 1 has the root 1
    let f = gf(5, 1);
    assert_eq!(
        f.extend_with(&[f.neg(Elem::ONE), Elem::ZERO]),
        Err(Error::ReducibleExtension { root: 1 })
    );
    assert!(matches!(gf(2, 1).extend_cubic(), Err(Error::Precondition(_))));
    assert!(matches!(gf(2, 3).elem(8), Err(Error::OutOfRange { enc: 8, q: 8 })));
}

#[test]
fn gf8_cube_of_x() {
    let f = gf(2, 3);
    let g = Elem(2);
    assert_eq!(f.mul(f.mul(g, g), g), Elem(3));
    assert_eq!(f.inv(Elem::ONE), Ok(Elem::ONE));
    assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
    assert_eq!(f.inv_or_zero(Elem::ZERO), Elem::ZERO);
    assert_eq!(f.arith(ArithOp::Div, Elem(5), Elem::ZERO), Err(Error::DivisionByZero));
}

#[test]
fn default_extensions() {
    // squares of GF(3) are {0, 1}: x^2 - 2
    let f9 = gf(3, 1).extend_quadratic(None).unwrap();
    assert_eq!(f9.modulus(), Modulus::OverBase(vec![Elem(1), Elem(0), Elem(1)]));
    // Tr(c) = c + c^2 over GF(4): 0, 0, 1, 1 for c = 0, 1, 2, 3
    let f4 = gf(2, 2);
    let traces: Vec<u32> = f4.elements().map(|c| f4.absolute_trace(c).0).collect();
    assert_eq!(traces, vec![0, 0, 1, 1]);
    let f16 = f4.extend_quadratic(None).unwrap();
    assert_eq!(f16.modulus(), Modulus::OverBase(vec![Elem(2), Elem(1), Elem(1)]));
    // cubes of GF(4)* are {1}; the smallest non-cube is 2
    let f64 = f4.extend_cubic().unwrap();
    let (b, w) = f64.cubic_data().unwrap();
    assert_eq!(b, Elem(2));
    assert_eq!(f4.pow(w, 3), Elem::ONE);
    // cubes mod 7 are {1, 6}; b = 2, omega = 2^2 = 4
    let f343 = gf(7, 1).extend_cubic().unwrap();
    assert_eq!(f343.cubic_data(), Some((Elem(2), Elem(4))));
    assert_eq!(f343.q(), 343);
}

#[test]
fn cubic_frame_identities() {
    for base in [gf(2, 2), gf(7, 1), gf(2, 4)] {
        let ext = base.extend_cubic().unwrap();
        let (b, w) = ext.cubic_data().unwrap();
        let alpha = ext.adjoined_root().unwrap();
        let we = ext.embed(w).unwrap();
        assert_eq!(ext.pow(alpha, 3), ext.embed(b).unwrap());
        assert_eq!(ext.relative_frobenius(alpha, 1), ext.mul(we, alpha));
        assert_eq!(ext.relative_frobenius(alpha, 2), ext.mul(ext.mul(we, we), alpha));
    }
}

#[test]
fn field_axioms_exhaustive() {
    for f in zoo().into_iter().filter(|f| f.q() <= 64) {
        let els: Vec<Elem> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            assert_eq!(f.mul(a, Elem::ONE), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "{f:?} a={a}");
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in els.iter().step_by(3) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }
}

#[test]
fn tables_agree_with_direct_path() {
    for f in zoo() {
        assert!(f.has_tables());
        let d = f.without_tables();
        assert!(!d.has_tables());
        assert_eq!(f, d);
        let step = (f.q() / 97).max(1) as usize;
        for a in f.elements().step_by(step) {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), d.mul(a, b));
            }
            assert_eq!(f.inv_or_zero(a), d.inv_or_zero(a));
            for e in [0u64, 1, 2, f.q() - 2, f.q() - 1, f.q(), 3 * f.q() + 5] {
                assert_eq!(f.pow(a, e), d.pow(a, e), "{f:?} a={a} e={e}");
            }
        }
    }
}

#[test]
fn frobenius_is_a_ring_automorphism() {
    for f in zoo().into_iter().filter(|f| f.q() <= 256) {
        for a in f.elements() {
            assert_eq!(f.frobenius(a, f.n()), a);
            for b in f.elements() {
                let p = f.p();
                assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                assert_eq!(f.pow(f.mul(a, b), p), f.mul(f.pow(a, p), f.pow(b, p)));
            }
        }
    }
}

#[test]
fn quadratic_trace_is_linear_and_onto() {
    for base in [gf(2, 1), gf(3, 1), gf(2, 2), gf(5, 1), gf(2, 3), gf(3, 2), gf(2, 4)] {
        let ext = base.extend_quadratic(None).unwrap();
        let mut image = vec![false; base.size()];
        for z in ext.elements() {
            let t = ext.trace_to_base(z).unwrap();
            let zq = ext.relative_frobenius(z, 1);
            assert_eq!(ext.embed(t).unwrap(), ext.add(z, zq));
            image[t.index()] = true;
            for c in base.elements() {
                let cz = ext.mul(ext.embed(c).unwrap(), z);
                assert_eq!(ext.trace_to_base(cz).unwrap(), base.mul(c, t));
            }
        }
        assert!(image.iter().all(|&x| x));
        assert_eq!(ext.trace_to_base(Elem::ZERO), Ok(Elem::ZERO));
    }
    assert_eq!(gf(2, 3).trace_to_base(Elem(3)), Err(Error::NoTowerLink));
}

#[test]
fn embedding_and_projection() {
    for ext in zoo().into_iter().filter(|f| f.base().is_some()) {
        let base = ext.base().unwrap().clone();
        for a in base.elements() {
            let e = ext.embed(a).unwrap();
            assert_eq!(ext.project(e).unwrap(), Some(a));
            // the image is exactly the fixed field of x -> x^|base|
            assert_eq!(ext.pow(e, base.q()), e);
            for b in base.elements() {
                let eb = ext.embed(b).unwrap();
                assert_eq!(ext.mul(e, eb), ext.embed(base.mul(a, b)).unwrap());
                assert_eq!(ext.add(e, eb), ext.embed(base.add(a, b)).unwrap());
            }
        }
        let root = ext.adjoined_root().unwrap();
        assert_eq!(ext.project(root).unwrap(), None);
        assert_ne!(ext.pow(root, base.q()), root);
        assert_eq!(ext.embed(Elem::ZERO), Ok(Elem::ZERO));
        for z in ext.elements() {
            let c = ext.coords(z).unwrap();
            assert_eq!(ext.from_coords(&c).unwrap(), z);
        }
    }
}

#[test]
fn generators() {
    let f4 = gf(2, 2);
    assert_eq!(f4.generator(), Elem(2));
    assert!(f4.is_generator(Elem(2)));
    assert!(!f4.is_generator(Elem::ONE));
    assert_eq!(gf(2, 1).generator(), Elem::ONE);
    let f8 = gf(2, 3);
    assert!(f8.elements().skip(2).all(|a| f8.is_generator(a)));
    let f9 = gf(3, 2);
    let g = f9.generator();
    let orbit: std::collections::BTreeSet<Elem> = (0..8).map(|i| f9.pow(g, i)).collect();
    assert_eq!(orbit.len(), 8);
}

#[test]
fn frac_exponents_match_plain_exponents() {
    for f in zoo().into_iter().filter(|f| f.q() <= 256) {
        let m = f.q() - 1;
        for den in 1..12u64 {
            let Some(inv) = crate::numtheory::mod_inverse(den as i128, m) else {
                continue;
            };
            for num in [1i64, 3, 5, -1] {
                let e = FracExp::new(num, den).unwrap();
                let plain = (num.rem_euclid(m as i64) as u64 * inv) % m;
                for a in f.elements().skip(1) {
                    assert_eq!(f.pow_frac(a, e).unwrap(), f.pow(a, plain));
                }
            }
        }
    }
    let f32 = gf(2, 5);
    assert_eq!(f32.pow(Elem::ZERO, 30), Elem::ZERO);
    assert_eq!(f32.pow(Elem::ZERO, 0), Elem::ONE);
    assert!(f32.elements().skip(1).all(|a| f32.pow(a, 31) == Elem::ONE));
}

#[test]
fn big_binary_field_without_tables() {
    let f = gf(2, 20);
    assert!(!f.has_tables());
    let a = Elem(0x5a5a5);
    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
    assert_eq!(f.frobenius(a, 20), a);
}
