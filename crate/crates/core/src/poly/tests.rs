use super::*;
use proptest::prelude::*;

fn gf(p: u64, n: u32) -> FieldCtx {
    FieldCtx::new(p, n).unwrap()
}

#[test]
fn eval_basics() {
    let f = gf(2, 3);
    let zero = TermPoly::zero(&f);
    let id = TermPoly::identity(&f);
    for a in f.elements() {
        assert_eq!(zero.eval(a), Elem::ZERO);
        assert_eq!(id.eval(a), a);
    }
    // 6^-1 = 6 mod 7, so 5/6, 3/6, 1/6 resolve to 2, 4, 6
    let payne = TermPoly::parse(&f, "5/6:1,3/6:1,1/6:1").unwrap();
    let exps: Vec<u64> = payne.terms().iter().map(|t| t.resolved).collect();
    assert_eq!(exps, vec![2, 4, 6]);
    // constant term: 0^0 = 1
    let c = TermPoly::constant(&f, Elem(5)).unwrap();
    assert_eq!(c.eval(Elem::ZERO), Elem(5));
}

#[test]
fn text_format() {
    let f = gf(2, 5);
    let segre = TermPoly::parse(&f, " 6:1 , 4:1,2:1").unwrap();
    assert_eq!(segre.to_string(), "6:1,4:1,2:1");
    assert_eq!(TermPoly::parse(&f, "").unwrap(), TermPoly::zero(&f));
    assert!(matches!(TermPoly::parse(&f, "2:1,33:1"), Err(Error::Precondition(_))));
    assert!(matches!(
        TermPoly::parse(&f, "2:1,x:1"),
        Err(Error::Parse { pos: 4, .. })
    ));
    assert!(matches!(
        TermPoly::parse(&f, "2:1,3:y"),
        Err(Error::Parse { pos: 6, .. })
    ));
    assert!(matches!(TermPoly::parse(&f, "2"), Err(Error::Parse { pos: 0, .. })));
    assert!(matches!(TermPoly::parse(&f, "2:32"), Err(Error::OutOfRange { .. })));
    assert!(matches!(
        TermPoly::parse(&gf(2, 4), "1/3:1"),
        Err(Error::NonInvertibleExponent { .. })
    ));
    assert_eq!(TermPoly::parse(&f, "3:0").unwrap(), TermPoly::zero(&f));
    let g = TermPoly::parse(&f, "-1:1,0:3").unwrap();
    assert_eq!(g.to_string(), "0:3,-1:1");
    assert_eq!(g.degree(), Some(30));
}

#[test]
fn interpolation_examples() {
    let f = gf(2, 3);
    assert_eq!(
        interpolate(&PolyFn::constant(&f, Elem::ZERO), 4096).unwrap(),
        TermPoly::zero(&f)
    );
    // x^3 on GF(8) has inverse x^5: 3 * 5 = 15 = 1 mod 7
    let cube = TermPoly::monomial(&f, 3, Elem::ONE).unwrap();
    let table = cube.table();
    let mut inv = vec![Elem::ZERO; 8];
    for (x, y) in table.iter().enumerate() {
        inv[y.index()] = Elem(x as u32);
    }
    let g = interpolate(&PolyFn::from_table(&f, inv).unwrap(), 4096).unwrap();
    assert_eq!(g, TermPoly::monomial(&f, 5, Elem::ONE).unwrap());
    // x^(q-1) is the indicator of nonzero elements, not the constant 1
    let ind = interpolate(
        &PolyFn::new(&f, |x| if x.is_zero() { Elem::ZERO } else { Elem::ONE }),
        4096,
    )
    .unwrap();
    assert_eq!(ind.to_string(), "7:1");
    assert!(matches!(
        interpolate(&TermPoly::identity(&gf(2, 13)), 4096),
        Err(Error::CapExceeded { q: 8192, .. })
    ));
}

#[test]
fn interpolation_inverts_evaluation_exhaustively() {
    // every map GF(4) -> GF(4) and GF(3) -> GF(3)
    for f in [gf(2, 2), gf(3, 1)] {
        let q = f.q() as u32;
        for code in 0..q.pow(q) {
            let table: Vec<Elem> = (0..q).map(|i| Elem(code / q.pow(i) % q)).collect();
            let map = PolyFn::from_table(&f, table.clone()).unwrap();
            let p = interpolate(&map, 4096).unwrap();
            assert_eq!(p.table(), table);
            assert!(p.degree().unwrap_or(0) < f.q());
        }
    }
}

#[test]
fn linearized_examples() {
    let f4 = gf(2, 2);
    let l = linearized(&f4, &[(0, Elem::ONE), (1, Elem::ONE)]).unwrap();
    let kernel: Vec<Elem> = f4.elements().filter(|&x| l.eval(x).is_zero()).collect();
    assert_eq!(kernel, vec![Elem(0), Elem(1)]);
    let f8 = gf(2, 3);
    let sq = linearized(&f8, &[(1, Elem::ONE)]).unwrap();
    let kernel: Vec<Elem> = f8.elements().filter(|&x| sq.eval(x).is_zero()).collect();
    assert_eq!(kernel, vec![Elem(0)]);
}

#[test]
fn linearized_maps_are_linear() {
    for f in [gf(2, 4), gf(3, 2), gf(5, 2), gf(2, 8)] {
        let cs: Vec<(u32, Elem)> = (0..f.n()).map(|j| (j, Elem((3 * j + 2) % f.q() as u32))).collect();
        let l = linearized(&f, &cs).unwrap();
        let t = l.table();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(t[f.add(a, b).index()], f.add(t[a.index()], t[b.index()]));
            }
            for c in 0..f.p() {
                let c = f.from_int(c as i64);
                assert_eq!(t[f.mul(c, a).index()], f.mul(c, t[a.index()]));
            }
        }
    }
}

#[test]
fn normalisation() {
    let f3 = gf(3, 1);
    let two_x = TermPoly::monomial(&f3, 1, Elem(2)).unwrap();
    assert_eq!(normalize(&two_x).unwrap(), TermPoly::identity(&f3));
    let id = TermPoly::identity(&f3);
    assert_eq!(normalize(&id).unwrap(), id);
    let f8 = gf(2, 3);
    let vanish = TermPoly::parse(&f8, "2:1,1:1").unwrap();
    assert!(normalize(&vanish).is_err());
    let m = normalize_map(&TermPoly::monomial(&f8, 2, Elem(3)).unwrap()).unwrap();
    assert_eq!(m.eval(Elem::ONE), Elem::ONE);
}

#[test]
fn composition() {
    let f = gf(2, 5);
    let sq = TermPoly::monomial(&f, 2, Elem::ONE).unwrap();
    let fourth = TermPoly::monomial(&f, 4, Elem::ONE).unwrap();
    assert!(agree(&compose(&sq, &sq).unwrap(), &fourth));
    let segre = TermPoly::parse(&f, "6:1,4:1,2:1").unwrap();
    assert!(agree(&compose(&segre, &PolyFn::identity(&f)).unwrap(), &segre));
    assert!(compose(&segre, &TermPoly::identity(&gf(2, 3))).is_err());
    assert_eq!(first_disagreement(&sq, &fourth), Some(Elem(2)));
}

#[test]
fn from_table_validation() {
    let f = gf(2, 2);
    assert!(PolyFn::from_table(&f, vec![Elem(0); 3]).is_err());
    assert!(PolyFn::from_table(&f, vec![Elem(0), Elem(1), Elem(2), Elem(4)]).is_err());
}

fn field_strategy() -> impl Strategy<Value = FieldCtx> {
    prop::sample::select(vec![(2u64, 6u32), (2, 7), (3, 4), (5, 3), (7, 2), (2, 8)])
        .prop_map(|(p, n)| FieldCtx::new(p, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_polys_round_trip(field in field_strategy(), raw in prop::collection::vec((0u64..1 << 20, 0u32..1 << 20), 0..8)) {
        let q = field.q();
        let terms: Vec<(FracExp, Elem)> = raw
            .iter()
            .map(|&(e, c)| (FracExp::int((e % q) as i64), Elem(c % q as u32)))
            .collect();
        let p = TermPoly::reduced(&field, terms).unwrap();
        prop_assert_eq!(interpolate(&p, 4096).unwrap(), p);
    }

    #[test]
    fn frac_pow_is_consistent(field in field_strategy(), num in -50i64..50, den in 1u64..40, x in 0u32..1 << 20) {
        let x = Elem(x % field.q() as u32);
        let e = FracExp::new(num, den).unwrap();
        if let Ok(r) = e.resolve(field.q()) {
            let m = TermPoly::monomial(&field, e, Elem::ONE).unwrap();
            prop_assert_eq!(m.eval(x), field.pow(x, r));
            if num != 0 && !x.is_zero() {
                // (x^(num/den))^den = x^num
                prop_assert_eq!(field.pow(m.eval(x), den), field.pow_signed(x, num));
            }
        }
    }
}
