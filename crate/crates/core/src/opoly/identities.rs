//! Pointwise identities claimed for the families, as pairs of evaluators.

use super::{binary_degree, glynnii_exponents, stated_inverse, transform, Family, StatedInverse, Transform};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, FracExp};
use crate::poly::{dickson_value, FieldMap, PolyFn};
use crate::verify::Caps;

pub struct Identity {
    pub name: &'static str,
    /// False for the repaired variants of identities that fail as written.
    pub stated: bool,
    pub lhs: PolyFn,
    pub rhs: PolyFn,
}

impl Identity {
    /// The first input where the two sides differ.
    pub fn first_mismatch(&self) -> Option<Elem> {
        crate::poly::first_disagreement(&self.lhs, &self.rhs)
    }
}

type Evaluator = Box<dyn Fn(&FieldCtx, Elem) -> Elem + Send + Sync>;

/// The family identities for parameter `a` over GF(2^m), m odd, as written
/// in the literature, followed by repaired forms of the ones that do not
/// hold. Identities that divide by `a` are skipped for `a = 0`.
pub fn stated_identities(field: &FieldCtx, a: Elem) -> Result<Vec<Identity>> {
    let m = binary_degree(field)?;
    if m % 2 == 0 {
        return Err(Error::precondition("the family identities are stated for m odd"));
    }
    field.elem(a.0 as u64)?;
    let q = field.q();
    let k = field.clone();
    let caps = Caps::default();
    let fam = |f: Family| -> Result<PolyFn> { Ok(f.instantiate(field)?.to_fn()) };
    let new = |f: Evaluator| {
        let k = k.clone();
        PolyFn::new(field, move |x| f(&k, x))
    };
    let sqrt = field.sqrt_binary(a)?;
    let e2 = 1u64 << m.div_ceil(2);
    let mut out = Vec::new();

    let segre = fam(Family::Segre { a: a.0 })?;
    out.push(Identity {
        stated: true,
        name: "segre = (x + sqrt(a))^6 + sqrt(a)^3",
        lhs: segre.clone(),
        rhs: new(Box::new(move |k, x| k.add(k.pow(k.add(x, sqrt), 6), k.pow(sqrt, 3)))),
    });
    out.push(Identity {
        stated: true,
        name: "segre = x D5(x, a)",
        lhs: segre.clone(),
        rhs: new(Box::new(move |k, x| k.mul(x, dickson_value(5, a, x, k)))),
    });
    out.push(Identity {
        stated: true,
        name: "segre = a^2 D5(x^(q-2), a^(q-2)) x^7",
        lhs: segre.clone(),
        rhs: new(Box::new(move |k, x| {
            let d = dickson_value(5, k.pow(a, q - 2), k.pow(x, q - 2), k);
            k.mul(k.mul(k.mul(a, a), d), k.pow(x, 7))
        })),
    });
    let segre_inv = transform(&segre, Transform::Inverse, &caps)?;
    out.push(Identity {
        stated: true,
        name: "segre^-1 = (x + sqrt(a)^3)^(1/6) + sqrt(a)",
        lhs: segre_inv.clone(),
        rhs: stated_inverse(StatedInverse::Segre { a: a.0 }, field)?,
    });
    let segre_bar = transform(&segre, Transform::Bar, &caps)?;
    out.push(Identity {
        stated: true,
        name: "bar segre = D5(x^(q-2), a)",
        lhs: segre_bar.clone(),
        rhs: new(Box::new(move |k, x| dickson_value(5, a, k.pow(x, q - 2), k))),
    });
    out.push(Identity {
        stated: true,
        name: "bar segre = a^2 x^(q-2) + a x^(q-4) + x^(q-6)",
        lhs: segre_bar,
        rhs: new(Box::new(move |k, x| {
            let t = k.mul(k.mul(a, a), k.pow_signed(x, q as i64 - 2));
            k.add(
                k.add(t, k.mul(a, k.pow_signed(x, q as i64 - 4))),
                k.pow_signed(x, q as i64 - 6),
            )
        })),
    });

    let cher = fam(Family::Cherowitzo { a: a.0 })?;
    if !a.is_zero() {
        let cher1 = fam(Family::Cherowitzo { a: 1 })?;
        out.push(Identity {
            stated: true,
            name: "cherowitzo_a = a^(-2^(e-1)) cherowitzo_1(a^(1/2) x)",
            lhs: cher.clone(),
            rhs: new(Box::new(move |k, x| {
                k.mul(k.pow_signed(a, -((e2 / 2) as i64)), cher1.eval(k.mul(sqrt, x)))
            })),
        });
    }
    let cher_bar = transform(&cher, Transform::Bar, &caps)?;
    let ae2 = field.pow(a, e2 + 2);
    out.push(Identity {
        stated: true,
        name: "bar cherowitzo = x^(q-2^e) + a x^(q-2^e-2) + a^(2^e+2) x^(q-3*2^e-4)",
        lhs: cher_bar.clone(),
        rhs: new(Box::new(move |k, x| {
            let q = q as i64;
            let e2 = e2 as i64;
            let t1 = k.pow_signed(x, q - e2);
            let t2 = k.mul(a, k.pow_signed(x, q - e2 - 2));
            let t3 = k.mul(ae2, k.pow_signed(x, q - 3 * e2 - 4));
            k.add(k.add(t1, t2), t3)
        })),
    });
    let ae = field.pow(a, e2);
    out.push(Identity {
        stated: true,
        name: "bar cherowitzo = (a x^(q-2^e-2) + a^(2^e) x^(q-4) + x^(q-2))^(2^(e-1)-1)",
        lhs: cher_bar,
        rhs: new(Box::new(move |k, x| {
            let q = q as i64;
            let inner = k.add(
                k.add(
                    k.mul(a, k.pow_signed(x, q - e2 as i64 - 2)),
                    k.mul(ae, k.pow_signed(x, q - 4)),
                ),
                k.pow_signed(x, q - 2),
            );
            k.pow(inner, e2 / 2 - 1)
        })),
    });

    let payne = fam(Family::Payne { a: a.0 })?;
    let payne_fn = payne.clone();
    let sixth = FracExp::new(1, 6)?;
    if !a.is_zero() {
        let payne1 = fam(Family::Payne { a: 1 })?;
        let a52 = field.pow_frac(a, FracExp::new(5, 2)?)?;
        out.push(Identity {
            stated: true,
            name: "payne_a = a^(5/2) payne_1(a^(-3) x)",
            lhs: payne.clone(),
            rhs: new(Box::new(move |k, x| {
                k.mul(a52, payne1.eval(k.mul(k.pow_signed(a, -3), x)))
            })),
        });
        let scaled = fam(Family::Payne {
            a: field.pow(a, q - 2).0,
        })?;
        out.push(Identity {
            stated: true,
            name: "bar payne_a = a^(q-3) payne_(a^(q-2))",
            lhs: transform(&payne, Transform::Bar, &caps)?,
            rhs: new(Box::new(move |k, x| k.mul(k.pow(a, q - 3), scaled.eval(x)))),
        });
    }
    out.push(Identity {
        stated: true,
        name: "payne = x D5(x^(1/6), a)",
        lhs: payne.clone(),
        rhs: new(Box::new(move |k, x| {
            k.mul(x, dickson_value(5, a, k.pow_frac(x, sixth).expect("m odd"), k))
        })),
    });
    let half = 1u64 << (m - 1);
    out.push(Identity {
        stated: true,
        name: "payne = x^((2^(m-1)+2)/3) + a x^(2^(m-1)) + a^2 x^((5*2^(m-1)-2)/3)",
        lhs: payne,
        rhs: new(Box::new(move |k, x| {
            let t1 = k.pow(x, half.div_ceil(3));
            let t2 = k.mul(a, k.pow(x, half));
            let t3 = k.mul(k.mul(a, a), k.pow(x, (5 * half - 2) / 3));
            k.add(k.add(t1, t2), t3)
        })),
    });

    if m % 4 == 1 {
        let (big, small) = glynnii_exponents(m);
        let shift = field.pow(a, ((m - 1) / 4) as u64);
        out.push(Identity {
            stated: true,
            name: "glynnii_a = (x + a^((m-1)/4))^(2^((m+1)/2)+2^((3m+1)/4)) + a^(2^((m+1)/2)+2^((3m+1)/4))",
            lhs: fam(Family::GlynnII { a: a.0 })?,
            rhs: new(Box::new(move |k, x| {
                k.add(k.pow(k.add(x, shift), big + small), k.pow(a, big + small))
            })),
        });
    }

    let mut fixed = |name, lhs, rhs| {
        out.push(Identity {
            stated: false,
            name,
            lhs,
            rhs,
        })
    };
    let a3 = field.pow(a, 3);
    fixed(
        "segre = (x + sqrt(a))^6 + a^3",
        segre,
        new(Box::new(move |k, x| k.add(k.pow(k.add(x, sqrt), 6), a3))),
    );
    let sixth_int = sixth.resolve(q)?;
    fixed(
        "segre^-1 = (x + a^3)^(1/6) + sqrt(a)",
        segre_inv,
        new(Box::new(move |k, x| k.add(k.pow(k.add(x, a3), sixth_int), sqrt))),
    );
    let cher_inv = transform(&cher, Transform::Inverse, &caps)?;
    fixed(
        "bar cherowitzo^-1 = (a x^(q-2^e-2) + a^(2^e) x^(q-4) + x^(q-2))^(2^(e-1)-1)",
        transform(&cher_inv, Transform::Bar, &caps)?,
        new(Box::new(move |k, x| {
            let q = q as i64;
            let inner = k.add(
                k.add(
                    k.mul(a, k.pow_signed(x, q - e2 as i64 - 2)),
                    k.mul(ae, k.pow_signed(x, q - 4)),
                ),
                k.pow_signed(x, q - 2),
            );
            k.pow(inner, e2 / 2 - 1)
        })),
    );
    fixed(
        "payne = D5(x^(1/6), a)",
        payne_fn.clone(),
        new(Box::new(move |k, x| {
            dickson_value(5, a, k.pow_frac(x, sixth).expect("m odd"), k)
        })),
    );
    if !a.is_zero() {
        let scaled = fam(Family::Payne {
            a: field.pow(a, q - 2).0,
        })?;
        fixed(
            "bar payne_a = a^2 payne_(a^(q-2))",
            transform(&payne_fn, Transform::Bar, &caps)?,
            new(Box::new(move |k, x| k.mul(k.mul(a, a), scaled.eval(x)))),
        );
    }
    if m % 4 == 1 {
        let (big, small) = glynnii_exponents(m);
        let shift = field.frobenius(a, (m - 1) / 4);
        let constant = field.pow(shift, big + small);
        fixed(
            "glynnii_a = (x + a^(2^((m-1)/4)))^(2^((m+1)/2)+2^((3m+1)/4)) + a^(2^((m-1)/4)(2^((m+1)/2)+2^((3m+1)/4)))",
            fam(Family::GlynnII { a: a.0 })?,
            new(Box::new(move |k, x| {
                k.add(k.pow(k.add(x, shift), big + small), constant)
            })),
        );
    }
    Ok(out)
}
