//! Maps of the shape `az + bz^q (+ cz^(q^2)) + (linear form + u)^t`.
//!
//! Each function returns the map together with the verdict predicted by a
//! closed-form condition. The map itself is evaluated directly in the
//! extension so the prediction can be compared against brute force.

use super::{permutes, CubicFrame, QuadFrame};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::poly::PolyFn;

fn base_params(base: &FieldCtx, params: &[Elem]) -> Result<()> {
    for &p in params {
        base.elem(p.0 as u64)?;
    }
    Ok(())
}

fn require_odd(frame: &QuadFrame) -> Result<()> {
    if frame.base().p() == 2 {
        return Err(Error::precondition("this construction needs odd q"));
    }
    Ok(())
}

fn require_t(t: u64) -> Result<()> {
    if t == 0 {
        return Err(Error::precondition("t must be a positive integer"));
    }
    Ok(())
}

/// `F(z) = az + bz^q + (z + z^q + u)^t` over GF(q^2), q odd.
/// Predicted: `a != b` and `(a+b)x + 2x^t` permutes GF(q).
pub fn further_t71(frame: &QuadFrame, a: Elem, b: Elem, u: Elem, t: u64) -> Result<(PolyFn, bool)> {
    require_odd(frame)?;
    require_t(t)?;
    let base = frame.base();
    base_params(base, &[a, b, u])?;
    let k = frame.ext().clone();
    let map = PolyFn::new(&k.clone(), move |z| {
        let zq = k.relative_frobenius(z, 1);
        let lin = k.add(k.mul(a, z), k.mul(b, zq));
        k.add(lin, k.pow(k.add(k.add(z, zq), u), t))
    });
    let (s, two) = (base.add(a, b), base.from_int(2));
    let predicted = a != b && permutes(base, |x| base.add(base.mul(s, x), base.mul(two, base.pow(x, t))));
    Ok((map, predicted))
}

/// `F(z) = az + bz^q + (z - z^q + u alpha)^t` over GF(q^2), q odd, with
/// `alpha^q = -alpha`. Predicted: for even `t`, `a^2 != b^2`; for odd `t`,
/// `a + b != 0` and `(a-b)x + 2 alpha^(t-1) x^t` permutes GF(q). The parity
/// is that of the integer `t`.
pub fn further_t72(frame: &QuadFrame, a: Elem, b: Elem, u: Elem, t: u64) -> Result<(PolyFn, bool)> {
    require_odd(frame)?;
    require_t(t)?;
    let base = frame.base();
    base_params(base, &[a, b, u])?;
    let alpha = frame.alpha().ok_or_else(|| Error::precondition("frame has no alpha"))?;
    let k = frame.ext().clone();
    let ua = k.mul(u, alpha);
    let map = PolyFn::new(&k.clone(), move |z| {
        let zq = k.relative_frobenius(z, 1);
        let lin = k.add(k.mul(a, z), k.mul(b, zq));
        k.add(lin, k.pow(k.add(k.sub(z, zq), ua), t))
    });
    let predicted = if t.is_multiple_of(2) {
        base.mul(a, a) != base.mul(b, b)
    } else {
        let at = frame
            .ext()
            .project(frame.ext().pow(alpha, t - 1))?
            .expect("alpha^2 lies in the base");
        let (d, c) = (base.sub(a, b), base.mul(base.from_int(2), at));
        !base.add(a, b).is_zero() && permutes(base, |x| base.add(base.mul(d, x), base.mul(c, base.pow(x, t))))
    };
    Ok((map, predicted))
}

/// `a + b + c`, `a + b omega + c omega^2`, `a + b omega^2 + c omega`.
pub fn linear_factors(frame: &CubicFrame, a: Elem, b: Elem, c: Elem) -> [Elem; 3] {
    let k = frame.base();
    let w = frame.omega();
    let w2 = k.mul(w, w);
    let form = |x: Elem, y: Elem| k.add(k.add(a, k.mul(b, x)), k.mul(c, y));
    [form(Elem::ONE, Elem::ONE), form(w, w2), form(w2, w)]
}

fn cubic_lin(k: &FieldCtx, z: Elem, coeffs: [Elem; 3]) -> Elem {
    let z1 = k.relative_frobenius(z, 1);
    let z2 = k.relative_frobenius(z, 2);
    k.add(k.add(k.mul(coeffs[0], z), k.mul(coeffs[1], z1)), k.mul(coeffs[2], z2))
}

/// `F(x) = ax + bx^q + cx^(q^2) + (x + x^q + x^(q^2) + u)^t` over GF(q^3).
/// Predicted: `(a + b omega + c omega^2)(a + b omega^2 + c omega) != 0` and
/// `(a+b+c)x + 3x^t` permutes GF(q).
pub fn cubic_t73(frame: &CubicFrame, a: Elem, b: Elem, c: Elem, u: Elem, t: u64) -> Result<(PolyFn, bool)> {
    require_t(t)?;
    let base = frame.base();
    base_params(base, &[a, b, c, u])?;
    let k = frame.ext().clone();
    let map = PolyFn::new(&k.clone(), move |z| {
        let tr = cubic_lin(&k, z, [Elem::ONE; 3]);
        k.add(cubic_lin(&k, z, [a, b, c]), k.pow(k.add(tr, u), t))
    });
    let [l1, l2, l3] = linear_factors(frame, a, b, c);
    let three = base.from_int(3);
    let predicted = !l2.is_zero()
        && !l3.is_zero()
        && permutes(base, |x| base.add(base.mul(l1, x), base.mul(three, base.pow(x, t))));
    Ok((map, predicted))
}

/// `F(x) = ax + bx^q + cx^(q^2) + (x + omega x^q + omega^2 x^(q^2) + u alpha^2)^t`
/// over GF(q^3), with the prediction as usually stated: for `t != 1 (mod 3)` all
/// three linear factors are nonzero; for `t = 1 (mod 3)`,
/// `(a+b+c)(a + b omega^2 + c omega) != 0` and
/// `(a + b omega^2 + c omega)x + 3 alpha^(2(t-1)) x^t` permutes GF(q).
pub fn cubic_t74(frame: &CubicFrame, a: Elem, b: Elem, c: Elem, u: Elem, t: u64) -> Result<(PolyFn, bool)> {
    require_t(t)?;
    let base = frame.base();
    base_params(base, &[a, b, c, u])?;
    let k = frame.ext().clone();
    let w = k.embed(frame.omega())?;
    let ua2 = k.mul(u, k.pow(frame.alpha(), 2));
    let map = PolyFn::new(&k.clone(), move |z| {
        let inner = k.add(cubic_lin(&k, z, [Elem::ONE, w, k.mul(w, w)]), ua2);
        k.add(cubic_lin(&k, z, [a, b, c]), k.pow(inner, t))
    });
    let [l1, l2, l3] = linear_factors(frame, a, b, c);
    let predicted = if t % 3 != 1 {
        [l1, l2, l3].iter().all(|l| !l.is_zero())
    } else {
        !l1.is_zero() && !l3.is_zero() && t1_branch_permutes(frame, l3, t)
    };
    Ok((map, predicted))
}

/// The condition a coordinate computation gives for the map of
/// [`cubic_t74`]: the inner form equals `(3 x_3 + u) alpha^2`, so for
/// `t = 1 (mod 3)` the power lands on the `alpha^2` coordinate and the
/// factors that must be nonzero are `a + b + c` and `a + b omega + c omega^2`.
pub fn cubic_t74_derived(frame: &CubicFrame, a: Elem, b: Elem, c: Elem, t: u64) -> Result<bool> {
    require_t(t)?;
    base_params(frame.base(), &[a, b, c])?;
    let [l1, l2, l3] = linear_factors(frame, a, b, c);
    Ok(if t % 3 != 1 {
        [l1, l2, l3].iter().all(|l| !l.is_zero())
    } else {
        !l1.is_zero() && !l2.is_zero() && t1_branch_permutes(frame, l3, t)
    })
}

/// `l x + 3 alpha^(2(t-1)) x^t` permutes GF(q), where `alpha^(2(t-1)) = b^(2(t-1)/3)`.
fn t1_branch_permutes(frame: &CubicFrame, l: Elem, t: u64) -> bool {
    let base = frame.base();
    let coeff = base.mul(base.from_int(3), base.pow(frame.b(), 2 * (t - 1) / 3));
    permutes(base, |x| base.add(base.mul(l, x), base.mul(coeff, base.pow(x, t))))
}
