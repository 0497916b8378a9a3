//! Lifting maps on GF(q) to permutations of GF(q^2) and GF(q^3).
//!
//! A frame fixes the extension and a basis over the base field. Every
//! constructed map is a [`PolyFn`] on the extension; the theorems behind
//! them are checked, not assumed.

mod further;
mod linalg;
mod spec;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use further::{cubic_t73, cubic_t74, cubic_t74_derived, further_t71, further_t72, linear_factors};
pub use linalg::Matrix;
pub use spec::{Built, Construction, MapSpec};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::numtheory::gcd;
use crate::poly::{dickson_value, FieldMap, PolyFn};
use crate::verify::{is_permutation, is_permutation_table, Caps};

/// How to pick `beta` in GF(q^2) \ GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaChoice {
    /// The adjoined root of the tower.
    #[default]
    Root,
    /// The smallest-encoded generator of the multiplicative group.
    Generator,
}

impl fmt::Display for BetaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaChoice::Root => "root",
            BetaChoice::Generator => "gen",
        })
    }
}

impl FromStr for BetaChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "root" => Ok(BetaChoice::Root),
            "gen" | "generator" => Ok(BetaChoice::Generator),
            _ => Err(Error::parse(0, format!("beta must be root or gen, got {s:?}"))),
        }
    }
}

/// GF(q^2) over GF(q) with the basis `{1, beta}`.
#[derive(Debug, Clone)]
pub struct QuadFrame {
    base: FieldCtx,
    ext: FieldCtx,
    beta: Elem,
    beta_q: Elem,
    /// `(beta^q - beta)^-1`
    inv_diff: Elem,
    /// tower coordinates of beta
    beta_coords: (Elem, Elem),
    alpha: Option<Elem>,
}

impl QuadFrame {
    pub fn new(ext: &FieldCtx, choice: BetaChoice) -> Result<QuadFrame> {
        let beta = match choice {
            BetaChoice::Root => ext.adjoined_root().ok_or(Error::NoTowerLink)?,
            BetaChoice::Generator => ext.generator(),
        };
        Self::with_beta(ext, beta)
    }

    /// The frame over the default quadratic extension of `base`.
    pub fn over(base: &FieldCtx, choice: BetaChoice) -> Result<QuadFrame> {
        Self::new(&base.extend_quadratic(None)?, choice)
    }

    pub fn with_beta(ext: &FieldCtx, beta: Elem) -> Result<QuadFrame> {
        let base = ext.base().ok_or(Error::NoTowerLink)?.clone();
        if ext.tower_degree() != Some(2) {
            return Err(Error::precondition("a quadratic frame needs a degree-2 tower"));
        }
        ext.elem(beta.0 as u64)?;
        if ext.project(beta)?.is_some() {
            return Err(Error::precondition("beta must lie outside the base field"));
        }
        let beta_q = ext.relative_frobenius(beta, 1);
        let inv_diff = ext.inv(ext.sub(beta_q, beta))?;
        let c = ext.coords(beta)?;
        // alpha^q = -alpha spans a line over the base; take its smallest point
        let alpha = (base.p() != 2).then(|| {
            ext.elements()
                .find(|&a| !a.is_zero() && ext.relative_frobenius(a, 1) == ext.neg(a))
                .expect("2(q-1) divides q^2-1 for odd q")
        });
        Ok(QuadFrame {
            base,
            ext: ext.clone(),
            beta,
            beta_q,
            inv_diff,
            beta_coords: (c[0], c[1]),
            alpha,
        })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// For odd q, an element with `alpha^q = -alpha`.
    pub fn alpha(&self) -> Option<Elem> {
        self.alpha
    }

    /// `z = x + beta y`, read off the tower coordinates.
    pub fn decompose(&self, z: Elem) -> (Elem, Elem) {
        let k = &self.base;
        let c = self.ext.coords(z).expect("frame field is a tower");
        let (b0, b1) = self.beta_coords;
        let y = k.div(c[1], b1).expect("beta is not in the base");
        (k.sub(c[0], k.mul(y, b0)), y)
    }

    /// The same decomposition through `x = (beta^q z - beta z^q)/(beta^q - beta)`
    /// and `y = (z^q - z)/(beta^q - beta)`.
    pub fn decompose_by_conjugates(&self, z: Elem) -> (Elem, Elem) {
        let k = &self.ext;
        let zq = k.relative_frobenius(z, 1);
        let x = k.mul(k.sub(k.mul(self.beta_q, z), k.mul(self.beta, zq)), self.inv_diff);
        let y = k.mul(k.sub(zq, z), self.inv_diff);
        let down = |v| k.project(v).expect("tower").expect("fixed by Frobenius");
        (down(x), down(y))
    }

    pub fn recompose(&self, x: Elem, y: Elem) -> Elem {
        let k = &self.ext;
        k.add(self.up(x), k.mul(self.beta, self.up(y)))
    }

    fn up(&self, a: Elem) -> Elem {
        self.ext.embed(a).expect("base element")
    }

    fn base_map(&self, f: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
        if f.field() != &self.base {
            return Err(Error::precondition(format!(
                "map is defined over {}, frame base is {}",
                f.field(),
                self.base
            )));
        }
        Ok(PolyFn::tabulate(f))
    }

    fn require_binary(&self, what: &str) -> Result<()> {
        if self.base.p() != 2 {
            return Err(Error::precondition(format!("{what} needs characteristic 2")));
        }
        Ok(())
    }
}

/// GF(q^3) = GF(q)[alpha] with `alpha^3 = b` and `omega = b^((q-1)/3)`.
#[derive(Debug, Clone)]
pub struct CubicFrame {
    base: FieldCtx,
    ext: FieldCtx,
    alpha: Elem,
    omega: Elem,
    b: Elem,
}

impl CubicFrame {
    pub fn over(base: &FieldCtx) -> Result<CubicFrame> {
        Self::new(&base.extend_cubic()?)
    }

    pub fn new(ext: &FieldCtx) -> Result<CubicFrame> {
        let (b, omega) = ext
            .cubic_data()
            .ok_or_else(|| Error::precondition("a cubic frame needs an extension x^3 - b"))?;
        Ok(CubicFrame {
            base: ext.base().expect("tower").clone(),
            ext: ext.clone(),
            alpha: ext.adjoined_root().expect("tower"),
            omega,
            b,
        })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// A primitive cube root of unity in the base.
    pub fn omega(&self) -> Elem {
        self.omega
    }

    /// `alpha^3`, in the base.
    pub fn b(&self) -> Elem {
        self.b
    }

    /// Coordinates in the basis `{1, alpha, alpha^2}`.
    pub fn decompose(&self, z: Elem) -> [Elem; 3] {
        let c = self.ext.coords(z).expect("tower");
        [c[0], c[1], c[2]]
    }

    pub fn recompose(&self, x: [Elem; 3]) -> Elem {
        self.ext.from_coords(&x).expect("base coordinates")
    }
}

/// GF(q^m) over GF(q) with two bases and a nonsingular matrix `A`:
/// `F(z) = sum gamma_i f_i(x_i)` where `(x_1..x_m) = (z_1..z_m) A` and
/// `z = sum beta_i z_i`.
#[derive(Debug, Clone)]
pub struct GeneralFrame {
    base: FieldCtx,
    ext: FieldCtx,
    beta: Vec<Elem>,
    gamma: Vec<Elem>,
    a: Matrix,
    /// inverse of the matrix whose rows are the tower coordinates of beta
    beta_inv: Matrix,
}

impl GeneralFrame {
    pub fn new(ext: &FieldCtx, beta: Vec<Elem>, gamma: Vec<Elem>, a: Matrix) -> Result<GeneralFrame> {
        let base = ext.base().ok_or(Error::NoTowerLink)?.clone();
        let m = ext.tower_degree().expect("tower") as usize;
        if beta.len() != m || gamma.len() != m || a.size() != m {
            return Err(Error::precondition(format!(
                "a frame over a degree-{m} tower needs {m} basis elements and an {m}x{m} matrix"
            )));
        }
        let coord_matrix = |basis: &[Elem]| -> Result<Matrix> {
            let rows = basis.iter().map(|&e| ext.coords(e)).collect::<Result<Vec<_>>>()?;
            Matrix::from_rows(&rows)
        };
        let beta_inv = coord_matrix(&beta)?
            .inverse(&base)
            .map_err(|_| Error::precondition("beta is not a basis over the base field"))?;
        if coord_matrix(&gamma)?.det(&base).is_zero() {
            return Err(Error::precondition("gamma is not a basis over the base field"));
        }
        if a.det(&base).is_zero() {
            return Err(Error::precondition("A is singular"));
        }
        Ok(GeneralFrame {
            base,
            ext: ext.clone(),
            beta,
            gamma,
            a,
            beta_inv,
        })
    }

    /// Both bases `{1, r, .., r^(m-1)}` for the adjoined root `r`, `A = I`.
    pub fn standard(ext: &FieldCtx) -> Result<GeneralFrame> {
        let m = ext.tower_degree().ok_or(Error::NoTowerLink)?;
        let r = ext.adjoined_root().expect("tower");
        let basis: Vec<Elem> = (0..m as u64).map(|i| ext.pow(r, i)).collect();
        Self::new(ext, basis.clone(), basis, Matrix::identity(m as usize))
    }

    /// Random bases and matrix, by rejection sampling.
    pub fn random(ext: &FieldCtx, rng: &mut impl Rng) -> Result<GeneralFrame> {
        let base = ext.base().ok_or(Error::NoTowerLink)?;
        let m = ext.tower_degree().expect("tower") as usize;
        loop {
            let mut pick = |q: u64| Elem(rng.random_range(0..q) as u32);
            let beta: Vec<Elem> = (0..m).map(|_| pick(ext.q())).collect();
            let gamma: Vec<Elem> = (0..m).map(|_| pick(ext.q())).collect();
            let rows: Vec<Vec<Elem>> = (0..m).map(|_| (0..m).map(|_| pick(base.q())).collect()).collect();
            if let Ok(frame) = Self::new(ext, beta, gamma, Matrix::from_rows(&rows)?) {
                return Ok(frame);
            }
        }
    }

    pub fn ext(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.beta.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    /// `(z_1, .., z_m)` with `z = sum beta_i z_i`.
    pub fn coordinates(&self, z: Elem) -> Vec<Elem> {
        let c = self.ext.coords(z).expect("tower");
        self.beta_inv.apply(&self.base, &c)
    }
}

/// The lifted map of a general frame.
pub fn theorem21_lift(frame: &GeneralFrame, fs: &[PolyFn]) -> Result<PolyFn> {
    if fs.len() != frame.degree() {
        return Err(Error::precondition(format!(
            "need {} component maps, got {}",
            frame.degree(),
            fs.len()
        )));
    }
    let fs: Vec<PolyFn> = fs
        .iter()
        .map(|f| {
            if f.field() != frame.base() {
                return Err(Error::precondition("component maps must live on the frame base"));
            }
            Ok(PolyFn::tabulate(f))
        })
        .collect::<Result<_>>()?;
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let k = &fr.ext;
        let x = fr.a.apply(&fr.base, &fr.coordinates(z));
        fr.gamma.iter().zip(&fs).zip(x).fold(Elem::ZERO, |acc, ((&g, f), xi)| {
            k.add(acc, k.mul(g, k.embed(f.eval(xi)).expect("base value")))
        })
    }))
}

/// The predicted verdict for a lift: every component permutes the base.
pub fn theorem21_is_pp(fs: &[PolyFn], caps: &Caps) -> Result<bool> {
    for f in fs {
        if !is_permutation(f, caps)?.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F(z) = x f(y x^(q-2)) + beta y` for `y != 0` and `F(z) = x` for `y = 0`,
/// characteristic 2. A permutation whenever `f` is an o-polynomial.
pub fn construct_f(frame: &QuadFrame, f: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    frame.require_binary("construction F")?;
    let f = frame.base_map(f)?;
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let k = &fr.base;
        let (x, y) = fr.decompose(z);
        if y.is_zero() {
            return fr.up(x);
        }
        let v = k.mul(x, f.eval(k.mul(y, k.inv_or_zero(x))));
        fr.recompose(v, y)
    }))
}

/// `F(z) = x f(y x^(q-2)) + beta y + ((z + z^q)^(q-1) + 1) z` evaluated with
/// extension arithmetic and the conjugate formulas for `x` and `y`.
pub fn construct_f_closed(frame: &QuadFrame, f: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    frame.require_binary("construction F")?;
    let f = frame.base_map(f)?;
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let (k, b) = (&fr.ext, &fr.base);
        let (x, y) = fr.decompose_by_conjugates(z);
        let inner = fr.up(b.mul(x, f.eval(b.mul(y, b.pow(x, b.q() - 2)))));
        let gate = k.add(k.pow(k.add(z, k.relative_frobenius(z, 1)), b.q() - 1), Elem::ONE);
        k.add(k.add(inner, k.mul(fr.beta, fr.up(y))), k.mul(gate, z))
    }))
}

/// `G(z) = f(yx) + beta y + ((z + z^q)^(q-1) + 1) z`, characteristic 2.
pub fn construct_g(frame: &QuadFrame, f: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    frame.require_binary("construction G")?;
    let f = frame.base_map(f)?;
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let (k, b) = (&fr.ext, &fr.base);
        let (x, y) = fr.decompose(z);
        let gate = k.add(k.pow(k.add(z, k.relative_frobenius(z, 1)), b.q() - 1), Elem::ONE);
        k.add(fr.recompose(f.eval(b.mul(y, x)), y), k.mul(gate, z))
    }))
}

/// `F_1(z) = f_1(x) + beta f_2(y)`.
pub fn construct_f1(frame: &QuadFrame, f1: &(impl FieldMap + ?Sized), f2: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    let (f1, f2) = (frame.base_map(f1)?, frame.base_map(f2)?);
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let (x, y) = fr.decompose(z);
        fr.recompose(f1.eval(x), f2.eval(y))
    }))
}

/// `F_2(z) = f_1(x) + beta f_2(x + y)`.
pub fn construct_f2(frame: &QuadFrame, f1: &(impl FieldMap + ?Sized), f2: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    let (f1, f2) = (frame.base_map(f1)?, frame.base_map(f2)?);
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let (x, y) = fr.decompose(z);
        fr.recompose(f1.eval(x), f2.eval(fr.base.add(x, y)))
    }))
}

/// `F_3(z) = (beta + 1) f_1(x) + beta f_2(y)`.
pub fn construct_f3(frame: &QuadFrame, f1: &(impl FieldMap + ?Sized), f2: &(impl FieldMap + ?Sized)) -> Result<PolyFn> {
    let (f1, f2) = (frame.base_map(f1)?, frame.base_map(f2)?);
    let fr = frame.clone();
    Ok(PolyFn::new(frame.ext(), move |z| {
        let (x, y) = fr.decompose(z);
        let v = f1.eval(x);
        fr.recompose(v, fr.base.add(v, f2.eval(y)))
    }))
}

/// `((a11 + a12 b) z + (a11 - a12 b) z^q)^u + beta ((a21 + a22 b) z + (a21 - a22 b) z^q)^v`
/// for `beta^2` in the base, `q` odd. Predicted: a permutation iff
/// `gcd(uv, q-1) = 1`.
pub fn f3_example(frame: &QuadFrame, a: [[Elem; 2]; 2], u: u64, v: u64) -> Result<(PolyFn, bool)> {
    let (k, b) = (frame.ext(), frame.base());
    let beta = frame.beta();
    if b.p() == 2 || frame.beta_q != k.neg(beta) {
        return Err(Error::precondition("the example needs odd q and beta^2 in the base"));
    }
    for &c in a.iter().flatten() {
        b.elem(c.0 as u64)?;
    }
    if b.sub(b.mul(a[0][0], a[1][1]), b.mul(a[0][1], a[1][0])).is_zero() {
        return Err(Error::precondition("a11 a22 - a12 a21 must be nonzero"));
    }
    if u == 0 || v == 0 {
        return Err(Error::precondition("exponents u, v must be positive"));
    }
    let fr = frame.clone();
    let map = PolyFn::new(k, move |z| {
        let k = &fr.ext;
        let zq = k.relative_frobenius(z, 1);
        let row = |r: [Elem; 2]| {
            let s = k.mul(r[1], beta);
            k.add(k.mul(k.add(r[0], s), z), k.mul(k.sub(r[0], s), zq))
        };
        k.add(k.pow(row(a[0]), u), k.mul(beta, k.pow(row(a[1]), v)))
    });
    Ok((map, gcd(u * v, b.q() - 1) == 1))
}

/// `D_h(x, a) + beta D_h(y, a)`; the stated criterion is `gcd(h, q^2-1) = 1`.
pub fn dickson_pair(frame: &QuadFrame, h: u64, a: Elem) -> Result<(PolyFn, bool)> {
    let b = frame.base().clone();
    b.elem(a.0 as u64)?;
    let k = b.clone();
    let d = PolyFn::new(&b, move |x| dickson_value(h, a, x, &k));
    let q = b.q();
    Ok((construct_f1(frame, &d, &d)?, gcd(h, q * q - 1) == 1))
}

/// Which lift [`tower_iterate`] applies at every level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerScheme {
    F1,
    F3,
    G,
}

impl fmt::Display for TowerScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerScheme::F1 => "F1",
            TowerScheme::F3 => "F3",
            TowerScheme::G => "G",
        })
    }
}

impl FromStr for TowerScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F1" | "f1" => Ok(TowerScheme::F1),
            "F3" | "f3" => Ok(TowerScheme::F3),
            "G" | "g" => Ok(TowerScheme::G),
            _ => Err(Error::parse(0, format!("scheme must be F1, F3 or G, got {s:?}"))),
        }
    }
}

/// Lifts `f` through `depth` default quadratic extensions, feeding the same
/// map into both slots at each level. Returns every level, `f` first. Levels
/// no larger than `caps.construct` are tabulated.
pub fn tower_iterate(
    f: &(impl FieldMap + ?Sized),
    depth: u32,
    scheme: TowerScheme,
    caps: &Caps,
) -> Result<Vec<PolyFn>> {
    let mut levels = vec![f.to_fn()];
    for _ in 0..depth {
        let cur = levels.last().expect("non-empty");
        let frame = QuadFrame::over(cur.field(), BetaChoice::Root)?;
        let next = match scheme {
            TowerScheme::F1 => construct_f1(&frame, cur, cur)?,
            TowerScheme::F3 => construct_f3(&frame, cur, cur)?,
            TowerScheme::G => construct_g(&frame, cur)?,
        };
        let next = if frame.ext().q() <= caps.construct {
            PolyFn::tabulate(&next)
        } else {
            next
        };
        levels.push(next);
    }
    Ok(levels)
}

/// True iff `x -> f(x)` permutes `field`, for a map given by a closure.
pub(crate) fn permutes(field: &FieldCtx, f: impl Fn(Elem) -> Elem) -> bool {
    let table: Vec<Elem> = field.elements().map(f).collect();
    is_permutation_table(field, &table).verdict
}
