//! Construction spec strings such as `F:f=segre:a=1`,
//! `F1:f1=1:1,f2=3:1,beta=gen`, `T71:a=2,b=1,u=0,t=3` or
//! `tower:f=3:1,depth=2,scheme=F1`.

use std::fmt;
use std::str::FromStr;

use super::*;
use crate::opoly::Family;
use crate::poly::TermPoly;
use crate::verify::is_opolynomial;

/// A base-field map: a catalog family id or a polynomial spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapSpec {
    Family(Family),
    Poly(String),
}

impl MapSpec {
    pub fn resolve(&self, field: &FieldCtx) -> Result<PolyFn> {
        match self {
            MapSpec::Family(f) => Ok(f.instantiate(field)?.to_fn()),
            MapSpec::Poly(p) => Ok(TermPoly::parse(field, p)?.to_fn()),
        }
    }
}

impl fmt::Display for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapSpec::Family(fam) => write!(f, "{fam}"),
            MapSpec::Poly(p) => f.write_str(p),
        }
    }
}

impl FromStr for MapSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.starts_with(|c: char| c.is_ascii_alphabetic()) {
            Ok(MapSpec::Family(s.parse()?))
        } else if s.is_empty() {
            Err(Error::parse(0, "empty map spec"))
        } else {
            Ok(MapSpec::Poly(s.to_string()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    F {
        f: MapSpec,
        beta: BetaChoice,
    },
    G {
        f: MapSpec,
        beta: BetaChoice,
    },
    F1 {
        f1: MapSpec,
        f2: MapSpec,
        beta: BetaChoice,
    },
    F2 {
        f1: MapSpec,
        f2: MapSpec,
        beta: BetaChoice,
    },
    F3 {
        f1: MapSpec,
        f2: MapSpec,
        beta: BetaChoice,
    },
    Dickson {
        h: u64,
        a: u32,
        beta: BetaChoice,
    },
    Tower {
        f: MapSpec,
        depth: u32,
        scheme: TowerScheme,
    },
    T71 {
        a: u32,
        b: u32,
        u: u32,
        t: u64,
    },
    T72 {
        a: u32,
        b: u32,
        u: u32,
        t: u64,
    },
    T73 {
        a: u32,
        b: u32,
        c: u32,
        u: u32,
        t: u64,
    },
    T74 {
        a: u32,
        b: u32,
        c: u32,
        u: u32,
        t: u64,
    },
}

/// A constructed map and the verdict the theory predicts, if it makes one.
#[derive(Debug, Clone)]
pub struct Built {
    pub map: PolyFn,
    pub predicted: Option<bool>,
}

fn keys(kind: &str) -> Option<&'static [&'static str]> {
    Some(match kind {
        "F" | "G" => &["f", "beta"],
        "F1" | "F2" | "F3" => &["f1", "f2", "beta"],
        "D" => &["h", "a", "beta"],
        "tower" => &["f", "depth", "scheme"],
        "T71" | "T72" => &["a", "b", "u", "t"],
        "T73" | "T74" => &["a", "b", "c", "u", "t"],
        _ => return None,
    })
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(s.len(), "expected KIND:key=value,..."))?;
        let known = keys(kind).ok_or_else(|| Error::parse(0, format!("unknown construction {kind:?}")))?;
        // values may contain commas (polynomial specs, family ids), so a
        // piece only opens a new parameter when it starts with a known key
        let mut params: Vec<(String, String, usize)> = Vec::new();
        let mut pos = kind.len() + 1;
        for piece in rest.split(',') {
            let key = piece.split_once('=').map(|(k, _)| k).filter(|k| known.contains(k));
            match (key, params.last_mut()) {
                (Some(k), _) => {
                    if params.iter().any(|(seen, _, _)| seen == k) {
                        return Err(Error::parse(pos, format!("parameter {k:?} given twice")));
                    }
                    params.push((k.to_string(), piece[k.len() + 1..].to_string(), pos + k.len() + 1));
                }
                (None, Some(last)) => {
                    last.1.push(',');
                    last.1.push_str(piece);
                }
                (None, None) => return Err(Error::parse(pos, format!("expected one of {known:?}"))),
            }
            pos += piece.len() + 1;
        }
        let get = |key: &str| {
            params
                .iter()
                .find(|(k, _, _)| k == key)
                .map(|(_, v, at)| (v.as_str(), *at))
        };
        let need = |key: &str| get(key).ok_or_else(|| Error::parse(0, format!("{kind} needs parameter {key}")));
        let map = |key: &str| -> Result<MapSpec> {
            let (v, at) = need(key)?;
            v.parse().map_err(|e| shift(e, at))
        };
        let int = |key: &str| -> Result<u64> {
            let (v, at) = need(key)?;
            v.parse()
                .map_err(|_| Error::parse(at, format!("bad integer {v:?} for {key}")))
        };
        let elem = |key: &str| -> Result<u32> {
            let v = int(key)?;
            u32::try_from(v).map_err(|_| Error::parse(0, format!("{key} = {v} is not an element encoding")))
        };
        let beta = || -> Result<BetaChoice> {
            get("beta").map_or(Ok(BetaChoice::Root), |(v, at)| v.parse().map_err(|e| shift(e, at)))
        };
        Ok(match kind {
            "F" => Construction::F {
                f: map("f")?,
                beta: beta()?,
            },
            "G" => Construction::G {
                f: map("f")?,
                beta: beta()?,
            },
            "F1" => Construction::F1 {
                f1: map("f1")?,
                f2: map("f2")?,
                beta: beta()?,
            },
            "F2" => Construction::F2 {
                f1: map("f1")?,
                f2: map("f2")?,
                beta: beta()?,
            },
            "F3" => Construction::F3 {
                f1: map("f1")?,
                f2: map("f2")?,
                beta: beta()?,
            },
            "D" => Construction::Dickson {
                h: int("h")?,
                a: elem("a")?,
                beta: beta()?,
            },
            "tower" => Construction::Tower {
                f: map("f")?,
                depth: int("depth")? as u32,
                scheme: get("scheme").map_or(Ok(TowerScheme::F1), |(v, at)| v.parse().map_err(|e| shift(e, at)))?,
            },
            "T71" => Construction::T71 {
                a: elem("a")?,
                b: elem("b")?,
                u: elem("u")?,
                t: int("t")?,
            },
            "T72" => Construction::T72 {
                a: elem("a")?,
                b: elem("b")?,
                u: elem("u")?,
                t: int("t")?,
            },
            "T73" => Construction::T73 {
                a: elem("a")?,
                b: elem("b")?,
                c: elem("c")?,
                u: elem("u")?,
                t: int("t")?,
            },
            _ => Construction::T74 {
                a: elem("a")?,
                b: elem("b")?,
                c: elem("c")?,
                u: elem("u")?,
                t: int("t")?,
            },
        })
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Construction::*;
        match self {
            F { f: m, beta } => write!(f, "F:f={m},beta={beta}"),
            G { f: m, beta } => write!(f, "G:f={m},beta={beta}"),
            F1 { f1, f2, beta } => write!(f, "F1:f1={f1},f2={f2},beta={beta}"),
            F2 { f1, f2, beta } => write!(f, "F2:f1={f1},f2={f2},beta={beta}"),
            F3 { f1, f2, beta } => write!(f, "F3:f1={f1},f2={f2},beta={beta}"),
            Dickson { h, a, beta } => write!(f, "D:h={h},a={a},beta={beta}"),
            Tower { f: m, depth, scheme } => write!(f, "tower:f={m},depth={depth},scheme={scheme}"),
            T71 { a, b, u, t } => write!(f, "T71:a={a},b={b},u={u},t={t}"),
            T72 { a, b, u, t } => write!(f, "T72:a={a},b={b},u={u},t={t}"),
            T73 { a, b, c, u, t } => write!(f, "T73:a={a},b={b},c={c},u={u},t={t}"),
            T74 { a, b, c, u, t } => write!(f, "T74:a={a},b={b},c={c},u={u},t={t}"),
        }
    }
}

impl Construction {
    /// Builds the map. `field` is the extension for every kind except
    /// `tower`, where it is the field the iteration starts from.
    pub fn build(&self, field: &FieldCtx, caps: &Caps) -> Result<Built> {
        use Construction::*;
        let quad = |beta: &BetaChoice| QuadFrame::new(field, *beta);
        let cubic = || CubicFrame::new(field);
        let pp = |m: &PolyFn| -> Result<bool> { Ok(is_permutation(m, caps)?.verdict) };
        let e = Elem;
        let (map, predicted) = match self {
            F { f, beta } => {
                let frame = quad(beta)?;
                let f = f.resolve(frame.base())?;
                // sufficient, not known to be necessary
                let opoly = is_opolynomial(&f, caps)?.verdict;
                (construct_f(&frame, &f)?, opoly.then_some(true))
            }
            G { f, beta } => {
                let frame = quad(beta)?;
                let f = f.resolve(frame.base())?;
                let ok = pp(&f)?;
                (construct_g(&frame, &f)?, ok.then_some(true))
            }
            F1 { f1, f2, beta } | F2 { f1, f2, beta } | F3 { f1, f2, beta } => {
                let frame = quad(beta)?;
                let (f1, f2) = (f1.resolve(frame.base())?, f2.resolve(frame.base())?);
                let predicted = pp(&f1)? && pp(&f2)?;
                let map = match self {
                    F1 { .. } => construct_f1(&frame, &f1, &f2)?,
                    F2 { .. } => construct_f2(&frame, &f1, &f2)?,
                    _ => construct_f3(&frame, &f1, &f2)?,
                };
                (map, Some(predicted))
            }
            Dickson { h, a, beta } => {
                let (map, predicted) = dickson_pair(&quad(beta)?, *h, e(*a))?;
                (map, Some(predicted))
            }
            Tower { f, depth, scheme } => {
                let f = f.resolve(field)?;
                let ok = pp(&f)?;
                let map = tower_iterate(&f, *depth, *scheme, caps)?.pop().expect("non-empty");
                let predicted = match scheme {
                    TowerScheme::G => ok.then_some(true),
                    _ => Some(ok),
                };
                (map, predicted)
            }
            T71 { a, b, u, t } => {
                let (m, p) = further_t71(&quad(&BetaChoice::Root)?, e(*a), e(*b), e(*u), *t)?;
                (m, Some(p))
            }
            T72 { a, b, u, t } => {
                let (m, p) = further_t72(&quad(&BetaChoice::Root)?, e(*a), e(*b), e(*u), *t)?;
                (m, Some(p))
            }
            T73 { a, b, c, u, t } => {
                let (m, p) = cubic_t73(&cubic()?, e(*a), e(*b), e(*c), e(*u), *t)?;
                (m, Some(p))
            }
            T74 { a, b, c, u, t } => {
                let (m, p) = cubic_t74(&cubic()?, e(*a), e(*b), e(*c), e(*u), *t)?;
                (m, Some(p))
            }
        };
        Ok(Built { map, predicted })
    }
}
