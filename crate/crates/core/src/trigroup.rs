//! The trigroup law `[x, y, e] = -F(x, y) e + F(x, e) y + F(y, e) x` and the
//! normed pairings obtained by fixing one argument.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::exact_div;
use crate::pairings::{PlusParams, PlusVariant};
use crate::{Error, Form, Mat2Z, Pairing, Result, Vec2};

/// `[x, y, e]` for the form `f`, with `f([x, y, e]) = f(x) f(y) f(e)`.
///
/// # Panics
///
/// If the doubled bracket has an odd coordinate. This cannot happen for
/// integer input: the odd parts all carry the factor `2k`.
pub fn bracket(f: &Form, x: &Vec2, y: &Vec2, e: &Vec2) -> Vec2 {
    let pol = f.polarization();
    let fxy = pol.pair(x, y);
    let fxe = pol.pair(x, e);
    let fye = pol.pair(y, e);
    let doubled = e.scale(&-fxy).add(&y.scale(&fxe)).add(&x.scale(&fye));
    Vec2 { x1: halve(&doubled.x1), x2: halve(&doubled.x2) }
}

fn halve(v: &BigInt) -> BigInt {
    let (q, r) = v.div_rem(&BigInt::from(2));
    assert!(r.is_zero(), "trigroup bracket produced an odd doubled coordinate {v}");
    q
}

/// Decides `f([x, y, e]) = f(x) f(y) f(e)` as a polynomial identity by
/// checking it on `{0, 1, 2}^6` (degree at most 2 in each variable).
pub fn is_multiplicative(f: &Form) -> bool {
    let grid: [Vec2; 9] = core::array::from_fn(|i| Vec2::new(i as i64 % 3, i as i64 / 3));
    let values: [BigInt; 9] = core::array::from_fn(|i| f.eval(&grid[i]));
    for (x, fx) in grid.iter().zip(&values) {
        for (y, fy) in grid.iter().zip(&values) {
            let fxy = fx * fy;
            for (e, fe) in grid.iter().zip(&values) {
                if f.eval(&bracket(f, x, y, e)) != &fxy * fe {
                    return false;
                }
            }
        }
    }
    true
}

/// One anchored pairing together with the form it is normed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchoredPairing {
    pub variant: PlusVariant,
    pub pairing: Pairing,
    pub form: Form,
}

/// With `r = g(e0)` and `f = r g`, the pairings `[x, y, e0] / r`,
/// `[y, e0, x] / r` and `[x, e0, y] / r`, in that order.
///
/// Each one coincides with the plus-type pairing of parameters
/// `(g; e0)` of the matching variant.
pub fn pairings_from_anchor(g: &Form, e0: &Vec2) -> Result<[AnchoredPairing; 3]> {
    let r = g.eval(e0);
    if r.is_zero() {
        return Err(Error::ZeroAnchor);
    }
    let f = g.scale(&r);
    let build = |variant: PlusVariant| -> Result<AnchoredPairing> {
        let s = |x: &Vec2, y: &Vec2| -> Result<Vec2> {
            let w = match variant {
                PlusVariant::First => bracket(&f, x, y, e0),
                PlusVariant::Second => bracket(&f, y, e0, x),
                PlusVariant::Third => bracket(&f, x, e0, y),
            };
            Ok(Vec2 { x1: exact_div(&w.x1, &r)?, x2: exact_div(&w.x2, &r)? })
        };
        let (e1, e2) = (Vec2::e1(), Vec2::e2());
        let s11 = s(&e1, &e1)?;
        let s12 = s(&e1, &e2)?;
        let s21 = s(&e2, &e1)?;
        let s22 = s(&e2, &e2)?;
        let pairing = Pairing {
            a1: Mat2Z { a: s11.x1, b: s12.x1, c: s21.x1, d: s22.x1 },
            a2: Mat2Z { a: s11.x2, b: s12.x2, c: s21.x2, d: s22.x2 },
        };
        Ok(AnchoredPairing { variant, pairing, form: f.clone() })
    };
    Ok([
        build(PlusVariant::First)?,
        build(PlusVariant::Second)?,
        build(PlusVariant::Third)?,
    ])
}

/// The parameters `(g; e0)` that the anchored pairings correspond to.
pub fn anchor_params(g: &Form, e0: &Vec2) -> PlusParams {
    PlusParams {
        m: g.m.clone(),
        k: g.k.clone(),
        n: g.n.clone(),
        p: e0.x1.clone(),
        q: e0.x2.clone(),
    }
}
