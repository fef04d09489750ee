//! Two-dimensional sublattices of `Mat2(Z)` closed under one of the products
//! `AB`, `adj(A) B`, `A adj(B)`, `adj(AB)`, and the pairings they induce on
//! the determinant form.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{div_exact_opt, xgcd};
use crate::pairings::{make_s4, make_splus, recover_plus_params, recover_quadruple, ProductKind};
use crate::{Error, Form, Mat2Z, Pairing, PlusParams, Quadruple, Result};

/// `S_k(A, B)`.
pub fn product(kind: ProductKind, a: &Mat2Z, b: &Mat2Z) -> Mat2Z {
    match kind {
        ProductKind::Plain => a * b,
        ProductKind::ConjLeft => &a.adjugate() * b,
        ProductKind::ConjRight => a * &b.adjugate(),
        ProductKind::ConjBoth => (a * b).adjugate(),
    }
}

/// The lattice `span(A, rE)` with `r > 0` and `A` not scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sublattice {
    a: Mat2Z,
    r: BigInt,
}

/// Plus-family parameters of an induced pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedParams {
    Plus(PlusParams),
    Quadruple(Quadruple),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPairing {
    pub pairing: Pairing,
    pub form: Form,
    pub params: InducedParams,
}

impl Sublattice {
    pub fn new(a: Mat2Z, r: impl Into<BigInt>) -> Result<Self> {
        let r = r.into();
        if !r.is_positive() || a.is_scalar() {
            return Err(Error::RankDeficient);
        }
        Ok(Sublattice { a, r })
    }

    pub fn a(&self) -> &Mat2Z {
        &self.a
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn scalar(&self) -> Mat2Z {
        Mat2Z::scalar(self.r.clone())
    }

    /// `x1 A + x2 rE`.
    pub fn element(&self, x1: &BigInt, x2: &BigInt) -> Mat2Z {
        &self.a.scale(x1) + &Mat2Z::scalar(&self.r * x2)
    }

    /// Coordinates `(x1, x2)` of `m = x1 A + x2 rE`, if `m` is in the lattice.
    pub fn coordinates(&self, m: &Mat2Z) -> Option<(BigInt, BigInt)> {
        let a = &self.a;
        let pivots = [(&a.b, m.b.clone()), (&a.c, m.c.clone()), (&(&a.a - &a.d), &m.a - &m.d)];
        let (pa, pm) = pivots.iter().find(|(pa, _)| !pa.is_zero())?;
        let x1 = div_exact_opt(pm, pa)?;
        let x2 = div_exact_opt(&(&m.a - &x1 * &a.a), &self.r)?;
        (self.element(&x1, &x2) == *m).then_some((x1, x2))
    }

    pub fn contains(&self, m: &Mat2Z) -> bool {
        self.coordinates(m).is_some()
    }

    /// `x -> det(x1 A + x2 rE) = (det A, r tr A, r^2)`.
    pub fn determinant_form(&self) -> Form {
        Form {
            m: self.a.det(),
            k: &self.r * self.a.trace(),
            n: &self.r * &self.r,
        }
    }

    fn basis(&self) -> [Mat2Z; 2] {
        [self.a.clone(), self.scalar()]
    }

    /// Closure under `S_k`, checked on the four basis pairs.
    pub fn is_stable(&self, kind: ProductKind) -> bool {
        let basis = self.basis();
        basis
            .iter()
            .all(|x| basis.iter().all(|y| self.contains(&product(kind, x, y))))
    }

    /// The pairing `(x, y) -> S_k(x, y)` in coordinates, normed for the
    /// determinant form, together with its family parameters.
    pub fn induced_pairing(&self, kind: ProductKind) -> Result<InducedPairing> {
        let basis = self.basis();
        let coords = |i: usize, l: usize| {
            self.coordinates(&product(kind, &basis[i], &basis[l])).ok_or(Error::NotStable)
        };
        let (c11, c12, c21, c22) = (coords(0, 0)?, coords(0, 1)?, coords(1, 0)?, coords(1, 1)?);
        let pairing = Pairing {
            a1: Mat2Z { a: c11.0, b: c12.0, c: c21.0, d: c22.0 },
            a2: Mat2Z { a: c11.1, b: c12.1, c: c21.1, d: c22.1 },
        };
        let form = self.determinant_form();
        let (params, rebuilt) = match kind.plus_variant() {
            Some(variant) => {
                let p = recover_plus_params(&pairing, variant)?;
                let rebuilt = make_splus(variant, &p).1;
                (InducedParams::Plus(p), rebuilt)
            }
            None => {
                let q = recover_quadruple(&pairing)?;
                let rebuilt = make_s4(&q).1;
                (InducedParams::Quadruple(q), rebuilt)
            }
        };
        if rebuilt != form {
            return Err(Error::ParameterRecovery);
        }
        Ok(InducedPairing { pairing, form, params })
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span({}, {}E)", self.a, self.r)
    }
}

/// The trace-free part of `m` as a vector: `(b, c, a - d)`; zero iff `m` is scalar.
fn nonscalar_part(m: &Mat2Z) -> [BigInt; 3] {
    [m.b.clone(), m.c.clone(), &m.a - &m.d]
}

fn is_rank_two(g1: &Mat2Z, g2: &Mat2Z) -> bool {
    let u = g1.entries();
    let w = g2.entries();
    (0..4).any(|i| (0..4).any(|j| u[i] * w[j] != u[j] * w[i]))
}

/// The basis `(A, rE)` of `span(g1, g2)` with `r` minimal, `A` normalized
/// so the first nonzero of `(b, c, a - d)` is positive and `0 <= a < r`.
pub fn canonicalize(g1: &Mat2Z, g2: &Mat2Z, kind: ProductKind) -> Result<Sublattice> {
    if !is_rank_two(g1, g2) {
        return Err(Error::RankDeficient);
    }
    let u = nonscalar_part(g1);
    let w = nonscalar_part(g2);
    // primitive (x, y) with x u + y w = 0
    let kernel = match u.iter().position(|c| !c.is_zero()) {
        None => Some((BigInt::from(1), BigInt::zero())),
        Some(i) => {
            let g = w[i].gcd(&u[i]);
            let (x, y) = (&w[i] / &g, -&u[i] / &g);
            (0..3).all(|j| (&x * &u[j] + &y * &w[j]).is_zero()).then_some((x, y))
        }
    };
    let Some((x, y)) = kernel else {
        // a quadratic form vanishing at e1, e2 and e1 + e2 vanishes identically
        let pencil = |s: i64, t: i64| (&g1.scale(&s.into()) + &g2.scale(&t.into())).det();
        let null = [(1, 0), (0, 1), (1, 1)].iter().all(|&(s, t)| pencil(s, t).is_zero());
        if null && kind != ProductKind::ConjBoth {
            return Err(Error::NullSublattice);
        }
        return Err(Error::NoScalar);
    };
    let (_, sx, sy) = xgcd(&x, &y);
    let scalar = &g1.scale(&x) + &g2.scale(&y);
    let mut a = &g2.scale(&sx) - &g1.scale(&sy);
    let r = scalar.a.abs();

    let first = nonscalar_part(&a).into_iter().find(|c| !c.is_zero()).expect("rank two");
    if first.is_negative() {
        a = -&a;
    }
    let shift = a.a.div_floor(&r);
    a = &a - &Mat2Z::scalar(&shift * &r);

    let lattice = Sublattice { a, r };
    if !lattice.is_stable(kind) {
        return Err(Error::NotStable);
    }
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PairingType;
    use proptest::prelude::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn m(a: i64, bb: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::new(a, bb, c, d)
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(Mat2Z::identity().adjugate(), Mat2Z::identity());
        assert_eq!(m(1, 2, 3, 4).adjugate(), m(4, -2, -3, 1));
        let a = m(3, -1, 7, 2);
        assert_eq!(&a + &a.adjugate(), Mat2Z::scalar(a.trace()));
        assert_eq!(&a * &a.adjugate(), Mat2Z::scalar(a.det()));
    }

    #[test]
    fn product_examples() {
        let bm = m(2, 5, -1, 3);
        assert_eq!(product(ProductKind::Plain, &Mat2Z::identity(), &bm), bm);
        let a = m(4, 1, 1, 2);
        assert_eq!(product(ProductKind::ConjLeft, &a, &a), Mat2Z::scalar(a.det()));
    }

    #[test]
    fn stability_examples() {
        let l = Sublattice::new(m(0, -1, 1, 0), 1).unwrap();
        assert!(l.is_stable(ProductKind::Plain));
        let l = Sublattice::new(m(2, 0, 0, 3), 3).unwrap();
        assert!(l.is_stable(ProductKind::Plain));
        let l = Sublattice::new(m(1, 1, 0, 1), 2).unwrap();
        assert!(!l.is_stable(ProductKind::ConjBoth));
        assert!(!l.contains(&product(ProductKind::ConjBoth, l.a(), l.a())));
    }

    #[test]
    fn canonicalize_examples() {
        let a = m(1, 2, 3, 4);
        let l = canonicalize(&(&a + &Mat2Z::scalar(5)), &Mat2Z::scalar(5), ProductKind::ConjBoth);
        // tr^2 - det = 25 + 2 = 27 is not divisible by 5
        assert_eq!(l, Err(Error::NotStable));

        let a = m(1, 2, 3, 6);
        // det 0, so r = 5 divides det
        let l = canonicalize(&(&a + &Mat2Z::scalar(5)), &Mat2Z::scalar(5), ProductKind::Plain).unwrap();
        assert_eq!((l.a(), l.r()), (&a, &b(5)));

        let l = Sublattice::new(m(0, -1, 1, 0), 1).unwrap();
        let again = canonicalize(l.a(), &l.scalar(), ProductKind::Plain).unwrap();
        assert_eq!(again, Sublattice::new(m(0, 1, -1, 0), 1).unwrap());

        assert_eq!(
            canonicalize(&m(1, 0, 0, 0), &m(0, 1, 0, 0), ProductKind::Plain),
            Err(Error::NullSublattice)
        );
        assert_eq!(canonicalize(&m(1, 2, 3, 4), &m(2, 4, 6, 8), ProductKind::Plain), Err(Error::RankDeficient));
        assert_eq!(canonicalize(&m(1, 0, 0, 2), &m(0, 1, 0, 0), ProductKind::Plain), Err(Error::NoScalar));
    }

    #[test]
    fn canonicalize_finds_minimal_scalar() {
        // span(A + E, A - E) contains 2E but not E
        let a = m(1, 3, 2, 0);
        let g1 = &a + &Mat2Z::identity();
        let g2 = &a - &Mat2Z::identity();
        let l = canonicalize(&g1, &g2, ProductKind::Plain).unwrap();
        assert_eq!(l.r(), &b(2));
        assert!(l.contains(&g1) && l.contains(&g2));
        assert!(!l.contains(&Mat2Z::identity()));
    }

    #[test]
    fn induced_pairing_examples() {
        let l = Sublattice::new(m(0, -1, 1, 0), 1).unwrap();
        let ip = l.induced_pairing(ProductKind::Plain).unwrap();
        assert_eq!(ip.form, Form::new(1, 0, 1));
        assert!(ip.pairing.is_normed(&ip.form));
        assert_eq!(ip.params, InducedParams::Plus(PlusParams::new(1, 0, 1, 0, 1)));

        // t = 3, D = 2, r = 7 divides t^2 - D = 7
        let a = m(1, 1, 0, 2);
        let l = Sublattice::new(a, 7).unwrap();
        let ip = l.induced_pairing(ProductKind::ConjBoth).unwrap();
        assert_eq!(ip.params, InducedParams::Quadruple(Quadruple::new(-3, 0, -7, -1)));
        assert_eq!(ip.pairing.type_of(&ip.form), Ok(PairingType::MM));

        let l = Sublattice::new(m(1, 1, 0, 1), 2).unwrap();
        assert_eq!(l.induced_pairing(ProductKind::ConjBoth), Err(Error::NotStable));
    }

    #[test]
    fn stability_criteria_on_grid() {
        for a in -2..=2 {
            for bb in -2..=2 {
                for c in -2..=2 {
                    for d in -2..=2 {
                        let mat = m(a, bb, c, d);
                        if mat.is_scalar() {
                            continue;
                        }
                        for r in 1..=4 {
                            let l = Sublattice::new(mat.clone(), r).unwrap();
                            let det = mat.det();
                            let t = mat.trace();
                            let dvd_det = det.is_multiple_of(&b(r));
                            let dvd_4 = (&t * &t - &det).is_multiple_of(&b(r));
                            assert_eq!(l.is_stable(ProductKind::Plain), dvd_det);
                            assert_eq!(l.is_stable(ProductKind::ConjLeft), dvd_det);
                            assert_eq!(l.is_stable(ProductKind::ConjRight), dvd_det);
                            assert_eq!(l.is_stable(ProductKind::ConjBoth), dvd_4);
                        }
                    }
                }
            }
        }
    }

    fn mat() -> impl Strategy<Value = Mat2Z> {
        (-12i64..=12, -12i64..=12, -12i64..=12, -12i64..=12).prop_map(|(a, b, c, d)| m(a, b, c, d))
    }

    fn kind() -> impl Strategy<Value = ProductKind> {
        prop_oneof![
            Just(ProductKind::Plain),
            Just(ProductKind::ConjLeft),
            Just(ProductKind::ConjRight),
            Just(ProductKind::ConjBoth)
        ]
    }

    proptest! {
        #[test]
        fn products_are_det_multiplicative(k in kind(), x in mat(), y in mat()) {
            prop_assert_eq!(product(k, &x, &y).det(), x.det() * y.det());
        }

        #[test]
        fn induced_pairings_are_normed(k in kind(), a in mat(), r in 1i64..=12) {
            prop_assume!(!a.is_scalar());
            let l = Sublattice::new(a.clone(), r).unwrap();
            if !l.is_stable(k) {
                return Ok(());
            }
            let ip = l.induced_pairing(k).unwrap();
            prop_assert!(ip.pairing.is_normed(&ip.form));
            if !ip.form.is_degenerate() {
                prop_assert_eq!(ip.pairing.type_of(&ip.form), Ok(k.expected_type()));
            }
            let (t, det) = (a.trace(), a.det());
            match ip.params {
                InducedParams::Plus(p) => {
                    prop_assert_eq!(p, PlusParams { m: det / b(r), k: t, n: b(r), p: b(0), q: b(1) });
                }
                InducedParams::Quadruple(q) => {
                    let d = -((&t * &t - det) / b(r));
                    prop_assert_eq!(q, Quadruple { a: -t, b: b(0), c: b(-r), d });
                }
            }
        }

        #[test]
        fn canonicalize_preserves_span(k in kind(), a in mat(), r in 1i64..=8, s in -3i64..=3, t in -3i64..=3) {
            prop_assume!(!a.is_scalar());
            let l = Sublattice::new(a, r).unwrap();
            prop_assume!(l.is_stable(k));
            // unimodular change of basis [[1, s], [t, 1 + s t]]
            let g1 = &l.a().scale(&b(1)) + &l.scalar().scale(&b(s));
            let g2 = &l.a().scale(&b(t)) + &l.scalar().scale(&b(1 + s * t));
            let c = canonicalize(&g1, &g2, k).unwrap();
            prop_assert_eq!(c.r(), l.r());
            prop_assert!(c.contains(l.a()) && l.contains(c.a()));
            prop_assert!(!c.a().a.is_negative() && c.a().a < *c.r());
        }
    }
}
