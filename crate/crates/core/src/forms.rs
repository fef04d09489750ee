//! Binary integer quadratic forms `m*x1^2 + k*x1*x2 + n*x2^2`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{centered_key, centered_range, div_exact_opt, exact_sqrt, isqrt, range_inclusive};
use crate::{Error, Mat2Z, Result};

/// An integer vector `(x1, x2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vec2 {
    pub x1: BigInt,
    pub x2: BigInt,
}

impl Vec2 {
    pub fn new(x1: impl Into<BigInt>, x2: impl Into<BigInt>) -> Self {
        Vec2 { x1: x1.into(), x2: x2.into() }
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    pub fn e1() -> Self {
        Vec2::new(1, 0)
    }

    pub fn e2() -> Self {
        Vec2::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn scale(&self, s: &BigInt) -> Vec2 {
        Vec2 { x1: &self.x1 * s, x2: &self.x2 * s }
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2 { x1: &self.x1 + &o.x1, x2: &self.x2 + &o.x2 }
    }

    pub fn neg(&self) -> Vec2 {
        Vec2 { x1: -&self.x1, x2: -&self.x2 }
    }

    /// All vectors with `|x1|, |x2| <= bound`, ordered by `(x2, x1)`.
    pub fn box_iter(bound: &BigInt) -> impl Iterator<Item = Vec2> + '_ {
        range_inclusive(-bound, bound.clone()).flat_map(move |x2| {
            range_inclusive(-bound, bound.clone()).map(move |x1| Vec2 { x1, x2: x2.clone() })
        })
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

/// The form `m*x1^2 + k*x1*x2 + n*x2^2`, written `(m, k, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Form {
    pub m: BigInt,
    pub k: BigInt,
    pub n: BigInt,
}

/// `2F` for the polarization `F` of a form: the symmetric matrix
/// `[[2m, k], [k, 2n]]`, so that `x^T (2F) x = 2 f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledPolarization {
    matrix: Mat2Z,
}

impl DoubledPolarization {
    pub fn matrix(&self) -> &Mat2Z {
        &self.matrix
    }

    /// `2 F(x, y)`.
    pub fn pair(&self, x: &Vec2, y: &Vec2) -> BigInt {
        self.matrix.bilinear(x, y)
    }
}

impl Form {
    pub fn new(m: impl Into<BigInt>, k: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        Form { m: m.into(), k: k.into(), n: n.into() }
    }

    pub fn zero() -> Self {
        Form::default()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.k.is_zero() && self.n.is_zero()
    }

    pub fn eval(&self, v: &Vec2) -> BigInt {
        &self.m * &v.x1 * &v.x1 + &self.k * &v.x1 * &v.x2 + &self.n * &v.x2 * &v.x2
    }

    pub fn discriminant(&self) -> BigInt {
        &self.k * &self.k - BigInt::from(4) * &self.m * &self.n
    }

    pub fn definiteness(&self) -> Definiteness {
        let disc = self.discriminant();
        if disc.is_zero() {
            Definiteness::Degenerate
        } else if disc.is_positive() {
            Definiteness::Indefinite
        } else if self.m.is_positive() {
            Definiteness::PositiveDefinite
        } else {
            Definiteness::NegativeDefinite
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.definiteness() == Definiteness::PositiveDefinite
    }

    pub fn polarization(&self) -> DoubledPolarization {
        DoubledPolarization {
            matrix: Mat2Z {
                a: &self.m * 2,
                b: self.k.clone(),
                c: self.k.clone(),
                d: &self.n * 2,
            },
        }
    }

    pub fn content(&self) -> BigInt {
        self.m.gcd(&self.k).gcd(&self.n)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// `(g, f / g)` with `g = gcd(m, k, n) > 0`.
    pub fn content_and_primitive(&self) -> Result<(BigInt, Form)> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let g = self.content();
        let prim = Form { m: &self.m / &g, k: &self.k / &g, n: &self.n / &g };
        Ok((g, prim))
    }

    pub fn scale(&self, s: &BigInt) -> Form {
        Form { m: &self.m * s, k: &self.k * s, n: &self.n * s }
    }

    pub fn neg(&self) -> Form {
        Form { m: -&self.m, k: -&self.k, n: -&self.n }
    }

    /// Divides every coefficient by `s`, failing unless all divisions are exact.
    pub fn div_exact(&self, s: &BigInt) -> Option<Form> {
        Some(Form {
            m: div_exact_opt(&self.m, s)?,
            k: div_exact_opt(&self.k, s)?,
            n: div_exact_opt(&self.n, s)?,
        })
    }

    /// `f(M x)` without checking the determinant.
    pub(crate) fn compose(&self, t: &Mat2Z) -> Form {
        let m = self.eval(&Vec2 { x1: t.a.clone(), x2: t.c.clone() });
        let n = self.eval(&Vec2 { x1: t.b.clone(), x2: t.d.clone() });
        let k = self.polarization().pair(
            &Vec2 { x1: t.a.clone(), x2: t.c.clone() },
            &Vec2 { x1: t.b.clone(), x2: t.d.clone() },
        );
        Form { m, k, n }
    }

    /// The form `x -> f(M x)` for `M` in `SL2(Z)`.
    pub fn sl2_apply(&self, t: &Mat2Z) -> Result<Form> {
        let det = t.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(self.compose(t))
    }

    /// Gauss reduction of a primitive positive definite form.
    ///
    /// Returns the reduced form `g` (`|k| <= m <= n`, and `k >= 0` when
    /// `|k| = m` or `m = n`) together with `T` in `SL2(Z)` such that
    /// `g = f(T x)`.
    pub fn reduce(&self) -> Result<(Form, Mat2Z)> {
        if !self.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        Ok(self.reduce_unchecked())
    }

    pub(crate) fn reduce_unchecked(&self) -> (Form, Mat2Z) {
        let mut f = self.clone();
        let mut t = Mat2Z::identity();
        let swap = Mat2Z::new(0, -1, 1, 0);
        loop {
            // bring k into (-m, m]
            let two_m = &f.m * 2;
            let shift = (&f.m - &f.k).div_floor(&two_m);
            if !shift.is_zero() {
                let step = Mat2Z::new(BigInt::one(), shift, BigInt::zero(), BigInt::one());
                f = f.compose(&step);
                t = &t * &step;
            }
            if f.m > f.n {
                f = f.compose(&swap);
                t = &t * &swap;
                continue;
            }
            if f.m == f.n && f.k.is_negative() {
                f = f.compose(&swap);
                t = &t * &swap;
            }
            return (f, t);
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.is_positive_definite()
            && self.k.abs() <= self.m
            && self.m <= self.n
            && !((self.k.abs() == self.m || self.m == self.n) && self.k.is_negative())
    }

    /// Search for `v` with `f(v) = t`.
    ///
    /// For positive or negative definite forms the level set is a finite
    /// ellipse and the search is exhaustive, so `None` is a proof that `t` is
    /// not represented; `box_bound` is ignored. Otherwise the search covers
    /// `|x1|, |x2| <= box_bound` and `None` only means "not found".
    ///
    /// The witness returned is the first one in `(x2, x1)` order, where each
    /// coordinate runs through `0, 1, -1, 2, -2, ...`.
    pub fn represents(&self, t: &BigInt, box_bound: &BigInt) -> Option<Vec2> {
        match self.definiteness() {
            Definiteness::NegativeDefinite => self.neg().represents(&-t, box_bound),
            Definiteness::PositiveDefinite => self.represents_definite(t),
            Definiteness::Indefinite | Definiteness::Degenerate => self.represents_in_box(t, box_bound),
        }
    }

    /// Whether a `None` from [`Form::represents`] is a decision.
    pub fn representation_search_is_exhaustive(&self) -> bool {
        matches!(
            self.definiteness(),
            Definiteness::PositiveDefinite | Definiteness::NegativeDefinite
        )
    }

    fn represents_definite(&self, t: &BigInt) -> Option<Vec2> {
        if t.is_negative() {
            return None;
        }
        if t.is_zero() {
            return Some(Vec2::zero());
        }
        // 4m f = (2m x1 + k x2)^2 + |disc| x2^2, so x2^2 <= 4mt/|disc|.
        let disc = self.discriminant().abs();
        let bound = isqrt(&((BigInt::from(4) * &self.m * t) / &disc)).unwrap_or_default();
        centered_range(&bound).find_map(|x2| {
            match self.solve_x1(&x2, t) {
                Roots::Finite(roots) => roots.into_iter().next().map(|x1| Vec2 { x1, x2 }),
                Roots::Any => unreachable!("definite forms have m != 0"),
            }
        })
    }

    fn represents_in_box(&self, t: &BigInt, bound: &BigInt) -> Option<Vec2> {
        centered_range(bound).find_map(|x2| match self.solve_x1(&x2, t) {
            Roots::Finite(roots) => roots
                .into_iter()
                .find(|x1| x1.abs() <= *bound)
                .map(|x1| Vec2 { x1, x2: x2.clone() }),
            Roots::Any => Some(Vec2 { x1: BigInt::zero(), x2: x2.clone() }),
        })
    }

    /// Integer solutions `x1` of `f(x1, x2) = t`, smallest first.
    fn solve_x1(&self, x2: &BigInt, t: &BigInt) -> Roots {
        let lin = &self.k * x2;
        let constant = &self.n * x2 * x2 - t;
        if self.m.is_zero() {
            if lin.is_zero() {
                return if constant.is_zero() { Roots::Any } else { Roots::Finite(Vec::new()) };
            }
            return Roots::Finite(div_exact_opt(&-constant, &lin).into_iter().collect());
        }
        let d = &lin * &lin - BigInt::from(4) * &self.m * &constant;
        let Some(s) = exact_sqrt(&d) else {
            return Roots::Finite(Vec::new());
        };
        let two_m = &self.m * 2;
        let mut roots: Vec<BigInt> = [-&lin - &s, -&lin + &s]
            .iter()
            .filter_map(|num| div_exact_opt(num, &two_m))
            .collect();
        roots.sort_by_key(centered_key);
        roots.dedup();
        Roots::Finite(roots)
    }

    /// Probes the semigroup property on a sample box.
    ///
    /// Every product `f(x) f(y)` with `x, y` in `|x_i| <= sample_bound` is
    /// searched for a representation. For definite forms the search is
    /// exact, so a counterexample proves the form lacks the property.
    pub fn semigroup_probe(&self, sample_bound: &BigInt, search_bound: &BigInt) -> Result<SemigroupReport> {
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        let mut values: BTreeMap<BigInt, Vec2> = BTreeMap::new();
        for x in Vec2::box_iter(sample_bound) {
            values.entry(self.eval(&x)).or_insert(x);
        }
        let entries: Vec<(&BigInt, &Vec2)> = values.iter().collect();
        let mut checked = 0usize;
        let mut counterexample = None;
        'outer: for (i, (vx, x)) in entries.iter().enumerate() {
            for (vy, y) in &entries[i..] {
                checked += 1;
                let t = *vx * *vy;
                if self.represents(&t, search_bound).is_none() {
                    counterexample = Some(SemigroupCounterexample {
                        x: (*x).clone(),
                        y: (*y).clone(),
                        product: t,
                    });
                    break 'outer;
                }
            }
        }
        Ok(SemigroupReport {
            distinct_values: values.len(),
            products_checked: checked,
            counterexample,
            exhaustive: self.representation_search_is_exhaustive(),
        })
    }
}

enum Roots {
    Finite(Vec<BigInt>),
    /// Every `x1` works (only when `m = 0` and the `x1` terms vanish).
    Any,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupCounterexample {
    pub x: Vec2,
    pub y: Vec2,
    pub product: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupReport {
    pub distinct_values: usize,
    pub products_checked: usize,
    pub counterexample: Option<SemigroupCounterexample>,
    /// `true` when representation searches were exhaustive, i.e. a
    /// counterexample is a proof.
    pub exhaustive: bool,
}

/// The form of the quadratic order of discriminant `disc`:
/// `(1, 0, -disc/4)` or `(1, 1, (1 - disc)/4)`.
pub fn principal_form(disc: &BigInt) -> Result<Form> {
    check_discriminant(disc)?;
    let four = BigInt::from(4);
    if disc.mod_floor(&four).is_zero() {
        Ok(Form::new(1, 0, -(disc / &four)))
    } else {
        Ok(Form::new(1, 1, (BigInt::one() - disc) / &four))
    }
}

pub(crate) fn check_discriminant(disc: &BigInt) -> Result<()> {
    let r = disc.mod_floor(&BigInt::from(4));
    if disc.is_zero() || !(r.is_zero() || r.is_one()) {
        return Err(Error::InvalidDiscriminant(disc.clone()));
    }
    Ok(())
}

/// All reduced primitive positive definite forms of discriminant `disc < 0`,
/// sorted by `(m, k, n)`.
pub fn reduced_forms(disc: &BigInt) -> Vec<Form> {
    if !disc.is_negative() || check_discriminant(disc).is_err() {
        return Vec::new();
    }
    let abs = disc.abs();
    let mut out = Vec::new();
    // reduced forms satisfy 3m^2 <= |disc|
    let mut m = BigInt::one();
    while BigInt::from(3) * &m * &m <= abs {
        for k in range_inclusive(-&m + 1, m.clone()) {
            let num = &k * &k - disc;
            let four_m = &m * 4;
            let Some(n) = div_exact_opt(&num, &four_m) else { continue };
            let f = Form { m: m.clone(), k, n };
            if f.is_reduced() && f.is_primitive() {
                out.push(f);
            }
        }
        m += 1;
    }
    out.sort();
    out
}

/// All Gauss-reduced primitive forms of non-square discriminant `disc > 0`,
/// i.e. `0 < k < sqrt(disc)` and `|sqrt(disc) - 2|m|| < k`, sorted by
/// `(m, k, n)`. Empty for square or invalid discriminants.
pub fn reduced_indefinite_forms(disc: &BigInt) -> Vec<Form> {
    if !disc.is_positive() || check_discriminant(disc).is_err() || exact_sqrt(disc).is_some() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k < *disc {
        let num = &k * &k - disc;
        if num.mod_floor(&BigInt::from(4)).is_zero() {
            // m n = (k^2 - disc) / 4 < 0
            let prod: BigInt = -(&num / BigInt::from(4));
            let mut am = BigInt::one();
            while am <= prod {
                if prod.is_multiple_of(&am) {
                    let two_am: BigInt = &am * 2;
                    let lo = &two_am - &k;
                    let hi = &two_am + &k;
                    if *disc < &hi * &hi && (!lo.is_positive() || &lo * &lo < *disc) {
                        let other = &prod / &am;
                        for (m, n) in [(am.clone(), -&other), (-&am, other.clone())] {
                            let f = Form { m, k: k.clone(), n };
                            if f.is_primitive() {
                                out.push(f);
                            }
                        }
                    }
                }
                am += 1;
            }
        }
        k += 1;
    }
    out.sort();
    out
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.k, self.n)
    }
}
