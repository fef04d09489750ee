//! Exact lattices in `Q(tau)`, `tau^2 = disc`.
//!
//! For `disc < 0` this is an imaginary quadratic field (the complex case);
//! for `disc > 0` it is the rational part of the hyperbolic numbers. One
//! code path serves both: the norm is `u^2 - disc v^2` throughout.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{exact_div, exact_sqrt, is_integer, rat, xgcd};
use crate::forms::{check_discriminant, principal_form};
use crate::matembed::Sublattice;
use crate::pairings::ProductKind;
use crate::{Error, Form, Mat2Z, Result};

/// The algebra `Q(tau)` with `tau^2 = disc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    disc: BigInt,
}

/// `u + v tau` with rational `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AElem {
    pub u: BigRational,
    pub v: BigRational,
}

impl AElem {
    pub fn new(u: BigRational, v: BigRational) -> Self {
        AElem { u, v }
    }

    pub fn from_ints(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Self {
        AElem { u: rat(u.into()), v: rat(v.into()) }
    }

    /// `(u + v tau) / den`.
    pub fn frac(u: impl Into<BigInt>, v: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        AElem {
            u: BigRational::new(u.into(), den.clone()),
            v: BigRational::new(v.into(), den),
        }
    }

    pub fn rational(q: BigRational) -> Self {
        AElem { u: q, v: BigRational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn add(&self, o: &AElem) -> AElem {
        AElem { u: &self.u + &o.u, v: &self.v + &o.v }
    }

    pub fn sub(&self, o: &AElem) -> AElem {
        AElem { u: &self.u - &o.u, v: &self.v - &o.v }
    }

    pub fn neg(&self) -> AElem {
        AElem { u: -&self.u, v: -&self.v }
    }

    pub fn scale(&self, q: &BigRational) -> AElem {
        AElem { u: &self.u * q, v: &self.v * q }
    }

    pub fn conj(&self) -> AElem {
        AElem { u: self.u.clone(), v: -&self.v }
    }

    /// `z + conj(z) = 2u`.
    pub fn trace(&self) -> BigRational {
        &self.u * BigRational::from_integer(BigInt::from(2))
    }
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*tau", self.u, self.v)
    }
}

impl Context {
    pub fn new(disc: impl Into<BigInt>) -> Result<Self> {
        let disc = disc.into();
        check_discriminant(&disc)?;
        Ok(Context { disc })
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// `+1` for the complex case (`disc < 0`), `-1` for the hyperbolic case.
    pub fn epsilon(&self) -> i8 {
        if self.disc.is_negative() {
            1
        } else {
            -1
        }
    }

    pub fn tau(&self) -> AElem {
        AElem::from_ints(0, 1)
    }

    pub fn mul(&self, z: &AElem, w: &AElem) -> AElem {
        let d = rat(self.disc.clone());
        AElem {
            u: &z.u * &w.u + d * &z.v * &w.v,
            v: &z.u * &w.v + &z.v * &w.u,
        }
    }

    /// `z conj(z) = u^2 - disc v^2`.
    pub fn norm(&self, z: &AElem) -> BigRational {
        &z.u * &z.u - rat(self.disc.clone()) * &z.v * &z.v
    }

    /// Inverse of a nonzero element of nonzero norm.
    pub fn inv(&self, z: &AElem) -> Option<AElem> {
        let n = self.norm(z);
        if n.is_zero() {
            return None;
        }
        Some(z.conj().scale(&n.recip()))
    }

    /// `zw`, `conj(z) w`, `z conj(w)` or `conj(zw)`.
    pub fn sigma(&self, kind: ProductKind, z: &AElem, w: &AElem) -> AElem {
        match kind {
            ProductKind::Plain => self.mul(z, w),
            ProductKind::ConjLeft => self.mul(&z.conj(), w),
            ProductKind::ConjRight => self.mul(z, &w.conj()),
            ProductKind::ConjBoth => self.mul(z, w).conj(),
        }
    }

    /// Non-rational with integral trace and norm.
    pub fn is_quadratic_integer(&self, z: &AElem) -> bool {
        !z.v.is_zero() && is_integer(&z.trace()) && is_integer(&self.norm(z))
    }

    /// `sqrt(disc_star / disc)` when it is rational, so that
    /// `tau_star = q tau` has `tau_star^2 = disc_star`.
    fn rescale(&self, disc_star: &BigInt) -> Result<BigRational> {
        let ratio = BigRational::new(disc_star.clone(), self.disc.clone());
        if ratio.is_negative() {
            return Err(Error::ContextMismatch);
        }
        let num = exact_sqrt(ratio.numer()).ok_or(Error::ContextMismatch)?;
        let den = exact_sqrt(ratio.denom()).ok_or(Error::ContextMismatch)?;
        Ok(BigRational::new(num, den))
    }

    /// The generator `tau_star / 2` or `(1 + tau_star) / 2` of `R_{disc_star}`.
    pub fn ring_generator(&self, disc_star: &BigInt) -> Result<AElem> {
        check_discriminant(disc_star)?;
        let q = self.rescale(disc_star)?;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let u = if disc_star.is_even() { BigRational::zero() } else { half.clone() };
        Ok(AElem { u, v: q * half })
    }

    /// The order `R_{disc_star} = span(1, omega)` inside this context.
    pub fn ring(&self, disc_star: &BigInt) -> Result<Lattice> {
        let omega = self.ring_generator(disc_star)?;
        Lattice::from_generators(self, &[AElem::from_ints(1, 0), omega])
    }

    /// `R_disc` itself.
    pub fn ring_r(&self) -> Lattice {
        self.ring(&self.disc.clone()).expect("disc is a valid discriminant of its own context")
    }
}

/// `R_disc` in its own context.
pub fn ring_r(disc: impl Into<BigInt>) -> Result<Lattice> {
    Ok(Context::new(disc)?.ring_r())
}

/// A rank-2 lattice stored in the form `span(r, w + h tau)` with `r > 0`,
/// `h > 0` and `-r/2 < w <= r/2`; equal lattices have equal storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ctx: Context,
    r: BigRational,
    w: BigRational,
    h: BigRational,
}

/// The basis `(r, zeta)` with `r` the least positive rational in `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBasis {
    pub r: BigRational,
    pub zeta: AElem,
}

impl Lattice {
    /// Hermite form of the span of `gens`.
    pub fn from_generators(ctx: &Context, gens: &[AElem]) -> Result<Lattice> {
        let den = gens
            .iter()
            .flat_map(|g| [g.u.denom(), g.v.denom()])
            .fold(BigInt::one(), |acc, d| acc.lcm(d));
        let scaled = |q: &BigRational| (q * rat(den.clone())).to_integer();

        let mut r = BigInt::zero();
        let mut e2: Option<(BigInt, BigInt)> = None;
        for g in gens {
            let (u, v) = (scaled(&g.u), scaled(&g.v));
            if v.is_zero() {
                r = r.gcd(&u);
                continue;
            }
            match e2.take() {
                None => e2 = Some((u, v)),
                Some((w, h)) => {
                    let (g, s, t) = xgcd(&h, &v);
                    let combined = (&s * &w + &t * &u, g.clone());
                    // the complementary combination has v = 0
                    let rest = &(&v / &g) * &w - &(&h / &g) * &u;
                    r = r.gcd(&rest);
                    e2 = Some(combined);
                }
            }
        }
        let Some((w, h)) = e2 else {
            return Err(Error::RankDeficient);
        };
        if r.is_zero() {
            return Err(Error::RankDeficient);
        }
        let (w, h) = if h.is_negative() { (-w, -h) } else { (w, h) };
        let den = rat(den);
        Ok(Lattice::normalized(ctx.clone(), rat(r) / &den, rat(w) / &den, rat(h) / den))
    }

    fn normalized(ctx: Context, r: BigRational, w: BigRational, h: BigRational) -> Lattice {
        // shift w into (-r/2, r/2]
        let half = &r / BigRational::from_integer(BigInt::from(2));
        let t = ((&half - &w) / &r).floor();
        let w = w + t * &r;
        Lattice { ctx, r, w, h }
    }

    /// `span(r, zeta)`.
    pub fn from_r_zeta(ctx: &Context, r: BigRational, zeta: &AElem) -> Result<Lattice> {
        Lattice::from_generators(ctx, &[AElem::rational(r), zeta.clone()])
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn e1(&self) -> AElem {
        AElem::rational(self.r.clone())
    }

    pub fn e2(&self) -> AElem {
        AElem { u: self.w.clone(), v: self.h.clone() }
    }

    pub fn basis(&self) -> [AElem; 2] {
        [self.e1(), self.e2()]
    }

    pub fn canonical_r_zeta(&self) -> CanonicalBasis {
        CanonicalBasis { r: self.r.clone(), zeta: self.e2() }
    }

    /// Integer coordinates of `z` in the basis `(e1, e2)`.
    pub fn coordinates(&self, z: &AElem) -> Option<(BigInt, BigInt)> {
        let b = &z.v / &self.h;
        if !is_integer(&b) {
            return None;
        }
        let a = (&z.u - &b * &self.w) / &self.r;
        if !is_integer(&a) {
            return None;
        }
        Some((a.to_integer(), b.to_integer()))
    }

    pub fn contains(&self, z: &AElem) -> bool {
        self.coordinates(z).is_some()
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis().iter().all(|z| self.contains(z))
    }

    /// `(e1 conj(e2) - e2 conj(e1))^2 = 4 disc h^2 r^2`.
    pub fn discriminant(&self) -> BigRational {
        rat(BigInt::from(4) * &self.ctx.disc) * &self.h * &self.h * &self.r * &self.r
    }

    /// The norm form in the basis `(e1, e2)`: `(r^2, 2 r w, w^2 - disc h^2)`.
    pub fn to_form(&self) -> Result<Form> {
        form_of_basis(&self.ctx, &self.e1(), &self.e2())
    }

    pub fn is_integer_normed(&self) -> bool {
        self.to_form().is_ok()
    }

    pub fn stable_under(&self, kind: ProductKind) -> bool {
        let basis = self.basis();
        basis
            .iter()
            .all(|z| basis.iter().all(|w| self.contains(&self.ctx.sigma(kind, z, w))))
    }

    /// Whether `z L` is contained in `L`.
    pub fn is_multiplied_into_itself_by(&self, z: &AElem) -> bool {
        self.basis().iter().all(|e| self.contains(&self.ctx.mul(z, e)))
    }

    fn same_context(&self, other: &Lattice) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Whether `L` is an ideal of `R_{disc_star}`.
    pub fn is_ideal_of(&self, disc_star: &BigInt) -> Result<bool> {
        let ring = self.ctx.ring(disc_star)?;
        let omega = self.ctx.ring_generator(disc_star)?;
        Ok(ring.contains_lattice(self) && self.is_multiplied_into_itself_by(&omega))
    }

    /// The span of all pairwise products.
    pub fn product(&self, other: &Lattice) -> Result<Lattice> {
        self.same_context(other)?;
        let gens: Vec<AElem> = self
            .basis()
            .iter()
            .flat_map(|z| other.basis().into_iter().map(move |w| (z.clone(), w)))
            .map(|(z, w)| self.ctx.mul(&z, &w))
            .collect();
        Lattice::from_generators(&self.ctx, &gens)
    }

    pub fn conj(&self) -> Lattice {
        let gens = [self.e1().conj(), self.e2().conj()];
        Lattice::from_generators(&self.ctx, &gens).expect("conjugation preserves rank")
    }

    /// `z L` for `z` of nonzero norm.
    pub fn scaled(&self, z: &AElem) -> Result<Lattice> {
        if self.ctx.norm(z).is_zero() {
            return Err(Error::RankDeficient);
        }
        let gens = [self.ctx.mul(z, &self.e1()), self.ctx.mul(z, &self.e2())];
        Lattice::from_generators(&self.ctx, &gens)
    }

    /// Whether the class of `L` is trivial, decided by reducing the
    /// primitive part of its norm form. Complex case only.
    pub fn is_principal(&self) -> Result<bool> {
        if self.ctx.disc.is_positive() {
            return Err(Error::IndefiniteUnsupported);
        }
        let form = self.to_form().map_err(|_| Error::NotIntegerNormed)?;
        let (_, prim) = form.content_and_primitive()?;
        let (reduced, _) = prim.reduce()?;
        Ok(reduced == principal_form(&prim.discriminant())?)
    }

    /// Whether `L^3` is principal.
    pub fn cube_is_principal(&self) -> Result<bool> {
        self.product(self)?.product(self)?.is_principal()
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span({}, {}) [disc {}]", self.r, self.e2(), self.ctx.disc)
    }
}

/// `(N(e1), tr(e1 conj(e2)), N(e2))`, which must be integral.
pub fn form_of_basis(ctx: &Context, e1: &AElem, e2: &AElem) -> Result<Form> {
    let m = ctx.norm(e1);
    let k = ctx.mul(e1, &e2.conj()).trace();
    let n = ctx.norm(e2);
    if !(is_integer(&m) && is_integer(&k) && is_integer(&n)) {
        return Err(Error::NotIntegerNormed);
    }
    Ok(Form { m: m.to_integer(), k: k.to_integer(), n: n.to_integer() })
}

/// `v1 u2 - v2 u1`; negative for the standard basis `(1, tau)`.
fn orientation(e1: &AElem, e2: &AElem) -> BigRational {
    &e1.v * &e2.u - &e2.v * &e1.u
}

/// A lattice carrying a given form together with the basis that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedForm {
    pub lattice: Lattice,
    pub e1: AElem,
    pub e2: AElem,
}

/// Searches `Q(tau)`, `disc = disc(f)`, for a basis `(e1, e2)` with
/// `form_of_basis(e1, e2) = f`, over `e1 = (a + b tau) / d` with
/// `|a|, |b|, d <= height_bound`. `None` means "not found in bound".
pub fn embed_form(f: &Form, height_bound: &BigInt) -> Result<Option<EmbeddedForm>> {
    if f.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let ctx = Context::new(f.discriminant())?;
    let (lead, flipped) = if !f.m.is_zero() {
        (&f.m, false)
    } else if !f.n.is_zero() {
        (&f.n, true)
    } else {
        return Ok(None);
    };
    let Some(first) = conic_point(&ctx, lead, height_bound) else {
        return Ok(None);
    };
    // second = first (k + s tau) / (2 lead) has the right norm and trace
    let two_lead: BigInt = lead * BigInt::from(2);
    let candidates = [BigInt::one(), -BigInt::one()].map(|s| {
        let lambda = AElem::frac(f.k.clone(), s, two_lead.clone());
        ctx.mul(&first, &lambda)
    });
    for second in candidates {
        let (e1, e2) = if flipped { (second, first.clone()) } else { (first.clone(), second) };
        if orientation(&e1, &e2).is_negative() && form_of_basis(&ctx, &e1, &e2).as_ref() == Ok(f) {
            let lattice = Lattice::from_generators(&ctx, &[e1.clone(), e2.clone()])?;
            return Ok(Some(EmbeddedForm { lattice, e1, e2 }));
        }
    }
    Ok(None)
}

/// First `(a + b tau) / d` of norm `target`, by increasing `d`, then `b >= 0`,
/// then `a` in `0, 1, -1, ...`.
fn conic_point(ctx: &Context, target: &BigInt, bound: &BigInt) -> Option<AElem> {
    let mut d = BigInt::one();
    while &d <= bound {
        let rhs = target * &d * &d;
        let mut b = BigInt::zero();
        while &b <= bound {
            // a^2 = target d^2 + disc b^2
            let a2 = &rhs + &ctx.disc * &b * &b;
            if let Some(a) = exact_sqrt(&a2) {
                if &a <= bound && (a.clone().gcd(&b).gcd(&d)).is_one() {
                    return Some(AElem::frac(a, b, d.clone()));
                }
            }
            b += 1;
        }
        d += 1;
    }
    None
}

/// Multiplication by `zeta` (or `conj(zeta)`) in the basis `(r, zeta)`,
/// packaged as the matrix lattice `span(A, rE)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixEmbedding {
    pub sublattice: Sublattice,
    pub r: BigInt,
    pub zeta: AElem,
    pub conjugate: bool,
}

impl MatrixEmbedding {
    /// `iota(x1 zeta + x2 r) = x1 A + x2 rE`; `None` if `z` is not in the lattice.
    pub fn iota(&self, z: &AElem) -> Option<Mat2Z> {
        let x1 = &z.v / &self.zeta.v;
        let x2 = (&z.u - &x1 * &self.zeta.u) / rat(self.r.clone());
        if !is_integer(&x1) || !is_integer(&x2) {
            return None;
        }
        Some(self.sublattice.element(&x1.to_integer(), &x2.to_integer()))
    }
}

/// The embedding of a `sigma_k`-stable integer-normed lattice into
/// `Mat2(Z)`, `k` one of the three plus kinds.
pub fn matrix_embedding(l: &Lattice, kind: ProductKind) -> Result<MatrixEmbedding> {
    if kind == ProductKind::ConjBoth || !l.stable_under(kind) {
        return Err(Error::NotStable);
    }
    if !l.is_integer_normed() {
        return Err(Error::NotIntegerNormed);
    }
    let CanonicalBasis { r, zeta } = l.canonical_r_zeta();
    if !is_integer(&r) {
        return Err(Error::NonIntegralScalar(r));
    }
    let r = r.to_integer();
    let t = zeta.trace().to_integer();
    let n_over_r = exact_div(&l.context().norm(&zeta).to_integer(), &r)?;
    let conjugate = kind != ProductKind::Plain;
    // columns are the images of r and zeta
    let a = if conjugate {
        // conj(zeta) r = t r - r zeta, conj(zeta) zeta = N
        Mat2Z { a: t, b: n_over_r, c: -&r, d: BigInt::zero() }
    } else {
        // zeta r = r zeta, zeta^2 = t zeta - N
        Mat2Z { a: BigInt::zero(), b: -n_over_r, c: r.clone(), d: t }
    };
    let sublattice = Sublattice::new(a, r.clone())?;
    Ok(MatrixEmbedding { sublattice, r, zeta, conjugate })
}
