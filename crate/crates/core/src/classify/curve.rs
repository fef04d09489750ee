//! The one-parameter real family containing every `(-,-)` quadruple of a
//! form with `mn != 0`.
//!
//! Floating point lives here only. Nothing on the decision path depends on
//! it: the search box is computed exactly in the parent module.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Definiteness, Error, Form, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// `sin`/`cos` for definite forms, `sinh`/`cosh` for indefinite ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    Trigonometric,
    Hyperbolic,
}

impl CurveKind {
    fn s(self, x: f64) -> f64 {
        match self {
            CurveKind::Trigonometric => libm::sin(x),
            CurveKind::Hyperbolic => libm::sinh(x),
        }
    }

    fn c(self, x: f64) -> f64 {
        match self {
            CurveKind::Trigonometric => libm::cos(x),
            CurveKind::Hyperbolic => libm::cosh(x),
        }
    }

    /// `+1` for the complex case, `-1` for the hyperbolic one.
    pub fn epsilon(self) -> f64 {
        match self {
            CurveKind::Trigonometric => 1.0,
            CurveKind::Hyperbolic => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub theta: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CurvePoint {
    pub fn coords(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Matrix `[[alpha, beta], [gamma, delta]]` of a real isomorphism `phi`
/// with `f = |phi|^2`, in the bases `(e1, e2)` and `(1, j)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmbeddingMatrix {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl EmbeddingMatrix {
    /// `(alpha^2 + eps gamma^2, 2(alpha beta + eps gamma delta), beta^2 + eps delta^2)`.
    pub fn form(&self, eps: f64) -> [f64; 3] {
        let EmbeddingMatrix { alpha, beta, gamma, delta } = *self;
        [
            alpha * alpha + eps * gamma * gamma,
            2.0 * (alpha * beta + eps * gamma * delta),
            beta * beta + eps * delta * delta,
        ]
    }
}

struct Params {
    kind: CurveKind,
    m: f64,
    k: f64,
    n: f64,
    disc: f64,
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn params(f: &Form) -> Result<Params> {
    let kind = match f.definiteness() {
        Definiteness::Degenerate => return Err(Error::Degenerate),
        Definiteness::Indefinite => CurveKind::Hyperbolic,
        Definiteness::PositiveDefinite | Definiteness::NegativeDefinite => CurveKind::Trigonometric,
    };
    if f.m.is_zero() || f.n.is_zero() {
        return Err(Error::ZeroOuterCoefficient);
    }
    if f.definiteness() == Definiteness::NegativeDefinite {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(Params {
        kind,
        m: to_f64(&f.m),
        k: to_f64(&f.k),
        n: to_f64(&f.n),
        disc: to_f64(&f.discriminant()),
    })
}

pub fn curve_kind(f: &Form) -> Result<CurveKind> {
    params(f).map(|p| p.kind)
}

/// Whether the closed form applies: definite, or indefinite with
/// `m, n, k > 0` (where `k = 2 sqrt(mn) cosh(phi)` is solvable).
fn closed_form_applies(f: &Form) -> bool {
    f.is_positive_definite() || (f.m.is_positive() && f.n.is_positive() && f.k.is_positive())
}

/// `phi = sign(k) c^{-1}(k / sqrt(4mn))`, with `sign(0) = +1`.
fn phi(p: &Params) -> f64 {
    let ratio = p.k / libm::sqrt(4.0 * p.m * p.n);
    let sign = if p.k < 0.0 { -1.0 } else { 1.0 };
    match p.kind {
        CurveKind::Trigonometric => sign * libm::acos(ratio.clamp(-1.0, 1.0)),
        CurveKind::Hyperbolic => sign * libm::acosh(ratio),
    }
}

/// An orientation-preserving `phi` with `f = |phi|^2`, rotated by `theta`.
pub fn embedding_matrix(f: &Form, theta: f64, branch: Branch) -> Result<EmbeddingMatrix> {
    let p = params(f)?;
    let sg = branch.sign();
    let e = if closed_form_applies(f) {
        let ph = phi(&p);
        let (sm, sn) = (libm::sqrt(p.m), libm::sqrt(p.n));
        EmbeddingMatrix {
            alpha: sm * p.kind.c(theta),
            beta: sn * p.kind.c(theta + ph),
            gamma: sm * p.kind.s(theta),
            delta: sn * p.kind.s(theta + ph),
        }
    } else {
        // phi(e2) = phi(e1) (lambda + mu j)
        let lambda = p.k / (2.0 * p.m);
        let mu = libm::sqrt(libm::fabs(p.disc)) / (2.0 * p.m);
        let root = libm::sqrt(libm::fabs(p.m));
        let (alpha, gamma) = if p.m > 0.0 {
            (root * p.kind.c(theta), root * p.kind.s(theta))
        } else {
            (root * p.kind.s(theta), root * p.kind.c(theta))
        };
        let eps = p.kind.epsilon();
        EmbeddingMatrix {
            alpha,
            beta: lambda * alpha - eps * mu * gamma,
            gamma,
            delta: lambda * gamma + mu * alpha,
        }
    };
    Ok(EmbeddingMatrix {
        alpha: sg * e.alpha,
        beta: sg * e.beta,
        gamma: sg * e.gamma,
        delta: sg * e.delta,
    })
}

/// The quadruple of `phi^{-1}(conj(phi(x) phi(y)))`.
pub fn embedding_to_quadruple(e: &EmbeddingMatrix, eps: f64) -> Result<[f64; 4]> {
    let EmbeddingMatrix { alpha, beta, gamma, delta } = *e;
    let den = alpha * delta - beta * gamma;
    if den == 0.0 || !den.is_finite() {
        return Err(Error::SingularEmbedding);
    }
    Ok([
        (delta * (alpha * alpha - eps * gamma * gamma) + 2.0 * alpha * beta * gamma) / den,
        delta * (3.0 * beta * beta - eps * delta * delta) / den,
        (gamma * (beta * beta - eps * delta * delta) + 2.0 * alpha * beta * delta) / den,
        gamma * (3.0 * alpha * alpha - eps * gamma * gamma) / den,
    ])
}

/// Points of the family at the given parameters.
pub fn curve_sample(f: &Form, thetas: &[f64], branch: Branch) -> Result<Vec<CurvePoint>> {
    let p = params(f)?;
    if !closed_form_applies(f) {
        return thetas
            .iter()
            .map(|&theta| {
                let e = embedding_matrix(f, theta, branch)?;
                let [a, b, c, d] = embedding_to_quadruple(&e, p.kind.epsilon())?;
                Ok(CurvePoint { theta, a, b, c, d })
            })
            .collect();
    }
    let ph = phi(&p);
    let sp = p.kind.s(ph);
    let (sm, sn) = (libm::sqrt(p.m), libm::sqrt(p.n));
    let sg = branch.sign();
    let (s, c) = (|x| p.kind.s(x), |x| p.kind.c(x));
    Ok(thetas
        .iter()
        .map(|&theta| {
            let t1 = theta + ph;
            CurvePoint {
                theta,
                a: sg * sm * s(3.0 * theta + ph) / sp,
                b: sg * (p.n / sm) * s(t1) * (4.0 * c(t1) * c(t1) - 1.0) / sp,
                c: sg * sn * s(3.0 * theta + 2.0 * ph) / sp,
                d: sg * (p.m / sn) * s(theta) * (4.0 * c(theta) * c(theta) - 1.0) / sp,
            }
        })
        .collect())
}

/// `n theta_i = min + i (max - min) / n` for `i < n`.
pub fn uniform_thetas(min: f64, max: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| min + (i as f64) * (max - min) / (n as f64)).collect()
}

/// `(a^2 - cd, ac - bd, c^2 - ab)` in floating point.
pub fn quadruple_form(q: &[f64; 4]) -> [f64; 3] {
    let [a, b, c, d] = *q;
    [a * a - c * d, a * c - b * d, c * c - a * b]
}
