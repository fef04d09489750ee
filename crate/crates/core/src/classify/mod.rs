//! Which of the four pairing types a form admits, plus order-3 verdicts.

pub mod curve;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{div_exact_opt, isqrt, range_inclusive};
use crate::forms::principal_form;
use crate::pairings::{make_s4, make_splus};
use crate::{Definiteness, Error, Form, PairingType, PlusParams, PlusVariant, Quadruple, Result};

pub const DEFAULT_BOX_BOUND: i64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    /// The answer is proven, whether or not a witness was found.
    Decided,
    /// No witness inside the search box; nothing is claimed outside it.
    BoundedSearchOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub witness: Option<W>,
    pub decision: Decision,
}

impl<W> Verdict<W> {
    fn found(w: W) -> Self {
        Verdict { witness: Some(w), decision: Decision::Decided }
    }

    pub fn admits(&self) -> bool {
        self.witness.is_some()
    }

    pub fn is_decided(&self) -> bool {
        self.decision == Decision::Decided
    }
}

/// Bounds for `|a|, |b|, |c|, |d|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S4Box {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl S4Box {
    fn uniform(n: &BigInt) -> S4Box {
        S4Box { a: n.clone(), b: n.clone(), c: n.clone(), d: n.clone() }
    }

    /// Number of integer points in the box.
    pub fn candidates(&self) -> BigInt {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .map(|x| *x * 2u32 + 1u32)
            .product()
    }

    pub fn contains(&self, q: &Quadruple) -> bool {
        q.a.abs() <= self.a && q.b.abs() <= self.b && q.c.abs() <= self.c && q.d.abs() <= self.d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Coordinate bound for the searches that are not exhaustive.
    pub box_bound: BigInt,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { box_bound: BigInt::from(DEFAULT_BOX_BOUND) }
    }
}

impl SearchBounds {
    pub fn new(box_bound: impl Into<BigInt>) -> Self {
        SearchBounds { box_bound: box_bound.into() }
    }
}

/// Amplitudes of the curve, floored. With `s(phi)^2 = |disc| / 4mn`:
/// `|a|^2 <= 4m^2 n / |disc|`, `|b|^2 <= 4n^3 / |disc|`,
/// `|c|^2 <= 4mn^2 / |disc|`, `|d|^2 <= 4m^3 / |disc|`.
///
/// Computed exactly, so no rounding can lose a lattice point.
pub fn s4_search_bounds(f: &Form) -> Result<S4Box> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let disc = f.discriminant().abs();
    let (m, n) = (&f.m, &f.n);
    let four = BigInt::from(4);
    let bound = |num: BigInt| isqrt(&(num / &disc)).expect("nonnegative");
    Ok(S4Box {
        a: bound(&four * m * m * n),
        b: bound(&four * n * n * n),
        c: bound(&four * m * n * n),
        d: bound(&four * m * m * m),
    })
}

/// All `(a, b, c, d)` in the box with `(a^2 - cd, ac - bd, c^2 - ab) = f`,
/// found by solving for `b` and `d` given `(a, c)`.
fn s4_solutions(f: &Form, bx: &S4Box) -> Vec<Quadruple> {
    let (m, k, n) = (&f.m, &f.k, &f.n);
    let mut out = Vec::new();
    let mut push = |a: &BigInt, b: BigInt, c: &BigInt, d: BigInt| {
        let q = Quadruple { a: a.clone(), b, c: c.clone(), d };
        if bx.contains(&q) && &q.form() == f {
            out.push(q);
        }
    };
    for a in range_inclusive(-&bx.a, bx.a.clone()) {
        for c in range_inclusive(-&bx.c, bx.c.clone()) {
            match (a.is_zero(), c.is_zero()) {
                (_, false) => {
                    let Some(d) = div_exact_opt(&(&a * &a - m), &c) else { continue };
                    if !a.is_zero() {
                        if let Some(b) = div_exact_opt(&(&c * &c - n), &a) {
                            push(&a, b, &c, d);
                        }
                    } else if !d.is_zero() {
                        // m = -cd, k = -bd
                        if let Some(b) = div_exact_opt(&-k, &d) {
                            push(&a, b, &c, d);
                        }
                    }
                }
                (false, true) => {
                    let Some(b) = div_exact_opt(&-n, &a) else { continue };
                    if !b.is_zero() {
                        if let Some(d) = div_exact_opt(&-k, &b) {
                            push(&a, b, &c, d);
                        }
                    }
                }
                (true, true) => {
                    // m = n = 0 and bd = -k
                    if k.is_zero() {
                        continue;
                    }
                    for b in range_inclusive(-&bx.b, bx.b.clone()) {
                        if let Some(d) = div_exact_opt(&-k, &b).filter(|_| !b.is_zero()) {
                            push(&a, b, &c, d);
                        }
                    }
                }
            }
        }
    }
    out
}

fn lex_key(q: &Quadruple) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
    (&q.a, &q.b, &q.c, &q.d)
}

/// A quadruple `Q` with `f_4(Q) = f`, if one exists.
///
/// Positive definite forms are searched exhaustively over
/// [`s4_search_bounds`]. Negative definite forms admit no normed pairing at
/// all. Indefinite forms are searched in `|a|, ..., |d| <= box_bound`.
/// The witness is the lexicographically least sign-normalized solution.
pub fn admits_type_minus_minus(f: &Form, box_bound: Option<&BigInt>) -> Result<Verdict<Quadruple>> {
    let (bx, decision) = match f.definiteness() {
        Definiteness::Degenerate => return Err(Error::Degenerate),
        Definiteness::NegativeDefinite => {
            return Ok(Verdict { witness: None, decision: Decision::Decided });
        }
        Definiteness::PositiveDefinite => (s4_search_bounds(f)?, Decision::Decided),
        Definiteness::Indefinite => {
            let default = BigInt::from(DEFAULT_BOX_BOUND);
            (S4Box::uniform(box_bound.unwrap_or(&default)), Decision::BoundedSearchOnly)
        }
    };
    let witness = s4_solutions(f, &bx)
        .iter()
        .map(Quadruple::sign_normalized)
        .min_by(|x, y| lex_key(x).cmp(&lex_key(y)));
    Ok(match witness {
        Some(q) => Verdict::found(q),
        None => Verdict { witness: None, decision },
    })
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Parameters `(g; p, q)` with `g(p, q) = r > 0` and `f = r g`, if any.
///
/// One witness serves all three plus-type variants. Divisors `r` of the
/// content are tried in increasing order; for each the witness is the first
/// representation found by [`Form::represents`].
pub fn admits_plus_types(f: &Form, box_bound: Option<&BigInt>) -> Result<Verdict<PlusParams>> {
    if f.is_degenerate() {
        return Err(Error::Degenerate);
    }
    let default = BigInt::from(DEFAULT_BOX_BOUND);
    let bound = box_bound.unwrap_or(&default);
    for r in positive_divisors(&f.content()) {
        let g = f.div_exact(&r).expect("r divides the content");
        if let Some(v) = g.represents(&r, bound) {
            let params = PlusParams { m: g.m, k: g.k, n: g.n, p: v.x1, q: v.x2 };
            debug_assert_eq!(&params.form(), f);
            return Ok(Verdict::found(params));
        }
    }
    let decision = if f.representation_search_is_exhaustive() {
        Decision::Decided
    } else {
        Decision::BoundedSearchOnly
    };
    Ok(Verdict { witness: None, decision })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub form: Form,
    pub admits_pp: Verdict<PlusParams>,
    pub admits_mp: Verdict<PlusParams>,
    pub admits_pm: Verdict<PlusParams>,
    pub admits_mm: Verdict<Quadruple>,
}

impl ClassificationReport {
    /// The types with a witness, in the order `(+,+), (-,+), (+,-), (-,-)`.
    pub fn admitted_types(&self) -> Vec<PairingType> {
        let mut out = Vec::new();
        for (v, t) in [
            (&self.admits_pp, PairingType::PP),
            (&self.admits_mp, PairingType::MP),
            (&self.admits_pm, PairingType::PM),
        ] {
            if v.admits() {
                out.push(t);
            }
        }
        if self.admits_mm.admits() {
            out.push(PairingType::MM);
        }
        out
    }

    pub fn is_fully_decided(&self) -> bool {
        self.admits_pp.is_decided()
            && self.admits_mp.is_decided()
            && self.admits_pm.is_decided()
            && self.admits_mm.is_decided()
    }

    /// Rebuilds every witness and checks it against the form.
    pub fn witnesses_are_sound(&self) -> bool {
        let plus = [
            (&self.admits_pp, PlusVariant::First),
            (&self.admits_mp, PlusVariant::Second),
            (&self.admits_pm, PlusVariant::Third),
        ];
        let plus_ok = plus.iter().all(|(v, variant)| match &v.witness {
            None => true,
            Some(p) => {
                let (s, g) = make_splus(*variant, p);
                g == self.form
                    && s.is_normed(&g)
                    && s.type_of(&g).map_or(false, |t| t == variant.expected_type())
            }
        });
        let mm_ok = match &self.admits_mm.witness {
            None => true,
            Some(q) => {
                let (s, g) = make_s4(q);
                g == self.form && s.is_normed(&g) && s.type_of(&g) == Ok(PairingType::MM)
            }
        };
        plus_ok && mm_ok
    }
}

pub fn full_classification(f: &Form, bounds: &SearchBounds) -> Result<ClassificationReport> {
    let plus = admits_plus_types(f, Some(&bounds.box_bound))?;
    let mm = admits_type_minus_minus(f, Some(&bounds.box_bound))?;
    Ok(ClassificationReport {
        form: f.clone(),
        admits_pp: plus.clone(),
        admits_mp: plus.clone(),
        admits_pm: plus,
        admits_mm: mm,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order3Verdict {
    Order1,
    Order3,
    NotApplicable,
}

/// The order of the class of `f_4(Q)`, which always divides 3.
pub fn order3_verdict(q: &Quadruple) -> Order3Verdict {
    let f = q.form();
    if !f.is_positive_definite() || !f.is_primitive() {
        return Order3Verdict::NotApplicable;
    }
    let Ok((reduced, _)) = f.reduce() else { return Order3Verdict::NotApplicable };
    match principal_form(&f.discriminant()) {
        Ok(p) if p == reduced => Order3Verdict::Order1,
        Ok(_) => Order3Verdict::Order3,
        Err(_) => Order3Verdict::NotApplicable,
    }
}
