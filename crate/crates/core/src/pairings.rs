//! Bilinear pairings `s(x, y) = (x^T A1 y, x^T A2 y)`, the four constructive
//! families, exact normedness and type classification.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::div_exact_opt;
use crate::{Error, Form, Mat2Z, Result, Vec2};

/// A bilinear map `Z^2 x Z^2 -> Z^2`; component `j` is `x^T A_j y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    pub a1: Mat2Z,
    pub a2: Mat2Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The signs `(eps1; eps2)` with `det(x -> s(x, y)) = eps1 f(y)` and
/// `det(y -> s(x, y)) = eps2 f(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingType {
    pub eps1: Sign,
    pub eps2: Sign,
}

impl PairingType {
    pub const PP: PairingType = PairingType { eps1: Sign::Plus, eps2: Sign::Plus };
    pub const MP: PairingType = PairingType { eps1: Sign::Minus, eps2: Sign::Plus };
    pub const PM: PairingType = PairingType { eps1: Sign::Plus, eps2: Sign::Minus };
    pub const MM: PairingType = PairingType { eps1: Sign::Minus, eps2: Sign::Minus };
}

impl fmt::Display for PairingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.eps1.symbol(), self.eps2.symbol())
    }
}

/// The four product shapes shared by matrix and lattice pairings:
/// `xy`, `conj(x) y`, `x conj(y)` and `conj(xy)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Plain,
    ConjLeft,
    ConjRight,
    ConjBoth,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] =
        [ProductKind::Plain, ProductKind::ConjLeft, ProductKind::ConjRight, ProductKind::ConjBoth];

    /// `1..=4`.
    pub fn index(self) -> u8 {
        match self {
            ProductKind::Plain => 1,
            ProductKind::ConjLeft => 2,
            ProductKind::ConjRight => 3,
            ProductKind::ConjBoth => 4,
        }
    }

    pub fn from_index(k: u8) -> Option<ProductKind> {
        match k {
            1 => Some(ProductKind::Plain),
            2 => Some(ProductKind::ConjLeft),
            3 => Some(ProductKind::ConjRight),
            4 => Some(ProductKind::ConjBoth),
            _ => None,
        }
    }

    pub fn expected_type(self) -> PairingType {
        match self {
            ProductKind::Plain => PairingType::PP,
            ProductKind::ConjLeft => PairingType::MP,
            ProductKind::ConjRight => PairingType::PM,
            ProductKind::ConjBoth => PairingType::MM,
        }
    }

    /// The plus-type family of this kind; `None` for `ConjBoth`.
    pub fn plus_variant(self) -> Option<PlusVariant> {
        match self {
            ProductKind::Plain => Some(PlusVariant::First),
            ProductKind::ConjLeft => Some(PlusVariant::Second),
            ProductKind::ConjRight => Some(PlusVariant::Third),
            ProductKind::ConjBoth => None,
        }
    }
}

/// The three families built from `(m, k, n, p, q)`, of types
/// `(+,+)`, `(-,+)` and `(+,-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlusVariant {
    First,
    Second,
    Third,
}

impl PlusVariant {
    pub const ALL: [PlusVariant; 3] = [PlusVariant::First, PlusVariant::Second, PlusVariant::Third];

    pub fn index(self) -> u8 {
        match self {
            PlusVariant::First => 1,
            PlusVariant::Second => 2,
            PlusVariant::Third => 3,
        }
    }

    pub fn from_index(k: u8) -> Option<PlusVariant> {
        match k {
            1 => Some(PlusVariant::First),
            2 => Some(PlusVariant::Second),
            3 => Some(PlusVariant::Third),
            _ => None,
        }
    }

    pub fn expected_type(self) -> PairingType {
        match self {
            PlusVariant::First => PairingType::PP,
            PlusVariant::Second => PairingType::MP,
            PlusVariant::Third => PairingType::PM,
        }
    }
}

/// Parameters `(m, k, n, p, q)` of the plus-type families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlusParams {
    pub m: BigInt,
    pub k: BigInt,
    pub n: BigInt,
    pub p: BigInt,
    pub q: BigInt,
}

impl PlusParams {
    pub fn new(
        m: impl Into<BigInt>,
        k: impl Into<BigInt>,
        n: impl Into<BigInt>,
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
    ) -> Self {
        PlusParams { m: m.into(), k: k.into(), n: n.into(), p: p.into(), q: q.into() }
    }

    pub fn base_form(&self) -> Form {
        Form { m: self.m.clone(), k: self.k.clone(), n: self.n.clone() }
    }

    pub fn anchor(&self) -> Vec2 {
        Vec2 { x1: self.p.clone(), x2: self.q.clone() }
    }

    /// `r = m p^2 + k p q + n q^2`.
    pub fn r(&self) -> BigInt {
        self.base_form().eval(&self.anchor())
    }

    /// `(r m, r k, r n)`.
    pub fn form(&self) -> Form {
        self.base_form().scale(&self.r())
    }
}

impl fmt::Display for PlusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, k={}, n={}, p={}, q={})", self.m, self.k, self.n, self.p, self.q)
    }
}

/// Parameters `(a, b, c, d)` of the `(-,-)` family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Quadruple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Quadruple {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Quadruple { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    /// `(a^2 - cd, ac - bd, c^2 - ab)`.
    pub fn form(&self) -> Form {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Form { m: a * a - c * d, k: a * c - b * d, n: c * c - a * b }
    }

    pub fn neg(&self) -> Quadruple {
        Quadruple { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// The representative of `{q, -q}` whose first nonzero entry is positive.
    pub fn sign_normalized(&self) -> Quadruple {
        let first = [&self.a, &self.b, &self.c, &self.d].into_iter().find(|x| !x.is_zero());
        match first {
            Some(x) if x.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, c={}, d={})", self.a, self.b, self.c, self.d)
    }
}

impl Pairing {
    pub fn new(a1: Mat2Z, a2: Mat2Z) -> Self {
        Pairing { a1, a2 }
    }

    pub fn zero() -> Self {
        Pairing { a1: Mat2Z::zero(), a2: Mat2Z::zero() }
    }

    /// Complex multiplication `(x1 y1 - x2 y2, x1 y2 + x2 y1)`.
    pub fn complex_multiplication() -> Self {
        Pairing { a1: Mat2Z::new(1, 0, 0, -1), a2: Mat2Z::new(0, 1, 1, 0) }
    }

    /// Row-major entries `[A1, A2]`.
    pub fn entries(&self) -> [&BigInt; 8] {
        let [a, b, c, d] = self.a1.entries();
        let [e, f, g, h] = self.a2.entries();
        [a, b, c, d, e, f, g, h]
    }

    pub fn neg(&self) -> Pairing {
        Pairing { a1: -&self.a1, a2: -&self.a2 }
    }

    pub fn eval(&self, x: &Vec2, y: &Vec2) -> Vec2 {
        Vec2 { x1: self.a1.bilinear(x, y), x2: self.a2.bilinear(x, y) }
    }

    /// Matrix of `x -> s(x, y)`.
    pub fn left_operator(&self, y: &Vec2) -> Mat2Z {
        let r1 = self.a1.apply(y);
        let r2 = self.a2.apply(y);
        Mat2Z { a: r1.x1, b: r1.x2, c: r2.x1, d: r2.x2 }
    }

    /// Matrix of `y -> s(x, y)`.
    pub fn right_operator(&self, x: &Vec2) -> Mat2Z {
        let r1 = self.a1.transpose().apply(x);
        let r2 = self.a2.transpose().apply(x);
        Mat2Z { a: r1.x1, b: r1.x2, c: r2.x1, d: r2.x2 }
    }

    /// The quadratic form `y -> det(x -> s(x, y))`.
    pub fn left_determinant_form(&self) -> Form {
        quadratic_from_values(|v| self.left_operator(v).det())
    }

    /// The quadratic form `x -> det(y -> s(x, y))`.
    pub fn right_determinant_form(&self) -> Form {
        quadratic_from_values(|v| self.right_operator(v).det())
    }

    /// Decides `f(s(x, y)) = f(x) f(y)` as a polynomial identity.
    ///
    /// The difference has degree at most 2 in each of the four variables,
    /// so vanishing on `{0, 1, 2}^4` forces it to vanish identically.
    pub fn is_normed(&self, f: &Form) -> bool {
        let grid: [Vec2; 9] = core::array::from_fn(|i| Vec2::new(i as i64 % 3, i as i64 / 3));
        let values: [BigInt; 9] = core::array::from_fn(|i| f.eval(&grid[i]));
        grid.iter().zip(&values).all(|(x, fx)| {
            grid.iter()
                .zip(&values)
                .all(|(y, fy)| f.eval(&self.eval(x, y)) == fx * fy)
        })
    }

    /// The type of a normed pairing over a nondegenerate form.
    pub fn type_of(&self, f: &Form) -> Result<PairingType> {
        if f.is_degenerate() {
            return Err(Error::Degenerate);
        }
        if !self.is_normed(f) {
            return Err(Error::NotNormed);
        }
        let sign = |d: Form| {
            if d == *f {
                Ok(Sign::Plus)
            } else if d == f.neg() {
                Ok(Sign::Minus)
            } else {
                Err(Error::DeterminantMismatch)
            }
        };
        Ok(PairingType {
            eps1: sign(self.left_determinant_form())?,
            eps2: sign(self.right_determinant_form())?,
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.a1.is_symmetric() && self.a2.is_symmetric()
    }

    /// `M_x = x1 M1 + x2 M2` is the matrix of `y -> s(x, y)`; row `j` of
    /// `M_i` is row `i` of `A_j`.
    pub fn operator_basis(&self) -> (Mat2Z, Mat2Z) {
        (self.right_operator(&Vec2::e1()), self.right_operator(&Vec2::e2()))
    }

    pub fn is_traceless(&self) -> bool {
        let (m1, m2) = self.operator_basis();
        m1.trace().is_zero() && m2.trace().is_zero()
    }

    /// Builds the pairing with `M1 = [[a, c], [-d, -a]]` and
    /// `M2 = [[c, b], [-a, -c]]`.
    pub fn from_commutative_traceless(q: &Quadruple) -> Pairing {
        let m1 = Mat2Z { a: q.a.clone(), b: q.c.clone(), c: -&q.d, d: -&q.a };
        let m2 = Mat2Z { a: q.c.clone(), b: q.b.clone(), c: -&q.a, d: -&q.c };
        from_operator_basis(&m1, &m2)
    }

    /// Recovers `f` from `s(x, s(x, y)) = f(x) y` for a commutative
    /// traceless pairing.
    pub fn derive_form_minus_minus(&self) -> Result<Form> {
        if !self.is_commutative() || !self.is_traceless() {
            return Err(Error::NotCommutativeTraceless);
        }
        let mut failed = false;
        let f = quadratic_from_values(|v| {
            let mx = self.right_operator(v);
            let sq = &mx * &mx;
            failed |= !sq.is_scalar();
            sq.a
        });
        if failed {
            return Err(Error::NotCommutativeTraceless);
        }
        Ok(f)
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.a1, self.a2)
    }
}

/// Reads a quadratic form off its values at `e1`, `e2` and `e1 + e2`.
fn quadratic_from_values(mut value: impl FnMut(&Vec2) -> BigInt) -> Form {
    let m = value(&Vec2::e1());
    let n = value(&Vec2::e2());
    let k = value(&Vec2::new(1, 1)) - &m - &n;
    Form { m, k, n }
}

fn from_operator_basis(m1: &Mat2Z, m2: &Mat2Z) -> Pairing {
    Pairing {
        a1: Mat2Z { a: m1.a.clone(), b: m1.b.clone(), c: m2.a.clone(), d: m2.b.clone() },
        a2: Mat2Z { a: m1.c.clone(), b: m1.d.clone(), c: m2.c.clone(), d: m2.d.clone() },
    }
}

/// The plus-type pairing of the given variant and its form `(rm, rk, rn)`.
pub fn make_splus(variant: PlusVariant, params: &PlusParams) -> (Pairing, Form) {
    let PlusParams { m, k, n, p, q } = params;
    let (mp, mq, np, nq) = (m * p, m * q, n * p, n * q);
    let (kp, kq) = (k * p, k * q);
    let pairing = match variant {
        PlusVariant::First => Pairing {
            a1: Mat2Z { a: &mp + &kq, b: nq.clone(), c: nq.clone(), d: -np },
            a2: Mat2Z { a: -mq, b: mp.clone(), c: mp, d: nq + kp },
        },
        PlusVariant::Second => Pairing {
            a1: Mat2Z { a: mp.clone(), b: -&nq, c: &nq + kp, d: np },
            a2: Mat2Z { a: mq, b: &mp + kq, c: -mp, d: nq },
        },
        PlusVariant::Third => Pairing {
            a1: Mat2Z { a: mp.clone(), b: &nq + kp, c: -&nq, d: np },
            a2: Mat2Z { a: mq, b: -&mp, c: mp + kq, d: nq },
        },
    };
    (pairing, params.form())
}

/// The `(-,-)` pairing `((a, c; c, b) | (-d, -a; -a, -c))` and its form.
pub fn make_s4(q: &Quadruple) -> (Pairing, Form) {
    let pairing = Pairing {
        a1: Mat2Z { a: q.a.clone(), b: q.c.clone(), c: q.c.clone(), d: q.b.clone() },
        a2: Mat2Z { a: -&q.d, b: -&q.a, c: -&q.a, d: -&q.c },
    };
    (pairing, q.form())
}

/// Inverts [`make_splus`]: returns parameters with `(p, q)` primitive and
/// `q > 0` (or `q = 0, p > 0`) that rebuild `s` exactly.
pub fn recover_plus_params(s: &Pairing, variant: PlusVariant) -> Result<PlusParams> {
    let (a1, a2) = (&s.a1, &s.a2);
    // products m*p, m*q, n*p, n*q and k*p, k*q read off the matrix entries
    let (mp, mq, np, nq) = match variant {
        PlusVariant::First => (a2.b.clone(), -&a2.a, -&a1.d, a1.b.clone()),
        PlusVariant::Second => (a1.a.clone(), a2.a.clone(), a1.d.clone(), -&a1.b),
        PlusVariant::Third => (a1.a.clone(), a2.a.clone(), a1.d.clone(), -&a1.c),
    };
    let (kp, kq) = match variant {
        PlusVariant::First => (&a2.d - &nq, &a1.a - &mp),
        PlusVariant::Second => (&a1.c - &nq, &a2.b - &mp),
        PlusVariant::Third => (&a1.b - &nq, &a2.c - &mp),
    };
    let pairs = [(&mp, &mq), (&np, &nq), (&kp, &kq)];
    let Some(&(u, v)) = pairs.iter().find(|(u, v)| !u.is_zero() || !v.is_zero()) else {
        return check_recovered(s, variant, PlusParams::new(0, 0, 0, 0, 1));
    };
    let g = u.gcd(v);
    let (mut p, mut q) = (u / &g, v / &g);
    if q.is_negative() || (q.is_zero() && p.is_negative()) {
        p = -p;
        q = -q;
    }
    let coefficient = |(x, y): (&BigInt, &BigInt)| -> Result<BigInt> {
        let c = if p.is_zero() { div_exact_opt(y, &q) } else { div_exact_opt(x, &p) };
        c.ok_or(Error::ParameterRecovery)
    };
    let params = PlusParams {
        m: coefficient(pairs[0])?,
        n: coefficient(pairs[1])?,
        k: coefficient(pairs[2])?,
        p,
        q,
    };
    check_recovered(s, variant, params)
}

fn check_recovered(s: &Pairing, variant: PlusVariant, params: PlusParams) -> Result<PlusParams> {
    if make_splus(variant, &params).0 == *s {
        Ok(params)
    } else {
        Err(Error::ParameterRecovery)
    }
}

/// Inverts [`make_s4`].
pub fn recover_quadruple(s: &Pairing) -> Result<Quadruple> {
    let q = Quadruple { a: s.a1.a.clone(), b: s.a1.d.clone(), c: s.a1.b.clone(), d: -&s.a2.a };
    if make_s4(&q).0 == *s {
        Ok(q)
    } else {
        Err(Error::ParameterRecovery)
    }
}
