use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::forms::Vec2;

/// Integer 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Z {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2Z {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2Z { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Self {
        Mat2Z::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn identity() -> Self {
        Mat2Z::scalar(BigInt::one())
    }

    pub fn zero() -> Self {
        Mat2Z::scalar(BigInt::zero())
    }

    pub fn scalar(r: impl Into<BigInt>) -> Self {
        let r = r.into();
        Mat2Z { a: r.clone(), b: BigInt::zero(), c: BigInt::zero(), d: r }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// The adjugate: `A + adj(A) = tr(A) E` and `A adj(A) = det(A) E`.
    pub fn adjugate(&self) -> Self {
        Mat2Z { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn transpose(&self) -> Self {
        Mat2Z { a: self.a.clone(), b: self.c.clone(), c: self.b.clone(), d: self.d.clone() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Mat2Z { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.c
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn row(&self, i: usize) -> [BigInt; 2] {
        match i {
            0 => [self.a.clone(), self.b.clone()],
            1 => [self.c.clone(), self.d.clone()],
            _ => panic!("row index {i} out of range"),
        }
    }

    pub fn from_row_arrays(r0: [BigInt; 2], r1: [BigInt; 2]) -> Self {
        let [a, b] = r0;
        let [c, d] = r1;
        Mat2Z { a, b, c, d }
    }

    /// `M v` with `v` a column vector.
    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 {
            x1: &self.a * &v.x1 + &self.b * &v.x2,
            x2: &self.c * &v.x1 + &self.d * &v.x2,
        }
    }

    /// The bilinear form `x^T M y`.
    pub fn bilinear(&self, x: &Vec2, y: &Vec2) -> BigInt {
        &x.x1 * (&self.a * &y.x1 + &self.b * &y.x2) + &x.x2 * (&self.c * &y.x1 + &self.d * &y.x2)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl<'a> Mul<&'a Mat2Z> for &'a Mat2Z {
    type Output = Mat2Z;
    fn mul(self, o: &'a Mat2Z) -> Mat2Z {
        Mat2Z {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl<'a> Add<&'a Mat2Z> for &'a Mat2Z {
    type Output = Mat2Z;
    fn add(self, o: &'a Mat2Z) -> Mat2Z {
        Mat2Z { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl<'a> Sub<&'a Mat2Z> for &'a Mat2Z {
    type Output = Mat2Z;
    fn sub(self, o: &'a Mat2Z) -> Mat2Z {
        Mat2Z { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

impl Neg for &Mat2Z {
    type Output = Mat2Z;
    fn neg(self) -> Mat2Z {
        Mat2Z { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl fmt::Display for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
