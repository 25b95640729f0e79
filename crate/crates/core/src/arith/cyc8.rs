//! The cyclotomic field `Q(zeta)` with `zeta^4 = -1`, in the power basis
//! `{1, zeta, zeta^2, zeta^3}`.

use alloc::boxed::Box;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::Gauss;
use super::ArithError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc8 {
    c: [BigRational; 4],
}

impl Cyc8 {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        Self {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn from_integers(c: [BigInt; 4]) -> Self {
        Self {
            c: c.map(BigRational::from_integer),
        }
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        Self::from_integers(c.map(BigInt::from))
    }

    pub fn zero() -> Self {
        Self::from_i64([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn zeta() -> Self {
        Self::from_i64([0, 1, 0, 0])
    }

    /// `zeta^2`.
    pub fn i() -> Self {
        Self::from_i64([0, 0, 1, 0])
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `zeta * (c0, c1, c2, c3) = (-c3, c0, c1, c2)`.
    pub fn mul_zeta(&self) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        Self {
            c: [-c3, c0, c1, c2],
        }
    }

    /// Image under the automorphism `zeta -> zeta^5 = -zeta`.
    fn conj5(&self) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        Self {
            c: [c0, -c1, c2, -c3],
        }
    }

    /// Image under complex conjugation `zeta -> zeta^7 = -zeta^3`.
    fn conj7(&self) -> Self {
        let [c0, c1, c2, c3] = self.c.clone();
        Self {
            c: [c0, -c3, -c2, -c1],
        }
    }

    /// Multiplicative inverse by rationalizing with Galois conjugates:
    /// `x * sigma5(x)` lies in `Q(i)`, and multiplying that by its complex
    /// conjugate gives the (rational) field norm.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let s5 = self.conj5();
        let half = self * &s5;
        let half_conj = half.conj7();
        let norm = &half * &half_conj;
        debug_assert!(norm.c[1].is_zero() && norm.c[2].is_zero() && norm.c[3].is_zero());
        let n = norm.c[0].clone();
        let adj = &s5 * &half_conj;
        Ok(Self {
            c: adj.c.map(|x| x / &n),
        })
    }

    pub fn checked_div(&self, den: &Self) -> Result<Self, ArithError> {
        Ok(self * &den.inv()?)
    }

    /// Reads off `c0 + c2*i` when the value lies in `Q(i)`.
    pub fn to_gauss(&self) -> Result<Gauss, ArithError> {
        if !self.c[1].is_zero() || !self.c[3].is_zero() {
            return Err(ArithError::NotGaussian {
                c1: Box::new(self.c[1].clone()),
                c3: Box::new(self.c[3].clone()),
            });
        }
        Ok(Gauss::new(self.c[0].clone(), self.c[2].clone()))
    }
}

impl From<&Gauss> for Cyc8 {
    fn from(g: &Gauss) -> Self {
        Self::new(
            g.re().clone(),
            BigRational::zero(),
            g.im().clone(),
            BigRational::zero(),
        )
    }
}

impl Add for &Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: &Cyc8) -> Cyc8 {
        Cyc8 {
            c: core::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }
}

impl Sub for &Cyc8 {
    type Output = Cyc8;
    fn sub(self, rhs: &Cyc8) -> Cyc8 {
        Cyc8 {
            c: core::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }
}

impl Neg for &Cyc8 {
    type Output = Cyc8;
    fn neg(self) -> Cyc8 {
        Cyc8 {
            c: core::array::from_fn(|k| -&self.c[k]),
        }
    }
}

// Negacyclic convolution: zeta^(j+k) folds back with a sign once j+k >= 4.
impl Mul for &Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: &Cyc8) -> Cyc8 {
        let mut out: [BigRational; 4] = core::array::from_fn(|_| BigRational::zero());
        for j in 0..4 {
            if self.c[j].is_zero() {
                continue;
            }
            for k in 0..4 {
                let t = &self.c[j] * &rhs.c[k];
                if j + k < 4 {
                    out[j + k] += t;
                } else {
                    out[j + k - 4] -= t;
                }
            }
        }
        Cyc8 { c: out }
    }
}

impl Add for Cyc8 {
    type Output = Cyc8;
    fn add(self, rhs: Cyc8) -> Cyc8 {
        &self + &rhs
    }
}

impl Mul for Cyc8 {
    type Output = Cyc8;
    fn mul(self, rhs: Cyc8) -> Cyc8 {
        &self * &rhs
    }
}

impl One for Cyc8 {
    fn one() -> Self {
        Cyc8::one()
    }
}

impl Zero for Cyc8 {
    fn zero() -> Self {
        Cyc8::zero()
    }
    fn is_zero(&self) -> bool {
        Cyc8::is_zero(self)
    }
}

/// `c0 + c1*z + c2*z^2 + c3*z^3`, every coordinate written as a reduced `p/q`.
impl fmt::Display for Cyc8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c3] = &self.c;
        write!(
            f,
            "{}/{} + {}/{}*z + {}/{}*z^2 + {}/{}*z^3",
            c0.numer(),
            c0.denom(),
            c1.numer(),
            c1.denom(),
            c2.numer(),
            c2.denom(),
            c3.numer(),
            c3.denom()
        )
    }
}
