//! Gaussian rationals and their one-point (projective) extension.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ArithError;

/// A finite Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gauss {
    re: BigRational,
    im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn from_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        Self::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        )
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }
}

impl From<i64> for Gauss {
    fn from(n: i64) -> Self {
        Gauss::from_i64(n, 0)
    }
}

impl Add for &Gauss {
    type Output = Gauss;
    fn add(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Gauss {
    type Output = Gauss;
    fn sub(self, rhs: &Gauss) -> Gauss {
        Gauss::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-&self.re, -&self.im)
    }
}

impl Mul for &Gauss {
    type Output = Gauss;
    fn mul(self, rhs: &Gauss) -> Gauss {
        Gauss::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} + {}/{}*i",
            self.re.numer(),
            self.re.denom(),
            self.im.numer(),
            self.im.denom()
        )
    }
}

/// `Q(i)` together with a single unsigned point at infinity.
///
/// `0/0`, `inf + inf` and `0 * inf` have no value here; the operations that
/// could produce them return [`ArithError::Indeterminate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtGauss {
    Finite(Gauss),
    Infinity,
}

impl ExtGauss {
    pub fn zero() -> Self {
        ExtGauss::Finite(Gauss::zero())
    }

    pub fn one() -> Self {
        ExtGauss::Finite(Gauss::one())
    }

    pub fn i() -> Self {
        ExtGauss::Finite(Gauss::i())
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        ExtGauss::Finite(Gauss::from_i64(re, im))
    }

    pub fn from_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        ExtGauss::Finite(Gauss::from_ratio(re, im))
    }

    pub fn real(re: BigRational) -> Self {
        ExtGauss::Finite(Gauss::real(re))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtGauss::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtGauss::Finite(g) if g.is_zero())
    }

    /// Real in the projective sense: `inf` counts as real.
    pub fn is_real(&self) -> bool {
        match self {
            ExtGauss::Finite(g) => g.is_real(),
            ExtGauss::Infinity => true,
        }
    }

    pub fn finite(&self) -> Option<&Gauss> {
        match self {
            ExtGauss::Finite(g) => Some(g),
            ExtGauss::Infinity => None,
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (ExtGauss::Finite(a), ExtGauss::Finite(b)) => Ok(ExtGauss::Finite(a + b)),
            (ExtGauss::Infinity, ExtGauss::Infinity) => Err(ArithError::Indeterminate("inf + inf")),
            _ => Ok(ExtGauss::Infinity),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            ExtGauss::Finite(g) => ExtGauss::Finite(-g),
            ExtGauss::Infinity => ExtGauss::Infinity,
        }
    }

    pub fn mul_i(&self) -> Self {
        match self {
            ExtGauss::Finite(g) => ExtGauss::Finite(g.mul_i()),
            ExtGauss::Infinity => ExtGauss::Infinity,
        }
    }

    /// Multiplication by `-i`.
    pub fn mul_neg_i(&self) -> Self {
        self.mul_i().neg()
    }

    /// `1/0 = inf`, `1/inf = 0`.
    pub fn invert(&self) -> Self {
        match self {
            ExtGauss::Infinity => ExtGauss::zero(),
            ExtGauss::Finite(g) if g.is_zero() => ExtGauss::Infinity,
            ExtGauss::Finite(g) => ExtGauss::Finite(g.inv().expect("nonzero")),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (ExtGauss::Finite(a), ExtGauss::Finite(b)) => Ok(ExtGauss::Finite(a * b)),
            (ExtGauss::Infinity, x) | (x, ExtGauss::Infinity) => {
                if x.is_zero() {
                    Err(ArithError::Indeterminate("0 * inf"))
                } else {
                    Ok(ExtGauss::Infinity)
                }
            }
        }
    }

    /// Projective division: `x/0 = inf` for `x != 0`, `x/inf = 0` for finite
    /// `x`; `0/0` and `inf/inf` are indeterminate.
    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (ExtGauss::Infinity, ExtGauss::Infinity) => Err(ArithError::Indeterminate("inf / inf")),
            (x, y) if x.is_zero() && y.is_zero() => Err(ArithError::Indeterminate("0 / 0")),
            _ => self.mul(&rhs.invert()),
        }
    }
}

impl From<Gauss> for ExtGauss {
    fn from(g: Gauss) -> Self {
        ExtGauss::Finite(g)
    }
}

impl From<i64> for ExtGauss {
    fn from(n: i64) -> Self {
        ExtGauss::from_i64(n, 0)
    }
}

impl From<&BigInt> for ExtGauss {
    fn from(n: &BigInt) -> Self {
        ExtGauss::real(BigRational::from_integer(n.clone()))
    }
}

// Finite values first (by real, then imaginary part), infinity last.
impl Ord for ExtGauss {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtGauss::Finite(a), ExtGauss::Finite(b)) => a.cmp(b),
            (ExtGauss::Finite(_), ExtGauss::Infinity) => Ordering::Less,
            (ExtGauss::Infinity, ExtGauss::Finite(_)) => Ordering::Greater,
            (ExtGauss::Infinity, ExtGauss::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtGauss {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `p/q + r/s*i` or `inf`.
impl fmt::Display for ExtGauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtGauss::Finite(g) => g.fmt(f),
            ExtGauss::Infinity => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn projective_examples() {
        assert_eq!(ExtGauss::zero().invert(), ExtGauss::Infinity);
        assert_eq!(ExtGauss::Infinity.invert(), ExtGauss::zero());
        assert_eq!(ExtGauss::Infinity.add(&5.into()), Ok(ExtGauss::Infinity));
        assert!(matches!(
            ExtGauss::Infinity.add(&ExtGauss::Infinity),
            Err(ArithError::Indeterminate(_))
        ));
        assert_eq!(ExtGauss::Infinity.mul_i(), ExtGauss::Infinity);
        assert!(ExtGauss::zero().mul(&ExtGauss::Infinity).is_err());
        assert!(ExtGauss::zero().div(&ExtGauss::zero()).is_err());
        assert!(ExtGauss::Infinity.div(&ExtGauss::Infinity).is_err());
        assert_eq!(
            ExtGauss::one().div(&ExtGauss::zero()),
            Ok(ExtGauss::Infinity)
        );
        assert_eq!(ExtGauss::i().div(&ExtGauss::Infinity), Ok(ExtGauss::zero()));
    }

    #[test]
    fn finite_arithmetic() {
        let a = ExtGauss::from_i64(2, -1);
        assert_eq!(a.invert(), ExtGauss::from_ratio((2, 5), (1, 5)));
        assert_eq!(a.mul_i(), ExtGauss::from_i64(1, 2));
        assert_eq!(a.mul_neg_i(), ExtGauss::from_i64(-1, -2));
        assert_eq!(a.neg(), ExtGauss::from_i64(-2, 1));
        assert_eq!(a.mul(&a.invert()), Ok(ExtGauss::one()));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(
            ExtGauss::from_ratio((9, 7), (1, 1)).to_string(),
            "9/7 + 1/1*i"
        );
        assert_eq!(ExtGauss::zero().to_string(), "0/1 + 0/1*i");
        assert_eq!(
            ExtGauss::from_ratio((4, -6), (-2, 4)).to_string(),
            "-2/3 + -1/2*i"
        );
        assert_eq!(ExtGauss::Infinity.to_string(), "inf");
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = alloc::vec![ExtGauss::Infinity, 3.into(), ExtGauss::from_i64(-1, 4)];
        v.sort();
        assert_eq!(v.last(), Some(&ExtGauss::Infinity));
        assert_eq!(v[0], ExtGauss::from_i64(-1, 4));
    }
}
