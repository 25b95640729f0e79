//! Laurent polynomials in the bracket variable `A` with arbitrary-precision
//! integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyc8::Cyc8;
use super::ParsePolyError;

/// An element of `Z[A, A^-1]`.
///
/// Terms are kept in a map from exponent to coefficient and zero coefficients
/// are never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn loop_factor() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(2, BigInt::from(-1));
        terms.insert(-2, BigInt::from(-1));
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (exp, c) in terms {
            p.add_term(exp, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `coeff * A^exp`.
    pub fn scale_monomial(&self, coeff: &BigInt, exp: i64) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e + exp, c * coeff))
            .collect();
        Self { terms }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `A = zeta`, a primitive eighth root of unity, so `A^2 = i`.
    pub fn eval_at_zeta8(&self) -> Cyc8 {
        let mut coords: [BigInt; 4] = Default::default();
        for (exp, c) in &self.terms {
            let r = exp.rem_euclid(8) as usize;
            if r < 4 {
                coords[r] += c;
            } else {
                coords[r - 4] -= c;
            }
        }
        Cyc8::from_integers(coords)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Canonical text form: terms by strictly decreasing exponent, e.g.
/// `A^4 - 1 + A^-4`, `-3*A^2 + A`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if *exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if *exp == 1 {
                f.write_str("A")?;
            } else {
                write!(f, "A^{exp}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Accepts the canonical form produced by `Display` (term order is not
    /// enforced, whitespace is ignored).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError::Empty);
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let bytes = compact.as_bytes();
        let mut out = Self::zero();
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(ParsePolyError::Syntax { offset: pos });
            }
            let mut end = pos;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                // a '-' directly after '^' is an exponent sign
                end += 1;
                if end < bytes.len() && bytes[end] == b'-' && bytes[end - 1] == b'^' {
                    end += 1;
                }
            }
            let term = &compact[pos..end];
            let (coeff, exp) = parse_term(term).ok_or(ParsePolyError::Syntax { offset: start })?;
            out.add_term(exp, sign * coeff);
            pos = end;
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(BigInt, i64)> {
    if term.is_empty() {
        return None;
    }
    let (coeff_part, var_part) = match term.find('A') {
        Some(idx) => {
            let coeff = term[..idx].strip_suffix('*').unwrap_or(&term[..idx]);
            (coeff, Some(&term[idx + 1..]))
        }
        None => (term, None),
    };
    let coeff = if coeff_part.is_empty() {
        var_part?;
        BigInt::one()
    } else {
        coeff_part.parse::<BigInt>().ok()?
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest.strip_prefix('^')?.parse::<i64>().ok()?,
    };
    Some((coeff, exp))
}
