//! The conductance `C(T) = i R_T(sqrt(i))` with `R_T = (f+h)/(g+h)`, and the
//! independent ways of computing it from a tangle vector.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{ArithError, Cyc8, ExtGauss, Gauss};
use crate::bracket::{bracket, BracketTriple};
use crate::diagram::{build_basic, Axis, Entry, TangleDiagram, TangleVector, Twist};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    StateSum,
    Recursion,
    ContinuedFraction,
    ClosedForm,
    ClassicalFraction,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::StateSum => "state-sum",
            Provenance::Recursion => "recursion",
            Provenance::ContinuedFraction => "continued-fraction",
            Provenance::ClosedForm => "closed-form",
            Provenance::ClassicalFraction => "classical-fraction",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConductanceValue {
    pub value: ExtGauss,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConductanceError {
    #[error("f+h and g+h both vanish at sqrt(i)")]
    BracketIndeterminate,
    #[error(transparent)]
    Arith(#[from] ArithError),
    /// The divisor `-iC` of the flipped prefix is 0 or inf and the quotient
    /// it enters has no value.
    #[error(
        "level {level}: divisor -iC(flipped prefix) is {divisor} and the quotient is undefined"
    )]
    DivisorZero {
        level: usize,
        divisor: Box<ExtGauss>,
    },
    #[error("level {level}: indeterminate form {form}")]
    Indeterminate { level: usize, form: &'static str },
    #[error("no closed form for this vector shape")]
    UnsupportedPattern,
    #[error("closed form reduces to 0/0 at these parameters")]
    ClosedFormDegenerate,
}

/// `i * eval(f+h) / eval(g+h)` at `A = zeta_8`; a vanishing denominator gives
/// `inf`.
pub fn conductance_from_bracket(t: &BracketTriple) -> Result<ExtGauss, ConductanceError> {
    let num = (&t.f + &t.h).eval_at_zeta8();
    let den = (&t.g + &t.h).eval_at_zeta8();
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(ConductanceError::BracketIndeterminate),
        (false, true) => Ok(ExtGauss::Infinity),
        _ => {
            let r = &Cyc8::i() * &num.checked_div(&den)?;
            Ok(ExtGauss::Finite(r.to_gauss()?))
        }
    }
}

/// Conductance of a diagram by exhaustive state sum.
pub fn conductance_of_diagram(t: &TangleDiagram) -> Result<ExtGauss, ConductanceError> {
    conductance_from_bracket(&bracket(t))
}

/// Conductance of the basic diagram of `v` by exhaustive state sum.
pub fn conductance_state_sum(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    conductance_of_diagram(&build_basic(v))
}

fn twist_value(t: Twist) -> ExtGauss {
    match t {
        Twist::Finite(a) => a.into(),
        Twist::Infinity => ExtGauss::Infinity,
    }
}

/// The classical fraction `[a_n, ..., a_1] = a_n + 1/(a_(n-1) + ...)`.
///
/// A vertical first entry is handled by prepending `inf`, and an even number
/// of entries by appending `0`.
pub fn classical_fraction(
    a: &[Twist],
    first_horizontal: bool,
) -> Result<ExtGauss, ConductanceError> {
    let mut seq: Vec<Twist> = Vec::with_capacity(a.len() + 2);
    if !first_horizontal {
        seq.push(Twist::Infinity);
    }
    seq.extend_from_slice(a);
    if seq.is_empty() {
        return Err(ConductanceError::UnsupportedPattern);
    }
    if seq.len().is_multiple_of(2) {
        seq.push(Twist::Finite(0));
    }
    let mut x = twist_value(seq[0]);
    for (k, &t) in seq.iter().enumerate().skip(1) {
        x = twist_value(t)
            .add(&x.invert())
            .map_err(|_| ConductanceError::Indeterminate {
                level: k + 1,
                form: "inf + inf",
            })?;
    }
    Ok(x)
}

/// Classical fraction of a vector, ignoring its virtual crossings.
pub fn classical_fraction_of(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    let n = v.normalized();
    let twists: Vec<Twist> = n.entries().iter().map(|e| e.twist).collect();
    classical_fraction(&twists, true)
}

type Level = [Result<ExtGauss, ConductanceError>; 2];

fn undefined(level: usize, divisor: &ExtGauss, e: ArithError) -> ConductanceError {
    if divisor.is_zero() || divisor.is_infinite() {
        ConductanceError::DivisorZero {
            level,
            divisor: Box::new(divisor.clone()),
        }
    } else {
        match e {
            ArithError::Indeterminate(form) => ConductanceError::Indeterminate { level, form },
            other => ConductanceError::Arith(other),
        }
    }
}

/// For each prefix length `k`, the conductance of the prefix as given and
/// with the virtual bit of entry `k` flipped. Each level only looks at the
/// previous one, so the work is linear.
fn recursion_levels(entries: &[Entry]) -> Vec<Level> {
    let mut levels: Vec<Level> = Vec::with_capacity(entries.len());
    let inf_first = entries.first().is_some_and(|e| e.twist == Twist::Infinity);
    for (idx, entry) in entries.iter().enumerate() {
        let level = idx + 1;
        let eval = |virtual_end: bool| -> Result<ExtGauss, ConductanceError> {
            let a = match entry.twist {
                Twist::Infinity if idx == 0 => return Ok(ExtGauss::Infinity),
                Twist::Infinity => return Err(ConductanceError::UnsupportedPattern),
                Twist::Finite(a) => ExtGauss::from(a),
            };
            if idx == 0 {
                return Ok(if virtual_end {
                    a.add(&ExtGauss::i())?
                } else {
                    a
                });
            }
            if idx == 1 && inf_first {
                // [inf] * 1/[a^e] is 1/[a^e] itself
                let x = if virtual_end {
                    a.sub(&ExtGauss::i())?
                } else {
                    a
                };
                return Ok(x.invert());
            }
            let prev = levels[idx - 1][0].clone()?;
            let horizontal = idx % 2 == 0;
            if !virtual_end {
                return if horizontal {
                    a.add(&prev).map_err(|_| ConductanceError::Indeterminate {
                        level,
                        form: "inf + inf",
                    })
                } else {
                    Ok(a.add(&prev.invert())
                        .expect("finite plus projective")
                        .invert())
                };
            }
            let divisor = levels[idx - 1][1].clone()?.mul_neg_i();
            if horizontal {
                let q = prev
                    .div(&divisor)
                    .map_err(|e| undefined(level, &divisor, e))?;
                a.add(&q).map_err(|_| ConductanceError::Indeterminate {
                    level,
                    form: "inf + inf",
                })
            } else {
                let q = divisor
                    .div(&prev)
                    .map_err(|e| undefined(level, &divisor, e))?;
                Ok(a.add(&q)
                    .map_err(|_| ConductanceError::Indeterminate {
                        level,
                        form: "inf + inf",
                    })?
                    .invert())
            }
        };
        let given = eval(entry.virtual_end);
        let flipped = eval(!entry.virtual_end);
        levels.push([given, flipped]);
    }
    levels
}

fn recursion_on(entries: &[Entry]) -> Result<ExtGauss, ConductanceError> {
    let levels = recursion_levels(entries);
    match levels.into_iter().last() {
        Some([given, _]) => given,
        None => Err(ConductanceError::UnsupportedPattern),
    }
}

/// Conductance by the prefix recursion: a horizontal entry `a^e` gives
/// `a + C(prev) / D^e`, a vertical one `1 / (a + D^e / C(prev))`, where `D`
/// is `-i` times the conductance of the previous prefix with its last virtual
/// bit flipped.
pub fn conductance_recursive(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    recursion_on(v.normalized().entries())
}

/// Conductance by the generalized continued fraction
/// `x_1 = a_1 + b_1`, `x_k = a_k + b_k / x_(k-1)`, evaluated innermost first
/// on the odd-length form of `v`. `b_k` is 1 without a virtual crossing, and
/// otherwise `D_k` for even `k` and `1/D_k` for odd `k`, with `D_k` from the
/// recursion on the flipped prefix; `b_1 = i e_1`.
pub fn continued_fraction_c(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    let entries = v.odd_extended();
    let inf_first = entries[0].twist == Twist::Infinity;
    let mut x = match entries[0].twist {
        Twist::Infinity => ExtGauss::Infinity,
        Twist::Finite(a) => {
            let b1 = if entries[0].virtual_end {
                ExtGauss::i()
            } else {
                ExtGauss::zero()
            };
            ExtGauss::from(a).add(&b1)?
        }
    };
    for (idx, entry) in entries.iter().enumerate().skip(1) {
        let level = idx + 1;
        let a = match entry.twist {
            Twist::Finite(a) => ExtGauss::from(a),
            Twist::Infinity => return Err(ConductanceError::UnsupportedPattern),
        };
        if idx == 1 && inf_first {
            // limit of b_2 / x_1 as a_1 -> inf
            x = if entry.virtual_end {
                a.sub(&ExtGauss::i())?
            } else {
                a
            };
            continue;
        }
        let b = if entry.virtual_end {
            let mut prefix: Vec<Entry> = entries[..idx].to_vec();
            prefix[idx - 1] = prefix[idx - 1].toggled();
            let d = recursion_on(&prefix)?.mul_neg_i();
            if level % 2 == 0 {
                d
            } else {
                d.invert()
            }
        } else {
            ExtGauss::one()
        };
        let q = b.div(&x).map_err(|e| match e {
            ArithError::Indeterminate(form) => ConductanceError::Indeterminate { level, form },
            other => ConductanceError::Arith(other),
        })?;
        x = a.add(&q).map_err(|_| ConductanceError::Indeterminate {
            level,
            form: "inf + inf",
        })?;
    }
    Ok(x)
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `(re + im i) / den`, projectively: `inf` when only `den` vanishes.
fn over(re: BigInt, im: BigInt, den: BigInt) -> Result<ExtGauss, ConductanceError> {
    if den.is_zero() {
        return if re.is_zero() && im.is_zero() {
            Err(ConductanceError::ClosedFormDegenerate)
        } else {
            Ok(ExtGauss::Infinity)
        };
    }
    Ok(ExtGauss::Finite(Gauss::new(
        BigRational::new(re, den.clone()),
        BigRational::new(im, den),
    )))
}

fn shift(x: ExtGauss, c: i64, imag: i64) -> Result<ExtGauss, ConductanceError> {
    Ok(x.add(&ExtGauss::from_i64(c, imag))?)
}

/// The displayed closed forms for vectors of length at most 3 (horizontal
/// first entry or `inf`). A form that collapses to 0/0 is reported as
/// [`ConductanceError::ClosedFormDegenerate`].
pub fn closed_form(v: &TangleVector) -> Result<ExtGauss, ConductanceError> {
    let n = v.normalized();
    let es = n.entries();
    if es.len() > 3 {
        return Err(ConductanceError::UnsupportedPattern);
    }
    let finite = |e: &Entry| e.count().ok_or(ConductanceError::UnsupportedPattern);
    match es {
        [e] => match e.twist {
            Twist::Infinity => Ok(ExtGauss::Infinity),
            Twist::Finite(a) => Ok(ExtGauss::from_i64(a, i64::from(e.epsilon()))),
        },
        [first, second] => {
            let b = finite(second)?;
            if first.twist == Twist::Infinity {
                return closed_inf_two(b, second.virtual_end);
            }
            closed_two(finite(first)?, first.virtual_end, b, second.virtual_end)
        }
        [first, second, third] => {
            let b = finite(second)?;
            let c = finite(third)?;
            if !third.virtual_end {
                let two = if first.twist == Twist::Infinity {
                    closed_inf_two(b, second.virtual_end)?
                } else {
                    closed_two(finite(first)?, first.virtual_end, b, second.virtual_end)?
                };
                return shift(two, c, 0);
            }
            if first.twist == Twist::Infinity {
                return closed_inf_three(b, second.virtual_end, c);
            }
            closed_three(finite(first)?, first.virtual_end, b, second.virtual_end, c)
        }
        _ => Err(ConductanceError::UnsupportedPattern),
    }
}

fn closed_two(a: i64, ea: bool, b: i64, eb: bool) -> Result<ExtGauss, ConductanceError> {
    let (a, b) = (big(a), big(b));
    let ab1 = &a * &b + 1;
    match (ea, eb) {
        (false, false) => over(a.clone(), BigInt::zero(), ab1),
        (true, false) => {
            let den = &ab1 * &ab1 + &b * &b;
            over(&a + &b + &a * &a * &b, BigInt::one(), den)
        }
        (false, true) => {
            let den = &ab1 * &ab1 + &a * &a;
            over(&a * &ab1, &a * &a, den)
        }
        (true, true) => {
            let abm = &a * &b - 1;
            let den = &abm * &abm + &a * &a + &b * &b - 1;
            over(-&a + &b + &a * &a * &b, &a * &a, den)
        }
    }
}

/// Limits of the two-entry forms as `a -> inf`.
fn closed_inf_two(b: i64, eb: bool) -> Result<ExtGauss, ConductanceError> {
    let b = big(b);
    if eb {
        over(b.clone(), BigInt::one(), &b * &b + 1)
    } else {
        over(BigInt::one(), BigInt::zero(), b)
    }
}

/// Three-entry forms ending in a virtual crossing.
fn closed_three(a: i64, ea: bool, b: i64, eb: bool, c: i64) -> Result<ExtGauss, ConductanceError> {
    let (a, b) = (big(a), big(b));
    let ab1 = &a * &b + 1;
    let part = match (ea, eb) {
        (false, false) => shift(over(a.clone(), BigInt::zero(), ab1)?, 0, 1)?,
        (true, false) => {
            let den = &ab1 * &ab1 + &b * &b;
            over(
                &a - &b + &a * &a * &b,
                (BigInt::one() + &a * &a) * &b * &b,
                den,
            )?
        }
        (false, true) => {
            let den = &ab1 * &ab1 + &a * &a;
            over(-(&a * &ab1), &ab1 * &ab1, den)?
        }
        (true, true) => {
            let abm = &a * &b - 1;
            let den = &abm * &abm + &a * &a + &b * &b - 1;
            over(
                -(&a - &b + &a * &a * &b),
                (BigInt::one() + &a * &a) * &b * &b,
                den,
            )?
        }
    };
    shift(part, c, 0)
}

/// Limits of the three-entry forms as `a -> inf`.
fn closed_inf_three(b: i64, eb: bool, c: i64) -> Result<ExtGauss, ConductanceError> {
    let b = big(b);
    let part = if eb {
        over(-b.clone(), &b * &b, &b * &b + 1)?
    } else {
        shift(over(BigInt::one(), BigInt::zero(), b)?, 0, 1)?
    };
    shift(part, c, 0)
}

/// `C(T+S)`, `C(T) + C(S)` and the correction `2cfi / ((b+c)(e+f))` for
/// `T = (a, b, c)` and `S = (d, e, f)`; the identity is
/// `lhs = rhs - correction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityCheck {
    pub lhs: ExtGauss,
    pub rhs: ExtGauss,
    pub correction: ExtGauss,
}

impl AdditivityCheck {
    pub fn holds(&self) -> Result<bool, ArithError> {
        Ok(self.lhs == self.rhs.sub(&self.correction)?)
    }
}

fn finite_quotient(
    num: &Cyc8,
    den: &Cyc8,
    what: &'static str,
) -> Result<ExtGauss, ConductanceError> {
    if den.is_zero() {
        return Err(ConductanceError::Indeterminate {
            level: 0,
            form: what,
        });
    }
    Ok(ExtGauss::Finite(num.checked_div(den)?.to_gauss()?))
}

pub fn additivity_identity(
    t: &BracketTriple,
    s: &BracketTriple,
) -> Result<AdditivityCheck, ConductanceError> {
    let [_, b, c] = t.eval_at_zeta8();
    let [_, e, f] = s.eval_at_zeta8();
    let den = &(&b + &c) * &(&e + &f);
    let two_i = Cyc8::from_i64([0, 0, 2, 0]);
    let correction = finite_quotient(&(&two_i * &(&c * &f)), &den, "(b+c)(e+f) = 0")?;
    let lhs = conductance_from_bracket(&t.plus(s))?;
    let rhs = conductance_from_bracket(t)?.add(&conductance_from_bracket(s)?)?;
    Ok(AdditivityCheck {
        lhs,
        rhs,
        correction,
    })
}

/// `C(T*S)` next to `1 / (1/C(T) + 1/C(S) + 2cfi/((a+c)(d+f)))`.
pub fn star_identity(
    t: &BracketTriple,
    s: &BracketTriple,
) -> Result<(ExtGauss, ExtGauss), ConductanceError> {
    let [a, _, c] = t.eval_at_zeta8();
    let [d, _, f] = s.eval_at_zeta8();
    let den = &(&a + &c) * &(&d + &f);
    let two_i = Cyc8::from_i64([0, 0, 2, 0]);
    let correction = finite_quotient(&(&two_i * &(&c * &f)), &den, "(a+c)(d+f) = 0")?;
    let lhs = conductance_from_bracket(&t.star(s))?;
    let ct = conductance_from_bracket(t)?.invert();
    let cs = conductance_from_bracket(s)?.invert();
    let rhs = ct.add(&cs)?.add(&correction)?.invert();
    Ok((lhs, rhs))
}

/// Conductances of `T`, `T' = T + X` and `T'' = T * X`, where
/// `C(T) = -i C(T') C(T'')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioCheck {
    pub c: ExtGauss,
    pub c_east: ExtGauss,
    pub c_south: ExtGauss,
}

impl RatioCheck {
    /// `Err` when the product is `0 * inf`.
    pub fn product(&self) -> Result<ExtGauss, ArithError> {
        Ok(self.c_east.mul(&self.c_south)?.mul_neg_i())
    }

    pub fn holds(&self) -> Result<bool, ArithError> {
        Ok(self.product()? == self.c)
    }
}

pub fn ratio_identity(t: &TangleDiagram) -> Result<RatioCheck, ConductanceError> {
    let x = TangleDiagram::virtual_crossing();
    Ok(RatioCheck {
        c: conductance_of_diagram(t)?,
        c_east: conductance_of_diagram(&t.plus(&x))?,
        c_south: conductance_of_diagram(&t.star(&x))?,
    })
}

/// Every applicable computation path for `v`, in a fixed order. The closed
/// form is included only for vectors of length at most 3.
pub fn all_paths(v: &TangleVector) -> Vec<(Provenance, Result<ExtGauss, ConductanceError>)> {
    let mut out = alloc::vec![
        (Provenance::StateSum, conductance_state_sum(v)),
        (Provenance::Recursion, conductance_recursive(v)),
        (Provenance::ContinuedFraction, continued_fraction_c(v)),
    ];
    if v.normalized().len() <= 3 {
        out.push((Provenance::ClosedForm, closed_form(v)));
    }
    if v.is_classical() {
        out.push((Provenance::ClassicalFraction, classical_fraction_of(v)));
    }
    out
}

/// Conductance of `[n^e]` or `1/[n^e]` by state sum.
pub fn elementary_conductance(
    n: i64,
    virtual_end: bool,
    axis: Axis,
) -> Result<ExtGauss, ConductanceError> {
    conductance_of_diagram(&crate::diagram::elementary(n, virtual_end, axis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::LaurentPoly;

    fn v(s: &str) -> TangleVector {
        s.parse().unwrap()
    }

    fn g(re: (i64, i64), im: (i64, i64)) -> ExtGauss {
        ExtGauss::from_ratio(re, im)
    }

    #[test]
    fn from_bracket_examples() {
        let p = |s: &str| s.parse::<LaurentPoly>().unwrap();
        assert_eq!(
            conductance_from_bracket(&BracketTriple::horizontal()),
            Ok(ExtGauss::zero())
        );
        assert_eq!(
            conductance_from_bracket(&BracketTriple::vertical()),
            Ok(ExtGauss::Infinity)
        );
        let t = BracketTriple::new(p("A^-1"), p("A"), LaurentPoly::zero());
        assert_eq!(conductance_from_bracket(&t), Ok(ExtGauss::one()));
        let t = BracketTriple::new(p("A^-1"), LaurentPoly::zero(), p("A"));
        assert_eq!(conductance_from_bracket(&t), Ok(ExtGauss::from_i64(1, 1)));
        assert_eq!(
            conductance_from_bracket(&BracketTriple::zero()),
            Err(ConductanceError::BracketIndeterminate)
        );
    }

    #[test]
    fn classical_fraction_examples() {
        let t = |xs: &[i64]| xs.iter().map(|&a| Twist::Finite(a)).collect::<Vec<_>>();
        assert_eq!(
            classical_fraction(&t(&[2, 3, 1]), true),
            Ok(g((9, 7), (0, 1)))
        );
        assert_eq!(classical_fraction(&t(&[5]), true), Ok(5.into()));
        assert_eq!(
            classical_fraction(&[Twist::Infinity, Twist::Finite(2)], true),
            Ok(g((1, 2), (0, 1)))
        );
        assert_eq!(classical_fraction(&t(&[2]), false), Ok(g((1, 2), (0, 1))));
        assert_eq!(classical_fraction(&t(&[0]), false), Ok(ExtGauss::Infinity));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(conductance_recursive(&v("3")), Ok(3.into()));
        assert_eq!(
            conductance_recursive(&v("1v,1v")),
            Ok(ExtGauss::from_i64(1, 1))
        );
        assert_eq!(conductance_recursive(&v("2,3,1v")), Ok(g((9, 7), (1, 1))));
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction_c(&v("2v")), Ok(ExtGauss::from_i64(2, 1)));
        assert_eq!(continued_fraction_c(&v("1v,0v,2v")), Ok(ExtGauss::one()));
        assert_eq!(continued_fraction_c(&v("2,3,1")), Ok(g((9, 7), (0, 1))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(&v("2,3")), Ok(g((2, 7), (0, 1))));
        assert_eq!(closed_form(&v("1v,1")), Ok(g((3, 5), (1, 5))));
        assert_eq!(closed_form(&v("1,1v,0v")), Ok(g((-2, 5), (4, 5))));
        assert_eq!(
            closed_form(&v("0v,0v,3v")),
            Err(ConductanceError::ClosedFormDegenerate)
        );
        assert_eq!(
            closed_form(&v("1,2,3,4")),
            Err(ConductanceError::UnsupportedPattern)
        );
    }

    #[test]
    fn state_sum_examples() {
        assert_eq!(
            conductance_state_sum(&v("1v,1v")),
            Ok(ExtGauss::from_i64(1, 1))
        );
        assert_eq!(conductance_state_sum(&v("2,3,1v")), Ok(g((9, 7), (1, 1))));
        assert_eq!(conductance_state_sum(&v("1v,0v,2v")), Ok(ExtGauss::one()));
        assert_eq!(conductance_state_sum(&v("1v,1")), Ok(g((3, 5), (1, 5))));
        assert_eq!(conductance_state_sum(&v("1,1v,0v")), Ok(g((-2, 5), (4, 5))));
    }

    #[test]
    fn cancellation_family() {
        for a in 1..=3 {
            for c in -2..=2 {
                let lhs = conductance_state_sum(&v(&alloc::format!("{a}v,0v,{c}v")));
                let rhs = conductance_state_sum(&v(&alloc::format!("inf,{},{c}", -a)));
                assert_eq!(lhs, rhs, "a={a} c={c}");
            }
        }
    }

    #[test]
    fn additivity_with_correction() {
        let x = bracket(&crate::diagram::elementary(1, true, Axis::Horizontal));
        let check = additivity_identity(&x, &x).unwrap();
        assert!(!check.correction.is_zero());
        assert_eq!(check.holds(), Ok(true));
        let y = bracket(&crate::diagram::elementary(2, false, Axis::Horizontal));
        let check = additivity_identity(&x, &y).unwrap();
        assert!(check.correction.is_zero());
        assert_eq!(check.lhs, check.rhs);
        let (l, r) = star_identity(&x, &y).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn ratio_examples() {
        let one = crate::diagram::elementary(1, false, Axis::Horizontal);
        let r = ratio_identity(&one).unwrap();
        assert_eq!(r.holds(), Ok(true));
        let r = ratio_identity(&build_basic(&v("2,3"))).unwrap();
        assert_eq!(r.holds(), Ok(true));
    }
}
