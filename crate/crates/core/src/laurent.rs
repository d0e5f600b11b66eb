//! Exact Laurent polynomials in `s = √q` with integer coefficients.
//!
//! Elements of `ℤ[√q, √q⁻¹]` are stored sparsely as a map from the exponent of
//! `s` to a nonzero `i64` coefficient, so `q` itself has stored exponent 2.
//! Every arithmetic routine is checked: an overflowing coefficient yields
//! [`Error::Overflow`] instead of wrapping. The `std::ops` impls call the
//! checked routines and panic on overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial in `s = √q`, kept free of zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i64, i64>,
}

/// The three unit bases whose integer powers appear as prefactors in the
/// Alexander and Jones formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitBase {
    /// `√q`
    SqrtQ,
    /// `-√q`
    NegSqrtQ,
    /// `-q`
    NegQ,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff · s^s_exp`, i.e. `coeff · q^(s_exp/2)`.
    pub fn monomial(coeff: i64, s_exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(s_exp, coeff);
        }
        Self { coeffs }
    }

    /// `coeff · q^q_exp` for an integral power of `q`.
    pub fn q_monomial(coeff: i64, q_exp: i64) -> Self {
        Self::monomial(coeff, 2 * q_exp)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::q_monomial(1, 1)
    }

    /// The half-variable `s = √q`.
    pub fn sqrt_q() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(s_exp, coeff)` pairs, summing repeated
    /// exponents.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut coeffs, e, c)?;
        }
        Ok(Self { coeffs })
    }

    /// Builds a polynomial in integral powers of `q` from `(q_exp, coeff)` pairs.
    pub fn from_q_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (2 * e, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `s^s_exp`.
    pub fn coeff(&self, s_exp: i64) -> i64 {
        self.coeffs.get(&s_exp).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(s_exp, coeff)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_s_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_s_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when every exponent of `s` is even, i.e. the value lies in `ℤ[q, q⁻¹]`.
    pub fn is_integral_in_q(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        for (&e, &c) in &other.coeffs {
            accumulate(&mut coeffs, e, c)?;
        }
        Ok(Self { coeffs })
    }

    pub fn try_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, &c)| c.checked_neg().map(|c| (e, c)).ok_or(Error::Overflow("negation")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.try_neg()?)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                let e = e1.checked_add(e2).ok_or(Error::Overflow("exponent"))?;
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("multiplication"))?;
                accumulate(&mut coeffs, e, c)?;
            }
        }
        Ok(Self { coeffs })
    }

    /// Multiplies every coefficient by `k`.
    pub fn try_scale(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::zero());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, &c)| c.checked_mul(k).map(|c| (e, c)).ok_or(Error::Overflow("scaling")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Multiplies by `s^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }

    /// Integer power `base^n` of a unit base; negative `n` allowed.
    pub fn monomial_pow(base: UnitBase, n: i64) -> Self {
        let odd = n.rem_euclid(2) == 1;
        match base {
            UnitBase::SqrtQ => Self::monomial(1, n),
            UnitBase::NegSqrtQ => Self::monomial(if odd { -1 } else { 1 }, n),
            UnitBase::NegQ => Self::monomial(if odd { -1 } else { 1 }, 2 * n),
        }
    }

    /// Exact quotient `self / divisor` in `ℤ[s, s⁻¹]`.
    ///
    /// Fails with [`Error::NotDivisible`] when the divisor does not divide
    /// `self` with an integer-coefficient Laurent quotient.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_s_exp(), divisor.max_s_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let (Some(_), Some(p_hi)) = (self.min_s_exp(), self.max_s_exp()) else {
            return Ok(Self::zero());
        };
        let d_lead = divisor.coeff(d_lo);
        // Any quotient term lives in [min(p) - d_lo, max(p) - d_hi].
        let q_hi = p_hi - d_hi;

        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some(r_lo) = rem.min_s_exp() {
            let c = rem.coeff(r_lo);
            if c % d_lead != 0 {
                return Err(Error::NotDivisible);
            }
            let e = r_lo - d_lo;
            if e > q_hi {
                return Err(Error::NotDivisible);
            }
            let term = Self::monomial(c / d_lead, e);
            rem = rem.try_sub(&divisor.try_mul(&term)?)?;
            quot.insert(e, c / d_lead);
        }
        Ok(Self { coeffs: quot })
    }

    /// Specialization `q = -1`, realised as the substitution `s ↦ i`.
    pub fn eval_q_minus_one(&self) -> Result<GaussInt> {
        self.terms().try_fold(GaussInt::ZERO, |acc, (e, c)| {
            GaussInt::i_pow(e).try_scale(c)?.try_add(acc)
        })
    }
}

fn accumulate(coeffs: &mut BTreeMap<i64, i64>, e: i64, c: i64) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let entry = coeffs.entry(e).or_insert(0);
    *entry = entry.checked_add(c).ok_or(Error::Overflow("addition"))?;
    if *entry == 0 {
        coeffs.remove(&e);
    }
    Ok(())
}

fn fmt_exponent(s_exp: i64) -> String {
    if s_exp % 2 == 0 {
        (s_exp / 2).to_string()
    } else {
        format!("{s_exp}/2")
    }
}

/// Terms in increasing exponent order joined by `" + "`; the constant term is
/// printed bare, every other term as `c*q^e` with `e` integral or `k/2`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&HalfLaurent> for &HalfLaurent {
            type Output = HalfLaurent;
            fn $method(self, rhs: &HalfLaurent) -> HalfLaurent {
                self.$checked(rhs).expect("HalfLaurent coefficient overflow")
            }
        }
        impl $trait for HalfLaurent {
            type Output = HalfLaurent;
            fn $method(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        self.try_neg().expect("HalfLaurent coefficient overflow")
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    /// `i^n` for any integer `n`.
    pub fn i_pow(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        Ok(Self {
            re: self.re.checked_add(other.re).ok_or(Error::Overflow("gaussian addition"))?,
            im: self.im.checked_add(other.im).ok_or(Error::Overflow("gaussian addition"))?,
        })
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        let (a, b, c, d) = (
            i128::from(self.re),
            i128::from(self.im),
            i128::from(other.re),
            i128::from(other.im),
        );
        let re = i64::try_from(a * c - b * d).map_err(|_| Error::Overflow("gaussian product"))?;
        let im = i64::try_from(a * d + b * c).map_err(|_| Error::Overflow("gaussian product"))?;
        Ok(Self { re, im })
    }

    pub fn try_scale(self, k: i64) -> Result<Self> {
        Ok(Self {
            re: self.re.checked_mul(k).ok_or(Error::Overflow("gaussian scaling"))?,
            im: self.im.checked_mul(k).ok_or(Error::Overflow("gaussian scaling"))?,
        })
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}
