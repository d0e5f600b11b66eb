//! Exact arithmetic in `SL₂(ℤ)`, rewriting into the generators
//! `S = [[1,1],[0,1]]` and `T = [[1,0],[-1,1]]`, the exponent-sum class
//! function modulo 12, and conjugacy testing for traces `t ≠ ±2`.

use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quadforms;

/// A 2×2 integer matrix of determinant 1, row-major `[[a, b], [c, d]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Z {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

impl Mat2Z {
    pub const IDENTITY: Mat2Z = Mat2Z { a: 1, b: 0, c: 0, d: 1 };
    pub const NEG_IDENTITY: Mat2Z = Mat2Z { a: -1, b: 0, c: 0, d: -1 };
    pub const S: Mat2Z = Mat2Z { a: 1, b: 1, c: 0, d: 1 };
    pub const T: Mat2Z = Mat2Z { a: 1, b: 0, c: -1, d: 1 };

    /// Checks `ad - bc = 1`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c);
        if det != 1 {
            return Err(Error::NotUnimodular { a, b, c, d });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn trace(&self) -> Result<i64> {
        self.a.checked_add(self.d).ok_or(Error::Overflow("trace"))
    }

    /// `S^k`, defined for every integer `k`.
    pub fn s_pow(k: i64) -> Self {
        Self { a: 1, b: k, c: 0, d: 1 }
    }

    /// `T^k`, defined for every integer `k`.
    pub fn t_pow(k: i64) -> Self {
        Self { a: 1, b: 0, c: -k, d: 1 }
    }

    pub fn inverse(&self) -> Result<Self> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("inverse"));
        Ok(Self { a: self.d, b: neg(self.b)?, c: neg(self.c)?, d: self.a })
    }

    pub fn try_neg(&self) -> Result<Self> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("negation"));
        Ok(Self { a: neg(self.a)?, b: neg(self.b)?, c: neg(self.c)?, d: neg(self.d)? })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let [a, b, c, d] = [self.a, self.b, self.c, self.d].map(i128::from);
        let [e, f, g, h] = [rhs.a, rhs.b, rhs.c, rhs.d].map(i128::from);
        Ok(Self {
            a: narrow(a * e + b * g, "matrix product")?,
            b: narrow(a * f + b * h, "matrix product")?,
            c: narrow(c * e + d * g, "matrix product")?,
            d: narrow(c * f + d * h, "matrix product")?,
        })
    }

    /// `P · self · P⁻¹`.
    pub fn conjugate_by(&self, p: &Self) -> Result<Self> {
        p.try_mul(self)?.try_mul(&p.inverse()?)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Result<Self> {
        let mut acc = Self::IDENTITY;
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Rewrites the matrix as a word in `S` and `T`.
    ///
    /// Left multiplication by powers of `S` and `T` runs the Euclidean
    /// algorithm on the first column until it reads `(±1, 0)`; what remains
    /// is `±S^k`, with `-I` written as `(ST)³`. The word is not canonical.
    pub fn decompose_st(&self) -> StWord {
        let (mut a, mut b, mut c, mut d) = (self.a, self.b, self.c, self.d);
        // ops[i] was applied on the left at step i; self = ops[0]⁻¹ ⋯ ops[m]⁻¹ · rest
        let mut inverse_ops: Vec<(StGen, i64)> = Vec::new();
        while c != 0 {
            if a == 0 {
                // c = ±1 here; S brings the first column to (c, c)
                a += c;
                b += d;
                inverse_ops.push((StGen::S, -1));
            } else if a.abs() > c.abs() {
                let k = -a.div_euclid(c);
                a += k * c;
                b += k * d;
                inverse_ops.push((StGen::S, -k));
            } else {
                let k = c.div_euclid(a);
                c -= k * a;
                d -= k * b;
                inverse_ops.push((StGen::T, -k));
            }
        }
        let mut word = StWord::default();
        for (g, k) in inverse_ops {
            word.push(g, k);
        }
        debug_assert!(a == d && a.abs() == 1);
        if a == 1 {
            word.push(StGen::S, b);
        } else {
            // [[-1, b], [0, -1]] = -I · S^(-b)
            for _ in 0..3 {
                word.push(StGen::S, 1);
                word.push(StGen::T, 1);
            }
            word.push(StGen::S, -b);
        }
        word
    }

    /// Exponent sum of any `S`,`T` word for the matrix, reduced modulo 12.
    pub fn exponent_mod12(&self) -> u8 {
        self.decompose_st().exponent_mod12()
    }
}

impl Mul for Mat2Z {
    type Output = Mat2Z;
    fn mul(self, rhs: Mat2Z) -> Mat2Z {
        self.try_mul(&rhs).expect("Mat2Z entry overflow")
    }
}

impl Mul for &Mat2Z {
    type Output = Mat2Z;
    fn mul(self, rhs: &Mat2Z) -> Mat2Z {
        self.try_mul(rhs).expect("Mat2Z entry overflow")
    }
}

impl fmt::Debug for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Mat2Z {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StGen {
    S,
    T,
}

impl StGen {
    pub fn matrix_pow(self, k: i64) -> Mat2Z {
        match self {
            StGen::S => Mat2Z::s_pow(k),
            StGen::T => Mat2Z::t_pow(k),
        }
    }
}

/// A word `g₁^k₁ g₂^k₂ ⋯` in `S` and `T` with nonzero powers and no two
/// adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StWord(Vec<(StGen, i64)>);

impl StWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `g^k`, merging with the last syllable when possible.
    pub fn push(&mut self, g: StGen, k: i64) {
        if k == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += k;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, k));
    }

    pub fn syllables(&self) -> &[(StGen, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> Result<Mat2Z> {
        self.0
            .iter()
            .try_fold(Mat2Z::IDENTITY, |acc, &(g, k)| acc.try_mul(&g.matrix_pow(k)))
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    pub fn exponent_mod12(&self) -> u8 {
        self.exponent_sum().rem_euclid(12) as u8
    }
}

/// Whether `m` and `n` are conjugate in `SL₂(ℤ)`.
///
/// Both matrices are sent to quadratic forms of discriminant `t² - 4` and
/// compared by form equivalence. Traces `±2` are rejected.
pub fn is_conjugate(m: &Mat2Z, n: &Mat2Z) -> Result<bool> {
    let t = m.trace()?;
    if t == 2 || t == -2 {
        return Err(Error::ExcludedTrace(t));
    }
    let t2 = n.trace()?;
    if t2 == 2 || t2 == -2 {
        return Err(Error::ExcludedTrace(t2));
    }
    if t != t2 {
        return Ok(false);
    }
    quadforms::equivalent(&quadforms::ccc_form(m)?, &quadforms::ccc_form(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::new(a, b, c, d).unwrap()
    }

    #[test]
    fn constructor_checks_determinant() {
        assert!(Mat2Z::new(1, 1, 1, 1).is_err());
        assert!(Mat2Z::new(2, 1, 1, 1).is_ok());
    }

    #[test]
    fn product_examples() {
        assert_eq!(Mat2Z::S * Mat2Z::T, m(0, 1, -1, 1));
        let x = m(5, 3, 3, 2);
        assert_eq!(x * x.inverse().unwrap(), Mat2Z::IDENTITY);
        assert_eq!((Mat2Z::S * Mat2Z::T).pow(6).unwrap(), Mat2Z::IDENTITY);
        assert_eq!((Mat2Z::S * Mat2Z::T).pow(3).unwrap(), Mat2Z::NEG_IDENTITY);
        assert_eq!(Mat2Z::S * Mat2Z::T * Mat2Z::S, Mat2Z::T * Mat2Z::S * Mat2Z::T);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Mat2Z::s_pow(i64::MAX);
        assert!(big.try_mul(&big).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert!(Mat2Z::IDENTITY.decompose_st().is_empty());
        assert_eq!(Mat2Z::S.decompose_st().syllables(), &[(StGen::S, 1)]);
        let w = Mat2Z::NEG_IDENTITY.decompose_st();
        assert_eq!(w.product().unwrap(), Mat2Z::NEG_IDENTITY);
        for x in [m(0, 1, -1, 0), m(0, -1, 1, 0), m(2, 1, 1, 1), m(-7, 3, 2, -1), Mat2Z::T] {
            assert_eq!(x.decompose_st().product().unwrap(), x, "{x}");
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(Mat2Z::S.exponent_mod12(), 1);
        assert_eq!(Mat2Z::T.exponent_mod12(), 1);
        assert_eq!(Mat2Z::NEG_IDENTITY.exponent_mod12(), 6);
        assert_eq!(Mat2Z::IDENTITY.exponent_mod12(), 0);
        assert_eq!(Mat2Z::S.inverse().unwrap().exponent_mod12(), 11);
    }

    #[test]
    fn conjugacy_examples() {
        let r = m(0, 1, -1, 0);
        assert!(is_conjugate(&r, &r).unwrap());
        assert!(!is_conjugate(&r, &m(0, -1, 1, 0)).unwrap());
        let p = m(3, 2, 4, 3);
        assert!(is_conjugate(&r, &r.conjugate_by(&p).unwrap()).unwrap());
        assert!(!is_conjugate(&r, &(Mat2Z::S * Mat2Z::T)).unwrap());
        assert_eq!(is_conjugate(&Mat2Z::S, &Mat2Z::S), Err(Error::ExcludedTrace(2)));
        assert_eq!(
            is_conjugate(&Mat2Z::S.try_neg().unwrap(), &Mat2Z::S),
            Err(Error::ExcludedTrace(-2))
        );
    }

    fn st_word() -> impl Strategy<Value = Vec<(bool, i64)>> {
        prop::collection::vec((any::<bool>(), -4i64..=4), 0..14)
    }

    fn multiply_out(word: &[(bool, i64)]) -> Mat2Z {
        word.iter().fold(Mat2Z::IDENTITY, |acc, &(is_s, k)| {
            acc * if is_s { Mat2Z::s_pow(k) } else { Mat2Z::t_pow(k) }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn decomposition_remultiplies(word in st_word()) {
            let x = multiply_out(&word);
            prop_assert_eq!(x.decompose_st().product().unwrap(), x);
        }

        #[test]
        fn exponent_matches_source_word(word in st_word()) {
            let x = multiply_out(&word);
            let sum: i64 = word.iter().map(|&(_, k)| k).sum();
            prop_assert_eq!(i64::from(x.exponent_mod12()), sum.rem_euclid(12));
        }

        #[test]
        fn exponent_is_homomorphism(w1 in st_word(), w2 in st_word()) {
            let (x, y) = (multiply_out(&w1), multiply_out(&w2));
            prop_assert_eq!(
                (x * y).exponent_mod12(),
                (x.exponent_mod12() + y.exponent_mod12()) % 12
            );
            let conj = x.conjugate_by(&y).unwrap();
            prop_assert_eq!(conj.exponent_mod12(), x.exponent_mod12());
        }
    }
}
