//! Words in the three-strand braid group, their exponent sums, the reduced
//! Burau matrices, the projection to `SL₂(ℤ)`, and the Alexander and Jones
//! polynomials of the closed braids.
//!
//! Both polynomials of a closed 3-braid depend only on the Burau trace and
//! the exponent sum `ε`:
//!
//! ```text
//! Δ(q) = (-1/√q)^(ε-2) · (1 - tr β(w) + (-q)^ε) / (1 + q + q²)
//! V(q) = (√q)^ε · (q + q⁻¹ + tr β(w))
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{GaussInt, HalfLaurent, UnitBase};
use crate::sl2z::Mat2Z;

/// One of `σ₁`, `σ₁⁻¹`, `σ₂`, `σ₂⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S1,
    S1Inv,
    S2,
    S2Inv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::S1, Letter::S1Inv, Letter::S2, Letter::S2Inv];

    pub fn new(generator: u8, inverse: bool) -> Option<Self> {
        match (generator, inverse) {
            (1, false) => Some(Letter::S1),
            (1, true) => Some(Letter::S1Inv),
            (2, false) => Some(Letter::S2),
            (2, true) => Some(Letter::S2Inv),
            _ => None,
        }
    }

    pub fn generator(self) -> u8 {
        match self {
            Letter::S1 | Letter::S1Inv => 1,
            Letter::S2 | Letter::S2Inv => 2,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Letter::S1 | Letter::S2 => 1,
            Letter::S1Inv | Letter::S2Inv => -1,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Letter::S1 => Letter::S1Inv,
            Letter::S1Inv => Letter::S1,
            Letter::S2 => Letter::S2Inv,
            Letter::S2Inv => Letter::S2,
        }
    }

    /// Image in `SL₂(ℤ)`: `σ₁ ↦ S`, `σ₂ ↦ T`.
    pub fn matrix(self) -> Mat2Z {
        match self {
            Letter::S1 => Mat2Z::s_pow(1),
            Letter::S1Inv => Mat2Z::s_pow(-1),
            Letter::S2 => Mat2Z::t_pow(1),
            Letter::S2Inv => Mat2Z::t_pow(-1),
        }
    }

    /// Reduced Burau image.
    pub fn burau(self) -> BurauMat {
        let q = |c, e| HalfLaurent::q_monomial(c, e);
        let zero = HalfLaurent::zero;
        let entries = match self {
            Letter::S1 => [[q(1, 0), q(-1, 1)], [zero(), q(-1, 1)]],
            Letter::S1Inv => [[q(1, 0), q(-1, 0)], [zero(), q(-1, -1)]],
            Letter::S2 => [[q(-1, 1), zero()], [q(-1, 0), q(1, 0)]],
            Letter::S2Inv => [[q(-1, -1), zero()], [q(-1, -1), q(1, 0)]],
        };
        BurauMat { entries }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent() < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.generator())
    }
}

/// A braid word on three strands; not necessarily freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord(Vec<Letter>);

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Appends `letter^k`; negative `k` appends the inverse letter.
    pub fn push_power(&mut self, letter: Letter, k: i64) {
        let (l, n) = if k >= 0 { (letter, k) } else { (letter.inverse(), -k) };
        self.0.extend(std::iter::repeat_n(l, n as usize));
    }

    /// `σ₁^k1 σ₂^k2 …` from alternating exponents starting with `σ₁` or `σ₂`.
    pub fn from_syllables(pairs: &[(u8, i64)]) -> Self {
        let mut w = Self::identity();
        for &(g, k) in pairs {
            let letter = Letter::new(g, false).expect("generator must be 1 or 2");
            w.push_power(letter, k);
        }
        w
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Self(letters)
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent `σᵢσᵢ⁻¹` pairs.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Canonical rendering: one signed generator index per letter, space separated.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

/// Parses whitespace-separated tokens `[-]g[^k]` with `g ∈ {1, 2}` and `k` a
/// signed integer, e.g. `"1^-1 2^3 1^-2 2^5"`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut word = BraidWord::identity();
    let mut rest = text;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(word);
        }
        let token_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..token_len];
        let (letter, power) = parse_token(token, offset)?;
        word.push_power(letter, power);
        rest = &trimmed[token_len..];
        offset += token_len;
    }
}

fn parse_token(token: &str, position: usize) -> Result<(Letter, i64)> {
    let err = |pos: usize, cause: String| Error::Parse { position: pos, cause };
    let (negated, body) = if let Some(b) = token.strip_prefix('-') {
        (true, b)
    } else if let Some(b) = token.strip_prefix('+') {
        (false, b)
    } else {
        (false, token)
    };
    let body_pos = position + token.len() - body.len();
    let (gen_text, power_text) = match body.split_once('^') {
        Some((g, p)) => (g, Some(p)),
        None => (body, None),
    };
    if gen_text.is_empty() || !gen_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(body_pos, format!("expected generator index 1 or 2 in token {token:?}")));
    }
    let generator = match gen_text {
        "1" => 1,
        "2" => 2,
        _ => {
            return Err(err(
                body_pos,
                format!("generator index {gen_text} out of range for B3 (expected 1 or 2)"),
            ))
        }
    };
    let power = match power_text {
        None => 1,
        Some(p) => {
            let p_pos = body_pos + gen_text.len() + 1;
            p.parse::<i64>()
                .map_err(|_| err(p_pos, format!("invalid exponent {p:?} in token {token:?}")))?
        }
    };
    if power.unsigned_abs() > 1 << 24 {
        return Err(err(position, format!("exponent {power} too large")));
    }
    let letter = Letter::new(generator, false).expect("validated generator");
    Ok((letter, if negated { -power } else { power }))
}

/// Exponent sum `ε(w)`.
pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters().iter().map(|l| l.exponent()).sum()
}

/// `(σ₁σ₂σ₁)^k` for `k ≥ 0`.
pub fn garside_power(k: i64) -> Result<BraidWord> {
    if k < 0 {
        return Err(Error::InvalidParameters(format!(
            "Garside power must be nonnegative, got {k}"
        )));
    }
    let delta = [Letter::S1, Letter::S2, Letter::S1];
    Ok(delta.iter().copied().cycle().take(3 * k as usize).collect())
}

/// 2×2 matrix over `ℤ[q, q⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMat {
    pub entries: [[HalfLaurent; 2]; 2],
}

impl BurauMat {
    pub fn identity() -> Self {
        let (o, z) = (HalfLaurent::one, HalfLaurent::zero);
        Self { entries: [[o(), z()], [z(), o()]] }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let (x, y) = (&self.entries, &rhs.entries);
        let cell = |i: usize, j: usize| -> Result<HalfLaurent> {
            x[i][0].try_mul(&y[0][j])?.try_add(&x[i][1].try_mul(&y[1][j])?)
        };
        Ok(Self { entries: [[cell(0, 0)?, cell(0, 1)?], [cell(1, 0)?, cell(1, 1)?]] })
    }

    pub fn trace(&self) -> Result<HalfLaurent> {
        self.entries[0][0].try_add(&self.entries[1][1])
    }

    pub fn det(&self) -> Result<HalfLaurent> {
        let e = &self.entries;
        e[0][0].try_mul(&e[1][1])?.try_sub(&e[0][1].try_mul(&e[1][0])?)
    }

    /// Entrywise `q = -1`; fails unless every entry specialises to an integer
    /// and the result has determinant 1.
    pub fn specialize(&self) -> Result<Mat2Z> {
        let mut vals = [0i64; 4];
        for (v, p) in vals.iter_mut().zip(self.entries.iter().flatten()) {
            let g = p.eval_q_minus_one()?;
            if g.im != 0 {
                return Err(Error::InvalidParameters(format!("entry {p} is not in Z[q, 1/q]")));
            }
            *v = g.re;
        }
        Mat2Z::new(vals[0], vals[1], vals[2], vals[3])
    }
}

impl Serialize for BurauMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

pub fn burau(w: &BraidWord) -> Result<BurauMat> {
    w.letters()
        .iter()
        .try_fold(BurauMat::identity(), |acc, l| acc.try_mul(&l.burau()))
}

/// Image of the word under `σ₁ ↦ S`, `σ₂ ↦ T`.
pub fn phi(w: &BraidWord) -> Result<Mat2Z> {
    w.letters()
        .iter()
        .try_fold(Mat2Z::IDENTITY, |acc, l| acc.try_mul(&l.matrix()))
}

/// `tr φ(w)`.
pub fn trace_b3(w: &BraidWord) -> Result<i64> {
    phi(w)?.trace()
}

/// Alexander polynomial from the Burau trace and exponent sum.
pub fn alexander_from_trace(burau_trace: &HalfLaurent, eps: i64) -> Result<HalfLaurent> {
    let cyclo = HalfLaurent::from_q_terms([(0, 1), (1, 1), (2, 1)])?;
    let numerator = HalfLaurent::one()
        .try_sub(burau_trace)?
        .try_add(&HalfLaurent::monomial_pow(UnitBase::NegQ, eps))?;
    let quotient = numerator.exact_div(&cyclo)?;
    // (-1/√q)^(ε-2) = (-√q)^(2-ε)
    HalfLaurent::monomial_pow(UnitBase::NegSqrtQ, 2 - eps).try_mul(&quotient)
}

/// Jones polynomial from the Burau trace and exponent sum.
pub fn jones_from_trace(burau_trace: &HalfLaurent, eps: i64) -> Result<HalfLaurent> {
    let base = HalfLaurent::from_q_terms([(1, 1), (-1, 1)])?.try_add(burau_trace)?;
    HalfLaurent::monomial_pow(UnitBase::SqrtQ, eps).try_mul(&base)
}

/// Jones polynomial recovered from the Alexander polynomial and `ε`:
///
/// `V = (√q)^ε [q + q⁻¹ + 1 + (-q)^ε - (-√q)^(ε-2) (1 + q + q²) Δ]`.
pub fn jones_from_alexander(alexander: &HalfLaurent, eps: i64) -> Result<HalfLaurent> {
    let cyclo = HalfLaurent::from_q_terms([(0, 1), (1, 1), (2, 1)])?;
    let correction = HalfLaurent::monomial_pow(UnitBase::NegSqrtQ, eps - 2)
        .try_mul(&cyclo)?
        .try_mul(alexander)?;
    let bracket = HalfLaurent::from_q_terms([(1, 1), (-1, 1), (0, 1)])?
        .try_add(&HalfLaurent::monomial_pow(UnitBase::NegQ, eps))?
        .try_sub(&correction)?;
    HalfLaurent::monomial_pow(UnitBase::SqrtQ, eps).try_mul(&bracket)
}

/// Alexander polynomial of the closure of `w`.
pub fn alexander(w: &BraidWord) -> Result<HalfLaurent> {
    alexander_from_trace(&burau(w)?.trace()?, exponent_sum(w))
}

/// Jones polynomial of the closure of `w`.
pub fn jones(w: &BraidWord) -> Result<HalfLaurent> {
    jones_from_trace(&burau(w)?.trace()?, exponent_sum(w))
}

/// `i^ε(w) · (tr φ(w) - 2)`, the common value of both polynomials at `q = -1`.
pub fn special_value(w: &BraidWord) -> Result<GaussInt> {
    let t = trace_b3(w)?;
    GaussInt::i_pow(exponent_sum(w)).try_scale(t.checked_sub(2).ok_or(Error::Overflow("trace"))?)
}

/// Every invariant of a braid word, computed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidInvariants {
    pub word: BraidWord,
    pub exponent_sum: i64,
    pub trace: i64,
    pub phi: Mat2Z,
    pub burau_trace: HalfLaurent,
    pub alexander: HalfLaurent,
    pub jones: HalfLaurent,
    pub special_value: GaussInt,
}

impl BraidInvariants {
    pub fn compute(word: &BraidWord) -> Result<Self> {
        let eps = exponent_sum(word);
        let phi_mat = phi(word)?;
        let burau_trace = burau(word)?.trace()?;
        Ok(Self {
            word: word.clone(),
            exponent_sum: eps,
            trace: phi_mat.trace()?,
            phi: phi_mat,
            alexander: alexander_from_trace(&burau_trace, eps)?,
            jones: jones_from_trace(&burau_trace, eps)?,
            burau_trace,
            special_value: special_value(word)?,
        })
    }
}
