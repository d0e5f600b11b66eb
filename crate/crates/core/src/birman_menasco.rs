//! Bookkeeping for the closed 3-braids whose link is shared by more than one
//! conjugacy class.
//!
//! Four families of conjugacy classes close to the same link as some other
//! class: the three unknot classes, the pairs `σ₁^k σ₂^{±1}` closing to a
//! `(2, k)` torus link, and two infinite families of pairs of 3-braids
//! (called `iii` and `iv` here):
//!
//! ```text
//! iii:  Δ^{2k} σ₁⁻¹ σ₂^u σ₁^{-v} σ₂^w            and the same with u ↔ w,   k ∈ {0, 1}
//! iv:   Δ^{2k} σ₁⁻¹ σ₂^u σ₁⁻¹ σ₂^v σ₁⁻¹ σ₂^w     and the same with v ↔ w,   k ∈ {1, 2}
//! ```
//!
//! [`m_prime`] counts the pairs of braid-index-3 classes that share a link in
//! a `(trace, exponent)` cell; [`m_full`] adds one for each class in the cell
//! that closes to a link of braid index 1 or 2.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid3::{self, BraidWord};
use crate::error::{Error, Result};

/// Which exceptional family a witness comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Unknot,
    /// `(2, k)` torus link, `k ≠ ±1`.
    Torus { k: i64 },
    FamilyIII { u: i64, v: i64, w: i64, k: i64 },
    FamilyIV { u: i64, v: i64, w: i64, k: i64 },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Unknot => "unknot",
            Family::Torus { .. } => "torus",
            Family::FamilyIII { .. } => "iii",
            Family::FamilyIV { .. } => "iv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalWitness {
    pub family: Family,
    pub words: Vec<BraidWord>,
    pub t: i64,
    pub n: i64,
}

impl ExceptionalWitness {
    /// Recomputes trace and exponent sum of every stored word.
    pub fn is_consistent(&self) -> Result<bool> {
        for w in &self.words {
            if braid3::trace_b3(w)? != self.t || braid3::exponent_sum(w) != self.n {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Serialize for ExceptionalWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExceptionalWitness", 3)?;
        st.serialize_field("family", self.family.tag())?;
        match self.family {
            Family::Unknot => st.serialize_field("params", &serde_json::Value::Null)?,
            Family::Torus { k } => st.serialize_field("params", &serde_json::json!({ "k": k }))?,
            Family::FamilyIII { u, v, w, k } | Family::FamilyIV { u, v, w, k } => st.serialize_field(
                "params",
                &serde_json::json!({ "u": u, "v": v, "w": w, "k": k }),
            )?,
        }
        st.serialize_field("words", &self.words)?;
        st.end()
    }
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_iii(u: i64, v: i64, w: i64, k: i64) -> Result<()> {
    if u < 1 || w < 1 || u == w || v < 2 || !(0..=1).contains(&k) {
        return Err(Error::InvalidParameters(format!(
            "family iii needs u, w >= 1, u != w, v >= 2, k in {{0, 1}}; got ({u}, {v}, {w}, {k})"
        )));
    }
    Ok(())
}

fn check_iv(u: i64, v: i64, w: i64, k: i64) -> Result<()> {
    if u < 1 || v < 1 || w < 1 || u == v || v == w || u == w || !(1..=2).contains(&k) {
        return Err(Error::InvalidParameters(format!(
            "family iv needs distinct u, v, w >= 1 and k in {{1, 2}}; got ({u}, {v}, {w}, {k})"
        )));
    }
    Ok(())
}

fn trace_iii(u: i64, v: i64, w: i64) -> i64 {
    2 + (u + w) * (1 + v) + u * v * w
}

fn trace_iv(u: i64, v: i64, w: i64) -> i64 {
    1 + u + v + w + u * (1 + v) + v * (1 + w) + w * (1 + u) + (1 + u) * (1 + v) * (1 + w)
}

/// `Δ^{2k} σ₁⁻¹ σ₂^u σ₁^{-v} σ₂^w`.
pub fn family_iii_word(u: i64, v: i64, w: i64, k: i64) -> Result<BraidWord> {
    check_iii(u, v, w, k)?;
    Ok(braid3::garside_power(2 * k)?.concat(&BraidWord::from_syllables(&[(1, -1), (2, u), (1, -v), (2, w)])))
}

/// `Δ^{2k} σ₁⁻¹ σ₂^u σ₁⁻¹ σ₂^v σ₁⁻¹ σ₂^w`.
pub fn family_iv_word(u: i64, v: i64, w: i64, k: i64) -> Result<BraidWord> {
    check_iv(u, v, w, k)?;
    Ok(braid3::garside_power(2 * k)?.concat(&BraidWord::from_syllables(&[
        (1, -1),
        (2, u),
        (1, -1),
        (2, v),
        (1, -1),
        (2, w),
    ])))
}

/// Closed-form `(trace, exponent)` of the family iii classes.
pub fn family_iii_trace_exp(u: i64, v: i64, w: i64, k: i64) -> Result<(i64, i64)> {
    check_iii(u, v, w, k)?;
    Ok((sign(k) * trace_iii(u, v, w), u + w - v - 1 + 6 * k))
}

/// Closed-form `(trace, exponent)` of the family iv classes.
pub fn family_iv_trace_exp(u: i64, v: i64, w: i64, k: i64) -> Result<(i64, i64)> {
    check_iv(u, v, w, k)?;
    Ok((sign(k) * trace_iv(u, v, w), u + v + w - 3 + 6 * k))
}

/// `(trace, exponent)` of `σ₁^k σ₂` (`inverse_second = false`) or `σ₁^k σ₂⁻¹`.
pub fn torus_trace_exp(k: i64, inverse_second: bool) -> (i64, i64) {
    if inverse_second {
        (2 + k, k - 1)
    } else {
        (2 - k, k + 1)
    }
}

pub fn torus_word(k: i64, inverse_second: bool) -> BraidWord {
    BraidWord::from_syllables(&[(1, k), (2, if inverse_second { -1 } else { 1 })])
}

/// The three unknot classes `σ₁σ₂`, `σ₁σ₂⁻¹`, `σ₁⁻¹σ₂⁻¹` with their
/// `(trace, exponent)`.
pub fn unknot_classes() -> [(BraidWord, (i64, i64)); 3] {
    [
        (BraidWord::from_syllables(&[(1, 1), (2, 1)]), (1, 2)),
        (BraidWord::from_syllables(&[(1, 1), (2, -1)]), (3, 0)),
        (BraidWord::from_syllables(&[(1, -1), (2, -1)]), (1, -2)),
    ]
}

/// Canonical parameters of the family iii and iv fibers in cell `(t, n)`:
/// `u < w` for iii and `u < v < w` for iv.
pub fn exceptional_fibers(t: i64, n: i64) -> Vec<Family> {
    let mut out = Vec::new();
    for k in 0..=1 {
        let target = sign(k) * t;
        // smallest trace with u = 1, w = 2, v = 2
        if target < trace_iii(1, 2, 2) {
            continue;
        }
        let mut u = 1;
        while trace_iii(u, 2, u + 1) <= target {
            let mut v = 2;
            while trace_iii(u, v, u + 1) <= target {
                let w = n - u + v + 1 - 6 * k;
                if w > u && trace_iii(u, v, w) == target {
                    out.push(Family::FamilyIII { u, v, w, k });
                }
                v += 1;
            }
            u += 1;
        }
    }
    for k in 1..=2 {
        let target = sign(k) * t;
        if target < trace_iv(1, 2, 3) {
            continue;
        }
        let mut u = 1;
        while trace_iv(u, u + 1, u + 2) <= target {
            let mut v = u + 1;
            while trace_iv(u, v, v + 1) <= target {
                let w = n + 3 - 6 * k - u - v;
                if w > v && trace_iv(u, v, w) == target {
                    out.push(Family::FamilyIV { u, v, w, k });
                }
                v += 1;
            }
            u += 1;
        }
    }
    out
}

/// Number of exceptional family iii/iv fibers with trace `t` and exponent `n`.
pub fn m_prime(t: i64, n: i64) -> u64 {
    exceptional_fibers(t, n).len() as u64
}

/// The class in cell `(t, n)` closing to a link of braid index 1 or 2, if any.
fn low_index_witness(t: i64, n: i64) -> Option<(Family, BraidWord)> {
    let unknot = |i: usize| {
        let (w, _) = unknot_classes()[i].clone();
        Some((Family::Unknot, w))
    };
    match (t, n) {
        (1, 2) => unknot(0),
        (1, -2) => unknot(2),
        (3, 0) => unknot(1),
        (1, _) | (3, _) => None,
        _ if n == t - 3 => Some((Family::Torus { k: t - 2 }, torus_word(t - 2, true))),
        _ if n == 3 - t => Some((Family::Torus { k: 2 - t }, torus_word(2 - t, false))),
        _ => None,
    }
}

/// `m_prime(t, n)` plus one when the cell contains a class whose closure has
/// braid index 1 or 2.
pub fn m_full(t: i64, n: i64) -> u64 {
    m_prime(t, n) + u64::from(low_index_witness(t, n).is_some())
}

/// Explicit braid words for every fiber counted by [`m_full`].
pub fn witnesses(t: i64, n: i64) -> Result<Vec<ExceptionalWitness>> {
    let mut out = Vec::new();
    if let Some((family, word)) = low_index_witness(t, n) {
        out.push(ExceptionalWitness { family, words: vec![word], t, n });
    }
    for family in exceptional_fibers(t, n) {
        let words = match family {
            Family::FamilyIII { u, v, w, k } => vec![family_iii_word(u, v, w, k)?, family_iii_word(w, v, u, k)?],
            Family::FamilyIV { u, v, w, k } => vec![family_iv_word(u, v, w, k)?, family_iv_word(u, w, v, k)?],
            Family::Unknot | Family::Torus { .. } => unreachable!("fibers are iii or iv"),
        };
        out.push(ExceptionalWitness { family, words, t, n });
    }
    Ok(out)
}

/// `m_prime`, `m_full` and the witnesses of one cell.
#[derive(Clone, Debug, Serialize)]
pub struct MReport {
    pub t: i64,
    pub n: i64,
    pub m_prime: u64,
    pub m: u64,
    pub witnesses: Vec<ExceptionalWitness>,
}

pub fn m_report(t: i64, n: i64) -> Result<MReport> {
    Ok(MReport { t, n, m_prime: m_prime(t, n), m: m_full(t, n), witnesses: witnesses(t, n)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid3::{exponent_sum, trace_b3};

    #[test]
    fn family_iii_examples() {
        assert_eq!(family_iii_trace_exp(1, 2, 3, 0).unwrap(), (20, 1));
        assert_eq!(family_iii_trace_exp(1, 2, 3, 1).unwrap(), (-20, 7));
        assert_eq!(family_iii_trace_exp(3, 2, 1, 0).unwrap(), (20, 1));
        let w = family_iii_word(1, 2, 3, 0).unwrap();
        assert_eq!(w.to_string(), "-1 2 -1 -1 2 2 2");
        assert_eq!((trace_b3(&w).unwrap(), exponent_sum(&w)), (20, 1));
    }

    #[test]
    fn family_iv_examples() {
        let (t1, n1) = family_iv_trace_exp(1, 2, 3, 1).unwrap();
        let (t2, n2) = family_iv_trace_exp(1, 2, 3, 2).unwrap();
        assert_eq!((t1, n1), (-48, 9));
        assert_eq!((t2, n2), (48, 15));
        let w = family_iv_word(1, 2, 3, 1).unwrap();
        assert_eq!((trace_b3(&w).unwrap(), exponent_sum(&w)), (t1, n1));
        for (u, v, w) in [(2, 3, 1), (3, 1, 2)] {
            let word = family_iv_word(u, v, w, 1).unwrap();
            assert_eq!((trace_b3(&word).unwrap(), exponent_sum(&word)), (t1, n1));
        }
    }

    #[test]
    fn domain_is_enforced() {
        assert!(family_iii_trace_exp(1, 1, 3, 0).is_err());
        assert!(family_iii_trace_exp(2, 2, 2, 0).is_err());
        assert!(family_iii_trace_exp(1, 2, 3, 2).is_err());
        assert!(family_iv_trace_exp(1, 1, 3, 1).is_err());
        assert!(family_iv_trace_exp(1, 2, 3, 0).is_err());
        assert!(family_iv_trace_exp(0, 2, 3, 1).is_err());
    }

    #[test]
    fn m_examples() {
        assert_eq!(m_prime(3, 0), 0);
        assert_eq!(m_full(3, 0), 1);
        assert_eq!(m_full(1, 2), m_prime(1, 2) + 1);
        assert_eq!(m_full(1, -2), m_prime(1, -2) + 1);
        assert_eq!(m_prime(20, 1), 1);
        assert_eq!(m_full(7, 4), 1);
        assert_eq!(m_full(7, -4), 1);
        assert_eq!(m_full(7, 5), 0);
    }

    #[test]
    fn witness_examples() {
        let w = witnesses(3, 0).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].family, Family::Unknot);
        assert_eq!(w[0].words[0].to_string(), "1 -2");
        let w = witnesses(1, 2).unwrap();
        assert_eq!(w[0].words[0].to_string(), "1 2");
        assert!(w[0].is_consistent().unwrap());
        let w = witnesses(20, 1).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].family, Family::FamilyIII { u: 1, v: 2, w: 3, k: 0 });
        assert_eq!(w[0].words.len(), 2);
        assert!(w[0].is_consistent().unwrap());
    }

    #[test]
    fn witnesses_are_consistent_over_a_range() {
        for t in -60..=60 {
            for n in -20..=30 {
                let ws = witnesses(t, n).unwrap();
                assert_eq!(ws.len() as u64, m_full(t, n));
                for w in ws {
                    assert!(w.is_consistent().unwrap(), "{t} {n} {w:?}");
                }
            }
        }
    }

    #[test]
    fn report_json_layout() {
        let json = serde_json::to_value(m_report(20, 1).unwrap()).unwrap();
        assert_eq!(json["m_prime"], 1);
        assert_eq!(json["m"], 1);
        assert_eq!(json["witnesses"][0]["family"], "iii");
        assert_eq!(json["witnesses"][0]["params"]["v"], 2);
        assert_eq!(json["witnesses"][0]["words"][1], "-1 2 2 2 -1 -1 2");
        let json = serde_json::to_value(m_report(3, 0).unwrap()).unwrap();
        assert_eq!(json["witnesses"][0]["params"], serde_json::Value::Null);
    }
}
