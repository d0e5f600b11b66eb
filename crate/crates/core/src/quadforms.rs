//! Integral binary quadratic forms `ax² + bxy + cy²`: the `SL₂(ℤ)` substitution
//! action, reduction to a canonical class key, enumeration of the classes of
//! discriminant `t² - 4`, and the correspondence with trace-`t` conjugacy
//! classes in `SL₂(ℤ)`.
//!
//! Definite forms are reduced by Gauss's algorithm and keyed by their unique
//! reduced representative, keeping the sign of `a`. Indefinite forms are
//! pushed onto their cycle of reduced forms by the step
//!
//! ```text
//! ρ(a, b, c) = (c, r, (r² - D) / 4c),   r ≡ -b (mod 2c)
//! ```
//!
//! where `r` is normalised to `-|c| < r ≤ |c|` when `|c| > √D` and to
//! `√D - 2|c| < r < √D` otherwise. The class key is the lexicographically
//! smallest triple in the cycle.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sl2z::Mat2Z;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn discriminant(&self) -> Result<i64> {
        let d = i128::from(self.b).pow(2) - 4 * i128::from(self.a) * i128::from(self.c);
        i64::try_from(d).map_err(|_| Error::Overflow("discriminant"))
    }

    /// Value of the form at `(x, y)`.
    pub fn eval(&self, x: i64, y: i64) -> Result<i64> {
        let (x, y) = (i128::from(x), i128::from(y));
        let v = i128::from(self.a) * x * x + i128::from(self.b) * x * y + i128::from(self.c) * y * y;
        i64::try_from(v).map_err(|_| Error::Overflow("form value"))
    }

    pub fn try_neg(&self) -> Result<Self> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("form negation"));
        Ok(Self::new(neg(self.a)?, neg(self.b)?, neg(self.c)?))
    }
}

impl fmt::Debug for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for QForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b, self.c].serialize(serializer)
    }
}

/// Canonical representative of a proper equivalence class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormClassKey {
    pub discriminant: i64,
    pub repr: QForm,
}

/// A class of discriminant `D` together with its reduced cycle when `D > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormClass {
    pub key: FormClassKey,
    pub cycle: Option<Vec<QForm>>,
}

impl Serialize for FormClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FormClass", 3)?;
        st.serialize_field("repr", &self.key.repr)?;
        st.serialize_field("discriminant", &self.key.discriminant)?;
        if let Some(cycle) = &self.cycle {
            st.serialize_field("cycle", cycle)?;
        } else {
            st.skip_field("cycle")?;
        }
        st.end()
    }
}

pub fn discriminant(f: &QForm) -> Result<i64> {
    f.discriminant()
}

/// `(M·f)(x, y) = f(αx + βy, γx + δy)` for `M = [[α, β], [γ, δ]]`.
///
/// This is a right action: `act(M, act(N, f)) = act(N·M, f)`.
pub fn act(m: &Mat2Z, f: &QForm) -> Result<QForm> {
    let [[al, be], [ga, de]] = m.rows().map(|r| r.map(i128::from));
    let (a, b, c) = (i128::from(f.a), i128::from(f.b), i128::from(f.c));
    let na = a * al * al + b * al * ga + c * ga * ga;
    let nb = 2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de;
    let nc = a * be * be + b * be * de + c * de * de;
    let narrow = |x: i128| i64::try_from(x).map_err(|_| Error::Overflow("form action"));
    Ok(QForm::new(narrow(na)?, narrow(nb)?, narrow(nc)?))
}

/// Floor of the square root of a nonnegative integer.
pub(crate) fn isqrt(n: i64) -> i64 {
    debug_assert!(n >= 0);
    (n as u64).isqrt() as i64
}

fn check_nonsquare(d: i64) -> Result<()> {
    if d == 0 || (d > 0 && isqrt(d).pow(2) == d) {
        return Err(Error::SquareDiscriminant(d));
    }
    Ok(())
}

fn is_reduced_definite(f: &QForm) -> bool {
    // positive definite only
    f.b.abs() <= f.a && f.a <= f.c && (f.b >= 0 || (f.b.abs() != f.a && f.a != f.c))
}

/// Gauss reduction of a positive definite form.
fn reduce_positive_definite(mut f: QForm) -> Result<QForm> {
    let err = || Error::Overflow("definite reduction");
    loop {
        // normalise -a < b <= a via x -> x + k y
        if f.b.abs() > f.a || f.b == -f.a {
            let two_a = 2 * f.a;
            let k = (f.a - f.b).div_euclid(two_a);
            // b' = b + 2ak, c' = a k² + b k + c
            let nb = f.b.checked_add(two_a.checked_mul(k).ok_or_else(err)?).ok_or_else(err)?;
            let nc = f.eval(k, 1)?;
            f = QForm::new(f.a, nb, nc);
        }
        if f.a > f.c || (f.a == f.c && f.b < 0) {
            // (x, y) -> (-y, x)
            f = QForm::new(f.c, -f.b, f.a);
            continue;
        }
        debug_assert!(is_reduced_definite(&f));
        return Ok(f);
    }
}

/// Normalises `b` against `a` as in the indefinite reduction step.
fn normalise_indefinite(b: i64, a: i64, sqrt_floor: i64) -> i64 {
    let two_a = 2 * a.abs();
    if a.abs() > sqrt_floor {
        // -|a| < r <= |a|
        let r = b.rem_euclid(two_a);
        if r > a.abs() {
            r - two_a
        } else {
            r
        }
    } else {
        // √D - 2|a| < r < √D, i.e. the largest r ≡ b with r <= floor(√D)
        sqrt_floor - (sqrt_floor - b).rem_euclid(two_a)
    }
}

fn is_reduced_indefinite(f: &QForm, sqrt_floor: i64) -> bool {
    // |√D - 2|a|| < b < √D with √D irrational
    let two_a = 2 * f.a.abs();
    f.b > 0 && f.b <= sqrt_floor && two_a + f.b > sqrt_floor && two_a - f.b <= sqrt_floor
}

fn rho(f: &QForm, d: i64, sqrt_floor: i64) -> Result<QForm> {
    let r = normalise_indefinite(-f.b, f.c, sqrt_floor);
    let num = i128::from(r) * i128::from(r) - i128::from(d);
    let den = 4 * i128::from(f.c);
    debug_assert_eq!(num % den, 0);
    let nc = i64::try_from(num / den).map_err(|_| Error::Overflow("indefinite reduction"))?;
    Ok(QForm::new(f.c, r, nc))
}

/// The cycle of reduced forms equivalent to an indefinite form, starting at
/// the first reduced form reached.
pub fn reduced_cycle(f: &QForm) -> Result<Vec<QForm>> {
    let d = f.discriminant()?;
    check_nonsquare(d)?;
    if d < 0 {
        return Err(Error::InvalidParameters(format!(
            "reduced cycles exist only for positive discriminants, got {d}"
        )));
    }
    let s = isqrt(d);
    let mut g = *f;
    while !is_reduced_indefinite(&g, s) {
        g = rho(&g, d, s)?;
    }
    let start = g;
    let mut cycle = vec![start];
    loop {
        g = rho(&g, d, s)?;
        if g == start {
            return Ok(cycle);
        }
        cycle.push(g);
    }
}

/// Canonical class key of `f`.
pub fn reduce(f: &QForm) -> Result<FormClassKey> {
    let d = f.discriminant()?;
    check_nonsquare(d)?;
    let repr = if d < 0 {
        if f.a > 0 {
            reduce_positive_definite(*f)?
        } else {
            reduce_positive_definite(f.try_neg()?)?.try_neg()?
        }
    } else {
        reduced_cycle(f)?
            .into_iter()
            .min()
            .expect("cycle is nonempty")
    };
    Ok(FormClassKey { discriminant: d, repr })
}

pub fn equivalent(f: &QForm, g: &QForm) -> Result<bool> {
    if f.discriminant()? != g.discriminant()? {
        return Ok(false);
    }
    Ok(reduce(f)? == reduce(g)?)
}

pub(crate) fn check_trace(t: i64) -> Result<()> {
    if t == 2 || t == -2 {
        return Err(Error::ExcludedTrace(t));
    }
    Ok(())
}

/// `t² - 4`, rejecting `t = ±2`.
pub fn trace_discriminant(t: i64) -> Result<i64> {
    check_trace(t)?;
    t.checked_mul(t)
        .and_then(|x| x.checked_sub(4))
        .ok_or(Error::Overflow("discriminant"))
}

/// All equivalence classes of discriminant `t² - 4`, sorted by key.
///
/// For negative discriminants both positive and negative definite classes are
/// listed.
pub fn enumerate_classes(t: i64) -> Result<Vec<FormClass>> {
    let d = trace_discriminant(t)?;
    if d < 0 {
        let mut keys = Vec::new();
        let amax = isqrt(-d / 3);
        for a in 1..=amax {
            for b in -a..=a {
                let num = b * b - d;
                if num % (4 * a) != 0 {
                    continue;
                }
                let f = QForm::new(a, b, num / (4 * a));
                if is_reduced_definite(&f) {
                    keys.push(f);
                }
            }
        }
        let mut classes: Vec<FormClass> = keys
            .into_iter()
            .flat_map(|f| [f, QForm::new(-f.a, -f.b, -f.c)])
            .map(|repr| FormClass { key: FormClassKey { discriminant: d, repr }, cycle: None })
            .collect();
        classes.sort_by_key(|c| c.key);
        Ok(classes)
    } else {
        let s = isqrt(d);
        let mut reduced = BTreeSet::new();
        for b in (1..=s).filter(|b| (b - d).rem_euclid(2) == 0) {
            let num = b * b - d;
            for a in (-s..=s).filter(|&a| a != 0) {
                if num % (4 * a) != 0 {
                    continue;
                }
                let f = QForm::new(a, b, num / (4 * a));
                if is_reduced_indefinite(&f, s) {
                    reduced.insert(f);
                }
            }
        }
        let mut classes = Vec::new();
        while let Some(&first) = reduced.iter().next() {
            let cycle = reduced_cycle(&first)?;
            for g in &cycle {
                reduced.remove(g);
            }
            let repr = *cycle.iter().min().expect("cycle is nonempty");
            classes.push(FormClass { key: FormClassKey { discriminant: d, repr }, cycle: Some(cycle) });
        }
        classes.sort_by_key(|c| c.key);
        Ok(classes)
    }
}

/// Number of equivalence classes of discriminant `t² - 4`.
pub fn class_number_h(t: i64) -> Result<u64> {
    Ok(enumerate_classes(t)?.len() as u64)
}

/// `[[a, b], [c, d]] ↦ bx² + (d - a)xy - cy²`.
pub fn ccc_form(m: &Mat2Z) -> Result<QForm> {
    check_trace(m.trace()?)?;
    let err = || Error::Overflow("form from matrix");
    Ok(QForm::new(
        m.b(),
        m.d().checked_sub(m.a()).ok_or_else(err)?,
        m.c().checked_neg().ok_or_else(err)?,
    ))
}

/// A trace-`t` matrix whose form is `f`: `[[(t - b)/2, a], [-c, (t + b)/2]]`.
pub fn ccc_matrix(f: &QForm, t: i64) -> Result<Mat2Z> {
    let expected = trace_discriminant(t)?;
    let found = f.discriminant()?;
    if found != expected {
        return Err(Error::DiscriminantMismatch { expected, found });
    }
    let err = || Error::Overflow("matrix from form");
    let a = t.checked_sub(f.b).ok_or_else(err)? / 2;
    let d = t.checked_add(f.b).ok_or_else(err)? / 2;
    Mat2Z::new(a, f.a, f.c.checked_neg().ok_or_else(err)?, d)
}
