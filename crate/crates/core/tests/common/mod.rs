//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use bqf_braid::braid3::{BraidWord, Letter};
use bqf_braid::sl2z::Mat2Z;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Every `SL₂(ℤ)` matrix with all entries in `[-bound, bound]` and trace `t`,
/// or any trace when `t` is `None`.
pub fn box_matrices(bound: i64, t: Option<i64>) -> Vec<Mat2Z> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for d in -bound..=bound {
            if t.is_some_and(|t| a + d != t) {
                continue;
            }
            let bc = a * d - 1;
            for b in -bound..=bound {
                if b == 0 {
                    if bc == 0 {
                        for c in -bound..=bound {
                            out.push(Mat2Z::new(a, 0, c, d).unwrap());
                        }
                    }
                } else if bc % b == 0 && (bc / b).abs() <= bound {
                    out.push(Mat2Z::new(a, b, bc / b, d).unwrap());
                }
            }
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Conjugacy classes of trace-`t` matrices found by joining every pair
/// `M, P M P⁻¹` inside the entry box, over all conjugators `P` in a smaller
/// box. Returns one sorted list of members per class.
pub fn brute_conjugacy_classes(t: i64, entry_bound: i64, conj_bound: i64) -> Vec<Vec<Mat2Z>> {
    let members = box_matrices(entry_bound, Some(t));
    let index: std::collections::HashMap<Mat2Z, usize> =
        members.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let conjugators = box_matrices(conj_bound, None);
    let mut uf = UnionFind((0..members.len()).collect());
    for (i, m) in members.iter().enumerate() {
        for p in &conjugators {
            let c = m.conjugate_by(p).unwrap();
            if let Some(&j) = index.get(&c) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Mat2Z>> = Default::default();
    for (i, m) in members.iter().enumerate() {
        let r = uf.find(i);
        groups.entry(r).or_default().push(*m);
    }
    let mut out: Vec<Vec<Mat2Z>> = groups.into_values().collect();
    for g in &mut out {
        g.sort_by_key(|m| m.rows());
    }
    out
}

/// Every word of length exactly `len` over the four letters.
pub fn words_of_length(len: usize) -> impl Iterator<Item = BraidWord> {
    (0..4usize.pow(len as u32)).map(move |mut code| {
        let mut w = BraidWord::identity();
        for _ in 0..len {
            w.push(Letter::ALL[code % 4]);
            code /= 4;
        }
        w
    })
}

pub fn words_up_to(len: usize) -> impl Iterator<Item = BraidWord> {
    (0..=len).flat_map(words_of_length)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| Letter::ALL[rng.random_range(0..4)]).collect()
}

/// A random product of powers of `S` and `T`.
pub fn random_sl2(rng: &mut StdRng, syllables: usize, max_power: i64) -> Mat2Z {
    let mut m = Mat2Z::IDENTITY;
    for i in 0..syllables {
        let k = rng.random_range(-max_power..=max_power);
        let g = if i % 2 == 0 { Mat2Z::s_pow(k) } else { Mat2Z::t_pow(k) };
        m = m.try_mul(&g).unwrap();
    }
    m
}
