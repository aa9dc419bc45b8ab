//! Basis monomials of the bigraded exterior algebra.
//!
//! A monomial is a wedge of distinct holomorphic coframe elements followed
//! by distinct antiholomorphic ones, both with strictly increasing indices.
//! Index sets are stored as bitmasks; all reordering signs are transposition
//! parities computed from the masks, so normal forms are unique and
//! equality is structural.

use std::fmt;

pub const MAX_DIM: usize = 64;

/// Parity of merging two disjoint ascending index sets: counts pairs
/// `(x ∈ a, y ∈ b)` with `y < x`. Returns `+1` or `-1`.
fn merge_sign(a: u64, b: u64) -> i8 {
    let mut count = 0u32;
    let mut bits = b;
    while bits != 0 {
        let y = bits.trailing_zeros();
        // elements of `a` strictly above y must jump past y
        count += (a >> (y + 1)).count_ones();
        bits &= bits - 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `φ^I ∧ φ̄^J` with `I`, `J` stored as bitmasks over coframe indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FormMonomial {
    pub holo: u64,
    pub anti: u64,
}

impl FormMonomial {
    pub const ONE: FormMonomial = FormMonomial { holo: 0, anti: 0 };

    pub fn new(holo: u64, anti: u64) -> Self {
        FormMonomial { holo, anti }
    }

    pub fn from_indices(holo: &[usize], anti: &[usize]) -> Self {
        let mut h = 0u64;
        let mut a = 0u64;
        for &i in holo {
            assert!(i < MAX_DIM && h & (1 << i) == 0, "bad holo index {i}");
            h |= 1 << i;
        }
        for &i in anti {
            assert!(i < MAX_DIM && a & (1 << i) == 0, "bad anti index {i}");
            a |= 1 << i;
        }
        FormMonomial { holo: h, anti: a }
    }

    pub fn holo_indices(&self) -> Vec<usize> {
        mask_indices(self.holo)
    }

    pub fn anti_indices(&self) -> Vec<usize> {
        mask_indices(self.anti)
    }

    /// Bidegree `(p, q)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (
            self.holo.count_ones() as usize,
            self.anti.count_ones() as usize,
        )
    }

    pub fn degree(&self) -> usize {
        (self.holo.count_ones() + self.anti.count_ones()) as usize
    }

    /// Wedge of two monomials: `None` when an index repeats, otherwise the
    /// canonical monomial together with the reordering sign.
    pub fn wedge(&self, other: &FormMonomial) -> Option<(i8, FormMonomial)> {
        if self.holo & other.holo != 0 || self.anti & other.anti != 0 {
            return None;
        }
        // word: holoA antiA holoB antiB  →  (holoA∪holoB)(antiA∪antiB)
        // holoB first jumps the |antiA| antiholomorphic factors of A.
        let block = if (self.anti.count_ones() * other.holo.count_ones()) % 2 == 0 {
            1i8
        } else {
            -1i8
        };
        let sign =
            block * merge_sign(self.holo, other.holo) * merge_sign(self.anti, other.anti);
        Some((
            sign,
            FormMonomial {
                holo: self.holo | other.holo,
                anti: self.anti | other.anti,
            },
        ))
    }

    /// Conjugate monomial: holo and anti swap with the sign `(-1)^{pq}` of
    /// the block reordering back to canonical form.
    pub fn conjugate(&self) -> (i8, FormMonomial) {
        let (p, q) = self.bidegree();
        let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
        (
            sign,
            FormMonomial {
                holo: self.anti,
                anti: self.holo,
            },
        )
    }

    /// Complementary monomial inside dimension `n`.
    pub fn complement(&self, n: usize) -> FormMonomial {
        let full = full_mask(n);
        FormMonomial {
            holo: full & !self.holo,
            anti: full & !self.anti,
        }
    }

    /// Remove one holomorphic index, returning its position among the holo
    /// factors and the reduced monomial.
    pub fn remove_holo(&self, index: usize) -> (usize, FormMonomial) {
        debug_assert!(self.holo & (1 << index) != 0);
        let pos = (self.holo & ((1u64 << index) - 1)).count_ones() as usize;
        (
            pos,
            FormMonomial {
                holo: self.holo & !(1 << index),
                anti: self.anti,
            },
        )
    }

    /// Remove one antiholomorphic index; position counts all preceding
    /// factors of the monomial (holo block included).
    pub fn remove_anti(&self, index: usize) -> (usize, FormMonomial) {
        debug_assert!(self.anti & (1 << index) != 0);
        let pos = self.holo.count_ones() as usize
            + (self.anti & ((1u64 << index) - 1)).count_ones() as usize;
        (
            pos,
            FormMonomial {
                holo: self.holo,
                anti: self.anti & !(1 << index),
            },
        )
    }
}

pub fn full_mask(n: usize) -> u64 {
    assert!(n <= MAX_DIM);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

/// All monomials of bidegree `(p, q)` in dimension `n`, in ascending
/// `(holo, anti)` mask order. This is the canonical basis enumeration used
/// for every matrix in the engine.
pub fn monomials(n: usize, p: usize, q: usize) -> Vec<FormMonomial> {
    if p > n || q > n {
        return Vec::new();
    }
    let holos = subsets_of_size(n, p);
    let antis = subsets_of_size(n, q);
    let mut out = Vec::with_capacity(holos.len() * antis.len());
    for &h in &holos {
        for &a in &antis {
            out.push(FormMonomial { holo: h, anti: a });
        }
    }
    out.sort();
    out
}

/// All `k`-element subsets of `{0..n}` as bitmasks, ascending.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack enumerates masks in increasing numeric order.
    let mut v: u64 = (1u64 << k) - 1;
    let limit = full_mask(n);
    while v <= limit {
        out.push(v);
        let c = v & v.wrapping_neg();
        let r = v + c;
        if c == 0 || r > limit {
            break;
        }
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

impl fmt::Display for FormMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holo == 0 && self.anti == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.holo_indices() {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            write!(f, "e{i}")?;
        }
        for i in self.anti_indices() {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            write!(f, "ebar{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_index_kills_wedge() {
        let a = FormMonomial::from_indices(&[0], &[]);
        assert!(a.wedge(&a).is_none());
    }

    #[test]
    fn one_forms_anticommute() {
        let a = FormMonomial::from_indices(&[0], &[]);
        let b = FormMonomial::from_indices(&[], &[0]);
        let (s1, m1) = a.wedge(&b).unwrap();
        let (s2, m2) = b.wedge(&a).unwrap();
        assert_eq!(m1, m2);
        assert_eq!(s1, -s2);
    }

    #[test]
    fn merge_sign_counts_inversions() {
        // {1} merged after {0,2}: element 2 of `a` jumps past 1 → one swap
        assert_eq!(merge_sign(0b101, 0b010), -1);
        assert_eq!(merge_sign(0b011, 0b100), 1);
    }

    #[test]
    fn conjugate_matches_definition() {
        // conj(e0 ∧ ebar1) = ebar0 ∧ e1 = -(e1 ∧ ebar0)
        let m = FormMonomial::from_indices(&[0], &[1]);
        let (s, c) = m.conjugate();
        assert_eq!(s, -1);
        assert_eq!(c, FormMonomial::from_indices(&[1], &[0]));
    }

    #[test]
    fn monomial_counts_are_binomials() {
        assert_eq!(monomials(6, 1, 1).len(), 36);
        assert_eq!(monomials(6, 2, 2).len(), 225);
        assert_eq!(monomials(4, 5, 0).len(), 0);
        assert_eq!(subsets_of_size(5, 2).len(), 10);
    }

    #[test]
    fn associativity_of_signs_on_triples() {
        let ms = monomials(4, 1, 1);
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    let left = a
                        .wedge(b)
                        .and_then(|(s, ab)| ab.wedge(c).map(|(t, abc)| (s * t, abc)));
                    let right = b
                        .wedge(c)
                        .and_then(|(s, bc)| a.wedge(&bc).map(|(t, abc)| (s * t, abc)));
                    assert_eq!(left, right);
                }
            }
        }
    }
}
