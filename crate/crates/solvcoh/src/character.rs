//! Multiplicative characters as integer exponent vectors.
//!
//! A model declares finitely many basis characters (multiplicatively
//! independent unitary functions on the group, each with a rational weight
//! and a closed log-derivative 1-form). A `Character` is an integer
//! exponent vector over that basis; products add exponents, conjugation
//! negates them. Identity of characters is identity of exponent vectors,
//! which is why the basis must be independent: a nontrivial exponent
//! vector always names a function that integrates to zero.

use std::fmt;

/// Exponent vector over a model's basis characters. The trivial character
/// is the all-zero vector (of the model's arity).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Character {
    exps: Vec<i32>,
}

impl Character {
    pub fn trivial(arity: usize) -> Self {
        Character {
            exps: vec![0; arity],
        }
    }

    pub fn from_exponents(exps: Vec<i32>) -> Self {
        Character { exps }
    }

    /// Exponent 1 on basis character `index`, 0 elsewhere.
    pub fn basis(arity: usize, index: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Character { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of characters: exponent vectors add.
    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "character arity mismatch: {} vs {}",
            self.exps.len(),
            other.exps.len()
        );
        Character {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Inverse character: exponents negate. Characters are unitary, so
    /// this is also the complex conjugate.
    pub fn inverse(&self) -> Character {
        Character {
            exps: self.exps.iter().map(|&e| -e).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Character {
        Character {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "#{i}")?;
            } else {
                write!(f, "#{i}{{{e}}}")?;
            }
        }
        Ok(())
    }
}

/// A finite set of characters, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CharacterSet {
    chars: Vec<Character>,
}

impl CharacterSet {
    /// The set containing only the trivial character.
    pub fn trivial(arity: usize) -> Self {
        CharacterSet {
            chars: vec![Character::trivial(arity)],
        }
    }

    /// Build from an iterator, closing under inversion and inserting the
    /// trivial character of the given arity.
    pub fn closed(arity: usize, iter: impl IntoIterator<Item = Character>) -> Self {
        let mut chars: Vec<Character> = vec![Character::trivial(arity)];
        for c in iter {
            assert_eq!(c.arity(), arity, "character arity mismatch in set");
            chars.push(c.inverse());
            chars.push(c);
        }
        chars.sort();
        chars.dedup();
        CharacterSet { chars }
    }

    pub fn contains(&self, c: &Character) -> bool {
        self.chars.binary_search(c).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Character> {
        self.chars.iter()
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Union with further characters, preserving closure under inversion.
    pub fn extend(&self, iter: impl IntoIterator<Item = Character>) -> Self {
        let arity = self.chars[0].arity();
        CharacterSet::closed(arity, self.chars.iter().cloned().chain(iter))
    }

    /// Largest absolute exponent appearing in the set.
    pub fn max_exponent(&self) -> i32 {
        self.chars
            .iter()
            .flat_map(|c| c.exponents().iter().map(|e| e.abs()))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_adds_and_inverse_negates() {
        let a = Character::from_exponents(vec![2, -1]);
        let b = Character::from_exponents(vec![0, 3]);
        assert_eq!(a.mul(&b), Character::from_exponents(vec![2, 2]));
        assert_eq!(a.inverse(), Character::from_exponents(vec![-2, 1]));
        assert!(a.mul(&a.inverse()).is_trivial());
    }

    #[test]
    fn trivial_is_all_zero() {
        let t = Character::trivial(3);
        assert!(t.is_trivial());
        assert_eq!(t.arity(), 3);
    }

    #[test]
    fn set_closure_contains_inverses_and_trivial() {
        let s = CharacterSet::closed(1, vec![Character::from_exponents(vec![2])]);
        assert!(s.contains(&Character::trivial(1)));
        assert!(s.contains(&Character::from_exponents(vec![-2])));
        assert_eq!(s.len(), 3);
    }
}
