//! General invariant forms: finite sums of scalar × character × monomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::character::Character;
use crate::error::AlgebraError;
use crate::monomial::FormMonomial;
use crate::scalar::Scalar;

/// Key of one term: the character first, so the canonical term order is
/// (character exponent vector, monomial) — the pivot order used by all
/// elimination code.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TermKey {
    pub character: Character,
    pub monomial: FormMonomial,
}

/// A finite sum of terms with exact Gaussian-rational coefficients.
/// Canonical form: no zero coefficients, keys unique and sorted.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Element {
    terms: BTreeMap<TermKey, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    /// The constant function 1 (trivial character, empty monomial).
    pub fn one(arity: usize) -> Self {
        Element::term(
            Character::trivial(arity),
            FormMonomial::ONE,
            Scalar::one(),
        )
    }

    pub fn term(character: Character, monomial: FormMonomial, coeff: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(character, monomial, coeff);
        e
    }

    pub fn monomial(arity: usize, monomial: FormMonomial) -> Self {
        Element::term(Character::trivial(arity), monomial, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, character: Character, monomial: FormMonomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = TermKey {
            character,
            monomial,
        };
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Element) {
        for (k, c) in &other.terms {
            self.add_term(k.character.clone(), k.monomial, c.clone());
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), s * c)).collect(),
        }
    }

    /// Character arity of the element's terms, when it has any.
    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.character.arity())
    }

    fn check_arity(&self, other: &Element) -> Result<(), AlgebraError> {
        if let (Some(a), Some(b)) = (self.arity(), other.arity()) {
            if a != b {
                return Err(AlgebraError::ArityMismatch { left: a, right: b });
            }
        }
        Ok(())
    }

    /// Wedge product. Bilinear; characters multiply; signs come from
    /// monomial reordering. Errors when the operands belong to models with
    /// different character arities.
    pub fn checked_wedge(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_arity(other)?;
        let mut out = Element::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if let Some((sign, mono)) = ka.monomial.wedge(&kb.monomial) {
                    let mut coeff = ca * cb;
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add_term(ka.character.mul(&kb.character), mono, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Like [`Element::checked_wedge`] but panics on arity mismatch; the
    /// internal call sites always combine elements over one model.
    pub fn wedge(&self, other: &Element) -> Element {
        self.checked_wedge(other)
            .expect("wedge of elements over different models")
    }

    /// Complex conjugation: antilinear, swaps holo and anti index sets with
    /// the reordering sign, inverts characters.
    pub fn conjugate(&self) -> Element {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            let (sign, mono) = k.monomial.conjugate();
            let mut coeff = c.conj();
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(k.character.inverse(), mono, coeff);
        }
        out
    }

    /// Terms of bidegree exactly `(p, q)`.
    pub fn project_bidegree(&self, p: usize, q: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.monomial.bidegree() == (p, q))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sorted list of bidegrees occurring in the element.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.terms.keys().map(|k| k.monomial.bidegree()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The single bidegree of a homogeneous element, `None` otherwise
    /// (the zero element counts as homogeneous of no bidegree).
    pub fn homogeneous_bidegree(&self) -> Option<(usize, usize)> {
        let ds = self.bidegrees();
        match ds.len() {
            1 => Some(ds[0]),
            _ => None,
        }
    }

    /// Sorted list of characters occurring in the element.
    pub fn characters(&self) -> Vec<Character> {
        let mut out: Vec<_> = self.terms.keys().map(|k| k.character.clone()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Terms with the given character.
    pub fn project_character(&self, chi: &Character) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| &k.character == chi)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when all terms carry the same character.
    pub fn is_character_homogeneous(&self) -> bool {
        self.characters().len() <= 1
    }

    /// Normalize so the first (lex-least) term has coefficient 1.
    pub fn normalized(&self) -> Element {
        match self.terms.iter().next() {
            None => Element::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if !k.character.is_trivial() {
                write!(f, "·{}", k.character)?;
            }
            if k.monomial != FormMonomial::ONE {
                write!(f, "·{}", k.monomial)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::FormMonomial as M;

    fn mono(h: &[usize], a: &[usize]) -> Element {
        Element::monomial(0, M::from_indices(h, a))
    }

    #[test]
    fn wedge_is_graded_anticommutative() {
        let a = mono(&[0], &[]);
        let b = mono(&[], &[0]);
        assert_eq!(a.wedge(&b), b.wedge(&a).neg());
        // two even-degree factors commute
        let c = mono(&[0], &[1]);
        let d = mono(&[2], &[3]);
        assert_eq!(c.wedge(&d), d.wedge(&c));
    }

    #[test]
    fn characters_multiply_under_wedge() {
        let f = Character::from_exponents(vec![1]);
        let a = Element::term(f.clone(), M::from_indices(&[0], &[]), Scalar::one());
        let b = Element::term(f.clone(), M::from_indices(&[], &[1]), Scalar::one());
        let w = a.wedge(&b);
        assert_eq!(w.characters(), vec![f.mul(&f)]);
    }

    #[test]
    fn conjugation_is_involutive() {
        let mut x = Element::zero();
        x.add_term(
            Character::from_exponents(vec![1, -2]),
            M::from_indices(&[0, 2], &[1]),
            Scalar::new(crate::scalar::ratio(1, 2), crate::scalar::ratio(-3, 1)),
        );
        x.add_term(
            Character::trivial(2),
            M::from_indices(&[1], &[]),
            Scalar::i(),
        );
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn conjugate_of_decomposable() {
        // conj(e0 ∧ ebar1) = -(e1 ∧ ebar0)
        let x = mono(&[0], &[1]);
        assert_eq!(x.conjugate(), mono(&[1], &[0]).neg());
    }

    #[test]
    fn projections_sum_to_identity() {
        let mut x = mono(&[0], &[]);
        x.add_assign(&mono(&[], &[0]));
        x.add_assign(&mono(&[0, 1], &[1]));
        let mut sum = Element::zero();
        for (p, q) in x.bidegrees() {
            sum.add_assign(&x.project_bidegree(p, q));
        }
        assert_eq!(sum, x);
        assert_eq!(x.project_bidegree(1, 0), mono(&[0], &[]));
        assert!(x.project_bidegree(2, 0).is_zero());
    }

    #[test]
    fn arity_mismatch_is_detected() {
        let a = Element::term(
            Character::trivial(1),
            M::from_indices(&[0], &[]),
            Scalar::one(),
        );
        let b = Element::term(
            Character::trivial(2),
            M::from_indices(&[1], &[]),
            Scalar::one(),
        );
        assert!(a.checked_wedge(&b).is_err());
    }
}
