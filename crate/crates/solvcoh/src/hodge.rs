//! Hodge theory for the diagonal metric: the C-antilinear star operator,
//! the L² pairing with the character-integration rule, harmonicity
//! predicates, harmonic bases, and the wedge-closure (formality) check.
//!
//! The star is defined by the pairing contract
//! `wedge(α, ∗β) = ⟨α, β⟩ · Ω` on monomials; all its signs are derived
//! from that contract, never assumed.

use crate::character::CharacterSet;
use crate::cohomology::BlockIndex;
use crate::element::Element;
use crate::error::HodgeError;
use crate::linalg::{kernel_basis, SVec};
use crate::model::{DiffKind, ManifoldModel};
use crate::monomial::FormMonomial;
use crate::scalar::{Rational, Scalar};

/// Which harmonicity predicate to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HarmonicKind {
    /// `∂α = 0`, `∂̄α = 0`, `∂∂̄∗α = 0`.
    BottChern,
    /// `∂∂̄α = 0`, `∂∗α = 0`, `∂̄∗α = 0`.
    Aeppli,
}

impl HarmonicKind {
    pub fn name(self) -> &'static str {
        match self {
            HarmonicKind::BottChern => "bott-chern",
            HarmonicKind::Aeppli => "aeppli",
        }
    }
}

/// Metric context: a model with its diagonal metric, monomial norms and
/// normalized volume (the unit-coefficient top monomial integrates to 1).
pub struct MetricContext<'a> {
    model: &'a ManifoldModel,
}

impl<'a> MetricContext<'a> {
    pub fn new(model: &'a ManifoldModel) -> Self {
        MetricContext { model }
    }

    pub fn model(&self) -> &ManifoldModel {
        self.model
    }

    /// Squared norm of a basis monomial: the product of the metric entries
    /// over its indices.
    pub fn monomial_norm(&self, m: &FormMonomial) -> Rational {
        let metric = self.model.metric();
        let mut norm = Rational::from_integer(1.into());
        for i in m.holo_indices() {
            norm *= &metric[i];
        }
        for i in m.anti_indices() {
            norm *= &metric[i];
        }
        norm
    }

    /// The normalized volume form Ω as an element.
    pub fn volume(&self) -> Element {
        Element::monomial(self.model.arity(), self.model.volume_monomial())
    }

    /// C-antilinear Hodge star. On a term `c · f_χ · M` it yields
    /// `conj(c) · f_χ⁻¹ · ⟨M,M⟩ · σ_M · M^c` where `σ_M` is the sign with
    /// `M ∧ M^c = σ_M · Ω`; this is the unique antilinear operator with
    /// `wedge(α, ∗β) = ⟨α,β⟩ Ω` for all monomials α, β.
    pub fn hodge_star(&self, a: &Element) -> Element {
        let n = self.model.dim();
        let mut out = Element::zero();
        for (k, c) in a.iter() {
            let comp = k.monomial.complement(n);
            let (sign, top) = k
                .monomial
                .wedge(&comp)
                .expect("complement is disjoint by construction");
            debug_assert_eq!(top, self.model.volume_monomial());
            let mut coeff = c.conj();
            coeff *= &Scalar::from_rational(self.monomial_norm(&k.monomial));
            if sign < 0 {
                coeff = -coeff;
            }
            out.add_term(k.character.inverse(), comp, coeff);
        }
        out
    }

    /// Model L² inner product: sesquilinear (antilinear in the second
    /// argument); monomials are orthogonal unless identical; terms with
    /// distinct characters are orthogonal because their ratio is a
    /// nontrivial character, which integrates to zero.
    pub fn inner_product(&self, a: &Element, b: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, ca) in a.iter() {
            let cb = b.coeff(k);
            if cb.is_zero() {
                continue;
            }
            let mut v = ca * &cb.conj();
            v *= &Scalar::from_rational(self.monomial_norm(&k.monomial));
            acc += &v;
        }
        acc
    }

    /// Evaluate the first-order harmonicity conditions on a
    /// bidegree-homogeneous form.
    pub fn is_harmonic(&self, a: &Element, kind: HarmonicKind) -> Result<bool, HodgeError> {
        if a.is_zero() {
            return Ok(true);
        }
        if a.homogeneous_bidegree().is_none() {
            return Err(HodgeError::NotHomogeneous(a.bidegrees()));
        }
        let m = self.model;
        Ok(match kind {
            HarmonicKind::BottChern => {
                m.differential(a, DiffKind::Del).is_zero()
                    && m.differential(a, DiffKind::DelBar).is_zero()
                    && m.ddbar(&self.hodge_star(a)).is_zero()
            }
            HarmonicKind::Aeppli => {
                m.ddbar(a).is_zero()
                    && m.differential(&self.hodge_star(a), DiffKind::Del).is_zero()
                    && m.differential(&self.hodge_star(a), DiffKind::DelBar).is_zero()
            }
        })
    }

    /// Canonical basis of the solution space of the three harmonicity
    /// conditions on each `(χ, p, q)` block over `S`.
    ///
    /// The star-side conditions are antilinear in the form, so their
    /// coefficient matrices enter conjugated.
    pub fn harmonic_basis(
        &self,
        kind: HarmonicKind,
        p: usize,
        q: usize,
            s: &CharacterSet,
    ) -> Vec<Element> {
        let m = self.model;
        if p > m.dim() || q > m.dim() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for chi in s.iter() {
            let index = BlockIndex::new(m, chi, p, q);
            let basis = m.monomial_basis(p, q);
            let mut equations: Vec<SVec> = Vec::new();

            let linear_rows = |op: DiffKind| {
                let block = m.operator_block(op, chi, p, q);
                crate::linalg::columns_to_rows(block.nrows, &block.columns)
            };
            let star_rows = |op: DiffKind| -> Vec<SVec> {
                // condition op(∗α) = 0: coordinates of op(∗(f_χ M_j)),
                // conjugated to make the condition linear in α
                let mut cols: Vec<Vec<(usize, Scalar)>> = Vec::new();
                let mut keyspace: std::collections::BTreeMap<crate::element::TermKey, usize> =
                    std::collections::BTreeMap::new();
                for mono in &basis {
                    let star = self.hodge_star(&Element::term(
                        chi.clone(),
                        *mono,
                        Scalar::one(),
                    ));
                    let image = m.differential(&star, op);
                    let mut col = Vec::new();
                    for (k, c) in image.iter() {
                        let next = keyspace.len();
                        let row = *keyspace.entry(k.clone()).or_insert(next);
                        col.push((row, c.conj()));
                    }
                    cols.push(col);
                }
                let nrows = keyspace.len();
                crate::linalg::columns_to_rows(
                    nrows,
                    &cols.into_iter().map(|mut c| {
                        c.sort_by_key(|(r, _)| *r);
                        c
                    }).collect::<Vec<_>>(),
                )
            };

            match kind {
                HarmonicKind::BottChern => {
                    equations.extend(linear_rows(DiffKind::Del));
                    equations.extend(linear_rows(DiffKind::DelBar));
                    equations.extend(star_rows(DiffKind::DDbar));
                }
                HarmonicKind::Aeppli => {
                    equations.extend(linear_rows(DiffKind::DDbar));
                    equations.extend(star_rows(DiffKind::Del));
                    equations.extend(star_rows(DiffKind::DelBar));
                }
            }

            for v in kernel_basis(index.len(), equations) {
                out.push(index.to_element(&v));
            }
        }
        out
    }

    /// Wedge-closure check: compute the first-order harmonic bases of the
    /// given kind at every bidegree over `S`, wedge all ordered pairs
    /// (characters extend under products automatically), and test each
    /// nonzero product for harmonicity. Reports the first failing pair.
    pub fn formality_check(&self, kind: HarmonicKind, s: &CharacterSet) -> FormalityReport {
        let n = self.model.dim();
        let mut bases: Vec<((usize, usize), Vec<Element>)> = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                let b = self.harmonic_basis(kind, p, q, s);
                if !b.is_empty() {
                    bases.push(((p, q), b));
                }
            }
        }
        let mut pairs_checked = 0usize;
        for (d1, b1) in &bases {
            for (d2, b2) in &bases {
                if d1.0 + d2.0 > n || d1.1 + d2.1 > n {
                    continue;
                }
                for x in b1 {
                    for y in b2 {
                        pairs_checked += 1;
                        let w = x.wedge(y);
                        if w.is_zero() {
                            continue;
                        }
                        let ok = self
                            .is_harmonic(&w, kind)
                            .expect("products of homogeneous forms are homogeneous");
                        if !ok {
                            return FormalityReport {
                                kind,
                                pass: false,
                                pairs_checked,
                                failing: Some(Box::new(FailingPair {
                                    left: x.clone(),
                                    right: y.clone(),
                                    product: w,
                                })),
                            };
                        }
                    }
                }
            }
        }
        FormalityReport {
            kind,
            pass: true,
            pairs_checked,
            failing: None,
        }
    }

    /// Shorthand for the geometric formality check on Bott-Chern harmonics.
    pub fn bc_formality_check(&self, s: &CharacterSet) -> FormalityReport {
        self.formality_check(HarmonicKind::BottChern, s)
    }
}

#[derive(Clone, Debug)]
pub struct FailingPair {
    pub left: Element,
    pub right: Element,
    pub product: Element,
}

/// Outcome of the wedge-closure check on harmonic forms.
#[derive(Clone, Debug)]
pub struct FormalityReport {
    pub kind: HarmonicKind,
    pub pass: bool,
    pub pairs_checked: usize,
    pub failing: Option<Box<FailingPair>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::Character;
    use crate::families;

    #[test]
    fn star_at_extreme_bidegrees() {
        let m = families::torus(2).unwrap();
        let ctx = MetricContext::new(&m);
        let one = Element::one(0);
        assert_eq!(ctx.hodge_star(&one), ctx.volume());
        assert_eq!(ctx.hodge_star(&ctx.volume()), one);
    }

    #[test]
    fn pairing_contract_on_monomials() {
        let m = families::bigalke_rollenske(2).unwrap();
        let ctx = MetricContext::new(&m);
        for p in 0..=2usize {
            for q in 0..=2usize {
                for mono in m.monomial_basis(p, q) {
                    let alpha = Element::monomial(0, mono);
                    let w = alpha.wedge(&ctx.hodge_star(&alpha));
                    let ip = ctx.inner_product(&alpha, &alpha);
                    assert_eq!(w, ctx.volume().scale(&ip));
                    assert!(!ip.is_zero());
                }
            }
        }
    }

    #[test]
    fn star_star_sign_is_total_degree_parity() {
        // regression lock: on every monomial, ∗∗ = (-1)^{p+q} (unit metric)
        let m = families::bigalke_rollenske(2).unwrap();
        let ctx = MetricContext::new(&m);
        for p in 0..=6usize {
            for q in 0..=6usize {
                for mono in m.monomial_basis(p, q) {
                    let alpha = Element::monomial(0, mono);
                    let ss = ctx.hodge_star(&ctx.hodge_star(&alpha));
                    let expect = if (p + q) % 2 == 0 {
                        alpha.clone()
                    } else {
                        alpha.neg()
                    };
                    assert_eq!(ss, expect);
                }
            }
        }
    }

    #[test]
    fn characters_are_orthogonal() {
        let out = families::nakamura(&families::NakamuraParams {
            lambdas: vec![crate::scalar::ratio(1, 1), crate::scalar::ratio(-1, 1)],
            t: crate::scalar::ratio(1, 1),
        })
        .unwrap();
        let m = &out.model;
        let ctx = MetricContext::new(m);
        let f = Character::from_exponents(vec![1]);
        let mono = FormMonomial::from_indices(&[1], &[2]);
        let a = Element::term(f.clone(), mono, Scalar::one());
        let b = Element::monomial(1, mono);
        // ⟨f·M, M⟩ = 0 for the nontrivial character
        assert!(ctx.inner_product(&a, &b).is_zero());
        // ⟨f·M, f·M⟩ = ⟨M, M⟩: unitary characters
        assert_eq!(ctx.inner_product(&a, &a), ctx.inner_product(&b, &b));
    }

    #[test]
    fn torus_harmonic_bases_are_all_monomials() {
        let m = families::torus(2).unwrap();
        let ctx = MetricContext::new(&m);
        let s = CharacterSet::trivial(0);
        for p in 0..=2usize {
            for q in 0..=2usize {
                let b = ctx.harmonic_basis(HarmonicKind::BottChern, p, q, &s);
                assert_eq!(b.len(), m.monomial_basis(p, q).len());
            }
        }
        assert!(ctx.bc_formality_check(&s).pass);
    }

    #[test]
    fn non_homogeneous_input_is_rejected() {
        let m = families::torus(2).unwrap();
        let ctx = MetricContext::new(&m);
        let mut x = Element::monomial(0, FormMonomial::from_indices(&[0], &[]));
        x.add_assign(&Element::monomial(0, FormMonomial::from_indices(&[], &[0])));
        assert!(ctx.is_harmonic(&x, HarmonicKind::BottChern).is_err());
    }
}
