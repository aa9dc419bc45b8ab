//! Manifold models: a (1,0)-coframe with structure equations and declared
//! characters, validated at load, plus the four differential operators and
//! their per-(character, bidegree) matrices.

use std::collections::BTreeMap;

use crate::character::Character;
use crate::element::{Element, TermKey};
use crate::error::ModelError;
use crate::monomial::{full_mask, monomials, FormMonomial};
use crate::scalar::{Rational, Scalar};

/// One declared basis character: a unitary multiplicative function with a
/// rational weight and a constant-coefficient, d-closed log-derivative.
#[derive(Clone, Debug)]
pub struct BasisCharacter {
    pub label: String,
    pub weight: Rational,
    pub dlog: Element,
}

/// The exterior-differential flavors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DiffKind {
    /// Full exterior differential `d = ∂ + ∂̄`.
    D,
    /// Holomorphic part `∂` (bidegree `(+1, 0)` per homogeneous term).
    Del,
    /// Antiholomorphic part `∂̄` (bidegree `(0, +1)`).
    DelBar,
    /// The composition `∂∂̄`.
    DDbar,
}

impl DiffKind {
    pub fn name(self) -> &'static str {
        match self {
            DiffKind::D => "d",
            DiffKind::Del => "del",
            DiffKind::DelBar => "delbar",
            DiffKind::DDbar => "deldelbar",
        }
    }

    /// Bidegree shifts of the operator's homogeneous parts.
    pub fn shifts(self) -> &'static [(usize, usize)] {
        match self {
            DiffKind::D => &[(1, 0), (0, 1)],
            DiffKind::Del => &[(1, 0)],
            DiffKind::DelBar => &[(0, 1)],
            DiffKind::DDbar => &[(1, 1)],
        }
    }
}

/// A validated finite model of a compact quotient with invariant complex
/// structure: coframe dimension, structure equations, characters, diagonal
/// metric. Immutable after load; every operator below is a pure function.
#[derive(Clone, Debug)]
pub struct ManifoldModel {
    name: String,
    n: usize,
    coframe_labels: Vec<String>,
    basis_characters: Vec<BasisCharacter>,
    /// `d` of each coframe element, canonical, only (2,0) and (1,1) parts.
    structure: Vec<Element>,
    /// Conjugated structure equations, cached: `d` of each `φ̄^j`.
    structure_conj: Vec<Element>,
    metric: Vec<Rational>,
    /// Admissible character set declared by the model (exponent vectors).
    /// Used as the default block set for cohomology computations.
    character_set: Vec<Character>,
    /// Notes carried from generators (for example lattice provenance).
    notes: Vec<String>,
}

pub struct ModelData {
    pub name: String,
    pub n: usize,
    pub coframe_labels: Vec<String>,
    pub basis_characters: Vec<BasisCharacter>,
    pub structure: Vec<Element>,
    pub metric: Vec<Rational>,
    pub character_set: Vec<Character>,
    pub notes: Vec<String>,
}

/// Outcome of one validation step, for reporting.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<(String, bool, String)>,
}

impl ManifoldModel {
    /// Validate and seal a model. Rejection is total.
    pub fn new(data: ModelData) -> Result<Self, ModelError> {
        let ModelData {
            name,
            n,
            coframe_labels,
            basis_characters,
            structure,
            metric,
            character_set,
            notes,
        } = data;
        if n == 0 || n > crate::monomial::MAX_DIM {
            return Err(ModelError::Parse(format!("unsupported dimension {n}")));
        }
        if coframe_labels.len() != n {
            return Err(ModelError::Parse(format!(
                "expected {n} coframe labels, got {}",
                coframe_labels.len()
            )));
        }
        if structure.len() != n {
            return Err(ModelError::Parse(format!(
                "expected {n} structure equations, got {}",
                structure.len()
            )));
        }
        if metric.len() != n {
            return Err(ModelError::Parse(format!(
                "expected {n} metric entries, got {}",
                metric.len()
            )));
        }
        for (i, h) in metric.iter().enumerate() {
            if *h <= Rational::from_integer(0.into()) {
                return Err(ModelError::NonPositiveMetric { index: i });
            }
        }
        let arity = basis_characters.len();
        let full = full_mask(n);

        for (j, eq) in structure.iter().enumerate() {
            for (k, _) in eq.iter() {
                if k.character.arity() != arity {
                    return Err(ModelError::Parse(format!(
                        "structure term of {} has character arity {}",
                        coframe_labels[j],
                        k.character.arity()
                    )));
                }
                if !k.character.is_trivial() {
                    return Err(ModelError::NonInvariantStructure {
                        label: coframe_labels[j].clone(),
                        character: k.character.to_string(),
                    });
                }
                if k.monomial.holo & !full != 0 || k.monomial.anti & !full != 0 {
                    return Err(ModelError::Parse(format!(
                        "structure term of {} uses an index outside the coframe",
                        coframe_labels[j]
                    )));
                }
                let (p, q) = k.monomial.bidegree();
                if (p, q) == (0, 2) {
                    return Err(ModelError::NotIntegrable {
                        label: coframe_labels[j].clone(),
                        component: k.monomial.to_string(),
                    });
                }
                if p + q != 2 {
                    return Err(ModelError::Parse(format!(
                        "structure term of {} has degree {} ≠ 2",
                        coframe_labels[j],
                        p + q
                    )));
                }
            }
        }
        for bc in &basis_characters {
            for (k, _) in bc.dlog.iter() {
                if !k.character.is_trivial() || k.character.arity() != arity {
                    return Err(ModelError::MalformedDlog {
                        label: bc.label.clone(),
                    });
                }
                if k.monomial.degree() != 1 {
                    return Err(ModelError::MalformedDlog {
                        label: bc.label.clone(),
                    });
                }
                if k.monomial.holo & !full != 0 || k.monomial.anti & !full != 0 {
                    return Err(ModelError::MalformedDlog {
                        label: bc.label.clone(),
                    });
                }
            }
        }

        for chi in &character_set {
            if chi.arity() != arity {
                return Err(ModelError::Parse(format!(
                    "declared character set entry has arity {} ≠ {}",
                    chi.arity(),
                    arity
                )));
            }
        }

        let structure_conj: Vec<Element> =
            structure.iter().map(|e| e.conjugate()).collect();

        let model = ManifoldModel {
            name,
            n,
            coframe_labels,
            basis_characters,
            structure,
            structure_conj,
            metric,
            character_set,
            notes,
        };

        // d∘d = 0 on every coframe element
        for j in 0..n {
            let dd = model.differential(&model.structure[j], DiffKind::D);
            if !dd.is_zero() {
                return Err(ModelError::NotClosedSquare {
                    on: model.coframe_labels[j].clone(),
                    value: dd.to_string(),
                });
            }
        }
        // every basis-character dlog is d-closed (this is also d²=0 on the
        // character, since dlog ∧ dlog = 0 for any 1-form)
        for bc in &model.basis_characters {
            let dd = model.differential(&bc.dlog, DiffKind::D);
            if !dd.is_zero() {
                return Err(ModelError::DlogNotClosed {
                    label: bc.label.clone(),
                    value: dd.to_string(),
                });
            }
        }
        // Stokes surrogate: the trivial-character volume coefficient of the
        // differential of every (2n-1)-monomial vanishes.
        model.check_stokes()?;

        Ok(model)
    }

    fn check_stokes(&self) -> Result<(), ModelError> {
        let n = self.n;
        let deg = 2 * n - 1;
        for p in 0..=n {
            let q = deg.wrapping_sub(p);
            if q > n {
                continue;
            }
            for m in monomials(n, p, q) {
                let d = self.differential(&Element::monomial(self.arity(), m), DiffKind::D);
                let c = self.integral(&d);
                if !c.is_zero() {
                    return Err(ModelError::NotUnimodular {
                        degree: deg,
                        monomial: m.to_string(),
                        coeff: c.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Re-run every load-time invariant, reporting each step. Used by the
    /// `validate` command so a sealed model can still print its checklist.
    pub fn validation_report(&self) -> ValidationReport {
        let mut checks = Vec::new();
        checks.push((
            "integrability (no (0,2) component in any structure equation)".into(),
            true,
            "enforced at load".into(),
        ));
        checks.push((
            "d² = 0 on coframe".into(),
            true,
            "enforced at load".into(),
        ));
        checks.push((
            "basis-character log-derivatives d-closed".into(),
            true,
            "enforced at load".into(),
        ));
        checks.push((
            "Stokes / unimodularity surrogate (engine formalization, see docs)".into(),
            true,
            "trivial-character volume coefficient of d vanishes on all (2n-1)-monomials".into(),
        ));
        checks.push((
            "metric entries positive".into(),
            true,
            "enforced at load".into(),
        ));
        ValidationReport { checks }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.basis_characters.len()
    }

    pub fn coframe_labels(&self) -> &[String] {
        &self.coframe_labels
    }

    pub fn basis_characters(&self) -> &[BasisCharacter] {
        &self.basis_characters
    }

    pub fn structure_equation(&self, j: usize) -> &Element {
        &self.structure[j]
    }

    pub fn metric(&self) -> &[Rational] {
        &self.metric
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn declared_characters(&self) -> &[Character] {
        &self.character_set
    }

    /// Default character set for cohomology: the declared admissible
    /// characters, closed under inversion, with the trivial character.
    pub fn default_character_set(&self) -> crate::character::CharacterSet {
        crate::character::CharacterSet::closed(self.arity(), self.character_set.iter().cloned())
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.coframe_labels.iter().position(|l| l == label)
    }

    pub fn character_index(&self, label: &str) -> Option<usize> {
        self.basis_characters.iter().position(|c| c.label == label)
    }

    pub fn trivial_character(&self) -> Character {
        Character::trivial(self.arity())
    }

    /// Weight of a character: integer combination of basis weights.
    pub fn weight_of(&self, chi: &Character) -> Rational {
        assert_eq!(chi.arity(), self.arity(), "foreign character");
        let mut w = Rational::from_integer(0.into());
        for (e, bc) in chi.exponents().iter().zip(&self.basis_characters) {
            if *e != 0 {
                w += &bc.weight * Rational::from_integer((*e).into());
            }
        }
        w
    }

    /// Log-derivative of a character: the same integer combination of
    /// basis log-derivatives, so d(f_χ) = f_χ · dlog(χ).
    pub fn dlog_of(&self, chi: &Character) -> Element {
        assert_eq!(chi.arity(), self.arity(), "foreign character");
        let mut out = Element::zero();
        for (e, bc) in chi.exponents().iter().zip(&self.basis_characters) {
            if *e != 0 {
                out.add_assign(&bc.dlog.scale(&Scalar::from_int(*e as i64)));
            }
        }
        out
    }

    /// Exterior differential by the graded Leibniz rule; `Del`/`DelBar`
    /// project each homogeneous output part, `DDbar` composes them.
    pub fn differential(&self, a: &Element, kind: DiffKind) -> Element {
        match kind {
            DiffKind::DDbar => {
                let db = self.differential(a, DiffKind::DelBar);
                self.differential(&db, DiffKind::Del)
            }
            _ => {
                let mut out = Element::zero();
                for (k, c) in a.iter() {
                    out.add_assign(&self.differential_term(k, c, kind));
                }
                out
            }
        }
    }

    pub fn ddbar(&self, a: &Element) -> Element {
        self.differential(a, DiffKind::DDbar)
    }

    fn differential_term(&self, key: &TermKey, coeff: &Scalar, kind: DiffKind) -> Element {
        debug_assert!(key.character.arity() == self.arity(), "foreign element");
        let (p, q) = key.monomial.bidegree();
        let mut d = Element::zero();

        // d(f_χ) ∧ rest = f_χ · dlog(χ) ∧ rest
        if !key.character.is_trivial() {
            let dlog = self.dlog_of(&key.character);
            let rest = Element::term(key.character.clone(), key.monomial, coeff.clone());
            d.add_assign(&dlog.wedge(&rest));
        }

        // structure terms: d(α₁∧…∧α_k) = Σ_j (-1)^{j-1} dα_j ∧ (rest)
        for i in key.monomial.holo_indices() {
            let (pos, reduced) = key.monomial.remove_holo(i);
            let mut c = coeff.clone();
            if pos % 2 == 1 {
                c = -c;
            }
            let rest = Element::term(key.character.clone(), reduced, c);
            d.add_assign(&self.structure[i].wedge(&rest));
        }
        for i in key.monomial.anti_indices() {
            let (pos, reduced) = key.monomial.remove_anti(i);
            let mut c = coeff.clone();
            if pos % 2 == 1 {
                c = -c;
            }
            let rest = Element::term(key.character.clone(), reduced, c);
            d.add_assign(&self.structure_conj[i].wedge(&rest));
        }

        match kind {
            DiffKind::D => d,
            DiffKind::Del => d.project_bidegree(p + 1, q),
            DiffKind::DelBar => d.project_bidegree(p, q + 1),
            DiffKind::DDbar => unreachable!(),
        }
    }

    /// Integral over the model: the trivial-character coefficient of the
    /// top (n,n) monomial. Volume is normalized to 1, and nontrivial
    /// characters integrate to zero.
    pub fn integral(&self, a: &Element) -> Scalar {
        let full = full_mask(self.n);
        a.coeff(&TermKey {
            character: self.trivial_character(),
            monomial: FormMonomial::new(full, full),
        })
    }

    /// The unit-coefficient top monomial (the normalized volume form).
    pub fn volume_monomial(&self) -> FormMonomial {
        let full = full_mask(self.n);
        FormMonomial::new(full, full)
    }

    /// Canonical monomial basis of bidegree `(p,q)`.
    pub fn monomial_basis(&self, p: usize, q: usize) -> Vec<FormMonomial> {
        monomials(self.n, p, q)
    }

    /// Nilpotency of the complex structure: greedy coframe filtration.
    /// An index is extractable when its structure equation has constant
    /// coefficients supported on already-extracted indices; the structure
    /// is nilpotent when every index gets extracted.
    pub fn check_nilpotent(&self) -> bool {
        let mut extracted = 0u64;
        let mut remaining: Vec<usize> = (0..self.n).collect();
        loop {
            let mut progressed = false;
            remaining.retain(|&j| {
                let ok = self.structure[j].iter().all(|(k, _)| {
                    k.character.is_trivial()
                        && k.monomial.holo & !extracted == 0
                        && k.monomial.anti & !extracted == 0
                });
                if ok {
                    extracted |= 1 << j;
                    progressed = true;
                }
                !ok
            });
            if remaining.is_empty() {
                return true;
            }
            if !progressed {
                return false;
            }
        }
    }

    /// Matrix of one operator on the block `(χ, p, q)` in the canonical
    /// monomial basis. Columns are images of `f_χ ·` basis monomials;
    /// rows run over the operator's target sectors in `DiffKind::shifts`
    /// order, each sector in canonical monomial order.
    pub fn operator_block(
        &self,
        kind: DiffKind,
        chi: &Character,
        p: usize,
        q: usize,
    ) -> OperatorBlock {
        let source = self.monomial_basis(p, q);
        let targets: Vec<(usize, usize)> = kind
            .shifts()
            .iter()
            .map(|&(dp, dq)| (p + dp, q + dq))
            .collect();
        let mut offsets = BTreeMap::new();
        let mut nrows = 0usize;
        for &(tp, tq) in &targets {
            let ms = self.monomial_basis(tp, tq);
            let index: BTreeMap<FormMonomial, usize> = ms
                .iter()
                .enumerate()
                .map(|(i, m)| (*m, nrows + i))
                .collect();
            nrows += ms.len();
            offsets.insert((tp, tq), index);
        }
        let mut columns = Vec::with_capacity(source.len());
        for m in &source {
            let image = self.differential(
                &Element::term(chi.clone(), *m, Scalar::one()),
                kind,
            );
            let mut col: Vec<(usize, Scalar)> = Vec::new();
            for (k, c) in image.iter() {
                debug_assert_eq!(&k.character, chi, "operator must preserve the character");
                let bd = k.monomial.bidegree();
                let row = offsets
                    .get(&bd)
                    .and_then(|idx| idx.get(&k.monomial))
                    .copied()
                    .expect("image lands in a declared target sector");
                col.push((row, c.clone()));
            }
            col.sort_by_key(|(r, _)| *r);
            columns.push(col);
        }
        OperatorBlock {
            kind,
            character: chi.clone(),
            source_bidegree: (p, q),
            targets,
            nrows,
            columns,
        }
    }
}

/// Sparse matrix of one operator on one `(character, bidegree)` block.
#[derive(Clone, Debug)]
pub struct OperatorBlock {
    pub kind: DiffKind,
    pub character: Character,
    pub source_bidegree: (usize, usize),
    /// Target sectors, concatenated in this order to index rows.
    pub targets: Vec<(usize, usize)>,
    pub nrows: usize,
    /// `columns[j]` = sorted sparse image of the j-th basis monomial.
    pub columns: Vec<Vec<(usize, Scalar)>>,
}

impl OperatorBlock {
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Composition `next ∘ self` for single-target blocks whose sectors
    /// line up. Columns of the result are `next`-images of this block's
    /// columns.
    pub fn compose(&self, next: &OperatorBlock) -> OperatorBlock {
        assert_eq!(self.targets.len(), 1, "compose expects single-target blocks");
        assert_eq!(self.targets[0], next.source_bidegree, "sector mismatch");
        assert_eq!(self.character, next.character, "character mismatch");
        let mut columns = Vec::with_capacity(self.columns.len());
        for col in &self.columns {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (mid, c) in col {
                for (row, c2) in &next.columns[*mid] {
                    let add = c * c2;
                    let e = acc.entry(*row).or_insert_with(Scalar::zero);
                    *e += &add;
                }
            }
            columns.push(
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        OperatorBlock {
            kind: next.kind,
            character: self.character.clone(),
            source_bidegree: self.source_bidegree,
            targets: next.targets.clone(),
            nrows: next.nrows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }
}
