//! Dolbeault, Bott-Chern, Aeppli and de Rham cohomology of a model over a
//! finite character set, and the exact membership solver used by every
//! downstream verdict.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::character::{Character, CharacterSet};
use crate::element::{Element, TermKey};
use crate::error::CohomologyError;
use crate::linalg::{kernel_basis, quotient_basis, rank, rref, solve_in_span, SVec, SolveOutcome};
use crate::model::{DiffKind, ManifoldModel};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Theory {
    Dolbeault,
    BottChern,
    Aeppli,
    DeRham,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Dolbeault => "dolbeault",
            Theory::BottChern => "bott-chern",
            Theory::Aeppli => "aeppli",
            Theory::DeRham => "de-rham",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Degree of a cohomology space: a bidegree for the complex theories, a
/// total degree for de Rham.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    Bidegree(usize, usize),
    Total(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Bidegree(p, q) => write!(f, "({p},{q})"),
            Degree::Total(k) => write!(f, "{k}"),
        }
    }
}

/// A computed cohomology basis: canonical representatives blockwise per
/// character, with per-character dimensions.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub theory: Theory,
    pub degree: Degree,
    pub representatives: Vec<Element>,
    pub per_character: Vec<(Character, usize)>,
}

impl CohomologyBasis {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }
}

/// Translate between elements supported on one block and sparse vectors
/// over the block's canonical monomial index.
pub struct BlockIndex {
    pub character: Character,
    pub keys: Vec<TermKey>,
}

impl BlockIndex {
    pub fn new(m: &ManifoldModel, chi: &Character, p: usize, q: usize) -> Self {
        let keys = m
            .monomial_basis(p, q)
            .into_iter()
            .map(|monomial| TermKey {
                character: chi.clone(),
                monomial,
            })
            .collect();
        BlockIndex {
            character: chi.clone(),
            keys,
        }
    }

    /// All bidegrees of total degree `k`, concatenated (for de Rham).
    pub fn total(m: &ManifoldModel, chi: &Character, k: usize) -> Self {
        let mut keys = Vec::new();
        for p in 0..=k.min(m.dim()) {
            let q = k - p;
            if q > m.dim() {
                continue;
            }
            for monomial in m.monomial_basis(p, q) {
                keys.push(TermKey {
                    character: chi.clone(),
                    monomial,
                });
            }
        }
        keys.sort();
        BlockIndex {
            character: chi.clone(),
            keys,
        }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn to_svec(&self, e: &Element) -> SVec {
        let mut out = Vec::new();
        for (i, k) in self.keys.iter().enumerate() {
            let c = e.coeff(k);
            if !c.is_zero() {
                out.push((i, c));
            }
        }
        debug_assert_eq!(
            out.len(),
            e.len(),
            "element has terms outside the block index"
        );
        out
    }

    pub fn to_element(&self, v: &SVec) -> Element {
        let mut e = Element::zero();
        for (i, c) in v {
            let k = &self.keys[*i];
            e.add_term(k.character.clone(), k.monomial, c.clone());
        }
        e
    }
}

/// Rows (equations) of an operator block: transpose of its column list.
fn operator_rows(m: &ManifoldModel, kind: DiffKind, chi: &Character, p: usize, q: usize) -> Vec<SVec> {
    let block = m.operator_block(kind, chi, p, q);
    crate::linalg::columns_to_rows(block.nrows, &block.columns)
}

/// Images of all basis monomials of a source block under an operator, as
/// vectors in the target block index (single-target operators only).
fn image_vectors(
    m: &ManifoldModel,
    kind: DiffKind,
    chi: &Character,
    p: isize,
    q: isize,
) -> Vec<SVec> {
    if p < 0 || q < 0 {
        return Vec::new();
    }
    let block = m.operator_block(kind, chi, p as usize, q as usize);
    block.columns.into_iter().filter(|c| !c.is_empty()).collect()
}

fn validate_charset(s: &CharacterSet) -> Result<(), CohomologyError> {
    if s.is_empty() {
        return Err(CohomologyError::BadCharacterSet);
    }
    let arity = s.iter().next().unwrap().arity();
    if !s.contains(&Character::trivial(arity)) {
        return Err(CohomologyError::BadCharacterSet);
    }
    for c in s.iter() {
        if !s.contains(&c.inverse()) {
            return Err(CohomologyError::BadCharacterSet);
        }
    }
    Ok(())
}

/// Cocycle and boundary vectors of one theory on one block.
fn block_cocycles_boundaries(
    m: &ManifoldModel,
    theory: Theory,
    chi: &Character,
    p: usize,
    q: usize,
) -> (Vec<SVec>, Vec<SVec>) {
    let ambient = m.monomial_basis(p, q).len();
    let (pi, qi) = (p as isize, q as isize);
    match theory {
        Theory::Dolbeault => {
            let kernel = kernel_basis(ambient, operator_rows(m, DiffKind::DelBar, chi, p, q));
            let bdry = image_vectors(m, DiffKind::DelBar, chi, pi, qi - 1);
            (kernel, bdry)
        }
        Theory::BottChern => {
            // stack the ∂ and ∂̄ conditions; row index sets are independent
            // equation lists, so concatenation is enough
            let mut stacked = operator_rows(m, DiffKind::Del, chi, p, q);
            stacked.extend(operator_rows(m, DiffKind::DelBar, chi, p, q));
            let kernel = kernel_basis(ambient, stacked);
            let bdry = image_vectors(m, DiffKind::DDbar, chi, pi - 1, qi - 1);
            (kernel, bdry)
        }
        Theory::Aeppli => {
            let kernel = kernel_basis(ambient, operator_rows(m, DiffKind::DDbar, chi, p, q));
            let mut bdry = image_vectors(m, DiffKind::Del, chi, pi - 1, qi);
            bdry.extend(image_vectors(m, DiffKind::DelBar, chi, pi, qi - 1));
            (kernel, bdry)
        }
        Theory::DeRham => unreachable!("de Rham is handled by total degree"),
    }
}

/// Cohomology of one theory at bidegree `(p, q)` over the character set
/// `S` (finite, inversion-closed, containing the trivial character).
/// Representatives are canonical: echelon-reduced modulo boundaries with
/// lex-first pivoting on (character, monomial).
pub fn cohomology(
    m: &ManifoldModel,
    theory: Theory,
    s: &CharacterSet,
    p: usize,
    q: usize,
) -> Result<CohomologyBasis, CohomologyError> {
    assert!(theory != Theory::DeRham, "use de_rham() for the total complex");
    validate_charset(s)?;
    let mut representatives = Vec::new();
    let mut per_character = Vec::new();
    if p > m.dim() || q > m.dim() {
        return Ok(CohomologyBasis {
            theory,
            degree: Degree::Bidegree(p, q),
            representatives,
            per_character,
        });
    }
    for chi in s.iter() {
        let (cocycles, boundaries) = block_cocycles_boundaries(m, theory, chi, p, q);
        let basis = quotient_basis(&cocycles, &boundaries);
        let index = BlockIndex::new(m, chi, p, q);
        per_character.push((chi.clone(), basis.len()));
        for v in basis {
            representatives.push(index.to_element(&v));
        }
    }
    Ok(CohomologyBasis {
        theory,
        degree: Degree::Bidegree(p, q),
        representatives,
        per_character,
    })
}

/// de Rham cohomology of the total complex at degree `k` over `S`.
pub fn de_rham(
    m: &ManifoldModel,
    s: &CharacterSet,
    k: usize,
) -> Result<CohomologyBasis, CohomologyError> {
    validate_charset(s)?;
    let mut representatives = Vec::new();
    let mut per_character = Vec::new();
    for chi in s.iter() {
        let index = BlockIndex::total(m, chi, k);
        if index.is_empty() && k > 0 {
            per_character.push((chi.clone(), 0));
            continue;
        }
        let target = BlockIndex::total(m, chi, k + 1);
        // equations: coordinates of d(basis element) in the (k+1)-index
        let mut eqs: Vec<SVec> = vec![Vec::new(); target.len()];
        for (j, key) in index.keys.iter().enumerate() {
            let image = m.differential(
                &Element::term(key.character.clone(), key.monomial, Scalar::one()),
                DiffKind::D,
            );
            for (row, c) in target.to_svec(&image) {
                eqs[row].push((j, c));
            }
        }
        let kernel = kernel_basis(index.len(), eqs);
        let mut boundaries = Vec::new();
        if k > 0 {
            let below = BlockIndex::total(m, chi, k - 1);
            for key in &below.keys {
                let image = m.differential(
                    &Element::term(key.character.clone(), key.monomial, Scalar::one()),
                    DiffKind::D,
                );
                let v = index.to_svec(&image);
                if !v.is_empty() {
                    boundaries.push(v);
                }
            }
        }
        let basis = quotient_basis(&kernel, &boundaries);
        per_character.push((chi.clone(), basis.len()));
        for v in basis {
            representatives.push(index.to_element(&v));
        }
    }
    Ok(CohomologyBasis {
        theory: Theory::DeRham,
        degree: Degree::Total(k),
        representatives,
        per_character,
    })
}

/// One line of the ∂∂̄-lemma report.
#[derive(Clone, Debug)]
pub struct DdbarRow {
    pub p: usize,
    pub q: usize,
    pub dim_bc: usize,
    pub dim_dolbeault: usize,
    pub dim_aeppli: usize,
    pub rank_bc_to_dolbeault: usize,
    pub rank_dolbeault_to_aeppli: usize,
}

impl DdbarRow {
    pub fn bc_to_dolbeault_iso(&self) -> bool {
        self.rank_bc_to_dolbeault == self.dim_bc && self.rank_bc_to_dolbeault == self.dim_dolbeault
    }

    pub fn dolbeault_to_aeppli_iso(&self) -> bool {
        self.rank_dolbeault_to_aeppli == self.dim_dolbeault
            && self.rank_dolbeault_to_aeppli == self.dim_aeppli
    }
}

/// Model-level ∂∂̄-lemma report: dimensions of the three theories and the
/// ranks of the natural maps H_BC → H_∂̄ → H_A at every bidegree. The
/// verdict is model-level only: it speaks about the finite invariant
/// complex over `S`, not directly about the manifold.
#[derive(Clone, Debug)]
pub struct DdbarReport {
    pub rows: Vec<DdbarRow>,
    pub holds: bool,
}

pub fn ddbar_lemma_check(
    m: &ManifoldModel,
    s: &CharacterSet,
) -> Result<DdbarReport, CohomologyError> {
    validate_charset(s)?;
    let n = m.dim();
    let grid: Vec<(usize, usize)> = (0..=n).flat_map(|p| (0..=n).map(move |q| (p, q))).collect();
    let mut rows = grid
        .par_iter()
        .map(|&(p, q)| {
            let bc = cohomology(m, Theory::BottChern, s, p, q)?;
            let dol = cohomology(m, Theory::Dolbeault, s, p, q)?;
            let ae = cohomology(m, Theory::Aeppli, s, p, q)?;
            // ranks of the identity-induced maps, computed per character
            let mut rank_bd = 0usize;
            let mut rank_da = 0usize;
            for chi in s.iter() {
                let index = BlockIndex::new(m, chi, p, q);
                let reps_bc: Vec<SVec> = bc
                    .representatives
                    .iter()
                    .map(|e| e.project_character(chi))
                    .filter(|e| !e.is_zero())
                    .map(|e| index.to_svec(&e))
                    .collect();
                let reps_dol: Vec<SVec> = dol
                    .representatives
                    .iter()
                    .map(|e| e.project_character(chi))
                    .filter(|e| !e.is_zero())
                    .map(|e| index.to_svec(&e))
                    .collect();
                let (pi, qi) = (p as isize, q as isize);
                let dol_bdry = image_vectors(m, DiffKind::DelBar, chi, pi, qi - 1);
                let mut ae_bdry = image_vectors(m, DiffKind::Del, chi, pi - 1, qi);
                ae_bdry.extend(image_vectors(m, DiffKind::DelBar, chi, pi, qi - 1));

                rank_bd += rank_modulo(&reps_bc, &dol_bdry);
                rank_da += rank_modulo(&reps_dol, &ae_bdry);
            }
            Ok(DdbarRow {
                p,
                q,
                dim_bc: bc.dimension(),
                dim_dolbeault: dol.dimension(),
                dim_aeppli: ae.dimension(),
                rank_bc_to_dolbeault: rank_bd,
                rank_dolbeault_to_aeppli: rank_da,
            })
        })
        .collect::<Result<Vec<_>, CohomologyError>>()?;
    rows.sort_by_key(|r| (r.p, r.q));
    let holds = rows
        .iter()
        .all(|r| r.bc_to_dolbeault_iso() && r.dolbeault_to_aeppli_iso());
    Ok(DdbarReport { rows, holds })
}

/// Rank of the images of `vectors` in the quotient by `boundaries`.
fn rank_modulo(vectors: &[SVec], boundaries: &[SVec]) -> usize {
    let b = rref(boundaries.iter().cloned());
    rank(vectors.iter().map(|v| b.reduce(v)))
}

/// Specification of a subspace `Σ im(op on declared blocks) + span(fixed)`.
#[derive(Clone, Debug, Default)]
pub struct SpanSpec {
    pub images: Vec<ImageSpan>,
    pub fixed: Vec<Element>,
}

/// The image of one operator over a list of characters at one source
/// bidegree (negative bidegrees are allowed and contribute nothing).
#[derive(Clone, Debug)]
pub struct ImageSpan {
    pub op: DiffKind,
    pub characters: Vec<Character>,
    pub source_bidegree: (isize, isize),
}

impl SpanSpec {
    pub fn image(op: DiffKind, characters: Vec<Character>, p: isize, q: isize) -> ImageSpan {
        ImageSpan {
            op,
            characters,
            source_bidegree: (p, q),
        }
    }

    /// Materialize every generator of the span, tagged with its origin.
    pub fn generators(&self, m: &ManifoldModel) -> Vec<(Generator, Element)> {
        let mut out = Vec::new();
        for span in &self.images {
            let (p, q) = span.source_bidegree;
            if p < 0 || q < 0 {
                continue;
            }
            for chi in &span.characters {
                for mono in m.monomial_basis(p as usize, q as usize) {
                    let pre = Element::term(chi.clone(), mono, Scalar::one());
                    let img = m.differential(&pre, span.op);
                    if !img.is_zero() {
                        out.push((
                            Generator::Image {
                                op: span.op,
                                preimage: pre,
                            },
                            img,
                        ));
                    }
                }
            }
        }
        for (i, f) in self.fixed.iter().enumerate() {
            if !f.is_zero() {
                out.push((Generator::Fixed { index: i }, f.clone()));
            }
        }
        out
    }
}

/// Origin of one generator of a `SpanSpec`.
#[derive(Clone, Debug)]
pub enum Generator {
    Image { op: DiffKind, preimage: Element },
    Fixed { index: usize },
}

/// A verified decomposition `target = Σ coeff · generator`.
#[derive(Clone, Debug)]
pub struct MembershipWitness {
    pub combination: Vec<(Scalar, Generator)>,
}

impl MembershipWitness {
    /// Substitute the witness: recompute `Σ cᵢ · opᵢ(preimageᵢ)` plus the
    /// fixed parts. Pure substitution, no elimination.
    pub fn substitute(&self, m: &ManifoldModel, space: &SpanSpec) -> Element {
        let mut acc = Element::zero();
        for (c, g) in &self.combination {
            let v = match g {
                Generator::Image { op, preimage } => m.differential(preimage, *op),
                Generator::Fixed { index } => space.fixed[*index].clone(),
            };
            acc.add_assign(&v.scale(c));
        }
        acc
    }
}

/// A linear functional on the term space, certifying non-membership: it
/// annihilates every generator of the span but not the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    pub entries: Vec<(TermKey, Scalar)>,
}

impl DualFunctional {
    /// Plain bilinear pairing (no conjugation) with an element.
    pub fn evaluate(&self, e: &Element) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in &self.entries {
            let x = e.coeff(k);
            if !x.is_zero() {
                acc += &(c * &x);
            }
        }
        acc
    }
}

/// Outcome of a membership solve.
pub enum Membership {
    Member(MembershipWitness),
    NotMember(DualFunctional),
}

/// Decide `target ∈ span` exactly. Member: a witness that substitutes back
/// to the target. Not a member: a dual functional vanishing on the whole
/// span and equal to 1 on the target.
pub fn solve_membership(
    m: &ManifoldModel,
    target: &Element,
    space: &SpanSpec,
) -> Result<Membership, CohomologyError> {
    if target.is_zero() {
        return Ok(Membership::Member(MembershipWitness {
            combination: Vec::new(),
        }));
    }
    let generators = space.generators(m);

    // reachable bidegrees come from the declared sectors, so that a span
    // whose image happens to vanish still answers NotMember rather than
    // erroring: source bidegree plus operator shift, and fixed elements
    let mut reachable: BTreeSet<(usize, usize)> = BTreeSet::new();
    for span in &space.images {
        let (p, q) = span.source_bidegree;
        if p < 0 || q < 0 {
            continue;
        }
        for &(dp, dq) in span.op.shifts() {
            let sector = (p as usize + dp, q as usize + dq);
            if sector.0 <= m.dim() && sector.1 <= m.dim() {
                reachable.insert(sector);
            }
        }
    }
    for f in &space.fixed {
        for bd in f.bidegrees() {
            reachable.insert(bd);
        }
    }
    let stray: Vec<(usize, usize)> = target
        .bidegrees()
        .into_iter()
        .filter(|bd| !reachable.contains(bd))
        .collect();
    if !stray.is_empty() {
        return Err(CohomologyError::InconsistentBidegrees { target: stray });
    }

    // ambient index: union of supports, canonical key order
    let mut keys: BTreeSet<TermKey> = BTreeSet::new();
    for (k, _) in target.iter() {
        keys.insert(k.clone());
    }
    for (_, g) in &generators {
        for (k, _) in g.iter() {
            keys.insert(k.clone());
        }
    }
    let keys: Vec<TermKey> = keys.into_iter().collect();
    let pos = |e: &Element| -> SVec {
        let mut v = Vec::new();
        for (i, k) in keys.iter().enumerate() {
            let c = e.coeff(k);
            if !c.is_zero() {
                v.push((i, c));
            }
        }
        v
    };
    let cols: Vec<SVec> = generators.iter().map(|(_, g)| pos(g)).collect();
    let b = pos(target);
    match solve_in_span(keys.len(), &cols, &b) {
        SolveOutcome::Solved(coeffs) => {
            let combination = coeffs
                .into_iter()
                .map(|(j, c)| (c, generators[j].0.clone()))
                .collect();
            Ok(Membership::Member(MembershipWitness { combination }))
        }
        SolveOutcome::Inconsistent(dual) => {
            let entries = dual
                .into_iter()
                .map(|(i, c)| (keys[i].clone(), c))
                .collect();
            Ok(Membership::NotMember(DualFunctional { entries }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn torus_has_binomial_hodge_numbers() {
        let m = families::torus(3).unwrap();
        let s = CharacterSet::trivial(0);
        for theory in [Theory::Dolbeault, Theory::BottChern, Theory::Aeppli] {
            for p in 0..=3usize {
                for q in 0..=3usize {
                    let h = cohomology(&m, theory, &s, p, q).unwrap();
                    let binom =
                        |n: usize, k: usize| (0..k).fold(1usize, |a, i| a * (n - i) / (i + 1));
                    assert_eq!(h.dimension(), binom(3, p) * binom(3, q));
                }
            }
        }
    }

    #[test]
    fn torus_betti_numbers() {
        let m = families::torus(2).unwrap();
        let s = CharacterSet::trivial(0);
        let expect = [1usize, 4, 6, 4, 1];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(de_rham(&m, &s, k).unwrap().dimension(), *e);
        }
    }

    #[test]
    fn torus_satisfies_ddbar_lemma() {
        let m = families::torus(2).unwrap();
        let s = CharacterSet::trivial(0);
        assert!(ddbar_lemma_check(&m, &s).unwrap().holds);
    }
}
