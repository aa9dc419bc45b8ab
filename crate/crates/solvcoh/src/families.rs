//! Generators for the model families shipped with the engine: complex
//! tori, the Bigalke-Rollenske nilmanifolds, the generalized Nakamura
//! solvmanifolds, and semidirect-product solvmanifolds with paired
//! exponential characters.
//!
//! Generators take the reduced rational data (weights, lattice-compat
//! ratios) directly; matrix-level group data never enters the engine.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::character::{Character, CharacterSet};
use crate::element::Element;
use crate::error::ModelError;
use crate::model::{BasisCharacter, ManifoldModel, ModelData};
use crate::monomial::FormMonomial;
use crate::scalar::{Rational, Scalar};

#[derive(Error, Debug)]
pub enum FamilyError {
    #[error("dimension parameter must be at least {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },
    #[error("weights must sum to zero (got {0})")]
    WeightsDoNotSumToZero(String),
    #[error("all weights vanish; the model degenerates to a torus")]
    TorusDegenerate,
    #[error("parameter {name} must be nonzero")]
    ZeroParameter { name: &'static str },
    #[error("expected {expected} integer parameters for ks, got {got}")]
    BadKs { expected: usize, got: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn unit_metric(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

/// Complex torus of dimension `n`: every structure equation vanishes.
pub fn torus(n: usize) -> Result<ManifoldModel, FamilyError> {
    if n == 0 {
        return Err(FamilyError::DimensionTooSmall { min: 1, got: 0 });
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("phi{i}")).collect();
    Ok(ManifoldModel::new(ModelData {
        name: format!("torus-{n}"),
        n,
        coframe_labels: labels,
        basis_characters: Vec::new(),
        structure: vec![Element::zero(); n],
        metric: unit_metric(n),
        character_set: Vec::new(),
        notes: vec!["lattice: standard integer lattice".into()],
    })?)
}

/// The Bigalke-Rollenske nilmanifold of parameter `n ≥ 2`, complex
/// dimension `4n-2`, with its invariant nilpotent complex structure:
/// the only nonzero structure equations are
/// `dφ^{3n-1} = φ^{2n} ∧ φ̄^{n}` and, for `3n ≤ j ≤ 4n-2`,
/// `dφ^{j} = φ^{j-3n+1} ∧ φ^{j-2n+1} + φ^{j-2n} ∧ φ̄^{j-n}`.
pub fn bigalke_rollenske(n: usize) -> Result<ManifoldModel, FamilyError> {
    if n < 2 {
        return Err(FamilyError::DimensionTooSmall { min: 2, got: n });
    }
    let dim = 4 * n - 2;
    let labels: Vec<String> = (1..=dim).map(|i| format!("phi{i}")).collect();
    // 1-based coframe labels, 0-based masks
    let holo2 = |a: usize, b: usize| FormMonomial::from_indices(&[a - 1, b - 1], &[]);
    let mixed = |a: usize, b: usize| FormMonomial::from_indices(&[a - 1], &[b - 1]);
    let mut structure = vec![Element::zero(); dim];
    structure[3 * n - 2] = Element::term(
        Character::trivial(0),
        mixed(2 * n, n),
        Scalar::one(),
    );
    for j in 3 * n..=4 * n - 2 {
        let mut e = Element::term(
            Character::trivial(0),
            holo2(j - 3 * n + 1, j - 2 * n + 1),
            Scalar::one(),
        );
        e.add_assign(&Element::term(
            Character::trivial(0),
            mixed(j - 2 * n, j - n),
            Scalar::one(),
        ));
        structure[j - 1] = e;
    }
    Ok(ManifoldModel::new(ModelData {
        name: format!("bigalke-rollenske-{n}"),
        n: dim,
        coframe_labels: labels,
        basis_characters: Vec::new(),
        structure,
        metric: unit_metric(dim),
        character_set: Vec::new(),
        notes: vec!["lattice: Gaussian-integer points of the nilpotent group".into()],
    })?)
}

/// Parameters of a generalized Nakamura model: rational weights with zero
/// sum, and the rational `t` encoding the lattice ratio (the weight `c` of
/// a character is admissible exactly when `t·c` is an integer).
#[derive(Clone, Debug)]
pub struct NakamuraParams {
    pub lambdas: Vec<Rational>,
    pub t: Rational,
}

impl NakamuraParams {
    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.lambdas.is_empty() {
            return Err(FamilyError::DimensionTooSmall { min: 1, got: 0 });
        }
        let sum: Rational = self.lambdas.iter().cloned().sum();
        if !sum.is_zero() {
            return Err(FamilyError::WeightsDoNotSumToZero(sum.to_string()));
        }
        if self.lambdas.iter().all(|l| l.is_zero()) {
            return Err(FamilyError::TorusDegenerate);
        }
        if self.t.is_zero() {
            return Err(FamilyError::ZeroParameter { name: "t" });
        }
        Ok(())
    }
}

/// Generated Nakamura model together with its admissibility data.
#[derive(Clone, Debug)]
pub struct NakamuraOutput {
    pub model: ManifoldModel,
    /// All admissible weights (realizable multi-index sums `c` with
    /// `t·c ∈ ℤ`), negation-closed, containing 0.
    pub admissible_weights: Vec<Rational>,
    /// Admissibility forces weight zero: `t·c ∈ ℤ ⟺ c = 0` over all
    /// realizable weights. Model-level route to the ∂∂̄-lemma.
    pub zero_only_admissible: bool,
    /// Some disjoint index pair has a nonzero admissible weight: the
    /// obstruction route (non-vanishing triple products).
    pub disjoint_nonzero_admissible: bool,
    /// All weights zero (degenerate torus case; rejected by validate).
    pub torus_degenerate: bool,
}

impl NakamuraOutput {
    pub fn character_set(&self) -> CharacterSet {
        self.model.default_character_set()
    }
}

fn rational_gcd(values: &[Rational]) -> Option<Rational> {
    let mut it = values.iter().filter(|v| !v.is_zero());
    let first = it.next()?;
    let mut num = first.numer().abs();
    let mut den = first.denom().clone();
    for v in it {
        num = gcd_bigint(&num, &v.numer().abs());
        den = lcm_bigint(&den, v.denom());
    }
    Some(Rational::new(num, den))
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b).abs() / gcd_bigint(a, b)
}

fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// All subset sums of the weight vector (the weights `c_I`).
fn subset_sums(lambdas: &[Rational]) -> Vec<Rational> {
    let mut sums = vec![Rational::zero()];
    for l in lambdas {
        let mut next: Vec<Rational> = sums.iter().map(|s| s + l).collect();
        sums.append(&mut next);
        sums.sort();
        sums.dedup();
    }
    sums
}

/// The admissible weight set of a parameter choice: all `c_IJ` over pairs
/// of multi-indices with `t·c_IJ ∈ ℤ`, negation-closed, containing 0.
pub fn admissible_characters(params: &NakamuraParams) -> Result<Vec<Rational>, FamilyError> {
    params.validate()?;
    let single = subset_sums(&params.lambdas);
    let mut out: Vec<Rational> = Vec::new();
    for a in &single {
        for b in &single {
            let c = a + b;
            if is_integer(&(&params.t * &c)) {
                out.push(-&c);
                out.push(c);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Generalized Nakamura model on the coframe `phi0 … phin` with
/// `dφ^i = -½ λ_i (φ⁰ + φ̄⁰) ∧ φ^i`. Characters are generated by a single
/// basis character `f` of weight `g` (the gcd of the admissible weights)
/// with log-derivative `-½ g (φ⁰ - φ̄⁰)`; the declared character set holds
/// every admissible weight as a power of `f`.
pub fn nakamura(params: &NakamuraParams) -> Result<NakamuraOutput, FamilyError> {
    params.validate()?;
    let nl = params.lambdas.len();
    let dim = nl + 1;
    let labels: Vec<String> = (0..dim).map(|i| format!("phi{i}")).collect();

    let admissible = admissible_characters(params)?;
    let generator = rational_gcd(&admissible);
    let (basis_characters, character_set, arity) = match &generator {
        None => (Vec::new(), Vec::new(), 0usize),
        Some(g) => {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let mut dlog = Element::term(
                Character::trivial(1),
                FormMonomial::from_indices(&[0], &[]),
                Scalar::from_rational(-(&half * g)),
            );
            dlog.add_assign(&Element::term(
                Character::trivial(1),
                FormMonomial::from_indices(&[], &[0]),
                Scalar::from_rational(&half * g),
            ));
            let bc = BasisCharacter {
                label: "f".into(),
                weight: g.clone(),
                dlog,
            };
            let set: Vec<Character> = admissible
                .iter()
                .map(|c| {
                    let e = c / g;
                    debug_assert!(is_integer(&e), "gcd must divide admissible weights");
                    let k: i32 = e.numer().try_into().expect("exponent fits i32");
                    Character::from_exponents(vec![k])
                })
                .collect();
            (vec![bc], set, 1usize)
        }
    };

    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut structure = vec![Element::zero(); dim];
    for (i, l) in params.lambdas.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let idx = i + 1;
        let mut e = Element::term(
            Character::trivial(arity),
            FormMonomial::from_indices(&[0, idx], &[]),
            Scalar::from_rational(-(&half * l)),
        );
        e.add_assign(&Element::term(
            Character::trivial(arity),
            FormMonomial::from_indices(&[idx], &[0]),
            Scalar::from_rational(&half * l),
        ));
        structure[idx] = e;
    }

    // condition flags by exhaustive multi-index enumeration
    let single = subset_sums(&params.lambdas);
    let mut zero_only = true;
    for a in &single {
        for b in &single {
            let c = a + b;
            if is_integer(&(&params.t * &c)) && !c.is_zero() {
                zero_only = false;
            }
        }
    }
    let mut disjoint_nonzero = false;
    let masks = crate::monomial::subsets_of_size(nl, 0)
        .into_iter()
        .chain((1..=nl).flat_map(|k| crate::monomial::subsets_of_size(nl, k)));
    let sum_of = |mask: u64| -> Rational {
        crate::monomial::mask_indices(mask)
            .into_iter()
            .map(|i| params.lambdas[i].clone())
            .sum()
    };
    let all_masks: Vec<u64> = masks.collect();
    'outer: for &i_mask in &all_masks {
        for &j_mask in &all_masks {
            if i_mask & j_mask != 0 {
                continue;
            }
            let c = sum_of(i_mask) + sum_of(j_mask);
            if !c.is_zero() && is_integer(&(&params.t * &c)) {
                disjoint_nonzero = true;
                break 'outer;
            }
        }
    }

    let model = ManifoldModel::new(ModelData {
        name: format!(
            "nakamura-l{}-t{}",
            params
                .lambdas
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
            params.t
        ),
        n: dim,
        coframe_labels: labels,
        basis_characters,
        structure,
        metric: unit_metric(dim),
        character_set,
        notes: vec![
            "formal model: rational weight data; lattice realizability not witnessed".into(),
        ],
    })?;

    Ok(NakamuraOutput {
        model,
        admissible_weights: admissible,
        zero_only_admissible: zero_only,
        disjoint_nonzero_admissible: disjoint_nonzero,
        torus_degenerate: false,
    })
}

/// Parameters of the semidirect-product family: `2n` closed coframe
/// elements, `2m` twisted ones, a nonzero rational weight, and the
/// integers witnessing the lattice-compatible imaginary periods.
#[derive(Clone, Debug)]
pub struct SemidirectParams {
    pub n: usize,
    pub m: usize,
    pub lambda: Rational,
    pub ks: Vec<i64>,
}

impl SemidirectParams {
    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.n == 0 {
            return Err(FamilyError::DimensionTooSmall { min: 1, got: 0 });
        }
        if self.m == 0 {
            return Err(FamilyError::DimensionTooSmall { min: 1, got: 0 });
        }
        if self.lambda.is_zero() {
            return Err(FamilyError::ZeroParameter { name: "lambda" });
        }
        if self.ks.len() != 2 * self.n {
            return Err(FamilyError::BadKs {
                expected: 2 * self.n,
                got: self.ks.len(),
            });
        }
        Ok(())
    }
}

/// Semidirect-product solvmanifold model: coframe `phi1 … phi2n`,
/// `psi1 … psi2m` with
/// `dψ^{2j+1} = -λ η ∧ ψ^{2j+1}`, `dψ^{2j+2} = λ η̄ ∧ ψ^{2j+2}` where
/// `η = φ¹ + φ̄² + … + φ^{2n-1} + φ̄^{2n}`, plus the two basis characters
/// `beta1` (log-derivative `-λ Σ_even (φ^k - φ̄^k)`) and `beta2`
/// (log-derivative `λ Σ_odd (φ^k - φ̄^k)`).
pub fn semidirect_family(params: &SemidirectParams) -> Result<ManifoldModel, FamilyError> {
    params.validate()?;
    let (n2, m2) = (2 * params.n, 2 * params.m);
    let dim = n2 + m2;
    let mut labels: Vec<String> = (1..=n2).map(|i| format!("phi{i}")).collect();
    labels.extend((1..=m2).map(|i| format!("psi{i}")));
    let psi = |k: usize| n2 + k - 1; // 1-based psi index → coframe index
    let phi = |k: usize| k - 1;

    let l = &params.lambda;
    let mut structure = vec![Element::zero(); dim];
    for j in 0..params.m {
        // dψ^{2j+1} = -λ (Σ_odd φ^k + Σ_even φ̄^k) ∧ ψ^{2j+1}
        let tgt = psi(2 * j + 1);
        let mut e = Element::zero();
        for k in (1..=n2).step_by(2) {
            e.add_assign(&Element::term(
                Character::trivial(2),
                FormMonomial::from_indices(&[phi(k), tgt], &[]),
                Scalar::from_rational(-l.clone()),
            ));
        }
        for k in (2..=n2).step_by(2) {
            // -λ φ̄^k ∧ ψ = +λ ψ ∧ φ̄^k
            e.add_assign(&Element::term(
                Character::trivial(2),
                FormMonomial::from_indices(&[tgt], &[phi(k)]),
                Scalar::from_rational(l.clone()),
            ));
        }
        structure[tgt] = e;

        // dψ^{2j+2} = λ (Σ_odd φ̄^k + Σ_even φ^k) ∧ ψ^{2j+2}
        let tgt = psi(2 * j + 2);
        let mut e = Element::zero();
        for k in (1..=n2).step_by(2) {
            // λ φ̄^k ∧ ψ = -λ ψ ∧ φ̄^k
            e.add_assign(&Element::term(
                Character::trivial(2),
                FormMonomial::from_indices(&[tgt], &[phi(k)]),
                Scalar::from_rational(-l.clone()),
            ));
        }
        for k in (2..=n2).step_by(2) {
            e.add_assign(&Element::term(
                Character::trivial(2),
                FormMonomial::from_indices(&[phi(k), tgt], &[]),
                Scalar::from_rational(l.clone()),
            ));
        }
        structure[tgt] = e;
    }

    // beta1: dlog = -λ Σ_{even k} (φ^k - φ̄^k); beta2: λ Σ_{odd k} (…)
    let mut dlog1 = Element::zero();
    for k in (2..=n2).step_by(2) {
        dlog1.add_assign(&Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[phi(k)], &[]),
            Scalar::from_rational(-l.clone()),
        ));
        dlog1.add_assign(&Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[], &[phi(k)]),
            Scalar::from_rational(l.clone()),
        ));
    }
    let mut dlog2 = Element::zero();
    for k in (1..=n2).step_by(2) {
        dlog2.add_assign(&Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[phi(k)], &[]),
            Scalar::from_rational(l.clone()),
        ));
        dlog2.add_assign(&Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[], &[phi(k)]),
            Scalar::from_rational(-l.clone()),
        ));
    }
    let basis_characters = vec![
        BasisCharacter {
            label: "beta1".into(),
            weight: Rational::zero(),
            dlog: dlog1,
        },
        BasisCharacter {
            label: "beta2".into(),
            weight: Rational::zero(),
            dlog: dlog2,
        },
    ];
    let mut character_set = Vec::new();
    for a in -1i32..=1 {
        for b in -1i32..=1 {
            character_set.push(Character::from_exponents(vec![a, b]));
        }
    }

    Ok(ManifoldModel::new(ModelData {
        name: format!("semidirect-n{}-m{}-l{}", params.n, params.m, params.lambda),
        n: dim,
        coframe_labels: labels,
        basis_characters,
        structure,
        metric: unit_metric(dim),
        character_set,
        notes: vec![format!(
            "lattice data: imaginary periods 2*k_i*pi/lambda with k = [{}]",
            params
                .ks
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )],
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DiffKind;
    use crate::scalar::ratio;

    fn rat(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn bigalke_rollenske_small_cases() {
        let m2 = bigalke_rollenske(2).unwrap();
        assert_eq!(m2.dim(), 6);
        // dφ5 = φ4 ∧ φ̄2
        let d5 = m2.structure_equation(4);
        assert_eq!(
            *d5,
            Element::monomial(0, FormMonomial::from_indices(&[3], &[1]))
        );
        // dφ6 = φ1∧φ3 + φ2∧φ̄4
        let mut d6 = Element::monomial(0, FormMonomial::from_indices(&[0, 2], &[]));
        d6.add_assign(&Element::monomial(0, FormMonomial::from_indices(&[1], &[3])));
        assert_eq!(*m2.structure_equation(5), d6);

        let m3 = bigalke_rollenske(3).unwrap();
        assert_eq!(m3.dim(), 10);
        // dφ8 = φ6 ∧ φ̄3; dφ9 = φ1∧φ4 + φ3∧φ̄6; dφ10 = φ2∧φ5 + φ4∧φ̄7
        assert_eq!(
            *m3.structure_equation(7),
            Element::monomial(0, FormMonomial::from_indices(&[5], &[2]))
        );
        let mut d9 = Element::monomial(0, FormMonomial::from_indices(&[0, 3], &[]));
        d9.add_assign(&Element::monomial(0, FormMonomial::from_indices(&[2], &[5])));
        assert_eq!(*m3.structure_equation(8), d9);
        let mut d10 = Element::monomial(0, FormMonomial::from_indices(&[1, 4], &[]));
        d10.add_assign(&Element::monomial(0, FormMonomial::from_indices(&[3], &[6])));
        assert_eq!(*m3.structure_equation(9), d10);

        assert!(bigalke_rollenske(1).is_err());
    }

    #[test]
    fn bigalke_rollenske_is_nilpotent() {
        for n in [2, 3] {
            assert!(bigalke_rollenske(n).unwrap().check_nilpotent());
        }
        assert!(torus(3).unwrap().check_nilpotent());
    }

    #[test]
    fn nakamura_admissible_sets() {
        let p1 = NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 1),
        };
        let adm = admissible_characters(&p1).unwrap();
        let expect: Vec<Rational> = [-2i64, -1, 0, 1, 2].iter().map(|&k| rat(k, 1)).collect();
        assert_eq!(adm, expect);

        let p2 = NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 3),
        };
        assert_eq!(admissible_characters(&p2).unwrap(), vec![Rational::zero()]);
    }

    #[test]
    fn nakamura_flags() {
        let out = nakamura(&NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 1),
        })
        .unwrap();
        assert!(out.disjoint_nonzero_admissible);
        assert!(!out.zero_only_admissible);

        let out = nakamura(&NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 3),
        })
        .unwrap();
        assert!(out.zero_only_admissible);
        assert!(!out.disjoint_nonzero_admissible);
        assert_eq!(out.model.arity(), 0);

        assert!(nakamura(&NakamuraParams {
            lambdas: vec![rat(1, 1), rat(1, 1)],
            t: rat(1, 1),
        })
        .is_err());
    }

    #[test]
    fn nakamura_structure_and_nonnilpotence() {
        let out = nakamura(&NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 1),
        })
        .unwrap();
        let m = &out.model;
        assert_eq!(m.dim(), 3);
        // dφ1 = -1/2 (φ0+φ̄0)∧φ1
        let d1 = m.structure_equation(1);
        let mut expect = Element::term(
            Character::trivial(1),
            FormMonomial::from_indices(&[0, 1], &[]),
            Scalar::from_ratio(-1, 2),
        );
        expect.add_assign(&Element::term(
            Character::trivial(1),
            FormMonomial::from_indices(&[1], &[0]),
            Scalar::from_ratio(1, 2),
        ));
        assert_eq!(*d1, expect);
        assert!(!m.check_nilpotent());
    }

    #[test]
    fn nakamura_character_differential() {
        // d(f_c) = f_c · (-c/2)(φ0 - φ̄0) for the weight-c power of f
        let out = nakamura(&NakamuraParams {
            lambdas: vec![rat(1, 1), rat(-1, 1)],
            t: rat(1, 1),
        })
        .unwrap();
        let m = &out.model;
        let f2 = Character::from_exponents(vec![2]);
        assert_eq!(m.weight_of(&f2), rat(2, 1));
        let e = Element::term(f2.clone(), FormMonomial::ONE, Scalar::one());
        let d = m.differential(&e, DiffKind::D);
        let mut expect = Element::term(
            f2.clone(),
            FormMonomial::from_indices(&[0], &[]),
            Scalar::from_int(-1),
        );
        expect.add_assign(&Element::term(
            f2,
            FormMonomial::from_indices(&[], &[0]),
            Scalar::from_int(1),
        ));
        assert_eq!(d, expect);
    }

    #[test]
    fn semidirect_small_case() {
        let m = semidirect_family(&SemidirectParams {
            n: 1,
            m: 1,
            lambda: rat(1, 1),
            ks: vec![1, 1],
        })
        .unwrap();
        assert_eq!(m.dim(), 4);
        // dψ1 = -(φ1 + φ̄2)∧ψ1 : terms -φ1∧ψ1 and +ψ1∧φ̄2
        let d = m.structure_equation(2);
        let mut expect = Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[0, 2], &[]),
            Scalar::from_int(-1),
        );
        expect.add_assign(&Element::term(
            Character::trivial(2),
            FormMonomial::from_indices(&[2], &[1]),
            Scalar::from_int(1),
        ));
        assert_eq!(*d, expect);
        assert!(!m.check_nilpotent());

        // alternating sign pattern for m=2
        let m2 = semidirect_family(&SemidirectParams {
            n: 1,
            m: 2,
            lambda: rat(1, 1),
            ks: vec![1, 1],
        })
        .unwrap();
        assert_eq!(m2.dim(), 6);
        for j in 0..2usize {
            let odd = m2.structure_equation(2 + 2 * j);
            let even = m2.structure_equation(2 + 2 * j + 1);
            assert!(!odd.is_zero() && !even.is_zero());
        }
    }

    #[test]
    fn semidirect_dlogs_are_closed() {
        let m = semidirect_family(&SemidirectParams {
            n: 2,
            m: 1,
            lambda: rat(1, 1),
            ks: vec![1, 1, 1, 1],
        })
        .unwrap();
        for bc in m.basis_characters() {
            assert!(m.differential(&bc.dlog, DiffKind::D).is_zero());
        }
    }
}
