//! Structured-text (JSON) formats for models, elements, cohomology
//! tables and certificates, plus aligned plain-text table rendering.
//!
//! All documents carry `"schema": 1`. Rationals serialize as
//! `[numerator, denominator]`; values that do not fit an i64 fall back to
//! decimal strings, and both encodings are accepted on input. A form term
//! is `{coeff: [re_num, re_den, im_num, im_den], character: {label: exp},
//! holo: [...], anti: [...]}` with 1-based coframe positions.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::character::Character;
use crate::cohomology::{DualFunctional, Generator, MembershipWitness, SpanSpec};
use crate::element::Element;
use crate::error::{CertificateError, ModelError};
use crate::massey::{MasseyResult, Verdict, VerdictCertificate};
use crate::model::{BasisCharacter, DiffKind, ManifoldModel, ModelData};
use crate::monomial::FormMonomial;
use crate::obstructions::AsthenoCertificate;
use crate::scalar::{Rational, Scalar};

pub const SCHEMA_VERSION: u32 = 1;

/// One integer of a rational: a JSON number when it fits, a string when
/// it does not.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn from_bigint(b: &BigInt) -> Int {
        match i64::try_from(b.clone()) {
            Ok(v) => Int::Small(v),
            Err(_) => Int::Big(b.to_string()),
        }
    }

    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Int::Small(v) => Ok(BigInt::from(*v)),
            Int::Big(s) => BigInt::from_str(s).map_err(|e| e.to_string()),
        }
    }
}

pub type RationalJson = [Int; 2];

fn rational_to_json(r: &Rational) -> RationalJson {
    [Int::from_bigint(r.numer()), Int::from_bigint(r.denom())]
}

fn rational_from_json(j: &RationalJson) -> Result<Rational, String> {
    let num = j[0].to_bigint()?;
    let den = j[1].to_bigint()?;
    if den == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(num, den))
}

pub type ScalarJson = [Int; 4];

fn scalar_to_json(s: &Scalar) -> ScalarJson {
    [
        Int::from_bigint(s.re().numer()),
        Int::from_bigint(s.re().denom()),
        Int::from_bigint(s.im().numer()),
        Int::from_bigint(s.im().denom()),
    ]
}

fn scalar_from_json(j: &ScalarJson) -> Result<Scalar, String> {
    let re = rational_from_json(&[j[0].clone(), j[1].clone()])?;
    let im = rational_from_json(&[j[2].clone(), j[3].clone()])?;
    Ok(Scalar::new(re, im))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub coeff: ScalarJson,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub character: BTreeMap<String, i32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub holo: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub anti: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

pub fn element_to_json(m: &ManifoldModel, e: &Element) -> ElementJson {
    let labels: Vec<&str> = m
        .basis_characters()
        .iter()
        .map(|b| b.label.as_str())
        .collect();
    let terms = e
        .iter()
        .map(|(k, c)| {
            let mut character = BTreeMap::new();
            for (i, &exp) in k.character.exponents().iter().enumerate() {
                if exp != 0 {
                    character.insert(labels[i].to_string(), exp);
                }
            }
            TermJson {
                coeff: scalar_to_json(c),
                character,
                holo: k.monomial.holo_indices().iter().map(|i| i + 1).collect(),
                anti: k.monomial.anti_indices().iter().map(|i| i + 1).collect(),
            }
        })
        .collect();
    ElementJson { terms }
}

pub fn element_from_json(
    arity: usize,
    n: usize,
    char_index: &BTreeMap<String, usize>,
    j: &ElementJson,
) -> Result<Element, String> {
    let mut e = Element::zero();
    for t in &j.terms {
        let coeff = scalar_from_json(&t.coeff)?;
        let mut exps = vec![0i32; arity];
        for (label, exp) in &t.character {
            let idx = char_index
                .get(label)
                .ok_or_else(|| format!("unknown character label {label}"))?;
            exps[*idx] = *exp;
        }
        let to_mask = |v: &[usize]| -> Result<Vec<usize>, String> {
            v.iter()
                .map(|&i| {
                    if i == 0 || i > n {
                        Err(format!("coframe index {i} out of range 1..={n}"))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect()
        };
        let holo = to_mask(&t.holo)?;
        let anti = to_mask(&t.anti)?;
        for w in [&holo, &anti] {
            let mut seen = std::collections::BTreeSet::new();
            for i in w {
                if !seen.insert(i) {
                    return Err(format!("repeated index {} in term", i + 1));
                }
            }
        }
        e.add_term(
            Character::from_exponents(exps),
            FormMonomial::from_indices(&holo, &anti),
            coeff,
        );
    }
    Ok(e)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CharacterDeclJson {
    pub label: String,
    pub weight: RationalJson,
    pub dlog: ElementJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct StructureEquationJson {
    pub target: String,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ModelJson {
    pub schema: u32,
    pub name: String,
    pub n: usize,
    pub coframe: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<CharacterDeclJson>,
    /// Equations for coframe elements with nonzero differential; omitted
    /// targets are closed.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub structure: Vec<StructureEquationJson>,
    pub metric: Vec<RationalJson>,
    /// Declared admissible character set, as exponent vectors over the
    /// declared characters (in declaration order).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub character_set: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn model_to_json(m: &ManifoldModel) -> ModelJson {
    let characters = m
        .basis_characters()
        .iter()
        .map(|b| CharacterDeclJson {
            label: b.label.clone(),
            weight: rational_to_json(&b.weight),
            dlog: element_to_json(m, &b.dlog),
        })
        .collect();
    let structure = (0..m.dim())
        .filter(|&j| !m.structure_equation(j).is_zero())
        .map(|j| StructureEquationJson {
            target: m.coframe_labels()[j].clone(),
            terms: element_to_json(m, m.structure_equation(j)).terms,
        })
        .collect();
    ModelJson {
        schema: SCHEMA_VERSION,
        name: m.name().to_string(),
        n: m.dim(),
        coframe: m.coframe_labels().to_vec(),
        characters,
        structure,
        metric: m.metric().iter().map(rational_to_json).collect(),
        character_set: m
            .declared_characters()
            .iter()
            .map(|c| c.exponents().to_vec())
            .collect(),
        notes: m.notes().to_vec(),
    }
}

pub fn model_from_json(j: &ModelJson) -> Result<ManifoldModel, ModelError> {
    if j.schema != SCHEMA_VERSION {
        return Err(ModelError::Parse(format!(
            "unsupported schema version {}",
            j.schema
        )));
    }
    let n = j.n;
    if j.coframe.len() != n {
        return Err(ModelError::Parse(format!(
            "coframe has {} labels but n = {n}",
            j.coframe.len()
        )));
    }
    let arity = j.characters.len();
    let char_index: BTreeMap<String, usize> = j
        .characters
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.clone(), i))
        .collect();
    if char_index.len() != arity {
        return Err(ModelError::Parse("duplicate character labels".into()));
    }
    let basis_characters = j
        .characters
        .iter()
        .map(|c| {
            Ok(BasisCharacter {
                label: c.label.clone(),
                weight: rational_from_json(&c.weight).map_err(ModelError::Parse)?,
                dlog: element_from_json(arity, n, &char_index, &c.dlog)
                    .map_err(ModelError::Parse)?,
            })
        })
        .collect::<Result<Vec<_>, ModelError>>()?;
    let mut structure = vec![Element::zero(); n];
    for eq in &j.structure {
        let idx = j
            .coframe
            .iter()
            .position(|l| l == &eq.target)
            .ok_or_else(|| ModelError::Parse(format!("unknown coframe label {}", eq.target)))?;
        let terms = ElementJson {
            terms: eq.terms.clone(),
        };
        structure[idx] =
            element_from_json(arity, n, &char_index, &terms).map_err(ModelError::Parse)?;
    }
    let metric = j
        .metric
        .iter()
        .map(|r| rational_from_json(r).map_err(ModelError::Parse))
        .collect::<Result<Vec<_>, ModelError>>()?;
    let character_set = j
        .character_set
        .iter()
        .map(|exps| {
            if exps.len() != arity {
                Err(ModelError::Parse(format!(
                    "character-set entry has {} exponents, expected {arity}",
                    exps.len()
                )))
            } else {
                Ok(Character::from_exponents(exps.clone()))
            }
        })
        .collect::<Result<Vec<_>, ModelError>>()?;
    ManifoldModel::new(ModelData {
        name: j.name.clone(),
        n,
        coframe_labels: j.coframe.clone(),
        basis_characters,
        structure,
        metric,
        character_set,
        notes: j.notes.clone(),
    })
}

pub fn model_from_json_str(s: &str) -> Result<ManifoldModel, ModelError> {
    let j: ModelJson =
        serde_json::from_str(s).map_err(|e| ModelError::Parse(e.to_string()))?;
    model_from_json(&j)
}

pub fn model_to_json_string(m: &ManifoldModel) -> String {
    serde_json::to_string_pretty(&model_to_json(m)).expect("model serialization cannot fail")
}

// ---------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ImageSpanJson {
    pub op: String,
    pub characters: Vec<Vec<i32>>,
    pub source_bidegree: (isize, isize),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SpanSpecJson {
    pub images: Vec<ImageSpanJson>,
    pub fixed: Vec<ElementJson>,
}

fn diffkind_name(k: DiffKind) -> &'static str {
    k.name()
}

fn diffkind_from_name(s: &str) -> Result<DiffKind, String> {
    match s {
        "d" => Ok(DiffKind::D),
        "del" => Ok(DiffKind::Del),
        "delbar" => Ok(DiffKind::DelBar),
        "deldelbar" => Ok(DiffKind::DDbar),
        other => Err(format!("unknown operator {other}")),
    }
}

fn span_to_json(m: &ManifoldModel, s: &SpanSpec) -> SpanSpecJson {
    SpanSpecJson {
        images: s
            .images
            .iter()
            .map(|i| ImageSpanJson {
                op: diffkind_name(i.op).to_string(),
                characters: i
                    .characters
                    .iter()
                    .map(|c| c.exponents().to_vec())
                    .collect(),
                source_bidegree: i.source_bidegree,
            })
            .collect(),
        fixed: s.fixed.iter().map(|e| element_to_json(m, e)).collect(),
    }
}

fn span_from_json(
    m: &ManifoldModel,
    char_index: &BTreeMap<String, usize>,
    j: &SpanSpecJson,
) -> Result<SpanSpec, String> {
    Ok(SpanSpec {
        images: j
            .images
            .iter()
            .map(|i| {
                Ok(crate::cohomology::ImageSpan {
                    op: diffkind_from_name(&i.op)?,
                    characters: i
                        .characters
                        .iter()
                        .map(|e| Character::from_exponents(e.clone()))
                        .collect(),
                    source_bidegree: i.source_bidegree,
                })
            })
            .collect::<Result<Vec<_>, String>>()?,
        fixed: j
            .fixed
            .iter()
            .map(|e| element_from_json(m.arity(), m.dim(), char_index, e))
            .collect::<Result<Vec<_>, String>>()?,
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorJson {
    Image { op: String, preimage: ElementJson },
    Fixed { index: usize },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WitnessJson {
    pub combination: Vec<(ScalarJson, GeneratorJson)>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DualJson {
    pub entries: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateJson {
    Witness(WitnessJson),
    Dual(DualJson),
    Obstruction {
        cup: u8,
        class: ElementJson,
        dual: DualJson,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MasseyResultJson {
    pub schema: u32,
    pub model: ModelJson,
    pub inputs: [ElementJson; 3],
    pub bidegrees: [(usize, usize); 3],
    pub f13: ElementJson,
    pub f24: ElementJson,
    pub representative: ElementJson,
    pub indeterminacy: Vec<ElementJson>,
    pub space: SpanSpecJson,
    pub verdict: String,
    pub certificate: CertificateJson,
    pub hypotheses: Vec<String>,
    pub character_set: Vec<Vec<i32>>,
}

fn dual_to_json(m: &ManifoldModel, d: &DualFunctional) -> DualJson {
    let mut e = Element::zero();
    for (k, c) in &d.entries {
        e.add_term(k.character.clone(), k.monomial, c.clone());
    }
    DualJson {
        entries: element_to_json(m, &e).terms,
    }
}

fn dual_from_json(
    m: &ManifoldModel,
    char_index: &BTreeMap<String, usize>,
    j: &DualJson,
) -> Result<DualFunctional, String> {
    let e = element_from_json(
        m.arity(),
        m.dim(),
        char_index,
        &ElementJson {
            terms: j.entries.clone(),
        },
    )?;
    Ok(DualFunctional {
        entries: e.iter().map(|(k, c)| (k.clone(), c.clone())).collect(),
    })
}

pub fn massey_to_json(m: &ManifoldModel, r: &MasseyResult) -> MasseyResultJson {
    let certificate = match &r.certificate {
        VerdictCertificate::Witness(w) => CertificateJson::Witness(WitnessJson {
            combination: w
                .combination
                .iter()
                .map(|(c, g)| {
                    (
                        scalar_to_json(c),
                        match g {
                            Generator::Image { op, preimage } => GeneratorJson::Image {
                                op: diffkind_name(*op).to_string(),
                                preimage: element_to_json(m, preimage),
                            },
                            Generator::Fixed { index } => GeneratorJson::Fixed { index: *index },
                        },
                    )
                })
                .collect(),
        }),
        VerdictCertificate::Dual(d) => CertificateJson::Dual(dual_to_json(m, d)),
        VerdictCertificate::Obstruction { cup, class, dual } => CertificateJson::Obstruction {
            cup: *cup,
            class: element_to_json(m, class),
            dual: dual_to_json(m, dual),
        },
    };
    MasseyResultJson {
        schema: SCHEMA_VERSION,
        model: model_to_json(m),
        inputs: [
            element_to_json(m, &r.inputs[0]),
            element_to_json(m, &r.inputs[1]),
            element_to_json(m, &r.inputs[2]),
        ],
        bidegrees: r.bidegrees,
        f13: element_to_json(m, &r.f13),
        f24: element_to_json(m, &r.f24),
        representative: element_to_json(m, &r.representative),
        indeterminacy: r
            .indeterminacy
            .iter()
            .map(|e| element_to_json(m, e))
            .collect(),
        space: span_to_json(m, &r.space),
        verdict: r.verdict.name().to_string(),
        certificate,
        hypotheses: r.hypotheses.clone(),
        character_set: r
            .character_set
            .iter()
            .map(|c| c.exponents().to_vec())
            .collect(),
    }
}

/// Deserialized massey certificate with its embedded model.
pub struct LoadedMassey {
    pub model: ManifoldModel,
    pub result: MasseyResult,
}

pub fn massey_from_json(j: &MasseyResultJson) -> Result<LoadedMassey, CertificateError> {
    let model = model_from_json(&j.model)
        .map_err(|e| CertificateError::Malformed(format!("embedded model: {e}")))?;
    let char_index: BTreeMap<String, usize> = model
        .basis_characters()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.clone(), i))
        .collect();
    let elem = |e: &ElementJson| -> Result<Element, CertificateError> {
        element_from_json(model.arity(), model.dim(), &char_index, e)
            .map_err(CertificateError::Malformed)
    };
    let verdict = match j.verdict.as_str() {
        "vanishes" => Verdict::Vanishes,
        "non_vanishing" => Verdict::NonVanishing,
        "undefined" => Verdict::Undefined,
        other => {
            return Err(CertificateError::Malformed(format!(
                "unknown verdict {other}"
            )))
        }
    };
    let certificate = match &j.certificate {
        CertificateJson::Witness(w) => VerdictCertificate::Witness(MembershipWitness {
            combination: w
                .combination
                .iter()
                .map(|(c, g)| {
                    Ok((
                        scalar_from_json(c).map_err(CertificateError::Malformed)?,
                        match g {
                            GeneratorJson::Image { op, preimage } => Generator::Image {
                                op: diffkind_from_name(op)
                                    .map_err(CertificateError::Malformed)?,
                                preimage: elem(preimage)?,
                            },
                            GeneratorJson::Fixed { index } => Generator::Fixed { index: *index },
                        },
                    ))
                })
                .collect::<Result<Vec<_>, CertificateError>>()?,
        }),
        CertificateJson::Dual(d) => VerdictCertificate::Dual(
            dual_from_json(&model, &char_index, d).map_err(CertificateError::Malformed)?,
        ),
        CertificateJson::Obstruction { cup, class, dual } => VerdictCertificate::Obstruction {
            cup: *cup,
            class: elem(class)?,
            dual: dual_from_json(&model, &char_index, dual)
                .map_err(CertificateError::Malformed)?,
        },
    };
    let result = MasseyResult {
        inputs: [elem(&j.inputs[0])?, elem(&j.inputs[1])?, elem(&j.inputs[2])?],
        bidegrees: j.bidegrees,
        f13: elem(&j.f13)?,
        f24: elem(&j.f24)?,
        representative: elem(&j.representative)?,
        indeterminacy: j
            .indeterminacy
            .iter()
            .map(&elem)
            .collect::<Result<Vec<_>, _>>()?,
        space: span_from_json(&model, &char_index, &j.space)
            .map_err(CertificateError::Malformed)?,
        verdict,
        certificate,
        hypotheses: j.hypotheses.clone(),
        character_set: crate::character::CharacterSet::closed(
            model.arity(),
            j.character_set
                .iter()
                .map(|e| Character::from_exponents(e.clone())),
        ),
    };
    Ok(LoadedMassey { model, result })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AsthenoCertificateJson {
    pub schema: u32,
    pub model: ModelJson,
    pub beta: ElementJson,
    pub eta: ElementJson,
    pub scale: ScalarJson,
    pub pair: (usize, usize),
}

pub fn astheno_to_json(m: &ManifoldModel, c: &AsthenoCertificate) -> AsthenoCertificateJson {
    AsthenoCertificateJson {
        schema: SCHEMA_VERSION,
        model: model_to_json(m),
        beta: element_to_json(m, &c.beta),
        eta: element_to_json(m, &c.eta),
        scale: scalar_to_json(&c.scale),
        pair: c.pair,
    }
}

pub struct LoadedAstheno {
    pub model: ManifoldModel,
    pub certificate: AsthenoCertificate,
}

pub fn astheno_from_json(j: &AsthenoCertificateJson) -> Result<LoadedAstheno, CertificateError> {
    let model = model_from_json(&j.model)
        .map_err(|e| CertificateError::Malformed(format!("embedded model: {e}")))?;
    let char_index: BTreeMap<String, usize> = model
        .basis_characters()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.clone(), i))
        .collect();
    let beta = element_from_json(model.arity(), model.dim(), &char_index, &j.beta)
        .map_err(CertificateError::Malformed)?;
    let eta = element_from_json(model.arity(), model.dim(), &char_index, &j.eta)
        .map_err(CertificateError::Malformed)?;
    let scale = scalar_from_json(&j.scale).map_err(CertificateError::Malformed)?;
    Ok(LoadedAstheno {
        model,
        certificate: AsthenoCertificate {
            beta,
            eta,
            scale,
            pair: j.pair,
        },
    })
}

// ---------------------------------------------------------------------
// plain-text tables
// ---------------------------------------------------------------------

/// Render rows of equal length as an aligned plain-text table.
pub fn render_table(header: &[String], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String]| -> String {
        let mut line = String::new();
        for i in 0..ncols {
            if i > 0 {
                line.push_str("  ");
            }
            let cell = &cells[i];
            line.push_str(cell);
            for _ in cell.chars().count()..widths[i] {
                line.push(' ');
            }
        }
        line.trim_end().to_string()
    };
    out.push_str(&fmt_row(header));
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 2 * (ncols - 1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

/// Human-readable character name over the model's labels.
pub fn character_display(m: &ManifoldModel, chi: &Character) -> String {
    if chi.is_trivial() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (i, &e) in chi.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let label = &m.basis_characters()[i].label;
        if e == 1 {
            parts.push(label.clone());
        } else {
            parts.push(format!("{label}{{{e}}}"));
        }
    }
    parts.join("*")
}

/// Human-readable element over the model's labels. Deterministic: terms
/// in canonical key order.
pub fn element_display(m: &ManifoldModel, e: &Element) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let bar_label = |label: &str| -> String {
        let split = label
            .char_indices()
            .find(|(_, ch)| ch.is_ascii_digit())
            .map(|(i, _)| i)
            .unwrap_or(label.len());
        format!("{}bar{}", &label[..split], &label[split..])
    };
    let mut parts = Vec::new();
    for (k, c) in e.iter() {
        let mut factors = Vec::new();
        if !c.is_one() {
            factors.push(format!("({c})"));
        }
        if !k.character.is_trivial() {
            factors.push(character_display(m, &k.character));
        }
        for i in k.monomial.holo_indices() {
            factors.push(m.coframe_labels()[i].clone());
        }
        for i in k.monomial.anti_indices() {
            factors.push(bar_label(&m.coframe_labels()[i]));
        }
        if factors.is_empty() {
            factors.push("1".into());
        }
        parts.push(factors.join("^"));
    }
    parts.join(" + ")
}

pub fn rational_display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn model_roundtrip_all_families() {
        let models = vec![
            families::torus(2).unwrap(),
            families::bigalke_rollenske(2).unwrap(),
            families::nakamura(&families::NakamuraParams {
                lambdas: vec![crate::scalar::ratio(1, 1), crate::scalar::ratio(-1, 1)],
                t: crate::scalar::ratio(1, 1),
            })
            .unwrap()
            .model,
            families::semidirect_family(&families::SemidirectParams {
                n: 1,
                m: 1,
                lambda: crate::scalar::ratio(1, 1),
                ks: vec![1, 1],
            })
            .unwrap(),
        ];
        for m in models {
            let s = model_to_json_string(&m);
            let back = model_from_json_str(&s).unwrap();
            assert_eq!(model_to_json_string(&back), s, "roundtrip of {}", m.name());
        }
    }

    #[test]
    fn bad_model_is_rejected() {
        // a (0,2) structure component is not integrable
        let json = r#"{
            "schema": 1, "name": "bad", "n": 2,
            "coframe": ["phi1", "phi2"],
            "structure": [{"target": "phi1",
                "terms": [{"coeff": [1,1,0,1], "anti": [1,2]}]}],
            "metric": [[1,1],[1,1]]
        }"#;
        match model_from_json_str(json) {
            Err(ModelError::NotIntegrable { .. }) => {}
            other => panic!("expected NotIntegrable, got {other:?}"),
        }
    }

    #[test]
    fn element_display_uses_labels() {
        let m = families::bigalke_rollenske(2).unwrap();
        let e = Element::monomial(0, crate::monomial::FormMonomial::from_indices(&[4], &[4]));
        assert_eq!(element_display(&m, &e), "phi5^phibar5");
    }
}
