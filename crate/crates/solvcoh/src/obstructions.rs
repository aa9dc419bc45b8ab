//! Metric obstruction scans: ∂∂̄-exact positive (2,2)-forms rule out
//! astheno-Kähler metrics (pairing against a suitable metric power is
//! simultaneously positive and zero by Stokes), and the invariant
//! canonical-section report covers plurigenera and Kodaira dimension at
//! the invariant level.

use rayon::prelude::*;

use crate::cohomology::{solve_membership, Generator, Membership, SpanSpec};
use crate::element::Element;
use crate::error::{CertificateError, ObstructionError};
use crate::model::{DiffKind, ManifoldModel};
use crate::scalar::Scalar;

/// Exact witness that no astheno-Kähler metric exists: a nonzero simple
/// (2,0)-form `β` and a (1,1)-form `η` with
/// `∂∂̄ η = scale · β ∧ conj(β)`, `scale` a nonzero real rational.
#[derive(Clone, Debug)]
pub struct AsthenoCertificate {
    pub beta: Element,
    pub eta: Element,
    pub scale: Scalar,
    /// Which pool pair produced the hit.
    pub pair: (usize, usize),
}

/// A (2,0)-form is decomposable iff it is nonzero and `β ∧ β = 0`.
fn is_decomposable_two_form(beta: &Element) -> bool {
    !beta.is_zero() && beta.wedge(beta).is_zero()
}

/// Scan all unordered pairs of pool elements: for `β = θ_i ∧ θ_j`, test
/// `β ∧ conj(β) ∈ im ∂∂̄` at the trivial character and emit a certificate
/// per hit. The scan is exhaustive over the pool, so any certifiable pair
/// from it is found. Pool elements must be (1,0)-forms with constant
/// coefficients carrying a single character each.
pub fn astheno_obstruction_scan(
    m: &ManifoldModel,
    pool: &[Element],
) -> Result<Vec<AsthenoCertificate>, ObstructionError> {
    for (i, theta) in pool.iter().enumerate() {
        if theta.is_zero() || theta.homogeneous_bidegree() != Some((1, 0)) {
            return Err(ObstructionError::PoolNotOneZero { index: i });
        }
        if !theta.is_character_homogeneous() {
            return Err(ObstructionError::PoolMixedCharacter { index: i });
        }
    }
    let pairs: Vec<(usize, usize)> = (0..pool.len())
        .flat_map(|i| ((i + 1)..pool.len()).map(move |j| (i, j)))
        .collect();
    let mut hits: Vec<AsthenoCertificate> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let beta = pool[i].wedge(&pool[j]);
            if beta.is_zero() {
                return None;
            }
            let target = beta.wedge(&beta.conjugate());
            if target.is_zero() {
                return None;
            }
            debug_assert!(target.characters().iter().all(|c| c.is_trivial()));
            let space = SpanSpec {
                images: vec![SpanSpec::image(
                    DiffKind::DDbar,
                    vec![m.trivial_character()],
                    1,
                    1,
                )],
                fixed: Vec::new(),
            };
            match solve_membership(m, &target, &space) {
                Ok(Membership::Member(witness)) => {
                    let mut eta = Element::zero();
                    for (c, g) in &witness.combination {
                        match g {
                            Generator::Image { preimage, .. } => {
                                eta.add_assign(&preimage.scale(c))
                            }
                            Generator::Fixed { .. } => unreachable!(),
                        }
                    }
                    Some(AsthenoCertificate {
                        beta,
                        eta,
                        scale: Scalar::one(),
                        pair: (i, j),
                    })
                }
                _ => None,
            }
        })
        .collect();
    hits.sort_by_key(|c| c.pair);
    Ok(hits)
}

/// Re-verify a certificate by pure substitution: recompute `∂∂̄ η`,
/// compare against `scale · β ∧ conj(β)`, and check β is a nonzero
/// decomposable (2,0)-form of a single character with real nonzero scale.
pub fn verify_astheno_certificate(
    m: &ManifoldModel,
    cert: &AsthenoCertificate,
) -> Result<(), CertificateError> {
    if cert.beta.is_zero() {
        return Err(CertificateError::ZeroBeta);
    }
    if cert.beta.homogeneous_bidegree() != Some((2, 0)) {
        return Err(CertificateError::BetaNotTwoZero);
    }
    if !cert.beta.is_character_homogeneous() {
        return Err(CertificateError::BetaMixedCharacter);
    }
    if !is_decomposable_two_form(&cert.beta) {
        return Err(CertificateError::NotDecomposable);
    }
    if cert.scale.is_zero() || !cert.scale.is_real() {
        return Err(CertificateError::BadScale);
    }
    let pairing = cert.beta.wedge(&cert.beta.conjugate());
    if !pairing.characters().iter().all(|c| c.is_trivial()) {
        return Err(CertificateError::NontrivialPairing);
    }
    let lhs = m.ddbar(&cert.eta);
    let rhs = pairing.scale(&cert.scale);
    if lhs != rhs {
        return Err(CertificateError::EquationFails);
    }
    Ok(())
}

/// Human-readable contradiction sketch for one certificate: the Stokes
/// pairing against the (dim-2) metric power is simultaneously positive
/// (transversality of metric powers on a simple nonzero β) and zero
/// (∂∂̄-exactness plus integration by parts).
pub fn astheno_proof_sketch(m: &ManifoldModel, cert: &AsthenoCertificate) -> String {
    let dim = m.dim();
    format!(
        "suppose ω is the fundamental form of an astheno-Kähler metric, so ∂∂̄(ω^{power}) = 0;\n\
         then 0 < ∫ ω^{power} ∧ β∧β̄          (β = {beta} is simple and nonzero; metric powers are transverse)\n\
              = (1/{scale}) ∫ ω^{power} ∧ ∂∂̄η   (certificate equation, η = {eta})\n\
              = (1/{scale}) ∫ ∂∂̄(ω^{power}) ∧ η (integration by parts, Stokes)\n\
              = 0,\n\
         a contradiction; hence no astheno-Kähler metric exists.",
        power = dim.saturating_sub(2),
        beta = cert.beta,
        eta = cert.eta,
        scale = cert.scale,
    )
}

/// Report of the invariant canonical-section computation.
#[derive(Clone, Debug)]
pub struct CanonicalSectionReport {
    /// `∂̄` of the top (n,0) coframe monomial.
    pub dbar_top: Element,
    /// True when the invariant canonical section is holomorphic.
    pub holomorphic: bool,
    /// With a holomorphic invariant section, every power is holomorphic
    /// too (the ∂̄-condition on `f·(section)^r` reduces to `∂̄f = 0` by the
    /// Leibniz rule), so all invariant plurigenera equal 1.
    pub plurigenera_all_one: bool,
    /// Kodaira dimension at the level the invariant computation covers:
    /// `Some(0)` when all plurigenera are 1, `None` otherwise.
    pub kodaira_dimension: Option<i64>,
}

/// Compute `∂̄` of the invariant section of the canonical bundle (the top
/// (n,0) coframe monomial) and report the plurigenera consequences.
pub fn canonical_section_check(m: &ManifoldModel) -> CanonicalSectionReport {
    let top = Element::monomial(
        m.arity(),
        crate::monomial::FormMonomial::new(crate::monomial::full_mask(m.dim()), 0),
    );
    let dbar = m.differential(&top, DiffKind::DelBar);
    let holomorphic = dbar.is_zero();
    CanonicalSectionReport {
        dbar_top: dbar,
        holomorphic,
        plurigenera_all_one: holomorphic,
        kodaira_dimension: if holomorphic { Some(0) } else { None },
    }
}

/// Default scan pool of a model: its (1,0) coframe.
pub fn default_pool(m: &ManifoldModel) -> Vec<Element> {
    (0..m.dim())
        .map(|i| {
            Element::monomial(
                m.arity(),
                crate::monomial::FormMonomial::from_indices(&[i], &[]),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::monomial::FormMonomial;

    #[test]
    fn bigalke_rollenske_scan_hits_the_certificate() {
        let m = families::bigalke_rollenske(2).unwrap();
        let hits = astheno_obstruction_scan(&m, &default_pool(&m)).unwrap();
        // β = φ2∧φ4, η = -φ5∧φ̄5, scale 1 must be among the hits
        let beta = Element::monomial(0, FormMonomial::from_indices(&[1, 3], &[]));
        let eta = Element::monomial(0, FormMonomial::from_indices(&[4], &[4])).neg();
        let hit = hits
            .iter()
            .find(|c| c.beta == beta)
            .expect("expected the (phi2, phi4) certificate");
        assert_eq!(hit.eta, eta);
        assert_eq!(hit.scale, Scalar::one());
        for c in &hits {
            verify_astheno_certificate(&m, c).unwrap();
        }
    }

    #[test]
    fn tampered_certificates_fail() {
        let m = families::bigalke_rollenske(2).unwrap();
        let hits = astheno_obstruction_scan(&m, &default_pool(&m)).unwrap();
        let mut bad = hits[0].clone();
        bad.scale = Scalar::from_int(2);
        assert_eq!(
            verify_astheno_certificate(&m, &bad),
            Err(CertificateError::EquationFails)
        );
        let mut nonsimple = hits[0].clone();
        nonsimple.beta = Element::monomial(0, FormMonomial::from_indices(&[0, 1], &[]))
            .add(&Element::monomial(0, FormMonomial::from_indices(&[2, 3], &[])));
        assert_eq!(
            verify_astheno_certificate(&m, &nonsimple),
            Err(CertificateError::NotDecomposable)
        );
    }

    #[test]
    fn canonical_section_reports() {
        let br = families::bigalke_rollenske(2).unwrap();
        let r = canonical_section_check(&br);
        assert!(r.holomorphic);
        assert_eq!(r.kodaira_dimension, Some(0));

        let torus = families::torus(3).unwrap();
        assert!(canonical_section_check(&torus).holomorphic);

        let nak = families::nakamura(&families::NakamuraParams {
            lambdas: vec![crate::scalar::ratio(1, 1), crate::scalar::ratio(-1, 1)],
            t: crate::scalar::ratio(1, 1),
        })
        .unwrap();
        // Σλ = 0 makes the section holomorphic
        assert!(canonical_section_check(&nak.model).holomorphic);

        // the semidirect family has a non-holomorphic invariant section
        let semi = families::semidirect_family(&families::SemidirectParams {
            n: 1,
            m: 1,
            lambda: crate::scalar::ratio(1, 1),
            ks: vec![1, 1],
        })
        .unwrap();
        let r = canonical_section_check(&semi);
        assert!(!r.holomorphic);
        assert!(!r.dbar_top.is_zero());
        assert_eq!(r.kodaira_dimension, None);
    }

    #[test]
    fn bad_pool_is_rejected() {
        let m = families::torus(2).unwrap();
        let bad = vec![Element::monomial(0, FormMonomial::from_indices(&[], &[0]))];
        assert!(matches!(
            astheno_obstruction_scan(&m, &bad),
            Err(ObstructionError::PoolNotOneZero { index: 0 })
        ));
    }
}
