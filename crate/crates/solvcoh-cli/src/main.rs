//! Command-line front end: model validation, cohomology tables, harmonic
//! bases, triple products with certificates, obstruction scans, family
//! generation and certificate re-verification.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation/certificate
//! failure, 4 undefined product, 5 internal error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use solvcoh::character::CharacterSet;
use solvcoh::cohomology::{self, Theory};
use solvcoh::element::Element;
use solvcoh::expr::parse_element;
use solvcoh::families;
use solvcoh::hodge::{HarmonicKind, MetricContext};
use solvcoh::io as sio;
use solvcoh::massey::{self, Verdict, ZeroReason};
use solvcoh::model::ManifoldModel;
use solvcoh::obstructions;
use solvcoh::scalar::Rational;

const EXIT_PARSE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_UNDEFINED: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(
    name = "solvcoh",
    about = "Exact cohomology, Hodge theory, triple products and metric \
             obstructions for invariant complex structures on solvmanifold models",
    version
)]
struct Cli {
    /// Worker threads for blockwise computations (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Clone)]
struct ModelArg {
    /// Model JSON file; "-" or omitted reads stdin.
    #[arg(long, default_value = "-")]
    model: String,
    /// Restrict the declared character set to exponents bounded by N.
    #[arg(long)]
    char_bound: Option<i32>,
}

#[derive(Subcommand)]
enum Command {
    /// Load a model and report every validation invariant.
    Validate(ModelArg),
    /// Cohomology dimension tables (optionally with representatives).
    Cohomology {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = TheoryArg::All)]
        theory: TheoryArg,
        /// Print representatives as well as dimensions.
        #[arg(long)]
        reps: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// First-order harmonic bases per bidegree.
    Harmonics {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = KindArg::BottChern)]
        kind: KindArg,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Triple product of three Bott-Chern classes given as expressions.
    Massey {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        a12: String,
        #[arg(long)]
        a23: String,
        #[arg(long)]
        a34: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Re-verify a serialized certificate without recomputation.
    Certify {
        /// Certificate JSON file; "-" or omitted reads stdin.
        #[arg(long, default_value = "-")]
        certificate: String,
    },
    /// Scan wedge pairs from a pool of (1,0)-forms for ∂∂̄-exact
    /// positive (2,2)-forms (each hit rules out astheno-Kähler metrics).
    Astheno {
        #[command(flatten)]
        model: ModelArg,
        /// Extra pool elements, ';'-separated expressions.
        #[arg(long)]
        pool: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Emit a family model as JSON (or its condition flags).
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Compare the three complex cohomologies and the natural maps.
    DdbarCheck {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Invariant canonical-section report (plurigenera, Kodaira dim).
    Canonical {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    All,
    Dolbeault,
    BottChern,
    Aeppli,
    DeRham,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    BottChern,
    Aeppli,
}

impl KindArg {
    fn kind(self) -> HarmonicKind {
        match self {
            KindArg::BottChern => HarmonicKind::BottChern,
            KindArg::Aeppli => HarmonicKind::Aeppli,
        }
    }
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Complex torus of dimension n.
    Torus {
        #[arg(long)]
        n: usize,
    },
    /// Bigalke-Rollenske nilmanifold of parameter n (dimension 4n-2).
    BigalkeRollenske {
        #[arg(long)]
        n: usize,
    },
    /// Generalized Nakamura model from weights and lattice ratio.
    Nakamura {
        /// Comma-separated rational weights, e.g. "1,-1" or "1/2,1/2,-1".
        #[arg(long)]
        lambda: String,
        /// Rational lattice ratio, e.g. "1" or "1/3".
        #[arg(long)]
        t: String,
        /// Print the admissibility flags instead of the model.
        #[arg(long)]
        flags: bool,
    },
    /// Semidirect-product model with paired exponential characters.
    Semidirect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Nonzero rational weight.
        #[arg(long)]
        lambda: String,
        /// Comma-separated integers (2n of them); defaults to all 1.
        #[arg(long)]
        ks: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .is_err()
        {
            eprintln!("warning: thread pool already initialized");
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn err(code: u8, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| err(EXIT_INTERNAL, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| err(EXIT_INTERNAL, format!("reading {path}: {e}")))
    }
}

fn load_model(arg: &ModelArg) -> Result<(ManifoldModel, CharacterSet), CliError> {
    let text = read_input(&arg.model)?;
    let model = sio::model_from_json_str(&text).map_err(|e| {
        let code = match e {
            solvcoh::error::ModelError::Parse(_) => EXIT_PARSE,
            _ => EXIT_VALIDATION,
        };
        err(code, format!("model: {e}"))
    })?;
    let mut set = model.default_character_set();
    if let Some(bound) = arg.char_bound {
        if bound < 0 {
            return Err(err(EXIT_PARSE, "char-bound must be nonnegative"));
        }
        set = CharacterSet::closed(
            model.arity(),
            set.iter()
                .filter(|c| c.exponents().iter().all(|e| e.abs() <= bound))
                .cloned(),
        );
    }
    Ok((model, set))
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let parse_int = |t: &str| -> Result<i64, CliError> {
        t.trim()
            .parse::<i64>()
            .map_err(|_| err(EXIT_PARSE, format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let num = parse_int(a)?;
            let den = parse_int(b)?;
            if den == 0 {
                return Err(err(EXIT_PARSE, "zero denominator"));
            }
            Ok(solvcoh::scalar::ratio(num, den))
        }
        None => Ok(solvcoh::scalar::ratio(parse_int(s)?, 1)),
    }
}

fn parse_expr(m: &ManifoldModel, s: &str) -> Result<Element, CliError> {
    parse_element(m, s).map_err(|e| err(EXIT_PARSE, format!("expression {s:?}: {e}")))
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Validate(arg) => cmd_validate(&arg),
        Command::Cohomology {
            model,
            theory,
            reps,
            format,
        } => cmd_cohomology(&model, theory, reps, format),
        Command::Harmonics {
            model,
            kind,
            p,
            q,
            format,
        } => cmd_harmonics(&model, kind.kind(), p, q, format),
        Command::Massey {
            model,
            a12,
            a23,
            a34,
            format,
        } => cmd_massey(&model, &a12, &a23, &a34, format),
        Command::Certify { certificate } => cmd_certify(&certificate),
        Command::Astheno {
            model,
            pool,
            format,
        } => cmd_astheno(&model, pool.as_deref(), format),
        Command::Family { family } => cmd_family(family),
        Command::DdbarCheck { model, format } => cmd_ddbar(&model, format),
        Command::Canonical { model, format } => cmd_canonical(&model, format),
    }
}

fn cmd_validate(arg: &ModelArg) -> Result<ExitCode, CliError> {
    let (model, set) = load_model(arg)?;
    println!("model: {}", model.name());
    println!("complex dimension: {}", model.dim());
    println!(
        "basis characters: {}",
        model
            .basis_characters()
            .iter()
            .map(|c| c.label.clone())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("declared character set: {} element(s)", set.len());
    println!(
        "nilpotent complex structure: {}",
        if model.check_nilpotent() { "yes" } else { "no" }
    );
    for note in model.notes() {
        println!("note: {note}");
    }
    for (check, ok, detail) in model.validation_report().checks {
        println!("check: {check}: {}: {detail}", if ok { "ok" } else { "FAIL" });
    }
    Ok(ExitCode::SUCCESS)
}

fn theory_list(t: TheoryArg) -> Vec<Theory> {
    match t {
        TheoryArg::All => vec![
            Theory::Dolbeault,
            Theory::BottChern,
            Theory::Aeppli,
            Theory::DeRham,
        ],
        TheoryArg::Dolbeault => vec![Theory::Dolbeault],
        TheoryArg::BottChern => vec![Theory::BottChern],
        TheoryArg::Aeppli => vec![Theory::Aeppli],
        TheoryArg::DeRham => vec![Theory::DeRham],
    }
}

fn internal(e: impl std::fmt::Display) -> CliError {
    err(EXIT_INTERNAL, e.to_string())
}

fn cmd_cohomology(
    arg: &ModelArg,
    theory: TheoryArg,
    reps: bool,
    format: Format,
) -> Result<ExitCode, CliError> {
    let (model, set) = load_model(arg)?;
    let n = model.dim();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows = Vec::new();
    for th in theory_list(theory) {
        if th == Theory::DeRham {
            for k in 0..=2 * n {
                let basis = cohomology::de_rham(&model, &set, k).map_err(internal)?;
                push_basis(&model, &basis, reps, &mut rows, &mut json_rows);
            }
        } else {
            for p in 0..=n {
                for q in 0..=n {
                    let basis =
                        cohomology::cohomology(&model, th, &set, p, q).map_err(internal)?;
                    push_basis(&model, &basis, reps, &mut rows, &mut json_rows);
                }
            }
        }
    }
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema": sio::SCHEMA_VERSION,
                "model": model.name(),
                "rows": json_rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
        }
        Format::Table => {
            let header = vec![
                "theory".to_string(),
                "degree".to_string(),
                "dim".to_string(),
                "per-character".to_string(),
            ];
            print!("{}", sio::render_table(&header, &rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn push_basis(
    model: &ManifoldModel,
    basis: &cohomology::CohomologyBasis,
    reps: bool,
    rows: &mut Vec<Vec<String>>,
    json_rows: &mut Vec<serde_json::Value>,
) {
    let per_char = basis
        .per_character
        .iter()
        .filter(|(_, d)| *d > 0)
        .map(|(c, d)| format!("{}:{}", sio::character_display(model, c), d))
        .collect::<Vec<_>>()
        .join(" ");
    rows.push(vec![
        basis.theory.name().to_string(),
        basis.degree.to_string(),
        basis.dimension().to_string(),
        per_char,
    ]);
    if reps {
        for r in &basis.representatives {
            rows.push(vec![
                String::new(),
                String::new(),
                String::new(),
                sio::element_display(model, r),
            ]);
        }
    }
    json_rows.push(serde_json::json!({
        "theory": basis.theory.name(),
        "degree": basis.degree.to_string(),
        "dimension": basis.dimension(),
        "representatives": if reps {
            basis
                .representatives
                .iter()
                .map(|r| serde_json::to_value(sio::element_to_json(model, r)).unwrap())
                .collect::<Vec<_>>()
        } else {
            Vec::new()
        },
    }));
}

fn cmd_harmonics(
    arg: &ModelArg,
    kind: HarmonicKind,
    p: Option<usize>,
    q: Option<usize>,
    format: Format,
) -> Result<ExitCode, CliError> {
    let (model, set) = load_model(arg)?;
    let ctx = MetricContext::new(&model);
    let n = model.dim();
    let degrees: Vec<(usize, usize)> = match (p, q) {
        (Some(p), Some(q)) => vec![(p, q)],
        (None, None) => (0..=n).flat_map(|p| (0..=n).map(move |q| (p, q))).collect(),
        _ => return Err(err(EXIT_PARSE, "--p and --q must be given together")),
    };
    let mut json_rows = Vec::new();
    let mut rows = Vec::new();
    for (p, q) in degrees {
        let basis = ctx.harmonic_basis(kind, p, q, &set);
        rows.push(vec![
            format!("({p},{q})"),
            basis.len().to_string(),
            String::new(),
        ]);
        for b in &basis {
            rows.push(vec![
                String::new(),
                String::new(),
                sio::element_display(&model, b),
            ]);
        }
        json_rows.push(serde_json::json!({
            "bidegree": [p, q],
            "dimension": basis.len(),
            "basis": basis
                .iter()
                .map(|b| serde_json::to_value(sio::element_to_json(&model, b)).unwrap())
                .collect::<Vec<_>>(),
        }));
    }
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema": sio::SCHEMA_VERSION,
                "model": model.name(),
                "kind": kind.name(),
                "rows": json_rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
        }
        Format::Table => {
            let header = vec![
                "bidegree".to_string(),
                "dim".to_string(),
                "basis".to_string(),
            ];
            print!("{}", sio::render_table(&header, &rows));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_massey(
    arg: &ModelArg,
    a12: &str,
    a23: &str,
    a34: &str,
    format: Format,
) -> Result<ExitCode, CliError> {
    let (model, set) = load_model(arg)?;
    let e12 = parse_expr(&model, a12)?;
    let e23 = parse_expr(&model, a23)?;
    let e34 = parse_expr(&model, a34)?;
    let result = massey::triple_abc_massey(&model, &e12, &e23, &e34, &set)
        .map_err(|e| err(EXIT_VALIDATION, e.to_string()))?;
    let pairing = if result.verdict == Verdict::NonVanishing {
        Some(massey::pairing_certificate(&model, &result))
    } else {
        None
    };
    match format {
        Format::Json => {
            let doc = sio::massey_to_json(&model, &result);
            println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
        }
        Format::Table => {
            println!("verdict: {}", result.verdict.name());
            println!(
                "representative: {}",
                sio::element_display(&model, &result.representative)
            );
            println!("f13: {}", sio::element_display(&model, &result.f13));
            println!("f24: {}", sio::element_display(&model, &result.f24));
            println!(
                "indeterminacy generators: {}",
                result.indeterminacy.len()
            );
            for h in &result.hypotheses {
                println!("hypothesis: {h}");
            }
            match &result.certificate {
                massey::VerdictCertificate::Witness(w) => {
                    println!("certificate: membership witness, {} terms", w.combination.len());
                }
                massey::VerdictCertificate::Dual(d) => {
                    println!(
                        "certificate: dual functional on {} coordinates",
                        d.entries.len()
                    );
                }
                massey::VerdictCertificate::Obstruction { cup, class, .. } => {
                    println!(
                        "certificate: cup product {cup} obstructed by {}",
                        sio::element_display(&model, class)
                    );
                }
            }
            if let Some(p) = pairing {
                match p {
                    Ok(cert) => {
                        println!("pairing certificate: C = {}", cert.constant);
                        let vanishing = cert
                            .entries
                            .iter()
                            .filter(|e| e.reason == ZeroReason::VanishingForm)
                            .count();
                        if vanishing > 0 {
                            println!(
                                "  {vanishing} indeterminacy pairing(s) vanish as forms"
                            );
                        }
                        for e in &cert.entries {
                            if let ZeroReason::CharacterOrthogonality(c) = &e.reason {
                                println!(
                                    "  pairing with indeterminacy generator {} is a multiple of the nontrivial character {}, which integrates to zero",
                                    e.generator_index,
                                    sio::character_display(&model, c)
                                );
                            }
                        }
                        println!(
                            "  exact terms integrate to zero: representative is Aeppli-harmonic and the model satisfies the Stokes identity"
                        );
                        println!("  conclusion: C·∫Ω = 0 is contradictory, class does not vanish");
                    }
                    Err(e) => println!("pairing certificate: not applicable ({e})"),
                }
            }
        }
    }
    if result.verdict == Verdict::Undefined {
        return Ok(ExitCode::from(EXIT_UNDEFINED));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(path: &str) -> Result<ExitCode, CliError> {
    let text = read_input(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| err(EXIT_PARSE, format!("certificate: {e}")))?;
    if value.get("beta").is_some() {
        let doc: sio::AsthenoCertificateJson = serde_json::from_value(value)
            .map_err(|e| err(EXIT_PARSE, format!("certificate: {e}")))?;
        let loaded = sio::astheno_from_json(&doc)
            .map_err(|e| err(EXIT_VALIDATION, format!("certificate: {e}")))?;
        obstructions::verify_astheno_certificate(&loaded.model, &loaded.certificate)
            .map_err(|e| err(EXIT_VALIDATION, format!("certificate rejected: {e}")))?;
        println!("certificate: astheno obstruction: verified");
        Ok(ExitCode::SUCCESS)
    } else if value.get("representative").is_some() {
        let doc: sio::MasseyResultJson = serde_json::from_value(value)
            .map_err(|e| err(EXIT_PARSE, format!("certificate: {e}")))?;
        let loaded = sio::massey_from_json(&doc)
            .map_err(|e| err(EXIT_VALIDATION, format!("certificate: {e}")))?;
        massey::verify_massey_result(&loaded.model, &loaded.result)
            .map_err(|e| err(EXIT_VALIDATION, format!("certificate rejected: {e}")))?;
        println!(
            "certificate: triple product ({}): verified",
            loaded.result.verdict.name()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        Err(err(
            EXIT_PARSE,
            "unrecognized certificate document (expected a triple-product or astheno certificate)",
        ))
    }
}

fn cmd_astheno(arg: &ModelArg, pool_arg: Option<&str>, format: Format) -> Result<ExitCode, CliError> {
    let (model, _) = load_model(arg)?;
    let mut pool = obstructions::default_pool(&model);
    if let Some(extra) = pool_arg {
        for part in extra.split(';') {
            let part = part.trim();
            if !part.is_empty() {
                pool.push(parse_expr(&model, part)?);
            }
        }
    }
    let hits = obstructions::astheno_obstruction_scan(&model, &pool)
        .map_err(|e| err(EXIT_VALIDATION, e.to_string()))?;
    match format {
        Format::Json => {
            let docs: Vec<_> = hits
                .iter()
                .map(|c| sio::astheno_to_json(&model, c))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&docs).map_err(internal)?
            );
        }
        Format::Table => {
            if hits.is_empty() {
                println!("no certificates found over the given pool");
            }
            for c in &hits {
                println!("certificate:");
                println!("  beta  = {}", sio::element_display(&model, &c.beta));
                println!("  eta   = {}", sio::element_display(&model, &c.eta));
                println!("  scale = {}", c.scale);
                println!("  equation ∂∂̄(eta) = scale·beta∧conj(beta): verified");
                for line in obstructions::astheno_proof_sketch(&model, c).lines() {
                    println!("  | {line}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(cmd: FamilyCommand) -> Result<ExitCode, CliError> {
    let fam_err = |e: families::FamilyError| err(EXIT_VALIDATION, e.to_string());
    match cmd {
        FamilyCommand::Torus { n } => {
            let m = families::torus(n).map_err(fam_err)?;
            println!("{}", sio::model_to_json_string(&m));
        }
        FamilyCommand::BigalkeRollenske { n } => {
            let m = families::bigalke_rollenske(n).map_err(fam_err)?;
            println!("{}", sio::model_to_json_string(&m));
        }
        FamilyCommand::Nakamura { lambda, t, flags } => {
            let lambdas = lambda
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            let t = parse_rational(&t)?;
            let out = families::nakamura(&families::NakamuraParams { lambdas, t })
                .map_err(fam_err)?;
            if flags {
                let doc = serde_json::json!({
                    "schema": sio::SCHEMA_VERSION,
                    "zero_only_admissible": out.zero_only_admissible,
                    "disjoint_nonzero_admissible": out.disjoint_nonzero_admissible,
                    "torus_degenerate": out.torus_degenerate,
                    "admissible_weights": out
                        .admissible_weights
                        .iter()
                        .map(sio::rational_display)
                        .collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
            } else {
                println!("{}", sio::model_to_json_string(&out.model));
            }
        }
        FamilyCommand::Semidirect { n, m, lambda, ks } => {
            let lambda = parse_rational(&lambda)?;
            let ks = match ks {
                None => vec![1i64; 2 * n],
                Some(s) => s
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| err(EXIT_PARSE, format!("bad integer {t:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let model =
                families::semidirect_family(&families::SemidirectParams { n, m, lambda, ks })
                    .map_err(fam_err)?;
            println!("{}", sio::model_to_json_string(&model));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ddbar(arg: &ModelArg, format: Format) -> Result<ExitCode, CliError> {
    let (model, set) = load_model(arg)?;
    let report = cohomology::ddbar_lemma_check(&model, &set).map_err(internal)?;
    match format {
        Format::Json => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "p": r.p, "q": r.q,
                        "dim_bott_chern": r.dim_bc,
                        "dim_dolbeault": r.dim_dolbeault,
                        "dim_aeppli": r.dim_aeppli,
                        "rank_bc_to_dolbeault": r.rank_bc_to_dolbeault,
                        "rank_dolbeault_to_aeppli": r.rank_dolbeault_to_aeppli,
                        "isomorphisms": r.bc_to_dolbeault_iso() && r.dolbeault_to_aeppli_iso(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "schema": sio::SCHEMA_VERSION,
                "model": model.name(),
                "holds": report.holds,
                "rows": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
        }
        Format::Table => {
            let header: Vec<String> = ["(p,q)", "h_bc", "h_dol", "h_a", "rk bc→dol", "rk dol→a", "iso"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        format!("({},{})", r.p, r.q),
                        r.dim_bc.to_string(),
                        r.dim_dolbeault.to_string(),
                        r.dim_aeppli.to_string(),
                        r.rank_bc_to_dolbeault.to_string(),
                        r.rank_dolbeault_to_aeppli.to_string(),
                        if r.bc_to_dolbeault_iso() && r.dolbeault_to_aeppli_iso() {
                            "yes".into()
                        } else {
                            "NO".into()
                        },
                    ]
                })
                .collect();
            print!("{}", sio::render_table(&header, &rows));
            println!(
                "model-level ∂∂̄-lemma: {}",
                if report.holds { "holds" } else { "fails" }
            );
            println!(
                "note: statement covers the finite invariant complex over the declared characters"
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_canonical(arg: &ModelArg, format: Format) -> Result<ExitCode, CliError> {
    let (model, _) = load_model(arg)?;
    let r = obstructions::canonical_section_check(&model);
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema": sio::SCHEMA_VERSION,
                "model": model.name(),
                "holomorphic": r.holomorphic,
                "dbar_top": sio::element_to_json(&model, &r.dbar_top),
                "plurigenera_all_one": r.plurigenera_all_one,
                "kodaira_dimension": r.kodaira_dimension,
            });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(internal)?);
        }
        Format::Table => {
            if r.holomorphic {
                println!("∂̄(top (n,0) coframe form) = 0: invariant canonical section is holomorphic");
                println!("invariant plurigenera: P_r = 1 for all r ≥ 1");
                println!("Kodaira dimension (invariant level): 0");
            } else {
                println!(
                    "∂̄(top (n,0) coframe form) = {} ≠ 0: invariant section is not holomorphic",
                    sio::element_display(&model, &r.dbar_top)
                );
                println!("no invariant-level Kodaira dimension claim");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
