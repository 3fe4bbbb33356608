//! Command-line front end for the hyperforge library.
//!
//! Every subcommand prints a single JSON object to stdout (or to `--out`);
//! `--table` switches stdout to a human-readable rendering instead. The
//! JSON always carries `command` and `timestamp_secs` fields; everything
//! else is deterministic for fixed inputs, so reports can be diffed after
//! dropping the timestamp.
//!
//! Exit codes: `0` when the command ran and its contract holds (axioms
//! pass, the sentence is true, the family is independent, …), `1` when the
//! command ran but the contract does not hold, `2` for usage errors —
//! malformed flags, impossible parameters, unreadable files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hyperforge::algebra::{divisors, prime_power, FiniteAbelianGroup, FiniteField};
use hyperforge::hyperfield::{
    are_isomorphic, cc_subfield_equivalence, enumerate_hyperfields, extension_quotient,
    from_group, is_krasner_within, krasner_quotient, AxiomReport, FiniteHyperfield,
};
use hyperforge::logic::{
    distinguishing_sentence, ef_equivalent, evaluate, group_to_hyperfield_transfer_check,
    parse as parse_sentence, StructureView,
};
use hyperforge::projgeom::geometry_of;
use hyperforge::witness::{
    brute_force_relation_with_budget, build_f2_artin_schreier_family, build_fp_square_family,
    build_gaussian_family, independence_certificate, torsion_rank_report, ConjRing,
    IndependenceCertificate, WitnessFamily, DEFAULT_ORACLE_BUDGET,
};

#[derive(Debug)]
enum CliError {
    Domain(hyperforge::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "invalid JSON: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<hyperforge::Error> for CliError {
    fn from(e: hyperforge::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "hyperforge",
    version,
    about = "Workbench for quotient hyperfields: axioms, incidence geometry, \
             independence witnesses, and first-order logic"
)]
struct Cli {
    /// Print a human-readable rendering to stdout instead of JSON.
    #[arg(long, global = true)]
    table: bool,

    /// Write the JSON report to this file (stdout then stays free for --table).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quotient hyperfield of F_q by the multiplicative subgroup of a given order.
    Quotient {
        /// Prime-power field order.
        #[arg(long)]
        q: u64,
        /// Order of the subgroup G of the multiplicative group (must divide q-1).
        #[arg(long, value_name = "ORDER")]
        g: u64,
    },

    /// Verify the axioms of every quotient hyperfield with q up to a bound,
    /// and tally the CC/addition-closure equivalence for nontrivial subgroups.
    Sweep {
        /// Largest field order to include.
        #[arg(long, default_value_t = 64)]
        bound: u64,
    },

    /// Projective geometry of the quotient of F_{q^n} by the scalars F_q.
    Geometry {
        /// Base field order.
        #[arg(long)]
        q: u64,
        /// Extension degree (at least 2).
        #[arg(long)]
        n: u32,
    },

    /// Desargues configuration check on the geometry of (q, n).
    Desargues {
        /// Base field order.
        #[arg(long)]
        q: u64,
        /// Extension degree (at least 2).
        #[arg(long)]
        n: u32,
    },

    /// Hyperfield built on an abelian group by complement hyperaddition.
    FromGroup {
        /// Invariant factors of the group, comma separated (e.g. 2,2 or 4).
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<u64>,
    },

    /// Isomorphism test between two structure files.
    Iso {
        /// JSON file holding the first structure.
        left: PathBuf,
        /// JSON file holding the second structure.
        right: PathBuf,
    },

    /// Search for a field quotient presentation of a structure file.
    IsKrasner {
        /// JSON file holding the structure.
        structure: PathBuf,
        /// Largest field order to try.
        #[arg(long, default_value_t = 64)]
        q_max: u64,
    },

    /// All hyperfields of a given order, up to isomorphism.
    Enumerate {
        /// Carrier size (zero element included); at most 5.
        #[arg(long, default_value_t = 4)]
        order: usize,
    },

    /// Independence witness family with its certificate and oracle cross-check.
    Witness {
        /// Which quadratic extension supplies the split primes.
        #[arg(long, value_enum)]
        case: WitnessCase,
        /// Family size.
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// Exponent bound for the exhaustive relation search.
        #[arg(long, default_value_t = 2)]
        oracle_bound: u32,
        /// Base-field characteristic; only the fp-square case reads it.
        #[arg(long, default_value_t = 3)]
        p: u64,
    },

    /// Coset torsion report for the quotient of F_{q^2} units by F_q units.
    TorsionReport {
        /// Base field order.
        #[arg(long)]
        q: u64,
    },

    /// Evaluate a closed formula on a structure file.
    Eval {
        /// JSON file holding the structure.
        #[arg(long)]
        structure: PathBuf,
        /// Sentence in the workbench grammar, e.g. "forall x. add(x, 0, x)".
        #[arg(long)]
        formula: String,
    },

    /// Ehrenfeucht-Fraisse equivalence of two structure files at a depth.
    Ef {
        /// JSON file holding the first structure.
        left: PathBuf,
        /// JSON file holding the second structure.
        right: PathBuf,
        /// Number of game rounds (at most 4).
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },

    /// Sentence separating two structure files, when one exists at the depth.
    Distinguish {
        /// JSON file holding the structure the sentence will be true in.
        left: PathBuf,
        /// JSON file holding the structure the sentence will be false in.
        right: PathBuf,
        /// Largest quantifier depth to try (at most 4).
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },

    /// Check that group equivalence at a depth transfers to the built hyperfields.
    TransferCheck {
        /// Invariant factors of the first group, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<u64>,
        /// Invariant factors of the second group, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<u64>,
        /// Number of game rounds (at most 4).
        #[arg(long, default_value_t = 2)]
        depth: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WitnessCase {
    /// Gaussian integers over the rationals.
    Gauss,
    /// F_p(X) over F_p(X^2), odd p.
    FpSquare,
    /// F_2(X) over F_2(X^2+X).
    ArtinSchreier,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    process::exit(code);
}

/// One command's results: the JSON body, the table rendering, and the exit
/// code its contract dictates.
struct Report {
    command: &'static str,
    body: Value,
    rendered: String,
    exit: i32,
}

fn run(cli: &Cli) -> CliResult<i32> {
    let report = match &cli.command {
        Command::Quotient { q, g } => cmd_quotient(*q, *g)?,
        Command::Sweep { bound } => cmd_sweep(*bound)?,
        Command::Geometry { q, n } => cmd_geometry(*q, *n)?,
        Command::Desargues { q, n } => cmd_desargues(*q, *n)?,
        Command::FromGroup { factors } => cmd_from_group(factors)?,
        Command::Iso { left, right } => cmd_iso(left, right)?,
        Command::IsKrasner { structure, q_max } => cmd_is_krasner(structure, *q_max)?,
        Command::Enumerate { order } => cmd_enumerate(*order)?,
        Command::Witness {
            case,
            k,
            oracle_bound,
            p,
        } => cmd_witness(*case, *k, *oracle_bound, *p)?,
        Command::TorsionReport { q } => cmd_torsion_report(*q)?,
        Command::Eval { structure, formula } => cmd_eval(structure, formula)?,
        Command::Ef { left, right, depth } => cmd_ef(left, right, *depth)?,
        Command::Distinguish { left, right, depth } => cmd_distinguish(left, right, *depth)?,
        Command::TransferCheck { left, right, depth } => cmd_transfer(left, right, *depth)?,
    };
    emit(cli, &report)?;
    Ok(report.exit)
}

fn emit(cli: &Cli, report: &Report) -> CliResult<()> {
    let mut object = report
        .body
        .as_object()
        .cloned()
        .expect("report bodies are JSON objects");
    object.insert("command".into(), json!(report.command));
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    object.insert("timestamp_secs".into(), json!(timestamp));
    let text = serde_json::to_string_pretty(&Value::Object(object))? + "\n";
    if let Some(path) = &cli.out {
        fs::write(path, &text)?;
        if cli.table {
            print!("{}", report.rendered);
        }
    } else if cli.table {
        print!("{}", report.rendered);
    } else {
        print!("{text}");
    }
    Ok(())
}

/// Reads a structure from a JSON file: either a bare structure object or a
/// report that carries one under a `structure` key.
fn load_structure(path: &Path) -> CliResult<FiniteHyperfield> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)?;
    let inner = match value.get("structure") {
        Some(s) => s.clone(),
        None => value,
    };
    Ok(serde_json::from_value(inner)?)
}

/// Effective oracle step budget: `HYPERFORGE_BUDGET` when set, else the
/// library default.
fn oracle_budget() -> CliResult<u64> {
    match std::env::var("HYPERFORGE_BUDGET") {
        Ok(raw) => raw.parse::<u64>().map_err(|_| {
            CliError::Usage(format!(
                "HYPERFORGE_BUDGET must be a positive integer, got `{raw}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET as u64),
    }
}

fn axiom_lines(report: &AxiomReport) -> String {
    report
        .verdicts()
        .iter()
        .map(|(name, verdict)| match &verdict.counterexample {
            _ if verdict.passed => format!("  {name}: pass\n"),
            Some(witness) => format!("  {name}: FAIL at {witness:?}\n"),
            None => format!("  {name}: FAIL\n"),
        })
        .collect()
}

fn structure_report(
    command: &'static str,
    headline: String,
    extra: Value,
    h: &FiniteHyperfield,
) -> Report {
    let axioms = h.verify_axioms();
    let all_pass = axioms.all_pass();
    let is_cc = h.is_cc();
    let mut body = json!({
        "structure": h,
        "axioms": axioms,
        "all_pass": all_pass,
        "is_cc": is_cc,
    });
    let merged = body.as_object_mut().expect("literal object");
    for (key, value) in extra.as_object().expect("literal object") {
        merged.insert(key.clone(), value.clone());
    }
    let rendered = format!(
        "{headline}\n{}axioms:\n{}CC: {}\n",
        h.table_string(),
        axiom_lines(&axioms),
        if is_cc { "yes" } else { "no" },
    );
    Report {
        command,
        body,
        rendered,
        exit: i32::from(!all_pass),
    }
}

fn cmd_quotient(q: u64, g: u64) -> CliResult<Report> {
    let field = FiniteField::new(q)?;
    let subgroup = field.subgroup_of_order(g)?;
    let h = krasner_quotient(&field, &subgroup)?;
    Ok(structure_report(
        "quotient",
        format!("quotient of F_{q} by the order-{g} subgroup"),
        json!({ "q": q, "subgroup_order": g, "subgroup": subgroup }),
        &h,
    ))
}

fn cmd_from_group(factors: &[u64]) -> CliResult<Report> {
    if factors.iter().any(|&f| f == 0) {
        return Err(CliError::Usage(
            "group invariant factors must be positive".into(),
        ));
    }
    let group = FiniteAbelianGroup::from_factors(factors);
    let h = from_group(&group)?;
    Ok(structure_report(
        "from-group",
        format!(
            "hyperfield on the abelian group with invariant factors {:?}",
            group.invariant_factors()
        ),
        json!({
            "invariant_factors": group.invariant_factors(),
            "group_order": group.order(),
        }),
        &h,
    ))
}

#[derive(Serialize)]
struct SweepFailure {
    q: u64,
    subgroup_order: u64,
    failed_axioms: Vec<&'static str>,
}

fn cmd_sweep(bound: u64) -> CliResult<Report> {
    let prime_powers: Vec<u64> = (2..=bound).filter(|&q| prime_power(q).is_ok()).collect();
    let mut quotients_checked = 0usize;
    let mut failures: Vec<SweepFailure> = Vec::new();
    let mut equivalence_checked = 0usize;
    let mut equivalence_mismatches = 0usize;
    for &q in &prime_powers {
        let field = FiniteField::new(q)?;
        for d in divisors(q - 1) {
            let subgroup = field.subgroup_of_order(d)?;
            let h = krasner_quotient(&field, &subgroup)?;
            quotients_checked += 1;
            let report = h.verify_axioms();
            if !report.all_pass() {
                failures.push(SweepFailure {
                    q,
                    subgroup_order: d,
                    failed_axioms: report
                        .verdicts()
                        .iter()
                        .filter(|(_, v)| !v.passed)
                        .map(|(name, _)| *name)
                        .collect(),
                });
            }
            if d > 1 {
                equivalence_checked += 1;
                let (lhs, rhs) = cc_subfield_equivalence(&field, &subgroup)?;
                if lhs != rhs {
                    equivalence_mismatches += 1;
                }
            }
        }
    }
    let ok = failures.is_empty() && equivalence_mismatches == 0;
    let rendered = format!(
        "swept {} quotients over {} prime powers up to {bound}\n\
         axiom failures: {}\n\
         CC/addition-closure equivalence: {} checked, {} mismatches\n",
        quotients_checked,
        prime_powers.len(),
        failures.len(),
        equivalence_checked,
        equivalence_mismatches,
    );
    Ok(Report {
        command: "sweep",
        body: json!({
            "bound": bound,
            "prime_powers": prime_powers,
            "quotients_checked": quotients_checked,
            "axiom_failures": failures.len(),
            "failures": failures,
            "equivalence_checked": equivalence_checked,
            "equivalence_mismatches": equivalence_mismatches,
            "all_pass": ok,
        }),
        rendered,
        exit: i32::from(!ok),
    })
}

fn cmd_geometry(q: u64, n: u32) -> CliResult<Report> {
    let h = extension_quotient(q, n)?;
    let geometry = geometry_of(&h)?;
    let incidence = geometry.check_incidence_axioms();
    let all_ok = incidence.all_ok();
    let rendered = format!(
        "geometry of the quotient of F_{{{q}^{n}}} by the scalars F_{q}\n\
         points: {}\nlines: {}\ndimension: {}\nincidence axioms: {}\n",
        geometry.point_count(),
        geometry.lines().len(),
        geometry.dimension(),
        if all_ok { "pass" } else { "FAIL" },
    );
    Ok(Report {
        command: "geometry",
        body: json!({
            "q": q,
            "n": n,
            "point_count": geometry.point_count(),
            "line_count": geometry.lines().len(),
            "dimension": geometry.dimension(),
            "lines": geometry.lines(),
            "incidence": incidence,
            "all_ok": all_ok,
        }),
        rendered,
        exit: i32::from(!all_ok),
    })
}

fn cmd_desargues(q: u64, n: u32) -> CliResult<Report> {
    let h = extension_quotient(q, n)?;
    let geometry = geometry_of(&h)?;
    let desarguesian = geometry.is_desarguesian()?;
    Ok(Report {
        command: "desargues",
        body: json!({
            "q": q,
            "n": n,
            "point_count": geometry.point_count(),
            "dimension": geometry.dimension(),
            "desarguesian": desarguesian,
        }),
        rendered: format!(
            "geometry of (q={q}, n={n}): {}\n",
            if desarguesian {
                "Desarguesian"
            } else {
                "NOT Desarguesian"
            }
        ),
        exit: i32::from(!desarguesian),
    })
}

fn cmd_iso(left: &Path, right: &Path) -> CliResult<Report> {
    let a = load_structure(left)?;
    let b = load_structure(right)?;
    let mapping = are_isomorphic(&a, &b);
    let isomorphic = mapping.is_some();
    Ok(Report {
        command: "iso",
        body: json!({
            "left": left.display().to_string(),
            "right": right.display().to_string(),
            "isomorphic": isomorphic,
            "mapping": mapping,
        }),
        rendered: format!(
            "{} and {}: {}\n",
            left.display(),
            right.display(),
            if isomorphic {
                "isomorphic"
            } else {
                "not isomorphic"
            }
        ),
        exit: i32::from(!isomorphic),
    })
}

fn cmd_is_krasner(path: &Path, q_max: u64) -> CliResult<Report> {
    let h = load_structure(path)?;
    let found = is_krasner_within(&h, q_max);
    let rendered = match &found {
        Some((q, subgroup)) => format!(
            "{} is the quotient of F_{q} by the subgroup {subgroup:?}\n",
            path.display()
        ),
        None => format!(
            "{} matches no field quotient with q <= {q_max}\n",
            path.display()
        ),
    };
    Ok(Report {
        command: "is-krasner",
        exit: i32::from(found.is_none()),
        body: json!({
            "structure_path": path.display().to_string(),
            "q_max": q_max,
            "found": found.is_some(),
            "q": found.as_ref().map(|(q, _)| *q),
            "subgroup": found.as_ref().map(|(_, g)| g.clone()),
        }),
        rendered,
    })
}

fn cmd_enumerate(order: usize) -> CliResult<Report> {
    let structures = enumerate_hyperfields(order)?;
    let entries: Vec<Value> = structures
        .iter()
        .map(|h| {
            json!({
                "structure": h,
                "is_cc": h.is_cc(),
            })
        })
        .collect();
    let mut rendered = format!(
        "{} hyperfield(s) of order {order}, up to isomorphism\n",
        structures.len()
    );
    for (i, h) in structures.iter().enumerate() {
        rendered += &format!("--- #{i}\n{}", h.table_string());
    }
    Ok(Report {
        command: "enumerate",
        body: json!({
            "order": order,
            "count": structures.len(),
            "structures": entries,
        }),
        rendered,
        exit: 0,
    })
}

fn certify<R: ConjRing>(
    family: &WitnessFamily<R>,
    oracle_bound: u32,
    budget: u64,
) -> CliResult<(IndependenceCertificate, bool)> {
    let certificate = independence_certificate(family)?;
    let relation = brute_force_relation_with_budget(family, oracle_bound, budget as u128)?;
    let agrees = certificate.independent == relation.is_none();
    Ok((certificate.with_oracle(oracle_bound, relation), agrees))
}

fn cmd_witness(case: WitnessCase, k: usize, oracle_bound: u32, p: u64) -> CliResult<Report> {
    let budget = oracle_budget()?;
    let (certificate, oracle_agrees) = match case {
        WitnessCase::Gauss => certify(&build_gaussian_family(k)?, oracle_bound, budget)?,
        WitnessCase::FpSquare => certify(&build_fp_square_family(p, k)?, oracle_bound, budget)?,
        WitnessCase::ArtinSchreier => {
            certify(&build_f2_artin_schreier_family(k)?, oracle_bound, budget)?
        }
    };
    let independent = certificate.independent;
    let rendered = format!(
        "case: {:?}\nfamily size: {k}\ncertificate rank: {}\nindependent: {}\n\
         oracle (bound {oracle_bound}): {}\n",
        case,
        certificate.rank,
        independent,
        match &certificate.oracle {
            Some(o) if o.relation.is_none() => "no relation found".to_string(),
            Some(o) => format!("relation {:?}", o.relation.as_ref().expect("checked")),
            None => "not run".to_string(),
        },
    );
    Ok(Report {
        command: "witness",
        body: json!({
            "certificate": certificate,
            "oracle_agrees": oracle_agrees,
            "budget": budget,
        }),
        rendered,
        exit: i32::from(!(independent && oracle_agrees)),
    })
}

fn cmd_torsion_report(q: u64) -> CliResult<Report> {
    let report = torsion_rank_report(q)?;
    let rendered = format!(
        "quotient of F_{{{q}^2}} units by F_{q} units\norder: {}\n\
         all cosets torsion: {}\nrational rank: {}\n",
        report.quotient_order, report.all_torsion, report.rational_rank,
    );
    Ok(Report {
        command: "torsion-report",
        exit: i32::from(!report.all_torsion),
        body: serde_json::to_value(&report)?,
        rendered,
    })
}

fn cmd_eval(path: &Path, formula: &str) -> CliResult<Report> {
    let h = load_structure(path)?;
    let sentence = parse_sentence(formula)?;
    let value = evaluate(&StructureView::new(&h), &sentence)?;
    Ok(Report {
        command: "eval",
        body: json!({
            "structure_path": path.display().to_string(),
            "formula": sentence.to_string(),
            "value": value,
        }),
        rendered: format!("{sentence}\n=> {value}\n"),
        exit: i32::from(!value),
    })
}

fn cmd_ef(left: &Path, right: &Path, depth: u32) -> CliResult<Report> {
    let a = load_structure(left)?;
    let b = load_structure(right)?;
    let equivalent = ef_equivalent(&StructureView::new(&a), &StructureView::new(&b), depth)?;
    Ok(Report {
        command: "ef",
        body: json!({
            "left": left.display().to_string(),
            "right": right.display().to_string(),
            "depth": depth,
            "equivalent": equivalent,
        }),
        rendered: format!(
            "{} and {} are {}equivalent at depth {depth}\n",
            left.display(),
            right.display(),
            if equivalent { "" } else { "NOT " },
        ),
        exit: i32::from(!equivalent),
    })
}

fn cmd_distinguish(left: &Path, right: &Path, depth: u32) -> CliResult<Report> {
    let a = load_structure(left)?;
    let b = load_structure(right)?;
    let (va, vb) = (StructureView::new(&a), StructureView::new(&b));
    let sentence = distinguishing_sentence(&va, &vb, depth)?;
    let verified = sentence
        .as_ref()
        .map(|s| Ok::<bool, hyperforge::Error>(evaluate(&va, s)? && !evaluate(&vb, s)?))
        .transpose()?;
    let rendered = match &sentence {
        Some(s) => format!("true left, false right (depth {}):\n{s}\n", s.quantifier_depth()),
        None => format!("equivalent at depth {depth}: no separating sentence\n"),
    };
    Ok(Report {
        command: "distinguish",
        exit: i32::from(sentence.is_none()),
        body: json!({
            "left": left.display().to_string(),
            "right": right.display().to_string(),
            "depth": depth,
            "sentence": sentence.as_ref().map(|s| s.to_string()),
            "quantifier_depth": sentence.as_ref().map(|s| s.quantifier_depth()),
            "verified": verified,
        }),
        rendered,
    })
}

fn cmd_transfer(left: &[u64], right: &[u64], depth: u32) -> CliResult<Report> {
    if left.iter().chain(right).any(|&f| f == 0) {
        return Err(CliError::Usage(
            "group invariant factors must be positive".into(),
        ));
    }
    let g = FiniteAbelianGroup::from_factors(left);
    let h = FiniteAbelianGroup::from_factors(right);
    let report = group_to_hyperfield_transfer_check(&g, &h, depth)?;
    let rendered = format!(
        "groups {:?} vs {:?} at depth {depth}\n\
         groups equivalent: {}\nhyperfields equivalent: {}\nimplication holds: {}\n",
        g.invariant_factors(),
        h.invariant_factors(),
        report.groups_equivalent,
        report.hyperfields_equivalent,
        report.implication_holds,
    );
    Ok(Report {
        command: "transfer-check",
        exit: i32::from(!report.implication_holds),
        body: json!({
            "left_factors": g.invariant_factors(),
            "right_factors": h.invariant_factors(),
            "report": report,
        }),
        rendered,
    })
}
