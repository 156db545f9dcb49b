use std::fs;
use std::path::Path;

use homjordan::centroid::{self, centroid_composition_table, CompositionTable, MultReading};
use homjordan::corpus;
use homjordan::document::{algebra_to_json, AlgebraDocument};
use homjordan::exactlin::format_scalar;
use homjordan::extend::ExtensionSuite;
use homjordan::solve::{SpaceReport, SpaceTable};
use homjordan::theorems::Suite;
use homjordan::{algebra, HomAlgebra, Matrix, SpaceKind, Status, Subspace, Verdict};
use serde::Serialize;

use crate::config::{Command, GenKind, RunConfig, SuiteSel, YauBase};
use crate::io::{is_directory, load_inputs, parse_subspace, write_atomic, CliError};

/// A rendered command result: the JSON document, a human summary and
/// whether anything failed.
pub struct Report {
    pub json: String,
    pub summary: Vec<String>,
    pub failed: bool,
    /// The command already wrote its files; the JSON goes to stdout.
    pub written: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// A single object for a file input, an array for a directory.
fn shape<T: Serialize>(cfg: &RunConfig, mut items: Vec<T>) -> String {
    if is_directory(cfg.input.as_deref()) || items.len() != 1 {
        to_json(&items)
    } else {
        to_json(&items.remove(0))
    }
}

fn rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

fn basis(s: &Subspace) -> Vec<Vec<String>> {
    rows(s.basis())
}

fn verdict_lines(vs: &[Verdict]) -> Vec<String> {
    vs.iter()
        .map(|v| {
            let status = match v.status {
                Status::Holds => "holds",
                Status::Fails => "FAILS",
                Status::NotApplicable => "n/a",
            };
            let detail = v
                .reason
                .as_deref()
                .or(v.notes.first().map(String::as_str))
                .unwrap_or("");
            format!(
                "{:<28} {:<40} {:<6} {}",
                v.algebra, v.claim_id, status, detail
            )
        })
        .collect()
}

#[derive(Serialize)]
struct Tally {
    holds: usize,
    fails: usize,
    not_applicable: usize,
}

fn tally(vs: &[Verdict]) -> Tally {
    let count = |s| vs.iter().filter(|v| v.status == s).count();
    Tally {
        holds: count(Status::Holds),
        fails: count(Status::Fails),
        not_applicable: count(Status::NotApplicable),
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Report, CliError> {
    match &cfg.command {
        Command::Validate => cmd_validate(cfg),
        Command::Spaces => cmd_spaces(cfg),
        Command::Theorems { suite, envelope } => cmd_theorems(cfg, *suite, reading(*envelope)),
        Command::Extend => cmd_extend(cfg),
        Command::Centroid { ideal, envelope } => {
            cmd_centroid(cfg, ideal.as_deref(), reading(*envelope))
        }
        Command::Quotient { ideal, envelope } => cmd_quotient(cfg, ideal, reading(*envelope)),
        Command::Gen {
            kind,
            dim,
            lambda,
            base,
            diag,
        } => cmd_gen(cfg, *kind, *dim, *lambda, *base, diag),
    }
}

fn reading(envelope: bool) -> MultReading {
    if envelope {
        MultReading::Envelope
    } else {
        MultReading::Span
    }
}

#[derive(Serialize)]
struct ValidateEntry {
    algebra: String,
    dim: usize,
    ok: bool,
    #[serde(flatten)]
    report: algebra::ValidationReport,
}

pub fn cmd_validate(cfg: &RunConfig) -> Result<Report, CliError> {
    let algebras = load_inputs(cfg.input.as_deref())?;
    let entries: Vec<ValidateEntry> = algebras
        .iter()
        .map(|a| {
            let report = a.validate();
            ValidateEntry {
                algebra: a.name().to_string(),
                dim: a.dim(),
                ok: report.all_pass(),
                report,
            }
        })
        .collect();
    let summary = entries
        .iter()
        .map(|e| {
            let mut line = format!(
                "{:<28} commutative={} hom_jordan={} multiplicative={}",
                e.algebra, e.report.commutative, e.report.hom_jordan.ok, e.report.multiplicative
            );
            if let Some((i, j)) = e.report.non_commuting_pair {
                line.push_str(&format!("  μ(e{i}, e{j}) ≠ μ(e{j}, e{i})"));
            }
            if let Some(t) = e.report.hom_jordan.failing_tuple {
                line.push_str(&format!("  identity fails on basis tuple {t:?}"));
            }
            if let Some((i, j)) = e.report.non_multiplicative_pair {
                line.push_str(&format!("  α not multiplicative on ({i}, {j})"));
            }
            line
        })
        .collect();
    let failed = entries.iter().any(|e| !e.ok);
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed,
        written: false,
    })
}

#[derive(Serialize)]
struct AggregateEntry {
    kind: SpaceKind,
    dims: Vec<usize>,
    total_dim: usize,
    direct: bool,
}

#[derive(Serialize)]
struct SpacesEntry {
    algebra: String,
    max_power: usize,
    spaces: Vec<SpaceReport>,
    aggregates: Vec<AggregateEntry>,
}

fn requested_kinds(cfg: &RunConfig) -> Vec<SpaceKind> {
    if cfg.kinds.is_empty() {
        SpaceKind::DERIVATION_TYPES.to_vec()
    } else {
        let mut k = cfg.kinds.clone();
        k.sort();
        k.dedup();
        k
    }
}

pub fn cmd_spaces(cfg: &RunConfig) -> Result<Report, CliError> {
    let kinds = requested_kinds(cfg);
    let k = cfg.max_power;
    let mut summary = Vec::new();
    let entries: Vec<SpacesEntry> = load_inputs(cfg.input.as_deref())?
        .iter()
        .map(|a| {
            let table = SpaceTable::compute_kinds(a, &kinds, k);
            let mut spaces = Vec::new();
            let mut aggregates = Vec::new();
            for &kind in &kinds {
                if kind == SpaceKind::Commutant {
                    spaces.push(table.get(kind, 0).report());
                    summary.push(format!(
                        "{:<28} {:<9} dim {}",
                        a.name(),
                        kind,
                        table.get(kind, 0).dim()
                    ));
                    continue;
                }
                spaces.extend((0..=k).map(|p| table.get(kind, p).report()));
                let agg = table.aggregate(kind);
                let dims: Vec<usize> = agg.per_k.iter().map(|s| s.dim()).collect();
                summary.push(format!(
                    "{:<28} {:<9} dims {:?} total {}{}",
                    a.name(),
                    kind,
                    dims,
                    agg.total.dim(),
                    if agg.direct { "" } else { " (not direct)" }
                ));
                aggregates.push(AggregateEntry {
                    kind,
                    dims,
                    total_dim: agg.total.dim(),
                    direct: agg.direct,
                });
            }
            SpacesEntry {
                algebra: a.name().to_string(),
                max_power: k,
                spaces,
                aggregates,
            }
        })
        .collect();
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed: false,
        written: false,
    })
}

#[derive(Serialize)]
struct VerdictEntry {
    algebra: String,
    max_power: usize,
    suite: &'static str,
    summary: Tally,
    verdicts: Vec<Verdict>,
}

fn suite_name(s: SuiteSel) -> &'static str {
    match s {
        SuiteSel::Section3 => "section3",
        SuiteSel::Section4 => "section4",
        SuiteSel::Section5 => "section5",
        SuiteSel::All => "all",
    }
}

pub fn run_suite(
    a: &HomAlgebra,
    k: usize,
    suite: SuiteSel,
    reading: MultReading,
    explore: bool,
) -> Vec<Verdict> {
    let mut out = Vec::new();
    if matches!(suite, SuiteSel::Section3 | SuiteSel::All) {
        out.extend(Suite::new(a, k).exploring(explore).all());
    }
    if matches!(suite, SuiteSel::Section4 | SuiteSel::All) {
        out.extend(ExtensionSuite::new(a, k).exploring(explore).all());
    }
    if matches!(suite, SuiteSel::Section5 | SuiteSel::All) {
        out.extend(centroid::section5(a, k, reading, explore));
    }
    out
}

pub fn cmd_theorems(
    cfg: &RunConfig,
    suite: SuiteSel,
    reading: MultReading,
) -> Result<Report, CliError> {
    let entries = load_inputs(cfg.input.as_deref())?
        .iter()
        .map(|a| {
            let verdicts = run_suite(a, cfg.max_power, suite, reading, cfg.explore);
            VerdictEntry {
                algebra: a.name().to_string(),
                max_power: cfg.max_power,
                suite: suite_name(suite),
                summary: tally(&verdicts),
                verdicts,
            }
        })
        .collect::<Vec<_>>();
    let summary = entries
        .iter()
        .flat_map(|e| verdict_lines(&e.verdicts))
        .collect();
    let failed = entries.iter().any(|e| e.summary.fails > 0);
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed,
        written: false,
    })
}

#[derive(Serialize)]
struct ExtendEntry {
    algebra: String,
    max_power: usize,
    carrier: AlgebraDocument,
    derived: Vec<Vec<String>>,
    u_complement: Vec<Vec<String>>,
    projection: Vec<Vec<String>>,
    summary: Tally,
    verdicts: Vec<Verdict>,
}

pub fn cmd_extend(cfg: &RunConfig) -> Result<Report, CliError> {
    let entries: Vec<ExtendEntry> = load_inputs(cfg.input.as_deref())?
        .iter()
        .map(|a| {
            let suite = ExtensionSuite::new(a, cfg.max_power).exploring(cfg.explore);
            let verdicts = suite.all();
            let ext = suite.extension();
            ExtendEntry {
                algebra: a.name().to_string(),
                max_power: cfg.max_power,
                carrier: AlgebraDocument::from_algebra(&ext.carrier),
                derived: basis(&ext.derived),
                u_complement: basis(&ext.u_complement),
                projection: rows(&ext.projection),
                summary: tally(&verdicts),
                verdicts,
            }
        })
        .collect();
    let summary = entries
        .iter()
        .flat_map(|e| verdict_lines(&e.verdicts))
        .collect();
    let failed = entries.iter().any(|e| e.summary.fails > 0);
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed,
        written: false,
    })
}

#[derive(Serialize)]
struct CentroidEntry {
    algebra: String,
    max_power: usize,
    mult_reading: &'static str,
    composition_table: CompositionTable,
    summary: Tally,
    verdicts: Vec<Verdict>,
}

fn reading_name(r: MultReading) -> &'static str {
    match r {
        MultReading::Span => "span",
        MultReading::Envelope => "envelope",
    }
}

fn note(mut v: Verdict, text: &str) -> Verdict {
    v.notes.insert(0, text.to_string());
    v
}

pub fn cmd_centroid(
    cfg: &RunConfig,
    ideal: Option<&str>,
    reading: MultReading,
) -> Result<Report, CliError> {
    let k = cfg.max_power;
    let mut entries = Vec::new();
    for a in load_inputs(cfg.input.as_deref())? {
        let mut verdicts = centroid::section5(&a, k, reading, cfg.explore);
        if let Some(arg) = ideal {
            let i = parse_subspace(arg, a.dim())?;
            let mut applicable = false;
            if let Ok(v) = centroid::verify_prop53(&a, &i, k) {
                verdicts.push(note(v, "I = supplied subset"));
                applicable = true;
            }
            if a.is_hom_ideal(&i)? {
                let q = algebra::quotient(&a, &i)?;
                verdicts.extend(
                    centroid::verify_thm54_with(&q, k, reading, cfg.explore)
                        .into_iter()
                        .map(|v| note(v, "ker π = supplied ideal")),
                );
                applicable = true;
            }
            if !applicable {
                return Err(CliError::Usage(format!(
                    "{}: supplied subset is neither a Hom-ideal nor α-invariant with α invertible on it",
                    a.name()
                )));
            }
        }
        entries.push(CentroidEntry {
            algebra: a.name().to_string(),
            max_power: k,
            mult_reading: reading_name(reading),
            composition_table: centroid_composition_table(&a, k),
            summary: tally(&verdicts),
            verdicts,
        });
    }
    let summary = entries
        .iter()
        .flat_map(|e| verdict_lines(&e.verdicts))
        .collect();
    let failed = entries.iter().any(|e| e.summary.fails > 0);
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed,
        written: false,
    })
}

#[derive(Serialize)]
struct QuotientEntry {
    algebra: String,
    max_power: usize,
    ideal: Vec<Vec<String>>,
    target: AlgebraDocument,
    pi: Vec<Vec<String>>,
    section: Vec<Vec<String>>,
    summary: Tally,
    verdicts: Vec<Verdict>,
}

pub fn cmd_quotient(
    cfg: &RunConfig,
    ideal: &str,
    reading: MultReading,
) -> Result<Report, CliError> {
    let mut entries = Vec::new();
    for a in load_inputs(cfg.input.as_deref())? {
        let i = parse_subspace(ideal, a.dim())?;
        let q = algebra::quotient(&a, &i)?;
        let verdicts = centroid::verify_thm54_with(&q, cfg.max_power, reading, cfg.explore);
        entries.push(QuotientEntry {
            algebra: a.name().to_string(),
            max_power: cfg.max_power,
            ideal: basis(&q.ideal),
            target: AlgebraDocument::from_algebra(&q.target),
            pi: rows(&q.pi),
            section: rows(&q.section),
            summary: tally(&verdicts),
            verdicts,
        });
    }
    let summary = entries
        .iter()
        .flat_map(|e| verdict_lines(&e.verdicts))
        .collect();
    let failed = entries.iter().any(|e| e.summary.fails > 0);
    Ok(Report {
        json: shape(cfg, entries),
        summary,
        failed,
        written: false,
    })
}

/// The named corpus followed by seeded random members.
pub fn generated_corpus(seed: u64) -> Vec<HomAlgebra> {
    let mut out = corpus::corpus();
    out.push(corpus::random_abelian(3, seed));
    out.push(corpus::random_yau(seed));
    out
}

fn generate(
    cfg: &RunConfig,
    kind: GenKind,
    dim: usize,
    lambda: i64,
    base: YauBase,
    diag: &[i64],
) -> Vec<HomAlgebra> {
    match kind {
        GenKind::Corpus => generated_corpus(cfg.seed),
        GenKind::Abelian => vec![corpus::abelian(dim)],
        GenKind::Unital => vec![corpus::unital1()],
        GenKind::Dual => vec![corpus::dual()],
        GenKind::Poly3 => vec![corpus::poly3()],
        GenKind::Sym2 => vec![corpus::sym2()],
        GenKind::Peirce3 => vec![corpus::peirce3()],
        GenKind::Yau => vec![match base {
            YauBase::Dual => corpus::dual_yau(lambda),
            YauBase::Poly3 => corpus::poly3_yau(lambda),
        }],
        GenKind::Plus => vec![corpus::plus_diag(diag)],
        GenKind::Random => vec![
            corpus::random_abelian(dim, cfg.seed),
            corpus::random_yau(cfg.seed),
        ],
    }
}

#[derive(Serialize)]
struct GenManifest {
    directory: String,
    files: Vec<String>,
}

/// With `--output DIR` writes one file per algebra and reports a manifest;
/// otherwise prints the document (or an array of them).
pub fn cmd_gen(
    cfg: &RunConfig,
    kind: GenKind,
    dim: usize,
    lambda: i64,
    base: YauBase,
    diag: &[i64],
) -> Result<Report, CliError> {
    if kind == GenKind::Plus && diag.is_empty() {
        return Err(CliError::Usage("--diag needs at least one entry".into()));
    }
    let algebras = generate(cfg, kind, dim, lambda, base, diag);
    let summary = algebras
        .iter()
        .map(|a| format!("{:<28} dim {}", a.name(), a.dim()))
        .collect();
    match cfg.output.as_deref() {
        Some(dir) if kind == GenKind::Corpus || algebras.len() > 1 || dir.is_dir() => {
            write_corpus(dir, &algebras, summary)
        }
        _ => {
            let json = if algebras.len() == 1 {
                algebra_to_json(&algebras[0])
            } else {
                to_json(
                    &algebras
                        .iter()
                        .map(AlgebraDocument::from_algebra)
                        .collect::<Vec<_>>(),
                )
            };
            Ok(Report {
                json,
                summary,
                failed: false,
                written: false,
            })
        }
    }
}

fn write_corpus(
    dir: &Path,
    algebras: &[HomAlgebra],
    summary: Vec<String>,
) -> Result<Report, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files = Vec::new();
    for a in algebras {
        let file = format!("{}.json", a.name());
        write_atomic(&dir.join(&file), &algebra_to_json(a))?;
        files.push(file);
    }
    Ok(Report {
        json: to_json(&GenManifest {
            directory: dir.display().to_string(),
            files,
        }),
        summary,
        failed: false,
        written: true,
    })
}
