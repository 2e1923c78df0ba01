//! File formats and the `htw` command-line front end for `htw-core`.

pub mod dot;
pub mod graph_file;
pub mod schema;

use std::path::{Path, PathBuf};

use htw_core::class::ForbiddenInducedSubgraphs;
use htw_core::coverage::weak_coverage_run;
use htw_core::exact::{exact_htw, exact_min_deletion, exact_treewidth, exists_weak_coverage};
use htw_core::{preset, validate, ClassOracle, CoverageAnswer, Decomposer, VertexSet, PRESET_NAMES};
use thiserror::Error;

use schema::{
    CoverageCounters, CoverageReport, DecomposeCounters, DecomposeReport, DecompositionJson, ExactReport, TraceJson,
    ValidateReport, ViolationJson, SCHEMA,
};

/// Success, a valid decomposition, or a covering separation.
pub const EXIT_OK: u8 = 0;
/// Usage, input or I/O problems.
pub const EXIT_ERROR: u8 = 1;
/// A legitimate negative answer: width exceeded, no coverage, or an invalid
/// decomposition.
pub const EXIT_NEGATIVE: u8 = 2;

/// Reserved for future randomized variants; never read.
pub const SEED_ENV: &str = "HTW_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}: {inner}", path.display())]
    InFile { path: PathBuf, inner: Box<CliError> },
    #[error(transparent)]
    Graph(#[from] htw_core::Error),
    #[error("unknown class `{0}`; expected one of {PRESET_NAMES:?} or --family")]
    UnknownClass(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid decomposition: {0}")]
    Decomposition(String),
}

impl CliError {
    pub fn in_file(self, path: &Path) -> Self {
        CliError::InFile { path: path.to_path_buf(), inner: Box::new(self) }
    }
}

pub(crate) fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Preset(String),
    /// Graph files, one forbidden induced subgraph each.
    Family(Vec<PathBuf>),
}

impl ClassSpec {
    pub fn resolve(&self) -> Result<Box<dyn ClassOracle>, CliError> {
        match self {
            ClassSpec::Preset(name) => preset(name).ok_or_else(|| CliError::UnknownClass(name.clone())),
            ClassSpec::Family(paths) => {
                let family = paths.iter().map(|p| graph_file::read_graph(p)).collect::<Result<Vec<_>, _>>()?;
                let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
                let name = format!("family({})", names.join(","));
                Ok(Box::new(ForbiddenInducedSubgraphs::new(name, family)?))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Decompose { k: usize },
    Validate { decomposition: PathBuf },
    WeakCoverage { k: usize, z: Vec<usize> },
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub class: ClassSpec,
    pub output: Option<PathBuf>,
    pub trace: bool,
    pub exact: bool,
    pub format: Format,
}

/// The document to emit and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: u8,
    pub document: String,
}

pub fn run(config: &RunConfig) -> Result<RunOutcome, CliError> {
    let g = graph_file::read_graph(&config.input)?;
    let class = config.class.resolve()?;
    let class_name = class.name().to_string();
    match &config.command {
        Command::Decompose { k } => {
            let k = *k;
            let exact = if config.exact { Some(exact_htw(&g, &*class)?) } else { None };
            let mut decomposer = Decomposer::new(&g, k, &*class);
            if config.trace {
                decomposer = decomposer.with_trace();
            }
            let run = decomposer.run()?;
            let d = run.outcome.decomposition();
            let (exit_code, result) = match d {
                Some(_) => (EXIT_OK, "decomposed"),
                None => (EXIT_NEGATIVE, "width-exceeded"),
            };
            let document = if config.format == Format::Dot {
                d.map_or_else(|| dot::rejected_dot(k), dot::decomposition_to_dot)
            } else {
                let report = DecomposeReport {
                    schema: SCHEMA,
                    command: "decompose",
                    class: class_name,
                    n: g.n(),
                    m: g.m(),
                    k,
                    result,
                    width_bound: 5 * k + 5,
                    width: d.map(|d| d.width()),
                    node_count: d.map(|d| d.len()),
                    deletion_set_size: run.deletion_set.len(),
                    counters: DecomposeCounters {
                        oracle_calls: run.stats.oracle_calls,
                        oracle_budget: 2 * k + 2,
                        oracle_budgets: run.stats.oracle_budgets.clone(),
                        improvements: run.stats.improvements,
                        subroutine_calls: run.stats.subroutine_calls,
                        subproblems: run.stats.subproblems,
                        largest_oracle_input: run.stats.largest_oracle_input,
                    },
                    decomposition: d.map(DecompositionJson::from),
                    trace: config.trace.then(|| run.trace.iter().map(TraceJson::from).collect()),
                    exact_htw: exact,
                };
                to_json(&report)?
            };
            Ok(RunOutcome { exit_code, document })
        }
        Command::Validate { decomposition } => {
            let text = read_to_string(decomposition)?;
            let d = schema::parse_decomposition(&text).map_err(|e| e.in_file(decomposition))?;
            let report = validate(&g, &d, &*class);
            let exit_code = if report.is_valid() { EXIT_OK } else { EXIT_NEGATIVE };
            let doc = ValidateReport {
                schema: SCHEMA,
                command: "validate",
                class: class_name,
                valid: report.is_valid(),
                width: d.width(),
                node_count: d.len(),
                conditions: report.conditions(),
                violations: report.violations.iter().map(ViolationJson::from).collect(),
            };
            Ok(RunOutcome { exit_code, document: to_json(&doc)? })
        }
        Command::WeakCoverage { k, z } => {
            let k = *k;
            let z: VertexSet = z.iter().copied().collect();
            let exact_exists = if config.exact { Some(exists_weak_coverage(&g, &z, k, &*class)?) } else { None };
            let run = weak_coverage_run(&g, &z, k, &*class)?;
            let (exit_code, result, component, separator) = match &run.answer {
                CoverageAnswer::Covered(sep) => {
                    (EXIT_OK, "covered", Some(sep.component.to_vec()), Some(sep.separator.to_vec()))
                }
                CoverageAnswer::NoCoverage => (EXIT_NEGATIVE, "no-coverage", None, None),
            };
            let doc = CoverageReport {
                schema: SCHEMA,
                command: "weak-coverage",
                class: class_name,
                k,
                z: z.to_vec(),
                result,
                component,
                separator,
                separator_bound: 2 * k,
                counters: CoverageCounters {
                    iterations: run.iterations,
                    improvements: run.improvements,
                    oracle_calls: run.oracle_calls,
                    oracle_budget: 2 * k,
                    oracle_budgets: run.oracle_budgets.clone(),
                },
                exact_exists,
            };
            Ok(RunOutcome { exit_code, document: to_json(&doc)? })
        }
        Command::Exact => {
            let mut refused = Vec::new();
            let mut keep = |name: &str, value: htw_core::Result<usize>| match value {
                Ok(v) => Ok(Some(v)),
                Err(htw_core::Error::TooLarge { n, max }) => {
                    refused.push(format!("{name}: n = {n} exceeds {max}"));
                    Ok(None)
                }
                Err(e) => Err(e),
            };
            let treewidth = keep("treewidth", exact_treewidth(&g))?;
            let htw = keep("htw", exact_htw(&g, &*class))?;
            let min_deletion = keep("min_deletion", exact_min_deletion(&g, &*class))?;
            let doc = ExactReport {
                schema: SCHEMA,
                command: "exact",
                class: class_name,
                n: g.n(),
                m: g.m(),
                treewidth,
                htw,
                min_deletion,
                refused,
            };
            Ok(RunOutcome { exit_code: EXIT_OK, document: to_json(&doc)? })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}
