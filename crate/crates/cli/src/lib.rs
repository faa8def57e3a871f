//! Command-line front end for `isoclin-core`.
//!
//! [`run`] parses a full argument vector and returns the exit code with
//! the rendered output, so the binary and the tests share one code path.
//!
//! Group sources are `catalog:<name>`, `file:<path>` (any of the `group`,
//! `perm` or `mat` text formats) or `pair:<name>` for a named `(H, G)`
//! pair, which also supplies the subgroup.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand};
use isoclin_core::catalog::{self, NAMED_PAIRS};
use isoclin_core::io::{parse_group, parse_index_list, write_table};
use isoclin_core::iso::DEFAULT_SEARCH_BUDGET;
use isoclin_core::isoclinism::{are_n_isoclinic_with_budget, are_relative_n_isoclinic_with_budget};
use isoclin_core::structure::{center, gamma, lower_central_series, subgroup_generated, upper_central_series};
use isoclin_core::verify::{describe_subgroup, run_claim, SweepOptions, CLAIMS};
use isoclin_core::{relative_nilpotency_degree, Error, ExactRatio, FiniteGroup, Subgroup};

/// Success, including a negative isoclinism answer.
pub const EXIT_OK: i32 = 0;
/// A verification run found a failing instance.
pub const EXIT_FALSIFIED: i32 = 1;
/// Bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;
/// A budget, size cap or arithmetic limit was hit.
pub const EXIT_COMPUTATION: i32 = 3;

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "isoclin", version, about = "Exact commutativity degrees and isoclinism of finite groups")]
struct Cli {
    /// Accepted for scripts; every computation is already deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// d(G), or d⁽ⁿ⁾(G) with --n.
    Degree {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// d(H, G), or d⁽ⁿ⁾(H, G) with --n.
    RelDegree {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        subgroups: SubgroupArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Upper and lower central series.
    Series {
        #[arg(long)]
        group: String,
        /// Number of terms past the first; defaults to the stable length.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decides n-isoclinism of two groups and prints a witness.
    Isoclinic {
        #[arg(num_args = 2, required = true, value_names = ["GROUP1", "GROUP2"])]
        groups: Vec<String>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Decides relative n-isoclinism of two (H, G) pairs.
    ///
    /// Subgroup specifications are used in order by the sources that are
    /// not `pair:` sources; a source without one stands for (G, G).
    RelIsoclinic {
        #[arg(num_args = 2, required = true, value_names = ["GROUP1", "GROUP2"])]
        groups: Vec<String>,
        #[command(flatten)]
        subgroups: SubgroupArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Lists or inspects catalog groups.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Runs a claim on its default sweep.
    Verify {
        #[arg(value_parser = PossibleValuesParser::new(CLAIMS))]
        claim: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Writes tab-separated instance lines to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Names, orders and descriptions.
    List,
    /// Basic invariants of one group.
    Show {
        name: String,
        /// Also prints the multiplication table in the `group` file format.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct SubgroupArgs {
    /// Comma-separated generators (element indices or labels); repeatable.
    #[arg(long = "subgroup-gens")]
    gens: Vec<String>,
    /// File of generator indices; repeatable.
    #[arg(long = "subgroup-file")]
    files: Vec<PathBuf>,
}

impl SubgroupArgs {
    fn specs(&self) -> Vec<SubgroupSpec<'_>> {
        if self.files.is_empty() {
            self.gens.iter().map(|g| SubgroupSpec::Gens(g)).collect()
        } else {
            self.files.iter().map(|f| SubgroupSpec::File(f)).collect()
        }
    }
}

enum SubgroupSpec<'a> {
    Gens(&'a str),
    File(&'a Path),
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn new() -> Self {
        Output { stdout: String::new(), stderr: String::new(), code: EXIT_OK }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = Output::new();
    match dispatch(cli.command, &mut out) {
        Ok(()) => Outcome { code: out.code, stdout: out.stdout, stderr: out.stderr },
        Err(err) => {
            let (code, message) = match err {
                CliError::Usage(msg) => (EXIT_USAGE, msg),
                CliError::Core(e) if e.is_resource_limit() => (EXIT_COMPUTATION, e.to_string()),
                CliError::Core(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(out.stderr, "error: {message}");
            Outcome { code, stdout: out.stdout, stderr: out.stderr }
        }
    }
}

fn dispatch(command: Command, out: &mut Output) -> CliResult<()> {
    match command {
        Command::Degree { group, n } => {
            let source = load(&group)?;
            let d = relative_nilpotency_degree(&Subgroup::whole(&source.g), &source.g, n)?;
            let _ = writeln!(out.stdout, "{}", render_ratio(&d));
        }
        Command::RelDegree { group, subgroups, n } => {
            let specs = subgroups.specs();
            let mut sources = attach_subgroups(vec![load(&group)?], &specs)?;
            let (h, g) = sources.remove(0);
            let d = relative_nilpotency_degree(&h, &g, n)?;
            let _ = writeln!(out.stdout, "{}", render_ratio(&d));
        }
        Command::Series { group, n } => series(&load(&group)?.g, n, out),
        Command::Isoclinic { groups, n, budget } => {
            let (g1, g2) = (load(&groups[0])?.g, load(&groups[1])?.g);
            let witness = are_n_isoclinic_with_budget(&g1, &g2, n, budget)?;
            render_witness(witness.map(|w| w.to_text()), out);
        }
        Command::RelIsoclinic { groups, subgroups, n, budget } => {
            let loaded = vec![load(&groups[0])?, load(&groups[1])?];
            let mut pairs = attach_subgroups(loaded, &subgroups.specs())?;
            let (h2, g2) = pairs.pop().expect("two sources");
            let (h1, g1) = pairs.pop().expect("two sources");
            let witness = are_relative_n_isoclinic_with_budget(&h1, &g1, &h2, &g2, n, budget)?;
            render_witness(witness.map(|w| w.to_text()), out);
        }
        Command::Catalog { command: CatalogCommand::List } => catalog_list(out)?,
        Command::Catalog { command: CatalogCommand::Show { name, table } } => {
            let g = catalog::get(&name)?;
            let _ = writeln!(out.stdout, "name: {name}");
            let _ = writeln!(out.stdout, "order: {}", g.order());
            let _ = writeln!(out.stdout, "abelian: {}", g.is_abelian());
            let _ = writeln!(out.stdout, "center order: {}", center(&g).order());
            let _ = writeln!(out.stdout, "derived subgroup order: {}", gamma(&g, 2).order());
            if let Some(labels) = g.labels() {
                let _ = writeln!(out.stdout, "labels: {}", labels.join(" "));
            }
            if table {
                out.stdout.push_str(&write_table(&g));
            }
        }
        Command::Verify { claim, max_order, n, budget, report } => {
            if n == Some(0) {
                return Err(Error::ZeroLevel.into());
            }
            let opts = SweepOptions { max_order, n, budget };
            let start = Instant::now();
            let reports = run_claim(&claim, &opts)?;
            let mut lines = String::new();
            let mut overall = true;
            for r in &reports {
                out.stdout.push_str(&r.render());
                lines.push_str(&r.report_lines());
                overall &= r.overall();
                let _ = writeln!(out.stderr, "{}: {:.3?}", r.claim(), r.elapsed());
            }
            let _ = writeln!(out.stdout, "overall: {}", if overall { "PASS" } else { "FAIL" });
            let _ = writeln!(out.stderr, "total: {:.3?}", start.elapsed());
            if let Some(path) = report {
                fs::write(&path, lines)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if !overall {
                out.code = EXIT_FALSIFIED;
            }
        }
    }
    Ok(())
}

/// `p/q (≈0.dddddd)`.
fn render_ratio(r: &ExactRatio) -> String {
    format!("{r} (≈{})", r.to_decimal(6))
}

fn render_witness(witness: Option<String>, out: &mut Output) {
    match witness {
        Some(text) => {
            out.stdout.push_str("YES\n");
            out.stdout.push_str(&text);
        }
        None => out.stdout.push_str("NO\n"),
    }
}

/// A loaded group source; `pair:` sources carry their subgroup.
struct Source {
    g: FiniteGroup,
    h: Option<Subgroup>,
}

fn load(spec: &str) -> CliResult<Source> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(Source { g: catalog::get(name)?, h: None });
    }
    if let Some(name) = spec.strip_prefix("pair:") {
        let (h, g) = catalog::named_pair(name)?;
        return Ok(Source { g, h: Some(h) });
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return Ok(Source { g: parse_group(&read(Path::new(path))?)?, h: None });
    }
    Err(CliError::Usage(format!("group source {spec:?} must start with catalog:, file: or pair:")))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Pairs each source with its subgroup: its own for `pair:` sources, else
/// the next spec, else the whole group.
fn attach_subgroups(sources: Vec<Source>, specs: &[SubgroupSpec<'_>]) -> CliResult<Vec<(Subgroup, FiniteGroup)>> {
    let mut specs = specs.iter();
    let mut pairs = Vec::new();
    for source in sources {
        let h = match source.h {
            Some(h) => h,
            None => match specs.next() {
                Some(spec) => parse_subgroup(&source.g, spec)?,
                None => Subgroup::whole(&source.g),
            },
        };
        pairs.push((h, source.g));
    }
    if specs.next().is_some() {
        return Err(CliError::Usage("more subgroup specifications than group sources".into()));
    }
    Ok(pairs)
}

fn parse_subgroup(g: &FiniteGroup, spec: &SubgroupSpec<'_>) -> CliResult<Subgroup> {
    let gens = match spec {
        SubgroupSpec::File(path) => parse_index_list(&read(path)?)?,
        SubgroupSpec::Gens(csv) => csv
            .split(',')
            .map(str::trim)
            .filter(|w| !w.is_empty())
            .map(|w| match w.parse::<usize>() {
                Ok(x) => Ok(x),
                Err(_) => g.element_by_label(w).ok_or_else(|| CliError::Usage(format!("unknown element {w:?}"))),
            })
            .collect::<CliResult<Vec<_>>>()?,
    };
    for &x in &gens {
        g.check_element(x)?;
    }
    Ok(subgroup_generated(g, &gens))
}

fn series(g: &FiniteGroup, n: Option<usize>, out: &mut Output) {
    let stable = (usize::BITS - g.order().leading_zeros()) as usize;
    let mut upper = upper_central_series(g, n.unwrap_or(stable));
    let mut lower = lower_central_series(g, n.unwrap_or(stable));
    if n.is_none() {
        upper.dedup();
        lower.dedup();
    }
    let orders = |s: &[Subgroup]| s.iter().map(|x| x.order().to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out.stdout, "order: {}", g.order());
    let _ = writeln!(out.stdout, "upper central series: {}", orders(&upper));
    let _ = writeln!(out.stdout, "lower central series: {}", orders(&lower));
    let full = lower_central_series(g, stable);
    match full.iter().position(Subgroup::is_trivial) {
        Some(class) => {
            let _ = writeln!(out.stdout, "nilpotent: class {class}");
        }
        None => {
            let _ = writeln!(out.stdout, "nilpotent: no");
        }
    }
}

fn catalog_list(out: &mut Output) -> CliResult<()> {
    for entry in catalog::list() {
        let order = match entry.build() {
            Ok(g) => g.order().to_string(),
            Err(_) => "-".to_string(),
        };
        let _ = writeln!(out.stdout, "{:<22} {:>5}  {}", entry.name, order, entry.description);
    }
    for name in NAMED_PAIRS {
        let (h, g) = catalog::named_pair(name)?;
        let _ = writeln!(
            out.stdout,
            "{:<22} {:>5}  pair (H, G) with H = {}",
            format!("pair:{name}"),
            g.order(),
            describe_subgroup(&g, &h)
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_rendering() {
        assert_eq!(render_ratio(&ExactRatio::new(5, 8)), "5/8 (≈0.625000)");
        assert_eq!(render_ratio(&ExactRatio::new(2, 3)), "2/3 (≈0.666667)");
        assert_eq!(render_ratio(&ExactRatio::one()), "1 (≈1.000000)");
    }

    #[test]
    fn source_prefixes() {
        assert_eq!(load("catalog:quaternion8").unwrap().g.order(), 8);
        assert_eq!(load("pair:d8-a").unwrap().h.unwrap().order(), 4);
        assert!(matches!(load("quaternion8"), Err(CliError::Usage(_))));
        assert!(matches!(load("pair:d8-z"), Err(CliError::Core(Error::UnknownName(_)))));
    }

    #[test]
    fn subgroup_specs_skip_pair_sources() {
        let sources = vec![load("pair:d8-a").unwrap(), load("catalog:dihedral:8").unwrap()];
        let pairs = attach_subgroups(sources, &[SubgroupSpec::Gens("b")]).unwrap();
        assert_eq!(pairs[0].0.order(), 4);
        assert_eq!(pairs[1].0.order(), 2);
        let bare = attach_subgroups(vec![load("catalog:dihedral:8").unwrap()], &[]).unwrap();
        assert!(bare[0].0.is_whole());
    }
}
