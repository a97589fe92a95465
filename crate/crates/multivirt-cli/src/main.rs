//! `mvb` — command-line front end for the multivirt engine.
//!
//! Subcommands cover the full pipeline: browsing the built-in catalog,
//! deriving kernel presentations from permutation-valued maps, simplifying
//! and comparing presentations, computing abelianizations, and running the
//! bundled verification suites (well-definedness, retractions, conjugation
//! actions).
//!
//! Exit codes: 0 success, 1 engine error, 2 usage error (from clap),
//! 3 comparison/verification mismatch, 4 coset limit exceeded.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use multivirt::catalog::{
    build, build_dictionary, build_hom, dictionary_keys, hom_keys, keys, CatalogEntry, Dictionary,
    HomSpec,
};
use multivirt::coset::{kernel_coset_table, todd_coxeter, TransversalStrategy};
use multivirt::hom::{check_retraction, check_well_defined, verify_action, PermHom};
use multivirt::invariants::abelianization;
use multivirt::pipeline::{derive, Derivation};
use multivirt::presentation::Presentation;
use multivirt::tietze::{relator_sets_equal, simplify, DEFAULT_SIMPLIFY_BUDGET};
use multivirt::word::DisplayStyle;
use multivirt::Error;

const EXIT_MISMATCH: u8 = 3;
const EXIT_COSET_LIMIT: u8 = 4;

/// Write one line to stdout, exiting quietly if the stream has closed
/// (for example when the output is piped into `head`).
macro_rules! say {
    ($($arg:tt)*) => {{
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "mvb",
    version,
    about = "Presentation engine for multi-virtual braid groups and their kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Browse the built-in catalog of groups, dictionaries, and maps.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Derive a kernel presentation via coset enumeration and rewriting.
    Derive(DeriveArgs),
    /// Simplify a presentation read from a JSON file.
    Simplify(SimplifyArgs),
    /// Compare a JSON presentation against a catalog entry.
    Compare(CompareArgs),
    /// Print the abelianization of a catalog entry or JSON presentation.
    Abelianize(AbelianizeArgs),
    /// Print the index of a map's kernel (number of cosets).
    Index(IndexArgs),
    /// Run the bundled verification suites.
    Verify(VerifyArgs),
    /// Write a catalog presentation to a JSON file.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the available presentation, dictionary, and map keys.
    List,
    /// Show one catalog entry in full.
    Show(ShowArgs),
}

#[derive(Args)]
struct ShowArgs {
    /// Catalog key, e.g. MkVB, VP, MVQ3.
    #[arg(long)]
    key: String,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts.
    #[arg(long)]
    k: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DeriveArgs {
    /// Ambient group key (default MkVB).
    #[arg(long, default_value = "MkVB")]
    group: String,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts.
    #[arg(long)]
    k: Option<usize>,
    /// Permutation-valued map key: phi, psi, chi3, or chi4.
    #[arg(long)]
    map: String,
    /// Transversal strategy for coset representatives.
    #[arg(long, value_enum, default_value_t = TransversalChoice::Lambda)]
    transversal: TransversalChoice,
    /// Dictionary for naming subgroup generators: auto, none, or a key.
    #[arg(long, default_value = "auto")]
    dictionary: String,
    /// Simplification pass budget.
    #[arg(long, default_value_t = DEFAULT_SIMPLIFY_BUDGET)]
    budget: usize,
    /// Write the final presentation's JSON to this file.
    #[arg(long)]
    out: Option<String>,
    /// Emit a full JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransversalChoice {
    /// Breadth-first over the generator order.
    Bfs,
    /// Sorted products of adjacent involutions (default).
    Lambda,
}

#[derive(Args)]
struct SimplifyArgs {
    /// Input presentation (JSON file).
    #[arg(long = "in")]
    input: String,
    /// Simplification pass budget.
    #[arg(long, default_value_t = DEFAULT_SIMPLIFY_BUDGET)]
    budget: usize,
    /// Emit the simplified presentation as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Input presentation (JSON file).
    #[arg(long = "in")]
    input: String,
    /// Catalog key to compare against.
    #[arg(long)]
    against: String,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct AbelianizeArgs {
    /// Catalog key (mutually exclusive with --in).
    #[arg(long, conflicts_with = "input")]
    key: Option<String>,
    /// Input presentation (JSON file).
    #[arg(long = "in")]
    input: Option<String>,
    /// Number of strands (with --key).
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts (with --key).
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct IndexArgs {
    /// Ambient group key (default MkVB).
    #[arg(long, default_value = "MkVB")]
    group: String,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts.
    #[arg(long)]
    k: Option<usize>,
    /// Permutation-valued map key.
    #[arg(long)]
    map: String,
    /// Re-derive the index by coset enumeration over the dictionary's
    /// subgroup generators and compare the two tables.
    #[arg(long)]
    crosscheck: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    suite: VerifySuite,
    /// Number of strands.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Number of virtual sorts.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    /// Conjugation action of the involutive generators on kernel generators.
    Action,
    /// Well-definedness of the permutation-valued maps.
    Hom,
    /// Projection/inclusion pairs compose to the identity.
    Retraction,
    /// All of the above.
    All,
}

#[derive(Args)]
struct ExportArgs {
    /// Catalog key.
    #[arg(long)]
    key: String,
    /// Number of strands.
    #[arg(long)]
    n: Option<usize>,
    /// Number of virtual sorts.
    #[arg(long)]
    k: Option<usize>,
    /// Output path, or `-` for stdout.
    #[arg(long)]
    out: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::CosetLimitExceeded { limit }) => {
            eprintln!("error: coset limit of {limit} exceeded (raise MVB_MAX_COSETS)");
            ExitCode::from(EXIT_COSET_LIMIT)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> multivirt::Result<ExitCode> {
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                cmd_catalog_list();
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Show(args) => cmd_catalog_show(args),
        },
        Command::Derive(args) => cmd_derive(args),
        Command::Simplify(args) => cmd_simplify(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Abelianize(args) => cmd_abelianize(args),
        Command::Index(args) => cmd_index(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    }
}

/// Default (n, k) for a catalog key when the user omits them: fixed
/// three-strand entries take (3, 2), single-sort families take (3, 1),
/// and the multi-sort families take (3, 2).
fn resolve_params(key: &str, n: Option<usize>, k: Option<usize>) -> (usize, usize) {
    let single_sort = matches!(key, "B" | "Sn" | "VB" | "FVB" | "VP" | "FVP" | "VH");
    let default_k = if single_sort { 1 } else { 2 };
    (n.unwrap_or(3), k.unwrap_or(default_k))
}

fn build_entry(key: &str, n: Option<usize>, k: Option<usize>) -> multivirt::Result<CatalogEntry> {
    let (n, k) = resolve_params(key, n, k);
    build(key, n, k)
}

fn cmd_catalog_list() {
    say!("presentations: {}", keys().join(" "));
    say!("dictionaries:  {}", dictionary_keys().join(" "));
    say!("maps:          {}", hom_keys().join(" "));
}

fn cmd_catalog_show(args: ShowArgs) -> multivirt::Result<ExitCode> {
    let entry = build_entry(&args.key, args.n, args.k)?;
    if args.json {
        say!("{}", entry.presentation.to_json_string());
    } else {
        say!("{}", entry.presentation.display(entry.style));
        for note in &entry.notes {
            say!("note: {note}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Look up a permutation-valued map by key; word-valued maps have no kernel
/// coset table, so they are rejected here.
fn perm_hom(key: &str, n: usize, k: usize) -> multivirt::Result<PermHom> {
    match build_hom(key, n, k)? {
        HomSpec::Perm(h) => Ok(h),
        HomSpec::Word(h) => Err(Error::BadCatalogParams {
            key: key.to_string(),
            params: format!("n={n}, k={k}"),
            reason: format!(
                "`{}` is word-valued; kernel derivation needs a permutation-valued map \
                 (phi, psi, chi3, chi4)",
                h.name
            ),
        }),
    }
}

/// Resolve the `--dictionary` flag: `auto` picks the conventional dictionary
/// for the map when one applies, `none` disables naming, anything else is a
/// dictionary key.
fn resolve_dictionary(
    flag: &str,
    map_key: &str,
    n: usize,
    k: usize,
) -> multivirt::Result<Option<Dictionary>> {
    match flag {
        "none" => Ok(None),
        "auto" => {
            let implied = match map_key {
                "phi" => Some("MkVP"),
                "psi" => Some("MkVH"),
                "chi3" if (n, k) == (3, 2) => Some("MVQ3"),
                "chi4" if (n, k) == (3, 2) => Some("MVC3"),
                _ => None,
            };
            match implied {
                Some(key) => Ok(Some(build_dictionary(key, n, k)?)),
                None => Ok(None),
            }
        }
        key => Ok(Some(build_dictionary(key, n, k)?)),
    }
}

fn strategy_for(choice: TransversalChoice, n: usize) -> TransversalStrategy {
    match choice {
        TransversalChoice::Bfs => TransversalStrategy::Bfs,
        TransversalChoice::Lambda => TransversalStrategy::Lambda { n },
    }
}

fn derivation_report(d: &Derivation, style: DisplayStyle) -> serde_json::Value {
    let transversal_words: Vec<String> = d
        .transversal
        .words()
        .iter()
        .map(|w| w.display(style).to_string())
        .collect();
    let renames: BTreeMap<String, String> = d
        .renames
        .iter()
        .map(|(old, new)| (old.display(style).to_string(), new.to_string()))
        .collect();
    json!({
        "ambient": d.ambient,
        "map": d.hom.name,
        "index": d.index(),
        "transversal": transversal_words,
        "raw": d.raw,
        "simplified": d.simplified,
        "final": d.final_presentation,
        "renames": renames,
        "hit_length_ceiling": d.hit_length_ceiling,
        "passes_used": d.passes_used,
    })
}

fn cmd_derive(args: DeriveArgs) -> multivirt::Result<ExitCode> {
    let (n, k) = resolve_params(&args.group, args.n, args.k);
    let entry = build(&args.group, n, k)?;
    let hom = perm_hom(&args.map, n, k)?;
    let dictionary = resolve_dictionary(&args.dictionary, &args.map, n, k)?;
    let strategy = strategy_for(args.transversal, n);
    let derivation = derive(
        &entry.presentation,
        &hom,
        &strategy,
        dictionary.as_ref(),
        args.budget,
    )?;

    if args.json {
        let report = derivation_report(&derivation, entry.style);
        say!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        say!("ambient:    {}", entry.presentation.name());
        say!("map:        {}", derivation.hom.name);
        say!("index:      {}", derivation.index());
        say!(
            "raw:        {} generators, {} relators",
            derivation.raw.generator_count(),
            derivation.raw.relator_count()
        );
        say!(
            "simplified: {} generators, {} relators ({} passes)",
            derivation.simplified.generator_count(),
            derivation.simplified.relator_count(),
            derivation.passes_used
        );
        if derivation.hit_length_ceiling {
            say!("warning: relator length ceiling hit; result may be unsimplified");
        }
        say!();
        say!("{}", derivation.final_presentation.display(entry.style));
    }

    if let Some(path) = &args.out {
        write_text(path, &derivation.final_presentation.to_json_string())?;
        eprintln!("wrote {path}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simplify(args: SimplifyArgs) -> multivirt::Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input)?;
    let presentation = Presentation::from_json_str(&text)?;
    let result = simplify(&presentation, args.budget);
    if args.json {
        say!("{}", result.presentation.to_json_string());
    } else {
        say!(
            "{} -> {} generators, {} -> {} relators ({} passes)",
            presentation.generator_count(),
            result.presentation.generator_count(),
            presentation.relator_count(),
            result.presentation.relator_count(),
            result.passes_used
        );
        if result.hit_length_ceiling {
            say!("warning: relator length ceiling hit; result may be unsimplified");
        }
        say!();
        say!("{}", result.presentation.display(DisplayStyle::Plain));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compare(args: CompareArgs) -> multivirt::Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input)?;
    let presentation = Presentation::from_json_str(&text)?;
    let entry = build_entry(&args.against, args.n, args.k)?;
    let report = relator_sets_equal(&presentation, &entry.presentation);
    if report.equal() {
        say!(
            "equal: `{}` matches `{}` generator-for-generator and relator-for-relator",
            presentation.name(),
            entry.presentation.name()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        say!(
            "different: `{}` vs `{}`",
            presentation.name(),
            entry.presentation.name()
        );
        say!("{report}");
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn cmd_abelianize(args: AbelianizeArgs) -> multivirt::Result<ExitCode> {
    let presentation = match (&args.key, &args.input) {
        (Some(key), None) => build_entry(key, args.n, args.k)?.presentation,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Presentation::from_json_str(&text)?
        }
        _ => {
            return Err(Error::BadCatalogParams {
                key: "abelianize".to_string(),
                params: String::new(),
                reason: "pass exactly one of --key or --in".to_string(),
            })
        }
    };
    let ab = abelianization(&presentation);
    say!("{}: {}", presentation.name(), ab);
    Ok(ExitCode::SUCCESS)
}

fn cmd_index(args: IndexArgs) -> multivirt::Result<ExitCode> {
    let (n, k) = resolve_params(&args.group, args.n, args.k);
    let entry = build(&args.group, n, k)?;
    let hom = perm_hom(&args.map, n, k)?;
    let table = kernel_coset_table(&entry.presentation, &hom.images)?;
    say!(
        "[{} : ker {}] = {}",
        entry.presentation.name(),
        hom.name,
        table.degree()
    );
    if args.crosscheck {
        let dictionary = resolve_dictionary("auto", &args.map, n, k)?.ok_or_else(|| {
            Error::BadCatalogParams {
                key: args.map.clone(),
                params: format!("n={n}, k={k}"),
                reason: "no dictionary is available to generate the kernel subgroup".to_string(),
            }
        })?;
        let enumerated = todd_coxeter(&entry.presentation, &dictionary.expansion_words(), None)?;
        if table.canonicalize() == enumerated.canonicalize() {
            say!(
                "crosscheck: enumeration over {} agrees ({} cosets)",
                dictionary.key,
                enumerated.degree()
            );
        } else {
            say!(
                "crosscheck MISMATCH: enumeration over {} gives {} cosets and a \
                 different table",
                dictionary.key,
                enumerated.degree()
            );
            return Ok(ExitCode::from(EXIT_MISMATCH));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> multivirt::Result<ExitCode> {
    let mut ok = true;
    match args.suite {
        VerifySuite::Action => ok &= verify_action_suite(args.n, args.k)?,
        VerifySuite::Hom => ok &= verify_hom_suite(args.n, args.k)?,
        VerifySuite::Retraction => ok &= verify_retraction_suite(args.n, args.k)?,
        VerifySuite::All => {
            ok &= verify_hom_suite(args.n, args.k)?;
            ok &= verify_retraction_suite(args.n, args.k)?;
            ok &= verify_action_suite(args.n, args.k)?;
        }
    }
    if ok {
        say!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        say!("FAILED: at least one check did not pass");
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

/// Check that each permutation-valued map kills every relator of MkVB(n, k).
fn verify_hom_suite(n: usize, k: usize) -> multivirt::Result<bool> {
    let ambient = build("MkVB", n, k)?.presentation;
    let mut ok = true;
    for key in ["phi", "psi", "chi3", "chi4"] {
        let hom = perm_hom(key, n, k)?;
        match check_well_defined(&ambient, &hom) {
            Ok(()) => say!("ok: {} is well defined on {}", hom.name, ambient.name()),
            Err(e) => {
                ok = false;
                say!("MISMATCH: {e}");
            }
        }
    }
    Ok(ok)
}

/// Check that each projection/inclusion pair composes to the identity on
/// the generators of its source group.
fn verify_retraction_suite(n: usize, k: usize) -> multivirt::Result<bool> {
    let mut cases: Vec<(&str, &str, Presentation)> = vec![
        ("psi1", "iota1", build("VB", n, 1)?.presentation),
        ("psi3", "iota3", build("MkVB", n, k)?.presentation),
    ];
    if k >= 2 {
        cases.push(("psi2", "iota2", build("FVB", n, 1)?.presentation));
    }
    let mut ok = true;
    for (project_key, include_key, source) in cases {
        let project = match build_hom(project_key, n, k)? {
            HomSpec::Word(h) => h,
            HomSpec::Perm(_) => unreachable!("projection maps are word-valued"),
        };
        let include = match build_hom(include_key, n, k)? {
            HomSpec::Word(h) => h,
            HomSpec::Perm(_) => unreachable!("inclusion maps are word-valued"),
        };
        match check_retraction(&source, &include, &project) {
            Ok(_) => say!(
                "ok: {} after {} fixes every generator of {}",
                project.name,
                include.name,
                source.name()
            ),
            Err(e) => {
                ok = false;
                say!("MISMATCH: {e}");
            }
        }
    }
    Ok(ok)
}

/// Derive both conventional kernels and check that conjugation by each
/// involutive generator permutes the dictionary entries as predicted.
fn verify_action_suite(n: usize, k: usize) -> multivirt::Result<bool> {
    let ambient = build("MkVB", n, k)?.presentation;
    let strategy = TransversalStrategy::Lambda { n };
    let mut ok = true;
    for (map_key, dict_key) in [("phi", "MkVP"), ("psi", "MkVH")] {
        let hom = perm_hom(map_key, n, k)?;
        let dictionary = build_dictionary(dict_key, n, k)?;
        let derivation = derive(
            &ambient,
            &hom,
            &strategy,
            Some(&dictionary),
            DEFAULT_SIMPLIFY_BUDGET,
        )?;
        let report = verify_action(&derivation, &dictionary)?;
        if report.ok() {
            say!(
                "ok: action on ker {} verified ({} conjugates checked)",
                hom.name,
                report.checked
            );
        } else {
            ok = false;
            for line in &report.mismatches {
                say!("MISMATCH: {line}");
            }
        }
    }
    Ok(ok)
}

fn cmd_export(args: ExportArgs) -> multivirt::Result<ExitCode> {
    let entry = build_entry(&args.key, args.n, args.k)?;
    let text = entry.presentation.to_json_string();
    if args.out == "-" {
        say!("{text}");
    } else {
        write_text(&args.out, &text)?;
        eprintln!("wrote {}", args.out);
    }
    Ok(ExitCode::SUCCESS)
}

fn write_text(path: &str, text: &str) -> multivirt::Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(text.as_bytes())?;
    file.write_all(b"\n")?;
    Ok(())
}
