//! `orthomat`: load or generate orthoset instances, run axiom reports, build
//! and export closed-set lattices, compute rank and components, simplify, and
//! test isomorphism.
//!
//! Exit codes: 0 success / property holds, 1 a checked property fails,
//! 2 usage or input error. All output is byte-deterministic for a fixed
//! command line and input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orthomat::io::{
    instance_from_json_str, lattice_to_dot, lattice_to_json_string, orthoset_to_json_string,
    Instance, OrthosetJson,
};
use orthomat::rays::parse_vector_file;
use orthomat::*;

#[derive(Parser)]
#[command(name = "orthomat", version, about = "Finite orthosets and orthomatroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct CheckArgs {
    /// Instance file: an orthoset, or an explicit lattice (auto-detected)
    file: PathBuf,
    /// Evaluation budget per law; laws run exhaustively iff they fit
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    exhaustive_limit: u64,
    /// Cap on the number of closed sets
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: usize,
    /// Seed for sampled law checking
    #[arg(long, default_value_t = DEFAULT_SAMPLE_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the orthomatroid axioms and the propositional-system report
    Check(CheckArgs),
    /// Build the lattice of closed sets and export it
    Lattice {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Complete an orthoindependent set into an orthobasis of a span
    Basis {
        file: PathBuf,
        /// Comma-separated span set F (the basis spans closure(F))
        #[arg(long)]
        span: String,
        /// Comma-separated orthoindependent start set I (default empty)
        #[arg(long, default_value = "")]
        start: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rank of a subset's closure (default: the whole ground set)
    Rank {
        file: PathBuf,
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Irreducible components of a simple orthomatroid
    Components {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Simplify an orthomatroid and print the quotient map
    Simplify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide orthoisomorphism of two orthosets
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generate instances in the JSON orthoset format
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// All pairs orthogonal (Boolean instance of rank N)
    Discrete { n: usize },
    /// N orthogonal pairs (the Chinese lantern MO_N)
    Mo { n: usize },
    /// Orthoset of the rays listed in FILE (one vector per line)
    Rays {
        file: PathBuf,
        #[arg(long, value_enum)]
        form: FormArg,
        /// Silently drop isotropic rays instead of rejecting them
        #[arg(long)]
        drop_isotropic: bool,
    },
    /// Random orthoset: each pair orthogonal with probability DENSITY
    Random { n: usize, density: f64, seed: u64 },
    /// All orthomatroids on N labeled elements
    Enum {
        n: usize,
        /// Keep one representative per orthoisomorphism class
        #[arg(long)]
        up_to_iso: bool,
        /// Enumeration refuses to run above this bound
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Euclidean,
    Hermitian,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotOrthomatroid(_)
        | Error::NotSimple { .. }
        | Error::NotPropositionalSystem(_)
        | Error::NotTransitive { .. } => 1,
        _ => 2,
    }
}

const HOLDS: u8 = 0;
const FAILS: u8 = 1;

fn run(command: Command) -> Result<ExitCode> {
    let code = match command {
        Command::Check(args) => cmd_check(args)?,
        Command::Lattice {
            file,
            node_budget,
            format,
        } => cmd_lattice(&file, node_budget, format)?,
        Command::Basis {
            file,
            span,
            start,
            format,
        } => cmd_basis(&file, &span, &start, format)?,
        Command::Rank { file, set, format } => cmd_rank(&file, set.as_deref(), format)?,
        Command::Components { file, format } => cmd_components(&file, format)?,
        Command::Simplify { file, format } => cmd_simplify(&file, format)?,
        Command::Iso {
            file1,
            file2,
            format,
        } => cmd_iso(&file1, &file2, format)?,
        Command::Gen { what } => cmd_gen(what)?,
    };
    Ok(ExitCode::from(code))
}

fn load_orthoset(path: &PathBuf) -> Result<Orthoset> {
    match instance_from_json_str(&fs::read_to_string(path)?)? {
        Instance::Orthoset(m) => Ok(m),
        Instance::Lattice(_) => Err(Error::Parse(format!(
            "{} is a lattice file; this command needs an orthoset",
            path.display()
        ))),
    }
}

/// Render an element with its label when one exists, e.g. `2 (a2)`.
fn element(m: &Orthoset, x: usize) -> String {
    match m.label(x) {
        Some(l) => format!("{x} ({l})"),
        None => x.to_string(),
    }
}

fn subset(m: &Orthoset, indices: &[usize]) -> String {
    let plain = format!(
        "{{{}}}",
        indices
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    match m.labels() {
        Some(labels) => format!(
            "{} ({{{}}})",
            plain,
            indices
                .iter()
                .map(|&i| labels[i].clone())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => plain,
    }
}

fn axiom_witness(m: &Orthoset, w: &AxiomWitness) -> String {
    let mut out = format!("F={}", subset(m, &w.f));
    if let Some(x) = w.x {
        out.push_str(&format!(", x={}", element(m, x)));
    }
    if let Some(y) = w.y {
        out.push_str(&format!(", y={}", element(m, y)));
    }
    if let Some(j) = &w.j {
        out.push_str(&format!(", J={}", subset(m, j)));
    }
    out
}

#[derive(Serialize)]
struct CheckReport {
    structural: Vec<LawReport>,
    galois: Vec<LawReport>,
    closure_laws: Vec<LawReport>,
    exchange: AxiomVerdict,
    straightening: AxiomVerdict,
    orthobasis: AxiomVerdict,
    orthomatroid: bool,
    simple: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    propositional_system: Option<PropSysReport>,
}

fn cmd_check(args: CheckArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.file)?;
    match instance_from_json_str(&text)? {
        Instance::Orthoset(m) => check_orthoset(&m, &args),
        Instance::Lattice(l) => check_lattice(&l, args.format),
    }
}

fn check_orthoset(m: &Orthoset, args: &CheckArgs) -> Result<u8> {
    let structural = structural_laws(m);
    let galois = check_galois_seeded(m, args.exhaustive_limit, args.seed);
    let closure_laws = check_closure_laws_seeded(m, args.exhaustive_limit, args.seed);
    let closed: Vec<SubsetMask> = closed_sets(m, args.node_budget)?
        .into_iter()
        .map(ClosedSet::into_mask)
        .collect();
    let exchange = axioms::check_exchange_on(m, &closed);
    let straightening = axioms::check_straightening_on(m, &closed);
    let orthobasis = axioms::check_orthobasis_axiom_on(m, &closed);
    let orthomatroid = exchange.holds && straightening.holds;
    let simple = is_simple(m);

    let (rank_value, irreducible, propsys) = if orthomatroid {
        let basis = complete_orthobasis(m, &m.full_set(), &m.empty_set())?;
        let lattice = OrthoLattice::from_orthoset_budgeted(m, args.node_budget)?;
        let report = is_propositional_system(&lattice, Some(m));
        let irreducible = if simple {
            Some(components(m)?.block_count() == 1)
        } else {
            None
        };
        (Some(basis.elements.len()), irreducible, Some(report))
    } else {
        (None, None, None)
    };

    let report = CheckReport {
        structural,
        galois,
        closure_laws,
        exchange,
        straightening,
        orthobasis,
        orthomatroid,
        simple,
        rank: rank_value,
        irreducible,
        propositional_system: propsys,
    };

    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text | Format::Dot => {
            println!(
                "orthoset: valid (n={}, {} orthogonal pairs)",
                m.n(),
                m.pair_count()
            );
            for law in report
                .structural
                .iter()
                .chain(&report.galois)
                .chain(&report.closure_laws)
            {
                let mode = if law.exhaustive { "exhaustive" } else { "sampled" };
                println!(
                    "law {}: {} ({} checks, {})",
                    law.law.name(),
                    if law.holds { "holds" } else { "FAILS" },
                    law.checked_count,
                    mode
                );
            }
            for verdict in [&report.exchange, &report.straightening, &report.orthobasis] {
                if verdict.holds {
                    println!(
                        "{}: holds ({} closed sets checked)",
                        verdict.axiom.name(),
                        verdict.closed_sets_checked
                    );
                } else {
                    println!(
                        "{}: FAILS — witness {}",
                        verdict.axiom.name(),
                        axiom_witness(m, verdict.witness.as_ref().unwrap())
                    );
                }
            }
            if let Some(ps) = &report.propositional_system {
                println!(
                    "propositional system: {} (complete: {}, atomistic: {}, ortholattice: {}, orthomodular: {}, atom-covering: {})",
                    yes_no(ps.is_propositional_system),
                    yes_no(ps.complete.holds),
                    yes_no(ps.atomistic.holds),
                    yes_no(ps.ortholattice.holds),
                    yes_no(ps.orthomodular.holds),
                    yes_no(ps.atom_covering.holds)
                );
            }
            let mut summary = format!(
                "orthomatroid: {}; simple: {}",
                yes_no(report.orthomatroid),
                yes_no(report.simple)
            );
            if let Some(r) = report.rank {
                summary.push_str(&format!("; rank: {r}"));
            }
            match report.irreducible {
                Some(irr) => summary.push_str(&format!("; irreducible: {}", yes_no(irr))),
                None if report.orthomatroid => {
                    summary.push_str("; irreducible: n/a (simplify first)")
                }
                None => {}
            }
            println!("{summary}");
        }
    }
    Ok(if report.orthomatroid { HOLDS } else { FAILS })
}

fn check_lattice(l: &OrthoLattice, format: Format) -> Result<u8> {
    let report = is_propositional_system(l, None);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text | Format::Dot => {
            println!(
                "lattice: {} nodes, {} atoms, bottom {}, top {}",
                l.node_count(),
                l.atoms().len(),
                l.node_label(l.bottom()),
                l.node_label(l.top())
            );
            for (name, v) in [
                ("complete", &report.complete),
                ("atomistic", &report.atomistic),
                ("ortholattice", &report.ortholattice),
                ("orthomodular", &report.orthomodular),
                ("atom-covering", &report.atom_covering),
            ] {
                match &v.witness {
                    Some(w) => println!("{name}: FAILS — {}", w.description),
                    None => println!("{name}: holds"),
                }
            }
            println!(
                "propositional system: {}",
                yes_no(report.is_propositional_system)
            );
        }
    }
    Ok(if report.is_propositional_system {
        HOLDS
    } else {
        FAILS
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_lattice(file: &PathBuf, node_budget: usize, format: Format) -> Result<u8> {
    let text = fs::read_to_string(file)?;
    let lattice = match instance_from_json_str(&text)? {
        Instance::Orthoset(m) => OrthoLattice::from_orthoset_budgeted(&m, node_budget)?,
        Instance::Lattice(l) => l,
    };
    match format {
        Format::Json => println!("{}", lattice_to_json_string(&lattice)),
        Format::Dot => print!("{}", lattice_to_dot(&lattice)),
        Format::Text => {
            println!(
                "{} nodes, {} atoms, {} cover edges",
                lattice.node_count(),
                lattice.atoms().len(),
                lattice.hasse().len()
            );
            for i in 0..lattice.node_count() {
                let role = if i == lattice.bottom() && i == lattice.top() {
                    " (bottom, top)"
                } else if i == lattice.bottom() {
                    " (bottom)"
                } else if i == lattice.top() {
                    " (top)"
                } else if lattice.is_atom(i) {
                    " (atom)"
                } else {
                    ""
                };
                println!(
                    "node {i}: {}{role}, ortho -> {}",
                    lattice.node_label(i),
                    lattice.ortho(i)
                );
            }
            for &(lo, hi) in lattice.hasse() {
                println!("cover: {lo} -> {hi}");
            }
        }
    }
    Ok(HOLDS)
}

fn parse_subset(m: &Orthoset, text: &str) -> Result<SubsetMask> {
    let mut mask = m.empty_set();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let index: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad element index {part:?}")))?;
        if index >= m.n() {
            return Err(Error::OutOfRange { index, n: m.n() });
        }
        mask.insert(index);
    }
    Ok(mask)
}

fn cmd_basis(file: &PathBuf, span: &str, start: &str, format: Format) -> Result<u8> {
    let m = load_orthoset(file)?;
    let span = parse_subset(&m, span)?;
    let start = parse_subset(&m, start)?;
    let basis = complete_orthobasis(&m, &span, &start)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct BasisOut {
                basis: Vec<usize>,
                spans: Vec<usize>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&BasisOut {
                    basis: basis.elements.to_vec(),
                    spans: basis.spans.mask().to_vec(),
                })?
            );
        }
        _ => {
            println!("B = {}", subset(&m, &basis.elements.to_vec()));
            println!("spans = {}", subset(&m, &basis.spans.mask().to_vec()));
        }
    }
    Ok(HOLDS)
}

fn cmd_rank(file: &PathBuf, set: Option<&str>, format: Format) -> Result<u8> {
    let m = load_orthoset(file)?;
    let mask = match set {
        Some(text) => parse_subset(&m, text)?,
        None => m.full_set(),
    };
    let value = rank(&m, &mask)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct RankOut {
                set: Vec<usize>,
                rank: usize,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&RankOut {
                    set: mask.to_vec(),
                    rank: value.0,
                })?
            );
        }
        _ => println!("rank: {value}"),
    }
    Ok(HOLDS)
}

fn cmd_components(file: &PathBuf, format: Format) -> Result<u8> {
    let m = load_orthoset(file)?;
    let partition = components(&m)?;
    let ranks: Vec<usize> = partition
        .blocks
        .iter()
        .map(|b| rank(&m, b).map(|r| r.0))
        .collect::<Result<_>>()?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct ComponentsOut<'a> {
                #[serde(flatten)]
                partition: &'a ComponentPartition,
                block_ranks: Vec<usize>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&ComponentsOut {
                    partition: &partition,
                    block_ranks: ranks,
                })?
            );
        }
        _ => {
            let k = partition.block_count();
            println!("{} component{}", k, if k == 1 { "" } else { "s" });
            for (i, block) in partition.blocks.iter().enumerate() {
                println!(
                    "component {i}: size {}, rank {}, elements {}",
                    block.len(),
                    ranks[i],
                    subset(&m, &block.to_vec())
                );
            }
        }
    }
    Ok(HOLDS)
}

fn cmd_simplify(file: &PathBuf, format: Format) -> Result<u8> {
    let m = load_orthoset(file)?;
    let (simple, quotient) = simplify(&m)?;
    match format {
        Format::Text | Format::Dot => {
            println!("simplified: n={}, {} pairs", simple.n(), simple.pair_count());
            for (x, k) in quotient.iter().enumerate() {
                println!("quotient: {} -> {}", element(&m, x), k);
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct SimplifyOut {
                orthoset: OrthosetJson,
                quotient_map: Vec<usize>,
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&SimplifyOut {
                    orthoset: OrthosetJson::from(&simple),
                    quotient_map: quotient,
                })?
            );
        }
    }
    Ok(HOLDS)
}

fn cmd_iso(file1: &PathBuf, file2: &PathBuf, format: Format) -> Result<u8> {
    let m1 = load_orthoset(file1)?;
    let m2 = load_orthoset(file2)?;
    let found = ortho_isomorphic(&m1, &m2);
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct IsoOut {
                isomorphic: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                mapping: Option<Vec<usize>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                obstruction: Option<String>,
            }
            let out = match &found {
                Some(iso) => IsoOut {
                    isomorphic: true,
                    mapping: Some(iso.mapping.clone()),
                    obstruction: None,
                },
                None => IsoOut {
                    isomorphic: false,
                    mapping: None,
                    obstruction: Some(obstruction_text(&m1, &m2)),
                },
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        _ => match &found {
            Some(iso) => {
                println!("ISOMORPHIC");
                for (x, y) in iso.mapping.iter().enumerate() {
                    println!("{} -> {}", element(&m1, x), element(&m2, *y));
                }
            }
            None => println!("NOT ISOMORPHIC: {}", obstruction_text(&m1, &m2)),
        },
    }
    Ok(if found.is_some() { HOLDS } else { FAILS })
}

fn obstruction_text(m1: &Orthoset, m2: &Orthoset) -> String {
    roundtrip::ortho_iso_obstruction(m1, m2)
        .unwrap_or_else(|| "no mapping found (backtracking exhausted)".to_string())
}

fn cmd_gen(what: GenCommand) -> Result<u8> {
    match what {
        GenCommand::Discrete { n } => println!("{}", orthoset_to_json_string(&discrete(n))),
        GenCommand::Mo { n } => {
            if n == 0 {
                return Err(Error::Parse("MO_n requires n >= 1".into()));
            }
            println!("{}", orthoset_to_json_string(&mo(n)));
        }
        GenCommand::Rays {
            file,
            form,
            drop_isotropic,
        } => {
            let raw = parse_vector_file(&fs::read_to_string(&file)?)?;
            let dimension = raw
                .first()
                .map(Vec::len)
                .ok_or_else(|| Error::Parse("ray file has no vectors".into()))?;
            let kind = match form {
                FormArg::Euclidean => FormKind::Euclidean,
                FormArg::Hermitian => FormKind::Hermitian,
            };
            let policy = if drop_isotropic {
                IsotropicPolicy::Drop
            } else {
                IsotropicPolicy::Reject
            };
            let (m, _) = from_rays_form(&raw, FormSpec { kind, dimension }, policy)?;
            println!("{}", orthoset_to_json_string(&m));
        }
        GenCommand::Random { n, density, seed } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::Parse(format!("density {density} not in [0, 1]")));
            }
            println!(
                "{}",
                orthoset_to_json_string(&random_orthoset(n, density, seed))
            );
        }
        GenCommand::Enum { n, up_to_iso, max_n } => {
            let list = enumerate_orthomatroids(
                n,
                EnumOptions {
                    max_n,
                    reduce_iso: up_to_iso,
                },
            )?;
            let out: Vec<OrthosetJson> = list.iter().map(OrthosetJson::from).collect();
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(HOLDS)
}
