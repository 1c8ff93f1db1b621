use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use splitlat::io::{to_dot, LatticeDoc, PosetDoc, PosetObject};
use splitlat::lattice::{IdealLattice, DEFAULT_MAX_IDEALS};
use splitlat::tableaux::{enumerate_tableaux, to_littelmann};
use splitlat::verify::{check_tableaux, run_verify, structure_report, Corpus, Report, Status, VerifyConfig};
use splitlat::weyl::{character_from_weights, rgf_from_lattice, rgf_product, verify_weyl_character};
use splitlat::{semistandard_poset, Algebra, Color, HighestWeight, Order};

/// Like `println!`, but a closed pipe is not an error.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "splitlat", version, about = "Semistandard posets and their colored ideal lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the semistandard grid poset for (g, lambda).
    Build {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        weight: HighestWeight,
        #[arg(long, default_value = "ba")]
        order: Order,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the order ideals of a poset file.
    Enumerate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_IDEALS)]
        max_ideals: usize,
    },
    /// Character of a lattice file.
    Character {
        #[arg(long = "in")]
        input: PathBuf,
        /// Check the Weyl character formula.
        #[arg(long)]
        verify: bool,
        /// Defaults to the algebra inferred from the edge weights.
        #[arg(long)]
        algebra: Option<Algebra>,
        /// Defaults to the weight of the top element.
        #[arg(long)]
        weight: Option<HighestWeight>,
    },
    /// Rank generating function of the semistandard lattice.
    Rgf {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        weight: HighestWeight,
        #[arg(long, default_value = "ba")]
        order: Order,
        /// Compare with the product formula.
        #[arg(long)]
        check_product: bool,
    },
    /// List the g-semistandard tableaux of shape lambda.
    Tableaux {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        weight: HighestWeight,
        /// Print the Littelmann tableau next to each one.
        #[arg(long)]
        littelmann: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Run the verification suite.
    Verify {
        /// Only the tableau bijection checks.
        #[arg(long)]
        bijection: bool,
        /// Only test the structure condition on one poset or lattice file.
        #[arg(long)]
        structure: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_ab: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_IDEALS)]
        max_ideals: usize,
    },
    /// Convert a poset or lattice file.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

enum Failure {
    Check(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

/// A lattice document, or a poset document whose lattice is computed.
fn load_lattice(text: &str) -> Result<LatticeDoc, Failure> {
    if let Ok(doc) = LatticeDoc::parse(text) {
        return Ok(doc);
    }
    let doc = PosetDoc::parse(text).map_err(usage)?;
    let obj = doc.to_object().map_err(usage)?;
    let p = obj.vertex_colored().ok_or_else(|| usage("expected a lattice or a vertex-colored poset"))?;
    let l = IdealLattice::of_poset(p, DEFAULT_MAX_IDEALS).map_err(usage)?;
    Ok(LatticeDoc::from_lattice(&l, doc))
}

fn to_text(obj: &PosetObject) -> String {
    let mut lines = Vec::new();
    match obj {
        PosetObject::Edge(e) => {
            let ids = e.poset.ids();
            lines.push(format!("edge-colored poset, {} elements", e.len()));
            for (u, v, c) in e.colored_covers() {
                lines.push(format!("{} < {} {c}", ids[u], ids[v]));
            }
        }
        other => {
            let p = other.vertex_colored().unwrap();
            let ids = p.poset.ids();
            lines.push(format!("vertex-colored poset, {} elements", p.len()));
            for v in 0..p.len() {
                match other {
                    PosetObject::Grid(g) => lines.push(format!("{} {} chain {}", ids[v], p.colors[v], g.chain(v))),
                    _ => lines.push(format!("{} {}", ids[v], p.colors[v])),
                }
            }
            for &(u, v) in p.poset.covers() {
                lines.push(format!("{} < {}", ids[u], ids[v]));
            }
        }
    }
    lines.join("\n")
}

fn finish(report: &Report, out: &Option<PathBuf>) -> Outcome {
    for c in &report.checks {
        let status = if c.status == Status::Pass { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) => eprintln!("{status} {} [{}] {} ms: {d}", c.name, c.params, c.millis),
            None => eprintln!("{status} {} [{}] {} ms", c.name, c.params, c.millis),
        }
    }
    emit(out, &report.to_json())?;
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Check("verification failed".into()))
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Build { algebra, weight, order, out } => {
            let p = semistandard_poset(algebra, order, weight);
            emit(&out, &PosetDoc::from_grid(&p).to_json())
        }
        Command::Enumerate { input, out, max_ideals } => {
            let doc = PosetDoc::parse(&read(&input)?).map_err(usage)?;
            let obj = doc.to_object().map_err(usage)?;
            let p = obj.vertex_colored().ok_or_else(|| usage("expected a vertex-colored poset"))?;
            let l = IdealLattice::of_poset(p, max_ideals).map_err(|e| Failure::Check(e.to_string()))?;
            emit(&out, &LatticeDoc::from_lattice(&l, doc).to_json())
        }
        Command::Character { input, verify, algebra, weight } => {
            let doc = load_lattice(&read(&input)?)?;
            let chi = character_from_weights(&doc.weights);
            out!("{chi}");
            if !verify {
                return Ok(());
            }
            let g = match algebra {
                Some(g) => g,
                None => {
                    let graph = doc.graph().map_err(usage)?;
                    let m = splitlat::lattice::infer_structure_rows(&graph, &doc.weights)
                        .map_err(|c| Failure::Check(format!("{c}-edges do not have a common weight shift")))?;
                    *Algebra::ALL
                        .iter()
                        .find(|g| m.iter().zip(Color::ALL).all(|(r, c)| r.is_none_or(|r| r == g.cartan().row(c))))
                        .ok_or_else(|| Failure::Check("edge weights match no Cartan matrix".into()))?
                }
            };
            let lam = match weight {
                Some(w) => w,
                None => {
                    let top = *doc.weights.last().ok_or_else(|| usage("empty lattice"))?;
                    if top.a < 0 || top.b < 0 {
                        return Err(Failure::Check(format!("top weight {top} is not dominant")));
                    }
                    HighestWeight::new(top.a as u32, top.b as u32)
                }
            };
            if verify_weyl_character(g, lam, &chi) {
                eprintln!("PASS weyl character {g} ({lam})");
                Ok(())
            } else {
                Err(Failure::Check(format!("A_rho * chi != A_(rho+lambda) for {g} ({lam})")))
            }
        }
        Command::Rgf { algebra, weight, order, check_product } => {
            let l = IdealLattice::of_grid(&semistandard_poset(algebra, order, weight), DEFAULT_MAX_IDEALS)
                .map_err(|e| Failure::Check(e.to_string()))?;
            let got = rgf_from_lattice(&l);
            out!("{got}");
            if check_product {
                let want = rgf_product(algebra, weight).map_err(|e| Failure::Check(e.to_string()))?;
                if got != want {
                    return Err(Failure::Check(format!("product formula gives {want}")));
                }
                eprintln!("PASS product formula");
            }
            Ok(())
        }
        Command::Tableaux { algebra, weight, littelmann, count_only } => {
            let tabs = enumerate_tableaux(algebra, weight).map_err(usage)?;
            if count_only {
                out!("{}", tabs.len());
                return Ok(());
            }
            for t in &tabs {
                if littelmann {
                    out!("{t} {}", to_littelmann(algebra, t).map_err(usage)?);
                } else {
                    out!("{t}");
                }
            }
            Ok(())
        }
        Command::Verify { bijection, structure, out, max_ab, max_ideals } => {
            let config = VerifyConfig { max_ab, max_ideals, ..VerifyConfig::default() };
            let report = if let Some(path) = structure {
                let doc = PosetDoc::parse(&read(&path)?).map_err(usage)?;
                let obj = doc.to_object().map_err(usage)?;
                Report { checks: vec![structure_report(&obj)] }
            } else if bijection {
                let corpus = Corpus::build(config).map_err(Failure::Check)?;
                let start = std::time::Instant::now();
                let res = check_tableaux(&corpus);
                Report {
                    checks: vec![splitlat::verify::CheckResult {
                        name: "tableaux".into(),
                        params: format!("a,b<={max_ab}"),
                        status: if res.is_ok() { Status::Pass } else { Status::Fail },
                        millis: start.elapsed().as_millis(),
                        detail: res.err(),
                    }],
                }
            } else {
                run_verify(config)
            };
            finish(&report, &out)
        }
        Command::Export { input, format } => {
            let text = read(&input)?;
            let doc = match LatticeDoc::parse(&text) {
                Ok(l) => PosetDoc::from_edge(&l.graph().map_err(usage)?),
                Err(_) => PosetDoc::parse(&text).map_err(usage)?,
            };
            let obj = doc.to_object().map_err(usage)?;
            match format {
                Format::Json => out!("{}", obj.to_doc().to_json()),
                Format::Dot => out!("{}", to_dot(&obj).trim_end()),
                Format::Text => out!("{}", to_text(&obj)),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
