use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cluster_arcs::diagram::{self, Report};
use cluster_arcs::ecluster::{e_compatible, euler, g_vector, Indec};
use cluster_arcs::embeddings::named_embedding;
use cluster_arcs::io::{parse_arc, parse_document, print_document, Document};
use cluster_arcs::kernel::{bounded_max_check, mutate, MutateOutcome, Window};
use cluster_arcs::models::polygon::{enumerate_clusters, exchange_graph};
use cluster_arcs::structures::{in_structure, StructureTag};
use cluster_arcs::tcluster::{parse_coord, t_compatible, CZPoint};
use cluster_arcs::Error;

#[derive(Parser)]
#[command(name = "cluster-arcs", version, about = "Type-A cluster theories as arc models")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Count,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the clusters of the n-gon.
    Enumerate {
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Flip one explicit arc of a cluster.
    Flip { file: PathBuf, arc: String },
    /// Push a cluster along a named embedding.
    Embed {
        name: String,
        file: PathBuf,
        #[arg(long, default_value_t = diagram::DEFAULT_RADIUS)]
        window: u32,
    },
    /// Push a cluster along several embeddings, first to last.
    Compose {
        #[arg(required = true, num_args = 1..)]
        names: Vec<String>,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = diagram::DEFAULT_RADIUS)]
        window: u32,
    },
    /// Run `theorem1`, `theorem2`, `paper-literal-fillers` or one named embedding.
    Verify {
        target: String,
        #[arg(long, default_value_t = diagram::DEFAULT_RADIUS)]
        window: u32,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// The exchange graph of the n-gon.
    Graph {
        n: u32,
        #[arg(long)]
        dot: bool,
    },
    /// E-compatibility of two indecomposables, e.g. `[0,2)` and `P(1-)`.
    ECheck { v: String, w: String },
    /// T-compatibility of two points `(x1, y1)`, `(x2, y2)` of C_Z.
    TCheck {
        #[arg(allow_hyphen_values = true)]
        x1: String,
        #[arg(allow_hyphen_values = true)]
        y1: String,
        #[arg(allow_hyphen_values = true)]
        x2: String,
        #[arg(allow_hyphen_values = true)]
        y2: String,
        /// Coordinates are multiples of pi, written `pi/4`, `-pi/2`.
        #[arg(long, conflicts_with = "pi_units")]
        radians: bool,
        /// Coordinates are plain rationals in units of pi (the default).
        #[arg(long)]
        pi_units: bool,
    },
    /// Whether a cluster belongs to a structure, e.g. `no_fountain@inf`.
    StructureCheck { tag: String, file: PathBuf },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &PathBuf) -> std::result::Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

fn check_line(doc: &Document, r: u32) -> std::result::Result<bool, Failure> {
    let w = Window::radius(doc.set.model(), r);
    let v = bounded_max_check(&doc.set, &w)?;
    println!("# bounded-max radius {r}: {v}");
    Ok(v.is_ok())
}

fn print_reports(reports: &[Report]) -> Outcome {
    let mut ok = true;
    for r in reports {
        println!("{r}");
        ok &= r.passed();
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} reports, {failed} failed", reports.len());
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Enumerate { n, format } => {
            if n < 4 {
                return Err(Failure::Usage(format!("enumerate needs n ≥ 4, got {n}")));
            }
            let clusters = enumerate_clusters(n)?;
            match format {
                Format::Count => println!("{}", clusters.len()),
                Format::Json => {
                    let list: Vec<Vec<String>> = clusters
                        .iter()
                        .map(|t| t.explicit().iter().map(|a| a.to_string()).collect())
                        .collect();
                    println!("{}", json!({ "n": n, "count": clusters.len(), "clusters": list }));
                }
            }
            Ok(())
        }
        Cmd::Flip { file, arc } => {
            let doc = read(&file)?;
            let x = parse_arc(doc.set.model(), &arc)?;
            let outcome = mutate(&doc.set, &x)?;
            println!("{outcome}");
            if let MutateOutcome::Mutable { t, .. } = outcome {
                print!("{}", print_document(&Document { set: t, meta: doc.meta }));
            }
            Ok(())
        }
        Cmd::Embed { name, file, window } => {
            let e = named_embedding(&name)?;
            let doc = read(&file)?;
            let image = Document::new(e.apply(&doc.set)?).with_meta("source", e.name.clone());
            print!("{}", print_document(&image));
            if check_line(&image, window)? {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Cmd::Compose { names, file, window } => {
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let e = diagram::compose_names(&refs)?;
            let doc = read(&file)?;
            let image = Document::new(e.apply(&doc.set)?).with_meta("source", e.name.clone());
            print!("{}", print_document(&image));
            if check_line(&image, window)? {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Cmd::Verify { target, window, samples } => match target.as_str() {
            "theorem1" => print_reports(&diagram::verify_theorem1(window, samples)?),
            "theorem2" => print_reports(&diagram::verify_theorem2(window, samples)?),
            "paper-literal-fillers" => {
                let mut pins = Vec::new();
                for m in 4..=7 {
                    pins.push(diagram::pin_polygon_filler(m));
                }
                pins.push(diagram::pin_odd_fan(4, 10));
                pins.push(Ok(diagram::pin_literal_d()));
                let mut ok = true;
                for p in pins {
                    match p {
                        Ok(p) => println!("EXPECTED-FAIL {}: {}", p.name, p.witness),
                        Err(e) => {
                            ok = false;
                            println!("UNEXPECTED-PASS {e}");
                        }
                    }
                }
                if ok {
                    Ok(())
                } else {
                    Err(Failure::Check)
                }
            }
            name => {
                let e = named_embedding(name)?;
                print_reports(&[diagram::verify_on(&e, window, samples)?])
            }
        },
        Cmd::Graph { n, dot } => {
            let g = exchange_graph(n)?;
            if dot {
                print!("{}", g.to_dot());
            } else {
                let d = g.degrees().first().copied().unwrap_or(0);
                println!(
                    "vertices {} edges {} regular {} degree {d} connected {}",
                    g.clusters.len(),
                    g.edges.len(),
                    g.is_regular(d),
                    g.is_connected()
                );
            }
            Ok(())
        }
        Cmd::ECheck { v, w } => {
            let (v, w): (Indec, Indec) = (v.parse()?, w.parse()?);
            let (gv, gw) = (g_vector(&v), g_vector(&w));
            println!("g({v}) = {gv}");
            println!("g({w}) = {gw}");
            println!("<g1,g2> = {}, <g2,g1> = {}", euler(&gv, &gw), euler(&gw, &gv));
            println!("{}", if e_compatible(&v, &w) { "compatible" } else { "incompatible" });
            Ok(())
        }
        Cmd::TCheck { x1, y1, x2, y2, radians, .. } => {
            let q: Vec<_> = [x1, y1, x2, y2].iter().map(|c| parse_coord(c, radians)).collect::<Result<_, _>>()?;
            let p1 = CZPoint::new(q[0], q[1])?;
            let p2 = CZPoint::new(q[2], q[3])?;
            println!("{}", if t_compatible(&p1, &p2) { "compatible" } else { "incompatible" });
            Ok(())
        }
        Cmd::StructureCheck { tag, file } => {
            let tag: StructureTag = tag.parse()?;
            let doc = read(&file)?;
            let inside = in_structure(tag, &doc.set)?;
            println!("{tag}: {inside}");
            if inside {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
