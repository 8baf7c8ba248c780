use clap::{Parser, Subcommand, ValueEnum};
use prestab::document::{
    ClassifyReport, ComponentsReport, Document, StabeqReport, TorsionReport, WitnessReport,
};
use prestab::dot::export_dot;
use prestab::{canonicalize, laws, stab_cokernel, torsion_sequence, z_cokernel, z_kernel};
use prestab::{CongruenceOutcome, Preorder};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "prestab",
    version,
    about = "Finite preorders, torsion sequences, and the stable category"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one computation over document files
    Compute {
        #[arg(value_enum)]
        task: Task,
        /// Input documents (JSON); see the README for the schemas
        inputs: Vec<PathBuf>,
        /// Close input relations transitively instead of rejecting
        /// non-transitive ones
        #[arg(long)]
        close: bool,
        /// Write the result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a named verification suite; exits 0 on pass, 1 on failure
    Verify {
        /// One of the registered suite names (see `verify help`)
        suite: String,
        /// Largest carrier size to quantify over
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Export a preorder document as a DOT graph
    ExportDot {
        input: PathBuf,
        #[arg(long)]
        close: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Task {
    /// Transitive closure of a preorder document (use with --close)
    Closure,
    /// Finest clopen decomposition of a preorder
    Components,
    /// Equivalence-relation / partial-order / discrete flags
    Classify,
    /// Canonical torsion sequence of a preorder
    Torsion,
    /// Z-kernel of a morphism
    Zkernel,
    /// Z-cokernel of a morphism
    Zcokernel,
    /// Congruence of two parallel partial morphisms
    Stabeq,
    /// Composite of two partial morphisms (first then second)
    Compose,
    /// Cokernel of a partial morphism in the stable category
    Cokernel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

struct Failure(String);

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Compute {
            task,
            inputs,
            close,
            out,
            format,
        } => run_compute(task, &inputs, close, out.as_deref(), format),
        Command::Verify {
            suite,
            max_size,
            out,
            format,
        } => run_verify(&suite, max_size, out.as_deref(), format),
        Command::ExportDot { input, close, out } => {
            let doc = read_document(&input)?;
            let p = doc
                .expect_preorder(close)
                .map_err(|e| Failure(format!("{}: {e}", input.display())))?;
            write_output(out.as_deref(), &export_dot(&p))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_document(path: &std::path::Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&std::path::Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

enum Rendered {
    Doc(Document),
    Components(ComponentsReport),
    Classify(ClassifyReport),
    Torsion(TorsionReport),
    Stabeq(StabeqReport),
}

impl Rendered {
    fn to_json(&self) -> String {
        match self {
            Rendered::Doc(d) => d.emit(),
            Rendered::Components(r) => pretty(r),
            Rendered::Classify(r) => pretty(r),
            Rendered::Torsion(r) => pretty(r),
            Rendered::Stabeq(r) => pretty(r),
        }
    }

    fn to_text(&self) -> Result<String, Failure> {
        Ok(match self {
            Rendered::Doc(doc) => match doc {
                Document::Preorder(_) => format!("{}\n", doc.expect_preorder(false).unwrap()),
                Document::Morphism(_) => format!("{}\n", doc.expect_morphism(false).unwrap()),
                Document::PartialMorphism(_) => {
                    format!("{}\n", doc.expect_partial(false).unwrap())
                }
            },
            Rendered::Components(r) => {
                let mut s = String::new();
                for (i, block) in r.blocks.iter().enumerate() {
                    s.push_str(&format!("block {i}: {block:?}\n"));
                }
                s
            }
            Rendered::Classify(r) => format!(
                "equivalence relation: {}\npartial order: {}\ndiscrete: {}\n",
                r.is_equivalence_object, r.is_partial_order_object, r.is_discrete
            ),
            Rendered::Torsion(r) => format!(
                "kernel part:   {}\nquotient part: {}\n",
                r.kernel_part.expect_morphism(false).unwrap(),
                r.quotient_part.expect_morphism(false).unwrap()
            ),
            Rendered::Stabeq(r) => match (&r.witness, r.offending_component) {
                (Some(w), _) => format!(
                    "congruent: agree on {:?}, trivial residues {:?} and {:?}\n",
                    w.a0, w.complements.0, w.complements.1
                ),
                (None, Some(c)) => format!("not congruent: component {c} separates the maps\n"),
                _ => "not congruent\n".to_string(),
            },
        })
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn want_arity(task: Task, inputs: &[Document], n: usize) -> Result<(), Failure> {
    if inputs.len() != n {
        return Err(Failure(format!(
            "task {task:?} expects {n} input document(s), got {}",
            inputs.len()
        )));
    }
    Ok(())
}

fn run_compute(
    task: Task,
    inputs: &[PathBuf],
    close: bool,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<ExitCode, Failure> {
    let docs = inputs
        .iter()
        .map(|p| read_document(p))
        .collect::<Result<Vec<_>, _>>()?;
    let invalid = |e: prestab::document::DocError| Failure(e.to_string());

    let rendered = match task {
        Task::Closure => {
            want_arity(task, &docs, 1)?;
            let p = docs[0].expect_preorder(close).map_err(invalid)?;
            Rendered::Doc(Document::from_preorder(&p))
        }
        Task::Components => {
            want_arity(task, &docs, 1)?;
            let p = docs[0].expect_preorder(close).map_err(invalid)?;
            Rendered::Components(ComponentsReport {
                blocks: p
                    .clopen_components()
                    .blocks()
                    .iter()
                    .map(|b| b.indices())
                    .collect(),
            })
        }
        Task::Classify => {
            want_arity(task, &docs, 1)?;
            let p = docs[0].expect_preorder(close).map_err(invalid)?;
            let c = p.classify();
            Rendered::Classify(ClassifyReport {
                is_equivalence_object: c.is_equivalence_object,
                is_partial_order_object: c.is_partial_order_object,
                is_discrete: c.is_discrete,
            })
        }
        Task::Torsion => {
            want_arity(task, &docs, 1)?;
            let p: Arc<Preorder> = Arc::new(docs[0].expect_preorder(close).map_err(invalid)?);
            let seq = torsion_sequence(&p);
            Rendered::Torsion(TorsionReport {
                kernel_part: Document::from_morphism(seq.kernel_part()),
                quotient_part: Document::from_morphism(seq.quotient_part()),
            })
        }
        Task::Zkernel => {
            want_arity(task, &docs, 1)?;
            let f = docs[0].expect_morphism(close).map_err(invalid)?;
            Rendered::Doc(Document::from_morphism(&z_kernel(&f)))
        }
        Task::Zcokernel => {
            want_arity(task, &docs, 1)?;
            let f = docs[0].expect_morphism(close).map_err(invalid)?;
            Rendered::Doc(Document::from_morphism(&z_cokernel(&f)))
        }
        Task::Stabeq => {
            want_arity(task, &docs, 2)?;
            let p1 = docs[0].expect_partial(close).map_err(invalid)?;
            let p2 = docs[1].expect_partial(close).map_err(invalid)?;
            let outcome = p1.congruence(&p2).map_err(|e| Failure(e.to_string()))?;
            Rendered::Stabeq(match outcome {
                CongruenceOutcome::Congruent(w) => StabeqReport {
                    congruent: true,
                    witness: Some(WitnessReport {
                        a0: w.a0.indices(),
                        complements: (w.complements.0.indices(), w.complements.1.indices()),
                    }),
                    offending_component: None,
                },
                CongruenceOutcome::NotCongruent { component } => StabeqReport {
                    congruent: false,
                    witness: None,
                    offending_component: Some(component),
                },
            })
        }
        Task::Compose => {
            want_arity(task, &docs, 2)?;
            let first = docs[0].expect_partial(close).map_err(invalid)?;
            let second = docs[1].expect_partial(close).map_err(invalid)?;
            let composite = second
                .compose(&first)
                .map_err(|e| Failure(e.to_string()))?;
            Rendered::Doc(Document::from_partial(&composite))
        }
        Task::Cokernel => {
            want_arity(task, &docs, 1)?;
            let p = docs[0].expect_partial(close).map_err(invalid)?;
            let c = stab_cokernel(&canonicalize(&p));
            Rendered::Doc(Document::from_partial(c.underlying()))
        }
    };

    let content = match format {
        Format::Json => rendered.to_json(),
        Format::Text => rendered.to_text()?,
        Format::Dot => match &rendered {
            Rendered::Doc(doc @ Document::Preorder(_)) => {
                export_dot(&doc.expect_preorder(false).unwrap())
            }
            _ => {
                return Err(Failure(
                    "dot output is only available for preorder results".to_string(),
                ))
            }
        },
    };
    write_output(out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    suite: &str,
    max_size: usize,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<ExitCode, Failure> {
    let report = laws::run_suite(suite, max_size).map_err(|e| Failure(e.to_string()))?;
    let content = match format {
        Format::Json => pretty(&report),
        Format::Text => report.to_string(),
        Format::Dot => {
            return Err(Failure(
                "dot output is only available for preorder results".to_string(),
            ))
        }
    };
    write_output(out, &content)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
