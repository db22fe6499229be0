use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use foliate::corpus;
use foliate::model::Model;
use foliate::report::{self, Report, Sections, Status, Verdict};

#[derive(Parser)]
#[command(name = "foliate", version, about = "Exact checks for transversely generalized complex models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural validators.
    Validate(Inputs),
    /// Graded basic cohomology.
    Cohomology {
        #[command(flatten)]
        inputs: Inputs,
        /// Print cocycle representatives.
        #[arg(long)]
        reps: bool,
    },
    /// Operator identities and the equivalent conditions.
    Battery {
        #[command(flatten)]
        inputs: Inputs,
        /// Lemma verdicts and witnesses (always included).
        #[arg(long)]
        ddj: bool,
        /// Page dimensions of the spectral sequence.
        #[arg(long)]
        spectral: bool,
        /// Ranks of the Lefschetz maps.
        #[arg(long)]
        lefschetz: bool,
        /// Every section.
        #[arg(long)]
        all: bool,
    },
    /// Print the canonical model file.
    Export(Inputs),
}

#[derive(Args)]
struct Inputs {
    /// Model files.
    files: Vec<PathBuf>,
    /// Built-in model; `all` selects every entry.
    #[arg(long = "model", value_name = "NAME")]
    models: Vec<String>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

enum Source {
    File(PathBuf),
    Corpus(&'static str),
}

impl Source {
    fn label(&self) -> String {
        match self {
            Source::File(p) => p.display().to_string(),
            Source::Corpus(n) => n.to_string(),
        }
    }

    fn text(&self) -> Result<String, String> {
        match self {
            Source::File(p) => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
            Source::Corpus(n) => Ok(corpus::source(n).expect("resolved name").to_string()),
        }
    }
}

impl Inputs {
    fn sources(&self) -> Result<Vec<Source>, String> {
        let mut out: Vec<Source> = self.files.iter().cloned().map(Source::File).collect();
        for name in &self.models {
            if name == "all" {
                out.extend(corpus::names().map(Source::Corpus));
            } else {
                let entry = corpus::ENTRIES
                    .iter()
                    .find(|e| e.0 == name)
                    .ok_or_else(|| format!("unknown model '{name}'; known: {}", corpus::names().collect::<Vec<_>>().join(", ")))?;
                out.push(Source::Corpus(entry.0));
            }
        }
        if out.is_empty() {
            return Err("no input: give model files or --model <name>".into());
        }
        Ok(out)
    }
}

enum Job {
    Validate,
    Cohomology { reps: bool },
    Battery(Sections),
}

impl Job {
    fn command(&self) -> &'static str {
        match self {
            Job::Validate => "validate",
            Job::Cohomology { .. } => "cohomology",
            Job::Battery(_) => "battery",
        }
    }

    fn run(&self, source: &Source) -> Report {
        let text = match source.text() {
            Ok(t) => t,
            Err(e) => return Report::unreadable(&source.label(), self.command(), e),
        };
        let model = match Model::parse(&text) {
            Ok(m) => m,
            Err(e) => return Report::failure(&source.label(), self.command(), &e),
        };
        match self {
            Job::Validate => report::validate(&model),
            Job::Cohomology { reps } => report::cohomology(&model, *reps),
            Job::Battery(s) => report::battery(&model, *s),
        }
    }
}

/// Runs `f` on every source concurrently; results keep input order.
fn run_all<T: Send>(sources: &[Source], f: impl Fn(&Source) -> T + Sync) -> Vec<T> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = sources.iter().map(|s| scope.spawn(|| f(s))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn combined(statuses: impl IntoIterator<Item = Status>) -> Status {
    statuses.into_iter().fold(Status::Holds, |acc, s| match (acc, s) {
        (Status::Error, _) | (_, Status::Error) => Status::Error,
        (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
        _ => Status::Holds,
    })
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn render_text(r: &Report) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    let _ = writeln!(s, "== {} ({}) ==", r.model, r.command);
    for c in &r.validators {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        match &c.detail {
            Some(d) => {
                let _ = writeln!(s, "  {mark} {}: {d}", c.name);
            }
            None => {
                let _ = writeln!(s, "  {mark} {}", c.name);
            }
        }
    }
    for (k, v) in &r.properties {
        let _ = writeln!(s, "  {k}: {v}");
    }
    for (k, v) in &r.dims {
        let _ = writeln!(s, "  dims {k}: {}", join(v));
    }
    if let Some(reps) = &r.representatives {
        for (deg, list) in reps.iter().enumerate() {
            let _ = writeln!(s, "  H^{deg}: {}", if list.is_empty() { "0".into() } else { list.join(", ") });
        }
    }
    if let Some(list) = &r.translations {
        let nontrivial: Vec<&str> = list.iter().filter(|c| !c.trivial).map(|c| c.generator.as_str()).collect();
        let fixed = list.iter().filter(|c| c.preserves_j).count();
        let _ = writeln!(s, "  H_s invariance: {fixed}/{} generators fix J", list.len());
        if !nontrivial.is_empty() {
            let _ = writeln!(s, "  H_s nontrivial: {}", nontrivial.join(" "));
        }
    }
    for (k, v) in &r.verdicts {
        let _ = writeln!(s, "  verdict {k}: {}", verdict_word(*v));
    }
    for (k, w) in &r.witnesses {
        let piece = w.piece.map(|p| format!(" in U^{p}")).unwrap_or_default();
        let _ = writeln!(s, "  witness {k}: {}{piece}", w.form);
    }
    if let Some(sp) = &r.spectral {
        let _ = writeln!(s, "  spectral  {}", sp.labels.join(" "));
        for (i, page) in sp.pages.iter().enumerate() {
            let _ = writeln!(s, "    E_{:<3}   {}", i + 1, join(page));
        }
        let _ = writeln!(s, "    E_inf   {}", join(&sp.infinity));
        let _ = writeln!(s, "    degenerates at E_{}", sp.degenerates_at);
    }
    if let Some(maps) = &r.lefschetz {
        for m in maps {
            let _ = writeln!(
                s,
                "  L^{}: {} -> {}  rank {}{}{}",
                m.k,
                m.source,
                m.target,
                m.rank,
                if m.injective { ", injective" } else { "" },
                if m.surjective { ", surjective" } else { "" },
            );
        }
    }
    match (r.status(), r.command) {
        (Status::Error, _) => {
            let _ = writeln!(s, "error");
        }
        (_, "validate") => {
            let kind = r.properties.get("structure_kind").map(|k| format!("{k} ")).unwrap_or_default();
            let _ = writeln!(s, "valid {kind}model");
        }
        _ => {
            if let Some(v) = r.verdict {
                let _ = writeln!(s, "verdict: {}", verdict_word(v));
            }
        }
    }
    s
}

fn emit(reports: &[Report], json: bool) -> Status {
    if json {
        let out = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(reports)
        };
        println!("{}", out.expect("reports serialize"));
    } else {
        for r in reports {
            print!("{}", render_text(r));
        }
    }
    combined(reports.iter().map(Report::status))
}

fn export(sources: &[Source]) -> Status {
    let results = run_all(sources, |src| {
        let text = src.text()?;
        let model = Model::parse(&text).map_err(|e| format!("{}: {e}", src.label()))?;
        Ok::<_, String>(model.source.render())
    });
    let mut status = Status::Holds;
    for r in results {
        match r {
            Ok(text) => print!("{text}"),
            Err(e) => {
                eprintln!("error: {e}");
                status = Status::Error;
            }
        }
    }
    status
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (inputs, job) = match &cli.command {
        Command::Validate(i) => (i, Some(Job::Validate)),
        Command::Cohomology { inputs, reps } => (inputs, Some(Job::Cohomology { reps: *reps })),
        Command::Battery {
            inputs,
            ddj: _,
            spectral,
            lefschetz,
            all,
        } => (
            inputs,
            Some(Job::Battery(Sections {
                spectral: *spectral || *all,
                lefschetz: *lefschetz || *all,
            })),
        ),
        Command::Export(i) => (i, None),
    };
    let sources = match inputs.sources() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let status = match job {
        Some(job) => {
            let reports = run_all(&sources, |s| job.run(s));
            emit(&reports, inputs.json)
        }
        None => export(&sources),
    };
    ExitCode::from(status.exit_code() as u8)
}
