mod format;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand};
use graytts::decomp::decompose;
use graytts::search::{hill_climb_tts, SearchBudget, DEFAULT_SEED};
use graytts::spectrum::{verdict, Spectrum, SpectrumVerdict, VerdictStatus};
use graytts::{build_ibig, girth, is_bipartite, verify_certificate, Error, HamiltonCertificate};
use serde::Serialize;

use format::{DesignFile, Format};

const OK: u8 = 0;
const FAILED: u8 = 1;
const NOT_ADMISSIBLE: u8 = 2;
const NOT_CONSTRUCTIBLE: u8 = 3;
const BUDGET: u8 = 4;
const IO: u8 = 10;
const PARSE: u8 = 11;

#[derive(Parser)]
#[command(name = "graytts", version, about = "Twofold triple systems with cyclic 2-intersecting Gray codes")]
struct Cli {
    /// Suppress diagnostics on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a TTS(v) with a Hamiltonian 2-BIG and its Gray code.
    Build {
        v: u32,
        /// Output file; standard output when absent.
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "txt")]
        format: Format,
        /// Include the construction trace (JSON only).
        #[arg(long)]
        trace: bool,
    },
    /// Check that a file holds a TTS, and optionally its Gray code.
    Verify {
        path: PathBuf,
        /// Fail unless the file's cycle is a Hamilton cycle of the 2-BIG.
        #[arg(long)]
        certificate: bool,
    },
    /// Report properties of a design's 2-BIG.
    Analyze { path: PathBuf },
    /// Print a Hamilton decomposition of 2K_t.
    Decompose {
        t: u32,
        #[arg(long, value_enum, default_value = "txt")]
        format: Format,
    },
    /// Hill-climb for a TTS(v) with a Hamiltonian 2-BIG.
    Search {
        v: u32,
        /// Defaults to GRAYTTS_SEED, then a fixed seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = SearchBudget::default().max_iters)]
        max_iters: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "txt")]
        format: Format,
    },
    /// Build and re-verify every order in a range.
    Spectrum {
        lo: u32,
        hi: u32,
        #[arg(long, value_enum, default_value = "txt")]
        format: Format,
    },
}

struct Ui {
    quiet: bool,
}

impl Ui {
    fn note(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ui = Ui { quiet: cli.quiet };
    let code = match cli.command {
        Command::Build { v, out, format, trace } => cmd_build(&ui, v, out.as_deref(), format, trace),
        Command::Verify { path, certificate } => cmd_verify(&ui, &path, certificate),
        Command::Analyze { path } => cmd_analyze(&ui, &path),
        Command::Decompose { t, format } => cmd_decompose(&ui, t, format),
        Command::Search { v, seed, max_iters, out, format } => cmd_search(&ui, v, seed, max_iters, out.as_deref(), format),
        Command::Spectrum { lo, hi, format } => cmd_spectrum(&ui, lo, hi, format),
    };
    ExitCode::from(code)
}

fn error_code(ui: &Ui, e: &Error) -> u8 {
    ui.note(format!("error: {e}"));
    match e {
        Error::NotAdmissible(_) => NOT_ADMISSIBLE,
        Error::NotConstructible(_) => NOT_CONSTRUCTIBLE,
        Error::BudgetExhausted => BUDGET,
        _ => FAILED,
    }
}

fn write_out(ui: &Ui, out: Option<&Path>, text: &str) -> u8 {
    match out {
        None => {
            print!("{text}");
            OK
        }
        Some(path) => match fs::write(path, text) {
            Ok(()) => {
                ui.note(format!("wrote {}", path.display()));
                OK
            }
            Err(e) => {
                ui.note(format!("error: cannot write {}: {e}", path.display()));
                IO
            }
        },
    }
}

fn cmd_build(ui: &Ui, v: u32, out: Option<&Path>, format: Format, trace: bool) -> u8 {
    let built = match graytts::spectrum::build(v) {
        Ok(b) => b,
        Err(e) => return error_code(ui, &e),
    };
    if trace && format == Format::Txt {
        ui.note("note: the text format has no trace; use --format json");
    }
    let file = DesignFile::canonical(&built.design, Some(&built.certificate), trace.then_some(&*built.trace));
    let steps: Vec<String> = built.trace.steps().iter().map(|(r, v)| format!("{r} -> {v}")).collect();
    ui.note(format!("TTS({v}): {} blocks via {}", built.design.block_count(), steps.join(", ")));
    write_out(ui, out, &file.emit(format))
}

fn read_design(ui: &Ui, path: &Path) -> Result<DesignFile, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        ui.note(format!("error: cannot read {}: {e}", path.display()));
        PARSE
    })?;
    DesignFile::parse(&text).map_err(|e| {
        ui.note(format!("error: {}: {e}", path.display()));
        PARSE
    })
}

#[derive(Serialize)]
struct VerifyReport {
    v: u32,
    block_count: usize,
    is_tts: bool,
    is_simple: bool,
    pair_defects: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure_error: Option<String>,
    /// `verified`, `rejected`, `malformed` or `absent`.
    certificate: &'static str,
    ok: bool,
}

fn cmd_verify(ui: &Ui, path: &Path, check_certificate: bool) -> u8 {
    let file = match read_design(ui, path) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let mut report = VerifyReport {
        v: file.v,
        block_count: file.blocks.len(),
        is_tts: false,
        is_simple: false,
        pair_defects: 0,
        structure_error: None,
        certificate: "absent",
        ok: false,
    };
    match file.design() {
        Err(e) => report.structure_error = Some(e.to_string()),
        Ok(ts) => {
            let v = ts.validate();
            report.is_tts = v.is_tts;
            report.is_simple = v.is_simple;
            report.pair_defects = v.pair_defects.len();
            if let Some(order) = &file.hamilton_2big {
                report.certificate = match verify_certificate(&ts, &HamiltonCertificate::new(order.clone())) {
                    Ok(true) => "verified",
                    Ok(false) => "rejected",
                    Err(e) => {
                        ui.note(format!("certificate: {e}"));
                        "malformed"
                    }
                };
            }
        }
    }
    report.ok = report.is_tts && (!check_certificate || report.certificate == "verified");
    println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    if report.ok {
        OK
    } else {
        FAILED
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    v: u32,
    block_count: usize,
    edge_count: usize,
    regularity: Option<usize>,
    girth: Option<usize>,
    bipartite: bool,
    connected: bool,
}

fn cmd_analyze(ui: &Ui, path: &Path) -> u8 {
    let file = match read_design(ui, path) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let ts = match file.design() {
        Ok(ts) => ts,
        Err(e) => {
            ui.note(format!("error: {}: {e}", path.display()));
            return PARSE;
        }
    };
    let g = build_ibig(&ts, 2).expect("2 is a valid intersection size");
    let report = AnalyzeReport {
        v: ts.order(),
        block_count: ts.block_count(),
        edge_count: g.edge_count(),
        regularity: g.regularity(),
        girth: girth(&g),
        bipartite: is_bipartite(&g),
        connected: graytts::graph::is_connected(&g),
    };
    println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    OK
}

fn cmd_decompose(ui: &Ui, t: u32, format: Format) -> u8 {
    let d = match decompose(t) {
        Ok(d) => d,
        Err(e) => {
            ui.note(format!("error: {e}"));
            return NOT_ADMISSIBLE;
        }
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                t: u32,
                infinity: u32,
                cycles: Vec<&'a [u32]>,
            }
            let out = Out { t, infinity: d.infinity(), cycles: d.cycles.iter().map(|c| c.vertices.as_slice()).collect() };
            println!("{}", serde_json::to_string(&out).expect("decompositions serialize"));
        }
        Format::Txt => {
            println!("2K_{t} infinity={}", d.infinity());
            for (s, c) in d.cycles.iter().enumerate() {
                let vs: Vec<String> = c.vertices.iter().map(|x| x.to_string()).collect();
                println!("H{s}: {}", vs.join(" "));
            }
        }
    }
    OK
}

fn seed_from_env(ui: &Ui) -> u64 {
    match std::env::var("GRAYTTS_SEED") {
        Ok(s) => s.trim().parse().unwrap_or_else(|_| {
            ui.note(format!("warning: ignoring GRAYTTS_SEED={s}"));
            DEFAULT_SEED
        }),
        Err(_) => DEFAULT_SEED,
    }
}

fn cmd_search(ui: &Ui, v: u32, seed: Option<u64>, max_iters: u64, out: Option<&Path>, format: Format) -> u8 {
    let budget = SearchBudget { seed: seed.unwrap_or_else(|| seed_from_env(ui)), max_iters, ..SearchBudget::default() };
    ui.note(format!("searching order {v} with seed {}", budget.seed));
    match hill_climb_tts(v, &budget) {
        Ok((ts, cert)) => write_out(ui, out, &DesignFile::canonical(&ts, Some(&cert), None).emit(format)),
        Err(e) => error_code(ui, &e),
    }
}

fn verdict_line(v: &SpectrumVerdict) -> String {
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let status = serde_json::to_value(v.status).expect("statuses serialize");
    format!(
        "{} {} {} {} {} {}",
        v.order,
        status.as_str().unwrap_or("?"),
        opt(v.rule.map(|r| r.to_string())),
        opt(v.input_order.map(|i| i.to_string())),
        opt(v.block_count.map(|b| b.to_string())),
        match v.verified {
            Some(true) => "verified",
            Some(false) => "FAILED",
            None => "-",
        }
    )
}

fn cmd_spectrum(ui: &Ui, lo: u32, hi: u32, format: Format) -> u8 {
    if lo > hi {
        ui.note("error: empty range");
        return FAILED;
    }
    let spectrum = Spectrum::new();
    let orders: Vec<u32> = (lo..=hi).collect();
    let slots: Vec<Mutex<Option<SpectrumVerdict>>> = orders.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(orders.len());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&v) = orders.get(i) else { break };
                *slots[i].lock().expect("slot lock") = Some(verdict(&spectrum, v));
            });
        }
    });
    let verdicts: Vec<SpectrumVerdict> = slots.into_iter().map(|m| m.into_inner().expect("slot lock").expect("every order ran")).collect();
    match format {
        Format::Txt => {
            for v in &verdicts {
                println!("{}", verdict_line(v));
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&verdicts).expect("verdicts serialize")),
    }
    let bad: Vec<&SpectrumVerdict> = verdicts.iter().filter(|v| !v.is_ok()).collect();
    for v in &bad {
        ui.note(format!("order {} failed: {}", v.order, v.error.as_deref().unwrap_or("re-verification failed")));
    }
    let made = verdicts.iter().filter(|v| v.status == VerdictStatus::Constructed).count();
    ui.note(format!("{made} constructed, {} failed", bad.len()));
    if bad.is_empty() {
        OK
    } else {
        FAILED
    }
}
