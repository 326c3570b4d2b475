//! `qk`: products, tableaux, diagrams and Gromov-Witten invariants in the
//! quantum K-theory of the classical cominuscule Grassmannians.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qk_core::ring::{pieri, psi, undeformed_pieri_lg, QKClass};
use qk_core::seidel::parse_word;
use qk_core::shape::QuantumShape;
use qk_core::symplectic::{curve_nbhd_symbols, diagram, gw_pieri, ppq_descriptor, MatrixDiagram, SchubertSymbol};
use qk_core::tableaux::{enumerate, TableauKind};
use qk_core::verify::{self, SuiteReport};
use qk_core::{Error, Family};
use std::io::Write;

#[derive(Parser)]
#[command(name = "qk", version, about = "Quantum K-theory Pieri and Seidel product calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gra,
    Og,
    Lg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Kog,
    Klg,
    Qklg,
}

#[derive(Args)]
struct FamilyOpts {
    /// Family: gra (needs --m), og, or lg.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// n parameter: Gr(m,n), OG(n,2n) or LG(n,2n).
    #[arg(long)]
    n: u32,
    /// m parameter for Gr(m,n).
    #[arg(long)]
    m: Option<u32>,
}

impl FamilyOpts {
    fn family(&self) -> Result<Family, Error> {
        match self.family {
            FamilyArg::Gra => {
                let m = self.m.ok_or_else(|| Error::Parse("--family gra requires --m".into()))?;
                Family::gr(m, self.n)
            }
            FamilyArg::Og => Family::og(self.n),
            FamilyArg::Lg => Family::lg(self.n),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quantum Pieri product O^p * O^shape.
    Pieri {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long)]
        p: i64,
        /// Shape literal, e.g. "7,5,4,2@d1" ("0" for the empty partition).
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Undeformed product O^p (.) O^shape for LG, on the candidate interval.
    Odot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Also print (1 - q psi) applied to the product.
        #[arg(long)]
        reconstruct: bool,
    },
    /// Multiply by a Seidel class given as a word in the generators
    /// sigma, tau, point, row, q (integer exponents, e.g. "sigma^2*q^-1").
    Seidel {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long)]
        word: String,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Pieri-type Gromov-Witten invariant I_d(O_lambda, O^mu, O^p) of LG(n,2n).
    Gw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        p: i64,
    },
    /// Enumerate KOG/KLG/QKLG tableaux on the skew shape nu/lambda.
    Tableaux {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        lambda: String,
    },
    /// Matrix diagram of a Richardson variety in SG(m,2n), from explicit
    /// Schubert symbols or from a curve neighborhood (--lambda/--mu/--d).
    Diagram {
        #[arg(long)]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        p_symbol: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',')]
        q_symbol: Option<Vec<u32>>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Inspect a quantum shape: canonical form, boundary and a strip picture;
    /// with --relative-to, the skew-shape statistics.
    Poset {
        #[command(flatten)]
        fam: FamilyOpts,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        relative_to: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run a verification suite (route-agreement, recursions, pieri-examples,
    /// seidel, gw-diagram, ring-commute, or all).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size budget (strip rank bound for the sweeps).
        #[arg(long, default_value_t = 6)]
        max_size: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    let mut buffer: Vec<u8> = Vec::new();
    let code = match run(&cli, &mut buffer) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &buffer) {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(1);
            }
        }
        None => {
            std::io::stdout().write_all(&buffer).expect("stdout");
        }
    }
    std::process::exit(code);
}

fn run(cli: &Cli, out: &mut Vec<u8>) -> Result<i32, Error> {
    match &cli.command {
        Command::Pieri { fam, p, shape, format } => {
            let family = fam.family()?;
            let lam = QuantumShape::parse(family, shape)?;
            let class = pieri(*p, &lam)?;
            write_class(out, &class, *format);
            Ok(0)
        }
        Command::Odot { n, p, shape, format, reconstruct } => {
            let family = Family::lg(*n)?;
            let mu = QuantumShape::parse(family, shape)?;
            let class = undeformed_pieri_lg(*p, &mu)?;
            write_class(out, &class, *format);
            if *reconstruct {
                let rec = class.sub(&psi(&class)?.mul_q(1)?)?;
                match format {
                    OutputFormat::Text => {
                        let _ = writeln!(out, "(1 - q psi): {rec}");
                    }
                    OutputFormat::Json => write_class(out, &rec, *format),
                }
            }
            Ok(0)
        }
        Command::Seidel { fam, word, shape, format } => {
            let family = fam.family()?;
            let elem = parse_word(family, word)?;
            let lam = QuantumShape::parse(family, shape)?;
            let class = elem.multiply(&QKClass::basis(lam.clone()))?;
            match format {
                OutputFormat::Text => {
                    let _ = writeln!(out, "{class}");
                    if let Ok(d) = elem.degree_on(&lam) {
                        let _ = writeln!(out, "degree: q^{d}");
                    }
                }
                OutputFormat::Json => write_class(out, &class, *format),
            }
            Ok(0)
        }
        Command::Gw { n, d, lambda, mu, p } => {
            let lam = parse_strict(lambda)?;
            let mu = parse_strict(mu)?;
            let value = gw_pieri(&lam, &mu, *d, *p, *n)?;
            let _ = writeln!(out, "{value}");
            Ok(0)
        }
        Command::Tableaux { fam, kind, p, nu, lambda } => {
            let family = fam.family()?;
            let kind_ok = match kind {
                KindArg::Kog => matches!(family, Family::OG { .. }),
                KindArg::Klg | KindArg::Qklg => matches!(family, Family::LG { .. }),
            };
            if !kind_ok {
                return Err(Error::Domain("KOG tableaux live on OG shapes; KLG/QKLG on LG shapes".into()));
            }
            let nu = QuantumShape::parse(family, nu)?;
            let lam = QuantumShape::parse(family, lambda)?;
            let theta = nu.skew(&lam)?;
            let kind = match kind {
                KindArg::Kog => TableauKind::Kog,
                KindArg::Klg => TableauKind::Klg,
                KindArg::Qklg => TableauKind::Qklg,
            };
            let tabs = enumerate(kind, &theta, *p);
            let _ = writeln!(out, "{} tableaux", tabs.len());
            for t in &tabs {
                let _ = writeln!(out, "{t}");
                let _ = writeln!(out);
            }
            Ok(0)
        }
        Command::Diagram { n, p_symbol, q_symbol, lambda, mu, d, format } => {
            let (p, q) = match (p_symbol, q_symbol, lambda, mu, d) {
                (Some(ps), Some(qs), None, None, None) => {
                    (SchubertSymbol::new(*n, ps.clone())?, SchubertSymbol::new(*n, qs.clone())?)
                }
                (None, None, Some(lam), Some(mu), Some(d)) => {
                    let lam = parse_strict(lam)?;
                    let mu = parse_strict(mu)?;
                    curve_nbhd_symbols(&lam, &mu, *d, *n)?
                }
                _ => {
                    return Err(Error::Parse(
                        "diagram needs either --p-symbol and --q-symbol, or --lambda, --mu and --d".into(),
                    ))
                }
            };
            let dia = diagram(&p, &q)?;
            match format {
                OutputFormat::Text => {
                    let _ = write!(out, "{}", render_diagram(&dia));
                    let stats = diagram_json(&dia);
                    let _ = writeln!(out, "{}", serde_json::to_string(&stats).expect("json"));
                }
                OutputFormat::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&diagram_json(&dia)).expect("json"));
                }
            }
            Ok(0)
        }
        Command::Poset { fam, shape, relative_to, format } => {
            let family = fam.family()?;
            let s = QuantumShape::parse(family, shape)?;
            match relative_to {
                None => {
                    match format {
                        OutputFormat::Text => {
                            let _ = writeln!(out, "canonical: {s}  (q-shift {}, partition {:?})", s.shift(), s.mu());
                            let _ = write!(out, "{}", render_shape(&s));
                        }
                        OutputFormat::Json => {
                            let v = serde_json::json!({
                                "literal": s.to_string(),
                                "q": s.shift(),
                                "partition": s.mu(),
                            });
                            let _ = writeln!(out, "{}", serde_json::to_string(&v).expect("json"));
                        }
                    }
                }
                Some(lit) => {
                    let lam = QuantumShape::parse(family, lit)?;
                    let theta = s.skew(&lam)?;
                    let st = theta.stats();
                    let v = serde_json::json!({
                        "boxes": theta.boxes().iter().collect::<Vec<_>>(),
                        "size": st.size,
                        "is_rim": st.is_rim,
                        "components": st.components,
                        "r_rows": st.r_rows,
                        "is_horizontal_strip": st.is_horizontal_strip,
                        "max_rim": st.max_rim,
                        "n_both_diagonals": st.n_both,
                        "n_prime": st.n_prime,
                        "n_prime_q": st.n_prime_q,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string(&v).expect("json"));
                }
            }
            Ok(0)
        }
        Command::Verify { suite, max_size } => {
            let names: Vec<&str> = if suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let reports = run_suites(&names, *max_size)?;
            let mut all_passed = true;
            for r in &reports {
                for c in &r.checks {
                    let status = if c.passed() { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "[{status}] {}: {} ({} cases)", r.suite, c.name, c.cases);
                    for f in &c.failures {
                        let _ = writeln!(out, "        {f}");
                    }
                }
                all_passed &= r.passed();
            }
            let total: u64 = reports.iter().map(|r| r.total_cases()).sum();
            let _ = writeln!(out, "{}: {} checks, {} cases", if all_passed { "PASS" } else { "FAIL" }, reports.iter().map(|r| r.checks.len()).sum::<usize>(), total);
            Ok(if all_passed { 0 } else { 2 })
        }
    }
}

/// Run suites, optionally in parallel when QK_THREADS > 1; output order is
/// fixed regardless of scheduling.
fn run_suites(names: &[&str], max_size: u32) -> Result<Vec<SuiteReport>, Error> {
    let threads: usize = std::env::var("QK_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1);
    if threads <= 1 || names.len() <= 1 {
        return names.iter().map(|n| verify::run_suite(n, max_size)).collect();
    }
    let mut results: Vec<Option<Result<SuiteReport, Error>>> = names.iter().map(|_| None).collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(names.len()) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if k >= names.len() {
                    return;
                }
                let r = verify::run_suite(names[k], max_size);
                slots.lock().expect("slots")[k] = Some(r);
            });
        }
    });
    results.into_iter().map(|r| r.expect("suite ran")).collect()
}

fn parse_strict(text: &str) -> Result<Vec<u32>, Error> {
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition entry {t:?}"))))
        .collect()
}

fn write_class(out: &mut Vec<u8>, class: &QKClass, format: OutputFormat) {
    match format {
        OutputFormat::Text => {
            let _ = writeln!(out, "{class}");
        }
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(&class.to_json()).expect("json"));
        }
    }
}

fn diagram_json(d: &MatrixDiagram) -> serde_json::Value {
    serde_json::json!({
        "n": d.p.n(),
        "m": d.p.m(),
        "p": d.p.elems(),
        "q": d.q.elems(),
        "dimension": d.dimension,
        "correlated_pairs": d.correlated_pairs,
        "cuts": d.cuts,
        "double_cuts": d.double_cuts,
        "lone_stars": d.lone_stars,
        "components": d.components,
        "quadratic_components": d.quadratic_components,
        "movable_rows": d.movable.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k + 1).collect::<Vec<_>>(),
        "solvable_rows": d.solvable.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k + 1).collect::<Vec<_>>(),
        "linear_equations": ppq_descriptor(&d.p, &d.q).map(|desc| desc.linear).unwrap_or_default(),
    })
}

/// Star/dot grid with double-cut bars, one row per diagram row.
fn render_diagram(d: &MatrixDiagram) -> String {
    let two_n = 2 * d.p.n();
    let bars: Vec<u32> = d.double_cuts.iter().cloned().filter(|&c| c > 0 && c < two_n).collect();
    let mut s = String::new();
    for i in 0..d.p.m() {
        let (qi, pi) = (d.q.elems()[i], d.p.elems()[i]);
        for c in 1..=two_n {
            s.push(if c >= qi && c <= pi { '*' } else { '.' });
            if bars.contains(&c) {
                s.push('|');
            }
        }
        s.push('\n');
    }
    s
}

/// ASCII picture of an ideal over a window of strip rows.
fn render_shape(s: &QuantumShape) -> String {
    let mut text = String::new();
    match s.family() {
        Family::GrA { m, .. } => {
            let seq = s.gra_seq();
            let lo = seq.iter().min().copied().unwrap_or(0) - 2;
            let hi = seq.iter().max().copied().unwrap_or(0) + 1;
            for i in 1..=m as i64 {
                text.push_str(&format!("{i:>3} "));
                for j in lo..=hi {
                    text.push(if j <= seq[(i - 1) as usize] { '#' } else { '.' });
                }
                text.push('\n');
            }
            text.push_str(&format!("    boundary: {seq:?}\n"));
        }
        fam => {
            let lo_row = s.shift().min(0) * 2 - 1;
            let hi_row = (s.shift().max(0) * 2 + s.mu().len() as i64 + 1).max(2);
            let lo_col = fam.row_start(lo_row);
            let hi_col = fam.row_full_end(hi_row);
            for i in lo_row..=hi_row {
                text.push_str(&format!("{i:>3} "));
                for j in lo_col..=hi_col {
                    if !fam.in_strip(i, j) {
                        text.push(' ');
                    } else if s.contains_box(i, j).unwrap_or(false) {
                        text.push('#');
                    } else {
                        text.push('.');
                    }
                }
                text.push('\n');
            }
        }
    }
    text
}
