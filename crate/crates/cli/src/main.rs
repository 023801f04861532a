//! Command-line front end for the `cliffgen` library.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure,
//! 2 on a usage error such as an out-of-range signature.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliffgen::batch::{self, Exec};
use cliffgen::export::{self, Format};
use cliffgen::fixtures;
use cliffgen::group;
use cliffgen::idempotent::involution_count;
use cliffgen::octonion::{self, Octonion};
use cliffgen::representation::{classify, generator_matrices};
use cliffgen::signature::max_n;
use cliffgen::{Error, Signature};

#[derive(Parser)]
#[command(name = "cliffgen", version, about = "Exact spinor representations of real Clifford algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator matrices of Cl_{p,q}.
    Repr {
        p: usize,
        q: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Check relations, dimensions, idempotent, spinor norm and ideal closure.
    Verify {
        p: Option<usize>,
        q: Option<usize>,
        /// Verify every signature with p + q <= --max-n.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[command(flatten)]
        exec: ExecArgs,
    },
    /// Print ring, matrix size and idempotent rank per signature.
    Classify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Compare with the published spinor-space table instead.
        #[arg(long)]
        paper_table: bool,
    },
    /// Octonion and split-octonion tables, matrices and products.
    Octonion {
        #[arg(long)]
        table: bool,
        #[arg(long)]
        matrices: bool,
        /// Evaluate an expression such as "(i*j)*l".
        #[arg(long, value_name = "EXPR")]
        mul: Option<String>,
        #[arg(long)]
        split: bool,
    },
    /// Double-cover, homomorphism and Spin cross-checks on seeded samples.
    SpinCheck {
        p: usize,
        q: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        exec: ExecArgs,
    },
}

#[derive(Args)]
struct ExecArgs {
    /// Run on one thread even when the parallel feature is enabled.
    #[arg(long)]
    sequential: bool,
}

impl ExecArgs {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Latex => Format::Latex,
        }
    }
}

/// A command outcome: text for stdout and the exit code.
struct Outcome {
    out: String,
    code: u8,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome { out, code: 0 }
    }

    fn verdict(out: String, passed: bool) -> Self {
        Outcome { out, code: if passed { 0 } else { 1 } }
    }
}

/// Usage errors map to exit code 2, everything else to 1.
fn failure(e: &Error) -> u8 {
    match e {
        Error::DimensionCap { .. } | Error::IndexOutOfRange { .. } | Error::Parse(_) => 2,
        _ => 1,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Repr { p, q, format } => {
            let sig = Signature::new(p, q)?;
            let rep = generator_matrices(sig)?;
            Ok(Outcome::ok(export::render(&rep, format.into())))
        }
        Command::Verify { p, q, all, max_n, exec } => verify(p, q, all, max_n, exec.exec()),
        Command::Classify { max_n, paper_table } => classify_cmd(max_n, paper_table),
        Command::Octonion { table, matrices, mul, split } => octonion_cmd(table, matrices, mul, split),
        Command::SpinCheck { p, q, samples, seed, exec } => spin_check(Signature::new(p, q)?, samples, seed, exec.exec()),
    }
}

fn check_max_n(max_n_arg: usize) -> Result<(), Error> {
    let cap = max_n();
    if max_n_arg > cap {
        return Err(Error::DimensionCap { n: max_n_arg, cap });
    }
    Ok(())
}

fn verify(p: Option<usize>, q: Option<usize>, all: bool, max_n_arg: usize, exec: Exec) -> Result<Outcome, Error> {
    let sigs = match (all, p, q) {
        (true, None, None) => {
            check_max_n(max_n_arg)?;
            Signature::all_up_to(max_n_arg)?
        }
        (false, Some(p), Some(q)) => vec![Signature::new(p, q)?],
        _ => return Err(usage("give either P Q or --all")),
    };
    let reports = batch::verify_all(&sigs, exec);
    let mut out = String::new();
    if all {
        writeln!(out, "{:<8} {:<4} {:>4} {:>3}  {:<7} status", "sig", "ring", "dim", "k", "checks").unwrap();
        for r in &reports {
            let fixture = match &r.fixture {
                Some(f) if f.all_exact() => " fixture exact".to_string(),
                Some(f) => format!(" fixture {}/{} exact", f.exact_count(), f.diffs.len()),
                None => String::new(),
            };
            let status = match r.first_failure() {
                None => "pass".to_string(),
                Some(e) => format!("FAIL {e}"),
            };
            writeln!(
                out,
                "{:<8} {:<4} {:>4} {:>3}  {:<7} {status}{fixture}",
                r.signature.to_string(),
                r.ring,
                r.dim,
                r.k,
                format!("{}/{}", r.passed_count(), r.checks.len()),
            )
            .unwrap();
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        writeln!(out, "{passed}/{} signatures passed", reports.len()).unwrap();
    } else {
        for r in &reports {
            out.push_str(&r.to_string());
        }
    }
    let ok = reports.iter().all(|r| r.passed());
    Ok(Outcome::verdict(out, ok))
}

fn classify_cmd(max_n_arg: usize, paper_table: bool) -> Result<Outcome, Error> {
    let mut out = String::new();
    if paper_table {
        let mut agree = 0;
        let rows = fixtures::spinor_space_table();
        for (sig, label) in &rows {
            let ours = classify(*sig).spinor_space();
            let mark = if ours == *label {
                agree += 1;
                "match".to_string()
            } else {
                format!("differs (computed {ours})")
            };
            writeln!(out, "{:<8} {:<10} {mark}", sig.to_string(), label).unwrap();
        }
        writeln!(out, "{agree}/{} rows match", rows.len()).unwrap();
        return Ok(Outcome::ok(out));
    }
    check_max_n(max_n_arg)?;
    writeln!(out, "{:<8} {:<4} {:>4} {:>3}  spinor space", "sig", "ring", "dim", "k").unwrap();
    for sig in Signature::all_up_to(max_n_arg)? {
        let c = classify(sig);
        let k = involution_count(sig)?;
        writeln!(out, "{:<8} {:<4} {:>4} {:>3}  {}", sig.to_string(), c.ring_tag, c.dim, k, c.spinor_space()).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn octonion_cmd(table: bool, matrices: bool, mul: Option<String>, split: bool) -> Result<Outcome, Error> {
    let names = octonion::basis_names(split);
    let mut out = String::new();
    if table {
        let t = octonion::cayley_table(split);
        let width = 4;
        write!(out, "{:>width$}", "").unwrap();
        for n in &names[1..] {
            write!(out, " {n:>width$}").unwrap();
        }
        out.push('\n');
        for (r, row) in t.iter().enumerate() {
            write!(out, "{:>width$}", names[r + 1]).unwrap();
            for cell in row {
                write!(out, " {:>width$}", cell.to_text()).unwrap();
            }
            out.push('\n');
        }
    }
    if matrices {
        for (m, name) in names.iter().enumerate().skip(1) {
            writeln!(out, "{name}:").unwrap();
            let mat = octonion::left_mult_matrix(&Octonion::unit(m, split));
            for r in 0..8 {
                let row: Vec<String> = mat.row(r).iter().map(|x| format!("{x:>2}")).collect();
                writeln!(out, "  {}", row.join(" ")).unwrap();
            }
        }
    }
    if let Some(expr) = mul {
        writeln!(out, "{}", octonion::eval_expression(&expr, split)?).unwrap();
    }
    if !table && !matrices && out.is_empty() {
        return Err(usage("choose --table, --matrices or --mul"));
    }
    Ok(Outcome::ok(out))
}

fn spin_check(sig: Signature, samples: usize, seed: u64, exec: Exec) -> Result<Outcome, Error> {
    let mut out = String::new();
    let cover = batch::double_cover(sig, samples, seed, exec);
    writeln!(out, "signature {sig}, {samples} samples, seed {seed}").unwrap();
    writeln!(out, "even: {}/{} double-cover pairs equal", cover.even_equal, samples).unwrap();
    writeln!(out, "even: {}/{} det=+1", cover.even_det_plus, samples).unwrap();
    match cover.odd_equal {
        Some(c) => writeln!(out, "odd: {c}/{samples} double-cover pairs equal").unwrap(),
        None => writeln!(out, "odd: no 1-vectors, skipped").unwrap(),
    }
    match cover.odd_det_minus {
        Some(c) => writeln!(out, "odd: {c}/{samples} det(-1)").unwrap(),
        None if sig.n() > 0 => writeln!(out, "odd: form is indefinite, determinant not checked").unwrap(),
        None => {}
    }
    let hom = batch::homomorphism(sig, samples, seed, exec);
    writeln!(out, "homomorphism: {}/{} pairs agree", hom.agreed, hom.pairs).unwrap();
    let mut ok = cover.passed() && hom.passed();
    if sig.n() <= group::SPIN_THEOREM_MAX_N {
        let x = group::theorem_crosscheck(sig, samples, seed)?;
        writeln!(out, "spin cross-check: {}/{} agree ({} in Spin)", x.agreed, x.samples, x.spin_count).unwrap();
        ok &= x.passed();
        if let Some(d) = &x.first_disagreement {
            writeln!(out, "first disagreement: {d}").unwrap();
        }
    }
    for f in [&cover.first_failure, &hom.first_failure].into_iter().flatten() {
        writeln!(out, "first failure: {f}").unwrap();
    }
    writeln!(out, "{}", if ok { "pass" } else { "FAIL" }).unwrap();
    Ok(Outcome::verdict(out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(failure(&e))
        }
    }
}
