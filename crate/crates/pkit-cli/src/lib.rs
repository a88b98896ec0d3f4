//! The `pkit` command line.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pkit::arrows::{build_arrows, down_set, up_set};
use pkit::blocks::block_of;
use pkit::grothendieck::{
    delta_to_simple, hom_dim, nabla_to_simple, proj_to_delta, proj_to_nabla, Family, GrothendieckVector, Parity,
};
use pkit::structure::{cosocle_nabla, duality_summary, socle_delta};
use pkit::translation::{theta, theta_prime, theta_proj_tracked, theta_simple};
use pkit::verify::{run_suite, Report, Suite};
use pkit::weights::{weight_to_diagram, Weight, Window};
use pkit::Error;
use serde_json::{json, Value};

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "pkit", version, about = "Weight and arrow diagram calculus for p(n)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Rank n.
    #[arg(long)]
    n: usize,
    /// Closed window lo..hi [default: -4n..4n].
    #[arg(long, env = "PKIT_WINDOW", allow_hyphen_values = true)]
    window: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct WeightArg {
    /// Comma-separated coordinates λ₁,…,λₙ.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Read --weight (and --mu) as ball positions instead of coordinates.
    #[arg(long)]
    rho_shifted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Delta,
    Nabla,
    Proj,
    Simple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Arrows,
    Bgg,
    Tl,
    Proj,
    Duality,
    Socle,
    Blocks,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render the weight diagram.
    Diagram {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Render the arrow diagram.
    Arrows {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Move sets and both Kac filtrations of P(λ).
    Proj {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Composition factors of Δ(λ) and ∇(λ).
    Decomp {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// dim Hom(P(λ), P(μ)).
    Hom {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
        /// The second weight μ.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Apply Θ_k to a basis element.
    Translate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Parity of the input (0 or 1).
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: u8,
        /// Apply θ′_k instead of θ_k = Π^k θ′_k.
        #[arg(long)]
        prime: bool,
    },
    /// λ†, λ♯, m and the duals of the Kac modules.
    Dual {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Cosocle of ∇(λ) and socle of Δ(λ).
    Socle {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Block of Π^ε L(λ).
    Block {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: u8,
    },
    /// dim V(λ) and the Kac module dimensions.
    Dims {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        w: WeightArg,
    },
    /// Run verification suites over the window.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Contradiction(_) => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Text rendering, JSON value and exit code of a command.
struct Output {
    text: String,
    value: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, value: Value) -> Self {
        Output { text, value, code: 0 }
    }
}

type Res = std::result::Result<Output, Failure>;

impl Common {
    fn window(&self) -> std::result::Result<Window, Failure> {
        let n = self.n as i64;
        let win = match &self.window {
            Some(s) => s.parse::<Window>()?,
            None => Window::symmetric(4 * n),
        };
        if win.lo >= win.hi {
            return Err(Failure::Usage(format!("window {win} needs lo < hi")));
        }
        Ok(win)
    }
}

impl WeightArg {
    fn parse(&self, common: &Common) -> std::result::Result<Weight, Failure> {
        parse_weight(&self.weight, common.n, self.rho_shifted)
    }
}

fn parse_weight(text: &str, n: usize, rho_shifted: bool) -> std::result::Result<Weight, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let nums = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Failure::Usage(format!("weight entry `{t}`: {e}"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if nums.len() != n {
        return Err(Failure::Usage(format!("weight `{text}` has {} entries, expected {n}", nums.len())));
    }
    Ok(if rho_shifted { Weight::from_balls(nums)? } else { Weight::new(nums)? })
}

fn pi(p: Parity) -> &'static str {
    if p == Parity::Odd {
        "Π"
    } else {
        ""
    }
}

fn list(ws: &[Weight]) -> String {
    ws.iter().map(Weight::to_string).collect::<Vec<_>>().join(" ")
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Arrows => Suite::Arrows,
        SuiteArg::Bgg => Suite::Bgg,
        SuiteArg::Tl => Suite::Tl,
        SuiteArg::Proj => Suite::Proj,
        SuiteArg::Duality => Suite::Duality,
        SuiteArg::Socle => Suite::Socle,
        SuiteArg::Blocks => Suite::Blocks,
        SuiteArg::All => Suite::All,
    }
}

fn big(v: impl ToString) -> Value {
    let s = v.to_string();
    s.parse::<u64>().map(Value::from).unwrap_or(Value::String(s))
}

fn verify(common: &Common, suite: SuiteArg) -> Res {
    if common.n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let win = common.window()?;
    let reports: Vec<Report> = run_suite(suite_of(suite), common.n, &win);
    let mut text = String::new();
    for r in &reports {
        let tag = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(text, "{:<32} {:>9} checked {:>6} failed  {tag}", r.relation, r.checked, r.failures.len());
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        let _ = writeln!(text, "{}", json!({"relation": r.relation, "counterexample": r.failures[0]}));
    }
    let code = if reports.iter().all(Report::passed) { 0 } else { 1 };
    Ok(Output { text, value: json!(reports), code })
}

fn translate(w: &Weight, basis: BasisArg, k: i64, parity: Parity, prime: bool, win: &Window) -> Res {
    let name = if prime { "θ′" } else { "θ" };
    Ok(match basis {
        BasisArg::Delta | BasisArg::Nabla => {
            let family = if basis == BasisArg::Delta { Family::Delta } else { Family::Nabla };
            let input = GrothendieckVector::basis(family, w.clone(), parity);
            let out = if prime { theta_prime(k, &input)? } else { theta(k, &input)? };
            Output::ok(format!("{name}_{k} {input} = {out}\n"), json!({"input": input, "k": k, "output": out}))
        }
        BasisArg::Proj => {
            let name = if prime { "Θ′" } else { "Θ" };
            let head = format!("{name}_{k} {}P{w}", pi(parity));
            match theta_proj_tracked(k, w, parity) {
                Some((mu, p)) => {
                    let p = if prime { p + Parity::from_int(k) } else { p };
                    Output::ok(
                        format!("{head} ≅ {}P{mu}\n", pi(p)),
                        json!({"input": w, "parity": parity, "k": k, "output": mu, "output_parity": p}),
                    )
                }
                None => Output::ok(
                    format!("{head} = 0\n"),
                    json!({"input": w, "parity": parity, "k": k, "output": null}),
                ),
            }
        }
        BasisArg::Simple => {
            let out = theta_simple(k, w, win)?;
            Output::ok(format!("[Θ_{k} L{w}] = {out}\n"), json!({"input": w, "k": k, "output": out}))
        }
    })
}

fn dispatch(cmd: &Cmd) -> Res {
    Ok(match cmd {
        Cmd::Verify { common, suite } => return verify(common, *suite),
        Cmd::Hom { common, w, mu } => {
            let lam = w.parse(common)?;
            let mu = parse_weight(mu, common.n, w.rho_shifted)?;
            let h = hom_dim(&lam, &mu)?;
            Output::ok(
                format!("dim Hom(P{lam}, P{mu}) = {h}\n"),
                json!({"lambda": lam, "mu": mu, "hom_dim": h}),
            )
        }
        Cmd::Translate { common, w, basis, k, parity, prime } => {
            let lam = w.parse(common)?;
            return translate(&lam, *basis, *k, Parity::from_bit(*parity), *prime, &common.window()?);
        }
        Cmd::Block { common, w, parity } => {
            let lam = w.parse(common)?;
            let p = Parity::from_bit(*parity);
            let b = block_of(&lam, p);
            Output::ok(format!("{}L{lam} lies in the block {b}\n", pi(p)), json!(b))
        }
        Cmd::Diagram { common, w } => {
            let lam = w.parse(common)?;
            Output::ok(weight_to_diagram(&lam).render_ascii(&common.window()?), json!({"weight": lam}))
        }
        Cmd::Arrows { common, w } => {
            let lam = w.parse(common)?;
            let a = build_arrows(&lam);
            Output::ok(a.render_ascii(&common.window()?), json!({"weight": lam, "arrows": a}))
        }
        Cmd::Proj { common, w } => {
            let lam = w.parse(common)?;
            let (up, down) = (up_set(&lam), down_set(&lam));
            let (pd, pn) = (proj_to_delta(&lam), proj_to_nabla(&lam));
            let text = format!(
                "▲{lam} = {{{}}}\n▼{lam} = {{{}}}\n[P{lam}] = {pd}\n[P{lam}] = {pn}\n",
                list(&up),
                list(&down)
            );
            Output::ok(text, json!({"weight": lam, "up": up, "down": down, "delta": pd, "nabla": pn}))
        }
        Cmd::Decomp { common, w } => {
            let lam = w.parse(common)?;
            let win = common.window()?;
            let d = delta_to_simple(&lam, &win)?;
            let n = nabla_to_simple(&lam, &win)?;
            Output::ok(
                format!("[Δ{lam}] = {d}\n[∇{lam}] = {n}\n"),
                json!({"weight": lam, "delta": d, "nabla": n}),
            )
        }
        Cmd::Dual { common, w } => {
            let lam = w.parse(common)?;
            let s = duality_summary(&lam)?;
            let text = format!(
                "λ† = {}\nλ♯ = {}\nm = {}\nL{} ≅ {}L{lam}*\nΔ{lam}* = Δ{}\n∇{lam}* = ∇{}\n",
                s.dagger,
                s.sharp,
                s.m.bit(),
                s.sharp,
                pi(s.m),
                s.delta_dual,
                s.nabla_dual
            );
            Output::ok(text, json!(s))
        }
        Cmd::Socle { common, w } => {
            let lam = w.parse(common)?;
            let tau = cosocle_nabla(&lam)?;
            let tau2 = socle_delta(&lam)?;
            Output::ok(
                format!("cosocle ∇{lam} = L{tau}\nsocle Δ{lam} = L{tau2}\n"),
                json!({"weight": lam, "cosocle_nabla": tau, "socle_delta": tau2}),
            )
        }
        Cmd::Dims { common, w } => {
            let lam = w.parse(common)?;
            let v = lam.gl_dim();
            let (thin, thick) = lam.kac_dims();
            Output::ok(
                format!("dim V{lam} = {v}\ndim ∇{lam} = {thin}\ndim Δ{lam} = {thick}\n"),
                json!({"weight": lam, "gl": big(v), "thin": big(thin), "thick": big(thick)}),
            )
        }
    })
}

fn format_of(cmd: &Cmd) -> Format {
    match cmd {
        Cmd::Diagram { common, .. }
        | Cmd::Arrows { common, .. }
        | Cmd::Proj { common, .. }
        | Cmd::Decomp { common, .. }
        | Cmd::Hom { common, .. }
        | Cmd::Translate { common, .. }
        | Cmd::Dual { common, .. }
        | Cmd::Socle { common, .. }
        | Cmd::Block { common, .. }
        | Cmd::Dims { common, .. }
        | Cmd::Verify { common, .. } => common.format,
    }
}

/// Parses `argv` (including the program name) and runs the command.
/// Exit codes: 0 success, 1 verification failure, 2 bad arguments.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.exit_code() == 0 {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.cmd) {
        Ok(out) => {
            let stdout = match format_of(&cli.cmd) {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.value).expect("json") + "\n",
            };
            Outcome { code: out.code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Verification(msg)) => {
            Outcome { code: 1, stdout: json!({"error": msg}).to_string() + "\n", stderr: String::new() }
        }
    }
}
