use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qosp::adjoint::{ad_orbit_span, adjoint_act, super_adjoint_act};
use qosp::algebra::{Algebra, Element};
use qosp::hc_center::{evaluate, scasimir_height, solve_anticentral, solve_central, upsilon, Character};
use qosp::hopf::{antipode, coproduct, super_antipode, super_coproduct};
use qosp::parse::{parse_element, parse_scalar};
use qosp::suite::{run_suite, SuiteName};
use qosp::verma::{annihilation_criterion, degenerate_annihilation_check, scasimir_spectrum, VermaModule};
use qosp::weights::{GammaElement, RhoConvention, Weight};
use qosp::zhang::psi;
use qosp::Error;

const BUDGET_VAR: &str = "QOSP_MEMO_BUDGET";

#[derive(Parser)]
#[command(name = "qosp", version, about = "Exact computations in U_q(o(2l+1)) extended by sign twists and its osp(1,2l) image")]
struct Cli {
    /// Rank l of the root system B_l.
    #[arg(long, global = true, default_value_t = 1)]
    rank: usize,
    /// Truncation height for windows, orbits and modules.
    #[arg(long, global = true, default_value_t = 4)]
    height: usize,
    /// Convention for ρ.
    #[arg(long, global = true, value_enum, default_value_t = Rho::Half)]
    rho: Rho,
    /// Output format for verification reports.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Tsv)]
    report: ReportFormat,
    /// Include per-check wall time in reports.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rho {
    Half,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Tsv,
    Nested,
}

#[derive(Args)]
struct CharacterArgs {
    /// Comma-separated values Λ(K_{β_i}), e.g. "v^3, I*v^-1".
    #[arg(long, conflicts_with = "lambda", allow_hyphen_values = true)]
    character: Option<String>,
    /// Linear character q^λ given by twice-coordinates of λ.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Γ-character θ as bits.
    #[arg(long)]
    theta: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Parse { expr: String },
    /// Apply the Zhang transformation Ψ.
    Psi { expr: String },
    /// Harish-Chandra projection onto the torus part.
    Hc { expr: String },
    /// Evaluate the torus part of an expression at a character.
    Eval {
        expr: String,
        #[command(flatten)]
        chi: CharacterArgs,
    },
    /// Twisted adjoint action ad_λ a (x).
    Ad {
        a: String,
        x: String,
        /// Twist λ ∈ Γ as bits.
        #[arg(long)]
        twist: Option<String>,
    },
    /// Twisted super adjoint action sad_λ a (x).
    Sad {
        a: String,
        x: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// Truncated ad-orbit of K_{-2λ}.
    Orbit {
        /// Twice-coordinates of 2λ.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
    },
    /// Central element z_{2λ}.
    Casimir {
        /// Twice-coordinates of 2λ; defaults to w_l.
        #[arg(long, allow_hyphen_values = true)]
        two_lambda: Option<String>,
    },
    /// The sCasimir ξ_{w_l} z_{w_l}.
    Scasimir,
    /// Coproduct Δ (or the super coproduct with --super).
    Coproduct {
        expr: String,
        #[arg(long = "super")]
        sup: bool,
    },
    /// Antipode S (or the super antipode with --super).
    Antipode {
        expr: String,
        #[arg(long = "super")]
        sup: bool,
    },
    /// Truncated Verma modules.
    Verma {
        #[command(subcommand)]
        op: VermaOp,
    },
    /// Run a verification suite.
    Verify {
        /// all, gradations, hopf, zhang, adjoint, center, verma or bar-relations.
        suite: String,
    },
}

#[derive(Subcommand)]
enum VermaOp {
    /// Act on a basis vector of M(Λ, θ).
    Act {
        expr: String,
        #[command(flatten)]
        chi: CharacterArgs,
        /// Index of the basis vector.
        #[arg(long, default_value_t = 0)]
        basis: usize,
        #[arg(long)]
        grade_offset: bool,
    },
    /// Singular vectors at a weight offset (β-coordinates).
    Singular {
        #[command(flatten)]
        chi: CharacterArgs,
        #[arg(long, allow_hyphen_values = true)]
        offset: String,
    },
    /// Eigenvalues of the sCasimir on the graded components.
    ScasimirSpectrum {
        #[command(flatten)]
        chi: CharacterArgs,
        #[arg(long)]
        grade_offset: bool,
    },
    /// Whether the sCasimir acts injectively (no degenerate coordinate).
    Criterion {
        #[command(flatten)]
        chi: CharacterArgs,
    },
    /// Whether the sCasimir kills the window at a degenerate character.
    AnnihilationCheck {
        #[command(flatten)]
        chi: CharacterArgs,
    },
}

enum Failure {
    Usage(String),
    Math(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Range(_)
            | Error::RankZero
            | Error::RankMismatch { .. }
            | Error::InvalidIndex(_)
            | Error::NotInLattice(..) => Failure::Usage(e.to_string()),
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Run = Result<ExitCode, Failure>;

fn memo_budget() -> Result<Option<usize>, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR} must be a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}

fn weight(s: &str, rank: usize) -> Result<Weight, Failure> {
    let w: Weight = s.parse()?;
    if w.rank() != rank {
        return Err(Error::RankMismatch { expected: rank, got: w.rank() }.into());
    }
    Ok(w)
}

fn gamma(s: Option<&str>, rank: usize) -> Result<GammaElement, Failure> {
    match s {
        None => Ok(GammaElement::zero(rank)),
        Some(s) => {
            let g: GammaElement = s.parse()?;
            if g.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, got: g.rank() }.into());
            }
            Ok(g)
        }
    }
}

fn character(alg: &Algebra, args: &CharacterArgs) -> Result<Character, Failure> {
    let l = alg.rank();
    let theta = gamma(args.theta.as_deref(), l)?;
    match (&args.character, &args.lambda) {
        (Some(c), _) => {
            let values = c.split(',').map(|s| parse_scalar(alg, s)).collect::<Result<Vec<_>, _>>()?;
            Ok(Character::new(values, theta)?)
        }
        (None, Some(w)) => Ok(Character::linear(&weight(w, l)?, theta)?),
        (None, None) => Err(Failure::Usage("give --character or --lambda".into())),
    }
}

fn print_verma_vector(m: &VermaModule, v: &qosp::verma::VermaVector) {
    if v.is_empty() {
        println!("0");
        return;
    }
    let terms: Vec<String> = v
        .iter()
        .map(|(&k, c)| {
            let w: Vec<String> = m.basis_word(k).iter().map(|i| format!("F{i}")).collect();
            format!("({c})|{}>", w.join("*"))
        })
        .collect();
    println!("{}", terms.join(" + "));
}

fn run(cli: Cli) -> Run {
    let convention = match cli.rho {
        Rho::Half => RhoConvention::HalfSum,
        Rho::Literal => RhoConvention::LiteralSum,
    };
    let alg = Algebra::new(cli.rank, convention)?.with_memo_budget(memo_budget()?);
    let l = alg.rank();
    let h = cli.height;
    let el = |s: &str| -> Result<Element, Failure> { Ok(parse_element(&alg, s)?) };
    match &cli.command {
        Command::Parse { expr } => println!("{}", el(expr)?),
        Command::Psi { expr } => println!("{}", psi(&alg, &el(expr)?)),
        Command::Hc { expr } => println!("{}", upsilon(&el(expr)?)),
        Command::Eval { expr, chi } => {
            let chi = character(&alg, chi)?;
            println!("{}", evaluate(&upsilon(&el(expr)?), &chi));
        }
        Command::Ad { a, x, twist } => {
            println!("{}", adjoint_act(&alg, &el(a)?, &el(x)?, gamma(twist.as_deref(), l)?));
        }
        Command::Sad { a, x, twist } => {
            println!("{}", super_adjoint_act(&alg, &el(a)?, &el(x)?, gamma(twist.as_deref(), l)?));
        }
        Command::Orbit { seed } => {
            let o = ad_orbit_span(&alg, &weight(seed, l)?, h)?;
            println!("dimension {}{}", o.dim(), if o.stabilized { "" } else { " (not stabilized)" });
            for b in &o.basis {
                println!("{b}");
            }
        }
        Command::Casimir { two_lambda } => {
            let tl = match two_lambda {
                Some(s) => weight(s, l)?,
                None => alg.roots().fundamental(l),
            };
            let sol = solve_central(&alg, &tl, h)?;
            if !sol.certified {
                return Err(Failure::Math("solution does not commute with all generators".into()));
            }
            println!("{}", sol.element);
        }
        Command::Scasimir => {
            let need = scasimir_height(l);
            let sol = solve_anticentral(&alg, h.max(need))?;
            if !sol.certified {
                return Err(Failure::Math("anticommutation certificate failed".into()));
            }
            println!("{}", sol.element);
        }
        Command::Coproduct { expr, sup } => {
            let x = el(expr)?;
            println!("{}", if *sup { super_coproduct(&alg, &x) } else { coproduct(&alg, &x) });
        }
        Command::Antipode { expr, sup } => {
            let x = el(expr)?;
            println!("{}", if *sup { super_antipode(&alg, &x) } else { antipode(&alg, &x) });
        }
        Command::Verma { op } => verma(&alg, h, op)?,
        Command::Verify { suite } => {
            let name: SuiteName = suite.parse()?;
            let report = run_suite(&alg, name, h)?;
            match cli.report {
                ReportFormat::Tsv => print!("{}", report.to_tsv(cli.timings)),
                ReportFormat::Nested => println!("{}", report.to_json(cli.timings)),
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
    }
    if alg.budget_exhausted() {
        return Err(Failure::Resource(format!("memoization budget from {BUDGET_VAR} exhausted")));
    }
    Ok(ExitCode::SUCCESS)
}

fn verma(alg: &Algebra, h: usize, op: &VermaOp) -> Result<(), Failure> {
    let l = alg.rank();
    match op {
        VermaOp::Act { expr, chi, basis, grade_offset } => {
            let m = VermaModule::build(alg, character(alg, chi)?, h, *grade_offset)?;
            if *basis >= m.dim() {
                return Err(Failure::Usage(format!("basis index {basis} outside 0..{}", m.dim())));
            }
            let r = m.act(alg, &parse_element(alg, expr)?, &m.basis_vector(*basis));
            print_verma_vector(&m, &r.vector);
            if r.overflow {
                println!("(terms above height {h} dropped)");
            }
        }
        VermaOp::Singular { chi, offset } => {
            let nu = Weight::from_beta(&offset.parse::<Weight>()?.twice().to_vec());
            if nu.rank() != l {
                return Err(Error::RankMismatch { expected: l, got: nu.rank() }.into());
            }
            let m = VermaModule::build(alg, character(alg, chi)?, h, false)?;
            let found = m.singular_vectors(alg, &nu)?;
            println!("{} singular line(s)", found.len());
            for s in &found {
                print!("character {}: ", s.character);
                print_verma_vector(&m, &s.vector);
            }
        }
        VermaOp::ScasimirSpectrum { chi, grade_offset } => {
            let sc = solve_anticentral(alg, scasimir_height(l))?;
            let m = VermaModule::build(alg, character(alg, chi)?, h, *grade_offset)?;
            let (e, o) = scasimir_spectrum(alg, &m, &sc.element)?;
            println!("even {e}\nodd {o}");
        }
        VermaOp::Criterion { chi } => println!("{}", annihilation_criterion(alg, &character(alg, chi)?)),
        VermaOp::AnnihilationCheck { chi } => {
            println!("{}", degenerate_annihilation_check(alg, &character(alg, chi)?, h)?)
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
