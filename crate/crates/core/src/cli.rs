//! Command-line driver: one subcommand per family of checks.
//!
//! Exit codes: 0 when every requested check passes, 1 when any fails, 2 on
//! a usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::casebook;
use crate::error::{Error, Result};
use crate::polyring::MultiDegree;
use crate::report::{self, timed, VerificationReport};
use crate::roberts::{self, roberts};
use crate::separating;
use crate::sl2::{self, RepSum};

#[derive(Debug, Parser)]
#[command(name = "gainv", version, about = "Exact checks for additive group actions and their invariants")]
pub struct Cli {
    /// Also write every report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Print report details under each line.
    #[arg(long, short, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariance of u_ij and beta_{i,1}, the Y0 relation and the low graded kernels.
    RobertsInvariants,
    /// Build beta_{i,n} for n up to N and check its prescribed coefficients.
    RobertsBeta {
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// The five generators of I(Y1) vanish on the invariants.
    RobertsY1,
    /// Verify that S_N is a SAGBI basis up to a degree bound.
    RobertsSagbi {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        degree_bound: u64,
    },
    /// The A_N lemma: degree bounds, identities and the x-ideal sweep.
    RobertsAn {
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Squares of beta_{i,n} in the x-ideal and the u-degree structure.
    RobertsRadical,
    /// The fixed-point locus maps to one point.
    RobertsFixed,
    /// Binary forms: quadratic invariants, plinth locus and plinth-pair components.
    Sl2 {
        #[arg(long, default_value = "V[4]+V[2]")]
        rep: String,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = sl2::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = sl2::DEFAULT_SEED)]
        seed: u64,
    },
    /// Seeded sampling of separation against the orbit graph.
    Separating {
        #[arg(long, default_value_t = separating::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = separating::DEFAULT_SEED)]
        seed: u64,
    },
    /// The Danielewski surface and its quotient by the Weyl involution.
    Danielewski,
    /// The monomial subring k[x, xy, xy^2, ...].
    Example1,
    /// A graded piece of the kernel of a derivation.
    Kernel {
        /// `roberts` or `sl2:SPEC`, e.g. `sl2:V[4]+V[2]`.
        #[arg(long)]
        ring: String,
        /// Comma-separated multidegree.
        #[arg(long)]
        degree: String,
        /// Comma-separated variables to restrict to.
        #[arg(long)]
        restrict: Option<String>,
    },
    /// Every check above with default parameters.
    All,
}

/// Reports plus any computed objects worth printing.
#[derive(Default)]
pub struct Outcome {
    pub reports: Vec<VerificationReport>,
    pub artifacts: Vec<String>,
}

impl Outcome {
    fn push(&mut self, r: VerificationReport) {
        self.reports.push(r);
    }

    fn extend(&mut self, other: Outcome) {
        self.reports.extend(other.reports);
        self.artifacts.extend(other.artifacts);
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

fn roberts_invariants() -> Outcome {
    let mut o = Outcome::default();
    o.push(timed(roberts::invariance_check));
    o.push(timed(roberts::graded_kernel_check));
    o
}

fn roberts_beta(n: u32) -> Outcome {
    let mut o = Outcome::default();
    o.push(timed(|| roberts::beta_checks(n)));
    for i in 1..=3 {
        match roberts().beta(i, n) {
            Ok(b) => o.artifacts.push(format!("{} = {b}", roberts::beta_name(i, n))),
            Err(e) => o.artifacts.push(format!("{}: {e}", roberts::beta_name(i, n))),
        }
    }
    o
}

fn single(r: impl FnOnce() -> VerificationReport) -> Outcome {
    Outcome {
        reports: vec![timed(r)],
        artifacts: Vec::new(),
    }
}

fn sl2_suite(rep: &RepSum, degree: u32, samples: usize, seed: u64, quadratic_max: u32) -> Outcome {
    let mut o = Outcome::default();
    o.push(timed(|| sl2::quadratic_invariants_check(quadratic_max)));
    o.push(timed(|| sl2::positive_weight_vanishing_check(rep, degree, samples, seed)));
    o.push(timed(|| sl2::component_containment_check(rep, degree, samples, seed)));
    o
}

fn separating_suite(trials: usize, seed: u64) -> Outcome {
    let start = std::time::Instant::now();
    let mut reports = separating::roberts_separation_checks(trials, seed);
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut reports {
        r.ms = ms;
    }
    Outcome {
        reports,
        artifacts: Vec::new(),
    }
}

fn danielewski() -> Outcome {
    let mut o = Outcome::default();
    o.push(timed(|| casebook::danielewski_checks(200, casebook::DEFAULT_SEED)));
    o.push(timed(|| casebook::sl2_mod_n_checks(casebook::DEFAULT_DEGREE_BOUND)));
    o
}

fn example1() -> Outcome {
    let b = casebook::DEFAULT_DEGREE_BOUND;
    let mut o = Outcome::default();
    o.push(timed(casebook::example1_membership_report));
    o.push(timed(|| casebook::example1_conductor_report(b)));
    o.push(timed(|| casebook::example1_phi_separation(casebook::DEFAULT_TRIALS, b, casebook::DEFAULT_SEED)));
    o
}

fn parse_degree(text: &str) -> Result<MultiDegree> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("`{t}` is not an integer degree")))
        })
        .collect::<Result<Vec<_>>>()
        .map(MultiDegree)
}

fn kernel(ring: &str, degree: &str, restrict: Option<&str>) -> Result<Outcome> {
    let md = parse_degree(degree)?;
    let names: Option<Vec<&str>> = restrict.map(|r| r.split(',').map(str::trim).collect());
    let (label, basis) = if ring == "roberts" {
        let r = roberts();
        ("roberts".to_string(), r.derivation().graded_kernel(r.weights(), &md, names.as_deref())?)
    } else if let Some(spec) = ring.strip_prefix("sl2:") {
        let rep = RepSum::parse(spec)?;
        let d = rep.raising_derivation();
        (format!("sl2:{}", rep.spec()), d.graded_kernel(rep.weights(), &md, names.as_deref())?)
    } else {
        return Err(Error::InvalidArgument(format!("unknown ring `{ring}`; use roberts or sl2:SPEC")));
    };
    let mut r = VerificationReport::new(format!("kernel-{label}-{md}"), "graded piece of the kernel of the derivation")
        .param("ring", &label)
        .param("degree", &md);
    if let Some(n) = restrict {
        r = r.param("restrict", n);
    }
    r.note(format!("dimension {} over {} monomials", basis.dim(), basis.monomials.len()));
    let mut o = Outcome::default();
    o.artifacts.push(format!("dim = {}", basis.dim()));
    for b in &basis.basis {
        r.note(b.to_string());
        o.artifacts.push(b.to_string());
    }
    o.push(r);
    Ok(o)
}

fn all() -> Outcome {
    let mut o = Outcome::default();
    o.extend(roberts_invariants());
    o.extend(single(roberts::y1_ideal_check));
    o.extend(roberts_beta(5));
    for n in 0..=3 {
        o.extend(single(|| roberts::sagbi_check(n, 10)));
    }
    for n in 0..=3 {
        o.extend(single(|| roberts::an_lemma_checks(n, 6, 8)));
    }
    o.extend(single(|| roberts::radical_structure_check(3, 6)));
    o.extend(single(|| roberts::fixed_point_check(4)));
    let mut first = true;
    for spec in ["V[2]", "V[3]", "V[4]", "V[4]+V[2]"] {
        let rep = RepSum::parse(spec).expect("fixed spec");
        let mut s = sl2_suite(&rep, 3, sl2::DEFAULT_SAMPLES, sl2::DEFAULT_SEED, 8);
        if !first {
            s.reports.remove(0);
        }
        first = false;
        o.extend(s);
    }
    o.extend(separating_suite(separating::DEFAULT_TRIALS, separating::DEFAULT_SEED));
    o.extend(danielewski());
    o.extend(example1());
    o.artifacts.clear();
    o
}

/// Runs a parsed command.
pub fn execute(command: &Command) -> Result<Outcome> {
    Ok(match command {
        Command::RobertsInvariants => roberts_invariants(),
        Command::RobertsBeta { n } => roberts_beta(*n),
        Command::RobertsY1 => single(roberts::y1_ideal_check),
        Command::RobertsSagbi { n, degree_bound } => single(|| roberts::sagbi_check(*n, *degree_bound)),
        Command::RobertsAn { n } => single(|| roberts::an_lemma_checks(*n, 6, 8)),
        Command::RobertsRadical => single(|| roberts::radical_structure_check(3, 6)),
        Command::RobertsFixed => single(|| roberts::fixed_point_check(4)),
        Command::Sl2 {
            rep,
            degree,
            samples,
            seed,
        } => {
            let r = RepSum::parse(rep)?;
            let top = r.summands().iter().copied().max().unwrap_or(0).max(8);
            sl2_suite(&r, *degree, *samples, *seed, top)
        }
        Command::Separating { trials, seed } => {
            if *trials == 0 {
                return Err(Error::InvalidArgument("--trials must be at least 1".into()));
            }
            separating_suite(*trials, *seed)
        }
        Command::Danielewski => danielewski(),
        Command::Example1 => example1(),
        Command::Kernel { ring, degree, restrict } => kernel(ring, degree, restrict.as_deref())?,
        Command::All => all(),
    })
}

/// Parses arguments, runs, prints and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    for a in &outcome.artifacts {
        println!("{a}");
    }
    for r in &outcome.reports {
        println!("{}", r.text_line());
        if cli.verbose || !r.passed() {
            for d in &r.details {
                println!("    {d}");
            }
        }
    }
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report::to_json(&outcome.reports)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if outcome.passed() {
        0
    } else {
        1
    }
}
