use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use e6spin::d5modules::{realize, Family};
use e6spin::e6rep::{
    check_dimension_identity, find_singular_vectors, singular_span_check, verify_zeta_identity, verify_theta_homomorphism,
    verify_zeta_module, RealizationTable, SINGULAR_DEGREE_BOUND,
};
use e6spin::flows::{generator_check, FlowTable};
use e6spin::functor::{thresholds, verify_functor, Iota};
use e6spin::report::{Check, Report};
use e6spin::{chevalley, lattice, Error, Q};

/// Exact verification reports for E6 in 16 variables and the induced modules.
#[derive(Parser)]
#[command(name = "e6verify", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Also write the report as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads for the sweeps; 1 runs single-threaded.
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Lattice, bracket and realization checks.
    VerifyAlgebra {
        #[arg(long, default_value_t = 3)]
        maxdeg: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Singular vectors by degree and the dimension identity.
    Decompose {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=12))]
        maxdeg: u32,
    },
    /// The two thresholds of a base module and the excluded values of c.
    Thresholds {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        c: Option<Q>,
    },
    /// Numerical checks of the fractional transformations against P_i.
    Flows {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The bracket identity for the induced module on low-degree slices.
    VerifyFunctor {
        #[arg(long, value_enum, default_value = "trivial")]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q, default_value = "1/3")]
        c: Q,
        #[arg(long, default_value_t = 2)]
        maxdeg: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Trivial,
    Natural,
    Lambda2,
    Lambda3,
    Spin4,
    Spin5,
}

impl FamilyArg {
    fn family(self, k: u32) -> Family {
        match self {
            FamilyArg::Trivial => Family::Trivial,
            FamilyArg::Natural => Family::Natural(k),
            FamilyArg::Lambda2 => Family::Exterior(2),
            FamilyArg::Lambda3 => Family::Exterior(3),
            FamilyArg::Spin4 => Family::Spin4(k),
            FamilyArg::Spin5 => Family::Spin5(k),
        }
    }
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.trim().parse::<Q>().map_err(|e| format!("expected a rational such as -7/2: {e}"))
}

fn verify_algebra(r: &mut Report, maxdeg: u32, seed: u64, parallel: bool) {
    r.param("maxdeg", maxdeg);
    r.param("seed", seed);
    r.extend(lattice::verify_lattice(1000, seed));
    r.extend(chevalley::verify_jacobi(200, seed));
    let t = RealizationTable::get();
    r.extend(t.checks.iter().cloned());
    r.extend(verify_zeta_module(t));
    let sweep = verify_theta_homomorphism(t, parallel);
    let detail = match sweep.failures.first() {
        None => format!("{} ordered pairs", sweep.pairs),
        Some((a, b, d)) => format!("{} of {} pairs fail, first ({a}, {b}): {d}", sweep.failures.len(), sweep.pairs),
    };
    r.push(Check::new("bracket homomorphism", sweep.failures.is_empty(), detail));
    r.extend(verify_zeta_identity(t, maxdeg));
}

fn decompose(r: &mut Report, maxdeg: u32) -> Result<(), Error> {
    r.param("maxdeg", maxdeg);
    let t = RealizationTable::get();
    let sd = maxdeg.min(SINGULAR_DEGREE_BOUND);
    if sd < maxdeg {
        r.param("singular_degree", format!("{sd} (solver bound)"));
    }
    let slices = find_singular_vectors(t, sd)?;
    for s in &slices {
        let w: Vec<String> = s.weight2.iter().map(|x| Q::new(*x as i64, 2).to_string()).collect();
        let basis: Vec<String> = s.basis.iter().map(|p| p.to_string()).collect();
        r.push(Check::new(format!("singular degree {} weight ({})", s.degree, w.join(", ")), true, basis.join("; ")));
    }
    for d in 0..=sd {
        r.push(singular_span_check(t, &slices, d));
    }
    r.extend(check_dimension_identity(maxdeg)?);
    Ok(())
}

fn thresholds_cmd(r: &mut Report, fam: FamilyArg, k: u32, c: Option<Q>) -> Result<(), Error> {
    let family = fam.family(k);
    r.param("family", family);
    let rep = realize::<Q>(family)?;
    let th = thresholds(RealizationTable::get(), Iota::get(), &rep)?;
    r.push(Check::new("ell_omega", true, th.ell_omega.to_string()));
    for v in &th.flat {
        r.push(Check::new(format!("flat at {}", v.lambda_prime), true, v.value.to_string()));
    }
    r.push(Check::new("flat", true, th.flat_min.to_string()));
    let ex = &th.exclusions;
    r.push(Check::new("excluded progressions", true, format!("{} and {}", ex.from_flat, ex.from_omega)));
    let nested = if ex.nested() { " (nested)" } else { "" };
    r.push(Check::new("excluded set", true, format!("{ex}{nested}")));
    if let Some(c) = c {
        r.param("c", c);
        let verdict = if ex.contains(&c) { "excluded" } else { "not excluded" };
        r.push(Check::new("c", true, verdict));
    }
    Ok(())
}

fn flows(r: &mut Report, samples: u64, seed: u64) -> Result<(), Error> {
    r.param("samples", samples);
    r.param("seed", seed);
    let t = RealizationTable::get();
    let table = FlowTable::derived(t)?;
    r.extend(FlowTable::printed().compare(&table));
    for i in 0..16 {
        let f = generator_check(t, &table, i, samples as usize, seed)?;
        let ok = f.generator_error < 1e-6 && f.composition_error < 1e-9 && f.sign_consistent;
        r.push(Check::new(
            format!("flow {}", i + 1),
            ok,
            format!("generator {:.3e}, composition {:.3e}, sigma {:+}", f.generator_error, f.composition_error, f.sigma),
        ));
    }
    Ok(())
}

fn functor(r: &mut Report, fam: FamilyArg, k: u32, c: Q, maxdeg: u32, parallel: bool) -> Result<(), Error> {
    let family = fam.family(k);
    r.param("family", family);
    r.param("c", c);
    r.param("maxdeg", maxdeg);
    let rep = realize::<Q>(family)?;
    let iota = Iota::get();
    r.extend(iota.checks.iter().cloned());
    let s = verify_functor(iota, &rep, &c, maxdeg, parallel);
    let detail = match s.failures.first() {
        None => format!("{} ordered pairs on {} vectors", s.pairs, s.vectors),
        Some((a, b, d)) => format!("{} failures, first ({a}, {b}): {d}", s.failures.len()),
    };
    r.push(Check::new("bracket identity on slices", s.ok(), detail));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.common.parallel > 1 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.common.parallel).build_global().ok();
    }
    let parallel = cli.common.parallel > 1;
    let (report, result) = match cli.cmd {
        Cmd::VerifyAlgebra { maxdeg, seed } => {
            let mut r = Report::new("verify-algebra");
            verify_algebra(&mut r, maxdeg, seed, parallel);
            (r, Ok(()))
        }
        Cmd::Decompose { maxdeg } => {
            let mut r = Report::new("decompose");
            let res = decompose(&mut r, maxdeg);
            (r, res)
        }
        Cmd::Thresholds { family, k, c } => {
            let mut r = Report::new("thresholds");
            let res = thresholds_cmd(&mut r, family, k, c);
            (r, res)
        }
        Cmd::Flows { samples, seed } => {
            let mut r = Report::new("flows");
            let res = flows(&mut r, samples, seed);
            (r, res)
        }
        Cmd::VerifyFunctor { family, k, c, maxdeg } => {
            let mut r = Report::new("verify-functor");
            let res = functor(&mut r, family, k, c, maxdeg, parallel);
            (r, res)
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    println!("{report}");
    if let Some(path) = &cli.common.json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
