//! `trivext`: periodicity toolkit for trivial extensions of incidence and
//! path algebras.
//!
//! Exit codes: 0 success (resolve: periodic), 1 usage error, 2 input or
//! construction error, 3 resolve found divergence, 4 resolve was
//! inconclusive within budget. `verify-dynkin` exits 3 when any formula
//! check fails.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use trivext_cli::census::{run_census, CensusOptions};
use trivext_cli::input::{load_input, parse_field, parse_field_list, LoadedInput};
use trivext_cli::qpa::export_qpa;
use trivext_cli::report::{AlgebraInfo, CoxeterJson, ResolveReport, SCHEMA};
use trivext_core::algebra::{path_algebra, trivial_extension, BasedAlgebra};
use trivext_core::coxeter::coxeter_periodicity;
use trivext_core::dynkin::{cydim_dynkin, expected_period_dynkin, minimal_period_trivext, DynkinType};
use trivext_core::field::FieldSpec;
use trivext_core::resolution::{
    bimodule_syzygy_orbit, syzygy_orbit, BimoduleOptions, BimoduleVerdict, IsoOptions,
    OrbitOptions, PeriodicityVerdict,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_DIVERGING: i32 = 3;
const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "trivext",
    version,
    about = "syzygy periodicity for trivial extension algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the syzygy orbit of every simple module (or of the regular
    /// bimodule) and report periodicity.
    Resolve {
        /// poset or quiver file
        file: String,
        /// take the trivial extension of the algebra first
        #[arg(long)]
        te: bool,
        /// walk the bimodule syzygy orbit instead of the simple orbits
        #[arg(long)]
        bimodule: bool,
        /// coefficient field: q or a prime p
        #[arg(long, default_value = "q")]
        field: String,
        /// syzygy steps per orbit before giving up
        #[arg(long)]
        max_steps: Option<usize>,
        /// stop once a syzygy exceeds this dimension
        #[arg(long)]
        dim_cap: Option<usize>,
        /// also write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Enumerate all distributive lattices of size m and test each trivial
    /// extension for periodicity.
    Census {
        m: usize,
        /// allow the long sizes (m >= 9)
        #[arg(long)]
        extended: bool,
        /// worker threads (default: all cores)
        #[arg(long)]
        workers: Option<usize>,
        /// coefficient field: q or a prime p
        #[arg(long, default_value = "q")]
        field: String,
        /// also write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Coxeter polynomial of the algebra and the order of its Coxeter
    /// matrix, the cheap periodicity screen.
    Coxeter {
        /// poset or quiver file
        file: String,
    },
    /// Check the closed-form Dynkin period formulas against the engine.
    VerifyDynkin {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// comma-separated fields, e.g. q,2,3
        #[arg(long, default_value = "q,2")]
        fields: String,
    },
    /// Emit a GAP/QPA script presenting T(k[P]) with quiver and relations.
    ExportQpa {
        /// poset file (bounded poset)
        file: String,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Resolve {
            file,
            te,
            bimodule,
            field,
            max_steps,
            dim_cap,
            json,
        } => cmd_resolve(&file, te, bimodule, &field, max_steps, dim_cap, json),
        Cmd::Census {
            m,
            extended,
            workers,
            field,
            json,
        } => cmd_census(m, extended, workers, &field, json),
        Cmd::Coxeter { file } => cmd_coxeter(&file),
        Cmd::VerifyDynkin { max_rank, fields } => cmd_verify_dynkin(max_rank, &fields),
        Cmd::ExportQpa { file } => cmd_export_qpa(&file),
    }
}

fn seed_from_env() -> IsoOptions {
    let mut iso = IsoOptions::default();
    if let Ok(raw) = std::env::var("TRIVEXT_SEED") {
        match raw.parse::<u64>() {
            Ok(seed) => iso.seed = seed,
            Err(_) => eprintln!("warning: ignoring non-numeric TRIVEXT_SEED={raw:?}"),
        }
    }
    iso
}

fn fail_input(err: impl std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    EXIT_INPUT
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_resolve(
    file: &str,
    te: bool,
    bimodule: bool,
    field_arg: &str,
    max_steps: Option<usize>,
    dim_cap: Option<usize>,
    json: Option<PathBuf>,
) -> i32 {
    let field = match parse_field(field_arg) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let loaded = match load_input(file) {
        Ok(l) => l,
        Err(e) => return fail_input(e),
    };
    let base = match loaded.algebra(field) {
        Ok(a) => a,
        Err(e) => return fail_input(e),
    };
    let (algebra, name) = if te {
        (
            trivial_extension(&base),
            format!("T({})", loaded.base_algebra_name()),
        )
    } else {
        (base, loaded.base_algebra_name())
    };
    let info = AlgebraInfo {
        name,
        dim: algebra.dim(),
        vertices: algebra.vertices(),
        field: field.to_string(),
    };
    let defaults = OrbitOptions::default();
    let max_steps = max_steps.unwrap_or(defaults.max_steps);
    let dim_cap = dim_cap.unwrap_or(defaults.dim_cap);

    let report = if bimodule {
        let opts = BimoduleOptions {
            max_steps,
            dim_cap,
            iso: seed_from_env(),
            ..BimoduleOptions::default()
        };
        let rep = match bimodule_syzygy_orbit(&algebra, &opts) {
            Ok(r) => r,
            Err(e) => return fail_input(e),
        };
        ResolveReport::from_bimodule(file.into(), info, te, max_steps, dim_cap, &rep)
    } else {
        let opts = OrbitOptions { max_steps, dim_cap };
        let rep = syzygy_orbit(&algebra, &opts);
        ResolveReport::from_orbit(
            file.into(),
            info,
            te,
            max_steps,
            dim_cap,
            &rep,
            &loaded.vertex_names(),
        )
    };

    print!("{}", report.text());
    if let Some(path) = &json {
        if let Err(e) = write_json(path, &report) {
            return fail_input(e);
        }
    }
    match report.verdict.kind.as_str() {
        "Periodic" => EXIT_OK,
        "Diverging" => EXIT_DIVERGING,
        _ => EXIT_INCONCLUSIVE,
    }
}

fn cmd_census(
    m: usize,
    extended: bool,
    workers: Option<usize>,
    field_arg: &str,
    json: Option<PathBuf>,
) -> i32 {
    let field = match parse_field(field_arg) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if m > 12 {
        return fail_input(format!("census supports m <= 12, got {m}"));
    }
    if m >= 9 && !extended {
        eprintln!("error: census at m={m} is a long run; pass --extended to confirm");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return fail_input(e),
    };
    let opts = CensusOptions {
        field,
        ..CensusOptions::default()
    };
    let report = match pool.install(|| run_census(m, &opts)) {
        Ok(r) => r,
        Err(e) => return fail_input(e),
    };
    print!("{}", report.text());
    if let Some(path) = &json {
        if let Err(e) = write_json(path, &report) {
            return fail_input(e);
        }
    }
    EXIT_OK
}

fn cmd_coxeter(file: &str) -> i32 {
    let loaded = match load_input(file) {
        Ok(l) => l,
        Err(e) => return fail_input(e),
    };
    let algebra = match loaded.algebra(FieldSpec::Rationals) {
        Ok(a) => a,
        Err(e) => return fail_input(e),
    };
    let rep = match coxeter_periodicity(&algebra) {
        Ok(r) => r,
        Err(e) => return fail_input(e),
    };
    let out = CoxeterJson {
        schema: SCHEMA,
        command: "coxeter".into(),
        input: file.into(),
        algebra: AlgebraInfo {
            name: loaded.base_algebra_name(),
            dim: algebra.dim(),
            vertices: algebra.vertices(),
            field: "Q".into(),
        },
        coxeter_polynomial: rep.polynomial.to_string(),
        coxeter_period: rep.order,
    };
    println!("algebra: {} ({} vertices)", out.algebra.name, out.algebra.vertices);
    println!("coxeter polynomial: {}", out.coxeter_polynomial);
    match out.coxeter_period {
        Some(p) => println!("coxeter matrix has finite order {p}"),
        None => println!("coxeter matrix is not of finite order"),
    }
    EXIT_OK
}

fn dynkin_algebra(t: DynkinType, field: FieldSpec) -> BasedAlgebra {
    path_algebra(field, &t.quiver()).expect("Dynkin quivers are acyclic")
}

fn cmd_verify_dynkin(max_rank: usize, fields_arg: &str) -> i32 {
    let fields = match parse_field_list(fields_arg) {
        Ok(f) if !f.is_empty() => f,
        Ok(_) => {
            eprintln!("error: --fields must name at least one field");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if max_rank > 8 {
        eprintln!("error: verify-dynkin supports max-rank <= 8");
        return EXIT_USAGE;
    }
    let iso = seed_from_env();
    let mut failures = 0usize;
    for t in DynkinType::all_up_to_rank(max_rank) {
        let c = cydim_dynkin(t);
        // Coxeter order divides 2*ell: over Q, so field-independent
        let coxeter = coxeter_periodicity(&dynkin_algebra(t, FieldSpec::Rationals))
            .expect("Dynkin Cartan matrices are unimodular");
        let coxeter_ok = matches!(coxeter.order, Some(ord) if 2 * c.ell % ord == 0);
        if !coxeter_ok {
            failures += 1;
            println!(
                "FAIL {t}: coxeter order {:?} does not divide 2*ell = {}",
                coxeter.order,
                2 * c.ell
            );
        }
        for &field in &fields {
            let expected = expected_period_dynkin(t, field);
            let te = trivial_extension(&dynkin_algebra(t, field));
            let orbit = syzygy_orbit(&te, &OrbitOptions::default());
            match &orbit.verdict {
                PeriodicityVerdict::Periodic {
                    per_simple_periods, ..
                } => {
                    let common = per_simple_periods
                        .iter()
                        .fold(1u64, |acc, &p| num_integer::lcm(acc, p));
                    if expected % common == 0 {
                        println!("ok   {t} over {field}: common period {common} divides {expected}");
                    } else {
                        failures += 1;
                        println!(
                            "FAIL {t} over {field}: common period {common} does not divide {expected}"
                        );
                    }
                }
                other => {
                    failures += 1;
                    println!("FAIL {t} over {field}: verdict {}", other.kind());
                }
            }
            if t.rank() <= 3 {
                let opts = BimoduleOptions {
                    iso,
                    ..BimoduleOptions::default()
                };
                let minimal = minimal_period_trivext(c, field);
                match bimodule_syzygy_orbit(&trivial_extension(&dynkin_algebra(t, field)), &opts) {
                    Ok(rep) => match rep.verdict {
                        BimoduleVerdict::Periodic { n } if n == minimal => {
                            println!("ok   {t} over {field}: bimodule period {n}");
                        }
                        BimoduleVerdict::Periodic { n } => {
                            failures += 1;
                            println!(
                                "FAIL {t} over {field}: bimodule period {n}, formula says {minimal}"
                            );
                        }
                        other => {
                            failures += 1;
                            println!(
                                "FAIL {t} over {field}: bimodule verdict inconclusive ({other:?})"
                            );
                        }
                    },
                    Err(e) => {
                        failures += 1;
                        println!("FAIL {t} over {field}: {e}");
                    }
                }
            }
        }
    }
    if failures == 0 {
        println!("all checks passed");
        EXIT_OK
    } else {
        println!("{failures} check(s) failed");
        EXIT_DIVERGING
    }
}

fn cmd_export_qpa(file: &str) -> i32 {
    let loaded = match load_input(file) {
        Ok(l) => l,
        Err(e) => return fail_input(e),
    };
    let poset = match &loaded {
        LoadedInput::Poset(p) => p,
        LoadedInput::Quiver(_) => {
            return fail_input("export-qpa needs a poset file (quiver input has no incidence algebra)");
        }
    };
    match export_qpa(poset) {
        Ok(script) => {
            print!("{script}");
            EXIT_OK
        }
        Err(e) => fail_input(e),
    }
}
