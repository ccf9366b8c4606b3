use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use stsys::category::{catstsys_bounds, parse_product_expr, partition_verdicts, DimensionProfile, Partition};
use stsys::cohomology::CohomologyRing;
use stsys::complex::{DeformationFamily, WeightedCellComplex};
use stsys::deformation::{deformation_sweep, SweepConfig};
use stsys::format::{complex_to_json, read_complex, read_profile};
use stsys::homology::{homology, HomologyClass};
use stsys::library;
use stsys::maps::{verify_degree_sandwich, SimplicialMap};
use stsys::rational::{fmt_rational, parse_rational, to_f64, Rational};
use stsys::stable_norm::{
    verify_product_inequality, verify_projection_equality, verify_rescaling, NormSolver,
    VerificationReport, DEFAULT_SEARCH_RADIUS,
};

const EXIT_INPUT: u8 = 2;

/// Stable systoles, cup length and stable systolic category of weighted cell complexes.
///
/// COMPLEX arguments are JSON complex files or library names: point, circle:K,
/// cubical-circle:K, sphere:N, cubical-sphere:N, torus:K, torus9, rp2, and products A*B.
#[derive(Parser)]
#[command(name = "stsys", version)]
struct Cli {
    /// Print a decimal approximation next to every fraction.
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers, torsion and generators.
    Homology { complex: String },
    /// Stable q-systole.
    Systole {
        complex: String,
        #[arg(short)]
        q: usize,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
    },
    /// Stable norm of a class given by coordinates in the generator basis.
    StableNorm {
        complex: String,
        #[arg(short)]
        q: usize,
        /// Comma-separated rational coordinates.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Real cup length of a simplicial complex.
    CupLength { complex: String },
    /// Least positive degree with nonzero rational cohomology.
    Lpd { source: String },
    /// Bounds on the stable systolic category.
    Catstsys {
        /// Profile JSON file, product expression such as "S1 x S2 x S7", or complex.
        source: String,
        /// Also classify every admissible partition.
        #[arg(long)]
        partitions: bool,
    },
    /// Check one of the exact systolic relations.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Sweep a product complex over its deformation family.
    Deform {
        /// Product complex (file with factor tags, or library names joined by `*`).
        complex: String,
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = "1,2,4,8")]
        t: String,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a library complex as JSON.
    Export { name: String },
}

#[derive(Subcommand)]
enum Check {
    /// stsys_q(tK) = t^q stsys_q(K).
    Rescale {
        complex: String,
        #[arg(short)]
        q: usize,
        #[arg(long)]
        t: String,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
    },
    /// stsys_{p+q}(K x L) <= stsys_p(K) stsys_q(L).
    Product {
        first: String,
        second: String,
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
    },
    /// stsys_q(K x L) = stsys_q(K) when L contributes no positive-degree classes.
    Projection {
        first: String,
        second: String,
        #[arg(short)]
        q: usize,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
    },
    /// stsys_q(L) <= stsys_q(K, g*G_L) <= D(g) stsys_q(L).
    DegreeSandwich {
        source: String,
        target: String,
        /// Comma-separated target vertex for each source vertex.
        #[arg(long)]
        vertex_map: String,
        #[arg(short, default_value_t = 1)]
        q: usize,
        #[arg(short = 'R', long, default_value_t = DEFAULT_SEARCH_RADIUS)]
        radius: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

struct Printer {
    decimal: bool,
}

impl Printer {
    fn num(&self, r: &Rational) -> String {
        if self.decimal && !r.is_integer() {
            format!("{} (~{:.6})", fmt_rational(r), to_f64(r))
        } else {
            fmt_rational(r)
        }
    }

    fn report(&self, r: &VerificationReport) -> ExitCode {
        println!("{}: {}", r.check, r.verdict);
        for (name, v) in &r.quantities {
            println!("  {name} = {}", self.num(v));
        }
        ExitCode::from(r.verdict.exit_code())
    }
}

fn load_complex(arg: &str) -> Result<WeightedCellComplex> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_complex(path).with_context(|| format!("reading {arg}"));
    }
    library::by_name(arg).with_context(|| format!("`{arg}` is neither a file nor a library complex"))
}

fn load_profile(arg: &str) -> Result<DimensionProfile> {
    let path = Path::new(arg);
    if path.is_file() {
        return match read_profile(path) {
            Ok(p) => Ok(p),
            Err(_) => Ok(DimensionProfile::from_complex(&read_complex(path).with_context(|| {
                format!("{arg} is neither a profile nor a complex file")
            })?)?),
        };
    }
    if let Ok(p) = parse_product_expr(arg) {
        return Ok(p);
    }
    Ok(DimensionProfile::from_complex(&load_complex(arg)?)?)
}

fn parse_list<T>(s: &str, what: &str, f: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    s.split(',').map(|x| f(x.trim()).with_context(|| format!("bad {what} `{x}`"))).collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = Printer { decimal: cli.decimal };
    match cli.command {
        Command::Homology { complex } => {
            let k = load_complex(&complex)?;
            let h = homology(&k);
            println!("kind {}, top dimension {}, {} cells", k.kind(), k.top_dim(), k.total_cells());
            for q in 0..=k.top_dim() {
                let torsion: Vec<String> = h.torsion(q).iter().map(ToString::to_string).collect();
                println!("H_{q}: betti {}, torsion [{}]", h.betti(q), torsion.join(", "));
            }
            println!("euler characteristic {}", h.euler_characteristic());
        }
        Command::Systole { complex, q, radius } => {
            let k = load_complex(&complex)?;
            match NormSolver::new(&k).stable_systole(q, radius)? {
                stsys::stable_norm::SystoleResult::Trivial => println!("trivial"),
                stsys::stable_norm::SystoleResult::Finite { value, witness, status } => {
                    println!("{}", out.num(&value));
                    println!("status {status}, witness {witness:?}");
                }
            }
        }
        Command::StableNorm { complex, q, class } => {
            let k = load_complex(&complex)?;
            let coords = parse_list(&class, "coordinate", parse_rational)?;
            let r = NormSolver::new(&k).stable_norm(&HomologyClass::new(q, coords))?;
            println!("{}", out.num(&r.value));
        }
        Command::CupLength { complex } => {
            let k = load_complex(&complex)?;
            let ring = CohomologyRing::new(&k)?;
            let p = ring.profile();
            println!("{}", p.cup_length);
            println!("lpd {:?}, maximal real cup length {}", p.lpd, p.max_cup_length);
        }
        Command::Lpd { source } => match load_profile(&source)?.lpd() {
            Some(l) => println!("{l}"),
            None => println!("none"),
        },
        Command::Catstsys { source, partitions } => {
            let p = load_profile(&source)?;
            let v = catstsys_bounds(&p)?;
            let rules = |r: &[stsys::category::Rule]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            println!("{}: dimension {}", p.label(), p.dim);
            println!("lower = {} [{}]", v.lower, rules(&v.lower_from));
            println!("upper = {} [{}]", v.upper, rules(&v.upper_from));
            println!("{}", if v.exact { format!("exact: catstsys = {}", v.lower) } else { "gap".into() });
            for o in &v.outcomes {
                let tag = if o.applicable { "applied" } else { "inapplicable" };
                println!("  {}: {tag}; {}", o.rule, o.note);
            }
            if partitions {
                for (part, verdict) in partition_verdicts(&p)? {
                    println!("  {part}: {verdict:?}");
                }
            }
        }
        Command::Verify { check } => {
            let report = match check {
                Check::Rescale { complex, q, t, radius } => {
                    let t = parse_rational(&t).with_context(|| format!("bad scale `{t}`"))?;
                    verify_rescaling(&load_complex(&complex)?, q, &t, radius)?
                }
                Check::Product { first, second, p, q, radius } => {
                    verify_product_inequality(&load_complex(&first)?, &load_complex(&second)?, p, q, radius)?
                }
                Check::Projection { first, second, q, radius } => {
                    verify_projection_equality(&load_complex(&first)?, &load_complex(&second)?, q, radius)?
                }
                Check::DegreeSandwich { source, target, vertex_map, q, radius } => {
                    let vm = parse_list(&vertex_map, "vertex", |s| s.parse().ok())?;
                    let g = SimplicialMap::new(load_complex(&source)?, load_complex(&target)?, vm)?;
                    verify_degree_sandwich(&g, q, radius)?
                }
            };
            return Ok(out.report(&report));
        }
        Command::Deform { complex, partition, t, radius, format } => {
            let family = DeformationFamily::new(load_complex(&complex)?)?;
            let partition = Partition::parse(&partition)?;
            let samples = parse_list(&t, "sample", parse_rational)?;
            let report = deformation_sweep(&family, &partition, &SweepConfig::new(samples, radius)?)?;
            match format {
                Format::Csv => report.write_csv(std::io::stdout())?,
                Format::Text => println!("{report}"),
            }
        }
        Command::Export { name } => {
            if Path::new(&name).exists() {
                bail!("export takes a library name, not a file");
            }
            println!("{}", complex_to_json(&library::by_name(&name)?));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
