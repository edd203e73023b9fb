use clap::{Parser, Subcommand, ValueEnum};
use grflag::filtration::{self, FiltrationSpec};
use grflag::groebner::{buchberger, quotient_hilbert_series, IdealFile, OrderKind};
use grflag::liedata;
use grflag::snf::smith_normal_form;
use grflag::{kres, verify};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "grflag", version, about = "graded rings of the gamma filtration on K-theory of versal flag varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KresOp {
    Image,
    Telescope,
    Torsion,
    Rost,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered cases (built-ins plus GRFLAG_CASE_DIR).
    ListCases,
    /// Compute the associated graded of a case's weight filtration.
    Gr {
        #[arg(long)]
        case: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite against a case's expected data.
    Verify {
        #[arg(long)]
        case: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<String>,
    },
    /// Hilbert series of the quotient by an ideal file.
    Hilbert {
        #[arg(long = "ideal-file")]
        ideal_file: String,
        /// use lexicographic order instead of grevlex
        #[arg(long)]
        lex: bool,
    },
    /// Smith normal form of an integer matrix file (JSON array of arrays).
    Snf {
        #[arg(long = "matrix-file")]
        matrix_file: String,
        #[arg(long)]
        json: bool,
    },
    /// Restriction-image calculus for a case.
    Kres {
        #[arg(long)]
        case: String,
        #[arg(long, value_enum)]
        op: KresOp,
        /// telescope parameter k, or the Rost motive index n (default 1 / 2)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn run() -> Result<u8, grflag::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::ListCases => {
            for name in liedata::list_cases() {
                println!("{name}");
            }
            Ok(0)
        }
        Command::Gr { case, json } => {
            let case = liedata::load_case(&case)?;
            let spec = FiltrationSpec::from_case(&case)?;
            let mut gr = filtration::gr_invariants(&spec)?;
            gr.case = Some(case.name.clone());
            if json {
                println!("{}", serde_json::to_string_pretty(&gr)?);
            } else {
                println!("case {}", case.name);
                for piece in &gr.weights {
                    let cls: Vec<String> = piece
                        .factors
                        .iter()
                        .zip(&piece.reps)
                        .map(|(d, r)| {
                            if *d == 0 {
                                format!("Z{{{r}}}")
                            } else {
                                format!("Z/{d}{{{r}}}")
                            }
                        })
                        .collect();
                    println!("  w{}: {}", piece.w, cls.join(" + "));
                }
                println!(
                    "totals: free {} torsion {} mod-p dim {}",
                    gr.totals.free, gr.totals.torsion, gr.totals.mod_p_dim
                );
            }
            Ok(0)
        }
        Command::Verify {
            case,
            suite,
            json,
            out,
        } => {
            let case = liedata::load_case(&case)?;
            let report = verify::run_suite(&case, &suite)?;
            let rendered = if json {
                serde_json::to_string_pretty(&report)?
            } else {
                report.render_text()
            };
            match out {
                Some(path) => std::fs::write(path, rendered)?,
                None => println!("{rendered}"),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Hilbert { ideal_file, lex } => {
            let src = std::fs::read_to_string(&ideal_file)?;
            let file = IdealFile::from_json(&src)?;
            let order = if lex { OrderKind::Lex } else { OrderKind::Grevlex };
            let (_, gens) = file.into_ring_and_gens(order)?;
            let gb = buchberger(&gens, None)?;
            let hs = quotient_hilbert_series(&gb)?;
            if hs.coeffs.is_empty() {
                println!("series (rational): {hs}");
            } else {
                println!("series: {hs}");
                println!("dimension: {}", hs.eval_at_one());
            }
            Ok(0)
        }
        Command::Snf { matrix_file, json } => {
            let src = std::fs::read_to_string(&matrix_file)?;
            let rows: Vec<Vec<i64>> = serde_json::from_str(&src)?;
            let mat: grflag::snf::Mat = rows
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            if mat.is_empty() || mat.iter().any(|r| r.len() != mat[0].len() && false) {
                return Err(grflag::Error::Matrix("empty matrix".into()));
            }
            let width = mat[0].len();
            if mat.iter().any(|r| r.len() != width) {
                return Err(grflag::Error::Matrix("ragged matrix".into()));
            }
            let s = smith_normal_form(&mat);
            if json {
                let factors: Vec<i64> = s.factors.iter().map(|&d| d as i64).collect();
                println!("{}", serde_json::to_string(&factors)?);
            } else {
                let parts: Vec<String> = s.factors.iter().map(|d| d.to_string()).collect();
                println!("invariant factors: ({})", parts.join(", "));
            }
            Ok(0)
        }
        Command::Kres { case, op, k, json } => {
            let case = liedata::load_case(&case)?;
            match op {
                KresOp::Image => {
                    let rep = kres::image_subalgebra(&case, true, None, None)?;
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep)?);
                    } else {
                        println!("case {} image (mod {})", rep.case, case.prime);
                        for (m, s) in &rep.min_exponents {
                            match s {
                                Some(s) => println!("  {m}: v1^{s}"),
                                None => println!("  {m}: not attained"),
                            }
                        }
                        println!("full: {} stable: {}", rep.full, rep.stable);
                        if let Some(c) = &rep.index_convention {
                            println!("index convention: {c}");
                        }
                    }
                    Ok(0)
                }
                KresOp::Telescope => {
                    let rep = kres::telescope_check(&case, k.unwrap_or(1))?;
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep)?);
                    } else {
                        println!("case {} telescope k={}", rep.case, rep.k);
                        println!("  base: {}", if rep.base_ok { "exact" } else { "FAILS" });
                        for (i, ok) in &rep.steps {
                            println!("  step i={i}: {}", if *ok { "exact" } else { "FAILS" });
                        }
                        for (range, eq, residual) in &rep.identity {
                            println!(
                                "  displayed identity {range}: {}",
                                if *eq {
                                    "equal".to_string()
                                } else {
                                    format!("residual {residual}")
                                }
                            );
                        }
                    }
                    Ok(0)
                }
                KresOp::Torsion => {
                    let rep = kres::torsion_bound(&case)?;
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep)?);
                    } else {
                        println!(
                            "t(G)_({}) <= {}^{} witness {}",
                            case.prime, case.prime, rep.exponent, rep.witness
                        );
                    }
                    Ok(0)
                }
                KresOp::Rost => {
                    let rep = kres::rost_counts(k.unwrap_or(2), case.prime)?;
                    if json {
                        println!("{}", serde_json::to_string_pretty(&rep)?);
                    } else {
                        println!(
                            "R_{} at p={}: {} Chow classes, {} killed, relation verified: {}",
                            rep.n, rep.p, rep.chow_basis_count, rep.gr_geo_killed_count, rep.relation_verified
                        );
                    }
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
