//! `ultrametric`: command-line front end for p-adic hyperbolic geometry and
//! the injectivity criteria.

mod commands;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Exit status for malformed input and failed operations.
pub const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "ultrametric", version, about = "Exact p-adic hyperbolic geometry and injectivity criteria")]
pub struct Cli {
    /// The prime p.
    #[arg(long = "p", global = true, default_value_t = 3)]
    pub p: u64,
    /// Digits shown when rendering exact values as p-adic expansions.
    #[arg(long, global = true, default_value_t = 64)]
    pub prec: u32,
    /// Residue depth k for sweeps and the oracle (lifts mod p^k).
    #[arg(long, global = true, default_value_t = 3)]
    pub depth: u32,
    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

/// A map given as a polynomial, or as a quotient with `--den`.
#[derive(Args, Debug)]
pub struct MapArgs {
    /// Polynomial: symbolic ("z+z^2") or coefficients low to high ("1/2,0,3").
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: String,
    /// Denominator polynomial, making the map f/den.
    #[arg(long, allow_hyphen_values = true)]
    pub den: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Hyperbolic distance between two points "center;rexp".
    Dist {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Image of a point under a homography "a,b,c,d".
    Act {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Smallest ball containing both points.
    Join {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Median of three points.
    Median {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Convex hull of comma-separated points inside a base ball.
    Hull {
        #[arg(long, default_value = "0;0", allow_hyphen_values = true)]
        base: String,
        #[arg(allow_hyphen_values = true)]
        points: String,
    },
    /// log_p of the Gauss norm of f on a ball.
    Gaussnorm {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(default_value = "0;0", allow_hyphen_values = true)]
        ball: String,
    },
    /// Image ball f(B) of a ball under a polynomial.
    Induce {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        ball: String,
    },
    /// Newton polygon, with the zero count in a ball when one is given.
    Newton {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        ball: Option<String>,
    },
    /// Reduction modulo p and its class.
    Reduce {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Truncated compositional inverse of f and its coefficient valuations.
    InvertSeries {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(long = "N", default_value_t = 10)]
        n: usize,
    },
    /// The valuation identity at one pair of points.
    Eq1 {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// The valuation identity on every pair of residue lifts of a domain.
    Eq1Sweep {
        #[command(flatten)]
        map: MapArgs,
        /// Affinoid "c;r" or "c;r|c1;r1|..." with removed open balls.
        #[arg(long, default_value = "0;0", allow_hyphen_values = true)]
        domain: String,
    },
    /// Cross-ratio R(a,b;c,d), compared with its image when --f is given.
    Crossratio {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "f")]
        den: Option<String>,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Reduction certificate that f is an isometry of the closed unit ball.
    IsometryCert {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
    },
    /// Affine change of target making f fix the Gauss point with good reduction.
    Normalize {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
    },
    /// Brute-force injectivity of f modulo p^depth on a domain.
    Oracle {
        #[arg(long = "f", allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value = "0;0", allow_hyphen_values = true)]
        domain: String,
    },
    /// Reduction, truncated inverses and coefficient valuations for z + z^2.
    ExampleZPlusZ2 {
        #[arg(long = "N", default_value_t = 20)]
        n: usize,
        /// Length of the coefficient valuation table.
        #[arg(long, default_value_t = 200)]
        table: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            let diag = json!({"error": "usage", "message": message.trim_end()});
            eprintln!("{diag}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string(&report.body).unwrap());
            } else {
                print!("{}", render::text(&report.body));
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("{}", json!({"error": commands::error_kind(&e), "message": e.to_string()}));
            ExitCode::from(EXIT_ERROR)
        }
    }
}
