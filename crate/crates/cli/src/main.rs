//! Command-line front end: parse tableaux from text files, run the
//! sliding algorithms, and print canonical text back.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ortaquin::{
    enumerate_quasistandard, enumerate_tableaux, format_skew, format_tableau, ojdt_slide,
    parse_document, parse_tableau, pretty_grid, push, unpush, verify_shape, weyl_dim, Shape,
    SkewTableau, Tableau,
};

#[derive(Parser)]
#[command(name = "ortaquin", version, about = "Orthogonal tableau toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArgs {
    /// Shape coefficients a1,…,an (one per height)
    #[arg(long)]
    shape: String,
    /// Rank; must agree with the length of --shape when given
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a tableau file and print its basic properties
    Validate {
        /// Tableau file, or `-` for standard input
        file: String,
    },
    /// Print the two-letter doubling of a tableau
    Double {
        file: String,
        /// Draw an ASCII grid instead of the line format
        #[arg(long)]
        pretty: bool,
    },
    /// Slide a tableau down to its quasistandard form
    Push {
        file: String,
        /// Print one line per sliding pass
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Rebuild the preimage of a quasistandard tableau under the given shape
    Unpush {
        file: String,
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        pretty: bool,
    },
    /// Run one sliding pass on a skew tableau with a hole
    Ojdt {
        file: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Rotate a tableau by a half turn, swapping bars
    Sigma {
        file: String,
        #[arg(long)]
        pretty: bool,
    },
    /// List the (quasi)semistandard tableaux of a shape
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Quasistandard tableaux instead of semistandard
        #[arg(long)]
        quasi: bool,
        /// Print the count only
        #[arg(long)]
        count: bool,
    },
    /// Print the Weyl dimension of a shape's module
    Dim {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Cross-check the tableau counts of a shape against the dimension
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

/// Outcome classes: 0 ok, 1 failed check or bad data, 2 usage error.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<ortaquin::Error> for Failure {
    fn from(e: ortaquin::Error) -> Self {
        match e {
            ortaquin::Error::Parse(m) => Failure::Usage(m),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {}", e)))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {}", path, e)))
    }
}

fn read_tableau(path: &str) -> Result<Tableau, Failure> {
    Ok(parse_tableau(&read_input(path)?)?)
}

fn parse_shape(args: &ShapeArgs) -> Result<Shape, Failure> {
    let shape = Shape::parse(&args.shape)?;
    if let Some(n) = args.n {
        if n != shape.rank() {
            return Err(Failure::Usage(format!(
                "--n {} disagrees with the {}-part shape {}",
                n,
                shape.rank(),
                shape
            )));
        }
    }
    Ok(shape)
}

fn print_tableau(t: &Tableau, pretty: bool) {
    if pretty {
        print!("{}", pretty_grid(&SkewTableau::from_tableau(t)));
    } else {
        print!("{}", format_tableau(t));
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let t = read_tableau(&file)?;
            println!("shape {}", t.shape());
            println!("weight {}", t.weight());
            let levels = t.nqs_levels();
            if levels.is_empty() {
                println!("levels none");
            } else {
                let list: Vec<String> = levels.iter().map(|l| l.to_string()).collect();
                println!("levels {}", list.join(","));
            }
            println!(
                "quasistandard {}",
                if t.is_quasistandard() { "yes" } else { "no" }
            );
            if !t.is_semistandard() {
                return Err(Failure::Check("tableau is not semistandard".into()));
            }
            println!("semistandard yes");
        }
        Command::Double { file, pretty } => {
            let t = read_tableau(&file)?;
            let d = t.dble();
            if pretty {
                let cols: Vec<_> = d
                    .columns()
                    .iter()
                    .map(|c| ortaquin::SkewColumn {
                        offset: 0,
                        cells: c.entries().into_iter().map(ortaquin::Cell::Entry).collect(),
                        spin: false,
                        rotated: false,
                    })
                    .collect();
                print!("{}", pretty_grid(&SkewTableau { n: t.rank(), cols }));
            } else {
                println!("n {}", t.rank());
                for c in d.columns() {
                    let toks: Vec<String> =
                        c.entries().iter().map(|e| e.raw().to_string()).collect();
                    println!("col {}", toks.join(" "));
                }
            }
        }
        Command::Push {
            file,
            trace,
            pretty,
        } => {
            let t = read_tableau(&file)?;
            let (u, record) = push(&t)?;
            if trace {
                for (i, rem) in record.removals.iter().enumerate() {
                    for pass in &rem.passes {
                        println!(
                            "# removal {} height {} level {} exit {},{}",
                            i, rem.height, pass.level, pass.exit.0, pass.exit.1
                        );
                    }
                }
            }
            print_tableau(&u, pretty);
        }
        Command::Unpush {
            file,
            shape,
            pretty,
        } => {
            let u = read_tableau(&file)?;
            let lambda = parse_shape(&shape)?;
            let t = unpush(&u, &lambda)?;
            print_tableau(&t, pretty);
        }
        Command::Ojdt { file, pretty } => {
            let doc = parse_document(&read_input(&file)?)?;
            if doc.skew.star().is_none() {
                return Err(Failure::Usage(
                    "the skew tableau has no hole to slide".into(),
                ));
            }
            let (out, slide) = ojdt_slide(&doc.skew)?;
            if pretty {
                print!("{}", pretty_grid(&out));
            } else {
                print!("{}", format_skew(&out));
            }
            println!("exited {} {}", slide.exit.0, slide.exit.1);
        }
        Command::Sigma { file, pretty } => {
            let doc = parse_document(&read_input(&file)?)?;
            let out = doc.skew.sigma();
            if pretty {
                print!("{}", pretty_grid(&out));
            } else {
                print!("{}", format_skew(&out));
            }
        }
        Command::Enumerate {
            shape,
            quasi,
            count,
        } => {
            let shape = parse_shape(&shape)?;
            let all = if quasi {
                enumerate_quasistandard(&shape)?
            } else {
                enumerate_tableaux(&shape)?
            };
            if count {
                println!("{}", all.len());
            } else {
                for t in &all {
                    print!("{}", format_tableau(t));
                    println!();
                }
            }
        }
        Command::Dim { shape } => {
            let shape = parse_shape(&shape)?;
            println!("{}", weyl_dim(&shape));
        }
        Command::Verify { shape } => {
            let shape = parse_shape(&shape)?;
            let report = verify_shape(&shape)?;
            println!("shape {}", report.shape);
            println!("semistandard {}", report.semistandard);
            println!("weyl {}", report.weyl);
            for (mu, c) in &report.quasistandard {
                println!("qs {} {}", mu, c);
            }
            if !report.counts_match() {
                return Err(Failure::Check("counts do not match".into()));
            }
            println!("ok");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
