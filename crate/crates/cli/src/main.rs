use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Output;

#[derive(Debug, Parser)]
#[command(
    name = "trireg",
    version,
    about = "Triangular regions, lozenge tilings and the weak Lefschetz property of monomial ideals in K[x,y,z]"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "TRIREG_FORMAT",
        default_value = "json"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct IdealArg {
    /// Comma-separated monomial generators, e.g. "x^2, xy, y^3, z^4".
    #[arg(long)]
    ideal: String,
}

#[derive(Debug, Args)]
struct RegionArgs {
    #[command(flatten)]
    ideal: IdealArg,
    /// Side length d of the triangular region T_d(I).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    degree: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert function of R/I in degrees 0..=max-degree.
    Hilbert {
        #[command(flatten)]
        ideal: IdealArg,
        #[arg(long)]
        max_degree: u32,
    },
    /// Labels, punctures and balance of T_d(I).
    Region {
        #[command(flatten)]
        region: RegionArgs,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Include the bi-adjacency matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Find one lozenge tiling, or a structural reason there is none.
    Tile {
        #[command(flatten)]
        region: RegionArgs,
        /// Also write an SVG drawing of the tiling to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Count tilings and evaluate permanent, determinant and rank of Z(T).
    Count {
        #[command(flatten)]
        region: RegionArgs,
        /// Stop enumerating after this many tilings.
        #[arg(long, default_value_t = trireg::tiling::DEFAULT_TILING_CAP)]
        cap: u64,
        /// Largest column count for which the permanent is evaluated.
        #[arg(long, default_value_t = trireg::linalg::DEFAULT_PERMANENT_COLUMNS)]
        max_columns: usize,
    },
    /// Decide the weak Lefschetz property of R/I.
    Wlp {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Evaluate the numerical criterion for WLP and semistability.
    Criterion {
        #[command(flatten)]
        ideal: IdealArg,
    },
    /// Decide semistability of the syzygy bundle through tileability of T_d(I).
    Semistable {
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Build a member of an explicit family of ideals.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        /// example: the degrees d_1,...,d_t; convenient: t,d.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<u32>,
    },
    /// Write an SVG drawing of T_d(I) or of one of its tilings.
    Render {
        #[command(flatten)]
        region: RegionArgs,
        /// Draw a tiling instead of the bare region.
        #[arg(long)]
        tiling: bool,
        /// Destination file; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Pixels per triangle side.
        #[arg(long, default_value_t = 40.0)]
        unit: f64,
        /// Print monomial labels inside triangles.
        #[arg(long)]
        labels: bool,
        /// Leave punctures unshaded.
        #[arg(long)]
        no_shade: bool,
        /// Draw floating punctures like the others.
        #[arg(long)]
        no_floating: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Example,
    Convenient,
}

enum Failure {
    Usage(String),
    Core(trireg::Error),
    Io(String, std::io::Error),
}

impl From<trireg::Error> for Failure {
    fn from(e: trireg::Error) -> Self {
        Failure::Core(e)
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    use Command::*;
    match cli.command {
        Hilbert { ideal, max_degree } => Ok(commands::hilbert(&parse(&ideal)?, max_degree)),
        Region {
            region,
            svg,
            matrix,
        } => {
            let (i, d) = parse_region(&region)?;
            let (out, drawing) = commands::region(&i, d, matrix)?;
            if let Some(path) = svg {
                std::fs::write(&path, drawing)
                    .map_err(|e| Failure::Io(path.display().to_string(), e))?;
            }
            Ok(out)
        }
        Tile { region, svg } => {
            let (i, d) = parse_region(&region)?;
            let (out, drawing) = commands::tile(&i, d)?;
            if let (Some(path), Some(drawing)) = (svg, drawing) {
                std::fs::write(&path, drawing)
                    .map_err(|e| Failure::Io(path.display().to_string(), e))?;
            }
            Ok(out)
        }
        Count {
            region,
            cap,
            max_columns,
        } => {
            let (i, d) = parse_region(&region)?;
            Ok(commands::count(&i, d, cap, max_columns)?)
        }
        Wlp { ideal } => Ok(commands::wlp(&parse(&ideal)?)?),
        Criterion { ideal } => Ok(commands::criterion(&parse(&ideal)?)?),
        Semistable { region } => {
            let (i, d) = parse_region(&region)?;
            Ok(commands::semistable(&i, d)?)
        }
        Family { kind, params } => match kind {
            FamilyKind::Example => Ok(commands::family_example(params)?),
            FamilyKind::Convenient => match params[..] {
                [t, d] => Ok(commands::family_convenient(t as usize, d)?),
                _ => Err(Failure::Usage(format!(
                    "--kind convenient takes --params t,d, got {} values",
                    params.len()
                ))),
            },
        },
        Render {
            region,
            tiling,
            output,
            unit,
            labels,
            no_shade,
            no_floating,
        } => {
            if !(unit.is_finite() && unit > 0.0) {
                return Err(Failure::Usage(format!(
                    "--unit must be positive, got {unit}"
                )));
            }
            let (i, d) = parse_region(&region)?;
            let opts = trireg::RenderOptions {
                unit,
                show_labels: labels,
                shade_punctures: !no_shade,
                mark_floating: !no_floating,
            };
            let drawing = commands::render(&i, d, tiling, &opts)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, &drawing)
                        .map_err(|e| Failure::Io(path.display().to_string(), e))?;
                    Ok(Output::raw(String::new()))
                }
                None => Ok(Output::raw(drawing)),
            }
        }
    }
}

fn parse(arg: &IdealArg) -> Result<trireg::MonomialIdeal, Failure> {
    Ok(trireg::parse_ideal(&arg.ideal)?)
}

fn parse_region(arg: &RegionArgs) -> Result<(trireg::MonomialIdeal, u32), Failure> {
    Ok((parse(&arg.ideal)?, arg.degree))
}

fn report(kind: &str, message: &str) {
    let err = serde_json::json!({ "error": kind, "message": message });
    eprintln!("{err}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            report("usage", e.render().to_string().trim_end());
            return ExitCode::from(1);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let text = match format {
                Format::Json => out.json(),
                Format::Text => out.text(),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            report("usage", &msg);
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            report(e.kind(), &e.to_string());
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
        Err(Failure::Io(path, e)) => {
            report("io", &format!("{path}: {e}"));
            ExitCode::from(2)
        }
    }
}
