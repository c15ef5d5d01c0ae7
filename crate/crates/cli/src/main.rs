use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use critport::commands::{self, parse_angle_list, CommandError, GammaChoice, Report};
use critport::document::PortraitDocument;
use critport::svg::RenderSpec;

#[derive(Parser)]
#[command(name = "critport", version, about = "Combinatorics of critical portraits")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Portrait document (TOML).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Special arguments: `auto`, `none`, or a file listing angles.
    #[arg(long, global = true, default_value = "auto")]
    gamma: String,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Angle labels in SVG output.
    #[arg(long, global = true, value_enum)]
    labels: Option<Toggle>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Check the portrait and the weak-unlinkage proposition.
    Validate,
    /// Print Γ, F* and J*.
    Classes,
    /// Print the web, its self-map and edge classes.
    Web,
    /// Look for Levy-cycle witnesses in a partition (default: J*).
    Levy {
        /// File holding a partition such as `{{0},{1/4},{3/4}}`.
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Solve x_i = x_{i+1}/d_i + y_i around a cycle.
    Twist {
        /// Comma-separated local degrees.
        degrees: String,
        /// Comma-separated differences, as p/q.
        differences: String,
    },
    /// Report the arcs sharing the first N left addresses with THETA.
    Pullback { theta: String, n: u32 },
    /// Render the portrait and its J* classes as SVG.
    Svg {
        /// Disk radius in pixels.
        #[arg(long)]
        radius: Option<u32>,
    },
}

fn read(path: &Path) -> Result<String, CommandError> {
    fs::read_to_string(path).map_err(|source| CommandError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn document(cli: &Cli) -> Result<PortraitDocument, CommandError> {
    let path = cli
        .input
        .as_deref()
        .ok_or_else(|| CommandError::Parse("--input is required for this command".into()))?;
    Ok(PortraitDocument::parse(&read(path)?)?)
}

fn gamma_choice(text: &str) -> Result<GammaChoice, CommandError> {
    match text {
        "auto" => Ok(GammaChoice::Auto),
        "none" => Ok(GammaChoice::None),
        path => Ok(GammaChoice::Given(parse_angle_list(&read(Path::new(path))?)?)),
    }
}

fn run(cli: &Cli) -> Result<Report, CommandError> {
    match &cli.command {
        Command::Twist {
            degrees,
            differences,
        } => commands::twist(degrees, differences),
        Command::Pullback { theta, n } => commands::pullback(&document(cli)?, theta, *n),
        command => {
            let doc = document(cli)?;
            let gamma = gamma_choice(&cli.gamma)?;
            match command {
                Command::Validate => commands::validate(&doc, &gamma),
                Command::Classes => commands::classes(&doc, &gamma),
                Command::Web => commands::web(&doc, &gamma),
                Command::Levy { partition } => {
                    let text = partition.as_deref().map(read).transpose()?;
                    commands::levy(&doc, &gamma, text.as_deref())
                }
                Command::Svg { radius } => {
                    let radius = radius.or(doc.render.radius).unwrap_or(RenderSpec::default().radius);
                    let mut spec = RenderSpec::default()
                        .with_radius(radius)
                        .ok_or_else(|| CommandError::Parse("radius must be positive".into()))?;
                    spec.labels = match cli.labels {
                        Some(Toggle::On) => true,
                        Some(Toggle::Off) => false,
                        None => doc.render.labels.unwrap_or(true),
                    };
                    commands::svg(&doc, &gamma, &spec)
                }
                Command::Twist { .. } | Command::Pullback { .. } => unreachable!(),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &report.text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", report.text),
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
