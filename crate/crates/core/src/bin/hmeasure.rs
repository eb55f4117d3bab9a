use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hmeasure::report::{fmt_sig12, serialize_report};
use hmeasure::svg::{concentration_panel, label_swap_panel, render_weight_density_svg};
use hmeasure::{run_eval, BetaShape, Error, EvalConfig, MetricReport, PriorPair, ReportFormat, WeightArgs};

#[derive(Parser)]
#[command(name = "hmeasure", version, about = "Evaluate binary classifier scores: H measure, AUC, KS and friends")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one or more CSV score files.
    Eval(EvalArgs),
    /// Plot Beta weight densities to an SVG file.
    PlotWeights(PlotArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// CSV files with a header row.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value = "label")]
    label_column: String,
    #[arg(long, default_value = "score")]
    score_column: String,
    /// Override class priors, as "PI0,PI1".
    #[arg(long, value_parser = parse_pair)]
    priors: Option<(f64, f64)>,
    /// Explicit Beta shape α (requires --beta).
    #[arg(long)]
    alpha: Option<f64>,
    /// Explicit Beta shape β (requires --alpha).
    #[arg(long)]
    beta: Option<f64>,
    /// Place the weight mode at this normalized cost.
    #[arg(long)]
    mode_c: Option<f64>,
    /// Place the weight mode at r/(1+r) for this severity ratio.
    #[arg(long)]
    severity_ratio: Option<f64>,
    /// Concentration α+β for --mode-c / --severity-ratio (default 3).
    #[arg(long)]
    k: Option<f64>,
    /// Use the symmetric Beta(2, 2).
    #[arg(long)]
    beta22: bool,
    /// Use Beta(α, 1 + (α−1)π0/π1); α defaults to 2.
    #[arg(long, value_name = "ALPHA", num_args = 0..=1)]
    legacy_asymmetric: Option<Option<f64>>,
    /// Also report confusion counts and point metrics at this threshold.
    #[arg(long, allow_negative_numbers = true)]
    threshold: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the ROC curve and hull to this SVG file.
    #[arg(long)]
    roc_svg: Option<PathBuf>,
    /// Write the resolved weight density to this SVG file.
    #[arg(long)]
    weight_svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    out: PathBuf,
    /// A density to draw, as "ALPHA,BETA" or "LABEL=ALPHA,BETA". Repeatable.
    #[arg(long = "shape")]
    shapes: Vec<String>,
    /// Legacy and default weights at this π1, each with its label-swapped twin.
    #[arg(long, value_name = "PI1")]
    label_swap: Option<f64>,
    /// Mode for a concentration sweep (use with --k).
    #[arg(long, value_name = "C")]
    concentration: Option<f64>,
    /// Concentrations for --concentration, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "3,5,10,30")]
    k: Vec<f64>,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected two comma-separated numbers")?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

fn parse_shape(s: &str) -> Result<(String, BetaShape), Error> {
    let (label, pair) = match s.split_once('=') {
        Some((l, p)) => (Some(l.to_string()), p),
        None => (None, s),
    };
    let (a, b) = parse_pair(pair).map_err(|e| Error::InvalidParameter(format!("--shape {s}: {e}")))?;
    let shape = BetaShape::new(a, b)?;
    let label = label.unwrap_or_else(|| format!("Beta({}, {})", fmt_sig12(a), fmt_sig12(b)));
    Ok((label, shape))
}

fn eval(args: EvalArgs) -> Result<String, Error> {
    let weight = WeightArgs {
        alpha: args.alpha,
        beta: args.beta,
        mode_c: args.mode_c,
        severity_ratio: args.severity_ratio,
        k: args.k,
        beta22: args.beta22,
        legacy_asymmetric: args.legacy_asymmetric,
    }
    .to_spec()?;
    let priors = args.priors.map(|(a, b)| PriorPair::new(a, b)).transpose()?;
    if args.inputs.len() > 1 && (args.roc_svg.is_some() || args.weight_svg.is_some()) {
        return Err(Error::Conflict("plot outputs need a single input file".into()));
    }
    let format = match args.format {
        Format::Json => ReportFormat::Json,
        Format::Table => ReportFormat::Table,
    };
    let configs: Vec<EvalConfig> = args
        .inputs
        .iter()
        .map(|input| EvalConfig {
            input: input.clone(),
            label_column: args.label_column.clone(),
            score_column: args.score_column.clone(),
            priors,
            weight,
            threshold: args.threshold,
            format,
            roc_svg: args.roc_svg.clone(),
            weight_svg: args.weight_svg.clone(),
        })
        .collect();

    if let [cfg] = configs.as_slice() {
        return Ok(serialize_report(&run_eval(cfg)?, format));
    }
    let reports: Vec<MetricReport> = std::thread::scope(|s| {
        let handles: Vec<_> = configs.iter().map(|c| s.spawn(move || run_eval(c))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation thread panicked"))
            .collect::<Result<_, _>>()
    })?;
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            let items: Vec<serde_json::Value> = configs
                .iter()
                .zip(&reports)
                .map(|(c, r)| {
                    let report: serde_json::Value =
                        serde_json::from_str(&serialize_report(r, ReportFormat::Json)).expect("valid json");
                    serde_json::json!({ "input": c.input.display().to_string(), "report": report })
                })
                .collect();
            out.push_str(&serde_json::to_string_pretty(&items).expect("serializable"));
            out.push('\n');
        }
        ReportFormat::Table => {
            for (c, r) in configs.iter().zip(&reports) {
                out.push_str(&format!("== {}\n", c.input.display()));
                out.push_str(&serialize_report(r, ReportFormat::Table));
            }
        }
    }
    Ok(out)
}

fn plot(args: PlotArgs) -> Result<String, Error> {
    let mut shapes = args.shapes.iter().map(|s| parse_shape(s)).collect::<Result<Vec<_>, _>>()?;
    if let Some(pi1) = args.label_swap {
        shapes.extend(label_swap_panel(pi1)?);
    }
    if let Some(c) = args.concentration {
        shapes.extend(concentration_panel(c, &args.k)?);
    }
    render_weight_density_svg(&shapes, &args.out)?;
    Ok(String::new())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a),
        Command::PlotWeights(a) => plot(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("hmeasure: {e}");
            ExitCode::from(e.kind().exit_code() as u8)
        }
    }
}
