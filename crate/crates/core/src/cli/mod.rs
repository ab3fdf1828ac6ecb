//! Command-line front end: argument parsing, the subcommands and the
//! corpus runner.

pub mod corpus;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cremona::{
    extend_affine_automorphism, is_involution, make_map, conic_involution, strict_transform, CremonaMap, Elementary,
};
use crate::curvealg::{find_rational_singular_points, intersection_cycle, PlaneCurve, ProjPoint};
use crate::exactpoly::{parse_poly, MultiPoly};
use crate::fibergraph::{build_f0, complete_and_classify, AttachCase};
use crate::resolution::{classify_ams, genus_of, minimal_embedded_resolution, ResolutionError};
use corpus::{expand, Corpus, Params};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(crate::Error),
    #[error("{context}: {source}")]
    Compute {
        context: &'static str,
        source: crate::Error,
    },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            _ => 1,
        }
    }

    fn compute(context: &'static str) -> impl FnOnce(crate::Error) -> CliError {
        move |source| CliError::Compute { context, source }
    }
}

/// Parses polynomial text or a curve name after parameter substitution.
pub fn parse_poly_text(text: &str, params: &Params) -> Result<MultiPoly, CliError> {
    parse_poly(&expand(text, params)).map_err(|e| CliError::Parse(e.into()))
}

pub fn parse_curve(text: &str, params: &Params) -> Result<PlaneCurve, CliError> {
    PlaneCurve::new(parse_poly_text(text, params)?).map_err(|e| CliError::Parse(e.into()))
}

pub fn parse_case(s: &str) -> Result<AttachCase, CliError> {
    match s {
        "on" => Ok(AttachCase::QOnEnm1),
        "off" => Ok(AttachCase::QOffEnm1),
        _ => Err(CliError::Usage(format!("case must be `on` or `off`, got `{s}`"))),
    }
}

/// Map syntax: `h` (the conic involution at parameter `c`),
/// `triangular:<p(x)>` for the extension of `(x, y + p(x))`, or three forms
/// separated by `;`.
pub fn parse_map(spec: &str, params: &Params) -> Result<CremonaMap, CliError> {
    let spec = spec.trim();
    let map = if spec == "h" {
        conic_involution(&params.c)
    } else if let Some(p) = spec.strip_prefix("triangular:") {
        extend_affine_automorphism(&[Elementary::Triangular(parse_poly_text(p, params)?)])
    } else {
        let parts: Vec<&str> = spec.split(';').collect();
        let [p1, p2, p3] = parts[..] else {
            return Err(CliError::Usage(format!("map `{spec}` needs three forms separated by `;`")));
        };
        make_map(
            parse_poly_text(p1, params)?,
            parse_poly_text(p2, params)?,
            parse_poly_text(p3, params)?,
        )
    };
    map.map_err(|e| CliError::Parse(e.into()))
}

fn parse_point(s: &str) -> Result<ProjPoint, CliError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    ProjPoint::parse(t).ok_or_else(|| CliError::Usage(format!("bad point `{s}`, expected x,y,z")))
}

#[derive(Parser, Debug)]
#[command(name = "cuspcurve", version, about = "Exact analysis of cuspidal plane curves")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write Graphviz files into this directory.
    #[arg(long, global = true, value_name = "DIR")]
    pub dot: Option<PathBuf>,
    /// Parameter values substituted for a, b, c in curve text.
    #[arg(long, global = true, value_name = "a=<q>,b=<q>,c=<q>", default_value = "a=1,b=1,c=0")]
    pub params: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CaseArg {
    On,
    Off,
}

impl From<CaseArg> for AttachCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::On => AttachCase::QOnEnm1,
            CaseArg::Off => AttachCase::QOffEnm1,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Singular points, genus, resolution data and the cusp classification.
    Analyze {
        /// Curve equation or corpus name.
        curve: String,
        /// Only analyze this point, given as x,y,z.
        #[arg(long)]
        point: Option<String>,
    },
    /// Intersection cycle of two curves.
    Intersect { curve1: String, curve2: String },
    /// Minimal embedded resolution at a point.
    Resolve {
        curve: String,
        /// Defaults to the unique singular point.
        #[arg(long)]
        point: Option<String>,
    },
    /// Strict transform of a curve under a Cremona map.
    Transform {
        /// `h`, `triangular:<p(x)>` or `p1; p2; p3`.
        map: String,
        curve: String,
        /// Exceptional curves to divide out, separated by `;`.
        #[arg(long, default_value = "")]
        exceptional: String,
    },
    /// Completion of the fiber part of the pencil spanned by the strict transform.
    Fiber {
        curve: String,
        #[arg(long, value_enum)]
        case: CaseArg,
        /// Number of blowdowns; defaults to r(D) + (C')^2 - 10.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        point: Option<String>,
    },
    /// Checks every expectation of the corpus.
    VerifyCorpus {
        /// JSON corpus file; the built-in corpus by default.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Print the built-in corpus as JSON and exit.
        #[arg(long)]
        dump: bool,
    },
}

/// Text and JSON output of one command.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Set when expectations failed.
    pub failure: Option<String>,
}

fn write_dot(dir: &Path, name: &str, dot: &str) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join(format!("{name}.dot")), dot)?;
    Ok(())
}

fn point_or_unique(c: &PlaneCurve, point: Option<&str>) -> Result<ProjPoint, CliError> {
    if let Some(p) = point {
        return parse_point(p);
    }
    let sing = find_rational_singular_points(c).map_err(|e| CliError::compute("singular points")(e.into()))?;
    match sing.as_slice() {
        [(p, _)] => Ok(p.clone()),
        _ => Err(CliError::Usage(format!(
            "curve has {} singular points; choose one with --point",
            sing.len()
        ))),
    }
}

fn analyze(cli: &Cli, params: &Params, curve: &str, point: Option<&str>) -> Result<Output, CliError> {
    let c = parse_curve(curve, params)?;
    let sing = find_rational_singular_points(&c).map_err(|e| CliError::compute("singular points")(e.into()))?;
    let genus = genus_of(&c).map_err(|e| CliError::compute("genus")(e.into()))?;
    let mut text = format!("curve: {}\ndegree: {}\n", c.equation(), c.degree());
    let _ = writeln!(text, "smooth: {}", sing.is_empty());
    let mut resolutions = Vec::new();
    for (p, m) in &sing {
        if point.is_some_and(|q| parse_point(q).ok().as_ref() != Some(p)) {
            continue;
        }
        let _ = write!(text, "singular point {p}: multiplicity {m}");
        match minimal_embedded_resolution(&c, p) {
            Ok(r) => {
                let _ = writeln!(
                    text,
                    ", cusp, multiplicity sequence {:?}, delta {}, (C')^2 = {}",
                    r.multiplicity_sequence, r.delta, r.strict_self_intersection
                );
                if let Some(dir) = &cli.dot {
                    write_dot(dir, &format!("resolution_{}", resolutions.len()), &r.graph.to_dot("resolution"))?;
                }
                resolutions.push(serde_json::to_value(&r).unwrap());
            }
            Err(ResolutionError::NotUnibranch { .. }) => {
                let _ = writeln!(text, ", several branches");
            }
            Err(e) => return Err(CliError::compute("resolution")(e.into())),
        }
    }
    let _ = writeln!(text, "genus: {genus}");
    let ams = classify_ams(&c).map_err(|e| CliError::compute("classification")(e.into()))?;
    let _ = writeln!(text, "verdict: {}", serde_json::to_value(ams.verdict).unwrap().as_str().unwrap());
    if let Some(f) = ams.tangent_line_meets_only_cusp {
        let _ = writeln!(text, "tangent line at the cusp meets the curve only there: {f}");
    }
    let json = json!({
        "schema": 1,
        "curve": c.equation().to_string(),
        "degree": c.degree(),
        "smooth": sing.is_empty(),
        "singular_points": sing,
        "genus": genus,
        "resolutions": resolutions,
        "classification": ams,
    });
    Ok(Output { text, json, failure: None })
}

fn resolve(cli: &Cli, params: &Params, curve: &str, point: Option<&str>) -> Result<Output, CliError> {
    let c = parse_curve(curve, params)?;
    let p = point_or_unique(&c, point)?;
    let r = minimal_embedded_resolution(&c, &p).map_err(|e| CliError::compute("resolution")(e.into()))?;
    let mut text = format!("point {p}\n");
    for b in &r.records {
        let _ = writeln!(text, "blowup {}: multiplicity {}", b.step, b.multiplicity);
    }
    let _ = writeln!(text, "multiplicity sequence: {:?}", r.multiplicity_sequence);
    let _ = writeln!(text, "delta: {}, genus: {}", r.delta, r.genus);
    let _ = writeln!(text, "(C')^2 = {}, components of the total transform: {}", r.strict_self_intersection, r.components());
    text += &r.graph.to_dot("resolution");
    if let Some(dir) = &cli.dot {
        write_dot(dir, "resolution", &r.graph.to_dot("resolution"))?;
    }
    let mut json = serde_json::to_value(&r).unwrap();
    json["schema"] = json!(1);
    Ok(Output { text, json, failure: None })
}

fn intersect(params: &Params, c1: &str, c2: &str) -> Result<Output, CliError> {
    let (f, g) = (parse_curve(c1, params)?, parse_curve(c2, params)?);
    let cyc = intersection_cycle(&f, &g).map_err(|e| CliError::compute("intersection")(e.into()))?;
    let mut text = String::new();
    for (p, m) in &cyc.points {
        let _ = writeln!(text, "{p}: {m}");
    }
    let _ = writeln!(text, "unlocated: {}, bezout: {}", cyc.residual, cyc.bezout);
    let mut json = serde_json::to_value(&cyc).unwrap();
    json["schema"] = json!(1);
    Ok(Output { text, json, failure: None })
}

fn transform(params: &Params, map: &str, curve: &str, exceptional: &str) -> Result<Output, CliError> {
    let m = parse_map(map, params)?;
    let c = parse_curve(curve, params)?;
    let ex = exceptional
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_curve(s, params))
        .collect::<Result<Vec<_>, _>>()?;
    let st = strict_transform(&m, &c, &ex).map_err(|e| CliError::compute("strict transform")(e.into()))?;
    let involution = is_involution(&m);
    let mut text = format!("map: {m:?}\ninvolution: {involution}\n");
    if let Some(g) = m.reduced_by() {
        let _ = writeln!(text, "warning: divided out common factor {g}");
    }
    if st.squarefree_cleanup {
        text += "warning: removed a repeated factor from the strict transform\n";
    }
    let _ = writeln!(text, "removed exceptional powers: {:?}", st.removed);
    let _ = writeln!(text, "strict transform (degree {}): {}", st.curve.degree(), st.curve.equation());
    let json = json!({
        "schema": 1,
        "map": m,
        "involution": involution,
        "reduced_by": m.reduced_by().map(ToString::to_string),
        "strict_transform": st,
        "degree": st.curve.degree(),
    });
    Ok(Output { text, json, failure: None })
}

fn fiber(
    cli: &Cli,
    params: &Params,
    curve: &str,
    case: AttachCase,
    budget: Option<usize>,
    point: Option<&str>,
) -> Result<Output, CliError> {
    let c = parse_curve(curve, params)?;
    let p = point_or_unique(&c, point)?;
    let r = minimal_embedded_resolution(&c, &p).map_err(|e| CliError::compute("resolution")(e.into()))?;
    let f0 = build_f0(&r, case).map_err(|e| CliError::compute("fiber part")(e.into()))?;
    let budget = budget.unwrap_or(f0.expected_budget().max(0) as usize);
    let found = complete_and_classify(&f0, budget);
    let mut text = format!(
        "(C')^2 = {}, r(D) = {}, budget {budget}, F0 has {} components\n",
        f0.n,
        f0.r_d,
        f0.fiber_part.components()
    );
    if found.is_empty() {
        text += "no completion found\n";
    }
    for (i, comp) in found.iter().enumerate() {
        let _ = writeln!(
            text,
            "completion {i}: {} via attachments {:?}, contractions {:?}",
            comp.kodaira, comp.attachments, comp.contractions
        );
    }
    if let Some(dir) = &cli.dot {
        write_dot(dir, "f0", &f0.fiber_part.to_dot("F0"))?;
        for (i, comp) in found.iter().enumerate() {
            write_dot(dir, &format!("completion_{i}"), &comp.fiber.to_dot(&format!("completion_{i}")))?;
        }
    }
    let json = json!({
        "schema": 1,
        "case": case,
        "n": f0.n,
        "r_d": f0.r_d,
        "budget": budget,
        "f0": f0.fiber_part,
        "completions": found,
    });
    Ok(Output { text, json, failure: None })
}

fn verify_corpus(path: Option<&Path>, dump: bool) -> Result<Output, CliError> {
    if dump {
        let c = corpus::default_corpus();
        let json = serde_json::to_value(&c).unwrap();
        return Ok(Output { text: serde_json::to_string_pretty(&c).unwrap() + "\n", json, failure: None });
    }
    let corpus: Corpus = match path {
        Some(p) => {
            let data = std::fs::read_to_string(p)?;
            if data.trim().is_empty() {
                Corpus { schema: 1, entries: Vec::new() }
            } else {
                serde_json::from_str(&data).map_err(|e| CliError::Usage(format!("corpus {}: {e}", p.display())))?
            }
        }
        None => corpus::default_corpus(),
    };
    if corpus.schema != 1 {
        return Err(CliError::Usage(format!("unsupported corpus schema {}", corpus.schema)));
    }
    if corpus.entries.is_empty() {
        eprintln!("warning: corpus is empty, nothing to check");
    }
    let rep = report::evaluate(&corpus)?;
    let mut text = rep.to_text();
    for e in &rep.entries {
        let _ = writeln!(text, "time {}: {:.2?}", e.name, e.elapsed);
    }
    let failure = rep
        .first_failure()
        .map(|(e, c)| format!("entry `{}` failed: {} expected {} got {}", e.name, report::fact_name(&c.fact), c.expected, c.actual));
    Ok(Output { text, json: serde_json::to_value(&rep).unwrap(), failure })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let params = Params::parse(&cli.params).map_err(CliError::Usage)?;
    match &cli.command {
        Command::Analyze { curve, point } => analyze(cli, &params, curve, point.as_deref()),
        Command::Intersect { curve1, curve2 } => intersect(&params, curve1, curve2),
        Command::Resolve { curve, point } => resolve(cli, &params, curve, point.as_deref()),
        Command::Transform { map, curve, exceptional } => transform(&params, map, curve, exceptional),
        Command::Fiber { curve, case, budget, point } => {
            fiber(cli, &params, curve, (*case).into(), *budget, point.as_deref())
        }
        Command::VerifyCorpus { corpus, dump } => verify_corpus(corpus.as_deref(), *dump),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                print!("{}", out.text);
            }
            match out.failure {
                Some(f) => {
                    eprintln!("error: {f}");
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
