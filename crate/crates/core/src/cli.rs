//! The `knot-zeros` command line: argument parsing, JSON/CSV/SVG output and
//! exit-code mapping. [`run`] is the whole program; the binary only forwards
//! `std::env::args` and the process streams.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

use crate::asymptotics::{self, AsymptoticsError, LocusPoint, Window};
use crate::graph::{self, Family, GraphKind, Multigraph, SignedMultigraph};
use crate::jones;
use crate::poly::{BivarPoly, QuarterLaurent};
use crate::tutte;
use crate::verify::{self, Suite, DEFAULT_SEED};

type C = Complex64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK: i32 = 3;
pub const EXIT_NONCONVERGENCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "knot-zeros",
    version,
    about = "Tutte and Jones polynomials of link families, their zeros and accumulation loci"
)]
pub struct Cli {
    /// Seed for every randomized sample (verify suite).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Link presentation data and associated graph of a family member.
    FamilyInfo(FamilyArgs),
    /// Tutte polynomial of a graph file or a named graph.
    Tutte(TutteArgs),
    /// Jones polynomial of a family member or a signed graph.
    Jones(JonesArgs),
    /// Zeros of a family's Jones polynomial as CSV.
    Zeros(ZerosArgs),
    /// Equimodular locus of a family's λ terms as CSV.
    Locus(LocusArgs),
    /// Potts partition function Z(G, q, v).
    Potts(PottsArgs),
    /// Chromatic polynomial P(G, q).
    Chromatic(GraphFileArgs),
    /// Run the reproduction suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Dc,
    Closed,
}

#[derive(Debug, Args)]
pub struct TutteArgs {
    /// Graph JSON: {"vertices": N, "edges": [[u, v], ...]}.
    #[arg(long, conflicts_with_all = ["kind", "n"])]
    pub graph: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind, requires = "n")]
    pub kind: Option<GraphKind>,
    #[arg(long, requires = "kind")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "dc")]
    pub method: Method,
    /// Run every applicable method and require equality.
    #[arg(long)]
    pub check_all: bool,
}

#[derive(Debug, Args)]
pub struct JonesArgs {
    #[arg(long, value_parser = parse_family, requires = "n", conflicts_with = "graph")]
    pub family: Option<Family>,
    #[arg(long, requires = "family")]
    pub n: Option<usize>,
    /// Signed graph JSON with a "signs" array of +1/-1.
    #[arg(long, requires = "writhe")]
    pub graph: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub writhe: Option<i64>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// CSV output file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// SVG scatter plot.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub overlay_unit_circle: bool,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub plot: PlotArgs,
}

#[derive(Debug, Args)]
pub struct LocusArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Radial window 1/rmax <= |t| <= rmax.
    #[arg(long, conflicts_with = "window")]
    pub rmax: Option<f64>,
    /// Rectangular window re_min,re_max,im_min,im_max.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Option<Window>,
    #[arg(long, default_value_t = asymptotics::DEFAULT_RESOLUTION)]
    pub resolution: usize,
    /// Trace the λ system as functions of s = 1/t.
    #[arg(long)]
    pub mirrored: bool,
    #[command(flatten)]
    pub plot: PlotArgs,
}

#[derive(Debug, Args)]
pub struct GraphFileArgs {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct PottsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// `re` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub q: C,
    /// `re` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub v: C,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "quick")]
    pub suite: Suite,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<GraphKind, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

pub fn parse_complex(s: &str) -> Result<C, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("`{p}`: {e}"));
    match parts.as_slice() {
        [re] => Ok(C::new(num(re)?, 0.0)),
        [re, im] => Ok(C::new(num(re)?, num(im)?)),
        _ => Err(format!("expected `re` or `re,im`, got `{s}`")),
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        &[re_min, re_max, im_min, im_max] if re_min < re_max && im_min < im_max => Ok(Window::Rect {
            re_min,
            re_max,
            im_min,
            im_max,
        }),
        _ => Err(format!(
            "expected re_min,re_max,im_min,im_max with min < max, got `{s}`"
        )),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
    #[error("{0}")]
    NonConvergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Check(_) => EXIT_CHECK,
            CliError::NonConvergence(_) => EXIT_NONCONVERGENCE,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<AsymptoticsError> for CliError {
    fn from(e: AsymptoticsError) -> Self {
        match e {
            AsymptoticsError::NonConvergence { .. } => CliError::NonConvergence(e.to_string()),
            other => usage(other),
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::FamilyInfo(a) => emit_json(out, &family_info(a.family, a.n)?),
        Command::Tutte(a) => cmd_tutte(a, out),
        Command::Jones(a) => cmd_jones(a, out),
        Command::Zeros(a) => cmd_zeros(a, out),
        Command::Locus(a) => cmd_locus(a, out),
        Command::Potts(a) => cmd_potts(a, out),
        Command::Chromatic(a) => cmd_chromatic(a, out),
        Command::Verify(a) => cmd_verify(a.suite, cli.seed, out),
    }
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<i32, CliError> {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    writeln!(out, "{text}").map_err(usage)?;
    Ok(EXIT_OK)
}

fn graph_json(g: &Multigraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("graph JSON is valid")
}

fn complex_json(z: C) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn family_info(family: Family, n: usize) -> Result<Value, CliError> {
    let p = graph::link_presentation(family, n).map_err(usage)?;
    Ok(json!({
        "family": family.to_string(),
        "n": n,
        "graph_kind": family.graph_kind().to_string(),
        "writhe": p.writhe,
        "n_dark": p.n_dark,
        "n_light": p.n_light,
        "crossings": p.crossings,
        "n_components": p.n_components,
        "graph": graph_json(&p.graph),
    }))
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Multigraph, CliError> {
    Multigraph::from_json(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn tutte_json(method: &str, t: &BivarPoly) -> Value {
    json!({ "method": method, "tutte": t.to_json_value(), "pretty": t.to_string() })
}

fn cmd_tutte(a: &TutteArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (g, kind) = match (&a.graph, a.kind, a.n) {
        (Some(path), _, _) => (read_graph(path)?, None),
        (None, Some(kind), Some(n)) => (graph::build_graph(kind, n).map_err(usage)?, Some((kind, n))),
        _ => return Err(usage("give --graph FILE or --kind KIND --n N")),
    };
    let brute = || tutte::tutte_bruteforce(&g).map_err(usage);
    let closed = || match kind {
        Some((k, n)) => tutte::tutte_family_closed(k, n).map_err(usage),
        None => Err(usage("--method closed needs --kind and --n")),
    };
    if a.check_all {
        let mut results = vec![("dc", tutte::tutte_dc(&g))];
        if g.edge_count() <= tutte::ENUMERATION_EDGE_LIMIT {
            results.push(("brute", brute()?));
        }
        if let Some((k, n)) = kind {
            match tutte::tutte_family_closed(k, n) {
                Ok(t) => results.push(("closed", t)),
                Err(tutte::TutteError::NoClosedForm(_)) => {}
                Err(e) => return Err(usage(e)),
            }
        }
        let reference = &results[0].1;
        if let Some((m, t)) = results.iter().find(|(_, t)| t != reference) {
            return Err(CliError::Check(format!(
                "methods disagree:\n  dc: {reference}\n  {m}: {t}"
            )));
        }
        let methods: Vec<&str> = results.iter().map(|(m, _)| *m).collect();
        let mut v = tutte_json("dc", reference);
        v["agreeing_methods"] = json!(methods);
        return emit_json(out, &v);
    }
    let (name, t) = match a.method {
        Method::Brute => ("brute", brute()?),
        Method::Dc => ("dc", tutte::tutte_dc(&g)),
        Method::Closed => ("closed", closed()?),
    };
    emit_json(out, &tutte_json(name, &t))
}

fn jones_json(v: &QuarterLaurent) -> Value {
    json!({ "jones": v.to_json_value(), "pretty": v.to_string() })
}

fn cmd_jones(a: &JonesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if let (Some(path), Some(w)) = (&a.graph, a.writhe) {
        let sg = SignedMultigraph::from_json(&read_text(path)?).map_err(usage)?;
        return match jones::jones_nonalternating(&sg, w) {
            Ok(v) => emit_json(out, &jones_json(&v)),
            Err(e @ jones::JonesError::LinesDisagree { .. }) => Err(CliError::Check(e.to_string())),
            Err(e) => Err(usage(e)),
        };
    }
    let (family, n) = match (a.family, a.n) {
        (Some(f), Some(n)) => (f, n),
        _ => return Err(usage("give --family F --n N or --graph FILE --writhe W")),
    };
    let p = graph::link_presentation(family, n).map_err(usage)?;
    let v = jones::jones_alternating(&p).map_err(usage)?;
    let closed = jones::jones_family_closed(family, n).map_err(usage)?;
    let r = jones::structural_facts(&p, &v).map_err(usage)?;
    let mut value = jones_json(&v);
    value["family"] = json!(family.to_string());
    value["n"] = json!(n);
    value["structural"] = json!({
        "degree_span": r.degree_span,
        "crossings": r.crossings,
        "span_ok": r.span_ok(),
        "leading_sign": r.leading_sign,
        "expected_leading_sign": r.expected_leading_sign,
        "leading_sign_ok": r.leading_sign_ok(),
        "special_value": complex_json(r.special_value),
        "expected_special_value": r.expected_special_value,
        "special_value_ok": r.special_value_ok(),
        "residues_ok": r.residues_ok,
    });
    emit_json(out, &value)?;
    if closed != v {
        return Err(CliError::Check(format!(
            "closed form {closed} differs from Tutte route {v}"
        )));
    }
    match r.violations().first() {
        Some(first) => Err(CliError::Check(format!("structural check failed: {first}"))),
        None => Ok(EXIT_OK),
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

pub fn zeros_csv(zs: &[C]) -> String {
    let mut s = String::from("re,im\n");
    for z in zs {
        let _ = writeln!(s, "{},{}", z.re, z.im);
    }
    s
}

/// Locus rows; `j,k` are the one-based indices of the tied λ terms.
pub fn locus_csv(points: &[LocusPoint]) -> String {
    let mut s = String::from("re,im,j,k\n");
    for p in points {
        let _ = writeln!(s, "{},{},{},{}", p.re, p.im, p.tied_pair.0 + 1, p.tied_pair.1 + 1);
    }
    s
}

fn cmd_zeros(a: &ZerosArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let zs = asymptotics::jones_zeros(a.family, a.n)?;
    write_output(a.plot.out.as_deref(), &zeros_csv(&zs), out)?;
    if let Some(svg) = &a.plot.svg {
        let doc = render_svg(
            &format!("zeros of V for {}_{}", a.family, a.n),
            &zs,
            &[],
            a.plot.overlay_unit_circle,
        );
        write_output(Some(svg), &doc, out)?;
    }
    Ok(EXIT_OK)
}

fn cmd_locus(a: &LocusArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let window = match (a.rmax, a.window) {
        (Some(r), _) if r > 1.0 => Window::Radial { r_max: r },
        (Some(r), _) => return Err(usage(format!("--rmax must exceed 1, got {r}"))),
        (None, Some(w)) => w,
        (None, None) => Window::default_for(a.family),
    };
    let mut sys = asymptotics::lambda_system(a.family);
    if a.mirrored {
        sys = sys.mirrored();
    }
    let points = asymptotics::trace_system(&sys, window, a.resolution)?;
    write_output(a.plot.out.as_deref(), &locus_csv(&points), out)?;
    if let Some(svg) = &a.plot.svg {
        let ts: Vec<C> = points.iter().map(LocusPoint::t).collect();
        let marks = if a.mirrored {
            Vec::new()
        } else {
            asymptotics::accumulation_annotations(a.family)
        };
        let doc = render_svg(
            &format!("locus for family {}", a.family),
            &ts,
            &marks,
            a.plot.overlay_unit_circle,
        );
        write_output(Some(svg), &doc, out)?;
    }
    Ok(EXIT_OK)
}

fn cmd_potts(a: &PottsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.graph)?;
    let t = tutte::tutte_dc(&g);
    let via_tutte = if a.v.norm() == 0.0 {
        None
    } else {
        Some(tutte::potts_via_tutte_poly(&g, &t, a.q, a.v).map_err(usage)?)
    };
    let direct = match tutte::potts_direct(&g, a.q, a.v) {
        Ok(z) => Some(z),
        Err(tutte::TutteError::TooManyEdges { .. }) => None,
        Err(e) => return Err(usage(e)),
    };
    let z = direct
        .or(via_tutte)
        .expect("v = 0 implies a small enough graph or an error above");
    let mut value = json!({
        "q": complex_json(a.q),
        "v": complex_json(a.v),
        "z": complex_json(z),
        "direct": direct.map(complex_json),
        "via_tutte": via_tutte.map(complex_json),
    });
    if let (Some(d), Some(t)) = (direct, via_tutte) {
        let rel = (d - t).norm() / d.norm().max(t.norm()).max(f64::MIN_POSITIVE);
        value["relative_disagreement"] = json!(rel);
        emit_json(out, &value)?;
        if rel > verify::tol::POTTS_RELATIVE {
            return Err(CliError::Check(format!("cluster sum {d} and Tutte route {t} disagree")));
        }
        return Ok(EXIT_OK);
    }
    emit_json(out, &value)
}

fn cmd_chromatic(a: &GraphFileArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.graph)?;
    let p = tutte::chromatic(&g);
    let degree = p.degree().unwrap_or(0);
    let coefficients: Vec<String> = (0..=degree).map(|k| p.coeff(k).to_string()).collect();
    emit_json(
        out,
        &json!({
            "chromatic": p.display_var("q").to_string(),
            "coefficients": coefficients,
        }),
    )
}

fn cmd_verify(suite: Suite, seed: u64, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut failed = Vec::new();
    for (id, check) in verify::CRITERIA {
        let report = check(suite, seed);
        write!(out, "{report}").map_err(usage)?;
        if !report.passed() {
            failed.push(id.to_string());
        }
    }
    if failed.is_empty() {
        writeln!(out, "all criteria pass").map_err(usage)?;
        Ok(EXIT_OK)
    } else {
        Err(CliError::Check(format!("criteria {} fail", failed.join(", "))))
    }
}

/// Self-contained SVG scatter plot, auto-fitted with a 5% margin.
pub fn render_svg(title: &str, points: &[C], marks: &[C], unit_circle: bool) -> String {
    const SIZE: f64 = 640.0;
    let mut all: Vec<C> = points.iter().chain(marks).copied().collect();
    if unit_circle {
        all.extend([C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(0.0, 1.0), C::new(0.0, -1.0)]);
    }
    let (mut x0, mut x1, mut y0, mut y1) = all.iter().fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(a, b, c, d), z| (a.min(z.re), b.max(z.re), c.min(z.im), d.max(z.im)),
    );
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = 0.05 * span;
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let half = span / 2.0 + margin;
    let scale = SIZE / (2.0 * half);
    let px = |z: C| ((z.re - (cx - half)) * scale, ((cy + half) - z.im) * scale);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", title.replace('&', "&amp;").replace('<', "&lt;"));
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (ox, oy) = px(C::new(0.0, 0.0));
    let _ = writeln!(
        s,
        r##"<g stroke="#bbbbbb" stroke-width="1"><line x1="0" y1="{oy:.2}" x2="{SIZE}" y2="{oy:.2}"/><line x1="{ox:.2}" y1="0" x2="{ox:.2}" y2="{SIZE}"/></g>"##
    );
    if unit_circle {
        let _ = writeln!(
            s,
            r##"<circle cx="{ox:.2}" cy="{oy:.2}" r="{:.2}" fill="none" stroke="#3366cc" stroke-width="1" stroke-dasharray="4 3"/>"##,
            scale
        );
    }
    let _ = writeln!(s, r##"<g fill="#111111">"##);
    for &z in points {
        let (x, y) = px(z);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1.6"/>"#);
    }
    let _ = writeln!(s, "</g>");
    if !marks.is_empty() {
        let _ = writeln!(s, r##"<g stroke="#cc2222" stroke-width="2">"##);
        for &z in marks {
            let (x, y) = px(z);
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                x - 5.0,
                y - 5.0,
                x + 5.0,
                y + 5.0,
                x - 5.0,
                y + 5.0,
                x + 5.0,
                y - 5.0
            );
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
