use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;
use xyz_spectra::algebra::{
    laplacian, matrix_tree_count, symmetric_eigenvalues, Spectrum, DEFAULT_EIGEN_TOL,
};
use xyz_spectra::formulas::{
    eval_trees, export_json, predict_spectrum, registry, FormulaError, Params, SeriesOp,
};
use xyz_spectra::par::map_ordered;
use xyz_spectra::transform::TransformError;
use xyz_spectra::verify::{
    corpus_graph, run_corpus, run_corpus_on, verify_code_with, verify_series, BaseData,
    SeriesError, SuiteResult, VerificationReport,
};
use xyz_spectra::{
    as_regular, xyz_transform, Execution, GeneratorSpec, Graph, GraphError, RegularGraph, XyzCode,
};

use crate::format::{clusters, csv_field, sci, Format};
use crate::{Common, GraphInput};

pub struct Context {
    pub verbose: u8,
}

pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_passed(passed: bool) -> Self {
        if passed {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Exit code 2.
    #[error("{0}")]
    Domain(String),
    /// Exit code 3.
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::NotRegular { .. }
            | GraphError::DegreeZero
            | GraphError::Empty
            | GraphError::SizeLimitExceeded { .. } => CliError::Domain(e.to_string()),
            GraphError::InvalidParameters(_)
            | GraphError::SelfLoop(_)
            | GraphError::DuplicateEdge(..)
            | GraphError::VertexOutOfRange { .. }
            | GraphError::Parse { .. } => CliError::Input(e.to_string()),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        match e {
            TransformError::InvalidCode(_) => CliError::Input(e.to_string()),
            TransformError::DegreeMismatch { .. } => CliError::Domain(e.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Parse(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::Formula(e) => e.into(),
            SeriesError::Graph(e) => CliError::Domain(e.to_string()),
        }
    }
}

struct Loaded {
    id: String,
    graph: RegularGraph,
}

fn load(input: &GraphInput) -> Result<Loaded, CliError> {
    let (id, graph) = match (&input.generator, &input.input) {
        (Some(spec), _) => {
            let spec: GeneratorSpec = spec.parse()?;
            (spec.short_name(), spec.generate()?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let id = path
                .file_stem()
                .map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned());
            (id, Graph::parse_edge_list(&text)?)
        }
        (None, None) => return Err(CliError::Input("one of --gen or --in is required".into())),
    };
    Ok(Loaded {
        id,
        graph: as_regular(graph)?,
    })
}

fn parse_code(s: &str) -> Result<XyzCode, CliError> {
    Ok(s.trim().parse::<XyzCode>()?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Input(format!("stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payloads serialize");
    s.push('\n');
    s
}

fn spectrum_of(g: &Graph) -> Result<Spectrum, CliError> {
    symmetric_eigenvalues(&laplacian(g), DEFAULT_EIGEN_TOL)
        .map_err(|e| CliError::Domain(e.to_string()))
}

fn params(g: &RegularGraph) -> Params {
    Params::new(g.n(), g.m(), g.degree())
}

#[derive(Serialize)]
struct TransformPayload<'a> {
    base: &'a str,
    code: XyzCode,
    n: usize,
    m: usize,
    graph: &'a Graph,
}

pub fn transform(
    _ctx: &Context,
    input: &GraphInput,
    code: &str,
    common: &Common,
) -> Result<Outcome, CliError> {
    let loaded = load(input)?;
    let code = parse_code(code)?;
    let built = xyz_transform(&loaded.graph, code);
    let text = match common.format {
        Format::Pretty => built.to_edge_list(),
        Format::Json => to_json(&TransformPayload {
            base: &loaded.id,
            code,
            n: built.vertex_count(),
            m: built.edge_count(),
            graph: &built,
        }),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for &(u, v) in built.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            s
        }
    };
    emit(common.out.as_deref(), &text)?;
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct SpectrumPayload<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    r: usize,
    code: Option<XyzCode>,
    predicted: Option<&'a [f64]>,
    direct: Option<&'a [f64]>,
    max_abs_dev: Option<f64>,
    tolerance: Option<f64>,
    passed: Option<bool>,
}

pub fn spectrum(
    ctx: &Context,
    input: &GraphInput,
    code: Option<&str>,
    check: bool,
    tol: f64,
    common: &Common,
) -> Result<Outcome, CliError> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let code = code.map(parse_code).transpose()?;
    let (predicted, direct) = match code {
        Some(code) => {
            let base = spectrum_of(g.graph())?;
            let predicted = predict_spectrum(registry(code), &params(g), &base)?;
            if ctx.verbose > 0 && !predicted.cancelled.is_empty() {
                eprintln!("cancelled roots: {:?}", predicted.cancelled);
            }
            let direct = if check {
                Some(spectrum_of(&xyz_transform(g, code))?)
            } else {
                None
            };
            (Some(predicted.spectrum()), direct)
        }
        None => (None, Some(spectrum_of(g.graph())?)),
    };
    let compared = predicted.as_ref().zip(direct.as_ref());
    let max_abs_dev = compared.and_then(|(p, d)| p.max_abs_deviation(d));
    let passed = compared.map(|_| max_abs_dev.is_some_and(|d| d <= tol));

    let text = match common.format {
        Format::Pretty => {
            let mut s = String::new();
            let _ = write!(
                s,
                "{} (n={}, m={}, r={})",
                loaded.id,
                g.n(),
                g.m(),
                g.degree()
            );
            if let Some(code) = code {
                let _ = write!(s, " code {code}");
            }
            s.push('\n');
            if let Some(p) = &predicted {
                let _ = writeln!(s, "predicted: {}", clusters(p));
            }
            if let Some(d) = &direct {
                let _ = writeln!(s, "direct:    {}", clusters(d));
            }
            if let Some(passed) = passed {
                let dev = max_abs_dev.map_or_else(|| "undefined (lengths differ)".into(), sci);
                let verdict = if passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "max deviation: {dev} (tolerance {}) {verdict}", sci(tol));
            }
            s
        }
        Format::Json => to_json(&SpectrumPayload {
            graph: &loaded.id,
            n: g.n(),
            m: g.m(),
            r: g.degree(),
            code,
            predicted: predicted.as_ref().map(Spectrum::values),
            direct: direct.as_ref().map(Spectrum::values),
            max_abs_dev,
            tolerance: passed.map(|_| tol),
            passed,
        }),
        Format::Csv => {
            let mut s = String::from("index,predicted,direct\n");
            let len = predicted
                .as_ref()
                .or(direct.as_ref())
                .map_or(0, Spectrum::len);
            let cell = |sp: &Option<Spectrum>, i: usize| {
                sp.as_ref()
                    .and_then(|sp| sp.values().get(i))
                    .map(|v| v.to_string())
                    .unwrap_or_default()
            };
            for i in 0..len {
                let _ = writeln!(s, "{},{},{}", i + 1, cell(&predicted, i), cell(&direct, i));
            }
            s
        }
    };
    emit(common.out.as_deref(), &text)?;
    Ok(Outcome::from_passed(passed != Some(false)))
}

#[derive(Serialize)]
struct TreesPayload<'a> {
    graph: &'a str,
    code: XyzCode,
    formula: Option<String>,
    matrix_tree: String,
    #[serde(rename = "match")]
    matched: bool,
    error: Option<String>,
}

pub fn trees(
    _ctx: &Context,
    input: &GraphInput,
    code: &str,
    common: &Common,
) -> Result<Outcome, CliError> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let code = parse_code(code)?;
    let base = BaseData::new(g).map_err(CliError::Domain)?;
    let formula = eval_trees(registry(code), &base.charpoly, &base.params);
    let matrix_tree = matrix_tree_count(&xyz_transform(g, code));
    let matched = formula.as_ref().ok() == Some(&matrix_tree);
    let verdict = if matched { "MATCH" } else { "MISMATCH" };
    let formula_text = match &formula {
        Ok(v) => v.to_string(),
        Err(e) => format!("error ({e})"),
    };
    let text = match common.format {
        Format::Pretty => format!(
            "{} {code}: {formula_text} / {matrix_tree} {verdict}\n",
            loaded.id
        ),
        Format::Json => to_json(&TreesPayload {
            graph: &loaded.id,
            code,
            formula: formula.as_ref().ok().map(ToString::to_string),
            matrix_tree: matrix_tree.to_string(),
            matched,
            error: formula.as_ref().err().map(ToString::to_string),
        }),
        Format::Csv => format!(
            "graph,code,formula,matrix_tree,match\n{},{code},{},{matrix_tree},{matched}\n",
            csv_field(&loaded.id),
            csv_field(&formula_text)
        ),
    };
    emit(common.out.as_deref(), &text)?;
    Ok(Outcome::from_passed(matched))
}

#[derive(Serialize)]
struct TableRow {
    predicted: Option<Vec<f64>>,
    #[serde(flatten)]
    report: VerificationReport,
}

pub fn table(
    ctx: &Context,
    input: &GraphInput,
    codes: Option<&str>,
    tol: f64,
    common: &Common,
) -> Result<Outcome, CliError> {
    let loaded = load(input)?;
    let g = &loaded.graph;
    let codes: Vec<XyzCode> = match codes {
        Some(list) => list
            .split(',')
            .filter(|c| !c.trim().is_empty())
            .map(parse_code)
            .collect::<Result<_, _>>()?,
        None => XyzCode::all(),
    };
    let base = BaseData::new(g).map_err(CliError::Domain)?;
    let rows: Vec<TableRow> = map_ordered(&codes, Execution::Parallel, |&code| TableRow {
        predicted: predict_spectrum(registry(code), &base.params, &base.spectrum)
            .ok()
            .map(|p| p.spectrum().values().to_vec()),
        report: verify_code_with(g, &base, &loaded.id, code, tol),
    });
    if ctx.verbose > 0 {
        for row in rows.iter().filter(|r| !r.report.notes.is_empty()) {
            eprintln!(
                "{} {}: {}",
                loaded.id,
                row.report.code,
                row.report.notes.join("; ")
            );
        }
    }
    let trees = |r: &VerificationReport| {
        r.formula_trees
            .as_ref()
            .map_or_else(|| "-".into(), ToString::to_string)
    };
    let spectrum = |row: &TableRow| {
        row.predicted.as_ref().map_or_else(
            || "-".into(),
            |v| clusters(&Spectrum::from_values(v.clone())),
        )
    };
    let text = match common.format {
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} (n={}, m={}, r={})",
                loaded.id,
                g.n(),
                g.m(),
                g.degree()
            );
            let _ = writeln!(
                s,
                "{:<4} {:<6} {:<18} {:<24} spectrum",
                "code", "status", "max deviation", "trees"
            );
            for row in &rows {
                let r = &row.report;
                let dev = r.spectrum_max_abs_dev.map_or_else(|| "-".into(), sci);
                let status = if r.passed { "ok" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{:<4} {:<6} {:<18} {:<24} {}",
                    row.report.code,
                    status,
                    dev,
                    trees(r),
                    spectrum(row)
                );
            }
            let passed = rows.iter().filter(|r| r.report.passed).count();
            let _ = writeln!(s, "{passed}/{} rows verified", rows.len());
            s
        }
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from(
                "code,spectrum,trees,matrix_tree,max_abs_dev,exact_identity,tree_match,passed\n",
            );
            for row in &rows {
                let r = &row.report;
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    row.report.code,
                    csv_field(&spectrum(row)),
                    trees(r),
                    r.matrix_tree_trees
                        .as_ref()
                        .map_or_else(String::new, ToString::to_string),
                    r.spectrum_max_abs_dev
                        .map_or_else(String::new, |d| d.to_string()),
                    r.exact_identity,
                    r.tree_formula_match,
                    r.passed
                );
            }
            s
        }
    };
    emit(common.out.as_deref(), &text)?;
    Ok(Outcome::from_passed(rows.iter().all(|r| r.report.passed)))
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum DetailLine<'a> {
    Cell(&'a VerificationReport),
    Suite(&'a SuiteResult),
}

pub fn verify(
    ctx: &Context,
    graphs: &[String],
    series: Option<&str>,
    input: &GraphInput,
    tol: f64,
    sequential: bool,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    if let Some(series) = series {
        return verify_series_cmd(input, series, tol, out);
    }
    if input.generator.is_some() || input.input.is_some() {
        return Err(CliError::Input(
            "--gen/--in apply to --series; use --graphs for corpus runs".into(),
        ));
    }
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let run = if graphs.is_empty() {
        run_corpus(tol, exec)
    } else {
        let specs = graphs
            .iter()
            .map(|s| corpus_graph(s))
            .collect::<Result<Vec<_>, _>>()?;
        run_corpus_on(&specs, tol, exec)
    };
    let mut summary = String::new();
    for r in run.reports.iter().filter(|r| !r.passed || ctx.verbose > 1) {
        let dev = r.spectrum_max_abs_dev.map_or_else(|| "-".into(), sci);
        let verdict = if r.passed { "ok" } else { "FAIL" };
        let _ = writeln!(
            summary,
            "{verdict} {} {} deviation {dev} {}",
            r.graph,
            r.code,
            r.notes.join("; ")
        );
    }
    for s in run.suites.iter().filter(|s| !s.passed || ctx.verbose > 1) {
        let verdict = if s.passed { "ok" } else { "FAIL" };
        let _ = writeln!(
            summary,
            "{verdict} suite {} {} {}",
            s.suite,
            s.subject,
            s.detail.as_deref().unwrap_or("")
        );
    }
    let suites_passed = run.suites.iter().filter(|s| s.passed).count();
    let _ = writeln!(
        summary,
        "{}/{} code-graph cells pass",
        run.passed_cells(),
        run.reports.len()
    );
    let _ = writeln!(summary, "{suites_passed}/{} suites pass", run.suites.len());
    emit(None, &summary)?;
    if let Some(path) = out {
        let mut lines = String::new();
        for r in &run.reports {
            lines
                .push_str(&serde_json::to_string(&DetailLine::Cell(r)).expect("reports serialize"));
            lines.push('\n');
        }
        for s in &run.suites {
            lines
                .push_str(&serde_json::to_string(&DetailLine::Suite(s)).expect("suites serialize"));
            lines.push('\n');
        }
        emit(Some(path), &lines)?;
    }
    Ok(Outcome::from_passed(run.all_passed()))
}

fn verify_series_cmd(
    input: &GraphInput,
    series: &str,
    tol: f64,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let loaded = load(input)?;
    let ops = SeriesOp::parse_list(series)?;
    let check = verify_series(&loaded.graph, &ops, tol)?;
    let ops_text = ops
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let dev = check
        .max_abs_dev
        .map_or_else(|| "undefined (lengths differ)".into(), sci);
    let verdict = if check.passed { "PASS" } else { "FAIL" };
    let text = format!(
        "series [{ops_text}] on {}: n={}, r={}\npredicted: {}\ndirect:    {}\nmax deviation: {dev} (tolerance {}) {verdict}\n",
        loaded.id,
        check.predicted.n,
        check.predicted.r,
        clusters(&check.predicted.spectrum),
        clusters(&check.direct),
        sci(tol)
    );
    emit(None, &text)?;
    if let Some(path) = out {
        let mut line = serde_json::to_string(&check).expect("series checks serialize");
        line.push('\n');
        emit(Some(path), &line)?;
    }
    Ok(Outcome::from_passed(check.passed))
}

pub fn catalog(out: Option<&Path>) -> Result<Outcome, CliError> {
    let mut json = export_json()?;
    json.push('\n');
    emit(out, &json)?;
    Ok(Outcome::Pass)
}
