//! Checks every closed form against the explicitly built transformation:
//! predicted vs. Jacobi spectra, formula vs. Bareiss determinants at
//! `m + n + 1` points, formula vs. Matrix-Tree counts, plus the identity
//! suites on incidence and all-ones matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::algebra::{
    adjacency, char_poly_exact, degree_matrix, det_exact, incidence, laplacian, matrix_tree_count,
    symmetric_eigenvalues, trees_from_char_poly, IntMatrix, IntPoly, Spectrum, DEFAULT_EIGEN_TOL,
    MULTIPLICITY_GAP,
};
use crate::formulas::{
    apply_operation_series, eval_l_exact, eval_trees, fixed_eigenvalue_claims, predict_spectrum,
    registry, trees_line_graph, trees_subdivision, trees_zero_plus_plus, FormulaError, Params,
    SeriesOp, SeriesState,
};
use crate::graph::{as_regular, GeneratorSpec, Graph, GraphError, RegularGraph};
use crate::iso::is_isomorphic;
use crate::par::{map_ordered, Execution};
use crate::transform::{transform_degree_check, xyz_transform, Part, XyzCode};

pub const DEFAULT_TOL: f64 = 1e-8;
/// Largest transformation order `n + m` accepted by [`verify_code`].
pub const MAX_ORDER: usize = 64;

/// Generator specs of the standard corpus.
pub const CORPUS: [&str; 12] = [
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "cycle:8",
    "complete:4",
    "complete:5",
    "complete_bipartite:3:3",
    "petersen",
    "hypercube:3",
    "matching:6",
];

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub id: String,
    pub spec: GeneratorSpec,
    pub graph: RegularGraph,
}

pub fn corpus() -> Vec<CorpusGraph> {
    CORPUS
        .iter()
        .map(|s| corpus_graph(s).expect("corpus specs are valid"))
        .collect()
}

pub fn corpus_graph(spec: &str) -> Result<CorpusGraph, GraphError> {
    let spec: GeneratorSpec = spec.parse()?;
    Ok(CorpusGraph {
        id: spec.short_name(),
        graph: as_regular(spec.generate()?)?,
        spec,
    })
}

/// Everything about the base graph the closed forms consume.
#[derive(Debug, Clone)]
pub struct BaseData {
    pub params: Params,
    pub charpoly: IntPoly,
    pub spectrum: Spectrum,
    pub trees: BigInt,
}

impl BaseData {
    pub fn new(g: &RegularGraph) -> Result<Self, String> {
        let l = laplacian(g.graph());
        let charpoly = char_poly_exact(&l).map_err(|e| e.to_string())?;
        let trees = trees_from_char_poly(&charpoly).map_err(|e| e.to_string())?;
        Ok(BaseData {
            params: Params::new(g.n(), g.m(), g.degree()),
            spectrum: symmetric_eigenvalues(&l, DEFAULT_EIGEN_TOL).map_err(|e| e.to_string())?,
            charpoly,
            trees,
        })
    }
}

fn as_string<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub code: XyzCode,
    /// `None` when either spectrum could not be produced.
    pub spectrum_max_abs_dev: Option<f64>,
    pub exact_identity: bool,
    pub tree_formula_match: bool,
    #[serde(serialize_with = "as_string")]
    pub formula_trees: Option<BigInt>,
    #[serde(serialize_with = "as_string")]
    pub matrix_tree_trees: Option<BigInt>,
    pub tolerance: f64,
    pub passed: bool,
    pub notes: Vec<String>,
}

/// Integer evaluation points `s + 2, …, s + m + n + 2`.
pub fn identity_points(p: &Params) -> impl Iterator<Item = BigInt> {
    let s = p.s();
    (0..=s).map(move |k| BigInt::from(s + 2 + k))
}

pub fn verify_code(
    g: &RegularGraph,
    graph_id: &str,
    code: XyzCode,
    tol: f64,
) -> VerificationReport {
    match BaseData::new(g) {
        Ok(base) => verify_code_with(g, &base, graph_id, code, tol),
        Err(e) => VerificationReport {
            graph: graph_id.to_string(),
            code,
            spectrum_max_abs_dev: None,
            exact_identity: false,
            tree_formula_match: false,
            formula_trees: None,
            matrix_tree_trees: None,
            tolerance: tol,
            passed: false,
            notes: vec![format!("base graph: {e}")],
        },
    }
}

/// [`verify_code`] with the base-graph data precomputed.
pub fn verify_code_with(
    g: &RegularGraph,
    base: &BaseData,
    graph_id: &str,
    code: XyzCode,
    tol: f64,
) -> VerificationReport {
    let mut notes = Vec::new();
    let p = &base.params;
    let entry = registry(code);
    if g.n() + g.m() > MAX_ORDER {
        notes.push(format!("order {} exceeds {MAX_ORDER}", g.n() + g.m()));
    }
    if let Err(e) = transform_degree_check(g, code) {
        notes.push(e.to_string());
    }
    let built = xyz_transform(g, code);
    let l = laplacian(&built);

    let direct = symmetric_eigenvalues(&l, DEFAULT_EIGEN_TOL)
        .map_err(|e| notes.push(format!("direct spectrum: {e}")));
    let predicted = predict_spectrum(entry, p, &base.spectrum)
        .map_err(|e| notes.push(format!("predicted spectrum: {e}")));
    let spectrum_max_abs_dev = match (direct, predicted) {
        (Ok(d), Ok(pr)) => {
            let dev = d.max_abs_deviation(&pr.spectrum());
            if dev.is_none() {
                notes.push("predicted and direct spectra differ in length".into());
            }
            dev
        }
        _ => None,
    };

    let mut exact_identity = true;
    for x in identity_points(p) {
        let lambda0 = BigRational::from_integer(x.clone());
        let formula = eval_l_exact(entry, &base.charpoly, p, &lambda0);
        let direct = det_exact(&l.shifted_negation(&x));
        match (formula, direct) {
            (Ok(f), Ok(d)) if f == BigRational::from_integer(d.clone()) => {}
            (Ok(f), Ok(d)) => {
                notes.push(format!("L({x}): formula {f}, determinant {d}"));
                exact_identity = false;
                break;
            }
            (f, d) => {
                notes.push(format!("L({x}): formula {f:?}, determinant {d:?}"));
                exact_identity = false;
                break;
            }
        }
    }

    let matrix_tree = matrix_tree_count(&built);
    let formula_trees = eval_trees(entry, &base.charpoly, p)
        .map_err(|e| notes.push(format!("trees: {e}")))
        .ok();
    let tree_formula_match = formula_trees.as_ref() == Some(&matrix_tree);
    if !tree_formula_match {
        notes.push(format!(
            "trees: formula {formula_trees:?}, Matrix-Tree {matrix_tree}"
        ));
    }

    let passed =
        spectrum_max_abs_dev.is_some_and(|d| d <= tol) && exact_identity && tree_formula_match;
    VerificationReport {
        graph: graph_id.to_string(),
        code,
        spectrum_max_abs_dev,
        exact_identity,
        tree_formula_match,
        formula_trees,
        matrix_tree_trees: Some(matrix_tree),
        tolerance: tol,
        passed,
        notes,
    }
}

fn spectrum_of(g: &Graph) -> Spectrum {
    symmetric_eigenvalues(&laplacian(g), DEFAULT_EIGEN_TOL).expect("Laplacians are symmetric")
}

/// Largest `|λ_i(G) + λ_{n−i}(G^c) − n|` over `i = 1, …, n − 1`.
pub fn reciprocity_deviation(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let a = spectrum_of(g);
    let b = spectrum_of(&g.complement());
    (1..n)
        .map(|i| (a.lambda(i) + b.lambda(n - i) - n as f64).abs())
        .fold(0.0, f64::max)
}

pub fn verify_reciprocity(g: &Graph, tol: f64) -> bool {
    reciprocity_deviation(g) <= tol
}

/// The complement of the built `G^{xyz}` is the built `G^{x̄ȳz̄}`, and their
/// spectra pair up to `s`. Returns the pairing deviation, or `None` when the
/// adjacency relations differ.
pub fn transform_reciprocity_deviation(g: &RegularGraph, code: XyzCode) -> Option<f64> {
    let t = xyz_transform(g, code);
    let tc = xyz_transform(g, code.bar());
    if !t.complement().same_adjacency(&tc) {
        return None;
    }
    let s = t.vertex_count();
    let a = spectrum_of(&t);
    let b = spectrum_of(&tc);
    Some(
        (1..s)
            .map(|i| (a.lambda(i) + b.lambda(s - i) - s as f64).abs())
            .fold(0.0, f64::max),
    )
}

pub fn verify_transform_reciprocity(g: &RegularGraph, code: XyzCode, tol: f64) -> bool {
    transform_reciprocity_deviation(g, code).is_some_and(|d| d <= tol)
}

/// The eight codes over `{+, −}`.
pub fn sign_codes() -> Vec<XyzCode> {
    XyzCode::all()
        .into_iter()
        .filter(|c| {
            [c.x, c.y, c.z]
                .iter()
                .all(|p| matches!(p, Part::Plus | Part::Minus))
        })
        .collect()
}

/// `C_n^{xyz} ≅ C_n^{yxz}` for every code in `codes`.
pub fn verify_cycle_isomorphism_for(n: usize, codes: &[XyzCode]) -> Result<bool, GraphError> {
    let cycle = as_regular(GeneratorSpec::Cycle(n).generate()?)?;
    for &code in codes {
        if code.x == code.y {
            continue;
        }
        let a = xyz_transform(&cycle, code);
        let b = xyz_transform(&cycle, code.swap_xy());
        if !is_isomorphic(&a, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_cycle_isomorphism(n: usize) -> Result<bool, GraphError> {
    verify_cycle_isomorphism_for(n, &XyzCode::all())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub passed: bool,
    /// The first identity that failed.
    pub failed: Option<String>,
}

/// Incidence identities `QQᵀ = D + A`, `QᵀQ = 2I + A(G^l)` and the six
/// all-ones identities, for `k ∈ {1, n, m}`, as exact integer equalities.
pub fn verify_lemma_suite(g: &RegularGraph) -> LemmaOutcome {
    let graph = g.graph();
    let (n, m, r) = (g.n(), g.m(), BigInt::from(g.degree()));
    let two = BigInt::from(2);
    let q = incidence(graph);
    let qt = q.transpose();
    let a = adjacency(graph);
    let mut checks: Vec<(String, IntMatrix, IntMatrix)> = vec![
        ("QQ^T = D + A".into(), &q * &qt, &degree_matrix(graph) + &a),
        (
            "Q^TQ = 2I + A(G^l)".into(),
            &qt * &q,
            &IntMatrix::identity(m).scale(&two) + &adjacency(&graph.line_graph()),
        ),
    ];
    for k in [1, n, m] {
        let j = IntMatrix::ones;
        checks.push((
            format!("Q^T J_(n,{k}) = 2 J_(m,{k})"),
            &qt * &j(n, k),
            j(m, k).scale(&two),
        ));
        checks.push((
            format!("Q J_(m,{k}) = r J_(n,{k})"),
            &q * &j(m, k),
            j(n, k).scale(&r),
        ));
        checks.push((
            format!("J_({k},m) Q^T = r J_({k},n)"),
            &j(k, m) * &qt,
            j(k, n).scale(&r),
        ));
        checks.push((
            format!("J_({k},n) Q = 2 J_({k},m)"),
            &j(k, n) * &q,
            j(k, m).scale(&two),
        ));
        checks.push((
            format!("J_({k},n) A = r J_({k},n)"),
            &j(k, n) * &a,
            j(k, n).scale(&r),
        ));
        checks.push((
            format!("A J_(n,{k}) = r J_(n,{k})"),
            &a * &j(n, k),
            j(n, k).scale(&r),
        ));
    }
    let failed = checks
        .into_iter()
        .find(|(_, lhs, rhs)| lhs != rhs)
        .map(|(name, _, _)| name);
    LemmaOutcome {
        passed: failed.is_none(),
        failed,
    }
}

/// For `P(x, y) = x² − 3xy + 2y + 1`, the matrix `P(A, J_nn)` has
/// eigenvalues `P(r, n)` and `P(r − λ_i, 0)`, `i < n`. Returns the largest
/// deviation.
pub fn eigenvalue_lemma_deviation(g: &RegularGraph) -> f64 {
    let graph = g.graph();
    let n = g.n();
    let r = g.degree() as f64;
    let a = adjacency(graph);
    let j = IntMatrix::ones(n, n);
    let p = &(&(&(&a * &a) - &(&a * &j).scale(&BigInt::from(3))) + &j.scale(&BigInt::from(2)))
        + &IntMatrix::identity(n);
    let sp = symmetric_eigenvalues(&p, DEFAULT_EIGEN_TOL)
        .expect("A and J commute, so P(A, J) is symmetric");
    let base = spectrum_of(graph);
    let poly = |x: f64, y: f64| x * x - 3.0 * x * y + 2.0 * y + 1.0;
    let mut expected: Vec<f64> = (1..n).map(|i| poly(r - base.lambda(i), 0.0)).collect();
    expected.push(poly(r, n as f64));
    sp.max_abs_deviation(&Spectrum::from_values(expected))
        .unwrap_or(f64::INFINITY)
}

/// `L(λ, G^l) = (λ − 2r)^{m−n} L(λ, G)`, compared as exact polynomials.
pub fn verify_line_graph_identity(g: &RegularGraph) -> bool {
    let lhs = char_poly_exact(&laplacian(&g.graph().line_graph())).expect("square");
    let rhs = char_poly_exact(&laplacian(g.graph())).expect("square");
    let shift = IntPoly::linear(2 * g.degree() as i64);
    let (n, m) = (g.n(), g.m());
    if m >= n {
        lhs == &shift.pow((m - n) as u32) * &rhs
    } else {
        rhs.div_exact(&shift.pow((n - m) as u32))
            .is_ok_and(|q| q == lhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeIdentityOutcome {
    pub subdivision: bool,
    pub zero_plus_plus: bool,
    pub line_graph: bool,
    /// `t(G^{+0+}) = 3^{n−1} t(G^{00+})`.
    pub ratio: bool,
}

impl TreeIdentityOutcome {
    pub fn passed(&self) -> bool {
        self.subdivision && self.zero_plus_plus && self.line_graph && self.ratio
    }
}

/// The stand-alone tree-count identities, each against Matrix-Tree on the
/// built graph.
pub fn verify_tree_identities(g: &RegularGraph) -> TreeIdentityOutcome {
    let base = BaseData::new(g).expect("corpus base data");
    let p = &base.params;
    let code = |s: &str| s.parse::<XyzCode>().unwrap();
    let oracle = |c: &str| matrix_tree_count(&xyz_transform(g, code(c)));
    let factor = BigInt::from(3).pow((g.n() - 1) as u32);
    let formula_ratio = match (
        eval_trees(registry(code("+0+")), &base.charpoly, p),
        eval_trees(registry(code("00+")), &base.charpoly, p),
    ) {
        (Ok(a), Ok(b)) => a == &factor * b,
        _ => false,
    };
    let ratio = formula_ratio && oracle("+0+") == &factor * oracle("00+");
    TreeIdentityOutcome {
        subdivision: trees_subdivision(p, &base.trees).is_ok_and(|t| t == oracle("00+")),
        zero_plus_plus: trees_zero_plus_plus(p, &base.trees).is_ok_and(|t| t == oracle("0++")),
        line_graph: trees_line_graph(p, &base.trees)
            .is_ok_and(|t| t == matrix_tree_count(&g.graph().line_graph())),
        ratio,
    }
}

/// Every fixed eigenvalue claimed for `code` appears in the spectrum of
/// the built graph at least as often as claimed.
pub fn verify_fixed_multiplicities(g: &RegularGraph, code: XyzCode) -> Result<(), String> {
    let claims = fixed_eigenvalue_claims(code, &Params::new(g.n(), g.m(), g.degree()));
    if claims.is_empty() {
        return Ok(());
    }
    let sp = spectrum_of(&xyz_transform(g, code));
    for c in claims {
        let got = sp.multiplicity_of(c.value as f64, MULTIPLICITY_GAP);
        if (got as i64) < c.min_multiplicity {
            return Err(format!(
                "{code}: {} appears {got} times, expected ≥ {}",
                c.value, c.min_multiplicity
            ));
        }
    }
    Ok(())
}

/// Builds the graph a series of operations produces.
pub fn compose_series(g: &RegularGraph, ops: &[SeriesOp]) -> Result<RegularGraph, GraphError> {
    let mut current = g.clone();
    for &op in ops {
        let next = match op.code() {
            Some(code) => xyz_transform(&current, code),
            None if op == SeriesOp::Complement => current.graph().complement(),
            None => current.graph().line_graph(),
        };
        current = as_regular(next)?;
    }
    Ok(current)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesCheck {
    pub ops: Vec<SeriesOp>,
    pub predicted: SeriesState,
    pub direct: Spectrum,
    pub max_abs_dev: Option<f64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeriesError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Composer spectrum against the spectrum of the explicitly composed graph.
pub fn verify_series(
    g: &RegularGraph,
    ops: &[SeriesOp],
    tol: f64,
) -> Result<SeriesCheck, SeriesError> {
    let start = SeriesState {
        n: g.n(),
        r: g.degree(),
        spectrum: spectrum_of(g.graph()),
    };
    let predicted = apply_operation_series(start, ops)?;
    let composed = compose_series(g, ops)?;
    let direct = spectrum_of(composed.graph());
    let max_abs_dev = predicted.spectrum.max_abs_deviation(&direct);
    let passed = predicted.r == composed.degree() && max_abs_dev.is_some_and(|d| d <= tol);
    Ok(SeriesCheck {
        ops: ops.to_vec(),
        predicted,
        direct,
        max_abs_dev,
        passed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub subject: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusRun {
    /// In `(graph, code)` order.
    pub reports: Vec<VerificationReport>,
    pub suites: Vec<SuiteResult>,
}

impl CorpusRun {
    pub fn passed_cells(&self) -> usize {
        self.reports.iter().filter(|r| r.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed) && self.suites.iter().all(|s| s.passed)
    }
}

/// All 64 codes on one graph.
pub fn verify_graph(g: &CorpusGraph, tol: f64, exec: Execution) -> Vec<VerificationReport> {
    match BaseData::new(&g.graph) {
        Ok(base) => map_ordered(&XyzCode::all(), exec, |&code| {
            verify_code_with(&g.graph, &base, &g.id, code, tol)
        }),
        Err(_) => XyzCode::all()
            .into_iter()
            .map(|code| verify_code(&g.graph, &g.id, code, tol))
            .collect(),
    }
}

fn suite(suite: &str, subject: &str, passed: bool, detail: Option<String>) -> SuiteResult {
    SuiteResult {
        suite: suite.into(),
        subject: subject.into(),
        passed,
        detail,
    }
}

/// Per-graph identity suites: reciprocity on `G` and every transformation
/// pair, lemma identities, line-graph polynomial identity, tree identities.
pub fn graph_suites(g: &CorpusGraph, tol: f64) -> Vec<SuiteResult> {
    let mut out = Vec::new();
    let dev = reciprocity_deviation(g.graph.graph());
    out.push(suite(
        "reciprocity",
        &g.id,
        dev <= tol,
        Some(format!("max deviation {dev:e}")),
    ));
    let worst = XyzCode::all()
        .into_iter()
        .map(|c| (c, transform_reciprocity_deviation(&g.graph, c)))
        .max_by(|a, b| {
            a.1.unwrap_or(f64::INFINITY)
                .total_cmp(&b.1.unwrap_or(f64::INFINITY))
        })
        .expect("64 codes");
    out.push(suite(
        "transform-reciprocity",
        &g.id,
        worst.1.is_some_and(|d| d <= tol),
        Some(format!("worst code {}: {:?}", worst.0, worst.1)),
    ));
    let lemmas = verify_lemma_suite(&g.graph);
    out.push(suite("lemmas", &g.id, lemmas.passed, lemmas.failed));
    out.push(suite(
        "line-graph-identity",
        &g.id,
        verify_line_graph_identity(&g.graph),
        None,
    ));
    let fixed = XyzCode::all()
        .into_iter()
        .try_for_each(|c| verify_fixed_multiplicities(&g.graph, c));
    out.push(suite(
        "fixed-multiplicities",
        &g.id,
        fixed.is_ok(),
        fixed.err(),
    ));
    let trees = verify_tree_identities(&g.graph);
    out.push(suite(
        "tree-identities",
        &g.id,
        trees.passed(),
        Some(format!("{trees:?}")),
    ));
    out
}

/// Cycle isomorphism suite: all codes on `C4`, `C5`; sign codes on `C6`–`C8`.
pub fn isomorphism_suites(exec: Execution) -> Vec<SuiteResult> {
    let cases: Vec<(usize, bool)> = vec![(4, true), (5, true), (6, false), (7, false), (8, false)];
    map_ordered(&cases, exec, |&(n, full)| {
        let codes = if full { XyzCode::all() } else { sign_codes() };
        let outcome = verify_cycle_isomorphism_for(n, &codes);
        suite(
            "cycle-isomorphism",
            &format!("C{n} ({} codes)", codes.len()),
            outcome == Ok(true),
            outcome.err().map(|e| e.to_string()),
        )
    })
}

pub fn run_corpus_on(graphs: &[CorpusGraph], tol: f64, exec: Execution) -> CorpusRun {
    let cells: Vec<(usize, XyzCode)> = (0..graphs.len())
        .flat_map(|i| XyzCode::all().into_iter().map(move |c| (i, c)))
        .collect();
    let bases: Vec<Result<BaseData, String>> =
        map_ordered(graphs, exec, |g| BaseData::new(&g.graph));
    let reports = map_ordered(&cells, exec, |&(i, code)| match &bases[i] {
        Ok(base) => verify_code_with(&graphs[i].graph, base, &graphs[i].id, code, tol),
        Err(_) => verify_code(&graphs[i].graph, &graphs[i].id, code, tol),
    });
    let suites = map_ordered(graphs, exec, |g| graph_suites(g, tol))
        .into_iter()
        .flatten()
        .collect();
    CorpusRun { reports, suites }
}

/// The full standard run: 64 codes on each corpus graph, per-graph suites,
/// and the cycle isomorphism suite.
pub fn run_corpus(tol: f64, exec: Execution) -> CorpusRun {
    let mut run = run_corpus_on(&corpus(), tol, exec);
    run.suites.extend(isomorphism_suites(exec));
    run
}
