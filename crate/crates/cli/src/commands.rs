use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use setinc_core::automorphisms::{search_automorphisms, GroupReport};
use setinc_core::combinatorics::intersection_number;
use setinc_core::graphs::export_graph;
use setinc_core::{
    aut_group, build_inclusion_graph, build_line_graph, check_scheme, compare_spectra, eigensolver_oracle,
    induced_action, is_automorphism, orbit_count, spectrum_inclusion, spectrum_line_inclusion, BasePermutation, Error,
    ExportFormat, GraphParams, OrbitTarget, SimpleGraph,
};

use crate::args::{GraphFormat, ReportFormat, SpectrumFormat, Target, Triple};
use crate::CliError;

/// Whether a checking command found what it was checking for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Validates and canonicalizes, announcing any complementation on stderr.
fn resolve(t: Triple) -> Result<GraphParams, CliError> {
    let params = GraphParams::new(t.n, t.k, t.l)?;
    let (canonical, complemented) = params.canonicalize();
    if complemented {
        eprintln!("note: {params} is isomorphic to {canonical} by complementation; using {canonical}");
    }
    Ok(canonical)
}

/// Refuses to materialize graphs larger than `cap` vertices.
fn guard(what: &'static str, vertices: &BigUint, cap: usize) -> Result<usize, CliError> {
    match usize::try_from(vertices) {
        Ok(v) if v <= cap => Ok(v),
        Ok(v) => Err(Error::CapExceeded { what, size: v, cap }.into()),
        Err(_) => Err(Error::CapExceeded { what, size: usize::MAX, cap }.into()),
    }
}

fn graph_vertices(params: GraphParams, line: bool) -> BigUint {
    if line {
        params.edge_count()
    } else {
        params.n1() + params.n2()
    }
}

/// Builds `G(n,k,l)` or its line graph, with vertex labels.
fn build(params: GraphParams, line: bool, cap: usize) -> Result<(SimpleGraph, Vec<String>), CliError> {
    guard(if line { "line graph" } else { "graph" }, &graph_vertices(params, line), cap)?;
    let g = build_inclusion_graph(params)?;
    let labels = g.labels();
    if !line {
        return Ok((g.graph().clone(), labels));
    }
    let edges = g.graph().edges();
    let labels = edges.iter().map(|&(u, v)| format!("{}-{}", labels[u], labels[v])).collect();
    Ok((build_line_graph(g.graph()), labels))
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::runtime(e.to_string()))?;
    emit(&format!("{text}\n"))
}

pub fn spectrum(t: Triple, line: bool, format: SpectrumFormat) -> Result<Verdict, CliError> {
    let params = resolve(t)?;
    let spectrum = if line { spectrum_line_inclusion(&params)? } else { spectrum_inclusion(&params)? };
    match format {
        SpectrumFormat::Table => emit(&spectrum.to_table())?,
        SpectrumFormat::Csv => emit(&spectrum.to_csv())?,
        SpectrumFormat::Json => emit_json(&json!({
            "graph": params.to_string(),
            "line": line,
            "vertices": graph_vertices(params, line).to_string(),
            "spectrum": spectrum,
        }))?,
    }
    Ok(Verdict::Pass)
}

pub fn verify(
    t: Triple,
    line: bool,
    tol: f64,
    max_vertices: usize,
    format: ReportFormat,
    perturb: Option<f64>,
) -> Result<Verdict, CliError> {
    let params = resolve(t)?;
    let what = if line { "line graph" } else { "graph" };
    let vertices = guard(what, &graph_vertices(params, line), max_vertices)?;
    let exact = if line { spectrum_line_inclusion(&params)? } else { spectrum_inclusion(&params)? };
    let (graph, _) = build(params, line, max_vertices)?;
    let mut numeric = eigensolver_oracle(&graph.adjacency_matrix(), max_vertices)?;
    if let (Some(eps), Some(first)) = (perturb, numeric.first_mut()) {
        *first += eps;
    }
    let report = compare_spectra(&exact, &numeric, tol)?;
    let name = if line { format!("L({params})") } else { params.to_string() };
    match format {
        ReportFormat::Text => emit(&format!(
            "graph          {name}\nvertices       {vertices}\nmax deviation  {:e}\nthreshold      {:e}\nresult         {}\n",
            report.max_deviation,
            report.threshold,
            if report.passed { "PASS" } else { "FAIL" }
        ))?,
        ReportFormat::Json => emit_json(&json!({
            "graph": name,
            "vertices": vertices,
            "max_deviation": report.max_deviation,
            "threshold": report.threshold,
            "passed": report.passed,
        }))?,
    }
    Ok(Verdict::from_bool(report.passed))
}

#[derive(Serialize)]
struct AutJson {
    #[serde(flatten)]
    report: GroupReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_force_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sampled_automorphisms: Option<usize>,
}

#[allow(clippy::too_many_arguments)]
pub fn aut(
    t: Triple,
    brute_force: bool,
    cap: usize,
    samples: usize,
    seed: u64,
    max_vertices: usize,
    format: ReportFormat,
) -> Result<Verdict, CliError> {
    let params = resolve(t)?;
    let group = aut_group(params)?;
    let mut verdict = Verdict::Pass;

    let oracle = if brute_force {
        let (graph, _) = build(params, false, cap)?;
        let order = search_automorphisms(&graph, cap)?.order;
        verdict = Verdict::from_bool(order == group.order);
        Some(order)
    } else {
        None
    };

    let sampled = if samples > 0 {
        let (graph, _) = build(params, false, max_vertices)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut good = 0;
        for _ in 0..samples {
            let g = BasePermutation::random(params.n(), &mut rng);
            if is_automorphism(&graph, &induced_action(&g, params)?)? {
                good += 1;
            }
        }
        if good != samples {
            verdict = Verdict::Fail;
        }
        Some(good)
    } else {
        None
    };

    let agree = oracle.as_ref().map(|o| *o == group.order);
    match format {
        ReportFormat::Text => {
            let gens: Vec<String> = group.generators.iter().map(|g| g.to_string()).collect();
            let mut text = format!(
                "graph       {params}\nkind        {}\norder       {}\ngenerators  {}\n",
                group.kind,
                group.order,
                gens.join(", ")
            );
            match &oracle {
                Some(o) => {
                    let _ = write!(text, "oracle      {o}\nagree       {}\n", agree == Some(true));
                }
                None => text.push_str("oracle      null\n"),
            }
            if let Some(good) = sampled {
                let _ = writeln!(text, "sampled     {good}/{samples} random σ_g are automorphisms (seed {seed})");
            }
            emit(&text)?;
        }
        ReportFormat::Json => emit_json(&AutJson {
            report: group.report(agree),
            brute_force_order: oracle.map(|o| o.to_string()),
            sampled_automorphisms: sampled,
        })?,
    }
    Ok(verdict)
}

pub fn orbits(t: Triple, on: Target, max_vertices: usize, format: ReportFormat) -> Result<Verdict, CliError> {
    let params = resolve(t)?;
    let (graph, _) = build(params, false, max_vertices)?;
    let target = match on {
        Target::Vertices => OrbitTarget::Vertices,
        Target::Edges => OrbitTarget::Edges,
        Target::Arcs => OrbitTarget::Arcs,
    };
    let generators = aut_group(params)?.generator_actions()?;
    let count = orbit_count(&graph, &generators, target)?;
    match format {
        ReportFormat::Text => emit(&format!("graph   {params}\non      {target}\norbits  {count}\n"))?,
        ReportFormat::Json => emit_json(&json!({
            "graph": params.to_string(),
            "on": target.to_string(),
            "orbits": count,
        }))?,
    }
    Ok(Verdict::Pass)
}

pub fn export(
    t: Triple,
    line: bool,
    format: GraphFormat,
    out: Option<&Path>,
    max_vertices: usize,
) -> Result<Verdict, CliError> {
    let params = resolve(t)?;
    let (graph, labels) = build(params, line, max_vertices)?;
    let format = match format {
        GraphFormat::Edgelist => ExportFormat::EdgeList,
        GraphFormat::Graph6 => ExportFormat::Graph6,
        GraphFormat::Dot => ExportFormat::Dot,
    };
    let bytes = export_graph(&graph, format, Some(&labels))?;
    match out {
        Some(path) => {
            fs::write(path, &bytes)?;
            eprintln!("wrote {} vertices and {} edges to {}", graph.vertex_count(), graph.edge_count(), path.display());
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
        }
    }
    Ok(Verdict::Pass)
}

pub fn scheme(n: u32, k: u32, check: bool, max_vertices: usize, format: ReportFormat) -> Result<Verdict, CliError> {
    if check {
        let r = check_scheme(n, k, max_vertices)?;
        let failure = r.first_failure.map(|(i, j)| format!("A_{i}·A_{j}"));
        match format {
            ReportFormat::Text => {
                let mut text = format!(
                    "scheme          J({n},{k})\nproducts        {}\ncommutative     {}\nsum is J        {}\nA_{k} is I        {}\n",
                    r.products_match, r.commutative, r.sums_to_all_ones, r.top_is_identity
                );
                if let Some(f) = &failure {
                    let _ = writeln!(text, "first failure   {f}");
                }
                let _ = writeln!(text, "result          {}", if r.passed() { "PASS" } else { "FAIL" });
                emit(&text)?;
            }
            ReportFormat::Json => emit_json(&json!({
                "n": n,
                "k": k,
                "products_match": r.products_match,
                "commutative": r.commutative,
                "sums_to_all_ones": r.sums_to_all_ones,
                "top_is_identity": r.top_is_identity,
                "first_failure": failure,
                "passed": r.passed(),
            }))?,
        }
        return Ok(Verdict::from_bool(r.passed()));
    }

    if 2 * k > n {
        return Err(Error::OutOfRange(format!("scheme requires k <= n/2, got n={n}, k={k}")).into());
    }
    let (ni, ki) = (i64::from(n), i64::from(k));
    let mut rows = Vec::new();
    for i in 0..=ki {
        for j in 0..=ki {
            if i == j {
                continue;
            }
            for s in 0..=ki {
                rows.push((i, j, s, intersection_number(ni, ki, i, j, s)?));
            }
        }
    }
    match format {
        ReportFormat::Text => {
            let mut text = String::from("i  j  s  p\n");
            for (i, j, s, p) in &rows {
                let _ = writeln!(text, "{i}  {j}  {s}  {p}");
            }
            emit(&text)?;
        }
        ReportFormat::Json => emit_json(
            &rows.iter().map(|(i, j, s, p)| json!({"i": i, "j": j, "s": s, "p": p.to_string()})).collect::<Vec<_>>(),
        )?,
    }
    Ok(Verdict::Pass)
}
