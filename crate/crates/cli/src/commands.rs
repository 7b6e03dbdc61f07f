//! Per-subcommand handlers: thin orchestration over the kernels, producing
//! the `results` object of each report.

#![allow(clippy::result_large_err)]

use std::path::Path;

use serde_json::{json, Map, Value};

use covercount::batch;
use covercount::cd4::{cd4_report, Cd4Report, Transversality, ValuationBound};
use covercount::covers::{
    chain_contribution, cover_coeff, embedded_contribution, forward_gw, invert_instanton,
    nodal_contribution, nodal_contribution_conjectural, MultiplicityVector,
};
use covercount::cycle_bound::{verify_cycle_bound, BoundStatus, CycleBoundCertificate};
use covercount::diagram::{DiagramKind, MarkedDiagram};
use covercount::orbits::{
    discriminant_report, length_of, orbit_decomposition, verify_marked_coeff_invariant,
    InvariantCheck,
};
use covercount::roots::{Root, RootSystem};

use crate::error::CliError;
use crate::ingest;
use crate::report::{degree_table, ReportDraft};

pub struct Failure {
    pub error: CliError,
    pub partial: Option<Value>,
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(error: E) -> Self {
        Failure {
            error: error.into(),
            partial: None,
        }
    }
}

pub type CommandOutcome = Result<Value, Failure>;

fn parse_kind(s: &str) -> Result<DiagramKind, CliError> {
    Ok(s.parse::<DiagramKind>()?)
}

/// `--marked` accepts Bourbaki vertex numbers (comma-separated), `center`,
/// or (for E8 only) `adjacent`.
fn resolve_marked(kind: DiagramKind, spec: &str) -> Result<Vec<usize>, CliError> {
    match spec {
        "center" => kind.central_vertex().map(|v| vec![v]).ok_or_else(|| {
            CliError::Parse {
                location: "--marked".into(),
                message: format!("`center` is not defined for {kind}; it names the marked vertex of A1, D4, E6, E7 or E8"),
            }
        }),
        "adjacent" => kind
            .long_branch_adjacent_vertex()
            .map(|v| vec![v])
            .ok_or_else(|| CliError::Parse {
                location: "--marked".into(),
                message: format!("`adjacent` is only defined for E8, not {kind}"),
            }),
        _ => spec
            .split(',')
            .map(|part| {
                part.trim().parse::<usize>().map_err(|_| CliError::Parse {
                    location: "--marked".into(),
                    message: format!(
                        "`{part}` is not a vertex number; expected integers, `center` or `adjacent`"
                    ),
                })
            })
            .collect(),
    }
}

fn build_diagram(kind: &str, marked: &str) -> Result<MarkedDiagram, CliError> {
    let kind = parse_kind(kind)?;
    let marked = resolve_marked(kind, marked)?;
    Ok(MarkedDiagram::new(kind, marked)?)
}

fn root_json(root: &Root) -> Value {
    Value::Array(root.coeffs().iter().map(|&a| json!(a)).collect())
}

fn marked_json(diagram: &MarkedDiagram) -> Value {
    Value::Array(diagram.marked().iter().map(|&v| json!(v)).collect())
}

pub fn roots(kind: &str) -> CommandOutcome {
    let kind = parse_kind(kind)?;
    let rs = RootSystem::new(MarkedDiagram::new(kind, [1])?);
    Ok(json!({
        "type": kind.to_string(),
        "rank": kind.rank(),
        "edges": kind.edges().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "count": rs.positive_roots().len(),
        "positive_roots": rs.positive_roots().iter().map(root_json).collect::<Vec<_>>(),
    }))
}

pub fn orbits(kind: &str, marked: &str) -> CommandOutcome {
    let diagram = build_diagram(kind, marked)?;
    let rs = RootSystem::new(diagram.clone());
    let decomposition = orbit_decomposition(&rs);
    let orbits: Vec<Value> = decomposition
        .orbits()
        .iter()
        .map(|orbit| {
            json!({
                "marked_coeff": orbit.marked_coeff,
                "size": orbit.size(),
                "members": orbit.members.iter().map(root_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "type": diagram.kind().to_string(),
        "marked": marked_json(&diagram),
        "orbit_count": orbits.len(),
        "orbits": orbits,
    }))
}

fn invariant_case_json(diagram: &MarkedDiagram, check: &InvariantCheck) -> Value {
    let mut case = Map::new();
    case.insert("type".into(), json!(diagram.kind().to_string()));
    case.insert("marked".into(), marked_json(diagram));
    case.insert("verified".into(), json!(check.is_verified()));
    if let InvariantCheck::Counterexample(a, b) = check {
        case.insert("counterexample".into(), json!([root_json(a), root_json(b)]));
    }
    Value::Object(case)
}

pub fn verify_alpha1(all: bool, kind: Option<&str>, marked: Option<&str>) -> CommandOutcome {
    let cases: Vec<(MarkedDiagram, InvariantCheck)> = if all {
        batch::invariant_checks_all()
    } else {
        let diagram = build_diagram(kind.expect("clap"), marked.expect("clap"))?;
        let check = verify_marked_coeff_invariant(&diagram)?;
        vec![(diagram, check)]
    };
    let all_verified = cases.iter().all(|(_, check)| check.is_verified());
    Ok(json!({
        "cases": cases
            .iter()
            .map(|(diagram, check)| invariant_case_json(diagram, check))
            .collect::<Vec<_>>(),
        "all_verified": all_verified,
    }))
}

pub fn length(kind: &str, marked: &str) -> CommandOutcome {
    let diagram = build_diagram(kind, marked)?;
    let length = length_of(&diagram)?;
    Ok(json!({
        "type": diagram.kind().to_string(),
        "marked": marked_json(&diagram),
        "length": length,
    }))
}

pub fn discriminant(kind: &str, marked: &str) -> CommandOutcome {
    let diagram = build_diagram(kind, marked)?;
    let report = discriminant_report(&diagram)?;
    let mut curve = Map::new();
    for (value, pairs) in &report.curve_components {
        curve.insert(value.to_string(), json!(pairs));
    }
    Ok(json!({
        "type": diagram.kind().to_string(),
        "marked": marked_json(&diagram),
        "length": report.length,
        "curve_components": Value::Object(curve),
        "singular_components": report.singular_components,
    }))
}

fn bound_status_json(status: &BoundStatus) -> Value {
    match status {
        BoundStatus::Pass => json!("pass"),
        BoundStatus::InconclusiveBeyondCap { .. } => json!("inconclusive-beyond-cap"),
        BoundStatus::Fail { .. } => json!("fail"),
    }
}

fn cycle_case_json(certificate: &CycleBoundCertificate, include_roots: bool) -> Value {
    let status = if certificate.all_pass() {
        "pass"
    } else if certificate
        .results
        .iter()
        .any(|r| matches!(r.status, BoundStatus::Fail { .. }))
    {
        "fail"
    } else {
        "inconclusive-beyond-cap"
    };
    let mut case = Map::new();
    case.insert(
        "type".into(),
        json!(certificate.diagram.kind().to_string()),
    );
    case.insert("marked".into(), marked_json(&certificate.diagram));
    case.insert("order".into(), json!(certificate.order));
    case.insert("roots_checked".into(), json!(certificate.results.len()));
    case.insert("status".into(), json!(status));
    if include_roots {
        let roots: Vec<Value> = certificate
            .results
            .iter()
            .map(|result| {
                let mut entry = Map::new();
                entry.insert("root".into(), root_json(&result.root));
                entry.insert("lower_bound".into(), json!(result.lower_bound));
                entry.insert("status".into(), bound_status_json(&result.status));
                match &result.status {
                    BoundStatus::InconclusiveBeyondCap { cap } => {
                        entry.insert("cap".into(), json!(cap));
                    }
                    BoundStatus::Fail { counterexample } => {
                        entry.insert("counterexample".into(), json!(counterexample));
                    }
                    BoundStatus::Pass => {}
                }
                Value::Object(entry)
            })
            .collect();
        case.insert("roots".into(), Value::Array(roots));
    }
    Value::Object(case)
}

pub fn cycle_bound(
    all: bool,
    kind: Option<&str>,
    marked: Option<&str>,
    order: Option<i64>,
) -> CommandOutcome {
    let (certificates, include_roots) = if all {
        (batch::cycle_bound_certificates_all(), false)
    } else {
        let diagram = build_diagram(kind.expect("clap"), marked.expect("clap"))?;
        let certificate = verify_cycle_bound(&diagram, order.expect("clap"))?;
        (vec![certificate], true)
    };
    let all_pass = certificates.iter().all(CycleBoundCertificate::all_pass);
    Ok(json!({
        "cases": certificates
            .iter()
            .map(|c| cycle_case_json(c, include_roots))
            .collect::<Vec<_>>(),
        "all_pass": all_pass,
    }))
}

pub fn contrib_fp(genus: u32, degree: u64) -> CommandOutcome {
    Ok(json!({ "value": cover_coeff(genus, degree).to_string() }))
}

pub fn contrib_embedded(genus: u32, degree: u64, k: &[u64]) -> CommandOutcome {
    let multiplicities = MultiplicityVector::new(k.to_vec())?;
    Ok(json!({
        "value": embedded_contribution(genus, degree, &multiplicities).to_string(),
    }))
}

pub fn contrib_nodal(
    draft: &mut ReportDraft,
    degree: u64,
    genus: Option<u32>,
    conjectural: bool,
) -> CommandOutcome {
    let value = if conjectural {
        let genus = genus.unwrap_or(0);
        draft.note(
            "conjectural: the genus-g one-nodal formula is a conjecture, not a theorem",
        );
        nodal_contribution_conjectural(genus, degree)
    } else {
        nodal_contribution(degree)
    };
    Ok(json!({ "value": value.to_string() }))
}

pub fn contrib_chain(genus: u32, degrees: &[u64]) -> CommandOutcome {
    Ok(json!({
        "value": chain_contribution(genus, degrees).to_string(),
    }))
}

pub fn forward(input: &Path, max_degree: u64) -> CommandOutcome {
    let instantons = ingest::ingest_instanton_table(input)?;
    let gw = forward_gw(&instantons, max_degree)?;
    Ok(json!({
        "max_degree": max_degree,
        "invariants": degree_table(gw.entries()),
    }))
}

pub fn invert(input: &Path, require_integral: bool) -> CommandOutcome {
    let gw = ingest::ingest_gw_table(input)?;
    let instantons = invert_instanton(&gw);
    let mut integral = Map::new();
    for (degree, _) in instantons.entries() {
        integral.insert(
            degree.to_string(),
            json!(instantons.is_integral(degree).expect("dense")),
        );
    }
    let non_integral = instantons.non_integral_degrees();
    let results = json!({
        "instantons": degree_table(instantons.entries()),
        "integral": Value::Object(integral),
        "all_integral": instantons.all_integral(),
        "non_integral_degrees": non_integral,
    });
    if require_integral && !instantons.all_integral() {
        return Err(Failure {
            error: CliError::NonIntegral {
                degrees: non_integral,
            },
            partial: Some(results),
        });
    }
    Ok(results)
}

fn valuation_bound_json(bound: ValuationBound) -> Value {
    match bound {
        ValuationBound::Exact(v) => json!(v),
        ValuationBound::AtLeast(floor) => json!({ "at_least": floor }),
    }
}

fn transversality_json(t: &Transversality) -> Value {
    json!({
        "valuation": valuation_bound_json(t.valuation),
        "required": t.required,
        "transverse": t.transverse,
    })
}

fn cd4_results_json(report: &Cd4Report) -> Value {
    json!({
        "truncation": report.truncation,
        "k2": report.k2,
        "k1": valuation_bound_json(report.k1),
        "conic_value": report.conic_value.to_string(),
        "generic": report.generic,
        "smooth": report.smooth,
        "transversality": transversality_json(&report.transversality),
        "genus": report.genus,
        "contributions": report
            .contributions
            .as_ref()
            .map(|table| degree_table(table.iter().map(|(&d, v)| (d, v)))),
    })
}

pub fn cd4(
    draft: &mut ReportDraft,
    arc_path: &Path,
    truncation: Option<u32>,
    genus: u32,
    max_degree: u64,
) -> CommandOutcome {
    let arc = ingest::ingest_arc(arc_path, truncation)?;
    let report = cd4_report(&arc, genus, max_degree)?;
    if let Some(caveat) = &report.caveat {
        draft.note(caveat.clone());
    }
    Ok(cd4_results_json(&report))
}
