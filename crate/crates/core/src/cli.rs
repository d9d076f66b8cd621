//! The `epglab` command line: build, verify, report.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::json;

use crate::epg::{
    dihedral_decomposition, enhanced_power_graph, power_graph, quaternion_decomposition,
    quaternion_decomposition_as_printed, sd_neighborhood_oracle,
};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::{
    load_cayley_table, make_dihedral, make_generalized_quaternion, make_semidihedral, FiniteGroup,
};
use crate::iso::is_isomorphic;
use crate::metric::{
    all_pairs_detour, all_pairs_geodesic, boundary_interior, closure, detour_profile,
    eccentric_subgraph, sd_average_detour_degree, sd_dds_closed_form, sd_detour_closed_form,
    sd_detour_degree, sd_detour_degree_sequence, sd_detour_radius_diameter, sd_eccentric_vertices,
    sd_interior_claim, DetourProfile, DistanceMatrix, DEFAULT_DETOUR_CAP,
};
use crate::resolving::{
    is_resolving, metric_dimension, resolving_counts, sd_resolving_polynomial_closed_form,
    sd_witness_resolving_set, twin_classes, twin_lower_bound, Coverage, DEFAULT_ENUM_CAP,
    DEFAULT_SUBSET_BUDGET,
};
use crate::spectra::{
    closed_form_spectrum, closed_form_tree_count, integer_spectrum, laplacian_charpoly,
    spanning_tree_count, spectrum_json, SpectrumFamily, SpectrumSummary, DEFAULT_CHARPOLY_CAP,
};

/// A group named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Semidihedral(usize),
    Quaternion(usize),
    Dihedral(usize),
    File(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parameter(format!("group spec {s:?} is not KIND:ARG")))?;
        if kind == "file" {
            return Ok(GroupSpec::File(PathBuf::from(arg)));
        }
        let n: usize = arg
            .parse()
            .map_err(|_| Error::Parameter(format!("{arg:?} is not a non-negative integer")))?;
        let (spec, min) = match kind {
            "sd" => (GroupSpec::Semidihedral(n), 2),
            "q" => (GroupSpec::Quaternion(n), 2),
            "d" => (GroupSpec::Dihedral(n), 3),
            _ => return Err(Error::Parameter(format!("unknown group family {kind:?}"))),
        };
        if n < min {
            return Err(Error::Parameter(format!(
                "{kind}:N needs N >= {min}, got {n}"
            )));
        }
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Semidihedral(n) => write!(f, "sd:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "q:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "d:{n}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Semidihedral(n) => make_semidihedral(*n),
            GroupSpec::Quaternion(n) => make_generalized_quaternion(*n),
            GroupSpec::Dihedral(n) => make_dihedral(*n),
            GroupSpec::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", p.display())))?;
                load_cayley_table(&text)
            }
        }
    }

    fn spectrum_family(&self) -> Option<(SpectrumFamily, usize)> {
        match self {
            GroupSpec::Semidihedral(n) => Some((SpectrumFamily::Semidihedral, *n)),
            GroupSpec::Quaternion(n) => Some((SpectrumFamily::Quaternion, *n)),
            GroupSpec::Dihedral(n) => Some((SpectrumFamily::Dihedral, *n)),
            GroupSpec::File(_) => None,
        }
    }

    /// Checks with a closed form for this family.
    pub fn applicable_checks(&self) -> Vec<Check> {
        match self {
            GroupSpec::Semidihedral(_) => Check::ALL
                .into_iter()
                .filter(|c| *c != Check::Decomposition)
                .collect(),
            GroupSpec::Quaternion(_) | GroupSpec::Dihedral(_) => {
                vec![Check::Spectrum, Check::Trees, Check::Decomposition]
            }
            GroupSpec::File(_) => vec![],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Check {
    Nbd,
    Detour,
    Dds,
    Interior,
    Closure,
    Eccentric,
    Dimension,
    Resolving,
    Spectrum,
    Trees,
    Decomposition,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Nbd,
        Check::Detour,
        Check::Dds,
        Check::Interior,
        Check::Closure,
        Check::Eccentric,
        Check::Dimension,
        Check::Resolving,
        Check::Spectrum,
        Check::Trees,
        Check::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Nbd => "nbd",
            Check::Detour => "detour",
            Check::Dds => "dds",
            Check::Interior => "interior",
            Check::Closure => "closure",
            Check::Eccentric => "eccentric",
            Check::Dimension => "dimension",
            Check::Resolving => "resolving",
            Check::Spectrum => "spectrum",
            Check::Trees => "trees",
            Check::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyVerdict {
    pub check: Check,
    /// Closed form, rendered.
    pub expected: String,
    /// Brute force, rendered; empty when skipped.
    pub computed: String,
    pub status: Status,
    pub notes: Vec<String>,
}

impl VerifyVerdict {
    fn compare(check: Check, expected: String, computed: String) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        VerifyVerdict {
            check,
            expected,
            computed,
            status,
            notes: vec![],
        }
    }

    fn skipped(check: Check, expected: String, reason: String) -> Self {
        VerifyVerdict {
            check,
            expected,
            computed: String::new(),
            status: Status::Skipped(reason),
            notes: vec![],
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

fn shorten(s: &str, max: usize) -> String {
    if s.chars().count() <= max {
        s.to_string()
    } else {
        let head: String = s.chars().take(max).collect();
        format!("{head}...")
    }
}

impl fmt::Display for VerifyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(
                f,
                "pass     {:<13} {}",
                self.check.name(),
                shorten(&self.expected, 100)
            )?,
            Status::Skipped(why) => {
                write!(f, "skipped  {:<13} {why}", self.check.name())?;
                if !self.expected.is_empty() {
                    write!(f, "\n           expected: {}", self.expected)?;
                }
            }
            Status::Fail => write!(
                f,
                "FAIL     {:<13}\n           expected: {}\n           computed: {}",
                self.check.name(),
                self.expected,
                self.computed
            )?,
        }
        for note in &self.notes {
            write!(f, "\n           note: {note}")?;
        }
        Ok(())
    }
}

/// Vertex-count limits for the exponential and big-integer engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Args)]
pub struct Caps {
    /// Largest graph handed to the exact detour engine.
    #[arg(long = "detour-cap", default_value_t = DEFAULT_DETOUR_CAP)]
    pub detour: usize,
    /// Largest graph whose subsets are enumerated for resolving counts.
    #[arg(long = "enum-cap", default_value_t = DEFAULT_ENUM_CAP)]
    pub enumeration: usize,
    /// Largest graph for characteristic polynomials and determinants.
    #[arg(long = "charpoly-cap", default_value_t = DEFAULT_CHARPOLY_CAP)]
    pub charpoly: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            detour: DEFAULT_DETOUR_CAP,
            enumeration: DEFAULT_ENUM_CAP,
            charpoly: DEFAULT_CHARPOLY_CAP,
        }
    }
}

fn render_set(g: &SimpleGraph, vs: &[usize]) -> String {
    let labels: Vec<&str> = vs.iter().map(|&v| g.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn render_spectrum(s: &SpectrumSummary) -> String {
    let pairs: Vec<String> = s.roots.iter().map(|(l, m)| format!("{l}:{m}")).collect();
    let mut out = format!("{{{}}}", pairs.join(", "));
    if !s.is_integral() {
        out.push_str(&format!(" residual {}", s.residual));
    }
    out
}

fn render_ratio(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn render_rows(rows: impl Iterator<Item = String>) -> String {
    rows.collect::<Vec<_>>().join("; ")
}

fn render_detour_stats(
    ecc: impl Fn(usize) -> u32,
    dds: impl Fn(usize) -> Vec<usize>,
    vcount: usize,
    degree_sequence: &[usize],
    average: Ratio<u64>,
) -> String {
    let rows = render_rows((0..vcount).map(|v| format!("{v}: ecc {} dds {:?}", ecc(v), dds(v))));
    format!(
        "D = {degree_sequence:?}, D_av = {}; {rows}",
        render_ratio(average)
    )
}

/// Context shared by the checks of one verify run.
struct Subject {
    spec: GroupSpec,
    graph: SimpleGraph,
    caps: Caps,
    oracle_only: bool,
}

impl Subject {
    fn n(&self) -> usize {
        match self.spec {
            GroupSpec::Semidihedral(n) | GroupSpec::Quaternion(n) | GroupSpec::Dihedral(n) => n,
            GroupSpec::File(_) => 0,
        }
    }

    fn over_cap(&self, what: &str, cap: usize) -> Option<String> {
        let v = self.graph.vcount();
        (v > cap).then(|| format!("{v} vertices exceed the {what} of {cap}"))
    }

    fn run(&self, check: Check) -> Result<VerifyVerdict> {
        match check {
            Check::Nbd => self.nbd(),
            Check::Detour => self.detour(),
            Check::Dds => self.dds(),
            Check::Interior => self.interior(),
            Check::Closure => self.closure(),
            Check::Eccentric => self.eccentric(),
            Check::Dimension => self.dimension(),
            Check::Resolving => self.resolving(),
            Check::Spectrum => self.spectrum(),
            Check::Trees => self.trees(),
            Check::Decomposition => self.decomposition(),
        }
    }

    fn finish(
        &self,
        check: Check,
        expected: String,
        computed: impl FnOnce() -> Result<String>,
    ) -> Result<VerifyVerdict> {
        if self.oracle_only {
            return Ok(VerifyVerdict::skipped(
                check,
                expected,
                "oracle-only".into(),
            ));
        }
        Ok(VerifyVerdict::compare(check, expected, computed()?))
    }

    fn nbd(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let g = &self.graph;
        let expected = render_rows(
            (0..8 * n)
                .map(|v| {
                    Ok(format!(
                        "N[{}] = {}",
                        g.label(v),
                        render_set(g, &sd_neighborhood_oracle(n, v)?)
                    ))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter(),
        );
        self.finish(Check::Nbd, expected, || {
            Ok(render_rows((0..8 * n).map(|v| {
                format!(
                    "N[{}] = {}",
                    g.label(v),
                    render_set(g, &g.closed_neighborhood(v))
                )
            })))
        })
    }

    fn sd_detour_matrix_rows(&self) -> Result<Vec<String>> {
        let n = self.n();
        (0..8 * n)
            .map(|u| {
                let row = (0..8 * n)
                    .map(|v| {
                        if u == v {
                            Ok(0)
                        } else {
                            sd_detour_closed_form(n, u, v)
                        }
                    })
                    .collect::<Result<Vec<u32>>>()?;
                Ok(format!("{row:?}"))
            })
            .collect()
    }

    fn computed_detour(&self) -> Result<DistanceMatrix> {
        all_pairs_detour(&self.graph, self.caps.detour)
    }

    fn detour(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let (rad, diam) = sd_detour_radius_diameter(n);
        let expected = format!(
            "rad {rad}, diam {diam}; {}",
            render_rows(self.sd_detour_matrix_rows()?.into_iter())
        );
        if !self.oracle_only {
            if let Some(why) = self.over_cap("detour cap", self.caps.detour) {
                return Ok(VerifyVerdict::skipped(Check::Detour, expected, why));
            }
        }
        self.finish(Check::Detour, expected, || {
            let d = self.computed_detour()?;
            let profile = DetourProfile::from_matrix(&d)?;
            let rows = (0..d.vcount()).map(|u| {
                let row: Vec<u32> = d.row(u).iter().map(|x| x.unwrap_or(u32::MAX)).collect();
                format!("{row:?}")
            });
            Ok(format!(
                "rad {}, diam {}; {}",
                profile.radius,
                profile.diameter,
                render_rows(rows)
            ))
        })
    }

    fn dds(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let v = 8 * n;
        let dds: Vec<Vec<usize>> = (0..v)
            .map(|x| sd_dds_closed_form(n, x))
            .collect::<Result<_>>()?;
        let ecc: Vec<u32> = dds.iter().map(|d| d.len() as u32 - 1).collect();
        let degrees = (0..v)
            .map(|x| sd_detour_degree(n, x))
            .collect::<Result<Vec<_>>>()?;
        let expected = format!(
            "degrees {degrees:?}; {}",
            render_detour_stats(
                |x| ecc[x],
                |x| dds[x].clone(),
                v,
                &sd_detour_degree_sequence(n),
                sd_average_detour_degree(n),
            )
        );
        if !self.oracle_only {
            if let Some(why) = self.over_cap("detour cap", self.caps.detour) {
                return Ok(VerifyVerdict::skipped(Check::Dds, expected, why));
            }
        }
        self.finish(Check::Dds, expected, || {
            let p = detour_profile(&self.graph, self.caps.detour)?;
            let degrees: Vec<usize> = p.vertices.iter().map(|x| x.degree).collect();
            Ok(format!(
                "degrees {degrees:?}; {}",
                render_detour_stats(
                    |x| p.vertices[x].eccentricity,
                    |x| p.vertices[x].dds.clone(),
                    v,
                    &p.degree_sequence,
                    p.average_degree,
                )
            ))
        })
    }

    fn interior(&self) -> Result<VerifyVerdict> {
        let g = &self.graph;
        let claim = sd_interior_claim(self.n());
        let expected = format!(
            "{} ({} edges)",
            render_set(g, &claim),
            g.induced(&claim).edge_count()
        );
        self.finish(Check::Interior, expected, || {
            let b = boundary_interior(g)?;
            Ok(format!(
                "{} ({} edges)",
                render_set(g, &b.interior.vertices),
                b.interior.graph.edge_count()
            ))
        })
    }

    fn closure(&self) -> Result<VerifyVerdict> {
        let edges = self.graph.edge_count();
        let expected = format!("closure = graph ({edges} edges)");
        self.finish(Check::Closure, expected, || {
            let c = closure(&self.graph);
            Ok(if c.same_edges(&self.graph) {
                format!("closure = graph ({edges} edges)")
            } else {
                format!("closure adds {} edges", c.edge_count() - edges)
            })
        })
    }

    fn eccentric(&self) -> Result<VerifyVerdict> {
        let g = &self.graph;
        let expected = render_set(g, &sd_eccentric_vertices(self.n()));
        self.finish(Check::Eccentric, expected, || {
            Ok(render_set(g, &eccentric_subgraph(g)?.vertices))
        })
    }

    fn dimension(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let g = &self.graph;
        let dim = 7 * n - 4;
        let witness = sd_witness_resolving_set(n);
        let expected = format!(
            "dim {dim}, twin bound {dim}, witness {} resolving",
            render_set(g, &witness)
        );
        if self.oracle_only {
            return Ok(VerifyVerdict::skipped(
                Check::Dimension,
                expected,
                "oracle-only".into(),
            ));
        }
        let dist = all_pairs_geodesic(g);
        let bound = twin_lower_bound(&twin_classes(g));
        let resolves = is_resolving(&dist, &witness);
        let computed_dim = match metric_dimension(g, DEFAULT_SUBSET_BUDGET) {
            Ok((d, _)) => d,
            Err(Error::Capacity { what, cap, .. }) => {
                return Ok(VerifyVerdict::skipped(
                    Check::Dimension,
                    expected,
                    format!("{what} of {cap} exhausted"),
                ))
            }
            Err(e) => return Err(e),
        };
        let computed = format!(
            "dim {computed_dim}, twin bound {bound}, witness {} {}",
            render_set(g, &witness),
            if resolves {
                "resolving"
            } else {
                "not resolving"
            }
        );
        Ok(VerifyVerdict::compare(Check::Dimension, expected, computed))
    }

    fn resolving(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let cf = sd_resolving_polynomial_closed_form(n)?;
        let expected = cf.polynomial.coefficient_strings()[7 * n - 4..].join(", ");
        let notes: Vec<String> = cf
            .coverage
            .iter()
            .map(|c| match c {
                Coverage::Gap { index } => format!("closed form leaves r_{index} undefined"),
                Coverage::Overlap { index, values } => {
                    let vs: Vec<String> = values
                        .iter()
                        .map(|(b, v)| format!("branch {b} gives {v}"))
                        .collect();
                    format!("r_{index} covered twice: {}", vs.join(", "))
                }
            })
            .collect();
        let mut verdict = if !self.oracle_only && self.graph.vcount() > self.caps.enumeration {
            VerifyVerdict::skipped(
                Check::Resolving,
                expected,
                self.over_cap("enumeration cap", self.caps.enumeration)
                    .unwrap_or_default(),
            )
        } else {
            self.finish(Check::Resolving, expected, || {
                let report = resolving_counts(&self.graph, self.caps.enumeration)?;
                let coeffs = report.polynomial.coefficient_strings();
                Ok(coeffs[(7 * n - 4).min(coeffs.len())..].join(", "))
            })?
        };
        verdict.notes = notes;
        Ok(verdict)
    }

    fn spectrum(&self) -> Result<VerifyVerdict> {
        let (fam, n) = self.spec.spectrum_family().expect("family checked");
        let cf = closed_form_spectrum(fam, n)?;
        let expected = render_spectrum(&cf);
        if !self.oracle_only {
            if let Some(why) = self.over_cap("charpoly cap", self.caps.charpoly) {
                return Ok(VerifyVerdict::skipped(Check::Spectrum, expected, why));
            }
        }
        self.finish(Check::Spectrum, expected, || {
            let poly = laplacian_charpoly(&self.graph, self.caps.charpoly)?;
            let s = integer_spectrum(&self.graph, self.caps.charpoly)?;
            let mut out = render_spectrum(&s);
            if poly != cf.polynomial() {
                out.push_str(" (char poly differs from expanded factorisation)");
            }
            let two_e = 2 * self.graph.edge_count();
            if s.trace() != Some(two_e.into()) {
                out.push_str(&format!(" (eigenvalue sum differs from 2|E| = {two_e})"));
            }
            Ok(out)
        })
    }

    fn trees(&self) -> Result<VerifyVerdict> {
        let (fam, n) = self.spec.spectrum_family().expect("family checked");
        let expected = closed_form_tree_count(fam, n)?.to_string();
        if !self.oracle_only {
            if let Some(why) = self.over_cap("charpoly cap", self.caps.charpoly) {
                return Ok(VerifyVerdict::skipped(Check::Trees, expected, why));
            }
        }
        self.finish(Check::Trees, expected, || {
            Ok(spanning_tree_count(&self.graph, self.caps.charpoly)?
                .count
                .to_string())
        })
    }

    fn decomposition(&self) -> Result<VerifyVerdict> {
        let n = self.n();
        let (shape, name) = match self.spec {
            GroupSpec::Quaternion(_) => (
                quaternion_decomposition(n),
                format!("K_2 v (K_{} u {n}K_2)", 2 * n - 2),
            ),
            GroupSpec::Dihedral(_) => (
                dihedral_decomposition(n),
                format!("K_1 v (K_{} u coK_{n})", n - 1),
            ),
            _ => unreachable!("decomposition is only offered for q and d"),
        };
        let expected = format!("isomorphic to {name}");
        let mut verdict = self.finish(Check::Decomposition, expected, || {
            Ok(match is_isomorphic(&self.graph, &shape) {
                Some(_) => format!("isomorphic to {name}"),
                None => format!("not isomorphic to {name}"),
            })
        })?;
        if let GroupSpec::Quaternion(_) = self.spec {
            let printed = quaternion_decomposition_as_printed(n);
            verdict = verdict.with_note(format!(
                "the printed form K_2 v (K_{} u {n}K_2) has {} vertices, not {}; the rotation clique needs 2n - 2 = {} vertices",
                n.saturating_sub(2),
                printed.vcount(),
                4 * n,
                2 * n - 2
            ));
            if n.is_power_of_two() && !self.oracle_only {
                let group = self.spec.build()?;
                let same = power_graph(&group).same_edges(&self.graph);
                verdict = verdict.with_note(format!(
                    "power graph {} the enhanced power graph edge-for-edge",
                    if same { "equals" } else { "differs from" }
                ));
                if !same {
                    verdict.status = Status::Fail;
                }
            }
        }
        Ok(verdict)
    }
}

/// Runs the requested checks against the brute-force engines, in
/// `Check` order regardless of completion order.
pub fn cmd_verify(
    spec: &GroupSpec,
    checks: &[Check],
    caps: Caps,
    oracle_only: bool,
) -> Result<Vec<VerifyVerdict>> {
    let applicable = spec.applicable_checks();
    if applicable.is_empty() {
        return Err(Error::Parameter(format!(
            "{spec} has no closed forms to verify against"
        )));
    }
    let mut checks: Vec<Check> = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();
    if let Some(bad) = checks.iter().find(|c| !applicable.contains(c)) {
        return Err(Error::Parameter(format!(
            "check {bad} is not available for {spec}"
        )));
    }
    let group = spec.build()?;
    let subject = Subject {
        spec: spec.clone(),
        graph: enhanced_power_graph(&group),
        caps,
        oracle_only,
    };
    checks.par_iter().map(|&c| subject.run(c)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    Graph,
    #[value(alias = "distance")]
    Distant,
    Detour,
    Resolving,
    Spectrum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

fn distance_json(d: &DistanceMatrix) -> serde_json::Value {
    let rows: Vec<Vec<Option<u32>>> = (0..d.vcount()).map(|u| d.row(u).to_vec()).collect();
    json!({ "labels": d.labels(), "matrix": rows })
}

fn edge_csv(g: &SimpleGraph) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let write = |w: &mut csv::Writer<Vec<u8>>| -> std::result::Result<(), csv::Error> {
        w.write_record(["source", "target"])?;
        for (u, v) in g.edges() {
            w.write_record([g.label(u), g.label(v)])?;
        }
        w.flush()?;
        Ok(())
    };
    write(&mut w).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flushed")).expect("labels are UTF-8")
}

fn compact(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialise");
    s.push('\n');
    s
}

/// Renders one report; identical inputs give byte-identical output.
pub fn cmd_report(
    spec: &GroupSpec,
    what: ReportKind,
    format: Format,
    caps: Caps,
) -> Result<String> {
    let group = spec.build()?;
    let g = enhanced_power_graph(&group);
    let unsupported = || {
        Err(Error::Parameter(format!(
            "format {format:?} is not available for the {what:?} report"
        )))
    };
    match (what, format) {
        (ReportKind::Graph, Format::Json) => Ok(compact(&g.to_json())),
        (ReportKind::Graph, Format::Dot) => Ok(g.to_dot()),
        (ReportKind::Graph, Format::Csv) => Ok(edge_csv(&g)),
        (ReportKind::Distant, Format::Json) => Ok(compact(&distance_json(&all_pairs_geodesic(&g)))),
        (ReportKind::Distant, Format::Csv) => Ok(all_pairs_geodesic(&g).to_csv()),
        (ReportKind::Detour, Format::Json) => {
            let d = all_pairs_detour(&g, caps.detour)?;
            let mut v = DetourProfile::from_matrix(&d)?.to_json();
            v["matrix"] = distance_json(&d)["matrix"].clone();
            Ok(compact(&v))
        }
        (ReportKind::Detour, Format::Csv) => Ok(all_pairs_detour(&g, caps.detour)?.to_csv()),
        (ReportKind::Resolving, Format::Json) => {
            Ok(compact(&resolving_counts(&g, caps.enumeration)?.to_json()))
        }
        (ReportKind::Spectrum, Format::Json) => {
            let poly = laplacian_charpoly(&g, caps.charpoly)?;
            let s = integer_spectrum(&g, caps.charpoly)?;
            let t = spanning_tree_count(&g, caps.charpoly)?;
            Ok(compact(&spectrum_json(&poly, &s, &t)))
        }
        _ => unsupported(),
    }
}

/// Element orders, one `label order` line per element.
pub fn cmd_group(spec: &GroupSpec, orders: bool) -> Result<String> {
    let group = spec.build()?;
    if !orders {
        return Ok(group.render_table());
    }
    let mut out = format!("{} of order {}\n", group.family(), group.order());
    for x in 0..group.order() {
        out.push_str(&format!("{} {}\n", group.label(x), group.element_order(x)?));
    }
    Ok(out)
}

#[derive(Debug, Parser)]
#[command(
    name = "epglab",
    version,
    about = "Enhanced power graphs of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare closed forms against brute-force computation.
    Verify {
        /// sd:N, q:N, d:N or file:PATH
        spec: String,
        /// Run every check available for the family (the default).
        #[arg(long, conflicts_with = "check")]
        all: bool,
        #[arg(long, value_enum)]
        check: Vec<Check>,
        /// Print closed forms only, without brute force.
        #[arg(long)]
        oracle_only: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Write a graph, distance, detour, resolving or spectrum report.
    Report {
        spec: String,
        #[arg(value_enum)]
        what: ReportKind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Print the Cayley table, or element orders with --orders.
    Group {
        spec: String,
        #[arg(long)]
        orders: bool,
    },
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("epglab: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify {
            spec,
            check,
            oracle_only,
            caps,
            ..
        } => {
            let spec: GroupSpec = spec.parse()?;
            let checks = if check.is_empty() {
                spec.applicable_checks()
            } else {
                check
            };
            let verdicts = cmd_verify(&spec, &checks, caps, oracle_only)?;
            for v in &verdicts {
                println!("{v}");
            }
            Ok(i32::from(verdicts.iter().any(|v| v.status == Status::Fail)))
        }
        Command::Report {
            spec,
            what,
            format,
            output,
            caps,
        } => {
            let text = cmd_report(&spec.parse()?, what, format, caps)?;
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| {
                    Error::Parameter(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Group { spec, orders } => {
            print!("{}", cmd_group(&spec.parse()?, orders)?);
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "sd:2".parse::<GroupSpec>().unwrap(),
            GroupSpec::Semidihedral(2)
        );
        assert_eq!(
            "q:5".parse::<GroupSpec>().unwrap(),
            GroupSpec::Quaternion(5)
        );
        assert_eq!("d:3".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(3));
        assert_eq!(
            "file:x.txt".parse::<GroupSpec>().unwrap(),
            GroupSpec::File("x.txt".into())
        );
        for bad in ["sd:1", "d:2", "q:x", "z:3", "sd"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn inapplicable_check_rejected() {
        let err = cmd_verify(
            &GroupSpec::Dihedral(3),
            &[Check::Detour],
            Caps::default(),
            false,
        );
        assert!(matches!(err, Err(Error::Parameter(_))));
    }

    #[test]
    fn dot_only_for_graph() {
        let r = cmd_report(
            &GroupSpec::Dihedral(3),
            ReportKind::Spectrum,
            Format::Dot,
            Caps::default(),
        );
        assert!(matches!(r, Err(Error::Parameter(_))));
    }

    #[test]
    fn over_cap_is_skipped() {
        let caps = Caps {
            detour: 8,
            ..Caps::default()
        };
        let v = cmd_verify(&GroupSpec::Semidihedral(2), &[Check::Detour], caps, false).unwrap();
        assert!(matches!(&v[0].status, Status::Skipped(why) if why.contains("detour cap of 8")));
    }
}
