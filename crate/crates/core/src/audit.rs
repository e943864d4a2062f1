//! Grid sweeps comparing every printed closed form with the brute-force
//! hyper Zagreb index of the constructed graph.
//!
//! The two sides never share a code path: the closed value comes from
//! [`formulas::evaluate`], which reads the base graph only, and the oracle is
//! [`indices::hm`] of [`thorn::build`]. Decisions are exact integer equality.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::base::{BaseFamily, BaseSpec};
use crate::formulas::{self, FormulaId, Point};
use crate::graph::Graph;
use crate::indices;
use crate::thorn::{self, ThornCounts, ThornSpec, ThornType};
use crate::{Error, Result};

/// Inclusive integer range, written `[lo, hi]` in config files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span(pub usize, pub usize);

impl Span {
    fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.0..=self.1
    }

    fn check(self, what: &str) -> Result<()> {
        if self.0 > self.1 {
            return Err(Error::Config(format!(
                "{what} range [{}, {}] is empty",
                self.0, self.1
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseEntry {
    Path {
        n: Span,
    },
    Cycle {
        n: Span,
    },
    Complete {
        n: Span,
    },
    Bipartite {
        r: Span,
        s: Span,
    },
    Star {
        n: Span,
    },
    /// `count` random connected graphs with order drawn from `n`.
    Random {
        n: Span,
        count: usize,
    },
    File {
        path: PathBuf,
    },
    /// Any single descriptor in the `family:args` mini-language.
    Spec {
        spec: BaseSpec,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub bases: Vec<BaseEntry>,
    #[serde(default)]
    pub types: Vec<ThornType>,
    /// Clamped up to each type's minimum order.
    #[serde(default = "default_r_range")]
    pub r_range: Span,
    /// Only swept for types IV and VII; other types record `s = 0`.
    #[serde(default = "default_s_range")]
    pub s_range: Span,
    #[serde(default)]
    pub t_modes: Vec<ThornCounts>,
    /// Empty means every registry entry.
    #[serde(default)]
    pub formulas: Vec<FormulaId>,
    #[serde(default)]
    pub require_connected: bool,
    /// Seeds the random base graphs.
    #[serde(default)]
    pub seed: u64,
}

fn default_r_range() -> Span {
    Span(1, 6)
}

fn default_s_range() -> Span {
    Span(1, 4)
}

impl GridConfig {
    /// The desk-scale default sweep.
    pub fn default_grid() -> Self {
        let mut t_modes: Vec<ThornCounts> = (0..=3).map(ThornCounts::Uniform).collect();
        t_modes.extend((1..=5).map(|seed| ThornCounts::Random { max: 3, seed }));
        GridConfig {
            bases: vec![
                BaseEntry::Path { n: Span(3, 8) },
                BaseEntry::Cycle { n: Span(3, 8) },
                BaseEntry::Complete { n: Span(3, 6) },
                BaseEntry::Bipartite {
                    r: Span(1, 4),
                    s: Span(1, 4),
                },
                BaseEntry::Random {
                    n: Span(4, 8),
                    count: 20,
                },
            ],
            types: ThornType::ALL.to_vec(),
            r_range: default_r_range(),
            s_range: default_s_range(),
            t_modes,
            formulas: Vec::new(),
            require_connected: true,
            seed: 20_170_101,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Range of `r` swept for a type.
    pub fn r_values(&self, ty: ThornType) -> Result<std::ops::RangeInclusive<usize>> {
        let lo = self.r_range.0.max(ty.min_r());
        if lo > self.r_range.1 {
            return Err(Error::Config(format!(
                "r_range [{}, {}] is below the minimum order {} of type {ty}",
                self.r_range.0,
                self.r_range.1,
                ty.min_r()
            )));
        }
        Ok(lo..=self.r_range.1)
    }

    fn s_values(&self, ty: ThornType) -> Vec<usize> {
        if ty.uses_s() {
            self.s_range.iter().collect()
        } else {
            vec![0]
        }
    }

    /// Base descriptors in config order.
    pub fn expand_bases(&self) -> Result<Vec<BaseSpec>> {
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for entry in &self.bases {
            match entry {
                BaseEntry::Path { n } => {
                    n.check("path n")?;
                    out.extend(n.iter().map(BaseSpec::Path));
                }
                BaseEntry::Cycle { n } => {
                    n.check("cycle n")?;
                    out.extend(n.iter().map(BaseSpec::Cycle));
                }
                BaseEntry::Complete { n } => {
                    n.check("complete n")?;
                    out.extend(n.iter().map(BaseSpec::Complete));
                }
                BaseEntry::Star { n } => {
                    n.check("star n")?;
                    out.extend(n.iter().map(BaseSpec::Star));
                }
                BaseEntry::Bipartite { r, s } => {
                    r.check("bipartite r")?;
                    s.check("bipartite s")?;
                    for a in r.iter() {
                        out.extend(s.iter().map(|b| BaseSpec::Bipartite(a, b)));
                    }
                }
                BaseEntry::Random { n, count } => {
                    n.check("random n")?;
                    for _ in 0..*count {
                        let order = rng.gen_range(n.iter());
                        out.push(BaseSpec::Random {
                            n: order,
                            seed: rng.gen(),
                        });
                    }
                }
                BaseEntry::File { path } => out.push(BaseSpec::File(path.clone())),
                BaseEntry::Spec { spec } => out.push(spec.clone()),
            }
        }
        Ok(out)
    }

    fn selected(&self, ty: ThornType) -> Vec<FormulaId> {
        FormulaId::ALL
            .iter()
            .copied()
            .filter(|id| id.thorn_type() == ty)
            .filter(|id| self.formulas.is_empty() || self.formulas.contains(id))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Match,
    Mismatch,
    Inapplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Inapplicable => "INAPPLICABLE",
        })
    }
}

/// Integers travel as decimal strings in report JSON.
mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<T: Display, S: Serializer>(
            v: &Option<T>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub base: BaseSpec,
    #[serde(rename = "type")]
    pub thorn_type: ThornType,
    #[serde(with = "decimal")]
    pub n: usize,
    #[serde(with = "decimal")]
    pub r: usize,
    #[serde(with = "decimal")]
    pub s: usize,
    #[serde(with = "decimal::vec")]
    pub t: Vec<usize>,
}

impl PointRecord {
    fn spec(&self) -> ThornSpec {
        ThornSpec::new(self.thorn_type, self.r, self.s, self.t.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub formula: FormulaId,
    pub point: PointRecord,
    #[serde(with = "decimal::opt")]
    pub closed: Option<i128>,
    #[serde(with = "decimal::opt")]
    pub oracle: Option<i128>,
    #[serde(with = "decimal::opt")]
    pub delta: Option<i128>,
    pub status: Status,
}

/// A point where the printed value and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub point: PointRecord,
    #[serde(with = "decimal")]
    pub closed: i128,
    #[serde(with = "decimal")]
    pub oracle: i128,
    #[serde(with = "decimal")]
    pub delta: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSummary {
    pub formula: FormulaId,
    #[serde(with = "decimal")]
    pub tested: usize,
    #[serde(with = "decimal")]
    pub matched: usize,
    #[serde(with = "decimal")]
    pub mismatched: usize,
    #[serde(with = "decimal")]
    pub inapplicable: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub version: String,
    pub config: GridConfig,
    pub records: Vec<AuditRecord>,
    pub summary: Vec<FormulaSummary>,
}

impl AuditReport {
    pub fn mismatches(&self) -> usize {
        self.summary.iter().map(|s| s.mismatched).sum()
    }

    pub fn summary_for(&self, id: FormulaId) -> Option<&FormulaSummary> {
        self.summary.iter().find(|s| s.formula == id)
    }
}

/// Compares one formula at one point. Inapplicable points yield a record
/// with no values.
pub fn compare(
    id: FormulaId,
    base: &BaseSpec,
    graph: &Graph,
    spec: &ThornSpec,
) -> Result<AuditRecord> {
    let oracle = || -> Result<i128> { indices::hm(&thorn::build(graph, spec)?.graph) };
    compare_with(id, base, graph, spec, oracle)
}

fn compare_with<F>(
    id: FormulaId,
    base: &BaseSpec,
    graph: &Graph,
    spec: &ThornSpec,
    oracle: F,
) -> Result<AuditRecord>
where
    F: FnOnce() -> Result<i128>,
{
    let point = PointRecord {
        base: base.clone(),
        thorn_type: spec.kind,
        n: graph.n(),
        r: spec.r,
        s: spec.s,
        t: spec.t.clone(),
    };
    let at = Point { base, graph, spec };
    let closed = match formulas::evaluate(id, &at) {
        Ok(v) => v,
        Err(Error::Inapplicable { .. } | Error::LengthMismatch { .. }) => {
            return Ok(AuditRecord {
                formula: id,
                point,
                closed: None,
                oracle: None,
                delta: None,
                status: Status::Inapplicable,
            })
        }
        Err(e) => return Err(e),
    };
    let oracle = oracle()?;
    let delta = closed.checked_sub(oracle).ok_or(Error::Overflow)?;
    Ok(AuditRecord {
        formula: id,
        point,
        closed: Some(closed),
        oracle: Some(oracle),
        delta: Some(delta),
        status: if delta == 0 {
            Status::Match
        } else {
            Status::Mismatch
        },
    })
}

struct GridPoint {
    base: BaseSpec,
    graph: Graph,
    spec: ThornSpec,
    formulas: Vec<FormulaId>,
}

fn grid_points(config: &GridConfig) -> Result<Vec<GridPoint>> {
    config.r_range.check("r")?;
    config.s_range.check("s")?;
    let mut bases = Vec::new();
    for base in config.expand_bases()? {
        let graph = base
            .build()
            .map_err(|e| Error::Config(format!("base {base}: {e}")))?;
        if config.require_connected && !graph.is_connected() {
            return Err(Error::Config(format!("base {base} is not connected")));
        }
        bases.push((base, graph));
    }

    let mut points = Vec::new();
    for (base, graph) in &bases {
        for &ty in &config.types {
            let formulas = config.selected(ty);
            if formulas.is_empty() {
                continue;
            }
            for r in config.r_values(ty)? {
                for s in config.s_values(ty) {
                    for mode in &config.t_modes {
                        // explicit vectors only apply to bases of matching order
                        let Ok(t) = mode.resolve(graph.n()) else {
                            continue;
                        };
                        points.push(GridPoint {
                            base: base.clone(),
                            graph: graph.clone(),
                            spec: ThornSpec::new(ty, r, s, t),
                            formulas: formulas.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(points)
}

fn evaluate_point(p: &GridPoint) -> Result<Vec<AuditRecord>> {
    let mut oracle: Option<i128> = None;
    let mut out = Vec::with_capacity(p.formulas.len());
    for &id in &p.formulas {
        let record = compare_with(id, &p.base, &p.graph, &p.spec, || match oracle {
            Some(v) => Ok(v),
            None => {
                let v = indices::hm(&thorn::build(&p.graph, &p.spec)?.graph)?;
                oracle = Some(v);
                Ok(v)
            }
        })?;
        out.push(record);
    }
    Ok(out)
}

type SortKey<'a> = (
    FormulaId,
    BaseFamily,
    usize,
    usize,
    usize,
    &'a [usize],
    String,
);

fn sort_key(r: &AuditRecord) -> SortKey<'_> {
    let p = &r.point;
    (
        r.formula,
        p.base.family(),
        p.n,
        p.r,
        p.s,
        &p.t,
        p.base.to_string(),
    )
}

/// Runs the sweep on a single thread.
pub fn run(config: &GridConfig) -> Result<AuditReport> {
    run_with_workers(config, 1)
}

/// Runs the sweep on up to `workers` threads. The report does not depend on
/// the worker count.
pub fn run_with_workers(config: &GridConfig, workers: usize) -> Result<AuditReport> {
    let points = grid_points(config)?;
    let chunks: Vec<Vec<AuditRecord>> = if workers <= 1 {
        points.iter().map(evaluate_point).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        pool.install(|| points.par_iter().map(evaluate_point).collect::<Result<_>>())?
    };
    let mut records: Vec<AuditRecord> = chunks.into_iter().flatten().collect();
    records.sort_by(|a, b| sort_key(a).cmp(&sort_key(b)));
    let summary = summarize(&records);
    Ok(AuditReport {
        version: crate::version_string(),
        config: config.clone(),
        records,
        summary,
    })
}

fn summarize(records: &[AuditRecord]) -> Vec<FormulaSummary> {
    let mut by_formula: BTreeMap<FormulaId, FormulaSummary> = BTreeMap::new();
    for r in records {
        let s = by_formula
            .entry(r.formula)
            .or_insert_with(|| FormulaSummary {
                formula: r.formula,
                tested: 0,
                matched: 0,
                mismatched: 0,
                inapplicable: 0,
                first_counterexample: None,
            });
        match r.status {
            Status::Inapplicable => s.inapplicable += 1,
            Status::Match => {
                s.tested += 1;
                s.matched += 1;
            }
            Status::Mismatch => {
                s.tested += 1;
                s.mismatched += 1;
                if s.first_counterexample.is_none() {
                    s.first_counterexample = Some(Counterexample {
                        point: r.point.clone(),
                        closed: r.closed.expect("mismatch has values"),
                        oracle: r.oracle.expect("mismatch has values"),
                        delta: r.delta.expect("mismatch has values"),
                    });
                }
            }
        }
    }
    by_formula.into_values().collect()
}

/// First mismatch for `id` in canonical order.
pub fn first_counterexample(id: FormulaId, config: &GridConfig) -> Result<Option<Counterexample>> {
    let mut narrowed = config.clone();
    narrowed.formulas = vec![id];
    let report = run(&narrowed)?;
    Ok(report
        .summary_for(id)
        .and_then(|s| s.first_counterexample.clone()))
}

/// Recomputes both sides of a counterexample from scratch.
pub fn recheck(id: FormulaId, point: &PointRecord) -> Result<AuditRecord> {
    let graph = point.base.build()?;
    compare(id, &point.base, &graph, &point.spec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::Unknown {
                what: "report format",
                value: other.to_string(),
            }),
        }
    }
}

pub fn render(report: &AuditReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(render_json(report)),
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => Ok(render_markdown(report)),
    }
}

/// One record or summary entry per line, so large reports stay greppable.
fn render_json(report: &AuditReport) -> String {
    fn compact<T: Serialize>(v: &T) -> String {
        serde_json::to_string(v).expect("report values serialize")
    }
    fn list<T: Serialize>(items: &[T]) -> String {
        if items.is_empty() {
            return "[]".into();
        }
        let body: Vec<String> = items
            .iter()
            .map(|x| format!("    {}", compact(x)))
            .collect();
        format!("[\n{}\n  ]", body.join(",\n"))
    }
    format!(
        "{{\n  \"version\": {},\n  \"config\": {},\n  \"records\": {},\n  \"summary\": {}\n}}\n",
        compact(&report.version),
        compact(&report.config),
        list(&report.records),
        list(&report.summary)
    )
}

pub fn parse_json(text: &str) -> Result<AuditReport> {
    serde_json::from_str(text).map_err(|e| Error::Io(format!("report JSON: {e}")))
}

fn opt(v: Option<i128>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn join_t(t: &[usize]) -> String {
    t.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_csv(report: &AuditReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "formula", "base", "type", "n", "r", "s", "t", "closed", "oracle", "delta", "status",
    ])
    .map_err(io)?;
    for r in &report.records {
        let p = &r.point;
        w.write_record([
            r.formula.to_string(),
            p.base.to_string(),
            p.thorn_type.to_string(),
            p.n.to_string(),
            p.r.to_string(),
            p.s.to_string(),
            join_t(&p.t),
            opt(r.closed),
            opt(r.oracle),
            opt(r.delta),
            r.status.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn render_markdown(report: &AuditReport) -> String {
    let mut out = format!(
        "# Closed-form audit\n\nthornlab {}\n\n| formula | kind | type | tested | matched | mismatched | inapplicable | first counterexample |\n|---|---|---|---|---|---|---|---|\n",
        report.version
    );
    for s in &report.summary {
        let meta = s.formula.meta();
        let cx = match &s.first_counterexample {
            Some(c) => format!(
                "{} r={} s={} t=[{}]: closed {} vs oracle {} (delta {})",
                c.point.base,
                c.point.r,
                c.point.s,
                join_t(&c.point.t),
                c.closed,
                c.oracle,
                c.delta
            ),
            None => "-".into(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            s.formula,
            meta.kind.as_str(),
            meta.thorn_type,
            s.tested,
            s.matched,
            s.mismatched,
            s.inapplicable,
            cx
        ));
    }
    let all_match = report
        .summary
        .iter()
        .filter(|s| s.tested > 0 && s.mismatched == 0)
        .count();
    out.push_str(&format!(
        "\n{} of {} formulas matched at every tested point; {} mismatching records.\n",
        all_match,
        report.summary.len(),
        report.mismatches()
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_only(formulas: Vec<FormulaId>, types: Vec<ThornType>) -> GridConfig {
        GridConfig {
            bases: vec![BaseEntry::Cycle { n: Span(3, 6) }],
            types,
            r_range: Span(3, 5),
            s_range: Span(1, 2),
            t_modes: (0..=2).map(ThornCounts::Uniform).collect(),
            formulas,
            require_connected: true,
            seed: 0,
        }
    }

    #[test]
    fn compare_spot_checks() {
        let base = BaseSpec::Cycle(3);
        let g = base.build().unwrap();
        let spec = |r| ThornSpec::new(ThornType::I, r, 0, vec![1, 1, 1]);

        let rec = compare(FormulaId::T1, &base, &g, &spec(3)).unwrap();
        assert_eq!(
            (rec.closed, rec.oracle, rec.delta),
            (Some(210), Some(210), Some(0))
        );
        assert_eq!(rec.status, Status::Match);

        let rec = compare(FormulaId::T1, &base, &g, &spec(2)).unwrap();
        assert_eq!(
            (rec.closed, rec.oracle, rec.delta),
            (Some(162), Some(156), Some(6))
        );
        assert_eq!(rec.status, Status::Mismatch);

        let rec = compare(FormulaId::C1, &base, &g, &spec(3)).unwrap();
        assert_eq!(
            (rec.closed, rec.oracle, rec.delta),
            (Some(234), Some(210), Some(24))
        );

        let rec = compare(FormulaId::E1a, &base, &g, &spec(3)).unwrap();
        assert_eq!(rec.status, Status::Inapplicable);
        assert_eq!(rec.closed, None);
    }

    #[test]
    fn theorem_2_sweep_all_match() {
        let report = run(&cycle_only(vec![FormulaId::T2], vec![ThornType::II])).unwrap();
        let s = report.summary_for(FormulaId::T2).unwrap();
        assert_eq!(s.tested, 4 * 3 * 3);
        assert_eq!(s.mismatched, 0);
        assert!(first_counterexample(FormulaId::T2, &report.config)
            .unwrap()
            .is_none());
    }

    #[test]
    fn empty_grid_gives_empty_report() {
        let report = run(&GridConfig {
            bases: vec![],
            types: vec![],
            r_range: Span(1, 6),
            s_range: Span(1, 4),
            t_modes: vec![],
            formulas: vec![],
            require_connected: false,
            seed: 0,
        })
        .unwrap();
        assert!(report.records.is_empty());
        assert!(report.summary.is_empty());
        assert_eq!(report.mismatches(), 0);
        let json = render(&report, ReportFormat::Json).unwrap();
        let back = parse_json(&json).unwrap();
        assert!(back.records.is_empty());
    }

    #[test]
    fn config_validation() {
        let mut c = cycle_only(vec![], vec![ThornType::II]);
        c.r_range = Span(1, 2);
        assert!(matches!(run(&c), Err(Error::Config(_))));

        let mut c = cycle_only(vec![], vec![ThornType::I]);
        c.bases = vec![BaseEntry::Cycle { n: Span(5, 3) }];
        assert!(matches!(run(&c), Err(Error::Config(_))));

        let mut c = cycle_only(vec![], vec![ThornType::I]);
        c.bases = vec![BaseEntry::Cycle { n: Span(2, 3) }];
        assert!(matches!(run(&c), Err(Error::Config(_))));

        let mut c = cycle_only(vec![], vec![ThornType::I]);
        c.bases = vec![BaseEntry::File {
            path: "/nonexistent/graph.txt".into(),
        }];
        assert!(matches!(run(&c), Err(Error::Config(_))));

        assert!(GridConfig::from_json(r#"{"bases": [{"family": "tree", "n": [1, 2]}]}"#).is_err());
        assert!(GridConfig::from_json(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn config_json_round_trip_and_defaults() {
        let c = GridConfig::default_grid();
        assert_eq!(GridConfig::from_json(&c.to_json()).unwrap(), c);

        let c = GridConfig::from_json(
            r#"{"bases": [{"family": "spec", "spec": "bipartite:2:3"}], "types": ["IV"],
                "t_modes": ["uniform:1", "1,0,2,0,1", "random:2:7"]}"#,
        )
        .unwrap();
        assert_eq!(c.r_range, Span(1, 6));
        assert_eq!(c.s_range, Span(1, 4));
        assert_eq!(c.expand_bases().unwrap(), vec![BaseSpec::Bipartite(2, 3)]);
        assert!(!c.require_connected);
    }

    #[test]
    fn explicit_vectors_only_hit_matching_orders() {
        let mut c = cycle_only(vec![FormulaId::T1], vec![ThornType::I]);
        c.t_modes = vec![ThornCounts::Explicit(vec![1, 0, 2, 0])];
        c.r_range = Span(2, 2);
        let report = run(&c).unwrap();
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].point.base, BaseSpec::Cycle(4));
    }

    #[test]
    fn disconnected_bases_rejected_when_required() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("two.txt");
        std::fs::write(&path, "0 1\n2 3\n").unwrap();
        let mut c = cycle_only(vec![], vec![ThornType::I]);
        c.bases = vec![BaseEntry::File { path: path.clone() }];
        c.r_range = Span(2, 2);
        assert!(matches!(run(&c), Err(Error::Config(_))));
        c.require_connected = false;
        assert!(!run(&c).unwrap().records.is_empty());
    }

    #[test]
    fn renderings() {
        let report = run(&cycle_only(vec![], vec![ThornType::I])).unwrap();
        let csv = render(&report, ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), report.records.len() + 1);
        let md = render(&report, ReportFormat::Markdown).unwrap();
        assert!(md.contains("| C1 | corollary | I |"));
        let json = render(&report, ReportFormat::Json).unwrap();
        assert_eq!(parse_json(&json).unwrap(), report);
        assert_eq!(
            render(&parse_json(&json).unwrap(), ReportFormat::Json).unwrap(),
            json
        );
        assert!("xml".parse::<ReportFormat>().is_err());
    }

    #[test]
    fn integers_are_strings_in_json() {
        let report = run(&cycle_only(vec![FormulaId::T2], vec![ThornType::II])).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&render(&report, ReportFormat::Json).unwrap()).unwrap();
        let rec = &value["records"][0];
        assert!(rec["closed"].is_string());
        assert!(rec["point"]["n"].is_string());
        assert!(rec["point"]["t"][0].is_string());
        assert!(value["summary"][0]["tested"].is_string());
    }
}
