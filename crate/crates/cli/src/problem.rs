//! Problem-file schema, query execution and the result-file format.
//!
//! A problem file fixes the geometry (root system plus word or involution)
//! and the bundle data; queries run against it. Results are deterministic:
//! identical problem files produce byte-identical result files. Timings are
//! recorded only when explicitly requested, so the default output stays
//! reproducible.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use seshadri_core::bsdh::{BsdhVariety, GalleryPoint, ModelCurve};
use seshadri_core::bundle::{self, BundleExpr, PicClass};
use seshadri_core::error::Error;
use seshadri_core::rootsys::RootSystem;
use seshadri_core::weyl::{WeylElement, Word};
use seshadri_core::wonderful::{self, InvolutionSpec, RestrictionTable, SymmetricSpaceData};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Bsdh,
    Wonderful,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum InvolutionField {
    Shortcut(String),
    Matrix(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum PointField {
    /// Gallery bit-string, e.g. `"010"`.
    Bits(String),
    /// Weyl word, e.g. `[1, 2]`.
    WeylWord(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OpName {
    Nef,
    Ample,
    Seshadri,
    Curves,
    GkmGraph,
    Classes,
}

impl OpName {
    pub fn as_str(self) -> &'static str {
        match self {
            OpName::Nef => "nef",
            OpName::Ample => "ample",
            OpName::Seshadri => "seshadri",
            OpName::Curves => "curves",
            OpName::GkmGraph => "gkm-graph",
            OpName::Classes => "classes",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Query {
    pub op: OpName,
    #[serde(default)]
    pub point: Option<PointField>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub root_system: String,
    pub mode: Mode,
    #[serde(default)]
    pub word: Option<Vec<usize>>,
    #[serde(default)]
    pub involution: Option<InvolutionField>,
    #[serde(default)]
    pub bundle: Option<BundleExpr>,
    #[serde(default)]
    pub queries: Vec<Query>,
}

/// The validated geometry a problem file denotes.
pub enum Loaded {
    Bsdh {
        variety: BsdhVariety,
        bundle: Option<BundleExpr>,
    },
    Wonderful {
        data: SymmetricSpaceData,
        table: Option<RestrictionTable>,
    },
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::schema(format!("problem file: {e}")))
}

/// Builds the geometry and bundle data, reporting schema violations by field.
pub fn load(problem: &ProblemFile) -> Result<Loaded, CliError> {
    let rs = RootSystem::from_type(&problem.root_system).map_err(CliError::from)?;
    match problem.mode {
        Mode::Bsdh => {
            let letters = problem.word.clone().ok_or_else(|| {
                CliError::schema("field \"word\" is required in bsdh mode".into())
            })?;
            if problem.involution.is_some() {
                return Err(CliError::schema(
                    "field \"involution\" is not allowed in bsdh mode".into(),
                ));
            }
            let variety = BsdhVariety::new(rs, Word(letters)).map_err(CliError::from)?;
            Ok(Loaded::Bsdh {
                variety,
                bundle: problem.bundle.clone(),
            })
        }
        Mode::Wonderful => {
            let inv = problem.involution.clone().ok_or_else(|| {
                CliError::schema("field \"involution\" is required in wonderful mode".into())
            })?;
            if problem.word.is_some() {
                return Err(CliError::schema(
                    "field \"word\" is not allowed in wonderful mode".into(),
                ));
            }
            let spec = match inv {
                InvolutionField::Shortcut(s) => InvolutionSpec::Shortcut(s),
                InvolutionField::Matrix(m) => InvolutionSpec::Matrix(m),
            };
            let rows = wonderful::involution_matrix(&rs, &spec).map_err(CliError::from)?;
            let data = wonderful::validate_involution(&rs, &rows).map_err(CliError::from)?;
            let table = match &problem.bundle {
                None => None,
                Some(expr) => Some(table_from_expr(&data, expr)?),
            };
            Ok(Loaded::Wonderful { data, table })
        }
    }
}

// Evaluate a bundle expression over the canonical curve classes. Line leaves
// are rejected: the wonderful side has no intrinsic Picard pairing, so
// degrees must come from tables.
fn table_from_expr(
    data: &SymmetricSpaceData,
    expr: &BundleExpr,
) -> Result<RestrictionTable, CliError> {
    let no_lines = |_: &PicClass| -> seshadri_core::Result<i64> {
        Err(Error::Invalid(
            "wonderful mode has no intrinsic line-class degrees; supply a restriction table".into(),
        ))
    };
    let mut map = BTreeMap::new();
    for class in data.curve_classes() {
        let id = class.kind.id();
        let split = bundle::restrict(expr, &id, &no_lines).map_err(CliError::from)?;
        map.insert(id, split.degrees().to_vec());
    }
    Ok(RestrictionTable::new(map))
}

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub curve: String,
    pub entry: i64,
}

#[derive(Debug, Serialize)]
pub struct CurveOut {
    pub id: String,
    pub tangent: Vec<i64>,
    /// degree of each basis class L_1, …, L_r on this curve
    pub degrees: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct ClassOut {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct MinimalRankOut {
    pub rank_g: usize,
    pub t1_rank: usize,
    pub t2_rank: usize,
    pub levi_span_rank: usize,
    pub t1_matches_levi_span: bool,
    pub degenerate: bool,
}

#[derive(Debug, Serialize)]
pub struct CountsOut {
    pub fixed_points: usize,
    pub curves: usize,
}

#[derive(Debug, Default, Serialize)]
pub struct QueryResult {
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<PointField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seshadri: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gkm_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model_curve_verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curves: Option<Vec<CurveOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_rank: Option<MinimalRankOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<CountsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ResultFile {
    pub results: Vec<QueryResult>,
}

/// Executes one query; the optional DOT text is returned separately so the
/// front end can route it to `--dot`.
pub fn run_query(
    loaded: &Loaded,
    query: &Query,
    timings: bool,
) -> Result<(QueryResult, Option<String>), CliError> {
    let start = Instant::now();
    let (mut result, dot) = dispatch(loaded, query)?;
    if timings {
        result.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok((result, dot))
}

fn dispatch(loaded: &Loaded, query: &Query) -> Result<(QueryResult, Option<String>), CliError> {
    match loaded {
        Loaded::Bsdh { variety, bundle } => bsdh_query(variety, bundle.as_ref(), query),
        Loaded::Wonderful { data, table } => wonderful_query(data, table.as_ref(), query),
    }
}

fn need_bundle(bundle: Option<&BundleExpr>, op: OpName) -> Result<&BundleExpr, CliError> {
    bundle.ok_or_else(|| {
        CliError::schema(format!(
            "op \"{}\" requires the \"bundle\" field",
            op.as_str()
        ))
    })
}

fn bsdh_point(variety: &BsdhVariety, query: &Query) -> Result<GalleryPoint, CliError> {
    match &query.point {
        Some(PointField::Bits(s)) => {
            GalleryPoint::parse(s, variety.length()).map_err(CliError::from)
        }
        Some(PointField::WeylWord(_)) => Err(CliError::schema(
            "bsdh points are bit-strings, not Weyl words".into(),
        )),
        None => Err(CliError::schema(format!(
            "op \"{}\" requires a point (bit-string of length {})",
            query.op.as_str(),
            variety.length()
        ))),
    }
}

fn bsdh_query(
    variety: &BsdhVariety,
    bundle: Option<&BundleExpr>,
    query: &Query,
) -> Result<(QueryResult, Option<String>), CliError> {
    let mut out = QueryResult {
        op: query.op.as_str().to_string(),
        ..Default::default()
    };
    out.point = query.point.clone();
    match query.op {
        OpName::Nef | OpName::Ample => {
            let expr = need_bundle(bundle, query.op)?;
            let verdict = if query.op == OpName::Nef {
                variety.nef_test(expr)
            } else {
                variety.ample_test(expr)
            }
            .map_err(CliError::from)?;
            out.verdict = Some(verdict.holds);
            out.witness = verdict.witness.map(|w| WitnessOut {
                curve: w.curve_id,
                entry: w.entry,
            });
            out.model_curve_verdict = Some(verdict.model_curve_only);
            out.gkm_ok = Some(!verdict.model_curve_only);
            Ok((out, None))
        }
        OpName::Seshadri => {
            let expr = need_bundle(bundle, query.op)?;
            let point = bsdh_point(variety, query)?;
            let value = variety.seshadri(expr, &point).map_err(CliError::from)?;
            out.seshadri = Some(value.value);
            out.model_curve_verdict = Some(value.model_curve_only);
            out.gkm_ok = Some(!value.model_curve_only);
            Ok((out, None))
        }
        OpName::Curves => {
            let curves: Vec<ModelCurve> = match &query.point {
                Some(_) => variety.curves_through(&bsdh_point(variety, query)?),
                None => variety.model_curves().map_err(CliError::from)?,
            };
            let mut rows = Vec::with_capacity(curves.len());
            for c in &curves {
                let degrees = (1..=variety.length())
                    .map(|m| variety.degree_basis(c, m))
                    .collect::<seshadri_core::Result<Vec<i64>>>()
                    .map_err(CliError::from)?;
                let split = match bundle {
                    Some(expr) => Some(
                        variety
                            .split_type(expr, c)
                            .map_err(CliError::from)?
                            .degrees()
                            .to_vec(),
                    ),
                    None => None,
                };
                rows.push(CurveOut {
                    id: c.id(),
                    tangent: variety.tangent_weight(c).coords().to_vec(),
                    degrees,
                    split,
                });
            }
            out.curves = Some(rows);
            out.gkm_ok = Some(variety.gkm_check().map_err(CliError::from)?.ok);
            Ok((out, None))
        }
        OpName::GkmGraph => {
            let dot = variety.gkm_dot().map_err(CliError::from)?;
            out.counts = Some(CountsOut {
                fixed_points: variety.fixed_points().map_err(CliError::from)?.len(),
                curves: variety.model_curves().map_err(CliError::from)?.len(),
            });
            out.gkm_ok = Some(variety.gkm_check().map_err(CliError::from)?.ok);
            Ok((out, Some(dot)))
        }
        OpName::Classes => Err(CliError::schema(
            "op \"classes\" applies to wonderful mode only".into(),
        )),
    }
}

fn wonderful_point(data: &SymmetricSpaceData, query: &Query) -> Result<WeylElement, CliError> {
    match &query.point {
        Some(PointField::WeylWord(letters)) => {
            WeylElement::from_word(data.root_system(), &Word(letters.clone()))
                .map_err(CliError::from)
        }
        Some(PointField::Bits(_)) => Err(CliError::schema(
            "wonderful points are Weyl words, not bit-strings".into(),
        )),
        // the base point z (identity translate) is the canonical default
        None => Ok(WeylElement::identity(data.root_system())),
    }
}

fn wonderful_query(
    data: &SymmetricSpaceData,
    table: Option<&RestrictionTable>,
    query: &Query,
) -> Result<(QueryResult, Option<String>), CliError> {
    let mut out = QueryResult {
        op: query.op.as_str().to_string(),
        ..Default::default()
    };
    out.point = query.point.clone();
    let need_table = || -> Result<&RestrictionTable, CliError> {
        table.ok_or_else(|| {
            CliError::schema(format!(
                "op \"{}\" requires the \"bundle\" field (a restriction table)",
                query.op.as_str()
            ))
        })
    };
    match query.op {
        OpName::Nef | OpName::Ample => {
            let t = need_table()?;
            let verdict = if query.op == OpName::Nef {
                data.nef_test(t)
            } else {
                data.ample_test(t)
            }
            .map_err(CliError::from)?;
            out.verdict = Some(verdict.holds);
            out.witness = verdict.witness.map(|(class, entry)| WitnessOut {
                curve: class,
                entry,
            });
            Ok((out, None))
        }
        OpName::Seshadri => {
            let t = need_table()?;
            let w = wonderful_point(data, query)?;
            out.seshadri = Some(data.seshadri(t, &w).map_err(CliError::from)?);
            Ok((out, None))
        }
        OpName::Classes | OpName::Curves => {
            let classes = match &query.point {
                Some(_) => data.curves_through(&wonderful_point(data, query)?),
                None => data.curve_classes(),
            };
            let rows = classes
                .iter()
                .map(|c| {
                    let id = c.kind.id();
                    let split = table.and_then(|t| t.map.get(&id).cloned());
                    ClassOut { id, split }
                })
                .collect();
            out.classes = Some(rows);
            let report = data.minimal_rank_report();
            out.minimal_rank = Some(MinimalRankOut {
                rank_g: report.rank_g,
                t1_rank: report.t1_rank,
                t2_rank: report.t2_rank,
                levi_span_rank: report.levi_span_rank,
                t1_matches_levi_span: report.t1_matches_levi_span,
                degenerate: report.degenerate,
            });
            Ok((out, None))
        }
        OpName::GkmGraph => Err(CliError::schema(
            "op \"gkm-graph\" applies to bsdh mode only".into(),
        )),
    }
}

/// Queries a subcommand should execute: an explicit `--point` wins, then the
/// file's matching query entries, then a default query for the op.
pub fn select_queries(
    problem: &ProblemFile,
    op: OpName,
    cli_point: Option<PointField>,
) -> Vec<Query> {
    if let Some(point) = cli_point {
        return vec![Query {
            op,
            point: Some(point),
        }];
    }
    let matching: Vec<Query> = problem
        .queries
        .iter()
        .filter(|q| q.op == op)
        .cloned()
        .collect();
    if matching.is_empty() {
        vec![Query { op, point: None }]
    } else {
        matching
    }
}

/// One human-readable line per result.
pub fn human_line(result: &QueryResult) -> String {
    let point = match &result.point {
        Some(PointField::Bits(s)) => format!("({s})"),
        Some(PointField::WeylWord(w)) => {
            if w.is_empty() {
                "(e)".to_string()
            } else {
                format!(
                    "({})",
                    w.iter().map(|i| format!("s{i}")).collect::<String>()
                )
            }
        }
        None => String::new(),
    };
    let tag = if result.model_curve_verdict == Some(true) {
        " [model-curve verdict]"
    } else {
        ""
    };
    if let Some(v) = result.verdict {
        let witness = result
            .witness
            .as_ref()
            .map(|w| format!(" (witness: entry {} on {})", w.entry, w.curve))
            .unwrap_or_default();
        format!("{}{point}: {v}{witness}{tag}", result.op)
    } else if let Some(value) = result.seshadri {
        format!("seshadri{point} = {value}{tag}")
    } else if let Some(curves) = &result.curves {
        let mut lines = vec![format!("curves{point}: {}", curves.len())];
        for c in curves {
            let split = c
                .split
                .as_ref()
                .map(|s| format!(" split={s:?}"))
                .unwrap_or_default();
            lines.push(format!(
                "  {}  tangent={:?}  degrees={:?}{split}",
                c.id, c.tangent, c.degrees
            ));
        }
        lines.join("\n")
    } else if let Some(classes) = &result.classes {
        let mut lines = vec![format!("classes: {}", classes.len())];
        for c in classes {
            let split = c
                .split
                .as_ref()
                .map(|s| format!("  split={s:?}"))
                .unwrap_or_default();
            lines.push(format!("  {}{split}", c.id));
        }
        if let Some(r) = &result.minimal_rank {
            lines.push(format!(
                "  rank(G)={} t1={} t2={} levi-span={} t1-matches-levi={}{}",
                r.rank_g,
                r.t1_rank,
                r.t2_rank,
                r.levi_span_rank,
                r.t1_matches_levi_span,
                if r.degenerate {
                    " [degenerate: σ = id]"
                } else {
                    ""
                }
            ));
        }
        lines.join("\n")
    } else if let Some(counts) = &result.counts {
        format!(
            "gkm-graph: {} fixed points, {} curves, gkm_ok={}",
            counts.fixed_points,
            counts.curves,
            result.gkm_ok.unwrap_or(true)
        )
    } else {
        format!("{}: done", result.op)
    }
}
