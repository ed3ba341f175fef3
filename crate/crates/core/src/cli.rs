//! Command-line front end. Every subcommand builds a JSON payload from
//! library calls; `--json` prints it (keys sorted), otherwise it is rendered
//! as `key: value` lines with arrays of records shown as aligned tables.

use crate::bpfamily::{bp_analyze, bp_consistency, family4_analyze, Family4Input};
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, hj_expansion, Rational};
use crate::fpgroups::{
    abelianization, count_epimorphisms_to_s3, default_max_cosets, parse_presentation, reidemeister_schreier,
    todd_coxeter, Abelianization, Builder, CosetTable, EnumerationResult, GroupPresentation, Transversal,
};
use crate::leyomdin::{
    conjecture2_scan, conjecture_scan, cyclic_germ_det, ly_det, si_det, wly_det, wly_det_rational,
    wly_intersection_matrix, CyclicGerm, WlyCurveData,
};
use crate::plumbing::{classify_link, det_singularity, solve_self_intersections, PlumbingGraph};
use crate::poly::{
    are_collinear, cremona_push, flex_tangency_points, kummer_pull, parse_poly, strip_monomial_factor, CubeRoot,
    MultiPoly,
};
use crate::quotientsing::{bamboo_weights, normalize, order, resolve_bamboo, CyclicQuotient, NormalizedQuotient};
use crate::wproj::{
    bezout, normalize_weight, parse_triple, quasi_smooth_genus, stratify, vertex_singularities, CremonaParams,
    PointClass, Weight3,
};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use std::ops::RangeInclusive;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub payload: Value,
    pub text: String,
    pub exit_code: i32,
}

#[derive(Parser, Debug)]
#[command(name = "wpsing", version, about = "Weighted projective curves, surface singularities and their groups")]
struct Cli {
    /// Machine-readable output with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Hirzebruch-Jung expansion of d/a and the bamboo determinant.
    Hj {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        a: i64,
    },
    /// Normalize and resolve a cyclic quotient singularity.
    Quotient {
        #[arg(long)]
        sing: String,
    },
    /// Normalization, vertex singularities and strata of a weight.
    Weight {
        #[arg(long)]
        w: String,
    },
    /// Weighted Bezout number deg1*deg2/(e1e2e3).
    Bezout {
        #[arg(long)]
        deg1: u64,
        #[arg(long)]
        deg2: u64,
        #[arg(long)]
        w: String,
    },
    /// Genus of a quasi-smooth curve for a pairwise coprime weight.
    Genus {
        #[arg(long)]
        deg: i64,
        #[arg(long)]
        eta: String,
    },
    /// Push a polynomial through the weighted Cremona map.
    Cremona {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Polynomial expression or path to a file holding one.
        #[arg(long)]
        poly: String,
    },
    /// Pull a polynomial back by the Kummer cover.
    Kummer {
        #[arg(long)]
        d: String,
        #[arg(long)]
        poly: String,
    },
    /// Tangency points of H_lambda with the axes and their collinearity.
    Flexes {
        #[arg(long, default_value = "1")]
        lambda: String,
    },
    /// Determinant and link type of a plumbing graph in JSON.
    DetGraph { file: String },
    /// Determinant of a superisolated singularity.
    SiDet {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        deltas: String,
    },
    /// Determinant of a Le-Yomdin singularity.
    LyDet {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        deltas: String,
        #[arg(long, default_value = "")]
        germ_dets: String,
    },
    /// Determinant of a weighted Le-Yomdin singularity.
    WlyDet(WlyArgs),
    /// Exceptional intersection matrix of a weighted Le-Yomdin singularity.
    WlyMatrix(WlyArgs),
    /// Determinants of z^k = x^a + y^b for one k or a range K1..K2.
    CyclicDet {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        k: String,
    },
    /// Brieskorn-Pham analysis of x^n1 + y^n2 + z^n3.
    Bp {
        #[arg(long)]
        n: String,
    },
    /// The four-variable complete intersection family.
    Family4 {
        #[arg(long)]
        n: String,
        #[arg(long)]
        b2: String,
        #[arg(long)]
        b3: String,
        #[arg(long)]
        dq_scan: Option<String>,
    },
    /// Period and per-residue fits of k -> det(z^k = x^a + y^b).
    ConjectureScan {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 60)]
        kmax: u64,
    },
    /// Bounded search for Le-Yomdin data with determinant 1 and k > 1.
    Conjecture2Scan {
        #[arg(long, default_value_t = 8)]
        bound: u64,
    },
    /// Finitely presented groups: `group <builder> [action]` or `group --pres "<..>" [action]`.
    Group(GroupArgs),
}

#[derive(clap::Args, Debug)]
struct WlyArgs {
    #[arg(long)]
    w: String,
    #[arg(long)]
    k: u64,
    #[arg(long)]
    d: u64,
    /// Axes contained in the tangent cone, e.g. `1,0,1`.
    #[arg(long, default_value = "0,0,0")]
    eps: String,
    #[arg(long)]
    deltas: String,
    #[arg(long, default_value = "")]
    germ_dets: String,
}

#[derive(clap::Args, Debug)]
struct GroupArgs {
    /// Builder name (unless --pres is given) followed by the action:
    /// show, abelianization, order, rs, s3-count.
    args: Vec<String>,
    #[arg(long)]
    pres: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    /// Exponent A of pres_odd.
    #[arg(long)]
    a: Option<u64>,
    /// Orbifold indices d1,d2,d3.
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    /// Order of the cyclic group.
    #[arg(long)]
    n: Option<u64>,
    /// For `rs`: kernel of a map onto Z/2.
    #[arg(long)]
    index_2: bool,
    /// Generators sent to the nontrivial element (default: the first).
    #[arg(long)]
    map: Option<String>,
    #[arg(long, value_parser = ["forward", "reversed"], default_value = "forward")]
    transversal: String,
    #[arg(long)]
    max_cosets: Option<usize>,
}

/// Run with `argv[0]` the program name.
pub fn run(argv: &[String]) -> CommandResult {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandResult { payload: json!({ "error": e.to_string() }), text: e.to_string(), exit_code: code };
        }
    };
    match dispatch(&cli.cmd) {
        Ok(payload) => {
            let text = if cli.json { to_json_text(&payload) } else { render(&payload) };
            CommandResult { payload, text, exit_code: 0 }
        }
        Err(e) => {
            let payload = json!({ "error": e.to_string(), "exit_code": e.exit_code() });
            let text = if cli.json { to_json_text(&payload) } else { format!("error: {e}") };
            CommandResult { payload, text, exit_code: e.exit_code() }
        }
    }
}

fn to_json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn big(n: &BigInt) -> Value {
    n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn list_u64(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::arg(format!("not a nonnegative integer: {t:?}"))))
        .collect()
}

fn fixed<const N: usize>(s: &str) -> Result<[u64; N]> {
    let v = list_u64(s)?;
    v.clone()
        .try_into()
        .map_err(|_| Error::arg(format!("expected {N} comma-separated integers, got {s:?}")))
}

/// `K` or `K1..K2`, both ends included.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::arg(format!("bad range {s:?}")));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Error::arg(format!("empty range {s:?}")));
            }
            Ok(a..=b)
        }
        None => {
            let k = num(s)?;
            Ok(k..=k)
        }
    }
}

/// Inline expression, or the contents of a file of that name.
fn read_poly(arg: &str) -> Result<MultiPoly> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::arg(format!("cannot read {arg}: {e}")))?;
        parse_poly(text.trim())
    } else {
        parse_poly(arg)
    }
}

fn poly_summary(f: &MultiPoly, weights: &[u64]) -> Result<Value> {
    let (stripped, factor) = strip_monomial_factor(f)?;
    Ok(json!({
        "poly": f.to_string(),
        "terms": f.num_terms(),
        "weights": weights,
        "weighted_degree": f.weighted_homogeneous_degree(weights)?,
        "monomial_factor": factor,
        "stripped": stripped.to_string(),
    }))
}

fn dispatch(cmd: &Cmd) -> Result<Value> {
    match cmd {
        Cmd::Hj { d, a } => {
            let expansion = hj_expansion(*d, *a)?;
            let g = resolve_bamboo(&NormalizedQuotient::new(*d as u64, *a as u64)?)?;
            Ok(json!({ "d": d, "a": a, "expansion": expansion, "det": big(&det_singularity(&g)?) }))
        }
        Cmd::Quotient { sing } => {
            let s: CyclicQuotient = sing.parse()?;
            let n = normalize(&s);
            let mut out = json!({
                "input": s.to_string(),
                "normalized": n.to_string(),
                "order": order(&s),
                "smooth": n.is_smooth(),
            });
            if !n.is_smooth() {
                let g = resolve_bamboo(&n)?;
                out["bamboo"] = json!(bamboo_weights(&n)?);
                out["det"] = big(&det_singularity(&g)?);
                out["dual"] = json!(n.dual().to_string());
            }
            Ok(out)
        }
        Cmd::Weight { w } => {
            let w: Weight3 = w.parse()?;
            let nw = normalize_weight(&w);
            let verts = vertex_singularities(nw.alpha)?;
            let strata = stratify(&w);
            let rows: Vec<Value> = strata
                .strata
                .iter()
                .map(|s| {
                    json!({
                        "stratum": format!("{:?}", s.label),
                        "members": s.members.iter().map(|m| format!("{m:?}")).collect::<Vec<_>>().join(" "),
                        "germ": s.germ.to_string(),
                    })
                })
                .collect();
            let names = ["P_x", "P_y", "P_z"];
            let vs: Map<String, Value> = names
                .iter()
                .zip(&verts)
                .map(|(n, q)| (n.to_string(), json!(normalize(q).to_string())))
                .collect();
            let torus: Vec<String> = PointClass::ALL
                .iter()
                .filter(|p| strata.label_of(**p).is_some_and(|l| format!("{l:?}") == "T"))
                .map(|p| format!("{p:?}"))
                .collect();
            Ok(json!({
                "weight": w.to_string(),
                "d": nw.d,
                "alpha": nw.alpha,
                "vertex_singularities": vs,
                "in_torus_stratum": torus,
                "rows": rows,
            }))
        }
        Cmd::Bezout { deg1, deg2, w } => {
            let w: Weight3 = w.parse()?;
            Ok(json!({ "deg1": deg1, "deg2": deg2, "weight": w.to_string(), "bezout": rat(&bezout(*deg1, *deg2, &w)) }))
        }
        Cmd::Genus { deg, eta } => {
            let eta = parse_triple(eta)?;
            vertex_singularities(eta)?;
            Ok(json!({ "deg": deg, "eta": eta, "genus": rat(&quasi_smooth_genus(*deg, eta)) }))
        }
        Cmd::Cremona { alpha, beta, poly } => {
            let cp = CremonaParams::parse(alpha, beta)?;
            let f = read_poly(poly)?;
            let pushed = cremona_push(&f, &cp)?;
            Ok(json!({
                "alpha": cp.alpha,
                "beta": cp.beta,
                "degree_unit": cp.degree_unit(),
                "input": f.to_string(),
                "input_degree": f.total_degree(),
                "push": poly_summary(&pushed, &cp.alpha)?,
            }))
        }
        Cmd::Kummer { d, poly } => {
            let d = parse_triple(d)?;
            let f = read_poly(poly)?;
            let pulled = kummer_pull(&f, d)?;
            let w = [d[1] * d[2], d[0] * d[2], d[0] * d[1]];
            Ok(json!({ "d": d, "input": f.to_string(), "pull": poly_summary(&pulled, &w)? }))
        }
        Cmd::Flexes { lambda } => {
            let l: CubeRoot = lambda.parse()?;
            let pts = flex_tangency_points(l)?;
            let show: Vec<String> = pts.iter().map(|p| format!("[{}:{}:{}]", p[0], p[1], p[2])).collect();
            let collinear = are_collinear(&pts[0], &pts[1], &pts[2])?;
            Ok(json!({ "lambda": lambda, "points": show, "collinear": collinear }))
        }
        Cmd::DetGraph { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::arg(format!("cannot read {file}: {e}")))?;
            let mut g = PlumbingGraph::from_json(&text)?;
            let solved = g.vertices.iter().any(|v| v.self_intersection.is_none());
            if solved {
                g = solve_self_intersections(&g)?;
            }
            let c = classify_link(&g)?;
            Ok(json!({
                "vertices": g.vertices.len(),
                "solved_self_intersections": solved,
                "self_intersections": g.vertices.iter().map(|v| rat(v.self_intersection.as_ref().expect("known"))).collect::<Vec<_>>(),
                "det": big(&c.torsion_order),
                "rank_h1": c.rank_h1,
                "qhs": c.is_qhs,
                "zhs": c.is_zhs,
            }))
        }
        Cmd::SiDet { d, deltas } => {
            let deltas = list_u64(deltas)?;
            Ok(json!({ "d": d, "deltas": deltas, "det": big(&si_det(*d, &deltas)?) }))
        }
        Cmd::LyDet { d, k, deltas, germ_dets } => {
            let deltas = list_u64(deltas)?;
            let germs = list_u64(germ_dets)?;
            Ok(json!({ "d": d, "k": k, "deltas": deltas, "germ_dets": germs, "det": big(&ly_det(*d, *k, &deltas, &germs)?) }))
        }
        Cmd::WlyDet(a) => {
            let data = wly_data(a)?;
            let det = wly_det(&data)?;
            Ok(json!({ "weight": data.weight.to_string(), "k": data.k, "d": data.d, "det": big(&det) }))
        }
        Cmd::WlyMatrix(a) => {
            let data = wly_data(a)?;
            let m = wly_intersection_matrix(&data);
            let rows: Vec<Vec<Value>> = m.to_rows().iter().map(|r| r.iter().map(rat).collect()).collect();
            Ok(json!({ "weight": data.weight.to_string(), "matrix": rows, "det_closed_form": rat(&wly_det_rational(&data)) }))
        }
        Cmd::CyclicDet { a, b, k } => {
            let rows: Vec<Value> = parse_range(k)?
                .map(|k| {
                    let g = cyclic_germ_det(&CyclicGerm { a: *a, b: *b, k })?;
                    Ok(json!({ "k": k, "det": big(&g.det), "genus": g.exceptional_genus, "qhs": g.is_qhs }))
                })
                .collect::<Result<_>>()?;
            Ok(json!({ "a": a, "b": b, "rows": rows }))
        }
        Cmd::Bp { n } => {
            let [n1, n2, n3] = parse_triple(n)?;
            let a = bp_analyze(n1, n2, n3)?;
            let mut v = serde_json::to_value(&a).expect("analysis serializes");
            v["zhs"] = json!(a.is_zhs);
            v["qhs"] = json!(a.is_qhs);
            v["consistent"] = json!(bp_consistency(n1, n2, n3)?);
            if let Value::Object(m) = &mut v {
                m.remove("is_zhs");
                m.remove("is_qhs");
            }
            Ok(v)
        }
        Cmd::Family4 { n, b2, b3, dq_scan } => {
            let input = Family4Input { n: fixed(n)?, b2: fixed(b2)?, b3: fixed(b3)? };
            let f = family4_analyze(&input)?;
            let mut v = json!({
                "n": input.n,
                "b2": input.b2,
                "b3": input.b3,
                "pairwise_coprime": f.pairwise_coprime,
                "b": f.b,
                "m": f.m,
                "b2_prime": big(&f.b2_prime),
                "b3_prime": big(&f.b3_prime),
                "N1": big(&f.n1_mult),
                "N2": big(&f.n2_mult),
                "det_closed": f.det_closed.as_ref().map(big),
                "det_remark": rat(&f.det_remark),
                "e1_components": f.e1_components,
                "genus_e1": rat(&f.genus_e1),
                "genus_e2": rat(&f.genus_e2),
                "zhs": f.is_zhs,
            });
            if let Some(r) = dq_scan {
                let rows: Vec<Value> = f
                    .dq_scan(parse_range(r)?)?
                    .into_iter()
                    .map(|(dq, det)| {
                        json!({ "dq": dq, "det": big(&det), "a1": rat(&f.a1(dq)), "a2": rat(&f.a2(dq)) })
                    })
                    .collect();
                v["rows"] = Value::Array(rows);
            }
            Ok(v)
        }
        Cmd::ConjectureScan { a, b, kmax } => {
            let s = conjecture_scan(*a, *b, *kmax)?;
            let rows: Vec<Value> = s
                .fits
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "residue": i + 1,
                        "degree": c.len() - 1,
                        "coefficients": c.iter().map(format_rational).collect::<Vec<_>>().join(" "),
                    })
                })
                .collect();
            Ok(json!({
                "a": a,
                "b": b,
                "kmax": kmax,
                "period": s.period,
                "lcm_ab": s.lcm_ab,
                "verdict": if s.consistent { "consistent" } else { "inconsistent" },
                "values": s.values.iter().map(big).collect::<Vec<_>>(),
                "rows": rows,
            }))
        }
        Cmd::Conjecture2Scan { bound } => {
            let r = conjecture2_scan(*bound)?;
            Ok(json!({
                "bound": r.bound,
                "examined": r.examined,
                "counterexamples": r.candidates.len(),
                "rows": serde_json::to_value(&r.candidates).expect("candidates serialize"),
            }))
        }
        Cmd::Group(g) => group(g),
    }
}

fn wly_data(a: &WlyArgs) -> Result<WlyCurveData> {
    let w: Weight3 = a.w.parse()?;
    let eps = fixed::<3>(&a.eps)?;
    if eps.iter().any(|&e| e > 1) {
        return Err(Error::arg("eps entries must be 0 or 1"));
    }
    WlyCurveData::new(w, a.k, a.d, eps.map(|e| e == 1), list_u64(&a.deltas)?, list_u64(&a.germ_dets)?)
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::arg(format!("missing --{what}")))
}

fn builder(name: &str, g: &GroupArgs) -> Result<Builder> {
    let cremona = || CremonaParams::parse(g.alpha.as_deref().unwrap_or("1,1,1"), g.beta.as_deref().unwrap_or("1,1"));
    Ok(match name {
        "grupo_p2" => Builder::GrupoP2,
        "cubic_quotient" => Builder::CubicQuotient(cremona()?),
        "pres1" => Builder::Pres1(cremona()?),
        "pres_odd" => Builder::PresOdd(need(g.a, "a")?),
        "conic" => Builder::Conic,
        "conic_quotient" => Builder::ConicQuotient(cremona()?),
        "conic_simplified" => Builder::ConicSimplified(cremona()?),
        "orbifold" => Builder::Orbifold(fixed(g.d.as_deref().ok_or_else(|| Error::arg("missing --d"))?)?),
        "triangle" => Builder::Triangle(need(g.p, "p")?, need(g.q, "q")?, need(g.r, "r")?),
        "quartic" => Builder::Quartic,
        "cyclic" => Builder::Cyclic(need(g.n, "n")?),
        other => return Err(Error::arg(format!("unknown builder {other:?}"))),
    })
}

fn abel_json(a: &Abelianization) -> Value {
    json!({
        "invariants": a.to_string(),
        "torsion": a.torsion.iter().map(big).collect::<Vec<_>>(),
        "free_rank": a.free_rank,
        "order": a.order().as_ref().map(big),
    })
}

fn group(g: &GroupArgs) -> Result<Value> {
    let (pres, action): (GroupPresentation, &str) = match (&g.pres, g.args.as_slice()) {
        (Some(text), []) => (parse_presentation(text)?, "show"),
        (Some(text), [action]) => (parse_presentation(text)?, action),
        (None, [name]) => (builder(name, g)?.presentation()?, "show"),
        (None, [name, action]) => (builder(name, g)?.presentation()?, action),
        _ => return Err(Error::arg("usage: group <builder|--pres TEXT> [show|abelianization|order|rs|s3-count]")),
    };
    let max = g.max_cosets.unwrap_or_else(default_max_cosets);
    let mut out = json!({ "presentation": pres.to_string() });
    match action {
        "show" => {
            out["generators"] = json!(pres.generators());
            out["relators"] = json!(pres.relators().iter().map(|r| pres.show_word(r)).collect::<Vec<_>>());
        }
        "abelianization" => out["abelianization"] = abel_json(&abelianization(&pres)),
        "order" => match todd_coxeter(&pres, &[], max)? {
            EnumerationResult::Finished { index, .. } => out["order"] = json!(index),
            EnumerationResult::BudgetExceeded { cosets_used } => return Err(Error::Budget(cosets_used)),
        },
        "s3-count" => out["s3_epimorphisms"] = json!(count_epimorphisms_to_s3(&pres)?),
        "rs" => {
            if !g.index_2 {
                return Err(Error::arg("rs needs --index-2"));
            }
            let flips: Vec<bool> = match &g.map {
                None => (0..pres.ngens()).map(|i| i == 0).collect(),
                Some(m) => {
                    let names: Vec<&str> = m.split(',').map(str::trim).collect();
                    if let Some(bad) = names.iter().find(|n| pres.generator_index(n).is_none()) {
                        return Err(Error::arg(format!("unknown generator {bad:?} in --map")));
                    }
                    pres.generators().iter().map(|x| names.contains(&x.as_str())).collect()
                }
            };
            let table = CosetTable::index2_kernel(&pres, &flips)?;
            let order = if g.transversal == "reversed" { Transversal::Reversed } else { Transversal::Forward };
            let sub = reidemeister_schreier(&pres, &table, order)?;
            out["subgroup"] = json!(sub.to_string());
            out["subgroup_generators"] = json!(sub.ngens());
            out["abelianization"] = abel_json(&abelianization(&sub));
        }
        other => return Err(Error::arg(format!("unknown group action {other:?}"))),
    }
    Ok(out)
}

/// Plain-text rendering: scalars as `key: value`, the `rows` array as an
/// aligned table after the other keys.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(m) = v else { return scalar(v) };
    for (k, x) in m {
        if k != "rows" {
            flatten(k, x, &mut out);
        }
    }
    if let Some(Value::Array(rows)) = m.get("rows") {
        out.push_str(&table(rows));
    }
    out.trim_end().to_string()
}

fn flatten(key: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&format!("{key}.{k}"), x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{key}[{i}]"), x, out);
            }
        }
        _ => out.push_str(&format!("{key}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            xs.iter().map(scalar).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else { return String::new() };
    let cols: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c.as_str()).map(scalar).unwrap_or_default()).collect())
        .collect();
    let width: Vec<usize> = (0..cols.len())
        .map(|i| cells.iter().map(|r| r[i].len()).chain([cols[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |items: Vec<&str>| {
        items
            .iter()
            .zip(&width)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(cols.iter().map(|c| c.as_str()).collect());
    out.push('\n');
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
