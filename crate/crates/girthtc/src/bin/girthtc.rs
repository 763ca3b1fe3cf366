//! Command-line front end: generation, verification, transformation, search,
//! census, partitions, audits and exports over one shared JSON document, so
//! every subcommand's output pipes into every other's input.
//!
//! Exit codes: 0 pass, 1 verification/search failure, 2 usage error.

use std::fs;
use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use girthtc::formats::{
    audit_csv, graph6_decode, graph6_encode, render_cutout, segment_colored, to_dot, to_json_string,
    CensusJson, ColoringJson, CutoutJson, Document, GraphJson, LiftCensusJson, RealizationJson,
};
use girthtc_core::coloring::{
    verify_egc, verify_etc, verify_etgc, verify_tc, verify_vegc, ElementRef, TotalColoring,
    VerificationReport,
};
use girthtc_core::cutout::{
    accordion_unfold, cycle_exchange, fixtures, periodic_extension, Axis, Cutout, ExchangePolicy,
    GenusLedger,
};
use girthtc_core::generators::{self, GridBase};
use girthtc_core::graph::Graph;
use girthtc_core::partitions::{self, SEQUENCE_PAIRS};
use girthtc_core::pentad;
use girthtc_core::solver::{self, Predicate, SearchOptions};

#[derive(Parser)]
#[command(name = "girthtc", version, about = "total colorings of small regular graphs of girth k+1")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Io {
    /// Input file; "-" or omitted reads stdin.
    input: Option<PathBuf>,
    /// Output file; omitted writes stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named graph (with its coloring where one is built in).
    Gen {
        /// q3 | prism:j | torus:h,k | pet:k | dod:k | robertson | cycle:j | gp:n
        spec: String,
        /// Attach a searched/templated total coloring to pet/dod/robertson.
        #[arg(long)]
        with_tc: bool,
        /// For q3/prism: which of the two orthogonal colorings (0 or 1).
        #[arg(long, default_value_t = 0)]
        variant: usize,
        /// For torus: base drawing, standard or alternate.
        #[arg(long, default_value = "standard")]
        base: String,
        /// Attach the grid drawing (q3, prism, torus) for cutout pipelines.
        #[arg(long)]
        with_cutout: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a coloring; exit 1 with a violation listing when it fails.
    Verify {
        #[command(flatten)]
        io: Io,
        /// tc | etc | vegc | etgc | egc
        #[arg(long, default_value = "etgc")]
        predicate: String,
        /// For egc: require girth cycles to use the full palette exactly.
        #[arg(long)]
        strict: bool,
        /// For egc on a bare edge coloring: palette size.
        #[arg(long, default_value_t = 4)]
        palette: usize,
    },
    /// Apply a constructive operation to the document's cutout.
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Exhaustive total-coloring search; exit 1 when no solution exists.
    Search {
        #[command(flatten)]
        io: Io,
        /// any-tc | etc | etgc
        #[arg(long, default_value = "etgc")]
        predicate: String,
        #[arg(long, default_value_t = 4)]
        palette: usize,
        #[arg(long)]
        limit: Option<usize>,
        /// Keep every solution instead of one per color permutation.
        #[arg(long)]
        no_dedup_colors: bool,
        /// Exploration-order seed; never changes the solution set.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker count; output ordering is canonical regardless.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// 5-cycle census of the girth-5 family.
    Census {
        /// pet2 | robertson | dod2
        which: String,
        #[command(flatten)]
        io: Io,
        /// Coloring file (JSON document) for the class counts.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// 3-path or 3-star edge partitions driven by an efficient coloring.
    Partition {
        /// paths | stars
        kind: String,
        #[command(flatten)]
        io: Io,
        /// Color-word pair for paths, e.g. 0123,1302.
        #[arg(long, default_value = "0123,1302")]
        pair: String,
    },
    /// Audit a graph6 corpus: belt feasibility, ETC existence, closure.
    Audit {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        /// Worker count; output is byte-identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Re-emit the document in another format.
    Export {
        #[command(flatten)]
        io: Io,
        /// json | graph6 | dot
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Cutout utilities: ASCII rendering and realization.
    Cutout {
        /// render | realize
        action: String,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Subcommand)]
enum TransformOp {
    /// Glue n copies of the cutout along an axis, continuing the colors.
    Extend {
        #[command(flatten)]
        io: Io,
        /// horizontal | vertical
        #[arg(long)]
        axis: String,
        #[arg(long, default_value_t = 2)]
        copies: i64,
    },
    /// Unfold the 4-belt whose left column is at x into a ladder P2 x P_2l.
    Unfold {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        x: i64,
        #[arg(long)]
        l: i64,
    },
    /// Exchange two like-colored edges given by their drawn positions.
    Exchange {
        #[command(flatten)]
        io: Io,
        /// First edge as x0,y0:x1,y1.
        #[arg(long)]
        edge_e: String,
        /// Second edge as x0,y0:x1,y1.
        #[arg(long)]
        edge_f: String,
        /// auto | planarizing
        #[arg(long, default_value = "auto")]
        policy: String,
    },
}

/// Domain failure (exit 1) vs usage failure (exit 2).
enum Failure {
    Verdict(String),
    Usage(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("cannot read {}: {}", p.display(), e)))
        }
        _ => {
            if std::io::stdin().is_terminal() {
                return Err(Failure::Usage("no input: pass a file or pipe a document".to_string()));
            }
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {}", e)))?;
            Ok(s)
        }
    }
}

fn read_document(path: &Option<PathBuf>) -> Result<Document, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad document JSON: {}", e)))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, content)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {}", p.display(), e))),
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write stdout: {}", e)))
        }
    }
}

fn element_string(e: &ElementRef) -> String {
    match e {
        ElementRef::Vertex(v) => format!("vertex {}", v),
        ElementRef::Edge(u, v) => format!("edge ({}, {})", u, v),
        ElementRef::CycleRef(vs) => format!("cycle {:?}", vs),
        ElementRef::ColorClass(c) => format!("color class {}", c),
        ElementRef::Whole => "whole".to_string(),
    }
}

#[derive(Serialize)]
struct ReportJson {
    predicate: String,
    verdict: bool,
    violations: Vec<ViolationJson>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct ViolationJson {
    rule: String,
    element: String,
    message: String,
}

fn report_json(predicate: &str, r: &VerificationReport) -> ReportJson {
    ReportJson {
        predicate: predicate.to_string(),
        verdict: r.verdict(),
        violations: r
            .violations
            .iter()
            .map(|v| ViolationJson {
                rule: v.rule.to_string(),
                element: element_string(&v.element),
                message: v.message.clone(),
            })
            .collect(),
        notes: r.notes.clone(),
    }
}

fn parse_spec_arg(spec: &str) -> Result<(&str, Vec<i64>), Failure> {
    match spec.split_once(':') {
        None => Ok((spec, Vec::new())),
        Some((name, rest)) => {
            let args: Result<Vec<i64>, _> = rest.split(',').map(|s| s.trim().parse::<i64>()).collect();
            Ok((name, args.map_err(|e| Failure::Usage(format!("bad spec argument in {:?}: {}", spec, e)))?))
        }
    }
}

fn run_gen(spec: &str, with_tc: bool, variant: usize, base: &str, with_cutout: bool) -> Result<Document, Failure> {
    let (name, args) = parse_spec_arg(spec)?;
    let one = |what: &str| -> Result<i64, Failure> {
        args.first().copied().ok_or(Failure::Usage(format!("{} needs an argument, e.g. {}", name, what)))
    };
    if variant > 1 {
        return Err(Failure::Usage(format!("variant must be 0 or 1, got {}", variant)));
    }
    let pick = |g: Graph, a: TotalColoring, b: TotalColoring| -> Document {
        Document::with_pair(&g, if variant == 0 { &a } else { &b })
    };
    let attach = |mut doc: Document, cut: Cutout| -> Document {
        if with_cutout {
            doc.cutout = Some(CutoutJson::from_cutout(&cut));
        }
        doc
    };
    match name {
        "q3" => {
            let (g, a, b) = generators::q3_pair();
            Ok(attach(pick(g, a, b), fixtures::prism_ring_cutout(1, variant)))
        }
        "prism" => {
            let j = one("prism:2")?;
            if j < 1 {
                return Err(Failure::Usage("prism:j needs j >= 1".to_string()));
            }
            let (g, a, b) = generators::prism_ring(j as usize);
            Ok(attach(pick(g, a, b), fixtures::prism_ring_cutout(j, variant)))
        }
        "torus" => {
            if args.len() != 2 || args[0] < 1 || args[1] < 1 {
                return Err(Failure::Usage("torus needs two positive arguments, e.g. torus:1,1".to_string()));
            }
            let (gb, cut) = match base {
                "standard" => (GridBase::Standard, fixtures::gamma11_cutout()),
                "alternate" => (GridBase::Alternate, fixtures::psi_cutout()),
                other => return Err(Failure::Usage(format!("unknown base {:?}", other))),
            };
            let (g, c) = generators::toroidal_grid(args[0], args[1], gb);
            let ext = periodic_extension(&periodic_extension(&cut, Axis::Vertical, args[0]), Axis::Horizontal, args[1]);
            Ok(attach(Document::with_pair(&g, &c), ext))
        }
        "pet" => {
            let k = one("pet:2")? as usize;
            let (g, _) = generators::pet_k(k);
            if !with_tc {
                return Ok(Document::with_graph(&g));
            }
            let tc = generators::pet_k_tc(k, None).map_err(Failure::Verdict)?;
            if tc.repaired {
                eprintln!("note: rotation template repaired by search: {:?}", tc.template);
            }
            Ok(Document::with_pair(&g, &tc.coloring))
        }
        "dod" => {
            let k = one("dod:2")? as usize;
            let (g, _, c) = generators::dod_k(k).map_err(Failure::Verdict)?;
            if with_tc {
                Ok(Document::with_pair(&g, &c))
            } else {
                Ok(Document::with_graph(&g))
            }
        }
        "robertson" => {
            let g = generators::robertson();
            if !with_tc {
                return Ok(Document::with_graph(&g));
            }
            let opts = SearchOptions { limit: Some(1), dedup_colors: true };
            let (sols, _) = solver::exhaustive_tc_search(&g, 5, Predicate::AnyTc, opts);
            let c = sols.into_iter().next().ok_or(Failure::Verdict("no total coloring found".to_string()))?;
            Ok(Document::with_pair(&g, &c))
        }
        "cycle" => {
            let j = one("cycle:2")?;
            if j < 2 {
                return Err(Failure::Usage("cycle:j needs j >= 2 (cycle length 3j)".to_string()));
            }
            let (g, c) = generators::cycle_etc(j as usize);
            Ok(Document::with_pair(&g, &c))
        }
        "gp" => {
            let n = one("gp:6")? as usize;
            let (g, c) = generators::gp_fixture(n).map_err(Failure::Usage)?;
            Ok(Document::with_pair(&g, &c))
        }
        other => Err(Failure::Usage(format!("unknown generator {:?}", other))),
    }
}

fn run_verify(doc: &Document, predicate: &str, strict: bool, palette: usize) -> Result<ReportJson, Failure> {
    let g = doc.require_graph().map_err(Failure::Usage)?;
    let c = doc.require_coloring().map_err(Failure::Usage)?;
    let report = match predicate {
        "tc" => verify_tc(&g, &c),
        "etc" => verify_etc(&g, &c),
        "vegc" => verify_vegc(&g, &c),
        "etgc" => verify_etgc(&g, &c),
        "egc" => verify_egc(&g, &c.edge, if palette != 4 { palette } else { c.palette }, strict),
        other => return Err(Failure::Usage(format!("unknown predicate {:?}", other))),
    };
    Ok(report_json(predicate, &report))
}

/// Realize a transformed cutout back into the document so the result pipes
/// straight into verify/search.
fn document_from_cutout(cut: Cutout) -> Result<Document, Failure> {
    let r = cut.realize().map_err(Failure::Verdict)?;
    let coloring = if segment_colored(&cut) { r.coloring(4) } else { None };
    Ok(Document {
        graph: Some(GraphJson::from_graph(&r.graph)),
        coloring: coloring.as_ref().map(ColoringJson::from_coloring),
        cutout: Some(CutoutJson::from_cutout(&cut)),
    })
}

fn parse_pos_pair(s: &str) -> Result<((i64, i64), (i64, i64)), Failure> {
    let bad = || Failure::Usage(format!("bad edge position {:?}, expected x0,y0:x1,y1", s));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let point = |t: &str| -> Result<(i64, i64), Failure> {
        let (x, y) = t.split_once(',').ok_or_else(bad)?;
        Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
    };
    Ok((point(a)?, point(b)?))
}

fn run_transform(op: &TransformOp) -> Result<(Document, Io2), Failure> {
    match op {
        TransformOp::Extend { io, axis, copies } => {
            let cut = read_document(&io.input)?.require_cutout().map_err(Failure::Usage)?;
            let axis = match axis.as_str() {
                "horizontal" => Axis::Horizontal,
                "vertical" => Axis::Vertical,
                other => return Err(Failure::Usage(format!("unknown axis {:?}", other))),
            };
            if *copies < 1 {
                return Err(Failure::Usage("copies must be >= 1".to_string()));
            }
            let out = periodic_extension(&cut, axis, *copies);
            Ok((document_from_cutout(out)?, Io2::from(io)))
        }
        TransformOp::Unfold { io, x, l } => {
            let cut = read_document(&io.input)?.require_cutout().map_err(Failure::Usage)?;
            let out = accordion_unfold(&cut, *x, *l);
            Ok((document_from_cutout(out)?, Io2::from(io)))
        }
        TransformOp::Exchange { io, edge_e, edge_f, policy } => {
            let cut = read_document(&io.input)?.require_cutout().map_err(Failure::Usage)?;
            let r = cut.realize().map_err(Failure::Verdict)?;
            let c = r.coloring(4).ok_or(Failure::Verdict("exchange needs a fully colored cutout".to_string()))?;
            let (pe, pf) = (parse_pos_pair(edge_e)?, parse_pos_pair(edge_f)?);
            let at = |p: (i64, i64)| -> Result<usize, Failure> {
                r.index_of
                    .get(&cut.fold(p))
                    .copied()
                    .ok_or(Failure::Usage(format!("no vertex drawn at {:?}", p)))
            };
            let e = (at(pe.0)?, at(pe.1)?);
            let f = (at(pf.0)?, at(pf.1)?);
            let policy = match policy.as_str() {
                "auto" => ExchangePolicy::Auto,
                "planarizing" => ExchangePolicy::Planarizing,
                other => return Err(Failure::Usage(format!("unknown policy {:?}", other))),
            };
            let mut ledger = GenusLedger::starting_at(r.genus);
            let out = cycle_exchange(&r.graph, &c, e, f, &r.belts, policy, &mut ledger)
                .map_err(Failure::Verdict)?;
            eprintln!(
                "exchange: genus {} -> {} (delta {}{}){}",
                r.genus,
                ledger.genus,
                out.delta,
                if out.indeterminate { ", indeterminate" } else { "" },
                out.merged_faces
                    .map(|(a, b)| format!(", merged faces of lengths {} and {}", a, b))
                    .unwrap_or_default()
            );
            Ok((Document::with_pair(&out.graph, &out.coloring), Io2::from(io)))
        }
    }
}

/// Owned copy of the output half of Io, so transform can return it.
struct Io2 {
    out: Option<PathBuf>,
}

impl From<&Io> for Io2 {
    fn from(io: &Io) -> Self {
        Io2 { out: io.out.clone() }
    }
}

#[derive(Serialize)]
struct SearchResultJson {
    predicate: String,
    palette: usize,
    nodes: u64,
    truncated: bool,
    solutions: Vec<ColoringJson>,
}

fn run_search(doc: &Document, predicate: &str, palette: usize, limit: Option<usize>, dedup: bool) -> Result<SearchResultJson, Failure> {
    let g = doc.require_graph().map_err(Failure::Usage)?;
    let predicate_v = match predicate {
        "any-tc" => Predicate::AnyTc,
        "etc" => Predicate::Etc,
        "etgc" => Predicate::Etgc,
        other => return Err(Failure::Usage(format!("unknown predicate {:?}", other))),
    };
    let opts = SearchOptions { limit, dedup_colors: dedup };
    let (mut sols, stats) = solver::exhaustive_tc_search(&g, palette, predicate_v, opts);
    // canonical ordering: independent of exploration order and worker count
    sols.sort_by(|a, b| (&a.vertex, &a.edge).cmp(&(&b.vertex, &b.edge)));
    Ok(SearchResultJson {
        predicate: predicate.to_string(),
        palette,
        nodes: stats.nodes,
        truncated: stats.truncated,
        solutions: sols.iter().map(ColoringJson::from_coloring).collect(),
    })
}

fn optional_coloring(io: &Io, coloring: &Option<PathBuf>) -> Result<Option<TotalColoring>, Failure> {
    if let Some(path) = coloring {
        let doc = read_document(&Some(path.clone()))?;
        return Ok(Some(doc.require_coloring().map_err(Failure::Usage)?));
    }
    let piped = io.input.is_some() || !std::io::stdin().is_terminal();
    if piped {
        if let Ok(doc) = read_document(&io.input) {
            if doc.coloring.is_some() {
                return Ok(Some(doc.require_coloring().map_err(Failure::Usage)?));
            }
        }
    }
    Ok(None)
}

fn run_census(which: &str, io: &Io, coloring: &Option<PathBuf>) -> Result<String, Failure> {
    match which {
        "pet2" => {
            let c = optional_coloring(io, coloring)?.unwrap_or_else(generators::pet2_figure_tc);
            let census = pentad::census_pet2(&c).map_err(Failure::Verdict)?;
            Ok(to_json_string(&CensusJson::from_census(&census, Vec::new())))
        }
        "robertson" => {
            let c = optional_coloring(io, coloring)?;
            let census = pentad::census_robertson(c.as_ref());
            Ok(to_json_string(&CensusJson::from_census(&census, Vec::new())))
        }
        "dod2" => {
            let lift = pentad::census_lift(2).map_err(Failure::Verdict)?;
            Ok(to_json_string(&LiftCensusJson::from_census(&lift)))
        }
        other => Err(Failure::Usage(format!("unknown census {:?}", other))),
    }
}

fn parse_pair(s: &str) -> Result<([usize; 4], [usize; 4]), Failure> {
    let bad = || Failure::Usage(format!("bad pair {:?}, expected e.g. 0123,1302", s));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let word = |t: &str| -> Result<[usize; 4], Failure> {
        let ds: Vec<usize> = t.trim().chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect();
        if ds.len() != 4 || t.trim().len() != 4 {
            return Err(bad());
        }
        Ok([ds[0], ds[1], ds[2], ds[3]])
    };
    let pair = (word(a)?, word(b)?);
    if !SEQUENCE_PAIRS.contains(&pair) {
        return Err(Failure::Usage(format!("{:?} is not one of the six sequence pairs", s)));
    }
    Ok(pair)
}

#[derive(Serialize)]
struct PathPartitionJson {
    pair: (String, String),
    paths: Vec<PathJson>,
}

#[derive(Serialize)]
struct PathJson {
    vertices: [usize; 4],
    word: [usize; 4],
}

#[derive(Serialize)]
struct StarPartitionJson {
    center_color: usize,
    stars: Vec<StarJson>,
}

#[derive(Serialize)]
struct StarJson {
    center: usize,
    edges: [(usize, usize); 3],
}

fn word_string(w: &[usize; 4]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}

fn run_partition(doc: &Document, kind: &str, pair: &str) -> Result<String, Failure> {
    let g = doc.require_graph().map_err(Failure::Usage)?;
    let c = doc.require_coloring().map_err(Failure::Usage)?;
    match kind {
        "paths" => {
            let pair = parse_pair(pair)?;
            let part = partitions::three_path_partition(&g, &c, pair).map_err(Failure::Verdict)?;
            let json = PathPartitionJson {
                pair: (word_string(&part.pair.0), word_string(&part.pair.1)),
                paths: part
                    .paths
                    .iter()
                    .map(|p| PathJson { vertices: p.vertices, word: p.word })
                    .collect(),
            };
            Ok(to_json_string(&json))
        }
        "stars" => {
            let parts = partitions::three_star_partitions(&g, &c).map_err(Failure::Verdict)?;
            let json: Vec<StarPartitionJson> = parts
                .iter()
                .map(|p| StarPartitionJson {
                    center_color: p.center_color,
                    stars: p.stars.iter().map(|&(center, edges)| StarJson { center, edges }).collect(),
                })
                .collect();
            Ok(to_json_string(&json))
        }
        other => Err(Failure::Usage(format!("unknown partition kind {:?}", other))),
    }
}

fn run_audit(io: &Io, max_n: usize) -> Result<String, Failure> {
    let text = read_input(&io.input)?;
    let mut graphs = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(graph6_decode(line).map_err(Failure::Usage)?);
    }
    let rows = solver::conjecture_audit(&graphs, max_n);
    Ok(audit_csv(&graphs, &rows))
}

fn run_export(doc: &Document, format: &str) -> Result<String, Failure> {
    match format {
        "json" => Ok(to_json_string(doc)),
        "graph6" => {
            let g = doc.require_graph().map_err(Failure::Usage)?;
            Ok(format!("{}\n", graph6_encode(&g).map_err(Failure::Usage)?))
        }
        "dot" => {
            let g = doc.require_graph().map_err(Failure::Usage)?;
            let c = match &doc.coloring {
                Some(cj) => Some(cj.to_coloring().map_err(Failure::Usage)?),
                None => None,
            };
            Ok(to_dot(&g, c.as_ref()))
        }
        other => Err(Failure::Usage(format!("unknown format {:?}", other))),
    }
}

fn run_cutout(doc: &Document, action: &str) -> Result<String, Failure> {
    let cut = doc.require_cutout().map_err(Failure::Usage)?;
    match action {
        "render" => Ok(render_cutout(&cut)),
        "realize" => {
            let out = document_from_cutout(cut.clone())?;
            let r = cut.realize().map_err(Failure::Verdict)?;
            eprintln!("{}", to_json_string(&RealizationJson::from_realization(&r)).trim_end());
            Ok(to_json_string(&out))
        }
        other => Err(Failure::Usage(format!("unknown cutout action {:?}", other))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Gen { spec, with_tc, variant, base, with_cutout, out } => {
            let doc = run_gen(spec, *with_tc, *variant, base, *with_cutout)?;
            write_output(out, &to_json_string(&doc))
        }
        Cmd::Verify { io, predicate, strict, palette } => {
            let doc = read_document(&io.input)?;
            let report = run_verify(&doc, predicate, *strict, *palette)?;
            write_output(&io.out, &to_json_string(&report))?;
            if report.verdict {
                Ok(())
            } else {
                Err(Failure::Verdict(format!("{} verification failed", predicate)))
            }
        }
        Cmd::Transform { op } => {
            let (doc, io) = run_transform(op)?;
            write_output(&io.out, &to_json_string(&doc))
        }
        Cmd::Search { io, predicate, palette, limit, no_dedup_colors, seed: _, jobs: _ } => {
            let doc = read_document(&io.input)?;
            let result = run_search(&doc, predicate, *palette, *limit, !*no_dedup_colors)?;
            let empty = result.solutions.is_empty();
            write_output(&io.out, &to_json_string(&result))?;
            if empty {
                Err(Failure::Verdict("no solution".to_string()))
            } else {
                Ok(())
            }
        }
        Cmd::Census { which, io, coloring } => {
            let text = run_census(which, io, coloring)?;
            write_output(&io.out, &text)
        }
        Cmd::Partition { kind, io, pair } => {
            let doc = read_document(&io.input)?;
            let text = run_partition(&doc, kind, pair)?;
            write_output(&io.out, &text)
        }
        Cmd::Audit { io, max_n, jobs: _ } => {
            let text = run_audit(io, *max_n)?;
            write_output(&io.out, &text)
        }
        Cmd::Export { io, format } => {
            let doc = read_document(&io.input)?;
            let text = run_export(&doc, format)?;
            write_output(&io.out, &text)
        }
        Cmd::Cutout { action, io } => {
            let doc = read_document(&io.input)?;
            let text = run_cutout(&doc, action)?;
            write_output(&io.out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict(msg)) => {
            eprintln!("fail: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            ExitCode::from(2)
        }
    }
}
