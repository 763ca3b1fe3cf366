//! File formats: JSON documents for graphs, colorings and cutouts, graph6
//! codec, DOT and CSV emitters, and the ASCII cutout renderer.
//!
//! Every emitter is deterministic: identical inputs give byte-identical
//! output, so the formats are safe to diff and to pin in tests.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use girthtc_core::coloring::TotalColoring;
use girthtc_core::cutout::{Cutout, Identification, Realization, Segment};
use girthtc_core::graph::{ekey, Graph};
use girthtc_core::pentad::{ClassCounts, CycleCensus, LiftCensus};
use girthtc_core::solver::AuditRow;

// ---------------------------------------------------------------------------
// JSON schemas

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Sorted pairs with u < v.
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n, labels: g.labels.clone(), edges: g.edges() }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(format!("{} labels for {} vertices", labels.len(), self.n));
            }
        }
        for &(u, v) in &self.edges {
            if u >= v || v >= self.n {
                return Err(format!("bad edge ({}, {}): need u < v < n", u, v));
            }
        }
        let mut g = Graph::from_edges(self.n, &self.edges);
        g.labels = self.labels.clone();
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringJson {
    pub palette: usize,
    pub vertex_colors: Vec<usize>,
    /// Triples (u, v, color) sorted by edge key.
    pub edge_colors: Vec<(usize, usize, usize)>,
}

impl ColoringJson {
    pub fn from_coloring(c: &TotalColoring) -> Self {
        ColoringJson {
            palette: c.palette,
            vertex_colors: c.vertex.clone(),
            edge_colors: c.edge.iter().map(|(&(u, v), &col)| (u, v, col)).collect(),
        }
    }

    pub fn to_coloring(&self) -> Result<TotalColoring, String> {
        let mut edge = BTreeMap::new();
        for &(u, v, col) in &self.edge_colors {
            if edge.insert(ekey(u, v), col).is_some() {
                return Err(format!("duplicate edge color for ({}, {})", u, v));
            }
        }
        Ok(TotalColoring::new(self.palette, self.vertex_colors.clone(), edge))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentificationJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<i64>,
}

impl IdentificationJson {
    pub fn from_ident(i: Identification) -> Self {
        let (kind, shift) = match i {
            Identification::Plane => ("plane", None),
            Identification::CylinderHorizontal => ("cylinder-horizontal", None),
            Identification::CylinderVertical => ("cylinder-vertical", None),
            Identification::Torus => ("torus", None),
            Identification::TorusTiltedX { shift } => ("torus-tilted-x", Some(shift)),
            Identification::TorusTiltedY { shift } => ("torus-tilted-y", Some(shift)),
        };
        IdentificationJson { kind: kind.to_string(), shift }
    }

    pub fn to_ident(&self) -> Result<Identification, String> {
        let shift = || self.shift.ok_or_else(|| format!("identification {} needs a shift", self.kind));
        Ok(match self.kind.as_str() {
            "plane" => Identification::Plane,
            "cylinder-horizontal" => Identification::CylinderHorizontal,
            "cylinder-vertical" => Identification::CylinderVertical,
            "torus" => Identification::Torus,
            "torus-tilted-x" => Identification::TorusTiltedX { shift: shift()? },
            "torus-tilted-y" => Identification::TorusTiltedY { shift: shift()? },
            other => return Err(format!("unknown identification kind {:?}", other)),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutoutVertexJson {
    pub x: i64,
    pub y: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutoutSegmentJson {
    pub from: (i64, i64),
    pub to: (i64, i64),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutoutJson {
    pub width: i64,
    pub height: i64,
    pub identification: IdentificationJson,
    pub vertices: Vec<CutoutVertexJson>,
    pub segments: Vec<CutoutSegmentJson>,
}

impl CutoutJson {
    pub fn from_cutout(c: &Cutout) -> Self {
        CutoutJson {
            width: c.width,
            height: c.height,
            identification: IdentificationJson::from_ident(c.ident),
            vertices: c
                .vertices
                .iter()
                .map(|(&(x, y), &color)| CutoutVertexJson { x, y, color })
                .collect(),
            segments: c
                .segments
                .iter()
                .map(|s| CutoutSegmentJson { from: s.from, to: s.to, color: s.color })
                .collect(),
        }
    }

    pub fn to_cutout(&self) -> Result<Cutout, String> {
        let mut cut = Cutout::new(self.width, self.height, self.identification.to_ident()?);
        for v in &self.vertices {
            cut.put((v.x, v.y), v.color);
        }
        for s in &self.segments {
            cut.seg(s.from, s.to, s.color);
        }
        Ok(cut)
    }
}

/// The one document every subcommand reads and writes: any subset of a
/// graph, a coloring of it, and a drawing, so pipes always compose.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutout: Option<CutoutJson>,
}

impl Document {
    pub fn with_graph(g: &Graph) -> Self {
        Document { graph: Some(GraphJson::from_graph(g)), ..Default::default() }
    }

    pub fn with_pair(g: &Graph, c: &TotalColoring) -> Self {
        Document {
            graph: Some(GraphJson::from_graph(g)),
            coloring: Some(ColoringJson::from_coloring(c)),
            ..Default::default()
        }
    }

    pub fn require_graph(&self) -> Result<Graph, String> {
        self.graph.as_ref().ok_or("document has no graph".to_string())?.to_graph()
    }

    pub fn require_coloring(&self) -> Result<TotalColoring, String> {
        self.coloring.as_ref().ok_or("document has no coloring".to_string())?.to_coloring()
    }

    pub fn require_cutout(&self) -> Result<Cutout, String> {
        self.cutout.as_ref().ok_or("document has no cutout".to_string())?.to_cutout()
    }
}

/// Pretty JSON with a trailing newline, the only JSON shape the CLI emits.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// graph6

/// Encode in standard graph6 (small-n form, at most 62 vertices).
pub fn graph6_encode(g: &Graph) -> Result<String, String> {
    if g.n > 62 {
        return Err(format!("graph6 small form holds at most 62 vertices, got {}", g.n));
    }
    let mut bits: Vec<bool> = Vec::new();
    for v in 1..g.n {
        for u in 0..v {
            bits.push(g.adjacent(u, v));
        }
    }
    let mut out = String::new();
    out.push((g.n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}

pub fn graph6_decode(s: &str) -> Result<Graph, String> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err("empty graph6 string".to_string());
    }
    if bytes[0] < 63 || bytes[0] > 63 + 62 {
        return Err(format!("unsupported graph6 header byte {}", bytes[0]));
    }
    let n = (bytes[0] - 63) as usize;
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(format!("graph6 body length {} for n = {}, expected {}", bytes.len() - 1, n, need));
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &b in &bytes[1..] {
        if !(63..127).contains(&b) {
            return Err(format!("graph6 body byte {} out of range", b));
        }
        let v = b - 63;
        for i in (0..6).rev() {
            bits.push(v >> i & 1 == 1);
        }
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// DOT

/// Palette colors in DOT: 0 red, 1 blue, 2 hazel, 3 black, 4 green.
pub const DOT_COLORS: [&str; 5] = ["red", "blue", "#8E7618", "black", "green"];

fn dot_color(c: usize) -> String {
    DOT_COLORS.get(c).map(|s| s.to_string()).unwrap_or_else(|| format!("/set19/{}", c + 1))
}

/// Undirected DOT, one edge per line, stable ordering; the coloring, when
/// given, becomes color attributes on vertices and edges.
pub fn to_dot(g: &Graph, c: Option<&TotalColoring>) -> String {
    let mut out = String::from("graph girthtc {\n  node [shape=circle];\n");
    for v in 0..g.n {
        let mut attrs: Vec<String> = Vec::new();
        if let Some(labels) = &g.labels {
            attrs.push(format!("label=\"{}\"", labels[v]));
        }
        if let Some(c) = c {
            attrs.push(format!("color=\"{}\"", dot_color(c.vertex[v])));
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {};\n", v));
        } else {
            out.push_str(&format!("  {} [{}];\n", v, attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        match c {
            Some(c) => out.push_str(&format!(
                "  {} -- {} [color=\"{}\"];\n",
                u,
                v,
                dot_color(c.edge_color(u, v))
            )),
            None => out.push_str(&format!("  {} -- {};\n", u, v)),
        }
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// audit CSV

/// Fixed columns: graph6 string, vertex count, then the three audit flags.
/// Graphs above the audit size bound keep their row with empty flags.
pub fn audit_csv(graphs: &[Graph], rows: &[AuditRow]) -> String {
    assert_eq!(graphs.len(), rows.len());
    let mut out = String::from("graph,n,belts_ok,etc_exists,in_closure\n");
    for (g, row) in graphs.iter().zip(rows) {
        let g6 = graph6_encode(g).unwrap_or_else(|_| format!(">{}", g.n));
        if row.skipped {
            out.push_str(&format!("{},{},,,\n", g6, row.n));
        } else {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                g6, row.n, row.belts_ok, row.etc_exists, row.in_closure
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// census JSON

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassCountsJson {
    pub fully_bijective: usize,
    pub edge_only: usize,
    pub vertex_only: usize,
    pub neither: usize,
}

impl ClassCountsJson {
    fn from_counts(c: &ClassCounts) -> Self {
        ClassCountsJson {
            fully_bijective: c.fully_bijective,
            edge_only: c.edge_only,
            vertex_only: c.vertex_only,
            neither: c.neither,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusJson {
    pub total: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub by_type: Option<[usize; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassCountsJson>,
    /// Triples (u, v, number of 5-cycles through the edge).
    pub per_edge: Vec<(usize, usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CensusJson {
    pub fn from_census(c: &CycleCensus, notes: Vec<String>) -> Self {
        CensusJson {
            total: c.total,
            by_type: c.by_type,
            classes: c.classes.as_ref().map(ClassCountsJson::from_counts),
            per_edge: c.per_edge.iter().map(|(&(u, v), &k)| (u, v, k)).collect(),
            notes,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftCensusJson {
    pub base_total: usize,
    pub doubled: usize,
    pub ten_cycles: usize,
    pub lifted_total: usize,
    pub classes: ClassCountsJson,
}

impl LiftCensusJson {
    pub fn from_census(c: &LiftCensus) -> Self {
        LiftCensusJson {
            base_total: c.base_total,
            doubled: c.doubled,
            ten_cycles: c.ten_cycles,
            lifted_total: c.lifted_total,
            classes: ClassCountsJson::from_counts(&c.classes),
        }
    }
}

// ---------------------------------------------------------------------------
// ASCII cutout rendering

/// Draw the grid the way the displays print it: large digits for vertex
/// colors, small digits beside the segments, `*` for uncolored elements.
pub fn render_cutout(cut: &Cutout) -> String {
    const CW: usize = 6; // columns per grid step
    const RH: usize = 2; // rows per grid step
    let color_char = |c: Option<usize>| match c {
        Some(c) if c < 10 => (b'0' + c as u8) as char,
        Some(_) => '#',
        None => '*',
    };

    let mut min_x = i64::MAX;
    let mut max_x = i64::MIN;
    let mut min_y = i64::MAX;
    let mut max_y = i64::MIN;
    let mut extend = |(x, y): (i64, i64)| {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    };
    for &p in cut.vertices.keys() {
        extend(p);
    }
    for s in &cut.segments {
        extend(s.from);
        extend(s.to);
    }
    if min_x > max_x {
        return String::from("(empty cutout)\n");
    }

    let cols = (max_x - min_x) as usize * CW + 1;
    let rows = (max_y - min_y) as usize * RH + 1;
    let mut canvas = vec![vec![' '; cols + 2]; rows];
    let cell = |(x, y): (i64, i64)| ((y - min_y) as usize * RH, (x - min_x) as usize * CW);

    for (&p, &c) in &cut.vertices {
        let (r, col) = cell(p);
        canvas[r][col] = color_char(c);
    }
    for s in &cut.segments {
        let (a, b) = if s.from <= s.to { (s.from, s.to) } else { (s.to, s.from) };
        if a.1 == b.1 {
            // horizontal: dashes with the color digit in the middle
            let (r, c0) = cell(a);
            let (_, c1) = cell(b);
            for c in c0 + 1..c1 {
                canvas[r][c] = '-';
            }
            canvas[r][c0 + (c1 - c0) / 2] = color_char(s.color);
        } else {
            // vertical: bar with the color digit beside it
            let (r0, col) = cell(a);
            let (r1, _) = cell(b);
            for r in r0 + 1..r1 {
                canvas[r][col] = '|';
            }
            canvas[r0 + (r1 - r0) / 2][col + 1] = color_char(s.color);
        }
    }

    let ident = IdentificationJson::from_ident(cut.ident);
    let mut out = format!(
        "{}x{} {}{}\n",
        cut.width,
        cut.height,
        ident.kind,
        ident.shift.map(|s| format!(" shift {}", s)).unwrap_or_default()
    );
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Summary of a realized cutout, for `cutout realize`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RealizationJson {
    pub vertices: usize,
    pub edges: usize,
    pub belts: Vec<usize>,
    pub faces: usize,
    pub genus: i64,
}

impl RealizationJson {
    pub fn from_realization(r: &Realization) -> Self {
        let mut belts: Vec<usize> = r.belts.iter().map(|b| b.len()).collect();
        belts.sort();
        RealizationJson {
            vertices: r.graph.n,
            edges: r.graph.edge_count(),
            belts,
            faces: r.face_count,
            genus: r.genus,
        }
    }
}

pub fn segment_colored(cut: &Cutout) -> bool {
    cut.vertices.values().all(|c| c.is_some()) && cut.segments.iter().all(|s: &Segment| s.color.is_some())
}
