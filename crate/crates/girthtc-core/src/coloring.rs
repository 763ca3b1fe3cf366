//! Total colorings and the verifier ladder: TC, EDS, ETC, VEGC, ETGC, EGC,
//! orthogonality, and per-cycle bijectivity classification.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{ekey, Cycle, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalColoring {
    pub palette: usize,
    pub vertex: Vec<usize>,
    pub edge: BTreeMap<(usize, usize), usize>,
}

impl TotalColoring {
    pub fn new(palette: usize, vertex: Vec<usize>, edge: BTreeMap<(usize, usize), usize>) -> Self {
        TotalColoring { palette, vertex, edge }
    }

    pub fn edge_color(&self, u: usize, v: usize) -> usize {
        self.edge[&ekey(u, v)]
    }

    pub fn covers(&self, g: &Graph) -> bool {
        self.vertex.len() == g.n
            && self.vertex.iter().all(|&c| c < self.palette)
            && g.edges().iter().all(|e| self.edge.get(e).is_some_and(|&c| c < self.palette))
            && self.edge.len() == g.edge_count()
    }

    /// Vertex color classes S_0..S_{palette-1}.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.palette];
        for (v, &c) in self.vertex.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Edges of one color.
    pub fn edge_class(&self, color: usize) -> Vec<(usize, usize)> {
        self.edge.iter().filter(|&(_, &c)| c == color).map(|(&e, _)| e).collect()
    }

    /// Apply a palette permutation (perm[old] = new).
    pub fn permute_colors(&self, perm: &[usize]) -> TotalColoring {
        TotalColoring {
            palette: self.palette,
            vertex: self.vertex.iter().map(|&c| perm[c]).collect(),
            edge: self.edge.iter().map(|(&e, &c)| (e, perm[c])).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementRef {
    Vertex(usize),
    Edge(usize, usize),
    CycleRef(Vec<usize>),
    ColorClass(usize),
    Whole,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub rule: &'static str,
    pub element: ElementRef,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport { violations: Vec::new(), notes: Vec::new() }
    }

    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, rule: &'static str, element: ElementRef, message: String) {
        self.violations.push(Violation { rule, element, message });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    pub fn rules_hit(&self) -> Vec<&'static str> {
        let mut rules: Vec<&'static str> = self.violations.iter().map(|v| v.rule).collect();
        rules.dedup();
        rules
    }
}

/// Proper total coloring: adjacent vertices differ, incident edges differ,
/// every edge differs from both endpoints.
pub fn verify_tc(g: &Graph, c: &TotalColoring) -> VerificationReport {
    assert!(c.covers(g), "coloring does not cover the graph");
    let mut report = VerificationReport::pass();
    for (u, v) in g.edges() {
        if c.vertex[u] == c.vertex[v] {
            report.push("TC-V", ElementRef::Edge(u, v), format!("adjacent vertices {} and {} share color {}", u, v, c.vertex[u]));
        }
        let ec = c.edge_color(u, v);
        if ec == c.vertex[u] || ec == c.vertex[v] {
            report.push("TC-VE", ElementRef::Edge(u, v), format!("edge color {} collides with an endpoint", ec));
        }
    }
    for v in 0..g.n {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g.neighbors(v) {
            let ec = c.edge_color(v, w);
            if let Some(&other) = seen.get(&ec) {
                report.push("TC-E", ElementRef::Vertex(v), format!("edges ({},{}) and ({},{}) at vertex {} share color {}", v, other, v, w, v, ec));
            }
            seen.insert(ec, w);
        }
    }
    report
}

/// Efficient dominating set (perfect code): independent, and every outside
/// vertex has exactly one closed-neighborhood member inside.
pub fn is_eds(g: &Graph, s: &[usize]) -> bool {
    eds_report(g, s, 0).verdict()
}

fn eds_report(g: &Graph, s: &[usize], class: usize) -> VerificationReport {
    let mut report = VerificationReport::pass();
    let mut inset = 0u64;
    for &v in s {
        inset |= 1 << v;
    }
    for &v in s {
        for &w in g.neighbors(v) {
            if inset >> w & 1 == 1 && v < w {
                report.push("EDS-IND", ElementRef::Edge(v, w), format!("class {} not independent", class));
            }
        }
    }
    if s.is_empty() && g.n > 0 {
        report.push("EDS-DOM", ElementRef::ColorClass(class), format!("class {} is empty", class));
        return report;
    }
    for v in 0..g.n {
        if inset >> v & 1 == 1 {
            continue;
        }
        let dominators = g.closed_neighborhood(v).iter().filter(|&&w| inset >> w & 1 == 1).count();
        if dominators != 1 {
            report.push("EDS-DOM", ElementRef::Vertex(v), format!("vertex {} dominated {} times by class {}", v, dominators, class));
        }
    }
    report
}

/// Efficient TC: a TC whose vertex color classes are EDSs partitioning V.
pub fn verify_etc(g: &Graph, c: &TotalColoring) -> VerificationReport {
    let mut report = verify_tc(g, c);
    let classes = c.color_classes();
    let covered: usize = classes.iter().map(|s| s.len()).sum();
    if covered != g.n {
        report.push("PART", ElementRef::Whole, format!("classes cover {} of {} vertices", covered, g.n));
    }
    for (i, s) in classes.iter().enumerate() {
        report.merge(eds_report(g, s, i));
    }
    report
}

/// VEGC: every girth cycle uses each color once on vertices, once on edges.
pub fn verify_vegc(g: &Graph, c: &TotalColoring) -> VerificationReport {
    let mut report = VerificationReport::pass();
    for cyc in g.girth_cycles() {
        let verts = cyc.vertices();
        let mut vseen = vec![false; c.palette];
        for &v in verts {
            if vseen[c.vertex[v]] {
                report.push("VEGC-V", ElementRef::CycleRef(verts.to_vec()), format!("vertex color {} repeats on girth cycle", c.vertex[v]));
            }
            vseen[c.vertex[v]] = true;
        }
        let mut eseen = vec![false; c.palette];
        for (u, v) in cyc.edges() {
            let ec = c.edge_color(u, v);
            if eseen[ec] {
                report.push("VEGC-E", ElementRef::CycleRef(verts.to_vec()), format!("edge color {} repeats on girth cycle", ec));
            }
            eseen[ec] = true;
        }
    }
    report
}

/// ETGC = ETC and VEGC together.
pub fn verify_etgc(g: &Graph, c: &TotalColoring) -> VerificationReport {
    let mut report = verify_etc(g, c);
    report.merge(verify_vegc(g, c));
    report
}

/// Proper edge coloring with rainbow girth cycles. With `strict`, also
/// require girth = palette size (the literal girth-coloring definition).
pub fn verify_egc(g: &Graph, edge_colors: &BTreeMap<(usize, usize), usize>, palette: usize, strict: bool) -> VerificationReport {
    let mut report = VerificationReport::pass();
    for v in 0..g.n {
        let mut seen = vec![false; palette];
        for &w in g.neighbors(v) {
            let ec = edge_colors[&ekey(v, w)];
            if seen[ec] {
                report.push("EGC-PROP", ElementRef::Vertex(v), format!("edge color {} repeats at vertex {}", ec, v));
            }
            seen[ec] = true;
        }
    }
    let girth = g.girth();
    if strict && girth != Some(palette) {
        report.notes.push(format!("strict mode: girth {:?} differs from palette {}", girth, palette));
        report.push("EGC-RBW", ElementRef::Whole, format!("girth does not equal palette size {}", palette));
    }
    for cyc in g.girth_cycles() {
        let mut seen = vec![false; palette];
        for (u, v) in cyc.edges() {
            let ec = edge_colors[&ekey(u, v)];
            if seen[ec] {
                report.push("EGC-RBW", ElementRef::CycleRef(cyc.vertices().to_vec()), format!("edge color {} repeats on girth cycle", ec));
            }
            seen[ec] = true;
        }
    }
    report
}

/// Orthogonal colorings: identical vertex colors, edge colors differing on
/// every edge.
pub fn orthogonal(c1: &TotalColoring, c2: &TotalColoring) -> bool {
    c1.palette == c2.palette
        && c1.vertex == c2.vertex
        && c1.edge.len() == c2.edge.len()
        && c1.edge.iter().all(|(e, col)| c2.edge.get(e).is_some_and(|c2col| c2col != col))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleClass {
    FullyBijective,
    EdgeOnly,
    VertexOnly,
    Neither,
}

/// Classify a cycle of length = palette by whether its vertex and/or edge
/// colors are each a bijection onto the palette.
pub fn classify_cycle(c: &TotalColoring, cyc: &Cycle) -> CycleClass {
    assert_eq!(cyc.len(), c.palette, "cycle length must equal palette size");
    let mut vseen = vec![false; c.palette];
    let mut vbij = true;
    for &v in cyc.vertices() {
        if vseen[c.vertex[v]] {
            vbij = false;
        }
        vseen[c.vertex[v]] = true;
    }
    let mut eseen = vec![false; c.palette];
    let mut ebij = true;
    for (u, v) in cyc.edges() {
        let ec = c.edge_color(u, v);
        if eseen[ec] {
            ebij = false;
        }
        eseen[ec] = true;
    }
    match (vbij, ebij) {
        (true, true) => CycleClass::FullyBijective,
        (false, true) => CycleClass::EdgeOnly,
        (true, false) => CycleClass::VertexOnly,
        (false, false) => CycleClass::Neither,
    }
}

/// A perfect matching of g?
pub fn is_one_factor(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut hit = vec![false; g.n];
    for &(u, v) in edges {
        if !g.adjacent(u, v) || hit[u] || hit[v] {
            return false;
        }
        hit[u] = true;
        hit[v] = true;
    }
    hit.iter().all(|&h| h)
}
