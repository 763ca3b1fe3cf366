//! Forced coloring propagation on belts, exhaustive total-coloring search,
//! feasibility pre-checks, and the closure of the four constructive
//! operations (extension, unfolding, cycle exchange, re-coloring).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::coloring::{self, ElementRef, TotalColoring, VerificationReport};
use crate::cutout::{self, accordion_unfold, cycle_exchange, periodic_extension, Axis, Cutout, ExchangePolicy, GenusLedger};
use crate::graph::{ekey, Cycle, Graph};

/// A coloring under construction: some vertices and edges assigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    pub palette: usize,
    pub vertex: Vec<Option<usize>>,
    pub edge: BTreeMap<(usize, usize), usize>,
}

impl PartialColoring {
    pub fn empty(n: usize, palette: usize) -> Self {
        PartialColoring { palette, vertex: vec![None; n], edge: BTreeMap::new() }
    }

    pub fn set_vertex(&mut self, v: usize, c: usize) {
        self.vertex[v] = Some(c);
    }

    pub fn set_edge(&mut self, u: usize, v: usize, c: usize) {
        self.edge.insert(ekey(u, v), c);
    }

    /// Complete total coloring of `g`, if nothing is left unassigned.
    pub fn into_total(&self, g: &Graph) -> Option<TotalColoring> {
        if self.vertex.iter().any(|c| c.is_none()) || self.edge.len() != g.edge_count() {
            return None;
        }
        Some(TotalColoring::new(
            self.palette,
            self.vertex.iter().map(|c| c.unwrap()).collect(),
            self.edge.clone(),
        ))
    }
}

/// A propagation dead end: the rule whose application emptied a domain.
#[derive(Clone, Debug)]
pub struct Conflict {
    pub rule: &'static str,
    pub element: ElementRef,
    pub detail: String,
}

/// Rule names used in conflicts.
pub const RULE_SEED: &str = "seed";
pub const RULE_LOCAL: &str = "local-exclusion";
pub const RULE_RAINBOW: &str = "neighborhood-rainbow";
pub const RULE_BELT: &str = "belt-period";

const FULL: u8 = 0b1111;

/// Domains for the 4-color propagation: one candidate bitmask per vertex and
/// per edge. Narrowing steps:
///   - local exclusion: an assigned element removes its color from adjacent
///     vertices, incident edges, and sibling edges (forces the third edge at
///     a vertex whose other two incident elements are colored);
///   - closed-neighborhood rainbow: the five elements of N[v] take distinct
///     colors, so an assigned vertex removes its color across every closed
///     neighborhood containing it (forces the edge to the third neighbor
///     once a vertex and two of its neighbors are colored);
///   - belt periodicity: along a belt the vertex colors repeat with period 4
///     and each window of four is a bijection with the palette, likewise for
///     the belt edges; positions four apart share a domain and the four
///     residue classes exclude each other.
/// All steps only shrink domains, so the fixed point is order-independent.
struct Domains<'a> {
    g: &'a Graph,
    belts: &'a [Cycle],
    vert: Vec<u8>,
    edge_ids: Vec<(usize, usize)>,
    edge_of: BTreeMap<(usize, usize), usize>,
    edge: Vec<u8>,
}

impl<'a> Domains<'a> {
    fn new(g: &'a Graph, belts: &'a [Cycle], pc: &PartialColoring) -> Result<Self, Conflict> {
        let edge_ids = g.edges();
        let edge_of: BTreeMap<(usize, usize), usize> =
            edge_ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut d = Domains {
            g,
            belts,
            vert: vec![FULL; g.n],
            edge_ids,
            edge_of,
            edge: Vec::new(),
        };
        d.edge = vec![FULL; d.edge_ids.len()];
        for (v, c) in pc.vertex.iter().enumerate() {
            if let Some(c) = *c {
                d.assign_vertex(v, c, RULE_SEED)?;
            }
        }
        for (&e, &c) in &pc.edge {
            let Some(&i) = d.edge_of.get(&e) else {
                return Err(Conflict {
                    rule: RULE_SEED,
                    element: ElementRef::Edge(e.0, e.1),
                    detail: String::from("seed edge is not in the graph"),
                });
            };
            d.narrow_edge(i, 1 << c, RULE_SEED)?;
        }
        Ok(d)
    }

    fn assign_vertex(&mut self, v: usize, c: usize, rule: &'static str) -> Result<bool, Conflict> {
        self.narrow_vertex(v, 1 << c, rule)
    }

    fn narrow_vertex(&mut self, v: usize, mask: u8, rule: &'static str) -> Result<bool, Conflict> {
        let next = self.vert[v] & mask;
        if next == self.vert[v] {
            return Ok(false);
        }
        if next == 0 {
            return Err(Conflict {
                rule,
                element: ElementRef::Vertex(v),
                detail: format!("no color left for vertex {}", v),
            });
        }
        self.vert[v] = next;
        Ok(true)
    }

    fn narrow_edge(&mut self, i: usize, mask: u8, rule: &'static str) -> Result<bool, Conflict> {
        let next = self.edge[i] & mask;
        if next == self.edge[i] {
            return Ok(false);
        }
        if next == 0 {
            let (u, v) = self.edge_ids[i];
            return Err(Conflict {
                rule,
                element: ElementRef::Edge(u, v),
                detail: format!("no color left for edge ({}, {})", u, v),
            });
        }
        self.edge[i] = next;
        Ok(true)
    }

    /// One full round over all rules; returns whether anything narrowed.
    fn round(&mut self, order: &[usize]) -> Result<bool, Conflict> {
        let mut changed = false;
        for &step in order {
            changed |= match step {
                0 => self.local_exclusions()?,
                1 => self.rainbow_neighborhoods()?,
                _ => self.belt_periodicity()?,
            };
        }
        Ok(changed)
    }

    fn local_exclusions(&mut self) -> Result<bool, Conflict> {
        let mut changed = false;
        for v in 0..self.g.n {
            if let Some(c) = single(self.vert[v]) {
                for &w in self.g.neighbors(v) {
                    changed |= self.narrow_vertex(w, !(1 << c), RULE_LOCAL)?;
                    let i = self.edge_of[&ekey(v, w)];
                    changed |= self.narrow_edge(i, !(1 << c), RULE_LOCAL)?;
                }
            }
        }
        for i in 0..self.edge_ids.len() {
            if let Some(c) = single(self.edge[i]) {
                let (u, v) = self.edge_ids[i];
                for p in [u, v] {
                    changed |= self.narrow_vertex(p, !(1 << c), RULE_LOCAL)?;
                    for &w in self.g.neighbors(p) {
                        let j = self.edge_of[&ekey(p, w)];
                        if j != i {
                            changed |= self.narrow_edge(j, !(1 << c), RULE_LOCAL)?;
                        }
                    }
                }
            }
        }
        Ok(changed)
    }

    fn rainbow_neighborhoods(&mut self) -> Result<bool, Conflict> {
        let mut changed = false;
        for center in 0..self.g.n {
            let hood = self.g.closed_neighborhood(center);
            for &v in &hood {
                if let Some(c) = single(self.vert[v]) {
                    for &w in &hood {
                        if w != v {
                            changed |= self.narrow_vertex(w, !(1 << c), RULE_RAINBOW)?;
                        }
                    }
                }
            }
        }
        Ok(changed)
    }

    fn belt_periodicity(&mut self) -> Result<bool, Conflict> {
        let mut changed = false;
        for belt in self.belts {
            let verts = belt.vertices();
            let len = verts.len();
            if len % 4 != 0 {
                continue;
            }
            let edges: Vec<usize> =
                (0..len).map(|i| self.edge_of[&ekey(verts[i], verts[(i + 1) % len])]).collect();
            for class in 0..4 {
                // intersect the domains of all positions in one residue class
                let mut vmask = FULL;
                let mut emask = FULL;
                for p in (class..len).step_by(4) {
                    vmask &= self.vert[verts[p]];
                    emask &= self.edge[edges[p]];
                }
                for p in (class..len).step_by(4) {
                    changed |= self.narrow_vertex(verts[p], vmask, RULE_BELT)?;
                    changed |= self.narrow_edge(edges[p], emask, RULE_BELT)?;
                }
                // a decided class excludes its color from the other classes
                if let Some(c) = single(vmask) {
                    for other in 0..4 {
                        if other != class {
                            for p in (other..len).step_by(4) {
                                changed |= self.narrow_vertex(verts[p], !(1 << c), RULE_BELT)?;
                            }
                        }
                    }
                }
                if let Some(c) = single(emask) {
                    for other in 0..4 {
                        if other != class {
                            for p in (other..len).step_by(4) {
                                changed |= self.narrow_edge(edges[p], !(1 << c), RULE_BELT)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(changed)
    }

    fn into_partial(self) -> PartialColoring {
        let mut pc = PartialColoring::empty(self.g.n, 4);
        for v in 0..self.g.n {
            pc.vertex[v] = single(self.vert[v]);
        }
        for (i, &e) in self.edge_ids.iter().enumerate() {
            if let Some(c) = single(self.edge[i]) {
                pc.edge.insert(e, c);
            }
        }
        pc
    }
}

fn single(mask: u8) -> Option<usize> {
    if mask.count_ones() == 1 {
        Some(mask.trailing_zeros() as usize)
    } else {
        None
    }
}

/// Run forced propagation to its fixed point. Palette is 4 and `g` cubic.
pub fn etcing_propagate(
    g: &Graph,
    belts: &[Cycle],
    pc: &PartialColoring,
) -> Result<PartialColoring, Conflict> {
    propagate_with_order(g, belts, pc, &[0, 1, 2])
}

/// Same fixed point, applying the rule families in the given cyclic order.
/// Exposed to let tests confirm order-independence.
pub fn propagate_with_order(
    g: &Graph,
    belts: &[Cycle],
    pc: &PartialColoring,
    order: &[usize],
) -> Result<PartialColoring, Conflict> {
    assert_eq!(pc.palette, 4, "propagation uses the 4-color palette");
    let mut d = Domains::new(g, belts, pc)?;
    while d.round(order)? {}
    Ok(d.into_partial())
}

/// Complete a coloring from a seeded belt, requiring all belts to have
/// length divisible by 4, and verify the result.
pub fn solve_from_seed(
    g: &Graph,
    belts: &[Cycle],
    seed: &PartialColoring,
) -> Result<TotalColoring, String> {
    if let Some(b) = belts.iter().find(|b| b.len() % 4 != 0) {
        return Err(format!("belt of length {} is not divisible by 4", b.len()));
    }
    let fixed = etcing_propagate(g, belts, seed)
        .map_err(|c| format!("propagation conflict [{}] at {:?}: {}", c.rule, c.element, c.detail))?;
    let Some(total) = fixed.into_total(g) else {
        let open = fixed.vertex.iter().filter(|c| c.is_none()).count();
        return Err(format!("propagation stalled with {} vertices undecided", open));
    };
    let report = coloring::verify_etgc(g, &total);
    if !report.verdict() {
        return Err(format!("propagated coloring fails verification: {:?}", report.rules_hit()));
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    AnyTc,
    Etc,
    Etgc,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub solutions: usize,
    pub truncated: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub limit: Option<usize>,
    /// Keep one representative per global color permutation.
    pub dedup_colors: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limit: None, dedup_colors: true }
    }
}

enum Element {
    Vertex(usize),
    Edge(usize, (usize, usize)),
}

/// Exhaustive backtracking over all total colorings of `g` satisfying the
/// predicate. Vertices are assigned first, then edges; with color dedup the
/// first use of each color must be the smallest unused one, which keeps
/// exactly one representative per palette permutation.
pub fn exhaustive_tc_search(
    g: &Graph,
    palette: usize,
    predicate: Predicate,
    opts: SearchOptions,
) -> (Vec<TotalColoring>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut out = Vec::new();

    // an efficient dominating set has |V|/(k+1) vertices, so for the
    // dominating predicates a bad divisibility empties the answer at once
    let rainbow = match (predicate, g.regularity()) {
        (Predicate::AnyTc, _) => false,
        (_, Some(k)) if palette == k + 1 => {
            if g.n % palette != 0 {
                return (out, stats);
            }
            true
        }
        _ => false,
    };

    let edges = g.edges();
    let mut order: Vec<Element> = (0..g.n).map(Element::Vertex).collect();
    order.extend(edges.iter().enumerate().map(|(i, &e)| Element::Edge(i, e)));
    let edge_of: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut vcol: Vec<Option<usize>> = vec![None; g.n];
    let mut ecol: Vec<Option<usize>> = vec![None; edges.len()];

    struct Ctx<'a> {
        g: &'a Graph,
        palette: usize,
        predicate: Predicate,
        opts: SearchOptions,
        rainbow: bool,
        order: Vec<Element>,
        edges: Vec<(usize, usize)>,
        edge_of: BTreeMap<(usize, usize), usize>,
    }

    fn admissible(ctx: &Ctx, vcol: &[Option<usize>], ecol: &[Option<usize>], el: &Element, c: usize) -> bool {
        match *el {
            Element::Vertex(v) => {
                for &w in ctx.g.neighbors(v) {
                    if vcol[w] == Some(c) {
                        return false;
                    }
                }
                if ctx.rainbow {
                    // no repeated color inside any closed neighborhood
                    for &u in ctx.g.neighbors(v) {
                        for &w in ctx.g.neighbors(u) {
                            if w != v && vcol[w] == Some(c) {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            Element::Edge(_, (u, v)) => {
                if vcol[u] == Some(c) || vcol[v] == Some(c) {
                    return false;
                }
                for p in [u, v] {
                    for &w in ctx.g.neighbors(p) {
                        let j = ctx.edge_of[&ekey(p, w)];
                        if ecol[j] == Some(c) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn go(
        ctx: &Ctx,
        depth: usize,
        used: usize,
        vcol: &mut Vec<Option<usize>>,
        ecol: &mut Vec<Option<usize>>,
        out: &mut Vec<TotalColoring>,
        stats: &mut SearchStats,
    ) {
        if let Some(limit) = ctx.opts.limit {
            if out.len() >= limit {
                stats.truncated = true;
                return;
            }
        }
        if depth == ctx.order.len() {
            let total = TotalColoring::new(
                ctx.palette,
                vcol.iter().map(|c| c.unwrap()).collect(),
                ctx.edges
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (e, ecol[i].unwrap()))
                    .collect(),
            );
            let ok = match ctx.predicate {
                Predicate::AnyTc => coloring::verify_tc(ctx.g, &total).verdict(),
                Predicate::Etc => coloring::verify_etc(ctx.g, &total).verdict(),
                Predicate::Etgc => coloring::verify_etgc(ctx.g, &total).verdict(),
            };
            if ok {
                out.push(total);
                stats.solutions += 1;
            }
            return;
        }
        let el = &ctx.order[depth];
        let top = if ctx.opts.dedup_colors { (used + 1).min(ctx.palette) } else { ctx.palette };
        for c in 0..top {
            if !admissible(ctx, vcol, ecol, el, c) {
                continue;
            }
            stats.nodes += 1;
            match *el {
                Element::Vertex(v) => vcol[v] = Some(c),
                Element::Edge(i, _) => ecol[i] = Some(c),
            }
            go(ctx, depth + 1, used.max(c + 1), vcol, ecol, out, stats);
            match *el {
                Element::Vertex(v) => vcol[v] = None,
                Element::Edge(i, _) => ecol[i] = None,
            }
        }
    }

    let ctx = Ctx { g, palette, predicate, opts, rainbow, order, edges: edges.clone(), edge_of };
    go(&ctx, 0, 0, &mut vcol, &mut ecol, &mut out, &mut stats);
    (out, stats)
}

/// Fail-fast necessary conditions for an efficient total coloring of a
/// regular graph, with belts checked when supplied.
pub fn etc_feasibility(g: &Graph, belts: Option<&[Cycle]>) -> Result<VerificationReport, String> {
    let Some(k) = g.regularity() else {
        return Err(String::from("feasibility check needs a regular graph"));
    };
    let classes = k + 1;
    let mut report = VerificationReport::pass();
    if g.n % classes != 0 {
        report.push(
            "FEAS-DIV",
            ElementRef::Whole,
            format!("|V| = {} is not divisible by {}", g.n, classes),
        );
    }
    if let Some(belts) = belts {
        for b in belts {
            if b.len() % classes != 0 {
                report.push(
                    "FEAS-BELT",
                    ElementRef::CycleRef(b.vertices().to_vec()),
                    format!(
                        "a {}-belt forces two vertices of one color within distance 2",
                        b.len()
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// One graph reached by the constructive operations, with how it got there.
#[derive(Clone, Debug)]
pub struct ClosureMember {
    pub canon: Vec<u8>,
    pub graph: Graph,
    pub coloring: Option<TotalColoring>,
    pub cutouts: Vec<Cutout>,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Closure {
    pub members: Vec<ClosureMember>,
}

impl Closure {
    pub fn contains(&self, g: &Graph) -> bool {
        let c = canonical_form(g);
        self.members.iter().any(|m| m.canon == c)
    }

    pub fn find(&self, g: &Graph) -> Option<&ClosureMember> {
        let c = canonical_form(g);
        self.members.iter().find(|m| m.canon == c)
    }
}

/// Breadth-first closure of the cube's cutouts under periodic extension,
/// accordion unfolding, cycle exchange, and re-coloring from a seed.
/// Members with at most `max_n` vertices are expanded further; their results
/// are recorded even when larger, so one expansion step may exceed `max_n`.
pub fn operation_closure(max_n: usize) -> Closure {
    let mut closure = Closure::default();
    let mut queue: Vec<usize> = Vec::new();

    let add = |closure: &mut Closure,
                   queue: &mut Vec<usize>,
                   graph: Graph,
                   coloring: Option<TotalColoring>,
                   cutout: Option<Cutout>,
                   trace: Vec<String>| {
        let canon = canonical_form(&graph);
        if let Some(pos) = closure.members.iter().position(|m| m.canon == canon) {
            if let Some(cut) = cutout {
                let member = &mut closure.members[pos];
                if !member.cutouts.contains(&cut) {
                    member.cutouts.push(cut);
                    if member.graph.n <= max_n && !queue.contains(&pos) {
                        queue.push(pos); // new drawing may unlock new moves
                    }
                }
            }
            return;
        }
        let expand = graph.n <= max_n;
        closure.members.push(ClosureMember {
            canon,
            graph,
            coloring,
            cutouts: cutout.into_iter().collect(),
            trace,
        });
        if expand {
            queue.push(closure.members.len() - 1);
        }
    };

    for (name, cut) in [
        ("cube cylinder drawing", cutout::fixtures::q3_cutout_left()),
        ("cube torus drawing", cutout::fixtures::q3_torus_cutout()),
    ] {
        if let Ok(r) = cut.realize() {
            let coloring = r.coloring(4);
            add(&mut closure, &mut queue, r.graph, coloring, Some(cut), vec![String::from(name)]);
        }
    }

    let mut seen_expansions: BTreeSet<(Vec<u8>, usize)> = BTreeSet::new();
    while let Some(idx) = queue.pop() {
        let key = (closure.members[idx].canon.clone(), closure.members[idx].cutouts.len());
        if !seen_expansions.insert(key) {
            continue;
        }
        let member = closure.members[idx].clone();
        let mut candidates: Vec<(Cutout, String)> = Vec::new();
        for cut in &member.cutouts {
            if cut.ident.wraps_x() {
                let ext = periodic_extension(cut, Axis::Horizontal, 2);
                if ext.ident == crate::cutout::Identification::Torus {
                    for shift in 1..ext.width {
                        let mut tilted = ext.clone();
                        tilted.ident = crate::cutout::Identification::TorusTiltedY { shift };
                        candidates.push((tilted, format!("extend x2 horizontally, top and bottom borders re-glued {} columns over", shift)));
                    }
                }
                candidates.push((ext, String::from("extend x2 horizontally")));
            }
            if cut.ident.wraps_y() {
                let ext = periodic_extension(cut, Axis::Vertical, 2);
                // a stacked torus drawing can re-glue its side borders with a
                // vertical displacement; only color-consistent re-gluings
                // survive the checks below
                if ext.ident == crate::cutout::Identification::Torus {
                    for shift in 1..ext.height {
                        let mut tilted = ext.clone();
                        tilted.ident = crate::cutout::Identification::TorusTiltedX { shift };
                        candidates.push((tilted, format!("extend x2 vertically, side borders re-glued {} rows down", shift)));
                    }
                }
                candidates.push((ext, String::from("extend x2 vertically")));
            }
            if cut.vertices.keys().all(|&(_, y)| y == 0 || y == 1) {
                for x in 0..cut.width - 1 {
                    for l in [2, 3] {
                        if let Some(unf) = try_unfold(cut, x, l) {
                            candidates.push((unf, format!("unfold column {} to half-length {}", x, l)));
                        }
                    }
                }
            }
            // re-coloring with the orthogonal partner: same graph, but the
            // changed edge colors unlock the other unfolding direction
            if let Some(re) = orthogonal_recolor(cut) {
                candidates.push((re, String::from("re-color to the orthogonal coloring")));
            }
        }
        for (cand, op) in candidates {
            if cand.vertices.len() > crate::graph::MAX_VERTICES {
                continue;
            }
            let Ok(r) = cand.realize() else { continue };
            let Some(c) = r.coloring(4) else { continue };
            if r.graph.girth() != Some(4) || !r.graph.is_connected() {
                continue;
            }
            if !coloring::verify_etgc(&r.graph, &c).verdict() {
                continue;
            }
            // a re-glued drawing joins the family only when its coloring is
            // the periodic continuation of one belt, i.e. seed-recoverable
            if matches!(
                cand.ident,
                crate::cutout::Identification::TorusTiltedX { .. }
                    | crate::cutout::Identification::TorusTiltedY { .. }
            ) {
                let Some(belt) = r.belts.iter().find(|b| b.len() == 4) else { continue };
                let seed = seed_from_belt(&c, belt, r.graph.n);
                if solve_from_seed(&r.graph, &r.belts, &seed).is_err() {
                    continue;
                }
            }
            let mut trace = member.trace.clone();
            trace.push(op);
            add(&mut closure, &mut queue, r.graph, Some(c), Some(cand), trace);
        }

        // cycle exchanges, per drawing: each realization supplies its own
        // coloring and belts
        for cut in &member.cutouts {
            let Ok(r) = cut.realize() else { continue };
            let Some(c) = r.coloring(4) else { continue };
            let edges = r.graph.edges();
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    if c.edge_color(e.0, e.1) != c.edge_color(f.0, f.1) {
                        continue;
                    }
                    let mut ledger = GenusLedger::starting_at(r.genus);
                    let Ok(x) = cycle_exchange(&r.graph, &c, e, f, &r.belts, ExchangePolicy::Auto, &mut ledger)
                    else {
                        continue;
                    };
                    if x.graph.girth() != Some(4) || !x.graph.is_connected() {
                        continue;
                    }
                    if !coloring::verify_etgc(&x.graph, &x.coloring).verdict() {
                        continue;
                    }
                    let mut trace = member.trace.clone();
                    trace.push(format!("exchange edges {:?} and {:?}", e, f));
                    add(&mut closure, &mut queue, x.graph, Some(x.coloring), None, trace);
                }
            }
        }
    }
    closure
}

/// The orthogonal partner of a drawing's coloring, written back onto the
/// drawing: same vertex colors, every edge color changed. Built by seeding
/// one 4-belt with the square's other proper bijective edge coloring and
/// propagating.
fn orthogonal_recolor(cut: &Cutout) -> Option<Cutout> {
    let r = cut.realize().ok()?;
    let c = r.coloring(4)?;
    if r.belts.iter().any(|b| b.len() % 4 != 0) {
        return None;
    }
    let belt = r.belts.iter().find(|b| b.len() == 4)?;
    let vs = belt.vertices();
    let (a, b, x, d) = (vs[0], vs[1], vs[2], vs[3]);
    // a square with distinct vertex colors has exactly two proper bijective
    // edge colorings; pick the one the drawing does not use
    let opt1 = [c.vertex[x], c.vertex[d], c.vertex[a], c.vertex[b]];
    let opt2 = [c.vertex[d], c.vertex[a], c.vertex[b], c.vertex[x]];
    let cur = [c.edge_color(a, b), c.edge_color(b, x), c.edge_color(x, d), c.edge_color(d, a)];
    let pick = if cur == opt1 { opt2 } else { opt1 };
    let mut seed = PartialColoring::empty(r.graph.n, 4);
    for &v in vs {
        seed.set_vertex(v, c.vertex[v]);
    }
    for (i, &(u, v)) in [(a, b), (b, x), (x, d), (d, a)].iter().enumerate() {
        seed.set_edge(u, v, pick[i]);
    }
    let total = solve_from_seed(&r.graph, &r.belts, &seed).ok()?;
    let mut out = cut.clone();
    for (p, col) in out.vertices.iter_mut() {
        *col = Some(total.vertex[r.index_of[p]]);
    }
    let folded: Vec<(usize, usize)> = out
        .segments
        .iter()
        .map(|s| (r.index_of[&cut.fold(s.from)], r.index_of[&cut.fold(s.to)]))
        .collect();
    for (s, (u, v)) in out.segments.iter_mut().zip(folded) {
        s.color = Some(total.edge_color(u, v));
    }
    Some(out)
}

/// Unfold preconditions without panicking: the square at columns x, x+1 must
/// be fully present and colored, and the colors must admit a direction.
fn try_unfold(cut: &Cutout, x: i64, l: i64) -> Option<Cutout> {
    let corners = [(x, 0), (x, 1), (x + 1, 0), (x + 1, 1)];
    for p in corners {
        if cut.vertices.get(&p)?.is_none() {
            return None;
        }
    }
    let ecol = |f: (i64, i64), t: (i64, i64)| -> Option<usize> {
        cut.segments
            .iter()
            .find(|s| (s.from == f && s.to == t) || (s.from == t && s.to == f))
            .and_then(|s| s.color)
    };
    let c_e = ecol((x, 0), (x, 1))?;
    let b_e = ecol((x, 0), (x + 1, 0))?;
    ecol((x, 1), (x + 1, 1))?;
    ecol((x + 1, 0), (x + 1, 1))?;
    let c_v = cut.vertices[&(x + 1, 1)]?;
    if c_e != c_v && b_e != c_v {
        return None;
    }
    Some(accordion_unfold(cut, x, l))
}

/// One line of the conjecture audit.
#[derive(Clone, Debug)]
pub struct AuditRow {
    pub n: usize,
    pub belts_ok: bool,
    pub etc_exists: bool,
    pub in_closure: bool,
    pub skipped: bool,
}

/// For each graph: feasibility of its girth cycles, ETC existence by search,
/// and membership in the operation closure. Graphs above `max_n` are skipped.
/// Reported, never asserted: a counterexample is data.
pub fn conjecture_audit(corpus: &[Graph], max_n: usize) -> Vec<AuditRow> {
    let closure = operation_closure(max_n);
    corpus
        .iter()
        .map(|g| {
            if g.n > max_n {
                return AuditRow { n: g.n, belts_ok: false, etc_exists: false, in_closure: false, skipped: true };
            }
            let cycles = g.girth_cycles();
            let belts_ok = etc_feasibility(g, Some(&cycles)).map(|r| r.verdict()).unwrap_or(false);
            let etc_exists = if belts_ok {
                let opts = SearchOptions { limit: Some(1), dedup_colors: true };
                let (sols, _) = exhaustive_tc_search(g, 4, Predicate::Etc, opts);
                !sols.is_empty()
            } else {
                false
            };
            let in_closure = closure.contains(g);
            AuditRow { n: g.n, belts_ok, etc_exists, in_closure, skipped: false }
        })
        .collect()
}

/// Convenience: restrict a full coloring to the elements of one belt.
pub fn seed_from_belt(c: &TotalColoring, belt: &Cycle, n: usize) -> PartialColoring {
    let mut seed = PartialColoring::empty(n, c.palette);
    for &v in belt.vertices() {
        seed.set_vertex(v, c.vertex[v]);
    }
    for (u, v) in belt.edges() {
        seed.set_edge(u, v, c.edge_color(u, v));
    }
    seed
}
