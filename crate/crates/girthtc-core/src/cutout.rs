//! Grid-drawing ("cutout") model of planar and toroidal cubic graphs, plus
//! three of the four constructive operations: periodic extension, accordion
//! unfolding, and cycle exchange with genus bookkeeping.
//!
//! A cutout is a rectangular grid with vertices on lattice points and edges
//! as axis-aligned segments; borders may be identified (cylinder, torus, or
//! tilted torus). Realizing a cutout yields the quotient graph, its belts
//! (face-bounding cycles, read off the drawing's rotation system), and the
//! genus of the implied surface via Euler's formula.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::TotalColoring;
use crate::graph::{ekey, Cycle, Graph};

pub type Pos = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identification {
    /// No identification: a plain fragment.
    Plane,
    /// Left and right borders identified: x = width wraps to x = 0.
    CylinderHorizontal,
    /// Top and bottom borders identified: y = height wraps to y = 0.
    CylinderVertical,
    /// Both borders identified.
    Torus,
    /// Torus where crossing the right border re-enters `shift` rows lower.
    TorusTiltedX { shift: i64 },
    /// Torus where crossing the bottom border re-enters `shift` columns over.
    TorusTiltedY { shift: i64 },
}

impl Identification {
    pub fn wraps_x(&self) -> bool {
        !matches!(self, Identification::Plane | Identification::CylinderVertical)
    }

    pub fn wraps_y(&self) -> bool {
        !matches!(self, Identification::Plane | Identification::CylinderHorizontal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub from: Pos,
    pub to: Pos,
    pub color: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cutout {
    pub width: i64,
    pub height: i64,
    pub ident: Identification,
    /// Vertex position -> optional color. Positions lie in the fundamental
    /// domain: 0 <= x < width on wrapped x-axes, likewise for y.
    pub vertices: BTreeMap<Pos, Option<usize>>,
    pub segments: Vec<Segment>,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub graph: Graph,
    /// Graph index of the vertex drawn at each position.
    pub index_of: BTreeMap<Pos, usize>,
    pub vertex_colors: Vec<Option<usize>>,
    pub edge_colors: BTreeMap<(usize, usize), usize>,
    pub belts: Vec<Cycle>,
    pub face_count: usize,
    pub genus: i64,
}

impl Realization {
    /// Full total coloring, if every element is colored.
    pub fn coloring(&self, palette: usize) -> Option<TotalColoring> {
        if self.vertex_colors.iter().any(|c| c.is_none()) {
            return None;
        }
        if self.edge_colors.len() != self.graph.edge_count() {
            return None;
        }
        Some(TotalColoring::new(
            palette,
            self.vertex_colors.iter().map(|c| c.unwrap()).collect(),
            self.edge_colors.clone(),
        ))
    }
}

impl Cutout {
    pub fn new(width: i64, height: i64, ident: Identification) -> Self {
        Cutout { width, height, ident, vertices: BTreeMap::new(), segments: Vec::new() }
    }

    pub fn put(&mut self, pos: Pos, color: impl Into<Option<usize>>) {
        self.vertices.insert(pos, color.into());
    }

    pub fn seg(&mut self, from: Pos, to: Pos, color: impl Into<Option<usize>>) {
        self.segments.push(Segment { from, to, color: color.into() });
    }

    /// Fold an arbitrary lattice point into the fundamental domain.
    pub fn fold(&self, p: Pos) -> Pos {
        let (mut x, mut y) = p;
        match self.ident {
            Identification::Plane => {}
            Identification::CylinderHorizontal => x = x.rem_euclid(self.width),
            Identification::CylinderVertical => y = y.rem_euclid(self.height),
            Identification::Torus => {
                x = x.rem_euclid(self.width);
                y = y.rem_euclid(self.height);
            }
            Identification::TorusTiltedX { shift } => {
                let q = x.div_euclid(self.width);
                x = x.rem_euclid(self.width);
                y = (y + q * shift).rem_euclid(self.height);
            }
            Identification::TorusTiltedY { shift } => {
                let q = y.div_euclid(self.height);
                y = y.rem_euclid(self.height);
                x = (x + q * shift).rem_euclid(self.width);
            }
        }
        (x, y)
    }

    /// Quotient graph, belts, colors, genus.
    pub fn realize(&self) -> Result<Realization, String> {
        let index_of: BTreeMap<Pos, usize> =
            self.vertices.keys().enumerate().map(|(i, &p)| (p, i)).collect();
        let n = index_of.len();
        let mut graph = Graph::new(n);
        let mut vertex_colors: Vec<Option<usize>> = vec![None; n];
        for (&p, &c) in self.vertices.iter() {
            vertex_colors[index_of[&p]] = c;
        }

        // drawing sanity: no vertex in the interior of a segment
        for s in &self.segments {
            for p in interior_points(s.from, s.to) {
                if self.vertices.contains_key(&self.fold(p)) {
                    return Err(format!("segment {:?}-{:?} crosses a vertex at {:?}", s.from, s.to, p));
                }
            }
        }

        let mut edge_colors: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        // half-edge directions per vertex: dir -> (edge endpoint pair, other vertex)
        // directions: 0 = right, 1 = up, 2 = left, 3 = down (y grows downward)
        let mut rot: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
        let mut ends: Vec<(usize, usize)> = Vec::new(); // directed-edge table: (vertex, dir)
        for s in &self.segments {
            let pf = self.fold(s.from);
            let pt = self.fold(s.to);
            let (Some(&u), Some(&v)) = (index_of.get(&pf), index_of.get(&pt)) else {
                return Err(format!("segment {:?}-{:?} misses a vertex", s.from, s.to));
            };
            if u == v {
                return Err(format!("segment {:?}-{:?} folds to a loop", s.from, s.to));
            }
            graph.add_edge(u, v);
            if let Some(c) = s.color {
                if let Some(&old) = edge_colors.get(&ekey(u, v)) {
                    if old != c {
                        return Err(format!("identified edge {:?} colored both {} and {}", (u, v), old, c));
                    }
                }
                edge_colors.insert(ekey(u, v), c);
            }
            let (dir_from, dir_to) = segment_dirs(s.from, s.to)?;
            for (vert, dir) in [(u, dir_from), (v, dir_to)] {
                let de = ends.len();
                if rot[vert].insert(dir, de).is_some() {
                    return Err(format!("two edges leave {:?} in the same direction", vert));
                }
                ends.push((vert, dir));
            }
        }

        // identified border colors: both endpoints of a folded pair carry the
        // vertex stored at the canonical position, so no conflict can arise
        // for vertices; edge conflicts were checked above.

        // face tracing on the rotation system
        let mut face_of: Vec<Option<usize>> = vec![None; ends.len()];
        let mut faces: Vec<Vec<usize>> = Vec::new(); // vertex walks
        for start in 0..ends.len() {
            if face_of[start].is_some() {
                continue;
            }
            let fid = faces.len();
            let mut walk = Vec::new();
            let mut de = start;
            loop {
                face_of[de] = Some(fid);
                let (v, _) = ends[de];
                walk.push(v);
                // cross to the opposite end of this edge, then take the next
                // outgoing half-edge counterclockwise
                let partner = de ^ 1;
                let (w, pdir) = ends[partner];
                let mut d = (pdir + 1) % 4;
                let next = loop {
                    if let Some(&cand) = rot[w].get(&d) {
                        break cand;
                    }
                    d = (d + 1) % 4;
                };
                de = next;
                if de == start {
                    break;
                }
            }
            faces.push(walk);
        }

        let face_count = faces.len();
        let mut belts = Vec::new();
        for walk in &faces {
            let mut sorted = walk.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == walk.len() && walk.len() >= 3 {
                belts.push(Cycle::new(walk.clone()));
            }
        }
        belts.sort();

        let euler = n as i64 - graph.edge_count() as i64 + face_count as i64;
        let genus = (2 - euler) / 2;
        Ok(Realization { graph, index_of, vertex_colors, edge_colors, belts, face_count, genus })
    }

    /// Remove all colors, keeping the drawing.
    pub fn strip_colors(&self) -> Cutout {
        let mut out = self.clone();
        for c in out.vertices.values_mut() {
            *c = None;
        }
        for s in out.segments.iter_mut() {
            s.color = None;
        }
        out
    }
}

fn interior_points(from: Pos, to: Pos) -> Vec<Pos> {
    let mut pts = Vec::new();
    if from.0 == to.0 {
        let (a, b) = (from.1.min(to.1), from.1.max(to.1));
        for y in (a + 1)..b {
            pts.push((from.0, y));
        }
    } else {
        let (a, b) = (from.0.min(to.0), from.0.max(to.0));
        for x in (a + 1)..b {
            pts.push((x, from.1));
        }
    }
    pts
}

fn segment_dirs(from: Pos, to: Pos) -> Result<(usize, usize), String> {
    if from.1 == to.1 && from.0 != to.0 {
        if to.0 > from.0 {
            Ok((0, 2))
        } else {
            Ok((2, 0))
        }
    } else if from.0 == to.0 && from.1 != to.1 {
        if to.1 > from.1 {
            Ok((3, 1)) // y grows downward
        } else {
            Ok((1, 3))
        }
    } else {
        Err(format!("segment {:?}-{:?} is not axis-aligned", from, to))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Glue `n` copies of the cutout along the identified borders of the given
/// axis, continuing the colors.
pub fn periodic_extension(cut: &Cutout, axis: Axis, n: i64) -> Cutout {
    assert!(n >= 1, "need at least one copy");
    if n == 1 {
        return cut.clone();
    }
    match axis {
        Axis::Horizontal => {
            assert!(cut.ident.wraps_x(), "horizontal extension needs an identified vertical border");
            let shift = match cut.ident {
                Identification::TorusTiltedX { shift } => shift,
                _ => 0,
            };
            let mut out = Cutout::new(cut.width * n, cut.height, match cut.ident {
                Identification::TorusTiltedX { shift } => {
                    let s = (shift * n).rem_euclid(cut.height);
                    if s == 0 {
                        Identification::Torus
                    } else {
                        Identification::TorusTiltedX { shift: s }
                    }
                }
                other => other,
            });
            for i in 0..n {
                let map = |p: Pos| -> Pos { (p.0 + i * cut.width, (p.1 + i * shift).rem_euclid(cut.height)) };
                for (&p, &c) in &cut.vertices {
                    out.put(map(p), c);
                }
                for s in &cut.segments {
                    // keep each segment's direction: wrap endpoints stay one
                    // step beyond the border instead of folding backwards
                    let f = map(cut.fold(s.from));
                    let t = (f.0 + s.to.0 - s.from.0, f.1 + s.to.1 - s.from.1);
                    out.seg(f, t, s.color);
                }
            }
            out
        }
        Axis::Vertical => {
            assert!(cut.ident.wraps_y(), "vertical extension needs an identified horizontal border");
            let shift = match cut.ident {
                Identification::TorusTiltedY { shift } => shift,
                _ => 0,
            };
            let mut out = Cutout::new(cut.width, cut.height * n, match cut.ident {
                Identification::TorusTiltedY { shift } => {
                    let s = (shift * n).rem_euclid(cut.width);
                    if s == 0 {
                        Identification::Torus
                    } else {
                        Identification::TorusTiltedY { shift: s }
                    }
                }
                other => other,
            });
            for i in 0..n {
                let map = |p: Pos| -> Pos { ((p.0 + i * shift).rem_euclid(cut.width), p.1 + i * cut.height) };
                for (&p, &c) in &cut.vertices {
                    out.put(map(p), c);
                }
                for s in &cut.segments {
                    let f = map(cut.fold(s.from));
                    let t = (f.0 + s.to.0 - s.from.0, f.1 + s.to.1 - s.from.1);
                    out.seg(f, t, s.color);
                }
            }
            out
        }
    }
}

/// Accordion unfolding P2xP2 -> P2xP(2l) of the 4-belt spanning columns
/// x, x+1 of a two-row band cutout. The ladder continues the belt's colors;
/// its geometric direction (new columns vs. new rows) is the one in which
/// the continued pattern stays properly colored, which is determined by the
/// belt's edge colors (each colored 4-belt admits exactly one direction).
pub fn accordion_unfold(cut: &Cutout, x: i64, l: i64) -> Cutout {
    assert!(l > 1, "target half-length must exceed 1");
    assert!(cut.vertices.keys().all(|&(_, y)| y == 0 || y == 1), "unfolding needs a two-row band cutout");
    assert!(x + 1 < cut.width, "belt columns must not straddle the border seam");

    // belt corners and sides, in the traversal (A c B d C a D b):
    //   A = top-left, B = bottom-left, C = bottom-right, D = top-right,
    //   c = left rung, d = bottom edge, a = right rung, b = top edge.
    let col = |p: Pos| cut.vertices[&p].expect("unfolding needs a colored belt");
    let a_v = col((x, 0));
    let b_v = col((x, 1));
    let c_v = col((x + 1, 1));
    let d_v = col((x + 1, 0));
    let ecol = |f: Pos, t: Pos| -> usize {
        cut.segments
            .iter()
            .find(|s| (s.from == f && s.to == t) || (s.from == t && s.to == f))
            .and_then(|s| s.color)
            .expect("unfolding needs colored belt edges")
    };
    let c_e = ecol((x, 0), (x, 1));
    let d_e = ecol((x, 1), (x + 1, 1));
    let a_e = ecol((x + 1, 0), (x + 1, 1));
    let b_e = ecol((x, 0), (x + 1, 0));

    // ladder pattern per display-(5): period-4 continuation from the square
    // (n0 e0 n1 e1 n2 e2 n3 e3) whose e0/e2 pair become rungs; valid when
    // e0 equals the color of n2 (edge color = vertex two steps ahead).
    let columnwise = c_e == c_v; // rungs = the two vertical edges
    let rowwise = b_e == c_v; // rungs = the top and bottom edges
    assert!(columnwise || rowwise, "belt colors admit no unfolding direction");

    if columnwise {
        let (n0, n1, n2, n3) = (a_v, b_v, c_v, d_v);
        let (e0, e1, e2, e3) = (c_e, d_e, a_e, b_e);
        let tops = [n0, n3, n1, n2];
        let bots = [n1, n2, n0, n3];
        let rungs = [e0, e2, e1, e3];
        let tedge = [e3, e0, e2, e1];
        let bedge = [e1, e3, e0, e2];
        let grow = 2 * l - 2;
        let mut out = Cutout::new(cut.width + grow, cut.height, cut.ident);
        let map = |p: Pos| -> Pos {
            if p.0 > x + 1 {
                (p.0 + grow, p.1)
            } else {
                p
            }
        };
        for (&p, &c) in &cut.vertices {
            if p.0 == x || p.0 == x + 1 {
                continue;
            }
            out.put(map(p), c);
        }
        for s in &cut.segments {
            let within = |p: Pos| p.0 >= x && p.0 <= x + 1 && (s.from.0 != s.to.0 || p.0 == s.from.0);
            let is_belt_edge = (s.from.0 >= x && s.from.0 <= x + 1 && s.to.0 >= x && s.to.0 <= x + 1)
                && within(s.from)
                && within(s.to);
            if is_belt_edge {
                continue;
            }
            // edges entering the belt from the right now reach the last column
            let adj = |p: Pos| -> Pos {
                if p.0 == x || p.0 == x + 1 {
                    (p.0 + if p.0 == x { 0 } else { grow }, p.1)
                } else {
                    map(p)
                }
            };
            out.seg(adj(s.from), adj(s.to), s.color);
        }
        for j in 0..(2 * l) {
            let m = (j % 4) as usize;
            out.put((x + j, 0), tops[m]);
            out.put((x + j, 1), bots[m]);
            out.seg((x + j, 0), (x + j, 1), rungs[m]);
            if j + 1 < 2 * l {
                out.seg((x + j, 0), (x + j + 1, 0), tedge[m]);
                out.seg((x + j, 1), (x + j + 1, 1), bedge[m]);
            }
        }
        out
    } else {
        // relabel so the top/bottom edges become rungs (swap B and D roles)
        let (n0, n1, n2, n3) = (a_v, d_v, c_v, b_v);
        let (e0, e1, e2, e3) = (b_e, a_e, d_e, c_e);
        let lefts = [n0, n3, n1, n2];
        let rights = [n1, n2, n0, n3];
        let rungs = [e0, e2, e1, e3];
        let ledge = [e3, e0, e2, e1];
        let redge = [e1, e3, e0, e2];
        let depth = 2 * l; // rows of the ladder
        let mut out = Cutout::new(cut.width, depth, cut.ident);
        for (&p, &c) in &cut.vertices {
            if p.0 == x || p.0 == x + 1 {
                continue;
            }
            let q = if p.1 == 0 { p } else { (p.0, depth - 1) };
            out.put(q, c);
        }
        for s in &cut.segments {
            let inside = |p: Pos| p.0 == x || p.0 == x + 1;
            if inside(s.from) && inside(s.to) {
                continue; // belt edge, replaced by the ladder
            }
            let adjy = |p: Pos| -> Pos {
                let py = if p.1 == 0 { 0 } else { depth - 1 };
                (p.0, py)
            };
            out.seg(adjy(s.from), adjy(s.to), s.color);
        }
        for r in 0..depth {
            let m = (r % 4) as usize;
            out.put((x, r), lefts[m]);
            out.put((x + 1, r), rights[m]);
            out.seg((x, r), (x + 1, r), rungs[m]);
            if r + 1 < depth {
                out.seg((x, r), (x, r + 1), ledge[m]);
                out.seg((x + 1, r), (x + 1, r + 1), redge[m]);
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct GenusLedger {
    pub genus: i64,
    pub history: Vec<(String, i64)>,
}

impl GenusLedger {
    pub fn starting_at(genus: i64) -> Self {
        GenusLedger { genus, history: Vec::new() }
    }

    pub fn record(&mut self, op: String, delta: i64) {
        assert!((-1..=1).contains(&delta));
        self.genus += delta;
        self.history.push((op, delta));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExchangePolicy {
    /// +1 when e and f separate four pairwise distinct belts, else record an
    /// indeterminate delta of 0.
    Auto,
    /// The documented planarizing case (e and f on a common belt): delta -1.
    Planarizing,
}

#[derive(Clone, Debug)]
pub struct ExchangeOutcome {
    pub graph: Graph,
    pub coloring: TotalColoring,
    pub delta: i64,
    pub indeterminate: bool,
    /// Lengths of the two merged faces when the delta is +1.
    pub merged_faces: Option<(usize, usize)>,
}

/// Replace nonadjacent edges e = (v,v') and f = (w,w') with matching color
/// patterns by the complementary pair g, h on the same four vertices,
/// keeping all colors; track the genus ledger.
pub fn cycle_exchange(
    g: &Graph,
    c: &TotalColoring,
    e: (usize, usize),
    f: (usize, usize),
    belts: &[Cycle],
    policy: ExchangePolicy,
    ledger: &mut GenusLedger,
) -> Result<ExchangeOutcome, String> {
    let (v, v1) = e;
    let (w, w1) = f;
    if !g.adjacent(v, v1) || !g.adjacent(w, w1) {
        return Err(String::from("e and f must be edges of the graph"));
    }
    if v == w || v == w1 || v1 == w || v1 == w1 {
        return Err(String::from("e and f must be disjoint"));
    }
    let ce = c.edge_color(v, v1);
    let cf = c.edge_color(w, w1);
    if ce != cf {
        return Err(format!("edge colors differ: {} vs {}", ce, cf));
    }
    // exactly one of the two complementary matchings on {v,v',w,w'} joins
    // endpoints of distinct colors; that pair becomes the new edges, keeping
    // the old edge color
    let valid = |(a, b): (usize, usize)| c.vertex[a] != c.vertex[b] && c.vertex[a] != ce && c.vertex[b] != ce;
    let (p1, p2) = if valid((v, w)) && valid((v1, w1)) {
        ((v, w), (v1, w1))
    } else if valid((v, w1)) && valid((v1, w)) {
        ((v, w1), (v1, w))
    } else {
        return Err(String::from("endpoint color patterns do not match"));
    };
    for &(a, b) in &[p1, p2] {
        if g.adjacent(a, b) {
            return Err(String::from("replacement edge already present"));
        }
    }

    let mut out = g.clone();
    out.remove_edge(v, v1);
    out.remove_edge(w, w1);
    out.add_edge(p1.0, p1.1);
    out.add_edge(p2.0, p2.1);
    let mut coloring = c.clone();
    coloring.edge.remove(&ekey(v, v1));
    coloring.edge.remove(&ekey(w, w1));
    coloring.edge.insert(ekey(p1.0, p1.1), ce);
    coloring.edge.insert(ekey(p2.0, p2.1), ce);

    let e_belts: Vec<&Cycle> = belts.iter().filter(|b| b.contains_edge(v, v1)).collect();
    let f_belts: Vec<&Cycle> = belts.iter().filter(|b| b.contains_edge(w, w1)).collect();
    let shared = e_belts.iter().any(|b| f_belts.iter().any(|b2| b == b2));
    let four_distinct = e_belts.len() == 2 && f_belts.len() == 2 && !shared && e_belts[0] != e_belts[1] && f_belts[0] != f_belts[1];

    let (delta, indeterminate, merged) = match policy {
        ExchangePolicy::Planarizing => {
            if !shared {
                return Err(String::from("planarizing exchange needs e and f on a common belt"));
            }
            (-1, false, None)
        }
        ExchangePolicy::Auto => {
            if four_distinct {
                let m1 = e_belts[0].len() + e_belts[1].len() - 2;
                let m2 = f_belts[0].len() + f_belts[1].len() - 2;
                (1, false, Some((m1.min(m2), m1.max(m2))))
            } else {
                (0, true, None)
            }
        }
    };
    ledger.record(format!("cycle-exchange e={:?} f={:?}", e, f), delta);
    Ok(ExchangeOutcome { graph: out, coloring, delta, indeterminate, merged_faces: merged })
}

pub mod fixtures;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::coloring;
    use crate::generators;

    #[test]
    fn q3_cutout_realizes_q3_with_six_belts() {
        let cut = fixtures::q3_cutout_left();
        let r = cut.realize().unwrap();
        assert_eq!(r.graph.n, 8);
        assert_eq!(r.graph.edge_count(), 12);
        assert_eq!(canonical_form(&r.graph), canonical_form(&generators::q3()));
        assert_eq!(r.belts.len(), 6);
        assert!(r.belts.iter().all(|b| b.len() == 4));
        assert_eq!(r.genus, 0);
        let c = r.coloring(4).unwrap();
        assert!(coloring::verify_etgc(&r.graph, &c).verdict());
    }

    #[test]
    fn q3_cutouts_give_orthogonal_pair() {
        let l = fixtures::q3_cutout_left().realize().unwrap();
        let r = fixtures::q3_cutout_right().realize().unwrap();
        let cl = l.coloring(4).unwrap();
        let cr = r.coloring(4).unwrap();
        assert_eq!(l.graph, r.graph);
        assert!(coloring::verify_etgc(&r.graph, &cr).verdict());
        assert!(coloring::orthogonal(&cl, &cr));
    }

    #[test]
    fn extension_of_q3_cutout_is_c8k2() {
        let cut = fixtures::q3_cutout_left();
        let ext = periodic_extension(&cut, Axis::Horizontal, 2);
        let r = ext.realize().unwrap();
        assert_eq!(r.graph.n, 16);
        assert_eq!(canonical_form(&r.graph), canonical_form(&generators::prism_graph(8)));
        let c = r.coloring(4).unwrap();
        assert!(coloring::verify_etgc(&r.graph, &c).verdict());
        // ten belts: eight squares plus the two border octagons
        assert_eq!(r.belts.len(), 10);
    }

    #[test]
    fn gamma11_cutout_is_toroidal_with_square_and_octagon_belts() {
        let r = fixtures::gamma11_cutout().realize().unwrap();
        assert_eq!(r.graph.n, 16);
        assert_eq!(r.graph.edge_count(), 24);
        assert_eq!(r.genus, 1);
        let mut lens: Vec<usize> = r.belts.iter().map(|b| b.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, alloc::vec![4, 4, 4, 4, 8, 8, 8, 8]);
        let c = r.coloring(4).unwrap();
        assert!(coloring::verify_etgc(&r.graph, &c).verdict());
    }

    #[test]
    fn psi_cutout_closes_to_the_eight_prism() {
        // closing up the four-row ladder drawing gives C8 x K2 with an ETGC,
        // not the truncated-square-tiling graph; its face structure is the
        // planar one (eight squares, two octagons), so the drawing's rotation
        // system has genus 0 even though the borders are torus-identified
        let psi = fixtures::psi_cutout().realize().unwrap();
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        assert_eq!(psi.graph.n, 16);
        assert_eq!(psi.genus, 0);
        assert_eq!(psi.graph.girth(), Some(4));
        let c = psi.coloring(4).unwrap();
        assert!(coloring::verify_etgc(&psi.graph, &c).verdict());
        assert_eq!(canonical_form(&psi.graph), canonical_form(&generators::prism_graph(8)));
        assert_ne!(canonical_form(&psi.graph), canonical_form(&phi.graph));
    }

    #[test]
    fn q3_torus_cutout_and_tilted_form() {
        let q3t = fixtures::q3_torus_cutout().realize().unwrap();
        assert_eq!(canonical_form(&q3t.graph), canonical_form(&generators::q3()));
        let c = q3t.coloring(4).unwrap();
        assert!(coloring::verify_tc(&q3t.graph, &c).verdict());

        // stacking the torus cutout of Q3 vertically does not cover Q3:
        // it produces the 8-prism, here with a genus-1 all-squares embedding
        let ext = periodic_extension(&fixtures::q3_torus_cutout(), Axis::Vertical, 2).realize().unwrap();
        assert_eq!(ext.graph.n, 16);
        assert_eq!(ext.genus, 1);
        assert_eq!(canonical_form(&ext.graph), canonical_form(&generators::prism_graph(8)));
        assert!(coloring::verify_etgc(&ext.graph, &ext.coloring(4).unwrap()).verdict());

        // the tilted cutout realizes the 16-vertex truncated-square-tiling graph
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        let tilted = fixtures::tilted_16_cutout().realize().unwrap();
        assert_eq!(tilted.genus, 1);
        assert_eq!(canonical_form(&tilted.graph), canonical_form(&phi.graph));
        assert!(coloring::verify_etgc(&tilted.graph, &tilted.coloring(4).unwrap()).verdict());
    }

    #[test]
    fn unfold_reproduces_ladder_pattern() {
        let frag = fixtures::ladder_fragment();
        let once = accordion_unfold(&frag, 0, 2);
        assert_eq!(once, fixtures::ladder_fragment_unfolded(2));
        let twice = accordion_unfold(&frag, 0, 3);
        assert_eq!(twice, fixtures::ladder_fragment_unfolded(3));
    }

    #[test]
    fn unfold_q3_with_odd_half_length_gives_colored_c8k2() {
        let cut = fixtures::q3_cutout_left();
        let unf = accordion_unfold(&cut, 0, 3);
        let r = unf.realize().unwrap();
        assert_eq!(r.graph.n, 16);
        assert_eq!(canonical_form(&r.graph), canonical_form(&generators::prism_graph(8)));
        let c = r.coloring(4).unwrap();
        assert!(coloring::verify_etgc(&r.graph, &c).verdict());
    }

    #[test]
    fn unfold_q3_with_even_half_length_gives_hexagonal_prism() {
        // G(6,1) has 6-belts, so no ETGC; the structure is still right
        let cut = fixtures::q3_cutout_left();
        let unf = accordion_unfold(&cut, 0, 2);
        let r = unf.strip_colors().realize().unwrap();
        assert_eq!(r.graph.n, 12);
        assert_eq!(canonical_form(&r.graph), canonical_form(&generators::prism_graph(6)));
    }

    #[test]
    fn planarizing_exchange_recovers_planar_cutout() {
        // the 16-vertex toroidal graph loses its two leftmost horizontal
        // edges and gains the two vertical border edges, becoming the planar
        // graph of the four-row cylinder cutout
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        let c = phi.coloring(4).unwrap();
        let e = (phi.index_of[&(0, 0)], phi.index_of[&(1, 0)]);
        let f = (phi.index_of[&(0, 1)], phi.index_of[&(1, 1)]);
        let mut ledger = GenusLedger::starting_at(phi.genus);
        let out = cycle_exchange(&phi.graph, &c, e, f, &phi.belts, ExchangePolicy::Planarizing, &mut ledger).unwrap();
        assert_eq!(ledger.genus, 0);
        assert!(coloring::verify_etgc(&out.graph, &out.coloring).verdict());
        let planar = fixtures::octaedro_middle_cutout().realize().unwrap();
        assert_eq!(canonical_form(&out.graph), canonical_form(&planar.graph));
    }

    #[test]
    fn exchange_is_an_involution() {
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        let c = phi.coloring(4).unwrap();
        let e = (phi.index_of[&(0, 0)], phi.index_of[&(1, 0)]);
        let f = (phi.index_of[&(0, 1)], phi.index_of[&(1, 1)]);
        let mut ledger = GenusLedger::starting_at(1);
        let out = cycle_exchange(&phi.graph, &c, e, f, &phi.belts, ExchangePolicy::Planarizing, &mut ledger).unwrap();
        // exchanging the new pair back restores the original graph
        let g2 = (e.0.min(f.0), e.0.max(f.0));
        let h2 = (e.1.min(f.1), e.1.max(f.1));
        let back = cycle_exchange(&out.graph, &out.coloring, g2, h2, &[], ExchangePolicy::Auto, &mut ledger).unwrap();
        assert_eq!(back.graph, phi.graph);
        assert_eq!(back.coloring, c);
    }

    #[test]
    fn octaedro_left_is_q3() {
        let r = fixtures::octaedro_left_cutout().realize().unwrap();
        assert_eq!(canonical_form(&r.graph), canonical_form(&generators::q3()));
        assert!(coloring::verify_etgc(&r.graph, &r.coloring(4).unwrap()).verdict());
    }
}
