//! Edge-partitions of ETC-colored cubic graphs: into 3-edge paths driven by
//! vertex-color words, and into 3-stars centered on one vertex color class.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coloring::{self, TotalColoring};
use crate::graph::{ekey, Graph};

/// The six complementary pairs of 4-color sequences. Together with their
/// reversals they exhaust the 24 permutations of the palette, so every
/// rainbow 3-path belongs to exactly one pair.
pub const SEQUENCE_PAIRS: [([usize; 4], [usize; 4]); 6] = [
    ([0, 1, 2, 3], [1, 3, 0, 2]),
    ([0, 1, 3, 2], [1, 2, 0, 3]),
    ([0, 2, 1, 3], [2, 3, 0, 1]),
    ([0, 2, 3, 1], [2, 1, 0, 3]),
    ([0, 3, 1, 2], [3, 2, 0, 1]),
    ([0, 3, 2, 1], [3, 1, 0, 2]),
];

/// A path on 4 vertices (3 edges) whose vertex colors read `word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePath {
    pub vertices: [usize; 4],
    pub word: [usize; 4],
}

impl ThreePath {
    pub fn edges(&self) -> [(usize, usize); 3] {
        let v = &self.vertices;
        [ekey(v[0], v[1]), ekey(v[1], v[2]), ekey(v[2], v[3])]
    }
}

/// An edge-partition into |V|/2 3-edge paths, half per word of the pair.
#[derive(Clone, Debug)]
pub struct PathPartition {
    pub pair: ([usize; 4], [usize; 4]),
    pub paths: Vec<ThreePath>,
}

/// An edge-partition into |V|/4 3-stars, all centers of one vertex color.
#[derive(Clone, Debug)]
pub struct StarPartition {
    pub center_color: usize,
    pub stars: Vec<(usize, [(usize, usize); 3])>,
}

/// Follow the word from a start vertex. In an ETC every closed neighborhood
/// is rainbow, so each vertex has exactly one neighbor of each other color
/// and the walk is forced.
fn trace(g: &Graph, c: &TotalColoring, start: usize, word: [usize; 4]) -> Option<ThreePath> {
    debug_assert_eq!(c.vertex[start], word[0]);
    let mut vs = [start, 0, 0, 0];
    for i in 1..4 {
        let next = *g.neighbors(vs[i - 1]).iter().find(|&&w| c.vertex[w] == word[i])?;
        vs[i] = next;
    }
    if vs[0] == vs[2] || vs[1] == vs[3] || vs[0] == vs[3] {
        return None;
    }
    Some(ThreePath { vertices: vs, word })
}

/// The path partition a sequence pair induces on an ETGC-colored graph:
/// one path per vertex colored by each word's first symbol, traced along
/// the word. Paths are returned ordered by least edge.
pub fn three_path_partition(
    g: &Graph,
    etgc: &TotalColoring,
    pair: ([usize; 4], [usize; 4]),
) -> Result<PathPartition, String> {
    if !coloring::verify_etgc(g, etgc).verdict() {
        return Err(String::from("coloring is not an efficient total girth coloring"));
    }
    if !SEQUENCE_PAIRS.contains(&pair) {
        return Err(format!("{:?} is not one of the six sequence pairs", pair));
    }
    let mut paths = Vec::new();
    for word in [pair.0, pair.1] {
        for v in 0..g.n {
            if etgc.vertex[v] == word[0] {
                let p = trace(g, etgc, v, word)
                    .ok_or_else(|| format!("word {:?} does not extend from vertex {}", word, v))?;
                paths.push(p);
            }
        }
    }
    let mut covered = BTreeSet::new();
    for p in &paths {
        for e in p.edges() {
            if !covered.insert(e) {
                return Err(format!("edge {:?} traced twice", e));
            }
        }
    }
    if covered.len() != g.edge_count() {
        return Err(String::from("traced paths do not cover every edge"));
    }
    paths.sort_by_key(|p| p.edges()[0]);
    Ok(PathPartition { pair, paths })
}

/// Which pair a rainbow 3-path's color word belongs to, reading the word in
/// either direction. None if the word repeats a color.
fn pair_of_word(word: [usize; 4]) -> Option<usize> {
    let rev = [word[3], word[2], word[1], word[0]];
    SEQUENCE_PAIRS
        .iter()
        .position(|&(a, b)| a == word || b == word || a == rev || b == rev)
}

/// Brute-force count of edge-partitions of g into 3-edge paths that are
/// driven by a single sequence pair (every path's vertex word, read either
/// way, is one of the pair's two words).
pub fn count_three_path_partitions(g: &Graph, etgc: &TotalColoring) -> Result<usize, String> {
    if !coloring::verify_etgc(g, etgc).verdict() {
        return Err(String::from("coloring is not an efficient total girth coloring"));
    }
    if g.n > 16 {
        return Err(String::from("exhaustive partition count is limited to 16 vertices"));
    }
    let edges = g.edges();
    let mut covered = BTreeSet::new();
    let mut count = 0usize;
    fn paths_through(g: &Graph, e: (usize, usize), covered: &BTreeSet<(usize, usize)>) -> Vec<[usize; 4]> {
        // all 3-edge paths containing e with no covered edge; e may sit at
        // either end or in the middle
        let mut out = Vec::new();
        let (u, v) = e;
        for (a, b) in [(u, v), (v, u)] {
            // e in the middle: x-a-b-y
            for &x in g.neighbors(a) {
                if x == b || covered.contains(&ekey(x, a)) {
                    continue;
                }
                for &y in g.neighbors(b) {
                    if y == a || y == x || covered.contains(&ekey(b, y)) {
                        continue;
                    }
                    if a < b || (a == b && x < y) {
                        out.push([x, a, b, y]);
                    }
                }
            }
            // e at the end: a-b-x-y
            for &x in g.neighbors(b) {
                if x == a || covered.contains(&ekey(b, x)) {
                    continue;
                }
                for &y in g.neighbors(x) {
                    if y == b || y == a || covered.contains(&ekey(x, y)) {
                        continue;
                    }
                    out.push([a, b, x, y]);
                }
            }
        }
        // canonical orientation, in case a path was emitted both ways
        for p in &mut out {
            let rev = [p[3], p[2], p[1], p[0]];
            if rev < *p {
                *p = rev;
            }
        }
        out.sort();
        out.dedup();
        out
    }
    fn recurse(
        g: &Graph,
        c: &TotalColoring,
        edges: &[(usize, usize)],
        covered: &mut BTreeSet<(usize, usize)>,
        chosen_pair: &mut Option<usize>,
        count: &mut usize,
    ) {
        let Some(&e) = edges.iter().find(|e| !covered.contains(e)) else {
            *count += 1;
            return;
        };
        for path in paths_through(g, e, covered) {
            let word = [c.vertex[path[0]], c.vertex[path[1]], c.vertex[path[2]], c.vertex[path[3]]];
            let Some(p) = pair_of_word(word) else { continue };
            if chosen_pair.is_some_and(|q| q != p) {
                continue;
            }
            let had = *chosen_pair;
            *chosen_pair = Some(p);
            let es = [ekey(path[0], path[1]), ekey(path[1], path[2]), ekey(path[2], path[3])];
            for e in es {
                covered.insert(e);
            }
            recurse(g, c, edges, covered, chosen_pair, count);
            for e in es {
                covered.remove(&e);
            }
            *chosen_pair = had;
        }
    }
    let mut chosen = None;
    recurse(g, etgc, &edges, &mut covered, &mut chosen, &mut count);
    Ok(count)
}

/// The four star partitions of an ETC-colored cubic graph: partition i takes
/// every vertex of color i with its three incident edges. Centers of
/// partition i are exactly the color class S_i.
pub fn three_star_partitions(g: &Graph, etc: &TotalColoring) -> Result<Vec<StarPartition>, String> {
    if !coloring::verify_etc(g, etc).verdict() {
        return Err(String::from("coloring is not an efficient total coloring"));
    }
    let mut out = Vec::new();
    for color in 0..etc.palette {
        let mut stars = Vec::new();
        for v in 0..g.n {
            if etc.vertex[v] == color {
                let nb = g.neighbors(v);
                stars.push((v, [ekey(v, nb[0]), ekey(v, nb[1]), ekey(v, nb[2])]));
            }
        }
        out.push(StarPartition { center_color: color, stars });
    }
    Ok(out)
}
