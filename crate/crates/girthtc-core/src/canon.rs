//! Canonical labeling by color refinement with individualization, good enough
//! for the tiny, mildly symmetric graphs this crate deals in.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Canonical byte string: equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let colors = vec![0usize; g.n];
    let mut best: Option<Vec<u8>> = None;
    search(g, colors, &mut best);
    let mut out = vec![g.n as u8];
    out.extend(best.unwrap_or_default());
    out
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    refine(g, &mut colors);
    // first non-singleton color class, smallest color id
    let mut cell: Option<usize> = None;
    for c in 0..g.n {
        if colors.iter().filter(|&&x| x == c).count() > 1 {
            cell = Some(c);
            break;
        }
    }
    match cell {
        None => {
            let bytes = relabeled_bytes(g, &colors);
            if best.as_ref().map_or(true, |b| bytes < *b) {
                *best = Some(bytes);
            }
        }
        Some(c) => {
            for v in 0..g.n {
                if colors[v] == c {
                    let mut next = colors.clone();
                    next[v] = g.n; // fresh distinguished color
                    search(g, next, best);
                }
            }
        }
    }
}

/// Iterated refinement: a vertex's new color is determined by its old color
/// and the multiset of its neighbors' colors. Color ids are re-issued in
/// sorted signature order, so they are canonical per partition.
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(g.n);
        for v in 0..g.n {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
            around.sort_unstable();
            sigs.push((colors[v], around));
        }
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        // re-issue in sorted order for determinism
        let mut sorted: Vec<&(usize, Vec<usize>)> = ids.keys().copied().collect();
        sorted.sort();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let fresh: Vec<usize> = (0..g.n).map(|v| rank[&sigs[v]]).collect();
        let old_classes = count_distinct(colors);
        let new_classes = count_distinct(&fresh);
        *colors = fresh;
        if new_classes == old_classes {
            return;
        }
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut seen = [false; 65];
    let mut n = 0;
    for &x in xs {
        let x = x.min(64);
        if !seen[x] {
            seen[x] = true;
            n += 1;
        }
    }
    n
}

/// Upper-triangle adjacency bits of the graph relabeled so vertex v gets
/// position colors[v] (discrete partition assumed).
fn relabeled_bytes(g: &Graph, colors: &[usize]) -> Vec<u8> {
    let mut pos = vec![0usize; g.n];
    for v in 0..g.n {
        pos[v] = colors[v];
    }
    let mut inv = vec![0usize; g.n];
    for v in 0..g.n {
        inv[pos[v]] = v;
    }
    let mut bits = Vec::new();
    let mut cur = 0u8;
    let mut nbits = 0;
    for i in 0..g.n {
        for j in (i + 1)..g.n {
            cur <<= 1;
            if g.adjacent(inv[i], inv[j]) {
                cur |= 1;
            }
            nbits += 1;
            if nbits == 8 {
                bits.push(cur);
                cur = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bits.push(cur << (8 - nbits));
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Graph;
    use crate::XorShift;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let mut h = Graph::new(g.n);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Brute-force isomorphism by exhaustive mapping search; test oracle only.
    fn brute_iso(a: &Graph, b: &Graph) -> bool {
        if a.n != b.n || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut map = alloc::vec![usize::MAX; a.n];
        let mut used = 0u64;
        fn go(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut u64) -> bool {
            if v == a.n {
                return true;
            }
            for w in 0..b.n {
                if *used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                    continue;
                }
                let ok = (0..v).all(|u| a.adjacent(u, v) == b.adjacent(map[u], w));
                if ok {
                    map[v] = w;
                    *used |= 1 << w;
                    if go(a, b, v + 1, map, used) {
                        return true;
                    }
                    *used &= !(1 << w);
                }
            }
            false
        }
        go(a, b, 0, &mut map, &mut used)
    }

    #[test]
    fn q3_invariant_under_relabeling() {
        let q3 = generators::q3();
        let base = canonical_form(&q3);
        let mut rng = XorShift::new(42);
        for _ in 0..100 {
            let mut perm: alloc::vec::Vec<usize> = (0..8).collect();
            rng.shuffle(&mut perm);
            assert_eq!(canonical_form(&permuted(&q3, &perm)), base);
        }
    }

    #[test]
    fn q3_differs_from_c8() {
        let c8 = Graph::from_edges(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<alloc::vec::Vec<_>>());
        assert_ne!(canonical_form(&generators::q3()), canonical_form(&c8));
    }

    #[test]
    fn agrees_with_brute_force_oracle() {
        let q3 = generators::q3();
        let c8k2 = generators::prism_graph(8);
        let mut rng = XorShift::new(5);
        let mut perm: alloc::vec::Vec<usize> = (0..16).collect();
        rng.shuffle(&mut perm);
        let c8k2p = permuted(&c8k2, &perm);
        assert!(brute_iso(&c8k2, &c8k2p));
        assert_eq!(canonical_form(&c8k2), canonical_form(&c8k2p));
        assert!(!brute_iso(&q3, &c8k2));
        assert_ne!(canonical_form(&q3), canonical_form(&c8k2));
    }
}
