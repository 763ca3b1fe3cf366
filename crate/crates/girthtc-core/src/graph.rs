//! Graph representation: sorted adjacency lists plus per-vertex bitsets for
//! O(1) adjacency tests. Capped at 64 vertices.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    bits: Vec<u64>,
    pub labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large: {} vertices", n);
        Graph { n, adj: vec![Vec::new(); n], bits: vec![0u64; n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({},{}) out of range", u, v);
        assert!(u != v, "loop at {}", u);
        if self.adjacent(u, v) {
            return;
        }
        self.bits[u] |= 1 << v;
        self.bits[v] |= 1 << u;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(self.adjacent(u, v), "edge ({},{}) not present", u, v);
        self.bits[u] &= !(1 << v);
        self.bits[v] &= !(1 << u);
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        if (0..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as sorted (u, v) pairs with u < v, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        assert!(v < self.n, "vertex {} out of range", v);
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if seen >> v & 1 == 0 {
                    seen |= 1 << v;
                    stack.push(v);
                }
            }
        }
        seen.count_ones() as usize == self.n
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for root in 0..self.n {
            // BFS from root; a non-tree edge at depths d(x), d(y) closes a
            // cycle of length d(x)+d(y)+1. The minimum over all roots is
            // exact for unweighted graphs.
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = vec![root];
            dist[root] = 0;
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                if 2 * dist[x] >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push(y);
                    } else if parent[x] != y && parent[y] != x {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            None
        } else {
            Some(best)
        }
    }

    /// Every simple cycle of exactly length `len`, canonically rotated,
    /// sorted. Rooted DFS: a cycle is reported from its smallest vertex and
    /// only walked in the direction of its smaller second neighbor.
    pub fn cycles_of_length(&self, len: usize) -> Vec<Cycle> {
        assert!(len >= 3, "cycle length must be at least 3");
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(len);
        for root in 0..self.n {
            path.push(root);
            self.cycle_dfs(root, len, &mut path, 1u64 << root, &mut out);
            path.pop();
        }
        out.sort();
        out
    }

    fn cycle_dfs(&self, root: usize, len: usize, path: &mut Vec<usize>, used: u64, out: &mut Vec<Cycle>) {
        let last = *path.last().unwrap();
        if path.len() == len {
            // close the cycle; path[1] < path[len-1] kills the mirror copy
            if self.adjacent(last, root) && path[1] < path[len - 1] {
                out.push(Cycle { vertices: path.clone() });
            }
            return;
        }
        for &next in &self.adj[last] {
            if next > root && used >> next & 1 == 0 {
                path.push(next);
                self.cycle_dfs(root, len, path, used | 1 << next, out);
                path.pop();
            }
        }
    }

    pub fn girth_cycles(&self) -> Vec<Cycle> {
        match self.girth() {
            Some(g) => self.cycles_of_length(g),
            None => Vec::new(),
        }
    }

    /// Subgraph induced on `verts`, vertices renumbered in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if i < j && self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Simple cycle in canonical rotation: smallest vertex first, then the
/// smaller of its two cycle neighbors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 3);
        let n = vertices.len();
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap();
        let mut rot: Vec<usize> = (0..n).map(|i| vertices[(start + i) % n]).collect();
        if rot[1] > rot[n - 1] {
            rot[1..].reverse();
        }
        Cycle { vertices: rot }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges as sorted pairs, one per cycle step.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let u = self.vertices[i];
                let v = self.vertices[(i + 1) % n];
                (u.min(v), u.max(v))
            })
            .collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges().contains(&key)
    }

    pub fn validate(&self, g: &Graph) -> bool {
        let n = self.vertices.len();
        let mut seen = 0u64;
        for i in 0..n {
            let u = self.vertices[i];
            if seen >> u & 1 == 1 {
                return false;
            }
            seen |= 1 << u;
            if !g.adjacent(u, self.vertices[(i + 1) % n]) {
                return false;
            }
        }
        true
    }
}

/// Sorted edge key.
pub fn ekey(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn c6() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    }

    #[test]
    fn closed_neighborhoods() {
        let q3 = generators::q3();
        // vertex 0 = 000; neighbors 100=1(bit flips): labels are binary strings
        let mut n0 = q3.closed_neighborhood(0);
        n0.sort();
        assert_eq!(n0, vec![0, 1, 2, 4]);
        assert_eq!(c6().closed_neighborhood(2), vec![1, 2, 3]);
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(k2.closed_neighborhood(0), vec![0, 1]);
    }

    #[test]
    fn girth_values() {
        assert_eq!(generators::q3().girth(), Some(4));
        assert_eq!(c6().girth(), Some(6));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.girth(), None);
        let c10 = Graph::from_edges(10, &(0..10).map(|i| (i, (i + 1) % 10)).collect::<Vec<_>>());
        assert_eq!(c10.girth(), Some(10));
    }

    #[test]
    fn q3_has_six_squares() {
        let q3 = generators::q3();
        let cycles = q3.cycles_of_length(4);
        assert_eq!(cycles.len(), 6);
        for c in &cycles {
            assert!(c.validate(&q3));
        }
        // vertex-transitive: every vertex on the same number of girth cycles
        for v in 0..8 {
            assert_eq!(cycles.iter().filter(|c| c.contains_vertex(v)).count(), 3);
        }
    }

    #[test]
    fn cycles_are_unique_and_canonical() {
        let q3 = generators::q3();
        let mut cycles = q3.cycles_of_length(4);
        let before = cycles.len();
        cycles.dedup();
        assert_eq!(cycles.len(), before);
        for c in cycles {
            let rotated: Vec<usize> = {
                let v = c.vertices();
                let mut r = v[2..].to_vec();
                r.extend_from_slice(&v[..2]);
                r
            };
            assert_eq!(Cycle::new(rotated), c);
        }
    }

    #[test]
    fn cycle_canonical_rotation_picks_smaller_neighbor() {
        let c = Cycle::new(vec![3, 1, 4, 2]);
        assert_eq!(c.vertices(), &[1, 3, 2, 4]);
    }

    #[test]
    fn handshake() {
        let q3 = generators::q3();
        let degsum: usize = (0..q3.n).map(|v| q3.degree(v)).sum();
        assert_eq!(degsum, 2 * q3.edge_count());
    }
}
