//! Hand-checked cutout drawings of the small host graphs: the prism rings,
//! the 16-vertex toroidal graph in several drawings, and the 48-vertex
//! toroidal host of the genus-raising cycle exchange.

use alloc::vec::Vec;

use super::{Cutout, Identification};

/// Ring of `j` period-4 columns: the cylinder cutout of C_{4j} x K2
/// (j = 1 gives Q3). `variant` 0 and 1 are the two orthogonal colorings.
pub fn prism_ring_cutout(j: i64, variant: usize) -> Cutout {
    assert!(j >= 1 && variant < 2);
    let top_v = [0, 1, 2, 3];
    let bot_v = [2, 3, 0, 1];
    let (top_e, rung, bot_e): ([usize; 4], [usize; 4], [usize; 4]) = if variant == 0 {
        ([3, 0, 1, 2], [1, 2, 3, 0], [0, 1, 2, 3])
    } else {
        ([2, 3, 0, 1], [3, 0, 1, 2], [1, 2, 3, 0])
    };
    let w = 4 * j;
    let mut cut = Cutout::new(w, 2, Identification::CylinderHorizontal);
    for x in 0..w {
        let m = (x % 4) as usize;
        cut.put((x, 0), top_v[m]);
        cut.put((x, 1), bot_v[m]);
        cut.seg((x, 0), (x, 1), rung[m]);
        cut.seg((x, 0), (x + 1, 0), top_e[m]);
        cut.seg((x, 1), (x + 1, 1), bot_e[m]);
    }
    cut
}

pub fn q3_cutout_left() -> Cutout {
    prism_ring_cutout(1, 0)
}

pub fn q3_cutout_right() -> Cutout {
    prism_ring_cutout(1, 1)
}

/// The colored square whose unfolding pattern seeds every accordion ladder.
pub fn ladder_fragment() -> Cutout {
    let mut cut = Cutout::new(2, 2, Identification::Plane);
    cut.put((0, 0), 0); // A
    cut.put((1, 0), 3); // D
    cut.put((0, 1), 1); // B
    cut.put((1, 1), 2); // C
    cut.seg((0, 0), (1, 0), 1); // b
    cut.seg((0, 1), (1, 1), 3); // d
    cut.seg((0, 0), (0, 1), 2); // c
    cut.seg((1, 0), (1, 1), 0); // a
    cut
}

/// The ladder the fragment unfolds to, written out from its own period-4
/// pattern as an independent check of the unfolding operation.
pub fn ladder_fragment_unfolded(l: i64) -> Cutout {
    let tops = [0, 3, 1, 2];
    let bots = [1, 2, 0, 3];
    let rungs = [2, 0, 3, 1];
    let tedge = [1, 2, 0, 3];
    let bedge = [3, 1, 2, 0];
    let cols = 2 * l;
    let mut cut = Cutout::new(cols, 2, Identification::Plane);
    for j in 0..cols {
        let m = (j % 4) as usize;
        cut.put((j, 0), tops[m]);
        cut.put((j, 1), bots[m]);
        cut.seg((j, 0), (j, 1), rungs[m]);
        if j + 1 < cols {
            cut.seg((j, 0), (j + 1, 0), tedge[m]);
            cut.seg((j, 1), (j + 1, 1), bedge[m]);
        }
    }
    cut
}

struct RowSpec {
    verts: [usize; 4],
    /// horizontal edge colors keyed by left column; None = no edge drawn
    hedges: [Option<usize>; 4],
}

fn four_by_four(ident: Identification, rows: [RowSpec; 4], vbands: [[Option<usize>; 4]; 4]) -> Cutout {
    let mut cut = Cutout::new(4, 4, ident);
    for (y, row) in rows.iter().enumerate() {
        let y = y as i64;
        for x in 0..4i64 {
            cut.put((x, y), row.verts[x as usize]);
            if let Some(c) = row.hedges[x as usize] {
                cut.seg((x, y), (x + 1, y), c);
            }
        }
    }
    for (b, band) in vbands.iter().enumerate() {
        let y = b as i64;
        for x in 0..4i64 {
            if let Some(c) = band[x as usize] {
                cut.seg((x, y), (x, y + 1), c);
            }
        }
    }
    cut
}

/// Normal toroidal cutout of the 16-vertex toroidal girth-4 graph, with its
/// efficient total girth coloring.
pub fn gamma11_cutout() -> Cutout {
    four_by_four(
        Identification::Torus,
        [
            RowSpec { verts: [0, 2, 3, 1], hedges: [Some(1), Some(0), None, Some(3)] },
            RowSpec { verts: [2, 0, 1, 3], hedges: [Some(1), Some(3), None, Some(0)] },
            RowSpec { verts: [1, 3, 2, 0], hedges: [None, Some(1), Some(3), Some(2)] },
            RowSpec { verts: [3, 1, 0, 2], hedges: [None, Some(2), Some(3), Some(1)] },
        ],
        [
            [None, None, Some(2), Some(2)],
            [Some(3), Some(2), Some(0), Some(1)],
            [Some(0), Some(0), None, None],
            [Some(2), Some(3), Some(1), Some(0)],
        ],
    )
}

/// Second normal toroidal cutout of the same 16-vertex graph, drawn from the
/// other cutout family.
pub fn psi_cutout() -> Cutout {
    four_by_four(
        Identification::Torus,
        [
            RowSpec { verts: [0, 1, 2, 3], hedges: [Some(3), Some(0), Some(1), Some(2)] },
            RowSpec { verts: [2, 3, 0, 1], hedges: [Some(0), None, Some(2), None] },
            RowSpec { verts: [1, 0, 3, 2], hedges: [Some(2), None, Some(0), None] },
            RowSpec { verts: [3, 2, 1, 0], hedges: [Some(1), Some(0), Some(3), Some(2)] },
        ],
        [
            [Some(1), Some(2), Some(3), Some(0)],
            [Some(3), Some(1), Some(1), Some(3)],
            [Some(0), Some(3), Some(2), Some(1)],
            [None, None, None, None],
        ],
    )
}

/// Normal toroidal cutout of Q3. Its 8-cycles are not belts, so extensions
/// of this drawing leave the Q3 family.
pub fn q3_torus_cutout() -> Cutout {
    let mut cut = Cutout::new(4, 2, Identification::Torus);
    let verts = [[0, 1, 2, 3], [2, 3, 0, 1]];
    let hedges = [[3, 0, 1, 2], [0, 1, 2, 3]];
    for y in 0..2i64 {
        for x in 0..4i64 {
            cut.put((x, y), verts[y as usize][x as usize]);
            cut.seg((x, y), (x + 1, y), hedges[y as usize][x as usize]);
        }
    }
    cut.seg((0, 0), (0, 1), 1);
    cut.seg((1, 0), (1, 1), 2);
    cut.seg((2, 1), (2, 2), 3);
    cut.seg((3, 1), (3, 2), 0);
    cut
}

/// Tilted cutout of the 16-vertex toroidal graph: crossing the right border
/// re-enters two rows lower.
pub fn tilted_16_cutout() -> Cutout {
    let mut cut = Cutout::new(4, 4, Identification::TorusTiltedX { shift: 2 });
    let verts = [[0, 1, 3, 0], [3, 2, 0, 3], [2, 3, 1, 2], [1, 0, 2, 1]];
    let hedges = [[3, 2, 1, 3], [1, 3, 1, 2], [1, 0, 3, 1], [3, 1, 3, 0]];
    for y in 0..4i64 {
        for x in 0..4i64 {
            cut.put((x, y), verts[y as usize][x as usize]);
            cut.seg((x, y), (x + 1, y), hedges[y as usize][x as usize]);
        }
    }
    cut.seg((0, 0), (0, 1), 2);
    cut.seg((0, 2), (0, 3), 0);
    cut.seg((1, 0), (1, 1), 0);
    cut.seg((1, 2), (1, 3), 2);
    cut.seg((2, 1), (2, 2), 2);
    cut.seg((2, 3), (2, 4), 0);
    cut.seg((3, 1), (3, 2), 0);
    cut.seg((3, 3), (3, 4), 2);
    cut
}

/// Q3 drawn as a two-column cylinder cutout.
pub fn octaedro_left_cutout() -> Cutout {
    let mut cut = Cutout::new(2, 4, Identification::CylinderVertical);
    let verts = [[1, 0], [2, 3], [0, 1], [3, 2]];
    let hedges = [2, 0, 3, 1];
    let vbands = [[3, 1], [1, 2], [2, 0], [0, 3]];
    for y in 0..4i64 {
        for x in 0..2i64 {
            cut.put((x, y), verts[y as usize][x as usize]);
        }
        cut.seg((0, y), (1, y), hedges[y as usize]);
        for x in 0..2i64 {
            cut.seg((x, y), (x, y + 1), vbands[y as usize][x as usize]);
        }
    }
    cut
}

/// Planar 16-vertex cylinder cutout: the planarized form of the 16-vertex
/// toroidal graph after the border-merging cycle exchange.
pub fn octaedro_middle_cutout() -> Cutout {
    let mut cut = Cutout::new(4, 4, Identification::CylinderVertical);
    let rows = [
        ([1, 0, 2, 3], [Some(2), Some(3), Some(1)]),
        ([2, 3, 1, 0], [Some(0), None, Some(3)]),
        ([0, 1, 3, 2], [Some(3), None, Some(0)]),
        ([3, 2, 0, 1], [Some(1), Some(3), Some(2)]),
    ];
    let vbands: [[Option<usize>; 4]; 4] = [
        [Some(3), Some(1), Some(0), Some(2)],
        [Some(1), Some(2), Some(2), Some(1)],
        [Some(2), Some(0), Some(1), Some(3)],
        [Some(0), None, None, Some(0)],
    ];
    for (y, (verts, hedges)) in rows.iter().enumerate() {
        let y = y as i64;
        for x in 0..4i64 {
            cut.put((x, y), verts[x as usize]);
        }
        for x in 0..3i64 {
            if let Some(c) = hedges[x as usize] {
                cut.seg((x, y), (x + 1, y), c);
            }
        }
    }
    for (b, band) in vbands.iter().enumerate() {
        let y = b as i64;
        for x in 0..4i64 {
            if let Some(c) = band[x as usize] {
                cut.seg((x, y), (x, y + 1), c);
            }
        }
    }
    cut
}

/// The 48-vertex toroidal graph hosting the genus-raising cycle exchange,
/// drawn on an 8x6 grid whose bottom border re-enters four columns over.
/// Only one 4-belt carries colors; propagation recovers the rest.
pub fn fortyeight_cutout() -> Cutout {
    let mut cut = Cutout::new(8, 6, Identification::TorusTiltedY { shift: 4 });
    // horizontal edges present, keyed by (row, left column)
    let hrows: [&[i64]; 6] = [
        &[0, 1, 2, 3, 4, 5, 6, 7],
        &[0, 1, 2, 4, 5, 6],
        &[0, 1, 2, 4, 5, 6],
        &[0, 1, 2, 3, 4, 5, 6, 7],
        &[0, 2, 3, 4, 6, 7],
        &[0, 2, 3, 4, 6, 7],
    ];
    // vertical edges per band y..y+1
    let vbands: [&[i64]; 6] = [
        &[0, 3, 4, 7],
        &[0, 1, 2, 3, 4, 5, 6, 7],
        &[0, 3, 4, 7],
        &[1, 2, 5, 6],
        &[0, 1, 2, 3, 4, 5, 6, 7],
        &[1, 2, 5, 6],
    ];
    for y in 0..6i64 {
        for x in 0..8i64 {
            cut.put((x, y), None);
        }
        for &x in hrows[y as usize] {
            cut.seg((x, y), (x + 1, y), None);
        }
        for &x in vbands[y as usize] {
            cut.seg((x, y), (x, y + 1), None);
        }
    }
    // seed 4-belt: columns 0-1, rows 1-2
    cut.put((0, 1), 2);
    cut.put((1, 1), 3);
    cut.put((0, 2), 1);
    cut.put((1, 2), 0);
    let seed_edges: [((i64, i64), (i64, i64), usize); 4] = [
        ((0, 1), (1, 1), 0),
        ((0, 2), (1, 2), 2),
        ((0, 1), (0, 2), 3),
        ((1, 1), (1, 2), 1),
    ];
    for (f, t, c) in seed_edges {
        for s in cut.segments.iter_mut() {
            if (s.from == f && s.to == t) || (s.from == t && s.to == f) {
                s.color = Some(c);
            }
        }
    }
    cut
}

/// Positions of the marked exchange edges e and f in the 48-vertex cutout.
pub fn fortyeight_exchange_positions() -> (((i64, i64), (i64, i64)), ((i64, i64), (i64, i64))) {
    (((3, 0), (3, 1)), ((3, 4), (3, 5)))
}

/// Reference colors the drawing shows for a few elements away from the seed,
/// used to cross-check propagation: (position, vertex color).
pub fn fortyeight_reference_vertices() -> Vec<((i64, i64), usize)> {
    alloc::vec![
        ((3, 0), 2),
        ((3, 1), 0),
        ((3, 4), 2),
        ((3, 5), 0),
        ((4, 3), 2),
        ((7, 0), 3),
        ((0, 5), 2),
    ]
}
