//! End-to-end acceptance suite: one test per documented criterion, each
//! printing a single pass/fail line (visible with `--nocapture`).

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use girthtc::formats::audit_csv;
use girthtc_core::canon::canonical_form;
use girthtc_core::coloring::{
    orthogonal, verify_egc, verify_etc, verify_etgc, verify_tc, TotalColoring,
};
use girthtc_core::cutout::{
    accordion_unfold, cycle_exchange, fixtures, periodic_extension, Axis, ExchangePolicy,
    GenusLedger, Realization,
};
use girthtc_core::generators;
use girthtc_core::graph::{ekey, Cycle, Graph};
use girthtc_core::partitions::{
    count_three_path_partitions, three_path_partition, three_star_partitions, SEQUENCE_PAIRS,
};
use girthtc_core::pentad;
use girthtc_core::solver::{
    etc_feasibility, etcing_propagate, exhaustive_tc_search, operation_closure,
    propagate_with_order, seed_from_belt, solve_from_seed, conjecture_audit, PartialColoring,
    Predicate, SearchOptions,
};
use girthtc_core::XorShift;

fn criterion(n: usize, f: impl FnOnce() + UnwindSafe) {
    match catch_unwind(f) {
        Ok(()) => println!("criterion {:02}: pass", n),
        Err(e) => {
            println!("criterion {:02}: fail", n);
            resume_unwind(e);
        }
    }
}

/// Map each cube vertex to its binary label, for label-level assertions.
fn label_of(g: &Graph) -> Vec<String> {
    g.labels.clone().expect("cube carries labels")
}

fn labeled_edge_set(g: &Graph, edges: &[(usize, usize)]) -> BTreeSet<(String, String)> {
    let labels = label_of(g);
    edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (labels[u].clone(), labels[v].clone());
            if a <= b { (a, b) } else { (b, a) }
        })
        .collect()
}

#[test]
fn criterion_01_cube_orthogonal_pair() {
    criterion(1, || {
        let (g, left, right) = generators::q3_pair();
        assert!(verify_etgc(&g, &left).verdict());
        assert!(verify_etgc(&g, &right).verdict());
        assert!(orthogonal(&left, &right));

        // vertex classes are the four antipodal pairs
        let labels = label_of(&g);
        let expected_classes: [[&str; 2]; 4] =
            [["000", "111"], ["100", "011"], ["010", "101"], ["001", "110"]];
        for c in &[&left, &right] {
            for (i, class) in c.color_classes().iter().enumerate() {
                let got: BTreeSet<&str> = class.iter().map(|&v| labels[v].as_str()).collect();
                let want: BTreeSet<&str> = expected_classes[i].iter().copied().collect();
                assert_eq!(got, want, "vertex class {}", i);
            }
        }

        // color-i edge classes are the documented 1-factors F_i
        let fs: [[(&str, &str); 3]; 4] = [
            [("100", "101"), ("010", "110"), ("001", "011")],
            [("000", "010"), ("001", "101"), ("110", "111")],
            [("000", "001"), ("100", "110"), ("011", "111")],
            [("000", "100"), ("010", "011"), ("101", "111")],
        ];
        for (i, f) in fs.iter().enumerate() {
            let got = labeled_edge_set(&g, &left.edge_class(i));
            let want: BTreeSet<(String, String)> = f
                .iter()
                .map(|&(a, b)| {
                    let (a, b) = (a.to_string(), b.to_string());
                    if a <= b { (a, b) } else { (b, a) }
                })
                .collect();
            assert_eq!(got, want, "edge class {}", i);
        }
    });
}

#[test]
fn criterion_02_exhaustive_cube_audit() {
    criterion(2, || {
        let g = generators::q3();
        // up to global color permutation, every total coloring is an ETGC
        let (sols, stats) = exhaustive_tc_search(&g, 4, Predicate::AnyTc, SearchOptions::default());
        assert!(!sols.is_empty());
        assert!(!stats.truncated);
        for s in &sols {
            assert!(verify_etgc(&g, s).verdict());
        }
        // with the drawn vertex coloring fixed, exactly two edge colorings
        let opts = SearchOptions { limit: None, dedup_colors: false };
        let (all, _) = exhaustive_tc_search(&g, 4, Predicate::AnyTc, opts);
        let drawn = vec![0, 1, 2, 3, 3, 2, 1, 0];
        let fixed: Vec<&TotalColoring> = all.iter().filter(|c| c.vertex == drawn).collect();
        assert_eq!(fixed.len(), 2);
        assert!(orthogonal(fixed[0], fixed[1]));
        assert!(fixed.iter().all(|c| verify_etgc(&g, c).verdict()));
    });
}

#[test]
fn criterion_03_necessary_conditions() {
    criterion(3, || {
        let (g6, _) = generators::gp_fixture(6).unwrap();
        let hexagons = [Cycle::new((0..6).collect()), Cycle::new((6..12).collect())];
        let feas6 = etc_feasibility(&g6, Some(&hexagons)).unwrap();
        assert!(!feas6.verdict());
        assert!(feas6.rules_hit().contains(&"FEAS-BELT"));

        let (g7, _) = generators::gp_fixture(7).unwrap();
        let feas7 = etc_feasibility(&g7, None).unwrap();
        assert!(!feas7.verdict());
        assert!(feas7.rules_hit().contains(&"FEAS-DIV"));

        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v);
            }
        }
        assert!(!etc_feasibility(&k33, None).unwrap().verdict());

        for g in [&g6, &g7] {
            let (sols, _) = exhaustive_tc_search(g, 4, Predicate::Etc, SearchOptions::default());
            assert!(sols.is_empty());
        }
    });
}

#[test]
fn criterion_04_constructive_pipeline() {
    criterion(4, || {
        // periodic extension continues the drawn prism pattern
        let ext = periodic_extension(&fixtures::q3_cutout_left(), Axis::Horizontal, 2);
        assert_eq!(ext, fixtures::prism_ring_cutout(2, 0));
        let r = ext.realize().unwrap();
        assert!(verify_etgc(&r.graph, &r.coloring(4).unwrap()).verdict());

        // accordion unfolding reproduces the ladder labels step by step
        for l in [2i64, 3, 4] {
            assert_eq!(
                accordion_unfold(&fixtures::ladder_fragment(), 0, l),
                fixtures::ladder_fragment_unfolded(l)
            );
        }

        // the planarizing exchange turns the toroidal drawing into the
        // planar four-row graph, genus 1 -> 0
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        let c = phi.coloring(4).unwrap();
        let e = (phi.index_of[&(0, 0)], phi.index_of[&(1, 0)]);
        let f = (phi.index_of[&(0, 1)], phi.index_of[&(1, 1)]);
        let mut ledger = GenusLedger::starting_at(phi.genus);
        let out =
            cycle_exchange(&phi.graph, &c, e, f, &phi.belts, ExchangePolicy::Planarizing, &mut ledger)
                .unwrap();
        assert_eq!((phi.genus, ledger.genus), (1, 0));
        assert!(verify_etgc(&out.graph, &out.coloring).verdict());
        let planar = fixtures::octaedro_middle_cutout().realize().unwrap();
        assert_eq!(canonical_form(&out.graph), canonical_form(&planar.graph));

        // the 48-vertex exchange raises the genus and merges two faces of
        // lengths 6 and 14
        let cut = fixtures::fortyeight_cutout();
        let r = cut.realize().unwrap();
        let total = solve_from_seed(&r.graph, &r.belts, &fortyeight_seed(&cut, &r)).unwrap();
        let (pe, pf) = fixtures::fortyeight_exchange_positions();
        let e = (r.index_of[&cut.fold(pe.0)], r.index_of[&cut.fold(pe.1)]);
        let f = (r.index_of[&cut.fold(pf.0)], r.index_of[&cut.fold(pf.1)]);
        let mut ledger = GenusLedger::starting_at(r.genus);
        let out = cycle_exchange(&r.graph, &total, e, f, &r.belts, ExchangePolicy::Auto, &mut ledger)
            .unwrap();
        assert_eq!(out.delta, 1);
        assert!(!out.indeterminate);
        assert_eq!(out.merged_faces, Some((6, 14)));
        assert_eq!(ledger.genus, 2);
    });
}

fn fortyeight_seed(cut: &girthtc_core::cutout::Cutout, r: &Realization) -> PartialColoring {
    let mut seed = PartialColoring::empty(r.graph.n, 4);
    for (&p, &c) in &cut.vertices {
        if let Some(c) = c {
            seed.set_vertex(r.index_of[&p], c);
        }
    }
    for s in &cut.segments {
        if let Some(c) = s.color {
            let u = r.index_of[&cut.fold(s.from)];
            let v = r.index_of[&cut.fold(s.to)];
            seed.set_edge(u, v, c);
        }
    }
    seed
}

/// The two drawn starting squares at columns (1,2) of the prism band.
fn band_square_seed(r: &Realization, vs: [usize; 4], es: [usize; 4]) -> PartialColoring {
    let mut seed = PartialColoring::empty(r.graph.n, 4);
    let at = |x: i64, y: i64| r.index_of[&(x, y)];
    seed.set_vertex(at(1, 0), vs[0]);
    seed.set_vertex(at(2, 0), vs[1]);
    seed.set_vertex(at(1, 1), vs[2]);
    seed.set_vertex(at(2, 1), vs[3]);
    seed.set_edge(at(1, 0), at(2, 0), es[0]);
    seed.set_edge(at(1, 0), at(1, 1), es[1]);
    seed.set_edge(at(2, 0), at(2, 1), es[2]);
    seed.set_edge(at(1, 1), at(2, 1), es[3]);
    seed
}

#[test]
fn criterion_05_propagation_and_confluence() {
    criterion(5, || {
        let r = periodic_extension(&fixtures::q3_cutout_left(), Axis::Horizontal, 2)
            .realize()
            .unwrap();
        let seeds = [
            band_square_seed(&r, [0, 1, 3, 2], [3, 2, 0, 1]),
            band_square_seed(&r, [0, 1, 3, 2], [2, 1, 3, 0]),
        ];
        let mut completions = Vec::new();
        for seed in &seeds {
            let full = solve_from_seed(&r.graph, &r.belts, seed).unwrap();
            assert!(verify_etgc(&r.graph, &full).verdict());
            completions.push(full);
        }
        assert_eq!(completions[0].vertex, completions[1].vertex);
        assert!(orthogonal(&completions[0], &completions[1]));

        // on the toroidal 16-vertex graph every 4-belt seed completes
        let phi = fixtures::gamma11_cutout().realize().unwrap();
        let full = phi.coloring(4).unwrap();
        let mut four_belts = 0;
        for belt in phi.belts.iter().filter(|b| b.len() == 4) {
            four_belts += 1;
            let seed = seed_from_belt(&full, belt, phi.graph.n);
            let got = solve_from_seed(&phi.graph, &phi.belts, &seed).unwrap();
            assert!(verify_etgc(&phi.graph, &got).verdict());
        }
        assert!(four_belts > 0);

        // confluence: rule order never changes the propagation fixpoint
        let gamma_seed = seed_from_belt(&full, phi.belts.iter().find(|b| b.len() == 4).unwrap(), phi.graph.n);
        let cases: [(&Realization, &PartialColoring); 2] = [(&r, &seeds[0]), (&phi, &gamma_seed)];
        let mut rng = XorShift::new(11);
        for (real, seed) in cases {
            let base = etcing_propagate(&real.graph, &real.belts, seed).unwrap();
            for _ in 0..100 {
                let mut order = [0usize, 1, 2];
                rng.shuffle(&mut order);
                let again = propagate_with_order(&real.graph, &real.belts, seed, &order).unwrap();
                assert_eq!(again, base);
            }
        }
    });
}

#[test]
fn criterion_06_toroidal_family() {
    criterion(6, || {
        for h in [1i64, 2] {
            for k in [1i64, 2] {
                let base = fixtures::gamma11_cutout();
                let ext = periodic_extension(&periodic_extension(&base, Axis::Vertical, h), Axis::Horizontal, k);
                let r = ext.realize().unwrap();
                assert_eq!(r.graph.n as i64, 16 * h * k);
                let c = r.coloring(4).unwrap();
                assert!(verify_etgc(&r.graph, &c).verdict(), "h={} k={}", h, k);
                // every 8-belt: antipodal elements share a color, and the
                // belt uses each of the 4 colors exactly twice on vertices
                // and on edges
                for belt in r.belts.iter().filter(|b| b.len() == 8) {
                    let vs = belt.vertices();
                    let mut vcount = [0usize; 4];
                    let mut ecount = [0usize; 4];
                    for i in 0..8 {
                        let vcol = c.vertex[vs[i]];
                        let ecol = c.edge_color(vs[i], vs[(i + 1) % 8]);
                        vcount[vcol] += 1;
                        ecount[ecol] += 1;
                        if i < 4 {
                            assert_eq!(vcol, c.vertex[vs[i + 4]], "antipodal vertices");
                            assert_eq!(
                                ecol,
                                c.edge_color(vs[i + 4], vs[(i + 5) % 8]),
                                "antipodal edges"
                            );
                        }
                    }
                    assert_eq!(vcount, [2, 2, 2, 2]);
                    assert_eq!(ecount, [2, 2, 2, 2]);
                }
            }
        }
    });
}

#[test]
fn criterion_07_prism_edge_girth_coloring() {
    criterion(7, || {
        let pairs = [generators::q3_pair(), generators::prism_ring(2)];
        for (g, a, b) in &pairs {
            let (p, edges) = generators::prism_egc(g, a, b);
            assert!(verify_egc(&p, &edges, 4, false).verdict());
            // every prism square is rainbow on its 4 edges
            for square in p.cycles_of_length(4) {
                let colors: BTreeSet<usize> =
                    square.edges().iter().map(|&(u, v)| edges[&ekey(u, v)]).collect();
                assert_eq!(colors.len(), 4);
            }
        }
    });
}

#[test]
fn criterion_08_partitions() {
    criterion(8, || {
        // the labeled drawing's four 3-paths, by drawn positions:
        //   top edges x=0..3: A A A B / rungs: B D D B / bottom: C D C C
        let r = fixtures::q3_cutout_left().realize().unwrap();
        let c = r.coloring(4).unwrap();
        let part = three_path_partition(&r.graph, &c, SEQUENCE_PAIRS[0]).unwrap();
        assert_eq!(part.paths.len(), 4);
        let at = |x: i64, y: i64| r.index_of[&(x, y)];
        let labeled: [[(i64, i64, i64, i64); 3]; 4] = [
            [(0, 0, 1, 0), (1, 0, 2, 0), (2, 0, 3, 0)],
            [(3, 0, 0, 0), (0, 0, 0, 1), (3, 0, 3, 1)],
            [(0, 1, 1, 1), (2, 1, 3, 1), (3, 1, 0, 1)],
            [(1, 0, 1, 1), (2, 0, 2, 1), (1, 1, 2, 1)],
        ];
        let expect: BTreeSet<Vec<(usize, usize)>> = labeled
            .iter()
            .map(|path| {
                let mut es: Vec<(usize, usize)> =
                    path.iter().map(|&(x0, y0, x1, y1)| ekey(at(x0, y0), at(x1, y1))).collect();
                es.sort();
                es
            })
            .collect();
        let got: BTreeSet<Vec<(usize, usize)>> = part
            .paths
            .iter()
            .map(|p| {
                let mut es = p.edges().to_vec();
                es.sort();
                es
            })
            .collect();
        assert_eq!(got, expect);

        // star partitions: one per color, centered on the vertex classes
        let (g, left, _) = generators::q3_pair();
        let stars = three_star_partitions(&g, &left).unwrap();
        assert_eq!(stars.len(), 4);
        for (i, p) in stars.iter().enumerate() {
            assert_eq!(p.center_color, i);
            assert_eq!(p.stars.len(), g.n / 4);
            let centers: BTreeSet<usize> = p.stars.iter().map(|&(c, _)| c).collect();
            let class: BTreeSet<usize> = left.color_classes()[i].iter().copied().collect();
            assert_eq!(centers, class);
        }

        // brute-force partition count, reported against the claimed 6|V|=48
        let count = count_three_path_partitions(&g, &left).unwrap();
        println!("3-path partitions of the cube: {} (claimed elsewhere: 48)", count);
        assert_eq!(count, 6);
    });
}

#[test]
fn criterion_09_pentad_census() {
    criterion(9, || {
        let c = generators::pet2_figure_tc();
        let (g, structure) = generators::pet_k(2);
        assert!(verify_tc(&g, &c).verdict());
        assert!(!verify_etc(&g, &c).verdict());
        let census = pentad::census_pet2(&c).unwrap();
        assert_eq!(census.total, 54);
        assert_eq!(census.by_type, Some([4, 10, 20, 20]));
        assert_eq!(census.classes.unwrap().fully_bijective, 14);
        // per-edge incidence by kind; the hamilton value 6 is forced by the
        // handshake 5*54 = 8*10 + 7*10 + 6*20, against a claimed 5
        use girthtc_core::generators::EdgeKind;
        for (&(u, v), &count) in &census.per_edge {
            let want = match structure.edge_kind(u, v).unwrap() {
                EdgeKind::Pentagon => 8,
                EdgeKind::Pentagram => 7,
                EdgeKind::Hamilton => 6,
            };
            assert_eq!(count, want, "edge ({}, {})", u, v);
        }
        println!("pentad per-edge incidences: pentagon 8, pentagram 7, hamilton 6 (claimed elsewhere: 5)");
    });
}

#[test]
fn criterion_10_double_cover_census() {
    criterion(10, || {
        let (dod, _, _) = generators::dod_k(2).unwrap();
        assert_eq!(dod.n, 40);
        assert_eq!(dod.girth(), Some(5));
        let lift = pentad::census_lift(2).unwrap();
        assert_eq!(lift.base_total, 54);
        assert_eq!(lift.doubled, 32);
        assert_eq!(lift.ten_cycles, 22);
        assert_eq!(lift.lifted_total, 64);
        assert_eq!(lift.classes.fully_bijective, 24);
        // all four pentagon x pentagram copy lifts are dodecahedra
        let dodeca = canonical_form(&pentad::dodecahedron());
        for i in 0..2 {
            for j in 0..2 {
                let copy = pentad::pet_copy_lift(i, j).unwrap();
                assert_eq!(canonical_form(&copy), dodeca, "copy ({}, {})", i, j);
            }
        }
    });
}

#[test]
fn criterion_11_robertson() {
    criterion(11, || {
        let g = generators::robertson();
        assert_eq!(g.n, 19);
        assert_eq!(g.edge_count(), 38);
        assert_eq!(g.girth(), Some(5));
        let feas = etc_feasibility(&g, None).unwrap();
        assert!(!feas.verdict());
        assert!(feas.rules_hit().contains(&"FEAS-DIV"));
        let opts = SearchOptions { limit: Some(1), dedup_colors: true };
        let (tcs, _) = exhaustive_tc_search(&g, 5, Predicate::AnyTc, opts);
        assert_eq!(tcs.len(), 1);
        assert!(verify_tc(&g, &tcs[0]).verdict());
        let census = pentad::census_robertson(None);
        println!("robertson 5-cycles: {} (claimed elsewhere: 44)", census.total);
        assert_eq!(census.total, 54);
    });
}

#[test]
fn criterion_12_pentad_total_colorings() {
    criterion(12, || {
        for k in [2usize, 3, 4, 6] {
            let (g, _) = generators::pet_k(k);
            let tc = generators::pet_k_tc(k, None).unwrap();
            assert!(verify_tc(&g, &tc.coloring).verdict(), "k = {}", k);
            assert!(!verify_etc(&g, &tc.coloring).verdict(), "k = {}", k);
            assert!(tc.repaired, "the documented template needs repair");
        }
        assert!(generators::pet_k_tc(5, None).is_err());
        assert!(generators::pet_k_tc(10, None).is_err());
        for k in [3usize, 4] {
            let tc = generators::pet_k_tc(k, None).unwrap();
            let report = pentad::pet_k_unique_5cycles(k, Some(&tc.coloring));
            assert!(report.verdict(), "k = {}: {:?}", k, report.violations);
        }
    });
}

#[test]
fn criterion_13_conjecture_audit() {
    criterion(13, || {
        let closure = operation_closure(16);
        let q3 = generators::q3();
        let prism8 = generators::prism_graph(8);
        let prism12 = generators::prism_graph(12);
        let gamma = fixtures::gamma11_cutout().realize().unwrap().graph;
        for (name, g) in [("cube", &q3), ("8-prism", &prism8), ("12-prism", &prism12), ("toroidal-16", &gamma)] {
            assert!(closure.contains(g), "{} in closure", name);
        }

        // every member drawn with only belts of length 0 mod 4 admits an
        // ETGC re-derived from a single belt seed of one of its drawings
        // (individual drawings of the same graph may put the coloring on
        // non-periodic belts; the member passes through a periodic one)
        let mut members_checked = 0;
        for member in &closure.members {
            let mut eligible = 0;
            let mut seeded = 0;
            for cut in &member.cutouts {
                let r = match cut.realize() {
                    Ok(r) => r,
                    Err(_) => continue,
                };
                if !r.belts.iter().all(|b| b.len() % 4 == 0) {
                    continue;
                }
                let Some(full) = r.coloring(4) else { continue };
                eligible += 1;
                let belt = r.belts.iter().min_by_key(|b| b.len()).unwrap();
                let seed = seed_from_belt(&full, belt, r.graph.n);
                if let Ok(got) = solve_from_seed(&r.graph, &r.belts, &seed) {
                    assert!(verify_etgc(&r.graph, &got).verdict());
                    seeded += 1;
                }
            }
            if eligible > 0 {
                assert!(seeded > 0, "member on {} vertices never seeds", member.graph.n);
                members_checked += 1;
            }
        }
        assert!(members_checked >= 4, "seeded {} members", members_checked);

        // the audit report is byte-stable across runs
        let corpus = [q3, prism8, prism12, gamma];
        let csv1 = audit_csv(&corpus, &conjecture_audit(&corpus, 16));
        let csv2 = audit_csv(&corpus, &conjecture_audit(&corpus, 16));
        assert_eq!(csv1, csv2);
        let mut lines = csv1.lines();
        assert_eq!(lines.next(), Some("graph,n,belts_ok,etc_exists,in_closure"));
        assert_eq!(csv1.lines().count(), 5);
        for line in lines {
            // graphs above the audit bound keep a row with empty flags;
            // the 24-vertex prism's membership is asserted above instead
            assert!(
                line.ends_with(",true") || line.ends_with(",24,,,"),
                "closure membership recorded: {}",
                line
            );
        }
    });
}

/// The deduped cube search used by criterion 2 also freezes the solution
/// count the other criteria lean on, so pin it here once.
#[test]
fn cube_solution_count_is_stable() {
    let g = generators::q3();
    let (sols, _) = exhaustive_tc_search(&g, 4, Predicate::AnyTc, SearchOptions::default());
    let canon: BTreeSet<(Vec<usize>, BTreeMap<(usize, usize), usize>)> =
        sols.iter().map(|c| (c.vertex.clone(), c.edge.clone())).collect();
    assert_eq!(canon.len(), sols.len(), "search never repeats a solution");
}
