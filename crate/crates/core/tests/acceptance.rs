//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints a PASS/FAIL line even when an earlier one fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::*;
use subcomp::bounds::{edge_bound_system, vertex_cover_number};
use subcomp::forbidden::{catalog_c2_le2, classify_c2_le2, find_minimal_forbidden, Invariant};
use subcomp::forest::{forest_system, path_cover_number};
use subcomp::graph::{augment_classes, canonical_form, emit_graph6, isomorphic, parse_graph6};
use subcomp::subcomp::{
    all_minimum_systems, appearance_parity, brute_force_c2, c2_value, verify_system,
};
use subcomp::tricliques::{brute_force_t2, build_triclique_system, verify_triclique_system};
use subcomp::{c2, components, min_rank_f2, t2, ComplementationSystem, Graph, MinRankSolver};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap()
}

fn c2_matches_brute_force() -> Outcome {
    let graphs = all_graphs(1, 5);
    ensure(graphs.len() == 52, || format!("expected 52 classes, got {}", graphs.len()))?;
    for g in &graphs {
        let r = c2(g).map_err(|e| e.to_string())?;
        let (k, _) = brute_force_c2(g, g.order()).ok_or("brute force found nothing")?;
        ensure(r.c2 == k, || format!("{}: c2 {} vs brute force {}", g6(g), r.c2, k))?;
        ensure(verify_system(g, &r.system).unwrap().valid, || format!("{}: system fails", g6(g)))?;
    }
    Ok(format!("{} classes", graphs.len()))
}

fn mr_matches_enumeration() -> Outcome {
    let graphs = all_graphs(1, 7);
    ensure(graphs.len() == 1252, || format!("expected 1252 classes, got {}", graphs.len()))?;
    graphs.par_iter().try_for_each(|g| {
        let r = min_rank_f2(g).map_err(|e| e.to_string())?;
        let (mr, zero, nonzero, _) = minrank_oracle(g);
        ensure((r.mr, r.rank_adjacency, r.best_nonzero_diag_rank) == (mr, zero, nonzero), || {
            format!("{}: solver {:?} vs oracle {:?}", g6(g), (r.mr, r.rank_adjacency, r.best_nonzero_diag_rank), (mr, zero, nonzero))
        })?;
        let witness_rank = rank_bytes(r.witness.fitting_matrix(g).to_rows());
        ensure(witness_rank == mr, || format!("{}: witness has rank {witness_rank}", g6(g)))
    })?;
    Ok(format!("{} classes", graphs.len()))
}

fn paper_values() -> Outcome {
    let mut checks = 0;
    let mut check = |name: &str, got: usize, want: usize| -> Result<(), String> {
        checks += 1;
        ensure(got == want, || format!("{name}: got {got}, want {want}"))
    };
    for n in 3..=12 {
        check(&format!("c2(P{n})"), c2_value(&Graph::path(n)).unwrap(), n - 1)?;
        check(&format!("c2(C{n})"), c2_value(&Graph::cycle(n)).unwrap(), n - 2)?;
    }
    let k33 = Graph::complete_bipartite(3, 3);
    check("mr(K33)", min_rank_f2(&k33).unwrap().mr, 2)?;
    check("c2(K33)", c2_value(&k33).unwrap(), 3)?;
    let w5 = Graph::wheel(5);
    check("mr(W5)", min_rank_f2(&w5).unwrap().mr, 2)?;
    check("c2(W5)", c2_value(&w5).unwrap(), 3)?;
    check("t2(W5)", t2(&w5), 1)?;
    check("c2(W5+K2)", c2_value(&w5.disjoint_union(&Graph::complete(2))).unwrap(), 3)?;
    let full_house = &catalog_c2_le2()[3];
    assert_eq!(full_house.name, "full house");
    check("mr(full house)", min_rank_f2(&full_house.graph).unwrap().mr, 3)?;
    let fig = ComplementationSystem::from_vertex_lists(5, &[vec![1, 2, 3, 4], vec![0, 1, 3], vec![0, 2, 4]]).unwrap();
    ensure(verify_system(&w5, &fig).unwrap().valid, || "W5 figure system does not verify".into())?;
    ensure(appearance_parity(&fig).iter().all(|&odd| !odd), || "W5 figure system has an odd vertex".into())?;
    Ok(format!("{} values, W5 figure system", checks))
}

fn structural_properties() -> Outcome {
    let graphs = all_graphs(1, 7);
    let stats = graphs
        .par_iter()
        .map(|g| -> Result<(usize, usize), String> {
            let name = g6(g);
            let (n, m) = (g.order(), g.size());
            let mr = min_rank_f2(g).map_err(|e| e.to_string())?.mr;
            let r = c2(g).map_err(|e| e.to_string())?;
            let c = r.c2;
            ensure(mr <= c && c <= mr + 1, || format!("{name}: mr {mr}, c2 {c}"))?;
            ensure(c == mr || mr % 2 == 0, || format!("{name}: c2 = mr + 1 with odd mr"))?;
            ensure(mr % 2 == 0 || c == mr, || format!("{name}: odd mr but c2 != mr"))?;
            ensure(mr == c.min(2 * t2(g)), || format!("{name}: mr != min(c2, 2 t2)"))?;
            ensure(c <= 2 * vertex_cover_number(g).unwrap(), || format!("{name}: c2 > 2 tau"))?;
            ensure(c <= edge_bound_system(g).system.len(), || format!("{name}: c2 above edge construction"))?;
            ensure(c <= m && ((c == m) == g.is_linear_forest()), || format!("{name}: c2 {c} vs m {m}"))?;
            if n >= 3 {
                ensure(c < n, || format!("{name}: c2 >= n"))?;
                ensure((c == n - 1) == is_path(g), || format!("{name}: c2 = n-1 iff path fails"))?;
            }
            if m == 0 {
                return Ok((0, 0));
            }
            // Exceptionality: c2 != mr, c2 = mr + 1, unique zero-diagonal minimiser.
            let (omr, zero, _, count) = minrank_oracle(g);
            let unique_zero = count == 1 && zero == omr;
            ensure((c != mr) == (c == mr + 1) && (c != mr) == unique_zero, || format!("{name}: exceptionality views disagree"))?;
            ensure(r.exceptional == unique_zero, || format!("{name}: exceptional flag"))?;
            // All-even minimum systems, exhaustively.
            if n <= 5 {
                let (_, systems) = all_minimum_systems(g, c).ok_or("no minimum system")?;
                let even = systems.iter().any(|s| appearance_parity(s).iter().all(|&odd| !odd));
                ensure(even == (c != mr), || format!("{name}: all-even system exists = {even}"))?;
            }
            // Component law over the components that carry edges.
            let nonempty: Vec<Graph> = components(g).into_iter().map(|(_, h)| h).filter(|h| h.has_edges()).collect();
            let all_exceptional = nonempty.iter().all(|h| c2_value(h).unwrap() != min_rank_f2(h).unwrap().mr);
            ensure(all_exceptional == (c != mr), || format!("{name}: component law"))?;
            let literal = components(g).iter().all(|(_, h)| c2_value(h).unwrap() == min_rank_f2(h).unwrap().mr + 1);
            Ok((usize::from(c != mr), usize::from(literal != (c != mr))))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let exceptional: usize = stats.iter().map(|s| s.0).sum();
    let isolated_caveat: usize = stats.iter().map(|s| s.1).sum();
    Ok(format!(
        "{} classes, {exceptional} exceptional; {isolated_caveat} graphs where an isolated vertex breaks the all-components reading",
        graphs.len()
    ))
}

fn forests() -> Outcome {
    let mut all = Vec::new();
    for n in 1..=9 {
        all.extend(trees(n));
    }
    let small = all.len();
    ensure(small == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47, || format!("tree count {small}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ee5);
    for i in 0..200 {
        all.push(random_tree(&mut rng, 2 + i % 13));
    }
    all.par_iter().try_for_each(|t| {
        let name = g6(t);
        let sys = forest_system(t).map_err(|e| e.to_string())?;
        let p = path_cover_number(t).unwrap();
        ensure(verify_system(t, &sys).unwrap().valid, || format!("{name}: system fails"))?;
        ensure(sys.len() == t.order() - p, || format!("{name}: size {} vs n - p = {}", sys.len(), t.order() - p))?;
        ensure(c2_value(t).unwrap() == sys.len(), || format!("{name}: exact c2 differs"))?;
        let mr = min_rank_f2(t).unwrap().mr;
        ensure((mr + 1 == t.order()) == is_path(t), || format!("{name}: mr = n-1 iff path fails"))
    })?;
    Ok(format!("{small} trees on <= 9 vertices, 200 random trees on <= 14"))
}

fn forbidden_sets() -> Outcome {
    let solver = MinRankSolver::default();
    let k1 = find_minimal_forbidden(all_graphs(1, 5), Invariant::C2, 1, &solver);
    let p3 = Graph::path(3);
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    ensure(k1.graphs.len() == 2, || format!("k=1: {} graphs", k1.graphs.len()))?;
    ensure(isomorphic(&k1.graphs[0].1, &p3) && isomorphic(&k1.graphs[1].1, &two_k2), || "k=1: wrong graphs".into())?;

    let graphs = all_graphs(1, 7);
    let k2 = find_minimal_forbidden(graphs.clone(), Invariant::C2, 2, &solver);
    let mut want: Vec<_> = catalog_c2_le2().iter().map(|e| canonical_form(&e.graph)).collect();
    want.sort();
    let mut got: Vec<_> = k2.graphs.iter().map(|(c, _)| c.clone()).collect();
    got.sort();
    ensure(got == want, || format!("k=2: got {:?}", got.iter().map(|c| c.as_graph6().to_string()).collect::<Vec<_>>()))?;

    graphs.par_iter().try_for_each(|g| {
        let exact = c2_value(g).unwrap() <= 2;
        ensure(classify_c2_le2(g).is_ok() == exact, || format!("{}: classifier disagrees", g6(g)))
    })?;
    Ok("{P3, 2K2} for k=1, 8 catalog graphs for k=2, classifier agrees on n <= 7".into())
}

/// All graphs on at most 8 vertices, from `SUBCOMP_G6_CORPUS` if set,
/// otherwise generated here and round-tripped through graph6.
fn corpus_up_to_8() -> Result<(Vec<Graph>, &'static str), String> {
    if let Ok(path) = std::env::var("SUBCOMP_G6_CORPUS") {
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
        let graphs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| parse_graph6(l.as_bytes()).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok((graphs, "external corpus"));
    }
    let mut level = all_graphs(7, 7);
    let mut all = all_graphs(1, 7);
    level = augment_classes(&level);
    ensure(level.len() == 12346, || format!("expected 12346 classes on 8 vertices, got {}", level.len()))?;
    all.extend(level);
    let text: String = all.iter().map(|g| g6(g) + "\n").collect();
    let parsed = text.lines().map(|l| parse_graph6(l.as_bytes()).unwrap()).collect();
    Ok((parsed, "generated corpus"))
}

fn minrank_three_forbidden() -> Outcome {
    let solver = MinRankSolver::default();
    let (corpus, source) = corpus_up_to_8()?;
    let full = find_minimal_forbidden(corpus, Invariant::Mr, 3, &solver);
    ensure(full.skipped.is_empty(), || "ceiling breaches in corpus".into())?;
    ensure(full.graphs.len() == 62, || format!("expected 62, found {}", full.graphs.len()))?;
    ensure(full.graphs.iter().all(|(_, g)| g.order() <= 8), || "graph above 8 vertices".into())?;
    let small = find_minimal_forbidden(all_graphs(1, 7), Invariant::Mr, 3, &solver);
    let expected_small: Vec<_> = full.graphs.iter().filter(|(_, g)| g.order() <= 7).map(|(c, _)| c.clone()).collect();
    let got_small: Vec<_> = small.graphs.iter().map(|(c, _)| c.clone()).collect();
    ensure(got_small == expected_small, || "n <= 7 run disagrees with the n <= 8 run".into())?;
    let by_order: Vec<usize> = (4..=8).map(|n| full.graphs.iter().filter(|(_, g)| g.order() == n).count()).collect();
    Ok(format!("62 graphs ({source}); by order 4..8: {by_order:?}"))
}

fn tricliques() -> Outcome {
    let mut graphs = Vec::new();
    for n in 0..=4usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u32..1 << pairs {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            graphs.push(g);
        }
    }
    let labelled = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7c1);
    graphs.extend((0..100).map(|_| random_graph(&mut rng, 5, 0.5)));
    graphs.par_iter().try_for_each(|g| {
        let name = g6(g);
        ensure(brute_force_t2(g) == t2(g), || format!("{name}: brute force t2 differs"))?;
        let sys = build_triclique_system(g);
        ensure(sys.len() == t2(g) && verify_triclique_system(g, &sys).unwrap(), || format!("{name}: system"))
    })?;
    Ok(format!("{labelled} labelled graphs on <= 4 vertices, 100 random on 5"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("c2 equals brute force on all classes n <= 5", Duration::from_secs(10), c2_matches_brute_force),
        ("minimum rank equals full diagonal enumeration, n <= 7", Duration::from_secs(120), mr_matches_enumeration),
        ("published values", Duration::from_secs(60), paper_values),
        ("structural properties on all classes n <= 7", Duration::from_secs(300), structural_properties),
        ("forest construction", Duration::from_secs(120), forests),
        ("minimal forbidden subgraphs for c2 <= 1 and c2 <= 2", Duration::from_secs(300), forbidden_sets),
        ("62 minimal forbidden subgraphs for mr <= 3", Duration::from_secs(600), minrank_three_forbidden),
        ("triclique number equals rank / 2", Duration::from_secs(120), tricliques),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *budget => Err(format!("took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{detail}] ({elapsed:.1?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({elapsed:.1?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
