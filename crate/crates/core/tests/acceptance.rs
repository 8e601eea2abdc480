//! Acceptance criteria, one test each. Run with `--nocapture` to see the
//! PASS/FAIL line every criterion prints.

mod common;

use std::time::{Duration, Instant};

use common::*;
use eqtree::batch;
use eqtree::coloring::exact_solve;
use eqtree::gadgets::{
    build_interval_gadget, build_split_gadget, coloring_from_packing, gen_random_interval, packing_from_coloring,
    solve_bin_packing, verify_maximal_clique_order, BinPackingInstance, GadgetLayout, GadgetParts, Packing,
};
use eqtree::graph::{derive_graph, interval_order, is_star_free, max_clique_sweep, verify_order};
use eqtree::{cli, io, verify_equitable_tree_coloring, IntervalRep};

/// Largest interval gadget handed to the exhaustive solver.
const INTERVAL_BRUTE_FORCE_MAX_VERTICES: usize = 21;

fn report(id: u32, name: &str, failures: &[String], detail: String) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] AC{id} {name}: {detail}");
    for f in failures.iter().take(10) {
        println!("        {f}");
    }
    assert!(failures.is_empty(), "AC{id} failed: {} problems, first: {}", failures.len(), failures[0]);
}

#[test]
fn ac1_round_robin_at_guaranteed_threshold() {
    let reps: Vec<IntervalRep> = (0..1000u64)
        .map(|seed| {
            let n = 1 + (seed % 60) as usize;
            let max_coord = [20, 60, 150][(seed % 3) as usize];
            gen_random_interval(n, max_coord, seed, false).unwrap()
        })
        .collect();
    let start = Instant::now();
    let checks = batch::check_guaranteed_threshold(&reps).unwrap();
    let elapsed = start.elapsed();
    let mut failures: Vec<String> = checks
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.verified)
        .map(|(seed, c)| format!("seed {seed}: n={} Δ={} k={} not verified", c.vertices, c.max_degree, c.k))
        .collect();
    if elapsed >= Duration::from_secs(10) {
        failures.push(format!("took {elapsed:?}, limit 10s"));
    }
    let max_delta = checks.iter().map(|c| c.max_degree).max().unwrap();
    report(
        1,
        "round-robin passes verifier at k = ceil((Δ+1)/2)",
        &failures,
        format!("{} / 1000 verified, max Δ {max_delta}, {elapsed:?}", checks.iter().filter(|c| c.verified).count()),
    );
}

#[test]
fn ac2_complete_graph_sharpness() {
    let mut failures = Vec::new();
    for s in 2..=4usize {
        let rep = equal_intervals(2 * s);
        let g = derive_graph(&rep);
        for k in 1..s {
            if exact_solve(&g, k).unwrap().is_some() {
                failures.push(format!("K_{} colored with k = {k}", 2 * s));
            }
        }
        match exact_solve(&g, s).unwrap() {
            Some(c) if verify_equitable_tree_coloring(&g, &c).unwrap().is_ok() => {}
            _ => failures.push(format!("K_{} has no coloring at k = {s}", 2 * s)),
        }
    }
    report(2, "K_2s: NO for k <= s-1, YES at k = s (s = 2,3,4)", &failures, "9 solver runs".into());
}

#[test]
fn ac3_proper_decision_matches_exact_search() {
    let reps: Vec<IntervalRep> = (0..360u64)
        .map(|seed| {
            let n = 1 + (seed % 12) as usize;
            gen_random_interval(n, (2 * n + n / 2 + 1) as i64, seed, true).unwrap()
        })
        .collect();
    let ks: Vec<usize> = (1..=6).collect();
    let rows = batch::cross_check_proper(&reps, &ks).unwrap();
    let mut failures = Vec::new();
    let (mut yes, mut no) = (0, 0);
    for (seed, row) in rows.iter().enumerate() {
        for check in row {
            if check.decided {
                yes += 1;
            } else {
                no += 1;
            }
            if !check.consistent() {
                failures.push(format!("seed {seed}: {check:?}"));
            }
        }
    }
    if yes == 0 || no == 0 {
        failures.push(format!("degenerate sample: {yes} YES / {no} NO"));
    }
    report(
        3,
        "proper-interval decision == exact search, (ω <= 2k) <=> acyclic round-robin",
        &failures,
        format!("{} instances x 6 values of k, {yes} YES / {no} NO", reps.len()),
    );
}

/// Every instance with 1..=4 items of size 1..=4 (as multisets) and
/// 1..=3 bins whose total divides evenly.
fn instance_grid() -> Vec<BinPackingInstance> {
    fn multisets(len: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for a in 1..=max {
            prefix.push(a);
            multisets(len, a, prefix, out);
            prefix.pop();
        }
    }
    let mut item_lists = Vec::new();
    for len in 1..=4 {
        multisets(len, 4, &mut Vec::new(), &mut item_lists);
    }
    let mut grid = Vec::new();
    for items in &item_lists {
        let total: usize = items.iter().sum();
        for k in 1..=3 {
            if total.is_multiple_of(k) {
                grid.push(BinPackingInstance::new(items.clone(), k, total / k).unwrap());
            }
        }
    }
    grid
}

/// Both witness maps, starting from a packing. Returns problems found.
fn check_packing_round_trip(layout: &GadgetLayout, packing: &Packing, class_size: usize) -> Vec<String> {
    let inst = layout.instance();
    let mut problems = Vec::new();
    let c = coloring_from_packing(layout, packing).unwrap();
    if !verify_equitable_tree_coloring(layout.graph(), &c).unwrap().is_ok() {
        problems.push(format!("{inst:?}: mapped coloring fails verification"));
    }
    if c.class_sizes().iter().any(|&s| s != class_size) {
        problems.push(format!("{inst:?}: class sizes {:?}, expected {class_size}", c.class_sizes()));
    }
    match packing_from_coloring(layout, &c) {
        Ok(back) => {
            if back.loads(inst).iter().any(|&l| l != inst.capacity()) || !back.same_bins_as(packing) {
                problems.push(format!("{inst:?}: round trip changed the packing"));
            }
        }
        Err(e) => problems.push(format!("{inst:?}: reverse map failed: {e}")),
    }
    problems
}

fn check_reverse_map(layout: &GadgetLayout, coloring: &eqtree::Coloring) -> Vec<String> {
    let inst = layout.instance();
    match packing_from_coloring(layout, coloring) {
        Ok(p) if p.loads(inst).iter().all(|&l| l == inst.capacity()) => Vec::new(),
        Ok(p) => vec![format!("{inst:?}: recovered loads {:?}", p.loads(inst))],
        Err(e) => vec![format!("{inst:?}: solver coloring does not map back: {e}")],
    }
}

#[test]
fn ac4_split_gadget_reduction() {
    let grid = instance_grid();
    let start = Instant::now();
    let results = batch::map(&grid, |inst| {
        let (n, k, b) = (inst.items().len(), inst.bins(), inst.capacity());
        let layout = build_split_gadget(inst).unwrap();
        let mut problems = Vec::new();
        if layout.graph().vertex_count() != k * (2 * n + b) {
            problems.push(format!("{inst:?}: |V| = {}", layout.graph().vertex_count()));
        }
        let packing = solve_bin_packing(inst);
        let coloring = exact_solve(layout.graph(), k).unwrap();
        if packing.is_some() != coloring.is_some() {
            problems.push(format!(
                "{inst:?}: packing {} but gadget coloring {}",
                packing.is_some(),
                coloring.is_some()
            ));
        }
        if let Some(p) = &packing {
            problems.extend(check_packing_round_trip(&layout, p, b + 2 * n));
        }
        if let Some(c) = &coloring {
            problems.extend(check_reverse_map(&layout, c));
        }
        (packing.is_some(), problems)
    });
    let yes = results.iter().filter(|r| r.0).count();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    report(
        4,
        "split gadget: packing feasible <=> gadget colorable, |V| = k(2n+B), sizes B+2n",
        &failures,
        format!("{} instances ({yes} YES), {:?}", grid.len(), start.elapsed()),
    );
}

#[test]
fn ac5_interval_gadget_reduction() {
    let grid = instance_grid();
    let start = Instant::now();
    let results = batch::map(&grid, |inst| {
        let (k, b) = (inst.bins(), inst.capacity());
        let layout = build_interval_gadget(inst).unwrap();
        let g = layout.graph();
        let rep = layout.rep().unwrap();
        let mut problems = Vec::new();
        if g.vertex_count() != k * (4 * k - 1) * b {
            problems.push(format!("{inst:?}: |V| = {}", g.vertex_count()));
        }
        if derive_graph(rep) != *g {
            problems.push(format!("{inst:?}: interval model disagrees with labels"));
        }
        if !verify_maximal_clique_order(&layout).unwrap() {
            problems.push(format!("{inst:?}: maximal clique order fails"));
        }
        let GadgetParts::Interval(parts) = layout.parts() else { unreachable!() };
        let adj = graph_matrix(g);
        for p in parts {
            let a = p.y.len();
            let members: Vec<usize> = p.q.iter().chain(&p.q_prime).flatten().copied().chain(p.y.iter().copied()).collect();
            let listed = {
                let mut m = p.maximal_cliques();
                m.sort();
                m
            };
            if listed.len() != 3 * a - 1 || maximal_cliques(&adj, &members) != listed {
                problems.push(format!("{inst:?}: component with a = {a} has wrong maximal cliques"));
            }
            for &y in &p.y[..a - 1] {
                if g.degree(y) != 3 * (2 * k - 1) {
                    problems.push(format!("{inst:?}: deg(y) = {}", g.degree(y)));
                }
            }
        }
        if !is_star_free(g, 4).unwrap() {
            problems.push(format!("{inst:?}: induced K_1,4"));
        }
        let omega = max_clique_sweep(rep);
        if omega - 1 != 2 * k - 1 {
            problems.push(format!("{inst:?}: ω - 1 = {}", omega - 1));
        }

        let packing = solve_bin_packing(inst);
        let mut brute = false;
        if g.vertex_count() <= INTERVAL_BRUTE_FORCE_MAX_VERTICES {
            brute = true;
            let coloring = exact_solve(g, k).unwrap();
            if packing.is_some() != coloring.is_some() {
                problems.push(format!(
                    "{inst:?}: packing {} but gadget coloring {}",
                    packing.is_some(),
                    coloring.is_some()
                ));
            }
            if let Some(c) = &coloring {
                problems.extend(check_reverse_map(&layout, c));
            }
        }
        if let Some(p) = &packing {
            problems.extend(check_packing_round_trip(&layout, p, (4 * k - 1) * b));
        }
        (brute, problems)
    });
    let brute = results.iter().filter(|r| r.0).count();
    let failures: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    report(
        5,
        "interval gadget: reduction, |V| = k(4k-1)B, 3a-1 ordered maximal cliques, deg(y) = 3(2k-1), K_1,4-free, ω-1 = 2k-1",
        &failures,
        format!(
            "{} instances, {brute} with exhaustive check (<= {INTERVAL_BRUTE_FORCE_MAX_VERTICES} vertices), {:?}",
            grid.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn ac6_oracle_cross_validation() {
    let mut failures = Vec::new();
    let mut seeds = 0;
    for seed in 0..250u64 {
        let n = (seed % 11) as usize;
        let max_coord = [8, 20, 40][(seed % 3) as usize].max(3 * n as i64);
        let rep = gen_random_interval(n, max_coord, seed, seed % 4 == 0).unwrap();
        let adj = adjacency_matrix(&rep);
        let sweep = max_clique_sweep(&rep);
        let brute = brute_force_clique_number(&adj);
        if sweep != brute {
            failures.push(format!("seed {seed}: sweep {sweep}, brute force {brute}"));
        }
        let g = derive_graph(&rep);
        let order = interval_order(&rep);
        if !verify_order(&g, &order).unwrap() || !order_is_umbrella(&adj, order.as_slice()) {
            failures.push(format!("seed {seed}: interval order rejected"));
        }
        seeds += 1;
    }
    for seed in 0..200u64 {
        let rep = gen_random_interval(60, 200, seed, seed % 2 == 0).unwrap();
        if !verify_order(&derive_graph(&rep), &interval_order(&rep)).unwrap() {
            failures.push(format!("seed {seed}: n=60 interval order rejected"));
        }
    }
    report(
        6,
        "clique sweep == 2^n brute force (n <= 10), interval order passes umbrella check",
        &failures,
        format!("{seeds} small seeds + 200 orders at n = 60"),
    );
}

struct Scenario {
    name: &'static str,
    args: Vec<String>,
    expect: i32,
}

#[test]
fn ac7_cli_contract() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).display().to_string();
    let put = |name: &str, text: &str| std::fs::write(dir.path().join(name), text).unwrap();

    let mut failures = Vec::new();

    // format round trips
    let mut round_trips = 0;
    for seed in 0..50u64 {
        let rep = gen_random_interval(1 + (seed % 30) as usize, 90, seed, seed % 2 == 0).unwrap();
        let text = io::write_intervals(&rep);
        let g = derive_graph(&rep);
        let c = eqtree::round_robin_color(&rep, 1 + (seed % 4) as usize).unwrap();
        let ok = io::parse_intervals(&text).unwrap() == rep
            && io::write_intervals(&io::parse_intervals(&text).unwrap()) == text
            && io::parse_graph(&io::write_graph(&g)).unwrap() == g
            && io::parse_coloring(&io::write_coloring(&c)).unwrap() == c;
        if !ok {
            failures.push(format!("seed {seed}: format round trip differs"));
        }
        round_trips += 1;
    }
    for inst in instance_grid().iter().take(40) {
        if io::parse_binpacking(&io::write_binpacking(inst)).unwrap() != *inst {
            failures.push(format!("{inst:?}: binpacking round trip differs"));
        }
        let layout = build_interval_gadget(inst).unwrap();
        let labels = io::Labels {
            kind: "interval".into(),
            parts: layout.labels(),
        };
        if io::parse_labels(&io::write_labels(&labels)).unwrap() != labels {
            failures.push(format!("{inst:?}: labels round trip differs"));
        }
        round_trips += 1;
    }

    put("k4.intervals", "intervals 4\n0 0 1\n1 0 1\n2 0 1\n3 0 1\n");
    put("k6.intervals", "intervals 6\n0 0 1\n1 0 1\n2 0 1\n3 0 1\n4 0 1\n5 0 1\n");
    put("disjoint.intervals", "intervals 3\n0 0 1\n1 2 3\n2 4 5\n");
    put("nested.intervals", "intervals 2\n0 0 5\n1 1 2\n");
    put("bad.intervals", "intervals 2\n0 0 1\n1 3\n");
    put("tri.graph", "graph 3 3\n0 1\n0 2\n1 2\n");
    put("tri_mono.coloring", "coloring 3 1\n0 0\n1 0\n2 0\n");
    put("gap.coloring", "coloring 4 2\n0 0\n1 0\n2 0\n3 1\n");
    put("short.coloring", "coloring 2 2\n0 0\n1 1\n");
    put("items.binpacking", "binpacking 3 2 2\n2\n1\n1\n");
    put("unit.binpacking", "binpacking 2 2 1\n1\n1\n");
    put("uneven.binpacking", "binpacking 2 2 2\n2\n1\n");
    put("k12.intervals", &io::write_intervals(&equal_intervals(12)));

    let s = |name: &'static str, args: &[&str], expect: i32| Scenario {
        name,
        args: args.iter().map(|a| a.to_string()).collect(),
        expect,
    };
    let (k4, k6, disjoint, nested, bad) = (
        path("k4.intervals"),
        path("k6.intervals"),
        path("disjoint.intervals"),
        path("nested.intervals"),
        path("bad.intervals"),
    );
    let scenarios = vec![
        s("color K4 k=2", &["color", &k4, "--k", "2", "--out", &path("c1.coloring")], 0),
        s("color K4 k=1", &["color", &k4, "--k", "1", "--out", &path("never.coloring")], 2),
        s("color parse error", &["color", &bad, "--k", "2"], 1),
        s("color k=0", &["color", &k4, "--k", "0"], 1),
        s("color missing file", &["color", &path("nope.intervals"), "--k", "2"], 1),
        s("decide K4 k=1", &["decide", &k4, "--k", "1"], 2),
        s("decide K4 k=2", &["decide", &k4, "--k", "2", "--out", &path("c2.coloring")], 0),
        s("decide non-proper", &["decide", &nested, "--k", "1"], 1),
        s("decide disjoint k=1", &["decide", &disjoint, "--k", "1", "--out", &path("c3.coloring")], 0),
        s("verify valid", &["verify", &k4, &path("c1.coloring")], 0),
        s("verify triangle mono", &["verify", &path("tri.graph"), &path("tri_mono.coloring")], 2),
        s("verify size gap", &["verify", &k4, &path("gap.coloring")], 2),
        s("verify vertex mismatch", &["verify", &k4, &path("short.coloring")], 1),
        s("verify k mismatch", &["verify", &k4, &path("c1.coloring"), "--k", "3"], 1),
        s("solve K6 k=2", &["solve", &k6, "--k", "2"], 2),
        s("solve K6 k=3", &["solve", &k6, "--k", "3", "--out", &path("c4.coloring")], 0),
        s("solve graph file", &["solve", &path("tri.graph"), "--k", "2", "--out", &path("c5.coloring")], 0),
        s("solve timeout", &["solve", &path("k12.intervals"), "--k", "3", "--timeout", "0"], 3),
        s("solve parse error", &["solve", &bad, "--k", "2"], 1),
        s(
            "gen split gadget",
            &["gen", "split-gadget", &path("items.binpacking"), "--out", &path("split.graph"), "--labels-out", &path("split.labels")],
            0,
        ),
        s(
            "gen interval gadget",
            &[
                "gen",
                "interval-gadget",
                &path("unit.binpacking"),
                "--out",
                &path("ig.graph"),
                "--intervals-out",
                &path("ig.intervals"),
                "--labels-out",
                &path("ig.labels"),
            ],
            0,
        ),
        s("gen uneven instance", &["gen", "split-gadget", &path("uneven.binpacking"), "--out", &path("x.graph")], 1),
        s("gen random-proper a", &["gen", "random-proper", "--n", "20", "--seed", "7", "--intervals-out", &path("rp_a.intervals"), "--out", &path("rp_a.graph")], 0),
        s("gen random-proper b", &["gen", "random-proper", "--n", "20", "--seed", "7", "--intervals-out", &path("rp_b.intervals"), "--out", &path("rp_b.graph")], 0),
        s("gen random-proper too dense", &["gen", "random-proper", "--n", "80", "--max-coord", "100"], 1),
        s("analyze K4", &["analyze", &k4], 0),
        s("analyze parse error", &["analyze", &bad], 1),
        s("unknown subcommand", &["paint", &k4], 1),
        s("missing --k", &["color", &k4], 1),
        s("solve interval gadget", &["solve", &path("ig.intervals"), "--k", "2", "--out", &path("c6.coloring")], 0),
    ];

    let run = |args: &[String]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("eqtree".to_string()).chain(args.iter().cloned());
        let code = cli::run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    };
    let mut outputs = std::collections::HashMap::new();
    for sc in &scenarios {
        let (code, out, err) = run(&sc.args);
        if code != sc.expect {
            failures.push(format!("{}: exit {code}, expected {} (stderr: {})", sc.name, sc.expect, err.trim()));
        }
        outputs.insert(sc.name, (out, err));
    }

    let out_of = |name: &str| outputs[name].0.clone();
    let err_of = |name: &str| outputs[name].1.clone();
    let mut expect_text = |cond: bool, what: &str| {
        if !cond {
            failures.push(what.to_string());
        }
    };
    expect_text(out_of("color K4 k=2").contains("class_sizes=2,2"), "color K4 k=2 reports class sizes 2,2");
    expect_text(out_of("color K4 k=2").contains("threshold=2"), "color reports the threshold");
    expect_text(out_of("color K4 k=1").contains("failure=monochromatic_cycle"), "color K4 k=1 reports the cycle");
    expect_text(!dir.path().join("never.coloring").exists(), "failed coloring is not written");
    expect_text(err_of("color parse error").contains("line 3"), "parse error names the line");
    expect_text(out_of("decide K4 k=1").contains("result=NO"), "decide K4 k=1 prints NO");
    expect_text(out_of("decide K4 k=2").contains("result=YES"), "decide K4 k=2 prints YES");
    expect_text(
        err_of("decide non-proper").contains("vertex 0 [0, 5]") && err_of("decide non-proper").contains("vertex 1 [1, 2]"),
        "non-proper error names the containing pair",
    );
    expect_text(out_of("verify triangle mono").contains("witness=edge 1-2"), "cycle witness edge printed");
    expect_text(out_of("verify size gap").contains("witness=color classes 0 and 1"), "imbalance class pair printed");
    expect_text(out_of("solve K6 k=2").contains("result=NO"), "solve K6 k=2 is NO");
    expect_text(out_of("solve timeout").contains("result=TIMEOUT"), "timeout reported");
    expect_text(out_of("analyze K4").contains("omega=4") && out_of("analyze K4").contains("min_k=2"), "analyze K4");
    let read = |name: &str| std::fs::read(dir.path().join(name)).unwrap_or_default();
    expect_text(
        !read("rp_a.intervals").is_empty() && read("rp_a.intervals") == read("rp_b.intervals") && read("rp_a.graph") == read("rp_b.graph"),
        "random-proper output is byte-identical across runs",
    );
    let split = io::parse_graph(&String::from_utf8(read("split.graph")).unwrap()).map(|g| g.vertex_count());
    expect_text(split == Ok(16), "split gadget of {2,1,1}, k=2 has 16 vertices");
    let ig = io::parse_intervals(&String::from_utf8(read("ig.intervals")).unwrap()).map(|r| r.len());
    expect_text(ig == Ok(14), "interval gadget of {1,1}, k=2 has 14 vertices");

    // JSON output parses and carries the same answer
    let (code, json, _) = run(&["--format".into(), "json".into(), "decide".into(), k4.clone(), "--k".into(), "2".into()]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap_or_default();
    expect_text(code == 0 && parsed["answer"] == true && parsed["statistics"]["omega"] == 4, "json report");

    // every coloring the tool wrote re-verifies
    let mut emitted = 0;
    for (coloring, graph) in [
        ("c1.coloring", k4.clone()),
        ("c2.coloring", k4.clone()),
        ("c3.coloring", disjoint.clone()),
        ("c4.coloring", k6.clone()),
        ("c5.coloring", path("tri.graph")),
        ("c6.coloring", path("ig.intervals")),
    ] {
        emitted += 1;
        let (code, _, err) = run(&["verify".into(), graph, path(coloring)]);
        if code != 0 {
            failures.push(format!("{coloring} does not re-verify: exit {code} {err}"));
        }
    }

    report(
        7,
        "CLI: format round trips, exit-code table, emitted colorings re-verify",
        &failures,
        format!("{round_trips} round trips, {} exit-code scenarios, {emitted} emitted colorings", scenarios.len()),
    );
}
