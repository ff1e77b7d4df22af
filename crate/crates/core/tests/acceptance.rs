//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p eqdim --test acceptance`.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use eqdim::bounds::{degree_lower_bound, forced_matching_lb, greedy_ub};
use eqdim::constructions::{halved_partition_set, johnson3_set, verify_construction};
use eqdim::equalizer::is_distance_equalizer;
use eqdim::solver::{random_connected_graph, solve_bruteforce, BRUTEFORCE_BUDGET};
use eqdim::subsets::{
    complement_distance_check, johnson, johnson_distance, kneser, kneser2_distance, named_family,
    Family,
};
use eqdim::{
    solve_exact, EqualizerInstance, Graph, KSubset, SolveOptions, SolveStatus, SubsetIndex,
    VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn set_of(index: &SubsetIndex, members: &[&[usize]]) -> VertexSet {
    VertexSet::from_indices(
        index.len(),
        members
            .iter()
            .map(|m| index.rank(&KSubset::new(index.n(), m).unwrap()).unwrap()),
    )
}

fn solve(g: &Graph, symmetry: bool) -> eqdim::SolveReport {
    let opts = SolveOptions {
        symmetry,
        ..SolveOptions::default()
    };
    solve_exact(g, &opts)
}

fn table_values() -> Result<String, String> {
    let cases = [
        (7, 3, false, 5),
        (7, 3, true, 5),
        (8, 3, false, 8),
        (8, 3, true, 3),
        (8, 4, false, 7),
        (9, 3, false, 7),
        (9, 3, true, 3),
    ];
    let mut slowest = Duration::ZERO;
    for (n, k, is_kneser, want) in cases {
        let g = if is_kneser {
            kneser(n, k)
        } else {
            johnson(n, k)
        }
        .unwrap()
        .0;
        let name = format!("{}({n},{k})", if is_kneser { "K" } else { "J" });
        let r = solve(&g, true);
        ensure!(
            r.status == SolveStatus::Optimal,
            "{name}: status {}",
            r.status.as_str()
        );
        ensure!(r.value == want, "{name}: got {}, want {want}", r.value);
        slowest = slowest.max(r.elapsed);
        // the plain search must agree with the symmetry-reduced one
        let plain = solve(&g, false);
        ensure!(
            plain.status == SolveStatus::Optimal && plain.value == want,
            "{name}: plain search got {}",
            plain.value
        );
        ensure!(
            r.elapsed < Duration::from_secs(600),
            "{name}: {:?}",
            r.elapsed
        );
    }
    let k84 = kneser(8, 4).unwrap().0;
    ensure!(!k84.is_connected(), "K(8,4) reported connected");
    let r = solve(&k84, true);
    ensure!(
        r.status == SolveStatus::InfeasibleInput,
        "K(8,4): status {}",
        r.status.as_str()
    );
    Ok(format!(
        "7 values exact, K(8,4) disconnected, slowest {slowest:.2?}"
    ))
}

fn small_johnson() -> Result<String, String> {
    let start = Instant::now();
    for (n, want, witness) in [
        (4, 2, &[&[1, 2][..], &[3, 4]][..]),
        (5, 3, &[&[1, 2][..], &[1, 3], &[2, 3]][..]),
    ] {
        let (g, index) = johnson(n, 2).unwrap();
        let r = solve(&g, true);
        ensure!(
            r.status == SolveStatus::Optimal && r.value == want,
            "J({n},2): got {}",
            r.value
        );
        let cert = is_distance_equalizer(&g.all_pairs_distances(), &set_of(&index, witness));
        ensure!(
            cert.valid,
            "J({n},2): witness fails at {:?}",
            cert.violation
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "J(4,2)=2, J(5,2)=3, witnesses valid, {elapsed:.2?}"
    ))
}

fn triangle_on_pairs() -> Result<String, String> {
    let start = Instant::now();
    let tri: &[&[usize]] = &[&[1, 2], &[1, 3], &[2, 3]];
    for (lo, is_kneser) in [(6, false), (5, true)] {
        for n in lo..=40 {
            let (g, index) = if is_kneser {
                kneser(n, 2)
            } else {
                johnson(n, 2)
            }
            .unwrap();
            let cert = is_distance_equalizer(&g.all_pairs_distances(), &set_of(&index, tri));
            ensure!(
                cert.valid,
                "n={n} kneser={is_kneser}: fails at {:?}",
                cert.violation
            );
            let (lb, _) = degree_lower_bound(&g);
            ensure!(lb == 3, "n={n} kneser={is_kneser}: degree bound {lb}");
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!(
        "J(n,2) 6..=40 and K(n,2) 5..=40 certified at 3, {elapsed:.2?}"
    ))
}

fn triples_on_johnson3() -> Result<String, String> {
    for n in 9..=20 {
        let check = verify_construction(&johnson3_set(n).unwrap()).unwrap();
        ensure!(
            check.certificate.valid,
            "J({n},3): fails at {:?}",
            check.certificate.violation
        );
        ensure!(check.certificate.set.len() == n - 2, "J({n},3): size");
    }
    let check = verify_construction(&johnson3_set(8).unwrap()).unwrap();
    ensure!(
        !check.certificate.valid,
        "J(8,3): recipe unexpectedly verifies"
    );
    let r = solve(&johnson(9, 3).unwrap().0, true);
    ensure!(
        r.value == 7 && r.status == SolveStatus::Optimal,
        "J(9,3): got {}",
        r.value
    );
    Ok("n=9..=20 valid with n-2 sets, n=8 fails, J(9,3)=7".to_string())
}

fn halved_partition() -> Result<String, String> {
    let start = Instant::now();
    for (k, want) in [(3, 10), (5, 126)] {
        let c = halved_partition_set(k).unwrap();
        ensure!(c.set.len() == want, "k={k}: |P1| = {}", c.set.len());
        let check = verify_construction(&c).unwrap();
        ensure!(
            check.certificate.valid,
            "k={k}: fails at {:?}",
            check.certificate.violation
        );
        let inst = EqualizerInstance::build(&check.graph.all_pairs_distances()).unwrap();
        let lb = forced_matching_lb(&inst);
        ensure!(lb == want, "k={k}: matching bound {lb}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!(
        "J(6,3)=10 and J(10,5)=126 certified by matching, {elapsed:.2?}"
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trials = 1000;
    let mut histogram = [0usize; 11];
    for t in 0..trials {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.2..0.8);
        let seed: u64 = rng.gen();
        let g = random_connected_graph(n, p, seed).map_err(|e| e.to_string())?;
        let d = g.all_pairs_distances();
        let r = solve(&g, true);
        let brute = solve_bruteforce(&d, n, BRUTEFORCE_BUDGET).map_err(|e| e.to_string())?;
        ensure!(
            r.value == brute.value,
            "trial {t} (n={n}, seed {seed}): {} vs {}",
            r.value,
            brute.value
        );
        let w = r.witness.as_ref().ok_or(format!("trial {t}: no witness"))?;
        ensure!(
            w.len() == r.value && is_distance_equalizer(&d, w).valid,
            "trial {t}: bad witness"
        );
        let inst = EqualizerInstance::build(&d).unwrap();
        let (lb, ub) = (forced_matching_lb(&inst), greedy_ub(&inst).0);
        ensure!(
            lb <= r.value && r.value <= ub,
            "trial {t}: {lb} <= {} <= {ub} fails",
            r.value
        );
        histogram[r.value] += 1;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    let spread: Vec<String> = histogram
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(v, c)| format!("{v}:{c}"))
        .collect();
    Ok(format!(
        "{trials} graphs agree with brute force (value:count {}), {elapsed:.2?}",
        spread.join(" ")
    ))
}

/// A graph on `n` vertices whose maximum degree is exactly `target`.
fn with_max_degree(n: usize, target: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if u == 0 {
                    // vertex 0 misses exactly n - 1 - target vertices
                    if v > n - 1 - target {
                        edges.push((0, v));
                    }
                } else if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() && g.degree_stats().max_degree == target {
            return g;
        }
    }
}

fn brute_value(g: &Graph) -> Result<usize, String> {
    solve_bruteforce(&g.all_pairs_distances(), g.n(), BRUTEFORCE_BUDGET)
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

fn extremal() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for n in 3..=10 {
        for (gap, want) in [(1, 1), (2, 2)] {
            if gap == 2 && n < 4 {
                continue;
            }
            for _ in 0..5 {
                let g = with_max_degree(n, n - gap, &mut rng);
                let (v, b) = (solve(&g, true).value, brute_value(&g)?);
                ensure!(
                    v == want && b == want,
                    "n={n}, max degree {}: {v}/{b}",
                    n - gap
                );
                checked += 1;
            }
        }
    }
    let mut named = vec![(named_family(Family::Path(2)).unwrap(), 1)];
    for n in 3..=6 {
        named.push((named_family(Family::Path(n)).unwrap(), n - 2));
    }
    for n in 3..=5 {
        named.push((named_family(Family::Cycle(n)).unwrap(), n - 2));
    }
    for (g, want) in named {
        let (v, b) = (solve(&g, true).value, brute_value(&g)?);
        ensure!(
            v == want && b == want,
            "{:?}: {v}/{b}, want {want}",
            g.edges()
        );
    }
    for i in 0..50 {
        let n = rng.gen_range(7..=10);
        let g = random_connected_graph(n, rng.gen_range(0.2..0.7), rng.gen()).unwrap();
        let v = solve(&g, true).value;
        ensure!(v <= n - 3, "random graph {i} (n={n}): {v}");
    }
    Ok(format!(
        "{checked} degree samples, 8 paths/cycles, 50 graphs within n-3"
    ))
}

fn distance_formulas() -> Result<String, String> {
    let mut graphs = 0;
    for n in 2..=220 {
        for k in 1..n {
            if eqdim::subsets::binomial(n, k) > 220 {
                continue;
            }
            let (g, index) = johnson(n, k).unwrap();
            let d = g.all_pairs_distances();
            let s = index.subsets();
            for u in 0..s.len() {
                for v in 0..s.len() {
                    let f = johnson_distance(&s[u], &s[v]).unwrap();
                    ensure!(d.get(u, v) == Some(f), "J({n},{k}) {u},{v}");
                }
            }
            graphs += 1;
        }
    }
    for n in 5..=12 {
        let (g, index) = kneser(n, 2).unwrap();
        let d = g.all_pairs_distances();
        let s = index.subsets();
        for u in 0..s.len() {
            for v in 0..s.len() {
                let f = kneser2_distance(&s[u], &s[v]).unwrap();
                ensure!(d.get(u, v) == Some(f), "K({n},2) {u},{v}");
            }
        }
    }
    for (n, k) in [(6, 3), (8, 4)] {
        let index = SubsetIndex::new(n, k).unwrap();
        for a in index.subsets() {
            for b in index.subsets() {
                ensure!(
                    complement_distance_check(a, b).unwrap(),
                    "J({n},{k}) complement identity"
                );
            }
        }
    }
    Ok(format!(
        "{graphs} Johnson graphs, K(n,2) n=5..=12, complements of J(6,3) and J(8,4)"
    ))
}

fn main() {
    let criteria: [(&str, Check); 8] = [
        ("table values", table_values),
        ("small Johnson graphs", small_johnson),
        ("triangle on J(n,2) and K(n,2)", triangle_on_pairs),
        ("triples on J(n,3)", triples_on_johnson3),
        ("halved partition on J(2k,k)", halved_partition),
        ("solver vs brute force", oracle_equivalence),
        ("extremal values", extremal),
        ("distance formulas", distance_formulas),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
