//! Exact equidistant dimension by branch-and-bound over the hitting-set
//! view, plus a brute-force oracle and a seeded random-graph generator.
//!
//! The exact search deepens over the target size `t`, starting at the best
//! lower bound: each round either finds a valid set of size `t` or proves
//! none exists. Within a round the search is depth-first:
//!
//! * pick the open pair whose hitter set has the fewest admissible vertices
//!   (ties by pair order) and branch on those vertices in ascending order,
//!   excluding each tried vertex from the later siblings;
//! * prune when the chosen count plus a greedy packing of pairwise disjoint
//!   admissible hitter sets exceeds `t`.
//!
//! Graphs whose vertices are all k-subsets of a ground set with adjacency
//! depending only on intersection size (Johnson and Kneser graphs) admit
//! every ground-set permutation as an automorphism. For those the top of
//! the tree branches on orbits of the stabilizer of the chosen sets instead
//! of single vertices, excluding earlier orbits from later siblings.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    degree_lower_bound, extremal_family_shortcut, forced_matching_lb, greedy_ub, support_vertex_lb,
};
use crate::constructions::{
    halved_partition_set, johnson2_set, johnson3_set, kneser2_set, NamedConstruction,
};
use crate::equalizer::{is_distance_equalizer, EqualizerInstance};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::subsets::{binomial, Mask, SubsetStructure};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// A starting incumbent, used only if it verifies.
    pub initial_witness: Option<VertexSet>,
    pub threads: usize,
    /// Orbit branching on recognized k-subset graphs.
    pub symmetry: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            time_limit: None,
            node_limit: None,
            initial_witness: None,
            threads: 1,
            symmetry: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    UpperOnly,
    InfeasibleInput,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::UpperOnly => "upper_only",
            SolveStatus::InfeasibleInput => "infeasible_input",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Option<VertexSet>,
    pub status: SolveStatus,
    pub nodes: u64,
    pub elapsed: Duration,
    pub lower_trace: String,
    pub upper_trace: String,
}

impl SolveReport {
    fn infeasible(start: Instant, msg: String) -> SolveReport {
        SolveReport {
            value: 0,
            witness: None,
            status: SolveStatus::InfeasibleInput,
            nodes: 0,
            elapsed: start.elapsed(),
            lower_trace: msg,
            upper_trace: String::new(),
        }
    }
}

/// Orbit data for graphs on all k-subsets of a ground set.
#[derive(Clone, Debug)]
struct SubsetSymmetry {
    n: usize,
    masks: Vec<Mask>,
}

impl SubsetSymmetry {
    /// Orbits of `candidates` under the permutations of the ground set that
    /// fix every chosen subset setwise, ordered by smallest member.
    fn orbits(&self, chosen: &[usize], candidates: &VertexSet) -> Vec<VertexSet> {
        let mut atoms = vec![Mask::ground(self.n)];
        for &c in chosen {
            let m = self.masks[c];
            atoms = atoms
                .iter()
                .flat_map(|&a| [a & m, a & !m])
                .filter(|a| !a.is_empty())
                .collect();
        }
        let mut by_signature: BTreeMap<Vec<u8>, VertexSet> = BTreeMap::new();
        for v in candidates {
            let sig: Vec<u8> = atoms
                .iter()
                .map(|&a| (a & self.masks[v]).count_ones() as u8)
                .collect();
            by_signature
                .entry(sig)
                .or_insert_with(|| VertexSet::new(self.masks.len()))
                .insert(v);
        }
        let mut orbits: Vec<VertexSet> = by_signature.into_values().collect();
        orbits.sort_by_key(|o| o.first());
        orbits
    }
}

#[derive(Clone, Debug)]
struct Node {
    chosen: Vec<usize>,
    excluded: Vec<u64>,
    open: Vec<u32>,
    orbit_phase: bool,
}

enum Analysis {
    Found(Vec<usize>),
    Pruned,
    /// Child `i` adds `branches[i].0` and excludes the blocks of all earlier
    /// children.
    Branch {
        orbit: bool,
        branches: Vec<(usize, Vec<usize>)>,
    },
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    abort: AtomicBool,
    /// Smallest task index that found a solution; later tasks may stop.
    first_found: AtomicUsize,
}

struct Ctl<'a> {
    limits: &'a Limits,
    task: usize,
    local: u64,
}

impl Ctl<'_> {
    const FLUSH: u64 = 256;

    /// Counts a node; returns `false` when the search must stop.
    #[inline]
    fn tick(&mut self) -> bool {
        self.local += 1;
        if self.local >= Self::FLUSH {
            self.flush();
        }
        !self.limits.abort.load(Ordering::Relaxed)
            && self.limits.first_found.load(Ordering::Relaxed) > self.task
    }

    fn flush(&mut self) {
        let total = self.limits.nodes.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        let over_nodes = self.limits.node_limit.is_some_and(|l| total > l);
        let over_time = self.limits.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.limits.abort.store(true, Ordering::Relaxed);
        }
    }
}

struct Search<'a> {
    inst: &'a EqualizerInstance,
    words: usize,
    target: usize,
    symmetry: Option<&'a SubsetSymmetry>,
}

impl Search<'_> {
    #[inline]
    fn hitter(&self, p: u32) -> &[u64] {
        self.inst.hitter_words(p as usize)
    }

    fn analyze(&self, node: &Node) -> Analysis {
        if node.open.is_empty() {
            return Analysis::Found(node.chosen.clone());
        }
        let room = self.target.saturating_sub(node.chosen.len());
        if room == 0 {
            return Analysis::Pruned;
        }
        let words = self.words;
        let excl = &node.excluded;

        if room == 1 {
            let mut common = vec![!0u64; words];
            for &p in &node.open {
                let h = self.hitter(p);
                let mut any = 0;
                for i in 0..words {
                    common[i] &= h[i] & !excl[i];
                    any |= common[i];
                }
                if any == 0 {
                    return Analysis::Pruned;
                }
            }
            let v = VertexSet::from_words(self.inst.n(), &common)
                .first()
                .expect("nonempty");
            let mut chosen = node.chosen.clone();
            chosen.push(v);
            return Analysis::Found(chosen);
        }

        let mut sized: Vec<(u32, u32)> = Vec::with_capacity(node.open.len());
        let mut best = (u32::MAX, 0u32);
        for &p in &node.open {
            let h = self.hitter(p);
            let size: u32 = (0..words).map(|i| (h[i] & !excl[i]).count_ones()).sum();
            if size == 0 {
                return Analysis::Pruned;
            }
            if size < best.0 {
                best = (size, p);
            }
            sized.push((size, p));
        }

        // disjoint packing: each packed set needs its own vertex
        sized.sort_unstable();
        let mut used = vec![0u64; words];
        let mut packed = 0;
        for &(_, p) in &sized {
            let h = self.hitter(p);
            if (0..words).all(|i| h[i] & !excl[i] & used[i] == 0) {
                packed += 1;
                if packed > room {
                    return Analysis::Pruned;
                }
                for i in 0..words {
                    used[i] |= h[i] & !excl[i];
                }
            }
        }

        let h = self.hitter(best.1);
        let members: Vec<usize> = VertexSet::from_words(
            self.inst.n(),
            &(0..words).map(|i| h[i] & !excl[i]).collect::<Vec<_>>(),
        )
        .to_vec();

        if node.orbit_phase {
            if let Some(sym) = self.symmetry {
                let mut candidates = VertexSet::full(self.inst.n());
                for &c in &node.chosen {
                    candidates.remove(c);
                }
                candidates.difference_with(&VertexSet::from_words(self.inst.n(), excl));
                let orbits = sym.orbits(&node.chosen, &candidates);
                if orbits.len() <= members.len() {
                    let branches = orbits
                        .into_iter()
                        .map(|o| (o.first().expect("orbits are nonempty"), o.to_vec()))
                        .collect();
                    return Analysis::Branch {
                        orbit: true,
                        branches,
                    };
                }
            }
        }
        Analysis::Branch {
            orbit: false,
            branches: members.into_iter().map(|v| (v, vec![v])).collect(),
        }
    }

    fn child(&self, node: &Node, v: usize, excluded: &[u64], orbit: bool) -> Node {
        let (wi, bit) = (v / 64, 1u64 << (v % 64));
        let open = node
            .open
            .iter()
            .copied()
            .filter(|&p| self.hitter(p)[wi] & bit == 0)
            .collect();
        let mut chosen = node.chosen.clone();
        chosen.push(v);
        Node {
            chosen,
            excluded: excluded.to_vec(),
            open,
            orbit_phase: orbit,
        }
    }

    fn children(&self, node: &Node, orbit: bool, branches: &[(usize, Vec<usize>)]) -> Vec<Node> {
        let mut excluded = node.excluded.clone();
        let mut out = Vec::with_capacity(branches.len());
        for (v, block) in branches {
            out.push(self.child(node, *v, &excluded, orbit));
            for &b in block {
                excluded[b / 64] |= 1 << (b % 64);
            }
        }
        out
    }

    fn dfs(&self, node: &Node, ctl: &mut Ctl) -> Outcome {
        if !ctl.tick() {
            return Outcome::Aborted;
        }
        match self.analyze(node) {
            Analysis::Found(s) => Outcome::Found(s),
            Analysis::Pruned => Outcome::Exhausted,
            Analysis::Branch { orbit, branches } => {
                let mut excluded = node.excluded.clone();
                for (v, block) in &branches {
                    let child = self.child(node, *v, &excluded, orbit);
                    match self.dfs(&child, ctl) {
                        Outcome::Exhausted => {}
                        other => return other,
                    }
                    for &b in block {
                        excluded[b / 64] |= 1 << (b % 64);
                    }
                }
                Outcome::Exhausted
            }
        }
    }

    /// Frontier of subtrees in depth-first order. Solutions met on the way
    /// become zero-work tasks so that task order matches sequential order.
    fn frontier(&self, root: Node, want: usize, ctl: &mut Ctl) -> Vec<Node> {
        let mut tasks = vec![root];
        for _ in 0..self.target {
            if tasks.len() >= want {
                break;
            }
            let mut next = Vec::new();
            let mut grew = false;
            for node in tasks {
                ctl.tick();
                match self.analyze(&node) {
                    Analysis::Found(_) => next.push(node),
                    Analysis::Pruned => grew = true,
                    Analysis::Branch { orbit, branches } => {
                        grew = true;
                        next.extend(self.children(&node, orbit, &branches));
                    }
                }
            }
            tasks = next;
            if !grew {
                break;
            }
        }
        tasks
    }

    fn run(&self, limits: &Limits, threads: usize) -> Outcome {
        let root = Node {
            chosen: Vec::new(),
            excluded: vec![0; self.words],
            open: (0..self.inst.pair_count() as u32).collect(),
            orbit_phase: self.symmetry.is_some(),
        };
        limits.first_found.store(usize::MAX, Ordering::Relaxed);
        if threads <= 1 {
            let mut ctl = Ctl {
                limits,
                task: 0,
                local: 0,
            };
            let out = self.dfs(&root, &mut ctl);
            ctl.flush();
            return out;
        }

        let mut ctl = Ctl {
            limits,
            task: 0,
            local: 0,
        };
        let tasks = self.frontier(root, threads * 8, &mut ctl);
        ctl.flush();
        let next = AtomicUsize::new(0);
        let results: Vec<std::sync::Mutex<Option<Outcome>>> =
            tasks.iter().map(|_| std::sync::Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..threads.min(tasks.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= tasks.len() {
                        break;
                    }
                    let mut ctl = Ctl {
                        limits,
                        task: i,
                        local: 0,
                    };
                    let out = if limits.first_found.load(Ordering::Relaxed) < i {
                        Outcome::Exhausted
                    } else {
                        self.dfs(&tasks[i], &mut ctl)
                    };
                    ctl.flush();
                    if matches!(out, Outcome::Found(_)) {
                        limits.first_found.fetch_min(i, Ordering::Relaxed);
                    }
                    *results[i].lock().unwrap() = Some(out);
                });
            }
        });
        // the first task in order that found a set decides; any abort before it
        // means the round is undecided
        for r in results {
            match r.into_inner().unwrap() {
                Some(Outcome::Found(s)) => return Outcome::Found(s),
                Some(Outcome::Exhausted) => {}
                Some(Outcome::Aborted) | None => return Outcome::Aborted,
            }
        }
        Outcome::Exhausted
    }
}

fn construction_for(structure: &SubsetStructure) -> Option<NamedConstruction> {
    let (n, k) = (structure.n, structure.k);
    if structure.is_johnson() {
        if k == 2 && n >= 4 {
            return johnson2_set(n).ok();
        }
        if k == 3 && n >= 9 {
            return johnson3_set(n).ok();
        }
        if n == 2 * k && k % 2 == 1 && k >= 3 {
            return halved_partition_set(k).ok();
        }
    } else if structure.is_kneser() && k == 2 && n >= 5 {
        return kneser2_set(n).ok();
    }
    None
}

fn construction_witness(structure: &SubsetStructure, c: &NamedConstruction) -> Option<VertexSet> {
    let mut s = VertexSet::new(structure.masks.len());
    for subset in &c.set {
        let v = structure.masks.iter().position(|&m| m == subset.mask())?;
        s.insert(v);
    }
    Some(s)
}

/// Exact equidistant dimension of `g`.
///
/// Disconnected graphs yield status `infeasible_input`. When a node or time
/// limit interrupts the search the report carries the best verified set with
/// status `upper_only`.
pub fn solve_exact(g: &Graph, opts: &SolveOptions) -> SolveReport {
    let start = Instant::now();
    let n = g.n();
    if n <= 1 {
        return SolveReport {
            value: 0,
            witness: Some(VertexSet::new(n)),
            status: SolveStatus::Optimal,
            nodes: 0,
            elapsed: start.elapsed(),
            lower_trace: "no vertex pairs".into(),
            upper_trace: "empty set".into(),
        };
    }
    let d = g.all_pairs_distances();
    let inst = match EqualizerInstance::build(&d) {
        Ok(inst) => inst,
        Err(Error::Disconnected { components }) => {
            return SolveReport::infeasible(
                start,
                format!("disconnected graph ({components} components)"),
            )
        }
        Err(e) => return SolveReport::infeasible(start, e.to_string()),
    };

    // lower bounds
    let mut lower_notes = Vec::new();
    let (mut lower, rule) = degree_lower_bound(g);
    lower_notes.push(format!("{rule}={lower}"));
    let support = support_vertex_lb(g);
    lower_notes.push(format!("support-vertices={support}"));
    let matching = forced_matching_lb(&inst);
    lower_notes.push(format!("forced-pair-matching={matching}"));
    lower = lower.max(support).max(matching);
    let exact = extremal_family_shortcut(g)
        .map(|v| (v, "extremal-path-or-cycle"))
        .or_else(|| match degree_lower_bound(g) {
            (v @ (1 | 2), rule) => Some((v, rule)),
            _ => None,
        });
    if let Some((v, rule)) = exact {
        lower_notes.push(format!("shortcut {rule}={v}"));
        lower = lower.max(v);
    }

    // upper bounds
    let mut upper_notes = Vec::new();
    let (greedy, mut incumbent) = greedy_ub(&inst);
    upper_notes.push(format!("greedy={greedy}"));
    let mut offer = |s: VertexSet, name: String, notes: &mut Vec<String>| {
        if inst.hits_all(&s) {
            notes.push(format!("{name}={}", s.len()));
            if s.len() < incumbent.len() {
                incumbent = s;
            }
        } else {
            notes.push(format!("{name} rejected"));
        }
    };
    if let Some(w) = &opts.initial_witness {
        if w.capacity() == n {
            offer(w.clone(), "initial".into(), &mut upper_notes);
        } else {
            upper_notes.push("initial rejected".into());
        }
    }
    let structure = SubsetStructure::detect(g);
    if let Some(st) = &structure {
        if let Some(c) = construction_for(st) {
            if let Some(w) = construction_witness(st, &c) {
                offer(
                    w,
                    format!("construction {:?}", c.family).to_lowercase(),
                    &mut upper_notes,
                );
            }
        }
    }
    let symmetry = structure
        .filter(|_| opts.symmetry)
        .map(|st| SubsetSymmetry {
            n: st.n,
            masks: st.masks,
        });

    let limits = Limits {
        deadline: opts.time_limit.map(|t| start + t),
        node_limit: opts.node_limit,
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        first_found: AtomicUsize::new(usize::MAX),
    };
    if opts.node_limit == Some(0) || opts.time_limit == Some(Duration::ZERO) {
        limits.abort.store(true, Ordering::Relaxed);
    }

    let mut status = SolveStatus::Optimal;
    let mut proven = lower;
    let mut t = lower;
    while t < incumbent.len() {
        let search = Search {
            inst: &inst,
            words: inst.word_count(),
            target: t,
            symmetry: symmetry.as_ref(),
        };
        match search.run(&limits, opts.threads.max(1)) {
            Outcome::Found(s) => {
                incumbent = VertexSet::from_indices(n, s);
                upper_notes.push(format!("search={}", incumbent.len()));
                break;
            }
            Outcome::Exhausted => {
                t += 1;
                proven = t;
            }
            Outcome::Aborted => {
                status = SolveStatus::UpperOnly;
                break;
            }
        }
    }
    if status == SolveStatus::Optimal && proven > lower {
        lower_notes.push(format!("search proved >= {proven}"));
    }
    if status == SolveStatus::UpperOnly {
        lower_notes.push(format!("interrupted; proven >= {proven}"));
    }

    let cert = is_distance_equalizer(&d, &incumbent);
    assert!(
        cert.valid,
        "solver produced an invalid witness {:?}",
        incumbent
    );
    SolveReport {
        value: incumbent.len(),
        witness: Some(incumbent),
        status,
        nodes: limits.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        lower_trace: lower_notes.join("; "),
        upper_trace: upper_notes.join("; "),
    }
}

/// Default cap on the number of subsets [`solve_bruteforce`] may enumerate.
pub const BRUTEFORCE_BUDGET: u128 = 50_000_000;

/// Enumerates subsets by increasing size (lexicographic within a size) and
/// returns the first that passes the definition-level check.
pub fn solve_bruteforce(d: &DistanceMatrix, max_size: usize, budget: u128) -> Result<SolveReport> {
    let start = Instant::now();
    let n = d.n();
    if !d.is_connected() {
        return Ok(SolveReport::infeasible(
            start,
            format!("disconnected graph ({} components)", d.component_count()),
        ));
    }
    let max_size = max_size.min(n);
    let needed: u128 = (0..=max_size)
        .map(|t| binomial(n, t))
        .fold(0u128, |a, b| a.saturating_add(b));
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut nodes = 0u64;
    for t in 0..=max_size {
        let mut comb: Vec<usize> = (0..t).collect();
        loop {
            nodes += 1;
            let s = VertexSet::from_indices(n, comb.iter().copied());
            if is_distance_equalizer(d, &s).valid {
                return Ok(SolveReport {
                    value: t,
                    witness: Some(s),
                    status: SolveStatus::Optimal,
                    nodes,
                    elapsed: start.elapsed(),
                    lower_trace: format!("enumerated all sets of size < {t}"),
                    upper_trace: "enumeration".into(),
                });
            }
            // next combination in lexicographic order
            let mut i = t;
            while i > 0 && comb[i - 1] == n - t + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            comb[i - 1] += 1;
            for j in i..t {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    Ok(SolveReport {
        value: max_size,
        witness: None,
        status: SolveStatus::UpperOnly,
        nodes,
        elapsed: start.elapsed(),
        lower_trace: format!("no valid set of size <= {max_size}"),
        upper_trace: String::new(),
    })
}

/// Maximum resampling attempts in [`random_connected_graph`].
pub const MAX_RESAMPLES: usize = 1000;

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by resampling;
/// deterministic per seed.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 || !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameters(format!(
            "random graph needs n >= 2 and 0 < p <= 1, got n = {n}, p = {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RESAMPLES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExceeded {
        attempts: MAX_RESAMPLES,
        n,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::{johnson, kneser, named_family, Family};

    fn solve(g: &Graph) -> SolveReport {
        solve_exact(g, &SolveOptions::default())
    }

    #[test]
    fn small_named_graphs() {
        for (f, v) in [
            (Family::Path(2), 1),
            (Family::Path(3), 1),
            (Family::Path(6), 4),
            (Family::Cycle(4), 2),
            (Family::Cycle(5), 3),
            (Family::Star(5), 1),
            (Family::Complete(5), 1),
        ] {
            let r = solve(&named_family(f).unwrap());
            assert_eq!((r.value, r.status), (v, SolveStatus::Optimal), "{f:?}");
        }
    }

    #[test]
    fn trivial_orders() {
        let r = solve(&named_family(Family::Path(1)).unwrap());
        assert_eq!((r.value, r.status), (0, SolveStatus::Optimal));
    }

    #[test]
    fn small_johnson_values() {
        assert_eq!(solve(&johnson(4, 2).unwrap().0).value, 2);
        assert_eq!(solve(&johnson(5, 2).unwrap().0).value, 3);
    }

    #[test]
    fn j63_is_ten() {
        let r = solve(&johnson(6, 3).unwrap().0);
        assert_eq!((r.value, r.status), (10, SolveStatus::Optimal));
    }

    #[test]
    fn symmetry_does_not_change_values() {
        for (g, v) in [
            (johnson(6, 2).unwrap().0, 3),
            (kneser(6, 2).unwrap().0, 3),
            (johnson(7, 3).unwrap().0, 5),
        ] {
            let plain = solve_exact(
                &g,
                &SolveOptions {
                    symmetry: false,
                    ..SolveOptions::default()
                },
            );
            let sym = solve(&g);
            assert_eq!(plain.value, v);
            assert_eq!(sym.value, v);
        }
    }

    #[test]
    fn disconnected_is_infeasible() {
        let (g, _) = kneser(8, 4).unwrap();
        let r = solve(&g);
        assert_eq!(r.status, SolveStatus::InfeasibleInput);
        assert!(r.lower_trace.contains("35 components"));
    }

    #[test]
    fn node_limit_zero_gives_upper_only() {
        let (g, _) = johnson(7, 3).unwrap();
        let r = solve_exact(
            &g,
            &SolveOptions {
                node_limit: Some(0),
                ..SolveOptions::default()
            },
        );
        assert_eq!(r.status, SolveStatus::UpperOnly);
        assert!(is_distance_equalizer(&g.all_pairs_distances(), r.witness.as_ref().unwrap()).valid);
    }

    #[test]
    fn bruteforce_small() {
        let d = named_family(Family::Path(2)).unwrap().all_pairs_distances();
        assert_eq!(solve_bruteforce(&d, 2, BRUTEFORCE_BUDGET).unwrap().value, 1);
        let d = named_family(Family::Cycle(4))
            .unwrap()
            .all_pairs_distances();
        assert_eq!(solve_bruteforce(&d, 4, BRUTEFORCE_BUDGET).unwrap().value, 2);
        let d = johnson(9, 3).unwrap().0.all_pairs_distances();
        assert!(matches!(
            solve_bruteforce(&d, 84, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn random_graph_determinism() {
        let a = random_connected_graph(8, 0.4, 42).unwrap();
        let b = random_connected_graph(8, 0.4, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        let k5 = random_connected_graph(5, 1.0, 7).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(solve(&k5).value, 1);
        let p2 = random_connected_graph(2, 1.0, 0).unwrap();
        assert_eq!(p2.edges(), vec![(0, 1)]);
        assert!(random_connected_graph(1, 0.5, 0).is_err());
        assert!(random_connected_graph(5, 0.0, 0).is_err());
        assert!(matches!(
            random_connected_graph(40, 0.001, 0),
            Err(Error::RetriesExceeded { .. })
        ));
    }
}
