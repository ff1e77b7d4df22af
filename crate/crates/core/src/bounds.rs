//! Lower and upper bounds on the equidistant dimension.
//!
//! Lower bounds: the maximum-degree characterization (a universal vertex
//! gives 1, maximum degree `n - 2` gives 2, anything smaller forces at least
//! 3), support vertices, and a matching over forced pairs. Upper bounds: the
//! greedy hitting set, `n - 3` for order at least 7, and `n - 1`.

use serde::{Deserialize, Serialize};

use crate::equalizer::{EqualizerInstance, PairKey};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Exact value pinned by maximum degree alone: 1 when `Δ = n - 1`, 2 when
/// `Δ = n - 2`. `None` means the value is at least 3.
pub fn degree_shortcut(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let max = g.degree_stats().max_degree;
    if max == n - 1 {
        Some(1)
    } else if max == n - 2 {
        Some(2)
    } else {
        None
    }
}

/// Lower bound implied by maximum degree, with its rule name.
pub fn degree_lower_bound(g: &Graph) -> (usize, &'static str) {
    match (g.n(), degree_shortcut(g)) {
        (0 | 1, _) => (0, "trivial"),
        (_, Some(1)) => (1, "universal-vertex"),
        (_, Some(2)) => (2, "max-degree-n-minus-2"),
        _ => (3, "max-degree-below-n-minus-2"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Path,
    Cycle,
}

fn path_or_cycle(g: &Graph) -> Option<Shape> {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return None;
    }
    let stats = g.degree_stats();
    let m = g.edge_count();
    if stats.max_degree <= 2 && m == n - 1 {
        Some(Shape::Path)
    } else if stats.regular_degree == Some(2) && m == n {
        Some(Shape::Cycle)
    } else {
        None
    }
}

/// Exact value for the extremal graphs: `n - 1` for the single edge, `n - 2`
/// for paths on 3 to 6 vertices and cycles on 3 to 5 vertices.
///
/// Recognition uses degree sequence, edge count and connectivity, which pins
/// paths and cycles among connected graphs.
pub fn extremal_family_shortcut(g: &Graph) -> Option<usize> {
    let n = g.n();
    match path_or_cycle(g)? {
        Shape::Path if n == 2 => Some(1),
        Shape::Path if (3..=6).contains(&n) => Some(n - 2),
        Shape::Cycle if (3..=5).contains(&n) => Some(n - 2),
        _ => None,
    }
}

/// Number of vertices adjacent to a leaf.
///
/// On the single edge both endpoints are leaves supporting each other and
/// the count (2) would exceed the true value; the result is capped at `n - 1`.
pub fn support_vertex_lb(g: &Graph) -> usize {
    let n = g.n();
    let leaves: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let count = (0..n)
        .filter(|&v| g.neighbors(v).iter().any(|w| leaves[w]))
        .count();
    count.min(n.saturating_sub(1))
}

/// Greedy maximal matching over forced pairs (pairs with no equidistant
/// vertex), scanning pairs in `(u, v)` order.
pub fn forced_matching(inst: &EqualizerInstance) -> Vec<PairKey> {
    let mut used = VertexSet::new(inst.n());
    let mut matching = Vec::new();
    for (p, &key) in inst.pairs().iter().enumerate() {
        if inst.is_forced(p) && !used.contains(key.u) && !used.contains(key.v) {
            used.insert(key.u);
            used.insert(key.v);
            matching.push(key);
        }
    }
    matching
}

/// Every valid set holds an endpoint of each forced pair, and matched pairs
/// are disjoint, so the matching size is a lower bound.
pub fn forced_matching_lb(inst: &EqualizerInstance) -> usize {
    forced_matching(inst).len()
}

/// Greedy hitting set: repeatedly take the vertex hitting the most unhit
/// hitter sets, smallest index on ties.
pub fn greedy_ub(inst: &EqualizerInstance) -> (usize, VertexSet) {
    let n = inst.n();
    let mut chosen = VertexSet::new(n);
    let mut open: Vec<usize> = (0..inst.pair_count()).collect();
    let mut score = vec![0usize; n];
    while !open.is_empty() {
        score.iter_mut().for_each(|s| *s = 0);
        for &p in &open {
            for (wi, &w) in inst.hitter_words(p).iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    score[wi * 64 + w.trailing_zeros() as usize] += 1;
                    w &= w - 1;
                }
            }
        }
        // max_by_key keeps the last maximum; scan in reverse for the smallest index
        let best = (0..n)
            .rev()
            .max_by_key(|&v| score[v])
            .expect("open pairs imply n >= 2");
        chosen.insert(best);
        open.retain(|&p| inst.hitter_words(p)[best / 64] >> (best % 64) & 1 == 0);
    }
    (chosen.len(), chosen)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lower: usize,
    pub lower_rule: String,
    pub upper: usize,
    pub upper_rule: String,
    pub exact: Option<usize>,
    pub exact_rule: Option<String>,
}

/// All bounds for a connected graph with its instance.
pub fn bound_report(g: &Graph, inst: &EqualizerInstance) -> BoundReport {
    let n = g.n();
    let mut lower = (0usize, "trivial".to_string());
    let mut raise = |v: usize, rule: &str| {
        if v > lower.0 {
            lower = (v, rule.to_string());
        }
    };
    let (deg, rule) = degree_lower_bound(g);
    raise(deg, rule);
    raise(support_vertex_lb(g), "support-vertices");
    raise(forced_matching_lb(inst), "forced-pair-matching");

    let (greedy, _) = greedy_ub(inst);
    let mut upper = (greedy, "greedy".to_string());
    let mut lower_upper = |v: usize, rule: &str| {
        if v < upper.0 {
            upper = (v, rule.to_string());
        }
    };
    if n >= 2 {
        lower_upper(n - 1, "all-but-one-vertex");
    }
    if n >= 7 {
        lower_upper(n - 3, "order-at-least-7");
    }

    let exact = extremal_family_shortcut(g)
        .map(|v| (v, "extremal-path-or-cycle"))
        .or_else(|| match degree_shortcut(g) {
            Some(1) => Some((1, "universal-vertex")),
            Some(2) => Some((2, "max-degree-n-minus-2")),
            _ => None,
        });
    let (exact, exact_rule) = match exact {
        Some((v, rule)) => {
            if v > lower.0 {
                lower = (v, rule.to_string());
            }
            if v < upper.0 {
                upper = (v, rule.to_string());
            }
            (Some(v), Some(rule.to_string()))
        }
        None if lower.0 == upper.0 => (Some(lower.0), Some("bounds-meet".to_string())),
        None => (None, None),
    };
    BoundReport {
        lower: lower.0,
        lower_rule: lower.1,
        upper: upper.0,
        upper_rule: upper.1,
        exact,
        exact_rule,
    }
}

/// Convenience wrapper building distances and the instance.
pub fn bounds_for_graph(g: &Graph) -> Result<BoundReport> {
    let inst = EqualizerInstance::build(&g.all_pairs_distances())?;
    Ok(bound_report(g, &inst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equalizer::is_distance_equalizer;
    use crate::subsets::{johnson, named_family, Family};

    fn inst(g: &Graph) -> EqualizerInstance {
        EqualizerInstance::build(&g.all_pairs_distances()).unwrap()
    }

    #[test]
    fn degree_shortcut_examples() {
        assert_eq!(
            degree_shortcut(&named_family(Family::Star(5)).unwrap()),
            Some(1)
        );
        assert_eq!(degree_shortcut(&johnson(4, 2).unwrap().0), Some(2));
        let c5 = named_family(Family::Cycle(5)).unwrap();
        assert_eq!(degree_shortcut(&c5), None);
        assert_eq!(degree_lower_bound(&c5).0, 3);
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Path(2)).unwrap()),
            Some(1)
        );
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Path(6)).unwrap()),
            Some(4)
        );
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Path(7)).unwrap()),
            None
        );
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Cycle(6)).unwrap()),
            None
        );
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Cycle(3)).unwrap()),
            Some(1)
        );
        // star K_{1,3} has the degree sequence of neither
        assert_eq!(
            extremal_family_shortcut(&named_family(Family::Star(4)).unwrap()),
            None
        );
        let p7 = named_family(Family::Path(7)).unwrap();
        let r = bound_report(&p7, &inst(&p7));
        assert!(r.upper <= 4);
    }

    #[test]
    fn support_vertices() {
        assert_eq!(
            support_vertex_lb(&named_family(Family::Path(6)).unwrap()),
            2
        );
        assert_eq!(
            support_vertex_lb(&named_family(Family::Cycle(5)).unwrap()),
            0
        );
        assert_eq!(
            support_vertex_lb(&named_family(Family::Path(2)).unwrap()),
            1
        );
        // spider: center 0 with leaves 1,2,3 and a leg 0-4-5
        let spider = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(support_vertex_lb(&spider), 2);
        let claw = named_family(Family::Star(4)).unwrap();
        assert_eq!(support_vertex_lb(&claw), 1);
    }

    #[test]
    fn forced_matching_examples() {
        let (g, _) = johnson(6, 3).unwrap();
        assert_eq!(forced_matching_lb(&inst(&g)), 10);
        let c5 = named_family(Family::Cycle(5)).unwrap();
        assert_eq!(forced_matching_lb(&inst(&c5)), 0);
    }

    #[test]
    fn greedy_examples() {
        let star = named_family(Family::Star(5)).unwrap();
        let (v, s) = greedy_ub(&inst(&star));
        assert_eq!((v, s.to_vec()), (1, vec![0]));
        let p2 = named_family(Family::Path(2)).unwrap();
        assert_eq!(greedy_ub(&inst(&p2)).0, 1);
        let (g, _) = johnson(7, 2).unwrap();
        let (v, s) = greedy_ub(&inst(&g));
        assert!(v >= 3);
        assert!(is_distance_equalizer(&g.all_pairs_distances(), &s).valid);
    }

    #[test]
    fn report_for_j63_and_star() {
        let (g, _) = johnson(6, 3).unwrap();
        let r = bound_report(&g, &inst(&g));
        assert_eq!(
            (r.lower, r.lower_rule.as_str()),
            (10, "forced-pair-matching")
        );
        let star = named_family(Family::Star(6)).unwrap();
        let r = bound_report(&star, &inst(&star));
        assert_eq!(r.exact, Some(1));
        assert_eq!((r.lower, r.upper), (1, 1));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"lower":1,"lower_rule":"universal-vertex","upper":1,"upper_rule":"greedy","exact":1,"exact_rule":"universal-vertex"}"#
        );
    }
}
