//! Equidistant sets, distance-equalizer verification, and the covering view
//! used by the solver.
//!
//! For a pair `{u, v}` write `W(u, v)` for the vertices equidistant from `u`
//! and `v`, and `H(u, v) = {u, v} ∪ W(u, v)` for its hitter set. A vertex set
//! `S` is a distance-equalizer set exactly when it intersects every `H(u, v)`:
//! a pair with an endpoint in `S` is hit through that endpoint, and a pair
//! outside `S` is hit only through an equidistant vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Distances, Graph};
use crate::vertex_set::{words_for, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairKey {
    pub u: usize,
    pub v: usize,
}

impl PairKey {
    /// Normalizes to `u < v`. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> PairKey {
        assert_ne!(a, b, "a pair needs two distinct vertices");
        PairKey {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

/// Vertices `x` with `d(u, x) = d(v, x)`.
pub fn equidistant_set<D: Distances + ?Sized>(d: &D, u: usize, v: usize) -> Result<VertexSet> {
    if u == v {
        return Err(Error::InvalidParameters(format!(
            "equidistant set needs distinct vertices, got {u} twice"
        )));
    }
    let n = d.order();
    let mut w = VertexSet::new(n);
    for x in 0..n {
        match (d.distance(u, x), d.distance(v, x)) {
            (Some(a), Some(b)) if a == b => {
                w.insert(x);
            }
            (None, _) | (_, None) => {
                return Err(Error::InvalidParameters(format!(
                    "vertex {x} unreachable from {u} or {v}; equidistance needs a connected graph"
                )))
            }
            _ => {}
        }
    }
    Ok(w)
}

/// Outcome of checking a candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub set: VertexSet,
    pub valid: bool,
    /// First uncovered pair in `(u, v)` order when invalid.
    pub violation: Option<PairKey>,
}

impl Certificate {
    pub fn to_json(&self, g: Option<&Graph>) -> CertificateJson {
        let set = self.set.to_vec();
        let labels = set
            .iter()
            .map(|&v| g.map_or_else(|| v.to_string(), |g| g.label(v)))
            .collect();
        CertificateJson {
            set,
            labels,
            valid: self.valid,
            violation: self.violation.map(|p| [p.u, p.v]),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateJson {
    pub set: Vec<usize>,
    pub labels: Vec<String>,
    pub valid: bool,
    pub violation: Option<[usize; 2]>,
}

/// Checks the definition directly: every pair of distinct vertices outside
/// `s` must have an equidistant vertex in `s`.
///
/// Unreachable distances never count as equal.
pub fn is_distance_equalizer<D: Distances + ?Sized>(d: &D, s: &VertexSet) -> Certificate {
    let n = d.order();
    assert_eq!(s.capacity(), n, "set capacity does not match graph order");
    let members = s.to_vec();
    let outside: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    // cache distances from each member of s
    let rows: Vec<Vec<Option<u32>>> = members
        .iter()
        .map(|&x| (0..n).map(|y| d.distance(x, y)).collect())
        .collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            let hit = rows
                .iter()
                .any(|row| matches!((row[u], row[v]), (Some(a), Some(b)) if a == b));
            if !hit {
                return Certificate {
                    set: s.clone(),
                    valid: false,
                    violation: Some(PairKey { u, v }),
                };
            }
        }
    }
    Certificate {
        set: s.clone(),
        valid: true,
        violation: None,
    }
}

/// All `C(n, 2)` hitter sets, stored as one flat word array.
#[derive(Clone, Debug)]
pub struct EqualizerInstance {
    n: usize,
    words: usize,
    pairs: Vec<PairKey>,
    hitters: Vec<u64>,
}

impl EqualizerInstance {
    pub fn build(d: &DistanceMatrix) -> Result<EqualizerInstance> {
        if !d.is_connected() {
            return Err(Error::Disconnected {
                components: d.component_count(),
            });
        }
        let n = d.n();
        let words = words_for(n);
        let pair_count = n * n.saturating_sub(1) / 2;
        let mut pairs = Vec::with_capacity(pair_count);
        let mut hitters = vec![0u64; pair_count * words];
        let mut p = 0;
        for u in 0..n {
            let du = d.row(u);
            for v in u + 1..n {
                let dv = d.row(v);
                let h = &mut hitters[p * words..(p + 1) * words];
                for x in 0..n {
                    if du[x] == dv[x] {
                        h[x / 64] |= 1 << (x % 64);
                    }
                }
                h[u / 64] |= 1 << (u % 64);
                h[v / 64] |= 1 << (v % 64);
                pairs.push(PairKey { u, v });
                p += 1;
            }
        }
        Ok(EqualizerInstance {
            n,
            words,
            pairs,
            hitters,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    #[inline]
    pub fn pairs(&self) -> &[PairKey] {
        &self.pairs
    }

    /// Index of pair `{u, v}` in `(u, v)` lexicographic order.
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        let PairKey { u, v } = PairKey::new(a, b);
        // pairs before row u: sum_{i<u} (n - 1 - i)
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    #[inline]
    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn hitter_words(&self, p: usize) -> &[u64] {
        &self.hitters[p * self.words..(p + 1) * self.words]
    }

    /// `H(u, v)` for pair index `p`.
    pub fn hitter(&self, p: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.hitter_words(p))
    }

    /// `true` when `W(u, v)` is empty, i.e. `H(u, v) = {u, v}`.
    pub fn is_forced(&self, p: usize) -> bool {
        self.hitter_words(p)
            .iter()
            .map(|w| w.count_ones())
            .sum::<u32>()
            == 2
    }

    /// First pair whose hitter set misses `s`.
    pub fn first_unhit(&self, s: &VertexSet) -> Option<PairKey> {
        let sw = s.words();
        (0..self.pairs.len())
            .find(|&p| self.hitter_words(p).iter().zip(sw).all(|(h, x)| h & x == 0))
            .map(|p| self.pairs[p])
    }

    pub fn hits_all(&self, s: &VertexSet) -> bool {
        self.first_unhit(s).is_none()
    }
}

pub fn build_instance(d: &DistanceMatrix) -> Result<EqualizerInstance> {
    EqualizerInstance::build(d)
}

/// Compares the definition-level check against the covering check. Always
/// `true` on connected graphs; exposed so the equivalence can be tested.
pub fn hitting_equivalence_check(d: &DistanceMatrix, s: &VertexSet) -> Result<bool> {
    let inst = EqualizerInstance::build(d)?;
    Ok(is_distance_equalizer(d, s).valid == inst.hits_all(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::{johnson, named_family, Family, KSubset};

    fn c4() -> DistanceMatrix {
        named_family(Family::Cycle(4))
            .unwrap()
            .all_pairs_distances()
    }

    #[test]
    fn c4_equidistant_sets() {
        let d = c4();
        assert_eq!(equidistant_set(&d, 0, 2).unwrap().to_vec(), vec![1, 3]);
        assert!(equidistant_set(&d, 0, 1).unwrap().is_empty());
        assert!(equidistant_set(&d, 1, 1).is_err());
    }

    #[test]
    fn complement_pair_in_j63_has_no_equidistant_vertex() {
        let (g, idx) = johnson(6, 3).unwrap();
        let d = g.all_pairs_distances();
        let x = idx.rank(&KSubset::parse(6, "{1,2,3}").unwrap()).unwrap();
        let y = idx.rank(&KSubset::parse(6, "{4,5,6}").unwrap()).unwrap();
        assert!(equidistant_set(&d, x, y).unwrap().is_empty());
    }

    #[test]
    fn whole_vertex_set_is_valid() {
        let d = named_family(Family::Path(5)).unwrap().all_pairs_distances();
        let c = is_distance_equalizer(&d, &VertexSet::full(5));
        assert!(c.valid);
        assert_eq!(c.violation, None);
    }

    #[test]
    fn violation_is_first_failing_pair() {
        // P4: 0-1-2-3 with S = {} fails at (0,1)
        let d = named_family(Family::Path(4)).unwrap().all_pairs_distances();
        let c = is_distance_equalizer(&d, &VertexSet::new(4));
        assert_eq!(c.violation, Some(PairKey { u: 0, v: 1 }));
        // S = {1}: pairs outside are (0,2),(0,3),(2,3); d(1,0)=d(1,2)=1
        let c = is_distance_equalizer(&d, &VertexSet::from_indices(4, [1]));
        assert_eq!(c.violation, Some(PairKey { u: 0, v: 3 }));
    }

    #[test]
    fn instance_for_p2_and_c4() {
        let d = named_family(Family::Path(2)).unwrap().all_pairs_distances();
        let inst = build_instance(&d).unwrap();
        assert_eq!(inst.pair_count(), 1);
        assert_eq!(inst.hitter(0).to_vec(), vec![0, 1]);

        let inst = build_instance(&c4()).unwrap();
        for (p, key) in inst.pairs().iter().enumerate() {
            let h = inst.hitter(p).to_vec();
            if (key.v - key.u) % 2 == 1 {
                assert_eq!(h, vec![key.u, key.v]);
                assert!(inst.is_forced(p));
            } else {
                assert_eq!(h, vec![0, 1, 2, 3]);
            }
        }
    }

    #[test]
    fn pair_index_matches_order() {
        let d = named_family(Family::Cycle(7))
            .unwrap()
            .all_pairs_distances();
        let inst = build_instance(&d).unwrap();
        for (p, key) in inst.pairs().iter().enumerate() {
            assert_eq!(inst.pair_index(key.u, key.v), p);
            assert_eq!(inst.pair_index(key.v, key.u), p);
        }
    }

    #[test]
    fn disconnected_instance_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            build_instance(&g.all_pairs_distances()),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let (g, _) = johnson(4, 2).unwrap();
        let d = g.all_pairs_distances();
        // {1,2} is index 0, {3,4} is index 5
        let c = is_distance_equalizer(&d, &VertexSet::from_indices(6, [0, 5]));
        let json = serde_json::to_string(&c.to_json(Some(&g))).unwrap();
        assert_eq!(
            json,
            r#"{"set":[0,5],"labels":["{1,2}","{3,4}"],"valid":true,"violation":null}"#
        );
    }

    #[test]
    fn equivalence_on_empty_set_of_p3_and_star_center() {
        let d = named_family(Family::Path(3)).unwrap().all_pairs_distances();
        let s = VertexSet::new(3);
        assert!(!is_distance_equalizer(&d, &s).valid);
        assert!(hitting_equivalence_check(&d, &s).unwrap());

        let d = named_family(Family::Star(5)).unwrap().all_pairs_distances();
        let s = VertexSet::from_indices(5, [0]);
        assert!(is_distance_equalizer(&d, &s).valid);
        assert!(hitting_equivalence_check(&d, &s).unwrap());
    }
}
