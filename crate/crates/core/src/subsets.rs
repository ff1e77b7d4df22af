//! Johnson and Kneser graphs over k-subsets of `{1, ..., n}`, their
//! closed-form distances, and the small named families (paths, cycles,
//! stars, complete graphs).
//!
//! Subsets are stored as bit masks over a 0-based ground set: element `i` of
//! `{1, ..., n}` is bit `i - 1`. Vertex indices follow colexicographic order,
//! which for a fixed cardinality is the same as ascending mask value, so
//! `{1,2,3} < {1,2,4} < {1,3,4} < {2,3,4} < {1,2,5} < ...`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Distances, Graph};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 256;

const MASK_WORDS: usize = MAX_GROUND / 64;

/// Fixed-width bit mask over the ground set. Ordering compares the highest
/// differing bit, i.e. numeric order of the mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Mask([u64; MASK_WORDS]);

impl Mask {
    pub const EMPTY: Mask = Mask([0; MASK_WORDS]);

    /// Bits `0..n`.
    pub fn ground(n: usize) -> Mask {
        let mut m = Mask::EMPTY;
        for i in 0..n.min(MAX_GROUND) {
            m.set(i);
        }
        m
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        i < MAX_GROUND && self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    /// Set bit positions in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    wi * 64 + b
                })
            })
        })
    }
}

impl BitAnd for Mask {
    type Output = Mask;
    #[inline]
    fn bitand(self, rhs: Mask) -> Mask {
        Mask(std::array::from_fn(|i| self.0[i] & rhs.0[i]))
    }
}

impl BitOr for Mask {
    type Output = Mask;
    #[inline]
    fn bitor(self, rhs: Mask) -> Mask {
        Mask(std::array::from_fn(|i| self.0[i] | rhs.0[i]))
    }
}

impl Not for Mask {
    type Output = Mask;
    #[inline]
    fn not(self) -> Mask {
        Mask(self.0.map(|w| !w))
    }
}

impl Ord for Mask {
    fn cmp(&self, other: &Mask) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Mask {
    fn partial_cmp(&self, other: &Mask) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

/// Refuse to materialize subset graphs with more vertices than this.
pub const MAX_SUBSET_VERTICES: usize = 20_000;

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is integral; divide out the common factor
        // first so the product only overflows when the result does
        let den = i as u128 + 1;
        let g = gcd(acc, den);
        let factor = (n - i) as u128 / (den / g);
        match (acc / g).checked_mul(factor) {
            Some(x) => acc = x,
            None => return u128::MAX,
        }
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: u16,
    mask: Mask,
}

impl KSubset {
    /// `members` are 1-based elements of `{1, ..., n}`.
    pub fn new(n: usize, members: &[usize]) -> Result<KSubset> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidParameters(format!(
                "ground set size {n} outside 1..={MAX_GROUND}"
            )));
        }
        let mut mask = Mask::EMPTY;
        for &m in members {
            if m == 0 || m > n {
                return Err(Error::InvalidParameters(format!(
                    "element {m} not in {{1,...,{n}}}"
                )));
            }
            if mask.bit(m - 1) {
                return Err(Error::InvalidParameters(format!("element {m} repeated")));
            }
            mask.set(m - 1);
        }
        Ok(KSubset { n: n as u16, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: Mask) -> KSubset {
        debug_assert!(n <= MAX_GROUND && (mask & !Mask::ground(n)).is_empty());
        KSubset { n: n as u16, mask }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn mask(&self) -> Mask {
        self.mask
    }

    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.n() && self.mask.bit(element - 1)
    }

    /// 1-based members in ascending order.
    pub fn members(&self) -> Vec<usize> {
        self.mask.ones().map(|i| i + 1).collect()
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(&self) -> KSubset {
        KSubset {
            n: self.n,
            mask: !self.mask & Mask::ground(self.n()),
        }
    }

    #[inline]
    pub fn intersection_size(&self, other: &KSubset) -> usize {
        (self.mask & other.mask).count_ones() as usize
    }

    /// Brace label, e.g. `{1,2,3}`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.members().iter().map(usize::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Parses `{1,2,3}` (braces optional) against ground set `{1, ..., n}`.
    pub fn parse(n: usize, s: &str) -> Result<KSubset> {
        let members = parse_members(s)?;
        KSubset::new(n, &members)
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

fn parse_members(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("subset `{s}`: `{t}`: {e}")))
        })
        .collect()
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || n <= k {
        return Err(Error::InvalidParameters(format!(
            "need n > k >= 1, got n = {n}, k = {k}"
        )));
    }
    if n > MAX_GROUND {
        return Err(Error::InvalidParameters(format!(
            "ground set size {n} exceeds {MAX_GROUND}"
        )));
    }
    Ok(())
}

/// Bijection between the k-subsets of `{1, ..., n}` and `0..C(n, k)` in
/// colexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetIndex {
    n: usize,
    k: usize,
    subsets: Vec<KSubset>,
}

impl SubsetIndex {
    pub fn new(n: usize, k: usize) -> Result<SubsetIndex> {
        check_nk(n, k)?;
        let count = binomial(n, k);
        if count > MAX_SUBSET_VERTICES as u128 {
            return Err(Error::InvalidParameters(format!(
                "C({n},{k}) = {count} vertices exceeds the limit of {MAX_SUBSET_VERTICES}"
            )));
        }
        let mut subsets = Vec::with_capacity(count as usize);
        // 0-based members c_0 < ... < c_{k-1}; colex successor bumps the
        // lowest c_i that can move and resets the ones below it
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            let mut mask = Mask::EMPTY;
            c.iter().for_each(|&i| mask.set(i));
            subsets.push(KSubset::from_mask(n, mask));
            let Some(i) = (0..k).find(|&i| c[i] + 1 < if i + 1 < k { c[i + 1] } else { n }) else {
                break;
            };
            c[i] += 1;
            for (j, x) in c.iter_mut().enumerate().take(i) {
                *x = j;
            }
        }
        debug_assert_eq!(subsets.len() as u128, count);
        Ok(SubsetIndex { n, k, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    pub fn unrank(&self, index: usize) -> KSubset {
        self.subsets[index]
    }

    /// Colex rank: `sum_i C(c_i, i + 1)` over 0-based members `c_0 < c_1 < ...`.
    pub fn rank(&self, s: &KSubset) -> Result<usize> {
        if s.n() != self.n || s.k() != self.k {
            return Err(Error::InvalidParameters(format!(
                "{} is not a {}-subset of {{1,...,{}}}",
                s.label(),
                self.k,
                self.n
            )));
        }
        let rank: u128 = s
            .mask
            .ones()
            .enumerate()
            .map(|(i, c)| binomial(c, i + 1))
            .sum();
        Ok(rank as usize)
    }

    pub fn labels(&self) -> Vec<String> {
        self.subsets.iter().map(KSubset::label).collect()
    }
}

fn subset_graph(
    n: usize,
    k: usize,
    adjacent: impl Fn(&KSubset, &KSubset) -> bool,
) -> Result<(Graph, SubsetIndex)> {
    let index = SubsetIndex::new(n, k)?;
    let subsets = index.subsets();
    let g = Graph::from_predicate(index.len(), |u, v| adjacent(&subsets[u], &subsets[v]))
        .with_labels(index.labels())?;
    Ok((g, index))
}

/// Johnson graph: k-subsets adjacent when they share `k - 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<(Graph, SubsetIndex)> {
    subset_graph(n, k, |a, b| a.intersection_size(b) + 1 == k)
}

/// Kneser graph: k-subsets adjacent when disjoint.
///
/// Generated for every `n > k`, even when the result is disconnected or
/// edgeless (`n < 2k + 1`); connectivity is checked by consumers.
pub fn kneser(n: usize, k: usize) -> Result<(Graph, SubsetIndex)> {
    subset_graph(n, k, |a, b| a.intersection_size(b) == 0)
}

/// `true` when `K(n, k)` is not guaranteed connected by `n >= 2k + 1`.
pub fn kneser_flagged(n: usize, k: usize) -> bool {
    n < 2 * k + 1
}

fn same_shape(a: &KSubset, b: &KSubset) -> Result<()> {
    if a.n() != b.n() || a.k() != b.k() {
        return Err(Error::InvalidParameters(format!(
            "{} (n = {}) and {} (n = {}) are not vertices of the same graph",
            a.label(),
            a.n(),
            b.label(),
            b.n()
        )));
    }
    Ok(())
}

/// Distance in `J(n, k)`: `k - |A ∩ B|`.
pub fn johnson_distance(a: &KSubset, b: &KSubset) -> Result<u32> {
    same_shape(a, b)?;
    Ok((a.k() - a.intersection_size(b)) as u32)
}

/// Checks `d(complement(A), B) = k - d(A, B)` in `J(2k, k)`.
pub fn complement_distance_check(a: &KSubset, b: &KSubset) -> Result<bool> {
    same_shape(a, b)?;
    if a.n() != 2 * a.k() {
        return Err(Error::InvalidParameters(format!(
            "complement identity needs n = 2k, got n = {}, k = {}",
            a.n(),
            a.k()
        )));
    }
    let k = a.k() as u32;
    Ok(johnson_distance(&a.complement(), b)? == k - johnson_distance(a, b)?)
}

/// Distance in `K(n, 2)`: `3 - d_J(A, B)` for `A != B`, else 0.
pub fn kneser2_distance(a: &KSubset, b: &KSubset) -> Result<u32> {
    same_shape(a, b)?;
    if a.k() != 2 {
        return Err(Error::InvalidParameters(format!(
            "closed-form Kneser distance only for k = 2, got k = {}",
            a.k()
        )));
    }
    if a.n() < 5 {
        return Err(Error::InvalidParameters(format!(
            "K({}, 2) is disconnected; need n >= 5",
            a.n()
        )));
    }
    if a == b {
        return Ok(0);
    }
    Ok(3 - johnson_distance(a, b)?)
}

/// Closed-form distances of a Johnson graph, indexed like [`johnson`].
pub struct JohnsonDistances<'a> {
    pub index: &'a SubsetIndex,
}

impl Distances for JohnsonDistances<'_> {
    fn order(&self) -> usize {
        self.index.len()
    }

    fn distance(&self, u: usize, v: usize) -> Option<u32> {
        let s = self.index.subsets();
        Some((self.index.k() - s[u].intersection_size(&s[v])) as u32)
    }
}

/// Closed-form distances of `K(n, 2)`, `n >= 5`, indexed like [`kneser`].
pub struct Kneser2Distances<'a> {
    pub index: &'a SubsetIndex,
}

impl Distances for Kneser2Distances<'_> {
    fn order(&self) -> usize {
        self.index.len()
    }

    fn distance(&self, u: usize, v: usize) -> Option<u32> {
        if u == v {
            return Some(0);
        }
        let s = self.index.subsets();
        Some(1 + s[u].intersection_size(&s[v]) as u32)
    }
}

/// The named small families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// Star with `n` vertices in total: center 0 joined to `1..n`.
    Star(usize),
    Complete(usize),
}

pub fn named_family(family: Family) -> Result<Graph> {
    let too_small = |name: &str, n: usize, min: usize| {
        Error::InvalidParameters(format!("{name}({n}) needs at least {min} vertices"))
    };
    match family {
        Family::Path(n) => {
            if n < 1 {
                return Err(too_small("path", n, 1));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(too_small("cycle", n, 3));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Star(n) => {
            if n < 2 {
                return Err(too_small("star", n, 2));
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Complete(n) => {
            if n < 1 {
                return Err(too_small("complete", n, 1));
            }
            Ok(Graph::from_predicate(n, |_, _| true))
        }
    }
}

/// Family specifier as used on the command line: `johnson:n,k`,
/// `kneser:n,k`, `path:n`, `cycle:n`, `star:n`, `complete:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Johnson { n: usize, k: usize },
    Kneser { n: usize, k: usize },
    Named(Family),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Johnson { n, k } => johnson(n, k).map(|(g, _)| g),
            GraphSpec::Kneser { n, k } => kneser(n, k).map(|(g, _)| g),
            GraphSpec::Named(f) => named_family(f),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        let bad = || {
            Error::Parse(format!(
                "bad graph specifier `{s}` (expected johnson:n,k | kneser:n,k | path:n | cycle:n | star:n | complete:n)"
            ))
        };
        let (name, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (name.trim(), nums.as_slice()) {
            ("johnson", &[n, k]) => GraphSpec::Johnson { n, k },
            ("kneser", &[n, k]) => GraphSpec::Kneser { n, k },
            ("path", &[n]) => GraphSpec::Named(Family::Path(n)),
            ("cycle", &[n]) => GraphSpec::Named(Family::Cycle(n)),
            ("star", &[n]) => GraphSpec::Named(Family::Star(n)),
            ("complete", &[n]) => GraphSpec::Named(Family::Complete(n)),
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Johnson { n, k } => write!(f, "johnson:{n},{k}"),
            GraphSpec::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            GraphSpec::Named(Family::Path(n)) => write!(f, "path:{n}"),
            GraphSpec::Named(Family::Cycle(n)) => write!(f, "cycle:{n}"),
            GraphSpec::Named(Family::Star(n)) => write!(f, "star:{n}"),
            GraphSpec::Named(Family::Complete(n)) => write!(f, "complete:{n}"),
        }
    }
}

/// A graph whose vertices are all k-subsets of `{1, ..., n}` and whose
/// adjacency depends only on intersection sizes. Every permutation of the
/// ground set is then an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetStructure {
    pub n: usize,
    pub k: usize,
    pub masks: Vec<Mask>,
    /// `adjacent_by_overlap[s]`: vertices sharing `s` elements are adjacent.
    pub adjacent_by_overlap: Vec<bool>,
}

impl SubsetStructure {
    /// Recognizes the structure from vertex labels and verifies it against
    /// every vertex pair of `g`.
    pub fn detect(g: &Graph) -> Option<SubsetStructure> {
        let labels = g.labels()?;
        let members: Vec<Vec<usize>> = labels
            .iter()
            .map(|l| {
                let l = l.trim();
                if l.starts_with('{') && l.ends_with('}') {
                    parse_members(l).ok()
                } else {
                    None
                }
            })
            .collect::<Option<_>>()?;
        let k = members.first()?.len();
        let n = members.iter().flatten().copied().max()?;
        if k == 0 || n <= k || n > MAX_GROUND || members.iter().any(|m| m.len() != k) {
            return None;
        }
        if binomial(n, k) != g.n() as u128 {
            return None;
        }
        let masks: Vec<Mask> = members
            .iter()
            .map(|m| KSubset::new(n, m).ok().map(|s| s.mask))
            .collect::<Option<_>>()?;
        let mut sorted = masks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != masks.len() || masks.iter().any(|m| m.count_ones() as usize != k) {
            return None;
        }
        let mut table: Vec<Option<bool>> = vec![None; k];
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let s = (masks[u] & masks[v]).count_ones() as usize;
                let adj = g.has_edge(u, v);
                match table[s] {
                    None => table[s] = Some(adj),
                    Some(prev) if prev != adj => return None,
                    _ => {}
                }
            }
        }
        Some(SubsetStructure {
            n,
            k,
            masks,
            adjacent_by_overlap: table.into_iter().map(|x| x.unwrap_or(false)).collect(),
        })
    }

    pub fn is_johnson(&self) -> bool {
        self.adjacent_by_overlap
            .iter()
            .enumerate()
            .all(|(s, &adj)| adj == (s + 1 == self.k))
    }

    pub fn is_kneser(&self) -> bool {
        self.adjacent_by_overlap
            .iter()
            .enumerate()
            .all(|(s, &adj)| adj == (s == 0))
    }
}
