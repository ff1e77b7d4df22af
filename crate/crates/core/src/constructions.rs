//! Explicit distance-equalizer sets for Johnson and Kneser graphs, checked
//! as certificates against the generated graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{degree_lower_bound, forced_matching_lb};
use crate::equalizer::{is_distance_equalizer, Certificate, CertificateJson, EqualizerInstance};
use crate::error::{Error, Result};
use crate::graph::{Distances, Graph};
use crate::subsets::{
    binomial, johnson, kneser, JohnsonDistances, KSubset, Kneser2Distances, SubsetIndex,
};
use crate::vertex_set::VertexSet;

/// Above this order, verification uses the closed-form distance instead of
/// a BFS matrix.
pub const BFS_VERIFY_LIMIT: usize = 2000;

/// Largest order for which the forced-pair matching bound is computed.
pub const MATCHING_BOUND_LIMIT: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionFamily {
    Johnson2,
    Johnson3,
    Halved,
    Kneser2,
    SmallJohnson4,
    SmallJohnson5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Exact(usize),
    Upper(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetGraph {
    Johnson,
    Kneser,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstruction {
    pub family: ConstructionFamily,
    pub n: usize,
    pub k: usize,
    pub target: TargetGraph,
    pub set: Vec<KSubset>,
    pub claim: Claim,
    pub basis: &'static str,
    /// Set when the construction is requested outside its proven range.
    pub warning: Option<String>,
}

fn triangle(n: usize) -> Vec<KSubset> {
    [[1, 2], [1, 3], [2, 3]]
        .iter()
        .map(|m| KSubset::new(n, m).expect("n >= 3"))
        .collect()
}

/// `{1,2},{3,4}` for `n = 4`, otherwise the triangle `{1,2},{1,3},{2,3}`.
pub fn johnson2_set(n: usize) -> Result<NamedConstruction> {
    let (family, set, claim, basis) = match n {
        0..=3 => {
            return Err(Error::InvalidParameters(format!(
                "johnson2 construction needs n >= 4, got {n}"
            )))
        }
        4 => (
            ConstructionFamily::SmallJohnson4,
            vec![KSubset::new(4, &[1, 2])?, KSubset::new(4, &[3, 4])?],
            Claim::Exact(2),
            "eqdim(J(4,2)) = 2, found by exhaustive search",
        ),
        5 => (
            ConstructionFamily::SmallJohnson5,
            triangle(5),
            Claim::Exact(3),
            "eqdim(J(5,2)) = 3, found by exhaustive search",
        ),
        _ => (
            ConstructionFamily::Johnson2,
            triangle(n),
            Claim::Exact(3),
            "eqdim(J(n,2)) = 3 for n >= 6 via the triangle {1,2},{1,3},{2,3}",
        ),
    };
    Ok(NamedConstruction {
        family,
        n,
        k: 2,
        target: TargetGraph::Johnson,
        set,
        claim,
        basis,
        warning: None,
    })
}

/// The `n - 2` triples `{1,2,j}`, `3 <= j <= n`. Proven for `n >= 9`;
/// `6 <= n <= 8` is allowed with a warning.
pub fn johnson3_set(n: usize) -> Result<NamedConstruction> {
    if n < 6 {
        return Err(Error::InvalidParameters(format!(
            "johnson3 construction needs n >= 6, got {n}"
        )));
    }
    let set = (3..=n)
        .map(|j| KSubset::new(n, &[1, 2, j]))
        .collect::<Result<Vec<_>>>()?;
    let warning = (n < 9).then(|| format!("the n - 2 bound is only proven for n >= 9 (n = {n})"));
    Ok(NamedConstruction {
        family: ConstructionFamily::Johnson3,
        n,
        k: 3,
        target: TargetGraph::Johnson,
        set,
        claim: Claim::Upper(n - 2),
        basis: "eqdim(J(n,3)) <= n - 2 for n >= 9 via the triples {1,2,j}",
        warning,
    })
}

/// `true` when `x` has more members in `{1..k}` than in `{k+1..2k}`.
pub fn in_lower_half_majority(x: &KSubset, k: usize) -> bool {
    let low = x.members().iter().filter(|&&m| m <= k).count();
    low > x.k() - low
}

/// For odd `k >= 3`: all k-subsets of `{1..2k}` with a majority in `{1..k}`.
pub fn halved_partition_set(k: usize) -> Result<NamedConstruction> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!(
            "halved partition needs odd k >= 3, got {k}"
        )));
    }
    let index = SubsetIndex::new(2 * k, k)?;
    let set: Vec<KSubset> = index
        .subsets()
        .iter()
        .filter(|x| in_lower_half_majority(x, k))
        .copied()
        .collect();
    let half = (binomial(2 * k, k) / 2) as usize;
    Ok(NamedConstruction {
        family: ConstructionFamily::Halved,
        n: 2 * k,
        k,
        target: TargetGraph::Johnson,
        set,
        claim: Claim::Exact(half),
        basis: "eqdim(J(2k,k)) = C(2k,k)/2 for odd k via the lower-half-majority class",
        warning: None,
    })
}

/// The triangle `{1,2},{1,3},{2,3}` on `K(n, 2)`, `n >= 5`.
pub fn kneser2_set(n: usize) -> Result<NamedConstruction> {
    if n < 5 {
        return Err(Error::InvalidParameters(format!(
            "K({n},2) is disconnected or empty; kneser2 construction needs n >= 5"
        )));
    }
    Ok(NamedConstruction {
        family: ConstructionFamily::Kneser2,
        n,
        k: 2,
        target: TargetGraph::Kneser,
        set: triangle(n),
        claim: Claim::Exact(3),
        basis: "eqdim(K(n,2)) = 3 via the triangle {1,2},{1,3},{2,3}",
        warning: None,
    })
}

/// CLI construction specifier: `johnson2:n`, `johnson3:n`, `halved:k`,
/// `kneser2:n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Johnson2(usize),
    Johnson3(usize),
    Halved(usize),
    Kneser2(usize),
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<NamedConstruction> {
        match *self {
            ConstructionSpec::Johnson2(n) => johnson2_set(n),
            ConstructionSpec::Johnson3(n) => johnson3_set(n),
            ConstructionSpec::Halved(k) => halved_partition_set(k),
            ConstructionSpec::Kneser2(n) => kneser2_set(n),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConstructionSpec> {
        let bad = || {
            Error::Parse(format!(
                "bad construction specifier `{s}` (expected johnson2:n | johnson3:n | halved:k | kneser2:n)"
            ))
        };
        let (name, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        let v: usize = arg.trim().parse().map_err(|_| bad())?;
        match name.trim() {
            "johnson2" => Ok(ConstructionSpec::Johnson2(v)),
            "johnson3" => Ok(ConstructionSpec::Johnson3(v)),
            "halved" => Ok(ConstructionSpec::Halved(v)),
            "kneser2" => Ok(ConstructionSpec::Kneser2(v)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Johnson2(n) => write!(f, "johnson2:{n}"),
            ConstructionSpec::Johnson3(n) => write!(f, "johnson3:{n}"),
            ConstructionSpec::Halved(k) => write!(f, "halved:{k}"),
            ConstructionSpec::Kneser2(n) => write!(f, "kneser2:{n}"),
        }
    }
}

/// Result of checking a construction against its graph.
#[derive(Clone, Debug)]
pub struct ConstructionCheck {
    pub graph: Graph,
    pub certificate: Certificate,
    pub lower_bound: usize,
    pub lower_rule: String,
    /// Rule that certified optimality, when the set is valid, the claim is
    /// exact and an independent lower bound matches its size.
    pub optimality: Option<String>,
}

impl ConstructionCheck {
    pub fn optimal(&self) -> bool {
        self.optimality.is_some()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionJson {
    pub construction: String,
    pub basis: String,
    pub claim: Claim,
    pub warning: Option<String>,
    pub certificate: CertificateJson,
    pub lower_bound: usize,
    pub lower_rule: String,
    pub optimality: Option<String>,
}

impl ConstructionCheck {
    pub fn to_json(&self, spec: &str, c: &NamedConstruction) -> ConstructionJson {
        ConstructionJson {
            construction: spec.to_string(),
            basis: c.basis.to_string(),
            claim: c.claim,
            warning: c.warning.clone(),
            certificate: self.certificate.to_json(Some(&self.graph)),
            lower_bound: self.lower_bound,
            lower_rule: self.lower_rule.clone(),
            optimality: self.optimality.clone(),
        }
    }
}

/// Builds the target graph, maps the subsets to vertices and checks the set.
///
/// Optimality is only reported when a lower bound computed here (maximum
/// degree, or the forced-pair matching) reaches the set size; the claimed
/// value itself is never trusted.
pub fn verify_construction(c: &NamedConstruction) -> Result<ConstructionCheck> {
    let (graph, index) = match c.target {
        TargetGraph::Johnson => johnson(c.n, c.k)?,
        TargetGraph::Kneser => kneser(c.n, c.k)?,
    };
    let mut set = VertexSet::new(graph.n());
    for s in &c.set {
        let v = index.rank(s).map_err(|_| {
            Error::InvalidParameters(format!("{} is not a vertex of the target graph", s.label()))
        })?;
        set.insert(v);
    }

    let certificate = if graph.n() <= BFS_VERIFY_LIMIT {
        is_distance_equalizer(&graph.all_pairs_distances(), &set)
    } else {
        let oracle: Box<dyn Distances> = match (c.target, c.k) {
            (TargetGraph::Johnson, _) => Box::new(JohnsonDistances { index: &index }),
            (TargetGraph::Kneser, 2) => Box::new(Kneser2Distances { index: &index }),
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "no closed-form distance for K({},{}) at this size",
                    c.n, c.k
                )))
            }
        };
        is_distance_equalizer(oracle.as_ref(), &set)
    };

    let (mut lower_bound, rule) = degree_lower_bound(&graph);
    let mut lower_rule = rule.to_string();
    let size = set.len();
    if certificate.valid
        && lower_bound < size
        && matches!(c.claim, Claim::Exact(_))
        && graph.n() <= MATCHING_BOUND_LIMIT
        && graph.is_connected()
    {
        let inst = EqualizerInstance::build(&graph.all_pairs_distances())?;
        let m = forced_matching_lb(&inst);
        if m > lower_bound {
            lower_bound = m;
            lower_rule = "forced-pair-matching".to_string();
        }
    }
    let optimality = (certificate.valid
        && matches!(c.claim, Claim::Exact(v) if v == size)
        && lower_bound == size)
        .then(|| lower_rule.clone());
    Ok(ConstructionCheck {
        graph,
        certificate,
        lower_bound,
        lower_rule,
        optimality,
    })
}
