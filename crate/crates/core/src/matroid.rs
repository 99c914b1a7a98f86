//! Matroids on a linearly ordered ground set.
//!
//! A [`Matroid`] keeps its basis family together with a full rank table
//! (one byte per subset), from which circuits and cocircuits are derived
//! once at construction. Every query afterwards is a table lookup or a scan
//! of the cached lists.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::subset::{all_subsets, GroundSet, Subset};

/// Above this size the basis exchange axiom is not checked and the matroid
/// is flagged unverified.
pub const EXCHANGE_CHECK_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CircuitKind {
    Circuit,
    Cocircuit,
}

impl CircuitKind {
    fn name(self) -> &'static str {
        match self {
            CircuitKind::Circuit => "circuit",
            CircuitKind::Cocircuit => "cocircuit",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankStats {
    pub rank: usize,
    pub corank: usize,
    pub nullity: usize,
}

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<Subset>,
    rank: usize,
    ranks: Vec<u8>,
    circuits: Vec<Subset>,
    cocircuits: Vec<Subset>,
    verified: bool,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bases: Vec<String> = self.bases.iter().map(|&b| self.ground.format(b)).collect();
        f.debug_struct("Matroid")
            .field("ground", &self.ground)
            .field("rank", &self.rank)
            .field("bases", &bases)
            .finish()
    }
}

fn canonical_family(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    family.dedup();
    family
}

/// Rank table from an independence table: `r(A) = |A|` on independent sets,
/// otherwise the largest rank among `A - e`.
fn ranks_from_independent(independent: &[bool], n: usize) -> Vec<u8> {
    let mut ranks = vec![0u8; 1 << n];
    for a in all_subsets(n) {
        let i = a.bits() as usize;
        ranks[i] = if independent[i] {
            a.len() as u8
        } else {
            a.iter()
                .map(|e| ranks[a.without(e).bits() as usize])
                .max()
                .unwrap_or(0)
        };
    }
    ranks
}

fn dual_ranks(ranks: &[u8], n: usize) -> Vec<u8> {
    let full = Subset::full(n);
    let r = ranks[full.bits() as usize] as usize;
    all_subsets(n)
        .map(|a| {
            let rest = ranks[a.complement(n).bits() as usize] as usize;
            (a.len() + rest - r) as u8
        })
        .collect()
}

/// Minimal dependent sets: `r(A) = |A| - 1` and every `A - e` independent.
fn circuits_from_ranks(ranks: &[u8], n: usize) -> Vec<Subset> {
    let rank = |s: Subset| ranks[s.bits() as usize] as usize;
    let circuits = all_subsets(n)
        .filter(|&a| {
            !a.is_empty()
                && rank(a) + 1 == a.len()
                && a.iter().all(|e| rank(a.without(e)) + 1 == a.len())
        })
        .collect();
    canonical_family(circuits)
}

impl Matroid {
    /// Validated matroid from its basis family.
    pub fn from_bases(ground: GroundSet, bases: Vec<Subset>) -> Result<Matroid> {
        let bases = Matroid::checked_bases(&ground, bases)?;
        let verified = ground.len() <= EXCHANGE_CHECK_CAP;
        if verified {
            check_exchange(&ground, &bases)?;
        }
        Ok(Matroid::from_basis_family(ground, bases, verified))
    }

    /// Builds from a basis family without checking the exchange axiom.
    /// Only meant for negative controls; the result may not be a matroid.
    pub fn from_bases_unchecked(ground: GroundSet, bases: Vec<Subset>) -> Result<Matroid> {
        let bases = Matroid::checked_bases(&ground, bases)?;
        Ok(Matroid::from_basis_family(ground, bases, false))
    }

    fn checked_bases(ground: &GroundSet, bases: Vec<Subset>) -> Result<Vec<Subset>> {
        let first = *bases.first().ok_or(Error::EmptyBasisList)?;
        for &b in &bases {
            ground.check(b)?;
            if b.len() != first.len() {
                return Err(Error::UnequalBasisSizes {
                    first: ground.format(first),
                    first_len: first.len(),
                    other: ground.format(b),
                    other_len: b.len(),
                });
            }
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        Ok(bases)
    }

    fn from_basis_family(ground: GroundSet, bases: Vec<Subset>, verified: bool) -> Matroid {
        let n = ground.len();
        let mut independent = vec![false; 1 << n];
        for b in &bases {
            independent[b.bits() as usize] = true;
        }
        // downward closure; A - e < A numerically, so one descending pass suffices
        for a in (0..independent.len()).rev() {
            if independent[a] {
                for e in Subset::from_bits(a as u32).iter() {
                    independent[a & !(1 << e)] = true;
                }
            }
        }
        let ranks = ranks_from_independent(&independent, n);
        let mut m = Matroid::from_rank_table(ground, ranks, verified);
        m.bases = bases;
        m
    }

    /// Assemble a matroid from a complete rank table.
    pub(crate) fn from_rank_table(ground: GroundSet, ranks: Vec<u8>, verified: bool) -> Matroid {
        let n = ground.len();
        let rank = ranks[ground.full().bits() as usize] as usize;
        let bases: Vec<Subset> = all_subsets(n)
            .filter(|&a| a.len() == rank && ranks[a.bits() as usize] as usize == rank)
            .collect();
        let circuits = circuits_from_ranks(&ranks, n);
        let cocircuits = circuits_from_ranks(&dual_ranks(&ranks, n), n);
        Matroid {
            ground,
            bases,
            rank,
            ranks,
            circuits,
            cocircuits,
            verified,
        }
    }

    /// Matroid with the given circuits. The family must be an antichain of
    /// nonempty sets satisfying circuit elimination.
    pub fn from_circuits(ground: GroundSet, circuits: Vec<Subset>) -> Result<Matroid> {
        let n = ground.len();
        let circuits = canonical_family(circuits);
        for &c in &circuits {
            ground.check(c)?;
            if c.is_empty() {
                return Err(Error::NoBases);
            }
        }
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[i + 1..] {
                if c1.is_subset_of(c2) {
                    return Err(Error::NotAntichain {
                        smaller: ground.format(c1),
                        larger: ground.format(c2),
                    });
                }
            }
        }
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[i + 1..] {
                for e in c1.intersection(c2).iter() {
                    let pool = c1.union(c2).without(e);
                    if !circuits.iter().any(|c| c.is_subset_of(pool)) {
                        return Err(Error::EliminationFailure {
                            c1: ground.format(c1),
                            c2: ground.format(c2),
                            element: ground.label(e).to_string(),
                        });
                    }
                }
            }
        }
        let mut dependent = vec![false; 1 << n];
        for c in &circuits {
            dependent[c.bits() as usize] = true;
        }
        for a in all_subsets(n) {
            let i = a.bits() as usize;
            if !dependent[i] {
                dependent[i] = a.iter().any(|e| dependent[a.without(e).bits() as usize]);
            }
        }
        let independent: Vec<bool> = dependent.iter().map(|d| !d).collect();
        let ranks = ranks_from_independent(&independent, n);
        let m = Matroid::from_rank_table(ground, ranks, true);
        if m.bases.is_empty() {
            return Err(Error::NoBases);
        }
        debug_assert_eq!(m.circuits, circuits);
        Ok(m)
    }

    /// Cycle matroid of a multigraph; bases are spanning forests and the
    /// element order is the edge declaration order.
    pub fn graphic(graph: &Graph) -> Result<Matroid> {
        if graph.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let ground = GroundSet::new(graph.edges.iter().map(|e| e.0.clone()))?;
        let n = ground.len();
        let ranks = all_subsets(n)
            .map(|a| {
                let mut forest = UnionFind::new(graph.vertices.len());
                a.iter()
                    .filter(|&e| forest.union(graph.edges[e].1, graph.edges[e].2))
                    .count() as u8
            })
            .collect();
        Ok(Matroid::from_rank_table(ground, ranks, true))
    }

    /// Uniform matroid `U(r, n)`: every `r`-subset is a basis.
    pub fn uniform(r: usize, ground: GroundSet) -> Result<Matroid> {
        if r > ground.len() {
            return Err(Error::RankOutOfRange {
                rank: r,
                size: ground.len(),
            });
        }
        let ranks = all_subsets(ground.len()).map(|a| a.len().min(r) as u8).collect();
        Ok(Matroid::from_rank_table(ground, ranks, true))
    }

    /// Free matroid: the whole ground set is the only basis.
    pub fn free(ground: GroundSet) -> Matroid {
        let n = ground.len();
        Matroid::uniform(n, ground).expect("rank n is in range")
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// `r(M)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// False when the ground set was too large for the exchange check, or
    /// the matroid came from an unchecked constructor.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    /// Rank of a subset by table lookup. The subset must lie in the ground set.
    pub fn rank_of(&self, a: Subset) -> usize {
        self.ranks[a.bits() as usize] as usize
    }

    pub fn rank_stats(&self, a: Subset) -> Result<RankStats> {
        self.ground.check(a)?;
        let rank = self.rank_of(a);
        Ok(RankStats {
            rank,
            corank: self.rank - rank,
            nullity: a.len() - rank,
        })
    }

    pub fn corank(&self, a: Subset) -> usize {
        self.rank - self.rank_of(a)
    }

    pub fn nullity(&self, a: Subset) -> usize {
        a.len() - self.rank_of(a)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn is_spanning(&self, a: Subset) -> bool {
        self.rank_of(a) == self.rank
    }

    pub fn is_basis(&self, a: Subset) -> bool {
        a.len() == self.rank && self.is_independent(a)
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn cocircuits(&self) -> &[Subset] {
        &self.cocircuits
    }

    /// Circuits or cocircuits, each list sorted by size then colex.
    pub fn circuit_family(&self, kind: CircuitKind) -> &[Subset] {
        match kind {
            CircuitKind::Circuit => &self.circuits,
            CircuitKind::Cocircuit => &self.cocircuits,
        }
    }

    /// Closure of `a`: every element whose addition does not raise the rank.
    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank_of(a);
        Subset::from_positions((0..self.len()).filter(|&e| self.rank_of(a.with(e)) == r))
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        self.closure(a) == a
    }

    pub fn dual(&self) -> Matroid {
        let n = self.len();
        let mut bases: Vec<Subset> = self.bases.iter().map(|b| b.complement(n)).collect();
        bases.sort();
        Matroid {
            ground: self.ground.clone(),
            bases,
            rank: n - self.rank,
            ranks: dual_ranks(&self.ranks, n),
            circuits: self.cocircuits.clone(),
            cocircuits: self.circuits.clone(),
            verified: self.verified,
        }
    }

    /// `M \ delete / contract`, on the surviving elements in inherited order.
    pub fn minor(&self, delete: Subset, contract: Subset) -> Result<Matroid> {
        self.ground.check(delete)?;
        self.ground.check(contract)?;
        if !delete.is_disjoint(contract) {
            return Err(Error::OverlappingMinor {
                delete: self.ground.format(delete),
                contract: self.ground.format(contract),
            });
        }
        let survivors: Vec<usize> = self
            .ground
            .full()
            .difference(delete.union(contract))
            .iter()
            .collect();
        let ground = GroundSet::new(survivors.iter().map(|&e| self.ground.label(e).to_string()))?;
        let base = self.rank_of(contract);
        let ranks = all_subsets(survivors.len())
            .map(|a| {
                let lifted = Subset::from_positions(a.iter().map(|i| survivors[i]));
                (self.rank_of(lifted.union(contract)) - base) as u8
            })
            .collect();
        Ok(Matroid::from_rank_table(ground, ranks, self.verified))
    }

    pub fn delete(&self, set: Subset) -> Result<Matroid> {
        self.minor(set, Subset::EMPTY)
    }

    pub fn contract(&self, set: Subset) -> Result<Matroid> {
        self.minor(Subset::EMPTY, set)
    }

    /// Fundamental circuit of `e ∉ b` or fundamental cocircuit of `e ∈ b`.
    pub fn fundamental(&self, b: Subset, e: usize, kind: CircuitKind) -> Result<Subset> {
        self.ground.check(b)?;
        if e >= self.len() {
            return Err(Error::ForeignElement(format!("{{{}}}", e)));
        }
        if !self.is_basis(b) {
            return Err(Error::NotABasis(self.ground.format(b)));
        }
        let (wrong_side, pool) = match kind {
            CircuitKind::Circuit => (b.contains(e), b.with(e)),
            CircuitKind::Cocircuit => (!b.contains(e), b.complement(self.len()).with(e)),
        };
        if wrong_side {
            return Err(Error::WrongSide {
                element: self.ground.label(e).to_string(),
                basis: self.ground.format(b),
                kind: kind.name(),
            });
        }
        Ok(*self
            .circuit_family(kind)
            .iter()
            .find(|c| c.contains(e) && c.is_subset_of(pool))
            .expect("a basis has a fundamental (co)circuit for every element on the right side"))
    }

    /// Same matroid with new element labels, position for position.
    pub fn relabel(&self, ground: GroundSet) -> Result<Matroid> {
        if ground.len() != self.len() {
            return Err(Error::GroundMismatch);
        }
        let mut m = self.clone();
        m.ground = ground;
        Ok(m)
    }
}

fn check_exchange(ground: &GroundSet, bases: &[Subset]) -> Result<()> {
    let set: HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            if b1 == b2 {
                continue;
            }
            for e in b1.difference(b2).iter() {
                let ok = b2
                    .difference(b1)
                    .iter()
                    .any(|f| set.contains(&b1.without(e).with(f)));
                if !ok {
                    return Err(Error::ExchangeViolation {
                        b1: ground.format(b1),
                        b2: ground.format(b2),
                        element: ground.label(e).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Multigraph with labelled edges; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(String, usize, usize)>,
}

impl Graph {
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let lookup = |edge: &str, v: &str| -> Result<usize> {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnknownVertex {
                    edge: edge.to_string(),
                    vertex: v.to_string(),
                })
        };
        let mut labels = HashSet::new();
        let mut out = Vec::new();
        for (label, a, b) in edges {
            let (label, a, b): (String, String, String) = (label.into(), a.into(), b.into());
            if !labels.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label));
            }
            let (ia, ib) = (lookup(&label, &a)?, lookup(&label, &b)?);
            out.push((label, ia, ib));
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// `(label, endpoint, endpoint)` with endpoints as vertex names.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.edges
            .iter()
            .map(|(l, a, b)| (l.as_str(), self.vertices[*a].as_str(), self.vertices[*b].as_str()))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn g(n: usize) -> GroundSet {
        GroundSet::numbered(n).unwrap()
    }

    pub fn sets(ground: &GroundSet, compact: &[&str]) -> Vec<Subset> {
        compact.iter().map(|s| ground.compact(s).unwrap()).collect()
    }

    /// Spanning trees of the doubled triangle: 13, 14, 23, 24, 34.
    pub fn m1() -> Matroid {
        let ground = g(4);
        let bases = sets(&ground, &["13", "14", "23", "24", "34"]);
        Matroid::from_bases(ground, bases).unwrap()
    }

    pub fn p2_m() -> Matroid {
        let ground = g(5);
        let circuits = sets(&ground, &["123"]);
        Matroid::from_circuits(ground, circuits).unwrap()
    }

    pub fn p2_m_prime() -> Matroid {
        let ground = g(5);
        let circuits = sets(&ground, &["24", "35", "123", "125", "134", "145"]);
        Matroid::from_circuits(ground, circuits).unwrap()
    }
}
