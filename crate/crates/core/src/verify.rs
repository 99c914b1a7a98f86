//! Brute-force verification harness.
//!
//! Each check recomputes one identity along a route that does not share
//! code with the thing being checked: derivatives are compared against
//! formal differentiation of the rank-based polynomial, the partition is
//! rebuilt from closures rather than circuit scans, and so on. A failing
//! check carries a concrete counterexample.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::activity;
use crate::error::{Error, Result};
use crate::matroid::{Graph, Matroid};
use crate::mpoly::{bindings, Polynomial, Var};
use crate::perspective::{axioms, colex_nearest, is_dawson_partition, DawsonInterval, Involution, Perspective};
use crate::subset::{all_subsets, GroundSet, Subset};
use crate::tutte;

/// Largest ground set `run_checks` accepts.
pub const VERIFY_CAP: usize = 16;

/// Largest ground set for which MP4 is checked over all pairs `Y ⊆ X`.
const MP4_EXHAUSTIVE_CAP: usize = 10;

type Outcome = std::result::Result<(), String>;

struct Check {
    name: &'static str,
    run: fn(&Perspective) -> Outcome,
}

const CHECKS: &[Check] = &[
    Check { name: "derivative-theorem", run: derivative_theorem },
    Check { name: "diagonal-derivative", run: diagonal_derivative },
    Check { name: "partition", run: partition },
    Check { name: "interval-lemma", run: interval_lemma },
    Check { name: "dualities", run: dualities },
    Check { name: "census-identity", run: census_identity },
    Check { name: "colex-agreement", run: colex_agreement },
    Check { name: "bgn-characterization", run: bgn_characterization },
    Check { name: "mp-axiom-agreement", run: mp_axiom_agreement },
    Check { name: "refinement", run: refinement },
    Check { name: "uniqueness-witness", run: uniqueness_witness },
    Check { name: "expansion-agreement", run: expansion_agreement },
    Check { name: "activity-identities", run: activity_identities },
];

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Vec<String>),
}

impl Selection {
    /// `"all"` or a comma-separated list of check names.
    pub fn parse(s: &str) -> Result<Selection> {
        if s.trim() == "all" {
            return Ok(Selection::All);
        }
        let names: Vec<String> = s
            .split(',')
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .map(String::from)
            .collect();
        for n in &names {
            if !check_names().any(|c| c == n) {
                return Err(Error::UnknownCheck(n.clone()));
            }
        }
        if names.is_empty() {
            return Err(Error::UnknownCheck(s.to_string()));
        }
        Ok(Selection::Only(names))
    }

    fn includes(&self, name: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Only(names) => names.iter().any(|n| n == name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub passed: bool,
    /// Counterexample when the check fails, empty otherwise.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS {} [{}]", c.name, c.instance)?;
            } else {
                writeln!(f, "FAIL {} [{}]: {}", c.name, c.instance, c.detail)?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Run the selected checks on `p`. Results follow the registration order.
pub fn run_checks(p: &Perspective, instance: &str, selection: &Selection) -> Result<VerificationReport> {
    if p.len() > VERIFY_CAP {
        return Err(Error::InstanceTooLarge {
            size: p.len(),
            cap: VERIFY_CAP,
        });
    }
    let checks = CHECKS
        .iter()
        .filter(|c| selection.includes(c.name))
        .map(|c| {
            let outcome = (c.run)(p);
            CheckResult {
                name: c.name.to_string(),
                instance: instance.to_string(),
                passed: outcome.is_ok(),
                detail: outcome.err().unwrap_or_default(),
            }
        })
        .collect();
    Ok(VerificationReport { checks })
}

fn fmt(p: &Perspective, s: Subset) -> String {
    p.ground().format(s)
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn derivative_theorem(p: &Perspective) -> Outcome {
    let t = tutte::tutte_corank_nullity(p);
    let max_p = p.m_prime().rank();
    let max_q = p.len() - p.m().rank();
    let mut cells = 0usize;
    for dp in 0..=max_p + 1 {
        let tx = t.partial_derivative(Var::X, dp as u32);
        for dq in 0..=max_q + 1 {
            let formal = tx.partial_derivative(Var::Y, dq as u32);
            if dp > max_p || dq > max_q {
                ensure(formal.is_zero(), || {
                    format!("∂^({dp},{dq}) t = {formal}, expected 0 beyond the degree bound")
                })?;
            }
            for v in tutte::DerivativeVariant::ALL {
                let gf = tutte::derivative_gf(p, dp, dq, v);
                ensure(gf == formal, || {
                    format!("({dp},{dq}) {v}: formal {formal} but generating function {gf}")
                })?;
            }
            cells += tutte::derivative_summands(p, dp, dq, tutte::DerivativeVariant::CrNl).len();
        }
    }
    ensure(cells == 1 << p.len(), || {
        format!("cr-nl cells cover {cells} subsets, expected {}", 1u64 << p.len())
    })
}

fn diagonal_derivative(p: &Perspective) -> Outcome {
    let t = tutte::tutte_corank_nullity(p);
    let diag = t.substitute(&bindings([(Var::Y, Polynomial::var(Var::X))]));
    let bound = p.m_prime().rank() + p.len() - p.m().rank();
    for dp in 0..=bound + 1 {
        let formal = diag.partial_derivative(Var::X, dp as u32);
        let gf = tutte::diagonal_derivative_gf(p, dp);
        ensure(gf == formal, || format!("order {dp}: formal {formal} but generating function {gf}"))?;
    }
    Ok(())
}

/// Interval of `b` computed from closures: `e ∈ B` is internally active in
/// `M'` iff `e ∉ cl_M'(B ∪ {f < e})`, and `e ∉ B` is externally active in `M`
/// iff `e ∈ cl_M(B ∩ {f > e})`.
fn interval_by_rank(p: &Perspective, b: Subset) -> DawsonInterval {
    let (m, mp) = (p.m(), p.m_prime());
    let n = p.len();
    let below = |e: usize| Subset::full(e);
    let above = |e: usize| Subset::full(n).difference(Subset::full(e + 1));
    let in_closure = |mat: &Matroid, s: Subset, e: usize| mat.rank_of(s.with(e)) == mat.rank_of(s);
    let mut int = Subset::EMPTY;
    let mut ext = Subset::EMPTY;
    for e in 0..n {
        if b.contains(e) {
            if !in_closure(mp, b.without(e).union(below(e)), e) {
                int = int.with(e);
            }
        } else if in_closure(m, b.intersection(above(e)), e) {
            ext = ext.with(e);
        }
    }
    DawsonInterval {
        witness: b,
        bottom: b.difference(int),
        top: b.union(ext),
    }
}

fn rank_partition(p: &Perspective) -> Vec<DawsonInterval> {
    all_subsets(p.len())
        .filter(|&a| p.m().rank_of(a) == a.len() && p.m_prime().rank_of(a) == p.m_prime().rank())
        .map(|b| interval_by_rank(p, b))
        .collect()
}

fn partition(p: &Perspective) -> Outcome {
    let intervals = rank_partition(p);
    let mut owner: Vec<Option<Subset>> = vec![None; 1 << p.len()];
    for i in &intervals {
        for a in i.members() {
            if let Some(prev) = owner[a.bits() as usize] {
                return Err(format!(
                    "{} lies in the intervals of {} and {}",
                    fmt(p, a),
                    fmt(p, prev),
                    fmt(p, i.witness)
                ));
            }
            owner[a.bits() as usize] = Some(i.witness);
            if a != i.witness && p.m().rank_of(a) == a.len() && p.m_prime().rank_of(a) == p.m_prime().rank() {
                return Err(format!(
                    "interval of {} contains a second independent/spanning set {}",
                    fmt(p, i.witness),
                    fmt(p, a)
                ));
            }
        }
    }
    if let Some(a) = all_subsets(p.len()).find(|a| owner[a.bits() as usize].is_none()) {
        return Err(format!("{} lies in no interval", fmt(p, a)));
    }
    let mut from_activity = p.dawson_intervals();
    from_activity.sort_by_key(|i| i.witness);
    for (x, y) in intervals.iter().zip(&from_activity) {
        ensure(x == y, || {
            format!(
                "interval of {}: [{}, {}] from ranks but [{}, {}] from activities",
                fmt(p, x.witness),
                fmt(p, x.bottom),
                fmt(p, x.top),
                fmt(p, y.bottom),
                fmt(p, y.top)
            )
        })?;
    }
    Ok(())
}

fn interval_lemma(p: &Perspective) -> Outcome {
    for i in rank_partition(p) {
        let pb = p.profile(i.witness);
        for a in i.members() {
            let pa = p.profile(a);
            let expected = [
                ("Int", pa.int_active, pb.int_active.intersection(a)),
                ("P", pa.p_set, pb.int_active.difference(a)),
                ("Ext", pa.ext_active, pb.ext_active.difference(a)),
                ("Q", pa.q_set, pb.ext_active.intersection(a)),
            ];
            for (name, got, want) in expected {
                ensure(got == want, || {
                    format!(
                        "{name}({}) = {} but the interval of {} predicts {}",
                        fmt(p, a),
                        fmt(p, got),
                        fmt(p, i.witness),
                        fmt(p, want)
                    )
                })?;
            }
            ensure(p.dawson_map(a) == i.witness, || {
                format!("f({}) = {}, expected {}", fmt(p, a), fmt(p, p.dawson_map(a)), fmt(p, i.witness))
            })?;
        }
    }
    Ok(())
}

fn dualities(p: &Perspective) -> Outcome {
    let mut containing: Vec<Option<DawsonInterval>> = vec![None; 1 << p.len()];
    for i in rank_partition(p) {
        for a in i.members() {
            containing[a.bits() as usize] = Some(i);
        }
    }
    for a in all_subsets(p.len()) {
        let phi = p.involution(a, Involution::Phi);
        let phi_star = p.involution(a, Involution::PhiStar);
        ensure(p.involution(phi, Involution::Phi) == a, || format!("φ(φ({})) ≠ {0}", fmt(p, a)))?;
        ensure(p.involution(phi_star, Involution::PhiStar) == a, || {
            format!("φ*(φ*({})) ≠ {0}", fmt(p, a))
        })?;
        let (s, t, u) = (p.profile(a), p.profile(phi), p.profile(phi_star));
        ensure(
            (t.nl, t.eps, t.iota_prime, t.cr_prime) == (s.eps, s.nl, s.iota_prime, s.cr_prime),
            || format!("φ({}) = {} does not swap (nl, ε) and fix (ι', cr')", fmt(p, a), fmt(p, phi)),
        )?;
        ensure(
            (u.cr_prime, u.iota_prime, u.nl, u.eps) == (s.iota_prime, s.cr_prime, s.nl, s.eps),
            || format!("φ*({}) = {} does not swap (cr', ι') and fix (nl, ε)", fmt(p, a), fmt(p, phi_star)),
        )?;
        let interval = containing[a.bits() as usize].ok_or_else(|| format!("{} lies in no interval", fmt(p, a)))?;
        let both = p.involution(phi_star, Involution::Phi);
        ensure(both == interval.complement_of(a), || {
            format!(
                "φ(φ*({})) = {} but its complement in [{}, {}] is {}",
                fmt(p, a),
                fmt(p, both),
                fmt(p, interval.bottom),
                fmt(p, interval.top),
                fmt(p, interval.complement_of(a))
            )
        })?;
    }
    Ok(())
}

/// Subset counts by `(ι', ε, rcd, cr', nl)` and witness counts by
/// `(ι', ε, rcd)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusTables {
    pub a: BTreeMap<(usize, usize, usize, usize, usize), u64>,
    pub b: BTreeMap<(usize, usize, usize), u64>,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

impl CensusTables {
    /// First index tuple at which `a_{i-p,j-q,k,p,q} = C(i,p) C(j,q) b_{ijk}`
    /// fails, scanning both tables.
    pub fn identity_violation(&self) -> Option<String> {
        let a = |key| self.a.get(&key).copied().unwrap_or(0);
        let b = |key| self.b.get(&key).copied().unwrap_or(0);
        for (&(i, j, k), &count) in &self.b {
            for p in 0..=i {
                for q in 0..=j {
                    let want = binomial(i, p) * binomial(j, q) * count;
                    let got = a((i - p, j - q, k, p, q));
                    if got != want {
                        return Some(format!("a({},{},{},{p},{q}) = {got}, expected {want}", i - p, j - q, k));
                    }
                }
            }
        }
        for (&(i0, j0, k, p, q), &got) in &self.a {
            let want = binomial(i0 + p, p) * binomial(j0 + q, q) * b((i0 + p, j0 + q, k));
            if got != want {
                return Some(format!("a({i0},{j0},{k},{p},{q}) = {got}, expected {want}"));
            }
        }
        None
    }
}

pub fn census(p: &Perspective) -> CensusTables {
    let mut tables = CensusTables::default();
    for q in p.profiles() {
        *tables.a.entry((q.iota_prime, q.eps, q.rcd, q.cr_prime, q.nl)).or_default() += 1;
    }
    for &w in p.independent_spanning() {
        let q = p.profile(w);
        *tables.b.entry((q.iota_prime, q.eps, q.rcd)).or_default() += 1;
    }
    tables
}

fn census_identity(p: &Perspective) -> Outcome {
    let tables = census(p);
    let total: u64 = tables.a.values().sum();
    ensure(total == 1 << p.len(), || format!("a-table sums to {total}"))?;
    let witnesses: u64 = tables.b.values().sum();
    ensure(witnesses == p.independent_spanning().len() as u64, || {
        format!("b-table sums to {witnesses}")
    })?;
    match tables.identity_violation() {
        None => Ok(()),
        Some(d) => Err(d),
    }
}

fn colex_agreement(p: &Perspective) -> Outcome {
    let family = p.independent_spanning();
    for a in all_subsets(p.len()) {
        let nearest = colex_nearest(family, a).map_err(|e| e.to_string())?;
        let f = p.dawson_map(a);
        ensure(nearest == f, || {
            format!("A = {}: colex-nearest {} but f(A) = {}", fmt(p, a), fmt(p, nearest), fmt(p, f))
        })?;
    }
    Ok(())
}

fn bgn_characterization(p: &Perspective) -> Outcome {
    let pairs: Vec<(Subset, Subset)> = rank_partition(p).iter().map(|i| (i.bottom, i.top)).collect();
    match is_dawson_partition(p.ground(), &pairs) {
        Ok(true) => Ok(()),
        Ok(false) => {
            let mut sorted = pairs.clone();
            sorted.sort();
            let w = sorted.windows(2).find(|w| w[0].1 >= w[1].1).expect("a descent exists");
            Err(format!(
                "bottoms {} < {} but tops {} ≥ {}",
                fmt(p, w[0].0),
                fmt(p, w[1].0),
                fmt(p, w[0].1),
                fmt(p, w[1].1)
            ))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn mp_axiom_agreement(p: &Perspective) -> Outcome {
    let (m, mp) = (p.m(), p.m_prime());
    let values = [
        ("MP1", axioms::mp1(m, mp)),
        ("MP2", axioms::mp2(m, mp)),
        ("MP2'", axioms::mp2_flats(m, mp)),
        ("MP3", axioms::mp3(m, mp)),
        ("MP4", axioms::mp4(m, mp, MP4_EXHAUSTIVE_CAP)),
    ];
    let render = || {
        values
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    ensure(values.iter().all(|v| v.1 == values[0].1), || format!("axioms disagree: {}", render()))?;
    ensure(values[0].1, || format!("not a perspective: {}", render()))
}

fn refinement(p: &Perspective) -> Outcome {
    let coarse = [
        ("M", Perspective::identity(p.m().clone())),
        ("M'", Perspective::identity(p.m_prime().clone())),
    ];
    for i in p.dawson_intervals() {
        for (name, c) in &coarse {
            let target = c.dawson_map(i.witness);
            if let Some(a) = i.members().find(|&a| c.dawson_map(a) != target) {
                return Err(format!(
                    "interval [{}, {}] meets two intervals of {name}: those of {} and {}",
                    fmt(p, i.bottom),
                    fmt(p, i.top),
                    fmt(p, target),
                    fmt(p, c.dawson_map(a))
                ));
            }
        }
    }
    Ok(())
}

fn uniqueness_witness(p: &Perspective) -> Outcome {
    let n = p.len();
    let co = p.m_prime().dual();
    for a in all_subsets(n) {
        let q = p.profile(a);
        for e in q.ext_active.union(q.q_set).iter() {
            activity::unique_witness_circuit(p.m(), a, e).map_err(|err| err.to_string())?;
        }
        // cocircuits of M' are circuits of its dual, read on the complement
        for e in q.int_active.union(q.p_set).iter() {
            activity::unique_witness_circuit(&co, a.complement(n), e).map_err(|err| format!("dual: {err}"))?;
        }
    }
    Ok(())
}

fn expansion_agreement(p: &Perspective) -> Outcome {
    let t = tutte::tutte_corank_nullity(p);
    let ind = tutte::tutte_indspan(p);
    ensure(ind == t, || format!("independent/spanning expansion {ind} ≠ {t}"))?;
    let shifted = t.substitute(&bindings([
        (Var::X, &Polynomial::var(Var::X) + &Polynomial::var(Var::U)),
        (Var::Y, &Polynomial::var(Var::Y) + &Polynomial::var(Var::V)),
    ]));
    let five = tutte::five_var(p);
    ensure(five == shifted, || format!("five-variable sum {five} ≠ t(x+u, y+v, z) = {shifted}"))?;
    for family in tutte::Family::ALL {
        let mut reference: Option<Vec<Polynomial>> = None;
        for sym in family.symbols() {
            let total = tutte::specialize_five_var(&five, &sym);
            ensure(total == t, || format!("{sym} gives {total} ≠ {t}"))?;
            let summands = tutte::symbol_summands(p, &sym);
            let sum: Polynomial = summands.iter().map(|s| s.monomial.clone()).sum();
            ensure(sum == t, || format!("{sym} summands add to {sum} ≠ {t}"))?;
            let mut multiset: Vec<Polynomial> = summands.into_iter().map(|s| s.monomial).collect();
            multiset.sort_by_cached_key(|m| m.canonical_text());
            match &reference {
                None => reference = Some(multiset),
                Some(r) => ensure(*r == multiset, || {
                    format!("family ({family}): {sym} has different summands from {}", family.lead_symbol())
                })?,
            }
        }
    }
    Ok(())
}

fn activity_identities(p: &Perspective) -> Outcome {
    let n = p.len();
    for (name, m) in [("M", p.m()), ("M'", p.m_prime())] {
        let dual = m.dual();
        for a in all_subsets(n) {
            let comp = a.complement(n);
            let act = activity::act(m, a);
            let act_star = activity::act(&dual, comp);
            let rows = [
                ("Int", activity::int_active(m, a), act_star.intersection(a)),
                ("P", activity::p_set(m, a), act_star.difference(a)),
                ("Ext", activity::ext_active(m, a), act.difference(a)),
                ("Q", activity::q_set(m, a), act.intersection(a)),
                ("Int via dual Ext", activity::int_active(m, a), activity::ext_active(&dual, comp)),
            ];
            for (what, got, want) in rows {
                ensure(got == want, || {
                    format!("{what}_{name}({}) = {} but the identity gives {}", fmt(p, a), fmt(p, got), fmt(p, want))
                })?;
            }
            ensure(activity::p_set(m, a).len() == m.corank(a), || {
                format!("|P_{name}({})| ≠ corank", fmt(p, a))
            })?;
            ensure(activity::q_set(m, a).len() == m.nullity(a), || {
                format!("|Q_{name}({})| ≠ nullity", fmt(p, a))
            })?;
        }
        for &b in m.bases() {
            let (iota, eps) = activity::basis_activities(m, b).map_err(|e| e.to_string())?;
            let direct = (activity::int_active(m, b).len(), activity::ext_active(m, b).len());
            ensure((iota, eps) == direct, || {
                format!("basis {} of {name}: fundamental route {:?}, direct {:?}", fmt(p, b), (iota, eps), direct)
            })?;
        }
    }
    let (m, mp) = (p.m(), p.m_prime());
    for a in all_subsets(n) {
        let pairs = [
            ("Int", activity::int_active(mp, a), activity::int_active(m, a)),
            ("P", activity::p_set(mp, a), activity::p_set(m, a)),
            ("Ext", activity::ext_active(m, a), activity::ext_active(mp, a)),
            ("Q", activity::q_set(m, a), activity::q_set(mp, a)),
        ];
        for (what, small, large) in pairs {
            ensure(small.is_subset_of(large), || {
                format!("{what} containment fails at {}: {} ⊄ {}", fmt(p, a), fmt(p, small), fmt(p, large))
            })?;
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Matroid,
    Perspective,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Matroid => "matroid",
            InstanceKind::Perspective => "perspective",
        }
    }
}

/// Largest `n` accepted by [`random_instance`].
pub const RANDOM_CAP: usize = 10;

fn gf_rank(columns: &[&Vec<u64>], prime: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = columns.iter().map(|c| c.to_vec()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = (1..prime).find(|k| rows[rank][col] * k % prime == 1).expect("prime field");
        for v in rows[rank].iter_mut() {
            *v = *v * inv % prime;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + prime * prime - f * p) % prime;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_linear(rng: &mut ChaCha8Rng, ground: GroundSet) -> Matroid {
    let n = ground.len();
    let prime = *[2u64, 3, 5].choose(rng).expect("nonempty");
    let dim = rng.gen_range(0..=n.min(5));
    let zero_bias = rng.gen_range(0.0..0.4);
    let columns: Vec<Vec<u64>> = (0..n)
        .map(|_| {
            (0..dim)
                .map(|_| if rng.gen_bool(zero_bias) { 0 } else { rng.gen_range(0..prime) })
                .collect()
        })
        .collect();
    let ranks = all_subsets(n)
        .map(|a| gf_rank(&a.iter().map(|e| &columns[e]).collect::<Vec<_>>(), prime) as u8)
        .collect();
    Matroid::from_rank_table(ground, ranks, true)
}

fn random_graphic(rng: &mut ChaCha8Rng, labels: &[String]) -> Matroid {
    let vertex_count = rng.gen_range(1..=labels.len() + 1);
    let vertices: Vec<String> = (0..vertex_count).map(|v| format!("v{v}")).collect();
    let edges: Vec<(String, String, String)> = labels
        .iter()
        .map(|l| {
            let a = rng.gen_range(0..vertex_count);
            let b = rng.gen_range(0..vertex_count);
            (l.clone(), vertices[a].clone(), vertices[b].clone())
        })
        .collect();
    let graph = Graph::new(vertices.clone(), edges).expect("random graph is well formed");
    Matroid::graphic(&graph).expect("random graph has edges")
}

/// Deterministic random instance on `n` elements labelled `1..n`. A
/// perspective comes from contracting and deleting 1–3 random port
/// elements of a random major, so it is valid by construction.
pub fn random_instance(seed: u64, n: usize, kind: InstanceKind) -> Result<Perspective> {
    if n == 0 || n > RANDOM_CAP {
        return Err(Error::InstanceTooLarge { size: n, cap: RANDOM_CAP });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ports = match kind {
        InstanceKind::Matroid => 0,
        InstanceKind::Perspective => rng.gen_range(1..=3),
    };
    let total = n + ports;
    let labels: Vec<String> = (1..=total).map(|i| i.to_string()).collect();
    let major = if rng.gen_bool(0.5) {
        random_graphic(&mut rng, &labels)
    } else {
        random_linear(&mut rng, GroundSet::new(labels.clone())?)
    };
    let mut positions: Vec<usize> = (0..total).collect();
    positions.shuffle(&mut rng);
    let port_set = Subset::from_positions(positions[..ports].iter().copied());
    let p = Perspective::from_major(&major, port_set)?;
    let ground = GroundSet::numbered(n)?;
    Perspective::new(p.m().relabel(ground.clone())?, p.m_prime().relabel(ground)?)
}
