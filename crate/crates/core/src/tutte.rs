//! Tutte polynomial expansions of matroid perspectives.
//!
//! A plain matroid is handled as its identity perspective `M → M`, for
//! which `rcd ≡ 0` and every expansion below collapses to the classical
//! 2-variable one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::activity::ActivityProfile;
use crate::error::{Error, Result};
use crate::mpoly::{bindings, integer, Polynomial, Var};
use crate::perspective::Perspective;
use crate::subset::{all_subsets, Subset};

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `x^a u^b y^c v^d z^e`.
fn mono(a: usize, b: usize, c: usize, d: usize, e: usize) -> Polynomial {
    Polynomial::term(integer(1), [a as u32, b as u32, c as u32, d as u32, e as u32])
}

/// Corank–nullity expansion, computed from the two rank functions alone:
/// `Σ (x-1)^{cr'(A)} (y-1)^{nl(A)} z^{rcd(A)}`.
pub fn tutte_corank_nullity(p: &Perspective) -> Polynomial {
    let (m, mp) = (p.m(), p.m_prime());
    let mut counts: BTreeMap<(usize, usize, usize), i64> = BTreeMap::new();
    for a in all_subsets(p.len()) {
        let key = (mp.corank(a), m.nullity(a), p.rcd(a));
        *counts.entry(key).or_default() += 1;
    }
    let xm1 = &Polynomial::var(Var::X) - &Polynomial::one();
    let ym1 = &Polynomial::var(Var::Y) - &Polynomial::one();
    counts
        .into_iter()
        .map(|((cr, nl, rcd), n)| {
            let t = &(&xm1.pow(cr as u32) * &ym1.pow(nl as u32)) * &mono(0, 0, 0, 0, rcd);
            t.scale(&integer(n))
        })
        .sum()
}

/// Activity expansion over independent/spanning sets:
/// `Σ x^{ι'(B)} y^{ε(B)} z^{rcd(B)}`.
pub fn tutte_indspan(p: &Perspective) -> Polynomial {
    indspan_summands(p).into_iter().map(|s| s.monomial).sum()
}

/// The summands of [`tutte_indspan`], one per witness in colex order.
pub fn indspan_summands(p: &Perspective) -> Vec<ExpansionSummand> {
    p.independent_spanning()
        .iter()
        .map(|&b| {
            let q = p.profile(b);
            ExpansionSummand {
                subset: b,
                monomial: mono(q.iota_prime, 0, q.eps, 0, q.rcd),
            }
        })
        .collect()
}

/// Which two statistics a derivative generating function constrains. The
/// other two supply the exponents of `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivativeVariant {
    /// `cr' = p, nl = q`; monomial `x^ι' y^ε`.
    CrNl,
    /// `ι' = p, nl = q`; monomial `x^cr' y^ε`.
    INl,
    /// `cr' = p, ε = q`; monomial `x^ι' y^nl`.
    CrE,
    /// `ι' = p, ε = q`; monomial `x^cr' y^nl`.
    IE,
}

impl DerivativeVariant {
    pub const ALL: [DerivativeVariant; 4] = [
        DerivativeVariant::CrNl,
        DerivativeVariant::INl,
        DerivativeVariant::CrE,
        DerivativeVariant::IE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DerivativeVariant::CrNl => "cr-nl",
            DerivativeVariant::INl => "i-nl",
            DerivativeVariant::CrE => "cr-e",
            DerivativeVariant::IE => "i-e",
        }
    }

    /// `(constrained x-stat, constrained y-stat, x exponent, y exponent)`.
    fn split(self, q: &ActivityProfile) -> (usize, usize, usize, usize) {
        match self {
            DerivativeVariant::CrNl => (q.cr_prime, q.nl, q.iota_prime, q.eps),
            DerivativeVariant::INl => (q.iota_prime, q.nl, q.cr_prime, q.eps),
            DerivativeVariant::CrE => (q.cr_prime, q.eps, q.iota_prime, q.nl),
            DerivativeVariant::IE => (q.iota_prime, q.eps, q.cr_prime, q.nl),
        }
    }
}

impl fmt::Display for DerivativeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DerivativeVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DerivativeVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownVariant(s.to_string()))
    }
}

/// Subsets contributing to the `(dp, dq)` cell of `variant`, with their
/// unscaled monomials.
pub fn derivative_summands(
    p: &Perspective,
    dp: usize,
    dq: usize,
    variant: DerivativeVariant,
) -> Vec<ExpansionSummand> {
    p.profiles()
        .iter()
        .filter_map(|q| {
            let (cx, cy, ex, ey) = variant.split(q);
            (cx == dp && cy == dq).then(|| ExpansionSummand {
                subset: q.subset,
                monomial: mono(ex, 0, ey, 0, q.rcd),
            })
        })
        .collect()
}

/// `∂^{dp+dq} t / ∂x^dp ∂y^dq` as `dp! dq!` times a sum over subsets.
pub fn derivative_gf(p: &Perspective, dp: usize, dq: usize, variant: DerivativeVariant) -> Polynomial {
    let sum: Polynomial = derivative_summands(p, dp, dq, variant)
        .into_iter()
        .map(|s| s.monomial)
        .sum();
    sum.scale(&integer(factorial(dp) * factorial(dq)))
}

/// `d^dp/dx^dp t(x, x, z)` as `dp!` times a sum over subsets with
/// `cr' + nl = dp`.
pub fn diagonal_derivative_gf(p: &Perspective, dp: usize) -> Polynomial {
    let sum: Polynomial = p
        .profiles()
        .iter()
        .filter(|q| q.cr_prime + q.nl == dp)
        .map(|q| mono(q.iota_prime + q.eps, 0, 0, 0, q.rcd))
        .sum();
    sum.scale(&integer(factorial(dp)))
}

/// Per-subset monomials `x^ι' u^cr' y^ε v^nl z^rcd`, one per subset in
/// bitmask order.
pub fn five_var_summands(p: &Perspective) -> Vec<ExpansionSummand> {
    p.profiles()
        .iter()
        .map(|q| ExpansionSummand {
            subset: q.subset,
            monomial: mono(q.iota_prime, q.cr_prime, q.eps, q.nl, q.rcd),
        })
        .collect()
}

/// `t(x+u, y+v, z)` as a sum of one monomial per subset.
pub fn five_var(p: &Perspective) -> Polynomial {
    five_var_summands(p).into_iter().map(|s| s.monomial).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F1,
    F2,
    F3,
    F3b,
    F3c,
    F3d,
    F3e,
    F4,
    F5,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F3b,
        Family::F3c,
        Family::F3d,
        Family::F3e,
        Family::F4,
        Family::F5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::F1 => "1",
            Family::F2 => "2",
            Family::F3 => "3",
            Family::F3b => "3b",
            Family::F3c => "3c",
            Family::F3d => "3d",
            Family::F3e => "3e",
            Family::F4 => "4",
            Family::F5 => "5",
        }
    }

    fn raw_symbols(self) -> &'static [[&'static str; 4]] {
        match self {
            Family::F1 => &[
                ["x-1", "1", "y-1", "1"],
                ["x-1", "1", "1", "y-1"],
                ["1", "x-1", "y-1", "1"],
                ["1", "x-1", "1", "y-1"],
            ],
            Family::F2 => &[
                ["0", "x", "0", "y"],
                ["0", "x", "y", "0"],
                ["x", "0", "0", "y"],
                ["x", "0", "y", "0"],
            ],
            Family::F3 => &[["x/2", "x/2", "y/2", "y/2"]],
            Family::F3b => &[["x/2", "x/2", "y-1", "1"], ["x/2", "x/2", "1", "y-1"]],
            Family::F3c => &[["x/2", "x/2", "y", "0"], ["x/2", "x/2", "0", "y"]],
            Family::F3d => &[["x-1", "1", "y/2", "y/2"], ["1", "x-1", "y/2", "y/2"]],
            Family::F3e => &[["x", "0", "y/2", "y/2"], ["0", "x", "y/2", "y/2"]],
            Family::F4 => &[
                ["0", "x", "y-1", "1"],
                ["0", "x", "1", "y-1"],
                ["x", "0", "y-1", "1"],
                ["x", "0", "1", "y-1"],
            ],
            Family::F5 => &[
                ["x-1", "1", "0", "y"],
                ["1", "x-1", "0", "y"],
                ["x-1", "1", "y", "0"],
                ["1", "x-1", "y", "0"],
            ],
        }
    }

    pub fn symbols(self) -> Vec<SpecializationSymbol> {
        self.raw_symbols()
            .iter()
            .map(|parts| SpecializationSymbol::new(self, *parts).expect("built-in symbols parse"))
            .collect()
    }

    /// The symbol whose per-subset summands define the family's column.
    pub fn lead_symbol(self) -> SpecializationSymbol {
        SpecializationSymbol::new(self, self.raw_symbols()[0]).expect("built-in symbols parse")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        Family::ALL
            .into_iter()
            .find(|f| f.name() == t)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `[[bx, bu, by, bv]]`: values for `x, u, y, v` in the per-subset
/// monomial `x^cr' u^ι' y^nl v^ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationSymbol {
    pub label: String,
    pub family: Family,
    pub bindings: [Polynomial; 4],
}

impl SpecializationSymbol {
    /// Parts may use `x/2` and `y/2` as shorthand for halves.
    pub fn new(family: Family, parts: [&str; 4]) -> Result<SpecializationSymbol> {
        let parse = |s: &str| {
            s.replace("x/2", "1/2*x")
                .replace("y/2", "1/2*y")
                .parse::<Polynomial>()
        };
        Ok(SpecializationSymbol {
            label: format!("[[{}]]", parts.join(",")),
            family,
            bindings: [parse(parts[0])?, parse(parts[1])?, parse(parts[2])?, parse(parts[3])?],
        })
    }

    /// `bx^cr' bu^ι' by^nl bv^ε z^rcd`.
    pub fn summand(&self, q: &ActivityProfile) -> Polynomial {
        let [bx, bu, by, bv] = &self.bindings;
        let prod = &(&bx.pow(q.cr_prime as u32) * &bu.pow(q.iota_prime as u32))
            * &(&by.pow(q.nl as u32) * &bv.pow(q.eps as u32));
        &prod * &mono(0, 0, 0, 0, q.rcd)
    }
}

impl fmt::Display for SpecializationSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// All 25 symbols, grouped by family.
pub fn all_symbols() -> Vec<SpecializationSymbol> {
    Family::ALL.into_iter().flat_map(Family::symbols).collect()
}

/// Substitute a symbol's bindings into [`five_var`].
pub fn specialize_symbol(p: &Perspective, sym: &SpecializationSymbol) -> Polynomial {
    specialize_five_var(&five_var(p), sym)
}

/// Substitute a symbol's bindings into an already computed [`five_var`].
pub fn specialize_five_var(five: &Polynomial, sym: &SpecializationSymbol) -> Polynomial {
    let [bx, bu, by, bv] = sym.bindings.clone();
    five.substitute(&bindings([(Var::X, bx), (Var::U, bu), (Var::Y, by), (Var::V, bv)]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSummand {
    pub subset: Subset,
    pub monomial: Polynomial,
}

/// Nonzero per-subset summands of `sym`, in bitmask order.
pub fn symbol_summands(p: &Perspective, sym: &SpecializationSymbol) -> Vec<ExpansionSummand> {
    // many subsets share one activity profile
    let mut seen: BTreeMap<[usize; 5], Polynomial> = BTreeMap::new();
    p.profiles()
        .iter()
        .filter_map(|q| {
            let key = [q.cr_prime, q.iota_prime, q.nl, q.eps, q.rcd];
            let monomial = seen.entry(key).or_insert_with(|| sym.summand(q)).clone();
            (!monomial.is_zero()).then_some(ExpansionSummand {
                subset: q.subset,
                monomial,
            })
        })
        .collect()
}

/// Per-subset summands of a family and their total.
pub fn expansion_family(p: &Perspective, family: Family) -> (Vec<ExpansionSummand>, Polynomial) {
    let summands = symbol_summands(p, &family.lead_symbol());
    let total: Polynomial = summands.iter().map(|s| s.monomial.clone()).sum();
    assert!(total.is_integral(), "family {family} total has a fractional coefficient");
    (summands, total)
}

/// Evaluate `t` at `(x, y, z)`; mainly a convenience for callers.
pub fn evaluate(t: &Polynomial, x: i64, y: i64, z: i64) -> Result<num_bigint::BigInt> {
    let point = [(Var::X, integer(x)), (Var::Y, integer(y)), (Var::Z, integer(z))]
        .into_iter()
        .collect();
    let v = t.evaluate(&point)?;
    debug_assert!(v.denom().is_one());
    Ok(v.to_integer())
}
