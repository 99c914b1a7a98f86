//! Internal and external activities of arbitrary subsets.
//!
//! For a pair `M → M'` on one ordered ground set and a subset `A`:
//!
//! * `Ext_M(A)`: `e ∉ A` that is the smallest element of a circuit of `M`
//!   inside `A ∪ {e}`;
//! * `Q_M(A)`: `e ∈ A` that is the smallest element of a circuit of `M`
//!   inside `A`;
//! * `Int_M'(A)`: `e ∈ A` that is the smallest element of a cocircuit of
//!   `M'` inside `(E \ A) ∪ {e}`;
//! * `P_M'(A)`: `e ∉ A` that is the smallest element of a cocircuit of `M'`
//!   inside `E \ A`.
//!
//! Each set is computed by a direct scan of the cached (co)circuit list.

use crate::error::{Error, Result};
use crate::matroid::{CircuitKind, Matroid};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ActivityProfile {
    pub subset: Subset,
    /// `Int_M'(A)`
    pub int_active: Subset,
    /// `P_M'(A)`
    pub p_set: Subset,
    /// `Ext_M(A)`
    pub ext_active: Subset,
    /// `Q_M(A)`
    pub q_set: Subset,
    pub iota_prime: usize,
    pub cr_prime: usize,
    pub eps: usize,
    pub nl: usize,
    /// Rank codrop `(r(M) - r(M')) - (r_M(A) - r_M'(A))`.
    pub rcd: usize,
}

/// Smallest elements of the sets in `family` that lie inside `pool`.
fn minima_inside(family: &[Subset], pool: Subset) -> Subset {
    family
        .iter()
        .filter(|c| c.is_subset_of(pool))
        .filter_map(|c| c.min_element())
        .fold(Subset::EMPTY, Subset::with)
}

/// Elements `e ∉ pool` that are smallest in some member of `family`
/// contained in `pool ∪ {e}`.
fn minima_touching(family: &[Subset], pool: Subset) -> Subset {
    family
        .iter()
        .filter_map(|c| {
            let e = c.min_element()?;
            (!pool.contains(e) && c.without(e).is_subset_of(pool)).then_some(e)
        })
        .fold(Subset::EMPTY, Subset::with)
}

pub fn ext_active(m: &Matroid, a: Subset) -> Subset {
    minima_touching(m.circuits(), a)
}

pub fn q_set(m: &Matroid, a: Subset) -> Subset {
    minima_inside(m.circuits(), a)
}

pub fn int_active(m: &Matroid, a: Subset) -> Subset {
    let outside = a.complement(m.len());
    // e ∈ A smallest in a cocircuit D with D - e ⊆ E \ A
    m.cocircuits()
        .iter()
        .filter_map(|d| {
            let e = d.min_element()?;
            (a.contains(e) && d.without(e).is_subset_of(outside)).then_some(e)
        })
        .fold(Subset::EMPTY, Subset::with)
}

pub fn p_set(m: &Matroid, a: Subset) -> Subset {
    minima_inside(m.cocircuits(), a.complement(m.len()))
}

/// `Act_M(A)`: every `e ∈ E` smallest in some circuit of `M` inside `A ∪ {e}`.
pub fn act(m: &Matroid, a: Subset) -> Subset {
    Subset::from_positions((0..m.len()).filter(|&e| {
        m.circuits()
            .iter()
            .any(|c| c.min_element() == Some(e) && c.is_subset_of(a.with(e)))
    }))
}

/// Rank codrop of `a`, or `None` when it would be negative.
pub fn rank_codrop(m: &Matroid, m_prime: &Matroid, a: Subset) -> Option<usize> {
    let value = (m.rank() as i64 - m_prime.rank() as i64)
        - (m.rank_of(a) as i64 - m_prime.rank_of(a) as i64);
    usize::try_from(value).ok()
}

pub(crate) fn profile_of(m: &Matroid, m_prime: &Matroid, a: Subset, rcd: usize) -> ActivityProfile {
    let int_active = int_active(m_prime, a);
    let p_set = p_set(m_prime, a);
    let ext_active = ext_active(m, a);
    let q_set = q_set(m, a);
    ActivityProfile {
        subset: a,
        int_active,
        p_set,
        ext_active,
        q_set,
        iota_prime: int_active.len(),
        cr_prime: p_set.len(),
        eps: ext_active.len(),
        nl: q_set.len(),
        rcd,
    }
}

/// Activity profile of `a` for the pair `m → m_prime`. For a plain matroid
/// pass the same matroid twice.
pub fn active_sets(m: &Matroid, m_prime: &Matroid, a: Subset) -> Result<ActivityProfile> {
    if m.ground() != m_prime.ground() {
        return Err(Error::GroundMismatch);
    }
    m.ground().check(a)?;
    let rcd = rank_codrop(m, m_prime, a)
        .ok_or_else(|| Error::NegativeRankCodrop(m.ground().format(a)))?;
    Ok(profile_of(m, m_prime, a, rcd))
}

/// The unique circuit `C` with smallest element `e` and
/// `C ⊆ (A \ Q_M(A)) ∪ {e}`, for `e ∈ Ext_M(A) ∪ Q_M(A)`.
pub fn unique_witness_circuit(m: &Matroid, a: Subset, e: usize) -> Result<Subset> {
    m.ground().check(a)?;
    let fmt_e = || m.ground().label(e).to_string();
    if e >= m.len() {
        return Err(Error::ForeignElement(format!("{{{}}}", e)));
    }
    let q = q_set(m, a);
    if !ext_active(m, a).union(q).contains(e) {
        return Err(Error::NotActive {
            element: fmt_e(),
            subset: m.ground().format(a),
        });
    }
    let pool = a.difference(q).with(e);
    let found: Vec<Subset> = m
        .circuits()
        .iter()
        .copied()
        .filter(|c| c.min_element() == Some(e) && c.is_subset_of(pool))
        .collect();
    match found.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::WitnessNotUnique {
            element: fmt_e(),
            subset: m.ground().format(a),
            count: found.len(),
        }),
    }
}

/// Classical internal and external activity of a basis, read off its
/// fundamental cocircuits and circuits.
pub fn basis_activities(m: &Matroid, b: Subset) -> Result<(usize, usize)> {
    m.ground().check(b)?;
    if !m.is_basis(b) {
        return Err(Error::NotABasis(m.ground().format(b)));
    }
    let mut iota = 0;
    let mut eps = 0;
    for e in 0..m.len() {
        let kind = if b.contains(e) {
            CircuitKind::Cocircuit
        } else {
            CircuitKind::Circuit
        };
        if m.fundamental(b, e, kind)?.min_element() == Some(e) {
            match kind {
                CircuitKind::Cocircuit => iota += 1,
                CircuitKind::Circuit => eps += 1,
            }
        }
    }
    Ok((iota, eps))
}
