//! Table reproductions as header + rows of text cells.
//!
//! * 1 and 4: derivative cells, one row per `(p, q, subset)`, grouped by the
//!   Dawson interval containing the subset
//! * 2: activity sets and five-variable monomial per subset
//! * 3: activity counts and the per-subset summand of every family
//! * 5: activity counts, rank codrop and five-variable monomial per subset

use tutte_core::tutte::{self, DerivativeVariant, Family};
use tutte_core::{Perspective, Polynomial, Rational, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }
}

/// Subsets in row order: by size, then lexicographically.
fn row_order(p: &Perspective) -> Vec<Subset> {
    let mut v: Vec<Subset> = tutte_core::subset::all_subsets(p.len()).collect();
    v.sort_by(Subset::cmp_size_lex);
    v
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

pub fn derivative_table(p: &Perspective) -> Table {
    let g = p.ground();
    let mut table = Table::new(&["p", "q", "derivative", "witness", "bottom", "top", "subset", "summand"]);
    let max_p = p.m_prime().rank();
    let max_q = p.len() - p.m().rank();
    let mut orders: Vec<(usize, usize)> = (0..=max_p).flat_map(|a| (0..=max_q).map(move |b| (a, b))).collect();
    // t, ∂x, ∂y, ∂x², ∂x∂y, ∂y², …
    orders.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
    let mut intervals = p.dawson_intervals();
    intervals.sort_by_key(|i| i.witness);
    for (dp, dq) in orders {
        let cells = tutte::derivative_summands(p, dp, dq, DerivativeVariant::CrNl);
        if cells.is_empty() {
            continue;
        }
        let scale = Rational::new(1.into(), (factorial(dp) * factorial(dq)).into());
        let normalized = tutte::derivative_gf(p, dp, dq, DerivativeVariant::CrNl).scale(&scale);
        for i in &intervals {
            let mut inside: Vec<_> = cells.iter().filter(|c| i.contains(c.subset)).collect();
            inside.sort_by_key(|c| c.subset);
            for c in inside {
                table.rows.push(vec![
                    dp.to_string(),
                    dq.to_string(),
                    normalized.to_string(),
                    g.format(i.witness),
                    g.format(i.bottom),
                    g.format(i.top),
                    g.format(c.subset),
                    c.monomial.to_string(),
                ]);
            }
        }
    }
    table
}

pub fn activity_sets_table(p: &Perspective) -> Table {
    let g = p.ground();
    let five = tutte::five_var_summands(p);
    let mut table = Table::new(&["subset", "Int", "P", "Ext", "Q", "monomial"]);
    for a in row_order(p) {
        let q = p.profile(a);
        table.rows.push(vec![
            g.format(a),
            g.format(q.int_active),
            g.format(q.p_set),
            g.format(q.ext_active),
            g.format(q.q_set),
            five[a.bits() as usize].monomial.to_string(),
        ]);
    }
    table
}

pub fn family_table(p: &Perspective) -> Table {
    let g = p.ground();
    let mut header = vec!["subset", "iota_prime", "cr_prime", "eps", "nl"];
    let labels: Vec<String> = Family::ALL.iter().map(|f| format!("({f})")).collect();
    header.extend(labels.iter().map(String::as_str));
    let mut table = Table::new(&header);
    let columns: Vec<Vec<Option<Polynomial>>> = Family::ALL
        .iter()
        .map(|&f| {
            let mut col = vec![None; 1 << p.len()];
            for s in tutte::expansion_family(p, f).0 {
                col[s.subset.bits() as usize] = Some(s.monomial);
            }
            col
        })
        .collect();
    for a in row_order(p) {
        let q = p.profile(a);
        let mut row = vec![
            g.format(a),
            q.iota_prime.to_string(),
            q.cr_prime.to_string(),
            q.eps.to_string(),
            q.nl.to_string(),
        ];
        row.extend(
            columns
                .iter()
                .map(|c| c[a.bits() as usize].as_ref().map(Polynomial::to_string).unwrap_or_default()),
        );
        table.rows.push(row);
    }
    table
}

pub fn activity_counts_table(p: &Perspective) -> Table {
    let g = p.ground();
    let five = tutte::five_var_summands(p);
    let mut table = Table::new(&["subset", "iota_prime", "cr_prime", "eps", "nl", "rcd", "monomial"]);
    for a in row_order(p) {
        let q = p.profile(a);
        table.rows.push(vec![
            g.format(a),
            q.iota_prime.to_string(),
            q.cr_prime.to_string(),
            q.eps.to_string(),
            q.nl.to_string(),
            q.rcd.to_string(),
            five[a.bits() as usize].monomial.to_string(),
        ]);
    }
    table
}

/// Table `which` (1 to 5) for `p`.
pub fn table(p: &Perspective, which: u8) -> Option<Table> {
    match which {
        1 | 4 => Some(derivative_table(p)),
        2 => Some(activity_sets_table(p)),
        3 => Some(family_table(p)),
        5 => Some(activity_counts_table(p)),
        _ => None,
    }
}
