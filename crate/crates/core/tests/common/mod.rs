//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into `tutte_core`: ranks come from union-find or
//! from explicit circuit lists, activities are read straight off their
//! definitions, and polynomials are integer coefficient maps.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub mod tables;

pub type Mask = u32;

pub fn popcount(a: Mask) -> usize {
    a.count_ones() as usize
}

pub fn full(n: usize) -> Mask {
    (1u32 << n) - 1
}

/// Positions of the digits of `s` under the labelling 1, 2, 3, ...
pub fn mask(s: &str) -> Mask {
    s.chars()
        .map(|c| 1u32 << (c.to_digit(10).expect("digit label") - 1))
        .fold(0, |a, b| a | b)
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn min_elem(a: Mask) -> usize {
    a.trailing_zeros() as usize
}

/// A matroid as a bare rank table on `n` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub n: usize,
    pub rank: Vec<usize>,
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

impl Oracle {
    /// Cycle matroid of a multigraph given as `(tail, head)` pairs.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Oracle {
        let n = edges.len();
        let rank = (0..1u32 << n)
            .map(|a| {
                let mut parent: Vec<usize> = (0..vertices).collect();
                let mut r = 0;
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if a >> i & 1 == 1 {
                        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                        if ru != rv {
                            parent[ru] = rv;
                            r += 1;
                        }
                    }
                }
                r
            })
            .collect();
        Oracle { n, rank }
    }

    /// Matroid whose dependent sets are exactly the supersets of `circuits`.
    pub fn from_circuits(n: usize, circuits: &[Mask]) -> Oracle {
        let independent = |a: Mask| circuits.iter().all(|&c| !is_subset(c, a));
        let rank = (0..1u32 << n)
            .map(|a| {
                let mut best = 0;
                let mut s = a;
                loop {
                    if independent(s) {
                        best = best.max(popcount(s));
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & a;
                }
                best
            })
            .collect();
        Oracle { n, rank }
    }

    pub fn r(&self) -> usize {
        self.rank[full(self.n) as usize]
    }

    pub fn rk(&self, a: Mask) -> usize {
        self.rank[a as usize]
    }

    /// Deletion and contraction of `ports`, which must be the top positions.
    pub fn split_ports(&self, ports: usize) -> (Oracle, Oracle) {
        let n = self.n - ports;
        let port_mask = full(self.n) & !full(n);
        let base = self.rk(port_mask);
        let deleted = (0..1u32 << n).map(|a| self.rk(a)).collect();
        let contracted = (0..1u32 << n).map(|a| self.rk(a | port_mask) - base).collect();
        (Oracle { n, rank: deleted }, Oracle { n, rank: contracted })
    }

    pub fn circuits(&self) -> Vec<Mask> {
        (1..1u32 << self.n)
            .filter(|&a| {
                self.rk(a) < popcount(a)
                    && (0..self.n).all(|e| a >> e & 1 == 0 || self.rk(a & !(1 << e)) == popcount(a) - 1)
            })
            .collect()
    }

    /// Minimal sets whose complement is not spanning.
    pub fn cocircuits(&self) -> Vec<Mask> {
        let all = full(self.n);
        let r = self.r();
        (1..1u32 << self.n)
            .filter(|&d| {
                self.rk(all & !d) < r
                    && (0..self.n).all(|e| d >> e & 1 == 0 || self.rk(all & !(d & !(1 << e))) == r)
            })
            .collect()
    }

    pub fn bases(&self) -> Vec<Mask> {
        (0..1u32 << self.n)
            .filter(|&a| popcount(a) == self.r() && self.rk(a) == self.r())
            .collect()
    }
}

/// Activity sets and counts of one subset for `m → mp`, by definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub int: Mask,
    pub p: Mask,
    pub ext: Mask,
    pub q: Mask,
    pub iota: usize,
    pub cr: usize,
    pub eps: usize,
    pub nl: usize,
    pub rcd: usize,
}

pub fn stats(m: &Oracle, mp: &Oracle, a: Mask) -> Stats {
    let n = m.n;
    let all = full(n);
    let circuits = m.circuits();
    let cocircuits = mp.cocircuits();
    let mut st = Stats { int: 0, p: 0, ext: 0, q: 0, iota: 0, cr: 0, eps: 0, nl: 0, rcd: 0 };
    for e in 0..n {
        let bit = 1u32 << e;
        let has = a & bit != 0;
        let circ = |pool: Mask| circuits.iter().any(|&c| c & bit != 0 && min_elem(c) == e && is_subset(c, pool));
        let cocirc = |pool: Mask| cocircuits.iter().any(|&d| d & bit != 0 && min_elem(d) == e && is_subset(d, pool));
        if !has && circ(a | bit) {
            st.ext |= bit;
        }
        if has && circ(a) {
            st.q |= bit;
        }
        if has && cocirc((all & !a) | bit) {
            st.int |= bit;
        }
        if !has && cocirc(all & !a) {
            st.p |= bit;
        }
    }
    st.iota = popcount(st.int);
    st.cr = popcount(st.p);
    st.eps = popcount(st.ext);
    st.nl = popcount(st.q);
    st.rcd = (m.r() + mp.rk(a)) - (mp.r() + m.rk(a));
    st
}

/// Integer polynomial in `x, u, y, v, z`.
pub type IPoly = BTreeMap<[u32; 5], i64>;

pub fn ip_add(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(*k).or_default() += v;
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn ip_mul(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = IPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k = [ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3], ka[4] + kb[4]];
            *out.entry(k).or_default() += va * vb;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn ip_mono(e: [u32; 5]) -> IPoly {
    [(e, 1)].into_iter().collect()
}

/// `(var - 1)^k` for `var` at index `i`.
pub fn ip_shifted_pow(i: usize, k: usize) -> IPoly {
    let mut e = [0; 5];
    e[i] = 1;
    let base = ip_add(&ip_mono(e), &[([0; 5], -1)].into_iter().collect());
    (0..k).fold(ip_mono([0; 5]), |acc, _| ip_mul(&acc, &base))
}

/// Render with the library's term order so results compare as strings.
pub fn ip_to_string(p: &IPoly) -> String {
    let mut terms: Vec<(&[u32; 5], &i64)> = p.iter().collect();
    terms.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        db.cmp(&da).then(b.0.cmp(a.0))
    });
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = **c < 0;
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars: Vec<String> = "xuyvz"
            .chars()
            .zip(e.iter())
            .filter(|(_, k)| **k > 0)
            .map(|(c, k)| if *k == 1 { c.to_string() } else { format!("{c}^{k}") })
            .collect();
        if vars.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

/// Corank–nullity sum straight from two rank tables.
pub fn tutte3(m: &Oracle, mp: &Oracle) -> IPoly {
    let mut t = IPoly::new();
    for a in 0..1u32 << m.n {
        let cr = mp.r() - mp.rk(a);
        let nl = popcount(a) - m.rk(a);
        let rcd = (m.r() + mp.rk(a)) - (mp.r() + m.rk(a));
        let term = ip_mul(&ip_mul(&ip_shifted_pow(0, cr), &ip_shifted_pow(2, nl)), &ip_mono([0, 0, 0, 0, rcd as u32]));
        t = ip_add(&t, &term);
    }
    t
}

/// Tutte polynomial of a multigraph by deletion–contraction.
pub fn tutte_dc(vertices: usize, edges: &[(usize, usize)]) -> IPoly {
    fn connected(vertices: usize, edges: &[(usize, usize)], u: usize, v: usize) -> bool {
        let mut parent: Vec<usize> = (0..vertices).collect();
        for &(a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
    let Some((&(u, v), rest)) = edges.split_last() else {
        return ip_mono([0; 5]);
    };
    if u == v {
        return ip_mul(&ip_mono([0, 0, 1, 0, 0]), &tutte_dc(vertices, rest));
    }
    if !connected(vertices, rest, u, v) {
        let merged: Vec<(usize, usize)> = rest.iter().map(|&(a, b)| (if a == v { u } else { a }, if b == v { u } else { b })).collect();
        return ip_mul(&ip_mono([1, 0, 0, 0, 0]), &tutte_dc(vertices, &merged));
    }
    let merged: Vec<(usize, usize)> = rest.iter().map(|&(a, b)| (if a == v { u } else { a }, if b == v { u } else { b })).collect();
    ip_add(&tutte_dc(vertices, rest), &tutte_dc(vertices, &merged))
}

/// Doubled edge a–b, then b–c and a–c.
pub fn m1_graph() -> (usize, Vec<(usize, usize)>) {
    (3, vec![(0, 1), (0, 1), (1, 2), (0, 2)])
}

/// Triangle 1,2,3 with pendants 4 (at b) and 5 (at a); the last two edges
/// are the ports joining the pendant ends to c.
pub fn p2_major_graph() -> (usize, Vec<(usize, usize)>) {
    let (a, b, c, d, e) = (0, 1, 2, 3, 4);
    (5, vec![(a, b), (b, c), (a, c), (b, d), (a, e), (d, c), (e, c)])
}

pub fn p2_oracle() -> (Oracle, Oracle) {
    let (nv, edges) = p2_major_graph();
    Oracle::graphic(nv, &edges).split_ports(2)
}
