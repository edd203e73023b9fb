//! Brute-force lattice oracle, independent of the engine's code paths.
//!
//! Everything here is deliberately naive: dense product arithmetic over an
//! explicit monomial table, plain integer row reduction for lattice spans,
//! and a textbook gcd-pivot Smith reduction for the quotient factors. The
//! only thing shared with the engine is the case data itself.

use grflag::liedata::GroupCase;
use std::collections::BTreeMap;

pub struct OracleInput {
    pub truncs: Vec<u32>,
    /// generator -> (weight, dense coefficient vector over the monomial table)
    pub gens: Vec<(u32, Vec<i128>)>,
    pub mono_degrees: Vec<u32>,
    pub index_of: BTreeMap<Vec<u32>, usize>,
    pub monos: Vec<Vec<u32>>,
}

pub fn oracle_input(case: &GroupCase) -> OracleInput {
    let truncs: Vec<u32> = case.py.vars.iter().map(|v| v.trunc.unwrap()).collect();
    let mut monos: Vec<Vec<u32>> = vec![vec![]];
    for &t in &truncs {
        let mut next = Vec::new();
        for m in &monos {
            for e in 0..t {
                let mut m2 = m.clone();
                m2.push(e);
                next.push(m2);
            }
        }
        monos = next;
    }
    monos.sort();
    let index_of: BTreeMap<Vec<u32>, usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let degs: Vec<u32> = case.py.vars.iter().map(|v| v.chow_degree).collect();
    let mono_degrees: Vec<u32> = monos
        .iter()
        .map(|m| m.iter().zip(&degs).map(|(e, d)| e * d).sum())
        .collect();
    let mut gens = Vec::new();
    for b in &case.b_models {
        let mut v = vec![0i128; monos.len()];
        for (m, c) in b.value.terms() {
            v[index_of[m]] = *c;
        }
        gens.push((b.weight, v));
    }
    OracleInput {
        truncs,
        gens,
        mono_degrees,
        index_of,
        monos,
    }
}

fn dense_mul(inp: &OracleInput, a: &[i128], b: &[i128]) -> Vec<i128> {
    let n = inp.monos.len();
    let mut out = vec![0i128; n];
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if b[j] == 0 {
                continue;
            }
            let m: Vec<u32> = inp.monos[i]
                .iter()
                .zip(&inp.monos[j])
                .map(|(x, y)| x + y)
                .collect();
            if m.iter().zip(&inp.truncs).all(|(e, t)| e < t) {
                out[inp.index_of[&m]] += a[i] * b[j];
            }
        }
    }
    out
}

/// All nonzero products (weight, dense value), recomputed from scratch per
/// multiset of generator indices.
pub fn oracle_products(inp: &OracleInput) -> Vec<(u32, Vec<i128>)> {
    let n = inp.monos.len();
    let top: u32 = *inp.mono_degrees.iter().max().unwrap();
    let mut out = Vec::new();
    // multisets as nondecreasing index sequences, grown breadth-first
    let mut frontier: Vec<(usize, Vec<usize>)> = vec![(0, vec![])];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (start, word) in &frontier {
            for g in *start..inp.gens.len() {
                let mut w2 = word.clone();
                w2.push(g);
                // recompute the product from scratch (no sharing with the
                // engine's incremental enumeration)
                let mut v = vec![0i128; n];
                v[inp.index_of[&vec![0; inp.truncs.len()]]] = 1;
                let mut mindeg_sum = 0u32;
                for &k in &w2 {
                    v = dense_mul(inp, &v, &inp.gens[k].1);
                    let md = inp
                        .gens[k]
                        .1
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, _)| inp.mono_degrees[i])
                        .min()
                        .unwrap();
                    mindeg_sum += md;
                }
                if mindeg_sum > top || v.iter().all(|&c| c == 0) {
                    continue;
                }
                let weight = w2.iter().map(|&k| inp.gens[k].0).sum();
                out.push((weight, v.clone()));
                next.push((g, w2));
            }
        }
        frontier = next;
    }
    out
}

/// Naive integer span: repeated gcd-style row reduction, column by column.
fn naive_span(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut work: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    if work.is_empty() {
        return Vec::new();
    }
    let ncols = work[0].len();
    let mut basis = Vec::new();
    for col in 0..ncols {
        loop {
            let mut nz: Vec<usize> = (0..work.len()).filter(|&i| work[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| work[i][col].unsigned_abs());
            let p = nz[0];
            for &i in &nz[1..] {
                let q = work[i][col] / work[p][col];
                for c in 0..ncols {
                    work[i][c] -= q * work[p][c];
                }
            }
            work.retain(|r| r.iter().any(|&x| x != 0));
        }
        if let Some(i) = (0..work.len()).find(|&i| work[i][col] != 0) {
            let mut row = work.remove(i);
            if row[col] < 0 {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
            basis.push(row);
        }
    }
    basis
}

/// Textbook Smith reduction of a relation matrix, factors only.
fn naive_snf(mat: &[Vec<i128>]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = mat.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let (mut r0, mut c0) = (0usize, 0usize);
    while r0 < rows && c0 < cols {
        let mut best: Option<(usize, usize)> = None;
        for i in r0..rows {
            for j in c0..cols {
                if m[i][j] != 0
                    && best.map_or(true, |(bi, bj)| m[i][j].unsigned_abs() < m[bi][bj].unsigned_abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(r0, bi);
        for row in m.iter_mut() {
            row.swap(c0, bj);
        }
        let mut done = false;
        while !done {
            done = true;
            for i in r0 + 1..rows {
                if m[i][c0] != 0 {
                    let q = m[i][c0] / m[r0][c0];
                    for j in c0..cols {
                        m[i][j] -= q * m[r0][j];
                    }
                    if m[i][c0] != 0 {
                        m.swap(r0, i);
                        done = false;
                    }
                }
            }
            for j in c0 + 1..cols {
                if m[r0][j] != 0 {
                    let q = m[r0][j] / m[r0][c0];
                    for i in r0..rows {
                        m[i][j] -= q * m[i][c0];
                    }
                    if m[r0][j] != 0 {
                        for i in r0..rows {
                            let t = m[i][c0];
                            m[i][c0] = m[i][j];
                            m[i][j] = t;
                        }
                        done = false;
                    }
                }
            }
        }
        factors.push(m[r0][c0].abs());
        r0 += 1;
        c0 += 1;
    }
    // divisibility fixup by gcd/lcm bubbling
    let gcd = |a: i128, b: i128| {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (a, b) = (factors[i], factors[i + 1]);
            if a != 0 && b != 0 && b % a != 0 {
                let g = gcd(a, b);
                factors[i] = g;
                factors[i + 1] = a / g * b;
                changed = true;
            }
        }
    }
    factors
}

/// Per-weight invariant factors of the weighted product filtration, computed
/// entirely with this module's naive kernels. Factor lists are sorted with
/// torsion ascending, then zeros (one per free summand); trivial factors are
/// dropped.
pub fn oracle_gr(case: &GroupCase) -> BTreeMap<u32, Vec<i128>> {
    let inp = oracle_input(case);
    let products = oracle_products(&inp);
    let n = inp.monos.len();
    let maxw = products.iter().map(|p| p.0).max().unwrap_or(0);
    let mut levels: Vec<Vec<Vec<i128>>> = Vec::new();
    for m in 0..=maxw + 1 {
        if m == 0 {
            levels.push(
                (0..n)
                    .map(|i| {
                        let mut r = vec![0i128; n];
                        r[i] = 1;
                        r
                    })
                    .collect(),
            );
        } else {
            let rows: Vec<Vec<i128>> = products
                .iter()
                .filter(|(w, _)| *w >= m)
                .map(|(_, v)| v.clone())
                .collect();
            levels.push(naive_span(&rows));
        }
    }
    let mut out = BTreeMap::new();
    for m in 0..=maxw {
        let sup = &levels[m as usize];
        let sub = &levels[m as usize + 1];
        if sup.is_empty() {
            continue;
        }
        // relation matrix: coordinates of sub rows in the sup basis
        let mut rel: Vec<Vec<i128>> = Vec::new();
        for row in sub {
            let mut v = row.clone();
            let mut coords = Vec::new();
            for b in sup {
                let pc = b.iter().position(|&x| x != 0).unwrap();
                assert_eq!(v[pc] % b[pc], 0, "oracle: sub not inside sup");
                let q = v[pc] / b[pc];
                coords.push(q);
                for (a, x) in v.iter_mut().zip(b) {
                    *a -= q * x;
                }
            }
            assert!(v.iter().all(|&x| x == 0), "oracle: sub not inside sup");
            rel.push(coords);
        }
        if rel.is_empty() {
            rel.push(vec![0; sup.len()]);
        }
        let fs = naive_snf(&rel);
        let rank = fs.iter().filter(|&&d| d != 0).count();
        let mut factors: Vec<i128> = fs
            .iter()
            .copied()
            .filter(|&d| d != 0 && d != 1)
            .collect();
        factors.sort_unstable();
        for _ in 0..sup.len() - rank {
            factors.push(0);
        }
        if !factors.is_empty() {
            out.insert(m, factors);
        }
    }
    out
}
