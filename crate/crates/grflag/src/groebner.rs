//! Groebner bases over prime fields and Hilbert series of homogeneous
//! quotients.
//!
//! Buchberger with the product and chain criteria, reduced bases, and a
//! numerator-recursion Hilbert series for the leading-term monomial ideal.
//! Mixed-characteristic ideals like `(2, c_1^2, ...)` are handled by reducing
//! mod p up front; every presentation checked here is stated mod p.

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::ring::{densepoly, HilbertSeries, RationalForm};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    /// Degree-reverse-lexicographic with the Chow grading; variable order is
    /// declaration order.
    Grevlex,
    /// Pure lexicographic (used to cross-check order independence).
    Lex,
}

/// The ambient polynomial ring over F_p with a weighted monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub labels: Vec<String>,
    pub weights: Vec<u32>,
    pub p: u64,
    pub order: OrderKind,
}

pub type Mono = Vec<u16>;

impl PolyRing {
    pub fn new(labels: Vec<String>, weights: Vec<u32>, p: u32, order: OrderKind) -> Result<Arc<Self>> {
        if !crate::ring::is_prime(p) {
            return Err(Error::Groebner(format!("{p} is not prime")));
        }
        if labels.len() != weights.len() {
            return Err(Error::Groebner("labels/weights length mismatch".into()));
        }
        Ok(Arc::new(PolyRing {
            labels,
            weights,
            p: p as u64,
            order,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.labels.len()
    }

    pub fn wdeg(&self, m: &Mono) -> u32 {
        m.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn cmp_mono(&self, a: &Mono, b: &Mono) -> Ordering {
        match self.order {
            OrderKind::Grevlex => {
                let (da, db) = (self.wdeg(a), self.wdeg(b));
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        // larger exponent in the last differing variable
                        // means smaller in grevlex
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_divides(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_div(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_lcm(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_coprime(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Sparse polynomial over F_p; terms sorted descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct FpPoly {
    ring: Arc<PolyRing>,
    terms: Vec<(Mono, u64)>,
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            self.ring.labels[i].clone()
                        } else {
                            format!("{}^{}", self.ring.labels[i], e)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else if *c == 1 {
                    mono.join("*")
                } else {
                    format!("{}*{}", c, mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FpPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        FpPoly {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn from_map(ring: &Arc<PolyRing>, map: BTreeMap<Mono, u64>) -> Self {
        let p = ring.p;
        let mut terms: Vec<(Mono, u64)> = map
            .into_iter()
            .map(|(m, c)| (m, c % p))
            .filter(|(_, c)| *c != 0)
            .collect();
        terms.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        FpPoly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, src: &str) -> Result<Self> {
        let vars: BTreeMap<String, usize> = ring
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let raw = parse_poly(src, &vars)?;
        let p = ring.p as i128;
        let mut map = BTreeMap::new();
        for (m, c) in raw {
            let mono: Mono = m.iter().map(|&e| e as u16).collect();
            let c = c.rem_euclid(p) as u64;
            if c != 0 {
                *map.entry(mono).or_insert(0) += c;
            }
        }
        Ok(Self::from_map(ring, map))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut m = vec![0u16; ring.nvars()];
        m[i] = 1;
        let mut map = BTreeMap::new();
        map.insert(m, 1);
        Self::from_map(ring, map)
    }

    pub fn constant(ring: &Arc<PolyRing>, c: u64) -> Self {
        let mut map = BTreeMap::new();
        map.insert(vec![0u16; ring.nvars()], c);
        Self::from_map(ring, map)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> Option<&(Mono, u64)> {
        self.terms.first()
    }

    pub fn terms(&self) -> &[(Mono, u64)] {
        &self.terms
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ds = self.terms.iter().map(|(m, _)| self.ring.wdeg(m));
        match ds.next() {
            None => true,
            Some(d) => ds.all(|x| x == d),
        }
    }

    pub fn wdeg(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| self.ring.wdeg(m))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.ring.p;
        let mut out: Vec<(Mono, u64)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = (self.terms[i].1 + other.terms[j].1) % p;
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        FpPoly {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.ring.p;
        let c = c % p;
        if c == 0 {
            return Self::zero(&self.ring);
        }
        FpPoly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c % p))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, c: u64) -> Self {
        let p = self.ring.p;
        let c = c % p;
        if c == 0 {
            return Self::zero(&self.ring);
        }
        FpPoly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mono_mul(mm, m), k * c % p))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.ring.p;
        self.add(&other.scale(p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map: BTreeMap<Mono, u64> = BTreeMap::new();
        let p = self.ring.p;
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *map.entry(mono_mul(ma, mb)).or_insert(0) += ca * cb % p;
            }
        }
        Self::from_map(&self.ring, map)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.ring, 1);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    fn monic(&self) -> Self {
        match self.lt() {
            None => self.clone(),
            Some((_, c)) => self.scale(mod_inv(*c, self.ring.p)),
        }
    }

    /// Substitute `subs[i]` for variable `i`.
    pub fn substitute(&self, subs: &[FpPoly]) -> Self {
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.ring, *c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&subs[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime; fast enough at these sizes
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// A reduced Groebner basis. Leading terms are pairwise non-divisible and
/// every tail is in normal form; `normal_form` against it is linear and
/// idempotent.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Arc<PolyRing>,
    pub polys: Vec<FpPoly>,
    /// When a degree cap was applied, `Some(cap)`: the basis is only valid
    /// for conclusions up to that weighted degree.
    pub capped_at: Option<u32>,
}

/// Full normal form of `f` against `basis`.
pub fn normal_form(f: &FpPoly, basis: &[FpPoly]) -> FpPoly {
    let ring = Arc::clone(f.ring());
    let p = ring.p;
    let mut rem = FpPoly::zero(&ring);
    let mut cur = f.clone();
    'outer: while let Some((m, c)) = cur.lt().cloned() {
        for g in basis {
            if let Some((gm, gc)) = g.lt() {
                if mono_divides(gm, &m) {
                    let q = mono_div(&m, gm);
                    let factor = c * mod_inv(*gc, p) % p;
                    cur = cur.sub(&g.mul_term(&q, factor));
                    continue 'outer;
                }
            }
        }
        // move the irreducible leading term to the remainder
        let mut head = FpPoly::zero(&ring);
        head.terms.push((m.clone(), c));
        rem = rem.add(&head);
        cur = cur.sub(&head);
    }
    rem
}

fn s_poly(f: &FpPoly, g: &FpPoly) -> FpPoly {
    let (fm, fc) = f.lt().unwrap();
    let (gm, gc) = g.lt().unwrap();
    let p = f.ring().p;
    let l = mono_lcm(fm, gm);
    let a = f.mul_term(&mono_div(&l, fm), mod_inv(*fc, p));
    let b = g.mul_term(&mono_div(&l, gm), mod_inv(*gc, p));
    a.sub(&b)
}

/// Buchberger's algorithm. Generators must be homogeneous (every presentation
/// in scope is); `degree_cap` discards S-pairs above the cap and marks the
/// result as partial.
pub fn buchberger(gens: &[FpPoly], degree_cap: Option<u32>) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::Groebner("empty generator list".into()));
    };
    let ring = Arc::clone(first.ring());
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::Groebner(format!("non-homogeneous generator: {g}")));
        }
    }
    let mut basis: Vec<FpPoly> = Vec::new();
    for g in gens {
        let g = normal_form(g, &basis);
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut capped = false;

    // pair queue keyed by lcm weighted degree (normal selection strategy)
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    let push_pairs = |pairs: &mut Vec<(u32, usize, usize)>, basis: &[FpPoly], j: usize| {
        for i in 0..j {
            let l = mono_lcm(&basis[i].lt().unwrap().0, &basis[j].lt().unwrap().0);
            pairs.push((ring.wdeg(&l), i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }

    while !pairs.is_empty() {
        let idx = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(d, i, j))| (d, j, i))
            .map(|(k, _)| k)
            .unwrap();
        let (d, i, j) = pairs.swap_remove(idx);
        if let Some(cap) = degree_cap {
            if d > cap {
                capped = true;
                continue;
            }
        }
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, mj) = (&fi.lt().unwrap().0, &fj.lt().unwrap().0);
        // product criterion
        if mono_coprime(mi, mj) {
            continue;
        }
        // chain criterion: some other basis element divides the lcm and both
        // its pairs with i and j are no longer queued
        let l = mono_lcm(mi, mj);
        let chained = basis.iter().enumerate().any(|(k, fk)| {
            k != i
                && k != j
                && mono_divides(&fk.lt().unwrap().0, &l)
                && !pairs.iter().any(|&(_, a, b)| {
                    (a == i.min(k) && b == i.max(k)) || (a == j.min(k) && b == j.max(k))
                })
        });
        if chained {
            continue;
        }
        let s = s_poly(fi, fj);
        let r = normal_form(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            push_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    // interreduce to the reduced basis
    let mut reduced: Vec<FpPoly> = Vec::new();
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        let mi = &basis[i].lt().unwrap().0;
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && mono_divides(&basis[j].lt().unwrap().0, mi)
                && (!mono_divides(mi, &basis[j].lt().unwrap().0) || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let survivors: Vec<FpPoly> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(f, _)| f.clone())
        .collect();
    for i in 0..survivors.len() {
        let others: Vec<FpPoly> = survivors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, f)| f.clone())
            .collect();
        let r = normal_form(&survivors[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| ring.cmp_mono(&a.lt().unwrap().0, &b.lt().unwrap().0));
    Ok(GroebnerBasis {
        ring,
        polys: reduced,
        capped_at: if capped { degree_cap } else { None },
    })
}

impl GroebnerBasis {
    pub fn normal_form(&self, f: &FpPoly) -> FpPoly {
        normal_form(f, &self.polys)
    }

    pub fn contains(&self, f: &FpPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.polys.iter().map(|f| f.lt().unwrap().0.clone()).collect()
    }
}

fn minimalize(gens: &mut Vec<Mono>) {
    gens.sort();
    gens.dedup();
    let snapshot = gens.clone();
    gens.retain(|m| {
        !snapshot
            .iter()
            .any(|g| g != m && mono_divides(g, m))
    });
}

/// Numerator of the Hilbert series of `R / (monomial ideal)` over the full
/// denominator `prod (1 - t^{w_i})`, by the colon-ideal recursion.
fn monomial_ideal_numerator(ring: &PolyRing, gens: &[Mono]) -> Vec<i64> {
    let mut gens = gens.to_vec();
    minimalize(&mut gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Vec::new(); // ideal contains 1
    }
    if gens.len() == 1 {
        return densepoly::sub(&[1], &densepoly::shift(&[1], ring.wdeg(&gens[0]) as usize));
    }
    let last = gens.pop().unwrap();
    let n_without = monomial_ideal_numerator(ring, &gens);
    let colon: Vec<Mono> = gens
        .iter()
        .map(|g| g.iter().zip(&last).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    let n_colon = monomial_ideal_numerator(ring, &colon);
    densepoly::sub(
        &n_without,
        &densepoly::shift(&n_colon, ring.wdeg(&last) as usize),
    )
}

/// Hilbert series of the quotient by the ideal with the given reduced basis.
///
/// Finite-dimensional quotients get a dense series; otherwise the rational
/// form over the remaining `(1 - t^d)` factors is returned.
pub fn quotient_hilbert_series(gb: &GroebnerBasis) -> Result<HilbertSeries> {
    let lms = gb.leading_monomials();
    let mut num = monomial_ideal_numerator(&gb.ring, &lms);
    let mut remaining: Vec<u32> = Vec::new();
    for &w in &gb.ring.weights {
        let den = densepoly::one_minus_td(w as usize);
        match densepoly::div_exact(&num, &den) {
            Some(q) => num = q,
            None => remaining.push(w),
        }
    }
    if remaining.is_empty() {
        let mut hs = HilbertSeries::from_coeffs(num.clone());
        if hs.coeffs.iter().any(|&c| c < 0) {
            return Err(Error::Groebner(
                "internal error: negative Hilbert coefficient".into(),
            ));
        }
        hs.rational = Some(RationalForm {
            numerator: num,
            denom_degrees: Vec::new(),
        });
        Ok(hs)
    } else {
        Ok(HilbertSeries {
            coeffs: Vec::new(),
            rational: Some(RationalForm {
                numerator: num,
                denom_degrees: remaining,
            }),
        })
    }
}

/// Complete-intersection test: the quotient series equals
/// `prod (1 - t^{deg g_i}) / prod (1 - t^{w_j})`.
///
/// Returns the verdict together with both series (actual, expected).
pub fn regular_sequence_check(gens: &[FpPoly]) -> Result<(bool, HilbertSeries, HilbertSeries)> {
    let Some(first) = gens.first() else {
        return Err(Error::Groebner("empty generator list".into()));
    };
    let ring = Arc::clone(first.ring());
    if gens.len() > ring.nvars() {
        return Ok((
            false,
            quotient_hilbert_series(&buchberger(gens, None)?)?,
            HilbertSeries::from_coeffs(Vec::new()),
        ));
    }
    let gb = buchberger(gens, None)?;
    let actual = quotient_hilbert_series(&gb)?;
    // expected CI numerator over the full denominator
    let mut num = vec![1i64];
    for g in gens {
        num = densepoly::mul(&num, &densepoly::one_minus_td(g.wdeg() as usize));
    }
    let mut remaining: Vec<u32> = Vec::new();
    for &w in &ring.weights {
        match densepoly::div_exact(&num, &densepoly::one_minus_td(w as usize)) {
            Some(q) => num = q,
            None => remaining.push(w),
        }
    }
    let expected = if remaining.is_empty() {
        HilbertSeries::from_coeffs(num)
    } else {
        HilbertSeries {
            coeffs: Vec::new(),
            rational: Some(RationalForm {
                numerator: num,
                denom_degrees: remaining,
            }),
        }
    };
    let ok = match (&actual.rational, &expected.rational) {
        _ if !actual.coeffs.is_empty() || !expected.coeffs.is_empty() => {
            actual.coeffs == expected.coeffs
        }
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    Ok((ok, actual, expected))
}

/// Elementary symmetric polynomial `e_k(t_1..t_n)` in the ring.
pub fn elementary_symmetric(ring: &Arc<PolyRing>, k: usize) -> FpPoly {
    let n = ring.nvars();
    let mut map: BTreeMap<Mono, u64> = BTreeMap::new();
    fn rec(map: &mut BTreeMap<Mono, u64>, start: usize, left: usize, n: usize, cur: &mut Vec<usize>) {
        if left == 0 {
            let mut m = vec![0u16; n];
            for &i in cur.iter() {
                m[i] = 1;
            }
            map.insert(m, 1);
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            rec(map, i + 1, left - 1, n, cur);
            cur.pop();
        }
    }
    if k == 0 {
        return FpPoly::constant(ring, 1);
    }
    if k > n {
        return FpPoly::zero(ring);
    }
    rec(&mut map, 0, k, n, &mut Vec::new());
    FpPoly::from_map(ring, map)
}

/// The Spin pullback `t_j -> c_1 + t_j` with `c_1 = e_1(t)`, as a ring
/// endomorphism.
pub fn spin_pullback(ring: &Arc<PolyRing>, f: &FpPoly) -> FpPoly {
    let c1 = elementary_symmetric(ring, 1);
    let subs: Vec<FpPoly> = (0..ring.nvars())
        .map(|i| FpPoly::var(ring, i).add(&c1))
        .collect();
    f.substitute(&subs)
}

/// Ideal file schema: variables with Chow degrees, a prime, and generator
/// expressions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<IdealVar>,
    pub prime: u32,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealVar {
    pub label: String,
    pub degree: u32,
}

impl IdealFile {
    pub fn from_json(src: &str) -> Result<Self> {
        Ok(serde_json::from_str(src)?)
    }

    pub fn into_ring_and_gens(&self, order: OrderKind) -> Result<(Arc<PolyRing>, Vec<FpPoly>)> {
        let ring = PolyRing::new(
            self.variables.iter().map(|v| v.label.clone()).collect(),
            self.variables.iter().map(|v| v.degree).collect(),
            self.prime,
            order,
        )?;
        let mut gens = Vec::new();
        for g in &self.generators {
            let f = FpPoly::parse(&ring, g)?;
            if !f.is_zero() {
                gens.push(f);
            }
        }
        if gens.is_empty() {
            return Err(Error::Groebner("ideal file has no nonzero generators".into()));
        }
        Ok((ring, gens))
    }
}

/// `(c_1^2, ..., c_l^2)` over F_2 in `l` variables (the SO(2l+1) presentation
/// with the mixed generator `2` already reduced away).
pub fn so_squares_gens(ring: &Arc<PolyRing>) -> Vec<FpPoly> {
    (1..=ring.nvars())
        .map(|i| elementary_symmetric(ring, i).pow(2))
        .collect()
}

/// Spin(2l+1) classes `c_i' = e_i(t_1 + c_1, ..., t_l + c_1)` mod 2.
pub fn spin_classes(ring: &Arc<PolyRing>) -> Vec<FpPoly> {
    (1..=ring.nvars())
        .map(|i| spin_pullback(ring, &elementary_symmetric(ring, i)))
        .collect()
}
