//! Exact arithmetic in finite-rank truncated graded commutative algebras.
//!
//! These are the ambient rings of the case models: truncated polynomial
//! algebras like `Z[y,y']/(y^3,y'^3)` or `Z[y2,y6]/(y2^4,y6^2)`, graded by
//! Chow degree (half the topological degree -- every housed class is even).
//! Coefficients are exact integers or a prime field; a pure-power truncation
//! `y^t = 0` is the only relation shape supported here.

use crate::error::{Error, Result};
use crate::parse::{parse_poly, RawPoly};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub type Coef = i128;
pub type Expo = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientRing {
    Exact,
    Fp(u32),
}

/// p-adic valuation of a nonzero integer (`None` for zero). Together with
/// exact integer coefficients this stands in for Z localized at p: no model
/// element ever carries a denominator prime to p.
pub fn p_valuation(c: Coef, p: u32) -> Option<u32> {
    if c == 0 {
        return None;
    }
    let p = p as Coef;
    let mut c = c.abs();
    let mut v = 0;
    while c % p == 0 {
        c /= p;
        v += 1;
    }
    Some(v)
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientRing {
    pub fn fp(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientRing::Fp(p))
        } else {
            Err(Error::Ring(format!("{p} is not prime")))
        }
    }

    fn reduce(&self, c: Coef) -> Coef {
        match self {
            CoefficientRing::Exact => c,
            CoefficientRing::Fp(p) => c.rem_euclid(*p as Coef),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarSpec {
    pub label: String,
    pub chow_degree: u32,
    /// `None` models a polynomial variable (no truncation).
    pub trunc: Option<u32>,
}

/// A truncated graded-commutative polynomial algebra with a fixed variable
/// order. Immutable after construction; shared via `Arc`.
#[derive(Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub vars: Vec<VarSpec>,
    pub coeff: CoefficientRing,
}

impl AlgebraPresentation {
    pub fn new(vars: Vec<VarSpec>, coeff: CoefficientRing) -> Result<Arc<Self>> {
        if let CoefficientRing::Fp(p) = coeff {
            if !is_prime(p) {
                return Err(Error::Ring(format!("{p} is not prime")));
            }
        }
        for v in &vars {
            if v.chow_degree == 0 {
                return Err(Error::Ring(format!("variable {} has degree 0", v.label)));
            }
            if v.trunc == Some(0) {
                return Err(Error::Ring(format!("variable {} has truncation 0", v.label)));
            }
        }
        let mut labels: Vec<&str> = vars.iter().map(|v| v.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != vars.len() {
            return Err(Error::Ring("duplicate variable labels".into()));
        }
        Ok(Arc::new(AlgebraPresentation { vars, coeff }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, label: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.label == label)
    }

    pub fn label_map(&self) -> BTreeMap<String, usize> {
        self.vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.label.clone(), i))
            .collect()
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.vars)
            .map(|(e, v)| e * v.chow_degree)
            .sum()
    }

    fn in_bounds(&self, exps: &[u32]) -> bool {
        exps.iter()
            .zip(&self.vars)
            .all(|(e, v)| v.trunc.is_none_or(|t| *e < t))
    }

    /// Number of basis monomials; error when some variable is untruncated.
    pub fn free_rank(&self) -> Result<u128> {
        let mut rank: u128 = 1;
        for v in &self.vars {
            let t = v
                .trunc
                .ok_or_else(|| Error::Ring(format!("variable {} is untruncated", v.label)))?;
            rank = rank
                .checked_mul(t as u128)
                .ok_or_else(|| Error::Ring("rank overflow".into()))?;
        }
        Ok(rank)
    }

    /// The Chow degree of the top basis monomial (finite presentations).
    pub fn top_degree(&self) -> Result<u32> {
        let mut d = 0u32;
        for v in &self.vars {
            let t = v
                .trunc
                .ok_or_else(|| Error::Ring(format!("variable {} is untruncated", v.label)))?;
            d += (t - 1) * v.chow_degree;
        }
        Ok(d)
    }

    /// Enumerate the monomial basis (finite presentations), in graded order.
    pub fn basis(&self) -> Result<Vec<Expo>> {
        let mut out: Vec<Expo> = vec![vec![]];
        for v in &self.vars {
            let t = v
                .trunc
                .ok_or_else(|| Error::Ring(format!("variable {} is untruncated", v.label)))?;
            let mut next = Vec::with_capacity(out.len() * t as usize);
            for m in &out {
                for e in 0..t {
                    let mut m2 = m.clone();
                    m2.push(e);
                    next.push(m2);
                }
            }
            out = next;
        }
        out.sort_by_key(|m| (self.monomial_degree(m), m.clone()));
        Ok(out)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let basis = self.basis()?;
        let top = self.top_degree()? as usize;
        let mut coeffs = vec![0i64; top + 1];
        for m in &basis {
            coeffs[self.monomial_degree(m) as usize] += 1;
        }
        Ok(HilbertSeries::from_coeffs(coeffs))
    }

    /// Rational form `1 / prod (1 - t^d)` for a free polynomial algebra.
    pub fn hilbert_series_rational(&self) -> HilbertSeries {
        HilbertSeries {
            coeffs: Vec::new(),
            rational: Some(RationalForm {
                numerator: vec![1],
                denom_degrees: self.vars.iter().map(|v| v.chow_degree).collect(),
            }),
        }
    }
}

/// An element in normal form: sparse support on in-bound monomials, no zero
/// coefficients, coefficients reduced when the ring is a prime field.
#[derive(Clone)]
pub struct Element {
    pres: Arc<AlgebraPresentation>,
    terms: BTreeMap<Expo, Coef>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(&self.pres.vars[i].label);
                    if e > 1 {
                        mono.push_str(&format!("^{e}"));
                    }
                }
            }
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.pres.as_ref() == other.pres.as_ref() && self.terms == other.terms
    }
}
impl Eq for Element {}

impl Element {
    pub fn zero(pres: &Arc<AlgebraPresentation>) -> Self {
        Element {
            pres: Arc::clone(pres),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Arc<AlgebraPresentation>) -> Self {
        Self::monomial(pres, &vec![0; pres.nvars()], 1)
    }

    pub fn var(pres: &Arc<AlgebraPresentation>, label: &str) -> Result<Self> {
        let idx = pres
            .var_index(label)
            .ok_or_else(|| Error::Ring(format!("unknown variable {label}")))?;
        let mut m = vec![0u32; pres.nvars()];
        m[idx] = 1;
        Ok(Self::monomial(pres, &m, 1))
    }

    /// Build `c * x^m`, applying normal form (truncation and reduction).
    pub fn monomial(pres: &Arc<AlgebraPresentation>, exps: &[u32], c: Coef) -> Self {
        let mut e = Element::zero(pres);
        e.add_term(exps, c);
        e
    }

    pub fn from_raw(pres: &Arc<AlgebraPresentation>, raw: &RawPoly) -> Self {
        let mut e = Element::zero(pres);
        for (m, c) in raw {
            e.add_term(m, *c);
        }
        e
    }

    pub fn parse(pres: &Arc<AlgebraPresentation>, src: &str) -> Result<Self> {
        let raw = parse_poly(src, &pres.label_map())?;
        Ok(Self::from_raw(pres, &raw))
    }

    fn add_term(&mut self, exps: &[u32], c: Coef) {
        if c == 0 || !self.pres.in_bounds(exps) {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert(0);
        *entry = self
            .pres
            .coeff
            .reduce(entry.checked_add(c).expect("coefficient overflow"));
        if *entry == 0 {
            self.terms.remove(exps);
        }
    }

    /// Reduce to normal form: supported only on in-bound monomials, no zero
    /// coefficients. Elements are maintained in normal form by construction,
    /// so this is idempotent (and cheap).
    pub fn normal_form(&self) -> Self {
        let mut out = Element::zero(&self.pres);
        for (m, c) in &self.terms {
            out.add_term(m, *c);
        }
        out
    }

    pub fn presentation(&self) -> &Arc<AlgebraPresentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Coef)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Coef {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.pres.as_ref() != other.pres.as_ref() {
            return Err(Error::Ring(
                "operands belong to different presentations".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m, *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: Coef) -> Self {
        let mut out = Element::zero(&self.pres);
        for (m, k) in &self.terms {
            out.add_term(m, k.checked_mul(c).expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Element::zero(&self.pres);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Expo = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(&m, ca.checked_mul(*cb).expect("coefficient overflow"));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Element::one(&self.pres);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reduce coefficients mod `p`, keeping representatives in `0..p`.
    pub fn reduce_mod(&self, p: Coef) -> Self {
        let mut out = Element::zero(&self.pres);
        for (m, c) in &self.terms {
            out.add_term(m, c.rem_euclid(p));
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| self.pres.monomial_degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn chow_degree(&self) -> Option<u32> {
        if !self.is_homogeneous() || self.is_zero() {
            return None;
        }
        self.terms.keys().next().map(|m| self.pres.monomial_degree(m))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| self.pres.monomial_degree(m))
            .min()
    }

    pub fn has_unit_part(&self) -> bool {
        self.terms.keys().any(|m| m.iter().all(|&e| e == 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalForm {
    /// Numerator coefficients, ascending degree.
    pub numerator: Vec<i64>,
    /// Denominator as a list of factors `(1 - t^d)`.
    pub denom_degrees: Vec<u32>,
}

/// Integer-coefficient generating function of graded ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    /// Dense coefficients by Chow degree (empty when only a rational form is
    /// available).
    pub coeffs: Vec<i64>,
    pub rational: Option<RationalForm>,
}

impl HilbertSeries {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries {
            coeffs,
            rational: None,
        }
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Total dimension: the value at `t = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return HilbertSeries::from_coeffs(Vec::new());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertSeries::from_coeffs(out)
    }
}

fn poly_string(coeffs: &[i64]) -> String {
    let mut parts = Vec::new();
    for (d, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        parts.push(match (d, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, -1) => "-t".to_string(),
            (1, c) => format!("{c}t"),
            (d, 1) => format!("t^{d}"),
            (d, -1) => format!("-t^{d}"),
            (d, c) => format!("{c}t^{d}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.rational {
            if self.coeffs.is_empty() {
                let den: Vec<String> =
                    r.denom_degrees.iter().map(|d| format!("(1 - t^{d})")).collect();
                write!(f, "({}) / {}", poly_string(&r.numerator), den.join(""))?;
                return Ok(());
            }
        }
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial helpers over `i64`, ascending degree. Shared by the
/// Hilbert-series code here and in the Groebner module.
pub mod densepoly {
    pub fn trim(p: &mut Vec<i64>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    pub fn shift(a: &[i64], by: usize) -> Vec<i64> {
        if a.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0i64; a.len() + by];
        out[by..].copy_from_slice(a);
        out
    }

    /// `(1 - t^d)` as a dense polynomial.
    pub fn one_minus_td(d: usize) -> Vec<i64> {
        let mut p = vec![0i64; d + 1];
        p[0] = 1;
        p[d] = -1;
        p
    }

    /// Exact division, if it divides.
    pub fn div_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
        if den.is_empty() {
            return None;
        }
        let mut rem = num.to_vec();
        trim(&mut rem);
        if rem.is_empty() {
            return Some(Vec::new());
        }
        let dl = *den.last().unwrap();
        let mut q = vec![0i64; rem.len().saturating_sub(den.len() - 1)];
        while !rem.is_empty() && rem.len() >= den.len() {
            let c = rem.last().unwrap() / dl;
            if c * dl != *rem.last().unwrap() {
                return None;
            }
            let pos = rem.len() - den.len();
            q[pos] = c;
            for (i, d) in den.iter().enumerate() {
                rem[pos + i] -= c * d;
            }
            trim(&mut rem);
        }
        if rem.is_empty() {
            Some(q)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda2() -> Arc<AlgebraPresentation> {
        // Lambda(y6, y10): Z[y6,y10]/(y6^2, y10^2), Chow degrees 3 and 5
        AlgebraPresentation::new(
            vec![
                VarSpec { label: "y6".into(), chow_degree: 3, trunc: Some(2) },
                VarSpec { label: "y10".into(), chow_degree: 5, trunc: Some(2) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap()
    }

    fn zy3() -> Arc<AlgebraPresentation> {
        AlgebraPresentation::new(
            vec![VarSpec { label: "y".into(), chow_degree: 4, trunc: Some(3) }],
            CoefficientRing::Exact,
        )
        .unwrap()
    }

    #[test]
    fn truncation_kills_squares() {
        let p = lambda2();
        let y6 = Element::var(&p, "y6").unwrap();
        assert!(y6.mul(&y6).unwrap().is_zero());
    }

    #[test]
    fn normal_form_reduction() {
        // in Z[y]/(y^3): (3y + y^2) * y = 3y^2 (y^3 = 0)
        let p = zy3();
        let y = Element::var(&p, "y").unwrap();
        let e = y.scale(3).add(&y.pow(2).unwrap()).unwrap();
        let got = e.mul(&y).unwrap();
        assert_eq!(got, y.pow(2).unwrap().scale(3));
    }

    #[test]
    fn derived_square_example() {
        // in Z[y,y']/(y^3,y'^3) with (3y^2 + y')^2 = 6 y^2 y' + y'^2,
        // frozen from expanding by hand: 9y^4 -> 0, cross term 6y^2y', y'^2.
        let p = AlgebraPresentation::new(
            vec![
                VarSpec { label: "y".into(), chow_degree: 4, trunc: Some(3) },
                VarSpec { label: "y'".into(), chow_degree: 10, trunc: Some(3) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap();
        let e = Element::parse(&p, "3*y^2 + y'").unwrap();
        let sq = e.mul(&e).unwrap();
        let expect = Element::parse(&p, "6*y^2*y' + y'^2").unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn hilbert_series_examples() {
        let p = lambda2();
        let hs = p.hilbert_series().unwrap();
        assert_eq!(hs.coeffs, vec![1, 0, 0, 1, 0, 1, 0, 0, 1]); // 1 + t^3 + t^5 + t^8
        assert_eq!(hs.eval_at_one(), 4);

        let q = zy3();
        let hs = q.hilbert_series().unwrap();
        assert_eq!(hs.coeffs, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]); // 1 + t^4 + t^8
    }

    #[test]
    fn free_rank_spin_model() {
        // model of the (E8, p=2) P(y): ranks 8*4*2*2 = 128
        let p = AlgebraPresentation::new(
            vec![
                VarSpec { label: "y1".into(), chow_degree: 3, trunc: Some(8) },
                VarSpec { label: "y2".into(), chow_degree: 5, trunc: Some(4) },
                VarSpec { label: "y3".into(), chow_degree: 9, trunc: Some(2) },
                VarSpec { label: "y4".into(), chow_degree: 15, trunc: Some(2) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap();
        assert_eq!(p.free_rank().unwrap(), 128);
        assert_eq!(p.hilbert_series().unwrap().eval_at_one(), 128);

        let l3 = AlgebraPresentation::new(
            vec![
                VarSpec { label: "a".into(), chow_degree: 1, trunc: Some(2) },
                VarSpec { label: "b".into(), chow_degree: 2, trunc: Some(2) },
                VarSpec { label: "c".into(), chow_degree: 3, trunc: Some(2) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap();
        assert_eq!(l3.free_rank().unwrap(), 8);
    }

    #[test]
    fn rejects_mixed_presentations() {
        let a = lambda2();
        let b = zy3();
        let x = Element::var(&a, "y6").unwrap();
        let y = Element::var(&b, "y").unwrap();
        assert!(x.add(&y).is_err());
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn fp_coefficients_reduce() {
        let p = AlgebraPresentation::new(
            vec![VarSpec { label: "t".into(), chow_degree: 1, trunc: Some(4) }],
            CoefficientRing::fp(2).unwrap(),
        )
        .unwrap();
        let t = Element::var(&p, "t").unwrap();
        assert!(t.scale(2).is_zero());
        assert!(CoefficientRing::fp(6).is_err());
    }

    #[test]
    fn ring_axioms_randomized() {
        // associativity and distributivity on pseudo-random elements
        let p = AlgebraPresentation::new(
            vec![
                VarSpec { label: "y".into(), chow_degree: 4, trunc: Some(3) },
                VarSpec { label: "y'".into(), chow_degree: 10, trunc: Some(3) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap();
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let basis = p.basis().unwrap();
        let mut rand_elem = || {
            let mut e = Element::zero(&p);
            for m in &basis {
                let c = (next() % 7) as i128 - 3;
                e = e.add(&Element::monomial(&p, m, c)).unwrap();
            }
            e
        };
        for _ in 0..20 {
            let (a, b, c) = (rand_elem(), rand_elem(), rand_elem());
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            let ab = a.mul(&b).unwrap();
            let ba = b.mul(&a).unwrap();
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let p = AlgebraPresentation::new(
            vec![
                VarSpec { label: "y".into(), chow_degree: 4, trunc: Some(3) },
                VarSpec { label: "y'".into(), chow_degree: 10, trunc: Some(3) },
            ],
            CoefficientRing::Exact,
        )
        .unwrap();
        assert_eq!(p.free_rank().unwrap(), 9);
        let e = Element::parse(&p, "(3*y^2 + y')^2 - 2*y*y'").unwrap();
        let nf = e.normal_form();
        assert_eq!(nf, e);
        assert_eq!(nf.normal_form(), nf);
    }

    #[test]
    fn hilbert_at_one_equals_free_rank() {
        for (degs, truncs) in [(vec![3u32, 5], vec![2u32, 2]), (vec![1, 3], vec![4, 2])] {
            let vars = degs
                .iter()
                .zip(&truncs)
                .enumerate()
                .map(|(i, (&d, &t))| VarSpec {
                    label: format!("v{i}"),
                    chow_degree: d,
                    trunc: Some(t),
                })
                .collect();
            let p = AlgebraPresentation::new(vars, CoefficientRing::Exact).unwrap();
            assert_eq!(
                p.hilbert_series().unwrap().eval_at_one() as u128,
                p.free_rank().unwrap()
            );
        }
    }
}
