//! Relation families over `μ_r`, exact rank and table reproduction.
//!
//! Three families of elements of `Ker L^sh` are generated at a fixed weight
//! `N` and expanded over the admissible words of weight `N`:
//!
//! * **deriv** — `∂_n(w)` for `1 ≤ n ≤ N−2`, `w` admissible of weight `N−n`;
//! * **ext** — every `c^j` coefficient of `∂̂_n^(c)(w)` over `Q[c]`;
//! * **lin** — `L_{x+δ(s)y_s} φ I M_s (w ∗ w')` for `s ∈ μ_r`,
//!   `w ∈ A^1` of weight `a ≥ 1`, `w'` labelled by 1 of weight `b ≥ 1`,
//!   `a + b = N − 1`.
//!
//! Ranks are exact: rows are scaled to primitive integer vectors and reduced
//! by fraction-free elimination (see [`Echelon`]).  A modular rank is
//! available as an independent cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::algebra::{enumerate_words, Label, LabelDomain, NcPoly, Word, WordClass};
use crate::derivations::{DerivationTower, ThetaVariant};
use crate::error::{Error, Result};
use crate::hproducts::{HarmonicEngine, HarmonicKind};
use crate::linmaps::{sigma_s, x_plus_delta_y};
use crate::scalar::{q_to_string, QPoly, Q};

/// The three relation families of the tables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationFamily {
    /// Derivation relation `∂_n`.
    Deriv,
    /// Extended derivation relation `∂̂_n^(c)`, all `c`.
    Ext,
    /// Linear part of the Newton-series relation class.
    Lin,
}

impl RelationFamily {
    /// All families in table order.
    pub const ALL: [RelationFamily; 3] = [RelationFamily::Deriv, RelationFamily::Ext, RelationFamily::Lin];

    /// Short machine name (`deriv`, `ext`, `lin`).
    pub fn name(&self) -> &'static str {
        match self {
            RelationFamily::Deriv => "deriv",
            RelationFamily::Ext => "ext",
            RelationFamily::Lin => "lin",
        }
    }

    /// Parse a machine name.
    pub fn parse(s: &str) -> Option<RelationFamily> {
        match s {
            "deriv" => Some(RelationFamily::Deriv),
            "ext" => Some(RelationFamily::Ext),
            "lin" => Some(RelationFamily::Lin),
            _ => None,
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One relation vector: sparse `(column, coefficient)` pairs, sorted by column.
#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    /// Non-zero entries, sorted by column.
    pub coeffs: Vec<(usize, Q)>,
    /// Which generator produced the row.
    pub provenance: String,
}

/// Relation vectors over the admissible-word basis of one weight.
#[derive(Clone, Debug)]
pub struct RelationMatrix {
    /// Modulus `r`.
    pub r: u32,
    /// Weight `N`.
    pub weight: usize,
    /// Family.
    pub family: RelationFamily,
    /// Admissible words of weight `N` in canonical order.
    pub basis: Vec<Word>,
    /// Relation rows.
    pub rows: Vec<Row>,
    /// Number of raw generators considered (before dropping zero or
    /// redundant generators).
    pub generated: usize,
    index: FxHashMap<Word, usize>,
}

impl RelationMatrix {
    /// Empty matrix over the admissible basis of weight `n`.
    pub fn new(r: u32, n: usize, family: RelationFamily) -> Self {
        let basis = enumerate_words(n, r, WordClass::A0);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        RelationMatrix { r, weight: n, family, basis, rows: Vec::new(), generated: 0, index }
    }

    /// Column of a basis word.
    pub fn column(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Convert a polynomial into a sparse row (zero polynomials give `None`).
    pub fn to_row(&self, p: &NcPoly<Q>, provenance: String) -> Result<Option<Row>> {
        if p.is_zero() {
            return Ok(None);
        }
        let mut coeffs = Vec::with_capacity(p.len());
        for (w, a) in p.iter() {
            let col = self.column(w).ok_or_else(|| Error::NotAdmissible {
                op: "relation row",
                word: w.to_string(),
            })?;
            coeffs.push((col, a.clone()));
        }
        coeffs.sort_by_key(|(c, _)| *c);
        Ok(Some(Row { coeffs, provenance }))
    }

    /// Append a relation polynomial (dropped when zero).
    pub fn push(&mut self, p: &NcPoly<Q>, provenance: String) -> Result<()> {
        self.generated += 1;
        if let Some(row) = self.to_row(p, provenance)? {
            self.rows.push(row);
        }
        Ok(())
    }

    /// A row as a polynomial.
    pub fn row_poly(&self, i: usize) -> NcPoly<Q> {
        NcPoly::from_terms(self.rows[i].coeffs.iter().map(|(c, a)| (self.basis[*c].clone(), a.clone())))
    }

    /// Exact rank over `Q`.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for row in &self.rows {
            e.insert_rational(&row.coeffs);
        }
        e.rank()
    }

    /// Echelon form of the row space.
    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for row in &self.rows {
            e.insert_rational(&row.coeffs);
        }
        e
    }

    /// Rank modulo a prime `p` (a lower bound for the rational rank, equal
    /// to it for all but finitely many primes).
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut e = ModEchelon::new(p, self.basis.len());
        for row in &self.rows {
            e.insert(&row.coeffs);
        }
        e.rank()
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn contains_rowspace_of(&self, other: &RelationMatrix) -> bool {
        assert_eq!((self.r, self.weight), (other.r, other.weight));
        let e = self.echelon();
        other.rows.iter().all(|row| e.contains_rational(&row.coeffs))
    }

    /// Serialisable dump (`basis` as index strings, coefficients as `p/q`).
    pub fn dump(&self) -> RelationDump {
        let names: Vec<String> = self
            .basis
            .iter()
            .map(|w| w.to_index_string().expect("admissible words end in y"))
            .collect();
        RelationDump {
            r: self.r,
            weight: self.weight,
            family: self.family.name().to_string(),
            basis: names.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| DumpRow {
                    coeffs: row.coeffs.iter().map(|(c, a)| (names[*c].clone(), q_to_string(a))).collect(),
                    provenance: row.provenance.clone(),
                })
                .collect(),
        }
    }
}

/// JSON shape of a relation dump.
#[derive(Clone, Debug, Serialize)]
pub struct RelationDump {
    /// Modulus.
    pub r: u32,
    /// Weight.
    pub weight: usize,
    /// Family name.
    pub family: String,
    /// Basis words as index strings.
    pub basis: Vec<String>,
    /// Rows.
    pub rows: Vec<DumpRow>,
}

/// One row of a [`RelationDump`].
#[derive(Clone, Debug, Serialize)]
pub struct DumpRow {
    /// Word string → `p/q`.
    pub coeffs: std::collections::BTreeMap<String, String>,
    /// Generator description.
    pub provenance: String,
}

/// `∂_n(w)` rows.
pub fn gen_deriv(r: u32, n: usize) -> Result<RelationMatrix> {
    let dom = LabelDomain::Cyclic(r);
    let tower = DerivationTower::<Q>::ordinary(dom);
    let mut m = RelationMatrix::new(r, n, RelationFamily::Deriv);
    for k in 1..=n.saturating_sub(2) {
        for w in enumerate_words(n - k, r, WordClass::A0) {
            let p = tower.partial_word(k, &w);
            m.push(&p, format!("d_{k}({})", index_string(&w)))?;
        }
    }
    Ok(m)
}

/// Coefficient rows of `∂̂_n^(c)(w)` over `Q[c]` (or `∂_n^(c)` for
/// [`ThetaVariant::Plain`]).
pub fn gen_ext_variant(r: u32, n: usize, variant: ThetaVariant) -> Result<RelationMatrix> {
    let dom = LabelDomain::Cyclic(r);
    let tower = DerivationTower::<QPoly>::new(dom, QPoly::c(), variant);
    let mut m = RelationMatrix::new(r, n, RelationFamily::Ext);
    for k in 1..=n.saturating_sub(2) {
        for w in enumerate_words(n - k, r, WordClass::A0) {
            let p = tower.partial_word(k, &w);
            for j in 0..k {
                let pj = p.map_coeffs(|a| a.coeff(j));
                m.push(&pj, format!("d_{k}^(c)({})[c^{j}]", index_string(&w)))?;
            }
        }
    }
    Ok(m)
}

/// Coefficient rows of `∂̂_n^(c)(w)`.
pub fn gen_ext(r: u32, n: usize) -> Result<RelationMatrix> {
    gen_ext_variant(r, n, ThetaVariant::Hat)
}

/// Which generators the linear family keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinGenerators {
    /// Every generator `(s, w, w')`.
    Full,
    /// Only products `w ∗ w'` that are linearly independent of the ones
    /// already kept (same span, far fewer rows).
    Independent,
}

/// Rows `L_{x+δ(s)y_s} σ_s(w ∗ w')` for the given labels `s`.
pub fn gen_lin_with(r: u32, n: usize, labels: &[Label], mode: LinGenerators) -> Result<RelationMatrix> {
    let dom = LabelDomain::Cyclic(r);
    let mut m = RelationMatrix::new(r, n, RelationFamily::Lin);
    if n < 3 {
        return Ok(m);
    }
    let engine = HarmonicEngine::<Q>::new();
    // Products w ∗ w' live in A^1 of weight n − 1.
    let a1 = enumerate_words(n - 1, r, WordClass::A1);
    let a1_index: FxHashMap<Word, usize> = a1.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut kept: Vec<(NcPoly<Q>, String)> = Vec::new();
    let mut seen = Echelon::new();
    let mut raw = 0usize;
    for a in 1..=n - 2 {
        let b = n - 1 - a;
        let left = enumerate_words(a, r, WordClass::A1);
        let right = enumerate_words(b, r, WordClass::A1LabelsOne);
        for w in &left {
            for w2 in &right {
                raw += 1;
                let prod = engine.words(HarmonicKind::Star, w, w2)?;
                let tag = format!("{} * {}", index_string(w), index_string(w2));
                if mode == LinGenerators::Independent {
                    let mut v: Vec<(usize, Q)> = prod.iter().map(|(u, c)| (a1_index[u], c.clone())).collect();
                    v.sort_by_key(|(c, _)| *c);
                    if !seen.insert_rational(&v) {
                        continue;
                    }
                }
                kept.push((prod, tag));
            }
        }
    }
    for s in labels {
        let lead = x_plus_delta_y::<Q>(s);
        let mut cache: FxHashMap<Word, NcPoly<Q>> = FxHashMap::default();
        for (prod, tag) in &kept {
            let mut img = NcPoly::zero();
            for (u, c) in prod.iter() {
                if !cache.contains_key(u) {
                    let im = sigma_s(s, &NcPoly::from_word(u.clone()), dom)?;
                    cache.insert(u.clone(), lead.concat(&im));
                }
                img.add_scaled(&cache[u], c);
            }
            if let Some((w, _)) = img.iter().find(|(w, _)| !w.in_a0()) {
                return Err(Error::NotAdmissible { op: "gen_lin", word: w.to_string() });
            }
            m.push(&img, format!("s={} {tag}", s.index_text()))?;
        }
    }
    m.generated = raw * labels.len();
    Ok(m)
}

/// All labels of `μ_r`.
pub fn mu_r(r: u32) -> Vec<Label> {
    (0..r).map(|e| Label::cyc(i64::from(e), r)).collect()
}

/// The linear family, union over all `s ∈ μ_r`, redundant products pruned.
pub fn gen_lin(r: u32, n: usize) -> Result<RelationMatrix> {
    gen_lin_with(r, n, &mu_r(r), LinGenerators::Independent)
}

/// Generate one family.
pub fn generate(family: RelationFamily, r: u32, n: usize) -> Result<RelationMatrix> {
    match family {
        RelationFamily::Deriv => gen_deriv(r, n),
        RelationFamily::Ext => gen_ext(r, n),
        RelationFamily::Lin => gen_lin(r, n),
    }
}

fn index_string(w: &Word) -> String {
    w.to_index_string().unwrap_or_else(|| w.to_string())
}

/// Number of admissible words of weight `n` over `μ_r`: `r²(r+1)^{n−2}`.
pub fn admissible_count(r: u32, n: usize) -> usize {
    if n < 2 {
        return enumerate_words(n, r, WordClass::A0).len();
    }
    (r as usize).pow(2) * (r as usize + 1).pow(n as u32 - 2)
}

/// Number of raw generators a family considers at `(r, N)`, computed
/// without generating anything (used for resource caps).
pub fn generator_count(family: RelationFamily, r: u32, n: usize) -> usize {
    let rr = r as usize;
    let a1 = |a: usize| rr * (rr + 1).pow(a as u32 - 1);
    let ones = |b: usize| 1usize << (b - 1);
    match family {
        RelationFamily::Deriv => (1..=n.saturating_sub(2)).map(|k| admissible_count(r, n - k)).sum(),
        RelationFamily::Ext => (1..=n.saturating_sub(2)).map(|k| k * admissible_count(r, n - k)).sum(),
        RelationFamily::Lin if n < 3 => 0,
        RelationFamily::Lin => rr * (1..=n - 2).map(|a| a1(a) * ones(n - 1 - a)).sum::<usize>(),
    }
}

/// One table cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    /// Family.
    pub family: RelationFamily,
    /// Modulus.
    pub r: u32,
    /// Weight.
    pub weight: usize,
    /// Exact rank.
    pub rank: usize,
    /// Number of admissible words.
    pub basis_count: usize,
}

/// Result of computing all three families at one `(r, N)`.
#[derive(Clone, Debug)]
pub struct CellReport {
    /// One record per family.
    pub records: Vec<TableRecord>,
    /// `rowspace(deriv) ⊆ rowspace(ext)`.
    pub deriv_in_ext: bool,
    /// `rowspace(ext) ⊆ rowspace(lin)`.
    pub ext_in_lin: bool,
}

/// Ranks of the requested families at one `(r, N)`.
pub fn table_cell(r: u32, n: usize, families: &[RelationFamily]) -> Result<Vec<TableRecord>> {
    families
        .iter()
        .map(|&f| {
            let m = generate(f, r, n)?;
            Ok(TableRecord { family: f, r, weight: n, rank: m.rank(), basis_count: m.basis.len() })
        })
        .collect()
}

/// All three families at one `(r, N)` plus the nesting checks.
pub fn full_cell(r: u32, n: usize) -> Result<CellReport> {
    let d = gen_deriv(r, n)?;
    let e = gen_ext(r, n)?;
    let l = gen_lin(r, n)?;
    let de = d.echelon();
    let ee = e.echelon();
    let le = l.echelon();
    let deriv_in_ext = d.rows.iter().all(|row| ee.contains_rational(&row.coeffs));
    let ext_in_lin = e.rows.iter().all(|row| le.contains_rational(&row.coeffs));
    let basis_count = d.basis.len();
    let records = vec![
        TableRecord { family: RelationFamily::Deriv, r, weight: n, rank: de.rank(), basis_count },
        TableRecord { family: RelationFamily::Ext, r, weight: n, rank: ee.rank(), basis_count },
        TableRecord { family: RelationFamily::Lin, r, weight: n, rank: le.rank(), basis_count },
    ];
    Ok(CellReport { records, deriv_in_ext, ext_in_lin })
}

type IntRow = Vec<(usize, BigInt)>;

/// Clear denominators and divide by the content: a primitive integer row
/// with positive leading entry.
pub fn primitive_integer_row(v: &[(usize, Q)]) -> IntRow {
    let mut l = BigInt::one();
    for (_, a) in v {
        l = l.lcm(a.denom());
    }
    let mut out: IntRow = v
        .iter()
        .filter(|(_, a)| !a.is_zero())
        .map(|(c, a)| (*c, a.numer() * (&l / a.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(v: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, a) in v.iter() {
        g = g.gcd(a);
        if g.is_one() {
            break;
        }
    }
    if v.first().is_some_and(|(_, a)| a.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, a) in v.iter_mut() {
            *a = &*a / &g;
        }
    }
}

/// Row-echelon basis of a row space over `Q`, stored as primitive integer
/// rows keyed by their leading column.
///
/// Reduction of a new row `v` by a pivot row `p` with leading entries `a`,
/// `b` computes `(b/g)·v − (a/g)·p` with `g = gcd(a, b)` and then divides
/// out the content, so all arithmetic stays in the integers.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: FxHashMap<usize, IntRow>,
}

impl Echelon {
    /// Empty row space.
    pub fn new() -> Self {
        Self::default()
    }

    /// Dimension.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut v: IntRow) -> IntRow {
        while let Some((lead, a)) = v.first().cloned() {
            let Some(p) = self.pivots.get(&lead) else { break };
            let b = &p[0].1;
            let g = a.gcd(b);
            let fa = b / &g;
            let fp = &a / &g;
            v = combine(&v, &fa, p, &fp);
            make_primitive(&mut v);
        }
        v
    }

    /// Insert an integer row; returns whether the rank increased.
    pub fn insert_integer(&mut self, v: IntRow) -> bool {
        let v = self.reduce(v);
        match v.first() {
            None => false,
            Some((lead, _)) => {
                let lead = *lead;
                self.pivots.insert(lead, v);
                true
            }
        }
    }

    /// Insert a rational row; returns whether the rank increased.
    pub fn insert_rational(&mut self, v: &[(usize, Q)]) -> bool {
        self.insert_integer(primitive_integer_row(v))
    }

    /// Whether a rational row lies in the row space.
    pub fn contains_rational(&self, v: &[(usize, Q)]) -> bool {
        self.reduce(primitive_integer_row(v)).is_empty()
    }

    /// Largest absolute entry over all pivot rows (growth diagnostic).
    pub fn max_entry_bits(&self) -> u64 {
        self.pivots.values().flat_map(|r| r.iter().map(|(_, a)| a.bits())).max().unwrap_or(0)
    }
}

/// `fa·v − fp·p` on sorted sparse rows.
fn combine(v: &IntRow, fa: &BigInt, p: &IntRow, fp: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let ci = v.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, fa * &v[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(fp * &p[j].1)));
            j += 1;
        } else {
            let x = fa * &v[i].1 - fp * &p[j].1;
            if !x.is_zero() {
                out.push((ci, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row reduction modulo a prime.
pub struct ModEchelon {
    p: u64,
    ncols: usize,
    pivots: Vec<Option<Vec<(usize, u64)>>>,
    rank: usize,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl ModEchelon {
    /// Empty row space over `F_p` with `ncols` columns.
    pub fn new(p: u64, ncols: usize) -> Self {
        ModEchelon { p, ncols, pivots: vec![None; ncols], rank: 0 }
    }

    /// Dimension.
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn reduce_q(&self, a: &Q) -> u64 {
        let p = BigInt::from(self.p);
        let n = a.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let d = a.denom().mod_floor(&p).to_u64().unwrap_or(0);
        assert!(d != 0, "denominator divisible by the modulus");
        ((n as u128 * pow_mod(d, self.p - 2, self.p) as u128) % self.p as u128) as u64
    }

    /// Insert a rational row; returns whether the rank increased.
    pub fn insert(&mut self, v: &[(usize, Q)]) -> bool {
        let p = self.p;
        let mut dense = vec![0u64; self.ncols];
        let mut lo = usize::MAX;
        for (c, a) in v {
            dense[*c] = self.reduce_q(a);
            lo = lo.min(*c);
        }
        if lo == usize::MAX {
            return false;
        }
        for col in lo..self.ncols {
            let x = dense[col];
            if x == 0 {
                continue;
            }
            match &self.pivots[col] {
                Some(row) => {
                    for (c, b) in row {
                        let sub = (x as u128 * *b as u128 % p as u128) as u64;
                        dense[*c] = (dense[*c] + p - sub) % p;
                    }
                }
                None => {
                    let inv = pow_mod(x, p - 2, p);
                    let row: Vec<(usize, u64)> = (col..self.ncols)
                        .filter(|&c| dense[c] != 0)
                        .map(|c| (c, (dense[c] as u128 * inv as u128 % p as u128) as u64))
                        .collect();
                    self.pivots[col] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

/// Dense fraction-free Gaussian elimination (Bareiss) on an integer matrix,
/// pivoting on the entry of largest magnitude in the current column.
/// Returns the rank.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows)
            .filter(|&i| !a[i][col].is_zero())
            .max_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()))
        else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts_match_generation() {
        for (r, n) in [(1, 5), (2, 4), (3, 3)] {
            assert_eq!(generator_count(RelationFamily::Deriv, r, n), gen_deriv(r, n).unwrap().rows.len());
            assert_eq!(generator_count(RelationFamily::Lin, r, n), gen_lin(r, n).unwrap().generated);
        }
    }
    use crate::scalar::{q, qi};

    #[test]
    fn empty_and_duplicate_rows() {
        let m = RelationMatrix::new(1, 4, RelationFamily::Deriv);
        assert_eq!(m.rank(), 0);
        let mut e = Echelon::new();
        let v = vec![(0, q(1, 2)), (2, qi(3))];
        assert!(e.insert_rational(&v));
        assert!(!e.insert_rational(&v));
        assert!(!e.insert_rational(&[(0, qi(-1)), (2, qi(-6))]));
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn bareiss_matches_echelon() {
        let rows: Vec<Vec<i64>> = vec![vec![2, 4, 6, 0], vec![1, 2, 3, 0], vec![0, 1, 0, 5], vec![3, 7, 9, 5]];
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut e = Echelon::new();
        for r in &rows {
            let v: Vec<(usize, Q)> = r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, qi(x))).collect();
            e.insert_rational(&v);
        }
        assert_eq!(bareiss_rank(big), 2);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn small_cells() {
        assert_eq!(gen_deriv(1, 3).unwrap().rank(), 1);
        assert_eq!(gen_deriv(1, 5).unwrap().rank(), 5);
        assert_eq!(gen_lin(1, 4).unwrap().rank(), 2);
        let m = gen_ext(2, 4).unwrap();
        assert_eq!(m.rank(), 14);
        assert_eq!(m.rank_mod_p(1_000_000_007), 14);
    }

    #[test]
    fn pruned_lin_generators_keep_the_rank() {
        for (r, n) in [(1, 6), (2, 4), (3, 3)] {
            let full = gen_lin_with(r, n, &mu_r(r), LinGenerators::Full).unwrap();
            let pruned = gen_lin(r, n).unwrap();
            assert!(pruned.rows.len() <= full.rows.len());
            assert_eq!(pruned.rank(), full.rank(), "r={r} N={n}");
            assert_eq!(pruned.rank(), full.rank_mod_p(1_000_000_007), "r={r} N={n}");
        }
    }
}
