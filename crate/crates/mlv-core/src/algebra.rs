//! Labels, letters, words and non-commutative polynomials.
//!
//! A word is a finite sequence of letters `x` and `y_s`; the label `s` is
//! either a power `ζ^e` of the primitive `r`-th root of unity (the cyclic
//! domain used for relation generation) or an exact complex rational (the
//! domain used for identities that need `1 - s`).  Every word in `A^1`
//! (empty or ending in a `y`) factors uniquely into blocks
//! `z_{k,s} = x^{k-1} y_s`, which is also how words are written as index
//! sets `k1:e1,k2:e2,...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{q_parse, q_to_string, Coeff, Q};

/// Exact complex rational numbers.
pub type CRat = Complex<Q>;

/// Render an exact complex rational compactly (`p/q`, or `a+bi`).
pub fn crat_to_string(z: &CRat) -> String {
    if Zero::is_zero(&z.im) {
        q_to_string(&z.re)
    } else if Zero::is_zero(&z.re) {
        format!("{}i", q_to_string(&z.im))
    } else {
        let sign = if z.im < <Q as Zero>::zero() { "" } else { "+" };
        format!("{}{}{}i", q_to_string(&z.re), sign, q_to_string(&z.im))
    }
}

/// A label: an element of the monoid indexing the letters `y_s`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    /// `ζ^exp` with `ζ = exp(2πi/modulus)`; `exp` is stored reduced.
    Cyc { exp: u32, modulus: u32 },
    /// An exact complex rational.
    Num(Arc<CRat>),
}

impl Label {
    /// `ζ^e` for the primitive `r`-th root of unity, with `e` reduced mod `r`.
    pub fn cyc(e: i64, r: u32) -> Label {
        assert!(r >= 1, "modulus must be positive");
        let exp = e.rem_euclid(i64::from(r)) as u32;
        Label::Cyc { exp, modulus: r }
    }

    /// An exact complex-rational label.
    pub fn num(z: CRat) -> Label {
        Label::Num(Arc::new(z))
    }

    /// A real rational label.
    pub fn rational(x: Q) -> Label {
        Label::num(CRat::new(x, <Q as Zero>::zero()))
    }

    /// The domain this label lives in.
    pub fn domain(&self) -> LabelDomain {
        match self {
            Label::Cyc { modulus, .. } => LabelDomain::Cyclic(*modulus),
            Label::Num(_) => LabelDomain::Complex,
        }
    }

    /// Whether the label equals 1.
    pub fn is_one(&self) -> bool {
        match self {
            Label::Cyc { exp, .. } => *exp == 0,
            Label::Num(z) => z.re.is_one() && Zero::is_zero(&z.im),
        }
    }

    /// Whether the label equals 0 (never true for cyclic labels).
    pub fn is_zero(&self) -> bool {
        match self {
            Label::Cyc { .. } => false,
            Label::Num(z) => Zero::is_zero(&z.re) && Zero::is_zero(&z.im),
        }
    }

    /// Product within a domain.
    pub fn checked_mul(&self, other: &Label) -> Result<Label> {
        match (self, other) {
            (Label::Cyc { exp: a, modulus: r }, Label::Cyc { exp: b, modulus: s }) if r == s => {
                Ok(Label::cyc(i64::from(*a) + i64::from(*b), *r))
            }
            (Label::Num(a), Label::Num(b)) => Ok(Label::num(a.as_ref() * b.as_ref())),
            _ => Err(Error::MixedDomains(format!("{self} * {other}"))),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Label> {
        match self {
            Label::Cyc { exp, modulus } => Ok(Label::cyc(-i64::from(*exp), *modulus)),
            Label::Num(z) => {
                if self.is_zero() {
                    Err(Error::ZeroLabel("label inverse"))
                } else {
                    Ok(Label::num(CRat::one() / z.as_ref()))
                }
            }
        }
    }

    /// Quotient `self / other`.
    pub fn checked_div(&self, other: &Label) -> Result<Label> {
        self.checked_mul(&other.inv()?)
    }

    /// `1 - s`; defined for complex-rational labels only.
    pub fn one_minus(&self) -> Result<Label> {
        match self {
            Label::Cyc { .. } => Err(Error::CyclicLabel("one_minus")),
            Label::Num(z) => Ok(Label::num(CRat::one() - z.as_ref())),
        }
    }

    /// The exact value, when the label is a complex rational (or a cyclic
    /// label equal to `±1`).
    pub fn to_crat(&self) -> Option<CRat> {
        match self {
            Label::Num(z) => Some(z.as_ref().clone()),
            Label::Cyc { exp, modulus } => {
                if *exp == 0 {
                    Some(CRat::one())
                } else if 2 * exp == *modulus {
                    Some(-CRat::one())
                } else {
                    None
                }
            }
        }
    }

    /// Floating-point value.
    pub fn to_c64(&self) -> Complex<f64> {
        use num_traits::ToPrimitive;
        match self {
            Label::Cyc { exp, modulus } => {
                let t = 2.0 * std::f64::consts::PI * f64::from(*exp) / f64::from(*modulus);
                Complex::new(t.cos(), t.sin())
            }
            Label::Num(z) => Complex::new(
                z.re.to_f64().unwrap_or(f64::NAN),
                z.im.to_f64().unwrap_or(f64::NAN),
            ),
        }
    }

    /// Text used in index-set strings: the exponent for cyclic labels, the
    /// value for complex-rational labels.
    pub fn index_text(&self) -> String {
        match self {
            Label::Cyc { exp, .. } => exp.to_string(),
            Label::Num(z) => crat_to_string(z),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (Label::Cyc { exp: a, modulus: r }, Label::Cyc { exp: b, modulus: s }) => {
                (r, a).cmp(&(s, b))
            }
            (Label::Cyc { .. }, Label::Num(_)) => Ordering::Less,
            (Label::Num(_), Label::Cyc { .. }) => Ordering::Greater,
            (Label::Num(a), Label::Num(b)) => (&a.re, &a.im).cmp(&(&b.re, &b.im)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Cyc { exp: 0, .. } => write!(f, "1"),
            Label::Cyc { exp: 1, .. } => write!(f, "ζ"),
            Label::Cyc { exp, .. } => write!(f, "ζ^{exp}"),
            Label::Num(z) => write!(f, "{}", crat_to_string(z)),
        }
    }
}

/// Where labels live: the cyclic group `μ_r` or the exact complex rationals.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LabelDomain {
    /// `μ_r`, labels `ζ^e`.
    Cyclic(u32),
    /// Exact complex rationals.
    Complex,
}

impl LabelDomain {
    /// The label 1 of this domain.
    pub fn one(&self) -> Label {
        match self {
            LabelDomain::Cyclic(r) => Label::cyc(0, *r),
            LabelDomain::Complex => Label::rational(<Q as One>::one()),
        }
    }

    /// Whether `l` belongs to this domain.
    pub fn contains(&self, l: &Label) -> bool {
        l.domain() == *self
    }

    /// Error unless `l` belongs to this domain.
    pub fn check(&self, l: &Label) -> Result<()> {
        if self.contains(l) {
            Ok(())
        } else {
            Err(Error::MixedDomains(format!("label {l} outside {self:?}")))
        }
    }
}

/// A letter of the alphabet `{x} ∪ {y_s}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    /// The letter `x`.
    X,
    /// The letter `y_s`.
    Y(Label),
}

impl Letter {
    /// The label of a `y` letter.
    pub fn label(&self) -> Option<&Label> {
        match self {
            Letter::X => None,
            Letter::Y(l) => Some(l),
        }
    }

    /// Whether this is a `y` letter.
    pub fn is_y(&self) -> bool {
        matches!(self, Letter::Y(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X => write!(f, "x"),
            Letter::Y(l) => write!(f, "y_{l}"),
        }
    }
}

/// A word in the letters `x`, `y_s`.  The empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

/// One block `z_{k,s} = x^{k-1} y_s` of a word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZFactor {
    /// The exponent `k ≥ 1`.
    pub k: usize,
    /// The label `s`.
    pub label: Label,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// The block `z_{k,s} = x^{k-1} y_s`.
    pub fn z(k: usize, s: Label) -> Word {
        assert!(k >= 1, "z_(k,s) needs k >= 1");
        let mut v = vec![Letter::X; k - 1];
        v.push(Letter::Y(s));
        Word(v)
    }

    /// Build `z_{k1,s1}···z_{kn,sn} x^l`.
    pub fn from_factors(factors: &[ZFactor], trailing_x: usize) -> Word {
        let mut v = Vec::new();
        for f in factors {
            v.extend(std::iter::repeat_n(Letter::X, f.k - 1));
            v.push(Letter::Y(f.label.clone()));
        }
        v.extend(std::iter::repeat_n(Letter::X, trailing_x));
        Word(v)
    }

    /// The letters.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters.
    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Number of `y` letters.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|l| l.is_y()).count()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in `A^1`: empty or ending in a `y`.
    pub fn in_a1(&self) -> bool {
        self.0.last().is_none_or(Letter::is_y)
    }

    /// Membership in `A^0` (admissibility): empty, or starting with `x` or
    /// `y_t` (`t ≠ 1`) and ending in a `y`.
    pub fn in_a0(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (None, _) => true,
            (Some(first), Some(last)) => {
                let first_ok = match first {
                    Letter::X => true,
                    Letter::Y(t) => !t.is_one(),
                };
                first_ok && last.is_y()
            }
            _ => unreachable!(),
        }
    }

    /// Unique factorisation `z_{k1,s1}···z_{kn,sn} x^l`.
    pub fn factors(&self) -> (Vec<ZFactor>, usize) {
        let mut out = Vec::new();
        let mut k = 1;
        for l in &self.0 {
            match l {
                Letter::X => k += 1,
                Letter::Y(s) => {
                    out.push(ZFactor { k, label: s.clone() });
                    k = 1;
                }
            }
        }
        (out, k - 1)
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The domain of the labels occurring in the word, or an error when
    /// labels from different domains are mixed.  `None` for label-free words.
    pub fn label_domain(&self) -> Result<Option<LabelDomain>> {
        let mut dom = None;
        for l in self.0.iter().filter_map(Letter::label) {
            match dom {
                None => dom = Some(l.domain()),
                Some(d) => d.check(l)?,
            }
        }
        Ok(dom)
    }

    /// Parse an index-set string `k1:e1,k2:e2,...`.  In a cyclic domain the
    /// `e_i` are integer exponents of `ζ` (reduced mod `r`); in the complex
    /// domain they are rationals `p/q`.  The empty string is the empty word.
    pub fn parse(text: &str, dom: LabelDomain) -> Result<Word> {
        let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Word::empty());
        }
        let mut factors = Vec::new();
        for part in trimmed.split(',') {
            let (k, e) = part.split_once(':').ok_or_else(|| err("expected `k:e` pairs"))?;
            let k: i64 = k.trim().parse().map_err(|_| err("k must be an integer"))?;
            if k < 1 {
                return Err(err("k must be at least 1"));
            }
            let label = match dom {
                LabelDomain::Cyclic(r) => {
                    let e: i64 = e.trim().parse().map_err(|_| err("exponent must be an integer"))?;
                    Label::cyc(e, r)
                }
                LabelDomain::Complex => {
                    let v = q_parse(e).ok_or_else(|| err("label must be a rational p/q"))?;
                    if Zero::is_zero(&v) {
                        return Err(err("label must be non-zero"));
                    }
                    Label::rational(v)
                }
            };
            factors.push(ZFactor { k: k as usize, label });
        }
        Ok(Word::from_factors(&factors, 0))
    }

    /// Index-set string `k1:e1,k2:e2,...`; `None` for words outside `A^1`.
    pub fn to_index_string(&self) -> Option<String> {
        let (factors, tail) = self.factors();
        if tail > 0 {
            return None;
        }
        Some(
            factors
                .iter()
                .map(|f| format!("{}:{}", f.k, f.label.index_text()))
                .collect::<Vec<_>>()
                .join(","),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Constraint used by [`enumerate_words`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordClass {
    /// Every word.
    All,
    /// Words in `A^1`.
    A1,
    /// Admissible words (`A^0`).
    A0,
    /// Words in `A^1` whose labels are all 1.
    A1LabelsOne,
}

/// All words of the given weight over `μ_r` satisfying `class`, in
/// lexicographic order `x < y_1 < y_ζ < … < y_{ζ^{r-1}}`.
pub fn enumerate_words(weight: usize, r: u32, class: WordClass) -> Vec<Word> {
    let alphabet: Vec<Letter> = if class == WordClass::A1LabelsOne {
        vec![Letter::X, Letter::Y(Label::cyc(0, r))]
    } else {
        std::iter::once(Letter::X)
            .chain((0..r).map(|e| Letter::Y(Label::cyc(i64::from(e), r))))
            .collect()
    };
    let n = alphabet.len();
    let mut out = Vec::new();
    if weight == 0 {
        return vec![Word::empty()];
    }
    let mut idx = vec![0usize; weight];
    loop {
        let w = Word(idx.iter().map(|&i| alphabet[i].clone()).collect());
        let keep = match class {
            WordClass::All => true,
            WordClass::A1 | WordClass::A1LabelsOne => w.in_a1(),
            WordClass::A0 => w.in_a0(),
        };
        if keep {
            out.push(w);
        }
        // Odometer increment, last position fastest.
        let mut pos = weight;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A non-commutative polynomial: a finite linear combination of words with
/// coefficients in `C`.  Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct NcPoly<C: Coeff = Q> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coeff> Default for NcPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> NcPoly<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    /// The unit (empty word with coefficient 1).
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    /// A single word with coefficient 1.
    pub fn from_word(w: Word) -> Self {
        Self::term(w, C::one())
    }

    /// `c · w`.
    pub fn term(w: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    /// A single letter.
    pub fn letter(l: Letter) -> Self {
        Self::from_word(Word(vec![l]))
    }

    /// The letter `x`.
    pub fn x() -> Self {
        Self::letter(Letter::X)
    }

    /// The letter `y_s`.
    pub fn y(s: Label) -> Self {
        Self::letter(Letter::Y(s))
    }

    /// Build from `(word, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    /// Iterate over `(word, coefficient)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    /// Consume into the term map.
    pub fn into_terms(self) -> BTreeMap<Word, C> {
        self.terms
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the polynomial has no terms (same as [`NcPoly::is_zero`]).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a word.
    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// `self += c · w`.
    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.mul_ref(c));
        }
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &Self) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.clone());
        }
    }

    /// `self -= other`.
    pub fn sub_assign(&mut self, other: &Self) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.neg_ref());
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Multiple by a rational.
    pub fn scale_q(&self, x: &Q) -> Self {
        self.scale(&C::from_q(x))
    }

    /// Concatenation product.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.mul_ref(b));
            }
        }
        out
    }

    /// Left multiplication by a word.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        NcPoly { terms: self.terms.iter().map(|(u, a)| (w.concat(u), a.clone())).collect() }
    }

    /// Right multiplication by a word.
    pub fn right_mul_word(&self, w: &Word) -> Self {
        NcPoly { terms: self.terms.iter().map(|(u, a)| (u.concat(w), a.clone())).collect() }
    }

    /// Apply `f` to every coefficient (dropping zeros).
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> NcPoly<D> {
        NcPoly::from_terms(self.terms.iter().map(|(w, a)| (w.clone(), f(a))))
    }

    /// Apply a word-wise linear rule `w ↦ f(w)`.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_scaled(&f(w)?, a);
        }
        Ok(out)
    }

    /// Keep only words of weight at most `w`.
    pub fn truncate(&self, w: usize) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(u, _)| u.weight() <= w)
                .map(|(u, a)| (u.clone(), a.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of weight `w`.
    pub fn component(&self, w: usize) -> Self {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(u, _)| u.weight() == w)
                .map(|(u, a)| (u.clone(), a.clone()))
                .collect(),
        }
    }

    /// Smallest weight of a term.
    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().map(Word::weight).min()
    }

    /// Largest weight of a term.
    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Word::weight).max()
    }

    /// Termwise membership in `A^1`.
    pub fn in_a1(&self) -> bool {
        self.terms.keys().all(Word::in_a1)
    }

    /// Termwise membership in `A^0`.
    pub fn in_a0(&self) -> bool {
        self.terms.keys().all(Word::in_a0)
    }

    /// The common label domain of all terms (`None` if no labels occur).
    pub fn label_domain(&self) -> Result<Option<LabelDomain>> {
        let mut dom: Option<LabelDomain> = None;
        for w in self.terms.keys() {
            if let Some(d) = w.label_domain()? {
                match dom {
                    None => dom = Some(d),
                    Some(e) if e == d => {}
                    Some(e) => return Err(Error::MixedDomains(format!("{e:?} and {d:?}"))),
                }
            }
        }
        Ok(dom)
    }

    /// Addition that rejects operands from different label domains.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        merge_domains(self.label_domain()?, other.label_domain()?)?;
        Ok(self + other)
    }

    /// Concatenation that rejects operands from different label domains.
    pub fn checked_concat(&self, other: &Self) -> Result<Self> {
        merge_domains(self.label_domain()?, other.label_domain()?)?;
        Ok(self.concat(other))
    }
}

fn merge_domains(a: Option<LabelDomain>, b: Option<LabelDomain>) -> Result<Option<LabelDomain>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::MixedDomains(format!("{x:?} and {y:?}"))),
        (Some(x), _) | (None, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

impl<C: Coeff> From<Word> for NcPoly<C> {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

impl<C: Coeff> Add for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn add(self, rhs: Self) -> NcPoly<C> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<C: Coeff> Sub for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn sub(self, rhs: Self) -> NcPoly<C> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<C: Coeff> Mul for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn mul(self, rhs: Self) -> NcPoly<C> {
        self.concat(rhs)
    }
}

impl<C: Coeff> Neg for &NcPoly<C> {
    type Output = NcPoly<C>;
    fn neg(self) -> NcPoly<C> {
        NcPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a.neg_ref())).collect() }
    }
}

impl<C: Coeff> fmt::Display for NcPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({a})·{w}")?;
        }
        Ok(())
    }
}
