//! The length filtration `L_0 ⊆ L_1 ⊆ L_2 ⊆ …` of a generating set.
//!
//! `L_k` is the span of all words of length at most `k` in the generators
//! (plus the unit, as the single word of length 0, when the algebra is
//! unital). [`filtrate`] builds an irreducible-word basis level by level:
//! a word of length `k` is a product `w' w''` of shorter words, and
//! expanding both factors in the already-built basis shows that
//!
//! ```text
//! L_k = L_{k-1} + span{ u v : u, v basis words, len(u) + len(v) = k }
//! ```
//!
//! so each level costs at most `dim(A)^2` products instead of an
//! exponential number of words. [`oracle_filtrate`] enumerates every word
//! and is kept as an independent check.
//!
//! A level can add nothing while a later one still grows (the unital bare
//! algebra `(0,1,2,4,5)` skips level 3), so iteration only stops once the
//! whole algebra is reached or no pair of basis words can reach the next
//! level, i.e. `k > 2 * (longest basis word)`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Word};
use crate::error::{Error, Result};
use crate::exactla::{Subspace, Vector};
use crate::identities::catalan;

/// A finite set of algebra elements, optionally labelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    vectors: Vec<Vector>,
    labels: Vec<Option<String>>,
}

impl GenSet {
    pub fn new(vectors: Vec<Vector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidParameter("generating set is empty".into()));
        }
        let labels = vec![None; vectors.len()];
        Ok(GenSet { vectors, labels })
    }

    /// Standard basis vectors `e_i` for the given 0-based indices.
    pub fn from_basis(algebra: &Algebra, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidParameter("generating set is empty".into()));
        }
        let mut vectors = Vec::with_capacity(indices.len());
        let mut labels = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= algebra.dim() {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    dim: algebra.dim(),
                });
            }
            vectors.push(algebra.basis_vector(i));
            labels.push(Some(algebra.basis_names()[i].clone()));
        }
        Ok(GenSet { vectors, labels })
    }

    pub fn full_basis(algebra: &Algebra) -> Self {
        let all: Vec<usize> = (0..algebra.dim()).collect();
        Self::from_basis(algebra, &all).expect("dimension is at least 1")
    }

    /// Parses a generating-set spec against `algebra`:
    ///
    /// * `1,0,0; 0,1/2,0` — semicolon-separated coordinate vectors;
    /// * `@basis` — every standard basis vector;
    /// * `@e1,e3` — selected basis vectors, by basis label, or by position
    ///   as `eN` / `xN` (1-based) when no label matches.
    pub fn parse(algebra: &Algebra, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix('@') {
            if rest.trim() == "basis" {
                return Ok(Self::full_basis(algebra));
            }
            let indices = rest
                .split(',')
                .map(|name| resolve_basis_name(algebra, name.trim()))
                .collect::<Result<Vec<_>>>()?;
            return Self::from_basis(algebra, &indices);
        }
        let vectors = spec
            .split(';')
            .map(|part| {
                let v = Vector::parse(algebra.field(), part)?;
                algebra.check_vector(&v)?;
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vectors)
    }

    /// Parses a list of set specs: either a JSON array of strings or one
    /// spec per line, skipping blank lines and `#` comments.
    pub fn parse_list(algebra: &Algebra, text: &str) -> Result<Vec<Self>> {
        let specs: Vec<String> = match serde_json::from_str::<Vec<String>>(text) {
            Ok(list) => list,
            Err(_) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect(),
        };
        specs.iter().map(|s| Self::parse(algebra, s)).collect()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    /// A spec string that [`GenSet::parse`] maps back to this set.
    pub fn describe(&self) -> String {
        if self.labels.iter().all(Option::is_some) {
            let names: Vec<&str> = self.labels.iter().map(|l| l.as_deref().unwrap()).collect();
            return format!("@{}", names.join(","));
        }
        self.vectors
            .iter()
            .map(|v| v.coords().iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("; ")
    }

    fn check(&self, algebra: &Algebra) -> Result<()> {
        self.vectors.iter().try_for_each(|v| algebra.check_vector(v))
    }
}

impl Serialize for GenSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.describe())
    }
}

fn resolve_basis_name(algebra: &Algebra, name: &str) -> Result<usize> {
    if let Some(i) = algebra.basis_names().iter().position(|b| b == name) {
        return Ok(i);
    }
    let positional = name
        .strip_prefix('e')
        .or_else(|| name.strip_prefix('x'))
        .and_then(|n| n.parse::<usize>().ok());
    match positional {
        Some(n) if (1..=algebra.dim()).contains(&n) => Ok(n - 1),
        Some(n) => Err(Error::IndexOutOfRange {
            index: n,
            dim: algebra.dim(),
        }),
        None => Err(Error::Malformed(format!("unknown basis element {name:?}"))),
    }
}

/// A basis element of some `L_k` given as an irreducible word.
///
/// `word` is `None` for the unit, the empty word of length 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub word: Option<Word>,
    pub vector: Vector,
    pub length: usize,
}

impl Witness {
    pub fn render(&self) -> String {
        match &self.word {
            Some(w) => w.to_string(),
            None => "1".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub k: usize,
    pub subspace: Subspace,
    /// `dim L_k - dim L_{k-1}` (for `k = 0`, `dim L_0`).
    pub growth: usize,
}

impl Level {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationTrace {
    pub ambient: usize,
    /// Levels `0..=K`, where `K` is the last level computed.
    pub levels: Vec<Level>,
    /// Irreducible basis of the final level, ordered by length.
    pub witnesses: Vec<Witness>,
    pub generating: bool,
    pub length: Option<usize>,
    /// First level equal to the final subspace.
    pub stabilized_at: usize,
}

impl FiltrationTrace {
    /// `dim L_k` for `k = 0..=K`.
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Level::dim).collect()
    }

    /// `dim L_k` for any `k`; levels past the end equal the final one.
    pub fn dim_at(&self, k: usize) -> usize {
        self.levels.get(k).unwrap_or_else(|| self.levels.last().unwrap()).dim()
    }

    pub fn final_subspace(&self) -> &Subspace {
        &self.levels.last().expect("level 0 always exists").subspace
    }

    pub fn final_dim(&self) -> usize {
        self.final_subspace().dim()
    }

    /// The sequence of witness lengths; a characteristic sequence when the
    /// set generates.
    pub fn sequence(&self) -> CharSeq {
        CharSeq(self.witnesses.iter().map(|w| w.length).collect())
    }
}

/// A characteristic sequence `(m_1, …, m_N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CharSeq(pub Vec<usize>);

impl CharSeq {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Largest `m_{j+1} - m_j`, or 0 for sequences shorter than two.
    pub fn max_step(&self) -> usize {
        self.0.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }
}

impl fmt::Display for CharSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn filtrate(algebra: &Algebra, set: &GenSet) -> Result<FiltrationTrace> {
    set.check(algebra)?;
    let d = algebra.dim();
    let mut current = Subspace::zero(algebra.field(), d);
    let mut witnesses: Vec<Witness> = Vec::new();
    // by_length[l] lists witness indices of exact length l >= 1.
    let mut by_length: Vec<Vec<usize>> = vec![Vec::new()];

    if let Some(unit) = algebra.unit() {
        current.insert(unit)?;
        witnesses.push(Witness {
            word: None,
            vector: unit.clone(),
            length: 0,
        });
    }
    let mut levels = vec![Level {
        k: 0,
        subspace: current.clone(),
        growth: current.dim(),
    }];

    let mut level1 = Vec::new();
    for (g, v) in set.vectors().iter().enumerate() {
        if current.insert(v)? {
            level1.push(witnesses.len());
            witnesses.push(Witness {
                word: Some(Word::leaf(g)),
                vector: v.clone(),
                length: 1,
            });
        }
    }
    let mut max_len = if level1.is_empty() { 0 } else { 1 };
    by_length.push(level1);
    levels.push(Level {
        k: 1,
        growth: current.dim() - levels[0].dim(),
        subspace: current.clone(),
    });

    let mut k = 2;
    while current.dim() < d && k <= 2 * max_len {
        let before = current.dim();
        let mut fresh = Vec::new();
        for i in 1..k {
            let j = k - i;
            if i > max_len || j > max_len {
                continue;
            }
            for &a in &by_length[i] {
                for &b in &by_length[j] {
                    let product = algebra.mul(&witnesses[a].vector, &witnesses[b].vector);
                    if current.insert(&product)? {
                        let word = Word::node(
                            witnesses[a].word.clone().expect("positive length"),
                            witnesses[b].word.clone().expect("positive length"),
                        );
                        fresh.push(Witness {
                            word: Some(word),
                            vector: product,
                            length: k,
                        });
                    }
                }
            }
        }
        let mut indices = Vec::with_capacity(fresh.len());
        for w in fresh {
            indices.push(witnesses.len());
            witnesses.push(w);
        }
        if !indices.is_empty() {
            max_len = k;
        }
        by_length.push(indices);
        levels.push(Level {
            k,
            growth: current.dim() - before,
            subspace: current.clone(),
        });
        k += 1;
    }

    let final_dim = current.dim();
    let stabilized_at = levels
        .iter()
        .position(|l| l.dim() == final_dim)
        .expect("final level matches itself");
    let generating = final_dim == d;
    Ok(FiltrationTrace {
        ambient: d,
        levels,
        witnesses,
        generating,
        length: generating.then_some(stabilized_at),
        stabilized_at,
    })
}

/// `l(S)`, the least `k` with `L_k(S) = A`.
pub fn length_of_set(algebra: &Algebra, set: &GenSet) -> Result<usize> {
    let trace = filtrate(algebra, set)?;
    trace.length.ok_or_else(|| not_generating(&trace))
}

pub fn characteristic_sequence(algebra: &Algebra, set: &GenSet) -> Result<CharSeq> {
    let trace = filtrate(algebra, set)?;
    if trace.generating {
        Ok(trace.sequence())
    } else {
        Err(not_generating(&trace))
    }
}

pub fn irreducible_basis(algebra: &Algebra, set: &GenSet) -> Result<Vec<Witness>> {
    Ok(filtrate(algebra, set)?.witnesses)
}

fn not_generating(trace: &FiltrationTrace) -> Error {
    Error::NotGenerating {
        dim: trace.final_dim(),
        ambient: trace.ambient,
        partial: trace.sequence().0,
    }
}

/// Default cap on the number of words [`oracle_filtrate`] may enumerate.
pub const ORACLE_WORD_LIMIT: u64 = 1_000_000;

/// Number of words of length `1..=k_max` in `letters` letters.
pub fn word_count(letters: usize, k_max: usize) -> u128 {
    (1..=k_max)
        .map(|k| {
            (letters as u128)
                .saturating_pow(k as u32)
                .saturating_mul(catalan(k - 1))
        })
        .fold(0u128, u128::saturating_add)
}

/// `dim L_k` for `k = 0..=k_max`, by enumerating every word.
///
/// Words of length `k` are all products `u v` with `u`, `v` words of
/// lengths summing to `k`; spans are taken with [`Subspace::span`].
pub fn oracle_filtrate(algebra: &Algebra, set: &GenSet, k_max: usize, limit: u64) -> Result<Vec<usize>> {
    set.check(algebra)?;
    let needed = word_count(set.len(), k_max);
    if needed > limit as u128 {
        return Err(Error::BudgetExceeded { needed, budget: limit });
    }
    let field = algebra.field();
    let d = algebra.dim();
    let mut spanning: Vec<Vector> = algebra.unit().into_iter().cloned().collect();
    let mut dims = vec![Subspace::span(field, d, &spanning)?.dim()];
    // Words of equal value have equal products, so each length keeps one
    // representative per distinct value.
    let mut values: Vec<Vec<Vector>> = vec![Vec::new()];
    for k in 1..=k_max {
        let mut level: Vec<Vector> = Vec::new();
        let mut seen = HashSet::new();
        if k == 1 {
            for v in set.vectors() {
                if seen.insert(v.clone()) {
                    level.push(v.clone());
                }
            }
        } else {
            for i in 1..k {
                for u in &values[i] {
                    for v in &values[k - i] {
                        let p = algebra.mul(u, v);
                        if seen.insert(p.clone()) {
                            level.push(p);
                        }
                    }
                }
            }
        }
        spanning.extend(level.iter().filter(|v| !v.is_zero()).cloned());
        dims.push(Subspace::span(field, d, &spanning)?.dim());
        values.push(level);
    }
    Ok(dims)
}
