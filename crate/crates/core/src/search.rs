//! Lower bounds on the length of an algebra by trying generating sets.
//!
//! The length of an algebra is a maximum over infinitely many generating
//! sets, so a search only ever proves a lower bound. It is reported as the
//! exact length only when it meets a proven upper bound.

use std::ops::RangeInclusive;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::classify::Bound;
use crate::error::{Error, Result};
use crate::exactla::Vector;
use crate::filtration::{filtrate, length_of_set, GenSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Standard-basis subsets of every size `1..=max_subset` are tried.
    pub max_subset: usize,
    /// Number of random generating sets.
    pub random: usize,
    /// Sizes of random sets, drawn uniformly.
    pub set_size: RangeInclusive<usize>,
    pub seed: u64,
    /// Extra sets, tried after the basis subsets.
    pub candidates: Vec<GenSet>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_subset: 2,
            random: 0,
            set_size: 1..=2,
            seed: crate::DEFAULT_SEED,
            candidates: Vec::new(),
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.max_subset == 0 {
            return Err(Error::InvalidParameter("subset size must be at least 1".into()));
        }
        if *self.set_size.start() == 0 || self.set_size.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "random set sizes {}..{} must be a nonempty range of positive sizes",
                self.set_size.start(),
                self.set_size.end()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Basis,
    Candidate,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub set: GenSet,
    pub source: Source,
    pub generating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub best: Option<usize>,
    pub witness: Option<GenSet>,
    /// True iff `best` equals the upper bound.
    pub exact: bool,
    pub bound: Option<Bound>,
    pub attempts: Vec<Attempt>,
}

fn candidate_sets(algebra: &Algebra, cfg: &SearchConfig) -> Result<Vec<(GenSet, Source)>> {
    let d = algebra.dim();
    let mut sets = Vec::new();
    for size in 1..=cfg.max_subset.min(d) {
        for subset in (0..d).combinations(size) {
            sets.push((GenSet::from_basis(algebra, &subset)?, Source::Basis));
        }
    }
    sets.extend(cfg.candidates.iter().map(|s| (s.clone(), Source::Candidate)));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random {
        let size = rng.gen_range(cfg.set_size.clone());
        let vectors = (0..size)
            .map(|_| Vector::random(algebra.field(), d, &mut rng))
            .collect();
        sets.push((GenSet::new(vectors)?, Source::Random));
    }
    Ok(sets)
}

/// Tries basis subsets, then the given candidates, then random sets, and
/// keeps the longest generating set (the first one on ties).
pub fn search_length(algebra: &Algebra, cfg: &SearchConfig, bound: Option<&Bound>) -> Result<SearchResult> {
    cfg.validate()?;
    let sets = candidate_sets(algebra, cfg)?;
    let attempts = sets
        .into_par_iter()
        .map(|(set, source)| {
            let trace = filtrate(algebra, &set)?;
            Ok(Attempt {
                set,
                source,
                generating: trace.generating,
                length: trace.length,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<(usize, &GenSet)> = None;
    for a in &attempts {
        if let Some(len) = a.length {
            if best.is_none_or(|(b, _)| len > b) {
                best = Some((len, &a.set));
            }
        }
    }
    let exact = matches!((best, bound), (Some((b, _)), Some(u)) if b as u64 == u.value);
    Ok(SearchResult {
        best: best.map(|(b, _)| b),
        witness: best.map(|(_, s)| s.clone()),
        exact,
        bound: bound.cloned(),
        attempts,
    })
}

/// Whether `set` generates the algebra with exactly the claimed length.
pub fn verify_set_claim(algebra: &Algebra, set: &GenSet, claimed: usize) -> Result<bool> {
    match length_of_set(algebra, set) {
        Ok(len) => Ok(len == claimed),
        Err(Error::NotGenerating { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}
