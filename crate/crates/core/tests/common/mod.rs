#![allow(dead_code)]

use alglen::exactla::{Field, Scalar};
use alglen::families::*;
use alglen::Algebra;
use proptest::prelude::*;

/// Every named example, with small parameters.
pub fn example_algebras() -> Vec<Algebra> {
    let mut out = Vec::new();
    for d in 3..=5 {
        out.push(leibniz_b(d).unwrap());
        out.push(filiform_a(d).unwrap());
        out.push(novikov_c(d).unwrap());
        out.push(zinbiel_z(d).unwrap());
    }
    out.extend([novikov_c4(), zinbiel_z5(), bare_01245(), vinberg_r4(), valya_v6()]);
    for (d, r) in [(3, 2), (4, 3), (5, 3), (5, 4)] {
        out.push(r_ended_e(d, r).unwrap());
    }
    for n in 1..=3 {
        out.push(coordinatewise(n).unwrap());
    }
    out.push(matrix_full(2).unwrap());
    out.push(matrix_full(2).unwrap().commutator_algebra());
    out
}

pub fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        3 => Just(Field::Rational),
        1 => prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| Field::prime(p).unwrap()),
    ]
}

type Raw = Vec<(usize, usize, usize, i64)>;

fn raw_constants(d: usize, max_terms: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec((0..d, 0..d, 0..d, -2i64..=2), 0..=max_terms)
}

fn build(name: &str, field: Field, d: usize, raw: Raw) -> Algebra {
    let mut seen = std::collections::BTreeMap::new();
    for (i, j, k, c) in raw {
        seen.insert((i, j, k), c);
    }
    let constants = seen
        .into_iter()
        .map(|((i, j, k), c)| (i, j, k, Scalar::from_i64(field, c)));
    Algebra::new(name, field, d, None, constants).unwrap()
}

/// An arbitrary algebra of dimension `1..=max_dim` with small integer
/// structure constants.
pub fn algebra_strategy(max_dim: usize) -> impl Strategy<Value = Algebra> {
    (1..=max_dim, field_strategy())
        .prop_flat_map(|(d, field)| (Just(d), Just(field), raw_constants(d, 2 * d * d)))
        .prop_map(|(d, field, raw)| build("random", field, d, raw))
}

/// `e_i e_j` in the span of `e_k` with `k >= i + j` (1-based), hence
/// `d`-ended.
pub fn graded_nilpotent_strategy(max_dim: usize) -> impl Strategy<Value = Algebra> {
    (2..=max_dim)
        .prop_flat_map(|d| (Just(d), raw_constants(d, 2 * d * d)))
        .prop_map(|(d, raw)| {
            let raw = raw.into_iter().filter(|&(i, j, k, _)| k > i + j).collect();
            build("graded", Field::Rational, d, raw)
        })
}

/// A random algebra with a unit `e_1` adjoined.
pub fn unital_strategy(max_dim: usize) -> impl Strategy<Value = Algebra> {
    (2..=max_dim)
        .prop_flat_map(|d| (Just(d), raw_constants(d, 2 * d)))
        .prop_map(|(d, raw)| {
            let mut raw: Raw = raw.into_iter().filter(|&(i, j, _, _)| i > 0 && j > 0).collect();
            for i in 0..d {
                raw.push((0, i, i, 1));
                if i > 0 {
                    raw.push((i, 0, i, 1));
                }
            }
            build("unital", Field::Rational, d, raw)
        })
}
