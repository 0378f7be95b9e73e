//! Multilinear polynomial identities.
//!
//! A multilinear identity vanishes on all of `A` as soon as it vanishes on
//! every tuple of basis vectors, so checking `d^r` basis tuples is both
//! sound and complete. The alternating law `x·x = 0` is quadratic rather
//! than multilinear; it is checked on every `e_i` and every `e_i + e_j`,
//! which by bilinearity covers all of `A` (and, unlike `xy = -yx`, still
//! means something in characteristic 2).

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::algebra::{Algebra, Word};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, Scalar, Vector};

/// Default number of basis-tuple evaluations an identity check may use.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest `r` accepted by [`enumerate_bracketings`].
pub const MAX_BRACKETING: usize = 12;

/// The evaluation budget, taken from `ALGLEN_BUDGET` when set.
pub fn default_budget() -> u64 {
    std::env::var("ALGLEN_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub monomial: Word,
}

/// `Σ coeff · monomial(x_1, …, x_r) = 0`, each monomial using every
/// variable exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearIdentity {
    name: String,
    arity: usize,
    terms: Vec<Term>,
}

impl MultilinearIdentity {
    pub fn new(name: impl Into<String>, arity: usize, terms: Vec<Term>) -> Result<Self> {
        let name = name.into();
        if arity < 2 {
            return Err(Error::InvalidParameter(format!(
                "identity {name:?}: arity must be at least 2"
            )));
        }
        if terms.is_empty() {
            return Err(Error::InvalidParameter(format!("identity {name:?} has no terms")));
        }
        for t in &terms {
            let mut letters = t.monomial.letters();
            letters.sort_unstable();
            if letters != (0..arity).collect::<Vec<_>>() {
                return Err(Error::InvalidParameter(format!(
                    "identity {name:?}: monomial {} must use each of the {arity} variables exactly once",
                    t.monomial
                )));
            }
        }
        Ok(MultilinearIdentity { name, arity, terms })
    }

    /// Builds an identity from integer coefficients.
    pub fn from_ints(name: &str, arity: usize, terms: Vec<(i64, Word)>) -> Result<Self> {
        let terms = terms
            .into_iter()
            .map(|(c, monomial)| Term {
                coeff: BigRational::from_integer(c.into()),
                monomial,
            })
            .collect();
        Self::new(name, arity, terms)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    fn coefficients(&self, algebra: &Algebra) -> Result<Vec<Scalar>> {
        self.terms
            .iter()
            .map(|t| Scalar::from_rational(algebra.field(), &t.coeff))
            .collect()
    }

    /// The defect `Σ coeff · monomial(args)`.
    pub fn evaluate(&self, algebra: &Algebra, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        args.iter().try_for_each(|v| algebra.check_vector(v))?;
        let coeffs = self.coefficients(algebra)?;
        Ok(self.defect(algebra, &coeffs, args))
    }

    fn defect(&self, algebra: &Algebra, coeffs: &[Scalar], args: &[Vector]) -> Vector {
        let mut out = algebra.zero_vector();
        for (t, c) in self.terms.iter().zip(coeffs) {
            if !c.is_zero() {
                out.add_scaled(c, &algebra.eval(&t.monomial, args));
            }
        }
        out
    }

    /// Parses an identity file holding one identity.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdentityFile = serde_json::from_str(text)?;
        file.validate()
    }

    pub fn to_file(&self) -> IdentityFile {
        IdentityFile {
            name: self.name.clone(),
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|t| TermFile {
                    coeff: CoeffText::Text(t.coeff.to_string()),
                    monomial: t.monomial.to_json(),
                })
                .collect(),
        }
    }
}

fn variable_names(arity: usize) -> Vec<String> {
    if arity <= 3 {
        ["x", "y", "z"][..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for MultilinearIdentity {
    /// E.g. `(xy)z - x(yz) - (xz)y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = variable_names(self.arity);
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        for (n, t) in self.terms.iter().enumerate() {
            let negative = t.coeff < BigRational::zero();
            let magnitude = if negative { -t.coeff.clone() } else { t.coeff.clone() };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            f.write_str(&t.monomial.spell(&names))?;
        }
        Ok(())
    }
}

/// The JSON identity format:
///
/// ```json
/// { "name": "leibniz", "arity": 3,
///   "terms": [ {"coeff": "1", "monomial": [[1,2],3]},
///              {"coeff": "-1", "monomial": [1,[2,3]]},
///              {"coeff": "-1", "monomial": [[1,3],2]} ] }
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityFile {
    pub name: String,
    pub arity: usize,
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coeff: CoeffText,
    pub monomial: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffText {
    Text(String),
    Int(i64),
}

impl IdentityFile {
    pub fn validate(&self) -> Result<MultilinearIdentity> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let coeff = match &t.coeff {
                    CoeffText::Text(s) => parse_rational(s)?,
                    CoeffText::Int(n) => BigRational::from_integer((*n).into()),
                };
                Ok(Term {
                    coeff,
                    monomial: Word::from_json(&t.monomial)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MultilinearIdentity::new(self.name.clone(), self.arity, terms)
    }
}

/// A class definition: multilinear identities, plus the alternating law
/// when `alternating` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySuite {
    pub name: String,
    pub identities: Vec<MultilinearIdentity>,
    pub alternating: bool,
}

impl IdentitySuite {
    pub fn single(identity: MultilinearIdentity) -> Self {
        IdentitySuite {
            name: identity.name().to_string(),
            identities: vec![identity],
            alternating: false,
        }
    }
}

pub const BUILTIN_NAMES: [&str; 9] = [
    "associative",
    "commutative",
    "anticommutative",
    "lie",
    "leibniz",
    "novikov",
    "zinbiel",
    "vinberg",
    "valya",
];

fn l(i: usize) -> Word {
    Word::leaf(i)
}

fn n(a: Word, b: Word) -> Word {
    Word::node(a, b)
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

fn anticommutativity() -> MultilinearIdentity {
    MultilinearIdentity::from_ints("anticommutativity", 2, vec![(1, n(l(X), l(Y))), (1, n(l(Y), l(X)))]).unwrap()
}

fn jacobiator(name: &str, a: Word, b: Word, c: Word, arity: usize) -> MultilinearIdentity {
    let terms = vec![
        (1, n(n(a.clone(), b.clone()), c.clone())),
        (1, n(n(b.clone(), c.clone()), a.clone())),
        (1, n(n(c, a), b)),
    ];
    MultilinearIdentity::from_ints(name, arity, terms).unwrap()
}

/// The defining identities of a named class.
pub fn builtin(name: &str) -> Result<IdentitySuite> {
    let xyz = |a: usize, b: usize, c: usize| n(n(l(a), l(b)), l(c));
    let x_yz = |a: usize, b: usize, c: usize| n(l(a), n(l(b), l(c)));
    let ids = |list: Vec<(&str, Vec<(i64, Word)>)>, arity: usize| -> Vec<MultilinearIdentity> {
        list.into_iter()
            .map(|(id, terms)| MultilinearIdentity::from_ints(id, arity, terms).unwrap())
            .collect()
    };
    let (identities, alternating) = match name {
        "associative" => (
            ids(vec![("associativity", vec![(1, xyz(X, Y, Z)), (-1, x_yz(X, Y, Z))])], 3),
            false,
        ),
        "commutative" => (
            ids(
                vec![("commutativity", vec![(1, n(l(X), l(Y))), (-1, n(l(Y), l(X)))])],
                2,
            ),
            false,
        ),
        "anticommutative" => (vec![anticommutativity()], false),
        "lie" => (
            vec![anticommutativity(), jacobiator("jacobi", l(X), l(Y), l(Z), 3)],
            true,
        ),
        "leibniz" => (
            ids(
                vec![(
                    "leibniz",
                    vec![(1, xyz(X, Y, Z)), (-1, x_yz(X, Y, Z)), (-1, xyz(X, Z, Y))],
                )],
                3,
            ),
            false,
        ),
        "novikov" => (
            ids(
                vec![
                    (
                        "left-symmetry",
                        vec![
                            (1, x_yz(X, Y, Z)),
                            (-1, xyz(X, Y, Z)),
                            (-1, x_yz(Y, X, Z)),
                            (1, xyz(Y, X, Z)),
                        ],
                    ),
                    ("right-commutativity", vec![(1, xyz(X, Y, Z)), (-1, xyz(X, Z, Y))]),
                ],
                3,
            ),
            false,
        ),
        "zinbiel" => (
            ids(
                vec![(
                    "zinbiel",
                    vec![(1, x_yz(X, Y, Z)), (-1, xyz(X, Y, Z)), (-1, xyz(Y, X, Z))],
                )],
                3,
            ),
            false,
        ),
        "vinberg" => (
            ids(
                vec![(
                    "vinberg",
                    vec![
                        (1, xyz(X, Y, Z)),
                        (-1, x_yz(X, Y, Z)),
                        (-1, xyz(X, Z, Y)),
                        (1, x_yz(X, Z, Y)),
                    ],
                )],
                3,
            ),
            false,
        ),
        "valya" => (
            vec![
                anticommutativity(),
                jacobiator("valya", n(l(0), l(1)), n(l(2), l(3)), n(l(4), l(5)), 6),
            ],
            false,
        ),
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };
    Ok(IdentitySuite {
        name: name.to_string(),
        identities,
        alternating,
    })
}

/// Result of an identity check. `tuple` holds 0-based basis indices; for
/// the alternating law a pair `[i, j]` stands for `x = e_i + e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IdentityVerdict {
    Holds,
    Counterexample {
        identity: String,
        #[serde(serialize_with = "one_based")]
        tuple: Vec<usize>,
        defect: Vector,
    },
}

fn one_based<S: Serializer>(tuple: &[usize], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(tuple.iter().map(|i| i + 1))
}

impl IdentityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityVerdict::Holds)
    }
}

fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn decode_tuple(mut index: usize, d: usize, r: usize) -> Vec<usize> {
    let mut tuple = vec![0; r];
    for slot in tuple.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    tuple
}

/// Checks `id` on every basis tuple; the counterexample, if any, is the
/// lexicographically first failing tuple.
pub fn check_identity(algebra: &Algebra, id: &MultilinearIdentity, budget: u64) -> Result<IdentityVerdict> {
    let d = algebra.dim();
    let r = id.arity();
    let total = (d as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    check_budget(total, budget)?;
    let coeffs = id.coefficients(algebra)?;
    let basis: Vec<Vector> = (0..d).map(|i| algebra.basis_vector(i)).collect();
    let defect_at = |index: usize| {
        let tuple = decode_tuple(index, d, r);
        let args: Vec<Vector> = tuple.iter().map(|&i| basis[i].clone()).collect();
        (tuple, id.defect(algebra, &coeffs, &args))
    };
    let first = (0..total as usize)
        .into_par_iter()
        .find_first(|&index| !defect_at(index).1.is_zero());
    Ok(match first {
        None => IdentityVerdict::Holds,
        Some(index) => {
            let (tuple, defect) = defect_at(index);
            IdentityVerdict::Counterexample {
                identity: id.name().to_string(),
                tuple,
                defect,
            }
        }
    })
}

/// Checks `x·x = 0` on every `e_i` and every `e_i + e_j` with `i < j`.
pub fn check_alternating(algebra: &Algebra) -> IdentityVerdict {
    let d = algebra.dim();
    for i in 0..d {
        let e = algebra.basis_vector(i);
        let sq = algebra.mul(&e, &e);
        if !sq.is_zero() {
            return IdentityVerdict::Counterexample {
                identity: "alternating".into(),
                tuple: vec![i],
                defect: sq,
            };
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            let x = &algebra.basis_vector(i) + &algebra.basis_vector(j);
            let sq = algebra.mul(&x, &x);
            if !sq.is_zero() {
                return IdentityVerdict::Counterexample {
                    identity: "alternating".into(),
                    tuple: vec![i, j],
                    defect: sq,
                };
            }
        }
    }
    IdentityVerdict::Holds
}

/// Checks every identity of the suite in order and reports the first
/// failure.
pub fn check_suite(algebra: &Algebra, suite: &IdentitySuite, budget: u64) -> Result<IdentityVerdict> {
    for id in &suite.identities {
        let verdict = check_identity(algebra, id, budget)?;
        if !verdict.holds() {
            return Ok(verdict);
        }
    }
    if suite.alternating {
        return Ok(check_alternating(algebra));
    }
    Ok(IdentityVerdict::Holds)
}

/// Catalan number `C_n`, saturating.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = match c.checked_mul(2 * (2 * i + 1)) {
            Some(v) => v / (i + 2),
            None => return u128::MAX,
        };
    }
    c
}

/// All `Catalan(r-1)` bracketings of `y_1 ⋯ y_r` (leaves `0..r` in
/// order), left-heavy splits first: for `r = 3`, `(y1y2)y3` then
/// `y1(y2y3)`.
pub fn enumerate_bracketings(r: usize) -> Result<Vec<Word>> {
    if r == 0 || r > MAX_BRACKETING {
        return Err(Error::InvalidParameter(format!(
            "bracketings are enumerated for 1 <= r <= {MAX_BRACKETING}, got {r}"
        )));
    }
    Ok(shapes(0, r))
}

fn shapes(offset: usize, r: usize) -> Vec<Word> {
    if r == 1 {
        return vec![Word::leaf(offset)];
    }
    let mut out = Vec::new();
    for split in (1..r).rev() {
        let left = shapes(offset, split);
        let right = shapes(offset + split, r - split);
        for a in &left {
            for b in &right {
                out.push(Word::node(a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Nonzero values of `shape` over all basis assignments, with the
/// assignment, in lexicographic order of assignment.
fn shape_values(algebra: &Algebra, shape: &Word, basis: &[Vector]) -> Vec<(Vec<usize>, Vector)> {
    match shape {
        Word::Leaf(_) => basis.iter().enumerate().map(|(i, v)| (vec![i], v.clone())).collect(),
        Word::Node(a, b) => {
            let left = shape_values(algebra, a, basis);
            let right = shape_values(algebra, b, basis);
            let mut out = Vec::new();
            for (ta, va) in &left {
                for (tb, vb) in &right {
                    let p = algebra.mul(va, vb);
                    if !p.is_zero() {
                        let mut t = ta.clone();
                        t.extend_from_slice(tb);
                        out.push((t, p));
                    }
                }
            }
            out
        }
    }
}

/// Checks `x · v = 0` for every product `v` of `r` elements under every
/// bracketing. Failures are ordered by bracketing, then by the tuple
/// `(x, y_1, …, y_r)`.
pub fn check_r_ended(algebra: &Algebra, r: usize, budget: u64) -> Result<IdentityVerdict> {
    let d = algebra.dim() as u128;
    let needed = d
        .checked_pow(r as u32 + 1)
        .and_then(|n| n.checked_mul(catalan(r.saturating_sub(1))))
        .unwrap_or(u128::MAX);
    check_budget(needed, budget)?;
    let basis: Vec<Vector> = (0..algebra.dim()).map(|i| algebra.basis_vector(i)).collect();
    let names: Vec<String> = (1..=r).map(|i| format!("y{i}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    for shape in enumerate_bracketings(r)? {
        let values = shape_values(algebra, &shape, &basis);
        for (x, e) in basis.iter().enumerate() {
            for (ys, v) in &values {
                let p = algebra.mul(e, v);
                if !p.is_zero() {
                    let mut tuple = vec![x];
                    tuple.extend_from_slice(ys);
                    let spelled = shape.spell(&names);
                    let identity = if r == 1 {
                        "x*y1".to_string()
                    } else {
                        format!("x*({spelled})")
                    };
                    return Ok(IdentityVerdict::Counterexample {
                        identity,
                        tuple,
                        defect: p,
                    });
                }
            }
        }
    }
    Ok(IdentityVerdict::Holds)
}
