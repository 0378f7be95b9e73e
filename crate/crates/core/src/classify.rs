//! Sliding and mixing algebras, and the length bounds they imply.
//!
//! Both classes ask that a cubic product lie in the span of a fixed set of
//! monomials in the same three elements (plus 1 when the algebra is
//! unital). The coefficients may in principle depend on the elements; this
//! module certifies the stronger *uniform* statement — one coefficient
//! vector valid for all `x, y, z` — by solving a linear system over every
//! basis triple, which suffices by trilinearity. Refutation is per triple:
//! a single `(x, y, z)` whose target leaves the span disproves the class.
//! Anything in between is reported as undetermined.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{Algebra, Word};
use crate::error::Result;
use crate::exactla::{Scalar, Subspace, Vector};
use crate::identities::{builtin, check_r_ended, check_suite, IdentityVerdict};

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const XYZ: [&str; 3] = ["x", "y", "z"];

fn l(i: usize) -> Word {
    Word::leaf(i)
}

fn n(a: Word, b: Word) -> Word {
    Word::node(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialSet {
    #[serde(rename = "Q_l")]
    Ql,
    #[serde(rename = "Q_r")]
    Qr,
    P,
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialSet::Ql => "Q_l",
            MonomialSet::Qr => "Q_r",
            MonomialSet::P => "P",
        })
    }
}

fn left_cubics() -> Vec<Word> {
    vec![
        n(l(X), n(l(Z), l(Y))),
        n(l(X), n(l(Y), l(Z))),
        n(l(Y), n(l(X), l(Z))),
        n(l(Y), n(l(Z), l(X))),
    ]
}

fn right_cubics() -> Vec<Word> {
    vec![
        n(n(l(X), l(Z)), l(Y)),
        n(n(l(Z), l(X)), l(Y)),
        n(n(l(Y), l(Z)), l(X)),
        n(n(l(Z), l(Y)), l(X)),
    ]
}

fn lower_terms() -> Vec<Word> {
    vec![
        n(l(X), l(Y)),
        n(l(Y), l(X)),
        n(l(X), l(Z)),
        n(l(Z), l(X)),
        n(l(Y), l(Z)),
        n(l(Z), l(Y)),
        l(X),
        l(Y),
        l(Z),
    ]
}

impl MonomialSet {
    /// The monomials in `x, y, z` (letters 0, 1, 2), cubic ones first.
    pub fn monomials(self) -> Vec<Word> {
        let mut out = match self {
            MonomialSet::Ql => left_cubics(),
            MonomialSet::Qr => right_cubics(),
            MonomialSet::P => {
                let mut v = right_cubics();
                v.extend(left_cubics());
                v
            }
        };
        out.extend(lower_terms());
        out
    }

    /// The degree-3 part.
    pub fn cubic(self) -> Vec<Word> {
        self.monomials().into_iter().filter(|w| w.len() == 3).collect()
    }
}

/// A member of a monomial set, or the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Word(Word),
    Unit,
}

impl Monomial {
    pub fn spell(&self) -> String {
        match self {
            Monomial::Word(w) => w.spell(&XYZ),
            Monomial::Unit => "1".into(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Word(w) => w.len(),
            Monomial::Unit => 0,
        }
    }

    fn eval(&self, algebra: &Algebra, args: &[Vector]) -> Vector {
        match self {
            Monomial::Word(w) => algebra.eval(w, args),
            Monomial::Unit => algebra.unit().expect("unit monomial needs a unital algebra").clone(),
        }
    }
}

fn monomials_for(algebra: &Algebra, set: MonomialSet) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = set.monomials().into_iter().map(Monomial::Word).collect();
    if algebra.is_unital() {
        out.push(Monomial::Unit);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `(xy)z`
    LeftNested,
    /// `z(xy)`
    RightNested,
}

impl Target {
    pub fn word(self) -> Word {
        match self {
            Target::LeftNested => n(n(l(X), l(Y)), l(Z)),
            Target::RightNested => n(l(Z), n(l(X), l(Y))),
        }
    }

    pub fn spell(self) -> String {
        self.word().spell(&XYZ)
    }
}

impl Serialize for Target {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.spell())
    }
}

/// `target = Σ coeff · monomial` for all `x, y, z` in the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Target,
    pub set: MonomialSet,
    /// One coefficient per monomial of the set, then the unit if unital.
    pub coefficients: Vec<(Monomial, Scalar)>,
}

impl Certificate {
    /// Monomials with nonzero coefficient.
    pub fn support(&self) -> Vec<&Monomial> {
        self.coefficients
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m)
            .collect()
    }

    /// Coefficient of the monomial spelled `spelling`, if it is in the set.
    pub fn coefficient(&self, spelling: &str) -> Option<&Scalar> {
        self.coefficients
            .iter()
            .find(|(m, _)| m.spell() == spelling)
            .map(|(_, c)| c)
    }

    /// `target(x, y, z) - Σ coeff · monomial(x, y, z)`.
    pub fn defect(&self, algebra: &Algebra, args: &[Vector; 3]) -> Vector {
        let mut out = algebra.eval(&self.target.word(), args);
        for (m, c) in &self.coefficients {
            if !c.is_zero() {
                out.add_scaled(&-c, &m.eval(algebra, args));
            }
        }
        out
    }

    /// E.g. `z(xy) = (zx)y - (zy)x`.
    pub fn equation(&self) -> String {
        let mut rhs = String::new();
        for (m, c) in self.coefficients.iter().filter(|(_, c)| !c.is_zero()) {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (rhs.is_empty(), negative) {
                (true, true) => rhs.push('-'),
                (true, false) => {}
                (false, true) => rhs.push_str(" - "),
                (false, false) => rhs.push_str(" + "),
            }
            if magnitude != "1" {
                rhs.push_str(&magnitude);
                rhs.push('·');
            }
            rhs.push_str(&m.spell());
        }
        if rhs.is_empty() {
            rhs.push('0');
        }
        format!("{} = {}", self.target.spell(), rhs)
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Coefficients<'a>(&'a [(Monomial, Scalar)]);
        impl Serialize for Coefficients<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(None)?;
                for (m, c) in self.0.iter().filter(|(_, c)| !c.is_zero()) {
                    map.serialize_entry(&m.spell(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("target", &self.target)?;
        map.serialize_entry("set", &self.set)?;
        map.serialize_entry("equation", &self.equation())?;
        map.serialize_entry("coefficients", &Coefficients(&self.coefficients))?;
        map.end()
    }
}

/// Solves for one coefficient vector valid for all `x, y, z`; free
/// coefficients are set to zero.
///
/// Every monomial has degree at most one in each variable, so the defect
/// is affine (not linear: `xy` ignores `z`) in each argument and vanishes
/// everywhere iff it vanishes whenever each argument is `0` or a basis
/// vector. Basis triples alone would miss that, e.g., `c·xy` does not
/// scale with `z`.
pub fn certify_uniform(algebra: &Algebra, target: Target, set: MonomialSet) -> Result<Option<Certificate>> {
    let d = algebra.dim();
    let monomials = monomials_for(algebra, set);
    let m = monomials.len();
    let target_word = target.word();
    let field = algebra.field();
    let mut points = vec![algebra.zero_vector()];
    points.extend((0..d).map(|i| algebra.basis_vector(i)));
    // Rows [monomial values | target value], one per triple and coordinate.
    let mut system = Subspace::zero(field, m + 1);
    for a in &points {
        for b in &points {
            for c in &points {
                let args = [a.clone(), b.clone(), c.clone()];
                let values: Vec<Vector> = monomials.iter().map(|mon| mon.eval(algebra, &args)).collect();
                let rhs = algebra.eval(&target_word, &args);
                for k in 0..d {
                    if rhs.get(k).is_zero() && values.iter().all(|v| v.get(k).is_zero()) {
                        continue;
                    }
                    let mut row: Vec<Scalar> = values.iter().map(|v| v.get(k).clone()).collect();
                    row.push(rhs.get(k).clone());
                    system.insert(&Vector::from_scalars(field, row)?)?;
                }
            }
        }
    }
    Ok(system.augmented_solution(m).map(|x| Certificate {
        target,
        set,
        coefficients: monomials.into_iter().zip(x.coords().iter().cloned()).collect(),
    }))
}

/// A triple on which the target lies outside the span of the monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub target: Target,
    pub set: MonomialSet,
    pub triple: [Vector; 3],
    /// The triple as 1-based basis indices, when it consists of basis vectors.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_triple: Option<[usize; 3]>,
    pub target_value: Vector,
    /// Dimension of the monomial span; the target raises it by one.
    pub span_dim: usize,
}

fn span_misses(
    algebra: &Algebra,
    target: Target,
    monomials: &[Monomial],
    args: &[Vector; 3],
) -> Result<Option<(Vector, usize)>> {
    let values: Vec<Vector> = monomials.iter().map(|m| m.eval(algebra, args)).collect();
    let span = Subspace::span(algebra.field(), algebra.dim(), &values)?;
    let value = algebra.eval(&target.word(), args);
    Ok((!span.contains(&value)?).then(|| (value, span.dim())))
}

/// Searches basis triples in lexicographic order, then `random` seeded
/// random triples, for one where `target` leaves the span of `set`.
pub fn refute_per_triple(
    algebra: &Algebra,
    target: Target,
    set: MonomialSet,
    random: usize,
    seed: u64,
) -> Result<Option<Refutation>> {
    let d = algebra.dim();
    let monomials = monomials_for(algebra, set);
    let basis: Vec<Vector> = (0..d).map(|i| algebra.basis_vector(i)).collect();
    let triple_at = |index: usize| [index / (d * d), (index / d) % d, index % d];
    let check = |index: usize| {
        let [a, b, c] = triple_at(index);
        let args = [basis[a].clone(), basis[b].clone(), basis[c].clone()];
        span_misses(algebra, target, &monomials, &args).map(|hit| hit.map(|h| (args, h)))
    };
    let first = (0..d * d * d)
        .into_par_iter()
        .map(|index| (index, check(index)))
        .find_first(|(_, r)| !matches!(r, Ok(None)));
    if let Some((index, result)) = first {
        let (triple, (target_value, span_dim)) = result?.expect("filtered to hits");
        let [a, b, c] = triple_at(index);
        return Ok(Some(Refutation {
            target,
            set,
            triple,
            basis_triple: Some([a + 1, b + 1, c + 1]),
            target_value,
            span_dim,
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let args = [
            Vector::random(algebra.field(), d, &mut rng),
            Vector::random(algebra.field(), d, &mut rng),
            Vector::random(algebra.field(), d, &mut rng),
        ];
        if let Some((target_value, span_dim)) = span_misses(algebra, target, &monomials, &args)? {
            return Ok(Some(Refutation {
                target,
                set,
                triple: args,
                basis_triple: None,
                target_value,
                span_dim,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Certified { certificates: Vec<Certificate> },
    Refuted { refutation: Refutation },
    Undetermined,
}

impl Verdict {
    pub fn status(&self) -> Status {
        match self {
            Verdict::Certified { .. } => Status::Certified,
            Verdict::Refuted { .. } => Status::Refuted,
            Verdict::Undetermined => Status::Undetermined,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Certified,
    Refuted,
    Undetermined,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Certified => "certified",
            Status::Refuted => "refuted",
            Status::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    /// Random triples tried after all basis triples.
    pub random_triples: usize,
    pub seed: u64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            random_triples: 0,
            seed: crate::DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    /// Both `(xy)z` and `z(xy)` over `P`.
    pub mixing: Verdict,
    /// `z(xy)` over `Q_r`.
    pub sliding_item1: Verdict,
    /// `(xy)z` over `Q_l`.
    pub sliding_item2: Verdict,
    pub is_mixing: Status,
    pub is_sliding: Status,
    /// Which notion a `certified` status refers to.
    pub notion: &'static str,
}

fn decide(algebra: &Algebra, target: Target, set: MonomialSet, cfg: &ClassifyConfig) -> Result<Verdict> {
    if let Some(c) = certify_uniform(algebra, target, set)? {
        return Ok(Verdict::Certified { certificates: vec![c] });
    }
    Ok(
        match refute_per_triple(algebra, target, set, cfg.random_triples, cfg.seed)? {
            Some(refutation) => Verdict::Refuted { refutation },
            None => Verdict::Undetermined,
        },
    )
}

pub fn classify(algebra: &Algebra, cfg: &ClassifyConfig) -> Result<ClassificationReport> {
    let left = decide(algebra, Target::LeftNested, MonomialSet::P, cfg)?;
    let right = decide(algebra, Target::RightNested, MonomialSet::P, cfg)?;
    let mixing = match (left, right) {
        (Verdict::Certified { certificates: mut a }, Verdict::Certified { certificates: b }) => {
            a.extend(b);
            Verdict::Certified { certificates: a }
        }
        (r @ Verdict::Refuted { .. }, _) | (_, r @ Verdict::Refuted { .. }) => r,
        _ => Verdict::Undetermined,
    };
    let sliding_item1 = decide(algebra, Target::RightNested, MonomialSet::Qr, cfg)?;
    let sliding_item2 = decide(algebra, Target::LeftNested, MonomialSet::Ql, cfg)?;
    let is_sliding = match (sliding_item1.status(), sliding_item2.status()) {
        (Status::Certified, _) | (_, Status::Certified) => Status::Certified,
        (Status::Refuted, Status::Refuted) => Status::Refuted,
        _ => Status::Undetermined,
    };
    Ok(ClassificationReport {
        is_mixing: mixing.status(),
        mixing,
        sliding_item1,
        sliding_item2,
        is_sliding,
        notion: "uniform coefficients over all x, y, z",
    })
}

/// Facts from which [`length_upper_bound`] derives bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundEvidence {
    pub classification: Option<ClassificationReport>,
    pub lie: Option<bool>,
    pub associative: Option<bool>,
    /// Smallest `r` for which the algebra is `r`-ended.
    pub r_ended: Option<usize>,
}

impl BoundEvidence {
    /// Runs every check a bound can come from. Identity checks that exceed
    /// `budget` are left unknown; `r`-ended checks run for `r = 2..=dim`
    /// until one holds or the budget is exceeded.
    pub fn gather(algebra: &Algebra, cfg: &ClassifyConfig, budget: u64) -> Result<Self> {
        let holds = |name: &str| -> Result<Option<bool>> {
            match check_suite(algebra, &builtin(name)?, budget) {
                Ok(v) => Ok(Some(v.holds())),
                Err(crate::Error::BudgetExceeded { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        };
        let mut r_ended = None;
        for r in 2..=algebra.dim().max(2) {
            match check_r_ended(algebra, r, budget) {
                Ok(IdentityVerdict::Holds) => {
                    r_ended = Some(r);
                    break;
                }
                Ok(_) => {}
                Err(crate::Error::BudgetExceeded { .. }) => break,
                Err(e) => return Err(e),
            }
        }
        Ok(BoundEvidence {
            classification: Some(classify(algebra, cfg)?),
            lie: holds("lie")?,
            associative: holds("associative")?,
            r_ended,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCandidate {
    pub value: u64,
    pub justification: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u64,
    pub justification: String,
    /// Every applicable bound, in a fixed order; the first minimum wins.
    pub candidates: Vec<BoundCandidate>,
}

/// The best provable upper bound on the length of the algebra, if any.
pub fn length_upper_bound(algebra: &Algebra, evidence: &BoundEvidence) -> Option<Bound> {
    let d = algebra.dim() as u64;
    let mut candidates = Vec::new();
    let mut push = |value: u64, justification: String| candidates.push(BoundCandidate { value, justification });
    if let Some(report) = &evidence.classification {
        if d >= 2 {
            if report.is_mixing == Status::Certified {
                push(d, "mixing".into());
            } else if report.is_sliding == Status::Certified {
                push(d, "sliding".into());
            }
        }
    }
    if evidence.lie == Some(true) && d >= 2 {
        push(d - 1, "Lie".into());
    }
    // A non-unital associative algebra such as xF[x]/(x^(d+1)) has length d,
    // so this bound needs the unit.
    if evidence.associative == Some(true) && algebra.is_unital() {
        push(d - 1, "associative".into());
    }
    if let Some(r) = evidence.r_ended {
        push((r as u64 - 1).saturating_mul(d), format!("r-ended, r = {r}"));
    }
    if algebra.is_unital() && (2..66).contains(&d) {
        push(1u64 << (d - 2), "unital, 2^(d-2)".into());
    }
    let best = candidates.iter().min_by_key(|c| c.value)?.clone();
    Some(Bound {
        value: best.value,
        justification: best.justification,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::identities::DEFAULT_BUDGET;

    fn cert(a: &Algebra, t: Target, s: MonomialSet) -> Certificate {
        certify_uniform(a, t, s).unwrap().expect("certificate exists")
    }

    #[test]
    fn monomial_sets() {
        let spell = |s: MonomialSet| s.monomials().iter().map(|w| w.spell(&XYZ)).collect::<Vec<_>>();
        assert_eq!(
            spell(MonomialSet::Ql),
            ["x(zy)", "x(yz)", "y(xz)", "y(zx)", "xy", "yx", "xz", "zx", "yz", "zy", "x", "y", "z"]
        );
        assert_eq!(spell(MonomialSet::Qr)[..4], ["(xz)y", "(zx)y", "(yz)x", "(zy)x"]);
        assert_eq!(MonomialSet::P.monomials().len(), 17);
        assert_eq!(MonomialSet::P.cubic().len(), 8);
        assert_eq!(MonomialSet::Ql.cubic().len(), 4);
        assert_eq!(Target::LeftNested.spell(), "(xy)z");
        assert_eq!(Target::RightNested.spell(), "z(xy)");
    }

    #[test]
    fn certificates_hold_on_random_triples() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cases = [
            (leibniz_b(4).unwrap(), Target::RightNested, MonomialSet::Qr),
            (zinbiel_z(4).unwrap(), Target::RightNested, MonomialSet::Qr),
            (novikov_c4(), Target::RightNested, MonomialSet::P),
            (novikov_c4(), Target::LeftNested, MonomialSet::P),
            (matrix_full(2).unwrap(), Target::LeftNested, MonomialSet::P),
        ];
        for (a, t, s) in cases {
            let c = cert(&a, t, s);
            for _ in 0..100 {
                let args = [
                    Vector::random(a.field(), a.dim(), &mut rng),
                    Vector::random(a.field(), a.dim(), &mut rng),
                    Vector::random(a.field(), a.dim(), &mut rng),
                ];
                assert!(c.defect(&a, &args).is_zero(), "{} on {}", c.equation(), a.name());
            }
        }
    }

    #[test]
    fn solver_certificates() {
        // Reference values from an independent rref of the same systems.
        let b5 = leibniz_b(5).unwrap();
        assert_eq!(cert(&b5, Target::RightNested, MonomialSet::Qr).equation(), "z(xy) = 0");
        assert_eq!(
            cert(&b5, Target::LeftNested, MonomialSet::P).equation(),
            "(xy)z = (xz)y"
        );
        assert_eq!(cert(&b5, Target::RightNested, MonomialSet::P).equation(), "z(xy) = 0");
        let z4 = zinbiel_z(4).unwrap();
        assert_eq!(
            cert(&z4, Target::RightNested, MonomialSet::Qr).equation(),
            "z(xy) = (xz)y + (zx)y"
        );
        assert_eq!(
            cert(&zinbiel_z5(), Target::RightNested, MonomialSet::Qr).equation(),
            "z(xy) = 0"
        );
        let c4 = novikov_c4();
        assert_eq!(
            cert(&c4, Target::RightNested, MonomialSet::P).equation(),
            "z(xy) = x(zy)"
        );
        assert_eq!(
            cert(&c4, Target::LeftNested, MonomialSet::P).equation(),
            "(xy)z = (xz)y"
        );
        let c5 = novikov_c(5).unwrap();
        assert_eq!(
            cert(&c5, Target::RightNested, MonomialSet::P).equation(),
            "z(xy) = x(zy)"
        );
    }

    fn manual(a: &Algebra, target: Target, set: MonomialSet, terms: &[(&str, i64)]) -> Certificate {
        let coefficients = monomials_for(a, set)
            .into_iter()
            .map(|m| {
                let c = terms.iter().find(|(s, _)| *s == m.spell()).map_or(0, |t| t.1);
                (m, Scalar::from_i64(a.field(), c))
            })
            .collect();
        Certificate {
            target,
            set,
            coefficients,
        }
    }

    fn valid_on_basis(a: &Algebra, c: &Certificate) -> bool {
        let mut points = vec![a.zero_vector()];
        points.extend((0..a.dim()).map(|i| a.basis_vector(i)));
        let n = points.len();
        (0..n * n * n).all(|i| {
            let args = [
                points[i / (n * n)].clone(),
                points[i / n % n].clone(),
                points[i % n].clone(),
            ];
            c.defect(a, &args).is_zero()
        })
    }

    #[test]
    fn class_identity_certificates_are_valid_too() {
        // Other valid coefficient choices, read off the class identities.
        for d in 3..=6 {
            let b = leibniz_b(d).unwrap();
            let c = manual(&b, Target::RightNested, MonomialSet::Qr, &[("(zx)y", 1), ("(zy)x", -1)]);
            assert!(valid_on_basis(&b, &c));
        }
        let z = zinbiel_z(5).unwrap();
        let c = manual(&z, Target::RightNested, MonomialSet::Qr, &[("(zx)y", 1), ("(xz)y", 1)]);
        assert!(valid_on_basis(&z, &c));
        let c4 = novikov_c4();
        let c = manual(
            &c4,
            Target::RightNested,
            MonomialSet::P,
            &[("(zx)y", 1), ("x(zy)", 1), ("(xz)y", -1)],
        );
        assert!(valid_on_basis(&c4, &c));
        let wrong = manual(&c4, Target::RightNested, MonomialSet::P, &[("(zx)y", 1)]);
        assert!(!valid_on_basis(&c4, &wrong));
    }

    #[test]
    fn known_refutations() {
        let bare = bare_01245();
        let r = refute_per_triple(&bare, Target::LeftNested, MonomialSet::P, 0, 0)
            .unwrap()
            .unwrap();
        assert_eq!(r.basis_triple, Some([2, 2, 3]));
        assert_eq!(r.target_value, bare.basis_vector(3));

        let c = novikov_c4();
        let r = refute_per_triple(&c, Target::LeftNested, MonomialSet::Ql, 0, 0)
            .unwrap()
            .unwrap();
        assert_eq!(r.basis_triple, Some([1, 1, 1]));
        assert_eq!(r.span_dim, 3);

        let z = zinbiel_z5();
        let r = refute_per_triple(&z, Target::LeftNested, MonomialSet::P, 0, 0)
            .unwrap()
            .unwrap();
        assert_eq!(r.basis_triple, Some([1, 2, 3]));
        assert_eq!(r.target_value, z.basis_vector(4));
        assert_eq!(r.span_dim, 4);
    }

    #[test]
    fn classification_examples() {
        let cfg = ClassifyConfig::default();
        let b5 = classify(&leibniz_b(5).unwrap(), &cfg).unwrap();
        assert_eq!((b5.is_mixing, b5.is_sliding), (Status::Certified, Status::Certified));

        let c4 = classify(&novikov_c4(), &cfg).unwrap();
        assert_eq!((c4.is_mixing, c4.is_sliding), (Status::Certified, Status::Refuted));

        let z5 = classify(&zinbiel_z5(), &cfg).unwrap();
        assert_eq!((z5.is_mixing, z5.is_sliding), (Status::Refuted, Status::Certified));

        for a in [vinberg_r4(), valya_v6()] {
            let r = classify(&a, &cfg).unwrap();
            for v in [&r.mixing, &r.sliding_item1, &r.sliding_item2] {
                assert_ne!(v.status(), Status::Certified, "{}", a.name());
            }
        }
    }

    fn bound(a: &Algebra) -> Bound {
        let ev = BoundEvidence::gather(a, &ClassifyConfig::default(), DEFAULT_BUDGET).unwrap();
        length_upper_bound(a, &ev).unwrap()
    }

    #[test]
    fn bounds() {
        let b = bound(&filiform_a(5).unwrap());
        assert_eq!((b.value, b.justification.as_str()), (4, "Lie"));
        let b = bound(&novikov_c(6).unwrap());
        assert_eq!((b.value, b.justification.as_str()), (6, "mixing"));
        let b = bound(&r_ended_e(5, 3).unwrap());
        assert_eq!((b.value, b.justification.as_str()), (10, "r-ended, r = 3"));
        let b = bound(&matrix_full(2).unwrap().commutator_algebra());
        assert_eq!((b.value, b.justification.as_str()), (3, "Lie"));
        let b = bound(&matrix_full(2).unwrap());
        assert_eq!((b.value, b.justification.as_str()), (3, "associative"));
    }

    #[test]
    fn no_bound_without_evidence() {
        assert_eq!(length_upper_bound(&vinberg_r4(), &BoundEvidence::default()), None);
    }
}
