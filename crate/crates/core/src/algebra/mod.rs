//! Finite-dimensional algebras given by structure constants.

mod file;
mod word;

use serde::Serialize;

pub use file::{AlgebraFile, OutputTerms, ProductEntry};
pub use word::Word;

use crate::error::{Error, Result};
use crate::exactla::{solve, Field, Scalar, Vector};

/// An algebra with basis `e_0..e_{d-1}` and products
/// `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// Only nonzero structure constants are stored. The unit, if any, is found
/// once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    field: Field,
    dim: usize,
    basis: Vec<String>,
    /// `table[i * dim + j]` holds the nonzero `(k, c[i][j][k])`, sorted by `k`.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Vector>,
}

/// Name, dimension, field and unitality of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub name: String,
    pub dim: usize,
    pub field: Field,
    pub unital: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vector>,
    pub nonzero_constants: usize,
}

/// Largest supported dimension; the product table has `dim^2` entries.
pub const MAX_DIM: usize = 1024;

impl Algebra {
    /// Builds an algebra from 0-based `(i, j, k, c)` triples. Zero
    /// coefficients are dropped; a repeated `(i, j, k)` is an error.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        basis: Option<Vec<String>>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidParameter(format!(
                "dimension must be between 1 and {MAX_DIM}, got {dim}"
            )));
        }
        let basis = match basis {
            Some(b) if b.len() != dim => {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: b.len(),
                })
            }
            Some(b) => b,
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
        };
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in constants {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if c.field() != field {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            let entry = &mut table[i * dim + j];
            if entry.iter().any(|(kk, _)| *kk == k) {
                return Err(Error::DuplicateProduct {
                    left: i + 1,
                    right: j + 1,
                    out: k + 1,
                });
            }
            entry.push((k, c));
        }
        for entry in &mut table {
            entry.retain(|(_, c)| !c.is_zero());
            entry.sort_by_key(|(k, _)| *k);
        }
        let mut algebra = Algebra {
            name: name.into(),
            field,
            dim,
            basis,
            table,
            unit: None,
        };
        algebra.unit = algebra.detect_unit();
        Ok(algebra)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field, self.dim)
    }

    /// Nonzero `(k, c)` with `e_i e_j = sum c e_k`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    /// All nonzero structure constants as `(i, j, k, c)`, 0-based.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, entry)| entry.iter().map(move |(k, c)| (ij / self.dim, ij % self.dim, *k, c)))
    }

    pub fn nonzero_constants(&self) -> usize {
        self.table.iter().map(Vec::len).sum()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            name: self.name.clone(),
            dim: self.dim,
            field: self.field,
            unital: self.is_unital(),
            unit: self.unit.clone(),
            nonzero_constants: self.nonzero_constants(),
        }
    }

    pub fn check_vector(&self, v: &Vector) -> Result<()> {
        v.check_shape(self.field, self.dim)
    }

    /// The bilinear product `u v`.
    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = self.zero_vector();
        let right: Vec<usize> = v.support().collect();
        if right.is_empty() {
            return out;
        }
        for i in u.support() {
            for &j in &right {
                let entry = self.product(i, j);
                if entry.is_empty() {
                    continue;
                }
                let uv = u.get(i) * v.get(j);
                let coords = out.coords_mut();
                for (k, c) in entry {
                    coords[*k] = &coords[*k] + &(&uv * c);
                }
            }
        }
        out
    }

    /// Evaluates `word` with letter `i` bound to `assignment[i]`.
    pub fn evaluate_word(&self, word: &Word, assignment: &[Vector]) -> Result<Vector> {
        for v in assignment {
            self.check_vector(v)?;
        }
        let max = word.max_letter();
        if max >= assignment.len() {
            return Err(Error::UnassignedLeaf(max + 1));
        }
        Ok(self.eval(word, assignment))
    }

    pub(crate) fn eval(&self, word: &Word, assignment: &[Vector]) -> Vector {
        match word {
            Word::Leaf(i) => assignment[*i].clone(),
            Word::Node(l, r) => {
                let left = self.eval(l, assignment);
                if left.is_zero() {
                    return left;
                }
                self.mul(&left, &self.eval(r, assignment))
            }
        }
    }

    /// Solves `e e_i = e_i e = e_i` for all `i`; the unit of an algebra is
    /// unique when it exists.
    fn detect_unit(&self) -> Option<Vector> {
        let d = self.dim;
        let mut rows = Vec::with_capacity(2 * d * d);
        let mut rhs = Vec::with_capacity(2 * d * d);
        for i in 0..d {
            for k in 0..d {
                let mut left = self.zero_vector();
                let mut right = self.zero_vector();
                for a in 0..d {
                    if let Some((_, c)) = self.product(a, i).iter().find(|(kk, _)| *kk == k) {
                        left.coords_mut()[a] = c.clone();
                    }
                    if let Some((_, c)) = self.product(i, a).iter().find(|(kk, _)| *kk == k) {
                        right.coords_mut()[a] = c.clone();
                    }
                }
                let delta = Scalar::from_i64(self.field, i64::from(i == k));
                rows.push(left);
                rhs.push(delta.clone());
                rows.push(right);
                rhs.push(delta);
            }
        }
        let b = Vector::from_scalars(self.field, rhs).expect("field-consistent rhs");
        let unit = solve(&rows, &b).expect("well-shaped unit system")?;
        debug_assert!((0..d).all(|i| {
            let e = self.basis_vector(i);
            self.mul(&unit, &e) == e && self.mul(&e, &unit) == e
        }));
        Some(unit)
    }

    /// The algebra with product `[x, y] = xy - yx` on the same space.
    pub fn commutator_algebra(&self) -> Algebra {
        let d = self.dim;
        let mut constants = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut coeffs = vec![Scalar::zero(self.field); d];
                for (k, c) in self.product(i, j) {
                    coeffs[*k] = &coeffs[*k] + c;
                }
                for (k, c) in self.product(j, i) {
                    coeffs[*k] = &coeffs[*k] - c;
                }
                constants.extend(
                    coeffs
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (i, j, k, c)),
                );
            }
        }
        Algebra::new(
            format!("{}^(-)", self.name),
            self.field,
            d,
            Some(self.basis.clone()),
            constants,
        )
        .expect("commutator constants are in range")
    }

    /// Whether every product of basis elements vanishes.
    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn int(n: i64) -> Scalar {
        Scalar::from_i64(Q, n)
    }

    /// 2x2 matrix units in the order E11, E12, E21, E22.
    fn m2() -> Algebra {
        let idx = |r: usize, c: usize| 2 * r + c;
        let mut constants = Vec::new();
        for (i, j, k, l) in itertools::iproduct!(0..2, 0..2, 0..2, 0..2) {
            if j == k {
                constants.push((idx(i, j), idx(k, l), idx(i, l), int(1)));
            }
        }
        Algebra::new("M2", Q, 4, None, constants).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Algebra::new("bad", Q, 3, None, [(0, 0, 5, int(1))]),
            Err(Error::IndexOutOfRange { index: 5, dim: 3 })
        ));
        assert!(matches!(
            Algebra::new("bad", Q, 3, None, [(0, 0, 1, int(1)), (0, 0, 1, int(2))]),
            Err(Error::DuplicateProduct {
                left: 1,
                right: 1,
                out: 2
            })
        ));
        assert!(Algebra::new("bad", Q, 0, None, []).is_err());
        assert!(Algebra::new("huge", Q, MAX_DIM + 1, None, []).is_err());
        assert!(Algebra::from_json(r#"{"name":"huge","field":{"type":"rational"},"dim":1e30}"#).is_err());
        let a = Algebra::new("z", Q, 2, None, [(0, 0, 1, int(0))]).unwrap();
        assert_eq!(a.nonzero_constants(), 0);
    }

    #[test]
    fn unit_detection() {
        let plane = Algebra::new("F2", Q, 2, None, [(0, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap();
        assert_eq!(plane.unit(), Some(&Vector::from_i64s(Q, &[1, 1])));

        let m = m2();
        assert_eq!(m.unit(), Some(&Vector::from_i64s(Q, &[1, 0, 0, 1])));

        let b3 = Algebra::new("B3", Q, 3, None, [(0, 0, 1, int(1)), (1, 0, 2, int(1))]).unwrap();
        assert!(b3.unit().is_none());
    }

    #[test]
    fn commutators() {
        let m = m2();
        let lie = m.commutator_algebra();
        assert_eq!(lie.name(), "M2^(-)");
        assert!(lie.unit().is_none());
        // [E11, E12] = E12
        let e11 = m.basis_vector(0);
        let e12 = m.basis_vector(1);
        assert_eq!(lie.multiply(&e11, &e12).unwrap(), e12);

        let g1 = Vector::from_i64s(Q, &[1, -1, 0, 0]);
        let g2 = Vector::from_i64s(Q, &[0, 0, 1, 1]);
        assert_eq!(lie.multiply(&g1, &g2).unwrap(), Vector::from_i64s(Q, &[-1, -1, -1, 1]));

        let plane = Algebra::new("F2", Q, 2, None, [(0, 0, 0, int(1)), (1, 1, 1, int(1))]).unwrap();
        assert!(plane.commutator_algebra().is_zero_product());
    }

    #[test]
    fn word_evaluation() {
        // Novikov C4: x1x1 = x2, x1x2 = x3, x2x1 = x4.
        let c4 = Algebra::new(
            "C4",
            Q,
            4,
            None,
            [(0, 0, 1, int(1)), (0, 1, 2, int(1)), (1, 0, 3, int(1))],
        )
        .unwrap();
        let x1 = c4.basis_vector(0);
        let right = Word::node(Word::leaf(0), Word::node(Word::leaf(0), Word::leaf(0)));
        let left = Word::node(Word::node(Word::leaf(0), Word::leaf(0)), Word::leaf(0));
        assert_eq!(
            c4.evaluate_word(&right, std::slice::from_ref(&x1)).unwrap(),
            c4.basis_vector(2)
        );
        assert_eq!(
            c4.evaluate_word(&left, std::slice::from_ref(&x1)).unwrap(),
            c4.basis_vector(3)
        );
        assert_eq!(c4.evaluate_word(&Word::leaf(0), std::slice::from_ref(&x1)).unwrap(), x1);
        assert!(matches!(
            c4.evaluate_word(&Word::node(Word::leaf(0), Word::leaf(1)), &[x1]),
            Err(Error::UnassignedLeaf(2))
        ));
    }

    #[test]
    fn multiply_checks_shape() {
        let m = m2();
        assert!(m.multiply(&Vector::from_i64s(Q, &[1, 0]), &m.basis_vector(0)).is_err());
    }
}
