use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::Rng;
use serde::Serialize;

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A coordinate vector over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector {
            field,
            coords: vec![Scalar::zero(field); dim],
        }
    }

    /// The standard basis vector `e_index` (0-based).
    pub fn basis(field: Field, dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(field, dim);
        v.coords[index] = Scalar::one(field);
        v
    }

    pub fn from_scalars(field: Field, coords: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Vector { field, coords })
    }

    pub fn from_i64s(field: Field, coords: &[i64]) -> Self {
        Vector {
            field,
            coords: coords.iter().map(|&c| Scalar::from_i64(field, c)).collect(),
        }
    }

    /// Parses a comma-separated scalar list such as `1,0,-1/2`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|t| Scalar::parse(field, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector { field, coords })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [Scalar] {
        &mut self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    pub fn check_shape(&self, field: Field, dim: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                expected: field,
                found: self.field,
            });
        }
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, a: &Scalar) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| c * a).collect(),
        }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &Scalar, other: &Vector) {
        assert_eq!(self.dim(), other.dim(), "vector length mismatch");
        if a.is_zero() {
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x = &*x + &(a * y);
            }
        }
    }

    /// A random vector: entries from `{-2, …, 2}` over the rationals,
    /// uniform residues over a prime field.
    pub fn random<R: Rng + ?Sized>(field: Field, dim: usize, rng: &mut R) -> Self {
        let coords = (0..dim)
            .map(|_| match field {
                Field::Rational => Scalar::from_i64(field, rng.gen_range(-2..=2)),
                Field::Prime(p) => Scalar::Prime {
                    value: rng.gen_range(0..p),
                    p,
                },
            })
            .collect();
        Vector { field, coords }
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector length mismatch");
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector length mismatch");
        Vector {
            field: self.field,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}
