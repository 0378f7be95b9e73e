use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, Scalar, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `field^ambient`, stored as its reduced row-echelon
/// basis.
///
/// Rows are nonzero, pivots strictly increase, every pivot entry is one and
/// every pivot column is zero outside its row. The form is canonical, so two
/// subspaces are equal exactly when their stored rows are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| Vector::basis(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `rows`, computed with [`rref`].
    pub fn span(field: Field, ambient: usize, rows: &[Vector]) -> Result<Self> {
        rref(field, ambient, rows).map(|(s, _)| s)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` lies
    /// in the subspace.
    fn residual(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r.get(p).is_zero() {
                let factor = -r.get(p);
                r.add_scaled(&factor, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.check_shape(self.field, self.ambient)?;
        Ok(self.residual(v).is_zero())
    }

    /// Returns `S + span{v}` and whether `v` was new.
    pub fn extend(&self, v: &Vector) -> Result<(Subspace, bool)> {
        let mut s = self.clone();
        let added = s.insert(v)?;
        Ok((s, added))
    }

    /// In-place [`Subspace::extend`].
    pub fn insert(&mut self, v: &Vector) -> Result<bool> {
        v.check_shape(self.field, self.ambient)?;
        let r = self.residual(v);
        let Some(pivot) = r.first_nonzero() else {
            return Ok(false);
        };
        let r = r.scale(&r.get(pivot).inv().expect("pivot is nonzero"));
        for row in &mut self.rows {
            if !row.get(pivot).is_zero() {
                let factor = -row.get(pivot);
                row.add_scaled(&factor, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, r);
        self.pivots.insert(at, pivot);
        Ok(true)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.field == other.field
            && self.rows.iter().all(|r| other.residual(r).is_zero())
    }

    /// Coordinates of `v` in the echelon basis, if `v` is in the subspace.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v.get(p).clone()).collect()))
    }

    /// Reads a solution off the echelon form of an augmented system
    /// `[A | b]` with `unknowns` columns of `A`. Free variables are zero.
    pub(crate) fn augmented_solution(&self, unknowns: usize) -> Option<Vector> {
        debug_assert_eq!(self.ambient, unknowns + 1);
        if self.pivots.last() == Some(&unknowns) {
            return None;
        }
        let mut x = Vector::zeros(self.field, unknowns);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            x.coords_mut()[p] = row.get(unknowns).clone();
        }
        Some(x)
    }
}

/// Reduced row-echelon form of `rows` and its rank.
///
/// Rational input is cleared to integers and eliminated fraction-free
/// (Bareiss), so intermediate entries stay bounded by minors of the input;
/// only the final normalization divides. Prime fields use plain
/// Gauss-Jordan.
pub fn rref(field: Field, ambient: usize, rows: &[Vector]) -> Result<(Subspace, usize)> {
    for r in rows {
        r.check_shape(field, ambient)?;
    }
    let echelon = match field {
        Field::Rational => bareiss(ambient, rows),
        Field::Prime(_) => gauss_jordan(field, ambient, rows),
    };
    let rank = echelon.dim();
    Ok((echelon, rank))
}

fn gauss_jordan(field: Field, ambient: usize, rows: &[Vector]) -> Subspace {
    let mut m: Vec<Vector> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ambient {
        let Some(found) = (top..m.len()).find(|&i| !m[i].get(col).is_zero()) else {
            continue;
        };
        m.swap(top, found);
        let inv = m[top].get(col).inv().expect("nonzero pivot");
        m[top] = m[top].scale(&inv);
        let pivot_row = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != top && !row.get(col).is_zero() {
                let factor = -row.get(col);
                row.add_scaled(&factor, &pivot_row);
            }
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    Subspace {
        field,
        ambient,
        rows: m,
        pivots,
    }
}

fn bareiss(ambient: usize, rows: &[Vector]) -> Subspace {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| {
            let entries: Vec<&BigRational> = r
                .coords()
                .iter()
                .map(|c| c.as_rational().expect("rational row"))
                .collect();
            let lcm = entries.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            entries.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut top = 0;
    for col in 0..ambient {
        let Some(found) = (top..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(top, found);
        let (head, tail) = m.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..ambient {
                let updated = pivot * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&updated % &prev).is_zero());
                row[j] = updated / &prev;
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);

    // Back substitution over the rationals on the (short) echelon rows.
    let mut out: Vec<Vector> = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            let coords = row
                .into_iter()
                .map(|x| Scalar::Rational(BigRational::new(x, lead.clone())))
                .collect();
            Vector::from_scalars(Field::Rational, coords).expect("rational coordinates")
        })
        .collect();
    for i in (0..out.len()).rev() {
        let (above, rest) = out.split_at_mut(i);
        let row = &rest[0];
        let p = pivots[i];
        for other in above.iter_mut() {
            if !other.get(p).is_zero() {
                let factor = -other.get(p);
                other.add_scaled(&factor, row);
            }
        }
    }
    Subspace {
        field: Field::Rational,
        ambient,
        rows: out,
        pivots,
    }
}

/// One exact solution of `A x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(a: &[Vector], b: &Vector) -> Result<Option<Vector>> {
    let first = a
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty coefficient matrix".into()))?;
    let field = first.field();
    let unknowns = first.dim();
    b.check_shape(field, a.len())?;
    let augmented = a
        .iter()
        .zip(b.coords())
        .map(|(row, rhs)| {
            row.check_shape(field, unknowns)?;
            let mut coords = row.coords().to_vec();
            coords.push(rhs.clone());
            Vector::from_scalars(field, coords)
        })
        .collect::<Result<Vec<_>>>()?;
    let (echelon, _) = rref(field, unknowns + 1, &augmented)?;
    Ok(echelon.augmented_solution(unknowns))
}
