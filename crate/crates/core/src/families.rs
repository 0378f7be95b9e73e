//! Constructors for the named example algebras.
//!
//! All unlisted products are zero. Indices in the comments are 1-based, as
//! in the basis labels.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Leibniz `B_d`: `x_i x_1 = x_{i+1}`.
    LeibnizB,
    /// Filiform Lie `A_d`: `x_1 x_i = x_{i+1} = -x_i x_1`, `i >= 2`.
    FiliformA,
    /// Novikov `C_d`: `x_1 x_i = x_{i+1}`.
    NovikovC,
    /// Novikov, not sliding: `x_1x_1 = x_2, x_1x_2 = x_3, x_2x_1 = x_4`.
    NovikovC4,
    /// Zinbiel `Z_d`: `x_i x_j = j/(i+j) x_{i+j}`.
    ZinbielZ,
    /// Zinbiel, not mixing: `x_1x_2 = x_4 = -x_2x_1, x_4x_3 = x_5`.
    ZinbielZ5,
    /// Unital bare algebra of the sequence `(0,1,2,4,5)`.
    Bare01245,
    /// Vinberg: `e_1e_1 = e_2, e_1e_2 = e_3, e_3e_2 = e_4`.
    VinbergR4,
    /// Valya, length 8 in dimension 6.
    ValyaV6,
    /// `E_d^r`: every `x v` vanishes once `v` is a product of `r` factors.
    REndedE,
    /// `F^n` with coordinate-wise product.
    Coordinatewise,
    /// Full matrix algebra `M_n`.
    MatrixFull,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::LeibnizB,
        Family::FiliformA,
        Family::NovikovC,
        Family::NovikovC4,
        Family::ZinbielZ,
        Family::ZinbielZ5,
        Family::Bare01245,
        Family::VinbergR4,
        Family::ValyaV6,
        Family::REndedE,
        Family::Coordinatewise,
        Family::MatrixFull,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            Family::LeibnizB => "leibniz_B",
            Family::FiliformA => "filiform_A",
            Family::NovikovC => "novikov_C",
            Family::NovikovC4 => "novikov_C4",
            Family::ZinbielZ => "zinbiel_Z",
            Family::ZinbielZ5 => "zinbiel_Z5",
            Family::Bare01245 => "bare_01245",
            Family::VinbergR4 => "vinberg_R4",
            Family::ValyaV6 => "valya_V6",
            Family::REndedE => "r_ended_E",
            Family::Coordinatewise => "coordinatewise",
            Family::MatrixFull => "matrix_full",
        }
    }

    /// Dimension of the fixed-size families.
    pub fn fixed_dim(&self) -> Option<usize> {
        match self {
            Family::NovikovC4 | Family::VinbergR4 => Some(4),
            Family::ZinbielZ5 | Family::Bare01245 => Some(5),
            Family::ValyaV6 => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.key().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub field: Field,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec {
            family,
            d: None,
            r: None,
            field: Field::Rational,
        }
    }

    pub fn d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn field(mut self, field: Field) -> Self {
        self.field = field;
        self
    }

    pub fn build(&self) -> Result<Algebra> {
        make(self)
    }
}

type Constants = Vec<(usize, usize, usize, Scalar)>;

fn param(name: &str, value: Option<usize>, min: usize) -> Result<usize> {
    match value {
        Some(v) if v >= min => Ok(v),
        Some(v) => Err(Error::InvalidParameter(format!("{name} = {v} must be at least {min}"))),
        None => Err(Error::InvalidParameter(format!("parameter {name} is required"))),
    }
}

fn labels(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

pub fn make(spec: &FamilySpec) -> Result<Algebra> {
    let field = spec.field;
    let one = Scalar::one(field);
    let minus_one = -&one;
    // 1-based (i, j, k) with coefficient.
    let unit_triple = |i: usize, j: usize, k: usize, c: &Scalar| (i - 1, j - 1, k - 1, c.clone());

    if let Some(fixed) = spec.family.fixed_dim() {
        if spec.d.is_some_and(|d| d != fixed) {
            return Err(Error::InvalidParameter(format!(
                "{} has fixed dimension {fixed}",
                spec.family
            )));
        }
    }

    let (name, dim, basis, constants): (String, usize, Vec<String>, Constants) = match spec.family {
        Family::LeibnizB => {
            let d = param("d", spec.d, 3)?;
            let c = (1..d).map(|i| unit_triple(i, 1, i + 1, &one)).collect();
            (format!("B_{d}"), d, labels("x", 1..d + 1), c)
        }
        Family::FiliformA => {
            let d = param("d", spec.d, 3)?;
            let c = (2..d)
                .flat_map(|i| [unit_triple(1, i, i + 1, &one), unit_triple(i, 1, i + 1, &minus_one)])
                .collect();
            (format!("A_{d}"), d, labels("x", 1..d + 1), c)
        }
        Family::NovikovC => {
            let d = param("d", spec.d, 3)?;
            let c = (1..d).map(|i| unit_triple(1, i, i + 1, &one)).collect();
            (format!("C_{d}"), d, labels("x", 1..d + 1), c)
        }
        Family::NovikovC4 => {
            let c = vec![
                unit_triple(1, 1, 2, &one),
                unit_triple(1, 2, 3, &one),
                unit_triple(2, 1, 4, &one),
            ];
            ("C4".into(), 4, labels("x", 1..5), c)
        }
        Family::ZinbielZ => {
            let d = param("d", spec.d, 3)?;
            let mut c = Vec::new();
            for i in 1..d {
                for j in 1..=d - i {
                    let q = BigRational::new((j as i64).into(), ((i + j) as i64).into());
                    let coeff = Scalar::from_rational(field, &q).map_err(|_| {
                        Error::InvalidParameter(format!("Z_{d} needs {} to be invertible in {field}", i + j))
                    })?;
                    c.push((i - 1, j - 1, i + j - 1, coeff));
                }
            }
            (format!("Z_{d}"), d, labels("x", 1..d + 1), c)
        }
        Family::ZinbielZ5 => {
            let c = vec![
                unit_triple(1, 2, 4, &one),
                unit_triple(2, 1, 4, &minus_one),
                unit_triple(4, 3, 5, &one),
            ];
            ("Z5".into(), 5, labels("x", 1..6), c)
        }
        Family::Bare01245 => {
            // Basis e0..e4 with e0 the unit; stored 0-based as indices 0..4.
            let mut c: Constants = Vec::new();
            for i in 0..5 {
                c.push((0, i, i, one.clone()));
                if i != 0 {
                    c.push((i, 0, i, one.clone()));
                }
            }
            c.push((1, 1, 2, one.clone()));
            c.push((2, 2, 3, one.clone()));
            c.push((1, 3, 4, one.clone()));
            ("bare_01245".into(), 5, labels("e", 0..5), c)
        }
        Family::VinbergR4 => {
            let c = vec![
                unit_triple(1, 1, 2, &one),
                unit_triple(1, 2, 3, &one),
                unit_triple(3, 2, 4, &one),
            ];
            ("R4".into(), 4, labels("e", 1..5), c)
        }
        Family::ValyaV6 => {
            let c = (1..=4)
                .flat_map(|i| {
                    [
                        unit_triple(i, i + 1, i + 2, &one),
                        unit_triple(i + 1, i, i + 2, &minus_one),
                    ]
                })
                .collect();
            ("V6".into(), 6, labels("e", 1..7), c)
        }
        Family::REndedE => {
            let r = param("r", spec.r, 2)?;
            let d = param("d", spec.d, r)?;
            let mut c: Constants = (1..=r.saturating_sub(2))
                .map(|j| unit_triple(j, 1, j + 1, &one))
                .collect();
            c.extend((r - 1..d).map(|i| unit_triple(i, r - 1, i + 1, &one)));
            (format!("E_{d}^{r}"), d, labels("x", 1..d + 1), c)
        }
        Family::Coordinatewise => {
            let n = param("d", spec.d, 1)?;
            let c = (0..n).map(|i| (i, i, i, one.clone())).collect();
            (format!("F^{n}"), n, labels("e", 1..n + 1), c)
        }
        Family::MatrixFull => {
            let n = param("d", spec.d, 1)?;
            let idx = |i: usize, j: usize| i * n + j;
            let mut c = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        c.push((idx(i, j), idx(j, l), idx(i, l), one.clone()));
                    }
                }
            }
            let basis = (0..n * n)
                .map(|k| {
                    let (i, j) = (k / n + 1, k % n + 1);
                    if n < 10 {
                        format!("E{i}{j}")
                    } else {
                        format!("E{i},{j}")
                    }
                })
                .collect();
            (format!("M_{n}"), n * n, basis, c)
        }
    };
    Algebra::new(name, field, dim, Some(basis), constants)
}

pub fn leibniz_b(d: usize) -> Result<Algebra> {
    FamilySpec::new(Family::LeibnizB).d(d).build()
}

pub fn filiform_a(d: usize) -> Result<Algebra> {
    FamilySpec::new(Family::FiliformA).d(d).build()
}

pub fn novikov_c(d: usize) -> Result<Algebra> {
    FamilySpec::new(Family::NovikovC).d(d).build()
}

pub fn novikov_c4() -> Algebra {
    FamilySpec::new(Family::NovikovC4).build().expect("fixed family")
}

pub fn zinbiel_z(d: usize) -> Result<Algebra> {
    FamilySpec::new(Family::ZinbielZ).d(d).build()
}

pub fn zinbiel_z5() -> Algebra {
    FamilySpec::new(Family::ZinbielZ5).build().expect("fixed family")
}

pub fn bare_01245() -> Algebra {
    FamilySpec::new(Family::Bare01245).build().expect("fixed family")
}

pub fn vinberg_r4() -> Algebra {
    FamilySpec::new(Family::VinbergR4).build().expect("fixed family")
}

pub fn valya_v6() -> Algebra {
    FamilySpec::new(Family::ValyaV6).build().expect("fixed family")
}

pub fn r_ended_e(d: usize, r: usize) -> Result<Algebra> {
    FamilySpec::new(Family::REndedE).d(d).r(r).build()
}

pub fn coordinatewise(n: usize) -> Result<Algebra> {
    FamilySpec::new(Family::Coordinatewise).d(n).build()
}

pub fn matrix_full(n: usize) -> Result<Algebra> {
    FamilySpec::new(Family::MatrixFull).d(n).build()
}
