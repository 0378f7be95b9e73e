//! The JSON algebra file format.
//!
//! ```json
//! { "name": "B3", "field": {"type": "rational"}, "dim": 3,
//!   "basis": ["x1", "x2", "x3"],
//!   "products": [ {"left": 1, "right": 1, "out": {"2": "1"}},
//!                 {"left": 2, "right": 1, "out": {"3": "1"}} ] }
//! ```
//!
//! Indices are 1-based, scalars use the text syntax of
//! [`Scalar::parse`](crate::exactla::Scalar::parse), and unlisted products
//! are zero.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    pub out: OutputTerms,
}

/// The `"out"` object, kept as an ordered list so repeated keys are seen
/// by validation instead of silently overwritten.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OutputTerms(pub Vec<(String, String)>);

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarText {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for OutputTerms {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TermsVisitor;

        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = OutputTerms;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from output index to scalar")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut terms = Vec::new();
                while let Some((key, value)) = map.next_entry::<String, ScalarText>()? {
                    let value = match value {
                        ScalarText::Text(s) => s,
                        ScalarText::Int(n) => n.to_string(),
                    };
                    terms.push((key, value));
                }
                Ok(OutputTerms(terms))
            }
        }

        deserializer.deserialize_map(TermsVisitor)
    }
}

impl Serialize for OutputTerms {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Checks indices, scalars and duplicates, and builds the algebra.
    pub fn validate(&self) -> Result<Algebra> {
        let field = Field::try_from(self.field.clone())?;
        let dim = self.dim;
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        let in_range = |index: usize| {
            if (1..=dim).contains(&index) {
                Ok(index - 1)
            } else {
                Err(Error::IndexOutOfRange { index, dim })
            }
        };
        let mut constants = Vec::new();
        for entry in &self.products {
            let i = in_range(entry.left)?;
            let j = in_range(entry.right)?;
            for (key, value) in &entry.out.0 {
                let k: usize = key
                    .trim()
                    .parse()
                    .map_err(|_| Error::Malformed(format!("output index {key:?} is not an integer")))?;
                let k = in_range(k)?;
                constants.push((i, j, k, Scalar::parse(field, value)?));
            }
        }
        // Duplicates must be caught before zero coefficients are dropped.
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, _) in &constants {
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::DuplicateProduct {
                    left: i + 1,
                    right: j + 1,
                    out: k + 1,
                });
            }
        }
        Algebra::new(self.name.clone(), field, dim, self.basis.clone(), constants)
    }
}

impl Algebra {
    /// Parses and validates an algebra file.
    pub fn from_json(text: &str) -> Result<Self> {
        AlgebraFile::from_json(text)?.validate()
    }

    pub fn to_file(&self) -> AlgebraFile {
        let d = self.dim();
        let mut products = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let entry = self.product(i, j);
                if entry.is_empty() {
                    continue;
                }
                products.push(ProductEntry {
                    left: i + 1,
                    right: j + 1,
                    out: OutputTerms(
                        entry
                            .iter()
                            .map(|(k, c)| ((k + 1).to_string(), c.to_string()))
                            .collect(),
                    ),
                });
            }
        }
        AlgebraFile {
            name: self.name().to_string(),
            field: self.field().into(),
            dim: d,
            basis: Some(self.basis_names().to_vec()),
            products,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra files serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B3: &str = r#"{
        "name": "B3", "field": {"type": "rational"}, "dim": 3,
        "basis": ["x1", "x2", "x3"],
        "products": [
            {"left": 1, "right": 1, "out": {"2": "1"}},
            {"left": 2, "right": 1, "out": {"3": "1"}}
        ]
    }"#;

    #[test]
    fn loads_b3() {
        let a = Algebra::from_json(B3).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nonzero_constants(), 2);
        assert_eq!(a.basis_names()[2], "x3");
        let again = Algebra::from_json(&a.to_json()).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn rejects_out_of_range_index() {
        let text = r#"{"name":"x","field":{"type":"rational"},"dim":3,
            "products":[{"left":1,"right":1,"out":{"6":"1"}}]}"#;
        assert!(matches!(
            Algebra::from_json(text),
            Err(Error::IndexOutOfRange { index: 6, dim: 3 })
        ));
        let text = r#"{"name":"x","field":{"type":"rational"},"dim":3,
            "products":[{"left":0,"right":1,"out":{"1":"1"}}]}"#;
        assert!(matches!(
            Algebra::from_json(text),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn rejects_duplicates() {
        let split = r#"{"name":"x","field":{"type":"rational"},"dim":3,
            "products":[{"left":1,"right":1,"out":{"2":"1"}},
                        {"left":1,"right":1,"out":{"2":"0"}}]}"#;
        assert!(matches!(
            Algebra::from_json(split),
            Err(Error::DuplicateProduct {
                left: 1,
                right: 1,
                out: 2
            })
        ));
        let same_object = r#"{"name":"x","field":{"type":"rational"},"dim":3,
            "products":[{"left":1,"right":1,"out":{"2":"1","2":"3"}}]}"#;
        assert!(matches!(
            Algebra::from_json(same_object),
            Err(Error::DuplicateProduct { .. })
        ));
    }

    #[test]
    fn rejects_bad_scalars_and_moduli() {
        let text = r#"{"name":"x","field":{"type":"rational"},"dim":2,
            "products":[{"left":1,"right":1,"out":{"2":"1/0"}}]}"#;
        assert!(matches!(Algebra::from_json(text), Err(Error::MalformedScalar(_))));
        let text = r#"{"name":"x","field":{"type":"prime","p":9},"dim":2,"products":[]}"#;
        assert!(matches!(Algebra::from_json(text), Err(Error::NotPrime(9))));
        assert!(matches!(Algebra::from_json("{"), Err(Error::Json(_))));
    }

    #[test]
    fn integer_scalars_and_prime_fields() {
        let text = r#"{"name":"x","field":{"type":"prime","p":5},"dim":2,
            "products":[{"left":1,"right":1,"out":{"2":-1}}]}"#;
        let a = Algebra::from_json(text).unwrap();
        assert_eq!(a.product(0, 0)[0].1.to_string(), "4");
        assert_eq!(a.basis_names(), ["e1", "e2"]);
    }
}
