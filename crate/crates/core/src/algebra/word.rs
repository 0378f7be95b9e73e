use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// A fully parenthesized product: a binary tree whose leaves are letter
/// (generator or variable) indices, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Leaf(usize),
    Node(Box<Word>, Box<Word>),
}

impl Word {
    pub fn leaf(index: usize) -> Self {
        Word::Leaf(index)
    }

    pub fn node(left: Word, right: Word) -> Self {
        Word::Node(Box::new(left), Box::new(right))
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        match self {
            Word::Leaf(_) => 1,
            Word::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter indices from left to right.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<usize>) {
        match self {
            Word::Leaf(i) => out.push(*i),
            Word::Node(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    pub fn max_letter(&self) -> usize {
        match self {
            Word::Leaf(i) => *i,
            Word::Node(l, r) => l.max_letter().max(r.max_letter()),
        }
    }

    /// Replaces every letter `i` by `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> Word {
        match self {
            Word::Leaf(i) => Word::Leaf(map[*i]),
            Word::Node(l, r) => Word::node(l.relabel(map), r.relabel(map)),
        }
    }

    /// Substitutes whole words for letters.
    pub fn substitute(&self, words: &[Word]) -> Word {
        match self {
            Word::Leaf(i) => words[*i].clone(),
            Word::Node(l, r) => Word::node(l.substitute(words), r.substitute(words)),
        }
    }

    /// Full-parenthesis rendering, e.g. `((x1*x1)*x2)`, with 1-based letters.
    pub fn render(&self, prefix: &str) -> String {
        match self {
            Word::Leaf(i) => format!("{prefix}{}", i + 1),
            Word::Node(l, r) => format!("({}*{})", l.render(prefix), r.render(prefix)),
        }
    }

    /// Concatenation rendering with inner parentheses only, e.g. `(zx)y`.
    pub fn spell(&self, names: &[&str]) -> String {
        fn inner(w: &Word, names: &[&str]) -> String {
            match w {
                Word::Leaf(i) => names[*i].to_string(),
                Word::Node(..) => format!("({})", w.spell(names)),
            }
        }
        match self {
            Word::Leaf(i) => names[*i].to_string(),
            Word::Node(l, r) => format!("{}{}", inner(l, names), inner(r, names)),
        }
    }

    /// Nested-list JSON form with 1-based leaves: `[[1,2],3]` is `(x1x2)x3`.
    pub fn to_json(&self) -> Value {
        match self {
            Word::Leaf(i) => Value::from(i + 1),
            Word::Node(l, r) => Value::Array(vec![l.to_json(), r.to_json()]),
        }
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        Self::from_json_at(value, 0)
    }

    fn from_json_at(value: &Value, depth: usize) -> Result<Self> {
        // Deeply nested input would otherwise overflow the stack.
        if depth > 64 {
            return Err(Error::Malformed("monomial nested too deeply".into()));
        }
        match value {
            Value::Number(n) => match n.as_u64() {
                Some(i) if i >= 1 && i <= u32::MAX as u64 => Ok(Word::Leaf(i as usize - 1)),
                _ => Err(Error::Malformed(format!("monomial leaf {n} is not a positive index"))),
            },
            Value::Array(items) if items.len() == 2 => Ok(Word::node(
                Self::from_json_at(&items[0], depth + 1)?,
                Self::from_json_at(&items[1], depth + 1)?,
            )),
            other => Err(Error::Malformed(format!(
                "monomial must be a leaf index or a two-element list, found {other}"
            ))),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let w = Word::node(Word::node(Word::leaf(0), Word::leaf(0)), Word::leaf(1));
        assert_eq!(w.to_string(), "((x1*x1)*x2)");
        assert_eq!(w.len(), 3);
        assert_eq!(w.letters(), vec![0, 0, 1]);
        let m = Word::node(Word::node(Word::leaf(2), Word::leaf(0)), Word::leaf(1));
        assert_eq!(m.spell(&["x", "y", "z"]), "(zx)y");
        assert_eq!(Word::leaf(1).spell(&["x", "y", "z"]), "y");
    }

    #[test]
    fn json_round_trip() {
        let w = Word::node(Word::leaf(0), Word::node(Word::leaf(1), Word::leaf(2)));
        assert_eq!(w.to_json().to_string(), "[1,[2,3]]");
        assert_eq!(Word::from_json(&w.to_json()).unwrap(), w);
        for bad in ["0", "[1]", "[1,2,3]", "\"x\"", "-1", "1.5"] {
            let v: Value = serde_json::from_str(bad).unwrap();
            assert!(Word::from_json(&v).is_err(), "{bad}");
        }
    }
}
