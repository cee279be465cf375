//! Labeled diagrams: `n` labeled lines, each leaving its own white dot and
//! ending on a black dot. A diagram is exactly a set partition of the line
//! labels (one block per black dot); its shape is the multiset of black-dot
//! degrees, coded as a monomial `∏ yₖ`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigUint;

use crate::combinatorics::{
    enumerate_set_partitions, factorial, integer_partitions, Natural, SetPartition, SetPartitions,
    ENUMERATION_BOUND,
};
use crate::hopf::Monomial;
use crate::{Error, Result};

/// One diagram on lines `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledDiagram {
    partition: SetPartition,
}

impl LabeledDiagram {
    pub fn new(partition: SetPartition) -> Self {
        LabeledDiagram { partition }
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Number of lines (white dots).
    pub fn lines(&self) -> usize {
        self.partition.len()
    }

    /// Number of black dots, which is also the number of connected components.
    pub fn vertices(&self) -> usize {
        self.partition.num_blocks()
    }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

/// Black-dot degrees, sorted descending. The empty shape is the empty diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramShape {
    parts: Vec<usize>,
}

impl DiagramShape {
    /// Canonicalizes arbitrary positive parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("diagram shapes have positive parts".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DiagramShape { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of lines.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn components(&self) -> usize {
        self.parts.len()
    }

    /// `mₖ` for each part size `k`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &k in &self.parts {
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for DiagramShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&text.join("+"))
    }
}

/// Streams all `B(n)` diagrams on `n` lines in restricted-growth-word order.
pub struct LabeledDiagrams(SetPartitions);

impl Iterator for LabeledDiagrams {
    type Item = LabeledDiagram;
    fn next(&mut self) -> Option<LabeledDiagram> {
        self.0.next().map(LabeledDiagram::new)
    }
}

pub fn enumerate_labeled_diagrams(n: usize) -> LabeledDiagrams {
    LabeledDiagrams(enumerate_set_partitions(n))
}

pub fn shape_of(d: &LabeledDiagram) -> DiagramShape {
    DiagramShape::new(d.partition.blocks().iter().map(Vec::len).collect())
        .expect("blocks are non-empty")
}

/// A black dot with `k` lines is the letter `yₖ`; disjoint unions multiply.
pub fn code_monomial(s: &DiagramShape) -> Monomial {
    Monomial::from_letters(s.parts.iter().copied())
}

/// Inverse of [`code_monomial`].
pub fn decode_monomial(m: &Monomial) -> DiagramShape {
    DiagramShape::new(m.letters()).expect("generator indices are positive")
}

/// Labeled diagrams with shape `s`: `n! / ∏ₖ (k!)^{mₖ} mₖ!`.
pub fn shape_multiplicity(s: &DiagramShape) -> Natural {
    let denominator = s
        .multiplicities()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, (k, m)| {
            acc * factorial(k).pow(m as u32) * factorial(m)
        });
    factorial(s.weight()) / denominator
}

/// [`shape_multiplicity`] by brute-force enumeration, for weight up to the
/// enumeration bound.
pub fn shape_multiplicity_enumerated(s: &DiagramShape) -> Result<Natural> {
    let n = s.weight();
    if n > ENUMERATION_BOUND {
        return Err(Error::Bound(format!(
            "enumeration limited to n <= {ENUMERATION_BOUND}, got {n}"
        )));
    }
    Ok(Natural::from(
        enumerate_labeled_diagrams(n)
            .filter(|d| &shape_of(d) == s)
            .count(),
    ))
}

/// Every shape of weight `n`, i.e. the integer partitions of `n`, ascending.
pub fn shapes_of_weight(n: usize) -> Vec<DiagramShape> {
    integer_partitions(n)
        .into_iter()
        .map(|parts| DiagramShape { parts })
        .collect()
}

/// Labeled count per shape on `n` lines, by enumeration.
pub fn shape_census(n: usize) -> Result<BTreeMap<DiagramShape, Natural>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::Bound(format!(
            "enumeration limited to n <= {ENUMERATION_BOUND}, got {n}"
        )));
    }
    let mut census = BTreeMap::new();
    for d in enumerate_labeled_diagrams(n) {
        *census
            .entry(shape_of(&d))
            .or_insert_with(|| Natural::from(0u32)) += 1u32;
    }
    Ok(census)
}

/// Labeled count per shape on `n` lines, from the closed form.
pub fn shape_census_closed(n: usize) -> BTreeMap<DiagramShape, Natural> {
    shapes_of_weight(n)
        .into_iter()
        .map(|s| {
            let m = shape_multiplicity(&s);
            (s, m)
        })
        .collect()
}

/// Graphviz text for one diagram. White nodes `w1…wn` come first, then black
/// nodes `b1…bk` in order of their least label, then one edge per line.
pub fn to_dot(d: &LabeledDiagram) -> String {
    let mut out = String::from("graph diagram {\n");
    for label in 1..=d.lines() {
        writeln!(out, "    w{label} [shape=circle, style=solid, label=\"\"];").unwrap();
    }
    for b in 1..=d.vertices() {
        writeln!(
            out,
            "    b{b} [shape=circle, style=filled, fillcolor=black, label=\"\"];"
        )
        .unwrap();
    }
    for (b, block) in d.partition.blocks().iter().enumerate() {
        for label in block {
            writeln!(out, "    w{label} -- b{} [label=\"{label}\"];", b + 1).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(n: usize, blocks: &[&[usize]]) -> LabeledDiagram {
        LabeledDiagram::new(
            SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap(),
        )
    }

    fn shape(parts: &[usize]) -> DiagramShape {
        DiagramShape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_diagrams(3).count(), 5);
        assert_eq!(enumerate_labeled_diagrams(1).count(), 1);
        let empty: Vec<_> = enumerate_labeled_diagrams(0).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].lines(), 0);
        assert_eq!(code_monomial(&shape_of(&empty[0])), Monomial::unit());
    }

    #[test]
    fn shapes() {
        assert_eq!(shape_of(&diagram(3, &[&[1, 2], &[3]])), shape(&[2, 1]));
        assert_eq!(
            shape_of(&diagram(3, &[&[1], &[2], &[3]])),
            shape(&[1, 1, 1])
        );
        assert_eq!(shape_of(&diagram(3, &[&[1, 2, 3]])), shape(&[3]));
        assert_eq!(shape(&[1, 2]).parts(), [2, 1]);
        assert!(DiagramShape::new(vec![0]).is_err());
    }

    #[test]
    fn codes() {
        assert_eq!(code_monomial(&shape(&[2, 1])).to_string(), "y1*y2");
        assert_eq!(code_monomial(&shape(&[])).to_string(), "e");
        assert_eq!(code_monomial(&shape(&[1, 1])).to_string(), "y1^2");
        let m = code_monomial(&shape(&[3, 1, 1]));
        assert_eq!(m.weight(), 5);
        assert_eq!(m.degree(), 3);
        assert_eq!(decode_monomial(&m), shape(&[3, 1, 1]));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(shape_multiplicity(&shape(&[2, 1])), Natural::from(3u32));
        assert_eq!(shape_multiplicity(&shape(&[1])), Natural::from(1u32));
        assert_eq!(shape_multiplicity(&shape(&[1, 1, 1])), Natural::from(1u32));
        assert_eq!(shape_multiplicity(&shape(&[])), Natural::from(1u32));
        assert_eq!(
            shape_multiplicity_enumerated(&shape(&[2, 1])).unwrap(),
            Natural::from(3u32)
        );
        assert!(shape_multiplicity_enumerated(&shape(&[13])).is_err());
    }

    #[test]
    fn census_of_three_lines() {
        let census = shape_census(3).unwrap();
        let listed: Vec<(String, u32)> = census
            .iter()
            .map(|(s, c)| (code_monomial(s).to_string(), u32::try_from(c).unwrap()))
            .collect();
        assert_eq!(
            listed,
            [("y1^3".into(), 1), ("y1*y2".into(), 3), ("y3".into(), 1)]
        );
        assert_eq!(census, shape_census_closed(3));
    }

    #[test]
    fn dot_single_line() {
        assert_eq!(
            to_dot(&diagram(1, &[&[1]])),
            "graph diagram {\n    w1 [shape=circle, style=solid, label=\"\"];\n    b1 [shape=circle, style=filled, fillcolor=black, label=\"\"];\n    w1 -- b1 [label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn dot_structure() {
        let joined = to_dot(&diagram(2, &[&[1, 2]]));
        assert_eq!(joined.matches(" -- b1").count(), 2);
        assert!(!joined.contains("b2"));
        let split = to_dot(&diagram(2, &[&[1], &[2]]));
        assert!(split.contains("w1 -- b1"));
        assert!(split.contains("w2 -- b2"));
        assert_eq!(split.matches(" -- ").count(), 2);
    }
}
