use num_bigint::BigInt;

use super::sequences::CumulantSequence;
use crate::combinatorics::ENUMERATION_BOUND;
use crate::diagrams::{enumerate_labeled_diagrams, shape_multiplicity, shapes_of_weight};
use crate::series::Coefficient;
use crate::{Error, Result};

/// How [`graph_expansion`] sums over diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphPath {
    /// Every labeled diagram separately (`n ≤` the enumeration bound).
    Enumerate,
    /// One term per shape, weighted by its labeled multiplicity.
    Shapes,
}

/// `Wₙ = Σ_{diagrams on n lines} ∏_{black dots} V_{degree}`.
///
/// Requires `n ≤ V.order()`, since `Wₙ` involves `V₁…Vₙ`.
pub fn graph_expansion<C: Coefficient>(
    v: &CumulantSequence<C>,
    n: usize,
    path: GraphPath,
) -> Result<C> {
    if n > v.order() {
        return Err(Error::Range {
            index: n,
            order: v.order(),
        });
    }
    let weight = |k: usize| v.get(k).expect("k <= n <= order").clone();
    match path {
        GraphPath::Enumerate => {
            if n > ENUMERATION_BOUND {
                return Err(Error::Bound(format!(
                    "diagram enumeration limited to n <= {ENUMERATION_BOUND}, got {n}"
                )));
            }
            Ok(enumerate_labeled_diagrams(n).fold(C::zero(), |acc, d| {
                let term = d
                    .partition()
                    .blocks()
                    .iter()
                    .fold(C::one(), |p, block| p * weight(block.len()));
                acc + term
            }))
        }
        GraphPath::Shapes => Ok(shapes_of_weight(n).into_iter().fold(C::zero(), |acc, s| {
            let term = s.parts().iter().fold(C::one(), |p, &k| p * weight(k));
            acc + term.scale(&BigInt::from(shape_multiplicity(&s)))
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn both(v: &CumulantSequence<Rational>, n: usize) -> Rational {
        let a = graph_expansion(v, n, GraphPath::Enumerate).unwrap();
        let b = graph_expansion(v, n, GraphPath::Shapes).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn unit_weights_count_diagrams() {
        let v = CumulantSequence::new(vec![r(1); 6]);
        assert_eq!(both(&v, 3), r(5));
        assert_eq!(both(&v, 6), r(203));
        assert_eq!(both(&v, 0), r(1));
    }

    #[test]
    fn singleton_weights() {
        let v = CumulantSequence::new(vec![r(7), r(0), r(0)]);
        assert_eq!(both(&v, 3), r(343));
    }

    #[test]
    fn pair_weights_vanish_on_odd_lines() {
        let v = CumulantSequence::new(vec![r(0), r(1), r(0), r(0)]);
        assert_eq!(both(&v, 3), r(0));
        // three perfect matchings of four lines
        assert_eq!(both(&v, 4), r(3));
    }

    #[test]
    fn too_few_cumulants() {
        let v = CumulantSequence::new(vec![r(1)]);
        assert!(matches!(
            graph_expansion(&v, 2, GraphPath::Shapes),
            Err(Error::Range { .. })
        ));
        let long = CumulantSequence::new(vec![r(1); 14]);
        assert!(matches!(
            graph_expansion(&long, 13, GraphPath::Enumerate),
            Err(Error::Bound(_))
        ));
        assert!(graph_expansion(&long, 13, GraphPath::Shapes).is_ok());
    }
}
