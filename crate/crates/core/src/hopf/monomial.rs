use std::collections::BTreeMap;
use std::fmt;

/// Commutative word `∏ yₖ^{mₖ}` over the alphabet `Y`; the empty word is the
/// unit `e`. A basis element of BELL, also called a forest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<usize, usize>,
}

impl Monomial {
    pub fn unit() -> Self {
        Self::default()
    }

    /// The letter `yₖ`, `k ≥ 1`.
    pub fn generator(k: usize) -> Self {
        assert!(k >= 1, "generator indices start at 1");
        Self::from_exponents([(k, 1)])
    }

    /// Builds from `(index, exponent)` pairs; zero exponents are dropped and
    /// repeated indices accumulate.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (k, m) in pairs {
            assert!(k >= 1, "generator indices start at 1");
            if m > 0 {
                *exponents.entry(k).or_insert(0) += m;
            }
        }
        Monomial { exponents }
    }

    /// Product of the given letters, with repetition.
    pub fn from_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        Self::from_exponents(letters.into_iter().map(|k| (k, 1)))
    }

    pub fn exponents(&self) -> &BTreeMap<usize, usize> {
        &self.exponents
    }

    pub fn exponent(&self, k: usize) -> usize {
        self.exponents.get(&k).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Sum of the indices, `Σ k·mₖ`.
    pub fn weight(&self) -> usize {
        self.exponents.iter().map(|(k, m)| k * m).sum()
    }

    /// Number of letters, `Σ mₖ`.
    pub fn degree(&self) -> usize {
        self.exponents.values().sum()
    }

    /// Largest generator index used; 0 for `e`.
    pub fn max_index(&self) -> usize {
        self.exponents.keys().next_back().copied().unwrap_or(0)
    }

    /// Factorization into single letters, ascending.
    pub fn letters(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .flat_map(|(&k, &m)| std::iter::repeat_n(k, m))
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&k, &m) in &other.exponents {
            *exponents.entry(k).or_insert(0) += m;
        }
        Monomial { exponents }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("e");
        }
        for (i, (k, m)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match m {
                1 => write!(f, "y{k}")?,
                _ => write!(f, "y{k}^{m}")?,
            }
        }
        Ok(())
    }
}
