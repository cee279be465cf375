use std::fmt;
use std::str::FromStr;

use crate::Error;

/// One factor of an operator product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a`
    Annihilator,
    /// `a†`
    Creator,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::Annihilator => 'a',
            Letter::Creator => 'c',
        }
    }
}

/// Operator product read left to right; the empty word is the identity.
///
/// Text form uses `a` for the annihilator and `c` for the creator, so `ca`
/// is the number operator `a†a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BosonWord {
    letters: Vec<Letter>,
}

impl BosonWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BosonWord { letters }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `a†a`
    pub fn number_operator() -> Self {
        BosonWord {
            letters: vec![Letter::Creator, Letter::Annihilator],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn creators(&self) -> usize {
        self.letters
            .iter()
            .filter(|&&l| l == Letter::Creator)
            .count()
    }

    pub fn annihilators(&self) -> usize {
        self.letters.len() - self.creators()
    }

    /// Equal numbers of creators and annihilators.
    pub fn is_balanced(&self) -> bool {
        2 * self.creators() == self.letters.len()
    }

    /// The word repeated `n` times.
    pub fn pow(&self, n: usize) -> Self {
        BosonWord {
            letters: self.letters.repeat(n),
        }
    }
}

impl FromStr for BosonWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'a' => Ok(Letter::Annihilator),
                'c' => Ok(Letter::Creator),
                other => Err(Error::Parse {
                    position: i + 1,
                    message: format!("unexpected character '{other}', expected 'a' or 'c'"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BosonWord::new)
    }
}

impl fmt::Display for BosonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}
