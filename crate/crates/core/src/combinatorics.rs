//! Stirling numbers of the second kind, Bell numbers and polynomials, and
//! set-partition enumeration.
//!
//! `S(n,k)` counts the ways to put `n` labeled objects into `k` unlabeled,
//! non-empty containers; `B(n) = Σ_k S(n,k)`. The enumerator in this module
//! realizes that definition literally and serves as the oracle for the
//! closed formulas elsewhere in the crate.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::poly::YPolynomial;
use crate::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Practical bound on `n` for the set-partition enumerator (`B(12) = 4213597`).
pub const ENUMERATION_BOUND: usize = 12;

/// Rows `0..=n` of the Stirling triangle, filled by
/// `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<Natural>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Natural::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Natural::zero(); n + 1];
            for k in 1..=n {
                let stay = if k < n { &prev[k] * k } else { Natural::zero() };
                row[k] = stay + &prev[k - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n,0..=n)`; panics if `n` exceeds the table.
    pub fn row(&self, n: usize) -> &[Natural] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Natural> {
        self.rows.get(n).and_then(|r| r.get(k))
    }
}

/// `S(n,k)`; errors when `k > n`.
pub fn stirling2(n: usize, k: usize) -> Result<Natural> {
    if k > n {
        return Err(Error::Domain(format!(
            "S(n,k) needs k <= n, got n={n}, k={k}"
        )));
    }
    Ok(StirlingTable::new(n).row(n)[k].clone())
}

/// `B(n)`, with `B(0) = 1`.
pub fn bell(n: usize) -> Natural {
    StirlingTable::new(n).row(n).iter().sum()
}

/// `B(0..=max_n)`.
pub fn bell_numbers(max_n: usize) -> Vec<Natural> {
    let table = StirlingTable::new(max_n);
    (0..=max_n).map(|n| table.row(n).iter().sum()).collect()
}

/// `B_n(y) = Σ_k S(n,k) y^k`.
pub fn bell_polynomial(n: usize) -> YPolynomial<Natural> {
    YPolynomial::new(StirlingTable::new(n).row(n).to_vec())
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Natural {
    (1..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// Integer partitions of `n` as non-increasing part lists, in ascending
/// lexicographic order (`[1,1,1] < [2,1] < [3]`). `n = 0` gives one empty
/// partition.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=max_part.min(rest) {
            prefix.push(part);
            extend(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// A partition of `{1,…,n}` into non-empty blocks, blocks sorted by least
/// element and each block ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes an arbitrary block list over `{1,…,n}`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Domain("set partition with an empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(Error::Domain(format!("label {x} outside 1..={n}")));
                }
                if seen[x] {
                    return Err(Error::Domain(format!("label {x} in two blocks")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::Domain(format!("label {missing} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Decodes a restricted growth word: `word[i]` is the block of label `i+1`.
    pub fn from_growth_word(word: &[usize]) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in word.iter().enumerate() {
            match b.cmp(&blocks.len()) {
                std::cmp::Ordering::Less => blocks[b].push(i + 1),
                std::cmp::Ordering::Equal => blocks.push(vec![i + 1]),
                std::cmp::Ordering::Greater => {
                    return Err(Error::Domain(format!(
                        "not a restricted growth word at position {}",
                        i + 1
                    )))
                }
            }
        }
        Ok(SetPartition {
            n: word.len(),
            blocks,
        })
    }

    /// Size of the underlying set.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn growth_word(&self) -> Vec<usize> {
        let mut word = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                word[x - 1] = b;
            }
        }
        word
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over all set partitions of `{1,…,n}` in lexicographic order of
/// their restricted growth words.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    word: Vec<usize>,
    // prefix_max[i] = max(word[0..i]), with prefix_max[0] unused
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            word: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.word.len();
        for i in (1..n).rev() {
            if self.word[i] <= self.prefix_max[i] {
                self.word[i] += 1;
                let m = self.prefix_max[i].max(self.word[i]);
                for j in i + 1..n {
                    self.word[j] = 0;
                    self.prefix_max[j] = m;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let item = SetPartition::from_growth_word(&self.word)
            .expect("iterator maintains the growth condition");
        self.advance();
        Some(item)
    }
}

/// Every set partition of `{1,…,n}` exactly once; `bell(n)` items.
pub fn enumerate_set_partitions(n: usize) -> SetPartitions {
    SetPartitions::new(n)
}
