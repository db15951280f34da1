//! Partitions, Young diagrams and Frobenius coordinates.
//!
//! A [`Partition`] is stored normalized: parts are positive and weakly
//! decreasing, so structural equality is equality of diagrams. Enumerations
//! are graded by size and lexicographically descending within each size.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("{which} {values:?} are not strictly decreasing")]
    NotStrict { which: &'static str, values: Vec<usize> },
    #[error("arms and legs have different lengths ({arms} vs {legs})")]
    RankMismatch { arms: usize, legs: usize },
    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(Partition),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
    #[error("enumeration is unbounded: give at least one finite bound")]
    Unbounded,
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal constructor for sequences already known to be normalized.
    fn from_normalized(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part λ₁, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Number of diagonal boxes.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_normalized(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Diagram containment μ ⊆ λ.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let r = self.rank();
        let conj = self.conjugate();
        let arms = (0..r).map(|i| self.parts[i] - i - 1).collect();
        let legs = (0..r).map(|i| conj.parts[i] - i - 1).collect();
        FrobeniusForm { arms, legs }
    }

    /// Boxes `(row, col)`, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook length of the box at `(row, col)`.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..].iter().take_while(|&&p| p > col).count();
        arm + leg + 1
    }

    /// The p-augmented diagram (α+p | α) of a self-conjugate μ = (α | α).
    pub fn augment_arms(&self, p: usize) -> Result<Partition, PartitionError> {
        if !self.is_self_conjugate() {
            return Err(PartitionError::NotSelfConjugate(self.clone()));
        }
        let f = self.frobenius();
        let arms = f.arms.iter().map(|a| a + p).collect();
        Ok(FrobeniusForm { arms, legs: f.legs }.compose())
    }

    /// Whether λ_{n+1} ≤ m, i.e. λ fits in the (n, m) hook.
    pub fn fits_hook(&self, n: usize, m: usize) -> bool {
        self.part(n) <= m
    }

    /// Parses `"3,1"`, `"[3,1]"` or the empty string.
    pub fn parse(s: &str) -> Result<Partition, String> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad part {t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in tests and examples; panics on bad input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

/// Frobenius coordinates (α₁,…,α_r | β₁,…,β_r).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFrobenius")]
pub struct FrobeniusForm {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

#[derive(Deserialize)]
struct RawFrobenius {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl TryFrom<RawFrobenius> for FrobeniusForm {
    type Error = PartitionError;
    fn try_from(raw: RawFrobenius) -> Result<Self, Self::Error> {
        FrobeniusForm::new(raw.arms, raw.legs)
    }
}

impl FrobeniusForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self, PartitionError> {
        if arms.len() != legs.len() {
            return Err(PartitionError::RankMismatch { arms: arms.len(), legs: legs.len() });
        }
        if arms.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict { which: "arms", values: arms });
        }
        if legs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict { which: "legs", values: legs });
        }
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> usize {
        self.rank() + self.arms.iter().sum::<usize>() + self.legs.iter().sum::<usize>()
    }

    /// Rebuilds the diagram: rows up to the diagonal come from the arms,
    /// rows below it count the columns (of height βⱼ + j) reaching them.
    pub fn compose(&self) -> Partition {
        let r = self.rank();
        let depth = self.legs.first().map_or(0, |b| b + 1);
        let mut parts = Vec::with_capacity(depth.max(r));
        for i in 1..=depth.max(r) {
            if i <= r {
                parts.push(self.arms[i - 1] + i);
            } else {
                parts.push(self.legs.iter().enumerate().filter(|&(j, &b)| b + j + 1 >= i).count());
            }
        }
        Partition::from_normalized(parts)
    }

    pub fn conjugate(&self) -> FrobeniusForm {
        FrobeniusForm { arms: self.legs.clone(), legs: self.arms.clone() }
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

/// All self-conjugate μ ⊆ (nⁿ), built from Frobenius coordinates: a
/// self-conjugate diagram is (α | α) for a strictly decreasing α ⊆ {0..n-1}.
/// Ordered by size, then lexicographically descending.
pub fn self_conjugate_in_square(n: usize) -> Vec<Partition> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let arms: Vec<usize> = (0..n).rev().filter(|&a| mask >> a & 1 == 1).collect();
        out.push(FrobeniusForm { legs: arms.clone(), arms }.compose());
    }
    sort_graded(&mut out);
    out
}

/// Self-conjugate diagrams μ = (α | α) with α₁ ≤ `max_arm` (if given) and
/// `weight(μ) ≤ budget`, where `weight` is monotone in the arms.
pub fn self_conjugate_with<F>(max_arm: Option<usize>, budget: usize, weight: F) -> Vec<Partition>
where
    F: Fn(&FrobeniusForm) -> usize,
{
    fn grow<F: Fn(&FrobeniusForm) -> usize>(
        arms: &mut Vec<usize>,
        below: usize,
        budget: usize,
        weight: &F,
        out: &mut Vec<Partition>,
    ) {
        for a in 0..below {
            arms.push(a);
            let f = FrobeniusForm { arms: arms.clone(), legs: arms.clone() };
            if weight(&f) <= budget {
                out.push(f.compose());
                grow(arms, a, budget, weight, out);
            }
            arms.pop();
        }
    }
    let mut out = vec![Partition::empty()];
    let top = max_arm.map_or(budget + 1, |a| a + 1);
    for a in 0..top {
        let f = FrobeniusForm { arms: vec![a], legs: vec![a] };
        if weight(&f) <= budget {
            out.push(f.compose());
            let mut arms = vec![a];
            grow(&mut arms, a, budget, &weight, &mut out);
        }
    }
    sort_graded(&mut out);
    out
}

fn sort_graded(v: &mut [Partition]) {
    v.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
}

/// Bounds for [`enumerate_partitions`]; `None` means unbounded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PartitionBounds {
    pub max_part: Option<usize>,
    pub max_length: Option<usize>,
    pub max_size: Option<usize>,
}

impl PartitionBounds {
    pub fn inside(rows: usize, cols: usize) -> Self {
        PartitionBounds { max_part: Some(cols), max_length: Some(rows), max_size: None }
    }
}

/// Partitions with λ₁ ≤ max_part, ℓ(λ) ≤ max_length and |λ| ≤ max_size,
/// streamed one size at a time. The stream is infinite when only one of
/// `max_part` / `max_length` is bounded and `max_size` is not.
pub fn enumerate_partitions(bounds: PartitionBounds) -> Result<PartitionStream, PartitionError> {
    let PartitionBounds { max_part, max_length, max_size } = bounds;
    if max_part.is_none() && max_length.is_none() && max_size.is_none() {
        return Err(PartitionError::Unbounded);
    }
    let box_limit = match (max_part, max_length) {
        (Some(a), Some(b)) => Some(a * b),
        _ => None,
    };
    let last_size = match (max_size, box_limit) {
        (Some(s), Some(b)) => Some(s.min(b)),
        (s, b) => s.or(b),
    };
    Ok(PartitionStream {
        max_part,
        max_length,
        last_size,
        size: 0,
        batch: Vec::new().into_iter(),
    })
}

pub struct PartitionStream {
    max_part: Option<usize>,
    max_length: Option<usize>,
    last_size: Option<usize>,
    size: usize,
    batch: std::vec::IntoIter<Partition>,
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.batch.next() {
                return Some(p);
            }
            if self.last_size.is_some_and(|l| self.size > l) {
                return None;
            }
            let part_cap = self.max_part.unwrap_or(self.size);
            let len_cap = self.max_length.unwrap_or(self.size);
            let mut out = Vec::new();
            partitions_of(self.size, part_cap, len_cap, &mut Vec::new(), &mut out);
            self.size += 1;
            self.batch = out.into_iter();
        }
    }
}

/// Partitions of `n` with parts ≤ `max_part` and at most `max_len` parts,
/// in lexicographically descending order.
fn partitions_of(n: usize, max_part: usize, max_len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_normalized(prefix.clone()));
        return;
    }
    if max_len == 0 {
        return;
    }
    for first in (1..=max_part.min(n)).rev() {
        // the remaining parts must fit in (first^(max_len-1))
        if first * max_len < n {
            break;
        }
        prefix.push(first);
        partitions_of(n - first, first, max_len - 1, prefix, out);
        prefix.pop();
    }
}

/// All μ ⊆ λ, ordered by size then lexicographically descending.
pub fn subdiagrams(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, i: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_normalized(prefix.clone()));
        if i >= outer.len() {
            return;
        }
        for v in 1..=cap.min(outer.parts[i]) {
            prefix.push(v);
            go(outer, i + 1, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, outer.first(), &mut Vec::new(), &mut out);
    sort_graded(&mut out);
    out
}
