//! Type B_n roots, the hyperoctahedral Weyl group S_n ⋉ ℤ₂ⁿ, Kostant's
//! cross-section W¹ and the Weyl-formula machinery around them.
//!
//! Weights are stored with doubled coordinates (entry `2c` is `c·e_i`) so ρ
//! and the vacuum weight (p/2)Σe_i stay integral. Characters use the fixed
//! convention `x_i = exp(-e_i)`, so the weight Σ c_i e_i becomes the Laurent
//! monomial Π x_i^{-c_i}.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partitions::Partition;
use crate::polyring::{ExponentVector, MultiPoly};

/// Largest rank for which the full 2ⁿ·n! alternant sum is attempted by default.
pub const DEFAULT_ALTERNANT_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("partition {lambda} has more than {n} rows")]
    TooManyRows { lambda: Partition, n: usize },
    #[error("alternant over B_{n} exceeds the configured limit n <= {limit}")]
    AlternantLimit { n: usize, limit: usize },
    #[error("invalid signed permutation: {0}")]
    BadPermutation(String),
    #[error("subset element {0} outside 1..={1}")]
    BadSubset(usize, usize),
}

/// A weight in doubled coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn from_doubled(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn from_integer(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|c| 2 * c).collect())
    }

    /// e_i (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 2;
        Weight(v)
    }

    /// ρ = ½ Σ (2n − 2i + 1) e_i.
    pub fn rho(n: usize) -> Self {
        Weight((1..=n).map(|i| (2 * n - 2 * i + 1) as i64).collect())
    }

    /// Λ = (p/2) Σ e_i, the highest weight of the order-p Fock space.
    pub fn fock_highest(n: usize, p: usize) -> Self {
        Weight(vec![p as i64; n])
    }

    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Four times the standard inner product.
    pub fn dot4(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Σ μ_i e_i with μ_i = −λ_{n−i+1}.
    pub fn reflect(&self) -> Weight {
        Weight(self.0.iter().rev().map(|a| -a).collect())
    }

    pub fn is_positive_root_order(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn is_negative_root_order(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    /// Dominant for B_n: Λ₁ ≥ … ≥ Λ_n ≥ 0, all coordinates integral or all
    /// half-integral.
    pub fn is_dominant(&self) -> bool {
        let parity_ok = self.0.windows(2).all(|w| (w[0] - w[1]) % 2 == 0);
        parity_ok && self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&c| c >= 0)
    }

    /// The partition with these (integral, weakly decreasing, non-negative) coordinates.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&c| c < 0 || c % 2 != 0) {
            return None;
        }
        Partition::new(self.0.iter().map(|&c| (c / 2) as usize).collect()).ok()
    }

    /// The Laurent monomial exp(weight) = Π x_i^{-c_i}.
    pub fn monomial(&self) -> ExponentVector {
        ExponentVector::from_doubled(self.0.iter().map(|&c| -c as i32).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&c| if c % 2 == 0 { (c / 2).to_string() } else { format!("{c}/2") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of S_n ⋉ ℤ₂ⁿ acting by e_i ↦ signs[i] · e_{images[i]} (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn new(images: Vec<usize>, signs: Vec<i8>) -> Result<Self, WeylError> {
        let n = images.len();
        if signs.len() != n {
            return Err(WeylError::BadPermutation(format!("{} images but {} signs", n, signs.len())));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(WeylError::BadPermutation(format!("{images:?} is not a bijection")));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(WeylError::BadPermutation(format!("signs {signs:?} must be ±1")));
        }
        Ok(SignedPermutation { images, signs })
    }

    /// From the arrangement `word` (1-based): slot j receives the coordinate
    /// of basis vector `word[j]`, so e_{word[j]} ↦ ±e_j. Signs are indexed by
    /// the source basis vector and applied before permuting.
    pub fn from_word(word: &[usize], signs: Vec<i8>) -> Result<Self, WeylError> {
        let n = word.len();
        let mut images = vec![usize::MAX; n];
        for (slot, &src) in word.iter().enumerate() {
            if src == 0 || src > n || images[src - 1] != usize::MAX {
                return Err(WeylError::BadPermutation(format!("word {word:?} is not a permutation of 1..={n}")));
            }
            images[src - 1] = slot;
        }
        Self::new(images, signs)
    }

    /// Flips the signs of e_i for i ∈ I (1-based).
    pub fn sign_flips(n: usize, subset: &[usize]) -> Result<Self, WeylError> {
        let mut signs = vec![1; n];
        for &i in subset {
            if i == 0 || i > n {
                return Err(WeylError::BadSubset(i, n));
            }
            signs[i - 1] = -1;
        }
        Ok(SignedPermutation { images: (0..n).collect(), signs })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The arrangement of source indices into slots, 1-based.
    pub fn word(&self) -> Vec<usize> {
        let mut word = vec![0; self.rank()];
        for (src, &slot) in self.images.iter().enumerate() {
            word[slot] = src + 1;
        }
        word
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let images = other.images.iter().map(|&j| self.images[j]).collect();
        let signs = other.images.iter().zip(&other.signs).map(|(&j, &s)| s * self.signs[j]).collect();
        SignedPermutation { images, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for (i, (&j, &s)) in self.images.iter().zip(&self.signs).enumerate() {
            images[j] = i;
            signs[j] = s;
        }
        SignedPermutation { images, signs }
    }

    /// ε(w) = sign(permutation) · Π signs.
    pub fn epsilon(&self) -> i8 {
        permutation_sign(&self.images) * self.signs.iter().product::<i8>()
    }

    pub fn act(&self, v: &Weight) -> Weight {
        let mut out = vec![0; self.rank()];
        for (i, (&j, &s)) in self.images.iter().zip(&self.signs).enumerate() {
            out[j] = s as i64 * v.0[i];
        }
        Weight(out)
    }
}

/// All permutations of 0..n in lexicographic order (one-line notation).
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Every element of the Weyl group of B_n (2ⁿ·n! of them).
pub fn weyl_group(n: usize) -> impl Iterator<Item = SignedPermutation> {
    permutations(n).into_iter().flat_map(move |images| {
        (0u32..1 << n).map(move |mask| SignedPermutation {
            images: images.clone(),
            signs: (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect(),
        })
    })
}

/// Positive roots of B_n and the roots of the nilradical 𝔫 = V ⊕ ∧²V.
#[derive(Debug, Clone)]
pub struct RootSystemB {
    n: usize,
    positive: Vec<Weight>,
    nilradical: Vec<Weight>,
}

impl RootSystemB {
    pub fn new(n: usize) -> Self {
        let e = |i| Weight::basis(n, i);
        let mut positive = Vec::with_capacity(n * n);
        let mut nilradical = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            positive.push(e(i));
            nilradical.push(e(i));
        }
        for i in 0..n {
            for j in i + 1..n {
                positive.push(e(i).sub(&e(j)));
                positive.push(e(i).add(&e(j)));
                nilradical.push(e(i).add(&e(j)));
            }
        }
        RootSystemB { n, positive, nilradical }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn nilradical_roots(&self) -> &[Weight] {
        &self.nilradical
    }

    /// ½ Σ_{α ∈ Δ₊} α, computed from the root list.
    pub fn half_sum(&self) -> Weight {
        let sum = self.positive.iter().fold(Weight::zero(self.n), |acc, a| acc.add(a));
        Weight(sum.0.iter().map(|c| c / 2).collect())
    }

    pub fn in_nilradical(&self, root: &Weight) -> bool {
        self.nilradical.contains(root)
    }
}

/// ω_I: the complement of I in increasing order followed by I in decreasing
/// order, as an arrangement word (see [`SignedPermutation::from_word`]).
pub fn omega(subset: &[usize], n: usize) -> Result<SignedPermutation, WeylError> {
    let mut inside = vec![false; n];
    for &i in subset {
        if i == 0 || i > n {
            return Err(WeylError::BadSubset(i, n));
        }
        inside[i - 1] = true;
    }
    let mut word: Vec<usize> = (1..=n).filter(|&i| !inside[i - 1]).collect();
    word.extend((1..=n).rev().filter(|&i| inside[i - 1]));
    SignedPermutation::from_word(&word, vec![1; n])
}

/// σ_I = ω_I · τ_I, the element of W¹ attached to I.
pub fn w1_element(subset: &[usize], n: usize) -> Result<SignedPermutation, WeylError> {
    Ok(omega(subset, n)?.compose(&SignedPermutation::sign_flips(n, subset)?))
}

/// Subsets of {1..n} as sorted 1-based lists, ordered by bitmask.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
}

/// Φ_σ = {ξ ∈ Δ₊ : σ⁻¹ξ ∈ Δ₋}.
pub fn phi_sigma(sigma: &SignedPermutation, roots: &RootSystemB) -> Vec<Weight> {
    let inv = sigma.inverse();
    roots
        .positive_roots()
        .iter()
        .filter(|xi| inv.act(xi).is_negative_root_order())
        .cloned()
        .collect()
}

/// σ(ρ + Λ) − ρ.
pub fn kostant_weight(sigma: &SignedPermutation, lambda: &Weight) -> Weight {
    let rho = Weight::rho(sigma.rank());
    sigma.act(&rho.add(lambda)).sub(&rho)
}

/// D_χ = Σ_{w ∈ W} ε(w) e^{wχ}.
pub fn alternant(chi: &Weight, limit: usize) -> Result<MultiPoly, WeylError> {
    let n = chi.rank();
    if n > limit {
        return Err(WeylError::AlternantLimit { n, limit });
    }
    let mut out = MultiPoly::zero(n);
    for w in weyl_group(n) {
        let c = if w.epsilon() > 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(w.act(chi).monomial(), c);
    }
    Ok(out)
}

/// Weyl dimension formula Π_{α>0} ⟨Λ+ρ, α⟩ / ⟨ρ, α⟩ for dominant Λ.
pub fn dim_so(lambda: &Weight) -> Result<BigInt, WeylError> {
    if !lambda.is_dominant() {
        return Err(WeylError::NotDominant(lambda.clone()));
    }
    let n = lambda.rank();
    let rho = Weight::rho(n);
    let shifted = lambda.add(&rho);
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for alpha in RootSystemB::new(n).positive_roots() {
        num *= shifted.dot4(alpha);
        den *= rho.dot4(alpha);
    }
    assert!((&num % &den).is_zero(), "Weyl dimension {num}/{den} is not an integer");
    Ok(num / den)
}

/// Hook-content formula Π (n + j − i) / h(i, j) for gl_n.
pub fn dim_gl(lambda: &Partition, n: usize) -> Result<BigInt, WeylError> {
    if lambda.len() > n {
        return Err(WeylError::TooManyRows { lambda: lambda.clone(), n });
    }
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for (i, j) in lambda.cells() {
        num *= n + j - i;
        den *= lambda.hook_length(i, j);
    }
    assert!((&num % &den).is_zero(), "hook-content quotient {num}/{den} is not an integer");
    Ok(num / den)
}
