//! Schur, skew Schur and (n|m)-hook Schur polynomials.
//!
//! Variables are laid out as `x_1..x_n` (even, parity 0) followed by
//! `x_{n+1}..x_{n+m}` (odd, parity 1). Ordinary Schur polynomials are taken
//! in the even variables. Three independent evaluation routes exist:
//! Jacobi–Trudi on cached complete homogeneous polynomials (the default),
//! the bialternant quotient, and a direct tableau sum.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::partitions::{enumerate_partitions, subdiagrams, Partition, PartitionBounds, PartitionError};
use crate::polyring::{ExponentVector, MultiPoly, PolyError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the requested sum is infinite; give a degree bound")]
    NeedsDegreeBound,
    #[error("algorithm {0:?} does not apply here")]
    Unsupported(Algorithm),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// det(h_{λ_i − i + j})
    JacobiTrudi,
    /// a_{λ+δ} / a_δ by exact division
    Bialternant,
    /// sum over semistandard tableaux
    Tableaux,
    /// Berele–Regev decomposition (hook Schur only)
    BereleRegev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

/// Variable counts plus a cache of complete homogeneous polynomials `h_k`
/// for each parity class, embedded in the full `n + m` variable ring.
#[derive(Debug)]
pub struct SchurContext {
    n: usize,
    m: usize,
    even_h: RwLock<Vec<Arc<MultiPoly>>>,
    odd_h: RwLock<Vec<Arc<MultiPoly>>>,
}

impl SchurContext {
    pub fn new(n: usize) -> Self {
        Self::hook(n, 0)
    }

    pub fn hook(n: usize, m: usize) -> Self {
        SchurContext { n, m, even_h: RwLock::new(Vec::new()), odd_h: RwLock::new(Vec::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.n + self.m
    }

    fn vars(&self, parity: Parity) -> std::ops::Range<usize> {
        match parity {
            Parity::Even => 0..self.n,
            Parity::Odd => self.n..self.n + self.m,
        }
    }

    /// `h_k` of the even variables; zero for negative `k`.
    pub fn h(&self, k: i64) -> Arc<MultiPoly> {
        self.h_of(Parity::Even, k)
    }

    /// `h_k` of the odd variables.
    pub fn h_odd(&self, k: i64) -> Arc<MultiPoly> {
        self.h_of(Parity::Odd, k)
    }

    fn h_of(&self, parity: Parity, k: i64) -> Arc<MultiPoly> {
        if k < 0 {
            return Arc::new(MultiPoly::zero(self.nvars()));
        }
        let k = k as usize;
        let cache = match parity {
            Parity::Even => &self.even_h,
            Parity::Odd => &self.odd_h,
        };
        if let Some(h) = cache.read().expect("h cache poisoned").get(k) {
            return Arc::clone(h);
        }
        let mut w = cache.write().expect("h cache poisoned");
        while w.len() <= k {
            let d = w.len();
            w.push(Arc::new(complete_homogeneous(self.nvars(), self.vars(parity), d)));
        }
        Arc::clone(&w[k])
    }
}

/// h_d of the variables in `vars`: every monomial of degree d, coefficient 1.
fn complete_homogeneous(nvars: usize, vars: std::ops::Range<usize>, d: usize) -> MultiPoly {
    fn go(vars: &[usize], left: usize, exps: &mut Vec<i32>, out: &mut MultiPoly) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.add_term(ExponentVector::from_integer(exps), BigInt::one());
                }
            }
            Some((&v, rest)) => {
                let top = if rest.is_empty() { left } else { 0 };
                for e in (top..=left).rev() {
                    exps[v] = e as i32;
                    go(rest, left - e, exps, out);
                }
                exps[v] = 0;
            }
        }
    }
    let mut out = MultiPoly::zero(nvars);
    let vars: Vec<usize> = vars.collect();
    go(&vars, d, &mut vec![0; nvars], &mut out);
    out
}

/// Determinant by Laplace expansion over column subsets: O(2^k · k)
/// products and no division. `entry(i, j)` returns `None` for zero.
pub(crate) fn determinant<F>(k: usize, nvars: usize, entry: F) -> MultiPoly
where
    F: Fn(usize, usize) -> Option<Arc<MultiPoly>>,
{
    if k == 0 {
        return MultiPoly::one(nvars);
    }
    // minors[mask] = det of rows 0..|mask| against the columns in mask
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << k];
    minors[0] = Some(MultiPoly::one(nvars));
    for mask in 0usize..(1 << k) {
        let Some(minor) = minors[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == k {
            minors[mask] = Some(minor);
            continue;
        }
        for col in 0..k {
            if mask >> col & 1 == 1 {
                continue;
            }
            let Some(e) = entry(row, col) else { continue };
            if e.is_zero() {
                continue;
            }
            let term = &minor * &e;
            let after = (mask >> (col + 1)).count_ones();
            let term = if after % 2 == 1 { -term } else { term };
            let slot = &mut minors[mask | 1 << col];
            *slot = Some(match slot.take() {
                Some(acc) => &acc + &term,
                None => term,
            });
        }
        minors[mask] = Some(minor);
    }
    minors[(1 << k) - 1].take().unwrap_or_else(|| MultiPoly::zero(nvars))
}

fn jacobi_trudi(outer: &Partition, inner: &Partition, ctx: &SchurContext, parity: Parity) -> MultiPoly {
    let k = outer.len();
    determinant(k, ctx.nvars(), |i, j| {
        let idx = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
        (idx >= 0).then(|| ctx.h_of(parity, idx))
    })
}

/// s_λ in the even variables, by Jacobi–Trudi.
pub fn schur(lambda: &Partition, ctx: &SchurContext) -> MultiPoly {
    jacobi_trudi(lambda, &Partition::empty(), ctx, Parity::Even)
}

pub fn schur_with(lambda: &Partition, ctx: &SchurContext, algorithm: Algorithm) -> Result<MultiPoly, SchurError> {
    match algorithm {
        Algorithm::JacobiTrudi => Ok(schur(lambda, ctx)),
        Algorithm::Bialternant => bialternant(lambda, ctx),
        Algorithm::Tableaux => Ok(tableau_sum(lambda, &Partition::empty(), ctx.n, 0, ctx.nvars())),
        Algorithm::BereleRegev => Err(SchurError::Unsupported(algorithm)),
    }
}

/// s_{λ/μ} in the even variables.
pub fn skew_schur(outer: &Partition, inner: &Partition, ctx: &SchurContext) -> Result<MultiPoly, SchurError> {
    require_contained(outer, inner)?;
    Ok(jacobi_trudi(outer, inner, ctx, Parity::Even))
}

fn require_contained(outer: &Partition, inner: &Partition) -> Result<(), SchurError> {
    if !outer.contains(inner) {
        return Err(PartitionError::NotContained { inner: inner.clone(), outer: outer.clone() }.into());
    }
    Ok(())
}

/// The (n|m)-hook Schur polynomial
/// hs_λ = Σ_{μ ⊆ λ, ℓ(μ) ≤ n} s_μ(x_even) · s_{λ′/μ′}(x_odd).
pub fn hook_schur(lambda: &Partition, ctx: &SchurContext) -> MultiPoly {
    let conj = lambda.conjugate();
    let mut total = MultiPoly::zero(ctx.nvars());
    for mu in subdiagrams(lambda) {
        if mu.len() > ctx.n {
            continue;
        }
        let even = jacobi_trudi(&mu, &Partition::empty(), ctx, Parity::Even);
        if even.is_zero() {
            continue;
        }
        let odd = jacobi_trudi(&conj, &mu.conjugate(), ctx, Parity::Odd);
        if odd.is_zero() {
            continue;
        }
        total = &total + &(&even * &odd);
    }
    total
}

pub fn hook_schur_with(lambda: &Partition, ctx: &SchurContext, algorithm: Algorithm) -> Result<MultiPoly, SchurError> {
    match algorithm {
        Algorithm::BereleRegev | Algorithm::JacobiTrudi => Ok(hook_schur(lambda, ctx)),
        Algorithm::Tableaux => Ok(tableau_sum(lambda, &Partition::empty(), ctx.n, ctx.m, ctx.nvars())),
        Algorithm::Bialternant => Err(SchurError::Unsupported(algorithm)),
    }
}

/// a_{λ+δ}/a_δ in the n even variables, δ = (n−1, …, 0). Shifting the
/// half-integer ρ₁ to δ multiplies numerator and denominator by the same
/// monomial.
fn bialternant(lambda: &Partition, ctx: &SchurContext) -> Result<MultiPoly, SchurError> {
    let n = ctx.n;
    if lambda.len() > n {
        return Ok(MultiPoly::zero(ctx.nvars()));
    }
    let shifted: Vec<i32> = (0..n).map(|i| (lambda.part(i) + n - 1 - i) as i32).collect();
    let delta: Vec<i32> = (0..n).map(|i| (n - 1 - i) as i32).collect();
    let num = alternant_gl(&shifted, ctx.nvars());
    let den = alternant_gl(&delta, ctx.nvars());
    Ok(num.div_exact(&den)?)
}

/// det(x_j^{a_i}) over the first `a.len()` variables.
fn alternant_gl(a: &[i32], nvars: usize) -> MultiPoly {
    let n = a.len();
    let mut out = MultiPoly::zero(nvars);
    for perm in crate::weyl::permutations(n) {
        let mut e = vec![0; nvars];
        for (i, &ai) in a.iter().enumerate() {
            e[perm[i]] = ai;
        }
        let sign = if crate::weyl::permutation_sign(&perm) > 0 { BigInt::one() } else { -BigInt::one() };
        out.add_term(ExponentVector::from_integer(&e), sign);
    }
    out
}

/// Σ x^T over (n|m)-semistandard fillings T of the skew shape λ/μ. Letters
/// 0..n are even: weakly increasing along rows, strictly down columns.
/// Letters n..n+m are odd: strictly increasing along rows, weakly down
/// columns. Even letters precede odd ones.
pub fn tableau_sum(outer: &Partition, inner: &Partition, n: usize, m: usize, nvars: usize) -> MultiPoly {
    struct Filler<'a> {
        inner: &'a Partition,
        cells: Vec<(usize, usize)>,
        n: usize,
        letters: usize,
        grid: Vec<Vec<Option<usize>>>,
        counts: Vec<i32>,
        out: MultiPoly,
    }
    impl Filler<'_> {
        fn fill(&mut self, k: usize) {
            if k == self.cells.len() {
                let mut e = vec![0; self.out.nvars()];
                e[..self.letters].copy_from_slice(&self.counts);
                self.out.add_term(ExponentVector::from_integer(&e), BigInt::one());
                return;
            }
            let (i, j) = self.cells[k];
            let left = (j > self.inner.part(i)).then(|| self.grid[i][j - 1]).flatten();
            let above = (i > 0 && j >= self.inner.part(i - 1)).then(|| self.grid[i - 1][j]).flatten();
            for c in 0..self.letters {
                let even = c < self.n;
                if let Some(l) = left {
                    if c < l || (c == l && !even) {
                        continue;
                    }
                }
                if let Some(a) = above {
                    if c < a || (c == a && even) {
                        continue;
                    }
                }
                self.grid[i][j] = Some(c);
                self.counts[c] += 1;
                self.fill(k + 1);
                self.counts[c] -= 1;
                self.grid[i][j] = None;
            }
        }
    }
    let letters = n + m;
    assert!(letters <= nvars);
    let cells: Vec<_> = outer.cells().filter(|&(i, j)| j >= inner.part(i)).collect();
    let mut f = Filler {
        inner,
        cells,
        n,
        letters,
        grid: outer.parts().iter().map(|&p| vec![None; p]).collect(),
        counts: vec![0; letters],
        out: MultiPoly::zero(nvars),
    };
    f.fill(0);
    f.out
}

/// Which partitions a [`schur_sum`] runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumConstraint {
    /// Σ s_λ over λ₁ ≤ p (at most p columns), even variables.
    MaxColumns(usize),
    /// Σ s_λ over ℓ(λ) ≤ p, even variables.
    MaxRows(usize),
    /// Σ hs_λ over λ₁ ≤ p in the context's (n|m) variables.
    HookColumns(usize),
}

/// Accumulates the constrained sum over all qualifying λ with |λ| ≤ `degree`
/// (`None`: no degree cut, allowed only when the sum is finite). Partitions
/// on which the summand vanishes identically (too many rows, outside the
/// hook) are skipped.
pub fn schur_sum(constraint: SumConstraint, ctx: &SchurContext, degree: Option<u32>) -> Result<TruncatedSeries, SchurError> {
    let (bounds, hook) = match constraint {
        SumConstraint::MaxColumns(p) => (PartitionBounds { max_part: Some(p), max_length: Some(ctx.n), max_size: None }, false),
        SumConstraint::MaxRows(p) => (PartitionBounds { max_part: None, max_length: Some(p.min(ctx.n)), max_size: None }, false),
        SumConstraint::HookColumns(p) => {
            let max_length = (ctx.m == 0 || p == 0).then_some(ctx.n);
            (PartitionBounds { max_part: Some(p), max_length, max_size: None }, true)
        }
    };
    let finite = matches!((bounds.max_part, bounds.max_length), (Some(_), Some(_)))
        || bounds.max_part == Some(0)
        || bounds.max_length == Some(0);
    if degree.is_none() && !finite {
        return Err(SchurError::NeedsDegreeBound);
    }
    let bounds = PartitionBounds { max_size: degree.map(|d| d as usize), ..bounds };
    let bounds = match bounds {
        PartitionBounds { max_part: Some(0), .. } | PartitionBounds { max_length: Some(0), .. } => {
            PartitionBounds { max_size: Some(0), ..bounds }
        }
        b => b,
    };
    let mut total = MultiPoly::zero(ctx.nvars());
    for lambda in enumerate_partitions(bounds)? {
        let term = if hook {
            if !lambda.fits_hook(ctx.n, ctx.m) {
                continue;
            }
            hook_schur(&lambda, ctx)
        } else {
            schur(&lambda, ctx)
        };
        total = &total + &term;
    }
    Ok(TruncatedSeries::with_validity(total, degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn poly(nvars: usize, terms: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            terms.iter().map(|(c, e)| (ExponentVector::from_integer(e), BigInt::from(*c))),
        )
    }

    fn all_up_to(size: usize) -> Vec<Partition> {
        enumerate_partitions(PartitionBounds { max_size: Some(size), ..Default::default() })
            .unwrap()
            .collect()
    }

    #[test]
    fn schur_examples() {
        let ctx = SchurContext::new(2);
        assert_eq!(schur(&partition![1], &ctx), poly(2, &[(1, &[1, 0]), (1, &[0, 1])]));
        assert_eq!(schur(&partition![2, 1], &ctx), poly(2, &[(1, &[2, 1]), (1, &[1, 2])]));
        assert!(schur(&partition![1, 1, 1], &ctx).is_zero());
        assert!(schur(&Partition::empty(), &ctx).is_one());
    }

    #[test]
    fn h_cache_matches_fresh_values() {
        let ctx = SchurContext::hook(2, 2);
        assert!(ctx.h(0).is_one());
        assert!(ctx.h(-1).is_zero());
        let h3 = ctx.h(3);
        assert_eq!(*h3, complete_homogeneous(4, 0..2, 3));
        assert_eq!(*ctx.h(3), *h3);
        assert_eq!(*ctx.h_odd(2), poly(4, &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 1, 1]), (1, &[0, 0, 0, 2])]));
    }

    #[test]
    fn skew_examples() {
        let ctx = SchurContext::new(2);
        let s21 = schur(&partition![2, 1], &ctx);
        assert_eq!(skew_schur(&partition![2, 1], &Partition::empty(), &ctx).unwrap(), s21);
        // s_{21/1} = h_1² in two variables
        let expected = poly(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        let skew = skew_schur(&partition![2, 1], &partition![1], &ctx).unwrap();
        assert_eq!(skew, expected);
        assert_eq!(skew, tableau_sum(&partition![2, 1], &partition![1], 2, 0, 2));
        assert!(skew_schur(&partition![3, 1], &partition![3, 1], &ctx).unwrap().is_one());
        assert!(skew_schur(&partition![2], &partition![1, 1], &ctx).is_err());
    }

    #[test]
    fn skew_matches_tableaux() {
        let ctx = SchurContext::new(3);
        for outer in all_up_to(6) {
            for inner in subdiagrams(&outer) {
                assert_eq!(
                    skew_schur(&outer, &inner, &ctx).unwrap(),
                    tableau_sum(&outer, &inner, 3, 0, 3),
                    "{outer}/{inner}"
                );
            }
        }
    }

    #[test]
    fn hook_examples() {
        let ctx = SchurContext::hook(1, 1);
        assert_eq!(hook_schur(&partition![1], &ctx), poly(2, &[(1, &[1, 0]), (1, &[0, 1])]));
        assert!(hook_schur(&partition![2, 2, 2], &ctx).is_zero());
        assert_eq!(hook_schur(&partition![2], &ctx), poly(2, &[(1, &[2, 0]), (1, &[1, 1])]));
    }

    #[test]
    fn hook_specializations() {
        for lambda in all_up_to(6) {
            for k in 1..=3 {
                let even_only = SchurContext::hook(k, 0);
                assert_eq!(hook_schur(&lambda, &even_only), schur(&lambda, &even_only));
                let odd_only = SchurContext::hook(0, k);
                let conj = jacobi_trudi(&lambda.conjugate(), &Partition::empty(), &odd_only, Parity::Odd);
                assert_eq!(hook_schur(&lambda, &odd_only), conj);
            }
        }
    }

    #[test]
    fn vanishing_is_exact() {
        for lambda in all_up_to(6) {
            for n in 0..=3 {
                if n > 0 {
                    let tab = tableau_sum(&lambda, &Partition::empty(), n, 0, n);
                    assert_eq!(tab.is_zero(), lambda.len() > n, "{lambda} n={n}");
                }
                for m in 0..=3 {
                    if n + m == 0 {
                        continue;
                    }
                    let hs = hook_schur(&lambda, &SchurContext::hook(n, m));
                    assert_eq!(hs.is_zero(), !lambda.fits_hook(n, m), "{lambda} ({n}|{m})");
                }
            }
        }
    }

    #[test]
    fn symmetry_and_homogeneity() {
        let ctx = SchurContext::new(3);
        let hook = SchurContext::hook(2, 2);
        for lambda in all_up_to(6) {
            let s = schur(&lambda, &ctx);
            if !s.is_zero() {
                assert!(s.is_homogeneous());
                assert_eq!(s.max_doubled_degree(), Some(2 * lambda.size() as i64));
            }
            for perm in [[1, 0, 2], [0, 2, 1]] {
                assert_eq!(s.relabel(3, &perm), s);
            }
            let hs = hook_schur(&lambda, &hook);
            if !hs.is_zero() {
                assert!(hs.is_homogeneous());
            }
            assert_eq!(hs.relabel(4, &[1, 0, 2, 3]), hs);
            assert_eq!(hs.relabel(4, &[0, 1, 3, 2]), hs);
        }
    }

    #[test]
    fn algorithms_agree_small() {
        for n in 1..=3 {
            let ctx = SchurContext::new(n);
            for lambda in all_up_to(5) {
                let jt = schur(&lambda, &ctx);
                for alg in [Algorithm::Bialternant, Algorithm::Tableaux] {
                    assert_eq!(schur_with(&lambda, &ctx, alg).unwrap(), jt, "{lambda} n={n} {alg:?}");
                }
            }
        }
    }

    #[test]
    fn determinant_of_small_matrix() {
        // det [[1,2],[3,4]] = -2
        let m = [[1, 2], [3, 4]];
        let d = determinant(2, 1, |i, j| Some(Arc::new(MultiPoly::constant(1, BigInt::from(m[i][j])))));
        assert_eq!(d, MultiPoly::constant(1, BigInt::from(-2)));
        let m3 = [[2, 0, 1], [1, 3, 2], [1, 1, 1]];
        let d = determinant(3, 1, |i, j| Some(Arc::new(MultiPoly::constant(1, BigInt::from(m3[i][j])))));
        // 2·(3 − 2) + 1·(1 − 3)
        assert!(d.is_zero());
    }

    #[test]
    fn schur_sum_examples() {
        let ctx = SchurContext::new(2);
        let s = schur_sum(SumConstraint::MaxColumns(1), &ctx, None).unwrap();
        assert_eq!(s.poly(), &poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1])]));
        assert_eq!(s.valid_degree(), None);
        for n in 1..=3 {
            let s = schur_sum(SumConstraint::MaxRows(0), &SchurContext::new(n), None).unwrap();
            assert!(s.poly().is_one());
        }
        let one_var = SchurContext::new(1);
        let s = schur_sum(SumConstraint::MaxColumns(2), &one_var, None).unwrap();
        assert_eq!(s.poly(), &poly(1, &[(1, &[0]), (1, &[1]), (1, &[2])]));
        assert_eq!(
            schur_sum(SumConstraint::MaxRows(1), &ctx, None).unwrap_err(),
            SchurError::NeedsDegreeBound
        );
        let rows = schur_sum(SumConstraint::MaxRows(1), &one_var, Some(4)).unwrap();
        assert_eq!(rows.poly(), &(0..=4).map(|k| poly(1, &[(1, &[k])])).sum());
        let hook = SchurContext::hook(1, 1);
        assert_eq!(
            schur_sum(SumConstraint::HookColumns(1), &hook, None).unwrap_err(),
            SchurError::NeedsDegreeBound
        );
        let hs = schur_sum(SumConstraint::HookColumns(1), &hook, Some(2)).unwrap();
        // 1 + hs_1 + hs_11 = 1 + (x + y) + (xy + y²)
        assert_eq!(
            hs.poly(),
            &poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1]), (1, &[0, 2])])
        );
    }
}
