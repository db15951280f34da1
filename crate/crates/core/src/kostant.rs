//! Cohomology H^•(𝔫, V(p)) of the free 2-step nilpotent algebra with values
//! in the order-p parafermionic Fock space, the characters of its minimal
//! free resolution, and the Euler–Poincaré identities they imply.
//!
//! The cohomology table is built two ways: from Kostant's cross-section W¹
//! (weights σ(ρ+Λ)−ρ reflected to diagrams) and directly from self-conjugate
//! diagrams μ ⊆ (nⁿ) with degree (|μ| + r(μ))/2 and diagram μ^(p).
//!
//! Identity checks cancel the vacuum factor e^{pθ} before comparing, so only
//! integer-degree monomials appear, and denominators are cleared by
//! cross-multiplication.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partitions::{self_conjugate_in_square, self_conjugate_with, FrobeniusForm, Partition, PartitionError};
use crate::polyring::{expand_inverse_product, one_minus, ExponentVector, MultiPoly, PolyError, TruncatedSeries};
use crate::schur::{hook_schur, schur, schur_sum, SchurContext, SchurError, SumConstraint};
use crate::weyl::{alternant, kostant_weight, phi_sigma, subsets, w1_element, RootSystemB, Weight, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostantError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("cohomological degree {k} out of range 0..={max}")]
    DegreeOutOfRange { k: usize, max: usize },
    #[error("weight {0} does not reflect to a Young diagram")]
    NotDiagram(Weight),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Where a cohomology entry came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Subset I ⊆ {1..n} indexing σ_I = ω_I τ_I ∈ W¹.
    Subset(Vec<usize>),
    /// Self-conjugate μ ⊆ (nⁿ).
    SelfConjugate(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyEntry {
    /// Cohomological degree k.
    pub degree: usize,
    /// The un-augmented self-conjugate diagram μ.
    pub base: Partition,
    /// μ^(p).
    pub diagram: Partition,
    /// The gl_n highest weight σ(ρ+Λ)−ρ, doubled coordinates.
    pub weight: Weight,
    pub source: Source,
}

/// H^•(𝔫, V(p)) as 2ⁿ entries sorted by degree, then diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub p: usize,
    pub entries: Vec<CohomologyEntry>,
}

impl CohomologyTable {
    fn sorted(n: usize, p: usize, mut entries: Vec<CohomologyEntry>) -> Self {
        entries.sort_by(|a, b| (a.degree, a.diagram.size(), &a.diagram).cmp(&(b.degree, b.diagram.size(), &b.diagram)));
        CohomologyTable { n, p, entries }
    }

    /// The (k, μ^(p)) pairs, for comparing routes as multisets.
    pub fn signature(&self) -> Vec<(usize, Partition)> {
        let mut v: Vec<_> = self.entries.iter().map(|e| (e.degree, e.diagram.clone())).collect();
        v.sort();
        v
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(|e| e.degree).max().unwrap_or(0)
    }

    pub fn in_degree(&self, k: usize) -> impl Iterator<Item = &CohomologyEntry> {
        self.entries.iter().filter(move |e| e.degree == k)
    }
}

fn require_rank(n: usize) -> Result<(), KostantError> {
    if n == 0 {
        return Err(KostantError::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

/// Self-conjugate μ_I = (α | α) with α_j = n − i_j.
pub fn diagram_of_subset(subset: &[usize], n: usize) -> Partition {
    let mut arms: Vec<usize> = subset.iter().map(|&i| n - i).collect();
    arms.sort_unstable_by(|a, b| b.cmp(a));
    FrobeniusForm::new(arms.clone(), arms).expect("distinct subset elements").compose()
}

/// Kostant's route: one entry per σ ∈ W¹, degree #Φ_σ.
pub fn cohomology_via_w1(n: usize, p: usize) -> Result<CohomologyTable, KostantError> {
    require_rank(n)?;
    let roots = RootSystemB::new(n);
    let highest = Weight::fock_highest(n, p);
    let mut entries = Vec::with_capacity(1 << n);
    for subset in subsets(n) {
        let sigma = w1_element(&subset, n)?;
        let degree = phi_sigma(&sigma, &roots).len();
        let weight = kostant_weight(&sigma, &highest);
        // ν = −(reversed weight) = μ^(p) − (p/2)ⁿ
        let shifted = weight.reflect().add(&highest);
        let diagram = shifted.to_partition().ok_or_else(|| KostantError::NotDiagram(weight.clone()))?;
        let base = kostant_weight(&sigma, &Weight::zero(n))
            .reflect()
            .to_partition()
            .ok_or_else(|| KostantError::NotDiagram(weight.clone()))?;
        entries.push(CohomologyEntry { degree, base, diagram, weight, source: Source::Subset(subset) });
    }
    Ok(CohomologyTable::sorted(n, p, entries))
}

/// The diagram route: k = (|μ| + r(μ))/2 with diagram μ^(p).
pub fn cohomology_via_partitions(n: usize, p: usize) -> Result<CohomologyTable, KostantError> {
    require_rank(n)?;
    let highest = Weight::fock_highest(n, p);
    let mut entries = Vec::with_capacity(1 << n);
    for mu in self_conjugate_in_square(n) {
        let degree = (mu.size() + mu.rank()) / 2;
        let diagram = mu.augment_arms(p)?;
        let doubled: Vec<i64> = (0..n).map(|i| 2 * diagram.part(i) as i64).collect();
        let weight = Weight::from_doubled(doubled).sub(&highest).reflect();
        entries.push(CohomologyEntry {
            degree,
            base: mu.clone(),
            diagram,
            weight,
            source: Source::SelfConjugate(mu),
        });
    }
    Ok(CohomologyTable::sorted(n, p, entries))
}

/// Σ_{λ ⊆ (pⁿ)} s_λ: ch V(p) restricted to gl_n with e^{pθ} removed.
pub fn branching_character(n: usize, p: usize) -> Result<MultiPoly, KostantError> {
    require_rank(n)?;
    let ctx = SchurContext::new(n);
    Ok(schur_sum(SumConstraint::MaxColumns(p), &ctx, None)?.into_poly())
}

/// Σ_{λ ⊆ (pⁿ)} dim_gl(λ) and dim_so((p/2)Σe_i); equal by the branching rule.
pub fn branching_dimensions(n: usize, p: usize) -> Result<(BigInt, BigInt), KostantError> {
    require_rank(n)?;
    let bounds = crate::partitions::PartitionBounds::inside(n, p);
    let mut gl = BigInt::zero();
    for lambda in crate::partitions::enumerate_partitions(bounds)? {
        gl += crate::weyl::dim_gl(&lambda, n)?;
    }
    let so = crate::weyl::dim_so(&Weight::fock_highest(n, p))?;
    Ok((gl, so))
}

/// Which identity a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityKind {
    #[serde(rename = "parafermion")]
    Parafermion,
    #[serde(rename = "paraboson")]
    Paraboson,
    #[serde(rename = "parastat")]
    Parastat,
    #[serde(rename = "weyl-character")]
    WeylCharacter,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Parafermion => "parafermion",
            IdentityKind::Paraboson => "paraboson",
            IdentityKind::Parastat => "parastat",
            IdentityKind::WeylCharacter => "weyl-character",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Denominator used for the parabosonic check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum BosonDenominator {
    /// Π_i (1 − x_i) Π_{i<j} (1 − x_i x_j)
    #[default]
    Printed,
    /// Π_i (1 − x_i) Π_{i≤j} (1 − x_i x_j)
    SymmetricSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The lowest-degree monomial where the two sides differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    /// Total degree; a half-integer only for Laurent checks in odd rank.
    #[serde(serialize_with = "serialize_degree")]
    pub degree: f64,
    /// Doubled exponents.
    pub monomial: Vec<i32>,
    pub lhs: String,
    pub rhs: String,
}

fn serialize_degree<S: serde::Serializer>(d: &f64, s: S) -> Result<S::Ok, S::Error> {
    if d.fract() == 0.0 {
        s.serialize_i64(*d as i64)
    } else {
        s.serialize_f64(*d)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityKind,
    pub n: usize,
    pub m: usize,
    pub p: usize,
    /// Highest total degree compared; `None` for an exact comparison.
    pub degree: Option<u32>,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub millis: Option<u64>,
    pub conjecture: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denominator: Option<BosonDenominator>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn build(identity: IdentityKind, (n, m, p): (usize, usize, usize), degree: Option<u32>, (lhs, rhs): (&MultiPoly, &MultiPoly), started: Instant) -> Self {
        let first_discrepancy = first_discrepancy(lhs, rhs, degree);
        VerificationReport {
            identity,
            n,
            m,
            p,
            degree,
            status: if first_discrepancy.is_none() { Status::Pass } else { Status::Fail },
            first_discrepancy,
            millis: Some(started.elapsed().as_millis() as u64),
            conjecture: identity == IdentityKind::Parastat,
            denominator: None,
        }
    }
}

/// Compares through `degree` (all degrees when `None`).
pub fn first_discrepancy(lhs: &MultiPoly, rhs: &MultiPoly, degree: Option<u32>) -> Option<Discrepancy> {
    let diff = lhs - rhs;
    let diff = match degree {
        Some(d) => diff.truncate(d as i64),
        None => diff,
    };
    let (exp, _) = diff.terms().next()?;
    Some(Discrepancy {
        degree: exp.doubled_degree() as f64 / 2.0,
        monomial: exp.doubled().to_vec(),
        lhs: lhs.coeff(exp).to_string(),
        rhs: rhs.coeff(exp).to_string(),
    })
}

fn sign_of_degree(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// k(μ) = (|μ| + r(μ)) / 2.
pub fn cohomological_degree(mu: &Partition) -> usize {
    (mu.size() + mu.rank()) / 2
}

/// The factors 1 − x_i over `vars` and 1 − x_i x_j over `pairs`.
fn nilradical_factors(nvars: usize, vars: &[usize], pairs: &[(usize, usize)]) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    for &i in vars {
        let mut e = vec![0; nvars];
        e[i] = 1;
        out.push(one_minus(nvars, &e));
    }
    for &(i, j) in pairs {
        let mut e = vec![0; nvars];
        e[i] += 1;
        e[j] += 1;
        out.push(one_minus(nvars, &e));
    }
    out
}

fn pairs(vars: &[usize], diagonal: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &i) in vars.iter().enumerate() {
        let from = if diagonal { a } else { a + 1 };
        for &j in &vars[from..] {
            out.push((i, j));
        }
    }
    out
}

fn product(nvars: usize, factors: &[MultiPoly]) -> MultiPoly {
    factors.iter().fold(MultiPoly::one(nvars), |acc, f| &acc * f)
}

/// The factors 1 − x_i and 1 − x_i x_j (i < j) whose inverse product is ch U𝔫.
pub fn parafermion_denominator_factors(n: usize) -> Vec<MultiPoly> {
    let vars: Vec<usize> = (0..n).collect();
    nilradical_factors(n, &vars, &pairs(&vars, false))
}

/// Π_i (1 − x_i) Π_{i<j} (1 − x_i x_j).
pub fn parafermion_denominator(n: usize) -> MultiPoly {
    product(n, &parafermion_denominator_factors(n))
}

/// D_{ρ+pθ} = D_ρ · e^{pθ} · Σ_{λ ⊆ (pⁿ)} s_λ as Laurent polynomials.
pub fn verify_weyl_character(n: usize, p: usize, limit: usize) -> Result<VerificationReport, KostantError> {
    require_rank(n)?;
    let started = Instant::now();
    let rho = Weight::rho(n);
    let highest = Weight::fock_highest(n, p);
    let lhs = alternant(&rho.add(&highest), limit)?;
    let d_rho = alternant(&rho, limit)?;
    let vacuum = MultiPoly::monomial(highest.monomial(), BigInt::one());
    let rhs = &(&d_rho * &vacuum) * &branching_character(n, p)?;
    Ok(VerificationReport::build(IdentityKind::WeylCharacter, (n, 0, p), None, (&lhs, &rhs), started))
}

/// Σ_{μ=μ′ ⊆ (nⁿ)} (−1)^{k(μ)} s_{μ^(p)}: the Euler characteristic numerator.
pub fn parafermion_numerator(n: usize, p: usize) -> Result<MultiPoly, KostantError> {
    let ctx = SchurContext::new(n);
    let mut total = MultiPoly::zero(n);
    for mu in self_conjugate_in_square(n) {
        let s = schur(&mu.augment_arms(p)?, &ctx);
        total = &total + &s.scale(&sign_of_degree(cohomological_degree(&mu)));
    }
    Ok(total)
}

/// Σ (−1)^{k(μ)} s_{μ^(p)} = Π(1−x_i) Π_{i<j}(1−x_i x_j) · Σ_{λ⊆(pⁿ)} s_λ,
/// compared exactly: both sides are polynomials.
pub fn verify_parafermion_identity(n: usize, p: usize) -> Result<VerificationReport, KostantError> {
    require_rank(n)?;
    let started = Instant::now();
    let lhs = parafermion_numerator(n, p)?;
    let rhs = &parafermion_denominator(n) * &branching_character(n, p)?;
    Ok(VerificationReport::build(IdentityKind::Parafermion, (n, 0, p), None, (&lhs, &rhs), started))
}

/// Σ_{μ=μ′} (−1)^{k(μ)} s_{[μ^(p)]′} = denominator · Σ_{ℓ(λ)≤p} s_λ through
/// total degree `degree`. Only μ with ℓ([μ^(p)]′) ≤ n and |μ^(p)| ≤ degree
/// contribute there.
pub fn verify_paraboson_identity(
    n: usize,
    p: usize,
    degree: u32,
    denominator: BosonDenominator,
) -> Result<VerificationReport, KostantError> {
    require_rank(n)?;
    let started = Instant::now();
    let ctx = SchurContext::new(n);
    let budget = degree as usize;
    let mut lhs = MultiPoly::zero(n);
    for mu in self_conjugate_with(None, budget, |f| f.size() + p * f.rank()) {
        let dual = mu.augment_arms(p)?.conjugate();
        if dual.len() > n {
            continue;
        }
        lhs = &lhs + &schur(&dual, &ctx).scale(&sign_of_degree(cohomological_degree(&mu)));
    }
    let vars: Vec<usize> = (0..n).collect();
    let factors = nilradical_factors(n, &vars, &pairs(&vars, denominator == BosonDenominator::SymmetricSquare));
    let sum = schur_sum(SumConstraint::MaxRows(p), &ctx, Some(degree))?;
    let rhs = sum.mul_poly(&product(n, &factors))?.into_poly();
    let lhs = lhs.truncate(degree as i64);
    let mut report = VerificationReport::build(IdentityKind::Paraboson, (n, 0, p), Some(degree), (&lhs, &rhs), started);
    report.denominator = Some(denominator);
    Ok(report)
}

/// Π_{î≠ĵ}(1 + x_i x_j) Σ_{μ=μ′} (−1)^{k(μ)} hs_{μ^(p)}
///   = Π_i(1 − x_i) Π_{i<j, î=ĵ}(1 − x_i x_j) · Σ_{λ₁≤p} hs_λ
/// through total degree `degree`, variables split n even then m odd. The
/// outcome is recorded, never asserted.
pub fn verify_parastat_identity(n: usize, m: usize, p: usize, degree: u32) -> Result<VerificationReport, KostantError> {
    if n + m == 0 {
        return Err(KostantError::InvalidParameter("need at least one variable".into()));
    }
    let started = Instant::now();
    let ctx = SchurContext::hook(n, m);
    let nvars = n + m;
    let budget = degree as usize;
    let mut alternating = MultiPoly::zero(nvars);
    for mu in self_conjugate_with(None, budget, |f| f.size() + p * f.rank()) {
        let aug = mu.augment_arms(p)?;
        if !aug.fits_hook(n, m) {
            continue;
        }
        alternating = &alternating + &hook_schur(&aug, &ctx).scale(&sign_of_degree(cohomological_degree(&mu)));
    }
    let mut mixed = MultiPoly::one(nvars);
    for i in 0..n {
        for j in n..nvars {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e[j] = 1;
            let plus = &MultiPoly::one(nvars) + &MultiPoly::monomial(ExponentVector::from_integer(&e), BigInt::one());
            mixed = &mixed * &plus;
        }
    }
    let lhs = TruncatedSeries::new(alternating, degree).mul_poly(&mixed)?.into_poly();

    let all: Vec<usize> = (0..nvars).collect();
    let even: Vec<usize> = (0..n).collect();
    let odd: Vec<usize> = (n..nvars).collect();
    let mut same = pairs(&even, false);
    same.extend(pairs(&odd, false));
    let denominator = product(nvars, &nilradical_factors(nvars, &all, &same));
    let sum = schur_sum(SumConstraint::HookColumns(p), &ctx, Some(degree))?;
    let rhs = sum.mul_poly(&denominator)?.into_poly();
    Ok(VerificationReport::build(IdentityKind::Parastat, (n, m, p), Some(degree), (&lhs, &rhs), started))
}

/// ch P_k = (Σ_{entries of degree k} s_{μ^(p)}) / (Π(1−x_i) Π_{i<j}(1−x_i x_j)),
/// expanded through `degree`.
pub fn resolution_character(n: usize, p: usize, k: usize, degree: u32) -> Result<TruncatedSeries, KostantError> {
    let table = cohomology_via_partitions(n, p)?;
    resolution_character_from(&table, k, degree)
}

fn resolution_character_from(table: &CohomologyTable, k: usize, degree: u32) -> Result<TruncatedSeries, KostantError> {
    let n = table.n;
    let max = table.max_degree();
    if k > max {
        return Err(KostantError::DegreeOutOfRange { k, max });
    }
    let ctx = SchurContext::new(n);
    let mut generators = MultiPoly::zero(n);
    for e in table.in_degree(k) {
        generators = &generators + &schur(&e.diagram, &ctx);
    }
    let free = expand_inverse_product(&parafermion_denominator_factors(n), degree, n)?;
    Ok(free.mul_poly(&generators)?)
}

/// Σ_k (−1)^k ch P_k through `degree`; equals ch V(p) (vacuum factor removed).
pub fn euler_characteristic(n: usize, p: usize, degree: u32) -> Result<TruncatedSeries, KostantError> {
    let table = cohomology_via_partitions(n, p)?;
    let mut acc = TruncatedSeries::new(MultiPoly::zero(n), degree);
    for k in 0..=table.max_degree() {
        let term = resolution_character_from(&table, k, degree)?.scale(&sign_of_degree(k));
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn sig(entries: &[(usize, Partition)]) -> Vec<(usize, Partition)> {
        let mut v = entries.to_vec();
        v.sort();
        v
    }

    fn poly(nvars: usize, terms: &[(i64, &[i32])]) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            terms.iter().map(|(c, e)| (ExponentVector::from_integer(e), BigInt::from(*c))),
        )
    }

    #[test]
    fn w1_table_examples() {
        let t = cohomology_via_w1(1, 0).unwrap();
        assert_eq!(t.signature(), sig(&[(0, partition![]), (1, partition![1])]));
        let t = cohomology_via_w1(2, 1).unwrap();
        assert_eq!(
            t.signature(),
            sig(&[(0, partition![]), (1, partition![2]), (2, partition![3, 1]), (3, partition![3, 3])])
        );
        for n in 1..=5 {
            assert_eq!(cohomology_via_w1(n, 2).unwrap().entries.len(), 1 << n);
        }
    }

    #[test]
    fn partition_table_examples() {
        let t = cohomology_via_partitions(2, 0).unwrap();
        assert_eq!(
            t.signature(),
            sig(&[(0, partition![]), (1, partition![1]), (2, partition![2, 1]), (3, partition![2, 2])])
        );
        assert_eq!(cohomology_via_partitions(2, 1).unwrap().signature(), cohomology_via_w1(2, 1).unwrap().signature());
        let t = cohomology_via_partitions(1, 3).unwrap();
        assert_eq!(t.signature(), sig(&[(0, partition![]), (1, partition![4])]));
        assert!(cohomology_via_partitions(0, 1).is_err());
    }

    #[test]
    fn routes_agree_on_weights_too() {
        for n in 1..=4 {
            for p in 0..=3 {
                let a = cohomology_via_w1(n, p).unwrap();
                let b = cohomology_via_partitions(n, p).unwrap();
                let key = |t: &CohomologyTable| {
                    let mut v: Vec<_> = t.entries.iter().map(|e| (e.degree, e.diagram.clone(), e.weight.clone(), e.base.clone())).collect();
                    v.sort();
                    v
                };
                assert_eq!(key(&a), key(&b), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn table_degree_invariant() {
        for e in cohomology_via_w1(4, 2).unwrap().entries {
            assert_eq!(e.degree, cohomological_degree(&e.base));
            assert_eq!(e.diagram, e.base.augment_arms(2).unwrap());
        }
    }

    #[test]
    fn subset_diagram_bijection() {
        for n in 1..=5 {
            let mut seen: Vec<_> = subsets(n).map(|s| diagram_of_subset(&s, n)).collect();
            seen.sort();
            let mut square = self_conjugate_in_square(n);
            square.sort();
            assert_eq!(seen, square);
            for s in subsets(n) {
                let base = cohomology_via_w1_entry_base(&s, n);
                assert_eq!(base, diagram_of_subset(&s, n), "I={s:?}");
            }
        }
    }

    fn cohomology_via_w1_entry_base(s: &[usize], n: usize) -> Partition {
        let sigma = w1_element(s, n).unwrap();
        kostant_weight(&sigma, &Weight::zero(n)).reflect().to_partition().unwrap()
    }

    #[test]
    fn branching_examples() {
        let b = branching_character(2, 1).unwrap();
        assert_eq!(b, poly(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1])]));
        assert_eq!(b.coefficient_sum(), BigInt::from(4));
        for p in 0..5 {
            let b = branching_character(1, p).unwrap();
            let expected: MultiPoly = (0..=p as i32).map(|k| poly(1, &[(1, &[k])])).sum();
            assert_eq!(b, expected);
        }
        assert!(branching_character(3, 0).unwrap().is_one());
    }

    #[test]
    fn fermionic_fock_dimension() {
        for n in 1..=6 {
            assert_eq!(branching_character(n, 1).unwrap().coefficient_sum(), BigInt::from(1u64 << n));
        }
    }

    #[test]
    fn branching_dimension_consistency() {
        for n in 1..=3 {
            for p in 0..=4 {
                let (gl, so) = branching_dimensions(n, p).unwrap();
                assert_eq!(gl, so, "n={n} p={p}");
                assert_eq!(branching_character(n, p).unwrap().coefficient_sum(), gl);
            }
        }
        assert_eq!(branching_dimensions(2, 2).unwrap().1, BigInt::from(10));
    }

    #[test]
    fn weyl_character_examples() {
        for (n, p) in [(1, 2), (2, 1), (2, 0)] {
            let r = verify_weyl_character(n, p, 6).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn weyl_character_one_variable_by_hand() {
        // D_{ρ+pθ}/D_ρ = x^{-1}(1 + x + x²) for n = 1, p = 2
        let num = alternant(&Weight::rho(1).add(&Weight::fock_highest(1, 2)), 6).unwrap();
        let den = alternant(&Weight::rho(1), 6).unwrap();
        let ratio = MultiPoly::from_terms(
            1,
            [(-2, 1), (0, 1), (2, 1)].map(|(e, c)| (ExponentVector::from_doubled(vec![e]), BigInt::from(c))),
        );
        assert_eq!(&den * &ratio, num);
    }

    #[test]
    fn parafermion_examples() {
        for p in 0..=5 {
            assert!(verify_parafermion_identity(1, p).unwrap().passed());
        }
        let r = verify_parafermion_identity(2, 1).unwrap();
        assert!(r.passed());
        assert!(r.first_discrepancy.is_none());
        // 1 − s_2 + s_31 − s_33 expanded
        let ctx = SchurContext::new(2);
        let expected = &(&(&MultiPoly::one(2) - &schur(&partition![2], &ctx)) + &schur(&partition![3, 1], &ctx))
            - &schur(&partition![3, 3], &ctx);
        assert_eq!(parafermion_numerator(2, 1).unwrap(), expected);
    }

    #[test]
    fn parafermion_p0_is_trivial_resolution() {
        for n in 1..=3 {
            let ctx = SchurContext::new(n);
            let direct: MultiPoly = self_conjugate_in_square(n)
                .iter()
                .map(|mu| schur(mu, &ctx).scale(&sign_of_degree(cohomological_degree(mu))))
                .sum();
            assert_eq!(parafermion_numerator(n, 0).unwrap(), direct);
            assert_eq!(direct, parafermion_denominator(n));
        }
    }

    #[test]
    fn broken_identity_reports_discrepancy() {
        let lhs = poly(1, &[(1, &[0]), (2, &[3])]);
        let rhs = poly(1, &[(1, &[0]), (1, &[2]), (2, &[3])]);
        let d = first_discrepancy(&lhs, &rhs, None).unwrap();
        assert_eq!(d.degree, 2.0);
        assert_eq!(d.monomial, vec![4]);
        assert_eq!((d.lhs.as_str(), d.rhs.as_str()), ("0", "1"));
        assert!(first_discrepancy(&lhs, &rhs, Some(1)).is_none());
    }

    #[test]
    fn paraboson_examples() {
        for p in 1..=3 {
            let r = verify_paraboson_identity(1, p, 6, BosonDenominator::Printed).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = verify_paraboson_identity(2, 1, 8, BosonDenominator::Printed).unwrap();
        assert!(r.passed(), "{r:?}");
        for n in 1..=3 {
            let boson = verify_paraboson_identity(n, 0, 8, BosonDenominator::Printed).unwrap();
            let fermion = verify_parafermion_identity(n, 0).unwrap();
            assert_eq!(boson.status, fermion.status);
        }
    }

    #[test]
    fn symmetric_square_denominator_is_reported() {
        let r = verify_paraboson_identity(1, 1, 6, BosonDenominator::SymmetricSquare).unwrap();
        assert_eq!(r.denominator, Some(BosonDenominator::SymmetricSquare));
        // 1 versus (1 − x)(1 − x²)/(1 − x): first mismatch at x²
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_discrepancy.unwrap().degree, 2.0);
    }

    #[test]
    fn parastat_reductions() {
        for n in 1..=2 {
            for p in 0..=2 {
                let st = verify_parastat_identity(n, 0, p, 6).unwrap();
                let pf = verify_parafermion_identity(n, p).unwrap();
                assert_eq!(st.status, pf.status, "m=0 n={n} p={p}");
                let st = verify_parastat_identity(0, n, p, 6).unwrap();
                let pb = verify_paraboson_identity(n, p, 6, BosonDenominator::Printed).unwrap();
                assert_eq!(st.status, pb.status, "n=0 m={n} p={p}");
            }
        }
    }

    #[test]
    fn parastat_report_is_well_formed() {
        let r = verify_parastat_identity(1, 1, 1, 6).unwrap();
        assert!(r.conjecture);
        assert_eq!(r.passed(), r.first_discrepancy.is_none());
        assert_eq!((r.n, r.m, r.p, r.degree), (1, 1, 1, Some(6)));
    }

    #[test]
    fn resolution_character_examples() {
        let p0 = resolution_character(2, 1, 0, 3).unwrap();
        let free = expand_inverse_product(&parafermion_denominator_factors(2), 3, 2).unwrap();
        assert_eq!(p0, free);
        let r = resolution_character(1, 1, 1, 4).unwrap();
        assert_eq!(r.poly(), &poly(1, &[(1, &[2]), (1, &[3]), (1, &[4])]));
        assert_eq!(
            resolution_character(2, 1, 4, 3).unwrap_err(),
            KostantError::DegreeOutOfRange { k: 4, max: 3 }
        );
        let euler = euler_characteristic(2, 1, 6).unwrap();
        assert_eq!(euler.poly(), &branching_character(2, 1).unwrap().truncate(6));
    }

    #[test]
    fn euler_consistency() {
        for n in 1..=3 {
            for p in 0..=3 {
                let euler = euler_characteristic(n, p, 10).unwrap();
                assert_eq!(euler.poly(), &branching_character(n, p).unwrap().truncate(10), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn report_json_schema() {
        let mut r = verify_parafermion_identity(2, 1).unwrap();
        r.millis = None;
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "identity": "parafermion", "n": 2, "m": 0, "p": 1, "degree": null,
                "status": "pass", "first_discrepancy": null, "millis": null, "conjecture": false
            })
        );
    }
}
