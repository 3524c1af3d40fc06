//! Weights of A_N in the two bases used throughout the crate, integer
//! partitions, and the combinatorial scalars built on them.
//!
//! A weight is written either in the basis of fundamental dominant weights
//! `λ_1 … λ_N` ([`LambdaWeight`]) or as an (N+1)-tuple over the weights
//! `μ_1 … μ_{N+1}` of the defining representation ([`MuTuple`]). Since the
//! `μ_I` sum to zero a μ-tuple is only defined up to a uniform shift; the
//! canonical representative has minimum entry zero.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Exact rational scalar used for every coefficient in the crate.
pub type Scalar = BigRational;

/// Rank `N` of the algebra `A_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.0
    }

    /// Number of μ-coordinates, `N + 1`.
    #[inline]
    pub fn slots(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// A weight `Σ m_i λ_i` with arbitrary integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaWeight {
    coeffs: Vec<i64>,
}

impl LambdaWeight {
    pub fn new(coeffs: Vec<i64>, rank: Rank) -> Result<Self> {
        if coeffs.len() != rank.n() as usize {
            return Err(Error::LengthMismatch {
                expected: rank.n() as usize,
                found: coeffs.len(),
            });
        }
        Ok(LambdaWeight { coeffs })
    }

    pub fn zero(rank: Rank) -> Self {
        LambdaWeight {
            coeffs: vec![0; rank.n() as usize],
        }
    }

    pub fn rank(&self) -> Rank {
        Rank(self.coeffs.len() as u32)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&m| m >= 0)
    }
}

impl fmt::Display for LambdaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &m) in self.coeffs.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let sign = if m < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = m.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}l{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}l{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A dominant weight: every λ-coefficient is non-negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantLambda(LambdaWeight);

impl DominantLambda {
    pub fn new(coeffs: Vec<i64>, rank: Rank) -> Result<Self> {
        Self::try_from_weight(LambdaWeight::new(coeffs, rank)?)
    }

    pub fn try_from_weight(w: LambdaWeight) -> Result<Self> {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coeffs.clone()));
        }
        Ok(DominantLambda(w))
    }

    pub fn zero(rank: Rank) -> Self {
        DominantLambda(LambdaWeight::zero(rank))
    }

    /// The fundamental dominant weight `λ_i`, `1 ≤ i ≤ N`.
    pub fn fundamental(i: usize, rank: Rank) -> Result<Self> {
        let n = rank.n() as usize;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        Ok(DominantLambda(LambdaWeight { coeffs }))
    }

    pub fn rank(&self) -> Rank {
        self.0.rank()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0.coeffs
    }

    pub fn as_weight(&self) -> &LambdaWeight {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.coeffs.iter().all(|&r| r == 0)
    }

    /// Canonical μ-tuple; it is sorted non-increasing with last entry zero.
    pub fn mu(&self) -> MuTuple {
        lambda_to_mu(&self.0)
    }
}

impl fmt::Display for DominantLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Coordinates of a weight over `μ_1 … μ_{N+1}` in the min-zero gauge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuTuple(Vec<i64>);

impl MuTuple {
    /// Shifts `entries` into the canonical gauge. Needs at least two slots.
    pub fn canonical(mut entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::LengthMismatch {
                expected: 2,
                found: entries.len(),
            });
        }
        let min = *entries.iter().min().expect("non-empty");
        for a in entries.iter_mut() {
            *a -= min;
        }
        Ok(MuTuple(entries))
    }

    pub(crate) fn from_canonical_unchecked(entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.iter().min(), Some(&0));
        MuTuple(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> Rank {
        Rank(self.0.len() as u32 - 1)
    }

    pub fn sorted_desc(&self) -> MuTuple {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        MuTuple(v)
    }

    /// Strictly positive entries, in their current order.
    pub fn positive_entries(&self) -> Vec<i64> {
        self.0.iter().copied().filter(|&a| a > 0).collect()
    }

    /// Product of `(multiplicity)!` over distinct non-zero values.
    pub fn nonzero_value_symmetry(&self) -> BigUint {
        let mut v = self.positive_entries();
        v.sort_unstable();
        multiplicity_factorials(&v)
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl fmt::Display for MuTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `λ_i = μ_1 + … + μ_i`, so `a_i - a_{i+1} = m_i`.
pub fn lambda_to_mu(w: &LambdaWeight) -> MuTuple {
    let m = &w.coeffs;
    let mut a = vec![0i64; m.len() + 1];
    for i in (0..m.len()).rev() {
        a[i] = a[i + 1] + m[i];
    }
    let min = *a.iter().min().expect("at least two slots");
    for x in a.iter_mut() {
        *x -= min;
    }
    MuTuple(a)
}

/// Inverse of [`lambda_to_mu`]; gauge independent.
pub fn mu_to_lambda(t: &MuTuple) -> LambdaWeight {
    LambdaWeight {
        coeffs: t.0.windows(2).map(|w| w[0] - w[1]).collect(),
    }
}

/// `ξ(Λ⁺) = ∏ (i_j - i_{j-1})!` over the positions `i_1 < … < i_σ` of the
/// non-zero λ-coefficients, with `i_0 = 0`.
pub fn xi(w: &DominantLambda) -> BigUint {
    let mut prev = 0u64;
    let mut acc = BigUint::one();
    for (idx, &r) in w.coeffs().iter().enumerate() {
        if r != 0 {
            let pos = idx as u64 + 1;
            acc *= factorial(pos - prev);
            prev = pos;
        }
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Product of factorials of run lengths in a sorted slice.
pub(crate) fn multiplicity_factorials<T: PartialEq>(sorted: &[T]) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        acc *= factorial((j - i) as u64);
        i = j;
    }
    acc
}

/// An integer partition stored with non-increasing parts, all `≥ 1`.
///
/// The empty partition (of zero) is allowed; it stands for the constant
/// monomial in power-product expansions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` non-increasingly. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(s: u32) -> Self {
        assert!(s > 0, "parts are positive");
        Partition(vec![s])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    pub fn has_part_one(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// Product of factorials of the multiplicities of equal parts.
    pub fn xi(&self) -> BigUint {
        multiplicity_factorials(&self.0)
    }

    /// `(s_1 + … + s_k)! / (s_1! … s_k!)`.
    pub fn multinomial(&self) -> BigUint {
        let den = self
            .0
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * factorial(p as u64));
        factorial(self.size() as u64) / den
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn with_part(&self, part: u32) -> Partition {
        self.union(&Partition::single(part))
    }

    /// Removes one copy of `part`. Panics if it is absent.
    pub fn without_part(&self, part: u32) -> Partition {
        let mut v = self.0.clone();
        let idx = v.iter().position(|&p| p == part).expect("part present");
        v.remove(idx);
        Partition(v)
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split([',', '+'])
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

fn partitions_bounded(
    s: u32,
    max_part: u32,
    min_part: u32,
    max_len: usize,
    out: &mut Vec<Partition>,
    cur: &mut Vec<u32>,
) {
    if s == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    let hi = s.min(max_part);
    for p in (min_part..=hi).rev() {
        cur.push(p);
        partitions_bounded(s - p, p, min_part, max_len, out, cur);
        cur.pop();
    }
}

/// All partitions of `s`, lexicographically decreasing.
pub fn partitions(s: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(s, s, 1, usize::MAX, &mut out, &mut Vec::new());
    out
}

/// Partitions of `s` into exactly `k` parts, lexicographically decreasing.
pub fn partitions_into_k(s: u32, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(s, s, 1, k, &mut out, &mut Vec::new());
    out.retain(|p| p.len() == k);
    out
}

/// Partitions of `s` with every part at least 2.
pub fn partitions_no_ones(s: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(s, s, 2, usize::MAX, &mut out, &mut Vec::new());
    out
}

/// `κ(s)`: the number of partitions of `s` without unit parts.
pub fn kappa(s: u32) -> usize {
    partitions_no_ones(s).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(n: u32) -> Rank {
        Rank::new(n).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example_lambda_to_mu() {
        let w = LambdaWeight::new(vec![-1, 2, -1, 1, 1, -1, 1], rank(7)).unwrap();
        assert_eq!(lambda_to_mu(&w).entries(), &[2, 3, 1, 2, 1, 0, 1, 0]);
    }

    #[test]
    fn lambda_to_mu_small_cases() {
        let l1 = LambdaWeight::new(vec![1, 0], rank(2)).unwrap();
        assert_eq!(lambda_to_mu(&l1).entries(), &[1, 0, 0]);
        let w = DominantLambda::new(vec![1, 0, 1, 0, 0, 1, 0], rank(7)).unwrap();
        assert_eq!(w.mu().entries(), &[3, 2, 2, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn mu_to_lambda_cases() {
        let t = MuTuple::canonical(vec![2, 3, 1, 2, 1, 0, 1, 0]).unwrap();
        assert_eq!(mu_to_lambda(&t).coeffs(), &[-1, 2, -1, 1, 1, -1, 1]);
        let t = MuTuple::canonical(vec![1, 1, 1]).unwrap();
        assert_eq!(t.entries(), &[0, 0, 0]);
        assert_eq!(mu_to_lambda(&t).coeffs(), &[0, 0]);
        let t = MuTuple::canonical(vec![2, 1, 0]).unwrap();
        assert_eq!(mu_to_lambda(&t).coeffs(), &[1, 1]);
    }

    #[test]
    fn xi_cases() {
        let w = DominantLambda::new(vec![1, 0, 1, 0, 0, 1, 0], rank(7)).unwrap();
        assert_eq!(xi(&w), BigUint::from(12u32));
        for n in 1..6 {
            let l1 = DominantLambda::fundamental(1, rank(n)).unwrap();
            assert_eq!(xi(&l1), BigUint::one());
        }
        let two_l2 = DominantLambda::new(vec![0, 2, 0, 0], rank(4)).unwrap();
        assert_eq!(two_l2.mu().entries(), &[2, 2, 0, 0, 0]);
        assert_eq!(xi(&two_l2), BigUint::from(2u32));
        assert_eq!(two_l2.mu().nonzero_value_symmetry(), BigUint::from(2u32));
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_into_k(4, 2), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(
            partitions_no_ones(6),
            vec![p(&[6]), p(&[4, 2]), p(&[3, 3]), p(&[2, 2, 2])]
        );
        assert_eq!(kappa(2), 1);
        assert_eq!((4..=7).map(kappa).collect::<Vec<_>>(), vec![2, 2, 4, 4]);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn partitions_by_length_cover_all() {
        for s in 1..=10u32 {
            let total: usize = (1..=s as usize)
                .map(|k| partitions_into_k(s, k).len())
                .sum();
            assert_eq!(total, partitions(s).len());
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(p(&[2, 2]).multinomial(), BigUint::from(6u32));
        assert_eq!(p(&[4]).multinomial(), BigUint::one());
        assert_eq!(p(&[2, 1, 1]).multinomial(), BigUint::from(12u32));
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("3,2".parse::<Partition>().unwrap(), p(&[3, 2]));
        assert_eq!("(2,3,2)".parse::<Partition>().unwrap(), p(&[3, 2, 2]));
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(Rank::new(0).is_err());
        assert!(LambdaWeight::new(vec![1], rank(2)).is_err());
        assert!(DominantLambda::new(vec![-1, 0], rank(2)).is_err());
    }
}
