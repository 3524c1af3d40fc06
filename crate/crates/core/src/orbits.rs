//! Weyl orbits of A_N as multiset permutations of the dominant μ-tuple.
//!
//! Every element of the orbit `Π(Λ⁺)` is a distinct rearrangement of the
//! sorted μ-tuple of `Λ⁺`, so an orbit is streamed with a multiset
//! next-permutation step instead of Weyl reflections.

use num_bigint::BigUint;

use crate::lattice::{factorial, mu_to_lambda, xi, DominantLambda, MuTuple, Rank};

/// Number of weights in `Π(Λ⁺)`: `(N+1)! / (ξ(Λ⁺) (N+1-i_σ)!)`.
pub fn orbit_dimension(w: &DominantLambda) -> BigUint {
    let slots = w.rank().slots() as u64;
    let last = w
        .coeffs()
        .iter()
        .rposition(|&r| r != 0)
        .map_or(0, |i| i as u64 + 1);
    factorial(slots) / (xi(w) * factorial(slots - last))
}

/// Sorts a canonical tuple and reads off its λ-coefficients.
pub fn dominant_representative(t: &MuTuple) -> DominantLambda {
    let sorted = t.sorted_desc();
    DominantLambda::try_from_weight(mu_to_lambda(&sorted))
        .expect("sorted tuples have non-negative differences")
}

/// A Weyl orbit, given by its dominant representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    dominant: MuTuple,
    rank: Rank,
}

impl Orbit {
    pub fn new(w: &DominantLambda) -> Self {
        Orbit {
            dominant: w.mu(),
            rank: w.rank(),
        }
    }

    pub fn dominant(&self) -> &MuTuple {
        &self.dominant
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Streams all elements in lexicographically decreasing order.
    pub fn iter(&self) -> OrbitIter {
        OrbitIter(multiset_permutations(self.dominant.entries().to_vec()))
    }

    /// Splits the stream by leading entry, largest first. Concatenating the
    /// pieces reproduces [`Orbit::iter`].
    pub fn split_by_leading(&self) -> Vec<OrbitIter> {
        split_by_leading(self.dominant.entries().to_vec())
            .into_iter()
            .map(OrbitIter)
            .collect()
    }
}

/// Streams the elements of an [`Orbit`].
#[derive(Clone, Debug)]
pub struct OrbitIter(MultisetPermutations);

impl Iterator for OrbitIter {
    type Item = MuTuple;

    fn next(&mut self) -> Option<MuTuple> {
        self.0.next().map(MuTuple::from_canonical_unchecked)
    }
}

/// Distinct permutations of an integer multiset behind a fixed prefix, in
/// lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct MultisetPermutations {
    prefix: Vec<i64>,
    current: Option<Vec<i64>>,
}

impl MultisetPermutations {
    fn new(prefix: Vec<i64>, mut rest: Vec<i64>) -> Self {
        rest.sort_unstable_by(|a, b| b.cmp(a));
        MultisetPermutations {
            prefix,
            current: Some(rest),
        }
    }
}

/// All distinct rearrangements of `entries`, largest first.
pub fn multiset_permutations(entries: Vec<i64>) -> MultisetPermutations {
    MultisetPermutations::new(Vec::new(), entries)
}

/// [`multiset_permutations`] cut into one stream per distinct leading value.
pub fn split_by_leading(entries: Vec<i64>) -> Vec<MultisetPermutations> {
    let mut leads = entries.clone();
    leads.sort_unstable_by(|a, b| b.cmp(a));
    leads.dedup();
    leads
        .into_iter()
        .map(|lead| {
            let mut rest = entries.clone();
            let pos = rest.iter().position(|&a| a == lead).expect("present");
            rest.remove(pos);
            MultisetPermutations::new(vec![lead], rest)
        })
        .collect()
}

/// Steps `a` to the previous permutation in lexicographic order; false when
/// `a` is already the smallest (sorted ascending).
fn prev_permutation(a: &mut [i64]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] <= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = a.len() - 1;
    while a[j] >= a[pivot] {
        j -= 1;
    }
    a.swap(pivot, j);
    a[i..].reverse();
    true
}

impl Iterator for MultisetPermutations {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.current.as_mut()?;
        let mut out = Vec::with_capacity(self.prefix.len() + cur.len());
        out.extend_from_slice(&self.prefix);
        out.extend_from_slice(cur);
        if !prev_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// All elements of `Π(w)` in lexicographically decreasing order.
pub fn enumerate_orbit(w: &DominantLambda) -> OrbitIter {
    Orbit::new(w).iter()
}
