//! Integer partitions and conjugacy-class arithmetic for the symmetric group.
//!
//! Partitions are stored with parts weakly decreasing (the dominant
//! convention in character-theory references) and serialize as arrays of
//! integers in that order, e.g. `[3,1,1]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

/// A partition of a nonnegative integer: positive parts, weakly decreasing.
///
/// Partitions are value types with a total order (lexicographic on the
/// part vectors) so they can key maps deterministically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts already in weakly decreasing order.
    ///
    /// Panics if a part is zero or the order is violated.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn one_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The partition `(1^n)` of the identity class.
    pub fn ones(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when every part is odd (vacuously for the empty partition).
    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// True when the parts are strictly decreasing.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiplicity of each part value, as `(part, multiplicity)` pairs in
    /// decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
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

static CACHE_BOUND: AtomicU32 = AtomicU32::new(30);

/// Raises or lowers the degree up to which generated partition lists are
/// memoized (default 30). Larger degrees are still generated, just not
/// retained.
pub fn set_partition_cache_bound(bound: u32) {
    CACHE_BOUND.store(bound, Ordering::Relaxed);
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<Partition>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Partition>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All partitions of `n`, each exactly once, in lexicographically
/// decreasing order on parts: `(3) > (2,1) > (1,1,1)`.
pub fn partitions(n: u32) -> Arc<Vec<Partition>> {
    if n <= CACHE_BOUND.load(Ordering::Relaxed) {
        let mut guard = cache().lock().unwrap();
        if let Some(list) = guard.get(&n) {
            return Arc::clone(list);
        }
        let list = Arc::new(generate(n));
        guard.insert(n, Arc::clone(&list));
        list
    } else {
        Arc::new(generate(n))
    }
}

/// Iterative generation in decreasing lexicographic order; no recursion.
fn generate(n: u32) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = vec![n];
    loop {
        out.push(Partition {
            parts: cur.clone(),
        });
        // Drop trailing 1s, decrement the last remaining part, and refill
        // greedily with parts no larger than it.
        let mut rem: u32 = 0;
        while let Some(&last) = cur.last() {
            if last == 1 {
                cur.pop();
                rem += 1;
            } else {
                break;
            }
        }
        let Some(last) = cur.last_mut() else {
            break;
        };
        *last -= 1;
        rem += 1;
        let cap = *last;
        while rem > cap {
            cur.push(cap);
            rem -= cap;
        }
        cur.push(rem);
    }
    out
}

/// Partitions of `n` with pairwise distinct parts (SP(n)), in the order
/// induced by [`partitions`].
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    partitions(n)
        .iter()
        .filter(|p| p.is_strict())
        .cloned()
        .collect()
}

/// Partitions of `n` with all parts odd (OP(n)), in the order induced by
/// [`partitions`].
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    partitions(n)
        .iter()
        .filter(|p| p.is_odd())
        .cloned()
        .collect()
}

/// Centralizer order `z_mu = prod_i i^{m_i} m_i!` of a permutation of
/// cycle type `mu` in `S_n`; the class size is `n!/z_mu`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (part, mult) in mu.multiplicities() {
        z *= BigUint::from(part).pow(mult);
        z *= crate::rational::factorial(mult as u64);
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{factorial, frac, Rational};
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn partitions_of_zero_is_the_empty_partition() {
        let ps = partitions(0);
        assert_eq!(ps.as_slice(), &[Partition::empty()]);
    }

    #[test]
    fn partitions_of_three_in_canonical_order() {
        let ps = partitions(3);
        let expected = vec![
            Partition::new(vec![3]),
            Partition::new(vec![2, 1]),
            Partition::new(vec![1, 1, 1]),
        ];
        assert_eq!(ps.as_slice(), expected.as_slice());
    }

    #[test]
    fn partition_counts_small() {
        // Hand enumeration: p(5) = 7.
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(1).len(), 1);
    }

    #[test]
    fn strict_partitions_small() {
        assert_eq!(strict_partitions(1), vec![Partition::new(vec![1])]);
        assert_eq!(strict_partitions(2), vec![Partition::new(vec![2])]);
        let sp5 = strict_partitions(5);
        assert_eq!(sp5.len(), 3);
        assert!(sp5.contains(&Partition::new(vec![5])));
        assert!(sp5.contains(&Partition::new(vec![4, 1])));
        assert!(sp5.contains(&Partition::new(vec![3, 2])));
    }

    #[test]
    fn odd_partitions_small() {
        assert_eq!(odd_partitions(0), vec![Partition::empty()]);
        assert_eq!(odd_partitions(2), vec![Partition::new(vec![1, 1])]);
        let op5 = odd_partitions(5);
        assert_eq!(op5.len(), 3);
        assert!(op5.contains(&Partition::new(vec![5])));
        assert!(op5.contains(&Partition::new(vec![3, 1, 1])));
        assert!(op5.contains(&Partition::new(vec![1, 1, 1, 1, 1])));
    }

    #[test]
    fn centralizer_orders_in_s3() {
        // Direct counts of commuting permutations in S_3.
        assert_eq!(
            centralizer_order(&Partition::new(vec![1, 1, 1])),
            BigUint::from(6u32)
        );
        assert_eq!(
            centralizer_order(&Partition::new(vec![2, 1])),
            BigUint::from(2u32)
        );
        assert_eq!(
            centralizer_order(&Partition::new(vec![3])),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn euler_identity_up_to_30() {
        for n in 0..=30 {
            assert_eq!(
                strict_partitions(n).len(),
                odd_partitions(n).len(),
                "strict/odd count mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn centralizer_reciprocals_sum_to_one() {
        // Groupoid cardinality of n-fold covers of the circle.
        for n in 0..=12u32 {
            let total: Rational = partitions(n)
                .iter()
                .map(|mu| frac(1, BigInt::from(centralizer_order(mu))))
                .fold(Rational::zero(), |a, b| a + b);
            assert!(total.is_one(), "sum of 1/z_mu != 1 at n = {n}");
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=10u32 {
            let nf = factorial(n as u64);
            let total: BigUint = partitions(n)
                .iter()
                .map(|mu| &nf / centralizer_order(mu))
                .sum();
            assert_eq!(total, nf, "class sizes at n = {n}");
        }
    }

    #[test]
    fn odd_partition_length_parity() {
        for n in 0..=20u32 {
            for mu in odd_partitions(n) {
                assert_eq!(
                    mu.len() as u32 % 2,
                    n % 2,
                    "length parity of {mu} at n = {n}"
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn increasing_parts_rejected() {
        Partition::new(vec![1, 2]);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_parts_rejected() {
        Partition::new(vec![2, 0]);
    }

    #[test]
    fn display_format() {
        assert_eq!(Partition::new(vec![3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    proptest! {
        #[test]
        fn generated_partitions_are_valid_and_distinct(n in 0u32..=18) {
            let ps = partitions(n);
            for p in ps.iter() {
                prop_assert_eq!(p.n(), n);
                prop_assert!(p.parts().iter().all(|&x| x > 0));
                prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            for w in ps.windows(2) {
                prop_assert!(w[0] > w[1], "not strictly decreasing lex order");
            }
        }

        #[test]
        fn centralizer_divides_group_order(n in 1u32..=12) {
            let nf = factorial(n as u64);
            for mu in partitions(n).iter() {
                let z = centralizer_order(mu);
                prop_assert!((&nf % &z) == num_traits::Zero::zero());
            }
        }

        #[test]
        fn from_unsorted_sorts(parts in proptest::collection::vec(1u32..9, 0..6)) {
            let p = Partition::from_unsorted(parts.clone());
            prop_assert_eq!(p.n(), parts.iter().sum::<u32>());
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn ones_and_one_row() {
        assert_eq!(Partition::ones(3).parts(), &[1, 1, 1]);
        assert_eq!(Partition::one_row(0), Partition::empty());
    }
}
