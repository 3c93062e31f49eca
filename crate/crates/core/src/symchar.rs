//! Ordinary character theory of the symmetric group and the classical
//! Hurwitz numbers it computes.
//!
//! Character values are produced by the Murnaghan-Nakayama recursion on
//! beta-sets (first-column hook lengths): removing a border strip of
//! length `r` replaces a beta entry `L` by `L - r`, with sign given by
//! the number of beta entries jumped over.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::{centralizer_order, partitions, Partition};
use crate::rational::{factorial, pow_i, rat, Rational};

/// Full character table of `S_n`: values `chi^lambda_mu` for all pairs of
/// partitions of `n`, built once per degree and then read-only.
pub struct CharacterTable {
    n: u32,
    classes: Vec<Partition>,
    values: HashMap<(Partition, Partition), i128>,
}

impl CharacterTable {
    /// The irreducible character value `chi^lambda_mu`.
    ///
    /// Both arguments must be partitions of this table's degree.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i128 {
        assert_eq!(lambda.n(), self.n, "row partition has wrong degree");
        assert_eq!(mu.n(), self.n, "column partition has wrong degree");
        self.values[&(lambda.clone(), mu.clone())]
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Partitions of `n` in canonical order, indexing both rows and columns.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The memoized character table of `S_n`.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    let mut guard = table_cache().lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(build_table(n));
    guard.insert(n, Arc::clone(&t));
    t
}

fn build_table(n: u32) -> CharacterTable {
    let classes: Vec<Partition> = partitions(n).as_ref().clone();
    let mut values = HashMap::new();
    let mut memo: HashMap<(Vec<u64>, Vec<u32>), i128> = HashMap::new();
    for lambda in &classes {
        let beta = beta_set(lambda);
        for mu in &classes {
            let v = mn_value(&beta, mu.parts(), &mut memo);
            values.insert((lambda.clone(), mu.clone()), v);
        }
    }
    CharacterTable { n, classes, values }
}

/// Beta-set of a partition: `L_i = lambda_i + l - i` (1-indexed), strictly
/// decreasing.
fn beta_set(lambda: &Partition) -> Vec<u64> {
    let l = lambda.len() as u64;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as u64 + l - 1 - i as u64)
        .collect()
}

/// Murnaghan-Nakayama on beta-sets: strip parts of `mu` from the front.
fn mn_value(
    beta: &[u64],
    mu: &[u32],
    memo: &mut HashMap<(Vec<u64>, Vec<u32>), i128>,
) -> i128 {
    // Normalize the beta-set by dropping a trailing staircase 0,1,..,k
    // prefix-free representation: we instead canonicalize through the
    // partition it denotes.
    let lambda = partition_from_beta(beta);
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (beta_set(&lambda), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let set = &key.0;
    let r = mu[0] as u64;
    let rest = &mu[1..];
    let mut total: i128 = 0;
    for (i, &li) in set.iter().enumerate() {
        if li < r {
            continue;
        }
        let target = li - r;
        if set.contains(&target) {
            continue;
        }
        // Height of the strip = entries strictly between target and li.
        let height = set
            .iter()
            .filter(|&&x| target < x && x < li)
            .count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<u64> = set
            .iter()
            .enumerate()
            .map(|(j, &x)| if j == i { target } else { x })
            .collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign as i128 * mn_value(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Partition denoted by a strictly decreasing beta-set (zeros allowed).
fn partition_from_beta(set: &[u64]) -> Partition {
    let l = set.len() as u64;
    let parts: Vec<u32> = set
        .iter()
        .enumerate()
        .filter_map(|(i, &x)| {
            let part = x - (l - 1 - i as u64);
            (part > 0).then_some(part as u32)
        })
        .collect();
    Partition::new(parts)
}

/// The irreducible character value `chi^lambda_mu` for partitions of a
/// common degree.
pub fn character(lambda: &Partition, mu: &Partition) -> i128 {
    assert_eq!(
        lambda.n(),
        mu.n(),
        "character requires partitions of the same degree"
    );
    character_table(lambda.n()).value(lambda, mu)
}

/// Dimension of the irreducible `S_n`-representation labelled by `lambda`,
/// via `n!/(L_1! ... L_l!) * prod_{i<j} (L_i - L_j)`.
pub fn dim_ordinary(lambda: &Partition) -> BigUint {
    let beta = beta_set(lambda);
    let mut num = factorial(lambda.n() as u64);
    for i in 0..beta.len() {
        for j in i + 1..beta.len() {
            num *= BigUint::from(beta[i] - beta[j]);
        }
    }
    let mut den = BigUint::one();
    for &l in &beta {
        den *= factorial(l);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "dimension formula did not divide exactly");
    q
}

/// Ordinary central character: the scalar `(n!/z_mu) chi^lambda_mu / dim`
/// by which the class sum of type `mu` acts on the irreducible `lambda`.
pub fn ordinary_central_character(lambda: &Partition, mu: &Partition) -> Rational {
    let n = lambda.n();
    assert_eq!(n, mu.n(), "partitions must share a degree");
    let class_size = factorial(n as u64) / centralizer_order(mu);
    let chi = character(lambda, mu);
    let dim = dim_ordinary(lambda);
    rat(BigInt::from(class_size)) * rat(chi) / rat(BigInt::from(dim))
}

/// Ordinary Hurwitz number of the closed genus-`g` surface with the given
/// ramification data: the Frobenius-Burnside sum over irreducibles.
///
/// Every `ram` must be a partition of `n`.
pub fn ordinary_hurwitz(n: u32, genus: u32, rams: &[Partition]) -> Rational {
    for ram in rams {
        assert_eq!(ram.n(), n, "ramification partition {ram} does not partition {n}");
    }
    let chi_surface = 2i64 - 2 * genus as i64;
    let nf = rat(BigInt::from(factorial(n as u64)));
    let mut total = Rational::zero();
    for nu in partitions(n).iter() {
        let mut term = pow_i(&(rat(BigInt::from(dim_ordinary(nu))) / nf.clone()), chi_surface);
        for ram in rams {
            term *= ordinary_central_character(nu, ram);
        }
        total += term;
    }
    total
}
