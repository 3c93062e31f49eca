//! Elements of `Y_n` as coefficient maps over canonical basis monomials.
//!
//! A basis monomial is a sorted Clifford factor `eta_{i_1} ... eta_{i_k}`
//! (encoded as a bit mask, written to the left) times a permutation.
//! Products reorder Clifford factors back into increasing index order,
//! picking up a sign per transposition.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use crate::partitions::Partition;
use crate::rational::{rat, Rational};

/// A permutation of `{0, .., n-1}` in one-line form: `perm[i]` is the
/// image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: u32) -> Self {
        Perm((0..n as u8).collect())
    }

    /// The transposition `(i j)`.
    pub fn transposition(n: u32, i: usize, j: usize) -> Self {
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(i, j);
        Perm(v)
    }

    /// Builds from one-line images; must be a bijection on `{0..n-1}`.
    pub fn from_images(images: Vec<u8>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!((x as usize) < n && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Perm(images)
    }

    /// Canonical representative of a cycle type: consecutive cycles, e.g.
    /// `(3,1,1)` gives `(0 1 2)(3)(4)`.
    pub fn class_representative(mu: &Partition) -> Self {
        let n = mu.n();
        let mut v: Vec<u8> = (0..n as u8).collect();
        let mut base = 0usize;
        for &part in mu.parts() {
            let part = part as usize;
            for off in 0..part {
                v[base + off] = (base + (off + 1) % part) as u8;
            }
            base += part;
        }
        Perm(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Composition applying `other` first: `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.0.len(), other.0.len());
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            v[img as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Sign from multiplying canonical Clifford monomials `eta_A * eta_C`
/// with `eta_i^2 = 1`: `(-1)^{sum_{j in C} |A strictly above j|}`.
/// The resulting monomial is `eta_{A xor C}`.
fn clifford_sign(a: u32, c: u32) -> i8 {
    let mut swaps = 0u32;
    let mut rem = c;
    while rem != 0 {
        let j = rem.trailing_zeros();
        rem &= rem - 1;
        swaps += (a >> (j + 1)).count_ones();
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Applies a permutation to a Clifford monomial: `sigma eta_B sigma^{-1}`
/// equals `sign * eta_{sigma(B)}` after sorting the permuted indices.
fn permute_mask(sigma: &Perm, b: u32) -> (u32, i8) {
    let mut images: Vec<u8> = Vec::new();
    let mut rem = b;
    while rem != 0 {
        let j = rem.trailing_zeros();
        rem &= rem - 1;
        images.push(sigma.apply(j as usize) as u8);
    }
    let mut inversions = 0u32;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    let mask = images.iter().fold(0u32, |m, &x| m | (1u32 << x));
    (mask, if inversions % 2 == 0 { 1 } else { -1 })
}

/// An element of `Y_n` as a map from basis monomials `(mask, perm)` to
/// exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SergeevElement {
    n: u32,
    coeffs: BTreeMap<(u32, Perm), Rational>,
}

impl SergeevElement {
    pub fn zero(n: u32) -> Self {
        SergeevElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The multiplicative unit.
    pub fn unit(n: u32) -> Self {
        SergeevElement::basis(n, 0, Perm::identity(n), rat(1))
    }

    /// The Clifford generator `eta_i` (0-indexed).
    pub fn eta(n: u32, i: usize) -> Self {
        assert!(i < n as usize);
        SergeevElement::basis(n, 1 << i, Perm::identity(n), rat(1))
    }

    /// A group element of `S_n` embedded in `Y_n`.
    pub fn permutation(perm: Perm) -> Self {
        let n = perm.degree();
        SergeevElement::basis(n, 0, perm, rat(1))
    }

    /// A single scaled basis monomial `c * eta_mask * perm`.
    pub fn basis(n: u32, mask: u32, perm: Perm, c: Rational) -> Self {
        assert!(n <= 16, "Sergeev elements are limited to n <= 16");
        assert_eq!(perm.degree(), n);
        assert_eq!(mask >> n, 0, "Clifford mask out of range");
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((mask, perm), c);
        }
        SergeevElement { n, coeffs }
    }

    /// The plain class sum `sum_{sigma of type mu} sigma`, Clifford-free.
    pub fn class_sum(mu: &Partition) -> Self {
        let n = mu.n();
        let mut out = SergeevElement::zero(n);
        let mut perm: Vec<u8> = (0..n as u8).collect();
        loop {
            let p = Perm::from_images(perm.clone());
            if &p.cycle_type() == mu {
                out.add_term(0, p, rat(1));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, mask: u32, perm: &Perm) -> Rational {
        self.coeffs
            .get(&(mask, perm.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Perm), &Rational)> {
        self.coeffs.iter()
    }

    /// Parity when the element is homogeneous: `Some(popcount mod 2)` if
    /// every monomial has the same Clifford parity, `None` otherwise.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut parity = None;
        for ((mask, _), _) in self.coeffs.iter() {
            let p = (mask.count_ones() % 2) as u8;
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        parity.or(Some(0))
    }

    /// The Clifford-free component as a map from permutations to
    /// coefficients.
    pub fn clifford_free_component(&self) -> BTreeMap<Perm, Rational> {
        self.coeffs
            .iter()
            .filter(|((mask, _), _)| *mask == 0)
            .map(|((_, perm), c)| (perm.clone(), c.clone()))
            .collect()
    }

    pub fn add_term(&mut self, mask: u32, perm: Perm, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(perm.degree(), self.n);
        let entry = self
            .coeffs
            .entry((mask, perm))
            .or_insert_with(Rational::zero);
        *entry += c;
    }

    pub fn add_assign(&mut self, other: &SergeevElement) {
        assert_eq!(self.n, other.n);
        for ((mask, perm), c) in other.terms() {
            self.add_term(*mask, perm.clone(), c.clone());
        }
        self.prune();
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SergeevElement::zero(self.n);
        }
        SergeevElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    /// Bilinear product in `Y_n`. On basis monomials:
    /// `(eta_A sigma)(eta_B tau) = sign * eta_{A xor sigma(B)} (sigma tau)`.
    pub fn multiply(&self, other: &SergeevElement) -> SergeevElement {
        assert_eq!(self.n, other.n, "degree mismatch in Sergeev product");
        let mut out = SergeevElement::zero(self.n);
        for ((a_mask, sigma), ca) in self.terms() {
            for ((b_mask, tau), cb) in other.terms() {
                let (moved, s1) = permute_mask(sigma, *b_mask);
                let s2 = clifford_sign(*a_mask, moved);
                let sign = rat((s1 * s2) as i64);
                out.add_term(a_mask ^ moved, sigma.compose(tau), ca * cb * sign);
            }
        }
        out.prune();
        out
    }
}

impl Mul for &SergeevElement {
    type Output = SergeevElement;

    fn mul(self, rhs: &SergeevElement) -> SergeevElement {
        self.multiply(rhs)
    }
}

/// In-place lexicographic successor; false when the sequence was the last.
pub(crate) fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub(crate) fn all_perms(n: u32) -> Vec<Perm> {
    let mut v: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm::from_images(v.clone()));
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}
