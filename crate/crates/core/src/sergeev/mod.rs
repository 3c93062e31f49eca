//! The Sergeev superalgebra `Y_n = Cl_n x| S_n`: explicit multiplication,
//! its supercentre, orthogonal idempotents, irreducible dimensions, and
//! the spectral data that drive the spin TQFT evaluation.
//!
//! The sign convention is `eta_i^2 = +1`, `eta_i eta_j = -eta_j eta_i`,
//! and `sigma eta_i = eta_{sigma(i)} sigma`.

mod eigen;
mod element;
mod supercentre;

pub use eigen::class_eigenvalues;
pub use element::{Perm, SergeevElement};
pub use supercentre::supercentre_basis;

use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::partitions::{strict_partitions, Partition};
use crate::rational::{factorial, pow_i, rat, two_pow, Rational};

static DEGREE_BOUND: AtomicU32 = AtomicU32::new(5);

/// Degree bound for the full-algebra computations (supercentre kernel and
/// eigenvalue extraction); `dim Y_n = 2^n n!` grows fast and the
/// parity/dimension labelling of idempotents is only injective for small
/// `n`, so the default is 5.
pub fn algebra_degree_bound() -> u32 {
    DEGREE_BOUND.load(Ordering::Relaxed)
}

/// Raises (or lowers) the full-algebra degree bound.
pub fn set_algebra_degree_bound(bound: u32) {
    DEGREE_BOUND.store(bound, Ordering::Relaxed);
}

/// Dimension of the irreducible supermodule `V^nu` of `Y_n`, for a strict
/// partition `nu`:
/// `2^{n - floor(l/2)} n!/(nu_1! ... nu_l!) prod_{p<q} |nu_p - nu_q|/(nu_p + nu_q)`.
///
/// The product is taken with absolute values so that it is positive in
/// the weakly decreasing part order used here.
pub fn dim_supermodule(nu: &Partition) -> BigUint {
    assert!(nu.is_strict(), "dim_supermodule requires a strict partition");
    let n = nu.n();
    let l = nu.len();
    let mut acc = two_pow(n as i64 - (l / 2) as i64);
    acc *= rat(BigInt::from(factorial(n as u64)));
    for &part in nu.parts() {
        acc /= rat(BigInt::from(factorial(part as u64)));
    }
    for p in 0..l {
        for q in p + 1..l {
            let (a, b) = (nu.parts()[p] as i64, nu.parts()[q] as i64);
            acc *= rat((a - b).abs());
            acc /= rat(a + b);
        }
    }
    assert!(
        acc.is_integer() && acc.is_positive(),
        "supermodule dimension formula must yield a positive integer, got {acc} for {nu}"
    );
    acc.to_integer().to_biguint().unwrap()
}

/// The spectral datum of one strict partition: its parity (type M for
/// even length, type Q for odd), the supermodule dimension, and the trace
/// `t(nu)` the theory assigns through the disc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDatum {
    pub nu: Partition,
    /// `l(nu) mod 2`: 0 = type M, 1 = type Q.
    pub parity: u8,
    pub dim: BigUint,
    pub t: Rational,
}

/// Trace value `t(nu)`: `2^{-n} (d/n!)^2` for even length and
/// `2^{-n-1} (d/n!)^2` for odd length. The case split is forced by the
/// unramified exponents `(d / 2^{n/2} n!)^chi` and `(d / 2^{(n+1)/2} n!)^chi`.
pub fn trace_value(n: u32, nu: &Partition, dim: &BigUint) -> Rational {
    let ratio = rat(BigInt::from(dim.clone())) / rat(BigInt::from(factorial(n as u64)));
    let exp = if nu.len() % 2 == 0 {
        -(n as i64)
    } else {
        -(n as i64) - 1
    };
    two_pow(exp) * pow_i(&ratio, 2)
}

/// One spectral datum per strict partition of `n`, in canonical order.
pub fn spectral_data(n: u32) -> Vec<SpectralDatum> {
    assert!(n >= 1, "degree must be at least 1");
    strict_partitions(n)
        .into_iter()
        .map(|nu| {
            let dim = dim_supermodule(&nu);
            let t = trace_value(n, &nu, &dim);
            assert!(t.is_positive(), "trace values are positive");
            SpectralDatum {
                parity: (nu.len() % 2) as u8,
                dim,
                t,
                nu,
            }
        })
        .collect()
}

/// `sum_M d^2 + sum_Q d^2 / 2` over the strict partitions of `n`; equals
/// `2^n n!` by super-Wedderburn.
pub fn wedderburn_sum(n: u32) -> Rational {
    strict_partitions(n)
        .iter()
        .map(|nu| {
            let d = rat(BigInt::from(dim_supermodule(nu)));
            let sq = pow_i(&d, 2);
            if nu.len() % 2 == 0 {
                sq
            } else {
                sq / rat(2)
            }
        })
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn supermodule_dimensions() {
        assert_eq!(dim_supermodule(&p(&[1])), BigUint::from(2u32));
        assert_eq!(dim_supermodule(&p(&[2])), BigUint::from(4u32));
        assert_eq!(dim_supermodule(&p(&[3])), BigUint::from(8u32));
        assert_eq!(dim_supermodule(&p(&[2, 1])), BigUint::from(4u32));
        assert_eq!(dim_supermodule(&p(&[3, 2, 1])), BigUint::from(64u32));
    }

    #[test]
    fn wedderburn_dimension_identity() {
        for n in 1..=8u32 {
            let expected = two_pow(n as i64) * rat(BigInt::from(factorial(n as u64)));
            assert_eq!(wedderburn_sum(n), expected, "Wedderburn sum at n = {n}");
        }
    }

    #[test]
    fn spectral_data_small_degrees() {
        let s1 = spectral_data(1);
        assert_eq!(s1.len(), 1);
        assert_eq!(s1[0].parity, 1);
        assert_eq!(s1[0].dim, BigUint::from(2u32));
        assert_eq!(s1[0].t, rat(1));

        let s2 = spectral_data(2);
        assert_eq!(s2[0].t, frac(1, 2));

        let s3 = spectral_data(3);
        let t: Vec<(Partition, Rational)> =
            s3.iter().map(|d| (d.nu.clone(), d.t.clone())).collect();
        assert_eq!(t[0], (p(&[3]), frac(1, 9)));
        assert_eq!(t[1], (p(&[2, 1]), frac(1, 18)));
        let total: Rational = s3.iter().map(|d| d.t.clone()).sum();
        assert_eq!(total, frac(1, 6));
    }

    #[test]
    fn trace_sum_is_reciprocal_factorial() {
        for n in 1..=8u32 {
            let total: Rational = spectral_data(n).iter().map(|d| d.t.clone()).sum();
            assert_eq!(
                total,
                rat(1) / rat(BigInt::from(factorial(n as u64))),
                "sum of trace values at n = {n}"
            );
        }
    }

    #[test]
    fn dimension_reconstructs_from_trace() {
        use crate::rational::sqrt_exact;
        for n in 1..=8u32 {
            let nf2 = pow_i(&rat(BigInt::from(factorial(n as u64))), 2);
            for d in spectral_data(n) {
                let sq = if d.parity == 0 {
                    &d.t * two_pow(n as i64) * &nf2
                } else {
                    &d.t * two_pow(n as i64 + 1) * &nf2
                };
                let recovered = sqrt_exact(&sq).expect("perfect square");
                assert_eq!(recovered, rat(BigInt::from(d.dim.clone())));
                // The opposite parity reading is never a perfect square.
                let other = &sq * if d.parity == 0 { rat(2) } else { frac(1, 2) };
                assert!(sqrt_exact(&other).is_none(), "parity ambiguity at {}", d.nu);
            }
        }
    }
}
