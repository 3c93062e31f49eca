//! Simultaneous diagonalization of the supercentre: orthogonal
//! idempotents, their labels, and the central character table they carry.
//!
//! The commutative algebra spanned by the class-sum basis `b_mu` is split
//! by iteratively factoring characteristic polynomials of the
//! multiplication operators over Q. Every eigenvalue is rational by the
//! theory; an irrational root aborts with a diagnostic rather than
//! returning approximate data.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::partitions::{odd_partitions, strict_partitions, Partition};
use crate::qfunctions::SergeevCentralCharacterTable;
use crate::rational::{factorial, pow_i, rat, sqrt_exact, two_pow, Rational};
use crate::sergeev::element::{Perm, SergeevElement};
use crate::sergeev::{dim_supermodule, supercentre_basis};

fn cache() -> &'static Mutex<HashMap<u32, Arc<SergeevCentralCharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<SergeevCentralCharacterTable>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Central characters `f^nu_mu` extracted from the algebra itself: the
/// eigenvalue of the class-sum basis element `b_mu` on the orthogonal
/// idempotent labelled `nu`. This is the spectral path, independent of
/// the Q-function expansion it is cross-checked against.
pub fn class_eigenvalues(n: u32) -> Arc<SergeevCentralCharacterTable> {
    let mut guard = cache().lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(compute(n));
    guard.insert(n, Arc::clone(&t));
    t
}

/// The idempotents `e_nu` of `Z(Y_n)` as algebra elements, keyed by their
/// strict-partition labels, in canonical SP(n) order.
pub(crate) fn idempotents(n: u32) -> Vec<(Partition, SergeevElement)> {
    let basis = supercentre_basis(n);
    let decomposition = split(n);
    decomposition
        .into_iter()
        .map(|piece| {
            let mut e = SergeevElement::zero(n);
            for (c, b) in piece.idempotent_coords.iter().zip(basis.iter()) {
                if !c.is_zero() {
                    e.add_assign(&b.scale(c));
                }
            }
            (piece.label, e)
        })
        .collect()
}

struct SpectralPiece {
    label: Partition,
    /// Coordinates of `e_nu` over the `b_mu` basis.
    idempotent_coords: Vec<Rational>,
    /// Eigenvalue of each `b_mu` on `e_nu`, in OP(n) order.
    eigenvalues: Vec<Rational>,
}

fn compute(n: u32) -> SergeevCentralCharacterTable {
    let pieces = split(n);
    let op = odd_partitions(n);
    let sp = strict_partitions(n);
    assert_eq!(pieces.len(), sp.len(), "one idempotent per strict partition");

    let mut values = HashMap::new();
    let mut seen: Vec<Partition> = Vec::new();
    for piece in &pieces {
        assert!(
            !seen.contains(&piece.label),
            "idempotent label collision at {}",
            piece.label
        );
        seen.push(piece.label.clone());
        for (mu, f) in op.iter().zip(&piece.eigenvalues) {
            values.insert((piece.label.clone(), mu.clone()), f.clone());
        }
    }
    SergeevCentralCharacterTable::from_values(n, sp, op, values)
}

fn split(n: u32) -> Vec<SpectralPiece> {
    let basis = supercentre_basis(n);
    let op = odd_partitions(n);
    let m = op.len();
    let reps: Vec<Perm> = op.iter().map(Perm::class_representative).collect();

    // Structure constants read off at the Clifford-free class-representative
    // coordinates: only those coefficients of b_a b_b are needed, so the
    // products are never expanded in full.
    let mut mult_ops: Vec<Matrix> = Vec::with_capacity(m);
    for a in 0..m {
        let mut mat = vec![vec![Rational::zero(); m]; m];
        for b in 0..m {
            let coords = product_coords(n, &basis[a], &basis[b], &reps);
            for (r, c) in coords.into_iter().enumerate() {
                mat[r][b] = c;
            }
        }
        mult_ops.push(mat);
    }

    // Iteratively refine the decomposition of Q^m into common eigenspaces.
    let mut subspaces: Vec<Matrix> = vec![linalg::identity(m)];
    for op_matrix in &mult_ops {
        let mut refined = Vec::new();
        for w in subspaces {
            if columns(&w) == 1 {
                refined.push(w);
                continue;
            }
            for piece in split_invariant_subspace(op_matrix, &w) {
                refined.push(piece);
            }
        }
        subspaces = refined;
    }
    assert!(
        subspaces.iter().all(|w| columns(w) == 1),
        "class operators failed to split the supercentre; non-simple eigenspace"
    );

    let nf = factorial(n as u64);
    let identity_idx = op
        .iter()
        .position(|mu| *mu == Partition::ones(n))
        .expect("identity class is odd");

    subspaces
        .into_iter()
        .map(|w| {
            let x: Vec<Rational> = w.iter().map(|row| row[0].clone()).collect();
            // Normalize x to the idempotent: x^2 = alpha x.
            let sq = coords_of_square(&x, n, &basis, &reps);
            let alpha = proportionality(&sq, &x)
                .expect("supercentre eigenvector squared is not proportional; not semisimple?");
            assert!(!alpha.is_zero(), "nilpotent eigenvector in a semisimple algebra");
            let e: Vec<Rational> = x.iter().map(|c| c / &alpha).collect();

            // Eigenvalues of every b_mu on this idempotent.
            let eigenvalues: Vec<Rational> = mult_ops
                .iter()
                .map(|mat| {
                    let y = linalg::mat_vec(mat, &e);
                    proportionality(&y, &e).expect("not an eigenvector; split bug")
                })
                .collect();

            // Label by (parity, dimension) reconstructed from the trace of
            // the disc: cap(e_nu) = t(nu) = coefficient of b_(1^n) / n!.
            let t = &e[identity_idx] / rat(BigInt::from(nf.clone()));
            let label = label_from_trace(n, &t);
            SpectralPiece {
                label,
                idempotent_coords: e,
                eigenvalues,
            }
        })
        .collect()
}

/// Coordinates (over the class-rep basis) of the product `a * b`, reading
/// only the Clifford-free coefficients at each representative.
fn product_coords(
    n: u32,
    a: &SergeevElement,
    b: &SergeevElement,
    reps: &[Perm],
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); reps.len()];
    for ((mask, sigma), ca) in a.terms() {
        let sigma_inv = sigma.inverse();
        // (eta_A sigma)(eta_B tau) is Clifford-free iff B = sigma^{-1}(A).
        let (b_mask, _) = permute_mask_via(&sigma_inv, *mask);
        for (r, rep) in reps.iter().enumerate() {
            let tau = sigma_inv.compose(rep);
            let cb = b.coeff(b_mask, &tau);
            if cb.is_zero() {
                continue;
            }
            let prod = SergeevElement::basis(n, *mask, sigma.clone(), ca.clone())
                .multiply(&SergeevElement::basis(n, b_mask, tau, cb));
            out[r] += prod.coeff(0, rep);
        }
    }
    out
}

fn permute_mask_via(perm: &Perm, mask: u32) -> (u32, i8) {
    let mut out = 0u32;
    let mut rem = mask;
    while rem != 0 {
        let j = rem.trailing_zeros();
        rem &= rem - 1;
        out |= 1u32 << perm.apply(j as usize);
    }
    (out, 1)
}

fn coords_of_square(
    x: &[Rational],
    n: u32,
    basis: &[SergeevElement],
    reps: &[Perm],
) -> Vec<Rational> {
    let m = x.len();
    let mut out = vec![Rational::zero(); m];
    for a in 0..m {
        if x[a].is_zero() {
            continue;
        }
        for b in 0..m {
            if x[b].is_zero() {
                continue;
            }
            let coords = product_coords(n, &basis[a], &basis[b], reps);
            let scale = &x[a] * &x[b];
            for (r, c) in coords.into_iter().enumerate() {
                out[r] += c * &scale;
            }
        }
    }
    out
}

/// The scalar `alpha` with `y = alpha x`, if it exists.
fn proportionality(y: &[Rational], x: &[Rational]) -> Option<Rational> {
    let pivot = x.iter().position(|c| !c.is_zero())?;
    let alpha = &y[pivot] / &x[pivot];
    for (yi, xi) in y.iter().zip(x) {
        if *yi != xi * &alpha {
            return None;
        }
    }
    Some(alpha)
}

fn columns(w: &Matrix) -> usize {
    if w.is_empty() {
        0
    } else {
        w[0].len()
    }
}

/// Splits an invariant subspace (columns of `w`) into the eigenspaces of
/// `op` restricted to it. Panics when the restriction has an irrational
/// eigenvalue, since the theory guarantees rationality.
fn split_invariant_subspace(op: &Matrix, w: &Matrix) -> Vec<Matrix> {
    let k = columns(w);
    let restricted = restrict(op, w);
    let poly = char_poly(&restricted);
    let roots = rational_roots(&poly);
    let total: usize = roots.iter().map(|(_, mult)| mult).sum();
    assert_eq!(
        total, k,
        "irrational eigenvalue of a class operator; rationality guarantee violated"
    );

    roots
        .into_iter()
        .map(|(lambda, _)| {
            let mut shifted = restricted.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] -= &lambda;
            }
            let null = linalg::kernel(shifted);
            assert!(!null.is_empty(), "eigenvalue without eigenvector");
            // Map back: columns w * y.
            let cols: Vec<Vec<Rational>> = null
                .iter()
                .map(|y| {
                    w.iter()
                        .map(|row| {
                            row.iter()
                                .zip(y)
                                .map(|(a, b)| a * b)
                                .fold(Rational::zero(), |acc, t| acc + t)
                        })
                        .collect()
                })
                .collect();
            transpose(cols)
        })
        .collect()
}

fn transpose(cols: Vec<Vec<Rational>>) -> Matrix {
    let rows = cols[0].len();
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Restriction of `op` to the column span of `w`: the matrix `A` with
/// `op w = w A`, checked exactly.
fn restrict(op: &Matrix, w: &Matrix) -> Matrix {
    let k = columns(w);
    let image = linalg::mat_mul(op, w);
    // Solve w A = image column by column via a full-rank row subset.
    let mut a = vec![vec![Rational::zero(); k]; k];
    for col in 0..k {
        let rhs: Vec<Rational> = image.iter().map(|row| row[col].clone()).collect();
        let x = solve_tall(w, &rhs).expect("subspace is not invariant; split bug");
        for (r, v) in x.into_iter().enumerate() {
            a[r][col] = v;
        }
    }
    // Exactness check of the invariance claim.
    assert_eq!(linalg::mat_mul(w, &a), image, "subspace not exactly invariant");
    a
}

/// Solves the overdetermined full-column-rank system `w x = rhs` exactly.
fn solve_tall(w: &Matrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns(w);
    let mut aug: Matrix = w
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = linalg::rref(&mut aug);
    if pivots.last() == Some(&k) || pivots.len() < k {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][k].clone();
    }
    Some(x)
}

/// Characteristic polynomial `det(t I - A)` by the Faddeev-LeVerrier
/// recurrence; coefficients from constant to leading term.
fn char_poly(a: &Matrix) -> Vec<Rational> {
    let k = a.len();
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[k] = Rational::one();
    let mut m = linalg::identity(k);
    for step in 1..=k {
        let am = linalg::mat_mul(a, &m);
        let trace: Rational = (0..k)
            .map(|i| am[i][i].clone())
            .fold(Rational::zero(), |acc, t| acc + t);
        let c = -trace / rat(step as i64);
        coeffs[k - step] = c.clone();
        m = am;
        for i in 0..k {
            m[i][i] += &c;
        }
    }
    coeffs
}

/// All rational roots with multiplicity, by divisor search on the
/// denominator-cleared polynomial plus deflation.
fn rational_roots(poly: &[Rational]) -> Vec<(Rational, usize)> {
    let mut work: Vec<Rational> = poly.to_vec();
    let mut found: Vec<(Rational, usize)> = Vec::new();
    loop {
        while work.len() > 1 && work.last().unwrap().is_zero() {
            work.pop();
        }
        if work.len() <= 1 {
            break;
        }
        let Some(root) = find_one_root(&work) else {
            break;
        };
        match found.iter_mut().find(|(r, _)| *r == root) {
            Some((_, mult)) => *mult += 1,
            None => found.push((root.clone(), 1)),
        }
        work = deflate(&work, &root);
    }
    found
}

fn find_one_root(poly: &[Rational]) -> Option<Rational> {
    // Zero constant term: zero is a root.
    if poly[0].is_zero() {
        return Some(Rational::zero());
    }
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * rat(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].magnitude().clone();
    let ak = ints.last().unwrap().magnitude().clone();
    for p in divisors(&a0) {
        for q in divisors(&ak) {
            for sign in [1i64, -1] {
                let cand = rat(sign) * rat(BigInt::from(p.clone())) / rat(BigInt::from(q.clone()));
                if eval_poly(poly, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn eval_poly(poly: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn deflate(poly: &[Rational], root: &Rational) -> Vec<Rational> {
    // Synthetic division by (t - root).
    let k = poly.len() - 1;
    let mut out = vec![Rational::zero(); k];
    let mut carry = Rational::zero();
    for i in (0..k).rev() {
        carry = &poly[i + 1] + &(carry * root);
        out[i] = carry.clone();
    }
    debug_assert!(eval_poly(poly, root).is_zero());
    out
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero());
    // Trial division; the integers involved here are tiny.
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rem = n.clone();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rem {
        let mut e = 0;
        while (&rem % &p).is_zero() {
            rem /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if rem > BigUint::one() {
        factors.push((rem, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut power = BigUint::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &p;
            }
        }
        divs = next;
    }
    divs
}

/// Recovers `(parity, dim)` from the trace value `t = cap(e_nu)` and finds
/// the unique strict partition carrying that pair. Exactly one of the two
/// parity readings gives a perfect square, since they differ by a factor
/// of 2.
fn label_from_trace(n: u32, t: &Rational) -> Partition {
    let nf2 = pow_i(&rat(BigInt::from(factorial(n as u64))), 2);
    let even_sq = t * two_pow(n as i64) * &nf2;
    let odd_sq = t * two_pow(n as i64 + 1) * &nf2;
    let readings = [(0u8, sqrt_exact(&even_sq)), (1u8, sqrt_exact(&odd_sq))];
    let mut labels = Vec::new();
    for (parity, d) in readings {
        let Some(d) = d else { continue };
        if !d.is_integer() || !d.is_positive() {
            continue;
        }
        let d = d.to_integer().to_biguint().unwrap();
        for nu in strict_partitions(n) {
            if (nu.len() % 2) as u8 == parity && dim_supermodule(&nu) == d {
                labels.push(nu);
            }
        }
    }
    match labels.len() {
        1 => labels.pop().unwrap(),
        0 => panic!("no strict partition matches trace value {t} at n = {n}"),
        _ => panic!(
            "(parity, dim) labelling collides at n = {n}: {:?}; raise requires a finer invariant",
            labels
        ),
    }
}
