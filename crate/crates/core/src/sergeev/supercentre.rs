//! The supercentre of `Y_n` and its class-sum-normalized basis.
//!
//! `Z(Y_n) = {z : z a = (-1)^{|z||a|} a z for homogeneous a}` is computed
//! as an exact kernel against the algebra generators only: invariance
//! under conjugation by adjacent transpositions (which generate `S_n`)
//! is imposed first by summing conjugation orbits of basis monomials
//! with their relative signs, and the super-commutation constraint with
//! `eta_1` is then solved on that invariant subspace.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::partitions::{odd_partitions, partitions, Partition};
use crate::rational::{rat, Rational};
use crate::sergeev::element::{all_perms, Perm, SergeevElement};
use crate::sergeev::algebra_degree_bound;

type BasisKey = (u32, Perm);

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<SergeevElement>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<SergeevElement>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Basis of the supercentre of `Y_n`, indexed by the odd partitions of
/// `n` in canonical order: `b_mu` is the unique supercentre element whose
/// Clifford-free component is the plain class sum of type `mu`.
///
/// Panics if the kernel dimension differs from `|OP(n)|`, if some kernel
/// vector is not even, or if the class-sum normalization fails -- all of
/// which would signal a multiplication bug.
pub fn supercentre_basis(n: u32) -> Arc<Vec<SergeevElement>> {
    assert!(n >= 1, "degree must be at least 1");
    assert!(
        n <= algebra_degree_bound(),
        "degree {n} exceeds the configured full-algebra bound {}; \
         see set_algebra_degree_bound",
        algebra_degree_bound()
    );
    let mut guard = cache().lock().unwrap();
    if let Some(b) = guard.get(&n) {
        return Arc::clone(b);
    }
    let b = Arc::new(compute(n));
    guard.insert(n, Arc::clone(&b));
    b
}

fn compute(n: u32) -> Vec<SergeevElement> {
    let invariants = conjugation_invariants(n);
    let kernel_vectors = eta_kernel(n, &invariants);

    let op = odd_partitions(n);
    assert_eq!(
        kernel_vectors.len(),
        op.len(),
        "supercentre dimension {} != |OP({n})| = {}; multiplication bug",
        kernel_vectors.len(),
        op.len()
    );
    for z in &kernel_vectors {
        assert_eq!(
            z.homogeneous_parity(),
            Some(0),
            "supercentre vector is not even"
        );
    }
    normalize_to_class_sums(n, kernel_vectors, &op)
}

/// Sums conjugation orbits of basis monomials under the adjacent
/// transpositions, tracking relative signs; orbits with inconsistent
/// signs contribute nothing.
fn conjugation_invariants(n: u32) -> Vec<SergeevElement> {
    let perms = all_perms(n);
    let gens: Vec<Perm> = (0..n.saturating_sub(1))
        .map(|k| Perm::transposition(n, k as usize, k as usize + 1))
        .collect();

    let mut index: HashMap<BasisKey, usize> = HashMap::new();
    let mut keys: Vec<BasisKey> = Vec::new();
    for mask in 0..(1u32 << n) {
        for p in &perms {
            index.insert((mask, p.clone()), keys.len());
            keys.push((mask, p.clone()));
        }
    }

    let mut visited = vec![false; keys.len()];
    let mut out = Vec::new();
    for start in 0..keys.len() {
        if visited[start] {
            continue;
        }
        // BFS over the orbit with signs relative to the start monomial.
        let mut sign: HashMap<usize, Rational> = HashMap::new();
        sign.insert(start, rat(1));
        let mut queue = vec![start];
        visited[start] = true;
        let mut consistent = true;
        while let Some(i) = queue.pop() {
            let (mask, perm) = &keys[i];
            let si = sign[&i].clone();
            for g in &gens {
                let conj = SergeevElement::permutation(g.clone())
                    .multiply(&SergeevElement::basis(n, *mask, perm.clone(), rat(1)))
                    .multiply(&SergeevElement::permutation(g.clone()));
                let (key, c) = singleton(&conj);
                let j = index[&key];
                let sj = si.clone() * c;
                match sign.get(&j) {
                    None => {
                        sign.insert(j, sj);
                        visited[j] = true;
                        queue.push(j);
                    }
                    Some(existing) => {
                        if *existing != sj {
                            consistent = false;
                        }
                    }
                }
            }
        }
        if !consistent {
            continue;
        }
        let mut v = SergeevElement::zero(n);
        for (i, s) in sign {
            let (mask, perm) = keys[i].clone();
            v.add_term(mask, perm, s);
        }
        out.push(v);
    }
    out
}

fn singleton(e: &SergeevElement) -> (BasisKey, Rational) {
    let mut it = e.terms();
    let (key, c) = it.next().expect("singleton expected");
    assert!(it.next().is_none(), "singleton expected");
    (key.clone(), c.clone())
}

/// Kernel of `w -> w eta_1 - (-1)^{|w|} eta_1 w` on the span of the
/// invariant vectors.
fn eta_kernel(n: u32, invariants: &[SergeevElement]) -> Vec<SergeevElement> {
    let eta = SergeevElement::eta(n, 0);
    let constraints: Vec<SergeevElement> = invariants
        .iter()
        .map(|w| {
            let parity = w
                .homogeneous_parity()
                .expect("orbit vectors are homogeneous");
            let sign = if parity == 0 { rat(-1) } else { rat(1) };
            let mut c = w.multiply(&eta);
            c.add_assign(&eta.multiply(w).scale(&sign));
            c
        })
        .collect();

    // Assemble the sparse constraint matrix with one row per basis
    // monomial that appears.
    let mut row_of: HashMap<BasisKey, usize> = HashMap::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (col, c) in constraints.iter().enumerate() {
        for (key, coeff) in c.terms() {
            let r = *row_of.entry(key.clone()).or_insert_with(|| {
                rows.push(vec![Rational::zero(); constraints.len()]);
                rows.len() - 1
            });
            rows[r][col] = coeff.clone();
        }
    }

    crate::linalg::kernel(rows)
        .into_iter()
        .map(|x| {
            let mut v = SergeevElement::zero(n);
            for (w, coeff) in invariants.iter().zip(&x) {
                if !coeff.is_zero() {
                    v.add_assign(&w.scale(coeff));
                }
            }
            v
        })
        .collect()
}

/// Rewrites a raw kernel basis so that the Clifford-free component of the
/// element indexed by `mu` is exactly the plain class sum of type `mu`.
fn normalize_to_class_sums(
    n: u32,
    kernel_vectors: Vec<SergeevElement>,
    op: &[Partition],
) -> Vec<SergeevElement> {
    let classes: Vec<Partition> = partitions(n).as_ref().clone();
    let class_index: HashMap<Partition, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();

    // Clifford-free part of each kernel vector, as a vector over the
    // conjugacy classes; conjugation invariance makes the coefficient
    // constant within a class.
    let mut profile: Vec<Vec<Rational>> = Vec::new();
    for z in &kernel_vectors {
        let mut row = vec![Rational::zero(); classes.len()];
        let mut seen: Vec<bool> = vec![false; classes.len()];
        for (perm, c) in z.clifford_free_component() {
            let idx = class_index[&perm.cycle_type()];
            if seen[idx] {
                assert_eq!(
                    row[idx], c,
                    "Clifford-free part is not constant on the class {}",
                    classes[idx]
                );
            } else {
                row[idx] = c;
                seen[idx] = true;
            }
        }
        profile.push(row);
    }

    // Solve sum_k x_k profile[k] = indicator(mu) for each odd mu; the
    // system is (classes x kernel) and must have a unique solution.
    let system: Vec<Vec<Rational>> = (0..classes.len())
        .map(|c| profile.iter().map(|row| row[c].clone()).collect())
        .collect();

    op.iter()
        .map(|mu| {
            let rhs: Vec<Rational> = classes
                .iter()
                .map(|c| if c == mu { Rational::one() } else { Rational::zero() })
                .collect();
            let x = crate::linalg::solve_unique(&system, &rhs).unwrap_or_else(|| {
                panic!("no unique supercentre element with class-sum part {mu}")
            });
            let mut b = SergeevElement::zero(n);
            for (z, coeff) in kernel_vectors.iter().zip(&x) {
                if !coeff.is_zero() {
                    b.add_assign(&z.scale(coeff));
                }
            }
            // The defining normalization, re-checked directly.
            let free = b.clifford_free_component();
            let expected = SergeevElement::class_sum(mu);
            for (perm, c) in &free {
                assert_eq!(*c, expected.coeff(0, perm), "normalization failed for {mu}");
            }
            assert_eq!(free.len(), expected.num_terms());
            b
        })
        .collect()
}
