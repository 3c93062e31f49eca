//! Spectral evaluation of the spin theory: state spaces, the change of
//! basis between geometric and idempotent bases, cobordism words over
//! {CAP, CUP, E+, E-}, and the closed-form spin Hurwitz evaluator.
//!
//! All values are exact rationals: the square roots appearing in the
//! odd-length terms always cancel because the 2-power exponent `C` and
//! the Euler characteristic are even, which the evaluator asserts rather
//! than adjoining radicals.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partitions::{odd_partitions, strict_partitions, Partition};
use crate::qfunctions::{sergeev_central_characters, SergeevCentralCharacterTable};
use crate::rational::{factorial, pow_i, rat, two_pow, Rational};
use crate::sergeev::{class_eigenvalues, spectral_data, SpectralDatum};

/// Atiyah parity of a closed spin surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceParity {
    Even,
    Odd,
}

impl SurfaceParity {
    /// `(-1)^{At}` as a sign.
    pub fn sign(self) -> i64 {
        match self {
            SurfaceParity::Even => 1,
            SurfaceParity::Odd => -1,
        }
    }
}

/// A closed spin surface with marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinSurface {
    genus: u32,
    parity: SurfaceParity,
    punctures: u32,
}

impl SpinSurface {
    /// Validates that an odd spin structure only occurs with a handle to
    /// carry it; the sphere's unique spin structure is even.
    pub fn new(genus: u32, parity: SurfaceParity, punctures: u32) -> Result<Self, Error> {
        if parity == SurfaceParity::Odd && genus == 0 {
            return Err(Error::OddParityOnSphere);
        }
        Ok(SpinSurface {
            genus,
            parity,
            punctures,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn parity(&self) -> SurfaceParity {
        self.parity
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    /// Euler characteristic of the closed underlying surface.
    pub fn chi(&self) -> i64 {
        2 - 2 * self.genus as i64
    }
}

/// The two spin circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleKind {
    /// Neveu-Schwarz: bounds a spin disc.
    Antiperiodic,
    /// Ramond: does not bound.
    Periodic,
}

/// A basis label of a circle state space, with its super degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateBasisLabel {
    pub label: Partition,
    /// `l(nu) mod 2` on the periodic circle; 0 on the antiperiodic one.
    pub degree: u8,
}

/// Canonical basis of the state space: odd partitions (the geometric
/// delta basis) for the antiperiodic circle, strict partitions graded by
/// length parity for the periodic circle.
///
/// Periodic labels are exposed for inspection only; no operator into or
/// out of the periodic sector is evaluated, its basis being defined only
/// up to sign.
pub fn state_space(circle: CircleKind, n: u32) -> Vec<StateBasisLabel> {
    assert!(n >= 1, "degree must be at least 1");
    match circle {
        CircleKind::Antiperiodic => odd_partitions(n)
            .into_iter()
            .map(|label| StateBasisLabel { label, degree: 0 })
            .collect(),
        CircleKind::Periodic => strict_partitions(n)
            .into_iter()
            .map(|label| StateBasisLabel {
                degree: (label.len() % 2) as u8,
                label,
            })
            .collect(),
    }
}

/// A vector in a circle state space over its canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    circle: CircleKind,
    n: u32,
    coeffs: BTreeMap<Partition, Rational>,
}

impl StateVector {
    pub fn zero(circle: CircleKind, n: u32) -> Self {
        StateVector {
            circle,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The geometric basis vector `delta_mu` on the antiperiodic circle.
    pub fn delta(n: u32, mu: &Partition) -> Result<Self, Error> {
        if mu.n() != n {
            return Err(Error::RamificationDegree {
                partition: mu.clone(),
                expected: n,
                got: mu.n(),
            });
        }
        if !mu.is_odd() {
            return Err(Error::NonOddRamification {
                partition: mu.clone(),
            });
        }
        let mut v = StateVector::zero(CircleKind::Antiperiodic, n);
        v.coeffs.insert(mu.clone(), Rational::one());
        Ok(v)
    }

    pub fn circle(&self) -> CircleKind {
        self.circle
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, label: &Partition) -> Rational {
        self.coeffs
            .get(label)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, label: Partition, c: Rational) {
        assert_eq!(label.n(), self.n, "basis label of wrong degree");
        match self.circle {
            CircleKind::Antiperiodic => {
                assert!(label.is_odd(), "antiperiodic labels are odd partitions")
            }
            CircleKind::Periodic => {
                assert!(label.is_strict(), "periodic labels are strict partitions")
            }
        }
        if c.is_zero() {
            self.coeffs.remove(&label);
        } else {
            self.coeffs.insert(label, c);
        }
    }
}

/// Which construction supplies the central character table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FTableSource {
    /// Schur Q-function coefficients (the default; cheap).
    QFunctions,
    /// Spectral decomposition of the Sergeev algebra itself.
    SergeevAlgebra,
}

/// The central character table from the chosen path.
pub fn f_table(n: u32, source: FTableSource) -> Arc<SergeevCentralCharacterTable> {
    match source {
        FTableSource::QFunctions => sergeev_central_characters(n),
        FTableSource::SergeevAlgebra => class_eigenvalues(n),
    }
}

fn spectral_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<SpectralDatum>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<SpectralDatum>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn spectral(n: u32) -> Arc<Vec<SpectralDatum>> {
    let mut guard = spectral_cache().lock().unwrap();
    if let Some(s) = guard.get(&n) {
        return Arc::clone(s);
    }
    let s = Arc::new(spectral_data(n));
    guard.insert(n, Arc::clone(&s));
    s
}

/// The change-of-basis matrix `M[nu, mu] = 2^{(l(mu)-n)/2} f^nu_mu`
/// expressing the geometric basis `delta_mu` over the idempotents `e_nu`.
#[derive(Debug, Clone)]
pub struct ChangeBasis {
    /// Strict partitions of `n` (rows), canonical order.
    pub rows: Vec<Partition>,
    /// Odd partitions of `n` (columns), canonical order.
    pub cols: Vec<Partition>,
    pub matrix: Vec<Vec<Rational>>,
}

/// Builds the change-of-basis matrix from the default f-table. The
/// half-integer 2-power is exact because `l(mu) = n (mod 2)` for odd `mu`.
pub fn change_basis(n: u32) -> ChangeBasis {
    change_basis_with_source(n, FTableSource::QFunctions)
}

pub fn change_basis_with_source(n: u32, source: FTableSource) -> ChangeBasis {
    let t = f_table(n, source);
    let matrix = t
        .rows()
        .iter()
        .map(|nu| {
            t.cols()
                .iter()
                .map(|mu| {
                    let e = mu.len() as i64 - n as i64;
                    assert!(e % 2 == 0, "odd partition length parity violated");
                    two_pow(e / 2) * t.f(nu, mu)
                })
                .collect()
        })
        .collect();
    ChangeBasis {
        rows: t.rows().to_vec(),
        cols: t.cols().to_vec(),
        matrix,
    }
}

/// The disc functional on the antiperiodic state space: sends
/// `delta_(1^n)` to `1/n!` and every other `delta_mu` to zero;
/// equivalently it sends each idempotent `e_nu` to `t(nu)`.
pub fn cap(v: &StateVector) -> Rational {
    assert_eq!(
        v.circle(),
        CircleKind::Antiperiodic,
        "the disc caps antiperiodic boundaries only"
    );
    let n = v.n();
    v.coeff(&Partition::ones(n)) / rat(BigInt::from(factorial(n as u64)))
}

/// Atoms of a cobordism word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// Disc as a cobordism to nothing.
    Cap,
    /// Disc from nothing; the unit `sum_nu e_nu`.
    Cup,
    /// Even twice-punctured torus: `diag(t(nu)^{-1})`.
    EPlus,
    /// Odd twice-punctured torus: `diag((-1)^{l(nu)} t(nu)^{-1})`.
    EMinus,
}

/// A validated cobordism word: either `CAP . (E+|E-)* . CUP` (closed
/// evaluation) or a nonempty `(E+|E-)*` (operator evaluation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobordismExpr {
    atoms: Vec<Atom>,
    closed: bool,
}

impl CobordismExpr {
    /// Parses a word like `"CAP . E- . E+ . CUP"`. Whitespace is
    /// insignificant; atoms are separated by `.`; unknown atoms and
    /// malformed shapes are reported with their byte offset.
    pub fn parse(input: &str) -> Result<Self, Error> {
        let mut atoms: Vec<(Atom, usize)> = Vec::new();
        let mut token_start: Option<usize> = None;
        let mut flush = |start: Option<usize>, end: usize, atoms: &mut Vec<(Atom, usize)>| {
            if let Some(s) = start {
                let text = &input[s..end];
                let atom = match text {
                    "CAP" => Atom::Cap,
                    "CUP" => Atom::Cup,
                    "E+" => Atom::EPlus,
                    "E-" => Atom::EMinus,
                    _ => {
                        return Err(Error::InvalidAtom {
                            offset: s,
                            found: text.to_string(),
                        })
                    }
                };
                atoms.push((atom, s));
            }
            Ok(())
        };
        for (i, ch) in input.char_indices() {
            match ch {
                '.' => {
                    flush(token_start.take(), i, &mut atoms)?;
                    // A separator must sit between atoms; emptiness is
                    // detected after the scan by counting.
                }
                c if c.is_whitespace() => {
                    flush(token_start.take(), i, &mut atoms)?;
                }
                _ => {
                    if token_start.is_none() {
                        token_start = Some(i);
                    }
                }
            }
        }
        flush(token_start.take(), input.len(), &mut atoms)?;

        if atoms.is_empty() {
            return Err(Error::MalformedWord {
                offset: 0,
                reason: "empty word".to_string(),
            });
        }

        let closed = match (atoms.first(), atoms.last()) {
            (Some((Atom::Cap, _)), Some((Atom::Cup, _))) if atoms.len() >= 2 => true,
            _ => false,
        };
        if closed {
            for (atom, offset) in &atoms[1..atoms.len() - 1] {
                if !matches!(atom, Atom::EPlus | Atom::EMinus) {
                    return Err(Error::MalformedWord {
                        offset: *offset,
                        reason: "interior atoms must be E+ or E-".to_string(),
                    });
                }
            }
        } else {
            for (atom, offset) in &atoms {
                if !matches!(atom, Atom::EPlus | Atom::EMinus) {
                    return Err(Error::MalformedWord {
                        offset: *offset,
                        reason: "word must be CAP . (E+|E-)* . CUP or built from E+/E- only"
                            .to_string(),
                    });
                }
            }
        }
        Ok(CobordismExpr {
            atoms: atoms.into_iter().map(|(a, _)| a).collect(),
            closed,
        })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }
}

/// Value of a cobordism word: a scalar for closed words, a diagonal
/// operator on the idempotent basis otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CobordismValue {
    Scalar(Rational),
    Operator {
        /// Strict-partition labels of the idempotent basis, canonical order.
        basis: Vec<Partition>,
        diagonal: Vec<Rational>,
    },
}

/// Evaluates a cobordism word at degree `n` in the idempotent basis:
/// `CUP` is the unit vector, `E+`/`E-` are `diag((+-1)^{l} t^{-1})`, and
/// `CAP` pairs against the trace values.
pub fn evaluate_cobordism(expr: &CobordismExpr, n: u32) -> CobordismValue {
    let data = spectral(n);
    let diag_of = |acc: &mut Vec<Rational>, atom: &Atom| {
        for (entry, d) in acc.iter_mut().zip(data.iter()) {
            let mut factor = d.t.clone().recip();
            if *atom == Atom::EMinus && d.parity == 1 {
                factor = -factor;
            }
            *entry *= factor;
        }
    };

    if expr.is_closed() {
        // CAP . middle . CUP applied to the unit vector.
        let mut acc = vec![Rational::one(); data.len()];
        for atom in &expr.atoms()[1..expr.atoms().len() - 1] {
            diag_of(&mut acc, atom);
        }
        let total = acc
            .iter()
            .zip(data.iter())
            .map(|(c, d)| c * &d.t)
            .fold(Rational::zero(), |a, b| a + b);
        CobordismValue::Scalar(total)
    } else {
        let mut acc = vec![Rational::one(); data.len()];
        for atom in expr.atoms() {
            diag_of(&mut acc, atom);
        }
        CobordismValue::Operator {
            basis: data.iter().map(|d| d.nu.clone()).collect(),
            diagonal: acc,
        }
    }
}

/// The cobordism word factorizing the closed surface of the given genus
/// and parity: `CAP . E- . E+^{g-1} . CUP` when odd, `CAP . E+^g . CUP`
/// when even.
pub fn surface_word(genus: u32, parity: SurfaceParity) -> Result<CobordismExpr, Error> {
    if parity == SurfaceParity::Odd && genus == 0 {
        return Err(Error::OddParityOnSphere);
    }
    let mut atoms = vec![Atom::Cap];
    if parity == SurfaceParity::Odd {
        atoms.push(Atom::EMinus);
        atoms.extend(std::iter::repeat(Atom::EPlus).take(genus as usize - 1));
    } else {
        atoms.extend(std::iter::repeat(Atom::EPlus).take(genus as usize));
    }
    atoms.push(Atom::Cup);
    Ok(CobordismExpr {
        atoms,
        closed: true,
    })
}

/// One evaluated spin Hurwitz number with its per-label decomposition.
#[derive(Debug, Clone)]
pub struct SpinHurwitz {
    pub value: Rational,
    /// The even exponent `C = sum_i (l(mu^i) - n) - n chi`.
    pub c_exponent: i64,
    /// Contribution of each strict partition, summing to `value`.
    pub terms: Vec<(Partition, Rational)>,
}

/// Spin Hurwitz number of the genus-`g` surface of the given parity with
/// the given (all-odd) ramification data, by the closed character formula
/// `2^{C/2} [ sum_{l even} prod f (d/n!)^chi +- sum_{l odd} prod f (d/n!)^chi 2^{-chi/2} ]`.
pub fn spin_hurwitz(
    n: u32,
    genus: u32,
    parity: SurfaceParity,
    rams: &[Partition],
) -> Result<Rational, Error> {
    spin_hurwitz_with_source(n, genus, parity, rams, FTableSource::QFunctions)
        .map(|h| h.value)
}

/// Same as [`spin_hurwitz`] with the per-label terms and a selectable
/// central character source.
pub fn spin_hurwitz_with_source(
    n: u32,
    genus: u32,
    parity: SurfaceParity,
    rams: &[Partition],
    source: FTableSource,
) -> Result<SpinHurwitz, Error> {
    if parity == SurfaceParity::Odd && genus == 0 {
        return Err(Error::OddParityOnSphere);
    }
    for mu in rams {
        if mu.n() != n {
            return Err(Error::RamificationDegree {
                partition: mu.clone(),
                expected: n,
                got: mu.n(),
            });
        }
        if !mu.is_odd() {
            return Err(Error::NonOddRamification {
                partition: mu.clone(),
            });
        }
    }

    let chi = 2i64 - 2 * genus as i64;
    let c: i64 = rams
        .iter()
        .map(|mu| mu.len() as i64 - n as i64)
        .sum::<i64>()
        - n as i64 * chi;
    assert!(c % 2 == 0, "C is even for odd ramification data");
    assert!(chi % 2 == 0, "chi of a closed surface is even");
    let prefactor = two_pow(c / 2);

    let table = f_table(n, source);
    let nf = rat(BigInt::from(factorial(n as u64)));
    let mut value = Rational::zero();
    let mut terms = Vec::new();
    for d in spectral(n).iter() {
        let mut term = prefactor.clone();
        for mu in rams {
            term *= table.f(&d.nu, mu);
        }
        term *= pow_i(&(rat(BigInt::from(d.dim.clone())) / &nf), chi);
        if d.parity == 1 {
            term *= two_pow(-chi / 2);
            term *= rat(parity.sign());
        }
        value += &term;
        terms.push((d.nu.clone(), term));
    }
    Ok(SpinHurwitz {
        value,
        c_exponent: c,
        terms,
    })
}

/// The unramified closed form stated directly over the two parity types:
/// `sum_{l even} (d / 2^{n/2} n!)^chi +- sum_{l odd} (d / 2^{(n+1)/2} n!)^chi`,
/// with the 2-powers kept as integer exponents of `2^{chi/2}`.
pub fn spin_hurwitz_unramified(n: u32, genus: u32, parity: SurfaceParity) -> Result<Rational, Error> {
    if parity == SurfaceParity::Odd && genus == 0 {
        return Err(Error::OddParityOnSphere);
    }
    let chi = 2i64 - 2 * genus as i64;
    let nf = rat(BigInt::from(factorial(n as u64)));
    let mut total = Rational::zero();
    for d in spectral(n).iter() {
        let base = rat(BigInt::from(d.dim.clone())) / &nf;
        let halves = if d.parity == 0 {
            n as i64 * chi / 2
        } else {
            (n as i64 + 1) * chi / 2
        };
        let mut term = pow_i(&base, chi) * two_pow(-halves);
        if d.parity == 1 {
            term *= rat(parity.sign());
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::rational::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn state_spaces() {
        let ap = state_space(CircleKind::Antiperiodic, 3);
        assert_eq!(
            ap.iter().map(|l| l.label.clone()).collect::<Vec<_>>(),
            vec![p(&[3]), p(&[1, 1, 1])]
        );
        assert!(ap.iter().all(|l| l.degree == 0));

        let per = state_space(CircleKind::Periodic, 3);
        assert_eq!(per.len(), 2);
        assert_eq!(per[0].label, p(&[3]));
        assert_eq!(per[0].degree, 1);
        assert_eq!(per[1].label, p(&[2, 1]));
        assert_eq!(per[1].degree, 0);

        assert_eq!(state_space(CircleKind::Antiperiodic, 1).len(), 1);
    }

    #[test]
    fn cap_on_the_geometric_basis() {
        let v = StateVector::delta(3, &Partition::ones(3)).unwrap();
        assert_eq!(cap(&v), frac(1, 6));
        let w = StateVector::delta(3, &p(&[3])).unwrap();
        assert_eq!(cap(&w), rat(0));
    }

    #[test]
    fn cap_on_idempotents_gives_trace_values() {
        // e_nu expressed over delta_mu by inverting the change of basis.
        for n in 1..=4u32 {
            let cb = change_basis(n);
            let inv = linalg::invert(&cb.matrix).expect("invertible");
            for (j, d) in spectral_data(n).iter().enumerate() {
                let mut v = StateVector::zero(CircleKind::Antiperiodic, n);
                for (i, mu) in cb.cols.iter().enumerate() {
                    v.set_coeff(mu.clone(), inv[i][j].clone());
                }
                assert_eq!(cap(&v), d.t, "cap(e_{}) at n = {n}", d.nu);
            }
        }
    }

    #[test]
    fn change_basis_n3_column() {
        let cb = change_basis(3);
        let col = cb.cols.iter().position(|mu| *mu == p(&[3])).unwrap();
        let row3 = cb.rows.iter().position(|nu| *nu == p(&[3])).unwrap();
        let row21 = cb.rows.iter().position(|nu| *nu == p(&[2, 1])).unwrap();
        assert_eq!(cb.matrix[row3][col], frac(1, 4));
        assert_eq!(cb.matrix[row21][col], frac(-1, 2));
        // The identity column expresses the unit: delta_(1^n) = sum e_nu.
        let id_col = cb.cols.iter().position(|mu| *mu == p(&[1, 1, 1])).unwrap();
        for row in &cb.matrix {
            assert!(row[id_col].is_one());
        }
    }

    #[test]
    fn parse_and_evaluate_closed_words() {
        let sphere = CobordismExpr::parse("CAP . CUP").unwrap();
        assert_eq!(
            evaluate_cobordism(&sphere, 3),
            CobordismValue::Scalar(frac(1, 6))
        );
        let odd_torus = CobordismExpr::parse("CAP . E- . CUP").unwrap();
        assert_eq!(
            evaluate_cobordism(&odd_torus, 2),
            CobordismValue::Scalar(rat(-1))
        );
        let spaced = CobordismExpr::parse("  CAP.E-   .E+.CUP ").unwrap();
        assert!(spaced.is_closed());
        assert_eq!(spaced.atoms().len(), 4);
    }

    #[test]
    fn operator_words_are_diagonal() {
        let sq = CobordismExpr::parse("E- . E-").unwrap();
        let plus_sq = CobordismExpr::parse("E+ . E+").unwrap();
        for n in 1..=5u32 {
            assert_eq!(
                evaluate_cobordism(&sq, n),
                evaluate_cobordism(&plus_sq, n),
                "E-^2 = E+^2 at n = {n}"
            );
        }
        let single = CobordismExpr::parse("E+").unwrap();
        let CobordismValue::Operator { basis, diagonal } = evaluate_cobordism(&single, 2)
        else {
            panic!("expected operator")
        };
        assert_eq!(basis, vec![p(&[2])]);
        assert_eq!(diagonal, vec![rat(2)]);
    }

    #[test]
    fn parse_errors_carry_byte_offsets() {
        match CobordismExpr::parse("CAP . PANTS . CUP") {
            Err(Error::InvalidAtom { offset, found }) => {
                assert_eq!(offset, 6);
                assert_eq!(found, "PANTS");
            }
            other => panic!("expected invalid atom, got {other:?}"),
        }
        match CobordismExpr::parse("CAP . E+") {
            Err(Error::MalformedWord { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected malformed word, got {other:?}"),
        }
        match CobordismExpr::parse("E+ . CUP") {
            Err(Error::MalformedWord { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("expected malformed word, got {other:?}"),
        }
        assert!(matches!(
            CobordismExpr::parse("   "),
            Err(Error::MalformedWord { offset: 0, .. })
        ));
    }

    #[test]
    fn spin_hurwitz_anchor_values() {
        assert_eq!(
            spin_hurwitz(3, 0, SurfaceParity::Even, &[]).unwrap(),
            frac(1, 6)
        );
        assert_eq!(spin_hurwitz(2, 1, SurfaceParity::Even, &[]).unwrap(), rat(1));
        assert_eq!(spin_hurwitz(2, 1, SurfaceParity::Odd, &[]).unwrap(), rat(-1));
        assert_eq!(spin_hurwitz(2, 2, SurfaceParity::Even, &[]).unwrap(), rat(2));
        assert_eq!(spin_hurwitz(2, 2, SurfaceParity::Odd, &[]).unwrap(), rat(-2));
        assert_eq!(
            spin_hurwitz(3, 1, SurfaceParity::Even, &[p(&[3])]).unwrap(),
            frac(-1, 4)
        );
        for g in 0..=3u32 {
            assert_eq!(
                spin_hurwitz(1, g, SurfaceParity::Even, &[]).unwrap(),
                rat(1)
            );
            if g >= 1 {
                assert_eq!(
                    spin_hurwitz(1, g, SurfaceParity::Odd, &[]).unwrap(),
                    rat(-1)
                );
            }
        }
    }

    #[test]
    fn spin_hurwitz_domain_errors() {
        assert_eq!(
            spin_hurwitz(2, 0, SurfaceParity::Odd, &[]),
            Err(Error::OddParityOnSphere)
        );
        assert!(matches!(
            spin_hurwitz(3, 1, SurfaceParity::Even, &[p(&[2, 1])]),
            Err(Error::NonOddRamification { .. })
        ));
        assert!(matches!(
            spin_hurwitz(3, 1, SurfaceParity::Even, &[p(&[3, 1, 1])]),
            Err(Error::RamificationDegree { .. })
        ));
    }

    #[test]
    fn ramified_terms_sum_to_the_value() {
        let h = spin_hurwitz_with_source(
            3,
            1,
            SurfaceParity::Even,
            &[p(&[3])],
            FTableSource::QFunctions,
        )
        .unwrap();
        assert_eq!(h.c_exponent, -2);
        let total: Rational = h.terms.iter().map(|(_, t)| t.clone()).sum();
        assert_eq!(total, h.value);
        assert_eq!(h.terms.len(), 2);
    }

    #[test]
    fn torus_counts_strict_partitions_by_parity() {
        for n in 1..=8u32 {
            let strict = strict_partitions(n);
            let even = strict.iter().filter(|nu| nu.len() % 2 == 0).count() as i64;
            let odd = strict.len() as i64 - even;
            assert_eq!(
                spin_hurwitz(n, 1, SurfaceParity::Even, &[]).unwrap(),
                rat(even + odd)
            );
            assert_eq!(
                spin_hurwitz(n, 1, SurfaceParity::Odd, &[]).unwrap(),
                rat(even - odd)
            );
        }
    }

    #[test]
    fn gluing_matches_closed_formula() {
        for n in 1..=4u32 {
            for g in 0..=3u32 {
                for parity in [SurfaceParity::Even, SurfaceParity::Odd] {
                    if parity == SurfaceParity::Odd && g == 0 {
                        continue;
                    }
                    let word = surface_word(g, parity).unwrap();
                    let CobordismValue::Scalar(glued) = evaluate_cobordism(&word, n) else {
                        panic!("closed word must evaluate to a scalar")
                    };
                    assert_eq!(
                        glued,
                        spin_hurwitz(n, g, parity, &[]).unwrap(),
                        "gluing vs formula at n = {n}, g = {g}, {parity:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn theorem_style_unramified_form_agrees() {
        for n in 1..=6u32 {
            for g in 0..=4u32 {
                for parity in [SurfaceParity::Even, SurfaceParity::Odd] {
                    if parity == SurfaceParity::Odd && g == 0 {
                        continue;
                    }
                    assert_eq!(
                        spin_hurwitz(n, g, parity, &[]).unwrap(),
                        spin_hurwitz_unramified(n, g, parity).unwrap(),
                        "2-power bookkeeping at n = {n}, g = {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn spin_surface_validation() {
        assert!(SpinSurface::new(0, SurfaceParity::Odd, 0).is_err());
        let s = SpinSurface::new(2, SurfaceParity::Odd, 1).unwrap();
        assert_eq!(s.chi(), -2);
        assert_eq!(s.genus(), 2);
        assert_eq!(s.punctures(), 1);
        assert_eq!(s.parity().sign(), -1);
    }
}
