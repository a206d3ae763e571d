//! generic initial ideals under reverse-lex, computed degreewise.
//!
//! no Gröbner machinery: for each degree d the graded piece of the moved
//! ideal is spanned by explicit products, so echelonizing it with columns in
//! revlex-descending order reads off the initial monomials directly.  over a
//! finite field genericity can fail silently, so every run uses several
//! independent coordinate changes and requires them to agree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::betti::hilbert_function;
use crate::field::{FieldSpec, Scalar};
use crate::ideal::{monomials_of_degree, Monomial, MonomialIdeal};
use crate::matrix::Matrix;

/// the smallest field accepted for genericity: 2^13 elements
pub const MIN_FIELD_SIZE: u64 = 1 << 13;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GinError {
    /// the degree-capped procedure needs a stable or squarefree stable input
    NotStable,
    /// exterior inputs must be squarefree
    NotSquarefree,
    /// independent coordinate changes disagreed twice
    GenericityFailure,
    /// the field has fewer than 2^13 elements
    FieldTooSmall,
}

impl fmt::Display for GinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GinError::NotStable => {
                write!(f, "NotStable: the input is neither stable nor squarefree stable")
            }
            GinError::NotSquarefree => {
                write!(f, "NotSquarefree: exterior input has a non-squarefree generator")
            }
            GinError::GenericityFailure => write!(
                f,
                "GenericityFailure: independent coordinate changes disagreed twice"
            ),
            GinError::FieldTooSmall => write!(
                f,
                "FieldTooSmall: genericity requires at least {} field elements",
                MIN_FIELD_SIZE
            ),
        }
    }
}

impl core::error::Error for GinError {}

/// an invertible change of coordinates x_j -> sum_i m[i][j] x_i, drawn
/// uniformly and rejection-sampled until the rank is full
#[derive(Clone, Debug)]
pub struct GenericChange {
    matrix: Matrix,
    seed: u64,
}

impl GenericChange {
    pub fn random(field: &FieldSpec, n: usize, seed: u64) -> GenericChange {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows = (0..n)
                .map(|_| (0..n).map(|_| field.random_element(&mut rng)).collect())
                .collect();
            let matrix = Matrix::from_rows(field.clone(), rows).expect("sampled entries");
            if matrix.rank() == n {
                return GenericChange { matrix, seed };
            }
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> GenericChange {
        let mut matrix = Matrix::zeros(field.clone(), n, n);
        for i in 0..n {
            matrix.set(i, i, field.one());
        }
        GenericChange { matrix, seed: 0 }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &FieldSpec {
        self.matrix.field()
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// one graded slice of an ideal after a change of coordinates, echelonized
/// over a fixed monomial basis in revlex-descending order
pub struct GradedSubspace {
    degree: u32,
    monomials: Vec<Monomial>,
    echelon: Matrix,
    pivots: Vec<usize>,
}

impl GradedSubspace {
    /// span of explicit coordinate rows over the full degree-d monomial basis
    pub fn from_rows(
        field: &FieldSpec,
        n: usize,
        d: u32,
        rows: Vec<Vec<Scalar>>,
    ) -> GradedSubspace {
        GradedSubspace::build(field, d, monomials_of_degree(n, d), rows)
    }

    fn build(
        field: &FieldSpec,
        degree: u32,
        monomials: Vec<Monomial>,
        rows: Vec<Vec<Scalar>>,
    ) -> GradedSubspace {
        for row in &rows {
            assert_eq!(row.len(), monomials.len(), "row width must match the basis");
        }
        let m = if rows.is_empty() {
            Matrix::zeros(field.clone(), 0, monomials.len())
        } else {
            Matrix::from_rows(field.clone(), rows).expect("rectangular rows")
        };
        let (echelon, pivots) = m.rref_natural();
        GradedSubspace {
            degree,
            monomials,
            echelon,
            pivots,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// the monomial basis the columns are indexed by, largest first
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn basis(&self) -> &Matrix {
        &self.echelon
    }

    /// leading monomials of the row space: one per pivot column
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.pivots.iter().map(|&c| self.monomials[c].clone()).collect()
    }
}

/// image of a monomial under the change of coordinates, expanded into
/// exponent-vector coordinates
fn apply_change(g: &GenericChange, u: &Monomial) -> BTreeMap<Vec<u32>, Scalar> {
    let field = g.field();
    let n = g.n();
    let mut poly: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    poly.insert(vec![0; n], field.one());
    for j in 0..n {
        for _ in 0..u.exponent(j + 1) {
            let mut next: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
            for (e, c) in &poly {
                for i in 0..n {
                    let cij = g.matrix().get(i, j);
                    if field.is_zero(cij) {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2[i] += 1;
                    let term = field.mul(c, cij);
                    match next.get_mut(&e2) {
                        Some(acc) => *acc = field.add(acc, &term),
                        None => {
                            next.insert(e2, term);
                        }
                    }
                }
            }
            poly = next;
        }
    }
    poly
}

/// degree-d slice of the moved ideal in the polynomial ring: the span of
/// w * g(u) over generators u and monomials w of complementary degree
pub fn graded_piece(ideal: &MonomialIdeal, g: &GenericChange, d: u32) -> GradedSubspace {
    let n = ideal.n();
    assert_eq!(g.n(), n, "change of coordinates must match the variable count");
    assert!(
        ideal.min_degree().is_some_and(|min| d >= min),
        "degree below every generator"
    );
    let field = g.field();
    let monomials = monomials_of_degree(n, d);
    let col_of: BTreeMap<&[u32], usize> = monomials
        .iter()
        .enumerate()
        .map(|(c, m)| (m.exponents(), c))
        .collect();
    let mut rows = Vec::new();
    for u in ideal.gens() {
        if u.degree() > d {
            continue;
        }
        let gu = apply_change(g, u);
        for w in monomials_of_degree(n, d - u.degree()) {
            let mut row = vec![field.zero(); monomials.len()];
            for (e, c) in &gu {
                let shifted: Vec<u32> = e
                    .iter()
                    .zip(w.exponents())
                    .map(|(a, b)| a + b)
                    .collect();
                row[col_of[shifted.as_slice()]] = c.clone();
            }
            rows.push(row);
        }
    }
    GradedSubspace::build(field, d, monomials, rows)
}

/// wedge of the images of the support variables, as subset-mask coordinates;
/// repeated indices vanish and each insertion carries a sort sign
fn apply_change_exterior(g: &GenericChange, u: &Monomial) -> BTreeMap<u64, Scalar> {
    let field = g.field();
    let n = g.n();
    let mut poly: BTreeMap<u64, Scalar> = BTreeMap::new();
    poly.insert(0, field.one());
    for j in u.support().vertices() {
        let mut next: BTreeMap<u64, Scalar> = BTreeMap::new();
        for (&mask, c) in &poly {
            for i in 0..n {
                let cij = g.matrix().get(i, j - 1);
                if field.is_zero(cij) {
                    continue;
                }
                let bit = 1u64 << i;
                if mask & bit != 0 {
                    continue;
                }
                let mut term = field.mul(c, cij);
                if (mask >> (i + 1)).count_ones() % 2 == 1 {
                    term = field.neg(&term);
                }
                match next.get_mut(&(mask | bit)) {
                    Some(acc) => *acc = field.add(acc, &term),
                    None => {
                        next.insert(mask | bit, term);
                    }
                }
            }
        }
        poly = next;
    }
    poly
}

/// sign of merging the sorted wedge w onto the right of sorted s: one
/// transposition per inverted pair
fn merge_sign(w: u64, s: u64) -> bool {
    let mut inversions = 0;
    let mut rest = s;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (w >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// degree-d slice of the moved ideal in the exterior algebra, over the
/// squarefree monomial basis
pub fn exterior_graded_piece(
    ideal: &MonomialIdeal,
    g: &GenericChange,
    d: u32,
) -> GradedSubspace {
    let n = ideal.n();
    assert_eq!(g.n(), n, "change of coordinates must match the variable count");
    assert!(
        ideal.min_degree().is_some_and(|min| d >= min),
        "degree below every generator"
    );
    let field = g.field();
    let monomials: Vec<Monomial> = monomials_of_degree(n, d)
        .into_iter()
        .filter(Monomial::is_squarefree)
        .collect();
    let col_of: BTreeMap<u64, usize> = monomials
        .iter()
        .enumerate()
        .map(|(c, m)| (m.support().bits(), c))
        .collect();
    let mut rows = Vec::new();
    for u in ideal.gens() {
        if u.degree() > d {
            continue;
        }
        let gu = apply_change_exterior(g, u);
        for w in monomials_of_degree(n, d - u.degree()) {
            if !w.is_squarefree() {
                continue;
            }
            let wbits = w.support().bits();
            let mut row = vec![field.zero(); monomials.len()];
            for (&s, c) in &gu {
                if wbits & s != 0 {
                    continue;
                }
                let col = col_of[&(wbits | s)];
                row[col] = if merge_sign(wbits, s) { field.neg(c) } else { c.clone() };
            }
            rows.push(row);
        }
    }
    GradedSubspace::build(field, d, monomials, rows)
}

/// squarefree monomial count of the degree-d slice, the exterior analogue of
/// the polynomial-ring hilbert function
pub fn exterior_hilbert_function(ideal: &MonomialIdeal, d: u32) -> u64 {
    monomials_of_degree(ideal.n(), d)
        .iter()
        .filter(|m| m.is_squarefree() && ideal.contains(m))
        .count() as u64
}

/// sweep the degrees in order, keeping each initial monomial that no
/// earlier output divides
fn degreewise_initial(
    g: &GenericChange,
    degrees: &[u32],
    piece: &dyn Fn(&GenericChange, u32) -> GradedSubspace,
    expected_dim: &dyn Fn(u32) -> u64,
) -> Vec<Monomial> {
    let mut found: Vec<Monomial> = Vec::new();
    for &d in degrees {
        let sub = piece(g, d);
        assert_eq!(
            sub.dim() as u64,
            expected_dim(d),
            "graded dimension must survive the change of coordinates"
        );
        for m in sub.initial_monomials() {
            if !found.iter().any(|f| f.divides(&m)) {
                found.push(m);
            }
        }
    }
    found
}

fn trial_seed(base: u64, batch: u64, t: u64) -> u64 {
    base.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(batch * 1009 + t + 1))
}

/// run the degreewise sweep under `trials` independent changes and require
/// identical answers; one full resample is allowed before giving up
fn with_trials(
    field: &FieldSpec,
    n: usize,
    seed: u64,
    trials: usize,
    run: &dyn Fn(&GenericChange) -> Vec<Monomial>,
) -> Result<Vec<Monomial>, GinError> {
    let trials = trials.max(1);
    for batch in 0..2 {
        let mut agreed: Option<Vec<Monomial>> = None;
        let mut disagreement = false;
        for t in 0..trials {
            let g = GenericChange::random(field, n, trial_seed(seed, batch, t as u64));
            let out = run(&g);
            match &agreed {
                None => agreed = Some(out),
                Some(prev) if *prev == out => {}
                Some(_) => {
                    disagreement = true;
                    break;
                }
            }
        }
        if !disagreement {
            return Ok(agreed.expect("at least one trial"));
        }
    }
    Err(GinError::GenericityFailure)
}

/// generic initial ideal in the polynomial ring.  degrees are swept from the
/// smallest to the largest generator degree, which captures every generator
/// of the output precisely because the input is (squarefree) stable; the
/// output is checked to preserve the graded dimensions and to be stable and
/// Borel-fixed for the working characteristic.
pub fn gin_symmetric(
    ideal: &MonomialIdeal,
    field: &FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<MonomialIdeal, GinError> {
    if !field.size_at_least(MIN_FIELD_SIZE) {
        return Err(GinError::FieldTooSmall);
    }
    let report = ideal.classify();
    if !report.stable && !report.squarefree_stable {
        return Err(GinError::NotStable);
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let n = ideal.n();
    let degrees: Vec<u32> =
        (ideal.min_degree().unwrap()..=ideal.max_degree().unwrap()).collect();
    let found = with_trials(field, n, seed, trials, &|g| {
        degreewise_initial(
            g,
            &degrees,
            &|g, d| graded_piece(ideal, g, d),
            &|d| hilbert_function(ideal, d),
        )
    })?;
    let out = MonomialIdeal::new(n, found).expect("initial monomials are monomials");
    for &d in &degrees {
        assert_eq!(
            hilbert_function(&out, d),
            hilbert_function(ideal, d),
            "output must preserve the graded dimensions"
        );
    }
    assert!(out.classify().stable, "output must be stable");
    assert!(
        out.is_p_borel(field.characteristic()),
        "output must be Borel-fixed for the working characteristic"
    );
    Ok(out)
}

/// generic initial ideal in the exterior algebra.  the algebra vanishes past
/// degree n, so sweeping every degree up to n captures the whole output; the
/// result is checked to preserve graded dimensions and to be squarefree
/// strongly stable.
pub fn gin_exterior(
    ideal: &MonomialIdeal,
    field: &FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<MonomialIdeal, GinError> {
    if !field.size_at_least(MIN_FIELD_SIZE) {
        return Err(GinError::FieldTooSmall);
    }
    if !ideal.classify().squarefree {
        return Err(GinError::NotSquarefree);
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let n = ideal.n();
    let degrees: Vec<u32> = (ideal.min_degree().unwrap()..=n as u32).collect();
    let found = with_trials(field, n, seed, trials, &|g| {
        degreewise_initial(
            g,
            &degrees,
            &|g, d| exterior_graded_piece(ideal, g, d),
            &|d| exterior_hilbert_function(ideal, d),
        )
    })?;
    let out = MonomialIdeal::new(n, found).expect("initial monomials are monomials");
    for &d in &degrees {
        assert_eq!(
            exterior_hilbert_function(&out, d),
            exterior_hilbert_function(ideal, d),
            "output must preserve the graded dimensions"
        );
    }
    assert!(
        out.classify().squarefree_strongly_stable,
        "exterior output must be squarefree strongly stable"
    );
    Ok(out)
}
