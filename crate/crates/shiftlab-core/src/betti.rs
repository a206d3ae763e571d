//! graded Betti numbers of monomial ideals.
//!
//! three routes that must agree on their common domain: a closed-form count
//! over the generators for stable ideals, the squarefree analogue for
//! squarefree stable ideals, and homology of the Koszul complex over an
//! explicit field, computed one multidegree at a time so that only the small
//! blocks where homology can live are ever materialized.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::field::FieldSpec;
use crate::ideal::{monomials_of_degree, Monomial, MonomialIdeal};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BettiError {
    /// the closed-form count needs a stable ideal
    NotStable,
    /// the squarefree closed-form count needs a squarefree stable ideal
    NotSquarefreeStable,
    /// the requested degree cap cuts off the generators themselves
    DegreeCapTooSmall { cap: u32, needed: u32 },
}

impl fmt::Display for BettiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiError::NotStable => write!(f, "NotStable: the ideal is not stable"),
            BettiError::NotSquarefreeStable => {
                write!(f, "NotSquarefreeStable: the ideal is not squarefree stable")
            }
            BettiError::DegreeCapTooSmall { cap, needed } => write!(
                f,
                "DegreeCapTooSmall: cap {} is below the largest generator degree {}",
                cap, needed
            ),
        }
    }
}

impl core::error::Error for BettiError {}

/// the table (i, j) -> beta_{i,j}, stored sparsely; i is the homological
/// index and j the internal degree
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// largest i with a nonzero entry
    pub fn max_homological_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// max of j - i over the nonzero entries
    pub fn regularity(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i as u32).max()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, ((i, j), b)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "b({},{})={}", i, j, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn binomial(a: usize, k: usize) -> u64 {
    if k > a {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (a - k + 1 + t) as u128 / (t + 1) as u128;
    }
    acc as u64
}

/// Betti numbers of a stable ideal: each generator u contributes
/// binom(m(u) - 1, i) in homological index i and degree deg(u) + i
pub fn betti_ek(ideal: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    if !ideal.classify().stable {
        return Err(BettiError::NotStable);
    }
    let mut table = BettiTable::new();
    for g in ideal.gens() {
        let m = g.max_index().expect("generators are never units");
        let d = g.degree();
        for i in 0..m {
            table.add(i, d + i as u32, binomial(m - 1, i));
        }
    }
    Ok(table)
}

/// Betti numbers of a squarefree stable ideal: each generator u contributes
/// binom(m(u) - deg(u), i) in homological index i and degree deg(u) + i
pub fn betti_ahh(ideal: &MonomialIdeal) -> Result<BettiTable, BettiError> {
    if !ideal.classify().squarefree_stable {
        return Err(BettiError::NotSquarefreeStable);
    }
    let mut table = BettiTable::new();
    for g in ideal.gens() {
        let m = g.max_index().expect("generators are never units");
        let d = g.degree();
        for i in 0..=(m - d as usize) {
            table.add(i, d + i as u32, binomial(m - d as usize, i));
        }
    }
    Ok(table)
}

/// the regularity of a stable or squarefree stable ideal is the largest
/// generator degree; rejects ideals where that shortcut is not available
pub fn regularity_from_gens(ideal: &MonomialIdeal) -> Result<Option<u32>, BettiError> {
    let report = ideal.classify();
    if !report.stable && !report.squarefree_stable {
        return Err(BettiError::NotStable);
    }
    Ok(ideal.max_degree())
}

/// dimension of the degree-d piece of the ideal, by direct enumeration
pub fn hilbert_function(ideal: &MonomialIdeal, d: u32) -> u64 {
    monomials_of_degree(ideal.n(), d)
        .iter()
        .filter(|m| ideal.contains(m))
        .count() as u64
}

/// the same dimension by inclusion-exclusion over generator subsets; only
/// usable for small generator counts
pub fn hilbert_function_inclusion_exclusion(ideal: &MonomialIdeal, d: u32) -> u64 {
    let gens = ideal.gens();
    assert!(
        gens.len() <= 20,
        "inclusion-exclusion over {} generators is too large",
        gens.len()
    );
    let n = ideal.n();
    let mut total: i128 = 0;
    for mask in 1u32..1 << gens.len() {
        let mut lcm = Monomial::one(n);
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        if lcm.degree() > d {
            continue;
        }
        // monomials of degree d divisible by the lcm
        let count = binomial(n - 1 + (d - lcm.degree()) as usize, n - 1) as i128;
        if mask.count_ones() % 2 == 1 {
            total += count;
        } else {
            total -= count;
        }
    }
    total as u64
}

/// Betti numbers over an explicit field, from the homology of the Koszul
/// complex tensored with S/I.  the differential preserves multidegrees and
/// homology in positive homological index only shows up at least common
/// multiples of generators, so the computation runs one lcm at a time.
/// entries are reported for degrees up to `cap` (default: largest generator
/// degree plus the variable count).
pub fn betti_koszul(
    ideal: &MonomialIdeal,
    field: &FieldSpec,
    cap: Option<u32>,
) -> Result<BettiTable, BettiError> {
    let n = ideal.n();
    let maxdeg = ideal.max_degree().unwrap_or(0);
    let cap = cap.unwrap_or(maxdeg + n as u32);
    if cap < maxdeg {
        return Err(BettiError::DegreeCapTooSmall { cap, needed: maxdeg });
    }
    let mut table = BettiTable::new();
    if ideal.is_zero() {
        return Ok(table);
    }
    // close the generator multidegrees under pairwise lcm
    let mut lattice: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut work: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        if lattice.insert(g.exponents().to_vec()) {
            work.push(g.clone());
        }
    }
    while let Some(a) = work.pop() {
        for g in ideal.gens() {
            let l = a.lcm(g);
            if l.degree() <= cap && lattice.insert(l.exponents().to_vec()) {
                work.push(l);
            }
        }
    }
    assert!(lattice.len() <= 1 << 20, "lcm lattice unexpectedly large");
    for alpha in &lattice {
        block_homology(&mut table, ideal, field, &Monomial::new(alpha.clone()));
    }
    Ok(table)
}

/// homology of the multidegree-alpha block of the Koszul complex of S/I,
/// added into the table with the shift from S/I down to I
fn block_homology(
    table: &mut BettiTable,
    ideal: &MonomialIdeal,
    field: &FieldSpec,
    alpha: &Monomial,
) {
    let supp = alpha.support().vertices();
    let s = supp.len();
    // bases[h]: subsets T of the support (as masks over `supp`) with
    // x^(alpha - chi(T)) outside the ideal
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..1 << s {
        let mut e = alpha.exponents().to_vec();
        for (pos, &v) in supp.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                e[v - 1] -= 1;
            }
        }
        if !ideal.contains(&Monomial::new(e)) {
            bases[mask.count_ones() as usize].push(mask);
        }
    }
    // ranks[h] = rank of the differential C_h -> C_{h-1}
    let mut ranks = vec![0usize; s + 2];
    for h in 1..=s {
        if bases[h].is_empty() || bases[h - 1].is_empty() {
            continue;
        }
        let col_of: BTreeMap<u32, usize> = bases[h - 1]
            .iter()
            .enumerate()
            .map(|(c, &m)| (m, c))
            .collect();
        let one = field.one();
        let neg_one = field.neg(&one);
        let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::with_capacity(bases[h].len());
        for &t_mask in &bases[h] {
            let mut row = vec![field.zero(); bases[h - 1].len()];
            for pos in 0..s {
                if t_mask >> pos & 1 == 0 {
                    continue;
                }
                let target = t_mask & !(1 << pos);
                if let Some(&c) = col_of.get(&target) {
                    let below = (t_mask & ((1 << pos) - 1)).count_ones();
                    row[c] = if below % 2 == 0 { one.clone() } else { neg_one.clone() };
                }
            }
            rows.push(row);
        }
        let m = Matrix::from_rows(field.clone(), rows).expect("rows are rectangular");
        ranks[h] = m.rank();
    }
    for h in 1..=s {
        let c = bases[h].len();
        let hom = c - ranks[h] - ranks[h + 1];
        if hom > 0 {
            // beta_{h,alpha}(S/I) = beta_{h-1,alpha}(I)
            table.add(h - 1, alpha.degree(), hom as u64);
        }
    }
}
