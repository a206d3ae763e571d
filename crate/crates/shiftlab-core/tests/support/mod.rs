// shared oracles for the integration suites.  everything here recomputes a
// library quantity along an independent route: whole-degree koszul homology
// instead of the blockwise multidegree computation, and direct bitmask scans
// instead of the transversal machinery.

#![allow(dead_code)]

use shiftlab_core::ideal::monomials_of_degree;
use shiftlab_core::{BettiTable, Complex, Face, FieldSpec, Matrix, Monomial, MonomialIdeal};
use std::collections::BTreeMap;

/// graded betti numbers of an ideal from the homology of the full koszul
/// complex of the quotient, one total degree at a time.  the library runs the
/// same homology block by block per multidegree; this version builds whole
/// dense differentials, so agreement is meaningful.  entries are reported for
/// degrees up to `cap`.
pub fn dense_betti(ideal: &MonomialIdeal, field: &FieldSpec, cap: u32) -> BettiTable {
    let n = ideal.n();
    let mut table = BettiTable::new();
    for j in 1..=cap {
        let tmax = n.min(j as usize);
        // stage t basis: a monomial of degree j - t outside the ideal paired
        // with a t-subset of the variables
        let mut bases: Vec<Vec<(Vec<u32>, u64)>> = Vec::with_capacity(tmax + 1);
        let mut index: Vec<BTreeMap<(Vec<u32>, u64), usize>> = Vec::with_capacity(tmax + 1);
        for t in 0..=tmax {
            let mut basis = Vec::new();
            for m in monomials_of_degree(n, j - t as u32) {
                if ideal.contains(&m) {
                    continue;
                }
                for mask in 0..(1u64 << n) {
                    if mask.count_ones() as usize == t {
                        basis.push((m.exponents().to_vec(), mask));
                    }
                }
            }
            let map = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
            bases.push(basis);
            index.push(map);
        }
        // integer differentials, one sparse column per source element; terms
        // that land inside the ideal are dropped
        let mut diffs: Vec<Vec<Vec<(usize, i64)>>> = Vec::with_capacity(tmax + 1);
        diffs.push(Vec::new());
        for t in 1..=tmax {
            let mut cols = Vec::with_capacity(bases[t].len());
            for (exps, mask) in &bases[t] {
                let mut col = Vec::new();
                for (pos, v) in Face::from_bits(*mask).vertices().into_iter().enumerate() {
                    let mut target = exps.clone();
                    target[v - 1] += 1;
                    if ideal.contains(&Monomial::new(target.clone())) {
                        continue;
                    }
                    let sign = if pos % 2 == 0 { 1i64 } else { -1 };
                    let row = index[t - 1][&(target, mask & !(1u64 << (v - 1)))];
                    col.push((row, sign));
                }
                cols.push(col);
            }
            diffs.push(cols);
        }
        // consecutive differentials must compose to zero before any rank is
        // trusted
        for t in 2..=tmax {
            for col in &diffs[t] {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(mid, c) in col {
                    for &(dst, d) in &diffs[t - 1][mid] {
                        *acc.entry(dst).or_insert(0) += c * d;
                    }
                }
                assert!(
                    acc.values().all(|&v| v == 0),
                    "koszul differential must square to zero"
                );
            }
        }
        let rank_of = |t: usize| -> usize {
            if t > tmax || bases[t].is_empty() || bases[t - 1].is_empty() {
                return 0;
            }
            let mut m = Matrix::zeros(field.clone(), bases[t - 1].len(), bases[t].len());
            for (c, col) in diffs[t].iter().enumerate() {
                for &(r, s) in col {
                    m.set(r, c, field.from_i64(s));
                }
            }
            m.rank()
        };
        for t in 1..=tmax {
            let cycles = bases[t].len() - rank_of(t);
            let betti = cycles - rank_of(t + 1);
            if betti > 0 {
                table.add(t - 1, j, betti as u64);
            }
        }
    }
    table
}

/// every complex on {1, ..., n} that contains all the vertices, produced by
/// filtering the upward-closed families of candidate nonfaces.  doubly
/// exponential, so the vertex count is capped hard.
pub fn all_complexes(n: usize) -> Vec<Complex> {
    assert!(n <= 4, "family enumeration blows up past n = 4");
    let candidates: Vec<u64> = (0..(1u64 << n)).filter(|m| m.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for pick in 0u64..(1 << candidates.len()) {
        let family: Vec<u64> = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        let closed = family.iter().all(|&s| {
            (1..=n).all(|v| {
                let up = s | (1 << (v - 1));
                up == s || family.contains(&up)
            })
        });
        if !closed {
            continue;
        }
        let min: Vec<Face> = family
            .iter()
            .filter(|&&s| family.iter().all(|&t| t == s || s & t != t))
            .map(|&s| Face::from_bits(s))
            .collect();
        out.push(Complex::from_min_nonfaces(n, &min).expect("members have two vertices"));
    }
    out
}

/// stability checked straight off the definition: every nonface must stay a
/// nonface when its top vertex is traded for a smaller vertex outside it
pub fn brute_stable(c: &Complex) -> bool {
    let n = c.n();
    let gens: Vec<u64> = c.min_nonfaces().iter().map(|f| f.bits()).collect();
    let is_nonface = |mask: u64| gens.iter().any(|&g| mask & g == g);
    (0..(1u64 << n)).all(|mask| {
        if !is_nonface(mask) {
            return true;
        }
        let top = 63 - mask.leading_zeros() as u64;
        (0..top).all(|low| {
            mask & (1 << low) != 0 || is_nonface((mask & !(1 << top)) | (1 << low))
        })
    })
}

/// maximal faces by scanning every subset
pub fn brute_facets(c: &Complex) -> Vec<Face> {
    let n = c.n();
    let gens: Vec<u64> = c.min_nonfaces().iter().map(|f| f.bits()).collect();
    let is_face = |mask: u64| gens.iter().all(|&g| mask & g != g);
    let faces: Vec<u64> = (0..(1u64 << n)).filter(|&m| is_face(m)).collect();
    let mut out: Vec<Face> = faces
        .iter()
        .filter(|&&f| faces.iter().all(|&g| g == f || f & g != f))
        .map(|&f| Face::from_bits(f))
        .collect();
    out.sort();
    out
}

/// number of faces of each cardinality, empty face included
pub fn face_counts(c: &Complex) -> Vec<usize> {
    let mut counts = vec![0usize; c.n() + 1];
    for f in c.all_faces() {
        counts[f.card()] += 1;
    }
    counts
}
