//! the three shifted complexes of a stable complex.
//!
//! combinatorial shifting moves single nonfaces with the elementary swap
//! S_kl and repeats full sweeps until nothing moves; the symmetric and
//! exterior routes go through generic initial ideals instead.  the
//! generator-level shortcut (the starred nonfaces) is implemented alongside
//! the brute-force sweep so the two can be compared in tests.

use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::complex::{minimalize, sample_below, Complex, Face, StabilityCriterion};
use crate::field::FieldSpec;
use crate::gin::{gin_exterior, gin_symmetric, GinError};
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftError {
    /// a swap needs vertices 1 <= k < l <= n
    BadStep { k: usize, l: usize },
    /// the given set is not a nonface of the complex
    NotANonface,
    /// no prefix of the nonface is a minimal nonface; the complex is not
    /// stable
    NoSplit,
    /// the operation needs a stable complex
    NotStable,
    /// shifting produced a singleton nonface, excluding a vertex
    VertexExcluded(usize),
    /// the sweep budget ran out without reaching a fixed point
    NonTermination,
    /// the explicit step list reached a fixed point that is not shifted
    ExplicitOrderInsufficient,
    /// failure inside the generic initial ideal computation
    Gin(GinError),
}

impl fmt::Display for ShiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiftError::BadStep { k, l } => {
                write!(f, "BadStep: ({}, {}) is not a pair 1 <= k < l <= n", k, l)
            }
            ShiftError::NotANonface => write!(f, "NotANonface: the set is a face of the complex"),
            ShiftError::NoSplit => write!(
                f,
                "NoSplit: no generator is a prefix of the nonface (stability violation)"
            ),
            ShiftError::NotStable => write!(f, "NotStable: the complex is not stable"),
            ShiftError::VertexExcluded(v) => {
                write!(f, "VertexExcluded: vertex {} would be excluded", v)
            }
            ShiftError::NonTermination => {
                write!(f, "NonTermination: sweep budget exhausted without a fixed point")
            }
            ShiftError::ExplicitOrderInsufficient => write!(
                f,
                "ExplicitOrderInsufficient: the explicit steps end at an unshifted complex"
            ),
            ShiftError::Gin(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for ShiftError {}

impl From<GinError> for ShiftError {
    fn from(e: GinError) -> ShiftError {
        ShiftError::Gin(e)
    }
}

/// one elementary swap, moving vertex l down to vertex k
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShiftStep {
    k: usize,
    l: usize,
}

impl ShiftStep {
    pub fn new(k: usize, l: usize) -> Result<ShiftStep, ShiftError> {
        if k < 1 || k >= l {
            return Err(ShiftError::BadStep { k, l });
        }
        Ok(ShiftStep { k, l })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }
}

impl fmt::Display for ShiftStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.l)
    }
}

/// the order in which pairs are swept
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftOrder {
    /// all pairs, l ascending then k ascending
    Canonical,
    /// all pairs, shuffled anew each sweep from the seed
    Random(u64),
    /// exactly the given steps, swept repeatedly
    Explicit(Vec<ShiftStep>),
}

/// the effective steps of a shifting run, with the minimal-nonface count
/// before the first and after every step
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTrace {
    steps: Vec<ShiftStep>,
    nonface_counts: Vec<usize>,
}

impl ShiftTrace {
    pub fn steps(&self) -> &[ShiftStep] {
        &self.steps
    }

    pub fn nonface_counts(&self) -> &[usize] {
        &self.nonface_counts
    }

    /// apply the recorded steps to a complex; replaying the trace on the
    /// original input reproduces the shifted output
    pub fn replay(&self, c: &Complex) -> Result<Complex, ShiftError> {
        let mut current = c.clone();
        for &step in &self.steps {
            current = shift_kl(&current, step)?;
        }
        Ok(current)
    }
}

/// the elementary swap on a single nonface: l is replaced by k when k is
/// absent and the swapped set is a face; otherwise the nonface is unchanged
pub fn s_kl(sigma: Face, c: &Complex, step: ShiftStep) -> Result<Face, ShiftError> {
    if step.l > c.n() {
        return Err(ShiftError::BadStep { k: step.k, l: step.l });
    }
    if c.is_face(sigma) || sigma.max_vertex().is_some_and(|m| m > c.n()) {
        return Err(ShiftError::NotANonface);
    }
    Ok(swap(sigma, c, step))
}

/// `s_kl` without the membership check, for callers iterating over the
/// materialized nonface family
fn swap(sigma: Face, c: &Complex, step: ShiftStep) -> Face {
    if sigma.contains(step.l) && !sigma.contains(step.k) {
        let moved = sigma.remove(step.l).insert(step.k);
        if c.is_face(moved) {
            return moved;
        }
    }
    sigma
}

/// image complex of one swap: every nonface is mapped and the images
/// generate the new nonface ideal
pub fn shift_kl(c: &Complex, step: ShiftStep) -> Result<Complex, ShiftError> {
    if step.l > c.n() {
        return Err(ShiftError::BadStep { k: step.k, l: step.l });
    }
    let images: Vec<Face> = c
        .all_nonfaces()
        .into_iter()
        .map(|sigma| swap(sigma, c, step))
        .collect();
    let minimal = minimalize(&images);
    for f in &minimal {
        if f.card() < 2 {
            // unreachable when every vertex is present: the swap preserves
            // cardinality and nonfaces have at least two vertices
            return Err(ShiftError::VertexExcluded(f.min_vertex().unwrap_or(step.k)));
        }
    }
    Ok(Complex::from_min_nonfaces(c.n(), &minimal).expect("images stay inside [n]"))
}

/// write a nonface as generator-prefix plus strictly larger tail.  the
/// prefixes of a set are nested, so at most one generator fits; stability
/// guarantees one exists.
pub fn unique_split(sigma: Face, c: &Complex) -> Result<(usize, Face), ShiftError> {
    if c.is_face(sigma) || sigma.max_vertex().is_some_and(|m| m > c.n()) {
        return Err(ShiftError::NotANonface);
    }
    for (j, &g) in c.min_nonfaces().iter().enumerate() {
        if !g.is_subset(sigma) {
            continue;
        }
        let tail = sigma.difference(g);
        let below = tail
            .min_vertex()
            .is_some_and(|t| t <= g.max_vertex().unwrap_or(0));
        if !below {
            return Ok((j, tail));
        }
    }
    Err(ShiftError::NoSplit)
}

/// image of the i-th minimal nonface under one swap, at generator level:
/// either its own swap, or — when some other generator's swap embeds in it —
/// that generator restored with the tail kept
pub fn sigma_star(i: usize, c: &Complex, step: ShiftStep) -> Result<Face, ShiftError> {
    if step.l > c.n() {
        return Err(ShiftError::BadStep { k: step.k, l: step.l });
    }
    if !c.is_stable(StabilityCriterion::Ideal) {
        return Err(ShiftError::NotStable);
    }
    let gens = c.min_nonfaces();
    assert!(i < gens.len(), "generator index out of range");
    let sigma_i = gens[i];
    let mut star: Option<Face> = None;
    for (s, &g) in gens.iter().enumerate() {
        if s == i {
            continue;
        }
        let moved = swap(g, c, step);
        if moved == g || !moved.is_subset(sigma_i) {
            continue;
        }
        let tail = sigma_i.difference(moved);
        let all_above = tail
            .min_vertex()
            .is_some_and(|t| t > g.max_vertex().unwrap_or(0));
        if !all_above {
            continue;
        }
        let candidate = g.union(tail);
        // the reassembled set is the same for every witness
        assert!(star.is_none() || star == Some(candidate), "ambiguous decomposition");
        star = Some(candidate);
    }
    let out = star.unwrap_or_else(|| swap(sigma_i, c, step));
    assert_eq!(out.max_vertex(), sigma_i.max_vertex(), "swap must preserve the maximum");
    Ok(out)
}

fn canonical_pairs(n: usize) -> Vec<ShiftStep> {
    let mut out = Vec::new();
    for l in 2..=n {
        for k in 1..l {
            out.push(ShiftStep { k, l });
        }
    }
    out
}

fn shuffle(steps: &mut [ShiftStep], rng: &mut ChaCha8Rng) {
    for i in (1..steps.len()).rev() {
        let j = sample_below(rng, (i + 1) as u64) as usize;
        steps.swap(i, j);
    }
}

fn is_shifted(c: &Complex) -> bool {
    MonomialIdeal::stanley_reisner(c)
        .classify()
        .squarefree_strongly_stable
}

/// iterate swaps in the given order until a full sweep changes nothing,
/// then require the fixed point to be shifted.  effective steps and
/// nonface counts are recorded in the trace.
pub fn combinatorial_shift(
    c: &Complex,
    order: &ShiftOrder,
) -> Result<(Complex, ShiftTrace), ShiftError> {
    if !c.is_stable(StabilityCriterion::Ideal) {
        return Err(ShiftError::NotStable);
    }
    let n = c.n();
    if let ShiftOrder::Explicit(steps) = order {
        for step in steps {
            if step.l > n {
                return Err(ShiftError::BadStep { k: step.k, l: step.l });
            }
        }
    }
    let mut rng = match order {
        ShiftOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut current = c.clone();
    let mut steps = Vec::new();
    let mut counts = vec![current.min_nonfaces().len()];
    let budget = n * n * n;
    for sweep in 0.. {
        if sweep > budget {
            return Err(ShiftError::NonTermination);
        }
        let pairs = match order {
            ShiftOrder::Canonical => canonical_pairs(n),
            ShiftOrder::Random(_) => {
                let mut p = canonical_pairs(n);
                shuffle(&mut p, rng.as_mut().expect("seeded above"));
                p
            }
            ShiftOrder::Explicit(list) => list.clone(),
        };
        let mut changed = false;
        for step in pairs {
            let next = shift_kl(&current, step)?;
            if next != current {
                steps.push(step);
                counts.push(next.min_nonfaces().len());
                current = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if !is_shifted(&current) {
        // a stationary sweep stays stationary, so more sweeping cannot help.
        // with all pairs in every sweep this cannot happen (a fixed point of
        // every swap is shifted); a partial explicit list can stop short.
        return Err(match order {
            ShiftOrder::Explicit(_) => ShiftError::ExplicitOrderInsufficient,
            _ => ShiftError::NonTermination,
        });
    }
    Ok((current, ShiftTrace { steps, nonface_counts: counts }))
}

/// shifted complex through the polynomial ring: the generic initial ideal
/// of the nonface ideal, stretched to squarefree by the degree staircase
pub fn symmetric_shift(
    c: &Complex,
    field: &FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<Complex, ShiftError> {
    let ideal = MonomialIdeal::stanley_reisner(c);
    let gin = gin_symmetric(&ideal, field, seed, trials)?;
    let stretched = gin
        .sigma(c.n())
        .expect("gin generators satisfy the ambient bound");
    Ok(stretched
        .complex_of()
        .expect("no degree-one generator can appear"))
}

/// shifted complex through the exterior algebra: the generic initial ideal
/// of the nonface ideal taken among wedges
pub fn exterior_shift(
    c: &Complex,
    field: &FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<Complex, ShiftError> {
    let ideal = MonomialIdeal::stanley_reisner(c);
    let gin = gin_exterior(&ideal, field, seed, trials)?;
    Ok(gin
        .complex_of()
        .expect("no degree-one generator can appear"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs)
    }

    fn complex(n: usize, nonfaces: &[&[usize]]) -> Complex {
        let faces: Vec<Face> = nonfaces.iter().map(|vs| face(vs)).collect();
        Complex::from_min_nonfaces(n, &faces).unwrap()
    }

    fn fix_a() -> Complex {
        complex(4, &[&[1, 2], &[2, 3], &[2, 4]])
    }

    fn fix_b() -> Complex {
        complex(4, &[&[1, 2], &[2, 3], &[1, 3, 4]])
    }

    fn step(k: usize, l: usize) -> ShiftStep {
        ShiftStep::new(k, l).unwrap()
    }

    #[test]
    fn bad_steps_rejected() {
        assert_eq!(
            ShiftStep::new(2, 2).unwrap_err(),
            ShiftError::BadStep { k: 2, l: 2 }
        );
        assert_eq!(
            ShiftStep::new(0, 3).unwrap_err(),
            ShiftError::BadStep { k: 0, l: 3 }
        );
        assert_eq!(
            s_kl(face(&[1, 2]), &fix_a(), step(1, 9)).unwrap_err(),
            ShiftError::BadStep { k: 1, l: 9 }
        );
    }

    #[test]
    fn single_swaps() {
        let a = fix_a();
        // {2,3} moves to the face {1,3}
        assert_eq!(s_kl(face(&[2, 3]), &a, step(1, 2)).unwrap(), face(&[1, 3]));
        // k already present: unchanged
        assert_eq!(s_kl(face(&[1, 2]), &a, step(1, 2)).unwrap(), face(&[1, 2]));
        // swap would land on a nonface: unchanged
        let b = fix_b();
        assert_eq!(
            s_kl(face(&[2, 3, 4]), &b, step(1, 2)).unwrap(),
            face(&[2, 3, 4])
        );
        // faces are rejected
        assert_eq!(
            s_kl(face(&[1, 3]), &a, step(1, 2)).unwrap_err(),
            ShiftError::NotANonface
        );
    }

    #[test]
    fn one_step_images() {
        let shifted_a = shift_kl(&fix_a(), step(1, 2)).unwrap();
        assert_eq!(
            shifted_a.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[1, 4])]
        );
        let shifted_b = shift_kl(&fix_b(), step(1, 2)).unwrap();
        assert_eq!(
            shifted_b.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3, 4])]
        );
        // a pair that moves nothing
        assert_eq!(shift_kl(&fix_a(), step(2, 3)).unwrap(), fix_a());
    }

    #[test]
    fn splits() {
        let b = fix_b();
        // generators in canonical order: {1,2}, {2,3}, {1,3,4}
        assert_eq!(unique_split(face(&[2, 3, 4]), &b).unwrap(), (1, face(&[4])));
        assert_eq!(unique_split(face(&[1, 2, 3]), &b).unwrap(), (0, face(&[3])));
        let a = fix_a();
        assert_eq!(unique_split(face(&[1, 2]), &a).unwrap(), (0, Face::EMPTY));
        assert_eq!(
            unique_split(face(&[1, 3]), &a).unwrap_err(),
            ShiftError::NotANonface
        );
        // unstable complex: {1,2,3} has no generator prefix
        let c = complex(3, &[&[2, 3]]);
        assert_eq!(
            unique_split(face(&[1, 2, 3]), &c).unwrap_err(),
            ShiftError::NoSplit
        );
    }

    #[test]
    fn starred_generators() {
        let a = fix_a();
        // generators: {1,2}, {2,3}, {2,4}
        assert_eq!(sigma_star(0, &a, step(1, 2)).unwrap(), face(&[1, 2]));
        assert_eq!(sigma_star(1, &a, step(1, 2)).unwrap(), face(&[1, 3]));
        assert_eq!(sigma_star(2, &a, step(1, 2)).unwrap(), face(&[1, 4]));
        let b = fix_b();
        // {1,3,4} = S_12({2,3}) u {4}, so the star restores {2,3} u {4}
        assert_eq!(sigma_star(2, &b, step(1, 2)).unwrap(), face(&[2, 3, 4]));
        // unstable input is rejected
        let c = complex(3, &[&[2, 3]]);
        assert_eq!(
            sigma_star(0, &c, step(1, 2)).unwrap_err(),
            ShiftError::NotStable
        );
    }

    #[test]
    fn stars_match_the_sweep() {
        // the generator-level images generate exactly the one-step complex
        for c in [fix_a(), fix_b()] {
            for l in 2..=4 {
                for k in 1..l {
                    let st = step(k, l);
                    let swept = shift_kl(&c, st).unwrap();
                    let stars: Vec<Face> = (0..c.min_nonfaces().len())
                        .map(|i| sigma_star(i, &c, st).unwrap())
                        .collect();
                    let rebuilt = Complex::from_min_nonfaces(c.n(), &stars).unwrap();
                    assert_eq!(rebuilt, swept, "pair ({}, {})", k, l);
                    // the star images are already minimal: same count
                    let mut sorted = stars.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.as_slice(), rebuilt.min_nonfaces());
                }
            }
        }
    }

    #[test]
    fn full_shift_canonical() {
        let (shifted, trace) = combinatorial_shift(&fix_a(), &ShiftOrder::Canonical).unwrap();
        assert_eq!(
            shifted.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[1, 4])]
        );
        assert_eq!(trace.steps(), &[step(1, 2)]);
        assert_eq!(trace.nonface_counts(), &[3, 3]);
        let (shifted_b, trace_b) = combinatorial_shift(&fix_b(), &ShiftOrder::Canonical).unwrap();
        assert_eq!(
            shifted_b.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3, 4])]
        );
        assert_eq!(trace_b.replay(&fix_b()).unwrap(), shifted_b);
    }

    #[test]
    fn shifted_fixpoint() {
        let done = complex(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        let (again, trace) = combinatorial_shift(&done, &ShiftOrder::Canonical).unwrap();
        assert_eq!(again, done);
        assert!(trace.steps().is_empty());
        assert_eq!(trace.nonface_counts(), &[3]);
    }

    #[test]
    fn random_orders_land_shifted() {
        for seed in 0..5 {
            let (shifted, trace) =
                combinatorial_shift(&fix_b(), &ShiftOrder::Random(seed)).unwrap();
            assert!(is_shifted(&shifted), "seed {}", seed);
            assert_eq!(trace.replay(&fix_b()).unwrap(), shifted, "seed {}", seed);
        }
    }

    #[test]
    fn explicit_orders() {
        let list = ShiftOrder::Explicit(vec![step(1, 2)]);
        let (shifted, _) = combinatorial_shift(&fix_b(), &list).unwrap();
        assert_eq!(
            shifted.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[2, 3, 4])]
        );
        // a list that cannot reach a shifted complex
        let short = ShiftOrder::Explicit(vec![step(3, 4)]);
        assert_eq!(
            combinatorial_shift(&fix_b(), &short).unwrap_err(),
            ShiftError::ExplicitOrderInsufficient
        );
    }

    #[test]
    fn shifting_requires_stability() {
        let c = complex(3, &[&[2, 3]]);
        assert_eq!(
            combinatorial_shift(&c, &ShiftOrder::Canonical).unwrap_err(),
            ShiftError::NotStable
        );
    }

    #[test]
    fn symmetric_route() {
        let q = FieldSpec::Rationals;
        let s = symmetric_shift(&fix_a(), &q, 3, 2).unwrap();
        assert_eq!(
            s.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[1, 4])]
        );
        // hollow triangle is fixed
        let hollow = complex(3, &[&[1, 2, 3]]);
        assert_eq!(symmetric_shift(&hollow, &q, 3, 2).unwrap(), hollow);
        let full = Complex::full_simplex(3).unwrap();
        assert_eq!(symmetric_shift(&full, &q, 3, 2).unwrap(), full);
    }

    #[test]
    fn exterior_route() {
        let s = exterior_shift(&fix_a(), &FieldSpec::extension(2, 13).unwrap(), 3, 2).unwrap();
        assert_eq!(
            s.min_nonfaces(),
            &[face(&[1, 2]), face(&[1, 3]), face(&[1, 4])]
        );
        let q = FieldSpec::Rationals;
        let hollow = complex(3, &[&[1, 2, 3]]);
        assert_eq!(exterior_shift(&hollow, &q, 3, 2).unwrap(), hollow);
        let full = Complex::full_simplex(3).unwrap();
        assert_eq!(exterior_shift(&full, &q, 3, 2).unwrap(), full);
    }

    #[test]
    fn gin_errors_propagate() {
        let small = FieldSpec::prime(101).unwrap();
        assert_eq!(
            symmetric_shift(&fix_a(), &small, 1, 2).unwrap_err(),
            ShiftError::Gin(GinError::FieldTooSmall)
        );
        // unstable complex: rejected by the gin stability gate
        let c = complex(3, &[&[2, 3]]);
        assert_eq!(
            symmetric_shift(&c, &FieldSpec::Rationals, 1, 2).unwrap_err(),
            ShiftError::Gin(GinError::NotStable)
        );
    }

    #[test]
    fn swap_properties_on_the_fixtures() {
        // moved nonfaces land on faces, the map is injective on nonfaces,
        // and the maximum vertex is preserved on stable complexes
        for c in [fix_a(), fix_b()] {
            for l in 2..=c.n() {
                for k in 1..l {
                    let st = step(k, l);
                    let nonfaces = c.all_nonfaces();
                    let images: Vec<Face> =
                        nonfaces.iter().map(|&s| swap(s, &c, st)).collect();
                    for (s, i) in nonfaces.iter().zip(&images) {
                        if s != i {
                            assert!(c.is_face(*i));
                        }
                        assert_eq!(s.max_vertex(), i.max_vertex());
                    }
                    let mut dedup = images.clone();
                    dedup.sort();
                    dedup.dedup();
                    assert_eq!(dedup.len(), images.len(), "injectivity");
                }
            }
        }
    }

    #[test]
    fn error_messages() {
        assert_eq!(
            format!("{}", ShiftError::NoSplit),
            "NoSplit: no generator is a prefix of the nonface (stability violation)"
        );
        assert_eq!(
            format!("{}", ShiftError::Gin(GinError::FieldTooSmall)),
            format!("{}", GinError::FieldTooSmall)
        );
        assert_eq!(format!("{}", step(1, 2)), "(1, 2)");
    }
}
