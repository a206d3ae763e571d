//! simplicial complexes on the vertex set {1, ..., n}, stored by facets and
//! minimal nonfaces at the same time.
//!
//! a face is a bitmask over up to 64 vertices.  conversion between the facet
//! description and the minimal-nonface description goes through minimal
//! transversals (a face is exactly a set whose complement meets every minimal
//! nonface), so neither direction enumerates all 2^n subsets.  operations
//! that do materialize the full face list are guarded to n <= 24.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::{Ordering, Reverse};
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// hard cap on the vertex count: faces are single u64 bitmasks
pub const MAX_VERTICES: usize = 64;

/// a subset of {1, ..., n}, stored as a bitmask with vertex v at bit v-1
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// build a face from 1-based vertex labels; repeats are collapsed
    pub fn from_vertices(vertices: &[usize]) -> Face {
        let mut bits = 0u64;
        for &v in vertices {
            assert!(
                (1..=MAX_VERTICES).contains(&v),
                "vertex {} outside 1..=64",
                v
            );
            bits |= 1 << (v - 1);
        }
        Face(bits)
    }

    pub fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// vertex labels in ascending order
    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.card());
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize + 1);
            bits &= bits - 1;
        }
        out
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(self, v: usize) -> Face {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {} outside 1..=64", v);
        Face(self.0 | 1 << (v - 1))
    }

    pub fn remove(self, v: usize) -> Face {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {} outside 1..=64", v);
        Face(self.0 & !(1 << (v - 1)))
    }

    /// the largest vertex, None for the empty face
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }
}

// faces sort by cardinality first, then by bitmask value; this is the order
// used everywhere a face list is called canonical
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.card(), self.0).cmp(&(other.card(), other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// drop every set that contains another set of the family; the result is an
/// antichain in canonical order
pub fn minimalize(faces: &[Face]) -> Vec<Face> {
    let mut sorted = faces.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<Face> = Vec::new();
    'outer: for &f in &sorted {
        for &g in &out {
            // out only holds faces of cardinality <= card(f)
            if g.is_subset(f) {
                continue 'outer;
            }
        }
        out.push(f);
    }
    out
}

/// drop every set contained in another set of the family; the result is an
/// antichain in canonical order
pub fn maximalize(faces: &[Face]) -> Vec<Face> {
    let mut sorted = faces.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<Face> = Vec::new();
    // scan largest first so kept sets absorb the smaller ones
    'outer: for &f in sorted.iter().rev() {
        for &g in &out {
            if f.is_subset(g) {
                continue 'outer;
            }
        }
        out.push(f);
    }
    out.sort();
    out
}

/// all minimal sets meeting every member of `sets` (Berge's sequential
/// algorithm: extend the transversal family one set at a time).  an empty
/// family has the empty transversal; a family containing the empty set has
/// none.
pub fn minimal_transversals(sets: &[Face]) -> Vec<Face> {
    let mut trans = vec![Face::EMPTY];
    for &s in sets {
        let mut next: Vec<Face> = Vec::new();
        for &t in &trans {
            if !t.intersection(s).is_empty() {
                next.push(t);
            } else {
                for v in s.vertices() {
                    next.push(t.insert(v));
                }
            }
        }
        trans = minimalize(&next);
    }
    trans
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    /// vertex count outside the supported range
    NOutOfRange(usize),
    /// a face mentions a vertex above n
    VertexOutOfRange { vertex: usize, n: usize },
    /// vertex not covered by any facet (or excluded by a singleton nonface);
    /// every complex here contains all singletons
    MissingVertex(usize),
    /// the empty set was passed as a nonface, which would leave no faces at all
    EmptyNonface,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::NOutOfRange(n) => {
                write!(f, "NOutOfRange: vertex count {} is not supported here", n)
            }
            ComplexError::VertexOutOfRange { vertex, n } => {
                write!(f, "VertexOutOfRange: vertex {} not in 1..={}", vertex, n)
            }
            ComplexError::MissingVertex(v) => {
                write!(f, "MissingVertex: vertex {} is not a face", v)
            }
            ComplexError::EmptyNonface => {
                write!(f, "EmptyNonface: the empty set cannot be a nonface")
            }
        }
    }
}

impl core::error::Error for ComplexError {}

/// a simplicial complex on {1, ..., n} containing every singleton.  both the
/// facet list and the minimal-nonface list are kept, each an antichain in
/// canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
    min_nonfaces: Vec<Face>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<(), ComplexError> {
    if n == 0 || n > MAX_VERTICES {
        Err(ComplexError::NOutOfRange(n))
    } else {
        Ok(())
    }
}

fn check_vertices(n: usize, faces: &[Face]) -> Result<(), ComplexError> {
    for &f in faces {
        if f.bits() & !full_mask(n) != 0 {
            let vertex = *f.vertices().iter().find(|&&v| v > n).unwrap();
            return Err(ComplexError::VertexOutOfRange { vertex, n });
        }
    }
    Ok(())
}

impl Complex {
    /// the complex of all subsets of {1, ..., n}
    pub fn full_simplex(n: usize) -> Result<Complex, ComplexError> {
        check_n(n)?;
        Ok(Complex {
            n,
            facets: vec![Face(full_mask(n))],
            min_nonfaces: Vec::new(),
        })
    }

    /// build from a facet list; redundant facets are dropped silently.  every
    /// vertex of {1, ..., n} must appear in some facet.
    pub fn from_facets(n: usize, facets: &[Face]) -> Result<Complex, ComplexError> {
        check_n(n)?;
        check_vertices(n, facets)?;
        let cover = facets.iter().fold(0u64, |acc, f| acc | f.bits());
        if cover != full_mask(n) {
            let missing = (!cover & full_mask(n)).trailing_zeros() as usize + 1;
            return Err(ComplexError::MissingVertex(missing));
        }
        let facets = maximalize(facets);
        // a set is a nonface iff it meets the complement of every facet, so
        // the minimal nonfaces are the minimal transversals of those
        // complements
        let complements: Vec<Face> = facets
            .iter()
            .map(|f| Face(!f.bits() & full_mask(n)))
            .collect();
        let min_nonfaces = minimal_transversals(&complements);
        Ok(Complex {
            n,
            facets,
            min_nonfaces,
        })
    }

    /// build from a list of nonfaces; non-minimal entries are dropped
    /// silently.  nonfaces must have at least two vertices (a singleton
    /// nonface would exclude a vertex).
    pub fn from_min_nonfaces(n: usize, nonfaces: &[Face]) -> Result<Complex, ComplexError> {
        check_n(n)?;
        check_vertices(n, nonfaces)?;
        for &f in nonfaces {
            if f.is_empty() {
                return Err(ComplexError::EmptyNonface);
            }
            if f.card() == 1 {
                return Err(ComplexError::MissingVertex(f.min_vertex().unwrap()));
            }
        }
        let min_nonfaces = minimalize(nonfaces);
        // maximal faces are exactly the complements of minimal transversals
        // of the nonface family
        let facets: Vec<Face> = minimal_transversals(&min_nonfaces)
            .iter()
            .map(|t| Face(!t.bits() & full_mask(n)))
            .collect();
        let facets = {
            let mut fs = facets;
            fs.sort();
            fs
        };
        Ok(Complex {
            n,
            facets,
            min_nonfaces,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn min_nonfaces(&self) -> &[Face] {
        &self.min_nonfaces
    }

    pub fn dimension(&self) -> usize {
        // facets cover every vertex, so the largest facet is nonempty
        self.facets.iter().map(|f| f.card()).max().unwrap() - 1
    }

    pub fn is_face(&self, face: Face) -> bool {
        face.bits() & !full_mask(self.n) == 0
            && !self.min_nonfaces.iter().any(|g| g.is_subset(face))
    }

    /// every face, in canonical order.  materializes 2^n subsets, so n <= 24.
    pub fn all_faces(&self) -> Vec<Face> {
        assert!(
            self.n <= 24,
            "face enumeration materializes 2^n subsets; n = {} is too large",
            self.n
        );
        let mut out: Vec<Face> = (0..=full_mask(self.n))
            .map(Face)
            .filter(|&f| self.is_face(f))
            .collect();
        out.sort();
        out
    }

    /// every nonface, in canonical order.  materializes 2^n subsets, so n <= 24.
    pub fn all_nonfaces(&self) -> Vec<Face> {
        assert!(
            self.n <= 24,
            "nonface enumeration materializes 2^n subsets; n = {} is too large",
            self.n
        );
        let mut out: Vec<Face> = (0..=full_mask(self.n))
            .map(Face)
            .filter(|&f| !self.is_face(f))
            .collect();
        out.sort();
        out
    }

    /// three equivalent formulations of stability; they must always agree
    /// (the property tests check this).
    ///
    /// `Nonface` and `Face` materialize the full subset lattice and are
    /// guarded to n <= 24; `Ideal` works on the minimal nonfaces alone.
    pub fn is_stable(&self, criterion: StabilityCriterion) -> bool {
        match criterion {
            StabilityCriterion::Nonface => {
                // every nonface stays a nonface when its largest vertex is
                // swapped for any smaller absent vertex
                for sigma in self.all_nonfaces() {
                    let m = sigma.max_vertex().unwrap();
                    for i in 1..m {
                        if !sigma.contains(i) && self.is_face(sigma.remove(m).insert(i)) {
                            return false;
                        }
                    }
                }
                true
            }
            StabilityCriterion::Face => {
                // every face stays a face when any of its vertices is swapped
                // for any vertex above its maximum
                for sigma in self.all_faces() {
                    let Some(m) = sigma.max_vertex() else { continue };
                    for i in sigma.vertices() {
                        for j in m + 1..=self.n {
                            if !self.is_face(sigma.remove(i).insert(j)) {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            StabilityCriterion::Ideal => {
                // the squarefree-stable test for the nonface ideal, applied
                // at generator level: swapping the largest vertex of a
                // minimal nonface down must land inside the nonface family
                for &g in &self.min_nonfaces {
                    let m = g.max_vertex().unwrap();
                    for i in 1..m {
                        if !g.contains(i) && self.is_face(g.remove(m).insert(i)) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// stable id string used to key verification reports
    pub fn canonical_id(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for f in &self.min_nonfaces {
            parts.push(format!("{}", f));
        }
        if parts.is_empty() {
            format!("n={} minimal nonfaces (none)", self.n)
        } else {
            format!("n={} minimal nonfaces {}", self.n, parts.join(","))
        }
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[{}]", self.canonical_id())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityCriterion {
    /// quantified over all nonfaces
    Nonface,
    /// quantified over all faces, exchanging upward
    Face,
    /// quantified over minimal nonfaces only
    Ideal,
}

/// all stable complexes on {1, ..., n}, smallest nonface families first, ties
/// broken by comparing the minimal-nonface lists.  n is capped at 6; the
/// count grows too quickly beyond that.
pub fn enumerate_stable_complexes(n: usize) -> Result<Vec<Complex>, ComplexError> {
    if n == 0 || n > 6 {
        return Err(ComplexError::NOutOfRange(n));
    }
    // a stable nonface family is a set of subsets (cardinality >= 2) closed
    // under adding a vertex and under swapping the maximum down.  both moves
    // go to a strictly larger cardinality or a strictly smaller bitmask, so
    // ordering the subsets by (cardinality descending, bitmask ascending)
    // puts every successor before the set itself and the closure conditions
    // become a pure upset search.
    let mut nodes: Vec<u64> = (0..=full_mask(n))
        .filter(|b| b.count_ones() >= 2)
        .collect();
    nodes.sort_by_key(|&b| (Reverse(b.count_ones()), b));
    let index: BTreeMap<u64, usize> = nodes.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let succs: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&b| {
            let face = Face(b);
            let mut s = Vec::new();
            for j in 1..=n {
                if !face.contains(j) {
                    s.push(index[&face.insert(j).bits()]);
                }
            }
            let m = face.max_vertex().unwrap();
            for i in 1..m {
                if !face.contains(i) {
                    s.push(index[&face.remove(m).insert(i).bits()]);
                }
            }
            s
        })
        .collect();

    fn go(
        idx: usize,
        n: usize,
        nodes: &[u64],
        succs: &[Vec<usize>],
        state: &mut Vec<bool>,
        out: &mut Vec<(usize, Vec<Face>)>,
    ) {
        if idx == nodes.len() {
            let chosen: Vec<Face> = nodes
                .iter()
                .enumerate()
                .filter(|&(i, _)| state[i])
                .map(|(_, &b)| Face(b))
                .collect();
            out.push((chosen.len(), minimalize(&chosen)));
            return;
        }
        state[idx] = false;
        go(idx + 1, n, nodes, succs, state, out);
        if succs[idx].iter().all(|&s| state[s]) {
            state[idx] = true;
            go(idx + 1, n, nodes, succs, state, out);
            state[idx] = false;
        }
    }

    let mut state = vec![false; nodes.len()];
    let mut raw: Vec<(usize, Vec<Face>)> = Vec::new();
    go(0, n, &nodes, &succs, &mut state, &mut raw);
    raw.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    raw.into_iter()
        .map(|(_, mnf)| Complex::from_min_nonfaces(n, &mnf))
        .collect()
}

pub(crate) fn sample_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let mask = bound.next_power_of_two() - 1;
    loop {
        let x = rng.next_u64() & mask;
        if x < bound {
            return x;
        }
    }
}

/// a random stable complex on {1, ..., n}, deterministic in (n, seed):
/// sample a small antichain of candidate nonfaces, close it under swapping
/// maxima down, and take the complex those nonfaces generate.
///
/// candidates are drawn from the first min(n, 10) vertices so the closure
/// and the facet conversion stay small; the remaining vertices end up in
/// every facet.  n is capped at 32.
pub fn random_stable_complex(n: usize, seed: u64) -> Result<Complex, ComplexError> {
    if n == 0 || n > 32 {
        return Err(ComplexError::NOutOfRange(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    if n == 1 {
        return Complex::full_simplex(1);
    }
    let support = n.min(10);
    let count = sample_below(&mut rng, support as u64 + 1) as usize;
    let mut candidates: Vec<Face> = Vec::new();
    for _ in 0..count {
        let max_card = support.min(4);
        let card = 2 + sample_below(&mut rng, max_card as u64 - 1) as usize;
        let mut face = Face::EMPTY;
        while face.card() < card {
            let v = 1 + sample_below(&mut rng, support as u64) as usize;
            face = face.insert(v);
        }
        candidates.push(face);
    }
    let candidates = minimalize(&candidates);

    // close under the exchange at generator level; every other nonface the
    // closure forces is a superset of one of these
    let mut seen: BTreeSet<u64> = candidates.iter().map(|f| f.bits()).collect();
    let mut work: Vec<u64> = seen.iter().copied().collect();
    while let Some(bits) = work.pop() {
        let face = Face(bits);
        let m = face.max_vertex().unwrap();
        for i in 1..m {
            if !face.contains(i) {
                let t = face.remove(m).insert(i).bits();
                if seen.insert(t) {
                    work.push(t);
                }
            }
        }
    }
    let closed: Vec<Face> = seen.into_iter().map(Face).collect();
    let complex = Complex::from_min_nonfaces(n, &minimalize(&closed))?;
    debug_assert!(complex.is_stable(StabilityCriterion::Ideal));
    Ok(complex)
}
