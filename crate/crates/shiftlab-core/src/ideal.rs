//! monomials and monomial ideals in a fixed polynomial ring k[x_1, ..., x_n],
//! with the stability classifiers, the sigma operator that stretches a
//! monomial into a squarefree one, and the translation to and from
//! simplicial complexes.

use alloc::vec::Vec;
use alloc::vec;
use core::cmp::Ordering;
use core::fmt;

use crate::complex::{Complex, Face};
use crate::field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    /// the unit monomial 1 was passed where a proper generator is required
    UnitGenerator,
    /// the largest variable index of 1 is undefined
    UnitMonomial,
    /// operation requires a squarefree ideal
    NotSquarefree,
    /// a single-variable generator excludes that vertex from any complex
    VertexExcluded(usize),
    /// the stretched monomial needs more variables than the target ring has
    AmbientTooSmall { required: usize, n: usize },
    /// reverse-lexicographic comparison is only defined within one degree
    DegreeMismatch { left: u32, right: u32 },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::UnitGenerator => {
                write!(f, "UnitGenerator: the unit monomial cannot generate a proper ideal")
            }
            IdealError::UnitMonomial => {
                write!(f, "UnitMonomial: the unit monomial has no largest variable")
            }
            IdealError::NotSquarefree => {
                write!(f, "NotSquarefree: a squarefree ideal is required")
            }
            IdealError::VertexExcluded(v) => {
                write!(f, "VertexExcluded: generator x{} excludes vertex {}", v, v)
            }
            IdealError::AmbientTooSmall { required, n } => {
                write!(f, "AmbientTooSmall: need {} variables, ring has {}", required, n)
            }
            IdealError::DegreeMismatch { left, right } => {
                write!(f, "DegreeMismatch: revlex compares degrees {} and {}", left, right)
            }
        }
    }
}

impl core::error::Error for IdealError {}

/// a monomial as an exponent vector; the vector length is the number of ring
/// variables, and variable indices are 1-based
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        assert!(!exps.is_empty(), "monomials need at least one variable");
        Monomial { exps }
    }

    pub fn one(n: usize) -> Monomial {
        Monomial::new(vec![0; n])
    }

    /// the variable x_i in an n-variable ring
    pub fn variable(n: usize, i: usize) -> Monomial {
        assert!((1..=n).contains(&i), "variable index {} outside 1..={}", i, n);
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial::new(exps)
    }

    /// the squarefree monomial with the given support
    pub fn from_support(n: usize, support: Face) -> Monomial {
        let mut exps = vec![0; n];
        for v in support.vertices() {
            assert!(v <= n, "vertex {} outside 1..={}", v, n);
            exps[v - 1] = 1;
        }
        Monomial::new(exps)
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// exponent of x_i (1-based)
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// m(u): the largest variable index dividing u
    pub fn max_index(&self) -> Result<usize, IdealError> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .ok_or(IdealError::UnitMonomial)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Face {
        let mut f = Face::EMPTY;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                f = f.insert(i + 1);
            }
        }
        f
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial::new(exps)
    }

    /// exact quotient, None when `other` does not divide `self`
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial::new(
                self.exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(&a, &b)| a - b)
                    .collect(),
            ))
        } else {
            None
        }
    }

    /// swap one power of x_j for one of x_i
    fn exchange(&self, j: usize, i: usize) -> Monomial {
        debug_assert!(self.exponent(j) > 0);
        let mut exps = self.exps.clone();
        exps[j - 1] -= 1;
        exps[i - 1] += 1;
        Monomial::new(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// reverse-lexicographic comparison within one degree: u comes out Greater
/// when the last nonzero entry of exponents(u) - exponents(v) is negative
pub fn revlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering, IdealError> {
    debug_assert_eq!(a.num_vars(), b.num_vars());
    if a.degree() != b.degree() {
        return Err(IdealError::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    for i in (0..a.exps.len()).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ok(Ordering::Greater),
            Ordering::Greater => return Ok(Ordering::Less),
        }
    }
    Ok(Ordering::Equal)
}

/// the order generator lists are kept in: degree first, then revlex-largest
/// first within a degree
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| revlex_cmp(a, b).unwrap().reverse())
}

/// every monomial of the given degree, revlex-largest first
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out.sort_by(canonical_cmp);
    out
}

/// which of the standard stability notions an ideal satisfies, all checked
/// at generator level
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub strongly_stable: bool,
    pub squarefree: bool,
    pub squarefree_stable: bool,
    pub squarefree_strongly_stable: bool,
}

/// a monomial ideal held by its minimal generators in canonical order
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// minimalizes and sorts the generators; the unit monomial is rejected
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal, IdealError> {
        for g in &gens {
            assert_eq!(g.num_vars(), n, "generator width mismatch");
            if g.is_unit() {
                return Err(IdealError::UnitGenerator);
            }
        }
        let mut sorted = gens;
        sorted.sort_by(canonical_cmp);
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        'outer: for g in sorted {
            for h in &minimal {
                // minimal is sorted by degree, so h can only divide g
                if h.divides(&g) {
                    continue 'outer;
                }
            }
            minimal.push(g);
        }
        Ok(MonomialIdeal { n, gens: minimal })
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(|g| g.degree())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.num_vars(), self.n);
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn classify(&self) -> StabilityReport {
        let squarefree = self.gens.iter().all(|g| g.is_squarefree());
        let mut stable = true;
        let mut strongly_stable = true;
        let mut squarefree_stable = squarefree;
        let mut squarefree_strongly_stable = squarefree;
        for g in &self.gens {
            let m = g.max_index().expect("generators are never units");
            for i in 1..m {
                if !self.contains(&g.exchange(m, i)) {
                    stable = false;
                }
                if squarefree && g.exponent(i) == 0 && !self.contains(&g.exchange(m, i)) {
                    squarefree_stable = false;
                }
            }
            for j in 1..=self.n {
                if g.exponent(j) == 0 {
                    continue;
                }
                for i in 1..j {
                    if !self.contains(&g.exchange(j, i)) {
                        strongly_stable = false;
                    }
                    if squarefree && g.exponent(i) == 0 && !self.contains(&g.exchange(j, i)) {
                        squarefree_strongly_stable = false;
                    }
                }
            }
        }
        StabilityReport {
            stable,
            strongly_stable,
            squarefree,
            squarefree_stable,
            squarefree_strongly_stable,
        }
    }

    /// the Borel condition in characteristic p: swaps of t powers at a time
    /// are only required when every base-p digit of t is at most the matching
    /// digit of the full exponent.  p = 0 is the strongly stable condition.
    pub fn is_p_borel(&self, p: u64) -> bool {
        if p == 0 {
            return self.classify().strongly_stable;
        }
        assert!(field::is_prime(p), "p must be zero or prime");
        for g in &self.gens {
            for j in 1..=self.n {
                let nu = g.exponent(j);
                if nu == 0 {
                    continue;
                }
                for i in 1..j {
                    for t in 1..=nu {
                        if !digits_leq(t as u64, nu as u64, p) {
                            continue;
                        }
                        let mut exps = g.exponents().to_vec();
                        exps[j - 1] -= t;
                        exps[i - 1] += t;
                        if !self.contains(&Monomial::new(exps)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// the ideal generated by the degree-j piece
    pub fn component_ideal(&self, j: u32) -> MonomialIdeal {
        let gens: Vec<Monomial> = monomials_of_degree(self.n, j)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect();
        MonomialIdeal { n: self.n, gens }
    }

    /// the product with the irrelevant maximal ideal (x_1, ..., x_n)
    pub fn maximal_ideal_product(&self) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.n * self.gens.len());
        for g in &self.gens {
            for i in 1..=self.n {
                gens.push(g.mul_var(i));
            }
        }
        MonomialIdeal::new(self.n, gens).expect("products of generators are never units")
    }

    /// apply the stretching operator to every generator and minimalize
    pub fn sigma(&self, target_n: usize) -> Result<MonomialIdeal, IdealError> {
        let gens = self
            .gens
            .iter()
            .map(|g| sigma_monomial(g, target_n))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::new(target_n, gens)
    }

    /// the nonface ideal of a complex: one squarefree generator per minimal
    /// nonface
    pub fn stanley_reisner(c: &Complex) -> MonomialIdeal {
        let gens: Vec<Monomial> = c
            .min_nonfaces()
            .iter()
            .map(|&f| Monomial::from_support(c.n(), f))
            .collect();
        MonomialIdeal::new(c.n(), gens).expect("minimal nonfaces are never empty")
    }

    /// the complex whose nonface ideal this is
    pub fn complex_of(&self) -> Result<Complex, IdealError> {
        let mut supports = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if !g.is_squarefree() {
                return Err(IdealError::NotSquarefree);
            }
            let s = g.support();
            if s.card() == 1 {
                return Err(IdealError::VertexExcluded(s.min_vertex().unwrap()));
            }
            supports.push(s);
        }
        Ok(Complex::from_min_nonfaces(self.n, &supports)
            .expect("squarefree generators with two or more variables are valid nonfaces"))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[n={}] {}", self.n, self)
    }
}

/// every base-p digit of a is at most the matching digit of b
fn digits_leq(mut a: u64, mut b: u64, p: u64) -> bool {
    while a > 0 {
        if a % p > b % p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// stretch a monomial into a squarefree one: write u = x_{i_1} ... x_{i_d}
/// with i_1 <= ... <= i_d and shift the t-th factor up by t - 1.  the image
/// needs m(u) + deg(u) - 1 variables.
pub fn sigma_monomial(u: &Monomial, target_n: usize) -> Result<Monomial, IdealError> {
    let mut indices: Vec<usize> = Vec::with_capacity(u.degree() as usize);
    for (i, &e) in u.exponents().iter().enumerate() {
        for _ in 0..e {
            indices.push(i + 1);
        }
    }
    if indices.is_empty() {
        return Ok(Monomial::one(target_n));
    }
    let required = indices.last().unwrap() + indices.len() - 1;
    if required > target_n {
        return Err(IdealError::AmbientTooSmall {
            required,
            n: target_n,
        });
    }
    let mut exps = vec![0u32; target_n];
    for (t, &i) in indices.iter().enumerate() {
        exps[i + t - 1] += 1;
    }
    Ok(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::StabilityCriterion;
    use alloc::format;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| mono(e)).collect()).unwrap()
    }

    #[test]
    fn monomial_basics() {
        let u = mono(&[1, 2, 0]);
        assert_eq!(u.degree(), 3);
        assert_eq!(u.max_index(), Ok(2));
        assert!(!u.is_squarefree());
        assert_eq!(u.support(), Face::from_vertices(&[1, 2]));
        assert_eq!(Monomial::one(3).max_index(), Err(IdealError::UnitMonomial));
        assert!(Monomial::one(3).is_unit());
        assert_eq!(Monomial::variable(3, 2), mono(&[0, 1, 0]));
        assert_eq!(
            Monomial::from_support(4, Face::from_vertices(&[2, 4])),
            mono(&[0, 1, 0, 1])
        );
        assert!(mono(&[1, 0, 0]).divides(&u));
        assert!(!mono(&[0, 0, 1]).divides(&u));
        assert_eq!(mono(&[1, 0, 2]).lcm(&u), mono(&[1, 2, 2]));
        assert_eq!(u.div(&mono(&[1, 1, 0])), Some(mono(&[0, 1, 0])));
        assert_eq!(u.div(&mono(&[0, 0, 1])), None);
        assert_eq!(u.mul_var(3), mono(&[1, 2, 1]));
        assert_eq!(format!("{}", u), "x1*x2^2");
        assert_eq!(format!("{}", Monomial::one(2)), "1");
    }

    #[test]
    fn revlex_matches_classic_listing() {
        // degree 2 in three variables, revlex-largest first
        let expected = [
            mono(&[2, 0, 0]),
            mono(&[1, 1, 0]),
            mono(&[0, 2, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[0, 0, 2]),
        ];
        assert_eq!(monomials_of_degree(3, 2), expected);
        for w in expected.windows(2) {
            assert_eq!(revlex_cmp(&w[0], &w[1]), Ok(Ordering::Greater));
        }
        assert_eq!(
            revlex_cmp(&mono(&[1, 0]), &mono(&[2, 0])),
            Err(IdealError::DegreeMismatch { left: 1, right: 2 })
        );
        // squarefree part agrees with the face order
        let sqfree: Vec<Monomial> = monomials_of_degree(4, 2)
            .into_iter()
            .filter(|m| m.is_squarefree())
            .collect();
        let faces: Vec<Monomial> = [
            Face::from_vertices(&[1, 2]),
            Face::from_vertices(&[1, 3]),
            Face::from_vertices(&[2, 3]),
            Face::from_vertices(&[1, 4]),
            Face::from_vertices(&[2, 4]),
            Face::from_vertices(&[3, 4]),
        ]
        .iter()
        .map(|&f| Monomial::from_support(4, f))
        .collect();
        assert_eq!(sqfree, faces);
    }

    #[test]
    fn generator_normalization() {
        let i = ideal(3, &[&[2, 1, 0], &[1, 0, 0], &[1, 1, 0], &[0, 0, 2]]);
        assert_eq!(i.gens(), &[mono(&[1, 0, 0]), mono(&[0, 0, 2])]);
        assert_eq!(i.min_degree(), Some(1));
        assert_eq!(i.max_degree(), Some(2));
        assert_eq!(
            MonomialIdeal::new(2, vec![Monomial::one(2)]).unwrap_err(),
            IdealError::UnitGenerator
        );
        assert!(MonomialIdeal::zero(3).is_zero());
        assert_eq!(MonomialIdeal::zero(3).min_degree(), None);
    }

    #[test]
    fn membership() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 0, 2]]);
        assert!(i.contains(&mono(&[2, 1, 0])));
        assert!(i.contains(&mono(&[0, 1, 3])));
        assert!(!i.contains(&mono(&[1, 0, 1])));
        assert!(!i.contains(&Monomial::one(3)));
        assert!(!MonomialIdeal::zero(3).contains(&mono(&[1, 1, 1])));
    }

    #[test]
    fn classify_squarefree_stable_example() {
        // the nonface ideal of the complex with facets {2} and {1,3,4}
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let r = i.classify();
        assert!(!r.stable); // x1*x1 would be needed
        assert!(!r.strongly_stable);
        assert!(r.squarefree);
        assert!(r.squarefree_stable);
        // swapping 2 down to 1 in x2*x3 gives x1*x3, which is missing
        assert!(!r.squarefree_strongly_stable);
    }

    #[test]
    fn classify_strongly_stable_example() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let r = i.classify();
        assert!(r.stable);
        assert!(r.strongly_stable);
        assert!(!r.squarefree);
        assert!(!r.squarefree_stable);
        assert!(!r.squarefree_strongly_stable);
        assert!(i.is_p_borel(0));
        assert!(i.is_p_borel(2));
        assert!(i.is_p_borel(3));
    }

    #[test]
    fn p_borel_without_strong_stability() {
        // (x1^2, x2^2) absorbs the two-step swap but not the single swap,
        // so it is 2-Borel yet not strongly stable
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!i.classify().strongly_stable);
        assert!(!i.is_p_borel(0));
        assert!(i.is_p_borel(2));
        assert!(!i.is_p_borel(3));
    }

    #[test]
    fn stable_but_not_strongly_stable() {
        // every swap of the largest variable lands in the ideal, but
        // x2*x3 -> x1*x3 does not
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]);
        let r = i.classify();
        assert!(r.stable);
        assert!(!r.strongly_stable);
    }

    #[test]
    fn component_ideals() {
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.component_ideal(1), ideal(2, &[&[1, 0]]));
        assert_eq!(i.component_ideal(2), ideal(2, &[&[2, 0], &[1, 1]]));
        assert!(i.component_ideal(0).is_zero());
        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            j.component_ideal(3),
            ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
        );
        assert!(MonomialIdeal::zero(2).component_ideal(2).is_zero());
    }

    #[test]
    fn maximal_ideal_product_example() {
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.maximal_ideal_product(), ideal(2, &[&[2, 0], &[1, 1]]));
        let j = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            j.maximal_ideal_product(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert!(MonomialIdeal::zero(2).maximal_ideal_product().is_zero());
    }

    #[test]
    fn sigma_stretches_monomials() {
        // x1*x2^2 -> x1*x3*x4
        assert_eq!(
            sigma_monomial(&mono(&[1, 2]), 4),
            Ok(mono(&[1, 0, 1, 1]))
        );
        assert_eq!(
            sigma_monomial(&mono(&[1, 2]), 3),
            Err(IdealError::AmbientTooSmall { required: 4, n: 3 })
        );
        // squarefree monomials only spread out
        assert_eq!(
            sigma_monomial(&mono(&[1, 1, 0]), 3),
            Ok(mono(&[1, 0, 1]))
        );
        assert_eq!(sigma_monomial(&mono(&[0, 1]), 2), Ok(mono(&[0, 1])));
        assert_eq!(sigma_monomial(&Monomial::one(2), 2), Ok(Monomial::one(2)));
        assert_eq!(sigma_monomial(&mono(&[3]), 3), Ok(mono(&[1, 1, 1])));
    }

    #[test]
    fn sigma_ideal_example() {
        // (x1^2, x1*x2, x1*x3) -> (x1*x2, x1*x3, x1*x4)
        let i = ideal(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0]]);
        let s = i.sigma(4).unwrap();
        assert_eq!(
            s,
            ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]])
        );
        assert_eq!(
            ideal(2, &[&[0, 2]]).sigma(2).unwrap_err(),
            IdealError::AmbientTooSmall { required: 3, n: 2 }
        );
    }

    #[test]
    fn complex_round_trip() {
        let c = Complex::from_min_nonfaces(
            4,
            &[
                Face::from_vertices(&[1, 2]),
                Face::from_vertices(&[2, 3]),
                Face::from_vertices(&[2, 4]),
            ],
        )
        .unwrap();
        let i = MonomialIdeal::stanley_reisner(&c);
        assert_eq!(
            i.gens(),
            &[
                mono(&[1, 1, 0, 0]),
                mono(&[0, 1, 1, 0]),
                mono(&[0, 1, 0, 1])
            ]
        );
        assert_eq!(i.complex_of().unwrap(), c);
        // the ideal-level squarefree-stable test matches the complex-level one
        assert_eq!(
            i.classify().squarefree_stable,
            c.is_stable(StabilityCriterion::Ideal)
        );
        // full simplex <-> zero ideal
        let full = Complex::full_simplex(3).unwrap();
        let z = MonomialIdeal::stanley_reisner(&full);
        assert!(z.is_zero());
        assert_eq!(z.complex_of().unwrap(), full);
    }

    #[test]
    fn complex_of_rejections() {
        let sq = ideal(2, &[&[2, 0]]);
        assert_eq!(sq.complex_of().unwrap_err(), IdealError::NotSquarefree);
        let excl = ideal(2, &[&[1, 0]]);
        assert_eq!(excl.complex_of().unwrap_err(), IdealError::VertexExcluded(1));
    }
}
