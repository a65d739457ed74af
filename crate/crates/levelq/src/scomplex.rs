//! Simplicial complexes, f/h-vectors and constructive operations.
//!
//! Complexes are stored by their facet list; faces are bitmasks over the
//! vertex set {1, ..., n} (so n is capped at 128). The canonical form
//! sorts facets by their vertex lists lexicographically, which is also
//! the order the JSON writer emits.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::macaulay;
use crate::seq::{IntSeq, SeqRole};
use crate::{Error, Result};

const MAX_VERTICES: usize = 128;

/// Converts a 1-based vertex set to a bitmask.
pub(crate) fn verts_to_mask(verts: &[usize]) -> u128 {
    verts.iter().fold(0u128, |m, &v| m | (1u128 << (v - 1)))
}

/// Converts a bitmask back to an ascending 1-based vertex list.
pub(crate) fn mask_to_verts(mask: u128) -> Vec<usize> {
    (0..128)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// An abstract simplicial complex on vertices {1, ..., n}, given by its
/// facets. Invariants: no facet contains another, every vertex lies in
/// some facet, facets sorted lexicographically by vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u128>,
}

/// Wire format: `{"vertices": n, "facets": [[i, j, ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> ComplexJson {
        ComplexJson {
            vertices: c.n,
            facets: c.facets_vertices(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<SimplicialComplex> {
        SimplicialComplex::validate(j.vertices, &j.facets)
    }
}

impl SimplicialComplex {
    /// Validates and canonicalizes a facet list: deduplicates, removes
    /// dominated faces, and checks vertex coverage.
    pub fn validate(n: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        if facets.is_empty() {
            return Err(Error::validation("empty facet list"));
        }
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::validation(format!(
                "vertex count {n} out of range 1..={MAX_VERTICES}"
            )));
        }
        let mut masks: Vec<u128> = Vec::new();
        for f in facets {
            if f.is_empty() {
                return Err(Error::validation("empty facet"));
            }
            let mut sorted = f.clone();
            sorted.sort_unstable();
            sorted.dedup();
            for &v in &sorted {
                if v == 0 || v > n {
                    return Err(Error::validation(format!(
                        "vertex label {v} out of range 1..={n}"
                    )));
                }
            }
            masks.push(verts_to_mask(&sorted));
        }
        masks.sort_unstable();
        masks.dedup();
        // Drop dominated faces.
        let maximal: Vec<u128> = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && f & g == f))
            .collect();
        let covered = maximal.iter().fold(0u128, |m, &f| m | f);
        for v in 1..=n {
            if covered >> (v - 1) & 1 == 0 {
                return Err(Error::validation(format!("vertex {v} lies in no facet")));
            }
        }
        Ok(SimplicialComplex::from_masks(n, maximal))
    }

    /// Internal constructor from facet masks already known to be mutually
    /// incomparable; canonicalizes the order.
    pub(crate) fn from_masks(n: usize, mut facets: Vec<u128>) -> SimplicialComplex {
        facets.sort_by_key(|&m| mask_to_verts(m));
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facet_masks(&self) -> &[u128] {
        &self.facets
    }

    pub fn facets_vertices(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_to_verts(m)).collect()
    }

    /// Dimension of the complex: max facet size minus one.
    pub fn dim(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap()
            - 1
    }

    /// d = dim + 1: the size of the largest faces.
    pub fn d(&self) -> usize {
        self.dim() + 1
    }

    /// All faces as masks, including the empty face.
    pub fn all_faces(&self) -> HashSet<u128> {
        let mut out = HashSet::new();
        for &f in &self.facets {
            let verts = mask_to_verts(f);
            let k = verts.len();
            for sub in 0u32..(1 << k) {
                let mut m = 0u128;
                for (i, &v) in verts.iter().enumerate() {
                    if sub >> i & 1 == 1 {
                        m |= 1u128 << (v - 1);
                    }
                }
                out.insert(m);
            }
        }
        out
    }

    /// Faces of the given size, in lexicographic vertex order.
    pub fn faces_of_size(&self, size: usize) -> Vec<u128> {
        let mut v: Vec<u128> = self
            .all_faces()
            .into_iter()
            .filter(|f| f.count_ones() as usize == size)
            .collect();
        v.sort_by_key(|&m| mask_to_verts(m));
        v
    }

    /// True when the mask is a face of the complex.
    pub fn is_face(&self, mask: u128) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    /// The f-vector (entry 0 is f_{-1} = 1) and h-vector (length d+1).
    pub fn f_and_h(&self) -> (IntSeq, IntSeq) {
        let d = self.d();
        let mut f = vec![0i64; d + 1];
        f[0] = 1;
        for face in self.all_faces() {
            let k = face.count_ones() as usize;
            if k > 0 {
                f[k] += 1;
            }
        }
        let mut h = vec![0i64; d + 1];
        for (j, hj) in h.iter_mut().enumerate() {
            let mut acc = 0i64;
            for i in 0..=j {
                let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                acc += sign * binom_i64(d - i, j - i) * f[i];
            }
            *hj = acc;
        }
        (IntSeq::new(SeqRole::F, f), IntSeq::new(SeqRole::H, h))
    }

    /// Link of a face, relabeled to consecutive vertices. Returns `None`
    /// when the link is {∅} (the face is a facet).
    pub fn link(&self, sigma: u128) -> Option<SimplicialComplex> {
        let mut lf: Vec<u128> = self
            .facets
            .iter()
            .filter(|&&f| sigma & f == sigma)
            .map(|&f| f & !sigma)
            .collect();
        lf.retain(|&m| m != 0);
        if lf.is_empty() {
            return None;
        }
        let mut verts: Vec<usize> = Vec::new();
        let union = lf.iter().fold(0u128, |m, &f| m | f);
        for b in 0..128 {
            if union >> b & 1 == 1 {
                verts.push(b);
            }
        }
        let relabeled: Vec<u128> = lf
            .iter()
            .map(|&f| {
                let mut m = 0u128;
                for (new, &old) in verts.iter().enumerate() {
                    if f >> old & 1 == 1 {
                        m |= 1u128 << new;
                    }
                }
                m
            })
            .collect();
        Some(SimplicialComplex::from_masks(verts.len(), relabeled))
    }

    /// Vertex deletion: all faces avoiding v, relabeled to 1..n-1.
    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex> {
        if self.n < 2 {
            return Err(Error::validation("deletion would empty the complex"));
        }
        let vbit = 1u128 << (v - 1);
        let mut candidates: Vec<u128> = self
            .facets
            .iter()
            .map(|&f| f & !vbit)
            .filter(|&m| m != 0)
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        let maximal: Vec<u128> = candidates
            .iter()
            .copied()
            .filter(|&f| !candidates.iter().any(|&g| g != f && f & g == f))
            .collect();
        // Relabel, closing the gap at v.
        let relabeled: Vec<u128> = maximal
            .iter()
            .map(|&f| {
                let low = f & (vbit - 1);
                let high = f >> v;
                low | (high << (v - 1))
            })
            .collect();
        Ok(SimplicialComplex::from_masks(self.n - 1, relabeled))
    }

    /// Cohen–Macaulayness over GF(p) by Reisner's criterion: every link
    /// (including the link of the empty face, the complex itself) has
    /// vanishing reduced homology below its top dimension.
    pub fn is_cm(&self, p: u64) -> Result<bool> {
        let faces = self.all_faces();
        for &sigma in &faces {
            let Some(link) = self.link(sigma) else {
                continue;
            };
            let betti = crate::homology::betti(&link, p)?;
            let top = link.dim();
            for i in 0..top {
                if betti.get(i) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Doubly Cohen–Macaulay: CM, and every vertex deletion is CM of the
    /// same dimension.
    pub fn is_doubly_cm(&self, p: u64) -> Result<bool> {
        if !self.is_cm(p)? {
            return Ok(false);
        }
        if self.n < 2 {
            return Ok(false);
        }
        let dim = self.dim();
        for v in 1..=self.n {
            let del = self.deletion(v)?;
            if del.dim() != dim || !del.is_cm(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn binom_i64(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) as i64 / (j + 1) as i64;
    }
    acc
}

// ---------------------------------------------------------------------------
// Generators.
// ---------------------------------------------------------------------------

/// The named polytope-boundary and discrete generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices.
    SimplexBoundary(usize),
    /// Boundary of the m-dimensional cross-polytope: h_i = C(m, i).
    CrossPolytopeBoundary(usize),
    /// Boundary of the cyclic polytope C(m, n) via Gale evenness.
    CyclicPolytopeBoundary(usize, usize),
    /// m isolated vertices.
    Discrete(usize),
    /// The 4-cycle 1-2-3-4.
    SquareBoundary,
}

pub fn generate(kind: &Generator) -> Result<SimplicialComplex> {
    match *kind {
        Generator::SimplexBoundary(d) => simplex_boundary(d),
        Generator::CrossPolytopeBoundary(m) => cross_polytope_boundary(m),
        Generator::CyclicPolytopeBoundary(m, n) => cyclic_polytope_boundary(m, n),
        Generator::Discrete(m) => discrete(m),
        Generator::SquareBoundary => square_boundary(),
    }
}

/// Parses generator names like `simplex-boundary:2`, `cross-polytope:3`,
/// `cyclic:4,8`, `discrete:3`, `square-boundary`.
pub fn parse_generator(name: &str) -> Result<Generator> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let nums = |a: Option<&str>| -> Result<Vec<usize>> {
        a.unwrap_or("")
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::validation(format!("bad generator argument {s:?}")))
            })
            .collect()
    };
    match head {
        "simplex-boundary" => {
            let v = nums(args)?;
            if v.len() != 1 {
                return Err(Error::validation("simplex-boundary takes one argument"));
            }
            Ok(Generator::SimplexBoundary(v[0]))
        }
        "cross-polytope" | "cross-polytope-boundary" => {
            let v = nums(args)?;
            if v.len() != 1 {
                return Err(Error::validation("cross-polytope takes one argument"));
            }
            Ok(Generator::CrossPolytopeBoundary(v[0]))
        }
        "cyclic" | "cyclic-polytope-boundary" => {
            let v = nums(args)?;
            if v.len() != 2 {
                return Err(Error::validation("cyclic takes two arguments m,n"));
            }
            Ok(Generator::CyclicPolytopeBoundary(v[0], v[1]))
        }
        "discrete" => {
            let v = nums(args)?;
            if v.len() != 1 {
                return Err(Error::validation("discrete takes one argument"));
            }
            Ok(Generator::Discrete(v[0]))
        }
        "square-boundary" | "square" => Ok(Generator::SquareBoundary),
        other => Err(Error::validation(format!("unknown generator {other:?}"))),
    }
}

pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 || d + 1 > MAX_VERTICES {
        return Err(Error::validation(format!(
            "simplex-boundary dimension {d} out of range"
        )));
    }
    let all: Vec<usize> = (1..=d + 1).collect();
    let facets: Vec<Vec<usize>> = (1..=d + 1)
        .map(|skip| all.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::validate(d + 1, &facets)
}

pub fn cross_polytope_boundary(m: usize) -> Result<SimplicialComplex> {
    if m == 0 || 2 * m > MAX_VERTICES {
        return Err(Error::validation(format!(
            "cross-polytope dimension {m} out of range"
        )));
    }
    // Antipodal pairs (2i-1, 2i); facets pick one vertex per pair.
    let mut facets = Vec::with_capacity(1 << m);
    for choice in 0u32..(1 << m) {
        let facet: Vec<usize> = (0..m)
            .map(|i| 2 * i + 1 + ((choice >> i) & 1) as usize)
            .collect();
        facets.push(facet);
    }
    SimplicialComplex::validate(2 * m, &facets)
}

pub fn cyclic_polytope_boundary(m: usize, n: usize) -> Result<SimplicialComplex> {
    if m < 2 || n > MAX_VERTICES {
        return Err(Error::validation(format!(
            "cyclic polytope dimension {m} out of range"
        )));
    }
    if n < m + 1 {
        return Err(Error::validation(format!(
            "cyclic polytope needs at least {} vertices, got {n}",
            m + 1
        )));
    }
    // Gale evenness: an m-subset S is a facet iff for every pair u < v
    // outside S, the count of elements of S strictly between them is even.
    let mut facets = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    gale_scan(1, n, m, &mut subset, &mut facets);
    SimplicialComplex::validate(n, &facets)
}

fn gale_scan(
    start: usize,
    n: usize,
    need: usize,
    subset: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if need == 0 {
        if gale_even(subset, n) {
            out.push(subset.clone());
        }
        return;
    }
    for v in start..=n + 1 - need {
        subset.push(v);
        gale_scan(v + 1, n, need - 1, subset, out);
        subset.pop();
    }
}

fn gale_even(subset: &[usize], n: usize) -> bool {
    let inside: HashSet<usize> = subset.iter().copied().collect();
    let outside: Vec<usize> = (1..=n).filter(|v| !inside.contains(v)).collect();
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            let between = subset.iter().filter(|&&s| u < s && s < v).count();
            if between % 2 == 1 {
                return false;
            }
        }
    }
    true
}

pub fn discrete(m: usize) -> Result<SimplicialComplex> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::validation(format!(
            "discrete vertex count {m} out of range"
        )));
    }
    let facets: Vec<Vec<usize>> = (1..=m).map(|v| vec![v]).collect();
    SimplicialComplex::validate(m, &facets)
}

pub fn square_boundary() -> Result<SimplicialComplex> {
    SimplicialComplex::validate(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
}

// ---------------------------------------------------------------------------
// Constructive operations.
// ---------------------------------------------------------------------------

/// Join of two complexes: B's vertices are relabeled above A's; facets
/// are unions of facet pairs. The h-polynomial multiplies.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let shift = a.n();
    let facets: Vec<u128> = a
        .facet_masks()
        .iter()
        .flat_map(|&fa| b.facet_masks().iter().map(move |&fb| fa | (fb << shift)))
        .collect();
    SimplicialComplex::from_masks(a.n() + b.n(), facets)
}

/// Attaches `copies` cones over the boundary of the facet F, each with a
/// fresh apex vertex: copy k adds the facets (F \ {v}) ∪ {apex_k}. Each
/// copy changes the h-vector by (0, 1, ..., 1).
pub fn stacked_attach(
    complex: &SimplicialComplex,
    facet: &[usize],
    copies: usize,
) -> Result<SimplicialComplex> {
    let d = complex.d();
    let fmask = verts_to_mask(facet);
    if facet.len() != d || !complex.facet_masks().contains(&fmask) {
        return Err(Error::validation(format!(
            "{facet:?} is not a size-{d} facet of the complex"
        )));
    }
    if complex.n() + copies > MAX_VERTICES {
        return Err(Error::validation(
            "stacked attachment exceeds the vertex cap",
        ));
    }
    let mut facets = complex.facet_masks().to_vec();
    for k in 0..copies {
        let apex = 1u128 << (complex.n() + k);
        for &v in facet {
            let m = (fmask & !(1u128 << (v - 1))) | apex;
            facets.push(m);
        }
    }
    Ok(SimplicialComplex::from_masks(complex.n() + copies, facets))
}

/// Chari's h-vector arithmetic for a convex ear decomposition:
/// `h(Δ; t) = h(Σ_1; t) + Σ_q t^d h(B_q; t^{-1})`.
pub fn chari_h(h_sigma1: &[i64], ear_ball_hs: &[Vec<i64>], d: usize) -> Result<IntSeq> {
    let mut out = vec![0i64; d + 1];
    for (j, o) in out.iter_mut().enumerate() {
        *o = h_sigma1.get(j).copied().unwrap_or(0);
    }
    for ball in ear_ball_hs {
        if ball.len() > d + 1 {
            return Err(Error::validation("ear h-vector longer than d+1"));
        }
        for (i, &c) in ball.iter().enumerate() {
            // t^d h(B; 1/t) contributes c at degree d - i.
            out[d - i] += c;
        }
    }
    if let Some(neg) = out.iter().position(|&c| c < 0) {
        return Err(Error::inconsistency(format!(
            "ear arithmetic produced a negative coefficient at degree {neg}"
        )));
    }
    Ok(IntSeq::new(SeqRole::H, out))
}

/// Builds a complex whose complementary vector is the given sum of
/// M-vectors a, over a caller-supplied polytope boundary Q with
/// ḡ(Q) = (1, a_1, ...): glue Q to three points (two spheres Q * S⁰
/// sharing the ball Q * {x}), then attach a_0 - 1 stacked cones to the
/// first facet. The all-zero vector yields the simplex boundary.
pub fn construct_from_sum_of_m(
    a: &[i64],
    q_complex: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    let d = q_complex.dim() + 2;
    let want_len = (d - 1) / 2 + 1;
    if a.len() != want_len {
        return Err(Error::validation(format!(
            "target vector length {} does not match the complex dimension (want {want_len})",
            a.len()
        )));
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::validation("target vector has negative entries"));
    }
    if !macaulay::is_sum_of_m_vectors(a) {
        return Err(Error::validation(format!(
            "{a:?} is not a sum of M-vectors"
        )));
    }
    if a.iter().all(|&x| x == 0) {
        return simplex_boundary(d);
    }
    let delta_prime = join(q_complex, &discrete(3)?);
    let first_facet = mask_to_verts(delta_prime.facet_masks()[0]);
    stacked_attach(&delta_prime, &first_facet, a[0] as usize - 1)
}

#[cfg(test)]
mod tests {
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    use crate::samples::{k23, square_with_diagonal};
    use crate::seq::poly_mul;

    #[test]
    fn validate_canonicalizes() {
        let c = SimplicialComplex::validate(4, &[vec![1, 2], vec![1, 2, 3], vec![4]]).unwrap();
        assert_eq!(c.facets_vertices(), vec![vec![1, 2, 3], vec![4]]);
        assert!(SimplicialComplex::validate(3, &[]).is_err());
        assert!(SimplicialComplex::validate(3, &[vec![1, 5]]).is_err());
        // Vertex 3 uncovered.
        assert!(SimplicialComplex::validate(3, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn k23_h_vector() {
        let (f, h) = k23().f_and_h();
        assert_eq!(f.entries(), &[1, 5, 6]);
        assert_eq!(h.entries(), &[1, 3, 2]);
    }

    #[test]
    fn theta_h_vector() {
        let (_, h) = square_with_diagonal().f_and_h();
        assert_eq!(h.entries(), &[1, 2, 2]);
    }

    #[test]
    fn simplex_boundary_h() {
        let (_, h) = simplex_boundary(3).unwrap().f_and_h();
        assert_eq!(h.entries(), &[1, 1, 1, 1]);
        let (_, h) = simplex_boundary(2).unwrap().f_and_h();
        assert_eq!(h.entries(), &[1, 1, 1]);
    }

    #[test]
    fn cross_polytope_h_is_binomial() {
        for m in 1..=4 {
            let (_, h) = cross_polytope_boundary(m).unwrap().f_and_h();
            let expect: Vec<i64> = (0..=m).map(|i| binom_i64(m, i)).collect();
            assert_eq!(h.entries(), &expect[..], "m={m}");
        }
    }

    #[test]
    fn discrete_and_square() {
        let c = discrete(3).unwrap();
        assert_eq!(c.dim(), 0);
        assert_eq!(c.facets_vertices().len(), 3);
        let (_, h) = square_boundary().unwrap().f_and_h();
        assert_eq!(h.entries(), &[1, 2, 1]);
    }

    #[test]
    fn cyclic_polytope_boundaries() {
        // n = m+1 degenerates to the simplex boundary.
        let c = cyclic_polytope_boundary(3, 4).unwrap();
        assert_eq!(c, simplex_boundary(3).unwrap());
        // Symmetric h (Dehn–Sommerville) on a few cases.
        for (m, n) in [(2, 6), (3, 6), (4, 7), (4, 8)] {
            let c = cyclic_polytope_boundary(m, n).unwrap();
            assert_eq!(c.d(), m, "cyclic({m},{n}) dimension");
            let (_, h) = c.f_and_h();
            let e = h.entries();
            for i in 0..=m {
                assert_eq!(e[i], e[m - i], "cyclic({m},{n}) h not symmetric: {e:?}");
            }
            // Neighborliness fixes the first half of h in closed form.
            for i in 0..=m / 2 {
                assert_eq!(e[i], binom_i64(n - m + i - 1, i), "cyclic({m},{n}) h_{i}");
            }
            // Every cyclic boundary is a sphere.
            let betti = crate::homology::betti(&c, 2).unwrap();
            for i in 0..m - 1 {
                assert_eq!(betti.get(i), 0, "cyclic({m},{n}) beta_{i}");
            }
            assert_eq!(betti.get(m - 1), 1, "cyclic({m},{n}) top homology");
            assert!(cyclic_polytope_boundary(m, m).is_err());
        }
    }

    #[test]
    fn join_multiplies_h() {
        let q = square_boundary().unwrap();
        let j = join(&q, &discrete(3).unwrap());
        assert_eq!(j.n(), 7);
        let (_, h) = j.f_and_h();
        assert_eq!(h.entries(), &[1, 4, 5, 2]);

        // Cone preserves h.
        let cone = join(&k23(), &discrete(1).unwrap());
        let (_, hc) = cone.f_and_h();
        assert_eq!(hc.entries(), &[1, 3, 2, 0]);

        // Suspension of the hollow triangle.
        let s = join(&simplex_boundary(2).unwrap(), &discrete(2).unwrap());
        let (_, hs) = s.f_and_h();
        assert_eq!(hs.entries(), &poly_mul(&[1, 1, 1], &[1, 1])[..]);
    }

    #[test]
    fn join_h_multiplicativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let pool: Vec<SimplicialComplex> = vec![
            k23(),
            square_boundary().unwrap(),
            simplex_boundary(2).unwrap(),
            discrete(2).unwrap(),
            discrete(3).unwrap(),
            square_with_diagonal(),
        ];
        for _ in 0..20 {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &pool[rng.gen_range(0..pool.len())];
            let (_, ha) = a.f_and_h();
            let (_, hb) = b.f_and_h();
            let (_, hj) = join(a, b).f_and_h();
            assert_eq!(hj.entries(), &poly_mul(ha.entries(), hb.entries())[..]);
        }
    }

    #[test]
    fn stacked_attach_shifts_h() {
        let dp = join(&square_boundary().unwrap(), &discrete(3).unwrap());
        let facet = mask_to_verts(dp.facet_masks()[0]);
        let same = stacked_attach(&dp, &facet, 0).unwrap();
        assert_eq!(same, dp);
        let two = stacked_attach(&dp, &facet, 2).unwrap();
        assert_eq!(two.n(), dp.n() + 2);
        let (_, h) = two.f_and_h();
        assert_eq!(h.entries(), &[1, 6, 7, 4]);
        // Non-facet rejected.
        assert!(stacked_attach(&dp, &[1, 2], 1).is_err());
        // A hollow triangle's edges are legal attachment sites; a
        // single vertex is too small.
        let tri = simplex_boundary(2).unwrap();
        let attached = stacked_attach(&tri, &[1, 2], 1).unwrap();
        let (_, ha) = attached.f_and_h();
        assert_eq!(ha.entries(), &[1, 2, 2]);
        assert!(stacked_attach(&tri, &[1], 1).is_err());
    }

    #[test]
    fn chari_examples() {
        let hq = vec![1i64, 10, 13, 17, 13, 10, 1];
        let sigma1 = poly_mul(&hq, &[1, 1]);
        let h = chari_h(&sigma1, &[hq.clone()], 7).unwrap();
        assert_eq!(h.entries(), &[1, 12, 33, 43, 47, 36, 21, 2]);

        let unchanged = chari_h(&[1, 2, 1], &[], 2).unwrap();
        assert_eq!(unchanged.entries(), &[1, 2, 1]);

        // Gluing a triangle onto a square boundary: one ear with h = (1).
        let h = chari_h(&[1, 2, 1], &[vec![1]], 2).unwrap();
        assert_eq!(h.entries(), &[1, 2, 2]);
        let (_, direct) = square_with_diagonal().f_and_h();
        assert_eq!(h.entries(), direct.entries());
    }

    #[test]
    fn chari_flags_negative() {
        assert!(chari_h(&[1, 0, 0], &[vec![-2]], 2).is_err());
    }

    #[test]
    fn construct_examples() {
        let q = square_boundary().unwrap();
        let c = construct_from_sum_of_m(&[1, 1], &q).unwrap();
        assert_eq!(c.n(), 7);
        let (_, h) = c.f_and_h();
        assert_eq!(h.entries(), &[1, 4, 5, 2]);

        let c = construct_from_sum_of_m(&[3, 1], &q).unwrap();
        assert_eq!(c.n(), 9);
        let (_, h) = c.f_and_h();
        assert_eq!(h.entries(), &[1, 6, 7, 4]);

        let zero = construct_from_sum_of_m(&[0, 0], &q).unwrap();
        assert_eq!(zero, simplex_boundary(3).unwrap());

        // (0, 1) has an internal zero: not a sum of M-vectors.
        assert!(construct_from_sum_of_m(&[0, 1], &q).is_err());
    }

    #[test]
    fn construct_matches_chari_arithmetic() {
        // The built complex's h-vector must agree with the ear
        // decomposition arithmetic: Σ_1 = Q * S⁰, one ear Q * {x''},
        // then a_0 - 1 cone ears, each with h = (1, ..., 1) of length d.
        let q = square_boundary().unwrap();
        let (_, hq) = q.f_and_h();
        let d = q.dim() + 2;
        for a0 in 1..4i64 {
            let built = construct_from_sum_of_m(&[a0, 1], &q).unwrap();
            let (_, h_built) = built.f_and_h();
            let sigma1 = poly_mul(hq.entries(), &[1, 1]);
            let mut ears = vec![hq.entries().to_vec()];
            for _ in 0..a0 - 1 {
                ears.push(vec![1; d]);
            }
            let h_chari = chari_h(&sigma1, &ears, d).unwrap();
            assert_eq!(h_built.entries(), h_chari.entries(), "a0={a0}");
        }
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let c = k23();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"vertices":5,"facets":[[1,2],[1,4],[2,3],[2,5],[3,4],[4,5]]}"#
        );
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn cohen_macaulay_checks() {
        assert!(k23().is_doubly_cm(2).unwrap());
        assert!(cross_polytope_boundary(3).unwrap().is_doubly_cm(2).unwrap());
        assert!(square_with_diagonal().is_doubly_cm(2).unwrap());
        // Two disjoint hollow triangles: disconnected, so not CM.
        let two = SimplicialComplex::validate(
            6,
            &[
                vec![1, 2],
                vec![2, 3],
                vec![1, 3],
                vec![4, 5],
                vec![5, 6],
                vec![4, 6],
            ],
        )
        .unwrap();
        assert!(!two.is_cm(2).unwrap());
        // A cone is CM but not doubly CM: deleting the apex of a solid
        // triangle's cone point drops the dimension.
        let path = SimplicialComplex::validate(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(path.is_cm(2).unwrap());
        assert!(!path.is_doubly_cm(2).unwrap());
    }

    #[test]
    fn links_and_deletions() {
        let oct = cross_polytope_boundary(3).unwrap();
        // Link of a vertex in the octahedron is a square.
        let link = oct.link(1).unwrap();
        assert_eq!(link.dim(), 1);
        let (_, h) = link.f_and_h();
        assert_eq!(h.entries(), &[1, 2, 1]);
        // Link of a facet is {∅}.
        assert!(oct.link(oct.facet_masks()[0]).is_none());

        let del = k23().deletion(5).unwrap();
        assert_eq!(del.n(), 4);
        assert_eq!(del.dim(), 1);
    }
}
