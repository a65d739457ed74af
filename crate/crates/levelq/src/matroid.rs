//! Matroids given by their bases: exchange-axiom validation,
//! independence complexes, coloop detection, and exhaustive h-vector
//! search.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::scomplex::SimplicialComplex;
use crate::seq::IntSeq;
use crate::{Error, Result};

/// A matroid on ground set {1, ..., n} given by its bases (r-subsets).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatroidJson", into = "MatroidJson")]
pub struct Matroid {
    n: usize,
    r: usize,
    /// Bitmasks, sorted ascending by vertex list.
    bases: Vec<u64>,
}

/// Wire format: `{"n": 6, "r": 4, "bases": [[1,2,3,4], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub r: usize,
    pub bases: Vec<Vec<usize>>,
}

impl From<Matroid> for MatroidJson {
    fn from(m: Matroid) -> MatroidJson {
        MatroidJson {
            n: m.n,
            r: m.r,
            bases: m.bases_vertices(),
        }
    }
}

impl TryFrom<MatroidJson> for Matroid {
    type Error = Error;

    fn try_from(j: MatroidJson) -> Result<Matroid> {
        let bases: Vec<u64> = j
            .bases
            .iter()
            .map(|b| {
                if b.iter().any(|&v| v == 0 || v > j.n) {
                    return Err(Error::validation(format!("element out of range in {b:?}")));
                }
                Ok(b.iter().fold(0u64, |m, &v| m | 1 << (v - 1)))
            })
            .collect::<Result<_>>()?;
        Matroid::new(j.n, j.r, bases)
    }
}

fn mask_verts(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Exhaustive check of the basis-exchange axiom: for all bases B1, B2
/// and e in B1 \ B2 there is f in B2 \ B1 with B1 - e + f a basis.
pub fn is_basis_family(n: usize, r: usize, bases: &[u64]) -> bool {
    if bases.is_empty() || n > 64 {
        return false;
    }
    if bases
        .iter()
        .any(|&b| b.count_ones() as usize != r || b >> n != 0)
    {
        return false;
    }
    let mut sorted = bases.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let member = |m: u64| sorted.binary_search(&m).is_ok();
    for &b1 in &sorted {
        for &b2 in &sorted {
            let only1 = b1 & !b2;
            let only2 = b2 & !b1;
            for e in 0..n {
                if only1 >> e & 1 == 0 {
                    continue;
                }
                let stripped = b1 & !(1 << e);
                let ok = (0..n).any(|f| only2 >> f & 1 == 1 && member(stripped | 1 << f));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

impl Matroid {
    pub fn new(n: usize, r: usize, mut bases: Vec<u64>) -> Result<Matroid> {
        if n == 0 || n > 64 || r == 0 || r > n {
            return Err(Error::validation(format!(
                "bad matroid parameters n={n}, r={r}"
            )));
        }
        bases.sort_unstable();
        bases.dedup();
        if !is_basis_family(n, r, &bases) {
            return Err(Error::validation("basis family fails the exchange axiom"));
        }
        Ok(Matroid { n, r, bases })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn bases_vertices(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.bases.iter().map(|&b| mask_verts(b)).collect();
        v.sort();
        v
    }

    /// No element lies in every basis.
    pub fn is_coloop_free(&self) -> bool {
        let common = self.bases.iter().fold(u64::MAX, |acc, &b| acc & b);
        common & ((1u64 << self.n) - 1) == 0
    }

    /// The independence complex (facets = bases) and its h-vector.
    /// Requires every element to lie in some basis (no loops), so the
    /// complex really has n vertices.
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        let covered = self.bases.iter().fold(0u64, |acc, &b| acc | b);
        if covered != (1u64 << self.n) - 1 {
            return Err(Error::validation(
                "matroid has a loop (an element in no basis); drop it first",
            ));
        }
        SimplicialComplex::validate(self.n, &self.bases_vertices())
    }

    pub fn independence_h(&self) -> Result<IntSeq> {
        let (_, h) = self.independence_complex()?.f_and_h();
        Ok(h)
    }
}

/// Exhaustive search for a coloop-free matroid of rank r on n elements
/// whose independence complex has the target h-vector. Scans every
/// family of r-subsets (so C(n, r) is capped at 20), in parallel over
/// the family space; the returned witness is the lexicographically first
/// by sorted basis list, independent of scheduling.
pub fn search_h(n: usize, r: usize, target_h: &[i64]) -> Result<Option<Matroid>> {
    let slots: Vec<u64> = {
        // r-subsets in lexicographic vertex order.
        let mut out = Vec::new();
        let mut cur = Vec::new();
        subsets(1, n, r, &mut cur, &mut out);
        out
    };
    if slots.len() > 20 {
        return Err(Error::validation(format!(
            "search space C({n},{r}) = {} exceeds the 20-subset cap",
            slots.len()
        )));
    }
    let want: i64 = target_h.iter().sum();
    if want <= 0 || want > slots.len() as i64 {
        return Ok(None);
    }
    let want = want as u32;
    let full = (1u64 << n) - 1;

    let result = (1u64..(1 << slots.len()))
        .into_par_iter()
        .filter(|mask| mask.count_ones() == want)
        .filter_map(|mask| {
            let bases: Vec<u64> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            // Cheap filters first: coverage, coloop-freeness.
            let union = bases.iter().fold(0u64, |a, &b| a | b);
            if union != full {
                return None;
            }
            let common = bases.iter().fold(full, |a, &b| a & b);
            if common != 0 {
                return None;
            }
            if family_h(n, r, &bases) != target_h {
                return None;
            }
            if !is_basis_family(n, r, &bases) {
                return None;
            }
            let key: Vec<Vec<usize>> = {
                let mut k: Vec<Vec<usize>> = bases.iter().map(|&b| mask_verts(b)).collect();
                k.sort();
                k
            };
            Some((key, bases))
        })
        .min_by(|a, b| a.0.cmp(&b.0));

    match result {
        Some((_, bases)) => Ok(Some(Matroid::new(n, r, bases)?)),
        None => Ok(None),
    }
}

fn subsets(start: usize, n: usize, need: usize, cur: &mut Vec<usize>, out: &mut Vec<u64>) {
    if need == 0 {
        out.push(cur.iter().fold(0u64, |m, &v| m | 1 << (v - 1)));
        return;
    }
    for v in start..=n + 1 - need {
        cur.push(v);
        subsets(v + 1, n, need - 1, cur, out);
        cur.pop();
    }
}

/// h-vector of the family's independence complex, computed directly from
/// the subset lattice of the bases.
fn family_h(n: usize, r: usize, bases: &[u64]) -> Vec<i64> {
    let mut faces: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for &b in bases {
        let verts = mask_verts(b);
        for sub in 0u32..(1 << verts.len()) {
            let mut m = 0u64;
            for (i, &v) in verts.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    m |= 1 << (v - 1);
                }
            }
            faces.insert(m);
        }
    }
    let mut f = vec![0i64; r + 1];
    for face in faces {
        f[face.count_ones() as usize] += 1;
    }
    f[0] = 1;
    let _ = n;
    let mut h = vec![0i64; r + 1];
    for (j, hj) in h.iter_mut().enumerate() {
        let mut acc = 0i64;
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            acc += sign * binom(r - i, j - i) * f[i];
        }
        *hj = acc;
    }
    h
}

fn binom(n: usize, k: usize) -> i64 {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(r: usize, n: usize) -> Matroid {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        subsets(1, n, r, &mut cur, &mut out);
        Matroid::new(n, r, out).unwrap()
    }

    #[test]
    fn exchange_axiom_examples() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.bases().len(), 6);
        // {12, 34} fails exchange.
        assert!(!is_basis_family(4, 2, &[0b0011, 0b1100]));
        // A single basis is a matroid (free on its support).
        assert!(is_basis_family(3, 3, &[0b111]));
    }

    #[test]
    fn uniform_h_matches_closed_form() {
        for (r, n) in [(2usize, 4usize), (2, 5), (3, 5), (3, 6)] {
            let h = uniform(r, n).independence_h().unwrap();
            let expect: Vec<i64> = (0..=r).map(|i| binom(n - r + i - 1, i)).collect();
            assert_eq!(h.entries(), &expect[..], "U_{{{r},{n}}}");
        }
    }

    #[test]
    fn u24_h() {
        assert_eq!(
            uniform(2, 4).independence_h().unwrap().entries(),
            &[1, 2, 3]
        );
    }

    #[test]
    fn free_matroid_h() {
        let free = Matroid::new(3, 3, vec![0b111]).unwrap();
        assert_eq!(free.independence_h().unwrap().entries(), &[1, 0, 0, 0]);
        assert!(!free.is_coloop_free());
        assert!(uniform(2, 4).is_coloop_free());
    }

    #[test]
    fn h_sum_counts_bases() {
        for m in [uniform(2, 4), uniform(3, 6)] {
            let h = m.independence_h().unwrap();
            let total: i64 = h.entries().iter().sum();
            assert_eq!(total, m.bases().len() as i64);
        }
    }

    #[test]
    fn search_finds_uniform() {
        let found = search_h(4, 2, &[1, 2, 3]).unwrap().unwrap();
        assert_eq!(found, uniform(2, 4));
    }

    #[test]
    fn search_counting_bound() {
        assert!(search_h(3, 2, &[1, 0, 7]).unwrap().is_none());
    }

    #[test]
    fn search_scale_cap() {
        assert!(search_h(10, 5, &[1, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn search_flat_h_witness() {
        // The rank-4 matroid on 6 elements with h = (1,2,2,2,2).
        let m = search_h(6, 4, &[1, 2, 2, 2, 2])
            .unwrap()
            .expect("witness exists");
        assert_eq!(m.bases().len(), 9);
        assert!(m.is_coloop_free());
        assert_eq!(m.independence_h().unwrap().entries(), &[1, 2, 2, 2, 2]);
    }

    #[test]
    fn json_round_trip() {
        let m = uniform(2, 4);
        let s = serde_json::to_string(&m).unwrap();
        let back: Matroid = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
