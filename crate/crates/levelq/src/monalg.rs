//! Monomial algebras: Hilbert functions, socle and level tests,
//! truncations, trivial extensions, Gorenstein-quotient search, and pure
//! O-sequence scans.
//!
//! A monomial algebra is a polynomial ring modulo a monomial ideal;
//! its standard monomials (those outside the ideal) are divisor-closed,
//! so Hilbert functions are computed by a divisibility sieve degree by
//! degree, with no Gröbner machinery.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::ff::{Field, FieldElement};
use crate::macaulay::{self, monomials_asc_lex};
use crate::seq::{IntSeq, SeqRole};
use crate::{Error, Result};

/// A quotient of a polynomial ring by a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialAlgebra {
    nvars: usize,
    gens: Vec<Vec<u32>>,
}

/// Wire format: `{"nvars": 3, "gens": [[3,0,0], [2,1,0], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<MonomialAlgebra> for IdealJson {
    fn from(a: MonomialAlgebra) -> IdealJson {
        IdealJson {
            nvars: a.nvars,
            gens: a.gens,
        }
    }
}

impl TryFrom<IdealJson> for MonomialAlgebra {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<MonomialAlgebra> {
        MonomialAlgebra::new(j.nvars, j.gens)
    }
}

fn divides(g: &[u32], m: &[u32]) -> bool {
    g.iter().zip(m).all(|(a, b)| a <= b)
}

impl MonomialAlgebra {
    pub fn new(nvars: usize, gens: Vec<Vec<u32>>) -> Result<MonomialAlgebra> {
        if nvars == 0 {
            return Err(Error::validation("need at least one variable"));
        }
        for g in &gens {
            if g.len() != nvars {
                return Err(Error::validation(format!(
                    "generator {g:?} has {} exponents, expected {nvars}",
                    g.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::validation(
                    "the unit monomial generates the whole ring",
                ));
            }
        }
        Ok(MonomialAlgebra { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    fn is_standard(&self, m: &[u32]) -> bool {
        !self.gens.iter().any(|g| divides(g, m))
    }

    /// Finite-dimensionality: every variable must have a pure power in
    /// the ideal.
    pub fn is_finite_dimensional(&self) -> bool {
        (0..self.nvars).all(|v| {
            self.gens
                .iter()
                .any(|g| g.iter().enumerate().all(|(i, &e)| i == v || e == 0))
        })
    }

    /// Standard monomials grouped by degree, up to the socle degree.
    pub fn standard_monomials(&self) -> Result<Vec<Vec<Vec<u32>>>> {
        if !self.is_finite_dimensional() {
            return Err(Error::validation(
                "infinite-dimensional monomial algebra; truncate first",
            ));
        }
        let mut layers: Vec<Vec<Vec<u32>>> = vec![vec![vec![0u32; self.nvars]]];
        loop {
            let prev = layers.last().unwrap();
            let mut next: HashSet<Vec<u32>> = HashSet::new();
            for m in prev {
                for v in 0..self.nvars {
                    let mut up = m.clone();
                    up[v] += 1;
                    if self.is_standard(&up) {
                        next.insert(up);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            let mut layer: Vec<Vec<u32>> = next.into_iter().collect();
            layer.sort_unstable();
            layers.push(layer);
        }
        Ok(layers)
    }

    /// The Hilbert function, ending at the socle degree.
    pub fn hilbert(&self) -> Result<IntSeq> {
        let layers = self.standard_monomials()?;
        Ok(IntSeq::new(
            SeqRole::Hilbert,
            layers.iter().map(|l| l.len() as i64).collect(),
        ))
    }

    /// Socle monomials (standard monomials killed by every variable) and
    /// whether the algebra is level (socle concentrated in top degree).
    pub fn socle_level(&self) -> Result<SocleReport> {
        let layers = self.standard_monomials()?;
        let top = layers.len() - 1;
        let mut socle = Vec::new();
        let mut is_level = true;
        for (deg, layer) in layers.iter().enumerate() {
            for m in layer {
                let killed = (0..self.nvars).all(|v| {
                    let mut up = m.clone();
                    up[v] += 1;
                    !self.is_standard(&up)
                });
                if killed {
                    if deg != top {
                        is_level = false;
                    }
                    socle.push(m.clone());
                }
            }
        }
        Ok(SocleReport {
            socle,
            is_level,
            top_degree: top,
        })
    }

    /// Adjoins all standard monomials of degree m+1 to the ideal, cutting
    /// the Hilbert function at degree m.
    pub fn truncate(&self, m: usize) -> Result<MonomialAlgebra> {
        let mut gens = self.gens.clone();
        for mono in monomials_asc_lex(self.nvars, m as u32 + 1) {
            if self.is_standard(&mono) {
                gens.push(mono);
            }
        }
        MonomialAlgebra::new(self.nvars, gens)
    }
}

#[derive(Debug, Clone)]
pub struct SocleReport {
    pub socle: Vec<Vec<u32>>,
    pub is_level: bool,
    pub top_degree: usize,
}

/// Hilbert function of the trivial extension A ⊕ ω_A[1]:
/// `(a_0, ..., a_d, 0) + (0, a_d, ..., a_0)`. Always palindromic.
pub fn trivial_extension_hilbert(a: &[i64]) -> Result<IntSeq> {
    if a.is_empty() || *a.last().unwrap() == 0 {
        return Err(Error::validation(
            "trivial extension needs a nonzero top entry",
        ));
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::validation("negative Hilbert function entry"));
    }
    let d = a.len() - 1;
    let mut out = vec![0i64; d + 2];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
        out[d + 1 - i] += x;
    }
    Ok(IntSeq::new(SeqRole::Hilbert, out))
}

// ---------------------------------------------------------------------------
// Gorenstein quotient search.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuStrategy {
    /// Every nonzero functional over the field (requires
    /// |field|^dim(top) <= 10^6).
    Exhaustive,
    /// The given number of random functionals, derived from the seed.
    Random { trials: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct GorensteinMaxReport {
    /// For each degree q, the maximum pairing rank over the tested μ.
    pub per_degree_max: Vec<usize>,
    /// Proven upper bound per degree from identically-vanishing symbolic
    /// minors over the field's characteristic, when the matrix is small
    /// enough to expand.
    pub structural_bound: Vec<Option<usize>>,
    /// Number of functionals tested.
    pub tested: usize,
}

/// Pairing ranks of a single socle functional μ (one value per top-degree
/// standard monomial): entry q is the rank of the pairing
/// `A^q x A^{top-q} -> k`, `(m, m') -> μ(m m')`.
pub fn gorenstein_ranks_for_mu(
    alg: &MonomialAlgebra,
    field: &Field,
    mu: &[FieldElement],
) -> Result<Vec<usize>> {
    let layers = alg.standard_monomials()?;
    let top = layers.len() - 1;
    let top_index: HashMap<&Vec<u32>, usize> = layers[top]
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    if mu.len() != layers[top].len() {
        return Err(Error::validation(format!(
            "functional has {} values, top degree has dimension {}",
            mu.len(),
            layers[top].len()
        )));
    }
    let mut ranks = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let rows = &layers[q];
        let cols = &layers[top - q];
        let mut m = crate::ff::FieldMatrix::zeros(rows.len(), cols.len());
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in cols.iter().enumerate() {
                let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if alg.is_standard(&prod) {
                    let t = top_index[&prod];
                    m.set(i, j, mu[t]);
                }
            }
        }
        ranks.push(m.rank(field));
    }
    Ok(ranks)
}

/// Maximizes the per-degree Gorenstein-quotient dimensions over socle
/// functionals. Exhaustive search is a proof over the given field;
/// random search is a lower-bound certificate. A structural upper bound
/// from symbolic minors is attached when the pairing matrices are small.
pub fn gorenstein_quotient_max(
    alg: &MonomialAlgebra,
    field: &Field,
    strategy: MuStrategy,
) -> Result<GorensteinMaxReport> {
    let socle = alg.socle_level()?;
    if !socle.is_level {
        return Err(Error::validation("algebra is not level"));
    }
    let layers = alg.standard_monomials()?;
    let top = layers.len() - 1;
    let dim_top = layers[top].len();

    let mut per_degree_max = vec![0usize; top + 1];
    let mut tested = 0usize;
    let mut try_mu = |mu: &[FieldElement]| -> Result<()> {
        let ranks = gorenstein_ranks_for_mu(alg, field, mu)?;
        for (q, r) in ranks.into_iter().enumerate() {
            per_degree_max[q] = per_degree_max[q].max(r);
        }
        tested += 1;
        Ok(())
    };

    match strategy {
        MuStrategy::Exhaustive => {
            let total = (field.size() as u128).checked_pow(dim_top as u32);
            match total {
                Some(t) if t <= 1_000_000 => {}
                _ => {
                    return Err(Error::validation(
                        "exhaustive search space exceeds 10^6 functionals",
                    ))
                }
            }
            let size = field.size();
            let count = size.pow(dim_top as u32);
            for code in 1..count {
                let mut mu = Vec::with_capacity(dim_top);
                let mut v = code;
                for _ in 0..dim_top {
                    mu.push(field.elt(v % size));
                    v /= size;
                }
                try_mu(&mu)?;
            }
        }
        MuStrategy::Random { trials, seed } => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let mut mu: Vec<FieldElement> =
                    (0..dim_top).map(|_| field.random(&mut rng)).collect();
                if mu.iter().all(|e| e.is_zero()) {
                    mu[0] = field.one();
                }
                try_mu(&mu)?;
            }
        }
    }

    // Structural bound: symbolic entries are indices of top monomials.
    let top_index: HashMap<&Vec<u32>, usize> = layers[top]
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut structural = vec![None; top + 1];
    for q in 0..=top {
        let rows = &layers[q];
        let cols = &layers[top - q];
        if rows.len() > 8 || cols.len() > 8 {
            continue;
        }
        let sym: Vec<Vec<Option<usize>>> = rows
            .iter()
            .map(|a| {
                cols.iter()
                    .map(|b| {
                        let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if alg.is_standard(&prod) {
                            Some(top_index[&prod])
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        structural[q] = Some(symbolic_rank_bound(&sym, field.characteristic()));
    }

    Ok(GorensteinMaxReport {
        per_degree_max,
        structural_bound: structural,
        tested,
    })
}

/// Largest k such that some k x k minor of the symbolic matrix is not
/// identically zero as a polynomial over GF(p) in the entry
/// indeterminates. Every functional's pairing rank is bounded by this.
fn symbolic_rank_bound(entries: &[Vec<Option<usize>>], p: u64) -> usize {
    let rows = entries.len();
    let cols = if rows == 0 { 0 } else { entries[0].len() };
    let cap = rows.min(cols);
    for k in (1..=cap).rev() {
        for rsel in (0..rows).combinations(k) {
            for csel in (0..cols).combinations(k) {
                if !symbolic_minor_is_zero(entries, &rsel, &csel, p) {
                    return k;
                }
            }
        }
    }
    0
}

fn symbolic_minor_is_zero(
    entries: &[Vec<Option<usize>>],
    rsel: &[usize],
    csel: &[usize],
    p: u64,
) -> bool {
    let k = rsel.len();
    // Expand the determinant as a polynomial: monomial = sorted multiset
    // of entry indices, coefficient mod p.
    let mut poly: HashMap<Vec<usize>, u64> = HashMap::new();
    for perm in (0..k).permutations(k) {
        let mut term = Vec::with_capacity(k);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            match entries[rsel[i]][csel[j]] {
                Some(t) => term.push(t),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        term.sort_unstable();
        let sign_pos = permutation_sign_even(&perm);
        let e = poly.entry(term).or_insert(0);
        if sign_pos {
            *e = (*e + 1) % p;
        } else {
            *e = (*e + p - 1) % p;
        }
    }
    poly.values().all(|&c| c == 0)
}

fn permutation_sign_even(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

// ---------------------------------------------------------------------------
// Pure O-sequences.
// ---------------------------------------------------------------------------

/// Degree histogram of the order ideal of all divisors of the given
/// equal-degree socle monomials. Errors on mixed degrees.
pub fn pure_o_sequence(nvars: usize, socle_gens: &[Vec<u32>]) -> Result<IntSeq> {
    if socle_gens.is_empty() {
        return Err(Error::validation("no socle generators"));
    }
    let deg: u32 = socle_gens[0].iter().sum();
    for g in socle_gens {
        if g.len() != nvars {
            return Err(Error::validation(format!(
                "generator {g:?} does not have {nvars} exponents"
            )));
        }
        if g.iter().sum::<u32>() != deg {
            return Err(Error::validation("socle generators have mixed degrees"));
        }
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for g in socle_gens {
        collect_divisors(g, 0, &mut g.clone(), &mut seen);
    }
    let mut hist = vec![0i64; deg as usize + 1];
    for m in &seen {
        hist[m.iter().sum::<u32>() as usize] += 1;
    }
    Ok(IntSeq::new(SeqRole::Hilbert, hist))
}

fn collect_divisors(g: &[u32], pos: usize, cur: &mut Vec<u32>, out: &mut HashSet<Vec<u32>>) {
    if pos == g.len() {
        out.insert(cur.clone());
        return;
    }
    for e in 0..=g[pos] {
        cur[pos] = e;
        collect_divisors(g, pos + 1, cur, out);
    }
    cur[pos] = g[pos];
}

/// A violation found by [`conjecture_pure_scan`].
#[derive(Debug, Clone, Serialize)]
pub struct ScanViolation {
    pub gens: Vec<Vec<u32>>,
    pub sequence: Vec<i64>,
    pub cbar: Vec<i64>,
    /// "complementary" when c̄ fails the sum-of-M-vectors test,
    /// "top-heavy" when a_q > a_{d-q}.
    pub kind: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PureScanReport {
    pub checked: usize,
    pub violations: Vec<ScanViolation>,
}

/// Scans every antichain of degree-maxdeg monomials (up to variable
/// permutation) and checks that the complementary vector of each pure
/// O-sequence is a sum of M-vectors, and that the sequence is top-heavy.
pub fn conjecture_pure_scan(nvars: usize, maxdeg: usize) -> Result<PureScanReport> {
    if nvars == 0 || nvars > 4 || maxdeg == 0 || maxdeg > 6 {
        return Err(Error::validation(
            "scan limits: 1 <= nvars <= 4, 1 <= maxdeg <= 6",
        ));
    }
    let monos = monomials_asc_lex(nvars, maxdeg as u32);
    if monos.len() > 24 {
        return Err(Error::validation(format!(
            "scan space with {} degree-{maxdeg} monomials exceeds the 24-monomial cap",
            monos.len()
        )));
    }
    let perms: Vec<Vec<usize>> = (0..nvars).permutations(nvars).collect();
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for mask in 1u64..(1 << monos.len()) {
        let subset: Vec<Vec<u32>> = monos
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, m)| m.clone())
            .collect();
        if !is_canonical_under_permutation(&subset, &perms) {
            continue;
        }
        checked += 1;
        let seq = pure_o_sequence(nvars, &subset)?;
        let a = seq.entries();
        let d = a.len() - 1;
        let cbar: Vec<i64> = (0..=(d.saturating_sub(1)) / 2)
            .map(|q| a[d - q] - a[q])
            .collect();
        if cbar.iter().any(|&c| c < 0) {
            violations.push(ScanViolation {
                gens: subset.clone(),
                sequence: a.to_vec(),
                cbar: cbar.clone(),
                kind: "top-heavy".to_string(),
            });
        }
        if !macaulay::is_sum_of_m_vectors(&cbar) {
            violations.push(ScanViolation {
                gens: subset,
                sequence: a.to_vec(),
                cbar,
                kind: "complementary".to_string(),
            });
        }
    }
    Ok(PureScanReport {
        checked,
        violations,
    })
}

fn is_canonical_under_permutation(subset: &[Vec<u32>], perms: &[Vec<usize>]) -> bool {
    let mut sorted: Vec<Vec<u32>> = subset.to_vec();
    sorted.sort_unstable();
    for perm in perms {
        let mut image: Vec<Vec<u32>> = subset
            .iter()
            .map(|m| {
                let mut out = vec![0u32; m.len()];
                for (i, &to) in perm.iter().enumerate() {
                    out[to] = m[i];
                }
                out
            })
            .collect();
        image.sort_unstable();
        if image < sorted {
            return false;
        }
    }
    true
}
