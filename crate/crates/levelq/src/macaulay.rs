//! Macaulay bounds, M-vectors, sums of M-vectors and module bounds.
//!
//! Everything in this module is exact integer arithmetic: binomials are
//! computed with big integers, and every ratio or concavity comparison is
//! done by cross-multiplication, so there is no tolerance parameter
//! anywhere.
//!
//! Two enumeration oracles double-check the binomial calculus against
//! actual monomial sets: [`lex_ideal_realizes`] rebuilds the candidate
//! Hilbert function as lexicographic segments and checks divisor closure,
//! and [`shadow_count`] counts the maximal one-step growth of a lex
//! segment directly. Both are used by the verification suite.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= BigUint::from(n - j);
        den *= BigUint::from(j + 1);
    }
    num / den
}

/// The unique greedy expression of b as a sum of binomials
/// `C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)` with
/// `n_i > n_{i-1} > ... > n_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub b: u64,
    pub i: u32,
    /// Pairs (n_j, j), descending in j.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    pub fn new(b: u64, i: u32) -> MacaulayRep {
        assert!(i >= 1, "Macaulay representation needs i >= 1");
        let mut terms = Vec::new();
        let mut rem = BigUint::from(b);
        let mut level = i;
        let mut upper: Option<u64> = None;
        while !rem.is_zero() && level >= 1 {
            // Largest n with C(n, level) <= rem, below the previous n.
            let mut n = level as u64;
            let cap = upper.unwrap_or(u64::MAX);
            while n + 1 < cap && binomial(n + 1, level as u64) <= rem {
                n += 1;
            }
            let c = binomial(n, level as u64);
            if c <= rem {
                rem -= c;
                terms.push((n, level));
                upper = Some(n);
            }
            level -= 1;
        }
        debug_assert!(rem.is_zero(), "greedy decomposition must terminate");
        MacaulayRep { b, i, terms }
    }

    /// Sum of the represented binomials; equals b by construction.
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|&(n, j)| binomial(n, j as u64)).sum()
    }
}

/// Macaulay's upper bound `b^<i>`: shift every binomial of the greedy
/// representation up by one in both arguments. `0^<i> = 0`.
pub fn macaulay_bound(b: u64, i: u32) -> BigUint {
    if b == 0 {
        return BigUint::zero();
    }
    MacaulayRep::new(b, i)
        .terms
        .iter()
        .map(|&(n, j)| binomial(n + 1, j as u64 + 1))
        .sum()
}

/// Checks whether a is an M-vector (an O-sequence): `a_0 = 1` and
/// `a_{i+1} <= a_i^<i>`. Returns the first violating index, if any.
pub fn is_m_vector(a: &[i64]) -> (bool, Option<usize>) {
    if a.is_empty() {
        return (true, None);
    }
    if a[0] != 1 {
        return (false, Some(0));
    }
    for i in 0..a.len() - 1 {
        let (cur, next) = (a[i], a[i + 1]);
        if cur < 0 || next < 0 {
            return (false, Some(if cur < 0 { i } else { i + 1 }));
        }
        if i == 0 {
            // a_1 is unconstrained (any number of variables).
            continue;
        }
        if BigUint::from(next as u64) > macaulay_bound(cur as u64, i as u32) {
            return (false, Some(i + 1));
        }
    }
    (true, None)
}

/// Checks whether a is a sum of M-vectors: identically zero, or
/// `a_0 > 0` and `(1, a_1, ..., a_m)` is an M-vector.
pub fn is_sum_of_m_vectors(a: &[i64]) -> bool {
    if a.iter().any(|&x| x < 0) {
        return false;
    }
    if a.iter().all(|&x| x == 0) {
        return true;
    }
    if a[0] <= 0 {
        return false;
    }
    let mut shifted = a.to_vec();
    shifted[0] = 1;
    is_m_vector(&shifted).0
}

/// Hilbert-function bound for modules generated in degree 0 over a
/// polynomial ring with s variables: writing
/// `a_i = q C(s+i-1, i) + r` with `r < C(s+i-1, i)`, requires
/// `a_{i+1} <= q C(s+i, i+1) + r^<i>`. At i = 0 the divisor C(s-1, 0) = 1
/// forces (q, r) = (a_0, 0).
pub fn module_bound_ok(a: &[i64], s: u64) -> (bool, Option<usize>) {
    assert!(s >= 1, "module bound needs at least one variable");
    if let Some(pos) = a.iter().position(|&x| x < 0) {
        return (false, Some(pos));
    }
    for i in 0..a.len().saturating_sub(1) {
        let cur = BigUint::from(a[i] as u64);
        let next = BigUint::from(a[i + 1] as u64);
        let div = binomial(s + i as u64 - 1, i as u64);
        let q = &cur / &div;
        let r = &cur % &div;
        let r_small = r.to_u64().expect("remainder below a binomial fits u64");
        let mut bound = q * binomial(s + i as u64, i as u64 + 1);
        if r_small > 0 {
            bound += macaulay_bound(r_small, i as u32);
        }
        if next > bound {
            return (false, Some(i + 1));
        }
    }
    (true, None)
}

/// The module bound specialized to complementary vectors: s = h̄_1,
/// indices 0 <= i <= (d-3)/2. Returns all violating indices.
pub fn cbar_module_check(cbar: &[i64], h1bar: u64, d: u32) -> (bool, Vec<usize>) {
    let mut violations = Vec::new();
    if h1bar == 0 {
        // No degree-one part; only the zero vector qualifies.
        if cbar.iter().any(|&x| x != 0) {
            violations.push(0);
        }
        return (violations.is_empty(), violations);
    }
    let imax = if d >= 3 { ((d - 3) / 2) as usize } else { 0 };
    for i in 0..cbar.len().saturating_sub(1).min(imax + 1) {
        let pair = [cbar[i], cbar[i + 1]];
        let (ok, _) = module_bound_ok_at(&pair, h1bar, i);
        if !ok {
            violations.push(i + 1);
        }
    }
    (violations.is_empty(), violations)
}

/// One step of the module bound at absolute index i.
fn module_bound_ok_at(pair: &[i64; 2], s: u64, i: usize) -> (bool, Option<usize>) {
    if pair[0] < 0 || pair[1] < 0 {
        return (false, Some(i));
    }
    let cur = BigUint::from(pair[0] as u64);
    let next = BigUint::from(pair[1] as u64);
    let div = binomial(s + i as u64 - 1, i as u64);
    let q = &cur / &div;
    let r = (&cur % &div).to_u64().expect("remainder fits u64");
    let mut bound = q * binomial(s + i as u64, i as u64 + 1);
    if r > 0 {
        bound += macaulay_bound(r, i as u32);
    }
    (
        next <= bound,
        if next <= bound { None } else { Some(i + 1) },
    )
}

/// Log-concavity and ultra log-concavity (entries divided by C(d, i)),
/// both by exact cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConcavityReport {
    pub log_concave: bool,
    pub ultra_log_concave: bool,
}

pub fn concavity_checks(h: &[i64], d: u32) -> ConcavityReport {
    let mut log_concave = true;
    let mut ultra = true;
    for i in 1..h.len().saturating_sub(1) {
        let mid = h[i] as i128;
        let left = h[i - 1] as i128;
        let right = h[i + 1] as i128;
        if mid * mid < left * right {
            log_concave = false;
        }
        // (h_i / C(d,i))^2 >= (h_{i-1} / C(d,i-1)) (h_{i+1} / C(d,i+1))
        let lhs = BigUint::from((h[i].max(0)) as u64).pow(2)
            * binomial(d as u64, i as u64 - 1)
            * binomial(d as u64, i as u64 + 1);
        let rhs = BigUint::from(h[i - 1].max(0) as u64)
            * BigUint::from(h[i + 1].max(0) as u64)
            * binomial(d as u64, i as u64).pow(2);
        if lhs < rhs {
            ultra = false;
        }
    }
    ConcavityReport {
        log_concave,
        ultra_log_concave: ultra,
    }
}

/// The ratio chain `h_0/h_d <= h_1/h_{d-1} <= ... <= h_d/h_0`, checked
/// by cross-multiplication. Returns the first index i where the step
/// `h_i/h_{d-i} <= h_{i+1}/h_{d-i-1}` fails.
pub fn at_chain_check(h: &[i64]) -> Result<(bool, Option<usize>)> {
    if h.len() < 2 {
        return Ok((true, None));
    }
    if let Some(pos) = h.iter().position(|&x| x <= 0) {
        return Err(Error::validation(format!(
            "ratio chain needs positive entries; entry {pos} is {}",
            h[pos]
        )));
    }
    let d = h.len() - 1;
    for i in 0..d {
        let lhs = h[i] as i128 * h[d - i - 1] as i128;
        let rhs = h[i + 1] as i128 * h[d - i] as i128;
        if lhs > rhs {
            return Ok((false, Some(i)));
        }
    }
    Ok((true, None))
}

// ---------------------------------------------------------------------------
// Enumeration oracles.
// ---------------------------------------------------------------------------

/// Exponent vectors of total degree `deg` in `vars` variables, in
/// ascending lexicographic order (x_1 > x_2 > ..., smallest monomial
/// first). The initial segments of this order are the standard
/// monomials of lex-segment ideals, which realize every O-sequence.
pub fn monomials_asc_lex(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; vars];
    fn rec(vars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == vars {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(vars, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if vars == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(vars, 0, deg, &mut cur, &mut out);
    out
}

/// The first `limit` exponent vectors of total degree `deg` in ascending
/// lexicographic order; stops generating as soon as the quota is met.
fn monomials_asc_lex_take(vars: usize, deg: u32, limit: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(limit);
    let mut cur = vec![0u32; vars];
    fn rec(pos: usize, left: u32, limit: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if out.len() >= limit {
            return;
        }
        let vars = cur.len();
        if pos + 1 == vars {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, limit, cur, out);
            if out.len() >= limit {
                break;
            }
        }
        cur[pos] = 0;
    }
    if vars == 0 || limit == 0 {
        return out;
    }
    rec(0, deg, limit, &mut cur, &mut out);
    out
}

/// Checks whether the lexicographic segments of sizes a_t assemble into
/// an order ideal of monomials, i.e. whether a is realized by an actual
/// monomial set. By Macaulay's compression theorem this decides whether
/// any order ideal realizes a, so it is an independent oracle for
/// [`is_m_vector`].
pub fn lex_ideal_realizes(a: &[i64]) -> bool {
    if a.is_empty() {
        return true;
    }
    if a[0] != 1 || a.iter().any(|&x| x < 0) {
        return false;
    }
    if a.len() == 1 {
        return true;
    }
    let vars = a[1] as usize;
    if vars == 0 {
        return a[1..].iter().all(|&x| x == 0);
    }
    let mut prev: HashSet<Vec<u32>> = HashSet::new();
    prev.insert(vec![0u32; vars]);
    for (t, &count) in a.iter().enumerate().skip(1) {
        let count = count as usize;
        if BigUint::from(count) > binomial(vars as u64 + t as u64 - 1, t as u64) {
            return false;
        }
        let layer = monomials_asc_lex_take(vars, t as u32, count);
        debug_assert_eq!(layer.len(), count);
        for mono in &layer {
            for j in 0..vars {
                if mono[j] > 0 {
                    let mut div = mono.clone();
                    div[j] -= 1;
                    if !prev.contains(&div) {
                        return false;
                    }
                }
            }
        }
        prev = layer.into_iter().collect();
    }
    true
}

/// Counts, by direct monomial enumeration, the number of degree-(i+1)
/// monomials all of whose degree-i divisors lie in the lexicographic
/// segment of size b. This is the combinatorial value of `b^<i>`.
pub fn shadow_count(b: u64, i: u32) -> u64 {
    if b == 0 {
        return 0;
    }
    // Smallest variable count whose degree-i monomial space holds b.
    let mut vars = 1usize;
    while binomial(vars as u64 + i as u64 - 1, i as u64) < BigUint::from(b) {
        vars += 1;
    }
    let segment: HashSet<Vec<u32>> = monomials_asc_lex(vars, i)
        .into_iter()
        .take(b as usize)
        .collect();
    let mut count = 0u64;
    for mono in monomials_asc_lex(vars, i + 1) {
        let mut ok = true;
        for j in 0..vars {
            if mono[j] > 0 {
                let mut div = mono.clone();
                div[j] -= 1;
                if !segment.contains(&div) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(macaulay_bound(0, 5), BigUint::zero());
        assert_eq!(macaulay_bound(3, 1), BigUint::from(6u32));
        assert_eq!(macaulay_bound(13, 4), BigUint::from(16u32));
    }

    #[test]
    fn rep_is_strictly_decreasing_and_sums_back() {
        for b in 1..=300u64 {
            for i in 1..=6u32 {
                let rep = MacaulayRep::new(b, i);
                assert_eq!(rep.value(), BigUint::from(b), "b={b} i={i}");
                for w in rep.terms.windows(2) {
                    assert!(w[0].0 > w[1].0);
                    assert_eq!(w[0].1, w[1].1 + 1);
                }
                for &(n, j) in &rep.terms {
                    assert!(n >= j as u64 && j >= 1);
                }
            }
        }
    }

    #[test]
    fn m_vector_examples() {
        assert!(is_m_vector(&[1, 3, 6, 10, 13, 16]).0);
        assert!(is_m_vector(&[1, 9, 3, 4]).0);
        assert_eq!(is_m_vector(&[2, 1]), (false, Some(0)));
        assert!(is_m_vector(&[1]).0);
        assert_eq!(is_m_vector(&[1, 0, 5]).1, Some(2));
    }

    #[test]
    fn sum_of_m_vectors_examples() {
        assert!(!is_sum_of_m_vectors(&[18, 0, 1]));
        assert!(is_sum_of_m_vectors(&[1, 9, 3, 4]));
        assert!(is_sum_of_m_vectors(&[0, 0, 0]));
        assert!(is_sum_of_m_vectors(&[3, 1]));
        assert!(!is_sum_of_m_vectors(&[0, 1]));
    }

    #[test]
    fn module_bound_examples() {
        assert!(module_bound_ok(&[5, 5, 4, 4, 2], 1).0);
        assert_eq!(module_bound_ok(&[3, 4], 1), (false, Some(1)));
        assert!(module_bound_ok(&[2, 4, 6], 2).0);
        assert!(!module_bound_ok(&[2, 5], 2).0);
    }

    #[test]
    fn cbar_module_examples() {
        assert!(cbar_module_check(&[1, 9, 3, 4], 12, 7).0);
        let (ok, viol) = cbar_module_check(&[1, 50], 3, 5);
        assert!(!ok);
        assert_eq!(viol, vec![1]);
        assert!(cbar_module_check(&[0, 0], 5, 5).0);
    }

    #[test]
    fn concavity_examples() {
        let r = concavity_checks(&[1, 2, 2, 2, 2], 4);
        assert!(r.log_concave);
        assert!(!r.ultra_log_concave);
        let r = concavity_checks(&[1, 10, 13, 17, 13, 10, 1], 6);
        assert!(!r.log_concave);
        let r = concavity_checks(&[1, 4, 4, 1], 3);
        assert!(r.log_concave && r.ultra_log_concave);
        // Binomial normalization makes flat sequences fail the ultra check.
        let r = concavity_checks(&[1, 1, 1], 2);
        assert!(r.log_concave && !r.ultra_log_concave);
    }

    #[test]
    fn ratio_chain_examples() {
        let (ok, viol) = at_chain_check(&[1, 12, 33, 43, 47, 36, 21, 2]).unwrap();
        assert!(!ok);
        assert_eq!(viol, Some(2));
        assert!(at_chain_check(&[1, 3, 3, 1]).unwrap().0);
        assert!(at_chain_check(&[1, 2, 4]).unwrap().0);
        assert!(at_chain_check(&[1, 0, 1]).is_err());
    }

    #[test]
    fn bound_monotone_in_b() {
        for i in 1..=6u32 {
            let mut prev = BigUint::zero();
            for b in 0..=100u64 {
                let cur = macaulay_bound(b, i);
                assert!(cur >= prev, "b^<{i}> not monotone at b={b}");
                prev = cur;
            }
        }
    }

    #[test]
    fn sum_of_m_vectors_is_the_large_s_module_bound() {
        // With enough generators the module bound degenerates to the
        // shifted M-vector inequalities, so the two tests agree.
        for a0 in 0..=10i64 {
            for a1 in 0..=10i64 {
                for a2 in 0..=10i64 {
                    for a3 in [0i64, 1, 5, 10] {
                        let a = [a0, a1, a2, a3];
                        assert_eq!(
                            is_sum_of_m_vectors(&a),
                            module_bound_ok(&a, 100).0,
                            "at {a:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lex_ideal_matches_m_vector_sampled_to_20() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50_000 {
            let len = rng.gen_range(1..=5);
            let a: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=20)).collect();
            assert_eq!(
                is_m_vector(&a).0,
                lex_ideal_realizes(&a),
                "disagreement at {a:?}"
            );
        }
    }

    #[test]
    fn shadow_count_matches_bound_small() {
        for i in 1..=4u32 {
            for b in 0..=40u64 {
                assert_eq!(
                    BigUint::from(shadow_count(b, i)),
                    macaulay_bound(b, i),
                    "b={b} i={i}"
                );
            }
        }
    }

    #[test]
    fn lex_ideal_matches_m_vector_small() {
        // All sequences of length <= 4 with entries <= 6.
        for a1 in 0..=6i64 {
            for a2 in 0..=6i64 {
                for a3 in 0..=6i64 {
                    let a = [1, a1, a2, a3];
                    assert_eq!(
                        is_m_vector(&a).0,
                        lex_ideal_realizes(&a),
                        "disagreement at {a:?}"
                    );
                }
            }
        }
    }

    /// Exhaustive downset search in up to 3 variables and degree up to 3,
    /// validating the lex-segment oracle against a genuinely brute-force
    /// enumeration of order ideals.
    #[test]
    fn lex_ideal_matches_exhaustive_downsets() {
        let vars = 3usize;
        let deg1 = monomials_asc_lex(vars, 1);
        let deg2 = monomials_asc_lex(vars, 2);
        let deg3 = monomials_asc_lex(vars, 3);
        let mut achievable: HashSet<[i64; 4]> = HashSet::new();
        for mask1 in 0u32..(1 << deg1.len()) {
            let s1: HashSet<&Vec<u32>> = deg1
                .iter()
                .enumerate()
                .filter(|(i, _)| mask1 >> i & 1 == 1)
                .map(|(_, m)| m)
                .collect();
            let allowed2: Vec<&Vec<u32>> = deg2.iter().filter(|m| divisors_in(m, &s1)).collect();
            for mask2 in 0u32..(1 << allowed2.len()) {
                let s2: HashSet<&Vec<u32>> = allowed2
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask2 >> i & 1 == 1)
                    .map(|(_, m)| *m)
                    .collect();
                let allowed3: Vec<&Vec<u32>> =
                    deg3.iter().filter(|m| divisors_in(m, &s2)).collect();
                // Any subset of allowed3 works; only sizes matter.
                for size3 in 0..=allowed3.len() {
                    achievable.insert([1, s1.len() as i64, s2.len() as i64, size3 as i64]);
                }
            }
        }
        for a1 in 0..=3i64 {
            for a2 in 0..=6i64 {
                for a3 in 0..=10i64 {
                    let a = [1, a1, a2, a3];
                    assert_eq!(
                        achievable.contains(&a),
                        lex_ideal_realizes(&a),
                        "divergence at {a:?}"
                    );
                }
            }
        }
    }

    fn divisors_in(m: &[u32], set: &HashSet<&Vec<u32>>) -> bool {
        for j in 0..m.len() {
            if m[j] > 0 {
                let mut div = m.to_vec();
                div[j] -= 1;
                if !set.contains(&div) {
                    return false;
                }
            }
        }
        true
    }
}
