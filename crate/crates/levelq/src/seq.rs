//! Finite integer sequences with a role tag.
//!
//! The same `Vec<i64>` shape plays several roles in this crate (f-vector,
//! h-vector, h̄-vector, ḡ-vector, c̄-vector, Hilbert function, Betti
//! numbers); the tag records which indexing convention applies.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Which sequence a given [`IntSeq`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqRole {
    /// Face counts, stored with `entries[0] = f_{-1} = 1`.
    F,
    /// h-vector, indexed 0..=d.
    H,
    /// Hilbert function of the level quotient, indexed 0..=d.
    HBar,
    /// First differences of the first half of h̄.
    GBar,
    /// Complementary vector `c̄_q = h̄_{d-q} - h̄_q`.
    CBar,
    /// Hilbert function of a graded algebra or module.
    Hilbert,
    /// Reduced Betti numbers β_0..β_{d-1}.
    Betti,
}

/// A finite integer sequence with a role tag.
///
/// Entries are `i64`: the f/h transform can produce negative values on
/// pathological complexes, and several checks report signed differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeq {
    entries: Vec<i64>,
    role: SeqRole,
}

impl IntSeq {
    pub fn new(role: SeqRole, entries: Vec<i64>) -> Self {
        IntSeq { entries, role }
    }

    pub fn role(&self) -> SeqRole {
        self.role
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at `i`, or 0 when out of range.
    pub fn get(&self, i: usize) -> i64 {
        self.entries.get(i).copied().unwrap_or(0)
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.entries.iter()
    }
}

impl std::ops::Index<usize> for IntSeq {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.entries[i]
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Multiplies two integer polynomials given by coefficient lists.
///
/// Used for h-polynomial arithmetic: `h(A*B; t) = h(A; t) h(B; t)`.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_convention() {
        let s = IntSeq::new(SeqRole::H, vec![1, 3, 2]);
        assert_eq!(s.to_string(), "(1,3,2)");
    }

    #[test]
    fn poly_mul_basic() {
        // (1 + 2t + t^2)(1 + 2t) = 1 + 4t + 5t^2 + 2t^3
        assert_eq!(poly_mul(&[1, 2, 1], &[1, 2]), vec![1, 4, 5, 2]);
        assert_eq!(poly_mul(&[], &[1]), Vec::<i64>::new());
    }

    #[test]
    fn get_out_of_range_is_zero() {
        let s = IntSeq::new(SeqRole::CBar, vec![1, 9, 3, 4]);
        assert_eq!(s.get(2), 3);
        assert_eq!(s.get(9), 0);
    }
}
