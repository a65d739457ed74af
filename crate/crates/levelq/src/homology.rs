//! Simplicial chain complexes over GF(p): reduced Betti numbers and
//! bases of the top homology.
//!
//! Faces are stored with ascending vertex labels and the boundary map
//! deletes the i-th vertex with sign (-1)^i; over GF(2) the signs vanish.
//! Chain groups are indexed by face size s (so s = 0 is the empty face
//! and the boundary of a vertex is the augmentation), which makes every
//! Betti number reduced.

use serde::{Deserialize, Serialize};

use crate::ff::{Field, FieldElement, FieldMatrix};
use crate::scomplex::{mask_to_verts, SimplicialComplex};
use crate::seq::{IntSeq, SeqRole};
use crate::{Error, Result};

/// A top-homology class: one GF(p) coefficient per size-d facet, in
/// lexicographic facet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    p: u64,
    coeffs: Vec<u64>,
}

/// Wire format: `{"p": 2, "coeffs": [[[1,2], 1], ...]}` with facets in
/// lexicographic order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleJson {
    pub p: u64,
    pub coeffs: Vec<(Vec<usize>, u64)>,
}

impl Cycle {
    /// Wraps a coefficient vector, verifying that it really is a cycle
    /// of the given complex.
    pub fn new(complex: &SimplicialComplex, p: u64, coeffs: Vec<u64>) -> Result<Cycle> {
        let d = complex.d();
        let facets = complex.faces_of_size(d);
        if coeffs.len() != facets.len() {
            return Err(Error::validation(format!(
                "cycle has {} coefficients but the complex has {} size-{d} facets",
                coeffs.len(),
                facets.len()
            )));
        }
        let cycle = Cycle {
            p,
            coeffs: coeffs.iter().map(|&c| c % p).collect(),
        };
        let field = Field::new(p, 1)?;
        let bd = boundary_matrix(complex, d, &field);
        let vec: Vec<FieldElement> = cycle.coeffs.iter().map(|&c| field.elt(c)).collect();
        if !bd.mul_vec(&field, &vec).iter().all(|e| e.is_zero()) {
            return Err(Error::validation("coefficient vector has nonzero boundary"));
        }
        Ok(cycle)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_json(&self, complex: &SimplicialComplex) -> CycleJson {
        let facets = complex.faces_of_size(complex.d());
        CycleJson {
            p: self.p,
            coeffs: facets
                .iter()
                .zip(&self.coeffs)
                .map(|(&f, &c)| (mask_to_verts(f), c))
                .collect(),
        }
    }

    pub fn from_json(complex: &SimplicialComplex, j: &CycleJson) -> Result<Cycle> {
        let facets = complex.faces_of_size(complex.d());
        let mut coeffs = vec![0u64; facets.len()];
        for (verts, value) in &j.coeffs {
            let mask = crate::scomplex::verts_to_mask(verts);
            let pos = facets
                .iter()
                .position(|&f| f == mask)
                .ok_or_else(|| Error::validation(format!("{verts:?} is not a top facet")))?;
            coeffs[pos] = *value;
        }
        Cycle::new(complex, j.p, coeffs)
    }
}

/// The boundary map from faces of size s to faces of size s-1, as a
/// matrix over the given prime field (rows = smaller faces, columns =
/// size-s faces, both in lexicographic order). For s = 1 this is the
/// augmentation to the empty face.
pub fn boundary_matrix(complex: &SimplicialComplex, s: usize, field: &Field) -> FieldMatrix {
    let cols_faces = complex.faces_of_size(s);
    let rows_faces = if s == 1 {
        vec![0u128]
    } else {
        complex.faces_of_size(s - 1)
    };
    let row_index: std::collections::HashMap<u128, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut m = FieldMatrix::zeros(rows_faces.len(), cols_faces.len());
    for (c, &face) in cols_faces.iter().enumerate() {
        let verts = mask_to_verts(face);
        for (i, &v) in verts.iter().enumerate() {
            let sub = face & !(1u128 << (v - 1));
            let r = row_index[&sub];
            let sign = if i % 2 == 0 {
                field.one()
            } else {
                field.neg(field.one())
            };
            m.set(r, c, sign);
        }
    }
    m
}

/// Reduced Betti numbers β_0..β_{d-1} over GF(p).
pub fn betti(complex: &SimplicialComplex, p: u64) -> Result<IntSeq> {
    let field = Field::new(p, 1)?;
    let d = complex.d();
    let mut ranks = vec![0usize; d + 2];
    let mut dims = vec![0usize; d + 1];
    for s in 1..=d {
        let bd = boundary_matrix(complex, s, &field);
        dims[s] = bd.cols();
        ranks[s] = bd.rank(&field);
    }
    let top = boundary_matrix(complex, d, &field);
    dims[d] = top.cols();
    let entries: Vec<i64> = (1..=d)
        .map(|s| dims[s] as i64 - ranks[s] as i64 - ranks[s + 1] as i64)
        .collect();
    Ok(IntSeq::new(SeqRole::Betti, entries))
}

/// A basis of the top reduced homology (the kernel of the size-d
/// boundary map) over GF(p), in reduced column-echelon form. Errors when
/// β_{d-1} = 0, the standing hypothesis of every downstream computation.
pub fn top_cycle_basis(complex: &SimplicialComplex, p: u64) -> Result<Vec<Cycle>> {
    let field = Field::new(p, 1)?;
    let d = complex.d();
    let bd = boundary_matrix(complex, d, &field);
    let kernel = bd.kernel_basis(&field);
    if kernel.cols() == 0 {
        return Err(Error::validation("beta_{d-1} vanishes"));
    }
    let cycles = (0..kernel.cols())
        .map(|c| Cycle {
            p,
            coeffs: (0..kernel.rows()).map(|r| kernel.get(r, c).0).collect(),
        })
        .collect();
    Ok(cycles)
}
