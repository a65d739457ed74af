//! The algebraic core: artinian reduction of the face ring at a random
//! specialization, level and Gorenstein quotients, Lefschetz rank
//! certificates, and the good-cycle search.
//!
//! The generic linear system of parameters θ_i = Σ_j a_{i,j} x_j has
//! indeterminate coefficients; exact arithmetic over the rational
//! function field is infeasible beyond toy sizes, so every a_{i,j} is
//! drawn uniformly from a large finite field instead. Each reported
//! dimension is a matrix rank; ranks at specializations never exceed the
//! generic rank and agree with it outside a low-degree hypersurface, so
//! results are certified by recomputing at several seeds and taking the
//! entrywise maximum, flagging any disagreement.
//!
//! Degree-q monomials of the face ring are enumerated by face support
//! and exponent composition in a fixed graded order; echelon pivots
//! follow that order, so coset representatives (and hence every rank
//! below) are deterministic given (complex, field, theta, seed).

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ff::{Field, FieldElement, FieldMatrix};
use crate::homology::{self, Cycle};
use crate::scomplex::{mask_to_verts, SimplicialComplex};
use crate::seq::{IntSeq, SeqRole};
use crate::{Error, Result};

/// How the rows of θ are drawn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ThetaSpec {
    /// Every coefficient uniform over the working field.
    Generic,
    /// Fixed supports; coefficients random nonzero on the support, or
    /// pinned to the given prime-field values.
    Explicit { rows: Vec<ThetaRow> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaRow {
    pub support: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<u64>>,
}

type Monomial = Vec<u32>;

/// Per-degree data of the artinian reduction K[Δ]/(θ_1, ..., θ_d):
/// monomial bases, echelonized ideal images, coset bases and facet
/// determinants. Immutable after construction.
#[derive(Debug)]
pub struct ArtinianModel {
    complex: SimplicialComplex,
    field: Arc<Field>,
    theta: FieldMatrix,
    seed: u64,
    d: usize,
    faces: HashSet<u128>,
    /// Monomial basis of K[Δ]_q, graded-lex by (support, exponents).
    basis: Vec<Vec<Monomial>>,
    /// Support mask per basis monomial.
    supports: Vec<Vec<u128>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// Nonzero rows of the reduced echelon form of θ·K[Δ]_{q-1} inside
    /// K[Δ]_q.
    image_rows: Vec<FieldMatrix>,
    /// Non-pivot monomial indices: coset representatives of H^q.
    coset: Vec<Vec<usize>>,
    /// Size-d facets in lexicographic order, their degree-d basis index
    /// and determinant [F].
    top_facets: Vec<u128>,
    facet_mono: Vec<usize>,
    facet_dets: Vec<FieldElement>,
}

/// A linear functional on K[Δ]_d that vanishes on the degree-d ideal
/// image, stored by its values on the degree-d monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    values: Vec<FieldElement>,
}

impl Functional {
    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Pointwise linear combination; valid because functionals form a
    /// linear space over the working field.
    pub fn linear_combination(field: &Field, parts: &[(FieldElement, &Functional)]) -> Functional {
        assert!(!parts.is_empty());
        let n = parts[0].1.values.len();
        let mut values = vec![FieldElement::ZERO; n];
        for (coef, f) in parts {
            for (acc, v) in values.iter_mut().zip(&f.values) {
                *acc = field.add(*acc, field.mul(*coef, *v));
            }
        }
        Functional { values }
    }
}

const BUILD_RETRIES: usize = 8;

/// Builds the artinian model. In generic mode the specialization is
/// resampled (up to 8 times) until every facet determinant is nonzero
/// and dim H^d equals β_{d-1}, the two cheap certificates that the
/// random point avoided the degenerate hypersurface.
pub fn build_model(
    complex: &SimplicialComplex,
    field: Arc<Field>,
    theta: &ThetaSpec,
    seed: u64,
) -> Result<ArtinianModel> {
    let p = field.characteristic();
    let d = complex.d();
    let betti = homology::betti(complex, p)?;
    let beta_top = betti.get(d - 1);
    if beta_top == 0 {
        return Err(Error::validation("beta_{d-1} vanishes"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = match theta {
        ThetaSpec::Generic => BUILD_RETRIES,
        ThetaSpec::Explicit { .. } => 1,
    };
    let mut last_err = String::new();
    for _ in 0..attempts {
        let theta_matrix = draw_theta(complex, &field, theta, &mut rng)?;
        let model = assemble(complex, Arc::clone(&field), theta_matrix, seed)?;
        if matches!(theta, ThetaSpec::Explicit { .. }) {
            return Ok(model);
        }
        if let Some(det_zero) = model.facet_dets.iter().position(|v| v.is_zero()) {
            last_err = format!(
                "facet determinant vanished at facet {:?}",
                mask_to_verts(model.top_facets[det_zero])
            );
            continue;
        }
        if model.dim_h(d) as i64 != beta_top {
            last_err = format!(
                "dim H^{d} = {} but beta_{{d-1}} = {beta_top}",
                model.dim_h(d)
            );
            continue;
        }
        return Ok(model);
    }
    Err(Error::Inconsistency(format!(
        "specialization failed {attempts} times ({last_err}); the field is too small"
    )))
}

fn draw_theta(
    complex: &SimplicialComplex,
    field: &Field,
    theta: &ThetaSpec,
    rng: &mut ChaCha8Rng,
) -> Result<FieldMatrix> {
    let n = complex.n();
    let d = complex.d();
    let mut m = FieldMatrix::zeros(d, n);
    match theta {
        ThetaSpec::Generic => {
            for r in 0..d {
                for c in 0..n {
                    m.set(r, c, field.random(rng));
                }
            }
        }
        ThetaSpec::Explicit { rows } => {
            if rows.len() != d {
                return Err(Error::validation(format!(
                    "explicit theta has {} rows, the complex needs d = {d}",
                    rows.len()
                )));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.support.is_empty() {
                    return Err(Error::validation(format!(
                        "theta row {r} has empty support"
                    )));
                }
                if let Some(coeffs) = &row.coeffs {
                    if coeffs.len() != row.support.len() {
                        return Err(Error::validation(format!(
                            "theta row {r}: {} coefficients for {} support vertices",
                            coeffs.len(),
                            row.support.len()
                        )));
                    }
                }
                for (k, &v) in row.support.iter().enumerate() {
                    if v == 0 || v > n {
                        return Err(Error::validation(format!(
                            "theta row {r}: vertex {v} out of range"
                        )));
                    }
                    let value = match &row.coeffs {
                        Some(coeffs) => field.from_prime(coeffs[k]),
                        None => field.random_nonzero(rng),
                    };
                    m.set(r, v - 1, value);
                }
            }
        }
    }
    Ok(m)
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    // Positive compositions of `total` into `parts` parts, lex order.
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let parts = cur.len();
        if pos + 1 == parts {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        let maxed = left - (parts - pos - 1) as u32;
        for e in 1..=maxed {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if (parts as u32) <= total {
        rec(0, total, &mut cur, &mut out);
    }
    out
}

fn assemble(
    complex: &SimplicialComplex,
    field: Arc<Field>,
    theta: FieldMatrix,
    seed: u64,
) -> Result<ArtinianModel> {
    let n = complex.n();
    let d = complex.d();
    let faces = complex.all_faces();
    let mut faces_sorted: Vec<u128> = faces.iter().copied().filter(|&f| f != 0).collect();
    faces_sorted.sort_by_key(|&m| mask_to_verts(m));

    // Monomial bases per degree.
    let mut basis: Vec<Vec<Monomial>> = Vec::with_capacity(d + 1);
    let mut supports: Vec<Vec<u128>> = Vec::with_capacity(d + 1);
    basis.push(vec![vec![0u32; n]]);
    supports.push(vec![0u128]);
    for q in 1..=d {
        let mut layer = Vec::new();
        let mut supp = Vec::new();
        for &face in &faces_sorted {
            let verts = mask_to_verts(face);
            if verts.len() > q {
                continue;
            }
            for comp in compositions(q as u32, verts.len()) {
                let mut mono = vec![0u32; n];
                for (v, e) in verts.iter().zip(comp) {
                    mono[v - 1] = e;
                }
                layer.push(mono);
                supp.push(face);
            }
        }
        basis.push(layer);
        supports.push(supp);
    }
    let index: Vec<HashMap<Monomial, usize>> = basis
        .iter()
        .map(|layer| {
            layer
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect()
        })
        .collect();

    // Ideal image per degree: rows θ_i · (basis of degree q-1).
    let mut image_rows = vec![FieldMatrix::zeros(0, 1)];
    let mut coset = vec![vec![0usize]];
    for q in 1..=d {
        let cols = basis[q].len();
        let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(d * basis[q - 1].len());
        for mono_idx in 0..basis[q - 1].len() {
            let mono = &basis[q - 1][mono_idx];
            let supp = supports[q - 1][mono_idx];
            for i in 0..d {
                let mut row = vec![FieldElement::ZERO; cols];
                let mut nonzero = false;
                for j in 0..n {
                    let c = theta.get(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let new_supp = supp | (1u128 << j);
                    if !faces.contains(&new_supp) {
                        continue;
                    }
                    let mut up = mono.clone();
                    up[j] += 1;
                    let col = index[q][&up];
                    row[col] = field.add(row[col], c);
                    nonzero = true;
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
        let mat = if rows.is_empty() {
            FieldMatrix::zeros(0, cols)
        } else {
            FieldMatrix::from_rows(cols, rows)
        };
        let ech = mat.rref(&field);
        let rank = ech.pivots.len();
        let mut reduced = FieldMatrix::zeros(rank, cols);
        for r in 0..rank {
            for c in 0..cols {
                reduced.set(r, c, ech.mat.get(r, c));
            }
        }
        let pivot_set: HashSet<usize> = ech.pivots.iter().copied().collect();
        coset.push((0..cols).filter(|c| !pivot_set.contains(c)).collect());
        image_rows.push(reduced);
    }

    // Facet determinants, columns by ascending vertex label.
    let top_facets = complex.faces_of_size(d);
    let mut facet_mono = Vec::with_capacity(top_facets.len());
    let mut facet_dets = Vec::with_capacity(top_facets.len());
    for &f in &top_facets {
        let verts = mask_to_verts(f);
        let mut mono = vec![0u32; n];
        for &v in &verts {
            mono[v - 1] = 1;
        }
        facet_mono.push(index[d][&mono]);
        let mut m = FieldMatrix::zeros(d, d);
        for (i, _) in (0..d).enumerate() {
            for (pcol, &v) in verts.iter().enumerate() {
                m.set(i, pcol, theta.get(i, v - 1));
            }
        }
        facet_dets.push(m.det(&field));
    }

    Ok(ArtinianModel {
        complex: complex.clone(),
        field,
        theta,
        seed,
        d,
        faces,
        basis,
        supports,
        index,
        image_rows,
        coset,
        top_facets,
        facet_mono,
        facet_dets,
    })
}

impl ArtinianModel {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<Field> {
        Arc::clone(&self.field)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn theta(&self) -> &FieldMatrix {
        &self.theta
    }

    /// Dimension of the face-ring graded piece K[Δ]_q.
    pub fn dim_kd(&self, q: usize) -> usize {
        self.basis[q].len()
    }

    /// Dimension of H^q = K[Δ]_q / (θ K[Δ])_q.
    pub fn dim_h(&self, q: usize) -> usize {
        self.coset[q].len()
    }

    /// The size-d facets in lexicographic order with their determinants.
    pub fn facet_dets(&self) -> impl Iterator<Item = (Vec<usize>, FieldElement)> + '_ {
        self.top_facets
            .iter()
            .zip(&self.facet_dets)
            .map(|(&f, &v)| (mask_to_verts(f), v))
    }

    /// The Hilbert function of H(Δ): (dim H^0, ..., dim H^d).
    pub fn hilbert_h(&self) -> IntSeq {
        IntSeq::new(
            SeqRole::Hilbert,
            (0..=self.d).map(|q| self.dim_h(q) as i64).collect(),
        )
    }

    /// Index of the product of two basis monomials inside its degree, or
    /// `None` when the product support is not a face.
    fn product(&self, q1: usize, i: usize, q2: usize, j: usize) -> Option<usize> {
        let supp = self.supports[q1][i] | self.supports[q2][j];
        if !self.faces.contains(&supp) {
            return None;
        }
        let prod: Monomial = self.basis[q1][i]
            .iter()
            .zip(&self.basis[q2][j])
            .map(|(a, b)| a + b)
            .collect();
        Some(self.index[q1 + q2][&prod])
    }

    /// Pulls a functional on K[Δ]_d back to degree t along multiplication
    /// by ℓ^{d-t}, where ℓ = x_1 + ... + x_n: the result assigns to a
    /// degree-t monomial m the value φ(m ℓ^{d-t}).
    fn ell_pullback(&self, phi: &Functional, t: usize) -> Vec<FieldElement> {
        let f = &*self.field;
        let mut cur = phi.values.clone();
        let n = self.complex.n();
        for s in (t..self.d).rev() {
            let mut next = vec![FieldElement::ZERO; self.basis[s].len()];
            for (i, mono) in self.basis[s].iter().enumerate() {
                let supp = self.supports[s][i];
                let mut acc = FieldElement::ZERO;
                for j in 0..n {
                    let new_supp = supp | (1u128 << j);
                    if !self.faces.contains(&new_supp) {
                        continue;
                    }
                    let mut up = mono.clone();
                    up[j] += 1;
                    acc = f.add(acc, cur[self.index[s + 1][&up]]);
                }
                next[i] = acc;
            }
            cur = next;
        }
        cur
    }

    /// The bilinear form H^{q1} x H^{q2} -> K, (y, z) -> φ(y z ℓ^e) with
    /// e = d - q1 - q2, over the coset monomial bases.
    pub fn form_matrix(&self, phi: &Functional, q1: usize, q2: usize) -> FieldMatrix {
        assert!(q1 + q2 <= self.d, "form degrees exceed d");
        let psi = self.ell_pullback(phi, q1 + q2);
        let rows = &self.coset[q1];
        let cols = &self.coset[q2];
        let mut m = FieldMatrix::zeros(rows.len(), cols.len());
        for (ri, &bi) in rows.iter().enumerate() {
            for (ci, &bj) in cols.iter().enumerate() {
                if let Some(t) = self.product(q1, bi, q2, bj) {
                    m.set(ri, ci, psi[t]);
                }
            }
        }
        m
    }
}

/// The functional μ_y of a top-homology cycle y: the unique functional
/// on K[Δ]_d vanishing on the degree-d ideal image with value c_F / [F]
/// on each facet monomial. Solvability certifies that y is a cycle and
/// that facet monomials span H^d.
pub fn cycle_functional(model: &ArtinianModel, cycle: &Cycle) -> Result<Functional> {
    let f = model.field();
    if cycle.p() != f.characteristic() {
        return Err(Error::validation(format!(
            "cycle over GF({}) fed to a model over characteristic {}",
            cycle.p(),
            f.characteristic()
        )));
    }
    let nf = model.top_facets.len();
    if cycle.coeffs().len() != nf {
        return Err(Error::validation(format!(
            "cycle has {} coefficients, complex has {nf} top facets",
            cycle.coeffs().len()
        )));
    }
    let dim = model.dim_kd(model.d);
    let image = &model.image_rows[model.d];
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(image.rows() + nf);
    let mut rhs: Vec<FieldElement> = Vec::with_capacity(image.rows() + nf);
    for r in 0..image.rows() {
        rows.push(image.row(r).to_vec());
        rhs.push(FieldElement::ZERO);
    }
    for (k, &c) in cycle.coeffs().iter().enumerate() {
        let det = model.facet_dets[k];
        let value = if det.is_zero() {
            if c != 0 {
                return Err(Error::Inconsistency(format!(
                    "facet determinant vanishes on a supported facet {:?}; resample the seed",
                    mask_to_verts(model.top_facets[k])
                )));
            }
            FieldElement::ZERO
        } else {
            f.div(f.from_prime(c), det)
        };
        let mut row = vec![FieldElement::ZERO; dim];
        row[model.facet_mono[k]] = f.one();
        rows.push(row);
        rhs.push(value);
    }
    let system = FieldMatrix::from_rows(dim, rows);
    match system.solve(f, &rhs) {
        Some(values) => Ok(Functional { values }),
        None => Err(Error::Inconsistency(
            "functional solve inconsistent: not a cycle, or a bad specialization; resample the seed"
                .to_string(),
        )),
    }
}

/// Functional of a working-field linear combination of cycles.
pub fn combination_functional(
    model: &ArtinianModel,
    functionals: &[Functional],
    lambda: &[FieldElement],
) -> Functional {
    let parts: Vec<(FieldElement, &Functional)> =
        lambda.iter().copied().zip(functionals.iter()).collect();
    Functional::linear_combination(model.field(), &parts)
}

/// The μ-pairing H^q x H^{d-q} -> K over coset bases.
pub fn pairing_matrix(model: &ArtinianModel, phi: &Functional, q: usize) -> FieldMatrix {
    assert!(q <= model.d(), "degree out of range");
    model.form_matrix(phi, q, model.d() - q)
}

/// Hilbert function of the Gorenstein quotient of μ: entry q is the rank
/// of the μ-pairing at degree q. Palindromic since rank(A) = rank(Aᵀ).
pub fn gorenstein_hilbert(model: &ArtinianModel, phi: &Functional) -> Result<IntSeq> {
    if phi.is_zero() {
        return Err(Error::validation(
            "zero functional has no Gorenstein quotient",
        ));
    }
    let f = model.field();
    let entries = (0..=model.d())
        .map(|q| pairing_matrix(model, phi, q).rank(f) as i64)
        .collect();
    Ok(IntSeq::new(SeqRole::Hilbert, entries))
}

/// Rank of the form (y, z) -> φ(y z ℓ^e) on H^q x H^{d-q-e}. With
/// e = d - 2q both arguments live in H^q and this is the strong-Lefschetz
/// certificate form; other exponents feed the positive-characteristic
/// injectivity check.
pub fn lefschetz_rank(
    model: &ArtinianModel,
    phi: &Functional,
    q: usize,
    e: usize,
) -> Result<usize> {
    if q + e > model.d() {
        return Err(Error::validation(format!(
            "lefschetz degrees q={q}, e={e} exceed d={}",
            model.d()
        )));
    }
    let q2 = model.d() - q - e;
    Ok(model.form_matrix(phi, q, q2).rank(model.field()))
}

/// h̄-vector from one model: h̄_q is the rank of the horizontally stacked
/// μ_t-pairings at degree q over a basis of top cycles (the kernel of
/// H^q -> H̄^q is the joint kernel of all the pairings).
pub fn hbar_vector(model: &ArtinianModel, cycles: &[Cycle]) -> Result<IntSeq> {
    let functionals: Vec<Functional> = cycles
        .iter()
        .map(|c| cycle_functional(model, c))
        .collect::<Result<_>>()?;
    hbar_from_functionals(model, &functionals)
}

fn hbar_from_functionals(model: &ArtinianModel, functionals: &[Functional]) -> Result<IntSeq> {
    if functionals.is_empty() {
        return Err(Error::validation("no cycles supplied"));
    }
    let f = model.field();
    let mut entries = Vec::with_capacity(model.d() + 1);
    for q in 0..=model.d() {
        let blocks: Vec<FieldMatrix> = functionals
            .iter()
            .map(|phi| pairing_matrix(model, phi, q))
            .collect();
        let refs: Vec<&FieldMatrix> = blocks.iter().collect();
        entries.push(FieldMatrix::hstack(&refs).rank(f) as i64);
    }
    Ok(IntSeq::new(SeqRole::HBar, entries))
}

/// Rank of the stacked Lefschetz forms φ_t(y z ℓ^{d-2q}) at degree q;
/// equals h̄_q when multiplication by ℓ^{d-2q} injects the level quotient
/// into its complementary degree.
pub fn injectivity_stack_rank(
    model: &ArtinianModel,
    functionals: &[Functional],
    q: usize,
) -> Result<usize> {
    if 2 * q > model.d() {
        return Err(Error::validation(format!("q={q} exceeds d/2")));
    }
    let blocks: Vec<FieldMatrix> = functionals
        .iter()
        .map(|phi| model.form_matrix(phi, q, q))
        .collect();
    let refs: Vec<&FieldMatrix> = blocks.iter().collect();
    Ok(FieldMatrix::hstack(&refs).rank(model.field()))
}

/// ḡ and c̄ from an h̄-vector: ḡ_q = h̄_q - h̄_{q-1} on the first half,
/// c̄_q = h̄_{d-q} - h̄_q. Negative entries contradict top-heaviness and
/// are flagged as internal inconsistencies.
pub fn derive_g_and_c(hbar: &[i64], d: usize) -> Result<(IntSeq, IntSeq)> {
    if hbar.len() != d + 1 {
        return Err(Error::validation(format!(
            "h̄ has {} entries, expected d+1 = {}",
            hbar.len(),
            d + 1
        )));
    }
    let mut gbar = vec![0i64; d / 2 + 1];
    gbar[0] = hbar[0];
    for q in 1..=d / 2 {
        gbar[q] = hbar[q] - hbar[q - 1];
        if gbar[q] < 0 {
            return Err(Error::Inconsistency(format!(
                "negative ḡ entry at degree {q}: h̄ is not top-heavy"
            )));
        }
    }
    let mut cbar = Vec::with_capacity((d.saturating_sub(1)) / 2 + 1);
    for q in 0..=(d.saturating_sub(1)) / 2 {
        let c = hbar[d - q] - hbar[q];
        if c < 0 {
            return Err(Error::Inconsistency(format!(
                "negative c̄ entry at degree {q}: h̄ is not top-heavy"
            )));
        }
        cbar.push(c);
    }
    Ok((
        IntSeq::new(SeqRole::GBar, gbar),
        IntSeq::new(SeqRole::CBar, cbar),
    ))
}

// ---------------------------------------------------------------------------
// Multi-seed certification.
// ---------------------------------------------------------------------------

/// The h̄/ḡ/c̄ certificate of a complex: entrywise maximum over several
/// seeds (specialized ranks never exceed the generic rank), with a
/// disagreement flag raised when any seed under-reported.
#[derive(Debug, Clone, Serialize)]
pub struct HbarReport {
    pub hbar: Vec<i64>,
    pub gbar: Vec<i64>,
    pub cbar: Vec<i64>,
    pub seeds: Vec<u64>,
    pub disagreement: bool,
}

/// Builds `trials` models at seeds seed, seed+1, ... and certifies the
/// h̄-vector by entrywise maximum.
pub fn hbar_certified(
    complex: &SimplicialComplex,
    field: Arc<Field>,
    theta: &ThetaSpec,
    seed: u64,
    trials: usize,
) -> Result<HbarReport> {
    let trials = trials.max(1);
    let cycles = homology::top_cycle_basis(complex, field.characteristic())?;
    let mut per_seed: Vec<Vec<i64>> = Vec::with_capacity(trials);
    let seeds: Vec<u64> = (0..trials as u64).map(|k| seed + k).collect();
    for &s in &seeds {
        let model = build_model(complex, Arc::clone(&field), theta, s)?;
        per_seed.push(hbar_vector(&model, &cycles)?.into_entries());
    }
    let d = complex.d();
    let mut hbar = vec![0i64; d + 1];
    for v in &per_seed {
        for (acc, &x) in hbar.iter_mut().zip(v) {
            *acc = (*acc).max(x);
        }
    }
    let disagreement = per_seed.iter().any(|v| v != &hbar);
    let (gbar, cbar) = derive_g_and_c(&hbar, d)?;
    Ok(HbarReport {
        hbar,
        gbar: gbar.into_entries(),
        cbar: cbar.into_entries(),
        seeds,
        disagreement,
    })
}

// ---------------------------------------------------------------------------
// Good-cycle search.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct LefRank {
    pub q: usize,
    pub rank: usize,
}

/// Certificate of a good cycle μ: for every q <= d/2 the Gorenstein
/// quotient dimension equals h̄_q and both the single-μ Lefschetz form
/// and the stacked forms have that same rank.
#[derive(Debug, Clone, Serialize)]
pub struct MuCertificate {
    pub hbar: Vec<i64>,
    pub gbar: Vec<i64>,
    pub cbar: Vec<i64>,
    /// Coefficients of μ over the cycle basis, as hex field elements.
    pub mu: Vec<String>,
    pub lefschetz: Vec<LefRank>,
    pub injectivity: Vec<LefRank>,
    pub gorenstein: Vec<i64>,
    pub seeds: Vec<u64>,
}

#[derive(Debug)]
pub struct GoodCycle {
    pub certificate: MuCertificate,
    pub coefficients: Vec<FieldElement>,
    pub functional: Functional,
}

const LAMBDA_RETRIES_DEFAULT: usize = 8;

/// Searches for a working-field combination μ = Σ λ_t μ_t whose
/// Gorenstein quotient realizes the full h̄-vector on the first half,
/// with the strong-Lefschetz ranks as witnesses. Follows the
/// perturbation strategy: fold one basis cycle in at a time, retrying
/// the random λ up to `trials` times per step (0 uses the default 8).
///
/// Only available in characteristic 2, where the anisotropy input that
/// makes the perturbation step sound is available.
pub fn find_good_cycle(
    model: &ArtinianModel,
    cycles: &[Cycle],
    trials: usize,
) -> Result<GoodCycle> {
    let f = model.field();
    if f.characteristic() != 2 {
        return Err(Error::validation(
            "good-cycle search needs characteristic 2",
        ));
    }
    if cycles.is_empty() {
        return Err(Error::validation("no cycles supplied"));
    }
    let trials = if trials == 0 {
        LAMBDA_RETRIES_DEFAULT
    } else {
        trials
    };
    let d = model.d();
    let s = cycles.len();
    let functionals: Vec<Functional> = cycles
        .iter()
        .map(|c| cycle_functional(model, c))
        .collect::<Result<_>>()?;
    let qs: Vec<usize> = (0..=d / 2).collect();

    // Stage targets: rank of the stacked pairings of the first t+1
    // functionals at each q.
    let stack_rank = |t: usize, q: usize| -> usize {
        let blocks: Vec<FieldMatrix> = functionals[..=t]
            .iter()
            .map(|phi| pairing_matrix(model, phi, q))
            .collect();
        let refs: Vec<&FieldMatrix> = blocks.iter().collect();
        FieldMatrix::hstack(&refs).rank(f)
    };

    let evaluate = |phi: &Functional| -> Result<(Vec<usize>, Vec<usize>)> {
        let mut pair = Vec::with_capacity(qs.len());
        let mut lef = Vec::with_capacity(qs.len());
        for &q in &qs {
            pair.push(pairing_matrix(model, phi, q).rank(f));
            lef.push(lefschetz_rank(model, phi, q, d - 2 * q)?);
        }
        Ok((pair, lef))
    };

    let mut best: Vec<usize> = vec![0; qs.len()];
    let mut track_best = |pair: &[usize]| {
        for (b, &r) in best.iter_mut().zip(pair) {
            *b = (*b).max(r);
        }
    };

    let mut lambda: Vec<FieldElement> = vec![FieldElement::ZERO; s];
    lambda[0] = f.one();
    let mut mu = functionals[0].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed().wrapping_add(0x9e37_79b9));

    let fail = |best: &[usize], targets: &[usize]| -> Error {
        // Render full palindromic Hilbert functions from the half ranks.
        let expand = |half: &[usize]| -> Vec<usize> {
            (0..=d)
                .map(|q| half[q.min(d - q).min(half.len() - 1)])
                .collect()
        };
        Error::Specialization(format!(
            "no admissible cycle combination found: best Gorenstein Hilbert {:?}, target {:?}; \
             the specialization is non-generic or the field too small; try another seed or a larger field",
            expand(best),
            expand(targets)
        ))
    };

    // Stage 0 must satisfy the invariant outright.
    let targets0: Vec<usize> = qs.iter().map(|&q| stack_rank(0, q)).collect();
    let (pair0, lef0) = evaluate(&mu)?;
    track_best(&pair0);
    if pair0 != targets0 || lef0 != targets0 {
        return Err(fail(&best, &targets0));
    }

    for t in 1..s {
        let targets: Vec<usize> = qs.iter().map(|&q| stack_rank(t, q)).collect();
        let mut accepted = false;
        for _ in 0..trials {
            let lam = f.random_nonzero(&mut rng);
            let candidate =
                Functional::linear_combination(f, &[(f.one(), &mu), (lam, &functionals[t])]);
            let (pair, lef) = evaluate(&candidate)?;
            track_best(&pair);
            if pair == targets && lef == targets {
                mu = candidate;
                lambda[t] = lam;
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(fail(&best, &targets));
        }
    }

    let hbar = hbar_from_functionals(model, &functionals)?;
    let (gbar, cbar) = derive_g_and_c(hbar.entries(), d)?;
    let gorenstein = gorenstein_hilbert(model, &mu)?;
    let mut lefschetz = Vec::new();
    let mut injectivity = Vec::new();
    for &q in &qs {
        lefschetz.push(LefRank {
            q,
            rank: lefschetz_rank(model, &mu, q, d - 2 * q)?,
        });
        injectivity.push(LefRank {
            q,
            rank: injectivity_stack_rank(model, &functionals, q)?,
        });
    }
    let certificate = MuCertificate {
        hbar: hbar.into_entries(),
        gbar: gbar.into_entries(),
        cbar: cbar.into_entries(),
        mu: lambda.iter().map(|l| l.to_hex()).collect(),
        lefschetz,
        injectivity,
        gorenstein: gorenstein.into_entries(),
        seeds: vec![model.seed()],
    };
    Ok(GoodCycle {
        certificate,
        coefficients: lambda,
        functional: mu,
    })
}

/// Per-degree maximum Gorenstein quotient dimensions over prime-field
/// cycle combinations (exhaustive when the space is small) plus random
/// working-field combinations.
pub fn gorenstein_max_over_cycles(
    model: &ArtinianModel,
    cycles: &[Cycle],
    random_trials: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    let f = model.field();
    let p = f.characteristic();
    let s = cycles.len();
    let functionals: Vec<Functional> = cycles
        .iter()
        .map(|c| cycle_functional(model, c))
        .collect::<Result<_>>()?;
    let mut max = vec![0usize; model.d() + 1];
    let mut absorb = |phi: &Functional| -> Result<()> {
        if phi.is_zero() {
            return Ok(());
        }
        let g = gorenstein_hilbert(model, phi)?;
        for (m, &r) in max.iter_mut().zip(g.entries()) {
            *m = (*m).max(r as usize);
        }
        Ok(())
    };

    let exhaustive_count = (p as u128).checked_pow(s as u32);
    if let Some(count) = exhaustive_count.filter(|&c| c <= 1 << 20) {
        for code in 1..count {
            let mut lam = Vec::with_capacity(s);
            let mut v = code;
            for _ in 0..s {
                lam.push(f.from_prime((v % p as u128) as u64));
                v /= p as u128;
            }
            let phi = combination_functional(model, &functionals, &lam);
            absorb(&phi)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_trials {
        let mut lam: Vec<FieldElement> = (0..s).map(|_| f.random(&mut rng)).collect();
        if lam.iter().all(|l| l.is_zero()) {
            lam[0] = f.one();
        }
        let phi = combination_functional(model, &functionals, &lam);
        absorb(&phi)?;
    }
    Ok(max)
}

/// Positive-characteristic injectivity certificate: whether
/// multiplication by ℓ^{d-pq} has rank dim H̄^q(Δ, μ) as a map
/// H̄^q(Δ, μ) -> H̄^{d-(p-1)q}(Δ, μ), for q <= d/p.
#[derive(Debug, Clone, Serialize)]
pub struct CharpReport {
    pub q: usize,
    pub map_rank: usize,
    pub quotient_dim: usize,
    pub holds: bool,
}

pub fn charp_injectivity(model: &ArtinianModel, phi: &Functional, q: usize) -> Result<CharpReport> {
    let p = model.field().characteristic() as usize;
    let d = model.d();
    if p * q > d {
        return Err(Error::validation(format!("q={q} exceeds d/p = {d}/{p}")));
    }
    let map_rank = lefschetz_rank(model, phi, q, d - p * q)?;
    let quotient_dim = pairing_matrix(model, phi, q).rank(model.field());
    Ok(CharpReport {
        q,
        map_rank,
        quotient_dim,
        holds: map_rank == quotient_dim,
    })
}
