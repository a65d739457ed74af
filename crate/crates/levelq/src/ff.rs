//! Exact arithmetic over GF(p^m) and dense linear algebra.
//!
//! Elements of GF(p^m) are stored as canonical indices in `0..p^m`: the
//! base-p digits of the index are the coefficients of the polynomial
//! representative modulo a fixed irreducible modulus. The modulus is the
//! deterministic first irreducible of degree m (smallest index encoding),
//! so a field built twice from the same (p, m) is identical and every
//! downstream result is reproducible from (p, m, seed) alone.
//!
//! Multiplication goes through log/exp tables whenever the field has at
//! most 2^16 elements (the default working field GF(2^16) and the odd-
//! characteristic field GF(3^10) both qualify); larger fields fall back
//! to shift-and-xor (p = 2) or schoolbook polynomial arithmetic.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest representable field: indices must fit the canonical u64
/// encoding and table construction must stay desk-scale.
const MAX_FIELD_SIZE: u64 = 1 << 32;
const TABLE_LIMIT: u64 = 1 << 16;

/// An element of a [`Field`], stored as its canonical index.
///
/// Elements are plain values; all arithmetic goes through the owning
/// `Field`. Mixing elements of different fields is a logic error that the
/// arithmetic cannot detect, so keep one field per computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Hex rendering used in certificate JSON.
    pub fn to_hex(self) -> String {
        format!("{:#x}", self.0)
    }
}

struct MulTables {
    /// log[a] for a in 1..size, index 0 unused.
    log: Vec<u32>,
    /// exp[k] = g^k for k in 0..size-1.
    exp: Vec<u64>,
}

/// The finite field GF(p^m).
pub struct Field {
    p: u64,
    m: u32,
    size: u64,
    /// Monic irreducible modulus, coefficients c_0..c_m with c_m = 1.
    modulus: Vec<u64>,
    tables: Option<MulTables>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

impl Field {
    /// Builds GF(p^m) with the deterministic first irreducible modulus.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::validation(format!(
                "characteristic {p} is not prime"
            )));
        }
        if m == 0 || m > 32 {
            return Err(Error::validation(format!(
                "extension degree {m} out of range 1..=32"
            )));
        }
        let size = checked_pow(p, m)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or_else(|| {
                Error::validation(format!(
                    "field GF({p}^{m}) too large for the u64 index encoding"
                ))
            })?;
        let modulus = first_irreducible(p, m)
            .ok_or_else(|| Error::inconsistency("no irreducible modulus found".to_string()))?;
        let mut field = Field {
            p,
            m,
            size,
            modulus,
            tables: None,
        };
        if size <= TABLE_LIMIT {
            field.tables = Some(field.build_tables()?);
        }
        Ok(field)
    }

    /// The default working field GF(2^16).
    pub fn default_binary() -> Field {
        Field::new(2, 16).expect("GF(2^16) is constructible")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Modulus coefficients c_0..c_m (c_m = 1).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element with the given canonical index.
    pub fn elt(&self, idx: u64) -> FieldElement {
        assert!(idx < self.size, "index {idx} out of range for {self:?}");
        FieldElement(idx)
    }

    /// Embeds a prime-field value (reduced mod p) as a constant.
    pub fn from_prime(&self, c: u64) -> FieldElement {
        FieldElement(c % self.p)
    }

    /// Uniform random element.
    pub fn random<R: Rng>(&self, rng: &mut R) -> FieldElement {
        FieldElement(rng.gen_range(0..self.size))
    }

    /// Uniform random nonzero element.
    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> FieldElement {
        FieldElement(rng.gen_range(1..self.size))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let mut out = 0u64;
        let (mut x, mut y) = (a.0, b.0);
        let mut place = 1u64;
        for _ in 0..self.m {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut x = a.0;
        let mut place = 1u64;
        for _ in 0..self.m {
            let d = x % self.p;
            out += if d == 0 { 0 } else { self.p - d } * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        if let Some(t) = &self.tables {
            let ord = self.size - 1;
            let k = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % ord;
            return FieldElement(t.exp[k as usize]);
        }
        self.mul_raw(a, b)
    }

    /// Table-free multiplication; also used to bootstrap the tables.
    fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            // Shift-and-xor with on-the-fly reduction.
            let modulus_bits = self.modulus_bits();
            let mut acc = 0u64;
            let mut x = a.0;
            let mut y = b.0;
            while y != 0 {
                if y & 1 == 1 {
                    acc ^= x;
                }
                y >>= 1;
                x <<= 1;
                if (x >> self.m) & 1 == 1 {
                    x ^= modulus_bits;
                }
            }
            FieldElement(acc)
        } else {
            let da = self.digits(a.0);
            let db = self.digits(b.0);
            let mut prod = vec![0u64; 2 * self.m as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % self.p;
                }
            }
            self.reduce_poly(&mut prod);
            self.encode(&prod)
        }
    }

    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "division by zero in {self:?}");
        if let Some(t) = &self.tables {
            let ord = self.size - 1;
            let k = (ord - t.log[a.0 as usize] as u64) % ord;
            return FieldElement(t.exp[k as usize]);
        }
        self.pow(a, self.size - 2)
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Frobenius endomorphism x -> x^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// Modulus as a bitmask, only meaningful for p = 2.
    fn modulus_bits(&self) -> u64 {
        self.modulus
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | (c << i))
    }

    fn digits(&self, mut v: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.m as usize];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u64]) -> FieldElement {
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.p + c % self.p;
        }
        FieldElement(v)
    }

    /// Reduces a coefficient vector modulo the modulus polynomial.
    fn reduce_poly(&self, coeffs: &mut Vec<u64>) {
        let m = self.m as usize;
        while coeffs.len() > m {
            let top = coeffs.len() - 1;
            let c = coeffs[top];
            if c != 0 {
                for (i, &mc) in self.modulus.iter().enumerate().take(m) {
                    let pos = top - m + i;
                    let sub = (c * mc) % self.p;
                    coeffs[pos] = (coeffs[pos] + self.p - sub + self.p * self.p) % self.p;
                }
            }
            coeffs.pop();
        }
        coeffs.resize(m, 0);
    }

    fn build_tables(&self) -> Result<MulTables> {
        let ord = self.size - 1;
        if ord == 1 {
            // GF(2): the multiplicative group is trivial.
            return Ok(MulTables {
                log: vec![0, 0],
                exp: vec![1],
            });
        }
        let factors = prime_factors(ord);
        // The polynomial x (index p) is often primitive; scan upward
        // until a generator of the multiplicative group is found.
        let mut gen = None;
        for cand in 2..self.size {
            let g = FieldElement(cand);
            let primitive = factors
                .iter()
                .all(|&q| self.pow_raw(g, ord / q) != FieldElement::ONE);
            if primitive {
                gen = Some(g);
                break;
            }
        }
        let g = gen.ok_or_else(|| Error::inconsistency("no multiplicative generator found"))?;
        let mut exp = vec![0u64; ord as usize];
        let mut log = vec![0u32; self.size as usize];
        let mut cur = FieldElement::ONE;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0;
            log[cur.0 as usize] = k as u32;
            cur = self.mul_raw(cur, g);
        }
        if cur != FieldElement::ONE {
            return Err(Error::inconsistency("generator order mismatch"));
        }
        Ok(MulTables { log, exp })
    }

    fn pow_raw(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(p: u64, m: u32) -> Option<u64> {
    let mut v = 1u64;
    for _ in 0..m {
        v = v.checked_mul(p)?;
    }
    Some(v)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Modulus selection: dense polynomials over GF(p) as coefficient vectors.
// ---------------------------------------------------------------------------

/// The lexicographically first monic irreducible of degree m over GF(p),
/// scanning candidates by ascending index encoding of the low coefficients.
/// Irreducibility is checked by trial division against every monic
/// polynomial of degree at most m/2.
fn first_irreducible(p: u64, m: u32) -> Option<Vec<u64>> {
    let m = m as usize;
    if m == 1 {
        // x itself.
        return Some(vec![0, 1]);
    }
    let count = checked_pow(p, m as u32)?;
    for low in 0..count {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut v = low;
        for _ in 0..m {
            coeffs.push(v % p);
            v /= p;
        }
        coeffs.push(1);
        if is_irreducible(p, &coeffs) {
            return Some(coeffs);
        }
    }
    None
}

fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let deg = f.len() - 1;
    if f[0] == 0 {
        // Divisible by x.
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = checked_pow(p, d as u32).expect("divisor space fits u64");
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem_is_zero(p, f, &g) {
                return false;
            }
        }
    }
    true
}

/// True when g (monic) divides f over GF(p).
fn poly_rem_is_zero(p: u64, f: &[u64], g: &[u64]) -> bool {
    let dg = g.len() - 1;
    let mut rem: Vec<u64> = f.to_vec();
    while rem.len() > dg {
        let top = rem.len() - 1;
        let c = rem[top];
        if c != 0 {
            for (i, &gc) in g.iter().enumerate().take(dg) {
                let pos = top - dg + i;
                let sub = (c * gc) % p;
                rem[pos] = (rem[pos] + p - sub + p * p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

// ---------------------------------------------------------------------------
// Dense matrices.
// ---------------------------------------------------------------------------

/// A dense row-major matrix over a [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Reduced row echelon form together with its pivot columns.
pub struct Echelon {
    pub mat: FieldMatrix,
    pub pivots: Vec<usize>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElement>>) -> FieldMatrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        FieldMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Vertical stack; all blocks must share the column count.
    pub fn vstack(blocks: &[&FieldMatrix]) -> FieldMatrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "column mismatch in vstack");
            data.extend_from_slice(&b.data);
        }
        FieldMatrix { rows, cols, data }
    }

    /// Horizontal stack; all blocks must share the row count.
    pub fn hstack(blocks: &[&FieldMatrix]) -> FieldMatrix {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FieldMatrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "row mismatch in hstack");
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, off + c, b.get(r, c));
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn matmul(&self, f: &Field, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = FieldMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = FieldElement::ZERO;
                for c in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, c), v[c]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form. Pivot selection scans columns left to
    /// right, which fixes coset representatives deterministically for
    /// every consumer of this routine.
    pub fn rref(&self, f: &Field) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut pivot_row = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c);
                    let b = m.get(pr, c);
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for c in col..m.cols {
                m.set(row, c, f.mul(m.get(row, c), inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { mat: m, pivots }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).pivots.len()
    }

    /// Basis of the right null space, returned as matrix columns in
    /// reduced column-echelon form (one column per free variable, in
    /// ascending column order).
    pub fn kernel_basis(&self, f: &Field) -> FieldMatrix {
        let ech = self.rref(f);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_set[*c].is_none()).collect();
        let mut out = FieldMatrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, FieldElement::ONE);
            for (i, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.mat.get(i, fc);
                if !v.is_zero() {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }

    /// Solves A x = b, returning any solution or `None` when the system
    /// is inconsistent.
    pub fn solve(&self, f: &Field, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = FieldMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let ech = aug.rref(f);
        if ech.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![FieldElement::ZERO; self.cols];
        for (i, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.mat.get(i, self.cols);
        }
        Some(x)
    }

    /// Determinant via Gaussian elimination with row-swap sign tracking.
    pub fn det(&self, f: &Field) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = FieldElement::ONE;
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                if !m.get(r, col).is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot else {
                return FieldElement::ZERO;
            };
            if pr != col {
                for c in 0..n {
                    let a = m.get(col, c);
                    let b = m.get(pr, c);
                    m.set(col, c, b);
                    m.set(pr, c, a);
                }
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}
