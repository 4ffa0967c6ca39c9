//! Dense matrices over `Z[ζ_d]`, the intersection form, and the block
//! matrices acting on `R^(2g-2)`.
//!
//! Vectors are columns and matrices act on the left, so a composition
//! `f ∘ h` is the product `M_f · M_h`. The basis of `R^(2g-2)` is ordered
//! `e_1, …, e_(g-1), e_-1, …, e_-(g-1)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::cyclotomic::{CycInt, Modulus, RingLiteral};
use crate::error::{Error, ParseError, Result};

#[derive(Clone)]
pub struct RingMatrix {
    modulus: Arc<Modulus>,
    rows: usize,
    cols: usize,
    entries: Vec<CycInt>,
}

impl PartialEq for RingMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for RingMatrix {}

impl std::hash::Hash for RingMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl RingMatrix {
    pub fn zeros(d: u32, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices must be non-empty".into()));
        }
        let modulus = Modulus::get(d)?;
        Ok(Self::zeros_in(&modulus, rows, cols))
    }

    fn zeros_in(modulus: &Arc<Modulus>, rows: usize, cols: usize) -> Self {
        RingMatrix {
            modulus: modulus.clone(),
            rows,
            cols,
            entries: vec![CycInt::zero_in(modulus); rows * cols],
        }
    }

    pub fn identity(d: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(d, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = CycInt::zeta_pow_in(&m.modulus, 0);
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<CycInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("matrices must be non-empty".into()));
        }
        let modulus = rows[0][0].modulus().clone();
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for x in row {
                if x.d() != modulus.d() {
                    return Err(Error::ModulusMismatch(modulus.d(), x.d()));
                }
                entries.push(x);
            }
        }
        Ok(RingMatrix {
            modulus,
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_integers(d: u32, rows: &[Vec<BigInt>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|n| CycInt::from_int(d, n.clone())).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(rows)
    }

    pub fn d(&self) -> u32 {
        self.modulus.d()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: CycInt) {
        assert_eq!(value.d(), self.d(), "modulus mismatch");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[CycInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CycInt> {
        self.entries.iter()
    }

    /// Entries converted to integers, if every entry lies in `Z`.
    pub fn as_integers(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.as_integer().cloned()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycInt::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = Self::zeros_in(&self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> RingMatrix {
        let mut out = Self::zeros_in(&self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    out.entries[j * self.rows + i] = x.conj();
                }
            }
        }
        out
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    fn check_same_shape(&self, other: &RingMatrix) -> Result<()> {
        if self.d() != other.d() {
            return Err(Error::ModulusMismatch(self.d(), other.d()));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &RingMatrix, f: impl Fn(&CycInt, &CycInt) -> CycInt) -> RingMatrix {
        RingMatrix {
            modulus: self.modulus.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> RingMatrix {
        RingMatrix {
            modulus: self.modulus.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, s: &CycInt) -> RingMatrix {
        assert_eq!(s.d(), self.d(), "modulus mismatch");
        RingMatrix {
            modulus: self.modulus.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn try_mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.d() != other.d() {
            return Err(Error::ModulusMismatch(self.d(), other.d()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros_in(&self.modulus, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycInt]) -> Result<Vec<CycInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = CycInt::zero_in(&self.modulus);
                for (a, x) in self.row(i).iter().zip(v) {
                    acc.add_product(a, x);
                }
                acc
            })
            .collect())
    }

    pub fn trace(&self) -> CycInt {
        let mut acc = CycInt::zero_in(&self.modulus);
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i);
        }
        acc
    }

    /// Rectangular sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> RingMatrix {
        let mut out = Self::zeros_in(&self.modulus, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.entries[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        out
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )))
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination; every division is
    /// an exact division in `Z[ζ]`.
    pub fn det(&self) -> Result<CycInt> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<Vec<CycInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = CycInt::zeta_pow_in(&self.modulus, 0);
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(CycInt::zero_in(&self.modulus)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num.exact_div(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Determinant by Laplace expansion along the first row.
    ///
    /// Exponential in the size; kept as an independent check of [`det`](Self::det)
    /// on small matrices.
    pub fn det_cofactor(&self) -> Result<CycInt> {
        self.require_square()?;
        if self.rows > 6 {
            return Err(Error::DimensionMismatch(
                "cofactor expansion is limited to size 6".into(),
            ));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_rec(0, &idx))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> CycInt {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = CycInt::zero_in(&self.modulus);
        for (pos, &c) in cols.iter().enumerate() {
            let x = self.get(row, c);
            if x.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
            let term = x * &self.cofactor_rec(row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Adjugate and characteristic-polynomial data by Faddeev–LeVerrier;
    /// only integer divisions occur, and they are exact.
    fn adjugate_and_det(&self) -> Result<(RingMatrix, CycInt)> {
        self.require_square()?;
        let n = self.rows;
        let id = Self::identity(self.d(), n)?;
        let mut m_prev = Self::zeros_in(&self.modulus, n, n);
        let mut c_prev = CycInt::zeta_pow_in(&self.modulus, 0);
        let mut m_k = m_prev.clone();
        for k in 1..=n {
            m_k = self.try_mul(&m_prev)?.try_add(&id.scale(&c_prev))?;
            let tr = self.try_mul(&m_k)?.trace();
            c_prev = (-tr).exact_div(&CycInt::from_int(self.d(), k as i64)?)?;
            m_prev = m_k.clone();
        }
        // c_prev is now c_0; det = (-1)^n c_0 and adj = (-1)^(n-1) M_n
        let det = if n % 2 == 0 { c_prev } else { -c_prev };
        let adj = if n % 2 == 1 { m_k } else { m_k.neg() };
        Ok((adj, det))
    }

    pub fn adjugate(&self) -> Result<RingMatrix> {
        Ok(self.adjugate_and_det()?.0)
    }

    /// Exact inverse over `Z[ζ]`; fails unless the determinant is a unit.
    pub fn inverse(&self) -> Result<RingMatrix> {
        let (adj, det) = self.adjugate_and_det()?;
        let det_inv = det
            .inverse()
            .map_err(|_| Error::NotInvertible(det.to_string()))?;
        Ok(adj.scale(&det_inv))
    }

    /// `self^e`; negative exponents use the exact inverse.
    pub fn pow(&self, e: i64) -> Result<RingMatrix> {
        self.require_square()?;
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.d(), self.rows)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Parses the text format `a, b ; c, d` (rows by `;`, entries by `,`).
    pub fn parse(d: u32, text: &str) -> Result<RingMatrix> {
        let literals = parse_literal_rows(text, 0)?;
        let rows = literals
            .iter()
            .map(|row| row.iter().map(|lit| lit.reduce(d)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(rows)
    }
}

/// Splits the matrix text format into rows of ring literals.
pub(crate) fn parse_literal_rows(
    text: &str,
    offset: usize,
) -> std::result::Result<Vec<Vec<RingLiteral>>, ParseError> {
    let mut rows = Vec::new();
    let mut row_start = 0;
    for row_text in text.split(';') {
        let mut row = Vec::new();
        let mut entry_start = row_start;
        for entry in row_text.split(',') {
            row.push(RingLiteral::parse_at(entry, offset + entry_start)?);
            entry_start += entry.len() + 1;
        }
        if let Some(first) = rows.first().map(Vec::len) {
            if first != row.len() {
                let indent = row_text.len() - row_text.trim_start().len();
                return Err(ParseError::new(
                    offset + row_start + indent,
                    format!("row has {} entries, expected {first}", row.len()),
                ));
            }
        }
        rows.push(row);
        row_start += row_text.len() + 1;
    }
    Ok(rows)
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix[d={}]({})", self.d(), self)
    }
}

/// Index of the basis vector `e_i` (`i = ±1, …, ±(g-1)`) in the fixed ordering.
pub fn basis_index(g: usize, i: i64) -> Result<usize> {
    let n = g as i64 - 1;
    if i == 0 || i.abs() > n {
        return Err(Error::Index(format!(
            "basis index {i} out of range ±1..±{n} for genus {g}"
        )));
    }
    Ok(if i > 0 {
        (i - 1) as usize
    } else {
        (n + (-i) - 1) as usize
    })
}

/// A `2(g-1) × 2(g-1)` matrix acting on `R^(2g-2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockMat {
    genus: usize,
    mat: RingMatrix,
}

impl BlockMat {
    pub fn new(genus: usize, mat: RingMatrix) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let size = 2 * (genus - 1);
        if mat.rows() != size || mat.cols() != size {
            return Err(Error::DimensionMismatch(format!(
                "genus {genus} needs a {size}x{size} matrix, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        Ok(BlockMat { genus, mat })
    }

    pub fn identity(genus: usize, d: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        Self::new(genus, RingMatrix::identity(d, 2 * (genus - 1))?)
    }

    /// Assembles `[[a, b], [c, dd]]` from `(g-1)`-square blocks.
    pub fn from_blocks(
        genus: usize,
        a: &RingMatrix,
        b: &RingMatrix,
        c: &RingMatrix,
        dd: &RingMatrix,
    ) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let n = genus - 1;
        for blk in [a, b, c, dd] {
            if blk.rows() != n || blk.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "blocks must be {n}x{n}, got {}x{}",
                    blk.rows(),
                    blk.cols()
                )));
            }
        }
        let mut m = RingMatrix::zeros(a.d(), 2 * n, 2 * n)?;
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, n), (c, n, 0), (dd, n, n)] {
            if blk.d() != a.d() {
                return Err(Error::ModulusMismatch(a.d(), blk.d()));
            }
            for i in 0..n {
                for j in 0..n {
                    m.set(r0 + i, c0 + j, blk.get(i, j).clone());
                }
            }
        }
        Self::new(genus, m)
    }

    /// `[[Id, b], [0, Id]]`.
    pub fn unipotent(genus: usize, b: &RingMatrix) -> Result<Self> {
        let n = genus.saturating_sub(1).max(1);
        let id = RingMatrix::identity(b.d(), n)?;
        let zero = RingMatrix::zeros(b.d(), n, n)?;
        Self::from_blocks(genus, &id, b, &zero, &id)
    }

    pub fn parse(genus: usize, d: u32, text: &str) -> Result<Self> {
        Self::new(genus, RingMatrix::parse(d, text)?)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn d(&self) -> u32 {
        self.mat.d()
    }

    /// Block size `g - 1`.
    pub fn half(&self) -> usize {
        self.genus - 1
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> RingMatrix {
        self.mat
    }

    pub fn get(&self, i: usize, j: usize) -> &CycInt {
        self.mat.get(i, j)
    }

    pub fn upper_left(&self) -> RingMatrix {
        self.mat.block(0, 0, self.half(), self.half())
    }

    pub fn upper_right(&self) -> RingMatrix {
        self.mat.block(0, self.half(), self.half(), self.half())
    }

    pub fn lower_left(&self) -> RingMatrix {
        self.mat.block(self.half(), 0, self.half(), self.half())
    }

    pub fn lower_right(&self) -> RingMatrix {
        self.mat.block(self.half(), self.half(), self.half(), self.half())
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    fn check_compatible(&self, other: &BlockMat) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::DimensionMismatch(format!(
                "genus {} vs {}",
                self.genus, other.genus
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &BlockMat) -> Result<BlockMat> {
        self.check_compatible(other)?;
        Ok(BlockMat {
            genus: self.genus,
            mat: self.mat.try_mul(&other.mat)?,
        })
    }

    pub fn scale(&self, s: &CycInt) -> BlockMat {
        BlockMat {
            genus: self.genus,
            mat: self.mat.scale(s),
        }
    }

    pub fn adjoint(&self) -> BlockMat {
        BlockMat {
            genus: self.genus,
            mat: self.mat.adjoint(),
        }
    }

    /// Exact inverse. Form-preserving matrices use `M^-1 = Ω^-1 M* Ω`
    /// (verified by multiplication); anything else goes through the adjugate.
    pub fn inverse(&self) -> Result<BlockMat> {
        let candidate = self.form_dual();
        if self.mat.try_mul(&candidate)?.is_identity() {
            return Ok(BlockMat {
                genus: self.genus,
                mat: candidate,
            });
        }
        Ok(BlockMat {
            genus: self.genus,
            mat: self.mat.inverse()?,
        })
    }

    /// `Ω^-1 M* Ω = -Ω M* Ω`, computed by index shuffling.
    fn form_dual(&self) -> RingMatrix {
        let n = self.half();
        let adj = self.mat.adjoint();
        let size = 2 * n;
        let mut out = RingMatrix::zeros_in(&adj.modulus, size, size);
        // (Ω X Ω)[i][j] = s(i)·s'(j)·X[π(i)][π(j)] with π swapping halves
        for i in 0..size {
            for j in 0..size {
                let (pi, si) = if i < n { (i + n, 1) } else { (i - n, -1) };
                let (pj, sj) = if j < n { (j + n, -1) } else { (j - n, 1) };
                let x = adj.get(pi, pj);
                if x.is_zero() {
                    continue;
                }
                // -(Ω X Ω)
                out.entries[i * size + j] = if si * sj == 1 { -x } else { x.clone() };
            }
        }
        out
    }

    pub fn pow(&self, e: i64) -> Result<BlockMat> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = BlockMat::identity(self.genus, self.d())?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn det(&self) -> Result<CycInt> {
        self.mat.det()
    }

    /// `M* Ω M = Ω`.
    pub fn preserves_form(&self) -> bool {
        let omega = omega_matrix(self.genus, &self.mat.modulus);
        let lhs = self
            .mat
            .adjoint()
            .try_mul(&omega)
            .and_then(|x| x.try_mul(&self.mat))
            .expect("square block matrix");
        lhs == omega
    }
}

impl fmt::Display for BlockMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mat.fmt(f)
    }
}

impl fmt::Debug for BlockMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockMat[g={}, d={}]({})", self.genus, self.d(), self.mat)
    }
}

fn omega_matrix(genus: usize, modulus: &Arc<Modulus>) -> RingMatrix {
    let n = genus - 1;
    let mut m = RingMatrix::zeros_in(modulus, 2 * n, 2 * n);
    let one = CycInt::zeta_pow_in(modulus, 0);
    for i in 0..n {
        m.entries[i * 2 * n + n + i] = one.clone();
        m.entries[(n + i) * 2 * n + i] = -&one;
    }
    m
}

/// `Ω = [[0, Id], [-Id, 0]]` with `(g-1)`-square blocks.
pub fn omega(genus: usize, d: u32) -> Result<BlockMat> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    let modulus = Modulus::get(d)?;
    BlockMat::new(genus, omega_matrix(genus, &modulus))
}

/// The intersection form `⟨u, v⟩ = uᵀ Ω conj(v)`: linear in `u`,
/// conjugate-linear in `v`, with `⟨e_i, e_-i⟩ = 1`.
pub fn form_eval(u: &[CycInt], v: &[CycInt], genus: usize) -> Result<CycInt> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    let n = genus - 1;
    if u.len() != 2 * n || v.len() != 2 * n {
        return Err(Error::DimensionMismatch(format!(
            "vectors must have length {}",
            2 * n
        )));
    }
    let mut acc = CycInt::zero_in(u[0].modulus());
    for a in 0..n {
        let plus = &u[a] * &v[n + a].conj();
        let minus = &u[n + a] * &v[a].conj();
        acc = acc.try_add(&plus)?.try_sub(&minus)?;
    }
    Ok(acc)
}

/// Standard basis vector `e_i` of `R^(2g-2)`.
pub fn basis_vector(genus: usize, d: u32, i: i64) -> Result<Vec<CycInt>> {
    let idx = basis_index(genus, i)?;
    let modulus = Modulus::get(d)?;
    let mut v = vec![CycInt::zero_in(&modulus); 2 * (genus - 1)];
    v[idx] = CycInt::zeta_pow_in(&modulus, 0);
    Ok(v)
}

/// `E_ij`: a single `1` at `(i, j)` (0-based) in an `n × n` zero matrix.
pub fn elementary(d: u32, n: usize, i: usize, j: usize) -> Result<RingMatrix> {
    let mut m = RingMatrix::zeros(d, n, n)?;
    m.set(i, j, CycInt::one(d)?);
    Ok(m)
}
