//! Prime field arithmetic and dense matrices over F_p.
//!
//! Elements are plain `u64` residues in `[0, p)`; the field itself is a small
//! copyable handle that every operation goes through. All arithmetic is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must fit in 31 bits)")]
    ModulusTooLarge(u64),
    #[error("residue {residue} is not reduced modulo {modulus}")]
    UnreducedResidue { residue: u64, modulus: u64 },
    #[error("division by zero in F_{0}")]
    DivisionByZero(u64),
    #[error("denominator of {0} vanishes modulo {1}")]
    BadDenominator(BigRational, u64),
    #[error("matrix shapes {0}x{1} and {2}x{3} are incompatible")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("elements of F_{0} and F_{1} cannot be mixed")]
    MixedFields(u64, u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field F_p for a prime p. Cheap to copy; residues are bare `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1 % self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = self.one();
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a.is_multiple_of(self.p) {
            return Err(FieldError::DivisionByZero(self.p));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Reduce an exact rational a/b; errors when p divides b.
    pub fn reduce_rational(&self, r: &BigRational) -> Result<u64, FieldError> {
        let p = BigInt::from(self.p);
        let denom = r.denom() % &p;
        if denom.is_zero() {
            return Err(FieldError::BadDenominator(r.clone(), self.p));
        }
        let numer = ((r.numer() % &p) + &p) % &p;
        let n: u64 = numer.try_into().expect("reduced residue fits u64");
        let d: u64 = (((r.denom() % &p) + &p) % &p)
            .try_into()
            .expect("reduced residue fits u64");
        Ok(self.mul(n, self.inv(d)?))
    }

    pub fn check_residue(&self, a: u64) -> Result<u64, FieldError> {
        if a < self.p {
            Ok(a)
        } else {
            Err(FieldError::UnreducedResidue {
                residue: a,
                modulus: self.p,
            })
        }
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        let data = rows
            .into_iter()
            .flatten()
            .map(|x| x % field.modulus())
            .collect();
        FpMatrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, FieldError> {
        if self.field != other.field {
            return Err(FieldError::MixedFields(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        if self.cols != other.rows {
            return Err(FieldError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let f = self.field;
        let mut out = FpMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Apply the matrix to a column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for (k, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self[(i, k)], x));
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix, FieldError> {
        if self.cols != other.cols {
            return Err(FieldError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, piv);
            let inv = f.inv(self[(r, c)]).expect("pivot is nonzero");
            for j in 0..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in 0..self.cols {
                        let sub = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Determinant of a square matrix by Gaussian elimination.
    pub fn determinant(&self) -> u64 {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m[(i, c)] != 0) else {
                return 0;
            };
            if piv != c {
                m.swap_rows(c, piv);
                det = f.neg(det);
            }
            det = f.mul(det, m[(c, c)]);
            let inv = f.inv(m[(c, c)]).expect("pivot is nonzero");
            for i in (c + 1)..n {
                if m[(i, c)] != 0 {
                    let factor = f.mul(m[(i, c)], inv);
                    for j in c..n {
                        let sub = f.mul(factor, m[(c, j)]);
                        m[(i, j)] = f.sub(m[(i, j)], sub);
                    }
                }
            }
        }
        det
    }

    /// The square submatrix picking the given columns (0-based), all rows.
    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out[(i, j)] = self[(i, c)];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FpMatrix {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}
