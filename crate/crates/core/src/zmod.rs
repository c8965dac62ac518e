//! Exact linear algebra over ℤ/ℓℤ for arbitrary ℓ ≥ 1, not necessarily prime.
//!
//! Because ℓ may be composite, Gaussian elimination with division is not
//! available. Determinants are computed fraction-free (Bareiss) over ℤ and
//! reduced afterwards; inverses and linear solves go through Cramer's rule,
//! which only ever divides by the determinant, a unit whenever
//! `gcd(det, ℓ) = 1`.

use num::bigint::BigInt;
use num::Zero;
use num_integer::Integer;
use thiserror::Error;

/// Errors from modular linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZmodError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible mod {modulus}: gcd(det = {det_lift}, modulus) != 1")]
    NonInvertible { det_lift: u64, modulus: u64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

// ---- Residue ----

/// An element of ℤ/ℓℤ, stored as its canonical representative in `[0, ℓ)`.
///
/// Arithmetic is only defined between residues with equal moduli; mixing
/// moduli is a programming error and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Canonicalize an arbitrary signed integer mod `modulus` (ℓ ≥ 1).
    pub fn new(value: i128, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be >= 1");
        let m = modulus as i128;
        Residue {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Residue::new(1, modulus)
    }

    /// Canonical representative in `[0, ℓ)`.
    pub fn lift(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic requires equal moduli"
        );
    }

    pub fn add(&self, other: &Residue) -> Residue {
        self.check(other);
        Residue::new(self.value as i128 + other.value as i128, self.modulus)
    }

    pub fn sub(&self, other: &Residue) -> Residue {
        self.check(other);
        Residue::new(self.value as i128 - other.value as i128, self.modulus)
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        self.check(other);
        Residue::new(self.value as i128 * other.value as i128, self.modulus)
    }

    pub fn neg(&self) -> Residue {
        Residue::new(-(self.value as i128), self.modulus)
    }

    pub fn pow(&self, mut e: u64) -> Residue {
        let mut base = *self;
        let mut acc = Residue::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, if `gcd(value, ℓ) = 1`.
    pub fn inv(&self) -> Option<Residue> {
        let (g, x, _) = ext_gcd(self.value as i128, self.modulus as i128);
        if g == 1 {
            Some(Residue::new(x, self.modulus))
        } else {
            None
        }
    }
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// gcd on canonical lifts with the convention gcd(0, ℓ) = ℓ.
pub fn gcd_with_modulus(lift: u64, modulus: u64) -> u64 {
    lift.gcd(&modulus)
}

// ---- ResidueMatrix ----

/// Row-major matrix over ℤ/ℓℤ. All entries share one modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<Residue>,
}

impl ResidueMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        ResidueMatrix {
            rows,
            cols,
            modulus,
            entries: vec![Residue::zero(modulus); rows * cols],
        }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = ResidueMatrix::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, Residue::one(modulus));
        }
        m
    }

    /// Build from signed integer rows; every entry is canonicalized mod ℓ.
    pub fn from_rows(rows: &[Vec<i128>], modulus: u64) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                entries.push(Residue::new(v, modulus));
            }
        }
        ResidueMatrix {
            rows: r,
            cols: c,
            modulus,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> Residue {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Residue) {
        assert_eq!(v.modulus(), self.modulus);
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ResidueMatrix {
        let mut t = ResidueMatrix::zeros(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &ResidueMatrix) -> ResidueMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(other.entries.iter()) {
            *a = a.add(b);
        }
        m
    }

    pub fn mul(&self, other: &ResidueMatrix) -> ResidueMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut m = ResidueMatrix::zeros(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j).add(&a.mul(&other.get(k, j)));
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Residue]) -> Vec<Residue> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Residue::zero(self.modulus);
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    fn require_square(&self) -> Result<usize, ZmodError> {
        if self.rows != self.cols {
            Err(ZmodError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        } else {
            Ok(self.rows)
        }
    }

    /// Integer lift of the matrix, entries in `[0, ℓ)`.
    fn lift_bigint(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| BigInt::from(self.get(i, j).lift()))
                    .collect()
            })
            .collect()
    }
}

// ---- Determinant, inverse, solve ----

/// Exact integer determinant via fraction-free Bareiss elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Pivot search; a zero column means determinant zero.
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // Bareiss: exact division by the previous pivot.
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = -det;
    }
    det
}

fn reduce_bigint(v: &BigInt, modulus: u64) -> Residue {
    let m = BigInt::from(modulus);
    let r = ((v % &m) + &m) % &m;
    let digits = r.to_u64_digits().1;
    let lift = if digits.is_empty() { 0 } else { digits[0] };
    Residue::new(lift as i128, modulus)
}

/// Determinant of a square matrix over ℤ/ℓℤ.
///
/// Computed by Bareiss elimination over ℤ on the canonical lifts, then
/// reduced mod ℓ, so composite ℓ needs no special casing.
pub fn det_mod(m: &ResidueMatrix) -> Result<Residue, ZmodError> {
    m.require_square()?;
    let det = bareiss_det(m.lift_bigint());
    Ok(reduce_bigint(&det, m.modulus()))
}

fn unit_det(m: &ResidueMatrix) -> Result<Residue, ZmodError> {
    let det = det_mod(m)?;
    if gcd_with_modulus(det.lift(), m.modulus()) != 1 {
        return Err(ZmodError::NonInvertible {
            det_lift: det.lift(),
            modulus: m.modulus(),
        });
    }
    Ok(det)
}

/// Inverse of a square matrix with unit determinant mod ℓ.
pub fn invert_mod(m: &ResidueMatrix) -> Result<ResidueMatrix, ZmodError> {
    let n = m.require_square()?;
    let det = unit_det(m)?;
    let det_inv = det.inv().expect("unit determinant");
    // Column j of the inverse solves M x = e_j; Cramer on integer lifts.
    let mut inv = ResidueMatrix::zeros(n, n, m.modulus());
    let lifted = m.lift_bigint();
    for j in 0..n {
        let mut e = vec![Residue::zero(m.modulus()); n];
        e[j] = Residue::one(m.modulus());
        let col = cramer_columns(&lifted, &e, m.modulus());
        for i in 0..n {
            inv.set(i, j, col[i].mul(&det_inv));
        }
    }
    Ok(inv)
}

/// Numerator determinants of Cramer's rule: entry i is det(M with column i
/// replaced by b), reduced mod ℓ.
fn cramer_columns(lifted: &[Vec<BigInt>], b: &[Residue], modulus: u64) -> Vec<Residue> {
    let n = lifted.len();
    (0..n)
        .map(|i| {
            let mut replaced = lifted.to_vec();
            for (r, row) in replaced.iter_mut().enumerate() {
                row[i] = BigInt::from(b[r].lift());
            }
            reduce_bigint(&bareiss_det(replaced), modulus)
        })
        .collect()
}

/// Unique solution of M x = b for M square with unit determinant mod ℓ.
pub fn solve_mod(m: &ResidueMatrix, b: &[Residue]) -> Result<Vec<Residue>, ZmodError> {
    let n = m.require_square()?;
    if b.len() != n {
        return Err(ZmodError::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let det = unit_det(m)?;
    let det_inv = det.inv().expect("unit determinant");
    let nums = cramer_columns(&m.lift_bigint(), b, m.modulus());
    Ok(nums.iter().map(|x| x.mul(&det_inv)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent oracle: determinant by cofactor expansion along row 0.
    fn cofactor_det(m: &ResidueMatrix) -> Residue {
        let n = m.rows();
        if n == 0 {
            return Residue::one(m.modulus());
        }
        if n == 1 {
            return m.get(0, 0);
        }
        let mut acc = Residue::zero(m.modulus());
        for j in 0..n {
            let mut minor = ResidueMatrix::zeros(n - 1, n - 1, m.modulus());
            for i in 1..n {
                let mut cj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    minor.set(i - 1, cj, m.get(i, k));
                    cj += 1;
                }
            }
            let term = m.get(0, j).mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        acc
    }

    fn random_matrix(rng: &mut StdRng, n: usize, ell: u64) -> ResidueMatrix {
        let mut m = ResidueMatrix::zeros(n, n, ell);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Residue::new(rng.gen_range(0..ell) as i128, ell));
            }
        }
        m
    }

    #[test]
    fn det_examples() {
        let m = ResidueMatrix::from_rows(&[vec![2]], 3);
        assert_eq!(det_mod(&m).unwrap().lift(), 2);
        for ell in [2u64, 5, 9] {
            for n in 1..=4 {
                let id = ResidueMatrix::identity(n, ell);
                assert_eq!(det_mod(&id).unwrap().lift(), 1 % ell);
            }
        }
    }

    #[test]
    fn det_agrees_with_cofactor_oracle() {
        let mut rng = StdRng::seed_from_u64(17);
        for ell in 2..=12u64 {
            for n in 1..=4usize {
                for _ in 0..25 {
                    let m = random_matrix(&mut rng, n, ell);
                    assert_eq!(det_mod(&m).unwrap(), cofactor_det(&m));
                }
            }
        }
    }

    #[test]
    fn invert_examples() {
        // 2 * 2 = 4 = 1 mod 3.
        let m = ResidueMatrix::from_rows(&[vec![2]], 3);
        assert_eq!(invert_mod(&m).unwrap().get(0, 0).lift(), 2);
        let id = ResidueMatrix::identity(4, 9);
        assert_eq!(invert_mod(&id).unwrap(), id);
        // A for n = 2, y = 1, z = 0, l = 4 is (1).
        let a = ResidueMatrix::from_rows(&[vec![1]], 4);
        let inv = invert_mod(&a).unwrap();
        assert_eq!(a.mul(&inv), ResidueMatrix::identity(1, 4));
    }

    #[test]
    fn invert_rejects_nonunit_det() {
        let m = ResidueMatrix::from_rows(&[vec![2]], 4);
        assert!(matches!(
            invert_mod(&m),
            Err(ZmodError::NonInvertible { det_lift: 2, modulus: 4 })
        ));
        let ns = ResidueMatrix::zeros(2, 3, 5);
        assert!(matches!(det_mod(&ns), Err(ZmodError::NonSquare { .. })));
    }

    #[test]
    fn solve_examples() {
        let id = ResidueMatrix::identity(3, 7);
        let b: Vec<Residue> = [3, 0, 6].iter().map(|&v| Residue::new(v, 7)).collect();
        assert_eq!(solve_mod(&id, &b).unwrap(), b);
        // 2x = 1 mod 3  =>  x = 2.
        let m = ResidueMatrix::from_rows(&[vec![2]], 3);
        let b = vec![Residue::one(3)];
        assert_eq!(solve_mod(&m, &b).unwrap()[0].lift(), 2);
    }

    #[test]
    fn random_invertible_roundtrips() {
        // 200 accepted instances per (size, modulus): M * inv(M) = Id and
        // solve(M, b) satisfies M x = b.
        let mut rng = StdRng::seed_from_u64(99);
        for ell in 2..=12u64 {
            for n in 1..=6usize {
                let mut accepted = 0;
                let mut tries = 0;
                while accepted < 200 && tries < 4000 {
                    tries += 1;
                    let m = random_matrix(&mut rng, n, ell);
                    let det = det_mod(&m).unwrap();
                    if gcd_with_modulus(det.lift(), ell) != 1 {
                        continue;
                    }
                    accepted += 1;
                    let inv = invert_mod(&m).unwrap();
                    let id = ResidueMatrix::identity(n, ell);
                    assert_eq!(m.mul(&inv), id);
                    assert_eq!(inv.mul(&m), id);
                    let b: Vec<Residue> = (0..n)
                        .map(|_| Residue::new(rng.gen_range(0..ell) as i128, ell))
                        .collect();
                    let x = solve_mod(&m, &b).unwrap();
                    assert_eq!(m.mul_vec(&x), b);
                }
                assert!(accepted >= 50, "too few invertible samples for n={n}, ell={ell}");
            }
        }
    }

    #[test]
    fn residue_canonicalization() {
        let r = Residue::new(-7, 5);
        assert_eq!(r.lift(), 3);
        assert_eq!(Residue::new(10, 5).lift(), 0);
        assert_eq!(gcd_with_modulus(0, 6), 6);
    }
}
