//! Dense exact linear algebra over ℚ(ζ_ℓ).
//!
//! Matrices here are small (module dimensions at desk scale) but the
//! arithmetic is exact, so every routine skips zero entries rather than
//! multiplying through them.

use crate::cyclotomic::CycElem;

/// Row-major matrix over ℚ(ζ_ℓ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    ell: u64,
    data: Vec<CycElem>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize, ell: u64) -> Self {
        CycMatrix {
            rows,
            cols,
            ell,
            data: vec![CycElem::zero(ell); rows * cols],
        }
    }

    pub fn identity(n: usize, ell: u64) -> Self {
        let mut m = CycMatrix::zeros(n, n, ell);
        for i in 0..n {
            m.set(i, i, CycElem::one(ell));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycElem>>, ell: u64) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        CycMatrix {
            rows: r,
            cols: c,
            ell,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<CycElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            ell: self.ell,
            data,
        }
    }

    pub fn sub(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            ell: self.ell,
            data,
        }
    }

    pub fn scale(&self, s: &CycElem) -> CycMatrix {
        let data = self
            .data
            .iter()
            .map(|a| if a.is_zero() { a.clone() } else { a.mul(s) })
            .collect();
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            ell: self.ell,
            data,
        }
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = CycMatrix::zeros(self.rows, other.cols, self.ell);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycElem]) -> Vec<CycElem> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![CycElem::zero(self.ell); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut t = CycMatrix::zeros(self.cols, self.rows, self.ell);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Rank via a scratch reduced row echelon form.
    pub fn rank(&self) -> usize {
        let mut sp = EchelonSpace::new(self.cols, self.ell);
        for i in 0..self.rows {
            sp.insert(self.row(i).to_vec());
        }
        sp.rank()
    }

    /// Inverse over the field ℚ(ζ_ℓ), if square and nonsingular.
    pub fn invert(&self) -> Option<CycMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = CycMatrix::zeros(n, 2 * n, self.ell);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycElem::one(self.ell));
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        let mut inv = CycMatrix::zeros(n, n, self.ell);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j);
                if !v.is_zero() {
                    let scaled = v.mul(&inv);
                    self.set(r, j, scaled);
                }
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(r, j);
                    if v.is_zero() {
                        continue;
                    }
                    let nv = self.get(i, j).sub(&f.mul(v));
                    self.set(i, j, nv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right null space {x : self * x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<CycElem>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![CycElem::zero(self.ell); self.cols];
            x[free] = CycElem::one(self.ell);
            for (col, r) in pivot_set.iter().enumerate() {
                if let Some(r) = r {
                    x[col] = m.get(*r, free).neg();
                }
            }
            basis.push(x);
        }
        basis
    }
}

// ---- Echelon space with optional raw-coordinate tracking ----

/// An incrementally built subspace of ℚ(ζ_ℓ)^n kept in reduced row echelon
/// form. With tracking on, each echelon row also carries its expression in
/// terms of the accepted raw insertions, so a vector can be rewritten in the
/// original (unechelonized) basis — spin modules need this because their
/// natural basis is the generator ladder, not the echelon rows.
#[derive(Debug, Clone)]
pub struct EchelonSpace {
    ncols: usize,
    ell: u64,
    rows: Vec<Vec<CycElem>>,
    pivots: Vec<usize>,
    track: Option<Vec<Vec<CycElem>>>,
}

impl EchelonSpace {
    pub fn new(ncols: usize, ell: u64) -> Self {
        EchelonSpace {
            ncols,
            ell,
            rows: Vec::new(),
            pivots: Vec::new(),
            track: None,
        }
    }

    pub fn new_tracked(ncols: usize, ell: u64) -> Self {
        let mut s = Self::new(ncols, ell);
        s.track = Some(Vec::new());
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical RREF rows (unique per subspace).
    pub fn rows(&self) -> &[Vec<CycElem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &mut Vec<CycElem>) -> Vec<CycElem> {
        let mut coeffs = vec![CycElem::zero(self.ell); self.rows.len()];
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, rv) in self.rows[r].iter().enumerate() {
                if !rv.is_zero() {
                    v[j] = v[j].sub(&c.mul(rv));
                }
            }
            coeffs[r] = c;
        }
        coeffs
    }

    /// Insert a vector; returns true when it was independent (accepted).
    pub fn insert(&mut self, v: Vec<CycElem>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v = v;
        let coeffs = self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        // Build tracking row: e_new - sum coeffs_r * track_r, then normalize.
        let new_track = self.track.as_ref().map(|tr| {
            let mut t = vec![CycElem::zero(self.ell); self.rows.len() + 1];
            t[self.rows.len()] = CycElem::one(self.ell);
            for (r, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, old) in tr[r].iter().enumerate() {
                    if !old.is_zero() {
                        t[k] = t[k].sub(&c.mul(old));
                    }
                }
            }
            t
        });
        let inv = v[pivot].inv().expect("nonzero pivot");
        let mut row: Vec<CycElem> = v
            .into_iter()
            .map(|e| if e.is_zero() { e } else { e.mul(&inv) })
            .collect();
        row[pivot] = CycElem::one(self.ell);
        let new_track = new_track.map(|t| {
            t.into_iter()
                .map(|e| if e.is_zero() { e } else { e.mul(&inv) })
                .collect::<Vec<_>>()
        });
        // Back-substitute into existing rows to keep full RREF.
        for r in 0..self.rows.len() {
            if self.rows[r][pivot].is_zero() {
                continue;
            }
            let f = self.rows[r][pivot].clone();
            for j in 0..self.ncols {
                if row[j].is_zero() {
                    continue;
                }
                self.rows[r][j] = self.rows[r][j].sub(&f.mul(&row[j]));
            }
            if let (Some(tr), Some(nt)) = (self.track.as_mut(), new_track.as_ref()) {
                // Track rows over raw indices; pad to current width first.
                let width = nt.len();
                let old = &mut tr[r];
                old.resize(width, CycElem::zero(self.ell));
                for k in 0..width {
                    if !nt[k].is_zero() {
                        old[k] = old[k].sub(&f.mul(&nt[k]));
                    }
                }
            }
        }
        if let (Some(tr), Some(nt)) = (self.track.as_mut(), new_track) {
            for old in tr.iter_mut() {
                old.resize(nt.len(), CycElem::zero(self.ell));
            }
            tr.push(nt);
        }
        // Keep rows sorted by pivot column.
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, row);
        if let Some(tr) = self.track.as_mut() {
            let t = tr.pop().unwrap();
            tr.insert(pos, t);
        }
        true
    }

    /// Coordinates of `v` over the RREF rows, or None when outside the span.
    pub fn coords_in_rref(&self, v: &[CycElem]) -> Option<Vec<CycElem>> {
        let mut w = v.to_vec();
        let coeffs = self.reduce(&mut w);
        if w.iter().all(|e| e.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Coordinates of `v` over the accepted raw insertions (tracked spaces).
    pub fn coords_in_raw(&self, v: &[CycElem]) -> Option<Vec<CycElem>> {
        let tr = self.track.as_ref().expect("coords_in_raw needs tracking");
        let coeffs = self.coords_in_rref(v)?;
        let n = self.rows.len();
        let mut out = vec![CycElem::zero(self.ell); n];
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, t) in tr[r].iter().enumerate() {
                if !t.is_zero() {
                    out[k] = out[k].add(&c.mul(t));
                }
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[CycElem]) -> bool {
        self.coords_in_rref(v).is_some()
    }

    /// Two spaces are equal iff their canonical RREF rows coincide.
    pub fn same_space(&self, other: &EchelonSpace) -> bool {
        self.pivots == other.pivots && self.rows == other.rows
    }
}
