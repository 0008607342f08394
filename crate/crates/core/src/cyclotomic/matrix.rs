use super::number::CycNum;
use crate::error::{HopfError, Result};
use std::fmt;

/// Dense row-major matrix over a single cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<CycNum>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> CycMatrix {
        CycMatrix {
            rows,
            cols,
            conductor,
            data: vec![CycNum::zero(conductor); rows * cols],
        }
    }

    pub fn identity(n: usize, conductor: u32) -> CycMatrix {
        let mut m = Self::zeros(n, n, conductor);
        for i in 0..n {
            m.set(i, i, CycNum::one(conductor));
        }
        m
    }

    pub fn scalar(n: usize, c: &CycNum) -> CycMatrix {
        let mut m = Self::zeros(n, n, c.conductor());
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds from rows; every entry is lifted to `conductor`.
    pub fn from_rows(rows: Vec<Vec<CycNum>>, conductor: u32) -> CycMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.into_iter().map(|x| x.lift(conductor)));
        }
        CycMatrix {
            rows: r,
            cols: c,
            conductor,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        let v = if v.conductor() == self.conductor {
            v
        } else {
            v.lift(self.conductor)
        };
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycNum] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<CycNum> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn lift(&self, conductor: u32) -> CycMatrix {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor,
            data: self.data.iter().map(|x| x.lift(conductor)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.conductor);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let (a, b) = if self.conductor == other.conductor {
            (None, None)
        } else {
            let l = num_integer::lcm(self.conductor, other.conductor);
            (Some(self.lift(l)), Some(other.lift(l)))
        };
        let a = a.as_ref().unwrap_or(self);
        let b = b.as_ref().unwrap_or(other);
        let mut out = Self::zeros(a.rows, b.cols, a.conductor);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(k, j);
                    if !y.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(x * y);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data,
        }
    }

    pub fn sub(&self, other: &CycMatrix) -> CycMatrix {
        self.add(&other.scale(&CycNum::from_int(self.conductor, -1)))
    }

    pub fn scale(&self, c: &CycNum) -> CycMatrix {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = CycNum::zero(self.conductor);
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; index (i, j) of the result is i·dim(other) + j.
    pub fn kron(&self, other: &CycMatrix) -> CycMatrix {
        let mut out = Self::zeros(
            self.rows * other.rows,
            self.cols * other.cols,
            self.conductor,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().map(|x| x.lift(self.conductor)));
        CycMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            conductor: self.conductor,
            data,
        }
    }

    /// Reduced row echelon form (leftmost pivots) and the pivot columns.
    pub fn rref(&self) -> (CycMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = &m.data[idx] * &inv;
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pr = m.get(r, j).clone();
                    if !pr.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] = &m.data[idx] - &(&f * &pr);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced-echelon basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<CycNum>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![CycNum::zero(self.conductor); self.cols];
            v[f] = CycNum::one(self.conductor);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            basis.push(v);
        }
        basis
    }

    /// A solution x of self·x = b.
    pub fn solve(&self, b: &[CycNum]) -> Result<Vec<CycNum>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * aug.cols + j] = self.get(i, j).clone();
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(HopfError::InconsistentSystem);
        }
        let mut x = vec![CycNum::zero(self.conductor); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(x)
    }

    /// Basis of rowspace(self) ∩ rowspace(other), as rows.
    pub fn row_space_intersection(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.cols);
        // x·A = y·B  ⇔  (x, −y) in the left kernel of [A; B]
        let stacked = self.vstack(other);
        let left = stacked.transpose().kernel_basis();
        let mut rows = Vec::new();
        for k in left {
            let x = &k[..self.rows];
            let v: Vec<CycNum> = (0..self.cols)
                .map(|c| {
                    let mut acc = CycNum::zero(self.conductor);
                    for (i, xi) in x.iter().enumerate() {
                        if !xi.is_zero() {
                            acc += &(xi * self.get(i, c));
                        }
                    }
                    acc
                })
                .collect();
            rows.push(v);
        }
        if rows.is_empty() {
            return Self::zeros(0, self.cols, self.conductor);
        }
        let m = Self::from_rows(rows, self.conductor);
        let (r, pivots) = m.rref();
        let keep: Vec<Vec<CycNum>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        if keep.is_empty() {
            Self::zeros(0, self.cols, self.conductor)
        } else {
            Self::from_rows(keep, self.conductor)
        }
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
