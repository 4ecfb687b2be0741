//! Dense exact linear algebra over a coefficient field.

use crate::coeff::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Vec<FieldElement>>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, data: vec![vec![field.zero(); cols]; rows] }
    }

    /// Panics unless all rows have length `cols`.
    pub fn from_rows(field: Field, cols: usize, data: Vec<Vec<FieldElement>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        ExactMatrix { field, rows: data.len(), cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let f = Field::Rational;
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r]
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.data
            .iter()
            .map(|row| {
                row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry scanning columns left to
    /// right and rows top to bottom.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&k| !self.data[k][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, pr);
            let inv = self.data[r][c].inverse().expect("pivot is nonzero");
            if !inv.is_one() {
                for v in self.data[r][c..].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
            }
            let pivot_row = self.data[r].clone();
            for k in 0..self.rows {
                if k == r || self.data[k][c].is_zero() {
                    continue;
                }
                let factor = self.data[k][c].clone();
                for (v, p) in self.data[k][c..].iter_mut().zip(&pivot_row[c..]) {
                    if !p.is_zero() {
                        *v = &*v - &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }
}

/// Basis of `{v : m v = 0}` in reduced echelon form.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<FieldElement>> {
    let field = m.field;
    let mut a = m.clone();
    let pivots = a.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); m.cols];
        v[f] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a.get(r, f);
        }
        vectors.push(v);
    }
    if vectors.is_empty() {
        return vectors;
    }
    let mut basis = ExactMatrix::from_rows(field, m.cols, vectors);
    let rank = basis.rref().len();
    basis.data.truncate(rank);
    basis.data
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(nullspace(&ExactMatrix::from_ints(&[&[1, 0], &[0, 1]])).is_empty());
    }

    #[test]
    fn zero_row_kernel_is_everything() {
        let ns = nullspace(&ExactMatrix::from_ints(&[&[0, 0, 0]]));
        assert_eq!(ns.len(), 3);
        let f = Field::Rational;
        for (k, v) in ns.iter().enumerate() {
            for (c, x) in v.iter().enumerate() {
                assert_eq!(*x, if c == k { f.one() } else { f.zero() });
            }
        }
    }

    #[test]
    fn hand_example() {
        let ns = nullspace(&ExactMatrix::from_ints(&[&[1, 1, 0], &[0, 0, 1]]));
        let f = Field::Rational;
        assert_eq!(ns, vec![vec![f.one(), f.from_int(-1), f.zero()]]);
    }

    #[test]
    fn rank_nullity() {
        let m = ExactMatrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&m);
        assert_eq!(m.rank() + ns.len(), 4);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }
}
