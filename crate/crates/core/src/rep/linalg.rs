//! Dense exact linear algebra over a [`Field`].

use super::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Mat { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<E> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols, "ragged rows");
        Mat { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [E] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, data }
    }

    pub fn from_columns(columns: &[Vec<E>], rows: usize, zero: E) -> Self {
        let mut m = Mat::filled(rows, columns.len(), zero);
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Rows `rows` and columns `cols` of `self`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        Mat { rows: rows.len(), cols: cols.len(), data }
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F::Elem> {
    Mat::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = zeros(f, n, n);
    for i in 0..n {
        m.set(i, i, f.one());
    }
    m
}

pub fn is_zero_mat<F: Field>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

/// `dst += c * src`
pub fn axpy<F: Field>(f: &F, dst: &mut [F::Elem], c: &F::Elem, src: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !f.is_zero(s) {
            *d = f.mul_add(c, s, d);
        }
    }
}

pub fn scale_in_place<F: Field>(f: &F, v: &mut [F::Elem], c: &F::Elem) {
    for x in v.iter_mut() {
        *x = f.mul(x, c);
    }
}

pub fn mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows, "shape mismatch in product");
    let mut out = zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        let out_row = &mut out.data[i * b.cols..(i + 1) * b.cols];
        for k in 0..a.cols {
            let aik = &a.data[i * a.cols + k];
            if !f.is_zero(aik) {
                axpy(f, out_row, aik, &b.data[k * b.cols..(k + 1) * b.cols]);
            }
        }
    }
    out
}

pub fn mul_vec<F: Field>(f: &F, a: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "shape mismatch in product");
    (0..a.rows)
        .map(|r| {
            a.row(r).iter().zip(v).fold(f.zero(), |acc, (x, y)| {
                if f.is_zero(x) || f.is_zero(y) {
                    acc
                } else {
                    f.mul_add(x, y, &acc)
                }
            })
        })
        .collect()
}

pub fn add<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect();
    Mat { rows: a.rows, cols: a.cols, data }
}

pub fn sub<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let data = a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect();
    Mat { rows: a.rows, cols: a.cols, data }
}

pub fn scale<F: Field>(f: &F, a: &Mat<F::Elem>, c: &F::Elem) -> Mat<F::Elem> {
    let data = a.data.iter().map(|x| f.mul(x, c)).collect();
    Mat { rows: a.rows, cols: a.cols, data }
}

/// Reduced row echelon form and its pivot columns.
pub fn rref<F: Field>(f: &F, a: &Mat<F::Elem>) -> (Mat<F::Elem>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if pr != r {
            for k in 0..m.cols {
                m.data.swap(pr * m.cols + k, r * m.cols + k);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
        scale_in_place(f, m.row_mut(r), &inv);
        let pivot_row = m.row(r).to_vec();
        for i in 0..m.rows {
            if i != r {
                let factor = f.neg(m.get(i, c));
                if !f.is_zero(&factor) {
                    axpy(f, m.row_mut(i), &factor, &pivot_row);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(f: &F, a: &Mat<F::Elem>) -> usize {
    rref(f, a).1.len()
}

/// Basis of `{v : a v = 0}`, one vector per free column.
pub fn nullspace<F: Field>(f: &F, a: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, a);
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); a.cols];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            v
        })
        .collect()
}

pub fn inverse<F: Field>(f: &F, a: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    assert_eq!(a.rows, a.cols, "inverse of a non-square matrix");
    let n = a.rows;
    let mut aug = zeros(f, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, f.one());
    }
    if n == 0 {
        return Some(aug);
    }
    let (r, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(r.submatrix(&rows, &cols))
}

/// A subspace held in semi-echelon form: each stored row has a leading 1 at
/// its pivot, and every row is zero at the pivots of the rows before it.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows; returns the coefficients used and
    /// the residue, so that `v = sum coeffs[i] * rows[i] + residue`.
    pub fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !f.is_zero(&c) {
                axpy(f, &mut w, &f.neg(&c), row);
            }
            coeffs.push(c);
        }
        (coeffs, w)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let (_, w) = self.reduce(v);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Inserts a residue returned by [`Echelon::reduce`]. Returns the inverse
    /// of the leading entry used to normalize it, or `None` if it is zero.
    pub fn insert_residue(&mut self, mut w: Vec<F::Elem>) -> Option<F::Elem> {
        let f = &self.field;
        let p = w.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&w[p]).expect("nonzero");
        scale_in_place(f, &mut w, &inv);
        self.rows.push(w);
        self.pivots.push(p);
        Some(inv)
    }

    /// Adds `v` to the span; true if the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let (_, w) = self.reduce(v);
        self.insert_residue(w).is_some()
    }

    pub fn to_mat(&self) -> Mat<F::Elem> {
        Mat::from_rows(self.rows.clone(), self.dim)
    }
}

/// The smallest subspace containing `seeds` and stable under `gens`.
pub fn spin<F: Field>(f: &F, gens: &[Mat<F::Elem>], seeds: &[Vec<F::Elem>], dim: usize) -> Echelon<F> {
    let mut space = Echelon::new(f.clone(), dim);
    for s in seeds {
        space.insert(s);
    }
    let mut next = 0;
    while next < space.len() && space.len() < dim {
        let v = space.rows[next].clone();
        for g in gens {
            space.insert(&mul_vec(f, g, &v));
            if space.len() == dim {
                break;
            }
        }
        next += 1;
    }
    space
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn fp(p: usize) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(f: &PrimeField, rows: &[&[i64]]) -> Mat<u32> {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect(), cols)
    }

    #[test]
    fn rank_and_nullspace() {
        let f = fp(5);
        let a = mat(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&f, &a), 2);
        let ns = nullspace(&f, &a);
        assert_eq!(ns.len(), 1);
        assert!(mul_vec(&f, &a, &ns[0]).iter().all(|x| *x == 0));
    }

    #[test]
    fn inverse_round_trip() {
        let f = fp(7);
        let a = mat(&f, &[&[1, 2], &[3, 4]]);
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mul(&f, &a, &inv), identity(&f, 2));
        assert!(inverse(&f, &mat(&f, &[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn rational_rank() {
        let q = Rationals;
        let a = Mat::from_rows(
            vec![vec![q.from_int(2), q.from_int(4)], vec![q.from_int(1), q.from_int(2)]],
            2,
        );
        assert_eq!(rank(&q, &a), 1);
    }

    #[test]
    fn echelon_reduce_reconstructs() {
        let f = fp(5);
        let mut e = Echelon::new(f.clone(), 3);
        e.insert(&[1, 2, 3]);
        e.insert(&[0, 1, 4]);
        let v = vec![2, 1, 0];
        let (coeffs, res) = e.reduce(&v);
        let mut back = res.clone();
        for (c, row) in coeffs.iter().zip(e.rows()) {
            axpy(&f, &mut back, c, row);
        }
        assert_eq!(back, v);
    }

    #[test]
    fn spin_cyclic_shift() {
        let f = fp(3);
        let shift = mat(&f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(spin(&f, std::slice::from_ref(&shift), &[vec![1, 0, 0]], 3).len(), 3);
        assert_eq!(spin(&f, &[shift], &[vec![1, 1, 1]], 3).len(), 1);
    }

    fn arb_mat(p: u32, n: usize) -> impl Strategy<Value = Mat<u32>> {
        proptest::collection::vec(0..p, n * n).prop_map(move |d| Mat { rows: n, cols: n, data: d })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in arb_mat(5, 4)) {
            let f = fp(5);
            prop_assert_eq!(rank(&f, &a) + nullspace(&f, &a).len(), 4);
            prop_assert_eq!(rank(&f, &a), rank(&f, &a.transpose()));
        }

        #[test]
        fn product_associates(a in arb_mat(3, 3), b in arb_mat(3, 3), c in arb_mat(3, 3)) {
            let f = fp(3);
            prop_assert_eq!(mul(&f, &mul(&f, &a, &b), &c), mul(&f, &a, &mul(&f, &b, &c)));
        }
    }
}
