use super::Rational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::arg(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from small integer rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::arg("ragged rows"));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::arg("dimension mismatch in product"));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Square (or rectangular) matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix { rows: n, cols: n, data: vec![Rational::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::arg("ragged rows"));
        }
        let n = rows.len();
        Ok(RatMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::int(v)).collect())
                .collect(),
        )
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

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Leading principal `k x k` block.
    pub fn leading(&self, k: usize) -> RatMatrix {
        let mut out = RatMatrix::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols.max(1)).map(<[Rational]>::to_vec).collect()
    }

    /// Negative definiteness of a symmetric matrix: every pivot of a
    /// symmetric elimination without pivoting is negative.
    pub fn is_negative_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let n = self.rows;
        let mut a = self.clone();
        for k in 0..n {
            let p = a[(k, k)].clone();
            if !p.is_negative() {
                return false;
            }
            for i in k + 1..n {
                let f = &a[(i, k)] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        true
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(super::format_rational).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors, optionally with unimodular `u`, `v` such that
/// `u * m * v` is the diagonal matrix of `factors`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
}

impl SmithForm {
    /// Number of zero columns of the diagonal form, i.e. the free rank of
    /// the cokernel `Z^cols / rowspace`.
    pub fn free_rank(&self, cols: usize) -> usize {
        cols - self.factors.iter().filter(|f| !f.is_zero()).count()
    }

    /// Factors different from 0 and 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|f| !f.is_zero() && !f.is_one())
            .cloned()
            .collect()
    }
}

/// Invariant factors `d1 | d2 | ...` of `m`, zeros trailing; length is
/// `min(rows, cols)`.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    smith_impl(m, false).factors
}

impl IntMatrix {
    /// Smith form together with the transforming matrices.
    pub fn smith_with_transforms(&self) -> SmithForm {
        smith_impl(self, true)
    }
}

fn smith_impl(m: &IntMatrix, track: bool) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = track.then(|| IntMatrix::identity(r));
    let mut v = track.then(|| IntMatrix::identity(c));
    let n = r.min(c);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &a[(i, j)];
                if !x.is_zero()
                    && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }
        let mut clean = true;
        for i in t + 1..r {
            if a[(i, t)].is_zero() {
                continue;
            }
            let q = -(a[(i, t)].div_floor(&a[(t, t)]));
            a.add_row(i, t, &q);
            if let Some(u) = u.as_mut() {
                u.add_row(i, t, &q);
            }
            clean &= a[(i, t)].is_zero();
        }
        for j in t + 1..c {
            if a[(t, j)].is_zero() {
                continue;
            }
            let q = -(a[(t, j)].div_floor(&a[(t, t)]));
            a.add_col(j, t, &q);
            if let Some(v) = v.as_mut() {
                v.add_col(j, t, &q);
            }
            clean &= a[(t, j)].is_zero();
        }
        if !clean {
            continue;
        }
        let p = a[(t, t)].clone();
        let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&p)));
        if let Some(i) = offender {
            let one = BigInt::one();
            a.add_row(t, i, &one);
            if let Some(u) = u.as_mut() {
                u.add_row(t, i, &one);
            }
            continue;
        }
        if p.is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    let factors = (0..n).map(|i| a[(i, i)].clone()).collect();
    SmithForm { factors, u, v }
}

/// Exact determinant by Bareiss elimination on the matrix scaled to a
/// common denominator.
pub fn det_exact(m: &RatMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::arg(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let l = m
        .data
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut a: Vec<BigInt> = m
        .data
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    let idx = |i: usize, j: usize| i * n + j;
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) else {
                return Ok(Rational::zero());
            };
            for j in 0..n {
                a.swap(idx(k, j), idx(p, j));
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)]) / &prev;
                a[idx(i, j)] = v;
            }
        }
        prev = a[idx(k, k)].clone();
    }
    let mut det = a[idx(n - 1, n - 1)].clone();
    if negate {
        det = -det;
    }
    Ok(Rational::new(det, num_traits::pow(l, n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![-1, 2]]).unwrap();
        assert_eq!(smith_normal_form(&m), big(&[1, 4]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)), big(&[1, 1, 1]));
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(smith_normal_form(&m), big(&[1, 6]));
        let m = IntMatrix::from_rows(&[vec![0, 0], vec![0, 0], vec![4, 6]]).unwrap();
        assert_eq!(smith_normal_form(&m), big(&[2, 0]));
    }

    #[test]
    fn snf_transforms() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])
            .unwrap();
        let s = m.smith_with_transforms();
        assert_eq!(s.factors, big(&[2, 6, 12]));
        let d = s.u.unwrap().mul(&m).unwrap().mul(&s.v.unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.factors[i].clone() } else { BigInt::zero() };
                assert_eq!(d[(i, j)], want);
            }
        }
    }

    #[test]
    fn det_examples() {
        let m = RatMatrix::from_i64(&[vec![-3, 2], vec![2, -4]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), int(8));
        let m = RatMatrix::from_rows(vec![vec![rat(-1, 2)]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), rat(-1, 2));
        let m = RatMatrix::from_i64(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), int(0));
        let m = RatMatrix::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), int(-1));
        let m = RatMatrix::from_i64(&[vec![1, 2, 3]]).unwrap();
        assert!(matches!(det_exact(&m), Err(Error::Argument(_))));
    }

    #[test]
    fn negative_definite() {
        let m = RatMatrix::from_i64(&[vec![-2, 1], vec![1, -2]]).unwrap();
        assert!(m.is_negative_definite());
        let m = RatMatrix::from_i64(&[vec![-1, 2], vec![2, -1]]).unwrap();
        assert!(!m.is_negative_definite());
    }
}
