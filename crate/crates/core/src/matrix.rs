//! Exact integer and rational linear algebra.
//!
//! Hermite and Smith normal forms over the integers, saturated integer
//! kernels, exact determinants and rational linear solving. All entries
//! are arbitrary precision, so there are no overflow semantics to worry
//! about; the trade-off is speed, which is irrelevant at the instance
//! sizes this crate targets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

// ---------------------------------------------------------------------------
// small vector helpers

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_vec(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_vec(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn scale_vec(k: &Int, a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| k * x).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn gcd_vec(a: &[Int]) -> Int {
    a.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides out the gcd of the entries; the zero vector is left alone.
/// The sign is preserved.
pub fn primitive_vec(a: &[Int]) -> Vec<Int> {
    let g = gcd_vec(a);
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

// ---------------------------------------------------------------------------
// integer matrices

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix rejected at construction");
        assert_eq!(entries.len(), rows * cols);
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        IntMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
    }

    pub fn from_cols(cols: Vec<Vec<Int>>) -> Self {
        IntMatrix::from_rows(cols).transpose()
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(rows.iter().map(|r| int_vec(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Int {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.at(r, k) * other.at(k, c);
                }
                *m.at_mut(r, c) = acc;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(dst, c) + k * self.at(src, c);
            *self.at_mut(dst, c) = v;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, c).clone();
            *self.at_mut(r, c) = v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, dst) + k * self.at(r, src);
            *self.at_mut(r, dst) = v;
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.at(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Row-style Hermite normal form. Returns `(H, U)` with `H = U * A`,
    /// `U` unimodular, pivot entries positive and entries above each
    /// pivot reduced into `[0, pivot)`.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // gcd-reduce the column below pivot_row until one nonzero remains
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..self.rows {
                    if !h.at(r, col).is_zero() {
                        best = match best {
                            None => Some(r),
                            Some(b) if h.at(r, col).abs() < h.at(b, col).abs() => Some(r),
                            keep => keep,
                        };
                    }
                }
                let Some(b) = best else { break };
                h.swap_rows(pivot_row, b);
                u.swap_rows(pivot_row, b);
                let mut done = true;
                for r in pivot_row + 1..self.rows {
                    if !h.at(r, col).is_zero() {
                        let q = -h.at(r, col).div_floor(h.at(pivot_row, col));
                        h.add_row_multiple(r, pivot_row, &q);
                        u.add_row_multiple(r, pivot_row, &q);
                        if !h.at(r, col).is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h.at(pivot_row, col).is_zero() {
                continue;
            }
            if h.at(pivot_row, col).is_negative() {
                h.negate_row(pivot_row);
                u.negate_row(pivot_row);
            }
            // reduce entries above the pivot into [0, pivot)
            for r in 0..pivot_row {
                let q = -h.at(r, col).div_floor(h.at(pivot_row, col));
                h.add_row_multiple(r, pivot_row, &q);
                u.add_row_multiple(r, pivot_row, &q);
            }
            pivot_row += 1;
        }
        debug_assert!(u.is_unimodular());
        (h, u)
    }

    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf();
        (0..h.rows).filter(|&r| !is_zero_vec(h.row(r))).count()
    }

    /// Smith normal form `U * A * V = D` with non-negative invariant
    /// factors sorted by divisibility.
    pub fn snf(&self) -> SmithDecomposition {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);

        let mut t = 0;
        while t < n {
            // pick the absolutely smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for r in t..self.rows {
                for c in t..self.cols {
                    if !d.at(r, c).is_zero() {
                        best = match best {
                            None => Some((r, c)),
                            Some((br, bc)) if d.at(r, c).abs() < d.at(br, bc).abs() => Some((r, c)),
                            keep => keep,
                        };
                    }
                }
            }
            let Some((pr, pc)) = best else { break };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            loop {
                for r in t + 1..self.rows {
                    if !d.at(r, t).is_zero() {
                        gcd_row_step(&mut d, &mut u, t, r);
                    }
                }
                let mut row_clear = true;
                for c in t + 1..self.cols {
                    if !d.at(t, c).is_zero() {
                        gcd_col_step(&mut d, &mut v, t, c);
                        row_clear = false;
                    }
                }
                let col_clear = (t + 1..self.rows).all(|r| d.at(r, t).is_zero());
                if row_clear && col_clear {
                    break;
                }
            }
            t += 1;
        }

        for i in 0..n {
            if d.at(i, i).is_negative() {
                d.negate_row(i);
                u.negate_row(i);
            }
        }

        // enforce the divisibility chain d_1 | d_2 | ...
        loop {
            let mut fixed = true;
            for i in 0..n {
                for j in i + 1..n {
                    let di = d.at(i, i).clone();
                    let dj = d.at(j, j).clone();
                    if dj.is_zero() && di.is_zero() {
                        continue;
                    }
                    if di.is_zero() || (!dj.is_zero() && !(&dj % &di).is_zero()) {
                        // fold column j into column i and rediagonalize the pair
                        d.add_col_multiple(i, j, &Int::one());
                        v.add_col_multiple(i, j, &Int::one());
                        gcd_row_step(&mut d, &mut u, i, j);
                        // the row combination reintroduced an entry at (i, j)
                        let q = -(d.at(i, j) / d.at(i, i));
                        d.add_col_multiple(j, i, &q);
                        v.add_col_multiple(j, i, &q);
                        debug_assert!(d.at(i, j).is_zero());
                        if d.at(i, i).is_negative() {
                            d.negate_row(i);
                            u.negate_row(i);
                        }
                        if d.at(j, j).is_negative() {
                            d.negate_row(j);
                            u.negate_row(j);
                        }
                        fixed = false;
                    }
                }
            }
            if fixed {
                break;
            }
        }

        debug_assert!(u.is_unimodular() && v.is_unimodular());
        debug_assert_eq!(u.mul(self).mul(&v), d);
        SmithDecomposition { d, u, v }
    }

    /// Basis of the saturated integer kernel `{v : A v = 0}`, via SNF.
    /// A full-rank square matrix yields the empty list.
    pub fn kernel_basis(&self) -> Vec<Vec<Int>> {
        let smith = self.snf();
        let n = self.rows.min(self.cols);
        let rank = (0..n).filter(|&i| !smith.d.at(i, i).is_zero()).count();
        let mut basis = Vec::new();
        for c in rank..self.cols {
            let v = smith.v.col(c);
            debug_assert!(is_zero_vec(&self.mul_vec(&v)));
            basis.push(v);
        }
        basis
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Replace rows (i, j) by a unimodular combination so that entry (j, t)
/// becomes zero and entry (i, t) the gcd; t is the pivot column = i here
/// only when called with that intent, so take the column of interest as
/// the pivot's column index i.
fn gcd_row_step(d: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize) {
    let a = d.at(i, i).clone();
    let b = d.at(j, i).clone();
    if b.is_zero() {
        return;
    }
    if !a.is_zero() && (&b % &a).is_zero() {
        let q = -(&b / &a);
        d.add_row_multiple(j, i, &q);
        u.add_row_multiple(j, i, &q);
        return;
    }
    let e = a.extended_gcd(&b);
    let (g, x, y) = (e.gcd, e.x, e.y);
    let (ca, cb) = (&a / &g, &b / &g);
    apply_two_row_op(d, i, j, &x, &y, &-cb.clone(), &ca);
    apply_two_row_op(u, i, j, &x, &y, &-cb, &ca);
}

fn gcd_col_step(d: &mut IntMatrix, v: &mut IntMatrix, i: usize, c: usize) {
    let a = d.at(i, i).clone();
    let b = d.at(i, c).clone();
    if b.is_zero() {
        return;
    }
    if !a.is_zero() && (&b % &a).is_zero() {
        let q = -(&b / &a);
        d.add_col_multiple(c, i, &q);
        v.add_col_multiple(c, i, &q);
        return;
    }
    let e = a.extended_gcd(&b);
    let (g, x, y) = (e.gcd, e.x, e.y);
    let (ca, cb) = (&a / &g, &b / &g);
    apply_two_col_op(d, i, c, &x, &y, &-cb.clone(), &ca);
    apply_two_col_op(v, i, c, &x, &y, &-cb, &ca);
}

/// rows (i, j) <- (x*row_i + y*row_j, p*row_i + q*row_j); the caller
/// guarantees the 2x2 transform has determinant +-1.
fn apply_two_row_op(m: &mut IntMatrix, i: usize, j: usize, x: &Int, y: &Int, p: &Int, q: &Int) {
    for c in 0..m.cols {
        let a = m.at(i, c).clone();
        let b = m.at(j, c).clone();
        *m.at_mut(i, c) = x * &a + y * &b;
        *m.at_mut(j, c) = p * &a + q * &b;
    }
}

fn apply_two_col_op(m: &mut IntMatrix, i: usize, j: usize, x: &Int, y: &Int, p: &Int, q: &Int) {
    for r in 0..m.rows {
        let a = m.at(r, i).clone();
        let b = m.at(r, j).clone();
        *m.at_mut(r, i) = x * &a + y * &b;
        *m.at_mut(r, j) = p * &a + q * &b;
    }
}

/// `U * A * V = D` with unimodular transforms and the invariant factors
/// on the diagonal of `D`, sorted by divisibility.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.at(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// rational matrices and solving

/// Vector of exact rationals. `BigRational` keeps every coordinate in
/// lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn from_ints(v: &[Int]) -> Self {
        RatVector(v.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RatVector(v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_ints(&self) -> Option<Vec<Int>> {
        self.0
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of exact linear solving: underdetermined systems are reported
/// distinctly from inconsistent ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(RatVector),
    Inconsistent,
    Underdetermined,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix rejected at construction");
        assert_eq!(entries.len(), rows * cols);
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        RatMatrix::new(rows.len(), cols, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<Int>]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    /// Solve `A x = b` exactly by Gaussian elimination.
    pub fn solve_exact(&self, b: &RatVector) -> SolveOutcome {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut m = self.clone();
        let mut rhs = b.0.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    let tmp = m.at(p, c).clone();
                    *m.at_mut(p, c) = m.at(row, c).clone();
                    *m.at_mut(row, c) = tmp;
                }
                rhs.swap(p, row);
            }
            let inv = m.at(row, col).clone();
            for r in 0..self.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col) / &inv;
                    for c in col..self.cols {
                        let v = m.at(r, c) - &factor * m.at(row, c);
                        *m.at_mut(r, c) = v;
                    }
                    rhs[r] = &rhs[r] - &factor * &rhs[row];
                }
            }
            pivot_cols.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        // rows beyond the pivot rank must have zero rhs
        for r in row..self.rows {
            if !rhs[r].is_zero() {
                return SolveOutcome::Inconsistent;
            }
        }
        if pivot_cols.len() < self.cols {
            return SolveOutcome::Underdetermined;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for &(r, c) in &pivot_cols {
            x[c] = &rhs[r] / m.at(r, c);
        }
        SolveOutcome::Unique(RatVector(x))
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hnf_reduced(h: &IntMatrix) -> bool {
        // pivot entries positive, entries above each pivot in [0, pivot)
        let mut prev_col = None;
        for r in 0..h.rows() {
            let Some(c) = (0..h.cols()).find(|&c| !h.at(r, c).is_zero()) else {
                // zero rows must come last
                return (r..h.rows()).all(|rr| is_zero_vec(h.row(rr)));
            };
            if let Some(pc) = prev_col {
                if c <= pc {
                    return false;
                }
            }
            prev_col = Some(c);
            if h.at(r, c).is_negative() {
                return false;
            }
            for above in 0..r {
                if h.at(above, c).is_negative() || h.at(above, c) >= h.at(r, c) {
                    return false;
                }
            }
        }
        true
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
        IntMatrix::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| int(rng.gen_range(-bound..=bound))).collect())
                .collect(),
        )
    }

    fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let k = int(rng.gen_range(-2..=2i64));
            u.add_row_multiple(i, j, &k);
            if rng.gen_bool(0.3) {
                u.swap_rows(i, j);
            }
        }
        assert!(u.is_unimodular());
        u
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(3);
        let (h, u) = id.hnf();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_small_example() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[0, 3]]);
        let (h, u) = a.hnf();
        assert_eq!(h, IntMatrix::from_i64(&[&[2, 1], &[0, 3]]));
        assert!(u.is_unimodular());
        assert_eq!(u.mul(&a), h);
        assert!(hnf_reduced(&h));
    }

    #[test]
    fn hnf_row_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let a = random_matrix(&mut rng, 4, 3, 6);
            let mut rows: Vec<Vec<Int>> = (0..4).map(|r| a.row(r).to_vec()).collect();
            rows.reverse();
            rows.swap(0, 2);
            let b = IntMatrix::from_rows(rows);
            assert_eq!(a.hnf().0, b.hnf().0);
        }
    }

    #[test]
    fn hnf_unimodular_premultiplication_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let a = random_matrix(&mut rng, 3, 4, 5);
            let g = random_unimodular(&mut rng, 3);
            let (h, u) = a.hnf();
            assert_eq!(u.mul(&a), h);
            assert!(hnf_reduced(&h));
            let (h2, _) = g.mul(&a).hnf();
            assert_eq!(h, h2);
        }
    }

    #[test]
    fn snf_identity() {
        let id = IntMatrix::identity(4);
        assert_eq!(id.snf().d, id);
    }

    #[test]
    fn snf_small_example() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[0, 3]]);
        let s = a.snf();
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.invariant_factors(), int_vec(&[1, 6]));
        // determinant preserved up to sign
        assert_eq!(a.det().abs(), int(6));
    }

    #[test]
    fn snf_reeve_simplex_index_two() {
        // homogenized point matrix of conv{0, e1, e2, (1,1,2)}
        let a = IntMatrix::from_i64(&[
            &[0, 1, 0, 1],
            &[0, 0, 1, 1],
            &[0, 0, 0, 2],
            &[1, 1, 1, 1],
        ]);
        let s = a.snf();
        assert_eq!(s.invariant_factors(), int_vec(&[1, 1, 1, 2]));
    }

    #[test]
    fn snf_random_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let a = random_matrix(&mut rng, 4, 5, 8);
            let s = a.snf();
            assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
            let f = s.invariant_factors();
            for w in f.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken: {f:?}");
            }
            let g = random_unimodular(&mut rng, 4);
            assert_eq!(g.mul(&a).snf().d, s.d);
        }
    }

    #[test]
    fn kernel_invertible_is_empty() {
        let a = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert!(a.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_small_example() {
        let a = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = primitive_vec(&k[0]);
        let expected = int_vec(&[1, -2, 1]);
        assert!(v == expected || v == neg_vec(&expected));
    }

    #[test]
    fn kernel_homogenized_segment() {
        // points (0,1), (1,1), (2,1) as columns
        let a = IntMatrix::from_i64(&[&[0, 1, 2], &[1, 1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = primitive_vec(&k[0]);
        let expected = int_vec(&[1, -2, 1]);
        assert!(v == expected || v == neg_vec(&expected));
    }

    #[test]
    fn kernel_is_saturated() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 2, 5, 4);
            let basis = a.kernel_basis();
            for v in &basis {
                assert!(is_zero_vec(&a.mul_vec(v)));
            }
            if basis.is_empty() {
                continue;
            }
            // random integer kernel vectors must be Z-combinations of the basis:
            // stack basis as rows, any kernel vector must keep the HNF unchanged
            let h0 = IntMatrix::from_rows(basis.clone()).hnf().0;
            for _ in 0..5 {
                let coeffs: Vec<Int> = (0..basis.len()).map(|_| int(rng.gen_range(-3..=3))).collect();
                let mut w = vec![Int::zero(); a.cols()];
                for (c, v) in coeffs.iter().zip(&basis) {
                    w = add_vec(&w, &scale_vec(c, v));
                }
                let mut rows = basis.clone();
                rows.push(w);
                let h1 = IntMatrix::from_rows(rows).hnf().0;
                for r in 0..h0.rows() {
                    assert_eq!(h0.row(r), h1.row(r));
                }
                assert!(is_zero_vec(h1.row(h1.rows() - 1)));
            }
        }
    }

    #[test]
    fn solve_identity() {
        let a = IntMatrix::identity(3).to_rational();
        let b = RatVector::from_i64(&[3, -1, 2]);
        assert_eq!(a.solve_exact(&b), SolveOutcome::Unique(b));
    }

    #[test]
    fn solve_inconsistent_pair() {
        // x = 0 and x = 1
        let a = RatMatrix::from_int_rows(&[int_vec(&[1]), int_vec(&[1])]);
        let b = RatVector::from_i64(&[0, 1]);
        assert_eq!(a.solve_exact(&b), SolveOutcome::Inconsistent);
    }

    #[test]
    fn solve_underdetermined() {
        let a = RatMatrix::from_int_rows(&[int_vec(&[1, 1])]);
        let b = RatVector::from_i64(&[2]);
        assert_eq!(a.solve_exact(&b), SolveOutcome::Underdetermined);
    }

    #[test]
    fn solve_supporting_hyperplanes_vertex() {
        // four of the facet equations tight at (1,1,5,1)
        let a = RatMatrix::from_int_rows(&[
            int_vec(&[0, 0, 0, 1]),
            int_vec(&[3, 0, 0, -2]),
            int_vec(&[0, 3, 0, -2]),
            int_vec(&[-4, 0, 1, 0]),
        ]);
        let b = RatVector::from_i64(&[1, 1, 1, 1]);
        assert_eq!(
            a.solve_exact(&b),
            SolveOutcome::Unique(RatVector::from_i64(&[1, 1, 5, 1]))
        );
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMatrix::identity(5).det(), int(1));
        let a = IntMatrix::from_i64(&[&[2, 4], &[0, 3]]);
        assert_eq!(a.det(), int(6));
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]);
        assert_eq!(m.det(), int(-7));
    }
}
