//! Exact rational scalars, vectors and square matrices.
//!
//! Everything here is closed over [`Rat`]; no operation rounds. Matrices act
//! on column vectors.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rat = BigRational;

/// Builds `num/den` as a reduced rational. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Serde adapter storing a [`Rat`] as its canonical string.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// A vector in `R^n` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rat::zero(); n])
    }

    /// The all-ones vector.
    pub fn ones(n: usize) -> Self {
        Vector(vec![Rat::one(); n])
    }

    /// Standard basis vector `e_{i+1}` (zero-based index).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rat).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl AddAssign<&Vector> for Vector {
    fn add_assign(&mut self, rhs: &Vector) {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// Counter-clockwise rotation by a right angle: `(x, y) -> (-y, x)`.
pub fn rotate90(v: &Vector) -> Result<Vector> {
    if v.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: v.dim() });
    }
    Ok(Vector(vec![-&v.0[1], v.0[0].clone()]))
}

/// Inverse of [`rotate90`]: `(x, y) -> (y, -x)`.
pub fn rotate90_inv(v: &Vector) -> Result<Vector> {
    if v.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: v.dim() });
    }
    Ok(Vector(vec![v.0[1].clone(), -&v.0[0]]))
}

/// Square rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Matrix { n, rows }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Matrix { n, rows })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        if n == 0 || cols.iter().any(|c| c.dim() != n) {
            return Err(Error::NotSquare);
        }
        let rows = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        Ok(Matrix { n, rows })
    }

    pub fn diagonal(d: &[Rat]) -> Self {
        let mut m = Self::identity(d.len());
        for (i, x) in d.iter().enumerate() {
            m.rows[i][i] = x.clone();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[j][i].clone()).collect())
            .collect();
        Matrix { n: self.n, rows }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.n, "dimension mismatch");
        Vector(
            self.rows
                .iter()
                .map(|r| r.iter().zip(v.coords()).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Rat::zero(), |acc, k| acc + &self.rows[i][k] * &other.rows[k][j])
                    })
                    .collect()
            })
            .collect();
        Matrix { n, rows }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Matrix { n: self.n, rows }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Matrix { n: self.n, rows }
    }

    pub fn det(&self) -> Rat {
        det_rows(self.rows.clone())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
        Ok(Matrix { n, rows: inv })
    }

    /// `(m^{-1})^t`, the action on normals dual to `m` on points.
    pub fn inverse_transpose(&self) -> Result<Matrix> {
        Ok(self.inverse()?.transpose())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.iter().map(format_rat).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(format_rat).collect()).collect();
        rows.serialize(s)
    }
}

impl Mul<&Vector> for &Matrix {
    type Output = Vector;
    fn mul(self, v: &Vector) -> Vector {
        self.apply(v)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, m: &Matrix) -> Matrix {
        Matrix::mul(self, m)
    }
}

/// Exact determinant of a square array by Gaussian elimination over the rationals.
pub fn det_rows(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
            }
        }
    }
    det
}

/// Determinant of the matrix with the given vectors as columns.
pub fn det_of(cols: &[Vector]) -> Rat {
    let n = cols.len();
    det_rows((0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
}

/// Generalised cross product of `n - 1` vectors in `R^n`: the vector `N` with
/// `<N, x> = det[x, a_1, ..., a_{n-1}]` (columns).
pub fn cross(vs: &[Vector]) -> Vector {
    let n = vs.len() + 1;
    let coords = (0..n)
        .map(|i| {
            let minor: Vec<Vec<Rat>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| vs.iter().map(|v| v[r].clone()).collect())
                .collect();
            let d = det_rows(minor);
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    Vector(coords)
}

/// Exact rank of a list of vectors.
pub fn rank(vs: &[Vector]) -> usize {
    echelon_pivots(vs).len()
}

/// Pivot columns of the reduced row echelon form of the matrix whose rows are `vs`.
pub(crate) fn echelon_pivots(vs: &[Vector]) -> Vec<usize> {
    let Some(first) = vs.first() else {
        return Vec::new();
    };
    let n = first.dim();
    let mut a: Vec<Vec<Rat>> = vs.iter().map(|v| v.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col].clone();
        for r in row + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pv;
            for j in col..n {
                let t = &f * &a[row][j];
                a[r][j] -= t;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn check_lambda(lambda: &Rat) -> Result<()> {
    if lambda.is_positive() && *lambda < Rat::one() {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("lambda must lie in (0,1), got {lambda}")))
    }
}

/// Sets column `j` of `m` to `v`.
fn set_column(m: &mut Matrix, j: usize, v: &Vector) {
    for i in 0..m.n {
        m.rows[i][j] = v[i].clone();
    }
}

/// `e_1 -> l e_1 + (1-l) e_2`, `e_n -> e_n / l`, other basis vectors fixed.
pub fn make_phi1(lambda: &Rat, n: usize) -> Result<Matrix> {
    check_lambda(lambda)?;
    if n < 3 {
        return Err(Error::OutOfRange(format!("phi1 needs n >= 3, got {n}")));
    }
    let mut m = Matrix::identity(n);
    set_column(&mut m, 0, &mixed(lambda, n));
    m.rows[n - 1][n - 1] = lambda.recip();
    Ok(m)
}

/// `e_2 -> l e_1 + (1-l) e_2`, `e_n -> e_n / (1-l)`, other basis vectors fixed.
pub fn make_psi1(lambda: &Rat, n: usize) -> Result<Matrix> {
    check_lambda(lambda)?;
    if n < 3 {
        return Err(Error::OutOfRange(format!("psi1 needs n >= 3, got {n}")));
    }
    let mut m = Matrix::identity(n);
    set_column(&mut m, 1, &mixed(lambda, n));
    m.rows[n - 1][n - 1] = (Rat::one() - lambda).recip();
    Ok(m)
}

/// `e_1 -> l e_1 + (1-l) e_2`, all other basis vectors fixed. `det = l`.
pub fn make_phi2(lambda: &Rat, n: usize) -> Result<Matrix> {
    check_lambda(lambda)?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("phi2 needs n >= 2, got {n}")));
    }
    let mut m = Matrix::identity(n);
    set_column(&mut m, 0, &mixed(lambda, n));
    Ok(m)
}

/// `e_2 -> l e_1 + (1-l) e_2`, all other basis vectors fixed. `det = 1 - l`.
pub fn make_psi2(lambda: &Rat, n: usize) -> Result<Matrix> {
    check_lambda(lambda)?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("psi2 needs n >= 2, got {n}")));
    }
    let mut m = Matrix::identity(n);
    set_column(&mut m, 1, &mixed(lambda, n));
    Ok(m)
}

fn mixed(lambda: &Rat, n: usize) -> Vector {
    let mut v = Vector::zeros(n);
    v.0[0] = lambda.clone();
    v.0[1] = Rat::one() - lambda;
    v
}

/// The elementary shear `I + r E_{ij}`.
pub fn shear(n: usize, i: usize, j: usize, r: Rat) -> Matrix {
    assert!(i != j, "shear needs distinct indices");
    let mut m = Matrix::identity(n);
    m.rows[i][j] = r;
    m
}

/// Deterministic product of `steps` random elementary shears. Always `det = 1`.
pub fn random_unimodular(n: usize, seed: u64, steps: usize) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unimodular_with(n, steps, &mut rng)
}

pub fn random_unimodular_with<R: Rng>(n: usize, steps: usize, rng: &mut R) -> Matrix {
    let mut m = Matrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut num = rng.gen_range(-3i64..=2);
        if num >= 0 {
            num += 1;
        }
        let den = rng.gen_range(1i64..=3);
        m = shear(n, i, j, rat(num, den)).mul(&m);
    }
    m
}

/// `I_r ⊕ block ⊕ I_rest`, embedding a `k x k` integer block at offset `r`.
fn embed(n: usize, r: usize, block: &[&[i64]]) -> Matrix {
    let mut m = Matrix::identity(n);
    for (a, row) in block.iter().enumerate() {
        for (b, &x) in row.iter().enumerate() {
            m.rows[r + a][r + b] = int(x);
        }
    }
    m
}

/// The explicit determinant-one matrices used to pin down symmetric values on
/// standard simplices: the 3-cycle, `-I_2` blocks, the signed swaps.
pub fn sigma_library(n: usize) -> Vec<Matrix> {
    const NEG_I2: [&[i64]; 2] = [&[-1, 0], &[0, -1]];
    const CYCLE: [&[i64]; 3] = [&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]];
    const SIGNED_SWAP: [&[i64]; 3] = [&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]];

    let mut out = Vec::new();
    for r in 0..n.saturating_sub(1) {
        out.push(embed(n, r, &NEG_I2));
    }
    if n >= 3 {
        for r in 0..=n - 3 {
            out.push(embed(n, r, &CYCLE));
        }
        out.push(embed(n, 0, &SIGNED_SWAP));
    }
    if n >= 4 {
        // swap e1, e2 and flip the last coordinate
        let mut m = Matrix::identity(n);
        m.rows[0][0] = Rat::zero();
        m.rows[1][1] = Rat::zero();
        m.rows[0][1] = Rat::one();
        m.rows[1][0] = Rat::one();
        m.rows[n - 1][n - 1] = -Rat::one();
        out.push(m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        Vector::from_ints(xs)
    }

    #[test]
    fn identity_and_shear_have_unit_det() {
        assert_eq!(Matrix::identity(3).det(), int(1));
        assert_eq!(shear(3, 0, 1, int(3)).det(), int(1));
        assert_eq!(make_phi1(&rat(1, 2), 3).unwrap().det(), int(1));
        assert_eq!(make_phi1(&rat(1, 3), 3).unwrap().det(), int(1));
        assert_eq!(make_psi1(&rat(2, 7), 5).unwrap().det(), int(1));
    }

    #[test]
    fn inverse_transpose_examples() {
        let id = Matrix::identity(4);
        assert_eq!(id.inverse_transpose().unwrap(), id);

        let d = Matrix::diagonal(&[int(2), rat(1, 2)]);
        assert_eq!(d.inverse_transpose().unwrap(), Matrix::diagonal(&[rat(1, 2), int(2)]));

        let phi2 = make_phi2(&rat(1, 2), 2).unwrap();
        let expect = Matrix::from_rows(vec![vec![rat(1, 2), int(0)], vec![rat(1, 2), int(1)]]).unwrap();
        assert_eq!(phi2, expect);
        let it = phi2.inverse_transpose().unwrap();
        assert_eq!(it, Matrix::from_int_rows(&[&[2, -1], &[0, 1]]).unwrap());
        // m * m^{-1} = I
        assert_eq!(phi2.mul(&it.transpose()), Matrix::identity(2));
    }

    #[test]
    fn singular_inverse_errors() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(m.inverse_transpose(), Err(Error::Singular)));
    }

    #[test]
    fn rotate90_examples() {
        assert_eq!(rotate90(&v(&[1, 0])).unwrap(), v(&[0, 1]));
        assert_eq!(rotate90(&v(&[0, 1])).unwrap(), v(&[-1, 0]));
        assert_eq!(rotate90(&v(&[2, 3])).unwrap(), v(&[-3, 2]));
        assert!(rotate90(&v(&[1, 2, 3])).is_err());
        assert_eq!(rotate90_inv(&rotate90(&v(&[5, -7])).unwrap()).unwrap(), v(&[5, -7]));
    }

    #[test]
    fn phi_psi_images() {
        let half = rat(1, 2);
        let phi1 = make_phi1(&half, 3).unwrap();
        assert_eq!(phi1.apply(&Vector::basis(3, 0)), Vector::new(vec![half.clone(), half.clone(), int(0)]));
        let psi1 = make_psi1(&half, 3).unwrap();
        assert_eq!(psi1.apply(&Vector::basis(3, 2)), v(&[0, 0, 2]));
        let phi2 = make_phi2(&half, 2).unwrap();
        assert_eq!(phi2.apply(&Vector::basis(2, 1)), v(&[0, 1]));
        for n in 2..6 {
            let l = rat(2, 5);
            assert_eq!(make_phi2(&l, n).unwrap().det(), l);
            assert_eq!(make_psi2(&l, n).unwrap().det(), int(1) - &l);
        }
    }

    #[test]
    fn lambda_out_of_range() {
        assert!(make_phi1(&int(0), 3).is_err());
        assert!(make_psi1(&int(1), 3).is_err());
        assert!(make_phi2(&rat(3, 2), 2).is_err());
        assert!(make_psi2(&rat(-1, 2), 2).is_err());
        assert!(make_phi1(&rat(1, 2), 2).is_err());
    }

    #[test]
    fn random_unimodular_is_deterministic() {
        assert_eq!(random_unimodular(3, 1, 0), Matrix::identity(3));
        let a = random_unimodular(2, 7, 8);
        let b = random_unimodular(2, 7, 8);
        assert_eq!(a, b);
        assert_eq!(a.det(), int(1));
        for seed in 0..20 {
            assert!(random_unimodular(4, seed, 10).is_unimodular());
        }
    }

    #[test]
    fn sigma_library_shapes() {
        assert_eq!(sigma_library(2), vec![Matrix::from_int_rows(&[&[-1, 0], &[0, -1]]).unwrap()]);
        for n in 2..=5 {
            for s in sigma_library(n) {
                assert_eq!(s.det(), int(1), "{s}");
            }
        }
        let cycle = &sigma_library(3)[2];
        assert_eq!(cycle.apply(&v(&[1, 2, 3])), v(&[3, 1, 2]));
    }

    #[test]
    fn rat_strings() {
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rat(&rat(3, -6)), "-1/2");
        assert_eq!(format_rat(&int(7)), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn cross_product_is_orthogonal() {
        let a = v(&[1, 2, 0]);
        let b = v(&[0, 1, 3]);
        let c = cross(&[a.clone(), b.clone()]);
        assert!(c.dot(&a).is_zero() && c.dot(&b).is_zero());
        // <N, x> = det[x, a, b]
        let x = v(&[2, -1, 5]);
        assert_eq!(c.dot(&x), det_of(&[x, a, b]));
    }
}
