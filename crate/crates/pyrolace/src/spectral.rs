//! Graph products and exact adjacency-spectrum machinery.
//!
//! Cospectrality is decided over the integers: characteristic polynomials are
//! computed with the division-free Berkowitz algorithm over `BigInt`, so two
//! graphs compare equal exactly or not at all. Floating-point spectra come
//! from cyclic Jacobi rotations and are only used where the spec asks for
//! approximations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Off-diagonal Frobenius-norm target for the Jacobi sweeps.
pub const JACOBI_DEFAULT_TOL: f64 = 1e-12;
/// Sweep budget before the eigensolver reports non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("matrix is not square ({rows}×{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("graph product requires non-empty factors")]
    EmptyFactor,
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `self + I` (square matrices only).
    pub fn plus_identity(&self) -> IntMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, i, m.get(i, i) + 1);
        }
        m
    }

    /// `self − I` (square matrices only).
    pub fn minus_identity(&self) -> IntMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, i, m.get(i, i) - 1);
        }
        m
    }
}

/// Kronecker product: the `(i, j)` block of the result is `a_{ij}·B`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let scale = a.get(i, j);
            if scale == 0 {
                continue;
            }
            for p in 0..b.rows {
                for q in 0..b.cols {
                    out.set(i * b.rows + p, j * b.cols + q, scale * b.get(p, q));
                }
            }
        }
    }
    out
}

/// Bijection between product-graph indices and factor pairs:
/// `index(u, v) = u·|V(H)| + v` (row-major, H-coordinate fastest), matching
/// the Kronecker block layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub g_order: usize,
    pub h_order: usize,
}

impl ProductVertexMap {
    pub fn index(&self, u: usize, v: usize) -> usize {
        u * self.h_order + v
    }

    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.h_order, i % self.h_order)
    }

    pub fn len(&self) -> usize {
        self.g_order * self.h_order
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn product_graph(
    g: &Graph,
    h: &Graph,
    adjacent: impl Fn(bool, bool, bool, bool) -> bool,
) -> Result<(Graph, ProductVertexMap), SpectralError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(SpectralError::EmptyFactor);
    }
    let map = ProductVertexMap {
        g_order: g.order(),
        h_order: h.order(),
    };
    let mut edges = Vec::new();
    for i in 0..map.len() {
        let (u1, v1) = map.pair(i);
        for j in i + 1..map.len() {
            let (u2, v2) = map.pair(j);
            if adjacent(u1 == u2, v1 == v2, g.has_edge(u1, u2), h.has_edge(v1, v2)) {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::new(map.len(), edges)?, map))
}

/// Cartesian product `G □ H`: move along one coordinate at a time.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap), SpectralError> {
    product_graph(g, h, |same_u, same_v, eg, eh| {
        (same_u && eh) || (same_v && eg)
    })
}

/// Strong product `G ⊠ H`: Cartesian edges plus simultaneous moves.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap), SpectralError> {
    product_graph(g, h, |same_u, same_v, eg, eh| {
        (same_u && eh) || (same_v && eg) || (eg && eh)
    })
}

/// Checks `((A_G + I) ⊗ (A_H + I)) − I = A_{G⊠H}` entrywise, under the
/// [`ProductVertexMap`] ordering. Empty factors compare trivially equal.
pub fn strong_product_matrix_identity(g: &Graph, h: &Graph) -> Result<bool, SpectralError> {
    if g.order() == 0 || h.order() == 0 {
        return Ok(true);
    }
    let lhs = kronecker(
        &g.adjacency_matrix().plus_identity(),
        &h.adjacency_matrix().plus_identity(),
    )
    .minus_identity();
    let (prod, _) = strong_product(g, h)?;
    Ok(lhs == prod.adjacency_matrix())
}

/// Exact integer polynomial, coefficients in ascending degree order.
/// Serialized as a list of decimal strings so coefficients of any size
/// survive JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> IntPolynomial {
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Ascending coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(BigInt::is_one).unwrap_or(false)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn decimal_coefficients(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(d == 0 && first) {
                continue;
            }
            let magnitude = c.magnitude().to_string();
            let sign = c.sign() == num_bigint::Sign::Minus;
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if magnitude != "1" {
                        write!(f, "{magnitude}")?;
                    }
                    write!(f, "x")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.decimal_coefficients().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial { coeffs })
    }
}

/// Exact monic characteristic polynomial `det(xI − M)` via the Berkowitz
/// algorithm: division-free, so everything stays in `BigInt`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial, SpectralError> {
    if !m.is_square() {
        return Err(SpectralError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let a = |i: usize, j: usize| BigInt::from(m.get(i, j));

    // descending coefficients of the leading principal submatrices
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for i in 1..=n {
        // q = [1, -a_ii, -(r·c), -(r·M·c), -(r·M²·c), …] for the block
        // decomposition of the i×i leading submatrix
        let mut q = Vec::with_capacity(i + 1);
        q.push(BigInt::one());
        q.push(-a(i - 1, i - 1));
        let r: Vec<BigInt> = (0..i - 1).map(|j| a(i - 1, j)).collect();
        let mut v: Vec<BigInt> = (0..i - 1).map(|j| a(j, i - 1)).collect();
        for _ in 2..=i {
            let dot: BigInt = r.iter().zip(&v).map(|(x, y)| x * y).sum();
            q.push(-dot);
            // v ← M·v over the (i−1)×(i−1) leading block
            v = (0..i - 1)
                .map(|row| (0..i - 1).map(|col| a(row, col) * &v[col]).sum())
                .collect();
        }
        // Toeplitz multiply: convolve q with the previous coefficients,
        // keeping the first i+1 terms
        let mut next = vec![BigInt::zero(); i + 1];
        for (s, slot) in next.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for (j, qj) in q.iter().enumerate().take(s + 1) {
                if s - j < poly.len() {
                    acc += qj * &poly[s - j];
                }
            }
            *slot = acc;
        }
        poly = next;
    }
    poly.reverse();
    Ok(IntPolynomial::new(poly))
}

/// Exact cospectrality: equal characteristic polynomials of the adjacency
/// matrices. Graphs of different orders are never cospectral.
pub fn are_cospectral(g: &Graph, h: &Graph) -> bool {
    let pg = char_poly(&g.adjacency_matrix()).expect("adjacency matrices are square");
    let ph = char_poly(&h.adjacency_matrix()).expect("adjacency matrices are square");
    pg == ph
}

/// Floating approximation of the adjacency spectrum, ascending with
/// multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumApprox {
    pub values: Vec<f64>,
}

/// Adjacency eigenvalues via cyclic Jacobi rotations, iterated until the
/// off-diagonal Frobenius norm drops below `tol` (at most
/// [`JACOBI_MAX_SWEEPS`] sweeps).
pub fn spectrum_approx(g: &Graph, tol: f64) -> Result<SpectrumApprox, SpectralError> {
    let n = g.order();
    let mut a = vec![vec![0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    jacobi_eigenvalues(&mut a, tol).map(|values| SpectrumApprox { values })
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p][q] * a[p][q];
        }
    }
    (2.0 * sum).sqrt()
}

fn jacobi_eigenvalues(a: &mut [Vec<f64>], tol: f64) -> Result<Vec<f64>, SpectralError> {
    let n = a.len();
    if n < 2 {
        return Ok(a.iter().enumerate().map(|(i, row)| row[i]).collect());
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(a) < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let app = a[p][p];
                let aqq = a[q][q];
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    if off_diagonal_norm(a) >= tol {
        return Err(SpectralError::NonConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(values)
}

/// Checks the strong-product spectrum formula
/// `σ_{G⊠H} = {(λ+1)(μ+1) − 1 : λ ∈ σ_G, μ ∈ σ_H}`: both sides are sorted
/// and compared entrywise within `tol`. Empty factors compare trivially.
pub fn strong_product_spectrum_formula(
    g: &Graph,
    h: &Graph,
    tol: f64,
) -> Result<bool, SpectralError> {
    if g.order() == 0 || h.order() == 0 {
        return Ok(true);
    }
    let sg = spectrum_approx(g, JACOBI_DEFAULT_TOL)?;
    let sh = spectrum_approx(h, JACOBI_DEFAULT_TOL)?;
    let mut formula: Vec<f64> = sg
        .values
        .iter()
        .flat_map(|l| sh.values.iter().map(move |m| (l + 1.0) * (m + 1.0) - 1.0))
        .collect();
    formula.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    let (prod, _) = strong_product(g, h)?;
    let actual = spectrum_approx(&prod, JACOBI_DEFAULT_TOL)?;
    Ok(formula.len() == actual.values.len()
        && formula
            .iter()
            .zip(&actual.values)
            .all(|(x, y)| (x - y).abs() <= tol))
}
