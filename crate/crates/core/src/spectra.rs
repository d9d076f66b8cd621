//! Exact Laplacian linear algebra over the integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_CHARPOLY_CAP: usize = 128;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    /// `x - r`
    pub fn linear(r: i64) -> Self {
        IntPolynomial::new(vec![BigInt::from(-r), BigInt::one()])
    }

    /// `∏ (x - λ)^m`
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        roots.iter().fold(IntPolynomial::one(), |p, &(r, m)| {
            (0..m).fold(p, |p, _| p.mul(&IntPolynomial::linear(r)))
        })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient by `x - r` if `r` is a root.
    pub fn deflate(&self, r: &BigInt) -> Option<IntPolynomial> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // synthetic division from the top
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (1..=d).rev() {
            carry = &carry * r + &self.coeffs[i];
            q[i - 1] = carry.clone();
        }
        let rem = carry * r + &self.coeffs[0];
        rem.is_zero().then(|| IntPolynomial::new(q))
    }

    /// Sum of the roots with multiplicity, when it is an integer.
    pub fn root_sum(&self) -> Option<BigInt> {
        let d = self.degree()?;
        if d == 0 {
            return Some(BigInt::zero());
        }
        let (q, r) = (-&self.coeffs[d - 1]).div_rem(&self.coeffs[d]);
        r.is_zero().then_some(q)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || i == 0 {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn check_cap(g: &SimpleGraph, cap: usize) -> Result<()> {
    if g.vcount() > cap {
        return Err(Error::Capacity {
            what: "characteristic polynomial vertex count",
            size: g.vcount(),
            cap,
        });
    }
    Ok(())
}

/// Characteristic polynomial `det(xI - L)` of the Laplacian `L = D - A`.
///
/// Faddeev–LeVerrier: `M_1 = I`, `c_{n-k} = -tr(L M_k) / k`,
/// `M_{k+1} = L M_k + c_{n-k} I`. Every division is exact.
pub fn laplacian_charpoly(g: &SimpleGraph, cap: usize) -> Result<IntPolynomial> {
    check_cap(g, cap)?;
    let n = g.vcount();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    if n == 0 {
        return Ok(IntPolynomial::new(c));
    }
    let deg: Vec<BigInt> = g.degrees().into_iter().map(BigInt::from).collect();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();

    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // L M = D M - A M, using the sparse rows of A
        let lm: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigInt> = m[i].iter().map(|x| x * &deg[i]).collect();
                for &j in &nbrs[i] {
                    for (r, x) in row.iter_mut().zip(&m[j]) {
                        *r -= x;
                    }
                }
                row
            })
            .collect();
        let trace: BigInt = (0..n).map(|i| &lm[i][i]).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "inexact trace division at step {k}"
            )));
        }
        c[n - k] = q;
        if k < n {
            m = lm;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c[n - k];
            }
        }
    }
    Ok(IntPolynomial::new(c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSummary {
    /// `(eigenvalue, multiplicity)`, eigenvalues ascending.
    pub roots: Vec<(i64, usize)>,
    /// Factor with no integer roots; constant `1` when fully factored.
    pub residual: IntPolynomial,
}

impl SpectrumSummary {
    fn from_multiset(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut merged = BTreeMap::new();
        for (l, m) in pairs {
            if m > 0 {
                *merged.entry(l).or_insert(0) += m;
            }
        }
        SpectrumSummary {
            roots: merged.into_iter().collect(),
            residual: IntPolynomial::one(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.residual.degree() == Some(0)
    }

    pub fn multiplicity(&self, lambda: i64) -> usize {
        self.roots
            .iter()
            .find(|(l, _)| *l == lambda)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of eigenvalues accounted for, counting residual degree.
    pub fn size(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum::<usize>() + self.residual.degree().unwrap_or(0)
    }

    /// `Σ λ m` plus the residual's root sum; equals `tr L = 2|E|`.
    pub fn trace(&self) -> Option<BigInt> {
        let integral: BigInt = self.roots.iter().map(|&(l, m)| BigInt::from(l) * m).sum();
        Some(integral + self.residual.root_sum()?)
    }

    /// The polynomial `∏ (x - λ)^m · residual`.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_roots(&self.roots).mul(&self.residual)
    }

    /// `∏ λ^m` over non-zero eigenvalues.
    pub fn nonzero_product(&self) -> BigInt {
        self.roots
            .iter()
            .filter(|(l, _)| *l != 0)
            .fold(BigInt::one(), |acc, &(l, m)| {
                acc * BigInt::from(l).pow(m as u32)
            })
    }
}

/// Extracts every integer root of `p` in `0..=bound`, with multiplicity.
///
/// Candidates are restricted to divisors of the lowest non-zero
/// coefficient once the power of `x` has been removed.
pub fn integer_roots(p: &IntPolynomial, bound: u64) -> SpectrumSummary {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut zeros = 0;
    while rest.degree().is_some_and(|d| d > 0) && rest.coefficient(0).is_zero() {
        rest = IntPolynomial::new(rest.coefficients()[1..].to_vec());
        zeros += 1;
    }
    if zeros > 0 {
        roots.push((0, zeros));
    }
    for cand in 1..=bound {
        let r = BigInt::from(cand);
        let low = rest.coefficient(0);
        if low.is_zero() || !low.is_multiple_of(&r) {
            continue;
        }
        let mut m = 0;
        while let Some(q) = rest.deflate(&r) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            roots.push((cand as i64, m));
        }
    }
    SpectrumSummary {
        roots,
        residual: rest,
    }
}

/// Laplacian spectrum with every integer eigenvalue extracted.
///
/// Laplacian eigenvalues lie in `[0, vcount]`, which bounds the candidates.
pub fn integer_spectrum(g: &SimpleGraph, cap: usize) -> Result<SpectrumSummary> {
    let p = laplacian_charpoly(g, cap)?;
    Ok(integer_roots(&p, g.vcount() as u64))
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCount {
    pub count: BigUint,
    /// Set when the graph is disconnected.
    pub diagnostic: Option<String>,
}

/// Spanning trees via the Laplacian with row and column 0 deleted.
///
/// When the spectrum is fully integral the count is checked against
/// `∏ λ / vcount` over non-zero eigenvalues.
pub fn spanning_tree_count(g: &SimpleGraph, cap: usize) -> Result<TreeCount> {
    check_cap(g, cap)?;
    let n = g.vcount();
    if !g.is_connected() {
        return Ok(TreeCount {
            count: BigUint::zero(),
            diagnostic: Some(format!(
                "graph is disconnected ({} components)",
                g.component_count()
            )),
        });
    }
    let reduced: Vec<Vec<BigInt>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| match (i == j, g.has_edge(i, j)) {
                    (true, _) => BigInt::from(g.degree(i)),
                    (false, true) => -BigInt::one(),
                    (false, false) => BigInt::zero(),
                })
                .collect()
        })
        .collect();
    let det = bareiss_determinant(reduced);
    let spectrum = integer_spectrum(g, cap)?;
    if spectrum.is_integral() {
        let (q, r) = spectrum.nonzero_product().div_rem(&BigInt::from(n));
        if !r.is_zero() || q != det {
            return Err(Error::Internal(format!(
                "Kirchhoff determinant {det} disagrees with eigenvalue product / n = {q} rem {r}"
            )));
        }
    }
    let count = det
        .to_biguint()
        .ok_or_else(|| Error::Internal("negative cofactor".into()))?;
    Ok(TreeCount {
        count,
        diagnostic: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFamily {
    Semidihedral,
    Quaternion,
    Dihedral,
}

impl SpectrumFamily {
    fn min_n(self) -> usize {
        match self {
            SpectrumFamily::Dihedral => 3,
            _ => 2,
        }
    }

    fn check(self, n: usize) -> Result<i64> {
        if n < self.min_n() {
            return Err(Error::Parameter(format!(
                "{self:?} spectrum needs n >= {}, got {n}",
                self.min_n()
            )));
        }
        Ok(n as i64)
    }
}

/// Laplacian spectrum of the enhanced power graph from its factorisation.
///
/// * SD_{8n}: `x (x-8n) (x-6n) (x-4n)^{4n-3} (x-2)^n (x-4)^n (x-1)^{2n}`
/// * Q_{4n}: `x (x-4n)^2 (x-4)^n (x-2)^n (x-2n)^{2n-3}`
/// * D_{2n}: `x (x-1)^n (x-n)^{n-2} (x-2n)`
pub fn closed_form_spectrum(family: SpectrumFamily, n: usize) -> Result<SpectrumSummary> {
    let k = family.check(n)?;
    let pairs: Vec<(i64, usize)> = match family {
        SpectrumFamily::Semidihedral => vec![
            (0, 1),
            (8 * k, 1),
            (6 * k, 1),
            (4 * k, 4 * n - 3),
            (2, n),
            (4, n),
            (1, 2 * n),
        ],
        SpectrumFamily::Quaternion => vec![(0, 1), (4 * k, 2), (4, n), (2, n), (2 * k, 2 * n - 3)],
        SpectrumFamily::Dihedral => vec![(0, 1), (1, n), (k, n - 2), (2 * k, 1)],
    };
    Ok(SpectrumSummary::from_multiset(pairs))
}

/// Spanning-tree counts `2^{11n-5} 3 n^{4n-2}`, `2^{5n-1} n^{2n-2}`, `n^{n-2}`.
pub fn closed_form_tree_count(family: SpectrumFamily, n: usize) -> Result<BigUint> {
    family.check(n)?;
    let nb = BigUint::from(n);
    let two = BigUint::from(2u32);
    Ok(match family {
        SpectrumFamily::Semidihedral => {
            two.pow(11 * n as u32 - 5) * 3u32 * nb.pow(4 * n as u32 - 2)
        }
        SpectrumFamily::Quaternion => two.pow(5 * n as u32 - 1) * nb.pow(2 * n as u32 - 2),
        SpectrumFamily::Dihedral => nb.pow(n as u32 - 2),
    })
}

/// `{charpoly, spectrum, residual, trees}` report.
pub fn spectrum_json(
    poly: &IntPolynomial,
    spectrum: &SpectrumSummary,
    trees: &TreeCount,
) -> serde_json::Value {
    let pairs: Vec<_> = spectrum.roots.iter().map(|&(l, m)| json!([l, m])).collect();
    json!({
        "charpoly": poly.coefficient_strings(),
        "spectrum": pairs,
        "residual": spectrum.residual.coefficient_strings(),
        "trees": trees.count.to_string(),
    })
}
