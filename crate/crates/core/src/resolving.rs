//! Twin classes, resolving sets, metric dimension and the resolving
//! polynomial `β(Γ, x) = Σ r_i x^i`, where `r_i` counts resolving sets of
//! size `i`.
//!
//! A twin class of size `l` must contribute at least `l - 1` vertices to
//! every resolving set, since any two of its members that are both left
//! out have the same distance to every other vertex. The enumerators use
//! this both as a lower bound and to skip masks.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::metric::{all_pairs_geodesic, DistanceMatrix};
use crate::spectra::IntPolynomial;

pub const DEFAULT_ENUM_CAP: usize = 16;
pub const DEFAULT_SUBSET_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    /// `N[u] = N[v]`
    True,
    /// `N(u) = N(v)`
    False,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub members: Vec<usize>,
    /// `None` for singletons.
    pub kind: Option<TwinKind>,
}

/// Partition of the vertices into twin classes.
///
/// True twins are adjacent and false twins are not, and a vertex cannot
/// have both a true and a false twin, so the two relations never mix
/// inside a class. Classes are ordered by their smallest member.
pub fn twin_classes(g: &SimpleGraph) -> Vec<TwinClass> {
    let n = g.vcount();
    let open: Vec<_> = (0..n).map(|v| g.neighbor_set(v).clone()).collect();
    let closed: Vec<_> = (0..n)
        .map(|v| {
            let mut s = open[v].clone();
            s.insert(v);
            s
        })
        .collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<TwinClass> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[v] = id;
        let mut members = vec![v];
        let mut kind = None;
        for u in v + 1..n {
            if class_of[u] != usize::MAX {
                continue;
            }
            let k = if closed[u] == closed[v] {
                Some(TwinKind::True)
            } else if open[u] == open[v] {
                Some(TwinKind::False)
            } else {
                None
            };
            if let Some(k) = k {
                debug_assert!(kind.is_none() || kind == Some(k));
                kind = Some(k);
                class_of[u] = id;
                members.push(u);
            }
        }
        classes.push(TwinClass { members, kind });
    }
    classes
}

/// `Σ (|class| - 1)` over all classes.
pub fn twin_lower_bound(classes: &[TwinClass]) -> usize {
    classes.iter().map(|c| c.members.len() - 1).sum()
}

/// Does every pair of vertices differ in distance to some member of `set`?
pub fn is_resolving(dist: &DistanceMatrix, set: &[usize]) -> bool {
    let n = dist.vcount();
    let mut vectors: Vec<Vec<Option<u32>>> = (0..n)
        .map(|v| set.iter().map(|&s| dist.get(s, v)).collect())
        .collect();
    vectors.sort_unstable();
    vectors.windows(2).all(|w| w[0] != w[1])
}

/// Packs distance vectors into `u128` keys when they fit; `is_resolving`
/// is the unpacked reference.
struct Fingerprinter {
    n: usize,
    bits: u32,
    /// `columns[s]` = distances from `s`, pre-shifted per vertex.
    columns: Vec<Vec<u128>>,
}

impl Fingerprinter {
    fn new(dist: &DistanceMatrix) -> Option<Self> {
        let n = dist.vcount();
        let max = (0..n)
            .flat_map(|u| dist.row(u).iter().copied())
            .try_fold(0u32, |m, d| d.map(|d| m.max(d)))?;
        let bits = 32 - max.leading_zeros();
        let bits = bits.max(1);
        if bits as usize * n > 128 {
            return None;
        }
        let columns = (0..n)
            .map(|s| {
                (0..n)
                    .map(|v| u128::from(dist.get(s, v).unwrap_or(0)))
                    .collect()
            })
            .collect();
        Some(Fingerprinter { n, bits, columns })
    }

    fn resolves(&self, mask: u64, scratch: &mut Vec<u128>) -> bool {
        scratch.clear();
        scratch.resize(self.n, 0);
        let mut m = mask;
        let mut slot = 0;
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            m &= m - 1;
            let col = &self.columns[s];
            for (key, &d) in scratch.iter_mut().zip(col) {
                *key |= d << (slot * self.bits);
            }
            slot += 1;
        }
        scratch.sort_unstable();
        scratch.windows(2).all(|w| w[0] != w[1])
    }
}

/// For each non-singleton twin class, its member mask.
fn twin_masks(classes: &[TwinClass]) -> Vec<u64> {
    classes
        .iter()
        .filter(|c| c.members.len() > 1)
        .map(|c| c.members.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

/// A mask missing two or more members of a twin class cannot resolve.
#[inline]
fn passes_twins(mask: u64, twins: &[u64]) -> bool {
    twins.iter().all(|&t| (t & !mask).count_ones() <= 1)
}

fn connected_dist(g: &SimpleGraph) -> Result<DistanceMatrix> {
    let d = all_pairs_geodesic(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

/// Next `k`-subset of `0..n` in lexicographic order (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Smallest resolving set, searching sizes upward from the twin bound.
///
/// `budget` bounds the number of candidate subsets examined.
pub fn metric_dimension(g: &SimpleGraph, budget: u64) -> Result<(usize, Vec<usize>)> {
    let n = g.vcount();
    if n > 63 {
        return Err(Error::Capacity {
            what: "metric dimension vertex count",
            size: n,
            cap: 63,
        });
    }
    let dist = connected_dist(g)?;
    if n == 1 {
        return Ok((0, vec![]));
    }
    let classes = twin_classes(g);
    let twins = twin_masks(&classes);
    let fp = Fingerprinter::new(&dist);
    let mut scratch = Vec::new();
    let mut examined = 0u64;
    for k in twin_lower_bound(&classes).max(1)..=n {
        let end = 1u64 << n;
        let mut mask = (1u64 << k) - 1;
        while mask < end {
            examined += 1;
            if examined > budget {
                return Err(Error::Capacity {
                    what: "metric dimension subset budget",
                    size: examined as usize,
                    cap: budget as usize,
                });
            }
            if passes_twins(mask, &twins) {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let ok = match &fp {
                    Some(fp) => fp.resolves(mask, &mut scratch),
                    None => is_resolving(&dist, &set),
                };
                if ok {
                    return Ok((k, set));
                }
            }
            mask = next_combination(mask);
        }
    }
    Err(Error::Internal("vertex set failed to resolve".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvingReport {
    pub dim: usize,
    /// `(i, r_i)` for `dim ≤ i ≤ vcount`.
    pub r: Vec<(usize, BigUint)>,
    pub polynomial: IntPolynomial,
    pub twin_classes: Vec<TwinClass>,
}

impl ResolvingReport {
    pub fn count(&self, i: usize) -> BigUint {
        self.r
            .iter()
            .find(|(j, _)| *j == i)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let r: Vec<_> = self
            .r
            .iter()
            .map(|(i, c)| json!([i, c.to_string()]))
            .collect();
        let classes: Vec<_> = self
            .twin_classes
            .iter()
            .map(|c| {
                json!({
                    "members": c.members,
                    "kind": match c.kind {
                        Some(TwinKind::True) => "true",
                        Some(TwinKind::False) => "false",
                        None => "single",
                    },
                })
            })
            .collect();
        json!({
            "dim": self.dim,
            "r": r,
            "polynomial": self.polynomial.coefficient_strings(),
            "twin_classes": classes,
        })
    }
}

/// Counts resolving sets of every size by enumerating all `2^n` subsets.
pub fn resolving_counts(g: &SimpleGraph, cap: usize) -> Result<ResolvingReport> {
    let n = g.vcount();
    let cap = cap.min(40);
    if n > cap {
        return Err(Error::Capacity {
            what: "resolving enumeration vertex count",
            size: n,
            cap,
        });
    }
    let dist = connected_dist(g)?;
    let classes = twin_classes(g);
    let twins = twin_masks(&classes);
    let fp = Fingerprinter::new(&dist);

    const CHUNK: u64 = 1 << 12;
    let total = 1u64 << n;
    let chunks = total.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = vec![0u64; n + 1];
            let mut scratch = Vec::new();
            for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                if !passes_twins(mask, &twins) {
                    continue;
                }
                let ok = match &fp {
                    Some(fp) => fp.resolves(mask, &mut scratch),
                    None => {
                        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                        is_resolving(&dist, &set)
                    }
                };
                if ok {
                    local[mask.count_ones() as usize] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let dim = counts
        .iter()
        .position(|&c| c > 0)
        .ok_or_else(|| Error::Internal("no resolving set found".into()))?;
    // Supersets of resolving sets resolve, so every size from dim up occurs.
    if counts[dim..].contains(&0) {
        return Err(Error::Internal("resolving counts not monotone".into()));
    }
    let r: Vec<(usize, BigUint)> = (dim..=n).map(|i| (i, BigUint::from(counts[i]))).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, c) in &r {
        coeffs[*i] = BigInt::from(c.clone());
    }
    Ok(ResolvingReport {
        dim,
        r,
        polynomial: IntPolynomial::new(coeffs),
        twin_classes: classes,
    })
}

/// How one index of the closed-form resolving sequence was covered by the
/// three summation branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    Gap {
        index: usize,
    },
    /// Several branches claim the index; `values` lists `(branch, r_i)`.
    Overlap {
        index: usize,
        values: Vec<(u8, BigInt)>,
    },
}

impl Coverage {
    pub fn is_conflict(&self) -> bool {
        match self {
            Coverage::Gap { .. } => true,
            Coverage::Overlap { values, .. } => values.windows(2).any(|w| w[0].1 != w[1].1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdResolvingClosedForm {
    pub polynomial: IntPolynomial,
    pub coverage: Vec<Coverage>,
}

fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn pow2(e: i64) -> BigInt {
    debug_assert!(e >= 0);
    BigInt::one() << e as usize
}

/// `C(n, j) 2^{n-j}`, zero when `j` is outside `0..=n`.
fn pair_choices(n: usize, j: i64) -> BigInt {
    if j < 0 || j as usize > n {
        return BigInt::zero();
    }
    binomial(n, j) * pow2(n as i64 - j)
}

/// Resolving polynomial of `P_e(SD_{8n})` from its three-branch closed form
/// plus `r_{8n-1} = 8n`, `r_{8n} = 1`.
///
/// Each branch is evaluated only on its own index range. Indices in
/// `[7n-4, 8n-2]` claimed by no branch, or by several, are reported in
/// `coverage`; overlapping branches that agree contribute their common
/// value, otherwise the lowest-numbered branch wins.
pub fn sd_resolving_polynomial_closed_form(n: usize) -> Result<SdResolvingClosedForm> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "semidihedral needs n >= 2, got {n}"
        )));
    }
    let nn = BigInt::from(n);
    let k: [BigInt; 5] = [
        BigInt::one(),
        6 * &nn,
        8 * &nn * &nn + 8 * &nn - 3,
        16 * &nn * &nn - 2 * &nn - 2,
        8 * &nn * &nn - 4 * &nn,
    ];
    let kk = |t: i64| -> BigInt {
        if (0..=4).contains(&t) {
            k[t as usize].clone()
        } else {
            BigInt::zero()
        }
    };
    let (ni, top) = (n as i64, 8 * n as i64);
    let branch = |b: u8, i: i64| -> Option<BigInt> {
        match b {
            1 if (7 * ni - 4..=7 * ni - 1).contains(&i) => Some(
                (0..=i - (7 * ni - 4))
                    .map(|j| pair_choices(n, j) * kk(7 * ni + j - i))
                    .sum(),
            ),
            2 if (7 * ni..=8 * ni - 4).contains(&i) => Some(
                (0..=4)
                    .map(|j| pair_choices(n, i - 7 * ni + j) * kk(j))
                    .sum(),
            ),
            3 if (8 * ni - 3..=8 * ni - 2).contains(&i) => Some(
                (0..=top - i)
                    .map(|j| pair_choices(n, ni + j - (top - i)) * kk(j))
                    .sum(),
            ),
            _ => None,
        }
    };

    let mut coeffs = vec![BigInt::zero(); 8 * n + 1];
    let mut coverage = Vec::new();
    for i in 7 * ni - 4..=8 * ni - 2 {
        let values: Vec<(u8, BigInt)> = (1..=3)
            .filter_map(|b| branch(b, i).map(|v| (b, v)))
            .collect();
        match values.len() {
            0 => coverage.push(Coverage::Gap { index: i as usize }),
            1 => {}
            _ => coverage.push(Coverage::Overlap {
                index: i as usize,
                values: values.clone(),
            }),
        }
        if let Some((_, v)) = values.first() {
            coeffs[i as usize] = v.clone();
        }
    }
    coeffs[8 * n - 1] = BigInt::from(8 * n);
    coeffs[8 * n] = BigInt::one();
    Ok(SdResolvingClosedForm {
        polynomial: IntPolynomial::new(coeffs),
        coverage,
    })
}

/// The resolving set exhibited for `P_e(SD_{8n})`:
/// `{a^{2i}b : 1 ≤ i ≤ 2n-1} ∪ {a^i : i ∉ {1, 2n, 4n}} ∪ {a^{2i+1}b : 0 ≤ i ≤ n-1}`.
pub fn sd_witness_resolving_set(n: usize) -> Vec<usize> {
    let k = 4 * n;
    let mut set: Vec<usize> = (1..2 * n).map(|i| k + 2 * i).collect();
    set.extend((2..k).filter(|&i| i != 2 * n));
    set.extend((0..n).map(|i| k + 2 * i + 1));
    set.sort_unstable();
    set
}

/// Compares coefficient vectors, listing `(i, expected, computed)` for each
/// index where they differ.
pub fn coefficient_mismatches(
    expected: &IntPolynomial,
    computed: &IntPolynomial,
) -> Vec<(usize, BigInt, BigInt)> {
    let len = expected
        .coefficients()
        .len()
        .max(computed.coefficients().len());
    (0..len)
        .filter_map(|i| {
            let (e, c) = (expected.coefficient(i), computed.coefficient(i));
            match e.cmp(&c) {
                Ordering::Equal => None,
                _ => Some((i, e, c)),
            }
        })
        .collect()
}
