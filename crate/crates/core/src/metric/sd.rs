//! Closed forms for the detour and distance structure of `P_e(SD_{8n})`,
//! evaluated from `n` and the element index alone.

use num_rational::Ratio;

use crate::epg::{sd_classify, SdClass};
use crate::error::{Error, Result};

fn rank(c: SdClass) -> u8 {
    match c {
        SdClass::Identity => 0,
        SdClass::Central => 1,
        SdClass::Rotation(_) => 2,
        SdClass::OddReflection(_) => 3,
        SdClass::EvenReflection(_) => 4,
    }
}

/// Detour distance between distinct vertices `u`, `v`.
pub fn sd_detour_closed_form(n: usize, u: usize, v: usize) -> Result<u32> {
    if u == v {
        return Err(Error::Parameter(
            "closed form needs distinct vertices".into(),
        ));
    }
    let (mut x, mut y) = (sd_classify(n, u)?, sd_classify(n, v)?);
    if rank(x) > rank(y) {
        std::mem::swap(&mut x, &mut y);
    }
    let m = 4 * n as u32;
    use SdClass::*;
    Ok(match (x, y) {
        (Identity, Central) => m - 1,
        (Identity, Rotation(_) | OddReflection(_)) => m + 1,
        (Identity, EvenReflection(_)) => 1,
        (Central, Rotation(_) | OddReflection(_)) => m + 1,
        (Central, EvenReflection(_)) => m,
        (Rotation(_), Rotation(_)) => m + 1,
        (Rotation(_), OddReflection(_)) => m + 3,
        (Rotation(_), EvenReflection(_)) => m + 2,
        (OddReflection(i), OddReflection(j)) => {
            if (i + 2 * n) % (4 * n) == j {
                m + 1
            } else {
                m + 3
            }
        }
        (OddReflection(_), EvenReflection(_)) => m + 2,
        (EvenReflection(_), EvenReflection(_)) => 2,
        (a, b) => {
            return Err(Error::Internal(format!("no detour case for {a:?}, {b:?}")));
        }
    })
}

pub fn sd_detour_eccentricity(n: usize, v: usize) -> Result<u32> {
    let m = 4 * n as u32;
    Ok(match sd_classify(n, v)? {
        SdClass::Identity | SdClass::Central => m + 1,
        SdClass::EvenReflection(_) => m + 2,
        SdClass::Rotation(_) | SdClass::OddReflection(_) => m + 3,
    })
}

pub fn sd_detour_degree(n: usize, v: usize) -> Result<usize> {
    Ok(match sd_classify(n, v)? {
        SdClass::OddReflection(_) => 6 * n - 4,
        SdClass::Rotation(_) => 2 * n,
        SdClass::Identity | SdClass::Central | SdClass::EvenReflection(_) => 6 * n - 2,
    })
}

/// Detour distance degree sequence of `v`, dense from distance 0.
pub fn sd_dds_closed_form(n: usize, v: usize) -> Result<Vec<usize>> {
    let zeros = |k: usize| std::iter::repeat_n(0, k);
    let seq: Vec<usize> = match sd_classify(n, v)? {
        SdClass::Identity => [1, 2 * n]
            .into_iter()
            .chain(zeros(4 * n - 3))
            .chain([1, 0, 6 * n - 2])
            .collect(),
        SdClass::Central => [1]
            .into_iter()
            .chain(zeros(4 * n - 2))
            .chain([1, 2 * n, 6 * n - 2])
            .collect(),
        SdClass::Rotation(_) => [1]
            .into_iter()
            .chain(zeros(4 * n))
            .chain([4 * n - 1, 2 * n, 2 * n])
            .collect(),
        SdClass::EvenReflection(_) => [1, 1, 2 * n - 1]
            .into_iter()
            .chain(zeros(4 * n - 3))
            .chain([1, 0, 6 * n - 2])
            .collect(),
        SdClass::OddReflection(_) => [1]
            .into_iter()
            .chain(zeros(4 * n))
            .chain([3, 2 * n, 6 * n - 4])
            .collect(),
    };
    Ok(seq)
}

/// `(rad_D, diam_D) = (4n + 1, 4n + 3)`.
pub fn sd_detour_radius_diameter(n: usize) -> (u32, u32) {
    let m = 4 * n as u32;
    (m + 1, m + 3)
}

/// Detour degree sequence `((6n-2)^{2n+2}, (6n-4)^{2n}, (2n)^{4n-2})`,
/// non-increasing.
pub fn sd_detour_degree_sequence(n: usize) -> Vec<usize> {
    let mut seq: Vec<usize> = std::iter::repeat_n(6 * n - 2, 2 * n + 2)
        .chain(std::iter::repeat_n(6 * n - 4, 2 * n))
        .chain(std::iter::repeat_n(2 * n, 4 * n - 2))
        .collect();
    seq.sort_unstable_by(|a, b| b.cmp(a));
    seq
}

/// `D_av = (8n² - n - 1) / 2n`.
pub fn sd_average_detour_degree(n: usize) -> Ratio<u64> {
    let n = n as u64;
    Ratio::new(8 * n * n - n - 1, 2 * n)
}

/// Vertex set claimed for the interior: `{e, a^{2n}}`.
pub fn sd_interior_claim(n: usize) -> Vec<usize> {
    vec![0, 2 * n]
}

/// Vertices of the eccentric subgraph: everything except `e`.
pub fn sd_eccentric_vertices(n: usize) -> Vec<usize> {
    (1..8 * n).collect()
}

/// Complete vertices: everything except `e` and `a^{2n}`.
pub fn sd_complete_vertices(n: usize) -> Vec<usize> {
    (1..8 * n).filter(|&v| v != 2 * n).collect()
}
