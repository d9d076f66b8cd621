//! Finite groups given by their multiplication table.
//!
//! Three parameterised families are built directly from their presentations
//! (semidihedral `SD_{8n}`, generalised quaternion `Q_{4n}`, dihedral
//! `D_{2n}`); anything else comes in through a Cayley table and is validated
//! on ingestion.
//!
//! Element indexing for the families is fixed: `a^0 .. a^{k-1}` first, then
//! `a^0 b .. a^{k-1} b`, where `k` is the order of `a`. Every downstream
//! module relies on that order.

use std::fmt;

use crate::error::{Error, Result};

/// Which construction produced a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Semidihedral(usize),
    Quaternion(usize),
    Dihedral(usize),
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Semidihedral(n) => write!(f, "SD_{}", 8 * n),
            Family::Quaternion(n) => write!(f, "Q_{}", 4 * n),
            Family::Dihedral(n) => write!(f, "D_{}", 2 * n),
            Family::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major, `table[x * order + y] = x·y`.
    table: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    family: Family,
}

/// `⟨generator⟩`, with members sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSubgroup {
    pub generator: usize,
    pub members: Vec<usize>,
}

impl CyclicSubgroup {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    fn is_subset_of(&self, other: &CyclicSubgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

/// Label for `a^i b^s`.
fn word(i: usize, reflection: bool) -> String {
    let a = match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    match (a.is_empty(), reflection) {
        (true, false) => "e".to_string(),
        (true, true) => "b".to_string(),
        (false, false) => a,
        (false, true) => format!("{a}b"),
    }
}

/// Builds a group on `a^i b^s` (`0 ≤ i < k`, `s ∈ {0, 1}`) from the rules
/// `b·a^j = a^{twist(j)} b` and `b² = a^{b_squared}`.
fn metacyclic(
    k: usize,
    twist: impl Fn(usize) -> usize,
    b_squared: usize,
    family: Family,
) -> FiniteGroup {
    let order = 2 * k;
    let decode = |x: usize| (x % k, x >= k);
    let encode = |i: usize, s: bool| (i % k) + if s { k } else { 0 };
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (i, s) = decode(x);
        for y in 0..order {
            let (j, t) = decode(y);
            // (a^i b^s)(a^j b^t) = a^{i + σ_s(j)} b^s b^t
            let mut exp = i + if s { twist(j) } else { j };
            if s && t {
                exp += b_squared;
            }
            table[x * order + y] = encode(exp, s ^ t);
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (i, s) = decode(x);
            word(i, s)
        })
        .collect();
    FiniteGroup {
        order,
        table,
        identity: 0,
        labels,
        family,
    }
}

/// `SD_{8n} = ⟨a, b : a^{4n} = b² = e, ba = a^{2n-1}b⟩`.
pub fn make_semidihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "semidihedral needs n >= 2, got {n}"
        )));
    }
    let k = 4 * n;
    // b·a^j = a^{j(2n-1)} b: a^{-j} for even j, a^{2n-j} for odd j.
    let twist = move |j: usize| (j * (2 * n - 1)) % k;
    Ok(metacyclic(k, twist, 0, Family::Semidihedral(n)))
}

/// `Q_{4n} = ⟨a, b : a^{2n} = e, b² = a^n, bab⁻¹ = a⁻¹⟩`.
pub fn make_generalized_quaternion(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Parameter(format!(
            "generalized quaternion needs n >= 2, got {n}"
        )));
    }
    let k = 2 * n;
    Ok(metacyclic(
        k,
        move |j| (k - j) % k,
        n,
        Family::Quaternion(n),
    ))
}

/// `D_{2n} = ⟨a, b : a^n = b² = e, bab = a⁻¹⟩`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Parameter(format!("dihedral needs n >= 3, got {n}")));
    }
    Ok(metacyclic(n, move |j| (n - j) % n, 0, Family::Dihedral(n)))
}

/// Parses and validates a Cayley table.
///
/// Line 1 holds the order `m`; the next `m` lines hold `m` whitespace
/// separated, 0-based products each. Element 0 must be the identity.
/// Anything after the last row other than whitespace is rejected.
pub fn load_cayley_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty input".into()))?;
    let order: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Malformed(format!("bad order line {:?}", header.trim())))?;
    if order == 0 {
        return Err(Error::Malformed("order must be positive".into()));
    }

    let mut table = Vec::with_capacity(order * order);
    for row in 0..order {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::Malformed(format!("missing row {row}")))?;
        let before = table.len();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Malformed(format!("line {}: bad entry {tok:?}", lineno + 1)))?;
            if v >= order {
                return Err(Error::Malformed(format!(
                    "line {}: entry {v} out of range for order {order}",
                    lineno + 1
                )));
            }
            table.push(v);
        }
        let got = table.len() - before;
        if got != order {
            return Err(Error::Malformed(format!(
                "row {row} has {got} entries, expected {order}"
            )));
        }
    }
    if let Some((lineno, line)) = lines.next() {
        return Err(Error::Malformed(format!(
            "trailing content on line {}: {:?}",
            lineno + 1,
            line.trim()
        )));
    }

    let labels = (0..order).map(|i| format!("g{i}")).collect();
    FiniteGroup::from_table(order, table, labels)
}

impl FiniteGroup {
    /// Validates an arbitrary table (Latin square, identity at 0,
    /// associativity) and wraps it as a custom group.
    pub fn from_table(order: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        if table.len() != order * order || labels.len() != order {
            return Err(Error::Malformed("table/label size mismatch".into()));
        }
        let mut seen = vec![false; order];
        for row in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for col in 0..order {
                let v = table[row * order + col];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::LatinRow { row, value: v });
                }
            }
        }
        for col in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for row in 0..order {
                let v = table[row * order + col];
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::LatinColumn { col, value: v });
                }
            }
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(Error::MissingIdentity { index: x });
            }
        }
        let g = FiniteGroup {
            order,
            table,
            identity: 0,
            labels,
            family: Family::Custom,
        };
        for x in 0..order {
            for y in 0..order {
                let xy = g.mul(x, y);
                for z in 0..order {
                    if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element carrying `label`, if any.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order)
            .find(|&y| self.mul(x, y) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::Index {
                index: x,
                size: self.order,
            })
        }
    }

    /// Least `k ≥ 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        let mut k = 1;
        let mut p = x;
        while p != self.identity {
            p = self.mul(p, x);
            k += 1;
        }
        Ok(k)
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Result<CyclicSubgroup> {
        self.check(x)?;
        let mut members = vec![self.identity];
        let mut p = x;
        while p != self.identity {
            members.push(p);
            p = self.mul(p, x);
        }
        members.sort_unstable();
        Ok(CyclicSubgroup {
            generator: x,
            members,
        })
    }

    /// Cyclic subgroups not properly contained in another cyclic subgroup.
    ///
    /// Each subgroup is reported once, with the smallest-index generator,
    /// in order of that generator.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<CyclicSubgroup> {
        let mut distinct: Vec<CyclicSubgroup> = Vec::new();
        for x in 0..self.order {
            let c = self.cyclic_subgroup(x).expect("index in range");
            if !distinct.iter().any(|d| d.members == c.members) {
                distinct.push(c);
            }
        }
        distinct
            .iter()
            .filter(|c| {
                !distinct
                    .iter()
                    .any(|d| d.len() > c.len() && c.is_subset_of(d))
            })
            .cloned()
            .collect()
    }

    /// Renders the group in the Cayley-table text format.
    pub fn render_table(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for x in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|y| self.mul(x, y).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Same table under a relabelling `perm[old] = new` (identity must map to 0).
    pub fn relabeled(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let m = self.order;
        let mut table = vec![0; m * m];
        for x in 0..m {
            for y in 0..m {
                table[perm[x] * m + perm[y]] = perm[self.mul(x, y)];
            }
        }
        let mut labels = vec![String::new(); m];
        for x in 0..m {
            labels[perm[x]] = self.labels[x].clone();
        }
        FiniteGroup::from_table(m, table, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(m: usize) -> FiniteGroup {
        let table = (0..m * m).map(|k| (k / m + k % m) % m).collect();
        FiniteGroup::from_table(m, table, (0..m).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn semidihedral_relations() {
        let g = make_semidihedral(2).unwrap();
        assert_eq!(g.order(), 16);
        let a = g.find("a").unwrap();
        let b = g.find("b").unwrap();
        assert_eq!(g.label(g.mul(b, a)), "a^3b");
        assert_eq!(g.mul(b, b), g.identity());
        assert_eq!(g.element_order(a).unwrap(), 8);
        assert_eq!(g.element_order(g.find("a^2b").unwrap()).unwrap(), 2);
        assert_eq!(g.element_order(g.find("ab").unwrap()).unwrap(), 4);
    }

    #[test]
    fn semidihedral_twist_rule() {
        for n in 2..6 {
            let g = make_semidihedral(n).unwrap();
            let k = 4 * n;
            let b = k;
            for i in 0..k {
                let expect = if i % 2 == 0 {
                    (k - i) % k
                } else {
                    (2 * n + k - i) % k
                };
                assert_eq!(g.mul(b, i), k + expect, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn quaternion_relations() {
        let q8 = make_generalized_quaternion(2).unwrap();
        assert_eq!(q8.order(), 8);
        let ab = q8.find("ab").unwrap();
        assert_eq!(q8.label(q8.pow(ab, 2)), "a^2");
        let involutions: Vec<_> = (0..8)
            .filter(|&x| q8.element_order(x).unwrap() == 2)
            .collect();
        assert_eq!(involutions, vec![q8.find("a^2").unwrap()]);

        let q12 = make_generalized_quaternion(3).unwrap();
        assert_eq!(q12.order(), 12);
        assert_eq!(q12.element_order(q12.find("a").unwrap()).unwrap(), 6);
        for i in 0..6 {
            assert_eq!(q12.element_order(6 + i).unwrap(), 4);
        }
    }

    #[test]
    fn dihedral_relations() {
        let d6 = make_dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        assert!(!d6.is_abelian());

        let d8 = make_dihedral(4).unwrap();
        let a2 = d8.find("a^2").unwrap();
        assert!((0..8).all(|x| d8.mul(a2, x) == d8.mul(x, a2)));

        for n in 3..9 {
            let d = make_dihedral(n).unwrap();
            let (a, b) = (1, n);
            assert_eq!(d.mul(d.mul(b, a), b), n - 1);
            assert!((n..2 * n).all(|x| d.element_order(x).unwrap() == 2));
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(make_semidihedral(1), Err(Error::Parameter(_))));
        assert!(matches!(
            make_generalized_quaternion(1),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(make_dihedral(2), Err(Error::Parameter(_))));
    }

    #[test]
    fn element_order_bounds() {
        let g = make_semidihedral(2).unwrap();
        assert_eq!(g.element_order(0).unwrap(), 1);
        assert!(matches!(g.element_order(16), Err(Error::Index { .. })));
    }

    #[test]
    fn trivial_table() {
        let g = load_cayley_table("1\n0").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.family(), Family::Custom);
        assert_eq!(g.maximal_cyclic_subgroups().len(), 1);
    }

    #[test]
    fn table_errors() {
        assert!(matches!(
            load_cayley_table("2\n0 0\n1 0\n"),
            Err(Error::LatinRow { row: 0, value: 0 })
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1\n0 1\n"),
            Err(Error::LatinColumn { col: 0, .. })
        ));
        assert!(matches!(
            load_cayley_table("2\n1 0\n0 1\n"),
            Err(Error::MissingIdentity { index: 0 })
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1\n1 0\n5"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1 0\n1 0\n"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            load_cayley_table("2\n0 1\n"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(load_cayley_table("x\n"), Err(Error::Malformed(_))));
        assert!(matches!(load_cayley_table(""), Err(Error::Malformed(_))));
        assert!(matches!(
            load_cayley_table("2\n0 1\n1 2\n"),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn non_associative_latin_square() {
        // Latin square with identity 0 that is a loop but not a group.
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(matches!(
            load_cayley_table(text),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn maximal_cyclic_semidihedral() {
        let g = make_semidihedral(2).unwrap();
        let mcs = g.maximal_cyclic_subgroups();
        let mut sizes: Vec<usize> = mcs.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 2, 4, 4, 8]);
    }

    #[test]
    fn maximal_cyclic_of_cyclic_group() {
        let c6 = cyclic(6);
        let mcs = c6.maximal_cyclic_subgroups();
        assert_eq!(mcs.len(), 1);
        assert_eq!(mcs[0].members, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn maximal_cyclic_q8() {
        let q8 = make_generalized_quaternion(2).unwrap();
        let mcs = q8.maximal_cyclic_subgroups();
        assert_eq!(mcs.len(), 3);
        assert!(mcs.iter().all(|c| c.len() == 4));
        let a2 = q8.find("a^2").unwrap();
        assert!(mcs.iter().all(|c| c.contains(a2)));
    }

    #[test]
    fn render_round_trip_families() {
        for g in [
            make_semidihedral(3).unwrap(),
            make_generalized_quaternion(4).unwrap(),
            make_dihedral(5).unwrap(),
        ] {
            let back = load_cayley_table(&g.render_table()).unwrap();
            assert_eq!(back.order(), g.order());
            assert!((0..g.order()).all(|x| (0..g.order()).all(|y| back.mul(x, y) == g.mul(x, y))));
        }
    }
}
