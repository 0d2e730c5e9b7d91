//! Finite groups given by multiplication tables: conjugacy classes,
//! subgroup enumeration, quotients, and character tables.
//!
//! Character tables of abelian groups are computed directly (all irreducibles
//! are one-dimensional homomorphisms into roots of unity). Non-abelian groups
//! appearing in the bundled corpus are recognized by order and element-order
//! histogram and given their standard tables; class columns with the same
//! (element order, class size) signature are interchangeable under a group
//! automorphism, so any signature-respecting assignment yields a valid table.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::error::{FusionError, Result};

/// A finite group presented by its multiplication table. Element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    mul: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn from_table(name: &str, mul: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = mul.len();
        let bad = |reason: &str| {
            Err(FusionError::InvalidModel(format!(
                "group `{name}`: {reason}"
            )))
        };
        if n == 0 {
            return bad("empty table");
        }
        for row in &mul {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return bad("table is not square over 0..n");
            }
        }
        for i in 0..n {
            if mul[0][i] != i || mul[i][0] != i {
                return bad("element 0 is not an identity");
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if mul[mul[i][j]][k] != mul[i][mul[j][k]] {
                        return bad("table is not associative");
                    }
                }
            }
        }
        let g = FiniteGroup {
            name: name.to_string(),
            mul,
        };
        for i in 0..n {
            if (0..n).all(|j| g.mul[i][j] != 0) {
                return bad("an element has no inverse");
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == 0).unwrap()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Integer power, with negative exponents via the inverse.
    pub fn pow(&self, a: usize, e: i64) -> usize {
        let (base, e) = if e < 0 {
            (self.inv(a), (-e) as u64)
        } else {
            (a, e as u64)
        };
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul[acc][base];
        }
        acc
    }

    /// Conjugacy classes; the identity class comes first, the rest sorted by
    /// (element order, class size, smallest member).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: BTreeSet<usize> = BTreeSet::new();
            for g in 0..n {
                class.insert(self.mul[self.mul[g][a]][self.inv(g)]);
            }
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by_key(|c| {
            let first = c[0];
            (
                if first == 0 { 0 } else { 1 },
                self.element_order(first),
                c.len(),
                first,
            )
        });
        classes
    }

    /// The subgroup generated by a set of elements, as a sorted element list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let mut frontier: Vec<usize> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul[x][g], self.mul[x][self.inv(g)]] {
                    if set.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, each as a sorted element list, ordered by (order, elements).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![0]);
        // Close under adding one generator at a time; terminates because the
        // subgroup lattice of a group of order <= 24 is small.
        let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
        while let Some(h) = frontier.pop() {
            for g in 1..n {
                if h.contains(&g) {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let sub = self.generated_subgroup(&gens);
                if found.insert(sub.clone()) {
                    frontier.push(sub);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }

    /// Classical normality by brute-force conjugation.
    pub fn is_normal_subgroup(&self, subgroup: &[usize]) -> bool {
        let set: BTreeSet<usize> = subgroup.iter().copied().collect();
        (0..self.order()).all(|g| {
            subgroup
                .iter()
                .all(|&h| set.contains(&self.mul[self.mul[g][h]][self.inv(g)]))
        })
    }

    /// The subgroup as a group in its own right, together with the map from
    /// its element indices back into this group.
    pub fn subgroup_as_group(&self, name: &str, subgroup: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let index: BTreeMap<usize, usize> = subgroup
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();
        if subgroup.first() != Some(&0) {
            return Err(FusionError::InvalidModel(format!(
                "subgroup of `{}` must contain the identity first",
                self.name
            )));
        }
        let mut mul = vec![vec![0usize; subgroup.len()]; subgroup.len()];
        for (i, &a) in subgroup.iter().enumerate() {
            for (j, &b) in subgroup.iter().enumerate() {
                let p = self.mul[a][b];
                match index.get(&p) {
                    Some(&k) => mul[i][j] = k,
                    None => {
                        return Err(FusionError::InvalidModel(format!(
                            "subset is not closed under multiplication in `{}`",
                            self.name
                        )))
                    }
                }
            }
        }
        Ok((FiniteGroup::from_table(name, mul)?, subgroup.to_vec()))
    }

    /// Quotient by a normal subgroup: the quotient group and the surjection
    /// map element → coset index.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal_subgroup(normal) {
            return Err(FusionError::NotHomomorphism(format!(
                "subgroup is not normal in `{}`",
                self.name
            )));
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &h in normal {
                coset_of[self.mul[g][h]] = idx;
            }
        }
        let q = reps.len();
        let mut mul = vec![vec![0usize; q]; q];
        for i in 0..q {
            for j in 0..q {
                mul[i][j] = coset_of[self.mul[reps[i]][reps[j]]];
            }
        }
        let name = format!("{}/N{}", self.name, normal.len());
        Ok((FiniteGroup::from_table(&name, mul)?, coset_of))
    }

    /// Histogram element order → count, used to recognize small groups.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }
}

// ---------------------------------------------------------------------------
// Builtin groups
// ---------------------------------------------------------------------------

/// ℤ/k with elements 0..k and addition.
pub fn cyclic(k: usize) -> FiniteGroup {
    assert!(k >= 1);
    let mul = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
    FiniteGroup::from_table(&format!("Z{k}"), mul).unwrap()
}

fn perm_group(name: &str, degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    let id: Vec<usize> = (0..degree).collect();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
        (0..degree).map(|i| p[q[i]]).collect()
    };
    let mut elems: Vec<Vec<usize>> = vec![id.clone()];
    let mut seen: BTreeSet<Vec<usize>> = elems.iter().cloned().collect();
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = compose(&elems[i], g);
            if seen.insert(p.clone()) {
                elems.push(p);
            }
        }
        i += 1;
    }
    let index: BTreeMap<Vec<usize>, usize> = elems
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mul = elems
        .iter()
        .map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect())
        .collect();
    FiniteGroup::from_table(name, mul).unwrap()
}

pub fn symmetric_3() -> FiniteGroup {
    perm_group("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

pub fn symmetric_4() -> FiniteGroup {
    perm_group("S4", 4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
}

pub fn alternating_4() -> FiniteGroup {
    perm_group("A4", 4, &[vec![1, 0, 3, 2], vec![1, 2, 0, 3]])
}

/// Dihedral group of order 8 acting on the square.
pub fn dihedral_4() -> FiniteGroup {
    perm_group("D4", 4, &[vec![1, 2, 3, 0], vec![1, 0, 3, 2]])
}

/// Quaternion group {±1, ±i, ±j, ±k} as signed permutations of C^2 encoded
/// by an explicit multiplication table over [1, -1, i, -i, j, -j, k, -k].
pub fn quaternion_8() -> FiniteGroup {
    // index: 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    let neg = |x: usize| x ^ 1;
    let base = |x: usize| x & !1;
    let sign = |x: usize| x & 1;
    let mut mul = vec![vec![0usize; 8]; 8];
    let prod = |a: usize, b: usize| -> usize {
        // products of 1, i, j, k up to sign
        match (a, b) {
            (0, y) => y,
            (x, 0) => x,
            (2, 2) | (4, 4) | (6, 6) => 1,
            (2, 4) => 6,
            (4, 2) => 7,
            (4, 6) => 2,
            (6, 4) => 3,
            (6, 2) => 4,
            (2, 6) => 5,
            _ => unreachable!(),
        }
    };
    for a in 0..8 {
        for b in 0..8 {
            let p = prod(base(a), base(b));
            let s = sign(a) ^ sign(b) ^ sign(p);
            mul[a][b] = if s == 1 { neg(base(p)) } else { base(p) };
        }
    }
    FiniteGroup::from_table("Q8", mul).unwrap()
}

/// Bundled finite group by name (`Z1`..`Z12`, `S3`, `S4`, `A4`, `D4`, `Q8`).
pub fn builtin_group(name: &str) -> Option<FiniteGroup> {
    if let Some(k) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        if (1..=12).contains(&k) {
            return Some(cyclic(k));
        }
        return None;
    }
    match name {
        "S3" => Some(symmetric_3()),
        "S4" => Some(symmetric_4()),
        "A4" => Some(alternating_4()),
        "D4" => Some(dihedral_4()),
        "Q8" => Some(quaternion_8()),
        _ => None,
    }
}

pub fn builtin_group_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=12).map(|k| format!("Z{k}")).collect();
    names.extend(["S3", "S4", "A4", "D4", "Q8"].map(String::from));
    names
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

/// Raw character-table data: values are complex, rows are irreducibles,
/// columns follow `conjugacy_classes()` order.
#[derive(Clone, Debug)]
pub struct RawCharTable {
    pub name: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub irrep_names: Vec<String>,
    pub values: Vec<Vec<Complex64>>,
}

fn root_of_unity(num: usize, den: usize) -> Complex64 {
    let theta = 2.0 * std::f64::consts::PI * (num as f64) / (den as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// All one-dimensional characters of an abelian group, found by extending
/// root-of-unity assignments on a greedy generating set and keeping the
/// assignments that are multiplicative on the whole table.
fn abelian_characters(g: &FiniteGroup) -> Vec<Vec<Complex64>> {
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = g.generated_subgroup(&gens);
    while generated.len() < n {
        let next = (1..n).find(|e| !generated.contains(e)).unwrap();
        gens.push(next);
        generated = g.generated_subgroup(&gens);
    }

    let orders: Vec<usize> = gens.iter().map(|&e| g.element_order(e)).collect();
    let total: usize = orders.iter().product();

    let mut chars: Vec<Vec<Complex64>> = Vec::new();
    for mut code in 0..total {
        let choice: Vec<usize> = orders
            .iter()
            .map(|&m| {
                let c = code % m;
                code /= m;
                c
            })
            .collect();

        // Propagate the candidate generator values over the whole group.
        let mut chi: Vec<Option<Complex64>> = vec![None; n];
        chi[0] = Some(Complex64::new(1.0, 0.0));
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            let vx = chi[x].unwrap();
            for (gi, &gen) in gens.iter().enumerate() {
                let y = g.mul(x, gen);
                let vy = vx * root_of_unity(choice[gi], orders[gi]);
                if chi[y].is_none() {
                    chi[y] = Some(vy);
                    frontier.push(y);
                }
            }
        }
        let full: Vec<Complex64> = chi.into_iter().map(|v| v.unwrap()).collect();
        let multiplicative = (0..n)
            .all(|a| (0..n).all(|b| (full[g.mul(a, b)] - full[a] * full[b]).norm() < 1e-9));
        let duplicate = chars
            .iter()
            .any(|c| c.iter().zip(&full).all(|(u, v)| (u - v).norm() < 1e-9));
        if multiplicative && !duplicate {
            chars.push(full);
        }
    }
    debug_assert_eq!(chars.len(), n);

    // Canonical order: trivial character (all ones) first, then by rounded
    // value pattern.
    let is_trivial =
        |c: &[Complex64]| c.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    let key = |c: &[Complex64]| -> Vec<(i64, i64)> {
        c.iter()
            .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
            .collect()
    };
    chars.sort_by(|a, b| {
        (!is_trivial(a), key(a))
            .cmp(&(!is_trivial(b), key(b)))
    });
    chars
}

/// Standard character tables for the non-abelian groups of the corpus, as
/// rows over class signatures (element order, class size).
struct StandardTable {
    /// (element order, class size) per column.
    signatures: Vec<(usize, usize)>,
    names: Vec<&'static str>,
    rows: Vec<Vec<Complex64>>,
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn standard_table(g: &FiniteGroup) -> Option<StandardTable> {
    let hist = g.order_histogram();
    let key: Vec<(usize, usize)> = hist.into_iter().collect();
    let omega = root_of_unity(1, 3);
    let omega2 = root_of_unity(2, 3);
    match (g.order(), key.as_slice()) {
        // S3: orders 1,2,3 with counts 1,3,2
        (6, [(1, 1), (2, 3), (3, 2)]) => Some(StandardTable {
            signatures: vec![(1, 1), (2, 3), (3, 2)],
            names: vec!["triv", "sign", "std"],
            rows: vec![
                vec![c(1.0), c(1.0), c(1.0)],
                vec![c(1.0), c(-1.0), c(1.0)],
                vec![c(2.0), c(0.0), c(-1.0)],
            ],
        }),
        // D4: orders 1,2,4 with counts 1,5,2
        (8, [(1, 1), (2, 5), (4, 2)]) => Some(StandardTable {
            signatures: vec![(1, 1), (2, 1), (2, 2), (2, 2), (4, 2)],
            names: vec!["triv", "chi_r", "chi_s", "chi_rs", "two"],
            rows: vec![
                vec![c(1.0), c(1.0), c(1.0), c(1.0), c(1.0)],
                vec![c(1.0), c(1.0), c(-1.0), c(-1.0), c(1.0)],
                vec![c(1.0), c(1.0), c(1.0), c(-1.0), c(-1.0)],
                vec![c(1.0), c(1.0), c(-1.0), c(1.0), c(-1.0)],
                vec![c(2.0), c(-2.0), c(0.0), c(0.0), c(0.0)],
            ],
        }),
        // Q8: orders 1,2,4 with counts 1,1,6
        (8, [(1, 1), (2, 1), (4, 6)]) => Some(StandardTable {
            signatures: vec![(1, 1), (2, 1), (4, 2), (4, 2), (4, 2)],
            names: vec!["triv", "chi_i", "chi_j", "chi_k", "two"],
            rows: vec![
                vec![c(1.0), c(1.0), c(1.0), c(1.0), c(1.0)],
                vec![c(1.0), c(1.0), c(1.0), c(-1.0), c(-1.0)],
                vec![c(1.0), c(1.0), c(-1.0), c(1.0), c(-1.0)],
                vec![c(1.0), c(1.0), c(-1.0), c(-1.0), c(1.0)],
                vec![c(2.0), c(-2.0), c(0.0), c(0.0), c(0.0)],
            ],
        }),
        // A4: orders 1,2,3 with counts 1,3,8
        (12, [(1, 1), (2, 3), (3, 8)]) => Some(StandardTable {
            signatures: vec![(1, 1), (2, 3), (3, 4), (3, 4)],
            names: vec!["triv", "omega", "omega_bar", "three"],
            rows: vec![
                vec![c(1.0), c(1.0), c(1.0), c(1.0)],
                vec![c(1.0), c(1.0), omega, omega2],
                vec![c(1.0), c(1.0), omega2, omega],
                vec![c(3.0), c(-1.0), c(0.0), c(0.0)],
            ],
        }),
        // S4: orders 1,2,3,4 with counts 1,9,8,6
        (24, [(1, 1), (2, 9), (3, 8), (4, 6)]) => Some(StandardTable {
            signatures: vec![(1, 1), (2, 6), (2, 3), (3, 8), (4, 6)],
            names: vec!["triv", "sign", "two", "std", "std_sign"],
            rows: vec![
                vec![c(1.0), c(1.0), c(1.0), c(1.0), c(1.0)],
                vec![c(1.0), c(-1.0), c(1.0), c(1.0), c(-1.0)],
                vec![c(2.0), c(0.0), c(2.0), c(-1.0), c(0.0)],
                vec![c(3.0), c(1.0), c(-1.0), c(0.0), c(-1.0)],
                vec![c(3.0), c(-1.0), c(-1.0), c(0.0), c(1.0)],
            ],
        }),
        _ => None,
    }
}

/// Character table of a group of order at most 24.
pub fn character_table(g: &FiniteGroup) -> Result<RawCharTable> {
    let classes = g.conjugacy_classes();
    let class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();

    if g.is_abelian() {
        let chars = abelian_characters(g);
        let values: Vec<Vec<Complex64>> = chars
            .iter()
            .map(|chi| classes.iter().map(|c| chi[c[0]]).collect())
            .collect();
        let irrep_names = (0..values.len()).map(|i| format!("chi{i}")).collect();
        return Ok(RawCharTable {
            name: g.name.clone(),
            order: g.order(),
            class_sizes,
            irrep_names,
            values,
        });
    }

    let std_table = standard_table(g).ok_or_else(|| FusionError::Unsupported(format!(
        "no bundled character table for non-abelian group `{}` of order {}",
        g.name,
        g.order()
    )))?;

    // Match each computed class to a standard column by signature. Columns
    // sharing a signature are related by an automorphism, so assignment
    // order inside a signature group does not matter.
    let mut used = vec![false; std_table.signatures.len()];
    let mut column_of = vec![0usize; classes.len()];
    for (ci, class) in classes.iter().enumerate() {
        let sig = (g.element_order(class[0]), class.len());
        let col = std_table
            .signatures
            .iter()
            .enumerate()
            .find(|(j, s)| !used[*j] && **s == sig)
            .map(|(j, _)| j)
            .ok_or_else(|| FusionError::Unsupported(format!(
                "class signature {:?} not found in standard table for `{}`",
                sig, g.name
            )))?;
        used[col] = true;
        column_of[ci] = col;
    }

    let values: Vec<Vec<Complex64>> = std_table
        .rows
        .iter()
        .map(|row| column_of.iter().map(|&col| row[col]).collect())
        .collect();
    Ok(RawCharTable {
        name: g.name.clone(),
        order: g.order(),
        class_sizes,
        irrep_names: std_table.names.iter().map(|s| s.to_string()).collect(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orthogonality_holds(t: &RawCharTable) {
        let n = t.values.len();
        for i in 0..n {
            for j in 0..n {
                let mut inner = Complex64::new(0.0, 0.0);
                for (c, &size) in t.class_sizes.iter().enumerate() {
                    inner += t.values[i][c] * t.values[j][c].conj() * (size as f64);
                }
                inner /= t.order as f64;
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (inner - Complex64::new(expect, 0.0)).norm() < 1e-9,
                    "orthogonality fails for {} rows {i},{j}: {inner}",
                    t.name
                );
            }
        }
        let dim_sq: f64 = t.values.iter().map(|r| (r[0].re).powi(2)).sum();
        assert!((dim_sq - t.order as f64).abs() < 1e-9);
    }

    #[test]
    fn builtin_groups_have_expected_orders() {
        assert_eq!(symmetric_3().order(), 6);
        assert_eq!(symmetric_4().order(), 24);
        assert_eq!(alternating_4().order(), 12);
        assert_eq!(dihedral_4().order(), 8);
        assert_eq!(quaternion_8().order(), 8);
        assert_eq!(cyclic(12).order(), 12);
    }

    #[test]
    fn q8_has_unique_involution() {
        let q8 = quaternion_8();
        let hist = q8.order_histogram();
        assert_eq!(hist.get(&2), Some(&1));
        assert_eq!(hist.get(&4), Some(&6));
    }

    #[test]
    fn char_tables_are_orthogonal() {
        for name in builtin_group_names() {
            let g = builtin_group(&name).unwrap();
            let t = character_table(&g).unwrap();
            assert_eq!(t.values.len(), g.conjugacy_classes().len());
            orthogonality_holds(&t);
        }
    }

    #[test]
    fn subgroup_char_tables_are_orthogonal() {
        for name in ["S3", "D4", "Q8", "A4", "S4"] {
            let g = builtin_group(name).unwrap();
            for sub in g.subgroups() {
                let (h, _) = g.subgroup_as_group("H", &sub).unwrap();
                let t = character_table(&h).unwrap();
                orthogonality_holds(&t);
            }
        }
    }

    #[test]
    fn subgroup_counts_match_known_values() {
        assert_eq!(symmetric_3().subgroups().len(), 6);
        assert_eq!(dihedral_4().subgroups().len(), 10);
        assert_eq!(quaternion_8().subgroups().len(), 6);
        assert_eq!(alternating_4().subgroups().len(), 10);
        assert_eq!(symmetric_4().subgroups().len(), 30);
    }

    #[test]
    fn normality_brute_force_matches_known_facts() {
        let s3 = symmetric_3();
        let subs = s3.subgroups();
        // A3 (order 3) is normal, the order-2 subgroups are not
        for sub in &subs {
            let normal = s3.is_normal_subgroup(sub);
            match sub.len() {
                1 | 6 | 3 => assert!(normal),
                2 => assert!(!normal),
                _ => unreachable!(),
            }
        }
        // all subgroups of Q8 are normal
        let q8 = quaternion_8();
        for sub in q8.subgroups() {
            assert!(q8.is_normal_subgroup(&sub));
        }
    }

    #[test]
    fn quotient_of_s4_by_v4_is_s3() {
        let s4 = symmetric_4();
        let v4: Vec<usize> = s4
            .subgroups()
            .into_iter()
            .find(|s| s.len() == 4 && s4.is_normal_subgroup(s))
            .unwrap();
        let (q, map) = s4.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        // surjection property
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(map[s4.mul(a, b)], q.mul(map[a], map[b]));
            }
        }
    }
}
