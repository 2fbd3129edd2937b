//! The 120 icosians as quaternions over Z[φ] at standard scale.
//!
//! Standard scale is twice the unit-quaternion scale, so every coordinate is
//! a golden integer and every vertex has natural norm 4. Products are
//! rescaled by ½ to stay at standard scale.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::golden::GoldenInt;

/// A 4-vector over Z[φ]; doubles as a quaternion `c0 + c1 i + c2 j + c3 k`.
///
/// `Ord` is lexicographic on the `(a, b)` pairs of the coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IcosianVec(pub [GoldenInt; 4]);

impl IcosianVec {
    pub const fn new(c: [GoldenInt; 4]) -> Self {
        IcosianVec(c)
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        IcosianVec(c.map(GoldenInt::int))
    }

    /// Standard-scale unit `1_I = (2, 0, 0, 0)`.
    pub fn unit() -> Self {
        Self::from_ints([2, 0, 0, 0])
    }

    pub fn dot(&self, o: &Self) -> GoldenInt {
        self.0.iter().zip(&o.0).map(|(&x, &y)| x * y).sum()
    }

    pub fn norm(&self) -> GoldenInt {
        self.dot(self)
    }

    pub fn scale(&self, k: GoldenInt) -> Self {
        IcosianVec(self.0.map(|c| c * k))
    }

    /// Quaternion conjugate.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.0;
        IcosianVec([a, -b, -c, -d])
    }

    /// Raw quaternion product, without rescaling.
    pub fn qmul(&self, o: &Self) -> Self {
        let [a0, a1, a2, a3] = self.0;
        let [b0, b1, b2, b3] = o.0;
        IcosianVec([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }

    pub fn div_int_exact(&self, d: i64) -> Option<Self> {
        let mut out = [GoldenInt::ZERO; 4];
        for (o, c) in out.iter_mut().zip(self.0) {
            *o = c.div_int_exact(d)?;
        }
        Some(IcosianVec(out))
    }

    /// Standard-scale product `u·v / 2`, if it stays integral.
    pub fn mul_half(&self, o: &Self) -> Option<Self> {
        self.qmul(o).div_int_exact(2)
    }

    /// Multiset of absolute values, sorted by numeric value.
    pub fn shape(&self) -> [GoldenInt; 4] {
        let mut s = self.0.map(GoldenInt::abs);
        s.sort_by(|x, y| x.cmp_value(*y));
        s
    }
}

impl Add for IcosianVec {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        IcosianVec(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for IcosianVec {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        IcosianVec(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for IcosianVec {
    type Output = Self;
    fn neg(self) -> Self {
        IcosianVec(self.0.map(|c| -c))
    }
}

impl fmt::Display for IcosianVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

const EVEN_PERMS: [[usize; 4]; 12] = [
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 2, 1, 0],
];

fn apply_signs(base: [GoldenInt; 4], mask: u8) -> [GoldenInt; 4] {
    std::array::from_fn(|i| {
        if mask & (1 << i) != 0 {
            -base[i]
        } else {
            base[i]
        }
    })
}

/// The 120 vertices: `(±2,0,0,0)^S`, `(±1,±1,±1,±1)` and even permutations
/// of `(0,±1,±φ,±φ⁻¹)`, sorted.
pub fn generate_vertices() -> Vec<IcosianVec> {
    let mut out = Vec::with_capacity(120);
    for i in 0..4 {
        for s in [2, -2] {
            let mut c = [0; 4];
            c[i] = s;
            out.push(IcosianVec::from_ints(c));
        }
    }
    for mask in 0..16u8 {
        out.push(IcosianVec(apply_signs([GoldenInt::ONE; 4], mask)));
    }
    let base = [
        GoldenInt::ZERO,
        GoldenInt::ONE,
        GoldenInt::PHI,
        GoldenInt::PHI_INV,
    ];
    for perm in EVEN_PERMS {
        for mask in 0..8u8 {
            // the zero coordinate carries no sign
            let signed = apply_signs(base, mask << 1);
            out.push(IcosianVec(perm.map(|p| signed[p])));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The binary icosahedral group 2A5 with a precomputed Cayley table.
#[derive(Clone, Debug)]
pub struct Icosians {
    vertices: Vec<IcosianVec>,
    index: HashMap<IcosianVec, usize>,
    table: Vec<u8>,
    identity: usize,
    negation: Vec<usize>,
    inverse: Vec<usize>,
}

impl Icosians {
    pub fn new() -> Result<Self> {
        let vertices = generate_vertices();
        let index: HashMap<_, _> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let n = vertices.len();
        let mut table = vec![0u8; n * n];
        for (i, u) in vertices.iter().enumerate() {
            for (j, v) in vertices.iter().enumerate() {
                let p = u
                    .mul_half(v)
                    .and_then(|p| index.get(&p).copied())
                    .ok_or_else(|| Error::NotInGroup(format!("{u} · {v}")))?;
                table[i * n + j] = p as u8;
            }
        }
        let identity = index[&IcosianVec::unit()];
        let negation = vertices.iter().map(|v| index[&-*v]).collect();
        let inverse = (0..n)
            .map(|i| (0..n).find(|&j| table[i * n + j] as usize == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotInGroup("element without inverse".into()))?;
        Ok(Icosians {
            vertices,
            index,
            table,
            identity,
            negation,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[IcosianVec] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> IcosianVec {
        self.vertices[i]
    }

    pub fn index_of(&self, v: &IcosianVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn neg(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Index of `vertices[i] · vertices[j]` (standard scale).
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.table[i * self.len() + j] as usize
    }

    /// Standard-scale product of two icosians; fails when the product is not a vertex.
    pub fn mul(&self, u: &IcosianVec, v: &IcosianVec) -> Result<IcosianVec> {
        u.mul_half(v)
            .filter(|p| self.index.contains_key(p))
            .ok_or_else(|| Error::NotInGroup(format!("{u} · {v}")))
    }

    pub fn pow_idx(&self, i: usize, k: u32) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul_idx(acc, i))
    }

    /// Least k ≥ 1 with `vᵏ = 1_I`.
    pub fn order(&self, i: usize) -> u32 {
        let mut k = 1;
        let mut acc = i;
        while acc != self.identity {
            acc = self.mul_idx(acc, i);
            k += 1;
        }
        k
    }

    /// First vertex (in sorted order) of order 5.
    pub fn find_order5(&self) -> usize {
        (0..self.len())
            .find(|&i| self.order(i) == 5)
            .expect("2A5 has elements of order 5")
    }

    /// The 24-cell 2A4: shapes `(±2,0,0,0)^S` and `(±1,±1,±1,±1)`.
    pub fn binary_tetrahedral(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.vertices[i].0.iter().all(|c| c.b == 0))
            .collect()
    }

    /// The quaternion group `(±2,0,0,0)^S`.
    pub fn quaternion_group(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.vertices[i].0.iter().filter(|c| !c.is_zero()).count() == 1)
            .collect()
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul_idx(x, g);
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    /// Normalizer of a subgroup given as a sorted index list.
    pub fn normalizer(&self, sub: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        for &s in sub {
            member[s] = true;
        }
        (0..self.len())
            .filter(|&x| {
                let xi = self.inverse[x];
                sub.iter()
                    .all(|&s| member[self.mul_idx(self.mul_idx(x, s), xi)])
            })
            .collect()
    }

    /// Left multiplication `y ↦ x·y` as a permutation of vertex indices.
    pub fn left_perm(&self, x: usize) -> Vec<usize> {
        (0..self.len()).map(|y| self.mul_idx(x, y)).collect()
    }

    /// Right multiplication `y ↦ y·x` as a permutation of vertex indices.
    pub fn right_perm(&self, x: usize) -> Vec<usize> {
        (0..self.len()).map(|y| self.mul_idx(y, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn group() -> Icosians {
        Icosians::new().unwrap()
    }

    #[test]
    fn vertex_census() {
        let v = generate_vertices();
        assert_eq!(v.len(), 120);
        assert!(v.iter().all(|x| x.norm() == GoldenInt::int(4)));
        let shape_counts = v.iter().fold([0; 3], |mut acc, x| {
            let nonzero = x.0.iter().filter(|c| !c.is_zero()).count();
            match (nonzero, x.0.iter().any(|c| c.b != 0)) {
                (1, _) => acc[0] += 1,
                (4, false) => acc[1] += 1,
                _ => acc[2] += 1,
            }
            acc
        });
        assert_eq!(shape_counts, [8, 16, 96]);
        let set: std::collections::HashSet<_> = v.iter().collect();
        assert!(v.iter().all(|x| set.contains(&-*x)));
    }

    #[test]
    fn cayley_table_is_a_group() {
        let g = group();
        let n = g.len();
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[g.mul_idx(i, j)] = true;
                col[g.mul_idx(j, i)] = true;
            }
            assert!(
                row.iter().all(|&b| b) && col.iter().all(|&b| b),
                "not latin at {i}"
            );
            assert_eq!(g.mul_idx(g.identity(), i), i);
            assert_eq!(g.mul_idx(i, g.inverse(i)), g.identity());
            // inverse of a unit is the conjugate at standard scale
            assert_eq!(g.vertex(g.inverse(i)), g.vertex(i).conj());
        }
    }

    #[test]
    fn products_outside_the_group_are_errors() {
        let g = group();
        let v = g.vertex(5);
        let big = IcosianVec::from_ints([2, 2, 0, 0]);
        assert!(g.mul(&v, &big).is_err());
        assert!(g.mul(&v, &g.vertex(7)).is_ok());
    }

    #[test]
    fn element_orders() {
        let g = group();
        assert_eq!(g.order(g.identity()), 1);
        assert_eq!(g.order(g.neg(g.identity())), 2);
        let mut hist = BTreeMap::new();
        for i in 0..g.len() {
            let k = g.order(i);
            // independent route: raw quaternion powers without the table
            let v = g.vertex(i);
            let mut p = v;
            let mut direct = 1;
            while p != IcosianVec::unit() {
                p = p.mul_half(&v).unwrap();
                direct += 1;
            }
            assert_eq!(k, direct);
            *hist.entry(k).or_insert(0) += 1;
        }
        let expected: BTreeMap<u32, i32> =
            [(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]
                .into_iter()
                .collect();
        assert_eq!(hist, expected);
    }

    #[test]
    fn order5_transversal_of_2a4() {
        let g = group();
        let five = g.find_order5();
        assert_eq!(g.pow_idx(five, 5), g.identity());
        let t = g.binary_tetrahedral();
        assert_eq!(t.len(), 24);
        assert!(!t.contains(&five));
        let mut hit = vec![0; g.len()];
        for i in 0..5 {
            let gi = g.pow_idx(five, i);
            for &x in &t {
                hit[g.mul_idx(gi, x)] += 1;
            }
        }
        assert!(hit.iter().all(|&h| h == 1));
        assert!((0..five).all(|i| g.order(i) != 5));
    }

    #[test]
    fn binary_tetrahedral_is_a_subgroup() {
        let g = group();
        let t = g.binary_tetrahedral();
        for &x in &t {
            for &y in &t {
                assert!(t.contains(&g.mul_idx(x, y)));
            }
        }
        assert_eq!(g.normalizer(&t), t);
        assert_eq!(g.normalizer(&g.quaternion_group()), t);
    }

    #[test]
    fn multiplication_is_an_isometry() {
        let g = group();
        let v = g.vertices();
        for &m in &[g.find_order5(), 17, 101] {
            let u = g.vertex(m);
            for a in (0..120).step_by(7) {
                for b in 0..120 {
                    let d = v[a].dot(&v[b]);
                    assert_eq!(
                        u.mul_half(&v[a]).unwrap().dot(&u.mul_half(&v[b]).unwrap()),
                        d
                    );
                    assert_eq!(
                        v[a].mul_half(&u).unwrap().dot(&v[b].mul_half(&u).unwrap()),
                        d
                    );
                }
            }
        }
    }
}
