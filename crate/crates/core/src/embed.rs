//! Z-lattices obtained from golden lattices by norm reduction.
//!
//! Every frame used here is a [`ReductionMap`] applied to standard-scale
//! vertices (natural norm 4). The E8 frame uses `m = -1` with the form
//! halved, which sends a golden coordinate `a + bφ` to the integer slots
//! `(a, b)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{ensure, invariant, Error, Result};
use crate::golden::{GoldenInt, GoldenRational, Rational, ReductionMap};
use crate::icosian::{IcosianVec, Icosians};
use crate::polytopes::{inner_product_spectrum, paper_inner_product, Cell120, Cell600};

type Big = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    H,
    PhiH,
    Cell120,
    Rectified,
    Other,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::H => "H",
            Source::PhiH => "phiH",
            Source::Cell120 => "120-cell",
            Source::Rectified => "rectified",
            Source::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbeddedVec {
    pub coords: Vec<Rational>,
    pub source: Source,
}

pub fn golden_coords(v: &IcosianVec) -> [GoldenRational; 4] {
    v.0.map(GoldenRational::from)
}

/// The E8 frame: standard scale, `m = -1`, form halved.
pub fn e8_map() -> ReductionMap {
    ReductionMap::golden(-1)
        .and_then(|m| m.with_multiplier(Rational::new(1, 2)))
        .expect("valid E8 frame")
}

/// The conjugate E8 frame with `m = +1`.
pub fn e8_map_conjugate() -> ReductionMap {
    ReductionMap::golden(1)
        .and_then(|m| m.with_multiplier(Rational::new(1, 2)))
        .expect("valid E8 frame")
}

/// The frame of the lattice L: `m = 0` with the full form.
pub fn lattice_l_map() -> ReductionMap {
    ReductionMap::golden(0).expect("valid frame")
}

/// Embeds golden vectors, certifying norms and injectivity.
pub fn embed_set(
    vectors: &[IcosianVec],
    map: &ReductionMap,
    source: Source,
) -> Result<Vec<EmbeddedVec>> {
    let mut out = Vec::with_capacity(vectors.len());
    let mut seen = HashSet::with_capacity(vectors.len());
    for v in vectors {
        let g = golden_coords(v);
        let coords = map.split_golden(&g)?;
        let norm = map.split_dot(&coords, &coords);
        ensure(
            norm == map.golden_dot(&g, &g)?,
            "embedding preserves reduced norms",
            || format!("{v}"),
        )?;
        if !norm.is_integer() {
            return Err(Error::NonIntegral(format!("{v} has reduced norm {norm}")));
        }
        ensure(
            seen.insert(coords.clone()),
            "embedding is injective",
            || format!("{v}"),
        )?;
        out.push(EmbeddedVec { coords, source });
    }
    Ok(out)
}

/// Norm of an embedded vector under the map's form.
pub fn reduced_norm(map: &ReductionMap, v: &[Rational]) -> Rational {
    map.split_dot(v, v)
}

fn lcm_denominators(vs: &[Vec<Rational>]) -> i64 {
    vs.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()))
}

fn scaled(v: &[Rational], d: i64) -> Vec<i128> {
    v.iter()
        .map(|x| (*x.numer() as i128) * (d / x.denom()) as i128)
        .collect()
}

/// Row Hermite normal form of the integer span; returns the nonzero rows.
pub fn hermite_basis(rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut a = rows;
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let pivot = (r..a.len())
                .filter(|&i| a[i][col] != 0)
                .min_by_key(|&i| a[i][col].abs());
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][col] != 0 {
                    let q = a[i][col].div_euclid(a[r][col]);
                    for k in col..ncols {
                        a[i][k] -= q * a[r][k];
                    }
                    clean &= a[i][col] == 0;
                }
            }
            if clean {
                break;
            }
        }
        if r < a.len() && a[r][col] != 0 {
            if a[r][col] < 0 {
                a[r].iter_mut().for_each(|x| *x = -*x);
            }
            for i in 0..r {
                let q = a[i][col].div_euclid(a[r][col]);
                if q != 0 {
                    for k in col..ncols {
                        a[i][k] -= q * a[r][k];
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

/// Inverse of a square integer matrix over the rationals.
fn invert(m: &[Vec<i128>]) -> Option<Vec<Vec<Big>>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut a: Vec<Vec<Big>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|&x| Big::from_integer(x))
                .chain((0..n).map(|j| Big::from_integer(i128::from(i == j))))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let inv = Big::from_integer(1) / a[k][k];
        a[k].iter_mut().for_each(|x| *x *= inv);
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k];
                for j in 0..2 * n {
                    let t = a[k][j];
                    a[i][j] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Exact determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// A positive definite integral Z-lattice inside the split frame of a map.
#[derive(Clone, Debug)]
pub struct IntLattice {
    map: ReductionMap,
    denom: i64,
    basis: Vec<Vec<i128>>,
    gram: Vec<Vec<i128>>,
    inverse: Vec<Vec<Big>>,
}

impl IntLattice {
    /// Z-span of the given frame vectors.
    pub fn from_generators(
        vectors: &[Vec<Rational>],
        map: ReductionMap,
        expected_rank: usize,
    ) -> Result<Self> {
        let denom = lcm_denominators(vectors);
        let rows: Vec<Vec<i128>> = vectors.iter().map(|v| scaled(v, denom)).collect();
        let basis = hermite_basis(rows);
        if basis.len() != expected_rank {
            return Err(Error::Rank {
                rank: basis.len(),
                expected: expected_rank,
            });
        }
        Self::from_basis(basis, denom, map)
    }

    fn from_basis(basis: Vec<Vec<i128>>, denom: i64, map: ReductionMap) -> Result<Self> {
        let frame: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| b.iter().map(|&x| Rational::new(x as i64, denom)).collect())
            .collect();
        let gram = frame
            .iter()
            .map(|u| {
                frame
                    .iter()
                    .map(|v| {
                        let d = map.split_dot(u, v);
                        if d.is_integer() {
                            Ok(*d.numer() as i128)
                        } else {
                            Err(Error::NonIntegral(format!("basis inner product {d}")))
                        }
                    })
                    .collect::<Result<Vec<i128>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let inverse = invert(&basis).ok_or(Error::Rank {
            rank: basis.len().saturating_sub(1),
            expected: basis.len(),
        })?;
        Ok(IntLattice {
            map,
            denom,
            basis,
            gram,
            inverse,
        })
    }

    /// Lattice with an explicitly given basis of frame vectors.
    pub fn with_basis(vectors: &[Vec<Rational>], map: ReductionMap) -> Result<Self> {
        let denom = lcm_denominators(vectors);
        let basis: Vec<Vec<i128>> = vectors.iter().map(|v| scaled(v, denom)).collect();
        Self::from_basis(basis, denom, map)
    }

    pub fn map(&self) -> &ReductionMap {
        &self.map
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn gram(&self) -> &[Vec<i128>] {
        &self.gram
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|b| self.unscale(b)).collect()
    }

    fn unscale(&self, v: &[i128]) -> Vec<Rational> {
        v.iter()
            .map(|&x| Rational::new(x as i64, self.denom))
            .collect()
    }

    pub fn determinant(&self) -> i128 {
        determinant(&self.gram)
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs() == 1
    }

    /// Integer coordinates of a frame vector, if it lies in the lattice.
    pub fn coords_of(&self, v: &[Rational]) -> Option<Vec<i64>> {
        if v.len() != self.inverse.len() {
            return None;
        }
        // v = Σ cᵢ bᵢ / D, so c = D·v·B⁻¹
        let x: Vec<Big> = v
            .iter()
            .map(|r| {
                Big::new(*r.numer() as i128, *r.denom() as i128)
                    * Big::from_integer(self.denom as i128)
            })
            .collect();
        let mut out = Vec::with_capacity(self.rank());
        for j in 0..self.rank() {
            let c = (0..x.len()).fold(Big::zero(), |acc, i| acc + x[i] * self.inverse[i][j]);
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer() as i64);
        }
        (self.from_coords(&out) == v).then_some(out)
    }

    pub fn from_coords(&self, c: &[i64]) -> Vec<Rational> {
        let n = self.basis[0].len();
        let mut acc = vec![0i128; n];
        for (ci, row) in c.iter().zip(&self.basis) {
            for (a, r) in acc.iter_mut().zip(row) {
                *a += *ci as i128 * r;
            }
        }
        self.unscale(&acc)
    }

    pub fn norm_of_coords(&self, c: &[i64]) -> i128 {
        let n = c.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| c[i] as i128 * self.gram[i][j] * c[j] as i128)
                    .sum::<i128>()
            })
            .sum()
    }

    pub fn dot_coords(&self, a: &[i64], b: &[i64]) -> i128 {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| a[i] as i128 * self.gram[i][j] * b[j] as i128)
                    .sum::<i128>()
            })
            .sum()
    }

    /// Coefficient vectors of all lattice vectors of norm exactly `norm`, sorted.
    pub fn shell_coords(&self, norm: i64) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = fincke_pohst(&self.gram, norm as i128)
            .into_iter()
            .filter(|c| self.norm_of_coords(c) == norm as i128)
            .collect();
        out.sort();
        out
    }

    /// Frame vectors of norm exactly `norm`, sorted.
    pub fn shell(&self, norm: i64) -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = self
            .shell_coords(norm)
            .iter()
            .map(|c| self.from_coords(c))
            .collect();
        out.sort();
        out
    }

    pub fn shell_count(&self, norm: i64) -> usize {
        self.shell_coords(norm).len()
    }
}

/// All integer vectors `x ≠ 0` with `xᵀGx ≤ bound`, by exact Fincke–Pohst enumeration.
pub fn fincke_pohst(gram: &[Vec<i128>], bound: i128) -> Vec<Vec<i64>> {
    let n = gram.len();
    let mut q: Vec<Vec<Big>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| Big::from_integer(x)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] = q[k][l] - q[k][i] * q[i][l];
            }
        }
    }
    let bound = Big::from_integer(bound);
    let top_range = coordinate_range(&q, n - 1, &vec![0; n], bound);
    let mut out: Vec<Vec<i64>> = top_range
        .into_par_iter()
        .flat_map_iter(|t| {
            let mut x = vec![0i64; n];
            x[n - 1] = t;
            let d = q[n - 1][n - 1] * Big::from_integer(t as i128) * Big::from_integer(t as i128);
            let mut found = Vec::new();
            descend(&q, n - 1, &mut x, bound - d, &mut found);
            found
        })
        .filter(|x| x.iter().any(|&c| c != 0))
        .collect();
    out.sort();
    out
}

fn center(q: &[Vec<Big>], i: usize, x: &[i64]) -> Big {
    let n = q.len();
    -(i + 1..n).fold(Big::zero(), |acc, j| {
        acc + q[i][j] * Big::from_integer(x[j] as i128)
    })
}

fn coordinate_range(q: &[Vec<Big>], i: usize, x: &[i64], remaining: Big) -> Vec<i64> {
    let c = center(q, i, x);
    let fits = |t: i64| {
        let d = Big::from_integer(t as i128) - c;
        q[i][i] * d * d <= remaining
    };
    let start = c.floor().to_integer() as i64;
    let mut out = Vec::new();
    let mut t = start;
    while fits(t) {
        out.push(t);
        t -= 1;
    }
    out.reverse();
    let mut t = start + 1;
    while fits(t) {
        out.push(t);
        t += 1;
    }
    out
}

fn descend(q: &[Vec<Big>], i: usize, x: &mut Vec<i64>, remaining: Big, out: &mut Vec<Vec<i64>>) {
    if i == 0 {
        out.push(x.clone());
        return;
    }
    let k = i - 1;
    let c = center(q, k, x);
    for t in coordinate_range(q, k, x, remaining) {
        x[k] = t;
        let d = Big::from_integer(t as i128) - c;
        descend(q, k, x, remaining - q[k][k] * d * d, out);
    }
    x[k] = 0;
}

/// A certified copy of E8 together with its roots.
#[derive(Clone, Debug)]
pub struct E8 {
    pub lattice: IntLattice,
    pub roots: Vec<Vec<Rational>>,
}

impl E8 {
    /// A basis made of the first vectors, in the given order, that span the lattice.
    pub fn root_basis(&self, candidates: &[Vec<Rational>]) -> Result<IntLattice> {
        let map = *self.lattice.map();
        let dot = |a: &Vec<Rational>, b: &Vec<Rational>| *map.split_dot(a, b).numer() as i128;
        let gram_det = |chosen: &[usize]| {
            let g: Vec<Vec<i128>> = chosen
                .iter()
                .map(|&i| {
                    chosen
                        .iter()
                        .map(|&j| dot(&candidates[i], &candidates[j]))
                        .collect()
                })
                .collect();
            determinant(&g)
        };
        fn search(
            from: usize,
            chosen: &mut Vec<usize>,
            n: usize,
            gram_det: &dyn Fn(&[usize]) -> i128,
        ) -> bool {
            if chosen.len() == 8 {
                return gram_det(chosen) == 1;
            }
            for i in from..n {
                chosen.push(i);
                if gram_det(chosen) != 0 && search(i + 1, chosen, n, gram_det) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::with_capacity(8);
        if !search(0, &mut chosen, candidates.len(), &gram_det) {
            return Err(invariant(
                "root basis",
                "candidates do not contain a unimodular basis",
            ));
        }
        let basis: Vec<Vec<Rational>> = chosen.iter().map(|&i| candidates[i].clone()).collect();
        let lat = IntLattice::with_basis(&basis, map)?;
        ensure(
            candidates.iter().all(|c| lat.coords_of(c).is_some())
                && self.roots.iter().all(|r| lat.coords_of(r).is_some()),
            "root basis spans E8",
            String::new,
        )?;
        Ok(lat)
    }
}

/// Certifies that the span of the given frame vectors is E8.
pub fn certify_e8(vectors: &[EmbeddedVec], map: ReductionMap) -> Result<E8> {
    if vectors.len() < 8 {
        return Err(Error::Rank {
            rank: vectors.len(),
            expected: 8,
        });
    }
    let gens: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords.clone()).collect();
    let lattice = IntLattice::from_generators(&gens, map, 8)?;
    let det = lattice.determinant();
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(det));
    }
    if let Some(i) = (0..8).find(|&i| lattice.gram[i][i] % 2 != 0) {
        return Err(Error::NotEven(i));
    }
    let roots = lattice.shell(2);
    if roots.len() != 240 {
        return Err(Error::ShellCount {
            norm: 2,
            expected: 240,
            found: roots.len(),
        });
    }
    Ok(E8 { lattice, roots })
}

/// The standard E8 from `ε(H ∪ φH)`.
pub fn standard_e8(icosians: &Icosians) -> Result<(E8, Vec<EmbeddedVec>, Vec<EmbeddedVec>)> {
    let map = e8_map();
    let h = embed_set(icosians.vertices(), &map, Source::H)?;
    let phi: Vec<IcosianVec> = icosians
        .vertices()
        .iter()
        .map(|v| v.scale(GoldenInt::PHI))
        .collect();
    let phi_h = embed_set(&phi, &map, Source::PhiH)?;
    let all: Vec<EmbeddedVec> = h.iter().chain(&phi_h).cloned().collect();
    Ok((certify_e8(&all, map)?, h, phi_h))
}

/// Four vertices spanning all of H over Z[φ], with the dual basis.
#[derive(Clone, Debug)]
pub struct GoldenBasis {
    pub vertices: [usize; 4],
    /// Golden Gram matrix of the halved inner product.
    pub gram: [[GoldenInt; 4]; 4],
    pub gram_det: GoldenInt,
    pub dual: [IcosianVec; 4],
    /// Z[φ] coefficients of every vertex with respect to the basis.
    pub coefficients: Vec<[GoldenInt; 4]>,
}

fn golden_det(m: &[[GoldenInt; 4]; 4]) -> GoldenInt {
    let mut rows: Vec<usize> = (0..4).collect();
    perm_det(m, &mut rows, 0)
}

fn perm_det(m: &[[GoldenInt; 4]; 4], cols: &mut Vec<usize>, row: usize) -> GoldenInt {
    if row == 4 {
        return GoldenInt::ONE;
    }
    let mut total = GoldenInt::ZERO;
    for k in row..4 {
        cols.swap(row, k);
        let term = m[row][cols[row]] * perm_det(m, cols, row + 1);
        total += if k == row { term } else { -term };
        cols.swap(row, k);
    }
    total
}

fn golden_inverse(m: &[[GoldenInt; 4]; 4]) -> Option<[[GoldenInt; 4]; 4]> {
    let det = golden_det(m);
    let mut out = [[GoldenInt::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let minor: [[GoldenInt; 4]; 4] = std::array::from_fn(|r| {
                std::array::from_fn(|c| {
                    if r == j && c == i {
                        GoldenInt::ONE
                    } else if r == j || c == i {
                        GoldenInt::ZERO
                    } else {
                        m[r][c]
                    }
                })
            });
            out[i][j] = golden_det(&minor).div_exact(det)?;
        }
    }
    Some(out)
}

/// First quadruple, in vertex order, with unit Gram determinant whose span holds every vertex.
pub fn golden_basis(icosians: &Icosians) -> Result<GoldenBasis> {
    let v = icosians.vertices();
    let n = v.len();
    let ip = |a: usize, b: usize| paper_inner_product(&v[a], &v[b]);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let idx = [a, b, c, d];
                    let gram: [[GoldenInt; 4]; 4] =
                        std::array::from_fn(|i| std::array::from_fn(|j| ip(idx[i], idx[j])));
                    let det = golden_det(&gram);
                    if !det.is_unit() {
                        continue;
                    }
                    let inv = golden_inverse(&gram)
                        .ok_or_else(|| invariant("golden basis", "singular Gram"))?;
                    let mut coefficients = Vec::with_capacity(n);
                    for x in v {
                        let dots: [GoldenInt; 4] =
                            std::array::from_fn(|k| paper_inner_product(&v[idx[k]], x));
                        let coef: [GoldenInt; 4] =
                            std::array::from_fn(|j| (0..4).map(|k| inv[j][k] * dots[k]).sum());
                        let back = (0..4).fold(IcosianVec::default(), |acc, j| {
                            acc + v[idx[j]].scale(coef[j])
                        });
                        ensure(back == *x, "golden basis spans H", || format!("{x}"))?;
                        coefficients.push(coef);
                    }
                    let dual = std::array::from_fn(|j| {
                        (0..4).fold(IcosianVec::default(), |acc, k| {
                            acc + v[idx[k]].scale(inv[j][k])
                        })
                    });
                    return Ok(GoldenBasis {
                        vertices: idx,
                        gram,
                        gram_det: det,
                        dual,
                        coefficients,
                    });
                }
            }
        }
    }
    Err(invariant("golden basis", "no quadruple spans H"))
}

/// Statistics of the lattice L.
#[derive(Clone, Debug)]
pub struct LatticeL {
    pub basis: GoldenBasis,
    pub lattice: IntLattice,
    /// `|⟨x, y⟩| ↦ number of pairs ±y`, identical for every vertex `x`.
    pub census: BTreeMap<i64, usize>,
    pub determinant: i128,
    pub roots: usize,
    pub min_norm: i64,
    pub dual_basis: Vec<Vec<Rational>>,
}

pub fn lattice_l(icosians: &Icosians) -> Result<LatticeL> {
    let basis = golden_basis(icosians)?;
    let map = lattice_l_map();
    let v = icosians.vertices();
    let split = |x: &IcosianVec| map.split_golden(&golden_coords(x));
    let mut gens = Vec::with_capacity(8);
    for &i in &basis.vertices {
        gens.push(split(&v[i])?);
    }
    for &i in &basis.vertices {
        gens.push(split(&v[i].scale(GoldenInt::PHI))?);
    }
    let lattice = IntLattice::with_basis(&gens, map)?;

    let images = v.iter().map(split).collect::<Result<Vec<_>>>()?;
    let mut census: Option<BTreeMap<i64, usize>> = None;
    for x in &images {
        let mut hist = BTreeMap::new();
        for y in &images {
            let d = map.split_dot(x, y);
            ensure(d.is_integer(), "L is integral", || format!("{d}"))?;
            *hist.entry(d.numer().abs()).or_insert(0) += 1;
        }
        hist.values_mut().for_each(|c| *c /= 2);
        match &census {
            None => census = Some(hist),
            Some(c) => ensure(
                *c == hist,
                "L census is the same for every vertex",
                String::new,
            )?,
        }
    }
    let census = census.unwrap_or_default();

    let five = GoldenRational::from(GoldenInt::int(5));
    let dual_scale = |a: i64, b: i64| {
        GoldenRational::new(GoldenInt::new(a, b), 1)
            .div(five)
            .expect("nonzero")
    };
    let mut dual_basis = Vec::with_capacity(8);
    for (a, b) in [(3, -1), (-1, 2)] {
        let s = dual_scale(a, b);
        for w in &basis.dual {
            let g: Vec<GoldenRational> = w.0.iter().map(|&c| GoldenRational::from(c) * s).collect();
            dual_basis.push(map.split_golden(&g)?);
        }
    }
    for (i, b) in gens.iter().enumerate() {
        for (j, w) in dual_basis.iter().enumerate() {
            let expected = Rational::from_integer(i64::from(i == j));
            ensure(map.split_dot(b, w) == expected, "L dual basis", || {
                format!("({i}, {j})")
            })?;
        }
    }
    let determinant = lattice.determinant();
    let roots = lattice.shell_count(2);
    let min_norm = (1..=8).find(|&k| lattice.shell_count(k) > 0).unwrap_or(0);
    Ok(LatticeL {
        basis,
        lattice,
        census,
        determinant,
        roots,
        min_norm,
        dual_basis,
    })
}

/// One class of the norm-4 shell decomposition.
#[derive(Clone, Debug)]
pub struct ShellClass {
    pub source: Source,
    /// The class is `ε(φᵏ·source)`.
    pub phi_power: i32,
    pub m: i64,
    pub vectors: Vec<Vec<Rational>>,
    pub spectrum_matches: bool,
}

#[derive(Clone, Debug)]
pub struct ShellDecomposition {
    pub shell_size: usize,
    pub candidates: Vec<(Source, i32, i64)>,
    pub classes: Vec<ShellClass>,
}

/// Partition of the 2160 norm-4 vectors of E8 into embedded H4 polytopes.
pub fn decompose_norm4_shell(
    e8: &E8,
    cell600: &Cell600,
    cell120: &Cell120,
) -> Result<ShellDecomposition> {
    let frame = *e8.lattice.map();
    let shell = e8.lattice.shell(4);
    let shell_size = shell.len();
    if shell_size != 2160 {
        return Err(Error::ShellCount {
            norm: 4,
            expected: 2160,
            found: shell_size,
        });
    }
    let shell_index: HashMap<&Vec<Rational>, usize> =
        shell.iter().enumerate().map(|(i, v)| (v, i)).collect();

    let h = cell600.icosians().vertices().to_vec();
    let edges: Vec<IcosianVec> = cell600
        .skeleton()
        .edges
        .iter()
        .map(|&[a, b]| h[a] + h[b])
        .collect();
    let sources: [(Source, &[IcosianVec]); 3] = [
        (Source::H, &h),
        (Source::Cell120, &cell120.vertices),
        (Source::Rectified, &edges),
    ];

    // every (source, k, m) whose image lies inside the shell
    let mut found: Vec<(Source, i32, i64, Vec<usize>, Vec<IcosianVec>)> = Vec::new();
    for (source, pts) in sources {
        for k in -2..=2 {
            let scaled: Vec<IcosianVec> =
                pts.iter().map(|p| p.scale(GoldenInt::phi_pow(k))).collect();
            for m in -2..=2 {
                let map = ReductionMap::golden(m)?.with_multiplier(frame.multiplier())?;
                let mut idx = Vec::with_capacity(scaled.len());
                for p in &scaled {
                    match map
                        .split_golden(&golden_coords(p))
                        .ok()
                        .and_then(|c| shell_index.get(&c).copied())
                    {
                        Some(i) => idx.push(i),
                        None => break,
                    }
                }
                if idx.len() == scaled.len() {
                    found.push((source, k, m, idx, scaled.clone()));
                }
            }
        }
    }
    let candidates = found.iter().map(|(s, k, m, _, _)| (*s, *k, *m)).collect();

    // exact cover of the shell by the candidate classes
    let masks: Vec<Vec<bool>> = found
        .iter()
        .map(|(_, _, _, idx, _)| {
            let mut m = vec![false; shell_size];
            idx.iter().for_each(|&i| m[i] = true);
            m
        })
        .collect();
    let mut chosen = Vec::new();
    let cover = exact_cover(&masks, &mut vec![false; shell_size], 0, &mut chosen)
        .then_some(chosen)
        .ok_or_else(|| invariant("norm-4 shell decomposition", "no covering partition"))?;

    let mut classes = Vec::with_capacity(cover.len());
    for &c in &cover {
        let (source, k, m, idx, scaled) = &found[c];
        let map = ReductionMap::golden(*m)?.with_multiplier(frame.multiplier())?;
        let vectors: Vec<Vec<Rational>> = idx.iter().map(|&i| shell[i].clone()).collect();
        // preimages recovered from the frame must be the scaled source with its spectrum
        let mut recovered: Vec<IcosianVec> = Vec::with_capacity(vectors.len());
        for x in &vectors {
            let g = map.unsplit_golden(x)?;
            let ints: Option<Vec<GoldenInt>> = g.iter().map(|c| c.to_golden_int()).collect();
            let ints = ints.ok_or_else(|| invariant("shell class preimage", "non-integral"))?;
            recovered.push(IcosianVec([ints[0], ints[1], ints[2], ints[3]]));
        }
        let scale2 = GoldenInt::phi_pow(2 * k);
        let base: Vec<IcosianVec> = sources.iter().find(|s| s.0 == *source).unwrap().1.to_vec();
        let expected: BTreeMap<GoldenInt, usize> = inner_product_spectrum(&base)
            .into_iter()
            .map(|(d, n)| (d * scale2, n))
            .collect();
        let mut from_source = scaled.clone();
        from_source.sort();
        recovered.sort();
        let spectrum_matches =
            inner_product_spectrum(&recovered) == expected && recovered == from_source;
        let reduced: BTreeMap<Rational, usize> = {
            let mut hist = BTreeMap::new();
            for a in &vectors {
                for b in &vectors {
                    *hist.entry(frame.split_dot(a, b)).or_insert(0) += 1;
                }
            }
            hist
        };
        let mut expected_reduced = BTreeMap::new();
        for (d, n) in &expected {
            let r = map.reduce_golden(GoldenRational::from(*d))? * frame.multiplier();
            *expected_reduced.entry(r).or_insert(0) += n;
        }
        classes.push(ShellClass {
            source: *source,
            phi_power: *k,
            m: *m,
            vectors,
            spectrum_matches: spectrum_matches && reduced == expected_reduced,
        });
    }
    classes.sort_by_key(|c| (c.vectors.len(), c.source, c.phi_power));
    Ok(ShellDecomposition {
        shell_size,
        candidates,
        classes,
    })
}

fn exact_cover(
    masks: &[Vec<bool>],
    covered: &mut Vec<bool>,
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(first) = covered.iter().position(|c| !c) else {
        return true;
    };
    for i in from..masks.len() {
        if !masks[i][first] || masks[i].iter().zip(covered.iter()).any(|(m, c)| *m && *c) {
            continue;
        }
        for (c, m) in covered.iter_mut().zip(&masks[i]) {
            *c |= *m;
        }
        chosen.push(i);
        if exact_cover(masks, covered, 0, chosen) {
            return true;
        }
        chosen.pop();
        for (c, m) in covered.iter_mut().zip(&masks[i]) {
            if *m {
                *c = false;
            }
        }
    }
    false
}

/// The witness `(-m, 1)` whose reduced norm is `n - m²`.
pub fn definiteness_witness(n: i64, m: i64) -> Rational {
    // x + y√n with (x, y) = (-m, 1) has square m² + n - 2m√n, reduced to n - m²
    let x = Rational::from_integer(m * m + n);
    let y = Rational::from_integer(-2 * m);
    x + y * Rational::from_integer(m)
}

pub fn is_e8_even_unimodular(lat: &IntLattice) -> bool {
    lat.rank() == 8 && lat.is_even() && lat.is_unimodular()
}
