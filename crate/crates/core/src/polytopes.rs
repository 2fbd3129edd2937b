//! Sub-polytopes of the 600-cell and their duad labels.
//!
//! Vertices are indices into the sorted icosian list. Most structures live
//! at the level of the 60 antipodal pairs `{±v}`, stored as 60-bit masks.
//! The representative of a pair is its lexicographically greater vertex and
//! pairs are numbered in increasing order of representative.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{ensure, invariant, Error, Result};
use crate::golden::GoldenInt;
use crate::icosian::{IcosianVec, Icosians};

pub type VertexPairId = usize;

/// A set of vertex pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSet(pub u64);

impl PairSet {
    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        PairSet(it.into_iter().fold(0, |m, p| m | (1u64 << p)))
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn contains(self, p: usize) -> bool {
        self.0 >> p & 1 == 1
    }
    pub fn intersect(self, o: PairSet) -> PairSet {
        PairSet(self.0 & o.0)
    }
    pub fn union(self, o: PairSet) -> PairSet {
        PairSet(self.0 | o.0)
    }
    pub fn is_disjoint(self, o: PairSet) -> bool {
        self.0 & o.0 == 0
    }
    pub fn is_subset(self, o: PairSet) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 >> i & 1 == 1)
    }
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub const ALL_PAIRS: PairSet = PairSet((1u64 << 60) - 1);

/// A set of the 120 vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0, |m, v| m | (1u128 << v)))
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }
    pub fn is_disjoint(self, o: VertexSet) -> bool {
        self.0 & o.0 == 0
    }
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&i| self.0 >> i & 1 == 1)
    }
}

pub const ALL_VERTICES: VertexSet = VertexSet((1u128 << 120) - 1);

/// `|⟨u, v⟩|` between pair representatives, using the halved inner product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairRelation {
    Same,
    Orthogonal,
    One,
    Phi,
    PhiInv,
}

/// Natural inner product halved; for vertices one of `0, ±1, ±φ, ±φ⁻¹, ±2`.
pub fn paper_inner_product(u: &IcosianVec, v: &IcosianVec) -> GoldenInt {
    u.dot(v)
        .div_int_exact(2)
        .expect("vertex inner products are even")
}

fn relation_of(ip: GoldenInt) -> Result<PairRelation> {
    let abs = ip.abs();
    Ok(match (abs.a, abs.b) {
        (2, 0) => PairRelation::Same,
        (0, 0) => PairRelation::Orthogonal,
        (1, 0) => PairRelation::One,
        (0, 1) => PairRelation::Phi,
        (-1, 1) => PairRelation::PhiInv,
        _ => {
            return Err(invariant(
                "vertex inner products",
                format!("unexpected value {ip}"),
            ))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Edge,
    Triangle,
    TetraCell,
    Cell16,
    Cell8,
    Cell24,
    Hexagon,
    Decagon,
    Pentagon,
}

impl Kind {
    /// Members are vertex indices for the skeleton kinds and pentagons,
    /// pair indices otherwise.
    pub fn uses_vertices(self) -> bool {
        matches!(
            self,
            Kind::Edge | Kind::Triangle | Kind::TetraCell | Kind::Pentagon
        )
    }

    pub fn member_count(self) -> usize {
        match self {
            Kind::Edge => 2,
            Kind::Triangle | Kind::Hexagon => 3,
            Kind::TetraCell | Kind::Cell16 => 4,
            Kind::Decagon | Kind::Pentagon => 5,
            Kind::Cell8 => 8,
            Kind::Cell24 => 12,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Edge => "edge",
            Kind::Triangle => "triangle",
            Kind::TetraCell => "tetra-cell",
            Kind::Cell16 => "16-cell",
            Kind::Cell8 => "8-cell",
            Kind::Cell24 => "24-cell",
            Kind::Hexagon => "hexagon",
            Kind::Decagon => "decagon",
            Kind::Pentagon => "pentagon",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubPolytope {
    kind: Kind,
    members: Vec<usize>,
}

impl SubPolytope {
    pub fn new(kind: Kind, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        ensure(
            members.len() == kind.member_count(),
            "sub-polytope size",
            || format!("{} with {} members", kind.name(), members.len()),
        )?;
        Ok(SubPolytope { kind, members })
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

/// Array position of a 24-cell: row symbol 1..=5, column symbol 6..=10 (10 is X).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Duad {
    pub row: u8,
    pub col: u8,
}

impl Duad {
    pub fn new(row: u8, col: u8) -> Self {
        debug_assert!((1..=5).contains(&row) && (6..=10).contains(&col));
        Duad { row, col }
    }
    pub fn from_position(i: usize, j: usize) -> Self {
        Duad::new(i as u8 + 1, j as u8 + 6)
    }
    pub fn position(self) -> (usize, usize) {
        (self.row as usize - 1, self.col as usize - 6)
    }
    pub fn shares_symbol(self, o: Duad) -> bool {
        self.row == o.row || self.col == o.col
    }
}

pub fn symbol(s: u8) -> char {
    match s {
        10 => 'X',
        s => char::from(b'0' + s),
    }
}

fn parse_symbol(c: char) -> Option<u8> {
    match c {
        'X' => Some(10),
        '1'..='9' => Some(c as u8 - b'0'),
        _ => None,
    }
}

impl fmt::Display for Duad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{})", symbol(self.row), symbol(self.col))
    }
}

fn parse_duads(s: &str) -> Option<Vec<Duad>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !chars.len().is_multiple_of(4) {
        return None;
    }
    chars
        .chunks(4)
        .map(|c| {
            if c[0] != '(' || c[3] != ')' {
                return None;
            }
            let (x, y) = (parse_symbol(c[1])?, parse_symbol(c[2])?);
            let (row, col) = if x < y { (x, y) } else { (y, x) };
            ((1..=5).contains(&row) && (6..=10).contains(&col)).then(|| Duad::new(row, col))
        })
        .collect()
}

fn permutation_is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// `(1 j₁)(2 j₂)(3 j₃)(4 j₄)(5 j₅)`; `cols[i]` is the column paired with row `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub cols: [u8; 5],
}

impl VertexLabel {
    pub fn duads(&self) -> [Duad; 5] {
        std::array::from_fn(|i| Duad::new(i as u8 + 1, self.cols[i]))
    }
    pub fn is_even(&self) -> bool {
        permutation_is_even(&self.cols)
    }
    pub fn shared_duads(&self, o: &VertexLabel) -> usize {
        (0..5).filter(|&i| self.cols[i] == o.cols[i]).count()
    }
    pub fn contains(&self, d: Duad) -> bool {
        self.cols[d.row as usize - 1] == d.col
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.duads().iter().try_for_each(|d| write!(f, "{d}"))
    }
}

impl FromStr for VertexLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || invariant("label syntax", format!("cannot parse {s:?}"));
        let duads = parse_duads(s).ok_or_else(bad)?;
        if duads.len() != 5 {
            return Err(bad());
        }
        let mut cols = [0u8; 5];
        for d in duads {
            cols[d.row as usize - 1] = d.col;
        }
        let distinct: BTreeSet<_> = cols.iter().collect();
        if cols.contains(&0) || distinct.len() != 5 {
            return Err(bad());
        }
        Ok(VertexLabel { cols })
    }
}

/// 120-cell label: home 24-cell followed by the four neighbours' 24-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell120Label {
    pub home: Duad,
    pub neighbors: [Duad; 4],
}

impl Cell120Label {
    /// Column symbols of the five duads ordered by row, if rows and columns are distinct.
    pub fn column_permutation(&self) -> Option<[u8; 5]> {
        let mut cols = [0u8; 5];
        for d in std::iter::once(self.home).chain(self.neighbors) {
            let slot = &mut cols[d.row as usize - 1];
            if *slot != 0 {
                return None;
            }
            *slot = d.col;
        }
        let distinct: BTreeSet<_> = cols.iter().collect();
        (distinct.len() == 5).then_some(cols)
    }
}

impl fmt::Display for Cell120Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.home)?;
        self.neighbors.iter().try_for_each(|d| write!(f, "{d}"))
    }
}

impl FromStr for Cell120Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || invariant("label syntax", format!("cannot parse {s:?}"));
        let (home, rest) = s.split_once('|').ok_or_else(bad)?;
        let home = parse_duads(home).filter(|d| d.len() == 1).ok_or_else(bad)?[0];
        let mut n = parse_duads(rest).filter(|d| d.len() == 4).ok_or_else(bad)?;
        n.sort();
        Ok(Cell120Label {
            home,
            neighbors: [n[0], n[1], n[2], n[3]],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub tetra_cells: Vec<[usize; 4]>,
}

/// Edges are vertex pairs at inner product φ; faces and cells are the cliques of that graph.
pub fn enumerate_skeleton(icosians: &Icosians) -> Skeleton {
    let n = icosians.len();
    let v = icosians.vertices();
    let adjacent: Vec<u128> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| paper_inner_product(&v[i], &v[j]) == GoldenInt::PHI)
                .fold(0u128, |m, j| m | 1 << j)
        })
        .collect();
    let above = |i: usize, mask: u128| mask & !((2u128 << i) - 1);
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    let mut tetra_cells = Vec::new();
    for a in 0..n {
        for b in VertexSet(above(a, adjacent[a])).iter() {
            edges.push([a, b]);
            let ab = above(b, adjacent[a] & adjacent[b]);
            for c in VertexSet(ab).iter() {
                triangles.push([a, b, c]);
                for d in VertexSet(above(c, ab & adjacent[c])).iter() {
                    tetra_cells.push([a, b, c, d]);
                }
            }
        }
    }
    Skeleton {
        edges,
        triangles,
        tetra_cells,
    }
}

/// Relation table between the 60 pairs.
#[derive(Clone, Debug)]
pub struct PairTable {
    pub reps: Vec<usize>,
    pub pair_of: Vec<usize>,
    relation: Vec<PairRelation>,
}

impl PairTable {
    pub fn new(icosians: &Icosians) -> Result<Self> {
        let n = icosians.len();
        let mut reps: Vec<usize> = (0..n).filter(|&i| icosians.neg(i) < i).collect();
        reps.sort_unstable();
        let mut pair_of = vec![0; n];
        for (p, &r) in reps.iter().enumerate() {
            pair_of[r] = p;
            pair_of[icosians.neg(r)] = p;
        }
        let v = icosians.vertices();
        let m = reps.len();
        let mut relation = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                relation.push(relation_of(paper_inner_product(&v[a], &v[b]))?);
            }
        }
        Ok(PairTable {
            reps,
            pair_of,
            relation,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn relation(&self, p: usize, q: usize) -> PairRelation {
        self.relation[p * self.reps.len() + q]
    }

    pub fn with_relation(&self, p: usize, rel: PairRelation) -> PairSet {
        PairSet::from_iter((0..self.len()).filter(|&q| self.relation(p, q) == rel))
    }

    pub fn pairs_of(&self, vs: VertexSet) -> PairSet {
        PairSet::from_iter(vs.iter().map(|v| self.pair_of[v]))
    }

    pub fn vertices_of(&self, ps: PairSet, icosians: &Icosians) -> VertexSet {
        VertexSet::from_iter(
            ps.iter()
                .flat_map(|p| [self.reps[p], icosians.neg(self.reps[p])]),
        )
    }
}

/// All tetrads of mutually orthogonal pairs.
pub fn enumerate_16cells(pairs: &PairTable) -> Vec<PairSet> {
    let n = pairs.len();
    let orth: Vec<PairSet> = (0..n)
        .map(|p| pairs.with_relation(p, PairRelation::Orthogonal))
        .collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in orth[a].iter().filter(|&b| b > a) {
            let ab = orth[a].intersect(orth[b]);
            for c in ab.iter().filter(|&c| c > b) {
                for d in ab.intersect(orth[c]).iter().filter(|&d| d > c) {
                    out.push(PairSet::from_iter([a, b, c, d]));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn count_orthogonal_pairs(pairs: &PairTable) -> usize {
    (0..pairs.len())
        .map(|p| pairs.with_relation(p, PairRelation::Orthogonal).len())
        .sum::<usize>()
        / 2
}

/// Extend every 16-cell by the pairs at inner product ±1 with all four of its pairs.
pub fn enumerate_24cells(pairs: &PairTable, sixteen: &[PairSet]) -> Result<Vec<PairSet>> {
    let ones: Vec<PairSet> = (0..pairs.len())
        .map(|p| pairs.with_relation(p, PairRelation::One))
        .collect();
    let mut out = BTreeSet::new();
    for &s in sixteen {
        let ext = s.iter().fold(ALL_PAIRS, |acc, p| acc.intersect(ones[p]));
        ensure(
            ext.len() == 8,
            "16-cell extends to a unique 24-cell",
            || format!("16-cell {:?} has {} extension pairs", s.to_vec(), ext.len()),
        )?;
        out.insert(s.union(ext));
    }
    let cells: Vec<PairSet> = out.into_iter().collect();
    for &s in sixteen {
        let n = cells.iter().filter(|c| s.is_subset(**c)).count();
        ensure(n == 1, "16-cell lies in one 24-cell", || {
            format!("{:?} in {n}", s.to_vec())
        })?;
    }
    Ok(cells)
}

/// Pairs of 16-cells whose cross inner products are all ±1.
pub fn enumerate_8cells(pairs: &PairTable, sixteen: &[PairSet]) -> Vec<PairSet> {
    let mut out = Vec::new();
    for (i, a) in sixteen.iter().enumerate() {
        for b in &sixteen[i + 1..] {
            let all_one = a
                .iter()
                .all(|p| b.iter().all(|q| pairs.relation(p, q) == PairRelation::One));
            if all_one {
                out.push(a.union(*b));
            }
        }
    }
    out.sort();
    out
}

/// Entry `(i, j)` is the 24-cell `gⁱ·2A4·g⁻ʲ` as a vertex set.
pub fn build_array(icosians: &Icosians, g: usize) -> Result<[[VertexSet; 5]; 5]> {
    ensure(
        icosians.order(g) == 5,
        "array generator has order 5",
        || format!("order {}", icosians.order(g)),
    )?;
    let t = icosians.binary_tetrahedral();
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let left = icosians.pow_idx(g, i as u32);
            let right = icosians.inverse(icosians.pow_idx(g, j as u32));
            VertexSet::from_iter(
                t.iter()
                    .map(|&x| icosians.mul_idx(icosians.mul_idx(left, x), right)),
            )
        })
    }))
}

/// All 5-cliques of the disjointness graph on `cells` whose union covers every pair.
pub fn find_all_partitions(cells: &[PairSet]) -> Vec<[usize; 5]> {
    let n = cells.len();
    let disjoint: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && cells[i].is_disjoint(cells[j]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(5);
    fn grow(
        cells: &[PairSet],
        disjoint: &[u32],
        candidates: u32,
        stack: &mut Vec<usize>,
        out: &mut Vec<[usize; 5]>,
    ) {
        if stack.len() == 5 {
            let cover = stack.iter().fold(PairSet(0), |acc, &c| acc.union(cells[c]));
            if cover == ALL_PAIRS {
                out.push([stack[0], stack[1], stack[2], stack[3], stack[4]]);
            }
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            stack.push(c);
            // only extend upwards to enumerate each clique once
            grow(cells, disjoint, rest & disjoint[c], stack, out);
            stack.pop();
        }
    }
    grow(cells, &disjoint, (1u32 << n) - 1, &mut stack, &mut out);
    out
}

/// Arrays `gᵢ·N·gⱼ⁻¹` built from the normalizer `N` of a Sylow p-subgroup.
#[derive(Clone, Debug)]
pub struct PrimeArray {
    pub p: u32,
    pub normalizer: Vec<usize>,
    pub transversal: Vec<usize>,
    pub entries: Vec<Vec<VertexSet>>,
}

impl PrimeArray {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
    pub fn rows_partition(&self) -> bool {
        self.entries
            .iter()
            .all(|row| covers_exactly(row.iter().copied()))
    }
    pub fn columns_partition(&self) -> bool {
        (0..self.size()).all(|j| covers_exactly(self.entries.iter().map(|row| row[j])))
    }
    pub fn distinct_entries(&self) -> usize {
        self.entries.iter().flatten().collect::<HashSet<_>>().len()
    }
}

fn covers_exactly(sets: impl Iterator<Item = VertexSet>) -> bool {
    let mut acc = 0u128;
    for s in sets {
        if acc & s.0 != 0 {
            return false;
        }
        acc |= s.0;
    }
    acc == ALL_VERTICES.0
}

/// The `(q+1) × (q+1)` array for p ∈ {2, 3, 5} (q = 4, 9, 5).
pub fn prime_arrays(icosians: &Icosians, p: u32) -> Result<PrimeArray> {
    let sylow = match p {
        2 => icosians.quaternion_group(),
        3 | 5 => {
            let x = (0..icosians.len())
                .find(|&i| icosians.order(i) == p)
                .expect("2A5 has elements of order 3 and 5");
            icosians.generated(&[x])
        }
        _ => {
            return Err(invariant(
                "prime array",
                format!("p = {p} is not one of 2, 3, 5"),
            ))
        }
    };
    let normalizer = icosians.normalizer(&sylow);
    let mut covered = vec![false; icosians.len()];
    let mut transversal = Vec::new();
    for x in 0..icosians.len() {
        if !covered[x] {
            transversal.push(x);
            for &n in &normalizer {
                covered[icosians.mul_idx(x, n)] = true;
            }
        }
    }
    let entries = transversal
        .iter()
        .map(|&gi| {
            transversal
                .iter()
                .map(|&gj| {
                    let right = icosians.inverse(gj);
                    VertexSet::from_iter(
                        normalizer
                            .iter()
                            .map(|&n| icosians.mul_idx(icosians.mul_idx(gi, n), right)),
                    )
                })
                .collect()
        })
        .collect();
    Ok(PrimeArray {
        p,
        normalizer,
        transversal,
        entries,
    })
}

/// The 600-cell with all of its labelled sub-structure.
#[derive(Clone, Debug)]
pub struct Cell600 {
    icosians: Icosians,
    pairs: PairTable,
    skeleton: Skeleton,
    sixteen: Vec<PairSet>,
    eight: Vec<PairSet>,
    cells: Vec<PairSet>,
    order5: usize,
    array: [[usize; 5]; 5],
    duads: Vec<Duad>,
    partitions: Vec<[usize; 5]>,
    labels: Vec<VertexLabel>,
    hexagons: Vec<PairSet>,
    decagons: Vec<PairSet>,
}

impl Cell600 {
    pub fn build(icosians: Icosians) -> Result<Self> {
        let pairs = PairTable::new(&icosians)?;
        let skeleton = enumerate_skeleton(&icosians);
        let sixteen = enumerate_16cells(&pairs);
        let cells = enumerate_24cells(&pairs, &sixteen)?;
        let eight = enumerate_8cells(&pairs, &sixteen);
        let order5 = icosians.find_order5();
        let vertex_array = build_array(&icosians, order5)?;
        let index: HashMap<PairSet, usize> =
            cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut array = [[0usize; 5]; 5];
        let mut duads = vec![Duad::new(1, 6); cells.len()];
        let mut seen = HashSet::new();
        for i in 0..5 {
            for j in 0..5 {
                let ps = pairs.pairs_of(vertex_array[i][j]);
                let c = *index.get(&ps).ok_or_else(|| {
                    invariant("array entries are 24-cells", format!("entry ({i}, {j})"))
                })?;
                ensure(seen.insert(c), "array entries are distinct", || {
                    format!("entry ({i}, {j})")
                })?;
                array[i][j] = c;
                duads[c] = Duad::from_position(i, j);
            }
        }
        ensure(
            seen.len() == cells.len(),
            "array covers every 24-cell",
            || format!("{} of {}", seen.len(), cells.len()),
        )?;
        let partitions = find_all_partitions(&cells);
        let labels = label_pairs(&pairs, &cells, &duads)?;
        let hexagons = enumerate_hexagons(&pairs, &cells)?;
        let decagons = enumerate_decagons(&icosians, &pairs)?;
        Ok(Cell600 {
            icosians,
            pairs,
            skeleton,
            sixteen,
            eight,
            cells,
            order5,
            array,
            duads,
            partitions,
            labels,
            hexagons,
            decagons,
        })
    }

    pub fn icosians(&self) -> &Icosians {
        &self.icosians
    }
    pub fn pairs(&self) -> &PairTable {
        &self.pairs
    }
    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }
    pub fn sixteen_cells(&self) -> &[PairSet] {
        &self.sixteen
    }
    pub fn eight_cells(&self) -> &[PairSet] {
        &self.eight
    }
    /// The 25 24-cells, sorted by pair mask.
    pub fn cells24(&self) -> &[PairSet] {
        &self.cells
    }
    pub fn order5(&self) -> usize {
        self.order5
    }
    /// Cell index at array position `(row, col)`, zero-based.
    pub fn array(&self) -> &[[usize; 5]; 5] {
        &self.array
    }
    pub fn duad(&self, cell: usize) -> Duad {
        self.duads[cell]
    }
    pub fn cell_at(&self, d: Duad) -> usize {
        let (i, j) = d.position();
        self.array[i][j]
    }
    /// Partitions found by exhaustive search, as sorted cell-index quintuples.
    pub fn partitions(&self) -> &[[usize; 5]] {
        &self.partitions
    }
    /// Partition for symbol `s` (1..=5 rows, 6..=10 columns).
    pub fn schoute_partition(&self, s: u8) -> [usize; 5] {
        let mut out: [usize; 5] = if s <= 5 {
            self.array[s as usize - 1]
        } else {
            std::array::from_fn(|i| self.array[i][s as usize - 6])
        };
        out.sort_unstable();
        out
    }
    pub fn label(&self, pair: VertexPairId) -> VertexLabel {
        self.labels[pair]
    }
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }
    pub fn pair_with_label(&self, label: &VertexLabel) -> Option<VertexPairId> {
        self.labels.iter().position(|l| l == label)
    }
    pub fn hexagons(&self) -> &[PairSet] {
        &self.hexagons
    }
    pub fn decagons(&self) -> &[PairSet] {
        &self.decagons
    }

    /// Cells containing a pair.
    pub fn cells_containing(&self, pair: VertexPairId) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&c| self.cells[c].contains(pair))
            .collect()
    }

    /// The half of a decagon that contains its lowest-index vertex.
    pub fn pentagon(&self, decagon: PairSet) -> Result<VertexSet> {
        let ico = &self.icosians;
        let verts = self.pairs.vertices_of(decagon, ico);
        let first = verts
            .iter()
            .next()
            .ok_or_else(|| invariant("pentagon", "empty decagon"))?;
        let v = ico.vertices();
        let minus_phi = -GoldenInt::PHI;
        let pent = VertexSet::from_iter(verts.iter().filter(|&y| {
            let ip = paper_inner_product(&v[first], &v[y]);
            y == first || ip == GoldenInt::PHI_INV || ip == minus_phi
        }));
        ensure(pent.len() == 5, "pentagon has five vertices", || {
            format!("{}", pent.len())
        })?;
        Ok(pent)
    }

    pub fn pentagons(&self) -> Result<Vec<VertexSet>> {
        self.decagons.iter().map(|&d| self.pentagon(d)).collect()
    }

    /// Every structure of one kind as checked [`SubPolytope`]s.
    pub fn sub_polytopes(&self, kind: Kind) -> Result<Vec<SubPolytope>> {
        let from_pairs = |sets: &[PairSet]| -> Result<Vec<SubPolytope>> {
            sets.iter()
                .map(|s| SubPolytope::new(kind, s.to_vec()))
                .collect()
        };
        match kind {
            Kind::Edge => self
                .skeleton
                .edges
                .iter()
                .map(|e| SubPolytope::new(kind, e.to_vec()))
                .collect(),
            Kind::Triangle => self
                .skeleton
                .triangles
                .iter()
                .map(|e| SubPolytope::new(kind, e.to_vec()))
                .collect(),
            Kind::TetraCell => self
                .skeleton
                .tetra_cells
                .iter()
                .map(|e| SubPolytope::new(kind, e.to_vec()))
                .collect(),
            Kind::Cell16 => from_pairs(&self.sixteen),
            Kind::Cell8 => from_pairs(&self.eight),
            Kind::Cell24 => from_pairs(&self.cells),
            Kind::Hexagon => from_pairs(&self.hexagons),
            Kind::Decagon => from_pairs(&self.decagons),
            Kind::Pentagon => self
                .pentagons()?
                .into_iter()
                .map(|p| SubPolytope::new(kind, p.iter().collect()))
                .collect(),
        }
    }

    /// Cells by duad order `(16), (17), …, (5X)`.
    pub fn cells_by_duad(&self) -> Vec<usize> {
        self.array.iter().flatten().copied().collect()
    }
}

fn label_pairs(pairs: &PairTable, cells: &[PairSet], duads: &[Duad]) -> Result<Vec<VertexLabel>> {
    let labels = (0..pairs.len())
        .map(|p| {
            let containing: Vec<Duad> = (0..cells.len())
                .filter(|&c| cells[c].contains(p))
                .map(|c| duads[c])
                .collect();
            ensure(
                containing.len() == 5,
                "each pair lies in five 24-cells",
                || format!("pair {p} lies in {}", containing.len()),
            )?;
            let mut cols = [0u8; 5];
            for d in &containing {
                cols[d.row as usize - 1] = d.col;
            }
            let label = VertexLabel { cols };
            ensure(
                !cols.contains(&0) && cols.iter().collect::<BTreeSet<_>>().len() == 5,
                "label uses each row and column once",
                || format!("pair {p}: {label}"),
            )?;
            Ok(label)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(labels)
}

/// Intersections of non-disjoint 24-cells.
pub fn enumerate_hexagons(pairs: &PairTable, cells: &[PairSet]) -> Result<Vec<PairSet>> {
    let mut out = BTreeSet::new();
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            let x = a.intersect(*b);
            if x.is_empty() {
                continue;
            }
            let members = x.to_vec();
            ensure(members.len() == 3, "24-cells meet in hexagons", || {
                format!("intersection of {} pairs", members.len())
            })?;
            let mutual_one = members.iter().all(|&p| {
                members
                    .iter()
                    .all(|&q| p == q || pairs.relation(p, q) == PairRelation::One)
            });
            ensure(mutual_one, "hexagon pairs at inner product ±1", || {
                format!("{members:?}")
            })?;
            out.insert(x);
        }
    }
    Ok(out.into_iter().collect())
}

/// Orbits of pairs under right multiplication by order-5 icosians.
pub fn enumerate_decagons(icosians: &Icosians, pairs: &PairTable) -> Result<Vec<PairSet>> {
    let mut out = BTreeSet::new();
    for w in (0..icosians.len()).filter(|&w| icosians.order(w) == 5) {
        for &rep in &pairs.reps {
            let mut x = rep;
            let mut orbit = PairSet(0);
            for _ in 0..5 {
                orbit = orbit.union(PairSet::from_iter([pairs.pair_of[x]]));
                x = icosians.mul_idx(x, w);
            }
            let members = orbit.to_vec();
            let golden = members.len() == 5
                && members.iter().all(|&p| {
                    members.iter().all(|&q| {
                        p == q
                            || matches!(
                                pairs.relation(p, q),
                                PairRelation::Phi | PairRelation::PhiInv
                            )
                    })
                });
            ensure(
                golden,
                "decagon pairs at inner products ±φ, ±φ⁻¹",
                || format!("{members:?}"),
            )?;
            out.insert(orbit);
        }
    }
    Ok(out.into_iter().collect())
}

/// Vertices normalised to standard 120-cell scale: `φ⁻²·(sum of a tetrahedral cell)`.
#[derive(Clone, Debug)]
pub struct Cell120 {
    pub vertices: Vec<IcosianVec>,
    /// Array position (row * 5 + col) of each vertex's 24-cell.
    pub home: Vec<usize>,
    pub neighbors: Vec<[usize; 4]>,
    pub labels: Vec<Cell120Label>,
    /// Entry `(i, j)` is `gⁱ·C·g⁻ʲ` as sorted vertex indices.
    pub array: Vec<Vec<Vec<usize>>>,
}

impl Cell120 {
    pub fn index_of(&self, v: &IcosianVec) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..5)
            .flat_map(|i| self.array[i][j].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn row(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.array[i].iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }
}

/// Multiset of all ordered-pair inner products within a vertex set.
pub fn inner_product_spectrum(vs: &[IcosianVec]) -> BTreeMap<GoldenInt, usize> {
    let mut out = BTreeMap::new();
    for a in vs {
        for b in vs {
            *out.entry(a.dot(b)).or_insert(0) += 1;
        }
    }
    out
}

pub fn build_120cell(cell600: &Cell600) -> Result<Cell120> {
    let ico = cell600.icosians();
    let v = ico.vertices();
    let shrink = GoldenInt::phi_pow(-2);
    let mut vertices: Vec<IcosianVec> = cell600
        .skeleton()
        .tetra_cells
        .iter()
        .map(|t| {
            t.iter()
                .fold(IcosianVec::default(), |acc, &i| acc + v[i])
                .scale(shrink)
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    ensure(vertices.len() == 600, "120-cell has 600 vertices", || {
        format!("{}", vertices.len())
    })?;
    let norm8 = GoldenInt::int(8);
    ensure(
        vertices.iter().all(|x| x.norm() == norm8),
        "120-cell vertices have norm 8",
        String::new,
    )?;
    let index = |x: &IcosianVec| vertices.binary_search(x).ok();

    let two = GoldenInt::int(2);
    let c: Vec<usize> = (0..vertices.len())
        .filter(|&i| {
            let x = &vertices[i].0;
            x.iter().filter(|c| c.abs() == two).count() == 2
                && x.iter().filter(|c| c.is_zero()).count() == 2
        })
        .collect();
    ensure(c.len() == 24, "the 24-cell (±2,±2,0,0)^S", || {
        format!("{} vertices", c.len())
    })?;

    let g = cell600.order5();
    let mut home = vec![usize::MAX; vertices.len()];
    let mut array = vec![vec![Vec::new(); 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let left = v[ico.pow_idx(g, i as u32)];
            let right = v[ico.inverse(ico.pow_idx(g, j as u32))];
            let mut entry = Vec::with_capacity(24);
            for &x in &c {
                let y = left
                    .mul_half(&vertices[x])
                    .and_then(|y| y.mul_half(&right))
                    .and_then(|y| index(&y))
                    .ok_or_else(|| {
                        invariant("120-cell is closed under 2A5 × 2A5", format!("({i}, {j})"))
                    })?;
                ensure(
                    home[y] == usize::MAX,
                    "120-cell array entries are disjoint",
                    || format!("vertex {y} at ({i}, {j})"),
                )?;
                home[y] = i * 5 + j;
                entry.push(y);
            }
            entry.sort_unstable();
            array[i][j] = entry;
        }
    }
    ensure(
        home.iter().all(|&h| h != usize::MAX),
        "120-cell array covers all vertices",
        String::new,
    )?;

    let mut neighbors = Vec::with_capacity(vertices.len());
    let mut labels = Vec::with_capacity(vertices.len());
    for (i, x) in vertices.iter().enumerate() {
        let mut best: Option<GoldenInt> = None;
        let mut near = Vec::new();
        for (j, y) in vertices.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = x.dot(y);
            match best.map(|b| d.cmp_value(b)) {
                None | Some(std::cmp::Ordering::Greater) => {
                    best = Some(d);
                    near.clear();
                    near.push(j);
                }
                Some(std::cmp::Ordering::Equal) => near.push(j),
                Some(std::cmp::Ordering::Less) => {}
            }
        }
        ensure(
            near.len() == 4,
            "120-cell vertices have four neighbours",
            || format!("vertex {i} has {}", near.len()),
        )?;
        let duad = |k: usize| Duad::from_position(home[k] / 5, home[k] % 5);
        let mut nd: Vec<Duad> = near.iter().map(|&k| duad(k)).collect();
        nd.sort();
        neighbors.push([near[0], near[1], near[2], near[3]]);
        labels.push(Cell120Label {
            home: duad(i),
            neighbors: [nd[0], nd[1], nd[2], nd[3]],
        });
    }
    Ok(Cell120 {
        vertices,
        home,
        neighbors,
        labels,
        array,
    })
}

/// Edge midpoints scaled to `φ(u + v)`, norm `20 + 8√5`.
pub fn rectified_600cell(cell600: &Cell600) -> Vec<IcosianVec> {
    let v = cell600.icosians().vertices();
    let mut out: Vec<IcosianVec> = cell600
        .skeleton()
        .edges
        .iter()
        .map(|&[a, b]| (v[a] + v[b]).scale(GoldenInt::PHI))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn world() -> &'static Cell600 {
        static W: OnceLock<Cell600> = OnceLock::new();
        W.get_or_init(|| Cell600::build(Icosians::new().unwrap()).unwrap())
    }

    fn label(s: &str) -> VertexLabel {
        s.parse().unwrap()
    }

    #[test]
    fn inner_product_distribution() {
        let w = world();
        let v = w.icosians().vertices();
        let g = |a, b| GoldenInt::new(a, b);
        let expected: BTreeMap<GoldenInt, usize> = [
            (g(2, 0), 1),
            (g(0, 1), 12),
            (g(0, -1), 12),
            (g(-1, 1), 12),
            (g(1, -1), 12),
            (g(1, 0), 20),
            (g(-1, 0), 20),
            (g(0, 0), 30),
            (g(-2, 0), 1),
        ]
        .into_iter()
        .collect();
        for x in v {
            let mut hist = BTreeMap::new();
            for y in v {
                *hist.entry(paper_inner_product(x, y)).or_insert(0) += 1;
            }
            assert_eq!(hist, expected);
        }
        let e0 = IcosianVec::from_ints([2, 0, 0, 0]);
        let e1 = IcosianVec::from_ints([0, 2, 0, 0]);
        assert_eq!(paper_inner_product(&e0, &e1), GoldenInt::ZERO);
        assert_eq!(paper_inner_product(&e0, &e0), GoldenInt::int(2));
    }

    #[test]
    fn skeleton_counts() {
        let s = world().skeleton();
        assert_eq!(
            (s.edges.len(), s.triangles.len(), s.tetra_cells.len()),
            (720, 1200, 600)
        );
    }

    #[test]
    fn sixteen_and_eight_cells() {
        let w = world();
        assert_eq!(w.sixteen_cells().len(), 75);
        assert_eq!(count_orthogonal_pairs(w.pairs()), 450);
        // every orthogonal pair lies in exactly one 16-cell
        for p in 0..60 {
            for q in w.pairs().with_relation(p, PairRelation::Orthogonal).iter() {
                let n = w
                    .sixteen_cells()
                    .iter()
                    .filter(|s| s.contains(p) && s.contains(q))
                    .count();
                assert_eq!(n, 1);
            }
        }
        assert_eq!(w.eight_cells().len(), 75);
        for e in w.eight_cells() {
            assert_eq!(w.cells24().iter().filter(|c| e.is_subset(**c)).count(), 1);
        }
    }

    #[test]
    fn twenty_four_cells() {
        let w = world();
        assert_eq!(w.cells24().len(), 25);
        for c in w.cells24() {
            assert_eq!(
                w.sixteen_cells().iter().filter(|s| s.is_subset(*c)).count(),
                3
            );
        }
        // the cell through (±2,0,0,0)^S is 2A4
        let ico = w.icosians();
        let q8 = w
            .pairs()
            .pairs_of(VertexSet::from_iter(ico.quaternion_group()));
        let t = w
            .pairs()
            .pairs_of(VertexSet::from_iter(ico.binary_tetrahedral()));
        let cell = w.cells24().iter().find(|c| q8.is_subset(**c)).unwrap();
        assert_eq!(*cell, t);
        for p in 0..60 {
            assert_eq!(w.cells_containing(p).len(), 5);
        }
    }

    #[test]
    fn schoute_partitions() {
        let w = world();
        assert_eq!(w.partitions().len(), 10);
        let expected: BTreeSet<[usize; 5]> = (1..=10).map(|s| w.schoute_partition(s)).collect();
        let found: BTreeSet<[usize; 5]> = w.partitions().iter().copied().collect();
        assert_eq!(found, expected);
        let cells = w.cells24();
        for (i, a) in cells.iter().enumerate() {
            let disjoint = cells.iter().filter(|b| a.is_disjoint(**b)).count();
            assert_eq!(disjoint, 8);
            for (j, b) in cells.iter().enumerate() {
                let share = w.duad(i).shares_symbol(w.duad(j));
                if i != j {
                    assert_eq!(a.is_disjoint(*b), share);
                    if !share {
                        assert_eq!(a.intersect(*b).len(), 3);
                    }
                }
            }
        }
    }

    #[test]
    fn array_diagonal_contains_unit() {
        let w = world();
        let one = w.pairs().pair_of[w.icosians().identity()];
        for i in 0..5 {
            assert!(w.cells24()[w.array()[i][i]].contains(one));
        }
        assert_eq!(w.label(one), label("(16)(27)(38)(49)(5X)"));
        assert_eq!(w.label(one).to_string(), "(16)(27)(38)(49)(5X)");
    }

    #[test]
    fn labels_are_distinct_even_permutations() {
        let w = world();
        let set: BTreeSet<_> = w.labels().iter().collect();
        assert_eq!(set.len(), 60);
        assert!(w.labels().iter().all(|l| l.is_even()));
        for (p, a) in w.labels().iter().enumerate() {
            for (q, b) in w.labels().iter().enumerate() {
                if p == q {
                    continue;
                }
                let shared = a.shared_duads(b);
                assert!(shared < 3);
                let rel = w.pairs().relation(p, q);
                let expected = match shared {
                    1 => vec![PairRelation::Orthogonal],
                    2 => vec![PairRelation::One],
                    _ => vec![PairRelation::Phi, PairRelation::PhiInv],
                };
                assert!(expected.contains(&rel), "{a} vs {b}: {rel:?}");
            }
        }
    }

    #[test]
    fn hexagons_and_decagons() {
        let w = world();
        assert_eq!(w.hexagons().len(), 200);
        for c in w.cells24() {
            assert_eq!(w.hexagons().iter().filter(|h| h.is_subset(*c)).count(), 16);
        }
        let h: PairSet = PairSet::from_iter(
            [
                "(16)(27)(38)(49)(5X)",
                "(16)(27)(39)(4X)(58)",
                "(16)(27)(3X)(48)(59)",
            ]
            .map(|s| w.pair_with_label(&label(s)).unwrap()),
        );
        let cell16 = w.cell_at(Duad::new(1, 6));
        let cell27 = w.cell_at(Duad::new(2, 7));
        assert_eq!(w.cells24()[cell16].intersect(w.cells24()[cell27]), h);
        assert!(w.hexagons().contains(&h));

        assert_eq!(w.decagons().len(), 72);
        let ico = w.icosians();
        let verts: Vec<VertexSet> = w
            .decagons()
            .iter()
            .map(|d| w.pairs().vertices_of(*d, ico))
            .collect();
        for &[a, b] in &w.skeleton().edges {
            assert_eq!(
                verts
                    .iter()
                    .filter(|d| d.contains(a) && d.contains(b))
                    .count(),
                1
            );
        }
    }

    #[test]
    fn pentagons_meet_every_cell_once() {
        let w = world();
        let pents = w.pentagons().unwrap();
        assert_eq!(pents.len(), 72);
        for p in pents {
            let ps = w.pairs().pairs_of(p);
            assert_eq!(ps.len(), 5);
            for c in w.cells24() {
                assert_eq!(c.intersect(ps).len(), 1);
            }
        }
    }

    #[test]
    fn sub_polytope_sizes() {
        let w = world();
        let counts: Vec<usize> = [
            Kind::Edge,
            Kind::Triangle,
            Kind::TetraCell,
            Kind::Cell16,
            Kind::Cell8,
            Kind::Cell24,
            Kind::Hexagon,
            Kind::Decagon,
            Kind::Pentagon,
        ]
        .iter()
        .map(|&k| w.sub_polytopes(k).unwrap().len())
        .collect();
        assert_eq!(counts, vec![720, 1200, 600, 75, 75, 25, 200, 72, 72]);
        assert!(SubPolytope::new(Kind::Hexagon, vec![1, 2]).is_err());
    }

    #[test]
    fn prime_arrays_partition() {
        let w = world();
        let ico = w.icosians();
        for (p, size, nsize) in [(2, 5, 24), (3, 10, 12), (5, 6, 20)] {
            let a = prime_arrays(ico, p).unwrap();
            assert_eq!(a.normalizer.len(), nsize);
            assert_eq!(a.size(), size);
            assert_eq!(a.distinct_entries(), size * size);
            assert!(a.rows_partition() && a.columns_partition());
        }
        let schoute: BTreeSet<PairSet> = prime_arrays(ico, 2)
            .unwrap()
            .entries
            .iter()
            .flatten()
            .map(|e| w.pairs().pairs_of(*e))
            .collect();
        assert_eq!(schoute, w.cells24().iter().copied().collect());
        assert!(prime_arrays(ico, 7).is_err());
    }

    #[test]
    fn orthogonal_hexagon_and_decagon_pairs_are_array_entries() {
        let w = world();
        let ico = w.icosians();
        let find = |ls: &[&str]| {
            PairSet::from_iter(ls.iter().map(|s| w.pair_with_label(&label(s)).unwrap()))
        };
        let h = find(&[
            "(16)(27)(38)(49)(5X)",
            "(16)(27)(39)(4X)(58)",
            "(16)(27)(3X)(48)(59)",
        ]);
        let h2 = find(&[
            "(17)(26)(38)(4X)(59)",
            "(17)(26)(39)(48)(5X)",
            "(17)(26)(3X)(49)(58)",
        ]);
        let d = find(&[
            "(16)(27)(38)(49)(5X)",
            "(17)(28)(39)(4X)(56)",
            "(18)(29)(3X)(46)(57)",
            "(19)(2X)(36)(47)(58)",
            "(1X)(26)(37)(48)(59)",
        ]);
        let d2 = find(&[
            "(16)(2X)(39)(48)(57)",
            "(17)(26)(3X)(49)(58)",
            "(18)(27)(36)(4X)(59)",
            "(19)(28)(37)(46)(5X)",
            "(1X)(29)(38)(47)(56)",
        ]);
        assert!(w.hexagons().contains(&h) && w.hexagons().contains(&h2));
        assert!(w.decagons().contains(&d) && w.decagons().contains(&d2));
        for (x, y) in [(h, h2), (d, d2)] {
            assert!(x.iter().all(|p| y
                .iter()
                .all(|q| w.pairs().relation(p, q) == PairRelation::Orthogonal)));
        }
        let entries = |p| -> HashSet<PairSet> {
            prime_arrays(ico, p)
                .unwrap()
                .entries
                .iter()
                .flatten()
                .map(|e| w.pairs().pairs_of(*e))
                .collect()
        };
        assert!(entries(3).contains(&h.union(h2)));
        assert!(entries(5).contains(&d.union(d2)));
    }

    #[test]
    fn cell120_structure() {
        let w = world();
        let c = build_120cell(w).unwrap();
        assert_eq!(c.vertices.len(), 600);
        assert!(c.index_of(&IcosianVec::from_ints([2, 2, 0, 0])).is_some());
        let labels: BTreeSet<_> = c.labels.iter().collect();
        assert_eq!(labels.len(), 300);
        let ex: Cell120Label = "(38)|(16)(27)(4X)(59)".parse().unwrap();
        assert!(c.labels.contains(&ex));
        for l in &c.labels {
            let perm = l.column_permutation().expect("five rows and five columns");
            assert!(!permutation_is_even(&perm), "{l}");
        }
        let h = inner_product_spectrum(w.icosians().vertices());
        let doubled: BTreeMap<GoldenInt, usize> = h.iter().map(|(k, n)| (*k * 2, *n)).collect();
        for j in 0..5 {
            let col: Vec<IcosianVec> = c.column(j).iter().map(|&i| c.vertices[i]).collect();
            assert_eq!(col.len(), 120);
            assert_eq!(inner_product_spectrum(&col), doubled);
            let row: Vec<IcosianVec> = c.row(j).iter().map(|&i| c.vertices[i]).collect();
            assert_eq!(inner_product_spectrum(&row), doubled);
        }
    }

    #[test]
    fn rectified_shapes() {
        let w = world();
        let r = rectified_600cell(w);
        assert_eq!(r.len(), 720);
        assert!(r.iter().all(|x| x.norm() == GoldenInt::new(12, 16)));
        let (x, y) = GoldenInt::new(12, 16).to_sqrt5();
        assert_eq!((x, y), (20.into(), 8.into()));
        let g = GoldenInt::new;
        let mut expected: Vec<[GoldenInt; 4]> = vec![
            [g(0, 0), g(0, 0), g(0, 2), g(2, 2)],
            [g(1, 0), g(1, 0), g(1, 2), g(1, 2)],
            [g(0, 0), g(1, 0), g(0, 1), g(1, 3)],
            [g(0, 0), g(1, 1), g(1, 2), g(2, 1)],
            [g(1, 0), g(0, 1), g(2, 2), g(1, 1)],
            [g(0, 1), g(1, 1), g(0, 2), g(1, 2)],
        ];
        for s in &mut expected {
            s.sort_by(|a, b| a.cmp_value(*b));
        }
        let shapes: BTreeSet<[GoldenInt; 4]> = r.iter().map(|x| x.shape()).collect();
        assert_eq!(shapes, expected.into_iter().collect());
    }
}
