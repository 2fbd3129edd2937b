//! The F2 space E8/2E8, its F4 structure and the H4 labels of its geometry.
//!
//! Classes are coordinate vectors mod 2 in a basis of eight roots `ε(v)`,
//! `v ∈ H`. The golden scalar φ becomes an integral endomorphism Φ whose
//! reduction Φ̄ has order 3 and plays the role of ω ∈ F4.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::embed::{golden_coords, IntLattice, E8};
use crate::error::{ensure, invariant, Result};
use crate::golden::{GoldenInt, Rational};
use crate::icosian::IcosianVec;
use crate::polytopes::{Cell600, Duad, PairSet};
use crate::symmetry::SymOp;

/// A class of E8/2E8: bit `i` is coordinate `i` mod 2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec(pub u8);

impl F2Vec {
    pub fn add(self, o: F2Vec) -> F2Vec {
        F2Vec(self.0 ^ o.0)
    }
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
    pub fn all() -> impl Iterator<Item = F2Vec> {
        (0..=255u8).map(F2Vec)
    }
    pub fn nonzero() -> impl Iterator<Item = F2Vec> {
        (1..=255u8).map(F2Vec)
    }
    pub fn from_coords(c: &[i64]) -> F2Vec {
        F2Vec(
            c.iter()
                .enumerate()
                .fold(0u8, |m, (i, &x)| m | ((x.rem_euclid(2) as u8) << i)),
        )
    }
}

impl fmt::Display for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (0..8).try_for_each(|i| write!(f, "{}", self.0 >> i & 1))
    }
}

/// A subset of the 256 classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Set(pub [u64; 4]);

impl F2Set {
    pub fn from_iter<I: IntoIterator<Item = F2Vec>>(it: I) -> Self {
        let mut s = F2Set::default();
        for v in it {
            s.insert(v);
        }
        s
    }
    pub fn insert(&mut self, v: F2Vec) {
        self.0[v.0 as usize >> 6] |= 1 << (v.0 & 63);
    }
    pub fn contains(&self, v: F2Vec) -> bool {
        self.0[v.0 as usize >> 6] >> (v.0 & 63) & 1 == 1
    }
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    pub fn intersect(&self, o: &F2Set) -> F2Set {
        F2Set(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }
    pub fn is_subset(&self, o: &F2Set) -> bool {
        (0..4).all(|i| self.0[i] & !o.0[i] == 0)
    }
    pub fn iter(&self) -> impl Iterator<Item = F2Vec> + '_ {
        F2Vec::all().filter(move |v| self.contains(*v))
    }
    /// F2-dimension, assuming the set is a subspace.
    pub fn dim(&self) -> u32 {
        self.len().trailing_zeros()
    }
    /// Span of a set of vectors.
    pub fn span<I: IntoIterator<Item = F2Vec>>(gens: I) -> F2Set {
        let mut members = vec![F2Vec(0)];
        for g in gens {
            if !members.contains(&g) {
                let shifted: Vec<F2Vec> = members.iter().map(|m| m.add(g)).collect();
                members.extend(shifted);
            }
        }
        F2Set::from_iter(members)
    }
}

/// Elements of F4 encoded as `a + bω` in the two low bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4(pub u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA_BAR: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA_BAR];

    pub fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }
    pub fn mul(self, o: F4) -> F4 {
        // ω² = ω + 1
        let (a, b) = (self.0 & 1, self.0 >> 1);
        let (c, d) = (o.0 & 1, o.0 >> 1);
        let bd = b & d;
        F4(((a & c) ^ bd) | (((a & d) ^ (b & c) ^ bd) << 1))
    }
    pub fn trace(self) -> u8 {
        let t = self.add(self.mul(self));
        debug_assert!(t.0 <= 1);
        t.0
    }
    pub fn name(self) -> &'static str {
        ["0", "1", "w", "wbar"][self.0 as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointTag {
    Vertex(usize),
    Cell(Duad),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F4Point {
    /// `x, Φ̄x, Φ̄²x`; for vertex points `x` is the class of `ε(v)`.
    pub vectors: [F2Vec; 3],
    pub tag: PointTag,
}

impl F4Point {
    pub fn span(&self) -> F2Set {
        F2Set::from_iter([F2Vec(0), self.vectors[0], self.vectors[1], self.vectors[2]])
    }
}

/// What a line looks like on the H4 side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineKind {
    /// Five 24-cells forming the partition with this symbol.
    Schoute(u8),
    /// Five vertex pairs forming a decagon (index into the decagon list).
    Decagon(usize),
    /// Four vertex pairs of a 16-cell and the 24-cell containing it.
    Cell16 { sixteen: usize, cell: Duad },
    /// A hexagon of `(i j) ∩ (i′ j′)` with the crossed cells `(i j′)`, `(i′ j)`.
    Hexagon { hexagon: usize, crossed: [Duad; 2] },
}

impl LineKind {
    pub fn name(&self) -> &'static str {
        match self {
            LineKind::Schoute(_) => "schoute",
            LineKind::Decagon(_) => "decagon",
            LineKind::Cell16 { .. } => "16-cell",
            LineKind::Hexagon { .. } => "hexagon",
        }
    }
}

#[derive(Clone, Debug)]
pub struct F4Line {
    pub space: F2Set,
    pub points: [usize; 5],
    pub kind: LineKind,
}

#[derive(Clone, Debug)]
pub struct F4Plane {
    /// The point whose B-perp this is.
    pub pole: usize,
    pub space: F2Set,
    pub points: Vec<usize>,
}

/// An F4-subspace: closed under Φ̄, with F2-dimension twice its F4-dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F4Subspace {
    pub space: F2Set,
    pub f4dim: u32,
}

/// The integral Φ on lattice coordinates and its reduction.
#[derive(Clone, Debug)]
pub struct PhiMap {
    /// Column `j` is `Φ(bⱼ)` in basis coordinates.
    pub matrix: [[i64; 8]; 8],
    pub reduced: [F2Vec; 8],
}

impl PhiMap {
    pub fn apply_int(&self, c: &[i64]) -> Vec<i64> {
        (0..8)
            .map(|i| (0..8).map(|j| self.matrix[i][j] * c[j]).sum())
            .collect()
    }
    pub fn apply(&self, x: F2Vec) -> F2Vec {
        (0..8)
            .filter(|&j| x.0 >> j & 1 == 1)
            .fold(F2Vec(0), |acc, j| acc.add(self.reduced[j]))
    }
    pub fn square_minus_self_minus_one(&self) -> [[i64; 8]; 8] {
        let m = &self.matrix;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let sq: i64 = (0..8).map(|k| m[i][k] * m[k][j]).sum();
                sq - m[i][j] - i64::from(i == j)
            })
        })
    }
}

fn phi_on_frame(v: &[Rational]) -> Vec<Rational> {
    // a + bφ ↦ b + (a + b)φ in the (a, b) slots of the m = -1 frame
    v.chunks(2).flat_map(|s| [s[1], s[0] + s[1]]).collect()
}

/// Everything on E8/2E8.
#[derive(Clone, Debug)]
pub struct Mod2 {
    lattice: IntLattice,
    q: Vec<u8>,
    gram2: [u8; 8],
    phi: PhiMap,
    vertex_class: Vec<F2Vec>,
    phi_class: Vec<F2Vec>,
    points: Vec<F4Point>,
    point_of: Vec<Option<usize>>,
    lines: Vec<F4Line>,
    planes: Vec<F4Plane>,
}

impl Mod2 {
    pub fn build(e8: &E8, cell600: &Cell600) -> Result<Self> {
        let map = *e8.lattice.map();
        let ico = cell600.icosians();
        let embed = |v: &IcosianVec| map.split_golden(&golden_coords(v));
        let h: Vec<Vec<Rational>> = ico.vertices().iter().map(embed).collect::<Result<_>>()?;
        let lattice = e8.root_basis(&h)?;

        let coords = |v: &[Rational]| {
            lattice
                .coords_of(v)
                .ok_or_else(|| invariant("E8 membership", "vector outside the lattice"))
        };
        let basis = lattice.basis();
        let mut matrix = [[0i64; 8]; 8];
        for (j, b) in basis.iter().enumerate() {
            let c = coords(&phi_on_frame(b))?;
            for i in 0..8 {
                matrix[i][j] = c[i];
            }
        }
        let reduced = std::array::from_fn(|j| {
            F2Vec::from_coords(&(0..8).map(|i| matrix[i][j]).collect::<Vec<_>>())
        });
        let phi = PhiMap { matrix, reduced };

        let mut vertex_class = Vec::with_capacity(ico.len());
        let mut phi_class = Vec::with_capacity(ico.len());
        for v in ico.vertices() {
            let c = coords(&embed(v)?)?;
            let cp = coords(&embed(&v.scale(GoldenInt::PHI))?)?;
            ensure(
                phi.apply_int(&c) == cp,
                "Φ agrees with φ on embedded roots",
                || format!("{v}"),
            )?;
            vertex_class.push(F2Vec::from_coords(&c));
            phi_class.push(F2Vec::from_coords(&cp));
        }

        let gram = lattice.gram();
        let gram2: [u8; 8] = std::array::from_fn(|i| {
            (0..8).fold(0u8, |m, j| m | (((gram[i][j].rem_euclid(2)) as u8) << j))
        });
        let q: Vec<u8> = F2Vec::all()
            .map(|x| {
                let c: Vec<i64> = (0..8).map(|i| i64::from(x.0 >> i & 1)).collect();
                ((lattice.norm_of_coords(&c) / 2).rem_euclid(2)) as u8
            })
            .collect();

        let mut me = Mod2 {
            lattice,
            q,
            gram2,
            phi,
            vertex_class,
            phi_class,
            points: Vec::new(),
            point_of: vec![None; 256],
            lines: Vec::new(),
            planes: Vec::new(),
        };
        me.build_points(cell600)?;
        me.lines = me.classify_lines(cell600)?;
        me.planes = me.classify_planes(cell600)?;
        Ok(me)
    }

    pub fn lattice(&self) -> &IntLattice {
        &self.lattice
    }

    pub fn q(&self, x: F2Vec) -> u8 {
        self.q[x.0 as usize]
    }

    pub fn b(&self, x: F2Vec, y: F2Vec) -> u8 {
        let mut acc = 0u8;
        for i in 0..8 {
            if x.0 >> i & 1 == 1 {
                acc ^= (self.gram2[i] & y.0).count_ones() as u8 & 1;
            }
        }
        acc
    }

    pub fn phi(&self) -> &PhiMap {
        &self.phi
    }

    pub fn phibar(&self, x: F2Vec) -> F2Vec {
        self.phi.apply(x)
    }

    pub fn vertex_class(&self, v: usize) -> F2Vec {
        self.vertex_class[v]
    }

    pub fn phi_vertex_class(&self, v: usize) -> F2Vec {
        self.phi_class[v]
    }

    /// `(zero, isotropic nonzero, non-isotropic)`.
    pub fn q_census(&self) -> (usize, usize, usize) {
        let iso = F2Vec::nonzero().filter(|&x| self.q(x) == 0).count();
        (1, iso, 255 - iso)
    }

    pub fn isotropic(&self) -> Vec<F2Vec> {
        F2Vec::nonzero().filter(|&x| self.q(x) == 0).collect()
    }

    fn build_points(&mut self, cell600: &Cell600) -> Result<()> {
        let pairs = cell600.pairs();
        let mut points = Vec::with_capacity(85);
        for (p, &rep) in pairs.reps.iter().enumerate() {
            let x = self.vertex_class[rep];
            ensure(
                x == self.vertex_class[cell600.icosians().neg(rep)],
                "±v share a class",
                String::new,
            )?;
            let y = self.phibar(x);
            ensure(y == self.phi_class[rep], "Φ̄ of ε(v) is ε(φv)", String::new)?;
            points.push(F4Point {
                vectors: [x, y, self.phibar(y)],
                tag: PointTag::Vertex(p),
            });
        }
        for (i, pt) in points.iter().enumerate() {
            for v in pt.vectors {
                ensure(
                    self.point_of[v.0 as usize].is_none(),
                    "vertex points are distinct",
                    || format!("{v}"),
                )?;
                self.point_of[v.0 as usize] = Some(i);
            }
        }
        // remaining Φ̄-orbits, tagged afterwards through their 16-cell lines
        let mut rest = Vec::new();
        for x in F2Vec::nonzero() {
            if self.point_of[x.0 as usize].is_none() {
                let y = self.phibar(x);
                let z = self.phibar(y);
                ensure(
                    x.add(y) == z && self.phibar(z) == x,
                    "Φ̄ orbits span 2-spaces",
                    || format!("{x}"),
                )?;
                let idx = points.len() + rest.len();
                for v in [x, y, z] {
                    self.point_of[v.0 as usize] = Some(idx);
                }
                rest.push([x, y, z]);
            }
        }
        ensure(
            rest.len() == 25,
            "25 points beyond the vertex points",
            || format!("{}", rest.len()),
        )?;
        let untagged: Vec<F4Point> = rest
            .iter()
            .map(|&vectors| F4Point {
                vectors,
                tag: PointTag::Cell(Duad::new(1, 6)),
            })
            .collect();
        points.extend(untagged);
        self.points = points;

        // tag each remaining point by the 24-cells of the 16-cell lines through it
        let mut tags: Vec<BTreeSet<Duad>> = vec![BTreeSet::new(); 85];
        let mut line_count = vec![0usize; 85];
        for space in self.all_line_spaces() {
            let pts = self.points_in(&space);
            let (verts, cells): (Vec<usize>, Vec<usize>) = pts.iter().partition(|&&p| p < 60);
            if verts.len() == 4 && cells.len() == 1 {
                let set = PairSet::from_iter(verts.iter().copied());
                ensure(
                    cell600.sixteen_cells().contains(&set),
                    "four vertex points form a 16-cell",
                    || format!("{verts:?}"),
                )?;
                let cell = cell600
                    .cells24()
                    .iter()
                    .position(|c| set.is_subset(*c))
                    .ok_or_else(|| invariant("16-cell lies in a 24-cell", format!("{verts:?}")))?;
                tags[cells[0]].insert(cell600.duad(cell));
                line_count[cells[0]] += 1;
            }
        }
        let mut seen = HashSet::new();
        for i in 60..85 {
            ensure(
                tags[i].len() == 1 && line_count[i] == 3,
                "cell point tag is unambiguous",
                || format!("point {i}: {:?} from {} lines", tags[i], line_count[i]),
            )?;
            let d = *tags[i].iter().next().unwrap();
            ensure(seen.insert(d), "cell tags are a bijection", || {
                format!("{d}")
            })?;
            self.points[i].tag = PointTag::Cell(d);
        }
        // order the cell points by duad
        let mut cells: Vec<F4Point> = self.points.split_off(60);
        cells.sort_by_key(|p| p.tag);
        self.points.extend(cells);
        self.point_of = vec![None; 256];
        for (i, p) in self.points.iter().enumerate() {
            for v in p.vectors {
                self.point_of[v.0 as usize] = Some(i);
            }
        }
        Ok(())
    }

    pub fn points(&self) -> &[F4Point] {
        &self.points
    }

    pub fn point_of(&self, x: F2Vec) -> Option<usize> {
        self.point_of[x.0 as usize]
    }

    pub fn cell_point(&self, d: Duad) -> usize {
        let (i, j) = d.position();
        60 + 5 * i + j
    }

    pub fn points_in(&self, space: &F2Set) -> Vec<usize> {
        let mut out: Vec<usize> = space.iter().filter_map(|x| self.point_of(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn all_line_spaces(&self) -> Vec<F2Set> {
        let mut seen = BTreeSet::new();
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let (a, b) = (self.points[i].vectors, self.points[j].vectors);
                seen.insert(F2Set::span([a[0], a[1], b[0], b[1]]));
            }
        }
        seen.into_iter().collect()
    }

    fn classify_lines(&self, cell600: &Cell600) -> Result<Vec<F4Line>> {
        let mut lines = Vec::with_capacity(357);
        let sixteen: HashMap<PairSet, usize> = cell600
            .sixteen_cells()
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i))
            .collect();
        let decagons: HashMap<PairSet, usize> = cell600
            .decagons()
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i))
            .collect();
        let hexagons: HashMap<PairSet, usize> = cell600
            .hexagons()
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i))
            .collect();
        let partitions: HashMap<[usize; 5], u8> = (1..=10)
            .map(|s| (cell600.schoute_partition(s), s))
            .collect();
        for space in self.all_line_spaces() {
            let pts = self.points_in(&space);
            ensure(
                pts.len() == 5 && space.len() == 16,
                "lines have five points",
                || format!("{pts:?}"),
            )?;
            let verts: Vec<usize> = pts.iter().copied().filter(|&p| p < 60).collect();
            let cells: Vec<Duad> = pts
                .iter()
                .filter_map(|&p| match self.points[p].tag {
                    PointTag::Cell(d) => Some(d),
                    PointTag::Vertex(_) => None,
                })
                .collect();
            let pairs = PairSet::from_iter(verts.iter().copied());
            let bad = || invariant("line incidence", format!("points {pts:?}"));
            let kind = match (verts.len(), cells.len()) {
                (0, 5) => {
                    let mut key: Vec<usize> = cells.iter().map(|&d| cell600.cell_at(d)).collect();
                    key.sort_unstable();
                    let s = partitions
                        .get(&[key[0], key[1], key[2], key[3], key[4]])
                        .ok_or_else(bad)?;
                    ensure(
                        space.iter().all(|x| self.q(x) == 0),
                        "Schoute lines are totally singular",
                        String::new,
                    )?;
                    LineKind::Schoute(*s)
                }
                (5, 0) => LineKind::Decagon(*decagons.get(&pairs).ok_or_else(bad)?),
                (4, 1) => {
                    let s = *sixteen.get(&pairs).ok_or_else(bad)?;
                    ensure(
                        pairs.is_subset(cell600.cells24()[cell600.cell_at(cells[0])]),
                        "16-cell in its 24-cell",
                        || format!("{pts:?}"),
                    )?;
                    LineKind::Cell16 {
                        sixteen: s,
                        cell: cells[0],
                    }
                }
                (3, 2) => {
                    let h = *hexagons.get(&pairs).ok_or_else(bad)?;
                    let home: Vec<Duad> = (0..25)
                        .filter(|&c| pairs.is_subset(cell600.cells24()[c]))
                        .map(|c| cell600.duad(c))
                        .collect();
                    ensure(home.len() == 2, "hexagon lies in two 24-cells", String::new)?;
                    let (a, b) = (home[0], home[1]);
                    let mut crossed = [Duad::new(a.row, b.col), Duad::new(b.row, a.col)];
                    crossed.sort();
                    let mut got = [cells[0], cells[1]];
                    got.sort();
                    ensure(
                        crossed == got,
                        "hexagon line carries the crossed 24-cells",
                        || format!("{a} {b}: {got:?}"),
                    )?;
                    LineKind::Hexagon {
                        hexagon: h,
                        crossed,
                    }
                }
                _ => return Err(bad()),
            };
            lines.push(F4Line {
                space,
                points: [pts[0], pts[1], pts[2], pts[3], pts[4]],
                kind,
            });
        }
        lines.sort_by_key(|l| (l.kind, l.points));
        Ok(lines)
    }

    pub fn lines(&self) -> &[F4Line] {
        &self.lines
    }

    /// Line counts by kind name.
    pub fn line_census(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for l in &self.lines {
            *out.entry(l.kind.name()).or_insert(0) += 1;
        }
        out
    }

    pub fn perp(&self, gens: &[F2Vec]) -> F2Set {
        F2Set::from_iter(F2Vec::all().filter(|&y| gens.iter().all(|&g| self.b(g, y) == 0)))
    }

    fn classify_planes(&self, cell600: &Cell600) -> Result<Vec<F4Plane>> {
        let mut planes = Vec::with_capacity(85);
        let mut seen = HashSet::new();
        for (i, p) in self.points.iter().enumerate() {
            let space = self.perp(&[p.vectors[0], p.vectors[1]]);
            ensure(
                space.len() == 64 && self.is_phi_closed(&space),
                "planes are Φ̄-closed 6-spaces",
                String::new,
            )?;
            ensure(seen.insert(space), "planes are distinct", String::new)?;
            let points = self.points_in(&space);
            ensure(points.len() == 21, "planes have 21 points", || {
                format!("{}", points.len())
            })?;
            let verts: BTreeSet<usize> = points.iter().copied().filter(|&q| q < 60).collect();
            let cells: BTreeSet<usize> = points.iter().copied().filter(|&q| q >= 60).collect();
            match p.tag {
                PointTag::Vertex(v) => {
                    let mut want: BTreeSet<usize> = cell600
                        .pairs()
                        .with_relation(v, crate::polytopes::PairRelation::Orthogonal)
                        .iter()
                        .collect();
                    want.insert(v);
                    let want_cells: BTreeSet<usize> = cell600
                        .cells_containing(v)
                        .iter()
                        .map(|&c| self.cell_point(cell600.duad(c)))
                        .collect();
                    ensure(
                        verts == want && cells == want_cells,
                        "vertex plane is 1 + 15 + 5",
                        || format!("pair {v}"),
                    )?;
                }
                PointTag::Cell(d) => {
                    let c = cell600.cells24()[cell600.cell_at(d)];
                    let want: BTreeSet<usize> = c.iter().collect();
                    let want_cells: BTreeSet<usize> = (0..25)
                        .filter(|&o| c.is_disjoint(cell600.cells24()[o]) || cell600.cell_at(d) == o)
                        .map(|o| self.cell_point(cell600.duad(o)))
                        .collect();
                    ensure(
                        verts == want && cells == want_cells,
                        "cell plane is 1 + 8 + 12",
                        || format!("{d}"),
                    )?;
                }
            }
            planes.push(F4Plane {
                pole: i,
                space,
                points,
            });
        }
        Ok(planes)
    }

    pub fn planes(&self) -> &[F4Plane] {
        &self.planes
    }

    /// `B(Φ̄x, y) = B(x, Φ̄y)` for all pairs.
    pub fn phibar_is_self_adjoint(&self) -> bool {
        F2Vec::all()
            .all(|x| F2Vec::all().all(|y| self.b(self.phibar(x), y) == self.b(x, self.phibar(y))))
    }

    /// `B(Φ̄x, Φ̄y) = B(x, y)` for all pairs.
    pub fn phibar_is_isometry(&self) -> bool {
        F2Vec::all()
            .all(|x| F2Vec::all().all(|y| self.b(self.phibar(x), self.phibar(y)) == self.b(x, y)))
    }

    pub fn is_phi_closed(&self, s: &F2Set) -> bool {
        s.iter().all(|x| s.contains(self.phibar(x)))
    }

    pub fn f4_subspace(&self, s: F2Set) -> Option<F4Subspace> {
        let d = s.dim();
        (s.len().is_power_of_two() && d.is_multiple_of(2) && self.is_phi_closed(&s)).then_some(F4Subspace {
            space: s,
            f4dim: d / 2,
        })
    }

    /// Scalar action of F4 with ω acting as Φ̄.
    pub fn scale(&self, l: F4, x: F2Vec) -> F2Vec {
        match l.0 {
            0 => F2Vec(0),
            1 => x,
            2 => self.phibar(x),
            _ => self.phibar(self.phibar(x)),
        }
    }

    /// `Q(v) + ωQ(ωv) + ω̄Q(ω̄v)`.
    pub fn q_omega(&self, x: F2Vec) -> F4 {
        let mut out = F4(self.q(x));
        if self.q(self.scale(F4::OMEGA, x)) == 1 {
            out = out.add(F4::OMEGA);
        }
        if self.q(self.scale(F4::OMEGA_BAR, x)) == 1 {
            out = out.add(F4::OMEGA_BAR);
        }
        out
    }

    pub fn b_omega(&self, x: F2Vec, y: F2Vec) -> F4 {
        self.q_omega(x.add(y))
            .add(self.q_omega(x))
            .add(self.q_omega(y))
    }

    /// Integer matrix of a symmetry on lattice coordinates (column `j` is the image of `bⱼ`).
    pub fn symmetry_matrix(&self, op: &SymOp) -> Result<[[i64; 8]; 8]> {
        let map = *self.lattice.map();
        let mut m = [[0i64; 8]; 8];
        for (j, b) in self.lattice.basis().iter().enumerate() {
            let g = map.unsplit_golden(b)?;
            let ints = g
                .iter()
                .map(|c| c.to_golden_int())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| invariant("lattice preimage", "non-integral"))?;
            let x = IcosianVec([ints[0], ints[1], ints[2], ints[3]]);
            let y = op
                .apply(&x)
                .ok_or_else(|| invariant("symmetry on E8", "non-integral image"))?;
            let c = self
                .lattice
                .coords_of(&map.split_golden(&golden_coords(&y))?)
                .ok_or_else(|| invariant("symmetry on E8", "image outside the lattice"))?;
            for i in 0..8 {
                m[i][j] = c[i];
            }
        }
        Ok(m)
    }
}

fn mat_mul(a: &[[i64; 8]; 8], b: &[[i64; 8]; 8]) -> [[i64; 8]; 8] {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..8).map(|k| a[i][k] * b[k][j]).sum()))
}

/// True when the symmetry commutes with Φ over the integers (hence with Φ̄ mod 2).
pub fn commutes_with_phi(mod2: &Mod2, op: &SymOp) -> Result<bool> {
    let g = mod2.symmetry_matrix(op)?;
    Ok(mat_mul(&g, &mod2.phi.matrix) == mat_mul(&mod2.phi.matrix, &g))
}

/// All totally singular F2 4-spaces, by depth-first extension.
pub fn isotropic_4spaces(mod2: &Mod2) -> Vec<F2Set> {
    let iso = mod2.isotropic();
    let mut level: BTreeSet<(F2Set, Vec<F2Vec>)> = BTreeSet::new();
    level.insert((F2Set::from_iter([F2Vec(0)]), Vec::new()));
    for _ in 0..4 {
        let next: BTreeMap<F2Set, Vec<F2Vec>> = level
            .par_iter()
            .flat_map_iter(|(space, gens)| {
                iso.iter()
                    .filter(|&&v| !space.contains(v) && gens.iter().all(|&g| mod2.b(g, v) == 0))
                    .map(|&v| {
                        let mut g = gens.clone();
                        g.push(v);
                        (F2Set::span(g.iter().copied()), g)
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    level.into_iter().map(|(s, _)| s).collect()
}

/// Intersection dimension of two subspaces.
pub fn meet_dim(a: &F2Set, b: &F2Set) -> u32 {
    a.intersect(b).dim()
}

/// Structure of the 4-spaces disjoint from both members of a disjoint pair.
#[derive(Clone, Debug)]
pub struct Completions {
    pub common: Vec<usize>,
    /// Sizes of the maximal mutually disjoint sets containing the pair.
    pub maximal_sizes: BTreeSet<usize>,
    pub maximal: Vec<Vec<usize>>,
    /// Stars of the triangular-graph structure, if the disjointness graph is T(8).
    pub letters: Option<Vec<[usize; 2]>>,
}

pub fn pentad_completions(spaces: &[F2Set], v1: usize, v2: usize) -> Completions {
    let disjoint = |a: usize, b: usize| meet_dim(&spaces[a], &spaces[b]) == 0;
    let common: Vec<usize> = (0..spaces.len())
        .filter(|&w| w != v1 && w != v2 && disjoint(w, v1) && disjoint(w, v2))
        .collect();
    let n = common.len();
    let adj: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && disjoint(common[i], common[j]))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut cliques = Vec::new();
    bron_kerbosch(
        &adj,
        0,
        if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        0,
        &mut cliques,
    );
    let maximal: Vec<Vec<usize>> = cliques
        .iter()
        .map(|&c| {
            let mut set = vec![v1, v2];
            set.extend((0..n).filter(|&i| c >> i & 1 == 1).map(|i| common[i]));
            set
        })
        .collect();
    let maximal_sizes = maximal.iter().map(Vec::len).collect();
    // T(8): eight 7-cliques, each vertex in exactly two, adjacency = sharing one
    let stars: Vec<u64> = cliques
        .iter()
        .copied()
        .filter(|c| c.count_ones() == 7)
        .collect();
    let letters = (stars.len() == 8)
        .then(|| {
            (0..n)
                .map(|i| {
                    let s: Vec<usize> = (0..8).filter(|&k| stars[k] >> i & 1 == 1).collect();
                    (s.len() == 2).then(|| [s[0], s[1]])
                })
                .collect::<Option<Vec<[usize; 2]>>>()
        })
        .flatten()
        .filter(|l| {
            let distinct: HashSet<_> = l.iter().collect();
            distinct.len() == n
                && (0..n).all(|i| {
                    (0..n).all(|j| {
                        i == j
                            || ((adj[i] >> j & 1 == 1) == (l[i].iter().any(|x| l[j].contains(x))))
                    })
                })
        });
    Completions {
        common,
        maximal_sizes,
        maximal,
        letters,
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Splits the 4-spaces by intersection parity with the first one; `None` if the parity relation is inconsistent.
pub fn parity_classes(spaces: &[F2Set]) -> Option<Vec<bool>> {
    let class: Vec<bool> = spaces
        .iter()
        .map(|s| meet_dim(&spaces[0], s).is_multiple_of(2))
        .collect();
    let consistent = (0..spaces.len()).into_par_iter().all(|a| {
        (0..spaces.len())
            .all(|b| meet_dim(&spaces[a], &spaces[b]).is_multiple_of(2) == (class[a] == class[b]))
    });
    consistent.then_some(class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::standard_e8;
    use crate::icosian::Icosians;
    use crate::symmetry::{reflection, SymOp};
    use std::sync::OnceLock;

    struct World {
        cell600: Cell600,
        mod2: Mod2,
        spaces: Vec<F2Set>,
    }

    fn world() -> &'static World {
        static W: OnceLock<World> = OnceLock::new();
        W.get_or_init(|| {
            let cell600 = Cell600::build(Icosians::new().unwrap()).unwrap();
            let (e8, _, _) = standard_e8(cell600.icosians()).unwrap();
            let mod2 = Mod2::build(&e8, &cell600).unwrap();
            let spaces = isotropic_4spaces(&mod2);
            World {
                cell600,
                mod2,
                spaces,
            }
        })
    }

    fn schoute_space(w: &World, s: u8) -> usize {
        let line = w
            .mod2
            .lines()
            .iter()
            .find(|l| l.kind == LineKind::Schoute(s))
            .unwrap();
        w.spaces.iter().position(|x| *x == line.space).unwrap()
    }

    #[test]
    fn f4_arithmetic() {
        assert_eq!(F4::OMEGA.mul(F4::OMEGA), F4::OMEGA_BAR);
        assert_eq!(F4::OMEGA.mul(F4::OMEGA_BAR), F4::ONE);
        assert_eq!(F4::OMEGA_BAR.mul(F4::OMEGA_BAR), F4::OMEGA);
        for a in F4::ALL {
            assert_eq!(a.mul(F4::ONE), a);
            for b in F4::ALL {
                assert_eq!(a.mul(b), b.mul(a));
                for c in F4::ALL {
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
        assert_eq!(F4::ALL.map(F4::trace), [0, 0, 1, 1]);
    }

    #[test]
    fn quotient_census() {
        let m = &world().mod2;
        assert_eq!(m.q_census(), (1, 135, 120));
        assert!(F2Vec::all().all(|x| m.b(x, x) == 0));
        for x in F2Vec::all() {
            for y in F2Vec::all() {
                assert_eq!(m.q(x.add(y)) ^ m.q(x) ^ m.q(y), m.b(x, y));
            }
        }
    }

    #[test]
    fn phi_relations() {
        let m = &world().mod2;
        assert_eq!(m.phi().square_minus_self_minus_one(), [[0; 8]; 8]);
        for x in F2Vec::all() {
            assert_eq!(m.phibar(m.phibar(m.phibar(x))), x);
            for y in F2Vec::all() {
                assert_eq!(m.b(m.phibar(x), y), m.b(x, m.phibar(y)));
            }
        }
        assert!(m.phibar_is_self_adjoint());
        assert!(!m.phibar_is_isometry());
        for v in 0..120 {
            let x = m.vertex_class(v);
            assert_eq!(m.q(x), 1);
            assert_eq!(m.q(x.add(m.phibar(x))), 0);
        }
    }

    #[test]
    fn points() {
        let m = &world().mod2;
        assert_eq!(m.points().len(), 85);
        for (i, p) in m.points().iter().enumerate() {
            let qs = p.vectors.map(|v| m.q(v));
            match p.tag {
                PointTag::Vertex(v) => {
                    assert_eq!(i, v);
                    assert_eq!(qs, [1, 1, 0]);
                }
                PointTag::Cell(d) => {
                    assert_eq!(i, m.cell_point(d));
                    assert_eq!(qs, [0, 0, 0]);
                }
            }
            assert!(m.f4_subspace(p.span()).map(|s| s.f4dim) == Some(1));
        }
        let cell_vectors: HashSet<F2Vec> =
            m.points()[60..].iter().flat_map(|p| p.vectors).collect();
        assert_eq!(cell_vectors.len(), 75);
    }

    #[test]
    fn lines() {
        let w = world();
        let m = &w.mod2;
        let census: Vec<(&str, usize)> = m.line_census().into_iter().collect();
        assert_eq!(
            census,
            vec![
                ("16-cell", 75),
                ("decagon", 72),
                ("hexagon", 200),
                ("schoute", 10)
            ]
        );
        for l in m.lines() {
            assert_eq!(m.f4_subspace(l.space).map(|s| s.f4dim), Some(2));
        }
        let decagons: HashSet<usize> = m
            .lines()
            .iter()
            .filter_map(|l| {
                if let LineKind::Decagon(d) = l.kind {
                    Some(d)
                } else {
                    None
                }
            })
            .collect();
        assert_eq!(decagons.len(), 72);
    }

    #[test]
    fn planes() {
        let m = &world().mod2;
        assert_eq!(m.planes().len(), 85);
        for p in m.planes() {
            assert_eq!(m.f4_subspace(p.space).map(|s| s.f4dim), Some(3));
            let lines_inside = m
                .lines()
                .iter()
                .filter(|l| l.space.is_subset(&p.space))
                .count();
            assert_eq!(lines_inside, 21);
        }
    }

    #[test]
    fn q_omega_values() {
        let w = world();
        let m = &w.mod2;
        for v in 0..120 {
            assert_eq!(m.q_omega(m.vertex_class(v)), F4::OMEGA_BAR);
            assert_eq!(m.q_omega(m.phi_vertex_class(v)), F4::OMEGA);
        }
        for p in m.points() {
            match p.tag {
                PointTag::Vertex(_) => assert_eq!(m.q_omega(p.vectors[2]), F4::ONE),
                PointTag::Cell(_) => assert!(p.vectors.iter().all(|&x| m.q_omega(x) == F4::ZERO)),
            }
        }
        for x in F2Vec::all() {
            assert_eq!(m.q_omega(x).trace(), m.q(x));
            for l in F4::ALL {
                assert_eq!(m.q_omega(m.scale(l, x)), l.mul(l).mul(m.q_omega(x)));
            }
        }
        for x in F2Vec::all() {
            for y in F2Vec::all() {
                let bxy = m.b_omega(x, y);
                for l in F4::ALL {
                    assert_eq!(m.b_omega(m.scale(l, x), y), l.mul(bxy));
                }
                assert_eq!(m.b_omega(m.phibar(x), m.phibar(y)), F4::OMEGA_BAR.mul(bxy));
            }
        }
        for x in F2Vec::all().step_by(3) {
            for x2 in F2Vec::all().step_by(5) {
                for y in F2Vec::all() {
                    assert_eq!(
                        m.b_omega(x.add(x2), y),
                        m.b_omega(x, y).add(m.b_omega(x2, y))
                    );
                }
            }
        }
    }

    #[test]
    fn totally_singular_four_spaces() {
        let w = world();
        assert_eq!(w.spaces.len(), 270);
        assert!(w
            .spaces
            .iter()
            .all(|s| s.len() == 16 && s.iter().all(|x| w.mod2.q(x) == 0)));
        let rows: Vec<usize> = (1..=5).map(|s| schoute_space(w, s)).collect();
        let cols: Vec<usize> = (6..=10).map(|s| schoute_space(w, s)).collect();
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                let meet = w.spaces[r].intersect(&w.spaces[c]);
                let p = w.mod2.cell_point(Duad::from_position(i, j));
                assert_eq!(meet, w.mod2.points()[p].span());
            }
        }
        let cover = |ids: &[usize]| -> HashSet<F2Vec> {
            ids.iter()
                .flat_map(|&i| {
                    w.spaces[i]
                        .iter()
                        .filter(|x| !x.is_zero())
                        .collect::<Vec<_>>()
                })
                .collect()
        };
        assert_eq!(cover(&rows).len(), 75);
        assert_eq!(cover(&rows), cover(&cols));
    }

    #[test]
    fn completions_of_a_disjoint_pair() {
        let w = world();
        let (v1, v2) = (schoute_space(w, 1), schoute_space(w, 2));
        assert_eq!(meet_dim(&w.spaces[v1], &w.spaces[v2]), 0);
        let c = pentad_completions(&w.spaces, v1, v2);
        assert_eq!(c.common.len(), 28);
        assert_eq!(c.maximal_sizes, [5, 9].into_iter().collect());
        assert!(c.letters.is_some());

        let class = parity_classes(&w.spaces).unwrap();
        assert_eq!(class.iter().filter(|&&b| b).count(), 135);
        let same: Vec<usize> = (0..270).filter(|&i| class[i] == class[v1]).collect();
        for &a in &same {
            for &b in &same {
                assert!([0, 2, 4].contains(&meet_dim(&w.spaces[a], &w.spaces[b])));
            }
        }
        for nine in c.maximal.iter().filter(|m| m.len() == 9) {
            let covered: HashSet<F2Vec> = nine.iter().flat_map(|&i| w.spaces[i].iter()).collect();
            assert_eq!(covered.len(), 136);
            for &o in same.iter().filter(|o| !nine.contains(o)) {
                let meets = nine
                    .iter()
                    .filter(|&&i| meet_dim(&w.spaces[i], &w.spaces[o]) > 0)
                    .count();
                assert_eq!(meets, 5);
            }
            let tetrad = &nine[..4];
            let through: Vec<usize> = same
                .iter()
                .copied()
                .filter(|o| !nine.contains(o))
                .filter(|&o| {
                    tetrad
                        .iter()
                        .all(|&t| meet_dim(&w.spaces[t], &w.spaces[o]) > 0)
                })
                .collect();
            assert_eq!(through.len(), 5);
            for &a in &through {
                for &b in &through {
                    assert!(a == b || meet_dim(&w.spaces[a], &w.spaces[b]) == 0);
                }
            }
        }
    }

    #[test]
    fn symmetries_commute_with_phi() {
        let w = world();
        let ico = w.cell600.icosians();
        let g = w.cell600.order5();
        let ops = [
            SymOp::left(ico, g),
            SymOp::right(ico, g),
            SymOp::left(ico, 7),
            reflection(ico, 0),
        ];
        for op in &ops {
            assert!(commutes_with_phi(&w.mod2, op).unwrap());
        }
    }
}
