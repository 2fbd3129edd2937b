//! The symmetry group of the 600-cell and its action on Schoute's partitions.
//!
//! An operation is stored by the images of the four coordinate vertices
//! `2e₀..2e₃`, i.e. as twice its matrix, which is always integral over Z[φ].

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{ensure, invariant, Error, Result};
use crate::golden::{GoldenInt, GoldenRational};
use crate::icosian::{IcosianVec, Icosians};
use crate::polytopes::{Cell600, PairSet, VertexLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn combine(self, o: Parity) -> Parity {
        if self == o {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn basis_vertex(i: usize) -> IcosianVec {
    let mut c = [0; 4];
    c[i] = 2;
    IcosianVec::from_ints(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymOp {
    cols: [IcosianVec; 4],
    parity: Parity,
    perm: Vec<u8>,
}

impl SymOp {
    /// Builds the operation from a linear map known on vertices.
    pub fn from_map(
        icosians: &Icosians,
        f: impl Fn(&IcosianVec) -> Option<IcosianVec>,
    ) -> Result<Self> {
        let perm = icosians
            .vertices()
            .iter()
            .map(|v| f(v).and_then(|w| icosians.index_of(&w)).map(|i| i as u8))
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| Error::NotInGroup("map does not preserve the vertex set".into()))?;
        let cols: [IcosianVec; 4] = std::array::from_fn(|i| {
            icosians.vertex(perm[icosians.index_of(&basis_vertex(i)).unwrap()] as usize)
        });
        let parity = match det4(&cols) {
            d if d == GoldenInt::int(16) => Parity::Even,
            d if d == GoldenInt::int(-16) => Parity::Odd,
            d => return Err(invariant("symmetry determinant", format!("det(2M) = {d}"))),
        };
        let op = SymOp { cols, parity, perm };
        ensure(
            op.preserves_inner_product(),
            "symmetry is orthogonal",
            String::new,
        )?;
        Ok(op)
    }

    pub fn identity(icosians: &Icosians) -> Self {
        SymOp::from_map(icosians, |x| Some(*x)).expect("identity")
    }

    pub fn negation(icosians: &Icosians) -> Self {
        SymOp::from_map(icosians, |x| Some(-*x)).expect("negation")
    }

    /// `x ↦ a·x` at standard scale.
    pub fn left(icosians: &Icosians, a: usize) -> Self {
        let a = icosians.vertex(a);
        SymOp::from_map(icosians, |x| a.mul_half(x)).expect("left multiplication")
    }

    /// `x ↦ x·a` at standard scale.
    pub fn right(icosians: &Icosians, a: usize) -> Self {
        let a = icosians.vertex(a);
        SymOp::from_map(icosians, |x| x.mul_half(&a)).expect("right multiplication")
    }

    /// Twice the matrix; column `j` is the image of `2eⱼ`.
    pub fn numerator(&self) -> [[GoldenInt; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.cols[j].0[i]))
    }

    pub fn matrix(&self) -> [[GoldenRational; 4]; 4] {
        self.numerator()
            .map(|row| row.map(|x| GoldenRational::new(x, 2)))
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_rotation(&self) -> bool {
        self.parity == Parity::Even
    }

    /// Image of an arbitrary vector, if it stays integral.
    pub fn apply(&self, x: &IcosianVec) -> Option<IcosianVec> {
        let sum = (0..4).fold(IcosianVec::default(), |acc, j| {
            acc + self.cols[j].scale(x.0[j])
        });
        sum.div_int_exact(2)
    }

    pub fn image(&self, v: usize) -> usize {
        self.perm[v] as usize
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SymOp) -> SymOp {
        let cols = other
            .cols
            .map(|c| self.apply(&c).expect("vertex images are integral"));
        let perm = other.perm.iter().map(|&i| self.perm[i as usize]).collect();
        SymOp {
            cols,
            parity: self.parity.combine(other.parity),
            perm,
        }
    }

    pub fn preserves_inner_product(&self) -> bool {
        (0..4).all(|i| {
            (0..4).all(|j| {
                self.cols[i].dot(&self.cols[j]) == GoldenInt::int(if i == j { 4 } else { 0 })
            })
        })
    }

    pub fn pair_image(&self, cell600: &Cell600, pair: usize) -> usize {
        let pt = cell600.pairs();
        pt.pair_of[self.image(pt.reps[pair])]
    }

    pub fn pair_set_image(&self, cell600: &Cell600, set: PairSet) -> PairSet {
        PairSet::from_iter(set.iter().map(|p| self.pair_image(cell600, p)))
    }
}

fn det3(m: [[GoldenInt; 3]; 3]) -> GoldenInt {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(cols: &[IcosianVec; 4]) -> GoldenInt {
    let m: [[GoldenInt; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i]));
    (0..4)
        .map(|k| {
            let minor: [[GoldenInt; 3]; 3] = std::array::from_fn(|r| {
                std::array::from_fn(|c| m[r + 1][if c < k { c } else { c + 1 }])
            });
            let term = m[0][k] * det3(minor);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `x ↦ x − 2(x·v)/(v·v)·v`.
pub fn reflection(icosians: &Icosians, v: usize) -> SymOp {
    let v = icosians.vertex(v);
    let vv = v.norm();
    SymOp::from_map(icosians, |x| {
        let k = (x.dot(&v) * 2).div_exact(vv)?;
        Some(*x - v.scale(k))
    })
    .expect("reflection in a vertex")
}

/// A permutation of the ten symbols `1..=10` (10 is X).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TenPerm {
    pub map: [u8; 10],
}

impl TenPerm {
    pub fn identity() -> Self {
        TenPerm {
            map: std::array::from_fn(|i| i as u8 + 1),
        }
    }

    pub fn apply(&self, s: u8) -> u8 {
        self.map[s as usize - 1]
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &TenPerm) -> TenPerm {
        TenPerm {
            map: other.map.map(|s| self.apply(s)),
        }
    }

    /// Product of the five transpositions of a vertex label.
    pub fn from_label(label: &VertexLabel) -> Self {
        let mut p = TenPerm::identity();
        for d in label.duads() {
            p.map[d.row as usize - 1] = d.col;
            p.map[d.col as usize - 1] = d.row;
        }
        p
    }

    pub fn preserves_pentads(&self) -> bool {
        (1..=5).all(|s| self.apply(s) <= 5)
    }

    pub fn swaps_pentads(&self) -> bool {
        (1..=5).all(|s| self.apply(s) > 5)
    }

    /// Parity of the restriction to `{1..5}` and to `{6..X}`, if the pentads are preserved.
    pub fn pentad_parities(&self) -> Option<(Parity, Parity)> {
        if !self.preserves_pentads() {
            return None;
        }
        let parity = |r: std::ops::RangeInclusive<u8>| {
            let img: Vec<u8> = r.map(|s| self.apply(s)).collect();
            let inv = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&(i, j)| img[i] > img[j])
                .count();
            if inv % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            }
        };
        Some((parity(1..=5), parity(6..=10)))
    }
}

impl fmt::Display for TenPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 10];
        let mut any = false;
        for s in 1..=10u8 {
            if seen[s as usize - 1] || self.apply(s) == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            loop {
                seen[x as usize - 1] = true;
                write!(f, "{}", crate::polytopes::symbol(x))?;
                x = self.apply(x);
                if x == s {
                    break;
                }
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The full group together with the data needed for partition and cell actions.
#[derive(Clone, Debug)]
pub struct Symmetry {
    elements: Vec<SymOp>,
    index: HashMap<[IcosianVec; 4], usize>,
    generators: Vec<usize>,
    partition_symbol: HashMap<[usize; 5], u8>,
    cell_index: HashMap<PairSet, usize>,
}

pub const GROUP_ORDER: usize = 14_400;

impl Symmetry {
    /// Closure of left and right multiplications by a generating pair of 2A5 and one reflection.
    pub fn generate(cell600: &Cell600) -> Result<Self> {
        let ico = cell600.icosians();
        let g = cell600.order5();
        let t = (0..ico.len())
            .find(|&t| ico.generated(&[g, t]).len() == ico.len())
            .ok_or_else(|| invariant("2A5 generating pair", "none found"))?;
        let gens = [
            SymOp::left(ico, g),
            SymOp::left(ico, t),
            SymOp::right(ico, g),
            SymOp::right(ico, t),
            reflection(ico, ico.identity()),
        ];
        let id = SymOp::identity(ico);
        let mut index = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id.cols, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = s.compose(&elements[x]);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y.cols) {
                    if elements.len() == GROUP_ORDER {
                        return Err(invariant("group order", "closure exceeds 14400"));
                    }
                    e.insert(elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let generators = gens.iter().map(|s| index[&s.cols]).collect();
        let partition_symbol = (1..=10u8)
            .map(|s| (cell600.schoute_partition(s), s))
            .collect();
        let cell_index = cell600
            .cells24()
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, i))
            .collect();
        Ok(Symmetry {
            elements,
            index,
            generators,
            partition_symbol,
            cell_index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SymOp] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SymOp {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, op: &SymOp) -> Option<usize> {
        self.index.get(&op.cols).copied()
    }

    pub fn rotations(&self) -> usize {
        self.elements.iter().filter(|e| e.is_rotation()).count()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        let gens: Vec<&SymOp> = self.generators.iter().map(|&g| &self.elements[g]).collect();
        (0..self.order())
            .into_par_iter()
            .filter(|&i| {
                let x = &self.elements[i];
                gens.iter().all(|g| g.compose(x).perm == x.compose(g).perm)
            })
            .collect()
    }

    pub fn cell_image(&self, cell600: &Cell600, op: &SymOp, cell: usize) -> Result<usize> {
        let img = op.pair_set_image(cell600, cell600.cells24()[cell]);
        self.cell_index.get(&img).copied().ok_or_else(|| {
            invariant(
                "symmetries permute 24-cells",
                format!("image of cell {cell}"),
            )
        })
    }

    pub fn action_on_partitions(&self, cell600: &Cell600, op: &SymOp) -> Result<TenPerm> {
        let mut map = [0u8; 10];
        for s in 1..=10u8 {
            let mut img = cell600
                .schoute_partition(s)
                .map(|c| self.cell_image(cell600, op, c))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            img.sort_unstable();
            let key = [img[0], img[1], img[2], img[3], img[4]];
            map[s as usize - 1] = *self.partition_symbol.get(&key).ok_or_else(|| {
                invariant("symmetries permute partitions", format!("image of {s}"))
            })?;
        }
        Ok(TenPerm { map })
    }

    /// Action of every element, in element order.
    pub fn partition_actions(&self, cell600: &Cell600) -> Result<Vec<TenPerm>> {
        self.elements
            .par_iter()
            .map(|op| self.action_on_partitions(cell600, op))
            .collect()
    }

    pub fn vertex_stabilizer(&self, v: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].image(v) == v)
            .collect()
    }

    pub fn cell_stabilizer(&self, cell600: &Cell600, cell: usize) -> Result<Vec<usize>> {
        let target = cell600.cells24()[cell];
        Ok((0..self.order())
            .filter(|&i| self.elements[i].pair_set_image(cell600, target) == target)
            .collect())
    }

    /// `(|Stab(v)|, |Stab(C)|)` for `v = 1` and `C = 2A4`.
    pub fn stabilizer_orders(&self, cell600: &Cell600) -> Result<(usize, usize)> {
        let one = cell600.icosians().identity();
        let cell = self.cell_containing_identity(cell600);
        Ok((
            self.vertex_stabilizer(one).len(),
            self.cell_stabilizer(cell600, cell)?.len(),
        ))
    }

    pub fn cell_containing_identity(&self, cell600: &Cell600) -> usize {
        let one = cell600.pairs().pair_of[cell600.icosians().identity()];
        let t = cell600
            .pairs()
            .pairs_of(crate::polytopes::VertexSet::from_iter(
                cell600.icosians().binary_tetrahedral(),
            ));
        debug_assert!(t.contains(one));
        self.cell_index[&t]
    }

    /// Orbit sizes (sorted) of a subset of elements acting on the 60 pairs.
    pub fn pair_orbits(&self, cell600: &Cell600, subgroup: &[usize]) -> Vec<Vec<usize>> {
        orbits(60, |p| {
            subgroup
                .iter()
                .map(move |&g| self.elements[g].pair_image(cell600, p))
        })
    }

    pub fn cell_orbits(&self, cell600: &Cell600, subgroup: &[usize]) -> Result<Vec<Vec<usize>>> {
        let images = (0..25)
            .map(|c| {
                subgroup
                    .iter()
                    .map(|&g| self.cell_image(cell600, &self.elements[g], c))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Ok(orbits(25, |c| images[c].iter().copied()))
    }

    /// Checks that every element permutes the given families of pair sets.
    pub fn permutes_families(&self, cell600: &Cell600, families: &[&[PairSet]]) -> bool {
        let sets: Vec<std::collections::HashSet<PairSet>> = families
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();
        self.elements.par_iter().all(|op| {
            families.iter().zip(&sets).all(|(f, s)| {
                f.iter()
                    .all(|x| s.contains(&op.pair_set_image(cell600, *x)))
            })
        })
    }
}

impl Symmetry {
    /// Homomorphism check on `gen ∘ x` for every generator and every element.
    pub fn action_is_homomorphism(&self, actions: &[TenPerm]) -> bool {
        self.generators.par_iter().all(|&g| {
            let sg = &self.elements[g];
            (0..self.order()).all(|x| {
                let y = self.index[&sg.compose(&self.elements[x]).cols];
                actions[y] == actions[g].compose(&actions[x])
            })
        })
    }
}

/// Orbits of `0..n` under images given by `step`, sorted by size then least element.
pub fn orbits<F, I>(n: usize, step: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut k = 0;
        while k < orbit.len() {
            for y in step(orbit[k]) {
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort_by_key(|o| (o.len(), o[0]));
    out
}

/// Pair-orbit sizes of a vertex stabilizer keyed by `|⟨v, ·⟩|`.
pub fn orbit_signature(
    cell600: &Cell600,
    v: usize,
    orbits: &[Vec<usize>],
) -> BTreeMap<GoldenInt, Vec<usize>> {
    let verts = cell600.icosians().vertices();
    let mut out: BTreeMap<GoldenInt, Vec<usize>> = BTreeMap::new();
    for o in orbits {
        let rep = cell600.pairs().reps[o[0]];
        let ip = crate::polytopes::paper_inner_product(&verts[v], &verts[rep]).abs();
        out.entry(ip).or_default().push(o.len());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::Duad;
    use proptest::prelude::*;
    use std::sync::OnceLock;

    struct World {
        cell600: Cell600,
        sym: Symmetry,
        actions: Vec<TenPerm>,
    }

    fn world() -> &'static World {
        static W: OnceLock<World> = OnceLock::new();
        W.get_or_init(|| {
            let cell600 = Cell600::build(Icosians::new().unwrap()).unwrap();
            let sym = Symmetry::generate(&cell600).unwrap();
            let actions = sym.partition_actions(&cell600).unwrap();
            World {
                cell600,
                sym,
                actions,
            }
        })
    }

    #[test]
    fn reflection_basics() {
        let w = world();
        let ico = w.cell600.icosians();
        for v in 0..ico.len() {
            let r = reflection(ico, v);
            assert_eq!(r.image(v), ico.neg(v));
            assert_eq!(r.parity(), Parity::Odd);
            assert_eq!(r.compose(&r), SymOp::identity(ico));
            let label = w.cell600.label(w.cell600.pairs().pair_of[v]);
            assert_eq!(
                w.sym.action_on_partitions(&w.cell600, &r).unwrap(),
                TenPerm::from_label(&label)
            );
        }
    }

    #[test]
    fn group_orders_and_center() {
        let w = world();
        assert_eq!(w.sym.order(), 14_400);
        assert_eq!(w.sym.rotations(), 7_200);
        let ico = w.cell600.icosians();
        let center: Vec<&SymOp> = w.sym.center().iter().map(|&i| w.sym.element(i)).collect();
        assert_eq!(center.len(), 2);
        assert!(center.contains(&&SymOp::identity(ico)));
        assert!(center.contains(&&SymOp::negation(ico)));
        assert!(w.sym.elements().iter().all(|e| e.preserves_inner_product()));
    }

    #[test]
    fn matrix_matches_permutation() {
        let w = world();
        let ico = w.cell600.icosians();
        for op in w.sym.elements().iter().step_by(37) {
            for (i, v) in ico.vertices().iter().enumerate() {
                assert_eq!(op.apply(v).unwrap(), ico.vertex(op.image(i)));
            }
            let m = op.matrix();
            let det_den = m.iter().flatten().map(|x| x.denom()).max().unwrap();
            assert!(det_den <= 2);
        }
    }

    #[test]
    fn multiplications_act_on_rows_and_columns() {
        let w = world();
        let ico = w.cell600.icosians();
        for v in 0..ico.len() {
            let label = w.cell600.label(w.cell600.pairs().pair_of[v]);
            let right = w
                .sym
                .action_on_partitions(&w.cell600, &SymOp::right(ico, v))
                .unwrap();
            for k in 0..5 {
                assert_eq!(right.apply(k as u8 + 6), label.cols[k]);
                assert_eq!(right.apply(k as u8 + 1), k as u8 + 1);
            }
            let left = w
                .sym
                .action_on_partitions(&w.cell600, &SymOp::left(ico, v))
                .unwrap();
            for d in label.duads() {
                assert_eq!(left.apply(d.col - 5), d.row);
                assert_eq!(left.apply(d.col), d.col);
            }
            assert_eq!(right.pentad_parities(), Some((Parity::Even, Parity::Even)));
            assert_eq!(left.pentad_parities(), Some((Parity::Even, Parity::Even)));
        }
    }

    #[test]
    fn partition_action_kernel_and_image() {
        let w = world();
        let id = TenPerm::identity();
        let kernel: Vec<usize> = (0..w.sym.order()).filter(|&i| w.actions[i] == id).collect();
        let ico = w.cell600.icosians();
        let kernel_ops: Vec<&SymOp> = kernel.iter().map(|&i| w.sym.element(i)).collect();
        assert_eq!(kernel_ops.len(), 2);
        assert!(kernel_ops.contains(&&SymOp::identity(ico)));
        assert!(kernel_ops.contains(&&SymOp::negation(ico)));
        let image: std::collections::HashSet<_> = w.actions.iter().collect();
        assert_eq!(image.len(), 7_200);
        for (op, a) in w.sym.elements().iter().zip(&w.actions) {
            if op.is_rotation() {
                assert_eq!(a.pentad_parities(), Some((Parity::Even, Parity::Even)));
            } else {
                assert!(a.swaps_pentads());
            }
        }
        assert!(w.sym.action_is_homomorphism(&w.actions));
    }

    #[test]
    fn symmetries_permute_structures() {
        let w = world();
        let c = &w.cell600;
        assert!(w.sym.permutes_families(
            c,
            &[c.cells24(), c.sixteen_cells(), c.hexagons(), c.decagons()]
        ));
    }

    #[test]
    fn stabilizers() {
        let w = world();
        let c = &w.cell600;
        assert_eq!(w.sym.stabilizer_orders(c).unwrap(), (120, 576));
        let one = c.icosians().identity();
        let stab = w.sym.vertex_stabilizer(one);
        let sig = orbit_signature(c, one, &w.sym.pair_orbits(c, &stab));
        let g = GoldenInt::new;
        let expected: BTreeMap<GoldenInt, Vec<usize>> = [
            (g(2, 0), vec![1]),
            (g(0, 0), vec![15]),
            (g(1, 0), vec![20]),
            (g(0, 1), vec![12]),
            (g(-1, 1), vec![12]),
        ]
        .into_iter()
        .collect();
        assert_eq!(sig, expected);
        // −r_v fixes v and commutes with the whole stabilizer
        let ico = c.icosians();
        let mrv = SymOp::negation(ico).compose(&reflection(ico, one));
        assert_eq!(mrv.image(one), one);
        assert!(stab.iter().all(|&s| {
            let s = w.sym.element(s);
            s.compose(&mrv).perm() == mrv.compose(s).perm()
        }));

        let cell = w.sym.cell_containing_identity(c);
        assert_eq!(c.duad(cell), Duad::new(1, 6));
        let cstab = w.sym.cell_stabilizer(c, cell).unwrap();
        let sizes = |o: Vec<Vec<usize>>| o.iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(sizes(w.sym.cell_orbits(c, &cstab).unwrap()), vec![1, 8, 16]);
        assert_eq!(sizes(w.sym.pair_orbits(c, &cstab)), vec![12, 48]);
    }

    #[test]
    fn ten_perm_display() {
        let l: VertexLabel = "(16)(27)(38)(49)(5X)".parse().unwrap();
        assert_eq!(TenPerm::from_label(&l).to_string(), "(16)(27)(38)(49)(5X)");
        assert_eq!(TenPerm::identity().to_string(), "()");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn action_respects_composition(a in 0usize..14_400, b in 0usize..14_400) {
            let w = world();
            let ab = w.sym.element(a).compose(w.sym.element(b));
            let i = w.sym.index_of(&ab).unwrap();
            prop_assert_eq!(w.actions[i], w.actions[a].compose(&w.actions[b]));
            prop_assert_eq!(ab.parity(), w.sym.element(a).parity().combine(w.sym.element(b).parity()));
        }
    }
}
