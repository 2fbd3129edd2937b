use std::collections::{BTreeMap, BTreeSet, HashSet};

use anyhow::{anyhow, bail, Result};
use glob::Pattern;
use h4_core::embed::{
    certify_e8, decompose_norm4_shell, e8_map, e8_map_conjugate, embed_set, is_e8_even_unimodular,
    lattice_l, Source,
};
use h4_core::golden::{GoldenInt, Rational};
use h4_core::icosian::IcosianVec;
use h4_core::mod2::{
    commutes_with_phi, meet_dim, parity_classes, pentad_completions, F2Vec, LineKind, PointTag, F4,
};
use h4_core::polytopes::{
    count_orthogonal_pairs, inner_product_spectrum, prime_arrays, Cell120Label, Duad, PairRelation,
    PairSet, VertexLabel,
};
use h4_core::symmetry::{orbit_signature, reflection, Parity, SymOp, TenPerm};
use rayon::prelude::*;

use crate::context::Context;
use crate::report::{golden, Findings, Origin};

use Origin::{Derived, Published, Trivial};

type RunFn = fn(&Context, &mut Findings) -> Result<()>;

pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    pub run: RunFn,
}

/// All checks in dependency order: polytopes, symmetry, embeddings, mod 2.
pub fn registry() -> &'static [Check] {
    CHECKS
}

static CHECKS: &[Check] = &[
    Check {
        id: "facts/fact1",
        title: "600-cell census",
        run: fact1,
    },
    Check {
        id: "facts/fact2",
        title: "inscribed 24-, 16- and 8-cells",
        run: fact2,
    },
    Check {
        id: "facts/fact5",
        title: "Schoute's ten partitions",
        run: fact5,
    },
    Check {
        id: "facts/fact7",
        title: "duad labels of cells and vertex pairs",
        run: fact7,
    },
    Check {
        id: "facts/fact8",
        title: "vertices as the icosian group",
        run: fact8,
    },
    Check {
        id: "s2/cell120",
        title: "labels of the 120-cell",
        run: cell120,
    },
    Check {
        id: "s4/arrays",
        title: "arrays from Sylow normalizers",
        run: arrays,
    },
    Check {
        id: "s4/hexagons",
        title: "hexagons and the 10 x 10 array",
        run: hexagons,
    },
    Check {
        id: "s4/decagons",
        title: "decagons, pentagons and the 6 x 6 array",
        run: decagons,
    },
    Check {
        id: "facts/fact3",
        title: "symmetry group order",
        run: fact3,
    },
    Check {
        id: "facts/fact4",
        title: "vertex and 24-cell stabilizers",
        run: fact4,
    },
    Check {
        id: "facts/fact6",
        title: "action on the ten partitions",
        run: fact6,
    },
    Check {
        id: "facts/fact9",
        title: "H inside the E8 roots",
        run: fact9,
    },
    Check {
        id: "s6/example1",
        title: "E8 from H and phi H",
        run: example1,
    },
    Check {
        id: "s6/example2",
        title: "the lattice L of determinant 625",
        run: example2,
    },
    Check {
        id: "s6/example3",
        title: "the norm 4 shell of E8",
        run: example3,
    },
    Check {
        id: "facts/fact10",
        title: "85 points of the F4 space",
        run: fact10,
    },
    Check {
        id: "s7/phi",
        title: "the golden endomorphism of E8",
        run: phi,
    },
    Check {
        id: "s7/points",
        title: "points of E8/2E8 over F4",
        run: points,
    },
    Check {
        id: "s7/lines",
        title: "lines of E8/2E8 over F4",
        run: lines,
    },
    Check {
        id: "s7/planes",
        title: "planes of E8/2E8 over F4",
        run: planes,
    },
    Check {
        id: "s7/qomega",
        title: "the F4 quadratic form",
        run: qomega,
    },
    Check {
        id: "s5/pentads",
        title: "totally singular 4-spaces and pentads",
        run: pentads,
    },
];

/// Checks matching any of the glob patterns, in dependency order.
///
/// Every pattern must match at least one id.
pub fn select(patterns: &[String]) -> Result<Vec<&'static Check>> {
    if patterns.is_empty() {
        return Ok(CHECKS.iter().collect());
    }
    let compiled = patterns
        .iter()
        .map(|p| Pattern::new(p).map_err(|e| anyhow!("invalid selector {p:?}: {e}")))
        .collect::<Result<Vec<_>>>()?;
    for (p, pat) in patterns.iter().zip(&compiled) {
        if !CHECKS.iter().any(|c| pat.matches(c.id)) {
            bail!("unknown check id {p:?}");
        }
    }
    Ok(CHECKS
        .iter()
        .filter(|c| compiled.iter().any(|p| p.matches(c.id)))
        .collect())
}

fn fact1(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let s = c.skeleton();
    f.expect("vertices", Published, 120, c.icosians().len());
    f.expect("edges", Published, 720, s.edges.len());
    f.expect("triangles", Published, 1200, s.triangles.len());
    f.expect("tetrahedral cells", Published, 600, s.tetra_cells.len());
    Ok(())
}

fn unique_home(family: &[PairSet], cells: &[PairSet]) -> usize {
    family
        .iter()
        .filter(|s| cells.iter().filter(|c| s.is_subset(**c)).count() == 1)
        .count()
}

fn fact2(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    f.expect("24-cells", Published, 25, c.cells24().len());
    f.expect("16-cells", Published, 75, c.sixteen_cells().len());
    f.expect("8-cells", Published, 75, c.eight_cells().len());
    f.expect(
        "16-cells in a unique 24-cell",
        Published,
        75,
        unique_home(c.sixteen_cells(), c.cells24()),
    );
    f.expect(
        "8-cells in a unique 24-cell",
        Published,
        75,
        unique_home(c.eight_cells(), c.cells24()),
    );
    f.expect(
        "orthogonal vertex pairs",
        Published,
        450,
        count_orthogonal_pairs(c.pairs()),
    );
    let per_cell: BTreeSet<(usize, usize)> = c
        .cells24()
        .iter()
        .map(|cell| {
            (
                c.sixteen_cells()
                    .iter()
                    .filter(|s| s.is_subset(*cell))
                    .count(),
                c.eight_cells()
                    .iter()
                    .filter(|s| s.is_subset(*cell))
                    .count(),
            )
        })
        .collect();
    f.expect(
        "16-cells and 8-cells per 24-cell",
        Derived,
        [(3, 3)],
        per_cell,
    );
    Ok(())
}

fn fact5(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    f.expect(
        "partitions into five disjoint 24-cells",
        Published,
        10,
        c.partitions().len(),
    );
    let found: BTreeSet<[usize; 5]> = c.partitions().iter().copied().collect();
    let array: BTreeSet<[usize; 5]> = (1..=10).map(|s| c.schoute_partition(s)).collect();
    f.holds(
        "partitions are the rows and columns of the array",
        Published,
        found == array,
    );
    let ico = c.icosians();
    let p2: BTreeSet<PairSet> = prime_arrays(ico, 2)?
        .entries
        .iter()
        .flatten()
        .map(|e| c.pairs().pairs_of(*e))
        .collect();
    f.holds(
        "array cells are the cosets of the quaternion normalizer",
        Derived,
        p2 == c.cells24().iter().copied().collect(),
    );
    Ok(())
}

fn fact7(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let one = c.pairs().pair_of[c.icosians().identity()];
    f.expect(
        "label of 1",
        Published,
        "(16)(27)(38)(49)(5X)",
        c.label(one).to_string(),
    );
    let distinct: HashSet<&VertexLabel> = c.labels().iter().collect();
    f.expect("distinct vertex labels", Published, 60, distinct.len());
    f.expect(
        "even labels",
        Published,
        60,
        c.labels().iter().filter(|l| l.is_even()).count(),
    );
    let agree = (0..c.pairs().len()).all(|p| {
        let mut cells: Vec<Duad> = c
            .cells_containing(p)
            .into_iter()
            .map(|k| c.duad(k))
            .collect();
        cells.sort();
        let mut duads = c.label(p).duads().to_vec();
        duads.sort();
        cells == duads
    });
    f.holds(
        "a label lists the five 24-cells containing the pair",
        Trivial,
        agree,
    );
    let cell = c.cell_at(Duad::new(1, 6));
    f.holds("(16) contains 1", Trivial, c.cells24()[cell].contains(one));
    Ok(())
}

fn fact8(ctx: &Context, f: &mut Findings) -> Result<()> {
    let ico = ctx.cell600()?.icosians();
    let n = ico.len();
    let closed = (0..n).into_par_iter().all(|i| {
        (0..n).all(|j| {
            ico.mul(&ico.vertex(i), &ico.vertex(j))
                .ok()
                .and_then(|p| ico.index_of(&p))
                .is_some()
        })
    });
    f.holds("closed under multiplication", Published, closed);
    let one = ico.identity();
    f.expect(
        "identity",
        Trivial,
        IcosianVec::from_ints([2, 0, 0, 0]).to_string(),
        ico.vertex(one).to_string(),
    );
    f.holds(
        "inverses",
        Trivial,
        (0..n).all(|i| ico.mul_idx(i, ico.inverse(i)) == one),
    );
    let mut orders: BTreeMap<u32, usize> = BTreeMap::new();
    for i in 0..n {
        *orders.entry(ico.order(i)).or_insert(0) += 1;
    }
    f.expect(
        "element orders of 2A5",
        Derived,
        [(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)],
        orders.into_iter().collect::<Vec<_>>(),
    );
    Ok(())
}

fn cell120(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let x = ctx.cell120()?;
    f.expect("vertices of the 120-cell", Published, 600, x.vertices.len());
    let labels: BTreeSet<&Cell120Label> = x.labels.iter().collect();
    f.expect("distinct labels", Derived, 300, labels.len());
    let ex: Cell120Label = "(38)|(16)(27)(4X)(59)"
        .parse()
        .map_err(|e| anyhow!("{e:?}"))?;
    f.holds(
        "label (38)|(16)(27)(4X)(59) occurs",
        Published,
        x.labels.contains(&ex),
    );
    let odd = x
        .labels
        .iter()
        .filter(|l| {
            l.column_permutation()
                .is_some_and(|p| !permutation_is_even(&p))
        })
        .count();
    f.expect("labels giving odd permutations", Published, 600, odd);
    let doubled: BTreeMap<GoldenInt, usize> = inner_product_spectrum(c.icosians().vertices())
        .into_iter()
        .map(|(k, n)| (k * 2, n))
        .collect();
    let rows_and_cols = (0..5).all(|j| {
        [x.column(j), x.row(j)].iter().all(|part| {
            let vs: Vec<IcosianVec> = part.iter().map(|&i| x.vertices[i]).collect();
            vs.len() == 120 && inner_product_spectrum(&vs) == doubled
        })
    });
    f.holds(
        "rows and columns are 600-cells scaled by 2",
        Derived,
        rows_and_cols,
    );
    Ok(())
}

fn permutation_is_even(p: &[u8]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j]);
    inversions.count() % 2 == 0
}

fn arrays(ctx: &Context, f: &mut Findings) -> Result<()> {
    let ico = ctx.cell600()?.icosians();
    for (p, size, normalizer) in [(2, 5, 24), (3, 10, 12), (5, 6, 20)] {
        let a = prime_arrays(ico, p)?;
        f.expect(
            &format!("p = {p}: normalizer order"),
            Published,
            normalizer,
            a.normalizer.len(),
        );
        f.expect(&format!("p = {p}: array size"), Published, size, a.size());
        f.expect(
            &format!("p = {p}: distinct entries"),
            Derived,
            size * size,
            a.distinct_entries(),
        );
        f.holds(
            &format!("p = {p}: rows and columns partition the vertices"),
            Published,
            a.rows_partition() && a.columns_partition(),
        );
    }
    Ok(())
}

/// Pairs `{x, y}` of a family with every vertex pair of `x` orthogonal to every one of `y`.
fn orthogonal_partners(
    ctx: &Context,
    family: &[PairSet],
) -> Result<(Vec<usize>, BTreeSet<PairSet>)> {
    let pairs = ctx.cell600()?.pairs();
    let orth = |x: PairSet, y: PairSet| {
        x.iter().all(|p| {
            y.iter()
                .all(|q| pairs.relation(p, q) == PairRelation::Orthogonal)
        })
    };
    let partners: Vec<usize> = family
        .iter()
        .map(|&x| family.iter().filter(|&&y| orth(x, y)).count())
        .collect();
    let unions: BTreeSet<PairSet> = family
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| {
            family[i + 1..]
                .iter()
                .filter(move |&&y| orth(x, y))
                .map(move |&y| x.union(y))
        })
        .collect();
    Ok((partners, unions))
}

fn array_entries(ctx: &Context, p: u32) -> Result<BTreeSet<PairSet>> {
    let c = ctx.cell600()?;
    Ok(prime_arrays(c.icosians(), p)?
        .entries
        .iter()
        .flatten()
        .map(|e| c.pairs().pairs_of(*e))
        .collect())
}

fn label_set(ctx: &Context, labels: &[&str]) -> Result<PairSet> {
    let c = ctx.cell600()?;
    let ids = labels
        .iter()
        .map(|s| {
            let l: VertexLabel = s.parse().map_err(|e| anyhow!("{s}: {e:?}"))?;
            c.pair_with_label(&l)
                .ok_or_else(|| anyhow!("no vertex pair labelled {s}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PairSet::from_iter(ids))
}

fn hexagons(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    f.expect("hexagons", Published, 200, c.hexagons().len());
    let per_cell: BTreeSet<usize> = c
        .cells24()
        .iter()
        .map(|cell| c.hexagons().iter().filter(|h| h.is_subset(*cell)).count())
        .collect();
    f.expect("hexagons per 24-cell", Derived, [16], per_cell);
    let (partners, unions) = orthogonal_partners(ctx, c.hexagons())?;
    f.holds(
        "each hexagon has exactly one orthogonal hexagon",
        Published,
        partners.iter().all(|&n| n == 1),
    );
    f.expect("orthogonal hexagon pairs", Published, 100, unions.len());
    f.holds(
        "orthogonal pairs are the entries of the 10 x 10 array",
        Published,
        unions == array_entries(ctx, 3)?,
    );
    let h = label_set(
        ctx,
        &[
            "(16)(27)(38)(49)(5X)",
            "(16)(27)(39)(4X)(58)",
            "(16)(27)(3X)(48)(59)",
        ],
    )?;
    let meet =
        c.cells24()[c.cell_at(Duad::new(1, 6))].intersect(c.cells24()[c.cell_at(Duad::new(2, 7))]);
    f.holds(
        "(16) and (27) meet in the listed hexagon",
        Published,
        meet == h && c.hexagons().contains(&h),
    );
    Ok(())
}

fn decagons(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let ico = c.icosians();
    f.expect("decagons", Published, 72, c.decagons().len());
    let (partners, unions) = orthogonal_partners(ctx, c.decagons())?;
    f.holds(
        "each decagon has exactly one orthogonal decagon",
        Published,
        partners.iter().all(|&n| n == 1),
    );
    f.expect("orthogonal decagon pairs", Published, 36, unions.len());
    f.holds(
        "orthogonal pairs are the entries of the 6 x 6 array",
        Published,
        unions == array_entries(ctx, 5)?,
    );
    let verts: Vec<_> = c
        .decagons()
        .iter()
        .map(|d| c.pairs().vertices_of(*d, ico))
        .collect();
    let per_edge: BTreeSet<usize> = c
        .skeleton()
        .edges
        .iter()
        .map(|&[a, b]| {
            verts
                .iter()
                .filter(|d| d.contains(a) && d.contains(b))
                .count()
        })
        .collect();
    f.expect("decagons through each edge", Published, [1], per_edge);
    let pents = c.pentagons()?;
    f.expect("pentagons", Derived, 72, pents.len());
    let meets: BTreeSet<usize> = pents
        .iter()
        .flat_map(|p| {
            let ps = c.pairs().pairs_of(*p);
            c.cells24().iter().map(move |cell| cell.intersect(ps).len())
        })
        .collect();
    f.expect(
        "vertices a pentagon shares with each 24-cell",
        Published,
        [1],
        meets,
    );
    let d = label_set(
        ctx,
        &[
            "(16)(27)(38)(49)(5X)",
            "(17)(28)(39)(4X)(56)",
            "(18)(29)(3X)(46)(57)",
            "(19)(2X)(36)(47)(58)",
            "(1X)(26)(37)(48)(59)",
        ],
    )?;
    f.holds(
        "the listed decagon through 1 occurs",
        Published,
        c.decagons().contains(&d),
    );
    Ok(())
}

fn fact3(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let g = ctx.symmetry()?;
    let ico = c.icosians();
    f.expect("order of Aut(H)", Published, 14_400, g.order());
    f.expect("rotations", Published, 7_200, g.rotations());
    let center: BTreeSet<usize> = g.center().into_iter().collect();
    let pm: BTreeSet<usize> = [SymOp::identity(ico), SymOp::negation(ico)]
        .iter()
        .map(|op| g.index_of(op).ok_or_else(|| anyhow!("±1 not in the group")))
        .collect::<Result<_>>()?;
    f.holds("center is {±1}", Published, center == pm);
    let lefts: Vec<SymOp> = (0..ico.len()).map(|a| SymOp::left(ico, a)).collect();
    let rights: Vec<SymOp> = (0..ico.len()).map(|b| SymOp::right(ico, b)).collect();
    let products: HashSet<Vec<u8>> = lefts
        .par_iter()
        .flat_map_iter(|l| rights.iter().map(move |r| l.compose(r).perm().to_vec()))
        .collect();
    f.expect(
        "distinct products of left and right multiplications",
        Published,
        7_200,
        products.len(),
    );
    Ok(())
}

fn fact4(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let g = ctx.symmetry()?;
    let ico = c.icosians();
    let (sv, sc) = g.stabilizer_orders(c)?;
    f.expect("order of Stab(1)", Published, 120, sv);
    f.expect("order of Stab(24-cell)", Published, 576, sc);
    let one = ico.identity();
    let stab = g.vertex_stabilizer(one);
    let sig: Vec<(serde_json::Value, Vec<usize>)> =
        orbit_signature(c, one, &g.pair_orbits(c, &stab))
            .into_iter()
            .map(|(k, v)| (golden(k), v))
            .collect();
    let gi = |a, b| golden(GoldenInt::new(a, b));
    let expected = vec![
        (gi(-1, 1), vec![12]),
        (gi(0, 0), vec![15]),
        (gi(0, 1), vec![12]),
        (gi(1, 0), vec![20]),
        (gi(2, 0), vec![1]),
    ];
    f.expect(
        "Stab(1) orbits on pairs by |inner product|",
        Published,
        expected,
        sig,
    );
    let mrv = SymOp::negation(ico).compose(&reflection(ico, one));
    let central = stab.iter().all(|&s| {
        let s = g.element(s);
        s.compose(&mrv).perm() == mrv.compose(s).perm()
    });
    f.holds(
        "-r_1 is central in Stab(1)",
        Derived,
        mrv.image(one) == one && central,
    );
    let cell = g.cell_containing_identity(c);
    f.expect(
        "24-cell through 1",
        Trivial,
        "(16)",
        c.duad(cell).to_string(),
    );
    let cstab = g.cell_stabilizer(c, cell)?;
    let sizes = |o: Vec<Vec<usize>>| o.iter().map(Vec::len).collect::<Vec<_>>();
    f.expect(
        "Stab(C) orbits on 24-cells",
        Published,
        [1, 8, 16],
        sizes(g.cell_orbits(c, &cstab)?),
    );
    f.expect(
        "Stab(C) orbits on vertex pairs",
        Published,
        [12, 48],
        sizes(g.pair_orbits(c, &cstab)),
    );
    Ok(())
}

fn fact6(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let g = ctx.symmetry()?;
    let actions = ctx.actions()?;
    let ico = c.icosians();
    let kernel: BTreeSet<usize> = (0..g.order())
        .filter(|&i| actions[i] == TenPerm::identity())
        .collect();
    let pm: BTreeSet<usize> = [SymOp::identity(ico), SymOp::negation(ico)]
        .iter()
        .filter_map(|op| g.index_of(op))
        .collect();
    f.holds("kernel is {±1}", Published, kernel == pm);
    let image: HashSet<&TenPerm> = actions.iter().collect();
    f.expect("image order in S10", Published, 7_200, image.len());
    let mut even_even = 0;
    let mut swapping = 0;
    for (op, a) in g.elements().iter().zip(actions) {
        if op.is_rotation() && a.pentad_parities() == Some((Parity::Even, Parity::Even)) {
            even_even += 1;
        }
        if !op.is_rotation() && a.swaps_pentads() {
            swapping += 1;
        }
    }
    f.expect("rotations acting as A5 x A5", Published, 7_200, even_even);
    f.expect(
        "reflections swapping the pentads",
        Published,
        7_200,
        swapping,
    );
    f.holds(
        "the action is a homomorphism",
        Trivial,
        g.action_is_homomorphism(actions),
    );
    let refl = (0..ico.len()).all(|v| {
        let label = c.label(c.pairs().pair_of[v]);
        g.action_on_partitions(c, &reflection(ico, v)).ok() == Some(TenPerm::from_label(&label))
    });
    f.holds(
        "r_v acts as the product of the duads of its label",
        Published,
        refl,
    );
    Ok(())
}

fn fact9(ctx: &Context, f: &mut Findings) -> Result<()> {
    let e = ctx.e8()?;
    let roots: HashSet<&Vec<Rational>> = e.e8.roots.iter().collect();
    let images: HashSet<&Vec<Rational>> = e.h.iter().map(|x| &x.coords).collect();
    f.expect("distinct images of H", Published, 120, images.len());
    f.expect(
        "images of H that are E8 roots",
        Published,
        120,
        images.iter().filter(|v| roots.contains(*v)).count(),
    );
    Ok(())
}

fn example1(ctx: &Context, f: &mut Findings) -> Result<()> {
    let c = ctx.cell600()?;
    let ico = c.icosians();
    let e = ctx.e8()?;
    let lat = &e.e8.lattice;
    f.expect("m = -1: determinant", Published, 1, lat.determinant().abs());
    f.holds("m = -1: even", Published, lat.is_even());
    f.expect("m = -1: norm 2 vectors", Published, 240, e.e8.roots.len());
    let all: HashSet<&Vec<Rational>> = e.h.iter().chain(&e.phi_h).map(|x| &x.coords).collect();
    let roots: HashSet<&Vec<Rational>> = e.e8.roots.iter().collect();
    f.holds(
        "m = -1: the roots are the images of H and phi H",
        Published,
        all == roots,
    );
    let map = e8_map();
    let orth =
        e.h.iter()
            .zip(&e.phi_h)
            .filter(|(x, y)| map.split_dot(&x.coords, &y.coords) == Rational::from_integer(0))
            .count();
    f.expect(
        "m = -1: images of v and phi v orthogonal",
        Published,
        120,
        orth,
    );

    let plus = e8_map_conjugate();
    let scaled = |k: GoldenInt| {
        ico.vertices()
            .iter()
            .map(|v| v.scale(k))
            .collect::<Vec<_>>()
    };
    let h = embed_set(ico.vertices(), &plus, Source::H)?;
    let phi_h = embed_set(&scaled(GoldenInt::PHI), &plus, Source::PhiH)?;
    let gens: Vec<_> = h.iter().chain(&phi_h).cloned().collect();
    let e8p = certify_e8(&gens, plus)?;
    f.expect(
        "m = +1: determinant",
        Published,
        1,
        e8p.lattice.determinant().abs(),
    );
    f.holds("m = +1: even", Published, e8p.lattice.is_even());
    f.expect("m = +1: norm 2 vectors", Published, 240, e8p.roots.len());
    f.holds(
        "m = +1: even unimodular of rank 8",
        Derived,
        is_e8_even_unimodular(&e8p.lattice),
    );
    let inv_h = embed_set(&scaled(GoldenInt::PHI_INV), &plus, Source::Other)?;
    let fam: HashSet<&Vec<Rational>> = h.iter().chain(&inv_h).map(|x| &x.coords).collect();
    f.holds(
        "m = +1: the roots are the images of H and phi^-1 H",
        Derived,
        fam == e8p.roots.iter().collect(),
    );
    let orth = h
        .iter()
        .zip(&inv_h)
        .filter(|(x, y)| plus.split_dot(&x.coords, &y.coords) == Rational::from_integer(0))
        .count();
    f.expect(
        "m = +1: images of v and phi^-1 v orthogonal",
        Derived,
        120,
        orth,
    );
    let conj: Vec<IcosianVec> = ico
        .vertices()
        .iter()
        .map(|v| IcosianVec(v.0.map(GoldenInt::conj)))
        .collect();
    let mut isometric = true;
    for (a, ca) in ico.vertices().iter().zip(&conj) {
        for (b, cb) in ico.vertices().iter().zip(&conj) {
            let ga = h4_core::embed::golden_coords(a);
            let gb = h4_core::embed::golden_coords(b);
            let d1 = map.golden_dot(&ga, &gb)?;
            let d2 = plus.golden_dot(
                &h4_core::embed::golden_coords(ca),
                &h4_core::embed::golden_coords(cb),
            )?;
            isometric &= d1 == d2;
        }
    }
    f.holds(
        "conjugation carries the m = -1 frame onto the m = +1 frame",
        Derived,
        isometric,
    );
    Ok(())
}

fn example2(ctx: &Context, f: &mut Findings) -> Result<()> {
    let l = lattice_l(ctx.cell600()?.icosians())?;
    let census: Vec<(i64, usize)> = l.census.iter().map(|(k, v)| (*k, *v)).collect();
    f.expect(
        "inner products of a generator with H, by absolute value",
        Published,
        [(0, 15), (1, 24), (2, 20), (4, 1)],
        census,
    );
    f.expect("determinant", Published, 625, l.determinant);
    f.holds("even", Published, l.lattice.is_even());
    f.expect("norm 2 vectors", Published, 0, l.roots);
    f.expect("minimal norm", Derived, 4, l.min_norm);
    f.holds(
        "golden Gram determinant is a unit",
        Derived,
        l.basis.gram_det.is_unit(),
    );
    Ok(())
}

fn example3(ctx: &Context, f: &mut Findings) -> Result<()> {
    let e = ctx.e8()?;
    let d = decompose_norm4_shell(&e.e8, ctx.cell600()?, ctx.cell120()?)?;
    f.expect("norm 4 vectors", Published, 2160, d.shell_size);
    let sizes: Vec<usize> = d.classes.iter().map(|c| c.vectors.len()).collect();
    f.expect("class sizes", Published, [120, 120, 600, 600, 720], sizes);
    let covered: HashSet<&Vec<Rational>> = d.classes.iter().flat_map(|c| &c.vectors).collect();
    f.expect(
        "vectors covered by the classes",
        Derived,
        2160,
        covered.len(),
    );
    f.holds(
        "inner product spectra match",
        Published,
        d.classes.iter().all(|c| c.spectrum_matches),
    );
    let tags: Vec<(&str, i32, i64)> = d
        .classes
        .iter()
        .map(|c| (c.source.name(), c.phi_power, c.m))
        .collect();
    let expected = [
        (Source::H.name(), -1, -1),
        (Source::H.name(), 2, -1),
        (Source::Cell120.name(), 0, -1),
        (Source::Cell120.name(), 1, -1),
        (Source::Rectified.name(), 0, -1),
    ];
    f.expect(
        "classes as (source, power of phi, m)",
        Derived,
        expected,
        tags,
    );
    Ok(())
}

fn fact10(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let pts = m.points();
    f.expect("points", Published, 85, pts.len());
    let verts = pts
        .iter()
        .filter(|p| matches!(p.tag, PointTag::Vertex(_)))
        .count();
    let cells: BTreeSet<Duad> = pts
        .iter()
        .filter_map(|p| {
            if let PointTag::Cell(d) = p.tag {
                Some(d)
            } else {
                None
            }
        })
        .collect();
    f.expect("points labelled by vertex pairs", Published, 60, verts);
    f.expect("points labelled by 24-cells", Published, 25, cells.len());
    let f4 = pts
        .iter()
        .all(|p| m.f4_subspace(p.span()).map(|s| s.f4dim) == Some(1));
    f.holds("every point is an F4 line through 0", Trivial, f4);
    let covered: HashSet<F2Vec> = pts.iter().flat_map(|p| p.vectors).collect();
    f.expect("non-zero classes covered", Trivial, 255, covered.len());
    Ok(())
}

fn phi(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let g = ctx.symmetry()?;
    f.holds(
        "Phi^2 = Phi + 1 over Z",
        Published,
        m.phi().square_minus_self_minus_one() == [[0; 8]; 8],
    );
    f.holds(
        "Phibar^3 = 1",
        Published,
        F2Vec::all().all(|x| m.phibar(m.phibar(m.phibar(x))) == x),
    );
    let agrees = (0..120).all(|v| m.phibar(m.vertex_class(v)) == m.phi_vertex_class(v));
    f.holds("Phi reduces phi on the images of H", Trivial, agrees);
    let (zero, iso, non) = m.q_census();
    f.expect(
        "classes by Q: zero, isotropic, non-isotropic",
        Derived,
        (1, 135, 120),
        (zero, iso, non),
    );
    f.holds(
        "B(Phibar x, y) = B(x, Phibar y)",
        Derived,
        m.phibar_is_self_adjoint(),
    );
    f.holds(
        "B(Phibar x, Phibar y) = B(x, y) fails",
        Derived,
        !m.phibar_is_isometry(),
    );
    let commute = g
        .generators()
        .iter()
        .map(|&i| commutes_with_phi(m, g.element(i)))
        .collect::<h4_core::Result<Vec<bool>>>()?;
    f.holds(
        "generators of Aut(H) commute with Phi",
        Published,
        commute.iter().all(|&b| b),
    );
    Ok(())
}

fn points(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let mut vertex_q = BTreeSet::new();
    let mut cell_q = BTreeSet::new();
    for p in m.points() {
        let qs = p.vectors.map(|v| m.q(v));
        match p.tag {
            PointTag::Vertex(_) => vertex_q.insert(qs),
            PointTag::Cell(_) => cell_q.insert(qs),
        };
    }
    f.expect(
        "Q on (x, Phibar x, Phibar^2 x) at vertex points",
        Published,
        [[1, 1, 0]],
        vertex_q,
    );
    f.expect("Q on cell points", Published, [[0, 0, 0]], cell_q);
    let cell_vectors: HashSet<F2Vec> = m.points()[60..].iter().flat_map(|p| p.vectors).collect();
    f.expect(
        "isotropic vectors on cell points",
        Derived,
        75,
        cell_vectors.len(),
    );
    Ok(())
}

fn lines(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let c = ctx.cell600()?;
    f.expect("lines", Published, 357, m.lines().len());
    let census: Vec<(&str, usize)> = m.line_census().into_iter().collect();
    f.expect(
        "lines by type",
        Published,
        [
            ("16-cell", 75),
            ("decagon", 72),
            ("hexagon", 200),
            ("schoute", 10),
        ],
        census,
    );
    let mut schoute = BTreeSet::new();
    let mut decagons = BTreeSet::new();
    let mut sixteen = BTreeSet::new();
    let mut hexagons = BTreeSet::new();
    for l in m.lines() {
        match l.kind {
            LineKind::Schoute(s) => {
                schoute.insert(s);
            }
            LineKind::Decagon(d) => {
                decagons.insert(d);
            }
            LineKind::Cell16 { sixteen: s, cell } => {
                sixteen.insert((s, cell));
            }
            LineKind::Hexagon { hexagon, crossed } => {
                hexagons.insert((hexagon, crossed));
            }
        }
    }
    f.expect(
        "Schoute symbols on totally singular lines",
        Published,
        (1..=10).collect::<Vec<u8>>(),
        schoute,
    );
    f.expect(
        "distinct decagons on lines",
        Published,
        c.decagons().len(),
        decagons.len(),
    );
    let distinct16: BTreeSet<usize> = sixteen.iter().map(|x| x.0).collect();
    f.expect(
        "distinct 16-cells on lines",
        Published,
        75,
        distinct16.len(),
    );
    let homes = sixteen
        .iter()
        .all(|&(s, d)| c.sixteen_cells()[s].is_subset(c.cells24()[c.cell_at(d)]));
    f.holds("16-cell lines carry their 24-cell", Published, homes);
    let distinct_h: BTreeSet<usize> = hexagons.iter().map(|x| x.0).collect();
    f.expect(
        "distinct hexagons on lines",
        Published,
        200,
        distinct_h.len(),
    );
    let crossed = hexagons.iter().all(|&(h, [a, b])| {
        let homes: Vec<Duad> = (0..25)
            .filter(|&k| c.hexagons()[h].is_subset(c.cells24()[k]))
            .map(|k| c.duad(k))
            .collect();
        homes.len() == 2 && {
            let mut want = [
                Duad::new(homes[0].row, homes[1].col),
                Duad::new(homes[1].row, homes[0].col),
            ];
            want.sort();
            want == [a, b]
        }
    });
    f.holds(
        "hexagon (i j) meet (k l) lines carry (i l) and (k j)",
        Published,
        crossed,
    );
    let f4 = m
        .lines()
        .iter()
        .all(|l| m.f4_subspace(l.space).map(|s| s.f4dim) == Some(2));
    f.holds("every line is an F4 2-space", Trivial, f4);
    let sing = m
        .lines()
        .iter()
        .filter(|l| l.space.iter().all(|x| m.q(x) == 0))
        .count();
    f.expect("totally singular lines", Derived, 10, sing);
    Ok(())
}

fn planes(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    f.expect("planes", Published, 85, m.planes().len());
    let mut comps = BTreeSet::new();
    for p in m.planes() {
        let verts = p.points.iter().filter(|&&q| q < 60).count();
        let cells = p.points.len() - verts;
        let pole_is_vertex = p.pole < 60;
        comps.insert(if pole_is_vertex {
            ("vertex", 1, verts - 1, cells)
        } else {
            ("24-cell", 1, cells - 1, verts)
        });
    }
    f.expect(
        "compositions (pole, pole, others of its kind, the other kind)",
        Published,
        [("24-cell", 1, 8, 12), ("vertex", 1, 15, 5)],
        comps,
    );
    let f4 = m
        .planes()
        .iter()
        .all(|p| m.f4_subspace(p.space).map(|s| s.f4dim) == Some(3));
    f.holds("every plane is an F4 3-space", Trivial, f4);
    let lines_in: BTreeSet<usize> = m
        .planes()
        .iter()
        .map(|p| {
            m.lines()
                .iter()
                .filter(|l| l.space.is_subset(&p.space))
                .count()
        })
        .collect();
    f.expect("lines in each plane", Derived, [21], lines_in);
    Ok(())
}

fn qomega(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let values = |xs: &mut dyn Iterator<Item = F2Vec>| -> BTreeSet<&'static str> {
        xs.map(|x| m.q_omega(x).name()).collect()
    };
    let pts = m.points();
    f.expect(
        "on cell points",
        Published,
        ["0"],
        values(&mut pts[60..].iter().flat_map(|p| p.vectors)),
    );
    f.expect(
        "on isotropic vectors of vertex points",
        Published,
        ["1"],
        values(&mut pts[..60].iter().map(|p| p.vectors[2])),
    );
    f.expect(
        "on images of H",
        Published,
        ["wbar"],
        values(&mut (0..120).map(|v| m.vertex_class(v))),
    );
    f.expect(
        "on images of phi H",
        Published,
        ["w"],
        values(&mut (0..120).map(|v| m.phi_vertex_class(v))),
    );
    f.holds(
        "Tr Q_w = Q",
        Published,
        F2Vec::all().all(|x| m.q_omega(x).trace() == m.q(x)),
    );
    let scaling = F2Vec::all().all(|x| {
        F4::ALL
            .iter()
            .all(|&l| m.q_omega(m.scale(l, x)) == l.mul(l).mul(m.q_omega(x)))
    });
    f.holds("Q_w(l x) = l^2 Q_w(x)", Derived, scaling);
    let bilinear = F2Vec::all().collect::<Vec<_>>().par_iter().all(|&x| {
        F2Vec::all().all(|y| {
            let b = m.b_omega(x, y);
            F4::ALL
                .iter()
                .all(|&l| m.b_omega(m.scale(l, x), y) == l.mul(b))
                && F2Vec::all()
                    .step_by(17)
                    .all(|z| m.b_omega(x.add(z), y) == b.add(m.b_omega(z, y)))
        })
    });
    f.holds("polarization is F4-bilinear", Published, bilinear);
    let mut table: BTreeMap<&str, usize> = BTreeMap::new();
    for x in F2Vec::nonzero() {
        *table.entry(m.q_omega(x).name()).or_insert(0) += 1;
    }
    f.expect(
        "non-zero classes by Q_w",
        Derived,
        [("0", 75), ("1", 60), ("w", 60), ("wbar", 60)],
        table.into_iter().collect::<Vec<_>>(),
    );
    Ok(())
}

fn schoute_space(ctx: &Context, s: u8) -> Result<usize> {
    let m = ctx.mod2()?;
    let line = m
        .lines()
        .iter()
        .find(|l| l.kind == LineKind::Schoute(s))
        .ok_or_else(|| anyhow!("no line for partition {s}"))?;
    ctx.spaces()?
        .iter()
        .position(|x| *x == line.space)
        .ok_or_else(|| anyhow!("Schoute line {s} not singular"))
}

fn pentads(ctx: &Context, f: &mut Findings) -> Result<()> {
    let m = ctx.mod2()?;
    let spaces = ctx.spaces()?;
    f.expect("totally singular 4-spaces", Published, 270, spaces.len());
    let rows = (1..=5)
        .map(|s| schoute_space(ctx, s))
        .collect::<Result<Vec<_>>>()?;
    let cols = (6..=10)
        .map(|s| schoute_space(ctx, s))
        .collect::<Result<Vec<_>>>()?;
    let found: BTreeSet<usize> = rows.iter().chain(&cols).copied().collect();
    f.expect(
        "Schoute's lines among the 4-spaces",
        Published,
        10,
        found.len(),
    );
    let mut figure = 0;
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            let p = m.cell_point(Duad::from_position(i, j));
            if spaces[r].intersect(&spaces[c]) == m.points()[p].span() {
                figure += 1;
            }
        }
    }
    f.expect("V_i meet W_j is the point of (i j)", Published, 25, figure);
    let cover = |ids: &[usize]| -> HashSet<F2Vec> {
        ids.iter()
            .flat_map(|&i| {
                spaces[i]
                    .iter()
                    .filter(|x| !x.is_zero())
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let (cr, cc) = (cover(&rows), cover(&cols));
    f.expect(
        "isotropic vectors in the row pentad",
        Published,
        75,
        cr.len(),
    );
    f.holds("both pentads contain the same vectors", Published, cr == cc);

    let class = parity_classes(spaces)
        .ok_or_else(|| anyhow!("intersection parity is not an equivalence"))?;
    let (v1, v2) = (rows[0], rows[1]);
    let same: Vec<usize> = (0..spaces.len())
        .filter(|&i| class[i] == class[v1])
        .collect();
    f.expect(
        "classes by intersection parity",
        Published,
        (135, 135),
        (same.len(), spaces.len() - same.len()),
    );
    let meets: BTreeSet<u32> = same
        .iter()
        .flat_map(|&a| {
            same.iter()
                .filter(move |&&b| b != a)
                .map(move |&b| meet_dim(&spaces[a], &spaces[b]))
        })
        .collect();
    f.expect(
        "intersection dimensions within a class",
        Published,
        [0, 2],
        meets,
    );

    f.expect("V1 meet V2", Trivial, 0, meet_dim(&spaces[v1], &spaces[v2]));
    let comp = pentad_completions(spaces, v1, v2);
    f.expect(
        "4-spaces disjoint from V1 and V2",
        Published,
        28,
        comp.common.len(),
    );
    f.expect(
        "maximal disjoint sets through V1 and V2",
        Published,
        [5, 9],
        &comp.maximal_sizes,
    );
    f.holds(
        "disjointness graph on the 28 is T(8)",
        Derived,
        comp.letters.is_some(),
    );
    let nines: Vec<&Vec<usize>> = comp.maximal.iter().filter(|s| s.len() == 9).collect();
    let mut five = true;
    let mut tetrad = true;
    for nine in &nines {
        for &o in same.iter().filter(|o| !nine.contains(o)) {
            five &= nine
                .iter()
                .filter(|&&i| meet_dim(&spaces[i], &spaces[o]) > 0)
                .count()
                == 5;
        }
        let t = &nine[..4];
        let through: Vec<usize> = same
            .iter()
            .copied()
            .filter(|o| {
                !nine.contains(o) && t.iter().all(|&x| meet_dim(&spaces[x], &spaces[*o]) > 0)
            })
            .collect();
        tetrad &= through.len() == 5
            && through.iter().all(|&a| {
                through
                    .iter()
                    .all(|&b| a == b || meet_dim(&spaces[a], &spaces[b]) == 0)
            });
    }
    f.holds(
        "other 4-spaces of the class meet exactly five of a nine",
        Published,
        !nines.is_empty() && five,
    );
    f.holds(
        "five mutually disjoint 4-spaces meet every member of a tetrad",
        Published,
        !nines.is_empty() && tetrad,
    );
    let all_sing = spaces
        .iter()
        .all(|s| s.len() == 16 && s.iter().all(|x| m.q(x) == 0));
    f.holds(
        "every enumerated space is a totally singular 4-space",
        Trivial,
        all_sing,
    );
    Ok(())
}
