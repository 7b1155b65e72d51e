//! Small example 2-categories and diagrams shared by the tests, the
//! acceptance suite and the CLI corpus.

use crate::fincat::{product_category, FinCat, Functor, NatTransf};
use crate::transforms::{CatDiagram, PseudoData};
use crate::two_cat::{Builder, Fin2Cat};
use std::collections::HashMap;

pub fn two() -> Fin2Cat {
    Fin2Cat::locally_discrete(&FinCat::two())
}

pub fn discrete_pair() -> Fin2Cat {
    Fin2Cat::locally_discrete(&FinCat::discrete(&["a", "b"]))
}

pub fn parallel_pair() -> Fin2Cat {
    Fin2Cat::locally_discrete(&FinCat::parallel_pair())
}

pub fn chain3() -> Fin2Cat {
    Fin2Cat::locally_discrete(&FinCat::from_poset(&["a", "b", "c"], |x, y| x <= y))
}

/// `⊥ ≤ a, b ≤ ⊤`, a meet-semilattice with top.
pub fn diamond() -> Fin2Cat {
    Fin2Cat::locally_discrete(&FinCat::from_poset(&["bot", "a", "b", "top"], |x, y| {
        x == y || x == 0 || y == 3
    }))
}

fn cells2_base(cells2: Vec<(&str, &str, &str)>, vcompose: Vec<(&str, &str, &str)>) -> Fin2Cat {
    let s = |v: &str| v.to_string();
    Builder {
        objects: vec![s("0"), s("1")],
        cells1: vec![(s("id_0"), s("0"), s("0")), (s("id_1"), s("1"), s("1")), (s("f"), s("0"), s("1")), (s("g"), s("0"), s("1"))],
        identities1: vec![(s("0"), s("id_0")), (s("1"), s("id_1"))],
        cells2: cells2.into_iter().map(|(a, b, c)| (s(a), s(b), s(c))).collect(),
        vcompose: vcompose.into_iter().map(|(a, b, c)| (s(a), s(b), s(c))).collect(),
        ..Builder::default()
    }
    .build()
    .expect("fixture 2-category")
}

/// Two parallel 1-cells `f, g: 0 → 1` and one 2-cell `theta: f ⇒ g`.
pub fn free_cell() -> Fin2Cat {
    cells2_base(vec![("theta", "f", "g")], vec![])
}

/// As [`free_cell`] with `theta` invertible.
pub fn iso_cell() -> Fin2Cat {
    cells2_base(
        vec![("theta", "f", "g"), ("theta^-1", "g", "f")],
        vec![("theta^-1", "theta", "1_f"), ("theta", "theta^-1", "1_g")],
    )
}

/// Every base used by the property tests, with at most four objects.
pub fn bases() -> Vec<(&'static str, Fin2Cat)> {
    vec![
        ("terminal", Fin2Cat::terminal()),
        ("two", two()),
        ("discrete_pair", discrete_pair()),
        ("parallel_pair", parallel_pair()),
        ("chain3", chain3()),
        ("free_cell", free_cell()),
        ("iso_cell", iso_cell()),
        ("diamond", diamond()),
    ]
}

/// Finite meet-semilattices with a top element, as locally discrete
/// 2-categories.
pub fn semilattices() -> Vec<(&'static str, Fin2Cat)> {
    vec![("terminal", Fin2Cat::terminal()), ("two", two()), ("chain3", chain3()), ("diamond", diamond())]
}

/// Over `two`: `P(0) = 𝟙`, `P(1) = 𝟚`, `P(0<1)` picks `0`.
pub fn pick_zero() -> CatDiagram {
    let b = two();
    let cats = vec![FinCat::terminal(), FinCat::two()];
    CatDiagram::from_fn(
        &b,
        cats.clone(),
        |x, y, _| {
            if x == y {
                Functor::identity(&cats[x])
            } else {
                Functor { obj: vec![0], arr: vec![cats[1].ids[0]] }
            }
        },
        |x, y, _| {
            if x == y {
                NatTransf::identity(&Functor::identity(&cats[x]), &cats[x])
            } else {
                NatTransf { comp: vec![cats[1].ids[0]] }
            }
        },
    )
}

/// Strict diagrams used across the tests.
pub fn strict_diagrams() -> Vec<(&'static str, CatDiagram)> {
    vec![
        ("pick_zero", pick_zero()),
        ("rep0_two", CatDiagram::representable(&two(), 0)),
        ("rep1_two", CatDiagram::representable(&two(), 1)),
        ("const_two_on_two", CatDiagram::constant(&two(), &FinCat::two())),
        ("rep0_free_cell", CatDiagram::representable(&free_cell(), 0)),
        ("const_point_on_chain3", CatDiagram::constant(&chain3(), &FinCat::terminal())),
        ("const_pair_on_terminal", CatDiagram::constant(&Fin2Cat::terminal(), &FinCat::discrete(&["a", "b"]))),
    ]
}

/// The functor between thin categories determined by an object map.
pub fn thin_functor(c: &FinCat, d: &FinCat, obj: Vec<usize>) -> Functor {
    let arr = (0..c.n_arr()).map(|f| d.hom(obj[c.src(f)], obj[c.tgt(f)])[0]).collect();
    Functor { obj, arr }
}

/// Replaces `Pf` by an isomorphic functor `P'f` along `β_f: Pf ≅ P'f`,
/// giving a pseudofunctor with `α_A = β_{id_A}` and
/// `α_{f,g} = β_{gf}∘(β_g * β_f)⁻¹`.
pub fn twist(p: &CatDiagram, alt: &[((usize, usize, usize), Functor, NatTransf)]) -> CatDiagram {
    let base = &p.base;
    let n = base.n_obj();
    let mut on1 = p.on1.clone();
    let mut beta: Vec<Vec<NatTransf>> = (0..n * n)
        .map(|k| (0..base.hom(k / n, k % n).n_obj()).map(|f| NatTransf::identity(p.f1(k / n, k % n, f), &p.cats[k % n])).collect())
        .collect();
    for ((a, b, f), func, t) in alt {
        on1[a * n + b][*f] = func.clone();
        beta[a * n + b][*f] = t.clone();
    }
    let inv = |t: &NatTransf, c: &FinCat| t.inverse(c).expect("twist cells are invertible");
    let on2 = (0..n * n)
        .map(|k| {
            let (a, b) = (k / n, k % n);
            let h = base.hom(a, b);
            let pb = &p.cats[b];
            (0..h.n_arr())
                .map(|t| {
                    let (f, g) = (h.src(t), h.tgt(t));
                    let bf_inv = inv(&beta[k][f], pb);
                    let comp = (0..p.cats[a].n_obj())
                        .map(|x| pb.compose(beta[k][g].comp[x], pb.compose(p.f2(a, b, t).comp[x], bf_inv.comp[x])))
                        .collect();
                    NatTransf { comp }
                })
                .collect()
        })
        .collect();
    let alpha_obj = (0..n).map(|a| beta[a * n + a][base.id1(a)].clone()).collect();
    let mut alpha_comp = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let pc = &p.cats[c];
                for f in 0..base.hom(a, b).n_obj() {
                    for g in 0..base.hom(b, c).n_obj() {
                        let gf = base.comp1(a, b, c, g, f);
                        let (bf, bg, bgf) = (&beta[a * n + b][f], &beta[b * n + c][g], &beta[a * n + c][gf]);
                        let pfalt = &on1[a * n + b][f];
                        let pg = p.f1(b, c, g);
                        let comp = (0..p.cats[a].n_obj())
                            .map(|x| {
                                let h = pc.compose(bg.comp[pfalt.obj[x]], pg.arr[bf.comp[x]]);
                                pc.compose(bgf.comp[x], pc.inverse(h).expect("invertible"))
                            })
                            .collect();
                        alpha_comp.insert((a, b, c, f, g), NatTransf { comp });
                    }
                }
            }
        }
    }
    CatDiagram { base: base.clone(), cats: p.cats.clone(), on1, on2, pseudo: Some(PseudoData { alpha_obj, alpha_comp }) }
}

fn swap_iso() -> (Functor, NatTransf) {
    let i = FinCat::iso();
    let swap = thin_functor(&i, &i, vec![1, 0]);
    let to = NatTransf { comp: vec![i.hom(0, 1)[0], i.hom(1, 0)[0]] };
    (swap, to)
}

/// `I ⊔ I`, two copies of the free isomorphism.
pub fn two_isos() -> FinCat {
    FinCat::from_poset(&["a0", "a1", "b0", "b1"], |x, y| x / 2 == y / 2)
}

/// Pseudofunctors with non-identity structure cells.
pub fn pseudo_diagrams() -> Vec<(&'static str, CatDiagram)> {
    let (swap, to) = swap_iso();
    let pt = Fin2Cat::terminal();
    let iso_pt = twist(&CatDiagram::constant(&pt, &FinCat::iso()), &[((0, 0, 0), swap.clone(), to.clone())]);
    let b = two();
    let id0 = b.id1(0);
    let f01 = 0;
    let iso_two = twist(
        &CatDiagram::constant(&b, &FinCat::iso()),
        &[((0, 0, id0), swap.clone(), to.clone()), ((0, 1, f01), swap, to)],
    );
    let ii = two_isos();
    let sw2 = thin_functor(&ii, &ii, vec![1, 0, 3, 2]);
    let to2 = NatTransf { comp: (0..4).map(|x| ii.hom(x, x ^ 1)[0]).collect() };
    let split = twist(&CatDiagram::constant(&pt, &ii), &[((0, 0, 0), sw2, to2)]);
    vec![("iso_swap_on_terminal", iso_pt), ("iso_swap_on_two", iso_two), ("two_isos_on_terminal", split)]
}

/// `(x, y) ↦ P(x) × Q(y)` on `a × b`, for strict `P` and `Q`.
pub fn product_diagram(a: &Fin2Cat, b: &Fin2Cat, p: &CatDiagram, q: &CatDiagram) -> CatDiagram {
    let ab = a.product(b);
    let nb = b.n_obj();
    let cats: Vec<FinCat> =
        (0..ab.n_obj()).map(|k| product_category(&p.cats[k / nb], &q.cats[k % nb]).0).collect();
    let prod_f = |f: &Functor, g: &Functor, d2: &FinCat| Functor {
        obj: (0..f.obj.len() * g.obj.len()).map(|i| f.obj[i / g.obj.len()] * d2.n_obj() + g.obj[i % g.obj.len()]).collect(),
        arr: (0..f.arr.len() * g.arr.len()).map(|i| f.arr[i / g.arr.len()] * d2.n_arr() + g.arr[i % g.arr.len()]).collect(),
    };
    CatDiagram::from_fn(
        &ab,
        cats.clone(),
        |s, t, u| {
            let mv = b.hom(s % nb, t % nb).n_obj();
            prod_f(p.f1(s / nb, t / nb, u / mv), q.f1(s % nb, t % nb, u % mv), &q.cats[t % nb])
        },
        |s, t, g| {
            let mv = b.hom(s % nb, t % nb).n_arr();
            let (x, y) = (p.f2(s / nb, t / nb, g / mv), q.f2(s % nb, t % nb, g % mv));
            let dq = &q.cats[t % nb];
            NatTransf {
                comp: (0..x.comp.len() * y.comp.len())
                    .map(|i| x.comp[i / y.comp.len()] * dq.n_arr() + y.comp[i % y.comp.len()])
                    .collect(),
            }
        },
    )
}
