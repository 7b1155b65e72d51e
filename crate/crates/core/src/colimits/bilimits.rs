use crate::error::{Error, Result};
use crate::fincat::{is_equivalence, EquivalenceReport, FinCat, Functor, NatTransf};
use crate::transforms::{hom_eps, CatDiagram, Direction, Flavor, HomCat, Transformation};
use crate::two_cat::{Builder, Fin2Cat, TwoFunctor};

/// The finite bilimit shapes: the nullary and binary biproducts, and the
/// biinserter, biequalizer, biisoinserter and biequifier of parallel cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Biterminal,
    Biproduct,
    Biinserter,
    Biequalizer,
    Biisoinserter,
    Biequifier,
}

impl Shape {
    pub const ALL: [Shape; 6] =
        [Shape::Biterminal, Shape::Biproduct, Shape::Biinserter, Shape::Biequalizer, Shape::Biisoinserter, Shape::Biequifier];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Biterminal => "biterminal",
            Shape::Biproduct => "biproduct",
            Shape::Biinserter => "biinserter",
            Shape::Biequalizer => "biequalizer",
            Shape::Biisoinserter => "biisoinserter",
            Shape::Biequifier => "biequifier",
        }
    }

    pub fn parse(s: &str) -> Option<Shape> {
        Shape::ALL.into_iter().find(|x| x.name() == s)
    }

    /// The indexing 2-category.
    pub fn base(self) -> Fin2Cat {
        match self {
            Shape::Biterminal => Fin2Cat::locally_discrete(&FinCat::empty()),
            Shape::Biproduct => Fin2Cat::locally_discrete(&FinCat::discrete(&["0", "1"])),
            Shape::Biinserter | Shape::Biequalizer | Shape::Biisoinserter => {
                Fin2Cat::locally_discrete(&FinCat::parallel_pair())
            }
            Shape::Biequifier => {
                let s = |v: &str| v.to_string();
                Builder {
                    objects: vec![s("0"), s("1")],
                    cells1: vec![
                        (s("id_0"), s("0"), s("0")),
                        (s("id_1"), s("1"), s("1")),
                        (s("f"), s("0"), s("1")),
                        (s("g"), s("0"), s("1")),
                    ],
                    identities1: vec![(s("0"), s("id_0")), (s("1"), s("id_1"))],
                    cells2: vec![(s("alpha"), s("f"), s("g")), (s("beta"), s("f"), s("g"))],
                    ..Builder::default()
                }
                .build()
                .expect("equifier shape")
            }
        }
    }

    /// The finite weight on [`Shape::base`].
    pub fn weight(self) -> CatDiagram {
        let j = self.base();
        let pick = |cat: FinCat| {
            let one = FinCat::terminal();
            let cats = vec![one.clone(), cat.clone()];
            // f picks object 0, g picks object 1
            CatDiagram::from_fn(
                &j,
                cats.clone(),
                |x, y, u| {
                    if x == y {
                        Functor::identity(&cats[x])
                    } else {
                        let o = if j.cell1_name(x, y, u) == "f" { 0 } else { 1 };
                        Functor { obj: vec![o], arr: vec![cat.ids[o]] }
                    }
                },
                |x, y, t| {
                    let u = j.hom(x, y).src(t);
                    if x == y {
                        NatTransf::identity(&Functor::identity(&cats[x]), &cats[x])
                    } else {
                        let o = if j.cell1_name(x, y, u) == "f" { 0 } else { 1 };
                        NatTransf { comp: vec![cat.ids[o]] }
                    }
                },
            )
        };
        match self {
            Shape::Biinserter => pick(FinCat::two()),
            Shape::Biisoinserter => pick(FinCat::iso()),
            _ => CatDiagram::constant(&j, &FinCat::terminal()),
        }
    }
}

/// A shape with its diagram in Cat.
#[derive(Clone, Debug)]
pub struct ShapeInstance {
    pub shape: Shape,
    pub weight: CatDiagram,
    pub diagram: CatDiagram,
}

/// Diagram on the shape base with `0 ↦ c`, `1 ↦ d`, `f ↦ f`, `g ↦ g`
/// and, for equifiers, `alpha ↦ a`, `beta ↦ b`.
fn parallel(shape: Shape, c: &FinCat, d: &FinCat, f: &Functor, g: &Functor, cells: Option<(&NatTransf, &NatTransf)>) -> ShapeInstance {
    let j = shape.base();
    let cats = vec![c.clone(), d.clone()];
    let diagram = CatDiagram::from_fn(
        &j,
        cats.clone(),
        |x, y, u| {
            if x == y {
                Functor::identity(&cats[x])
            } else if j.cell1_name(x, y, u) == "f" {
                f.clone()
            } else {
                g.clone()
            }
        },
        |x, y, t| {
            let h = j.hom(x, y);
            if x == y {
                return NatTransf::identity(&Functor::identity(&cats[x]), &cats[x]);
            }
            match (h.arrows[t].name.as_str(), cells) {
                ("alpha", Some((a, _))) => a.clone(),
                ("beta", Some((_, b))) => b.clone(),
                _ => {
                    let u = if h.objects[h.src(t)] == "f" { f } else { g };
                    NatTransf::identity(u, d)
                }
            }
        },
    );
    ShapeInstance { shape, weight: shape.weight(), diagram }
}

pub fn biproduct(c: &FinCat, d: &FinCat) -> ShapeInstance {
    let j = Shape::Biproduct.base();
    ShapeInstance {
        shape: Shape::Biproduct,
        weight: Shape::Biproduct.weight(),
        diagram: CatDiagram::from_fn(
            &j,
            vec![c.clone(), d.clone()],
            |x, _, _| Functor::identity(if x == 0 { c } else { d }),
            |x, _, _| {
                let e = if x == 0 { c } else { d };
                NatTransf::identity(&Functor::identity(e), e)
            },
        ),
    }
}

pub fn biinserter(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> ShapeInstance {
    parallel(Shape::Biinserter, c, d, f, g, None)
}

pub fn biequalizer(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> ShapeInstance {
    parallel(Shape::Biequalizer, c, d, f, g, None)
}

pub fn biisoinserter(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> ShapeInstance {
    parallel(Shape::Biisoinserter, c, d, f, g, None)
}

pub fn biequifier(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor, a: &NatTransf, b: &NatTransf) -> ShapeInstance {
    parallel(Shape::Biequifier, c, d, f, g, Some((a, b)))
}

/// The pseudolimit `{W, F}_p`, a choice of bilimit.
pub fn bilimit_cat(w: &CatDiagram, f: &CatDiagram) -> Result<HomCat> {
    if w.base != f.base {
        return Err(Error::PreconditionFailed("weight and diagram live on different bases".into()));
    }
    hom_eps(w, f, &Flavor::Pseudo, Direction::Lax)
}

/// A pseudocone `ξ: W ⇒ A(L, F−)` over a shape diagram `F: J → A`.
#[derive(Clone, Debug)]
pub struct BilimitCone {
    pub shape: Shape,
    pub diagram: TwoFunctor,
    pub apex: usize,
    pub xi: Transformation,
}

impl BilimitCone {
    /// `A(L, F−)` on the shape base.
    pub fn represented(&self, a: &Fin2Cat) -> CatDiagram {
        CatDiagram::representable(a, self.apex).pullback(&self.diagram, &self.shape.base())
    }
}

/// `s: P(L) → {W, PF}_p`, `s(c)_j(w) = P(ξ_j w)(c)`, with structure cells
/// `P((ξ_u)_w)_c`.
pub fn comparison_functor(p: &CatDiagram, a: &Fin2Cat, cone: &BilimitCone) -> Result<(Functor, HomCat)> {
    if p.is_pseudo() || p.base != *a {
        return Err(Error::PreconditionFailed("comparison functors take a strict diagram on the cone's base".into()));
    }
    let j = cone.shape.base();
    let w = cone.shape.weight();
    let m = j.n_obj();
    let fj = &cone.diagram;
    let l = cone.apex;
    let target = bilimit_cat(&w, &p.pullback(fj, &j))?;
    let pl = &p.cats[l];
    let image = |c: usize| -> Transformation {
        let comps = (0..m)
            .map(|x| {
                let (xi, tx) = (&cone.xi.comps[x], fj.obj[x]);
                Functor {
                    obj: xi.obj.iter().map(|&u| p.f1(l, tx, u).obj[c]).collect(),
                    arr: xi.arr.iter().map(|&t| p.f2(l, tx, t).comp[c]).collect(),
                }
            })
            .collect();
        let cells = (0..m * m)
            .map(|k| {
                let ty = fj.obj[k % m];
                cone.xi.cells[k]
                    .iter()
                    .map(|t| NatTransf { comp: t.comp.iter().map(|&g| p.f2(l, ty, g).comp[c]).collect() })
                    .collect()
            })
            .collect();
        Transformation { comps, cells }
    };
    let obj = (0..pl.n_obj())
        .map(|c| {
            target.index_of(&image(c)).ok_or_else(|| Error::Inconsistency("s(c) is not a pseudocone".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let arr = (0..pl.n_arr())
        .map(|g| {
            let m2: Vec<NatTransf> = (0..m)
                .map(|x| NatTransf {
                    comp: cone.xi.comps[x].obj.iter().map(|&u| p.f1(l, fj.obj[x], u).arr[g]).collect(),
                })
                .collect();
            target
                .arrow_of(obj[pl.src(g)], obj[pl.tgt(g)], &m2)
                .ok_or_else(|| Error::Inconsistency("s(γ) is not a modification".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Functor { obj, arr }, target))
}

/// Whether the comparison functor is an equivalence.
pub fn preserves_bilimit(p: &CatDiagram, a: &Fin2Cat, cone: &BilimitCone) -> Result<EquivalenceReport> {
    let (s, target) = comparison_functor(p, a, cone)?;
    Ok(is_equivalence(&s, &p.cats[cone.apex], &target.cat))
}

/// A bilimit cone in `a`: every representable `A(X, −)` preserves it.
pub fn is_bilimit_cone(a: &Fin2Cat, cone: &BilimitCone) -> Result<bool> {
    for x in 0..a.n_obj() {
        if !preserves_bilimit(&CatDiagram::representable(a, x), a, cone)?.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches apexes and pseudocones for a bilimit of `fj` in `a`.
pub fn find_bilimit_cone(a: &Fin2Cat, shape: Shape, fj: &TwoFunctor) -> Result<Option<BilimitCone>> {
    let j = shape.base();
    let w = shape.weight();
    for apex in 0..a.n_obj() {
        let rep = CatDiagram::representable(a, apex).pullback(fj, &j);
        for xi in hom_eps(&w, &rep, &Flavor::Pseudo, Direction::Lax)?.objects {
            let cone = BilimitCone { shape, diagram: fj.clone(), apex, xi };
            if is_bilimit_cone(a, &cone)? {
                return Ok(Some(cone));
            }
        }
    }
    Ok(None)
}

/// The shape diagram `0 ↦ x`, `1 ↦ y`, `f ↦ u`, `g ↦ v`, and for
/// equifiers `alpha, beta ↦ cells`. Unused cells are ignored.
pub(crate) fn shape_functor(a: &Fin2Cat, shape: Shape, x: usize, y: usize, u: usize, v: usize, cells: (usize, usize)) -> TwoFunctor {
    let j = shape.base();
    let obj = vec![x, y];
    let homs = (0..4)
        .map(|k| {
            let (s, t) = (k / 2, k % 2);
            let h = j.hom(s, t);
            let ha = a.hom(obj[s], obj[t]);
            let cell1 = |c: usize| {
                if s == t {
                    a.id1(obj[s])
                } else if h.objects[c] == "f" {
                    u
                } else {
                    v
                }
            };
            let o: Vec<usize> = (0..h.n_obj()).map(cell1).collect();
            let arr = (0..h.n_arr())
                .map(|t2| match h.arrows[t2].name.as_str() {
                    "alpha" => cells.0,
                    "beta" => cells.1,
                    _ => ha.ids[o[h.src(t2)]],
                })
                .collect();
            Functor { obj: o, arr }
        })
        .collect();
    TwoFunctor { obj, homs }
}

/// Every diagram of the given shape in `a`.
pub fn shape_instances(a: &Fin2Cat, shape: Shape) -> Vec<TwoFunctor> {
    let j = shape.base();
    let n = a.n_obj();
    let mut out = Vec::new();
    let build = |x, y, u, v, cells| shape_functor(a, shape, x, y, u, v, cells);
    match shape {
        Shape::Biterminal => out.push(TwoFunctor { obj: vec![], homs: vec![] }),
        Shape::Biproduct => {
            for x in 0..n {
                for y in 0..n {
                    out.push(build(x, y, 0, 0, (0, 0)));
                }
            }
        }
        Shape::Biinserter | Shape::Biequalizer | Shape::Biisoinserter => {
            for x in 0..n {
                for y in 0..n {
                    let h = a.hom(x, y);
                    for u in 0..h.n_obj() {
                        for v in 0..h.n_obj() {
                            out.push(build(x, y, u, v, (0, 0)));
                        }
                    }
                }
            }
        }
        Shape::Biequifier => {
            for x in 0..n {
                for y in 0..n {
                    let h = a.hom(x, y);
                    for u in 0..h.n_obj() {
                        for v in 0..h.n_obj() {
                            for &c1 in h.hom(u, v) {
                                for &c2 in h.hom(u, v) {
                                    out.push(build(x, y, u, v, (c1, c2)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.retain(|f| f.check(&j, a).is_ok());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{find_equivalence, find_isomorphism, product_category};
    use crate::fixtures;

    #[test]
    fn shapes_are_valid() {
        for s in Shape::ALL {
            let j = s.base();
            assert!(j.validate().is_ok(), "{}", s.name());
            assert!(s.weight().validate().is_ok(), "{}", s.name());
        }
    }

    #[test]
    fn biproduct_is_the_product() {
        for (c, d) in [(FinCat::two(), FinCat::iso()), (FinCat::parallel_pair(), FinCat::two())] {
            let inst = biproduct(&c, &d);
            let l = bilimit_cat(&inst.weight, &inst.diagram).unwrap();
            assert!(find_isomorphism(&l.cat, &product_category(&c, &d).0).unwrap().is_some());
        }
        let t = Shape::Biterminal;
        let l = bilimit_cat(&t.weight(), &CatDiagram::constant(&t.base(), &FinCat::two())).unwrap();
        assert_eq!(l.cat.n_obj(), 1);
    }

    #[test]
    fn biinserter_has_arrows_f_to_g() {
        // f, g : 𝟙 → 𝟚 picking 0 and 1: the inserter has one object
        let (one, two) = (FinCat::terminal(), FinCat::two());
        let f = Functor { obj: vec![0], arr: vec![two.ids[0]] };
        let g = Functor { obj: vec![1], arr: vec![two.ids[1]] };
        let ins = biinserter(&one, &two, &f, &g);
        assert!(ins.diagram.validate().is_ok());
        let l = bilimit_cat(&ins.weight, &ins.diagram).unwrap();
        assert!(find_equivalence(&l.cat, &FinCat::terminal()).unwrap().is_some());
        let rev = biinserter(&one, &two, &g, &f);
        let l = bilimit_cat(&rev.weight, &rev.diagram).unwrap();
        assert_eq!(l.cat.n_obj(), 0);
    }

    #[test]
    fn biequalizer_is_the_biisoinserter() {
        let (c, d) = (FinCat::two(), FinCat::iso());
        let fs = crate::fincat::all_functors(&c, &d).unwrap();
        for f in &fs {
            for g in &fs {
                let e = biequalizer(&c, &d, f, g);
                let i = biisoinserter(&c, &d, f, g);
                let le = bilimit_cat(&e.weight, &e.diagram).unwrap();
                let li = bilimit_cat(&i.weight, &i.diagram).unwrap();
                assert!(find_equivalence(&le.cat, &li.cat).unwrap().is_some());
            }
        }
    }

    #[test]
    fn meets_are_biproducts_in_the_diamond() {
        let a = fixtures::diamond();
        for fj in shape_instances(&a, Shape::Biproduct) {
            let cone = find_bilimit_cone(&a, Shape::Biproduct, &fj).unwrap().expect("meets exist");
            let (x, y) = (fj.obj[0], fj.obj[1]);
            let meet = if x == y { x } else if x == 0 || y == 0 || (x == 1 && y == 2) || (x == 2 && y == 1) { 0 } else if x == 3 { y } else { x };
            assert_eq!(cone.apex, meet);
        }
        let top = find_bilimit_cone(&a, Shape::Biterminal, &shape_instances(&a, Shape::Biterminal)[0]).unwrap().unwrap();
        assert_eq!(top.apex, 3);
    }

    #[test]
    fn representables_preserve_and_constant_empty_does_not() {
        let a = fixtures::diamond();
        let cones: Vec<BilimitCone> = Shape::ALL
            .iter()
            .flat_map(|&s| shape_instances(&a, s).into_iter().map(move |f| (s, f)))
            .filter_map(|(s, f)| find_bilimit_cone(&a, s, &f).unwrap())
            .collect();
        assert!(!cones.is_empty());
        for x in 0..a.n_obj() {
            let p = CatDiagram::representable(&a, x);
            for c in &cones {
                assert!(preserves_bilimit(&p, &a, c).unwrap().verdict);
            }
        }
        let empty = CatDiagram::constant(&a, &FinCat::empty());
        let terminal = cones.iter().find(|c| c.shape == Shape::Biterminal).unwrap();
        assert!(!preserves_bilimit(&empty, &a, terminal).unwrap().verdict);
        let binary = cones.iter().find(|c| c.shape == Shape::Biproduct).unwrap();
        assert!(preserves_bilimit(&empty, &a, binary).unwrap().verdict);
    }

    #[test]
    fn broken_cone_is_not_a_bilimit() {
        let a = fixtures::diamond();
        let fj = &shape_instances(&a, Shape::Biproduct)[1 * 4 + 2];
        let mut cone = find_bilimit_cone(&a, Shape::Biproduct, fj).unwrap().unwrap();
        // move the apex down is impossible; move it to a non-meet with a valid cone
        assert_eq!(cone.apex, 0);
        let rep = cone.represented(&a);
        assert!(rep.validate().is_ok());
        cone.apex = 0;
        let p = CatDiagram::constant(&a, &FinCat::two());
        let e = preserves_bilimit(&p, &a, &cone).unwrap();
        assert!(!e.verdict);
    }
}
