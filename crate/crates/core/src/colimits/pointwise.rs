use crate::error::{Error, Result};
use crate::fincat::{find_isomorphism, FinCat, Functor, NatTransf};
use crate::report::Report;
use crate::transforms::{hom_eps, CatDiagram, Direction, Flavor, HomCat, Transformation};
use crate::two_cat::{Fin2Cat, TwoFunctor};

/// `(c, d) ↦ (d, c)` from `d × c` to `c × d`.
fn swap_functor(c: &Fin2Cat, d: &Fin2Cat) -> TwoFunctor {
    let (nc, nd) = (c.n_obj(), d.n_obj());
    let src = d.product(c);
    let n = nc * nd;
    let obj = (0..n).map(|p| (p % nc) * nd + p / nc).collect();
    let homs = (0..n * n)
        .map(|k| {
            let (p, q) = (k / n, k % n);
            let (pd, pc, qd, qc) = (p / nc, p % nc, q / nc, q % nc);
            let (hd, hc) = (d.hom(pd, qd), c.hom(pc, qc));
            let h = src.hom(p, q);
            Functor {
                obj: (0..h.n_obj()).map(|i| (i % hc.n_obj()) * hd.n_obj() + i / hc.n_obj()).collect(),
                arr: (0..h.n_arr()).map(|i| (i % hc.n_arr()) * hd.n_arr() + i / hc.n_arr()).collect(),
            }
        })
        .collect();
    TwoFunctor { obj, homs }
}

/// `F∘swap` on `d × c` for a diagram `F` on `c × d`.
pub fn swap_diagram(f: &CatDiagram, c: &Fin2Cat, d: &Fin2Cat) -> CatDiagram {
    f.pullback(&swap_functor(c, d), &d.product(c))
}

/// `D' ↦ Hom_ε(X, F(−, D'))` as a diagram on `d`, for strict `F` on
/// `c × d`. Arrows act by postcomposition with the strict
/// transformations `F(−, v)`.
pub fn family_diagram(f: &CatDiagram, c: &Fin2Cat, d: &Fin2Cat, x: &CatDiagram, flavor: &Flavor) -> Result<(CatDiagram, Vec<HomCat>)> {
    if f.is_pseudo() {
        return Err(Error::PreconditionFailed("pointwise families need a strict diagram".into()));
    }
    if f.base != c.product(d) || x.base != *c {
        return Err(Error::PreconditionFailed("diagram bases do not match".into()));
    }
    let (nc, nd) = (c.n_obj(), d.n_obj());
    let at = |cc: usize, dd: usize| cc * nd + dd;
    // 1-cell (u, v) of the product hom
    let pair1 = |d0: usize, d1: usize, u: usize, v: usize| u * d.hom(d0, d1).n_obj() + v;
    let pair2 = |d0: usize, d1: usize, s: usize, t: usize| s * d.hom(d0, d1).n_arr() + t;
    let slice = |dd: usize| -> CatDiagram {
        let cats = (0..nc).map(|cc| f.cats[at(cc, dd)].clone()).collect();
        CatDiagram::from_fn(
            c,
            cats,
            |a, b, u| f.f1(at(a, dd), at(b, dd), pair1(dd, dd, u, d.id1(dd))).clone(),
            |a, b, t| {
                let idv = d.id2(dd, dd, d.id1(dd));
                f.f2(at(a, dd), at(b, dd), pair2(dd, dd, t, idv)).clone()
            },
        )
    };
    let homs = (0..nd).map(|dd| hom_eps(x, &slice(dd), flavor, Direction::Lax)).collect::<Result<Vec<_>>>()?;
    let lost = || Error::Inconsistency("postcomposition left the hom-category".into());
    let mut on1 = Vec::with_capacity(nd * nd);
    let mut on2 = Vec::with_capacity(nd * nd);
    for d0 in 0..nd {
        for d1 in 0..nd {
            let (h0, h1) = (&homs[d0], &homs[d1]);
            let sigma = |cc: usize, v: usize| f.f1(at(cc, d0), at(cc, d1), pair1(d0, d1, c.id1(cc), v));
            let mut funcs = Vec::new();
            for v in 0..d.hom(d0, d1).n_obj() {
                let obj = h0
                    .objects
                    .iter()
                    .map(|th| {
                        let comps = (0..nc).map(|cc| sigma(cc, v).after(&th.comps[cc])).collect();
                        let cells = (0..nc * nc)
                            .map(|k| {
                                th.cells[k]
                                    .iter()
                                    .map(|t| NatTransf { comp: t.comp.iter().map(|&g| sigma(k % nc, v).arr[g]).collect() })
                                    .collect()
                            })
                            .collect();
                        h1.index_of(&Transformation { comps, cells }).ok_or_else(lost)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let arr = h0
                    .arrows
                    .iter()
                    .map(|(s, t, m)| {
                        let m2: Vec<NatTransf> = (0..nc)
                            .map(|cc| NatTransf { comp: m[cc].comp.iter().map(|&g| sigma(cc, v).arr[g]).collect() })
                            .collect();
                        h1.arrow_of(obj[*s], obj[*t], &m2).ok_or_else(lost)
                    })
                    .collect::<Result<Vec<_>>>()?;
                funcs.push(Functor { obj, arr });
            }
            let hd = d.hom(d0, d1);
            let mut cells = Vec::new();
            for g in 0..hd.n_arr() {
                let comp = h0
                    .objects
                    .iter()
                    .enumerate()
                    .map(|(i, th)| {
                        let m: Vec<NatTransf> = (0..nc)
                            .map(|cc| {
                                let idc = c.id2(cc, cc, c.id1(cc));
                                let fg = f.f2(at(cc, d0), at(cc, d1), pair2(d0, d1, idc, g));
                                NatTransf { comp: th.comps[cc].obj.iter().map(|&y| fg.comp[y]).collect() }
                            })
                            .collect();
                        let (s, t) = (funcs[hd.src(g)].obj[i], funcs[hd.tgt(g)].obj[i]);
                        h1.arrow_of(s, t, &m).ok_or_else(lost)
                    })
                    .collect::<Result<Vec<_>>>()?;
                cells.push(NatTransf { comp });
            }
            on1.push(funcs);
            on2.push(cells);
        }
    }
    let cats: Vec<FinCat> = homs.iter().map(|h| h.cat.clone()).collect();
    Ok((CatDiagram { base: d.clone(), cats, on1, on2, pseudo: None }, homs))
}

fn reject_excluded(alpha: &Flavor, beta: &Flavor) -> Result<()> {
    if matches!(alpha, Flavor::Strict) && !matches!(beta, Flavor::Strict) {
        return Err(Error::PreconditionFailed("strict limits of non-strict families are not computed pointwise".into()));
    }
    Ok(())
}

/// Checks that the α-limit `L = {W, F(−, B')}_α`, a diagram on `b`, has
/// `Hom_β(X, L) ≅ {W, Hom_β(X, F)}_α` for every test weight `X` on `b`
/// (the representables and the constant point).
pub fn pointwise_limit_check(w: &CatDiagram, f: &CatDiagram, a: &Fin2Cat, b: &Fin2Cat, alpha: &Flavor, beta: &Flavor) -> Result<Report> {
    reject_excluded(alpha, beta)?;
    let (l, _) = family_diagram(f, a, b, w, alpha)?;
    let swapped = swap_diagram(f, a, b);
    let mut tests: Vec<(String, CatDiagram)> =
        (0..b.n_obj()).map(|y| (format!("hom({},-)", b.objects[y]), CatDiagram::representable(b, y))).collect();
    tests.push(("1".into(), CatDiagram::constant(b, &FinCat::terminal())));
    let mut r = Report::new();
    for (name, x) in tests {
        let left = hom_eps(&x, &l, beta, Direction::Lax)?;
        let (fam, _) = family_diagram(&swapped, b, a, &x, beta)?;
        let right = hom_eps(w, &fam, alpha, Direction::Lax)?;
        if find_isomorphism(&left.cat, &right.cat)?.is_none() {
            r.push(format!("test weight {name}: {} vs {} objects", left.cat.n_obj(), right.cat.n_obj()));
        }
    }
    Ok(r)
}

/// `{W_l, {W_r, F}_β}_α ≅ {W_r, {W_l, F}_α}_β` for `F` on `a × b`.
pub fn interchange_check(
    wl: &CatDiagram,
    wr: &CatDiagram,
    f: &CatDiagram,
    a: &Fin2Cat,
    b: &Fin2Cat,
    alpha: &Flavor,
    beta: &Flavor,
) -> Result<bool> {
    reject_excluded(alpha, beta)?;
    reject_excluded(beta, alpha)?;
    let (inner_r, _) = family_diagram(&swap_diagram(f, a, b), b, a, wr, beta)?;
    let left = hom_eps(wl, &inner_r, alpha, Direction::Lax)?;
    let (inner_l, _) = family_diagram(f, a, b, wl, alpha)?;
    let right = hom_eps(wr, &inner_l, beta, Direction::Lax)?;
    Ok(find_isomorphism(&left.cat, &right.cat)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn swap_is_involutive_on_cells() {
        let (a, b) = (fixtures::two(), fixtures::free_cell());
        let s = swap_functor(&a, &b);
        assert!(s.check(&b.product(&a), &a.product(&b)).is_ok());
        let back = swap_functor(&b, &a);
        let both = back.after(&s, &b.product(&a), &a.product(&b));
        assert_eq!(both, TwoFunctor::identity(&b.product(&a)));
    }

    #[test]
    fn families_are_diagrams() {
        let (a, b) = (fixtures::two(), fixtures::two());
        let f = fixtures::product_diagram(&a, &b, &fixtures::pick_zero(), &CatDiagram::representable(&b, 0));
        assert!(f.validate().is_ok(), "{}", f.validate());
        for flavor in [Flavor::Strict, Flavor::Pseudo, Flavor::Lax] {
            let (l, _) = family_diagram(&f, &a, &b, &CatDiagram::constant(&a, &FinCat::terminal()), &flavor).unwrap();
            assert!(l.validate().is_ok(), "{}", l.validate());
        }
    }

    #[test]
    fn limits_are_pointwise() {
        let (a, b) = (fixtures::two(), fixtures::two());
        let f = fixtures::product_diagram(&a, &b, &fixtures::pick_zero(), &CatDiagram::constant(&b, &FinCat::two()));
        let w = CatDiagram::representable(&a, 0);
        for (alpha, beta) in [(Flavor::Strict, Flavor::Strict), (Flavor::Lax, Flavor::Strict), (Flavor::Lax, Flavor::Pseudo), (Flavor::Pseudo, Flavor::Lax)] {
            let r = pointwise_limit_check(&w, &f, &a, &b, &alpha, &beta).unwrap();
            assert!(r.is_ok(), "{} {}: {r}", alpha.label(), beta.label());
        }
        assert!(matches!(
            pointwise_limit_check(&w, &f, &a, &b, &Flavor::Strict, &Flavor::Lax),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn limits_interchange() {
        let (a, b) = (fixtures::two(), fixtures::discrete_pair());
        let f = fixtures::product_diagram(&a, &b, &CatDiagram::constant(&a, &FinCat::two()), &CatDiagram::constant(&b, &FinCat::iso()));
        let wl = CatDiagram::constant(&a, &FinCat::terminal());
        let wr = CatDiagram::constant(&b, &FinCat::terminal());
        for (alpha, beta) in [(Flavor::Lax, Flavor::Lax), (Flavor::Pseudo, Flavor::Lax), (Flavor::Strict, Flavor::Strict)] {
            assert!(interchange_check(&wl, &wr, &f, &a, &b, &alpha, &beta).unwrap());
        }
    }
}
