use std::cell::Cell;
use std::collections::HashMap;

use super::{CatDiagram, Flavor};
use crate::budget::Counter;
use crate::error::{Error, Result};
use crate::fincat::{functor_category, Arrow, FinCat, Functor, FunctorCat, NatTransf};
use crate::report::Report;
use crate::two_cat::Fin2Cat;

/// Data of a diagram `Z ↦ Cat(S_Z, T_Z)`: a 1-cell `u: Z → Z'` acts by
/// `H ↦ post_u ∘ H ∘ pre_u` with `pre_u: S_Z' → S_Z`, `post_u: T_Z → T_Z'`.
pub(super) struct Exponential<'a> {
    pub(super) base: &'a Fin2Cat,
    pub(super) src: Vec<FinCat>,
    pub(super) tgt: Vec<FinCat>,
    pub(super) pre: &'a dyn Fn(usize, usize, usize) -> Functor,
    pub(super) post: &'a dyn Fn(usize, usize, usize) -> Functor,
    pub(super) pre2: &'a dyn Fn(usize, usize, usize) -> NatTransf,
    pub(super) post2: &'a dyn Fn(usize, usize, usize) -> NatTransf,
}

pub(super) fn exponential(e: Exponential) -> Result<(CatDiagram, Vec<FunctorCat>)> {
    let base = e.base;
    let n = base.n_obj();
    let fcs: Vec<FunctorCat> = (0..n).map(|z| functor_category(&e.src[z], &e.tgt[z])).collect::<Result<_>>()?;
    let cats: Vec<FinCat> = fcs.iter().map(|f| f.cat.clone()).collect();
    let missing = Cell::new(false);
    let d = CatDiagram::from_fn(
        base,
        cats,
        |z, z2, u| {
            let (pre, post) = ((e.pre)(z, z2, u), (e.post)(z, z2, u));
            let (from, to) = (&fcs[z], &fcs[z2]);
            let obj: Vec<usize> = from
                .functors
                .iter()
                .map(|h| to.functor_index(&post.after(h).after(&pre)).unwrap_or_else(|| {
                    missing.set(true);
                    0
                }))
                .collect();
            let arr = from
                .trans
                .iter()
                .map(|(s, t, tau)| {
                    let comp = pre.obj.iter().map(|&x| post.arr[tau.comp[x]]).collect();
                    to.trans_index(obj[*s], obj[*t], &NatTransf { comp }).unwrap_or_else(|| {
                        missing.set(true);
                        0
                    })
                })
                .collect();
            Functor { obj, arr }
        },
        |z, z2, mu| {
            let h = base.hom(z, z2);
            let (u, u2) = (h.src(mu), h.tgt(mu));
            let (pre, post2f) = ((e.pre)(z, z2, u), (e.post)(z, z2, u2));
            let (pre_u2, post) = ((e.pre)(z, z2, u2), (e.post)(z, z2, u));
            let (pm, qm) = ((e.pre2)(z, z2, mu), (e.post2)(z, z2, mu));
            let (from, to) = (&fcs[z], &fcs[z2]);
            let tz2 = &e.tgt[z2];
            let comp = from
                .functors
                .iter()
                .map(|hf| {
                    let s = post.after(hf).after(&pre);
                    let t = post2f.after(hf).after(&pre_u2);
                    let c: Vec<usize> = (0..e.src[z2].n_obj())
                        .map(|x| tz2.compose(qm.comp[hf.obj[pre_u2.obj[x]]], post.arr[hf.arr[pm.comp[x]]]))
                        .collect();
                    match (to.functor_index(&s), to.functor_index(&t)) {
                        (Some(i), Some(j)) => to.trans_index(i, j, &NatTransf { comp: c }).unwrap_or_else(|| {
                            missing.set(true);
                            0
                        }),
                        _ => {
                            missing.set(true);
                            0
                        }
                    }
                })
                .collect();
            NatTransf { comp }
        },
    );
    if missing.get() {
        return Err(Error::Inconsistency("exponential diagram action left the functor category".into()));
    }
    Ok((d, fcs))
}

/// `(X, Y) ↦ Cat(PX, QY)` on `op_dual(A) × A`.
pub fn hom_diagram(p: &CatDiagram, q: &CatDiagram) -> Result<(CatDiagram, Vec<FunctorCat>)> {
    let a = &p.base;
    let n = a.n_obj();
    let base = a.op_dual().product(a);
    let split1 = |z: usize, z2: usize, u: usize| {
        let (x, y, x2, y2) = (z / n, z % n, z2 / n, z2 % n);
        let m = a.hom(y, y2).n_obj();
        (x, y, x2, y2, u / m, u % m)
    };
    let split2 = |z: usize, z2: usize, t: usize| {
        let (x, y, x2, y2) = (z / n, z % n, z2 / n, z2 % n);
        let m = a.hom(y, y2).n_arr();
        (x, y, x2, y2, t / m, t % m)
    };
    let pre = |z, z2, u| {
        let (x, _, x2, _, u1, _) = split1(z, z2, u);
        p.f1(x2, x, u1).clone()
    };
    let post = |z, z2, u| {
        let (_, y, _, y2, _, v) = split1(z, z2, u);
        q.f1(y, y2, v).clone()
    };
    let pre2 = |z, z2, t| {
        let (x, _, x2, _, mu, _) = split2(z, z2, t);
        p.f2(x2, x, mu).clone()
    };
    let post2 = |z, z2, t| {
        let (_, y, _, y2, _, nu) = split2(z, z2, t);
        q.f2(y, y2, nu).clone()
    };
    exponential(Exponential {
        base: &base,
        src: (0..n * n).map(|z| p.cats[z / n].clone()).collect(),
        tgt: (0..n * n).map(|z| q.cats[z % n].clone()).collect(),
        pre: &pre,
        post: &post,
        pre2: &pre2,
        post2: &post2,
    })
}

/// `X ↦ Cat(PX, E)` on `op_dual(A)`.
pub fn precompose_diagram(p: &CatDiagram, e: &FinCat) -> Result<(CatDiagram, Vec<FunctorCat>)> {
    let a = &p.base;
    let n = a.n_obj();
    let base = a.op_dual();
    let id = Functor::identity(e);
    let idn = NatTransf::identity(&id, e);
    let pre = |x, x2, u| p.f1(x2, x, u).clone();
    let post = |_, _, _| id.clone();
    let pre2 = |x, x2, t| p.f2(x2, x, t).clone();
    let post2 = |_, _, _| idn.clone();
    exponential(Exponential {
        base: &base,
        src: p.cats.clone(),
        tgt: vec![e.clone(); n],
        pre: &pre,
        post: &post,
        pre2: &pre2,
        post2: &post2,
    })
}

/// `X ↦ Cat(C, PX)` on `A`; this is also the cotensor `{C, P}`.
pub fn postcompose_diagram(c: &FinCat, p: &CatDiagram) -> Result<(CatDiagram, Vec<FunctorCat>)> {
    let a = &p.base;
    let n = a.n_obj();
    let id = Functor::identity(c);
    let idn = NatTransf::identity(&id, c);
    let pre = |_, _, _| id.clone();
    let post = |x, x2, u| p.f1(x, x2, u).clone();
    let pre2 = |_, _, _| idn.clone();
    let post2 = |x, x2, t| p.f2(x, x2, t).clone();
    exponential(Exponential {
        base: a,
        src: vec![c.clone(); n],
        tgt: p.cats.clone(),
        pre: &pre,
        post: &post,
        pre2: &pre2,
        post2: &post2,
    })
}

pub fn cotensor_diagram(c: &FinCat, p: &CatDiagram) -> Result<(CatDiagram, Vec<FunctorCat>)> {
    postcompose_diagram(c, p)
}

/// A dicone with vertex 𝟙: objects `x_A ∈ T(A,A)` and arrows
/// `θ_f : T(id,f)x_A → T(f,id)x_B` of `T(A,B)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dicone {
    pub xs: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
}

/// Index helpers for `T` on `op_dual(A) × A`.
pub(super) struct Twisted<'a> {
    pub(super) a: &'a Fin2Cat,
    pub(super) t: &'a CatDiagram,
}

impl Twisted<'_> {
    pub(super) fn n(&self) -> usize {
        self.a.n_obj()
    }

    pub(super) fn cat(&self, x: usize, y: usize) -> &FinCat {
        &self.t.cats[x * self.n() + y]
    }

    /// `T(id_A, f) : T(A, B) → T(A, C)` for `f: B → C`.
    pub(super) fn right(&self, a: usize, b: usize, c: usize, f: usize) -> &Functor {
        let n = self.n();
        let u = self.a.id1(a) * self.a.hom(b, c).n_obj() + f;
        self.t.f1(a * n + b, a * n + c, u)
    }

    /// `T(f, id_C) : T(B, C) → T(A, C)` for `f: A → B`.
    pub(super) fn left(&self, a: usize, b: usize, c: usize, f: usize) -> &Functor {
        let n = self.n();
        let u = f * self.a.hom(c, c).n_obj() + self.a.id1(c);
        self.t.f1(b * n + c, a * n + c, u)
    }

    /// `T(id_A, γ)` for a 2-cell `γ` of `hom(B, C)`.
    pub(super) fn right2(&self, a: usize, b: usize, c: usize, gamma: usize) -> &NatTransf {
        let n = self.n();
        let mu = self.a.hom(a, a).ids[self.a.id1(a)];
        self.t.f2(a * n + b, a * n + c, mu * self.a.hom(b, c).n_arr() + gamma)
    }

    /// `T(γ, id_C)` for a 2-cell `γ` of `hom(A, B)`.
    pub(super) fn left2(&self, a: usize, b: usize, c: usize, gamma: usize) -> &NatTransf {
        let n = self.n();
        let nu = self.a.hom(c, c).ids[self.a.id1(c)];
        self.t.f2(b * n + c, a * n + c, gamma * self.a.hom(c, c).n_arr() + nu)
    }

    pub(super) fn ends(&self, d: &Dicone, a: usize, b: usize, f: usize) -> (usize, usize) {
        (self.right(a, a, b, f).obj[d.xs[a]], self.left(a, b, b, f).obj[d.xs[b]])
    }

    fn ld1(&self, d: &Dicone, (a, b, c, f, g): (usize, usize, usize, usize, usize)) -> bool {
        let n = self.n();
        let gf = self.a.comp1(a, b, c, g, f);
        let tac = self.cat(a, c);
        let lhs = d.cells[a * n + c][gf];
        let rhs = tac.compose(self.left(a, b, c, f).arr[d.cells[b * n + c][g]], self.right(a, b, c, g).arr[d.cells[a * n + b][f]]);
        lhs == rhs
    }

    fn ld2(&self, d: &Dicone, (a, b, gamma): (usize, usize, usize)) -> bool {
        let n = self.n();
        let h = self.a.hom(a, b);
        let (f, g) = (h.src(gamma), h.tgt(gamma));
        let tab = self.cat(a, b);
        let l = tab.compose(self.left2(a, b, b, gamma).comp[d.xs[b]], d.cells[a * n + b][f]);
        let r = tab.compose(d.cells[a * n + b][g], self.right2(a, a, b, gamma).comp[d.xs[a]]);
        l == r
    }

    fn ldm(&self, d: &Dicone, d2: &Dicone, rho: &[usize], (a, b, f): (usize, usize, usize)) -> bool {
        let n = self.n();
        let tab = self.cat(a, b);
        let l = tab.compose(d2.cells[a * n + b][f], self.right(a, a, b, f).arr[rho[a]]);
        let r = tab.compose(self.left(a, b, b, f).arr[rho[b]], d.cells[a * n + b][f]);
        l == r
    }
}

pub(super) fn check_base(a: &Fin2Cat, t: &CatDiagram) -> Result<()> {
    if t.base != a.op_dual().product(a) {
        return Err(Error::PreconditionFailed("the diagram is not defined on op(A) × A".into()));
    }
    if t.is_pseudo() {
        return Err(Error::PreconditionFailed("ends are computed for strict diagrams only".into()));
    }
    Ok(())
}

/// Every violated dinaturality axiom of a dicone with vertex 𝟙.
pub fn check_dicone(a: &Fin2Cat, t: &CatDiagram, d: &Dicone, flavor: &Flavor) -> Report {
    let mut r = Report::new();
    let tw = Twisted { a, t };
    let n = a.n_obj();
    if d.xs.len() != n || d.cells.len() != n * n {
        r.push("dicone tables have the wrong size");
        return r;
    }
    for x in 0..n {
        if d.xs[x] >= tw.cat(x, x).n_obj() {
            r.push(format!("component at {} is not an object", a.objects[x]));
            return r;
        }
    }
    for (x, y, f) in a.cells1() {
        let (s, tt) = tw.ends(d, x, y, f);
        let c = d.cells[x * n + y][f];
        let tc = tw.cat(x, y);
        if c >= tc.n_arr() || tc.src(c) != s || tc.tgt(c) != tt {
            r.push(format!("structural arrow at {} has the wrong type", a.cell1_name(x, y, f)));
        }
    }
    if !r.is_ok() {
        return r;
    }
    for x in 0..n {
        if !tw.cat(x, x).is_identity(d.cells[x * n + x][a.id1(x)]) {
            r.push(format!("(LD0, {})", a.cell1_name(x, x, a.id1(x))));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for f in 0..a.hom(x, y).n_obj() {
                    for g in 0..a.hom(y, z).n_obj() {
                        if !tw.ld1(d, (x, y, z, f, g)) {
                            r.push(format!("(LD1, {}∘{})", a.cell1_name(y, z, g), a.cell1_name(x, y, f)));
                        }
                    }
                }
            }
            for gamma in 0..a.hom(x, y).n_arr() {
                if !tw.ld2(d, (x, y, gamma)) {
                    r.push(format!("(LD2, {})", a.cell2_name(x, y, gamma)));
                }
            }
        }
    }
    for (x, y, f) in a.cells1() {
        let tc = tw.cat(x, y);
        let c = d.cells[x * n + y][f];
        let ok = match flavor {
            Flavor::Strict => tc.is_identity(c),
            fl => !fl.needs_iso(a, x, y, f) || tc.is_iso(c),
        };
        if !ok {
            r.push(format!("(flavor, {})", a.cell1_name(x, y, f)));
        }
    }
    r
}

/// Every violated axiom of a morphism of dicones `ρ: d ⇒ d2`, with
/// `ρ_A : x_A → x'_A` in `T(A,A)`.
pub fn check_dicone_morphism(a: &Fin2Cat, t: &CatDiagram, d: &Dicone, d2: &Dicone, rho: &[usize]) -> Report {
    let mut r = Report::new();
    let tw = Twisted { a, t };
    let n = a.n_obj();
    if rho.len() != n {
        r.push("morphism has the wrong number of components");
        return r;
    }
    for x in 0..n {
        let c = tw.cat(x, x);
        if rho[x] >= c.n_arr() || c.src(rho[x]) != d.xs[x] || c.tgt(rho[x]) != d2.xs[x] {
            r.push(format!("component at {} has the wrong type", a.objects[x]));
        }
    }
    if !r.is_ok() {
        return r;
    }
    for cell in a.cells1() {
        if !tw.ldm(d, d2, rho, cell) {
            r.push(format!("(LDM, {})", a.cell1_name(cell.0, cell.1, cell.2)));
        }
    }
    r
}

/// The category of ε-dicones with vertex 𝟙 and their morphisms.
#[derive(Clone, Debug)]
pub struct EndCat {
    pub cat: FinCat,
    pub objects: Vec<Dicone>,
    pub arrows: Vec<(usize, usize, Vec<usize>)>,
}

/// The ε-end of `T : op_dual(A) × A → Cat`, as a category.
pub fn end_eps(a: &Fin2Cat, t: &CatDiagram, flavor: &Flavor) -> Result<EndCat> {
    check_base(a, t)?;
    let tw = Twisted { a, t };
    let n = a.n_obj();
    let mut counter = Counter::new("dicones");
    let mut step = HashMap::new();
    let mut order = Vec::new();
    for (x, y, f) in a.cells1() {
        if x == y && f == a.id1(x) {
            step.insert((x, y, f), 0);
        } else {
            order.push((x, y, f));
            step.insert((x, y, f), order.len());
        }
    }
    let mut ld1_at = vec![Vec::new(); order.len() + 1];
    let mut ld2_at = vec![Vec::new(); order.len() + 1];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for f in 0..a.hom(x, y).n_obj() {
                    for g in 0..a.hom(y, z).n_obj() {
                        let gf = a.comp1(x, y, z, g, f);
                        let k = step[&(x, y, f)].max(step[&(y, z, g)]).max(step[&(x, z, gf)]);
                        ld1_at[k].push((x, y, z, f, g));
                    }
                }
            }
            let h = a.hom(x, y);
            for gamma in 0..h.n_arr() {
                if !h.is_identity(gamma) {
                    ld2_at[step[&(x, y, h.src(gamma))].max(step[&(x, y, h.tgt(gamma))])].push((x, y, gamma));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut d = Dicone {
        xs: vec![0; n],
        cells: (0..n * n).map(|i| vec![0; a.hom(i / n, i % n).n_obj()]).collect(),
    };
    let checks = |d: &Dicone, k: usize| ld2_at[k].iter().all(|&i| tw.ld2(d, i)) && ld1_at[k].iter().all(|&i| tw.ld1(d, i));
    #[allow(clippy::too_many_arguments)]
    fn cells(
        k: usize,
        d: &mut Dicone,
        tw: &Twisted,
        order: &[(usize, usize, usize)],
        flavor: &Flavor,
        checks: &dyn Fn(&Dicone, usize) -> bool,
        out: &mut Vec<Dicone>,
        counter: &mut Counter,
    ) -> Result<()> {
        if k == order.len() {
            out.push(d.clone());
            return Ok(());
        }
        let n = tw.n();
        let (x, y, f) = order[k];
        let (s, t) = tw.ends(d, x, y, f);
        let tc = tw.cat(x, y);
        let needs = flavor.needs_iso(tw.a, x, y, f);
        for &c in tc.hom(s, t) {
            counter.tick()?;
            let ok = match flavor {
                Flavor::Strict => tc.is_identity(c),
                _ => !needs || tc.is_iso(c),
            };
            if !ok {
                continue;
            }
            d.cells[x * n + y][f] = c;
            if checks(d, k + 1) {
                cells(k + 1, d, tw, order, flavor, checks, out, counter)?;
            }
        }
        Ok(())
    }
    let sizes: Vec<usize> = (0..n).map(|x| tw.cat(x, x).n_obj()).collect();
    if sizes.iter().all(|&s| s > 0) || n == 0 {
        let mut idx = vec![0usize; n];
        loop {
            counter.tick()?;
            d.xs.clone_from(&idx);
            for x in 0..n {
                d.cells[x * n + x][a.id1(x)] = tw.cat(x, x).ids[d.xs[x]];
            }
            if checks(&d, 0) {
                cells(0, &mut d, &tw, &order, flavor, &checks, &mut out, &mut counter)?;
            }
            // next tuple of vertex objects
            let mut i = 0;
            while i < n {
                idx[i] += 1;
                if idx[i] < sizes[i] {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out.sort();
    // morphisms of dicones
    let mut arrows = Vec::new();
    let mut ids = vec![0; out.len()];
    for (i, di) in out.iter().enumerate() {
        for (j, dj) in out.iter().enumerate() {
            let cands: Vec<&[usize]> = (0..n).map(|x| tw.cat(x, x).hom(di.xs[x], dj.xs[x])).collect();
            let mut rho = Vec::with_capacity(n);
            fn rec(
                x: usize,
                cands: &[&[usize]],
                rho: &mut Vec<usize>,
                tw: &Twisted,
                di: &Dicone,
                dj: &Dicone,
                found: &mut Vec<Vec<usize>>,
                counter: &mut Counter,
            ) -> Result<()> {
                if x == cands.len() {
                    found.push(rho.clone());
                    return Ok(());
                }
                for &c in cands[x] {
                    counter.tick()?;
                    rho.push(c);
                    let ok = tw.a.cells1().into_iter().filter(|&(p, q, _)| p.max(q) == x).all(|cell| tw.ldm(di, dj, rho, cell));
                    if ok {
                        rec(x + 1, cands, rho, tw, di, dj, found, counter)?;
                    }
                    rho.pop();
                }
                Ok(())
            }
            let mut found = Vec::new();
            rec(0, &cands, &mut rho, &tw, di, dj, &mut found, &mut counter)?;
            for m in found {
                if i == j && m.iter().enumerate().all(|(x, &c)| tw.cat(x, x).is_identity(c)) {
                    ids[i] = arrows.len();
                }
                arrows.push((i, j, m));
            }
        }
    }
    let idx: HashMap<(usize, usize, Vec<usize>), usize> = arrows.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
    let names = arrows
        .iter()
        .enumerate()
        .map(|(k, (s, t, _))| Arrow { name: format!("r{k}:d{s}>d{t}"), src: *s, tgt: *t })
        .collect();
    let cat = FinCat::from_fn((0..out.len()).map(|i| format!("d{i}")).collect(), names, ids, |g, f| {
        let (s, _, ref mf) = arrows[f];
        let (_, t, ref mg) = arrows[g];
        let comp: Vec<usize> = (0..n).map(|x| tw.cat(x, x).compose(mg[x], mf[x])).collect();
        idx[&(s, t, comp)]
    });
    Ok(EndCat { cat, objects: out, arrows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::find_isomorphism;
    use crate::transforms::{hom_eps, Direction};
    use crate::two_cat::WideSub;

    #[test]
    fn end_over_the_point_is_the_category() {
        let pt = Fin2Cat::terminal();
        let t = CatDiagram::constant(&pt.op_dual().product(&pt), &FinCat::parallel_pair());
        let e = end_eps(&pt, &t, &Flavor::Lax).unwrap();
        assert!(find_isomorphism(&e.cat, &FinCat::parallel_pair()).unwrap().is_some());
    }

    #[test]
    fn end_of_hom_diagram_matches_hom_eps() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = CatDiagram::representable(&two, 0);
        let q = CatDiagram::constant(&two, &FinCat::two());
        let (t, _) = hom_diagram(&p, &q).unwrap();
        assert!(t.validate().is_ok(), "{}", t.validate());
        for fl in [Flavor::Strict, Flavor::Pseudo, Flavor::Sigma(WideSub::all(&two)), Flavor::Lax] {
            let e = end_eps(&two, &t, &fl).unwrap();
            let h = hom_eps(&p, &q, &fl, Direction::Lax).unwrap();
            assert!(find_isomorphism(&e.cat, &h.cat).unwrap().is_some(), "flavor {}", fl.label());
            for d in &e.objects {
                assert!(check_dicone(&two, &t, d, &fl).is_ok());
            }
        }
    }

    #[test]
    fn exponential_diagrams_validate() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = CatDiagram::representable(&two, 0);
        assert!(precompose_diagram(&p, &FinCat::two()).unwrap().0.validate().is_ok());
        assert!(postcompose_diagram(&FinCat::two(), &p).unwrap().0.validate().is_ok());
    }
}
