use std::collections::HashMap;

use super::ends::{check_base, exponential, Exponential, Twisted};
use super::{end_eps, CatDiagram, Flavor};
use crate::error::{Error, Result};
use crate::fincat::{find_isomorphism, functor_category, solve, FinCat, Functor, Generator, NatTransf};
use crate::fincat::{PresentedCategory, Presentation, Word};
use crate::report::Report;
use crate::two_cat::Fin2Cat;

/// The ε-coend of `T : op_dual(A) × A → Cat` as a presented category.
///
/// Objects are pairs `(a, A)` with `a ∈ T(A,A)`. Besides the arrows of each
/// `T(A,A)` there is a generator `c[f,z] : (T(f,A)z, A) → (T(B,f)z, B)` for
/// every `f: A → B` and `z ∈ T(B,A)`.
#[derive(Clone, Debug)]
pub struct CoendResult {
    pub pres: PresentedCategory,
    /// Presentation object of `(a, A)` is `offsets[A] + a`.
    pub offsets: Vec<usize>,
    /// Generator of each non-identity arrow of `T(A,A)`.
    pub arrow_gen: Vec<Vec<Option<usize>>>,
    /// Generator `c[f,z]`, keyed by `(A, B, f, z)`.
    pub cell_gen: HashMap<(usize, usize, usize, usize), usize>,
}

impl CoendResult {
    /// The coprojection `T(A,A) → ∫^A T`, once the presentation is solved.
    pub fn injection(&self, t: &CatDiagram, x: usize) -> Option<Functor> {
        let real = self.pres.realization.as_ref()?;
        let n = self.offsets.len();
        let c = &t.cats[x * n + x];
        let obj = (0..c.n_obj()).map(|o| self.offsets[x] + o).collect();
        let arr = (0..c.n_arr())
            .map(|f| match self.arrow_gen[x][f] {
                Some(g) => real.generator_image[g],
                None => real.cat.ids[self.offsets[x] + c.src(f)],
            })
            .collect();
        Some(Functor { obj, arr })
    }
}

/// `(X, Y) ↦ Cat(T(Y,X), E)`; its ε-end is the category of ε-codicones
/// from `T` to `E`.
pub fn codicone_diagram(a: &Fin2Cat, t: &CatDiagram, e: &FinCat) -> Result<CatDiagram> {
    let n = a.n_obj();
    let base = a.op_dual().product(a);
    let id = Functor::identity(e);
    let idn = NatTransf::identity(&id, e);
    let pre = |z: usize, z2: usize, w: usize| {
        let (x, y, x2, y2) = (z / n, z % n, z2 / n, z2 % n);
        let m = a.hom(y, y2).n_obj();
        let (u, v) = (w / m, w % m);
        t.f1(y2 * n + x2, y * n + x, v * a.hom(x2, x).n_obj() + u).clone()
    };
    let pre2 = |z: usize, z2: usize, w: usize| {
        let (x, y, x2, y2) = (z / n, z % n, z2 / n, z2 % n);
        let m = a.hom(y, y2).n_arr();
        let (mu, nu) = (w / m, w % m);
        t.f2(y2 * n + x2, y * n + x, nu * a.hom(x2, x).n_arr() + mu).clone()
    };
    let post = |_, _, _| id.clone();
    let post2 = |_, _, _| idn.clone();
    let (d, _) = exponential(Exponential {
        base: &base,
        src: (0..n * n).map(|z| t.cats[(z % n) * n + z / n].clone()).collect(),
        tgt: vec![e.clone(); n * n],
        pre: &pre,
        post: &post,
        pre2: &pre2,
        post2: &post2,
    })?;
    Ok(d)
}

pub fn coend_eps(a: &Fin2Cat, t: &CatDiagram, flavor: &Flavor, cap: usize) -> Result<CoendResult> {
    check_base(a, t)?;
    if *flavor == Flavor::Strict {
        return Err(Error::PreconditionFailed(
            "strict coends identify objects and have no presentation of this form".into(),
        ));
    }
    let tw = Twisted { a, t };
    let n = a.n_obj();
    let mut p = Presentation::default();
    let mut offsets = Vec::with_capacity(n);
    for x in 0..n {
        offsets.push(p.objects.len());
        let c = tw.cat(x, x);
        for o in 0..c.n_obj() {
            p.objects.push(format!("({},{})", c.objects[o], a.objects[x]));
            p.identity_names.push(format!("{}@{}", c.arrows[c.ids[o]].name, a.objects[x]));
        }
    }
    let mut arrow_gen = Vec::with_capacity(n);
    for x in 0..n {
        let c = tw.cat(x, x);
        let mut g = vec![None; c.n_arr()];
        for f in 0..c.n_arr() {
            if !c.is_identity(f) {
                g[f] = Some(p.generators.len());
                p.generators.push(Generator {
                    name: format!("{}@{}", c.arrows[f].name, a.objects[x]),
                    src: offsets[x] + c.src(f),
                    tgt: offsets[x] + c.tgt(f),
                });
            }
        }
        arrow_gen.push(g);
    }
    let is_id = |x: usize, y: usize, f: usize| x == y && f == a.id1(x);
    let mut cell_gen = HashMap::new();
    let mut inv_gen = HashMap::new();
    for (x, y, f) in a.cells1() {
        if is_id(x, y, f) {
            continue;
        }
        let inv = flavor.needs_iso(a, x, y, f);
        for z in 0..tw.cat(y, x).n_obj() {
            let s = offsets[x] + tw.left(x, y, x, f).obj[z];
            let e = offsets[y] + tw.right(y, x, y, f).obj[z];
            let name = format!("c[{},{}]", a.cell1_name(x, y, f), tw.cat(y, x).objects[z]);
            cell_gen.insert((x, y, f, z), p.generators.len());
            p.generators.push(Generator { name: name.clone(), src: s, tgt: e });
            if inv {
                inv_gen.insert((x, y, f, z), p.generators.len());
                p.generators.push(Generator { name: format!("{name}^-1"), src: e, tgt: s });
            }
        }
    }
    let arr = |x: usize, phi: usize| {
        let c = tw.cat(x, x);
        match arrow_gen[x][phi] {
            Some(g) => Word { start: offsets[x] + c.src(phi), gens: vec![g] },
            None => Word::empty(offsets[x] + c.src(phi)),
        }
    };
    let cw = |x: usize, y: usize, f: usize, z: usize| match cell_gen.get(&(x, y, f, z)) {
        Some(&g) => Word { start: p.generators[g].src, gens: vec![g] },
        None => Word::empty(offsets[x] + z),
    };
    let mut rels = Vec::new();
    for x in 0..n {
        let c = tw.cat(x, x);
        for (g, f, h) in c.composable_pairs() {
            if !c.is_identity(g) && !c.is_identity(f) {
                rels.push((arr(x, f).then(&arr(x, g)), arr(x, h)));
            }
        }
    }
    for (x, y, f) in a.cells1() {
        if is_id(x, y, f) {
            continue;
        }
        let tyx = tw.cat(y, x);
        // naturality in z
        for zeta in 0..tyx.n_arr() {
            if tyx.is_identity(zeta) {
                continue;
            }
            let (z, z2) = (tyx.src(zeta), tyx.tgt(zeta));
            let l = arr(x, tw.left(x, y, x, f).arr[zeta]).then(&cw(x, y, f, z2));
            let r = cw(x, y, f, z).then(&arr(y, tw.right(y, x, y, f).arr[zeta]));
            rels.push((l, r));
        }
        // composition with a second 1-cell
        for w in 0..n {
            for g in 0..a.hom(y, w).n_obj() {
                if is_id(y, w, g) {
                    continue;
                }
                let gf = a.comp1(x, y, w, g, f);
                for z in 0..tw.cat(w, x).n_obj() {
                    let l = cw(x, w, gf, z);
                    let r = cw(x, y, f, tw.left(y, w, x, g).obj[z]).then(&cw(y, w, g, tw.right(w, x, y, f).obj[z]));
                    rels.push((l, r));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let h = a.hom(x, y);
            for gamma in 0..h.n_arr() {
                if h.is_identity(gamma) {
                    continue;
                }
                let (f, f2) = (h.src(gamma), h.tgt(gamma));
                for z in 0..tw.cat(y, x).n_obj() {
                    let l = arr(x, tw.left2(x, y, x, gamma).comp[z]).then(&cw(x, y, f2, z));
                    let r = cw(x, y, f, z).then(&arr(y, tw.right2(y, x, y, gamma).comp[z]));
                    rels.push((l, r));
                }
            }
        }
    }
    for (&k, &ig) in &inv_gen {
        let g = cell_gen[&k];
        let (s, e) = (p.generators[g].src, p.generators[g].tgt);
        rels.push((Word { start: s, gens: vec![g, ig] }, Word::empty(s)));
        rels.push((Word { start: e, gens: vec![ig, g] }, Word::empty(e)));
    }
    rels.retain(|(l, r)| l != r);
    rels.sort();
    rels.dedup();
    p.relations = rels;
    let pres = solve(p, cap)?;
    Ok(CoendResult { pres, offsets, arrow_gen, cell_gen })
}

/// Compares `Cat(∫^A T, E)` with the ε-end of [`codicone_diagram`] for each
/// test category `E`.
pub fn certify_coend(a: &Fin2Cat, t: &CatDiagram, flavor: &Flavor, res: &CoendResult, tests: &[FinCat]) -> Result<Report> {
    let mut r = Report::new();
    let Some(real) = res.pres.cat() else {
        r.push("the coend presentation is undecided at the cap");
        return Ok(r);
    };
    for e in tests {
        let fc = functor_category(real, e)?;
        let s = codicone_diagram(a, t, e)?;
        let end = end_eps(a, &s, flavor)?;
        if find_isomorphism(&fc.cat, &end.cat)?.is_none() {
            r.push(format!(
                "Cat(coend, {}) has {} objects but there are {} codicones",
                e.objects.join(","),
                fc.cat.n_obj(),
                end.cat.n_obj()
            ));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{product_category, Status};

    fn tests() -> Vec<FinCat> {
        vec![FinCat::terminal(), FinCat::two(), FinCat::iso()]
    }

    #[test]
    fn coend_over_the_point_is_the_category() {
        let pt = Fin2Cat::terminal();
        let t = CatDiagram::constant(&pt.op_dual().product(&pt), &FinCat::two());
        let c = coend_eps(&pt, &t, &Flavor::Lax, 8).unwrap();
        assert!(find_isomorphism(c.pres.cat().unwrap(), &FinCat::two()).unwrap().is_some());
    }

    #[test]
    fn lax_coend_of_a_constant_over_two_is_a_product() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let t = CatDiagram::constant(&two.op_dual().product(&two), &FinCat::two());
        let c = coend_eps(&two, &t, &Flavor::Lax, 10).unwrap();
        assert_eq!(c.pres.status, Status::Finite);
        let (prod, _, _) = product_category(&FinCat::two(), &FinCat::two());
        assert!(find_isomorphism(c.pres.cat().unwrap(), &prod).unwrap().is_some());
        assert!(certify_coend(&two, &t, &Flavor::Lax, &c, &tests()).unwrap().is_ok());
        let inj = c.injection(&t, 1).unwrap();
        assert!(inj.check(&FinCat::two(), c.pres.cat().unwrap()).is_ok());
    }

    #[test]
    fn pseudo_coend_inverts_the_structure() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let t = CatDiagram::constant(&two.op_dual().product(&two), &FinCat::two());
        let c = coend_eps(&two, &t, &Flavor::Pseudo, 10).unwrap();
        let (prod, _, _) = product_category(&FinCat::two(), &FinCat::iso());
        assert!(find_isomorphism(c.pres.cat().unwrap(), &prod).unwrap().is_some());
        assert!(certify_coend(&two, &t, &Flavor::Pseudo, &c, &tests()).unwrap().is_ok());
    }

    #[test]
    fn strict_coend_is_refused() {
        let pt = Fin2Cat::terminal();
        let t = CatDiagram::constant(&pt.op_dual().product(&pt), &FinCat::two());
        assert!(matches!(coend_eps(&pt, &t, &Flavor::Strict, 8), Err(Error::PreconditionFailed(_))));
    }
}
