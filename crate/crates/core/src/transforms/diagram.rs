use std::collections::HashMap;

use crate::fincat::{FinCat, Functor, NatTransf};
use crate::report::Report;
use crate::two_cat::{Fin2Cat, TwoFunctor};

/// Structure cells of a pseudofunctor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoData {
    /// `α_A : id ⇒ P(id_A)`.
    pub alpha_obj: Vec<NatTransf>,
    /// `α_{f,g} : Pg∘Pf ⇒ P(gf)`, keyed by `(a, b, c, f, g)`.
    pub alpha_comp: HashMap<(usize, usize, usize, usize, usize), NatTransf>,
}

/// A 2-functor or pseudofunctor from a finite 2-category to Cat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatDiagram {
    pub base: Fin2Cat,
    pub cats: Vec<FinCat>,
    /// Per hom `a * n + b`, the functor of each 1-cell.
    pub on1: Vec<Vec<Functor>>,
    /// Per hom `a * n + b`, the natural transformation of each 2-cell.
    pub on2: Vec<Vec<NatTransf>>,
    pub pseudo: Option<PseudoData>,
}

impl CatDiagram {
    pub fn n(&self) -> usize {
        self.base.n_obj()
    }

    pub fn f1(&self, a: usize, b: usize, f: usize) -> &Functor {
        &self.on1[a * self.n() + b][f]
    }

    pub fn f2(&self, a: usize, b: usize, t: usize) -> &NatTransf {
        &self.on2[a * self.n() + b][t]
    }

    pub fn is_pseudo(&self) -> bool {
        self.pseudo.is_some()
    }

    /// `α_A`, the identity for strict diagrams.
    pub fn unit(&self, a: usize) -> NatTransf {
        match &self.pseudo {
            Some(p) => p.alpha_obj[a].clone(),
            None => NatTransf::identity(&Functor::identity(&self.cats[a]), &self.cats[a]),
        }
    }

    /// `α_{f,g}`, the identity for strict diagrams.
    pub fn mult(&self, a: usize, b: usize, c: usize, f: usize, g: usize) -> NatTransf {
        match &self.pseudo {
            Some(p) => p.alpha_comp[&(a, b, c, f, g)].clone(),
            None => {
                let gf = self.base.comp1(a, b, c, g, f);
                NatTransf::identity(self.f1(a, c, gf), &self.cats[c])
            }
        }
    }

    /// Builds a strict diagram from per-cell rules.
    pub fn from_fn(
        base: &Fin2Cat,
        cats: Vec<FinCat>,
        mut on1: impl FnMut(usize, usize, usize) -> Functor,
        mut on2: impl FnMut(usize, usize, usize) -> NatTransf,
    ) -> CatDiagram {
        let n = base.n_obj();
        let mut t1 = Vec::with_capacity(n * n);
        let mut t2 = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                t1.push((0..base.hom(a, b).n_obj()).map(|f| on1(a, b, f)).collect());
                t2.push((0..base.hom(a, b).n_arr()).map(|t| on2(a, b, t)).collect());
            }
        }
        CatDiagram { base: base.clone(), cats, on1: t1, on2: t2, pseudo: None }
    }

    /// The constant diagram at `c`.
    pub fn constant(base: &Fin2Cat, c: &FinCat) -> CatDiagram {
        let id = Functor::identity(c);
        let idn = NatTransf::identity(&id, c);
        CatDiagram::from_fn(base, vec![c.clone(); base.n_obj()], |_, _, _| id.clone(), |_, _, _| idn.clone())
    }

    /// `hom(a, −)`; the representable on `op_dual` is `hom(−, a)`.
    pub fn representable(base: &Fin2Cat, a: usize) -> CatDiagram {
        let cats = (0..base.n_obj()).map(|b| base.hom(a, b).clone()).collect();
        CatDiagram::from_fn(
            base,
            cats,
            |b, c, g| Functor {
                obj: (0..base.hom(a, b).n_obj()).map(|f| base.comp1(a, b, c, g, f)).collect(),
                arr: (0..base.hom(a, b).n_arr()).map(|t| base.whisker_left(a, b, c, g, t)).collect(),
            },
            |b, c, gamma| NatTransf {
                comp: (0..base.hom(a, b).n_obj()).map(|f| base.whisker_right(a, b, c, gamma, f)).collect(),
            },
        )
    }

    /// `P∘H` for a 2-functor `h: src → base`.
    pub fn pullback(&self, h: &TwoFunctor, src: &Fin2Cat) -> CatDiagram {
        let n = src.n_obj();
        let cats = h.obj.iter().map(|&o| self.cats[o].clone()).collect();
        let mut d = CatDiagram::from_fn(
            src,
            cats,
            |a, b, f| self.f1(h.obj[a], h.obj[b], h.cell1(src, a, b, f)).clone(),
            |a, b, t| self.f2(h.obj[a], h.obj[b], h.cell2(src, a, b, t)).clone(),
        );
        if let Some(p) = &self.pseudo {
            let alpha_obj = h.obj.iter().map(|&o| p.alpha_obj[o].clone()).collect();
            let mut alpha_comp = HashMap::new();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for f in 0..src.hom(a, b).n_obj() {
                            for g in 0..src.hom(b, c).n_obj() {
                                let key = (h.obj[a], h.obj[b], h.obj[c], h.cell1(src, a, b, f), h.cell1(src, b, c, g));
                                alpha_comp.insert((a, b, c, f, g), p.alpha_comp[&key].clone());
                            }
                        }
                    }
                }
            }
            d.pseudo = Some(PseudoData { alpha_obj, alpha_comp });
        }
        d
    }

    /// The same strict diagram presented as a pseudofunctor with identity
    /// structure cells.
    pub fn as_pseudo(&self) -> CatDiagram {
        let n = self.n();
        let mut alpha_comp = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for f in 0..self.base.hom(a, b).n_obj() {
                        for g in 0..self.base.hom(b, c).n_obj() {
                            alpha_comp.insert((a, b, c, f, g), self.mult(a, b, c, f, g));
                        }
                    }
                }
            }
        }
        let alpha_obj = (0..n).map(|a| self.unit(a)).collect();
        CatDiagram { pseudo: Some(PseudoData { alpha_obj, alpha_comp }), ..self.clone() }
    }

    /// Forgets pseudo structure that consists of identities only.
    pub fn strict_if_trivial(&self) -> Option<CatDiagram> {
        let p = match &self.pseudo {
            None => return Some(self.clone()),
            Some(p) => p,
        };
        let trivial = p.alpha_obj.iter().enumerate().all(|(a, t)| t.is_identity(&self.cats[a]))
            && p.alpha_comp.iter().all(|(&(_, _, c, _, _), t)| t.is_identity(&self.cats[c]));
        let strict = CatDiagram { pseudo: None, ..self.clone() };
        (trivial && strict.validate().is_ok()).then_some(strict)
    }

    /// Every violated axiom: functoriality for strict diagrams, LF0/LF1
    /// and naturality of the structure cells for pseudofunctors.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let base = &self.base;
        let n = base.n_obj();
        if self.cats.len() != n || self.on1.len() != n * n || self.on2.len() != n * n {
            r.push("diagram tables have the wrong size");
            return r;
        }
        for (a, c) in self.cats.iter().enumerate() {
            r.extend(&format!("P({})", base.objects[a]), c.validate());
        }
        if !r.is_ok() {
            return r;
        }
        for a in 0..n {
            for b in 0..n {
                let h = base.hom(a, b);
                if self.on1[a * n + b].len() != h.n_obj() || self.on2[a * n + b].len() != h.n_arr() {
                    r.push(format!("hom({},{}) has the wrong number of images", base.objects[a], base.objects[b]));
                    return r;
                }
                for f in 0..h.n_obj() {
                    r.extend(&format!("P({})", h.objects[f]), self.f1(a, b, f).check(&self.cats[a], &self.cats[b]));
                }
                if !r.is_ok() {
                    return r;
                }
                for t in 0..h.n_arr() {
                    let (s, tt) = (h.src(t), h.tgt(t));
                    let rep = self.f2(a, b, t).check(&self.cats[a], &self.cats[b], self.f1(a, b, s), self.f1(a, b, tt));
                    r.extend(&format!("P({})", h.arrows[t].name), rep);
                }
            }
        }
        if !r.is_ok() {
            return r;
        }
        // 2-cells, functorially within each hom
        for a in 0..n {
            for b in 0..n {
                let h = base.hom(a, b);
                let pb = &self.cats[b];
                for f in 0..h.n_obj() {
                    if !self.f2(a, b, h.ids[f]).is_identity(pb) {
                        r.push(format!("P does not preserve the identity 2-cell of {}", h.objects[f]));
                    }
                }
                for (g, f, gf) in h.composable_pairs() {
                    if self.f2(a, b, g).vcomp(self.f2(a, b, f), pb) != *self.f2(a, b, gf) {
                        r.push(format!(
                            "P does not preserve the vertical composite {}∘{}",
                            h.arrows[g].name, h.arrows[f].name
                        ));
                    }
                }
            }
        }
        match &self.pseudo {
            None => self.validate_strict(&mut r),
            Some(p) => self.validate_pseudo(p, &mut r),
        }
        r
    }

    fn validate_strict(&self, r: &mut Report) {
        let base = &self.base;
        let n = base.n_obj();
        for a in 0..n {
            if *self.f1(a, a, base.id1(a)) != Functor::identity(&self.cats[a]) {
                r.push(format!("P does not preserve the identity 1-cell of {}", base.objects[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc) = (base.hom(a, b), base.hom(b, c));
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            let gf = base.comp1(a, b, c, g, f);
                            if self.f1(b, c, g).after(self.f1(a, b, f)) != *self.f1(a, c, gf) {
                                r.push(format!("P does not preserve the composite {}∘{}", hbc.objects[g], hab.objects[f]));
                            }
                        }
                    }
                    for beta in 0..hbc.n_arr() {
                        for alpha in 0..hab.n_arr() {
                            let lhs = self.f2(a, c, base.comp2(a, b, c, beta, alpha));
                            let rhs = NatTransf::hcomp(
                                self.f2(b, c, beta),
                                self.f1(b, c, hbc.src(beta)),
                                self.f2(a, b, alpha),
                                self.f1(a, b, hab.tgt(alpha)),
                                &self.cats[c],
                            );
                            if *lhs != rhs {
                                r.push(format!(
                                    "P does not preserve the horizontal composite {}*{}",
                                    hbc.arrows[beta].name, hab.arrows[alpha].name
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    fn validate_pseudo(&self, p: &PseudoData, r: &mut Report) {
        let base = &self.base;
        let n = base.n_obj();
        if p.alpha_obj.len() != n {
            r.push("alpha_obj has the wrong size");
            return;
        }
        for a in 0..n {
            let pa = &self.cats[a];
            let id = Functor::identity(pa);
            let rep = p.alpha_obj[a].check(pa, pa, &id, self.f1(a, a, base.id1(a)));
            if !rep.is_ok() {
                r.extend(&format!("alpha_{}", base.objects[a]), rep);
            } else if !p.alpha_obj[a].is_iso(pa) {
                r.push(format!("alpha_{} is not invertible", base.objects[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for f in 0..base.hom(a, b).n_obj() {
                        for g in 0..base.hom(b, c).n_obj() {
                            let name = format!("alpha_{{{},{}}}", base.cell1_name(a, b, f), base.cell1_name(b, c, g));
                            let Some(t) = p.alpha_comp.get(&(a, b, c, f, g)) else {
                                r.push(format!("{name} is missing"));
                                continue;
                            };
                            let gf = base.comp1(a, b, c, g, f);
                            let src = self.f1(b, c, g).after(self.f1(a, b, f));
                            let rep = t.check(&self.cats[a], &self.cats[c], &src, self.f1(a, c, gf));
                            if !rep.is_ok() {
                                r.extend(&name, rep);
                            } else if !t.is_iso(&self.cats[c]) {
                                r.push(format!("{name} is not invertible"));
                            }
                        }
                    }
                }
            }
        }
        if !r.is_ok() {
            return;
        }
        // naturality of α_{f,g} in both 2-cell arguments
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc) = (base.hom(a, b), base.hom(b, c));
                    let pc = &self.cats[c];
                    for beta in 0..hbc.n_arr() {
                        for alpha in 0..hab.n_arr() {
                            let (f, f2) = (hab.src(alpha), hab.tgt(alpha));
                            let (g, g2) = (hbc.src(beta), hbc.tgt(beta));
                            let whiskered = NatTransf::hcomp(
                                self.f2(b, c, beta),
                                self.f1(b, c, g),
                                self.f2(a, b, alpha),
                                self.f1(a, b, f2),
                                pc,
                            );
                            let lhs = p.alpha_comp[&(a, b, c, f2, g2)].vcomp(&whiskered, pc);
                            let rhs = self.f2(a, c, base.comp2(a, b, c, beta, alpha)).vcomp(&p.alpha_comp[&(a, b, c, f, g)], pc);
                            if lhs != rhs {
                                r.push(format!(
                                    "alpha is not natural at the 2-cells {}, {}",
                                    hab.arrows[alpha].name, hbc.arrows[beta].name
                                ));
                            }
                        }
                    }
                }
            }
        }
        // LF0
        for a in 0..n {
            for b in 0..n {
                let pb = &self.cats[b];
                for f in 0..base.hom(a, b).n_obj() {
                    let pf = self.f1(a, b, f);
                    let left = &p.alpha_comp[&(a, b, b, f, base.id1(b))];
                    let right = &p.alpha_comp[&(a, a, b, base.id1(a), f)];
                    for x in 0..self.cats[a].n_obj() {
                        let l = pb.compose(left.comp[x], p.alpha_obj[b].comp[pf.obj[x]]);
                        let rr = pb.compose(right.comp[x], pf.arr[p.alpha_obj[a].comp[x]]);
                        if !pb.is_identity(l) || !pb.is_identity(rr) {
                            r.push(format!("LF0 fails at {} on {}", base.cell1_name(a, b, f), self.cats[a].objects[x]));
                        }
                    }
                }
            }
        }
        // LF1
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let pd = &self.cats[d];
                        for f in 0..base.hom(a, b).n_obj() {
                            for g in 0..base.hom(b, c).n_obj() {
                                for h in 0..base.hom(c, d).n_obj() {
                                    let gf = base.comp1(a, b, c, g, f);
                                    let hg = base.comp1(b, c, d, h, g);
                                    let ph = self.f1(c, d, h);
                                    let afg = &p.alpha_comp[&(a, b, c, f, g)];
                                    let agh = &p.alpha_comp[&(b, c, d, g, h)];
                                    let agf_h = &p.alpha_comp[&(a, c, d, gf, h)];
                                    let af_hg = &p.alpha_comp[&(a, b, d, f, hg)];
                                    let pf = self.f1(a, b, f);
                                    for x in 0..self.cats[a].n_obj() {
                                        let l = pd.compose(agf_h.comp[x], ph.arr[afg.comp[x]]);
                                        let rr = pd.compose(af_hg.comp[x], agh.comp[pf.obj[x]]);
                                        if l != rr {
                                            r.push(format!(
                                                "LF1 fails at ({}, {}, {}) on {}",
                                                base.cell1_name(a, b, f),
                                                base.cell1_name(b, c, g),
                                                base.cell1_name(c, d, h),
                                                self.cats[a].objects[x]
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_representable_diagrams_validate() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        assert!(CatDiagram::constant(&two, &FinCat::two()).validate().is_ok());
        for a in 0..2 {
            let r = CatDiagram::representable(&two, a);
            assert!(r.validate().is_ok());
            assert!(r.as_pseudo().validate().is_ok());
        }
        let h1 = CatDiagram::representable(&two, 1);
        assert_eq!(h1.cats[0].n_obj(), 0);
        assert_eq!(h1.cats[1].n_obj(), 1);
        let co = CatDiagram::representable(&two.op_dual(), 1);
        assert!(co.validate().is_ok());
        assert_eq!(co.cats[0].n_obj(), 1);
    }

    #[test]
    fn broken_functoriality_is_reported() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let mut d = CatDiagram::constant(&two, &FinCat::two());
        // send the identity 1-cell of 1 to the constant functor at 0
        let k = Functor::constant(&FinCat::two(), &FinCat::two(), 0);
        d.on2[3][0] = NatTransf::identity(&k, &FinCat::two());
        d.on1[3][0] = k;
        assert!(d.validate().mentions("identity 1-cell"));
    }
}
