//! Finite strict 2-categories, wide 1-subcategories, duals and π₀.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{is_equivalence, is_isomorphism, product_category, Arrow, FinCat, Functor, NONE};
use crate::report::Report;

/// A finite strict 2-category. The hom-category `hom(a, b)` has the 1-cells
/// `a → b` as objects and the 2-cells between them as arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin2Cat {
    pub objects: Vec<String>,
    homs: Vec<FinCat>,
    id1: Vec<usize>,
    // per (a, b, c): g * |hom(a,b)| + f  ↦  g∘f
    comp1: Vec<Vec<usize>>,
    // per (a, b, c): β * |2-cells of hom(a,b)| + α  ↦  β*α
    comp2: Vec<Vec<usize>>,
}

impl Fin2Cat {
    /// Assembles a 2-category from hom-categories and composition rules.
    /// `comp1(a, b, c, g, f)` and `comp2(a, b, c, β, α)` give horizontal
    /// composites of cells `f, α` in `hom(a, b)` with `g, β` in `hom(b, c)`.
    pub fn from_parts(
        objects: Vec<String>,
        homs: Vec<FinCat>,
        id1: Vec<usize>,
        mut comp1: impl FnMut(usize, usize, usize, usize, usize) -> usize,
        mut comp2: impl FnMut(usize, usize, usize, usize, usize) -> usize,
    ) -> Fin2Cat {
        let n = objects.len();
        let mut t1 = Vec::with_capacity(n * n * n);
        let mut t2 = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc) = (&homs[a * n + b], &homs[b * n + c]);
                    let mut e1 = Vec::with_capacity(hab.n_obj() * hbc.n_obj());
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            e1.push(comp1(a, b, c, g, f));
                        }
                    }
                    let mut e2 = Vec::with_capacity(hab.n_arr() * hbc.n_arr());
                    for beta in 0..hbc.n_arr() {
                        for alpha in 0..hab.n_arr() {
                            e2.push(comp2(a, b, c, beta, alpha));
                        }
                    }
                    t1.push(e1);
                    t2.push(e2);
                }
            }
        }
        Fin2Cat { objects, homs, id1, comp1: t1, comp2: t2 }
    }

    /// A category seen as a 2-category with identity 2-cells only.
    pub fn locally_discrete(c: &FinCat) -> Fin2Cat {
        let n = c.n_obj();
        let mut local = vec![NONE; c.n_arr()];
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let cells = c.hom(a, b);
                for (i, &f) in cells.iter().enumerate() {
                    local[f] = i;
                }
                let names: Vec<&str> = cells.iter().map(|&f| c.arrows[f].name.as_str()).collect();
                homs.push(discrete_named(&names));
            }
        }
        let id1 = (0..n).map(|a| local[c.ids[a]]).collect();
        Fin2Cat::from_parts(
            c.objects.clone(),
            homs,
            id1,
            |a, b, cc, g, f| local[c.compose(c.hom(b, cc)[g], c.hom(a, b)[f])],
            |a, b, cc, g, f| local[c.compose(c.hom(b, cc)[g], c.hom(a, b)[f])],
        )
    }

    pub fn terminal() -> Fin2Cat {
        Fin2Cat::locally_discrete(&FinCat::terminal())
    }

    pub fn n_obj(&self) -> usize {
        self.objects.len()
    }

    pub fn obj_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, a: usize, b: usize) -> &FinCat {
        &self.homs[a * self.n_obj() + b]
    }

    pub fn id1(&self, a: usize) -> usize {
        self.id1[a]
    }

    /// Identity 2-cell on a 1-cell.
    pub fn id2(&self, a: usize, b: usize, f: usize) -> usize {
        self.hom(a, b).ids[f]
    }

    pub fn comp1(&self, a: usize, b: usize, c: usize, g: usize, f: usize) -> usize {
        let n = self.n_obj();
        self.comp1[(a * n + b) * n + c][g * self.hom(a, b).n_obj() + f]
    }

    pub fn comp2(&self, a: usize, b: usize, c: usize, beta: usize, alpha: usize) -> usize {
        let n = self.n_obj();
        self.comp2[(a * n + b) * n + c][beta * self.hom(a, b).n_arr() + alpha]
    }

    /// `g α` for a 1-cell `g: b → c` and a 2-cell `α` in `hom(a, b)`.
    pub fn whisker_left(&self, a: usize, b: usize, c: usize, g: usize, alpha: usize) -> usize {
        self.comp2(a, b, c, self.id2(b, c, g), alpha)
    }

    /// `β f` for a 2-cell `β` in `hom(b, c)` and a 1-cell `f: a → b`.
    pub fn whisker_right(&self, a: usize, b: usize, c: usize, beta: usize, f: usize) -> usize {
        self.comp2(a, b, c, beta, self.id2(a, b, f))
    }

    pub fn vcomp(&self, a: usize, b: usize, beta: usize, alpha: usize) -> usize {
        self.hom(a, b).compose(beta, alpha)
    }

    /// All 1-cells as `(source, target, local index)`.
    pub fn cells1(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n_obj();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for f in 0..self.hom(a, b).n_obj() {
                    out.push((a, b, f));
                }
            }
        }
        out
    }

    /// All 2-cells as `(source, target, local index)`.
    pub fn cells2(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n_obj();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for t in 0..self.hom(a, b).n_arr() {
                    out.push((a, b, t));
                }
            }
        }
        out
    }

    pub fn cell1_name(&self, a: usize, b: usize, f: usize) -> &str {
        &self.hom(a, b).objects[f]
    }

    pub fn cell2_name(&self, a: usize, b: usize, t: usize) -> &str {
        &self.hom(a, b).arrows[t].name
    }

    pub fn find_cell1(&self, name: &str) -> Option<(usize, usize, usize)> {
        self.cells1().into_iter().find(|&(a, b, f)| self.cell1_name(a, b, f) == name)
    }

    pub fn find_cell2(&self, name: &str) -> Option<(usize, usize, usize)> {
        self.cells2().into_iter().find(|&(a, b, t)| self.cell2_name(a, b, t) == name)
    }

    pub fn is_locally_discrete(&self) -> bool {
        self.homs.iter().all(|h| h.n_arr() == h.n_obj())
    }

    /// The underlying 1-category: all 1-cells, forgetting 2-cells.
    pub fn underlying(&self) -> (FinCat, HashMap<(usize, usize, usize), usize>) {
        let cells = self.cells1();
        let index: HashMap<(usize, usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let arrows = cells
            .iter()
            .map(|&(a, b, f)| Arrow { name: self.cell1_name(a, b, f).to_string(), src: a, tgt: b })
            .collect();
        let ids = (0..self.n_obj()).map(|a| index[&(a, a, self.id1[a])]).collect();
        let cat = FinCat::from_fn(self.objects.clone(), arrows, ids, |g, f| {
            let (a, b, ff) = cells[f];
            let (_, c, gg) = cells[g];
            index[&(a, c, self.comp1(a, b, c, gg, ff))]
        });
        (cat, index)
    }

    /// Every violated 2-category law, naming the offending cells.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let n = self.n_obj();
        if self.homs.len() != n * n || self.id1.len() != n {
            r.push("hom or identity tables have the wrong size");
            return r;
        }
        for a in 0..n {
            for b in 0..n {
                r.extend(&format!("hom({},{})", self.objects[a], self.objects[b]), self.hom(a, b).validate());
            }
        }
        for (i, o) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(o) {
                r.push(format!("duplicate object name {o}"));
            }
        }
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for (a, b, f) in self.cells1() {
            if seen.insert(self.cell1_name(a, b, f), ()).is_some() {
                r.push(format!("duplicate 1-cell name {}", self.cell1_name(a, b, f)));
            }
        }
        if !r.is_ok() {
            return r;
        }
        for a in 0..n {
            if self.id1[a] >= self.hom(a, a).n_obj() {
                r.push(format!("identity 1-cell of {} is missing", self.objects[a]));
                return r;
            }
        }
        // typing of both composition tables
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc, hac) = (self.hom(a, b), self.hom(b, c), self.hom(a, c));
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            if self.comp1(a, b, c, g, f) >= hac.n_obj() {
                                r.push(format!("composite of 1-cells {}∘{} is undefined", hbc.objects[g], hab.objects[f]));
                            }
                        }
                    }
                    if !r.is_ok() {
                        return r;
                    }
                    for beta in 0..hbc.n_arr() {
                        for alpha in 0..hab.n_arr() {
                            let h = self.comp2(a, b, c, beta, alpha);
                            let want_src = self.comp1(a, b, c, hbc.src(beta), hab.src(alpha));
                            let want_tgt = self.comp1(a, b, c, hbc.tgt(beta), hab.tgt(alpha));
                            if h >= hac.n_arr() || hac.src(h) != want_src || hac.tgt(h) != want_tgt {
                                r.push(format!(
                                    "horizontal composite {}*{} has the wrong type",
                                    hbc.arrows[beta].name, hab.arrows[alpha].name
                                ));
                            }
                        }
                    }
                }
            }
        }
        if !r.is_ok() {
            return r;
        }
        // units
        for a in 0..n {
            for b in 0..n {
                let hab = self.hom(a, b);
                for f in 0..hab.n_obj() {
                    if self.comp1(a, b, b, self.id1[b], f) != f || self.comp1(a, a, b, f, self.id1[a]) != f {
                        r.push(format!("unit law for 1-cell {}", hab.objects[f]));
                    }
                }
                let (ib, ia) = (self.id2(b, b, self.id1[b]), self.id2(a, a, self.id1[a]));
                for t in 0..hab.n_arr() {
                    if self.comp2(a, b, b, ib, t) != t || self.comp2(a, a, b, t, ia) != t {
                        r.push(format!("unit law for 2-cell {}", hab.arrows[t].name));
                    }
                }
            }
        }
        // functoriality of horizontal composition (identities and interchange)
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc) = (self.hom(a, b), self.hom(b, c));
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            let gf = self.comp1(a, b, c, g, f);
                            if self.comp2(a, b, c, hbc.ids[g], hab.ids[f]) != self.hom(a, c).ids[gf] {
                                r.push(format!("identity 2-cells: 1_{}*1_{} is not an identity", hbc.objects[g], hab.objects[f]));
                            }
                        }
                    }
                    for (b2, b1, _) in hbc.composable_pairs() {
                        for (a2, a1, _) in hab.composable_pairs() {
                            let lhs = self.comp2(a, b, c, hbc.compose(b2, b1), hab.compose(a2, a1));
                            let rhs = self.hom(a, c).compose(self.comp2(a, b, c, b2, a2), self.comp2(a, b, c, b1, a1));
                            if lhs != rhs {
                                r.push(format!(
                                    "interchange: ({}∘{})*({}∘{}) ≠ ({}*{})∘({}*{})",
                                    hbc.arrows[b2].name,
                                    hbc.arrows[b1].name,
                                    hab.arrows[a2].name,
                                    hab.arrows[a1].name,
                                    hbc.arrows[b2].name,
                                    hab.arrows[a2].name,
                                    hbc.arrows[b1].name,
                                    hab.arrows[a1].name
                                ));
                            }
                        }
                    }
                }
            }
        }
        // associativity, on 1-cells and on 2-cells
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (hab, hbc, hcd) = (self.hom(a, b), self.hom(b, c), self.hom(c, d));
                        for h in 0..hcd.n_obj() {
                            for g in 0..hbc.n_obj() {
                                for f in 0..hab.n_obj() {
                                    let l = self.comp1(a, c, d, h, self.comp1(a, b, c, g, f));
                                    let rr = self.comp1(a, b, d, self.comp1(b, c, d, h, g), f);
                                    if l != rr {
                                        r.push(format!(
                                            "associativity of 1-cells ({}, {}, {})",
                                            hcd.objects[h], hbc.objects[g], hab.objects[f]
                                        ));
                                    }
                                }
                            }
                        }
                        for h in 0..hcd.n_arr() {
                            for g in 0..hbc.n_arr() {
                                for f in 0..hab.n_arr() {
                                    let l = self.comp2(a, c, d, h, self.comp2(a, b, c, g, f));
                                    let rr = self.comp2(a, b, d, self.comp2(b, c, d, h, g), f);
                                    if l != rr {
                                        r.push(format!(
                                            "associativity of 2-cells ({}, {}, {})",
                                            hcd.arrows[h].name, hbc.arrows[g].name, hab.arrows[f].name
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// Overwrites one composite of 1-cells. Used for mutated fixtures.
    pub fn with_comp1_entry(mut self, a: usize, b: usize, c: usize, g: usize, f: usize, value: usize) -> Fin2Cat {
        let n = self.n_obj();
        let nf = self.hom(a, b).n_obj();
        self.comp1[(a * n + b) * n + c][g * nf + f] = value;
        self
    }

    /// Overwrites one horizontal composite of 2-cells. Used for mutated
    /// fixtures.
    pub fn with_comp2_entry(mut self, a: usize, b: usize, c: usize, beta: usize, alpha: usize, value: usize) -> Fin2Cat {
        let n = self.n_obj();
        let na = self.hom(a, b).n_arr();
        self.comp2[(a * n + b) * n + c][beta * na + alpha] = value;
        self
    }

    /// Reverses 1-cells, keeps 2-cells.
    pub fn op_dual(&self) -> Fin2Cat {
        let n = self.n_obj();
        let homs = (0..n * n).map(|i| self.homs[(i % n) * n + i / n].clone()).collect();
        Fin2Cat::from_parts(
            self.objects.clone(),
            homs,
            self.id1.clone(),
            |a, b, c, g, f| self.comp1(c, b, a, f, g),
            |a, b, c, g, f| self.comp2(c, b, a, f, g),
        )
    }

    /// Reverses 2-cells, keeps 1-cells.
    pub fn co_dual(&self) -> Fin2Cat {
        Fin2Cat {
            objects: self.objects.clone(),
            homs: self.homs.iter().map(FinCat::op).collect(),
            id1: self.id1.clone(),
            comp1: self.comp1.clone(),
            comp2: self.comp2.clone(),
        }
    }

    /// Quotients every hom-category by its connected components.
    pub fn pi0(&self) -> Result<Pi0> {
        let n = self.n_obj();
        let mut class = Vec::with_capacity(n * n);
        let mut arrows = Vec::new();
        let mut first = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let h = self.hom(a, b);
                let comps = h.connected_components();
                let mut cls = vec![NONE; h.n_obj()];
                first.push(arrows.len());
                for comp in &comps {
                    for &f in comp {
                        cls[f] = arrows.len();
                    }
                    let name = comps_name(h, comp);
                    arrows.push((Arrow { name, src: a, tgt: b }, comp[0]));
                }
                class.push(cls);
            }
        }
        let ids: Vec<usize> = (0..n).map(|a| class[a * n + a][self.id1[a]]).collect();
        // well-definedness: every representative pair lands in one class
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (hab, hbc) = (self.hom(a, b), self.hom(b, c));
                    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            let key = (class[b * n + c][g], class[a * n + b][f]);
                            let val = class[a * n + c][self.comp1(a, b, c, g, f)];
                            if *seen.entry(key).or_insert(val) != val {
                                return Err(Error::Inconsistency(format!(
                                    "π₀ composition is not well defined at {}∘{}",
                                    hbc.objects[g], hab.objects[f]
                                )));
                            }
                        }
                    }
                }
            }
        }
        let reps: Vec<usize> = arrows.iter().map(|(_, r)| *r).collect();
        let ends: Vec<(usize, usize)> = arrows.iter().map(|(a, _)| (a.src, a.tgt)).collect();
        let cat = FinCat::from_fn(self.objects.clone(), arrows.into_iter().map(|(a, _)| a).collect(), ids, |g, f| {
            let (a, b) = ends[f];
            let c = ends[g].1;
            class[a * n + c][self.comp1(a, b, c, reps[g], reps[f])]
        });
        Ok(Pi0 { cat, class })
    }

    /// Cartesian product of 2-categories; object `(x, y)` has index
    /// `x * |b| + y` and hom-categories are products of hom-categories.
    pub fn product(&self, other: &Fin2Cat) -> Fin2Cat {
        let (na, nb) = (self.n_obj(), other.n_obj());
        let n = na * nb;
        let mut objects = Vec::with_capacity(n);
        for x in &self.objects {
            for y in &other.objects {
                objects.push(format!("({x},{y})"));
            }
        }
        let mut homs = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                homs.push(product_category(self.hom(p / nb, q / nb), other.hom(p % nb, q % nb)).0);
            }
        }
        let id1 = (0..n).map(|p| self.id1[p / nb] * other.hom(p % nb, p % nb).n_obj() + other.id1[p % nb]).collect();
        let split = |p: usize| (p / nb, p % nb);
        Fin2Cat::from_parts(
            objects,
            homs,
            id1,
            |p, q, r, g, f| {
                let ((p1, p2), (q1, q2), (r1, r2)) = (split(p), split(q), split(r));
                let mf = other.hom(p2, q2).n_obj();
                let mg = other.hom(q2, r2).n_obj();
                let mr = other.hom(p2, r2).n_obj();
                self.comp1(p1, q1, r1, g / mg, f / mf) * mr + other.comp1(p2, q2, r2, g % mg, f % mf)
            },
            |p, q, r, g, f| {
                let ((p1, p2), (q1, q2), (r1, r2)) = (split(p), split(q), split(r));
                let mf = other.hom(p2, q2).n_arr();
                let mg = other.hom(q2, r2).n_arr();
                let mr = other.hom(p2, r2).n_arr();
                self.comp2(p1, q1, r1, g / mg, f / mf) * mr + other.comp2(p2, q2, r2, g % mg, f % mf)
            },
        )
    }
}

fn comps_name(h: &FinCat, comp: &[usize]) -> String {
    if comp.len() == 1 {
        h.objects[comp[0]].clone()
    } else {
        format!("[{}]", comp.iter().map(|&f| h.objects[f].as_str()).collect::<Vec<_>>().join("~"))
    }
}

/// A discrete category whose identity arrows carry the object names.
pub(crate) fn discrete_named(names: &[&str]) -> FinCat {
    let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let arrows = names.iter().enumerate().map(|(i, s)| Arrow { name: format!("1_{s}"), src: i, tgt: i }).collect();
    FinCat::from_fn(objects, arrows, (0..names.len()).collect(), |_, f| f)
}

/// π₀ of a 2-category with the class of each 1-cell.
#[derive(Clone, Debug)]
pub struct Pi0 {
    pub cat: FinCat,
    /// Per hom `a * n + b`: class (arrow of `cat`) of each 1-cell.
    pub class: Vec<Vec<usize>>,
}

/// A wide 1-subcategory Σ, as one flag per 1-cell of each hom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WideSub {
    pub cells: Vec<Vec<bool>>,
}

impl WideSub {
    /// The underlying category A₀: every 1-cell.
    pub fn all(a: &Fin2Cat) -> WideSub {
        let n = a.n_obj();
        WideSub { cells: (0..n * n).map(|i| vec![true; a.homs[i].n_obj()]).collect() }
    }

    /// Identities only, A_id.
    pub fn identities(a: &Fin2Cat) -> WideSub {
        let n = a.n_obj();
        let mut s = WideSub { cells: (0..n * n).map(|i| vec![false; a.homs[i].n_obj()]).collect() };
        for x in 0..n {
            s.cells[x * n + x][a.id1[x]] = true;
        }
        s
    }

    /// The least wide subcategory containing the named 1-cells.
    pub fn generated_by(a: &Fin2Cat, names: &[String]) -> Result<WideSub> {
        let mut s = WideSub::identities(a);
        for name in names {
            let (x, y, f) = a.find_cell1(name).ok_or_else(|| Error::Invalid(format!("unknown 1-cell {name}")))?;
            s.cells[x * a.n_obj() + y][f] = true;
        }
        s.close(a);
        Ok(s)
    }

    /// Exactly the named 1-cells; `validate` reports missing closure.
    pub fn from_names(a: &Fin2Cat, names: &[String]) -> Result<WideSub> {
        let n = a.n_obj();
        let mut s = WideSub { cells: (0..n * n).map(|i| vec![false; a.homs[i].n_obj()]).collect() };
        for name in names {
            let (x, y, f) = a.find_cell1(name).ok_or_else(|| Error::Invalid(format!("unknown 1-cell {name}")))?;
            s.cells[x * n + y][f] = true;
        }
        Ok(s)
    }

    pub fn from_fn(a: &Fin2Cat, keep: impl Fn(usize, usize, usize) -> bool) -> WideSub {
        let n = a.n_obj();
        WideSub {
            cells: (0..n * n).map(|i| (0..a.homs[i].n_obj()).map(|f| keep(i / n, i % n, f)).collect()).collect(),
        }
    }

    pub fn contains(&self, a: &Fin2Cat, x: usize, y: usize, f: usize) -> bool {
        self.cells[x * a.n_obj() + y][f]
    }

    pub fn close(&mut self, a: &Fin2Cat) {
        let n = a.n_obj();
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for g in 0..a.hom(y, z).n_obj() {
                            for f in 0..a.hom(x, y).n_obj() {
                                if self.cells[y * n + z][g] && self.cells[x * n + y][f] {
                                    let h = a.comp1(x, y, z, g, f);
                                    if !self.cells[x * n + z][h] {
                                        self.cells[x * n + z][h] = true;
                                        changed = true;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    pub fn validate(&self, a: &Fin2Cat) -> Report {
        let mut r = Report::new();
        let n = a.n_obj();
        if self.cells.len() != n * n || (0..n * n).any(|i| self.cells[i].len() != a.homs[i].n_obj()) {
            r.push("Σ has the wrong shape");
            return r;
        }
        for x in 0..n {
            if !self.cells[x * n + x][a.id1[x]] {
                r.push(format!("Σ misses the identity of {}", a.objects[x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for g in 0..a.hom(y, z).n_obj() {
                        for f in 0..a.hom(x, y).n_obj() {
                            if self.cells[y * n + z][g] && self.cells[x * n + y][f] && !self.cells[x * n + z][a.comp1(x, y, z, g, f)] {
                                r.push(format!(
                                    "Σ is not closed under composition: {}∘{}",
                                    a.cell1_name(y, z, g),
                                    a.cell1_name(x, y, f)
                                ));
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// The same 1-cells viewed in `op_dual` or `co_dual`.
    pub fn op(&self, a: &Fin2Cat) -> WideSub {
        let n = a.n_obj();
        WideSub { cells: (0..n * n).map(|i| self.cells[(i % n) * n + i / n].clone()).collect() }
    }

    pub fn names(&self, a: &Fin2Cat) -> Vec<String> {
        a.cells1()
            .into_iter()
            .filter(|&(x, y, f)| self.contains(a, x, y, f))
            .map(|(x, y, f)| a.cell1_name(x, y, f).to_string())
            .collect()
    }

    pub fn count(&self) -> usize {
        self.cells.iter().map(|c| c.iter().filter(|&&b| b).count()).sum()
    }
}

/// A 2-category with a chosen wide subcategory.
#[derive(Clone, Debug)]
pub struct Marked2Cat {
    pub cat: Fin2Cat,
    pub sigma: WideSub,
}

impl Marked2Cat {
    pub fn new(cat: Fin2Cat, sigma: WideSub) -> Result<Marked2Cat> {
        let r = sigma.validate(&cat);
        if !r.is_ok() {
            return Err(Error::Invalid(r.to_string()));
        }
        Ok(Marked2Cat { cat, sigma })
    }

    pub fn op_dual(&self) -> Marked2Cat {
        Marked2Cat { cat: self.cat.op_dual(), sigma: self.sigma.op(&self.cat) }
    }
}

/// A strict 2-functor: an object map and one functor per hom-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFunctor {
    pub obj: Vec<usize>,
    /// Per hom `a * n + b` of the source.
    pub homs: Vec<Functor>,
}

impl TwoFunctor {
    pub fn identity(a: &Fin2Cat) -> TwoFunctor {
        TwoFunctor { obj: (0..a.n_obj()).collect(), homs: a.homs.iter().map(Functor::identity).collect() }
    }

    pub fn hom(&self, src: &Fin2Cat, a: usize, b: usize) -> &Functor {
        &self.homs[a * src.n_obj() + b]
    }

    pub fn cell1(&self, src: &Fin2Cat, a: usize, b: usize, f: usize) -> usize {
        self.hom(src, a, b).obj[f]
    }

    pub fn cell2(&self, src: &Fin2Cat, a: usize, b: usize, t: usize) -> usize {
        self.hom(src, a, b).arr[t]
    }

    pub fn check(&self, src: &Fin2Cat, tgt: &Fin2Cat) -> Report {
        let mut r = Report::new();
        let n = src.n_obj();
        if self.obj.len() != n || self.homs.len() != n * n || self.obj.iter().any(|&o| o >= tgt.n_obj()) {
            r.push("2-functor tables have the wrong size");
            return r;
        }
        for a in 0..n {
            for b in 0..n {
                let rep = self.hom(src, a, b).check(src.hom(a, b), tgt.hom(self.obj[a], self.obj[b]));
                r.extend(&format!("on hom({},{})", src.objects[a], src.objects[b]), rep);
            }
        }
        if !r.is_ok() {
            return r;
        }
        for a in 0..n {
            if self.cell1(src, a, a, src.id1(a)) != tgt.id1(self.obj[a]) {
                r.push(format!("identity 1-cell of {} not preserved", src.objects[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (fa, fb, fc) = (self.obj[a], self.obj[b], self.obj[c]);
                    for g in 0..src.hom(b, c).n_obj() {
                        for f in 0..src.hom(a, b).n_obj() {
                            let l = self.cell1(src, a, c, src.comp1(a, b, c, g, f));
                            let rr = tgt.comp1(fa, fb, fc, self.cell1(src, b, c, g), self.cell1(src, a, b, f));
                            if l != rr {
                                r.push(format!(
                                    "composite {}∘{} not preserved",
                                    src.cell1_name(b, c, g),
                                    src.cell1_name(a, b, f)
                                ));
                            }
                        }
                    }
                    for g in 0..src.hom(b, c).n_arr() {
                        for f in 0..src.hom(a, b).n_arr() {
                            let l = self.cell2(src, a, c, src.comp2(a, b, c, g, f));
                            let rr = tgt.comp2(fa, fb, fc, self.cell2(src, b, c, g), self.cell2(src, a, b, f));
                            if l != rr {
                                r.push(format!(
                                    "horizontal composite {}*{} not preserved",
                                    src.cell2_name(b, c, g),
                                    src.cell2_name(a, b, f)
                                ));
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// `self ∘ first`, where `first: a → b` and `self: b → c`.
    pub fn after(&self, first: &TwoFunctor, a: &Fin2Cat, b: &Fin2Cat) -> TwoFunctor {
        let n = a.n_obj();
        let homs = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.hom(b, first.obj[x], first.obj[y]).after(&first.homs[i])
            })
            .collect();
        TwoFunctor { obj: first.obj.iter().map(|&o| self.obj[o]).collect(), homs }
    }

    /// The induced 2-functor between `op_dual`s.
    pub fn op(&self, src: &Fin2Cat) -> TwoFunctor {
        let n = src.n_obj();
        TwoFunctor { obj: self.obj.clone(), homs: (0..n * n).map(|i| self.homs[(i % n) * n + i / n].clone()).collect() }
    }

    /// Every hom functor an isomorphism of categories.
    pub fn is_2_fully_faithful(&self, src: &Fin2Cat, tgt: &Fin2Cat) -> Report {
        let mut r = Report::new();
        for a in 0..src.n_obj() {
            for b in 0..src.n_obj() {
                if !is_isomorphism(self.hom(src, a, b), src.hom(a, b), tgt.hom(self.obj[a], self.obj[b])) {
                    r.push(format!("hom({},{}) is not mapped bijectively", src.objects[a], src.objects[b]));
                }
            }
        }
        r
    }

    /// Every hom functor an equivalence of categories.
    pub fn is_pseudo_fully_faithful(&self, src: &Fin2Cat, tgt: &Fin2Cat) -> Report {
        let mut r = Report::new();
        for a in 0..src.n_obj() {
            for b in 0..src.n_obj() {
                let e = is_equivalence(self.hom(src, a, b), src.hom(a, b), tgt.hom(self.obj[a], self.obj[b]));
                if !e.verdict {
                    r.push(format!(
                        "hom({},{}) is not an equivalence: {}",
                        src.objects[a],
                        src.objects[b],
                        e.witness.unwrap_or_default()
                    ));
                }
            }
        }
        r
    }
}

/// Incremental construction of a 2-category from named cells.
#[derive(Clone, Debug, Default)]
pub struct Builder {
    pub objects: Vec<String>,
    /// `(name, source object, target object)`.
    pub cells1: Vec<(String, String, String)>,
    /// Object name ↦ identity 1-cell name.
    pub identities1: Vec<(String, String)>,
    /// `(g, f, g∘f)` by 1-cell name; identity composites may be omitted.
    pub compose1: Vec<(String, String, String)>,
    /// `(name, source 1-cell, target 1-cell)`.
    pub cells2: Vec<(String, String, String)>,
    /// 1-cell name ↦ identity 2-cell name; missing ones are created as `1_f`.
    pub identities2: Vec<(String, String)>,
    /// `(β, α, β∘α)` within one hom-category.
    pub vcompose: Vec<(String, String, String)>,
    /// `(β, α, β*α)`; composites with identity 2-cells of identity 1-cells,
    /// and of two identity 2-cells, may be omitted.
    pub hcompose: Vec<(String, String, String)>,
}

impl Builder {
    pub fn build(&self) -> Result<Fin2Cat> {
        let bad = |m: String| Error::Invalid(m);
        let n = self.objects.len();
        let obj = |s: &str| self.objects.iter().position(|o| o == s).ok_or_else(|| bad(format!("unknown object {s}")));
        // 1-cells, grouped by hom
        let mut local1: HashMap<&str, (usize, usize, usize)> = HashMap::new();
        let mut names1: Vec<Vec<&str>> = vec![Vec::new(); n * n];
        for (name, s, t) in &self.cells1 {
            let (a, b) = (obj(s)?, obj(t)?);
            if local1.insert(name, (a, b, names1[a * n + b].len())).is_some() {
                return Err(bad(format!("duplicate 1-cell {name}")));
            }
            names1[a * n + b].push(name);
        }
        let mut id1 = vec![NONE; n];
        for (o, f) in &self.identities1 {
            let a = obj(o)?;
            let &(x, y, l) = local1.get(f.as_str()).ok_or_else(|| bad(format!("unknown 1-cell {f}")))?;
            if x != a || y != a {
                return Err(bad(format!("identity {f} of {o} is not an endo-1-cell")));
            }
            id1[a] = l;
        }
        if let Some(a) = id1.iter().position(|&i| i == NONE) {
            return Err(bad(format!("object {} has no identity 1-cell", self.objects[a])));
        }
        // 2-cells, with identities filled in
        let mut cells2: Vec<(String, String, String)> = self.cells2.clone();
        let mut id2_name: HashMap<String, String> = self.identities2.iter().cloned().collect();
        for (name, _, _) in &self.cells1 {
            if !id2_name.contains_key(name) {
                let id = format!("1_{name}");
                id2_name.insert(name.clone(), id.clone());
                cells2.push((id, name.clone(), name.clone()));
            }
        }
        let mut local2: HashMap<&str, (usize, usize, usize)> = HashMap::new();
        let mut arrows2: Vec<Vec<Arrow>> = vec![Vec::new(); n * n];
        for (name, s, t) in &cells2 {
            let &(a, b, ls) = local1.get(s.as_str()).ok_or_else(|| bad(format!("unknown 1-cell {s}")))?;
            let &(a2, b2, lt) = local1.get(t.as_str()).ok_or_else(|| bad(format!("unknown 1-cell {t}")))?;
            if (a, b) != (a2, b2) {
                return Err(bad(format!("2-cell {name} relates non-parallel 1-cells")));
            }
            if local2.insert(name, (a, b, arrows2[a * n + b].len())).is_some() {
                return Err(bad(format!("duplicate 2-cell {name}")));
            }
            arrows2[a * n + b].push(Arrow { name: name.clone(), src: ls, tgt: lt });
        }
        let cell2 = |s: &str| local2.get(s).copied().ok_or_else(|| bad(format!("unknown 2-cell {s}")));
        let mut vtab: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
        for (bt, al, res) in &self.vcompose {
            let ((a, b, x), (_, _, y), (_, _, z)) = (cell2(bt)?, cell2(al)?, cell2(res)?);
            vtab.insert((a, b, x, y), z);
        }
        let mut homs = Vec::with_capacity(n * n);
        for i in 0..n * n {
            let (a, b) = (i / n, i % n);
            let arrows = arrows2[i].clone();
            let ids: Vec<usize> = names1[i]
                .iter()
                .map(|f| local2[id2_name[*f].as_str()].2)
                .collect();
            let mut entries = Vec::new();
            for g in 0..arrows.len() {
                for f in 0..arrows.len() {
                    if arrows[f].tgt == arrows[g].src {
                        if let Some(&h) = vtab.get(&(a, b, g, f)) {
                            entries.push((g, f, h));
                        }
                    }
                }
            }
            let objects = names1[i].iter().map(|s| s.to_string()).collect();
            let h = FinCat::from_entries(objects, arrows, ids, &entries);
            let rep = h.validate();
            if !rep.is_ok() {
                return Err(bad(format!("hom({},{}): {}", self.objects[a], self.objects[b], rep.violations.join("; "))));
            }
            homs.push(h);
        }
        let cell1 = |s: &str| local1.get(s).copied().ok_or_else(|| bad(format!("unknown 1-cell {s}")));
        let mut t1: HashMap<(usize, usize, usize, usize, usize), usize> = HashMap::new();
        for (g, f, h) in &self.compose1 {
            let ((b, c, gl), (a, b2, fl), (a2, c2, hl)) = (cell1(g)?, cell1(f)?, cell1(h)?);
            if b != b2 || a != a2 || c != c2 {
                return Err(bad(format!("composite {g}∘{f} = {h} is mistyped")));
            }
            t1.insert((a, b, c, gl, fl), hl);
        }
        let mut t2: HashMap<(usize, usize, usize, usize, usize), usize> = HashMap::new();
        for (bt, al, res) in &self.hcompose {
            let ((b, c, bl), (a, b2, alo), (a2, c2, rl)) = (cell2(bt)?, cell2(al)?, cell2(res)?);
            if b != b2 || a != a2 || c != c2 {
                return Err(bad(format!("horizontal composite {bt}*{al} = {res} is mistyped")));
            }
            t2.insert((a, b, c, bl, alo), rl);
        }
        let mut missing: Option<String> = None;
        let res = Fin2Cat::from_parts(
            self.objects.clone(),
            homs.clone(),
            id1.clone(),
            |a, b, c, g, f| {
                if let Some(&h) = t1.get(&(a, b, c, g, f)) {
                    h
                } else if b == c && g == id1[b] {
                    f
                } else if a == b && f == id1[a] {
                    g
                } else {
                    missing.get_or_insert_with(|| {
                        format!("composite {}∘{} is missing", homs[b * n + c].objects[g], homs[a * n + b].objects[f])
                    });
                    NONE
                }
            },
            |_, _, _, _, _| NONE,
        );
        if let Some(m) = missing {
            return Err(bad(m));
        }
        let mut missing2: Option<String> = None;
        let res2 = Fin2Cat::from_parts(
            self.objects.clone(),
            homs.clone(),
            id1.clone(),
            |a, b, c, g, f| res.comp1(a, b, c, g, f),
            |a, b, c, beta, alpha| {
                let (hab, hbc) = (&homs[a * n + b], &homs[b * n + c]);
                if let Some(&h) = t2.get(&(a, b, c, beta, alpha)) {
                    return h;
                }
                let unit_c = b == c && beta == hbc.ids[id1[b]];
                let unit_a = a == b && alpha == hab.ids[id1[a]];
                if unit_c {
                    alpha
                } else if unit_a {
                    beta
                } else if hbc.is_identity(beta) && hab.is_identity(alpha) {
                    homs[a * n + c].ids[res.comp1(a, b, c, hbc.src(beta), hab.src(alpha))]
                } else {
                    missing2.get_or_insert_with(|| {
                        format!("horizontal composite {}*{} is missing", hbc.arrows[beta].name, hab.arrows[alpha].name)
                    });
                    NONE
                }
            },
        );
        if let Some(m) = missing2 {
            return Err(bad(m));
        }
        Ok(res2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Objects 0, 1; 1-cells f, g: 0 → 1; one 2-cell θ: f ⇒ g.
    pub(crate) fn free_two_cell() -> Fin2Cat {
        Builder {
            objects: vec!["0".into(), "1".into()],
            cells1: vec![
                ("id_0".into(), "0".into(), "0".into()),
                ("id_1".into(), "1".into(), "1".into()),
                ("f".into(), "0".into(), "1".into()),
                ("g".into(), "0".into(), "1".into()),
            ],
            identities1: vec![("0".into(), "id_0".into()), ("1".into(), "id_1".into())],
            cells2: vec![("theta".into(), "f".into(), "g".into())],
            ..Builder::default()
        }
        .build()
        .unwrap()
    }

    #[test]
    fn basic_validity() {
        assert!(Fin2Cat::terminal().validate().is_ok());
        assert!(Fin2Cat::locally_discrete(&FinCat::two()).validate().is_ok());
        assert!(free_two_cell().validate().is_ok());
    }

    #[test]
    fn mutated_horizontal_composition_is_reported() {
        // an idempotent 2-cell on the identity 1-cell
        let b = Builder {
            objects: vec!["*".into()],
            cells1: vec![("id".into(), "*".into(), "*".into())],
            identities1: vec![("*".into(), "id".into())],
            cells2: vec![("e".into(), "id".into(), "id".into())],
            vcompose: vec![("e".into(), "e".into(), "e".into())],
            hcompose: vec![("e".into(), "e".into(), "e".into())],
            ..Builder::default()
        }
        .build()
        .unwrap();
        assert!(b.validate().is_ok());
        let e = b.find_cell2("e").unwrap().2;
        let id = b.hom(0, 0).ids[0];
        let broken = b.clone().with_comp2_entry(0, 0, 0, e, e, id);
        let r = broken.validate();
        assert!(!r.is_ok());
        assert!(r.mentions("interchange") || r.mentions("associativity"));
    }

    #[test]
    fn duals_are_involutions_and_commute() {
        let fixtures = [Fin2Cat::terminal(), Fin2Cat::locally_discrete(&FinCat::two()), free_two_cell()];
        for a in &fixtures {
            assert_eq!(&a.op_dual().op_dual(), a);
            assert_eq!(&a.co_dual().co_dual(), a);
            assert_eq!(a.op_dual().co_dual(), a.co_dual().op_dual());
            assert!(a.op_dual().validate().is_ok());
            assert!(a.co_dual().validate().is_ok());
        }
        let co = free_two_cell().co_dual();
        let (x, y, t) = co.find_cell2("theta").unwrap();
        assert_eq!(co.cell1_name(x, y, co.hom(x, y).src(t)), "g");
        let op = Fin2Cat::locally_discrete(&FinCat::two()).op_dual();
        assert_eq!(op.hom(1, 0).n_obj(), 1);
        assert_eq!(op.hom(0, 1).n_obj(), 0);
    }

    #[test]
    fn pi0_examples() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = two.pi0().unwrap();
        assert!(crate::fincat::find_isomorphism(&p.cat, &FinCat::two()).unwrap().is_some());
        let q = free_two_cell().pi0().unwrap();
        assert!(q.cat.validate().is_ok());
        assert_eq!(q.cat.n_arr(), 3);
        assert_eq!(Fin2Cat::terminal().pi0().unwrap().cat.n_arr(), 1);
    }

    #[test]
    fn wide_subcategories() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        assert!(WideSub::all(&two).validate(&two).is_ok());
        assert!(WideSub::identities(&two).validate(&two).is_ok());
        let missing_id = WideSub::from_names(&two, &["0<1".into(), "id_1".into()]).unwrap();
        assert!(missing_id.validate(&two).mentions("identity of 0"));
        let chain = Fin2Cat::locally_discrete(&FinCat::from_poset(&["a", "b", "c"], |x, y| x <= y));
        let open = WideSub::from_names(&chain, &["id_a".into(), "id_b".into(), "id_c".into(), "a<b".into(), "b<c".into()]).unwrap();
        assert!(open.validate(&chain).mentions("not closed"));
        let closed = WideSub::generated_by(&chain, &["a<b".into(), "b<c".into()]).unwrap();
        assert!(closed.validate(&chain).is_ok());
        assert_eq!(closed.count(), 6);
    }

    #[test]
    fn products_and_functors() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let sq = two.product(&free_two_cell());
        assert!(sq.validate().is_ok());
        assert_eq!(sq.n_obj(), 4);
        let id = TwoFunctor::identity(&sq);
        assert!(id.check(&sq, &sq).is_ok());
        assert!(id.is_2_fully_faithful(&sq, &sq).is_ok());
        let op = id.op(&sq);
        assert!(op.check(&sq.op_dual(), &sq.op_dual()).is_ok());
    }
}
