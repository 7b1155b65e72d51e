//! Finite categories, functors and natural transformations.
//!
//! Everything is index based: objects and arrows are positions in vectors,
//! and composition is a dense table.

mod enumerate;
mod iso;
pub mod presented;

pub use enumerate::{all_functors, all_nat_transfs, all_nat_transfs_where, functor_category, FunctorCat};
pub use iso::{find_equivalence, find_isomorphism, find_nat_iso, has_nat_iso, is_equivalence, is_isomorphism, quasi_inverse_search, EquivalenceReport};
pub use presented::{composition_closure, localize, solve, Generator, Localized, Presentation, PresentedCategory, Realization, Status, Word};

use crate::report::Report;

pub const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub ids: Vec<usize>,
    table: Vec<usize>,
    homs: Vec<Vec<usize>>,
    outs: Vec<Vec<usize>>,
}

impl FinCat {
    /// Builds a category from a composition rule; `compose(g, f)` is asked
    /// only for pairs with `tgt f = src g`.
    pub fn from_fn(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        ids: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> usize,
    ) -> FinCat {
        let n = arrows.len();
        let mut table = vec![NONE; n * n];
        for g in 0..n {
            for f in 0..n {
                if arrows[f].tgt == arrows[g].src {
                    table[g * n + f] = compose(g, f);
                }
            }
        }
        FinCat::raw(objects, arrows, ids, table)
    }

    /// Builds a category from explicit `(g, f, g∘f)` entries. Missing
    /// entries are left undefined and reported by `validate`.
    pub fn from_entries(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        ids: Vec<usize>,
        entries: &[(usize, usize, usize)],
    ) -> FinCat {
        let n = arrows.len();
        let mut table = vec![NONE; n * n];
        for &(g, f, h) in entries {
            table[g * n + f] = h;
        }
        // identity composites may be left out of the entry list
        for f in 0..n {
            let (s, t) = (arrows[f].src, arrows[f].tgt);
            if table[ids[t] * n + f] == NONE {
                table[ids[t] * n + f] = f;
            }
            if table[f * n + ids[s]] == NONE {
                table[f * n + ids[s]] = f;
            }
        }
        FinCat::raw(objects, arrows, ids, table)
    }

    fn raw(objects: Vec<String>, arrows: Vec<Arrow>, ids: Vec<usize>, table: Vec<usize>) -> FinCat {
        let no = objects.len();
        let mut homs = vec![Vec::new(); no * no];
        let mut outs = vec![Vec::new(); no];
        for (i, a) in arrows.iter().enumerate() {
            if a.src < no && a.tgt < no {
                homs[a.src * no + a.tgt].push(i);
                outs[a.src].push(i);
            }
        }
        FinCat { objects, arrows, ids, table, homs, outs }
    }

    /// Overwrites one table entry. Used to build mutated fixtures.
    pub fn with_entry(mut self, g: usize, f: usize, h: usize) -> FinCat {
        let n = self.arrows.len();
        self.table[g * n + f] = h;
        self
    }

    pub fn n_obj(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arr(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    pub fn id(&self, a: usize) -> usize {
        self.ids[a]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.ids[self.arrows[f].src] == f
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        let r = self.table[g * self.arrows.len() + f];
        (r != NONE).then_some(r)
    }

    /// `g ∘ f`; panics when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        match self.try_compose(g, f) {
            Some(h) => h,
            None => panic!(
                "arrows {} and {} are not composable",
                self.arrows[g].name, self.arrows[f].name
            ),
        }
    }

    /// Composes a path given in application order.
    pub fn compose_path(&self, start: usize, path: &[usize]) -> usize {
        path.iter().fold(self.ids[start], |acc, &f| self.compose(f, acc))
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (s, t) = (self.src(f), self.tgt(f));
        self.hom(t, s)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == self.ids[s] && self.compose(f, g) == self.ids[t])
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn obj_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.arrows[f].name
    }

    /// Composable `(g, f)` pairs with their composite.
    pub fn composable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.n_arr() {
            for &g in self.hom_from(self.tgt(f)).iter() {
                out.push((g, f, self.compose(g, f)));
            }
        }
        out
    }

    pub fn hom_from(&self, a: usize) -> &[usize] {
        &self.outs[a]
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let no = self.n_obj();
        let n = self.n_arr();
        if self.ids.len() != no {
            r.push(format!("identity map has {} entries for {} objects", self.ids.len(), no));
            return r;
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= no || a.tgt >= no {
                r.push(format!("arrow {} has an unknown endpoint", a.name));
                return r;
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                r.push(format!("duplicate arrow name {}", a.name));
            }
        }
        for (i, o) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(o) {
                r.push(format!("duplicate object name {o}"));
            }
        }
        for a in 0..no {
            let i = self.ids[a];
            if i >= n || self.arrows[i].src != a || self.arrows[i].tgt != a {
                r.push(format!("identity of {} is not an endo-arrow of it", self.objects[a]));
                return r;
            }
        }
        for g in 0..n {
            for f in 0..n {
                let h = self.table[g * n + f];
                let composable = self.tgt(f) == self.src(g);
                if composable && h == NONE {
                    r.push(format!(
                        "typing: composite {}∘{} is missing",
                        self.arrows[g].name, self.arrows[f].name
                    ));
                } else if !composable && h != NONE {
                    r.push(format!(
                        "typing: composite {}∘{} defined for non-composable pair",
                        self.arrows[g].name, self.arrows[f].name
                    ));
                } else if composable && (h >= n || self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g)) {
                    r.push(format!(
                        "typing: composite {}∘{} has wrong endpoints",
                        self.arrows[g].name, self.arrows[f].name
                    ));
                }
            }
        }
        if !r.is_ok() {
            return r;
        }
        for f in 0..n {
            let (s, t) = (self.src(f), self.tgt(f));
            if self.compose(self.ids[t], f) != f {
                r.push(format!(
                    "identity law: ({}, {}, {})",
                    self.arrows[self.ids[t]].name, self.arrows[f].name, self.arrows[self.compose(self.ids[t], f)].name
                ));
            }
            if self.compose(f, self.ids[s]) != f {
                r.push(format!(
                    "identity law: ({}, {}, {})",
                    self.arrows[f].name, self.arrows[self.ids[s]].name, self.arrows[self.compose(f, self.ids[s])].name
                ));
            }
        }
        for f in 0..n {
            for &g in self.hom_from(self.tgt(f)) {
                let gf = self.compose(g, f);
                for &h in self.hom_from(self.tgt(g)) {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        r.push(format!(
                            "associativity: ({}, {}, {})",
                            self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
                        ));
                    }
                }
            }
        }
        r
    }

    pub fn op(&self) -> FinCat {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
            .collect();
        FinCat::from_fn(self.objects.clone(), arrows, self.ids.clone(), |g, f| self.compose(f, g))
    }

    // ---- named small categories ----

    pub fn empty() -> FinCat {
        FinCat::raw(vec![], vec![], vec![], vec![])
    }

    pub fn terminal() -> FinCat {
        FinCat::discrete(&["*"])
    }

    pub fn discrete(names: &[&str]) -> FinCat {
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let arrows = (0..names.len())
            .map(|i| Arrow { name: format!("id_{}", names[i]), src: i, tgt: i })
            .collect();
        let ids = (0..names.len()).collect();
        FinCat::from_fn(objects, arrows, ids, |_, f| f)
    }

    /// The arrow category 𝟚 = {0 → 1}.
    pub fn two() -> FinCat {
        FinCat::from_poset(&["0", "1"], |a, b| a <= b)
    }

    /// The free isomorphism I = {0 ⇄ 1}.
    pub fn iso() -> FinCat {
        let objects = vec!["0".to_string(), "1".to_string()];
        let arrows = vec![
            Arrow { name: "id_0".into(), src: 0, tgt: 0 },
            Arrow { name: "id_1".into(), src: 1, tgt: 1 },
            Arrow { name: "f".into(), src: 0, tgt: 1 },
            Arrow { name: "g".into(), src: 1, tgt: 0 },
        ];
        // arrows are determined by their endpoints
        let lookup = [[0, 2], [3, 1]];
        let cat_arrows = arrows.clone();
        FinCat::from_fn(objects, arrows, vec![0, 1], move |g, f| {
            lookup[cat_arrows[f].src][cat_arrows[g].tgt]
        })
    }

    /// Two parallel arrows f, g : 0 → 1.
    pub fn parallel_pair() -> FinCat {
        let objects = vec!["0".to_string(), "1".to_string()];
        let arrows = vec![
            Arrow { name: "id_0".into(), src: 0, tgt: 0 },
            Arrow { name: "id_1".into(), src: 1, tgt: 1 },
            Arrow { name: "f".into(), src: 0, tgt: 1 },
            Arrow { name: "g".into(), src: 0, tgt: 1 },
        ];
        let ids = vec![0, 1];
        FinCat::from_fn(objects, arrows, ids.clone(), |g, f| if g < 2 { f } else { g })
    }

    /// A one-object category from a monoid multiplication table
    /// (`mul[a][b] = a·b`, meaning "b first, then a"); element 0 is the unit.
    pub fn monoid(obj: &str, names: &[&str], mul: &[Vec<usize>]) -> FinCat {
        let arrows = names
            .iter()
            .map(|n| Arrow { name: n.to_string(), src: 0, tgt: 0 })
            .collect();
        FinCat::from_fn(vec![obj.to_string()], arrows, vec![0], |g, f| mul[g][f])
    }

    /// A preorder as a category; arrow `a≤b` exists iff `leq(a, b)`.
    pub fn from_poset(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> FinCat {
        let n = names.len();
        let mut arrows = Vec::new();
        let mut idx = vec![vec![NONE; n]; n];
        let mut ids = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    idx[a][b] = arrows.len();
                    let name = if a == b { format!("id_{}", names[a]) } else { format!("{}<{}", names[a], names[b]) };
                    if a == b {
                        ids[a] = arrows.len();
                    }
                    arrows.push(Arrow { name, src: a, tgt: b });
                }
            }
        }
        let objects = names.iter().map(|s| s.to_string()).collect();
        let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.src, a.tgt)).collect();
        FinCat::from_fn(objects, arrows, ids, |g, f| {
            let r = idx[ends[f].0][ends[g].1];
            if r == NONE {
                panic!("preorder is not transitive");
            }
            r
        })
    }

    /// Full subcategory on the given objects, with its inclusion.
    pub fn full_subcategory(&self, objs: &[usize]) -> (FinCat, Functor) {
        let pos = |o: usize| objs.iter().position(|&x| x == o);
        let mut arr = Vec::new();
        let mut back = vec![NONE; self.n_arr()];
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (pos(a.src), pos(a.tgt)) {
                back[i] = arr.len();
                arr.push((i, Arrow { name: a.name.clone(), src: s, tgt: t }));
            }
        }
        let objects = objs.iter().map(|&o| self.objects[o].clone()).collect();
        let ids = objs.iter().map(|&o| back[self.ids[o]]).collect();
        let orig: Vec<usize> = arr.iter().map(|(i, _)| *i).collect();
        let sub = FinCat::from_fn(objects, arr.into_iter().map(|(_, a)| a).collect(), ids, |g, f| {
            back[self.compose(orig[g], orig[f])]
        });
        (sub, Functor { obj: objs.to_vec(), arr: orig })
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// their smallest object.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n_obj());
        for a in &self.arrows {
            uf.union(a.src, a.tgt);
        }
        uf.classes()
    }
}

/// Product category with its two projections.
pub fn product_category(c: &FinCat, d: &FinCat) -> (FinCat, Functor, Functor) {
    let (nco, ndo) = (c.n_obj(), d.n_obj());
    let nda = d.n_arr();
    let mut objects = Vec::with_capacity(nco * ndo);
    for a in &c.objects {
        for b in &d.objects {
            objects.push(format!("({a},{b})"));
        }
    }
    let mut arrows = Vec::with_capacity(c.n_arr() * nda);
    for f in &c.arrows {
        for g in &d.arrows {
            arrows.push(Arrow { name: format!("({},{})", f.name, g.name), src: f.src * ndo + g.src, tgt: f.tgt * ndo + g.tgt });
        }
    }
    let mut ids = Vec::with_capacity(nco * ndo);
    for a in 0..nco {
        for b in 0..ndo {
            ids.push(c.ids[a] * nda + d.ids[b]);
        }
    }
    let p = FinCat::from_fn(objects, arrows, ids, |g, f| {
        c.compose(g / nda, f / nda) * nda + d.compose(g % nda, f % nda)
    });
    let p1 = Functor {
        obj: (0..nco * ndo).map(|i| i / ndo).collect(),
        arr: (0..c.n_arr() * nda).map(|i| i / nda).collect(),
    };
    let p2 = Functor {
        obj: (0..nco * ndo).map(|i| i % ndo).collect(),
        arr: (0..c.n_arr() * nda).map(|i| i % nda).collect(),
    };
    (p, p1, p2)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub arr: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &FinCat) -> Functor {
        Functor { obj: (0..c.n_obj()).collect(), arr: (0..c.n_arr()).collect() }
    }

    pub fn constant(c: &FinCat, d: &FinCat, y: usize) -> Functor {
        Functor { obj: vec![y; c.n_obj()], arr: vec![d.ids[y]; c.n_arr()] }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            obj: first.obj.iter().map(|&o| self.obj[o]).collect(),
            arr: first.arr.iter().map(|&a| self.arr[a]).collect(),
        }
    }

    pub fn check(&self, c: &FinCat, d: &FinCat) -> Report {
        let mut r = Report::new();
        if self.obj.len() != c.n_obj() || self.arr.len() != c.n_arr() {
            r.push("functor tables have the wrong size");
            return r;
        }
        if self.obj.iter().any(|&o| o >= d.n_obj()) || self.arr.iter().any(|&a| a >= d.n_arr()) {
            r.push("functor maps to an unknown cell");
            return r;
        }
        for (i, a) in c.arrows.iter().enumerate() {
            let fa = self.arr[i];
            if d.src(fa) != self.obj[a.src] || d.tgt(fa) != self.obj[a.tgt] {
                r.push(format!("functor: arrow {} sent to an arrow of the wrong type", a.name));
            }
        }
        if !r.is_ok() {
            return r;
        }
        for o in 0..c.n_obj() {
            if self.arr[c.ids[o]] != d.ids[self.obj[o]] {
                r.push(format!("functor: identity of {} not preserved", c.objects[o]));
            }
        }
        for (g, f, h) in c.composable_pairs() {
            if d.compose(self.arr[g], self.arr[f]) != self.arr[h] {
                r.push(format!("functor: composite {}∘{} not preserved", c.arrows[g].name, c.arrows[f].name));
            }
        }
        r
    }

    pub fn is_injective(&self) -> bool {
        let mut o = self.obj.clone();
        o.sort_unstable();
        o.dedup();
        let mut a = self.arr.clone();
        a.sort_unstable();
        a.dedup();
        o.len() == self.obj.len() && a.len() == self.arr.len()
    }
}

/// Components of a natural transformation, one arrow per source object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatTransf {
    pub comp: Vec<usize>,
}

impl NatTransf {
    pub fn identity(f: &Functor, d: &FinCat) -> NatTransf {
        NatTransf { comp: f.obj.iter().map(|&o| d.ids[o]).collect() }
    }

    pub fn check(&self, c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Report {
        let mut r = Report::new();
        if self.comp.len() != c.n_obj() {
            r.push("natural transformation has the wrong number of components");
            return r;
        }
        for o in 0..c.n_obj() {
            let a = self.comp[o];
            if a >= d.n_arr() || d.src(a) != f.obj[o] || d.tgt(a) != g.obj[o] {
                r.push(format!("component at {} has the wrong type", c.objects[o]));
            }
        }
        if !r.is_ok() {
            return r;
        }
        for (i, a) in c.arrows.iter().enumerate() {
            let lhs = d.compose(g.arr[i], self.comp[a.src]);
            let rhs = d.compose(self.comp[a.tgt], f.arr[i]);
            if lhs != rhs {
                r.push(format!("naturality fails at {}", a.name));
            }
        }
        r
    }

    /// `self ∘ first` (vertical).
    pub fn vcomp(&self, first: &NatTransf, d: &FinCat) -> NatTransf {
        NatTransf { comp: self.comp.iter().zip(&first.comp).map(|(&b, &a)| d.compose(b, a)).collect() }
    }

    /// Horizontal composite `beta * alpha` of `alpha: F ⇒ F'` (C→D) and
    /// `beta: G ⇒ G'` (D→E): component `beta_{F'x} ∘ G(alpha_x)`.
    pub fn hcomp(beta: &NatTransf, g: &Functor, alpha: &NatTransf, f2: &Functor, e: &FinCat) -> NatTransf {
        NatTransf {
            comp: alpha
                .comp
                .iter()
                .enumerate()
                .map(|(x, &ax)| e.compose(beta.comp[f2.obj[x]], g.arr[ax]))
                .collect(),
        }
    }

    /// `G alpha`: components `G(alpha_x)`.
    pub fn whisker_left(g: &Functor, alpha: &NatTransf) -> NatTransf {
        NatTransf { comp: alpha.comp.iter().map(|&a| g.arr[a]).collect() }
    }

    /// `beta F`: components `beta_{F x}`.
    pub fn whisker_right(beta: &NatTransf, f: &Functor) -> NatTransf {
        NatTransf { comp: f.obj.iter().map(|&o| beta.comp[o]).collect() }
    }

    pub fn inverse(&self, d: &FinCat) -> Option<NatTransf> {
        let comp: Option<Vec<usize>> = self.comp.iter().map(|&a| d.inverse(a)).collect();
        comp.map(|comp| NatTransf { comp })
    }

    pub fn is_iso(&self, d: &FinCat) -> bool {
        self.comp.iter().all(|&a| d.is_iso(a))
    }

    pub fn is_identity(&self, d: &FinCat) -> bool {
        self.comp.iter().all(|&a| d.is_identity(a))
    }
}

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merges two classes keeping the smaller root; returns true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}
