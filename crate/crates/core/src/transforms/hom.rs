use std::collections::HashMap;

use super::{CatDiagram, Direction, Flavor};
use crate::budget::Counter;
use crate::error::Result;
use crate::fincat::{all_functors, all_nat_transfs, all_nat_transfs_where, Arrow, FinCat, Functor, NatTransf};
use crate::report::Report;

/// Components `θ_A` and structural cells `θ_f` (per hom `a * n + b`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    pub comps: Vec<Functor>,
    pub cells: Vec<Vec<NatTransf>>,
}

impl Transformation {
    pub fn cell(&self, n: usize, a: usize, b: usize, f: usize) -> &NatTransf {
        &self.cells[a * n + b][f]
    }

    pub fn identity(p: &CatDiagram) -> Transformation {
        let n = p.n();
        let comps: Vec<Functor> = p.cats.iter().map(Functor::identity).collect();
        let cells = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                (0..p.base.hom(a, b).n_obj()).map(|f| NatTransf::identity(p.f1(a, b, f), &p.cats[b])).collect()
            })
            .collect();
        Transformation { comps, cells }
    }
}

/// Components `ρ_A : θ_A ⇒ θ'_A`.
pub type Modification = Vec<NatTransf>;

/// Source and target functors `F a → G b` of the structural cell at `f`.
fn cell_ends(f: &CatDiagram, g: &CatDiagram, ta: &Functor, tb: &Functor, a: usize, b: usize, c: usize, dir: Direction) -> (Functor, Functor) {
    let gf_ta = g.f1(a, b, c).after(ta);
    let tb_ff = tb.after(f.f1(a, b, c));
    match dir {
        Direction::Lax => (gf_ta, tb_ff),
        Direction::OpLax => (tb_ff, gf_ta),
    }
}

/// The structural cell at an identity 1-cell forced by LN0.
fn identity_cell(f: &CatDiagram, g: &CatDiagram, ta: &Functor, a: usize, dir: Direction) -> Option<NatTransf> {
    let ga = &g.cats[a];
    let (uf, ug) = (f.unit(a), g.unit(a));
    let comp: Option<Vec<usize>> = (0..f.cats[a].n_obj())
        .map(|x| {
            let mapped = ta.arr[uf.comp[x]];
            let gu = ug.comp[ta.obj[x]];
            Some(match dir {
                Direction::Lax => ga.compose(mapped, ga.inverse(gu)?),
                Direction::OpLax => ga.compose(gu, ga.inverse(mapped)?),
            })
        })
        .collect();
    comp.map(|comp| NatTransf { comp })
}

fn ln1_holds(
    f: &CatDiagram,
    g: &CatDiagram,
    t: &Transformation,
    (a, b, c, u, v): (usize, usize, usize, usize, usize),
    dir: Direction,
) -> bool {
    let n = f.n();
    let base = &f.base;
    let vu = base.comp1(a, b, c, v, u);
    let gc = &g.cats[c];
    let (tu, tv, tvu) = (t.cell(n, a, b, u), t.cell(n, b, c, v), t.cell(n, a, c, vu));
    let (af, ag) = (f.mult(a, b, c, u, v), g.mult(a, b, c, u, v));
    let (ta, tc) = (&t.comps[a], &t.comps[c]);
    let (fu, gv) = (f.f1(a, b, u), g.f1(b, c, v));
    (0..f.cats[a].n_obj()).all(|x| match dir {
        Direction::Lax => {
            let l = gc.compose(tvu.comp[x], ag.comp[ta.obj[x]]);
            let r = gc.compose(tc.arr[af.comp[x]], gc.compose(tv.comp[fu.obj[x]], gv.arr[tu.comp[x]]));
            l == r
        }
        Direction::OpLax => {
            let l = gc.compose(ag.comp[ta.obj[x]], gc.compose(gv.arr[tu.comp[x]], tv.comp[fu.obj[x]]));
            let r = gc.compose(tvu.comp[x], tc.arr[af.comp[x]]);
            l == r
        }
    })
}

fn ln2_holds(f: &CatDiagram, g: &CatDiagram, t: &Transformation, (a, b, gamma): (usize, usize, usize), dir: Direction) -> bool {
    let n = f.n();
    let h = f.base.hom(a, b);
    let (u, v) = (h.src(gamma), h.tgt(gamma));
    let gb = &g.cats[b];
    let (tu, tv) = (t.cell(n, a, b, u), t.cell(n, a, b, v));
    let (fg, gg) = (f.f2(a, b, gamma), g.f2(a, b, gamma));
    let (ta, tb) = (&t.comps[a], &t.comps[b]);
    (0..f.cats[a].n_obj()).all(|x| match dir {
        Direction::Lax => gb.compose(tb.arr[fg.comp[x]], tu.comp[x]) == gb.compose(tv.comp[x], gg.comp[ta.obj[x]]),
        Direction::OpLax => gb.compose(gg.comp[ta.obj[x]], tu.comp[x]) == gb.compose(tv.comp[x], tb.arr[fg.comp[x]]),
    })
}

fn flavor_holds(gb: &FinCat, flavor: &Flavor, needs_iso: bool, cell: &NatTransf) -> bool {
    match flavor {
        Flavor::Strict => cell.is_identity(gb),
        _ => !needs_iso || cell.is_iso(gb),
    }
}

/// Every violated axiom of a transformation `F ⇒ G` of the given flavor.
pub fn check_transformation(f: &CatDiagram, g: &CatDiagram, t: &Transformation, flavor: &Flavor, dir: Direction) -> Report {
    let mut r = Report::new();
    let base = &f.base;
    let n = base.n_obj();
    if t.comps.len() != n || t.cells.len() != n * n {
        r.push("transformation tables have the wrong size");
        return r;
    }
    for a in 0..n {
        r.extend(&format!("component at {}", base.objects[a]), t.comps[a].check(&f.cats[a], &g.cats[a]));
    }
    if !r.is_ok() {
        return r;
    }
    for a in 0..n {
        for b in 0..n {
            let h = base.hom(a, b);
            if t.cells[a * n + b].len() != h.n_obj() {
                r.push("transformation tables have the wrong size");
                return r;
            }
            for c in 0..h.n_obj() {
                let (s, tt) = cell_ends(f, g, &t.comps[a], &t.comps[b], a, b, c, dir);
                let rep = t.cell(n, a, b, c).check(&f.cats[a], &g.cats[b], &s, &tt);
                r.extend(&format!("structural cell at {}", h.objects[c]), rep);
            }
        }
    }
    if !r.is_ok() {
        return r;
    }
    for a in 0..n {
        let want = identity_cell(f, g, &t.comps[a], a, dir);
        if want.as_ref() != Some(t.cell(n, a, a, base.id1(a))) {
            r.push(format!("(LN0, {})", base.cell1_name(a, a, base.id1(a))));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for u in 0..base.hom(a, b).n_obj() {
                    for v in 0..base.hom(b, c).n_obj() {
                        if !ln1_holds(f, g, t, (a, b, c, u, v), dir) {
                            r.push(format!("(LN1, {}∘{})", base.cell1_name(b, c, v), base.cell1_name(a, b, u)));
                        }
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for gamma in 0..base.hom(a, b).n_arr() {
                if !ln2_holds(f, g, t, (a, b, gamma), dir) {
                    r.push(format!("(LN2, {})", base.cell2_name(a, b, gamma)));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..base.hom(a, b).n_obj() {
                let needs = flavor.needs_iso(base, a, b, c);
                if !flavor_holds(&g.cats[b], flavor, needs, t.cell(n, a, b, c)) {
                    let what = if *flavor == Flavor::Strict { "identity" } else { "invertibility" };
                    r.push(format!("({what}, {})", base.cell1_name(a, b, c)));
                }
            }
        }
    }
    r
}

fn lnm_holds(f: &CatDiagram, g: &CatDiagram, t: &Transformation, t2: &Transformation, rho: &[NatTransf], (a, b, c): (usize, usize, usize), dir: Direction) -> bool {
    let n = f.n();
    let gb = &g.cats[b];
    let (tc, tc2) = (t.cell(n, a, b, c), t2.cell(n, a, b, c));
    let (gf, ff) = (g.f1(a, b, c), f.f1(a, b, c));
    (0..f.cats[a].n_obj()).all(|x| match dir {
        Direction::Lax => gb.compose(tc2.comp[x], gf.arr[rho[a].comp[x]]) == gb.compose(rho[b].comp[ff.obj[x]], tc.comp[x]),
        Direction::OpLax => gb.compose(gf.arr[rho[a].comp[x]], tc.comp[x]) == gb.compose(tc2.comp[x], rho[b].comp[ff.obj[x]]),
    })
}

pub fn check_modification(
    f: &CatDiagram,
    g: &CatDiagram,
    t: &Transformation,
    t2: &Transformation,
    rho: &[NatTransf],
    dir: Direction,
) -> Report {
    let mut r = Report::new();
    let base = &f.base;
    let n = base.n_obj();
    if rho.len() != n {
        r.push("modification has the wrong number of components");
        return r;
    }
    for a in 0..n {
        r.extend(&format!("component at {}", base.objects[a]), rho[a].check(&f.cats[a], &g.cats[a], &t.comps[a], &t2.comps[a]));
    }
    if !r.is_ok() {
        return r;
    }
    for (a, b, c) in base.cells1() {
        if !lnm_holds(f, g, t, t2, rho, (a, b, c), dir) {
            r.push(format!("(LNM, {})", base.cell1_name(a, b, c)));
        }
    }
    r
}

/// The category of transformations of one flavor and their modifications.
#[derive(Clone, Debug)]
pub struct HomCat {
    pub cat: FinCat,
    pub objects: Vec<Transformation>,
    pub arrows: Vec<(usize, usize, Modification)>,
    index: HashMap<Transformation, usize>,
}

impl HomCat {
    pub fn index_of(&self, t: &Transformation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn arrow_of(&self, s: usize, t: usize, m: &Modification) -> Option<usize> {
        self.cat.hom(s, t).iter().copied().find(|&k| self.arrows[k].2 == *m)
    }
}

struct Search<'a> {
    f: &'a CatDiagram,
    g: &'a CatDiagram,
    flavor: &'a Flavor,
    dir: Direction,
    /// non-identity 1-cells in assignment order
    order: Vec<(usize, usize, usize)>,
    /// LN1 instances and LN2 instances to run once step k is assigned
    ln1_at: Vec<Vec<(usize, usize, usize, usize, usize)>>,
    ln2_at: Vec<Vec<(usize, usize, usize)>>,
    counter: Counter,
    out: Vec<Transformation>,
}

impl Search<'_> {
    fn components(&mut self, a: usize, comps: &mut Vec<Functor>, cands: &[Vec<Functor>]) -> Result<()> {
        let n = self.f.n();
        if a == n {
            let mut t = Transformation {
                comps: comps.clone(),
                cells: (0..n * n)
                    .map(|i| vec![NatTransf { comp: Vec::new() }; self.f.base.hom(i / n, i % n).n_obj()])
                    .collect(),
            };
            for x in 0..n {
                let Some(cell) = identity_cell(self.f, self.g, &comps[x], x, self.dir) else { return Ok(()) };
                let id = self.f.base.id1(x);
                if !flavor_holds(&self.g.cats[x], self.flavor, true, &cell) {
                    return Ok(());
                }
                t.cells[x * n + x][id] = cell;
            }
            if !self.checks_at(0, &t) {
                return Ok(());
            }
            return self.cells(0, &mut t);
        }
        for c in &cands[a] {
            self.counter.tick()?;
            comps.push(c.clone());
            self.components(a + 1, comps, cands)?;
            comps.pop();
        }
        Ok(())
    }

    fn checks_at(&self, k: usize, t: &Transformation) -> bool {
        self.ln2_at[k].iter().all(|&i| ln2_holds(self.f, self.g, t, i, self.dir))
            && self.ln1_at[k].iter().all(|&i| ln1_holds(self.f, self.g, t, i, self.dir))
    }

    fn cells(&mut self, k: usize, t: &mut Transformation) -> Result<()> {
        if k == self.order.len() {
            self.out.push(t.clone());
            return Ok(());
        }
        let n = self.f.n();
        let (a, b, c) = self.order[k];
        let (s, tt) = cell_ends(self.f, self.g, &t.comps[a], &t.comps[b], a, b, c, self.dir);
        let gb = &self.g.cats[b];
        let needs = self.flavor.needs_iso(&self.f.base, a, b, c);
        let strict = *self.flavor == Flavor::Strict;
        let cands = all_nat_transfs_where(&self.f.cats[a], gb, &s, &tt, |arr| {
            if strict {
                gb.is_identity(arr)
            } else {
                !needs || gb.is_iso(arr)
            }
        })?;
        for cand in cands {
            self.counter.tick()?;
            t.cells[a * n + b][c] = cand;
            if self.checks_at(k + 1, t) {
                self.cells(k + 1, t)?;
            }
        }
        Ok(())
    }
}

/// All transformations `F ⇒ G` of a flavor, as a sorted list.
pub fn transformations(f: &CatDiagram, g: &CatDiagram, flavor: &Flavor, dir: Direction) -> Result<Vec<Transformation>> {
    let base = &f.base;
    let n = base.n_obj();
    let mut step = HashMap::new();
    let mut order = Vec::new();
    for (a, b, c) in base.cells1() {
        if a == b && c == base.id1(a) {
            step.insert((a, b, c), 0);
        } else {
            order.push((a, b, c));
            step.insert((a, b, c), order.len());
        }
    }
    let mut ln1_at = vec![Vec::new(); order.len() + 1];
    let mut ln2_at = vec![Vec::new(); order.len() + 1];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for u in 0..base.hom(a, b).n_obj() {
                    for v in 0..base.hom(b, c).n_obj() {
                        let vu = base.comp1(a, b, c, v, u);
                        let k = step[&(a, b, u)].max(step[&(b, c, v)]).max(step[&(a, c, vu)]);
                        ln1_at[k].push((a, b, c, u, v));
                    }
                }
            }
            let h = base.hom(a, b);
            for gamma in 0..h.n_arr() {
                if !h.is_identity(gamma) {
                    let k = step[&(a, b, h.src(gamma))].max(step[&(a, b, h.tgt(gamma))]);
                    ln2_at[k].push((a, b, gamma));
                }
            }
        }
    }
    let cands: Vec<Vec<Functor>> = (0..n).map(|a| all_functors(&f.cats[a], &g.cats[a])).collect::<Result<_>>()?;
    let mut s = Search { f, g, flavor, dir, order, ln1_at, ln2_at, counter: Counter::new("transformations"), out: Vec::new() };
    s.components(0, &mut Vec::new(), &cands)?;
    let mut out = s.out;
    out.sort();
    Ok(out)
}

/// All modifications `t ⇛ t2`.
pub fn modifications_between(
    f: &CatDiagram,
    g: &CatDiagram,
    t: &Transformation,
    t2: &Transformation,
    dir: Direction,
    counter: &mut Counter,
) -> Result<Vec<Modification>> {
    let base = &f.base;
    let n = base.n_obj();
    let mut cands = Vec::with_capacity(n);
    for a in 0..n {
        let c = all_nat_transfs(&f.cats[a], &g.cats[a], &t.comps[a], &t2.comps[a])?;
        if c.is_empty() {
            return Ok(Vec::new());
        }
        cands.push(c);
    }
    let mut at: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (a, b, c) in base.cells1() {
        at[a.max(b)].push((a, b, c));
    }
    let mut out = Vec::new();
    let mut rho: Vec<NatTransf> = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: usize,
        f: &CatDiagram,
        g: &CatDiagram,
        t: &Transformation,
        t2: &Transformation,
        dir: Direction,
        cands: &[Vec<NatTransf>],
        at: &[Vec<(usize, usize, usize)>],
        rho: &mut Vec<NatTransf>,
        out: &mut Vec<Modification>,
        counter: &mut Counter,
    ) -> Result<()> {
        if a == cands.len() {
            out.push(rho.clone());
            return Ok(());
        }
        for c in &cands[a] {
            counter.tick()?;
            rho.push(c.clone());
            if at[a].iter().all(|&i| lnm_holds(f, g, t, t2, rho, i, dir)) {
                rec(a + 1, f, g, t, t2, dir, cands, at, rho, out, counter)?;
            }
            rho.pop();
        }
        Ok(())
    }
    rec(0, f, g, t, t2, dir, &cands, &at, &mut rho, &mut out, counter)?;
    Ok(out)
}

fn assemble(f: &CatDiagram, g: &CatDiagram, objects: Vec<Transformation>, dir: Direction) -> Result<HomCat> {
    let mut counter = Counter::new("modifications");
    let mut arrows = Vec::new();
    let mut ids = vec![0; objects.len()];
    for (i, ti) in objects.iter().enumerate() {
        for (j, tj) in objects.iter().enumerate() {
            for m in modifications_between(f, g, ti, tj, dir, &mut counter)? {
                if i == j && m.iter().enumerate().all(|(a, r)| r.is_identity(&g.cats[a])) {
                    ids[i] = arrows.len();
                }
                arrows.push((i, j, m));
            }
        }
    }
    let idx: HashMap<(usize, usize, Modification), usize> =
        arrows.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
    let names: Vec<Arrow> = arrows
        .iter()
        .enumerate()
        .map(|(k, (s, t, _))| Arrow { name: format!("m{k}:t{s}>t{t}"), src: *s, tgt: *t })
        .collect();
    let cat = FinCat::from_fn((0..objects.len()).map(|i| format!("t{i}")).collect(), names, ids, |b, a| {
        let (s, _, ref ma) = arrows[a];
        let (_, t, ref mb) = arrows[b];
        let comp: Modification = mb.iter().zip(ma).enumerate().map(|(x, (q, p))| q.vcomp(p, &g.cats[x])).collect();
        idx[&(s, t, comp)]
    });
    let index = objects.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    Ok(HomCat { cat, objects, arrows, index })
}

/// `Hom_ε(A, Cat)(F, G)` for a flavor ε.
pub fn hom_eps(f: &CatDiagram, g: &CatDiagram, flavor: &Flavor, dir: Direction) -> Result<HomCat> {
    let objects = transformations(f, g, flavor, dir)?;
    assemble(f, g, objects, dir)
}

/// Checks that the s-, p-, σ- and lax enumerations form a chain of
/// inclusions that are full on modifications, and returns the chain.
pub fn flavor_inclusions(f: &CatDiagram, g: &CatDiagram, sigma: &Flavor, dir: Direction) -> Result<(Vec<HomCat>, Vec<Functor>, Report)> {
    let flavors = [Flavor::Strict, Flavor::Pseudo, sigma.clone(), Flavor::Lax];
    let cats: Vec<HomCat> = flavors.iter().map(|fl| hom_eps(f, g, fl, dir)).collect::<Result<_>>()?;
    let mut r = Report::new();
    let mut incl = Vec::new();
    for w in cats.windows(2) {
        let (small, big) = (&w[0], &w[1]);
        let mut obj = Vec::new();
        for t in &small.objects {
            match big.index_of(t) {
                Some(i) => obj.push(i),
                None => {
                    r.push("a transformation is missing from the next flavor".to_string());
                    obj.push(0);
                }
            }
        }
        let arr: Vec<usize> = small
            .arrows
            .iter()
            .map(|(s, t, m)| big.arrow_of(obj[*s], obj[*t], m).unwrap_or(0))
            .collect();
        let func = Functor { obj, arr };
        if r.is_ok() {
            r.extend("inclusion", func.check(&small.cat, &big.cat));
            if !func.is_injective() {
                r.push("inclusion is not injective");
            }
            for s in 0..small.cat.n_obj() {
                for t in 0..small.cat.n_obj() {
                    if small.cat.hom(s, t).len() != big.cat.hom(func.obj[s], func.obj[t]).len() {
                        r.push("inclusion is not full");
                    }
                }
            }
        }
        incl.push(func);
    }
    Ok((cats, incl, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_cat::{Fin2Cat, WideSub};

    #[test]
    fn constant_point_to_constant_arrow() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = CatDiagram::constant(&two, &FinCat::terminal());
        let q = CatDiagram::constant(&two, &FinCat::two());
        let lax = hom_eps(&p, &q, &Flavor::Lax, Direction::Lax).unwrap();
        assert_eq!(lax.cat.n_obj(), 3);
        let sig = hom_eps(&p, &q, &Flavor::Sigma(WideSub::all(&two)), Direction::Lax).unwrap();
        assert_eq!(sig.cat.n_obj(), 2);
        let s = hom_eps(&q, &q, &Flavor::Strict, Direction::Lax).unwrap();
        assert!(s.index_of(&Transformation::identity(&q)).is_some());
        for t in &lax.objects {
            assert!(check_transformation(&p, &q, t, &Flavor::Lax, Direction::Lax).is_ok());
        }
    }

    #[test]
    fn mutated_cell_violates_ln1() {
        let chain = Fin2Cat::locally_discrete(&FinCat::from_poset(&["a", "b", "c"], |x, y| x <= y));
        let p = CatDiagram::constant(&chain, &FinCat::terminal());
        let pp = FinCat::parallel_pair();
        let q = CatDiagram::constant(&chain, &pp);
        let lax = hom_eps(&p, &q, &Flavor::Lax, Direction::Lax).unwrap();
        let t = lax
            .objects
            .iter()
            .find(|t| t.comps[0].obj == [0] && t.comps[1].obj == [1] && t.comps[2].obj == [1])
            .unwrap();
        let (a, c, ac) = chain.find_cell1("a<c").unwrap();
        let (f, g) = (pp.arrow_index("f").unwrap(), pp.arrow_index("g").unwrap());
        let mut bad = t.clone();
        let cell = &mut bad.cells[a * 3 + c][ac];
        cell.comp[0] = if cell.comp[0] == f { g } else { f };
        let r = check_transformation(&p, &q, &bad, &Flavor::Lax, Direction::Lax);
        assert!(r.mentions("(LN1, b<c∘a<b)"), "{r}");
    }

    #[test]
    fn sigma_flavor_reports_non_invertible_cells() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = CatDiagram::constant(&two, &FinCat::terminal());
        let q = CatDiagram::constant(&two, &FinCat::two());
        let lax = hom_eps(&p, &q, &Flavor::Lax, Direction::Lax).unwrap();
        let sigma = Flavor::Sigma(WideSub::all(&two));
        let bad: Vec<_> = lax
            .objects
            .iter()
            .filter(|t| !check_transformation(&p, &q, t, &sigma, Direction::Lax).is_ok())
            .collect();
        assert_eq!(bad.len(), 1);
        assert!(check_transformation(&p, &q, bad[0], &sigma, Direction::Lax).mentions("invertibility"));
    }

    #[test]
    fn inclusions_and_collapse() {
        let two = Fin2Cat::locally_discrete(&FinCat::two());
        let p = CatDiagram::representable(&two, 0);
        let q = CatDiagram::constant(&two, &FinCat::two());
        for dir in [Direction::Lax, Direction::OpLax] {
            let (cats, _, r) = flavor_inclusions(&p, &q, &Flavor::Sigma(WideSub::all(&two)), dir).unwrap();
            assert!(r.is_ok(), "{r}");
            assert_eq!(cats[1].objects, cats[2].objects);
            let (cats, _, r) = flavor_inclusions(&p, &q, &Flavor::Sigma(WideSub::identities(&two)), dir).unwrap();
            assert!(r.is_ok());
            assert_eq!(cats[2].objects, cats[3].objects);
        }
    }
}
