//! σ-filteredness, σ-cofilteredness and σ-cofinality by exhaustive axiom
//! scans, and the cone characterizations of filteredness.
//!
//! In the parallel-pair axioms the second arrow `g` is the one required to
//! lie in Σ. Witnesses are the lexicographically first ones.

use crate::colimits::{shape_functor, Shape};
use crate::error::{Error, Result};
use crate::fincat::{find_equivalence, Arrow, FinCat, Functor};
use crate::report::Report;
use crate::transforms::{hom_eps, CatDiagram, Direction, Flavor, HomCat};
use crate::two_cat::{Fin2Cat, Marked2Cat, TwoFunctor, WideSub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Nonempty,
    F0,
    F1,
    F2,
    C0,
    C1,
    C2,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Nonempty => "nonempty",
            Axiom::F0 => "σF0",
            Axiom::F1 => "σF1",
            Axiom::F2 => "σF2",
            Axiom::C0 => "σC0",
            Axiom::C1 => "σC1",
            Axiom::C2 => "σC2",
        }
    }
}

/// One instance of an axiom. For F-axioms `objects = [A, B]` and the cells
/// live in `hom(A, B)`; for C-axioms `objects = [C, C']` (or `[C']` for
/// σC0) and the cells live in `hom(C', TC)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub axiom: Axiom,
    pub objects: Vec<usize>,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// The data answering an instance: the object `E` (or `D`, or `C`), the
/// 1-cells (`[f, g]` for σF0, `[h]` or `[u]` otherwise) and the 2-cell
/// `α` for σF1/σC1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub object: usize,
    pub cells1: Vec<usize>,
    pub cell2: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct FilterednessReport {
    pub verdict: bool,
    pub witnesses: Vec<(Instance, Witness)>,
    pub counterexample: Option<Instance>,
}

impl FilterednessReport {
    fn new() -> FilterednessReport {
        FilterednessReport { verdict: true, witnesses: Vec::new(), counterexample: None }
    }

    fn fail(mut self, i: Instance) -> FilterednessReport {
        self.verdict = false;
        self.counterexample = Some(i);
        self
    }
}

/// Human-readable instance, with cell names from the relevant homs.
pub fn describe_instance(i: &Instance, src: &Fin2Cat, tgt: &Fin2Cat, t: Option<&TwoFunctor>) -> String {
    let o = &i.objects;
    let (hom, names): (Option<&FinCat>, String) = match i.axiom {
        Axiom::Nonempty => (None, "no objects".into()),
        Axiom::F0 => (None, format!("{}, {}", src.objects[o[0]], src.objects[o[1]])),
        Axiom::F1 | Axiom::F2 => (Some(src.hom(o[0], o[1])), format!("{} → {}", src.objects[o[0]], src.objects[o[1]])),
        Axiom::C0 => (None, tgt.objects[o[0]].clone()),
        Axiom::C1 | Axiom::C2 => {
            let tc = t.map_or(o[0], |t| t.obj[o[0]]);
            (Some(tgt.hom(o[1], tc)), format!("{} → T{}", tgt.objects[o[1]], src.objects[o[0]]))
        }
    };
    let mut s = format!("{} at {names}", i.axiom.label());
    if let Some(h) = hom {
        let c1: Vec<&str> = i.cells1.iter().map(|&f| h.objects[f].as_str()).collect();
        s += &format!(" [{}]", c1.join(", "));
        if !i.cells2.is_empty() {
            let c2: Vec<&str> = i.cells2.iter().map(|&a| h.arrows[a].name.as_str()).collect();
            s += &format!(" [{}]", c2.join(", "));
        }
    }
    s
}

/// Names of a witness: its object, its 1-cells and its 2-cell.
pub fn describe_witness(i: &Instance, w: &Witness, src: &Fin2Cat, tgt: &Fin2Cat, t: Option<&TwoFunctor>) -> (String, Vec<String>, Option<String>) {
    let o = &i.objects;
    let e = w.object;
    let tw = t.map_or(e, |t| t.obj[e]);
    let (cells1, hom2): (Vec<String>, Option<&FinCat>) = match i.axiom {
        Axiom::Nonempty => (vec![], None),
        Axiom::F0 => (
            vec![src.hom(o[0], e).objects[w.cells1[0]].clone(), src.hom(o[1], e).objects[w.cells1[1]].clone()],
            None,
        ),
        Axiom::F1 | Axiom::F2 => (vec![src.hom(o[1], e).objects[w.cells1[0]].clone()], Some(src.hom(o[0], e))),
        Axiom::C0 => (vec![tgt.hom(o[0], tw).objects[w.cells1[0]].clone()], None),
        Axiom::C1 | Axiom::C2 => (vec![src.hom(o[0], e).objects[w.cells1[0]].clone()], Some(tgt.hom(o[1], tw))),
    };
    let cell2 = match (w.cell2, hom2) {
        (Some(a), Some(h)) => Some(h.arrows[a].name.clone()),
        _ => None,
    };
    (src.objects[e].clone(), cells1, cell2)
}

fn in_sigma(m: &Marked2Cat, a: usize, b: usize, f: usize) -> bool {
    m.sigma.contains(&m.cat, a, b, f)
}

/// Σ-arrows out of `b`, in lexicographic `(E, h)` order.
fn sigma_out(m: &Marked2Cat, b: usize) -> Vec<(usize, usize)> {
    let c = &m.cat;
    (0..c.n_obj()).flat_map(|e| (0..c.hom(b, e).n_obj()).map(move |h| (e, h))).filter(|&(e, h)| in_sigma(m, b, e, h)).collect()
}

fn f1_witness(m: &Marked2Cat, a: usize, b: usize, f: usize, g: usize) -> Option<Witness> {
    let c = &m.cat;
    let inv = in_sigma(m, a, b, f);
    for (e, h) in sigma_out(m, b) {
        let hae = c.hom(a, e);
        let (hf, hg) = (c.comp1(a, b, e, h, f), c.comp1(a, b, e, h, g));
        if let Some(&al) = hae.hom(hf, hg).iter().find(|&&al| !inv || hae.is_iso(al)) {
            return Some(Witness { object: e, cells1: vec![h], cell2: Some(al) });
        }
    }
    None
}

fn f2_witness(m: &Marked2Cat, a: usize, b: usize, al: usize, be: usize) -> Option<Witness> {
    let c = &m.cat;
    sigma_out(m, b)
        .into_iter()
        .find(|&(e, h)| c.whisker_left(a, b, e, h, al) == c.whisker_left(a, b, e, h, be))
        .map(|(e, h)| Witness { object: e, cells1: vec![h], cell2: None })
}

pub fn check_sigma_filtered(m: &Marked2Cat) -> FilterednessReport {
    let c = &m.cat;
    let n = c.n_obj();
    let mut r = FilterednessReport::new();
    let inst = |axiom, objects: Vec<usize>, cells1: Vec<usize>, cells2: Vec<usize>| Instance { axiom, objects, cells1, cells2 };
    if n == 0 {
        return r.fail(inst(Axiom::Nonempty, vec![], vec![], vec![]));
    }
    for a in 0..n {
        for b in 0..n {
            let found = (0..n).find_map(|e| {
                let fa = (0..c.hom(a, e).n_obj()).find(|&f| in_sigma(m, a, e, f))?;
                let gb = (0..c.hom(b, e).n_obj()).find(|&g| in_sigma(m, b, e, g))?;
                Some(Witness { object: e, cells1: vec![fa, gb], cell2: None })
            });
            match found {
                Some(w) => r.witnesses.push((inst(Axiom::F0, vec![a, b], vec![], vec![]), w)),
                None => return r.fail(inst(Axiom::F0, vec![a, b], vec![], vec![])),
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let h = c.hom(a, b);
            for f in 0..h.n_obj() {
                for g in (0..h.n_obj()).filter(|&g| in_sigma(m, a, b, g)) {
                    let i = inst(Axiom::F1, vec![a, b], vec![f, g], vec![]);
                    match f1_witness(m, a, b, f, g) {
                        Some(w) => r.witnesses.push((i, w)),
                        None => return r.fail(i),
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let h = c.hom(a, b);
            for f in 0..h.n_obj() {
                for g in (0..h.n_obj()).filter(|&g| in_sigma(m, a, b, g)) {
                    for &al in h.hom(f, g) {
                        for &be in h.hom(f, g) {
                            let i = inst(Axiom::F2, vec![a, b], vec![f, g], vec![al, be]);
                            match f2_witness(m, a, b, al, be) {
                                Some(w) => r.witnesses.push((i, w)),
                                None => return r.fail(i),
                            }
                        }
                    }
                }
            }
        }
    }
    r
}

pub fn check_sigma_cofiltered(m: &Marked2Cat) -> FilterednessReport {
    check_sigma_filtered(&m.op_dual())
}

/// Re-checks every witness of a filteredness report against the axioms.
pub fn revalidate_filtered(m: &Marked2Cat, r: &FilterednessReport) -> Report {
    let c = &m.cat;
    let mut out = Report::new();
    for (i, w) in &r.witnesses {
        let (a, b, e) = (i.objects[0], i.objects[1], w.object);
        let ok = match i.axiom {
            Axiom::F0 => {
                let (f, g) = (w.cells1[0], w.cells1[1]);
                f < c.hom(a, e).n_obj() && g < c.hom(b, e).n_obj() && in_sigma(m, a, e, f) && in_sigma(m, b, e, g)
            }
            Axiom::F1 => {
                let (f, g, h, al) = (i.cells1[0], i.cells1[1], w.cells1[0], w.cell2.unwrap_or(usize::MAX));
                let hae = c.hom(a, e);
                in_sigma(m, b, e, h)
                    && al < hae.n_arr()
                    && hae.src(al) == c.comp1(a, b, e, h, f)
                    && hae.tgt(al) == c.comp1(a, b, e, h, g)
                    && (!in_sigma(m, a, b, f) || hae.is_iso(al))
            }
            Axiom::F2 => {
                let h = w.cells1[0];
                in_sigma(m, b, e, h) && c.whisker_left(a, b, e, h, i.cells2[0]) == c.whisker_left(a, b, e, h, i.cells2[1])
            }
            _ => false,
        };
        if !ok {
            out.push(describe_instance(i, c, c, None));
        }
    }
    out
}

/// `T: C → C'` with Σ on `C` and Σ' on `C'`; `C` must be σ-filtered.
pub fn check_sigma_cofinal(t: &TwoFunctor, c: &Marked2Cat, cp: &Marked2Cat) -> Result<FilterednessReport> {
    let rep = t.check(&c.cat, &cp.cat);
    if !rep.is_ok() {
        return Err(Error::Invalid(rep.to_string()));
    }
    if !check_sigma_filtered(c).verdict {
        return Err(Error::PreconditionFailed("the domain is not σ-filtered".into()));
    }
    let (a, b) = (&c.cat, &cp.cat);
    let (n, np) = (a.n_obj(), b.n_obj());
    let mut r = FilterednessReport::new();
    let inst = |axiom, objects: Vec<usize>, cells1: Vec<usize>, cells2: Vec<usize>| Instance { axiom, objects, cells1, cells2 };
    for y in 0..np {
        let found = (0..n).find_map(|x| {
            let tx = t.obj[x];
            (0..b.hom(y, tx).n_obj()).find(|&k| in_sigma(cp, y, tx, k)).map(|k| Witness { object: x, cells1: vec![k], cell2: None })
        });
        match found {
            Some(w) => r.witnesses.push((inst(Axiom::C0, vec![y], vec![], vec![]), w)),
            None => return Ok(r.fail(inst(Axiom::C0, vec![y], vec![], vec![]))),
        }
    }
    // Σ-arrows u: x → d in C with T(u)
    let sigma_from = |x: usize| -> Vec<(usize, usize, usize)> {
        (0..n)
            .flat_map(|d| (0..a.hom(x, d).n_obj()).map(move |u| (d, u)))
            .filter(|&(d, u)| in_sigma(c, x, d, u))
            .map(|(d, u)| (d, u, t.cell1(a, x, d, u)))
            .collect()
    };
    for x in 0..n {
        let tx = t.obj[x];
        for y in 0..np {
            let h = b.hom(y, tx);
            for f in 0..h.n_obj() {
                for g in (0..h.n_obj()).filter(|&g| in_sigma(cp, y, tx, g)) {
                    let inv = in_sigma(cp, y, tx, f);
                    let i = inst(Axiom::C1, vec![x, y], vec![f, g], vec![]);
                    let found = sigma_from(x).into_iter().find_map(|(d, u, tu)| {
                        let td = t.obj[d];
                        let hd = b.hom(y, td);
                        let (uf, ug) = (b.comp1(y, tx, td, tu, f), b.comp1(y, tx, td, tu, g));
                        hd.hom(uf, ug)
                            .iter()
                            .find(|&&al| !inv || hd.is_iso(al))
                            .map(|&al| Witness { object: d, cells1: vec![u], cell2: Some(al) })
                    });
                    match found {
                        Some(w) => r.witnesses.push((i, w)),
                        None => return Ok(r.fail(i)),
                    }
                }
            }
        }
    }
    for x in 0..n {
        let tx = t.obj[x];
        for y in 0..np {
            let h = b.hom(y, tx);
            for f in 0..h.n_obj() {
                for g in (0..h.n_obj()).filter(|&g| in_sigma(cp, y, tx, g)) {
                    for &al in h.hom(f, g) {
                        for &be in h.hom(f, g) {
                            let i = inst(Axiom::C2, vec![x, y], vec![f, g], vec![al, be]);
                            let found = sigma_from(x).into_iter().find(|&(d, _, tu)| {
                                let td = t.obj[d];
                                b.whisker_left(y, tx, td, tu, al) == b.whisker_left(y, tx, td, tu, be)
                            });
                            match found {
                                Some((d, u, _)) => r.witnesses.push((i, Witness { object: d, cells1: vec![u], cell2: None })),
                                None => return Ok(r.fail(i)),
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Re-checks the witnesses of a cofinality report.
pub fn revalidate_cofinal(t: &TwoFunctor, c: &Marked2Cat, cp: &Marked2Cat, r: &FilterednessReport) -> Report {
    let (a, b) = (&c.cat, &cp.cat);
    let mut out = Report::new();
    for (i, w) in &r.witnesses {
        let ok = match i.axiom {
            Axiom::C0 => in_sigma(cp, i.objects[0], t.obj[w.object], w.cells1[0]),
            Axiom::C1 | Axiom::C2 => {
                let (x, y, d, u) = (i.objects[0], i.objects[1], w.object, w.cells1[0]);
                let (tx, td) = (t.obj[x], t.obj[d]);
                let tu = t.cell1(a, x, d, u);
                let hd = b.hom(y, td);
                in_sigma(c, x, d, u)
                    && match (i.axiom, w.cell2) {
                        (Axiom::C1, Some(al)) => {
                            let (f, g) = (i.cells1[0], i.cells1[1]);
                            hd.src(al) == b.comp1(y, tx, td, tu, f)
                                && hd.tgt(al) == b.comp1(y, tx, td, tu, g)
                                && (!in_sigma(cp, y, tx, f) || hd.is_iso(al))
                        }
                        (Axiom::C2, None) => {
                            b.whisker_left(y, tx, td, tu, i.cells2[0]) == b.whisker_left(y, tx, td, tu, i.cells2[1])
                        }
                        _ => false,
                    }
            }
            _ => false,
        };
        if !ok {
            out.push(describe_instance(i, a, b, Some(t)));
        }
    }
    out
}

/// The three cone shapes: two objects, a parallel pair, a pair of parallel
/// 2-cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeShape {
    Pair { c: usize, d: usize },
    Parallel { c: usize, d: usize, f: usize, g: usize },
    Cells { c: usize, d: usize, f: usize, g: usize, alpha: usize, beta: usize },
}

impl ConeShape {
    /// The indexing 2-category and the diagram in `a`.
    pub fn diagram(self, a: &Fin2Cat) -> (Fin2Cat, TwoFunctor) {
        let (shape, x, y, u, v, cells) = match self {
            ConeShape::Pair { c, d } => (Shape::Biproduct, c, d, 0, 0, (0, 0)),
            ConeShape::Parallel { c, d, f, g } => (Shape::Biinserter, c, d, f, g, (0, 0)),
            ConeShape::Cells { c, d, f, g, alpha, beta } => (Shape::Biequifier, c, d, f, g, (alpha, beta)),
        };
        (shape.base(), shape_functor(a, shape, x, y, u, v, cells))
    }

    /// Every instance in `m`, with the second arrow in Σ.
    pub fn instances(m: &Marked2Cat, kind: usize) -> Vec<ConeShape> {
        let a = &m.cat;
        let n = a.n_obj();
        let mut out = Vec::new();
        for c in 0..n {
            for d in 0..n {
                if kind == 1 {
                    out.push(ConeShape::Pair { c, d });
                    continue;
                }
                let h = a.hom(c, d);
                for f in 0..h.n_obj() {
                    for g in (0..h.n_obj()).filter(|&g| in_sigma(m, c, d, g)) {
                        if kind == 2 {
                            out.push(ConeShape::Parallel { c, d, f, g });
                        } else {
                            for &alpha in h.hom(f, g) {
                                for &beta in h.hom(f, g) {
                                    out.push(ConeShape::Cells { c, d, f, g, alpha, beta });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A σ-cone `θ_j F(u) ⇒ θ_i` for `u: i → j`, as the vertex, the legs and
/// the structure cells per hom `i * n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCone {
    pub vertex: usize,
    pub legs: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
}

/// `Cones_σ(F, E)` for `F: Δ → C`, with Σ_Δ = F⁻¹(Σ): op-lax cones
/// `F ⇒ k_E`, computed as transformations `k_𝟙 ⇒ C(F−, E)` over `Δ^op`.
pub fn cone_category(m: &Marked2Cat, delta: &Fin2Cat, f: &TwoFunctor, e: usize) -> Result<HomCat> {
    let a = &m.cat;
    let sig = WideSub::from_fn(delta, |x, y, u| in_sigma(m, f.obj[x], f.obj[y], f.cell1(delta, x, y, u)));
    let dop = delta.op_dual();
    let d = CatDiagram::representable(&a.op_dual(), e).pullback(&f.op(delta), &dop);
    let one = CatDiagram::constant(&dop, &FinCat::terminal());
    hom_eps(&one, &d, &Flavor::Sigma(sig.op(delta)), Direction::Lax)
}

/// A σ-cone for `F` with arrows in Σ, searched over vertices in order.
pub fn cone_existence(m: &Marked2Cat, delta: &Fin2Cat, f: &TwoFunctor) -> Result<Option<SigmaCone>> {
    let nd = delta.n_obj();
    for e in 0..m.cat.n_obj() {
        let cones = cone_category(m, delta, f, e)?;
        for t in &cones.objects {
            let legs: Vec<usize> = t.comps.iter().map(|c| c.obj[0]).collect();
            if (0..nd).all(|i| in_sigma(m, f.obj[i], e, legs[i])) {
                // cells of Δ^op hom (j, i) are those of Δ hom (i, j)
                let cells = (0..nd * nd).map(|k| t.cells[(k % nd) * nd + k / nd].iter().map(|c| c.comp[0]).collect()).collect();
                return Ok(Some(SigmaCone { vertex: e, legs, cells }));
            }
        }
    }
    Ok(None)
}

/// Filteredness through cones: every shape instance has a σ-cone with
/// arrows in Σ. The first failing instance is returned.
pub fn filtered_via_cones(m: &Marked2Cat) -> Result<(bool, Option<ConeShape>)> {
    if m.cat.n_obj() == 0 {
        return Ok((false, None));
    }
    for kind in 1..=3 {
        for s in ConeShape::instances(m, kind) {
            let (delta, f) = s.diagram(&m.cat);
            if cone_existence(m, &delta, &f)?.is_none() {
                return Ok((false, Some(s)));
            }
        }
    }
    Ok((true, None))
}

/// The explicit category equivalent to the cone category of a shape: pairs
/// of morphisms; morphisms `h` with a 2-cell `hf ⇒ hg`; morphisms `h` with
/// `hα = hβ`.
pub fn explicit_cone_category(m: &Marked2Cat, s: ConeShape, e: usize) -> Result<FinCat> {
    let a = &m.cat;
    match s {
        ConeShape::Pair { c, d } => Ok(crate::fincat::product_category(a.hom(c, e), a.hom(d, e)).0),
        ConeShape::Parallel { c, d, f, g } => {
            if !in_sigma(m, c, d, g) {
                return Err(Error::PreconditionFailed("the second arrow must lie in Σ".into()));
            }
            let (hd, hc) = (a.hom(d, e), a.hom(c, e));
            let inv = in_sigma(m, c, d, f);
            let mut objs: Vec<(usize, usize)> = Vec::new();
            for h in 0..hd.n_obj() {
                let (hf, hg) = (a.comp1(c, d, e, h, f), a.comp1(c, d, e, h, g));
                for &gm in hc.hom(hf, hg) {
                    if !inv || hc.is_iso(gm) {
                        objs.push((h, gm));
                    }
                }
            }
            let mut arrows = Vec::new();
            let mut cells = Vec::new();
            for (i, &(h, gm)) in objs.iter().enumerate() {
                for (j, &(h2, gm2)) in objs.iter().enumerate() {
                    for &eta in hd.hom(h, h2) {
                        let lhs = hc.compose(gm2, a.whisker_right(c, d, e, eta, f));
                        let rhs = hc.compose(a.whisker_right(c, d, e, eta, g), gm);
                        if lhs == rhs {
                            arrows.push(Arrow { name: format!("{}:{i}>{j}", hd.arrows[eta].name), src: i, tgt: j });
                            cells.push(eta);
                        }
                    }
                }
            }
            let ids = (0..objs.len())
                .map(|i| (0..arrows.len()).find(|&k| arrows[k].src == i && arrows[k].tgt == i && hd.is_identity(cells[k])).unwrap())
                .collect();
            let names = objs.iter().map(|&(h, gm)| format!("({},{})", hd.objects[h], hc.arrows[gm].name)).collect();
            let ar = arrows.clone();
            Ok(FinCat::from_fn(names, arrows, ids, |g2, f2| {
                let v = hd.compose(cells[g2], cells[f2]);
                (0..ar.len()).find(|&k| ar[k].src == ar[f2].src && ar[k].tgt == ar[g2].tgt && cells[k] == v).unwrap()
            }))
        }
        ConeShape::Cells { c, d, alpha, beta, .. } => {
            let hd = a.hom(d, e);
            let keep: Vec<usize> =
                (0..hd.n_obj()).filter(|&h| a.whisker_left(c, d, e, h, alpha) == a.whisker_left(c, d, e, h, beta)).collect();
            Ok(hd.full_subcategory(&keep).0)
        }
    }
}

/// Both descriptions of the cone category and an equivalence between them,
/// if one exists.
pub fn cone_category_equiv(m: &Marked2Cat, s: ConeShape, e: usize) -> Result<(HomCat, FinCat, Option<Functor>)> {
    let (delta, f) = s.diagram(&m.cat);
    let cones = cone_category(m, &delta, &f, e)?;
    let explicit = explicit_cone_category(m, s, e)?;
    let eq = find_equivalence(&cones.cat, &explicit)?;
    Ok((cones, explicit, eq))
}

/// Cofinality from pseudo-full-faithfulness: with `C'` σ-filtered, `T`
/// pseudo-fully-faithful, σC0 and Σ = T⁻¹(Σ'), `C` is σ-filtered and `T`
/// σ-cofinal. Both conclusions are re-checked directly.
pub fn cofinal_via_ff(t: &TwoFunctor, c: &Fin2Cat, cp: &Marked2Cat) -> Result<FilterednessReport> {
    let rep = t.check(c, &cp.cat);
    if !rep.is_ok() {
        return Err(Error::Invalid(rep.to_string()));
    }
    if !check_sigma_filtered(cp).verdict {
        return Err(Error::PreconditionFailed("the codomain is not σ-filtered".into()));
    }
    let ff = t.is_pseudo_fully_faithful(c, &cp.cat);
    if !ff.is_ok() {
        return Err(Error::PreconditionFailed(format!("not pseudo-fully-faithful: {ff}")));
    }
    let b = &cp.cat;
    let c0 = (0..b.n_obj()).all(|y| {
        (0..c.n_obj()).any(|x| (0..b.hom(y, t.obj[x]).n_obj()).any(|k| in_sigma(cp, y, t.obj[x], k)))
    });
    if !c0 {
        return Err(Error::PreconditionFailed("σC0 fails".into()));
    }
    let sigma = WideSub::from_fn(c, |x, y, u| in_sigma(cp, t.obj[x], t.obj[y], t.cell1(c, x, y, u)));
    let m = Marked2Cat::new(c.clone(), sigma)?;
    if !check_sigma_filtered(&m).verdict {
        return Err(Error::Inconsistency("the domain should be σ-filtered".into()));
    }
    let r = check_sigma_cofinal(t, &m, cp)?;
    if !r.verdict {
        return Err(Error::Inconsistency("the functor should be σ-cofinal".into()));
    }
    Ok(r)
}
