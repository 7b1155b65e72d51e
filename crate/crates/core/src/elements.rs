//! The 2-category of elements `El_P`, its dual `Γ_Q`, the marked
//! subcategories `cart_P` and `cart_Σ`, and the induced 2-functors.

use std::cell::Cell;
use std::collections::HashMap;

use crate::budget::Counter;
use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCat, Functor, NatTransf};
use crate::transforms::{hom_eps, CatDiagram, Direction, Flavor, HomCat, Transformation};
use crate::two_cat::{Fin2Cat, TwoFunctor, WideSub};

/// `El_P` (or `Γ_Q`) with its cocartesian marking and projection.
#[derive(Clone, Debug)]
pub struct ElementsResult {
    pub cat: Fin2Cat,
    pub cart: WideSub,
    pub projection: TwoFunctor,
    pub diagram: CatDiagram,
    /// `true` for `Γ_Q`, where `φ` points the other way.
    pub dual: bool,
    /// `(x, A)` of each object.
    pub elements: Vec<(usize, usize)>,
    /// Object index of `(x, A)` is `offsets[A] + x`.
    pub offsets: Vec<usize>,
    /// Per hom `i * N + j`: `(f, φ)` of each 1-cell.
    pub cells1: Vec<Vec<(usize, usize)>>,
    /// Per hom: `(θ, source, target)` of each 2-cell.
    pub cells2: Vec<Vec<(usize, usize, usize)>>,
    index1: Vec<HashMap<(usize, usize), usize>>,
    index2: Vec<HashMap<(usize, usize, usize), usize>>,
}

impl ElementsResult {
    pub fn element(&self, a: usize, x: usize) -> usize {
        self.offsets[a] + x
    }

    /// The 1-cell `(f, φ)` from object `i` to object `j`.
    pub fn find1(&self, i: usize, j: usize, f: usize, phi: usize) -> Option<usize> {
        self.index1[i * self.elements.len() + j].get(&(f, phi)).copied()
    }

    pub fn find2(&self, i: usize, j: usize, theta: usize, s: usize, t: usize) -> Option<usize> {
        self.index2[i * self.elements.len() + j].get(&(theta, s, t)).copied()
    }
}

/// `El_P` for a strict diagram: objects `(x, A)`, 1-cells `(f, φ: Pf x → y)`,
/// composite `(gf, ψ∘Pg(φ))`.
pub fn elements_of(p: &CatDiagram) -> Result<ElementsResult> {
    if p.is_pseudo() {
        return Err(Error::PreconditionFailed("elements_of takes a strict diagram; use elements_of_pseudo".into()));
    }
    build(p, false)
}

/// `El_P` for a pseudofunctor: composite `(gf, ψ∘Pg(φ)∘(α_{f,g})⁻¹_x)` and
/// identities `(id_A, (α_A)⁻¹_x)`.
pub fn elements_of_pseudo(p: &CatDiagram) -> Result<ElementsResult> {
    let v = p.validate();
    if !v.is_ok() {
        return Err(Error::PreconditionFailed(format!("not a pseudofunctor: {v}")));
    }
    build(p, false)
}

/// `Γ_Q`: as `El_Q` but with `φ: y → Qf x`.
pub fn gamma_dual(q: &CatDiagram) -> Result<ElementsResult> {
    if q.is_pseudo() {
        return Err(Error::PreconditionFailed("Γ_Q is built for strict diagrams".into()));
    }
    build(q, true)
}

fn build(p: &CatDiagram, dual: bool) -> Result<ElementsResult> {
    let a = &p.base;
    let n = a.n_obj();
    let mut counter = Counter::new("elements");
    let mut offsets = Vec::with_capacity(n);
    let mut elements = Vec::new();
    let mut names = Vec::new();
    for x in 0..n {
        offsets.push(elements.len());
        for o in 0..p.cats[x].n_obj() {
            elements.push((o, x));
            names.push(format!("({},{})", p.cats[x].objects[o], a.objects[x]));
        }
    }
    let ne = elements.len();
    // inverse of α_A at x, and of α_{f,g} at x
    let unit_inv = |aa: usize, x: usize| {
        let c = &p.cats[aa];
        c.inverse(p.unit(aa).comp[x]).expect("pseudofunctor unit is invertible")
    };
    let mut cells1 = Vec::with_capacity(ne * ne);
    let mut index1 = Vec::with_capacity(ne * ne);
    for &(x, aa) in &elements {
        for &(y, bb) in &elements {
            let h = a.hom(aa, bb);
            let pb = &p.cats[bb];
            let mut list = Vec::new();
            for f in 0..h.n_obj() {
                let fx = p.f1(aa, bb, f).obj[x];
                let phis = if dual { pb.hom(y, fx) } else { pb.hom(fx, y) };
                for &phi in phis {
                    counter.tick()?;
                    list.push((f, phi));
                }
            }
            index1.push(list.iter().enumerate().map(|(k, &c)| (c, k)).collect::<HashMap<_, _>>());
            cells1.push(list);
        }
    }
    let mut cells2 = Vec::with_capacity(ne * ne);
    let mut index2 = Vec::with_capacity(ne * ne);
    let mut homs = Vec::with_capacity(ne * ne);
    for i in 0..ne {
        let (x, aa) = elements[i];
        for j in 0..ne {
            let (_, bb) = elements[j];
            let h = a.hom(aa, bb);
            let pb = &p.cats[bb];
            let ones = &cells1[i * ne + j];
            let mut list = Vec::new();
            for (s, &(f, phi)) in ones.iter().enumerate() {
                for (t, &(g, psi)) in ones.iter().enumerate() {
                    for &theta in h.hom(f, g) {
                        counter.tick()?;
                        let pt = p.f2(aa, bb, theta).comp[x];
                        let ok = if dual { pb.compose(pt, phi) == psi } else { pb.compose(psi, pt) == phi };
                        if ok {
                            list.push((theta, s, t));
                        }
                    }
                }
            }
            let idx: HashMap<(usize, usize, usize), usize> = list.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let suffix = &names[i];
            let obj_names: Vec<String> = ones
                .iter()
                .map(|&(f, phi)| format!("({},{})@{}", h.objects[f], pb.arrows[phi].name, suffix))
                .collect();
            let arrows: Vec<Arrow> = list
                .iter()
                .map(|&(theta, s, t)| Arrow {
                    name: format!("{}:{}=>{}", h.arrows[theta].name, obj_names[s], obj_names[t]),
                    src: s,
                    tgt: t,
                })
                .collect();
            let ids = (0..ones.len()).map(|s| idx[&(h.ids[ones[s].0], s, s)]).collect();
            let hc = FinCat::from_fn(obj_names, arrows, ids, |g2, f2| {
                let (t2, _, e) = list[g2];
                let (t1, s, _) = list[f2];
                idx[&(h.compose(t2, t1), s, e)]
            });
            homs.push(hc);
            index2.push(idx);
            cells2.push(list);
        }
    }
    let id1: Vec<usize> = elements
        .iter()
        .enumerate()
        .map(|(i, &(x, aa))| {
            let phi = if p.is_pseudo() { unit_inv(aa, x) } else { p.cats[aa].ids[x] };
            index1[i * ne + i][&(a.id1(aa), phi)]
        })
        .collect();
    let missing = Cell::new(false);
    let compose1 = |i: usize, j: usize, k: usize, g: usize, f: usize| -> usize {
        let ((x, aa), (_, bb), (_, cc)) = (elements[i], elements[j], elements[k]);
        let (f0, phi) = cells1[i * ne + j][f];
        let (g0, psi) = cells1[j * ne + k][g];
        let gf = a.comp1(aa, bb, cc, g0, f0);
        let pc = &p.cats[cc];
        let pg_phi = p.f1(bb, cc, g0).arr[phi];
        let chi = if dual {
            pc.compose(pg_phi, psi)
        } else if p.is_pseudo() {
            let m = p.mult(aa, bb, cc, f0, g0).comp[x];
            let inv = pc.inverse(m).expect("pseudofunctor composition cell is invertible");
            pc.compose(psi, pc.compose(pg_phi, inv))
        } else {
            pc.compose(psi, pg_phi)
        };
        index1[i * ne + k].get(&(gf, chi)).copied().unwrap_or_else(|| {
            missing.set(true);
            0
        })
    };
    let compose2 = |i: usize, j: usize, k: usize, beta: usize, alpha: usize| -> usize {
        let ((_, aa), (_, bb), (_, cc)) = (elements[i], elements[j], elements[k]);
        let (d, s2, t2) = cells2[j * ne + k][beta];
        let (th, s1, t1) = cells2[i * ne + j][alpha];
        let key = (a.comp2(aa, bb, cc, d, th), compose1(i, j, k, s2, s1), compose1(i, j, k, t2, t1));
        index2[i * ne + k].get(&key).copied().unwrap_or_else(|| {
            missing.set(true);
            0
        })
    };
    let cat = Fin2Cat::from_parts(names, homs, id1, compose1, compose2);
    if missing.get() {
        return Err(Error::Inconsistency("composition in the 2-category of elements left the hom-sets".into()));
    }
    let cart = WideSub::from_fn(&cat, |i, j, c| {
        let (_, bb) = elements[j];
        p.cats[bb].is_iso(cells1[i * ne + j][c].1)
    });
    let projection = TwoFunctor {
        obj: elements.iter().map(|&(_, aa)| aa).collect(),
        homs: (0..ne * ne)
            .map(|k| Functor {
                obj: cells1[k].iter().map(|&(f, _)| f).collect(),
                arr: cells2[k].iter().map(|&(t, _, _)| t).collect(),
            })
            .collect(),
    };
    Ok(ElementsResult {
        cat,
        cart,
        projection,
        diagram: p.clone(),
        dual,
        elements,
        offsets,
        cells1,
        cells2,
        index1,
        index2,
    })
}

/// `cart_Σ`: the `(f, φ)` with `f ∈ Σ` and `φ` invertible.
pub fn cart_sigma(e: &ElementsResult, sigma: &WideSub) -> WideSub {
    let base = &e.diagram.base;
    let ne = e.elements.len();
    WideSub::from_fn(&e.cat, |i, j, c| {
        let ((_, aa), (_, bb)) = (e.elements[i], e.elements[j]);
        let (f, phi) = e.cells1[i * ne + j][c];
        sigma.contains(base, aa, bb, f) && e.diagram.cats[bb].is_iso(phi)
    })
}

/// Assembles a 2-functor out of `El_P` from its action on objects and on
/// 1-cells `(f, φ)` out of `(x, A)`.
fn induced(
    src: &ElementsResult,
    tgt: &ElementsResult,
    obj: Vec<usize>,
    on1: impl Fn(usize, usize, usize, usize, usize) -> (usize, usize),
    on2: impl Fn(usize, usize, usize) -> usize,
) -> Result<TwoFunctor> {
    let ne = src.elements.len();
    let mut homs = Vec::with_capacity(ne * ne);
    for i in 0..ne {
        let (x, aa) = src.elements[i];
        for j in 0..ne {
            let (_, bb) = src.elements[j];
            let (ti, tj) = (obj[i], obj[j]);
            let o: Vec<usize> = src.cells1[i * ne + j]
                .iter()
                .map(|&(f, phi)| {
                    let (g, psi) = on1(x, aa, bb, f, phi);
                    tgt.find1(ti, tj, g, psi).ok_or_else(|| {
                        Error::PreconditionFailed(format!("no image for {}", src.cat.hom(i, j).objects[0]))
                    })
                })
                .collect::<Result<_>>()?;
            let arr = src.cells2[i * ne + j]
                .iter()
                .map(|&(theta, s, t)| {
                    tgt.find2(ti, tj, on2(aa, bb, theta), o[s], o[t])
                        .ok_or_else(|| Error::PreconditionFailed("no image for a 2-cell".into()))
                })
                .collect::<Result<_>>()?;
            homs.push(Functor { obj: o, arr });
        }
    }
    Ok(TwoFunctor { obj, homs })
}

/// `T_η : El_P → El_Q` for a lax `η: P ⇒ Q`: `(x,A) ↦ (η_A x, A)` and
/// `(f, φ) ↦ (f, η_B(φ)∘(η_f)_x)`.
pub fn t_eta(eta: &Transformation, el_p: &ElementsResult, el_q: &ElementsResult) -> Result<TwoFunctor> {
    let n = el_p.diagram.n();
    let obj = el_p.elements.iter().map(|&(x, aa)| el_q.element(aa, eta.comps[aa].obj[x])).collect();
    induced(
        el_p,
        el_q,
        obj,
        |x, aa, bb, f, phi| (f, el_q.diagram.cats[bb].compose(eta.comps[bb].arr[phi], eta.cell(n, aa, bb, f).comp[x])),
        |_, _, theta| theta,
    )
}

/// `T_H : El_{PH} → El_P`: `(x, A) ↦ (x, HA)`, `(f, φ) ↦ (Hf, φ)`.
pub fn t_h(h: &TwoFunctor, el_ph: &ElementsResult, el_p: &ElementsResult) -> Result<TwoFunctor> {
    let src = &el_ph.diagram.base;
    let obj = el_ph.elements.iter().map(|&(x, aa)| el_p.element(h.obj[aa], x)).collect();
    induced(el_ph, el_p, obj, |_, aa, bb, f, phi| (h.cell1(src, aa, bb, f), phi), |aa, bb, t| h.cell2(src, aa, bb, t))
}

/// The factorization `T: Z → El_P` of a lax `θ: k𝟙 ⇒ PF` through the
/// projection: `T(Z) = (θ_Z, FZ)`, `T(r) = (Fr, θ_r)`.
pub fn lax_pullback_factor(f: &TwoFunctor, z: &Fin2Cat, theta: &Transformation, el: &ElementsResult) -> Result<TwoFunctor> {
    let n = z.n_obj();
    let obj: Vec<usize> = (0..n).map(|c| el.element(f.obj[c], theta.comps[c].obj[0])).collect();
    let mut homs = Vec::with_capacity(n * n);
    for c in 0..n {
        for d in 0..n {
            let h = z.hom(c, d);
            let o: Vec<usize> = (0..h.n_obj())
                .map(|r| {
                    let key = (f.cell1(z, c, d, r), theta.cell(n, c, d, r).comp[0]);
                    el.find1(obj[c], obj[d], key.0, key.1)
                        .ok_or_else(|| Error::PreconditionFailed(format!("θ at {} is not a 1-cell of El_P", h.objects[r])))
                })
                .collect::<Result<_>>()?;
            let arr = (0..h.n_arr())
                .map(|t| {
                    el.find2(obj[c], obj[d], f.cell2(z, c, d, t), o[h.src(t)], o[h.tgt(t)])
                        .ok_or_else(|| Error::PreconditionFailed(format!("θ is not natural at {}", h.arrows[t].name)))
                })
                .collect::<Result<_>>()?;
            homs.push(Functor { obj: o, arr });
        }
    }
    Ok(TwoFunctor { obj, homs })
}

/// The two sides of the lax-dense correspondence and the explicit maps.
#[derive(Clone, Debug)]
pub struct DenseTransport {
    /// Transformations `P ⇒ Q`.
    pub left: HomCat,
    /// Cones `k𝟙 ⇒ Q∘π` over `El_P`.
    pub right: HomCat,
    pub right_diagram: CatDiagram,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// `θ_(x,A) = η_A(x)`, `θ_(f,φ) = η_B(φ)∘(η_f)_x`.
pub fn dense_forward(el: &ElementsResult, q: &CatDiagram, eta: &Transformation) -> Transformation {
    let n = el.diagram.n();
    let ne = el.elements.len();
    let comps = el
        .elements
        .iter()
        .map(|&(x, aa)| {
            let y = eta.comps[aa].obj[x];
            Functor { obj: vec![y], arr: vec![q.cats[aa].ids[y]] }
        })
        .collect();
    let cells = (0..ne * ne)
        .map(|k| {
            let ((x, aa), (_, bb)) = (el.elements[k / ne], el.elements[k % ne]);
            el.cells1[k]
                .iter()
                .map(|&(f, phi)| NatTransf {
                    comp: vec![q.cats[bb].compose(eta.comps[bb].arr[phi], eta.cell(n, aa, bb, f).comp[x])],
                })
                .collect()
        })
        .collect();
    Transformation { comps, cells }
}

/// `η_A(x) = θ_(x,A)`, `η_A(φ) = θ_(id,φ)`, `(η_f)_x = θ_(f, id)`.
pub fn dense_backward(el: &ElementsResult, theta: &Transformation) -> Result<Transformation> {
    let p = &el.diagram;
    if p.is_pseudo() {
        return Err(Error::PreconditionFailed("the lax-dense correspondence is built for strict diagrams".into()));
    }
    let a = &p.base;
    let n = a.n_obj();
    let ne = el.elements.len();
    let cell = |i: usize, j: usize, c: Option<usize>| -> Result<usize> {
        let c = c.ok_or_else(|| Error::Inconsistency("missing 1-cell of El_P".into()))?;
        Ok(theta.cells[i * ne + j][c].comp[0])
    };
    let comps = (0..n)
        .map(|aa| {
            let pa = &p.cats[aa];
            let obj = (0..pa.n_obj()).map(|x| theta.comps[el.element(aa, x)].obj[0]).collect();
            let arr = (0..pa.n_arr())
                .map(|phi| {
                    let (i, j) = (el.element(aa, pa.src(phi)), el.element(aa, pa.tgt(phi)));
                    cell(i, j, el.find1(i, j, a.id1(aa), phi))
                })
                .collect::<Result<_>>()?;
            Ok(Functor { obj, arr })
        })
        .collect::<Result<Vec<_>>>()?;
    let cells = (0..n * n)
        .map(|k| {
            let (aa, bb) = (k / n, k % n);
            (0..a.hom(aa, bb).n_obj())
                .map(|f| {
                    let pf = p.f1(aa, bb, f);
                    let comp = (0..p.cats[aa].n_obj())
                        .map(|x| {
                            let (i, j) = (el.element(aa, x), el.element(bb, pf.obj[x]));
                            cell(i, j, el.find1(i, j, f, p.cats[bb].ids[pf.obj[x]]))
                        })
                        .collect::<Result<_>>()?;
                    Ok(NatTransf { comp })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Transformation { comps, cells })
}

/// `Hom_ε(P, Q) ≅ Hom_ε'(k𝟙, Q∘π)` over `El_P`, with `ε'` the matching
/// marking of `El_P`: lax for lax, `cart_Σ` for `σ`, `cart_P` for pseudo.
pub fn lax_dense_transport(p: &CatDiagram, q: &CatDiagram, flavor: &Flavor) -> Result<DenseTransport> {
    let el = elements_of(p)?;
    let right_flavor = match flavor {
        Flavor::Lax => Flavor::Lax,
        Flavor::Pseudo => Flavor::Sigma(el.cart.clone()),
        Flavor::Sigma(s) => Flavor::Sigma(cart_sigma(&el, s)),
        Flavor::Strict => {
            return Err(Error::PreconditionFailed("strict transformations have no lax-dense counterpart".into()))
        }
    };
    let left = hom_eps(p, q, flavor, Direction::Lax)?;
    let point = CatDiagram::constant(&el.cat, &FinCat::terminal());
    let right_diagram = q.pullback(&el.projection, &el.cat);
    let right = hom_eps(&point, &right_diagram, &right_flavor, Direction::Lax)?;
    let forward = left
        .objects
        .iter()
        .map(|eta| right.index_of(&dense_forward(&el, q, eta)).ok_or_else(|| Error::Inconsistency("a transported transformation is not a cone".into())))
        .collect::<Result<_>>()?;
    let backward = right
        .objects
        .iter()
        .map(|th| {
            let eta = dense_backward(&el, th)?;
            left.index_of(&eta).ok_or_else(|| Error::Inconsistency("a transported cone is not a transformation".into()))
        })
        .collect::<Result<_>>()?;
    Ok(DenseTransport { left, right, right_diagram, forward, backward })
}
