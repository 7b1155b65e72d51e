//! Flatness of Cat-valued 2-functors, decided by σ-cofilteredness of the
//! 2-category of elements, with left exactness, the canonical expression
//! as a colimit of representables, and strictification of pseudofunctors.

use crate::colimits::{conical_sigma_colimit, find_bilimit_cone, preserves_bilimit, precompose_cone, shape_instances, BilimitCone, Shape};
use crate::elements::{elements_of, elements_of_pseudo, ElementsResult};
use crate::error::{Error, Result};
use crate::fincat::{functor_category, has_nat_iso, is_equivalence, Arrow, EquivalenceReport, FinCat, Functor, NatTransf, Status};
use crate::filteredness::{check_sigma_cofiltered, check_sigma_filtered, FilterednessReport};
use crate::transforms::{check_transformation, hom_eps, CatDiagram, Direction, Flavor, Transformation};
use crate::two_cat::{Fin2Cat, Marked2Cat, TwoFunctor};

/// `hom(A, −)`, validated.
pub fn representable(a: &Fin2Cat, obj: usize) -> Result<CatDiagram> {
    if obj >= a.n_obj() {
        return Err(Error::Invalid(format!("no object {obj}")));
    }
    let p = CatDiagram::representable(a, obj);
    let r = p.validate();
    if !r.is_ok() {
        return Err(Error::Inconsistency(format!("representable fails validation: {r}")));
    }
    Ok(p)
}

/// Evaluation at the identity, `Hom_p(hom(A, −), Q) → Q(A)`, and whether it
/// is an equivalence.
pub fn yoneda_check(q: &CatDiagram, obj: usize) -> Result<(Functor, EquivalenceReport)> {
    if q.is_pseudo() {
        return Err(Error::PreconditionFailed("the Yoneda check takes a strict diagram".into()));
    }
    let a = &q.base;
    let h = hom_eps(&representable(a, obj)?, q, &Flavor::Pseudo, Direction::Lax)?;
    let id = a.id1(obj);
    let ev = Functor {
        obj: h.objects.iter().map(|t| t.comps[obj].obj[id]).collect(),
        arr: h.arrows.iter().map(|(_, _, m)| m[obj].comp[id]).collect(),
    };
    let rep = is_equivalence(&ev, &h.cat, &q.cats[obj]);
    Ok((ev, rep))
}

#[derive(Clone, Debug)]
pub struct ConeCheck {
    pub shape: Shape,
    pub apex: usize,
    pub preserved: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct LeftExactReport {
    pub exact: bool,
    /// No cones were supplied, so `exact` is vacuous.
    pub no_evidence: bool,
    pub cones: Vec<ConeCheck>,
}

/// Bilimit cones for every instance of the shapes in `a`, found by search,
/// and the instances with no bilimit.
pub fn generate_bilimit_cones(a: &Fin2Cat) -> Result<(Vec<BilimitCone>, Vec<(Shape, TwoFunctor)>)> {
    let mut found = Vec::new();
    let mut missing = Vec::new();
    for shape in [Shape::Biterminal, Shape::Biproduct, Shape::Biinserter, Shape::Biequalizer, Shape::Biequifier] {
        for fj in shape_instances(a, shape) {
            match find_bilimit_cone(a, shape, &fj)? {
                Some(c) => found.push(c),
                None => missing.push((shape, fj)),
            }
        }
    }
    Ok((found, missing))
}

/// Runs the comparison functor of `p` on every supplied bilimit cone.
pub fn check_left_exact(p: &CatDiagram, cones: &[BilimitCone]) -> Result<LeftExactReport> {
    let a = &p.base;
    let mut out = Vec::new();
    for c in cones {
        let j = c.shape.base();
        let fr = c.diagram.check(&j, a);
        if !fr.is_ok() || c.apex >= a.n_obj() {
            return Err(Error::PreconditionFailed(format!("malformed {} cone: {fr}", c.shape.name())));
        }
        let xr = check_transformation(&c.shape.weight(), &c.represented(a), &c.xi, &Flavor::Pseudo, Direction::Lax);
        if !xr.is_ok() {
            return Err(Error::PreconditionFailed(format!("malformed {} cone: {xr}", c.shape.name())));
        }
        let e = preserves_bilimit(p, a, c)?;
        out.push(ConeCheck { shape: c.shape, apex: c.apex, preserved: e.verdict, detail: e.witness });
    }
    Ok(LeftExactReport { exact: out.iter().all(|c| c.preserved), no_evidence: cones.is_empty(), cones: out })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Flat,
    NotFlat,
    Undecided,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Flat => "flat",
            Verdict::NotFlat => "not-flat",
            Verdict::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FlatnessVerdict {
    pub verdict: Verdict,
    pub route: String,
    pub elements: ElementsResult,
    pub evidence: FilterednessReport,
}

fn verdict_from(elements: ElementsResult, route: &str) -> FlatnessVerdict {
    let m = Marked2Cat { cat: elements.cat.clone(), sigma: elements.cart.clone() };
    let evidence = check_sigma_cofiltered(&m);
    let verdict = if evidence.verdict { Verdict::Flat } else { Verdict::NotFlat };
    FlatnessVerdict { verdict, route: route.to_string(), elements, evidence }
}

/// Flat iff `El_P` is σ-cofiltered with respect to `cart_P`.
pub fn check_flat(p: &CatDiagram) -> Result<FlatnessVerdict> {
    Ok(verdict_from(elements_of(p)?, "El_P σ-cofiltered w.r.t. cart_P"))
}

/// Both routes for a pseudofunctor: `El_P` directly, and `El_P̃` of the
/// strictification.
pub fn check_flat_pseudo(p: &CatDiagram) -> Result<FlatnessVerdict> {
    let direct = verdict_from(elements_of_pseudo(p)?, "El_P σ-cofiltered w.r.t. cart_P (pseudofunctor)");
    let (pt, _, _) = strictify(p)?;
    let via = check_flat(&pt)?;
    if via.verdict != direct.verdict {
        return Err(Error::Inconsistency(format!(
            "El_P gives {} but the strictification gives {}",
            direct.verdict.label(),
            via.verdict.label()
        )));
    }
    Ok(direct)
}

/// One object `B` of the canonical expression.
#[derive(Clone, Debug)]
pub struct CanonicalEntry {
    pub object: String,
    pub status: Status,
    /// The comparison `colim A(A, B) → P(B)` is an equivalence.
    pub equivalence: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CanonicalExpression {
    pub elements: ElementsResult,
    /// `(x, A) ↦ A(A, B)` on `El_P^op`, one per `B`.
    pub diagrams: Vec<CatDiagram>,
    pub entries: Vec<CanonicalEntry>,
}

impl CanonicalExpression {
    pub fn undecided(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::UndecidedAtCap)
    }

    pub fn pointwise_equivalence(&self) -> bool {
        self.entries.iter().all(|e| e.equivalence == Some(true))
    }
}

/// `P(B) ≃ colim_{(x, A) ∈ El_P^op} A(A, B)`, a conical σ-colimit for
/// `cart_P`, checked at every `B` through the comparison induced by
/// `f ↦ Pf(x)`.
pub fn canonical_expression(p: &CatDiagram, cap: usize) -> Result<CanonicalExpression> {
    let el = elements_of(p)?;
    let a = &p.base;
    let e = &el.cat;
    let ne = e.n_obj();
    let eop = e.op_dual();
    let proj_op = el.projection.op(e);
    let sigma = el.cart.op(e);
    let mut diagrams = Vec::new();
    let mut entries = Vec::new();
    for b in 0..a.n_obj() {
        let q = CatDiagram::representable(&a.op_dual(), b).pullback(&proj_op, &eop);
        let pb = &p.cats[b];
        // κ_(x,A)(f) = Pf(x), with cells Pg(φ) for (h, φ): (x, A) → (y, C)
        let comps: Vec<Functor> = el
            .elements
            .iter()
            .map(|&(x, aa)| {
                let h = a.hom(aa, b);
                Functor {
                    obj: (0..h.n_obj()).map(|f| p.f1(aa, b, f).obj[x]).collect(),
                    arr: (0..h.n_arr()).map(|g| p.f2(aa, b, g).comp[x]).collect(),
                }
            })
            .collect();
        let cells = (0..ne * ne)
            .map(|k| {
                let (j, i) = (k / ne, k % ne);
                let cc = el.elements[j].1;
                el.cells1[i * ne + j]
                    .iter()
                    .map(|&(_, phi)| NatTransf { comp: (0..a.hom(cc, b).n_obj()).map(|g| p.f1(cc, b, g).arr[phi]).collect() })
                    .collect()
            })
            .collect();
        let kappa = Transformation { comps, cells };
        let name = a.objects[b].clone();
        let res = conical_sigma_colimit(&q, &sigma, cap)?;
        let entry = match (res.category(), &res.cone) {
            (Some(l), Some(lambda)) => {
                let fc = functor_category(l, pb)?;
                match fc.functors.iter().find(|k| precompose_cone(k, lambda) == kappa) {
                    Some(k) => {
                        let eq = is_equivalence(k, l, pb);
                        let detail = eq.witness.clone().unwrap_or_else(|| "comparison is an equivalence".into());
                        CanonicalEntry { object: name, status: Status::Finite, equivalence: Some(eq.verdict), detail }
                    }
                    None => CanonicalEntry {
                        object: name,
                        status: Status::Finite,
                        equivalence: Some(false),
                        detail: "the canonical cone does not factor through the colimit".into(),
                    },
                }
            }
            _ => CanonicalEntry { object: name, status: res.status(), equivalence: None, detail: "localization undecided at cap".into() },
        };
        diagrams.push(q);
        entries.push(entry);
    }
    Ok(CanonicalExpression { elements: el, diagrams, entries })
}

/// `P̃B` has objects `(f: A → B, x ∈ PA)` and arrows `Pf(x) → Pf'(x')`;
/// `P̃g(f, x) = (gf, x)`, `η_A(x) = (id_A, x)`, `ε_B(f, x) = Pf(x)`.
pub fn strictify(p: &CatDiagram) -> Result<(CatDiagram, Transformation, Transformation)> {
    let v = p.validate();
    if !v.is_ok() {
        return Err(Error::Invalid(format!("not a pseudofunctor: {v}")));
    }
    let a = &p.base;
    let n = a.n_obj();
    // per B: objects (A, f, x) and arrows (s, t, φ)
    let mut objs: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(n);
    let mut arrs: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(n);
    let mut cats = Vec::with_capacity(n);
    for b in 0..n {
        let pb = &p.cats[b];
        let o: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|aa| (0..a.hom(aa, b).n_obj()).flat_map(move |f| (0..p.cats[aa].n_obj()).map(move |x| (aa, f, x))))
            .collect();
        let image: Vec<usize> = o.iter().map(|&(aa, f, x)| p.f1(aa, b, f).obj[x]).collect();
        let mut ar = Vec::new();
        for s in 0..o.len() {
            for t in 0..o.len() {
                for &phi in pb.hom(image[s], image[t]) {
                    ar.push((s, t, phi));
                }
            }
        }
        let names = o.iter().map(|&(aa, f, x)| format!("({},{})", a.cell1_name(aa, b, f), p.cats[aa].objects[x])).collect();
        let arrows: Vec<Arrow> =
            ar.iter().map(|&(s, t, phi)| Arrow { name: format!("{}:{s}>{t}", pb.arrows[phi].name), src: s, tgt: t }).collect();
        let ids = (0..o.len()).map(|s| ar.iter().position(|&(x, y, phi)| x == s && y == s && pb.is_identity(phi)).unwrap()).collect();
        let index = |s: usize, t: usize, phi: usize| ar.iter().position(|&e| e == (s, t, phi)).unwrap();
        let c = FinCat::from_fn(names, arrows, ids, |g, f| index(ar[f].0, ar[g].1, pb.compose(ar[g].2, ar[f].2)));
        objs.push(o);
        arrs.push(ar);
        cats.push(c);
    }
    let find_obj = |b: usize, key: (usize, usize, usize)| objs[b].iter().position(|&k| k == key).unwrap();
    let find_arr = |b: usize, key: (usize, usize, usize)| arrs[b].iter().position(|&k| k == key).unwrap();
    let inv = |t: &NatTransf, c: &FinCat| t.inverse(c).expect("structure cells are invertible");
    let mut on1 = Vec::with_capacity(n * n);
    let mut on2 = Vec::with_capacity(n * n);
    for b in 0..n {
        for b2 in 0..n {
            let pc = &p.cats[b2];
            let hom = a.hom(b, b2);
            let funcs: Vec<Functor> = (0..hom.n_obj())
                .map(|g| {
                    let obj: Vec<usize> = objs[b]
                        .iter()
                        .map(|&(aa, f, x)| find_obj(b2, (aa, a.comp1(aa, b, b2, g, f), x)))
                        .collect();
                    let arr = arrs[b]
                        .iter()
                        .map(|&(s, t, phi)| {
                            let ((aa, f, x), (a2, f2, x2)) = (objs[b][s], objs[b][t]);
                            let m1 = p.mult(aa, b, b2, f, g);
                            let m2 = p.mult(a2, b, b2, f2, g);
                            let m1i = inv(&m1, pc);
                            let v = pc.compose(m2.comp[x2], pc.compose(p.f1(b, b2, g).arr[phi], m1i.comp[x]));
                            find_arr(b2, (obj[s], obj[t], v))
                        })
                        .collect();
                    Functor { obj, arr }
                })
                .collect();
            let cells: Vec<NatTransf> = (0..hom.n_arr())
                .map(|gm| {
                    let comp = objs[b]
                        .iter()
                        .enumerate()
                        .map(|(s, &(aa, f, x))| {
                            let w = a.whisker_right(aa, b, b2, gm, f);
                            let phi = p.f2(aa, b2, w).comp[x];
                            find_arr(b2, (funcs[hom.src(gm)].obj[s], funcs[hom.tgt(gm)].obj[s], phi))
                        })
                        .collect();
                    NatTransf { comp }
                })
                .collect();
            on1.push(funcs);
            on2.push(cells);
        }
    }
    let pt = CatDiagram { base: a.clone(), cats, on1, on2, pseudo: None };
    let r = pt.validate();
    if !r.is_ok() {
        return Err(Error::Inconsistency(format!("strictification is not a 2-functor: {r}")));
    }
    // η_A(x) = (id_A, x), η_A(φ) = α_A φ α_A⁻¹; (η_f)_x = (α_B)_{Pf x}
    let eta_comps: Vec<Functor> = (0..n)
        .map(|aa| {
            let pa = &p.cats[aa];
            let u = p.unit(aa);
            let ui = inv(&u, pa);
            let id = a.id1(aa);
            Functor {
                obj: (0..pa.n_obj()).map(|x| find_obj(aa, (aa, id, x))).collect(),
                arr: (0..pa.n_arr())
                    .map(|phi| {
                        let (x, y) = (pa.src(phi), pa.tgt(phi));
                        let v = pa.compose(u.comp[y], pa.compose(phi, ui.comp[x]));
                        find_arr(aa, (find_obj(aa, (aa, id, x)), find_obj(aa, (aa, id, y)), v))
                    })
                    .collect(),
            }
        })
        .collect();
    let eta_cells = (0..n * n)
        .map(|k| {
            let (aa, b) = (k / n, k % n);
            let u = p.unit(b);
            (0..a.hom(aa, b).n_obj())
                .map(|f| {
                    let comp = (0..p.cats[aa].n_obj())
                        .map(|x| {
                            let px = p.f1(aa, b, f).obj[x];
                            find_arr(b, (find_obj(b, (aa, f, x)), find_obj(b, (b, a.id1(b), px)), u.comp[px]))
                        })
                        .collect();
                    NatTransf { comp }
                })
                .collect()
        })
        .collect();
    let eta = Transformation { comps: eta_comps, cells: eta_cells };
    // ε_B(f, x) = Pf(x), ε_B(φ) = φ; (ε_g)_(f,x) = (α_{f,g})_x
    let eps_comps: Vec<Functor> = (0..n)
        .map(|b| Functor {
            obj: objs[b].iter().map(|&(aa, f, x)| p.f1(aa, b, f).obj[x]).collect(),
            arr: arrs[b].iter().map(|&(_, _, phi)| phi).collect(),
        })
        .collect();
    let eps_cells = (0..n * n)
        .map(|k| {
            let (b, b2) = (k / n, k % n);
            (0..a.hom(b, b2).n_obj())
                .map(|g| NatTransf { comp: objs[b].iter().map(|&(aa, f, x)| p.mult(aa, b, b2, f, g).comp[x]).collect() })
                .collect()
        })
        .collect();
    let eps = Transformation { comps: eps_comps, cells: eps_cells };
    Ok((pt, eta, eps))
}

/// Checks the strictification data: `η` and `ε` pseudonatural, each `η_A`
/// an equivalence and `ε_A η_A ≅ id`.
pub fn check_strictification(p: &CatDiagram, pt: &CatDiagram, eta: &Transformation, eps: &Transformation) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let r = check_transformation(p, pt, eta, &Flavor::Pseudo, Direction::Lax);
    if !r.is_ok() {
        bad.push(format!("η: {r}"));
    }
    let r = check_transformation(pt, p, eps, &Flavor::Pseudo, Direction::Lax);
    if !r.is_ok() {
        bad.push(format!("ε: {r}"));
    }
    for aa in 0..p.n() {
        let e = is_equivalence(&eta.comps[aa], &p.cats[aa], &pt.cats[aa]);
        if !e.verdict {
            bad.push(format!("η at {} is not an equivalence", p.base.objects[aa]));
        }
        let round = eps.comps[aa].after(&eta.comps[aa]);
        if !has_nat_iso(&p.cats[aa], &p.cats[aa], &round, &Functor::identity(&p.cats[aa]))? {
            bad.push(format!("ε η at {} is not isomorphic to the identity", p.base.objects[aa]));
        }
    }
    Ok(bad)
}

/// Left exactness on the supplied cones forces `El_P` to be σ-cofiltered;
/// a failure is a bug.
pub fn exact_implies_cofiltered_check(p: &CatDiagram, cones: &[BilimitCone]) -> Result<FlatnessVerdict> {
    let le = check_left_exact(p, cones)?;
    if !le.exact {
        return Err(Error::PreconditionFailed("P is not left exact on the supplied cones".into()));
    }
    let v = check_flat(p)?;
    if v.verdict != Verdict::Flat {
        return Err(Error::Inconsistency("left exact but El_P is not σ-cofiltered".into()));
    }
    let m = Marked2Cat { cat: v.elements.cat.op_dual(), sigma: v.elements.cart.op(&v.elements.cat) };
    if !check_sigma_filtered(&m).verdict {
        return Err(Error::Inconsistency("El_P^op is not σ-filtered".into()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimits::DEFAULT_CAP;
    use crate::fixtures;

    fn const_on(a: &Fin2Cat, c: &FinCat) -> CatDiagram {
        CatDiagram::constant(a, c)
    }

    #[test]
    fn representables_on_two() {
        let b = fixtures::two();
        let p0 = representable(&b, 0).unwrap();
        assert_eq!((p0.cats[0].n_obj(), p0.cats[1].n_obj()), (1, 1));
        let p1 = representable(&b, 1).unwrap();
        assert_eq!((p1.cats[0].n_obj(), p1.cats[1].n_obj()), (0, 1));
        let t = representable(&Fin2Cat::terminal(), 0).unwrap();
        assert_eq!(t.cats[0].n_obj(), 1);
    }

    #[test]
    fn yoneda() {
        for (name, b) in fixtures::bases() {
            for x in 0..b.n_obj() {
                let (_, e) = yoneda_check(&representable(&b, x).unwrap(), x).unwrap();
                assert!(e.verdict, "{name}");
                let (_, e) = yoneda_check(&const_on(&b, &FinCat::terminal()), x).unwrap();
                assert!(e.verdict, "{name}");
            }
        }
        for (name, p) in fixtures::strict_diagrams() {
            for x in 0..p.n() {
                assert!(yoneda_check(&p, x).unwrap().1.verdict, "{name}");
            }
        }
    }

    #[test]
    fn flat_verdicts() {
        for (name, b) in fixtures::bases() {
            for x in 0..b.n_obj() {
                assert_eq!(check_flat(&representable(&b, x).unwrap()).unwrap().verdict, Verdict::Flat, "{name}");
            }
        }
        let pair = const_on(&Fin2Cat::terminal(), &FinCat::discrete(&["a", "b"]));
        let v = check_flat(&pair).unwrap();
        assert_eq!(v.verdict, Verdict::NotFlat);
        assert_eq!(v.evidence.counterexample.unwrap().axiom, crate::filteredness::Axiom::F0);
        assert_eq!(check_flat(&const_on(&fixtures::diamond(), &FinCat::terminal())).unwrap().verdict, Verdict::Flat);
        assert_eq!(check_flat(&fixtures::pick_zero()).unwrap().verdict, Verdict::NotFlat);
    }

    #[test]
    fn left_exact_on_semilattices() {
        for (name, a) in fixtures::semilattices() {
            let (cones, missing) = generate_bilimit_cones(&a).unwrap();
            assert!(missing.is_empty(), "{name}");
            let mut ps: Vec<CatDiagram> = (0..a.n_obj()).map(|x| representable(&a, x).unwrap()).collect();
            for c in [FinCat::empty(), FinCat::terminal(), FinCat::two(), FinCat::iso()] {
                ps.push(const_on(&a, &c));
            }
            for p in &ps {
                let le = check_left_exact(p, &cones).unwrap();
                let flat = check_flat(p).unwrap().verdict == Verdict::Flat;
                assert_eq!(le.exact, flat, "{name}");
            }
        }
        let empty = const_on(&fixtures::diamond(), &FinCat::empty());
        let le = check_left_exact(&empty, &[]).unwrap();
        assert!(le.exact && le.no_evidence);
    }

    #[test]
    fn exact_implies_cofiltered() {
        let a = fixtures::diamond();
        let (cones, _) = generate_bilimit_cones(&a).unwrap();
        for p in [representable(&a, 1).unwrap(), const_on(&a, &FinCat::terminal()), const_on(&a, &FinCat::iso())] {
            assert_eq!(exact_implies_cofiltered_check(&p, &cones).unwrap().verdict, Verdict::Flat);
        }
        assert!(matches!(
            exact_implies_cofiltered_check(&const_on(&a, &FinCat::two()), &cones),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn canonical_expressions() {
        for (name, b) in [("two", fixtures::two()), ("free_cell", fixtures::free_cell())] {
            for x in 0..b.n_obj() {
                let ce = canonical_expression(&representable(&b, x).unwrap(), DEFAULT_CAP).unwrap();
                assert!(ce.pointwise_equivalence(), "{name} {:?}", ce.entries);
            }
        }
        let ce = canonical_expression(&fixtures::pick_zero(), DEFAULT_CAP).unwrap();
        assert!(ce.pointwise_equivalence(), "{:?}", ce.entries);
        let ce = canonical_expression(&const_on(&fixtures::two(), &FinCat::empty()), DEFAULT_CAP).unwrap();
        assert!(ce.pointwise_equivalence());
    }

    #[test]
    fn strictification() {
        let mut ps: Vec<(&str, CatDiagram)> = fixtures::pseudo_diagrams();
        ps.push(("pick_zero", fixtures::pick_zero()));
        ps.push(("rep_free_cell", CatDiagram::representable(&fixtures::free_cell(), 0)));
        for (name, p) in ps {
            let (pt, eta, eps) = strictify(&p).unwrap();
            assert!(!pt.is_pseudo());
            let bad = check_strictification(&p, &pt, &eta, &eps).unwrap();
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
        let t = const_on(&Fin2Cat::terminal(), &FinCat::two());
        let (pt, _, _) = strictify(&t).unwrap();
        assert!(crate::fincat::find_isomorphism(&pt.cats[0], &FinCat::two()).unwrap().is_some());
    }

    #[test]
    fn pseudo_routes_agree() {
        for (name, p) in fixtures::pseudo_diagrams() {
            let v = check_flat_pseudo(&p).unwrap();
            let want = if name == "two_isos_on_terminal" { Verdict::NotFlat } else { Verdict::Flat };
            assert_eq!(v.verdict, want, "{name}");
        }
        for (name, p) in fixtures::strict_diagrams() {
            assert_eq!(check_flat_pseudo(&p.as_pseudo()).unwrap().verdict, check_flat(&p).unwrap().verdict, "{name}");
        }
    }
}
