//! Weighted limits in Cat, conical and weighted σ-colimits, finite
//! bilimits and the pointwise and interchange checks.

mod bilimits;
mod pointwise;

pub(crate) use bilimits::shape_functor;
pub use bilimits::{
    bilimit_cat, biequalizer, biequifier, biinserter, biisoinserter, biproduct, comparison_functor, find_bilimit_cone,
    is_bilimit_cone, preserves_bilimit, shape_instances, BilimitCone, Shape, ShapeInstance,
};
pub use pointwise::{family_diagram, interchange_check, pointwise_limit_check, swap_diagram};

use crate::elements::{cart_sigma, elements_of, gamma_dual, ElementsResult};
use crate::error::{Error, Result};
use crate::fincat::{find_isomorphism, functor_category, localize, FinCat, Functor, Localized, NatTransf, Status};
use crate::report::Report;
use crate::transforms::{
    check_transformation, hom_eps, precompose_diagram, CatDiagram, Direction, Flavor, HomCat, Transformation,
};
use crate::two_cat::{Pi0, WideSub};

/// Default word-length cap of the localization.
pub const DEFAULT_CAP: usize = 16;

/// The test categories `E` against which universal properties are checked.
pub fn test_family() -> Vec<(&'static str, FinCat)> {
    vec![
        ("1", FinCat::terminal()),
        ("2", FinCat::two()),
        ("I", FinCat::iso()),
        ("parallel_pair", FinCat::parallel_pair()),
    ]
}

/// `{W, P}_ε = Hom_ε(A, Cat)(W, P)`.
pub fn weighted_limit_cat(w: &CatDiagram, p: &CatDiagram, flavor: &Flavor) -> Result<HomCat> {
    if w.base != p.base {
        return Err(Error::PreconditionFailed("weight and diagram live on different bases".into()));
    }
    hom_eps(w, p, flavor, Direction::Lax)
}

/// The category of σ-cones `Q ⇒ kE` (op-lax, invertible at Σ).
pub fn cone_category(q: &CatDiagram, e: &FinCat, sigma: &WideSub) -> Result<HomCat> {
    hom_eps(q, &CatDiagram::constant(&q.base, e), &Flavor::Sigma(sigma.clone()), Direction::OpLax)
}

/// One line of a universal-property certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub test: String,
    pub passed: bool,
    pub detail: String,
}

/// A σ-colimit in Cat as a localized π₀ of the dual elements construction.
#[derive(Clone, Debug)]
pub struct ColimitResult {
    pub gamma: ElementsResult,
    pub pi0: Pi0,
    pub localized: Localized,
    /// The universal σ-cone `λ: Q ⇒ k(colim)`, when the presentation is solved.
    pub cone: Option<Transformation>,
    pub certificate: Vec<CertificateEntry>,
}

impl ColimitResult {
    pub fn status(&self) -> Status {
        self.localized.status()
    }

    pub fn category(&self) -> Option<&FinCat> {
        self.localized.pres.cat()
    }

    pub fn certified(&self) -> bool {
        self.certificate.iter().all(|c| c.passed)
    }
}

/// `(π₀ Γ_Q^op)[cart_Σ⁻¹]` with the cone `λ_A(x) = (x, A)`,
/// `(λ_f)_x = [(f, id)]`, certified against [`test_family`].
pub fn conical_sigma_colimit(q: &CatDiagram, sigma: &WideSub, cap: usize) -> Result<ColimitResult> {
    conical_sigma_colimit_with(q, sigma, cap, &test_family())
}

pub fn conical_sigma_colimit_with(
    q: &CatDiagram,
    sigma: &WideSub,
    cap: usize,
    tests: &[(&str, FinCat)],
) -> Result<ColimitResult> {
    let v = sigma.validate(&q.base);
    if !v.is_ok() {
        return Err(Error::Invalid(format!("Σ: {v}")));
    }
    let gamma = gamma_dual(q)?;
    let op = gamma.cat.op_dual();
    let pi0 = op.pi0()?;
    let marked = cart_sigma(&gamma, sigma);
    let ne = gamma.elements.len();
    let mut inverted = Vec::new();
    for (i, j, c) in gamma.cat.cells1() {
        if marked.contains(&gamma.cat, i, j, c) {
            // a Γ-cell i → j is an arrow j → i of the opposite
            inverted.push(pi0.class[j * ne + i][c]);
        }
    }
    inverted.sort();
    inverted.dedup();
    let localized = localize(&pi0.cat, &inverted, cap)?;
    let mut res = ColimitResult { gamma, pi0, localized, cone: None, certificate: Vec::new() };
    let Some(loc) = res.localized.functor(&res.pi0.cat) else {
        return Ok(res);
    };
    let cone = universal_cone(q, &res, &loc);
    let real = res.category().expect("solved").clone();
    let check = check_transformation(q, &CatDiagram::constant(&q.base, &real), &cone, &Flavor::Sigma(sigma.clone()), Direction::OpLax);
    if !check.is_ok() {
        return Err(Error::CertificateFailure(format!("the universal cone is not a σ-cone: {check}")));
    }
    for (name, e) in tests {
        let entry = certify_conical(q, sigma, &real, &cone, name, e)?;
        if !entry.passed {
            return Err(Error::CertificateFailure(format!("test category {}: {}", entry.test, entry.detail)));
        }
        res.certificate.push(entry);
    }
    res.cone = Some(cone);
    Ok(res)
}

fn universal_cone(q: &CatDiagram, res: &ColimitResult, loc: &Functor) -> Transformation {
    let g = &res.gamma;
    let a = &q.base;
    let n = a.n_obj();
    let ne = g.elements.len();
    // the arrow of the colimit represented by a Γ-cell from i to j
    let arrow = |i: usize, j: usize, c: usize| loc.arr[res.pi0.class[j * ne + i][c]];
    let comps = (0..n)
        .map(|aa| {
            let qa = &q.cats[aa];
            let obj = (0..qa.n_obj()).map(|x| loc.obj[g.element(aa, x)]).collect();
            let arr = (0..qa.n_arr())
                .map(|phi| {
                    // (id_A, φ) from (x', A) to (x, A) in Γ_Q
                    let (i, j) = (g.element(aa, qa.tgt(phi)), g.element(aa, qa.src(phi)));
                    arrow(i, j, g.find1(i, j, a.id1(aa), phi).expect("identity-indexed cell of Γ_Q"))
                })
                .collect();
            Functor { obj, arr }
        })
        .collect();
    let cells = (0..n * n)
        .map(|k| {
            let (aa, bb) = (k / n, k % n);
            (0..a.hom(aa, bb).n_obj())
                .map(|f| {
                    let qf = q.f1(aa, bb, f);
                    let comp = (0..q.cats[aa].n_obj())
                        .map(|x| {
                            let (i, j) = (g.element(aa, x), g.element(bb, qf.obj[x]));
                            arrow(i, j, g.find1(i, j, f, q.cats[bb].ids[qf.obj[x]]).expect("(f, id) is a cell of Γ_Q"))
                        })
                        .collect();
                    NatTransf { comp }
                })
                .collect()
        })
        .collect();
    Transformation { comps, cells }
}

/// `K ↦ Kλ`, a cone `Q ⇒ kE` for a functor `K: L → E`.
pub fn precompose_cone(k: &Functor, cone: &Transformation) -> Transformation {
    Transformation {
        comps: cone.comps.iter().map(|c| k.after(c)).collect(),
        cells: cone
            .cells
            .iter()
            .map(|v| v.iter().map(|t| NatTransf { comp: t.comp.iter().map(|&c| k.arr[c]).collect() }).collect())
            .collect(),
    }
}

/// Checks that precomposition with `λ` is an isomorphism
/// `Cat(L, E) ≅ Cones_σ(Q, E)`.
fn certify_conical(
    q: &CatDiagram,
    sigma: &WideSub,
    real: &FinCat,
    cone: &Transformation,
    name: &str,
    e: &FinCat,
) -> Result<CertificateEntry> {
    let fc = functor_category(real, e)?;
    let cones = cone_category(q, e, sigma)?;
    let entry = |passed: bool, detail: String| CertificateEntry { test: name.to_string(), passed, detail };
    let mut obj = Vec::with_capacity(fc.functors.len());
    for k in &fc.functors {
        match cones.index_of(&precompose_cone(k, cone)) {
            Some(i) => obj.push(i),
            None => return Ok(entry(false, "a functor out of the colimit does not give a σ-cone".into())),
        }
    }
    let mut hit = vec![false; cones.objects.len()];
    for &i in &obj {
        if hit[i] {
            return Ok(entry(false, "two functors give the same cone".into()));
        }
        hit[i] = true;
    }
    if hit.iter().any(|&h| !h) {
        return Ok(entry(false, "some σ-cone does not factor through the colimit".into()));
    }
    let mut arr_hit = vec![false; cones.arrows.len()];
    for (s, t, tau) in &fc.trans {
        let m: Vec<NatTransf> =
            cone.comps.iter().map(|c| NatTransf { comp: c.obj.iter().map(|&x| tau.comp[x]).collect() }).collect();
        match cones.arrow_of(obj[*s], obj[*t], &m) {
            Some(k) if !arr_hit[k] => arr_hit[k] = true,
            _ => return Ok(entry(false, "precomposition is not bijective on arrows".into())),
        }
    }
    if arr_hit.iter().any(|&h| !h) {
        return Ok(entry(false, "some cone morphism is not induced".into()));
    }
    Ok(entry(true, format!("{} functors, {} natural transformations", obj.len(), arr_hit.len())))
}

/// A weighted σ-colimit `W ⊗_σ P`, computed as the conical σ-colimit of
/// `P∘π^op` over `El_W^op` marked by `cart_Σ`.
#[derive(Clone, Debug)]
pub struct WeightedColimit {
    pub elements: ElementsResult,
    /// `P∘π^op` on `op_dual(El_W)`.
    pub diagram: CatDiagram,
    pub sigma: WideSub,
    pub conical: ColimitResult,
    pub certificate: Vec<CertificateEntry>,
}

/// `W ⊗_σ P` for `W` on `op_dual(A)` and `P` on `A`.
pub fn weighted_sigma_colimit(w: &CatDiagram, p: &CatDiagram, sigma: &WideSub, cap: usize) -> Result<WeightedColimit> {
    weighted_sigma_colimit_with(w, p, sigma, cap, &test_family())
}

pub fn weighted_sigma_colimit_with(
    w: &CatDiagram,
    p: &CatDiagram,
    sigma: &WideSub,
    cap: usize,
    tests: &[(&str, FinCat)],
) -> Result<WeightedColimit> {
    let a = &p.base;
    if w.base != a.op_dual() {
        return Err(Error::PreconditionFailed("the weight must live on the opposite of the diagram's base".into()));
    }
    let el = elements_of(w)?;
    let marked = cart_sigma(&el, &sigma.op(a));
    let base = el.cat.op_dual();
    let proj = el.projection.op(&el.cat);
    let diagram = p.pullback(&proj, &base);
    let sig = marked.op(&el.cat);
    let conical = conical_sigma_colimit_with(&diagram, &sig, cap, tests)?;
    let mut certificate = Vec::new();
    if let Some(real) = conical.category() {
        // Cat(W ⊗ P, E) ≅ Hom_σ(A^op, Cat)(W, Cat(P−, E))
        for (name, e) in tests {
            let fc = functor_category(real, e)?;
            let (target, _) = precompose_diagram(p, e)?;
            let hom = hom_eps(w, &target, &Flavor::Sigma(sigma.op(a)), Direction::Lax)?;
            let passed = find_isomorphism(&fc.cat, &hom.cat)?.is_some();
            let detail = format!("{} functors against {} σ-transformations", fc.cat.n_obj(), hom.cat.n_obj());
            if !passed {
                return Err(Error::CertificateFailure(format!("test category {name}: {detail}")));
            }
            certificate.push(CertificateEntry { test: name.to_string(), passed, detail });
        }
    }
    Ok(WeightedColimit { elements: el, diagram, sigma: sig, conical, certificate })
}

/// Every object of the colimit is `λ_(x,A)(a)` for some element.
pub fn lemma_surjectivity(res: &ColimitResult) -> Report {
    let mut r = Report::new();
    let (Some(real), Some(cone)) = (res.category(), &res.cone) else {
        r.push("the colimit is undecided");
        return r;
    };
    let mut hit = vec![false; real.n_obj()];
    for c in &cone.comps {
        for &o in &c.obj {
            hit[o] = true;
        }
    }
    for (o, h) in hit.iter().enumerate() {
        if !h {
            r.push(format!("object {} is not in the image of the cone", real.objects[o]));
        }
    }
    r
}
