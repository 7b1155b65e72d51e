//! One function per command. Each returns the JSON report and the exit
//! code it implies; errors are mapped to exit codes by the caller.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sigmacat::colimits::{
    biequalizer, biequifier, biinserter, biisoinserter, biproduct, bilimit_cat, conical_sigma_colimit, weighted_limit_cat,
    weighted_sigma_colimit, CertificateEntry, Shape, ShapeInstance,
};
use sigmacat::elements::{cart_sigma, elements_of, elements_of_pseudo};
use sigmacat::filteredness::{
    check_sigma_cofinal, check_sigma_cofiltered, check_sigma_filtered, describe_instance, describe_witness, revalidate_cofinal,
    revalidate_filtered, FilterednessReport,
};
use sigmacat::fincat::{FinCat, Functor, NatTransf, Status};
use sigmacat::flatness::{canonical_expression, check_flat, check_flat_pseudo, check_left_exact, check_strictification, generate_bilimit_cones, strictify, yoneda_check, Verdict};
use sigmacat::transforms::{hom_eps, CatDiagram, Direction, Flavor, HomCat};
use sigmacat::two_cat::{Fin2Cat, Marked2Cat, TwoFunctor, WideSub};
use sigmacat::{Error, Result};

use crate::doc::{self, cat_to_doc, diagram_to_doc, two_cat_to_doc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// A report and the exit code it implies.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
    pub prose: String,
}

impl Outcome {
    fn ok(report: Value, prose: impl Into<String>) -> Outcome {
        Outcome { report, code: EXIT_OK, prose: prose.into() }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invalid(_) | Error::PreconditionFailed(_) => EXIT_INVALID,
        Error::SizeLimitExceeded { .. } => EXIT_UNDECIDED,
        Error::Inconsistency(_) | Error::CertificateFailure(_) => EXIT_FAILED,
    }
}

pub fn error_report(e: &Error) -> Value {
    let kind = match e {
        Error::Invalid(_) => "invalid-input",
        Error::PreconditionFailed(_) => "precondition-failed",
        Error::SizeLimitExceeded { .. } => "size-limit-exceeded",
        Error::Inconsistency(_) => "inconsistency",
        Error::CertificateFailure(_) => "certificate-failure",
    };
    json!({ "error": kind, "message": e.to_string() })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("documents serialize")
}

/// Global settings and document loading. Every document is parsed and
/// validated before any computation runs.
pub struct Workspace {
    pub cap: usize,
}

impl Workspace {
    fn read(&self, path: &Path) -> Result<String> {
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
    }

    fn checked<T>(&self, path: &Path, parsed: Result<T>, report: impl FnOnce(&T) -> sigmacat::report::Report) -> Result<T> {
        let v = parsed.map_err(|e| Error::Invalid(format!("{}: {}", path.display(), strip(&e))))?;
        let r = report(&v);
        if !r.is_ok() {
            return Err(Error::Invalid(format!("{}: {}", path.display(), r.violations.join("; "))));
        }
        Ok(v)
    }

    pub fn two_cat(&self, path: &Path) -> Result<(Fin2Cat, Option<WideSub>)> {
        let text = self.read(path)?;
        self.checked(path, doc::parse_two_cat(&text), |(a, s)| {
            let mut r = a.validate();
            if let (true, Some(s)) = (r.is_ok(), s) {
                r.extend("sigma", s.validate(a));
            }
            r
        })
    }

    pub fn diagram(&self, path: &Path) -> Result<CatDiagram> {
        let text = self.read(path)?;
        self.checked(path, doc::parse_diagram(&text), |p| p.validate())
    }

    pub fn two_functor(&self, path: &Path) -> Result<(Fin2Cat, Fin2Cat, TwoFunctor)> {
        let text = self.read(path)?;
        self.checked(path, doc::parse_two_functor(&text), |(c, d, t)| {
            let mut r = c.validate();
            r.extend("target", d.validate());
            if r.is_ok() {
                r = t.check(c, d);
            }
            r
        })
    }
}

fn strip(e: &Error) -> String {
    match e {
        Error::Invalid(m) => m.clone(),
        other => other.to_string(),
    }
}

/// Σ from a flag: a path to a JSON array of names, a comma-separated list
/// of names, `*` for every 1-cell, or the empty string for identities
/// only. The named 1-cells generate Σ.
pub fn sigma_from_arg(a: &Fin2Cat, arg: &str) -> Result<WideSub> {
    let arg = arg.trim();
    if arg == "*" {
        return Ok(WideSub::all(a));
    }
    let names: Vec<String> = if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Invalid(format!("{arg}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{arg}: expected an array of 1-cell names: {e}")))?
    } else {
        arg.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
    };
    WideSub::generated_by(a, &names)
}

fn sigma_or(a: &Fin2Cat, arg: Option<&str>, from_doc: Option<WideSub>, what: &str) -> Result<WideSub> {
    match (arg, from_doc) {
        (Some(s), _) => sigma_from_arg(a, s),
        (None, Some(s)) => Ok(s),
        (None, None) => Err(Error::Invalid(format!("no Σ given: pass {what}"))),
    }
}

/// `s`, `p`, `lax`, `sigma` (Σ from `--sigma`) or `{"sigma": [names]}`.
pub fn parse_flavor(a: &Fin2Cat, s: &str, sigma: Option<&str>) -> Result<Flavor> {
    match s.trim() {
        "s" | "strict" => Ok(Flavor::Strict),
        "p" | "pseudo" => Ok(Flavor::Pseudo),
        "lax" => Ok(Flavor::Lax),
        "sigma" => Ok(Flavor::Sigma(sigma_or(a, sigma, None, "--sigma with --flavor sigma")?)),
        t if t.starts_with('{') => {
            #[derive(serde::Deserialize)]
            #[serde(deny_unknown_fields)]
            struct SigmaFlavor {
                sigma: Vec<String>,
            }
            let f: SigmaFlavor = serde_json::from_str(t).map_err(|e| Error::Invalid(format!("flavor: {e}")))?;
            Ok(Flavor::Sigma(WideSub::generated_by(a, &f.sigma)?))
        }
        other => Err(Error::Invalid(format!("unknown flavor {other:?}; expected s, p, lax, sigma or {{\"sigma\": [...]}}"))),
    }
}

fn same_base(p: &CatDiagram, q: &CatDiagram, what: &str) -> Result<()> {
    if p.base != q.base {
        return Err(Error::Invalid(format!("{what} live on different base 2-categories")));
    }
    Ok(())
}

fn hom_report(h: &HomCat) -> Value {
    json!({
        "objects": h.cat.n_obj(),
        "arrows": h.cat.n_arr(),
        "category": to_value(&cat_to_doc(&h.cat)),
    })
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(x), Value::Object(y)) = (a.as_object_mut(), b) {
        x.extend(y);
    }
    a
}

// ---------- commands

pub fn validate(ws: &Workspace, file: &Path) -> Result<Outcome> {
    let text = ws.read(file)?;
    let d = doc::parse_document(&text).map_err(|e| Error::Invalid(format!("{}: {}", file.display(), strip(&e))))?;
    let r = d.validate();
    let report = json!({ "kind": d.kind(), "valid": r.is_ok(), "violations": r.violations });
    let code = if r.is_ok() { EXIT_OK } else { EXIT_INVALID };
    let prose = if r.is_ok() { format!("valid {}", d.kind()) } else { format!("invalid {}:\n{r}", d.kind()) };
    Ok(Outcome { report, code, prose })
}

pub fn hom(ws: &Workspace, p: &Path, q: &Path, flavor: &str, sigma: Option<&str>, oplax: bool) -> Result<Outcome> {
    let (p, q) = (ws.diagram(p)?, ws.diagram(q)?);
    same_base(&p, &q, "the two diagrams")?;
    let fl = parse_flavor(&p.base, flavor, sigma)?;
    let dir = if oplax { Direction::OpLax } else { Direction::Lax };
    let h = hom_eps(&p, &q, &fl, dir)?;
    let head = json!({ "flavor": fl.label(), "direction": if oplax { "oplax" } else { "lax" } });
    let prose = format!("{} transformations, {} modifications", h.cat.n_obj(), h.cat.n_arr());
    Ok(Outcome::ok(merge(head, hom_report(&h)), prose))
}

#[derive(Serialize)]
struct ElementsDoc {
    #[serde(flatten)]
    cat: doc::TwoCatDoc,
    cart: Vec<String>,
    cart_sigma: Vec<String>,
}

pub fn elements(ws: &Workspace, file: &Path, pseudo: bool, sigma: Option<&str>) -> Result<Outcome> {
    let p = ws.diagram(file)?;
    let el = if p.is_pseudo() || pseudo { elements_of_pseudo(&as_pseudo(&p))? } else { elements_of(&p)? };
    let s = match sigma {
        Some(s) => sigma_from_arg(&p.base, s)?,
        None => WideSub::all(&p.base),
    };
    let cs = cart_sigma(&el, &s);
    let d = ElementsDoc { cat: two_cat_to_doc(&el.cat, None), cart: el.cart.names(&el.cat), cart_sigma: cs.names(&el.cat) };
    let prose = format!("El_P has {} objects and {} 1-cells", el.cat.n_obj(), el.cat.cells1().len());
    Ok(Outcome::ok(to_value(&d), prose))
}

fn as_pseudo(p: &CatDiagram) -> CatDiagram {
    if p.is_pseudo() {
        p.clone()
    } else {
        p.as_pseudo()
    }
}

pub fn limit(ws: &Workspace, weight: &Path, file: &Path, flavor: &str, sigma: Option<&str>) -> Result<Outcome> {
    let (w, p) = (ws.diagram(weight)?, ws.diagram(file)?);
    same_base(&w, &p, "the weight and the diagram")?;
    let fl = parse_flavor(&p.base, flavor, sigma)?;
    let h = weighted_limit_cat(&w, &p, &fl)?;
    let prose = format!("the weighted limit has {} objects and {} arrows", h.cat.n_obj(), h.cat.n_arr());
    Ok(Outcome::ok(merge(json!({ "flavor": fl.label(), "non_canonical": true }), hom_report(&h)), prose))
}

fn certificate(c: &[CertificateEntry]) -> Value {
    c.iter().map(|e| json!({ "test": e.test, "passed": e.passed, "detail": e.detail })).collect()
}

fn status_label(s: Status) -> &'static str {
    match s {
        Status::Finite => "finite",
        Status::UndecidedAtCap => "undecided-at-cap",
    }
}

pub fn colimit(ws: &Workspace, file: &Path, sigma: Option<&str>, weight: Option<&Path>) -> Result<Outcome> {
    let p = ws.diagram(file)?;
    let s = sigma_or(&p.base, sigma, None, "--sigma")?;
    let (kind, conical, certs) = match weight {
        None => {
            let r = conical_sigma_colimit(&p, &s, ws.cap)?;
            let c = r.certificate.clone();
            ("conical", r, c)
        }
        Some(w) => {
            let w = ws.diagram(w)?;
            let r = weighted_sigma_colimit(&w, &p, &s, ws.cap)?;
            let mut c = r.conical.certificate.clone();
            c.extend(r.certificate.iter().cloned());
            ("weighted", r.conical, c)
        }
    };
    let status = conical.status();
    let cat = conical.category();
    let report = json!({
        "kind": kind,
        "status": status_label(status),
        "cap": ws.cap,
        "non_canonical": true,
        "objects": cat.map(|c| c.n_obj()),
        "arrows": cat.map(|c| c.n_arr()),
        "category": cat.map(|c| to_value(&cat_to_doc(c))),
        "certificate": certificate(&certs),
    });
    let (code, prose) = if status == Status::UndecidedAtCap {
        (EXIT_UNDECIDED, format!("undecided: the localization did not close within word length {}", ws.cap))
    } else if certs.iter().any(|c| !c.passed) {
        (EXIT_FAILED, "the universal property certificate failed".to_string())
    } else {
        let c = cat.expect("finite colimit");
        (EXIT_OK, format!("colimit with {} objects and {} arrows, certified", c.n_obj(), c.n_arr()))
    };
    Ok(Outcome { report, code, prose })
}

fn shape_instance(ws: &Workspace, shape: Shape, file: Option<&Path>) -> Result<ShapeInstance> {
    let d = match file {
        Some(f) => doc::parse_shape(&ws.read(f)?).map_err(|e| Error::Invalid(format!("{}: {}", f.display(), strip(&e))))?,
        None => doc::ShapeDoc::default(),
    };
    let want = |cats: usize, funs: usize, cells: usize| -> Result<()> {
        if (d.categories.len(), d.functors.len(), d.cells.len()) != (cats, funs, cells) {
            return Err(Error::Invalid(format!(
                "{} takes {cats} categories, {funs} functors and {cells} natural transformations",
                shape.name()
            )));
        }
        Ok(())
    };
    let cats = d
        .categories
        .iter()
        .map(|c| {
            let c = doc::cat_from_doc(c)?;
            let r = c.validate();
            if !r.is_ok() {
                return Err(Error::Invalid(r.violations.join("; ")));
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    let funs = |c: &FinCat, e: &FinCat| -> Result<Vec<Functor>> {
        d.functors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let f = doc::functor_from_doc(f, c, e, &format!("functor {i}"))?;
                let r = f.check(c, e);
                if !r.is_ok() {
                    return Err(Error::Invalid(format!("functor {i}: {r}")));
                }
                Ok(f)
            })
            .collect()
    };
    Ok(match shape {
        Shape::Biterminal => {
            want(0, 0, 0)?;
            let base = shape.base();
            let diagram = CatDiagram::from_fn(&base, vec![], |_, _, _| unreachable!(), |_, _, _| unreachable!());
            ShapeInstance { shape, weight: shape.weight(), diagram }
        }
        Shape::Biproduct => {
            want(2, 0, 0)?;
            biproduct(&cats[0], &cats[1])
        }
        Shape::Biinserter | Shape::Biequalizer | Shape::Biisoinserter => {
            want(2, 2, 0)?;
            let fs = funs(&cats[0], &cats[1])?;
            match shape {
                Shape::Biinserter => biinserter(&cats[0], &cats[1], &fs[0], &fs[1]),
                Shape::Biequalizer => biequalizer(&cats[0], &cats[1], &fs[0], &fs[1]),
                _ => biisoinserter(&cats[0], &cats[1], &fs[0], &fs[1]),
            }
        }
        Shape::Biequifier => {
            want(2, 2, 2)?;
            let fs = funs(&cats[0], &cats[1])?;
            let mut ts: Vec<NatTransf> = Vec::new();
            for (i, m) in d.cells.iter().enumerate() {
                let t = doc::nat_from_doc(m, &cats[0], &cats[1], &fs[0], &fs[1], &format!("cell {i}"))?;
                let r = t.check(&cats[0], &cats[1], &fs[0], &fs[1]);
                if !r.is_ok() {
                    return Err(Error::Invalid(format!("cell {i}: {r}")));
                }
                ts.push(t);
            }
            biequifier(&cats[0], &cats[1], &fs[0], &fs[1], &ts[0], &ts[1])
        }
    })
}

pub fn bilimit(ws: &Workspace, shape: &str, file: Option<&Path>) -> Result<Outcome> {
    let sh = Shape::parse(shape).ok_or_else(|| {
        let names: Vec<&str> = Shape::ALL.iter().map(|s| s.name()).collect();
        Error::Invalid(format!("unknown shape {shape:?}; expected one of {}", names.join(", ")))
    })?;
    let inst = shape_instance(ws, sh, file)?;
    let h = bilimit_cat(&inst.weight, &inst.diagram)?;
    let prose = format!("{} with {} objects and {} arrows (one choice up to equivalence)", sh.name(), h.cat.n_obj(), h.cat.n_arr());
    Ok(Outcome::ok(merge(json!({ "shape": sh.name(), "non_canonical": true }), hom_report(&h)), prose))
}

fn filteredness_json(r: &FilterednessReport, src: &Fin2Cat, tgt: &Fin2Cat, t: Option<&TwoFunctor>) -> (Value, Value) {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|(i, w)| {
            let (object, cells1, cell2) = describe_witness(i, w, src, tgt, t);
            json!({ "instance": describe_instance(i, src, tgt, t), "object": object, "cells1": cells1, "cell2": cell2 })
        })
        .collect();
    let counter = r.counterexample.as_ref().map(|i| describe_instance(i, src, tgt, t));
    (Value::Array(witnesses), json!(counter))
}

pub fn filtered(ws: &Workspace, file: &Path, sigma: Option<&str>, co: bool) -> Result<Outcome> {
    let (a, s) = ws.two_cat(file)?;
    let s = sigma_or(&a, sigma, s, "--sigma or a \"sigma\" field")?;
    let m = Marked2Cat::new(a, s)?;
    let (r, seen) = if co { (check_sigma_cofiltered(&m), m.op_dual()) } else { (check_sigma_filtered(&m), m.clone()) };
    let bad = revalidate_filtered(&seen, &r);
    if !bad.is_ok() {
        return Err(Error::Inconsistency(format!("a witness does not check: {bad}")));
    }
    let (witnesses, counterexample) = filteredness_json(&r, &seen.cat, &seen.cat, None);
    let property = if co { "σ-cofiltered" } else { "σ-filtered" };
    let report = json!({ "property": property, "verdict": r.verdict, "witnesses": witnesses, "counterexample": counterexample });
    let prose = match &r.counterexample {
        None => format!("{property}: yes, {} axiom instances witnessed", r.witnesses.len()),
        Some(i) => format!("{property}: no, {}", describe_instance(i, &seen.cat, &seen.cat, None)),
    };
    Ok(Outcome::ok(report, prose))
}

pub fn cofinal(ws: &Workspace, file: &Path, sigma: Option<&str>, sigma_prime: Option<&str>) -> Result<Outcome> {
    let (c, e, t) = ws.two_functor(file)?;
    let s = sigma_or(&c, sigma, None, "--sigma")?;
    let sp = sigma_or(&e, sigma_prime, None, "--sigma-prime")?;
    let (mc, me) = (Marked2Cat::new(c, s)?, Marked2Cat::new(e, sp)?);
    let r = check_sigma_cofinal(&t, &mc, &me)?;
    let bad = revalidate_cofinal(&t, &mc, &me, &r);
    if !bad.is_ok() {
        return Err(Error::Inconsistency(format!("a witness does not check: {bad}")));
    }
    let (witnesses, counterexample) = filteredness_json(&r, &mc.cat, &me.cat, Some(&t));
    let report = json!({ "property": "σ-cofinal", "verdict": r.verdict, "witnesses": witnesses, "counterexample": counterexample });
    let prose = match &r.counterexample {
        None => "σ-cofinal: yes".to_string(),
        Some(i) => format!("σ-cofinal: no, {}", describe_instance(i, &mc.cat, &me.cat, Some(&t))),
    };
    Ok(Outcome::ok(report, prose))
}

pub fn flat(ws: &Workspace, file: &Path, pseudo: bool, canonical: bool) -> Result<Outcome> {
    let p = ws.diagram(file)?;
    let v = if p.is_pseudo() || pseudo { check_flat_pseudo(&as_pseudo(&p))? } else { check_flat(&p)? };
    let op = v.elements.cat.op_dual();
    let counter = v.evidence.counterexample.as_ref().map(|i| describe_instance(i, &op, &op, None));
    let mut report = json!({
        "verdict": v.verdict.label(),
        "route": v.route,
        "elements": { "objects": v.elements.cat.n_obj(), "cells1": v.elements.cat.cells1().len(), "cart": v.elements.cart.count() },
        "witness_count": v.evidence.witnesses.len(),
        "counterexample": counter,
    });
    let mut code = if v.verdict == Verdict::Undecided { EXIT_UNDECIDED } else { EXIT_OK };
    let mut prose = format!("{}", v.verdict.label());
    if let Some(c) = &counter {
        prose += &format!(": El_P^op fails {c}");
    }
    if canonical && v.verdict == Verdict::Flat {
        if p.is_pseudo() {
            return Err(Error::PreconditionFailed("the canonical expression is computed for strict diagrams".into()));
        }
        let ce = canonical_expression(&p, ws.cap)?;
        let entries: Vec<Value> = ce
            .entries
            .iter()
            .map(|e| json!({ "object": e.object, "status": status_label(e.status), "equivalence": e.equivalence, "detail": e.detail }))
            .collect();
        report["canonical"] = Value::Array(entries);
        if ce.entries.iter().any(|e| e.equivalence == Some(false)) {
            return Err(Error::Inconsistency("flat, but the canonical comparison is not an equivalence".into()));
        }
        if ce.undecided() {
            code = EXIT_UNDECIDED;
            prose += "; canonical expression undecided at cap";
        } else {
            prose += "; canonical comparison is a pointwise equivalence";
        }
    }
    Ok(Outcome { report, code, prose })
}

pub fn exact(ws: &Workspace, file: &Path, cones: Option<&Path>) -> Result<Outcome> {
    let p = ws.diagram(file)?;
    let wanted: Option<Vec<Shape>> = match cones {
        None => None,
        Some(f) => {
            let d = doc::parse_cones(&ws.read(f)?).map_err(|e| Error::Invalid(format!("{}: {}", f.display(), strip(&e))))?;
            match d.shapes {
                None => None,
                Some(names) => Some(
                    names
                        .iter()
                        .map(|n| Shape::parse(n).ok_or_else(|| Error::Invalid(format!("unknown shape {n:?}"))))
                        .collect::<Result<_>>()?,
                ),
            }
        }
    };
    let keep = |s: Shape| wanted.as_ref().map_or(true, |w| w.contains(&s));
    let (found, missing) = generate_bilimit_cones(&p.base)?;
    let found: Vec<_> = found.into_iter().filter(|c| keep(c.shape)).collect();
    let missing: Vec<_> = missing.into_iter().filter(|(s, _)| keep(*s)).collect();
    let le = check_left_exact(&p, &found)?;
    let fl = if p.is_pseudo() { check_flat_pseudo(&p)? } else { check_flat(&p)? };
    let flat = fl.verdict == Verdict::Flat;
    let comparable = missing.is_empty() && !le.no_evidence;
    let agreement = comparable.then_some(le.exact == flat);
    if agreement == Some(false) {
        return Err(Error::Inconsistency(format!(
            "left exactness ({}) disagrees with flatness ({})",
            le.exact,
            fl.verdict.label()
        )));
    }
    let a = &p.base;
    let cones_json: Vec<Value> = le
        .cones
        .iter()
        .map(|c| json!({ "shape": c.shape.name(), "apex": a.objects[c.apex], "preserved": c.preserved, "detail": c.detail }))
        .collect();
    let missing_json: Vec<Value> = missing.iter().map(|(s, _)| json!(s.name())).collect();
    let report = json!({
        "exact": le.exact,
        "no_evidence": le.no_evidence,
        "cones": cones_json,
        "missing": missing_json,
        "flat": fl.verdict.label(),
        "agreement": agreement,
    });
    let prose = format!(
        "{} on {} cones ({} shape instances without a bilimit); flatness: {}",
        if le.exact { "left exact" } else { "not left exact" },
        le.cones.len(),
        missing.len(),
        fl.verdict.label()
    );
    Ok(Outcome::ok(report, prose))
}

pub fn strictify_cmd(ws: &Workspace, file: &Path, out: Option<&Path>) -> Result<Outcome> {
    let p = ws.diagram(file)?;
    let (pt, eta, eps) = strictify(&p)?;
    let strict_ok = !pt.is_pseudo() && pt.validate().is_ok();
    let problems = check_strictification(&p, &pt, &eta, &eps)?;
    if !strict_ok || !problems.is_empty() {
        let mut all = problems;
        if !strict_ok {
            all.insert(0, "the strictification is not a strict 2-functor".into());
        }
        return Err(Error::Inconsistency(all.join("; ")));
    }
    let doc = to_value(&diagram_to_doc(&pt));
    let sizes: Vec<Value> =
        (0..pt.n()).map(|b| json!({ "object": pt.base.objects[b], "objects": pt.cats[b].n_obj(), "arrows": pt.cats[b].n_arr() })).collect();
    let mut report = json!({ "strict": true, "eta_equivalences": true, "checks": [], "sizes": sizes });
    match out {
        Some(path) => {
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            std::fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
            report["output"] = json!(path.display().to_string());
        }
        None => report["diagram"] = doc,
    }
    Ok(Outcome::ok(report, "strictified; η is a pointwise equivalence"))
}

pub fn yoneda(ws: &Workspace, file: &Path, object: &str, against: &[PathBuf]) -> Result<Outcome> {
    let (a, _) = ws.two_cat(file)?;
    let obj = a.obj_index(object).ok_or_else(|| Error::Invalid(format!("no object {object}")))?;
    if against.is_empty() {
        return Err(Error::Invalid("pass at least one --against diagram".into()));
    }
    let mut results = Vec::new();
    for path in against {
        let q = ws.diagram(path)?;
        if q.base != a {
            return Err(Error::Invalid(format!("{}: the diagram does not live on the given 2-category", path.display())));
        }
        let (ev, rep) = yoneda_check(&q, obj)?;
        if !rep.verdict {
            return Err(Error::Inconsistency(format!(
                "evaluation at the identity is not an equivalence for {}: {}",
                path.display(),
                rep.witness.unwrap_or_default()
            )));
        }
        results.push(json!({ "transformations": ev.obj.len(), "target_objects": q.cats[obj].n_obj(), "equivalence": true }));
    }
    let report = json!({ "object": object, "results": results });
    Ok(Outcome::ok(report, format!("Hom_p(A({object}, −), Q) ≃ Q({object}) for every target")))
}
