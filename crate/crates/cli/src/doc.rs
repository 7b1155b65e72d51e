//! JSON documents for categories, 2-categories, diagrams and 2-functors,
//! with conversion to and from the core types.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sigmacat::fincat::{Arrow, FinCat, Functor, NatTransf};
use sigmacat::report::Report;
use sigmacat::transforms::{CatDiagram, PseudoData};
use sigmacat::two_cat::{Builder, Fin2Cat, TwoFunctor, WideSub};
use sigmacat::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeDoc {
    pub g: String,
    pub f: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<ComposeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell2Doc {
    pub name: String,
    pub src1: String,
    pub tgt1: String,
}

/// A finite 2-category. `identities2`, `vcompose` and `hcompose` may leave
/// out every entry that is forced by the unit laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCatDoc {
    pub objects: Vec<String>,
    pub cells1: Vec<ArrowDoc>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<ComposeDoc>,
    #[serde(default)]
    pub cells2: Vec<Cell2Doc>,
    #[serde(default)]
    pub identities2: BTreeMap<String, String>,
    #[serde(default)]
    pub vcompose: Vec<ComposeDoc>,
    #[serde(default)]
    pub hcompose: Vec<ComposeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<String>>,
}

/// A functor between finite categories. Identity arrows may be left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub obj: BTreeMap<String, String>,
    #[serde(default)]
    pub arr: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaCompDoc {
    pub f: String,
    pub g: String,
    pub components: BTreeMap<String, String>,
}

/// A 2-functor or pseudofunctor into Cat. Identity 1-cells and 2-cells,
/// and components that are identities, may be left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDoc {
    pub base: TwoCatDoc,
    pub on_obj: BTreeMap<String, CatDoc>,
    #[serde(default)]
    pub on_1cell: BTreeMap<String, FunctorDoc>,
    #[serde(default)]
    pub on_2cell: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_obj: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_comp: Option<Vec<AlphaCompDoc>>,
}

/// A strict 2-functor between finite 2-categories.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoFunctorDoc {
    pub source: TwoCatDoc,
    pub target: TwoCatDoc,
    pub on_obj: BTreeMap<String, String>,
    #[serde(default)]
    pub on_1cell: BTreeMap<String, String>,
    #[serde(default)]
    pub on_2cell: BTreeMap<String, String>,
}

/// The data of a bilimit shape: categories, then functors between them,
/// then natural transformations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeDoc {
    #[serde(default)]
    pub categories: Vec<CatDoc>,
    #[serde(default)]
    pub functors: Vec<FunctorDoc>,
    #[serde(default)]
    pub cells: Vec<BTreeMap<String, String>>,
}

/// Which bilimit cones `exact` tests against.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConesDoc {
    #[serde(default)]
    pub shapes: Option<Vec<String>>,
}

/// Any parsed document.
#[derive(Clone, Debug)]
pub enum Document {
    Cat(FinCat),
    TwoCat(Fin2Cat, Option<WideSub>),
    Diagram(CatDiagram),
    TwoFunctor(Fin2Cat, Fin2Cat, TwoFunctor),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Cat(_) => "category",
            Document::TwoCat(..) => "2-category",
            Document::Diagram(_) => "diagram",
            Document::TwoFunctor(..) => "2-functor",
        }
    }

    pub fn validate(&self) -> Report {
        match self {
            Document::Cat(c) => c.validate(),
            Document::TwoCat(a, s) => {
                let mut r = a.validate();
                if let (true, Some(s)) = (r.is_ok(), s) {
                    r.extend("sigma", s.validate(a));
                }
                r
            }
            Document::Diagram(p) => p.validate(),
            Document::TwoFunctor(c, d, t) => {
                let mut r = Report::new();
                r.extend("source", c.validate());
                r.extend("target", d.validate());
                if r.is_ok() {
                    r = t.check(c, d);
                }
                r
            }
        }
    }
}

fn bad(m: impl Into<String>) -> Error {
    Error::Invalid(m.into())
}

fn check_ident(s: &str) -> Result<()> {
    if s.is_empty() || !s.is_ascii() || s.chars().any(|c| c.is_ascii_whitespace() || c.is_ascii_control()) {
        return Err(bad(format!("bad identifier {s:?}: identifiers are nonempty ASCII without whitespace")));
    }
    Ok(())
}

fn unique<'a>(what: &str, names: impl IntoIterator<Item = &'a String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        check_ident(n)?;
        if !seen.insert(n.as_str()) {
            return Err(bad(format!("duplicate {what} {n}")));
        }
    }
    Ok(())
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| bad(format!("parse error: {e}")))
}

/// Parses any document, deciding its kind from its keys.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = parse_json(text)?;
    let obj = v.as_object().ok_or_else(|| bad("parse error: the document is not a JSON object"))?;
    if obj.contains_key("base") {
        Ok(Document::Diagram(diagram_from_doc(&parse_json(text)?)?))
    } else if obj.contains_key("source") {
        let (c, d, t) = two_functor_from_doc(&parse_json(text)?)?;
        Ok(Document::TwoFunctor(c, d, t))
    } else if obj.contains_key("cells1") {
        let (a, s) = two_cat_from_doc(&parse_json(text)?)?;
        Ok(Document::TwoCat(a, s))
    } else {
        Ok(Document::Cat(cat_from_doc(&parse_json(text)?)?))
    }
}

pub fn parse_cat(text: &str) -> Result<FinCat> {
    cat_from_doc(&parse_json(text)?)
}

pub fn parse_two_cat(text: &str) -> Result<(Fin2Cat, Option<WideSub>)> {
    two_cat_from_doc(&parse_json(text)?)
}

pub fn parse_diagram(text: &str) -> Result<CatDiagram> {
    diagram_from_doc(&parse_json(text)?)
}

pub fn parse_two_functor(text: &str) -> Result<(Fin2Cat, Fin2Cat, TwoFunctor)> {
    two_functor_from_doc(&parse_json(text)?)
}

pub fn parse_shape(text: &str) -> Result<ShapeDoc> {
    parse_json(text)
}

pub fn parse_cones(text: &str) -> Result<ConesDoc> {
    parse_json(text)
}

// ---------- categories

pub fn cat_from_doc(d: &CatDoc) -> Result<FinCat> {
    unique("object", &d.objects)?;
    unique("arrow", d.arrows.iter().map(|a| &a.name))?;
    let obj: HashMap<&str, usize> = d.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let arr: HashMap<&str, usize> = d.arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
    let o = |s: &str| obj.get(s).copied().ok_or_else(|| bad(format!("unknown object {s}")));
    let a = |s: &str| arr.get(s).copied().ok_or_else(|| bad(format!("unknown arrow {s}")));
    let arrows = d
        .arrows
        .iter()
        .map(|x| Ok(Arrow { name: x.name.clone(), src: o(&x.src)?, tgt: o(&x.tgt)? }))
        .collect::<Result<Vec<_>>>()?;
    let mut ids = vec![usize::MAX; d.objects.len()];
    for (ob, f) in &d.identities {
        ids[o(ob)?] = a(f)?;
    }
    if let Some(i) = ids.iter().position(|&i| i == usize::MAX) {
        return Err(bad(format!("object {} has no identity", d.objects[i])));
    }
    for (i, &f) in ids.iter().enumerate() {
        if arrows[f].src != i || arrows[f].tgt != i {
            return Err(bad(format!("identity {} of {} is not an endomorphism", arrows[f].name, d.objects[i])));
        }
    }
    let mut entries = Vec::with_capacity(d.compose.len());
    for c in &d.compose {
        let (g, f, h) = (a(&c.g)?, a(&c.f)?, a(&c.result)?);
        if arrows[f].tgt != arrows[g].src || arrows[h].src != arrows[f].src || arrows[h].tgt != arrows[g].tgt {
            return Err(bad(format!("composite {}∘{} = {} is mistyped", c.g, c.f, c.result)));
        }
        entries.push((g, f, h));
    }
    Ok(FinCat::from_entries(d.objects.clone(), arrows, ids, &entries))
}

pub fn cat_to_doc(c: &FinCat) -> CatDoc {
    let name = |f: usize| c.arrows[f].name.clone();
    let mut compose = Vec::new();
    for f in 0..c.n_arr() {
        if c.is_identity(f) {
            continue;
        }
        for &g in c.hom_from(c.tgt(f)) {
            if !c.is_identity(g) {
                compose.push(ComposeDoc { g: name(g), f: name(f), result: name(c.compose(g, f)) });
            }
        }
    }
    CatDoc {
        objects: c.objects.clone(),
        arrows: c
            .arrows
            .iter()
            .map(|a| ArrowDoc { name: a.name.clone(), src: c.objects[a.src].clone(), tgt: c.objects[a.tgt].clone() })
            .collect(),
        identities: (0..c.n_obj()).map(|o| (c.objects[o].clone(), name(c.id(o)))).collect(),
        compose,
    }
}

// ---------- 2-categories

pub fn two_cat_from_doc(d: &TwoCatDoc) -> Result<(Fin2Cat, Option<WideSub>)> {
    unique("object", &d.objects)?;
    unique("1-cell", d.cells1.iter().map(|a| &a.name))?;
    unique("2-cell", d.cells2.iter().map(|a| &a.name))?;
    let triple = |c: &ComposeDoc| (c.g.clone(), c.f.clone(), c.result.clone());
    let b = Builder {
        objects: d.objects.clone(),
        cells1: d.cells1.iter().map(|a| (a.name.clone(), a.src.clone(), a.tgt.clone())).collect(),
        identities1: d.identities.iter().map(|(o, f)| (o.clone(), f.clone())).collect(),
        compose1: d.compose.iter().map(triple).collect(),
        cells2: d.cells2.iter().map(|a| (a.name.clone(), a.src1.clone(), a.tgt1.clone())).collect(),
        identities2: d.identities2.iter().map(|(o, f)| (o.clone(), f.clone())).collect(),
        vcompose: d.vcompose.iter().map(triple).collect(),
        hcompose: d.hcompose.iter().map(triple).collect(),
    };
    let a = b.build()?;
    let sigma = match &d.sigma {
        Some(names) => Some(WideSub::generated_by(&a, names)?),
        None => None,
    };
    Ok((a, sigma))
}

pub fn two_cat_to_doc(a: &Fin2Cat, sigma: Option<&WideSub>) -> TwoCatDoc {
    let n = a.n_obj();
    let mut cells1 = Vec::new();
    let mut cells2 = Vec::new();
    let mut identities2 = BTreeMap::new();
    let mut vcompose = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let h = a.hom(x, y);
            for f in 0..h.n_obj() {
                cells1.push(ArrowDoc { name: h.objects[f].clone(), src: a.objects[x].clone(), tgt: a.objects[y].clone() });
                identities2.insert(h.objects[f].clone(), h.arrows[h.id(f)].name.clone());
            }
            for t in 0..h.n_arr() {
                cells2.push(Cell2Doc {
                    name: h.arrows[t].name.clone(),
                    src1: h.objects[h.src(t)].clone(),
                    tgt1: h.objects[h.tgt(t)].clone(),
                });
            }
            let hd = cat_to_doc(h);
            vcompose.extend(hd.compose);
        }
    }
    let mut compose = Vec::new();
    let mut hcompose = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (hxy, hyz, hxz) = (a.hom(x, y), a.hom(y, z), a.hom(x, z));
                for g in 0..hyz.n_obj() {
                    for f in 0..hxy.n_obj() {
                        if (y == z && g == a.id1(y)) || (x == y && f == a.id1(x)) {
                            continue;
                        }
                        compose.push(ComposeDoc {
                            g: hyz.objects[g].clone(),
                            f: hxy.objects[f].clone(),
                            result: hxz.objects[a.comp1(x, y, z, g, f)].clone(),
                        });
                    }
                }
                for beta in 0..hyz.n_arr() {
                    for alpha in 0..hxy.n_arr() {
                        let unit_c = y == z && beta == hyz.id(a.id1(y));
                        let unit_a = x == y && alpha == hxy.id(a.id1(x));
                        if unit_c || unit_a || (hyz.is_identity(beta) && hxy.is_identity(alpha)) {
                            continue;
                        }
                        hcompose.push(ComposeDoc {
                            g: hyz.arrows[beta].name.clone(),
                            f: hxy.arrows[alpha].name.clone(),
                            result: hxz.arrows[a.comp2(x, y, z, beta, alpha)].name.clone(),
                        });
                    }
                }
            }
        }
    }
    TwoCatDoc {
        objects: a.objects.clone(),
        cells1,
        identities: (0..n).map(|x| (a.objects[x].clone(), a.cell1_name(x, x, a.id1(x)).to_string())).collect(),
        compose,
        cells2,
        identities2,
        vcompose,
        hcompose,
        sigma: sigma.map(|s| s.names(a)),
    }
}

// ---------- functors and natural transformations

pub fn functor_from_doc(d: &FunctorDoc, c: &FinCat, e: &FinCat, what: &str) -> Result<Functor> {
    let mut obj = Vec::with_capacity(c.n_obj());
    for o in &c.objects {
        let img = d.obj.get(o).ok_or_else(|| bad(format!("{what}: no image for object {o}")))?;
        obj.push(e.obj_index(img).ok_or_else(|| bad(format!("{what}: unknown object {img}")))?);
    }
    let mut arr = Vec::with_capacity(c.n_arr());
    for (f, a) in c.arrows.iter().enumerate() {
        match d.arr.get(&a.name) {
            Some(img) => arr.push(e.arrow_index(img).ok_or_else(|| bad(format!("{what}: unknown arrow {img}")))?),
            None if c.is_identity(f) => arr.push(e.id(obj[a.src])),
            None => return Err(bad(format!("{what}: no image for arrow {}", a.name))),
        }
    }
    for k in d.obj.keys() {
        c.obj_index(k).ok_or_else(|| bad(format!("{what}: unknown object {k}")))?;
    }
    for k in d.arr.keys() {
        c.arrow_index(k).ok_or_else(|| bad(format!("{what}: unknown arrow {k}")))?;
    }
    Ok(Functor { obj, arr })
}

fn functor_to_doc(f: &Functor, c: &FinCat, e: &FinCat) -> FunctorDoc {
    FunctorDoc {
        obj: (0..c.n_obj()).map(|o| (c.objects[o].clone(), e.objects[f.obj[o]].clone())).collect(),
        arr: (0..c.n_arr()).map(|a| (c.arrows[a].name.clone(), e.arrows[f.arr[a]].name.clone())).collect(),
    }
}

/// Components keyed by object name; missing ones are identities where the
/// two functors agree.
pub fn nat_from_doc(d: &BTreeMap<String, String>, c: &FinCat, e: &FinCat, f: &Functor, g: &Functor, what: &str) -> Result<NatTransf> {
    let mut comp = Vec::with_capacity(c.n_obj());
    for (o, name) in c.objects.iter().enumerate() {
        match d.get(name) {
            Some(img) => comp.push(e.arrow_index(img).ok_or_else(|| bad(format!("{what}: unknown arrow {img}")))?),
            None if f.obj[o] == g.obj[o] => comp.push(e.id(f.obj[o])),
            None => return Err(bad(format!("{what}: no component at {name}"))),
        }
    }
    for k in d.keys() {
        c.obj_index(k).ok_or_else(|| bad(format!("{what}: unknown object {k}")))?;
    }
    Ok(NatTransf { comp })
}

fn nat_to_doc(t: &NatTransf, c: &FinCat, e: &FinCat) -> BTreeMap<String, String> {
    (0..c.n_obj()).map(|o| (c.objects[o].clone(), e.arrows[t.comp[o]].name.clone())).collect()
}

// ---------- diagrams

pub fn diagram_from_doc(d: &DiagramDoc) -> Result<CatDiagram> {
    let (base, _) = two_cat_from_doc(&d.base)?;
    let r = base.validate();
    if !r.is_ok() {
        return Err(bad(format!("base: {}", r.violations.join("; "))));
    }
    let n = base.n_obj();
    let mut cats = Vec::with_capacity(n);
    for o in &base.objects {
        let c = d.on_obj.get(o).ok_or_else(|| bad(format!("on_obj: no category for {o}")))?;
        let c = cat_from_doc(c)?;
        let r = c.validate();
        if !r.is_ok() {
            return Err(bad(format!("P({o}): {}", r.violations.join("; "))));
        }
        cats.push(c);
    }
    for k in d.on_obj.keys() {
        base.obj_index(k).ok_or_else(|| bad(format!("on_obj: unknown object {k}")))?;
    }
    for k in d.on_1cell.keys() {
        base.find_cell1(k).ok_or_else(|| bad(format!("on_1cell: unknown 1-cell {k}")))?;
    }
    for k in d.on_2cell.keys() {
        base.find_cell2(k).ok_or_else(|| bad(format!("on_2cell: unknown 2-cell {k}")))?;
    }
    let mut on1 = Vec::with_capacity(n * n);
    let mut on2 = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let h = base.hom(a, b);
            let mut fs = Vec::with_capacity(h.n_obj());
            for f in 0..h.n_obj() {
                let name = &h.objects[f];
                fs.push(match d.on_1cell.get(name) {
                    Some(t) => functor_from_doc(t, &cats[a], &cats[b], &format!("on_1cell {name}"))?,
                    None if a == b && f == base.id1(a) => Functor::identity(&cats[a]),
                    None => return Err(bad(format!("on_1cell: no functor for {name}"))),
                });
            }
            let mut ts = Vec::with_capacity(h.n_arr());
            for t in 0..h.n_arr() {
                let name = &h.arrows[t].name;
                let (s, u) = (&fs[h.src(t)], &fs[h.tgt(t)]);
                ts.push(match d.on_2cell.get(name) {
                    Some(m) => nat_from_doc(m, &cats[a], &cats[b], s, u, &format!("on_2cell {name}"))?,
                    None if h.is_identity(t) => NatTransf::identity(s, &cats[b]),
                    None => return Err(bad(format!("on_2cell: no components for {name}"))),
                });
            }
            on1.push(fs);
            on2.push(ts);
        }
    }
    let mut p = CatDiagram { base: base.clone(), cats, on1, on2, pseudo: None };
    if d.alpha_obj.is_none() && d.alpha_comp.is_none() {
        return Ok(p);
    }
    let empty = BTreeMap::new();
    let mut alpha_obj = Vec::with_capacity(n);
    for a in 0..n {
        let o = &base.objects[a];
        let m = d.alpha_obj.as_ref().and_then(|m| m.get(o)).unwrap_or(&empty);
        let id = Functor::identity(&p.cats[a]);
        let pid = p.f1(a, a, base.id1(a)).clone();
        alpha_obj.push(nat_from_doc(m, &p.cats[a], &p.cats[a], &id, &pid, &format!("alpha_obj {o}"))?);
    }
    if let Some(m) = &d.alpha_obj {
        for k in m.keys() {
            base.obj_index(k).ok_or_else(|| bad(format!("alpha_obj: unknown object {k}")))?;
        }
    }
    let mut given: HashMap<(&str, &str), &BTreeMap<String, String>> = HashMap::new();
    for c in d.alpha_comp.iter().flatten() {
        if given.insert((c.f.as_str(), c.g.as_str()), &c.components).is_some() {
            return Err(bad(format!("alpha_comp: duplicate entry for ({}, {})", c.f, c.g)));
        }
    }
    let mut used = 0;
    let mut alpha_comp = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (hab, hbc) = (base.hom(a, b), base.hom(b, c));
                for f in 0..hab.n_obj() {
                    for g in 0..hbc.n_obj() {
                        let key = (hab.objects[f].as_str(), hbc.objects[g].as_str());
                        let m = given.get(&key).copied();
                        used += usize::from(m.is_some());
                        let pgpf = p.f1(b, c, g).after(p.f1(a, b, f));
                        let pgf = p.f1(a, c, base.comp1(a, b, c, g, f)).clone();
                        let what = format!("alpha_comp ({}, {})", key.0, key.1);
                        let t = nat_from_doc(m.unwrap_or(&empty), &p.cats[a], &p.cats[c], &pgpf, &pgf, &what)?;
                        alpha_comp.insert((a, b, c, f, g), t);
                    }
                }
            }
        }
    }
    if used != given.len() {
        return Err(bad("alpha_comp: an entry names a non-composable pair"));
    }
    p.pseudo = Some(PseudoData { alpha_obj, alpha_comp });
    Ok(p)
}

pub fn diagram_to_doc(p: &CatDiagram) -> DiagramDoc {
    let base = &p.base;
    let n = base.n_obj();
    let mut on_1cell = BTreeMap::new();
    let mut on_2cell = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let h = base.hom(a, b);
            for f in 0..h.n_obj() {
                on_1cell.insert(h.objects[f].clone(), functor_to_doc(p.f1(a, b, f), &p.cats[a], &p.cats[b]));
            }
            for t in 0..h.n_arr() {
                on_2cell.insert(h.arrows[t].name.clone(), nat_to_doc(p.f2(a, b, t), &p.cats[a], &p.cats[b]));
            }
        }
    }
    let (alpha_obj, alpha_comp) = match &p.pseudo {
        None => (None, None),
        Some(_) => {
            let ao = (0..n).map(|a| (base.objects[a].clone(), nat_to_doc(&p.unit(a), &p.cats[a], &p.cats[a]))).collect();
            let mut ac = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let (hab, hbc) = (base.hom(a, b), base.hom(b, c));
                        for f in 0..hab.n_obj() {
                            for g in 0..hbc.n_obj() {
                                ac.push(AlphaCompDoc {
                                    f: hab.objects[f].clone(),
                                    g: hbc.objects[g].clone(),
                                    components: nat_to_doc(&p.mult(a, b, c, f, g), &p.cats[a], &p.cats[c]),
                                });
                            }
                        }
                    }
                }
            }
            (Some(ao), Some(ac))
        }
    };
    DiagramDoc {
        base: two_cat_to_doc(base, None),
        on_obj: (0..n).map(|a| (base.objects[a].clone(), cat_to_doc(&p.cats[a]))).collect(),
        on_1cell,
        on_2cell,
        alpha_obj,
        alpha_comp,
    }
}

// ---------- 2-functors

pub fn two_functor_from_doc(d: &TwoFunctorDoc) -> Result<(Fin2Cat, Fin2Cat, TwoFunctor)> {
    let (c, _) = two_cat_from_doc(&d.source)?;
    let (e, _) = two_cat_from_doc(&d.target)?;
    let n = c.n_obj();
    let mut obj = Vec::with_capacity(n);
    for o in &c.objects {
        let img = d.on_obj.get(o).ok_or_else(|| bad(format!("on_obj: no image for {o}")))?;
        obj.push(e.obj_index(img).ok_or_else(|| bad(format!("on_obj: unknown object {img}")))?);
    }
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let (h, k) = (c.hom(a, b), e.hom(obj[a], obj[b]));
            let mut fo = Vec::with_capacity(h.n_obj());
            for f in 0..h.n_obj() {
                let name = &h.objects[f];
                fo.push(match d.on_1cell.get(name) {
                    Some(img) => k.obj_index(img).ok_or_else(|| bad(format!("on_1cell: {img} is not a 1-cell of the right hom")))?,
                    None if a == b && f == c.id1(a) => e.id1(obj[a]),
                    None => return Err(bad(format!("on_1cell: no image for {name}"))),
                });
            }
            let mut fa = Vec::with_capacity(h.n_arr());
            for t in 0..h.n_arr() {
                let name = &h.arrows[t].name;
                fa.push(match d.on_2cell.get(name) {
                    Some(img) => k.arrow_index(img).ok_or_else(|| bad(format!("on_2cell: {img} is not a 2-cell of the right hom")))?,
                    None if h.is_identity(t) => k.id(fo[h.src(t)]),
                    None => return Err(bad(format!("on_2cell: no image for {name}"))),
                });
            }
            homs.push(Functor { obj: fo, arr: fa });
        }
    }
    for k in d.on_1cell.keys() {
        c.find_cell1(k).ok_or_else(|| bad(format!("on_1cell: unknown 1-cell {k}")))?;
    }
    for k in d.on_2cell.keys() {
        c.find_cell2(k).ok_or_else(|| bad(format!("on_2cell: unknown 2-cell {k}")))?;
    }
    Ok((c, e, TwoFunctor { obj, homs }))
}

pub fn two_functor_to_doc(c: &Fin2Cat, e: &Fin2Cat, t: &TwoFunctor) -> TwoFunctorDoc {
    let n = c.n_obj();
    let mut on_1cell = BTreeMap::new();
    let mut on_2cell = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let (h, k) = (c.hom(a, b), e.hom(t.obj[a], t.obj[b]));
            let f = t.hom(c, a, b);
            for x in 0..h.n_obj() {
                on_1cell.insert(h.objects[x].clone(), k.objects[f.obj[x]].clone());
            }
            for x in 0..h.n_arr() {
                on_2cell.insert(h.arrows[x].name.clone(), k.arrows[f.arr[x]].name.clone());
            }
        }
    }
    TwoFunctorDoc {
        source: two_cat_to_doc(c, None),
        target: two_cat_to_doc(e, None),
        on_obj: (0..n).map(|a| (c.objects[a].clone(), e.objects[t.obj[a]].clone())).collect(),
        on_1cell,
        on_2cell,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sigmacat::fixtures;

    fn text<T: Serialize>(d: &T) -> String {
        serde_json::to_string(d).unwrap()
    }

    #[test]
    fn categories_round_trip() {
        for c in [FinCat::terminal(), FinCat::two(), FinCat::iso(), FinCat::parallel_pair(), FinCat::empty()] {
            let back = parse_cat(&text(&cat_to_doc(&c))).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn two_categories_round_trip() {
        for (name, a) in fixtures::bases() {
            let (back, s) = parse_two_cat(&text(&two_cat_to_doc(&a, None))).unwrap();
            assert!(s.is_none());
            assert_eq!(back, a, "{name}");
        }
    }

    #[test]
    fn diagrams_round_trip() {
        for (name, p) in fixtures::strict_diagrams().into_iter().chain(fixtures::pseudo_diagrams()) {
            let back = parse_diagram(&text(&diagram_to_doc(&p))).unwrap();
            assert_eq!(back, p, "{name}");
        }
    }

    #[test]
    fn two_functors_round_trip() {
        let a = fixtures::diamond();
        let t = TwoFunctor::identity(&a);
        let (c, e, back) = parse_two_functor(&text(&two_functor_to_doc(&a, &a, &t))).unwrap();
        assert_eq!((c, e, back), (a.clone(), a, t));
    }

    #[test]
    fn the_two_document() {
        let d = r#"{"objects":["0","1"],"arrows":[{"name":"id0","src":"0","tgt":"0"},{"name":"id1","src":"1","tgt":"1"},{"name":"u","src":"0","tgt":"1"}],"identities":{"0":"id0","1":"id1"}}"#;
        let c = parse_cat(d).unwrap();
        assert!(c.validate().is_ok());
        assert!(sigmacat::fincat::find_isomorphism(&c, &FinCat::two()).unwrap().is_some());
    }

    #[test]
    fn marked_document() {
        let mut d = two_cat_to_doc(&fixtures::two(), None);
        d.sigma = Some(vec![d.cells1[1].name.clone()]);
        let (a, s) = parse_two_cat(&text(&d)).unwrap();
        assert!(s.unwrap().validate(&a).is_ok());
    }

    #[test]
    fn rejections() {
        let good = text(&cat_to_doc(&FinCat::two()));
        assert!(parse_cat(&good[..good.len() - 5]).is_err());
        let extra = good.replacen('{', r#"{"colour":"red","#, 1);
        assert!(matches!(parse_cat(&extra), Err(Error::Invalid(m)) if m.contains("colour")));
        let spaced = good.replace("\"0\"", "\"zero one\"");
        assert!(parse_cat(&spaced).is_err());
        assert!(parse_document("[1, 2]").is_err());
    }
}
