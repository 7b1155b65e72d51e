//! The acceptance suite: eleven property checks over the fixture corpus,
//! one pass/fail line each. Runs without the libtest harness so the lines
//! are always printed.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use sigmacat::colimits::{
    conical_sigma_colimit, interchange_check, pointwise_limit_check, weighted_sigma_colimit, Shape, DEFAULT_CAP,
};
use sigmacat::filteredness::{check_sigma_filtered, filtered_via_cones, revalidate_filtered, Axiom};
use sigmacat::fincat::{find_equivalence, find_isomorphism, is_equivalence, localize, FinCat, NatTransf, Status};
use sigmacat::fixtures;
use sigmacat::flatness::{
    canonical_expression, check_flat, check_flat_pseudo, check_left_exact, check_strictification, generate_bilimit_cones,
    representable, strictify, yoneda_check, Verdict,
};
use sigmacat::transforms::{
    check_dicone, check_dicone_morphism, check_modification, check_transformation, end_eps, hom_diagram, hom_eps, CatDiagram,
    Direction, Flavor, PseudoData,
};
use sigmacat::two_cat::{Builder, Fin2Cat, Marked2Cat, WideSub};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn marked(c: Fin2Cat, names: &[&str]) -> Marked2Cat {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let s = WideSub::generated_by(&c, &names).unwrap();
    Marked2Cat::new(c, s).unwrap()
}

fn all(c: Fin2Cat) -> Marked2Cat {
    let s = WideSub::all(&c);
    Marked2Cat::new(c, s).unwrap()
}

/// The one-object category of the group of order two.
fn z2() -> FinCat {
    FinCat::monoid("*", &["1", "z"], &[vec![0, 1], vec![1, 0]])
}

fn idempotent_cell() -> Fin2Cat {
    Builder {
        objects: vec!["*".into()],
        cells1: vec![("id".into(), "*".into(), "*".into())],
        identities1: vec![("*".into(), "id".into())],
        cells2: vec![("e".into(), "id".into(), "id".into())],
        vcompose: vec![("e".into(), "e".into(), "e".into())],
        hcompose: vec![("e".into(), "e".into(), "e".into())],
        ..Builder::default()
    }
    .build()
    .unwrap()
}

// ---------------------------------------------------------------------------
// 1. axiom suites

/// The 2-category laws, straight from the definition, on the public
/// accessors. Hom-categories are assumed valid.
fn two_cat_oracle(c: &Fin2Cat) -> bool {
    let n = c.n_obj();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                let (hab, hbc, hac) = (c.hom(a, b), c.hom(b, cc), c.hom(a, cc));
                for g in 0..hbc.n_obj() {
                    for f in 0..hab.n_obj() {
                        if c.comp1(a, b, cc, g, f) >= hac.n_obj() {
                            return false;
                        }
                    }
                }
                for be in 0..hbc.n_arr() {
                    for al in 0..hab.n_arr() {
                        let h = c.comp2(a, b, cc, be, al);
                        if h >= hac.n_arr()
                            || hac.src(h) != c.comp1(a, b, cc, hbc.src(be), hab.src(al))
                            || hac.tgt(h) != c.comp1(a, b, cc, hbc.tgt(be), hab.tgt(al))
                        {
                            return false;
                        }
                    }
                }
                for g in 0..hbc.n_obj() {
                    for f in 0..hab.n_obj() {
                        if c.comp2(a, b, cc, c.id2(b, cc, g), c.id2(a, b, f)) != c.id2(a, cc, c.comp1(a, b, cc, g, f)) {
                            return false;
                        }
                    }
                }
                // interchange
                for (al2, al, _) in hab.composable_pairs() {
                    for (be2, be, _) in hbc.composable_pairs() {
                        let lhs = c.comp2(a, b, cc, hbc.compose(be2, be), hab.compose(al2, al));
                        let rhs = hac.compose(c.comp2(a, b, cc, be2, al2), c.comp2(a, b, cc, be, al));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let h = c.hom(a, b);
            for f in 0..h.n_obj() {
                if c.comp1(a, a, b, f, c.id1(a)) != f || c.comp1(a, b, b, c.id1(b), f) != f {
                    return false;
                }
            }
            let (ia, ib) = (c.id2(a, a, c.id1(a)), c.id2(b, b, c.id1(b)));
            for al in 0..h.n_arr() {
                if c.comp2(a, a, b, al, ia) != al || c.comp2(a, b, b, ib, al) != al {
                    return false;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let (h1, h2, h3) = (c.hom(a, b), c.hom(b, cc), c.hom(cc, d));
                    for f in 0..h1.n_obj() {
                        for g in 0..h2.n_obj() {
                            for k in 0..h3.n_obj() {
                                let l = c.comp1(a, cc, d, k, c.comp1(a, b, cc, g, f));
                                let r = c.comp1(a, b, d, c.comp1(b, cc, d, k, g), f);
                                if l != r {
                                    return false;
                                }
                            }
                        }
                    }
                    for x in 0..h1.n_arr() {
                        for y in 0..h2.n_arr() {
                            for z in 0..h3.n_arr() {
                                let l = c.comp2(a, cc, d, z, c.comp2(a, b, cc, y, x));
                                let r = c.comp2(a, b, d, c.comp2(b, cc, d, z, y), x);
                                if l != r {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

#[derive(Default)]
struct Tally {
    mutants: usize,
    invalid: usize,
    tags: Vec<(&'static str, usize)>,
}

impl Tally {
    fn tag(&mut self, t: &'static str) {
        match self.tags.iter_mut().find(|(n, _)| *n == t) {
            Some(e) => e.1 += 1,
            None => self.tags.push((t, 1)),
        }
    }

    fn count(&self, t: &str) -> usize {
        self.tags.iter().find(|(n, _)| *n == t).map_or(0, |e| e.1)
    }
}

fn two_cat_mutations(t: &mut Tally) -> Result<(), String> {
    let fixtures = [
        ("two", fixtures::two()),
        ("chain3", fixtures::chain3()),
        ("free_cell", fixtures::free_cell()),
        ("iso_cell", fixtures::iso_cell()),
        ("two_cells", Shape::Biequifier.base()),
        ("idempotent", idempotent_cell()),
    ];
    for (name, c) in fixtures {
        ensure(c.validate().is_ok() && two_cat_oracle(&c), || format!("{name} does not validate"))?;
        let n = c.n_obj();
        let mut mutants = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let (hab, hbc, hac) = (c.hom(a, b), c.hom(b, cc), c.hom(a, cc));
                    for g in 0..hbc.n_obj() {
                        for f in 0..hab.n_obj() {
                            for v in (0..hac.n_obj()).filter(|&v| v != c.comp1(a, b, cc, g, f)) {
                                mutants.push(c.clone().with_comp1_entry(a, b, cc, g, f, v));
                            }
                        }
                    }
                    for be in 0..hbc.n_arr() {
                        for al in 0..hab.n_arr() {
                            for v in (0..hac.n_arr()).filter(|&v| v != c.comp2(a, b, cc, be, al)) {
                                mutants.push(c.clone().with_comp2_entry(a, b, cc, be, al, v));
                            }
                        }
                    }
                }
            }
        }
        for m in mutants {
            t.mutants += 1;
            let valid = two_cat_oracle(&m);
            let r = m.validate();
            ensure(r.is_ok() == valid, || format!("{name}: validator says {} but the laws say {valid}", r.is_ok()))?;
            if !valid {
                t.invalid += 1;
                t.tag("2-category");
            }
        }
    }
    Ok(())
}

/// Pairs `(P, Q)` of strict diagrams on a common base.
fn transformation_pairs() -> Vec<(&'static str, CatDiagram, CatDiagram)> {
    let chain = fixtures::chain3();
    let fc = fixtures::free_cell();
    let two = fixtures::two();
    vec![
        ("chain3", CatDiagram::constant(&chain, &FinCat::terminal()), CatDiagram::constant(&chain, &FinCat::parallel_pair())),
        ("free_cell", CatDiagram::representable(&fc, 0), CatDiagram::constant(&fc, &FinCat::two())),
        ("two", fixtures::pick_zero(), CatDiagram::constant(&two, &FinCat::two())),
        ("two_rep", CatDiagram::representable(&two, 0), fixtures::pick_zero()),
        ("two_z2", CatDiagram::constant(&two, &FinCat::terminal()), CatDiagram::constant(&two, &z2())),
        ("free_cell_z2", CatDiagram::representable(&fc, 0), CatDiagram::constant(&fc, &z2())),
    ]
}

fn transformation_mutations(t: &mut Tally) -> Result<(), String> {
    for (name, p, q) in transformation_pairs() {
        let n = p.n();
        let hom = ok(hom_eps(&p, &q, &Flavor::Lax, Direction::Lax))?;
        let valid: HashSet<_> = hom.objects.iter().cloned().collect();
        for s in &hom.objects {
            let r = check_transformation(&p, &q, s, &Flavor::Lax, Direction::Lax);
            ensure(r.is_ok(), || format!("{name}: enumerated transformation rejected: {r}"))?;
            for (a, b, f) in p.base.cells1() {
                let qb = &q.cats[b];
                for x in 0..p.cats[a].n_obj() {
                    for v in (0..qb.n_arr()).filter(|&v| v != s.cells[a * n + b][f].comp[x]) {
                        let mut m = s.clone();
                        m.cells[a * n + b][f].comp[x] = v;
                        t.mutants += 1;
                        let r = check_transformation(&p, &q, &m, &Flavor::Lax, Direction::Lax);
                        ensure(r.is_ok() == valid.contains(&m), || format!("{name}: checker and enumeration disagree"))?;
                        if !r.is_ok() {
                            t.invalid += 1;
                            for tag in ["LN0", "LN1", "LN2"] {
                                if r.mentions(&format!("({tag},")) {
                                    t.tag(tag);
                                }
                            }
                        }
                    }
                }
            }
        }
        // modifications
        let arrows: HashSet<_> = hom.arrows.iter().cloned().collect();
        for (s, e, m) in &hom.arrows {
            let r = check_modification(&p, &q, &hom.objects[*s], &hom.objects[*e], m, Direction::Lax);
            ensure(r.is_ok(), || format!("{name}: enumerated modification rejected: {r}"))?;
            for a in 0..n {
                for x in 0..p.cats[a].n_obj() {
                    for v in (0..q.cats[a].n_arr()).filter(|&v| v != m[a].comp[x]) {
                        let mut mm = m.clone();
                        mm[a].comp[x] = v;
                        t.mutants += 1;
                        let r = check_modification(&p, &q, &hom.objects[*s], &hom.objects[*e], &mm, Direction::Lax);
                        let inside = arrows.contains(&(*s, *e, mm));
                        ensure(r.is_ok() == inside, || format!("{name}: modification checker and enumeration disagree"))?;
                        if !inside {
                            t.invalid += 1;
                            if r.mentions("(LNM,") {
                                t.tag("LNM");
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn dicone_mutations(t: &mut Tally) -> Result<(), String> {
    for (name, p, q) in transformation_pairs() {
        let a = &p.base;
        let n = a.n_obj();
        let (tt, _) = ok(hom_diagram(&p, &q))?;
        let end = ok(end_eps(a, &tt, &Flavor::Lax))?;
        let valid: HashSet<_> = end.objects.iter().cloned().collect();
        for d in &end.objects {
            ensure(check_dicone(a, &tt, d, &Flavor::Lax).is_ok(), || format!("{name}: enumerated dicone rejected"))?;
            for (x, y, f) in a.cells1() {
                let c = &tt.cats[x * n + y];
                for v in (0..c.n_arr()).filter(|&v| v != d.cells[x * n + y][f]) {
                    let mut m = d.clone();
                    m.cells[x * n + y][f] = v;
                    t.mutants += 1;
                    let r = check_dicone(a, &tt, &m, &Flavor::Lax);
                    ensure(r.is_ok() == valid.contains(&m), || format!("{name}: dicone checker and enumeration disagree"))?;
                    if !r.is_ok() {
                        t.invalid += 1;
                        for tag in ["LD0", "LD1", "LD2"] {
                            if r.mentions(&format!("({tag},")) {
                                t.tag(tag);
                            }
                        }
                    }
                }
            }
        }
        let arrows: HashSet<_> = end.arrows.iter().cloned().collect();
        for (i, j, rho) in &end.arrows {
            let (di, dj) = (&end.objects[*i], &end.objects[*j]);
            ensure(check_dicone_morphism(a, &tt, di, dj, rho).is_ok(), || format!("{name}: enumerated dicone morphism rejected"))?;
            for x in 0..n {
                let c = &tt.cats[x * n + x];
                for v in (0..c.n_arr()).filter(|&v| v != rho[x]) {
                    let mut m = rho.clone();
                    m[x] = v;
                    t.mutants += 1;
                    let r = check_dicone_morphism(a, &tt, di, dj, &m);
                    let inside = arrows.contains(&(*i, *j, m));
                    ensure(r.is_ok() == inside, || format!("{name}: dicone morphism checker and enumeration disagree"))?;
                    if !inside {
                        t.invalid += 1;
                        if r.mentions("(LDM,") {
                            t.tag("LDM");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Every structure on the constant `Z/2` diagram with `α` valued in the
/// centre: such data is a pseudofunctor iff the cochain is normalized
/// (`α_{f,id}·α_B = α_{id,f}·α_A = 1`) and a 2-cocycle.
fn pseudofunctor_mutations(t: &mut Tally) -> Result<(), String> {
    let g = z2();
    let (one, z) = (g.ids[0], 1 - g.ids[0]);
    for base in [fixtures::two(), fixtures::chain3()] {
        let n = base.n_obj();
        let strict = CatDiagram::constant(&base, &g);
        let mut keys = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for f in 0..base.hom(a, b).n_obj() {
                        for h in 0..base.hom(b, c).n_obj() {
                            keys.push((a, b, c, f, h));
                        }
                    }
                }
            }
        }
        let bits = n + keys.len();
        for mask in 0u32..(1 << bits) {
            let bit = |i: usize| (mask >> i) & 1;
            let cell = |v: u32| NatTransf { comp: vec![if v == 1 { z } else { one }] };
            let alpha_obj = (0..n).map(|a| cell(bit(a))).collect();
            let alpha_comp = keys.iter().enumerate().map(|(i, k)| (*k, cell(bit(n + i)))).collect();
            let p = CatDiagram { pseudo: Some(PseudoData { alpha_obj, alpha_comp }), ..strict.clone() };
            let ac = |k: (usize, usize, usize, usize, usize)| bit(n + keys.iter().position(|x| *x == k).unwrap());
            let mut lf0 = true;
            for (a, b, f) in base.cells1() {
                lf0 &= ac((a, b, b, f, base.id1(b))) ^ bit(b) == 0 && ac((a, a, b, base.id1(a), f)) ^ bit(a) == 0;
            }
            let mut lf1 = true;
            for &(a, b, c, f, h) in &keys {
                for d in 0..n {
                    for k in 0..base.hom(c, d).n_obj() {
                        let hf = base.comp1(a, b, c, h, f);
                        let kh = base.comp1(b, c, d, k, h);
                        lf1 &= ac((a, c, d, hf, k)) ^ ac((a, b, c, f, h)) == ac((a, b, d, f, kh)) ^ ac((b, c, d, h, k));
                    }
                }
            }
            let r = p.validate();
            if mask != 0 {
                t.mutants += 1;
            }
            ensure(r.mentions("LF0") == !lf0 && r.mentions("LF1") == !lf1, || {
                format!("cochain {mask:b}: LF0 {lf0}, LF1 {lf1}, validator: {r}")
            })?;
            ensure(r.is_ok() == (lf0 && lf1), || format!("cochain {mask:b}: {r}"))?;
            if !r.is_ok() {
                t.invalid += 1;
                if !lf0 {
                    t.tag("LF0");
                }
                if !lf1 {
                    t.tag("LF1");
                }
            }
        }
    }
    for (name, p) in fixtures::pseudo_diagrams() {
        ensure(p.validate().is_ok(), || format!("{name} does not validate"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut t = Tally::default();
    two_cat_mutations(&mut t)?;
    transformation_mutations(&mut t)?;
    dicone_mutations(&mut t)?;
    pseudofunctor_mutations(&mut t)?;
    for tag in ["2-category", "LF0", "LF1", "LN0", "LN1", "LN2", "LNM", "LD0", "LD1", "LD2", "LDM"] {
        ensure(t.count(tag) > 0, || format!("no mutation exercised {tag}"))?;
    }
    let tags: Vec<String> = t.tags.iter().map(|(n, c)| format!("{n} {c}")).collect();
    Ok(format!("{} mutants, {} invalid, all detected ({})", t.mutants, t.invalid, tags.join(", ")))
}

// ---------------------------------------------------------------------------

fn sigma_for(base: &Fin2Cat) -> WideSub {
    // the wide subcategory generated by the first non-identity 1-cell
    let first = base.cells1().into_iter().find(|&(a, b, f)| !(a == b && f == base.id1(a)));
    match first {
        Some((a, b, f)) => WideSub::generated_by(base, &[base.cell1_name(a, b, f).to_string()]).unwrap(),
        None => WideSub::all(base),
    }
}

fn criterion_2() -> Outcome {
    let two = fixtures::two();
    let chain = fixtures::chain3();
    let fc = fixtures::free_cell();
    let dp = fixtures::discrete_pair();
    let pairs = vec![
        (CatDiagram::representable(&two, 0), CatDiagram::constant(&two, &FinCat::two())),
        (fixtures::pick_zero(), CatDiagram::constant(&two, &FinCat::two())),
        (CatDiagram::constant(&two, &FinCat::terminal()), fixtures::pick_zero()),
        (CatDiagram::representable(&two, 1), CatDiagram::representable(&two, 0)),
        (CatDiagram::constant(&chain, &FinCat::terminal()), CatDiagram::constant(&chain, &FinCat::two())),
        (CatDiagram::representable(&fc, 0), CatDiagram::constant(&fc, &FinCat::two())),
        (CatDiagram::constant(&dp, &FinCat::terminal()), CatDiagram::constant(&dp, &FinCat::iso())),
    ];
    let mut checked = 0;
    for (i, (p, q)) in pairs.iter().enumerate() {
        let (t, _) = ok(hom_diagram(p, q))?;
        for fl in [Flavor::Strict, Flavor::Pseudo, Flavor::Sigma(sigma_for(&p.base)), Flavor::Lax] {
            let e = ok(end_eps(&p.base, &t, &fl))?;
            let h = ok(hom_eps(p, q, &fl, Direction::Lax))?;
            ensure(ok(find_isomorphism(&e.cat, &h.cat))?.is_some(), || {
                format!("pair {i}, flavor {}: end has {} objects, Hom has {}", fl.label(), e.cat.n_obj(), h.cat.n_obj())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{} pairs x 4 flavors, {checked} isomorphisms found", pairs.len()))
}

fn criterion_3() -> Outcome {
    let mut diagrams: Vec<(&str, CatDiagram)> = fixtures::strict_diagrams();
    for (name, b) in fixtures::bases() {
        diagrams.push((name, CatDiagram::constant(&b, &FinCat::terminal())));
    }
    let mut compared = 0;
    for (np, p) in &diagrams {
        for (nq, q) in diagrams.iter().filter(|(_, q)| q.base == p.base) {
            for dir in [Direction::Lax, Direction::OpLax] {
                let b = &p.base;
                let same = |x: &Flavor, y: &Flavor| -> Result<bool, String> {
                    let (hx, hy) = (ok(hom_eps(p, q, x, dir))?, ok(hom_eps(p, q, y, dir))?);
                    let ox: BTreeSet<_> = hx.objects.iter().collect();
                    let oy: BTreeSet<_> = hy.objects.iter().collect();
                    let ax: BTreeSet<_> = hx.arrows.iter().map(|(s, t, m)| (&hx.objects[*s], &hx.objects[*t], m)).collect();
                    let ay: BTreeSet<_> = hy.arrows.iter().map(|(s, t, m)| (&hy.objects[*s], &hy.objects[*t], m)).collect();
                    Ok(ox == oy && ax == ay)
                };
                ensure(same(&Flavor::Sigma(WideSub::all(b)), &Flavor::Pseudo)?, || format!("{np} -> {nq}: Σ = all differs from p"))?;
                ensure(same(&Flavor::Sigma(WideSub::identities(b)), &Flavor::Lax)?, || {
                    format!("{np} -> {nq}: Σ = identities differs from lax")
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} (P, Q, direction) triples: Σ=all is p and Σ=identities is lax"))
}

fn criterion_4() -> Outcome {
    let two = fixtures::two();
    let dp = fixtures::discrete_pair();
    let cases = vec![
        ("point weight, Σ=ids", CatDiagram::constant(&two.op_dual(), &FinCat::terminal()), fixtures::pick_zero(), WideSub::identities(&two)),
        ("point weight, Σ=all", CatDiagram::constant(&two.op_dual(), &FinCat::terminal()), fixtures::pick_zero(), WideSub::all(&two)),
        ("representable weight", CatDiagram::representable(&two.op_dual(), 1), fixtures::pick_zero(), WideSub::all(&two)),
        (
            "representable weight, constant 2",
            CatDiagram::representable(&two.op_dual(), 0),
            CatDiagram::constant(&two, &FinCat::two()),
            WideSub::identities(&two),
        ),
        ("discrete pair", CatDiagram::constant(&dp.op_dual(), &FinCat::terminal()), CatDiagram::constant(&dp, &FinCat::two()), WideSub::all(&dp)),
    ];
    for (name, w, p, sigma) in &cases {
        let wc = ok(weighted_sigma_colimit(w, p, sigma, DEFAULT_CAP))?;
        ensure(wc.conical.status() == Status::Finite, || format!("{name}: undecided"))?;
        ensure(wc.certificate.len() == 4 && wc.certificate.iter().all(|c| c.passed), || format!("{name}: certificate incomplete"))?;
    }
    // W ⊗_p P computed over El_W and over El_P
    let sym = vec![
        (CatDiagram::constant(&two.op_dual(), &FinCat::terminal()), fixtures::pick_zero()),
        (CatDiagram::representable(&two.op_dual(), 1), fixtures::pick_zero()),
        (CatDiagram::constant(&two.op_dual(), &FinCat::two()), CatDiagram::representable(&two, 0)),
    ];
    for (i, (w, p)) in sym.iter().enumerate() {
        let b = &p.base;
        ensure(w.base.op_dual() == *b, || "op_dual is not an involution".into())?;
        let x = ok(weighted_sigma_colimit(w, p, &WideSub::all(b), DEFAULT_CAP))?;
        let y = ok(weighted_sigma_colimit(p, w, &WideSub::all(&w.base), DEFAULT_CAP))?;
        let (Some(cx), Some(cy)) = (x.conical.category(), y.conical.category()) else {
            return Err(format!("symmetry case {i}: undecided"));
        };
        let f = ok(find_equivalence(cx, cy))?.ok_or_else(|| format!("symmetry case {i}: no equivalence"))?;
        ensure(is_equivalence(&f, cx, cy).verdict, || format!("symmetry case {i}: witness rejected"))?;
    }
    Ok(format!("{} weighted colimits certified against 1, 2, I, parallel pair; {} symmetry pairs equivalent", cases.len(), sym.len()))
}

fn criterion_5() -> Outcome {
    let pt = Fin2Cat::terminal();
    for c in [FinCat::two(), FinCat::parallel_pair(), FinCat::iso(), z2(), fixtures::two_isos()] {
        for sigma in [WideSub::identities(&pt), WideSub::all(&pt)] {
            let r = ok(conical_sigma_colimit(&CatDiagram::constant(&pt, &c), &sigma, DEFAULT_CAP))?;
            let l = r.category().ok_or("one-object colimit undecided")?;
            ensure(ok(find_isomorphism(l, &c))?.is_some(), || format!("colimit over the point is not {}", c.objects.join(",")))?;
        }
    }
    let two = FinCat::two();
    let u = two.hom(0, 1)[0];
    let loc = ok(localize(&two, &[u], DEFAULT_CAP))?;
    let l = loc.pres.cat().ok_or("localization of 2 undecided")?;
    ensure(ok(find_isomorphism(l, &FinCat::iso()))?.is_some(), || "2[u⁻¹] is not I".into())?;
    let pp = fixtures::parallel_pair();
    let q = CatDiagram::constant(&pp, &FinCat::terminal());
    let caps = [1, 2, 4, 8, 12, 16];
    for cap in caps {
        let r = ok(conical_sigma_colimit(&q, &WideSub::all(&pp), cap))?;
        ensure(r.status() == Status::UndecidedAtCap && r.category().is_none(), || format!("integers fixture decided at cap {cap}"))?;
    }
    Ok(format!("point diagrams return their category; 2[u⁻¹] ≅ I; integers fixture undecided at caps {caps:?}"))
}

fn criterion_6() -> Outcome {
    let cases = vec![
        ("terminal", all(Fin2Cat::terminal()), true),
        ("two_all", all(fixtures::two()), true),
        ("two_ids", marked(fixtures::two(), &[]), false),
        ("discrete_pair", all(fixtures::discrete_pair()), false),
        ("chain3", all(fixtures::chain3()), true),
        ("diamond", all(fixtures::diamond()), true),
        ("parallel_pair", all(fixtures::parallel_pair()), false),
        ("iso_cell", all(fixtures::iso_cell()), true),
        ("free_cell_g", marked(fixtures::free_cell(), &["g"]), true),
        ("free_cell_all", all(fixtures::free_cell()), false),
        ("two_cells_g", marked(Shape::Biequifier.base(), &["g"]), false),
        ("empty", all(Fin2Cat::locally_discrete(&FinCat::empty())), false),
    ];
    let mut negatives = 0;
    for (name, m, want) in &cases {
        let r = check_sigma_filtered(m);
        let (v, _) = ok(filtered_via_cones(m))?;
        ensure(r.verdict == *want && v == *want, || format!("{name}: axioms {}, cones {v}, expected {want}", r.verdict))?;
        let rv = revalidate_filtered(m, &r);
        ensure(rv.is_ok(), || format!("{name}: witness fails revalidation: {rv}"))?;
        negatives += usize::from(!want);
    }
    Ok(format!("{} marked 2-categories ({negatives} negative): axioms and cone criterion agree, witnesses revalidated", cases.len()))
}

fn criterion_7() -> Outcome {
    let mut checks = 0;
    for (name, b) in fixtures::bases().into_iter().filter(|(_, b)| b.n_obj() <= 3) {
        let mut targets: Vec<CatDiagram> = (0..b.n_obj()).map(|y| CatDiagram::representable(&b, y)).collect();
        targets.push(CatDiagram::constant(&b, &FinCat::terminal()));
        targets.push(CatDiagram::constant(&b, &FinCat::two()));
        for x in 0..b.n_obj() {
            for q in &targets {
                let (_, e) = ok(yoneda_check(q, x))?;
                ensure(e.verdict, || format!("{name} at {}: {:?}", b.objects[x], e.witness))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} evaluation functors are equivalences"))
}

fn criterion_8() -> Outcome {
    let mut flats: Vec<(String, CatDiagram)> = Vec::new();
    for (name, b) in fixtures::bases() {
        for x in 0..b.n_obj() {
            let p = ok(representable(&b, x))?;
            let v = ok(check_flat(&p))?;
            ensure(v.verdict == Verdict::Flat, || format!("representable at {x} on {name} is {}", v.verdict.label()))?;
            flats.push((format!("{name}({x},-)"), p));
        }
    }
    let pair = CatDiagram::constant(&fixtures::discrete_pair(), &FinCat::terminal());
    let v = ok(check_flat(&pair))?;
    ensure(v.verdict == Verdict::NotFlat, || "the discrete-pair constant diagram is flat".into())?;
    ensure(v.evidence.counterexample.map(|c| c.axiom) == Some(Axiom::F0), || "expected a σF0 counterexample".into())?;
    for (name, p) in fixtures::strict_diagrams() {
        if ok(check_flat(&p))?.verdict == Verdict::Flat {
            flats.push((name.to_string(), p));
        }
    }
    flats.push(("const_point_on_diamond".into(), CatDiagram::constant(&fixtures::diamond(), &FinCat::terminal())));
    for (name, p) in &flats {
        let v = ok(check_flat(p))?;
        ensure(v.verdict == Verdict::Flat, || format!("{name} is not flat"))?;
        let ce = ok(canonical_expression(p, DEFAULT_CAP))?;
        ensure(!ce.undecided() && ce.pointwise_equivalence(), || format!("{name}: canonical expression {:?}", ce.entries))?;
        let el = &v.elements;
        let m = Marked2Cat { cat: el.cat.op_dual(), sigma: el.cart.op(&el.cat) };
        ensure(check_sigma_filtered(&m).verdict, || format!("{name}: El_P^op is not σ-filtered"))?;
    }
    Ok(format!("representables flat on {} bases; discrete pair not flat; {} flat diagrams have pointwise canonical expressions", fixtures::bases().len(), flats.len()))
}

fn criterion_9() -> Outcome {
    let (mut total, mut negatives) = (0, 0);
    for (name, a) in fixtures::semilattices() {
        let (cones, missing) = ok(generate_bilimit_cones(&a))?;
        ensure(missing.is_empty(), || format!("{name}: {} shape instances without a bilimit", missing.len()))?;
        let mut ps: Vec<CatDiagram> = (0..a.n_obj()).map(|x| CatDiagram::representable(&a, x)).collect();
        for c in [FinCat::empty(), FinCat::terminal(), FinCat::two(), FinCat::iso()] {
            ps.push(CatDiagram::constant(&a, &c));
        }
        for p in &ps {
            let le = ok(check_left_exact(p, &cones))?;
            let flat = ok(check_flat(p))?.verdict == Verdict::Flat;
            ensure(le.exact == flat, || format!("{name}: left exact {} but flat {flat}", le.exact))?;
            total += 1;
            negatives += usize::from(!flat);
        }
    }
    ensure(negatives >= 1, || "no negative diagram".into())?;
    Ok(format!("{total} diagrams on {} semilattices ({negatives} not exact) agree", fixtures::semilattices().len()))
}

fn criterion_10() -> Outcome {
    for (name, p) in fixtures::pseudo_diagrams() {
        let (pt, eta, eps) = ok(strictify(&p))?;
        ensure(!pt.is_pseudo() && pt.validate().is_ok(), || format!("{name}: strictification is not a strict 2-functor"))?;
        for a in 0..p.n() {
            ensure(is_equivalence(&eta.comps[a], &p.cats[a], &pt.cats[a]).verdict, || format!("{name}: η at {a} is not an equivalence"))?;
        }
        let bad = ok(check_strictification(&p, &pt, &eta, &eps))?;
        ensure(bad.is_empty(), || format!("{name}: {bad:?}"))?;
        let direct = ok(check_flat_pseudo(&p))?;
        let via = ok(check_flat(&pt))?;
        ensure(direct.verdict == via.verdict, || format!("{name}: routes disagree"))?;
    }
    Ok(format!("{} pseudofunctors strictified; η equivalences; both flatness routes agree", fixtures::pseudo_diagrams().len()))
}

fn criterion_11() -> Outcome {
    let two = fixtures::two();
    let dp = fixtures::discrete_pair();
    let pointwise = [
        (
            fixtures::product_diagram(&two, &two, &fixtures::pick_zero(), &CatDiagram::constant(&two, &FinCat::two())),
            two.clone(),
            two.clone(),
            CatDiagram::representable(&two, 0),
        ),
        (
            fixtures::product_diagram(&two, &dp, &CatDiagram::constant(&two, &FinCat::two()), &CatDiagram::constant(&dp, &FinCat::iso())),
            two.clone(),
            dp.clone(),
            CatDiagram::constant(&two, &FinCat::terminal()),
        ),
    ];
    let flavors = [(Flavor::Strict, Flavor::Strict), (Flavor::Lax, Flavor::Strict), (Flavor::Lax, Flavor::Pseudo), (Flavor::Pseudo, Flavor::Lax)];
    for (i, (f, a, b, w)) in pointwise.iter().enumerate() {
        for (al, be) in &flavors {
            let r = ok(pointwise_limit_check(w, f, a, b, al, be))?;
            ensure(r.is_ok(), || format!("pointwise case {i}, {} {}: {r}", al.label(), be.label()))?;
        }
    }
    let interchange = [
        (fixtures::product_diagram(&two, &dp, &CatDiagram::constant(&two, &FinCat::two()), &CatDiagram::constant(&dp, &FinCat::iso())), two.clone(), dp.clone()),
        (fixtures::product_diagram(&two, &two, &fixtures::pick_zero(), &CatDiagram::representable(&two, 0)), two.clone(), two.clone()),
    ];
    for (i, (f, a, b)) in interchange.iter().enumerate() {
        let wl = CatDiagram::constant(a, &FinCat::terminal());
        let wr = CatDiagram::representable(b, 0);
        for (al, be) in [(Flavor::Lax, Flavor::Lax), (Flavor::Pseudo, Flavor::Lax), (Flavor::Strict, Flavor::Strict)] {
            ensure(ok(interchange_check(&wl, &wr, f, a, b, &al, &be))?, || format!("interchange case {i}, {} {}", al.label(), be.label()))?;
        }
    }
    // A strict limit of a non-strict family is the excluded case: it is
    // refused, and no claim is made about it.
    Ok(format!(
        "{} pointwise and {} interchange fixtures; strict-over-non-strict excluded (not asserted)",
        pointwise.len(),
        interchange.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("axiom suites and mutations", criterion_1),
        ("end formula for Hom", criterion_2),
        ("flavor collapse", criterion_3),
        ("weighted to conical reduction", criterion_4),
        ("Gray construction sanity", criterion_5),
        ("filteredness characterization", criterion_6),
        ("pseudo-Yoneda", criterion_7),
        ("flatness coherence", criterion_8),
        ("exactness bridge", criterion_9),
        ("strictification", criterion_10),
        ("pointwise limits and interchange", criterion_11),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
