//! Categories given by generators and relations, solved by bounded
//! rewriting.
//!
//! Relations are oriented by shortlex order. Words up to a length bound are
//! enumerated (keeping only words with few redexes), one-step rewrites are
//! merged with a union-find, and once every irreducible word of some length
//! `m` is equivalent to a shorter word the classes of shorter words are
//! turned into a candidate category. The candidate is accepted only if it
//! validates as a category, satisfies every relation, and each class is the
//! value of its own representative. Under those checks it is isomorphic to the
//! presented category, so a `Finite` answer is never a guess.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Arrow, FinCat, Functor, UnionFind, NONE};
use crate::budget::Counter;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A path of generators in application order, anchored at `start` so that
/// empty words know their object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub start: usize,
    pub gens: Vec<usize>,
}

impl Word {
    pub fn empty(start: usize) -> Word {
        Word { start, gens: Vec::new() }
    }

    pub fn single(p: &Presentation, g: usize) -> Word {
        Word { start: p.generators[g].src, gens: vec![g] }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn key(&self) -> (usize, &[usize], usize) {
        (self.gens.len(), &self.gens, self.start)
    }

    pub fn then(&self, other: &Word) -> Word {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Word { start: self.start, gens }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Presentation {
    pub objects: Vec<String>,
    pub identity_names: Vec<String>,
    pub generators: Vec<Generator>,
    /// Pairs of parallel words.
    pub relations: Vec<(Word, Word)>,
    /// Consequences of the relations that speed up rewriting; checked like
    /// relations but not part of the presentation proper.
    pub hints: Vec<(Word, Word)>,
}

impl Presentation {
    pub fn end(&self, w: &Word) -> usize {
        w.gens.last().map_or(w.start, |&g| self.generators[g].tgt)
    }

    pub fn is_path(&self, w: &Word) -> bool {
        let mut at = w.start;
        for &g in &w.gens {
            if g >= self.generators.len() || self.generators[g].src != at {
                return false;
            }
            at = self.generators[g].tgt;
        }
        true
    }

    /// Every relation must relate two parallel paths.
    pub fn check(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, (l, r)) in self.relations.iter().chain(self.hints.iter()).enumerate() {
            if !self.is_path(l) || !self.is_path(r) {
                out.push(format!("relation {i} is not a composable word"));
            } else if l.start != r.start || self.end(l) != self.end(r) {
                out.push(format!("relation {i} relates non-parallel words"));
            }
        }
        out
    }

    pub fn word_name(&self, w: &Word) -> String {
        if w.gens.is_empty() {
            return self.identity_names[w.start].clone();
        }
        w.gens.iter().map(|&g| self.generators[g].name.as_str()).collect::<Vec<_>>().join(";")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Finite,
    UndecidedAtCap,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub cat: FinCat,
    /// Shortlex-least representative word of each arrow.
    pub reps: Vec<Word>,
    pub generator_image: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PresentedCategory {
    pub presentation: Presentation,
    pub cap: usize,
    pub status: Status,
    pub realization: Option<Realization>,
}

impl PresentedCategory {
    /// The arrow a word denotes, when the category was realized.
    pub fn normalize(&self, w: &Word) -> Option<usize> {
        let r = self.realization.as_ref()?;
        let mut acc = r.cat.ids[w.start];
        for &g in &w.gens {
            acc = r.cat.try_compose(r.generator_image[g], acc)?;
        }
        Some(acc)
    }

    pub fn is_finite(&self) -> bool {
        self.status == Status::Finite
    }

    pub fn cat(&self) -> Option<&FinCat> {
        self.realization.as_ref().map(|r| &r.cat)
    }
}

/// Maximal number of redex occurrences allowed in an enumerated word.
const REDEX_SLACK: usize = 2;
/// Words of length `m + LENGTH_SLACK` must be enumerated before `m` counts
/// as a stable length.
const LENGTH_SLACK: usize = 2;

#[derive(Clone, Debug)]
struct Rule {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

struct Rewriter<'a> {
    p: &'a Presentation,
    rules: Vec<Rule>,
    by_first: Vec<Vec<usize>>,
    by_last: Vec<Vec<usize>>,
}

impl<'a> Rewriter<'a> {
    fn new(p: &'a Presentation) -> Rewriter<'a> {
        let shortlex = |w: &Vec<usize>| (w.len(), w.clone());
        let mut targets: BTreeMap<(usize, Vec<usize>), BTreeSet<(usize, Vec<usize>)>> = BTreeMap::new();
        for (l, r) in p.relations.iter().chain(p.hints.iter()) {
            let (kl, kr) = (shortlex(&l.gens), shortlex(&r.gens));
            if kl != kr {
                let (big, small) = if kl > kr { (kl, kr) } else { (kr, kl) };
                targets.entry(big).or_default().insert(small);
            }
        }
        // a left side with several right sides relates those right sides;
        // keep only the least one and orient the others towards it
        loop {
            let Some(lhs) = targets.iter().find(|(_, t)| t.len() > 1).map(|(k, _)| k.clone()) else { break };
            let set = targets.get_mut(&lhs).unwrap();
            let least = set.pop_first().unwrap();
            let rest = std::mem::take(set);
            set.insert(least.clone());
            for r in rest {
                targets.entry(r).or_default().insert(least.clone());
            }
        }
        let rules: Vec<Rule> = targets
            .into_iter()
            .map(|((_, lhs), t)| Rule { lhs, rhs: t.into_iter().next().unwrap().1 })
            .collect();
        let ng = p.generators.len();
        let mut by_first = vec![Vec::new(); ng];
        let mut by_last = vec![Vec::new(); ng];
        for (i, r) in rules.iter().enumerate() {
            by_first[r.lhs[0]].push(i);
            by_last[*r.lhs.last().unwrap()].push(i);
        }
        Rewriter { p, rules, by_first, by_last }
    }

    fn matches_at(&self, gens: &[usize], i: usize, rule: usize) -> bool {
        let l = &self.rules[rule].lhs;
        i + l.len() <= gens.len() && gens[i..i + l.len()] == l[..]
    }

    fn first_redex(&self, gens: &[usize]) -> Option<(usize, usize)> {
        for i in 0..gens.len() {
            for &r in &self.by_first[gens[i]] {
                if self.matches_at(gens, i, r) {
                    return Some((i, r));
                }
            }
        }
        None
    }

    fn redexes(&self, gens: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..gens.len() {
            for &r in &self.by_first[gens[i]] {
                if self.matches_at(gens, i, r) {
                    out.push((i, r));
                }
            }
        }
        out
    }

    /// Redexes that end at the last letter.
    fn suffix_redexes(&self, gens: &[usize]) -> usize {
        let Some(&last) = gens.last() else { return 0 };
        self.by_last[last]
            .iter()
            .filter(|&&r| {
                let l = self.rules[r].lhs.len();
                l <= gens.len() && gens[gens.len() - l..] == self.rules[r].lhs[..]
            })
            .count()
    }

    fn apply(&self, w: &Word, i: usize, rule: usize) -> Word {
        let r = &self.rules[rule];
        let mut gens = Vec::with_capacity(w.gens.len() + r.rhs.len());
        gens.extend_from_slice(&w.gens[..i]);
        gens.extend_from_slice(&r.rhs);
        gens.extend_from_slice(&w.gens[i + r.lhs.len()..]);
        Word { start: w.start, gens }
    }

    fn reduce(&self, mut w: Word) -> Word {
        while let Some((i, r)) = self.first_redex(&w.gens) {
            w = self.apply(&w, i, r);
        }
        w
    }
}

struct Closure {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    uf: UnionFind,
}

fn closure(rw: &Rewriter, max_len: usize, counter: &mut Counter) -> Result<Closure> {
    let p = rw.p;
    let mut words: Vec<Word> = (0..p.objects.len()).map(Word::empty).collect();
    let mut redex: Vec<usize> = vec![0; words.len()];
    let mut out_gens: Vec<Vec<usize>> = vec![Vec::new(); p.objects.len()];
    for (g, gen) in p.generators.iter().enumerate() {
        out_gens[gen.src].push(g);
    }
    let mut level_start = 0;
    for _ in 0..max_len {
        let level_end = words.len();
        for wi in level_start..level_end {
            let end = p.end(&words[wi]);
            for &g in &out_gens[end] {
                let mut gens = words[wi].gens.clone();
                gens.push(g);
                let r = redex[wi] + rw.suffix_redexes(&gens);
                if r <= REDEX_SLACK {
                    counter.tick()?;
                    words.push(Word { start: words[wi].start, gens });
                    redex.push(r);
                }
            }
        }
        level_start = level_end;
    }
    let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(words.len());
    for wi in 0..words.len() {
        if redex[wi] == 0 {
            continue;
        }
        for (i, r) in rw.redexes(&words[wi].gens) {
            counter.tick()?;
            let next = rw.apply(&words[wi], i, r);
            let target = match index.get(&next) {
                Some(&t) => Some(t),
                None => index.get(&rw.reduce(next)).copied(),
            };
            if let Some(t) = target {
                uf.union(wi, t);
            }
        }
    }
    Ok(Closure { words, index, uf })
}

struct Candidate<'a> {
    rw: &'a Rewriter<'a>,
    cl: &'a mut Closure,
    m: usize,
    min_of_root: HashMap<usize, usize>,
}

impl Candidate<'_> {
    fn class_of(&mut self, w: &Word) -> Option<usize> {
        let i = *self.cl.index.get(w)?;
        Some(self.cl.uf.find(i))
    }

    fn rep_of_root(&self, root: usize) -> &Word {
        &self.cl.words[self.min_of_root[&root]]
    }

    /// Reduces an arbitrary word to the root of a class of short words.
    fn normal_root(&mut self, w: Word) -> Option<usize> {
        let mut w = self.rw.reduce(w);
        loop {
            if w.len() < self.m {
                return self.class_of(&w);
            }
            let prefix = Word { start: w.start, gens: w.gens[..self.m].to_vec() };
            let root = self.class_of(&prefix)?;
            let rep = self.rep_of_root(root).clone();
            if rep.len() >= self.m {
                return None;
            }
            let mut gens = rep.gens;
            gens.extend_from_slice(&w.gens[self.m..]);
            w = self.rw.reduce(Word { start: w.start, gens });
        }
    }
}

fn try_realize(p: &Presentation, rw: &Rewriter, cl: &mut Closure, max_len: usize) -> Option<Realization> {
    // least word of every class
    let mut min_of_root: HashMap<usize, usize> = HashMap::new();
    for i in 0..cl.words.len() {
        let r = cl.uf.find(i);
        let e = min_of_root.entry(r).or_insert(i);
        if cl.words[i].key() < cl.words[*e].key() {
            *e = i;
        }
    }
    let mut irreducible_by_len: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    for (i, w) in cl.words.iter().enumerate() {
        if rw.first_redex(&w.gens).is_none() {
            irreducible_by_len[w.len()].push(i);
        }
    }
    let stable = (1..=max_len.saturating_sub(LENGTH_SLACK)).find(|&m| {
        irreducible_by_len[m].iter().all(|&i| {
            let r = cl.uf.find(i);
            cl.words[min_of_root[&r]].len() < m
        })
    })?;
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..cl.words.len() {
        if cl.words[i].len() < stable {
            let r = cl.uf.find(i);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort_by(|a, b| cl.words[min_of_root[a]].key().cmp(&cl.words[min_of_root[b]].key()));
    let reps: Vec<Word> = roots.iter().map(|r| cl.words[min_of_root[r]].clone()).collect();
    let arrow_of_root: HashMap<usize, usize> = roots.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let mut cand = Candidate { rw, cl, m: stable, min_of_root };
    let n = reps.len();
    let mut ids = vec![NONE; p.objects.len()];
    for (k, w) in reps.iter().enumerate() {
        if w.is_empty() {
            ids[w.start] = k;
        }
    }
    if ids.contains(&NONE) {
        return None;
    }
    let arrows: Vec<Arrow> = reps
        .iter()
        .map(|w| Arrow { name: p.word_name(w), src: w.start, tgt: p.end(w) })
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for g in 0..n {
        for f in 0..n {
            if arrows[f].tgt != arrows[g].src {
                table.push(NONE);
                continue;
            }
            let root = cand.normal_root(reps[f].then(&reps[g]))?;
            table.push(*arrow_of_root.get(&root)?);
        }
    }
    let cat = FinCat::from_fn(p.objects.clone(), arrows, ids, |g, f| table[g * n + f]);
    if !cat.validate().is_ok() {
        return None;
    }
    let mut generator_image = Vec::with_capacity(p.generators.len());
    for g in 0..p.generators.len() {
        let root = cand.normal_root(Word::single(p, g))?;
        generator_image.push(*arrow_of_root.get(&root)?);
    }
    let real = Realization { cat, reps, generator_image };
    let pc = PresentedCategory { presentation: Presentation::default(), cap: 0, status: Status::Finite, realization: Some(real) };
    let eval = |w: &Word| pc.normalize(w);
    for (l, r) in p.relations.iter().chain(p.hints.iter()) {
        if eval(l)? != eval(r)? {
            return None;
        }
    }
    let real = pc.realization.as_ref().unwrap();
    for (k, w) in real.reps.iter().enumerate() {
        if eval(w)? != k {
            return None;
        }
    }
    pc.realization
}

/// Solves a presentation with word-length bound `cap`.
pub fn solve(p: Presentation, cap: usize) -> Result<PresentedCategory> {
    let problems = p.check();
    if !problems.is_empty() {
        return Err(crate::error::Error::Invalid(problems.join("; ")));
    }
    let mut counter = Counter::new("word closure");
    let realization = {
        let rw = Rewriter::new(&p);
        let mut found = None;
        for max_len in (LENGTH_SLACK + 1)..=cap {
            let mut cl = closure(&rw, max_len, &mut counter)?;
            if let Some(r) = try_realize(&p, &rw, &mut cl, max_len) {
                found = Some(r);
                break;
            }
        }
        found
    };
    let status = if realization.is_some() { Status::Finite } else { Status::UndecidedAtCap };
    Ok(PresentedCategory { presentation: p, cap, status, realization })
}

/// The category of fractions `c[sigma⁻¹]` with its canonical functor.
#[derive(Clone, Debug)]
pub struct Localized {
    pub pres: PresentedCategory,
    /// Generator index of each arrow of the source (`None` for identities).
    pub arrow_gen: Vec<Option<usize>>,
    /// Generator index of the formal inverse of each inverted arrow.
    pub inverse_gen: Vec<Option<usize>>,
}

impl Localized {
    /// The canonical functor from the source into the realization.
    pub fn functor(&self, c: &FinCat) -> Option<Functor> {
        let real = self.pres.realization.as_ref()?;
        let arr = (0..c.n_arr())
            .map(|f| match self.arrow_gen[f] {
                Some(g) => real.generator_image[g],
                None => real.cat.ids[c.src(f)],
            })
            .collect();
        Some(Functor { obj: (0..c.n_obj()).collect(), arr })
    }

    pub fn status(&self) -> Status {
        self.pres.status
    }
}

/// Closes a set of arrows under composition and adds identities.
pub fn composition_closure(c: &FinCat, sigma: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; c.n_arr()];
    for &s in sigma {
        inside[s] = true;
    }
    for &i in &c.ids {
        inside[i] = true;
    }
    loop {
        let mut changed = false;
        for (g, f, h) in c.composable_pairs() {
            if inside[g] && inside[f] && !inside[h] {
                inside[h] = true;
                changed = true;
            }
        }
        if !changed {
            return inside;
        }
    }
}

pub fn localize(c: &FinCat, sigma: &[usize], cap: usize) -> Result<Localized> {
    let inside = composition_closure(c, sigma);
    let mut p = Presentation {
        objects: c.objects.clone(),
        identity_names: c.ids.iter().map(|&i| c.arrows[i].name.clone()).collect(),
        ..Presentation::default()
    };
    let mut arrow_gen = vec![None; c.n_arr()];
    for f in 0..c.n_arr() {
        if !c.is_identity(f) {
            arrow_gen[f] = Some(p.generators.len());
            p.generators.push(Generator { name: c.arrows[f].name.clone(), src: c.src(f), tgt: c.tgt(f) });
        }
    }
    let mut inverse_gen = vec![None; c.n_arr()];
    for s in 0..c.n_arr() {
        if inside[s] && !c.is_identity(s) {
            inverse_gen[s] = Some(p.generators.len());
            p.generators.push(Generator { name: format!("{}^-1", c.arrows[s].name), src: c.tgt(s), tgt: c.src(s) });
        }
    }
    let word_of = |f: usize| match arrow_gen[f] {
        Some(g) => Word { start: c.src(f), gens: vec![g] },
        None => Word::empty(c.src(f)),
    };
    for (g, f, h) in c.composable_pairs() {
        if let (Some(gg), Some(gf)) = (arrow_gen[g], arrow_gen[f]) {
            p.relations.push((Word { start: c.src(f), gens: vec![gf, gg] }, word_of(h)));
        }
    }
    for s in 0..c.n_arr() {
        let Some(si) = inverse_gen[s] else { continue };
        let sg = arrow_gen[s].unwrap();
        p.relations.push((Word { start: c.src(s), gens: vec![sg, si] }, Word::empty(c.src(s))));
        p.relations.push((Word { start: c.tgt(s), gens: vec![si, sg] }, Word::empty(c.tgt(s))));
    }
    // consequences used as shortcuts by the rewriter
    for s in 0..c.n_arr() {
        let Some(si) = inverse_gen[s] else { continue };
        if let Some(a) = c.inverse(s) {
            p.hints.push((Word { start: c.tgt(s), gens: vec![si] }, word_of(a)));
        }
        for t in 0..c.n_arr() {
            let Some(tg) = arrow_gen[t] else { continue };
            // s⁻¹ then t, with t = u∘s
            if c.src(t) == c.src(s) {
                for &u in c.hom(c.tgt(s), c.tgt(t)) {
                    if c.compose(u, s) == t && u != c.ids[c.tgt(s)] {
                        p.hints.push((Word { start: c.tgt(s), gens: vec![si, tg] }, word_of(u)));
                    }
                }
            }
            // t then s⁻¹, with t = s∘u
            if c.tgt(t) == c.tgt(s) {
                for &u in c.hom(c.src(t), c.src(s)) {
                    if c.compose(s, u) == t && u != c.ids[c.src(s)] {
                        p.hints.push((Word { start: c.src(t), gens: vec![tg, si] }, word_of(u)));
                    }
                }
            }
            // s⁻¹ then t⁻¹ is (s∘t)⁻¹
            if let Some(ti) = inverse_gen[t] {
                if c.src(s) == c.tgt(t) {
                    let st = c.compose(s, t);
                    let rhs = match inverse_gen[st] {
                        Some(x) => Word { start: c.tgt(st), gens: vec![x] },
                        None => Word::empty(c.tgt(st)),
                    };
                    p.hints.push((Word { start: c.tgt(s), gens: vec![si, ti] }, rhs));
                }
            }
        }
    }
    let pres = solve(p, cap)?;
    Ok(Localized { pres, arrow_gen, inverse_gen })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{all_functors, find_isomorphism};

    #[test]
    fn inverting_the_arrow_of_two_gives_the_free_isomorphism() {
        let two = FinCat::two();
        let f = two.arrow_index("0<1").unwrap();
        let l = localize(&two, &[f], 8).unwrap();
        assert_eq!(l.status(), Status::Finite);
        assert!(find_isomorphism(l.pres.cat().unwrap(), &FinCat::iso()).unwrap().is_some());
    }

    #[test]
    fn empty_localization_is_the_source() {
        for c in [FinCat::two(), FinCat::parallel_pair(), FinCat::iso(), FinCat::monoid("*", &["1", "e"], &[vec![0, 1], vec![1, 1]])] {
            let l = localize(&c, &[], 6).unwrap();
            assert_eq!(l.status(), Status::Finite);
            let real = l.pres.cat().unwrap();
            assert!(find_isomorphism(real, &c).unwrap().is_some());
            let f = l.functor(&c).unwrap();
            assert!(crate::fincat::is_isomorphism(&f, &c, real));
        }
    }

    #[test]
    fn parallel_pair_with_both_inverted_is_undecided() {
        let c = FinCat::parallel_pair();
        let f = c.arrow_index("f").unwrap();
        let g = c.arrow_index("g").unwrap();
        for cap in [2, 8, 16] {
            let l = localize(&c, &[f, g], cap).unwrap();
            assert_eq!(l.status(), Status::UndecidedAtCap);
        }
    }

    #[test]
    fn idempotent_inverted_collapses() {
        // e·e = e; inverting e forces e = 1
        let m = FinCat::monoid("*", &["1", "e"], &[vec![0, 1], vec![1, 1]]);
        let l = localize(&m, &[1], 8).unwrap();
        assert_eq!(l.status(), Status::Finite);
        assert_eq!(l.pres.cat().unwrap().n_arr(), 1);
    }

    fn inverts(c: &FinCat, e: &FinCat, f: &Functor, sigma: &[usize]) -> bool {
        let _ = c;
        sigma.iter().all(|&s| e.is_iso(f.arr[s]))
    }

    #[test]
    fn universal_property_against_small_targets() {
        let cospan = FinCat::from_poset(&["a", "b", "c"], |x, y| x == y || (y == 2 && x != 2));
        let two = FinCat::two();
        let cases: Vec<(FinCat, Vec<usize>)> = vec![
            (two.clone(), vec![two.arrow_index("0<1").unwrap()]),
            (cospan.clone(), vec![cospan.arrow_index("a<c").unwrap()]),
            (cospan.clone(), vec![cospan.arrow_index("a<c").unwrap(), cospan.arrow_index("b<c").unwrap()]),
        ];
        let targets = [FinCat::terminal(), FinCat::two(), FinCat::iso(), FinCat::parallel_pair()];
        for (c, sigma) in cases {
            let l = localize(&c, &sigma, 10).unwrap();
            assert_eq!(l.status(), Status::Finite);
            let real = l.pres.cat().unwrap();
            let q = l.functor(&c).unwrap();
            for e in &targets {
                let mut from_c: Vec<Functor> =
                    all_functors(&c, e).unwrap().into_iter().filter(|f| inverts(&c, e, f, &sigma)).collect();
                let mut via: Vec<Functor> = all_functors(real, e).unwrap().iter().map(|g| g.after(&q)).collect();
                from_c.sort();
                via.sort();
                let n = via.len();
                via.dedup();
                assert_eq!(n, via.len(), "restriction along the localization is not injective");
                assert_eq!(from_c, via);
            }
        }
    }
}
