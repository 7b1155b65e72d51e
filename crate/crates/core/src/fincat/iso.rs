use super::{all_functors, FinCat, Functor, NatTransf};
use crate::budget::Counter;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub verdict: bool,
    /// On failure: the hom pair that is not bijective, or the object that
    /// is not isomorphic to any image.
    pub witness: Option<String>,
}

/// Full, faithful and essentially surjective, checked by enumeration.
pub fn is_equivalence(f: &Functor, c: &FinCat, d: &FinCat) -> EquivalenceReport {
    let fail = |w: String| EquivalenceReport { verdict: false, witness: Some(w) };
    let chk = f.check(c, d);
    if !chk.is_ok() {
        return fail(format!("not a functor: {}", chk.violations[0]));
    }
    for a in 0..c.n_obj() {
        for b in 0..c.n_obj() {
            let mut hit = vec![false; d.n_arr()];
            for &u in c.hom(a, b) {
                let v = f.arr[u];
                if hit[v] {
                    return fail(format!("not faithful on ({}, {}): arrow {} hit twice", c.objects[a], c.objects[b], d.arrows[v].name));
                }
                hit[v] = true;
            }
            if let Some(&v) = d.hom(f.obj[a], f.obj[b]).iter().find(|&&v| !hit[v]) {
                return fail(format!("not full on ({}, {}): arrow {} not hit", c.objects[a], c.objects[b], d.arrows[v].name));
            }
        }
    }
    for y in 0..d.n_obj() {
        let reached = (0..c.n_obj()).any(|a| {
            let x = f.obj[a];
            d.hom(x, y).iter().any(|&u| d.is_iso(u))
        });
        if !reached {
            return fail(format!("object {} is not isomorphic to any image", d.objects[y]));
        }
    }
    EquivalenceReport { verdict: true, witness: None }
}

/// A functor bijective on objects and arrows.
pub fn is_isomorphism(f: &Functor, c: &FinCat, d: &FinCat) -> bool {
    f.check(c, d).is_ok() && c.n_obj() == d.n_obj() && c.n_arr() == d.n_arr() && f.is_injective()
}

/// Brute-force quasi-inverse: a functor `g` with `gf ≅ 1` and `fg ≅ 1`.
pub fn quasi_inverse_search(f: &Functor, c: &FinCat, d: &FinCat) -> Result<Option<Functor>> {
    for g in all_functors(d, c)? {
        let gf = g.after(f);
        let fg = f.after(&g);
        if has_nat_iso(c, c, &gf, &Functor::identity(c))? && has_nat_iso(d, d, &fg, &Functor::identity(d))? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub fn has_nat_iso(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Result<bool> {
    Ok(find_nat_iso(c, d, f, g)?.is_some())
}

pub fn find_nat_iso(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Result<Option<NatTransf>> {
    Ok(super::enumerate::all_nat_transfs_where(c, d, f, g, |a| d.is_iso(a))?.into_iter().next())
}

fn arrow_signature(c: &FinCat, f: usize) -> (bool, bool, usize, usize) {
    let factorizations = c
        .hom_from(c.src(f))
        .iter()
        .map(|&u| c.hom_from(c.tgt(u)).iter().filter(|&&v| c.compose(v, u) == f).count())
        .sum();
    let endo = c.src(f) == c.tgt(f);
    (c.is_identity(f), c.is_iso(f), factorizations, if endo { 1 } else { 0 })
}

fn object_signature(c: &FinCat, a: usize) -> (usize, usize, usize) {
    let out = c.hom_from(a).len();
    let inn = (0..c.n_arr()).filter(|&f| c.tgt(f) == a).count();
    (out, inn, c.hom(a, a).len())
}

/// Deterministic backtracking search for an isomorphism of categories.
pub fn find_isomorphism(c: &FinCat, d: &FinCat) -> Result<Option<Functor>> {
    if c.n_obj() != d.n_obj() || c.n_arr() != d.n_arr() {
        return Ok(None);
    }
    let osig_c: Vec<_> = (0..c.n_obj()).map(|a| object_signature(c, a)).collect();
    let osig_d: Vec<_> = (0..d.n_obj()).map(|a| object_signature(d, a)).collect();
    let mut s1 = osig_c.clone();
    let mut s2 = osig_d.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(None);
    }
    let asig_c: Vec<_> = (0..c.n_arr()).map(|f| arrow_signature(c, f)).collect();
    let asig_d: Vec<_> = (0..d.n_arr()).map(|f| arrow_signature(d, f)).collect();
    let mut t1 = asig_c.clone();
    let mut t2 = asig_d.clone();
    t1.sort();
    t2.sort();
    if t1 != t2 {
        return Ok(None);
    }
    let mut counter = Counter::new("isomorphism search");
    let mut obj = vec![usize::MAX; c.n_obj()];
    let mut used = vec![false; d.n_obj()];
    let ctx = IsoCtx { c, d, osig_c, osig_d, asig_c, asig_d };
    ctx.objects(0, &mut obj, &mut used, &mut counter)
}

struct IsoCtx<'a> {
    c: &'a FinCat,
    d: &'a FinCat,
    osig_c: Vec<(usize, usize, usize)>,
    osig_d: Vec<(usize, usize, usize)>,
    asig_c: Vec<(bool, bool, usize, usize)>,
    asig_d: Vec<(bool, bool, usize, usize)>,
}

impl IsoCtx<'_> {
    fn objects(&self, i: usize, obj: &mut Vec<usize>, used: &mut Vec<bool>, counter: &mut Counter) -> Result<Option<Functor>> {
        let (c, d) = (self.c, self.d);
        if i == c.n_obj() {
            return self.arrows(obj, counter);
        }
        for y in 0..d.n_obj() {
            if used[y] || self.osig_c[i] != self.osig_d[y] {
                continue;
            }
            counter.tick()?;
            obj[i] = y;
            let ok = (0..=i).all(|j| {
                c.hom(i, j).len() == d.hom(y, obj[j]).len() && c.hom(j, i).len() == d.hom(obj[j], y).len()
            });
            if ok {
                used[y] = true;
                if let Some(f) = self.objects(i + 1, obj, used, counter)? {
                    return Ok(Some(f));
                }
                used[y] = false;
            }
        }
        Ok(None)
    }

    fn arrows(&self, obj: &[usize], counter: &mut Counter) -> Result<Option<Functor>> {
        let (c, d) = (self.c, self.d);
        let order: Vec<usize> = (0..c.n_arr()).filter(|&f| !c.is_identity(f)).collect();
        let mut rank = vec![0usize; c.n_arr()];
        for (k, &f) in order.iter().enumerate() {
            rank[f] = k + 1;
        }
        let mut checks = vec![Vec::new(); order.len() + 1];
        for (g, f, h) in c.composable_pairs() {
            let r = rank[g].max(rank[f]).max(rank[h]);
            if r > 0 {
                checks[r].push((g, f, h));
            }
        }
        let mut arr = vec![usize::MAX; c.n_arr()];
        for a in 0..c.n_obj() {
            arr[c.ids[a]] = d.ids[obj[a]];
        }
        let mut used = vec![false; d.n_arr()];
        for &i in &d.ids {
            used[i] = true;
        }
        Ok(self
            .arrow_rec(0, &order, &checks, obj, &mut arr, &mut used, counter)?
            .map(|arr| Functor { obj: obj.to_vec(), arr }))
    }

    // iterative backtracking; recursion depth would be the arrow count
    #[allow(clippy::too_many_arguments)]
    fn arrow_rec(
        &self,
        k0: usize,
        order: &[usize],
        checks: &[Vec<(usize, usize, usize)>],
        obj: &[usize],
        arr: &mut Vec<usize>,
        used: &mut Vec<bool>,
        counter: &mut Counter,
    ) -> Result<Option<Vec<usize>>> {
        let (c, d) = (self.c, self.d);
        let mut next = vec![0usize; order.len() + 1];
        let mut k = k0;
        loop {
            if k == order.len() {
                return Ok(Some(arr.clone()));
            }
            let f = order[k];
            let cands = d.hom(obj[c.src(f)], obj[c.tgt(f)]);
            let mut advanced = false;
            while next[k] < cands.len() {
                let cand = cands[next[k]];
                next[k] += 1;
                if used[cand] || self.asig_c[f] != self.asig_d[cand] {
                    continue;
                }
                counter.tick()?;
                arr[f] = cand;
                if checks[k + 1].iter().all(|&(g, f2, h)| d.compose(arr[g], arr[f2]) == arr[h]) {
                    used[cand] = true;
                    advanced = true;
                    break;
                }
            }
            if advanced {
                k += 1;
                next[k] = 0;
                continue;
            }
            arr[f] = usize::MAX;
            if k == k0 {
                return Ok(None);
            }
            k -= 1;
            used[arr[order[k]]] = false;
        }
    }
}

/// A skeleton: one representative per isomorphism class, with a retraction
/// functor onto it.
fn skeleton(c: &FinCat) -> (FinCat, Vec<usize>, Functor) {
    let mut rep = vec![usize::MAX; c.n_obj()];
    let mut to_rep = vec![usize::MAX; c.n_obj()];
    let mut reps = Vec::new();
    for a in 0..c.n_obj() {
        if rep[a] != usize::MAX {
            continue;
        }
        reps.push(a);
        for b in 0..c.n_obj() {
            if rep[b] == usize::MAX {
                if let Some(&iso) = c.hom(b, a).iter().find(|&&u| c.is_iso(u)) {
                    rep[b] = a;
                    to_rep[b] = iso;
                }
            }
        }
    }
    let (sk, _) = c.full_subcategory(&reps);
    let pos = |o: usize| reps.iter().position(|&r| r == o).unwrap();
    let mut obj = vec![0; c.n_obj()];
    for a in 0..c.n_obj() {
        obj[a] = pos(rep[a]);
    }
    let arr = (0..c.n_arr())
        .map(|u| {
            let (s, t) = (c.src(u), c.tgt(u));
            let inv = c.inverse(to_rep[s]).unwrap();
            let v = c.compose(to_rep[t], c.compose(u, inv));
            let (ps, pt) = (pos(rep[s]), pos(rep[t]));
            // the same arrow inside the full subcategory
            let name = &c.arrows[v].name;
            sk.hom(ps, pt).iter().copied().find(|&w| &sk.arrows[w].name == name).unwrap()
        })
        .collect();
    (sk, reps, Functor { obj, arr })
}

/// Searches for an equivalence `c → d` by matching skeleta; the returned
/// functor has been checked with `is_equivalence`.
pub fn find_equivalence(c: &FinCat, d: &FinCat) -> Result<Option<Functor>> {
    if let Some(f) = find_isomorphism(c, d)? {
        return Ok(Some(f));
    }
    let (skc, _, rc) = skeleton(c);
    let (skd, repsd, _) = skeleton(d);
    let Some(phi) = find_isomorphism(&skc, &skd)? else {
        return Ok(None);
    };
    let (_, incl) = d.full_subcategory(&repsd);
    let f = incl.after(&phi.after(&rc));
    Ok(is_equivalence(&f, c, d).verdict.then_some(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equivalence_examples() {
        let i = FinCat::iso();
        let t = FinCat::terminal();
        let inc = Functor { obj: vec![0], arr: vec![0] };
        assert!(is_equivalence(&inc, &t, &i).verdict);
        let disc = FinCat::discrete(&["a", "b"]);
        let r = is_equivalence(&inc, &t, &disc);
        assert!(!r.verdict);
        assert!(r.witness.unwrap().contains('b'));
        assert!(is_equivalence(&Functor::identity(&i), &i, &i).verdict);
    }

    #[test]
    fn find_equivalence_between_iso_and_point() {
        let f = find_equivalence(&FinCat::iso(), &FinCat::terminal()).unwrap().unwrap();
        assert!(is_equivalence(&f, &FinCat::iso(), &FinCat::terminal()).verdict);
        let g = find_equivalence(&FinCat::terminal(), &FinCat::iso()).unwrap().unwrap();
        assert!(is_equivalence(&g, &FinCat::terminal(), &FinCat::iso()).verdict);
        assert!(find_equivalence(&FinCat::two(), &FinCat::iso()).unwrap().is_none());
    }

    #[test]
    fn equivalence_agrees_with_quasi_inverse_search() {
        let cats = [FinCat::terminal(), FinCat::two(), FinCat::iso(), FinCat::parallel_pair(), FinCat::discrete(&["a", "b"])];
        for c in &cats {
            for d in &cats {
                for f in all_functors(c, d).unwrap() {
                    let v = is_equivalence(&f, c, d).verdict;
                    let q = quasi_inverse_search(&f, c, d).unwrap().is_some();
                    assert_eq!(v, q);
                }
            }
        }
    }
}
