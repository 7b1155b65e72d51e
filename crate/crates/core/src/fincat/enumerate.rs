use std::collections::HashMap;

use super::{Arrow, FinCat, Functor, NatTransf};
use crate::budget::Counter;
use crate::error::Result;

/// All functors `c → d`, in lexicographic order of their tables.
pub fn all_functors(c: &FinCat, d: &FinCat) -> Result<Vec<Functor>> {
    let mut counter = Counter::new("functors");
    let n = c.n_arr();
    // arrows that are not identities, in index order
    let free: Vec<usize> = (0..n).filter(|&f| !c.is_identity(f)).collect();
    let mut rank = vec![0usize; n];
    for (i, &f) in free.iter().enumerate() {
        rank[f] = i + 1;
    }
    // each composition constraint is checked once its last free arrow is set
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); free.len() + 1];
    for (g, f, h) in c.composable_pairs() {
        let r = rank[g].max(rank[f]).max(rank[h]);
        if r > 0 {
            checks[r].push((g, f, h));
        }
    }
    let mut out = Vec::new();
    let mut obj = vec![0usize; c.n_obj()];
    choose_objects(c, d, 0, &mut obj, &free, &checks, &mut out, &mut counter)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn choose_objects(
    c: &FinCat,
    d: &FinCat,
    i: usize,
    obj: &mut Vec<usize>,
    free: &[usize],
    checks: &[Vec<(usize, usize, usize)>],
    out: &mut Vec<Functor>,
    counter: &mut Counter,
) -> Result<()> {
    if i == c.n_obj() {
        let mut arr = vec![usize::MAX; c.n_arr()];
        for o in 0..c.n_obj() {
            arr[c.ids[o]] = d.ids[obj[o]];
        }
        return choose_arrows(c, d, 0, obj, &mut arr, free, checks, out, counter);
    }
    for y in 0..d.n_obj() {
        counter.tick()?;
        obj[i] = y;
        // every arrow between already placed objects needs somewhere to go
        let ok = c.arrows.iter().all(|a| {
            a.src > i || a.tgt > i || !d.hom(obj[a.src], obj[a.tgt]).is_empty()
        });
        if ok {
            choose_objects(c, d, i + 1, obj, free, checks, out, counter)?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn choose_arrows(
    c: &FinCat,
    d: &FinCat,
    k: usize,
    obj: &[usize],
    arr: &mut Vec<usize>,
    free: &[usize],
    checks: &[Vec<(usize, usize, usize)>],
    out: &mut Vec<Functor>,
    counter: &mut Counter,
) -> Result<()> {
    if k == free.len() {
        out.push(Functor { obj: obj.to_vec(), arr: arr.clone() });
        return Ok(());
    }
    let f = free[k];
    let Arrow { src, tgt, .. } = c.arrows[f];
    for &cand in d.hom(obj[src], obj[tgt]) {
        counter.tick()?;
        arr[f] = cand;
        let ok = checks[k + 1].iter().all(|&(g, f2, h)| d.compose(arr[g], arr[f2]) == arr[h]);
        if ok {
            choose_arrows(c, d, k + 1, obj, arr, free, checks, out, counter)?;
        }
    }
    arr[f] = usize::MAX;
    Ok(())
}

/// All natural transformations `f ⇒ g` between functors `c → d`.
pub fn all_nat_transfs(c: &FinCat, d: &FinCat, f: &Functor, g: &Functor) -> Result<Vec<NatTransf>> {
    all_nat_transfs_where(c, d, f, g, |_| true)
}

/// As `all_nat_transfs`, keeping only components accepted by `keep`.
pub fn all_nat_transfs_where(
    c: &FinCat,
    d: &FinCat,
    f: &Functor,
    g: &Functor,
    keep: impl Fn(usize) -> bool,
) -> Result<Vec<NatTransf>> {
    let mut counter = Counter::new("natural transformations");
    let no = c.n_obj();
    let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); no];
    for (i, a) in c.arrows.iter().enumerate() {
        by_max[a.src.max(a.tgt)].push(i);
    }
    let cands: Vec<Vec<usize>> = (0..no)
        .map(|x| d.hom(f.obj[x], g.obj[x]).iter().copied().filter(|&a| keep(a)).collect())
        .collect();
    let mut out = Vec::new();
    let mut comp = vec![0usize; no];
    fn rec(
        x: usize,
        c: &FinCat,
        d: &FinCat,
        f: &Functor,
        g: &Functor,
        cands: &[Vec<usize>],
        by_max: &[Vec<usize>],
        comp: &mut Vec<usize>,
        out: &mut Vec<NatTransf>,
        counter: &mut Counter,
    ) -> Result<()> {
        if x == c.n_obj() {
            out.push(NatTransf { comp: comp.clone() });
            return Ok(());
        }
        for &a in &cands[x] {
            counter.tick()?;
            comp[x] = a;
            let ok = by_max[x].iter().all(|&u| {
                let Arrow { src, tgt, .. } = c.arrows[u];
                d.compose(g.arr[u], comp[src]) == d.compose(comp[tgt], f.arr[u])
            });
            if ok {
                rec(x + 1, c, d, f, g, cands, by_max, comp, out, counter)?;
            }
        }
        Ok(())
    }
    rec(0, c, d, f, g, &cands, &by_max, &mut comp, &mut out, &mut counter)?;
    Ok(out)
}

/// The functor category `Cat(c, d)` together with the enumerated data.
#[derive(Clone, Debug)]
pub struct FunctorCat {
    pub cat: FinCat,
    pub functors: Vec<Functor>,
    /// `(source functor, target functor, components)` per arrow.
    pub trans: Vec<(usize, usize, NatTransf)>,
    fidx: HashMap<Functor, usize>,
    tidx: HashMap<(usize, usize, NatTransf), usize>,
}

impl FunctorCat {
    pub fn functor_index(&self, f: &Functor) -> Option<usize> {
        self.fidx.get(f).copied()
    }

    pub fn trans_index(&self, s: usize, t: usize, n: &NatTransf) -> Option<usize> {
        self.tidx.get(&(s, t, n.clone())).copied()
    }
}

pub fn functor_category(c: &FinCat, d: &FinCat) -> Result<FunctorCat> {
    let functors = all_functors(c, d)?;
    let mut counter = Counter::new("functor category");
    let fidx: HashMap<Functor, usize> = functors.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let mut trans = Vec::new();
    let mut ids = vec![0; functors.len()];
    for (i, fi) in functors.iter().enumerate() {
        for (j, fj) in functors.iter().enumerate() {
            for t in all_nat_transfs(c, d, fi, fj)? {
                counter.tick()?;
                if i == j && t == NatTransf::identity(fi, d) {
                    ids[i] = trans.len();
                }
                trans.push((i, j, t));
            }
        }
    }
    // the composition table is dense
    Counter::new("functor category composition table").add(trans.len().saturating_mul(trans.len()))?;
    let tidx: HashMap<(usize, usize, NatTransf), usize> =
        trans.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    let objects = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let mut per_pair: HashMap<(usize, usize), usize> = HashMap::new();
    let arrows = trans
        .iter()
        .map(|(s, t, _)| {
            let k = per_pair.entry((*s, *t)).or_insert(0);
            *k += 1;
            Arrow { name: format!("F{s}>F{t}.{}", *k - 1), src: *s, tgt: *t }
        })
        .collect();
    let cat = FinCat::from_fn(objects, arrows, ids, |g, f| {
        let (s, _, ref a) = trans[f];
        let (_, t, ref b) = trans[g];
        tidx[&(s, t, b.vcomp(a, d))]
    });
    Ok(FunctorCat { cat, functors, trans, fidx, tidx })
}
