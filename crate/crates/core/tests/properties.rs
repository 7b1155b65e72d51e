//! Invariants over random small preorders and markings, each against a
//! brute-force oracle that does not go through the library's searches.

use proptest::prelude::*;

use sigmacat::filteredness::{check_sigma_cofiltered, check_sigma_filtered, filtered_via_cones};
use sigmacat::fincat::{localize, FinCat, Status};
use sigmacat::flatness::{check_flat, representable, yoneda_check, Verdict};
use sigmacat::transforms::{hom_eps, CatDiagram, Direction, Flavor};
use sigmacat::two_cat::{Fin2Cat, Marked2Cat, WideSub};

const NAMES: [&str; 4] = ["p", "q", "r", "s"];

/// A preorder on up to four elements: the reflexive-transitive closure of
/// a random relation (cycles allowed).
fn preorder() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let mut r: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * n + j]).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if r[i][k] && r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
            r
        })
    })
}

fn cat_of(r: &[Vec<bool>]) -> FinCat {
    FinCat::from_poset(&NAMES[..r.len()], |a, b| r[a][b])
}

/// A marking: a random set of non-identity arrows, closed by the library.
fn marking(c: &Fin2Cat, keep: &[bool]) -> WideSub {
    let names: Vec<String> = c
        .cells1()
        .into_iter()
        .filter(|&(a, b, f)| !(a == b && f == c.id1(a)))
        .enumerate()
        .filter(|(i, _)| keep[i % keep.len()])
        .map(|(_, (a, b, f))| c.cell1_name(a, b, f).to_string())
        .collect();
    WideSub::generated_by(c, &names).unwrap()
}

/// Σ-reachability: `a ≤ b` arrows in Σ.
fn sigma_leq(c: &Fin2Cat, s: &WideSub, a: usize, b: usize) -> bool {
    c.hom(a, b).n_obj() == 1 && s.contains(c, a, b, 0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn preorders_validate_and_duals_are_involutions(r in preorder()) {
        let c = Fin2Cat::locally_discrete(&cat_of(&r));
        prop_assert!(c.validate().is_ok());
        prop_assert_eq!(c.op_dual().op_dual(), c.clone());
        prop_assert_eq!(c.co_dual().co_dual(), c.clone());
        prop_assert_eq!(c.op_dual().co_dual(), c.co_dual().op_dual());
    }

    #[test]
    fn filteredness_on_preorders(r in preorder(), keep in proptest::collection::vec(any::<bool>(), 1..8)) {
        let c = Fin2Cat::locally_discrete(&cat_of(&r));
        let s = marking(&c, &keep);
        let n = c.n_obj();
        // thin: only σF0 can fail
        let want = (0..n).all(|a| (0..n).all(|b| (0..n).any(|e| sigma_leq(&c, &s, a, e) && sigma_leq(&c, &s, b, e))));
        let m = Marked2Cat::new(c.clone(), s.clone()).unwrap();
        prop_assert_eq!(check_sigma_filtered(&m).verdict, want);
        prop_assert_eq!(filtered_via_cones(&m).unwrap().0, want);
        let co = (0..n).all(|a| (0..n).all(|b| (0..n).any(|e| sigma_leq(&c, &s, e, a) && sigma_leq(&c, &s, e, b))));
        prop_assert_eq!(check_sigma_cofiltered(&m).verdict, co);
    }

    #[test]
    fn constant_point_is_flat_iff_lower_bounds_exist(r in preorder()) {
        let c = Fin2Cat::locally_discrete(&cat_of(&r));
        let n = c.n_obj();
        let want = (0..n).all(|a| (0..n).all(|b| (0..n).any(|e| r[e][a] && r[e][b])));
        let v = check_flat(&CatDiagram::constant(&c, &FinCat::terminal())).unwrap().verdict;
        prop_assert_eq!(v == Verdict::Flat, want);
    }

    #[test]
    fn representables_are_flat_and_yoneda_holds(r in preorder(), x in 0usize..4, y in 0usize..4) {
        let c = Fin2Cat::locally_discrete(&cat_of(&r));
        let (x, y) = (x % c.n_obj(), y % c.n_obj());
        let p = representable(&c, x).unwrap();
        prop_assert_eq!(check_flat(&p).unwrap().verdict, Verdict::Flat);
        prop_assert!(yoneda_check(&p, y).unwrap().1.verdict);
        prop_assert!(yoneda_check(&CatDiagram::constant(&c, &FinCat::two()), y).unwrap().1.verdict);
    }

    #[test]
    fn localization_hom_sets_follow_zigzags(r in preorder(), keep in proptest::collection::vec(any::<bool>(), 1..8)) {
        let c = cat_of(&r);
        let c2 = Fin2Cat::locally_discrete(&c);
        let s = marking(&c2, &keep);
        let n = c.n_obj();
        let sigma: Vec<usize> = (0..c.n_arr()).filter(|&f| sigma_leq(&c2, &s, c.src(f), c.tgt(f))).collect();
        let loc = localize(&c, &sigma, 12).unwrap();
        // a preorder localized stays a preorder, so the rewriting terminates
        prop_assert_eq!(loc.status(), Status::Finite);
        let l = loc.pres.cat().unwrap();
        // reach[a][b]: a zigzag of forward arrows and backward Σ-arrows
        let mut reach: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| r[a][b] || sigma_leq(&c2, &s, b, a)).collect()).collect();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(!l.hom(a, b).is_empty(), reach[a][b]);
            }
        }
        let f = loc.functor(&c).unwrap();
        for &g in &sigma {
            prop_assert!(l.is_iso(f.arr[g]));
        }
    }

    #[test]
    fn flavors_collapse_at_the_extremes(r in preorder(), k in 0usize..3) {
        let c = Fin2Cat::locally_discrete(&cat_of(&r));
        let q = [FinCat::two(), FinCat::iso(), FinCat::parallel_pair()][k].clone();
        let p = CatDiagram::constant(&c, &FinCat::terminal());
        let q = CatDiagram::constant(&c, &q);
        let objs = |fl: &Flavor| hom_eps(&p, &q, fl, Direction::Lax).unwrap().objects;
        prop_assert_eq!(objs(&Flavor::Sigma(WideSub::all(&c))), objs(&Flavor::Pseudo));
        prop_assert_eq!(objs(&Flavor::Sigma(WideSub::identities(&c))), objs(&Flavor::Lax));
        let strict = objs(&Flavor::Strict);
        let lax = objs(&Flavor::Lax);
        prop_assert!(strict.iter().all(|t| lax.contains(t)));
    }
}
