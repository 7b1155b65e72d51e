//! Writes the machine-generated part of the fixture corpus.
//!
//! Usage: `cargo run -p sigmacat-cli --example export_corpus -- <dir>`

use std::path::Path;

use serde::Serialize;
use sigmacat::fincat::FinCat;
use sigmacat::fixtures;
use sigmacat::transforms::CatDiagram;
use sigmacat::two_cat::{Fin2Cat, TwoFunctor, WideSub};
use sigmacat_cli::doc::{diagram_to_doc, two_cat_to_doc, two_functor_to_doc};

fn write<T: Serialize>(dir: &Path, name: &str, doc: &T) {
    let text = serde_json::to_string_pretty(doc).expect("serializable") + "\n";
    std::fs::write(dir.join(name), text).expect("writable corpus directory");
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    let dir = Path::new(&dir);
    std::fs::create_dir_all(dir).expect("corpus directory");

    let diamond = fixtures::diamond();
    write(dir, "diamond.json", &two_cat_to_doc(&diamond, Some(&WideSub::all(&diamond))));
    let pp = fixtures::parallel_pair();
    write(dir, "parallel_pair.json", &two_cat_to_doc(&pp, Some(&WideSub::all(&pp))));
    let dp = fixtures::discrete_pair();
    write(dir, "discrete_pair.json", &two_cat_to_doc(&dp, Some(&WideSub::all(&dp))));
    let fc = fixtures::free_cell();
    write(dir, "free_cell.json", &two_cat_to_doc(&fc, None));
    write(dir, "two_2cat.json", &two_cat_to_doc(&fixtures::two(), None));

    write(dir, "representable.json", &diagram_to_doc(&CatDiagram::representable(&fixtures::two(), 0)));
    write(dir, "pick_zero.json", &diagram_to_doc(&fixtures::pick_zero()));
    write(dir, "const_two_on_two.json", &diagram_to_doc(&CatDiagram::constant(&fixtures::two(), &FinCat::two())));
    write(dir, "const_point_on_two_op.json", &diagram_to_doc(&CatDiagram::constant(&fixtures::two().op_dual(), &FinCat::terminal())));
    write(dir, "const_point_on_discrete_pair.json", &diagram_to_doc(&CatDiagram::constant(&dp, &FinCat::terminal())));
    write(dir, "integers.json", &diagram_to_doc(&CatDiagram::constant(&pp, &FinCat::terminal())));
    write(dir, "rep_top_diamond.json", &diagram_to_doc(&CatDiagram::representable(&diamond, 3)));
    write(dir, "rep_bot_diamond.json", &diagram_to_doc(&CatDiagram::representable(&diamond, 0)));
    write(dir, "const_empty_on_diamond.json", &diagram_to_doc(&CatDiagram::constant(&diamond, &FinCat::empty())));
    write(dir, "const_point_on_diamond.json", &diagram_to_doc(&CatDiagram::constant(&diamond, &FinCat::terminal())));
    for (name, p) in fixtures::pseudo_diagrams() {
        write(dir, &format!("{name}.json"), &diagram_to_doc(&p));
    }

    // the inclusion of the top element into the diamond
    let pt = Fin2Cat::terminal();
    let top = TwoFunctor { obj: vec![3], homs: vec![sigmacat::fincat::Functor { obj: vec![diamond.id1(3)], arr: vec![diamond.hom(3, 3).id(diamond.id1(3))] }] };
    write(dir, "top_in_diamond.json", &two_functor_to_doc(&pt, &diamond, &top));
    write(dir, "identity_on_diamond.json", &two_functor_to_doc(&diamond, &diamond, &TwoFunctor::identity(&diamond)));
}
