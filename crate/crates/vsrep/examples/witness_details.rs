//! Prints the full witness sweep for a few structurally rich cases, to see
//! every distinct proper-closure diagnosis the exact procedure can reach.

use vsrep::catalog::build;
use vsrep::heart::heart;
use vsrep::normalg::{very_simple_exact_all, Diagnosis};

fn describe(d: &Diagnosis) -> String {
    match d {
        Diagnosis::Induced { r, blocks, subalgebra } => format!(
            "induced: r={r}, block dims {:?}, subalgebra dim {}",
            blocks.iter().map(|b| b.dim()).collect::<Vec<_>>(),
            subalgebra.dim()
        ),
        Diagnosis::TensorSplit { d1, d2, subalgebra, .. } => {
            format!("tensor_split: {d1}x{d2}, subalgebra dim {}", subalgebra.dim())
        }
        Diagnosis::TwistedMultiplication { ext_degree, chi, surjective, subalgebra, .. } => {
            format!(
                "twisted: ext_degree={ext_degree}, chi={chi:?}, surjective={surjective}, dim {}",
                subalgebra.dim()
            )
        }
        other => other.bucket().to_string(),
    }
}

fn main() {
    let tensor = build("tensor_2x2", &[]).unwrap().into_rep().unwrap();
    let (primary, all) = very_simple_exact_all(&tensor, 0).unwrap();
    println!("tensor_2x2 primary: {}", describe(&primary));
    for d in &all {
        println!("  witness: {}", describe(d));
    }

    let monomial = build("monomial_d4_gf3", &[]).unwrap().into_rep().unwrap();
    let (primary, all) = very_simple_exact_all(&monomial, 0).unwrap();
    println!("monomial_d4_gf3 primary: {}", describe(&primary));
    for d in &all {
        println!("  witness: {}", describe(d));
    }

    let agl = build("agl1", &[9]).unwrap().into_group().unwrap();
    let h = heart(&agl).unwrap();
    let (primary, all) = very_simple_exact_all(h.rep(), 0).unwrap();
    println!("agl1(9) heart primary: {}", describe(&primary));
    for d in &all {
        println!("  witness: {}", describe(d));
    }

    let wreath = build("wreath_2x2", &[]).unwrap().into_rep().unwrap();
    let (primary, all) = very_simple_exact_all(&wreath, 0).unwrap();
    println!("wreath_2x2 primary: {}", describe(&primary));
    for d in &all {
        println!("  witness: {}", describe(d));
    }

    let gl = build("gl2f2_natural", &[]).unwrap().into_rep().unwrap();
    let (primary, all) = very_simple_exact_all(&gl, 0).unwrap();
    println!("gl2f2_natural primary: {}", describe(&primary));
    for d in &all {
        println!("  witness: {}", describe(d));
    }
}
