//! Sweeps every standard catalog case through the exact decision procedure
//! and prints the verdict bucket with timing — a quick smoke run over the
//! whole built-in corpus.

use std::time::Instant;
use vsrep::catalog::{standard_cases, CatalogItem};
use vsrep::heart::heart;
use vsrep::normalg::{very_simple_exact, very_simple_randomized};

fn main() {
    for case in standard_cases() {
        let item = case.build().expect("catalog case builds");
        let rep = match &item {
            CatalogItem::Group(g) => heart(g).expect("heart builds").rep().clone(),
            CatalogItem::Rep(r) => r.clone(),
        };
        let t0 = Instant::now();
        let exact = very_simple_exact(&rep).expect("exact decision");
        let exact_ms = t0.elapsed().as_millis();
        let t1 = Instant::now();
        let random = very_simple_randomized(&rep, 0, 64);
        let random_ms = t1.elapsed().as_millis();
        let agree = exact.is_very_simple() == random.is_very_simple();
        println!(
            "{:22} dim {:3}  exact: {:28} {:6} ms   randomized: {:28} {:6} ms   agree: {}  expected: {}",
            case.label(),
            rep.dim(),
            exact.bucket(),
            exact_ms,
            random.bucket(),
            random_ms,
            agree,
            case.expected_bucket,
        );
    }
}
