//! Regenerates the pinned fixture files from the exhaustive searches.
//!
//! Run explicitly with:
//!
//! ```text
//! cargo test -p oblique-core --test derive_fixtures --release -- --ignored --nocapture
//! ```
//!
//! The routine test suite never runs this; the CLI `regen-fixtures` command
//! performs the same derivation and diffs instead of writing.

use std::fs;
use std::path::Path;
use std::time::Instant;

use oblique_core::io::{serialize_bipartite, serialize_graph};
use oblique_core::search::{enumerate_dvo, search_semi_dvo, SearchOptions};

#[test]
#[ignore = "writes fixture files; run once when regenerating"]
fn derive_and_write_fixtures() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let opts = SearchOptions::default();

    let t = Instant::now();
    let dvo8 = enumerate_dvo(8, &opts).expect("order 8 is supported");
    println!(
        "enumerate_dvo(8): {} classes in {:?}",
        dvo8.len(),
        t.elapsed()
    );
    assert!(!dvo8.is_empty());
    fs::write(dir.join("base8.edges"), serialize_graph(&dvo8[0])).unwrap();

    let t = Instant::now();
    let semi12 = search_semi_dvo(3, &opts).expect("k = 3 is supported");
    println!(
        "search_semi_dvo(3): {} graphs in {:?}",
        semi12.len(),
        t.elapsed()
    );
    assert!(!semi12.is_empty());
    fs::write(dir.join("semi12.edges"), serialize_bipartite(&semi12[0])).unwrap();

    let t = Instant::now();
    let semi16 = search_semi_dvo(4, &opts).expect("k = 4 is supported");
    println!(
        "search_semi_dvo(4): {} graphs in {:?}",
        semi16.len(),
        t.elapsed()
    );
    assert!(!semi16.is_empty());
    fs::write(dir.join("semi16.edges"), serialize_bipartite(&semi16[0])).unwrap();
}
