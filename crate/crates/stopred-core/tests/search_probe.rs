use std::time::Instant;
use stopred_core::designs::{
    single_exclusion_number_exact, turan_number_exact, SEARCH_NODE_BUDGET,
};

#[test]
#[ignore = "timing probe"]
fn probe_hard_instances() {
    for (v, k, t, expect) in [
        (7usize, 3usize, 2usize, 9usize),
        (8, 3, 2, 12),
        (9, 3, 2, 16),
        (6, 4, 3, 6),
        (7, 4, 3, 12),
        (8, 4, 3, 20),
    ] {
        let start = Instant::now();
        let got = turan_number_exact(v, k, t, SEARCH_NODE_BUDGET).unwrap();
        println!(
            "T({v},{k},{t}) = {} (expect {expect}) in {:?}",
            got.count,
            start.elapsed()
        );
        assert_eq!(got.count, expect);
    }
    for (v, r, expect) in [
        (6usize, 2usize, 6usize),
        (7, 2, 9),
        (8, 2, 12),
        (4, 2, 3),
        (6, 3, 6),
        (7, 3, 12),
        (8, 3, 20),
    ] {
        let start = Instant::now();
        let got = single_exclusion_number_exact(v, r, SEARCH_NODE_BUDGET).unwrap();
        println!(
            "Gamma({v},{r}) = {} (expect {expect}) in {:?}",
            got.count,
            start.elapsed()
        );
        assert_eq!(got.count, expect);
    }
}
