use std::time::Instant;
use stopred_core::codes::golay24;
use stopred_core::search::{greedy_pcm_search, SearchConfig};

#[test]
#[ignore = "timing probe"]
fn probe_golay_search() {
    let code = golay24();
    for seed in 1..=4u64 {
        let cfg = SearchConfig {
            seed,
            ..SearchConfig::default()
        };
        let start = Instant::now();
        match greedy_pcm_search(&code, 8, &cfg) {
            Ok(result) => println!(
                "seed {seed}: rows={} s={} iterations={} in {:?}",
                result.rows,
                result.stopping_distance,
                result.iterations,
                start.elapsed()
            ),
            Err(e) => println!("seed {seed}: FAILED {e} in {:?}", start.elapsed()),
        }
    }
}
