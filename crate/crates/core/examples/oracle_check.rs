//! Cross-check the dynamic program against exhaustive enumeration on random
//! instances.
//!
//! ```bash
//! cargo run -p monopath --example oracle_check -- 200
//! ```

use monopath::oracle::count_paths;
use monopath::{brute_force_solve, solve, CostMatrix, SolverParams, StartMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> monopath::Result<()> {
    let trials: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0f64;
    let mut paths = 0u128;
    for _ in 0..trials {
        let m = rng.random_range(2..=4);
        let w = rng.random_range(1..=3);
        let n = rng.random_range(2 * w..=16);
        let values = (0..m * n).map(|_| rng.random::<f64>()).collect();
        let c = CostMatrix::new(m, n, values)?;
        let mode = if rng.random() {
            StartMode::FreeStart
        } else {
            StartMode::EnforcedBottomStart
        };
        let params = SolverParams::new(
            w,
            rng.random_range(0.0..10.0),
            rng.random_range(0.0..20.0),
            mode,
        );

        let dp = solve(&c, &params)?.result.total_cost;
        let bf = brute_force_solve(&c, &params)?.total_cost;
        let gap = (dp - bf).abs() / dp.abs().max(bf.abs()).max(f64::MIN_POSITIVE);
        worst = worst.max(gap);
        paths += count_paths(m, n, mode);
        assert!(gap <= 1e-9, "disagreement: dp {dp} vs enumeration {bf}");
    }
    println!("{trials} instances, {paths} paths enumerated, worst relative gap {worst:.2e}");
    Ok(())
}
