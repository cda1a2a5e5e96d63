//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use monopath::io::{
    read_csv, read_pgm, read_tables, render_overlay, write_csv, write_tables, OverlaySpec,
    PathDocument,
};
use monopath::oracle::count_paths;
use monopath::{
    brute_force_solve, enumerate_paths, path_cost, solve, strength, windowed_derivative,
    CostMatrix, SolverParams, StartMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

const ORACLE_REL_TOL: f64 = 1e-9;
const SELF_CONSISTENCY_REL_TOL: f64 = 1e-12;
const MU_ZERO_REL_TOL: f64 = 1e-12;
const STRENGTH_ABS_TOL: f64 = 1e-12;
const ORACLE_TIME_BUDGET: Duration = Duration::from_secs(10);
const MIN_ORACLE_INSTANCES: usize = 500;

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> CostMatrix {
    let values = (0..m * n).map(|_| rng.random_range(0.0..=1.0)).collect();
    CostMatrix::new(m, n, values).unwrap()
}

const MODES: [StartMode; 2] = [StartMode::FreeStart, StartMode::EnforcedBottomStart];

struct OracleRun {
    instances: Vec<(CostMatrix, SolverParams)>,
}

fn oracle_instances() -> OracleRun {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f_6e6f);
    let mut instances = Vec::new();
    // 3 windows x 2 betas x 2 mus x 2 modes x 21 = 504 instances.
    for w in [1usize, 2, 5] {
        for beta in [0.0, 7.0] {
            for mu in [0.0, 16.0] {
                for mode in MODES {
                    for _ in 0..21 {
                        let n = rng.random_range(2 * w..=40);
                        let c = random_matrix(&mut rng, 3, n);
                        instances.push((c, SolverParams::new(w, beta, mu, mode)));
                    }
                }
            }
        }
    }
    OracleRun { instances }
}

fn criterion_oracle_equivalence(run: &OracleRun) -> Outcome {
    let started = Instant::now();
    let mut worst_rel = 0.0f64;
    for (k, (c, params)) in run.instances.iter().enumerate() {
        let sol = solve(c, params).map_err(|e| format!("instance {k}: {e}"))?;
        let oracle = brute_force_solve(c, params).map_err(|e| format!("instance {k}: {e}"))?;
        let (dp, bf) = (sol.result.total_cost, oracle.total_cost);
        if !rel_close(dp, bf, ORACLE_REL_TOL) {
            return Err(format!("instance {k}: dp {dp} vs oracle {bf} ({params:?})"));
        }
        if dp != bf {
            worst_rel = worst_rel.max((dp - bf).abs() / dp.abs().max(bf.abs()));
        }
        let recomputed = path_cost(c, &sol.strength, params.mu, &sol.result.path)
            .map_err(|e| format!("instance {k}: {e}"))?;
        let end = *sol.result.path.last().unwrap();
        let q_end = *sol.tables.q.get(end, c.cols());
        if !rel_close(recomputed, q_end, SELF_CONSISTENCY_REL_TOL) {
            return Err(format!("instance {k}: path cost {recomputed} vs Q {q_end}"));
        }
    }
    let elapsed = started.elapsed();
    if run.instances.len() < MIN_ORACLE_INSTANCES {
        return Err(format!("only {} instances", run.instances.len()));
    }
    if elapsed > ORACLE_TIME_BUDGET {
        return Err(format!("took {elapsed:?}, budget {ORACLE_TIME_BUDGET:?}"));
    }
    Ok(format!(
        "{} instances, worst relative gap {worst_rel:.1e}, {elapsed:.2?}",
        run.instances.len()
    ))
}

/// Penalty-free minimum over monotone paths, by direct recursion over rows.
fn plain_min_path(c: &CostMatrix, mode: StartMode) -> f64 {
    fn best_from(c: &CostMatrix, row: usize, col: usize, acc: f64) -> f64 {
        let acc = acc + c.get(row, col);
        if col == c.cols() {
            return acc;
        }
        let stay = best_from(c, row, col + 1, acc);
        if row > 1 {
            stay.min(best_from(c, row - 1, col + 1, acc))
        } else {
            stay
        }
    }
    let m = c.rows();
    let starts: Vec<usize> = match mode {
        StartMode::FreeStart => (1..=m).collect(),
        StartMode::EnforcedBottomStart => vec![m],
    };
    starts
        .into_iter()
        .map(|r| best_from(c, r, 1, 0.0))
        .fold(f64::INFINITY, f64::min)
}

fn criterion_mu_zero() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..100 {
        let w = rng.random_range(1..=3);
        let n = rng.random_range(2 * w..=14);
        let c = random_matrix(&mut rng, 3, n);
        let beta = if k % 2 == 0 { 0.0 } else { 7.0 };
        let mode = MODES[k % 4 / 2];
        let params = SolverParams::new(w, beta, 0.0, mode);
        let dp = solve(&c, &params)
            .map_err(|e| e.to_string())?
            .result
            .total_cost;
        let plain = plain_min_path(&c, mode);
        if !rel_close(dp, plain, MU_ZERO_REL_TOL) {
            return Err(format!("instance {k}: dp {dp} vs plain {plain}"));
        }
    }
    Ok("100 instances".into())
}

fn criterion_strength(run: &OracleRun) -> Outcome {
    let mut checked = 0usize;
    let mut zeros = 0usize;
    for (c, params) in &run.instances {
        let sol = solve(c, params).map_err(|e| e.to_string())?;
        for (&d, &s) in sol
            .derivative
            .as_slice()
            .iter()
            .zip(sol.strength.as_slice())
        {
            if !(0.5..1.0).contains(&s) {
                return Err(format!("S = {s} at D = {d}"));
            }
            if d == 0.0 {
                zeros += 1;
                if s != 0.5 {
                    return Err(format!("S = {s} where D = 0"));
                }
            }
            checked += 1;
        }
    }
    for (v, beta) in [(0.0, 7.0), (0.6, 7.0), (1.0, 0.0)] {
        let c = CostMatrix::new(3, 10, vec![v; 30]).unwrap();
        let sol = solve(&c, &SolverParams::default().with_beta(beta)).map_err(|e| e.to_string())?;
        if sol.strength.as_slice().iter().any(|&s| s != 0.5) {
            return Err(format!("constant {v} matrix: S != 0.5 where D = 0"));
        }
        zeros += 30;
    }
    // D = 1 at column 2 of a [0, 1] row with w = 1.
    let c = CostMatrix::from_rows(&[[0.0, 1.0], [0.0, 1.0]]).unwrap();
    let d = windowed_derivative(&c, 1).map_err(|e| e.to_string())?;
    let s = strength(&d, 7.0).map_err(|e| e.to_string())?;
    let expected = 1.0 / (1.0 + (-7.0f64).exp());
    let frozen = 0.999_088_948_805_599_4;
    let got = *s.get(1, 2);
    if *d.get(1, 2) != 1.0
        || (got - expected).abs() > STRENGTH_ABS_TOL
        || (got - frozen).abs() > STRENGTH_ABS_TOL
    {
        return Err(format!("S(beta=7, D=1) = {got}, expected {expected}"));
    }
    Ok(format!(
        "{checked} entries in [0.5, 1), {zeros} with D = 0, S(7, 1) = {got}"
    ))
}

fn criterion_monotone(run: &OracleRun) -> Outcome {
    for (k, (c, params)) in run.instances.iter().enumerate() {
        let path = solve(c, params).map_err(|e| e.to_string())?.result.path;
        if let Some(j) = path
            .windows(2)
            .position(|w| !(w[0] == w[1] || w[0] == w[1] + 1))
        {
            return Err(format!(
                "instance {k}: step {} -> {} at column {}",
                path[j],
                path[j + 1],
                j + 2
            ));
        }
        if params.start_mode == StartMode::EnforcedBottomStart && path[0] != 3 {
            return Err(format!(
                "instance {k}: bottom start violated, p_1 = {}",
                path[0]
            ));
        }
    }
    Ok(format!("{} paths", run.instances.len()))
}

/// Double loop straight from the definition, replication included.
fn naive_derivative(c: &CostMatrix, w: usize) -> Vec<f64> {
    let (m, n) = c.shape();
    let mut out = vec![0.0; m * n];
    for i in 1..=m {
        for j in 1..=n {
            let jj = j.clamp(w + 1, n - w + 1);
            let mut sum = 0.0;
            for k in 0..w {
                sum += (c.get(i, jj + k) - c.get(i, jj - w + k)).abs();
            }
            out[(i - 1) * n + (j - 1)] = sum / w as f64;
        }
    }
    out
}

fn criterion_derivative() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..100 {
        let w = rng.random_range(1..=6);
        let n = rng.random_range(2 * w..=40);
        let m = rng.random_range(2..=4);
        let c = random_matrix(&mut rng, m, n);
        let d = windowed_derivative(&c, w).map_err(|e| e.to_string())?;
        let naive = naive_derivative(&c, w);
        let same = d
            .as_slice()
            .iter()
            .zip(&naive)
            .all(|(a, b)| a.to_bits() == b.to_bits());
        if !same {
            return Err(format!("instance {k} (m={m}, n={n}, w={w}) differs"));
        }
    }
    for v in [0.0, 0.37, 1.0] {
        let c = CostMatrix::new(3, 12, vec![v; 36]).unwrap();
        let d = windowed_derivative(&c, 3).map_err(|e| e.to_string())?;
        if d.as_slice().iter().any(|&x| x != 0.0) {
            return Err(format!("constant {v} matrix has non-zero derivative"));
        }
    }
    Ok("100 random instances bitwise, constant matrices flat".into())
}

fn criterion_enumeration_count() -> Outcome {
    for n in 1..=20usize {
        let k = (n - 1) as u128;
        let formula = 1 + k + k * k.saturating_sub(1) / 2;
        let paths =
            enumerate_paths(3, n, StartMode::EnforcedBottomStart).map_err(|e| e.to_string())?;
        if paths.len() as u128 != formula
            || count_paths(3, n, StartMode::EnforcedBottomStart) != formula
        {
            return Err(format!("n = {n}: {} paths, formula {formula}", paths.len()));
        }
    }
    let mut listed: Vec<Vec<usize>> = enumerate_paths(3, 3, StartMode::EnforcedBottomStart)
        .unwrap()
        .into_iter()
        .map(|p| p.into_inner())
        .collect();
    listed.sort();
    if listed != [vec![3, 2, 1], vec![3, 2, 2], vec![3, 3, 2], vec![3, 3, 3]] {
        return Err(format!("n = 3 listing {listed:?}"));
    }
    Ok("n = 1..20 match 1 + (n-1) + (n-1)(n-2)/2".into())
}

fn synthetic_pgm(rng: &mut ChaCha8Rng, cols: usize, maxval: u32) -> Vec<u8> {
    let mut data = format!("P5\n{cols} 3\n{maxval}\n").into_bytes();
    for _ in 0..3 * cols {
        let g = rng.random_range(0..=maxval);
        if maxval > 255 {
            data.extend_from_slice(&(g as u16).to_be_bytes());
        } else {
            data.push(g as u8);
        }
    }
    data
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_monopath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn criterion_paper_defaults(dir: &Path) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let input = dir.join("strip.pgm");
    fs::write(&input, synthetic_pgm(&mut rng, 64, 255)).map_err(|e| e.to_string())?;
    let overlay = dir.join("strip.ppm");
    let doc = dir.join("strip.json");
    let o = cli(&[
        "--input",
        input.to_str().unwrap(),
        "--overlay",
        overlay.to_str().unwrap(),
        "--out-path",
        doc.to_str().unwrap(),
    ]);
    if o.status.code() != Some(0) {
        return Err(format!(
            "exit {:?}: {}",
            o.status.code(),
            String::from_utf8_lossy(&o.stderr)
        ));
    }
    let parsed: PathDocument = serde_json::from_slice(&fs::read(&doc).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let p = parsed.params;
    if (p.w, p.beta, p.mu, p.start_mode) != (5, 7.0, 16.0, StartMode::FreeStart) {
        return Err(format!("defaults were {p:?}"));
    }
    let img = image::open(&overlay)
        .map_err(|e| format!("overlay unreadable: {e}"))?
        .to_rgb8();
    if img.dimensions() != (64, 3) {
        return Err(format!("overlay is {:?}", img.dimensions()));
    }
    for (j, &row) in parsed.path.iter().enumerate() {
        if img.get_pixel(j as u32, row as u32 - 1).0 != [255, 0, 0] {
            return Err(format!("column {} not marked", j + 1));
        }
    }
    Ok("w=5, beta=7, mu=16; overlay is a valid 64x3 P6".into())
}

fn criterion_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0i64;
    for maxval in [255u32, 1000, 65535] {
        let data = synthetic_pgm(&mut rng, 50, maxval);
        let c = read_pgm(data.as_slice()).map_err(|e| e.to_string())?;
        let mut ppm = Vec::new();
        let path = vec![3; 50];
        let spec = OverlaySpec {
            color: None,
            ..OverlaySpec::new(&c, &path)
        };
        render_overlay(&spec, &mut ppm).map_err(|e| e.to_string())?;
        let img = image::load_from_memory(&ppm)
            .map_err(|e| e.to_string())?
            .to_rgb8();
        let header_len = format!("P5\n50 3\n{maxval}\n").len();
        let width = if maxval > 255 { 2 } else { 1 };
        for (k, px) in img.pixels().enumerate() {
            let raw = &data[header_len + k * width..header_len + (k + 1) * width];
            let g = raw.iter().fold(0u32, |acc, &b| (acc << 8) | u32::from(b));
            let source = (f64::from(g) * 255.0 / f64::from(maxval)).round() as i64;
            for ch in px.0 {
                let diff = (i64::from(ch) - source).abs();
                worst = worst.max(diff);
                if diff > 1 {
                    return Err(format!("maxval {maxval}, pixel {k}: {ch} vs {source}"));
                }
            }
        }
    }

    let c = random_matrix(&mut rng, 3, 25);
    let mut buf = Vec::new();
    write_csv(&c, &mut buf).map_err(|e| e.to_string())?;
    let back = read_csv(buf.as_slice()).map_err(|e| e.to_string())?;
    if back
        .grid()
        .as_slice()
        .iter()
        .zip(c.grid().as_slice())
        .any(|(a, b)| a.to_bits() != b.to_bits())
    {
        return Err("CSV round trip not bitwise".into());
    }

    for mode in MODES {
        let sol =
            solve(&c, &SolverParams::default().with_start_mode(mode)).map_err(|e| e.to_string())?;
        let mut buf = Vec::new();
        write_tables(&sol.tables, &sol.derivative, &sol.strength, &mut buf)
            .map_err(|e| e.to_string())?;
        let dump = read_tables(buf.as_slice()).map_err(|e| e.to_string())?;
        let bits =
            |g: &monopath::Grid<f64>| g.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
        if bits(&dump.q) != bits(&sol.tables.q)
            || bits(&dump.d) != bits(&sol.derivative)
            || bits(&dump.s) != bits(&sol.strength)
            || dump.p != sol.tables.p
        {
            return Err(format!("table dump not bitwise ({mode:?})"));
        }
    }
    Ok(format!(
        "gray levels within {worst} level(s); CSV and tables bitwise"
    ))
}

fn criterion_determinism(dir: &Path) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let input = dir.join("det.pgm");
    fs::write(&input, synthetic_pgm(&mut rng, 30, 255)).map_err(|e| e.to_string())?;
    let mut runs = Vec::new();
    for tag in ["a", "b"] {
        let files: Vec<_> = ["json", "ppm", "csv"]
            .iter()
            .map(|ext| dir.join(format!("det_{tag}.{ext}")))
            .collect();
        let o = cli(&[
            "--input",
            input.to_str().unwrap(),
            "--verbose",
            "--verify",
            "--out-path",
            files[0].to_str().unwrap(),
            "--overlay",
            files[1].to_str().unwrap(),
            "--tables",
            files[2].to_str().unwrap(),
        ]);
        if o.status.code() != Some(0) {
            return Err(format!("exit {:?}", o.status.code()));
        }
        let contents: Vec<Vec<u8>> = files.iter().map(|f| fs::read(f).unwrap()).collect();
        runs.push((o.stdout, contents));
    }
    if runs[0] != runs[1] {
        return Err("outputs differ between identical runs".into());
    }
    Ok("stdout, path document, overlay and tables byte-identical".into())
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let run = oracle_instances();
    let criteria: Vec<(&str, Check<'_>)> = vec![
        (
            "1 oracle equivalence",
            Box::new(|| criterion_oracle_equivalence(&run)),
        ),
        ("2 mu=0 degeneration", Box::new(criterion_mu_zero)),
        (
            "3 strength range and values",
            Box::new(|| criterion_strength(&run)),
        ),
        (
            "4 monotone path invariant",
            Box::new(|| criterion_monotone(&run)),
        ),
        ("5 derivative correctness", Box::new(criterion_derivative)),
        ("6 enumeration count", Box::new(criterion_enumeration_count)),
        (
            "7 default parameters and overlay",
            Box::new(|| criterion_paper_defaults(dir.path())),
        ),
        ("8 format round-trips", Box::new(criterion_round_trips)),
        (
            "9 determinism",
            Box::new(|| criterion_determinism(dir.path())),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
