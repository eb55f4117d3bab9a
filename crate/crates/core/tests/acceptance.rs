//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the binary
//! exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hmeasure::loss::{expected_min_loss, CostBreakpoints};
use hmeasure::special::regularized_incomplete_beta;
use hmeasure::{
    auc, h_measure, BetaShape, ConvexHull, EmpiricalCdfs, PriorPair, RocCurve, ScoreDataset,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

type Check = fn() -> Result<(), String>;

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("AC1 default weight is Beta(pi1+1, pi0+1)", ac1_default_shape),
        ("AC2 mode placement on a 1e5 grid", ac2_mode_placement),
        ("AC3 label-swap symmetry law", ac3_symmetry),
        ("AC4 desk H value on D1", ac4_desk_h),
        ("AC5 breakpoint loss vs Simpson oracle", ac5_oracle_equivalence),
        ("AC6 AUC midrank vs trapezoid", ac6_auc_equivalence),
        ("AC7 degenerate anchors", ac7_degenerate),
        ("AC8 incomplete beta vs adaptive quadrature", ac8_incomplete_beta),
        ("AC9 imbalance cases", ac9_imbalance),
        ("AC10 1e6-row evaluation under 5 s", ac10_performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  {name}  ({secs:.2} s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({secs:.2} s): {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn d1() -> ScoreDataset {
    ScoreDataset::new(vec![0.1, 0.3], vec![0.2, 0.4]).unwrap()
}

fn ac1_default_shape() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let p = PriorPair::from_pi1(rng.gen_range(1e-5..1.0 - 1e-5)).unwrap();
        let from_mode = BetaShape::from_mode(p.pi1(), 3.0).unwrap();
        let expected = BetaShape::new(p.pi1() + 1.0, p.pi0() + 1.0).unwrap();
        ensure(from_mode == expected, || format!("{from_mode:?} != {expected:?}"))?;
        ensure(BetaShape::default_from_priors(&p) == expected, || format!("default for {p:?}"))?;
    }
    within(start, Duration::from_secs(1))
}

fn ac2_mode_placement() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    const GRID: usize = 100_000;
    for _ in 0..100 {
        let c = rng.gen_range(0.001..0.999);
        let k = rng.gen_range(3.0..50.0);
        let s = BetaShape::from_mode(c, k).unwrap();
        let (mut best_c, mut best_y) = (0.0, f64::NEG_INFINITY);
        for i in 0..=GRID {
            let x = i as f64 / GRID as f64;
            let y = s.density(x);
            if y > best_y {
                (best_c, best_y) = (x, y);
            }
        }
        ensure((best_c - c).abs() <= 2e-5, || format!("c={c} k={k}: argmax {best_c}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn ac3_symmetry() -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        // dyadic modes keep 1 − (1 − c) == c exact
        let c = rng.gen_range(1..(1u64 << 40)) as f64 / (1u64 << 40) as f64;
        let k = rng.gen_range(3.0..100.0);
        let lhs = BetaShape::from_mode(1.0 - c, k).unwrap();
        let rhs = BetaShape::from_mode(c, k).unwrap().reflect();
        ensure(lhs == rhs, || format!("c={c} k={k}: {lhs:?} vs {rhs:?}"))?;
    }
    let p = PriorPair::from_pi1(0.1).unwrap();
    let swapped = BetaShape::legacy_asymmetric(&p.swapped(), 2.0).unwrap();
    let reflected = BetaShape::legacy_asymmetric(&p, 2.0).unwrap().reflect();
    ensure(swapped != reflected, || "legacy family unexpectedly symmetric".into())?;
    ensure(
        BetaShape::default_from_priors(&p.swapped()) == BetaShape::default_from_priors(&p).reflect(),
        || "default family not symmetric".into(),
    )?;
    within(start, Duration::from_secs(1))
}

fn ac4_desk_h() -> Result<(), String> {
    let start = Instant::now();
    let r = h_measure(&d1(), &PriorPair::new(0.5, 0.5).unwrap(), &BetaShape::uniform()).unwrap();
    ensure((r.h - 0.5).abs() <= 1e-12, || format!("h = {}", r.h))?;
    within(start, Duration::from_secs(1))
}

/// Random datasets with ties: sizes 5..=200, scores on a coarse grid.
fn random_datasets(seed: u64) -> Vec<(ScoreDataset, PriorPair, BetaShape)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(5..=200);
            let shift = rng.gen_range(0.0..2.0);
            let normal = Normal::new(0.0, 1.0).unwrap();
            let mut s0 = Vec::new();
            let mut s1 = Vec::new();
            for i in 0..n {
                let is_one = if i == 0 { true } else if i == 1 { false } else { rng.gen_bool(0.4) };
                let z: f64 = normal.sample(&mut rng) + if is_one { shift } else { 0.0 };
                let score = (z * 4.0).round() / 4.0;
                if is_one {
                    s1.push(score);
                } else {
                    s0.push(score);
                }
            }
            let d = ScoreDataset::new(s0, s1).unwrap();
            let p = PriorPair::from_pi1(rng.gen_range(0.02..0.98)).unwrap();
            let w = BetaShape::from_mode(rng.gen_range(0.01..0.99), rng.gen_range(3.0..50.0)).unwrap();
            (d, p, w)
        })
        .collect()
}

fn simpson(f: impl Fn(f64) -> f64, panels: usize) -> f64 {
    let h = 1.0 / (2 * panels) as f64;
    let mut acc = f(0.0) + f(1.0);
    for i in 1..2 * panels {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
    }
    acc * h / 3.0
}

fn ac5_oracle_equivalence() -> Result<(), String> {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (idx, (d, p, w)) in random_datasets(5).into_iter().enumerate() {
        let roc = RocCurve::new(&EmpiricalCdfs::new(&d));
        let hull = ConvexHull::new(&roc);
        let closed = expected_min_loss(&CostBreakpoints::new(&hull, &p), &p, &w).unwrap();
        let lines: Vec<(f64, f64)> = roc
            .points()
            .iter()
            .map(|q| (p.pi0() * (1.0 - q.f0), p.pi1() * q.f1))
            .collect();
        let brute = |c: f64| {
            let m = lines.iter().map(|&(a, b)| c * a + (1.0 - c) * b).fold(f64::INFINITY, f64::min);
            m * w.density(c)
        };
        let quad = simpson(brute, 100_000);
        let err = (closed - quad).abs();
        worst = worst.max(err);
        ensure(err <= 1e-8, || format!("dataset {idx}: closed {closed} vs quadrature {quad}"))?;
    }
    println!("      max |closed - quadrature| = {worst:.3e}");
    within(start, Duration::from_secs(60))
}

fn ac6_auc_equivalence() -> Result<(), String> {
    for (idx, (d, _, _)) in random_datasets(5).into_iter().enumerate() {
        let mut count = 0.0;
        for &a in d.scores0() {
            for &b in d.scores1() {
                count += if a < b { 1.0 } else if a == b { 0.5 } else { 0.0 };
            }
        }
        let midrank = count / (d.n0() * d.n1()) as f64;
        let trapezoid = RocCurve::new(&EmpiricalCdfs::new(&d)).trapezoid_area();
        ensure((midrank - trapezoid).abs() <= 1e-12, || format!("dataset {idx}: {midrank} vs {trapezoid}"))?;
        ensure((auc(&d) - midrank).abs() <= 1e-12, || format!("dataset {idx}: library auc"))?;
    }
    ensure(auc(&d1()) == 0.75, || format!("D1 auc = {}", auc(&d1())))
}

fn ac7_degenerate() -> Result<(), String> {
    let check = |d: &ScoreDataset, h: f64, a: f64, ks: f64, mer: Option<f64>| -> Result<(), String> {
        for spec in [
            hmeasure::WeightSpec::DefaultPriors,
            hmeasure::WeightSpec::LegacyBeta22,
            hmeasure::WeightSpec::ModeK { c_tilde: 0.2, k: 7.0 },
        ] {
            let r = hmeasure::evaluate(d, None, &spec, None).map_err(|e| e.to_string())?;
            let close = |x: f64, y: f64| (x - y).abs() <= 1e-12;
            ensure(close(r.h, h) && close(r.auc, a) && close(r.ks, ks), || format!("{spec:?}: {r:?}"))?;
            if let Some(m) = mer {
                ensure(close(r.mer, m), || format!("mer {}", r.mer))?;
            }
        }
        Ok(())
    };
    let perfect = ScoreDataset::new(vec![0.1, 0.2, 0.3, 0.35], vec![0.5, 0.9, 1.2]).unwrap();
    check(&perfect, 1.0, 1.0, 1.0, Some(0.0))?;
    let same = ScoreDataset::new(vec![0.1, 0.2, 0.2, 0.7], vec![0.1, 0.2, 0.2, 0.7]).unwrap();
    check(&same, 0.0, 0.5, 0.0, None)
}

/// Adaptive Gauss-Kronrod (7/15) quadrature, recursive bisection.
fn gauss_kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    const XK: [f64; 8] = [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0,
    ];
    const WK: [f64; 8] = [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ];
    const WG: [f64; 4] = [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ];
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    let fc = f(mid);
    let mut kronrod = WK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let (x1, x2) = (mid - half * XK[j], mid + half * XK[j]);
        let (f1, f2) = (f(x1), f(x2));
        kronrod += WK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let (kronrod, gauss) = (kronrod * half, gauss * half);
    if (kronrod - gauss).abs() <= tol || depth == 0 {
        kronrod
    } else {
        gauss_kronrod(f, a, mid, tol / 2.0, depth - 1) + gauss_kronrod(f, mid, b, tol / 2.0, depth - 1)
    }
}

fn ac8_incomplete_beta() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let x: f64 = rng.gen_range(0.0..1.0);
        let a: f64 = rng.gen_range(1.0..50.0);
        let b: f64 = rng.gen_range(1.0..50.0);
        // unnormalized kernel scaled to peak 1 at the mode
        let m = (a - 1.0) / (a + b - 2.0);
        let log_peak = |c: f64| {
            let l = |e: f64, v: f64| if e == 0.0 { 0.0 } else { e * v.ln() };
            l(a - 1.0, c) + l(b - 1.0, 1.0 - c)
        };
        let peak = log_peak(m);
        let kernel = move |c: f64| if c <= 0.0 || c >= 1.0 { 0.0 } else { (log_peak(c) - peak).exp() };
        let total = gauss_kronrod(&kernel, 0.0, m, 1e-15, 60) + gauss_kronrod(&kernel, m, 1.0, 1e-15, 60);
        let part = if x <= m {
            gauss_kronrod(&kernel, 0.0, x, 1e-15, 60)
        } else {
            total - gauss_kronrod(&kernel, x, 1.0, 1e-15, 60)
        };
        let oracle = part / total;
        let got = regularized_incomplete_beta(x, a, b).map_err(|e| e.to_string())?;
        let err = (got - oracle).abs();
        worst = worst.max(err);
        ensure(err <= 1e-10, || format!("I_{x}({a},{b}) = {got}, quadrature {oracle}"))?;
    }
    println!("      max |I - quadrature| = {worst:.3e}");
    Ok(())
}

fn ac9_imbalance() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cases = [(0.024, 976, 24, 1.024, 1.976), (0.00032, 99_968, 32, 1.00032, 1.99968)];
    for (pi1, n0, n1, alpha, beta) in cases {
        let p = PriorPair::from_pi1(pi1).unwrap();
        let w = BetaShape::default_from_priors(&p);
        ensure((w.alpha() - alpha).abs() <= 1e-15 && (w.beta() - beta).abs() <= 1e-15, || format!("{w:?}"))?;
        let mode = w.mode().map_err(|e| e.to_string())?;
        ensure((mode - pi1).abs() <= 1e-12, || format!("mode {mode} vs {pi1}"))?;

        let normal = Normal::new(0.0, 1.0).unwrap();
        let s0: Vec<f64> = (0..n0).map(|_| normal.sample(&mut rng)).collect();
        let s1: Vec<f64> = (0..n1).map(|_| normal.sample(&mut rng) + 1.5).collect();
        let d = ScoreDataset::new(s0, s1).unwrap();
        let emp = PriorPair::empirical(&d);
        ensure(emp.pi1() == pi1, || format!("empirical pi1 {}", emp.pi1()))?;
        let h = h_measure(&d, &emp, &BetaShape::default_from_priors(&emp)).unwrap().h;
        ensure((0.0..=1.0).contains(&h), || format!("h = {h}"))?;
        let swapped = emp.swapped();
        let hs = h_measure(&d.label_swapped(), &swapped, &BetaShape::default_from_priors(&swapped))
            .unwrap()
            .h;
        ensure((h - hs).abs() <= 1e-10, || format!("h {h} vs swapped {hs}"))?;
        println!("      pi1 = {pi1}: h = {h:.6}");
    }
    Ok(())
}

fn ac10_performance() -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("million.csv");
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut text = String::with_capacity(24 * 1_000_000);
    text.push_str("id,label,score\n");
    for i in 0..1_000_000u32 {
        let label = rng.gen_bool(0.3) as u8;
        let score: f64 = rng.gen::<f64>() + 0.4 * label as f64;
        text.push_str(&format!("{i},{label},{score:.6}\n"));
    }
    std::fs::write(&path, text).map_err(|e| e.to_string())?;

    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hmeasure"))
        .args(["eval", "--threshold", "0.7"])
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report["n0"].as_u64().unwrap() + report["n1"].as_u64().unwrap() == 1_000_000, || {
        "row count".into()
    })?;
    println!("      CLI wall time {:.2} s", took.as_secs_f64());
    within(start, Duration::from_secs(5))
}
