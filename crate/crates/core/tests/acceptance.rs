//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{near_circulant, random_ordering};
use oriented_fas::generators::{
    family_t, family_t_star, gen_d14, gen_d24, gen_d7, gen_d8, gen_random_regular5, gen_random_with_arcs,
    gen_triangles, regularize,
};
use oriented_fas::reduce::{apply, detect, lift};
use oriented_fas::{
    backward_count, cycle_family_bound, exact_fas, solve_bounded5, solve_regular5, verify_fas,
    OrientedMultigraph, ReductionRecord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const D8_OPTIMUM: usize = 7;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

/// Δ ≤ 5 instance with density drawn from the seed.
fn random_instance(n: usize, seed: u64) -> OrientedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let target = rng.gen_range(0..=5 * n / 2);
    gen_random_with_arcs(n, 5, target, seed)
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut arcs = 0;
    for seed in 0..1000u64 {
        let n = 5 + (seed as usize % 56);
        let g = random_instance(n, seed);
        let s = solve_bounded5(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let valid = verify_fas(&g, &s.fas).map_err(|e| e.to_string())?;
        ensure(valid && s.fas.size() <= g.arc_count() / 3, || {
            format!(
                "seed {seed}: size {} m {} valid {valid}",
                s.fas.size(),
                g.arc_count()
            )
        })?;
        arcs += g.arc_count();
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("1000 instances, {arcs} arcs, {:.2?}", start.elapsed()))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut gap = 0;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 13);
        let g = random_instance(n, 10_000 + seed);
        let s = solve_bounded5(&g).map_err(|e| e.to_string())?;
        let (opt, _) = exact_fas(&g, 24).map_err(|e| e.to_string())?;
        ensure(s.fas.size() >= opt && opt <= g.arc_count() / 3, || {
            format!(
                "seed {seed}: solver {} exact {opt} m {}",
                s.fas.size(),
                g.arc_count()
            )
        })?;
        gap += s.fas.size() - opt;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "200 instances, total excess over optimum {gap}, {:.2?}",
        start.elapsed()
    ))
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let g = gen_d7();
    let (opt, _) = exact_fas(&g, 24).map_err(|e| e.to_string())?;
    let family = cycle_family_bound(&g, &family_t()).map_err(|e| e.to_string())?;
    let solver = solve_bounded5(&g).map_err(|e| e.to_string())?.fas.size();
    ensure(
        opt == 5 && family == 5 && solver == 5 && g.arc_count() / 3 == 5,
        || format!("exact {opt} family {family} solver {solver}"),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok("exact 5, family bound 5, solver 5".into())
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let g = gen_d8();
    let family = cycle_family_bound(&g, &family_t_star()).map_err(|e| e.to_string())?;
    let (opt, _) = exact_fas(&g, 24).map_err(|e| e.to_string())?;
    ensure(family == 7 && opt >= 7 && opt == D8_OPTIMUM, || {
        format!("family {family} exact {opt}")
    })?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("family bound 7, exact {opt}"))
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn ac5() -> Outcome {
    // resets the peak RSS counter so earlier criteria do not count
    let _ = std::fs::write("/proc/self/clear_refs", "5");
    let start = Instant::now();
    let g = gen_d24();
    let (opt, ord) = exact_fas(&g, 24).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(g.arc_count() == 72 && opt >= 25, || {
        format!("exact {opt} m {}", g.arc_count())
    })?;
    ensure(backward_count(&g, &ord).ok() == Some(opt), || {
        "ordering disagrees".into()
    })?;
    within(start, Duration::from_secs(300))?;
    let peak = peak_rss_kb().ok_or("peak RSS unavailable")?;
    ensure(peak < 64 * 1024, || format!("peak RSS {peak} kB"))?;
    Ok(format!("exact {opt}, {elapsed:.2?}, peak RSS {} kB", peak))
}

fn ac6() -> Outcome {
    let start = Instant::now();
    let g = gen_d14();
    let (opt, _) = exact_fas(&g, 24).map_err(|e| e.to_string())?;
    ensure(
        g.is_regular(5) && g.is_strongly_connected() && opt >= 10 && 3 * opt > 2 * 14,
        || {
            format!(
                "regular {} strong {} exact {opt}",
                g.is_regular(5),
                g.is_strongly_connected()
            )
        },
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("degree-5, strongly connected, exact {opt}"))
}

fn ac7() -> Outcome {
    let start = Instant::now();
    let mut worst = 0usize;
    for seed in 0..200u64 {
        let n = 10 + 2 * (seed as usize % 112);
        let g = gen_random_regular5(n, seed).map_err(|e| e.to_string())?;
        let s = solve_regular5(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let m = g.arc_count();
        let size = s.fas.size();
        let valid = verify_fas(&g, &s.fas).map_err(|e| e.to_string())?;
        ensure(
            valid
                && size <= 24 * n / 29
                && size <= (m - s.independent.len()) / 3
                && s.independent.len() >= n.div_ceil(58)
                && s.aux_max_degree <= 57,
            || {
                format!(
                    "seed {seed}: n {n} size {size} |S| {} Δ(H) {}",
                    s.independent.len(),
                    s.aux_max_degree
                )
            },
        )?;
        worst = worst.max(s.aux_max_degree);
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "200 instances, max Δ(H) {worst}, {:.2?}",
        start.elapsed()
    ))
}

fn check_record(pre: &OrientedMultigraph, r: &ReductionRecord, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let post = apply(pre, r).map_err(|e| e.to_string())?;
    let removed = pre.arc_count() as isize - post.arc_count() as isize;
    ensure(removed == r.net_removed() && r.budget_ok(), || {
        format!("{}: removed {removed} for k = {}", r.kind, r.k)
    })?;
    ensure(post.max_degree() <= 5, || {
        format!("{}: degree {}", r.kind, post.max_degree())
    })?;
    for (u, v, _) in post.arcs() {
        ensure(!post.has_arc(v, u), || format!("{}: 2-cycle {u} {v}", r.kind))?;
    }
    for _ in 0..5 {
        let ord = random_ordering(&post, rng);
        let before = backward_count(&post, &ord).map_err(|e| e.to_string())?;
        let after =
            backward_count(pre, &lift(r, &ord).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(after <= before + r.k, || {
            format!("{}: lift added {}", r.kind, after - before)
        })?;
    }
    Ok(())
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut count = 0;
    let mut seed = 0u64;
    while count < 10_000 {
        let n = 5 + (seed as usize % 50);
        // detected reductions on random instances
        let mut g = random_instance(n, 20_000 + seed);
        while let Some(r) = detect(&g) {
            check_record(&g, &r, &mut rng)?;
            g = apply(&g, &r).map_err(|e| e.to_string())?;
            count += 1;
        }
        // full solver traces, which include composite steps
        let g = near_circulant(n, seed);
        let s = solve_bounded5(&g).map_err(|e| e.to_string())?;
        let states = s.trace.replay(&g).map_err(|e| e.to_string())?;
        for (pre, r) in states.iter().zip(&s.trace.records) {
            check_record(pre, r, &mut rng)?;
            count += 1;
        }
        seed += 1;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{count} reductions, {:.2?}", start.elapsed()))
}

fn ac9() -> Outcome {
    for t in [1, 10, 100] {
        let g = gen_triangles(t);
        let size = solve_bounded5(&g).map_err(|e| e.to_string())?.fas.size();
        ensure(size == t && g.arc_count() == 3 * t, || {
            format!("t {t}: size {size}")
        })?;
    }
    Ok("sizes 1, 10, 100".into())
}

fn ac10() -> Outcome {
    let mut compared = 0;
    for seed in 0..50u64 {
        let n = 4 + (seed as usize % 9);
        let g = gen_random_with_arcs(n, 4, 2 * n, 30_000 + seed);
        let h = regularize(&g, 4).map_err(|e| e.to_string())?;
        ensure(h.is_regular(4), || format!("seed {seed}: not degree-4"))?;
        if let (Ok((a, _)), Ok((b, _))) = (exact_fas(&g, 24), exact_fas(&h, 24)) {
            ensure(b >= 2 * a, || format!("seed {seed}: {b} < 2 * {a}"))?;
            compared += 1;
        }
    }
    ensure(compared > 0, || "no instance fit the cap".into())?;
    Ok(format!("50 degree-4 results, {compared} compared exactly"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {name}: {detail}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
