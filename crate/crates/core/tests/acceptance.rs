//! Acceptance suite: one PASS/FAIL line per criterion, each with a time limit.

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use sturmian_core::cf::ConvergentTable;
use sturmian_core::exact::{Alpha, AlphaSpec, CirclePoint};
use sturmian_core::partition::{
    all_coarsenings, coarsening, disconnection_check, random_coarsening,
    rotation_symmetric_partition, symmetric_counterexample_check, theorem1_witness, theorem2_bound,
    verify_theorem2, LabeledPartition, Limits,
};
use sturmian_core::subshift::{
    example1_demo, ignores_first_letter, injectivity_at, is_minimal, minimal_injective_n,
    prop5_report, LanguageModel, LocalRule, MinimalInjective, SearchCaps,
};
use sturmian_core::towers::{
    build_zwords, iterate_codes, three_lengths_towers, tower_code, verify_name_formulas,
    verify_per_structure,
};
use sturmian_core::word::{sym, Word};
use sturmian_core::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    format!("error: {err}")
}

fn period_12() -> Alpha {
    Alpha::new(AlphaSpec::Cf {
        prefix: vec![],
        period: vec![1, 2],
    })
    .expect("valid periodic expansion")
}

fn two_lengths() -> Outcome {
    let mut arcs = 0;
    for (name, alpha) in [("golden", Alpha::golden()), ("silver", Alpha::silver())] {
        let p = LabeledPartition::sturmian(&alpha);
        let t = ConvergentTable::new(&alpha, 10).map_err(e)?;
        for k in 1..=10 {
            let n = t.r(k).map_err(e)? as usize - 1;
            let limits = Limits {
                max_power: 10_000,
                ..Limits::default()
            };
            let pn = p.refine_compressed(n, limits).map_err(e)?;
            let mut lengths = pn.arc_lengths();
            lengths.sort_by(|x, y| alpha.cmp_values(x, y));
            lengths.dedup();
            let mut expected = vec![
                t.eta(k).map_err(e)?.clone(),
                t.eta(k - 1).map_err(e)?.clone(),
            ];
            expected.sort_by(|x, y| alpha.cmp_values(x, y));
            ensure(lengths == expected, || {
                format!("{name} k={k}: lengths differ")
            })?;
            let pair = three_lengths_towers(&alpha, k).map_err(e)?;
            ensure(pair.matches_partition(&alpha, &pn), || {
                format!("{name} k={k}: tower levels differ from arcs")
            })?;
            arcs += pn.arc_count();
        }
    }
    Ok(format!("golden and silver, k=1..10, {arcs} arcs compared"))
}

fn three_lengths() -> Outcome {
    let g = Alpha::golden();
    let p = LabeledPartition::sturmian(&g);
    for n in 1..=60 {
        let pn = p.refine(n).map_err(e)?;
        ensure(pn.arc_count() == n + 1, || {
            format!("n={n}: {} arcs", pn.arc_count())
        })?;
        let mut lengths = pn.arc_lengths();
        lengths.sort_by(|x, y| g.cmp_values(x, y));
        lengths.dedup();
        ensure(lengths.len() <= 3, || {
            format!("n={n}: {} lengths", lengths.len())
        })?;
    }
    Ok("golden, n=1..60".into())
}

fn theorem1_exhaustive() -> Outcome {
    let mut checked = 0;
    for (name, alpha) in [("golden", Alpha::golden()), ("silver", Alpha::silver())] {
        for n in 1..=4 {
            for r in all_coarsenings(&alpha, n).map_err(e)? {
                if r.is_trivial() {
                    continue;
                }
                let bound = theorem2_bound(&r).map_err(e)?;
                let w = theorem1_witness(&r, bound.big_k).map_err(e)?;
                ensure(w.k <= bound.big_k, || {
                    format!("{name} n={n}: k={} > K", w.k)
                })?;
                ensure(w.ell_bound_holds() && (w.ell as usize) < n, || {
                    format!("{name} n={n}: ell={} too large", w.ell)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} coarsenings"))
}

fn theorem2_random() -> Outcome {
    let mut worst_ratio = 0.0f64;
    for (name, alpha) in [
        ("golden", Alpha::golden()),
        ("silver", Alpha::silver()),
        ("[1,2]", period_12()),
    ] {
        for trial in 0..100u64 {
            let n = 1 + (trial % 12) as usize;
            let labels = 2 + (trial as usize / 12) % n.min(3);
            let r = random_coarsening(&alpha, n, labels, trial).map_err(e)?;
            let rep = verify_theorem2(&r, Limits::default()).map_err(e)?;
            ensure(rep.holds, || format!("{name} trial {trial}: R^K differs"))?;
            let (first, _, _) = rep
                .first_sturmian
                .ok_or_else(|| format!("{name} trial {trial}: no witness up to K"))?;
            ensure(first <= rep.bound.big_k, || {
                format!("{name} trial {trial}: k > K")
            })?;
            worst_ratio = worst_ratio.max(first as f64 / rep.bound.big_k as f64);
        }
    }
    Ok(format!("300 trials, max k/K = {worst_ratio:.3}"))
}

/// Checks the code recurrence from level `from` up to level 8, and the `Per`
/// structure of `z` at every level where the boundary conditions hold.
fn recurrence_from(
    name: &str,
    r: &LabeledPartition,
    from: usize,
    t: &ConvergentTable,
) -> Result<usize, String> {
    let g = r.alpha();
    let codes = |k: usize| -> Result<(Word, Word), String> {
        let pair = three_lengths_towers(g, k).map_err(e)?;
        Ok((
            tower_code(r, &pair.left).map_err(e)?,
            tower_code(r, &pair.right).map_err(e)?,
        ))
    };
    let c = |i| t.c(i).map_err(e);
    let (mut u, mut v) = codes(from)?;
    let mut per_checked = 0;
    for k in from..=8 {
        if k > from {
            let next = iterate_codes(&u, &v, c(k)?);
            ensure(next == codes(k)?, || {
                format!("{name}: recurrence fails at k={k}")
            })?;
            (u, v) = next;
        }
        let zw = build_zwords(&u, &v, c(k + 1)?, c(k + 2)?, c(k + 3)?);
        match verify_per_structure(&u, &v, &zw.z, zw.w_prime.len()) {
            Ok(ok) => {
                ensure(ok, || format!("{name} k={k}: Per structure fails"))?;
                per_checked += 1;
            }
            Err(Error::BoundaryConditions(_)) => {}
            Err(err) => return Err(e(err)),
        }
    }
    Ok(per_checked)
}

fn code_recurrence() -> Outcome {
    let g = Alpha::golden();
    let t = ConvergentTable::new(&g, 12).map_err(e)?;
    let p = LabeledPartition::sturmian(&g);
    let aba = coarsening(&g, 2, &[0, 1, 0]).map_err(e)?;
    let mut per_checked = recurrence_from("P", &p, 2, &t)?;
    per_checked += recurrence_from("A/B/A", &aba, 2, &t)?;
    // Neither partition above has both 0 and r_k − 1 as cut-indices for
    // k ≥ 2, so the boundary conditions are exercised on two-arc partitions
    // cut exactly there.
    for k in 2..=8 {
        let top = t.r(k).map_err(e)? as i64 - 1;
        let r = LabeledPartition::from_cut_labels(
            &g,
            &[
                (CirclePoint::orbit(0), sym("A")),
                (CirclePoint::orbit(top), sym("B")),
            ],
        )
        .map_err(e)?;
        let checked = recurrence_from(&format!("cuts 0, {top}"), &r, k, &t)?;
        ensure(checked >= 1, || format!("k={k}: boundary conditions fail"))?;
        per_checked += checked;
    }
    Ok(format!(
        "k=2..8 for nine partitions, {per_checked} Per checks"
    ))
}

fn name_formulas() -> Outcome {
    let g = Alpha::golden();
    let t = ConvergentTable::new(&g, 8).map_err(e)?;
    let mut checked = 0;
    let mut levels = 0;
    for k in 1..=4 {
        let n = t.r(k).map_err(e)? as u64 - 1;
        for r in all_coarsenings(&g, n as usize).map_err(e)? {
            let Ok(profile) = r.cut_index_profile() else {
                continue;
            };
            if profile.indices.first() != Some(&0) || profile.indices.last() != Some(&n) {
                continue;
            }
            let rep = verify_name_formulas(&r, k, usize::MAX).map_err(e)?;
            ensure(rep.passed() && !rep.truncated, || format!("k={k}: {rep:?}"))?;
            checked += 1;
            levels += rep.abc_checked + rep.e_checked + rep.d_checked;
        }
    }
    Ok(format!("{checked} partitions, {levels} levels"))
}

fn complexity() -> Outcome {
    let model = LanguageModel::Sturmian(Alpha::golden());
    for m in 1..=40 {
        let n = model.language(m, SearchCaps::default()).map_err(e)?.len();
        ensure(n == m + 1, || format!("m={m}: {n} words"))?;
    }
    Ok("golden, m=1..40".into())
}

fn example1() -> Outcome {
    let rep = example1_demo(12, 14, SearchCaps::default()).map_err(e)?;
    ensure(rep.passed(), || format!("{rep:?}"))?;
    Ok("collisions for n=1..12, prefixes determined up to length 14".into())
}

fn prop5_exhaustive() -> Outcome {
    let g = Alpha::golden();
    let model = LanguageModel::Sturmian(g);
    let caps = SearchCaps::default();
    let words = model.language(2, caps).map_err(e)?;
    let outs = ["a", "b", "c"];
    let mut eligible = 0;
    let mut injective = 0;
    for code in 0..27usize {
        let entries: Vec<(Word, _)> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (model.to_word(w), sym(outs[code / 3usize.pow(i as u32) % 3])))
            .collect();
        let rule = LocalRule::new(model.clone(), 2, &entries).map_err(e)?;
        if !is_minimal(&rule) || ignores_first_letter(&rule) {
            continue;
        }
        eligible += 1;
        let rep = prop5_report(&rule, caps).map_err(e)?;
        ensure(rep.all_agree(), || format!("table {code}: {rep:?}"))?;
        if !rule.is_constant() {
            match minimal_injective_n(&rule, caps).map_err(e)? {
                MinimalInjective::Found {
                    n_min: Some(n),
                    n_bound,
                } if n <= n_bound => {
                    ensure(
                        injectivity_at(&rule, n, caps).map_err(e)?.is_injective(),
                        || format!("table {code}: not injective at {n}"),
                    )?;
                    injective += 1;
                }
                other => return Err(format!("table {code}: {other:?}")),
            }
        }
    }
    ensure(eligible > 0, || "no eligible rules".into())?;
    Ok(format!(
        "27 tables, {eligible} eligible, {injective} injective"
    ))
}

fn symmetric() -> Outcome {
    let g = Alpha::golden();
    let half = symmetric_counterexample_check(&g, 30).map_err(e)?;
    ensure(half.all_disconnected(), || {
        format!("connected at {:?}", half.connected_at)
    })?;
    let third = rotation_symmetric_partition(&g, 3, &[sym("X"), sym("Y")]).map_err(e)?;
    let rep = disconnection_check(&third, 30).map_err(e)?;
    ensure(rep.all_disconnected(), || {
        format!("1/3 variant connected at {:?}", rep.connected_at)
    })?;
    Ok("golden, n=1..30, 1/2 and 1/3 symmetric".into())
}

/// `⌊α·10^digits⌋` from the quadratic form.
fn alpha_fixed(spec: &AlphaSpec, digits: u32) -> BigInt {
    let AlphaSpec::Quadratic { p, q, d, r } = *spec else {
        unreachable!("presets are quadratic")
    };
    let scale = BigInt::from(10u32).pow(digits);
    let root = (BigInt::from(d) * &scale * &scale).sqrt();
    let num = BigInt::from(p) * &scale + BigInt::from(q) * root;
    num / BigInt::from(r)
}

fn exact_oracle() -> Outcome {
    const DIGITS: u32 = 100;
    let one = BigInt::from(10u32).pow(DIGITS);
    for (name, alpha) in [("golden", Alpha::golden()), ("silver", Alpha::silver())] {
        let a = alpha_fixed(alpha.spec(), DIGITS);
        ensure(!a.is_zero() && a < one, || {
            format!("{name}: bad fixed-point value")
        })?;
        // ⟨i⟩ = {−iα}; the truncation error is below 1001 units.
        let decimal: Vec<BigInt> = (0..=1000i64)
            .map(|i| {
                let x = (-BigInt::from(i) * &a) % &one;
                if x < BigInt::zero() {
                    x + &one
                } else {
                    x
                }
            })
            .collect();
        let mut by_decimal: Vec<usize> = (0..=1000).collect();
        by_decimal.sort_by(|&i, &j| decimal[i].cmp(&decimal[j]));
        let slack = BigInt::from(2002) + BigInt::one();
        for w in by_decimal.windows(2) {
            ensure(&decimal[w[1]] - &decimal[w[0]] > slack, || {
                format!("{name}: decimal values too close")
            })?;
        }
        let points: Vec<CirclePoint> = (0..=1000).map(CirclePoint::orbit).collect();
        let mut exact: Vec<usize> = (0..=1000).collect();
        exact.sort_by(|&i, &j| alpha.compare(&points[i], &points[j]));
        ensure(exact == by_decimal, || format!("{name}: orderings differ"))?;
        let distinct = exact
            .windows(2)
            .all(|w| alpha.compare(&points[w[0]], &points[w[1]]) == Ordering::Less);
        ensure(distinct, || format!("{name}: repeated orbit point"))?;
    }
    Ok("golden and silver, i=0..1000, 100 digits".into())
}

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("two-lengths structure", 5, two_lengths),
        ("three lengths", 5, three_lengths),
        (
            "first refinement theorem, exhaustive",
            60,
            theorem1_exhaustive,
        ),
        ("refinement bound, randomized", 600, theorem2_random),
        ("code recurrence", 10, code_recurrence),
        ("name formulas", 60, name_formulas),
        ("Sturmian complexity", 5, complexity),
        ("non-injective local rule", 60, example1),
        ("injectivity conditions, exhaustive", 60, prop5_exhaustive),
        ("symmetric counterexample", 10, symmetric),
        ("exact arithmetic oracle", 5, exact_oracle),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; exceeded {limit} s"))
            }
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
