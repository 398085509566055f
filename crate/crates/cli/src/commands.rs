use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use sturmian_core::cf::ConvergentTable;
use sturmian_core::exact::{Alpha, QAlpha, Rational};
use sturmian_core::partition::{
    disconnection_check, random_coarsening, rotation_symmetric_partition, symmetric_partition,
    theorem1_witness, theorem2_bound, verify_theorem2, LabeledPartition, Limits, Theorem2Bound,
};
use sturmian_core::subshift::{
    example1_demo, ignores_first_letter, injectivity_at, is_minimal, minimal_injective_n, minimize,
    prop5_report, rule_to_partition, Injectivity, LanguageModel, LocalRule, MinimalInjective,
    SearchCaps,
};
use sturmian_core::towers::{
    build_zwords, per_set, three_lengths_towers, tower_code, verify_name_formulas,
    verify_per_structure, DEFAULT_LEVEL_CAP,
};
use sturmian_core::word::{sym, word_to_string, Word};
use sturmian_core::Error;

use crate::args::{
    Command, DemoCommand, ExperimentCommand, Format, GlobalArgs, PartitionCommand, SbcCommand,
    TowersCommand,
};
use crate::error::CliError;
use crate::formats::{alpha_json, parse_alpha_flag, read_json, AlphaJson, PartitionJson, RuleJson};
use crate::render::{render_towers_ascii, TowerView};

/// Text to print, and whether every check in it succeeded.
pub struct Outcome {
    pub output: String,
    pub verified: bool,
}

struct Context {
    alpha: Option<Alpha>,
    format: Option<Format>,
    seed: u64,
    limits: Limits,
    caps: SearchCaps,
}

impl Context {
    fn alpha(&self) -> Alpha {
        self.alpha.clone().unwrap_or_else(Alpha::golden)
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn partition(&self, path: &Path) -> Result<LabeledPartition, CliError> {
        read_json::<PartitionJson>(path)?.to_partition(self.alpha.as_ref())
    }

    fn rule(&self, path: &Path) -> Result<LocalRule, CliError> {
        read_json::<RuleJson>(path)?.to_rule(self.alpha.as_ref(), self.caps)
    }
}

pub fn run(global: &GlobalArgs, command: &Command) -> Result<Outcome, CliError> {
    let limits = Limits {
        max_power: global.max_power as usize,
        max_cuts: global.max_cuts as usize,
    };
    let ctx = Context {
        alpha: global.alpha.as_deref().map(parse_alpha_flag).transpose()?,
        format: global.format,
        seed: global.seed,
        limits,
        caps: SearchCaps {
            max_words: global.max_words as usize,
            limits,
        },
    };
    match command {
        Command::Cf { depth } => cf(&ctx, *depth as usize),
        Command::Partition(PartitionCommand::Refine { file, n }) => refine(&ctx, file, *n),
        Command::Partition(PartitionCommand::VerifyThm1 { file }) => verify_thm1(&ctx, file),
        Command::Partition(PartitionCommand::VerifyThm2 { file }) => verify_thm2(&ctx, file),
        Command::Towers(TowersCommand::Show { k, partition }) => {
            towers_show(&ctx, *k, partition.as_deref())
        }
        Command::Towers(TowersCommand::Codes { k, partition }) => towers_codes(&ctx, *k, partition),
        Command::Sbc(SbcCommand::Analyze { file, n_max }) => sbc_analyze(&ctx, file, *n_max),
        Command::Sbc(SbcCommand::MinimalN { file }) => sbc_minimal_n(&ctx, file),
        Command::Demo(DemoCommand::Example1 { n_max, prefix_len }) => {
            demo_example1(&ctx, *n_max, *prefix_len)
        }
        Command::Demo(DemoCommand::Symmetric { max_n }) => demo_symmetric(&ctx, *max_n),
        Command::Experiment(ExperimentCommand::Random { trials, n, labels }) => {
            experiment_random(&ctx, *trials, *n, *labels)
        }
    }
}

fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// One `key<TAB>value` line per field, nested values as compact JSON.
fn key_value_tsv<T: Serialize>(report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut out = String::new();
    if let Value::Object(map) = value {
        for (k, v) in map {
            out.push_str(&format!("{k}\t{}\n", scalar(&v)));
        }
    }
    out
}

/// A header line and one line per row, from a list of flat objects.
fn table_tsv<T: Serialize>(rows: &[T]) -> String {
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let Value::Object(map) = serde_json::to_value(row).expect("rows serialize") else {
            continue;
        };
        if i == 0 {
            out.push_str(&map.keys().cloned().collect::<Vec<_>>().join("\t"));
            out.push('\n');
        }
        out.push_str(&map.values().map(scalar).collect::<Vec<_>>().join("\t"));
        out.push('\n');
    }
    out
}

fn emit<T: Serialize>(ctx: &Context, report: &T, verified: bool) -> Outcome {
    let output = match ctx.format(Format::Json) {
        Format::Json => to_json(report),
        Format::Tsv | Format::Ascii => key_value_tsv(report),
    };
    Outcome { output, verified }
}

/// `x` truncated to twelve decimals, computed exactly.
fn decimal12(alpha: &Alpha, x: &QAlpha) -> Result<String, CliError> {
    const SCALE: i128 = 1_000_000_000_000;
    let scale = |r: Rational| {
        r.numer()
            .checked_mul(SCALE)
            .map(|n| Rational::new(n, *r.denom()))
            .ok_or(Error::Overflow("decimal expansion"))
    };
    let v = alpha.floor(&QAlpha::new(scale(x.s)?, scale(x.t)?));
    let (int, frac) = (v.div_euclid(SCALE), v.rem_euclid(SCALE));
    Ok(format!("{int}.{frac:012}"))
}

#[derive(Serialize)]
struct CfRow {
    k: usize,
    c_k: Option<u64>,
    p_k: i128,
    q_k: i128,
    r_k: i128,
    eta_k: String,
    eta_k_decimal: String,
}

#[derive(Serialize)]
struct CfReport {
    alpha: AlphaJson,
    depth: usize,
    rows: Vec<CfRow>,
}

fn cf(ctx: &Context, depth: usize) -> Result<Outcome, CliError> {
    let alpha = ctx.alpha();
    let t = ConvergentTable::new(&alpha, depth)?;
    let rows = (0..=depth)
        .map(|k| {
            let eta = t.eta(k)?;
            Ok(CfRow {
                k,
                c_k: if k == 0 { None } else { Some(t.c(k)?) },
                p_k: t.p(k)?,
                q_k: t.q(k)?,
                r_k: t.r(k)?,
                eta_k: eta.to_string(),
                eta_k_decimal: decimal12(&alpha, eta)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let output = match ctx.format(Format::Tsv) {
        Format::Json => to_json(&CfReport {
            alpha: alpha_json(&alpha),
            depth,
            rows,
        }),
        Format::Tsv | Format::Ascii => table_tsv(&rows),
    };
    Ok(Outcome {
        output,
        verified: true,
    })
}

#[derive(Serialize)]
struct BoundJson {
    ell: u64,
    n: u64,
    k: usize,
    #[serde(rename = "K")]
    big_k: usize,
    #[serde(rename = "M")]
    big_m: usize,
}

impl From<Theorem2Bound> for BoundJson {
    fn from(b: Theorem2Bound) -> Self {
        BoundJson {
            ell: b.ell,
            n: b.n,
            k: b.k,
            big_k: b.big_k,
            big_m: b.big_m,
        }
    }
}

#[derive(Serialize)]
struct ArcRow {
    index: usize,
    start: String,
    label: String,
    length: String,
}

#[derive(Serialize)]
struct RefineReport {
    power: usize,
    arc_count: usize,
    #[serde(flatten)]
    partition: PartitionJson,
}

fn refine(ctx: &Context, file: &Path, n: usize) -> Result<Outcome, CliError> {
    let r = ctx.partition(file)?;
    let rn = r.refine_with(n, ctx.limits)?;
    let output = match ctx.format(Format::Json) {
        Format::Json => to_json(&RefineReport {
            power: n,
            arc_count: rn.arc_count(),
            partition: PartitionJson::from_partition(&rn),
        }),
        Format::Tsv | Format::Ascii => {
            let alpha = rn.alpha();
            let rows = rn
                .arcs()
                .iter()
                .enumerate()
                .map(|(index, (arc, label))| {
                    Ok(ArcRow {
                        index,
                        start: arc.start.to_string(),
                        label: word_to_string(label),
                        length: decimal12(alpha, &arc.length(alpha))?,
                    })
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            table_tsv(&rows)
        }
    };
    Ok(Outcome {
        output,
        verified: true,
    })
}

#[derive(Serialize)]
struct Thm1Report {
    alpha: AlphaJson,
    k: usize,
    ell: u64,
    m: u64,
    max_cut_index: u64,
    ell_bound_holds: bool,
    bound: BoundJson,
    within_bound: bool,
}

fn verify_thm1(ctx: &Context, file: &Path) -> Result<Outcome, CliError> {
    let r = ctx.partition(file)?;
    let w = theorem1_witness(&r, ctx.limits.max_power)?;
    let bound = theorem2_bound(&r)?;
    let report = Thm1Report {
        alpha: alpha_json(r.alpha()),
        k: w.k,
        ell: w.ell,
        m: w.m,
        max_cut_index: w.n,
        ell_bound_holds: w.ell_bound_holds(),
        within_bound: w.k <= bound.big_k,
        bound: bound.into(),
    };
    let ok = report.ell_bound_holds && report.within_bound;
    Ok(emit(ctx, &report, ok))
}

#[derive(Serialize)]
struct FirstSturmian {
    power: usize,
    ell: u64,
    m: u64,
}

#[derive(Serialize)]
struct Thm2Report {
    alpha: AlphaJson,
    holds: bool,
    #[serde(flatten)]
    bound: BoundJson,
    lhs_arcs: usize,
    rhs_arcs: usize,
    first_sturmian: Option<FirstSturmian>,
}

fn verify_thm2(ctx: &Context, file: &Path) -> Result<Outcome, CliError> {
    let r = ctx.partition(file)?;
    let rep = verify_theorem2(&r, ctx.limits)?;
    let report = Thm2Report {
        alpha: alpha_json(r.alpha()),
        holds: rep.holds,
        bound: rep.bound.into(),
        lhs_arcs: rep.lhs_arcs,
        rhs_arcs: rep.rhs_arcs,
        first_sturmian: rep
            .first_sturmian
            .map(|(power, ell, m)| FirstSturmian { power, ell, m }),
    };
    Ok(emit(ctx, &report, rep.holds))
}

/// Largest tower height drawn.
const RENDER_CAP: usize = 200;

fn towers_show(ctx: &Context, k: usize, partition: Option<&Path>) -> Result<Outcome, CliError> {
    let alpha = ctx.alpha();
    let pair = three_lengths_towers(&alpha, k)?;
    let height = pair.left.height().max(pair.right.height());
    if height > RENDER_CAP {
        return Err(CliError::RenderCap {
            what: "tower height",
            requested: height,
            limit: RENDER_CAP,
        });
    }
    let r = partition.map(|p| ctx.partition(p)).transpose()?;
    let view = |name: String, tower| -> Result<TowerView, CliError> {
        let code = r.as_ref().map(|r| tower_code(r, tower)).transpose()?;
        Ok(TowerView::new(name, tower, code))
    };
    let left = view(format!("L(I_{k}, 0, {})", pair.left.height()), &pair.left)?;
    let right = view(
        format!("L(I_{}, 0, {})", k - 1, pair.right.height()),
        &pair.right,
    )?;
    let output = match ctx.format(Format::Ascii) {
        Format::Ascii => render_towers_ascii(k, &left, &right),
        Format::Json => to_json(&serde_json::json!({
            "alpha": alpha_json(&alpha),
            "k": k,
            "left": left,
            "right": right,
        })),
        Format::Tsv => {
            let mut rows = Vec::new();
            for (side, t) in [("left", &left), ("right", &right)] {
                for l in &t.levels {
                    rows.push(serde_json::json!({
                        "tower": side,
                        "level": l.m,
                        "start": l.start,
                        "end": l.end,
                        "letter": l.letter,
                    }));
                }
            }
            table_tsv(&rows)
        }
    };
    Ok(Outcome {
        output,
        verified: true,
    })
}

#[derive(Serialize)]
struct NameFormulaSummary {
    passed: bool,
    name_length: usize,
    abc_checked: usize,
    abc_failures: Vec<usize>,
    e_checked: usize,
    e_failures: Vec<usize>,
    e_per_failures: Vec<usize>,
    d_checked: usize,
    d_failures: Vec<usize>,
    truncated: bool,
}

#[derive(Serialize)]
struct CodesReport {
    alpha: AlphaJson,
    k: usize,
    c: [u64; 3],
    u: String,
    v: String,
    w: String,
    w_prime: String,
    w_dprime: String,
    z: String,
    per_shift: usize,
    per: Vec<usize>,
    boundary_conditions: bool,
    boundary_note: Option<String>,
    per_structure_holds: Option<bool>,
    name_formulas: Option<NameFormulaSummary>,
    name_formulas_note: Option<String>,
}

fn towers_codes(ctx: &Context, k: usize, partition: &Path) -> Result<Outcome, CliError> {
    let r = ctx.partition(partition)?;
    let alpha = r.alpha().clone();
    let t = ConvergentTable::new(&alpha, k + 3)?;
    let pair = three_lengths_towers(&alpha, k)?;
    let u = tower_code(&r, &pair.left)?;
    let v = tower_code(&r, &pair.right)?;
    let c = [t.c(k + 1)?, t.c(k + 2)?, t.c(k + 3)?];
    let zw = build_zwords(&u, &v, c[0], c[1], c[2]);
    let per = per_set(&zw.z, zw.w_prime.len())?;
    let (boundary_note, per_structure_holds) =
        match verify_per_structure(&u, &v, &zw.z, zw.w_prime.len()) {
            Ok(b) => (None, Some(b)),
            Err(Error::BoundaryConditions(why)) => (Some(why.to_string()), None),
            Err(e) => return Err(e.into()),
        };
    let (name_formulas, name_formulas_note) = match verify_name_formulas(&r, k, DEFAULT_LEVEL_CAP) {
        Ok(rep) => (
            Some(NameFormulaSummary {
                passed: rep.passed(),
                name_length: rep.name_length,
                abc_checked: rep.abc_checked,
                abc_failures: rep.abc_failures,
                e_checked: rep.e_checked,
                e_failures: rep.e_failures,
                e_per_failures: rep.e_per_failures,
                d_checked: rep.d_checked,
                d_failures: rep.d_failures,
                truncated: rep.truncated,
            }),
            None,
        ),
        Err(e @ (Error::Hypotheses(_) | Error::BoundaryConditions(_))) => {
            (None, Some(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let verified =
        per_structure_holds != Some(false) && name_formulas.as_ref().is_none_or(|n| n.passed);
    let report = CodesReport {
        alpha: alpha_json(&alpha),
        k,
        c,
        u: word_to_string(&u),
        v: word_to_string(&v),
        w: word_to_string(&zw.w),
        w_prime: word_to_string(&zw.w_prime),
        w_dprime: word_to_string(&zw.w_dprime),
        z: word_to_string(&zw.z),
        per_shift: zw.w_prime.len(),
        per,
        boundary_conditions: boundary_note.is_none(),
        boundary_note,
        per_structure_holds,
        name_formulas,
        name_formulas_note,
    };
    Ok(emit(ctx, &report, verified))
}

#[derive(Serialize)]
struct InjectivityRow {
    n: usize,
    injective: bool,
    collision: Option<[String; 2]>,
}

#[derive(Serialize)]
struct Prop5Json {
    injective_at_some_n: bool,
    infinite_code_injective: bool,
    infinite_code_nonconstant: bool,
    witness_length: Option<usize>,
    rule_nonconstant: bool,
    all_agree: bool,
}

#[derive(Serialize)]
struct MinimalNJson {
    n_min: Option<usize>,
    n_bound: Option<usize>,
    reason: Option<String>,
    bound: Option<BoundJson>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    model: String,
    width: usize,
    outputs: Vec<String>,
    constant: bool,
    minimal: bool,
    ignores_first_letter: bool,
    minimized_width: usize,
    n_max: usize,
    first_injective_n: Option<usize>,
    injectivity: Vec<InjectivityRow>,
    prop5: Option<Prop5Json>,
    minimal_n: Option<MinimalNJson>,
}

fn model_name(rule: &LocalRule) -> String {
    match rule.model() {
        LanguageModel::Sturmian(_) => "sturmian".into(),
        LanguageModel::FullShift(_) => "full_shift".into(),
    }
}

fn minimal_n_json(rule: &LocalRule, caps: SearchCaps) -> Result<MinimalNJson, CliError> {
    Ok(match minimal_injective_n(rule, caps)? {
        MinimalInjective::Found { n_min, n_bound } => MinimalNJson {
            n_min,
            n_bound: Some(n_bound),
            reason: None,
            bound: Some(theorem2_bound(&rule_to_partition(rule)?)?.into()),
        },
        MinimalInjective::NotApplicable(why) => MinimalNJson {
            n_min: None,
            n_bound: None,
            reason: Some(why.into()),
            bound: None,
        },
    })
}

fn sbc_analyze(ctx: &Context, file: &Path, n_max: usize) -> Result<Outcome, CliError> {
    let rule = ctx.rule(file)?;
    let mut injectivity = Vec::new();
    for n in 1..=n_max {
        let row = match injectivity_at(&rule, n, ctx.caps)? {
            Injectivity::Injective => InjectivityRow {
                n,
                injective: true,
                collision: None,
            },
            Injectivity::Collision(x, y) => InjectivityRow {
                n,
                injective: false,
                collision: Some([word_to_string(&x), word_to_string(&y)]),
            },
        };
        injectivity.push(row);
    }
    let minimal = is_minimal(&rule);
    let ignores = ignores_first_letter(&rule);
    let sturmian = matches!(rule.model(), LanguageModel::Sturmian(_));
    let (prop5, minimal_n) = if sturmian && minimal && !ignores {
        let p = prop5_report(&rule, ctx.caps)?;
        (
            Some(Prop5Json {
                all_agree: p.all_agree(),
                injective_at_some_n: p.injective_at_some_n,
                infinite_code_injective: p.infinite_code_injective,
                infinite_code_nonconstant: p.infinite_code_nonconstant,
                witness_length: p.witness_length,
                rule_nonconstant: p.rule_nonconstant,
            }),
            Some(minimal_n_json(&rule, ctx.caps)?),
        )
    } else {
        (None, None)
    };
    let verified = prop5.as_ref().is_none_or(|p| p.all_agree);
    let report = AnalyzeReport {
        model: model_name(&rule),
        width: rule.width(),
        outputs: rule.outputs().iter().map(|s| s.to_string()).collect(),
        constant: rule.is_constant(),
        minimal,
        ignores_first_letter: ignores,
        minimized_width: minimize(&rule).width(),
        n_max,
        first_injective_n: injectivity.iter().find(|r| r.injective).map(|r| r.n),
        injectivity,
        prop5,
        minimal_n,
    };
    Ok(emit(ctx, &report, verified))
}

fn sbc_minimal_n(ctx: &Context, file: &Path) -> Result<Outcome, CliError> {
    let rule = ctx.rule(file)?;
    let report = minimal_n_json(&rule, ctx.caps)?;
    let verified = report.reason.is_some() || report.n_min.is_some();
    Ok(emit(ctx, &report, verified))
}

#[derive(Serialize)]
struct CollisionJson {
    n: usize,
    x: Option<String>,
    y: Option<String>,
}

#[derive(Serialize)]
struct Example1Json {
    rule: RuleJson,
    n_max: usize,
    collisions: Vec<CollisionJson>,
    collision_shape_ok: bool,
    all_x_collide: bool,
    prefix_len: usize,
    prefix_counterexample: Option<[String; 2]>,
    passed: bool,
}

fn rule_json(rule: &LocalRule) -> RuleJson {
    RuleJson {
        model: match rule.model() {
            LanguageModel::Sturmian(a) => {
                crate::formats::ModelJson::Sturmian(crate::formats::AlphaInput::Spec(alpha_json(a)))
            }
            LanguageModel::FullShift(letters) => crate::formats::ModelJson::FullShift(
                letters.iter().map(|s| s.to_string()).collect(),
            ),
        },
        width: rule.width(),
        table: rule
            .entries()
            .iter()
            .map(|(w, o)| (word_to_string(w), o.to_string()))
            .collect(),
    }
}

fn demo_example1(ctx: &Context, n_max: usize, prefix_len: usize) -> Result<Outcome, CliError> {
    if n_max == 0 {
        return Err(CliError::Input("--n-max must be positive".into()));
    }
    let rep = example1_demo(n_max, prefix_len, ctx.caps)?;
    let pair = |p: &Option<(Word, Word)>| {
        p.as_ref()
            .map(|(x, y)| [word_to_string(x), word_to_string(y)])
    };
    let report = Example1Json {
        rule: rule_json(&sturmian_core::subshift::example1_rule()),
        n_max,
        collisions: rep
            .collisions
            .iter()
            .map(|(n, c)| {
                let c = pair(c);
                CollisionJson {
                    n: *n,
                    x: c.as_ref().map(|c| c[0].clone()),
                    y: c.map(|c| c[1].clone()),
                }
            })
            .collect(),
        collision_shape_ok: rep.collision_shape_ok,
        all_x_collide: rep.all_x_collide,
        prefix_len,
        prefix_counterexample: pair(&rep.prefix_counterexample),
        passed: rep.passed(),
    };
    Ok(emit(ctx, &report, rep.passed()))
}

#[derive(Serialize)]
struct SymmetricVariant {
    name: &'static str,
    arcs: usize,
    connected_at: Vec<usize>,
}

#[derive(Serialize)]
struct SymmetricReport {
    alpha: AlphaJson,
    max_n: usize,
    variants: Vec<SymmetricVariant>,
    all_disconnected: bool,
}

fn demo_symmetric(ctx: &Context, max_n: usize) -> Result<Outcome, CliError> {
    let alpha = ctx.alpha();
    let third = rotation_symmetric_partition(&alpha, 3, &[sym("X"), sym("Y")])?;
    let mut variants = Vec::new();
    for (name, r) in [("half", symmetric_partition(&alpha)), ("third", third)] {
        let rep = disconnection_check(&r, max_n)?;
        variants.push(SymmetricVariant {
            name,
            arcs: r.arc_count(),
            connected_at: rep.connected_at,
        });
    }
    let all = variants.iter().all(|v| v.connected_at.is_empty());
    let report = SymmetricReport {
        alpha: alpha_json(&alpha),
        max_n,
        variants,
        all_disconnected: all,
    };
    Ok(emit(ctx, &report, all))
}

#[derive(Serialize)]
struct TrialRow {
    trial: usize,
    seed: u64,
    ell: u64,
    n: u64,
    k: usize,
    #[serde(rename = "K")]
    big_k: usize,
    #[serde(rename = "M")]
    big_m: usize,
    empirical_k: Option<usize>,
    holds: bool,
}

#[derive(Serialize)]
struct ExperimentReport {
    alpha: AlphaJson,
    trials: usize,
    n: usize,
    labels: usize,
    seed: u64,
    rows: Vec<TrialRow>,
    all_hold: bool,
}

/// Seed of one trial, mixed from the run seed so that trials are independent.
fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn experiment_random(
    ctx: &Context,
    trials: usize,
    n: usize,
    labels: usize,
) -> Result<Outcome, CliError> {
    let alpha = ctx.alpha();
    let rows = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(ctx.seed, trial);
            let r = random_coarsening(&alpha, n, labels, seed)?;
            let rep = verify_theorem2(&r, ctx.limits)?;
            Ok(TrialRow {
                trial,
                seed,
                ell: rep.bound.ell,
                n: rep.bound.n,
                k: rep.bound.k,
                big_k: rep.bound.big_k,
                big_m: rep.bound.big_m,
                empirical_k: rep.first_sturmian.map(|f| f.0),
                holds: rep.holds,
            })
        })
        .collect::<Vec<Result<TrialRow, Error>>>()
        .into_iter()
        .collect::<Result<Vec<_>, Error>>()?;
    let all_hold = rows
        .iter()
        .all(|r| r.holds && r.empirical_k.is_some_and(|k| k <= r.big_k));
    let output = match ctx.format(Format::Tsv) {
        Format::Json => to_json(&ExperimentReport {
            alpha: alpha_json(&alpha),
            trials,
            n,
            labels,
            seed: ctx.seed,
            rows,
            all_hold,
        }),
        Format::Tsv | Format::Ascii => table_tsv(&rows),
    };
    Ok(Outcome {
        output,
        verified: all_hold,
    })
}
