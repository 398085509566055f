//! Languages of the Sturmian subshift and of full shifts, local rules and the
//! sliding block codes they induce.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::Alpha;
use crate::partition::{refine_skeleton, theorem2_bound, LabeledPartition, Limits};
use crate::word::{sym, Symbol, Word};

/// Words as vectors of indices into the alphabet of a model.
pub type Letters = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageModel {
    /// Codings of the rotation by `α` with respect to `P`, over `{0, 1}`.
    Sturmian(Alpha),
    /// All sequences over the alphabet.
    FullShift(Vec<Symbol>),
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchCaps {
    /// Largest number of words enumerated for one language.
    pub max_words: usize,
    pub limits: Limits,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_words: 1 << 24,
            limits: Limits::default(),
        }
    }
}

impl LanguageModel {
    pub fn full_shift(alphabet: &[&str]) -> Result<Self> {
        let mut a: Vec<Symbol> = alphabet.iter().map(|s| sym(s)).collect();
        a.sort();
        a.dedup();
        if a.is_empty() || a.len() != alphabet.len() {
            return Err(Error::InvalidArgument(
                "alphabet must be non-empty without repeated symbols".into(),
            ));
        }
        Ok(LanguageModel::FullShift(a))
    }

    /// The alphabet in increasing order; letter indices refer to it.
    pub fn alphabet(&self) -> Vec<Symbol> {
        match self {
            LanguageModel::Sturmian(_) => vec![sym("0"), sym("1")],
            LanguageModel::FullShift(a) => a.clone(),
        }
    }

    pub fn to_letters(&self, w: &[Symbol]) -> Result<Letters> {
        let alphabet = self.alphabet();
        w.iter()
            .map(|s| {
                alphabet
                    .binary_search(s)
                    .map(|i| i as u32)
                    .map_err(|_| Error::NotInLanguage)
            })
            .collect()
    }

    pub fn to_word(&self, letters: &[u32]) -> Word {
        let alphabet = self.alphabet();
        letters
            .iter()
            .map(|&i| alphabet[i as usize].clone())
            .collect()
    }

    /// `L^m`, sorted lexicographically.
    pub fn language(&self, m: usize, caps: SearchCaps) -> Result<Vec<Letters>> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "word length must be positive".into(),
            ));
        }
        match self {
            LanguageModel::Sturmian(alpha) => {
                if m + 1 > caps.max_words {
                    return Err(Error::ResourceCap {
                        what: "language words",
                        requested: m + 1,
                        limit: caps.max_words,
                    });
                }
                let p = LabeledPartition::sturmian(alpha);
                let sk = refine_skeleton(&p, m, caps.limits)?;
                let mut words: Vec<Letters> = sk
                    .cuts()
                    .iter()
                    .map(|c| self.to_letters(&p.name_of_point(c, m)))
                    .collect::<Result<_>>()?;
                words.sort();
                words.dedup();
                Ok(words)
            }
            LanguageModel::FullShift(a) => {
                let count = full_shift_count(a.len(), m, caps.max_words)?;
                Ok((0..count).map(|i| digits(i, a.len(), m)).collect())
            }
        }
    }

    pub fn contains(&self, w: &[u32], caps: SearchCaps) -> Result<bool> {
        match self {
            LanguageModel::FullShift(a) => Ok(w.iter().all(|&x| (x as usize) < a.len())),
            LanguageModel::Sturmian(_) => {
                if w.is_empty() {
                    return Ok(true);
                }
                Ok(self
                    .language(w.len(), caps)?
                    .binary_search(&w.to_vec())
                    .is_ok())
            }
        }
    }
}

fn full_shift_count(k: usize, m: usize, cap: usize) -> Result<usize> {
    let mut count: usize = 1;
    for _ in 0..m {
        count = count
            .checked_mul(k)
            .filter(|&c| c <= cap)
            .ok_or(Error::ResourceCap {
                what: "language words",
                requested: usize::MAX,
                limit: cap,
            })?;
    }
    Ok(count)
}

/// The `m` base-`k` digits of `i`, most significant first.
fn digits(mut i: usize, k: usize, m: usize) -> Letters {
    let mut out = vec![0u32; m];
    for slot in out.iter_mut().rev() {
        *slot = (i % k) as u32;
        i /= k;
    }
    out
}

/// A local rule `ψ: L^m → Δ`, given by its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRule {
    model: LanguageModel,
    width: usize,
    table: BTreeMap<Letters, u32>,
    outputs: Vec<Symbol>,
}

impl LocalRule {
    /// The table must be defined on exactly the words of `L^width`.
    pub fn new(model: LanguageModel, width: usize, entries: &[(Word, Symbol)]) -> Result<Self> {
        Self::with_caps(model, width, entries, SearchCaps::default())
    }

    pub fn with_caps(
        model: LanguageModel,
        width: usize,
        entries: &[(Word, Symbol)],
        caps: SearchCaps,
    ) -> Result<Self> {
        let mut outputs: Vec<Symbol> = entries.iter().map(|(_, o)| o.clone()).collect();
        outputs.sort();
        outputs.dedup();
        let mut table = BTreeMap::new();
        for (w, o) in entries {
            if w.len() != width {
                return Err(Error::InvalidArgument(format!(
                    "table word of length {} in a rule of width {width}",
                    w.len()
                )));
            }
            let letters = model.to_letters(w)?;
            let out = outputs.binary_search(o).expect("collected above") as u32;
            if table.insert(letters, out).is_some() {
                return Err(Error::InvalidArgument("table word listed twice".into()));
            }
        }
        let language = model.language(width, caps)?;
        if language.len() != table.len() || language.iter().any(|w| !table.contains_key(w)) {
            return Err(Error::InvalidArgument(format!(
                "table must cover exactly the {} words of the language of length {width}",
                language.len()
            )));
        }
        Ok(LocalRule {
            model,
            width,
            table,
            outputs,
        })
    }

    fn from_parts(
        model: LanguageModel,
        width: usize,
        table: BTreeMap<Letters, u32>,
        outputs: Vec<Symbol>,
    ) -> Self {
        LocalRule {
            model,
            width,
            table,
            outputs,
        }
    }

    pub fn model(&self) -> &LanguageModel {
        &self.model
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The output alphabet `Δ` (symbols actually used), sorted.
    pub fn outputs(&self) -> &[Symbol] {
        &self.outputs
    }

    /// The table as words, in lexicographic order of the inputs.
    pub fn entries(&self) -> Vec<(Word, Symbol)> {
        self.table
            .iter()
            .map(|(k, &v)| (self.model.to_word(k), self.outputs[v as usize].clone()))
            .collect()
    }

    pub fn apply(&self, w: &[Symbol]) -> Result<Symbol> {
        let letters = self.model.to_letters(w)?;
        self.table
            .get(&letters)
            .map(|&o| self.outputs[o as usize].clone())
            .ok_or(Error::NotInLanguage)
    }

    pub fn is_constant(&self) -> bool {
        self.outputs.len() <= 1
    }

    fn image(&self, w: &[u32]) -> Vec<u32> {
        w.windows(self.width).map(|win| self.table[win]).collect()
    }
}

/// `ψ^{*n}` applied to a word of length `n + m − 1`.
pub fn sliding_block(rule: &LocalRule, word: &[Symbol]) -> Result<Word> {
    sliding_block_with(rule, word, SearchCaps::default())
}

pub fn sliding_block_with(rule: &LocalRule, word: &[Symbol], caps: SearchCaps) -> Result<Word> {
    if word.len() < rule.width {
        return Err(Error::WordTooShort {
            len: word.len(),
            width: rule.width,
        });
    }
    let letters = rule.model.to_letters(word)?;
    if !rule.model.contains(&letters, caps)? {
        return Err(Error::NotInLanguage);
    }
    Ok(rule
        .image(&letters)
        .into_iter()
        .map(|o| rule.outputs[o as usize].clone())
        .collect())
}

/// Whether `ψ(u)` is constant on each class of words sharing `key(u)`.
fn factors_through(rule: &LocalRule, key: impl Fn(&[u32]) -> &[u32]) -> bool {
    let mut seen: BTreeMap<&[u32], u32> = BTreeMap::new();
    rule.table
        .iter()
        .all(|(w, &o)| *seen.entry(key(w)).or_insert(o) == o)
}

/// A rule is minimal unless it does not depend on its last letter.
pub fn is_minimal(rule: &LocalRule) -> bool {
    rule.width == 1 || !factors_through(rule, |w| &w[..w.len() - 1])
}

/// Whether `ψ(u)` depends only on `u[1, m)`. Width-one rules never ignore
/// their letter.
pub fn ignores_first_letter(rule: &LocalRule) -> bool {
    rule.width > 1 && factors_through(rule, |w| &w[1..])
}

/// The unique minimal rule inducing the same sliding block codes.
pub fn minimize(rule: &LocalRule) -> LocalRule {
    let mut current = rule.clone();
    while !is_minimal(&current) {
        let table = current
            .table
            .iter()
            .map(|(w, &o)| (w[..w.len() - 1].to_vec(), o))
            .collect();
        current = LocalRule::from_parts(
            current.model.clone(),
            current.width - 1,
            table,
            current.outputs.clone(),
        );
    }
    current
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    Injective,
    /// The lexicographically least pair of distinct words with equal images.
    Collision(Word, Word),
}

impl Injectivity {
    pub fn is_injective(&self) -> bool {
        matches!(self, Injectivity::Injective)
    }
}

/// Decides whether `ψ^{*n}` is one-to-one on `L^{m+n−1}`.
pub fn injectivity_at(rule: &LocalRule, n: usize, caps: SearchCaps) -> Result<Injectivity> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "code length must be positive".into(),
        ));
    }
    let words = rule.model.language(rule.width + n - 1, caps)?;
    // Words come sorted, so the first repeat of an image gives the least
    // second word for that image.
    let mut first: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (i, w) in words.iter().enumerate() {
        match first.get(&rule.image(w)) {
            None => {
                first.insert(rule.image(w), i);
            }
            Some(&f) => {
                if best.is_none_or(|(bf, _)| f < bf) {
                    best = Some((f, i));
                }
            }
        }
    }
    Ok(match best {
        None => Injectivity::Injective,
        Some((a, b)) => {
            Injectivity::Collision(rule.model.to_word(&words[a]), rule.model.to_word(&words[b]))
        }
    })
}

/// `R_a` is the union of the arcs of `P^m` whose names are mapped to `a`.
pub fn rule_to_partition(rule: &LocalRule) -> Result<LabeledPartition> {
    let LanguageModel::Sturmian(alpha) = &rule.model else {
        return Err(Error::InvalidArgument(
            "only rules on the Sturmian language define partitions of the circle".into(),
        ));
    };
    let p = LabeledPartition::sturmian(alpha);
    let pm = p.refine(rule.width)?;
    let arcs = pm
        .cuts()
        .iter()
        .zip(pm.labels())
        .map(|(c, name)| Ok((c.clone(), vec![rule.apply(name)?])))
        .collect::<Result<Vec<_>>>()?;
    LabeledPartition::from_arcs(alpha, arcs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalInjective {
    /// `n_min` is the least `n ≤ n_bound` with `ψ^{*n}` injective; `None`
    /// means no such `n` exists up to the bound.
    Found {
        n_min: Option<usize>,
        n_bound: usize,
    },
    NotApplicable(&'static str),
}

/// The least `n` with `ψ^{*n}` injective, searched up to the refinement bound
/// of the associated partition.
pub fn minimal_injective_n(rule: &LocalRule, caps: SearchCaps) -> Result<MinimalInjective> {
    if !matches!(rule.model, LanguageModel::Sturmian(_)) {
        return Err(Error::InvalidArgument(
            "rule must be on the Sturmian language".into(),
        ));
    }
    if rule.is_constant() {
        return Ok(MinimalInjective::NotApplicable(
            "not injective at any level",
        ));
    }
    if !is_minimal(rule) {
        return Ok(MinimalInjective::NotApplicable("rule is not minimal"));
    }
    if ignores_first_letter(rule) {
        return Ok(MinimalInjective::NotApplicable(
            "rule ignores the first letter",
        ));
    }
    let n_bound = theorem2_bound(&rule_to_partition(rule)?)?.big_k;
    for n in 1..=n_bound {
        if injectivity_at(rule, n, caps)?.is_injective() {
            return Ok(MinimalInjective::Found {
                n_min: Some(n),
                n_bound,
            });
        }
    }
    Ok(MinimalInjective::Found {
        n_min: None,
        n_bound,
    })
}

/// The four equivalent conditions for a minimal rule that does not ignore its
/// first letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop5Report {
    /// Some `ψ^{*n}` is injective.
    pub injective_at_some_n: bool,
    /// `ψ^{*∞}` is injective. Not decided on its own: it sits between the
    /// first and third conditions, so it is recorded as equal to the first.
    pub infinite_code_injective: bool,
    /// `ψ^{*∞}` is not constant, witnessed by two words of length
    /// `m + witness_length` with different images.
    pub infinite_code_nonconstant: bool,
    pub witness_length: Option<usize>,
    /// `ψ` is not constant.
    pub rule_nonconstant: bool,
    pub n_min: Option<usize>,
    pub n_bound: Option<usize>,
}

impl Prop5Report {
    pub fn all_agree(&self) -> bool {
        let c = self.injective_at_some_n;
        c == self.infinite_code_injective
            && c == self.infinite_code_nonconstant
            && c == self.rule_nonconstant
    }
}

pub fn prop5_report(rule: &LocalRule, caps: SearchCaps) -> Result<Prop5Report> {
    if !is_minimal(rule) {
        return Err(Error::Hypotheses("rule is not minimal".into()));
    }
    if ignores_first_letter(rule) {
        return Err(Error::Hypotheses("rule ignores the first letter".into()));
    }
    let (n_min, n_bound) = match minimal_injective_n(rule, caps)? {
        MinimalInjective::Found { n_min, n_bound } => (n_min, Some(n_bound)),
        MinimalInjective::NotApplicable(_) => (None, None),
    };
    let mut witness_length = None;
    for extra in 0..=rule.width {
        let words = rule.model.language(rule.width + extra, caps)?;
        let first = rule.image(&words[0]);
        if words.iter().any(|w| rule.image(w) != first) {
            witness_length = Some(extra);
            break;
        }
    }
    let injective = n_min.is_some();
    Ok(Prop5Report {
        injective_at_some_n: injective,
        infinite_code_injective: injective,
        infinite_code_nonconstant: witness_length.is_some(),
        witness_length,
        rule_nonconstant: !rule.is_constant(),
        n_min,
        n_bound,
    })
}

/// `ψ(11) = 0, ψ(10) = 0, ψ(01) = 1, ψ(00) = 2` on the full shift over `{0, 1}`.
pub fn example1_rule() -> LocalRule {
    let model = LanguageModel::full_shift(&["0", "1"]).expect("valid alphabet");
    let entries = [("11", "0"), ("10", "0"), ("01", "1"), ("00", "2")]
        .iter()
        .map(|(w, o)| (crate::word::word_from_chars(w), sym(o)))
        .collect::<Vec<_>>();
    LocalRule::new(model, 2, &entries).expect("valid table")
}

/// Looks for words `x ≠ y` of equal length `ℓ ≤ max_len` with
/// `ψ^{*n}(x) = ψ^{*n}(y)` but `x[0, n) ≠ y[0, n)`, where `n = ℓ − m + 1`.
pub fn prefix_determination(
    rule: &LocalRule,
    max_len: usize,
    caps: SearchCaps,
) -> Result<Option<(Word, Word)>> {
    for len in rule.width..=max_len {
        let n = len - rule.width + 1;
        let mut prefix_of: BTreeMap<Vec<u32>, Letters> = BTreeMap::new();
        for w in rule.model.language(len, caps)? {
            let prefix = w[..n].to_vec();
            if let Some(p) = prefix_of.get(&rule.image(&w)) {
                if *p != prefix {
                    let other = rule
                        .model
                        .language(len, caps)?
                        .into_iter()
                        .find(|x| x[..n] == p[..] && rule.image(x) == rule.image(&w))
                        .expect("recorded word exists");
                    return Ok(Some((rule.model.to_word(&other), rule.model.to_word(&w))));
                }
            } else {
                prefix_of.insert(rule.image(&w), prefix);
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example1Report {
    /// For each `n`, the least collision of `ψ^{*n}`.
    pub collisions: Vec<(usize, Option<(Word, Word)>)>,
    /// Every collision found has the shape `(x10, x11)`.
    pub collision_shape_ok: bool,
    /// `ψ^{*n}(x10) = ψ^{*n}(x11)` for every `x` of length `n − 1`.
    pub all_x_collide: bool,
    pub prefix_len: usize,
    pub prefix_counterexample: Option<(Word, Word)>,
}

impl Example1Report {
    pub fn passed(&self) -> bool {
        self.collision_shape_ok
            && self.all_x_collide
            && self.collisions.iter().all(|(_, c)| c.is_some())
            && self.prefix_counterexample.is_none()
    }
}

pub fn example1_demo(n_max: usize, prefix_len: usize, caps: SearchCaps) -> Result<Example1Report> {
    let rule = example1_rule();
    let mut collisions = Vec::new();
    let mut shape_ok = true;
    let mut all_x = true;
    let (one, zero) = (sym("1"), sym("0"));
    for n in 1..=n_max {
        let c = match injectivity_at(&rule, n, caps)? {
            Injectivity::Injective => None,
            Injectivity::Collision(x, y) => Some((x, y)),
        };
        if let Some((x, y)) = &c {
            let k = x.len();
            shape_ok &= k == n + 1
                && x[..k - 2] == y[..k - 2]
                && x[k - 2..] == [one.clone(), zero.clone()]
                && y[k - 2..] == [one.clone(), one.clone()];
        }
        for x in rule.model.language(n, caps)? {
            let x = &x[..n - 1];
            let a: Letters = x.iter().copied().chain([1, 0]).collect();
            let b: Letters = x.iter().copied().chain([1, 1]).collect();
            all_x &= rule.image(&a) == rule.image(&b);
        }
        collisions.push((n, c));
    }
    Ok(Example1Report {
        collisions,
        collision_shape_ok: shape_ok,
        all_x_collide: all_x,
        prefix_len,
        prefix_counterexample: prefix_determination(&rule, prefix_len, caps)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{word_from_chars as w, word_to_string};
    use alloc::string::String;

    fn caps() -> SearchCaps {
        SearchCaps::default()
    }

    fn sturmian_rule(alpha: &Alpha, width: usize, f: impl Fn(&Word) -> &'static str) -> LocalRule {
        let model = LanguageModel::Sturmian(alpha.clone());
        let entries: Vec<(Word, Symbol)> = model
            .language(width, caps())
            .unwrap()
            .iter()
            .map(|l| {
                let word = model.to_word(l);
                let out = sym(f(&word));
                (word, out)
            })
            .collect();
        LocalRule::new(model, width, &entries).unwrap()
    }

    #[test]
    fn language_examples() {
        let g = LanguageModel::Sturmian(Alpha::golden());
        let l1: Vec<String> = g
            .language(1, caps())
            .unwrap()
            .iter()
            .map(|x| word_to_string(&g.to_word(x)))
            .collect();
        assert_eq!(l1, ["0", "1"]);
        assert_eq!(g.language(3, caps()).unwrap().len(), 4);
        let f = LanguageModel::full_shift(&["0", "1"]).unwrap();
        let l2: Vec<String> = f
            .language(2, caps())
            .unwrap()
            .iter()
            .map(|x| word_to_string(&f.to_word(x)))
            .collect();
        assert_eq!(l2, ["00", "01", "10", "11"]);
        let tight = SearchCaps {
            max_words: 8,
            ..caps()
        };
        assert!(f.language(4, tight).unwrap_err().is_resource_cap());
    }

    #[test]
    fn sliding_block_examples() {
        let r = example1_rule();
        assert_eq!(word_to_string(&sliding_block(&r, &w("110")).unwrap()), "00");
        assert_eq!(word_to_string(&sliding_block(&r, &w("001")).unwrap()), "21");
        assert!(matches!(
            sliding_block(&r, &w("1")),
            Err(Error::WordTooShort { len: 1, width: 2 })
        ));
        let g = Alpha::golden();
        let id = sturmian_rule(&g, 1, |x| if &*x[0] == "0" { "0" } else { "1" });
        assert_eq!(sliding_block(&id, &w("1011")).unwrap(), w("1011"));
        // "00" never occurs for the golden rotation.
        assert!(matches!(
            sliding_block(&id, &w("1001")),
            Err(Error::NotInLanguage)
        ));
    }

    #[test]
    fn minimality_examples() {
        let r = example1_rule();
        assert!(is_minimal(&r));
        assert!(!ignores_first_letter(&r));
        assert_eq!(minimize(&r), r);
        let f = LanguageModel::full_shift(&["0", "1"]).unwrap();
        let first = LocalRule::new(
            f.clone(),
            2,
            &[
                (w("00"), sym("0")),
                (w("01"), sym("0")),
                (w("10"), sym("1")),
                (w("11"), sym("1")),
            ],
        )
        .unwrap();
        assert!(!is_minimal(&first));
        assert!(!ignores_first_letter(&first));
        let second = LocalRule::new(
            f.clone(),
            2,
            &[
                (w("00"), sym("0")),
                (w("01"), sym("1")),
                (w("10"), sym("0")),
                (w("11"), sym("1")),
            ],
        )
        .unwrap();
        assert!(ignores_first_letter(&second));
        let constant = LocalRule::new(
            f.clone(),
            2,
            &[
                (w("00"), sym("c")),
                (w("01"), sym("c")),
                (w("10"), sym("c")),
                (w("11"), sym("c")),
            ],
        )
        .unwrap();
        assert!(!is_minimal(&constant));
        assert_eq!(minimize(&constant).width(), 1);
        let three: Vec<(Word, Symbol)> = f
            .language(3, caps())
            .unwrap()
            .iter()
            .map(|l| (f.to_word(l), f.to_word(&l[..1])[0].clone()))
            .collect();
        let three = LocalRule::new(f, 3, &three).unwrap();
        let m = minimize(&three);
        assert_eq!(m.width(), 1);
        assert_eq!(minimize(&m), m);
    }

    #[test]
    fn injectivity_examples() {
        let r = example1_rule();
        assert_eq!(
            injectivity_at(&r, 1, caps()).unwrap(),
            Injectivity::Collision(w("10"), w("11"))
        );
        let g = Alpha::golden();
        let id = sturmian_rule(&g, 1, |x| if &*x[0] == "0" { "a" } else { "b" });
        assert!(injectivity_at(&id, 1, caps()).unwrap().is_injective());
        let c = sturmian_rule(&g, 1, |_| "c");
        assert!(!injectivity_at(&c, 3, caps()).unwrap().is_injective());
    }

    #[test]
    fn partitions_from_rules() {
        let g = Alpha::golden();
        let id = sturmian_rule(&g, 1, |x| if &*x[0] == "0" { "0" } else { "1" });
        assert_eq!(
            rule_to_partition(&id).unwrap(),
            LabeledPartition::sturmian(&g)
        );
        let c = sturmian_rule(&g, 1, |_| "c");
        assert!(rule_to_partition(&c).unwrap().is_trivial());
        let r = sturmian_rule(&g, 2, |x| match word_to_string(x).as_str() {
            "11" => "x",
            "10" => "y",
            _ => "z",
        });
        let part = rule_to_partition(&r).unwrap();
        assert_eq!(part.arc_count(), 3);
        let prof = part.cut_index_profile().unwrap();
        assert_eq!((prof.ell, prof.n), (0, 2));
    }

    #[test]
    fn minimal_n_examples() {
        let g = Alpha::golden();
        let id = sturmian_rule(&g, 1, |x| if &*x[0] == "0" { "0" } else { "1" });
        assert_eq!(
            minimal_injective_n(&id, caps()).unwrap(),
            MinimalInjective::Found {
                n_min: Some(1),
                n_bound: 9
            }
        );
        let c = sturmian_rule(&g, 1, |_| "c");
        assert_eq!(
            minimal_injective_n(&c, caps()).unwrap(),
            MinimalInjective::NotApplicable("not injective at any level")
        );
        let rep = prop5_report(&id, caps()).unwrap();
        assert!(rep.all_agree() && rep.rule_nonconstant);
        let rep = prop5_report(&c, caps()).unwrap();
        assert!(rep.all_agree() && !rep.rule_nonconstant);
    }

    #[test]
    fn example1_small() {
        let rep = example1_demo(4, 8, caps()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.collisions[0], (1, Some((w("10"), w("11")))));
    }
}
