//! Labeled partitions of the circle into finitely many left-closed arcs, the
//! lattice operations on them and the refinement engine.
//!
//! A partition is stored as the sorted list of its cutpoints together with one
//! label per arc; arc `i` is `[cuts[i], cuts[i+1])` and the last arc wraps
//! through 0. Partitions are kept canonical: circularly adjacent arcs carry
//! distinct labels, so the cutpoints are exactly the boundary of the partition.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cf::ConvergentTable;
use crate::error::{Error, Result};
use crate::exact::{Alpha, CircleArc, CirclePoint, QAlpha, Rational};
use crate::word::{sym, Symbol, Word};

/// Size limits for refinement computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_power: usize,
    pub max_cuts: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_power: 5000,
            max_cuts: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPartition {
    alpha: Alpha,
    cuts: Vec<CirclePoint>,
    labels: Vec<Word>,
}

/// Cut-indices of a Sturmian-measurable partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutIndexProfile {
    pub indices: Vec<u64>,
    pub ell: u64,
    pub n: u64,
}

impl LabeledPartition {
    /// Builds a partition from cutpoints and the labels of the arcs starting
    /// at them. The input need not be sorted; equal labels on adjacent arcs
    /// are merged.
    pub fn from_cut_labels(alpha: &Alpha, assignments: &[(CirclePoint, Symbol)]) -> Result<Self> {
        let arcs = assignments
            .iter()
            .map(|(c, l)| (c.clone(), vec![l.clone()]))
            .collect();
        Self::from_arcs(alpha, arcs)
    }

    /// Like [`from_cut_labels`](Self::from_cut_labels) with word labels.
    pub fn from_arcs(alpha: &Alpha, mut arcs: Vec<(CirclePoint, Word)>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyInput);
        }
        arcs.sort_by(|x, y| alpha.compare(&x.0, &y.0));
        if arcs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateCut);
        }
        let (cuts, labels) = arcs.into_iter().unzip();
        Ok(Self::canonical(alpha.clone(), cuts, labels))
    }

    fn canonical(alpha: Alpha, cuts: Vec<CirclePoint>, labels: Vec<Word>) -> Self {
        let n = labels.len();
        if labels.iter().all(|l| *l == labels[0]) {
            return LabeledPartition {
                alpha,
                cuts: Vec::new(),
                labels: vec![labels[0].clone()],
            };
        }
        let keep: Vec<bool> = (0..n)
            .map(|i| labels[i] != labels[(i + n - 1) % n])
            .collect();
        let mut c = Vec::new();
        let mut l = Vec::new();
        for (i, (cut, label)) in cuts.into_iter().zip(labels).enumerate() {
            if keep[i] {
                c.push(cut);
                l.push(label);
            }
        }
        LabeledPartition {
            alpha,
            cuts: c,
            labels: l,
        }
    }

    /// The partition with a single set.
    pub fn trivial(alpha: &Alpha, label: Symbol) -> Self {
        LabeledPartition {
            alpha: alpha.clone(),
            cuts: Vec::new(),
            labels: vec![vec![label]],
        }
    }

    /// `P = {[0, 1−α), [1−α, 1)}` labeled `0` and `1`.
    pub fn sturmian(alpha: &Alpha) -> Self {
        LabeledPartition {
            alpha: alpha.clone(),
            cuts: vec![CirclePoint::orbit(0), CirclePoint::orbit(1)],
            labels: vec![vec![sym("0")], vec![sym("1")]],
        }
    }

    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    /// Cutpoints in increasing order of their value in `[0, 1)`.
    pub fn cuts(&self) -> &[CirclePoint] {
        &self.cuts
    }

    /// Arc labels, aligned with [`cuts`](Self::cuts).
    pub fn labels(&self) -> &[Word] {
        &self.labels
    }

    pub fn arc_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.cuts.is_empty()
    }

    /// Arcs with their labels; the trivial partition yields one full-turn arc
    /// based at 0.
    pub fn arcs(&self) -> Vec<(CircleArc, &Word)> {
        if self.is_trivial() {
            let z = CirclePoint::zero();
            return vec![(CircleArc::new(z.clone(), z), &self.labels[0])];
        }
        let n = self.cuts.len();
        (0..n)
            .map(|i| {
                let arc = CircleArc::new(self.cuts[i].clone(), self.cuts[(i + 1) % n].clone());
                (arc, &self.labels[i])
            })
            .collect()
    }

    /// Distinct labels in increasing order.
    pub fn alphabet(&self) -> Vec<Word> {
        let mut a = self.labels.clone();
        a.sort();
        a.dedup();
        a
    }

    /// Lengths of the arcs, aligned with [`cuts`](Self::cuts).
    pub fn arc_lengths(&self) -> Vec<QAlpha> {
        self.arcs()
            .iter()
            .map(|(arc, _)| arc.length(&self.alpha))
            .collect()
    }

    /// Whether every cutpoint is `⟨i⟩` for some `i ≥ 0`.
    pub fn is_sturmian_measurable(&self) -> bool {
        self.cuts
            .iter()
            .all(|c| matches!(c.orbit_index(), Some(i) if i >= 0))
    }

    /// Index of the arc containing `x`.
    pub fn arc_index_of(&self, x: &CirclePoint) -> usize {
        arc_index(&self.alpha, &self.cuts, x)
    }

    pub fn label_at(&self, x: &CirclePoint) -> &Word {
        &self.labels[self.arc_index_of(x)]
    }

    /// The name of `x` of length `n`: the labels of `x, T(x), …, T^{n−1}(x)`
    /// concatenated.
    pub fn name_of_point(&self, x: &CirclePoint, n: usize) -> Word {
        let mut out = Word::new();
        for i in 0..n {
            out.extend(self.label_at(&x.rotate(i as i64)).iter().cloned());
        }
        out
    }

    fn check_alpha(&self, other: &Self) -> Result<()> {
        if self.alpha == other.alpha {
            Ok(())
        } else {
            Err(Error::MismatchedAlpha)
        }
    }

    /// `R ∨ S`; labels are concatenated.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_alpha(other)?;
        let merged = merge_cuts(&self.alpha, &self.cuts, &other.cuts);
        if merged.is_empty() {
            let mut l = self.labels[0].clone();
            l.extend(other.labels[0].iter().cloned());
            return Ok(Self::canonical(self.alpha.clone(), Vec::new(), vec![l]));
        }
        let labels = merged
            .iter()
            .map(|m| {
                let mut l = self.labels[m.left].clone();
                l.extend(other.labels[m.right].iter().cloned());
                l
            })
            .collect();
        let cuts = merged.into_iter().map(|m| m.point).collect();
        Ok(Self::canonical(self.alpha.clone(), cuts, labels))
    }

    /// `T^{−j}R`: every cutpoint `x` is replaced by `T^{−j}(x)`.
    pub fn preimage(&self, j: i64) -> Self {
        if self.is_trivial() {
            return self.clone();
        }
        let moved: Vec<CirclePoint> = self.cuts.iter().map(|c| c.rotate(-j)).collect();
        let s = rotation_start(&self.alpha, &moved);
        let n = moved.len();
        LabeledPartition {
            alpha: self.alpha.clone(),
            cuts: (0..n).map(|i| moved[(s + i) % n].clone()).collect(),
            labels: (0..n).map(|i| self.labels[(s + i) % n].clone()).collect(),
        }
    }

    /// `R^n = R ∨ T^{−1}R ∨ … ∨ T^{−(n−1)}R` with the default limits.
    pub fn refine(&self, n: usize) -> Result<Self> {
        self.refine_with(n, Limits::default())
    }

    pub fn refine_with(&self, n: usize, limits: Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "refinement power must be positive".into(),
            ));
        }
        let sk = refine_skeleton(self, n, limits)?;
        Ok(self.materialize(sk, n))
    }

    /// `R^n` with every name replaced by a fresh one-letter symbol. Cheaper
    /// than [`refine`](Self::refine) for large `n`, where names get long.
    pub fn refine_compressed(&self, n: usize, limits: Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "refinement power must be positive".into(),
            ));
        }
        let sk = refine_skeleton(self, n, limits)?;
        Ok(LabeledPartition {
            alpha: self.alpha.clone(),
            labels: sk
                .blocks
                .iter()
                .map(|b| vec![sym(&b.to_string())])
                .collect(),
            cuts: sk.cuts,
        })
    }

    /// Attaches names of length `n` to the skeleton of `R^n`.
    fn materialize(&self, sk: Skeleton, n: usize) -> Self {
        let labels = if sk.cuts.is_empty() {
            vec![self.name_of_point(&CirclePoint::zero(), n)]
        } else {
            sk.cuts.iter().map(|c| self.name_of_point(c, n)).collect()
        };
        LabeledPartition {
            alpha: self.alpha.clone(),
            cuts: sk.cuts,
            labels,
        }
    }

    /// Whether every arc of `self` lies inside a single set of `other`.
    pub fn is_finer(&self, other: &Self) -> Result<bool> {
        self.check_alpha(other)?;
        let alpha = &self.alpha;
        // Every boundary point of `other` must be a boundary point of `self`.
        let mut i = 0;
        for c in &other.cuts {
            while i < self.cuts.len() && alpha.compare(&self.cuts[i], c) == Ordering::Less {
                i += 1;
            }
            if i == self.cuts.len() || self.cuts[i] != *c {
                return Ok(false);
            }
        }
        let mut map: BTreeMap<&Word, &Word> = BTreeMap::new();
        for (arc, label) in self.arcs() {
            let target = other.label_at(&arc.start);
            if *map.entry(label).or_insert(target) != target {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn cut_index_profile(&self) -> Result<CutIndexProfile> {
        if self.is_trivial() {
            return Err(Error::TrivialPartition);
        }
        let mut indices = Vec::with_capacity(self.cuts.len());
        for c in &self.cuts {
            match c.orbit_index() {
                Some(i) if i >= 0 => indices.push(i as u64),
                _ => return Err(Error::NotSturmianMeasurable(c.to_string())),
            }
        }
        indices.sort_unstable();
        let ell = indices[0];
        let n = indices[indices.len() - 1] - ell;
        Ok(CutIndexProfile { indices, ell, n })
    }

    /// Whether every set of the partition is a single arc.
    pub fn is_interval_partition(&self) -> bool {
        self.alphabet().len() == self.arc_count()
    }

    /// `(ℓ, m)` if the partition equals `T^{−ℓ}P^m` up to labels.
    pub fn equals_sturmian_refinement(&self) -> Option<(u64, u64)> {
        sturmian_shape(&self.cuts, self.is_interval_partition())
    }

    /// Whether the two partitions have the same cutpoints and the same sets,
    /// ignoring the names of the labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.alpha == other.alpha && Skeleton::of(self) == Skeleton::of(other)
    }

    /// Replaces every label by a fresh one-letter symbol `0, 1, 2, …`, numbered
    /// by first occurrence.
    pub fn compress_labels(&self) -> Self {
        let sk = Skeleton::of(self);
        LabeledPartition {
            alpha: self.alpha.clone(),
            cuts: self.cuts.clone(),
            labels: sk
                .blocks
                .iter()
                .map(|b| vec![sym(&b.to_string())])
                .collect(),
        }
    }
}

fn arc_index(alpha: &Alpha, cuts: &[CirclePoint], x: &CirclePoint) -> usize {
    if cuts.is_empty() {
        return 0;
    }
    let count = cuts.partition_point(|c| alpha.compare(c, x) != Ordering::Greater);
    if count == 0 {
        cuts.len() - 1
    } else {
        count - 1
    }
}

/// Index of the smallest point in a list that is a cyclic rotation of a sorted
/// list.
fn rotation_start(alpha: &Alpha, pts: &[CirclePoint]) -> usize {
    (1..pts.len())
        .find(|&i| alpha.compare(&pts[i], &pts[i - 1]) == Ordering::Less)
        .unwrap_or(0)
}

struct Merged {
    point: CirclePoint,
    left: usize,
    right: usize,
}

/// Union of two sorted cut lists, recording for every point the arc of each
/// input that contains it.
fn merge_cuts(alpha: &Alpha, a: &[CirclePoint], b: &[CirclePoint]) -> Vec<Merged> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut ia = a.len().saturating_sub(1);
    let mut ib = b.len().saturating_sub(1);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            Ordering::Greater
        } else if j == b.len() {
            Ordering::Less
        } else {
            alpha.compare(&a[i], &b[j])
        };
        let point = match ord {
            Ordering::Less => {
                ia = i;
                i += 1;
                a[ia].clone()
            }
            Ordering::Greater => {
                ib = j;
                j += 1;
                b[ib].clone()
            }
            Ordering::Equal => {
                ia = i;
                ib = j;
                i += 1;
                j += 1;
                a[ia].clone()
            }
        };
        out.push(Merged {
            point,
            left: ia,
            right: ib,
        });
    }
    out
}

fn sturmian_shape(cuts: &[CirclePoint], interval: bool) -> Option<(u64, u64)> {
    if cuts.len() < 2 || !interval {
        return None;
    }
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for c in cuts {
        let i = c.orbit_index().filter(|&i| i >= 0)?;
        lo = lo.min(i);
        hi = hi.max(i);
    }
    // Cutpoints are distinct, so a range of the right size is the full range.
    if (hi - lo) as usize + 1 == cuts.len() {
        Some((lo as u64, (hi - lo) as u64))
    } else {
        None
    }
}

/// The structure of a partition without its labels: cutpoints and a block id
/// per arc, ids numbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    cuts: Vec<CirclePoint>,
    blocks: Vec<u32>,
    block_count: u32,
}

impl Skeleton {
    pub fn of(p: &LabeledPartition) -> Self {
        let mut ids: BTreeMap<&Word, u32> = BTreeMap::new();
        let blocks = p
            .labels
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Skeleton {
            cuts: p.cuts.clone(),
            blocks,
            block_count: ids.len() as u32,
        }
    }

    pub fn cuts(&self) -> &[CirclePoint] {
        &self.cuts
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn arc_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count as usize
    }

    pub fn is_interval_partition(&self) -> bool {
        self.block_count() == self.arc_count()
    }

    pub fn equals_sturmian_refinement(&self) -> Option<(u64, u64)> {
        sturmian_shape(&self.cuts, self.is_interval_partition())
    }

    fn preimage(&self, alpha: &Alpha, j: i64) -> Self {
        if self.cuts.is_empty() {
            return self.clone();
        }
        let moved: Vec<CirclePoint> = self.cuts.iter().map(|c| c.rotate(-j)).collect();
        let s = rotation_start(alpha, &moved);
        let n = moved.len();
        let mut ids = vec![u32::MAX; self.block_count as usize];
        let mut next = 0;
        let mut cuts = Vec::with_capacity(n);
        let mut blocks = Vec::with_capacity(n);
        for i in 0..n {
            cuts.push(moved[(s + i) % n].clone());
            let b = self.blocks[(s + i) % n] as usize;
            if ids[b] == u32::MAX {
                ids[b] = next;
                next += 1;
            }
            blocks.push(ids[b]);
        }
        Skeleton {
            cuts,
            blocks,
            block_count: next,
        }
    }

    fn join(&self, alpha: &Alpha, other: &Self) -> Self {
        let merged = merge_cuts(alpha, &self.cuts, &other.cuts);
        if merged.is_empty() {
            return self.clone();
        }
        let mut ids: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut blocks = Vec::with_capacity(merged.len());
        let mut cuts = Vec::with_capacity(merged.len());
        for m in merged {
            let key = (self.blocks[m.left], other.blocks[m.right]);
            let next = ids.len() as u32;
            blocks.push(*ids.entry(key).or_insert(next));
            cuts.push(m.point);
        }
        Skeleton {
            cuts,
            blocks,
            block_count: ids.len() as u32,
        }
    }
}

/// Incremental computation of `R, R^2, R^3, …` on skeletons.
pub struct Refinements<'a> {
    base: &'a LabeledPartition,
    base_skeleton: Skeleton,
    current: Skeleton,
    power: usize,
    limits: Limits,
}

impl<'a> Refinements<'a> {
    pub fn new(base: &'a LabeledPartition, limits: Limits) -> Self {
        let sk = Skeleton::of(base);
        Refinements {
            base,
            base_skeleton: sk.clone(),
            current: sk,
            power: 1,
            limits,
        }
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn current(&self) -> &Skeleton {
        &self.current
    }

    /// Moves from `R^n` to `R^{n+1}`.
    pub fn advance(&mut self) -> Result<&Skeleton> {
        if self.power + 1 > self.limits.max_power {
            return Err(Error::ResourceCap {
                what: "refinement power",
                requested: self.power + 1,
                limit: self.limits.max_power,
            });
        }
        let alpha = &self.base.alpha;
        let shifted = self.base_skeleton.preimage(alpha, self.power as i64);
        let next = self.current.join(alpha, &shifted);
        check_cuts(&next, self.limits)?;
        self.current = next;
        self.power += 1;
        Ok(&self.current)
    }

    pub fn advance_to(&mut self, n: usize) -> Result<&Skeleton> {
        if n > self.limits.max_power {
            return Err(Error::ResourceCap {
                what: "refinement power",
                requested: n,
                limit: self.limits.max_power,
            });
        }
        while self.power < n {
            self.advance()?;
        }
        Ok(&self.current)
    }

    /// The current refinement with its names as labels.
    pub fn materialize(&self) -> LabeledPartition {
        self.base.materialize(self.current.clone(), self.power)
    }
}

fn check_cuts(sk: &Skeleton, limits: Limits) -> Result<()> {
    if sk.arc_count() > limits.max_cuts {
        Err(Error::ResourceCap {
            what: "cutpoints",
            requested: sk.arc_count(),
            limit: limits.max_cuts,
        })
    } else {
        Ok(())
    }
}

/// Skeleton of `R^n`, using `R^{a+b} = R^a ∨ T^{−a}(R^b)` with repeated
/// doubling.
pub fn refine_skeleton(r: &LabeledPartition, n: usize, limits: Limits) -> Result<Skeleton> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "refinement power must be positive".into(),
        ));
    }
    if n > limits.max_power {
        return Err(Error::ResourceCap {
            what: "refinement power",
            requested: n,
            limit: limits.max_power,
        });
    }
    let alpha = &r.alpha;
    let mut acc: Option<(Skeleton, usize)> = None;
    let mut pw = Skeleton::of(r);
    let mut pw_len = 1usize;
    let mut rem = n;
    loop {
        if rem & 1 == 1 {
            acc = Some(match acc {
                None => (pw.clone(), pw_len),
                Some((a, len)) => {
                    let joined = a.join(alpha, &pw.preimage(alpha, len as i64));
                    check_cuts(&joined, limits)?;
                    (joined, len + pw_len)
                }
            });
        }
        rem >>= 1;
        if rem == 0 {
            break;
        }
        pw = pw.join(alpha, &pw.preimage(alpha, pw_len as i64));
        check_cuts(&pw, limits)?;
        pw_len *= 2;
    }
    Ok(acc.expect("n is positive").0)
}

/// Witness `R^k = T^{−ℓ}P^m` found by direct search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem1Witness {
    pub k: usize,
    pub ell: u64,
    pub m: u64,
    /// Largest cut-index of `R`, the least `n` with `R` rougher than `P^n`.
    pub n: u64,
}

impl Theorem1Witness {
    /// `ℓ < n`.
    pub fn ell_bound_holds(&self) -> bool {
        self.ell < self.n
    }
}

fn require_theorem_input(r: &LabeledPartition) -> Result<CutIndexProfile> {
    if r.is_trivial() {
        return Err(Error::TrivialPartition);
    }
    r.cut_index_profile()
}

/// Least `k ≤ max_power` such that `R^k = T^{−ℓ}P^m` for some `ℓ`, `m`.
pub fn theorem1_witness(r: &LabeledPartition, max_power: usize) -> Result<Theorem1Witness> {
    let profile = require_theorem_input(r)?;
    let limits = Limits {
        max_power,
        ..Limits::default()
    };
    let mut chain = Refinements::new(r, limits);
    loop {
        if let Some((ell, m)) = chain.current().equals_sturmian_refinement() {
            return Ok(Theorem1Witness {
                k: chain.power(),
                ell,
                m,
                n: profile.indices[profile.indices.len() - 1],
            });
        }
        if chain.power() >= max_power {
            return Err(Error::PowerExhausted(max_power));
        }
        chain.advance()?;
    }
}

/// Parameters of the refinement bound for a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem2Bound {
    pub ell: u64,
    pub n: u64,
    pub k: usize,
    /// Refinement power `r_{k+3} + 2r_k − n − 2`.
    pub big_k: usize,
    /// Target power `r_{k+3} + 2r_k − 3`.
    pub big_m: usize,
}

/// Convergent table deep enough to locate `n` and read `r_{k+3}`.
pub fn table_for(alpha: &Alpha, n: u64) -> Result<(ConvergentTable, usize)> {
    let mut depth = 8;
    loop {
        let table = ConvergentTable::new(alpha, depth)?;
        match table.locate_k(n) {
            Ok(k) if k + 3 <= depth => return Ok((table, k)),
            Ok(_) | Err(Error::TableTooShallow { .. }) => depth *= 2,
            Err(e) => return Err(e),
        }
    }
}

pub fn theorem2_bound(r: &LabeledPartition) -> Result<Theorem2Bound> {
    let profile = require_theorem_input(r)?;
    let (table, k) = table_for(r.alpha(), profile.n)?;
    let rk3 = table.r(k + 3)?;
    let rk = table.r(k)?;
    let n = profile.n as i128;
    let big_k = rk3 + 2 * rk - n - 2;
    let big_m = rk3 + 2 * rk - 3;
    let to_usize = |x: i128| usize::try_from(x).map_err(|_| Error::Overflow("refinement bound"));
    Ok(Theorem2Bound {
        ell: profile.ell,
        n: profile.n,
        k,
        big_k: to_usize(big_k)?,
        big_m: to_usize(big_m)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem2Report {
    pub holds: bool,
    pub bound: Theorem2Bound,
    pub lhs_arcs: usize,
    pub rhs_arcs: usize,
    /// Least power `j` with `R^j = T^{−ℓ'}P^{m'}`, with `(ℓ', m')`, if one
    /// occurs up to the bound.
    pub first_sturmian: Option<(usize, u64, u64)>,
}

/// Compares `R^K` with `T^{−ℓ}P^M` exactly.
pub fn verify_theorem2(r: &LabeledPartition, limits: Limits) -> Result<Theorem2Report> {
    let bound = theorem2_bound(r)?;
    let mut lhs = Refinements::new(r, limits);
    let mut first = None;
    loop {
        if first.is_none() {
            if let Some((ell, m)) = lhs.current().equals_sturmian_refinement() {
                first = Some((lhs.power(), ell, m));
            }
        }
        if lhs.power() >= bound.big_k {
            break;
        }
        lhs.advance()?;
    }
    let p = LabeledPartition::sturmian(r.alpha());
    let rhs = refine_skeleton(&p, bound.big_m, limits)?.preimage(r.alpha(), bound.ell as i64);
    let lhs = lhs.current();
    Ok(Theorem2Report {
        holds: *lhs == rhs,
        bound,
        lhs_arcs: lhs.arc_count(),
        rhs_arcs: rhs.arc_count(),
        first_sturmian: first,
    })
}

/// Name of the `i`-th label used by generated partitions: `A, B, …, Z, L26, …`.
pub fn label_name(i: usize) -> Symbol {
    if i < 26 {
        let c = (b'A' + i as u8) as char;
        sym(c.encode_utf8(&mut [0u8; 4]))
    } else {
        sym(&format!("L{i}"))
    }
}

/// Coarsening of `P^n` that gives arc `i` (from `⟨0⟩` in circle order) the
/// label `label_name(assignment[i])`.
pub fn coarsening(alpha: &Alpha, n: usize, assignment: &[usize]) -> Result<LabeledPartition> {
    if assignment.len() != n + 1 {
        return Err(Error::InvalidArgument(format!(
            "P^{n} has {} arcs, got {} labels",
            n + 1,
            assignment.len()
        )));
    }
    let mut cuts: Vec<CirclePoint> = (0..=n as i64).map(CirclePoint::orbit).collect();
    cuts.sort_by(|x, y| alpha.compare(x, y));
    let arcs = cuts
        .into_iter()
        .zip(assignment)
        .map(|(c, &a)| (c, vec![label_name(a)]))
        .collect();
    LabeledPartition::from_arcs(alpha, arcs)
}

/// Random surjective labeling of the arcs of `P^n` with `num_labels` labels,
/// deterministic for a given seed.
pub fn random_coarsening(
    alpha: &Alpha,
    n: usize,
    num_labels: usize,
    seed: u64,
) -> Result<LabeledPartition> {
    if n == 0 || num_labels < 2 || num_labels > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "cannot label the {} arcs of P^{n} surjectively with {num_labels} labels",
            n + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let assignment: Vec<usize> = (0..=n).map(|_| rng.gen_range(0..num_labels)).collect();
        let mut used = vec![false; num_labels];
        for &a in &assignment {
            used[a] = true;
        }
        if used.iter().all(|&u| u) {
            return coarsening(alpha, n, &assignment);
        }
    }
}

/// All non-trivial coarsenings of `P^n`, one per partition of its arcs into
/// blocks (labels up to renaming).
pub fn all_coarsenings(alpha: &Alpha, n: usize) -> Result<Vec<LabeledPartition>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n + 1];
    // Restricted growth strings enumerate set partitions.
    loop {
        if rgs.iter().any(|&x| x > 0) {
            out.push(coarsening(alpha, n, &rgs)?);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in &mut rgs[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Partition with cuts at `j/(q·L)` for `L` labels, the labels repeating
/// cyclically, so that it is invariant under rotation by `1/q`.
pub fn rotation_symmetric_partition(
    alpha: &Alpha,
    q: usize,
    labels: &[Symbol],
) -> Result<LabeledPartition> {
    if q == 0 || labels.len() < 2 {
        return Err(Error::InvalidArgument(
            "need a positive period and at least two labels".into(),
        ));
    }
    let total = (q * labels.len()) as i128;
    let arcs = (0..total)
        .map(|j| {
            let point = CirclePoint::rational(Rational::new(j, total));
            (point, vec![labels[j as usize % labels.len()].clone()])
        })
        .collect();
    LabeledPartition::from_arcs(alpha, arcs)
}

/// `[0, 1/4) ∪ [1/2, 3/4)` against its complement.
pub fn symmetric_partition(alpha: &Alpha) -> LabeledPartition {
    rotation_symmetric_partition(alpha, 2, &[sym("X"), sym("Y")])
        .expect("fixed parameters are valid")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub max_n: usize,
    /// Powers `n ≤ max_n` at which `R^n` consists of intervals only.
    pub connected_at: Vec<usize>,
}

impl SymmetryReport {
    pub fn all_disconnected(&self) -> bool {
        self.connected_at.is_empty()
    }
}

/// Checks `R^n` for `n = 1, …, max_n` for sets that are not intervals.
pub fn disconnection_check(r: &LabeledPartition, max_n: usize) -> Result<SymmetryReport> {
    let limits = Limits::default();
    let mut chain = Refinements::new(r, limits);
    let mut connected_at = Vec::new();
    for n in 1..=max_n {
        let sk = chain.advance_to(n)?;
        if sk.is_interval_partition() {
            connected_at.push(n);
        }
    }
    Ok(SymmetryReport {
        max_n,
        connected_at,
    })
}

pub fn symmetric_counterexample_check(alpha: &Alpha, max_n: usize) -> Result<SymmetryReport> {
    disconnection_check(&symmetric_partition(alpha), max_n)
}
