//! Rokhlin towers of the rotation, their codes with respect to a partition,
//! and the word combinatorics built on top of them.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::cf::ConvergentTable;
use crate::error::{Error, Result};
use crate::exact::{Alpha, CircleArc, QAlpha};
use crate::partition::LabeledPartition;
use crate::word::Word;

/// `Λ(A, lo, hi)`: the levels `T^{−m}A` for `lo ≤ m < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RokhlinTower {
    base: CircleArc,
    lo: i64,
    hi: i64,
}

impl RokhlinTower {
    /// Fails with [`Error::NotATower`] unless the levels are pairwise disjoint.
    pub fn new(alpha: &Alpha, base: CircleArc, lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!(
                "empty level range {lo}..{hi}"
            )));
        }
        let tower = RokhlinTower { base, lo, hi };
        if !levels_disjoint(alpha, &tower.levels()) {
            return Err(Error::NotATower);
        }
        Ok(tower)
    }

    /// The arc `A`; the lowest level is `T^{−lo}A`.
    pub fn base(&self) -> &CircleArc {
        &self.base
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn height(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    /// `T^{−m}A`.
    pub fn level(&self, m: i64) -> CircleArc {
        self.base.rotate(-m)
    }

    /// Levels from the bottom (`m = lo`) to the top (`m = hi − 1`).
    pub fn levels(&self) -> Vec<CircleArc> {
        (self.lo..self.hi).map(|m| self.level(m)).collect()
    }

    pub fn top(&self) -> Option<CircleArc> {
        (self.hi > self.lo).then(|| self.level(self.hi - 1))
    }
}

/// Whether arcs of equal length are pairwise disjoint.
fn levels_disjoint(alpha: &Alpha, levels: &[CircleArc]) -> bool {
    if levels.len() < 2 {
        return true;
    }
    let len = levels[0].length(alpha);
    let mut starts: Vec<_> = levels.iter().map(|l| l.start.clone()).collect();
    starts.sort_by(|x, y| alpha.compare(x, y));
    if starts.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let n = starts.len();
    (0..n).all(|i| {
        let gap = alpha.forward_distance(&starts[i], &starts[(i + 1) % n]);
        alpha.cmp_values(&gap, &len) != Ordering::Less
    })
}

/// Whether the arcs are pairwise disjoint and cover the circle.
pub fn tiles_circle(alpha: &Alpha, arcs: &[CircleArc]) -> bool {
    let mut sorted = arcs.to_vec();
    sorted.sort_by(|x, y| alpha.compare(&x.start, &y.start));
    if sorted.windows(2).any(|w| w[0].start == w[1].start) {
        return false;
    }
    let n = sorted.len();
    n > 0 && (0..n).all(|i| sorted[i].end == sorted[(i + 1) % n].start)
}

/// `Λ(I_k, 0, q_{k−1})` and `Λ(I_{k−1}, 0, q_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerPair {
    pub k: usize,
    pub left: RokhlinTower,
    pub right: RokhlinTower,
}

impl TowerPair {
    pub fn levels(&self) -> Vec<CircleArc> {
        let mut v = self.left.levels();
        v.extend(self.right.levels());
        v
    }

    /// Whether the levels are exactly the arcs of `partition`.
    pub fn matches_partition(&self, alpha: &Alpha, partition: &LabeledPartition) -> bool {
        let mut levels = self.levels();
        levels.sort_by(|x, y| alpha.compare(&x.start, &y.start));
        let arcs: Vec<CircleArc> = partition.arcs().into_iter().map(|(a, _)| a).collect();
        levels == arcs
    }
}

fn table(alpha: &Alpha, depth: usize) -> Result<ConvergentTable> {
    ConvergentTable::new(alpha, depth.max(1))
}

fn as_i64(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("tower height"))
}

pub fn three_lengths_towers(alpha: &Alpha, k: usize) -> Result<TowerPair> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let t = table(alpha, k)?;
    let left = RokhlinTower::new(alpha, t.interval(k)?, 0, as_i64(t.q(k - 1)?)?)?;
    let right = RokhlinTower::new(alpha, t.interval(k - 1)?, 0, as_i64(t.q(k)?)?)?;
    Ok(TowerPair { k, left, right })
}

/// `T^{−(q_{k−1} + s·q_k)} I_k ⊂ I_{k−1}` for every `0 ≤ s < c_{k+1}`.
pub fn verify_tower_inclusion(alpha: &Alpha, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let t = table(alpha, k + 1)?;
    let ik = t.interval(k)?;
    let prev = t.interval(k - 1)?;
    let (q0, q1) = (t.q(k - 1)?, t.q(k)?);
    for s in 0..t.c(k + 1)? as i128 {
        let shift = as_i64(q0 + s * q1)?;
        if !ik.rotate(-shift).is_subset_of(&prev, alpha) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `R`-code of a tower: letter `i` is the label of the set of `R`
/// containing level `hi − 1 − i`, so the code is read from the top down.
pub fn tower_code(r: &LabeledPartition, tower: &RokhlinTower) -> Result<Word> {
    let alpha = r.alpha();
    let cuts = r.cuts();
    let len = tower.base().length(alpha);
    let mut code = Word::new();
    for m in (tower.lo()..tower.hi()).rev() {
        let level = tower.level(m);
        let idx = r.arc_index_of(&level.start);
        if !cuts.is_empty() {
            let next = &cuts[(idx + 1) % cuts.len()];
            let room = alpha.forward_distance(&level.start, next);
            if alpha.cmp_values(&room, &len) == Ordering::Less {
                return Err(Error::NotCoded { level: m });
            }
        }
        code.extend(r.labels()[idx].iter().cloned());
    }
    Ok(code)
}

/// `(v, v^c u)`.
pub fn iterate_codes<T: Clone>(u: &[T], v: &[T], c_next: u64) -> (Vec<T>, Vec<T>) {
    (v.to_vec(), power_then(v, c_next, u))
}

fn power_then<T: Clone>(x: &[T], c: u64, y: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(x.len() * c as usize + y.len());
    for _ in 0..c {
        out.extend_from_slice(x);
    }
    out.extend_from_slice(y);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZWords<T> {
    pub w: Vec<T>,
    pub w_prime: Vec<T>,
    pub w_dprime: Vec<T>,
    pub z: Vec<T>,
}

/// `w = v^{c1} u`, `w′ = w^{c2} v`, `w″ = w′^{c3} w`, `z = w″ w′`.
pub fn build_zwords<T: Clone>(u: &[T], v: &[T], c1: u64, c2: u64, c3: u64) -> ZWords<T> {
    let w = power_then(v, c1, u);
    let w_prime = power_then(&w, c2, v);
    let w_dprime = power_then(&w_prime, c3, &w);
    let mut z = w_dprime.clone();
    z.extend_from_slice(&w_prime);
    ZWords {
        w,
        w_prime,
        w_dprime,
        z,
    }
}

/// `{j : word_j = word_{(j − p) mod |word|}}`.
pub fn per_set<T: PartialEq>(word: &[T], p: usize) -> Result<Vec<usize>> {
    let n = word.len();
    if p == 0 || p >= n {
        return Err(Error::InvalidArgument(format!("shift {p} outside 1..{n}")));
    }
    Ok((0..n)
        .filter(|&j| word[j] == word[(j + n - p) % n])
        .collect())
}

/// The cyclic rotation `σ(u) = u_{N−1} u_0 … u_{N−2}`, applied `times` times
/// (negative values rotate the other way).
pub fn rotate_word<T: Clone>(word: &[T], times: i64) -> Vec<T> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let s = times.rem_euclid(n as i64) as usize;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&word[n - s..]);
    out.extend_from_slice(&word[..n - s]);
    out
}

fn check_boundary<T: PartialEq>(u: &[T], v: &[T]) -> Result<()> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::BoundaryConditions("codes must be non-empty"));
    }
    if u[0] == v[0] {
        return Err(Error::BoundaryConditions(
            "u and v start with the same letter",
        ));
    }
    if u[u.len() - 1] == v[v.len() - 1] {
        return Err(Error::BoundaryConditions(
            "u and v end with the same letter",
        ));
    }
    Ok(())
}

/// Checks `[0, |z|−|v|−|u|) ⊆ Per(z)` and `|z|−1, |z|−|v|−|u| ∉ Per(z)`, with
/// `Per` taken at shift `w_prime_len`.
pub fn verify_per_structure<T: PartialEq>(
    u: &[T],
    v: &[T],
    z: &[T],
    w_prime_len: usize,
) -> Result<bool> {
    check_boundary(u, v)?;
    let per = per_set(z, w_prime_len)?;
    let n = z.len();
    let Some(edge) = n.checked_sub(u.len() + v.len()) else {
        return Ok(false);
    };
    let mut member = alloc::vec![false; n];
    for j in per {
        member[j] = true;
    }
    Ok(member[..edge].iter().all(|&b| b) && !member[n - 1] && !member[edge])
}

/// The towers `A`–`E` built from `I = I_{k+3}`, `K = T^{−q_{k+2}}I_{k+3}` and
/// `J = I_{k+2} ∖ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abcde {
    pub k: usize,
    pub i: CircleArc,
    pub j: CircleArc,
    pub kk: CircleArc,
    pub a: RokhlinTower,
    pub b: RokhlinTower,
    pub c: RokhlinTower,
    pub d: RokhlinTower,
    pub e: RokhlinTower,
}

impl Abcde {
    pub fn towers(&self) -> [&RokhlinTower; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    /// Whether the levels of all five towers tile the circle.
    pub fn tiles(&self, alpha: &Alpha) -> bool {
        let levels: Vec<CircleArc> = self.towers().iter().flat_map(|t| t.levels()).collect();
        tiles_circle(alpha, &levels)
    }
}

pub fn decompose_abcde(alpha: &Alpha, k: usize) -> Result<Abcde> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let t = table(alpha, k + 3)?;
    let i = t.interval(k + 3)?;
    let i2 = t.interval(k + 2)?;
    let kk = i.rotate(-as_i64(t.q(k + 2)?)?);
    let j = if kk.start == i2.start {
        CircleArc::new(kk.end.clone(), i2.end.clone())
    } else if kk.end == i2.end {
        CircleArc::new(i2.start.clone(), kk.start.clone())
    } else {
        return Err(Error::Hypotheses(format!(
            "T^-q_(k+2) I_(k+3) is not at an end of I_(k+2) for k = {k}"
        )));
    };
    let rk1 = as_i64(t.r(k)? - 1)?;
    let q2 = as_i64(t.q(k + 2)?)?;
    let q3 = as_i64(t.q(k + 3)?)?;
    Ok(Abcde {
        k,
        a: RokhlinTower::new(alpha, i.clone(), 0, q2)?,
        b: RokhlinTower::new(alpha, kk.clone(), 0, rk1)?,
        c: RokhlinTower::new(alpha, kk.clone(), rk1, q3)?,
        d: RokhlinTower::new(alpha, j.clone(), rk1, q3)?,
        e: RokhlinTower::new(alpha, j.clone(), 0, rk1)?,
        i,
        j,
        kk,
    })
}

/// Outcome of checking the closed-form names of length `r_{k+3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NameFormulaReport {
    pub k: usize,
    pub name_length: usize,
    pub u: Word,
    pub v: Word,
    pub zwords: ZWords<crate::word::Symbol>,
    pub per_structure_holds: bool,
    /// Levels `m` of `Λ(I, 0, r_{k+3})` checked, and those whose name
    /// differs from the rotation of `z`.
    pub abc_checked: usize,
    pub abc_failures: Vec<usize>,
    /// Levels `m` of `E` checked, those whose name differs from the formula
    /// and those where an excluded index lies in `Per`.
    pub e_checked: usize,
    pub e_failures: Vec<usize>,
    pub e_per_failures: Vec<usize>,
    /// Levels `j` where the names on `D` and `C` differ.
    pub d_checked: usize,
    pub d_failures: Vec<usize>,
    /// Whether some levels were skipped because of the level cap.
    pub truncated: bool,
}

impl NameFormulaReport {
    pub fn passed(&self) -> bool {
        self.per_structure_holds
            && self.abc_failures.is_empty()
            && self.e_failures.is_empty()
            && self.e_per_failures.is_empty()
            && self.d_failures.is_empty()
    }
}

pub const DEFAULT_LEVEL_CAP: usize = 2000;

/// Checks the name formulas on every level of the towers `A`–`E` (at most
/// `level_cap` levels per family).
///
/// `R` must be rougher than `P^{r_k−1}` with `0` and `r_k − 1` among its
/// cut-indices.
pub fn verify_name_formulas(
    r: &LabeledPartition,
    k: usize,
    level_cap: usize,
) -> Result<NameFormulaReport> {
    let alpha = r.alpha();
    let t = table(alpha, k + 3)?;
    let rk = t.r(k)? as u64;
    let profile = r
        .cut_index_profile()
        .map_err(|e| Error::Hypotheses(format!("{e}")))?;
    let max = *profile.indices.last().expect("non-trivial");
    if profile.indices[0] != 0 || max != rk - 1 {
        return Err(Error::Hypotheses(format!(
            "cut-indices must lie in 0..={} and include both ends",
            rk - 1
        )));
    }
    let pair = three_lengths_towers(alpha, k)?;
    let u = tower_code(r, &pair.left)?;
    let v = tower_code(r, &pair.right)?;
    let zw = build_zwords(&u, &v, t.c(k + 1)?, t.c(k + 2)?, t.c(k + 3)?);
    let per_structure_holds = verify_per_structure(&u, &v, &zw.z, zw.w_prime.len())?;

    let dec = decompose_abcde(alpha, k)?;
    let n = zw.z.len();
    let q2 = t.q(k + 2)? as usize;
    let q3 = t.q(k + 3)? as usize;
    let rk = rk as usize;
    let mut truncated = false;
    let mut capped = |count: usize| {
        if count > level_cap {
            truncated = true;
        }
        count.min(level_cap)
    };

    let abc_checked = capped(n);
    let abc_failures = (0..abc_checked)
        .filter(|&m| {
            let x = dec.i.start.rotate(-(m as i64));
            r.name_of_point(&x, n) != rotate_word(&zw.z, m as i64 + 1 - n as i64)
        })
        .collect();

    let e_checked = capped(rk - 1);
    let mut e_failures = Vec::new();
    let mut e_per_failures = Vec::new();
    for m in 0..e_checked {
        let x = dec.j.start.rotate(-(m as i64));
        let name = r.name_of_point(&x, n);
        let mut expected = zw.w_dprime[q3 - m - 1..].to_vec();
        expected.extend_from_slice(&zw.w_dprime);
        expected.extend_from_slice(&zw.w_prime[..q2 - m - 1]);
        if name != expected {
            e_failures.push(m);
        }
        let per = per_set(&name, zw.w_prime.len())?;
        let first = (m + zw.w_prime.len()) % n;
        let second = (m + n + 1 - rk) % n;
        if per.contains(&first) || per.contains(&second) {
            e_per_failures.push(m);
        }
    }

    let d_levels = q3 + 1 - rk;
    let d_checked = capped(d_levels);
    let d_failures = (rk - 1..rk - 1 + d_checked)
        .filter(|&j| {
            let x = dec.j.start.rotate(-(j as i64));
            let y = dec.kk.start.rotate(-(j as i64));
            r.name_of_point(&x, n) != r.name_of_point(&y, n)
        })
        .collect();

    Ok(NameFormulaReport {
        k,
        name_length: n,
        u,
        v,
        zwords: zw,
        per_structure_holds,
        abc_checked,
        abc_failures,
        e_checked,
        e_failures,
        e_per_failures,
        d_checked,
        d_failures,
        truncated,
    })
}

/// Lengths of the levels of the two towers: `η_k` on the left, `η_{k−1}` on
/// the right.
pub fn tower_level_lengths(alpha: &Alpha, pair: &TowerPair) -> (QAlpha, QAlpha) {
    (
        pair.left.base().length(alpha),
        pair.right.base().length(alpha),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{coarsening, Limits};
    use crate::word::{word_from_chars, word_to_string};
    use alloc::vec;

    #[test]
    fn towers_tile_like_refinements() {
        for alpha in [Alpha::golden(), Alpha::silver()] {
            let p = LabeledPartition::sturmian(&alpha);
            let t = ConvergentTable::new(&alpha, 8).unwrap();
            for k in 1..=6 {
                let pair = three_lengths_towers(&alpha, k).unwrap();
                let n = t.r(k).unwrap() as usize - 1;
                let pn = p.refine_compressed(n, Limits::default()).unwrap();
                assert!(pair.matches_partition(&alpha, &pn), "k = {k}");
                let (l, r) = tower_level_lengths(&alpha, &pair);
                assert_eq!(&l, t.eta(k).unwrap());
                assert_eq!(&r, t.eta(k - 1).unwrap());
            }
        }
        let g = Alpha::golden();
        let pair = three_lengths_towers(&g, 3).unwrap();
        assert_eq!((pair.left.height(), pair.right.height()), (2, 3));
    }

    #[test]
    fn overlapping_levels_are_rejected() {
        let g = Alpha::golden();
        let t = ConvergentTable::new(&g, 3).unwrap();
        assert!(matches!(
            RokhlinTower::new(&g, t.interval(0).unwrap(), 0, 2),
            Err(Error::NotATower)
        ));
    }

    #[test]
    fn inclusion_examples() {
        assert!(verify_tower_inclusion(&Alpha::golden(), 2).unwrap());
        assert!(verify_tower_inclusion(&Alpha::silver(), 2).unwrap());
        for k in 1..8 {
            assert!(verify_tower_inclusion(&Alpha::golden(), k).unwrap());
            assert!(verify_tower_inclusion(&Alpha::silver(), k).unwrap());
        }
    }

    #[test]
    fn code_examples() {
        let g = Alpha::golden();
        let p = LabeledPartition::sturmian(&g);
        let pair = three_lengths_towers(&g, 2).unwrap();
        assert_eq!(tower_code(&p, &pair.left).unwrap().len(), 1);
        let pair3 = three_lengths_towers(&g, 3).unwrap();
        let v = tower_code(&p, &pair3.right).unwrap();
        assert_eq!(v.len(), 3);
        let top = pair3.right.top().unwrap();
        assert_eq!(p.name_of_point(&top.start, 3), v);
        // A level of the right tower of k = 1 is all of I_0, which contains
        // the cut ⟨1⟩ of P^2.
        let p2 = p.refine(2).unwrap();
        let pair1 = three_lengths_towers(&g, 1).unwrap();
        assert!(matches!(
            tower_code(&p2, &pair1.right),
            Err(Error::NotCoded { .. })
        ));
    }

    #[test]
    fn code_recurrence_golden() {
        let g = Alpha::golden();
        let t = ConvergentTable::new(&g, 10).unwrap();
        let p = LabeledPartition::sturmian(&g);
        let codes = |k: usize| {
            let pair = three_lengths_towers(&g, k).unwrap();
            (
                tower_code(&p, &pair.left).unwrap(),
                tower_code(&p, &pair.right).unwrap(),
            )
        };
        let (mut u, mut v) = codes(1);
        for k in 1..5 {
            let next = iterate_codes(&u, &v, t.c(k + 1).unwrap());
            assert_eq!(next, codes(k + 1));
            u = next.0;
            v = next.1;
        }
    }

    #[test]
    fn word_examples() {
        let (u, v) = (word_from_chars("a"), word_from_chars("b"));
        let (nu, nv) = iterate_codes(&u, &v, 2);
        assert_eq!(word_to_string(&nu), "b");
        assert_eq!(word_to_string(&nv), "bba");
        let zw = build_zwords(&u, &v, 1, 1, 1);
        assert_eq!(word_to_string(&zw.w), "ba");
        assert_eq!(word_to_string(&zw.w_prime), "bab");
        assert_eq!(word_to_string(&zw.w_dprime), "babba");
        assert_eq!(word_to_string(&zw.z), "babbabab");
        assert!(zw.z.ends_with(&zw.w_prime));
        assert_eq!(per_set(b"aaaa", 1).unwrap(), vec![0, 1, 2, 3]);
        assert!(per_set(b"ab", 1).unwrap().is_empty());
        assert!(per_set(b"ab", 2).is_err());
        assert_eq!(per_set(b"babbabab", 3).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert!(verify_per_structure(&u, &v, &zw.z, 3).unwrap());
        assert!(matches!(
            verify_per_structure(&u, &u, &zw.z, 3),
            Err(Error::BoundaryConditions(_))
        ));
        assert_eq!(rotate_word(b"abc", 1), b"cab".to_vec());
        assert_eq!(rotate_word(b"abc", -1), b"bca".to_vec());
    }

    #[test]
    fn golden_zword_length() {
        let g = Alpha::golden();
        let p = LabeledPartition::sturmian(&g);
        let pair = three_lengths_towers(&g, 1).unwrap();
        let u = tower_code(&p, &pair.left).unwrap();
        let v = tower_code(&p, &pair.right).unwrap();
        let t = ConvergentTable::new(&g, 4).unwrap();
        assert_eq!(
            build_zwords(&u, &v, 1, 1, 1).z.len() as i128,
            t.r(4).unwrap()
        );
    }

    #[test]
    fn abcde_tiles() {
        for alpha in [Alpha::golden(), Alpha::silver()] {
            let t = ConvergentTable::new(&alpha, 12).unwrap();
            for k in 1..=5 {
                let d = decompose_abcde(&alpha, k).unwrap();
                assert!(d.tiles(&alpha), "k = {k}");
                assert_eq!(&d.kk.length(&alpha), t.eta(k + 3).unwrap());
                assert_eq!(
                    d.j.length(&alpha),
                    t.eta(k + 2).unwrap().clone() - t.eta(k + 3).unwrap().clone()
                );
                assert_eq!(d.a.lo(), 0);
                assert_eq!(d.a.base(), &t.interval(k + 3).unwrap());
            }
        }
    }

    #[test]
    fn name_formulas_golden() {
        let g = Alpha::golden();
        let p = LabeledPartition::sturmian(&g);
        let rep = verify_name_formulas(&p, 1, DEFAULT_LEVEL_CAP).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.abc_checked, 8);
        // r_2 − 1 = 2 with arcs labeled A, B, C.
        let r = coarsening(&g, 2, &[0, 1, 2]).unwrap();
        let rep = verify_name_formulas(&r, 2, DEFAULT_LEVEL_CAP).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(matches!(
            verify_name_formulas(&p, 2, DEFAULT_LEVEL_CAP),
            Err(Error::Hypotheses(_))
        ));
    }
}
