//! Continued fraction convergents and the derived sequences `q_k`, `r_k`, `η_k`.
//!
//! Indexing: `c_k` starts at `k = 1`; `p_k`, `q_k`, `r_k` and `η_k` start at
//! `k = 0`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Alpha, CircleArc, CirclePoint, QAlpha};

pub fn expand_cf(alpha: &Alpha, depth: usize) -> Result<Vec<u64>> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    alpha.cf_coefficients(depth)
}

#[derive(Clone, Debug)]
pub struct ConvergentTable {
    // c[0] is a placeholder so that c[k] is c_k.
    c: Vec<u64>,
    p: Vec<i128>,
    q: Vec<i128>,
    r: Vec<i128>,
    eta: Vec<QAlpha>,
}

impl ConvergentTable {
    pub fn new(alpha: &Alpha, depth: usize) -> Result<Self> {
        let coeffs = expand_cf(alpha, depth)?;
        let mut c = Vec::with_capacity(depth + 1);
        c.push(0);
        c.extend_from_slice(&coeffs);

        let c1 = c[1] as i128;
        let mut p = alloc::vec![0i128, 1];
        let mut q = alloc::vec![1i128, c1];
        let mut eta = alloc::vec![QAlpha::alpha(), QAlpha::from_integers(1, -c1)];
        for k in 2..=depth {
            let ck = c[k] as i128;
            p.push(checked_step(ck, p[k - 1], p[k - 2])?);
            q.push(checked_step(ck, q[k - 1], q[k - 2])?);
            let (prev, prev2) = (&eta[k - 1], &eta[k - 2]);
            let s = checked_step(-ck, *prev.s.numer(), *prev2.s.numer())?;
            let t = checked_step(-ck, *prev.t.numer(), *prev2.t.numer())?;
            eta.push(QAlpha::from_integers(s, t));
        }
        let mut r = alloc::vec![1i128];
        for k in 1..=depth {
            r.push(q[k].checked_add(q[k - 1]).ok_or(Error::Overflow("r_k"))?);
        }
        Ok(ConvergentTable { c, p, q, r, eta })
    }

    /// Largest `k` for which `p_k`, `q_k`, `r_k`, `η_k` are available.
    pub fn depth(&self) -> usize {
        self.c.len() - 1
    }

    fn check(&self, k: usize) -> Result<()> {
        if k > self.depth() {
            Err(Error::TableTooShallow {
                depth: self.depth(),
                needed: k,
            })
        } else {
            Ok(())
        }
    }

    /// `c_k` for `1 ≤ k ≤ depth`.
    pub fn c(&self, k: usize) -> Result<u64> {
        if k == 0 {
            return Err(Error::InvalidArgument("c_k is indexed from 1".into()));
        }
        self.check(k)?;
        Ok(self.c[k])
    }

    pub fn p(&self, k: usize) -> Result<i128> {
        self.check(k)?;
        Ok(self.p[k])
    }

    pub fn q(&self, k: usize) -> Result<i128> {
        self.check(k)?;
        Ok(self.q[k])
    }

    pub fn r(&self, k: usize) -> Result<i128> {
        self.check(k)?;
        Ok(self.r[k])
    }

    /// `η_k = |q_k α − p_k|` as an exact element of `Q(α)`.
    pub fn eta(&self, k: usize) -> Result<&QAlpha> {
        self.check(k)?;
        Ok(&self.eta[k])
    }

    pub fn qs(&self) -> &[i128] {
        &self.q
    }

    pub fn ps(&self) -> &[i128] {
        &self.p
    }

    pub fn rs(&self) -> &[i128] {
        &self.r
    }

    /// The unique `k ≥ 1` with `r_{k−1} ≤ n < r_k`.
    pub fn locate_k(&self, n: u64) -> Result<usize> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let n = n as i128;
        (1..=self.depth())
            .find(|&k| self.r[k - 1] <= n && n < self.r[k])
            .ok_or(Error::TableTooShallow {
                depth: self.depth(),
                needed: self.depth() + 1,
            })
    }

    /// The arc `I_k`: `[−η_k, 0)` for even `k`, `[0, η_k)` for odd `k`.
    ///
    /// With `T(x) = x + α` this orientation makes `I_k` the base of the tower
    /// `Λ(I_k, 0, q_{k−1})` whose endpoints are `⟨q_k⟩` and `⟨0⟩`.
    pub fn interval(&self, k: usize) -> Result<CircleArc> {
        let eta = self.eta(k)?;
        let zero = CirclePoint::zero();
        if k.is_multiple_of(2) {
            let start = CirclePoint::new(-eta.s, -eta.t);
            Ok(CircleArc::new(start, zero))
        } else {
            let end = CirclePoint::new(eta.s, eta.t);
            Ok(CircleArc::new(zero, end))
        }
    }
}

pub fn convergents(alpha: &Alpha, depth: usize) -> Result<ConvergentTable> {
    ConvergentTable::new(alpha, depth)
}

pub fn locate_k(table: &ConvergentTable, n: u64) -> Result<usize> {
    table.locate_k(n)
}

pub fn interval_i(table: &ConvergentTable, k: usize) -> Result<CircleArc> {
    table.interval(k)
}

fn checked_step(c: i128, prev: i128, prev2: i128) -> Result<i128> {
    c.checked_mul(prev)
        .and_then(|x| x.checked_add(prev2))
        .ok_or(Error::Overflow("convergents"))
}

/// `η_k` written as `s + t·α` with integer coordinates, for display.
pub fn eta_integers(eta: &QAlpha) -> (i128, i128) {
    debug_assert!(eta.s.is_integer() && eta.t.is_integer());
    (eta.s.to_integer(), eta.t.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AlphaSpec;
    use alloc::vec;

    #[test]
    fn expand_examples() {
        assert_eq!(expand_cf(&Alpha::golden(), 5).unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(expand_cf(&Alpha::silver(), 4).unwrap(), vec![2, 2, 2, 2]);
        let a = Alpha::new(AlphaSpec::Cf {
            prefix: vec![1, 2],
            period: vec![3],
        })
        .unwrap();
        assert_eq!(expand_cf(&a, 5).unwrap(), vec![1, 2, 3, 3, 3]);
        assert!(matches!(
            expand_cf(&a, crate::exact::MAX_CF_DEPTH + 1),
            Err(Error::DepthCap { .. })
        ));
    }

    #[test]
    fn convergent_examples() {
        let g = ConvergentTable::new(&Alpha::golden(), 5).unwrap();
        assert_eq!(g.qs(), &[1, 1, 2, 3, 5, 8]);
        assert_eq!(g.rs(), &[1, 2, 3, 5, 8, 13]);
        assert_eq!(g.ps(), &[0, 1, 1, 2, 3, 5]);
        let s = ConvergentTable::new(&Alpha::silver(), 3).unwrap();
        assert_eq!(s.qs(), &[1, 2, 5, 12]);
        assert_eq!(s.rs(), &[1, 3, 7, 17]);
    }

    #[test]
    fn locate_examples() {
        let g = ConvergentTable::new(&Alpha::golden(), 8).unwrap();
        assert_eq!(g.locate_k(1).unwrap(), 1);
        assert_eq!(g.locate_k(4).unwrap(), 3);
        let s = ConvergentTable::new(&Alpha::silver(), 8).unwrap();
        assert_eq!(s.locate_k(7).unwrap(), 3);
        assert!(matches!(
            ConvergentTable::new(&Alpha::golden(), 2)
                .unwrap()
                .locate_k(3),
            Err(Error::TableTooShallow { .. })
        ));
    }

    #[test]
    fn interval_examples() {
        let alpha = Alpha::golden();
        let g = ConvergentTable::new(&alpha, 4).unwrap();
        let one = QAlpha::from_integers(1, 0);
        // I_0 = [−α, 0) = [1 − α, 1)
        let i0 = g.interval(0).unwrap();
        assert_eq!(alpha.value(&i0.start), QAlpha::from_integers(1, -1));
        assert_eq!(i0.length(&alpha), QAlpha::alpha());
        // I_1 = [0, η_1) = [0, 1 − α)
        let i1 = g.interval(1).unwrap();
        assert_eq!(alpha.value(&i1.start), QAlpha::zero());
        assert_eq!(alpha.value(&i1.end), one.clone() - QAlpha::alpha());
        // I_2 = [−η_2, 0) with η_2 = 2α − 1, so it starts at 2 − 2α
        let i2 = g.interval(2).unwrap();
        assert_eq!(alpha.value(&i2.start), QAlpha::from_integers(2, -2));
        assert_eq!(i2.length(&alpha), QAlpha::from_integers(-1, 2));
    }

    #[test]
    fn eta_matches_definition() {
        let alpha = Alpha::golden();
        let g = ConvergentTable::new(&alpha, 20).unwrap();
        for k in 0..=20 {
            let signed = QAlpha::from_integers(-g.p(k).unwrap(), g.q(k).unwrap());
            let abs = if k % 2 == 0 { signed } else { -signed };
            assert_eq!(g.eta(k).unwrap(), &abs);
        }
    }
}
