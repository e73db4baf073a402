//! Subsets, permutations and binomials over a ground set `[n] = {1, ..., n}`.
//!
//! Elements are 1-based at every public boundary and 0-based inside bit masks:
//! element `i` lives at bit `i - 1`. Subsets of a fixed size are ordered
//! colexicographically, which for bit masks is plain numeric order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 40;

/// Exact binomial coefficient `C(n, r)`; zero when `r > n`.
pub fn binom(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::default();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, r)` in machine words. Exact for every `n <= 62`.
pub fn binom_u64(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// A subset of `[n]` stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    bits: u64,
    n: u8,
}

impl KSubset {
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(KSubset { bits, n: n as u8 })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if n < 64 && bits >> n != 0 {
            return Err(Error::ElementOutOfRange {
                element: 64 - bits.leading_zeros() as usize,
                n,
            });
        }
        Ok(KSubset { bits, n: n as u8 })
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn ground(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.ground() && self.bits & (1 << (element - 1)) != 0
    }

    /// Sorted 1-based elements.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize + 1);
            b &= b - 1;
        }
        out
    }

    /// `[n]` minus this set.
    pub fn complement(&self) -> KSubset {
        let full = full_mask(self.ground());
        KSubset {
            bits: full & !self.bits,
            n: self.n,
        }
    }

    pub fn intersection_size(&self, other: &KSubset) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch(self.ground(), other.ground()));
        }
        Ok((self.bits & other.bits).count_ones() as usize)
    }

    /// Elementwise image `{ p(x) : x in self }`.
    pub fn image(&self, p: &Permutation) -> Result<KSubset> {
        if p.points() != self.ground() {
            return Err(Error::GroundSetMismatch(self.ground(), p.points()));
        }
        let mut bits = 0u64;
        let mut b = self.bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            bits |= 1 << p.images[i];
            b &= b - 1;
        }
        Ok(KSubset { bits, n: self.n })
    }

    /// Colexicographic rank among subsets of the same size.
    pub fn rank(&self) -> u64 {
        let mut r = 0u64;
        let mut b = self.bits;
        let mut j = 1;
        while b != 0 {
            let pos = b.trailing_zeros() as usize;
            r += binom_u64(pos, j);
            j += 1;
            b &= b - 1;
        }
        r
    }

    /// Inverse of [`KSubset::rank`].
    pub fn unrank(index: u64, n: usize, k: usize) -> Result<KSubset> {
        check_ground(n)?;
        let count = binom_u64(n, k);
        if index >= count || k > n {
            return Err(Error::RankOutOfRange { index, count });
        }
        let mut rest = index;
        let mut bits = 0u64;
        let mut top = n;
        for j in (1..=k).rev() {
            // largest pos < top with C(pos, j) <= rest
            let mut pos = top - 1;
            while binom_u64(pos, j) > rest {
                pos -= 1;
            }
            rest -= binom_u64(pos, j);
            bits |= 1 << pos;
            top = pos;
        }
        Ok(KSubset { bits, n: n as u8 })
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `[n]` in colex order (Gosper's hack).
pub fn all_subsets(n: usize, k: usize) -> impl Iterator<Item = KSubset> {
    let n8 = n as u8;
    let limit = if n >= 64 { 0 } else { 1u64 << n };
    let mut next = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            let nxt = (((r ^ cur) >> 2) / c) | r;
            if r == 0 || (limit != 0 && nxt >= limit) {
                None
            } else {
                Some(nxt)
            }
        };
        Some(KSubset { bits: cur, n: n8 })
    })
}

/// A bijection of `[n]`, optionally extended by a point `∞` stored last.
///
/// `compose(a, b)` applies `b` first, then `a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    extended: bool,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            extended: false,
        }
    }

    /// Identity on `[n] ∪ {∞}`.
    pub fn identity_extended(n: usize) -> Self {
        Permutation {
            images: (0..=n).collect(),
            extended: true,
        }
    }

    /// From the image list `(p(1), ..., p(n))`, 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<usize> = images.iter().map(|&x| x.wrapping_sub(1)).collect();
        Self::from_zero_based(zero, false)
    }

    /// From 0-based images; on an extended permutation index `n` is `∞`.
    pub fn from_zero_based(images: Vec<usize>, extended: bool) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images, extended })
    }

    /// The transposition exchanging `i` and `i + 1`, for `1 <= i <= n - 1`.
    pub fn transposition(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::TranspositionOutOfRange {
                i,
                max: n.saturating_sub(1),
            });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The `n`-cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
            extended: false,
        }
    }

    /// Number of finite points.
    pub fn points(&self) -> usize {
        self.images.len() - usize::from(self.extended)
    }

    /// Total number of points, counting `∞`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// 0-based image table.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based application; `∞` is the point `n + 1`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.images.len() != other.images.len() || self.extended != other.extended {
            return Err(Error::GroundSetMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
            extended: self.extended,
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation {
            images: inv,
            extended: self.extended,
        }
    }

    /// Restriction to `[n]` of an extended permutation fixing `∞`.
    pub fn restrict(&self) -> Option<Permutation> {
        if !self.extended {
            return Some(self.clone());
        }
        let n = self.points();
        (self.images[n] == n).then(|| Permutation {
            images: self.images[..n].to_vec(),
            extended: false,
        })
    }

    /// Disjoint cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    /// Parse cycle notation such as `(1 2)(3 4 5)` on `[n]`. With
    /// `extended`, the tokens `inf` and `∞` name the extra point. An empty
    /// string or `()` is the identity.
    pub fn parse_cycles(text: &str, n: usize, extended: bool) -> Result<Self> {
        let degree = n + usize::from(extended);
        let mut perm = if extended {
            Self::identity_extended(n)
        } else {
            Self::identity(n)
        };
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| Error::CycleSyntax(text.to_string()))?;
            let body = &rest[1..=body_end];
            rest = rest[body_end + 2..].trim_start();
            let mut points = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let p = if extended && (tok == "inf" || tok == "∞") {
                    n
                } else {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| Error::CycleSyntax(text.to_string()))?;
                    if v == 0 || v > n {
                        return Err(Error::ElementOutOfRange { element: v, n });
                    }
                    v - 1
                };
                points.push(p);
            }
            let mut cycle = vec![usize::MAX; degree];
            for (i, &p) in points.iter().enumerate() {
                if cycle[p] != usize::MAX {
                    return Err(Error::CycleSyntax(text.to_string()));
                }
                cycle[p] = points[(i + 1) % points.len()];
            }
            let cycle: Vec<usize> = cycle
                .iter()
                .enumerate()
                .map(|(i, &x)| if x == usize::MAX { i } else { x })
                .collect();
            let c = Permutation {
                images: cycle,
                extended,
            };
            // cycles written left to right act right to left
            perm = perm.compose(&c)?;
        }
        Ok(perm)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    /// Image-list form `(p(1), ..., p(n))`, with `∞` for the extra point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.points();
        write!(f, "(")?;
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.extended && x == n {
                write!(f, "∞")?;
            } else {
                write!(f, "{}", x + 1)?;
            }
        }
        write!(f, ")")
    }
}

/// The cyclic window `{ phi(ell), phi(ell + 1), ..., phi(ell + k - 1) }`,
/// indices taken modulo `n` into `1..=n`.
pub fn window(phi: &Permutation, ell: i64, k: usize) -> KSubset {
    let n = phi.points();
    let mut bits = 0u64;
    for t in 0..k as i64 {
        let idx = (ell - 1 + t).rem_euclid(n as i64) as usize;
        bits |= 1 << phi.images[idx];
    }
    KSubset { bits, n: n as u8 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> KSubset {
        KSubset::from_elements(n, e).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigUint::from(6u32));
        assert_eq!(binom(12, 4), BigUint::from(12u32 * 11 * 10 * 9 / 24));
        assert_eq!(binom(8, 4), BigUint::from(70u32));
        assert_eq!(binom(3, 5), BigUint::default());
        assert_eq!(binom(40, 20).to_string(), "137846528820");
        assert_eq!(binom_u64(40, 20), 137846528820);
        // past u64 range
        assert_eq!(binom(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn rank_unrank_examples() {
        assert_eq!(set(4, &[1, 2]).rank(), 0);
        assert_eq!(KSubset::unrank(5, 4, 2).unwrap(), set(4, &[3, 4]));
        assert!(KSubset::unrank(6, 4, 2).is_err());
        for i in 0..binom_u64(6, 3) {
            assert_eq!(KSubset::unrank(i, 6, 3).unwrap().rank(), i);
        }
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for n in 1..=12 {
            for k in 0..=n {
                let all: Vec<_> = all_subsets(n, k).collect();
                assert_eq!(all.len() as u64, binom_u64(n, k), "n={n} k={k}");
                for (i, s) in all.iter().enumerate() {
                    assert_eq!(s.len(), k);
                    assert_eq!(s.rank(), i as u64);
                    assert_eq!(KSubset::unrank(i as u64, n, k).unwrap(), *s);
                }
            }
        }
    }

    #[test]
    fn intersections() {
        assert_eq!(set(4, &[1, 2, 3]).intersection_size(&set(4, &[1, 2, 4])), Ok(2));
        assert_eq!(set(4, &[1, 2]).intersection_size(&set(4, &[3, 4])), Ok(0));
        assert_eq!(
            set(12, &[1, 3, 4, 5]).intersection_size(&set(12, &[2, 4, 5, 6])),
            Ok(2)
        );
        assert!(set(4, &[1]).intersection_size(&set(5, &[1])).is_err());
    }

    #[test]
    fn ground_set_cap() {
        assert!(KSubset::from_elements(41, &[1]).is_err());
        assert!(KSubset::from_elements(40, &[40]).is_ok());
        assert!(KSubset::from_elements(5, &[6]).is_err());
    }

    #[test]
    fn windows() {
        let id = Permutation::identity(12);
        assert_eq!(window(&id, 10, 4), set(12, &[10, 11, 12, 1]));
        let t1 = Permutation::transposition(1, 12).unwrap();
        let t2 = Permutation::transposition(2, 12).unwrap();
        assert_eq!(window(&t1, 2, 4), set(12, &[1, 3, 4, 5]));
        assert_eq!(window(&t2, 11, 4), set(12, &[11, 12, 1, 3]));
    }

    #[test]
    fn transpositions() {
        let t1 = Permutation::transposition(1, 12).unwrap();
        let mut expect: Vec<usize> = (1..=12).collect();
        expect.swap(0, 1);
        assert_eq!(t1, Permutation::from_images(&expect).unwrap());

        let t3 = Permutation::transposition(3, 12).unwrap();
        let mut expect: Vec<usize> = (1..=12).collect();
        expect.swap(2, 3);
        assert_eq!(t3, Permutation::from_images(&expect).unwrap());

        let t2 = Permutation::transposition(2, 12).unwrap();
        let mut expect: Vec<usize> = (1..=12).collect();
        expect[..3].copy_from_slice(&[2, 3, 1]);
        assert_eq!(t1.compose(&t2).unwrap(), Permutation::from_images(&expect).unwrap());

        assert!(Permutation::transposition(12, 12).is_err());
        assert!(Permutation::transposition(0, 12).is_err());
    }

    #[test]
    fn group_laws() {
        let t1 = Permutation::transposition(1, 5).unwrap();
        assert!(t1.compose(&t1).unwrap().is_identity());
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(p.inverse(), Permutation::from_images(&[3, 1, 2]).unwrap());
        assert_eq!(Permutation::identity(3).compose(&p).unwrap(), p);
        assert!(p.compose(&Permutation::identity(4)).is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::from_images(&[2, 1, 3]).unwrap();
        let b = Permutation::from_images(&[1, 3, 2]).unwrap();
        let ab = a.compose(&b).unwrap();
        for x in 1..=3 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
    }

    #[test]
    fn cycle_parsing() {
        let p = Permutation::parse_cycles("(1 2)(3 4)", 5, false).unwrap();
        assert_eq!(p, Permutation::from_images(&[2, 1, 4, 3, 5]).unwrap());
        let q = Permutation::parse_cycles("(1,2,3)", 4, false).unwrap();
        assert_eq!(q.apply(1), 2);
        assert_eq!(q.apply(3), 1);
        assert_eq!(q.cycle_type(), vec![1, 3]);
        assert!(Permutation::parse_cycles("", 3, false).unwrap().is_identity());
        let e = Permutation::parse_cycles("(inf 1)", 5, true).unwrap();
        assert_eq!(e.apply(6), 1);
        assert_eq!(e.apply(1), 6);
        assert!(Permutation::parse_cycles("(1 9)", 5, false).is_err());
        assert!(Permutation::parse_cycles("(1 2", 5, false).is_err());
        assert!(Permutation::parse_cycles("(1 2 1)", 5, false).is_err());
    }

    #[test]
    fn transpositions_square_to_identity_exhaustively() {
        for n in 2..=8 {
            for i in 1..n {
                let t = Permutation::transposition(i, n).unwrap();
                assert!(t.compose(&t).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn composition_is_associative_on_s4() {
        let all: Vec<Permutation> = all_perms(4);
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                for c in &all {
                    assert_eq!(
                        ab.compose(c).unwrap(),
                        a.compose(&b.compose(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == used.len() {
                out.push(Permutation::from_zero_based(cur.clone(), false).unwrap());
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_zero_based(v, false).unwrap())
        }

        proptest! {
            #[test]
            fn window_is_cyclic_and_has_k_elements(
                (n, phi) in (2usize..=16).prop_flat_map(|n| (Just(n), perm_strategy(n))),
                ell in -50i64..50,
                k in 1usize..=8,
            ) {
                let k = k.min(n / 2).max(1);
                let w = window(&phi, ell, k);
                prop_assert_eq!(w.len(), k);
                prop_assert_eq!(w, window(&phi, ell + n as i64, k));
            }

            #[test]
            fn inverse_cancels(p in (1usize..=12).prop_flat_map(perm_strategy)) {
                prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
                prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
            }

            #[test]
            fn images_preserve_size(
                (n, p) in (2usize..=12).prop_flat_map(|n| (Just(n), perm_strategy(n))),
                bits in any::<u64>(),
            ) {
                let s = KSubset::from_bits(n, bits & ((1u64 << n) - 1)).unwrap();
                let img = s.image(&p).unwrap();
                prop_assert_eq!(img.len(), s.len());
                prop_assert_eq!(img.image(&p.inverse()).unwrap(), s);
            }
        }
    }
}
