//! Explicit automorphisms of merged Johnson graphs and the equipartition
//! counting behind the three-color argument.
//!
//! [`classify`] sorts a spec into one of the seven automorphism-group
//! families of merged Johnson graphs; [`generators`] emits vertex maps that
//! generate the group (or, for `J(12,4)_{1,3}` and `J(12,4)_{2,4}`, a
//! proper subgroup that is flagged as such).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::aut::VertexPermutation;
use crate::combinatorics::{all_subsets, binom, factorial, KSubset, Permutation};
use crate::error::{Error, Result};
use crate::graph::MergedJohnsonSpec;

/// The seven automorphism-group families, numbered as in Jones'
/// classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutCase {
    /// `2 <= k < (n-1)/2`, except the two `J(12,4)` graphs: `S_n`.
    Symmetric,
    /// `J(12,4)_{1,3}` and `J(12,4)_{2,4}`: `O^-_10(2)`.
    Orthogonal,
    /// `k = (n-1)/2`, `I != k+1-I`: `S_n`.
    OddSymmetric,
    /// `k = (n-1)/2`, `I = k+1-I`: `S_{n+1}`.
    OddExtended,
    /// `n = 2k`, `I' != I''`, `I` not `{k}` or `{1..k-1}`: `S_2 × S_n`.
    HalfDirect,
    /// `n = 2k`, `I' = I''`, `I` not `{k}` or `{1..k-1}`: `S_2^e : S_n`.
    HalfPairSwap,
    /// `n = 2k`, `I` is `{k}` or `{1..k-1}`: `S_2 wr S_e`.
    HalfWreath,
}

impl AutCase {
    pub fn number(self) -> u8 {
        match self {
            AutCase::Symmetric => 1,
            AutCase::Orthogonal => 2,
            AutCase::OddSymmetric => 3,
            AutCase::OddExtended => 4,
            AutCase::HalfDirect => 5,
            AutCase::HalfPairSwap => 6,
            AutCase::HalfWreath => 7,
        }
    }

    pub fn group_name(self) -> &'static str {
        match self {
            AutCase::Symmetric | AutCase::OddSymmetric => "S_n",
            AutCase::Orthogonal => "O^-_10(2)",
            AutCase::OddExtended => "S_{n+1}",
            AutCase::HalfDirect => "S_2 x S_n",
            AutCase::HalfPairSwap => "S_2^e : S_n",
            AutCase::HalfWreath => "S_2 wr S_e",
        }
    }
}

impl fmt::Display for AutCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.number(), self.group_name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutDescriptor {
    pub case: AutCase,
    pub group_name: &'static str,
    pub has_explicit_generators: bool,
    /// Orbitals on ordered vertex pairs, as labels only.
    pub orbitals: Vec<String>,
    /// Group order implied by the family; `None` for the orthogonal case.
    pub expected_order: Option<BigUint>,
}

fn is_wreath_index_set(spec: &MergedJohnsonSpec) -> bool {
    let k = spec.k();
    let set = spec.index_set();
    set == [k] || set.iter().copied().eq(1..k)
}

/// Which automorphism family `spec` falls in. Needs `k >= 2` and a proper
/// index set.
pub fn classify(spec: &MergedJohnsonSpec) -> Result<AutDescriptor> {
    let (n, k) = (spec.n(), spec.k());
    if k < 2 {
        return Err(Error::Precondition(format!("{spec}: k must be at least 2")));
    }
    if spec.is_full() {
        return Err(Error::Precondition(format!("{spec}: I must be a proper subset of 1..k")));
    }
    let set = spec.index_set();
    let gamma = |i: usize| format!("Γ{i}");
    let all_separate = || (0..=k).map(gamma).collect::<Vec<_>>();
    let e = spec.e();
    let case = if n == 12 && k == 4 && (set == [1, 3] || set == [2, 4]) {
        AutCase::Orthogonal
    } else if 2 * k + 1 < n {
        AutCase::Symmetric
    } else if 2 * k + 1 == n {
        if spec.shifted(k + 1).as_deref() == Some(set) {
            AutCase::OddExtended
        } else {
            AutCase::OddSymmetric
        }
    } else if is_wreath_index_set(spec) {
        AutCase::HalfWreath
    } else if spec.i_prime() == spec.i_double_prime() {
        AutCase::HalfPairSwap
    } else {
        AutCase::HalfDirect
    };
    let n_fact = factorial(n as u64);
    let (orbitals, expected_order) = match case {
        AutCase::Symmetric | AutCase::OddSymmetric => (all_separate(), Some(n_fact)),
        AutCase::Orthogonal => (vec![gamma(0), "Γ1∪Γ3".into(), "Γ2∪Γ4".into()], None),
        AutCase::OddExtended => {
            let mut o = vec![gamma(0)];
            o.extend((1..=k.div_ceil(2)).map(|i| format!("Γ{i}∪Γ{}", k + 1 - i)));
            (o, Some(factorial(n as u64 + 1)))
        }
        AutCase::HalfDirect => (all_separate(), Some(n_fact * 2u32)),
        AutCase::HalfPairSwap => {
            let mut o = vec![gamma(0)];
            o.extend((1..=k / 2).map(|i| format!("Γ{i}∪Γ{}", k - i)));
            o.push(gamma(k));
            let e = e.clone().expect("n is even");
            (o, Some(pow2(&e) * n_fact))
        }
        AutCase::HalfWreath => {
            let inner: Vec<String> = (1..k).map(gamma).collect();
            let e = e.clone().expect("n is even");
            let e_fact = factorial(e.to_u64().expect("e fits in u64"));
            (vec![gamma(0), inner.join("∪"), gamma(k)], Some(pow2(&e) * e_fact))
        }
    };
    Ok(AutDescriptor {
        case,
        group_name: case.group_name(),
        has_explicit_generators: case != AutCase::Orthogonal,
        orbitals,
        expected_order,
    })
}

fn pow2(e: &BigUint) -> BigUint {
    BigUint::one() << e.to_u64().expect("exponent fits in u64")
}

fn labels(spec: &MergedJohnsonSpec) -> Vec<KSubset> {
    all_subsets(spec.n(), spec.k()).collect()
}

/// The vertex map `M ↦ σ(M)` induced by a permutation of `[n]`.
pub fn induced_vertex_perm(sigma: &Permutation, spec: &MergedJohnsonSpec) -> Result<VertexPermutation> {
    if sigma.is_extended() || sigma.points() != spec.n() {
        return Err(Error::GroundSetMismatch(spec.n(), sigma.points()));
    }
    let images = labels(spec)
        .iter()
        .map(|m| m.image(sigma).map(|s| s.rank() as usize))
        .collect::<Result<Vec<_>>>()?;
    VertexPermutation::new(images)
}

fn require_half(spec: &MergedJohnsonSpec) -> Result<()> {
    if spec.n() != 2 * spec.k() {
        return Err(Error::Precondition(format!("{spec}: needs n = 2k")));
    }
    Ok(())
}

/// `v ↦ [n] \ v`, for `n = 2k`.
pub fn complement_involution(spec: &MergedJohnsonSpec) -> Result<VertexPermutation> {
    require_half(spec)?;
    let images = labels(spec).iter().map(|m| m.complement().rank() as usize).collect();
    VertexPermutation::new(images)
}

/// Exchange vertex `v` with its complement and fix everything else. This
/// is an automorphism exactly when `n = 2k` and `I' = I''`.
pub fn pair_swap(v: usize, spec: &MergedJohnsonSpec) -> Result<VertexPermutation> {
    require_half(spec)?;
    if spec.i_prime() != spec.i_double_prime() {
        return Err(Error::Precondition(format!("{spec}: pair swaps need I' = I''")));
    }
    let count = spec.vertex_count() as usize;
    if v >= count {
        return Err(Error::VertexOutOfRange { vertex: v, count });
    }
    let m = KSubset::unrank(v as u64, spec.n(), spec.k())?;
    Ok(VertexPermutation::swap(count, v, m.complement().rank() as usize))
}

/// The action of `S_{n+1}` on `k`-subsets for `k = (n-1)/2`, `I = k+1-I`.
///
/// `M` corresponds to the equipartition `{M ∪ {∞}, [n] \ M}` of
/// `[n] ∪ {∞}`; the image vertex is the part of `σ̃`'s image containing
/// `∞`, with `∞` removed.
pub fn extended_action(sigma_tilde: &Permutation, spec: &MergedJohnsonSpec) -> Result<VertexPermutation> {
    let (n, k) = (spec.n(), spec.k());
    if 2 * k + 1 != n || spec.shifted(k + 1).as_deref() != Some(spec.index_set()) {
        return Err(Error::Precondition(format!("{spec}: needs k = (n-1)/2 and I = k+1-I")));
    }
    if !sigma_tilde.is_extended() || sigma_tilde.points() != n {
        return Err(Error::GroundSetMismatch(n + 1, sigma_tilde.degree()));
    }
    let images = sigma_tilde.images();
    let inf_bit = 1u64 << n;
    let map = |bits: u64| -> u64 {
        let mut out = 0u64;
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            out |= 1 << images[i];
            b &= b - 1;
        }
        out
    };
    let verts = labels(spec)
        .iter()
        .map(|m| {
            let with_inf = map(m.bits() | inf_bit);
            let part = if with_inf & inf_bit != 0 {
                with_inf
            } else {
                map(m.complement().bits())
            };
            Ok(KSubset::from_bits(n, part & !inf_bit)?.rank() as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    VertexPermutation::new(verts)
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<VertexPermutation>,
    /// Whether the generators produce the whole automorphism group.
    pub complete: bool,
}

/// Generators for the automorphism group of `spec`'s graph.
pub fn generators(descriptor: &AutDescriptor, spec: &MergedJohnsonSpec) -> Result<GeneratorSet> {
    let n = spec.n();
    let sym = || -> Result<Vec<VertexPermutation>> {
        Ok(vec![
            induced_vertex_perm(&Permutation::transposition(1, n)?, spec)?,
            induced_vertex_perm(&Permutation::long_cycle(n), spec)?,
        ])
    };
    let (generators, complete) = match descriptor.case {
        AutCase::Symmetric | AutCase::OddSymmetric => (sym()?, true),
        AutCase::Orthogonal => (sym()?, false),
        AutCase::OddExtended => {
            // (1 2) and (1 2 ... n ∞) generate S_{n+1}
            let t = Permutation::parse_cycles("(1 2)", n, true)?;
            let long: Vec<usize> = (1..=n + 1).map(|i| i % (n + 1)).collect();
            let long = Permutation::from_zero_based(long, true)?;
            (vec![extended_action(&t, spec)?, extended_action(&long, spec)?], true)
        }
        AutCase::HalfDirect => {
            let mut g = sym()?;
            g.push(complement_involution(spec)?);
            (g, true)
        }
        AutCase::HalfPairSwap => {
            let mut g = sym()?;
            g.push(pair_swap(0, spec)?);
            (g, true)
        }
        AutCase::HalfWreath => {
            let count = spec.vertex_count() as usize;
            let mut g: Vec<VertexPermutation> = (0..count)
                .filter(|&v| v < complement_rank(spec, v))
                .map(|v| pair_swap(v, spec))
                .collect::<Result<_>>()?;
            g.extend(sym()?);
            g.extend(component_permutations(spec)?);
            (g, true)
        }
    };
    Ok(GeneratorSet { generators, complete })
}

fn complement_rank(spec: &MergedJohnsonSpec, v: usize) -> usize {
    KSubset::unrank(v as u64, spec.n(), spec.k())
        .expect("index in range")
        .complement()
        .rank() as usize
}

/// A transposition and a full cycle of the complementary pairs, each pair
/// moved side to side (the side containing 1 goes to the side containing
/// 1). Together with the pair swaps these generate `S_2 wr S_e`.
fn component_permutations(spec: &MergedJohnsonSpec) -> Result<Vec<VertexPermutation>> {
    let count = spec.vertex_count() as usize;
    let sides: Vec<usize> = labels(spec)
        .iter()
        .filter(|m| m.contains(1))
        .map(|m| m.rank() as usize)
        .collect();
    let e = sides.len();
    if e < 2 {
        return Ok(Vec::new());
    }
    let build = |pairing: &dyn Fn(usize) -> usize| -> Result<VertexPermutation> {
        let mut images: Vec<usize> = (0..count).collect();
        for (j, &a) in sides.iter().enumerate() {
            let b = sides[pairing(j)];
            images[a] = b;
            images[complement_rank(spec, a)] = complement_rank(spec, b);
        }
        VertexPermutation::new(images)
    };
    let swap = build(&|j| match j {
        0 => 1,
        1 => 0,
        j => j,
    })?;
    let cycle = build(&|j| (j + 1) % e)?;
    Ok(vec![swap, cycle])
}

/// An unordered split of `[2m]` into two halves, stored as the half
/// containing 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Equipartition {
    part: KSubset,
}

impl Equipartition {
    /// Either half may be given.
    pub fn new(half: KSubset) -> Result<Self> {
        let n = half.ground();
        if n % 2 == 1 || half.len() * 2 != n {
            return Err(Error::WrongSubsetSize { expected: n / 2, found: half.len() });
        }
        let part = if half.contains(1) { half } else { half.complement() };
        Ok(Equipartition { part })
    }

    /// All equipartitions of `[2m]`, in colex order of the side with 1.
    pub fn all(m: usize) -> impl Iterator<Item = Equipartition> {
        all_subsets(2 * m, m)
            .filter(|p| p.contains(1))
            .map(|part| Equipartition { part })
    }

    pub fn part(&self) -> KSubset {
        self.part
    }

    pub fn other(&self) -> KSubset {
        self.part.complement()
    }

    pub fn image(&self, sigma: &Permutation) -> Result<Equipartition> {
        Equipartition::new(self.part.image(sigma)?)
    }
}

/// Equipartitions `{P, [2m] \ P}` fixed by `sigma`, either with both parts
/// fixed or with the parts exchanged. Counted by enumeration.
pub fn count_fixed_equipartitions(sigma: &Permutation) -> Result<u64> {
    let n = sigma.points();
    if sigma.is_extended() || n % 2 == 1 || n == 0 {
        return Err(Error::Precondition(format!("needs a permutation of an even set, got {n} points")));
    }
    let mut count = 0;
    for e in Equipartition::all(n / 2) {
        if e.image(sigma)? == e {
            count += 1;
        }
    }
    Ok(count)
}

/// `C(2m-2, m-2)`: the most equipartitions of `[2m]` any non-identity
/// permutation fixes, for `m >= 4`.
pub fn max_fixed_bound(m: u64) -> Result<BigUint> {
    if m < 4 {
        return Err(Error::Precondition(format!("m = {m}: the bound needs m >= 4")));
    }
    Ok(binom(2 * m - 2, m - 2))
}

/// One permutation of `[n]` per cycle type, cycles laid out on consecutive
/// points, in reverse lexicographic order of the partition of `n`.
pub fn cycle_type_representatives(n: usize) -> Vec<Permutation> {
    fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            partitions(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lens| {
            let mut images = Vec::with_capacity(n);
            let mut start = 0;
            for len in lens {
                images.extend((0..len).map(|i| start + (i + 1) % len));
                start += len;
            }
            Permutation::from_zero_based(images, false).expect("cycles form a permutation")
        })
        .collect()
}

/// The union bound `(2m)! · 3^(-m C(2m-2, m-2) / (2(m-1)))` on the chance
/// that a random three-coloring of the equipartitions of `[2m]` is kept by
/// some non-identity permutation.
///
/// The exponent may be fractional, so the value is kept as
/// `factorial / 3^(num/den)` and compared with 1 in integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaBound {
    pub m: u64,
    pub factorial: BigUint,
    /// Exponent of 3 in the denominator, `num/den` in lowest terms.
    pub exponent_num: BigUint,
    pub exponent_den: BigUint,
}

pub fn lemma_bound(m: u64) -> Result<LemmaBound> {
    let c = max_fixed_bound(m)?;
    let num = c * m;
    let den = BigUint::from(2 * (m - 1));
    let g = num.gcd(&den);
    Ok(LemmaBound {
        m,
        factorial: factorial(2 * m),
        exponent_num: num / &g,
        exponent_den: den / g,
    })
}

impl LemmaBound {
    /// Exact value when the exponent is an integer.
    pub fn as_rational(&self) -> Option<BigRational> {
        let e = self.integral_exponent()?;
        Some(BigRational::new(
            self.factorial.clone().into(),
            BigUint::from(3u32).pow(e).into(),
        ))
    }

    fn integral_exponent(&self) -> Option<u32> {
        if !self.exponent_den.is_one() {
            return None;
        }
        self.exponent_num.to_u32()
    }

    /// `factorial^den < 3^num`, decided in integers.
    pub fn is_less_than_one(&self) -> bool {
        let den = self.exponent_den.to_u32().expect("denominator is small");
        let num = self.exponent_num.to_u32().expect("exponent fits in u32");
        self.factorial.pow(den) < BigUint::from(3u32).pow(num)
    }

    /// Decimal approximation, for display. Underflows to 0 from m = 8 on;
    /// see [`LemmaBound::log10`].
    pub fn approx(&self) -> f64 {
        10f64.powf(self.log10())
    }

    pub fn log10(&self) -> f64 {
        let digits = |x: &BigUint| {
            let s = x.to_string();
            let lead: f64 = s[..s.len().min(15)].parse().expect("decimal digits");
            lead.log10() + (s.len() - s.len().min(15)) as f64
        };
        let exponent = self.exponent_num.to_f64().expect("finite") / self.exponent_den.to_f64().expect("finite");
        digits(&self.factorial) - exponent * 3f64.log10()
    }
}

impl fmt::Display for LemmaBound {
    /// `p/q` with `q` a power of three when the exponent is integral,
    /// otherwise `p * 3^(-a/b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integral_exponent() {
            Some(e) => write!(f, "{}/{}", self.factorial, BigUint::from(3u32).pow(e)),
            None => write!(
                f,
                "{} * 3^(-{}/{})",
                self.factorial, self.exponent_num, self.exponent_den
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{is_automorphism, search};
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn spec(n: usize, k: usize, i: &[usize]) -> MergedJohnsonSpec {
        MergedJohnsonSpec::canonicalize(n, k, i).unwrap()
    }

    #[test]
    fn classification_examples() {
        let d = classify(&spec(12, 4, &[1, 3])).unwrap();
        assert_eq!(d.case, AutCase::Orthogonal);
        assert!(!d.has_explicit_generators);
        assert_eq!(classify(&spec(12, 4, &[2, 4])).unwrap().case, AutCase::Orthogonal);
        assert_eq!(classify(&spec(9, 4, &[1, 4])).unwrap().case, AutCase::OddExtended);
        assert_eq!(classify(&spec(8, 4, &[4])).unwrap().case, AutCase::HalfWreath);
        assert_eq!(classify(&spec(8, 4, &[1, 2, 3])).unwrap().case, AutCase::HalfWreath);
        assert_eq!(classify(&spec(8, 4, &[1, 3])).unwrap().case, AutCase::HalfPairSwap);
        assert_eq!(classify(&spec(8, 4, &[1])).unwrap().case, AutCase::HalfDirect);
        assert_eq!(classify(&spec(5, 2, &[2])).unwrap().case, AutCase::OddSymmetric);
        assert_eq!(classify(&spec(7, 3, &[2])).unwrap().case, AutCase::OddExtended);
        assert_eq!(classify(&spec(8, 3, &[2])).unwrap().case, AutCase::Symmetric);
        assert!(classify(&spec(6, 1, &[1])).is_err());
        assert!(classify(&spec(6, 2, &[1, 2])).is_err());
        assert_eq!(
            classify(&spec(12, 4, &[1, 3])).unwrap().orbitals,
            vec!["Γ0", "Γ1∪Γ3", "Γ2∪Γ4"]
        );
    }

    #[test]
    fn classification_is_total_up_to_14() {
        for n in 4..=14 {
            for k in 2..=n / 2 {
                for mask in 1u32..(1 << k) - 1 {
                    let set: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let s = spec(n, k, &set);
                    let a = classify(&s).unwrap();
                    let b = classify(&s).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn induced_examples() {
        let s = spec(4, 2, &[1]);
        let id = induced_vertex_perm(&Permutation::identity(4), &s).unwrap();
        assert!(id.is_identity());
        let t1 = induced_vertex_perm(&Permutation::transposition(1, 4).unwrap(), &s).unwrap();
        let v13 = KSubset::from_elements(4, &[1, 3]).unwrap().rank() as usize;
        let v23 = KSubset::from_elements(4, &[2, 3]).unwrap().rank() as usize;
        assert_eq!(t1.apply(v13), v23);
        assert!(induced_vertex_perm(&Permutation::identity(5), &s).is_err());
    }

    #[test]
    fn complement_involution_examples() {
        let s = spec(4, 2, &[1]);
        let a = complement_involution(&s).unwrap();
        let v12 = KSubset::from_elements(4, &[1, 2]).unwrap().rank() as usize;
        let v34 = KSubset::from_elements(4, &[3, 4]).unwrap().rank() as usize;
        assert_eq!(a.apply(v12), v34);

        let s = spec(8, 4, &[1, 3]);
        let a = complement_involution(&s).unwrap();
        assert!(a.compose(&a).unwrap().is_identity());
        assert!(is_automorphism(&Graph::build(&s).unwrap(), &a).unwrap());
        assert!(complement_involution(&spec(7, 3, &[1])).is_err());
    }

    #[test]
    fn pair_swaps() {
        let s = spec(8, 4, &[1, 3]);
        let g = Graph::build(&s).unwrap();
        let v = KSubset::from_elements(8, &[1, 2, 3, 4]).unwrap().rank() as usize;
        let w = KSubset::from_elements(8, &[5, 6, 7, 8]).unwrap().rank() as usize;
        let b = pair_swap(v, &s).unwrap();
        assert_eq!(b.moved_points().collect::<Vec<_>>(), {
            let mut m = vec![v, w];
            m.sort();
            m
        });
        assert!(b.compose(&b).unwrap().is_identity());
        for v in 0..70 {
            assert!(is_automorphism(&g, &pair_swap(v, &s).unwrap()).unwrap());
        }
        assert!(pair_swap(0, &spec(8, 4, &[1])).is_err());
        assert!(pair_swap(70, &s).is_err());
    }

    #[test]
    fn extended_action_examples() {
        let s = spec(7, 3, &[2]);
        // fixing ∞ reduces to the induced action
        let sigma = Permutation::parse_cycles("(1 5 2)(3 7)", 7, true).unwrap();
        let ext = extended_action(&sigma, &s).unwrap();
        let ind = induced_vertex_perm(&sigma.restrict().unwrap(), &s).unwrap();
        assert_eq!(ext, ind);

        // (∞ 1) on M = {2,3,4}: parts {2,3,4,∞}, {1,5,6,7} go to
        // {1,2,3,4}, {∞,5,6,7}, so M ↦ {5,6,7}
        let swap = Permutation::parse_cycles("(inf 1)", 7, true).unwrap();
        let ext = extended_action(&swap, &s).unwrap();
        let m = KSubset::from_elements(7, &[2, 3, 4]).unwrap();
        let img = KSubset::from_elements(7, &[5, 6, 7]).unwrap();
        assert_eq!(ext.apply(m.rank() as usize), img.rank() as usize);
        // M = {1,2,3}: parts {1,2,3,∞} and {4,5,6,7} map to {∞,2,3,1}, same part.
        let m = KSubset::from_elements(7, &[1, 2, 3]).unwrap();
        assert_eq!(ext.apply(m.rank() as usize), m.rank() as usize);
        // M = {4,5,6}: {4,5,6,∞} ↦ {4,5,6,1} so M ↦ {2,3,7}
        let m = KSubset::from_elements(7, &[4, 5, 6]).unwrap();
        let img = KSubset::from_elements(7, &[2, 3, 7]).unwrap();
        assert_eq!(ext.apply(m.rank() as usize), img.rank() as usize);
        assert!(is_automorphism(&Graph::build(&s).unwrap(), &ext).unwrap());

        assert!(extended_action(&swap, &spec(7, 3, &[1])).is_err());
        assert!(extended_action(&Permutation::identity_extended(5), &spec(5, 2, &[2])).is_err());
    }

    #[test]
    fn generator_examples() {
        let s = spec(7, 3, &[1]);
        let d = classify(&s).unwrap();
        let gens = generators(&d, &s).unwrap();
        assert_eq!(gens.generators.len(), 2);
        assert!(gens.complete);
        assert_eq!(d.expected_order, Some(BigUint::from(5040u32)));
        assert_eq!(search(&Graph::build(&s).unwrap(), None, &[]).unwrap().group_order, BigUint::from(5040u32));

        let s = spec(8, 4, &[1]);
        let d = classify(&s).unwrap();
        let gens = generators(&d, &s).unwrap();
        assert_eq!(gens.generators.len(), 3);
        assert_eq!(d.expected_order, Some(BigUint::from(80640u32)));

        let s = spec(12, 4, &[1, 3]);
        assert!(!generators(&classify(&s).unwrap(), &s).unwrap().complete);
    }

    #[test]
    fn generators_are_automorphisms_up_to_nine_points() {
        for n in 4..=9 {
            for k in 2..=n / 2 {
                for mask in 1u32..(1 << k) - 1 {
                    let set: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let s = spec(n, k, &set);
                    let g = Graph::build(&s).unwrap();
                    let d = classify(&s).unwrap();
                    for p in generators(&d, &s).unwrap().generators {
                        assert!(is_automorphism(&g, &p).unwrap(), "{s}");
                    }
                }
            }
        }
    }

    // every m-subset is one side of exactly one equipartition, so count
    // fixed sides and halve
    fn fixed_by_ordered_enumeration(sigma: &Permutation) -> u64 {
        let n = sigma.points();
        let ordered = all_subsets(n, n / 2)
            .filter(|p| {
                let img = p.image(sigma).unwrap();
                img == *p || img == p.complement()
            })
            .count() as u64;
        ordered / 2
    }

    #[test]
    fn fixed_count_examples() {
        let t = Permutation::parse_cycles("(1 2)", 8, false).unwrap();
        assert_eq!(count_fixed_equipartitions(&t).unwrap(), 15);
        let three = Permutation::parse_cycles("(1 2)(3 4)(5 6)", 6, false).unwrap();
        assert_eq!(count_fixed_equipartitions(&three).unwrap(), 4);
        // four disjoint transpositions on [8]: 8 swapped-part equipartitions
        // plus 3 with both parts unions of two transpositions
        let four = Permutation::parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8, false).unwrap();
        assert_eq!(count_fixed_equipartitions(&four).unwrap(), 11);
        assert_eq!(fixed_by_ordered_enumeration(&four), 11);
        assert_eq!(count_fixed_equipartitions(&Permutation::identity(8)).unwrap(), 35);
        assert!(count_fixed_equipartitions(&Permutation::identity(7)).is_err());
    }

    #[test]
    fn fixed_counts_depend_on_cycle_type_only() {
        for m in [3usize, 4] {
            let n = 2 * m;
            for rep in cycle_type_representatives(n) {
                let base = count_fixed_equipartitions(&rep).unwrap();
                assert_eq!(base, fixed_by_ordered_enumeration(&rep));
                // conjugate by a fixed shuffle
                let tau = Permutation::from_zero_based((0..n).map(|i| (3 * i + 1) % n).collect(), false);
                let Ok(tau) = tau else { continue };
                let conj = tau.compose(&rep).unwrap().compose(&tau.inverse()).unwrap();
                assert_eq!(count_fixed_equipartitions(&conj).unwrap(), base);
            }
        }
    }

    fn disjoint_transpositions(m: usize) -> Permutation {
        let images = (0..2 * m).map(|i| i ^ 1).collect();
        Permutation::from_zero_based(images, false).unwrap()
    }

    #[test]
    fn closed_forms_by_enumeration() {
        for m in 3..=5u64 {
            let t = Permutation::transposition(1, 2 * m as usize).unwrap();
            assert_eq!(BigUint::from(count_fixed_equipartitions(&t).unwrap()), binom(2 * m - 2, m - 2));
            let all = count_fixed_equipartitions(&disjoint_transpositions(m as usize)).unwrap();
            let swapped = 1u64 << (m - 1);
            if m % 2 == 1 {
                assert_eq!(all, swapped);
            } else {
                // each half that is a union of m/2 transpositions is counted
                // once per equipartition, not once per ordered side
                let both_fixed = binom(m, m / 2) / 2u32;
                assert_eq!(BigUint::from(all), BigUint::from(swapped) + both_fixed);
            }
        }
    }

    #[test]
    fn equipartition_sides() {
        let half = KSubset::from_elements(6, &[2, 4, 6]).unwrap();
        let e = Equipartition::new(half).unwrap();
        assert_eq!(e.part().elements(), vec![1, 3, 5]);
        assert_eq!(e.other(), half);
        assert_eq!(Equipartition::new(e.part()).unwrap(), e);
        assert_eq!(Equipartition::all(3).count(), 10);
        assert!(Equipartition::new(KSubset::from_elements(6, &[1, 2]).unwrap()).is_err());
    }

    #[test]
    fn engine_orders_match_families() {
        for n in 4..=9 {
            for k in 2..=n / 2 {
                for mask in 1u32..(1 << k) - 1 {
                    let set: Vec<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let s = spec(n, k, &set);
                    let d = classify(&s).unwrap();
                    let order = search(&Graph::build(&s).unwrap(), None, &[]).unwrap().group_order;
                    assert_eq!(Some(order), d.expected_order, "{s}");
                }
            }
        }
    }

    fn perm_pair() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
        (4usize..=8).prop_flat_map(|n| {
            let ident: Vec<usize> = (0..n).collect();
            (Just(ident.clone()).prop_shuffle(), Just(ident).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn induced_action_is_a_homomorphism((a, b) in perm_pair()) {
            let n = a.len();
            let s = spec(n, n / 2, &[1]);
            let sigma = Permutation::from_zero_based(a, false).unwrap();
            let rho = Permutation::from_zero_based(b, false).unwrap();
            let lhs = induced_vertex_perm(&sigma.compose(&rho).unwrap(), &s).unwrap();
            let rhs = induced_vertex_perm(&sigma, &s)
                .unwrap()
                .compose(&induced_vertex_perm(&rho, &s).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            let id = induced_vertex_perm(&Permutation::identity(n), &s).unwrap();
            prop_assert!(id.is_identity());
        }
    }

    #[test]
    fn max_fixed_bound_values() {
        assert_eq!(max_fixed_bound(4).unwrap(), BigUint::from(15u32));
        assert_eq!(max_fixed_bound(5).unwrap(), BigUint::from(56u32));
        assert!(max_fixed_bound(3).is_err());
        let best = cycle_type_representatives(8)
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| count_fixed_equipartitions(p).unwrap())
            .max();
        assert_eq!(best, Some(15));
    }

    #[test]
    fn cycle_types_of_eight() {
        // p(8) = 22
        let reps = cycle_type_representatives(8);
        assert_eq!(reps.len(), 22);
        let mut types: Vec<_> = reps.iter().map(|p| p.cycle_type()).collect();
        types.dedup();
        assert_eq!(types.len(), 22);
    }

    #[test]
    fn lemma_bound_values() {
        let b = lemma_bound(4).unwrap();
        assert_eq!(b.to_string(), "40320/59049");
        let expect = BigRational::new(BigUint::from(4480u32).into(), BigUint::from(6561u32).into());
        assert_eq!(b.as_rational(), Some(expect));
        assert!(b.is_less_than_one());
        assert!((b.approx() - 40320.0 / 59049.0).abs() < 1e-12);
        assert!((lemma_bound(8).unwrap().log10() + 805.4194535051614).abs() < 1e-9);

        let b = lemma_bound(5).unwrap();
        assert_eq!(b.exponent_num, BigUint::from(35u32));
        assert!(b.is_less_than_one());
        assert!(BigUint::from(3628800u32) < BigUint::from(3u32).pow(35));
        assert!(lemma_bound(3).is_err());
    }
}
