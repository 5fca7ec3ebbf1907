//! Lefschetz tests and Jordan types of multiplication by a linear form.
//!
//! For a homogeneous operator `g` of degree `s`, `rank(×g : A_i -> A_{i+s})` equals
//! `rank Cat_i(g ∘ F)`, so every rank here is a catalecticant rank of some
//! derivative `ℓ^k ∘ F`. In particular `r_k = Σ_i rank(×ℓ^k : A_i -> A_{i+k})`
//! is the dimension of the algebra with dual generator `ℓ^k ∘ F`.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use crate::apolarity::{hilbert_function, vector, ApolarAlgebra, HilbertVector};
use crate::error::{Error, Result};
use crate::hessians::slp_test;
use crate::linalg::Echelon;
use crate::poly::{diff_apply, same_context, LinearForm, Monomial, Polynomial, Side};
use crate::sampling::{random_linear_form, random_scalar, rng_from_seed};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Builds a partition from `(part, multiplicity)` pairs, as in `(4^3, 2^5, 1^2)`.
    pub fn from_powers(powers: &[(usize, usize)]) -> Self {
        Partition::new(
            powers
                .iter()
                .flat_map(|&(part, mult)| std::iter::repeat(part).take(mult))
                .collect(),
        )
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn powers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .powers()
            .into_iter()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `P <= Q` in dominance order: every prefix sum of `P` is at most that of `Q`.
pub fn dominance_le(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total() != q.total() {
        return Err(Error::UnequalTotals {
            left: p.total(),
            right: q.total(),
        });
    }
    let len = p.len().max(q.len());
    let (mut sp, mut sq) = (0, 0);
    for i in 0..len {
        sp += p.0.get(i).copied().unwrap_or(0);
        sq += q.0.get(i).copied().unwrap_or(0);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominance comparison; `None` when the partitions are incomparable.
pub fn dominance_cmp(p: &Partition, q: &Partition) -> Result<Option<Ordering>> {
    Ok(match (dominance_le(p, q)?, dominance_le(q, p)?) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}

/// Column lengths of the diagram whose rows are `h_0, h_1, ...`: part `j` counts the `i` with `h_i >= j`.
pub fn conjugate(hf: &[usize]) -> Partition {
    let max = hf.iter().copied().max().unwrap_or(0);
    Partition::new((1..=max).map(|j| hf.iter().filter(|&&h| h >= j).count()).collect())
}

pub fn sperner(hf: &[usize]) -> usize {
    hf.iter().copied().max().unwrap_or(0)
}

fn require_same_context(f: &Polynomial, l: &LinearForm) -> Result<()> {
    if !same_context(f.context(), l.context()) {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// `ℓ^k ∘ F` for `k = 0, 1, ...` until it vanishes (the zero form is not included).
fn derivative_powers(f: &Polynomial, l: &LinearForm) -> Result<Vec<Polynomial>> {
    require_same_context(f, l)?;
    let lp = l.to_polynomial();
    let mut out = vec![f.clone()];
    loop {
        let next = diff_apply(&lp, out.last().expect("nonempty"))?;
        if next.is_zero() {
            return Ok(out);
        }
        out.push(next);
    }
}

/// Hilbert functions of `ℓ^k ∘ F`; entry `i` of the `k`-th is `rank(×ℓ^k : A_i -> A_{i+k})`.
fn power_ranks(f: &Polynomial, l: &LinearForm) -> Result<Vec<HilbertVector>> {
    derivative_powers(f, l)?.iter().map(hilbert_function).collect()
}

/// `ρ(i, k) = rank(×ℓ^k : A_i -> A_{i+k})`, zero outside the algebra.
fn rho(ranks: &[HilbertVector], i: isize, k: usize) -> usize {
    if i < 0 {
        return 0;
    }
    ranks.get(k).map_or(0, |h| h.get(i as usize))
}

/// `r_k = Σ_i rank(×ℓ^k : A_i -> A_{i+k})` for `k = 0, ..., d + 1`; `r_0 = dim A`.
pub fn rank_sequence(f: &Polynomial, l: &LinearForm) -> Result<Vec<usize>> {
    let d = f.homogeneous_degree()? as usize;
    let ranks = power_ranks(f, l)?;
    Ok((0..=d + 1)
        .map(|k| ranks.get(k).map_or(0, HilbertVector::total))
        .collect())
}

fn partition_from_ranks(r: &[usize]) -> Result<Partition> {
    let at = |k: usize| r.get(k).copied().unwrap_or(0);
    let mut powers = Vec::new();
    for m in 1..r.len() {
        let mult = (at(m - 1) + at(m + 1)) as isize - 2 * at(m) as isize;
        if mult < 0 {
            return Err(Error::Invariant(format!("rank sequence {r:?} is not convex")));
        }
        powers.push((m, mult as usize));
    }
    Ok(Partition::from_powers(&powers))
}

/// Jordan type of `×ℓ` on `A_F`: part `m` occurs `r_{m-1} - 2 r_m + r_{m+1}` times.
pub fn jordan_type(f: &Polynomial, l: &LinearForm) -> Result<Partition> {
    let r = rank_sequence(f, l)?;
    let p = partition_from_ranks(&r)?;
    if p.total() != r[0] {
        return Err(Error::Invariant(format!("Jordan type {p} does not partition {}", r[0])));
    }
    Ok(p)
}

/// `rank(×ℓ : A_i -> A_{i+1})` for `i = 0, ..., d - 1`.
pub fn lefschetz_ranks(f: &Polynomial, l: &LinearForm) -> Result<Vec<usize>> {
    require_same_context(f, l)?;
    let d = f.homogeneous_degree()? as usize;
    let lf = diff_apply(&l.to_polynomial(), f)?;
    if lf.is_zero() {
        return Ok(vec![0; d]);
    }
    let h = hilbert_function(&lf)?;
    Ok((0..d).map(|i| h.get(i)).collect())
}

fn has_maximal_ranks(hf: &HilbertVector, ranks: &[usize]) -> bool {
    ranks
        .iter()
        .enumerate()
        .all(|(i, &r)| r == hf.get(i).min(hf.get(i + 1)))
}

/// `ℓ` is a weak Lefschetz element: every `×ℓ : A_i -> A_{i+1}` has maximal rank.
pub fn wlp_test(f: &Polynomial, l: &LinearForm) -> Result<bool> {
    let hf = hilbert_function(f)?;
    Ok(has_maximal_ranks(&hf, &lefschetz_ranks(f, l)?))
}

#[derive(Debug, Clone)]
pub struct WlpGeneric {
    pub has_wlp: bool,
    /// First sampled form with maximal ranks, or else the sample with the largest total rank.
    pub witness: LinearForm,
    /// Per-degree maximum of `rank(×ℓ : A_i -> A_{i+1})` over the samples.
    pub rank_profile: Vec<usize>,
}

/// Samples `trials` linear forms with integer coefficients in `[-bound, bound]`
/// and stops at the first weak Lefschetz element.
pub fn wlp_generic(f: &Polynomial, trials: usize, seed: u64, bound: i64) -> Result<WlpGeneric> {
    wlp_generic_with(f, trials, &mut rng_from_seed(seed), bound)
}

pub fn wlp_generic_with(
    f: &Polynomial,
    trials: usize,
    rng: &mut impl Rng,
    bound: i64,
) -> Result<WlpGeneric> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is needed".into()));
    }
    let hf = hilbert_function(f)?;
    let d = hf.socle_degree();
    let mut profile = vec![0; d];
    let mut best: Option<(usize, LinearForm)> = None;
    for _ in 0..trials {
        let l = random_linear_form(f.context(), rng, bound);
        let ranks = lefschetz_ranks(f, &l)?;
        for (p, &r) in profile.iter_mut().zip(&ranks) {
            *p = (*p).max(r);
        }
        if has_maximal_ranks(&hf, &ranks) {
            return Ok(WlpGeneric {
                has_wlp: true,
                witness: l,
                rank_profile: ranks,
            });
        }
        let total: usize = ranks.iter().sum();
        if best.as_ref().map_or(true, |(t, _)| total > *t) {
            best = Some((total, l));
        }
    }
    Ok(WlpGeneric {
        has_wlp: false,
        witness: best.expect("trials >= 1").1,
        rank_profile: profile,
    })
}

/// A string `z, ℓz, ..., ℓ^{length-1} z` with homogeneous seed `z` of degree `degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanString {
    pub seed: Polynomial,
    pub degree: u32,
    pub length: usize,
}

/// Number of strings needed for each `(seed degree i, length p)`:
/// `ρ(i,p-1) - ρ(i,p) - ρ(i-1,p) + ρ(i-1,p+1)`.
fn string_counts(ranks: &[HilbertVector], d: usize) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for p in (1..=d + 1).rev() {
        for i in 0..=d + 1 - p {
            let ii = i as isize;
            let count = (rho(ranks, ii, p - 1) + rho(ranks, ii - 1, p + 1)) as isize
                - (rho(ranks, ii, p) + rho(ranks, ii - 1, p)) as isize;
            if count < 0 {
                return Err(Error::Invariant(format!(
                    "negative string count at degree {i}, length {p}"
                )));
            }
            if count > 0 {
                out.push((i, p, count as usize));
            }
        }
    }
    Ok(out)
}

/// Attempts to retry a random seed before giving up on one string.
const SEED_ATTEMPTS: usize = 200;

/// A pre-Jordan basis for `×ℓ`: strings whose elements together form a basis of `A_F`.
///
/// Longer strings are chosen first. Seeds are tried among the graded basis
/// monomials of `A_i` and then among random combinations of them; a seed is
/// accepted when each `ℓ^t z` is independent of everything already collected
/// in its degree. Elements are compared through their images `ℓ^t z ∘ F`.
pub fn pre_jordan_strings(f: &Polynomial, l: &LinearForm) -> Result<Vec<JordanString>> {
    let alg = ApolarAlgebra::new(f)?;
    require_same_context(f, l)?;
    let d = alg.socle_degree() as usize;
    let ranks = power_ranks(f, l)?;
    let lp = l.to_polynomial();
    let ctx = f.context();
    let mut collected: Vec<Echelon<Monomial>> = (0..=d).map(|_| Echelon::new()).collect();
    let mut rng = rng_from_seed(0);
    let mut strings = Vec::new();

    for (i, p, count) in string_counts(&ranks, d)? {
        let basis = alg.basis_polynomials(i as u32);
        let mut found = 0;
        let mut monomials = basis.iter().cloned();
        let mut attempts = 0;
        while found < count {
            let seed = match monomials.next() {
                Some(m) => m,
                None if attempts < SEED_ATTEMPTS => {
                    attempts += 1;
                    let mut z = Polynomial::zero(ctx, Side::R);
                    for b in &basis {
                        z = z.add(&b.scale(&random_scalar(&mut rng, 3)))?;
                    }
                    z
                }
                None => {
                    return Err(Error::Invariant(format!(
                        "no seed found for a string of length {p} in degree {i}"
                    )))
                }
            };
            let mut images = Vec::with_capacity(p);
            let mut g = alg.image(&seed)?;
            for t in 0..p {
                if t > 0 {
                    g = diff_apply(&lp, &g)?;
                }
                images.push(vector(&g));
            }
            let fits = images
                .iter()
                .enumerate()
                .all(|(t, v)| collected[i + t].is_independent(v));
            if fits {
                for (t, v) in images.iter().enumerate() {
                    collected[i + t].insert(v);
                }
                strings.push(JordanString {
                    seed,
                    degree: i as u32,
                    length: p,
                });
                found += 1;
            }
        }
    }

    let total: usize = collected.iter().map(Echelon::rank).sum();
    if total != alg.dimension() {
        return Err(Error::Invariant(format!(
            "strings span {total} dimensions of an algebra of dimension {}",
            alg.dimension()
        )));
    }
    Ok(strings)
}

/// Partition given by the lengths of a set of strings.
pub fn string_partition(strings: &[JordanString]) -> Partition {
    Partition::new(strings.iter().map(|s| s.length).collect())
}

#[derive(Debug, Clone)]
pub struct JordanReport {
    pub ell: LinearForm,
    pub partition: Partition,
    pub rank_sequence: Vec<usize>,
    pub strings: Option<Vec<JordanString>>,
    pub is_wlp_element: bool,
    pub is_slp_element: bool,
}

/// Jordan type with rank sequence and Lefschetz verdicts; the strong verdict is
/// `partition = conjugate(HF)`.
pub fn jordan_report(f: &Polynomial, l: &LinearForm, with_strings: bool) -> Result<JordanReport> {
    let hf = hilbert_function(f)?;
    let rank_sequence = rank_sequence(f, l)?;
    let partition = partition_from_ranks(&rank_sequence)?;
    let strings = if with_strings {
        let s = pre_jordan_strings(f, l)?;
        if string_partition(&s) != partition {
            return Err(Error::Invariant(format!(
                "string lengths {} differ from the Jordan type {partition}",
                string_partition(&s)
            )));
        }
        Some(s)
    } else {
        None
    };
    Ok(JordanReport {
        ell: l.clone(),
        is_wlp_element: wlp_test(f, l)?,
        is_slp_element: partition == conjugate(hf.as_slice()),
        partition,
        rank_sequence,
        strings,
    })
}

#[derive(Debug, Clone)]
pub struct ConsistencyReport {
    pub partition: Partition,
    pub sperner: usize,
    pub wlp: bool,
    pub slp: bool,
    /// Dominance-maximal Jordan type among the sampled forms.
    pub generic_partition: Partition,
    /// Number of parts equals the Sperner number exactly when `ℓ` is weak Lefschetz.
    pub parts_match_wlp: bool,
    /// Jordan type equals the conjugate of the Hilbert function exactly when `ℓ` is strong Lefschetz.
    pub conjugate_matches_slp: bool,
    /// The Jordan type of `ℓ` is dominated by the sampled generic type.
    pub dominated_by_generic: bool,
}

impl ConsistencyReport {
    pub fn holds(&self) -> bool {
        self.parts_match_wlp && self.conjugate_matches_slp && self.dominated_by_generic
    }
}

/// Checks the relations between Jordan type, Sperner number, the Lefschetz
/// tests, and the Jordan type of sampled general forms.
pub fn jordan_consistency(
    f: &Polynomial,
    l: &LinearForm,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<ConsistencyReport> {
    let hf = hilbert_function(f)?;
    let partition = jordan_type(f, l)?;
    let sperner = sperner(hf.as_slice());
    let wlp = wlp_test(f, l)?;
    let slp = slp_test(f, l)?.is_strong_lefschetz;

    let mut rng = rng_from_seed(seed);
    let mut generic = partition.clone();
    for _ in 0..trials {
        let candidate = jordan_type(f, &random_linear_form(f.context(), &mut rng, bound))?;
        if dominance_le(&generic, &candidate)? {
            generic = candidate;
        }
    }
    Ok(ConsistencyReport {
        parts_match_wlp: (partition.len() == sperner) == wlp,
        conjugate_matches_slp: (partition == conjugate(hf.as_slice())) == slp,
        dominated_by_generic: dominance_le(&partition, &generic)?,
        generic_partition: generic,
        partition,
        sperner,
        wlp,
        slp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableContext};

    fn form(text: &str) -> Polynomial {
        parse_poly(text, &VariableContext::threefold(), Side::S).unwrap()
    }

    fn ell(text: &str) -> LinearForm {
        LinearForm::parse(text, &VariableContext::threefold()).unwrap()
    }

    fn min_i(d: u32) -> Polynomial {
        form(&format!("X*U^{} + Y*U^{}*V + Z*U^{}*V^2", d - 1, d - 2, d - 3))
    }

    #[test]
    fn partitions() {
        let p = Partition::new(vec![1, 4, 0, 2, 4]);
        assert_eq!(p.parts(), &[4, 4, 2, 1]);
        assert_eq!(p.to_string(), "(4^2,2,1)");
        assert_eq!(Partition::from_powers(&[(4, 3), (2, 5), (1, 2)]).total(), 24);
    }

    #[test]
    fn dominance_examples() {
        let a = Partition::from_powers(&[(4, 3), (2, 5), (1, 2)]);
        let b = Partition::from_powers(&[(3, 6), (2, 2), (1, 2)]);
        assert!(dominance_le(&b, &a).unwrap());
        assert!(!dominance_le(&a, &b).unwrap());
        assert!(dominance_le(&a, &a).unwrap());
        assert_eq!(dominance_cmp(&a, &b).unwrap(), Some(Ordering::Greater));
        let c = Partition::new(vec![3, 3]);
        assert!(matches!(dominance_le(&a, &c), Err(Error::UnequalTotals { .. })));
        // (3,1,1,1) and (2,2,2) are incomparable
        let x = Partition::new(vec![3, 1, 1, 1]);
        let y = Partition::new(vec![2, 2, 2]);
        assert_eq!(dominance_cmp(&x, &y).unwrap(), None);
    }

    #[test]
    fn conjugate_and_sperner() {
        assert_eq!(conjugate(&[1, 5, 6, 6, 5, 1]).parts(), &[6, 4, 4, 4, 4, 2]);
        assert_eq!(sperner(&[1, 5, 7, 7, 5, 1]), 7);
        assert_eq!(conjugate(&[1, 1, 1]).parts(), &[3]);
    }

    #[test]
    fn jordan_types_on_minimal_form() {
        let d = 5;
        let f = min_i(d);
        let generic = jordan_type(&f, &ell("3x - 2y + 5z + 7u - 4v")).unwrap();
        assert_eq!(generic, Partition::from_powers(&[(6, 1), (4, 3), (3, 2)]));
        let uv = jordan_type(&f, &ell("u + v")).unwrap();
        assert_eq!(uv, Partition::from_powers(&[(5, 2), (4, 2), (3, 2)]));
        let zv = jordan_type(&f, &ell("z + v")).unwrap();
        assert_eq!(zv, Partition::from_powers(&[(4, 3), (2, 5), (1, 2)]));
        assert_eq!(zv.total(), 24);
    }

    #[test]
    fn rank_sequence_is_convex() {
        let f = min_i(6);
        for text in ["u", "v", "z + v", "x", "2x + u - v"] {
            let r = rank_sequence(&f, &ell(text)).unwrap();
            assert_eq!(r[0], 30);
            for k in 1..r.len() - 1 {
                assert!(r[k - 1] - r[k] >= r[k] - r[k + 1]);
            }
        }
    }

    #[test]
    fn wlp_examples() {
        assert!(wlp_test(&min_i(5), &ell("u")).unwrap());
        let ii = form("X*U^4 + Y*U^3*V + Z*V^4");
        assert!(!wlp_test(&ii, &ell("u")).unwrap());
        assert!(wlp_test(&ii, &ell("u + v")).unwrap());
        // Y*(U + V)^4 expanded
        let iii = form("X*U^4 + Y*U^4 + 4*Y*U^3*V + 6*Y*U^2*V^2 + 4*Y*U*V^3 + Y*V^4 + Z*V^4");
        assert!(!wlp_test(&iii, &ell("u - v")).unwrap());
        assert!(wlp_test(&iii, &ell("u + v")).unwrap());
    }

    #[test]
    fn strings_on_principal_power() {
        let ctx = VariableContext::from_upper(&["U", "V"]).unwrap();
        let f = parse_poly("U^4", &ctx, Side::S).unwrap();
        let u = LinearForm::parse("u", &ctx).unwrap();
        let s = pre_jordan_strings(&f, &u).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].length, 5);
        assert_eq!(s[0].degree, 0);
        assert!(s[0].seed.to_string() == "1");
    }

    #[test]
    fn strings_match_ranks() {
        let f = min_i(5);
        for text in ["z + v", "v", "z", "y", "x", "u + v", "x + y - 2z + 3u + v"] {
            let l = ell(text);
            let report = jordan_report(&f, &l, true).unwrap();
            let strings = report.strings.unwrap();
            assert_eq!(string_partition(&strings), report.partition);
        }
    }

    #[test]
    fn consistency_on_minimal_form() {
        let f = min_i(5);
        for text in ["x", "u", "z + v", "3x - 2y + 5z + 7u - 4v"] {
            let r = jordan_consistency(&f, &ell(text), 3, 1, 10).unwrap();
            assert!(r.holds(), "{text}: {r:?}");
        }
        let x = jordan_consistency(&f, &ell("x"), 3, 1, 10).unwrap();
        assert!(x.partition.len() > 6 && !x.wlp);
        let g = jordan_consistency(&f, &ell("3x - 2y + 5z + 7u - 4v"), 3, 1, 10).unwrap();
        assert_eq!(g.partition.len(), 6);
        assert_eq!(g.sperner, 6);
    }
}
