//! Prime splitting in `Z[ξ_n]` via factorisation of `Φ_n` over `F_p`, and
//! enumeration of all ideals with a given norm.
//!
//! Each irreducible factor `g` of `Φ_n mod p` gives the prime ideal
//! `(p, g(ξ))` of norm `p^{deg g}`; the multiplicity of `g` is its
//! ramification index. Products of prime ideals with matching norm exponents
//! enumerate every ideal of norm `ℓ`. The canonical Hermite form makes
//! ideal equality exact, so the resulting lists and counts are stable.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorise, is_prime, mul_mod, pow_mod};
use crate::cyclotomic::{cyclotomic_polynomial, CycInt, CyclotomicRing};
use crate::error::{Error, Result};
use crate::ideal::CycIdeal;
use crate::scalar::Scalar;
use crate::symmetry::{classify, Classification};

/// Default seed for the randomised equal-degree splitting step.
pub const DEFAULT_SEED: u64 = 0xC1C10;

/// A positive integer with its prime factorisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormTarget {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

/// Trial-division factorisation of `m ≥ 1`.
pub fn factor_integer(m: u64) -> NormTarget {
    NormTarget {
        value: m,
        factors: factorise(m),
    }
}

/// Dense polynomial over `F_p`, highest zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        FpPoly {
            p,
            coeffs: vec![0, 1],
        }
    }

    /// Reduction of an integer polynomial (lowest degree first) mod `p`.
    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial is not allowed here.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        FpPoly::new(self.p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        FpPoly::new(self.p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn make_monic(&self) -> Self {
        assert!(!self.is_zero());
        let inv = pow_mod(self.lead(), self.p - 2, self.p);
        self.scale(inv)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.coeffs.len() < divisor.coeffs.len() {
            return (FpPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let dlead_inv = pow_mod(divisor.lead(), p - 2, p);
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + dd], dlead_inv, p);
            quot[k] = c;
            if c != 0 {
                for (j, &dj) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(c, dj, p);
                    rem[k + j] = (rem[k + j] + p - sub) % p;
                }
            }
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }

    /// `self^exp mod modulus` with an arbitrary-precision exponent.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Self {
        let mut acc = FpPoly::one(self.p);
        let mut base = self.rem(modulus);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        FpPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(i as u64 % self.p, c, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// Lift with coefficients in `[0, p)` evaluated at `ξ` in the given ring.
    pub fn lift_at_xi<T: Scalar>(&self, ring: &Arc<CyclotomicRing>) -> CycInt<T> {
        let coeffs: Vec<i64> = self.coeffs.iter().map(|&c| c as i64).collect();
        ring.polynomial_value(&coeffs)
    }
}

impl std::fmt::Display for FpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Square-free decomposition over `F_p`: pairs `(part, multiplicity)` with
/// the parts square-free, pairwise coprime, monic, and
/// `∏ part^multiplicity` equal to the monic input.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let f = f.make_monic();
    if f.degree() == 0 {
        return Vec::new();
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = g(x)^p in characteristic p
        let mut g_coeffs = Vec::with_capacity(f.coeffs().len() / p as usize + 1);
        for (i, &c) in f.coeffs().iter().enumerate() {
            if i % p as usize == 0 {
                g_coeffs.push(c);
            } else {
                debug_assert_eq!(c, 0);
            }
        }
        let g = FpPoly::new(p, g_coeffs);
        return squarefree_decomposition(&g)
            .into_iter()
            .map(|(part, m)| (part, m * p as u32))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&deriv);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let part = w.div_rem(&y).0;
        if part.degree() > 0 {
            out.push((part.make_monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() && c.degree() > 0 {
        // what remains is a p-th power; its parts carry multiplicities
        // that are multiples of p times the exhausted counter
        for (part, m) in squarefree_decomposition(&c) {
            out.push((part, m));
        }
    }
    out
}

/// Distinct-degree factorisation of a square-free monic polynomial:
/// pairs `(d, product of all irreducible factors of degree d)`.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.modulus();
    let mut h = f.clone();
    let x = FpPoly::x(p);
    let mut frob = x.pow_mod(&BigUint::from(p), &h);
    let mut out = Vec::new();
    let mut d = 1usize;
    while h.degree() >= 2 * d {
        let g = h.gcd(&frob.sub(&x));
        if !g.is_one() && g.degree() > 0 {
            out.push((d, g.clone()));
            h = h.div_rem(&g).0;
            if h.degree() == 0 {
                return out;
            }
            frob = frob.rem(&h);
        }
        frob = frob.pow_mod(&BigUint::from(p), &h);
        d += 1;
    }
    if h.degree() > 0 {
        out.push((h.degree(), h));
    }
    out
}

/// Equal-degree factorisation: `f` square-free monic with all irreducible
/// factors of degree `d`.
///
/// Cantor–Zassenhaus with a deterministic per-call RNG; for `p ≤ 3`, and for
/// degree ≤ 2 over small primes, an exhaustive deterministic factor search is
/// used instead.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = f.modulus();
    if f.degree() == d {
        return vec![f.make_monic()];
    }
    if p <= 3 || (f.degree() <= 2 && p <= 4096) {
        return exhaustive_equal_degree(f, d);
    }
    // (p^d - 1) / 2 is integral for odd p
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    let mut stack = vec![f.make_monic()];
    let mut out = Vec::new();
    while let Some(g) = stack.pop() {
        if g.degree() == d {
            out.push(g);
            continue;
        }
        loop {
            let a = FpPoly::new(p, (0..g.degree()).map(|_| rng.gen_range(0..p)).collect());
            if a.is_zero() || a.degree() == 0 {
                continue;
            }
            let shared = g.gcd(&a);
            if !shared.is_one() && shared.degree() < g.degree() {
                let other = g.div_rem(&shared).0;
                stack.push(shared);
                stack.push(other);
                break;
            }
            let b = a.pow_mod(&exp, &g).sub(&FpPoly::one(p));
            if b.is_zero() {
                continue;
            }
            let split = g.gcd(&b);
            if !split.is_one() && split.degree() > 0 && split.degree() < g.degree() {
                let other = g.div_rem(&split).0;
                stack.push(split);
                stack.push(other);
                break;
            }
        }
    }
    out.sort();
    out
}

/// Deterministic equal-degree factorisation by explicit search over monic
/// degree-`d` candidates in lexicographic coefficient order.
fn exhaustive_equal_degree(f: &FpPoly, d: usize) -> Vec<FpPoly> {
    let p = f.modulus();
    let mut rest = f.make_monic();
    let mut out = Vec::new();
    let mut counter = vec![0u64; d];
    'search: loop {
        if rest.degree() == d {
            out.push(rest.clone());
            break;
        }
        let mut cand = counter.clone();
        cand.push(1);
        let cand = FpPoly::new(p, cand);
        if rest.rem(&cand).is_zero() {
            // square-free input with equal-degree factors: any monic
            // degree-d divisor is irreducible
            out.push(cand.clone());
            rest = rest.div_rem(&cand).0;
            if rest.degree() == 0 {
                break;
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                break 'search;
            }
            counter[i] += 1;
            if counter[i] < p {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
    debug_assert_eq!(out.iter().map(|g| g.degree()).sum::<usize>(), f.degree());
    out.sort();
    out
}

fn rng_for(n: u64, p: u64, seed: u64) -> ChaCha8Rng {
    let mixed = seed
        ^ n.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ p.rotate_left(32).wrapping_mul(0xC2B2_AE3D_27D4_EB4F);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Factorisation of `Φ_n` over `F_p`: `(irreducible monic factor,
/// multiplicity)` pairs, sorted by degree then coefficients.
pub fn factor_phi_mod_p(n: u64, p: u64, seed: u64) -> Result<Vec<(FpPoly, u32)>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let phi = FpPoly::from_signed(p, &cyclotomic_polynomial(n));
    let mut rng = rng_for(n, p, seed);
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&phi) {
        for (d, product) in distinct_degree(&part) {
            for irreducible in equal_degree(&product, d, &mut rng) {
                out.push((irreducible, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    // the factorisation must multiply back to Φ_n mod p
    debug_assert!({
        let mut prod = FpPoly::one(p);
        for (g, m) in &out {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        prod == phi.make_monic()
    });
    Ok(out)
}

/// How a rational prime interacts with complex conjugation in `Z[ξ_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingClass {
    /// `p | n`: ramified.
    Ramified,
    /// Every prime ideal above `p` is fixed by conjugation.
    SelfConjugate,
    /// Conjugation pairs distinct prime ideals above `p`.
    ComplexSplitting,
}

/// One prime ideal above a rational prime.
#[derive(Debug, Clone)]
pub struct PrimeIdealFactor<T: Scalar> {
    pub p: u64,
    pub poly: FpPoly,
    pub residue_degree: usize,
    pub ramification: u32,
    pub ideal: CycIdeal<T>,
    /// Index of the conjugate ideal within the same factor list
    /// (its own index when self-conjugate).
    pub conjugate_partner: usize,
}

/// The full splitting data of a rational prime.
#[derive(Debug, Clone)]
pub struct PrimeSplitting<T: Scalar> {
    pub p: u64,
    pub class: SplittingClass,
    pub factors: Vec<PrimeIdealFactor<T>>,
}

/// Prime ideals above `p` in `Z[ξ_n]`, with conjugation pairing and the
/// classical `(e, f)` data.
pub fn prime_ideals_above<T: Scalar>(
    ring: &Arc<CyclotomicRing>,
    p: u64,
    seed: u64,
) -> Result<PrimeSplitting<T>> {
    if !ring.is_class_number_one() {
        return Err(Error::NotClassNumberOne(ring.n()));
    }
    let factors_mod_p = factor_phi_mod_p(ring.n(), p, seed)?;
    let mut factors: Vec<PrimeIdealFactor<T>> = Vec::with_capacity(factors_mod_p.len());
    for (g, e) in &factors_mod_p {
        let value: CycInt<T> = g.lift_at_xi(ring);
        let ideal = if value.is_zero() {
            // the lift of g is divisible by Φ_n, so (p, g(ξ)) = (p)
            CycIdeal::principal(&ring.integer(p as i64))?
        } else {
            CycIdeal::two_generator(p, &value)?
        };
        let f = g.degree();
        let expected: T = (0..f).fold(T::one(), |acc, _| acc * T::from(p as i64));
        if ideal.norm() != &expected {
            return Err(Error::Internal(format!(
                "prime ideal above {p} has norm {}, expected {p}^{f}",
                ideal.norm()
            )));
        }
        factors.push(PrimeIdealFactor {
            p,
            poly: g.clone(),
            residue_degree: f,
            ramification: *e,
            ideal,
            conjugate_partner: usize::MAX,
        });
    }
    // e·f sums to φ(n)
    let efg: usize = factors
        .iter()
        .map(|f| f.residue_degree * f.ramification as usize)
        .sum();
    if efg != ring.degree() {
        return Err(Error::Internal(format!(
            "Σ e·f = {efg} ≠ φ(n) = {}",
            ring.degree()
        )));
    }
    // conjugation pairing; an involution on the factor list
    let conjugates: Vec<CycIdeal<T>> = factors.iter().map(|f| f.ideal.conjugate()).collect();
    for i in 0..factors.len() {
        let partner = factors
            .iter()
            .position(|f| f.ideal == conjugates[i])
            .ok_or_else(|| Error::Internal("conjugate of a prime ideal is missing".into()))?;
        factors[i].conjugate_partner = partner;
    }
    debug_assert!(
        (0..factors.len()).all(|i| factors[factors[i].conjugate_partner].conjugate_partner == i)
    );
    let class = if ring.n().is_multiple_of(p) {
        SplittingClass::Ramified
    } else if factors
        .iter()
        .enumerate()
        .all(|(i, f)| f.conjugate_partner == i)
    {
        SplittingClass::SelfConjugate
    } else {
        SplittingClass::ComplexSplitting
    };
    Ok(PrimeSplitting { p, class, factors })
}

/// All ideals of `Z[ξ_n]` with norm exactly `ell`, sorted canonically.
///
/// For each prime `p | ell` the exponent assignments over the prime ideals
/// above `p` with `Σ e_j·f_j = a_p` are enumerated; all cross products are
/// formed, deduplicated by Hermite basis and sorted lexicographically on the
/// flattened basis. The list is empty iff no `ell`-colouring exists.
pub fn ideals_of_norm<T: Scalar>(
    ring: &Arc<CyclotomicRing>,
    ell: u64,
    seed: u64,
) -> Result<Vec<CycIdeal<T>>> {
    if !ring.is_class_number_one() {
        return Err(Error::NotClassNumberOne(ring.n()));
    }
    assert!(ell >= 1, "norm target must be positive");
    let unit = CycIdeal::unit_ideal(ring)?;
    if ell == 1 {
        return Ok(vec![unit]);
    }
    let target = factor_integer(ell);
    let mut per_prime: Vec<Vec<CycIdeal<T>>> = Vec::new();
    for &(p, a) in &target.factors {
        let splitting = prime_ideals_above::<T>(ring, p, seed)?;
        let degrees: Vec<u32> = splitting
            .factors
            .iter()
            .map(|f| f.residue_degree as u32)
            .collect();
        let mut assignments = Vec::new();
        enumerate_assignments(
            &degrees,
            a,
            &mut vec![0; degrees.len()],
            0,
            &mut assignments,
        );
        if assignments.is_empty() {
            return Ok(Vec::new());
        }
        let mut products = Vec::with_capacity(assignments.len());
        for exps in &assignments {
            let mut acc = unit.clone();
            for (factor, &e) in splitting.factors.iter().zip(exps) {
                for _ in 0..e {
                    acc = acc.mul(&factor.ideal)?;
                }
            }
            products.push(acc);
        }
        per_prime.push(products);
    }
    // cross product over the primes dividing ell
    let mut result = vec![unit];
    for group in per_prime {
        let mut next = Vec::with_capacity(result.len() * group.len());
        for acc in &result {
            for ideal in &group {
                next.push(acc.mul(ideal)?);
            }
        }
        result = next;
    }
    result.sort_by_key(|a| a.sort_key());
    result.dedup();
    let expected: T = T::from(ell as i64);
    debug_assert!(result
        .iter()
        .all(|i| i.norm() == &expected && i.is_xi_closed()));
    Ok(result)
}

fn enumerate_assignments(
    degrees: &[u32],
    remaining: u32,
    current: &mut Vec<u32>,
    idx: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if idx == degrees.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let mut e = 0u32;
    loop {
        let used = e * degrees[idx];
        if used > remaining {
            break;
        }
        current[idx] = e;
        enumerate_assignments(degrees, remaining - used, current, idx + 1, out);
        e += 1;
    }
    current[idx] = 0;
}

/// Classifies every ideal of norm `ell`; the list length is the number `j`
/// of distinct `ell`-colourings.
pub fn classify_norm<T: Scalar>(
    ring: &Arc<CyclotomicRing>,
    ell: u64,
    seed: u64,
) -> Result<Vec<Classification<T>>> {
    ideals_of_norm(ring, ell, seed)?
        .iter()
        .map(classify)
        .collect()
}

/// True iff `(q) = ideal` (canonical-basis equality).
pub fn verify_generator<T: Scalar>(q: &CycInt<T>, ideal: &CycIdeal<T>) -> Result<bool> {
    Ok(&CycIdeal::principal(q)? == ideal)
}

/// Classifications for every norm `2..=lmax` that admits a colouring, as
/// `(ℓ, classifications)` pairs. Norm 1 (the monochrome colouring) is
/// omitted.
pub fn sweep_norms<T: Scalar>(
    ring: &Arc<CyclotomicRing>,
    lmax: u64,
    seed: u64,
) -> Result<Vec<(u64, Vec<Classification<T>>)>> {
    let mut out = Vec::new();
    for ell in 2..=lmax.max(1) {
        let classes = classify_norm(ring, ell, seed)?;
        if !classes.is_empty() {
            out.push((ell, classes));
        }
    }
    Ok(out)
}
