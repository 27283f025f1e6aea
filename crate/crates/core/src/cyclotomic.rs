//! Exact arithmetic in the ring of cyclotomic integers `Z[ξ_n]`.
//!
//! Elements are integer coordinate vectors in the power basis
//! `1, ξ, …, ξ^{φ(n)−1}`; all products are reduced modulo the cyclotomic
//! polynomial `Φ_n`, so the representation is canonical and equality is
//! coefficient equality.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::Zero;

use crate::arith::{euler_phi, gcd_u64};
use crate::error::{Error, Result};
use crate::lattice::{determinant, IntMatrix};
use crate::scalar::Scalar;

/// Ring indices with class number one; for these `Z[ξ_n]` is a principal
/// ideal domain and ideal colourings are classified.
pub const CLASS_NUMBER_ONE: [u64; 29] = [
    3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21, 24, 25, 27, 28, 32, 33, 35, 36, 40, 44,
    45, 48, 60, 84,
];

/// The monic cyclotomic polynomial `Φ_n`, coefficients lowest degree first.
///
/// Computed by exact division of `x^n − 1` by the product of `Φ_d` over the
/// proper divisors `d | n`; results are memoised across calls.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    fn compute(n: u64, cache: &Mutex<HashMap<u64, Arc<Vec<i64>>>>) -> Arc<Vec<i64>> {
        if let Some(hit) = cache.lock().unwrap().get(&n) {
            return hit.clone();
        }
        // x^n - 1
        let mut poly = vec![0i64; n as usize + 1];
        poly[0] = -1;
        poly[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                let phi_d = compute(d, cache);
                poly = poly_exact_div(&poly, &phi_d);
            }
        }
        let out = Arc::new(poly);
        cache.lock().unwrap().insert(n, out.clone());
        out
    }
    compute(n, cache).as_ref().clone()
}

/// Exact division of `num` by the monic polynomial `den` over `Z`;
/// panics if the division leaves a remainder or overflows `i64`.
fn poly_exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    assert!(num.len() > dn);
    let qd = num.len() - 1 - dn;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(c.checked_mul(dj).expect("overflow in cyclotomic division"))
                    .expect("overflow in cyclotomic division");
            }
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

/// Shared, immutable description of one ring `Z[ξ_n]`.
///
/// Carries `Φ_n` and the reduced power basis images of `ξ^k` for `k < n`,
/// which drive multiplication, conjugation and the Galois action. Safe to
/// share between threads; all element operations are pure.
#[derive(Debug)]
pub struct CyclotomicRing {
    n: u64,
    degree: usize,
    point_order: u64,
    phi: Vec<i64>,
    /// `xi_pow[k]` = coordinates of `ξ^k` in the power basis, `k = 0..n-1`.
    xi_pow: Vec<Vec<i64>>,
    class_number_one: bool,
}

impl CyclotomicRing {
    /// Builds the ring for index `n ≥ 3`, `n ≢ 2 (mod 4)`.
    pub fn new(n: u64) -> Result<Arc<CyclotomicRing>> {
        if n < 3 {
            return Err(Error::RingOrderTooSmall(n));
        }
        if n % 4 == 2 {
            return Err(Error::RingOrderTwoModFour(n));
        }
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree as u64, euler_phi(n));
        let mut xi_pow = Vec::with_capacity(n as usize);
        xi_pow.push({
            let mut e0 = vec![0i64; degree];
            e0[0] = 1;
            e0
        });
        for _ in 1..n {
            let prev = xi_pow.last().unwrap();
            xi_pow.push(shift_reduce_i64(prev, &phi));
        }
        debug_assert_eq!(shift_reduce_i64(xi_pow.last().unwrap(), &phi), xi_pow[0]);
        let point_order = if n.is_multiple_of(2) { n } else { 2 * n };
        Ok(Arc::new(CyclotomicRing {
            n,
            degree,
            point_order,
            phi,
            xi_pow,
            class_number_one: CLASS_NUMBER_ONE.contains(&n),
        }))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `φ(n)`, the rank of the ring as a `Z`-module.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order `N` of the rotation subgroup of the point group `D_N`:
    /// `N = n` for even `n`, `N = 2n` for odd `n`. Always even.
    pub fn point_order(&self) -> u64 {
        self.point_order
    }

    pub fn phi_coeffs(&self) -> &[i64] {
        &self.phi
    }

    pub fn is_class_number_one(&self) -> bool {
        self.class_number_one
    }

    /// Coordinates of `ξ^k` (any integer `k`) in the power basis.
    pub fn xi_power_coords(&self, k: i64) -> &[i64] {
        &self.xi_pow[k.rem_euclid(self.n as i64) as usize]
    }
}

/// `x · p mod Φ` for an i64 coordinate vector.
fn shift_reduce_i64(p: &[i64], phi: &[i64]) -> Vec<i64> {
    let d = p.len();
    let carry = p[d - 1];
    let mut out = vec![0i64; d];
    out[1..d].copy_from_slice(&p[..d - 1]);
    if carry != 0 {
        for j in 0..d {
            out[j] -= carry * phi[j];
        }
    }
    out
}

/// Element of `Z[ξ_n]` with exact coefficients of the power basis.
#[derive(Debug, Clone)]
pub struct CycInt<T: Scalar> {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<T>,
}

impl<T: Scalar> PartialEq for CycInt<T> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}
impl<T: Scalar> Eq for CycInt<T> {}

impl CyclotomicRing {
    pub fn zero<T: Scalar>(self: &Arc<Self>) -> CycInt<T> {
        CycInt {
            ring: self.clone(),
            coeffs: vec![T::zero(); self.degree],
        }
    }

    pub fn one<T: Scalar>(self: &Arc<Self>) -> CycInt<T> {
        self.integer(1)
    }

    /// The rational integer `v` as a ring element.
    pub fn integer<T: Scalar>(self: &Arc<Self>, v: i64) -> CycInt<T> {
        let mut coeffs = vec![T::zero(); self.degree];
        coeffs[0] = T::from(v);
        CycInt {
            ring: self.clone(),
            coeffs,
        }
    }

    /// `ξ^k` for any integer exponent `k`.
    pub fn root_power<T: Scalar>(self: &Arc<Self>, k: i64) -> CycInt<T> {
        let coords = self.xi_power_coords(k);
        CycInt {
            ring: self.clone(),
            coeffs: coords.iter().map(|&c| T::from(c)).collect(),
        }
    }

    /// Element from explicit coefficients, zero-padded up to `φ(n)`.
    pub fn element<T: Scalar>(self: &Arc<Self>, coeffs: Vec<T>) -> Result<CycInt<T>> {
        if coeffs.len() > self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        let mut c = coeffs;
        c.resize(self.degree, T::zero());
        Ok(CycInt {
            ring: self.clone(),
            coeffs: c,
        })
    }

    pub fn element_from_i64<T: Scalar>(self: &Arc<Self>, coeffs: &[i64]) -> Result<CycInt<T>> {
        self.element(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    /// Evaluates an integer polynomial (any degree, lowest coefficient first)
    /// at `ξ`, reducing through the power table.
    pub fn polynomial_value<T: Scalar>(self: &Arc<Self>, coeffs: &[i64]) -> CycInt<T> {
        let mut out = vec![T::zero(); self.degree];
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, &t) in self.xi_power_coords(j as i64).iter().enumerate() {
                if t != 0 {
                    out[i] = out[i].clone() + T::from(c) * T::from(t);
                }
            }
        }
        CycInt {
            ring: self.clone(),
            coeffs: out,
        }
    }

    /// Parses the text form "c0,c1,…" (lowest degree first, length ≤ φ(n)).
    pub fn parse_element<T: Scalar>(self: &Arc<Self>, s: &str) -> Result<CycInt<T>> {
        let coeffs = s
            .split(',')
            .map(|tok| T::from_str_radix(tok.trim(), 10))
            .collect::<std::result::Result<Vec<T>, _>>()
            .map_err(|_| Error::ParseElement(s.to_string()))?;
        if coeffs.is_empty() || coeffs.len() > self.degree {
            return Err(Error::ParseElement(s.to_string()));
        }
        self.element(coeffs)
    }
}

impl<T: Scalar> CycInt<T> {
    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.ring.n, other.ring.n,
            "elements of Z[ξ_{}] and Z[ξ_{}] cannot be combined",
            self.ring.n, other.ring.n
        );
    }

    /// Ring-checked product; the `*` operator panics on mismatch instead.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.ring.n != other.ring.n {
            return Err(Error::RingMismatch {
                left: self.ring.n,
                right: other.ring.n,
            });
        }
        Ok(self.mul_impl(other))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let d = self.ring.degree;
        // Full convolution, then reduction of the high part through the
        // precomputed images of ξ^k.
        let mut conv = vec![T::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = conv[i + j].clone() + a.clone() * b.clone();
            }
        }
        let mut out = conv[..d].to_vec();
        for (k, c) in conv.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            let table = self.ring.xi_power_coords(k as i64);
            for (j, &tj) in table.iter().enumerate() {
                if tj != 0 {
                    out[j] = out[j].clone() + c.clone() * T::from(tj);
                }
            }
        }
        CycInt {
            ring: self.ring.clone(),
            coeffs: out,
        }
    }

    /// Image under the Galois map `ξ ↦ ξ^k`; requires `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.ring.n;
        let kk = k.rem_euclid(n as i64) as u64;
        if gcd_u64(kk, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        let d = self.ring.degree;
        let mut out = vec![T::zero(); d];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let table = self.ring.xi_power_coords((i as u64 * kk) as i64);
            for (j, &tj) in table.iter().enumerate() {
                if tj != 0 {
                    out[j] = out[j].clone() + c.clone() * T::from(tj);
                }
            }
        }
        Ok(CycInt {
            ring: self.ring.clone(),
            coeffs: out,
        })
    }

    /// Complex conjugation `ξ ↦ ξ^{n−1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(self.ring.n as i64 - 1)
            .expect("n-1 is always coprime to n")
    }

    /// The `d×d` matrix of multiplication by `self`: row `i` holds the
    /// coordinates of `self · ξ^i`.
    pub fn multiplication_matrix(&self) -> IntMatrix<T> {
        let d = self.ring.degree;
        let mut rows = Vec::with_capacity(d);
        let mut current = self.coeffs.clone();
        for _ in 0..d - 1 {
            let next = shift_reduce(&current, &self.ring.phi);
            rows.push(std::mem::replace(&mut current, next));
        }
        rows.push(current);
        IntMatrix::from_rows(rows)
    }

    /// Algebraic norm `N_n(z) = |det|` of the multiplication matrix,
    /// equal to the absolute product of all Galois conjugates.
    pub fn norm(&self) -> T {
        determinant(&self.multiplication_matrix()).abs()
    }

    /// `z` is a unit iff its algebraic norm is 1.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Evaluates the coordinate polynomial at `e^{2πik/n}` in `f64`;
    /// `k = 1` is the physical-plane embedding. Requires `gcd(k, n) = 1`.
    pub fn embedding(&self, k: i64) -> Result<Complex64> {
        let n = self.ring.n;
        let kk = k.rem_euclid(n as i64) as u64;
        if gcd_u64(kk, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        let mut acc = Complex64::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * ((i as u64 * kk) % n) as f64 / n as f64;
            acc += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        Ok(acc)
    }

    /// Text form: comma-separated coefficients, lowest degree first.
    pub fn coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn shift_reduce<T: Scalar>(p: &[T], phi: &[i64]) -> Vec<T> {
    let d = p.len();
    let carry = p[d - 1].clone();
    let mut out = Vec::with_capacity(d);
    out.push(T::zero());
    for j in 1..d {
        out.push(p[j - 1].clone());
    }
    if !carry.is_zero() {
        for (j, &pj) in phi.iter().take(d).enumerate() {
            if pj != 0 {
                out[j] = out[j].clone() - carry.clone() * T::from(pj);
            }
        }
    }
    out
}

impl<T: Scalar> std::fmt::Display for CycInt<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.coeff_string())
    }
}

impl<T: Scalar> std::ops::Add for &CycInt<T> {
    type Output = CycInt<T>;
    fn add(self, rhs: &CycInt<T>) -> CycInt<T> {
        self.assert_same_ring(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        CycInt {
            ring: self.ring.clone(),
            coeffs,
        }
    }
}

impl<T: Scalar> std::ops::Sub for &CycInt<T> {
    type Output = CycInt<T>;
    fn sub(self, rhs: &CycInt<T>) -> CycInt<T> {
        self.assert_same_ring(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        CycInt {
            ring: self.ring.clone(),
            coeffs,
        }
    }
}

impl<T: Scalar> std::ops::Neg for &CycInt<T> {
    type Output = CycInt<T>;
    fn neg(self) -> CycInt<T> {
        CycInt {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> std::ops::Mul for &CycInt<T> {
    type Output = CycInt<T>;
    fn mul(self, rhs: &CycInt<T>) -> CycInt<T> {
        self.assert_same_ring(rhs);
        self.mul_impl(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Z = BigInt;

    fn ring(n: u64) -> Arc<CyclotomicRing> {
        CyclotomicRing::new(n).unwrap()
    }

    /// Naive polynomial product over i64, used as the exact-division oracle.
    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        // Oracle for n = 9: (x^9 - 1) must equal Φ_1 Φ_3 Φ_9 exactly.
        let phi9 = cyclotomic_polynomial(9);
        assert_eq!(phi9, vec![1, 0, 0, 1, 0, 0, 1]);
        let product = poly_mul(
            &poly_mul(&cyclotomic_polynomial(1), &cyclotomic_polynomial(3)),
            &phi9,
        );
        let mut x9m1 = vec![0i64; 10];
        x9m1[0] = -1;
        x9m1[9] = 1;
        assert_eq!(product, x9m1);
    }

    #[test]
    fn phi_divides_xn_minus_one() {
        for n in [3u64, 4, 5, 7, 8, 9, 12, 60, 84] {
            let phi = cyclotomic_polynomial(n);
            let mut xn = vec![0i64; n as usize + 1];
            xn[0] = -1;
            xn[n as usize] = 1;
            let q = poly_exact_div(&xn, &phi);
            assert_eq!(poly_mul(&q, &phi), xn);
        }
    }

    #[test]
    fn ring_construction_rules() {
        assert!(matches!(
            CyclotomicRing::new(2),
            Err(Error::RingOrderTooSmall(2))
        ));
        assert!(matches!(
            CyclotomicRing::new(6),
            Err(Error::RingOrderTwoModFour(6))
        ));
        assert!(matches!(
            CyclotomicRing::new(14),
            Err(Error::RingOrderTwoModFour(14))
        ));
        let r = ring(7);
        assert_eq!(r.degree(), 6);
        assert_eq!(r.point_order(), 14);
        assert!(r.is_class_number_one());
        let r = ring(23);
        assert!(!r.is_class_number_one());
        assert_eq!(ring(12).point_order(), 12);
        assert_eq!(CLASS_NUMBER_ONE.len(), 29);
    }

    #[test]
    fn multiplication_examples() {
        // (2+i)^2 = 3+4i in Z[i]
        let r = ring(4);
        let a: CycInt<Z> = r.element_from_i64(&[2, 1]).unwrap();
        assert_eq!(&a * &a, r.element_from_i64(&[3, 4]).unwrap());
        // ξ·ξ = −1−ξ in Z[ξ_3]
        let r3 = ring(3);
        let xi: CycInt<Z> = r3.root_power(1);
        assert_eq!(&xi * &xi, r3.element_from_i64(&[-1, -1]).unwrap());
        // identity
        let one = r3.one::<Z>();
        assert_eq!(&xi * &one, xi);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a: CycInt<Z> = ring(4).element_from_i64(&[1, 1]).unwrap();
        let b: CycInt<Z> = ring(8).element_from_i64(&[1, 1]).unwrap();
        assert_eq!(
            a.try_mul(&b),
            Err(Error::RingMismatch { left: 4, right: 8 })
        );
    }

    #[test]
    fn conjugation_examples() {
        let r = ring(4);
        let z: CycInt<Z> = r.element_from_i64(&[5, 3]).unwrap();
        assert_eq!(z.conjugate(), r.element_from_i64(&[5, -3]).unwrap());
        let r3 = ring(3);
        let xi: CycInt<Z> = r3.root_power(1);
        assert_eq!(xi.conjugate(), r3.element_from_i64(&[-1, -1]).unwrap());
        let r8 = ring(8);
        let z: CycInt<Z> = r8.element_from_i64(&[1, 1, 1, 1]).unwrap();
        assert_eq!(
            z.conjugate(),
            r8.element_from_i64(&[1, -1, -1, -1]).unwrap()
        );
        // involution
        assert_eq!(z.conjugate().conjugate(), z);
    }

    #[test]
    fn galois_action() {
        let r = ring(8);
        let xi: CycInt<Z> = r.root_power(1);
        assert_eq!(xi.galois(3).unwrap(), r.root_power(3));
        assert_eq!(xi.galois(1).unwrap(), xi);
        assert!(matches!(
            xi.galois(2),
            Err(Error::NotCoprime { k: 2, n: 8 })
        ));
        // group law in Gal(Q(ξ_5)/Q)
        let r5 = ring(5);
        let z: CycInt<Z> = r5.element_from_i64(&[1, 2, 3, 4]).unwrap();
        assert_eq!(
            z.galois(2).unwrap().galois(2).unwrap(),
            z.galois(4).unwrap()
        );
    }

    #[test]
    fn norms() {
        let r = ring(4);
        let z: CycInt<Z> = r.element_from_i64(&[2, 1]).unwrap();
        assert_eq!(z.norm(), Z::from(5));
        let r8 = ring(8);
        let z: CycInt<Z> = r8.element_from_i64(&[1, 1, 1, 1]).unwrap();
        assert_eq!(z.norm(), Z::from(8));
        assert_eq!(r8.one::<Z>().norm(), Z::from(1));
        let r3 = ring(3);
        let z: CycInt<Z> = r3.element_from_i64(&[1, -1]).unwrap();
        assert_eq!(z.norm(), Z::from(3));
        // N(2) = 2^φ(n)
        for n in [3u64, 4, 5, 7, 8, 9, 12] {
            let r = ring(n);
            let two: CycInt<Z> = r.integer(2);
            assert_eq!(two.norm(), Z::from(2).pow(r.degree() as u32));
            assert!(!two.is_unit());
        }
    }

    #[test]
    fn units() {
        for n in [3u64, 4, 5, 7, 8, 9, 12] {
            let r = ring(n);
            for k in 0..n as i64 {
                let u: CycInt<Z> = r.root_power(k);
                assert!(u.is_unit());
                assert!((-&u).is_unit());
            }
        }
        // 1+ξ_3 = −ξ_3² is a unit
        let r3 = ring(3);
        let z: CycInt<Z> = r3.element_from_i64(&[1, 1]).unwrap();
        assert!(z.is_unit());
    }

    #[test]
    fn embeddings() {
        let r = ring(4);
        let one: CycInt<Z> = r.one();
        let e = one.embedding(1).unwrap();
        assert!((e.re - 1.0).abs() < 1e-12 && e.im.abs() < 1e-12);
        let xi: CycInt<Z> = r.root_power(1);
        let e = xi.embedding(1).unwrap();
        assert!(e.re.abs() < 1e-12 && (e.im - 1.0).abs() < 1e-12);
        let r8 = ring(8);
        let z: CycInt<Z> = r8.element_from_i64(&[1, 1]).unwrap();
        let e = z.embedding(1).unwrap();
        let s = 0.5f64.sqrt();
        assert!((e.re - (1.0 + s)).abs() < 1e-12 && (e.im - s).abs() < 1e-12);
        // |z|² agrees with the embedding of z·z̄
        let z: CycInt<Z> = r8.element_from_i64(&[3, -2, 1, 5]).unwrap();
        let prod = (&z * &z.conjugate()).embedding(1).unwrap();
        assert!((z.embedding(1).unwrap().norm_sqr() - prod.re).abs() < 1e-9);
        assert!(prod.im.abs() < 1e-9);
    }

    #[test]
    fn parse_and_display() {
        let r = ring(8);
        let z: CycInt<Z> = r.parse_element("1, -2,3").unwrap();
        assert_eq!(z, r.element_from_i64(&[1, -2, 3, 0]).unwrap());
        assert_eq!(z.coeff_string(), "1,-2,3,0");
        assert!(r.parse_element::<Z>("1,x").is_err());
        assert!(r.parse_element::<Z>("1,2,3,4,5").is_err());
    }

    /// Every bounded-coefficient unit on the unit circle is ±ξ^k.
    #[test]
    fn bounded_unit_search() {
        for n in [3u64, 4, 5, 8, 12] {
            let r = ring(n);
            let d = r.degree();
            let mut roots: Vec<CycInt<Z>> = Vec::new();
            for k in 0..n as i64 {
                roots.push(r.root_power(k));
                roots.push(-&r.root_power(k));
            }
            let mut counter = vec![-2i64; d];
            'boxes: loop {
                let z: CycInt<Z> = r.element_from_i64(&counter).unwrap();
                if !z.is_zero() && z.is_unit() {
                    let modulus = z.embedding(1).unwrap().norm();
                    if (modulus - 1.0).abs() < 1e-9 {
                        assert!(roots.contains(&z), "unit {} is not ±ξ^k in n={}", z, n);
                    }
                }
                let mut i = 0;
                loop {
                    if i == d {
                        break 'boxes;
                    }
                    counter[i] += 1;
                    if counter[i] <= 2 {
                        break;
                    }
                    counter[i] = -2;
                    i += 1;
                }
            }
        }
    }
}
