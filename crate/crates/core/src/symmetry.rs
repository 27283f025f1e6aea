//! Point isometries of `Z[ξ_n]`, perfection of colourings, colour symmetry
//! group `H`, point stabiliser `S`, colour preserving group `K = T_I ⋊ S`,
//! induced colour permutations, and the norm-based prediction suite.
//!
//! The key reduction: an affine map `z ↦ g(z) + t` with `g` in the point
//! group preserves every coset of an ideal `I` iff `t ∈ I` (evaluate at 0)
//! and `g(ξ^i) − ξ^i ∈ I` for every power-basis vector: the map
//! `z ↦ g(z) − z` is additive, so the basis test settles all of `Z[ξ_n]`.
//! That turns membership in an infinite group into `2N · d` lattice tests.

use std::sync::Arc;

use crate::arith::is_prime;
use crate::cyclotomic::{CycInt, CyclotomicRing};
use crate::error::{Error, Result};
use crate::ideal::{CosetTable, CycIdeal};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryKind {
    Rotation,
    Reflection,
}

/// An element of the point group `D_N`.
///
/// A rotation acts as `z ↦ u·z` and a reflection as `z ↦ u·conj(z)`, where
/// `u = ζ_N^j` for the exponent `j`. The unit `u` lives in the ring: for even
/// `n` it is `ξ_n^j`; for odd `n` (where `N = 2n`) it is resolved through
/// `ζ_{2n} = −ξ_n^{(n+1)/2}` into a sign and an `ξ_n`-power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointIsometry {
    pub kind: IsometryKind,
    pub exponent: u64,
}

impl PointIsometry {
    pub fn rotation(j: u64) -> Self {
        PointIsometry {
            kind: IsometryKind::Rotation,
            exponent: j,
        }
    }

    pub fn reflection(j: u64) -> Self {
        PointIsometry {
            kind: IsometryKind::Reflection,
            exponent: j,
        }
    }

    /// Plain complex conjugation `z ↦ z̄`.
    pub fn conjugation() -> Self {
        Self::reflection(0)
    }

    pub fn identity() -> Self {
        Self::rotation(0)
    }

    pub fn is_identity(&self) -> bool {
        self.kind == IsometryKind::Rotation && self.exponent == 0
    }

    /// All `2N` elements of `D_N` for the given ring.
    pub fn all(ring: &CyclotomicRing) -> Vec<PointIsometry> {
        let n_point = ring.point_order();
        (0..n_point)
            .map(PointIsometry::rotation)
            .chain((0..n_point).map(PointIsometry::reflection))
            .collect()
    }

    /// Short label, `r<j>` or `s<j>`.
    pub fn label(&self) -> String {
        match self.kind {
            IsometryKind::Rotation => format!("r{}", self.exponent),
            IsometryKind::Reflection => format!("s{}", self.exponent),
        }
    }

    /// The unit `u = ζ_N^j` as `(negated, k)` with `u = ±ξ_n^k`.
    pub fn unit_decomposition(&self, ring: &CyclotomicRing) -> (bool, u64) {
        let n = ring.n();
        let j = self.exponent % ring.point_order();
        if n.is_multiple_of(2) {
            (false, j % n)
        } else {
            let negated = j % 2 == 1;
            let k = (j * n.div_ceil(2)) % n;
            (negated, k)
        }
    }

    /// The unit `u` as a ring element.
    pub fn unit_element<T: Scalar>(&self, ring: &Arc<CyclotomicRing>) -> CycInt<T> {
        let (negated, k) = self.unit_decomposition(ring);
        let u: CycInt<T> = ring.root_power(k as i64);
        if negated {
            -&u
        } else {
            u
        }
    }

    /// Applies the isometry to a ring element.
    pub fn apply<T: Scalar>(&self, z: &CycInt<T>) -> CycInt<T> {
        let u: CycInt<T> = self.unit_element(z.ring());
        match self.kind {
            IsometryKind::Rotation => &u * z,
            IsometryKind::Reflection => &u * &z.conjugate(),
        }
    }

    /// Row `i` is the coordinate vector of `g(ξ^i)`; applying `g` is then a
    /// vector-matrix product with small integer entries.
    pub fn coeff_matrix(&self, ring: &CyclotomicRing) -> Vec<Vec<i64>> {
        let n = ring.n() as i64;
        let d = ring.degree();
        let (negated, k) = self.unit_decomposition(ring);
        let mut rows = Vec::with_capacity(d);
        for i in 0..d as i64 {
            let e = match self.kind {
                IsometryKind::Rotation => k as i64 + i,
                IsometryKind::Reflection => k as i64 + n - i,
            };
            let mut row = ring.xi_power_coords(e).to_vec();
            if negated {
                for x in &mut row {
                    *x = -*x;
                }
            }
            rows.push(row);
        }
        rows
    }

    /// Composition `self ∘ other` (apply `other` first) in `D_N`.
    pub fn compose(&self, other: &PointIsometry, n_point: u64) -> PointIsometry {
        use IsometryKind::*;
        let a = self.exponent % n_point;
        let b = other.exponent % n_point;
        match (self.kind, other.kind) {
            (Rotation, Rotation) => PointIsometry::rotation((a + b) % n_point),
            (Rotation, Reflection) => PointIsometry::reflection((a + b) % n_point),
            (Reflection, Rotation) => PointIsometry::reflection((a + n_point - b) % n_point),
            (Reflection, Reflection) => PointIsometry::rotation((a + n_point - b) % n_point),
        }
    }
}

/// Subgroup of `D_N` fixing every coset, reported in the `C_r` / `D_r`
/// convention (`|C_r| = r`, `|D_r| = 2r`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabiliser {
    point_order: u64,
    rotation_order: u64,
    reflection_axis: Option<u64>,
}

impl Stabiliser {
    pub fn point_order(&self) -> u64 {
        self.point_order
    }

    /// `r`: the number of rotations in the subgroup.
    pub fn rotation_order(&self) -> u64 {
        self.rotation_order
    }

    /// Smallest reflection exponent, when reflections are present.
    pub fn reflection_axis(&self) -> Option<u64> {
        self.reflection_axis
    }

    pub fn is_dihedral(&self) -> bool {
        self.reflection_axis.is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.rotation_order == 1 && self.reflection_axis.is_none()
    }

    pub fn order(&self) -> u64 {
        if self.is_dihedral() {
            2 * self.rotation_order
        } else {
            self.rotation_order
        }
    }

    /// True iff the whole point group `D_N` is in the stabiliser.
    pub fn is_full(&self) -> bool {
        self.rotation_order == self.point_order && self.is_dihedral()
    }

    pub fn contains(&self, g: &PointIsometry) -> bool {
        let step = self.point_order / self.rotation_order;
        let j = g.exponent % self.point_order;
        match g.kind {
            IsometryKind::Rotation => j.is_multiple_of(step),
            IsometryKind::Reflection => match self.reflection_axis {
                None => false,
                Some(axis) => (j + self.point_order - axis).is_multiple_of(step),
            },
        }
    }

    pub fn elements(&self) -> Vec<PointIsometry> {
        let step = self.point_order / self.rotation_order;
        let mut out: Vec<PointIsometry> = (0..self.rotation_order)
            .map(|m| PointIsometry::rotation(m * step))
            .collect();
        if let Some(axis) = self.reflection_axis {
            out.extend(
                (0..self.rotation_order)
                    .map(|m| PointIsometry::reflection((axis + m * step) % self.point_order)),
            );
        }
        out
    }

    /// `C_r` or `D_r(axis=j)`.
    pub fn name(&self) -> String {
        match self.reflection_axis {
            None => format!("C_{}", self.rotation_order),
            Some(axis) => format!("D_{}(axis={})", self.rotation_order, axis),
        }
    }
}

/// Translation component of a symmetry group descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationPart {
    /// All of `Z[ξ_n]`.
    FullModule,
    /// The translations by elements of the ideal, `T_I`.
    Ideal,
}

/// Point component of a symmetry group descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointPart {
    /// Dihedral of order `2·half_order`, with a witness reflection axis.
    Dihedral { half_order: u64, axis: u64 },
    /// Cyclic of order `order`.
    Cyclic { order: u64 },
}

impl PointPart {
    pub fn order(&self) -> u64 {
        match self {
            PointPart::Dihedral { half_order, .. } => 2 * half_order,
            PointPart::Cyclic { order } => *order,
        }
    }
}

/// A semidirect product `translations ⋊ point part`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub translations: TranslationPart,
    pub point: PointPart,
}

impl From<&Stabiliser> for PointPart {
    fn from(s: &Stabiliser) -> Self {
        match s.reflection_axis {
            Some(axis) => PointPart::Dihedral {
                half_order: s.rotation_order,
                axis,
            },
            None => PointPart::Cyclic {
                order: s.rotation_order,
            },
        }
    }
}

/// `q` is balanced iff `conj(q) ∈ (q)`; equivalently the ideal `(q)` is
/// invariant under conjugation. This is the perfection criterion.
pub fn is_balanced<T: Scalar>(q: &CycInt<T>) -> Result<bool> {
    let ideal = CycIdeal::principal(q)?;
    Ok(ideal.contains(&q.conjugate()))
}

/// A colouring is perfect iff its ideal is conjugation-invariant.
pub fn is_perfect<T: Scalar>(ideal: &CycIdeal<T>) -> bool {
    &ideal.conjugate() == ideal
}

/// The colour symmetry group `H`: translations by the full module, point part
/// `D_N` when the colouring is perfect and `C_N` otherwise.
pub fn colour_symmetry_group<T: Scalar>(ideal: &CycIdeal<T>) -> GroupDescriptor {
    let n_point = ideal.ring().point_order();
    let point = if is_perfect(ideal) {
        PointPart::Dihedral {
            half_order: n_point,
            axis: 0,
        }
    } else {
        PointPart::Cyclic { order: n_point }
    };
    GroupDescriptor {
        translations: TranslationPart::FullModule,
        point,
    }
}

/// The stabiliser `S = { g ∈ D_N : g(ξ^i) − ξ^i ∈ I for all i }`, i.e. the
/// point isometries fixing every coset of `I`.
pub fn colour_stabiliser<T: Scalar>(ideal: &CycIdeal<T>) -> Stabiliser {
    let ring = ideal.ring();
    let n_point = ring.point_order();
    let d = ring.degree();
    let fixes_all_cosets = |g: &PointIsometry| -> bool {
        let mat = g.coeff_matrix(ring);
        (0..d).all(|i| {
            let mut diff: Vec<T> = mat[i].iter().map(|&c| T::from(c)).collect();
            diff[i] = diff[i].clone() - T::one();
            ideal.basis().contains(&diff).expect("dimensions agree")
        })
    };
    let rotations: Vec<u64> = (0..n_point)
        .filter(|&j| fixes_all_cosets(&PointIsometry::rotation(j)))
        .collect();
    let reflections: Vec<u64> = (0..n_point)
        .filter(|&j| fixes_all_cosets(&PointIsometry::reflection(j)))
        .collect();

    let r = rotations.len() as u64;
    debug_assert!(
        n_point.is_multiple_of(r),
        "rotation exponents must form a subgroup"
    );
    debug_assert!(rotations.iter().all(|j| j % (n_point / r) == 0));
    debug_assert!(reflections.is_empty() || reflections.len() as u64 == r);
    debug_assert!(reflections.is_empty() || is_perfect(ideal));
    Stabiliser {
        point_order: n_point,
        rotation_order: r,
        reflection_axis: reflections.first().copied(),
    }
}

/// The colour preserving group `K = T_I ⋊ S`.
pub fn colour_preserving_group<T: Scalar>(ideal: &CycIdeal<T>) -> GroupDescriptor {
    let s = colour_stabiliser(ideal);
    GroupDescriptor {
        translations: TranslationPart::Ideal,
        point: PointPart::from(&s),
    }
}

/// `|H/K| = ℓ · |point part of H| / |S|`.
pub fn quotient_order<T: Scalar>(ideal: &CycIdeal<T>) -> T {
    let h_point = colour_symmetry_group(ideal).point.order();
    let s_order = colour_stabiliser(ideal).order();
    let num = ideal.norm().clone() * T::from(h_point as i64);
    let (q, r) = num.div_rem(&T::from(s_order as i64));
    debug_assert!(r.is_zero(), "stabiliser order divides ℓ·|H|");
    q
}

/// Permutation of the colours `{1..ℓ}` stored 0-based: entry `i` is the image
/// of colour `i+1`, minus one.
pub type ColourPermutation = Vec<usize>;

/// The permutation induced by the affine colour symmetry `z ↦ g(z) + t`.
///
/// Precondition (checked): the map must lie in `H`. Rotations always do;
/// reflections only when the colouring is perfect, otherwise
/// `NotAColourSymmetry` is returned.
pub fn induced_permutation<T: Scalar>(
    table: &CosetTable<T>,
    g: &PointIsometry,
    t: &CycInt<T>,
) -> Result<ColourPermutation> {
    if g.kind == IsometryKind::Reflection && !is_perfect(table.ideal()) {
        return Err(Error::NotAColourSymmetry);
    }
    let ring = table.ideal().ring();
    let mat = g.coeff_matrix(ring);
    let d = ring.degree();
    let mut perm = vec![usize::MAX; table.len()];
    let mut seen = vec![false; table.len()];
    for (i, rep) in table.reps().iter().enumerate() {
        let mut coords: Vec<T> = t.coeffs().to_vec();
        for (zi, row) in rep.iter().zip(&mat) {
            if zi.is_zero() {
                continue;
            }
            for j in 0..d {
                if row[j] != 0 {
                    coords[j] = coords[j].clone() + zi.clone() * T::from(row[j]);
                }
            }
        }
        let image = table.colour_of_coords(&coords) - 1;
        if seen[image] {
            return Err(Error::Internal(
                "induced colour map is not a bijection".into(),
            ));
        }
        seen[image] = true;
        perm[i] = image;
    }
    Ok(perm)
}

/// Outcome of the exhaustive patch oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// A single colour permutation is consistent with the whole patch.
    pub consistent: bool,
    /// The consistent permutation is the identity on every colour seen.
    pub colour_preserving: bool,
    /// Some source colour occurred at two patch points, so consistency was
    /// actually exercised; a patch whose points all carry distinct colours
    /// can never refute anything and reports `consistent` vacuously.
    pub constrained: bool,
    /// The partial colour map observed (0-based; `None` = colour not seen).
    pub assignment: Vec<Option<usize>>,
}

/// Checks `c(g(z)+t) = π(c(z))` pointwise over the coefficient box
/// `[−bound, bound]^d`, independently of the classifier: the colour map is
/// built up point by point and any conflict or collision refutes consistency.
pub fn brute_force_verify<T: Scalar>(
    table: &CosetTable<T>,
    g: &PointIsometry,
    t: &CycInt<T>,
    bound: i64,
) -> Verdict {
    assert!(bound >= 0);
    let ring = table.ideal().ring();
    let d = ring.degree();
    let mat = g.coeff_matrix(ring);
    let mut assignment: Vec<Option<usize>> = vec![None; table.len()];
    let mut taken = vec![false; table.len()];
    let mut consistent = true;
    let mut constrained = false;
    let mut coords = vec![-bound; d];
    'points: loop {
        let z: Vec<T> = coords.iter().map(|&c| T::from(c)).collect();
        let source = table.colour_of_coords(&z) - 1;
        let mut image_coords: Vec<T> = t.coeffs().to_vec();
        for (i, row) in mat.iter().enumerate() {
            if coords[i] == 0 {
                continue;
            }
            for j in 0..d {
                if row[j] != 0 {
                    image_coords[j] =
                        image_coords[j].clone() + T::from(coords[i]) * T::from(row[j]);
                }
            }
        }
        let image = table.colour_of_coords(&image_coords) - 1;
        match assignment[source] {
            None => {
                if taken[image] {
                    // two source colours map onto one image colour
                    consistent = false;
                    break 'points;
                }
                assignment[source] = Some(image);
                taken[image] = true;
            }
            Some(prev) => {
                constrained = true;
                if prev != image {
                    consistent = false;
                    break 'points;
                }
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                break 'points;
            }
            coords[i] += 1;
            if coords[i] <= bound {
                break;
            }
            coords[i] = -bound;
            i += 1;
        }
    }
    let colour_preserving = consistent
        && assignment
            .iter()
            .enumerate()
            .all(|(i, a)| a.is_none() || a == &Some(i));
    Verdict {
        consistent,
        colour_preserving,
        constrained,
        assignment,
    }
}

/// Witness for the splitting of `H` over `K` when `ℓ = 2`: the affine
/// involution `z ↦ −conj(z) + 1` lies in `H` and swaps the two colours.
#[derive(Debug, Clone)]
pub struct SemidirectWitness<T: Scalar> {
    pub isometry: PointIsometry,
    pub translation: CycInt<T>,
    pub permutation: ColourPermutation,
}

pub fn semidirect_witness_l2<T: Scalar>(table: &CosetTable<T>) -> Result<SemidirectWitness<T>> {
    if table.len() != 2 {
        return Err(Error::NormNotTwo(table.ideal().norm().to_string()));
    }
    let ring = table.ideal().ring();
    // −conj is the reflection with unit ζ_N^{N/2} = −1.
    let g = PointIsometry::reflection(ring.point_order() / 2);
    let t: CycInt<T> = ring.one();
    debug_assert_eq!(g.unit_element::<T>(ring), -&ring.one::<T>());
    // h² = id: the point part squares to the identity and the affine part
    // g(t) + t must vanish.
    let affine = &g.apply(&t) + &t;
    if !affine.is_zero() {
        return Err(Error::Internal("ℓ=2 witness is not an involution".into()));
    }
    let permutation = induced_permutation(table, &g, &t)?;
    if permutation != vec![1, 0] {
        return Err(Error::Internal(
            "ℓ=2 witness does not swap the two colours".into(),
        ));
    }
    Ok(SemidirectWitness {
        isometry: g,
        translation: t,
        permutation,
    })
}

/// One evaluated structural prediction about `(n, ℓ, I)`.
#[derive(Debug, Clone)]
pub struct LemmaAssertion {
    pub name: &'static str,
    /// The premise of the implication holds for this colouring.
    pub applies: bool,
    /// The full statement holds (vacuously true when it does not apply).
    pub holds: bool,
    pub detail: String,
}

fn scalar_pow<T: Scalar>(base: i64, exp: u32) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * T::from(base);
    }
    acc
}

/// Evaluates the suite of structural predictions tying the number of colours
/// `ℓ` to perfection and to the stabiliser `S`, against exact computations.
///
/// Primality-based predictions need `ℓ` to fit in `u64`; beyond that they are
/// reported as not applying.
pub fn lemma_predictions<T: Scalar>(ideal: &CycIdeal<T>) -> Vec<LemmaAssertion> {
    let ring = ideal.ring();
    let n = ring.n();
    let phi = ring.degree() as u32;
    let n_point = ring.point_order();
    let ell = ideal.norm().clone();
    let ell_u64 = ell.to_u64();
    let perfect = is_perfect(ideal);
    let stab = colour_stabiliser(ideal);
    let two_pow_phi: T = scalar_pow(2, phi);
    let n_pow_phi: T = scalar_pow(n as i64, phi);
    let ell_prime = ell_u64.map(is_prime).unwrap_or(false);
    let ell_ge_2 = ell > T::one();

    let mut out = Vec::new();
    let mut push = |name: &'static str, applies: bool, holds: bool, detail: String| {
        out.push(LemmaAssertion {
            name,
            applies,
            holds,
            detail,
        });
    };

    // ℓ ≥ 2 ⟺ none of ±ξ^i shares the colour of 0.
    let roots_separated = (0..=n as i64).all(|i| {
        let xi: CycInt<T> = ring.root_power(i);
        !ideal.contains(&xi) && !ideal.contains(&(-&xi))
    });
    push(
        "multicolour-iff-roots-off-ideal",
        true,
        ell_ge_2 == roots_separated,
        format!(
            "ℓ≥2 is {}, roots separated from 0 is {}",
            ell_ge_2, roots_separated
        ),
    );

    // ℓ = 2 ⟹ perfect with S = D_N.
    let applies = ell == T::from(2);
    push(
        "two-colours-full-stabiliser",
        applies,
        !applies || (perfect && stab.rotation_order() == n_point && stab.is_dihedral()),
        format!("S = {}", stab.name()),
    );

    // ℓ > 2^φ(n) ⟹ S trivial.
    let applies = ell > two_pow_phi;
    push(
        "norm-beyond-two-power-trivial-stabiliser",
        applies,
        !applies || stab.is_trivial(),
        format!("2^φ(n) = {}, S = {}", two_pow_phi, stab.name()),
    );

    // I = (2) ⟹ perfect; S = D_2 for n = 4, C_2 otherwise.
    let two_ideal = CycIdeal::principal(&ring.integer::<T>(2)).expect("(2) exists");
    let applies = ideal == &two_ideal;
    let expected = if n == 4 {
        stab.rotation_order() == 2 && stab.is_dihedral()
    } else {
        stab.rotation_order() == 2 && !stab.is_dihedral()
    };
    push(
        "ideal-two-stabiliser",
        applies,
        !applies || (perfect && expected),
        format!("n = {}, S = {}", n, stab.name()),
    );

    // ℓ = 2^φ(n) with I ≠ (2) ⟹ S trivial.
    let applies = ell == two_pow_phi && ideal != &two_ideal;
    push(
        "two-power-norm-other-ideal-trivial-stabiliser",
        applies,
        !applies || stab.is_trivial(),
        format!("S = {}", stab.name()),
    );

    // 2 < ℓ = n prime ⟹ perfect with S = D_n.
    let applies = ell_u64 == Some(n) && n > 2 && is_prime(n);
    push(
        "prime-norm-equals-n-dihedral",
        applies,
        !applies || (perfect && stab.rotation_order() == n && stab.is_dihedral()),
        format!("S = {}", stab.name()),
    );

    // perfect and ℓ prime ⟹ conj ∈ S.
    let applies = perfect && ell_prime;
    push(
        "perfect-prime-contains-conjugation",
        applies,
        !applies || stab.contains(&PointIsometry::conjugation()),
        format!("S = {}", stab.name()),
    );

    // ℓ prime with trivial S ⟹ chiral; ℓ prime beyond 2^φ(n) ⟹ chiral.
    let a1 = ell_prime && stab.is_trivial();
    let a2 = ell_prime && ell > two_pow_phi;
    push(
        "prime-trivial-stabiliser-chiral",
        a1 || a2,
        (!a1 || !perfect) && (!a2 || !perfect),
        format!("perfect = {}", perfect),
    );

    // ℓ > n prime ⟹ chiral.
    let applies = ell_prime && ell > T::from(n as i64);
    push(
        "prime-beyond-n-chiral",
        applies,
        !applies || !perfect,
        format!("perfect = {}", perfect),
    );

    // ℓ ∤ 2^φ(n) and ℓ ∤ n^φ(n) ⟹ S trivial.
    let divides_two_pow = (two_pow_phi % ell.clone()).is_zero();
    let divides_n_pow = (n_pow_phi % ell.clone()).is_zero();
    let applies = !divides_two_pow && !divides_n_pow;
    push(
        "norm-divides-neither-power-trivial-stabiliser",
        applies,
        !applies || stab.is_trivial(),
        format!(
            "ℓ|2^φ = {}, ℓ|n^φ = {}, S = {}",
            divides_two_pow,
            divides_n_pow,
            stab.name()
        ),
    );

    out
}

/// Full classification record for one ideal colouring.
#[derive(Debug, Clone)]
pub struct Classification<T: Scalar> {
    pub ideal: CycIdeal<T>,
    pub colours: T,
    pub perfect: bool,
    pub symmetry_group: GroupDescriptor,
    pub stabiliser: Stabiliser,
    pub preserving_group: GroupDescriptor,
    pub quotient_order: T,
}

/// Runs the classifier on one ideal.
pub fn classify<T: Scalar>(ideal: &CycIdeal<T>) -> Result<Classification<T>> {
    if !ideal.ring().is_class_number_one() {
        return Err(Error::NotClassNumberOne(ideal.ring().n()));
    }
    let stabiliser = colour_stabiliser(ideal);
    Ok(Classification {
        colours: ideal.norm().clone(),
        perfect: is_perfect(ideal),
        symmetry_group: colour_symmetry_group(ideal),
        preserving_group: GroupDescriptor {
            translations: TranslationPart::Ideal,
            point: PointPart::from(&stabiliser),
        },
        quotient_order: quotient_order(ideal),
        stabiliser,
        ideal: ideal.clone(),
    })
}
