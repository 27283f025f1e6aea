//! Ideals of `Z[ξ_n]` as canonical Hermite-form lattices, and the coset
//! tables that realise ideal colourings.
//!
//! An ideal is stored as the unique Hermite normal form of a generating set
//! of lattice vectors in power-basis coordinates. Canonical-form equality
//! replaces any search for lattice equality, and makes the unit ambiguity of
//! generators irrelevant: `(q) = (εq)` holds by construction.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::is_prime;
use crate::cyclotomic::{CycInt, CyclotomicRing};
use crate::error::{Error, Result};
use crate::lattice::{hnf, snf_invariants, HermiteBasis, IntMatrix};
use crate::scalar::Scalar;

/// Largest number of cosets the table builder will materialise.
pub const MAX_COSETS: usize = 1 << 26;

/// An ideal of `Z[ξ_n]`, canonically represented.
#[derive(Debug, Clone)]
pub struct CycIdeal<T: Scalar> {
    ring: Arc<CyclotomicRing>,
    basis: HermiteBasis<T>,
    norm: T,
    generators: Option<Vec<CycInt<T>>>,
}

impl<T: Scalar> PartialEq for CycIdeal<T> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n() == other.ring.n() && self.basis == other.basis
    }
}
impl<T: Scalar> Eq for CycIdeal<T> {}

impl<T: Scalar> CycIdeal<T> {
    /// Principal ideal `(q)`: the Hermite form of the rows `q·ξ^i`.
    ///
    /// Classification results assume class number one, so other rings are
    /// rejected here.
    pub fn principal(q: &CycInt<T>) -> Result<Self> {
        let ring = q.ring().clone();
        if !ring.is_class_number_one() {
            return Err(Error::NotClassNumberOne(ring.n()));
        }
        if q.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        let basis = hnf(&q.multiplication_matrix())?;
        let norm = basis.determinant();
        Ok(CycIdeal {
            ring,
            basis,
            norm,
            generators: Some(vec![q.clone()]),
        })
    }

    /// The full ring as an ideal, `(1)`.
    pub fn unit_ideal(ring: &Arc<CyclotomicRing>) -> Result<Self> {
        Self::principal(&ring.one())
    }

    /// The ideal `(p, g)` generated by a rational prime and a ring element:
    /// Hermite form of the `2d` rows `p·ξ^i` and `g·ξ^i`.
    ///
    /// A degenerate (full-ring) result is allowed and comes back with norm 1.
    pub fn two_generator(p: u64, g: &CycInt<T>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        let ring = g.ring().clone();
        let d = ring.degree();
        let mut rows = Vec::with_capacity(2 * d);
        for i in 0..d {
            let mut row = vec![T::zero(); d];
            row[i] = T::from(p as i64);
            rows.push(row);
        }
        rows.extend(g.multiplication_matrix().row_vecs());
        let basis = hnf(&IntMatrix::from_rows(rows))?;
        let norm = basis.determinant();
        let p_elem = ring.integer(p as i64);
        Ok(CycIdeal {
            ring,
            basis,
            norm,
            generators: Some(vec![p_elem, g.clone()]),
        })
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn basis(&self) -> &HermiteBasis<T> {
        &self.basis
    }

    /// The index `[Z[ξ_n] : I]`, i.e. the number of colours induced by `I`.
    pub fn norm(&self) -> &T {
        &self.norm
    }

    pub fn generators(&self) -> Option<&[CycInt<T>]> {
        self.generators.as_deref()
    }

    /// Ideal product: Hermite form of all pairwise products of basis rows.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring.n() != other.ring.n() {
            return Err(Error::RingMismatch {
                left: self.ring.n(),
                right: other.ring.n(),
            });
        }
        let d = self.ring.degree();
        let left: Vec<CycInt<T>> = (0..d)
            .map(|i| {
                self.ring
                    .element(self.basis.row(i).to_vec())
                    .expect("basis row")
            })
            .collect();
        let right: Vec<CycInt<T>> = (0..d)
            .map(|i| {
                self.ring
                    .element(other.basis.row(i).to_vec())
                    .expect("basis row")
            })
            .collect();
        let mut rows = Vec::with_capacity(d * d);
        for a in &left {
            for b in &right {
                rows.push((a * b).into_coeffs());
            }
        }
        let basis = hnf(&IntMatrix::from_rows(rows))?;
        let norm = basis.determinant();
        Ok(CycIdeal {
            ring: self.ring.clone(),
            basis,
            norm,
            generators: None,
        })
    }

    /// Image of the ideal under complex conjugation; an ideal again.
    pub fn conjugate(&self) -> Self {
        let d = self.ring.degree();
        let rows: Vec<Vec<T>> = (0..d)
            .map(|i| {
                self.ring
                    .element(self.basis.row(i).to_vec())
                    .expect("basis row")
                    .conjugate()
                    .into_coeffs()
            })
            .collect();
        let basis = hnf(&IntMatrix::from_rows(rows)).expect("conjugate basis keeps full rank");
        let norm = basis.determinant();
        debug_assert_eq!(norm, self.norm);
        CycIdeal {
            ring: self.ring.clone(),
            basis,
            norm,
            generators: None,
        }
    }

    /// Membership test `z ∈ I`.
    pub fn contains(&self, z: &CycInt<T>) -> bool {
        assert_eq!(
            self.ring.n(),
            z.ring().n(),
            "ring mismatch in ideal membership"
        );
        self.basis.contains(z.coeffs()).expect("dimensions agree")
    }

    /// Verifies the ξ-closure invariant: `ξ·b` stays in the lattice for every
    /// basis row `b`. This is what distinguishes an ideal from a sublattice.
    pub fn is_xi_closed(&self) -> bool {
        let d = self.ring.degree();
        let xi: CycInt<T> = self.ring.root_power(1);
        (0..d).all(|i| {
            let b = self
                .ring
                .element(self.basis.row(i).to_vec())
                .expect("basis row");
            self.contains(&(&xi * &b))
        })
    }

    /// Invariant factors of the quotient group `Z[ξ_n] / I`
    /// (`C_{d_1} × C_{d_2} × …`, unit factors omitted).
    pub fn quotient_invariants(&self) -> Vec<T> {
        snf_invariants(self.basis.matrix()).expect("ideal basis is nonsingular")
    }

    /// Flattened basis entries; lexicographic order on this key is the
    /// canonical ordering used for deduplication and stable reports.
    pub fn sort_key(&self) -> Vec<T> {
        let d = self.ring.degree();
        let mut key = Vec::with_capacity(d * d);
        for i in 0..d {
            key.extend(self.basis.row(i).iter().cloned());
        }
        key
    }
}

/// The `ℓ` canonical coset representatives of an ideal: the colours.
///
/// Colour 1 is the ideal itself (`reps[0] = 0`); the remaining residues
/// follow in lexicographic coordinate order.
#[derive(Debug, Clone)]
pub struct CosetTable<T: Scalar> {
    ideal: CycIdeal<T>,
    reps: Vec<Vec<T>>,
    index: HashMap<Vec<T>, usize>,
}

impl<T: Scalar> CosetTable<T> {
    /// Enumerates the mixed-radix box over the Hermite diagonal, reduces each
    /// point to its canonical residue, and indexes the result.
    pub fn new(ideal: CycIdeal<T>) -> Result<Self> {
        if !ideal.ring().is_class_number_one() {
            return Err(Error::NotClassNumberOne(ideal.ring().n()));
        }
        let colours = ideal
            .norm()
            .to_usize()
            .filter(|&l| l <= MAX_COSETS)
            .ok_or_else(|| Error::TooManyCosets(ideal.norm().to_string()))?;
        let d = ideal.ring().degree();
        let diag: Vec<u64> = ideal
            .basis()
            .diagonal()
            .iter()
            .map(|x| x.to_u64().expect("diagonal bounded by the norm"))
            .collect();
        let mut reps = Vec::with_capacity(colours);
        let mut index = HashMap::with_capacity(colours);
        let mut v = vec![0u64; d];
        loop {
            let point: Vec<T> = v.iter().map(|&x| T::from(x as i64)).collect();
            let residue = ideal.basis().canonical_residue(&point)?;
            debug_assert_eq!(residue, point, "box points are their own residues");
            index.insert(residue.clone(), reps.len());
            reps.push(residue);
            // lexicographic odometer, most significant coordinate first
            let mut i = d;
            loop {
                if i == 0 {
                    debug_assert_eq!(reps.len(), colours);
                    return Ok(CosetTable { ideal, reps, index });
                }
                i -= 1;
                v[i] += 1;
                if v[i] < diag[i] {
                    break;
                }
                v[i] = 0;
            }
        }
    }

    pub fn ideal(&self) -> &CycIdeal<T> {
        &self.ideal
    }

    /// Number of colours `ℓ`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Canonical residues in colour order (colour `i` is `reps()[i-1]`).
    pub fn reps(&self) -> &[Vec<T>] {
        &self.reps
    }

    /// Representative of colour `i` (1-based) as a ring element.
    pub fn rep_element(&self, colour: usize) -> CycInt<T> {
        self.ideal
            .ring()
            .element(self.reps[colour - 1].clone())
            .expect("stored residue")
    }

    /// Colour of `z`, in `1..=ℓ`.
    pub fn colour_of(&self, z: &CycInt<T>) -> usize {
        assert_eq!(
            self.ideal.ring().n(),
            z.ring().n(),
            "ring mismatch in colour lookup"
        );
        let residue = self
            .ideal
            .basis()
            .canonical_residue(z.coeffs())
            .expect("dimensions agree");
        self.index[&residue] + 1
    }

    /// Colour of a raw coordinate vector, in `1..=ℓ`.
    pub fn colour_of_coords(&self, coords: &[T]) -> usize {
        let residue = self
            .ideal
            .basis()
            .canonical_residue(coords)
            .expect("dimensions agree");
        self.index[&residue] + 1
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

    fn ideal(n: u64, coeffs: &[i64]) -> CycIdeal<Z> {
        CycIdeal::principal(&ring(n).element_from_i64(coeffs).unwrap()).unwrap()
    }

    #[test]
    fn principal_examples() {
        let two = ideal(4, &[2, 0]);
        assert_eq!(
            two.basis().matrix(),
            &IntMatrix::from_i64(&[&[2, 0], &[0, 2]])
        );
        assert_eq!(two.norm(), &Z::from(4));

        let onei = ideal(4, &[1, 1]);
        assert_eq!(
            onei.basis().matrix(),
            &IntMatrix::from_i64(&[&[1, 1], &[0, 2]])
        );
        assert_eq!(onei.norm(), &Z::from(2));

        let one = ideal(4, &[1, 0]);
        assert_eq!(one.basis().matrix(), &IntMatrix::identity(2));
        assert_eq!(one.norm(), &Z::from(1));
    }

    #[test]
    fn principal_rejections() {
        let r = ring(4);
        assert_eq!(
            CycIdeal::principal(&r.zero::<Z>()),
            Err(Error::ZeroGenerator)
        );
        let bad = ring(23);
        assert_eq!(
            CycIdeal::<Z>::principal(&bad.integer(2)),
            Err(Error::NotClassNumberOne(23))
        );
    }

    #[test]
    fn two_generator_examples() {
        let r = ring(4);
        let g: CycInt<Z> = r.element_from_i64(&[1, 1]).unwrap();
        let i = CycIdeal::two_generator(2, &g).unwrap();
        assert_eq!(i, ideal(4, &[1, 1]));
        assert_eq!(i.norm(), &Z::from(2));

        let r7 = ring(7);
        let g: CycInt<Z> = r7.element_from_i64(&[-1, 1]).unwrap();
        let i = CycIdeal::two_generator(7, &g).unwrap();
        assert_eq!(i.norm(), &Z::from(7));
        assert_eq!(i, ideal(7, &[1, -1]));

        let full = CycIdeal::two_generator(5, &r.one::<Z>()).unwrap();
        assert_eq!(full.norm(), &Z::from(1));

        assert_eq!(CycIdeal::two_generator(6, &g), Err(Error::NotPrime(6)));
    }

    #[test]
    fn ideal_products() {
        let a = ideal(4, &[1, 1]);
        let b = ideal(4, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), ideal(4, &[2, 0]));

        let one = ideal(4, &[1, 0]);
        assert_eq!(a.mul(&one).unwrap(), a);

        let p = ideal(4, &[2, 1]);
        let q = ideal(4, &[2, -1]);
        let prod = p.mul(&q).unwrap();
        assert_eq!(prod, ideal(4, &[5, 0]));
        assert_eq!(prod.norm(), &Z::from(25));
        assert_eq!(
            prod.basis().matrix(),
            &IntMatrix::from_i64(&[&[5, 0], &[0, 5]])
        );
    }

    #[test]
    fn conjugate_examples() {
        let two = ideal(4, &[2, 0]);
        assert_eq!(two.conjugate(), two);
        let p = ideal(4, &[2, 1]);
        assert_eq!(p.conjugate(), ideal(4, &[2, -1]));
        assert_ne!(p.conjugate(), p);
        // 1 − ξ̄ = −ξ^{-1}(1 − ξ), same ideal
        let l7 = ideal(7, &[1, -1]);
        assert_eq!(l7.conjugate(), l7);
    }

    #[test]
    fn coset_tables() {
        let t = CosetTable::new(ideal(4, &[2, 0])).unwrap();
        assert_eq!(t.len(), 4);
        let b = |x: i64, y: i64| vec![Z::from(x), Z::from(y)];
        assert_eq!(t.reps(), &[b(0, 0), b(0, 1), b(1, 0), b(1, 1)]);

        let t = CosetTable::new(ideal(4, &[1, 1])).unwrap();
        assert_eq!(t.reps(), &[b(0, 0), b(0, 1)]);

        let t = CosetTable::new(ideal(4, &[1, 0])).unwrap();
        assert_eq!(t.reps(), &[b(0, 0)]);
    }

    #[test]
    fn colour_lookup() {
        let r = ring(4);
        let t = CosetTable::new(ideal(4, &[2, 0])).unwrap();
        assert_eq!(t.colour_of(&r.zero::<Z>()), 1);

        // 1 − ξ^j ∈ (1 − ξ) for all j, so every root power has colour 1's coset
        let r7 = ring(7);
        let t7 = CosetTable::new(ideal(7, &[1, -1])).unwrap();
        for j in 0..7 {
            let z: CycInt<Z> = &r7.one::<Z>() - &r7.root_power(j);
            assert_eq!(t7.colour_of(&z), 1);
        }

        // 1 and i get different colours under (2+i): 1 − i has norm 2
        let t5 = CosetTable::new(ideal(4, &[2, 1])).unwrap();
        let one: CycInt<Z> = r.one();
        let i_elem: CycInt<Z> = r.root_power(1);
        assert_ne!(t5.colour_of(&one), t5.colour_of(&i_elem));
    }

    #[test]
    fn quotient_groups() {
        assert_eq!(
            ideal(4, &[2, 0]).quotient_invariants(),
            vec![Z::from(2), Z::from(2)]
        );
        assert_eq!(ideal(4, &[2, 1]).quotient_invariants(), vec![Z::from(5)]);
        assert!(ideal(4, &[1, 0]).quotient_invariants().is_empty());
    }

    #[test]
    fn xi_closure() {
        for (n, coeffs) in [
            (4u64, vec![2i64, 1]),
            (7, vec![1, -1, 0, 0, 0, 0]),
            (8, vec![1, 1, 1, 1]),
        ] {
            let i = ideal(n, &coeffs);
            assert!(i.is_xi_closed());
            assert!(i.conjugate().is_xi_closed());
        }
    }
}
