//! Property tests: canonical-form stability of the lattice algebra, algebraic
//! identities of the cyclotomic arithmetic, closure invariants of ideals, and
//! two exhaustive colouring oracles on small boxes.

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use cyclocolour::cyclotomic::{CycInt, CyclotomicRing};
use cyclocolour::ideal::{CosetTable, CycIdeal};
use cyclocolour::lattice::{determinant, hnf, snf_invariants, IntMatrix};
use cyclocolour::splitting::{ideals_of_norm, DEFAULT_SEED};
use cyclocolour::symmetry::is_perfect;
use cyclocolour::Int;

type Z = BigInt;

fn ring(n: u64) -> Arc<CyclotomicRing> {
    CyclotomicRing::new(n).unwrap()
}

fn matrix_from(rows: &[Vec<i64>]) -> IntMatrix<Z> {
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Z::from(x)).collect())
            .collect(),
    )
}

/// 3×3 integer matrices with small entries.
fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3)
}

proptest! {
    #[test]
    fn hnf_is_canonical_under_row_operations(rows in small_matrix(), perm in 0usize..6, k in -3i64..=3) {
        let m = matrix_from(&rows);
        prop_assume!(!determinant(&m).eq(&Z::from(0)));
        let h1 = hnf(&m).unwrap();
        // permute rows
        let order = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]][perm];
        let mut shuffled: Vec<Vec<i64>> = order.iter().map(|&i| rows[i].clone()).collect();
        // unimodular recombination: row0 += k · row1
        for j in 0..shuffled[0].len() {
            let delta = k * shuffled[1][j];
            shuffled[0][j] += delta;
        }
        let h2 = hnf(&matrix_from(&shuffled)).unwrap();
        prop_assert_eq!(h1, h2);
    }

    #[test]
    fn hnf_and_snf_preserve_the_determinant(rows in small_matrix()) {
        let m = matrix_from(&rows);
        let det = determinant(&m);
        prop_assume!(!det.eq(&Z::from(0)));
        let h = hnf(&m).unwrap();
        prop_assert_eq!(h.determinant(), num_traits::sign::abs(det.clone()));
        let product = snf_invariants(&m)
            .unwrap()
            .into_iter()
            .fold(Z::from(1), |acc, x| acc * x);
        prop_assert_eq!(product, num_traits::sign::abs(det));
    }

    #[test]
    fn residues_are_idempotent_and_sound(rows in small_matrix(), v in prop::collection::vec(-40i64..=40, 3)) {
        let m = matrix_from(&rows);
        prop_assume!(!determinant(&m).eq(&Z::from(0)));
        let h = hnf(&m).unwrap();
        let v: Vec<Z> = v.into_iter().map(Z::from).collect();
        let r = h.canonical_residue(&v).unwrap();
        prop_assert_eq!(h.canonical_residue(&r).unwrap(), r.clone());
        let diff: Vec<Z> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        prop_assert!(h.contains(&diff).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution_and_galois_composes(
        n in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12, 13]),
        coeffs in prop::collection::vec(-5i64..=5, 12),
    ) {
        let r = ring(n);
        let z: CycInt<Z> = r.element_from_i64(&coeffs[..r.degree()]).unwrap();
        prop_assert_eq!(z.conjugate().conjugate(), z.clone());
        // σ_j ∘ σ_k = σ_{jk mod n}
        let units: Vec<i64> =
            (1..n as i64).filter(|&k| cyclocolour::arith::gcd_u64(k as u64, n) == 1).collect();
        for &j in &units {
            for &k in &units {
                let lhs = z.galois(k).unwrap().galois(j).unwrap();
                let rhs = z.galois((j * k).rem_euclid(n as i64)).unwrap();
                prop_assert_eq!(&lhs, &rhs);
            }
        }
    }

    #[test]
    fn norms_are_multiplicative_and_match_the_embedding(
        n in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12]),
        a in prop::collection::vec(-3i64..=3, 12),
        b in prop::collection::vec(-3i64..=3, 12),
    ) {
        let r = ring(n);
        let a: CycInt<Z> = r.element_from_i64(&a[..r.degree()]).unwrap();
        let b: CycInt<Z> = r.element_from_i64(&b[..r.degree()]).unwrap();
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        // |embedding(z)|² equals the embedding of z·z̄
        let sq = (&a * &a.conjugate()).embedding(1).unwrap();
        let direct = a.embedding(1).unwrap().norm_sqr();
        prop_assert!((sq.re - direct).abs() < 1e-9 && sq.im.abs() < 1e-9);
    }

    #[test]
    fn principal_ideals_are_consistent(
        n in prop::sample::select(vec![3u64, 4, 5, 7, 8, 9, 12]),
        coeffs in prop::collection::vec(-3i64..=3, 12),
    ) {
        let r = ring(n);
        let q: CycInt<Z> = r.element_from_i64(&coeffs[..r.degree()]).unwrap();
        prop_assume!(!q.is_zero());
        let ideal = CycIdeal::principal(&q).unwrap();
        prop_assert_eq!(ideal.norm(), &q.norm());
        prop_assert!(ideal.is_xi_closed());
        prop_assert!(ideal.contains(&q));
        let conj = ideal.conjugate();
        prop_assert!(conj.is_xi_closed());
        prop_assert_eq!(conj.norm(), ideal.norm());
        // products: commutative, associative, norm-multiplicative, ξ-closed
        let p = CycIdeal::principal(&q.conjugate()).unwrap();
        let left = ideal.mul(&p).unwrap();
        prop_assert_eq!(&left, &p.mul(&ideal).unwrap());
        prop_assert_eq!(left.norm().clone(), ideal.norm() * p.norm());
        prop_assert!(left.is_xi_closed());
        let two = CycIdeal::principal(&r.integer::<Z>(2)).unwrap();
        let assoc_l = ideal.mul(&p).unwrap().mul(&two).unwrap();
        let assoc_r = ideal.mul(&p.mul(&two).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
    }
}

/// Exhaustive Bravais check on coefficient boxes: every point is congruent to
/// the representative of its colour, so equal colours differ by ideal
/// elements.
#[test]
fn bravais_property_on_boxes() {
    let cases: Vec<(u64, Vec<i64>, i64)> = vec![
        (4, vec![2, 1], 3),
        (3, vec![2, 0], 3),
        (8, vec![1, 1, 1, 1], 3),
        (7, vec![1, -1, 0, -1, 0, 0], 2),
    ];
    for (n, coeffs, bound) in cases {
        let r = ring(n);
        let q: CycInt<Int> = r.element_from_i64(&coeffs).unwrap();
        let ideal = CycIdeal::principal(&q).unwrap();
        let table = CosetTable::new(ideal.clone()).unwrap();
        let d = r.degree();
        let mut counter = vec![-bound; d];
        'boxes: loop {
            let z: CycInt<Int> = r.element_from_i64(&counter).unwrap();
            let colour = table.colour_of(&z);
            let diff = &z - &table.rep_element(colour);
            assert!(
                ideal.contains(&diff),
                "point {z} and its representative must be congruent"
            );
            let mut i = 0;
            loop {
                if i == d {
                    break 'boxes;
                }
                counter[i] += 1;
                if counter[i] <= bound {
                    break;
                }
                counter[i] = -bound;
                i += 1;
            }
        }
    }
}

/// Independent coset-count oracle: the number of distinct canonical residues
/// over the full box `[0, L)^d`, `L = lcm of the Hermite diagonal`, equals
/// the norm.
#[test]
fn coset_count_oracle() {
    use num_traits::ToPrimitive;
    let cases: Vec<(u64, Vec<i64>)> = vec![
        (4, vec![2, 0]),
        (4, vec![2, 1]),
        (3, vec![1, -1]),
        (8, vec![1, 1, 1, 1]),
        (5, vec![1, -1, 0, 0]),
    ];
    for (n, coeffs) in cases {
        let r = ring(n);
        let q: CycInt<Int> = r.element_from_i64(&coeffs).unwrap();
        let ideal = CycIdeal::principal(&q).unwrap();
        let d = r.degree();
        let diag: Vec<u64> = ideal
            .basis()
            .diagonal()
            .iter()
            .map(|x| x.to_u64().unwrap())
            .collect();
        let lcm = diag.iter().fold(1u64, |acc, &x| num_integer::lcm(acc, x));
        let mut residues = std::collections::HashSet::new();
        let mut v = vec![0u64; d];
        'boxes: loop {
            let coords: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
            residues.insert(ideal.basis().canonical_residue(&coords).unwrap());
            let mut i = 0;
            loop {
                if i == d {
                    break 'boxes;
                }
                v[i] += 1;
                if v[i] < lcm {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
        assert_eq!(Int::from(residues.len()), *ideal.norm(), "n={n}");
    }
}

/// Exhaustive square-lattice sweep: perfection of `(q)` coincides with the
/// closed-form description of balanced Gaussian integers. The independent
/// oracle strips the ramified factor `1+i` exactly and then demands a purely
/// real or purely imaginary remainder.
#[test]
fn square_lattice_balanced_form_sweep() {
    fn balanced_form(mut a: i64, mut b: i64) -> bool {
        // divide out 1+i: (a+bi)/(1+i) = ((a+b) + (b−a)i)/2
        while (a + b) % 2 == 0 {
            let (na, nb) = ((a + b) / 2, (b - a) / 2);
            a = na;
            b = nb;
            if a == 0 && b == 0 {
                unreachable!("nonzero input stays nonzero under exact division");
            }
        }
        a == 0 || b == 0
    }
    let r4 = ring(4);
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            if a == 0 && b == 0 {
                continue;
            }
            let q: CycInt<Int> = r4.element_from_i64(&[a, b]).unwrap();
            let ideal = CycIdeal::principal(&q).unwrap();
            assert_eq!(
                is_perfect(&ideal),
                balanced_form(a, b),
                "q = {a}+{b}i: perfection must match the balanced form"
            );
        }
    }
}

/// Whenever exactly one colouring with ℓ colours exists, it is perfect.
#[test]
fn unique_colourings_are_perfect() {
    for n in [3u64, 4, 7, 8, 9, 12] {
        let r = ring(n);
        for ell in 2..=80u64 {
            let ideals = ideals_of_norm::<Int>(&r, ell, DEFAULT_SEED).unwrap();
            if ideals.len() == 1 {
                assert!(
                    is_perfect(&ideals[0]),
                    "the unique {ell}-colouring of Z[ξ_{n}] must be perfect"
                );
            }
        }
    }
}
