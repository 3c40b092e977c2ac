//! Seeded generators for matrices and arrangements.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg;
use crate::tract::FieldTract;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries in `[-bound, bound]`, embedded in the field.
pub fn random_matrix<T: FieldTract>(
    field: &T,
    r: usize,
    n: usize,
    bound: i64,
    rng: &mut dyn RngCore,
) -> Vec<Vec<T::Elem>> {
    (0..r)
        .map(|_| (0..n).map(|_| field.from_i64(rng.random_range(-bound..=bound))).collect())
        .collect()
}

/// Redraws until the matrix has rank `r`.
pub fn random_full_rank_matrix<T: FieldTract>(
    field: &T,
    r: usize,
    n: usize,
    bound: i64,
    rng: &mut dyn RngCore,
) -> Vec<Vec<T::Elem>> {
    loop {
        let m = random_matrix(field, r, n, bound, rng);
        if linalg::rank(field, &m) == r {
            return m;
        }
    }
}

/// Full rank with nonzero, pairwise non-proportional columns. Panics if the
/// field has too few projective points for `n` distinct columns.
pub fn random_arrangement_matrix<T: FieldTract>(
    field: &T,
    r: usize,
    n: usize,
    bound: i64,
    rng: &mut dyn RngCore,
) -> Vec<Vec<T::Elem>> {
    for _ in 0..100_000 {
        let m = random_full_rank_matrix(field, r, n, bound, rng);
        let simple = (0..n).all(|i| {
            linalg::column_rank(field, &m, &[i]) == 1
                && (i + 1..n).all(|j| linalg::column_rank(field, &m, &[i, j]) == 2)
        });
        if simple {
            return m;
        }
    }
    panic!("no simple {r}×{n} matrix found");
}

/// Integer matrices of rank `r` over the rationals, for tropicalization.
pub fn random_integer_matrix(r: usize, n: usize, bound: i64, rng: &mut dyn RngCore) -> Vec<Vec<i64>> {
    let q = crate::tract::Rationals::<num_bigint::BigInt>::new();
    loop {
        let m: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect()).collect();
        let embedded: Vec<Vec<_>> = m.iter().map(|row| row.iter().map(|&a| q.from_i64(a)).collect()).collect();
        if linalg::rank(&q, &embedded) == r {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::PrimeField;

    #[test]
    fn seeds_are_reproducible() {
        let f5 = PrimeField::new(5).unwrap();
        let a = random_arrangement_matrix(&f5, 3, 5, 5, &mut seeded(7));
        let b = random_arrangement_matrix(&f5, 3, 5, 5, &mut seeded(7));
        assert_eq!(a, b);
        assert_eq!(linalg::rank(&f5, &a), 3);
    }
}
