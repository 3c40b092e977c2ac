//! Vectors and covectors of T-matroids, support bases, normal forms, and
//! linear subspaces of `T^E`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::gp::GpFunction;
use crate::subset::{self, Subset};
use crate::tract::{dot_is_null, support, ExactInteger, Krasner, Tract, Tropical};

/// Explicit enumeration of `T^E` is refused beyond this many functions.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Vectors,
    Covectors,
    TFlat,
}

/// The orthogonal complement of a finite generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSpacePredicate<T: Tract> {
    tract: T,
    n: usize,
    role: Role,
    generators: Vec<Vec<T::Elem>>,
}

impl<T: Tract> VectorSpacePredicate<T> {
    pub fn new(tract: T, n: usize, role: Role, generators: Vec<Vec<T::Elem>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::Input(format!("generator of length {} in T^{n}", g.len())));
        }
        Ok(VectorSpacePredicate { tract, n, role, generators })
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn generators(&self) -> &[Vec<T::Elem>] {
        &self.generators
    }

    pub fn contains(&self, x: &[T::Elem]) -> bool {
        x.len() == self.n && self.generators.iter().all(|g| dot_is_null(&self.tract, x, g))
    }

    /// All members in lexicographic order, for finite tracts.
    pub fn enumerate(&self, guard: u64) -> Result<Vec<Vec<T::Elem>>> {
        let all = all_functions(&self.tract, self.n, guard)?;
        Ok(all.into_iter().filter(|x| self.contains(x)).collect())
    }
}

/// `ℂV_φ`: the complement of the fundamental hyperplane functions of `φ`.
pub fn vectors<T: Tract>(phi: &GpFunction<T>) -> VectorSpacePredicate<T> {
    let generators = phi.cocircuits().into_iter().map(|(_, c)| c).collect();
    VectorSpacePredicate { tract: phi.tract().clone(), n: phi.n(), role: Role::Vectors, generators }
}

/// `ℂV*_φ`: the complement of the circuits of `φ`.
pub fn covectors<T: Tract>(phi: &GpFunction<T>) -> VectorSpacePredicate<T> {
    VectorSpacePredicate {
        tract: phi.tract().clone(),
        n: phi.n(),
        role: Role::Covectors,
        generators: phi.circuits(),
    }
}

/// Every function `E → T` in lexicographic order of the tract's element list.
pub fn all_functions<T: Tract>(tract: &T, n: usize, guard: u64) -> Result<Vec<Vec<T::Elem>>> {
    let elems = tract
        .elements()
        .ok_or_else(|| Error::Input(format!("tract {} is infinite", tract.descriptor())))?;
    let count = (elems.len() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if count > guard {
        return Err(Error::Guard(format!("{count} functions exceed the guard {guard}")));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&d| elems[d].clone()).collect());
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Inclusion-minimal subsets of `{0, …, n-1}` meeting every set in
/// `supports`, in lexicographic order.
pub fn minimal_transversals(n: usize, supports: &[Subset]) -> Vec<Subset> {
    let hits = |b: Subset| supports.iter().all(|&s| s & b != 0);
    let mut out: Vec<Subset> = (0..=subset::full(n))
        .filter(|&b| hits(b) && subset::elements(b).into_iter().all(|e| !hits(b & !(1 << e))))
        .collect();
    out.sort_by_key(|&b| subset::lex_key(b));
    out
}

/// Support bases of an explicit set: minimal transversals of the supports of
/// its nonzero members.
pub fn support_bases_of_set<T: Tract>(tract: &T, n: usize, members: &[Vec<T::Elem>]) -> Vec<Subset> {
    let supports: BTreeSet<Subset> = members
        .iter()
        .map(|x| support(tract, x))
        .filter(|&s| s != 0)
        .collect();
    minimal_transversals(n, &supports.into_iter().collect::<Vec<_>>())
}

/// Support bases of `ℂV_φ`, which are the cobases of `M_φ`.
pub fn support_bases<T: Tract>(phi: &GpFunction<T>) -> Vec<Subset> {
    let full = subset::full(phi.n());
    let mut out: Vec<Subset> = phi.underlying_matroid().bases().iter().map(|&b| full & !b).collect();
    out.sort_by_key(|&b| subset::lex_key(b));
    out
}

/// A family `{S_i : i ∈ J}` with `S_i(j) = δ_{i,j}` for `i, j ∈ J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<T: Tract> {
    index: Subset,
    rows: BTreeMap<usize, Vec<T::Elem>>,
}

impl<T: Tract> NormalForm<T> {
    /// Checks the Kronecker property.
    pub fn new(tract: &T, rows: BTreeMap<usize, Vec<T::Elem>>) -> Result<Self> {
        let index = rows.keys().fold(0, |acc, &i| acc | 1 << i);
        for (&i, row) in &rows {
            for &j in rows.keys() {
                let expected = if i == j { tract.one() } else { tract.zero() };
                if row.get(j) != Some(&expected) {
                    return Err(Error::Input(format!("row {i} is not Kronecker at {j}")));
                }
            }
        }
        Ok(NormalForm { index, rows })
    }

    pub fn index(&self) -> Subset {
        self.index
    }

    pub fn rows(&self) -> &BTreeMap<usize, Vec<T::Elem>> {
        &self.rows
    }
}

/// The characteristic function `δ_e`.
pub fn unit_vector<T: Tract>(tract: &T, n: usize, e: usize) -> Vec<T::Elem> {
    (0..n).map(|i| if i == e { tract.one() } else { tract.zero() }).collect()
}

/// The normal basis for a cobasis `B`: for `i ∈ B`, the circuit supported on
/// the fundamental circuit of `i` with respect to the basis `E - B`, scaled
/// to `S_i(i) = 1`.
pub fn normal_basis<T: Tract>(phi: &GpFunction<T>, cobasis: Subset) -> Result<NormalForm<T>> {
    let m = phi.underlying_matroid();
    let full = m.ground_set();
    let basis = full & !cobasis;
    if !m.is_basis(basis) {
        return Err(Error::Input(format!("{:?} is not a cobasis", subset::elements(cobasis))));
    }
    let t = phi.tract();
    let dual = phi.dual();
    let mut rows = BTreeMap::new();
    for i in subset::elements(cobasis) {
        let circuit = m.fundamental_circuit(basis, i);
        let c = dual.fundamental_cocircuit(full & !circuit);
        let scale = t.inv(&c[i])?;
        rows.insert(i, c.iter().map(|x| t.mul(&scale, x)).collect());
    }
    NormalForm::new(t, rows)
}

/// `X ∈ ⟨S_i⟩`: for every `e ∉ J`, `X(e) - Σ_{a ∈ J} X(a)·S_a(e)` is null.
pub fn in_span<T: Tract>(tract: &T, x: &[T::Elem], nf: &NormalForm<T>) -> bool {
    (0..x.len())
        .filter(|&e| !subset::contains(nf.index, e))
        .all(|e| {
            let mut terms = vec![x[e].clone()];
            for (&a, s) in &nf.rows {
                terms.push(tract.negate(&tract.mul(&x[a], &s[e])));
            }
            tract.is_null(&terms)
        })
}

/// Anderson's definition of a linear subspace, decided by enumeration: `V`
/// is `T`-invariant and equals the intersection of the spans of all its
/// normal bases.
pub fn is_linear_subspace<T: Tract>(tract: &T, n: usize, set: &[Vec<T::Elem>], guard: u64) -> Result<bool> {
    if set.iter().any(|x| x.len() != n) {
        return Err(Error::Input("members must have length n".into()));
    }
    let all = all_functions(tract, n, guard)?;
    let members: BTreeSet<&Vec<T::Elem>> = set.iter().collect();
    let elems = tract.elements().expect("finite tract");
    for x in set {
        for c in &elems {
            let scaled: Vec<T::Elem> = x.iter().map(|a| tract.mul(c, a)).collect();
            if !members.contains(&scaled) {
                return Ok(false);
            }
        }
    }
    let mut inside: Vec<bool> = vec![true; all.len()];
    for b in support_bases_of_set(tract, n, set) {
        let index = subset::elements(b);
        // Candidates for S_i: members with S_i(j) = δ_{i,j} on B.
        let candidates: Vec<Vec<&Vec<T::Elem>>> = index
            .iter()
            .map(|&i| {
                set.iter()
                    .filter(|x| {
                        index.iter().all(|&j| {
                            x[j] == if i == j { tract.one() } else { tract.zero() }
                        })
                    })
                    .collect()
            })
            .collect();
        let combos: u64 = candidates.iter().map(|c| c.len() as u64).product();
        if combos > guard {
            return Err(Error::Guard(format!("{combos} normal bases exceed the guard {guard}")));
        }
        let mut choice = vec![0usize; index.len()];
        if candidates.iter().any(|c| c.is_empty()) {
            // No normal basis for B: the intersection is taken over nothing.
            continue;
        }
        loop {
            let rows = index
                .iter()
                .zip(&choice)
                .zip(&candidates)
                .map(|((&i, &k), c)| (i, c[k].clone()))
                .collect();
            let nf = NormalForm { index: b, rows };
            for (slot, x) in inside.iter_mut().zip(&all) {
                if *slot && !in_span(tract, x, &nf) {
                    *slot = false;
                }
            }
            let mut pos = index.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    break;
                }
                choice[pos] = 0;
            }
            if choice.iter().all(|&k| k == 0) {
                break;
            }
        }
    }
    let spanned: BTreeSet<&Vec<T::Elem>> = all
        .iter()
        .zip(&inside)
        .filter(|(_, &keep)| keep)
        .map(|(x, _)| x)
        .collect();
    Ok(spanned == members)
}

/// The bijection `Z(X) = {e : X(e) = 0}` from the covectors of a Krasner
/// matroid onto its flats, keyed by flat. Fails if `Z` is not a bijection.
pub fn k_flats_bijection(phi: &GpFunction<Krasner>) -> Result<BTreeMap<Subset, Vec<bool>>> {
    let n = phi.n();
    let full = subset::full(n);
    let covs = covectors(phi).enumerate(ENUMERATION_GUARD)?;
    let mut map = BTreeMap::new();
    for x in covs {
        let zeros = full & !support(&Krasner, &x);
        if map.insert(zeros, x).is_some() {
            return Err(Error::Internal(format!(
                "two covectors vanish exactly on {:?}",
                subset::elements(zeros)
            )));
        }
    }
    let flats: BTreeSet<Subset> = phi.underlying_matroid().flats().flats().iter().copied().collect();
    if map.keys().copied().collect::<BTreeSet<_>>() != flats {
        return Err(Error::Internal("zero sets of covectors are not the flats".into()));
    }
    Ok(map)
}

/// Coordinatewise maximum of `c_i · g_i`, the tropical linear combination.
pub fn tropical_combination<I: ExactInteger>(
    coefficients: &[Ratio<I>],
    generators: &[Vec<Ratio<I>>],
) -> Vec<Ratio<I>> {
    let n = generators.first().map_or(0, Vec::len);
    (0..n)
        .map(|e| {
            coefficients
                .iter()
                .zip(generators)
                .map(|(c, g)| c * &g[e])
                .max()
                .unwrap_or_else(|| Ratio::from_integer(I::zero()))
        })
        .collect()
}

/// Random tropical linear combinations of nonempty random subsets of
/// `generators` with unit coefficients. Every sample lies in any tropical
/// linear space containing the generators.
pub fn sample_tropical_combinations<I: ExactInteger>(
    generators: &[Vec<Ratio<I>>],
    count: usize,
    rng: &mut dyn RngCore,
) -> Vec<Vec<Ratio<I>>> {
    let t = Tropical::<I>::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count && !generators.is_empty() {
        let mut chosen = Vec::new();
        let mut coefficients = Vec::new();
        for g in generators {
            if rng.random_bool(0.5) {
                chosen.push(g.clone());
                coefficients.push(t.sample_unit(rng));
            }
        }
        if chosen.is_empty() {
            let g = &generators[rng.random_range(0..generators.len())];
            chosen.push(g.clone());
            coefficients.push(t.sample_unit(rng));
        }
        out.push(tropical_combination(&coefficients, &chosen));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::tract::PrimeField;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn k(bits: &str) -> Vec<bool> {
        bits.chars().map(|c| c == '1').collect()
    }

    fn k_u23() -> GpFunction<Krasner> {
        GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap()
    }

    #[test]
    fn krasner_u23_vectors_and_covectors() {
        let phi = k_u23();
        let v = vectors(&phi).enumerate(ENUMERATION_GUARD).unwrap();
        assert_eq!(v, vec![k("000"), k("111")]);
        let c = covectors(&phi).enumerate(ENUMERATION_GUARD).unwrap();
        assert_eq!(c, vec![k("000"), k("011"), k("101"), k("110"), k("111")]);
    }

    #[test]
    fn support_bases_match_transversals() {
        let phi = k_u23();
        assert_eq!(support_bases(&phi), vec![0b001, 0b010, 0b100]);
        let v = vectors(&phi).enumerate(ENUMERATION_GUARD).unwrap();
        assert_eq!(support_bases_of_set(&Krasner, 3, &v), support_bases(&phi));
        let u24 = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 4)).unwrap();
        assert_eq!(support_bases(&u24).len(), 6);
    }

    #[test]
    fn normal_bases_and_spans() {
        let phi = k_u23();
        let nf = normal_basis(&phi, 0b100).unwrap();
        assert_eq!(nf.rows()[&2], k("111"));
        assert!(in_span(&Krasner, &k("111"), &nf));
        assert!(in_span(&Krasner, &k("000"), &nf));
        assert!(!in_span(&Krasner, &k("110"), &nf));
        assert!(normal_basis(&phi, 0b011).is_err());
    }

    #[test]
    fn gf3_normal_basis_matches_kernel() {
        let f3 = PrimeField::new(3).unwrap();
        // Kernel of [[1,0,1,2],[0,1,1,1]] in echelon form with respect to {0,1}:
        // S_2 = (-1,-1,1,0) = (2,2,1,0), S_3 = (-2,-1,0,1) = (1,2,0,1).
        let phi = GpFunction::from_matrix(f3, &[vec![1, 0, 1, 2], vec![0, 1, 1, 1]]).unwrap();
        let nf = normal_basis(&phi, 0b1100).unwrap();
        assert_eq!(nf.rows()[&2], vec![2, 2, 1, 0]);
        assert_eq!(nf.rows()[&3], vec![1, 2, 0, 1]);
        let v = vectors(&phi);
        assert!(nf.rows().values().all(|s| v.contains(s)));
    }

    #[test]
    fn linear_subspaces_over_krasner() {
        assert!(is_linear_subspace(&Krasner, 3, &[k("000"), k("111")], ENUMERATION_GUARD).unwrap());
        let not = [k("000"), k("110"), k("011")];
        assert!(!is_linear_subspace(&Krasner, 3, &not, ENUMERATION_GUARD).unwrap());
        assert!(!is_linear_subspace(&Krasner, 3, &[], ENUMERATION_GUARD).unwrap());
    }

    #[test]
    fn flats_bijection() {
        let map = k_flats_bijection(&k_u23()).unwrap();
        assert_eq!(map.len(), 5);
        assert_eq!(map[&0b111], k("000"));
        assert_eq!(map[&0], k("111"));
    }

    #[test]
    fn tropical_samples_are_vectors() {
        let values = [(0b0011, 2), (0b1100, 2), (0b0101, 2), (0b1010, 2), (0b1001, 1), (0b0110, 1)];
        let phi = GpFunction::new_checked(
            Tropical::<BigInt>::new(),
            4,
            2,
            values.map(|(k, v)| (k, Ratio::from_integer(BigInt::from(v)))),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let v = vectors(&phi);
        for x in sample_tropical_combinations(&phi.circuits(), 50, &mut rng) {
            assert!(v.contains(&x));
        }
    }
}
