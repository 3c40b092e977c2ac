//! Hyperplane-function representations of T-matroids, matroid quotients, and
//! representations by the F-quotients of flats of corank at most two.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::gp::GpFunction;
use crate::matroid::Matroid;
use crate::subset::{self, Subset};
use crate::tract::{dot_is_null, support, Tract};

/// A map `H ↦ η_H` from the hyperplanes of a matroid to functions `E → T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<T: Tract> {
    tract: T,
    matroid: Matroid,
    eta: BTreeMap<Subset, Vec<T::Elem>>,
}

impl<T: Tract> Representation<T> {
    /// Checks shapes only: every key is a hyperplane and every function has
    /// length `n`. The axioms are checked by [`check_representation`].
    pub fn new(
        tract: T,
        matroid: Matroid,
        eta: impl IntoIterator<Item = (Subset, Vec<T::Elem>)>,
    ) -> Result<Self> {
        let lattice = matroid.flats();
        let mut map = BTreeMap::new();
        for (h, values) in eta {
            if lattice.corank_of(h) != Some(1) {
                return Err(Error::Input(format!(
                    "{:?} is not a hyperplane of the matroid",
                    subset::elements(h)
                )));
            }
            if values.len() != matroid.n() {
                return Err(Error::Input(format!(
                    "function for {:?} has length {}, expected {}",
                    subset::elements(h),
                    values.len(),
                    matroid.n()
                )));
            }
            for v in &values {
                tract.check(v)?;
            }
            map.insert(h, values);
        }
        Ok(Representation { tract, matroid, eta: map })
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn eta(&self, hyperplane: Subset) -> Option<&[T::Elem]> {
        self.eta.get(&hyperplane).map(Vec::as_slice)
    }

    pub fn functions(&self) -> &BTreeMap<Subset, Vec<T::Elem>> {
        &self.eta
    }

    /// Multiplies `η_H` by `factor(H)` for every hyperplane.
    pub fn rescale(&self, mut factor: impl FnMut(Subset) -> T::Elem) -> Self {
        let eta = self
            .eta
            .iter()
            .map(|(&h, v)| {
                let a = factor(h);
                (h, v.iter().map(|x| self.tract.mul(&a, x)).collect())
            })
            .collect();
        Representation { tract: self.tract.clone(), matroid: self.matroid.clone(), eta }
    }
}

/// `η_H(e) = φ(i_1, …, i_{r-1}, e)` for the greedy spanning set of each
/// hyperplane.
pub fn fundamental_rep<T: Tract>(phi: &GpFunction<T>) -> Representation<T> {
    Representation {
        tract: phi.tract().clone(),
        matroid: phi.underlying_matroid().clone(),
        eta: phi.cocircuits().into_iter().collect(),
    }
}

/// Checks that every hyperplane has a function (completeness), R1 (support
/// exactly `E - H`) and R2 (every modular triple is linearly dependent).
pub fn check_representation<T: Tract>(rep: &Representation<T>) -> Result<()> {
    let m = &rep.matroid;
    let lattice = m.flats();
    let full = m.ground_set();
    for h in lattice.hyperplanes() {
        let Some(eta) = rep.eta.get(&h) else {
            return Err(Error::MissingHyperplane(subset::elements(h)));
        };
        let supp = support(&rep.tract, eta);
        if supp != full & !h {
            return Err(Error::R1 { hyperplane: subset::elements(h), support: subset::elements(supp) });
        }
    }
    for f in lattice.corank_two() {
        for triple in m.modular_triples(f)? {
            let etas = triple.map(|h| rep.eta[&h].as_slice());
            if triple_dependent(&rep.tract, m, f, etas)?.is_none() {
                return Err(Error::R2 { triple: triple.map(subset::elements) });
            }
        }
    }
    Ok(())
}

/// Decides whether three hyperplane functions of a modular triple over the
/// corank-2 flat `F` are linearly dependent, returning coefficients
/// `(1, c_2, c_3)` with `η_1 + c_2 η_2 + c_3 η_3` null in every coordinate.
///
/// A dependence with `c_1 = 0` cannot exist, since two hyperplane functions
/// with distinct supports are never proportional. Uniqueness of additive
/// inverses then forces `c_2` at an element of `H_3 - (H_1 ∪ H_2)` and `c_3`
/// at an element of `H_2 - (H_1 ∪ H_3)`; it remains to verify all
/// coordinates.
pub fn triple_dependent<T: Tract>(
    tract: &T,
    matroid: &Matroid,
    flat: Subset,
    etas: [&[T::Elem]; 3],
) -> Result<Option<[T::Elem; 3]>> {
    let n = matroid.n();
    if etas.iter().any(|eta| eta.len() != n) {
        return Err(Error::Input("hyperplane functions must have length n".into()));
    }
    let full = subset::full(n);
    let hyps = etas.map(|eta| full & !support(tract, eta));
    let above = matroid.modular_triples(flat)?;
    let mut sorted = hyps;
    sorted.sort_by_key(|&h| subset::lex_key(h));
    if !above.contains(&sorted) {
        return Err(Error::Input(format!(
            "supports do not form a modular triple over {:?}",
            subset::elements(flat)
        )));
    }
    let [h1, h2, h3] = hyps;
    let only_in = |inside: Subset, a: Subset, b: Subset| {
        subset::elements(inside & !(a | b)).into_iter().next().ok_or_else(|| {
            Error::Internal("covering axiom fails for a modular triple".into())
        })
    };
    let e = only_in(h3, h1, h2)?;
    let e2 = only_in(h2, h1, h3)?;
    let [eta1, eta2, eta3] = etas;
    let c2 = tract.negate(&tract.div(&eta1[e], &eta2[e])?);
    let c3 = tract.negate(&tract.div(&eta1[e2], &eta3[e2])?);
    let coefficients = [tract.one(), c2, c3];
    Ok(combination_is_null(tract, &coefficients, etas).then_some(coefficients))
}

/// Whether `c_1 η_1 + c_2 η_2 + c_3 η_3` is null in every coordinate.
pub fn combination_is_null<T: Tract>(tract: &T, c: &[T::Elem; 3], etas: [&[T::Elem]; 3]) -> bool {
    (0..etas[0].len()).all(|e| {
        let terms: Vec<T::Elem> = (0..3).map(|i| tract.mul(&c[i], &etas[i][e])).collect();
        tract.is_null(&terms)
    })
}

/// Exhaustive search over all nonzero coefficient triples whose first
/// nonzero entry is `1`. Returns `None` for infinite tracts.
pub fn triple_dependent_exhaustive<T: Tract>(
    tract: &T,
    etas: [&[T::Elem]; 3],
) -> Option<Option<[T::Elem; 3]>> {
    let all = tract.elements()?;
    let one = tract.one();
    for c1 in &all {
        for c2 in &all {
            for c3 in &all {
                let c = [c1.clone(), c2.clone(), c3.clone()];
                let lead = c.iter().find(|x| !tract.is_zero(x));
                if lead != Some(&one) {
                    continue;
                }
                if combination_is_null(tract, &c, etas) {
                    return Some(Some(c));
                }
            }
        }
    }
    Some(None)
}

/// Rebuilds the Grassmann–Plücker function of a representation, up to a
/// scalar, from the fundamental relation
/// `φ(B - x, y) / φ(B - x, x) = η_H(y) / η_H(x)` with `H = ⟨B - x⟩`.
///
/// Values are propagated by breadth-first search from the lexicographically
/// least basis, where `φ = 1`. Every exchange edge is then re-checked, and
/// the result is validated as a Grassmann–Plücker function.
pub fn gp_from_rep<T: Tract>(rep: &Representation<T>) -> Result<GpFunction<T>> {
    check_representation(rep)?;
    let t = &rep.tract;
    let m = &rep.matroid;
    let n = m.n();
    if m.rank() == 0 {
        return GpFunction::rank_zero(t.clone(), n, t.one());
    }
    // Value at B - x + y given the value at B.
    let step = |b: Subset, x: usize, y: usize, value: &T::Elem| -> Result<T::Elem> {
        let rest = b & !(1 << x);
        let h = m.closure(rest);
        let eta = &rep.eta[&h];
        let mut with_x = subset::elements(rest);
        let mut with_y = with_x.clone();
        with_x.push(x);
        with_y.push(y);
        // φ(rest, x) as a tuple value, then φ(rest, y).
        let at_x = t.signed(subset::sort_sign(&with_x), value);
        let at_y = t.mul(&at_x, &t.div(&eta[y], &eta[x])?);
        Ok(t.signed(subset::sort_sign(&with_y), &at_y))
    };
    let bases = m.bases();
    let mut values: HashMap<Subset, T::Elem> = HashMap::new();
    values.insert(bases[0], t.one());
    let mut queue = VecDeque::from([bases[0]]);
    while let Some(b) = queue.pop_front() {
        let value = values[&b].clone();
        for x in subset::elements(b) {
            for y in 0..n {
                if subset::contains(b, y) {
                    continue;
                }
                let next = b & !(1 << x) | 1 << y;
                if !m.is_basis(next) || values.contains_key(&next) {
                    continue;
                }
                values.insert(next, step(b, x, y, &value)?);
                queue.push_back(next);
            }
        }
    }
    for &b in bases {
        for x in subset::elements(b) {
            for y in 0..n {
                let next = b & !(1 << x) | 1 << y;
                if subset::contains(b, y) || !m.is_basis(next) {
                    continue;
                }
                if step(b, x, y, &values[&b])? != values[&next] {
                    return Err(Error::Inconsistent(format!(
                        "exchange {:?} -> {:?} disagrees with the propagated values",
                        subset::elements(b),
                        subset::elements(next)
                    )));
                }
            }
        }
    }
    GpFunction::new_checked(t.clone(), n, m.rank(), values)
}

/// Whether `[low]` is a matroid quotient of `[high]`: every hyperplane
/// function of `low` is orthogonal to every circuit of `high`. Returns
/// `false` when the rank of `low` exceeds that of `high`.
pub fn is_quotient<T: Tract>(low: &GpFunction<T>, high: &GpFunction<T>) -> Result<bool> {
    low.require_same_tract(high)?;
    if low.n() != high.n() {
        return Err(Error::Input(format!("ground sets differ: {} vs {}", low.n(), high.n())));
    }
    if low.rank() > high.rank() {
        return Ok(false);
    }
    let circuits = high.circuits();
    let t = low.tract();
    Ok(low
        .cocircuits()
        .iter()
        .all(|(_, eta)| circuits.iter().all(|c| dot_is_null(t, eta, c))))
}

/// A family `F ↦ ψ_F` of Grassmann–Plücker functions of rank `corank F`,
/// indexed by the flats of corank one and two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda2Representation<T: Tract> {
    tract: T,
    matroid: Matroid,
    psi: BTreeMap<Subset, GpFunction<T>>,
}

impl<T: Tract> Lambda2Representation<T> {
    /// Checks shapes only; see [`Lambda2Representation::check`].
    pub fn new(
        tract: T,
        matroid: Matroid,
        psi: impl IntoIterator<Item = (Subset, GpFunction<T>)>,
    ) -> Result<Self> {
        let lattice = matroid.flats();
        let mut map = BTreeMap::new();
        for (f, g) in psi {
            let corank = match lattice.corank_of(f) {
                Some(c @ (1 | 2)) => c,
                Some(c) => {
                    return Err(Error::WrongCorank { flat: subset::elements(f), corank: c, expected: 2 })
                }
                None => return Err(Error::NotAFlat(subset::elements(f))),
            };
            if g.tract() != &tract {
                return Err(Error::TractMismatch(
                    tract.descriptor().to_string(),
                    g.tract().descriptor().to_string(),
                ));
            }
            if g.n() != matroid.n() || g.rank() != corank {
                return Err(Error::Input(format!(
                    "function for {:?} must have n = {} and rank {corank}",
                    subset::elements(f),
                    matroid.n()
                )));
            }
            map.insert(f, g);
        }
        Ok(Lambda2Representation { tract, matroid, psi: map })
    }

    /// The F-quotients of `φ` on all flats of corank one and two.
    pub fn from_gp(phi: &GpFunction<T>) -> Result<Self> {
        let lattice = phi.underlying_matroid().flats();
        let mut psi = BTreeMap::new();
        for f in lattice.hyperplanes().into_iter().chain(lattice.corank_two()) {
            psi.insert(f, phi.f_quotient(f)?);
        }
        Ok(Lambda2Representation {
            tract: phi.tract().clone(),
            matroid: phi.underlying_matroid().clone(),
            psi,
        })
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn psi(&self) -> &BTreeMap<Subset, GpFunction<T>> {
        &self.psi
    }

    pub fn without(&self, flat: Subset) -> Self {
        let mut out = self.clone();
        out.psi.remove(&flat);
        out
    }

    /// Multiplies each `ψ_F` by `factor(F)`.
    pub fn rescale(&self, mut factor: impl FnMut(Subset) -> T::Elem) -> Result<Self> {
        let mut psi = BTreeMap::new();
        for (&f, g) in &self.psi {
            psi.insert(f, g.scale(&factor(f))?);
        }
        Ok(Lambda2Representation { tract: self.tract.clone(), matroid: self.matroid.clone(), psi })
    }

    /// Completeness, ΛR1 (each `ψ_H` is a hyperplane function for `H`) and
    /// ΛR2 (`[ψ_H]` is a matroid quotient of `[ψ_F]` whenever `F ⊆ H`).
    pub fn check(&self) -> Result<()> {
        let lattice = self.matroid.flats();
        let full = self.matroid.ground_set();
        let hyperplanes = lattice.hyperplanes();
        for &h in &hyperplanes {
            let Some(psi_h) = self.psi.get(&h) else {
                return Err(Error::MissingHyperplane(subset::elements(h)));
            };
            let supp = psi_h.values().keys().fold(0, |acc, &k| acc | k);
            if supp != full & !h {
                return Err(Error::R1 { hyperplane: subset::elements(h), support: subset::elements(supp) });
            }
        }
        for f in lattice.corank_two() {
            let Some(psi_f) = self.psi.get(&f) else {
                return Err(Error::Lambda2(format!(
                    "no function for the corank-2 flat {:?}",
                    subset::elements(f)
                )));
            };
            for &h in hyperplanes.iter().filter(|&&h| subset::is_subset(f, h)) {
                if !is_quotient(&self.psi[&h], psi_f)? {
                    return Err(Error::Lambda2(format!(
                        "function for {:?} is not a quotient of the function for {:?}",
                        subset::elements(h),
                        subset::elements(f)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The representation `H ↦ ψ_H`.
    pub fn hyperplane_representation(&self) -> Result<Representation<T>> {
        let n = self.matroid.n();
        let eta = self.matroid.hyperplanes().into_iter().map(|h| {
            let psi_h = &self.psi[&h];
            (h, (0..n).map(|e| psi_h.value(1 << e)).collect())
        });
        Representation::new(self.tract.clone(), self.matroid.clone(), eta)
    }
}

/// The unique `[φ]` with `[φ_F] = [ψ_F]` for all flats of corank at most
/// two. The result is re-verified against every corank-2 function.
pub fn reconstruct_from_lambda2<T: Tract>(l: &Lambda2Representation<T>) -> Result<GpFunction<T>> {
    l.check()?;
    let phi = gp_from_rep(&l.hyperplane_representation()?)?;
    for (&f, psi_f) in &l.psi {
        if !phi.f_quotient(f)?.projectively_equal(psi_f) {
            return Err(Error::Internal(format!(
                "F-quotient of the reconstruction differs at {:?}",
                subset::elements(f)
            )));
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{Krasner, PrimeField, Tropical};
    use num_bigint::BigInt;
    use num_rational::Ratio;

    fn t(v: i64) -> Ratio<BigInt> {
        Ratio::from_integer(BigInt::from(v))
    }

    fn k_u23() -> GpFunction<Krasner> {
        GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap()
    }

    fn trop_u24() -> GpFunction<Tropical<BigInt>> {
        let values = [(0b0011, 2), (0b1100, 2), (0b0101, 2), (0b1010, 2), (0b1001, 1), (0b0110, 1)];
        GpFunction::new_checked(Tropical::new(), 4, 2, values.map(|(k, v)| (k, t(v)))).unwrap()
    }

    #[test]
    fn krasner_fundamental_representation() {
        let rep = fundamental_rep(&k_u23());
        assert_eq!(rep.eta(0b001).unwrap(), &[false, true, true]);
        assert_eq!(rep.eta(0b010).unwrap(), &[true, false, true]);
        assert_eq!(rep.eta(0b100).unwrap(), &[true, true, false]);
        check_representation(&rep).unwrap();
        let phi = gp_from_rep(&rep).unwrap();
        assert_eq!(phi, k_u23());
        let c = triple_dependent(&Krasner, rep.matroid(), 0, [0b001, 0b010, 0b100].map(|h| rep.eta(h).unwrap()))
            .unwrap();
        assert_eq!(c, Some([true, true, true]));
    }

    #[test]
    fn tropical_round_trip() {
        let phi = trop_u24();
        let rep = fundamental_rep(&phi);
        assert_eq!(rep.eta(0b0001).unwrap(), &[t(0), t(2), t(2), t(1)]);
        assert!(gp_from_rep(&rep).unwrap().projectively_equal(&phi));
        let scaled = rep.rescale(|h| t(h as i64 + 1));
        assert!(gp_from_rep(&scaled).unwrap().projectively_equal(&phi));
    }

    #[test]
    fn r1_failure() {
        let rep = fundamental_rep(&k_u23());
        let mut eta = rep.functions().clone();
        eta.insert(0b001, vec![false, false, true]);
        let broken = Representation::new(Krasner, rep.matroid().clone(), eta).unwrap();
        assert_eq!(
            check_representation(&broken).unwrap_err(),
            Error::R1 { hyperplane: vec![0], support: vec![2] }
        );
    }

    #[test]
    fn gf3_cocircuits_are_dependent() {
        let f3 = PrimeField::new(3).unwrap();
        let phi = GpFunction::from_matrix(f3, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let rep = fundamental_rep(&phi);
        let etas = [0b001, 0b010, 0b100].map(|h| rep.eta(h).unwrap());
        let forced = triple_dependent(&f3, rep.matroid(), 0, etas).unwrap();
        assert!(forced.is_some());
        assert!(triple_dependent_exhaustive(&f3, etas).unwrap().is_some());
        // Rescaling one coordinate of one function breaks the dependence.
        let mut bent = etas[2].to_vec();
        bent[0] = f3.mul(&bent[0], &2);
        let bent_etas = [etas[0], etas[1], bent.as_slice()];
        assert_eq!(triple_dependent(&f3, rep.matroid(), 0, bent_etas).unwrap(), None);
        assert_eq!(triple_dependent_exhaustive(&f3, bent_etas).unwrap(), None);
    }

    #[test]
    fn r2_failure_over_gf5() {
        let f5 = PrimeField::new(5).unwrap();
        let rows = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 2], vec![0, 0, 1, 3]];
        let phi = GpFunction::from_matrix(f5, &rows).unwrap();
        let rep = fundamental_rep(&phi);
        let h = 0b0011;
        let mut eta = rep.functions().clone();
        let v = eta.get_mut(&h).unwrap();
        v[2] = f5.mul(&v[2], &2);
        let broken = Representation::new(f5, rep.matroid().clone(), eta).unwrap();
        let err = check_representation(&broken).unwrap_err();
        let Error::R2 { triple } = &err else { panic!("expected R2, got {err:?}") };
        let hs = triple.clone().map(|t| subset::from_elements(&t));
        assert!(hs.contains(&h));
        let etas = hs.map(|h| broken.eta(h).unwrap());
        assert_eq!(triple_dependent_exhaustive(&f5, etas).unwrap(), None);
    }

    #[test]
    fn quotients() {
        let phi = trop_u24();
        for &f in phi.underlying_matroid().flats().flats() {
            let q = phi.f_quotient(f).unwrap();
            assert!(is_quotient(&q, &phi).unwrap());
        }
        let u23 = k_u23();
        let u13 = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(1, 3)).unwrap();
        assert!(is_quotient(&u13, &u23).unwrap());
        assert!(!is_quotient(&u23, &u13).unwrap());
    }

    #[test]
    fn lambda2_round_trip() {
        let phi = trop_u24();
        let l = Lambda2Representation::from_gp(&phi).unwrap();
        assert!(reconstruct_from_lambda2(&l).unwrap().projectively_equal(&phi));
        let scaled = l.rescale(|f| t(f as i64 + 2)).unwrap();
        assert!(reconstruct_from_lambda2(&scaled).unwrap().projectively_equal(&phi));
        let missing = l.without(0b0001);
        assert_eq!(reconstruct_from_lambda2(&missing).unwrap_err(), Error::MissingHyperplane(vec![0]));
    }
}
