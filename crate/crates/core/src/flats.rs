//! T-flats, lattices of T-flats, and the LF axioms.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gp::GpFunction;
use crate::matroid::Matroid;
use crate::rep::{gp_from_rep, reconstruct_from_lambda2, Lambda2Representation, Representation};
use crate::spaces::{
    all_functions, is_linear_subspace, support_bases_of_set, unit_vector, vectors, Role,
    VectorSpacePredicate, ENUMERATION_GUARD,
};
use crate::subset::{self, Subset};
use crate::tract::{dot_is_null, support, Tract};

/// Explicit collections handed to the LF checker are limited to this many
/// functions `E → T`.
pub const LF_GUARD: u64 = 1_000_000;

/// `ℂV_F = {η_H : F ⊆ H}^⊥`, with its members when the tract is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TFlat<T: Tract> {
    flat: Subset,
    predicate: VectorSpacePredicate<T>,
    members: Option<Vec<Vec<T::Elem>>>,
}

impl<T: Tract> TFlat<T> {
    pub fn flat(&self) -> Subset {
        self.flat
    }

    pub fn predicate(&self) -> &VectorSpacePredicate<T> {
        &self.predicate
    }

    pub fn members(&self) -> Option<&[Vec<T::Elem>]> {
        self.members.as_deref()
    }

    pub fn contains(&self, x: &[T::Elem]) -> bool {
        self.predicate.contains(x)
    }
}

fn t_flat_with<T: Tract>(
    phi: &GpFunction<T>,
    cocircuits: &[(Subset, Vec<T::Elem>)],
    flat: Subset,
    universe: Option<&[Vec<T::Elem>]>,
) -> Result<TFlat<T>> {
    if !phi.underlying_matroid().is_flat(flat) {
        return Err(Error::NotAFlat(subset::elements(flat)));
    }
    let generators = cocircuits
        .iter()
        .filter(|(h, _)| subset::is_subset(flat, *h))
        .map(|(_, eta)| eta.clone())
        .collect();
    let predicate = VectorSpacePredicate::new(phi.tract().clone(), phi.n(), Role::TFlat, generators)?;
    let members = match universe {
        Some(all) => {
            let members: Vec<_> = all.iter().filter(|x| predicate.contains(x)).cloned().collect();
            let quotient = vectors(&phi.f_quotient(flat)?);
            if !all.iter().all(|x| quotient.contains(x) == predicate.contains(x)) {
                return Err(Error::Internal(format!(
                    "T-flat of {:?} differs from the vectors of its F-quotient",
                    subset::elements(flat)
                )));
            }
            Some(members)
        }
        None => None,
    };
    Ok(TFlat { flat, predicate, members })
}

fn universe<T: Tract>(tract: &T, n: usize) -> Result<Option<Vec<Vec<T::Elem>>>> {
    if !tract.is_finite() {
        return Ok(None);
    }
    match all_functions(tract, n, ENUMERATION_GUARD) {
        Ok(all) => Ok(Some(all)),
        Err(Error::Guard(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The T-flat of `F`. For finite tracts the members are enumerated and
/// compared against the vectors of the F-quotient.
pub fn t_flat<T: Tract>(phi: &GpFunction<T>, flat: Subset) -> Result<TFlat<T>> {
    let all = universe(phi.tract(), phi.n())?;
    t_flat_with(phi, &phi.cocircuits(), flat, all.as_deref())
}

/// `{e : δ_e ∈ V}` for a membership test.
pub fn coordinates<T: Tract>(tract: &T, n: usize, contains: impl Fn(&[T::Elem]) -> bool) -> Subset {
    (0..n)
        .filter(|&e| contains(&unit_vector(tract, n, e)))
        .fold(0, |acc, e| acc | 1 << e)
}

/// The T-flats of all flats of `M_φ`, in the order of the lattice of flats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TFlatLattice<T: Tract> {
    tract: T,
    n: usize,
    matroid: Matroid,
    flats: Vec<TFlat<T>>,
}

impl<T: Tract> TFlatLattice<T> {
    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn flats(&self) -> &[TFlat<T>] {
        &self.flats
    }

    pub fn get(&self, flat: Subset) -> Option<&TFlat<T>> {
        self.flats.iter().find(|f| f.flat == flat)
    }

    /// The member sets, for finite tracts.
    pub fn to_explicit(&self) -> Option<ExplicitCollection<T>> {
        let members = self
            .flats
            .iter()
            .map(|f| f.members.as_ref().map(|m| m.iter().cloned().collect()))
            .collect::<Option<Vec<BTreeSet<_>>>>()?;
        Some(ExplicitCollection { tract: self.tract.clone(), n: self.n, members })
    }
}

/// `{ℂV_F : F ∈ Λ}`. Verifies `Δ_{ℂV_F} = F` for every flat, which makes
/// `F ↦ ℂV_F` an order embedding; for finite tracts the enumerated members
/// are additionally compared for inclusion in both directions.
pub fn lattice_of_t_flats<T: Tract>(phi: &GpFunction<T>) -> Result<TFlatLattice<T>> {
    let all = universe(phi.tract(), phi.n())?;
    let cocircuits = phi.cocircuits();
    let lattice = phi.underlying_matroid().flats();
    let mut flats = Vec::with_capacity(lattice.len());
    for &f in lattice.flats() {
        let tf = t_flat_with(phi, &cocircuits, f, all.as_deref())?;
        let delta = coordinates(phi.tract(), phi.n(), |x| tf.contains(x));
        if delta != f {
            return Err(Error::Internal(format!(
                "coordinates of the T-flat of {:?} are {:?}",
                subset::elements(f),
                subset::elements(delta)
            )));
        }
        flats.push(tf);
    }
    let sets: Option<Vec<BTreeSet<&Vec<T::Elem>>>> = flats
        .iter()
        .map(|f| f.members.as_ref().map(|m| m.iter().collect()))
        .collect();
    if let Some(sets) = sets {
        for (a, fa) in flats.iter().enumerate() {
            for (b, fb) in flats.iter().enumerate() {
                if sets[a].is_subset(&sets[b]) != subset::is_subset(fa.flat, fb.flat) {
                    return Err(Error::Internal("T-flats are not ordered like the flats".into()));
                }
            }
        }
    }
    Ok(TFlatLattice {
        tract: phi.tract().clone(),
        n: phi.n(),
        matroid: phi.underlying_matroid().clone(),
        flats,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LfAxiom {
    Lf1,
    Lf2,
    Lf3,
    Lf4,
    Lf5,
    Lf1Star,
    Lf2Star,
    Lf3Star,
    Lf4Star,
}

impl fmt::Display for LfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LfAxiom::Lf1 => "LF1",
            LfAxiom::Lf2 => "LF2",
            LfAxiom::Lf3 => "LF3",
            LfAxiom::Lf4 => "LF4",
            LfAxiom::Lf5 => "LF5",
            LfAxiom::Lf1Star => "LF1*",
            LfAxiom::Lf2Star => "LF2*",
            LfAxiom::Lf3Star => "LF3*",
            LfAxiom::Lf4Star => "LF4*",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfViolation {
    pub axiom: LfAxiom,
    pub detail: String,
}

impl fmt::Display for LfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.axiom, self.detail)
    }
}

fn violation(axiom: LfAxiom, detail: impl Into<String>) -> Error {
    Error::Lf(LfViolation { axiom, detail: detail.into() })
}

/// A finite collection of subsets of `T^E`, given by their members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitCollection<T: Tract> {
    tract: T,
    n: usize,
    members: Vec<BTreeSet<Vec<T::Elem>>>,
}

impl<T: Tract> ExplicitCollection<T> {
    /// Duplicate sets are merged; every function must have length `n` and
    /// values in the tract.
    pub fn new(tract: T, n: usize, sets: Vec<BTreeSet<Vec<T::Elem>>>) -> Result<Self> {
        let mut members: Vec<BTreeSet<Vec<T::Elem>>> = Vec::with_capacity(sets.len());
        for set in sets {
            for x in &set {
                if x.len() != n {
                    return Err(Error::Input(format!("function of length {} in T^{n}", x.len())));
                }
                for a in x {
                    tract.check(a)?;
                }
            }
            if !members.contains(&set) {
                members.push(set);
            }
        }
        Ok(ExplicitCollection { tract, n, members })
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[BTreeSet<Vec<T::Elem>>] {
        &self.members
    }

    pub fn without(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.members.remove(index);
        out
    }

    pub fn replace(&self, index: usize, set: BTreeSet<Vec<T::Elem>>) -> Self {
        let mut out = self.clone();
        out.members[index] = set;
        out
    }

    /// Equality as collections of sets.
    pub fn same_sets(&self, other: &Self) -> bool {
        let a: BTreeSet<&BTreeSet<Vec<T::Elem>>> = self.members.iter().collect();
        let b: BTreeSet<&BTreeSet<Vec<T::Elem>>> = other.members.iter().collect();
        self.n == other.n && a == b
    }

    pub fn coordinates(&self, index: usize) -> Subset {
        coordinates(&self.tract, self.n, |x| self.members[index].contains(x))
    }
}

/// Coranks in a finite poset with a top, by the chain definition: the
/// shortest chain of covering relations up to the top. `None` when the top
/// is not reachable.
fn chain_coranks(len: usize, below: impl Fn(usize, usize) -> bool, top: usize) -> Vec<Option<usize>> {
    let covers = |i: usize, j: usize| below(i, j) && !(0..len).any(|k| below(i, k) && below(k, j));
    let mut corank = vec![None; len];
    corank[top] = Some(0);
    let mut queue = VecDeque::from([top]);
    while let Some(j) = queue.pop_front() {
        let c = corank[j].expect("visited");
        for i in 0..len {
            if corank[i].is_none() && covers(i, j) {
                corank[i] = Some(c + 1);
                queue.push_back(i);
            }
        }
    }
    corank
}

/// What the LF checker learned about a collection that passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfStructure<T: Tract> {
    /// `Δ` of each member, in member order.
    pub coordinates: Vec<Subset>,
    /// Corank of each member.
    pub coranks: Vec<usize>,
    /// The coordinate lattice `Λ`.
    pub flats: Vec<Subset>,
    /// `η_H` for each hyperplane of `Λ`, found by the generator scan.
    pub hyperplane_functions: BTreeMap<Subset, Vec<T::Elem>>,
    /// The corank-2 member over each corank-2 flat of `Λ`.
    pub corank_two_members: BTreeMap<Subset, usize>,
}

struct Basics {
    coordinates: Vec<Subset>,
    coranks: Vec<usize>,
    hyperplane_members: Vec<usize>,
}

fn check_guard<T: Tract>(c: &ExplicitCollection<T>) -> Result<Vec<Vec<T::Elem>>> {
    all_functions(&c.tract, c.n, LF_GUARD)
}

/// LF1 (or LF1*) and LF2 (or LF2*), with the member coranks they need.
fn check_lf1_lf2<T: Tract>(
    c: &ExplicitCollection<T>,
    all: &[Vec<T::Elem>],
    star: bool,
) -> Result<Basics> {
    let (lf1, lf2) = if star { (LfAxiom::Lf1Star, LfAxiom::Lf2Star) } else { (LfAxiom::Lf1, LfAxiom::Lf2) };
    let m = &c.members;
    let Some(top) = m.iter().position(|s| s.len() == all.len()) else {
        return Err(violation(lf1, "the collection does not contain T^E"));
    };
    // Meets are taken in the inclusion order: T-flats of non-modular pairs
    // meet strictly inside their set intersection.
    for a in 0..m.len() {
        for b in a + 1..m.len() {
            let lower: Vec<usize> = (0..m.len())
                .filter(|&i| m[i].is_subset(&m[a]) && m[i].is_subset(&m[b]))
                .collect();
            let has_meet = lower.iter().any(|&g| lower.iter().all(|&i| m[i].is_subset(&m[g])));
            if !has_meet {
                return Err(violation(lf1, format!("members {a} and {b} have no greatest common lower bound")));
            }
        }
    }
    let below = |i: usize, j: usize| i != j && m[i].is_subset(&m[j]);
    let coranks = chain_coranks(m.len(), below, top);
    let coranks: Vec<usize> = coranks
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Internal("member below no chain to the top".into())))
        .collect::<Result<_>>()?;
    let hyperplane_members: Vec<usize> = (0..m.len()).filter(|&i| coranks[i] == 1).collect();
    for i in 0..m.len() {
        let mut meet: BTreeSet<&Vec<T::Elem>> = all.iter().collect();
        for &h in &hyperplane_members {
            if m[i].is_subset(&m[h]) {
                meet.retain(|x| m[h].contains(*x));
            }
        }
        if meet.len() != m[i].len() {
            return Err(violation(
                lf2,
                format!("member {i} is not the intersection of the hyperplanes containing it"),
            ));
        }
    }
    let coordinates = (0..m.len()).map(|i| c.coordinates(i)).collect();
    Ok(Basics { coordinates, coranks, hyperplane_members })
}

/// Lexicographically first `η` with support `E - Δ_V` and `η^⊥ = V`.
fn orthogonal_generator<T: Tract>(
    tract: &T,
    n: usize,
    set: &BTreeSet<Vec<T::Elem>>,
    all: &[Vec<T::Elem>],
) -> Option<Vec<T::Elem>> {
    let delta = coordinates(tract, n, |x| set.contains(x));
    let wanted = subset::full(n) & !delta;
    all.iter()
        .filter(|eta| support(tract, eta) == wanted)
        .filter(|eta| set.iter().all(|x| dot_is_null(tract, x, eta)))
        .find(|eta| all.iter().filter(|x| dot_is_null(tract, x, eta)).count() == set.len())
        .cloned()
}

/// Checks LF1–LF5 on an explicit collection over a finite tract.
///
/// LF1 asks for `T^E` and for meets in the inclusion order, i.e. every two
/// members have a greatest common lower bound among the members. Literal
/// closure under set intersection fails already for `U_{3,4}`, whose
/// T-flats over two disjoint hyperplanes intersect in a set that is no
/// T-flat.
///
/// LF3 is read as: members of corank at most two map to flats of the same
/// corank, every hyperplane of `Λ` has exactly one preimage, and every
/// corank-2 flat of `Λ` has exactly one preimage of corank two.
pub fn check_lf_axioms<T: Tract>(c: &ExplicitCollection<T>) -> Result<LfStructure<T>> {
    let all = check_guard(c)?;
    let Basics { coordinates: delta, coranks, .. } = check_lf1_lf2(c, &all, false)?;
    let m = &c.members;

    let flats: Vec<Subset> = delta.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let full = subset::full(c.n);
    let top = flats.iter().position(|&f| f == full).expect("Δ(T^E) = E");
    let flat_coranks = chain_coranks(flats.len(), |i, j| i != j && subset::is_subset(flats[i], flats[j]), top);
    let corank_of_flat = |f: Subset| flat_coranks[flats.iter().position(|&g| g == f).expect("flat")];
    for i in 0..m.len() {
        if coranks[i] <= 2 && corank_of_flat(delta[i]) != Some(coranks[i]) {
            return Err(violation(
                LfAxiom::Lf3,
                format!(
                    "member {i} has corank {} but its coordinates {:?} do not",
                    coranks[i],
                    subset::elements(delta[i])
                ),
            ));
        }
    }
    let mut corank_two_members = BTreeMap::new();
    let mut hyperplanes = Vec::new();
    for (k, &f) in flats.iter().enumerate() {
        match flat_coranks[k] {
            Some(1) => {
                let pre: Vec<usize> = (0..m.len()).filter(|&i| delta[i] == f).collect();
                if pre.len() != 1 {
                    return Err(violation(
                        LfAxiom::Lf3,
                        format!("hyperplane {:?} has {} preimages", subset::elements(f), pre.len()),
                    ));
                }
                hyperplanes.push((f, pre[0]));
            }
            Some(2) => {
                let pre: Vec<usize> = (0..m.len()).filter(|&i| delta[i] == f && coranks[i] == 2).collect();
                if pre.len() != 1 {
                    return Err(violation(
                        LfAxiom::Lf3,
                        format!(
                            "corank-2 flat {:?} has {} corank-2 preimages",
                            subset::elements(f),
                            pre.len()
                        ),
                    ));
                }
                corank_two_members.insert(f, pre[0]);
            }
            _ => {}
        }
    }

    let mut hyperplane_functions = BTreeMap::new();
    for &(h, i) in &hyperplanes {
        match orthogonal_generator(&c.tract, c.n, &m[i], &all) {
            Some(eta) => {
                hyperplane_functions.insert(h, eta);
            }
            None => {
                return Err(violation(
                    LfAxiom::Lf4,
                    format!("hyperplane member over {:?} is no orthogonal complement of a single function", subset::elements(h)),
                ))
            }
        }
    }

    for (&f, &i) in &corank_two_members {
        let upper: Vec<Subset> = flats.iter().copied().filter(|&g| subset::is_subset(f, g)).collect();
        let matroid = Matroid::from_flats(c.n, &upper).map_err(|_| {
            violation(LfAxiom::Lf5, format!("flats above {:?} are not the flats of a matroid", subset::elements(f)))
        })?;
        let members: Vec<Vec<T::Elem>> = m[i].iter().cloned().collect();
        let support_bases = support_bases_of_set(&c.tract, c.n, &members);
        let mut cobases: Vec<Subset> = matroid.bases().iter().map(|&b| full & !b).collect();
        cobases.sort_by_key(|&b| subset::lex_key(b));
        if cobases != support_bases {
            return Err(violation(
                LfAxiom::Lf5,
                format!("support bases over {:?} are not the cobases of the matroid on Λ_F", subset::elements(f)),
            ));
        }
    }

    Ok(LfStructure { coordinates: delta, coranks, flats, hyperplane_functions, corank_two_members })
}

/// The alternative axioms LF1*–LF4*: hyperplanes are vector sets of rank-1
/// T-matroids and corank-2 members vector sets of rank-2 T-matroids.
pub fn check_lf_star_axioms<T: Tract>(c: &ExplicitCollection<T>) -> Result<()> {
    let all = check_guard(c)?;
    let basics = check_lf1_lf2(c, &all, true)?;
    for &i in &basics.hyperplane_members {
        if orthogonal_generator(&c.tract, c.n, &c.members[i], &all).is_none() {
            return Err(violation(LfAxiom::Lf3Star, format!("hyperplane member {i} is no rank-1 vector set")));
        }
    }
    for i in (0..c.members.len()).filter(|&i| basics.coranks[i] == 2) {
        let members: Vec<Vec<T::Elem>> = c.members[i].iter().cloned().collect();
        let rank_two = is_linear_subspace(&c.tract, c.n, &members, LF_GUARD)?
            && support_bases_of_set(&c.tract, c.n, &members)
                .iter()
                .all(|&b| subset::size(b) + 2 == c.n);
        if !rank_two {
            return Err(violation(LfAxiom::Lf4Star, format!("corank-2 member {i} is no rank-2 vector set")));
        }
    }
    Ok(())
}

/// Rebuilds `[φ]` from a collection satisfying LF1–LF5: hyperplane functions
/// come from the generator scan, rank-2 functions from the hyperplane
/// functions above each corank-2 flat, and the result from the corank ≤ 2
/// family.
pub fn gp_from_lattice<T: Tract>(c: &ExplicitCollection<T>) -> Result<GpFunction<T>> {
    let s = check_lf_axioms(c)?;
    let n = c.n;
    let matroid = Matroid::from_flats(n, &s.flats)
        .map_err(|e| Error::Internal(format!("coordinate lattice is not a matroid lattice: {e}")))?;
    let mut psi = Vec::new();
    for (&h, eta) in &s.hyperplane_functions {
        let values = (0..n).map(|e| (1 << e, eta[e].clone()));
        psi.push((h, GpFunction::new_checked(c.tract.clone(), n, 1, values)?));
    }
    for (&f, &i) in &s.corank_two_members {
        let m_f = matroid.contract_with_loops(f)?;
        let eta = s
            .hyperplane_functions
            .iter()
            .filter(|(h, _)| subset::is_subset(f, **h))
            .map(|(&h, eta)| (h, eta.clone()));
        let psi_f = gp_from_rep(&Representation::new(c.tract.clone(), m_f, eta)?)?;
        let v = vectors(&psi_f);
        let all = all_functions(&c.tract, n, LF_GUARD)?;
        if all.iter().any(|x| v.contains(x) != c.members[i].contains(x)) {
            return Err(Error::Internal(format!(
                "rank-2 function over {:?} does not reproduce its member",
                subset::elements(f)
            )));
        }
        psi.push((f, psi_f));
    }
    let l = Lambda2Representation::new(c.tract.clone(), matroid, psi)?;
    reconstruct_from_lambda2(&l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{Krasner, PrimeField};

    fn k(bits: &str) -> Vec<bool> {
        bits.chars().map(|c| c == '1').collect()
    }

    fn k_u23() -> GpFunction<Krasner> {
        GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap()
    }

    #[test]
    fn t_flats_of_krasner_u23() {
        let phi = k_u23();
        let f0 = t_flat(&phi, 0b001).unwrap();
        assert_eq!(f0.members().unwrap(), &[k("000"), k("011"), k("100"), k("111")]);
        let bottom = t_flat(&phi, 0).unwrap();
        assert_eq!(bottom.members().unwrap(), &[k("000"), k("111")]);
        assert_eq!(coordinates(&Krasner, 3, |x| bottom.contains(x)), 0);
        let top = t_flat(&phi, 0b111).unwrap();
        assert_eq!(top.members().unwrap().len(), 8);
        assert!(t_flat(&phi, 0b011).is_err());
    }

    #[test]
    fn lattice_and_axioms() {
        let phi = k_u23();
        let lattice = lattice_of_t_flats(&phi).unwrap();
        assert_eq!(lattice.flats().len(), 5);
        let explicit = lattice.to_explicit().unwrap();
        let s = check_lf_axioms(&explicit).unwrap();
        assert_eq!(s.flats, vec![0, 0b001, 0b010, 0b100, 0b111]);
        check_lf_star_axioms(&explicit).unwrap();
        let back = gp_from_lattice(&explicit).unwrap();
        assert!(back.projectively_equal(&phi));
    }

    #[test]
    fn rank_one_lattice_has_two_members() {
        let phi = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(1, 2)).unwrap();
        assert_eq!(lattice_of_t_flats(&phi).unwrap().flats().len(), 2);
    }

    #[test]
    fn dropped_hyperplane_fails_lf5_in_u23() {
        let explicit = lattice_of_t_flats(&k_u23()).unwrap().to_explicit().unwrap();
        let err = check_lf_axioms(&explicit.without(1)).unwrap_err();
        let Error::Lf(v) = err else { panic!("expected an LF violation") };
        assert_eq!(v.axiom, LfAxiom::Lf5);
    }

    #[test]
    fn t_flats_meet_inside_intersections() {
        let phi = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(3, 4)).unwrap();
        let lattice = lattice_of_t_flats(&phi).unwrap();
        let set = |f: Subset| -> BTreeSet<Vec<bool>> { lattice.get(f).unwrap().members().unwrap().iter().cloned().collect() };
        let meet: BTreeSet<Vec<bool>> = set(0b0011).intersection(&set(0b1100)).cloned().collect();
        assert!(meet.contains(&k("1100")));
        assert_ne!(meet, set(0));
        check_lf_axioms(&lattice.to_explicit().unwrap()).unwrap();
    }

    #[test]
    fn gf3_round_trip() {
        let f3 = PrimeField::new(3).unwrap();
        let phi = GpFunction::from_matrix(f3, &[vec![1, 0, 1], vec![0, 1, 2]]).unwrap();
        let explicit = lattice_of_t_flats(&phi).unwrap().to_explicit().unwrap();
        let back = gp_from_lattice(&explicit).unwrap();
        assert!(back.projectively_equal(&phi));
    }
}
