//! Hyperplane arrangements over fields, and the canonical hyperplane
//! arrangement of a simple T-matroid.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flats::t_flat;
use crate::gp::GpFunction;
use crate::linalg;
use crate::matroid::Matroid;
use crate::spaces::{all_functions, covectors, is_linear_subspace, support_bases_of_set, VectorSpacePredicate};
use crate::subset::{self, Subset};
use crate::tract::{dot_is_null, FieldTract, Tract};

/// An arrangement of `n` hyperplanes in `K^r`, the kernels of the columns of
/// an `r × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldArrangement<T: FieldTract> {
    field: T,
    rows: Vec<Vec<T::Elem>>,
}

impl<T: FieldTract> FieldArrangement<T> {
    /// Requires full row rank and nonzero, pairwise non-proportional columns.
    /// Returns the arrangement together with the maximal-minor function.
    pub fn from_matrix(field: T, rows: Vec<Vec<T::Elem>>) -> Result<(Self, GpFunction<T>)> {
        let r = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if r == 0 || rows.iter().any(|row| row.len() != n) {
            return Err(Error::Input("matrix must be nonempty and rectangular".into()));
        }
        for row in &rows {
            for a in row {
                field.check(a)?;
            }
        }
        if linalg::rank(&field, &rows) != r {
            return Err(Error::Input("matrix does not have full row rank".into()));
        }
        for i in 0..n {
            if linalg::column_rank(&field, &rows, &[i]) == 0 {
                return Err(Error::Arrangement(format!("column {i} is zero")));
            }
            for j in i + 1..n {
                if linalg::column_rank(&field, &rows, &[i, j]) < 2 {
                    return Err(Error::Arrangement(format!("columns {i} and {j} are proportional")));
                }
            }
        }
        let phi = GpFunction::from_matrix(field.clone(), &rows)?;
        Ok((FieldArrangement { field, rows }, phi))
    }

    pub fn field(&self) -> &T {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<T::Elem>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn gp(&self) -> Result<GpFunction<T>> {
        GpFunction::from_matrix(self.field.clone(), &self.rows)
    }

    /// The arrangement's matroid: `S` has rank `codim ⋂_{i∈S} H_i`, which is
    /// the rank of the columns in `S`.
    pub fn matroid(&self) -> Result<Matroid> {
        let r = self.rank();
        let bases = subset::combinations(self.n(), r)
            .into_iter()
            .filter(|&b| linalg::column_rank(&self.field, &self.rows, &subset::elements(b)) == r);
        Matroid::from_bases(self.n(), r, bases)
    }

    /// The same arrangement with column `i` multiplied by `t[i]`.
    pub fn rescale_columns(&self, t: &[T::Elem]) -> Result<Self> {
        if t.len() != self.n() || t.iter().any(|a| self.field.is_zero(a)) {
            return Err(Error::Input("rescaling needs one unit per column".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().zip(t).map(|(a, s)| self.field.mul(a, s)).collect())
            .collect();
        Ok(FieldArrangement { field: self.field.clone(), rows })
    }
}

/// Units `c` and `t` with `φ_2(B) = c · φ_1(B) · ∏_{e∈B} t_e` for all `B`,
/// found by propagating ratios along basis exchanges and then verified on
/// every subset. One `t_e` per connected component is fixed to 1.
pub fn rescaling_factors<T: FieldTract>(
    a1: &FieldArrangement<T>,
    a2: &FieldArrangement<T>,
) -> Result<Option<(T::Elem, Vec<T::Elem>)>> {
    if a1.field != a2.field || a1.n() != a2.n() || a1.rank() != a2.rank() {
        return Err(Error::Input("arrangements differ in field, n or r".into()));
    }
    let field = &a1.field;
    let (p1, p2) = (a1.gp()?, a2.gp()?);
    if p1.underlying_matroid() != p2.underlying_matroid() {
        return Ok(None);
    }
    let matroid = p1.underlying_matroid();
    let n = a1.n();
    let ratio = |b: Subset| -> Result<T::Elem> { field.div(&p2.value(b), &p1.value(b)) };
    // Exchange edges x → y carry t_y / t_x.
    let mut edges: Vec<(usize, usize, T::Elem)> = Vec::new();
    for &b in matroid.bases() {
        let rb = ratio(b)?;
        for x in subset::elements(b) {
            for y in subset::elements(subset::full(n) & !b) {
                let b2 = (b & !(1 << x)) | 1 << y;
                if matroid.is_basis(b2) {
                    edges.push((x, y, field.div(&ratio(b2)?, &rb)?));
                }
            }
        }
    }
    let mut t: Vec<Option<T::Elem>> = vec![None; n];
    for root in 0..n {
        if t[root].is_some() {
            continue;
        }
        t[root] = Some(field.one());
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let tx = t[x].clone().expect("visited");
            for (a, b, q) in &edges {
                if *a == x && t[*b].is_none() {
                    t[*b] = Some(field.mul(&tx, q));
                    queue.push_back(*b);
                } else if *b == x && t[*a].is_none() {
                    t[*a] = Some(field.div(&tx, q)?);
                    queue.push_back(*a);
                }
            }
        }
    }
    let t: Vec<T::Elem> = t.into_iter().map(|v| v.expect("all assigned")).collect();
    let torus = |b: Subset| subset::elements(b).iter().fold(field.one(), |acc, &e| field.mul(&acc, &t[e]));
    let b0 = matroid.bases()[0];
    let c = field.div(&ratio(b0)?, &torus(b0))?;
    for b in subset::combinations(n, a1.rank()) {
        let expected = field.mul(&field.mul(&c, &p1.value(b)), &torus(b));
        if expected != p2.value(b) {
            return Ok(None);
        }
    }
    Ok(Some((c, t)))
}

pub fn rescaling_equivalent<T: FieldTract>(a1: &FieldArrangement<T>, a2: &FieldArrangement<T>) -> Result<bool> {
    Ok(rescaling_factors(a1, a2)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatVerdict {
    pub flat: Vec<usize>,
    pub corank: usize,
    pub dimension: usize,
    pub equal: bool,
}

/// For every flat `F`, compares `⟨η_H : F ⊆ H⟩` with `⋂_{i∈F} λ(H_i)` by
/// elimination. Any inequality is an internal error.
pub fn verify_flat_intersections<T: FieldTract>(a: &FieldArrangement<T>) -> Result<Vec<FlatVerdict>> {
    let phi = a.gp()?;
    let matroid = phi.underlying_matroid();
    let cocircuits = phi.cocircuits();
    let mut out = Vec::new();
    for &f in matroid.flats().flats() {
        let spanning: Vec<Vec<T::Elem>> = cocircuits
            .iter()
            .filter(|(h, _)| subset::is_subset(f, *h))
            .map(|(_, eta)| eta.clone())
            .collect();
        let lhs = linalg::rref(&a.field, &spanning).0;
        let rhs = linalg::row_space_vanishing_on(&a.field, &a.rows, &subset::elements(f));
        let corank = matroid.corank_of(f);
        let equal = lhs == rhs && lhs.len() == corank;
        out.push(FlatVerdict { flat: subset::elements(f), corank, dimension: rhs.len(), equal });
        if !equal {
            return Err(Error::Internal(format!(
                "flat {:?}: spans of dimensions {} and {} differ",
                subset::elements(f),
                lhs.len(),
                rhs.len()
            )));
        }
    }
    Ok(out)
}

/// `H_i = {X ∈ ℂV*_φ : X(i) = 0}` for a simple `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalArrangement<T: Tract> {
    phi: GpFunction<T>,
    covectors: VectorSpacePredicate<T>,
}

impl<T: Tract> CanonicalArrangement<T> {
    pub fn new(phi: &GpFunction<T>) -> Result<Self> {
        let m = phi.underlying_matroid();
        if !m.is_simple() {
            let loops = subset::elements(m.loops());
            let detail = if loops.is_empty() { "parallel elements".to_string() } else { format!("loops {loops:?}") };
            return Err(Error::NotSimple(detail));
        }
        Ok(CanonicalArrangement { phi: phi.clone(), covectors: covectors(phi) })
    }

    pub fn gp(&self) -> &GpFunction<T> {
        &self.phi
    }

    pub fn covectors(&self) -> &VectorSpacePredicate<T> {
        &self.covectors
    }

    /// Membership in `H_S = ⋂_{i∈S} H_i`.
    pub fn in_intersection(&self, s: Subset, x: &[T::Elem]) -> bool {
        let t = self.phi.tract();
        self.covectors.contains(x) && subset::elements(s).iter().all(|&i| t.is_zero(&x[i]))
    }

    pub fn in_hyperplane(&self, i: usize, x: &[T::Elem]) -> bool {
        self.in_intersection(1 << i, x)
    }
}

impl<T: FieldTract> CanonicalArrangement<T> {
    /// The covector space written as the row space of a matrix, which is a
    /// field arrangement whose hyperplanes are the coordinate slices.
    pub fn to_field_arrangement(&self) -> Result<(FieldArrangement<T>, GpFunction<T>)> {
        let field = self.phi.tract().clone();
        let cocircuits: Vec<Vec<T::Elem>> = self.phi.cocircuits().into_iter().map(|(_, c)| c).collect();
        let basis = linalg::rref(&field, &cocircuits).0;
        FieldArrangement::from_matrix(field, basis)
    }
}

/// `{i : H_S ⊆ H_i}` over a set of covectors.
fn arrangement_closure<T: Tract>(tract: &T, n: usize, covs: &[Vec<T::Elem>], s: Subset) -> Subset {
    let in_s: Vec<&Vec<T::Elem>> = covs
        .iter()
        .filter(|x| subset::elements(s).iter().all(|&i| tract.is_zero(&x[i])))
        .collect();
    (0..n)
        .filter(|&i| in_s.iter().all(|x| tract.is_zero(&x[i])))
        .fold(0, |acc, i| acc | 1 << i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropEScope {
    /// Classify every subset and check every flat.
    All,
    /// Classify every subset, check flats only up to the classification.
    FlatsOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetVerdict {
    pub subset: Vec<usize>,
    pub is_flat: bool,
    pub closure: Vec<usize>,
    pub correct: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropEReport {
    pub subsets: Vec<SubsetVerdict>,
    /// Flats whose `H_F` equals `ℂV_F^⊥` and is a linear subspace of
    /// dimension `cork F`.
    pub flats_checked: usize,
    pub failures: Vec<String>,
}

impl PropEReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Enumerates the covectors of a simple `φ` over a finite tract and checks:
/// `S` is a flat iff `S = {i : H_S ⊆ H_i}`; `H_S = H_{⟨S⟩}`; and with
/// [`PropEScope::All`], for flats `H_F = ℂV_F^⊥` is a linear subspace whose
/// support bases have size `cork F`.
pub fn check_prop_e<T: Tract>(phi: &GpFunction<T>, guard: u64, scope: PropEScope) -> Result<PropEReport> {
    let arrangement = CanonicalArrangement::new(phi)?;
    if !phi.tract().is_finite() {
        return Err(Error::Input("check_prop_e needs a finite tract".into()));
    }
    let tract = phi.tract();
    let n = phi.n();
    let matroid = phi.underlying_matroid();
    let covs = arrangement.covectors.enumerate(guard)?;
    let slice = |s: Subset| -> BTreeSet<&Vec<T::Elem>> {
        covs.iter().filter(|x| arrangement.in_intersection(s, x)).collect()
    };
    let mut report = PropEReport { subsets: Vec::new(), flats_checked: 0, failures: Vec::new() };
    for s in 0..=subset::full(n) {
        let closure = arrangement_closure(tract, n, &covs, s);
        let is_flat = matroid.is_flat(s);
        let correct = (closure == s) == is_flat;
        if !correct {
            report.failures.push(format!("{:?} misclassified", subset::elements(s)));
        }
        if slice(s) != slice(matroid.closure(s)) {
            report.failures.push(format!("H_S differs from its closure's at {:?}", subset::elements(s)));
        }
        report.subsets.push(SubsetVerdict {
            subset: subset::elements(s),
            is_flat,
            closure: subset::elements(closure),
            correct,
        });
    }
    if scope == PropEScope::All {
        let all = all_functions(tract, n, guard)?;
        for &f in matroid.flats().flats() {
            let h_f: Vec<Vec<T::Elem>> = slice(f).into_iter().cloned().collect();
            let tf = t_flat(phi, f)?;
            let members = tf.members().ok_or_else(|| Error::Guard("T-flat too large to enumerate".into()))?;
            let complement: Vec<&Vec<T::Elem>> = all
                .iter()
                .filter(|y| members.iter().all(|x| dot_is_null(tract, x, y)))
                .collect();
            if complement.len() != h_f.len() || complement.iter().zip(&h_f).any(|(a, b)| *a != b) {
                report.failures.push(format!("H_F is not the complement of the T-flat at {:?}", subset::elements(f)));
                continue;
            }
            let corank = matroid.corank_of(f);
            let bases = support_bases_of_set(tract, n, &h_f);
            if !is_linear_subspace(tract, n, &h_f, guard)? || bases.iter().any(|&b| subset::size(b) != corank) {
                report.failures.push(format!("H_F is no subspace of dimension {corank} at {:?}", subset::elements(f)));
                continue;
            }
            report.flats_checked += 1;
        }
    }
    Ok(report)
}

/// Flat classification on a finite sample of covectors, for tracts where
/// the covector set cannot be enumerated. Samples must be covectors; the
/// cocircuits are always included.
pub fn check_prop_e_sampled<T: Tract>(phi: &GpFunction<T>, samples: &[Vec<T::Elem>]) -> Result<PropEReport> {
    let arrangement = CanonicalArrangement::new(phi)?;
    let tract = phi.tract();
    let n = phi.n();
    if let Some(x) = samples.iter().find(|x| !arrangement.covectors.contains(x)) {
        return Err(Error::Input(format!("sample {:?} is not a covector", x)));
    }
    let mut covs: Vec<Vec<T::Elem>> = phi.cocircuits().into_iter().map(|(_, c)| c).collect();
    covs.extend(samples.iter().cloned());
    let matroid = phi.underlying_matroid();
    let mut report = PropEReport { subsets: Vec::new(), flats_checked: 0, failures: Vec::new() };
    for s in 0..=subset::full(n) {
        let closure = arrangement_closure(tract, n, &covs, s);
        let is_flat = matroid.is_flat(s);
        let correct = (closure == s) == is_flat;
        if !correct {
            report.failures.push(format!("{:?} misclassified", subset::elements(s)));
        }
        report.subsets.push(SubsetVerdict {
            subset: subset::elements(s),
            is_flat,
            closure: subset::elements(closure),
            correct,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{Krasner, PrimeField, Rationals};
    use num_bigint::BigInt;

    #[test]
    fn u23_over_gf3() {
        let f3 = PrimeField::new(3).unwrap();
        let (a, phi) = FieldArrangement::from_matrix(f3.clone(), vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(phi.underlying_matroid(), &Matroid::uniform(2, 3));
        assert_eq!(&a.matroid().unwrap(), phi.underlying_matroid());
        let verdicts = verify_flat_intersections(&a).unwrap();
        assert_eq!(verdicts.len(), 5);
        assert!(verdicts.iter().all(|v| v.dimension == v.corank));
        let canonical = CanonicalArrangement::new(&phi).unwrap();
        let (b, psi) = canonical.to_field_arrangement().unwrap();
        assert!(psi.projectively_equal(&phi));
        assert!(rescaling_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn rescaling() {
        let f5 = PrimeField::new(5).unwrap();
        let (a, _) = FieldArrangement::from_matrix(f5.clone(), vec![vec![1, 0, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let scaled = a.rescale_columns(&[1, 1, 2, 1]).unwrap();
        let (_, t) = rescaling_factors(&a, &scaled).unwrap().unwrap();
        assert_eq!(t, vec![1, 1, 2, 1]);
        let rowop = FieldArrangement::from_matrix(f5.clone(), vec![vec![1, 1, 3, 4], vec![0, 1, 2, 3]]).unwrap().0;
        let (c, t) = rescaling_factors(&a, &rowop).unwrap().unwrap();
        assert_eq!((c, t), (1, vec![1; 4]));
        let other = FieldArrangement::from_matrix(f5, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap().0;
        assert!(!rescaling_equivalent(&a, &other).unwrap());
    }

    #[test]
    fn rejects_degenerate_matrices() {
        let q = Rationals::<BigInt>::new();
        let one = || q.from_i64(1);
        let zero = || q.from_i64(0);
        let two = || q.from_i64(2);
        assert!(matches!(
            FieldArrangement::from_matrix(q.clone(), vec![vec![one(), two(), zero()], vec![zero(), one(), one()]]),
            Ok(_)
        ));
        assert!(matches!(
            FieldArrangement::from_matrix(q.clone(), vec![vec![one(), two()], vec![two(), q.from_i64(4)]]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            FieldArrangement::from_matrix(q.clone(), vec![vec![one(), two(), zero()], vec![one(), two(), one()]]),
            Err(Error::Arrangement(_))
        ));
    }

    #[test]
    fn prop_e_krasner_u23() {
        let phi = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap();
        let arrangement = CanonicalArrangement::new(&phi).unwrap();
        let h0: Vec<Vec<bool>> = arrangement
            .covectors()
            .enumerate(1000)
            .unwrap()
            .into_iter()
            .filter(|x| arrangement.in_hyperplane(0, x))
            .collect();
        assert_eq!(h0, vec![vec![false, false, false], vec![false, true, true]]);
        let report = check_prop_e(&phi, 1000, PropEScope::All).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.flats_checked, 5);
        let s01 = &report.subsets[0b011];
        assert_eq!((s01.is_flat, s01.closure.clone()), (false, vec![0, 1, 2]));
        let non_simple = GpFunction::constant_on_bases(Krasner, &Matroid::from_basis_lists(3, 2, &[vec![0, 1], vec![0, 2]]).unwrap()).unwrap();
        assert!(matches!(check_prop_e(&non_simple, 1000, PropEScope::All), Err(Error::NotSimple(_))));
    }
}
