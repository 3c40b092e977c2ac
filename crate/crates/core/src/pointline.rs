//! Points and lines in projective space over a tract, and point-line
//! arrangements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gp::GpFunction;
use crate::matroid::Matroid;
use crate::rep::{reconstruct_from_lambda2, Lambda2Representation};
use crate::spaces::covectors;
use crate::subset::{self, Subset};
use crate::tract::{support, Tract};

/// A point of `P(T^E)`, stored by its representative whose first nonzero
/// coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint<E> {
    rep: Vec<E>,
    support: Subset,
}

impl<E: Clone> ProjectivePoint<E> {
    pub fn representative(&self) -> &[E] {
        &self.rep
    }

    pub fn support(&self) -> Subset {
        self.support
    }
}

pub fn projectivize<T: Tract>(tract: &T, x: &[T::Elem]) -> Result<ProjectivePoint<T::Elem>> {
    for a in x {
        tract.check(a)?;
    }
    let Some(first) = x.iter().find(|a| !tract.is_zero(a)) else {
        return Err(Error::Input("the zero tuple has no projective class".into()));
    };
    let inv = tract.inv(first)?;
    let rep: Vec<T::Elem> = x.iter().map(|a| tract.mul(a, &inv)).collect();
    Ok(ProjectivePoint { support: support(tract, &rep), rep })
}

/// Points, and lines given by rank-2 Grassmann–Plücker functions. A point
/// lies on a line when its representative is a covector of the line's
/// function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointLineArrangement<T: Tract> {
    tract: T,
    n: usize,
    points: Vec<ProjectivePoint<T::Elem>>,
    lines: Vec<GpFunction<T>>,
}

impl<T: Tract> PointLineArrangement<T> {
    /// Points are normalized and deduplicated; lines are kept as given, so a
    /// repeated line counts twice.
    pub fn new(tract: T, n: usize, points: &[Vec<T::Elem>], lines: Vec<GpFunction<T>>) -> Result<Self> {
        let mut normalized: Vec<ProjectivePoint<T::Elem>> = Vec::new();
        for x in points {
            if x.len() != n {
                return Err(Error::Input(format!("point of length {} in P(T^{n})", x.len())));
            }
            let p = projectivize(&tract, x)?;
            if !normalized.contains(&p) {
                normalized.push(p);
            }
        }
        for line in &lines {
            if line.tract() != &tract {
                return Err(Error::TractMismatch(
                    tract.descriptor().to_string(),
                    line.tract().descriptor().to_string(),
                ));
            }
            if line.n() != n || line.rank() != 2 {
                return Err(Error::Input(format!("lines must have n = {n} and rank 2")));
            }
        }
        Ok(PointLineArrangement { tract, n, points: normalized, lines })
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[ProjectivePoint<T::Elem>] {
        &self.points
    }

    pub fn lines(&self) -> &[GpFunction<T>] {
        &self.lines
    }

    /// Indices of the points on line `l`.
    pub fn points_on(&self, l: usize) -> Vec<usize> {
        let cov = covectors(&self.lines[l]);
        (0..self.points.len()).filter(|&p| cov.contains(&self.points[p].rep)).collect()
    }

    pub fn without_point(&self, p: usize) -> Self {
        let mut out = self.clone();
        out.points.remove(p);
        out
    }

    pub fn with_line(&self, line: GpFunction<T>) -> Self {
        let mut out = self.clone();
        out.lines.push(line);
        out
    }

    /// Same points and, up to projective equality, the same lines with the
    /// same multiplicities.
    pub fn same_as(&self, other: &Self) -> bool {
        let mut a = self.points.clone();
        let mut b = other.points.clone();
        a.sort();
        b.sort();
        if self.n != other.n || a != b || self.lines.len() != other.lines.len() {
            return false;
        }
        let mut used = vec![false; other.lines.len()];
        self.lines.iter().all(|l| {
            match (0..other.lines.len()).find(|&j| !used[j] && other.lines[j].projectively_equal(l)) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// Points `[η_H]` for the hyperplanes of `M_φ` and lines `φ_F` for its
/// corank-2 flats. Incidence is checked against `F ⊆ H`.
pub fn psi<T: Tract>(phi: &GpFunction<T>) -> Result<PointLineArrangement<T>> {
    if phi.rank() < 2 {
        return Err(Error::Input(format!("rank {} has no corank-2 flats", phi.rank())));
    }
    let cocircuits = phi.cocircuits();
    let points: Vec<Vec<T::Elem>> = cocircuits.iter().map(|(_, eta)| eta.clone()).collect();
    let flats = phi.underlying_matroid().flats().corank_two();
    let lines = flats.iter().map(|&f| phi.f_quotient(f)).collect::<Result<Vec<_>>>()?;
    let a = PointLineArrangement::new(phi.tract().clone(), phi.n(), &points, lines)?;
    for (l, &f) in flats.iter().enumerate() {
        let on = a.points_on(l);
        for (p, point) in a.points.iter().enumerate() {
            let h = subset::full(phi.n()) & !point.support;
            if on.contains(&p) != subset::is_subset(f, h) {
                return Err(Error::Internal(format!(
                    "incidence of hyperplane {:?} and line {:?}",
                    subset::elements(h),
                    subset::elements(f)
                )));
            }
        }
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlAxiom {
    Pl1,
    Pl2,
    Pl3,
}

impl fmt::Display for PlAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PlAxiom::Pl1 => "PL1",
            PlAxiom::Pl2 => "PL2",
            PlAxiom::Pl3 => "PL3",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlViolation {
    pub axiom: PlAxiom,
    pub detail: String,
}

impl fmt::Display for PlViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.axiom, self.detail)
    }
}

fn violation(axiom: PlAxiom, detail: impl Into<String>) -> Error {
    Error::Pl(PlViolation { axiom, detail: detail.into() })
}

/// Checks PL1–PL3 and returns the matroid of PL2.
///
/// PL2 additionally requires distinct points to have distinct supports,
/// since otherwise the supports do not label the points.
pub fn check_pl<T: Tract>(a: &PointLineArrangement<T>) -> Result<Matroid> {
    let incidence: Vec<Vec<usize>> = (0..a.lines.len()).map(|l| a.points_on(l)).collect();
    for (l, on) in incidence.iter().enumerate() {
        if on.len() < 2 {
            return Err(violation(PlAxiom::Pl1, format!("line {l} contains {} points", on.len())));
        }
    }
    let supports: Vec<Subset> = a.points.iter().map(|p| p.support).collect();
    for i in 0..supports.len() {
        if supports[i + 1..].contains(&supports[i]) {
            return Err(violation(
                PlAxiom::Pl2,
                format!("two points have support {:?}", subset::elements(supports[i])),
            ));
        }
    }
    let matroid = Matroid::from_cocircuits(a.n, &supports).map_err(|e| violation(PlAxiom::Pl2, e.to_string()))?;
    let lattice = matroid.flats();
    let full = subset::full(a.n);
    for p in 0..a.points.len() {
        for q in p + 1..a.points.len() {
            let f = full & !(supports[p] | supports[q]);
            if lattice.corank_of(f) != Some(2) {
                continue;
            }
            let count = incidence.iter().filter(|on| on.contains(&p) && on.contains(&q)).count();
            if count != 1 {
                return Err(violation(
                    PlAxiom::Pl3,
                    format!("modular pair {p}, {q} lies on {count} lines"),
                ));
            }
        }
    }
    Ok(matroid)
}

/// Rebuilds `[φ]` from an arrangement: points are labelled by the
/// hyperplanes `E - support`, lines by the loops of their rank-2 matroids.
pub fn gp_from_pointline<T: Tract>(a: &PointLineArrangement<T>) -> Result<GpFunction<T>> {
    let matroid = check_pl(a)?;
    let full = subset::full(a.n);
    let mut psi: BTreeMap<Subset, GpFunction<T>> = BTreeMap::new();
    for p in &a.points {
        let values = (0..a.n).map(|e| (1 << e, p.rep[e].clone()));
        psi.insert(full & !p.support, GpFunction::new_checked(a.tract.clone(), a.n, 1, values)?);
    }
    for line in &a.lines {
        let f = line.underlying_matroid().loops();
        if matroid.flats().corank_of(f) != Some(2) {
            return Err(Error::Arrangement(format!(
                "line with bottom {:?} is not over a corank-2 flat",
                subset::elements(f)
            )));
        }
        if psi.insert(f, line.clone()).is_some() {
            return Err(Error::Arrangement(format!("two lines over {:?}", subset::elements(f))));
        }
    }
    let l = Lambda2Representation::new(a.tract.clone(), matroid, psi)?;
    reconstruct_from_lambda2(&l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{Krasner, PrimeField, Tropical};
    use num_bigint::BigInt;
    use num_rational::Ratio;

    #[test]
    fn projectivize_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(projectivize(&f5, &[0, 2, 3]).unwrap().representative(), &[0, 1, 4]);
        let t = Tropical::<BigInt>::new();
        let r = |a: i64, b: i64| Ratio::new(BigInt::from(a), BigInt::from(b));
        let p = projectivize(&t, &[r(0, 1), r(2, 1), r(1, 1)]).unwrap();
        assert_eq!(p.representative(), &[r(0, 1), r(1, 1), r(1, 2)]);
        assert_eq!(projectivize(&Krasner, &[false, true, true]).unwrap().representative(), &[false, true, true]);
        assert!(projectivize(&f5, &[0, 0]).is_err());
    }

    #[test]
    fn krasner_u23_and_u34() {
        let phi = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap();
        let a = psi(&phi).unwrap();
        let mut pts: Vec<Vec<bool>> = a.points().iter().map(|p| p.representative().to_vec()).collect();
        pts.sort();
        assert_eq!(pts, vec![vec![false, true, true], vec![true, false, true], vec![true, true, false]]);
        assert_eq!(a.lines().len(), 1);
        assert_eq!(a.points_on(0), vec![0, 1, 2]);
        check_pl(&a).unwrap();
        assert!(gp_from_pointline(&a).unwrap().projectively_equal(&phi));

        let phi = GpFunction::constant_on_bases(Krasner, &Matroid::uniform(3, 4)).unwrap();
        let a = psi(&phi).unwrap();
        assert_eq!((a.points().len(), a.lines().len()), (6, 4));
        let back = gp_from_pointline(&a).unwrap();
        assert!(back.projectively_equal(&phi));
        assert!(psi(&back).unwrap().same_as(&a));
    }

    #[test]
    fn mutations() {
        // U_{2,2} ⊕ U_{1,1}: the line over {2} has two points.
        let m = Matroid::from_basis_lists(3, 2, &[vec![0, 1]]).unwrap();
        let phi = GpFunction::constant_on_bases(Krasner, &m).unwrap();
        let a = psi(&phi).unwrap();
        let on = a.points_on(0);
        assert_eq!(on.len(), 2);
        let Error::Pl(v) = check_pl(&a.without_point(on[0])).unwrap_err() else { panic!() };
        assert_eq!(v.axiom, PlAxiom::Pl1);

        let f3 = PrimeField::new(3).unwrap();
        let phi = GpFunction::from_matrix(f3, &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let a = psi(&phi).unwrap();
        let dup = a.with_line(a.lines()[0].scale(&2).unwrap());
        let Error::Pl(v) = check_pl(&dup).unwrap_err() else { panic!() };
        assert_eq!(v.axiom, PlAxiom::Pl3);
    }
}
