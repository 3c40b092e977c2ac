//! Grassmann–Plücker functions over a tract.
//!
//! A rank-`r` function is stored on sorted `r`-subsets of `{0, …, n-1}`;
//! evaluation on an arbitrary tuple multiplies by the sign of the sorting
//! permutation and vanishes on repeated entries.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{self, Subset};
use crate::tract::{padic_abs, ExactInteger, FieldTract, Krasner, Rationals, Tract, Tropical};
use crate::linalg;

/// Exhaustive 3-term Plücker checks are rejected when `n^(r+2)` exceeds this.
pub const GP3_GUARD: u64 = 262_144;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpFunction<T: Tract> {
    tract: T,
    n: usize,
    rank: usize,
    /// Nonzero values only.
    values: BTreeMap<Subset, T::Elem>,
    matroid: Matroid,
}

impl<T: Tract> GpFunction<T> {
    /// Validates GP1 (nonempty support satisfying basis exchange), element
    /// membership, and the 3-term Plücker relations. Zero values are dropped.
    pub fn new_checked(
        tract: T,
        n: usize,
        rank: usize,
        values: impl IntoIterator<Item = (Subset, T::Elem)>,
    ) -> Result<Self> {
        let phi = Self::with_gp1(tract, n, rank, values)?;
        phi.check_gp3()?;
        Ok(phi)
    }

    fn with_gp1(
        tract: T,
        n: usize,
        rank: usize,
        values: impl IntoIterator<Item = (Subset, T::Elem)>,
    ) -> Result<Self> {
        if rank > n {
            return Err(Error::Input(format!("rank {rank} exceeds ground set size {n}")));
        }
        let mut stored = BTreeMap::new();
        for (key, value) in values {
            if subset::size(key) != rank || !subset::is_subset(key, subset::full(n)) {
                return Err(Error::Input(format!(
                    "key {:?} is not a {rank}-subset of the ground set",
                    subset::elements(key)
                )));
            }
            tract.check(&value)?;
            if !tract.is_zero(&value) {
                stored.insert(key, value);
            }
        }
        let matroid = match Matroid::from_bases(n, rank, stored.keys().copied()) {
            Ok(m) => m,
            Err(Error::NoBases) => return Err(Error::Gp1("all values are zero".into())),
            Err(Error::Exchange { b1, b2, x }) => {
                return Err(Error::Gp1(format!(
                    "support violates basis exchange at {b1:?}, {b2:?}, element {x}"
                )))
            }
            Err(other) => return Err(other),
        };
        Ok(GpFunction { tract, n, rank, values: stored, matroid })
    }

    /// The rank-0 function with the single value `c` on the empty tuple.
    pub fn rank_zero(tract: T, n: usize, c: T::Elem) -> Result<Self> {
        Self::new_checked(tract, n, 0, [(0, c)])
    }

    /// Value `1` on every basis of `matroid`.
    pub fn constant_on_bases(tract: T, matroid: &Matroid) -> Result<Self> {
        let one = tract.one();
        let values: Vec<_> = matroid.bases().iter().map(|&b| (b, one.clone())).collect();
        Self::new_checked(tract, matroid.n(), matroid.rank(), values)
    }

    pub fn tract(&self) -> &T {
        &self.tract
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero values keyed by sorted subsets.
    pub fn values(&self) -> &BTreeMap<Subset, T::Elem> {
        &self.values
    }

    pub fn value(&self, key: Subset) -> T::Elem {
        self.values.get(&key).cloned().unwrap_or_else(|| self.tract.zero())
    }

    pub fn underlying_matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// Evaluation on an arbitrary `r`-tuple.
    pub fn eval(&self, tuple: &[usize]) -> T::Elem {
        assert_eq!(tuple.len(), self.rank, "tuple length must equal the rank");
        let key = subset::from_elements(tuple);
        if subset::size(key) != tuple.len() {
            return self.tract.zero();
        }
        match self.values.get(&key) {
            Some(v) => self.tract.signed(subset::sort_sign(tuple), v),
            None => self.tract.zero(),
        }
    }

    /// The three terms of the Plücker relation at `(e_1, …, e_{r-2}, a, b, c, d)`,
    /// with the middle term negated.
    pub fn plucker_terms(&self, prefix: &[usize], abcd: [usize; 4]) -> [T::Elem; 3] {
        let t = &self.tract;
        let [a, b, c, d] = abcd;
        let mut buf: Vec<usize> = prefix.to_vec();
        let mut at = |x: usize, y: usize| {
            buf.truncate(prefix.len());
            buf.push(x);
            buf.push(y);
            self.eval(&buf)
        };
        let ab = at(a, b);
        let cd = at(c, d);
        let ac = at(a, c);
        let bd = at(b, d);
        let ad = at(a, d);
        let bc = at(b, c);
        [t.mul(&ab, &cd), t.negate(&t.mul(&ac, &bd)), t.mul(&ad, &bc)]
    }

    /// Checks every 3-term Plücker relation and reports the lexicographically
    /// first violating tuple.
    ///
    /// Tuples whose prefix repeats an element, or whose `a, b, c, d` collide
    /// with each other or with the prefix, reduce to `x - x` or to all-zero
    /// terms and hold in every tract; permuting the prefix does not change the
    /// relation. The scan therefore runs over sorted prefixes and distinct
    /// `a, b, c, d` outside them, which visits the first violation in
    /// lexicographic order.
    pub fn check_gp3(&self) -> Result<()> {
        if self.rank < 2 {
            return Ok(());
        }
        let cost = (self.n as u64).saturating_pow(self.rank as u32 + 2);
        if cost > GP3_GUARD {
            return Err(Error::Guard(format!(
                "3-term Plücker scan over {} tuples exceeds {GP3_GUARD}",
                cost
            )));
        }
        for prefix_set in subset::combinations(self.n, self.rank - 2) {
            let prefix = subset::elements(prefix_set);
            let free: Vec<usize> = (0..self.n).filter(|&e| !subset::contains(prefix_set, e)).collect();
            for &a in &free {
                for &b in &free {
                    for &c in &free {
                        for &d in &free {
                            if a == b || a == c || a == d || b == c || b == d || c == d {
                                continue;
                            }
                            let terms = self.plucker_terms(&prefix, [a, b, c, d]);
                            if !self.tract.is_null(&terms) {
                                let mut tuple = prefix.clone();
                                tuple.extend([a, b, c, d]);
                                return Err(Error::Gp3 { tuple });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &T::Elem) -> Result<Self> {
        if self.tract.is_zero(c) {
            return Err(Error::ZeroInverse);
        }
        let values = self.values.iter().map(|(&k, v)| (k, self.tract.mul(c, v)));
        Self::new_checked(self.tract.clone(), self.n, self.rank, values)
    }

    /// `φ*(d_1, …, d_{n-r}) = sign(d_1, …, d_{n-r}, e_1, …, e_r) φ(e_1, …, e_r)`
    /// with respect to the order `0 < 1 < … < n-1`.
    pub fn dual(&self) -> Self {
        let full = subset::full(self.n);
        let values = self.values.iter().map(|(&key, v)| {
            let complement = full & !key;
            let mut order = subset::elements(complement);
            order.extend(subset::elements(key));
            (complement, self.tract.signed(subset::sort_sign(&order), v))
        });
        Self::new_checked(self.tract.clone(), self.n, self.n - self.rank, values)
            .expect("dual of a Grassmann-Plücker function")
    }

    /// Contraction of `S`: a function on `E - S`, relabelled to
    /// `{0, …, n-|S|-1}`. The second component maps new labels to old ones.
    pub fn contract(&self, s: Subset) -> Result<(Self, Vec<usize>)> {
        if !subset::is_subset(s, subset::full(self.n)) {
            return Err(Error::Input(format!("{:?} leaves the ground set", subset::elements(s))));
        }
        let span = self.matroid.spanning_subset(s);
        let remaining: Vec<usize> = (0..self.n).filter(|&e| !subset::contains(s, e)).collect();
        let new_rank = self.rank - span.len();
        let mut values = Vec::new();
        for key in subset::combinations(remaining.len(), new_rank) {
            let mut tuple = span.clone();
            tuple.extend(subset::elements(key).into_iter().map(|i| remaining[i]));
            let v = self.eval(&tuple);
            if !self.tract.is_zero(&v) {
                values.push((key, v));
            }
        }
        let phi = Self::new_checked(self.tract.clone(), remaining.len(), new_rank, values)?;
        Ok((phi, remaining))
    }

    /// The F-quotient `φ_F(e_1, …, e_s) = φ(i_1, …, i_{r-s}, e_1, …, e_s)` on
    /// the full ground set, for a flat `F` of corank `s` with the greedy
    /// spanning set `i_1 < … < i_{r-s}`.
    pub fn f_quotient(&self, flat: Subset) -> Result<Self> {
        self.f_quotient_with(flat, &self.matroid.spanning_subset(flat))
    }

    /// As [`GpFunction::f_quotient`] with an explicit spanning set of `F`.
    pub fn f_quotient_with(&self, flat: Subset, spanning: &[usize]) -> Result<Self> {
        if !self.matroid.is_flat(flat) {
            return Err(Error::NotAFlat(subset::elements(flat)));
        }
        let span = subset::from_elements(spanning);
        if !subset::is_subset(span, flat)
            || subset::size(span) != spanning.len()
            || !self.matroid.is_independent(span)
            || self.matroid.rank_of(span) != self.matroid.rank_of(flat)
        {
            return Err(Error::Input(format!(
                "{spanning:?} is not a spanning independent subset of {:?}",
                subset::elements(flat)
            )));
        }
        let corank = self.rank - spanning.len();
        let mut values = Vec::new();
        for key in subset::combinations(self.n, corank) {
            let mut tuple = spanning.to_vec();
            tuple.extend(subset::elements(key));
            let v = self.eval(&tuple);
            if !self.tract.is_zero(&v) {
                values.push((key, v));
            }
        }
        Self::new_checked(self.tract.clone(), self.n, corank, values)
    }

    /// `φ ⊕ ψ` on the concatenated ground set; `ψ`'s elements are shifted by `n`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.require_same_tract(other)?;
        let mut values = Vec::new();
        for (&a, x) in &self.values {
            for (&b, y) in &other.values {
                values.push((a | b << self.n, self.tract.mul(x, y)));
            }
        }
        Self::new_checked(self.tract.clone(), self.n + other.n, self.rank + other.rank, values)
    }

    /// Whether `other = c·self` for some unit `c`.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.tract != other.tract
            || self.n != other.n
            || self.rank != other.rank
            || self.values.len() != other.values.len()
            || self.values.keys().ne(other.values.keys())
        {
            return false;
        }
        let t = &self.tract;
        let (first, v0) = self.values.iter().next().expect("nonempty support");
        let ratio = t.div(&other.values[first], v0).expect("nonzero value");
        self.values
            .iter()
            .all(|(k, v)| t.mul(&ratio, v) == other.values[k])
    }

    /// `η_H(e) = φ(i_1, …, i_{r-1}, e)` for the greedy spanning set of `H`.
    pub fn fundamental_cocircuit(&self, hyperplane: Subset) -> Vec<T::Elem> {
        let spanning = self.matroid.spanning_subset(hyperplane);
        self.cocircuit_from_spanning(&spanning)
    }

    pub fn cocircuit_from_spanning(&self, spanning: &[usize]) -> Vec<T::Elem> {
        let mut tuple = spanning.to_vec();
        tuple.push(0);
        (0..self.n)
            .map(|e| {
                *tuple.last_mut().expect("nonempty") = e;
                self.eval(&tuple)
            })
            .collect()
    }

    /// Fundamental hyperplane functions of all hyperplanes, in lattice order.
    pub fn cocircuits(&self) -> Vec<(Subset, Vec<T::Elem>)> {
        self.matroid
            .hyperplanes()
            .into_iter()
            .map(|h| (h, self.fundamental_cocircuit(h)))
            .collect()
    }

    /// Circuits: fundamental hyperplane functions of the dual.
    pub fn circuits(&self) -> Vec<Vec<T::Elem>> {
        self.dual().cocircuits().into_iter().map(|(_, c)| c).collect()
    }

    /// Push forward along the unique morphism to the Krasner hyperfield.
    pub fn to_krasner(&self) -> GpFunction<Krasner> {
        let values = self.values.keys().map(|&k| (k, true));
        GpFunction::new_checked(Krasner, self.n, self.rank, values)
            .expect("tract morphisms preserve Grassmann-Plücker functions")
    }

    pub(crate) fn require_same_tract(&self, other: &Self) -> Result<()> {
        if self.tract != other.tract {
            return Err(Error::TractMismatch(
                self.tract.descriptor().to_string(),
                other.tract.descriptor().to_string(),
            ));
        }
        Ok(())
    }
}

impl<T: FieldTract> GpFunction<T> {
    /// Maximal minors of a full-rank `r × n` matrix.
    pub fn from_matrix(field: T, rows: &[Vec<T::Elem>]) -> Result<Self> {
        let r = rows.len();
        let n = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::Input("ragged matrix".into()));
        }
        let values: Vec<_> = subset::combinations(n, r)
            .into_iter()
            .map(|cols| (cols, linalg::minor(&field, rows, &subset::elements(cols))))
            .collect();
        match Self::new_checked(field, n, r, values) {
            Err(Error::Gp1(_)) => Err(Error::Input("matrix does not have full row rank".into())),
            other => other,
        }
    }
}

/// Applies the `q`-adic absolute value to every value of a rational
/// Grassmann–Plücker function.
pub fn tropicalize<I: ExactInteger>(
    q: u64,
    phi: &GpFunction<Rationals<I>>,
) -> Result<GpFunction<Tropical<I>>> {
    let values = phi.values().iter().map(|(&k, v)| (k, padic_abs(q, v)));
    GpFunction::new_checked(Tropical::new(), phi.n(), phi.rank(), values)
}
