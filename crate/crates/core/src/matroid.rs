//! Plain matroids on `{0, …, n-1}` given by their bases, and their lattices
//! of flats.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::subset::{self, Subset, MAX_GROUND_SET};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    /// Sorted lexicographically as tuples.
    bases: Vec<Subset>,
    lookup: HashSet<Subset>,
}

impl Matroid {
    /// Validates the basis family: nonempty, uniform size `rank`, and the
    /// basis exchange axiom.
    pub fn from_bases(n: usize, rank: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::Guard(format!("ground set of size {n} exceeds {MAX_GROUND_SET}")));
        }
        let lookup: HashSet<Subset> = bases.into_iter().collect();
        if lookup.is_empty() {
            return Err(Error::NoBases);
        }
        for &b in &lookup {
            if subset::size(b) != rank || !subset::is_subset(b, subset::full(n)) {
                return Err(Error::Input(format!(
                    "{:?} is not a {rank}-subset of a ground set of size {n}",
                    subset::elements(b)
                )));
            }
        }
        let mut bases: Vec<Subset> = lookup.iter().copied().collect();
        bases.sort_by_key(|&b| subset::lex_key(b));
        let m = Matroid { n, rank, bases, lookup };
        m.check_exchange()?;
        Ok(m)
    }

    pub fn from_basis_lists(n: usize, rank: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            if b.iter().any(|&e| e >= n) {
                return Err(Error::Input(format!("basis {b:?} leaves the ground set")));
            }
            let mask = subset::from_elements(b);
            if subset::size(mask) != b.len() {
                return Err(Error::Input(format!("basis {b:?} repeats an element")));
            }
            masks.push(mask);
        }
        Matroid::from_bases(n, rank, masks)
    }

    pub fn uniform(rank: usize, n: usize) -> Self {
        Matroid::from_bases(n, rank, subset::combinations(n, rank)).expect("uniform matroid")
    }

    /// Rebuilds a matroid from its collection of flats, which must contain
    /// the ground set and form the lattice of flats of some matroid.
    pub fn from_flats(n: usize, flats: &[Subset]) -> Result<Self> {
        let full = subset::full(n);
        let set: BTreeSet<Subset> = flats.iter().copied().collect();
        if !set.contains(&full) {
            return Err(Error::Input("flat collection lacks the ground set".into()));
        }
        let closure = |s: Subset| {
            set.iter()
                .filter(|&&f| subset::is_subset(s, f))
                .fold(full, |acc, &f| acc & f)
        };
        // Rank of the top is the length of a longest chain from the bottom.
        let bottom = closure(0);
        let mut height: HashMap<Subset, usize> = HashMap::new();
        let mut by_size: Vec<Subset> = set.iter().copied().collect();
        by_size.sort_by_key(|&f| subset::size(f));
        for &f in &by_size {
            let h = by_size
                .iter()
                .filter(|&&g| g != f && subset::is_subset(g, f) && subset::is_subset(bottom, g))
                .filter_map(|g| height.get(g))
                .map(|h| h + 1)
                .max()
                .unwrap_or(0);
            height.insert(f, h);
        }
        let rank = height[&full];
        let bases: Vec<Subset> = subset::combinations(n, rank)
            .into_iter()
            .filter(|&b| closure(b) == full)
            .collect();
        let m = Matroid::from_bases(n, rank, bases)?;
        let rebuilt: BTreeSet<Subset> = m.flats().flats().iter().copied().collect();
        if rebuilt != set {
            return Err(Error::Input("collection is not the lattice of flats of a matroid".into()));
        }
        Ok(m)
    }

    /// The matroid whose cocircuits are `cocircuits`, after checking the
    /// cocircuit axioms.
    pub fn from_cocircuits(n: usize, cocircuits: &[Subset]) -> Result<Self> {
        let set: BTreeSet<Subset> = cocircuits.iter().copied().collect();
        if set.contains(&0) {
            return Err(Error::Input("the empty set is not a cocircuit".into()));
        }
        for &c in &set {
            for &d in &set {
                if c != d && subset::is_subset(c, d) {
                    return Err(Error::Input(format!(
                        "cocircuits {:?} and {:?} are comparable",
                        subset::elements(c),
                        subset::elements(d)
                    )));
                }
                if c == d {
                    continue;
                }
                for e in subset::elements(c & d) {
                    let union = (c | d) & !(1 << e);
                    if !set.iter().any(|&x| subset::is_subset(x, union)) {
                        return Err(Error::Input(format!(
                            "cocircuit elimination fails for {:?}, {:?} at {e}",
                            subset::elements(c),
                            subset::elements(d)
                        )));
                    }
                }
            }
        }
        let full = subset::full(n);
        let hyperplanes: Vec<Subset> = set.iter().map(|&c| full & !c).collect();
        let mut flats: BTreeSet<Subset> = BTreeSet::new();
        flats.insert(full);
        // Flats are the intersections of hyperplanes.
        let mut frontier: Vec<Subset> = vec![full];
        while let Some(f) = frontier.pop() {
            for &h in &hyperplanes {
                let g = f & h;
                if flats.insert(g) {
                    frontier.push(g);
                }
            }
        }
        let flats: Vec<Subset> = flats.into_iter().collect();
        Matroid::from_flats(n, &flats)
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in subset::elements(b1 & !b2) {
                    let base = b1 & !(1 << x);
                    let ok = subset::elements(b2 & !b1)
                        .into_iter()
                        .any(|y| self.lookup.contains(&(base | 1 << y)));
                    if !ok {
                        return Err(Error::Exchange {
                            b1: subset::elements(b1),
                            b2: subset::elements(b2),
                            x,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> Subset {
        subset::full(self.n)
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.lookup.contains(&s)
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        self.bases.iter().map(|&b| subset::size(s & b)).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == subset::size(s)
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        (0..self.n)
            .filter(|&e| subset::contains(s, e) || self.rank_of(s | 1 << e) == r)
            .fold(0, |acc, e| acc | 1 << e)
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    pub fn corank_of(&self, s: Subset) -> usize {
        self.rank - self.rank_of(s)
    }

    /// A maximal independent subset of `s`, chosen greedily in index order.
    pub fn spanning_subset(&self, s: Subset) -> Vec<usize> {
        let mut chosen: Subset = 0;
        for e in subset::elements(s) {
            if self.is_independent(chosen | 1 << e) {
                chosen |= 1 << e;
            }
        }
        subset::elements(chosen)
    }

    pub fn loops(&self) -> Subset {
        self.closure(0)
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|e| self.rank_of(1 << e) == 1)
            && subset::combinations(self.n, 2).into_iter().all(|p| self.rank_of(p) == 2)
    }

    pub fn flats(&self) -> FlatLattice {
        let all: BTreeSet<Subset> = (0..=subset::full(self.n)).map(|s| self.closure(s)).collect();
        let ranks = all.iter().map(|&f| (f, self.rank_of(f))).collect();
        FlatLattice::new(self.n, self.rank, all.into_iter().collect(), ranks)
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        self.flats().hyperplanes()
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        Matroid::from_bases(self.n, self.n - self.rank, self.bases.iter().map(|&b| full & !b))
            .expect("dual of a matroid is a matroid")
    }

    /// `M/F ⊕ U_{0,F}` on the same ground set: contract the flat `F` and keep
    /// its elements as loops.
    pub fn contract_with_loops(&self, flat: Subset) -> Result<Matroid> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(subset::elements(flat)));
        }
        let span = subset::from_elements(&self.spanning_subset(flat));
        let bases = self
            .bases
            .iter()
            .filter(|&&b| b & flat == span)
            .map(|&b| b & !span);
        Matroid::from_bases(self.n, self.rank - subset::size(span), bases)
    }

    /// Direct sum; the elements of `other` are shifted by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | b << self.n);
            }
        }
        Matroid::from_bases(self.n + other.n, self.rank + other.rank, bases)
    }

    pub fn circuits(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = (1..=subset::full(self.n))
            .filter(|&s| {
                !self.is_independent(s)
                    && subset::elements(s)
                        .into_iter()
                        .all(|e| self.is_independent(s & !(1 << e)))
            })
            .collect();
        out.sort_by_key(|&c| subset::lex_key(c));
        out
    }

    pub fn cocircuits(&self) -> Vec<Subset> {
        let full = self.ground_set();
        let mut out: Vec<Subset> = self.hyperplanes().into_iter().map(|h| full & !h).collect();
        out.sort_by_key(|&c| subset::lex_key(c));
        out
    }

    /// The unique circuit inside `basis ∪ {e}` for `e` outside the basis.
    pub fn fundamental_circuit(&self, basis: Subset, e: usize) -> Subset {
        let with_e = basis | 1 << e;
        subset::elements(basis)
            .into_iter()
            .filter(|&b| self.is_basis(with_e & !(1 << b)))
            .fold(1 << e, |acc, b| acc | 1 << b)
    }

    /// All triples of distinct hyperplanes meeting in the corank-2 flat `F`.
    pub fn modular_triples(&self, flat: Subset) -> Result<Vec<[Subset; 3]>> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(subset::elements(flat)));
        }
        let corank = self.corank_of(flat);
        if corank != 2 {
            return Err(Error::WrongCorank { flat: subset::elements(flat), corank, expected: 2 });
        }
        let above = self.flats().hyperplanes_containing(flat);
        let mut out = Vec::new();
        for i in 0..above.len() {
            for j in i + 1..above.len() {
                for k in j + 1..above.len() {
                    out.push([above[i], above[j], above[k]]);
                }
            }
        }
        Ok(out)
    }

    pub fn modular_pair(&self, h1: Subset, h2: Subset) -> bool {
        h1 != h2 && self.corank_of(h1 & h2) == 2
    }

    /// Every matroid on `{0, …, n-1}` (labelled), by filtering all basis
    /// families through the exchange axiom.
    pub fn all_matroids(n: usize) -> Vec<Matroid> {
        assert!(n <= 5, "exhaustive enumeration is limited to n <= 5");
        let mut out = Vec::new();
        for rank in 0..=n {
            let candidates = subset::combinations(n, rank);
            for family in 1u64..(1u64 << candidates.len()) {
                let bases = (0..candidates.len())
                    .filter(|&i| family >> i & 1 == 1)
                    .map(|i| candidates[i]);
                if let Ok(m) = Matroid::from_bases(n, rank, bases) {
                    out.push(m);
                }
            }
        }
        out
    }
}

/// The lattice of flats of a matroid, with ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    n: usize,
    rank: usize,
    /// Sorted by rank, then lexicographically.
    flats: Vec<Subset>,
    ranks: HashMap<Subset, usize>,
}

impl FlatLattice {
    fn new(n: usize, rank: usize, mut flats: Vec<Subset>, ranks: HashMap<Subset, usize>) -> Self {
        flats.sort_by_key(|&f| (ranks[&f], subset::lex_key(f)));
        FlatLattice { n, rank, flats, ranks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.ranks.contains_key(&s)
    }

    pub fn rank_of(&self, flat: Subset) -> Option<usize> {
        self.ranks.get(&flat).copied()
    }

    pub fn corank_of(&self, flat: Subset) -> Option<usize> {
        self.rank_of(flat).map(|r| self.rank - r)
    }

    pub fn bottom(&self) -> Subset {
        self.flats[0]
    }

    pub fn with_corank(&self, corank: usize) -> Vec<Subset> {
        self.flats
            .iter()
            .copied()
            .filter(|&f| self.corank_of(f) == Some(corank))
            .collect()
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        self.with_corank(1)
    }

    pub fn corank_two(&self) -> Vec<Subset> {
        self.with_corank(2)
    }

    /// `Λ_F`: flats containing `F`.
    pub fn above(&self, flat: Subset) -> Vec<Subset> {
        self.flats
            .iter()
            .copied()
            .filter(|&g| subset::is_subset(flat, g))
            .collect()
    }

    /// `ℋ_F`: hyperplanes containing `F`.
    pub fn hyperplanes_containing(&self, flat: Subset) -> Vec<Subset> {
        self.hyperplanes()
            .into_iter()
            .filter(|&h| subset::is_subset(flat, h))
            .collect()
    }

    pub fn covers(&self, flat: Subset) -> Vec<Subset> {
        let r = match self.rank_of(flat) {
            Some(r) => r,
            None => return Vec::new(),
        };
        self.flats
            .iter()
            .copied()
            .filter(|&g| subset::is_subset(flat, g) && self.ranks[&g] == r + 1)
            .collect()
    }

    /// For every flat `F ≠ E`, the sets `F' - F` over flats `F'` covering
    /// `F` partition `E - F`.
    pub fn check_covering(&self) -> Result<()> {
        let full = subset::full(self.n);
        for &f in &self.flats {
            if f == full {
                continue;
            }
            let mut seen: Subset = 0;
            for g in self.covers(f) {
                let part = g & !f;
                if seen & part != 0 {
                    return Err(Error::Internal(format!(
                        "covers of {:?} overlap",
                        subset::elements(f)
                    )));
                }
                seen |= part;
            }
            if seen != full & !f {
                return Err(Error::Internal(format!(
                    "covers of {:?} miss elements",
                    subset::elements(f)
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, r: usize, bases: &[&[usize]]) -> Result<Matroid> {
        let lists: Vec<Vec<usize>> = bases.iter().map(|b| b.to_vec()).collect();
        Matroid::from_basis_lists(n, r, &lists)
    }

    #[test]
    fn uniform_two_three() {
        let u = m(3, 2, &[&[0, 1], &[0, 2], &[1, 2]]).unwrap();
        assert_eq!(u, Matroid::uniform(2, 3));
        assert_eq!(u.closure(0b001), 0b001);
        let lattice = u.flats();
        assert_eq!(lattice.flats(), &[0, 0b001, 0b010, 0b100, 0b111]);
        lattice.check_covering().unwrap();
        assert_eq!(u.dual(), Matroid::uniform(1, 3));
    }

    #[test]
    fn single_basis_and_loops() {
        let single = m(4, 2, &[&[0, 1]]).unwrap();
        assert_eq!(single.loops(), 0b1100);
        assert_eq!(single.closure(0b0100), 0b1100);
        assert_eq!(single.closure(0b0001), 0b1101);
    }

    #[test]
    fn parallel_pair_is_a_matroid() {
        let par = m(3, 2, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(par.closure(0b001), 0b101);
        assert!(!par.is_simple());
    }

    #[test]
    fn exchange_violation_is_reported() {
        let err = m(4, 2, &[&[0, 1], &[2, 3]]).unwrap_err();
        assert_eq!(err, Error::Exchange { b1: vec![0, 1], b2: vec![2, 3], x: 0 });
        assert!(err.is_violation());
        assert_eq!(m(3, 2, &[]).unwrap_err(), Error::NoBases);
    }

    #[test]
    fn contraction_with_loops() {
        let u = Matroid::uniform(2, 3);
        let c = u.contract_with_loops(0b001).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.loops(), 0b001);
        assert_eq!(c.hyperplanes(), vec![0b001]);
        assert_eq!(c.hyperplanes(), u.flats().hyperplanes_containing(0b001));
        let top = u.contract_with_loops(0b111).unwrap();
        assert_eq!(top, Matroid::from_bases(3, 0, [0]).unwrap());
        assert_eq!(u.contract_with_loops(0b011).unwrap_err(), Error::NotAFlat(vec![0, 1]));
    }

    #[test]
    fn contraction_lattice_is_upper_interval() {
        for matroid in Matroid::all_matroids(4) {
            let lattice = matroid.flats();
            for &f in lattice.flats() {
                let c = matroid.contract_with_loops(f).unwrap();
                assert_eq!(c.flats().flats().len(), lattice.above(f).len());
                let mut expected = lattice.above(f);
                let mut got = c.flats().flats().to_vec();
                expected.sort();
                got.sort();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn modular_triples_and_pairs() {
        let u34 = Matroid::uniform(3, 4);
        let triples = u34.modular_triples(0b0001).unwrap();
        assert_eq!(triples, vec![[0b0011, 0b0101, 0b1001]]);
        let u23 = Matroid::uniform(2, 3);
        assert_eq!(u23.modular_triples(0).unwrap().len(), 1);
        assert!(matches!(u34.modular_triples(0), Err(Error::WrongCorank { .. })));
        let hyps = u23.hyperplanes();
        for &a in &hyps {
            for &b in &hyps {
                assert_eq!(u23.modular_pair(a, b), a != b);
            }
        }
    }

    #[test]
    fn cocircuits_are_dual_circuits() {
        for matroid in Matroid::all_matroids(4) {
            assert_eq!(matroid.cocircuits(), matroid.dual().circuits());
            matroid.flats().check_covering().unwrap();
            let flats: Vec<_> = matroid.flats().flats().to_vec();
            assert_eq!(Matroid::from_flats(4, &flats).unwrap(), matroid);
            let cocircuits = matroid.cocircuits();
            if matroid.rank() > 0 {
                assert_eq!(Matroid::from_cocircuits(4, &cocircuits).unwrap(), matroid);
            }
        }
    }

    #[test]
    fn fundamental_circuits() {
        let u = Matroid::uniform(2, 4);
        assert_eq!(u.fundamental_circuit(0b0011, 2), 0b0111);
    }

    #[test]
    fn enumeration_counts() {
        // Labelled matroids on n elements: 1, 2, 5, 16, 68, 406, …
        let counts: Vec<usize> = (0..=5).map(|n| Matroid::all_matroids(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 68, 406]);
    }
}
