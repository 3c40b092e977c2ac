//! Subsets of the ground set `{0, …, n-1}` packed into a `u32`.

/// Largest ground set the bitmask representation supports.
pub const MAX_GROUND_SET: usize = 16;

pub type Subset = u32;

#[inline]
pub fn full(n: usize) -> Subset {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn contains(s: Subset, e: usize) -> bool {
    s >> e & 1 == 1
}

#[inline]
pub fn is_subset(a: Subset, b: Subset) -> bool {
    a & !b == 0
}

#[inline]
pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

/// Elements in increasing order.
pub fn elements(s: Subset) -> Vec<usize> {
    let mut out = Vec::with_capacity(size(s));
    let mut rest = s;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        out.push(e);
        rest &= rest - 1;
    }
    out
}

pub fn from_elements(elems: &[usize]) -> Subset {
    elems.iter().fold(0, |acc, &e| acc | 1 << e)
}

/// All `k`-subsets of `{0, …, n-1}`, ordered lexicographically as sorted tuples.
pub fn combinations(n: usize, k: usize) -> Vec<Subset> {
    fn rec(start: usize, n: usize, k: usize, acc: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for e in start..n {
            if n - e < k {
                break;
            }
            rec(e + 1, n, k - 1, acc | 1 << e, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Lexicographic comparison key of a subset read as a sorted tuple.
pub fn lex_key(s: Subset) -> Vec<usize> {
    elements(s)
}

/// `"0,2,3"`; the empty set formats as `""`.
pub fn format(s: Subset) -> String {
    elements(s)
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse(text: &str, n: usize) -> Option<Subset> {
    let text = text.trim();
    if text.is_empty() {
        return Some(0);
    }
    let mut s = 0;
    for part in text.split(',') {
        let e: usize = part.trim().parse().ok()?;
        if e >= n || contains(s, e) {
            return None;
        }
        s |= 1 << e;
    }
    Some(s)
}

/// Sign of the permutation sorting `seq` (entries must be distinct).
pub fn sort_sign(seq: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions.is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        let tuples: Vec<_> = c.iter().map(|&s| elements(s)).collect();
        assert_eq!(
            tuples,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![0]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("0, 2", 3), Some(0b101));
        assert_eq!(parse("", 3), Some(0));
        assert_eq!(parse("3", 3), None);
        assert_eq!(parse("1,1", 3), None);
        assert_eq!(format(0b1010), "1,3");
    }

    #[test]
    fn signs() {
        assert!(sort_sign(&[0, 1, 2]));
        assert!(!sort_sign(&[1, 0, 2]));
        assert!(sort_sign(&[2, 0, 1]));
    }
}
