use std::collections::HashMap;
use std::hash::Hash;

use num_integer::Integer;

use super::{RotorType, State};

/// Definitional equivalence of two periodic label sequences: some bijection
/// of labels maps one onto the other. Sequences of different lengths are
/// compared over the lcm of their lengths.
pub fn is_equivalent_by_bijection<A, B>(a: &[A], b: &[B]) -> bool
where
    A: Eq + Hash + Copy,
    B: Eq + Hash + Copy,
{
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let len = a.len().lcm(&b.len());
    let mut forward: HashMap<A, B> = HashMap::new();
    let mut backward: HashMap<B, A> = HashMap::new();
    for i in 0..len {
        let (x, y) = (a[i % a.len()], b[i % b.len()]);
        if *forward.entry(x).or_insert(y) != y || *backward.entry(y).or_insert(x) != x {
            return false;
        }
    }
    true
}

/// `r ≡_n s`: some relabeling of `r` onto the states of `s` makes every
/// length-`n` block of the two agree as multisets. Both sequences are read
/// as infinite periodic sequences and compared over `lcm(|r|, |s|, n)`.
pub fn is_n_equivalent(r: &RotorType, s: &RotorType, n: usize) -> bool {
    if n == 0 || r.state_count() != s.state_count() {
        return false;
    }
    let len = r.len().lcm(&s.len()).lcm(&n);
    let k = r.state_count();
    // Per-block state histograms of s, indexed [block][state - 1].
    let hist = |seq: &[State], map: &dyn Fn(State) -> State| -> Vec<Vec<usize>> {
        (0..len / n)
            .map(|block| {
                let mut h = vec![0usize; k];
                for i in block * n..(block + 1) * n {
                    h[map(seq[i % seq.len()]) as usize - 1] += 1;
                }
                h
            })
            .collect()
    };
    let target = hist(s.symbols(), &|x| x);
    let base = hist(r.symbols(), &|x| x);
    permutations(k).any(|perm| {
        base.iter().zip(&target).all(|(hr, hs)| {
            // perm[i] is the image of state i + 1.
            (0..k).all(|i| hr[i] == hs[perm[i]])
        })
    })
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = Some((0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        current = next_permutation(out.clone());
        Some(out)
    })
}

fn next_permutation(mut p: Vec<usize>) -> Option<Vec<usize>> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn relabeled_blocks_match() {
        // 2112 canonicalizes to 1221 already; compare against the raw form too.
        assert!(is_n_equivalent(&rt("1221"), &rt("2112"), 2));
        assert!(is_equivalent_by_bijection(&[1, 2, 2, 1], &[2, 1, 1, 2]));
    }

    #[test]
    fn one_equivalence_is_equivalence() {
        assert!(is_n_equivalent(&rt("12"), &rt("12"), 1));
        assert!(!is_n_equivalent(&rt("1122"), &rt("1212"), 1));
    }

    #[test]
    fn block_multisets_decide_n_equivalence() {
        // Length-2 blocks are {1,1},{2,2} against {1,2},{1,2}.
        assert!(!is_n_equivalent(&rt("1122"), &rt("1212"), 2));
        assert!(is_n_equivalent(&rt("1122"), &rt("1212"), 4));
    }

    #[test]
    fn differing_periods_compare_over_lcm() {
        // 12 against 1221 with n = 2: blocks 12,12 vs 12,21.
        assert!(is_n_equivalent(&rt("12"), &rt("1221"), 2));
        assert!(!is_n_equivalent(&rt("12"), &rt("1221"), 1));
        assert!(!is_n_equivalent(&rt("12"), &rt("123"), 6));
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(3).count(), 6);
        assert_eq!(permutations(1).count(), 1);
    }
}
