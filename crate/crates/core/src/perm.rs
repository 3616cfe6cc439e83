// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Dense ranking of permutations by Lehmer code.

/// `n!` as a `usize`; panics past 20.
pub fn factorial(n: usize) -> usize {
    (1..=n)
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .expect("factorial overflow")
}

/// Rank of `perm` among permutations of `0..perm.len()` in lexicographic order.
pub fn rank(perm: &[usize]) -> usize {
    let n = perm.len();
    debug_assert!(n <= 20);
    let mut used: u32 = 0;
    let mut r = 0;
    for (i, &p) in perm.iter().enumerate() {
        let smaller_unused = p - (used & ((1 << p) - 1)).count_ones() as usize;
        r = r * (n - i) + smaller_unused;
        used |= 1 << p;
    }
    r
}

/// Inverse of [`rank`], writing into `out`.
pub fn unrank(mut r: usize, out: &mut [usize]) {
    let n = out.len();
    let mut digits = [0usize; 20];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut free: Vec<usize> = (0..n).collect();
    for i in 0..n {
        out[i] = free.remove(digits[i]);
    }
}

/// Advances to the next permutation in lexicographic order; false after the last.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ranks_follow_lexicographic_order() {
        let mut p: Vec<usize> = (0..5).collect();
        let mut expected = 0;
        loop {
            assert_eq!(rank(&p), expected);
            let mut q = vec![0; 5];
            unrank(expected, &mut q);
            assert_eq!(q, p);
            expected += 1;
            if !next_permutation(&mut p) {
                break;
            }
        }
        assert_eq!(expected, factorial(5));
    }

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3_628_800);
    }

    proptest! {
        #[test]
        fn unrank_inverts_rank(n in 1usize..=12, seed in any::<u64>()) {
            let r = (seed as usize) % factorial(n);
            let mut p = vec![0; n];
            unrank(r, &mut p);
            prop_assert_eq!(rank(&p), r);
        }
    }
}
