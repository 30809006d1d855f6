//! Lexicographic k-subset enumeration over `0..n`.

/// Iterator over all size-`k` subsets of `{0, …, n-1}` as ascending index
/// vectors, in lexicographic order of the sorted tuples.
pub(crate) fn combinations(n: usize, k: usize) -> Combinations {
    let current: Vec<usize> = (0..k).collect();
    Combinations {
        n,
        k,
        current,
        exhausted: k > n,
        fresh: true,
    }
}

pub(crate) struct Combinations {
    n: usize,
    k: usize,
    current: Vec<usize>,
    exhausted: bool,
    fresh: bool,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.exhausted {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.current.clone());
        }
        // advance the rightmost index that still has room
        let mut i = self.k;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            if self.current[i] + 1 <= self.n - (self.k - i) {
                self.current[i] += 1;
                for j in i + 1..self.k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(self.current.clone());
            }
        }
    }
}
