//! Binomial coefficient table used by the colexicographic ranking of
//! k-subsets (combinatorial number system).

/// Precomputed Pascal triangle, indexed as `[n][k]`.
#[derive(Debug, Clone)]
pub struct Binom {
    table: Vec<Vec<u64>>,
}

impl Binom {
    /// Table covering all `C(n, k)` with `n <= max_n`, `k <= max_k`.
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let mut table = vec![vec![0u64; max_k + 1]; max_n + 1];
        for n in 0..=max_n {
            table[n][0] = 1;
            for k in 1..=max_k.min(n) {
                table[n][k] = table[n - 1][k - 1] + if k <= n - 1 { table[n - 1][k] } else { 0 };
            }
        }
        Binom { table }
    }

    #[inline]
    pub fn c(&self, n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        self.table[n][k]
    }
}

/// Standalone binomial for callers that do not hold a table.
pub fn choose(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u64 / i as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_direct() {
        let b = Binom::new(30, 6);
        for n in 0..=30 {
            for k in 0..=6 {
                assert_eq!(b.c(n, k), choose(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(choose(12, 5), 792);
        assert_eq!(choose(11, 5), 462);
        assert_eq!(choose(7, 3), 35);
    }
}
