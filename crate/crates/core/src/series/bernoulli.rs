use rug::{Integer, Rational};

/// Bernoulli numbers B_0..=B_n with B_1 = -1/2.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::from(1));
    for m in 1..=n {
        // sum_{j<m} C(m+1, j) B_j + (m+1) B_m = 0
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from(&binom * bj);
            binom *= (m + 1 - j) as u64;
            binom /= (j + 1) as u64;
        }
        b.push(-acc / Rational::from(m as u64 + 1));
    }
    b
}
