//! Ground-state perturbation coefficients of `-½ψ'' + ½x²ψ + g x^P ψ = Eψ`.
//!
//! Writing `ψ = e^{-x²/2} Σ g^k φ_k(x)` with polynomial `φ_k` and `φ_k(0) = 0`
//! for `k > 0`, each order solves `(-½D² + xD) φ_k = Σ_j E_j φ_{k-j} - x^P φ_{k-1}`
//! by back substitution from the top degree down.

use rug::Rational;

pub fn ground_state(power: usize, count: usize) -> Vec<Rational> {
    let mut energies = vec![Rational::from((1, 2))];
    let mut phis: Vec<Vec<Rational>> = vec![vec![Rational::from(1)]];
    for k in 1..count {
        let deg = k * power;
        let mut rhs = vec![Rational::new(); deg + 1];
        for j in 1..k {
            for (n, c) in phis[k - j].iter().enumerate() {
                rhs[n] += Rational::from(&energies[j] * c);
            }
        }
        for (n, c) in phis[k - 1].iter().enumerate() {
            rhs[n + power] -= c;
        }
        // (L φ)_n = n c_n - ½(n+2)(n+1) c_{n+2}
        let mut c = vec![Rational::new(); deg + 3];
        for n in (1..=deg).rev() {
            let mut v = rhs[n].clone();
            v += Rational::from((((n + 2) * (n + 1)) as u64, 2u64)) * &c[n + 2];
            c[n] = v / n as u64;
        }
        energies.push(Rational::from(-&c[2]) - &rhs[0]);
        c.truncate(deg + 1);
        phis.push(c);
    }
    energies.truncate(count);
    energies
}
