//! q-integers and q-binomial coefficients, used as a closed-form
//! cross-check for SU(2)-type dimensions.

/// The deformation parameter q ≥ 1 determined by q + q⁻¹ = n.
pub fn q_from_n(n: u64) -> f64 {
    assert!(n >= 2, "q parameter requires n >= 2");
    let n = n as f64;
    (n + (n * n - 4.0).sqrt()) / 2.0
}

/// [k]_q = (q^k − q^−k)/(q − q^−1); at q = 1 the limit value k.
pub fn q_int_at(q: f64, k: u64) -> f64 {
    if (q - 1.0).abs() < 1e-12 {
        return k as f64;
    }
    (q.powi(k as i32) - q.powi(-(k as i32))) / (q - q.recip())
}

/// [k]_q with q determined from the model parameter n by q + q⁻¹ = n.
///
/// Solves the SU(2)-type dimension recursion in closed form:
/// d_k = [k+1]_q.
pub fn q_int(n: u64, k: u64) -> f64 {
    q_int_at(q_from_n(n), k)
}

/// Gaussian binomial [n choose k]_q = [n]_q [n−1]_q … [n−k+1]_q /
/// ([k]_q [k−1]_q … [1]_q); symmetric in k ↔ n−k.
pub fn q_binom(n: u64, k: u64, q: f64) -> f64 {
    assert!(k <= n, "q-binomial requires k <= n");
    assert!(q > 0.0, "q-binomial requires q > 0");
    let mut num = 1.0;
    let mut den = 1.0;
    for i in 0..k {
        num *= q_int_at(q, n - i);
        den *= q_int_at(q, i + 1);
    }
    num / den
}
