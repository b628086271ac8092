use crate::error::{Error, Result};

/// Jacobi symbol (a/n) for odd n ≥ 1, by the binary algorithm.
///
/// Strips factors of two using (2/n) = (−1)^((n²−1)/8) and flips the
/// remaining pair with quadratic reciprocity. Returns 0 iff gcd(a, n) > 1.
pub fn jacobi(a: i64, n: u64) -> Result<i8> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::domain(format!("Jacobi symbol needs odd positive n, got {n}")));
    }
    let mut a = (i128::from(a)).rem_euclid(i128::from(n)) as u64;
    let mut n = n;
    let mut t: i8 = 1;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    Ok(if n == 1 { t } else { 0 })
}
