use std::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Jacobi symbol `(a/n)` for odd `n >= 1`, by quadratic reciprocity.
///
/// For prime `n` this is the Legendre symbol. `(a/1) = 1` for every `a`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8> {
    if *n < BigInt::one() || n.is_even() {
        return Err(Error::EvenModulus(n.clone()));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1i8;
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        if twos % 2 == 1 {
            let r = (&n % &eight).to_u8();
            if r == Some(3) || r == Some(5) {
                sign = -sign;
            }
        }
        mem::swap(&mut a, &mut n);
        if (&a % &four) == BigInt::from(3) && (&n % &four) == BigInt::from(3) {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}
