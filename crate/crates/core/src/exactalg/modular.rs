//! Word-size rank over `Z/pZ`.
//!
//! For an integer matrix the rank modulo any prime is a lower bound for the
//! rank over `Q`. Callers only use it together with an exact upper bound; if
//! the two meet the rank is known exactly, otherwise they fall back to
//! [`super::IntMatrix::rank`].

/// Primes below `2^31`, so products of two residues fit in a `u64` with room
/// for one addition.
pub const PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Rank of a row-major `rows x cols` matrix with entries in `[0, p)`.
/// The buffer is destroyed.
pub fn rank_mod(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    assert_eq!(data.len(), rows * cols);
    // A constant modulus lets the compiler replace division by multiplication.
    if p == PRIMES[0] {
        eliminate(data, rows, cols, |x| x % PRIMES[0], PRIMES[0])
    } else if p == PRIMES[1] {
        eliminate(data, rows, cols, |x| x % PRIMES[1], PRIMES[1])
    } else {
        eliminate(data, rows, cols, |x| x % p, p)
    }
}

#[inline(always)]
fn eliminate<R: Fn(u64) -> u64>(
    data: &mut [u64],
    rows: usize,
    cols: usize,
    reduce: R,
    p: u64,
) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in c..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(data[rank * cols + c], p);
        for j in c..cols {
            let v = &mut data[rank * cols + j];
            *v = reduce(*v * inv);
        }
        let (head, tail) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols + c..(rank + 1) * cols];
        for row in tail.chunks_exact_mut(cols) {
            let lead = row[c];
            if lead == 0 {
                continue;
            }
            let f = p - lead;
            for (x, &y) in row[c..].iter_mut().zip(pivot_row) {
                if y != 0 {
                    *x = reduce(*x + f * y);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn moduli_are_prime() {
        for p in PRIMES {
            assert!(is_prime(p), "{p}");
            assert!((p - 1) * (p - 1) + p < u64::MAX);
        }
    }

    #[test]
    fn small_ranks() {
        let p = PRIMES[0];
        let mut id = vec![1, 0, 0, 0, 1, 0, 0, 0, 1];
        assert_eq!(rank_mod(&mut id, 3, 3, p), 3);
        let mut dep = vec![1, 2, 3, 2, 4, 6];
        assert_eq!(rank_mod(&mut dep, 2, 3, p), 1);
        let mut z = vec![0; 10];
        assert_eq!(rank_mod(&mut z, 2, 5, p), 0);
    }

    #[test]
    fn rank_drops_modulo_a_dividing_prime() {
        // det = 3; rank 2 over Q, rank 1 mod 3.
        let mut m = vec![1, 1, 1, 4];
        assert_eq!(rank_mod(&mut m.clone(), 2, 2, PRIMES[0]), 2);
        m[3] = 1;
        assert_eq!(rank_mod(&mut m, 2, 2, 3), 1);
    }
}
