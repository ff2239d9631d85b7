use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactAlgError, MonoBasis};

/// Integer coefficients `(cx, cy, cz)` of the linear form `cx*x + cy*y + cz*z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm(pub [i64; 3]);

impl LinearForm {
    pub const X: LinearForm = LinearForm([1, 0, 0]);
    pub const Y: LinearForm = LinearForm([0, 1, 0]);
    pub const Z: LinearForm = LinearForm([0, 0, 1]);

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    /// True when the two forms are nonzero scalar multiples of each other.
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        let [a0, a1, a2] = self.0;
        let [b0, b1, b2] = other.0;
        a0 * b1 == a1 * b0 && a0 * b2 == a2 * b0 && a1 * b2 == a2 * b1
    }
}

/// Homogeneous polynomial with integer coefficients over [`MonoBasis`] of its degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: u32,
    coeffs: Vec<BigInt>,
}

impl HomPoly {
    pub fn new(degree: u32, coeffs: Vec<BigInt>) -> Result<Self, ExactAlgError> {
        let expected = MonoBasis::new(degree).len();
        if coeffs.len() != expected {
            return Err(ExactAlgError::Shape {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(HomPoly { degree, coeffs })
    }

    pub fn zero(degree: u32) -> Self {
        HomPoly {
            degree,
            coeffs: vec![BigInt::zero(); MonoBasis::new(degree).len()],
        }
    }

    pub fn one() -> Self {
        HomPoly {
            degree: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn linear(form: LinearForm) -> Self {
        HomPoly {
            degree: 1,
            coeffs: form.0.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let degree = self.degree + other.degree;
        let target = MonoBasis::new(degree);
        let mut coeffs = vec![BigInt::zero(); target.len()];
        let lhs = MonoBasis::new(self.degree).entries();
        let rhs = MonoBasis::new(other.degree).entries();
        for (a, ca) in lhs.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.iter().zip(&other.coeffs) {
                if cb.is_zero() {
                    continue;
                }
                let idx = target.index_of([a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
                coeffs[idx] += ca * cb;
            }
        }
        HomPoly { degree, coeffs }
    }

    pub fn add_assign(&mut self, other: &HomPoly) {
        assert_eq!(self.degree, other.degree, "degree mismatch in addition");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, c: &BigInt) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> HomPoly {
        let mut acc = HomPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at `x = y = z = 1`.
    pub fn sum_of_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Nonzero terms as `(exponents, coefficient)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &BigInt)> + '_ {
        let basis = MonoBasis::new(self.degree);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (basis.exponents(i), c))
    }
}

/// Multinomial expansion of `form^power` over `MonoBasis(power)`.
pub fn expand_power(form: LinearForm, power: u32) -> Result<Vec<BigInt>, ExactAlgError> {
    if form.is_zero() {
        return Err(ExactAlgError::ZeroForm);
    }
    if power == 0 {
        return Err(ExactAlgError::ZeroPower);
    }
    let basis = MonoBasis::new(power);
    let [cx, cy, cz] = form.0.map(BigInt::from);
    // Powers of each coefficient, 0..=power.
    let powers = |c: &BigInt| {
        let mut v = vec![BigInt::one()];
        for i in 0..power as usize {
            let next = &v[i] * c;
            v.push(next);
        }
        v
    };
    let (px, py, pz) = (powers(&cx), powers(&cy), powers(&cz));
    let binom = binomial_row(power);
    let coeffs = basis
        .entries()
        .into_iter()
        .map(|[i, j, k]| {
            // power! / (i! j! k!) = C(power, i) * C(j + k, j)
            let multinomial = &binom[i as usize] * binomial_row(j + k)[j as usize].clone();
            multinomial * &px[i as usize] * &py[j as usize] * &pz[k as usize]
        })
        .collect();
    Ok(coeffs)
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}
