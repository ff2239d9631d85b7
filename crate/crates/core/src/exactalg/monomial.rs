/// `n choose 2`, with the convention that it vanishes for `n < 2`.
pub fn binom2(n: i64) -> u64 {
    if n < 2 {
        0
    } else {
        (n as u64) * (n as u64 - 1) / 2
    }
}

/// Monomials `x^i y^j z^k` of a fixed total degree in graded-lex order with
/// `x > y > z`: `x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonoBasis {
    degree: u32,
}

impl MonoBasis {
    pub fn new(degree: u32) -> Self {
        MonoBasis { degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        binom2(self.degree as i64 + 2) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `x^i y^j z^k`; panics if the exponents do not sum to the degree.
    pub fn index_of(&self, exps: [u32; 3]) -> usize {
        assert_eq!(
            exps[0] + exps[1] + exps[2],
            self.degree,
            "monomial degree mismatch"
        );
        let rest = (self.degree - exps[0]) as usize;
        rest * (rest + 1) / 2 + exps[2] as usize
    }

    pub fn exponents(&self, index: usize) -> [u32; 3] {
        // rest*(rest+1)/2 <= index < (rest+1)*(rest+2)/2
        let mut rest = 0usize;
        while (rest + 1) * (rest + 2) / 2 <= index {
            rest += 1;
        }
        let k = (index - rest * (rest + 1) / 2) as u32;
        let rest = rest as u32;
        [self.degree - rest, rest - k, k]
    }

    pub fn entries(&self) -> Vec<[u32; 3]> {
        let d = self.degree;
        let mut out = Vec::with_capacity(self.len());
        for i in (0..=d).rev() {
            let rest = d - i;
            for k in 0..=rest {
                out.push([i, rest - k, k]);
            }
        }
        out
    }
}
