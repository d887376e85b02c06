//! Integer sequences indexed from zero with an implicit leading `1` at index
//! `-1`: f-vectors of complexes and total Betti sequences of ideals.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// `C(n, k)` for a possibly negative top argument; zero whenever `n < 0`,
/// `k < 0` or `k > n`.
pub fn binomial_signed(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

fn trim(mut entries: Vec<u64>) -> Vec<u64> {
    while entries.last() == Some(&0) {
        entries.pop();
    }
    entries
}

macro_rules! index_sequence {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(Vec<u64>);

        impl $name {
            /// Rejects a trailing zero entry.
            pub fn new(entries: Vec<u64>) -> Result<Self> {
                if entries.last() == Some(&0) {
                    return Err(Error::TrailingZero);
                }
                Ok(Self(entries))
            }

            /// Drops trailing zeros.
            pub fn trimmed(entries: Vec<u64>) -> Self {
                Self(trim(entries))
            }

            pub fn entries(&self) -> &[u64] {
                &self.0
            }

            pub fn into_entries(self) -> Vec<u64> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Entry at index `i`, with index `-1` reading as 1 and anything
            /// past the end reading as 0.
            pub fn at(&self, i: i64) -> u64 {
                match i {
                    -1 => 1,
                    i if i < -1 => 0,
                    i => self.0.get(i as usize).copied().unwrap_or(0),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }

        impl TryFrom<Vec<u64>> for $name {
            type Error = Error;

            fn try_from(entries: Vec<u64>) -> Result<Self> {
                Self::new(entries)
            }
        }
    };
}

index_sequence!(
    /// Face numbers `(f_0, ..., f_{d-1})`; `f_{-1} = 1` is implicit.
    FVector
);

index_sequence!(
    /// Total Betti numbers `(β_0, ..., β_p)` of an ideal; `β_{-1} = 1` is
    /// implicit and `p` is the projective dimension.
    BettiSequence
);

impl FVector {
    /// Reads a Betti sequence as a candidate f-vector.
    pub fn from_betti(beta: &BettiSequence) -> Self {
        FVector(beta.0.clone())
    }

    /// f-vector of `cone^t(Δ)`:
    /// `f_i = Σ_{ℓ=0}^{i+1} C(t, ℓ) f_{i-ℓ}` with `f_{-1} = 1`.
    pub fn cone(&self, t: u64) -> FVector {
        let len = self.len() + t as usize;
        let entries = (0..len as i64)
            .map(|i| {
                (0..=i + 1)
                    .map(|l| binomial(t, l as u64) * self.at(i - l))
                    .sum()
            })
            .collect();
        FVector::trimmed(entries)
    }

    /// Componentwise `self <= other`, missing entries reading as zero.
    pub fn le(&self, other: &FVector) -> bool {
        (0..self.len().max(other.len()) as i64).all(|i| self.at(i) <= other.at(i))
    }
}

impl BettiSequence {
    pub fn as_fvector(&self) -> FVector {
        FVector::from_betti(self)
    }

    /// Projective dimension; `None` for the zero ideal.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Betti numbers of the quotient `S/I`: `(1, β_0, ..., β_p)`.
    pub fn quotient(&self) -> Vec<u64> {
        std::iter::once(1).chain(self.0.iter().copied()).collect()
    }

    /// Inverse of [`BettiSequence::quotient`]; the leading entry must be 1.
    pub fn from_quotient(q: &[u64]) -> Result<Self> {
        match q.split_first() {
            Some((1, rest)) => Ok(Self::trimmed(rest.to_vec())),
            _ => Err(Error::LengthMismatch(
                "quotient Betti numbers must start with 1".into(),
            )),
        }
    }
}

/// Convolution of two quotient Betti vectors; Betti numbers of `S/(I+J)`
/// when `I` and `J` live on disjoint variables.
pub fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial_signed(-1, 0), 0);
        assert_eq!(binomial_signed(3, -1), 0);
    }

    #[test]
    fn trailing_zero_rejected() {
        assert_eq!(FVector::new(vec![2, 0]), Err(Error::TrailingZero));
        assert_eq!(FVector::trimmed(vec![2, 1, 0, 0]).entries(), &[2, 1]);
    }

    #[test]
    fn index_conventions() {
        let f = FVector::new(vec![3, 3]).unwrap();
        assert_eq!(f.at(-1), 1);
        assert_eq!(f.at(1), 3);
        assert_eq!(f.at(7), 0);
    }

    #[test]
    fn cone_identity_small() {
        let point = FVector::new(vec![1]).unwrap();
        assert_eq!(point.cone(1).entries(), &[2, 1]);
        assert_eq!(point.cone(0), point);
        // cone^t of the empty complex is the (t-1)-simplex
        assert_eq!(FVector::default().cone(3).entries(), &[3, 3, 1]);
    }

    #[test]
    fn quotient_round_trip_and_convolution() {
        let b = BettiSequence::new(vec![3, 2]).unwrap();
        assert_eq!(b.quotient(), vec![1, 3, 2]);
        assert_eq!(BettiSequence::from_quotient(&b.quotient()).unwrap(), b);
        // adjoining a fresh linear form convolves with (1, 1)
        assert_eq!(convolve(&b.quotient(), &[1, 1]), vec![1, 4, 5, 2]);
    }
}
