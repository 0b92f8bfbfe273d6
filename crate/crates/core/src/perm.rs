//! Permutations of `0..degree`, acting on the right.
//!
//! The product `p * q` applies `p` first and then `q`, so that
//! `x^(pq) = (x^p)^q`. Conjugation `p.conjugate_by(g)` is `g⁻¹ p g`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (p, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::Validation(format!(
                    "image {img} of point {p} is outside 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::Validation(format!("point {img} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles on `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::Validation(format!(
                        "cycle point {x} is outside 0..{degree}"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::Validation(format!(
                        "point {x} appears in more than one cycle position"
                    )));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            result = result.then(&base);
        }
        result
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(p, &q)| p != q)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p != q)
    }

    /// Embeds into a larger degree, shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<usize> = (0..degree).collect();
        for (p, &q) in self.images.iter().enumerate() {
            images[p + offset] = q + offset;
        }
        Permutation { images }
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Space-separated image list.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, img) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut images = Vec::new();
        let mut offset = 0;
        for token in s.split(' ') {
            if !token.is_empty() {
                let img = token
                    .parse::<usize>()
                    .map_err(|_| Error::parse(offset, format!("`{token}` is not a point index")))?;
                images.push(img);
            }
            offset += token.len() + 1;
        }
        if images.is_empty() {
            return Err(Error::parse(0, "empty image list"));
        }
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_left_to_right() {
        let p = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let q = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -> 1 under p, then 1 -> 2 under q
        assert_eq!((&p * &q).apply(0), 2);
        assert_eq!((&q * &p).apply(0), 1);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn order_and_cycles() {
        let p = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(format!("{p:?}"), "(0 1 2)(3 4)");
    }

    #[test]
    fn parse_round_trip() {
        let p: Permutation = "2 0 1 3".parse().unwrap();
        assert_eq!(p.to_string(), "2 0 1 3");
        match "2 x 1".parse::<Permutation>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
