use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::schreier::StabChain;

/// A permutation group given by generators.
///
/// Order and membership go through a stabilizer chain that is built on first
/// use and cached; the value is otherwise immutable.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Validation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// The order as a machine integer, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base().to_vec()
    }

    /// Every element, for groups of order at most `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Permutation>> {
        match self.order_u64() {
            Some(k) if k as u128 <= limit as u128 => {
                let mut elems = self.chain().elements();
                elems.sort();
                Ok(elems)
            }
            _ => Err(Error::resource("permutation group order", limit)),
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Orbits on `0..degree`, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            label[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in &self.generators {
                    let q = g.apply(p);
                    if label[q] == usize::MAX {
                        label[q] = id;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Serializes as `degree <m>` followed by one image list per generator.
    pub fn to_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let (degree, generators) = parse_generator_file(text)?;
        PermGroup::new(degree, generators)
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Parses the shared generator-file format: a `degree <m>` line, then one
/// space-separated image list per line. Blank lines and `#` comments are skipped.
pub fn parse_generator_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut generators = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let trimmed = line.trim();
        let line_offset = offset;
        offset += line.len() + 1;
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = trimmed
                    .strip_prefix("degree")
                    .ok_or_else(|| Error::parse(line_offset, "expected `degree <m>`"))?;
                let m = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line_offset, "degree is not an integer"))?;
                degree = Some(m);
            }
            Some(m) => {
                let g: Permutation = trimmed.parse().map_err(|e| match e {
                    Error::Parse { offset, message } => Error::parse(line_offset + offset, message),
                    other => other,
                })?;
                if g.degree() != m {
                    return Err(Error::parse(
                        line_offset,
                        format!("generator has {} images, expected {m}", g.degree()),
                    ));
                }
                generators.push(g);
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::parse(0, "missing `degree` line"))?;
    Ok((degree, generators))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_order_and_membership() {
        let r: Permutation = "1 2 3 0".parse().unwrap();
        let g = PermGroup::new(4, vec![r.clone()]).unwrap();
        assert_eq!(g.order_u64(), Some(4));
        assert!(g.contains(&r.pow(2)));
        assert!(!g.contains(&"1 0 2 3".parse().unwrap()));
        assert_eq!(g.orbits(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(3);
        assert_eq!(g.order_u64(), Some(1));
        assert_eq!(g.orbits().len(), 3);
    }

    #[test]
    fn text_round_trip() {
        let g =
            PermGroup::new(3, vec!["1 2 0".parse().unwrap(), "1 0 2".parse().unwrap()]).unwrap();
        let back = PermGroup::from_text(&g.to_text()).unwrap();
        assert_eq!(back.generators(), g.generators());
        assert_eq!(back.order_u64(), Some(6));
    }

    #[test]
    fn text_errors_carry_offsets() {
        let err = PermGroup::from_text("degree 3\n0 1 2\n0 q 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                offset: 17,
                message: "`q` is not a point index".into()
            }
        );
        assert!(PermGroup::from_text("0 1 2").is_err());
        assert!(PermGroup::from_text("degree 3\n0 1\n").is_err());
    }
}
