//! Deterministic Schreier–Sims.
//!
//! Base points are chosen as the smallest point moved by the generator that
//! forces a new level, and strong generators are appended in the order the
//! sifting loop discovers them, so the chain depends only on the input
//! generator list.

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    /// `transversals[l][p]` maps `base[l]` to `p`, for `p` in the level-`l` orbit.
    transversals: Vec<Vec<Option<Permutation>>>,
}

impl StabChain {
    pub(crate) fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            transversals: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() && !chain.strong.contains(g) {
                chain.strong.push(g.clone());
            }
        }
        for k in 0..chain.strong.len() {
            let s = &chain.strong[k];
            if chain.base.iter().all(|&b| s.apply(b) == b) {
                let point = s.first_moved().expect("non-identity");
                chain.base.push(point);
            }
        }
        chain.transversals = vec![Vec::new(); chain.base.len()];

        let mut next = chain.base.len();
        while next > 0 {
            let level = next - 1;
            chain.rebuild_level(level);
            match chain.first_failing_schreier_generator(level) {
                Some((residue, reached)) => {
                    if reached == chain.base.len() {
                        chain
                            .base
                            .push(residue.first_moved().expect("non-identity residue"));
                        chain.transversals.push(Vec::new());
                    }
                    chain.strong.push(residue);
                    for l in level + 1..=reached {
                        chain.rebuild_level(l);
                    }
                    next = reached + 1;
                }
                None => next -= 1,
            }
        }
        chain
    }

    fn level_generators(&self, level: usize) -> impl Iterator<Item = &Permutation> {
        let prefix = &self.base[..level];
        self.strong
            .iter()
            .filter(move |s| prefix.iter().all(|&b| s.apply(b) == b))
    }

    fn rebuild_level(&mut self, level: usize) {
        let root = self.base[level];
        let gens: Vec<Permutation> = self.level_generators(level).cloned().collect();
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        trans[root] = Some(Permutation::identity(self.degree));
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for s in &gens {
                let q = s.apply(p);
                if trans[q].is_none() {
                    let u = trans[p].as_ref().expect("orbit point").then(s);
                    trans[q] = Some(u);
                    queue.push(q);
                }
            }
        }
        self.transversals[level] = trans;
    }

    fn first_failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let trans = &self.transversals[level];
        let gens: Vec<&Permutation> = self.level_generators(level).collect();
        for p in 0..self.degree {
            let Some(u_p) = trans[p].as_ref() else {
                continue;
            };
            for s in &gens {
                let q = s.apply(p);
                let u_q = trans[q].as_ref().expect("orbit is closed");
                let schreier = u_p.then(s).then(&u_q.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, reached) = self.strip(schreier, level + 1);
                if !residue.is_identity() {
                    return Some((residue, reached));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level reached.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for level in from..self.base.len() {
            let image = g.apply(self.base[level]);
            match &self.transversals[level][image] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, level),
            }
        }
        (g, self.base.len())
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    pub(crate) fn orbit_sizes(&self) -> Vec<usize> {
        self.transversals
            .iter()
            .map(|t| t.iter().filter(|u| u.is_some()).count())
            .collect()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.orbit_sizes()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
    }

    pub(crate) fn base(&self) -> &[usize] {
        &self.base
    }

    /// All elements, as products of transversal elements from the deepest level up.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for trans in self.transversals.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * trans.len());
            for h in &out {
                for u in trans.iter().flatten() {
                    next.push(h.then(u));
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7 {
            let chain = StabChain::new(
                n,
                &[cyc(n, &[&(0..n).collect::<Vec<_>>()]), cyc(n, &[&[0, 1]])],
            );
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn membership_in_alternating_group() {
        let n = 5;
        let chain = StabChain::new(n, &[cyc(n, &[&[0, 1, 2]]), cyc(n, &[&[0, 1, 2, 3, 4]])]);
        assert_eq!(chain.order(), BigUint::from(60u32));
        assert!(chain.contains(&cyc(n, &[&[0, 1], &[2, 3]])));
        assert!(!chain.contains(&cyc(n, &[&[0, 1]])));
    }

    #[test]
    fn elements_enumerate_the_group() {
        let n = 4;
        let chain = StabChain::new(n, &[cyc(n, &[&[0, 1, 2, 3]]), cyc(n, &[&[0, 2]])]);
        let mut elems = chain.elements();
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 8);
        assert!(elems.iter().all(|e| chain.contains(e)));
    }
}
