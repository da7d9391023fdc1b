//! Incrementally grown additive subgroups.

use fixedbitset::FixedBitSet;

use super::FiniteRing;

/// An additive subgroup of a ring together with the generators that produced it.
pub struct AdditiveSpan<'a> {
    ring: &'a FiniteRing,
    members: FixedBitSet,
    list: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a> AdditiveSpan<'a> {
    /// The zero subgroup.
    pub fn new(ring: &'a FiniteRing) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert(ring.zero());
        AdditiveSpan { ring, members, list: vec![ring.zero()], gens: Vec::new() }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Members in insertion order.
    pub fn list(&self) -> &[usize] {
        &self.list
    }

    pub fn into_parts(self) -> (FixedBitSet, Vec<usize>) {
        (self.members, self.gens)
    }

    /// Enlarges the subgroup to `S + Zg`. Returns false if `g` was already in it.
    pub fn add_generator(&mut self, g: usize) -> bool {
        if self.members.contains(g) {
            return false;
        }
        let base_len = self.list.len();
        let old = self.members.clone();
        let mut step = g;
        // cosets S + kg for k = 1, 2, .. until kg falls back into S
        while !old.contains(step) {
            for i in 0..base_len {
                let t = self.ring.add(self.list[i], step);
                if !self.members.put(t) {
                    self.list.push(t);
                }
            }
            step = self.ring.add(step, g);
        }
        self.gens.push(g);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build::build;
    use crate::ring::parse::parse_ring_expr;
    use crate::ring::BuildOptions;

    #[test]
    fn spans_cyclic_subgroups() {
        let r = build(&parse_ring_expr("Z/12").unwrap(), &BuildOptions::default()).unwrap();
        let mut s = AdditiveSpan::new(&r);
        assert!(s.add_generator(8));
        let mut got: Vec<_> = s.list().to_vec();
        got.sort();
        assert_eq!(got, vec![0, 4, 8]);
        assert!(s.add_generator(6));
        assert_eq!(s.len(), 6);
        assert!(!s.add_generator(10));
    }

    #[test]
    fn additive_generators_span_everything() {
        let r = build(&parse_ring_expr("Z/2 x Z/4 x Z/3").unwrap(), &BuildOptions::default()).unwrap();
        let mut s = AdditiveSpan::new(&r);
        for &g in r.additive_generators() {
            s.add_generator(g);
        }
        assert_eq!(s.len(), r.order());
    }
}
