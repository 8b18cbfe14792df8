//! The Coxeter group as permutations of the root index set.
//!
//! Elements are stored as permutations of the full root list, so
//! composition is array indexing and the exact matrix of an element is
//! reconstructed on demand from the images of the simple roots.
//! Generation is a breadth-first closure over right multiplication by
//! the simple reflections, which makes the enumeration order (and hence
//! conjugacy-class representatives) deterministic.

use std::collections::HashMap;

use thiserror::Error;

use crate::linalg::Matrix;
use crate::rootsys::RootSystem;

/// Index of a group element in the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

pub type Perm = Vec<u16>;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group order exceeds the configured cap of {0}")]
    OrderCapExceeded(u64),
}

pub struct Group {
    /// Permutations of the root index set, identity first.
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    /// Word length in the simple reflections (breadth-first depth).
    length: Vec<u32>,
    /// Generator indices (as elements) in simple-root order.
    generators: Vec<Elem>,
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
}

/// A subgroup given by its sorted member list.
pub struct Subgroup {
    pub members: Vec<Elem>,
}

impl Subgroup {
    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// Enumerate the full group; errors out above `order_cap`.
pub fn generate(rs: &RootSystem, order_cap: u64) -> Result<Group, GroupError> {
    let nroots = rs.num_roots();
    let gens: Vec<Perm> = rs.simple_perms().to_vec();
    let identity: Perm = (0..nroots as u16).collect();

    let mut perms: Vec<Perm> = vec![identity.clone()];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut length = vec![0u32];

    let mut head = 0usize;
    while head < perms.len() {
        let cur = perms[head].clone();
        let depth = length[head];
        head += 1;
        for g in &gens {
            // right multiplication: (w s)(r) = w(s(r))
            let img: Perm = g.iter().map(|&r| cur[r as usize]).collect();
            if !index.contains_key(&img) {
                let id = perms.len() as u32;
                if perms.len() as u64 >= order_cap {
                    return Err(GroupError::OrderCapExceeded(order_cap));
                }
                index.insert(img.clone(), id);
                perms.push(img);
                length.push(depth + 1);
            }
        }
    }

    let generators: Vec<Elem> = gens.iter().map(|g| Elem(index[g])).collect();
    let mut group = Group {
        perms,
        index,
        length,
        generators,
        classes: Vec::new(),
        class_of: Vec::new(),
    };
    group.compute_classes();
    Ok(group)
}

impl Group {
    pub fn order(&self) -> u64 {
        self.perms.len() as u64
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.perms.len() as u32).map(Elem)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn perm(&self, x: Elem) -> &Perm {
        &self.perms[x.0 as usize]
    }

    pub fn word_length(&self, x: Elem) -> u32 {
        self.length[x.0 as usize]
    }

    /// Sign of the determinant: `(-1)^length`.
    pub fn parity(&self, x: Elem) -> i64 {
        if self.length[x.0 as usize] % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<Elem> {
        self.index.get(p).copied().map(Elem)
    }

    /// `x · y` (apply `y` first).
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        let px = self.perm(x);
        let py = self.perm(y);
        let img: Perm = py.iter().map(|&r| px[r as usize]).collect();
        Elem(self.index[&img])
    }

    pub fn inverse(&self, x: Elem) -> Elem {
        let px = self.perm(x);
        let mut inv = vec![0u16; px.len()];
        for (i, &v) in px.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Elem(self.index[&inv])
    }

    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, x: Elem) -> u32 {
        let mut acc = x;
        let mut n = 1;
        while acc != self.identity() {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn is_involution(&self, x: Elem) -> bool {
        x != self.identity() && self.mul(x, x) == self.identity()
    }

    fn compute_classes(&mut self) {
        let n = self.perms.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        // Inverses of generators are themselves (reflections), so orbits
        // under generator conjugation are full conjugacy classes.
        let gens = self.generators.clone();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut orbit = vec![start];
            class_of[start as usize] = cid;
            let mut head = 0;
            while head < orbit.len() {
                let x = Elem(orbit[head]);
                head += 1;
                for &s in &gens {
                    let y = self.mul(self.mul(s, x), s);
                    if class_of[y.0 as usize] == u32::MAX {
                        class_of[y.0 as usize] = cid;
                        orbit.push(y.0);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x.0 as usize] as usize
    }

    pub fn class_members(&self, c: usize) -> impl Iterator<Item = Elem> + '_ {
        self.classes[c].iter().map(|&i| Elem(i))
    }

    pub fn class_size(&self, c: usize) -> u64 {
        self.classes[c].len() as u64
    }

    /// Enumeration-least member.
    pub fn class_rep(&self, c: usize) -> Elem {
        Elem(self.classes[c][0])
    }

    pub fn centralizer(&self, x: Elem) -> Subgroup {
        let members: Vec<Elem> = self
            .elements()
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        Subgroup { members }
    }

    pub fn centralizer_order(&self, x: Elem) -> u64 {
        self.order() / self.class_size(self.class_of(x))
    }

    /// Closure of an arbitrary generator set.
    pub fn subgroup(&self, gens: &[Elem]) -> Subgroup {
        let mut seen = vec![false; self.perms.len()];
        seen[0] = true;
        let mut members = vec![0u32];
        let mut head = 0;
        while head < members.len() {
            let x = Elem(members[head]);
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y.0 as usize] {
                    seen[y.0 as usize] = true;
                    members.push(y.0);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members: members.into_iter().map(Elem).collect() }
    }

    /// Standard parabolic subgroup generated by a subset of the simple
    /// reflections.
    pub fn parabolic(&self, j: &[usize]) -> Subgroup {
        let gens: Vec<Elem> = j.iter().map(|&i| self.generators[i]).collect();
        self.subgroup(&gens)
    }

    /// Roots of the standard parabolic subsystem: the orbit of the
    /// `J`-simple roots under the subgroup.
    pub fn parabolic_roots(&self, rs: &RootSystem, sub: &Subgroup, j: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; rs.num_roots()];
        for &ji in j {
            let simple = rs.simple_indices()[ji];
            for &w in &sub.members {
                let img = self.perm(w)[simple] as usize;
                in_set[img] = true;
                in_set[rs.neg_of(img)] = true;
            }
        }
        (0..rs.num_roots()).filter(|&r| in_set[r]).collect()
    }

    /// The element of a parabolic subgroup sending every positive root
    /// of its subsystem to a negative root.
    pub fn longest_element(&self, rs: &RootSystem, sub: &Subgroup, j: &[usize]) -> Elem {
        let roots = self.parabolic_roots(rs, sub, j);
        let positives: Vec<usize> = roots.into_iter().filter(|&r| rs.is_positive(r)).collect();
        for &w in &sub.members {
            let p = self.perm(w);
            if positives.iter().all(|&r| !rs.is_positive(p[r] as usize)) {
                return w;
            }
        }
        unreachable!("every parabolic has a longest element");
    }

    /// Exact matrix of the element in simple-root coordinates: column
    /// `i` is the coordinate vector of the image of the `i`-th simple
    /// root.
    pub fn matrix_of(&self, rs: &RootSystem, x: Elem) -> Matrix {
        let p = self.perm(x);
        let n = rs.rank();
        let cols: Vec<_> = (0..n)
            .map(|i| rs.coords(p[rs.simple_indices()[i]] as usize))
            .collect();
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::rootsys::{build_root_system, CoxeterType};
    use crate::scalar::Scalar;

    fn group(name: &str) -> (RootSystem, Group) {
        let rs = build_root_system(CoxeterType::parse(name).unwrap()).unwrap();
        let g = generate(&rs, 2_000_000).unwrap();
        (rs, g)
    }

    #[test]
    fn orders() {
        assert_eq!(group("A3").1.order(), 24);
        assert_eq!(group("H3").1.order(), 120);
        assert_eq!(group("F4").1.order(), 1152);
        assert_eq!(group("B3").1.order(), 48);
        assert_eq!(group("D4").1.order(), 192);
    }

    #[test]
    fn order_cap() {
        let rs = build_root_system(CoxeterType::parse("A4").unwrap()).unwrap();
        assert!(matches!(generate(&rs, 100), Err(GroupError::OrderCapExceeded(100))));
    }

    #[test]
    fn conjugacy_classes_small() {
        let (_, g) = group("A2");
        let mut sizes: Vec<u64> = (0..g.num_classes()).map(|c| g.class_size(c)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let (_, b2) = group("B2");
        assert_eq!(b2.num_classes(), 5);
        // identity class is a singleton
        assert_eq!(b2.class_size(b2.class_of(b2.identity())), 1);
    }

    #[test]
    fn class_equation() {
        let (_, g) = group("B3");
        let total: u64 = (0..g.num_classes()).map(|c| g.class_size(c)).sum();
        assert_eq!(total, g.order());
        for c in 0..g.num_classes() {
            assert_eq!(g.order() % g.class_size(c), 0);
        }
    }

    #[test]
    fn centralizer_of_transposition() {
        // S_n with x = (12): |C(x)| = 2 (n-2)!
        for (name, n) in [("A3", 4u64), ("A4", 5)] {
            let (_, g) = group(name);
            let s = g.generators()[0];
            let cent = g.centralizer(s);
            let expect = 2 * (1..=(n - 2)).product::<u64>();
            assert_eq!(cent.order(), expect, "{name}");
            assert_eq!(g.centralizer_order(s), expect);
            assert_eq!(cent.order() * g.class_size(g.class_of(s)), g.order());
        }
        // centralizer of the identity is the whole group
        let (_, g) = group("B2");
        assert_eq!(g.centralizer(g.identity()).order(), g.order());
    }

    #[test]
    fn parabolic_subgroups() {
        let (_, g) = group("A3");
        assert_eq!(g.parabolic(&[]).order(), 1);
        assert_eq!(g.parabolic(&[0, 2]).order(), 4);
        let (_, b3) = group("B3");
        assert_eq!(b3.parabolic(&[1, 2]).order(), 8);
    }

    #[test]
    fn longest_elements() {
        // singleton J: the generator itself
        let (rs, g) = group("A3");
        let sub = g.parabolic(&[1]);
        assert_eq!(g.longest_element(&rs, &sub, &[1]), g.generators()[1]);
        // full B2: -Id
        let (rs2, b2) = group("B2");
        let sub2 = b2.parabolic(&[0, 1]);
        let w0 = b2.longest_element(&rs2, &sub2, &[0, 1]);
        let m = b2.matrix_of(&rs2, w0);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { -1 } else { 0 };
                assert_eq!(m[i][j], Scalar::from_integer(rs2.field(), want));
            }
        }
        // full A2: the longest element is not -Id (it swaps the simples)
        let (rsa, a2) = group("A2");
        let suba = a2.parabolic(&[0, 1]);
        let w0a = a2.longest_element(&rsa, &suba, &[0, 1]);
        let p = a2.perm(w0a);
        let s0 = rsa.simple_indices()[0];
        let s1 = rsa.simple_indices()[1];
        assert_eq!(p[s0] as usize, rsa.neg_of(s1));
        assert_eq!(p[s1] as usize, rsa.neg_of(s0));
    }

    #[test]
    fn matrix_homomorphism() {
        let (rs, g) = group("B3");
        // deterministic sample of pairs
        let picks = [(1u32, 5u32), (7, 11), (20, 33), (40, 2)];
        for (a, b) in picks {
            let x = Elem(a % g.order() as u32);
            let y = Elem(b % g.order() as u32);
            let lhs = g.matrix_of(&rs, g.mul(x, y));
            let rhs = linalg::mat_mul(&g.matrix_of(&rs, x), &g.matrix_of(&rs, y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn parity_matches_matrix_determinant() {
        let (rs, g) = group("B2");
        for x in g.elements() {
            let m = g.matrix_of(&rs, x);
            let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
            assert_eq!(det, Scalar::from_integer(rs.field(), g.parity(x)));
        }
    }

    #[test]
    fn simple_reflection_determinant() {
        let (rs, g) = group("A3");
        for &s in g.generators() {
            assert_eq!(g.parity(s), -1);
            assert_eq!(g.word_length(s), 1);
        }
        let _ = rs;
    }
}
