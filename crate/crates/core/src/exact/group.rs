//! Finite groups given by left and right multiplication tables of a
//! generating set. Elements are indices `0..order`, index 0 is the identity.

use std::collections::VecDeque;

/// A conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: u32,
    pub size: usize,
    pub order: u32,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    /// left[i][x] = g_i · x
    left: Vec<Vec<u32>>,
    /// right[i][x] = x · g_i
    right: Vec<Vec<u32>>,
    /// Each g_i^{-1} as a word in the generators.
    gen_inverse: Vec<Vec<u8>>,
    /// x = g_{parent[x].1} · parent[x].0 along a shortest word.
    parent: Vec<(u32, u8)>,
    inverse: Vec<u32>,
    class_of: Vec<u32>,
    classes: Vec<ConjClass>,
}

impl FiniteGroup {
    /// Builds the group from multiplication tables of its generators.
    /// Classes are ordered by (element order, size, first discovery).
    pub fn new(left: Vec<Vec<u32>>, right: Vec<Vec<u32>>, gen_inverse: Vec<Vec<u8>>) -> Self {
        let order = left[0].len();
        let mut parent = vec![(u32::MAX, 0u8); order];
        parent[0] = (0, 0);
        let mut seen = vec![false; order];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        let mut bfs_order = Vec::with_capacity(order);
        while let Some(x) = queue.pop_front() {
            bfs_order.push(x);
            for (i, table) in left.iter().enumerate() {
                let y = table[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = (x, i as u8);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(bfs_order.len(), order, "generators do not generate");
        let mut g = FiniteGroup {
            order,
            left,
            right,
            gen_inverse,
            parent,
            inverse: vec![0; order],
            class_of: vec![u32::MAX; order],
            classes: Vec::new(),
        };
        // inv(g_i · p) = inv(p) · g_i^{-1}
        for &x in &bfs_order[1..] {
            let (p, i) = g.parent[x as usize];
            let mut y = g.inverse[p as usize];
            for &j in &g.gen_inverse[i as usize] {
                y = g.right[j as usize][y as usize];
            }
            g.inverse[x as usize] = y;
        }
        g.compute_classes();
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_generators(&self) -> usize {
        self.left.len()
    }

    pub fn generator(&self, i: usize) -> u32 {
        self.left[i][0]
    }

    pub fn left_gen(&self, i: usize, x: u32) -> u32 {
        self.left[i][x as usize]
    }

    pub fn right_gen(&self, i: usize, x: u32) -> u32 {
        self.right[i][x as usize]
    }

    /// (p, i) with x = g_i · p along a shortest word; None for the identity.
    pub fn parent(&self, x: u32) -> Option<(u32, usize)> {
        (x != 0).then(|| {
            let (p, i) = self.parent[x as usize];
            (p, i as usize)
        })
    }

    /// Elements in breadth-first order from the identity.
    pub fn bfs_order(&self) -> Vec<u32> {
        let mut depth = vec![0u32; self.order];
        let mut order: Vec<u32> = (0..self.order as u32).collect();
        for &x in &order {
            depth[x as usize] = self.word(x).len() as u32;
        }
        order.sort_by_key(|&x| (depth[x as usize], x));
        order
    }

    /// A word in the generators equal to x (left to right).
    pub fn word(&self, mut x: u32) -> Vec<u8> {
        let mut w = Vec::new();
        while x != 0 {
            let (p, i) = self.parent[x as usize];
            w.push(i);
            x = p;
        }
        w
    }

    /// Evaluates a word in the generators.
    pub fn eval_word(&self, word: &[u8]) -> u32 {
        word.iter().rev().fold(0u32, |acc, &i| self.left[i as usize][acc as usize])
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        // a = g_{i1} g_{i2} … g_{ik}; apply g_{ik} first.
        let mut gens = [0u8; 256];
        let mut k = 0;
        let mut x = a;
        while x != 0 {
            let (p, i) = self.parent[x as usize];
            gens[k] = i;
            k += 1;
            x = p;
        }
        let mut y = b;
        for &i in gens[..k].iter().rev() {
            y = self.left[i as usize][y as usize];
        }
        y
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(a, r);
        }
        r
    }

    pub fn element_order(&self, a: u32) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(a, x);
            k += 1;
        }
        k
    }

    /// g_i x g_i^{-1}
    fn conj_by_gen(&self, i: usize, x: u32) -> u32 {
        let mut y = self.left[i][x as usize];
        for &j in &self.gen_inverse[i] {
            y = self.right[j as usize][y as usize];
        }
        y
    }

    fn compute_classes(&mut self) {
        let mut raw: Vec<(u32, Vec<u32>)> = Vec::new();
        for x in 0..self.order as u32 {
            if self.class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let mut members = vec![x];
            self.class_of[x as usize] = id;
            let mut head = 0;
            while head < members.len() {
                let y = members[head];
                head += 1;
                for i in 0..self.left.len() {
                    let c = self.conj_by_gen(i, y);
                    if self.class_of[c as usize] == u32::MAX {
                        self.class_of[c as usize] = id;
                        members.push(c);
                    }
                }
            }
            raw.push((x, members));
        }
        let mut keyed: Vec<(u32, usize, usize, u32)> =
            raw.iter().enumerate().map(|(k, (rep, m))| (self.element_order(*rep), m.len(), k, *rep)).collect();
        keyed.sort();
        let mut remap = vec![0u32; raw.len()];
        for (new, &(_, _, old, _)) in keyed.iter().enumerate() {
            remap[old] = new as u32;
        }
        for c in &mut self.class_of {
            *c = remap[*c as usize];
        }
        self.classes =
            keyed.into_iter().map(|(order, size, _, rep)| ConjClass { representative: rep, size, order }).collect();
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Members of class k.
    pub fn class_members(&self, k: usize) -> Vec<u32> {
        (0..self.order as u32).filter(|&x| self.class_of[x as usize] as usize == k).collect()
    }

    /// Class of the inverse of each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| self.class_of(self.inv(c.representative))).collect()
    }

    /// power_map[k][j] = class of rep_k^j for 0 ≤ j < order(rep_k).
    pub fn power_maps(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|c| {
                let mut out = Vec::with_capacity(c.order as usize);
                let mut x = 0u32;
                for _ in 0..c.order {
                    out.push(self.class_of(x));
                    x = self.mul(c.representative, x);
                }
                out
            })
            .collect()
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1u64, |acc, c| {
            let o = c.order as u64;
            acc / num_integer::gcd(acc, o) * o
        })
    }

    /// Image of every element under the automorphism that sends generator
    /// i to the element `images[i]`. Returns None if the assignment is not
    /// a homomorphism.
    pub fn automorphism(&self, images: &[u32]) -> Option<Vec<u32>> {
        let mut out = vec![u32::MAX; self.order];
        out[0] = 0;
        let mut order: Vec<u32> = (1..self.order as u32).collect();
        order.sort_by_key(|&x| self.word(x).len());
        for x in order {
            let (p, i) = self.parent[x as usize];
            out[x as usize] = self.mul(images[i as usize], out[p as usize]);
        }
        // Homomorphism check on generators against the right tables.
        for x in 0..self.order as u32 {
            for (i, &img) in images.iter().enumerate() {
                let y = self.right[i][x as usize];
                if out[y as usize] != self.mul(out[x as usize], img) {
                    return None;
                }
            }
        }
        Some(out)
    }
}

/// Elements as permutations, then the two multiplication tables.
pub type PermutationTables = (Vec<Vec<u16>>, Vec<Vec<u32>>, Vec<Vec<u32>>);

/// Builds left/right tables for a group generated by permutations.
pub fn tables_from_permutations(gens: &[Vec<u16>]) -> PermutationTables {
    use std::collections::HashMap;
    let degree = gens[0].len();
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u16>, u32> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y: Vec<u16> = x.iter().map(|&v| g[v as usize]).collect();
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len() as u32);
                elements.push(y);
            }
        }
    }
    let compose = |a: &[u16], b: &[u16]| -> Vec<u16> {
        // (a·b)(v) = a(b(v))
        b.iter().map(|&v| a[v as usize]).collect()
    };
    let left = gens.iter().map(|g| elements.iter().map(|x| index[&compose(g, x)]).collect()).collect();
    let right = gens.iter().map(|g| elements.iter().map(|x| index[&compose(x, g)]).collect()).collect();
    (elements, left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> FiniteGroup {
        let mut gens = Vec::new();
        for i in 0..n - 1 {
            let mut p: Vec<u16> = (0..n as u16).collect();
            p.swap(i, i + 1);
            gens.push(p);
        }
        let (_, l, r) = tables_from_permutations(&gens);
        FiniteGroup::new(l, r, (0..n - 1).map(|i| vec![i as u8]).collect())
    }

    #[test]
    fn symmetric_group_classes() {
        let g = sym(5);
        assert_eq!(g.order(), 120);
        assert_eq!(g.num_classes(), 7);
        let sizes: usize = g.classes().iter().map(|c| c.size).sum();
        assert_eq!(sizes, 120);
        assert_eq!(g.exponent(), 60);
        for x in [3u32, 17, 55, 119] {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.eval_word(&g.word(x)), x);
        }
        for a in [5u32, 20, 77] {
            for b in [1u32, 33, 100] {
                let c = [2u32, 9];
                for &c in &c {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}
