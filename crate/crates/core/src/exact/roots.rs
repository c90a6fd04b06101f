//! Root systems of the supported reflection groups and the groups they generate,
//! realised as permutation groups on the roots.

use super::cyclo::Cyc;
use super::group::{tables_from_permutations, FiniteGroup};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// Default refusal threshold for group enumeration.
pub const GROUP_SIZE_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupName {
    G2,
    F4,
    E6,
    E7,
    E8,
    H3,
    H4,
    /// Dihedral group of order 2n.
    I2(u32),
}

impl GroupName {
    /// |W| from the product of the degrees.
    pub fn order(&self) -> usize {
        match self {
            GroupName::G2 => 12,
            GroupName::F4 => 1152,
            GroupName::E6 => 51_840,
            GroupName::E7 => 2_903_040,
            GroupName::E8 => 696_729_600,
            GroupName::H3 => 120,
            GroupName::H4 => 14_400,
            GroupName::I2(n) => 2 * *n as usize,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            GroupName::G2 | GroupName::I2(_) => 2,
            GroupName::F4 | GroupName::H4 => 4,
            GroupName::E6 => 6,
            GroupName::E7 => 7,
            GroupName::E8 => 8,
            GroupName::H3 => 3,
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match self {
            GroupName::H3 | GroupName::H4 => false,
            GroupName::I2(n) => matches!(n, 2 | 3 | 4 | 6),
            _ => true,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::I2(n) => write!(f, "I2({n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl From<GroupName> for String {
    fn from(g: GroupName) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for GroupName {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for GroupName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        Ok(match t.as_str() {
            "G2" => GroupName::G2,
            "F4" => GroupName::F4,
            "E6" => GroupName::E6,
            "E7" => GroupName::E7,
            "E8" => GroupName::E8,
            "H3" => GroupName::H3,
            "H4" => GroupName::H4,
            _ => {
                let inner = t
                    .strip_prefix("I2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| t.strip_prefix("I2:"))
                    .ok_or_else(|| Error::UnsupportedGroup(s.to_string()))?;
                let n: u32 = inner.parse().map_err(|_| Error::UnsupportedGroup(s.to_string()))?;
                if n < 2 {
                    return Err(Error::UnsupportedGroup(s.to_string()));
                }
                GroupName::I2(n)
            }
        })
    }
}

/// Simple roots and their Gram matrix.
#[derive(Clone, Debug)]
pub struct RootSystemSpec {
    pub name: GroupName,
    pub rank: usize,
    /// B(α_i, α_j).
    pub gram: Vec<Vec<Cyc>>,
    /// Simple roots in orthonormal coordinates, where available.
    pub ortho: Option<Vec<Vec<Cyc>>>,
    pub coxeter: Vec<Vec<u32>>,
}

fn gram_of(ortho: &[Vec<Cyc>]) -> Vec<Vec<Cyc>> {
    ortho.iter().map(|a| ortho.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect()).collect()
}

fn ints(rows: &[&[i128]]) -> Vec<Vec<Cyc>> {
    rows.iter().map(|r| r.iter().map(|&x| Cyc::from_int(x)).collect()).collect()
}

fn half(x: Cyc) -> Cyc {
    x.scale(1, 2)
}

impl RootSystemSpec {
    pub fn new(name: GroupName) -> Result<Self> {
        let z = Cyc::zero;
        let o = || Cyc::from_int(1);
        let (gram, ortho) = match name {
            GroupName::G2 => {
                // short α1, long α2
                let s3 = Cyc::sqrt_int(3);
                let ortho = vec![vec![o(), z()], vec![Cyc::from_ratio(-3, 2), half(s3)]];
                (gram_of(&ortho), Some(ortho))
            }
            GroupName::F4 => {
                // α1, α2 long; α3, α4 short
                let h = || Cyc::from_ratio(1, 2);
                let mh = || Cyc::from_ratio(-1, 2);
                let ortho = vec![
                    vec![z(), o(), -o(), z()],
                    vec![z(), z(), o(), -o()],
                    vec![z(), z(), z(), o()],
                    vec![h(), mh(), mh(), mh()],
                ];
                (gram_of(&ortho), Some(ortho))
            }
            GroupName::E6 => {
                // Bourbaki numbering: 1-3-4-5-6 chain, 2 attached to 4.
                let c = ints(&[
                    &[2, 0, -1, 0, 0, 0],
                    &[0, 2, 0, -1, 0, 0],
                    &[-1, 0, 2, -1, 0, 0],
                    &[0, -1, -1, 2, -1, 0],
                    &[0, 0, 0, -1, 2, -1],
                    &[0, 0, 0, 0, -1, 2],
                ]);
                (c, None)
            }
            GroupName::H3 => {
                let tau = half(o() + Cyc::sqrt_int(5));
                let tinv = &tau - &o();
                let ortho = vec![
                    vec![o(), z(), z()],
                    vec![half(-tau), half(tinv), Cyc::from_ratio(-1, 2)],
                    vec![z(), z(), o()],
                ];
                (gram_of(&ortho), Some(ortho))
            }
            GroupName::H4 => {
                let tau = half(o() + Cyc::sqrt_int(5));
                let tinv = &tau - &o();
                let ortho = vec![
                    vec![-o(), z(), z(), z()],
                    vec![half(tau.clone()), Cyc::from_ratio(-1, 2), half(-&tinv), z()],
                    vec![z(), Cyc::from_ratio(1, 2), half(tau.clone()), half(-&tinv)],
                    vec![z(), half(tinv), Cyc::from_ratio(-1, 2), half(tau)],
                ];
                (gram_of(&ortho), Some(ortho))
            }
            GroupName::I2(n) => {
                if n < 2 {
                    return Err(Error::UnsupportedGroup(name.to_string()));
                }
                let m = 2 * n;
                let cos = half(Cyc::two_cos(m, 1));
                // sin(π/n) = −i (ζ − ζ^{-1}) / 2
                let sin = half(-(Cyc::i() * (Cyc::zeta(m, 1) - Cyc::zeta(m, -1))));
                let ortho = vec![vec![o(), z()], vec![-cos, sin]];
                (gram_of(&ortho), Some(ortho))
            }
            GroupName::E7 | GroupName::E8 => {
                return Err(Error::UnsupportedGroup(format!(
                    "{name}: order {} is beyond desk scale; only golden data is available",
                    name.order()
                )))
            }
        };
        let rank = gram.len();
        let coxeter = coxeter_from_gram(&gram);
        Ok(RootSystemSpec { name, rank, gram, ortho, coxeter })
    }
}

/// m(i, j) from cos²(π/m) = B(i,j)² / (B(i,i) B(j,j)).
fn coxeter_from_gram(gram: &[Vec<Cyc>]) -> Vec<Vec<u32>> {
    let r = gram.len();
    let mut m = vec![vec![1u32; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let c2 = gram[i][j].re_f64().powi(2) / (gram[i][i].re_f64() * gram[j][j].re_f64());
            let angle = c2.sqrt().acos();
            m[i][j] = if angle < 1e-9 { 1 } else { (std::f64::consts::PI / angle).round() as u32 };
        }
    }
    m
}

/// A finite reflection group realised on its root system.
#[derive(Debug)]
pub struct ReflectionGroup {
    pub spec: RootSystemSpec,
    /// Roots in simple-root coordinates.
    pub roots: Vec<Vec<Cyc>>,
    pub positive: Vec<bool>,
    /// B(β, β) for every root.
    pub norms: Vec<Cyc>,
    pub group: FiniteGroup,
    /// simple_images[x][i] = root index of x(α_i).
    pub simple_images: Vec<Vec<u16>>,
    /// Element index of the reflection s_β, per root.
    pub reflection: Vec<u32>,
}

impl ReflectionGroup {
    pub fn build(name: GroupName) -> Result<Self> {
        Self::build_with_cap(name, GROUP_SIZE_CAP)
    }

    pub fn build_with_cap(name: GroupName, cap: usize) -> Result<Self> {
        if name.order() > cap {
            return Err(Error::GroupTooLarge { order: name.order(), cap });
        }
        let spec = RootSystemSpec::new(name)?;
        let r = spec.rank;
        let reflect = |v: &[Cyc], i: usize| -> Vec<Cyc> {
            let bv: Cyc = v.iter().enumerate().map(|(j, x)| x * &spec.gram[j][i]).sum();
            let c = (bv * Cyc::from_int(2)) * inverse_rational(&spec.gram[i][i]);
            let mut w = v.to_vec();
            w[i] = &w[i] - &c;
            w
        };
        let mut roots: Vec<Vec<Cyc>> =
            (0..r).map(|i| (0..r).map(|j| Cyc::from_int((i == j) as i128)).collect()).collect();
        let mut index: HashMap<Vec<Cyc>, u16> = roots.iter().enumerate().map(|(k, v)| (v.clone(), k as u16)).collect();
        let mut head = 0;
        while head < roots.len() {
            let v = roots[head].clone();
            head += 1;
            for i in 0..r {
                let w = reflect(&v, i);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), roots.len() as u16);
                    roots.push(w);
                }
            }
        }
        let gens: Vec<Vec<u16>> = (0..r).map(|i| roots.iter().map(|v| index[&reflect(v, i)]).collect()).collect();
        let (elements, left, right) = tables_from_permutations(&gens);
        if elements.len() != name.order() {
            return Err(Error::Mismatch(format!(
                "{name}: enumerated {} elements, expected {}",
                elements.len(),
                name.order()
            )));
        }
        let group = FiniteGroup::new(left, right, (0..r).map(|i| vec![i as u8]).collect());
        let simple_images: Vec<Vec<u16>> = elements.iter().map(|x| (0..r).map(|i| x[i]).collect()).collect();
        // s_{x(α_i)} = x s_i x^{-1}
        let mut reflection = vec![u32::MAX; roots.len()];
        for (x, imgs) in simple_images.iter().enumerate() {
            for (i, &b) in imgs.iter().enumerate() {
                if reflection[b as usize] == u32::MAX {
                    let xs = group.right_gen(i, x as u32);
                    reflection[b as usize] = group.mul(xs, group.inv(x as u32));
                }
            }
        }
        let positive = roots.iter().map(|v| v.iter().map(|c| c.re_f64()).sum::<f64>() > 0.0).collect();
        let norms = roots
            .iter()
            .map(|v| {
                let mut s = Cyc::zero();
                for (i, a) in v.iter().enumerate() {
                    for (j, b) in v.iter().enumerate() {
                        s = s + a * b * &spec.gram[i][j];
                    }
                }
                s
            })
            .collect();
        Ok(ReflectionGroup { spec, roots, positive, norms, group, simple_images, reflection })
    }

    pub fn name(&self) -> GroupName {
        self.spec.name
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.iter().filter(|&&p| p).count()
    }

    /// Matrix of x on V in the simple-root basis (column j = x(α_j)).
    pub fn matrix(&self, x: u32) -> Vec<Vec<Cyc>> {
        let r = self.rank();
        let imgs = &self.simple_images[x as usize];
        (0..r).map(|i| (0..r).map(|j| self.roots[imgs[j] as usize][i].clone()).collect()).collect()
    }

    /// Trace of x on the reflection representation.
    pub fn trace(&self, x: u32) -> Cyc {
        let imgs = &self.simple_images[x as usize];
        (0..self.rank()).map(|j| self.roots[imgs[j] as usize][j].clone()).sum()
    }

    /// Root index of x(β).
    pub fn act(&self, x: u32, beta: usize) -> usize {
        // x(β) = Σ c_j x(α_j); locate by coordinates.
        let r = self.rank();
        let mut v = vec![Cyc::zero(); r];
        for (j, c) in self.roots[beta].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &self.roots[self.simple_images[x as usize][j] as usize];
            for i in 0..r {
                v[i] = &v[i] + &(c * &img[i]);
            }
        }
        self.roots.iter().position(|w| *w == v).expect("image of a root is a root")
    }

    /// Orthonormal coordinates of root k.
    pub fn ortho_coords(&self, k: usize) -> Option<Vec<Cyc>> {
        let ortho = self.spec.ortho.as_ref()?;
        let r = self.rank();
        let mut v = vec![Cyc::zero(); ortho[0].len()];
        for (c, row) in self.roots[k].iter().zip(ortho).take(r) {
            if c.is_zero() {
                continue;
            }
            for (i, x) in row.iter().enumerate() {
                v[i] = &v[i] + &(c * x);
            }
        }
        Some(v)
    }
}

fn inverse_rational(c: &Cyc) -> Cyc {
    let (a, b) = c.as_rational().expect("root lengths are rational");
    Cyc::from_ratio(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("g2".parse::<GroupName>().unwrap(), GroupName::G2);
        assert_eq!("I2(7)".parse::<GroupName>().unwrap(), GroupName::I2(7));
        assert_eq!("I2:5".parse::<GroupName>().unwrap(), GroupName::I2(5));
        assert!("B3".parse::<GroupName>().is_err());
        assert_eq!(GroupName::I2(9).to_string(), "I2(9)");
    }

    #[test]
    fn coxeter_matrices() {
        let g2 = RootSystemSpec::new(GroupName::G2).unwrap();
        assert_eq!(g2.coxeter[0][1], 6);
        let h4 = RootSystemSpec::new(GroupName::H4).unwrap();
        assert_eq!(h4.coxeter[0][1], 5);
        assert_eq!(h4.coxeter[1][2], 3);
        assert_eq!(h4.coxeter[2][3], 3);
        assert_eq!(h4.coxeter[0][2], 2);
        let f4 = RootSystemSpec::new(GroupName::F4).unwrap();
        assert_eq!(f4.coxeter[1][2], 4);
        let i7 = RootSystemSpec::new(GroupName::I2(7)).unwrap();
        assert_eq!(i7.coxeter[0][1], 7);
        for i in 0..4 {
            assert!(h4.gram[i][i].is_one());
        }
    }

    #[test]
    fn small_groups() {
        let g2 = ReflectionGroup::build(GroupName::G2).unwrap();
        assert_eq!(g2.group.order(), 12);
        assert_eq!(g2.group.num_classes(), 6);
        assert_eq!(g2.roots.len(), 12);
        assert_eq!(g2.num_positive_roots(), 6);
        let i5 = ReflectionGroup::build(GroupName::I2(5)).unwrap();
        assert_eq!(i5.group.num_classes(), 4);
        let h3 = ReflectionGroup::build(GroupName::H3).unwrap();
        assert_eq!(h3.group.order(), 120);
        assert_eq!(h3.group.num_classes(), 10);
        assert_eq!(h3.roots.len(), 30);
        // (s_i s_j)^m = 1 on generators.
        for g in [&g2, &h3] {
            let r = g.rank();
            for i in 0..r {
                for j in 0..r {
                    let m = g.spec.coxeter[i][j] as u64;
                    let s = g.group.mul(g.group.generator(i), g.group.generator(j));
                    assert_eq!(g.group.pow(s, m), 0);
                    if i != j {
                        assert_ne!(g.group.pow(s, m - 1), 0);
                    }
                }
            }
        }
        // Reflections: trace r − 2, involution.
        for (k, &s) in g2.reflection.iter().enumerate() {
            assert_eq!(g2.trace(s), Cyc::from_int(0), "root {k}");
            assert_eq!(g2.group.element_order(s), 2);
        }
        assert!(ReflectionGroup::build(GroupName::E7).is_err());
    }

    #[test]
    fn f4_group() {
        let f4 = ReflectionGroup::build(GroupName::F4).unwrap();
        assert_eq!(f4.group.order(), 1152);
        assert_eq!(f4.group.num_classes(), 25);
        assert_eq!(f4.roots.len(), 48);
    }
}
