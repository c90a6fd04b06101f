//! Labels φ_{d,b}: degree and b-invariant (lowest degree in which the
//! character occurs in the symmetric algebra of the reflection representation).

use super::cyclo::Cyc;
use super::dixon::{CharacterTable, ClassFunction};
use super::roots::ReflectionGroup;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// φ_{dim,b} with 0, 1 or 2 primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CharLabel {
    pub dim: u64,
    pub b: u32,
    pub primes: u8,
}

impl CharLabel {
    pub fn new(dim: u64, b: u32, primes: u8) -> Self {
        CharLabel { dim, b, primes }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ_{{{},{}}}{}", self.dim, self.b, "'".repeat(self.primes as usize))
    }
}

impl From<CharLabel> for String {
    fn from(l: CharLabel) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for CharLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for CharLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("character label {s:?}"));
        let t = s.trim();
        let rest = t.strip_prefix("φ_").or_else(|| t.strip_prefix("phi_")).ok_or_else(bad)?;
        let primes = rest.chars().rev().take_while(|&c| c == '\'').count();
        let body = &rest[..rest.len() - primes];
        let body = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(bad)?;
        let (d, b) = body.split_once(',').ok_or_else(bad)?;
        Ok(CharLabel {
            dim: d.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
            primes: primes as u8,
        })
    }
}

/// Eigenvalue multiplicities of each class representative on V: entry t is
/// the multiplicity of ζ_o^t, o the element order.
pub fn eigenvalue_multiplicities(g: &ReflectionGroup, t: &CharacterTable) -> Result<Vec<Vec<u32>>> {
    let classes = g.group.classes();
    let traces: Vec<Cyc> = classes.iter().map(|c| g.trace(c.representative)).collect();
    let powers = g.group.power_maps();
    classes
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let o = c.order;
            (0..o)
                .map(|tt| {
                    let s: Cyc = powers[k]
                        .iter()
                        .enumerate()
                        .map(|(j, &cls)| &traces[cls] * &Cyc::zeta(o, -((j as i64) * tt as i64)))
                        .sum();
                    let m = s.scale(1, o as i128);
                    m.as_integer()
                        .filter(|&v| v >= 0)
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::Mismatch(format!("eigenvalue multiplicity {m} at class {k}")))
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()
        .inspect(|v| {
            debug_assert_eq!(v.len(), t.num_classes());
        })
}

/// Graded trace series 1/det(1 − q x) up to degree `deg`, per class.
pub fn molien_series(g: &ReflectionGroup, t: &CharacterTable, deg: usize) -> Result<Vec<Vec<Cyc>>> {
    let eig = eigenvalue_multiplicities(g, t)?;
    let classes = g.group.classes();
    Ok(eig
        .iter()
        .zip(classes)
        .map(|(mults, c)| {
            let mut series = vec![Cyc::zero(); deg + 1];
            series[0] = Cyc::one();
            for (tt, &m) in mults.iter().enumerate() {
                let z = Cyc::zeta(c.order, tt as i64);
                for _ in 0..m {
                    // multiply by 1/(1 − z q) = Σ z^k q^k, i.e. s_i += z s_{i−1}
                    for i in 1..=deg {
                        let add = &series[i - 1] * &z;
                        series[i] = &series[i] + &add;
                    }
                }
            }
            series
        })
        .collect())
}

/// ⟨χ, S^i V⟩ for i = 0..=deg.
pub fn graded_multiplicities(t: &CharacterTable, series: &[Vec<Cyc>], chi: &[Cyc]) -> Result<Vec<u64>> {
    let deg = series[0].len() - 1;
    (0..=deg)
        .map(|i| {
            let f: ClassFunction = series.iter().map(|s| s[i].clone()).collect();
            let m = t.inner_product(&f, chi);
            m.as_integer()
                .filter(|&v| v >= 0)
                .map(|v| v as u64)
                .ok_or_else(|| Error::Mismatch(format!("graded multiplicity {m} in degree {i}")))
        })
        .collect()
}

/// b-invariant of every irreducible.
pub fn b_invariants(g: &ReflectionGroup, t: &CharacterTable) -> Result<Vec<u32>> {
    let n = g.num_positive_roots();
    let series = molien_series(g, t, n)?;
    t.rows
        .iter()
        .map(|chi| {
            let m = graded_multiplicities(t, &series, chi)?;
            m.iter()
                .position(|&v| v > 0)
                .map(|b| b as u32)
                .ok_or_else(|| Error::Mismatch("character absent from coinvariants".into()))
        })
        .collect()
}

/// Reflection character as a class function.
pub fn reflection_character(g: &ReflectionGroup) -> ClassFunction {
    g.group.classes().iter().map(|c| g.trace(c.representative)).collect()
}

/// Permutation character on the roots of a given squared length.
pub fn root_permutation_character(g: &ReflectionGroup, norm: &Cyc) -> ClassFunction {
    g.group
        .classes()
        .iter()
        .map(|c| {
            let fixed = (0..g.roots.len()).filter(|&k| g.norms[k] == *norm && g.act(c.representative, k) == k).count();
            Cyc::from_int(fixed as i128)
        })
        .collect()
}

/// Class permutation induced by a graph automorphism of the Coxeter diagram
/// (generator i ↦ generator perm[i]), if it extends to the group.
pub fn diagram_class_permutation(g: &ReflectionGroup, perm: &[usize]) -> Option<Vec<usize>> {
    let images: Vec<u32> = perm.iter().map(|&j| g.group.generator(j)).collect();
    let auto = g.group.automorphism(&images)?;
    Some(g.group.classes().iter().map(|c| g.group.class_of(auto[c.representative as usize])).collect())
}

/// A labelled character table of a reflection group.
#[derive(Clone, Debug)]
pub struct LabelledTable {
    pub table: CharacterTable,
    pub labels: Vec<CharLabel>,
    /// Index of the reflection representation.
    pub reflection_row: usize,
    /// Ambiguous (dim, b) groups whose primes could not be fixed intrinsically.
    pub unresolved: Vec<Vec<usize>>,
}

impl LabelledTable {
    pub fn index_of(&self, l: &CharLabel) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    /// Swaps the labels of two rows.
    pub fn swap_labels(&mut self, i: usize, j: usize) {
        self.labels.swap(i, j);
    }

    /// Rows ordered by (dim, b, primes).
    pub fn sorted_rows(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.labels.len()).collect();
        idx.sort_by_key(|&i| self.labels[i]);
        idx
    }
}

/// Labels every irreducible by (dim, b). Pairs sharing (dim, b) that are
/// exchanged by a diagram automorphism θ swapping root lengths are primed by
/// comparing multiplicities in powers of the long- and short-root permutation
/// characters: φ' is the member with the larger long-root multiplicity at the
/// first power where the two differ. Remaining ties are reported unresolved
/// and primed in table order.
pub fn label_characters(g: &ReflectionGroup, t: CharacterTable) -> Result<LabelledTable> {
    let b = b_invariants(g, &t)?;
    let refl = reflection_character(g);
    let reflection_row =
        t.find_row(&refl).ok_or_else(|| Error::Mismatch("reflection character is not irreducible".into()))?;
    let mut groups: BTreeMap<(u64, u32), Vec<usize>> = BTreeMap::new();
    for (i, &bi) in b.iter().enumerate().take(t.rows.len()) {
        groups.entry((t.degree(i), bi)).or_default().push(i);
    }
    let mut labels: Vec<CharLabel> = (0..t.rows.len()).map(|i| CharLabel::new(t.degree(i), b[i], 0)).collect();
    let theta = theta_permutation(g);
    let length_chars = length_characters(g);
    let mut unresolved = Vec::new();
    for members in groups.values().filter(|m| m.len() > 1) {
        let mut resolved = false;
        if let (2, Some(perm), Some((pl, ps))) = (members.len(), &theta, &length_chars) {
            let (a, c) = (members[0], members[1]);
            let twisted: Vec<Cyc> = perm.iter().map(|&k| t.rows[a][k].clone()).collect();
            if twisted == t.rows[c] {
                if let Some(first_is_prime) = orient(&t, &t.rows[a], &t.rows[c], pl, ps) {
                    let (p1, p2) = if first_is_prime { (a, c) } else { (c, a) };
                    labels[p1].primes = 1;
                    labels[p2].primes = 2;
                    resolved = true;
                }
            }
        }
        if !resolved {
            for (k, &i) in members.iter().enumerate() {
                labels[i].primes = (k + 1) as u8;
            }
            unresolved.push(members.clone());
        }
    }
    Ok(LabelledTable { table: t, labels, reflection_row, unresolved })
}

fn theta_permutation(g: &ReflectionGroup) -> Option<Vec<usize>> {
    let r = g.rank();
    let rev: Vec<usize> = (0..r).rev().collect();
    // The reversal is a diagram automorphism exactly for the symmetric diagrams.
    let sym = (0..r).all(|i| (0..r).all(|j| g.spec.coxeter[i][j] == g.spec.coxeter[rev[i]][rev[j]]));
    if !sym {
        return None;
    }
    diagram_class_permutation(g, &rev)
}

fn length_characters(g: &ReflectionGroup) -> Option<(ClassFunction, ClassFunction)> {
    let mut norms: Vec<Cyc> = Vec::new();
    for n in &g.norms {
        if !norms.contains(n) {
            norms.push(n.clone());
        }
    }
    if norms.len() != 2 {
        return None;
    }
    norms.sort_by(|a, b| a.re_f64().partial_cmp(&b.re_f64()).unwrap());
    let short = root_permutation_character(g, &norms[0]);
    let long = root_permutation_character(g, &norms[1]);
    Some((long, short))
}

/// Some(true) if `a` has larger long-root multiplicity at the first
/// distinguishing power of the root permutation characters.
fn orient(t: &CharacterTable, a: &[Cyc], c: &[Cyc], long: &[Cyc], short: &[Cyc]) -> Option<bool> {
    let mut pl: Vec<Cyc> = vec![Cyc::one(); long.len()];
    let mut ps = pl.clone();
    for _ in 0..8 {
        pl = CharacterTable::tensor(&pl, long);
        ps = CharacterTable::tensor(&ps, short);
        let da = t.inner_product(&pl, a) - t.inner_product(&ps, a);
        let dc = t.inner_product(&pl, c) - t.inner_product(&ps, c);
        if da != dc {
            return Some(da.re_f64() > dc.re_f64());
        }
    }
    None
}
