//! Symbols of classical Weyl group characters, the families they cut out,
//! special characters and the Springer section on special orbits.
//!
//! Normalization: a bipartition `(alpha, beta)` of `n` is padded to `m + 1`
//! (types B/C) or `m` (type D) components for `alpha` and `m` for `beta`,
//! with `m = max(n, 1)`; ascending entries get offsets `0, 1, 2, ...`. Two
//! characters lie in one family exactly when their symbols have the same
//! multiset of entries.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::orbit::{is_special, OrbitLabel, OrbitType};
use crate::partition::{ascending_padded, lr_coeff, BiPartition, Partition};

/// Symbol types: B and C share their symbols; D symbols have equal rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum SymbolType {
    BC,
    D,
}

impl SymbolType {
    pub fn of(ty: OrbitType) -> Result<Self> {
        match ty {
            OrbitType::B | OrbitType::C => Ok(SymbolType::BC),
            OrbitType::D => Ok(SymbolType::D),
            OrbitType::A => Err(Error::UnsupportedGroup("symbols are defined for types B, C and D".into())),
        }
    }
}

/// Two strictly increasing rows of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn defect(&self) -> usize {
        self.top.len().abs_diff(self.bottom.len())
    }

    pub fn entries(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        e.sort_unstable();
        e
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", row(&self.top), row(&self.bottom))
    }
}

fn shifted(p: &Partition, len: usize) -> Vec<u32> {
    ascending_padded(p, len).into_iter().enumerate().map(|(i, v)| v + i as u32).collect()
}

fn rank_padding(n: usize) -> usize {
    n.max(1)
}

/// The symbol of `sigma_{(alpha, beta)}` in the frozen normalization. Type D
/// rows are unordered; the lexicographically larger row is stored on top.
pub fn symbol_of(chi: &BiPartition, ty: SymbolType) -> Symbol {
    let m = rank_padding(chi.size());
    match ty {
        SymbolType::BC => Symbol { top: shifted(&chi.first, m + 1), bottom: shifted(&chi.second, m) },
        SymbolType::D => {
            let (a, b) = (shifted(&chi.first, m), shifted(&chi.second, m));
            if a >= b {
                Symbol { top: a, bottom: b }
            } else {
                Symbol { top: b, bottom: a }
            }
        }
    }
}

/// Family invariant: the sorted symbol entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FamilyId {
    pub ty: SymbolType,
    pub content: Vec<u32>,
}

impl FamilyId {
    /// Short stable digest for display.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{:?}:{:?}", self.ty, self.content));
        hex::encode(&h.finalize()[..4])
    }
}

pub fn family_id(chi: &BiPartition, ty: SymbolType) -> FamilyId {
    FamilyId { ty, content: symbol_of(chi, ty).entries() }
}

pub fn same_family(a: &BiPartition, b: &BiPartition, ty: SymbolType) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    Ok(family_id(a, ty) == family_id(b, ty))
}

/// Special symbols interleave: `top_1 <= bottom_1 <= top_2 <= ...` (type D in
/// either row order).
pub fn is_special_character(chi: &BiPartition, ty: SymbolType) -> bool {
    let s = symbol_of(chi, ty);
    let interleaves = |x: &[u32], y: &[u32]| {
        let mut seq: Vec<u32> = Vec::with_capacity(x.len() + y.len());
        for i in 0..x.len().max(y.len()) {
            seq.extend(x.get(i));
            seq.extend(y.get(i));
        }
        seq.windows(2).all(|w| w[0] <= w[1])
    };
    match ty {
        SymbolType::BC => interleaves(&s.top, &s.bottom),
        SymbolType::D => interleaves(&s.top, &s.bottom) || interleaves(&s.bottom, &s.top),
    }
}

/// A family of `W(C_n)` or `W(D_n)` characters. Type D families list both
/// orderings of every unordered pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Family {
    pub id: FamilyId,
    pub members: Vec<BiPartition>,
    pub special: Vec<BiPartition>,
}

/// Every family of rank `n`, ordered by family content.
pub fn families(ty: SymbolType, n: usize) -> Vec<Family> {
    let mut by_id: BTreeMap<FamilyId, Vec<BiPartition>> = BTreeMap::new();
    for bp in BiPartition::all(n) {
        by_id.entry(family_id(&bp, ty)).or_default().push(bp);
    }
    by_id
        .into_iter()
        .map(|(id, members)| {
            let special = members.iter().filter(|m| is_special_character(m, ty)).cloned().collect();
            Family { id, members, special }
        })
        .collect()
}

/// Bipartitions `(alpha, beta)` whose shifted components `alpha_i + i`
/// (`a_len` of them) and `beta_j + j` (`b_len` of them) partition
/// `{0, ..., a_len + b_len - 1}`.
fn offset_family(a_len: usize, b_len: usize) -> Vec<BiPartition> {
    let total = a_len + b_len;
    let mut out = Vec::new();
    // Bitmask over {0..total}: set bits are the beta values.
    for mask in 0u64..(1u64 << total) {
        if mask.count_ones() as usize != b_len {
            continue;
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for v in 0..total as u32 {
            if mask >> v & 1 == 1 {
                b.push(v - b.len() as u32);
            } else {
                a.push(v - a.len() as u32);
            }
        }
        out.push(BiPartition::new(Partition::from_unsorted(a), Partition::from_unsorted(b)));
    }
    out.sort();
    out
}

/// The family of `((k^{k+1}), -)` in `W(C_{k(k+1)})`.
pub fn family_members_c(k: usize) -> Vec<BiPartition> {
    offset_family(k + 1, k)
}

/// The family of `((k^k), -)` in `W(D_{k^2})`, both orderings of each pair.
pub fn family_members_d(k: usize) -> Vec<BiPartition> {
    offset_family(k, k)
}

/// `sigma_{O, triv}` for a special orbit `O` of type B, C or D.
///
/// The partition is padded with zeros to an odd (B, C) or even (D) number of
/// parts, sorted ascending, and shifted by `0, 1, 2, ...`. Type C splits the
/// shifted values into evens `2 xi` and odds `2 eta + 1`; type B into odds
/// `2 xi + 1` and evens `2 eta`; type D into evens `2 xi` and odds
/// `2 eta + 1`. Then `alpha_i = xi_i - i`, `beta_j = eta_j - j`.
/// For a very even orbit the result is `(alpha, alpha)` and the numeral,
/// which picks one of the two split constituents, is not resolved.
pub fn special_character_of_orbit(o: &OrbitLabel) -> Result<BiPartition> {
    if o.ty == OrbitType::A {
        return Err(Error::UnsupportedGroup("type A orbits index S_n characters directly".into()));
    }
    if !is_special(o) {
        return Err(Error::NotSpecial(o.to_string()));
    }
    let p = &o.partition;
    let mut len = p.len();
    let want_odd = o.ty != OrbitType::D;
    if (len % 2 == 1) != want_odd {
        len += 1;
    }
    let gamma: Vec<u32> = shifted(p, len);
    let (xi_parity, eta_parity) = match o.ty {
        OrbitType::B => (1, 0),
        _ => (0, 1),
    };
    let xi: Vec<u32> = gamma.iter().filter(|g| *g % 2 == xi_parity).map(|g| g / 2).collect();
    let eta: Vec<u32> = gamma.iter().filter(|g| *g % 2 == eta_parity).map(|g| g / 2).collect();
    let unshift = |v: &[u32]| Partition::from_unsorted(v.iter().enumerate().map(|(i, x)| x - i as u32));
    let (want_xi, want_eta) = match o.ty {
        OrbitType::D => (len / 2, len / 2),
        _ => (len / 2 + 1, len / 2),
    };
    if xi.len() != want_xi || eta.len() != want_eta {
        return Err(Error::InvalidOrbit(format!("{o}: shifted parts have the wrong parity split")));
    }
    Ok(BiPartition::new(unshift(&xi), unshift(&eta)))
}

/// Families containing a constituent of `sigma_{(lambda, -)} ⊗ Λ V`, where
/// `lambda` is the rectangle attached to the self-dual minimal solvable
/// orbit: `(k^{k+1})` for `n = k(k+1)` in type C, `(k^k)` for `n = k^2` in
/// type D. Other ranks are rejected.
pub fn good_family_classical(ty: OrbitType, n: usize) -> Result<Vec<Family>> {
    let lambda = minimal_rectangle(ty, n)?;
    let sty = SymbolType::of(ty)?;
    let mut ids = std::collections::BTreeSet::new();
    for chi in lr_constituents(&lambda)?.keys() {
        ids.insert(family_id(chi, sty));
    }
    Ok(families(sty, n).into_iter().filter(|f| ids.contains(&f.id)).collect())
}

/// `(k^{k+1})` for type C with `n = k(k+1)`, `(k^k)` for type D with `n = k^2`.
pub fn minimal_rectangle(ty: OrbitType, n: usize) -> Result<Partition> {
    let k = (0..=n).find(|&k| match ty {
        OrbitType::C => k * (k + 1) >= n,
        _ => k * k >= n,
    });
    match (ty, k) {
        (OrbitType::C, Some(k)) if k * (k + 1) == n && k > 0 => Ok(Partition::rectangle(k as u32, k + 1)),
        (OrbitType::D, Some(k)) if k * k == n && k > 0 => Ok(Partition::rectangle(k as u32, k)),
        (OrbitType::C | OrbitType::D, _) => {
            Err(Error::PsiNotImplemented(format!("type {ty} rank {n} has no self-dual minimal solvable orbit")))
        }
        _ => Err(Error::PsiNotImplemented(format!("type {ty}"))),
    }
}

/// Nonzero `N^lambda_{alpha, beta^t}` over all bipartitions of `|lambda|`.
pub fn lr_constituents(lambda: &Partition) -> Result<BTreeMap<BiPartition, u64>> {
    let n = lambda.size();
    let rows = lambda.len();
    let cols = lambda.part(0);
    let mut out = BTreeMap::new();
    let alphas = Partition::in_box(rows, cols);
    // beta^t fits the same box, so beta fits the transposed box.
    let betas = Partition::in_box(cols as usize, rows as u32);
    for a in &alphas {
        for b in betas.iter().filter(|b| a.size() + b.size() == n) {
            let c = lr_coeff(a, &b.transpose(), lambda)?;
            if c > 0 {
                out.insert(BiPartition::new(a.clone(), b.clone()), c);
            }
        }
    }
    Ok(out)
}
