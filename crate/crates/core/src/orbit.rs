//! Partition labels of nilpotent orbits in classical types, the B/C/D
//! collapses, the duality map, closure order, solvability and special orbits.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{dominance_unchecked, Dominance, Partition};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum OrbitType {
    A,
    B,
    C,
    D,
}

impl OrbitType {
    pub fn letter(self) -> char {
        match self {
            OrbitType::A => 'A',
            OrbitType::B => 'B',
            OrbitType::C => 'C',
            OrbitType::D => 'D',
        }
    }

    /// Size of the partitions labelling orbits of rank `n`.
    pub fn partition_size(self, n: usize) -> usize {
        match self {
            OrbitType::A => n,
            OrbitType::B => 2 * n + 1,
            OrbitType::C | OrbitType::D => 2 * n,
        }
    }

    /// Whether `p` lies in the parameterizing set of this type (size aside).
    pub fn admits(self, p: &Partition) -> bool {
        match self {
            OrbitType::A => true,
            OrbitType::B | OrbitType::D => p.multiplicities().iter().all(|&(q, m)| q % 2 == 1 || m % 2 == 0),
            OrbitType::C => p.multiplicities().iter().all(|&(q, m)| q % 2 == 0 || m % 2 == 0),
        }
    }
}

impl FromStr for OrbitType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(OrbitType::A),
            "B" | "b" => Ok(OrbitType::B),
            "C" | "c" => Ok(OrbitType::C),
            "D" | "d" => Ok(OrbitType::D),
            other => Err(Error::Parse(format!("unknown classical type {other:?}"))),
        }
    }
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Label distinguishing the two orbits attached to a very even partition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Numeral {
    I,
    II,
}

impl Numeral {
    pub fn other(self) -> Self {
        match self {
            Numeral::I => Numeral::II,
            Numeral::II => Numeral::I,
        }
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Numeral::I => "I",
            Numeral::II => "II",
        })
    }
}

/// All parts even, each with even multiplicity.
pub fn is_very_even(p: &Partition) -> bool {
    !p.is_empty() && p.multiplicities().iter().all(|&(q, m)| q % 2 == 0 && m % 2 == 0)
}

/// A nilpotent orbit of a classical Lie algebra of rank `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitLabel {
    pub ty: OrbitType,
    pub partition: Partition,
    pub numeral: Option<Numeral>,
}

impl OrbitLabel {
    pub fn new(ty: OrbitType, partition: Partition, numeral: Option<Numeral>) -> Result<Self> {
        let size = partition.size();
        let parity_ok = match ty {
            OrbitType::A => true,
            OrbitType::B => size % 2 == 1,
            OrbitType::C | OrbitType::D => size.is_multiple_of(2),
        };
        if !parity_ok || !ty.admits(&partition) {
            return Err(Error::InvalidOrbit(format!("{ty}:{partition} is not in the parameterizing set")));
        }
        let needs_numeral = ty == OrbitType::D && is_very_even(&partition);
        if needs_numeral != numeral.is_some() {
            return Err(Error::InvalidOrbit(format!(
                "{ty}:{partition}: numeral {} for a {}very even partition",
                if numeral.is_some() { "given" } else { "missing" },
                if needs_numeral { "" } else { "non-" }
            )));
        }
        Ok(Self { ty, partition, numeral })
    }

    /// Rank of the ambient algebra.
    pub fn rank(&self) -> usize {
        let s = self.partition.size();
        match self.ty {
            OrbitType::A => s,
            OrbitType::B => (s - 1) / 2,
            OrbitType::C | OrbitType::D => s / 2,
        }
    }

    /// Every orbit of the given type and rank, very even ones once per numeral.
    pub fn all(ty: OrbitType, n: usize) -> Vec<OrbitLabel> {
        let mut out = Vec::new();
        for p in Partition::all(ty.partition_size(n)) {
            if !ty.admits(&p) {
                continue;
            }
            if ty == OrbitType::D && is_very_even(&p) {
                out.push(OrbitLabel { ty, partition: p.clone(), numeral: Some(Numeral::I) });
                out.push(OrbitLabel { ty, partition: p, numeral: Some(Numeral::II) });
            } else {
                out.push(OrbitLabel { ty, partition: p, numeral: None });
            }
        }
        out
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ty, self.partition)?;
        if let Some(num) = self.numeral {
            write!(f, ":{num}")?;
        }
        Ok(())
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.trim().split(':');
        let ty: OrbitType = it.next().unwrap_or_default().parse()?;
        let partition: Partition =
            it.next().ok_or_else(|| Error::Parse(format!("orbit label {s:?} lacks a partition")))?.parse()?;
        let numeral = match it.next() {
            None => None,
            Some("I") => Some(Numeral::I),
            Some("II") => Some(Numeral::II),
            Some(other) => return Err(Error::Parse(format!("bad numeral {other:?}"))),
        };
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing fields in {s:?}")));
        }
        OrbitLabel::new(ty, partition, numeral)
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for OrbitLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The largest partition of the target type dominated by `lambda`.
///
/// Repeatedly takes the largest part `q` whose multiplicity has the wrong
/// parity, lowers its last occurrence to `q - 1` and raises the first later
/// part `r < q - 1` (possibly a new zero part) by one.
pub fn collapse(lambda: &Partition, target: OrbitType) -> Result<Partition> {
    let size = lambda.size();
    let parity_ok = match target {
        OrbitType::A => true,
        OrbitType::B => size % 2 == 1,
        OrbitType::C | OrbitType::D => size.is_multiple_of(2),
    };
    if !parity_ok {
        return Err(Error::ParityMismatch { size, target: target.letter() });
    }
    let bad_parity = match target {
        OrbitType::A => return Ok(lambda.clone()),
        OrbitType::B | OrbitType::D => 0,
        OrbitType::C => 1,
    };
    let mut parts = lambda.parts().to_vec();
    loop {
        let p = Partition::from_unsorted(parts.iter().copied());
        let q =
            p.multiplicities().into_iter().filter(|&(q, m)| q % 2 == bad_parity && m % 2 == 1).map(|(q, _)| q).max();
        let Some(q) = q else { return Ok(p) };
        parts = p.into_parts();
        let last = parts.iter().rposition(|&x| x == q).expect("q is a part");
        parts[last] = q - 1;
        match parts[last + 1..].iter().position(|&r| r + 1 < q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
    }
}

/// The order-reversing duality: transpose in type A, transpose followed by
/// collapse otherwise. Very even numerals swap exactly when the rank is odd.
pub fn d_map(o: &OrbitLabel) -> OrbitLabel {
    let t = o.partition.transpose();
    let partition = match o.ty {
        OrbitType::A => t,
        ty => collapse(&t, ty).expect("transpose preserves the size"),
    };
    let numeral = if o.ty == OrbitType::D && is_very_even(&partition) {
        Some(match o.numeral {
            Some(num) if o.rank() % 2 == 1 => num.other(),
            Some(num) => num,
            None => Numeral::I,
        })
    } else {
        None
    };
    OrbitLabel { ty: o.ty, partition, numeral }
}

/// Duality applied to an arbitrary partition of the right parity: the input
/// is first collapsed into the parameterizing set of `ty`.
pub fn d_map_partition(lambda: &Partition, ty: OrbitType, numeral: Option<Numeral>) -> Result<OrbitLabel> {
    let c = collapse(lambda, ty)?;
    let numeral = if ty == OrbitType::D && is_very_even(&c) { Some(numeral.unwrap_or(Numeral::I)) } else { None };
    Ok(d_map(&OrbitLabel::new(ty, c, numeral)?))
}

/// Closure order: dominance of partitions, with the two orbits of one very
/// even partition incomparable.
pub fn closure_leq(a: &OrbitLabel, b: &OrbitLabel) -> Result<Dominance> {
    if a.ty != b.ty || a.partition.size() != b.partition.size() {
        return Err(Error::OrbitMismatch(a.to_string(), b.to_string()));
    }
    if a.partition == b.partition && a.numeral != b.numeral {
        return Ok(Dominance::Incomparable);
    }
    Ok(dominance_unchecked(&a.partition, &b.partition))
}

pub fn is_solvable(o: &OrbitLabel) -> bool {
    let mults = o.partition.multiplicities();
    match o.ty {
        OrbitType::A => o.partition.is_strict(),
        OrbitType::B | OrbitType::D => mults.iter().all(|&(q, m)| q % 2 == 1 && m <= 2),
        OrbitType::C => mults.iter().all(|&(q, m)| q % 2 == 0 && m <= 2),
    }
}

/// Whether the transpose lies in the parameterizing set of type A, B, C and
/// C respectively (a type D partition is special when its transpose is
/// symplectic).
pub fn is_special(o: &OrbitLabel) -> bool {
    let t = o.partition.transpose();
    match o.ty {
        OrbitType::D => OrbitType::C.admits(&t),
        ty => ty.admits(&t),
    }
}

pub fn is_self_dual(o: &OrbitLabel) -> bool {
    d_map(o) == *o
}

/// The unique closure-minimal solvable orbit.
pub fn minimal_solvable(ty: OrbitType, n: usize) -> Result<OrbitLabel> {
    let solvable: Vec<OrbitLabel> = OrbitLabel::all(ty, n).into_iter().filter(is_solvable).collect();
    let minima: Vec<&OrbitLabel> = solvable
        .iter()
        .filter(|o| solvable.iter().all(|other| closure_leq(o, other).map(Dominance::is_leq).unwrap_or(false)))
        .collect();
    match minima.as_slice() {
        [one] => Ok((*one).clone()),
        _ => Err(Error::Mismatch(format!("type {ty} rank {n}: {} closure-minimal solvable orbits", minima.len()))),
    }
}

/// Weights of the neutral element of a Jacobson–Morozov triple, with the
/// squared norm under the standard diagonal form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JmWeight {
    pub entries: Vec<i64>,
    pub norm_squared: u64,
}

pub fn jm_weight(o: &OrbitLabel) -> JmWeight {
    let mut entries: Vec<i64> =
        o.partition.parts().iter().flat_map(|&p| (0..p as i64).map(move |i| p as i64 - 1 - 2 * i)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    let norm_squared = entries.iter().map(|&e| (e * e) as u64).sum();
    JmWeight { entries, norm_squared }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn o(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p("2,2,1"), OrbitType::B).unwrap(), p("2,2,1"));
        assert_eq!(collapse(&p("4,1"), OrbitType::B).unwrap(), p("3,1,1"));
        assert_eq!(collapse(&p("5,1"), OrbitType::C).unwrap(), p("4,2"));
        assert!(matches!(collapse(&p("4"), OrbitType::B), Err(Error::ParityMismatch { .. })));
    }

    #[test]
    fn d_map_examples() {
        assert_eq!(d_map(&o("A:4,3,2,1")), o("A:4,3,2,1"));
        assert_eq!(d_map(&o("C:2,2")), o("C:2,2"));
        assert_eq!(d_map(&o("A:5")), o("A:1,1,1,1,1"));
        let d = d_map_partition(&p("4,1"), OrbitType::B, None).unwrap();
        assert_eq!(d.to_string(), "B:3,1,1");
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure_leq(&o("C:2,2"), &o("C:4")).unwrap(), Dominance::Leq);
        assert_eq!(closure_leq(&o("D:2,2,2,2:I"), &o("D:2,2,2,2:II")).unwrap(), Dominance::Incomparable);
        assert_eq!(closure_leq(&o("D:3,1,1,1,1,1"), &o("D:3,1,1,1,1,1")).unwrap(), Dominance::Equal);
        assert!(closure_leq(&o("C:2,2"), &o("B:3,1,1")).is_err());
    }

    #[test]
    fn solvable_and_minimal() {
        assert!(is_solvable(&o("C:2,2")));
        assert!(!is_solvable(&o("C:2,2,2")));
        assert!(is_solvable(&o("A:3,2,1")));
        assert_eq!(minimal_solvable(OrbitType::A, 6).unwrap(), o("A:3,2,1"));
        assert_eq!(minimal_solvable(OrbitType::C, 2).unwrap(), o("C:2,2"));
        assert_eq!(minimal_solvable(OrbitType::D, 4).unwrap(), o("D:3,3,1,1"));
    }

    #[test]
    fn special_examples() {
        assert!(is_special(&o("C:2,2")) && is_self_dual(&o("C:2,2")));
        assert!(!is_special(&o("B:2,2,1")));
        assert!(is_special(&o("D:3,3,1,1")));
        assert!(!is_special(&o("D:3,2,2,1")));
        for x in OrbitLabel::all(OrbitType::A, 6) {
            assert!(is_special(&x));
        }
    }

    #[test]
    fn jm_examples() {
        assert_eq!(jm_weight(&o("A:4")).entries, vec![3, 1, -1, -3]);
        assert_eq!(jm_weight(&o("C:1,1,1,1")).norm_squared, 0);
        let w = jm_weight(&o("C:2,2"));
        assert_eq!(w.entries, vec![1, 1, -1, -1]);
        assert_eq!(w.norm_squared, 4);
    }

    #[test]
    fn label_grammar() {
        assert_eq!(o("D:2,2,2,2:I").to_string(), "D:2,2,2,2:I");
        assert!("D:2,2,2,2".parse::<OrbitLabel>().is_err());
        assert!("C:3".parse::<OrbitLabel>().is_err());
        assert!("B:2,2".parse::<OrbitLabel>().is_err());
    }
}
