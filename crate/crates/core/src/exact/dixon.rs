//! Character tables by the Dixon–Schneider method: common eigenvectors of the
//! class matrices modulo a split prime, lifted to exact cyclotomic values
//! through eigenvalue multiplicities on cyclic subgroups.

use super::cyclo::Cyc;
use super::group::FiniteGroup;
use super::modp::{char_poly, nullspace, roots, rref, smallest_prime_above, Fp, Mat};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Irreducible characters of a finite group with exact values.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTable {
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u32>,
    pub inverse_class: Vec<usize>,
    pub exponent: u64,
    /// The prime the table was computed modulo.
    pub prime: u64,
    #[serde(with = "cyc_rows")]
    pub rows: Vec<Vec<Cyc>>,
}

/// Class function on the classes of a table.
pub type ClassFunction = Vec<Cyc>;

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.rows[i][0].as_integer().expect("degrees are integers") as u64
    }

    /// ⟨f, g⟩ = |G|^{-1} Σ |C| f(x) conj(g(x)).
    pub fn inner_product(&self, f: &[Cyc], g: &[Cyc]) -> Cyc {
        let s: Cyc =
            (0..self.num_classes()).map(|k| (&f[k] * &g[k].conj()).scale(self.class_sizes[k] as i128, 1)).sum();
        s.scale(1, self.order as i128)
    }

    /// Multiplicities of the irreducibles in a character. Errors if some
    /// multiplicity is not a non-negative integer.
    pub fn decompose(&self, f: &[Cyc]) -> Result<Vec<u64>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, chi)| {
                let m = self.inner_product(f, chi);
                match m.as_integer() {
                    Some(v) if v >= 0 => Ok(v as u64),
                    _ => Err(Error::Mismatch(format!(
                        "multiplicity of irreducible {i} is {m}, not a non-negative integer"
                    ))),
                }
            })
            .collect()
    }

    /// Exact first and second orthogonality; entries must be algebraic integers.
    pub fn verify(&self) -> Result<()> {
        let h = self.num_classes();
        if self.rows.len() != h {
            return Err(Error::LiftVerification(format!("{} rows for {h} classes", self.rows.len())));
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if !is_algebraic_integer_repr(v) {
                    return Err(Error::LiftVerification(format!("entry ({i},{k}) = {v} not integral")));
                }
            }
        }
        let order = Cyc::from_int(self.order as i128);
        let bad = (0..h).into_par_iter().find_map_any(|i| {
            for j in i..h {
                let ip = self.inner_product(&self.rows[i], &self.rows[j]);
                let expect = if i == j { Cyc::one() } else { Cyc::zero() };
                if ip != expect {
                    return Some(format!("<χ{i}, χ{j}> = {ip}"));
                }
            }
            None
        });
        if let Some(msg) = bad {
            return Err(Error::LiftVerification(msg));
        }
        let bad = (0..h).into_par_iter().find_map_any(|k| {
            for l in k..h {
                let s: Cyc = self.rows.iter().map(|r| &r[k] * &r[l].conj()).sum();
                let expect = if k == l { order.scale(1, self.class_sizes[k] as i128) } else { Cyc::zero() };
                if s != expect {
                    return Some(format!("column sum ({k},{l}) = {s}"));
                }
            }
            None
        });
        match bad {
            Some(msg) => Err(Error::LiftVerification(msg)),
            None => Ok(()),
        }
    }

    /// Pointwise product of class functions.
    pub fn tensor(f: &[Cyc], g: &[Cyc]) -> ClassFunction {
        f.iter().zip(g).map(|(a, b)| a * b).collect()
    }

    pub fn sum_of(&self, members: &[usize]) -> ClassFunction {
        let mut out = vec![Cyc::zero(); self.num_classes()];
        for &i in members {
            for (o, v) in out.iter_mut().zip(&self.rows[i]) {
                *o = &*o + v;
            }
        }
        out
    }

    /// Index of the row equal to f, if any.
    pub fn find_row(&self, f: &[Cyc]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == f)
    }
}

/// The power basis of Z[ζ_n] is integral, so a reduced denominator of 1 is
/// exactly the algebraic-integer condition.
fn is_algebraic_integer_repr(v: &Cyc) -> bool {
    v.raw().2 == 1
}

struct ClassData<'a> {
    g: &'a FiniteGroup,
    members: Vec<Vec<u32>>,
    reps: Vec<u32>,
    f: Fp,
    memo: HashMap<usize, Mat>,
}

impl ClassData<'_> {
    /// M_j[l][k] = #{y ∈ C_j : y^{-1} x_k ∈ C_l}.
    fn class_matrix(&mut self, j: usize) -> &Mat {
        if !self.memo.contains_key(&j) {
            let h = self.reps.len();
            let cols: Vec<Vec<u64>> = self
                .reps
                .par_iter()
                .map(|&x| {
                    let mut col = vec![0u64; h];
                    for &y in &self.members[j] {
                        col[self.g.class_of(self.g.mul(self.g.inv(y), x))] += 1;
                    }
                    col
                })
                .collect();
            let mut m = Mat::zeros(h, h);
            for (k, col) in cols.iter().enumerate() {
                for (l, &v) in col.iter().enumerate() {
                    m.set(l, k, v % self.f.p);
                }
            }
            self.memo.insert(j, m);
        }
        &self.memo[&j]
    }
}

/// A subspace kept as a basis in reduced row echelon form.
struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_vectors(f: &Fp, vecs: Vec<Vec<u64>>, h: usize) -> Self {
        let mut basis = Mat::zeros(vecs.len(), h);
        for (r, v) in vecs.iter().enumerate() {
            basis.data[r * h..(r + 1) * h].copy_from_slice(v);
        }
        let pivots = rref(f, &mut basis);
        Subspace { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Splits into eigenspaces of m (which must leave the subspace stable).
    fn split(&self, f: &Fp, m: &Mat) -> Result<Vec<Subspace>> {
        let d = self.dim();
        let h = self.basis.cols;
        let images: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                let b = self.basis.row(i);
                (0..h)
                    .map(|l| {
                        let mut acc = 0u64;
                        for (k, &bk) in b.iter().enumerate() {
                            if bk != 0 {
                                acc = f.add(acc, f.mul(m.get(l, k), bk));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut r = Mat::zeros(d, d);
        for (i, img) in images.iter().enumerate() {
            for (t, &pc) in self.pivots.iter().enumerate() {
                r.set(t, i, img[pc]);
            }
        }
        let cp = char_poly(f, &r);
        let eigen = roots(f, &cp);
        if eigen.len() == 1 {
            return Ok(vec![Subspace { basis: self.basis.clone(), pivots: self.pivots.clone() }]);
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for lam in eigen {
            let mut a = r.clone();
            for i in 0..d {
                a.set(i, i, f.sub(a.get(i, i), lam));
            }
            let ys = nullspace(f, &a);
            total += ys.len();
            let vecs = ys
                .iter()
                .map(|y| {
                    let mut v = vec![0u64; h];
                    for (i, &yi) in y.iter().enumerate() {
                        if yi != 0 {
                            for (k, vk) in v.iter_mut().enumerate() {
                                *vk = f.add(*vk, f.mul(yi, self.basis.get(i, k)));
                            }
                        }
                    }
                    v
                })
                .collect();
            parts.push(Subspace::from_vectors(f, vecs, h));
        }
        if total != d {
            return Err(Error::LiftVerification(format!(
                "class matrix not diagonalisable modulo {} (eigenspaces {total} of {d})",
                f.p
            )));
        }
        Ok(parts)
    }
}

/// Computes the full irreducible character table of g.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let order = g.order() as u64;
    let exponent = g.exponent();
    let p = smallest_prime_above(order, exponent)
        .ok_or_else(|| Error::PrimeSelection(format!("|G| = {order}, exponent {exponent}")))?;
    character_table_mod(g, p)
}

/// Dixon–Schneider modulo a given prime p ≡ 1 (mod exponent), p > |G|.
pub fn character_table_mod(g: &FiniteGroup, p: u64) -> Result<CharacterTable> {
    let order = g.order() as u64;
    let exponent = g.exponent();
    if !(p - 1).is_multiple_of(exponent) || p <= order {
        return Err(Error::PrimeSelection(format!("{p} does not split the group")));
    }
    let f = Fp::new(p);
    let h = g.num_classes();
    let classes = g.classes();
    let mut members = vec![Vec::new(); h];
    for x in 0..g.order() as u32 {
        members[g.class_of(x)].push(x);
    }
    let reps: Vec<u32> = classes.iter().map(|c| c.representative).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();
    let mut data = ClassData { g, members, reps, f, memo: HashMap::new() };

    let mut todo = vec![Subspace::from_vectors(&f, (0..h).map(|i| unit(h, i)).collect(), h)];
    let mut done: Vec<Subspace> = Vec::new();
    let mut order_j: Vec<usize> = (1..h).collect();
    order_j.sort_by_key(|&j| (sizes[j], j));
    for j in order_j {
        if todo.is_empty() {
            break;
        }
        let m = data.class_matrix(j).clone();
        let mut next = Vec::new();
        for s in todo {
            for part in s.split(&f, &m)? {
                if part.dim() == 1 {
                    done.push(part);
                } else {
                    next.push(part);
                }
            }
        }
        todo = next;
    }
    if h == 1 {
        done = todo;
    } else if !todo.is_empty() {
        return Err(Error::LiftVerification("eigenspaces did not separate".into()));
    }

    let inverse_class = g.inverse_classes();
    let power_maps = g.power_maps();
    let zeta_e = f.root_of_unity(exponent);
    let ord_f = f.from_i128(order as i128);
    let mut rows = Vec::with_capacity(h);
    for s in &done {
        let v = s.basis.row(0);
        let scale = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        // χ(1)² = |G| / Σ ω_k ω_{k*} / |C_k|
        let mut denom = 0u64;
        for k in 0..h {
            let t = f.mul(omega[k], omega[inverse_class[k]]);
            denom = f.add(denom, f.mul(t, f.inv(sizes[k] % p)));
        }
        let d2 = f.mul(ord_f, f.inv(denom));
        let deg = (1..=isqrt(order))
            .find(|&d| (d * d) % p == d2 && order.is_multiple_of(d))
            .ok_or_else(|| Error::LiftVerification("no degree squares to the computed value".into()))?;
        let values: Vec<u64> = (0..h).map(|k| f.mul(f.mul(omega[k], deg % p), f.inv(sizes[k] % p))).collect();
        let mut row = Vec::with_capacity(h);
        for k in 0..h {
            let o = classes[k].order as u64;
            let zo = f.pow(zeta_e, exponent / o);
            let inv_o = f.inv(o % p);
            let mut mults = vec![0i128; o as usize];
            for (t, mt) in mults.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (jj, &cls) in power_maps[k].iter().enumerate() {
                    let w = f.pow(zo, (o - (jj as u64 * t as u64) % o) % o);
                    acc = f.add(acc, f.mul(values[cls], w));
                }
                let m = f.mul(acc, inv_o);
                if m > deg {
                    return Err(Error::LiftVerification(format!(
                        "eigenvalue multiplicity {m} exceeds degree {deg} at class {k}"
                    )));
                }
                *mt = m as i128;
            }
            if mults.iter().sum::<i128>() != deg as i128 {
                return Err(Error::LiftVerification(format!("multiplicities at class {k} do not sum to {deg}")));
            }
            row.push(Cyc::from_zeta_coeffs(o as u32, &mults));
        }
        rows.push(row);
    }
    rows.sort_by(|a, b| row_key(a).partial_cmp(&row_key(b)).unwrap());
    let table = CharacterTable {
        order,
        class_sizes: sizes,
        class_orders: classes.iter().map(|c| c.order).collect(),
        inverse_class,
        exponent,
        prime: p,
        rows,
    };
    table.verify()?;
    Ok(table)
}

fn row_key(r: &[Cyc]) -> Vec<(i64, i64)> {
    r.iter()
        .map(|v| {
            let (re, im) = v.to_complex();
            ((re * 1e6).round() as i64, (im * 1e6).round() as i64)
        })
        .collect()
}

fn unit(h: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; h];
    v[i] = 1;
    v
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Serialises rows of cyclotomic values as strings together with a
/// structured power-basis form.
mod cyc_rows {
    use super::Cyc;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        text: String,
        conductor: u32,
        /// Coefficients of ζ^k, k = 0 .. n−1 (not reduced).
        coeffs: Vec<String>,
        den: String,
    }

    fn encode(c: &Cyc) -> Entry {
        let (n, coeffs, den) = c.raw();
        Entry {
            text: c.to_text(),
            conductor: n,
            coeffs: coeffs.iter().map(|x| x.to_string()).collect(),
            den: den.to_string(),
        }
    }

    fn decode(e: &Entry) -> Result<Cyc, String> {
        let coeffs: Vec<i128> =
            e.coeffs.iter().map(|s| s.parse::<i128>().map_err(|x| x.to_string())).collect::<Result<_, _>>()?;
        let den: i128 = e.den.parse().map_err(|x: std::num::ParseIntError| x.to_string())?;
        Ok(Cyc::from_zeta_coeffs(e.conductor, &coeffs).scale(1, den))
    }

    pub fn serialize<S: Serializer>(rows: &[Vec<Cyc>], s: S) -> Result<S::Ok, S::Error> {
        let enc: Vec<Vec<Entry>> = rows.iter().map(|r| r.iter().map(encode).collect()).collect();
        enc.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Cyc>>, D::Error> {
        let enc: Vec<Vec<Entry>> = Vec::deserialize(d)?;
        enc.iter().map(|r| r.iter().map(|e| decode(e).map_err(serde::de::Error::custom)).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::group::tables_from_permutations;
    use super::super::roots::{GroupName, ReflectionGroup};
    use super::*;

    fn sym(n: usize) -> FiniteGroup {
        let gens: Vec<Vec<u16>> = (0..n - 1)
            .map(|i| {
                let mut p: Vec<u16> = (0..n as u16).collect();
                p.swap(i, i + 1);
                p
            })
            .collect();
        let (_, l, r) = tables_from_permutations(&gens);
        FiniteGroup::new(l, r, (0..n - 1).map(|i| vec![i as u8]).collect())
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..=5 {
            let g = sym(n);
            let t = character_table(&g).unwrap();
            assert_eq!(t.rows.len(), g.num_classes());
            let s: u64 = (0..t.rows.len()).map(|i| t.degree(i).pow(2)).sum();
            assert_eq!(s, g.order() as u64);
            assert!(t.rows.iter().flatten().all(|v| v.as_integer().is_some()));
        }
    }

    #[test]
    fn cyclic_group_values() {
        // Z/5 generated by a 5-cycle: all values are fifth roots of unity.
        let gens = vec![vec![1u16, 2, 3, 4, 0]];
        let (_, l, r) = tables_from_permutations(&gens);
        let g = FiniteGroup::new(l, r, vec![vec![0, 0, 0, 0]]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(t.rows.iter().all(|r| r.iter().all(|v| v.pow(5).is_one())));
    }

    #[test]
    fn g2_and_dihedral() {
        let g2 = ReflectionGroup::build(GroupName::G2).unwrap();
        let t = character_table(&g2.group).unwrap();
        let mut degs: Vec<u64> = (0..t.rows.len()).map(|i| t.degree(i)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 1, 2, 2]);
        let i5 = ReflectionGroup::build(GroupName::I2(5)).unwrap();
        let t = character_table(&i5.group).unwrap();
        assert_eq!(t.rows.len(), 4);
        // 2cos(2π/5) occurs among the values.
        let c = Cyc::two_cos(5, 1);
        assert!(t.rows.iter().flatten().any(|v| *v == c));
    }

    #[test]
    fn json_round_trip() {
        let h3 = ReflectionGroup::build(GroupName::H3).unwrap();
        let t = character_table(&h3.group).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: CharacterTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back.rows, t.rows);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
