//! Pin covers of reflection groups, realised inside the Clifford algebra of
//! V with e_i² = -1, and their genuine characters.

use serde::{Deserialize, Serialize};

use super::cyclo::Cyc;
use super::dixon::{character_table, CharacterTable, ClassFunction};
use super::group::FiniteGroup;
use super::labels::{eigenvalue_multiplicities, label_characters, CharLabel, LabelledTable};
use super::roots::{GroupName, ReflectionGroup};
use crate::error::{Error, Result};

/// Sign and blade of e_a · e_b for blades given as bitmasks.
fn blade_product(a: usize, b: usize) -> (bool, usize) {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    // e_i e_i = -1 for every shared generator
    swaps += (a & b).count_ones();
    (swaps % 2 == 1, a ^ b)
}

/// Element of the Clifford algebra as coefficients over the 2^r blades.
pub type Multivector = Vec<Cyc>;

pub fn clifford_mul(x: &[Cyc], y: &[Cyc]) -> Multivector {
    let mut out = vec![Cyc::zero(); x.len()];
    for (a, ca) in x.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in y.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let (neg, c) = blade_product(a, b);
            let t = ca * cb;
            out[c] = if neg { &out[c] - &t } else { &out[c] + &t };
        }
    }
    out
}

fn vector(u: &[Cyc]) -> Multivector {
    let mut v = vec![Cyc::zero(); 1 << u.len()];
    for (i, c) in u.iter().enumerate() {
        v[1 << i] = c.clone();
    }
    v
}

fn negated(x: &[Cyc]) -> Multivector {
    x.iter().map(|c| -c).collect()
}

/// The Pin cover W̃. Element 2w + s is z^s · L_w, where L_w is the Clifford
/// lift of w built from unit simple roots along a shortest word.
pub struct PinCover {
    pub base: ReflectionGroup,
    pub group: FiniteGroup,
    pub lifts: Vec<Multivector>,
    /// Cover element f_β for each positive root β.
    pub root_lifts: Vec<Option<u32>>,
}

pub const Z: u32 = 1;

impl PinCover {
    pub fn build(base: ReflectionGroup) -> Result<Self> {
        let r = base.rank();
        if r > 4 {
            return Err(Error::UnsupportedGroup(format!("{}: Pin cover limited to rank 4", base.name())));
        }
        if base.spec.ortho.is_none() {
            return Err(Error::UnsupportedGroup(format!("{}: no orthonormal realisation", base.name())));
        }
        let unit = |k: usize| -> Multivector {
            let v = base.ortho_coords(k).expect("orthonormal coordinates");
            let (a, b) = base.norms[k].as_rational().expect("rational root norm");
            // 1/sqrt(a/b) = sqrt(a b) / a
            let inv = Cyc::sqrt_int((a * b) as u64).scale(1, a);
            vector(&v.iter().map(|c| c * &inv).collect::<Vec<_>>())
        };
        let w = &base.group;
        let simple: Vec<Multivector> = (0..r).map(unit).collect();
        let mut lifts: Vec<Multivector> = vec![Vec::new(); w.order()];
        let mut one = vec![Cyc::zero(); 1 << r];
        one[0] = Cyc::one();
        lifts[0] = one;
        for x in w.bfs_order().into_iter().skip(1) {
            let (p, i) = w.parent(x).expect("non-identity");
            lifts[x as usize] = clifford_mul(&simple[i], &lifts[p as usize]);
        }
        let sign = |prod: &Multivector, target: u32| -> Result<u32> {
            let t = &lifts[target as usize];
            if prod == t {
                Ok(0)
            } else if *prod == negated(t) {
                Ok(1)
            } else {
                Err(Error::Mismatch(format!("Clifford lift of element {target} is not ±L_w")))
            }
        };
        let n = w.order() as u32;
        let mut left = vec![vec![0u32; 2 * n as usize]; r];
        let mut right = vec![vec![0u32; 2 * n as usize]; r];
        for i in 0..r {
            for x in 0..n {
                let lx = &lifts[x as usize];
                let y = w.left_gen(i, x);
                let c = sign(&clifford_mul(&simple[i], lx), y)?;
                let y2 = w.right_gen(i, x);
                let c2 = sign(&clifford_mul(lx, &simple[i]), y2)?;
                for s in 0..2 {
                    left[i][(2 * x + s) as usize] = 2 * y + (s ^ c);
                    right[i][(2 * x + s) as usize] = 2 * y2 + (s ^ c2);
                }
            }
        }
        let group = FiniteGroup::new(left, right, (0..r).map(|i| vec![i as u8; 3]).collect());
        let mut root_lifts = vec![None; base.roots.len()];
        for (k, &pos) in base.positive.iter().enumerate() {
            if pos {
                let s = base.reflection[k];
                root_lifts[k] = Some(2 * s + sign(&unit(k), s)?);
            }
        }
        Ok(PinCover { base, group, lifts, root_lifts })
    }

    pub fn project(&self, x: u32) -> u32 {
        x / 2
    }

    /// Checks z² = 1, f_i² = z and (f_i f_j)^m = z on the generators.
    pub fn check_presentation(&self) -> Result<()> {
        let g = &self.group;
        let r = self.base.rank();
        let fail = |what: String| Err(Error::Mismatch(format!("{}: {what}", self.base.name())));
        if g.mul(Z, Z) != 0 || g.order() != 2 * self.base.group.order() {
            return fail("z² ≠ 1".into());
        }
        for i in 0..r {
            let f = g.generator(i);
            if g.mul(f, f) != Z {
                return fail(format!("f_{i}² ≠ z"));
            }
            for j in 0..r {
                if i != j {
                    let m = self.base.spec.coxeter[i][j] as u64;
                    let fij = g.mul(f, g.generator(j));
                    if g.pow(fij, m) != Z {
                        return fail(format!("(f_{i} f_{j})^{m} ≠ z"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Cover class of (w, 0) for each class of W.
    pub fn base_class_lifts(&self) -> Vec<usize> {
        self.base.group.classes().iter().map(|c| self.group.class_of(2 * c.representative)).collect()
    }

    /// Characters of the spinor modules on the cover classes: one for even
    /// rank, the pair S+ and S- for odd rank.
    pub fn spinor_characters(&self) -> Vec<ClassFunction> {
        let r = self.base.rank();
        let top = (1usize << r) - 1;
        let d = Cyc::from_int(1i128 << (r / 2));
        let value = |x: u32, kappa: Option<&Cyc>| -> Cyc {
            let l = &self.lifts[self.project(x) as usize];
            let mut v = l[0].clone();
            if let Some(k) = kappa {
                v = &v + &(k * &l[top]);
            }
            let v = &v * &d;
            if x % 2 == 1 {
                -&v
            } else {
                v
            }
        };
        let reps: Vec<u32> = self.group.classes().iter().map(|c| c.representative).collect();
        if r.is_multiple_of(2) {
            return vec![reps.iter().map(|&x| value(x, None)).collect()];
        }
        // e_top is central; it acts on S± by ±κ with κ² = e_top².
        let mut e_top = vec![Cyc::zero(); 1 << r];
        e_top[top] = Cyc::one();
        let sq = clifford_mul(&e_top, &e_top)[0].clone();
        let kappa = if sq.is_one() { Cyc::one() } else { Cyc::i() };
        let minus = -&kappa;
        vec![
            reps.iter().map(|&x| value(x, Some(&kappa))).collect(),
            reps.iter().map(|&x| value(x, Some(&minus))).collect(),
        ]
    }

    /// Spinor characters from an explicit matrix model of the Clifford
    /// algebra (Jordan-Wigner gamma matrices), evaluated by matrix traces.
    pub fn spinor_characters_by_matrices(&self) -> Vec<ClassFunction> {
        let r = self.base.rank();
        let models: Vec<Vec<CMatrix>> = if r.is_multiple_of(2) {
            vec![clifford_generators(r, 1)]
        } else {
            vec![clifford_generators(r, 1), clifford_generators(r, -1)]
        };
        models
            .iter()
            .map(|gens| {
                let dim = gens[0].len();
                let blades: Vec<CMatrix> = (0..1usize << r)
                    .map(|a| (0..r).filter(|i| a >> i & 1 == 1).fold(identity(dim), |m, i| mat_mul(&m, &gens[i])))
                    .collect();
                self.group
                    .classes()
                    .iter()
                    .map(|c| {
                        let l = &self.lifts[self.project(c.representative) as usize];
                        let mut tr = Cyc::zero();
                        for (a, coeff) in l.iter().enumerate() {
                            if !coeff.is_zero() {
                                let t: Cyc = (0..dim).map(|k| blades[a][k][k].clone()).sum();
                                tr = &tr + &(coeff * &t);
                            }
                        }
                        if c.representative % 2 == 1 {
                            -&tr
                        } else {
                            tr
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Sign character of W pulled back to the cover.
    pub fn sign_character(&self) -> ClassFunction {
        self.group
            .classes()
            .iter()
            .map(|c| {
                let len = self.base.group.word(self.project(c.representative)).len();
                Cyc::from_int(if len.is_multiple_of(2) { 1 } else { -1 })
            })
            .collect()
    }

    /// 𝒮: the spinor module for even rank, S+ ⊕ S- for odd rank.
    pub fn full_spinor(&self) -> ClassFunction {
        let s = self.spinor_characters();
        (0..self.group.num_classes()).map(|k| s.iter().map(|f| f[k].clone()).sum()).collect()
    }

    /// Ω as a vector of class coefficients: entry k is the sum of the
    /// weights of all terms z f_α f_β lying in cover class k. With
    /// `weighted` each term carries |α||β|.
    pub fn omega_class_weights(&self, weighted: bool) -> Vec<Cyc> {
        let b = &self.base;
        let g = &self.group;
        let mut out = vec![Cyc::zero(); g.num_classes()];
        let pos: Vec<usize> = (0..b.roots.len()).filter(|&k| b.positive[k]).collect();
        for &a in &pos {
            let sa = b.reflection[a];
            let fa = self.root_lifts[a].expect("positive root");
            for &c in &pos {
                if b.positive[b.act(sa, c)] {
                    continue;
                }
                let fc = self.root_lifts[c].expect("positive root");
                let k = g.class_of(g.mul(fa, fc) ^ Z);
                let w = if weighted {
                    let (p, q) = (&b.norms[a] * &b.norms[c]).as_rational().expect("rational norms");
                    Cyc::sqrt_int((p * q) as u64).scale(1, q)
                } else {
                    Cyc::one()
                };
                out[k] = &out[k] + &w;
            }
        }
        out
    }
}

type CMatrix = Vec<Vec<Cyc>>;

fn identity(n: usize) -> CMatrix {
    (0..n).map(|i| (0..n).map(|j| Cyc::from_int((i == j) as i128)).collect()).collect()
}

fn mat_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (n, m) = (a.len(), b.len());
    (0..n * m).map(|i| (0..n * m).map(|j| &a[i / m][j / m] * &b[i % m][j % m]).collect()).collect()
}

fn scale_matrix(a: &CMatrix, c: &Cyc) -> CMatrix {
    a.iter().map(|row| row.iter().map(|x| x * c).collect()).collect()
}

/// Matrices E_1..E_r with E_i² = -1 and E_i E_j = -E_j E_i, of size
/// 2^⌊r/2⌋. For odd r, `chirality` (±1) selects which of the two
/// inequivalent modules is realised.
fn clifford_generators(r: usize, chirality: i128) -> Vec<CMatrix> {
    let z = |a: i128, b: i128| Cyc::from_int(a) + Cyc::i().scale(b, 1);
    let px = vec![vec![z(0, 0), z(1, 0)], vec![z(1, 0), z(0, 0)]];
    let py = vec![vec![z(0, 0), z(0, -1)], vec![z(0, 1), z(0, 0)]];
    let pz = vec![vec![z(1, 0), z(0, 0)], vec![z(0, 0), z(-1, 0)]];
    let m = r / 2;
    let mut gammas = Vec::new();
    for j in 0..m {
        for p in [&px, &py] {
            let mut g = vec![vec![Cyc::one()]];
            for k in 0..m {
                let f = match k.cmp(&j) {
                    std::cmp::Ordering::Less => pz.clone(),
                    std::cmp::Ordering::Equal => p.clone(),
                    std::cmp::Ordering::Greater => identity(2),
                };
                g = kron(&g, &f);
            }
            gammas.push(g);
        }
    }
    if r % 2 == 1 {
        // (-i)^m Γ_1 ⋯ Γ_2m squares to 1 and anticommutes with every Γ_j.
        let prod = gammas.iter().fold(identity(1 << m), |acc, g| mat_mul(&acc, g));
        let c = Cyc::i().pow(3 * m as u32).scale(chirality, 1);
        gammas.push(scale_matrix(&prod, &c));
    }
    gammas.iter().map(|g| scale_matrix(g, &Cyc::i())).collect()
}

/// ∧V as a class function on W: det(1 + w) = ∏ (1 + ζ^t)^{m_t}.
pub fn exterior_algebra_character(g: &ReflectionGroup, t: &CharacterTable) -> Result<ClassFunction> {
    let mult = eigenvalue_multiplicities(g, t)?;
    Ok(g.group
        .classes()
        .iter()
        .zip(&mult)
        .map(|(c, m)| {
            let mut v = Cyc::one();
            for (tt, &e) in m.iter().enumerate() {
                let f = &Cyc::one() + &Cyc::zeta(c.order, tt as i64);
                for _ in 0..e {
                    v = &v * &f;
                }
            }
            v
        })
        .collect())
}

/// Genuine irreducible character of the cover with its Ω scalars.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenuineCharacter {
    pub index: usize,
    pub dim: u64,
    pub omega: f64,
    pub omega_weighted: f64,
    pub omega_exact: String,
    pub omega_weighted_exact: String,
    /// Multiplicity of each W-irreducible (in labelled table order) in σ̃ ⊗ 𝒮.
    pub spinor_tensor: Vec<u64>,
    pub is_spinor: bool,
}

/// Full genuine-character analysis for a rank ≤ 4 reflection group.
pub struct PinAnalysis {
    pub cover: PinCover,
    pub cover_table: CharacterTable,
    pub base_table: LabelledTable,
    pub genuine: Vec<GenuineCharacter>,
    /// dim ∧V multiplicity a with 𝒮 ⊗ 𝒮 = (∧V)^a.
    pub exterior_power: u64,
}

pub fn analyze(name: GroupName, allow_large: bool) -> Result<PinAnalysis> {
    if name == GroupName::H4 && !allow_large {
        return Err(Error::GroupTooLarge { order: 2 * name.order(), cap: 2 * GroupName::F4.order() });
    }
    let base = ReflectionGroup::build(name)?;
    let base_table = label_characters(&base, character_table(&base.group)?)?;
    let cover = PinCover::build(base)?;
    cover.check_presentation()?;
    let cover_table = character_table(&cover.group)?;
    let z_class = cover.group.class_of(Z);
    let lifts = cover.base_class_lifts();
    let spinor = cover.full_spinor();
    let spinors = cover.spinor_characters();

    // 𝒮 ⊗ 𝒮 against ∧V
    let ss: ClassFunction = lifts.iter().map(|&k| &spinor[k] * &spinor[k]).collect();
    let ext = exterior_algebra_character(&cover.base, &base_table.table)?;
    let a = ss[0].as_integer().unwrap_or(0) / ext[0].as_integer().unwrap_or(1);
    let scaled: ClassFunction = ext.iter().map(|v| v.scale(a, 1)).collect();
    if scaled != ss {
        return Err(Error::Mismatch(format!("{name}: 𝒮⊗𝒮 is not a multiple of ∧V")));
    }

    let omega = cover.omega_class_weights(false);
    let omega_w = cover.omega_class_weights(true);
    let scalar = |row: &[Cyc], weights: &[Cyc]| -> Cyc {
        let s: Cyc = row.iter().zip(weights).map(|(v, w)| v * w).sum();
        s.scale(1, row[0].as_integer().expect("integral degree"))
    };
    let mut genuine = Vec::new();
    for (i, row) in cover_table.rows.iter().enumerate() {
        if row[z_class] != -&row[0] {
            continue;
        }
        let om = scalar(row, &omega);
        let omw = scalar(row, &omega_w);
        let prod: ClassFunction = lifts.iter().map(|&k| &row[k] * &spinor[k]).collect();
        genuine.push(GenuineCharacter {
            index: i,
            dim: cover_table.degree(i),
            omega: om.re_f64(),
            omega_weighted: omw.re_f64(),
            omega_exact: om.to_text(),
            omega_weighted_exact: omw.to_text(),
            spinor_tensor: base_table.table.decompose(&prod)?,
            is_spinor: spinors.iter().any(|s| s == row),
        });
    }
    Ok(PinAnalysis { cover, cover_table, base_table, genuine, exterior_power: a as u64 })
}

impl PinAnalysis {
    /// Genuine characters whose Ω scalar is minimal.
    pub fn min_omega(&self, weighted: bool) -> Vec<usize> {
        let key = |g: &GenuineCharacter| if weighted { g.omega_weighted } else { g.omega };
        let m = self.genuine.iter().map(key).fold(f64::INFINITY, f64::min);
        (0..self.genuine.len()).filter(|&i| (key(&self.genuine[i]) - m).abs() < 1e-9).collect()
    }

    /// Σ σ̃ ⊗ 𝒮 over the given genuine characters, as W multiplicities
    /// keyed by label.
    pub fn spinor_tensor_sum(&self, members: &[usize]) -> Vec<(CharLabel, u64)> {
        let lt = &self.base_table;
        lt.sorted_rows()
            .into_iter()
            .map(|row| (lt.labels[row], members.iter().map(|&g| self.genuine[g].spinor_tensor[row]).sum()))
            .collect()
    }
}
