//! Brute-force oracles shared by the integration tests. Each one is written
//! independently of the engine's algorithm for the same quantity.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use saxl_core::orbit::OrbitType;
use saxl_core::partition::{dominance, Partition};
use saxl_core::symmetric::{centralizer_order, mn_value};

/// Number of semistandard tableaux of `shape` with `content`, by filling
/// cells row by row and checking row and column conditions directly.
pub fn kostka_brute(shape: &Partition, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut remaining: Vec<u32> = content.parts().to_vec();
    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, remaining: &mut Vec<u32>) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 1..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            remaining[v as usize - 1] -= 1;
            total += go(i + 1, cells, grid, remaining);
            remaining[v as usize - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut remaining)
}

/// c^γ_{αβ} as ⟨Ind(χ^α × χ^β), χ^γ⟩, summing over class pairs with
/// Murnaghan-Nakayama values.
pub fn lr_by_induction(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() {
        return 0;
    }
    let mut num = BigInt::zero();
    let mut den = BigInt::from(1);
    for mu in Partition::all(alpha.size()) {
        for nu in Partition::all(beta.size()) {
            let joined = Partition::from_unsorted(mu.parts().iter().chain(nu.parts()).copied());
            let v = mn_value(alpha, &mu).unwrap() * mn_value(beta, &nu).unwrap() * mn_value(gamma, &joined).unwrap();
            if v == 0 {
                continue;
            }
            let z: BigUint = centralizer_order(&mu) * centralizer_order(&nu);
            let z = BigInt::from(z);
            // num/den += v/z
            num = num * &z + BigInt::from(v) * &den;
            den *= z;
        }
    }
    assert!((&num % &den).is_zero(), "non-integral induced multiplicity");
    (num / den).to_u64().expect("small")
}

/// Largest admissible partition dominated by `lambda`, found by scanning
/// every partition of the same size. Panics if the maximum is not unique.
pub fn collapse_brute(lambda: &Partition, ty: OrbitType) -> Partition {
    let below: Vec<Partition> = Partition::all(lambda.size())
        .into_iter()
        .filter(|p| ty.admits(p) && dominance(p, lambda).unwrap().is_leq())
        .collect();
    let maxima: Vec<&Partition> =
        below.iter().filter(|p| below.iter().all(|q| q == *p || !dominance(q, p).unwrap().is_geq())).collect();
    assert_eq!(maxima.len(), 1, "collapse of {lambda} not unique");
    maxima[0].clone()
}

/// Partitions of `n` with parts of the right parity for `ty`.
pub fn parity_ok(ty: OrbitType, n: usize) -> bool {
    match ty {
        OrbitType::A => true,
        OrbitType::B => n % 2 == 1,
        OrbitType::C | OrbitType::D => n.is_multiple_of(2),
    }
}
