//! One-body maps on the 10-orbital space and their lifts to determinant
//! expansions.
//!
//! A one-body operator `B = sum_i b(i)` acts on a Slater determinant by
//! replacing one orbital at a time; `B^2` acts through single replacements
//! with `b^2` plus twice the double replacements over orbital pairs. Both
//! lifts re-normal-order every image determinant and accumulate the
//! permutation sign, so results stay on canonical representatives.

use crate::determinant::{normal_order, DeterminantExpansion, SlaterDeterminant, SpinOrbital};
use crate::rational::{ratio, GaussianRational, Rational};

/// A linear map on the ten-dimensional spin-orbital space, stored as sparse
/// columns: `cols[o]` lists `(target, coeff)` pairs of `b |o>`.
#[derive(Clone, Debug, Default)]
pub struct OrbitalMap {
    cols: Vec<Vec<(u8, GaussianRational)>>,
}

impl OrbitalMap {
    pub fn zero() -> Self {
        Self {
            cols: vec![Vec::new(); 10],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for o in 0..10u8 {
            m.cols[o as usize].push((o, GaussianRational::one()));
        }
        m
    }

    /// Diagonal map with the given entries.
    pub fn diagonal(entries: &[GaussianRational; 10]) -> Self {
        let mut m = Self::zero();
        for o in 0..10usize {
            if !entries[o].is_zero() {
                m.cols[o].push((o as u8, entries[o].clone()));
            }
        }
        m
    }

    pub fn set(&mut self, target: u8, source: u8, coeff: GaussianRational) {
        if !coeff.is_zero() {
            self.cols[source as usize].push((target, coeff));
        }
    }

    pub fn column(&self, source: u8) -> &[(u8, GaussianRational)] {
        &self.cols[source as usize]
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for src in 0..10u8 {
            let mut acc: Vec<GaussianRational> = vec![GaussianRational::zero(); 10];
            for (mid, c1) in other.column(src) {
                for (dst, c2) in self.column(*mid) {
                    acc[*dst as usize] += c1 * c2;
                }
            }
            for (dst, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    out.cols[src as usize].push((dst as u8, c));
                }
            }
        }
        out
    }
}

/// Cyclic successor of a p axis (axes 1, 2, 3).
fn next_axis(j: u8) -> u8 {
    j % 3 + 1
}

fn prev_axis(j: u8) -> u8 {
    (j + 1) % 3 + 1
}

/// Spatial index (0..4) of the p orbital along the given axis:
/// axis 1 -> 2p1 (spatial 3), axis 2 -> 2p2 (spatial 4), axis 3 -> 2p3
/// (spatial 2).
fn p_spatial(axis: u8) -> u8 {
    match axis {
        1 => 3,
        2 => 4,
        3 => 2,
        _ => unreachable!(),
    }
}

/// Axis of a p spatial index, if any.
fn p_axis(spatial: u8) -> Option<u8> {
    match spatial {
        2 => Some(3),
        3 => Some(1),
        4 => Some(2),
        _ => None,
    }
}

/// The angular momentum component `L_axis` as an orbital map: zero on s
/// orbitals, and on the real p orbitals
/// `L_{j+1} p_j = -i p_{j-1}`, `L_{j-1} p_j = +i p_{j+1}` (axes mod 3),
/// acting identically on both spins.
pub fn angular_momentum(axis: u8) -> OrbitalMap {
    assert!((1..=3).contains(&axis));
    let mut m = OrbitalMap::zero();
    for o in SpinOrbital::all() {
        let Some(j) = p_axis(o.spatial()) else {
            continue;
        };
        if axis == j {
            continue;
        }
        let spin_bit = o.0 % 2;
        if axis == next_axis(j) {
            let target = 2 * p_spatial(prev_axis(j)) + spin_bit;
            m.set(target, o.0, GaussianRational::imaginary(ratio(-1, 1)));
        } else {
            let target = 2 * p_spatial(next_axis(j)) + spin_bit;
            m.set(target, o.0, GaussianRational::i());
        }
    }
    m
}

/// The spin component `S_axis` as an orbital map: one half times the Pauli
/// matrix acting on the spin index, identical on every spatial orbital.
pub fn spin(axis: u8) -> OrbitalMap {
    assert!((1..=3).contains(&axis));
    let mut m = OrbitalMap::zero();
    let half = ratio(1, 2);
    for sp in 0..5u8 {
        let up = 2 * sp;
        let down = up + 1;
        match axis {
            1 => {
                m.set(down, up, GaussianRational::from_rational(half.clone()));
                m.set(up, down, GaussianRational::from_rational(half.clone()));
            }
            2 => {
                m.set(down, up, GaussianRational::imaginary(half.clone()));
                m.set(up, down, GaussianRational::imaginary(-half.clone()));
            }
            3 => {
                m.set(up, up, GaussianRational::from_rational(half.clone()));
                m.set(down, down, GaussianRational::from_rational(-half.clone()));
            }
            _ => unreachable!(),
        }
    }
    m
}

/// Replaces the orbitals at the given occupied slots and re-normal-orders.
/// Slot positions are resolved against the original determinant before any
/// substitution, so simultaneous swaps like `(a -> b, b -> a)` are exact.
fn replace(
    d: SlaterDeterminant,
    swaps: &[(u8, u8)],
) -> Option<(SlaterDeterminant, i8)> {
    let mut orbs: Vec<u8> = d.occupied().map(|o| o.0).collect();
    let slots: Vec<usize> = swaps
        .iter()
        .map(|&(from, _)| orbs.iter().position(|&o| o == from))
        .collect::<Option<_>>()?;
    for (&slot, &(_, to)) in slots.iter().zip(swaps) {
        orbs[slot] = to;
    }
    normal_order(&orbs).map(|(mask, sign)| (SlaterDeterminant(mask), sign))
}

/// Lift of `B = sum_i b(i)` to determinant expansions: replaces one occupied
/// orbital at a time by its image under `b`.
pub fn apply_one_body(b: &OrbitalMap, x: &DeterminantExpansion) -> DeterminantExpansion {
    let mut out = DeterminantExpansion::zero();
    for (d, c) in x.iter() {
        for o in d.occupied() {
            for (target, bc) in b.column(o.0) {
                if let Some((image, sign)) = replace(*d, &[(o.0, *target)]) {
                    let mut coeff = c * bc;
                    if sign < 0 {
                        coeff = -coeff;
                    }
                    out.add(image, coeff);
                }
            }
        }
    }
    out
}

/// Lift of `B^2`: single replacements by `b^2` plus twice the double
/// replacements over ordered pairs of occupied orbitals.
pub fn apply_two_body_product(b: &OrbitalMap, x: &DeterminantExpansion) -> DeterminantExpansion {
    let b2 = b.compose(b);
    let mut out = apply_one_body(&b2, x);
    let two = GaussianRational::from_int(2);
    for (d, c) in x.iter() {
        let occ: Vec<u8> = d.occupied().map(|o| o.0).collect();
        for i in 0..occ.len() {
            for j in i + 1..occ.len() {
                for (p, cp) in b.column(occ[i]) {
                    for (q, cq) in b.column(occ[j]) {
                        if let Some((image, sign)) = replace(*d, &[(occ[i], *p), (occ[j], *q)]) {
                            let mut coeff = &(c * cp) * cq;
                            coeff = coeff * two.clone();
                            if sign < 0 {
                                coeff = -coeff;
                            }
                            out.add(image, coeff);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Total `L^2 = L_1^2 + L_2^2 + L_3^2` applied exactly.
pub fn apply_l2(x: &DeterminantExpansion) -> DeterminantExpansion {
    let mut out = DeterminantExpansion::zero();
    for axis in 1..=3u8 {
        out.add_expansion(&apply_two_body_product(&angular_momentum(axis), x));
    }
    out
}

/// Total `S^2`.
pub fn apply_s2(x: &DeterminantExpansion) -> DeterminantExpansion {
    let mut out = DeterminantExpansion::zero();
    for axis in 1..=3u8 {
        out.add_expansion(&apply_two_body_product(&spin(axis), x));
    }
    out
}

pub fn apply_l3(x: &DeterminantExpansion) -> DeterminantExpansion {
    apply_one_body(&angular_momentum(3), x)
}

pub fn apply_s3(x: &DeterminantExpansion) -> DeterminantExpansion {
    apply_one_body(&spin(3), x)
}

/// Parity operator: each determinant is an eigenvector with eigenvalue
/// `(-1)^(number of occupied p orbitals)`.
pub fn apply_parity(x: &DeterminantExpansion) -> DeterminantExpansion {
    let mut out = DeterminantExpansion::zero();
    for (d, c) in x.iter() {
        let coeff = if d.parity() < 0 { -c.clone() } else { c.clone() };
        out.add(*d, coeff);
    }
    out
}

/// Scales an expansion by a rational.
pub fn scaled(x: &DeterminantExpansion, k: Rational) -> DeterminantExpansion {
    x.scale(&GaussianRational::from_rational(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn det(orbitals: &[u8]) -> SlaterDeterminant {
        SlaterDeterminant::from_orbitals(orbitals)
    }

    fn single(orbitals: &[u8]) -> DeterminantExpansion {
        DeterminantExpansion::single(det(orbitals))
    }

    #[test]
    fn identity_counts_electrons() {
        let x = single(&[0, 1, 2]);
        let y = apply_one_body(&OrbitalMap::identity(), &x);
        assert_eq!(y, scaled(&x, int(3)));
        assert!(apply_one_body(&OrbitalMap::zero(), &x).is_zero());
    }

    #[test]
    fn angular_action_on_p_orbitals() {
        // L2 p1 = -i p3 and L3 p1 = +i p2, per the ladder identities.
        let p1_up = single(&[6]);
        let l2 = apply_one_body(&angular_momentum(2), &p1_up);
        assert_eq!(l2.coeff(det(&[4])), GaussianRational::imaginary(int(-1)));
        let l3 = apply_one_body(&angular_momentum(3), &p1_up);
        assert_eq!(l3.coeff(det(&[8])), GaussianRational::i());
        // s orbitals are annihilated by every component.
        for axis in 1..=3 {
            assert!(apply_one_body(&angular_momentum(axis), &single(&[2])).is_zero());
        }
    }

    #[test]
    fn s3_and_s2_kill_closed_pairs() {
        // |psi-up psi-down> of any spatial orbital has S3 = S^2 = 0.
        for pair in [[0u8, 1], [2, 3], [4, 5], [6, 7], [8, 9]] {
            let x = single(&pair);
            assert!(apply_s3(&x).is_zero());
            assert!(apply_s2(&x).is_zero());
        }
    }

    #[test]
    fn s2_on_parallel_spins() {
        // Two up spins form the M=1 triplet component: S^2 = 2.
        let x = single(&[0, 2]);
        assert_eq!(apply_s2(&x), scaled(&x, int(2)));
    }

    #[test]
    fn l2_on_two_up_p_orbitals() {
        // |p1 p2> (both up) carries L = 1: the cross term contributes -2
        // after re-normal-ordering, so L^2 = 4 - 2 = 2.
        let x = single(&[6, 8]);
        assert_eq!(apply_l2(&x), scaled(&x, int(2)));
    }

    #[test]
    fn two_body_product_equals_double_application() {
        let vectors = [
            single(&[0, 2, 6]),
            single(&[2, 5, 6, 9]),
            single(&[0, 1, 4, 7, 8]),
        ];
        for axis in 1..=3u8 {
            for b in [angular_momentum(axis), spin(axis)] {
                for x in &vectors {
                    let twice = apply_one_body(&b, &apply_one_body(&b, x));
                    assert_eq!(apply_two_body_product(&b, x), twice);
                }
            }
        }
    }

    #[test]
    fn parity_counts_p_orbitals() {
        let x = single(&[0, 1, 4]);
        assert_eq!(apply_parity(&x), scaled(&x, int(-1)));
        let y = single(&[0, 1, 4, 7]);
        assert_eq!(apply_parity(&y), y);
    }
}
