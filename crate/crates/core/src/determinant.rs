//! Slater determinants over the ten n<=2 hydrogenic spin-orbitals and the
//! exact second-quantized algebra on them.
//!
//! Orbital indexing follows the canonical order
//! `1s↑ 1s↓ 2s↑ 2s↓ 2p3↑ 2p3↓ 2p1↑ 2p1↓ 2p2↑ 2p2↓` (indices 0..9), i.e. the
//! spatial labels 1..5 are 1s, 2s, 2p3, 2p1, 2p2 with spin-up on even
//! indices. A determinant is stored as a 10-bit occupancy set; the stored
//! object is always the normal-ordered `|eta_{i1}..eta_{iN}>` with
//! `i1 < .. < iN`, which pins every sign.

use crate::rational::{GaussianRational, Rational};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Number of spin-orbitals in the model space.
pub const NUM_SPIN_ORBITALS: usize = 10;

/// Spatial orbital labels in canonical order (1-based, as printed).
pub const SPATIAL_NAMES: [&str; 5] = ["1s", "2s", "2p3", "2p1", "2p2"];

/// One of the ten spin-orbitals, identified by its canonical index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpinOrbital(pub u8);

impl SpinOrbital {
    pub fn new(index: u8) -> Self {
        assert!((index as usize) < NUM_SPIN_ORBITALS);
        Self(index)
    }

    /// Spatial label 0..4 (0 = 1s, 1 = 2s, 2 = 2p3, 3 = 2p1, 4 = 2p2).
    pub fn spatial(self) -> u8 {
        self.0 / 2
    }

    /// Spin-up exactly on even indices.
    pub fn is_up(self) -> bool {
        self.0 % 2 == 0
    }

    /// True for the three p orbitals (odd parity under inversion).
    pub fn is_p(self) -> bool {
        self.spatial() >= 2
    }

    /// All ten spin-orbitals in canonical order.
    pub fn all() -> impl Iterator<Item = SpinOrbital> {
        (0..NUM_SPIN_ORBITALS as u8).map(SpinOrbital)
    }
}

impl fmt::Display for SpinOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.spatial() + 1;
        if self.is_up() {
            write!(f, "{label}")
        } else {
            write!(f, "{label}\u{0304}")
        }
    }
}

/// A normal-ordered Slater determinant as a 10-bit occupancy set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SlaterDeterminant(pub u16);

impl SlaterDeterminant {
    pub const VACUUM: SlaterDeterminant = SlaterDeterminant(0);

    /// The filled 10-orbital reference determinant.
    pub const FULL: SlaterDeterminant = SlaterDeterminant(0b11_1111_1111);

    pub fn from_orbitals(orbitals: &[u8]) -> Self {
        let mut mask = 0u16;
        for &o in orbitals {
            assert!((o as usize) < NUM_SPIN_ORBITALS);
            assert!(mask & (1 << o) == 0, "duplicate orbital {o}");
            mask |= 1 << o;
        }
        Self(mask)
    }

    /// Electron count.
    pub fn n(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, o: SpinOrbital) -> bool {
        self.0 & (1 << o.0) != 0
    }

    /// Occupied orbitals in ascending index order.
    pub fn occupied(self) -> impl Iterator<Item = SpinOrbital> {
        let mask = self.0;
        (0..NUM_SPIN_ORBITALS as u8).filter_map(move |i| {
            if mask & (1 << i) != 0 {
                Some(SpinOrbital(i))
            } else {
                None
            }
        })
    }

    /// Number of occupied p spin-orbitals; the parity eigenvalue is
    /// `(-1)^p_count`.
    pub fn p_count(self) -> u32 {
        (self.0 & 0b11_1111_0000).count_ones()
    }

    /// Parity eigenvalue under simultaneous inversion: +1 or -1.
    pub fn parity(self) -> i8 {
        if self.p_count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 2*M_S: number of up spins minus number of down spins.
    pub fn twice_ms(self) -> i32 {
        let up = (self.0 & 0b01_0101_0101).count_ones() as i32;
        let down = (self.0 & 0b10_1010_1010).count_ones() as i32;
        up - down
    }

    /// Number of occupied 2s spin-orbitals (0, 1 or 2).
    pub fn n_2s(self) -> u32 {
        (self.0 & 0b1100).count_ones()
    }

    /// True when both 1s spin-orbitals are occupied.
    pub fn has_core(self) -> bool {
        self.0 & 0b11 == 0b11
    }
}

impl fmt::Display for SlaterDeterminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for o in self.occupied() {
            write!(f, "{o}")?;
        }
        write!(f, ">")
    }
}

/// Removes orbital `o`, returning the reduced determinant and the fermionic
/// sign `(-1)^(number of occupied orbitals below o)`. `None` when `o` is
/// unoccupied (vacuum-miss: the amplitude is zero, not an error).
pub fn annihilate(d: SlaterDeterminant, o: SpinOrbital) -> Option<(SlaterDeterminant, i8)> {
    if !d.contains(o) {
        return None;
    }
    let below = (d.0 & ((1u16 << o.0) - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((SlaterDeterminant(d.0 & !(1 << o.0)), sign))
}

/// Inserts orbital `o` with the position-parity sign rule. `None` when `o`
/// is already occupied (Pauli-miss).
pub fn create(d: SlaterDeterminant, o: SpinOrbital) -> Option<(SlaterDeterminant, i8)> {
    if d.contains(o) {
        return None;
    }
    let below = (d.0 & ((1u16 << o.0) - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((SlaterDeterminant(d.0 | (1 << o.0)), sign))
}

/// Normal-orders a list of orbital indices, returning the occupancy mask and
/// the permutation sign, or `None` on a Pauli violation.
pub(crate) fn normal_order(orbitals: &[u8]) -> Option<(u16, i8)> {
    let mut v: Vec<u8> = orbitals.to_vec();
    let mut sign = 1i8;
    // Insertion sort, counting transpositions.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    let mut mask = 0u16;
    for &o in &v {
        if mask & (1 << o) != 0 {
            return None;
        }
        mask |= 1 << o;
    }
    Some((mask, sign))
}

/// A finite linear combination of Slater determinants with exact
/// Gaussian-rational coefficients. Zero coefficients are pruned, so equality
/// is term-wise map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DeterminantExpansion {
    terms: BTreeMap<SlaterDeterminant, GaussianRational>,
}

impl DeterminantExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(d: SlaterDeterminant) -> Self {
        let mut e = Self::default();
        e.add(d, GaussianRational::one());
        e
    }

    pub fn add(&mut self, d: SlaterDeterminant, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(GaussianRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add_expansion(&mut self, other: &Self) {
        for (d, c) in &other.terms {
            self.add(*d, c.clone());
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        let mut out = Self::default();
        for (d, c) in &self.terms {
            out.add(*d, c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SlaterDeterminant, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: SlaterDeterminant) -> GaussianRational {
        self.terms
            .get(&d)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Exact inner product `<self|other>` using orthonormality of distinct
    /// normal-ordered determinants. Antilinear in `self`.
    pub fn inner(&self, other: &Self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (d, c) in &self.terms {
            if let Some(c2) = other.terms.get(d) {
                acc += &c.conj() * c2;
            }
        }
        acc
    }

    /// Squared norm, always a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

impl fmt::Display for DeterminantExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DeterminantExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DualityError {
    #[error("determinant {0:?} lacks a filled 1s shell; duality is defined on V0(N), N >= 2")]
    MissingCore(SlaterDeterminant),
}

/// Dual of a single basis determinant: annihilates its valence string from
/// the filled reference determinant. Returns the image determinant and sign.
pub fn dual_determinant(d: SlaterDeterminant) -> Result<(SlaterDeterminant, i8), DualityError> {
    if !d.has_core() {
        return Err(DualityError::MissingCore(d));
    }
    let mut state = SlaterDeterminant::FULL;
    let mut sign = 1i8;
    // a(psi_{i_{N-2}}) ... a(psi_{i_1}) |1>: the lowest valence orbital is
    // annihilated first.
    for o in d.occupied().filter(|o| o.0 >= 2) {
        let (next, s) = annihilate(state, o).expect("filled reference misses an orbital");
        state = next;
        sign *= s;
    }
    Ok((state, sign))
}

/// The particle-hole duality map `V0(N) -> V0(12-N)`: antilinear, defined
/// term-wise through [`dual_determinant`].
pub fn dual(x: &DeterminantExpansion) -> Result<DeterminantExpansion, DualityError> {
    let mut out = DeterminantExpansion::zero();
    for (d, c) in x.iter() {
        let (img, sign) = dual_determinant(*d)?;
        let mut coeff = c.conj();
        if sign < 0 {
            coeff = -coeff;
        }
        out.add(img, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn det(orbitals: &[u8]) -> SlaterDeterminant {
        SlaterDeterminant::from_orbitals(orbitals)
    }

    #[test]
    fn annihilate_examples() {
        // |1 1b 2>, removing 2s-up: two orbitals precede -> +1
        let d = det(&[0, 1, 2]);
        assert_eq!(
            annihilate(d, SpinOrbital(2)),
            Some((det(&[0, 1]), 1))
        );
        // removing 1s-down: one orbital precedes -> -1
        assert_eq!(
            annihilate(d, SpinOrbital(1)),
            Some((det(&[0, 2]), -1))
        );
        // unoccupied orbital is a vacuum-miss
        assert_eq!(annihilate(det(&[0, 1]), SpinOrbital(4)), None);
    }

    #[test]
    fn create_examples() {
        assert_eq!(
            create(det(&[0, 2]), SpinOrbital(1)),
            Some((det(&[0, 1, 2]), -1))
        );
        assert_eq!(create(det(&[0, 1]), SpinOrbital(0)), None);
        assert_eq!(
            create(SlaterDeterminant::VACUUM, SpinOrbital(0)),
            Some((det(&[0]), 1))
        );
    }

    #[test]
    fn create_annihilate_anticommutation() {
        // {a(o), a+(o)} = 1 on every determinant; a+(o)a+(o') = -a+(o')a+(o).
        for mask in 0u16..(1 << NUM_SPIN_ORBITALS) {
            let d = SlaterDeterminant(mask);
            for o in SpinOrbital::all() {
                let ca = annihilate(d, o)
                    .and_then(|(d1, s1)| create(d1, o).map(|(d2, s2)| (d2, s1 * s2)));
                let ac = create(d, o)
                    .and_then(|(d1, s1)| annihilate(d1, o).map(|(d2, s2)| (d2, s1 * s2)));
                let total = match (ca, ac) {
                    (Some((da, sa)), None) => (da, sa),
                    (None, Some((db, sb))) => (db, sb),
                    _ => panic!("exactly one ordering must survive"),
                };
                assert_eq!(total, (d, 1));
            }
        }
        // Anticommutation of distinct creators on the vacuum.
        for i in 0..10u8 {
            for j in 0..10u8 {
                if i == j {
                    continue;
                }
                let ij = create(SlaterDeterminant::VACUUM, SpinOrbital(i))
                    .and_then(|(d, s)| create(d, SpinOrbital(j)).map(|(d2, s2)| (d2, s * s2)))
                    .unwrap();
                let ji = create(SlaterDeterminant::VACUUM, SpinOrbital(j))
                    .and_then(|(d, s)| create(d, SpinOrbital(i)).map(|(d2, s2)| (d2, s * s2)))
                    .unwrap();
                assert_eq!(ij.0, ji.0);
                assert_eq!(ij.1, -ji.1);
            }
        }
    }

    #[test]
    fn normal_order_signs() {
        assert_eq!(normal_order(&[2, 6, 8, 5]), Some((0b1_0110_0100, 1)));
        assert_eq!(normal_order(&[1, 0]), Some((0b11, -1)));
        assert_eq!(normal_order(&[3, 3]), None);
    }

    #[test]
    fn dual_of_full_determinant() {
        let full = SlaterDeterminant::FULL;
        assert_eq!(dual_determinant(full), Ok((det(&[0, 1]), 1)));
    }

    #[test]
    fn dual_requires_core() {
        let open = det(&[0, 2]);
        assert!(dual_determinant(open).is_err());
    }

    #[test]
    fn dual_involution_sign_fixed_per_n() {
        // For each N the squared duality map is +-identity with one global
        // sign; record and check constancy over the whole basis.
        for n in 2..=10u32 {
            let mut expected: Option<i8> = None;
            for mask in 0u16..(1 << NUM_SPIN_ORBITALS) {
                let d = SlaterDeterminant(mask);
                if d.n() != n || !d.has_core() {
                    continue;
                }
                let x = DeterminantExpansion::single(d);
                let dd = dual(&dual(&x).unwrap()).unwrap();
                assert_eq!(dd.len(), 1);
                let c = dd.coeff(d);
                let sign = if c == GaussianRational::from_int(1) {
                    1
                } else {
                    assert_eq!(c, GaussianRational::from_int(-1));
                    -1
                };
                match expected {
                    None => expected = Some(sign),
                    Some(s) => assert_eq!(s, sign, "dual sign not constant for N={n}"),
                }
            }
        }
    }

    #[test]
    fn expansion_inner_product() {
        let mut x = DeterminantExpansion::zero();
        x.add(det(&[0, 1, 2]), GaussianRational::from_int(2));
        x.add(det(&[0, 1, 3]), GaussianRational::i());
        assert_eq!(x.norm_sqr(), int(5));
        let y = DeterminantExpansion::single(det(&[0, 1, 3]));
        // <x|y> = conj(i) = -i
        assert_eq!(x.inner(&y), GaussianRational::imaginary(int(-1)));
        assert_eq!(y.inner(&y), GaussianRational::one());
    }
}
