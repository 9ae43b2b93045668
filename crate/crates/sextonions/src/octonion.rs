//! Split octonions as Zorn vector matrices, and the sextonion subalgebra.
//!
//! An element is written as a 2x2 array
//! `[[aplus, vplus], [vminus, aminus]]` with scalar corners and 3-vector
//! off-entries. The product couples the corners to the vectors through the
//! ordinary cross product, and the scalar pairing of a plus-vector with a
//! minus-vector enters with a minus sign:
//!
//! ```text
//! [[a+, A+], [A-, a-]] . [[b+, B+], [B-, b-]] =
//!   [[a+  b+ - <A+, B->,  a+ B+ + b- A+ + A- x B-],
//!    [a- B- + b+ A- + A+ x B+,  a-  b- - <A-, B+>]]
//! ```
//!
//! The idempotents rho+/rho- are the corner units; eps_k+/eps_k- are the
//! vector units. The sextonions are the subalgebra with vplus[2] = 0 and
//! vminus[1] = 0, i.e. span{rho+, rho-, eps1+, eps1-, eps2+, eps3-}.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::linalg::Mat;
use crate::scalar::{gzero, random_gauss, GaussRat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZornOct {
    pub aplus: GaussRat,
    pub aminus: GaussRat,
    pub vplus: [GaussRat; 3],
    pub vminus: [GaussRat; 3],
}

pub const OCT_DIM: usize = 8;

/// Labels in global basis order: rho+, rho-, eps1+, eps1-, eps2+, eps2-,
/// eps3+, eps3-.
pub const OCT_LABELS: [&str; 8] =
    ["rho+", "rho-", "eps1+", "eps1-", "eps2+", "eps2-", "eps3+", "eps3-"];

/// Coordinate indices (into the global basis order) spanning the sextonions.
pub const SEXT_INDICES: [usize; 6] = [0, 1, 2, 3, 4, 7];

pub const SEXT_LABELS: [&str; 6] = ["rho+", "rho-", "eps1+", "eps1-", "eps2+", "eps3-"];

pub(crate) fn zero3() -> [GaussRat; 3] {
    [gzero(), gzero(), gzero()]
}

pub(crate) fn e3(k: usize) -> [GaussRat; 3] {
    let mut v = zero3();
    v[k] = GaussRat::one();
    v
}

pub(crate) fn cross(a: &[GaussRat; 3], b: &[GaussRat; 3]) -> [GaussRat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &[GaussRat; 3], b: &[GaussRat; 3]) -> GaussRat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

impl ZornOct {
    pub fn zero() -> Self {
        ZornOct { aplus: gzero(), aminus: gzero(), vplus: zero3(), vminus: zero3() }
    }

    pub fn one() -> Self {
        ZornOct { aplus: GaussRat::one(), aminus: GaussRat::one(), vplus: zero3(), vminus: zero3() }
    }

    pub fn rho_plus() -> Self {
        ZornOct { aplus: GaussRat::one(), ..ZornOct::zero() }
    }

    pub fn rho_minus() -> Self {
        ZornOct { aminus: GaussRat::one(), ..ZornOct::zero() }
    }

    /// eps_k+ for k in 1..=3.
    pub fn eps_plus(k: usize) -> Self {
        assert!((1..=3).contains(&k));
        ZornOct { vplus: e3(k - 1), ..ZornOct::zero() }
    }

    /// eps_k- for k in 1..=3.
    pub fn eps_minus(k: usize) -> Self {
        assert!((1..=3).contains(&k));
        ZornOct { vminus: e3(k - 1), ..ZornOct::zero() }
    }

    /// The eight basis elements in global order.
    pub fn basis() -> Vec<ZornOct> {
        let mut b = Vec::with_capacity(8);
        b.push(ZornOct::rho_plus());
        b.push(ZornOct::rho_minus());
        for k in 1..=3 {
            b.push(ZornOct::eps_plus(k));
            b.push(ZornOct::eps_minus(k));
        }
        b
    }

    /// Coordinates in the global basis order.
    pub fn coords(&self) -> [GaussRat; 8] {
        [
            self.aplus.clone(),
            self.aminus.clone(),
            self.vplus[0].clone(),
            self.vminus[0].clone(),
            self.vplus[1].clone(),
            self.vminus[1].clone(),
            self.vplus[2].clone(),
            self.vminus[2].clone(),
        ]
    }

    pub fn from_coords(c: &[GaussRat]) -> Self {
        assert_eq!(c.len(), 8);
        ZornOct {
            aplus: c[0].clone(),
            aminus: c[1].clone(),
            vplus: [c[2].clone(), c[4].clone(), c[6].clone()],
            vminus: [c[3].clone(), c[5].clone(), c[7].clone()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.aplus.is_zero()
            && self.aminus.is_zero()
            && self.vplus.iter().all(|z| z.is_zero())
            && self.vminus.iter().all(|z| z.is_zero())
    }

    pub fn add(&self, o: &ZornOct) -> ZornOct {
        ZornOct {
            aplus: &self.aplus + &o.aplus,
            aminus: &self.aminus + &o.aminus,
            vplus: [
                &self.vplus[0] + &o.vplus[0],
                &self.vplus[1] + &o.vplus[1],
                &self.vplus[2] + &o.vplus[2],
            ],
            vminus: [
                &self.vminus[0] + &o.vminus[0],
                &self.vminus[1] + &o.vminus[1],
                &self.vminus[2] + &o.vminus[2],
            ],
        }
    }

    pub fn sub(&self, o: &ZornOct) -> ZornOct {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> ZornOct {
        self.scale(&-GaussRat::one())
    }

    pub fn scale(&self, c: &GaussRat) -> ZornOct {
        ZornOct {
            aplus: c * &self.aplus,
            aminus: c * &self.aminus,
            vplus: [c * &self.vplus[0], c * &self.vplus[1], c * &self.vplus[2]],
            vminus: [c * &self.vminus[0], c * &self.vminus[1], c * &self.vminus[2]],
        }
    }

    /// The Zorn product.
    pub fn mul(&self, o: &ZornOct) -> ZornOct {
        let wedge_minus = cross(&self.vminus, &o.vminus);
        let wedge_plus = cross(&self.vplus, &o.vplus);
        ZornOct {
            aplus: &self.aplus * &o.aplus - dot(&self.vplus, &o.vminus),
            aminus: &self.aminus * &o.aminus - dot(&self.vminus, &o.vplus),
            vplus: [
                &self.aplus * &o.vplus[0] + &o.aminus * &self.vplus[0] + &wedge_minus[0],
                &self.aplus * &o.vplus[1] + &o.aminus * &self.vplus[1] + &wedge_minus[1],
                &self.aplus * &o.vplus[2] + &o.aminus * &self.vplus[2] + &wedge_minus[2],
            ],
            vminus: [
                &self.aminus * &o.vminus[0] + &o.aplus * &self.vminus[0] + &wedge_plus[0],
                &self.aminus * &o.vminus[1] + &o.aplus * &self.vminus[1] + &wedge_plus[1],
                &self.aminus * &o.vminus[2] + &o.aplus * &self.vminus[2] + &wedge_plus[2],
            ],
        }
    }

    /// Octonion conjugation: swap the corners, negate the vectors.
    pub fn conj(&self) -> ZornOct {
        ZornOct {
            aplus: self.aminus.clone(),
            aminus: self.aplus.clone(),
            vplus: [-&self.vplus[0], -&self.vplus[1], -&self.vplus[2]],
            vminus: [-&self.vminus[0], -&self.vminus[1], -&self.vminus[2]],
        }
    }

    /// Quadratic norm: N(x) = aplus*aminus + <vplus, vminus>. Satisfies
    /// x * conj(x) = N(x) * 1 and N(xy) = N(x)N(y).
    pub fn norm(&self) -> GaussRat {
        &self.aplus * &self.aminus + dot(&self.vplus, &self.vminus)
    }

    pub fn trace(&self) -> GaussRat {
        &self.aplus + &self.aminus
    }

    /// Membership in the sextonion subalgebra.
    pub fn is_sextonion(&self) -> bool {
        self.vplus[2].is_zero() && self.vminus[1].is_zero()
    }

    pub fn random(rng: &mut impl Rng) -> ZornOct {
        ZornOct {
            aplus: random_gauss(rng),
            aminus: random_gauss(rng),
            vplus: [random_gauss(rng), random_gauss(rng), random_gauss(rng)],
            vminus: [random_gauss(rng), random_gauss(rng), random_gauss(rng)],
        }
    }

    pub fn random_sextonion(rng: &mut impl Rng) -> ZornOct {
        let mut x = ZornOct::random(rng);
        x.vplus[2] = gzero();
        x.vminus[1] = gzero();
        x
    }
}

/// The six sextonion basis elements in the order rho+, rho-, eps1+, eps1-,
/// eps2+, eps3-.
pub fn sextonion_basis() -> Vec<ZornOct> {
    SEXT_INDICES.iter().map(|&i| ZornOct::basis()[i].clone()).collect()
}

/// Polar form of the norm restricted to the sextonion basis:
/// B(x, y) = (N(x + y) - N(x) - N(y)) / 2, assembled entry by entry from the
/// norm itself.
pub fn sextonion_norm_gram() -> Mat {
    let basis = sextonion_basis();
    let half = crate::scalar::grat(1, 2);
    Mat::from_fn(6, 6, |i, j| {
        let s = basis[i].add(&basis[j]);
        (s.norm() - basis[i].norm() - basis[j].norm()) * &half
    })
}

/// 8x8x8 multiplication table: `table[i][j]` is the coordinate vector of
/// basis[i] * basis[j] in the global basis order.
pub fn mul_table() -> Vec<Vec<[GaussRat; 8]>> {
    let basis = ZornOct::basis();
    basis
        .iter()
        .map(|x| basis.iter().map(|y| x.mul(y).coords()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gint, grat};

    #[test]
    fn idempotents_and_unit() {
        let rp = ZornOct::rho_plus();
        let rm = ZornOct::rho_minus();
        assert_eq!(rp.mul(&rp), rp);
        assert_eq!(rm.mul(&rm), rm);
        assert!(rp.mul(&rm).is_zero());
        assert!(rm.mul(&rp).is_zero());
        assert_eq!(rp.add(&rm), ZornOct::one());
        let x = ZornOct { aplus: grat(3, 2), ..ZornOct::eps_minus(2) };
        assert_eq!(x.mul(&ZornOct::one()), x);
        assert_eq!(ZornOct::one().mul(&x), x);
    }

    #[test]
    fn vector_products() {
        // eps1+ eps2+ = eps3-, and antisymmetric on that pair.
        let e1p = ZornOct::eps_plus(1);
        let e2p = ZornOct::eps_plus(2);
        assert_eq!(e1p.mul(&e2p), ZornOct::eps_minus(3));
        assert_eq!(e2p.mul(&e1p), ZornOct::eps_minus(3).neg());
        // eps_k+ eps_k- = -rho+.
        let e1m = ZornOct::eps_minus(1);
        assert_eq!(e1p.mul(&e1m), ZornOct::rho_plus().neg());
        assert_eq!(e1m.mul(&e1p), ZornOct::rho_minus().neg());
        // Absorption and annihilation against the idempotents.
        let rp = ZornOct::rho_plus();
        let rm = ZornOct::rho_minus();
        assert_eq!(rp.mul(&e1p), e1p);
        assert_eq!(e1p.mul(&rm), e1p);
        assert!(rm.mul(&e1p).is_zero());
        assert!(e1p.mul(&rp).is_zero());
    }

    #[test]
    fn conjugation_fixed_points_and_flips() {
        assert_eq!(ZornOct::rho_plus().conj(), ZornOct::rho_minus());
        assert_eq!(ZornOct::one().conj(), ZornOct::one());
        assert_eq!(ZornOct::eps_plus(2).conj(), ZornOct::eps_plus(2).neg());
    }

    #[test]
    fn norm_and_trace_values() {
        assert_eq!(ZornOct::one().norm(), gint(1));
        assert_eq!(ZornOct::rho_plus().norm(), gint(0));
        let x = ZornOct::eps_plus(1).add(&ZornOct::eps_minus(1));
        assert_eq!(x.norm(), gint(1));
        assert_eq!(ZornOct::rho_plus().trace(), gint(1));
        assert_eq!(ZornOct::one().trace(), gint(2));
    }

    #[test]
    fn norm_is_a_conjugation_norm() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        for _ in 0..50 {
            let x = ZornOct::random(&mut rng);
            let n = x.norm();
            assert_eq!(x.mul(&x.conj()), ZornOct::one().scale(&n));
            assert_eq!(x.conj().mul(&x), ZornOct::one().scale(&n));
        }
    }

    #[test]
    fn sextonion_membership() {
        assert!(ZornOct::eps_plus(2).is_sextonion());
        assert!(!ZornOct::eps_minus(2).is_sextonion());
        assert!(!ZornOct::eps_plus(3).is_sextonion());
        assert!(ZornOct::eps_minus(3).is_sextonion());
        assert!(ZornOct::zero().is_sextonion());
        // Products can leave the subalgebra when an input is outside it:
        // eps1- eps2- = eps3+.
        let p = ZornOct::eps_minus(1).mul(&ZornOct::eps_minus(2));
        assert_eq!(p, ZornOct::eps_plus(3));
        assert!(!p.is_sextonion());
    }

    #[test]
    fn gram_matches_hand_values() {
        let g = sextonion_norm_gram();
        assert_eq!(g[(0, 1)], grat(1, 2)); // B(rho+, rho-)
        assert_eq!(g[(2, 3)], grat(1, 2)); // B(eps1+, eps1-)
        assert_eq!(g[(0, 0)], gint(0));
        // eps2+ and eps3- rows vanish: the radical.
        for j in 0..6 {
            assert_eq!(g[(4, j)], gint(0));
            assert_eq!(g[(5, j)], gint(0));
        }
        assert_eq!(crate::linalg::inertia(&g), Ok((2, 2, 2)));
    }
}
