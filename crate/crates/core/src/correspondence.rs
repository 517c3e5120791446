//! Adiabatic labelling between zero-field hydrogen states and strong-field
//! states.
//!
//! The number of nodal surfaces is conserved as the field grows: the
//! `n - l - 1` nodal spheres become the `n_rho` cylinders and the `l - |m|`
//! nodal cones become the `n_z` planes of the longitudinal motion. `m` is
//! conserved throughout.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HydrogenLabel {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl HydrogenLabel {
    pub fn new(n: i64, l: i64, m: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("n >= 1 violated (n = {n})")));
        }
        if l < 0 {
            return Err(Error::invalid(format!("l >= 0 violated (l = {l})")));
        }
        if l > n - 1 {
            return Err(Error::invalid(format!(
                "l <= n-1 violated (n = {n}, l = {l})"
            )));
        }
        if m.abs() > l {
            return Err(Error::invalid(format!(
                "|m| <= l violated (l = {l}, m = {m})"
            )));
        }
        Ok(Self {
            n: n as u32,
            l: l as u32,
            m: m as i32,
        })
    }

    /// Number of nodal spheres.
    pub fn n_r(&self) -> u32 {
        self.n - self.l - 1
    }

    /// Number of nodal cones.
    pub fn n_cones(&self) -> u32 {
        self.l - self.m.unsigned_abs()
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.n.into(), self.l.into(), self.m.into()).map(|_| ())
    }
}

const ORBITAL_LETTERS: &[u8] = b"spdfghiklmnoqrtuv";

impl fmt::Display for HydrogenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match ORBITAL_LETTERS.get(self.l as usize) {
            Some(&c) => write!(f, "{}{}", self.n, c as char)?,
            None => write!(f, "n={},l={}", self.n, self.l)?,
        }
        if self.l > 0 {
            write!(f, " m={}", self.m)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrongFieldLabel {
    pub n_rho: u32,
    pub n_z: u32,
    pub m: i32,
}

impl StrongFieldLabel {
    pub fn new(n_rho: i64, n_z: i64, m: i64) -> Result<Self> {
        if n_rho < 0 {
            return Err(Error::invalid(format!(
                "n_rho >= 0 violated (n_rho = {n_rho})"
            )));
        }
        if n_z < 0 {
            return Err(Error::invalid(format!("n_z >= 0 violated (n_z = {n_z})")));
        }
        let m = i32::try_from(m).map_err(|_| Error::invalid(format!("m out of range: {m}")))?;
        Ok(Self {
            n_rho: n_rho as u32,
            n_z: n_z as u32,
            m,
        })
    }
}

impl fmt::Display for StrongFieldLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n_rho={}, n_z={}, m={}", self.n_rho, self.n_z, self.m)
    }
}

/// `n_rho = n - l - 1`, `n_z = l - |m|`, `m` unchanged.
pub fn hydrogen_to_strong(h: &HydrogenLabel) -> Result<StrongFieldLabel> {
    h.validate()?;
    Ok(StrongFieldLabel {
        n_rho: h.n_r(),
        n_z: h.n_cones(),
        m: h.m,
    })
}

/// Inverse map: `l = n_z + |m|`, `n = n_rho + l + 1`.
pub fn strong_to_hydrogen(s: &StrongFieldLabel) -> HydrogenLabel {
    let l = s.n_z + s.m.unsigned_abs();
    HydrogenLabel {
        n: s.n_rho + l + 1,
        l,
        m: s.m,
    }
}

/// Zero-field ancestors of the lowest strong-field family
/// `(n_rho, n_z) = (0, 0)`, `m = 0, -1, -2, ...`: 1s, 2p m=-1, 3d m=-2, ...
pub fn ground_ancestors(count: u32) -> Vec<HydrogenLabel> {
    (0..count)
        .map(|k| HydrogenLabel {
            n: k + 1,
            l: k,
            m: -(k as i32),
        })
        .collect()
}
