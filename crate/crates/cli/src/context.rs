use std::sync::OnceLock;

use anyhow::{anyhow, Result};
use h4_core::embed::{standard_e8, EmbeddedVec, E8};
use h4_core::icosian::Icosians;
use h4_core::mod2::{isotropic_4spaces, F2Set, Mod2};
use h4_core::polytopes::{build_120cell, Cell120, Cell600};
use h4_core::symmetry::{Symmetry, TenPerm};

/// Lazily built shared objects. Each one is computed at most once.
#[derive(Default)]
pub struct Context {
    cell600: OnceLock<Result<Cell600, String>>,
    symmetry: OnceLock<Result<Symmetry, String>>,
    actions: OnceLock<Result<Vec<TenPerm>, String>>,
    cell120: OnceLock<Result<Cell120, String>>,
    e8: OnceLock<Result<StandardE8, String>>,
    mod2: OnceLock<Result<Mod2, String>>,
    spaces: OnceLock<Result<Vec<F2Set>, String>>,
}

pub struct StandardE8 {
    pub e8: E8,
    pub h: Vec<EmbeddedVec>,
    pub phi_h: Vec<EmbeddedVec>,
}

fn get<T>(
    cell: &OnceLock<Result<T, String>>,
    build: impl FnOnce() -> Result<T>,
) -> Result<&T> {
    cell.get_or_init(|| build().map_err(|e| format!("{e:#}")))
        .as_ref()
        .map_err(|e| anyhow!("{e}"))
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cell600(&self) -> Result<&Cell600> {
        get(&self.cell600, || Ok(Cell600::build(Icosians::new()?)?))
    }

    pub fn symmetry(&self) -> Result<&Symmetry> {
        get(&self.symmetry, || Ok(Symmetry::generate(self.cell600()?)?))
    }

    /// Action of every group element on the ten partitions, in element order.
    pub fn actions(&self) -> Result<&[TenPerm]> {
        get(&self.actions, || {
            Ok(self.symmetry()?.partition_actions(self.cell600()?)?)
        })
        .map(Vec::as_slice)
    }

    pub fn cell120(&self) -> Result<&Cell120> {
        get(&self.cell120, || Ok(build_120cell(self.cell600()?)?))
    }

    pub fn e8(&self) -> Result<&StandardE8> {
        get(&self.e8, || {
            let (e8, h, phi_h) = standard_e8(self.cell600()?.icosians())?;
            Ok(StandardE8 { e8, h, phi_h })
        })
    }

    pub fn mod2(&self) -> Result<&Mod2> {
        get(&self.mod2, || {
            Ok(Mod2::build(&self.e8()?.e8, self.cell600()?)?)
        })
    }

    /// The totally singular 4-spaces of E8/2E8, sorted.
    pub fn spaces(&self) -> Result<&[F2Set]> {
        get(&self.spaces, || Ok(isotropic_4spaces(self.mod2()?))).map(Vec::as_slice)
    }
}
