//! Explicit colourings behind each closed-form index formula.
//!
//! Vertex naming follows the canonical layout: `u(i)` is rim vertex `u_i`,
//! `v(i)` the outer vertex `v_i` (adjacent to `u_i` and `u_{i+1}` in the
//! sunflower-derived families), 1-based. The `plus` colourings are colour
//! reversals of the `minus` ones; blossom `plus` has no explicit construction.

use super::{phi::PhiVariant, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec};
use crate::indices::Index;

/// Which construction serves a given index. Only the blossom family uses a
/// separate colouring for the second Zagreb index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Main,
    SecondZagreb,
}

impl WitnessKind {
    pub fn for_index(family: Family, index: Index) -> WitnessKind {
        match (family, index) {
            (Family::Blossom, Index::M2) => WitnessKind::SecondZagreb,
            _ => WitnessKind::Main,
        }
    }
}

struct Layout {
    n: usize,
    zeta: Vec<u32>,
}

impl Layout {
    fn new(n: u32) -> Layout {
        let n = n as usize;
        Layout {
            n,
            zeta: vec![0; 2 * n + 1],
        }
    }

    fn u(&mut self, i: usize, c: u32) {
        self.zeta[i - 1] = c;
    }

    fn v(&mut self, i: usize, c: u32) {
        self.zeta[self.n + i - 1] = c;
    }

    fn hub(&mut self, c: u32) {
        self.zeta[2 * self.n] = c;
    }

    fn finish(self) -> Result<Coloring> {
        Coloring::new(self.zeta)
    }
}

pub fn witness(spec: FamilySpec, variant: PhiVariant, index: Index) -> Result<Coloring> {
    let unsupported = || Error::NoWitness(format!("{spec} {variant} {index}"));
    let minus = match spec.family {
        Family::Flower => flower(spec.n)?,
        Family::Sunflower => sunflower(spec.n)?,
        Family::ClosedSunflower => closed_sunflower(spec.n)?,
        Family::Blossom if variant == PhiVariant::Minus => {
            match WitnessKind::for_index(spec.family, index) {
                WitnessKind::Main => blossom_main(spec.n).ok_or_else(unsupported)?,
                WitnessKind::SecondZagreb => blossom_m2(spec.n).ok_or_else(unsupported)?,
            }
        }
        _ => return Err(unsupported()),
    };
    Ok(match variant {
        PhiVariant::Minus => minus,
        PhiVariant::Plus => minus.reversed(),
    })
}

fn flower(n: u32) -> Result<Coloring> {
    let mut l = Layout::new(n);
    let n = l.n;
    if n.is_multiple_of(2) {
        for i in 1..=n {
            l.u(i, if i % 2 == 0 { 1 } else { 2 });
            l.v(i, if i % 2 == 1 { 1 } else { 2 });
        }
        l.hub(3);
    } else {
        for i in 1..n {
            l.u(i, if i % 2 == 0 { 1 } else { 2 });
        }
        for i in 1..=n {
            l.v(i, if i % 2 == 1 { 1 } else { 2 });
        }
        l.u(n, 4);
        l.hub(3);
    }
    l.finish()
}

fn sunflower(n: u32) -> Result<Coloring> {
    let mut l = Layout::new(n);
    let n = l.n;
    for i in 1..=n {
        l.v(i, 1);
    }
    l.hub(1);
    let last_paired = if n.is_multiple_of(2) { n } else { n - 1 };
    for i in 1..=last_paired {
        l.u(i, if i % 2 == 1 { 2 } else { 3 });
    }
    if n % 2 == 1 {
        l.u(n, 4);
    }
    l.finish()
}

fn closed_sunflower(n: u32) -> Result<Coloring> {
    let mut l = Layout::new(n);
    let n = l.n;
    match n % 3 {
        0 => {
            // 1,2,3 repeating along u1, v1, u2, v2, ...
            for i in 1..=n {
                l.u(i, (2 * (i - 1) % 3) as u32 + 1);
                l.v(i, ((2 * (i - 1) + 1) % 3) as u32 + 1);
            }
            l.hub(4);
        }
        1 => {
            for i in 1..n {
                l.u(i, ((i - 1) % 3) as u32 + 1);
            }
            l.u(n, 4);
            l.v(1, 4);
            for i in 2..=n {
                l.v(i, ((i - 2) % 3) as u32 + 1);
            }
            l.hub(5);
        }
        _ => {
            for i in 1..n {
                l.u(i, ((i + 1) % 3) as u32 + 1);
                l.v(i, (i % 3) as u32 + 1);
            }
            l.u(n, 5);
            l.v(n, 1);
            l.hub(4);
        }
    }
    l.finish()
}

fn blossom_main(n: u32) -> Option<Coloring> {
    let mut l = Layout::new(n);
    let n = l.n;
    if n.is_multiple_of(2) {
        for i in 1..=n {
            l.v(i, if i % 2 == 1 { 1 } else { 2 });
            l.u(i, if i % 2 == 1 { 3 } else { 4 });
        }
    } else {
        if n < 5 {
            return None;
        }
        // The odd construction labels apexes one step back: its j-th apex
        // sits over u_{j-1} and u_j, which is our v_{j-1}.
        let apex = |j: usize| if j == 1 { n } else { j - 1 };
        for j in 1..n {
            l.v(apex(j), if j % 2 == 1 { 1 } else { 2 });
        }
        l.v(apex(n), 3);
        for i in 1..=n - 2 {
            l.u(i, if i % 2 == 1 { 3 } else { 4 });
        }
        l.u(n - 1, 1);
        l.u(n, 2);
    }
    l.hub(5);
    l.finish().ok()
}

fn blossom_m2(n: u32) -> Option<Coloring> {
    if n % 2 == 1 {
        return blossom_main(n);
    }
    let mut l = Layout::new(n);
    for i in 1..=l.n {
        l.v(i, if i % 2 == 1 { 1 } else { 4 });
        l.u(i, if i % 2 == 1 { 2 } else { 3 });
    }
    l.hub(5);
    l.finish().ok()
}
