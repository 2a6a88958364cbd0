//! Lattice geometry: state sequencing and neighbour enumeration.
//!
//! States are numbered 1..=|E| along +x first, then +y, then +z, so the cell
//! `(x, y, z)` carries the index `x + w(y-1) + wd(z-1)`. A grid with
//! `height == 1` is the two-dimensional case.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Behaviour of the walk at the outer faces of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Borders {
    /// Moves off the lattice are not offered; boundary cells have fewer neighbours.
    Bordered,
    /// Every face wraps around to the opposite one (torus).
    Boundless,
}

/// Dimensions and border mode of a rectangular lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    width: usize,
    depth: usize,
    height: usize,
    borders: Borders,
}

/// 1-based lattice coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Coord {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Coord { x, y, z }
    }

    /// Coordinate in the `z = 1` plane.
    pub const fn planar(x: usize, y: usize) -> Self {
        Coord { x, y, z: 1 }
    }
}

impl GridSpec {
    /// Validates and builds a lattice description.
    ///
    /// Width and depth must be at least 2. Height 1 encodes a planar grid;
    /// otherwise height must also be at least 2.
    pub fn new(width: usize, depth: usize, height: usize, borders: Borders) -> Result<Self> {
        let invalid = |reason| Error::InvalidGrid {
            width,
            depth,
            height,
            reason,
        };
        if width < 2 || depth < 2 {
            return Err(invalid("width and depth must be at least 2"));
        }
        if height == 0 {
            return Err(invalid("height must be at least 1"));
        }
        width
            .checked_mul(depth)
            .and_then(|a| a.checked_mul(height))
            .ok_or_else(|| invalid("state count overflows"))?;
        Ok(GridSpec {
            width,
            depth,
            height,
            borders,
        })
    }

    /// Planar grid (`height == 1`).
    pub fn planar(width: usize, depth: usize, borders: Borders) -> Result<Self> {
        Self::new(width, depth, 1, borders)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn borders(&self) -> Borders {
        self.borders
    }

    /// Number of lattice axes that take part in the walk (2 or 3).
    pub fn dims(&self) -> usize {
        if self.height > 1 {
            3
        } else {
            2
        }
    }

    /// |E|.
    pub fn state_count(&self) -> usize {
        self.width * self.depth * self.height
    }

    fn check_coord(&self, c: Coord) -> Result<()> {
        let ok = (1..=self.width).contains(&c.x)
            && (1..=self.depth).contains(&c.y)
            && (1..=self.height).contains(&c.z);
        if ok {
            Ok(())
        } else {
            Err(Error::CoordOutOfRange {
                x: c.x,
                y: c.y,
                z: c.z,
                width: self.width,
                depth: self.depth,
                height: self.height,
            })
        }
    }

    /// Fails unless `1 <= s <= |E|`.
    pub fn check_state(&self, s: usize) -> Result<()> {
        if (1..=self.state_count()).contains(&s) {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state: s,
                count: self.state_count(),
            })
        }
    }

    /// State index of a coordinate: `x + w(y-1) + wd(z-1)`.
    pub fn index_of(&self, c: Coord) -> Result<usize> {
        self.check_coord(c)?;
        Ok(c.x + self.width * (c.y - 1) + self.width * self.depth * (c.z - 1))
    }

    /// Inverse of [`GridSpec::index_of`].
    pub fn coord_of(&self, s: usize) -> Result<Coord> {
        self.check_state(s)?;
        let i = s - 1;
        let layer = self.width * self.depth;
        Ok(Coord {
            x: i % self.width + 1,
            y: (i % layer) / self.width + 1,
            z: i / layer + 1,
        })
    }

    /// Neighbour multiset of state `s`, in the order -x, +x, -y, +y, -z, +z.
    ///
    /// Bordered grids skip directions that leave the lattice. Boundless grids
    /// always yield `2 * dims` entries; on an axis of length 2 both wrap
    /// directions reach the same cell and the entry appears twice.
    pub fn neighbors(&self, s: usize) -> Result<Vec<usize>> {
        let c = self.coord_of(s)?;
        let mut out = Vec::with_capacity(2 * self.dims());
        let axes = [
            (c.x, self.width, 1),
            (c.y, self.depth, self.width),
            (c.z, self.height, self.width * self.depth),
        ];
        for &(pos, len, stride) in &axes[..self.dims()] {
            match self.borders {
                Borders::Bordered => {
                    if pos > 1 {
                        out.push(s - stride);
                    }
                    if pos < len {
                        out.push(s + stride);
                    }
                }
                Borders::Boundless => {
                    let down = if pos > 1 { s - stride } else { s + (len - 1) * stride };
                    let up = if pos < len { s + stride } else { s - (len - 1) * stride };
                    out.push(down);
                    out.push(up);
                }
            }
        }
        Ok(out)
    }

    /// Taxicab distance between two states; wrap-aware on boundless grids.
    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        let ca = self.coord_of(a)?;
        let cb = self.coord_of(b)?;
        let axis = |p: usize, q: usize, len: usize| {
            let d = p.abs_diff(q);
            match self.borders {
                Borders::Bordered => d,
                Borders::Boundless => d.min(len - d),
            }
        };
        Ok(axis(ca.x, cb.x, self.width)
            + axis(ca.y, cb.y, self.depth)
            + axis(ca.z, cb.z, self.height))
    }

    /// Corner states of the lattice (4 in 2D, 8 in 3D).
    pub fn corners(&self) -> Vec<usize> {
        let zs: &[usize] = if self.height > 1 {
            &[1, self.height]
        } else {
            &[1]
        };
        let mut out = Vec::new();
        for &z in zs {
            for y in [1, self.depth] {
                for x in [1, self.width] {
                    out.push(x + self.width * (y - 1) + self.width * self.depth * (z - 1));
                }
            }
        }
        out
    }

    /// Cell nearest to the geometric centre (rounding down on even axes).
    pub fn center(&self) -> Coord {
        Coord {
            x: self.width.div_ceil(2),
            y: self.depth.div_ceil(2),
            z: self.height.div_ceil(2),
        }
    }
}
