use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::CirculantGraph;

pub type Color = u8;

/// A color assignment to every vertex and every edge of a circulant graph.
///
/// Edge colors are indexed by the graph's dense edge index, so the map is
/// total by construction. Use [`PartialColoring`] while building.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotalColoring {
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
    palette_size: usize,
}

impl TotalColoring {
    pub fn new(vertex_colors: Vec<Color>, edge_colors: Vec<Color>, palette_size: usize) -> Result<Self> {
        if edge_colors.len() != 2 * vertex_colors.len() {
            return Err(Error::Coverage(format!(
                "{} vertex colors but {} edge colors (expected {})",
                vertex_colors.len(),
                edge_colors.len(),
                2 * vertex_colors.len()
            )));
        }
        if let Some(&c) = vertex_colors.iter().chain(&edge_colors).find(|&&c| c as usize >= palette_size) {
            return Err(Error::Coverage(format!("color {c} outside palette of size {palette_size}")));
        }
        Ok(TotalColoring { vertex_colors, edge_colors, palette_size })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn vertex(&self, i: usize) -> Color {
        self.vertex_colors[i]
    }

    pub fn edge(&self, id: usize) -> Color {
        self.edge_colors[id]
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge_colors
    }

    /// Color of the edge `{u, v}` in `g`.
    pub fn edge_between(&self, g: &CirculantGraph, u: usize, v: usize) -> Option<Color> {
        g.edge_index(u, v).map(|id| self.edge_colors[id])
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.vertex_colors.iter().chain(&self.edge_colors).copied().collect()
    }

    /// Renames every color through `perm`.
    pub fn permuted(&self, perm: &[Color]) -> Result<Self> {
        let map = |c: &Color| perm[*c as usize];
        TotalColoring::new(
            self.vertex_colors.iter().map(map).collect(),
            self.edge_colors.iter().map(map).collect(),
            self.palette_size,
        )
    }

    pub fn to_partial(&self) -> PartialColoring {
        PartialColoring {
            vertex_colors: self.vertex_colors.iter().map(|&c| Some(c)).collect(),
            edge_colors: self.edge_colors.iter().map(|&c| Some(c)).collect(),
            palette_size: self.palette_size,
        }
    }
}

/// A coloring under construction; `None` marks an unassigned element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    pub vertex_colors: Vec<Option<Color>>,
    pub edge_colors: Vec<Option<Color>>,
    pub palette_size: usize,
}

impl PartialColoring {
    pub fn empty(g: &CirculantGraph, palette_size: usize) -> Self {
        PartialColoring {
            vertex_colors: vec![None; g.n()],
            edge_colors: vec![None; g.edge_count()],
            palette_size,
        }
    }

    pub fn set_vertex(&mut self, i: usize, c: Color) {
        self.vertex_colors[i] = Some(c);
    }

    pub fn set_edge(&mut self, id: usize, c: Color) {
        self.edge_colors[id] = Some(c);
    }

    pub fn is_complete(&self) -> bool {
        self.vertex_colors.iter().chain(&self.edge_colors).all(Option::is_some)
    }

    /// Freezes the builder; fails if anything is still unassigned.
    pub fn into_total(self) -> Result<TotalColoring> {
        let unassigned_v = self.vertex_colors.iter().filter(|c| c.is_none()).count();
        let unassigned_e = self.edge_colors.iter().filter(|c| c.is_none()).count();
        if unassigned_v + unassigned_e > 0 {
            return Err(Error::Coverage(format!(
                "{unassigned_v} vertices and {unassigned_e} edges unassigned"
            )));
        }
        TotalColoring::new(
            self.vertex_colors.into_iter().flatten().collect(),
            self.edge_colors.into_iter().flatten().collect(),
            self.palette_size,
        )
    }
}
