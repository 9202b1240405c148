//! Numbered site sets, optional two-color partition, and normalized pairs.

use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::network::{Network, VertexId};

/// A site's number: its index in the site list, used to break ties.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SiteId(pub u32);

impl SiteId {
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for SiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    S,
    T,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::S => Color::T,
            Color::T => Color::S,
        }
    }
}

/// Unordered pair of distinct sites, stored with `lo < hi`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SitePair {
    pub lo: SiteId,
    pub hi: SiteId,
}

impl SitePair {
    /// `None` when `a == b`: a site never pairs with itself.
    pub fn new(a: SiteId, b: SiteId) -> Option<SitePair> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(SitePair { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(SitePair { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn contains(&self, s: SiteId) -> bool {
        self.lo == s || self.hi == s
    }
}

impl fmt::Display for SitePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Sites in numbering order, each at a distinct vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteSet {
    vertices: Vec<VertexId>,
    colors: Option<Vec<Color>>,
    site_at: Vec<Option<SiteId>>,
}

impl SiteSet {
    /// Builds an uncolored site set over a network with `n` vertices.
    pub fn new(n: usize, vertices: Vec<VertexId>) -> Result<SiteSet> {
        Self::build(n, vertices, None)
    }

    /// Builds a two-color site set; both classes must be non-empty.
    pub fn colored(n: usize, vertices: Vec<VertexId>, colors: Vec<Color>) -> Result<SiteSet> {
        if colors.len() != vertices.len() {
            return Err(Error::domain("one color per site required"));
        }
        if !colors.contains(&Color::S) || !colors.contains(&Color::T) {
            return Err(Error::domain(
                "both color classes S and T must be non-empty",
            ));
        }
        Self::build(n, vertices, Some(colors))
    }

    fn build(n: usize, vertices: Vec<VertexId>, colors: Option<Vec<Color>>) -> Result<SiteSet> {
        let mut site_at = vec![None; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::domain(format!("site vertex {v} out of range")));
            }
            if site_at[v].is_some() {
                return Err(Error::domain(format!("vertex {v} holds two sites")));
            }
            site_at[v] = Some(SiteId(i as u32));
        }
        Ok(SiteSet {
            vertices,
            colors,
            site_at,
        })
    }

    /// Number of sites, `k`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, s: SiteId) -> VertexId {
        self.vertices[s.index()]
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn ids(&self) -> impl Iterator<Item = SiteId> + '_ {
        (0..self.vertices.len() as u32).map(SiteId)
    }

    pub fn site_at(&self, v: VertexId) -> Option<SiteId> {
        self.site_at.get(v).copied().flatten()
    }

    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    pub fn color(&self, s: SiteId) -> Option<Color> {
        self.colors.as_ref().map(|c| c[s.index()])
    }

    pub fn class_size(&self, c: Color) -> usize {
        self.colors
            .as_ref()
            .map_or(0, |cs| cs.iter().filter(|&&x| x == c).count())
    }

    /// Drops the color partition.
    pub fn uncolored(&self) -> SiteSet {
        SiteSet {
            colors: None,
            ..self.clone()
        }
    }

    /// Writes the site file format read by [`load_sites`] (1-based vertices).
    pub fn to_site_file(&self) -> String {
        let mut out = String::new();
        for s in self.ids() {
            let v = self.vertex(s) + 1;
            let _ = match self.color(s) {
                Some(c) => writeln!(out, "{v} {c:?}"),
                None => writeln!(out, "{v}"),
            };
        }
        out
    }
}

/// Which pairs of sites may label a vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRule {
    /// Any two distinct sites.
    AnyTwo,
    /// One site of each color.
    CrossColor,
}

impl PairRule {
    pub fn admits(self, sites: &SiteSet, a: SiteId, b: SiteId) -> bool {
        a != b
            && match self {
                PairRule::AnyTwo => true,
                PairRule::CrossColor => sites.color(a) != sites.color(b),
            }
    }

    /// Budget class of a site: all sites share one class unless colors split them.
    pub(crate) fn class_of(self, sites: &SiteSet, s: SiteId) -> usize {
        match (self, sites.color(s)) {
            (PairRule::CrossColor, Some(Color::T)) => 1,
            _ => 0,
        }
    }

    pub(crate) fn class_count(self) -> usize {
        match self {
            PairRule::AnyTwo => 1,
            PairRule::CrossColor => 2,
        }
    }
}

/// Result of [`load_sites`].
#[derive(Clone, Debug)]
pub struct LoadedSites {
    pub sites: SiteSet,
    /// Lines naming an already-listed vertex; collapsed into the first one.
    pub duplicates: usize,
}

/// Reads a site file: one `<vertex_id>` or `<vertex_id> <S|T>` per line,
/// `#` comments. Vertex ids are 1-based.
pub fn load_sites(text: &str, net: &Network) -> Result<LoadedSites> {
    let n = net.vertex_count();
    let mut seen = vec![false; n];
    let mut vertices = Vec::new();
    let mut colors = Vec::new();
    let mut colored: Option<bool> = None;
    let mut duplicates = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() > 2 {
            return Err(Error::Format {
                line,
                msg: "expected `<vertex> [S|T]`".into(),
            });
        }
        let id: i64 = fields[0].parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad vertex id `{}`", fields[0]),
        })?;
        if id < 1 || id as u64 > n as u64 {
            return Err(Error::Range { line, id, n });
        }
        let color = match fields.get(1) {
            None => None,
            Some(&"S") => Some(Color::S),
            Some(&"T") => Some(Color::T),
            Some(other) => {
                return Err(Error::Format {
                    line,
                    msg: format!("unknown color `{other}`"),
                });
            }
        };
        match colored {
            None => colored = Some(color.is_some()),
            Some(c) if c != color.is_some() => {
                return Err(Error::Format {
                    line,
                    msg: "mixed colored and uncolored lines".into(),
                });
            }
            Some(_) => {}
        }
        let v = (id - 1) as usize;
        if seen[v] {
            duplicates += 1;
            continue;
        }
        seen[v] = true;
        vertices.push(v);
        if let Some(c) = color {
            colors.push(c);
        }
    }
    let sites = if colored == Some(true) {
        SiteSet::colored(n, vertices, colors)?
    } else {
        SiteSet::new(n, vertices)?
    };
    Ok(LoadedSites { sites, duplicates })
}
