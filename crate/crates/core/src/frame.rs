//! Image containers: binary photon-count frames and real-valued grids.

use serde::{Deserialize, Serialize};

/// Detection plane of a frame pair.
///
/// `NearField` images the source plane (photon positions, correlated),
/// `FarField` the lens focal plane (transverse momenta, anti-correlated).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Plane {
    NearField,
    FarField,
}

impl Plane {
    pub fn tag(&self) -> &'static str {
        match self {
            Plane::NearField => "near",
            Plane::FarField => "far",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Plane> {
        match tag {
            "near" => Some(Plane::NearField),
            "far" => Some(Plane::FarField),
            _ => None,
        }
    }
}

impl std::fmt::Display for Plane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which half of an [`ImagePair`] a derived object came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Signal,
    Idler,
}

impl Role {
    pub fn tag(&self) -> &'static str {
        match self {
            Role::Signal => "signal",
            Role::Idler => "idler",
        }
    }
}

/// Dense row-major 2D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid<T> {
    width: usize,
    height: usize,
    data: Vec<T>,
}

impl<T: Clone + Default> Grid<T> {
    pub fn new(width: usize, height: usize) -> Self {
        Grid {
            width,
            height,
            data: vec![T::default(); width * height],
        }
    }
}

impl<T> Grid<T> {
    pub fn from_vec(width: usize, height: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), width * height, "grid data length mismatch");
        Grid {
            width,
            height,
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.width + col]
    }

    #[inline]
    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut T {
        &mut self.data[row * self.width + col]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn same_shape<U>(&self, other: &Grid<U>) -> bool {
        self.width == other.width && self.height == other.height
    }

    /// Reverse both axes: entry (r, c) moves to (h-1-r, w-1-c). For a frame
    /// indexed by a signed coordinate via `floor(x/pitch) + n/2`, this is the
    /// exact pixel image of x -> -x.
    pub fn flipped(&self) -> Grid<T>
    where
        T: Clone,
    {
        let mut data = self.data.clone();
        data.reverse();
        Grid {
            width: self.width,
            height: self.height,
            data,
        }
    }
}

impl Grid<u8> {
    /// Fraction of set pixels.
    pub fn mean(&self) -> f64 {
        if self.data.is_empty() {
            return 0.0;
        }
        let ones: u64 = self.data.iter().map(|&v| u64::from(v)).sum();
        ones as f64 / self.data.len() as f64
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    pub fn to_f64(&self) -> Grid<f64> {
        Grid {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| f64::from(v)).collect(),
        }
    }
}

impl Grid<f64> {
    pub fn mean(&self) -> f64 {
        if self.data.is_empty() {
            return 0.0;
        }
        crate::stats::pairwise_sum(&self.data) / self.data.len() as f64
    }
}

/// Binary photon-count frame (entries are 0 or 1 after thresholding).
pub type BitFrame = Grid<u8>;

/// One simulated acquisition: a signal frame and its twin idler frame.
#[derive(Debug, Clone)]
pub struct ImagePair {
    pub plane: Plane,
    pub frame_index: u32,
    pub signal: BitFrame,
    pub idler: BitFrame,
    /// Digest of the generating configuration; lets consumers detect frames
    /// produced under a stale config.
    pub config_digest: String,
}

impl ImagePair {
    pub fn image_size(&self) -> usize {
        self.signal.width()
    }

    /// Loose Monte-Carlo sanity band on the frame means for the generating
    /// config: each frame mean must fall inside
    /// `[0.25 * (m + p_n) * eta_ref, 4 * (m + p_n)]`.
    pub fn mean_within_band(&self, m: f64, p_n: f64, eta_ref: f64) -> bool {
        let lo = 0.25 * (m + p_n) * eta_ref;
        let hi = 4.0 * (m + p_n);
        let (s, i) = (self.signal.mean(), self.idler.mean());
        s >= lo && s <= hi && i >= lo && i <= hi
    }
}
