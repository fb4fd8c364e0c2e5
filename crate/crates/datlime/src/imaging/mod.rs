//! Volume and image carriers plus the preprocessing pipeline:
//! slice extraction, contour cropping, bilinear resize, intensity
//! normalization, on-the-fly augmentation, and stratified dataset splitting.

mod augment;
mod io;
mod ops;
mod split;

pub use augment::{augment, AugmentSpec};
pub use io::{read_png_gray, write_png_gray, write_png_rgb};
pub use ops::{
    contour_crop, contour_crop_rect, extract_slice, normalize_intensity, resize_bilinear,
    CropRect, DEFAULT_CROP_THRESHOLD, DEFAULT_RESIZE_DIM, DEFAULT_SLICE_INDEX,
};
pub use split::{split_dataset, split_ids, ClassCounts, DatasetSplit};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Standard volume dimensions produced by the phantom generator.
pub const STANDARD_DIMS: (usize, usize, usize) = (91, 109, 91);

#[derive(Debug, Error)]
pub enum ImagingError {
    #[error("bad magic: expected {expected:?}, found {found:?}")]
    BadMagic { expected: [u8; 4], found: [u8; 4] },
    #[error("dimension mismatch: header says {nx}x{ny}x{nz} ({expected} voxels) but payload holds {actual}")]
    DimMismatch {
        nx: usize,
        ny: usize,
        nz: usize,
        expected: usize,
        actual: usize,
    },
    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
    #[error("slice index {index} out of range (nz = {nz})")]
    SliceOutOfRange { index: usize, nz: usize },
    #[error("empty image")]
    EmptyImage,
    #[error("invalid {what}: {why}")]
    Invalid { what: &'static str, why: String },
    #[error("split ratios must be positive and sum to 1 (got {0:?})")]
    BadRatios((f64, f64, f64)),
    #[error("cannot stratify: class {0} is empty")]
    EmptyClass(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("png error on {path}: {message}")]
    Png { path: String, message: String },
}

/// 3D voxel grid, x-fastest ordering: `index = x + nx*(y + ny*z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Volume {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub voxels: Vec<f32>,
}

impl Volume {
    pub fn zeros(nx: usize, ny: usize, nz: usize) -> Self {
        Self {
            nx,
            ny,
            nz,
            voxels: vec![0.0; nx * ny * nz],
        }
    }

    pub fn from_voxels(
        nx: usize,
        ny: usize,
        nz: usize,
        voxels: Vec<f32>,
    ) -> Result<Self, ImagingError> {
        if voxels.len() != nx * ny * nz {
            return Err(ImagingError::DimMismatch {
                nx,
                ny,
                nz,
                expected: nx * ny * nz,
                actual: voxels.len(),
            });
        }
        if let Some(index) = voxels.iter().position(|v| !v.is_finite()) {
            return Err(ImagingError::NonFinite { index });
        }
        Ok(Self { nx, ny, nz, voxels })
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize, z: usize) -> usize {
        x + self.nx * (y + self.ny * z)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> f32 {
        self.voxels[self.index(x, y, z)]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, z: usize, v: f32) {
        let i = self.index(x, y, z);
        self.voxels[i] = v;
    }
}

/// 2D grayscale image, row-major: `index = x + width*y`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<f32>,
}

impl Image {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            pixels: vec![0.0; width * height],
        }
    }

    pub fn from_pixels(width: usize, height: usize, pixels: Vec<f32>) -> Self {
        assert_eq!(pixels.len(), width * height, "pixel count must match dims");
        Self {
            width,
            height,
            pixels,
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f32 {
        self.pixels[x + self.width * y]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: f32) {
        self.pixels[x + self.width * y] = v;
    }

    pub fn max_value(&self) -> f32 {
        self.pixels.iter().copied().fold(f32::NEG_INFINITY, f32::max)
    }

    pub fn min_value(&self) -> f32 {
        self.pixels.iter().copied().fold(f32::INFINITY, f32::min)
    }
}

/// Diagnosis class carried by every phantom and dataset entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Healthy control (negative class, label 0).
    Hc,
    /// Parkinson's disease (positive class, label 1).
    Pd,
}

impl ClassLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Hc => "HC",
            ClassLabel::Pd => "PD",
        }
    }

    pub fn binary(&self) -> f32 {
        match self {
            ClassLabel::Hc => 0.0,
            ClassLabel::Pd => 1.0,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "HC" => Some(ClassLabel::Hc),
            "PD" => Some(ClassLabel::Pd),
            _ => None,
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
