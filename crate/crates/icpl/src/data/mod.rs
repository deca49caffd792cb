//! Dataset model: spectra, sample records, image cache, splits.

mod augment;
mod manifest;
mod sampler;
mod synthetic;

pub use augment::{augment, AugmentConfig};
pub use manifest::{load_manifest, write_manifest};
pub use sampler::{pk_sample_batch, Batch, SamplerConfig};
pub use synthetic::{generate_synthetic, SyntheticConfig};

use std::path::PathBuf;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::ImageTensor;

/// Ordered set of spectra names. The order fixes feature concatenation and
/// adapter indexing for the lifetime of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectraSet {
    names: Vec<String>,
}

impl Default for SpectraSet {
    fn default() -> Self {
        SpectraSet::new(vec!["rgb".into(), "nir".into(), "tir".into()]).unwrap()
    }
}

impl SpectraSet {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::config("spectra set must have at least one name"));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::config(format!("duplicate spectra name `{n}`")));
            }
        }
        Ok(SpectraSet { names })
    }

    pub fn count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Query,
    Gallery,
}

/// One object instance: a dense identity label, capture metadata and one
/// image path per spectra (in `SpectraSet` order).
#[derive(Debug, Clone)]
pub struct SampleRecord {
    /// Dense label within this record's label space (train or test).
    pub identity: usize,
    /// Identity as written in the manifest.
    pub raw_identity: u64,
    pub camera: u32,
    pub time_label: u32,
    pub split: Split,
    pub images: Vec<PathBuf>,
    /// Unique per record; manifest line order.
    pub uid: usize,
}

/// Immutable dataset with a lazy in-memory image cache.
pub struct Dataset {
    pub spectra: SpectraSet,
    pub records: Vec<SampleRecord>,
    /// Number of distinct identities in the train split.
    pub train_identities: usize,
    /// Number of distinct identities in the query/gallery splits.
    pub test_identities: usize,
    cache: Vec<OnceLock<ImageTensor>>,
}

impl Dataset {
    pub(crate) fn new(
        spectra: SpectraSet,
        records: Vec<SampleRecord>,
        train_identities: usize,
        test_identities: usize,
    ) -> Self {
        let cells = records.len() * spectra.count();
        Dataset {
            spectra,
            records,
            train_identities,
            test_identities,
            cache: (0..cells).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Load (once) and return the image for `(record, spectra)`.
    pub fn image(&self, record: usize, spectra: usize) -> Result<&ImageTensor> {
        let cell = &self.cache[record * self.spectra.count() + spectra];
        if let Some(img) = cell.get() {
            return Ok(img);
        }
        let img = ImageTensor::load_png(&self.records[record].images[spectra])?;
        let _ = cell.set(img);
        Ok(cell.get().expect("cache cell just populated"))
    }

    pub fn indices_of(&self, split: Split) -> Vec<usize> {
        self.records
            .iter()
            .enumerate()
            .filter(|(_, r)| r.split == split)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn train_indices(&self) -> Vec<usize> {
        self.indices_of(Split::Train)
    }
}
