//! In-memory image tensor and PNG I/O.

use std::path::Path;

use ndarray::Array3;

use crate::error::{Error, Result};

/// An RGB image with values in `[0, 1]`, laid out `[channel, row, col]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTensor {
    pub data: Array3<f64>,
}

impl ImageTensor {
    pub fn zeros(height: usize, width: usize) -> Self {
        ImageTensor {
            data: Array3::zeros((3, height, width)),
        }
    }

    pub fn height(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn width(&self) -> usize {
        self.data.shape()[2]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Clamp all values into `[0, 1]`.
    pub fn clamp01(&mut self) {
        self.data.mapv_inplace(|v| v.clamp(0.0, 1.0));
    }

    /// Write as an 8-bit RGB PNG.
    pub fn save_png(&self, path: &Path) -> Result<()> {
        let (h, w) = (self.height(), self.width());
        let mut buf = image::RgbImage::new(w as u32, h as u32);
        for y in 0..h {
            for x in 0..w {
                let px = [
                    to_u8(self.data[[0, y, x]]),
                    to_u8(self.data[[1, y, x]]),
                    to_u8(self.data[[2, y, x]]),
                ];
                buf.put_pixel(x as u32, y as u32, image::Rgb(px));
            }
        }
        buf.save(path).map_err(|e| match e {
            image::ImageError::IoError(io) => Error::io(path, io),
            other => Error::io(path, std::io::Error::other(other)),
        })
    }

    /// Load an 8-bit RGB PNG back into `[0, 1]` values.
    pub fn load_png(path: &Path) -> Result<Self> {
        let img = image::open(path)
            .map_err(|e| match e {
                image::ImageError::IoError(io) => Error::io(path, io),
                other => Error::io(path, std::io::Error::other(other)),
            })?
            .into_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let mut data = Array3::zeros((3, h, w));
        for (x, y, px) in img.enumerate_pixels() {
            for c in 0..3 {
                data[[c, y as usize, x as usize]] = f64::from(px.0[c]) / 255.0;
            }
        }
        Ok(ImageTensor { data })
    }
}

fn to_u8(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn png_roundtrip_is_exact_on_quantized_values() {
        let dir = tempfile::tempdir().unwrap();
        let mut img = ImageTensor::zeros(8, 6);
        for (i, v) in img.data.iter_mut().enumerate() {
            *v = f64::from((i * 7 % 256) as u8) / 255.0;
        }
        let path = dir.path().join("t.png");
        img.save_png(&path).unwrap();
        let back = ImageTensor::load_png(&path).unwrap();
        assert_eq!(img, back);
    }

    #[test]
    fn save_to_missing_dir_names_path() {
        let img = ImageTensor::zeros(4, 4);
        let err = img
            .save_png(Path::new("/nonexistent-dir/x.png"))
            .unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.png"));
    }
}
