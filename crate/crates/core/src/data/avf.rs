//! Raw grayscale frame container.
//!
//! Layout: magic `AVF1`, then u32 T, u32 H, u32 W (little-endian), then
//! `T*H*W` float32 little-endian pixel values in frame-major order.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::DataError;

const MAGIC: &[u8; 4] = b"AVF1";

/// A stack of `t` grayscale frames of size `h x w`, pixel values in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Frames {
    pub t: usize,
    pub h: usize,
    pub w: usize,
    pub data: Vec<f32>,
}

impl Frames {
    pub fn new(t: usize, h: usize, w: usize, data: Vec<f32>) -> Self {
        assert_eq!(data.len(), t * h * w, "frame stack size mismatch");
        Frames { t, h, w, data }
    }

    pub fn zeros(t: usize, h: usize, w: usize) -> Self {
        Frames {
            t,
            h,
            w,
            data: vec![0.0; t * h * w],
        }
    }

    pub fn frame(&self, i: usize) -> &[f32] {
        let n = self.h * self.w;
        &self.data[i * n..(i + 1) * n]
    }

    pub fn frame_mut(&mut self, i: usize) -> &mut [f32] {
        let n = self.h * self.w;
        &mut self.data[i * n..(i + 1) * n]
    }
}

pub fn write_frames(path: &Path, frames: &Frames) -> Result<(), DataError> {
    let mut w = BufWriter::new(File::create(path).map_err(|e| DataError::io(path, e))?);
    w.write_all(MAGIC).map_err(|e| DataError::io(path, e))?;
    for dim in [frames.t, frames.h, frames.w] {
        w.write_all(&(dim as u32).to_le_bytes())
            .map_err(|e| DataError::io(path, e))?;
    }
    let mut buf = Vec::with_capacity(frames.data.len() * 4);
    for v in &frames.data {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    w.write_all(&buf).map_err(|e| DataError::io(path, e))?;
    w.flush().map_err(|e| DataError::io(path, e))?;
    Ok(())
}

pub fn read_frames(path: &Path) -> Result<Frames, DataError> {
    let mut r = BufReader::new(File::open(path).map_err(|e| DataError::io(path, e))?);
    let mut head = [0u8; 16];
    r.read_exact(&mut head).map_err(|e| DataError::io(path, e))?;
    if &head[0..4] != MAGIC {
        return Err(DataError::Format {
            path: path.to_path_buf(),
            detail: "bad frame container magic".into(),
        });
    }
    let t = u32::from_le_bytes([head[4], head[5], head[6], head[7]]) as usize;
    let h = u32::from_le_bytes([head[8], head[9], head[10], head[11]]) as usize;
    let w = u32::from_le_bytes([head[12], head[13], head[14], head[15]]) as usize;
    let mut raw = vec![0u8; t * h * w * 4];
    r.read_exact(&mut raw).map_err(|e| DataError::io(path, e))?;
    let data = raw
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect();
    Ok(Frames { t, h, w, data })
}
