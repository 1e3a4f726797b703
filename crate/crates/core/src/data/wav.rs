//! Minimal canonical WAV I/O: 16-bit PCM, mono.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::DataError;

/// Writes mono samples in `[-1, 1]` as 16-bit PCM. Out-of-range values clip.
pub fn write_wav(path: &Path, samples: &[f32], sample_rate: u32) -> Result<(), DataError> {
    let mut w = BufWriter::new(File::create(path).map_err(|e| DataError::io(path, e))?);
    let data_len = (samples.len() * 2) as u32;
    w.write_all(b"RIFF").map_err(|e| DataError::io(path, e))?;
    w.write_all(&(36 + data_len).to_le_bytes())
        .map_err(|e| DataError::io(path, e))?;
    w.write_all(b"WAVE").map_err(|e| DataError::io(path, e))?;
    w.write_all(b"fmt ").map_err(|e| DataError::io(path, e))?;
    w.write_all(&16u32.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?;
    w.write_all(&1u16.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?; // PCM
    w.write_all(&1u16.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?; // mono
    w.write_all(&sample_rate.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?;
    w.write_all(&(sample_rate * 2).to_le_bytes())
        .map_err(|e| DataError::io(path, e))?; // byte rate
    w.write_all(&2u16.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?; // block align
    w.write_all(&16u16.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?; // bits per sample
    w.write_all(b"data").map_err(|e| DataError::io(path, e))?;
    w.write_all(&data_len.to_le_bytes())
        .map_err(|e| DataError::io(path, e))?;
    let mut buf = Vec::with_capacity(samples.len() * 2);
    for &s in samples {
        let clipped = s.clamp(-1.0, 1.0);
        let q = (clipped * 32767.0).round() as i16;
        buf.extend_from_slice(&q.to_le_bytes());
    }
    w.write_all(&buf).map_err(|e| DataError::io(path, e))?;
    w.flush().map_err(|e| DataError::io(path, e))?;
    Ok(())
}

/// Reads a mono 16-bit PCM WAV file. Returns `(samples, sample_rate)`.
pub fn read_wav(path: &Path) -> Result<(Vec<f32>, u32), DataError> {
    let mut r = BufReader::new(File::open(path).map_err(|e| DataError::io(path, e))?);
    let mut head = [0u8; 12];
    r.read_exact(&mut head).map_err(|e| DataError::io(path, e))?;
    if &head[0..4] != b"RIFF" || &head[8..12] != b"WAVE" {
        return Err(DataError::Format {
            path: path.to_path_buf(),
            detail: "not a RIFF/WAVE file".into(),
        });
    }
    let mut sample_rate = 0u32;
    let mut bits = 0u16;
    let mut channels = 0u16;
    loop {
        let mut chunk = [0u8; 8];
        if r.read_exact(&mut chunk).is_err() {
            return Err(DataError::Format {
                path: path.to_path_buf(),
                detail: "missing data chunk".into(),
            });
        }
        let id = &chunk[0..4];
        let size = u32::from_le_bytes([chunk[4], chunk[5], chunk[6], chunk[7]]) as usize;
        if id == b"fmt " {
            let mut fmt = vec![0u8; size];
            r.read_exact(&mut fmt).map_err(|e| DataError::io(path, e))?;
            let format = u16::from_le_bytes([fmt[0], fmt[1]]);
            channels = u16::from_le_bytes([fmt[2], fmt[3]]);
            sample_rate = u32::from_le_bytes([fmt[4], fmt[5], fmt[6], fmt[7]]);
            bits = u16::from_le_bytes([fmt[14], fmt[15]]);
            if format != 1 {
                return Err(DataError::Format {
                    path: path.to_path_buf(),
                    detail: format!("unsupported WAV format code {format} (want PCM)"),
                });
            }
        } else if id == b"data" {
            if channels != 1 || bits != 16 {
                return Err(DataError::Format {
                    path: path.to_path_buf(),
                    detail: format!("want mono 16-bit, got {channels} ch {bits} bit"),
                });
            }
            let mut raw = vec![0u8; size];
            r.read_exact(&mut raw).map_err(|e| DataError::io(path, e))?;
            let samples = raw
                .chunks_exact(2)
                .map(|c| i16::from_le_bytes([c[0], c[1]]) as f32 / 32767.0)
                .collect();
            return Ok((samples, sample_rate));
        } else {
            // skip unknown chunk
            let mut skip = vec![0u8; size];
            r.read_exact(&mut skip).map_err(|e| DataError::io(path, e))?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_within_quantization() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.wav");
        let samples: Vec<f32> = (0..1000).map(|i| (i as f32 * 0.01).sin() * 0.8).collect();
        write_wav(&path, &samples, 16000).unwrap();
        let (back, rate) = read_wav(&path).unwrap();
        assert_eq!(rate, 16000);
        assert_eq!(back.len(), samples.len());
        for (a, b) in back.iter().zip(&samples) {
            assert!((a - b).abs() < 1.0 / 32000.0);
        }
    }

    #[test]
    fn rejects_garbage() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.wav");
        std::fs::write(&path, b"not a wav at all").unwrap();
        assert!(read_wav(&path).is_err());
    }
}
