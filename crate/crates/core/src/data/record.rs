//! Sample records: one audio-visual clip with transcript and provenance.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::avf::{read_frames, Frames};
use super::wav::read_wav;
use super::DataError;

/// Audio sample rate every record uses.
pub const SAMPLE_RATE: usize = 16_000;
/// Video frame rate every record uses.
pub const VIDEO_FPS: usize = 25;

/// Whether a transcript came from a human annotation or a transcriber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Human,
    Auto,
}

/// Transcript provenance attached to each record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelProvenance {
    pub kind: LabelKind,
    /// Identifier of the transcriber that produced the label; empty iff human.
    #[serde(default)]
    pub transcriber_id: String,
    /// Target corruption rate when the label came from the synthetic oracle.
    #[serde(default)]
    pub corruption_rate: f64,
}

impl LabelProvenance {
    pub fn human() -> Self {
        LabelProvenance {
            kind: LabelKind::Human,
            transcriber_id: String::new(),
            corruption_rate: 0.0,
        }
    }

    pub fn auto(transcriber_id: &str, corruption_rate: f64) -> Self {
        LabelProvenance {
            kind: LabelKind::Auto,
            transcriber_id: transcriber_id.to_string(),
            corruption_rate,
        }
    }
}

/// Where a record's waveform lives: a WAV file or an in-memory buffer.
#[derive(Debug, Clone)]
pub enum AudioSource {
    Path(PathBuf),
    Inline(Arc<Vec<f32>>),
}

/// Where a record's frame stack lives: an AVF file or an in-memory buffer.
#[derive(Debug, Clone)]
pub enum VideoSource {
    Path(PathBuf),
    Inline(Arc<Frames>),
}

/// One audio-visual clip: mono 16 kHz waveform, 25 fps grayscale frames,
/// transcript, language tag, and label provenance.
#[derive(Debug, Clone)]
pub struct SampleRecord {
    pub id: String,
    pub audio: AudioSource,
    pub video: VideoSource,
    pub transcript: String,
    pub language: String,
    pub duration_s: f64,
    pub provenance: LabelProvenance,
    pub source: String,
}

impl SampleRecord {
    /// Loads the waveform, reading from disk when file-backed.
    pub fn load_audio(&self) -> Result<Arc<Vec<f32>>, DataError> {
        match &self.audio {
            AudioSource::Inline(a) => Ok(a.clone()),
            AudioSource::Path(p) => {
                let (samples, rate) = read_wav(p)?;
                if rate as usize != SAMPLE_RATE {
                    return Err(DataError::Format {
                        path: p.clone(),
                        detail: format!("expected {SAMPLE_RATE} Hz, file is {rate} Hz"),
                    });
                }
                Ok(Arc::new(samples))
            }
        }
    }

    /// Loads the frame stack, reading from disk when file-backed.
    pub fn load_video(&self) -> Result<Arc<Frames>, DataError> {
        match &self.video {
            VideoSource::Inline(f) => Ok(f.clone()),
            VideoSource::Path(p) => Ok(Arc::new(read_frames(p)?)),
        }
    }

    /// Number of 25 fps feature frames this record occupies.
    pub fn frames_25hz(&self) -> usize {
        (self.duration_s * VIDEO_FPS as f64).round() as usize
    }

    /// Checks the per-record invariants. Length checks only run for inline
    /// payloads; file-backed records are checked when loaded.
    pub fn validate(&self) -> Result<(), DataError> {
        if !(self.duration_s > 0.0) {
            return Err(DataError::InvalidRecord {
                id: self.id.clone(),
                detail: format!("duration_s must be positive, got {}", self.duration_s),
            });
        }
        if self.provenance.kind == LabelKind::Auto && self.provenance.transcriber_id.is_empty() {
            return Err(DataError::InvalidRecord {
                id: self.id.clone(),
                detail: "auto provenance requires a transcriber id".into(),
            });
        }
        if self.provenance.kind == LabelKind::Human && !self.provenance.transcriber_id.is_empty() {
            return Err(DataError::InvalidRecord {
                id: self.id.clone(),
                detail: "human provenance must not carry a transcriber id".into(),
            });
        }
        if let AudioSource::Inline(a) = &self.audio {
            let expect = (self.duration_s * SAMPLE_RATE as f64).round() as i64;
            if (a.len() as i64 - expect).abs() > 1 {
                return Err(DataError::InvalidRecord {
                    id: self.id.clone(),
                    detail: format!("audio has {} samples, expected {expect} +/- 1", a.len()),
                });
            }
        }
        if let VideoSource::Inline(f) = &self.video {
            let expect = (self.duration_s * VIDEO_FPS as f64).round() as i64;
            if (f.t as i64 - expect).abs() > 1 {
                return Err(DataError::InvalidRecord {
                    id: self.id.clone(),
                    detail: format!("video has {} frames, expected {expect} +/- 1", f.t),
                });
            }
        }
        Ok(())
    }
}

/// Serialized form of one manifest line.
#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct RecordLine {
    pub id: String,
    pub audio: String,
    pub video: String,
    pub transcript: String,
    pub language: String,
    pub duration_s: f64,
    pub provenance: LabelProvenance,
    pub source: String,
}

impl RecordLine {
    pub fn into_record(self, base: &Path) -> SampleRecord {
        let resolve = |s: &str| -> PathBuf {
            let p = PathBuf::from(s);
            if p.is_absolute() {
                p
            } else {
                base.join(p)
            }
        };
        SampleRecord {
            id: self.id,
            audio: AudioSource::Path(resolve(&self.audio)),
            video: VideoSource::Path(resolve(&self.video)),
            transcript: self.transcript,
            language: self.language,
            duration_s: self.duration_s,
            provenance: self.provenance,
            source: self.source,
        }
    }
}
