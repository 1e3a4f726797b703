//! Manifests: ordered record lists with JSON-lines persistence.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;

use super::record::{AudioSource, RecordLine, SampleRecord, VideoSource};
use super::{avf, wav, DataError};
use crate::seeding;

/// An ordered list of sample records defining a dataset split.
#[derive(Debug, Clone, Default)]
pub struct Manifest {
    pub name: String,
    pub records: Vec<SampleRecord>,
}

impl Manifest {
    pub fn new(name: &str, records: Vec<SampleRecord>) -> Self {
        Manifest {
            name: name.to_string(),
            records,
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Total duration in hours.
    pub fn total_hours(&self) -> f64 {
        self.records.iter().map(|r| r.duration_s).sum::<f64>() / 3600.0
    }

    /// Checks id uniqueness and per-record invariants.
    pub fn validate(&self) -> Result<(), DataError> {
        let mut seen = HashSet::new();
        for r in &self.records {
            r.validate()?;
            if !seen.insert(r.id.as_str()) {
                return Err(DataError::DuplicateId { id: r.id.clone() });
            }
        }
        Ok(())
    }
}

/// Concatenates manifests in order. Errors if any id repeats across parts.
pub fn merge_manifests(parts: &[Manifest]) -> Result<Manifest, DataError> {
    if parts.is_empty() {
        return Err(DataError::EmptyMerge);
    }
    let mut seen: HashSet<&str> = HashSet::new();
    let mut records = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for part in parts {
        for r in &part.records {
            if !seen.insert(r.id.as_str()) {
                return Err(DataError::DuplicateId { id: r.id.clone() });
            }
        }
        records.extend(part.records.iter().cloned());
    }
    let name = parts
        .iter()
        .map(|p| p.name.as_str())
        .collect::<Vec<_>>()
        .join("+");
    Ok(Manifest::new(&name, records))
}

/// Deterministic seeded shuffle followed by a prefix of `ceil(fraction * N)`
/// records. For a fixed seed, smaller fractions are subsets of larger ones.
pub fn subset_by_fraction(m: &Manifest, fraction: f64, seed: u64) -> Result<Manifest, DataError> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(DataError::InvalidFraction { fraction });
    }
    let mut order: Vec<usize> = (0..m.len()).collect();
    let mut rng = seeding::stream(seed, "subset", 0);
    order.shuffle(&mut rng);
    let take = (fraction * m.len() as f64).ceil() as usize;
    let records = order[..take.min(m.len())]
        .iter()
        .map(|&i| m.records[i].clone())
        .collect();
    Ok(Manifest::new(&m.name, records))
}

fn sanitize_id(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

/// Writes a manifest as JSON lines, one record per line.
///
/// Inline audio/video payloads are materialized into a `<stem>_data/`
/// directory next to the manifest; file-backed records keep their files and
/// are referenced relative to the manifest directory when possible.
pub fn save_manifest(m: &Manifest, path: &Path) -> Result<(), DataError> {
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(base).map_err(|e| DataError::io(base, e))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "manifest".to_string());
    let data_dir = base.join(format!("{stem}_data"));

    let mut out = BufWriter::new(File::create(path).map_err(|e| DataError::io(path, e))?);
    for r in &m.records {
        let audio_rel = match &r.audio {
            AudioSource::Path(p) => relative_to(p, base),
            AudioSource::Inline(samples) => {
                std::fs::create_dir_all(&data_dir).map_err(|e| DataError::io(&data_dir, e))?;
                let file = data_dir.join(format!("{}.wav", sanitize_id(&r.id)));
                wav::write_wav(&file, samples, super::record::SAMPLE_RATE as u32)?;
                relative_to(&file, base)
            }
        };
        let video_rel = match &r.video {
            VideoSource::Path(p) => relative_to(p, base),
            VideoSource::Inline(frames) => {
                std::fs::create_dir_all(&data_dir).map_err(|e| DataError::io(&data_dir, e))?;
                let file = data_dir.join(format!("{}.avf", sanitize_id(&r.id)));
                avf::write_frames(&file, frames)?;
                relative_to(&file, base)
            }
        };
        let line = RecordLine {
            id: r.id.clone(),
            audio: audio_rel,
            video: video_rel,
            transcript: r.transcript.clone(),
            language: r.language.clone(),
            duration_s: r.duration_s,
            provenance: r.provenance.clone(),
            source: r.source.clone(),
        };
        let json = serde_json::to_string(&line).map_err(|e| DataError::Serialize {
            detail: e.to_string(),
        })?;
        writeln!(out, "{json}").map_err(|e| DataError::io(path, e))?;
    }
    out.flush().map_err(|e| DataError::io(path, e))?;
    Ok(())
}

fn relative_to(p: &Path, base: &Path) -> String {
    match p.strip_prefix(base) {
        Ok(rel) => rel.to_string_lossy().to_string(),
        Err(_) => p.to_string_lossy().to_string(),
    }
}

/// Loads a JSON-lines manifest. Malformed lines report their line number.
pub fn load_manifest(path: &Path) -> Result<Manifest, DataError> {
    let base: PathBuf = path
        .parent()
        .map(|p| p.to_path_buf())
        .unwrap_or_else(|| PathBuf::from("."));
    let file = File::open(path).map_err(|e| DataError::io(path, e))?;
    let mut records = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| DataError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: RecordLine =
            serde_json::from_str(&line).map_err(|e| DataError::ManifestLine {
                path: path.to_path_buf(),
                line: i + 1,
                detail: e.to_string(),
            })?;
        records.push(parsed.into_record(&base));
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_default();
    let m = Manifest::new(&name, records);
    m.validate()?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::record::LabelProvenance;
    use std::sync::Arc;

    fn rec(id: &str, dur: f64) -> SampleRecord {
        let n = (dur * 16000.0).round() as usize;
        let t = (dur * 25.0).round() as usize;
        SampleRecord {
            id: id.to_string(),
            audio: AudioSource::Inline(Arc::new(vec![0.1; n])),
            video: VideoSource::Inline(Arc::new(crate::data::avf::Frames::zeros(t, 4, 4))),
            transcript: format!("word {id}"),
            language: "eng".into(),
            duration_s: dur,
            provenance: LabelProvenance::human(),
            source: "test".into(),
        }
    }

    #[test]
    fn merge_is_hour_additive() {
        let a = Manifest::new("a", vec![rec("a1", 1.0), rec("a2", 2.0)]);
        let b = Manifest::new("b", vec![rec("b1", 3.0)]);
        let m = merge_manifests(&[a.clone(), b]).unwrap();
        assert_eq!(m.len(), 3);
        assert!((m.total_hours() - 6.0 / 3600.0).abs() < 1e-12);
        // exact additivity over an arbitrary partition
        let whole = m.total_hours();
        let parts: f64 = m.records.iter().map(|r| r.duration_s).sum::<f64>() / 3600.0;
        assert_eq!(whole, parts);
    }

    #[test]
    fn merge_rejects_duplicate_ids() {
        let a = Manifest::new("a", vec![rec("x", 1.0)]);
        let err = merge_manifests(&[a.clone(), a]).unwrap_err();
        match err {
            DataError::DuplicateId { id } => assert_eq!(id, "x"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn subsets_nest_for_increasing_fractions() {
        let m = Manifest::new("m", (0..50).map(|i| rec(&format!("r{i}"), 0.2)).collect());
        for seed in [1u64, 7, 99] {
            let small = subset_by_fraction(&m, 0.2, seed).unwrap();
            let large = subset_by_fraction(&m, 0.4, seed).unwrap();
            let large_ids: HashSet<_> = large.records.iter().map(|r| r.id.clone()).collect();
            for r in &small.records {
                assert!(large_ids.contains(&r.id));
            }
        }
    }

    #[test]
    fn subset_edge_fractions() {
        let m = Manifest::new("m", (0..10).map(|i| rec(&format!("r{i}"), 0.2)).collect());
        assert_eq!(subset_by_fraction(&m, 0.0, 3).unwrap().len(), 0);
        let full = subset_by_fraction(&m, 1.0, 3).unwrap();
        assert_eq!(full.len(), 10);
        assert!((full.total_hours() - m.total_hours()).abs() < 1e-12);
        assert!(subset_by_fraction(&m, 1.5, 3).is_err());
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        let m = Manifest::new("m", vec![rec("a", 0.4), rec("b", 0.6)]);
        save_manifest(&m, &path).unwrap();
        let back = load_manifest(&path).unwrap();
        assert_eq!(back.len(), 2);
        assert!((back.total_hours() - m.total_hours()).abs() < 1e-9);
        for (x, y) in back.records.iter().zip(&m.records) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.transcript, y.transcript);
            assert_eq!(x.language, y.language);
            assert_eq!(x.provenance, y.provenance);
            assert_eq!(x.source, y.source);
            let wave = x.load_audio().unwrap();
            assert_eq!(wave.len(), y.load_audio().unwrap().len());
        }
    }

    #[test]
    fn empty_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        save_manifest(&Manifest::new("e", vec![]), &path).unwrap();
        let back = load_manifest(&path).unwrap();
        assert!(back.is_empty());
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        std::fs::write(&path, "{\"id\": \"x\", \"audio\": \"a.wav\"}\n").unwrap();
        match load_manifest(&path).unwrap_err() {
            DataError::ManifestLine { line, detail, .. } => {
                assert_eq!(line, 1);
                assert!(detail.contains("transcript"), "detail: {detail}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
