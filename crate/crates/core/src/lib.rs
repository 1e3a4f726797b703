//! Desk-scale audio-visual speech recognition workbench.
//!
//! The crate covers the full pipeline: a deterministic synthetic audio-visual
//! corpus generator, pseudo-labelling of unlabelled pools through a pluggable
//! transcriber interface, subword tokenization, raw-waveform and video
//! front-ends feeding Conformer encoders with joint CTC/attention training,
//! SNR-controlled noise augmentation, and WER evaluation with ablation
//! presets for data scaling, transcriber quality, and noise robustness.
//!
//! Everything is a pure function of `(config, seed)`: corpora, augmentations,
//! training trajectories, and decoded outputs reproduce exactly across runs.

pub mod augment;
pub mod config;
pub mod data;
pub mod frontend;
pub mod model;
pub mod nn;
pub mod pseudo;
pub mod runner;
pub mod seeding;
pub mod tokenizer;

pub use config::ExperimentConfig;
pub use data::{
    generate_synthetic_corpus, load_manifest, merge_manifests, save_manifest, subset_by_fraction,
    AudioSource, LabelKind, LabelProvenance, Manifest, SampleRecord, SynthCorpusSpec, VideoSource,
};
pub use frontend::{FeatureSequence, FrontendConfig, Modality};
pub use model::{
    AvsrModel, DecodeConfig, DecoderConfig, EncoderConfig, FusionConfig, Hypothesis,
    JointLossConfig,
};
pub use runner::{evaluate, make_batches, train, wer, RunReport, TrainConfig};
pub use tokenizer::{TokenSequence, Vocabulary};
