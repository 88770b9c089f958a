//! Text syntax shared by the CLI and report files.
//!
//! Words are space-separated 1-based simple indices (`"1 2 1"`, empty string
//! for the identity). Weights are comma-separated pairings (`"-3,5"`).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, WeightVec};
use crate::error::{Error, Result};

/// On-disk form of a Cartan matrix: `{"name": ..., "matrix": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcmFile {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
}

/// Parses a 1-based word into 0-based indices, checking them against `rank`.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            let i: usize =
                tok.parse().map_err(|_| Error::Parse(format!("bad simple index {tok:?} in word {text:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            Ok(i - 1)
        })
        .collect()
}

pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_weight(text: &str, rank: usize) -> Result<WeightVec> {
    let coords = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad pairing {tok:?} in weight {text:?}")))
        })
        .collect::<Result<Vec<i64>>>()?;
    if coords.len() != rank {
        return Err(Error::RankMismatch { expected: rank, got: coords.len() });
    }
    Ok(WeightVec(coords))
}

pub fn parse_gcm_document(text: &str) -> Result<CartanData> {
    let file: GcmFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("GCM document: {e}")))?;
    CartanData::validate_named(Some(file.name), &file.matrix)
}

/// Resolves a `--gcm` argument: a preset name, otherwise a file path.
pub fn load_gcm(source: &str) -> Result<CartanData> {
    if crate::cartan::PRESETS.contains(&source) {
        return CartanData::preset(source);
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|e| Error::UnknownGcm(format!("{source}: {e}")))?;
    parse_gcm_document(&text)
}

pub fn gcm_document(cartan: &CartanData) -> GcmFile {
    GcmFile { name: cartan.name().unwrap_or("").to_string(), matrix: cartan.rows() }
}
