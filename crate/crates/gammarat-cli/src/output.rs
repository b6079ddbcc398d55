//! Reproducible file output: every document embeds a manifest with the exact
//! command, parameters, precision, library version and a checksum of the data
//! payload, so a re-run can be byte-compared.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    pub version: String,
    pub checksum: String,
}

impl RunManifest {
    pub fn new(command: &str, params: BTreeMap<String, String>, precision: Option<u32>) -> Self {
        Self {
            command: command.to_string(),
            params,
            precision,
            version: env!("CARGO_PKG_VERSION").to_string(),
            checksum: String::new(),
        }
    }
}

pub fn sha256_hex(data: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// JSON document: `{"manifest": …, <payload fields>}` with the checksum taken
/// over the canonical serialization of the payload alone.
pub fn json_document(
    mut manifest: RunManifest,
    payload: serde_json::Map<String, serde_json::Value>,
) -> serde_json::Value {
    let payload_bytes =
        serde_json::to_vec(&serde_json::Value::Object(payload.clone())).expect("serializable");
    manifest.checksum = sha256_hex(&payload_bytes);
    let mut doc = serde_json::Map::new();
    doc.insert(
        "manifest".to_string(),
        serde_json::to_value(&manifest).expect("serializable"),
    );
    for (k, v) in payload {
        doc.insert(k, v);
    }
    serde_json::Value::Object(doc)
}

/// CSV document: `#`-prefixed manifest comment lines, then the quoted table.
/// The checksum covers the table bytes (header row included).
pub fn csv_document(
    mut manifest: RunManifest,
    extra_comments: &[String],
    header: &[&str],
    rows: &[Vec<String>],
) -> String {
    let mut table = Vec::new();
    {
        let mut writer = csv::Writer::from_writer(&mut table);
        writer.write_record(header).expect("csv header");
        for row in rows {
            writer.write_record(row).expect("csv row");
        }
        writer.flush().expect("csv flush");
    }
    manifest.checksum = sha256_hex(&table);

    let mut out = String::new();
    out.push_str(&format!("# command: {}\n", manifest.command));
    for (k, v) in &manifest.params {
        out.push_str(&format!("# param: {k}={v}\n"));
    }
    if let Some(p) = manifest.precision {
        out.push_str(&format!("# precision: {p}\n"));
    }
    out.push_str(&format!("# version: {}\n", manifest.version));
    for line in extra_comments {
        out.push_str(&format!("# {line}\n"));
    }
    out.push_str(&format!("# checksum: sha256:{}\n", manifest.checksum));
    out.push_str(std::str::from_utf8(&table).expect("csv is utf-8"));
    out
}

/// Writes to the path, or to stdout when no path is given.
pub fn emit(output: Option<&Path>, content: &str) -> std::io::Result<()> {
    match output {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}
