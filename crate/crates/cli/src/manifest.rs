use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Provenance of one CLI run, written next to the CSV it describes.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command_line: String,
    pub params: Vec<(String, String)>,
    pub version: String,
    pub elapsed_seconds: f64,
    /// SHA-256 of the CSV bytes, lowercase hex.
    pub digest: String,
}

pub fn digest_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(command_line: String, params: Vec<(String, String)>, elapsed_seconds: f64, csv: &[u8]) -> Self {
        RunManifest {
            command_line,
            params,
            version: format!("smarand {}", env!("CARGO_PKG_VERSION")),
            elapsed_seconds,
            digest: digest_hex(csv),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command_line);
        let _ = writeln!(s, "version: {}", self.version);
        let _ = writeln!(s, "elapsed_seconds: {:.3}", self.elapsed_seconds);
        let _ = writeln!(s, "sha256: {}", self.digest);
        for (k, v) in &self.params {
            let _ = writeln!(s, "param.{k}: {v}");
        }
        s
    }

    /// `<output>.manifest`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".manifest");
        PathBuf::from(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_known_input() {
        assert_eq!(digest_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn sidecar_path() {
        assert_eq!(RunManifest::path_for(Path::new("out/n.csv")), PathBuf::from("out/n.csv.manifest"));
    }

    #[test]
    fn render_lists_params() {
        let m = RunManifest::new("smarand eval --n 9".into(), vec![("n".into(), "9".into())], 0.25, b"x");
        let r = m.render();
        assert!(r.contains("param.n: 9"));
        assert!(r.contains(&format!("sha256: {}", digest_hex(b"x"))));
    }
}
