use std::io::{self, Write};
use std::path::Path;

use tempfile::NamedTempFile;

/// Where data goes: standard output for `-`, otherwise a file replaced
/// atomically so readers never observe a partial write.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sink {
    Stdout,
    File(std::path::PathBuf),
}

impl Sink {
    pub fn parse(s: &str) -> Self {
        if s == "-" {
            Sink::Stdout
        } else {
            Sink::File(s.into())
        }
    }

    pub fn write(&self, bytes: &[u8], stdout: &mut dyn Write) -> io::Result<()> {
        match self {
            Sink::Stdout => {
                stdout.write_all(bytes)?;
                stdout.flush()
            }
            Sink::File(path) => write_atomic(path, bytes),
        }
    }
}

/// Writes to a sibling temporary file and renames it over `path`. The
/// temporary is removed on any failure.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Fixed six-decimal rendering with negative zero folded to zero.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.strip_prefix('-')
        .is_some_and(|rest| rest.bytes().all(|b| b == b'0' || b == b'.'))
    {
        s[1..].to_string()
    } else {
        s
    }
}
