//! Output plumbing: every file (or stdout stream) this tool emits starts
//! with a comment header recording the full command line, the seed, and the
//! artifact version, so any run can be reproduced from its output alone.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

pub struct OutputTarget {
    writer: BufWriter<Box<dyn Write>>,
    path: Option<PathBuf>,
}

impl OutputTarget {
    /// Opens `path`, or stdout when absent.
    pub fn create(path: Option<&Path>) -> io::Result<Self> {
        let (writer, path) = match path {
            Some(p) => (
                Box::new(File::create(p)?) as Box<dyn Write>,
                Some(p.to_path_buf()),
            ),
            None => (Box::new(io::stdout()) as Box<dyn Write>, None),
        };
        Ok(OutputTarget {
            writer: BufWriter::new(writer),
            path,
        })
    }

    /// Writes the provenance header. `extra` lines are appended verbatim
    /// after the standard fields, each as its own comment.
    pub fn header(&mut self, seed: Option<u64>, extra: &[String]) -> io::Result<()> {
        let cmd: Vec<String> = std::env::args().collect();
        writeln!(self.writer, "# cmd: {}", cmd.join(" "))?;
        if let Some(s) = seed {
            writeln!(self.writer, "# seed: {s}")?;
        }
        writeln!(self.writer, "# version: {}", env!("CARGO_PKG_VERSION"))?;
        for line in extra {
            writeln!(self.writer, "# {line}")?;
        }
        Ok(())
    }

    pub fn writer(&mut self) -> &mut dyn Write {
        &mut self.writer
    }

    pub fn finish(mut self) -> io::Result<Option<PathBuf>> {
        self.writer.flush()?;
        Ok(self.path)
    }
}

/// Densities and other unit-interval reals are printed with 10 significant
/// digits.
pub fn fmt_density(x: f64) -> String {
    format!("{x:.10}")
}

/// Inf-aware formatting for the upper vertex-count bound.
pub fn fmt_bound(x: f64) -> String {
    if x.is_infinite() {
        "inf".to_string()
    } else {
        format!("{x:.4}")
    }
}
