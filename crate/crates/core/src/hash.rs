//! Stable content digests.
//!
//! Revision texts get a fixed 64-bit FNV-1a digest (stable across builds
//! and platforms, unlike `DefaultHasher`), which backs both identity-revert
//! detection and serialized-output determinism. Larger artifacts (files,
//! stage inputs) use SHA-256.

use sha2::{Digest, Sha256};

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a over raw bytes.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h = FNV_OFFSET;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Digest used for `RevisionRecord::content_hash`.
pub fn content_hash(text: &str) -> u64 {
    fnv1a64(text.as_bytes())
}

/// Hex SHA-256 of a byte slice.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        use std::fmt::Write;
        let _ = write!(s, "{b:02x}");
    }
    s
}

/// Hex SHA-256 of a file's contents.
pub fn sha256_file(path: &std::path::Path) -> crate::Result<String> {
    use std::io::Read;
    let mut f = std::fs::File::open(path)
        .map_err(|e| crate::Error::io(path.display().to_string(), e))?;
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 64 * 1024];
    loop {
        let n = f
            .read(&mut buf)
            .map_err(|e| crate::Error::io(path.display().to_string(), e))?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    let out = hasher.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        use std::fmt::Write;
        let _ = write!(s, "{b:02x}");
    }
    Ok(s)
}
