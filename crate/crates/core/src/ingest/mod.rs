//! Dump ingestion: revision records, page histories, and status lists.

pub mod fetch;
pub mod jsonl;
pub mod lists;
pub mod pair;
pub mod store;
pub mod xml;

pub use fetch::{fetch_category_titles, fetch_status_lists, RateLimitedHttp, Transport};
pub use jsonl::{read_jsonl, write_jsonl};
pub use lists::{load_title_list, normalize_title, StatusLists};
pub use pair::{pair_article_talk, PairedCorpus};
pub use store::{page_file_name, read_page_file, read_pages_dir, write_pages_dir};
pub use xml::DumpParser;

use serde::{Deserialize, Serialize};

use crate::hash::content_hash;

pub const NS_ARTICLE: i32 = 0;
pub const NS_TALK: i32 = 1;

/// Which classification use case a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UseCase {
    Fa,
    Ga,
}

impl UseCase {
    pub fn as_str(self) -> &'static str {
        match self {
            UseCase::Fa => "fa",
            UseCase::Ga => "ga",
        }
    }
}

impl std::str::FromStr for UseCase {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fa" => Ok(UseCase::Fa),
            "ga" => Ok(UseCase::Ga),
            other => Err(crate::Error::invalid(format!(
                "unknown use case {other:?}, expected \"fa\" or \"ga\""
            ))),
        }
    }
}

/// The account behind one revision.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "name", rename_all = "snake_case")]
pub enum Editor {
    Registered(String),
    /// IP-only edit; the string is a valid IPv4/IPv6 address.
    Anonymous(String),
}

impl Editor {
    /// Classify a contributor string: valid IP addresses become anonymous
    /// editors, everything else is treated as a registered account.
    pub fn from_ip_or_name(raw: &str) -> Editor {
        if raw.parse::<std::net::IpAddr>().is_ok() {
            Editor::Anonymous(raw.to_string())
        } else {
            Editor::Registered(raw.to_string())
        }
    }

    pub fn is_registered(&self) -> bool {
        matches!(self, Editor::Registered(_))
    }

    pub fn name(&self) -> &str {
        match self {
            Editor::Registered(n) | Editor::Anonymous(n) => n,
        }
    }

    /// Registered account name, if any.
    pub fn registered_name(&self) -> Option<&str> {
        match self {
            Editor::Registered(n) => Some(n.as_str()),
            Editor::Anonymous(_) => None,
        }
    }
}

/// One revision of an article or talk page.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevisionRecord {
    pub page_id: u64,
    pub title: String,
    pub namespace: i32,
    pub revision_id: u64,
    #[serde(default)]
    pub parent_revision_id: Option<u64>,
    /// UTC seconds since epoch.
    pub timestamp: i64,
    pub editor: Editor,
    #[serde(default)]
    pub comment: String,
    /// Set when the dump suppressed/deleted the revision text; the text is
    /// kept as the empty string so revision counts stay intact.
    #[serde(default)]
    pub suppressed: bool,
    #[serde(default)]
    pub text: String,
    /// 64-bit digest of `text`; always recomputed on ingest.
    #[serde(default)]
    pub content_hash: u64,
}

impl RevisionRecord {
    pub fn seal(mut self) -> RevisionRecord {
        self.content_hash = content_hash(&self.text);
        self
    }
}

/// An article's revision history paired with its talk page's.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PageHistory {
    pub title: String,
    /// Namespace-0 revisions, ascending by (timestamp, revision_id).
    pub article_revisions: Vec<RevisionRecord>,
    /// Namespace-1 revisions, ascending by (timestamp, revision_id).
    pub talk_revisions: Vec<RevisionRecord>,
}

impl PageHistory {
    /// Timestamp of the first article revision.
    pub fn t_birth(&self) -> Option<i64> {
        self.article_revisions.first().map(|r| r.timestamp)
    }

    pub fn sort_revisions(&mut self) {
        sort_canonical(&mut self.article_revisions);
        sort_canonical(&mut self.talk_revisions);
    }
}

/// Canonical revision order: ascending (timestamp, revision_id).
pub fn sort_canonical(revisions: &mut [RevisionRecord]) {
    revisions.sort_by(|a, b| {
        (a.timestamp, a.revision_id).cmp(&(b.timestamp, b.revision_id))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn editor_classification() {
        assert_eq!(
            Editor::from_ip_or_name("192.168.2.1"),
            Editor::Anonymous("192.168.2.1".into())
        );
        assert_eq!(
            Editor::from_ip_or_name("2001:db8::1"),
            Editor::Anonymous("2001:db8::1".into())
        );
        assert_eq!(
            Editor::from_ip_or_name("Alice"),
            Editor::Registered("Alice".into())
        );
        // Legacy dumps occasionally put non-IP strings in the ip slot.
        assert_eq!(
            Editor::from_ip_or_name("Conversion script"),
            Editor::Registered("Conversion script".into())
        );
    }

    #[test]
    fn canonical_sort_orders_by_time_then_id() {
        let mk = |id: u64, ts: i64| RevisionRecord {
            page_id: 1,
            title: "X".into(),
            namespace: 0,
            revision_id: id,
            parent_revision_id: None,
            timestamp: ts,
            editor: Editor::Registered("A".into()),
            comment: String::new(),
            suppressed: false,
            text: String::new(),
            content_hash: 0,
        };
        let mut revs = vec![mk(3, 20), mk(2, 10), mk(1, 10)];
        sort_canonical(&mut revs);
        let ids: Vec<u64> = revs.iter().map(|r| r.revision_id).collect();
        assert_eq!(ids, vec![1, 2, 3]);
    }
}
