//! Streaming parser for `pages-meta-history` MediaWiki XML dumps.
//!
//! Pages are yielded one at a time; peak memory is bounded by the largest
//! single page history, never by the dump. Decompression is the caller's
//! concern: hand the parser any `BufRead`.

use std::io::BufRead;

use quick_xml::events::Event;
use quick_xml::Reader;

use super::{sort_canonical, Editor, PageHistory, RevisionRecord, NS_ARTICLE, NS_TALK};
use crate::{Error, Result};

/// Iterator over `<page>` elements of a history dump.
///
/// Yields one [`PageHistory`] fragment per page in namespaces 0 and 1
/// (articles fill `article_revisions`, talk pages fill `talk_revisions`);
/// all other namespaces are skipped. Revisions arrive sorted canonically.
/// Suppressed revision texts are kept as empty strings with the
/// `suppressed` flag set; revisions without a timestamp are dropped with
/// a warning.
pub struct DumpParser<R: BufRead> {
    reader: Reader<R>,
    buf: Vec<u8>,
    finished: bool,
}

impl<R: BufRead> DumpParser<R> {
    pub fn new(source: R) -> Self {
        let mut reader = Reader::from_reader(source);
        reader.config_mut().expand_empty_elements = false;
        DumpParser {
            reader,
            buf: Vec::with_capacity(8 * 1024),
            finished: false,
        }
    }

    fn xml_err(&self, e: impl std::fmt::Display) -> Error {
        Error::DumpXml {
            offset: self.reader.buffer_position(),
            message: e.to_string(),
        }
    }

    /// Parse the next `<page>` element, or `None` at end of stream.
    fn next_page(&mut self) -> Result<Option<PageHistory>> {
        loop {
            self.buf.clear();
            let event = self
                .reader
                .read_event_into(&mut self.buf)
                .map_err(|e| self.xml_err(e))?;
            match event {
                Event::Start(ref e) if e.local_name().as_ref() == b"page" => {
                    if let Some(page) = self.read_page()? {
                        return Ok(Some(page));
                    }
                    // Page was in a skipped namespace; keep scanning.
                }
                Event::Eof => {
                    self.finished = true;
                    return Ok(None);
                }
                _ => {}
            }
        }
    }

    /// Consume one `<page>...</page>`, returning `None` for namespaces
    /// other than 0 and 1.
    fn read_page(&mut self) -> Result<Option<PageHistory>> {
        let mut title = String::new();
        let mut namespace: i32 = i32::MIN;
        let mut page_id: u64 = 0;
        let mut revisions: Vec<RevisionRecord> = Vec::new();

        // Field currently collecting text, plus context flags: <id> occurs
        // under page, revision and contributor.
        let mut in_revision = false;
        let mut in_contributor = false;
        let mut rev = RevisionBuilder::default();
        let mut text_target: Option<Field> = None;
        let mut text_acc = String::new();

        loop {
            self.buf.clear();
            let event = self
                .reader
                .read_event_into(&mut self.buf)
                .map_err(|e| self.xml_err(e))?;
            match event {
                Event::Start(ref e) => {
                    let name = e.local_name();
                    match name.as_ref() {
                        b"revision" => {
                            in_revision = true;
                            rev = RevisionBuilder::default();
                        }
                        b"contributor" => {
                            in_contributor = true;
                            if attr_deleted(e) {
                                rev.contributor_deleted = true;
                            }
                        }
                        b"text" if in_revision => {
                            if attr_deleted(e) {
                                rev.text_deleted = true;
                            }
                            text_target = Some(Field::Text);
                            text_acc.clear();
                        }
                        b"comment" if in_revision => {
                            if attr_deleted(e) {
                                rev.comment_deleted = true;
                            }
                            text_target = Some(Field::Comment);
                            text_acc.clear();
                        }
                        other => {
                            if let Some(f) =
                                Field::for_element(other, in_revision, in_contributor)
                            {
                                text_target = Some(f);
                                text_acc.clear();
                            }
                        }
                    }
                }
                Event::Empty(ref e) => {
                    // e.g. <text deleted="deleted" /> or <comment deleted="deleted" />
                    match e.local_name().as_ref() {
                        b"text" if in_revision => {
                            if attr_deleted(e) {
                                rev.text_deleted = true;
                            }
                        }
                        b"comment" if in_revision => {
                            if attr_deleted(e) {
                                rev.comment_deleted = true;
                            }
                        }
                        b"contributor" if in_revision => {
                            if attr_deleted(e) {
                                rev.contributor_deleted = true;
                            }
                        }
                        _ => {}
                    }
                }
                Event::Text(ref t) => {
                    if text_target.is_some() {
                        let s = t.xml_content().map_err(|e| self.xml_err(e))?;
                        text_acc.push_str(&s);
                    }
                }
                Event::End(ref e) => {
                    let name = e.local_name();
                    match name.as_ref() {
                        b"page" => {
                            if namespace != NS_ARTICLE && namespace != NS_TALK {
                                return Ok(None);
                            }
                            sort_canonical(&mut revisions);
                            let mut page = PageHistory {
                                title,
                                ..PageHistory::default()
                            };
                            if namespace == NS_ARTICLE {
                                page.article_revisions = revisions;
                            } else {
                                page.talk_revisions = revisions;
                            }
                            return Ok(Some(page));
                        }
                        b"revision" => {
                            in_revision = false;
                            match rev.build(page_id, &title, namespace) {
                                Some(record) => revisions.push(record),
                                None => log::warn!(
                                    "skipping revision without timestamp in page {title:?}"
                                ),
                            }
                            rev = RevisionBuilder::default();
                        }
                        b"contributor" => in_contributor = false,
                        _ => {
                            if let Some(field) = text_target.take() {
                                store_field(
                                    field,
                                    &text_acc,
                                    &mut title,
                                    &mut namespace,
                                    &mut page_id,
                                    &mut rev,
                                    in_revision,
                                    in_contributor,
                                );
                            }
                        }
                    }
                    text_target = None;
                }
                Event::Eof => {
                    return Err(self.xml_err("unexpected end of file inside <page>"));
                }
                _ => {}
            }
        }
    }
}

impl<R: BufRead> Iterator for DumpParser<R> {
    type Item = Result<PageHistory>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        match self.next_page() {
            Ok(Some(page)) => Some(Ok(page)),
            Ok(None) => None,
            Err(e) => {
                self.finished = true;
                Some(Err(e))
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Field {
    Title,
    Namespace,
    PageId,
    RevId,
    ParentId,
    Timestamp,
    Username,
    Ip,
    Comment,
    Text,
}

impl Field {
    fn for_element(name: &[u8], in_revision: bool, in_contributor: bool) -> Option<Field> {
        match name {
            b"title" if !in_revision => Some(Field::Title),
            b"ns" if !in_revision => Some(Field::Namespace),
            b"id" if !in_revision && !in_contributor => Some(Field::PageId),
            b"id" if in_revision && !in_contributor => Some(Field::RevId),
            b"parentid" if in_revision => Some(Field::ParentId),
            b"timestamp" if in_revision => Some(Field::Timestamp),
            b"username" if in_contributor => Some(Field::Username),
            b"ip" if in_contributor => Some(Field::Ip),
            _ => None,
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn store_field(
    field: Field,
    value: &str,
    title: &mut String,
    namespace: &mut i32,
    page_id: &mut u64,
    rev: &mut RevisionBuilder,
    in_revision: bool,
    _in_contributor: bool,
) {
    match field {
        Field::Title => *title = value.trim().to_string(),
        Field::Namespace => *namespace = value.trim().parse().unwrap_or(i32::MIN),
        Field::PageId => *page_id = value.trim().parse().unwrap_or(0),
        Field::RevId if in_revision => rev.id = value.trim().parse().ok(),
        Field::ParentId if in_revision => rev.parent = value.trim().parse().ok(),
        Field::Timestamp if in_revision => {
            rev.timestamp = crate::timeparse::parse_dump_timestamp(value)
        }
        Field::Username if in_revision => rev.username = Some(value.to_string()),
        Field::Ip if in_revision => rev.ip = Some(value.to_string()),
        Field::Comment if in_revision => rev.comment = value.to_string(),
        Field::Text if in_revision => rev.text = value.to_string(),
        _ => {}
    }
}

fn attr_deleted(e: &quick_xml::events::BytesStart<'_>) -> bool {
    e.attributes()
        .flatten()
        .any(|a| a.key.local_name().as_ref() == b"deleted")
}

#[derive(Default)]
struct RevisionBuilder {
    id: Option<u64>,
    parent: Option<u64>,
    timestamp: Option<i64>,
    username: Option<String>,
    ip: Option<String>,
    contributor_deleted: bool,
    comment: String,
    comment_deleted: bool,
    text: String,
    text_deleted: bool,
}

impl RevisionBuilder {
    fn build(&mut self, page_id: u64, title: &str, namespace: i32) -> Option<RevisionRecord> {
        let timestamp = self.timestamp?;
        let editor = if self.contributor_deleted {
            // Suppressed contributor: keep the revision under a sentinel name.
            Editor::Registered(String::new())
        } else if let Some(name) = self.username.take() {
            Editor::Registered(name)
        } else if let Some(ip) = self.ip.take() {
            Editor::from_ip_or_name(&ip)
        } else {
            Editor::Registered(String::new())
        };
        let text = if self.text_deleted {
            String::new()
        } else {
            std::mem::take(&mut self.text)
        };
        let comment = if self.comment_deleted {
            String::new()
        } else {
            std::mem::take(&mut self.comment)
        };
        Some(
            RevisionRecord {
                page_id,
                title: title.to_string(),
                namespace,
                revision_id: self.id.unwrap_or(0),
                parent_revision_id: self.parent,
                timestamp,
                editor,
                comment,
                suppressed: self.text_deleted,
                text,
                content_hash: 0,
            }
            .seal(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_all(xml: &str) -> Vec<PageHistory> {
        DumpParser::new(std::io::Cursor::new(xml.as_bytes()))
            .collect::<Result<Vec<_>>>()
            .unwrap()
    }

    const TWO_PAGE_DUMP: &str = r#"<mediawiki xmlns="http://www.mediawiki.org/xml/export-0.11/" xml:lang="en">
  <siteinfo><sitename>Wikipedia</sitename><namespaces><namespace key="0"/></namespaces></siteinfo>
  <page>
    <title>Durian</title>
    <ns>0</ns>
    <id>8332</id>
    <revision>
      <id>11</id>
      <timestamp>2006-03-01T12:00:00Z</timestamp>
      <contributor><username>Alice</username><id>7</id></contributor>
      <comment>start</comment>
      <model>wikitext</model>
      <format>text/x-wiki</format>
      <text bytes="5" xml:space="preserve">one</text>
      <sha1>abc</sha1>
    </revision>
    <revision>
      <id>12</id>
      <parentid>11</parentid>
      <timestamp>2006-03-02T12:00:00Z</timestamp>
      <contributor><ip>10.0.0.1</ip></contributor>
      <text xml:space="preserve">two</text>
    </revision>
    <revision>
      <id>13</id>
      <parentid>12</parentid>
      <timestamp>2006-03-03T12:00:00Z</timestamp>
      <contributor><username>Bob</username><id>8</id></contributor>
      <text xml:space="preserve">three</text>
    </revision>
  </page>
  <page>
    <title>Talk:Durian</title>
    <ns>1</ns>
    <id>8333</id>
    <revision>
      <id>21</id>
      <timestamp>2006-04-01T00:00:00Z</timestamp>
      <contributor><username>Alice</username><id>7</id></contributor>
      <text xml:space="preserve">== Hi ==</text>
    </revision>
    <revision>
      <id>22</id>
      <timestamp>2006-04-02T00:00:00Z</timestamp>
      <contributor deleted="deleted" />
      <text deleted="deleted" />
    </revision>
    <revision>
      <id>23</id>
      <timestamp>2006-04-03T00:00:00Z</timestamp>
      <contributor><username>Bob</username><id>8</id></contributor>
      <text xml:space="preserve">more</text>
    </revision>
  </page>
</mediawiki>"#;

    #[test]
    fn two_page_fixture_yields_two_histories_with_three_revisions() {
        let pages = parse_all(TWO_PAGE_DUMP);
        assert_eq!(pages.len(), 2);
        assert_eq!(pages[0].title, "Durian");
        assert_eq!(pages[0].article_revisions.len(), 3);
        assert_eq!(pages[1].title, "Talk:Durian");
        assert_eq!(pages[1].talk_revisions.len(), 3);
        // Editors classified.
        assert!(matches!(
            pages[0].article_revisions[1].editor,
            Editor::Anonymous(_)
        ));
    }

    #[test]
    fn suppressed_text_kept_as_empty_revision() {
        let pages = parse_all(TWO_PAGE_DUMP);
        let suppressed = &pages[1].talk_revisions[1];
        assert!(suppressed.suppressed);
        assert_eq!(suppressed.text, "");
        assert_eq!(suppressed.content_hash, crate::hash::content_hash(""));
    }

    #[test]
    fn out_of_order_revisions_are_sorted() {
        let xml = r#"<mediawiki><page><title>X</title><ns>0</ns><id>1</id>
          <revision><id>5</id><timestamp>2006-01-02T00:00:00Z</timestamp>
            <contributor><username>A</username></contributor><text>b</text></revision>
          <revision><id>4</id><timestamp>2006-01-01T00:00:00Z</timestamp>
            <contributor><username>A</username></contributor><text>a</text></revision>
        </page></mediawiki>"#;
        let pages = parse_all(xml);
        let ids: Vec<u64> = pages[0]
            .article_revisions
            .iter()
            .map(|r| r.revision_id)
            .collect();
        assert_eq!(ids, vec![4, 5]);
    }

    #[test]
    fn other_namespaces_are_skipped() {
        let xml = r#"<mediawiki>
          <page><title>User:Y</title><ns>2</ns><id>9</id>
            <revision><id>1</id><timestamp>2006-01-01T00:00:00Z</timestamp>
              <contributor><username>A</username></contributor><text>x</text></revision>
          </page>
          <page><title>X</title><ns>0</ns><id>3</id>
            <revision><id>2</id><timestamp>2006-01-01T00:00:00Z</timestamp>
              <contributor><username>A</username></contributor><text>x</text></revision>
          </page>
        </mediawiki>"#;
        let pages = parse_all(xml);
        assert_eq!(pages.len(), 1);
        assert_eq!(pages[0].title, "X");
    }

    #[test]
    fn missing_timestamp_skips_revision() {
        let xml = r#"<mediawiki><page><title>X</title><ns>0</ns><id>1</id>
          <revision><id>1</id>
            <contributor><username>A</username></contributor><text>a</text></revision>
          <revision><id>2</id><timestamp>2006-01-01T00:00:00Z</timestamp>
            <contributor><username>A</username></contributor><text>b</text></revision>
        </page></mediawiki>"#;
        let pages = parse_all(xml);
        assert_eq!(pages[0].article_revisions.len(), 1);
        assert_eq!(pages[0].article_revisions[0].revision_id, 2);
    }

    #[test]
    fn malformed_xml_reports_offset() {
        let xml = "<mediawiki><page><title>X</title><ns>0</ns><id>1</id><revision></page></mediawiki>";
        let err = DumpParser::new(std::io::Cursor::new(xml.as_bytes()))
            .collect::<Result<Vec<_>>>()
            .unwrap_err();
        match err {
            Error::DumpXml { offset, .. } => assert!(offset > 0),
            other => panic!("expected DumpXml error, got {other:?}"),
        }
    }

    #[test]
    fn entities_in_text_are_decoded() {
        let xml = r#"<mediawiki><page><title>A &amp; B</title><ns>0</ns><id>1</id>
          <revision><id>1</id><timestamp>2006-01-01T00:00:00Z</timestamp>
            <contributor><username>A</username></contributor><text>x &lt; y</text></revision>
        </page></mediawiki>"#;
        let pages = parse_all(xml);
        assert_eq!(pages[0].title, "A & B");
        assert_eq!(pages[0].article_revisions[0].text, "x < y");
    }
}
