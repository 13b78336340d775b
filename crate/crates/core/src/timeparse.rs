//! Timestamp parsing for dump metadata and talk-page wikitext.
//!
//! Everything is normalized to UTC seconds since the epoch. Talk pages mix
//! several date styles; [`parse_wiki_date`] tries the common ones in a
//! fixed order and returns `None` for anything unparseable (callers drop
//! such rows with a warning).

use chrono::{NaiveDate, NaiveDateTime, TimeZone, Utc};

/// Parse an ISO-8601 dump timestamp such as `2006-03-01T12:00:00Z`.
pub fn parse_dump_timestamp(s: &str) -> Option<i64> {
    let s = s.trim();
    if let Ok(dt) = chrono::DateTime::parse_from_rfc3339(s) {
        return Some(dt.timestamp());
    }
    NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S")
        .ok()
        .map(|ndt| Utc.from_utc_datetime(&ndt).timestamp())
}

/// Parse the date styles seen in milestone rows and signatures.
///
/// Accepted forms, tried in order:
/// - `14:02, 3 June 2022 (UTC)` (default signature format)
/// - `14:02, June 3, 2022 (UTC)`
/// - `3 June 2022` / `June 3, 2022`
/// - `2022-06-03` / full ISO-8601
pub fn parse_wiki_date(s: &str) -> Option<i64> {
    let s = s.trim().trim_end_matches("(UTC)").trim();
    if s.is_empty() {
        return None;
    }
    const DT_FORMATS: &[&str] = &[
        "%H:%M, %e %B %Y",
        "%H:%M, %B %e, %Y",
        "%H:%M %e %B %Y",
        "%Y-%m-%dT%H:%M:%S",
        "%Y-%m-%d %H:%M:%S",
    ];
    for fmt in DT_FORMATS {
        if let Ok(ndt) = NaiveDateTime::parse_from_str(s, fmt) {
            return Some(Utc.from_utc_datetime(&ndt).timestamp());
        }
    }
    const D_FORMATS: &[&str] = &["%e %B %Y", "%B %e, %Y", "%Y-%m-%d", "%e %b %Y", "%b %e, %Y"];
    for fmt in D_FORMATS {
        if let Ok(nd) = NaiveDate::parse_from_str(s, fmt) {
            let ndt = nd.and_hms_opt(0, 0, 0)?;
            return Some(Utc.from_utc_datetime(&ndt).timestamp());
        }
    }
    None
}

/// UTC epoch seconds of `Dec 31 23:59:59` of the given year (censoring
/// boundary: promotions strictly after this instant are censored).
pub fn end_of_year(year: i32) -> i64 {
    Utc.with_ymd_and_hms(year, 12, 31, 23, 59, 59)
        .single()
        .expect("valid end-of-year timestamp")
        .timestamp()
}

/// Calendar year (UTC) of an epoch timestamp.
pub fn year_of(ts: i64) -> i32 {
    use chrono::Datelike;
    chrono::DateTime::<Utc>::from_timestamp(ts, 0)
        .map(|dt| dt.year())
        .unwrap_or(1970)
}

/// Epoch seconds for a UTC calendar date, midnight.
pub fn ymd(year: i32, month: u32, day: u32) -> i64 {
    Utc.with_ymd_and_hms(year, month, day, 0, 0, 0)
        .single()
        .expect("valid date")
        .timestamp()
}

/// Epoch seconds for a UTC calendar date and time.
pub fn ymd_hms(year: i32, month: u32, day: u32, h: u32, m: u32, s: u32) -> i64 {
    Utc.with_ymd_and_hms(year, month, day, h, m, s)
        .single()
        .expect("valid datetime")
        .timestamp()
}

/// Render an epoch timestamp in the default talk-page signature style.
pub fn format_signature_timestamp(ts: i64) -> String {
    let dt = chrono::DateTime::<Utc>::from_timestamp(ts, 0).expect("valid ts");
    // e.g. "14:02, 3 June 2022 (UTC)"
    dt.format("%H:%M, %-d %B %Y (UTC)").to_string()
}

/// Render an epoch timestamp as a dump-style ISO-8601 string.
pub fn format_dump_timestamp(ts: i64) -> String {
    let dt = chrono::DateTime::<Utc>::from_timestamp(ts, 0).expect("valid ts");
    dt.format("%Y-%m-%dT%H:%M:%SZ").to_string()
}
