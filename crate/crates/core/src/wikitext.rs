//! Minimal wikitext template scanning.
//!
//! Dump wikitext is messy; this module knows just enough to find template
//! invocations (`{{Name |a=b |c}}`), including ones nested inside other
//! templates' parameters, and to split their top-level parameters. No
//! rendering, no magic words.

/// One template invocation found in a page text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    /// Normalized name: trimmed, underscores as spaces, inner whitespace
    /// collapsed, lowercase.
    pub name: String,
    /// Positional (`None`) and named parameters in source order. Keys are
    /// trimmed lowercase; values are trimmed raw wikitext.
    pub params: Vec<(Option<String>, String)>,
}

impl Template {
    /// Last value for a named parameter (later duplicates win, matching
    /// MediaWiki behavior).
    pub fn named(&self, key: &str) -> Option<&str> {
        self.params
            .iter()
            .rev()
            .find(|(k, _)| k.as_deref() == Some(key))
            .map(|(_, v)| v.as_str())
    }

    /// Positional parameter by 1-based index.
    pub fn positional(&self, index: usize) -> Option<&str> {
        self.params
            .iter()
            .filter(|(k, _)| k.is_none())
            .nth(index.checked_sub(1)?)
            .map(|(_, v)| v.as_str())
    }
}

/// Normalize a template or project name for comparison.
pub fn normalize_name(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    let mut pending_space = false;
    for ch in raw.trim().chars() {
        let ch = if ch == '_' { ' ' } else { ch };
        if ch.is_whitespace() {
            pending_space = true;
        } else {
            if pending_space && !out.is_empty() {
                out.push(' ');
            }
            pending_space = false;
            for lc in ch.to_lowercase() {
                out.push(lc);
            }
        }
    }
    out
}

/// Scan `text` for all template invocations, nested ones included.
pub fn extract_templates(text: &str) -> Vec<Template> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut opens: Vec<usize> = Vec::new();
    let mut i = 0;
    while i + 1 < bytes.len() {
        if bytes[i] == b'{' && bytes[i + 1] == b'{' {
            opens.push(i);
            i += 2;
        } else if bytes[i] == b'}' && bytes[i + 1] == b'}' {
            if let Some(start) = opens.pop() {
                if let Some(t) = parse_invocation(&text[start + 2..i]) {
                    out.push((start, t));
                }
            }
            i += 2;
        } else {
            i += 1;
        }
    }
    // Emit in document order of the opening braces so "latest wins"
    // scans behave predictably.
    out.sort_by_key(|(start, _)| *start);
    out.into_iter().map(|(_, t)| t).collect()
}

/// Split the inside of `{{ ... }}` into name and top-level parameters.
fn parse_invocation(body: &str) -> Option<Template> {
    let mut parts: Vec<&str> = Vec::new();
    let bytes = body.as_bytes();
    let mut depth_brace = 0usize;
    let mut depth_link = 0usize;
    let mut last = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'{' if i + 1 < bytes.len() && bytes[i + 1] == b'{' => {
                depth_brace += 1;
                i += 2;
                continue;
            }
            b'}' if i + 1 < bytes.len() && bytes[i + 1] == b'}' => {
                depth_brace = depth_brace.saturating_sub(1);
                i += 2;
                continue;
            }
            b'[' if i + 1 < bytes.len() && bytes[i + 1] == b'[' => {
                depth_link += 1;
                i += 2;
                continue;
            }
            b']' if i + 1 < bytes.len() && bytes[i + 1] == b']' => {
                depth_link = depth_link.saturating_sub(1);
                i += 2;
                continue;
            }
            b'|' if depth_brace == 0 && depth_link == 0 => {
                parts.push(&body[last..i]);
                last = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&body[last..]);

    let name = normalize_name(parts[0]);
    if name.is_empty() {
        return None;
    }
    let mut params = Vec::with_capacity(parts.len().saturating_sub(1));
    for part in &parts[1..] {
        match split_param(part) {
            (Some(k), v) => params.push((Some(k), v)),
            (None, v) => params.push((None, v)),
        }
    }
    Some(Template { name, params })
}

/// `key=value` split at the first top-level `=`; no `=` means positional.
fn split_param(part: &str) -> (Option<String>, String) {
    let bytes = part.as_bytes();
    let mut depth_brace = 0usize;
    let mut depth_link = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'{' if i + 1 < bytes.len() && bytes[i + 1] == b'{' => {
                depth_brace += 1;
                i += 1;
            }
            b'}' if i + 1 < bytes.len() && bytes[i + 1] == b'}' => {
                depth_brace = depth_brace.saturating_sub(1);
                i += 1;
            }
            b'[' if i + 1 < bytes.len() && bytes[i + 1] == b'[' => {
                depth_link += 1;
                i += 1;
            }
            b']' if i + 1 < bytes.len() && bytes[i + 1] == b']' => {
                depth_link = depth_link.saturating_sub(1);
                i += 1;
            }
            b'=' if depth_brace == 0 && depth_link == 0 => {
                let key = part[..i].trim().to_lowercase();
                let value = part[i + 1..].trim().to_string();
                if key.is_empty() {
                    return (None, part.trim().to_string());
                }
                return (Some(key), value);
            }
            _ => {}
        }
        i += 1;
    }
    (None, part.trim().to_string())
}

/// True if any template in `text` normalizes to one of `aliases`
/// (aliases must already be normalized).
pub fn contains_template(text: &str, aliases: &[String]) -> bool {
    extract_templates(text)
        .iter()
        .any(|t| aliases.iter().any(|a| *a == t.name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_and_nested_templates() {
        let text = "x {{Good article}} y {{WikiProject banner shell|1=\n{{WikiProject Plants|importance=High|class=GA}}\n}} z";
        let ts = extract_templates(text);
        let names: Vec<_> = ts.iter().map(|t| t.name.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "good article",
                "wikiproject banner shell",
                "wikiproject plants"
            ]
        );
        let plants = &ts[2];
        assert_eq!(plants.named("importance"), Some("High"));
        assert_eq!(plants.named("class"), Some("GA"));
    }

    #[test]
    fn name_normalization_handles_case_underscores_whitespace() {
        assert_eq!(normalize_name("  Featured_ article "), "featured article");
        assert_eq!(normalize_name("FEATURED\tARTICLE"), "featured article");
    }

    #[test]
    fn positional_params_and_equals_in_links() {
        let ts = extract_templates("{{GA|14:02, 3 June 2006 (UTC)|page=1}}");
        assert_eq!(ts[0].positional(1), Some("14:02, 3 June 2006 (UTC)"));
        assert_eq!(ts[0].named("page"), Some("1"));

        let ts = extract_templates("{{note|[[Special:Diff/1=2|x]]}}");
        assert_eq!(ts[0].positional(1), Some("[[Special:Diff/1=2|x]]"));
    }

    #[test]
    fn contains_template_matches_messy_spacing() {
        let aliases = vec!["featured article".to_string()];
        assert!(contains_template("{{ featured   article }}", &aliases));
        assert!(contains_template("{{Featured_article|small=yes}}", &aliases));
        assert!(!contains_template("{{featured list}}", &aliases));
    }

    #[test]
    fn unbalanced_braces_do_not_panic() {
        let _ = extract_templates("{{unclosed |a=b");
        let _ = extract_templates("}} {{x}} {{");
    }
}
