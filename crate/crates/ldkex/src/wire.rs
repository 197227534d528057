//! Plain-text wire formats: tree word records, exchange transcripts, and
//! Laver table dumps. Renderers are deterministic byte for byte; equal
//! inputs produce identical output, which is what the determinism checks
//! pin down.

use crate::error::{Error, Result};
use crate::eval::TreeWord;
use crate::kep::{shared_key_digest, Exchange};
use crate::laver::LaverTable;
use crate::magma::{OpId, Platform};
use crate::tree::TreeVector;

pub const TREEWORD_HEADER: &str = "ldkex-treeword v1";
pub const TRANSCRIPT_HEADER: &str = "ldkex-transcript v1";
pub const LAVER_HEADER: &str = "ldkex-laver v1";

pub fn to_hex(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

// --- tree word records ---

/// Render a tree word record. Leaf indices are one-based on the wire.
pub fn render_tree_word(word: &TreeWord) -> String {
    let ops = word
        .ops
        .iter()
        .map(|op| op.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let leaves = word
        .leaf_indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!(
        "{TREEWORD_HEADER}\nn: {}\nentries: {}\nops:{}{}\nleafIndices: {leaves}\n",
        word.tree.len(),
        word.tree,
        if ops.is_empty() { "" } else { " " },
        ops,
    )
}

fn take_field<'a>(lines: &mut std::str::Lines<'a>, key: &str) -> Result<&'a str> {
    let line = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))?;
    let (k, v) = line
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected \"{key}: ...\", got {line:?}")))?;
    if k != key {
        return Err(Error::Parse(format!("expected field {key:?}, got {k:?}")));
    }
    Ok(v.trim())
}

pub fn parse_tree_word(text: &str) -> Result<TreeWord> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().trim_end();
    if header != TREEWORD_HEADER {
        return Err(Error::Parse(format!("bad header {header:?}")));
    }
    let n: usize = take_field(&mut lines, "n")?
        .parse()
        .map_err(|_| Error::Parse("bad n".into()))?;
    let tree = TreeVector::parse(take_field(&mut lines, "entries")?)?;
    if tree.len() != n {
        return Err(Error::Parse(format!(
            "n is {n} but entries describe {} internal nodes",
            tree.len()
        )));
    }
    let ops = take_field(&mut lines, "ops")?
        .split_whitespace()
        .map(str::parse::<OpId>)
        .collect::<Result<Vec<_>>>()?;
    let leaf_indices = take_field(&mut lines, "leafIndices")?
        .split_whitespace()
        .map(|tok| {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad leaf index {tok:?}")))?;
            if i == 0 {
                return Err(Error::Parse("leaf indices are one-based".into()));
            }
            Ok(i - 1)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
    }
    TreeWord::new(tree, ops, leaf_indices)
}

// --- transcripts ---

fn join_elems<P: Platform>(platform: &P, elems: &[P::Elem]) -> String {
    elems
        .iter()
        .map(|e| platform.display_elem(e))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Render a full exchange transcript. Timing is deliberately absent: the
/// output depends only on the seeds, configuration, and platform.
pub fn render_transcript<P: Platform>(
    exchange: &Exchange<P>,
    seeds: (u64, u64, u64),
) -> Result<String> {
    let params = &exchange.params;
    let p = &params.platform;
    let anchor = params.anchor()?;
    let mut out = String::new();
    out.push_str(TRANSCRIPT_HEADER);
    out.push_str("\n\n[params]\n");
    out.push_str(&format!("platform: {}\n", p.describe()));
    out.push_str(&format!("seed.params: {}\n", seeds.0));
    out.push_str(&format!("seed.alice: {}\n", seeds.1));
    out.push_str(&format!("seed.bob: {}\n", seeds.2));
    out.push_str(&format!("gens.t: {}\n", join_elems(p, &params.gens_t)));
    out.push_str(&format!("gens.s: {}\n", join_elems(p, &params.gens_s)));
    out.push_str(&format!("anchor.tree: {}\n", params.anchor_word.tree));
    let anchor_ops = params
        .anchor_word
        .ops
        .iter()
        .map(|o| o.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!(
        "anchor.ops:{}{anchor_ops}\n",
        if anchor_ops.is_empty() { "" } else { " " }
    ));
    let anchor_leaves = params
        .anchor_word
        .leaf_indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!("anchor.leaves: {anchor_leaves}\n"));
    out.push_str(&format!("anchor.value: {}\n", p.display_elem(&anchor)));

    out.push_str("\n[alice_public]\n");
    out.push_str(&format!(
        "images.s: {}\n",
        join_elems(p, &exchange.alice_msg.images_s)
    ));

    out.push_str("\n[p0]\n");
    out.push_str(&format!(
        "value: {}\n",
        p.display_elem(&exchange.alice_msg.p0)
    ));

    out.push_str("\n[bob_public]\n");
    out.push_str(&format!(
        "images.t: {}\n",
        join_elems(p, &exchange.bob_msg.images_t)
    ));

    out.push_str("\n[K_A]\n");
    out.push_str(&format!("value: {}\n", p.display_elem(&exchange.key_alice)));
    out.push_str(&format!(
        "encoding: {}\n",
        to_hex(&exchange.key_alice_bytes)
    ));

    out.push_str("\n[K_B]\n");
    out.push_str(&format!("value: {}\n", p.display_elem(&exchange.key_bob)));
    out.push_str(&format!(
        "encoding: {}\n",
        to_hex(&exchange.key_bob_bytes)
    ));

    out.push_str("\n[verdict]\n");
    out.push_str(&format!("agree: {}\n", exchange.agreed()));
    if exchange.agreed() {
        out.push_str(&format!(
            "shared.digest: {}\n",
            to_hex(&shared_key_digest(&exchange.key_alice_bytes))
        ));
    }
    Ok(out)
}

/// A structurally parsed transcript: sections in order, each a list of
/// key/value entries. Values are kept as raw strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTranscript {
    pub sections: Vec<TranscriptSection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptSection {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl RawTranscript {
    pub fn section(&self, name: &str) -> Option<&TranscriptSection> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.section(section)?
            .entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// The verdict recorded in the transcript, if well formed.
    pub fn agreed(&self) -> Option<bool> {
        match self.get("verdict", "agree") {
            Some("true") => Some(true),
            Some("false") => Some(false),
            _ => None,
        }
    }
}

pub fn parse_transcript(text: &str) -> Result<RawTranscript> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().trim_end();
    if header != TRANSCRIPT_HEADER {
        return Err(Error::Parse(format!("bad header {header:?}")));
    }
    let mut sections: Vec<TranscriptSection> = Vec::new();
    for line in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("bad section name {name:?}")));
            }
            if sections.iter().any(|s| s.name == name) {
                return Err(Error::Parse(format!("duplicate section {name:?}")));
            }
            sections.push(TranscriptSection {
                name: name.to_string(),
                entries: Vec::new(),
            });
            continue;
        }
        let Some(section) = sections.last_mut() else {
            return Err(Error::Parse(format!("entry before any section: {line:?}")));
        };
        let (k, v) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected \"key: value\", got {line:?}")))?;
        let key = k.trim();
        if key.is_empty() {
            return Err(Error::Parse(format!("empty key in {line:?}")));
        }
        section
            .entries
            .push((key.to_string(), v.trim().to_string()));
    }
    if sections.is_empty() {
        return Err(Error::Parse("transcript has no sections".into()));
    }
    Ok(RawTranscript { sections })
}

// --- laver tables ---

/// Structured dump with one `row k:` line per carrier element.
pub fn render_laver_structured(table: &LaverTable) -> String {
    let mut out = format!(
        "{LAVER_HEADER}\nlevel: {}\nsize: {}\n",
        table.level(),
        table.size()
    );
    for k in 1..=table.size() {
        let row = table
            .row(k)
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!("row {k}: {row}\n"));
    }
    out
}
