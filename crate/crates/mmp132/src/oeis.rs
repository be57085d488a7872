//! OEIS sequences: b-file fetching with an on-disk cache, bundled fixtures
//! for offline runs, offset-tolerant comparison, and the registered claims
//! tying sequences to patterns.

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use mmp132_core::PatternSpec;

use crate::cache::atomic_write;
use crate::error::{Error, Result};
use crate::json::{int_string, parse_int, OeisFixtureJson};
use crate::shared::SharedGfEngine;

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const DEFAULT_TTL: Duration = Duration::from_secs(30 * 24 * 3600);
/// Offsets tried on either side when aligning two sequences.
pub const ALIGN_WINDOW: i64 = 3;
/// Overlap a comparison needs before it can count as a match.
pub const MIN_OVERLAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Network,
    Fixture,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Network => "network",
            Source::Fixture => "fixture",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisSequence {
    pub id: String,
    /// Index of the first term.
    pub offset: i64,
    pub terms: Vec<BigInt>,
    /// Seconds since the Unix epoch; 0 for bundled fixtures.
    pub fetched_at: u64,
    pub source: Source,
}

pub fn validate_id(id: &str) -> Result<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::BadOeisId(id.to_string()))
    }
}

const FIXTURES: [(&str, &str); 6] = [
    ("A000129", include_str!("../fixtures/oeis/A000129.json")),
    ("A000337", include_str!("../fixtures/oeis/A000337.json")),
    ("A052963", include_str!("../fixtures/oeis/A052963.json")),
    ("A077938", include_str!("../fixtures/oeis/A077938.json")),
    ("A083329", include_str!("../fixtures/oeis/A083329.json")),
    ("A116731", include_str!("../fixtures/oeis/A116731.json")),
];

/// Ids with a bundled fixture.
pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(id, _)| *id)
}

/// The bundled copy of `id`, if there is one.
pub fn fixture(id: &str) -> Result<Option<OeisSequence>> {
    let Some((_, text)) = FIXTURES.iter().find(|(f, _)| *f == id) else {
        return Ok(None);
    };
    let json: OeisFixtureJson = serde_json::from_str(text)?;
    Ok(Some(OeisSequence {
        id: json.id,
        offset: json.offset,
        terms: json
            .terms
            .iter()
            .map(|t| parse_int(t))
            .collect::<Result<_>>()?,
        fetched_at: 0,
        source: Source::Fixture,
    }))
}

/// Parse a b-file: lines `n a(n)`, with `#` comments and blank lines.
pub fn parse_bfile(id: &str, text: &str, fetched_at: u64) -> Result<OeisSequence> {
    let mut offset = None;
    let mut terms = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v)) = (parts.next(), parts.next()) else {
            return Err(unavailable(id, format!("malformed b-file line {line:?}")));
        };
        let n: i64 = n
            .parse()
            .map_err(|_| unavailable(id, format!("malformed index {n:?}")))?;
        let expected = offset.unwrap_or(n) + terms.len() as i64;
        if n != expected {
            return Err(unavailable(
                id,
                format!("b-file index {n} where {expected} was expected"),
            ));
        }
        offset.get_or_insert(n);
        terms.push(parse_int(v)?);
    }
    let Some(offset) = offset else {
        return Err(unavailable(id, "empty b-file".to_string()));
    };
    Ok(OeisSequence {
        id: id.to_string(),
        offset,
        terms,
        fetched_at,
        source: Source::Network,
    })
}

fn unavailable(id: &str, reason: String) -> Error {
    Error::OeisUnavailable {
        id: id.to_string(),
        reason,
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

#[derive(Debug, Serialize, Deserialize)]
struct CachedJson {
    id: String,
    offset: i64,
    terms: Vec<String>,
    fetched_at: u64,
    source: Source,
}

/// Fetches sequences from the network, a disk cache, or the fixtures.
#[derive(Debug, Clone)]
pub struct Client {
    pub cache_dir: Option<PathBuf>,
    pub offline: bool,
    pub ttl: Duration,
    pub base_url: String,
    pub timeout: Duration,
}

impl Default for Client {
    fn default() -> Self {
        Client {
            cache_dir: None,
            offline: false,
            ttl: DEFAULT_TTL,
            base_url: DEFAULT_BASE_URL.to_string(),
            timeout: Duration::from_secs(15),
        }
    }
}

impl Client {
    pub fn new(cache_dir: Option<PathBuf>, offline: bool) -> Self {
        Client {
            cache_dir,
            offline,
            ..Client::default()
        }
    }

    fn cache_path(&self, id: &str) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|d| d.join("oeis").join(format!("{id}.json")))
    }

    fn read_cache(&self, id: &str) -> Result<Option<OeisSequence>> {
        let Some(path) = self.cache_path(id) else {
            return Ok(None);
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        let json: CachedJson = serde_json::from_str(&text)?;
        if json.id != id || now().saturating_sub(json.fetched_at) > self.ttl.as_secs() {
            return Ok(None);
        }
        Ok(Some(OeisSequence {
            id: json.id,
            offset: json.offset,
            terms: json
                .terms
                .iter()
                .map(|t| parse_int(t))
                .collect::<Result<_>>()?,
            fetched_at: json.fetched_at,
            source: json.source,
        }))
    }

    fn write_cache(&self, seq: &OeisSequence) -> Result<()> {
        let Some(path) = self.cache_path(&seq.id) else {
            return Ok(());
        };
        let json = CachedJson {
            id: seq.id.clone(),
            offset: seq.offset,
            terms: seq.terms.iter().map(int_string).collect(),
            fetched_at: seq.fetched_at,
            source: seq.source,
        };
        atomic_write(&path, serde_json::to_string(&json)?.as_bytes())
    }

    fn download(&self, id: &str) -> Result<OeisSequence> {
        let url = format!(
            "{}/{}/b{}.txt",
            self.base_url.trim_end_matches('/'),
            id,
            &id[1..]
        );
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(self.timeout))
            .build()
            .into();
        let text = agent
            .get(&url)
            .call()
            .and_then(|mut r| r.body_mut().read_to_string())
            .map_err(|e| unavailable(id, e.to_string()))?;
        parse_bfile(id, &text, now())
    }

    /// Cache within the TTL, then the network unless offline, then the
    /// bundled fixture.
    pub fn fetch(&self, id: &str) -> Result<OeisSequence> {
        validate_id(id)?;
        if let Some(seq) = self.read_cache(id)? {
            return Ok(seq);
        }
        let network_error = if self.offline {
            "offline and no fixture is bundled".to_string()
        } else {
            match self.download(id) {
                Ok(seq) => {
                    self.write_cache(&seq)?;
                    return Ok(seq);
                }
                Err(e) => e.to_string(),
            }
        };
        match fixture(id)? {
            Some(seq) => Ok(seq),
            None => Err(unavailable(id, network_error)),
        }
    }
}

/// Overlap length and leading agreement of `a` (first index `a_start`)
/// against `b` (first index `b_start`) when `a`'s index `n` is paired with
/// `b`'s index `n + shift`.
pub fn alignment(
    a: &[BigInt],
    a_start: i64,
    b: &[BigInt],
    b_start: i64,
    shift: i64,
) -> (usize, usize) {
    let lo = a_start.max(b_start - shift);
    let hi = (a_start + a.len() as i64).min(b_start - shift + b.len() as i64);
    if hi <= lo {
        return (0, 0);
    }
    let pairs = (lo..hi).map(|n| {
        (
            &a[(n - a_start) as usize],
            &b[(n + shift - b_start) as usize],
        )
    });
    let agreement = pairs.take_while(|(x, y)| x == y).count();
    ((hi - lo) as usize, agreement)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub id: String,
    /// The computed term at index `n` is compared with `a(n + shift)`.
    pub shift: i64,
    pub overlap: usize,
    /// Number of leading overlapping terms that agree exactly.
    pub agreement: usize,
    pub is_match: bool,
}

/// Best alignment of `computed` (first index `start`) against `seq` within
/// `±window`. Matches win, then longer overlap, then smaller `|shift|`.
pub fn compare(computed: &[BigInt], start: i64, seq: &OeisSequence, window: i64) -> MatchReport {
    let mut best: Option<MatchReport> = None;
    for shift in -window..=window {
        let (overlap, agreement) = alignment(computed, start, &seq.terms, seq.offset, shift);
        let report = MatchReport {
            id: seq.id.clone(),
            shift,
            overlap,
            agreement,
            is_match: overlap >= MIN_OVERLAP && agreement == overlap,
        };
        let rank = |r: &MatchReport| {
            let score = if r.is_match { r.overlap } else { r.agreement };
            (r.is_match, score, core::cmp::Reverse(r.shift.abs()))
        };
        if best.as_ref().is_none_or(|b| rank(&report) > rank(b)) {
            best = Some(report);
        }
    }
    best.expect("window is non-empty")
}

/// What is read off `Q(t, x)` for a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extract {
    /// `Q_n(0)`.
    X0,
    /// The coefficient of `x^r` in `Q_n(x)`.
    Coeff(usize),
}

/// A registered identification of a pattern statistic with an OEIS entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisClaim {
    pub id: &'static str,
    pub pattern: PatternSpec,
    pub extract: Extract,
    pub from_n: usize,
    pub description: &'static str,
}

pub fn claims() -> Vec<OeisClaim> {
    let claim = |id, p: [u32; 4], extract, from_n, description| OeisClaim {
        id,
        pattern: PatternSpec::from(p),
        extract,
        from_n,
        description,
    };
    vec![
        claim("A000129", [1, 0, 2, 0], Extract::X0, 1, "Pell numbers"),
        claim(
            "A052963",
            [2, 0, 2, 0],
            Extract::X0,
            1,
            "a(n) = 3a(n-1) - a(n-3)",
        ),
        claim(
            "A077938",
            [1, 0, 3, 0],
            Extract::X0,
            1,
            "a(n) = 2a(n-1) + a(n-2) + 2a(n-3)",
        ),
        claim(
            "A000337",
            [1, 0, 1, 0],
            Extract::Coeff(1),
            3,
            "(n-1)2^n + 1",
        ),
        claim("A083329", [2, 0, 0, 1], Extract::X0, 1, "3 * 2^(n-1) - 1"),
        claim("A116731", [0, 2, 0, 1], Extract::X0, 1, "n(n^2 - 3n + 5)/3"),
    ]
}

/// The computed terms for `claim`, `n = from_n ..= order`.
pub fn claim_terms(claim: &OeisClaim, engine: &SharedGfEngine) -> Result<Vec<BigInt>> {
    let series = engine.series(&claim.pattern)?;
    Ok(series.coeffs()[claim.from_n..]
        .iter()
        .map(|row| match claim.extract {
            Extract::X0 => row.coeff(0),
            Extract::Coeff(r) => row.coeff(r),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: OeisClaim,
    pub source: Source,
    pub report: MatchReport,
}

/// Compare every claim with its sequence. Claims are independent, so an
/// unreachable sequence fails only its own claim.
pub fn check_claims(
    client: &Client,
    engine: &SharedGfEngine,
) -> Vec<(OeisClaim, Result<ClaimReport>)> {
    claims()
        .into_iter()
        .map(|claim| {
            let result = (|| {
                let seq = client.fetch(claim.id)?;
                let terms = claim_terms(&claim, engine)?;
                let report = compare(&terms, claim.from_n as i64, &seq, ALIGN_WINDOW);
                Ok(ClaimReport {
                    claim: claim.clone(),
                    source: seq.source,
                    report,
                })
            })();
            (claim, result)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::{Read, Write};
    use std::net::TcpListener;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn seq(id: &str, offset: i64, terms: &[i64]) -> OeisSequence {
        OeisSequence {
            id: id.into(),
            offset,
            terms: ints(terms),
            fetched_at: 0,
            source: Source::Fixture,
        }
    }

    #[test]
    fn ids_are_validated() {
        assert!(validate_id("A000129").is_ok());
        for bad in ["A00012", "a000129", "A0001290", "B000129", "A00012x"] {
            assert!(
                matches!(validate_id(bad), Err(Error::BadOeisId(_))),
                "{bad}"
            );
        }
        assert!(matches!(
            Client::new(None, true).fetch("A00012"),
            Err(Error::BadOeisId(_))
        ));
    }

    #[test]
    fn every_claim_has_a_fixture_with_enough_terms() {
        for c in claims() {
            let f = fixture(c.id).unwrap().unwrap();
            assert_eq!(f.id, c.id);
            assert!(f.terms.len() >= 20);
        }
        assert_eq!(fixture_ids().count(), claims().len());
    }

    #[test]
    fn offline_fetch_uses_fixture() {
        let s = Client::new(None, true).fetch("A052963").unwrap();
        assert_eq!(s.source, Source::Fixture);
        assert_eq!(s.terms[..6], ints(&[1, 2, 5, 14, 40, 115])[..]);
        let missing = Client::new(None, true).fetch("A999999");
        assert!(matches!(missing, Err(Error::OeisUnavailable { .. })));
    }

    #[test]
    fn pell_fixture_prefix() {
        let s = fixture("A000129").unwrap().unwrap();
        assert_eq!(s.terms[..7], ints(&[0, 1, 2, 5, 12, 29, 70])[..]);
        for w in s.terms.windows(3) {
            assert_eq!(w[2], BigInt::from(2) * &w[1] + &w[0]);
        }
    }

    #[test]
    fn bfile_parsing() {
        let s = parse_bfile(
            "A000004",
            "# comment\n\n3 7\n4 -8\n5 123456789012345678901234567890\n",
            9,
        )
        .unwrap();
        assert_eq!(s.offset, 3);
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[2].to_string(), "123456789012345678901234567890");
        assert!(parse_bfile("A000004", "1 2\n3 4\n", 0).is_err());
        assert!(parse_bfile("A000004", "# only comments\n", 0).is_err());
    }

    #[test]
    fn comparison_finds_shift() {
        let target = seq("A000337", 0, &[0, 1, 5, 17, 49, 129, 321, 769, 1793, 4097]);
        let computed = ints(&[1, 5, 17, 49, 129, 321, 769]);
        let r = compare(&computed, 3, &target, ALIGN_WINDOW);
        assert!(r.is_match);
        assert_eq!((r.shift, r.overlap, r.agreement), (-2, 7, 7));

        let off = ints(&[1, 5, 17, 49, 130, 321, 769]);
        let r = compare(&off, 3, &target, ALIGN_WINDOW);
        assert!(!r.is_match);
        assert_eq!(r.agreement, 4);

        let short = ints(&[1, 5, 17, 49, 129]);
        assert!(!compare(&short, 3, &target, ALIGN_WINDOW).is_match);

        let far = compare(&computed, 10, &target, ALIGN_WINDOW);
        assert!(!far.is_match);
    }

    #[test]
    fn overlap_is_symmetric() {
        let a = ints(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let b = ints(&[3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13]);
        for a_start in -2..4 {
            for b_start in -2..4 {
                for shift in -5..=5 {
                    let (o1, g1) = alignment(&a, a_start, &b, b_start, shift);
                    let (o2, _) = alignment(&b, b_start, &a, a_start, -shift);
                    assert_eq!(o1, o2);
                    assert!(g1 <= o1);
                }
            }
        }
    }

    #[test]
    fn claims_match_fixtures() {
        let client = Client::new(None, true);
        let engine = SharedGfEngine::new(20);
        for (claim, result) in check_claims(&client, &engine) {
            let r = result.unwrap();
            assert!(r.report.is_match, "{}: {:?}", claim.id, r.report);
            assert!(r.report.overlap >= 8);
        }
    }

    /// Serves `body` for every request and counts the requests.
    fn serve(body: &'static str) -> (String, Arc<AtomicUsize>) {
        let listener = TcpListener::bind("127.0.0.1:0").unwrap();
        let addr = listener.local_addr().unwrap();
        let hits = Arc::new(AtomicUsize::new(0));
        let counter = hits.clone();
        std::thread::spawn(move || {
            for stream in listener.incoming() {
                let Ok(mut stream) = stream else { break };
                let mut buf = [0u8; 4096];
                let _ = stream.read(&mut buf);
                counter.fetch_add(1, Ordering::SeqCst);
                let reply = format!(
                    "HTTP/1.1 200 OK\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                    body.len(),
                    body
                );
                let _ = stream.write_all(reply.as_bytes());
            }
        });
        (format!("http://{addr}"), hits)
    }

    #[test]
    fn network_fetch_is_cached_within_ttl() {
        let (url, hits) = serve("0 0\n1 1\n2 2\n3 5\n4 12\n5 29\n6 70\n");
        let dir = tempfile::tempdir().unwrap();
        let client = Client {
            base_url: url,
            ..Client::new(Some(dir.path().to_path_buf()), false)
        };
        let first = client.fetch("A000129").unwrap();
        assert_eq!(first.source, Source::Network);
        assert_eq!(first.terms, ints(&[0, 1, 2, 5, 12, 29, 70]));
        let second = client.fetch("A000129").unwrap();
        assert_eq!(first, second);
        assert_eq!(hits.load(Ordering::SeqCst), 1);

        let expired = Client {
            ttl: Duration::ZERO,
            ..client.clone()
        };
        std::thread::sleep(Duration::from_millis(1100));
        expired.fetch("A000129").unwrap();
        assert_eq!(hits.load(Ordering::SeqCst), 2);
    }

    #[test]
    fn network_failure_falls_back_to_fixture() {
        let client = Client {
            base_url: "http://127.0.0.1:1".to_string(),
            timeout: Duration::from_secs(2),
            ..Client::new(None, false)
        };
        assert_eq!(client.fetch("A052963").unwrap().source, Source::Fixture);
        assert!(matches!(
            client.fetch("A999999"),
            Err(Error::OeisUnavailable { .. })
        ));
    }
}
