//! Append-only on-disk store of simple characters.
//!
//! One line per weight: `p=2 d=<d> lambda=<parts> mu=<parts> coeff=<n> check=<hex>`,
//! where `check` is a truncated SHA-256 of everything before it. Lines with
//! a bad checksum are ignored; a character is served only if every weight
//! `μ ⊴ λ` has a valid line, and the last valid line for a key wins.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use sha2::{Digest, Sha256};

use crate::combinat::{enumerate_partitions, Partition};
use crate::functor_eval::CharacterStore;
use crate::g0::Character;

pub const CACHE_FILE: &str = "simple_characters.txt";

type Table = HashMap<Partition, BTreeMap<Partition, u64>>;

pub struct FileCache {
    path: PathBuf,
    table: Mutex<Table>,
}

fn checksum(payload: &str) -> String {
    let digest = Sha256::digest(payload.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn payload(lambda: &Partition, mu: &Partition, coeff: u64) -> String {
    format!(
        "p=2 d={} lambda={} mu={} coeff={}",
        lambda.size(),
        lambda,
        mu,
        coeff
    )
}

/// Formats one record, checksum included.
pub fn format_record(lambda: &Partition, mu: &Partition, coeff: u64) -> String {
    let body = payload(lambda, mu, coeff);
    let check = checksum(&body);
    format!("{body} check={check}")
}

/// Parses and validates one record.
pub fn parse_record(line: &str) -> Option<(Partition, Partition, u64)> {
    let (body, check) = line.trim_end().rsplit_once(" check=")?;
    if checksum(body) != check {
        return None;
    }
    let mut fields = HashMap::new();
    for field in body.split(' ') {
        let (key, value) = field.split_once('=')?;
        fields.insert(key, value);
    }
    if fields.get("p") != Some(&"2") {
        return None;
    }
    let d: usize = fields.get("d")?.parse().ok()?;
    let lambda: Partition = fields.get("lambda")?.parse().ok()?;
    let mu: Partition = fields.get("mu")?.parse().ok()?;
    let coeff: u64 = fields.get("coeff")?.parse().ok()?;
    (lambda.size() == d && mu.size() == d).then_some((lambda, mu, coeff))
}

impl FileCache {
    /// Opens (creating if needed) the cache in `dir` and reads every valid record.
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut table = Table::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if let Some((lambda, mu, coeff)) = parse_record(&line) {
                    table.entry(lambda).or_default().insert(mu, coeff);
                }
            }
        }
        Ok(Self {
            path,
            table: Mutex::new(table),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn append(&self, lines: &str) -> io::Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.write_all(lines.as_bytes())?;
        file.flush()
    }
}

impl CharacterStore for FileCache {
    fn load(&self, lambda: &Partition) -> Option<Character> {
        let table = self.table.lock().expect("cache table poisoned");
        let records = table.get(lambda)?;
        let mut chi = Character::zero(lambda.size());
        for mu in enumerate_partitions(lambda.size(), lambda.len()) {
            if !mu.dominated_by(lambda) {
                continue;
            }
            chi.set(&mu, *records.get(&mu)?);
        }
        (chi.coefficient(lambda) == 1).then_some(chi)
    }

    fn store(&self, lambda: &Partition, chi: &Character) {
        let mut table = self.table.lock().expect("cache table poisoned");
        let mut lines = String::new();
        let entry = table.entry(lambda.clone()).or_default();
        for mu in enumerate_partitions(lambda.size(), lambda.len()) {
            if !mu.dominated_by(lambda) {
                continue;
            }
            let c = chi.coefficient(&mu);
            entry.insert(mu.clone(), c);
            lines.push_str(&format_record(lambda, &mu, c));
            lines.push('\n');
        }
        // holding the table lock serializes appends from this process
        if let Err(err) = self.append(&lines) {
            eprintln!(
                "warning: could not write {}: {err}; continuing in memory",
                self.path.display()
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor_eval::{simple_character, SimpleCharacters};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn records_round_trip() {
        let line = format_record(&part("2,1"), &part("1,1,1"), 2);
        assert!(line.starts_with("p=2 d=3 lambda=2,1 mu=1,1,1 coeff=2 check="));
        assert_eq!(parse_record(&line), Some((part("2,1"), part("1,1,1"), 2)));
        let tampered = line.replace("coeff=2", "coeff=3");
        assert_eq!(parse_record(&tampered), None);
        assert_eq!(parse_record("garbage"), None);
        assert_eq!(parse_record(&line[..line.len() - 3]), None);
    }

    #[test]
    fn warm_cache_serves_identical_characters() {
        let dir = tempfile::tempdir().unwrap();
        let lambda = part("3,1");
        let cold = {
            let table =
                SimpleCharacters::with_store(Box::new(FileCache::open(dir.path()).unwrap()));
            (*table.get(&lambda).unwrap()).clone()
        };
        let contents = fs::read_to_string(dir.path().join(CACHE_FILE)).unwrap();
        assert!(contents.lines().count() >= 4);
        let cache = FileCache::open(dir.path()).unwrap();
        assert_eq!(cache.load(&lambda), Some(cold.clone()));
        assert_eq!(cold, simple_character(&lambda).unwrap());
    }

    #[test]
    fn corrupted_records_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let lambda = part("2,1");
        {
            let cache = FileCache::open(dir.path()).unwrap();
            cache.store(&lambda, &simple_character(&lambda).unwrap());
        }
        let path = dir.path().join(CACHE_FILE);
        let contents = fs::read_to_string(&path).unwrap();
        fs::write(&path, contents.replace("coeff=2", "coeff=5")).unwrap();
        let cache = FileCache::open(dir.path()).unwrap();
        assert_eq!(cache.load(&lambda), None);
        let table = SimpleCharacters::with_store(Box::new(cache));
        assert_eq!(
            *table.get(&lambda).unwrap(),
            simple_character(&lambda).unwrap()
        );
        let cache = FileCache::open(dir.path()).unwrap();
        assert_eq!(
            cache.load(&lambda),
            Some(simple_character(&lambda).unwrap())
        );
    }

    #[test]
    fn last_valid_record_wins() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        let lines = [
            format_record(&part("2"), &part("2"), 1),
            format_record(&part("2"), &part("1,1"), 1),
            format_record(&part("2"), &part("1,1"), 0),
        ];
        fs::write(&path, lines.join("\n")).unwrap();
        let cache = FileCache::open(dir.path()).unwrap();
        assert_eq!(cache.load(&part("2")).unwrap().to_string(), "m(2)");
    }
}
