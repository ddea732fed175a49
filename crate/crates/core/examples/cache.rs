//! The on-disk character cache: a cold run stores, a warm run loads.
use hitstab::cli::cache::FileCache;
use hitstab::combinat::Partition;
use hitstab::functor_eval::{CharacterStore, SimpleCharacters};

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("hitstab-example-cache");
    let lambda: Partition = "3,2,1".parse().unwrap();
    let cold = SimpleCharacters::with_store(Box::new(FileCache::open(&dir)?));
    println!("computed: {}", cold.get(&lambda).unwrap());
    let warm = FileCache::open(&dir)?;
    println!(
        "loaded from {}: {:?}",
        warm.path().display(),
        warm.load(&lambda).map(|c| c.to_string())
    );
    Ok(())
}
