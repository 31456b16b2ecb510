use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Thread-safe memo table for pure functions of basis data. The lock is not
/// held while a value is computed, so computations may recurse into the table.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Copy, V> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get_or(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = Arc::new(compute());
        self.map
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert(v)
            .clone()
    }
}

impl<K, V> fmt::Debug for Memo<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Memo")
    }
}
