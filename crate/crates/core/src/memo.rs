use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Process-wide memo table. Values are computed outside the lock, so a
/// computation may itself consult other memo tables (or this one).
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: OnceLock::new(),
        }
    }

    fn table(&self) -> &RwLock<HashMap<K, V>> {
        self.map.get_or_init(|| RwLock::new(HashMap::new()))
    }

    pub(crate) fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self
            .table()
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&key)
        {
            return v.clone();
        }
        let value = compute();
        self.table()
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(value)
            .clone()
    }
}
