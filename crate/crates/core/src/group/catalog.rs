/// Known groups used to name enumerated groups of a matching order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub order: u64,
    pub solvable: bool,
    /// `None` where the perfectness is not recorded.
    pub perfect: Option<bool>,
}

const fn entry(name: &'static str, order: u64, solvable: bool, perfect: Option<bool>) -> CatalogEntry {
    CatalogEntry { name, order, solvable, perfect }
}

pub const CATALOG: &[CatalogEntry] = &[
    entry("A5", 60, false, Some(true)),
    entry("PSL(2,7)", 168, false, Some(true)),
    entry("A6", 360, false, Some(true)),
    entry("A7", 2520, false, Some(true)),
    entry("PSU(3,5)", 126_000, false, Some(true)),
    entry("5^2:(5^2:(SL(2,5):2))", 150_000, false, Some(false)),
    entry("5^5:A5", 187_500, false, None),
    entry("PSL(3,5)", 372_000, false, Some(true)),
    entry("5^5:S5", 375_000, false, Some(false)),
    entry("PSL(3,7)", 1_876_896, false, Some(true)),
    entry("PSU(3,7)", 5_663_616, false, Some(true)),
];

/// Every catalog entry of the given order. Entries whose recorded flags
/// contradict the computed ones are marked, so ambiguity stays visible.
pub fn identify(order: u64, solvable: Option<bool>, perfect: Option<bool>) -> Vec<String> {
    CATALOG
        .iter()
        .filter(|e| e.order == order)
        .map(|e| {
            let clash = solvable.is_some_and(|s| s != e.solvable)
                || matches!((perfect, e.perfect), (Some(a), Some(b)) if a != b);
            if clash {
                format!("{} (flags differ)", e.name)
            } else {
                e.name.to_string()
            }
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}
