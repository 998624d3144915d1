//! The known categories of noncrossing partitions and of the group case.
//!
//! Each [`Family`] is a parametrised generator list with its expected case,
//! colorization and (in the group case) the associated matrix group.
//! [`catalog`] instantiates every family over a parameter range, and
//! [`match_catalog`] finds the entries whose slices agree with a given one.

use std::collections::HashMap;
use std::fmt;

use crate::base;
use crate::category::{
    generate_closure, slices_equal, CategorySlice, Case, ClosureError, Colorization,
};
use crate::error::PartitionError;
use crate::partition::{Color, ColoredPartition};
use crate::sample::{GroupKind, GroupSpec};

use Color::{Black as B, White as W};

/// Which list an entry comes from. Ordering is the listing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    /// Globally colorized noncrossing categories.
    GlobalNoncrossing,
    /// Locally colorized noncrossing categories.
    LocalNoncrossing,
    /// The seven free orthogonal quantum groups, as two-colored categories.
    FreeOrthogonal,
    /// Categories containing the crossing.
    GroupCase,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::GlobalNoncrossing => "global-noncrossing",
            Source::LocalNoncrossing => "local-noncrossing",
            Source::FreeOrthogonal => "free-orthogonal",
            Source::GroupCase => "group-case",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    OGlob,
    HGlob,
    SGlob,
    BGlob,
    BpGlob,
    OLoc,
    HpLoc,
    HLoc,
    SLoc,
    BLoc,
    /// `B'_loc(k, d, r)` with `r = 0` or `r = d/2`.
    BpLoc,
    OnPlus,
    HnPlus,
    SnPlus,
    SpnPlus,
    BnPlus,
    BpnPlus,
    BsharpnPlus,
    OgrpGlob,
    OgrpLoc,
    HgrpGlob,
    HgrpLoc,
    SgrpGlob,
    BgrpGlob,
    BgrpLoc,
}

pub const FAMILIES: [Family; 25] = [
    Family::OGlob,
    Family::HGlob,
    Family::SGlob,
    Family::BGlob,
    Family::BpGlob,
    Family::OLoc,
    Family::HpLoc,
    Family::HLoc,
    Family::SLoc,
    Family::BLoc,
    Family::BpLoc,
    Family::OnPlus,
    Family::HnPlus,
    Family::SnPlus,
    Family::SpnPlus,
    Family::BnPlus,
    Family::BpnPlus,
    Family::BsharpnPlus,
    Family::OgrpGlob,
    Family::OgrpLoc,
    Family::HgrpGlob,
    Family::HgrpLoc,
    Family::SgrpGlob,
    Family::BgrpGlob,
    Family::BgrpLoc,
];

fn even(k: usize) -> bool {
    k % 2 == 0
}

/// `d | k` in the sense "k is a multiple of d", so `d = 0` forces `k = 0`.
fn divides(d: usize, k: usize) -> bool {
    if d == 0 {
        k == 0
    } else {
        k % d == 0
    }
}

fn not_in(x: usize, bad: &[usize]) -> bool {
    !bad.contains(&x)
}

impl Family {
    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            OGlob => "O_glob",
            HGlob => "H_glob",
            SGlob => "S_glob",
            BGlob => "B_glob",
            BpGlob => "Bp_glob",
            OLoc => "O_loc",
            HpLoc => "Hp_loc",
            HLoc => "H_loc",
            SLoc => "S_loc",
            BLoc => "B_loc",
            BpLoc => "Bp_loc",
            OnPlus => "O_n+",
            HnPlus => "H_n+",
            SnPlus => "S_n+",
            SpnPlus => "Sp_n+",
            BnPlus => "B_n+",
            BpnPlus => "Bp_n+",
            BsharpnPlus => "Bsharp_n+",
            OgrpGlob => "Ogrp_glob",
            OgrpLoc => "Ogrp_loc",
            HgrpGlob => "Hgrp_glob",
            HgrpLoc => "Hgrp_loc",
            SgrpGlob => "Sgrp_glob",
            BgrpGlob => "Bgrp_glob",
            BgrpLoc => "Bgrp_loc",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        FAMILIES.iter().copied().find(|f| f.name() == name)
    }

    pub fn arity(self) -> usize {
        use Family::*;
        match self {
            OLoc | HpLoc | OgrpLoc | OnPlus | HnPlus | SnPlus | SpnPlus | BnPlus | BpnPlus
            | BsharpnPlus => 0,
            HLoc | SLoc | BLoc | HgrpLoc => 2,
            BpLoc => 3,
            _ => 1,
        }
    }

    pub fn source(self) -> Source {
        use Family::*;
        match self {
            OGlob | HGlob | SGlob | BGlob | BpGlob => Source::GlobalNoncrossing,
            OLoc | HpLoc | HLoc | SLoc | BLoc | BpLoc => Source::LocalNoncrossing,
            OnPlus | HnPlus | SnPlus | SpnPlus | BnPlus | BpnPlus | BsharpnPlus => {
                Source::FreeOrthogonal
            }
            _ => Source::GroupCase,
        }
    }

    pub fn case(self) -> Case {
        use Family::*;
        match self {
            OGlob | OLoc | OnPlus | OgrpGlob | OgrpLoc => Case::O,
            HGlob | HpLoc | HLoc | HnPlus | HgrpGlob | HgrpLoc => Case::H,
            SGlob | SLoc | SnPlus | SpnPlus | SgrpGlob => Case::S,
            BGlob | BpGlob | BLoc | BpLoc | BnPlus | BpnPlus | BsharpnPlus | BgrpGlob
            | BgrpLoc => Case::B,
        }
    }

    pub fn colorization(self) -> Colorization {
        use Family::*;
        match self {
            OLoc | HpLoc | HLoc | SLoc | BLoc | BpLoc | OgrpLoc | HgrpLoc | BgrpLoc => {
                Colorization::Local
            }
            _ => Colorization::Global,
        }
    }

    /// The entry of the global list a free orthogonal entry coincides with.
    pub fn free_orthogonal_target(self) -> Option<(Family, Vec<usize>)> {
        use Family::*;
        Some(match self {
            OnPlus => (OGlob, vec![2]),
            HnPlus => (HGlob, vec![2]),
            SnPlus => (SGlob, vec![1]),
            SpnPlus => (SGlob, vec![2]),
            BnPlus => (BpGlob, vec![1]),
            BpnPlus => (BpGlob, vec![2]),
            BsharpnPlus => (BGlob, vec![2]),
            _ => return None,
        })
    }

    /// Whether `params` satisfy the side conditions of the family.
    pub fn valid(self, params: &[usize]) -> bool {
        use Family::*;
        if params.len() != self.arity() {
            return false;
        }
        match self {
            OGlob | HGlob | BGlob | OgrpGlob | HgrpGlob | BgrpGlob => even(params[0]),
            SGlob | BpGlob | SgrpGlob | BgrpLoc => true,
            HLoc | HgrpLoc => {
                let (k, d) = (params[0], params[1]);
                not_in(k, &[1, 2]) && not_in(d, &[1, 2]) && divides(d, k)
            }
            SLoc => {
                let (k, d) = (params[0], params[1]);
                k != 1 && d != 1 && divides(d, k)
            }
            BLoc => divides(params[1], params[0]),
            BpLoc => {
                let (k, d, r) = (params[0], params[1], params[2]);
                if r == 0 {
                    k != 1 && d != 1 && divides(d, k)
                } else {
                    k != 1 && d >= 4 && even(d) && r == d / 2 && divides(d, k)
                }
            }
            _ => true,
        }
    }

    /// Parameters `(k, 0, ..)` that the side conditions exclude but that
    /// denote the same category as `(k, k, ..)`, since the generators for
    /// `d = k` follow from the singletons or one-block partition of `k` points.
    fn alias_params(self, params: &[usize]) -> Option<Vec<usize>> {
        use Family::*;
        let k = params[0];
        if k == 0 || params.get(1) != Some(&0) {
            return None;
        }
        let target = match self {
            HLoc | SLoc | BLoc => vec![k, k],
            BpLoc if params[2] == 0 => vec![k, k, 0],
            _ => return None,
        };
        self.valid(&target).then_some(target)
    }

    /// The generators for `params` without checking side conditions.
    pub fn generators_unchecked(self, params: &[usize]) -> Vec<ColoredPartition> {
        use Family::*;
        let p = |i: usize| params.get(i).copied().unwrap_or(0);
        let k = p(0);
        let id_wb = base::identity(W, B);
        let crossing = base::crossing_white();
        let mut gens = match self {
            OGlob => vec![base::white_pairs(k / 2), base::global_pairs()],
            HGlob => vec![base::b(k), base::four_block_wbwb(), base::global_pairs()],
            SGlob => vec![
                base::singletons(k, W),
                base::four_block_wbwb(),
                base::singleton_pair(),
                base::global_pairs(),
            ],
            BGlob => vec![base::singletons(k, W), base::singleton_pair(), base::global_pairs()],
            BpGlob => vec![
                base::singletons(k, W),
                base::positioner(1),
                base::singleton_pair(),
                base::global_pairs(),
            ],
            OLoc => vec![],
            HpLoc => vec![base::four_block_wbwb()],
            HLoc => vec![
                base::b(k),
                base::b(p(1)).tensor(&base::b_tilde(p(1))),
                base::four_block_wwbb(),
                base::four_block_wbwb(),
            ],
            SLoc => vec![
                base::singletons(k, W),
                base::positioner(p(1)),
                base::four_block_wbwb(),
                base::singleton_pair(),
            ],
            BLoc => vec![base::singletons(k, W), base::positioner(p(1)), base::singleton_pair()],
            BpLoc => vec![
                base::singletons(k, W),
                base::positioner(p(1)),
                if p(2) == 0 { base::positioner_wbwb() } else { base::positioner_shifted(p(2)) },
                base::singleton_pair(),
            ],
            OnPlus => vec![id_wb],
            HnPlus => vec![id_wb, base::four_block_wbwb()],
            SnPlus => vec![id_wb, base::four_block_wbwb(), base::singleton(W)],
            SpnPlus => vec![id_wb, base::four_block_wbwb(), base::singleton_pair()],
            BnPlus => vec![id_wb, base::singleton(W)],
            BpnPlus => vec![id_wb, base::positioner(1)],
            BsharpnPlus => vec![id_wb, base::singleton_pair()],
            OgrpGlob => vec![base::nested_pair(k / 2), base::global_pairs(), crossing],
            OgrpLoc => vec![crossing],
            HgrpGlob => {
                vec![base::b(k), base::four_block_wbwb(), base::global_pairs(), crossing]
            }
            HgrpLoc => vec![
                base::b(k),
                base::b(p(1)).tensor(&base::b_tilde(p(1))),
                base::four_block_wbwb(),
                crossing,
            ],
            SgrpGlob => vec![
                base::singletons(k, W),
                base::four_block_wbwb(),
                base::singleton_pair(),
                base::global_pairs(),
                crossing,
            ],
            BgrpGlob => vec![
                base::singletons(k, W),
                base::singleton_pair(),
                base::global_pairs(),
                crossing,
            ],
            BgrpLoc => vec![base::singletons(k, W), base::singleton_pair(), crossing],
        };
        gens.retain(|g| !g.is_empty());
        gens
    }

    /// The matrix group of a group-case family.
    pub fn group(self, params: &[usize]) -> Option<GroupSpec> {
        use Family::*;
        let k = params.first().copied().unwrap_or(1);
        let (kind, twist) = match self {
            OgrpGlob => (GroupKind::Orthogonal, k),
            OgrpLoc => (GroupKind::Unitary, 1),
            HgrpGlob => (GroupKind::Hyperoctahedral, k),
            HgrpLoc => (GroupKind::WreathCyclic(params[1]), k),
            SgrpGlob => (GroupKind::Symmetric, k),
            BgrpGlob => (GroupKind::Bistochastic, k),
            BgrpLoc => (GroupKind::UnitaryBistochastic, k),
            _ => return None,
        };
        Some(GroupSpec { kind, twist })
    }

    /// Builds the entry for `params`, checking side conditions. The `(k, 0)`
    /// forms of the local families are accepted as aliases of `(k, k)`.
    pub fn instantiate(self, params: &[usize]) -> Result<CatalogEntry, PartitionError> {
        if params.len() != self.arity() {
            return Err(PartitionError::InvalidParameter(format!(
                "{} takes {} parameter(s), got {}",
                self.name(),
                self.arity(),
                params.len()
            )));
        }
        let alias_of = if self.valid(params) {
            self.free_orthogonal_target()
        } else {
            match self.alias_params(params) {
                Some(target) => Some((self, target)),
                None => {
                    return Err(PartitionError::InvalidParameter(format!(
                        "{} does not satisfy the side conditions of {}",
                        render_params(params),
                        self.name()
                    )))
                }
            }
        };
        Ok(self.instantiate_unchecked(params, alias_of))
    }

    fn instantiate_unchecked(
        self,
        params: &[usize],
        alias_of: Option<(Family, Vec<usize>)>,
    ) -> CatalogEntry {
        let global_parameter = match self.free_orthogonal_target() {
            Some((_, t)) => t[0] as u64,
            None => params.first().copied().unwrap_or(0) as u64,
        };
        CatalogEntry {
            family: self,
            params: params.to_vec(),
            generators: self.generators_unchecked(params),
            case: self.case(),
            colorization: self.colorization(),
            source: self.source(),
            global_parameter,
            alias_of,
            group: self.group(params),
        }
    }
}

fn render_params(params: &[usize]) -> String {
    let inner: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    pub params: Vec<usize>,
    pub generators: Vec<ColoredPartition>,
    pub case: Case,
    pub colorization: Colorization,
    pub source: Source,
    /// The global parameter the category is known to have.
    pub global_parameter: u64,
    /// Another entry denoting the same category, if any.
    pub alias_of: Option<(Family, Vec<usize>)>,
    pub group: Option<GroupSpec>,
}

impl CatalogEntry {
    /// `S_glob(3)`, `Bp_loc(4,4,2)`, `O_loc`.
    pub fn name(&self) -> String {
        if self.params.is_empty() {
            self.family.name().to_string()
        } else {
            format!("{}{}", self.family.name(), render_params(&self.params))
        }
    }

    fn sort_key(&self) -> (Source, &'static str, Vec<usize>) {
        (self.source, self.family.name(), self.params.clone())
    }

    /// Whether the two entries are known to denote the same category.
    pub fn same_category(&self, other: &CatalogEntry) -> bool {
        let canon = |e: &CatalogEntry| -> (Family, Vec<usize>) {
            e.alias_of.clone().unwrap_or((e.family, e.params.clone()))
        };
        canon(self) == canon(other)
    }

    /// Largest generator, in points.
    pub fn max_generator_size(&self) -> usize {
        self.generators.iter().map(|g| g.size()).max().unwrap_or(0)
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Parses `S_glob(3)`, `S_glob:3`, `Bp_loc(4,4,2)`, `Bp_loc:4,4,2` or a
/// parameterless name such as `O_loc`.
pub fn parse_entry_name(text: &str) -> Result<CatalogEntry, PartitionError> {
    let text = text.trim();
    let (name, params) = if let Some(open) = text.find('(') {
        let inner = text[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| PartitionError::UnknownName(text.to_string()))?;
        (&text[..open], inner)
    } else if let Some((name, rest)) = text.split_once(':') {
        (name, rest)
    } else {
        (text, "")
    };
    let family =
        Family::from_name(name).ok_or_else(|| PartitionError::UnknownName(name.to_string()))?;
    let params: Vec<usize> = if params.trim().is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|s| {
                s.trim().parse().map_err(|_| {
                    PartitionError::InvalidParameter(format!("bad parameter {s:?} in {text}"))
                })
            })
            .collect::<Result<_, _>>()?
    };
    family.instantiate(&params)
}

/// Every valid entry with all parameters in `0..=max_param`, aliases
/// included, sorted by source, name and parameters.
pub fn catalog(max_param: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for family in FAMILIES {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..family.arity() {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..=max_param).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out.extend(tuples.iter().filter_map(|t| family.instantiate(t).ok()));
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Default parameter range of [`match_catalog`].
pub const DEFAULT_MAX_PARAM: usize = 6;

/// Slices of catalog entries, keyed by entry name and bounds.
#[derive(Default)]
pub struct SliceCache {
    slices: HashMap<(String, usize, usize), CategorySlice>,
}

impl SliceCache {
    pub fn new() -> SliceCache {
        SliceCache::default()
    }

    pub fn get(
        &mut self,
        entry: &CatalogEntry,
        p_max: usize,
        i_max: usize,
    ) -> Result<&CategorySlice, ClosureError> {
        let key = (entry.name(), p_max, i_max);
        if !self.slices.contains_key(&key) {
            let slice = generate_closure(&entry.generators, p_max, i_max)?;
            self.slices.insert(key.clone(), slice);
        }
        Ok(&self.slices[&key])
    }

    /// A slice generated earlier, without generating.
    pub fn cached(&self, entry: &CatalogEntry, p_max: usize, i_max: usize) -> Option<&CategorySlice> {
        self.slices.get(&(entry.name(), p_max, i_max))
    }
}

/// Catalog entries whose slice at the bounds of `slice` equals it.
pub fn match_catalog(slice: &CategorySlice) -> Vec<CatalogEntry> {
    match_catalog_with(slice, &catalog(DEFAULT_MAX_PARAM), &mut SliceCache::new())
}

/// As [`match_catalog`] over the given entries, reusing cached slices.
/// Entries with a generator larger than `I_max` cannot be compared and are
/// skipped.
pub fn match_catalog_with(
    slice: &CategorySlice,
    entries: &[CatalogEntry],
    cache: &mut SliceCache,
) -> Vec<CatalogEntry> {
    let (p_max, i_max) = (slice.p_max(), slice.i_max());
    let case = slice.classify_case();
    let colorization = slice.colorization();
    let mut out = Vec::new();
    for entry in entries {
        if entry.case != case || entry.colorization != colorization {
            continue;
        }
        if entry.max_generator_size() > i_max {
            continue;
        }
        let gens_present = entry
            .generators
            .iter()
            .filter(|g| g.size() <= p_max)
            .all(|g| slice.contains(g).unwrap_or(false));
        if !gens_present {
            continue;
        }
        let Ok(other) = cache.get(entry, p_max, i_max) else {
            continue;
        };
        if slices_equal(slice, other, p_max).unwrap_or(false) {
            out.push(entry.clone());
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for e in catalog(4) {
            let parsed = parse_entry_name(&e.name()).unwrap();
            assert_eq!(parsed, e);
        }
        assert_eq!(parse_entry_name("S_glob:3").unwrap().name(), "S_glob(3)");
        assert_eq!(parse_entry_name("Bp_loc:4,4,2").unwrap().name(), "Bp_loc(4,4,2)");
        assert!(parse_entry_name("H_loc(2,2)").is_err());
        assert!(parse_entry_name("O_glob(3)").is_err());
        assert!(parse_entry_name("Q_loc").is_err());
    }

    #[test]
    fn side_conditions() {
        assert!(Family::HLoc.valid(&[0, 3]));
        assert!(Family::HLoc.valid(&[6, 3]));
        assert!(!Family::HLoc.valid(&[3, 6]));
        assert!(!Family::BLoc.valid(&[3, 0]));
        let alias = Family::BLoc.instantiate(&[3, 0]).unwrap();
        assert_eq!(alias.alias_of, Some((Family::BLoc, vec![3, 3])));
        assert!(Family::BpLoc.valid(&[4, 4, 2]));
        assert!(!Family::BpLoc.valid(&[2, 2, 1]));
        assert!(!Family::BpLoc.valid(&[4, 4, 1]));
    }

    #[test]
    fn listing_is_sorted_and_unique() {
        let entries = catalog(3);
        let names: Vec<String> = entries.iter().map(|e| e.name()).collect();
        let mut dedup = names.clone();
        dedup.dedup();
        assert_eq!(names, dedup);
        assert!(entries.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));
        assert!(names.contains(&"O_loc".to_string()));
        assert!(names.contains(&"Bgrp_loc(3)".to_string()));
    }

    #[test]
    fn empty_matches_o_loc() {
        let slice = generate_closure(&[], 6, 10).unwrap();
        let names: Vec<String> = match_catalog(&slice).iter().map(|e| e.name()).collect();
        assert_eq!(names, ["O_loc"]);
    }

    #[test]
    fn crossing_matches_unitary_group() {
        let slice = generate_closure(&[base::crossing_white()], 6, 10).unwrap();
        let names: Vec<String> = match_catalog(&slice).iter().map(|e| e.name()).collect();
        assert_eq!(names, ["Ogrp_loc"]);
    }

    #[test]
    fn hyperoctahedral_series() {
        let gens = [base::b(3), base::four_block_wwbb(), base::four_block_wbwb()];
        let slice = generate_closure(&gens, 6, 10).unwrap();
        let names: Vec<String> = match_catalog(&slice).iter().map(|e| e.name()).collect();
        assert_eq!(names, ["H_loc(3,0)", "H_loc(3,3)"]);
    }
}
