mod common;

use std::collections::BTreeMap;

use cw_core::{CharacterTable, Cyclo};

use common::{all_groups_up_to_24, brute_force_subgroups, is_cyclic_set};

/// Order statistics, class count, center, derived subgroup and the
/// (order, cyclic) profile of all subgroups separate every group here.
#[test]
fn catalogue_has_every_group_of_order_at_most_24_once() {
    let mut by_invariants: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let groups = all_groups_up_to_24();
    for (name, g) in &groups {
        let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
        for x in g.elements() {
            *orders.entry(g.elem_order(x)).or_default() += 1;
        }
        let mut subgroups: Vec<(usize, bool)> =
            brute_force_subgroups(g).iter().map(|h| (h.len(), is_cyclic_set(h))).collect();
        subgroups.sort();
        let key = format!(
            "{} {orders:?} {} {} {} {subgroups:?}",
            g.order(),
            g.num_classes(),
            g.center().order(),
            g.derived_subgroup().order()
        );
        by_invariants.entry(key).or_default().push(name.clone());
    }
    let clashes: Vec<_> = by_invariants.values().filter(|v| v.len() > 1).collect();
    assert!(clashes.is_empty(), "{clashes:?}");
    // 1,1,1,2,1,2,1,5,2,2,1,5,1,2,1,14,1,5,1,5,2,2,1,15 groups of orders 1..24
    assert_eq!(groups.len(), 74);
}

#[test]
fn library_subgroup_count_matches_brute_force() {
    for (name, g) in all_groups_up_to_24() {
        let lib = g.all_subgroups(10_000).unwrap();
        assert_eq!(lib.len(), brute_force_subgroups(&g).len(), "{name}");
    }
}

#[test]
fn class_sizes_and_table_shape() {
    for (name, g) in all_groups_up_to_24() {
        let sizes: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
        assert_eq!(sizes, g.order(), "{name}");
        let table = CharacterTable::of(&g);
        assert_eq!(table.len(), g.num_classes(), "{name}");
        assert!(table.irreducibles()[0].values().iter().all(|v| v == &Cyclo::one()), "{name}");
        let degrees: u64 = table.degrees().iter().map(|d| d * d).sum();
        assert_eq!(degrees, g.order() as u64, "{name}");
        for d in table.degrees() {
            assert_eq!(g.order() as u64 % d, 0, "{name}: degree {d}");
        }
    }
}

#[test]
fn abelian_groups_have_linear_tables() {
    for (name, g) in all_groups_up_to_24() {
        let table = CharacterTable::of(&g);
        let linear = table.degrees().iter().all(|&d| d == 1);
        assert_eq!(linear, g.is_abelian(), "{name}");
    }
}
