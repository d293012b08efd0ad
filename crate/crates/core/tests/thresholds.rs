use e6spin::d5modules::{realize, Family};
use e6spin::e6rep::RealizationTable;
use e6spin::functor::{rank_probe, thresholds, Iota};
use e6spin::Q;

fn excluded_set(f: Family) -> String {
    let rep = realize::<Q>(f).unwrap();
    thresholds(RealizationTable::get(), Iota::get(), &rep).unwrap().exclusions.to_string()
}

#[test]
fn excluded_sets_by_family() {
    let cases = [
        (Family::Trivial, "N-6"),
        (Family::Natural(1), "N-15"),
        (Family::Natural(2), "N-16"),
        (Family::Natural(3), "N-17"),
        (Family::Exterior(2), "N-14 u {-16}"),
        (Family::Exterior(3), "N-13 u {-21, -19, -17, -15}"),
        (Family::Spin4(1), "N-23/2 u {-27/2}"),
        (Family::Spin4(2), "N-11 u {-15, -13}"),
        (Family::Spin4(3), "N-25/2 u {-33/2, -29/2}"),
        (Family::Spin5(1), "N-21/2 u {-45/2, -41/2, -37/2, -33/2, -29/2, -25/2}"),
    ];
    for (f, want) in cases {
        assert_eq!(excluded_set(f), want, "{f}");
    }
}

/// Degree 2 uses the rank modulo a large prime. Full rank there implies full
/// rank over Q; the drop at c = -15 was also confirmed with exact rank.
#[test]
fn rank_probe_on_natural_module() {
    let iota = Iota::get();
    let rep = realize::<Q>(Family::Natural(1)).unwrap();
    let ranks = |c: Q| -> Vec<(usize, usize)> {
        rank_probe(iota, &rep, &c, 2, 1).unwrap().iter().map(|x| (x.rank, x.dim)).collect()
    };
    assert_eq!(ranks(Q::new(1, 3)), vec![(10, 10), (160, 160), (1360, 1360)]);
    assert_eq!(ranks(Q::from_integer(-15)), vec![(10, 10), (160, 160), (1359, 1360)]);
}
