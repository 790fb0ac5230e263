//! Shared fixtures for the integration tests.

use alt_tamari::lattice::FiniteLattice;

/// Element names of the 13-element semidistributive example, in id order.
pub const EXAMPLE_NAMES: [&str; 13] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m",
];

/// Id of a named element of [`example_lattice`].
pub fn id(name: &str) -> usize {
    EXAMPLE_NAMES
        .iter()
        .position(|&n| n == name)
        .unwrap_or_else(|| panic!("no element {name}"))
}

/// Three rows `a b c d`, `e f g h i`, `j k l m` with verticals
/// a-e-j, b-f-k, c-g-l, d-h and i-m.
pub fn example_lattice() -> FiniteLattice {
    let pairs = [
        ("a", "b"),
        ("b", "c"),
        ("c", "d"),
        ("e", "f"),
        ("f", "g"),
        ("g", "h"),
        ("h", "i"),
        ("j", "k"),
        ("k", "l"),
        ("l", "m"),
        ("a", "e"),
        ("e", "j"),
        ("b", "f"),
        ("f", "k"),
        ("c", "g"),
        ("g", "l"),
        ("d", "h"),
        ("i", "m"),
    ];
    let covers: Vec<(usize, usize)> = pairs.iter().map(|&(x, y)| (id(x), id(y))).collect();
    FiniteLattice::from_covers(13, &covers).expect("the example is a lattice")
}

/// The single rowmotion orbit, starting from `m`.
pub const EXAMPLE_ORBIT: [&str; 13] = [
    "m", "g", "b", "j", "i", "h", "c", "k", "e", "d", "l", "f", "a",
];
